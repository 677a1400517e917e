//! Connected sum with CP^2-bar-like pieces over a point: the index bundle
//! has rank -k and the invariants shift by k.
//!
//! Run with `cargo run --example blow_up`.

use ccalc::classes::{OrientedRealBundle, VirtualBundle};
use ccalc::ring::{ring_preset, BaseClass};
use ccalc::sw::{connect_sum_sw, MonopoleSideData, SWFunctional};

fn main() -> ccalc::Result<()> {
    let point = ring_preset("point", &[])?;
    let f2 = SWFunctional::new(
        &point,
        -4,
        vec![
            BaseClass::zero(&point),
            BaseClass::zero(&point),
            BaseClass::integer(&point, 7),
            BaseClass::zero(&point),
            BaseClass::zero(&point),
        ],
    )?;
    for k in 0..=2u32 {
        let side = MonopoleSideData::new(
            VirtualBundle::trivial(&point, -i64::from(k)),
            OrientedRealBundle::trivial(&point, 0),
        )?;
        let row: Vec<String> = (0..=4 - k)
            .map(|m| connect_sum_sw(&f2, &side, m).map(|v| v.to_string()))
            .collect::<ccalc::Result<_>>()?;
        println!("k = {k}: SW_m for m = 0.. = [{}]", row.join(", "));
    }
    Ok(())
}

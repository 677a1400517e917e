//! Families Seiberg-Witten invariants of a fiberwise connected sum,
//! computed three ways.
//!
//! Run with `cargo run --example connected_sum`.

use ccalc::classes::{OrientedRealBundle, VirtualBundle};
use ccalc::ring::{ring_preset, BaseClass};
use ccalc::sw::{
    connect_sum_sw, connect_sum_sw_expanded, monopole_degree, wedge_sw_localized,
    MonopoleSideData, SWFunctional,
};

fn main() -> ccalc::Result<()> {
    let s2 = ring_preset("sphere", &[2])?;
    // Index bundle of rank -2 with Segre class 1 + 3h.
    let d1 = VirtualBundle::new(2, BaseClass::from_named(&s2, &[("1", 1), ("h", 3)])?)?.negate();
    let side = MonopoleSideData::new(d1, OrientedRealBundle::trivial(&s2, 0))?;
    println!("deg = {}", monopole_degree(&side)?);

    let f2 = SWFunctional::new(
        &s2,
        -2,
        vec![
            BaseClass::zero(&s2),
            BaseClass::integer(&s2, 4),
            BaseClass::from_named(&s2, &[("h", -1)])?,
            BaseClass::zero(&s2),
            BaseClass::zero(&s2),
        ],
    )?;
    let v2p = VirtualBundle::trivial(&s2, 2);
    for m in 0..=2 {
        let direct = connect_sum_sw(&f2, &side, m)?;
        let expanded = connect_sum_sw_expanded(&f2, &side, m)?;
        let wedge = wedge_sw_localized(&f2, &side, &v2p, m)?;
        println!("SW_{m}: degree route {direct}, expanded {expanded}, localized {wedge}");
    }
    Ok(())
}

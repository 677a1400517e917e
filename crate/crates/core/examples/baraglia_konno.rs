//! The product formula for a trivial index bundle: pairing the connected
//! sum invariant with α gives SW(m) times the integral of α e(H+).
//!
//! Run with `cargo run --example baraglia_konno`.

use num_bigint::BigInt;

use ccalc::classes::{OrientedRealBundle, VirtualBundle};
use ccalc::ring::{BaseClass, Preset};
use ccalc::sw::{bk_special_case, connect_sum_sw, MonopoleSideData, SWFunctional};

fn main() -> ccalc::Result<()> {
    let ring = Preset::Product(vec![Preset::Sphere(2), Preset::Sphere(2)]).build()?;
    let h = OrientedRealBundle::new(2, BaseClass::from_named(&ring, &[("h_1", 2), ("h_2", -1)])?)?;
    let side = MonopoleSideData::new(VirtualBundle::trivial(&ring, 0), h.clone())?;
    let scalar = BigInt::from(3);
    let f2 = SWFunctional::new(&ring, 0, vec![BaseClass::integer(&ring, scalar.clone())])?;
    let sw = connect_sum_sw(&f2, &side, 0)?;
    println!("SW_0 = {sw}");
    for alpha in [&[("h_1", 1)][..], &[("h_2", 1)], &[("h_1", 1), ("h_2", 5)]] {
        let a = BaseClass::from_named(&ring, alpha)?;
        let paired = a.checked_mul(&sw)?.integrate()?;
        let formula = bk_special_case(&scalar, &h, &a)?;
        println!("alpha = {a}: paired {paired}, product formula {formula}");
    }
    Ok(())
}

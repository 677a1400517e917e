//! Fixed-point localization on P(V1 ⊕ V2) and its agreement with the
//! direct pushforward.
//!
//! Run with `cargo run --example localization`.

use ccalc::localization::{assemble, localize, pushforward_via_localization};
use ccalc::poly::EquivClass;
use ccalc::projective::{build_projective_model, Locus};
use ccalc::ring::{ring_preset, BaseClass};
use ccalc::VirtualBundle;

fn main() -> ccalc::Result<()> {
    let s2 = ring_preset("sphere", &[2])?;
    let v1 = VirtualBundle::new(1, BaseClass::from_named(&s2, &[("1", 1), ("h", 2)])?)?;
    let v2 = VirtualBundle::new(2, BaseClass::from_named(&s2, &[("1", 1), ("h", -1)])?)?;
    let model = build_projective_model(&v1, &v2)?;

    let c = EquivClass::from_quadruples(&s2, &[(4, 1, "1", 1), (2, 0, "h", 3)])?;
    let l = localize(&c, &model)?;
    for locus in Locus::BOTH {
        let nd = model.normal_data(locus)?;
        println!("locus {}: restriction {}", locus.index(), l.part(locus));
        println!("locus {}: e(N) = {}, e(N)^-1 = {}", locus.index(), nd.euler, nd.inverse);
    }
    println!("assembled:   {}", assemble(&l, &model)?);
    println!("reduced:     {}", model.reduce_poly(&c)?);

    let via = pushforward_via_localization(&c, &model)?;
    println!("localized pi_* = {} (residue zero: {})", via.value, via.is_polynomial());
    println!("direct pi_*    = {}", model.gysin_pushforward_poly(&c)?);
    Ok(())
}

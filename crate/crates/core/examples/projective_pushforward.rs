//! Gysin pushforward along P(V1 ⊕ V2) -> B.
//!
//! Run with `cargo run --example projective_pushforward`.

use ccalc::classes::VirtualBundle;
use ccalc::poly::EquivClass;
use ccalc::projective::build_projective_model;
use ccalc::ring::{ring_preset, BaseClass};

fn main() -> ccalc::Result<()> {
    // Over a point with trivial lines, P(C ⊕ C) = CP^1 and π_*(x^2) = -y.
    let point = ring_preset("point", &[])?;
    let line = VirtualBundle::trivial(&point, 1);
    let cp1 = build_projective_model(&line, &line)?;
    println!("CP^1 relation: {}", cp1.relation());
    for j in 0..=3 {
        let push = cp1.gysin_pushforward_poly(&EquivClass::monomial(&point, j, 0))?;
        println!("CP^1: pi_*(x^{j}) = {push}");
    }

    // Over S^2 the table reproduces the Segre classes of V1 ⊗ L_y ⊕ V2.
    let s2 = ring_preset("sphere", &[2])?;
    let v1 = VirtualBundle::new(1, BaseClass::from_named(&s2, &[("1", 1), ("h", 2)])?)?;
    let v2 = VirtualBundle::new(2, BaseClass::from_named(&s2, &[("1", 1), ("h", -1)])?)?;
    let model = build_projective_model(&v1, &v2)?;
    for j in 0..=4 {
        let push = model.gysin_pushforward_poly(&EquivClass::monomial(&s2, j, 0))?;
        println!("S^2: pi_*(x^{j}) = {push}");
    }
    Ok(())
}

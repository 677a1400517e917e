//! Arithmetic in the preset cohomology rings.
//!
//! Run with `cargo run --example ring_arithmetic`.

use ccalc::ring::{ring_preset, BaseClass, Preset};

fn main() -> ccalc::Result<()> {
    let cp2 = ring_preset("cp", &[2])?;
    let h = BaseClass::from_named(&cp2, &[("h", 1)])?;
    let one_plus_h = BaseClass::one(&cp2).checked_add(&h)?;
    let cube = one_plus_h.checked_mul(&one_plus_h)?.checked_mul(&one_plus_h)?;
    println!("CP^2: (1 + h)^3 = {cube}");
    println!("CP^2: integral of (1 + h)^3 = {}", cube.integrate()?);

    // Odd generators anticommute.
    let t2 = ring_preset("torus", &[2])?;
    let a = BaseClass::from_named(&t2, &[("u", 1)])?;
    let b = BaseClass::from_named(&t2, &[("v", 1)])?;
    println!("T^2: u v = {}, v u = {}", a.checked_mul(&b)?, b.checked_mul(&a)?);
    println!("T^2: u u = {}", a.checked_mul(&a)?);

    let s2s2 = Preset::Product(vec![Preset::Sphere(2), Preset::Sphere(2)]).build()?;
    println!("S^2 x S^2 basis: {:?}", s2s2.basis().iter().map(|e| e.name.as_str()).collect::<Vec<_>>());
    Ok(())
}

//! Segre classes and circle-twisted characteristic classes.
//!
//! Run with `cargo run --example characteristic_classes`.

use ccalc::classes::{equivariant_euler, total_segre, twist_chern, twist_segre, VirtualBundle};
use ccalc::poly::EquivClass;
use ccalc::ring::{ring_preset, BaseClass};

fn main() -> ccalc::Result<()> {
    let cp2 = ring_preset("cp", &[2])?;
    // Tangent bundle of CP^2: c = (1 + h)^3 = 1 + 3h + 3h^2.
    let c = BaseClass::from_named(&cp2, &[("1", 1), ("h", 3), ("h^2", 3)])?;
    let tangent = VirtualBundle::new(2, c)?;
    println!("c(T CP^2) = {}", tangent.total_chern());
    println!("s(T CP^2) = {}", total_segre(&tangent));
    println!("s(-T CP^2) = {}", total_segre(&tangent.negate()));

    let x = EquivClass::x(&cp2);
    for j in 0..=2 {
        println!("c_{j}(T ⊗ L_x) = {}", twist_chern(&tangent, j, &x)?);
    }
    for j in 0..=2 {
        println!("s_{j}(T ⊗ L_x) = {}", twist_segre(&tangent, j, &x)?);
    }
    println!("e(T ⊗ L_x) = {}", equivariant_euler(&tangent, &x)?);
    Ok(())
}

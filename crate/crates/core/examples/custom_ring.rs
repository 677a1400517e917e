//! A custom ring from a JSON config: the Grassmannian Gr(2, 4) with its
//! tautological bundles.
//!
//! Run with `cargo run --example custom_ring`.

use std::path::Path;

use ccalc::commands::{run_command, RunOptions};
use ccalc::config::load_config;
use ccalc::ring::BaseClass;

fn main() -> ccalc::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/configs/grassmannian.json");
    let cfg = load_config(&path)?;
    let basis: Vec<&str> = cfg.ring.basis().iter().map(|b| b.name.as_str()).collect();
    println!("basis: {basis:?}");
    let c1 = BaseClass::from_named(&cfg.ring, &[("c1", 1)])?;
    let c1_4 = c1.checked_mul(&c1)?.checked_mul(&c1)?.checked_mul(&c1)?;
    println!("integral of c1^4 = {}", c1_4.integrate()?);
    print!("{}", run_command(&cfg, "pushforward", &RunOptions::default())?.to_text());
    Ok(())
}

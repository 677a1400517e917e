//! Seeded generators for randomized checks.
//!
//! Every case draws from its own ChaCha stream keyed by `(seed, suite,
//! index)`, so a single failing case can be replayed without rerunning the
//! suite, and parallel execution does not change any draw.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classes::{OrientedRealBundle, VirtualBundle};
use crate::error::Result;
use crate::poly::EquivClass;
use crate::ring::{ring_preset, BaseClass, Preset, Ring};
use crate::sw::SWFunctional;

pub type CaseRng = ChaCha8Rng;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of case `index` in `suite`.
pub fn case_seed(seed: u64, suite: &str, index: usize) -> u64 {
    splitmix(splitmix(seed ^ fnv1a(suite.as_bytes())) ^ index as u64)
}

pub fn case_rng(seed: u64, suite: &str, index: usize) -> CaseRng {
    CaseRng::seed_from_u64(case_seed(seed, suite, index))
}

/// The preset rings used by the randomized suites, with display labels.
pub fn preset_rings() -> Vec<(String, Ring)> {
    let s2 = Preset::Sphere(2);
    let mut out: Vec<(String, Ring)> = [
        ("point", vec![]),
        ("sphere", vec![2]),
        ("cp", vec![2]),
        ("torus", vec![2]),
    ]
    .into_iter()
    .map(|(n, p)| {
        let label = if p.is_empty() {
            n.to_string()
        } else {
            format!("{n}({})", p[0])
        };
        (label, ring_preset(n, &p).expect("preset"))
    })
    .collect();
    out.push((
        "sphere(2)xsphere(2)".into(),
        Preset::Product(vec![s2.clone(), s2]).build().expect("preset"),
    ));
    out
}

pub fn coeff(rng: &mut CaseRng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// Random integer combination of the basis elements of degree `degree`.
pub fn homogeneous(rng: &mut CaseRng, ring: &Ring, degree: u32, bound: i64) -> BaseClass {
    let idx: Vec<usize> = ring.basis_in_degree(degree).collect();
    BaseClass::from_terms(ring, idx.into_iter().map(|i| (i, coeff(rng, bound).into())))
}

/// `1 + Σ_{k>=1} c_k` with random `c_k` of degree `2k`, for `k <= max_k`.
pub fn unit_class(rng: &mut CaseRng, ring: &Ring, max_k: u32, bound: i64) -> BaseClass {
    let mut c = BaseClass::one(ring);
    for k in 1..=max_k.min(ring.truncation() / 2) {
        c = &c + &homogeneous(rng, ring, 2 * k, bound);
    }
    c
}

/// Virtual bundle of the given rank with arbitrary Chern classes.
pub fn virtual_bundle(rng: &mut CaseRng, ring: &Ring, rank: i64, bound: i64) -> VirtualBundle {
    VirtualBundle::new(rank, unit_class(rng, ring, u32::MAX, bound)).expect("unit class")
}

/// Genuine bundle: `c_k = 0` for `k > rank`.
pub fn genuine_bundle(rng: &mut CaseRng, ring: &Ring, rank: u32, bound: i64) -> VirtualBundle {
    VirtualBundle::new(i64::from(rank), unit_class(rng, ring, rank, bound)).expect("unit class")
}

/// Bundle of rank `-n` whose Segre classes vanish above `n`, so that its
/// negative is genuine.
pub fn index_bundle(rng: &mut CaseRng, ring: &Ring, n: u32, bound: i64) -> VirtualBundle {
    let neg = genuine_bundle(rng, ring, n, bound);
    neg.negate()
}

/// Oriented real bundle of the given rank with random Euler class.
pub fn real_bundle(rng: &mut CaseRng, ring: &Ring, rank: u32, bound: i64) -> OrientedRealBundle {
    if rank == 0 {
        return OrientedRealBundle::trivial(ring, 0);
    }
    OrientedRealBundle::new(rank, homogeneous(rng, ring, rank, bound)).expect("homogeneous")
}

/// Random polynomial in `x, y` over the base, not necessarily homogeneous.
pub fn equiv_class(rng: &mut CaseRng, ring: &Ring, max_x: u32, max_y: u32, bound: i64) -> Result<EquivClass> {
    let mut c = EquivClass::zero(ring);
    let terms = rng.gen_range(1..=4);
    for _ in 0..terms {
        let i = rng.gen_range(0..=max_x);
        let j = rng.gen_range(0..=max_y);
        let d = 2 * rng.gen_range(0..=ring.truncation() / 2);
        let b = homogeneous(rng, ring, d, bound);
        c = c.add(&EquivClass::term(&b, i, j))?;
    }
    Ok(c)
}

/// SW table with `F(m)` of degree `2m + shift`.
pub fn sw_functional(rng: &mut CaseRng, ring: &Ring, shift: i64, window: u32, bound: i64) -> SWFunctional {
    let values = (0..=window)
        .map(|m| {
            let d = 2 * i64::from(m) + shift;
            if d < 0 || d > i64::from(ring.truncation()) {
                BaseClass::zero(ring)
            } else {
                homogeneous(rng, ring, d as u32, bound)
            }
        })
        .collect();
    SWFunctional::new(ring, shift, values).expect("homogeneous values")
}

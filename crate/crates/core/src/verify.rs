//! Randomized property suites behind `ccalc verify`.
//!
//! Each suite draws `cases` independent inputs, runs them in parallel and
//! merges results by case index. A failing suite reports its lowest
//! failing case together with the seed needed to replay it.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classes::{total_segre, twist_segre, VirtualBundle};
use crate::error::Error;
use crate::localization::pushforward_via_localization;
use crate::poly::{EquivClass, LaurentClass};
use crate::projective::{build_projective_model, Locus};
use crate::random::{self, case_rng, case_seed, CaseRng};
use crate::report::{base_json, bundle_json, equiv_json, real_bundle_json, ring_json, sw_json, Verdict};
use crate::ring::{BaseClass, Generator, Ring, RingPresentation};
use crate::sw::{bk_special_case, connect_sum_sw, connect_sum_sw_expanded, wedge_sw_localized, MonopoleSideData};

pub const DEFAULT_CASES: usize = 200;
const BOUND: i64 = 3;

type CaseResult = std::result::Result<(), Value>;

/// Rings a suite draws from.
#[derive(Clone, Debug)]
pub struct SuiteRings {
    pub rings: Vec<(String, Ring)>,
}

impl SuiteRings {
    /// The preset list, plus `extra` when it is not already one of them.
    pub fn with_extra(extra: Option<(String, Ring)>) -> Self {
        let mut rings = random::preset_rings();
        if let Some((label, ring)) = extra {
            if !rings.iter().any(|(_, r)| **r == *ring) {
                rings.push((label, ring));
            }
        }
        Self { rings }
    }

    fn pick(&self, rng: &mut CaseRng) -> &(String, Ring) {
        self.rings.choose(rng).expect("nonempty ring list")
    }
}

fn failure(inputs: Value, detail: impl Into<String>) -> Value {
    json!({"inputs": inputs, "detail": detail.into()})
}

fn err(inputs: &Value) -> impl Fn(Error) -> Value + '_ {
    move |e| failure(inputs.clone(), format!("error: {e}"))
}

fn run_suite<F>(name: &str, title: &str, cases: usize, seed: u64, case: F) -> Verdict
where
    F: Fn(&mut CaseRng) -> CaseResult + Sync,
{
    let outcomes: Vec<Option<(usize, Value)>> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, name, i);
            case(&mut rng).err().map(|p| (i, p))
        })
        .collect();
    let failed: Vec<(usize, Value)> = outcomes.into_iter().flatten().collect();
    let counterexample = failed.first().map(|(i, p)| {
        json!({
            "replay": {"suite": name, "seed": seed, "index": i, "case_seed": case_seed(seed, name, *i)},
            "payload": p,
        })
    });
    Verdict {
        name: name.into(),
        title: title.into(),
        passed: failed.is_empty(),
        cases,
        failures: failed.len(),
        counterexample,
    }
}

/// Replays a single case of a suite.
pub fn replay(suite: &str, rings: &SuiteRings, seed: u64, index: usize) -> Option<CaseResult> {
    let mut rng = case_rng(seed, suite, index);
    Some(match suite {
        "A1" => a1_case(rings, &mut rng),
        "A2" => a2_case(rings, &mut rng),
        "A3" => a3_case(rings, &mut rng),
        "A4" => a4_case(&mut rng),
        "A5" => a5_case(rings, &mut rng),
        "A6i" => a6_blowup_case(&mut rng),
        "A6ii" => a6_bk_case(rings, &mut rng),
        "A7" => a7_case(rings, &mut rng),
        _ => return None,
    })
}

/// Runs every suite with `cases` draws each (A1 draws `cases` per ring).
pub fn run_all(rings: &SuiteRings, cases: usize, seed: u64) -> Vec<Verdict> {
    vec![
        run_suite("A1", "Segre inversion c(V) s(V) = 1", cases * rings.rings.len(), seed, |r| a1_case(rings, r)),
        run_suite("A2", "normal Euler classes invert", cases, seed, |r| a2_case(rings, r)),
        run_suite("A3", "localized pushforward equals Gysin pushforward", cases, seed, |r| a3_case(rings, r)),
        run_suite("A4", "twisted Segre classes match Chern roots", cases, seed, a4_case),
        run_suite("A5", "connected sum equals localized wedge", cases, seed, |r| a5_case(rings, r)),
        run_suite("A6i", "blow-up shift SW_m = F2(m + k)", cases, seed, a6_blowup_case),
        run_suite("A6ii", "Baraglia-Konno pairing", cases, seed, |r| a6_bk_case(rings, r)),
        run_suite("A7", "non-equivariant pushforward table", cases, seed, |r| a7_case(rings, r)),
    ]
}

fn a1_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let (label, ring) = rings.pick(rng);
    let rank = rng.gen_range(-4..=4);
    let v = random::virtual_bundle(rng, ring, rank, BOUND);
    let s = total_segre(&v);
    let inputs = json!({"ring": ring_json(label, ring), "bundle": bundle_json(&v)});
    let prod = v.total_chern().checked_mul(&s).map_err(err(&inputs))?;
    if prod.is_one() {
        Ok(())
    } else {
        Err(failure(inputs, format!("c(V) s(V) = {prod}")))
    }
}

fn random_model_bundles(ring: &Ring, rng: &mut CaseRng) -> (VirtualBundle, VirtualBundle) {
    loop {
        let a1 = rng.gen_range(0..=3);
        let a2 = rng.gen_range(0..=3);
        if a1 + a2 >= 1 {
            return (
                random::genuine_bundle(rng, ring, a1, BOUND),
                random::genuine_bundle(rng, ring, a2, BOUND),
            );
        }
    }
}

fn model_inputs(label: &str, ring: &Ring, v1: &VirtualBundle, v2: &VirtualBundle) -> Value {
    json!({"ring": ring_json(label, ring), "v1": bundle_json(v1), "v2": bundle_json(v2)})
}

fn a2_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let (label, ring) = rings.pick(rng);
    let (v1, v2) = random_model_bundles(ring, rng);
    let inputs = model_inputs(label, ring, &v1, &v2);
    let model = build_projective_model(&v1, &v2).map_err(err(&inputs))?;
    for locus in Locus::BOTH {
        let fixed = model.fixed(locus);
        if fixed.is_empty() {
            continue;
        }
        let nd = model.normal_data(locus).map_err(err(&inputs))?;
        let prod = nd.euler.to_laurent().mul(&nd.inverse).map_err(err(&inputs))?;
        let red = fixed.reduce(&prod).map_err(err(&inputs))?;
        if red != LaurentClass::one(ring) {
            return Err(failure(
                inputs,
                format!("locus {}: e(N) e(N)^-1 = {red}", locus.index()),
            ));
        }
    }
    Ok(())
}

fn a3_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let (label, ring) = rings.pick(rng);
    let (v1, v2) = random_model_bundles(ring, rng);
    let a = (v1.rank() + v2.rank()) as u32;
    let c = random::equiv_class(rng, ring, a + 3, 2, BOUND).map_err(|e| json!(e.to_string()))?;
    let mut inputs = model_inputs(label, ring, &v1, &v2);
    inputs["class"] = equiv_json(&c);
    let model = build_projective_model(&v1, &v2).map_err(err(&inputs))?;
    let direct = model.gysin_pushforward(&c.to_laurent()).map_err(err(&inputs))?;
    let loc = pushforward_via_localization(&c, &model).map_err(err(&inputs))?;
    if !loc.is_polynomial() {
        return Err(failure(inputs, format!("negative y-powers survive: {}", loc.residue)));
    }
    if loc.value != direct {
        return Err(failure(
            inputs,
            format!("localized {} != direct {}", loc.value, direct),
        ));
    }
    Ok(())
}

/// Root model: `n` degree-2 generators truncated above `max_degree`, and a
/// bundle whose Chern roots are random integer combinations of them.
fn root_model(rng: &mut CaseRng) -> (Ring, Vec<Vec<i64>>) {
    let n = rng.gen_range(1..=3usize);
    let gens: Vec<Generator> = (1..=n).map(|i| Generator::new(format!("a{i}"), 2)).collect();
    let max_degree = 2 * rng.gen_range(1..=3);
    let ring = RingPresentation::truncated_polynomial(gens, max_degree).expect("root ring");
    let roots = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    (ring, roots)
}

fn root_class(ring: &Ring, coeffs: &[i64]) -> BaseClass {
    let named: Vec<(String, i64)> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| (format!("a{}", k + 1), *c))
        .collect();
    let refs: Vec<(&str, i64)> = named.iter().map(|(m, c)| (m.as_str(), *c)).collect();
    BaseClass::from_named(ring, &refs).expect("root generators")
}

/// Part of `p` of total degree `2j`, counting `x` and `y` in degree 2.
fn total_degree_part(p: &EquivClass, j: u32) -> EquivClass {
    let ring = p.ring();
    let mut out = EquivClass::zero(ring);
    for ((i, k), b) in p.iter() {
        for (idx, c) in b.terms() {
            if 2 * (i + k) + ring.degree_of(*idx) == 2 * j {
                let t = BaseClass::from_terms(ring, [(*idx, c.clone())]);
                out = out.add(&EquivClass::term(&t, i, k)).expect("same ring");
            }
        }
    }
    out
}

fn a4_case(rng: &mut CaseRng) -> CaseResult {
    let (ring, roots) = root_model(rng);
    let alphas: Vec<BaseClass> = roots.iter().map(|r| root_class(&ring, r)).collect();
    let mut chern = BaseClass::one(&ring);
    for a in &alphas {
        chern = &chern * &(&BaseClass::one(&ring) + a);
    }
    let d = VirtualBundle::new(alphas.len() as i64, chern).expect("unit");
    let inputs = json!({"ring": ring_json("roots", &ring), "roots": roots, "bundle": bundle_json(&d)});
    let x = EquivClass::x(&ring);
    let jmax = ring.truncation() / 2 + 2;
    let mut product = EquivClass::one(&ring);
    for a in &alphas {
        let u = EquivClass::constant(a).add(&x).map_err(err(&inputs))?;
        let mut inv = EquivClass::zero(&ring);
        let mut pow = EquivClass::one(&ring);
        for k in 0..=jmax {
            let term = if k % 2 == 0 { pow.clone() } else { pow.neg() };
            inv = inv.add(&term).map_err(err(&inputs))?;
            pow = pow.mul(&u).map_err(err(&inputs))?;
        }
        product = product.mul(&inv).map_err(err(&inputs))?;
    }
    for j in 0..=jmax {
        let oracle = total_degree_part(&product, j);
        let got = twist_segre(&d, i64::from(j), &x).map_err(err(&inputs))?;
        if got != oracle {
            return Err(failure(
                inputs,
                format!("s_{j}(D(1)) = {got}, roots give {oracle}"),
            ));
        }
    }
    Ok(())
}

fn a5_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let (label, ring) = rings.pick(rng);
    let n: u32 = rng.gen_range(0..=2);
    let d = random::index_bundle(rng, ring, n, BOUND);
    let b = rng.gen_range(0..=ring.truncation());
    let h = random::real_bundle(rng, ring, b, BOUND);
    let window = n + rng.gen_range(0..=4);
    let m = rng.gen_range(0..=window - n);
    // Aim the output at a random degree the base actually has.
    let target = i64::from(rng.gen_range(0..=ring.truncation()));
    let shift = target - 2 * i64::from(m) - i64::from(b) - 2 * i64::from(n);
    let f2 = random::sw_functional(rng, ring, shift, window, BOUND);
    let a2 = rng.gen_range(1..=3);
    let v2p = random::genuine_bundle(rng, ring, a2, BOUND);
    let inputs = json!({
        "ring": ring_json(label, ring), "d1": bundle_json(&d), "hplus": real_bundle_json(&h),
        "f2": sw_json(&f2), "v2_prime": bundle_json(&v2p), "m": m,
    });
    let side = MonopoleSideData::new(d, h).map_err(err(&inputs))?;
    let direct = connect_sum_sw(&f2, &side, m).map_err(err(&inputs))?;
    let expanded = connect_sum_sw_expanded(&f2, &side, m).map_err(err(&inputs))?;
    let wedge = wedge_sw_localized(&f2, &side, &v2p, m).map_err(err(&inputs))?;
    if direct != expanded || direct != wedge {
        return Err(failure(
            inputs,
            format!("degree route {direct}, expanded {expanded}, localized {wedge}"),
        ));
    }
    let want = 2 * i64::from(m) + shift + i64::from(b) + 2 * i64::from(n);
    if !direct.is_zero() && (want < 0 || !direct.is_homogeneous_of(want as u32)) {
        return Err(failure(inputs, format!("SW_m = {direct} is not of degree {want}")));
    }
    Ok(())
}

fn a6_blowup_case(rng: &mut CaseRng) -> CaseResult {
    let ring = crate::ring::ring_preset("point", &[]).expect("point");
    let k: u32 = rng.gen_range(0..=2);
    let window = k + rng.gen_range(0..=4);
    let peak = rng.gen_range(0..=window);
    let f2 = random::sw_functional(rng, &ring, -2 * i64::from(peak), window, 9);
    let side = MonopoleSideData::new(
        VirtualBundle::trivial(&ring, -i64::from(k)),
        crate::classes::OrientedRealBundle::trivial(&ring, 0),
    )
    .expect("same ring");
    let inputs = json!({"k": k, "f2": sw_json(&f2)});
    for m in 0..=window - k {
        let got = connect_sum_sw(&f2, &side, m).map_err(err(&inputs))?;
        let want = &f2.values()[(m + k) as usize];
        if &got != want {
            return Err(failure(inputs, format!("SW_{m} = {got}, F2({}) = {want}", m + k)));
        }
    }
    Ok(())
}

fn a6_bk_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let with_fundamental: Vec<&(String, Ring)> = rings
        .rings
        .iter()
        .filter(|(_, r)| r.fundamental().is_some())
        .collect();
    let (label, ring) = *with_fundamental.choose(rng).expect("a ring with [B]");
    let b = rng.gen_range(0..=ring.truncation());
    let h = random::real_bundle(rng, ring, b, BOUND);
    let alpha = random::homogeneous(rng, ring, ring.truncation() - b, BOUND);
    let m: u32 = rng.gen_range(0..=3);
    let scalar = BigInt::from(random::coeff(rng, 9));
    let mut f2 = random::sw_functional(rng, ring, -2 * i64::from(m), m + 1, BOUND);
    let mut values = f2.values().to_vec();
    values[m as usize] = BaseClass::integer(ring, scalar.clone());
    f2 = crate::sw::SWFunctional::new(ring, f2.shift(), values).expect("degree 0 value");
    let inputs = json!({
        "ring": ring_json(label, ring), "hplus": real_bundle_json(&h), "alpha": base_json(&alpha),
        "f2": sw_json(&f2), "m": m,
    });
    let side = MonopoleSideData::new(VirtualBundle::trivial(ring, 0), h.clone()).map_err(err(&inputs))?;
    let sw = connect_sum_sw(&f2, &side, m).map_err(err(&inputs))?;
    let paired = alpha.checked_mul(&sw).and_then(|p| p.integrate()).map_err(err(&inputs))?;
    let bk = bk_special_case(&scalar, &h, &alpha).map_err(err(&inputs))?;
    if paired == bk {
        Ok(())
    } else {
        Err(failure(inputs, format!("paired connected sum {paired}, formula {bk}")))
    }
}

fn a7_case(rings: &SuiteRings, rng: &mut CaseRng) -> CaseResult {
    let (label, ring) = rings.pick(rng);
    let a = rng.gen_range(1..=4);
    let v = random::genuine_bundle(rng, ring, a, BOUND);
    let zero = VirtualBundle::trivial(ring, 0);
    let inputs = json!({"ring": ring_json(label, ring), "v": bundle_json(&v)});
    let model = build_projective_model(&zero, &v).map_err(err(&inputs))?;
    for j in 0..=a + ring.truncation() / 2 + 1 {
        let got = model
            .gysin_pushforward(&LaurentClass::monomial(ring, j, 0))
            .map_err(err(&inputs))?;
        let want = if j + 1 < a {
            BaseClass::zero(ring)
        } else {
            v.segre_class(j + 1 - a)
        };
        if got != LaurentClass::term(&want, 0, 0) {
            return Err(failure(inputs, format!("pi_*(x^{j}) = {got}, want {want}")));
        }
    }
    Ok(())
}

/// Sums the per-suite case counts, for reporting.
pub fn total_cases(verdicts: &[Verdict]) -> usize {
    verdicts.iter().map(|v| v.cases).sum()
}

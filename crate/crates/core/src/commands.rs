//! Command dispatch: runs one CLI command against a loaded config.

use num_bigint::BigInt;
use serde_json::json;

use crate::classes::{OrientedRealBundle, VirtualBundle};
use crate::config::{Config, ModelTask};
use crate::error::{Error, Result};
use crate::localization::{assemble, localize, localized_pushforward};
use crate::poly::{EquivClass, LaurentClass};
use crate::projective::{build_projective_model, Locus, ProjectiveModel};
use crate::report::{base_json, equiv_json, int_json, laurent_json, Report, Verdict};
use crate::ring::BaseClass;
use crate::sw::{
    bk_special_case, connect_sum_sw, connect_sum_sw_expanded, monopole_degree, wedge_sw_localized,
    MonopoleSideData, SWFunctional,
};
use crate::verify::{run_all, SuiteRings, DEFAULT_CASES};

pub const COMMANDS: [&str; 6] = [
    "verify",
    "pushforward",
    "localize",
    "degree",
    "connect-sum",
    "bk-check",
];

const TWIST_NOTE: &str =
    "twisted Segre classes use x^(j-l): s_j(D(1)) = sum_l C(-d-l, j-l) s_l(D) x^(j-l)";
const SHIFT_NOTE: &str =
    "connected-sum expansion uses F2(m - d1 - l), obtained by distributing x^m over the degree";

/// Flags shared by all commands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub m: Option<u32>,
    pub cases: Option<usize>,
    pub seed: Option<u64>,
}

pub fn run_command(cfg: &Config, command: &str, opts: &RunOptions) -> Result<Report> {
    match command {
        "verify" => run_verify(cfg, opts),
        "pushforward" => run_pushforward(cfg, opts),
        "localize" => run_localize(cfg, opts),
        "degree" => run_degree(cfg),
        "connect-sum" => run_connect_sum(cfg, opts),
        "bk-check" => run_bk_check(cfg, opts),
        other => Err(Error::Config(format!(
            "unknown command `{other}`; expected one of {}",
            COMMANDS.join(", ")
        ))),
    }
}

fn missing(task: &str) -> Error {
    Error::Config(format!("config has no `tasks.{task}` section"))
}

fn run_verify(cfg: &Config, opts: &RunOptions) -> Result<Report> {
    let task = cfg.doc.tasks.verify.clone().unwrap_or_default();
    let cases = opts.cases.or(task.cases).unwrap_or(DEFAULT_CASES);
    let seed = opts.seed.or(task.seed).unwrap_or(0);
    let rings = SuiteRings::with_extra(Some(("config".into(), cfg.ring.clone())));
    let mut report = Report::new("verify");
    report.seed = Some(seed);
    report.cases = Some(cases);
    report.push(
        "rings",
        json!(rings.rings.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>()),
        rings.rings.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>().join(", "),
    );
    report.verdicts = run_all(&rings, cases, seed);
    report.notes.push(TWIST_NOTE.into());
    report.notes.push(SHIFT_NOTE.into());
    Ok(report)
}

fn model_of(cfg: &Config, task: &ModelTask) -> Result<ProjectiveModel> {
    build_projective_model(cfg.bundle(&task.v1)?, cfg.bundle(&task.v2)?)
}

fn class_of(cfg: &Config, task: &ModelTask, opts: &RunOptions) -> Result<Option<EquivClass>> {
    if let Some(m) = opts.m {
        return Ok(Some(EquivClass::monomial(&cfg.ring, m, 0)));
    }
    task.class.as_ref().map(|q| cfg.class(q)).transpose()
}

fn run_pushforward(cfg: &Config, opts: &RunOptions) -> Result<Report> {
    let task = cfg.doc.tasks.pushforward.as_ref().ok_or_else(|| missing("pushforward"))?;
    let model = model_of(cfg, task)?;
    let mut report = Report::new("pushforward");
    report.push("relation", laurent_json(model.relation()), model.relation().to_string());
    match class_of(cfg, task, opts)? {
        Some(c) => {
            let direct = model.gysin_pushforward(&c.to_laurent())?;
            let loc = localized_pushforward(&localize(&c, &model)?, &model)?;
            report.push("class", equiv_json(&c), c.to_string());
            report.push("pushforward", laurent_json(&direct), direct.to_string());
            report.verdicts.push(Verdict::single(
                "localization",
                "localized pushforward agrees",
                loc == direct,
                Some(json!({"class": equiv_json(&c), "localized": laurent_json(&loc)})),
            ));
        }
        None => {
            let top = model.rank() + cfg.ring.truncation() / 2;
            for j in 0..=top {
                let p = model.gysin_pushforward(&LaurentClass::monomial(&cfg.ring, j, 0))?;
                report.push(format!("pi_*(x^{j})"), laurent_json(&p), p.to_string());
            }
        }
    }
    Ok(report)
}

fn run_localize(cfg: &Config, opts: &RunOptions) -> Result<Report> {
    let task = cfg.doc.tasks.localize.as_ref().ok_or_else(|| missing("localize"))?;
    let model = model_of(cfg, task)?;
    let c = class_of(cfg, task, opts)?.unwrap_or_else(|| EquivClass::one(&cfg.ring));
    let mut report = Report::new("localize");
    report.push("class", equiv_json(&c), c.to_string());
    let l = localize(&c, &model)?;
    for locus in Locus::BOTH {
        let i = locus.index();
        let part = l.part(locus);
        report.push(format!("restriction_{i}"), laurent_json(part), part.to_string());
        if model.fixed(locus).is_empty() {
            continue;
        }
        let nd = model.normal_data(locus)?;
        report.push(format!("euler_normal_{i}"), equiv_json(&nd.euler), nd.euler.to_string());
        report.push(
            format!("inverse_euler_normal_{i}"),
            laurent_json(&nd.inverse),
            nd.inverse.to_string(),
        );
    }
    let loc = localized_pushforward(&l, &model)?;
    let direct = model.gysin_pushforward(&c.to_laurent())?;
    let residue = loc.negative_part();
    report.push("localized_pushforward", laurent_json(&loc), loc.to_string());
    report.push("residue", laurent_json(&residue), residue.to_string());
    report.push("gysin_pushforward", laurent_json(&direct), direct.to_string());
    let payload = Some(json!({"class": equiv_json(&c)}));
    report.verdicts.push(Verdict::single(
        "polynomial",
        "negative y-powers cancel",
        residue.is_zero(),
        payload.clone(),
    ));
    report.verdicts.push(Verdict::single(
        "oracle",
        "localized pushforward equals Gysin pushforward",
        loc == direct,
        payload.clone(),
    ));
    let back = assemble(&l, &model)?;
    report.verdicts.push(Verdict::single(
        "round-trip",
        "assemble(localize(c)) equals the reduced class",
        back == model.reduce(&c.to_laurent())?,
        payload,
    ));
    Ok(report)
}

fn run_degree(cfg: &Config) -> Result<Report> {
    let task = cfg.doc.tasks.degree.as_ref().ok_or_else(|| missing("degree"))?;
    let side = cfg.side(&task.d, task.hplus.as_deref())?;
    let deg = monopole_degree(&side)?;
    let mut report = Report::new("degree");
    report.push("d1", json!(side.index()), side.index().to_string());
    report.push("b_plus", json!(side.hplus.rank()), side.hplus.rank().to_string());
    report.push("degree", equiv_json(&deg), deg.to_string());
    let want = i64::from(side.hplus.rank()) - 2 * side.index();
    report.verdicts.push(Verdict::single(
        "homogeneity",
        "degree is homogeneous of degree b+ - 2 d1",
        deg.is_zero() || deg.is_homogeneous_of(want),
        Some(json!({"degree": equiv_json(&deg), "expected_degree": want})),
    ));
    Ok(report)
}

fn run_connect_sum(cfg: &Config, opts: &RunOptions) -> Result<Report> {
    let task = cfg.doc.tasks.connect_sum.as_ref().ok_or_else(|| missing("connect-sum"))?;
    let side = cfg.side(&task.d, task.hplus.as_deref())?;
    let f2 = cfg.functional(&task.sw)?;
    let v2p = task.v2_prime.as_ref().map(|n| cfg.bundle(n)).transpose()?;
    let deg = monopole_degree(&side)?;
    let n = (-side.index()) as u32;
    let ms: Vec<u32> = match (opts.m, &task.m) {
        (Some(m), _) => vec![m],
        (None, Some(list)) => list.clone(),
        (None, None) => (0..=f2.window()).filter(|m| m + n <= f2.window()).collect(),
    };
    let mut report = Report::new("connect-sum");
    report.push("degree", equiv_json(&deg), deg.to_string());
    for m in ms {
        let direct = connect_sum_sw(f2, &side, m)?;
        let expanded = connect_sum_sw_expanded(f2, &side, m)?;
        report.push(format!("SW_{m}"), base_json(&direct), direct.to_string());
        let mut agree = direct == expanded;
        let mut payload = json!({"m": m, "degree_route": base_json(&direct), "expanded": base_json(&expanded)});
        if let Some(v2p) = v2p {
            let wedge = wedge_sw_localized(f2, &side, v2p, m)?;
            agree &= direct == wedge;
            payload["localized"] = base_json(&wedge);
        }
        report.verdicts.push(Verdict::single(
            &format!("SW_{m}"),
            "all derivations agree",
            agree,
            Some(payload),
        ));
    }
    report.notes.push(SHIFT_NOTE.into());
    if v2p.is_some() {
        report.notes.push(TWIST_NOTE.into());
    }
    Ok(report)
}

/// A point-like table: zero except `F(m) = scalar` in degree 0.
fn point_like(cfg: &Config, m: u32, scalar: &BigInt) -> Result<SWFunctional> {
    let mut values = vec![BaseClass::zero(&cfg.ring); m as usize + 1];
    values[m as usize] = BaseClass::integer(&cfg.ring, scalar.clone());
    SWFunctional::new(&cfg.ring, -2 * i64::from(m), values)
}

fn run_bk_check(cfg: &Config, opts: &RunOptions) -> Result<Report> {
    let task = cfg.doc.tasks.bk_check.as_ref().ok_or_else(|| missing("bk-check"))?;
    let hplus: &OrientedRealBundle = cfg.real_bundle(&task.hplus)?;
    let alpha = cfg.terms(&task.alpha)?;
    let scalar = BigInt::from(task.sw_scalar);
    let m = opts.m.or(task.m).unwrap_or(0);
    let f2 = match &task.sw {
        Some(name) => cfg.functional(name)?.clone(),
        None => point_like(cfg, m, &scalar)?,
    };
    let bk = bk_special_case(&scalar, hplus, &alpha)?;
    let side = MonopoleSideData::new(VirtualBundle::trivial(&cfg.ring, 0), hplus.clone())?;
    let sw = connect_sum_sw(&f2, &side, m)?;
    let paired = alpha.checked_mul(&sw)?.integrate()?;
    let mut report = Report::new("bk-check");
    report.push("bk", int_json(&bk), bk.to_string());
    report.push(format!("SW_{m}"), base_json(&sw), sw.to_string());
    report.push("paired", int_json(&paired), paired.to_string());
    report.verdicts.push(Verdict::single(
        "bk",
        "paired connected sum equals the product formula",
        paired == bk,
        Some(json!({"m": m, "alpha": base_json(&alpha), "sw": base_json(&sw)})),
    ));
    Ok(report)
}

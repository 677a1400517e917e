//! JSON run configuration.
//!
//! One document fixes the base ring, named bundles, SW tables and the
//! per-command task parameters. Every declared object is validated at load
//! time, and every name a task mentions must resolve.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classes::{total_segre, OrientedRealBundle, VirtualBundle};
use crate::error::{Error, Result};
use crate::poly::EquivClass;
use crate::ring::{
    monomial_table, parse_monomial, unique_top, BaseClass, Generator, Preset, ProductClosure, Ring,
    RingPresentation,
};
use crate::sw::{MonopoleSideData, SWFunctional};

/// `[monomial, coefficient]` pairs.
pub type TermList = Vec<(String, i64)>;

/// `[x-exponent, y-exponent, monomial, coefficient]` tuples.
pub type QuadList = Vec<(u32, u32, String, i64)>;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    pub ring: RingSpec,
    #[serde(default)]
    pub bundles: BTreeMap<String, BundleSpec>,
    #[serde(default)]
    pub real_bundles: BTreeMap<String, RealBundleSpec>,
    #[serde(default)]
    pub sw: BTreeMap<String, SwSpec>,
    #[serde(default)]
    pub tasks: TasksSpec,
}

/// Exactly one of `preset`, `product` or `custom`.
#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<PresetSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub custom: Option<CustomRingSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PresetSpec {
    pub preset: String,
    #[serde(default)]
    pub params: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

/// Products not listed default to the signed monomial they name (or zero).
/// Each listed product also fixes the reversed product by graded commutativity.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomRingSpec {
    pub generators: Vec<GeneratorSpec>,
    pub basis: Vec<String>,
    #[serde(default)]
    pub products: Vec<ProductSpec>,
    #[serde(default)]
    pub truncation: Option<u32>,
    #[serde(default)]
    pub fundamental: Option<String>,
    #[serde(default)]
    pub closure: ClosureSpec,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ClosureSpec {
    Monomial,
    #[default]
    Free,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: String,
    pub right: String,
    pub result: TermList,
}

/// Give `chern` or `segre` (the inverse total class), not both.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub rank: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chern: Option<TermList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<TermList>,
}

/// Without `euler`, the bundle is trivial.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RealBundleSpec {
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<TermList>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SwSpec {
    pub shift: i64,
    pub values: Vec<TermList>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TasksSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pushforward: Option<ModelTask>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localize: Option<ModelTask>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<SideSpec>,
    #[serde(default, rename = "connect-sum", alias = "connect_sum", skip_serializing_if = "Option::is_none")]
    pub connect_sum: Option<ConnectSumTask>,
    #[serde(default, rename = "bk-check", alias = "bk_check", skip_serializing_if = "Option::is_none")]
    pub bk_check: Option<BkTask>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyTask>,
}

/// A projective model `P(V1 ⊕ V2)` and an optional class on it.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModelTask {
    pub v1: String,
    pub v2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<QuadList>,
}

/// One summand's index bundle and `H⁺` (trivial of rank 0 when omitted).
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SideSpec {
    pub d: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hplus: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConnectSumTask {
    pub d: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hplus: Option<String>,
    pub sw: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v2_prime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BkTask {
    pub hplus: String,
    pub alpha: TermList,
    pub sw_scalar: i64,
    /// SW table to pair against; a point-like table is synthesized if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sw: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VerifyTask {
    #[serde(default)]
    pub cases: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// A loaded, validated configuration.
#[derive(Clone, Debug)]
pub struct Config {
    pub doc: ConfigDoc,
    pub ring: Ring,
    pub bundles: BTreeMap<String, VirtualBundle>,
    pub real_bundles: BTreeMap<String, OrientedRealBundle>,
    pub sw: BTreeMap<String, SWFunctional>,
}

fn cfg(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

fn context(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Config(m) => cfg(format!("{what}: {m}")),
        other => cfg(format!("{what}: {other}")),
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<Config> {
    let doc: ConfigDoc = serde_json::from_str(text).map_err(|e| {
        cfg(format!(
            "line {}, column {}: {}",
            e.line(),
            e.column(),
            strip_location(&e.to_string())
        ))
    })?;
    Config::from_doc(doc)
}

fn strip_location(msg: &str) -> &str {
    msg.rfind(" at line ").map_or(msg, |i| &msg[..i])
}

pub fn load_config(path: &std::path::Path) -> Result<Config> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| cfg(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

impl Config {
    pub fn from_doc(doc: ConfigDoc) -> Result<Self> {
        let ring = build_ring(&doc.ring).map_err(context("ring"))?;
        let mut bundles = BTreeMap::new();
        for (name, spec) in &doc.bundles {
            let b = build_bundle(&ring, spec).map_err(context(&format!("bundle `{name}`")))?;
            bundles.insert(name.clone(), b);
        }
        let mut real_bundles = BTreeMap::new();
        for (name, spec) in &doc.real_bundles {
            let b = build_real_bundle(&ring, spec)
                .map_err(context(&format!("real bundle `{name}`")))?;
            real_bundles.insert(name.clone(), b);
        }
        let mut sw = BTreeMap::new();
        for (name, spec) in &doc.sw {
            let f = build_sw(&ring, spec).map_err(context(&format!("sw table `{name}`")))?;
            sw.insert(name.clone(), f);
        }
        let config = Self {
            doc,
            ring,
            bundles,
            real_bundles,
            sw,
        };
        config.check_tasks()?;
        Ok(config)
    }

    fn check_tasks(&self) -> Result<()> {
        let t = &self.doc.tasks;
        for (label, task) in [("pushforward", &t.pushforward), ("localize", &t.localize)] {
            if let Some(task) = task {
                let what = format!("task `{label}`");
                self.bundle(&task.v1).map_err(context(&what))?;
                self.bundle(&task.v2).map_err(context(&what))?;
                if let Some(q) = &task.class {
                    self.class(q).map_err(context(&what))?;
                }
            }
        }
        if let Some(d) = &t.degree {
            self.side(&d.d, d.hplus.as_deref()).map_err(context("task `degree`"))?;
        }
        if let Some(c) = &t.connect_sum {
            let what = "task `connect-sum`";
            self.side(&c.d, c.hplus.as_deref()).map_err(context(what))?;
            self.functional(&c.sw).map_err(context(what))?;
            if let Some(v) = &c.v2_prime {
                self.bundle(v).map_err(context(what))?;
            }
        }
        if let Some(b) = &t.bk_check {
            let what = "task `bk-check`";
            self.real_bundle(&b.hplus).map_err(context(what))?;
            self.terms(&b.alpha).map_err(context(what))?;
            if let Some(s) = &b.sw {
                self.functional(s).map_err(context(what))?;
            }
        }
        Ok(())
    }

    pub fn bundle(&self, name: &str) -> Result<&VirtualBundle> {
        self.bundles
            .get(name)
            .ok_or_else(|| cfg(format!("undeclared bundle `{name}`")))
    }

    pub fn real_bundle(&self, name: &str) -> Result<&OrientedRealBundle> {
        self.real_bundles
            .get(name)
            .ok_or_else(|| cfg(format!("undeclared real bundle `{name}`")))
    }

    pub fn functional(&self, name: &str) -> Result<&SWFunctional> {
        self.sw
            .get(name)
            .ok_or_else(|| cfg(format!("undeclared sw table `{name}`")))
    }

    pub fn side(&self, d: &str, hplus: Option<&str>) -> Result<MonopoleSideData> {
        let hplus = match hplus {
            Some(h) => self.real_bundle(h)?.clone(),
            None => OrientedRealBundle::trivial(&self.ring, 0),
        };
        MonopoleSideData::new(self.bundle(d)?.clone(), hplus)
    }

    pub fn terms(&self, t: &TermList) -> Result<BaseClass> {
        terms_to_class(&self.ring, t)
    }

    pub fn class(&self, q: &QuadList) -> Result<EquivClass> {
        let quads: Vec<(u32, u32, &str, i64)> =
            q.iter().map(|(i, j, m, c)| (*i, *j, m.as_str(), *c)).collect();
        EquivClass::from_quadruples(&self.ring, &quads)
    }
}

fn terms_to_class(ring: &Ring, t: &TermList) -> Result<BaseClass> {
    let named: Vec<(&str, i64)> = t.iter().map(|(m, c)| (m.as_str(), *c)).collect();
    BaseClass::from_named(ring, &named)
}

pub fn build_ring(spec: &RingSpec) -> Result<Ring> {
    let given = [
        spec.preset.is_some(),
        spec.product.is_some(),
        spec.custom.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if given != 1 {
        return Err(cfg("give exactly one of `preset`, `product`, `custom`"));
    }
    if let Some(name) = &spec.preset {
        return Preset::parse(name, &spec.params)?.build();
    }
    if !spec.params.is_empty() {
        return Err(cfg("`params` only applies to `preset`"));
    }
    if let Some(factors) = &spec.product {
        let parts = factors
            .iter()
            .map(|f| Preset::parse(&f.preset, &f.params))
            .collect::<Result<Vec<_>>>()?;
        return Preset::Product(parts).build();
    }
    build_custom(spec.custom.as_ref().expect("one variant present"))
}

fn build_custom(spec: &CustomRingSpec) -> Result<Ring> {
    let generators: Vec<Generator> = spec
        .generators
        .iter()
        .map(|g| Generator::new(g.name.clone(), g.degree))
        .collect();
    let basis = spec
        .basis
        .iter()
        .map(|m| parse_monomial(&generators, m))
        .collect::<Result<Vec<_>>>()?;
    let degree = |e: &Vec<u32>| -> u32 { generators.iter().zip(e).map(|(g, k)| g.degree * k).sum() };
    let truncation = spec
        .truncation
        .unwrap_or_else(|| basis.iter().map(degree).max().unwrap_or(0));
    let position = |m: &str| -> Result<usize> {
        let e = parse_monomial(&generators, m)?;
        basis
            .iter()
            .position(|b| *b == e)
            .ok_or_else(|| Error::UnknownMonomial(m.to_string()))
    };
    let mut table = monomial_table(&generators, &basis);
    for p in &spec.products {
        let i = position(&p.left)?;
        let j = position(&p.right)?;
        let mut terms = BTreeMap::new();
        for (m, c) in &p.result {
            *terms.entry(position(m)?).or_insert_with(|| BigInt::from(0)) += *c;
        }
        // The mirrored entry follows graded commutativity.
        let sign = if (degree(&basis[i]) * degree(&basis[j])) % 2 == 1 { -1 } else { 1 };
        table[j][i] = terms.iter().map(|(k, c)| (*k, c * sign)).collect();
        table[i][j] = terms;
    }
    let fundamental = match &spec.fundamental {
        Some(m) => Some(position(m)?),
        None => unique_top(&generators, &basis, truncation),
    };
    let closure = match spec.closure {
        ClosureSpec::Monomial => ProductClosure::Monomial,
        ClosureSpec::Free => ProductClosure::Free,
    };
    RingPresentation::new(generators, basis, table, truncation, fundamental, closure)
}

pub fn build_bundle(ring: &Ring, spec: &BundleSpec) -> Result<VirtualBundle> {
    match (&spec.chern, &spec.segre) {
        (Some(c), None) => VirtualBundle::new(spec.rank, terms_to_class(ring, c)?),
        (None, Some(s)) => {
            let inv = VirtualBundle::new(-spec.rank, terms_to_class(ring, s)?)?;
            VirtualBundle::new(spec.rank, total_segre(&inv))
        }
        (None, None) => Ok(VirtualBundle::trivial(ring, spec.rank)),
        (Some(_), Some(_)) => Err(cfg("give `chern` or `segre`, not both")),
    }
}

pub fn build_real_bundle(ring: &Ring, spec: &RealBundleSpec) -> Result<OrientedRealBundle> {
    match &spec.euler {
        Some(e) => OrientedRealBundle::new(spec.rank, terms_to_class(ring, e)?),
        None => Ok(OrientedRealBundle::trivial(ring, spec.rank)),
    }
}

pub fn build_sw(ring: &Ring, spec: &SwSpec) -> Result<SWFunctional> {
    let values = spec
        .values
        .iter()
        .map(|t| terms_to_class(ring, t))
        .collect::<Result<Vec<_>>>()?;
    SWFunctional::new(ring, spec.shift, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "ring": {"preset": "point"},
        "sw": {"F2": {"shift": 0, "values": [[["1", 5]]]}}
    }"#;

    #[test]
    fn minimal_config() {
        let c = parse_config(MINIMAL).unwrap();
        assert_eq!(c.ring.dim(), 1);
        assert_eq!(c.functional("F2").unwrap().window(), 0);
    }

    #[test]
    fn syntax_error_has_location() {
        let err = parse_config("{\n  \"ring\": {\"preset\": \"point\"},\n  oops\n}").unwrap_err();
        let Error::Config(msg) = err else { panic!() };
        assert!(msg.starts_with("line 3, column 3"), "{msg}");
    }

    #[test]
    fn missing_unit_names_bundle() {
        let text = r#"{
            "ring": {"preset": "cp", "params": [2]},
            "bundles": {"Vbad": {"rank": 1, "chern": [["h", 1]]}}
        }"#;
        let Error::Config(msg) = parse_config(text).unwrap_err() else { panic!() };
        assert!(msg.contains("bundle `Vbad`"), "{msg}");
    }

    #[test]
    fn unresolved_task_reference() {
        let text = r#"{
            "ring": {"preset": "point"},
            "bundles": {"V1": {"rank": 1}},
            "tasks": {"pushforward": {"v1": "V1", "v2": "W"}}
        }"#;
        let Error::Config(msg) = parse_config(text).unwrap_err() else { panic!() };
        assert!(msg.contains("`pushforward`") && msg.contains("`W`"), "{msg}");
    }

    #[test]
    fn unknown_field_rejected() {
        let text = r#"{"ring": {"preset": "point"}, "extra": 1}"#;
        assert!(parse_config(text).is_err());
    }

    #[test]
    fn segre_declaration() {
        let text = r#"{
            "ring": {"preset": "sphere", "params": [2]},
            "bundles": {"D": {"rank": -1, "segre": [["1", 1], ["h", 3]]}}
        }"#;
        let c = parse_config(text).unwrap();
        let d = c.bundle("D").unwrap();
        assert_eq!(d.segre_class(1), BaseClass::from_named(&c.ring, &[("h", 3)]).unwrap());
        assert_eq!(d.chern_class(1), BaseClass::from_named(&c.ring, &[("h", -3)]).unwrap());
    }

    #[test]
    fn grassmannian_custom_ring() {
        let gr = |extra: &str| {
            format!(
                r#"{{"ring": {{"custom": {{
                    "generators": [{{"name": "c1", "degree": 2}}, {{"name": "c2", "degree": 4}}],
                    "basis": ["1", "c1", "c1^2", "c2", "c1*c2", "c2^2"],
                    "products": [
                        {{"left": "c1", "right": "c1^2", "result": [["c1*c2", 2]]}},
                        {{"left": "c1", "right": "c1*c2", "result": [["c2^2", 1]]}},
                        {{"left": "c1^2", "right": "c2", "result": [["c2^2", 1]]}}
                        {extra}
                    ]
                }}}}}}"#
            )
        };
        let c = parse_config(&gr(r#", {"left": "c1^2", "right": "c1^2", "result": [["c2^2", 2]]}"#)).unwrap();
        let c1 = BaseClass::from_named(&c.ring, &[("c1", 1)]).unwrap();
        let c1_2 = c1.checked_mul(&c1).unwrap();
        assert_eq!(c1_2.checked_mul(&c1_2).unwrap().integrate().unwrap(), BigInt::from(2));
        // Leaving c1^2 * c1^2 at zero breaks associativity.
        assert!(matches!(parse_config(&gr("")), Err(Error::Config(_))));
    }

    #[test]
    fn product_ring() {
        let text = r#"{"ring": {"product": [
            {"preset": "sphere", "params": [2]}, {"preset": "sphere", "params": [2]}
        ]}}"#;
        let c = parse_config(text).unwrap();
        assert_eq!(c.ring.dim(), 4);
        assert!(c.ring.index_of("h_1*h_2").is_ok());
    }
}

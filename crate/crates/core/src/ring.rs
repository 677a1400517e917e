//! Finite graded-commutative rings standing in for `H*(B; Z)`.
//!
//! A ring is an explicit basis of monomials in graded generators together
//! with integer structure constants. Everything is exact. Torsion is not
//! representable: the additive group is always free on the basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shared handle to a validated presentation.
pub type Ring = Arc<RingPresentation>;

/// Integer combination of basis elements, keyed by basis index.
pub type Terms = BTreeMap<usize, BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self {
            name: name.into(),
            degree,
        }
    }
}

/// How products of basis monomials are constrained during validation.
///
/// `Monomial` rings are quotients of a free graded-commutative algebra by a
/// monomial ideal: a product of basis monomials is the Koszul-signed basis
/// monomial it names, or zero when that monomial is not in the basis. All
/// presets are of this kind. `Free` rings may carry arbitrary structure
/// constants for products landing outside the basis (e.g. Grassmannians);
/// only the product of monomials that *are* in the basis is pinned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductClosure {
    Monomial,
    #[default]
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub exponents: Vec<u32>,
    pub degree: u32,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    basis: Vec<BasisElement>,
    table: Vec<Vec<Vec<(usize, BigInt)>>>,
    truncation: u32,
    fundamental: Option<usize>,
    unit: usize,
    closure: ProductClosure,
    index: HashMap<Vec<u32>, usize>,
}

/// Structure-constant table before validation: `table[i][j]` is the product
/// of basis elements `i` and `j`.
pub type Table = Vec<Vec<Terms>>;

fn monomial_degree(generators: &[Generator], exponents: &[u32]) -> u32 {
    generators
        .iter()
        .zip(exponents)
        .map(|(g, &e)| g.degree * e)
        .sum()
}

fn monomial_name(generators: &[Generator], exponents: &[u32]) -> String {
    let parts: Vec<String> = generators
        .iter()
        .zip(exponents)
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| {
            if e == 1 {
                g.name.clone()
            } else {
                format!("{}^{}", g.name, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Sign picked up when the generators of `v` are moved past those of `u`
/// into canonical order.
pub fn koszul_sign(generators: &[Generator], u: &[u32], v: &[u32]) -> i32 {
    let mut parity = 0u64;
    for (i, gi) in generators.iter().enumerate() {
        for (j, gj) in generators.iter().enumerate().take(i) {
            parity += u64::from(u[i]) * u64::from(v[j]) * u64::from(gi.degree * gj.degree);
        }
    }
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Parse `"1"`, `"h"`, `"h^2*u"` into an exponent vector over `generators`.
pub fn parse_monomial(generators: &[Generator], text: &str) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; generators.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let p: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownMonomial(text.to_string()))?;
                (n.trim(), p)
            }
            None => (factor, 1),
        };
        let idx = generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownMonomial(text.to_string()))?;
        exps[idx] += power;
    }
    Ok(exps)
}

/// Products of basis monomials as Koszul-signed monomials, zero when the
/// product monomial is not in `basis`.
pub fn monomial_table(generators: &[Generator], basis: &[Vec<u32>]) -> Table {
    let lookup: HashMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let n = basis.len();
    let mut table: Table = vec![vec![Terms::new(); n]; n];
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let w: Vec<u32> = u.iter().zip(v).map(|(a, b)| a + b).collect();
            if let Some(&k) = lookup.get(w.as_slice()) {
                let s = koszul_sign(generators, u, v);
                table[i][j].insert(k, BigInt::from(s));
            }
        }
    }
    table
}

/// Index of the only basis element of degree `truncation`, if exactly one.
pub fn unique_top(generators: &[Generator], basis: &[Vec<u32>], truncation: u32) -> Option<usize> {
    let tops: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, e)| e.len() == generators.len() && monomial_degree(generators, e) == truncation)
        .map(|(i, _)| i)
        .collect();
    (tops.len() == 1).then(|| tops[0])
}

impl RingPresentation {
    /// Builds and validates a presentation. `basis` lists exponent vectors
    /// over `generators`; `table[i][j]` gives the product of basis elements.
    pub fn new(
        generators: Vec<Generator>,
        basis: Vec<Vec<u32>>,
        table: Table,
        truncation: u32,
        fundamental: Option<usize>,
        closure: ProductClosure,
    ) -> Result<Ring> {
        let n = basis.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidRing(format!(
                "multiplication table must be {n} x {n}"
            )));
        }
        let mut index = HashMap::new();
        let mut elements = Vec::with_capacity(n);
        for (i, exps) in basis.into_iter().enumerate() {
            if exps.len() != generators.len() {
                return Err(Error::InvalidRing(format!(
                    "basis element {i} has {} exponents for {} generators",
                    exps.len(),
                    generators.len()
                )));
            }
            if index.insert(exps.clone(), i).is_some() {
                return Err(Error::InvalidRing(format!(
                    "duplicate basis monomial {}",
                    monomial_name(&generators, &exps)
                )));
            }
            elements.push(BasisElement {
                degree: monomial_degree(&generators, &exps),
                name: monomial_name(&generators, &exps),
                exponents: exps,
            });
        }
        let unit = index
            .get(&vec![0u32; generators.len()])
            .copied()
            .ok_or_else(|| Error::InvalidRing("unit monomial 1 missing from basis".into()))?;
        let table = table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| t.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        let ring = RingPresentation {
            generators,
            basis: elements,
            table,
            truncation,
            fundamental,
            unit,
            closure,
            index,
        };
        ring.validate()?;
        Ok(Arc::new(ring))
    }

    /// Monomial ring on `basis`: every product is the signed basis monomial
    /// it names, or zero. The fundamental class is the unique basis element
    /// of degree `truncation`, when there is exactly one.
    pub fn monomial_ring(
        generators: Vec<Generator>,
        basis: Vec<Vec<u32>>,
        truncation: u32,
    ) -> Result<Ring> {
        let table = monomial_table(&generators, &basis);
        let fundamental = unique_top(&generators, &basis, truncation);
        Self::new(
            generators,
            basis,
            table,
            truncation,
            fundamental,
            ProductClosure::Monomial,
        )
    }

    /// All monomials of degree at most `max_degree` in the given generators
    /// (odd generators appear at most once), with no relations below the cut.
    pub fn truncated_polynomial(generators: Vec<Generator>, max_degree: u32) -> Result<Ring> {
        let mut basis = vec![vec![]];
        for g in &generators {
            let mut next = Vec::new();
            for m in &basis {
                let used = monomial_degree(&generators[..m.len()], m);
                let cap = if g.degree % 2 == 1 { 1 } else { u32::MAX };
                let mut e = 0u32;
                while e <= cap && used + e * g.degree <= max_degree {
                    let mut m2: Vec<u32> = m.clone();
                    m2.push(e);
                    next.push(m2);
                    if g.degree == 0 {
                        break;
                    }
                    e += 1;
                }
            }
            basis = next;
        }
        Self::monomial_ring(generators, basis, max_degree)
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidRing(msg));
        let n = self.basis.len();
        if self.generators.iter().any(|g| g.degree == 0) {
            return fail("generators must have positive degree".into());
        }
        for b in &self.basis {
            if b.degree > self.truncation {
                return fail(format!(
                    "basis element {} has degree {} above truncation {}",
                    b.name, b.degree, self.truncation
                ));
            }
            for (g, &e) in self.generators.iter().zip(&b.exponents) {
                if g.degree % 2 == 1 && e > 1 {
                    return fail(format!(
                        "basis element {} contains the square of odd generator {}",
                        b.name, g.name
                    ));
                }
            }
        }
        // unitality
        for i in 0..n {
            let expect = vec![(i, BigInt::one())];
            if self.table[self.unit][i] != expect || self.table[i][self.unit] != expect {
                return fail(format!(
                    "unit does not act as identity on {}",
                    self.basis[i].name
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let du = self.basis[i].degree;
                let dv = self.basis[j].degree;
                let entry = &self.table[i][j];
                for (k, _) in entry {
                    if *k >= n {
                        return fail(format!("product refers to basis index {k} out of range"));
                    }
                    if self.basis[*k].degree != du + dv {
                        return fail(format!(
                            "{} * {} is not homogeneous of degree {}",
                            self.basis[i].name,
                            self.basis[j].name,
                            du + dv
                        ));
                    }
                }
                if du + dv > self.truncation && !entry.is_empty() {
                    return fail(format!(
                        "{} * {} exceeds the truncation degree but is nonzero",
                        self.basis[i].name, self.basis[j].name
                    ));
                }
                let sign = if (du * dv).is_multiple_of(2) { 1 } else { -1 };
                let mirrored: Vec<(usize, BigInt)> = self.table[j][i]
                    .iter()
                    .map(|(k, c)| (*k, c * sign))
                    .collect();
                if *entry != mirrored {
                    return fail(format!(
                        "graded commutativity fails for {} and {}",
                        self.basis[i].name, self.basis[j].name
                    ));
                }
                let w: Vec<u32> = self.basis[i]
                    .exponents
                    .iter()
                    .zip(&self.basis[j].exponents)
                    .map(|(a, b)| a + b)
                    .collect();
                let named = self.index.get(&w).map(|&k| {
                    let s = koszul_sign(
                        &self.generators,
                        &self.basis[i].exponents,
                        &self.basis[j].exponents,
                    );
                    vec![(k, BigInt::from(s))]
                });
                match (named, self.closure) {
                    (Some(expect), _) if *entry != expect => {
                        return fail(format!(
                            "{} * {} must be the basis monomial {}",
                            self.basis[i].name,
                            self.basis[j].name,
                            monomial_name(&self.generators, &w)
                        ));
                    }
                    (None, ProductClosure::Monomial) if !entry.is_empty() => {
                        return fail(format!(
                            "{} * {} names a non-basis monomial and must vanish",
                            self.basis[i].name, self.basis[j].name
                        ));
                    }
                    _ => {}
                }
            }
        }
        for (gi, g) in self.generators.iter().enumerate() {
            if g.degree % 2 == 1 {
                let mut e = vec![0; self.generators.len()];
                e[gi] = 1;
                if let Some(&k) = self.index.get(&e) {
                    if !self.table[k][k].is_empty() {
                        return fail(format!("odd generator {} must square to zero", g.name));
                    }
                }
            }
        }
        // associativity
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let left = self.mul_terms(&self.table[u][v].iter().cloned().collect(), &single(w));
                    let right = self.mul_terms(&single(u), &self.table[v][w].iter().cloned().collect());
                    if left != right {
                        return fail(format!(
                            "associativity fails for ({} * {}) * {}",
                            self.basis[u].name, self.basis[v].name, self.basis[w].name
                        ));
                    }
                }
            }
        }
        if let Some(f) = self.fundamental {
            if f >= n || self.basis[f].degree != self.truncation {
                return fail("fundamental class must be a basis element of top degree".into());
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn fundamental(&self) -> Option<usize> {
        self.fundamental
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn closure(&self) -> ProductClosure {
        self.closure
    }

    pub fn degree_of(&self, index: usize) -> u32 {
        self.basis[index].degree
    }

    pub fn name_of(&self, index: usize) -> &str {
        &self.basis[index].name
    }

    /// Product of basis elements `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, BigInt)] {
        &self.table[i][j]
    }

    /// The raw table, for inspection and for building perturbed copies.
    pub fn table(&self) -> Table {
        self.table
            .iter()
            .map(|row| row.iter().map(|t| t.iter().cloned().collect()).collect())
            .collect()
    }

    pub fn basis_exponents(&self) -> Vec<Vec<u32>> {
        self.basis.iter().map(|b| b.exponents.clone()).collect()
    }

    pub fn index_of(&self, monomial: &str) -> Result<usize> {
        let exps = parse_monomial(&self.generators, monomial)?;
        self.index
            .get(&exps)
            .copied()
            .ok_or_else(|| Error::UnknownMonomial(monomial.to_string()))
    }

    /// Basis indices of the given degree.
    pub fn basis_in_degree(&self, degree: u32) -> impl Iterator<Item = usize> + '_ {
        self.basis
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.degree == degree)
            .map(|(i, _)| i)
    }

    pub(crate) fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in &self.table[*i][*j] {
                    *out.entry(*k).or_insert_with(BigInt::zero) += &xy * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn single(i: usize) -> Terms {
    let mut t = Terms::new();
    t.insert(i, BigInt::one());
    t
}

/// Declarative description of the built-in rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    Point,
    /// `S^d`, one generator of degree `d`.
    Sphere(u32),
    /// `CP^n`, truncated at `h^{n+1}`.
    Cp(u32),
    /// `T^k`, exterior algebra on `k` degree-one generators.
    Torus(u32),
    Product(Vec<Preset>),
}

const TORUS_NAMES: [&str; 8] = ["u", "v", "w", "p", "q", "r", "s", "t"];

impl Preset {
    /// Parses a flat preset name with integer parameters. Products must be
    /// assembled with [`Preset::Product`].
    pub fn parse(name: &str, params: &[i64]) -> Result<Preset> {
        let one_param = |lo: i64, hi: i64| -> Result<u32> {
            match params {
                [p] if (lo..=hi).contains(p) => Ok(*p as u32),
                [p] => Err(Error::PresetParameter {
                    preset: name.to_string(),
                    reason: format!("parameter {p} outside {lo}..={hi}"),
                }),
                _ => Err(Error::PresetParameter {
                    preset: name.to_string(),
                    reason: format!("expected one parameter, got {}", params.len()),
                }),
            }
        };
        match name {
            "point" | "pt" => {
                if params.is_empty() {
                    Ok(Preset::Point)
                } else {
                    Err(Error::PresetParameter {
                        preset: name.to_string(),
                        reason: "takes no parameters".into(),
                    })
                }
            }
            "sphere" => one_param(1, 64).map(Preset::Sphere),
            "cp" => one_param(1, 32).map(Preset::Cp),
            "torus" => one_param(1, TORUS_NAMES.len() as i64).map(Preset::Torus),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    pub fn build(&self) -> Result<Ring> {
        let (gens, basis, trunc) = self.monomial_data()?;
        RingPresentation::monomial_ring(gens, basis, trunc)
    }

    fn monomial_data(&self) -> Result<(Vec<Generator>, Vec<Vec<u32>>, u32)> {
        Ok(match self {
            Preset::Point => (vec![], vec![vec![]], 0),
            Preset::Sphere(d) => (vec![Generator::new("h", *d)], vec![vec![0], vec![1]], *d),
            Preset::Cp(n) => (
                vec![Generator::new("h", 2)],
                (0..=*n).map(|k| vec![k]).collect(),
                2 * n,
            ),
            Preset::Torus(k) => {
                let k = *k as usize;
                if k == 0 || k > TORUS_NAMES.len() {
                    return Err(Error::PresetParameter {
                        preset: "torus".into(),
                        reason: format!("rank {k} outside 1..={}", TORUS_NAMES.len()),
                    });
                }
                let gens = TORUS_NAMES[..k]
                    .iter()
                    .map(|n| Generator::new(*n, 1))
                    .collect();
                let basis = (0..1u32 << k)
                    .map(|mask| (0..k).map(|i| (mask >> i) & 1).collect())
                    .collect();
                (gens, basis, k as u32)
            }
            Preset::Product(factors) => {
                if factors.is_empty() {
                    return Err(Error::PresetParameter {
                        preset: "product".into(),
                        reason: "needs at least one factor".into(),
                    });
                }
                let parts = factors
                    .iter()
                    .map(Preset::monomial_data)
                    .collect::<Result<Vec<_>>>()?;
                let mut seen = std::collections::HashSet::new();
                let collide = parts
                    .iter()
                    .flat_map(|(g, _, _)| g.iter())
                    .any(|g| !seen.insert(g.name.clone()));
                let mut gens = Vec::new();
                for (k, (g, _, _)) in parts.iter().enumerate() {
                    for gen in g {
                        let name = if collide {
                            format!("{}_{}", gen.name, k + 1)
                        } else {
                            gen.name.clone()
                        };
                        gens.push(Generator::new(name, gen.degree));
                    }
                }
                let mut basis: Vec<Vec<u32>> = vec![vec![]];
                for (_, b, _) in &parts {
                    basis = basis
                        .iter()
                        .flat_map(|prefix| {
                            b.iter().map(move |e| {
                                let mut m = prefix.clone();
                                m.extend(e);
                                m
                            })
                        })
                        .collect();
                }
                let trunc = parts.iter().map(|(_, _, t)| t).sum();
                (gens, basis, trunc)
            }
        })
    }
}

/// Builds a preset ring by name (`point`, `sphere`, `cp`, `torus`).
pub fn ring_preset(name: &str, params: &[i64]) -> Result<Ring> {
    Preset::parse(name, params)?.build()
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element of `H*(B)`: integer coefficients on basis monomials.
#[derive(Clone, Debug)]
pub struct BaseClass {
    ring: Ring,
    terms: Terms,
}

impl PartialEq for BaseClass {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for BaseClass {}

impl BaseClass {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::basis(ring, ring.unit())
    }

    pub fn integer(ring: &Ring, n: impl Into<BigInt>) -> Self {
        Self::one(ring).scale(&n.into())
    }

    pub fn basis(ring: &Ring, index: usize) -> Self {
        Self::from_terms(ring, [(index, BigInt::one())])
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut out = Terms::new();
        for (k, c) in terms {
            assert!(k < ring.dim(), "basis index {k} out of range");
            *out.entry(k).or_insert_with(BigInt::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Self {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// `[("h", 2), ("1", -1)]` style construction.
    pub fn from_named(ring: &Ring, terms: &[(&str, i64)]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|(m, c)| Ok((ring.index_of(m)?, BigInt::from(*c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(ring, parsed))
    }

    pub(crate) fn from_raw(ring: &Ring, terms: Terms) -> Self {
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coeff(&self, index: usize) -> BigInt {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(self.ring.unit()).is_one()
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        Self::from_raw(
            &self.ring,
            self.terms
                .iter()
                .filter(|(k, _)| self.ring.degree_of(**k) == degree)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        )
    }

    /// Sorted list of degrees carrying nonzero coefficients.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|k| self.ring.degree_of(*k)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Some(d)` when the class is nonzero and homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// True for zero or for a class homogeneous of degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|k| self.ring.degree_of(*k) == d)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self::from_raw(
            &self.ring,
            self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        )
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        add_into(&mut terms, &other.terms, &BigInt::one());
        Ok(Self::from_raw(&self.ring, terms))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_raw(
            &self.ring,
            self.ring.mul_terms(&self.terms, &other.terms),
        ))
    }

    /// Coefficient of the fundamental monomial.
    pub fn integrate(&self) -> Result<BigInt> {
        let f = self.ring.fundamental().ok_or(Error::MissingFundamental)?;
        Ok(self.coeff(f))
    }
}

pub(crate) fn add_into(acc: &mut Terms, other: &Terms, scale: &BigInt) {
    for (k, c) in other {
        let e = acc.entry(*k).or_insert_with(BigInt::zero);
        *e += c * scale;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Cup product in `H*(B)`.
pub fn base_mul(a: &BaseClass, b: &BaseClass) -> Result<BaseClass> {
    a.checked_mul(b)
}

/// Pairing with the fundamental class.
pub fn integrate(a: &BaseClass) -> Result<BigInt> {
    a.integrate()
}

impl<'a> Add<&'a BaseClass> for &'a BaseClass {
    type Output = BaseClass;
    fn add(self, rhs: &BaseClass) -> BaseClass {
        self.checked_add(rhs).expect("BaseClass addition across rings")
    }
}

impl<'a> Sub<&'a BaseClass> for &'a BaseClass {
    type Output = BaseClass;
    fn sub(self, rhs: &BaseClass) -> BaseClass {
        self + &(-rhs)
    }
}

impl Neg for &BaseClass {
    type Output = BaseClass;
    fn neg(self) -> BaseClass {
        self.scale(&BigInt::from(-1))
    }
}

impl<'a> Mul<&'a BaseClass> for &'a BaseClass {
    type Output = BaseClass;
    fn mul(self, rhs: &BaseClass) -> BaseClass {
        self.checked_mul(rhs)
            .expect("BaseClass multiplication across rings")
    }
}

pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    ring: &RingPresentation,
    terms: &Terms,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (k, c)) in terms.iter().enumerate() {
        let name = ring.name_of(*k);
        let neg = c.is_negative();
        let abs = c.abs();
        if n == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        match (abs.is_one(), name == "1") {
            (_, true) => write!(f, "{abs}")?,
            (true, false) => write!(f, "{name}")?,
            (false, false) => write!(f, "{abs}*{name}")?,
        }
    }
    Ok(())
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.ring, &self.terms)
    }
}

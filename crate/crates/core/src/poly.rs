//! Polynomial and Laurent extensions of `H*(B)` by the equivariant
//! generators `x` and `y`, both of cohomological degree 2.
//!
//! [`EquivClass`] lives in `H*(B)[x, y]`; [`LaurentClass`] lives in
//! `H*(B)[x][y, y^-1]`. The same two types are reused on fixed-locus
//! models, where `x` stands for the fixed locus' own hyperplane class.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{add_into, fmt_terms, same_ring, BaseClass, Ring, Terms};

type Key = (u32, i64);

#[derive(Clone, Debug)]
struct Inner {
    ring: Ring,
    terms: BTreeMap<Key, Terms>,
}

impl PartialEq for Inner {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Inner {
    fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, key: Key, coeff: &Terms, scale: &BigInt) {
        if coeff.is_empty() || scale.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        add_into(slot, coeff, scale);
        if slot.is_empty() {
            self.terms.remove(&key);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn add(&self, other: &Self, scale: &BigInt) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c, scale);
        }
        Ok(out)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Inner::zero(&self.ring);
        let one = BigInt::one();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                let prod = self.ring.mul_terms(c1, c2);
                out.add_term((i1 + i2, j1 + j2), &prod, &one);
            }
        }
        Ok(out)
    }

    fn scale_base(&self, b: &BaseClass) -> Result<Self> {
        if !same_ring(&self.ring, b.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut out = Inner::zero(&self.ring);
        let one = BigInt::one();
        for (k, c) in &self.terms {
            let prod = self.ring.mul_terms(b.terms(), c);
            out.add_term(*k, &prod, &one);
        }
        Ok(out)
    }

    fn coefficient(&self, i: u32, j: i64) -> BaseClass {
        match self.terms.get(&(i, j)) {
            Some(t) => BaseClass::from_raw(&self.ring, t.clone()),
            None => BaseClass::zero(&self.ring),
        }
    }

    fn min_y(&self) -> Option<i64> {
        self.terms.keys().map(|(_, j)| *j).min()
    }

    fn max_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    fn total_degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .terms
            .iter()
            .flat_map(|((i, j), t)| {
                t.keys().map(move |k| {
                    2 * i64::from(*i) + 2 * j + i64::from(self.ring.degree_of(*k))
                })
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn substitute_x(&self, image: &Inner) -> Result<Inner> {
        self.check(image)?;
        let max = self.max_x().unwrap_or(0);
        let mut powers = vec![Inner::monomial(&self.ring, 0, 0)];
        for _ in 0..max {
            let next = powers.last().unwrap().mul(image)?;
            powers.push(next);
        }
        let mut out = Inner::zero(&self.ring);
        for ((i, j), c) in &self.terms {
            let coeff = BaseClass::from_raw(&self.ring, c.clone());
            let term = powers[*i as usize]
                .scale_base(&coeff)?
                .shift_y(*j);
            out = out.add(&term, &BigInt::one())?;
        }
        Ok(out)
    }

    /// Division by a relation monic of x-degree `degree`: rewrites every
    /// `x^n` with `n >= degree` using `x^degree = -tail`.
    fn reduce_monic(&self, tail: &Inner, degree: u32) -> Inner {
        let mut out = self.clone();
        let one = BigInt::one();
        while let Some(&key) = out.terms.keys().filter(|(i, _)| *i >= degree).max() {
            let (n, j) = key;
            let coeff = out.terms.remove(&key).unwrap();
            for ((ti, tj), t) in &tail.terms {
                let prod = self.ring.mul_terms(&coeff, t);
                let mut neg = Terms::new();
                add_into(&mut neg, &prod, &BigInt::from(-1));
                out.add_term((n - degree + ti, j + tj), &neg, &one);
            }
        }
        out
    }

    fn shift_y(&self, by: i64) -> Inner {
        Inner {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((*i, j + by), c.clone()))
                .collect(),
        }
    }

    fn monomial(ring: &Ring, i: u32, j: i64) -> Inner {
        let mut out = Inner::zero(ring);
        let mut t = Terms::new();
        t.insert(ring.unit(), BigInt::one());
        out.terms.insert((i, j), t);
        out
    }

    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let single = c.len() == 1;
            let (k, v) = c.iter().next().unwrap();
            let neg = single && v.is_negative();
            if n > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let vars = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = Vec::new();
                    if *i == 1 {
                        s.push("x".to_string());
                    } else if *i > 1 {
                        s.push(format!("x^{i}"));
                    }
                    if *j == 1 {
                        s.push("y".to_string());
                    } else if *j != 0 {
                        s.push(format!("y^{j}"));
                    }
                    s.join("*")
                }
            };
            if single {
                let abs = v.abs();
                let name = self.ring.name_of(*k);
                let mut coeff = String::new();
                if !abs.is_one() || (name == "1" && vars.is_empty()) {
                    coeff.push_str(&abs.to_string());
                }
                if name != "1" {
                    if !coeff.is_empty() {
                        coeff.push('*');
                    }
                    coeff.push_str(name);
                }
                match (coeff.is_empty(), vars.is_empty()) {
                    (true, _) => write!(f, "{vars}")?,
                    (false, true) => write!(f, "{coeff}")?,
                    (false, false) => write!(f, "{coeff}*{vars}")?,
                }
            } else {
                write!(f, "(")?;
                fmt_terms(f, &self.ring, c)?;
                write!(f, ")")?;
                if !vars.is_empty() {
                    write!(f, "*{vars}")?;
                }
            }
        }
        Ok(())
    }
}

/// One `(x-exponent, y-exponent, basis monomial, integer)` record of a
/// serialized class.
pub type Quadruple = (u32, i64, String, BigInt);

fn quadruples(inner: &Inner) -> Vec<Quadruple> {
    inner
        .terms
        .iter()
        .flat_map(|((i, j), t)| {
            t.iter()
                .map(move |(k, c)| (*i, *j, inner.ring.name_of(*k).to_string(), c.clone()))
        })
        .collect()
}

fn from_quadruples(ring: &Ring, quads: &[(u32, i64, &str, i64)]) -> Result<Inner> {
    let mut out = Inner::zero(ring);
    for (i, j, m, c) in quads {
        let mut t = Terms::new();
        t.insert(ring.index_of(m)?, BigInt::from(*c));
        out.add_term((*i, *j), &t, &BigInt::one());
    }
    Ok(out)
}

/// A class in `H*(B)[x, y]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivClass {
    inner: Inner,
}

/// A class in `H*(B)[x][y, y^-1]`, with a stored lower bound on the
/// y-exponents in its support.
#[derive(Clone, Debug)]
pub struct LaurentClass {
    inner: Inner,
    floor: i64,
}

impl PartialEq for LaurentClass {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl EquivClass {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            inner: Inner::zero(ring),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::monomial(ring, 0, 0)
    }

    pub fn x(ring: &Ring) -> Self {
        Self::monomial(ring, 1, 0)
    }

    pub fn y(ring: &Ring) -> Self {
        Self::monomial(ring, 0, 1)
    }

    /// `x^i y^j`.
    pub fn monomial(ring: &Ring, i: u32, j: u32) -> Self {
        Self {
            inner: Inner::monomial(ring, i, i64::from(j)),
        }
    }

    /// `b * x^i y^j`.
    pub fn term(b: &BaseClass, i: u32, j: u32) -> Self {
        let mut inner = Inner::zero(b.ring());
        inner.add_term((i, i64::from(j)), b.terms(), &BigInt::one());
        Self { inner }
    }

    pub fn constant(b: &BaseClass) -> Self {
        Self::term(b, 0, 0)
    }

    /// Builds from `(i, j, monomial, integer)` records.
    pub fn from_quadruples(ring: &Ring, quads: &[(u32, u32, &str, i64)]) -> Result<Self> {
        let q: Vec<_> = quads
            .iter()
            .map(|(i, j, m, c)| (*i, i64::from(*j), *m, *c))
            .collect();
        Ok(Self {
            inner: from_quadruples(ring, &q)?,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn is_zero(&self) -> bool {
        self.inner.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BaseClass {
        self.inner.coefficient(i, i64::from(j))
    }

    /// Nonzero `((i, j), coefficient)` pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), BaseClass)> + '_ {
        self.inner.terms.iter().map(|((i, j), t)| {
            (
                (*i, *j as u32),
                BaseClass::from_raw(&self.inner.ring, t.clone()),
            )
        })
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.inner.max_x()
    }

    pub fn max_y_degree(&self) -> Option<u32> {
        self.inner.terms.keys().map(|(_, j)| *j as u32).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.add(&other.inner, &BigInt::one())?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.add(&other.inner, &BigInt::from(-1))?,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.mul(&other.inner)?,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one(self.ring());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut inner = Inner::zero(&self.inner.ring);
        for (k, t) in &self.inner.terms {
            inner.add_term(*k, t, c);
        }
        Self { inner }
    }

    /// Left multiplication by a base class.
    pub fn scale_base(&self, b: &BaseClass) -> Result<Self> {
        Ok(Self {
            inner: self.inner.scale_base(b)?,
        })
    }

    /// Substitutes `x -> image`.
    pub fn substitute_x(&self, image: &EquivClass) -> Result<Self> {
        Ok(Self {
            inner: self.inner.substitute_x(&image.inner)?,
        })
    }

    /// Sorted total degrees `2i + 2j + deg(coefficient)` present in the class.
    pub fn total_degrees(&self) -> Vec<i64> {
        self.inner.total_degrees()
    }

    /// True for zero or for a class homogeneous of total degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.total_degrees().iter().all(|t| *t == d)
    }

    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.total_degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn to_laurent(&self) -> LaurentClass {
        LaurentClass::from_inner(self.inner.clone())
    }

    pub fn to_quadruples(&self) -> Vec<Quadruple> {
        quadruples(&self.inner)
    }
}

impl LaurentClass {
    fn from_inner(inner: Inner) -> Self {
        let floor = inner.min_y().unwrap_or(0).min(0);
        Self { inner, floor }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_inner(Inner::zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::monomial(ring, 0, 0)
    }

    /// `x^i y^j` with `j` of either sign.
    pub fn monomial(ring: &Ring, i: u32, j: i64) -> Self {
        Self::from_inner(Inner::monomial(ring, i, j))
    }

    /// `b * x^i y^j`.
    pub fn term(b: &BaseClass, i: u32, j: i64) -> Self {
        let mut inner = Inner::zero(b.ring());
        inner.add_term((i, j), b.terms(), &BigInt::one());
        Self::from_inner(inner)
    }

    pub fn from_quadruples(ring: &Ring, quads: &[(u32, i64, &str, i64)]) -> Result<Self> {
        Ok(Self::from_inner(from_quadruples(ring, quads)?))
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.inner.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: i64) -> BaseClass {
        self.inner.coefficient(i, j)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, i64), BaseClass)> + '_ {
        self.inner
            .terms
            .iter()
            .map(|(k, t)| (*k, BaseClass::from_raw(&self.inner.ring, t.clone())))
    }

    pub fn min_y_degree(&self) -> Option<i64> {
        self.inner.min_y()
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.inner.max_x()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_inner(self.inner.add(&other.inner, &BigInt::one())?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_inner(
            self.inner.add(&other.inner, &BigInt::from(-1))?,
        ))
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_inner(self.inner.mul(&other.inner)?))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut inner = Inner::zero(&self.inner.ring);
        for (k, t) in &self.inner.terms {
            inner.add_term(*k, t, c);
        }
        Self::from_inner(inner)
    }

    pub fn scale_base(&self, b: &BaseClass) -> Result<Self> {
        Ok(Self::from_inner(self.inner.scale_base(b)?))
    }

    /// Multiplies by `y^by`.
    pub fn shift_y(&self, by: i64) -> Self {
        Self::from_inner(self.inner.shift_y(by))
    }

    pub fn substitute_x(&self, image: &LaurentClass) -> Result<Self> {
        Ok(Self::from_inner(self.inner.substitute_x(&image.inner)?))
    }

    /// Canonical representative modulo a relation monic in `x`: all
    /// surviving x-exponents are below the relation's x-degree.
    pub fn reduce_monic(&self, relation: &LaurentClass) -> Result<LaurentClass> {
        self.inner.check(&relation.inner)?;
        let degree = relation.max_x_degree().unwrap_or(0);
        let lead = relation.x_slice(degree);
        if relation.is_zero() || lead != LaurentClass::one(self.ring()) {
            return Err(Error::Degree(format!("relation {relation} is not monic in x")));
        }
        let tail = relation.sub(&LaurentClass::monomial(self.ring(), degree, 0))?;
        Ok(Self::from_inner(self.inner.reduce_monic(&tail.inner, degree)))
    }

    /// The x-slice `Σ_j c_{i,j} y^j` for a fixed x-exponent `i`.
    pub fn x_slice(&self, i: u32) -> LaurentClass {
        let mut inner = Inner::zero(&self.inner.ring);
        for ((xi, j), t) in &self.inner.terms {
            if *xi == i {
                inner.add_term((0, *j), t, &BigInt::one());
            }
        }
        Self::from_inner(inner)
    }

    /// Part of the class carrying negative powers of `y`.
    pub fn negative_part(&self) -> LaurentClass {
        let mut inner = Inner::zero(&self.inner.ring);
        for ((i, j), t) in &self.inner.terms {
            if *j < 0 {
                inner.add_term((*i, *j), t, &BigInt::one());
            }
        }
        Self::from_inner(inner)
    }

    /// `Some` when no negative power of `y` survives.
    pub fn to_polynomial(&self) -> Option<EquivClass> {
        if self.inner.min_y().unwrap_or(0) < 0 {
            None
        } else {
            Some(EquivClass {
                inner: self.inner.clone(),
            })
        }
    }

    pub fn total_degrees(&self) -> Vec<i64> {
        self.inner.total_degrees()
    }

    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.total_degrees().iter().all(|t| *t == d)
    }

    pub fn to_quadruples(&self) -> Vec<Quadruple> {
        quadruples(&self.inner)
    }
}

/// Result of [`eval_y_zero`]: the `y^0` slice and whether any negative
/// power of `y` carried a nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct YZero {
    pub value: EquivClass,
    pub non_polynomial: bool,
}

/// Returns the `y^0` slice as a polynomial in `x`.
pub fn eval_y_zero(p: &LaurentClass) -> YZero {
    let mut inner = Inner::zero(p.ring());
    for ((i, j), t) in &p.inner.terms {
        if *j == 0 {
            inner.add_term((*i, 0), t, &BigInt::one());
        }
    }
    YZero {
        value: EquivClass { inner },
        non_polynomial: p.inner.min_y().unwrap_or(0) < 0,
    }
}

/// Shared multiplication entry point for both class kinds.
pub trait EquivariantProduct: Sized {
    fn epoly_mul(&self, other: &Self) -> Result<Self>;
}

impl EquivariantProduct for EquivClass {
    fn epoly_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
}

impl EquivariantProduct for LaurentClass {
    fn epoly_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
}

pub fn epoly_mul<P: EquivariantProduct>(p: &P, q: &P) -> Result<P> {
    p.epoly_mul(q)
}

/// Guard against unbounded descent in negative powers of `y`.
///
/// Every expression in this crate is a finite sum, so a y-exponent far
/// below the ranks and degrees involved means something upstream is wrong.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentGuard {
    limit: i64,
}

impl DescentGuard {
    pub const ENV: &'static str = "CCALC_MAX_LAURENT_FLOOR";
    pub const DEFAULT_WINDOW: i64 = 32;

    /// Limit `max_rank + truncation + window`, unless the environment
    /// variable [`Self::ENV`] supplies an explicit limit.
    pub fn new(max_rank: i64, truncation: u32, window: i64) -> Self {
        if let Some(limit) = Self::env_override() {
            return Self { limit };
        }
        Self {
            limit: max_rank.max(0) + i64::from(truncation) + window.max(0),
        }
    }

    pub fn with_limit(limit: i64) -> Self {
        Self { limit }
    }

    fn env_override() -> Option<i64> {
        Self::env_limit().ok().flatten()
    }

    /// The limit set through [`Self::ENV`], if any. Errors on values that
    /// are not non-negative integers.
    pub fn env_limit() -> Result<Option<i64>> {
        let Ok(raw) = std::env::var(Self::ENV) else {
            return Ok(None);
        };
        match raw.trim().parse::<i64>() {
            Ok(v) if v >= 0 => Ok(Some(v)),
            _ => Err(Error::Config(format!(
                "{} must be a non-negative integer, got `{raw}`",
                Self::ENV
            ))),
        }
    }

    pub fn limit(&self) -> i64 {
        self.limit
    }

    pub fn check(&self, p: &LaurentClass) -> Result<()> {
        match p.min_y_degree() {
            Some(j) if j < -self.limit => Err(Error::DescentGuard {
                exponent: j,
                limit: self.limit,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl fmt::Display for LaurentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

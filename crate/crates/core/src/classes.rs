//! Chern/Segre calculus for complex virtual bundles and Euler classes of
//! oriented real bundles.
//!
//! A virtual bundle is carried as its rank and total Chern class. Segre
//! classes are the inverse of the total Chern class, so negative ranks and
//! formal differences need no special casing.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{EquivClass, LaurentClass};
use crate::ring::{same_ring, BaseClass, Ring};

/// Complex virtual bundle: `(rank, c(V))`.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualBundle {
    rank: i64,
    chern: BaseClass,
}

impl VirtualBundle {
    /// Validates that `chern` has unit degree-0 part and lives in even degrees.
    pub fn new(rank: i64, chern: BaseClass) -> Result<Self> {
        if !chern.component(0).is_one() {
            return Err(Error::InvalidBundle(format!(
                "total Chern class {chern} must have degree-0 part 1"
            )));
        }
        if let Some(d) = chern.degrees().into_iter().find(|d| d % 2 == 1) {
            return Err(Error::InvalidBundle(format!(
                "total Chern class {chern} has a component in odd degree {d}"
            )));
        }
        Ok(Self { rank, chern })
    }

    /// Builds from the individual Chern classes `c_1, c_2, ...`; each must be
    /// homogeneous of degree `2k` (or zero).
    pub fn from_chern_classes(ring: &Ring, rank: i64, classes: &[BaseClass]) -> Result<Self> {
        let mut total = BaseClass::one(ring);
        for (k, c) in classes.iter().enumerate() {
            let deg = 2 * (k as u32 + 1);
            if !c.is_homogeneous_of(deg) {
                return Err(Error::InvalidBundle(format!(
                    "c_{} = {c} is not homogeneous of degree {deg}",
                    k + 1
                )));
            }
            total = total.checked_add(c)?;
        }
        Self::new(rank, total)
    }

    pub fn trivial(ring: &Ring, rank: i64) -> Self {
        Self {
            rank,
            chern: BaseClass::one(ring),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.chern.ring()
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_chern(&self) -> &BaseClass {
        &self.chern
    }

    /// `c_k(V)`; zero for `k` out of range.
    pub fn chern_class(&self, k: u32) -> BaseClass {
        self.chern.component(2 * k)
    }

    pub fn segre_class(&self, k: u32) -> BaseClass {
        total_segre(self).component(2 * k)
    }

    /// A genuine bundle has non-negative rank and no Chern classes above it.
    pub fn is_genuine(&self) -> bool {
        self.rank >= 0
            && self
                .chern
                .degrees()
                .iter()
                .all(|d| i64::from(*d) <= 2 * self.rank)
    }

    /// The formal negative `-V`: rank `-r`, total Chern class `s(V)`.
    pub fn negate(&self) -> Self {
        Self {
            rank: -self.rank,
            chern: total_segre(self),
        }
    }
}

/// Oriented real bundle: `(rank, e(U))`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedRealBundle {
    rank: u32,
    euler: BaseClass,
}

impl OrientedRealBundle {
    pub fn new(rank: u32, euler: BaseClass) -> Result<Self> {
        if rank == 0 && !euler.is_one() {
            return Err(Error::InvalidBundle(format!(
                "rank-0 real bundle must have Euler class 1, got {euler}"
            )));
        }
        if !euler.is_homogeneous_of(rank) {
            return Err(Error::InvalidBundle(format!(
                "Euler class {euler} is not homogeneous of degree {rank}"
            )));
        }
        Ok(Self { rank, euler })
    }

    /// Trivial bundle: Euler class 1 in rank 0, otherwise 0.
    pub fn trivial(ring: &Ring, rank: u32) -> Self {
        let euler = if rank == 0 {
            BaseClass::one(ring)
        } else {
            BaseClass::zero(ring)
        };
        Self { rank, euler }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn euler(&self) -> &BaseClass {
        &self.euler
    }
}

/// The unique inverse of `c(V)` in the truncated ring.
pub fn total_segre(v: &VirtualBundle) -> BaseClass {
    let ring = v.ring();
    let one = BaseClass::one(ring);
    // c = 1 + n with n nilpotent of positive degree; s = Σ (-n)^k.
    let minus_n = &one - &v.chern;
    let mut power = one.clone();
    let mut s = one;
    for _ in 0..ring.truncation() / 2 {
        power = &power * &minus_n;
        if power.is_zero() {
            break;
        }
        s = &s + &power;
    }
    s
}

/// Whitney sum: ranks add, total Chern classes multiply.
pub fn bundle_sum(v: &VirtualBundle, w: &VirtualBundle) -> Result<VirtualBundle> {
    Ok(VirtualBundle {
        rank: v.rank + w.rank,
        chern: v.chern.checked_mul(&w.chern)?,
    })
}

/// Formal difference `V - W`.
pub fn bundle_difference(v: &VirtualBundle, w: &VirtualBundle) -> Result<VirtualBundle> {
    if !same_ring(v.ring(), w.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(VirtualBundle {
        rank: v.rank - w.rank,
        chern: v.chern.checked_mul(&total_segre(w))?,
    })
}

/// `n (n-1) ... (n-k+1) / k!` for any integer `n`.
pub fn generalized_binomial(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..i64::from(k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn check_twist(t: &EquivClass) -> Result<()> {
    if !t.is_homogeneous_of(2) {
        return Err(Error::Degree(format!(
            "twisting class {t} must be homogeneous of total degree 2"
        )));
    }
    Ok(())
}

/// `s_j(D ⊗ L_t) = Σ_{l=0}^{j} C(-rank(D) - l, j - l) s_l(D) t^{j-l}`,
/// where `t` is the first Chern class of the line bundle `L_t`.
pub fn twist_segre(d: &VirtualBundle, j: i64, t: &EquivClass) -> Result<EquivClass> {
    if j < 0 {
        return Err(Error::NegativeIndex(j));
    }
    check_twist(t)?;
    let s = total_segre(d);
    twisted_sum(&s, -d.rank, j as u32, t)
}

/// `c_j(V ⊗ L_t) = Σ_{l=0}^{j} C(rank(V) - l, j - l) c_l(V) t^{j-l}`.
pub fn twist_chern(v: &VirtualBundle, j: i64, t: &EquivClass) -> Result<EquivClass> {
    if j < 0 {
        return Err(Error::NegativeIndex(j));
    }
    check_twist(t)?;
    twisted_sum(&v.chern, v.rank, j as u32, t)
}

fn twisted_sum(total: &BaseClass, rank: i64, j: u32, t: &EquivClass) -> Result<EquivClass> {
    let ring = total.ring();
    if !same_ring(ring, t.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut out = EquivClass::zero(ring);
    let mut t_pow = EquivClass::one(ring);
    // l runs downward so that t^{j-l} is built incrementally.
    for l in (0..=j).rev() {
        let coeff = total.component(2 * l);
        if !coeff.is_zero() {
            let binom = generalized_binomial(rank - i64::from(l), j - l);
            if !binom.is_zero() {
                let term = t_pow.scale_base(&coeff)?.scale(&binom);
                out = out.add(&term)?;
            }
        }
        if l > 0 {
            t_pow = t_pow.mul(t)?;
        }
    }
    Ok(out)
}

/// `Σ_{j=0}^{a} c_j(V) t^{a-j}` for a genuine rank `a`.
pub fn equivariant_euler(v: &VirtualBundle, t: &EquivClass) -> Result<EquivClass> {
    if v.rank < 0 {
        return Err(Error::InvalidBundle(format!(
            "equivariant Euler class needs rank >= 0, got {}",
            v.rank
        )));
    }
    check_twist(t)?;
    let ring = v.ring();
    let a = v.rank as u32;
    let mut out = EquivClass::zero(ring);
    let mut t_pow = EquivClass::one(ring);
    for j in (0..=a).rev() {
        let c = v.chern_class(j);
        if !c.is_zero() {
            out = out.add(&t_pow.scale_base(&c)?)?;
        }
        if j > 0 {
            t_pow = t_pow.mul(t)?;
        }
    }
    Ok(out)
}

/// Weight of the circle action on a normal direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Plus,
    Minus,
}

impl Weight {
    pub fn sign(self) -> i64 {
        match self {
            Weight::Plus => 1,
            Weight::Minus => -1,
        }
    }
}

fn weighted_y_power(ring: &Ring, weight: Weight, exp: i64) -> LaurentClass {
    let p = LaurentClass::monomial(ring, 0, exp);
    if weight == Weight::Minus && exp.rem_euclid(2) == 1 {
        p.neg()
    } else {
        p
    }
}

/// Euler class of `(V ⊗ L_shift)` with the circle acting by `weight`:
/// `Σ_k c_k(V ⊗ L_shift) (±y)^{rank-k}`. Needs a genuine rank.
pub fn weighted_euler(v: &VirtualBundle, weight: Weight, shift: &EquivClass) -> Result<LaurentClass> {
    if v.rank < 0 {
        return Err(Error::InvalidBundle(format!(
            "weighted Euler class needs rank >= 0, got {}",
            v.rank
        )));
    }
    let ring = v.ring();
    let mut out = LaurentClass::zero(ring);
    for k in 0..=v.rank {
        let c = twist_chern(v, k, shift)?.to_laurent();
        if !c.is_zero() {
            out = out.add(&c.mul(&weighted_y_power(ring, weight, v.rank - k))?)?;
        }
    }
    Ok(out)
}

/// `Σ_{k>=0} s_k(V ⊗ L_shift) (±y)^{-rank-k}`, keeping the terms whose
/// Segre part has degree `2k <= max_degree`.
///
/// When the shift and base classes are nilpotent in degrees above
/// `max_degree`, this is the exact inverse of [`weighted_euler`].
pub fn inverse_equivariant_euler(
    v: &VirtualBundle,
    weight: Weight,
    shift: &EquivClass,
    max_degree: u32,
) -> Result<LaurentClass> {
    let ring = v.ring();
    let mut out = LaurentClass::zero(ring);
    for k in 0..=i64::from(max_degree / 2) {
        let s = twist_segre(v, k, shift)?.to_laurent();
        if !s.is_zero() {
            out = out.add(&s.mul(&weighted_y_power(ring, weight, -v.rank - k))?)?;
        }
    }
    Ok(out)
}

/// Untwisted inverse over the base: `Σ_k s_k(V) (±y)^{-rank-k}`.
pub fn inverse_euler_over_base(v: &VirtualBundle, weight: Weight) -> Result<LaurentClass> {
    let ring = v.ring();
    inverse_equivariant_euler(v, weight, &EquivClass::zero(ring), ring.truncation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_preset;

    fn cls(r: &Ring, t: &[(&str, i64)]) -> BaseClass {
        BaseClass::from_named(r, t).unwrap()
    }

    #[test]
    fn segre_over_sphere() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let v = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        assert_eq!(total_segre(&v), cls(&r, &[("1", 1), ("h", -1)]));
    }

    #[test]
    fn segre_over_cp2() {
        let r = ring_preset("cp", &[2]).unwrap();
        let v = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        assert_eq!(total_segre(&v), cls(&r, &[("1", 1), ("h", -1), ("h^2", 1)]));
        assert!(total_segre(&VirtualBundle::trivial(&r, 3)).is_one());
    }

    #[test]
    fn whitney_sum_and_difference() {
        let r = ring_preset("cp", &[2]).unwrap();
        let a = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let b = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", -1)])).unwrap();
        let s = bundle_sum(&a, &b).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.total_chern(), &cls(&r, &[("1", 1), ("h^2", -1)]));
        assert_eq!(bundle_sum(&a, &VirtualBundle::trivial(&r, 0)).unwrap(), a);
        let z = bundle_difference(&a, &a).unwrap();
        assert_eq!(z.rank(), 0);
        assert!(z.total_chern().is_one());
    }

    #[test]
    fn invalid_bundles() {
        let r = ring_preset("cp", &[2]).unwrap();
        assert!(VirtualBundle::new(1, cls(&r, &[("h", 1)])).is_err());
        let t = ring_preset("torus", &[2]).unwrap();
        assert!(VirtualBundle::new(1, cls(&t, &[("1", 1), ("u", 1)])).is_err());
        assert!(OrientedRealBundle::new(2, cls(&r, &[("h", 1), ("1", 1)])).is_err());
        assert!(OrientedRealBundle::new(0, cls(&r, &[("1", 2)])).is_err());
        assert!(OrientedRealBundle::new(2, cls(&r, &[("h", 2)])).is_ok());
    }

    #[test]
    fn binomials() {
        assert_eq!(generalized_binomial(-2, 3), BigInt::from(-4));
        assert_eq!(generalized_binomial(-7, 0), BigInt::from(1));
        assert_eq!(generalized_binomial(3, 2), BigInt::from(3));
        assert_eq!(generalized_binomial(2, 3), BigInt::from(0));
        assert_eq!(generalized_binomial(-1, 5), BigInt::from(-1));
    }

    #[test]
    fn twist_of_trivial_rank_zero() {
        let r = ring_preset("cp", &[2]).unwrap();
        let d = VirtualBundle::trivial(&r, 0);
        let x = EquivClass::x(&r);
        assert_eq!(twist_segre(&d, 0, &x).unwrap(), EquivClass::one(&r));
        for j in 1..5 {
            assert!(twist_segre(&d, j, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn twist_rank_minus_one_over_point() {
        let r = ring_preset("point", &[]).unwrap();
        let d = VirtualBundle::trivial(&r, -1);
        let x = EquivClass::x(&r);
        assert_eq!(twist_segre(&d, 1, &x).unwrap(), x);
    }

    #[test]
    fn twist_rank_one_over_cp2() {
        // (1 + h + x)^{-1} in degree 2 is -(h + x).
        let r = ring_preset("cp", &[2]).unwrap();
        let d = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let x = EquivClass::x(&r);
        let expect = EquivClass::from_quadruples(&r, &[(1, 0, "1", -1), (0, 0, "h", -1)]).unwrap();
        assert_eq!(twist_segre(&d, 1, &x).unwrap(), expect);
    }

    #[test]
    fn twist_errors() {
        let r = ring_preset("cp", &[2]).unwrap();
        let d = VirtualBundle::trivial(&r, 1);
        let x = EquivClass::x(&r);
        assert_eq!(twist_segre(&d, -1, &x), Err(Error::NegativeIndex(-1)));
        let x2 = EquivClass::monomial(&r, 2, 0);
        assert!(matches!(twist_segre(&d, 1, &x2), Err(Error::Degree(_))));
    }

    #[test]
    fn twist_with_zero_is_segre() {
        let r = ring_preset("cp", &[3]).unwrap();
        let d = VirtualBundle::new(-2, cls(&r, &[("1", 1), ("h", 2), ("h^2", -1), ("h^3", 5)]))
            .unwrap();
        let zero = EquivClass::zero(&r);
        for j in 0..4 {
            let got = twist_segre(&d, j, &zero).unwrap();
            assert_eq!(got, EquivClass::constant(&d.segre_class(j as u32)));
        }
    }

    #[test]
    fn euler_classes() {
        let r = ring_preset("cp", &[2]).unwrap();
        let x = EquivClass::x(&r);
        let v = VirtualBundle::new(2, cls(&r, &[("1", 1), ("h", 3), ("h^2", 2)])).unwrap();
        let expect = EquivClass::from_quadruples(
            &r,
            &[(2, 0, "1", 1), (1, 0, "h", 3), (0, 0, "h^2", 2)],
        )
        .unwrap();
        assert_eq!(equivariant_euler(&v, &x).unwrap(), expect);
        assert_eq!(
            equivariant_euler(&VirtualBundle::trivial(&r, 0), &x).unwrap(),
            EquivClass::one(&r)
        );
        let l = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let xy = x.add(&EquivClass::y(&r)).unwrap();
        let expect = EquivClass::from_quadruples(&r, &[(1, 0, "1", 1), (0, 1, "1", 1), (0, 0, "h", 1)])
            .unwrap();
        assert_eq!(equivariant_euler(&l, &xy).unwrap(), expect);
        assert!(equivariant_euler(&VirtualBundle::trivial(&r, -1), &x).is_err());
    }

    #[test]
    fn inverse_euler_examples() {
        let p = ring_preset("point", &[]).unwrap();
        let inv = inverse_euler_over_base(&VirtualBundle::trivial(&p, 1), Weight::Plus).unwrap();
        assert_eq!(inv, LaurentClass::monomial(&p, 0, -1));

        let r = ring_preset("sphere", &[2]).unwrap();
        let v = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let inv = inverse_euler_over_base(&v, Weight::Plus).unwrap();
        let expect = LaurentClass::from_quadruples(&r, &[(0, -1, "1", 1), (0, -2, "h", -1)]).unwrap();
        assert_eq!(inv, expect);
        let e = weighted_euler(&v, Weight::Plus, &EquivClass::zero(&r)).unwrap();
        assert_eq!(e.mul(&inv).unwrap(), LaurentClass::one(&r));
    }

    #[test]
    fn inverse_euler_minus_weight() {
        let r = ring_preset("cp", &[2]).unwrap();
        let v = VirtualBundle::new(2, cls(&r, &[("1", 1), ("h", 1), ("h^2", 4)])).unwrap();
        let zero = EquivClass::zero(&r);
        let e = weighted_euler(&v, Weight::Minus, &zero).unwrap();
        let inv = inverse_equivariant_euler(&v, Weight::Minus, &zero, 4).unwrap();
        assert_eq!(e.mul(&inv).unwrap(), LaurentClass::one(&r));
    }

    #[test]
    fn negate_round_trip() {
        let r = ring_preset("cp", &[3]).unwrap();
        let v = VirtualBundle::new(2, cls(&r, &[("1", 1), ("h", 1), ("h^2", -3)])).unwrap();
        assert!(v.is_genuine());
        let n = v.negate();
        assert_eq!(n.rank(), -2);
        assert!(!n.is_genuine());
        assert_eq!(n.negate(), v);
    }
}

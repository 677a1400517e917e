//! Families Seiberg-Witten invariants of connected sums.
//!
//! A [`SWFunctional`] records the values `SW(x^m)` of a families invariant
//! for `0 <= m <= M`; by `H*(B)`-linearity that is all the connected-sum
//! formula needs. The degree of the first summand's monopole map is
//! computed from its index bundle and `H⁺`, and the formula is evaluated
//! both directly and through fixed-point localization on `P(V2')`.

use num_bigint::BigInt;

use crate::classes::{inverse_equivariant_euler, total_segre, OrientedRealBundle, VirtualBundle, Weight};
use crate::error::{Error, Result};
use crate::poly::{eval_y_zero, EquivClass, LaurentClass};
use crate::ring::{same_ring, BaseClass, Ring};

/// Values `F(m) = SW(x^m)` for `0 <= m <= window`, with `F(m)` homogeneous
/// of degree `2m + shift` whenever it is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct SWFunctional {
    ring: Ring,
    shift: i64,
    values: Vec<BaseClass>,
}

impl SWFunctional {
    pub fn new(ring: &Ring, shift: i64, values: Vec<BaseClass>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidFunctional("needs at least one value".into()));
        }
        for (m, v) in values.iter().enumerate() {
            if !same_ring(v.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if v.is_zero() {
                continue;
            }
            let want = 2 * m as i64 + shift;
            if want < 0 || !v.is_homogeneous_of(want as u32) {
                return Err(Error::InvalidFunctional(format!(
                    "value F({m}) = {v} is not homogeneous of degree 2*{m} + {shift} = {want}"
                )));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            shift,
            values,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Degree of `F(0)`.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Largest `m` with a known value.
    pub fn window(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn values(&self) -> &[BaseClass] {
        &self.values
    }

    pub fn value(&self, m: u32) -> Result<&BaseClass> {
        self.values.get(m as usize).ok_or(Error::WindowViolation {
            exponent: m,
            window: self.window(),
        })
    }
}

/// `Σ_m coefficient(p, x^m) · F(m)`. `p` must not involve `y`.
pub fn sw_evaluate(f: &SWFunctional, p: &EquivClass) -> Result<BaseClass> {
    if !same_ring(f.ring(), p.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut out = BaseClass::zero(f.ring());
    for ((i, j), b) in p.iter() {
        if j != 0 {
            return Err(Error::InvalidFunctional(format!(
                "argument {p} involves y; use the extended evaluation"
            )));
        }
        out = out.checked_add(&b.checked_mul(f.value(i)?)?)?;
    }
    Ok(out)
}

/// `F` extended `H*(B)[y^±]`-linearly, with `F(x^k)` independent of `y`.
/// The result has x-degree zero.
pub fn sw_evaluate_extended(f: &SWFunctional, p: &LaurentClass) -> Result<LaurentClass> {
    if !same_ring(f.ring(), p.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut out = LaurentClass::zero(f.ring());
    for ((i, j), b) in p.iter() {
        let v = b.checked_mul(f.value(i)?)?;
        out = out.add(&LaurentClass::term(&v, 0, j))?;
    }
    Ok(out)
}

/// Index bundle `D` (rank `d`) and `H⁺` of one summand's monopole map.
#[derive(Clone, Debug, PartialEq)]
pub struct MonopoleSideData {
    pub d: VirtualBundle,
    pub hplus: OrientedRealBundle,
}

impl MonopoleSideData {
    pub fn new(d: VirtualBundle, hplus: OrientedRealBundle) -> Result<Self> {
        if !same_ring(d.ring(), hplus.euler().ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(Self { d, hplus })
    }

    pub fn ring(&self) -> &Ring {
        self.d.ring()
    }

    pub fn index(&self) -> i64 {
        self.d.rank()
    }

    fn checked_minus_index(&self) -> Result<u32> {
        match self.index() {
            d if d > 0 => Err(Error::PositiveIndex(d)),
            d => Ok((-d) as u32),
        }
    }
}

/// `e(H⁺) Σ_{l=0}^{-d} s_l(D) x^{-d-l}`.
pub fn monopole_degree(side: &MonopoleSideData) -> Result<EquivClass> {
    let n = side.checked_minus_index()?;
    let s = total_segre(&side.d);
    let mut out = EquivClass::zero(side.ring());
    for l in 0..=n {
        let sl = s.component(2 * l);
        if !sl.is_zero() {
            out = out.add(&EquivClass::term(&sl, n - l, 0))?;
        }
    }
    out.scale_base(side.hplus.euler())
}

fn check_rings(f2: &SWFunctional, side: &MonopoleSideData) -> Result<()> {
    if same_ring(f2.ring(), side.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `SW_m = F2(x^m · deg(f1))`.
pub fn connect_sum_sw(f2: &SWFunctional, side1: &MonopoleSideData, m: u32) -> Result<BaseClass> {
    check_rings(f2, side1)?;
    let deg = monopole_degree(side1)?;
    sw_evaluate(f2, &EquivClass::monomial(f2.ring(), m, 0).mul(&deg)?)
}

/// The expanded form `e(H⁺) Σ_{l=0}^{-d} s_l(D) F2(m - d - l)`.
pub fn connect_sum_sw_expanded(
    f2: &SWFunctional,
    side1: &MonopoleSideData,
    m: u32,
) -> Result<BaseClass> {
    check_rings(f2, side1)?;
    let n = side1.checked_minus_index()?;
    let s = total_segre(&side1.d);
    let mut sum = BaseClass::zero(f2.ring());
    for l in 0..=n {
        let sl = s.component(2 * l);
        if !sl.is_zero() {
            sum = sum.checked_add(&sl.checked_mul(f2.value(m + n - l)?)?)?;
        }
    }
    side1.hplus.euler().checked_mul(&sum)
}

/// The y-refined invariant `Σ_j F2(x^m e(H⁺) s_j(D ⊗ O(1))) y^{-d-j}`,
/// with `j` running up to the larger of `-d` and half the top degree of
/// `P(V2')`. The result has x-degree zero.
pub fn wedge_sw_hat(
    f2: &SWFunctional,
    side1: &MonopoleSideData,
    v2_prime: &VirtualBundle,
    m: u32,
) -> Result<LaurentClass> {
    check_rings(f2, side1)?;
    if !same_ring(v2_prime.ring(), f2.ring()) {
        return Err(Error::RingMismatch);
    }
    if !v2_prime.is_genuine() || v2_prime.rank() < 1 {
        return Err(Error::InvalidBundle(format!(
            "V2' must be genuine of rank >= 1 (rank {}, c = {})",
            v2_prime.rank(),
            v2_prime.total_chern()
        )));
    }
    let n = side1.checked_minus_index()?;
    let ring = f2.ring();
    let top = ring.truncation() + 2 * (v2_prime.rank() as u32 - 1);
    let max_degree = top.max(2 * n);
    let x = EquivClass::x(ring);
    let inverse = inverse_equivariant_euler(&side1.d, Weight::Plus, &x, max_degree)?;
    let integrand = inverse
        .scale_base(side1.hplus.euler())?
        .mul(&LaurentClass::monomial(ring, m, 0))?;
    sw_evaluate_extended(f2, &integrand)
}

/// `SW_m` as the `y^0` term of [`wedge_sw_hat`]. Fails if negative powers
/// of `y` survive.
pub fn wedge_sw_localized(
    f2: &SWFunctional,
    side1: &MonopoleSideData,
    v2_prime: &VirtualBundle,
    m: u32,
) -> Result<BaseClass> {
    let hat = wedge_sw_hat(f2, side1, v2_prime, m)?;
    let y0 = eval_y_zero(&hat);
    if y0.non_polynomial {
        return Err(Error::NonPolynomialResidue(hat.negative_part().to_string()));
    }
    Ok(y0.value.coefficient(0, 0))
}

/// `sw_scalar · ⟨α ∪ e(H⁺), [B]⟩`.
pub fn bk_special_case(
    sw_scalar: &BigInt,
    hplus: &OrientedRealBundle,
    alpha: &BaseClass,
) -> Result<BigInt> {
    let ring = alpha.ring();
    if !same_ring(ring, hplus.euler().ring()) {
        return Err(Error::RingMismatch);
    }
    ring.fundamental().ok_or(Error::MissingFundamental)?;
    let want = i64::from(ring.truncation()) - i64::from(hplus.rank());
    if want < 0 || !alpha.is_homogeneous_of(want as u32) {
        return Err(Error::Degree(format!(
            "alpha = {alpha} must have degree {} - {} = {want}",
            ring.truncation(),
            hplus.rank()
        )));
    }
    Ok(sw_scalar * alpha.checked_mul(hplus.euler())?.integrate()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::ring::ring_preset;

    fn cls(r: &Ring, t: &[(&str, i64)]) -> BaseClass {
        BaseClass::from_named(r, t).unwrap()
    }

    fn ints(r: &Ring, shift: i64, v: &[i64]) -> SWFunctional {
        SWFunctional::new(r, shift, v.iter().map(|&n| BaseClass::integer(r, n)).collect()).unwrap()
    }

    #[test]
    fn functional_homogeneity() {
        let r = ring_preset("sphere", &[2]).unwrap();
        assert!(SWFunctional::new(&r, 0, vec![BaseClass::one(&r), cls(&r, &[("h", 3)])]).is_ok());
        let bad = SWFunctional::new(&r, 0, vec![BaseClass::one(&r), BaseClass::one(&r)]);
        assert!(matches!(bad, Err(Error::InvalidFunctional(_))));
        assert!(SWFunctional::new(&r, 0, vec![]).is_err());
        let f = SWFunctional::new(&r, -2, vec![BaseClass::zero(&r), BaseClass::one(&r)]).unwrap();
        assert_eq!(f.window(), 1);
        assert_eq!(f.shift(), -2);
    }

    #[test]
    fn evaluate_examples() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let f = SWFunctional::new(&r, 0, vec![BaseClass::one(&r), BaseClass::zero(&r)]).unwrap();
        let p = EquivClass::from_quadruples(&r, &[(1, 0, "h", 1), (0, 0, "1", 1)]).unwrap();
        assert!(sw_evaluate(&f, &p).unwrap().is_one());
        assert!(sw_evaluate(&f, &EquivClass::zero(&r)).unwrap().is_zero());
        let g = SWFunctional::new(&r, -2, vec![BaseClass::zero(&r), BaseClass::integer(&r, 5)]).unwrap();
        let h = cls(&r, &[("h", 1)]);
        let hx = EquivClass::term(&h, 1, 0);
        assert_eq!(sw_evaluate(&g, &hx).unwrap(), h.scale(&BigInt::from(5)));
        assert!(matches!(
            sw_evaluate(&g, &EquivClass::monomial(&r, 2, 0)),
            Err(Error::WindowViolation { exponent: 2, window: 1 })
        ));
        assert!(sw_evaluate(&g, &EquivClass::y(&r)).is_err());
    }

    #[test]
    fn degree_examples() {
        let pt = ring_preset("point", &[]).unwrap();
        let triv = |d| MonopoleSideData::new(VirtualBundle::trivial(&pt, d), OrientedRealBundle::trivial(&pt, 0)).unwrap();
        assert_eq!(monopole_degree(&triv(0)).unwrap(), EquivClass::one(&pt));
        assert_eq!(monopole_degree(&triv(-1)).unwrap(), EquivClass::x(&pt));
        assert!(matches!(monopole_degree(&triv(1)), Err(Error::PositiveIndex(1))));

        let r = ring_preset("sphere", &[2]).unwrap();
        let sigma = 3;
        let d = VirtualBundle::new(-1, cls(&r, &[("1", 1), ("h", -sigma)])).unwrap();
        let side = MonopoleSideData::new(d, OrientedRealBundle::trivial(&r, 0)).unwrap();
        let expect = EquivClass::from_quadruples(&r, &[(1, 0, "1", 1), (0, 0, "h", sigma)]).unwrap();
        let deg = monopole_degree(&side).unwrap();
        assert_eq!(deg, expect);
        assert!(deg.is_homogeneous_of(2));
    }

    #[test]
    fn blow_up_shift() {
        let pt = ring_preset("point", &[]).unwrap();
        let f2 = ints(&pt, -4, &[0, 0, 7, 0]);
        let zero = MonopoleSideData::new(VirtualBundle::trivial(&pt, 0), OrientedRealBundle::trivial(&pt, 0)).unwrap();
        let one = MonopoleSideData::new(VirtualBundle::trivial(&pt, -1), OrientedRealBundle::trivial(&pt, 0)).unwrap();
        for m in 0..3 {
            assert_eq!(connect_sum_sw(&f2, &zero, m).unwrap(), f2.values()[m as usize]);
            assert_eq!(connect_sum_sw(&f2, &one, m).unwrap(), f2.values()[m as usize + 1]);
        }
        assert!(matches!(
            connect_sum_sw(&f2, &one, 3),
            Err(Error::WindowViolation { .. })
        ));
    }

    #[test]
    fn three_routes_agree() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let d = VirtualBundle::new(-2, cls(&r, &[("1", 1), ("h", 4)])).unwrap();
        let side = MonopoleSideData::new(d, OrientedRealBundle::trivial(&r, 0)).unwrap();
        let f2 = SWFunctional::new(
            &r,
            -2,
            vec![
                BaseClass::zero(&r),
                BaseClass::integer(&r, 3),
                cls(&r, &[("h", -2)]),
                BaseClass::zero(&r),
                BaseClass::zero(&r),
            ],
        )
        .unwrap();
        let v2p = VirtualBundle::trivial(&r, 2);
        for m in 0..=2 {
            let direct = connect_sum_sw(&f2, &side, m).unwrap();
            assert_eq!(direct, connect_sum_sw_expanded(&f2, &side, m).unwrap());
            assert_eq!(direct, wedge_sw_localized(&f2, &side, &v2p, m).unwrap());
        }
    }

    #[test]
    fn wedge_trivial_collapse() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let e = cls(&r, &[("h", 2)]);
        let side = MonopoleSideData::new(
            VirtualBundle::trivial(&r, 0),
            OrientedRealBundle::new(2, e.clone()).unwrap(),
        )
        .unwrap();
        let f2 = ints(&r, 0, &[3, 0]);
        let hat = wedge_sw_hat(&f2, &side, &VirtualBundle::trivial(&r, 1), 0).unwrap();
        assert_eq!(hat, LaurentClass::term(&e.scale(&BigInt::from(3)), 0, 0));
        assert!(matches!(
            wedge_sw_localized(&f2, &side, &VirtualBundle::trivial(&r, 1), 2),
            Err(Error::WindowViolation { .. })
        ));
    }

    #[test]
    fn wedge_residue_detected() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let d = VirtualBundle::new(0, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let side = MonopoleSideData::new(d, OrientedRealBundle::trivial(&r, 0)).unwrap();
        let f2 = ints(&r, 0, &[1]);
        assert!(matches!(
            wedge_sw_localized(&f2, &side, &VirtualBundle::trivial(&r, 1), 0),
            Err(Error::NonPolynomialResidue(_))
        ));
    }

    #[test]
    fn bk_examples() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let h2 = OrientedRealBundle::new(2, cls(&r, &[("h", 2)])).unwrap();
        let one = BaseClass::one(&r);
        assert_eq!(bk_special_case(&BigInt::from(3), &h2, &one).unwrap(), BigInt::from(6));
        let zero_e = OrientedRealBundle::new(2, BaseClass::zero(&r)).unwrap();
        assert!(bk_special_case(&BigInt::from(3), &zero_e, &one).unwrap().is_zero());
        let h = cls(&r, &[("h", 1)]);
        assert!(matches!(
            bk_special_case(&BigInt::from(3), &h2, &h),
            Err(Error::Degree(_))
        ));
        let h0 = OrientedRealBundle::trivial(&r, 0);
        assert_eq!(bk_special_case(&BigInt::from(-2), &h0, &h).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn bk_shape_from_connect_sum() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let e = cls(&r, &[("h", -3)]);
        let hp = OrientedRealBundle::new(2, e).unwrap();
        let side = MonopoleSideData::new(VirtualBundle::trivial(&r, 0), hp.clone()).unwrap();
        let f2 = ints(&r, 0, &[4]);
        let sw = connect_sum_sw(&f2, &side, 0).unwrap();
        let alpha = BaseClass::integer(&r, 2);
        let paired = alpha.checked_mul(&sw).unwrap().integrate().unwrap();
        assert_eq!(paired, bk_special_case(&BigInt::from(4), &hp, &alpha).unwrap());
    }
}

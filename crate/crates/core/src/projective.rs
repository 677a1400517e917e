//! Cohomology of the projective bundle `P(V1 ⊕ V2)` with the circle acting
//! by scalars on `V1` and trivially on `V2`.
//!
//! `x` is the hyperplane class and `y` the weight-one equivariant
//! parameter. The equivariant ring is presented as `H*(B)[x, y] / rel`,
//! with `rel = e_{x+y}(V1) * e_x(V2)` monic of x-degree `a = a1 + a2`.
//! The fixed locus is `P(V1) ∪ P(V2)`; restriction sends `x` to `x1 - y`
//! on the first component and to `x2` on the second.

use crate::classes::{
    equivariant_euler, inverse_equivariant_euler, weighted_euler, VirtualBundle, Weight,
};
use crate::error::{Error, Result};
use crate::poly::{DescentGuard, EquivClass, LaurentClass};
use crate::ring::{same_ring, BaseClass, Ring};

/// Which component of the fixed locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    /// `P(V1)`, where the normal bundle has weight -1.
    First,
    /// `P(V2)`, where the normal bundle has weight +1.
    Second,
}

impl Locus {
    pub const BOTH: [Locus; 2] = [Locus::First, Locus::Second];

    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(Locus::First),
            2 => Ok(Locus::Second),
            other => Err(Error::InvalidLocus(other)),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Locus::First => 1,
            Locus::Second => 2,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Locus::First => Locus::Second,
            Locus::Second => Locus::First,
        }
    }

    pub fn weight(self) -> Weight {
        match self {
            Locus::First => Weight::Minus,
            Locus::Second => Weight::Plus,
        }
    }
}

/// The non-equivariant model of one fixed component `P(V_i)`, with its own
/// hyperplane class written as `x`.
#[derive(Clone, Debug)]
pub struct FixedLocusModel {
    locus: Locus,
    rank: u32,
    relation: LaurentClass,
    top_degree: u32,
}

impl FixedLocusModel {
    fn new(locus: Locus, bundle: &VirtualBundle) -> Result<Self> {
        let ring = bundle.ring();
        let relation = equivariant_euler(bundle, &EquivClass::x(ring))?.to_laurent();
        let rank = bundle.rank() as u32;
        Ok(Self {
            locus,
            rank,
            relation,
            top_degree: (ring.truncation() + 2 * rank).saturating_sub(2),
        })
    }

    pub fn locus(&self) -> Locus {
        self.locus
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `Σ c_j(V_i) x^{a_i - j}`.
    pub fn relation(&self) -> &LaurentClass {
        &self.relation
    }

    /// Top cohomological degree of `P(V_i)`; above it every class vanishes.
    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn is_empty(&self) -> bool {
        self.rank == 0
    }

    pub fn reduce(&self, c: &LaurentClass) -> Result<LaurentClass> {
        c.reduce_monic(&self.relation)
    }

    /// `(π_i)_*`: the coefficient of `x^{a_i - 1}` after reduction.
    pub fn pushforward(&self, c: &LaurentClass) -> Result<LaurentClass> {
        if self.rank == 0 {
            return Ok(LaurentClass::zero(c.ring()));
        }
        Ok(self.reduce(c)?.x_slice(self.rank - 1))
    }
}

/// Euler class of the normal bundle of a fixed component, with its inverse
/// in the localized ring.
#[derive(Clone, Debug)]
pub struct NormalData {
    pub locus: Locus,
    /// `Σ_j c_j(V_opp) (x_i ∓ y)^{a_opp - j}`, reduced on a non-empty component.
    pub euler: EquivClass,
    /// Reduced modulo the fixed-locus relation.
    pub inverse: LaurentClass,
}

#[derive(Clone, Debug)]
pub struct ProjectiveModel {
    ring: Ring,
    v1: VirtualBundle,
    v2: VirtualBundle,
    relation: LaurentClass,
    fixed: [FixedLocusModel; 2],
    guard: DescentGuard,
}

/// Builds the model of `P(V1 ⊕ V2)`; both bundles must be genuine.
pub fn build_projective_model(v1: &VirtualBundle, v2: &VirtualBundle) -> Result<ProjectiveModel> {
    ProjectiveModel::new(v1, v2)
}

impl ProjectiveModel {
    pub fn new(v1: &VirtualBundle, v2: &VirtualBundle) -> Result<Self> {
        if !same_ring(v1.ring(), v2.ring()) {
            return Err(Error::RingMismatch);
        }
        for (name, v) in [("V1", v1), ("V2", v2)] {
            if !v.is_genuine() {
                return Err(Error::InvalidBundle(format!(
                    "{name} must be a genuine bundle (rank {}, c = {})",
                    v.rank(),
                    v.total_chern()
                )));
            }
        }
        if v1.rank() + v2.rank() < 1 {
            return Err(Error::EmptyProjectiveModel);
        }
        let ring = v1.ring().clone();
        let x = EquivClass::x(&ring);
        let xy = x.add(&EquivClass::y(&ring))?;
        let relation = equivariant_euler(v1, &xy)?
            .mul(&equivariant_euler(v2, &x)?)?
            .to_laurent();
        let a = (v1.rank() + v2.rank()) as u32;
        let model = Self {
            guard: DescentGuard::new(i64::from(a), ring.truncation(), DescentGuard::DEFAULT_WINDOW),
            fixed: [
                FixedLocusModel::new(Locus::First, v1)?,
                FixedLocusModel::new(Locus::Second, v2)?,
            ],
            ring,
            v1: v1.clone(),
            v2: v2.clone(),
            relation,
        };
        for locus in Locus::BOTH {
            let r = model.restrict_to_fixed(&model.relation, locus)?;
            if !r.is_zero() {
                return Err(Error::InvalidBundle(format!(
                    "relation does not vanish on fixed locus {}: {r}",
                    locus.index()
                )));
            }
        }
        Ok(model)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn v1(&self) -> &VirtualBundle {
        &self.v1
    }

    pub fn v2(&self) -> &VirtualBundle {
        &self.v2
    }

    pub fn bundle(&self, locus: Locus) -> &VirtualBundle {
        match locus {
            Locus::First => &self.v1,
            Locus::Second => &self.v2,
        }
    }

    /// Fiber dimension plus one: `a = a1 + a2`.
    pub fn rank(&self) -> u32 {
        (self.v1.rank() + self.v2.rank()) as u32
    }

    pub fn relation(&self) -> &LaurentClass {
        &self.relation
    }

    pub fn fixed(&self, locus: Locus) -> &FixedLocusModel {
        &self.fixed[locus.index() - 1]
    }

    pub fn guard(&self) -> DescentGuard {
        self.guard
    }

    pub fn with_guard(mut self, guard: DescentGuard) -> Self {
        self.guard = guard;
        self
    }

    /// True when the circle acts trivially (`V1 = 0`).
    pub fn is_non_equivariant(&self) -> bool {
        self.v1.rank() == 0
    }

    pub fn reduce(&self, c: &LaurentClass) -> Result<LaurentClass> {
        c.reduce_monic(&self.relation)
    }

    pub fn reduce_poly(&self, c: &EquivClass) -> Result<EquivClass> {
        Ok(self
            .reduce(&c.to_laurent())?
            .to_polynomial()
            .expect("reduction of a polynomial stays polynomial"))
    }

    /// `π_*`: the coefficient of `x^{a-1}` in the canonical form.
    pub fn gysin_pushforward(&self, c: &LaurentClass) -> Result<LaurentClass> {
        Ok(self.reduce(c)?.x_slice(self.rank() - 1))
    }

    pub fn gysin_pushforward_poly(&self, c: &EquivClass) -> Result<EquivClass> {
        Ok(self
            .gysin_pushforward(&c.to_laurent())?
            .to_polynomial()
            .expect("pushforward of a polynomial stays polynomial"))
    }

    /// Image of `x` under restriction to a fixed component.
    fn restriction_image(&self, locus: Locus) -> LaurentClass {
        let x = LaurentClass::monomial(&self.ring, 1, 0);
        match locus {
            Locus::First => x.sub(&LaurentClass::monomial(&self.ring, 0, 1)).unwrap(),
            Locus::Second => x,
        }
    }

    /// Inverse substitution on the fixed component: `x_1 -> x + y`, `x_2 -> x`.
    pub(crate) fn lift_image(&self, locus: Locus) -> LaurentClass {
        let x = LaurentClass::monomial(&self.ring, 1, 0);
        match locus {
            Locus::First => x.add(&LaurentClass::monomial(&self.ring, 0, 1)).unwrap(),
            Locus::Second => x,
        }
    }

    /// Lift of `e(N_i)` to `P(V)`: the factor of the relation that vanishes
    /// on the opposite component, `e_x(V2)` for `i = 1` and `e_{x+y}(V1)`
    /// for `i = 2`.
    pub(crate) fn normal_euler_lift(&self, locus: Locus) -> Result<LaurentClass> {
        let x = EquivClass::x(&self.ring);
        let e = match locus {
            Locus::First => equivariant_euler(&self.v2, &x)?,
            Locus::Second => equivariant_euler(&self.v1, &x.add(&EquivClass::y(&self.ring))?)?,
        };
        Ok(e.to_laurent())
    }

    /// `ι_i^*`, reduced modulo the fixed-locus relation.
    pub fn restrict_to_fixed(&self, c: &LaurentClass, locus: Locus) -> Result<LaurentClass> {
        let img = c.substitute_x(&self.restriction_image(locus))?;
        self.fixed(locus).reduce(&img)
    }

    pub fn restrict_to_fixed_index(&self, c: &LaurentClass, index: usize) -> Result<LaurentClass> {
        self.restrict_to_fixed(c, Locus::from_index(index)?)
    }

    /// Euler class of `N_1 ≅ (V2 ⊗ O_1(1))` at weight -1, or of
    /// `N_2 ≅ (V1 ⊗ O_2(1))` at weight +1, with its Laurent inverse.
    pub fn normal_data(&self, locus: Locus) -> Result<NormalData> {
        let opposite = self.bundle(locus.opposite());
        let fixed = self.fixed(locus);
        let x = EquivClass::x(&self.ring);
        let mut euler = weighted_euler(opposite, locus.weight(), &x)?;
        // An empty component kills everything; keep the formal expression there.
        if !fixed.is_empty() {
            euler = fixed.reduce(&euler)?;
        }
        let euler = euler
            .to_polynomial()
            .expect("Euler class of a genuine bundle is polynomial in y");
        let inverse = inverse_equivariant_euler(opposite, locus.weight(), &x, fixed.top_degree())?;
        let inverse = fixed.reduce(&inverse)?;
        self.guard.check(&inverse)?;
        Ok(NormalData {
            locus,
            euler,
            inverse,
        })
    }

    /// Pullback of a base class.
    pub fn pullback(&self, b: &BaseClass) -> EquivClass {
        EquivClass::constant(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_preset;

    fn cls(r: &Ring, t: &[(&str, i64)]) -> BaseClass {
        BaseClass::from_named(r, t).unwrap()
    }

    fn lq(r: &Ring, q: &[(u32, i64, &str, i64)]) -> LaurentClass {
        LaurentClass::from_quadruples(r, q).unwrap()
    }

    fn cp1_over_point() -> ProjectiveModel {
        let r = ring_preset("point", &[]).unwrap();
        let c = VirtualBundle::trivial(&r, 1);
        build_projective_model(&c, &c).unwrap()
    }

    #[test]
    fn cp1_relation_and_restrictions() {
        let m = cp1_over_point();
        let r = m.ring().clone();
        assert_eq!(m.relation(), &lq(&r, &[(2, 0, "1", 1), (1, 1, "1", 1)]));
        let x = LaurentClass::monomial(&r, 1, 0);
        assert_eq!(
            m.restrict_to_fixed(&x, Locus::First).unwrap(),
            lq(&r, &[(0, 1, "1", -1)])
        );
        assert!(m.restrict_to_fixed(&x, Locus::Second).unwrap().is_zero());
        let one = LaurentClass::one(&r);
        for l in Locus::BOTH {
            assert_eq!(m.restrict_to_fixed(&one, l).unwrap(), one);
        }
        assert!(m.restrict_to_fixed(m.relation(), Locus::Second).unwrap().is_zero());
        assert_eq!(
            m.restrict_to_fixed_index(&one, 3),
            Err(Error::InvalidLocus(3))
        );
    }

    #[test]
    fn cp1_reduce_and_pushforward() {
        let m = cp1_over_point();
        let r = m.ring().clone();
        let x2 = LaurentClass::monomial(&r, 2, 0);
        assert_eq!(m.reduce(&x2).unwrap(), lq(&r, &[(1, 1, "1", -1)]));
        let x = LaurentClass::monomial(&r, 1, 0);
        assert_eq!(m.reduce(&x).unwrap(), x);
        assert!(m.reduce(m.relation()).unwrap().is_zero());
        assert_eq!(m.gysin_pushforward(&x2).unwrap(), lq(&r, &[(0, 1, "1", -1)]));
        assert_eq!(m.gysin_pushforward(&x).unwrap(), LaurentClass::one(&r));
    }

    #[test]
    fn trivial_action_limit() {
        let r = ring_preset("cp", &[2]).unwrap();
        let v2 = VirtualBundle::new(2, cls(&r, &[("1", 1), ("h", 1), ("h^2", 3)])).unwrap();
        let m = build_projective_model(&VirtualBundle::trivial(&r, 0), &v2).unwrap();
        assert!(m.is_non_equivariant());
        assert_eq!(
            m.relation(),
            &lq(&r, &[(2, 0, "1", 1), (1, 0, "h", 1), (0, 0, "h^2", 3)])
        );
    }

    #[test]
    fn single_root_relation() {
        let r = ring_preset("sphere", &[2]).unwrap();
        let v1 = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", 1)])).unwrap();
        let m = build_projective_model(&v1, &VirtualBundle::trivial(&r, 0)).unwrap();
        assert_eq!(
            m.relation(),
            &lq(&r, &[(1, 0, "1", 1), (0, 1, "1", 1), (0, 0, "h", 1)])
        );
        let n2 = m.normal_data(Locus::Second).unwrap();
        let expect = EquivClass::from_quadruples(&r, &[(1, 0, "1", 1), (0, 1, "1", 1), (0, 0, "h", 1)])
            .unwrap();
        assert_eq!(n2.euler, expect);
    }

    #[test]
    fn non_equivariant_pushforward_table() {
        let r = ring_preset("point", &[]).unwrap();
        let m = build_projective_model(&VirtualBundle::trivial(&r, 0), &VirtualBundle::trivial(&r, 3))
            .unwrap();
        assert!(m.gysin_pushforward(&LaurentClass::monomial(&r, 1, 0)).unwrap().is_zero());
        assert_eq!(
            m.gysin_pushforward(&LaurentClass::monomial(&r, 2, 0)).unwrap(),
            LaurentClass::one(&r)
        );

        let s = ring_preset("sphere", &[2]).unwrap();
        let v = VirtualBundle::new(2, cls(&s, &[("1", 1), ("h", 1)])).unwrap();
        let m = build_projective_model(&VirtualBundle::trivial(&s, 0), &v).unwrap();
        assert_eq!(
            m.gysin_pushforward(&LaurentClass::monomial(&s, 2, 0)).unwrap(),
            lq(&s, &[(0, 0, "h", -1)])
        );
    }

    #[test]
    fn cp1_normal_data() {
        let m = cp1_over_point();
        let r = m.ring().clone();
        let n1 = m.normal_data(Locus::First).unwrap();
        assert_eq!(n1.euler, EquivClass::y(&r).neg());
        assert_eq!(
            m.normal_euler_lift(Locus::First).unwrap(),
            LaurentClass::monomial(&r, 1, 0)
        );
        assert_eq!(n1.inverse, lq(&r, &[(0, -1, "1", -1)]));
        let n2 = m.normal_data(Locus::Second).unwrap();
        assert_eq!(n2.euler, EquivClass::y(&r));
        assert_eq!(n2.inverse, lq(&r, &[(0, -1, "1", 1)]));
    }

    #[test]
    fn normal_leading_term() {
        let r = ring_preset("cp", &[2]).unwrap();
        let v1 = VirtualBundle::new(2, cls(&r, &[("1", 1), ("h", 2), ("h^2", 1)])).unwrap();
        let v2 = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h", -1)])).unwrap();
        let m = build_projective_model(&v1, &v2).unwrap();
        let n2 = m.normal_data(Locus::Second).unwrap();
        assert!(n2.euler.coefficient(0, 2).is_one());
        assert_eq!(n2.euler.max_y_degree(), Some(2));
        for l in Locus::BOTH {
            let nd = m.normal_data(l).unwrap();
            let prod = nd.euler.to_laurent().mul(&nd.inverse).unwrap();
            assert_eq!(m.fixed(l).reduce(&prod).unwrap(), LaurentClass::one(&r));
        }
    }

    #[test]
    fn build_errors() {
        let r = ring_preset("cp", &[2]).unwrap();
        let z = VirtualBundle::trivial(&r, 0);
        assert!(matches!(
            build_projective_model(&z, &z),
            Err(Error::EmptyProjectiveModel)
        ));
        let virt = VirtualBundle::new(1, cls(&r, &[("1", 1), ("h^2", 1)])).unwrap();
        assert!(matches!(
            build_projective_model(&virt, &z),
            Err(Error::InvalidBundle(_))
        ));
        assert!(build_projective_model(&VirtualBundle::trivial(&r, -1), &VirtualBundle::trivial(&r, 2)).is_err());
    }
}

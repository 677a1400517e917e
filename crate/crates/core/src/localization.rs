//! Two-component fixed-point localization on `P(V1 ⊕ V2)`.
//!
//! After inverting `y`, a class on the projective bundle is determined by
//! its restrictions to `P(V1)` and `P(V2)`. [`LocalizedClass`] stores that
//! pair; [`assemble`] is the inverse of [`localize`], and
//! [`localized_pushforward`] computes `π_*` as a sum of fixed-locus
//! pushforwards weighted by the inverse normal Euler classes.

use crate::error::{Error, Result};
use crate::poly::{EquivClass, LaurentClass};
use crate::projective::{Locus, ProjectiveModel};

/// The pair `(ι_1^* γ, ι_2^* γ)`, each reduced on its fixed component.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedClass {
    relation: LaurentClass,
    parts: [LaurentClass; 2],
}

impl LocalizedClass {
    /// Wraps restrictions given directly; each is reduced on its component.
    pub fn new(model: &ProjectiveModel, first: LaurentClass, second: LaurentClass) -> Result<Self> {
        Ok(Self {
            relation: model.relation().clone(),
            parts: [
                model.fixed(Locus::First).reduce(&first)?,
                model.fixed(Locus::Second).reduce(&second)?,
            ],
        })
    }

    pub fn part(&self, locus: Locus) -> &LaurentClass {
        &self.parts[locus.index() - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(LaurentClass::is_zero)
    }

    fn check(&self, model: &ProjectiveModel) -> Result<()> {
        if &self.relation == model.relation() {
            Ok(())
        } else {
            Err(Error::InvalidBundle(
                "localized class belongs to a different projective model".into(),
            ))
        }
    }
}

pub fn localize(c: &EquivClass, model: &ProjectiveModel) -> Result<LocalizedClass> {
    localize_laurent(&c.to_laurent(), model)
}

pub fn localize_laurent(c: &LaurentClass, model: &ProjectiveModel) -> Result<LocalizedClass> {
    Ok(LocalizedClass {
        relation: model.relation().clone(),
        parts: [
            model.restrict_to_fixed(c, Locus::First)?,
            model.restrict_to_fixed(c, Locus::Second)?,
        ],
    })
}

/// `(ι_i)_* α`: lift `α` off the fixed component and multiply by the lift
/// of `e(N_i)`, which is the factor of the relation vanishing on the other
/// component.
pub fn iota_push(alpha: &LaurentClass, locus: Locus, model: &ProjectiveModel) -> Result<LaurentClass> {
    let lifted = alpha.substitute_x(&model.lift_image(locus))?;
    model.reduce(&lifted.mul(&model.normal_euler_lift(locus)?)?)
}

/// `Σ_i (ι_i)_*(e(N_i)^{-1} ρ_i)`, reduced on `P(V)`.
pub fn assemble(l: &LocalizedClass, model: &ProjectiveModel) -> Result<LaurentClass> {
    l.check(model)?;
    let mut out = LaurentClass::zero(model.ring());
    for locus in Locus::BOTH {
        let rho = l.part(locus);
        if rho.is_zero() {
            continue;
        }
        let nd = model.normal_data(locus)?;
        let weighted = model.fixed(locus).reduce(&nd.inverse.mul(rho)?)?;
        model.guard().check(&weighted)?;
        out = out.add(&iota_push(&weighted, locus, model)?)?;
    }
    model.guard().check(&out)?;
    Ok(out)
}

/// `Σ_i (π_i)_*(e(N_i)^{-1} ρ_i)`, a Laurent polynomial in `y` over `B`.
pub fn localized_pushforward(l: &LocalizedClass, model: &ProjectiveModel) -> Result<LaurentClass> {
    l.check(model)?;
    let mut out = LaurentClass::zero(model.ring());
    for locus in Locus::BOTH {
        let rho = l.part(locus);
        if rho.is_zero() {
            continue;
        }
        let nd = model.normal_data(locus)?;
        let weighted = nd.inverse.mul(rho)?;
        model.guard().check(&weighted)?;
        out = out.add(&model.fixed(locus).pushforward(&weighted)?)?;
    }
    Ok(out)
}

/// Outcome of pushing a polynomial class forward through localization.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedPushforward {
    pub value: LaurentClass,
    /// Coefficients on negative powers of `y`; zero for a polynomial input.
    pub residue: LaurentClass,
}

impl LocalizedPushforward {
    pub fn is_polynomial(&self) -> bool {
        self.residue.is_zero()
    }
}

/// `localized_pushforward(localize(c))` together with its negative-power residue.
pub fn pushforward_via_localization(
    c: &EquivClass,
    model: &ProjectiveModel,
) -> Result<LocalizedPushforward> {
    let value = localized_pushforward(&localize(c, model)?, model)?;
    let residue = value.negative_part();
    Ok(LocalizedPushforward { value, residue })
}

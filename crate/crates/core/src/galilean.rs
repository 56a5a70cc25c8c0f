//! One-dimensional Galilean boost `x' = x − v0·t`, `t' = t`, and the split of a
//! boosted Lagrangian into a same-form part plus an induced null Lagrangian.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::expr::{ExprError, Frame, Polynomial, Rational, Symbol};
use crate::variational::{gauge_from_null, is_null, GaugeFunction, VariationalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalileanError {
    #[error(
        "expression is written in the {found} frame but the boost maps from the {expected} frame"
    )]
    WrongFrame { expected: Frame, found: Frame },
    #[error("boost velocity may depend on constants and parameters only, got {0}")]
    InvalidVelocity(Polynomial),
    #[error("induced remainder {induced} is not a null Lagrangian (residual {residual})")]
    InducedNotNull {
        induced: Polynomial,
        residual: Polynomial,
    },
    #[error(transparent)]
    Variational(#[from] VariationalError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostDirection {
    /// Express an unprimed Lagrangian in primed variables.
    ToPrimed,
    /// Express a primed Lagrangian in unprimed variables.
    ToUnprimed,
}

impl BoostDirection {
    pub fn source(self) -> Frame {
        match self {
            BoostDirection::ToPrimed => Frame::Unprimed,
            BoostDirection::ToUnprimed => Frame::Primed,
        }
    }

    pub fn target(self) -> Frame {
        self.source().other()
    }
}

/// Relative frame velocity and the direction of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoostContext {
    v0: Polynomial,
    direction: BoostDirection,
}

impl Default for BoostContext {
    fn default() -> Self {
        BoostContext::symbolic()
    }
}

impl BoostContext {
    pub fn new(v0: Polynomial, direction: BoostDirection) -> Result<Self, GalileanError> {
        if v0.symbols().into_iter().any(Symbol::is_kinematic) {
            return Err(GalileanError::InvalidVelocity(v0));
        }
        Ok(BoostContext { v0, direction })
    }

    /// Symbolic `v0`, unprimed to primed.
    pub fn symbolic() -> Self {
        BoostContext {
            v0: Polynomial::var(Symbol::V0),
            direction: BoostDirection::ToPrimed,
        }
    }

    pub fn with_velocity(v0: Rational) -> Self {
        BoostContext {
            v0: Polynomial::constant(v0),
            direction: BoostDirection::ToPrimed,
        }
    }

    pub fn v0(&self) -> &Polynomial {
        &self.v0
    }

    pub fn direction(&self) -> BoostDirection {
        self.direction
    }

    /// The map that undoes this one.
    pub fn inverse(&self) -> Self {
        BoostContext {
            v0: self.v0.clone(),
            direction: match self.direction {
                BoostDirection::ToPrimed => BoostDirection::ToUnprimed,
                BoostDirection::ToUnprimed => BoostDirection::ToPrimed,
            },
        }
    }

    /// Replacements for the source-frame jet in terms of the target frame.
    fn substitution(&self) -> Result<BTreeMap<Symbol, Polynomial>, ExprError> {
        let source = self.direction.source();
        let target = self.direction.target();
        // x = x' + v0 t when going to primed, x' = x − v0 t the other way
        let shift = match self.direction {
            BoostDirection::ToPrimed => self.v0.clone(),
            BoostDirection::ToUnprimed => -&self.v0,
        };
        let mut map = BTreeMap::new();
        map.insert(
            source.position(),
            &Polynomial::var(target.position()) + &shift.mul(&Polynomial::var(Symbol::T))?,
        );
        map.insert(
            source.velocity(),
            &Polynomial::var(target.velocity()) + &shift,
        );
        map.insert(
            source.acceleration(),
            Polynomial::var(target.acceleration()),
        );
        Ok(map)
    }
}

fn check_source_frame(l: &Polynomial, ctx: &BoostContext) -> Result<(), GalileanError> {
    let expected = ctx.direction.source();
    match l.frame()? {
        Some(found) if found != expected => Err(GalileanError::WrongFrame { expected, found }),
        _ => Ok(()),
    }
}

/// Rewrites `l` in the target frame by substituting the inverse transformation.
pub fn boost(l: &Polynomial, ctx: &BoostContext) -> Result<Polynomial, GalileanError> {
    check_source_frame(l, ctx)?;
    Ok(l.substitute_all(&ctx.substitution()?)?)
}

/// `boosted = same_form + d(induced_gauge)/dt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoostDecomposition {
    pub boosted: Polynomial,
    /// The input with its dynamic symbols renamed into the target frame.
    pub same_form: Polynomial,
    pub induced_null: Polynomial,
    pub induced_gauge: GaugeFunction,
}

impl BoostDecomposition {
    /// `boosted − same_form − dΦ_G/dt`; zero for every valid decomposition.
    pub fn residual(&self) -> Polynomial {
        &(&self.boosted - &self.same_form) - &self.induced_gauge.lagrangian()
    }
}

pub fn decompose(l: &Polynomial, ctx: &BoostContext) -> Result<BoostDecomposition, GalileanError> {
    if l.contains(Symbol::XDDot) || l.contains(Symbol::XpDDot) {
        return Err(VariationalError::AccelerationInLagrangian.into());
    }
    let boosted = boost(l, ctx)?;
    let same_form = l.to_frame(ctx.direction.target());
    let induced_null = &boosted - &same_form;
    let test = is_null(&induced_null)?;
    if !test.null {
        return Err(GalileanError::InducedNotNull {
            induced: induced_null,
            residual: test.residual,
        });
    }
    let induced_gauge = gauge_from_null(&induced_null)?;
    Ok(BoostDecomposition {
        boosted,
        same_form,
        induced_null,
        induced_gauge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, parse_with, rat, ParseOptions};

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn boost_standard_lagrangian() {
        let got = boost(&p("1/2*C0*xdot^2"), &BoostContext::symbolic()).unwrap();
        assert_eq!(got, p("1/2*C0*xpdot^2 + C0*xpdot*v0 + 1/2*C0*v0^2"));
    }

    #[test]
    fn boost_leaves_time_and_zero_boost_is_renaming() {
        assert_eq!(boost(&p("t"), &BoostContext::symbolic()).unwrap(), p("t"));
        let ctx = BoostContext::with_velocity(rat(0, 1));
        assert_eq!(boost(&p("x"), &ctx).unwrap(), p("xp"));
    }

    #[test]
    fn boost_then_inverse_is_identity() {
        let ctx = BoostContext::symbolic();
        let l = p("C1*xdot*x + C2*(xdot*t + x) + 1/2*C0*xdot^2");
        let there = boost(&l, &ctx).unwrap();
        assert_eq!(boost(&there, &ctx.inverse()).unwrap(), l);
    }

    #[test]
    fn boost_rejects_wrong_and_mixed_frames() {
        let ctx = BoostContext::symbolic();
        assert_eq!(
            boost(&p("xp"), &ctx),
            Err(GalileanError::WrongFrame {
                expected: Frame::Unprimed,
                found: Frame::Primed
            })
        );
        assert!(matches!(
            boost(&p("x*xpdot"), &ctx),
            Err(GalileanError::Expr(ExprError::MixedFrame))
        ));
        assert!(BoostContext::new(p("x"), BoostDirection::ToPrimed).is_err());
    }

    #[test]
    fn boost_maps_accelerations() {
        let opts = ParseOptions {
            allow_acceleration: true,
            ..Default::default()
        };
        let r = parse_with("C0*xddot", opts).unwrap();
        let want = parse_with("C0*xpddot", opts).unwrap();
        assert_eq!(boost(&r, &BoostContext::symbolic()).unwrap(), want);
    }

    #[test]
    fn decompose_standard_lagrangian() {
        let d = decompose(&p("1/2*C0*xdot^2"), &BoostContext::symbolic()).unwrap();
        assert_eq!(d.same_form, p("1/2*C0*xpdot^2"));
        assert_eq!(d.induced_gauge.phi(), &p("C0*(xp + 1/2*v0*t)*v0"));
        assert!(d.residual().is_zero());
    }

    #[test]
    fn decompose_null_lagrangian() {
        let d = decompose(
            &p("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6"),
            &BoostContext::symbolic(),
        )
        .unwrap();
        assert_eq!(
            d.induced_gauge.phi(),
            &p("(C1*(xp + 1/2*v0*t) + C2*t + C4)*v0*t")
        );
        assert!(d.residual().is_zero());
    }

    #[test]
    fn decompose_constant() {
        let d = decompose(&p("C6"), &BoostContext::symbolic()).unwrap();
        assert!(d.induced_gauge.phi().is_zero());
        assert!(d.induced_null.is_zero());
    }

    #[test]
    fn decompose_rejects_non_invariant_dynamics() {
        // V = x^2/2 is not boost invariant: the remainder is not null
        assert!(matches!(
            decompose(&p("1/2*xdot^2 - 1/2*x^2"), &BoostContext::symbolic()),
            Err(GalileanError::InducedNotNull { .. })
        ));
    }
}

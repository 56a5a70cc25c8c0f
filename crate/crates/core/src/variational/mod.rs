//! Euler-Lagrange operator, null-Lagrangian test and gauge reconstruction.

mod constraints;

use std::fmt;

use thiserror::Error;

pub use constraints::{ConstraintError, ConstraintSet};

use crate::expr::{ExprError, Frame, Polynomial, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariationalError {
    #[error("Lagrangian contains an acceleration; Lagrangians depend on x, xdot and t only")]
    AccelerationInLagrangian,
    #[error("not nullable: {0}")]
    NotNullable(ConstraintError),
    #[error(transparent)]
    Constraint(ConstraintError),
    #[error("not a null Lagrangian: Euler-Lagrange residual is {residual}")]
    NotNull { residual: Polynomial },
    #[error(
        "Lagrangian has degree {degree} in the velocity; a one-dimensional null Lagrangian is affine in the velocity, so no gauge function exists"
    )]
    NonAffineVelocity { degree: u32 },
    #[error("exactness condition fails: df/dt = {df_dt} but dg/dx = {dg_dx}")]
    NotExact {
        df_dt: Polynomial,
        dg_dx: Polynomial,
    },
    #[error("gauge function may depend on position, time, parameters and constants only")]
    InvalidGauge,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

fn frame_of(l: &Polynomial) -> Result<Frame, VariationalError> {
    if l.contains(Symbol::XDDot) || l.contains(Symbol::XpDDot) {
        return Err(VariationalError::AccelerationInLagrangian);
    }
    Ok(l.frame()?.unwrap_or(Frame::Unprimed))
}

/// `d/dt(∂L/∂ẋ) − ∂L/∂x`, in whichever frame `l` is written.
pub fn euler_lagrange(l: &Polynomial) -> Result<Polynomial, VariationalError> {
    let frame = frame_of(l)?;
    let momentum = l.partial(frame.velocity());
    Ok(momentum.total_time_derivative() - l.partial(frame.position()))
}

/// Outcome of [`is_null`]: the residual is returned whether or not it vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullTest {
    pub null: bool,
    pub residual: Polynomial,
}

pub fn is_null(l: &Polynomial) -> Result<NullTest, VariationalError> {
    let residual = euler_lagrange(l)?;
    Ok(NullTest {
        null: residual.is_zero(),
        residual,
    })
}

/// Conditions on the `C` constants under which `l` is a null Lagrangian.
///
/// Each coefficient of the Euler-Lagrange residual, taken over monomials in the
/// dynamic variables and `t`, must vanish.
pub fn null_conditions(l: &Polynomial) -> Result<ConstraintSet, VariationalError> {
    let residual = euler_lagrange(l)?;
    let equations = residual
        .coefficients_in(Symbol::is_kinematic)
        .into_iter()
        .map(|(_, coeff)| coeff);
    ConstraintSet::solve(equations).map_err(|e| match e {
        ConstraintError::Inconsistent { .. } => VariationalError::NotNullable(e),
        other => VariationalError::Constraint(other),
    })
}

/// A scalar `Φ(x, t)` whose total time derivative is a null Lagrangian.
///
/// Normalized with zero constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaugeFunction {
    phi: Polynomial,
}

impl GaugeFunction {
    pub fn new(phi: Polynomial) -> Result<Self, VariationalError> {
        phi.frame()?;
        let velocity_free = !phi.symbols().into_iter().any(|s| {
            matches!(
                s,
                Symbol::XDot | Symbol::XDDot | Symbol::XpDot | Symbol::XpDDot
            )
        });
        if !velocity_free {
            return Err(VariationalError::InvalidGauge);
        }
        Ok(GaugeFunction {
            phi: phi.without_constant_term(),
        })
    }

    pub fn zero() -> Self {
        GaugeFunction::default()
    }

    pub fn phi(&self) -> &Polynomial {
        &self.phi
    }

    pub fn into_inner(self) -> Polynomial {
        self.phi
    }

    /// The null Lagrangian `dΦ/dt`.
    pub fn lagrangian(&self) -> Polynomial {
        self.phi.total_time_derivative()
    }

    pub fn frame(&self) -> Option<Frame> {
        self.phi.frame().ok().flatten()
    }
}

impl std::ops::Add for &GaugeFunction {
    type Output = GaugeFunction;
    fn add(self, rhs: &GaugeFunction) -> GaugeFunction {
        GaugeFunction {
            phi: &self.phi + &rhs.phi,
        }
    }
}

impl fmt::Display for GaugeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.phi.fmt(f)
    }
}

/// Reconstructs `Φ` with `dΦ/dt = l` for a null Lagrangian `l = f(x,t)·ẋ + g(x,t)`.
///
/// `Φ = F + h` where `F = ∫ f dx` and `h = ∫ (g − ∂F/∂t) dt`.
pub fn gauge_from_null(l: &Polynomial) -> Result<GaugeFunction, VariationalError> {
    let frame = frame_of(l)?;
    let (pos, vel) = (frame.position(), frame.velocity());
    let degree = l.degree_in(vel);
    if degree > 1 {
        return Err(VariationalError::NonAffineVelocity { degree });
    }
    let test = is_null(l)?;
    if !test.null {
        return Err(VariationalError::NotNull {
            residual: test.residual,
        });
    }
    let f = l.coefficient_of(vel, 1);
    let g = l.coefficient_of(vel, 0);
    let df_dt = f.partial(Symbol::T);
    let dg_dx = g.partial(pos);
    if df_dt != dg_dx {
        return Err(VariationalError::NotExact { df_dt, dg_dx });
    }
    let big_f = f.antiderivative(pos);
    let rest = &g - &big_f.partial(Symbol::T);
    if rest.contains(pos) {
        return Err(VariationalError::NotExact { df_dt, dg_dx });
    }
    let h = rest.antiderivative(Symbol::T);
    GaugeFunction::new(big_f + h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, parse_with, ParseOptions};

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    fn residual(s: &str) -> Polynomial {
        parse_with(
            s,
            ParseOptions {
                allow_acceleration: true,
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn euler_lagrange_examples() {
        assert_eq!(
            euler_lagrange(&p("1/2*C0*xdot^2")).unwrap(),
            residual("C0*xddot")
        );
        assert!(euler_lagrange(&p("C1*xdot*x")).unwrap().is_zero());
        assert_eq!(euler_lagrange(&p("C3*x*t")).unwrap(), p("-C3*t"));
        assert_eq!(
            euler_lagrange(&p("1/2*C0*xpdot^2")).unwrap(),
            residual("C0*xpddot")
        );
    }

    #[test]
    fn euler_lagrange_rejects_accelerations_and_mixed_frames() {
        assert_eq!(
            euler_lagrange(&residual("xddot")),
            Err(VariationalError::AccelerationInLagrangian)
        );
        assert!(matches!(
            euler_lagrange(&p("x*xpdot")),
            Err(VariationalError::Expr(ExprError::MixedFrame))
        ));
    }

    #[test]
    fn null_conditions_examples() {
        let ansatz = p("C1*xdot*x + C2*xdot*t + C3*x*t + C4*xdot + C5*x + C6");
        let set = null_conditions(&ansatz).unwrap();
        assert_eq!(set.lines(), vec!["C3 = 0", "C5 = C2"]);
        assert!(null_conditions(&p("C1*xdot*x")).unwrap().is_empty());
        assert_eq!(
            null_conditions(&p("1/2*C0*xdot^2")).unwrap().lines(),
            vec!["C0 = 0"]
        );
    }

    #[test]
    fn null_conditions_reports_not_nullable() {
        assert!(matches!(
            null_conditions(&p("x")),
            Err(VariationalError::NotNullable(_))
        ));
        assert!(matches!(
            null_conditions(&p("1/2*xdot^2 + C1*x")),
            Err(VariationalError::NotNullable(_))
        ));
        assert!(matches!(
            null_conditions(&p("C1*C2*x")),
            Err(VariationalError::Constraint(_))
        ));
    }

    #[test]
    fn is_null_examples() {
        let ln = p("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6");
        assert!(is_null(&ln).unwrap().null);
        let ls = is_null(&p("1/2*C0*xdot^2")).unwrap();
        assert!(!ls.null);
        assert_eq!(ls.residual, residual("C0*xddot"));
        assert!(is_null(&p("C6")).unwrap().null);
    }

    #[test]
    fn gauge_from_null_examples() {
        let ln = p("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6");
        assert_eq!(
            gauge_from_null(&ln).unwrap().phi(),
            &p("1/2*C1*x^2 + C2*x*t + C4*x + C6*t")
        );
        assert!(gauge_from_null(&Polynomial::zero())
            .unwrap()
            .phi()
            .is_zero());
        assert_eq!(
            gauge_from_null(&p("C2*(xdot*t + x)")).unwrap().phi(),
            &p("C2*x*t")
        );
        // primed frame
        assert_eq!(
            gauge_from_null(&p("C0*v0*xpdot + 1/2*C0*v0^2"))
                .unwrap()
                .phi(),
            &p("C0*(xp + 1/2*v0*t)*v0")
        );
    }

    #[test]
    fn gauge_from_null_errors() {
        assert_eq!(
            gauge_from_null(&p("1/2*C0*xdot^2")),
            Err(VariationalError::NonAffineVelocity { degree: 2 })
        );
        assert!(matches!(
            gauge_from_null(&p("C3*x*t")),
            Err(VariationalError::NotNull { .. })
        ));
    }

    #[test]
    fn gauge_function_normalizes_and_validates() {
        let g = GaugeFunction::new(p("x*t + 5")).unwrap();
        assert_eq!(g.phi(), &p("x*t"));
        assert_eq!(
            GaugeFunction::new(p("xdot")),
            Err(VariationalError::InvalidGauge)
        );
        assert_eq!(g.lagrangian(), p("xdot*t + x"));
    }
}

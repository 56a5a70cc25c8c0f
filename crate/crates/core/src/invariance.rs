//! Constancy of the induced gauge along solutions of `ẍ = 0`, the resulting
//! values of the null-Lagrangian constants, and the invariance check.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::expr::{rat, ExprError, Frame, Polynomial, Symbol};
use crate::galilean::{decompose, BoostContext, BoostDecomposition, GalileanError};
use crate::variational::{ConstraintError, ConstraintSet, GaugeFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvarianceError {
    #[error("gauge function is written in the {found} frame but the trajectory is in the {expected} frame")]
    FrameMismatch { expected: Frame, found: Frame },
    #[error("constancy condition must be a polynomial in t alone, got {0}")]
    NotPolynomialInTime(Polynomial),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error(transparent)]
    Galilean(#[from] GalileanError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Affine solution of `ẍ = 0` with initial velocity `u0` and position `x0`
/// given in the unprimed frame.
///
/// In the primed frame the same motion is `x'(t) = (u0 − v0)·t + x0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnShellSolution {
    pub u0: Polynomial,
    pub x0: Polynomial,
    pub v0: Polynomial,
    pub frame: Frame,
}

impl OnShellSolution {
    pub fn symbolic(frame: Frame) -> Self {
        OnShellSolution {
            u0: Polynomial::var(Symbol::U0),
            x0: Polynomial::var(Symbol::X0),
            v0: Polynomial::var(Symbol::V0),
            frame,
        }
    }

    pub fn velocity(&self) -> Polynomial {
        match self.frame {
            Frame::Unprimed => self.u0.clone(),
            Frame::Primed => &self.u0 - &self.v0,
        }
    }

    /// Position as a polynomial in `t`.
    pub fn trajectory(&self) -> Result<Polynomial, ExprError> {
        Ok(&self.velocity().mul(&Polynomial::var(Symbol::T))? + &self.x0)
    }

    fn substitution(&self) -> Result<BTreeMap<Symbol, Polynomial>, ExprError> {
        let mut map = BTreeMap::new();
        map.insert(self.frame.position(), self.trajectory()?);
        map.insert(self.frame.velocity(), self.velocity());
        map.insert(self.frame.acceleration(), Polynomial::zero());
        Ok(map)
    }

    /// Evaluates any expression of this frame along the trajectory.
    pub fn substitute(&self, p: &Polynomial) -> Result<Polynomial, InvarianceError> {
        if let Some(found) = p.frame()? {
            if found != self.frame {
                return Err(InvarianceError::FrameMismatch {
                    expected: self.frame,
                    found,
                });
            }
        }
        Ok(p.substitute_all(&self.substitution()?)?)
    }
}

/// `Φ` evaluated along the trajectory: a polynomial in `t`.
pub fn on_shell_substitute(
    phi: &GaugeFunction,
    sol: &OnShellSolution,
) -> Result<Polynomial, InvarianceError> {
    sol.substitute(phi.phi())
}

/// Result of forcing a gauge expression to a constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstancySolution {
    pub constraints: ConstraintSet,
    /// The value `C` that remains once the constraints hold.
    pub constant: Polynomial,
}

/// Sets every positive-power coefficient of `p(t)` to zero and solves for the constants.
pub fn solve_constancy(p: &Polynomial) -> Result<ConstancySolution, InvarianceError> {
    if p.symbols()
        .into_iter()
        .any(|s| s.is_kinematic() && s != Symbol::T)
    {
        return Err(InvarianceError::NotPolynomialInTime(p.clone()));
    }
    solve_vanishing(p, |s| s == Symbol::T)
}

/// Off-shell variant: `Φ` must be constant for every trajectory, so each
/// coefficient of a non-constant monomial in position and `t` vanishes.
pub fn solve_constancy_offshell(phi: &GaugeFunction) -> Result<ConstancySolution, InvarianceError> {
    solve_vanishing(phi.phi(), Symbol::is_kinematic)
}

fn solve_vanishing(
    p: &Polynomial,
    varying: impl Fn(Symbol) -> bool,
) -> Result<ConstancySolution, InvarianceError> {
    let mut constant = Polynomial::zero();
    let mut equations = Vec::new();
    for (powers, coeff) in p.coefficients_in(varying) {
        if powers.is_one() {
            constant = coeff;
        } else {
            equations.push(coeff);
        }
    }
    let constraints = ConstraintSet::solve(equations)?;
    let constant = constraints.apply(&constant)?;
    Ok(ConstancySolution {
        constraints,
        constant,
    })
}

/// Bindings for the free data of the invariant Lagrangian. Each entry maps a
/// symbol (`C0`, `C1`, `C6`, `u0`, `x0`, `v0`) to its value; absent entries stay symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvarianceParams {
    bindings: BTreeMap<Symbol, Polynomial>,
}

impl InvarianceParams {
    pub const FREE: [Symbol; 6] = [
        Symbol::C0,
        Symbol::C1,
        Symbol::C6,
        Symbol::U0,
        Symbol::X0,
        Symbol::V0,
    ];

    pub fn symbolic() -> Self {
        InvarianceParams::default()
    }

    /// Binds one of [`Self::FREE`]; other symbols are ignored.
    pub fn bind(mut self, symbol: Symbol, value: Polynomial) -> Self {
        if Self::FREE.contains(&symbol) {
            self.bindings.insert(symbol, value);
        }
        self
    }

    pub fn get(&self, symbol: Symbol) -> Polynomial {
        self.bindings
            .get(&symbol)
            .cloned()
            .unwrap_or_else(|| Polynomial::var(symbol))
    }

    pub fn bindings(&self) -> &BTreeMap<Symbol, Polynomial> {
        &self.bindings
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, ExprError> {
        p.substitute_all(&self.bindings)
    }

    pub fn boost_context(&self) -> BoostContext {
        BoostContext::new(
            self.get(Symbol::V0),
            crate::galilean::BoostDirection::ToPrimed,
        )
        .expect("bound v0 is free of dynamic symbols")
    }

    pub fn on_shell(&self, frame: Frame) -> OnShellSolution {
        OnShellSolution {
            u0: self.get(Symbol::U0),
            x0: self.get(Symbol::X0),
            v0: self.get(Symbol::V0),
            frame,
        }
    }
}

/// `½·C0·ẋ²`.
pub fn standard_lagrangian() -> Polynomial {
    Polynomial::monomial(rat(1, 2), &[(Symbol::C0, 1), (Symbol::XDot, 2)])
}

/// `C1·ẋ·x + C2·(ẋ·t + x) + C4·ẋ + C6`, the general null Lagrangian of lowest order.
pub fn general_null_lagrangian() -> Polynomial {
    use Symbol::*;
    let one = rat(1, 1);
    Polynomial::monomial(one.clone(), &[(C1, 1), (XDot, 1), (X, 1)])
        + Polynomial::monomial(one.clone(), &[(C2, 1), (XDot, 1), (T, 1)])
        + Polynomial::monomial(one.clone(), &[(C2, 1), (X, 1)])
        + Polynomial::monomial(one.clone(), &[(C4, 1), (XDot, 1)])
        + Polynomial::monomial(one, &[(C6, 1)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceSolution {
    /// Values of `C2` and `C4`.
    pub constraints: ConstraintSet,
    /// The constant `C` the induced gauge takes on shell.
    pub constant: Polynomial,
    pub invariant_lagrangian: Polynomial,
    /// Constants among `C0`, `C1`, `C6` that were left symbolic.
    pub free_constants: Vec<Symbol>,
}

/// Derives `C2`, `C4` symbolically from the on-shell constancy of the total
/// induced gauge of `L_s + L_n`, then binds `params`.
pub fn build_invariant_lagrangian(
    params: &InvarianceParams,
) -> Result<InvarianceSolution, InvarianceError> {
    let generic = standard_lagrangian() + general_null_lagrangian();
    let decomposition = decompose(&generic, &BoostContext::symbolic())?;
    let on_shell = on_shell_substitute(
        &decomposition.induced_gauge,
        &OnShellSolution::symbolic(Frame::Primed),
    )?;
    let solved = solve_constancy(&on_shell)?;
    let invariant = solved.constraints.apply(&generic)?;

    let constraints = solved.constraints.map(|p| params.apply(p))?;
    Ok(InvarianceSolution {
        constraints,
        constant: params.apply(&solved.constant)?,
        invariant_lagrangian: params.apply(&invariant)?,
        free_constants: [Symbol::C0, Symbol::C1, Symbol::C6]
            .into_iter()
            .filter(|s| !params.bindings.contains_key(s))
            .collect(),
    })
}

/// Whether the induced gauge must be constant on shell only, or for every trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstancyMode {
    #[default]
    OnShell,
    OffShell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub decomposition: BoostDecomposition,
    /// `boosted − dΦ_G/dt − (input renamed into the target frame)`.
    pub same_form_residual: Polynomial,
    /// The induced gauge along the trajectory (or off shell, the gauge itself).
    pub gauge_on_shell: Polynomial,
    /// Terms that keep the gauge from being constant.
    pub offending_terms: Polynomial,
    /// The constant part `C` of the gauge.
    pub residual_constant: Polynomial,
    pub mode: ConstancyMode,
}

impl InvarianceReport {
    pub fn same_form(&self) -> bool {
        self.same_form_residual.is_zero()
    }

    pub fn gauge_constant(&self) -> bool {
        self.offending_terms.is_zero()
    }

    pub fn passed(&self) -> bool {
        self.same_form() && self.gauge_constant()
    }
}

pub fn verify_invariance(
    l: &Polynomial,
    ctx: &BoostContext,
    sol: &OnShellSolution,
) -> Result<InvarianceReport, InvarianceError> {
    verify_invariance_with(l, ctx, sol, ConstancyMode::OnShell)
}

pub fn verify_invariance_with(
    l: &Polynomial,
    ctx: &BoostContext,
    sol: &OnShellSolution,
    mode: ConstancyMode,
) -> Result<InvarianceReport, InvarianceError> {
    let target = ctx.direction().target();
    if sol.frame != target {
        return Err(InvarianceError::FrameMismatch {
            expected: target,
            found: sol.frame,
        });
    }
    let decomposition = decompose(l, ctx)?;
    let same_form_residual =
        &(&decomposition.boosted - &decomposition.induced_gauge.lagrangian()) - &l.to_frame(target);
    let gauge_on_shell = match mode {
        ConstancyMode::OnShell => on_shell_substitute(&decomposition.induced_gauge, sol)?,
        ConstancyMode::OffShell => decomposition.induced_gauge.phi().clone(),
    };
    let residual_constant = match mode {
        ConstancyMode::OnShell => gauge_on_shell.coefficient_of(Symbol::T, 0),
        ConstancyMode::OffShell => Polynomial::constant(gauge_on_shell.constant_term()),
    };
    let offending_terms = &gauge_on_shell - &residual_constant;
    Ok(InvarianceReport {
        decomposition,
        same_form_residual,
        gauge_on_shell,
        offending_terms,
        residual_constant,
        mode,
    })
}

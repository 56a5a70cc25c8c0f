use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::expr::{ExprError, Polynomial, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("inconsistent constraint: {residual} = 0 cannot hold")]
    Inconsistent {
        equation: Polynomial,
        residual: Polynomial,
    },
    #[error("constraint {equation} = 0 is not linear in the unknown constants")]
    Nonlinear { equation: Polynomial },
    #[error("constraint {equation} = 0 depends on x, its derivatives or t")]
    NotParametric { equation: Polynomial },
    #[error(
        "cannot solve {equation} = 0 for {pivot}: {coefficient} does not divide the remainder"
    )]
    NotDivisible {
        equation: Polynomial,
        pivot: Symbol,
        coefficient: Polynomial,
    },
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Linear equations over the `C` constants, each meaning `equation = 0`,
/// together with their solved form.
///
/// Parameters (`v0`, `u0`, `x0`) act as coefficients. Every equation is solved for
/// the highest-indexed constant it contains; the solved values are fully reduced,
/// so no solved constant appears on any right-hand side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstraintSet {
    equations: Vec<Polynomial>,
    solved: BTreeMap<Symbol, Polynomial>,
}

impl ConstraintSet {
    pub fn empty() -> Self {
        ConstraintSet::default()
    }

    /// Gaussian elimination with the pivot fixed to the highest constant of each equation.
    ///
    /// Equations that reduce to zero are dropped. Division by a parameter
    /// coefficient assumes that parameter is nonzero.
    pub fn solve(equations: impl IntoIterator<Item = Polynomial>) -> Result<Self, ConstraintError> {
        let mut kept = Vec::new();
        let mut solved: BTreeMap<Symbol, Polynomial> = BTreeMap::new();
        for equation in equations {
            if equation.symbols().into_iter().any(Symbol::is_kinematic) {
                return Err(ConstraintError::NotParametric { equation });
            }
            let reduced = equation.substitute_all(&solved)?;
            if reduced.is_zero() {
                continue;
            }
            let Some(pivot) = reduced
                .symbols()
                .into_iter()
                .filter(|s| s.is_constant())
                .max()
            else {
                return Err(ConstraintError::Inconsistent {
                    equation,
                    residual: reduced,
                });
            };
            let linear = reduced.raw_terms().all(|(p, _)| {
                p.iter()
                    .filter(|(s, _)| s.is_constant())
                    .map(|(_, e)| e)
                    .sum::<u32>()
                    <= 1
            });
            if !linear {
                return Err(ConstraintError::Nonlinear { equation });
            }
            let coefficient = reduced.coefficient_of(pivot, 1);
            let remainder = reduced.coefficient_of(pivot, 0);
            let value = (-remainder).exact_div(&coefficient).ok_or_else(|| {
                ConstraintError::NotDivisible {
                    equation: equation.clone(),
                    pivot,
                    coefficient: coefficient.clone(),
                }
            })?;
            for v in solved.values_mut() {
                *v = v.substitute(pivot, &value)?;
            }
            solved.insert(pivot, value);
            kept.push(equation);
        }
        Ok(ConstraintSet {
            equations: kept,
            solved,
        })
    }

    /// The independent equations that were solved, in input order.
    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn solved_form(&self) -> &BTreeMap<Symbol, Polynomial> {
        &self.solved
    }

    pub fn value(&self, symbol: Symbol) -> Option<&Polynomial> {
        self.solved.get(&symbol)
    }

    pub fn len(&self) -> usize {
        self.solved.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solved.is_empty()
    }

    /// Substitutes the solved values into `p`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, ExprError> {
        p.substitute_all(&self.solved)
    }

    /// True when every equation vanishes under the solved form.
    pub fn is_satisfied(&self) -> bool {
        self.equations
            .iter()
            .all(|e| self.apply(e).map(|r| r.is_zero()).unwrap_or(false))
    }

    /// Applies `f` to every equation and solved value (used to bind parameters).
    pub fn map(
        &self,
        mut f: impl FnMut(&Polynomial) -> Result<Polynomial, ExprError>,
    ) -> Result<Self, ExprError> {
        Ok(ConstraintSet {
            equations: self
                .equations
                .iter()
                .map(&mut f)
                .collect::<Result<_, _>>()?,
            solved: self
                .solved
                .iter()
                .map(|(s, v)| Ok((*s, f(v)?)))
                .collect::<Result<_, ExprError>>()?,
        })
    }

    /// `"C5 = C2"`-style lines, ordered by the solved constant.
    pub fn lines(&self) -> Vec<String> {
        self.solved
            .iter()
            .map(|(s, v)| format!("{} = {}", s, v))
            .collect()
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.lines().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn solves_for_highest_constant() {
        let set = ConstraintSet::solve([p("-C3"), p("C2 - C5")]).unwrap();
        assert_eq!(set.to_string(), "{C3 = 0, C5 = C2}");
        assert!(set.is_satisfied());
    }

    #[test]
    fn divides_out_parameter_coefficients() {
        let set = ConstraintSet::solve([p("v0*(C1*(u0 - 1/2*v0) + C2)")]).unwrap();
        assert_eq!(set.value(Symbol::C2).unwrap(), &p("-C1*(u0 - 1/2*v0)"));
    }

    #[test]
    fn back_substitutes_into_earlier_solutions() {
        let set = ConstraintSet::solve([p("C2 - C1"), p("C1 - 3")]).unwrap();
        assert_eq!(set.value(Symbol::C2).unwrap(), &p("3"));
        assert_eq!(set.value(Symbol::C1).unwrap(), &p("3"));
        assert!(set.is_satisfied());
    }

    #[test]
    fn drops_redundant_equations() {
        let set = ConstraintSet::solve([p("C1 - C2"), p("2*C1 - 2*C2")]).unwrap();
        assert_eq!(set.equations().len(), 1);
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn reports_inconsistency_nonlinearity_and_kinematic_terms() {
        assert!(matches!(
            ConstraintSet::solve([p("1")]),
            Err(ConstraintError::Inconsistent { .. })
        ));
        assert!(matches!(
            ConstraintSet::solve([p("C1"), p("C1 + 1")]),
            Err(ConstraintError::Inconsistent { .. })
        ));
        assert!(matches!(
            ConstraintSet::solve([p("C1*C2")]),
            Err(ConstraintError::Nonlinear { .. })
        ));
        assert!(matches!(
            ConstraintSet::solve([p("C1*x")]),
            Err(ConstraintError::NotParametric { .. })
        ));
        assert!(matches!(
            ConstraintSet::solve([p("v0*C2 + u0")]),
            Err(ConstraintError::NotDivisible {
                pivot: Symbol::C2,
                ..
            })
        ));
    }
}

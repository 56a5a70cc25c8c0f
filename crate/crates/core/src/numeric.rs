//! Floating-point cross-checks of the symbolic identities: evaluation along
//! polynomial paths, Gauss-Legendre actions and finite-difference derivatives.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::expr::{Frame, Polynomial, Rational, Symbol};
use crate::galilean::{boost, decompose, BoostContext, GalileanError};
use crate::variational::{euler_lagrange, GaugeFunction, VariationalError};

pub const QUADRATURE_ORDER: usize = 20;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_FD_STEP: f64 = 1e-5;
pub const MAX_PATH_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("symbol `{0}` is not bound")]
    Unbound(Symbol),
    #[error("path coefficients must be finite and at most degree {MAX_PATH_DEGREE}")]
    InvalidPath,
    #[error("finite-difference step must be positive, got {0}")]
    InvalidStep(f64),
    #[error(transparent)]
    Variational(#[from] VariationalError),
    #[error(transparent)]
    Galilean(#[from] GalileanError),
}

/// Trajectory `x(t) = Σ aᵢ tⁱ` in one frame.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Path {
    coeffs: Vec<f64>,
    frame: Frame,
}

impl Path {
    pub fn new(coeffs: Vec<f64>, frame: Frame) -> Result<Self, NumericError> {
        if coeffs.len() > MAX_PATH_DEGREE + 1 || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(NumericError::InvalidPath);
        }
        Ok(Path { coeffs, frame })
    }

    pub fn unprimed(coeffs: Vec<f64>) -> Result<Self, NumericError> {
        Path::new(coeffs, Frame::Unprimed)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// The `k`-th time derivative at `t`.
    pub fn derivative(&self, k: usize, t: f64) -> f64 {
        let mut acc = 0.0;
        for (i, &c) in self.coeffs.iter().enumerate().skip(k).rev() {
            let falling: f64 = ((i - k + 1)..=i).map(|j| j as f64).product();
            acc = acc * t + c * falling;
        }
        acc
    }

    pub fn position(&self, t: f64) -> f64 {
        self.derivative(0, t)
    }

    pub fn velocity(&self, t: f64) -> f64 {
        self.derivative(1, t)
    }

    pub fn acceleration(&self, t: f64) -> f64 {
        self.derivative(2, t)
    }

    /// The same motion seen from a frame moving with velocity `v0`: `x'(t) = x(t) − v0·t`.
    pub fn boosted(&self, v0: f64) -> Path {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < 2 {
            coeffs.resize(2, 0.0);
        }
        coeffs[1] -= v0;
        Path {
            coeffs,
            frame: self.frame.other(),
        }
    }
}

/// Numeric values for constants and parameters.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct BindingSet(BTreeMap<Symbol, f64>);

impl BindingSet {
    pub fn new() -> Self {
        BindingSet::default()
    }

    pub fn with(mut self, symbol: Symbol, value: f64) -> Self {
        self.0.insert(symbol, value);
        self
    }

    pub fn insert(&mut self, symbol: Symbol, value: f64) {
        self.0.insert(symbol, value);
    }

    pub fn insert_rational(&mut self, symbol: Symbol, value: &Rational) {
        self.0.insert(symbol, value.to_f64().unwrap_or(f64::NAN));
    }

    pub fn get(&self, symbol: Symbol) -> Option<f64> {
        self.0.get(&symbol).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, f64)> + '_ {
        self.0.iter().map(|(s, v)| (*s, *v))
    }
}

/// Value of `p` at time `t` with the path supplying its frame's position, velocity and acceleration.
pub fn eval_on_path(
    p: &Polynomial,
    path: &Path,
    bindings: &BindingSet,
    t: f64,
) -> Result<f64, NumericError> {
    let [pos, vel, acc] = path.frame.jet();
    p.eval(|s| {
        if s == Symbol::T {
            Some(t)
        } else if s == pos {
            Some(path.position(t))
        } else if s == vel {
            Some(path.velocity(t))
        } else if s == acc {
            Some(path.acceleration(t))
        } else {
            bindings.get(s)
        }
    })
    .map_err(NumericError::Unbound)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(QUADRATURE_ORDER))
}

/// Fixed-order quadrature of `f` over `[t0, t1]`; exact for polynomials of degree < 40.
pub fn integrate(
    f: impl Fn(f64) -> Result<f64, NumericError>,
    t0: f64,
    t1: f64,
) -> Result<f64, NumericError> {
    let (nodes, weights) = rule();
    let half = 0.5 * (t1 - t0);
    let mid = 0.5 * (t1 + t0);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        sum += w * f(mid + half * x)?;
    }
    Ok(half * sum)
}

/// `∫ L dt` along `path` over `[t0, t1]`.
pub fn action(
    l: &Polynomial,
    path: &Path,
    bindings: &BindingSet,
    t0: f64,
    t1: f64,
) -> Result<f64, NumericError> {
    integrate(|t| eval_on_path(l, path, bindings, t), t0, t1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckOutcome {
    fn new(residual: f64, tolerance: f64) -> Self {
        CheckOutcome {
            passed: residual <= tolerance,
            residual,
            tolerance,
        }
    }
}

/// `|∫ L_n dt − (Φ(t1) − Φ(t0))| ≤ tol` along an arbitrary path.
pub fn check_null_action(
    l_null: &Polynomial,
    phi: &GaugeFunction,
    path: &Path,
    bindings: &BindingSet,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<CheckOutcome, NumericError> {
    let s = action(l_null, path, bindings, t0, t1)?;
    let delta =
        eval_on_path(phi.phi(), path, bindings, t1)? - eval_on_path(phi.phi(), path, bindings, t0)?;
    Ok(CheckOutcome::new((s - delta).abs(), tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoostActionOutcome {
    /// `|S' − S_same − ΔΦ_G|`.
    pub decomposition: CheckOutcome,
    /// `|S' − S|`: the boosted Lagrangian on the boosted path reproduces the original action.
    pub frame_change: CheckOutcome,
}

impl BoostActionOutcome {
    pub fn passed(&self) -> bool {
        self.decomposition.passed && self.frame_change.passed
    }
}

/// Action identity behind the boost decomposition, with `v0` taken from `ctx`
/// (bound numerically through `bindings` when symbolic).
pub fn check_boost_action(
    l: &Polynomial,
    ctx: &BoostContext,
    path: &Path,
    bindings: &BindingSet,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<BoostActionOutcome, NumericError> {
    let v0 = ctx
        .v0()
        .eval(|s| bindings.get(s))
        .map_err(NumericError::Unbound)?;
    let signed_v0 = if ctx.direction().source() == Frame::Unprimed {
        v0
    } else {
        -v0
    };
    let moved = path.boosted(signed_v0);
    let boosted = boost(l, ctx)?;
    let parts = decompose(l, ctx)?;
    let s_boosted = action(&boosted, &moved, bindings, t0, t1)?;
    let s_same = action(&parts.same_form, &moved, bindings, t0, t1)?;
    let phi = parts.induced_gauge.phi();
    let delta = eval_on_path(phi, &moved, bindings, t1)? - eval_on_path(phi, &moved, bindings, t0)?;
    let s_original = action(l, path, bindings, t0, t1)?;
    Ok(BoostActionOutcome {
        decomposition: CheckOutcome::new((s_boosted - s_same - delta).abs(), tol),
        frame_change: CheckOutcome::new((s_boosted - s_original).abs(), tol),
    })
}

/// Compares the symbolic Euler-Lagrange residual with a central difference of
/// `∂L/∂ẋ` along the path, at every sample time.
pub fn fd_check_el(
    l: &Polynomial,
    path: &Path,
    bindings: &BindingSet,
    samples: &[f64],
    h: f64,
    tol: f64,
) -> Result<CheckOutcome, NumericError> {
    if h.is_nan() || h <= 0.0 {
        return Err(NumericError::InvalidStep(h));
    }
    let residual = euler_lagrange(l)?;
    let frame = l.frame().ok().flatten().unwrap_or(Frame::Unprimed);
    let momentum = l.partial(frame.velocity());
    let force = l.partial(frame.position());
    let path = Path {
        coeffs: path.coeffs.clone(),
        frame,
    };
    let mut worst: f64 = 0.0;
    for &t in samples {
        let symbolic = eval_on_path(&residual, &path, bindings, t)?;
        let dp = (eval_on_path(&momentum, &path, bindings, t + h)?
            - eval_on_path(&momentum, &path, bindings, t - h)?)
            / (2.0 * h);
        let numeric = dp - eval_on_path(&force, &path, bindings, t)?;
        worst = worst.max((symbolic - numeric).abs());
    }
    Ok(CheckOutcome::new(worst, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn path_derivatives() {
        let path = Path::unprimed(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(path.position(2.0), 1.0 + 4.0 + 12.0 + 32.0);
        assert_eq!(path.velocity(2.0), 2.0 + 12.0 + 48.0);
        assert_eq!(path.acceleration(2.0), 6.0 + 48.0);
        assert_eq!(path.derivative(4, 2.0), 0.0);
        assert!(Path::unprimed(vec![0.0; 8]).is_err());
        assert!(Path::unprimed(vec![f64::NAN]).is_err());
    }

    #[test]
    fn eval_examples() {
        let b = BindingSet::new().with(Symbol::C1, 1.0);
        let lin = Path::unprimed(vec![0.0, 2.0]).unwrap();
        assert_eq!(eval_on_path(&p("1/2*xdot^2"), &lin, &b, 3.0).unwrap(), 2.0);
        let cubic = Path::unprimed(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(eval_on_path(&p("C1*xdot*x"), &cubic, &b, 1.0).unwrap(), 3.0);
        assert_eq!(
            eval_on_path(&Polynomial::zero(), &cubic, &b, 0.7).unwrap(),
            0.0
        );
        assert_eq!(
            eval_on_path(&p("C2*x"), &cubic, &b, 1.0),
            Err(NumericError::Unbound(Symbol::C2))
        );
    }

    #[test]
    fn quadrature_rule_is_symmetric_and_normalized() {
        let (x, w) = gauss_legendre(QUADRATURE_ORDER);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        for i in 0..QUADRATURE_ORDER {
            assert!((x[i] + x[QUADRATURE_ORDER - 1 - i]).abs() < 1e-15);
        }
        let (x1, w1) = gauss_legendre(1);
        assert!(x1[0].abs() < 1e-15 && (w1[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn action_examples() {
        let b = BindingSet::new()
            .with(Symbol::C6, 1.0)
            .with(Symbol::C1, 1.0);
        let any = Path::unprimed(vec![0.3, 0.1]).unwrap();
        assert!((action(&p("C6"), &any, &b, 0.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        let cubic = Path::unprimed(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((action(&p("C1*xdot*x"), &cubic, &b, 0.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let lin = Path::unprimed(vec![0.0, 2.0]).unwrap();
        assert!((action(&p("1/2*xdot^2"), &lin, &b, 0.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn null_action_examples() {
        let b = BindingSet::new();
        let cubic = Path::unprimed(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        let phi = GaugeFunction::new(p("1/2*x^2")).unwrap();
        let r =
            check_null_action(&p("xdot*x"), &phi, &cubic, &b, 0.0, 1.0, DEFAULT_TOLERANCE).unwrap();
        assert!(r.passed, "{:?}", r);
        let r = check_null_action(
            &Polynomial::zero(),
            &GaugeFunction::zero(),
            &cubic,
            &b,
            0.0,
            1.0,
            0.0,
        )
        .unwrap();
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn boost_action_examples() {
        let b = BindingSet::new().with(Symbol::V0, 1.0);
        let lin = Path::unprimed(vec![0.0, 2.0]).unwrap();
        let r = check_boost_action(
            &p("1/2*xdot^2"),
            &BoostContext::symbolic(),
            &lin,
            &b,
            0.0,
            1.0,
            1e-14,
        )
        .unwrap();
        assert!(r.passed(), "{:?}", r);
        // closed form: S' = 2, S_same = 1/2, ΔΦ_G = v0*x'(1) + v0²/2 = 1 + 1/2
        let zero = BindingSet::new().with(Symbol::V0, 0.0);
        let r = check_boost_action(
            &p("1/2*xdot^2"),
            &BoostContext::symbolic(),
            &lin,
            &zero,
            0.0,
            1.0,
            0.0,
        )
        .unwrap();
        assert!(r.passed());
        assert_eq!(r.frame_change.residual, 0.0);
    }

    #[test]
    fn fd_examples() {
        let b = BindingSet::new();
        let samples = [-0.5, 0.0, 0.25, 1.0];
        let affine = Path::unprimed(vec![1.0, 2.0]).unwrap();
        let r = fd_check_el(
            &p("1/2*xdot^2"),
            &affine,
            &b,
            &samples,
            DEFAULT_FD_STEP,
            1e-9,
        )
        .unwrap();
        assert!(r.passed, "{:?}", r);
        let quad = Path::unprimed(vec![0.0, 0.0, 1.0]).unwrap();
        let r = fd_check_el(&p("1/2*xdot^2"), &quad, &b, &samples, DEFAULT_FD_STEP, 1e-6).unwrap();
        assert!(r.passed, "{:?}", r);
        let b = BindingSet::new()
            .with(Symbol::C1, 0.5)
            .with(Symbol::C2, -0.25);
        let quartic = Path::unprimed(vec![0.1, -0.3, 0.2, 0.5, -0.7]).unwrap();
        let r = fd_check_el(
            &p("C1*xdot*x + C2*(xdot*t + x)"),
            &quartic,
            &b,
            &samples,
            DEFAULT_FD_STEP,
            1e-6,
        )
        .unwrap();
        assert!(r.passed, "{:?}", r);
        assert!(matches!(
            fd_check_el(&p("x"), &quartic, &b, &samples, 0.0, 1e-6),
            Err(NumericError::InvalidStep(_))
        ));
    }
}

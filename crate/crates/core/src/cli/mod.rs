//! Command-line surface. Commands build a [`RunReport`]; `main` prints it and
//! exits with 0 (all checks pass), 1 (a check failed) or 2 (bad input).

mod derivation;
mod report;

use std::collections::BTreeSet;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;

pub use derivation::derivation_report;
pub use report::{Check, Entry, NumericEntry, RunReport, Verdict};

use crate::expr::{
    parse, parse_with, ExprError, Frame, ParseOptions, Polynomial, Rational, Symbol,
};
use crate::galilean::{boost, decompose, BoostContext};
use crate::invariance::{
    build_invariant_lagrangian, general_null_lagrangian, on_shell_substitute, solve_constancy,
    solve_constancy_offshell, standard_lagrangian, verify_invariance_with, ConstancyMode,
    InvarianceParams,
};
use crate::numeric::{
    check_boost_action, check_null_action, fd_check_el, BindingSet, CheckOutcome, DEFAULT_FD_STEP,
    DEFAULT_TOLERANCE,
};
use crate::sampling;
use crate::variational::{
    euler_lagrange, gauge_from_null, is_null, null_conditions, VariationalError,
};

/// Tolerance for the finite-difference Euler-Lagrange comparison.
pub const FD_TOLERANCE: f64 = 1e-6;
/// Random paths drawn per numeric check in `verify`.
pub const VERIFY_SAMPLES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "nullgauge",
    version,
    about = "Null Lagrangians, gauge functions and Galilean invariance in one dimension"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Require the induced gauge to be constant for every trajectory, not only solutions of xddot = 0.
    #[arg(long = "strict-offshell", global = true)]
    pub strict_offshell: bool,
    /// Absolute tolerance for quadrature-based checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Seed for randomized numeric checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Relative frame velocity (symbolic when omitted).
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    pub v0: Option<Rational>,
    /// Initial velocity of the on-shell solution.
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    pub u0: Option<Rational>,
    /// Initial position of the on-shell solution.
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x0: Option<Rational>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            strict_offshell: false,
            tol: DEFAULT_TOLERANCE,
            seed: 0,
            v0: None,
            u0: None,
            x0: None,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Euler-Lagrange expression d/dt(dL/dxdot) - dL/dx.
    El {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Null test and the conditions on C0..C6 that make the Lagrangian null.
    Null {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Gauge function of a null Lagrangian.
    Gauge {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Galilean boost and its split into same-form part plus induced gauge.
    Boost {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Solve the on-shell constancy condition for the null-Lagrangian constants.
    Solve {
        /// `name=value` bindings for C0, C1, C6, u0, x0, v0.
        bindings: Vec<String>,
    },
    /// Check Galilean invariance symbolically and numerically.
    Verify {
        /// `name=value` bindings for constants and parameters.
        bindings: Vec<String>,
        /// Lagrangian to check; defaults to the invariant Lagrangian built from the bindings.
        #[arg(long, allow_hyphen_values = true)]
        lagrangian: Option<String>,
    },
    /// Scripted derivation of the invariant Lagrangian with every step checked.
    Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed expression or argument; exit code 2.
    Parse(String),
    /// The engine rejected a well-formed input; exit code 1.
    Engine(String),
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn engine(e: impl std::fmt::Display) -> CliError {
    CliError::Engine(e.to_string())
}

/// Parses `3/2`, `-2`, `0.125` or `1e-3` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("`{}` is not a rational number", text);
    if let Some((n, d)) = text.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(format!("`{}` has a zero denominator", text));
        }
        return Ok(Rational::new(n, d));
    }
    if let Ok(n) = BigInt::from_str(text) {
        return Ok(Rational::from_integer(n));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    let unsigned = int_part.trim_start_matches(['+', '-']);
    if !digits_ok(unsigned)
        || !digits_ok(frac_part)
        || (unsigned.is_empty() && frac_part.is_empty())
    {
        return Err(bad());
    }
    let negative = int_part.starts_with('-');
    let digits = format!("{}{}", unsigned, frac_part);
    let mut value = Rational::from_integer(BigInt::from_str(&digits).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(10.into());
    for _ in 0..scale.unsigned_abs() {
        if scale > 0 {
            value *= &ten;
        } else {
            value /= &ten;
        }
    }
    Ok(if negative { -value } else { value })
}

/// Parses `name=value` pairs; only constants and parameters may be bound.
pub fn parse_bindings(args: &[String]) -> Result<Vec<(Symbol, Rational)>, CliError> {
    args.iter()
        .map(|arg| {
            let (name, value) = arg
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("expected name=value, got `{}`", arg)))?;
            let symbol = Symbol::from_name(name.trim())
                .ok_or_else(|| CliError::Parse(format!("unknown symbol `{}`", name.trim())))?;
            if symbol.is_kinematic() {
                return Err(CliError::Parse(format!(
                    "`{}` cannot be bound to a number",
                    symbol
                )));
            }
            Ok((symbol, parse_rational(value).map_err(CliError::Parse)?))
        })
        .collect()
}

fn invariance_params(options: &Options, bindings: &[(Symbol, Rational)]) -> InvarianceParams {
    let mut params = InvarianceParams::symbolic();
    for (s, v) in bindings {
        params = params.bind(*s, Polynomial::constant(v.clone()));
    }
    for (s, v) in [
        (Symbol::V0, &options.v0),
        (Symbol::U0, &options.u0),
        (Symbol::X0, &options.x0),
    ] {
        if let Some(v) = v {
            params = params.bind(s, Polynomial::constant(v.clone()));
        }
    }
    params
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let o = &cli.options;
    match &cli.command {
        Command::El { expr } => cmd_el(expr),
        Command::Null { expr } => cmd_null(expr),
        Command::Gauge { expr } => cmd_gauge(expr),
        Command::Boost { expr } => cmd_boost(expr, o),
        Command::Solve { bindings } => cmd_solve(o, &parse_bindings(bindings)?),
        Command::Verify {
            bindings,
            lagrangian,
        } => cmd_verify(o, lagrangian.as_deref(), &parse_bindings(bindings)?),
        Command::Derivation => Ok(derivation_report()),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::El { .. } => "el",
        Command::Null { .. } => "null",
        Command::Gauge { .. } => "gauge",
        Command::Boost { .. } => "boost",
        Command::Solve { .. } => "solve",
        Command::Verify { .. } => "verify",
        Command::Derivation => "derivation",
    }
}

/// Executes `cli` and renders the report; returns `(output, exit code)`.
pub fn run(cli: &Cli) -> (String, i32) {
    let (report, code) = match execute(cli) {
        Ok(report) => {
            let code = if report.passed() { 0 } else { 1 };
            (report, code)
        }
        Err(err) => {
            let (message, code) = match err {
                CliError::Parse(m) => (m, 2),
                CliError::Engine(m) => (m, 1),
            };
            let mut report = RunReport::new(command_name(&cli.command));
            report.check("error", false, Some(message));
            (report, code)
        }
    };
    let output = if cli.options.json {
        report.to_json()
    } else {
        report.to_text()
    };
    (output, code)
}

pub fn cmd_el(expr: &str) -> Result<RunReport, CliError> {
    let l = parse(expr)?;
    let residual = euler_lagrange(&l).map_err(engine)?;
    let mut r = RunReport::new("el");
    r.input("L", expr);
    r.symbolic("L", &l).symbolic("EL(L)", &residual);
    Ok(r)
}

pub fn cmd_null(expr: &str) -> Result<RunReport, CliError> {
    let l = parse(expr)?;
    let test = is_null(&l).map_err(engine)?;
    let mut r = RunReport::new("null");
    r.input("L", expr);
    r.symbolic("L", &l)
        .symbolic("EL(L)", &test.residual)
        .symbolic("null", test.null);
    match null_conditions(&l) {
        Ok(set) => {
            for line in set.lines() {
                r.constraint(line);
            }
            let constrained = set.apply(&l)?;
            let free: BTreeSet<Symbol> = constrained
                .symbols()
                .into_iter()
                .filter(|s| s.is_constant())
                .collect();
            r.symbolic("L under constraints", &constrained);
            r.symbolic(
                "free constants",
                free.iter().map(|s| s.name()).collect::<Vec<_>>().join(", "),
            );
            let null_after = is_null(&constrained).map_err(engine)?.null;
            r.check(
                "constraints make L null",
                set.is_satisfied() && null_after,
                None,
            );
        }
        Err(VariationalError::NotNullable(e)) => {
            r.check("nullable", false, Some(e.to_string()));
        }
        Err(e) => return Err(engine(e)),
    }
    Ok(r)
}

pub fn cmd_gauge(expr: &str) -> Result<RunReport, CliError> {
    let l = parse(expr)?;
    let mut r = RunReport::new("gauge");
    r.input("L", expr);
    r.symbolic("L", &l);
    match gauge_from_null(&l) {
        Ok(phi) => {
            r.symbolic("Phi", &phi);
            r.check("dPhi/dt = L", phi.lagrangian() == l, None);
        }
        Err(e) => {
            r.check("gauge function exists", false, Some(e.to_string()));
        }
    }
    Ok(r)
}

fn boost_context(options: &Options) -> BoostContext {
    match &options.v0 {
        Some(v) => BoostContext::with_velocity(v.clone()),
        None => BoostContext::symbolic(),
    }
}

pub fn cmd_boost(expr: &str, options: &Options) -> Result<RunReport, CliError> {
    let l = parse(expr)?;
    let ctx = boost_context(options);
    let mut r = RunReport::new("boost");
    r.input("L", expr).input("v0", ctx.v0());
    r.symbolic("L", &l);
    let boosted = boost(&l, &ctx).map_err(engine)?;
    r.symbolic("L'", &boosted);
    match decompose(&l, &ctx) {
        Ok(d) => {
            r.symbolic("same form", &d.same_form)
                .symbolic("induced null Lagrangian", &d.induced_null)
                .symbolic("Phi_G", &d.induced_gauge);
            r.check("L' = same form + dPhi_G/dt", d.residual().is_zero(), None);
        }
        Err(e) => {
            r.check("boost decomposes", false, Some(e.to_string()));
        }
    }
    Ok(r)
}

pub fn cmd_solve(
    options: &Options,
    bindings: &[(Symbol, Rational)],
) -> Result<RunReport, CliError> {
    let params = invariance_params(options, bindings);
    let ctx = BoostContext::symbolic();
    let primed = crate::invariance::OnShellSolution::symbolic(Frame::Primed);
    let mut r = RunReport::new("solve");
    for (s, v) in params.bindings() {
        r.input(s.name(), v);
    }
    r.input(
        "mode",
        if options.strict_offshell {
            "off-shell"
        } else {
            "on-shell"
        },
    );

    let ls = standard_lagrangian();
    let ln = general_null_lagrangian();
    let gs = decompose(&ls, &ctx).map_err(engine)?.induced_gauge;
    let gn = decompose(&ln, &ctx).map_err(engine)?.induced_gauge;
    let total = &gs + &gn;
    let bind = |p: &Polynomial| params.apply(p);
    r.symbolic("L_s", &ls).symbolic("L_n", &ln);
    r.symbolic("Phi'_Gs", bind(gs.phi())?)
        .symbolic("Phi'_Gn", bind(gn.phi())?);

    if options.strict_offshell {
        let solved = solve_constancy_offshell(&total).map_err(engine)?;
        for line in solved.constraints.lines() {
            r.constraint(line);
        }
        r.constraint(format!("C = {}", solved.constant));
        let left = solved
            .constraints
            .apply(total.phi())?
            .without_constant_term();
        r.check(
            "gauge constant for every trajectory",
            left.is_zero(),
            Some(left.to_string()),
        );
        return Ok(r);
    }

    let on_shell = on_shell_substitute(&total, &primed).map_err(engine)?;
    r.symbolic("Phi'_Gs + Phi'_Gn on shell", bind(&on_shell)?);
    let solved = solve_constancy(&on_shell).map_err(engine)?;
    for (s, v) in solved.constraints.solved_form() {
        r.constraint(format!("{} = {}", s, bind(v)?));
    }
    r.constraint(format!("C = {}", bind(&solved.constant)?));

    let reduced = solved.constraints.apply(&on_shell)?;
    r.check(
        "gauge sum is independent of t",
        reduced.degree_in(Symbol::T) == 0,
        Some(format!("reduces to {}", bind(&reduced)?)),
    );
    let solution = build_invariant_lagrangian(&params).map_err(engine)?;
    let el = euler_lagrange(&solution.invariant_lagrangian).map_err(engine)?;
    let expected = bind(&euler_lagrange(&ls).map_err(engine)?)?;
    r.symbolic("L", &solution.invariant_lagrangian);
    r.check(
        "EL(L) = C0*xddot",
        el == expected,
        Some(format!("EL(L) = {}", el)),
    );
    Ok(r)
}

/// Binds every constant and parameter in `symbols` not already bound to a
/// seeded unit-scale rational.
fn numeric_bindings(
    symbols: &BTreeSet<Symbol>,
    fixed: &[(Symbol, Rational)],
    seed: u64,
) -> BindingSet {
    let mut rng = sampling::rng(seed);
    let mut b = BindingSet::new();
    for s in Symbol::ALL {
        if s.is_kinematic() {
            continue;
        }
        let drawn = sampling::unit_rational(&mut rng);
        if let Some((_, v)) = fixed.iter().find(|(f, _)| *f == s) {
            b.insert_rational(s, v);
        } else if symbols.contains(&s) {
            b.insert_rational(s, &drawn);
        }
    }
    b
}

pub fn cmd_verify(
    options: &Options,
    lagrangian: Option<&str>,
    bindings: &[(Symbol, Rational)],
) -> Result<RunReport, CliError> {
    let params = invariance_params(options, bindings);
    let mut r = RunReport::new("verify");
    for (s, v) in params.bindings() {
        r.input(s.name(), v);
    }
    r.input(
        "mode",
        if options.strict_offshell {
            "off-shell"
        } else {
            "on-shell"
        },
    );
    r.input("seed", options.seed)
        .input("tol", format!("{:e}", options.tol));

    let (l, null_part) = match lagrangian {
        Some(expr) => {
            r.input("L", expr);
            let all: std::collections::BTreeMap<Symbol, Polynomial> = bindings
                .iter()
                .map(|(s, v)| (*s, Polynomial::constant(v.clone())))
                .chain(params.bindings().iter().map(|(s, v)| (*s, v.clone())))
                .collect();
            (parse(expr)?.substitute_all(&all)?, None)
        }
        None => {
            let solution = build_invariant_lagrangian(&params).map_err(engine)?;
            for (s, v) in solution.constraints.solved_form() {
                r.constraint(format!("{} = {}", s, v));
            }
            r.constraint(format!("C = {}", solution.constant));
            let ls = params.apply(&standard_lagrangian())?;
            let null_part = &solution.invariant_lagrangian - &ls;
            (solution.invariant_lagrangian, Some(null_part))
        }
    };
    r.symbolic("L", &l);

    let ctx = params.boost_context();
    let sol = params.on_shell(Frame::Primed);
    let mode = if options.strict_offshell {
        ConstancyMode::OffShell
    } else {
        ConstancyMode::OnShell
    };
    let report = match verify_invariance_with(&l, &ctx, &sol, mode) {
        Ok(report) => report,
        Err(e) => {
            r.check("boost decomposes", false, Some(e.to_string()));
            return Ok(r);
        }
    };
    r.symbolic("L'", &report.decomposition.boosted)
        .symbolic("Phi_G", &report.decomposition.induced_gauge)
        .symbolic("Phi_G on trajectory", &report.gauge_on_shell)
        .symbolic("C", &report.residual_constant);
    r.check("same form after boost", report.same_form(), None);
    r.check(
        match mode {
            ConstancyMode::OnShell => "induced gauge constant on shell",
            ConstancyMode::OffShell => "induced gauge constant off shell",
        },
        report.gauge_constant(),
        (!report.gauge_constant()).then(|| format!("offending terms {}", report.offending_terms)),
    );
    let el = euler_lagrange(&l).map_err(engine)?;
    let el_boosted = euler_lagrange(&report.decomposition.boosted).map_err(engine)?;
    let equivariant = boost(&el, &ctx).map_err(engine)? == el_boosted;
    r.symbolic("EL(L)", &el);
    r.check("EL(L') = boosted EL(L)", equivariant, None);

    // numeric cross-checks
    let mut symbols = l.symbols();
    symbols.extend(ctx.v0().symbols());
    symbols.extend(report.decomposition.induced_gauge.phi().symbols());
    let mut fixed: Vec<(Symbol, Rational)> = bindings.to_vec();
    for (s, v) in [
        (Symbol::V0, &options.v0),
        (Symbol::U0, &options.u0),
        (Symbol::X0, &options.x0),
    ] {
        if let Some(v) = v {
            fixed.push((s, v.clone()));
        }
    }
    let values = numeric_bindings(&symbols, &fixed, options.seed);
    for (s, v) in values.iter() {
        r.input(&format!("numeric {}", s), v);
    }
    let null_gauge = match &null_part {
        Some(ln) => Some((ln.clone(), gauge_from_null(ln).map_err(engine)?)),
        None => None,
    };

    let mut rng = sampling::rng(options.seed.wrapping_add(1));
    let mut worst = Worst::default();
    let samples = [-0.75, -0.25, 0.0, 0.5, 1.0];
    for _ in 0..VERIFY_SAMPLES {
        let path = sampling::path(&mut rng, 4);
        let (t0, t1) = sampling::interval(&mut rng);
        let b =
            check_boost_action(&l, &ctx, &path, &values, t0, t1, options.tol).map_err(engine)?;
        worst.boost_split.absorb(b.decomposition);
        worst.frame_change.absorb(b.frame_change);
        let v0 = ctx
            .v0()
            .eval(|s| values.get(s))
            .map_err(|s| engine(format!("{} unbound", s)))?;
        let moved = path.boosted(v0);
        let induced = check_null_action(
            &report.decomposition.induced_null,
            &report.decomposition.induced_gauge,
            &moved,
            &values,
            t0,
            t1,
            options.tol,
        )
        .map_err(engine)?;
        worst.induced.absorb(induced);
        if let Some((ln, phi)) = &null_gauge {
            worst.null.absorb(
                check_null_action(ln, phi, &path, &values, t0, t1, options.tol).map_err(engine)?,
            );
        }
        worst.fd.absorb(
            fd_check_el(&l, &path, &values, &samples, DEFAULT_FD_STEP, FD_TOLERANCE)
                .map_err(engine)?,
        );
    }
    let n = VERIFY_SAMPLES;
    r.numeric(
        format!("S' = S_same + dPhi_G ({} paths)", n),
        worst.boost_split.get(options.tol),
    );
    r.numeric(
        format!("S' on boosted path = S ({} paths)", n),
        worst.frame_change.get(options.tol),
    );
    r.numeric(
        format!("induced gauge action ({} paths)", n),
        worst.induced.get(options.tol),
    );
    if null_gauge.is_some() {
        r.numeric(
            format!("null Lagrangian action ({} paths)", n),
            worst.null.get(options.tol),
        );
    }
    r.numeric(
        format!("finite-difference EL ({} paths)", n),
        worst.fd.get(FD_TOLERANCE),
    );
    Ok(r)
}

#[derive(Default)]
struct Worst {
    boost_split: Max,
    frame_change: Max,
    induced: Max,
    null: Max,
    fd: Max,
}

#[derive(Default)]
struct Max(Option<f64>);

impl Max {
    fn absorb(&mut self, o: CheckOutcome) {
        let r = if o.residual.is_nan() {
            f64::INFINITY
        } else {
            o.residual
        };
        self.0 = Some(self.0.map_or(r, |m| m.max(r)));
    }

    fn get(&self, tolerance: f64) -> CheckOutcome {
        let residual = self.0.unwrap_or(0.0);
        CheckOutcome {
            passed: residual <= tolerance,
            residual,
            tolerance,
        }
    }
}

/// Parses a residual-style expression (accelerations allowed).
pub fn parse_residual(text: &str) -> Result<Polynomial, ExprError> {
    parse_with(
        text,
        ParseOptions {
            allow_acceleration: true,
            ..Default::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::rat;

    #[test]
    fn rational_arguments() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), rat(250, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn binding_arguments() {
        let b = parse_bindings(&["v0=3/2".into(), "C1 = -1".into()]).unwrap();
        assert_eq!(b, vec![(Symbol::V0, rat(3, 2)), (Symbol::C1, rat(-1, 1))]);
        assert!(matches!(
            parse_bindings(&["x=1".into()]),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            parse_bindings(&["y=1".into()]),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            parse_bindings(&["v0".into()]),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn null_command_reproduces_conditions() {
        let r = cmd_null("C1*xdot*x + C2*xdot*t + C3*x*t + C4*xdot + C5*x + C6").unwrap();
        assert_eq!(r.constraints, vec!["C3 = 0", "C5 = C2"]);
        assert!(r.passed());
    }

    #[test]
    fn gauge_command() {
        let r = cmd_gauge("C2*(xdot*t + x)").unwrap();
        assert_eq!(r.symbolic[1].value, "C2*x*t");
        assert!(r.passed());
        assert!(!cmd_gauge("1/2*xdot^2").unwrap().passed());
    }

    #[test]
    fn solve_command() {
        let r = cmd_solve(&Options::default(), &[]).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(
            r.constraints,
            vec![
                "C2 = -C1*u0 + 1/2*C1*v0",
                "C4 = -C1*x0 - C0*u0 + 1/2*C0*v0",
                "C = C0*v0*x0"
            ]
        );
    }

    #[test]
    fn verify_command_symbolic_and_numeric() {
        let r = cmd_verify(&Options::default(), None, &[]).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = cmd_verify(&Options::default(), Some("1/2*C0*xdot^2"), &[]).unwrap();
        assert!(!r.passed());
    }
}

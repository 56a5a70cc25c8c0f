//! End-to-end derivation: from the law of inertia to the Galilean invariant
//! Lagrangian, each step printed and checked against its closed form.

use crate::expr::{parse, Frame, Polynomial, Symbol};
use crate::galilean::{decompose, BoostContext};
use crate::invariance::{
    build_invariant_lagrangian, on_shell_substitute, solve_constancy, verify_invariance,
    InvarianceParams, OnShellSolution,
};
use crate::variational::{
    euler_lagrange, gauge_from_null, is_null, null_conditions, GaugeFunction,
};

use super::{parse_residual, RunReport};

/// Literal from the fixed table below; these strings are part of the program.
fn lit(text: &str) -> Polynomial {
    parse(text).unwrap_or_else(|e| panic!("bad literal `{}`: {}", text, e))
}

struct Steps {
    report: RunReport,
    index: usize,
}

impl Steps {
    fn step(&mut self, title: &str, entries: &[(&str, String)], result: Result<bool, String>) {
        self.index += 1;
        for (label, value) in entries {
            self.report
                .symbolic(format!("{:>2}. {}", self.index, label), value);
        }
        let (passed, detail) = match result {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e)),
        };
        self.report
            .check(format!("{:>2}. {}", self.index, title), passed, detail);
    }
}

fn el(l: &Polynomial) -> Result<Polynomial, String> {
    euler_lagrange(l).map_err(|e| e.to_string())
}

fn gauge(l: &Polynomial) -> Result<GaugeFunction, String> {
    gauge_from_null(l).map_err(|e| e.to_string())
}

pub fn derivation_report() -> RunReport {
    let mut s = Steps {
        report: RunReport::new("derivation"),
        index: 0,
    };
    let ctx = BoostContext::symbolic();
    let primed = OnShellSolution::symbolic(Frame::Primed);

    // law of inertia
    let ls = lit("1/2*C0*xdot^2");
    let r = el(&ls);
    s.step(
        "law of inertia: EL(L_s) = C0*xddot, i.e. xddot = 0",
        &[("EL(L_s)", fmt(&r))],
        r.map(|p| p == parse_residual("C0*xddot").expect("literal")),
    );

    // standard Lagrangian is not null
    let t = is_null(&ls).map_err(|e| e.to_string());
    s.step(
        "standard Lagrangian L_s is not a null Lagrangian",
        &[("L_s", ls.to_string())],
        t.map(|t| !t.null),
    );

    // test Lagrangians
    let la = lit("C1*xdot*x + C2*xdot*t + C3*x*t");
    let r = el(&la);
    s.step(
        "test Lagrangian L_a: EL(L_a) = C2 - C3*t",
        &[("L_a", la.to_string()), ("EL(L_a)", fmt(&r))],
        r.map(|p| p == lit("C2 - C3*t")),
    );
    let lb = lit("C4*xdot + C5*x + C6");
    let sum = &la + &lb;
    let conditions = null_conditions(&sum).map_err(|e| e.to_string());
    s.step(
        "test Lagrangian L_b; EL(L_a + L_b) = 0 iff C3 = 0 and C5 = C2",
        &[
            ("L_b", lb.to_string()),
            (
                "null conditions",
                conditions
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_else(|e| e.clone()),
            ),
        ],
        conditions
            .as_ref()
            .map(|c| c.lines() == ["C3 = 0", "C5 = C2"])
            .map_err(|e| e.clone()),
    );

    // null Lagrangian as a sum of partial null Lagrangians
    let partials = [
        lit("C1*xdot*x"),
        lit("C2*(xdot*t + x)"),
        lit("C4*xdot + C6"),
    ];
    let ln = partials.iter().fold(Polynomial::zero(), |acc, p| &acc + p);
    let constrained = conditions
        .as_ref()
        .map_err(|e| e.clone())
        .and_then(|c| c.apply(&sum).map_err(|e| e.to_string()));
    let partials_null = partials
        .iter()
        .map(|p| is_null(p).map(|t| t.null).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>();
    s.step(
        "L_n = L_n1 + L_n2 + L_n3 equals L_a + L_b under the conditions; each part is null",
        &[
            ("L_n1", partials[0].to_string()),
            ("L_n2", partials[1].to_string()),
            ("L_n3", partials[2].to_string()),
            ("L_n", ln.to_string()),
        ],
        constrained.and_then(|c| partials_null.map(|v| c == ln && v.into_iter().all(|b| b))),
    );

    // gauge form of the total Lagrangian
    let total = &ls + &ln;
    let phi_n = gauge(&ln);
    let same_motion = el(&total).and_then(|a| el(&ls).map(|b| a == b));
    s.step(
        "L = L_s + dPhi_n/dt yields the same equation of motion as L_s",
        &[("L", total.to_string())],
        phi_n
            .as_ref()
            .map_err(|e| e.clone())
            .and_then(|phi| same_motion.map(|same| same && &ls + &phi.lagrangian() == total)),
    );

    // partial gauge functions
    let expected_partials = [lit("1/2*C1*x^2"), lit("C2*x*t"), lit("C4*x + C6*t")];
    let got: Result<Vec<GaugeFunction>, String> = partials.iter().map(gauge).collect();
    s.step(
        "partial gauge functions Phi_n1, Phi_n2, Phi_n3",
        &[
            (
                "Phi_n1",
                got.as_ref().map(|g| g[0].to_string()).unwrap_or_default(),
            ),
            (
                "Phi_n2",
                got.as_ref().map(|g| g[1].to_string()).unwrap_or_default(),
            ),
            (
                "Phi_n3",
                got.as_ref().map(|g| g[2].to_string()).unwrap_or_default(),
            ),
        ],
        got.map(|g| g.iter().zip(&expected_partials).all(|(a, b)| a.phi() == b)),
    );

    // explicit gauge function
    let phi_expected = lit("1/2*C1*x^2 + C2*x*t + C4*x + C6*t");
    s.step(
        "explicit gauge function Phi_n = 1/2*C1*x^2 + C2*x*t + C4*x + C6*t",
        &[(
            "Phi_n",
            phi_n
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_else(|e| e.clone()),
        )],
        phi_n
            .as_ref()
            .map(|p| p.phi() == &phi_expected)
            .map_err(|e| e.clone()),
    );

    // boosted Lagrangian
    let ds = decompose(&ls, &ctx).map_err(|e| e.to_string());
    let dn = decompose(&ln, &ctx).map_err(|e| e.to_string());
    let dt = decompose(&total, &ctx).map_err(|e| e.to_string());
    let phi_n_primed = lit("1/2*C1*xp^2 + C2*xp*t + C4*xp + C6*t");
    let nine = (|| -> Result<bool, String> {
        let (ds, dn, dt) = (ds.clone()?, dn.clone()?, dt.clone()?);
        let same_form_gauge = gauge(&dn.same_form)?;
        let rebuilt = &(&ds.same_form + &same_form_gauge.lagrangian())
            + &(&ds.induced_gauge + &dn.induced_gauge).lagrangian();
        Ok(same_form_gauge.phi() == &phi_n_primed && rebuilt == dt.boosted)
    })();
    s.step(
        "L' = L'_s + dPhi'_n/dt + d/dt[Phi'_Gs + Phi'_Gn] with Phi'_n of the same form as Phi_n",
        &[
            (
                "L'",
                dt.as_ref()
                    .map(|d| d.boosted.to_string())
                    .unwrap_or_else(|e| e.clone()),
            ),
            ("Phi'_n", phi_n_primed.to_string()),
        ],
        nine,
    );

    // induced gauges
    let gs_expected = lit("C0*(xp + 1/2*v0*t)*v0");
    s.step(
        "standard induced gauge Phi'_Gs = C0*(xp + 1/2*v0*t)*v0",
        &[(
            "Phi'_Gs",
            ds.as_ref()
                .map(|d| d.induced_gauge.to_string())
                .unwrap_or_else(|e| e.clone()),
        )],
        ds.as_ref()
            .map(|d| d.induced_gauge.phi() == &gs_expected)
            .map_err(|e| e.clone()),
    );
    let gn_expected = lit("(C1*(xp + 1/2*v0*t) + C2*t + C4)*v0*t");
    s.step(
        "null induced gauge Phi'_Gn = [C1*(xp + 1/2*v0*t) + C2*t + C4]*v0*t",
        &[(
            "Phi'_Gn",
            dn.as_ref()
                .map(|d| d.induced_gauge.to_string())
                .unwrap_or_else(|e| e.clone()),
        )],
        dn.as_ref()
            .map(|d| d.induced_gauge.phi() == &gn_expected)
            .map_err(|e| e.clone()),
    );

    // constancy on shell
    let solved = (|| -> Result<_, String> {
        let g = &ds.clone()?.induced_gauge + &dn.clone()?.induced_gauge;
        let on_shell = on_shell_substitute(&g, &primed).map_err(|e| e.to_string())?;
        let solved = solve_constancy(&on_shell).map_err(|e| e.to_string())?;
        Ok((on_shell, solved))
    })();
    let c2_expected = lit("-C1*(u0 - 1/2*v0)");
    let c4_expected = lit("-C0*(u0 - 1/2*v0) - C1*x0");
    let value = |sym: Symbol| {
        solved
            .as_ref()
            .ok()
            .and_then(|(_, s)| s.constraints.value(sym).cloned())
            .unwrap_or_default()
    };
    s.step(
        "on shell x'(t) = (u0 - v0)*t + x0: Phi'_Gs + Phi'_Gn = C forces C2 = -C1*(u0 - 1/2*v0)",
        &[
            (
                "Phi'_Gs + Phi'_Gn on shell",
                solved
                    .as_ref()
                    .map(|(p, _)| p.to_string())
                    .unwrap_or_else(|e| e.clone()),
            ),
            ("C2", value(Symbol::C2).to_string()),
            (
                "C",
                solved
                    .as_ref()
                    .map(|(_, s)| s.constant.to_string())
                    .unwrap_or_default(),
            ),
        ],
        solved
            .as_ref()
            .map(|(_, s)| value(Symbol::C2) == c2_expected && s.constant == lit("C0*v0*x0"))
            .map_err(|e| e.clone()),
    );
    s.step(
        "C4 = -C0*(u0 - 1/2*v0) - C1*x0",
        &[("C4", value(Symbol::C4).to_string())],
        solved
            .as_ref()
            .map(|(_, s)| value(Symbol::C4) == c4_expected && s.constraints.len() == 2)
            .map_err(|e| e.clone()),
    );

    // invariant Lagrangian
    let solution =
        build_invariant_lagrangian(&InvarianceParams::symbolic()).map_err(|e| e.to_string());
    let l_inv = solution
        .as_ref()
        .map(|s| s.invariant_lagrangian.clone())
        .unwrap_or_default();
    let ln_inv = &l_inv - &ls;
    s.step(
        "L = L_s + L_n with C2, C4 bound still gives EL(L) = C0*xddot",
        &[("L", l_inv.to_string())],
        solution
            .as_ref()
            .map_err(|e| e.clone())
            .and_then(|_| el(&l_inv).map(|r| r == parse_residual("C0*xddot").expect("literal"))),
    );
    s.step(
        "L_n with C2, C4 bound is a null Lagrangian",
        &[("L_n", ln_inv.to_string())],
        is_null(&ln_inv).map(|t| t.null).map_err(|e| e.to_string()),
    );

    // invariance
    let report = verify_invariance(&l_inv, &ctx, &primed).map_err(|e| e.to_string());
    s.step(
        "L' = L'_s + L'_n: same form in the primed frame, induced gauge constant C = C0*v0*x0",
        &[
            ("L'_s + L'_n", l_inv.to_frame(Frame::Primed).to_string()),
            (
                "C",
                report
                    .as_ref()
                    .map(|r| r.residual_constant.to_string())
                    .unwrap_or_else(|e| e.clone()),
            ),
        ],
        report
            .as_ref()
            .map(|r| r.passed() && r.residual_constant == lit("C0*v0*x0"))
            .map_err(|e| e.clone()),
    );
    let ln_report = decompose(&ln_inv, &ctx).map_err(|e| e.to_string());
    s.step(
        "L'_n keeps the form of L_n: C1*xp*xpdot + C2*(xpdot*t + xp) + C4*xpdot + C6",
        &[(
            "L'_n",
            ln_report
                .as_ref()
                .map(|d| d.same_form.to_string())
                .unwrap_or_else(|e| e.clone()),
        )],
        ln_report
            .as_ref()
            .map(|d| d.same_form == ln_inv.to_frame(Frame::Primed) && d.residual().is_zero())
            .map_err(|e| e.clone()),
    );

    s.report
}

fn fmt(r: &Result<Polynomial, String>) -> String {
    match r {
        Ok(p) => p.to_string(),
        Err(e) => e.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_seventeen_steps_pass() {
        let r = derivation_report();
        assert_eq!(r.verdict.checks.len(), 17);
        for c in &r.verdict.checks {
            assert!(c.passed, "{} {:?}", c.label, c.detail);
        }
    }
}

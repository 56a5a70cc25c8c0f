use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::symbol::{Frame, Symbol};
use super::ExprError;

pub type Rational = BigRational;

pub const DEFAULT_DEGREE_CAP: u32 = 8;

/// Upper bound on the total degree of any polynomial built by a checked operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCap(pub u32);

impl Default for DegreeCap {
    fn default() -> Self {
        DegreeCap(DEFAULT_DEGREE_CAP)
    }
}

impl DegreeCap {
    fn check(self, degree: u32) -> Result<(), ExprError> {
        if degree > self.0 {
            Err(ExprError::DegreeCapExceeded {
                degree,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector indexed by [`Symbol::index`].
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the highest symbol (`xpddot`) down to the lowest (`C0`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Powers([u32; Symbol::COUNT]);

impl Powers {
    pub fn one() -> Self {
        Powers::default()
    }

    pub fn of(symbol: Symbol, exponent: u32) -> Self {
        let mut p = Powers::default();
        p.0[symbol.index()] = exponent;
        p
    }

    pub fn get(&self, symbol: Symbol) -> u32 {
        self.0[symbol.index()]
    }

    pub fn set(&mut self, symbol: Symbol, exponent: u32) {
        self.0[symbol.index()] = exponent;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Non-zero exponents in symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        Symbol::ALL
            .iter()
            .map(|&s| (s, self.0[s.index()]))
            .filter(|&(_, e)| e > 0)
    }

    pub fn mul(&self, other: &Powers) -> Powers {
        let mut out = self.clone();
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        out
    }

    /// `self / other`, if every exponent of `other` fits.
    pub fn div(&self, other: &Powers) -> Option<Powers> {
        let mut out = self.clone();
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(out)
    }

    /// Splits into (exponents on `keep`, exponents on everything else).
    pub fn split(&self, keep: impl Fn(Symbol) -> bool) -> (Powers, Powers) {
        let mut kept = Powers::default();
        let mut rest = Powers::default();
        for s in Symbol::ALL {
            let e = self.0[s.index()];
            if keep(s) {
                kept.0[s.index()] = e;
            } else {
                rest.0[s.index()] = e;
            }
        }
        (kept, rest)
    }
}

impl Ord for Powers {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Powers {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Powers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(s, e)| (s.name(), e)))
            .finish()
    }
}

/// One term of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub powers: Powers,
}

/// Canonical multivariate polynomial with exact rational coefficients.
///
/// Terms are fully combined and never carry a zero coefficient, so structural
/// equality coincides with equality as polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Powers, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        Polynomial::term(value, Powers::one())
    }

    pub fn integer(value: i64) -> Self {
        Polynomial::constant(Rational::from_integer(value.into()))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Polynomial::constant(rat(n, d))
    }

    pub fn var(symbol: Symbol) -> Self {
        Polynomial::term(Rational::one(), Powers::of(symbol, 1))
    }

    pub fn term(coeff: Rational, powers: Powers) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(powers, coeff);
        }
        Polynomial { terms }
    }

    /// `coeff * Π symbol^exponent`.
    pub fn monomial(coeff: Rational, factors: &[(Symbol, u32)]) -> Self {
        let mut powers = Powers::one();
        for &(s, e) in factors {
            powers.set(s, powers.get(s) + e);
        }
        Polynomial::term(coeff, powers)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut out = Polynomial::zero();
        for m in terms {
            out.add_term(m.powers, m.coeff);
        }
        out
    }

    fn add_term(&mut self, powers: Powers, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(powers) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading (largest) term first.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().rev().map(|(p, c)| Monomial {
            coeff: c.clone(),
            powers: p.clone(),
        })
    }

    pub(crate) fn raw_terms(&self) -> impl DoubleEndedIterator<Item = (&Powers, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<Monomial> {
        self.terms.iter().next_back().map(|(p, c)| Monomial {
            coeff: c.clone(),
            powers: p.clone(),
        })
    }

    pub fn coefficient(&self, powers: &Powers) -> Rational {
        self.terms
            .get(powers)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Powers::one())
    }

    pub fn without_constant_term(&self) -> Polynomial {
        let mut out = self.clone();
        out.terms.remove(&Powers::one());
        out
    }

    /// The polynomial as a bare number, if it has no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Powers::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Powers::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, symbol: Symbol) -> u32 {
        self.terms.keys().map(|p| p.get(symbol)).max().unwrap_or(0)
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.terms.keys().any(|p| p.get(symbol) > 0)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|p| p.iter().map(|(s, _)| s))
            .collect()
    }

    /// The single frame whose dynamic symbols occur, `None` if no dynamic symbol occurs.
    pub fn frame(&self) -> Result<Option<Frame>, ExprError> {
        let frames: BTreeSet<Frame> = self
            .symbols()
            .into_iter()
            .filter_map(Symbol::frame)
            .collect();
        match frames.len() {
            0 => Ok(None),
            1 => Ok(frames.into_iter().next()),
            _ => Err(ExprError::MixedFrame),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }

    /// Product, rejected if its degree exceeds the default cap.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, ExprError> {
        self.mul_capped(other, DegreeCap::default())
    }

    pub fn mul_capped(&self, other: &Polynomial, cap: DegreeCap) -> Result<Polynomial, ExprError> {
        let out = self.mul_unchecked(other);
        cap.check(out.degree())?;
        Ok(out)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                out.add_term(pa.mul(pb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> Result<Polynomial, ExprError> {
        self.pow_capped(exponent, DegreeCap::default())
    }

    pub fn pow_capped(&self, exponent: u32, cap: DegreeCap) -> Result<Polynomial, ExprError> {
        if exponent > 0 {
            cap.check(self.degree().saturating_mul(exponent))?;
        }
        let mut out = Polynomial::one();
        for _ in 0..exponent {
            out = out.mul_unchecked(self);
        }
        Ok(out)
    }

    /// Replaces every occurrence of `symbol` by `replacement`.
    pub fn substitute(
        &self,
        symbol: Symbol,
        replacement: &Polynomial,
    ) -> Result<Polynomial, ExprError> {
        let mut map = BTreeMap::new();
        map.insert(symbol, replacement.clone());
        self.substitute_all(&map)
    }

    /// Simultaneous substitution: replacements are not substituted into each other.
    pub fn substitute_all(
        &self,
        map: &BTreeMap<Symbol, Polynomial>,
    ) -> Result<Polynomial, ExprError> {
        self.substitute_all_capped(map, DegreeCap::default())
    }

    pub fn substitute_all_capped(
        &self,
        map: &BTreeMap<Symbol, Polynomial>,
        cap: DegreeCap,
    ) -> Result<Polynomial, ExprError> {
        let mut power_cache: BTreeMap<(Symbol, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (powers, coeff) in &self.terms {
            let (hit, kept) = powers.split(|s| map.contains_key(&s));
            let mut term = Polynomial::term(coeff.clone(), kept);
            for (s, e) in hit.iter() {
                let factor = match power_cache.get(&(s, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = map[&s].pow_capped(e, DegreeCap(u32::MAX))?;
                        power_cache.insert((s, e), f.clone());
                        f
                    }
                };
                term = term.mul_unchecked(&factor);
            }
            out = out + term;
        }
        cap.check(out.degree())?;
        Ok(out)
    }

    /// Renames symbols; unmapped symbols are kept. The map must be injective
    /// on the symbols that occur.
    pub fn rename(&self, map: impl Fn(Symbol) -> Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (powers, coeff) in &self.terms {
            let mut renamed = Powers::one();
            for (s, e) in powers.iter() {
                let target = map(s);
                renamed.set(target, renamed.get(target) + e);
            }
            out.add_term(renamed, coeff.clone());
        }
        out
    }

    /// Every dynamic symbol re-expressed in `frame` (literal renaming, no transformation).
    pub fn to_frame(&self, frame: Frame) -> Polynomial {
        self.rename(|s| s.in_frame(frame))
    }

    /// Formal partial derivative; all other symbols are independent.
    pub fn partial(&self, symbol: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (powers, coeff) in &self.terms {
            let e = powers.get(symbol);
            if e == 0 {
                continue;
            }
            let mut p = powers.clone();
            p.set(symbol, e - 1);
            out.add_term(p, coeff * Rational::from_integer(e.into()));
        }
        out
    }

    /// Term-by-term antiderivative in `symbol` with zero integration constant.
    pub fn antiderivative(&self, symbol: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (powers, coeff) in &self.terms {
            let e = powers.get(symbol) + 1;
            let mut p = powers.clone();
            p.set(symbol, e);
            out.add_term(p, coeff / Rational::from_integer(e.into()));
        }
        out
    }

    /// Total time derivative along a trajectory of either frame:
    /// `∂p/∂t + ∂p/∂x·ẋ + ∂p/∂ẋ·ẍ` plus the primed analogues.
    ///
    /// # Panics
    ///
    /// If `p` contains an acceleration symbol; third derivatives have no symbol.
    pub fn total_time_derivative(&self) -> Polynomial {
        assert!(
            !self.contains(Symbol::XDDot) && !self.contains(Symbol::XpDDot),
            "total time derivative of an expression containing an acceleration is not representable"
        );
        let mut out = self.partial(Symbol::T);
        for frame in [Frame::Unprimed, Frame::Primed] {
            let [pos, vel, acc] = frame.jet();
            if self.contains(pos) {
                out = out + self.partial(pos).mul_unchecked(&Polynomial::var(vel));
            }
            if self.contains(vel) {
                out = out + self.partial(vel).mul_unchecked(&Polynomial::var(acc));
            }
        }
        out
    }

    /// Groups terms by their exponents on the symbols selected by `keep`.
    ///
    /// Returns `(monomial over the selected symbols, coefficient polynomial in the
    /// remaining symbols)`, leading monomial first.
    pub fn coefficients_in(&self, keep: impl Fn(Symbol) -> bool) -> Vec<(Powers, Polynomial)> {
        let mut groups: BTreeMap<Powers, Polynomial> = BTreeMap::new();
        for (powers, coeff) in &self.terms {
            let (kept, rest) = powers.split(&keep);
            groups
                .entry(kept)
                .or_default()
                .add_term(rest, coeff.clone());
        }
        groups.into_iter().rev().collect()
    }

    /// Coefficient of `symbol^exponent` as a polynomial in the other symbols.
    pub fn coefficient_of(&self, symbol: Symbol, exponent: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (powers, coeff) in &self.terms {
            if powers.get(symbol) == exponent {
                let mut p = powers.clone();
                p.set(symbol, 0);
                out.add_term(p, coeff.clone());
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lead = divisor.leading_term()?;
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some(top) = remainder.leading_term() {
            let powers = top.powers.div(&lead.powers)?;
            let step = Polynomial::term(top.coeff / &lead.coeff, powers);
            remainder = remainder - step.mul_unchecked(divisor);
            quotient = quotient + step;
        }
        Some(quotient)
    }

    /// Numeric value with every symbol looked up through `value`.
    pub fn eval(&self, value: impl Fn(Symbol) -> Option<f64>) -> Result<f64, Symbol> {
        let mut sum = 0.0;
        for (powers, coeff) in &self.terms {
            let mut term = coeff.to_f64().unwrap_or(f64::NAN);
            for (s, e) in powers.iter() {
                let v = value(s).ok_or(s)?;
                term *= v.powi(e as i32);
            }
            sum += term;
        }
        Ok(sum)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        for (p, c) in rhs.terms {
            self.add_term(p, -c);
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }
}

impl From<Symbol> for Polynomial {
    fn from(s: Symbol) -> Self {
        Polynomial::var(s)
    }
}

impl From<Rational> for Polynomial {
    fn from(r: Rational) -> Self {
        Polynomial::constant(r)
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (powers, coeff)) in self.terms.iter().rev().enumerate() {
            let magnitude = coeff.abs();
            match (i, coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if powers.is_one() || !magnitude.is_one() {
                factors.push(fmt_rational(&magnitude));
            }
            for s in Symbol::PRINT_ORDER {
                match powers.get(s) {
                    0 => {}
                    1 => factors.push(s.name().to_string()),
                    e => factors.push(format!("{}^{}", s.name(), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    fn v(s: Symbol) -> Polynomial {
        Polynomial::var(s)
    }

    #[test]
    fn zero_is_empty_and_prints_as_zero() {
        let z = Polynomial::zero();
        assert!(z.is_empty());
        assert_eq!(z.to_string(), "0");
        assert_eq!(&(&v(X) + &v(T)) - &(&v(T) + &v(X)), z);
    }

    #[test]
    fn add_identity_and_difference_of_squares() {
        let p = &v(X) + &v(T);
        assert_eq!(&p + &Polynomial::zero(), p);
        let prod = p.mul(&(&v(X) - &v(T))).unwrap();
        let expected = &v(X).pow(2).unwrap() - &v(T).pow(2).unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "x^2 - t^2");
    }

    #[test]
    fn graded_order_puts_higher_degree_first() {
        let p = &(&v(T) + &Polynomial::one()) + &v(X).mul(&v(T)).unwrap();
        assert_eq!(p.to_string(), "x*t + t + 1");
        let lead = p.leading_term().unwrap();
        assert_eq!(lead.powers.degree(), 2);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let x4 = v(X).pow(4).unwrap();
        assert!(x4.mul(&x4).is_ok());
        let err = x4.mul(&v(X).pow(5).unwrap()).unwrap_err();
        assert_eq!(err, ExprError::DegreeCapExceeded { degree: 9, cap: 8 });
        assert!(x4.mul_capped(&x4, DegreeCap(7)).is_err());
        assert!(v(X).pow(9).is_err());
    }

    #[test]
    fn substitute_binomial() {
        let x2 = v(X).pow(2).unwrap();
        let repl = &v(Xp) + &v(V0).mul(&v(T)).unwrap();
        let got = x2.substitute(X, &repl).unwrap();
        let expected = Polynomial::monomial(rat(1, 1), &[(Xp, 2)])
            + Polynomial::monomial(rat(2, 1), &[(Xp, 1), (V0, 1), (T, 1)])
            + Polynomial::monomial(rat(1, 1), &[(V0, 2), (T, 2)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_velocity_and_absent_symbol() {
        let got = v(XDot).substitute(XDot, &(&v(XpDot) + &v(V0))).unwrap();
        assert_eq!(got, &v(XpDot) + &v(V0));
        assert_eq!(v(T).substitute(X, &v(Xp).pow(3).unwrap()).unwrap(), v(T));
    }

    #[test]
    fn substitute_is_simultaneous() {
        let mut map = BTreeMap::new();
        map.insert(X, v(T));
        map.insert(T, v(X));
        let p = &v(X) + &v(T).pow(2).unwrap();
        assert_eq!(
            p.substitute_all(&map).unwrap(),
            &v(T) + &v(X).pow(2).unwrap()
        );
    }

    #[test]
    fn partial_derivatives() {
        let ls = Polynomial::monomial(rat(1, 2), &[(C0, 1), (XDot, 2)]);
        assert_eq!(ls.partial(XDot), v(C0).mul(&v(XDot)).unwrap());
        let ln1 = Polynomial::monomial(rat(1, 1), &[(C1, 1), (XDot, 1), (X, 1)]);
        assert_eq!(
            ln1.partial(X),
            Polynomial::monomial(rat(1, 1), &[(C1, 1), (XDot, 1)])
        );
        assert!(v(C6).partial(X).is_zero());
    }

    #[test]
    fn total_time_derivative_of_partial_gauges() {
        let phi1 = Polynomial::monomial(rat(1, 2), &[(C1, 1), (X, 2)]);
        assert_eq!(
            phi1.total_time_derivative(),
            Polynomial::monomial(rat(1, 1), &[(C1, 1), (X, 1), (XDot, 1)])
        );
        let phi2 = Polynomial::monomial(rat(1, 1), &[(C2, 1), (X, 1), (T, 1)]);
        assert_eq!(
            phi2.total_time_derivative(),
            Polynomial::monomial(rat(1, 1), &[(C2, 1), (XDot, 1), (T, 1)])
                + Polynomial::monomial(rat(1, 1), &[(C2, 1), (X, 1)])
        );
        let phi3 = v(C6).mul(&v(T)).unwrap() + v(C4).mul(&v(X)).unwrap();
        assert_eq!(
            phi3.total_time_derivative(),
            v(C6) + v(C4).mul(&v(XDot)).unwrap()
        );
        // velocity dependence introduces the acceleration
        assert_eq!(v(XpDot).total_time_derivative(), v(XpDDot));
    }

    #[test]
    #[should_panic(expected = "acceleration")]
    fn total_time_derivative_rejects_accelerations() {
        let _ = v(XDDot).total_time_derivative();
    }

    #[test]
    fn exact_division() {
        let a = &v(V0).mul(&v(C1)).unwrap() + &v(V0).mul(&v(U0)).unwrap();
        assert_eq!(a.exact_div(&v(V0)).unwrap(), &v(C1) + &v(U0));
        assert!(a.exact_div(&v(X0)).is_none());
        let sq = (&v(X) + &v(T)).pow(2).unwrap();
        assert_eq!(sq.exact_div(&(&v(X) + &v(T))).unwrap(), &v(X) + &v(T));
        assert!(Polynomial::one().exact_div(&Polynomial::zero()).is_none());
    }

    #[test]
    fn coefficient_extraction() {
        // v0*(C1*u0 + C2)*t^2 + C0*v0*x0
        let p = Polynomial::monomial(rat(1, 1), &[(V0, 1), (C1, 1), (U0, 1), (T, 2)])
            + Polynomial::monomial(rat(1, 1), &[(V0, 1), (C2, 1), (T, 2)])
            + Polynomial::monomial(rat(1, 1), &[(C0, 1), (V0, 1), (X0, 1)]);
        let groups = p.coefficients_in(|s| s == T);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].0, Powers::of(T, 2));
        assert_eq!(groups[0].1.to_string(), "C1*v0*u0 + C2*v0");
        assert_eq!(p.coefficient_of(T, 0).to_string(), "C0*v0*x0");
    }

    #[test]
    fn frame_detection() {
        assert_eq!(v(T).frame().unwrap(), None);
        assert_eq!(v(XDot).frame().unwrap(), Some(Frame::Unprimed));
        assert_eq!((&v(X) + &v(Xp)).frame(), Err(ExprError::MixedFrame));
        assert_eq!(
            (&v(X) + &v(XDot)).to_frame(Frame::Primed),
            &v(Xp) + &v(XpDot)
        );
    }

    #[test]
    fn printing_signs_and_fractions() {
        let p = Polynomial::monomial(rat(-1, 2), &[(C1, 1), (X, 2)])
            + Polynomial::monomial(rat(-1, 1), &[(C2, 1), (X, 1), (T, 1)])
            + Polynomial::rational(3, 4);
        assert_eq!(p.to_string(), "-1/2*C1*x^2 - C2*x*t + 3/4");
        assert_eq!((-v(X)).to_string(), "-x");
    }

    #[test]
    fn eval_reports_unbound_symbol() {
        let p = &v(X) + &v(C1);
        assert_eq!(p.eval(|s| if s == X { Some(2.0) } else { None }), Err(C1));
        assert_eq!(p.eval(|_| Some(1.5)), Ok(3.0));
    }
}

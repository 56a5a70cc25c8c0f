//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' INT)?
//! base   := RATIONAL | SYMBOL | '(' expr ')'
//! RATIONAL := INT ('/' INT)?
//! ```
//!
//! Unary minus binds looser than `^`, so `-x^2` is `-(x^2)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{DegreeCap, Polynomial, Rational};
use super::symbol::Symbol;
use super::ExprError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParseOptions {
    pub cap: DegreeCap,
    /// Accept `xddot`/`xpddot`; only residuals may contain them.
    pub allow_acceleration: bool,
}

/// Parses a Lagrangian or gauge function into canonical form.
pub fn parse(text: &str) -> Result<Polynomial, ExprError> {
    parse_with(text, ParseOptions::default())
}

pub fn parse_with(text: &str, options: ParseOptions) -> Result<Polynomial, ExprError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        options,
    };
    let out = parser.expr()?;
    match parser.peek() {
        (Tok::End, _) => Ok(out),
        (tok, position) => Err(ExprError::Syntax {
            position,
            message: format!("unexpected {}", tok.describe()),
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{}`", n),
            Tok::Ident(s) => format!("symbol `{}` (implicit multiplication is not supported)", s),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let n: BigInt = text[i..end].parse().expect("digit run");
            out.push((Tok::Int(n), i));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            out.push((Tok::Ident(text[i..end].to_string()), i));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ExprError::Syntax {
                    position: i,
                    message: format!("unexpected character `{}`", other),
                })
            }
        };
        out.push((tok, i));
        chars.next();
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    options: ParseOptions,
}

impl Parser {
    fn peek(&self) -> (&Tok, usize) {
        let (t, p) = &self.tokens[self.pos];
        (t, *p)
    }

    fn bump(&mut self) -> (Tok, usize) {
        let out = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        out
    }

    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.factor()?;
        while let Tok::Star = self.peek().0 {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul_capped(&rhs, self.options.cap)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ExprError> {
        if let Tok::Minus = self.peek().0 {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if let Tok::Caret = self.peek().0 {
            self.bump();
            let (tok, position) = self.bump();
            let Tok::Int(n) = tok else {
                return Err(ExprError::Syntax {
                    position,
                    message: format!("expected an integer exponent, found {}", tok.describe()),
                });
            };
            let cap = self.options.cap.0;
            let exponent = u32::try_from(&n)
                .ok()
                .filter(|&e| e <= cap)
                .ok_or_else(|| ExprError::ExponentOverCap {
                    exponent: n.to_string(),
                    cap,
                    position,
                })?;
            return base.pow_capped(exponent, self.options.cap);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ExprError> {
        let (tok, position) = self.bump();
        match tok {
            Tok::Int(numer) => {
                if let Tok::Slash = self.peek().0 {
                    self.bump();
                    let (tok, dpos) = self.bump();
                    let Tok::Int(denom) = tok else {
                        return Err(ExprError::Syntax {
                            position: dpos,
                            message: format!("expected a denominator, found {}", tok.describe()),
                        });
                    };
                    if denom.is_zero() {
                        return Err(ExprError::DivisionByZero { position: dpos });
                    }
                    return Ok(Polynomial::constant(Rational::new(numer, denom)));
                }
                Ok(Polynomial::constant(Rational::from_integer(numer)))
            }
            Tok::Ident(name) => {
                let symbol = Symbol::from_name(&name).ok_or_else(|| ExprError::UnknownSymbol {
                    name: name.clone(),
                    position,
                })?;
                if symbol.is_acceleration() && !self.options.allow_acceleration {
                    return Err(ExprError::AccelerationInInput { name, position });
                }
                Ok(Polynomial::var(symbol))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (tok, cpos) = self.bump();
                if tok != Tok::RParen {
                    return Err(ExprError::Syntax {
                        position: cpos,
                        message: format!("expected `)`, found {}", tok.describe()),
                    });
                }
                Ok(inner)
            }
            other => Err(ExprError::Syntax {
                position,
                message: format!(
                    "expected a number, symbol or `(`, found {}",
                    other.describe()
                ),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::rat;
    use Symbol::*;

    #[test]
    fn parses_gauge_fragment() {
        let p = parse("C1*xdot*x + C2*(xdot*t + x)").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "C1*x*xdot + C2*xdot*t + C2*x");
    }

    #[test]
    fn parses_zero_and_standard_lagrangian() {
        assert!(parse("0").unwrap().is_empty());
        let ls = parse("1/2*C0*xdot^2").unwrap();
        assert_eq!(ls, Polynomial::monomial(rat(1, 2), &[(C0, 1), (XDot, 2)]));
        assert_eq!(ls.to_string(), "1/2*C0*xdot^2");
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(parse("-x^2").unwrap(), -parse("x^2").unwrap());
        assert_eq!(parse("(-x)^2").unwrap(), parse("x^2").unwrap());
        assert_eq!(
            parse("-1/2*C1").unwrap(),
            Polynomial::monomial(rat(-1, 2), &[(C1, 1)])
        );
        assert_eq!(parse("x*-t").unwrap(), parse("-x*t").unwrap());
        assert_eq!(parse("--x").unwrap(), parse("x").unwrap());
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse(" 1 / 2 *\tC0 * xdot ^ 2 ").unwrap(),
            parse("1/2*C0*xdot^2").unwrap()
        );
    }

    #[test]
    fn rejects_implicit_multiplication() {
        match parse("C1 xdot") {
            Err(ExprError::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn rejects_unknown_symbols_and_accelerations() {
        assert_eq!(
            parse("x + y"),
            Err(ExprError::UnknownSymbol {
                name: "y".into(),
                position: 4
            })
        );
        assert!(matches!(
            parse("C0*xddot"),
            Err(ExprError::AccelerationInInput { position: 3, .. })
        ));
        let opts = ParseOptions {
            allow_acceleration: true,
            ..Default::default()
        };
        assert_eq!(
            parse_with("C0*xddot", opts).unwrap(),
            Polynomial::var(C0).mul(&Polynomial::var(XDDot)).unwrap()
        );
    }

    #[test]
    fn rejects_exponents_over_cap() {
        assert!(matches!(
            parse("x^9"),
            Err(ExprError::ExponentOverCap { position: 2, .. })
        ));
        assert!(matches!(
            parse("x^99999999999999"),
            Err(ExprError::ExponentOverCap { .. })
        ));
        assert!(matches!(
            parse("(x*t)^5"),
            Err(ExprError::DegreeCapExceeded { degree: 10, cap: 8 })
        ));
        assert!(matches!(
            parse("x^4*t^4*xdot"),
            Err(ExprError::DegreeCapExceeded { .. })
        ));
        assert!(parse("x^8").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse(""),
            Err(ExprError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse("(x + t"),
            Err(ExprError::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse("x + "),
            Err(ExprError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse("x ^ t"),
            Err(ExprError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse("x/2"),
            Err(ExprError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse("1/0"),
            Err(ExprError::DivisionByZero { position: 2 })
        ));
        assert!(matches!(
            parse("x $ t"),
            Err(ExprError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("1.5"),
            Err(ExprError::Syntax { position: 1, .. })
        ));
    }
}

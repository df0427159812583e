//! Recursive-descent parser for rational expressions in `x` and for
//! radicand files.
//!
//! Grammar:
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := ("-" | "+") unary | power
//! power   := primary ("^" unary)?
//! primary := INTEGER | "x" | "(" expr ")"
//! ```
//!
//! `^` is right associative and binds tighter than unary minus, so `-x^2`
//! is `-(x^2)`. Its right operand must evaluate to a nonnegative integer.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::arith::rat::rat_bits;
use crate::arith::{Rat, RatFunc};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;
/// Largest numerator or denominator degree of any intermediate value.
pub const MAX_DEGREE: usize = 4096;
/// Limit on the coefficient bit size of a power.
const MAX_CONSTANT_BITS: u64 = 1 << 20;
/// Limit on coefficient bits times degree of an expanded power.
const MAX_EXPANSION_BITS: u64 = 1 << 26;
const MAX_NESTING: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("negative exponent at byte {position}")]
    NegativeExponent { position: usize },
    #[error("exponent at byte {position} is not an integer constant")]
    NonIntegerExponent { position: usize },
    #[error("exponent at byte {position} is too large")]
    ExponentTooLarge { position: usize },
    #[error("expression degree exceeds {MAX_DEGREE}")]
    DegreeTooLarge,
    #[error("division by an expression that is identically zero at byte {position}")]
    DivisionByZeroExpression { position: usize },
    #[error("unsupported variable `{name}` at byte {position}: only `x` is accepted (multivariate input is out of scope)")]
    UnsupportedVariable { name: String, position: usize },
    #[error("parentheses nested too deeply")]
    NestingTooDeep,
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
    #[error("invalid root order {0}: must be an integer at least 2")]
    InvalidRootOrder(String),
    #[error("radicand is identically zero")]
    ZeroRadicand,
    #[error("no radicands in input")]
    EmptyInput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(u8),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Num(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')' => {
                out.push((Tok::Sym(c), i));
                i += 1;
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: i,
                    expected: "a number, `x`, an operator or a parenthesis",
                })
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) {
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, sym: u8) -> bool {
        if *self.peek() == Tok::Sym(sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(ParseError::NestingTooDeep);
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
            check_size(&acc)?;
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if *self.peek() == Tok::Sym(b'/') {
                self.bump();
                let position = self.offset();
                let rhs = self.unary()?;
                acc = acc
                    .checked_div(&rhs)
                    .map_err(|_| ParseError::DivisionByZeroExpression { position })?;
            } else {
                return Ok(acc);
            }
            check_size(&acc)?;
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        self.enter()?;
        let v = if self.eat(b'-') {
            -self.unary()?
        } else if self.eat(b'+') {
            self.unary()?
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(v)
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let position = self.offset();
        let e = self.unary()?;
        let e = e
            .as_constant()
            .filter(|c| c.is_integer())
            .ok_or(ParseError::NonIntegerExponent { position })?;
        if e.is_negative() {
            return Err(ParseError::NegativeExponent { position });
        }
        let e = e
            .to_integer()
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentTooLarge { position })?;
        if base.height_degree() * e as usize > MAX_DEGREE {
            return Err(ParseError::DegreeTooLarge);
        }
        // rough bound on the size of the expanded power
        let bits = base
            .num()
            .coeffs()
            .iter()
            .chain(base.den().coeffs())
            .map(rat_bits)
            .max()
            .unwrap_or(1);
        let terms = (base.height_degree() as u64 * u64::from(e)).max(1);
        if bits * u64::from(e) > MAX_CONSTANT_BITS
            || bits * u64::from(e) * terms > MAX_EXPANSION_BITS
        {
            return Err(ParseError::ExponentTooLarge { position });
        }
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<RatFunc, ParseError> {
        let position = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(RatFunc::constant(Rat::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "x" {
                    Ok(RatFunc::x())
                } else {
                    Err(ParseError::UnsupportedVariable { name, position })
                }
            }
            Tok::Sym(b'(') => {
                self.bump();
                self.enter()?;
                let v = self.expr()?;
                self.depth -= 1;
                if !self.eat(b')') {
                    return Err(ParseError::Syntax {
                        position: self.offset(),
                        expected: "`)`",
                    });
                }
                Ok(v)
            }
            _ => Err(ParseError::Syntax {
                position,
                expected: "a number, `x` or `(`",
            }),
        }
    }
}

fn check_size(v: &RatFunc) -> Result<(), ParseError> {
    if v.height_degree() > MAX_DEGREE {
        Err(ParseError::DegreeTooLarge)
    } else {
        Ok(())
    }
}

/// Parses an expression in `x` into a reduced rational function.
pub fn parse_expr(text: &str) -> Result<RatFunc, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        depth: 0,
    };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::Syntax {
            position: p.offset(),
            expected: "an operator or end of input",
        });
    }
    Ok(v)
}

/// One line of a radicand file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicandSpec {
    pub text: String,
    pub radicand: RatFunc,
    /// Root order, 2 for square roots.
    pub order: u32,
}

impl RadicandSpec {
    /// Parses a single radicand expression, optionally prefixed `root[e]:`.
    pub fn parse(line: &str) -> Result<Self, ParseError> {
        let line = line.trim();
        let (order, text) = match line.strip_prefix("root[") {
            Some(rest) => {
                let (e, expr) = rest.split_once("]:").ok_or(ParseError::Syntax {
                    position: 5,
                    expected: "`]:` after the root order",
                })?;
                let order = e
                    .trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&e| e >= 2)
                    .ok_or_else(|| ParseError::InvalidRootOrder(e.trim().to_string()))?;
                (order, expr.trim())
            }
            None => (2, line),
        };
        let radicand = parse_expr(text)?;
        if radicand.is_zero() {
            return Err(ParseError::ZeroRadicand);
        }
        Ok(RadicandSpec {
            text: text.to_string(),
            radicand,
            order,
        })
    }
}

/// Parses a radicand file: one radicand per line, `#` starts a comment
/// line, blank lines are skipped, and `root[e]:` sets a root order.
pub fn parse_radicand_file(text: &str) -> Result<Vec<RadicandSpec>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let spec = RadicandSpec::parse(trimmed).map_err(|e| ParseError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(spec);
    }
    if out.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    Ok(out)
}

/// Zero check used by callers that accept free-form expressions.
pub fn parse_radicand(text: &str) -> Result<RatFunc, ParseError> {
    let f = parse_expr(text)?;
    if f.is_zero() {
        Err(ParseError::ZeroRadicand)
    } else {
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};
    use crate::arith::UPoly;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UPoly::from_i64s(c))
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_expr("x^2 - 4*x").unwrap(), poly(&[0, -4, 1]));
        assert_eq!(parse_expr("(x-1)*(x-2)").unwrap(), poly(&[2, -3, 1]));
        assert_eq!(parse_expr("-x^2").unwrap(), poly(&[0, 0, -1]));
        assert_eq!(parse_expr("2^3^2").unwrap(), RatFunc::constant(int(512)));
        assert_eq!(parse_expr("1/2").unwrap(), RatFunc::constant(rat(1, 2)));
        assert_eq!(parse_expr("x^(1+1)").unwrap(), poly(&[0, 0, 1]));
        let f = parse_expr("(x-1)/x^2").unwrap();
        assert_eq!(f.num(), &UPoly::from_i64s(&[-1, 1]));
        assert_eq!(f.den(), &UPoly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_expr("x^(-1)"),
            Err(ParseError::NegativeExponent { .. })
        ));
        assert!(matches!(
            parse_expr("x^x"),
            Err(ParseError::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_expr("x^(1/2)"),
            Err(ParseError::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_expr("1/(x-x)"),
            Err(ParseError::DivisionByZeroExpression { .. })
        ));
        assert!(matches!(
            parse_expr("x*y"),
            Err(ParseError::UnsupportedVariable { position: 2, .. })
        ));
        assert!(matches!(
            parse_expr(""),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(parse_expr("(x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_expr("x x"),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_expr("1.5"),
            Err(ParseError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse_expr("x^99999999999"),
            Err(ParseError::ExponentTooLarge { .. })
        ));
        assert!(matches!(
            parse_expr("(x^4000)^4000"),
            Err(ParseError::DegreeTooLarge)
        ));
        assert!(matches!(
            parse_expr(&"(".repeat(10_000)),
            Err(ParseError::NestingTooDeep)
        ));
        assert!(matches!(
            parse_expr(&"-".repeat(10_000)),
            Err(ParseError::NestingTooDeep)
        ));
    }

    #[test]
    fn radicand_files() {
        let specs = parse_radicand_file("x\n4*x+1\nx^2-4*x").unwrap();
        assert_eq!(specs.len(), 3);
        assert!(specs.iter().all(|s| s.order == 2));
        assert_eq!(specs[1].radicand, poly(&[1, 4]));
        assert_eq!(specs[2].radicand, poly(&[0, -4, 1]));

        let specs = parse_radicand_file("root[3]: x*(x-1)*(x-2)").unwrap();
        assert_eq!(specs[0].order, 3);
        assert_eq!(specs[0].radicand, poly(&[0, 2, -3, 1]));

        let specs = parse_radicand_file("# comment\n\nx-1").unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].radicand, poly(&[-1, 1]));

        assert_eq!(
            parse_radicand_file("# only\n\n"),
            Err(ParseError::EmptyInput)
        );
        match parse_radicand_file("x\nx+\n") {
            Err(ParseError::Line { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_radicand_file("root[1]: x") {
            Err(ParseError::Line { line: 1, source }) => {
                assert_eq!(*source, ParseError::InvalidRootOrder("1".into()))
            }
            other => panic!("{other:?}"),
        }
        match parse_radicand_file("x-x") {
            Err(ParseError::Line { source, .. }) => assert_eq!(*source, ParseError::ZeroRadicand),
            other => panic!("{other:?}"),
        }
        // duplicates are kept
        assert_eq!(parse_radicand_file("x\nx").unwrap().len(), 2);
    }

    #[test]
    fn printing_round_trips() {
        for s in ["x^2 - 4*x", "(x + 1/4)/(x^3 - 2)", "-3/7", "(1/3)/(x)"] {
            let f = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&f.to_string()).unwrap(), f);
        }
    }
}

//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | GEN | matrix | const | call | '(' expr ')'
//! GEN    := ('v' | 'y' | 'u' | 'x') INT
//! const  := 'C' | 'QC' | 'gamma' | 'Dirac' | 'I'
//! call   := 'd' '(' expr ')' | 'comm' '(' expr ',' expr ')'
//!         | ('L' | 'iota') '(' INT ',' expr ')' | ('tau' | 'g') '(' INT ')'
//! matrix := '[' row (',' row)* ']'
//! row    := '[' entry (',' entry)* ']'
//! entry  := '-'? INT ('/' INT)?
//! ```

use std::fmt;

use weil_core::Scalar;

use crate::error::ParseError;
use crate::lexer::{tokenize, Pos, Tok, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    V,
    Y,
    U,
    X,
}

impl Gen {
    pub fn letter(self) -> char {
        match self {
            Gen::V => 'v',
            Gen::Y => 'y',
            Gen::U => 'u',
            Gen::X => 'x',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Const {
    /// Curvature of the session's algebra.
    C,
    /// Quantum curvature.
    QC,
    Gamma,
    Dirac,
    /// The unit.
    I,
}

impl Const {
    fn name(self) -> &'static str {
        match self {
            Const::C => "C",
            Const::QC => "QC",
            Const::Gamma => "gamma",
            Const::Dirac => "Dirac",
            Const::I => "I",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Scalar(Scalar),
    Gen(Gen, usize),
    Tau(usize),
    G(usize),
    Matrix(Vec<Vec<Scalar>>),
    Const(Const),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    D(Box<Expr>),
    L(usize, Box<Expr>),
    Iota(usize, Box<Expr>),
}

/// A node and where it starts. Equality ignores positions.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }

    fn precedence(&self) -> u8 {
        match self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 0,
            ExprKind::Mul(..) => 1,
            ExprKind::Neg(_) => 2,
            ExprKind::Pow(..) => 3,
            // p/q binds like a product when it is a fraction
            ExprKind::Scalar(ref s) if !s.is_integer() => 1,
            _ => 4,
        }
    }
}

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Scalar(s) => write!(f, "{s}"),
            ExprKind::Gen(g, i) => write!(f, "{}{i}", g.letter()),
            ExprKind::Tau(i) => write!(f, "tau({i})"),
            ExprKind::G(i) => write!(f, "g({i})"),
            ExprKind::Matrix(rows) => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "[{}]", rows.join(","))
            }
            ExprKind::Const(c) => f.write_str(c.name()),
            ExprKind::Neg(e) => {
                f.write_str("-")?;
                child(f, e, 2)
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                child(f, a, 0)?;
                f.write_str(if matches!(self.kind, ExprKind::Add(..)) { " + " } else { " - " })?;
                child(f, b, 1)
            }
            ExprKind::Mul(a, b) => {
                child(f, a, 1)?;
                f.write_str("*")?;
                child(f, b, 2)
            }
            ExprKind::Pow(e, k) => {
                child(f, e, 4)?;
                write!(f, "^{k}")
            }
            ExprKind::Comm(a, b) => write!(f, "comm({a}, {b})"),
            ExprKind::D(e) => write!(f, "d({e})"),
            ExprKind::L(i, e) => write!(f, "L({i}, {e})"),
            ExprKind::Iota(i, e) => write!(f, "iota({i}, {e})"),
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.expr()?;
    p.expect(Tok::Eof, &["'+'", "'-'", "'*'", "'^'", "end of input"])?;
    Ok(e)
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::Unexpected {
            pos: t.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let t = self.peek().clone();
            let add = match t.tok {
                Tok::Plus => true,
                Tok::Minus => false,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = Box::new(self.term()?);
            let pos = lhs.pos;
            let lhs_box = Box::new(lhs);
            lhs = Expr::new(if add { ExprKind::Add(lhs_box, rhs) } else { ExprKind::Sub(lhs_box, rhs) }, pos);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            let pos = lhs.pos;
            lhs = Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            let pos = self.bump().pos;
            let e = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(e)), pos));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (k, _) = self.int("exponent")?;
        let pos = base.pos;
        Ok(Expr::new(ExprKind::Pow(Box::new(base), k), pos))
    }

    /// An integer token parsed into `T`.
    fn int<T: std::str::FromStr>(&mut self, what: &str) -> Result<(T, Pos), ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(s) => {
                self.bump();
                let v = s.parse().map_err(|_| ParseError::BadNumber {
                    text: s.clone(),
                    reason: format!("{what} too large"),
                    pos: t.pos,
                })?;
                Ok((v, t.pos))
            }
            _ => Err(self.error(&[what])),
        }
    }

    /// `INT ('/' INT)?` as an exact rational.
    fn rational(&mut self) -> Result<(Scalar, Pos), ParseError> {
        let t = self.peek().clone();
        let Tok::Int(num) = &t.tok else {
            return Err(self.error(&["number"]));
        };
        self.bump();
        let mut text = num.clone();
        if self.peek().tok == Tok::Slash {
            self.bump();
            let d = self.peek().clone();
            let Tok::Int(den) = &d.tok else {
                return Err(self.error(&["denominator"]));
            };
            self.bump();
            text = format!("{num}/{den}");
        }
        let s = text.parse::<Scalar>().map_err(|e| ParseError::BadNumber {
            text,
            reason: e.to_string(),
            pos: t.pos,
        })?;
        Ok((s, t.pos))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(_) => {
                let (s, pos) = self.rational()?;
                Ok(Expr::new(ExprKind::Scalar(s), pos))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &["')'", "'+'", "'-'", "'*'"])?;
                Ok(e)
            }
            Tok::LBracket => self.matrix(),
            Tok::Ident(name) => {
                self.bump();
                self.named(name, t.pos)
            }
            _ => Err(self.error(&["number", "generator", "function call", "'('", "matrix"])),
        }
    }

    fn named(&mut self, name: &str, pos: Pos) -> Result<Expr, ParseError> {
        let kind = match name {
            "C" => ExprKind::Const(Const::C),
            "QC" => ExprKind::Const(Const::QC),
            "gamma" => ExprKind::Const(Const::Gamma),
            "Dirac" => ExprKind::Const(Const::Dirac),
            "I" => ExprKind::Const(Const::I),
            "d" => {
                self.open()?;
                let e = self.expr()?;
                self.close()?;
                ExprKind::D(Box::new(e))
            }
            "comm" => {
                self.open()?;
                let a = self.expr()?;
                self.expect(Tok::Comma, &["','"])?;
                let b = self.expr()?;
                self.close()?;
                ExprKind::Comm(Box::new(a), Box::new(b))
            }
            "L" | "iota" => {
                self.open()?;
                let (i, _) = self.int("index")?;
                self.expect(Tok::Comma, &["','"])?;
                let e = Box::new(self.expr()?);
                self.close()?;
                if name == "L" {
                    ExprKind::L(i, e)
                } else {
                    ExprKind::Iota(i, e)
                }
            }
            "tau" | "g" => {
                self.open()?;
                let (i, _) = self.int("index")?;
                self.close()?;
                if name == "tau" {
                    ExprKind::Tau(i)
                } else {
                    ExprKind::G(i)
                }
            }
            _ => match generator(name) {
                Some((g, Ok(i))) => ExprKind::Gen(g, i),
                Some((_, Err(()))) => {
                    return Err(ParseError::BadNumber {
                        text: name.to_string(),
                        reason: "index too large".into(),
                        pos,
                    })
                }
                None => return Err(ParseError::UnknownIdent { name: name.to_string(), pos }),
            },
        };
        Ok(Expr::new(kind, pos))
    }

    fn open(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::LParen, &["'('"]).map(|_| ())
    }

    fn close(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::RParen, &["')'", "'+'", "'-'", "'*'"]).map(|_| ())
    }

    fn matrix(&mut self) -> Result<Expr, ParseError> {
        let pos = self.expect(Tok::LBracket, &["'['"])?.pos;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBracket, &["'['"])?;
            let mut row = Vec::new();
            loop {
                let neg = if self.peek().tok == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let (s, _) = self.rational()?;
                row.push(if neg { -s } else { s });
                if self.peek().tok == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
            self.expect(Tok::RBracket, &["','", "']'"])?;
            rows.push(row);
            if self.peek().tok == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::RBracket, &["','", "']'"])?;
        Ok(Expr::new(ExprKind::Matrix(rows), pos))
    }
}

/// `v3` to `(V, 3)`; the index may be out of range, which is checked later.
fn generator(name: &str) -> Option<(Gen, Result<usize, ()>)> {
    let mut chars = name.chars();
    let g = match chars.next()? {
        'v' => Gen::V,
        'y' => Gen::Y,
        'u' => Gen::U,
        'x' => Gen::X,
        _ => return None,
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((g, digits.parse().map_err(|_| ())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(src: &str) -> ExprKind {
        parse(src).unwrap().kind
    }

    #[test]
    fn sum_of_products() {
        let ExprKind::Add(a, b) = kind("v1*y2 + y2*v1") else { panic!() };
        assert!(matches!(a.kind, ExprKind::Mul(..)));
        assert!(matches!(b.kind, ExprKind::Mul(..)));
    }

    #[test]
    fn commutator_node() {
        let ExprKind::Comm(a, b) = kind("comm(C, tau(1))") else { panic!() };
        assert_eq!(a.kind, ExprKind::Const(Const::C));
        assert_eq!(b.kind, ExprKind::Tau(1));
    }

    #[test]
    fn nested_operators() {
        let ExprKind::D(inner) = kind("d(d(tau(1)))") else { panic!() };
        assert!(matches!(inner.kind, ExprKind::D(_)));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("a").unwrap_err().to_string(), "line 1, column 1: unknown identifier \"a\"");
        assert_eq!(parse("-v1^2").unwrap(), parse("-(v1^2)").unwrap());
        assert_eq!(parse("v1 - v2 - v3").unwrap(), parse("(v1 - v2) - v3").unwrap());
        assert_ne!(parse("v1 - v2 - v3").unwrap(), parse("v1 - (v2 - v3)").unwrap());
        assert_eq!(parse("1/2*u1").unwrap().to_string(), "1/2*u1");
    }

    #[test]
    fn rationals_and_matrices() {
        assert_eq!(kind("3/6"), ExprKind::Scalar(Scalar::ratio(1, 2)));
        let ExprKind::Matrix(rows) = kind("[[1, -1/2], [0, 3]]") else { panic!() };
        assert_eq!(rows[0][1], Scalar::ratio(-1, 2));
        assert!(matches!(parse("1/0").unwrap_err(), ParseError::BadNumber { .. }));
    }

    #[test]
    fn error_positions_and_expectations() {
        let err = parse("d(v1 +\n  )").unwrap_err();
        assert_eq!(err.pos(), Pos { line: 2, col: 3 });
        let ParseError::Unexpected { expected, found, .. } = err else { panic!() };
        assert!(expected.contains(&"generator".to_string()));
        assert_eq!(found, "')'");

        let err = parse("L(v1, v2)").unwrap_err();
        assert_eq!(err.to_string(), "line 1, column 3: expected index, found identifier \"v1\"");
        let err = parse("v1 v2").unwrap_err();
        assert_eq!(err.pos(), Pos { line: 1, col: 4 });
    }

    #[test]
    fn display_round_trip() {
        for src in [
            "v1*y2 + y2*v1",
            "-(v1 + v2)*y1^3",
            "v1 - (v2 - -v3)",
            "comm(C, tau(1)) - d(d(tau(1)))",
            "L(2, iota(1, y1*y2)) + 1/2*[[1,-2/3],[0,1]]",
            "(v1*v2)^2*(y1*(y2*y3))",
            "-1/8 + 1/2*u1^2 - g(2)*x1 ⊗ gamma*Dirac*QC*I",
        ] {
            let e = parse(src).unwrap();
            let again = parse(&e.to_string()).unwrap();
            assert_eq!(e, again, "{src} -> {e}");
            assert_eq!(e.to_string(), again.to_string());
        }
    }
}

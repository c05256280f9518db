//! Polynomial expressions, generator words, pairs and points.
//!
//! Grammar (whitespace, including newlines, is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'x' | 'y' | '(' expr ')'
//! word   := 'id' | letter (['*'] letter)*
//! letter := 'affine' '(' e ',' e ',' e ',' e ';' e ',' e ')'
//!         | 'elemY' '(' e ';' e ')' | 'elemX' '(' e ';' e ')'
//! ```
//!
//! Multiplication is always explicit, so `2x` is rejected. Division is only
//! allowed by nonzero constants.

use std::fmt;

use derivkit::{Automorphism, BPoly, ElementaryMap, Point, Rational, RawEndo};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Largest accepted exponent literal.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        line: usize,
        col: usize,
        found: String,
        expected: Vec<String>,
    },
    Invalid {
        line: usize,
        col: usize,
        message: String,
    },
    /// Well-formed text whose value is unusable, e.g. division by `x`.
    Semantic(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                line,
                col,
                found,
                expected,
            } => {
                write!(f, "line {line}, column {col}: found {found}, expected ")?;
                match expected.as_slice() {
                    [one] => f.write_str(one),
                    many => write!(f, "one of {}", many.join(", ")),
                }
            }
            ParseError::Invalid { line, col, message } => {
                write!(f, "line {line}, column {col}: {message}")
            }
            ParseError::Semantic(message) => f.write_str(message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Span {
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&ch) = chars.peek() {
        let span = Span { line, col };
        if ch == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(digits.parse().expect("ascii digits")), span));
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars
                .peek()
                .filter(|c| c.is_ascii_alphanumeric() || **c == '_')
            {
                ident.push(c);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(ident), span));
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            other => {
                return Err(ParseError::Invalid {
                    line,
                    col,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        col += 1;
        out.push((tok, span));
    }
    out.push((Tok::Eof, Span { line, col }));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    Y,
}

/// Syntax tree of a polynomial expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(BigUint),
    Var(Variable),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Var(_) => 5,
        }
    }

    /// The polynomial this expression denotes.
    pub fn lower(&self) -> Result<BPoly, ParseError> {
        Ok(match self {
            Expr::Num(n) => BPoly::constant(Rational::from_integer(n.clone().into())),
            Expr::Var(Variable::X) => BPoly::x(),
            Expr::Var(Variable::Y) => BPoly::y(),
            Expr::Neg(e) => -e.lower()?,
            Expr::Add(l, r) => l.lower()? + r.lower()?,
            Expr::Sub(l, r) => l.lower()? - r.lower()?,
            Expr::Mul(l, r) => l.lower()? * r.lower()?,
            Expr::Div(l, r) => {
                let divisor = r.lower()?;
                let Some(c) = divisor.as_constant() else {
                    return Err(ParseError::Semantic(format!(
                        "division by the non-constant polynomial {divisor}"
                    )));
                };
                if c.is_zero() {
                    return Err(ParseError::Semantic("division by zero".into()));
                }
                l.lower()?.scale(&c.recip())
            }
            Expr::Pow(base, e) => base.lower()?.pow(*e),
        })
    }
}

struct Wrapped<'a>(&'a Expr, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Var(Variable::X) => f.write_str("x"),
            Expr::Var(Variable::Y) => f.write_str("y"),
            Expr::Neg(e) => write!(f, "-{}", Wrapped(e, 3)),
            Expr::Add(l, r) => write!(f, "{} + {}", Wrapped(l, 1), Wrapped(r, 2)),
            Expr::Sub(l, r) => write!(f, "{} - {}", Wrapped(l, 1), Wrapped(r, 2)),
            Expr::Mul(l, r) => write!(f, "{}*{}", Wrapped(l, 2), Wrapped(r, 3)),
            Expr::Div(l, r) => write!(f, "{}/{}", Wrapped(l, 2), Wrapped(r, 3)),
            Expr::Pow(b, e) => write!(f, "{}^{e}", Wrapped(b, 5)),
        }
    }
}

const OPERATORS: [&str; 5] = ["'+'", "'-'", "'*'", "'/'", "'^'"];
const ATOM_START: [&str; 5] = ["number", "'x'", "'y'", "'('", "'-'"];

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let Span { line, col } = self.span();
        ParseError::Syntax {
            line,
            col,
            found: self.peek().describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Failure right after a complete expression: any operator would also do.
    fn error_after_expr(&self, closing: &[&str]) -> ParseError {
        let expected: Vec<&str> = OPERATORS.iter().chain(closing).copied().collect();
        self.error(&expected)
    }

    fn expect_after_expr(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_after_expr(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let Span { line, col } = self.span();
        match self.bump() {
            Tok::Int(n) => match n.to_u32().filter(|e| *e <= MAX_EXPONENT) {
                Some(e) => Ok(Expr::Pow(Box::new(base), e)),
                None => Err(ParseError::Invalid {
                    line,
                    col,
                    message: format!("exponent {n} exceeds the limit {MAX_EXPONENT}"),
                }),
            },
            _ => {
                self.pos -= 1;
                Err(self.error(&["nonnegative integer exponent"]))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(name) if name == "x" => {
                self.bump();
                Ok(Expr::Var(Variable::X))
            }
            Tok::Ident(name) if name == "y" => {
                self.bump();
                Ok(Expr::Var(Variable::Y))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect_after_expr(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error_after_expr(&["end of input"]))
        }
    }

    fn constant_arg(&mut self, what: &str) -> Result<Rational, ParseError> {
        let e = self.expr()?;
        e.lower()?
            .as_constant()
            .ok_or_else(|| ParseError::Semantic(format!("{what} must be a constant, got {e}")))
    }
}

/// Parses a polynomial expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses and lowers a polynomial in `x` and `y`.
pub fn parse_poly(text: &str) -> Result<BPoly, ParseError> {
    parse_expr(text)?.lower()
}

/// Canonical text of a polynomial; parses back to the same polynomial.
pub fn print_poly(p: &BPoly) -> String {
    p.to_string()
}

/// A `(f, g)` pair written `f; g`.
pub fn parse_pair(text: &str) -> Result<RawEndo, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.expr()?.lower()?;
    p.expect_after_expr(Tok::Semi, "';'")?;
    let g = p.expr()?.lower()?;
    p.finish()?;
    Ok(RawEndo::new(f, g))
}

/// A rational point written `x0, y0`.
pub fn parse_point(text: &str) -> Result<Point, ParseError> {
    let mut p = Parser::new(text)?;
    let x = p.constant_arg("point coordinate")?;
    p.expect_after_expr(Tok::Comma, "','")?;
    let y = p.constant_arg("point coordinate")?;
    p.finish()?;
    Ok(Point::new(x, y))
}

/// Outcome of [`parse_word`]: syntax problems and invalid generators are
/// reported separately.
#[derive(Debug)]
pub enum WordError {
    Parse(ParseError),
    Generator(derivkit::Error),
}

impl From<ParseError> for WordError {
    fn from(e: ParseError) -> Self {
        WordError::Parse(e)
    }
}

/// Parses a generator word such as `elemY(x^2; 1) affine(0,1,1,0; 0,0)`.
pub fn parse_word(text: &str) -> Result<Automorphism, WordError> {
    let mut p = Parser::new(text)?;
    let mut letters = Vec::new();
    if matches!(p.peek(), Tok::Ident(s) if s == "id") {
        p.bump();
        p.finish()?;
        return Ok(Automorphism::identity());
    }
    loop {
        let name = match p.peek() {
            Tok::Ident(s) if matches!(s.as_str(), "affine" | "elemY" | "elemX") => s.clone(),
            Tok::Eof if !letters.is_empty() => break,
            _ if letters.is_empty() => {
                return Err(p.error(&["'id'", "'affine'", "'elemY'", "'elemX'"]).into())
            }
            _ => {
                return Err(p
                    .error(&["'affine'", "'elemY'", "'elemX'", "'*'", "end of input"])
                    .into())
            }
        };
        p.bump();
        if *p.peek() != Tok::LParen {
            return Err(p.error(&["'('"]).into());
        }
        p.bump();
        let letter = match name.as_str() {
            "affine" => {
                let mut m = Vec::new();
                for k in 0..4 {
                    m.push(p.constant_arg("matrix entry")?);
                    let (tok, label) = if k < 3 {
                        (Tok::Comma, "','")
                    } else {
                        (Tok::Semi, "';'")
                    };
                    p.expect_after_expr(tok, label)?;
                }
                let v1 = p.constant_arg("shift")?;
                p.expect_after_expr(Tok::Comma, "','")?;
                let v2 = p.constant_arg("shift")?;
                let [m11, m12, m21, m22]: [Rational; 4] = m.try_into().expect("four entries");
                ElementaryMap::affine([[m11, m12], [m21, m22]], [v1, v2])
            }
            _ => {
                let e = p.expr()?;
                let poly = e.lower()?;
                p.expect_after_expr(Tok::Semi, "';'")?;
                let scale = p.constant_arg("scale")?;
                if name == "elemY" {
                    let q = poly.as_x_poly().ok_or_else(|| {
                        ParseError::Semantic(format!("elemY needs a polynomial in x, got {e}"))
                    })?;
                    ElementaryMap::elem_y(q, scale)
                } else {
                    let q = poly.as_y_poly().ok_or_else(|| {
                        ParseError::Semantic(format!("elemX needs a polynomial in y, got {e}"))
                    })?;
                    ElementaryMap::elem_x(q, scale)
                }
            }
        }
        .map_err(WordError::Generator)?;
        p.expect_after_expr(Tok::RParen, "')'")?;
        letters.push(letter);
        if *p.peek() == Tok::Star {
            p.bump();
        }
    }
    Automorphism::new(letters).map_err(WordError::Generator)
}

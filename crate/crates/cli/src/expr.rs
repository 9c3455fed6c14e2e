//! Expression syntax for elements of `A(Γ, V, μ)`.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary (("*")? unary)*          juxtaposition is multiplication
//! unary    := "-" unary | power
//! power    := primary ("^" exponent)?
//! exponent := "-"? INT | "(" "-"? INT ")"
//! primary  := INT ("/" INT)? | "q" | GEN | "g" "[" ints "]" | "mu" "[" ROOT "]"
//!           | "(" expr ")" | "[" expr "," expr "]" "_c"
//! ints     := "-"? INT ("," "-"? INT)*
//! GEN      := y1 | y2 | y3 | y21 | y32 | y31 | yt32 | yt31 | yt21
//! ROOT     := a GEN name or its file name (a1, a21, at32, ...)
//! ```
//!
//! `q` is the generator ζ_M of the scalar field. Binary operators are left
//! associative and `^` does not chain.

use std::fmt;

use b3lift_core::datum::Root;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Frac(u64, u64),
    Q,
    Gen(Root),
    Group(Vec<i64>),
    Mu(Root),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Comm(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: expected ", self.column)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Underscore,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Comma => "`,`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Underscore => "`_`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const PRIMARY: &[&str] = &["integer", "`q`", "generator", "`g[`", "`mu[`", "`(`", "`[`"];

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse::<u64>().map_err(|_| ParseError {
                column: col,
                found: format!("integer `{text}` (too large)"),
                expected: vec!["integer below 2^64"],
            })?;
            out.push((Tok::Int(n), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '_' => Tok::Underscore,
            other => {
                return Err(ParseError {
                    column: col,
                    found: format!("character `{other}`"),
                    expected: PRIMARY.to_vec(),
                })
            }
        };
        out.push((t, col));
        i += 1;
    }
    out.push((Tok::Eof, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (t, col) = &self.toks[self.pos];
        ParseError { column: *col, found: t.describe(), expected: expected.to_vec() }
    }

    fn expect(&mut self, t: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket)
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
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !self.starts_primary() {
                return Ok(lhs);
            }
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
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
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let k = self.exponent()?;
        if *self.peek() == Tok::Caret {
            return Err(self.error(&["`*`", "`+`", "`-`", "end of input"]));
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) if n <= i64::MAX as u64 => {
                self.bump();
                Ok(if neg { -(n as i64) } else { n as i64 })
            }
            _ => Err(self.error(if neg { &["integer"] } else { &["integer", "`-`"] })),
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let k = self.signed_int()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(k);
        }
        if matches!(self.peek(), Tok::Int(_) | Tok::Minus) {
            return self.signed_int();
        }
        Err(self.error(&["integer", "`-`", "`(`"]))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(m) => {
                            self.bump();
                            Ok(Expr::Frac(n, m))
                        }
                        _ => Err(self.error(&["integer"])),
                    }
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Tok::Ident(name) => {
                let save = self.pos;
                self.bump();
                match name.as_str() {
                    "q" => Ok(Expr::Q),
                    "g" => {
                        self.expect(Tok::LBracket, "`[`")?;
                        let mut v = vec![self.signed_int()?];
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            v.push(self.signed_int()?);
                        }
                        self.expect(Tok::RBracket, "`]` or `,`")?;
                        Ok(Expr::Group(v))
                    }
                    "mu" => {
                        self.expect(Tok::LBracket, "`[`")?;
                        let root = match self.peek().clone() {
                            Tok::Ident(r) => Root::from_name(&r).ok(),
                            _ => None,
                        };
                        let Some(root) = root else {
                            return Err(self.error(&["root name"]));
                        };
                        self.bump();
                        self.expect(Tok::RBracket, "`]`")?;
                        Ok(Expr::Mu(root))
                    }
                    _ => match Root::from_name(&name) {
                        Ok(r) if name.starts_with('y') => Ok(Expr::Gen(r)),
                        _ => {
                            self.pos = save;
                            Err(self.error(PRIMARY))
                        }
                    },
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::Underscore, "`_c`")?;
                match self.peek() {
                    Tok::Ident(s) if s == "c" => {
                        self.bump();
                        Ok(Expr::Comm(Box::new(a), Box::new(b)))
                    }
                    _ => Err(self.error(&["`c`"])),
                }
            }
            _ => Err(self.error(PRIMARY)),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        let mut exp = vec!["`+`", "`-`", "`*`", "end of input"];
        if matches!(p.peek(), Tok::Caret) {
            exp = vec!["`*`", "`+`", "`-`", "end of input"];
        }
        return Err(p.error(&exp));
    }
    Ok(e)
}

// Binding strength: sum 1, product 2, unary minus 3, power 4, primary 5.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn wrap(out: &mut String, e: &Expr, min: u8) {
    if level(e) < min {
        out.push('(');
        write_expr(out, e);
        out.push(')');
    } else {
        write_expr(out, e);
    }
}

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Int(n) => out.push_str(&n.to_string()),
        Expr::Frac(n, m) => out.push_str(&format!("{n}/{m}")),
        Expr::Q => out.push('q'),
        Expr::Gen(r) => out.push_str(r.name()),
        Expr::Group(v) => {
            let parts: Vec<String> = v.iter().map(i64::to_string).collect();
            out.push_str(&format!("g[{}]", parts.join(",")));
        }
        Expr::Mu(r) => out.push_str(&format!("mu[{}]", r.file_name())),
        Expr::Neg(x) => {
            out.push('-');
            wrap(out, x, 3);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            wrap(out, a, 1);
            out.push_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " });
            wrap(out, b, 2);
        }
        Expr::Mul(a, b) => {
            wrap(out, a, 2);
            out.push('*');
            wrap(out, b, 3);
        }
        Expr::Pow(a, k) => {
            wrap(out, a, 5);
            out.push_str(&format!("^{k}"));
        }
        Expr::Comm(a, b) => {
            out.push('[');
            write_expr(out, a);
            out.push_str(", ");
            write_expr(out, b);
            out.push_str("]_c");
        }
    }
}

/// Canonical text: minimal parentheses, ` + `/` - ` between terms, `*` between factors.
pub fn print(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e);
    s
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

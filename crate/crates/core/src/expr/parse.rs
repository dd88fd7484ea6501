use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ncpoly::Generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    Hbar,
    Kappa,
    C,
}

/// Parse tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(BigRational),
    Imag,
    Constant(Constant),
    Generator(Generator),
    Q,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Tensor(Box<Expr>, Box<Expr>),
    Commutator(Box<Expr>, Box<Expr>),
    Coproduct(Box<Expr>),
    Antipode(Box<Expr>),
    Counit(Box<Expr>),
    Pairing(Box<Expr>, Box<Expr>),
    Action(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Generators named anywhere in the tree.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let Expr::Generator(g) = e {
                out.push(*g);
            }
        });
        out
    }

    /// Whether the tree uses a pairing or an action.
    pub fn uses_duality(&self) -> bool {
        let mut found = false;
        self.walk(&mut |e| found |= matches!(e, Expr::Pairing(..) | Expr::Action(..)));
        found
    }

    fn walk(&self, f: &mut impl FnMut(&Expr)) {
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            f(e);
            match e {
                Expr::Neg(a) | Expr::Pow(a, _) | Expr::Coproduct(a) | Expr::Antipode(a) | Expr::Counit(a) => {
                    stack.push(a)
                }
                Expr::Add(a, b)
                | Expr::Sub(a, b)
                | Expr::Mul(a, b)
                | Expr::Div(a, b)
                | Expr::Tensor(a, b)
                | Expr::Commutator(a, b)
                | Expr::Pairing(a, b)
                | Expr::Action(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                _ => {}
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Lt,
    Gt,
    Bar,
    Act,
    Otimes,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Lt => "<",
            Tok::Gt => ">",
            Tok::Bar => "|",
            Tok::Act => "|>",
            Tok::Otimes => "⊗",
            _ => "",
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Number(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket | Tok::Lt)
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let ch = chars[i];
        let (l0, c0) = (line, col);
        let mut adv = 1;
        let tok = match ch {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' if chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') => {
                adv = 3;
                Some(Tok::Otimes)
            }
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '<' => Some(Tok::Lt),
            '>' => Some(Tok::Gt),
            '⊗' => Some(Tok::Otimes),
            '|' if chars.get(i + 1) == Some(&'>') => {
                adv = 2;
                Some(Tok::Act)
            }
            '|' => Some(Tok::Bar),
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i + adv < chars.len() && (chars[i + adv].is_ascii_digit() || chars[i + adv] == '.') {
                    adv += 1;
                }
                let text: String = chars[start..start + adv].iter().collect();
                Some(Tok::Number(parse_decimal(&text).ok_or_else(|| Error::Syntax {
                    line: l0,
                    column: c0,
                    message: format!("malformed number `{text}`"),
                    expected: vec!["number".into()],
                })?))
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i + adv < chars.len() && (chars[i + adv].is_alphanumeric() || chars[i + adv] == '_') {
                    adv += 1;
                }
                Some(Tok::Ident(chars[start..start + adv].iter().collect()))
            }
            c => {
                return Err(Error::Syntax {
                    line: l0,
                    column: c0,
                    message: format!("unexpected character `{c}`"),
                    expected: ATOM_START.iter().map(|s| s.to_string()).collect(),
                })
            }
        };
        if let Some(tok) = tok {
            out.push(Spanned { tok, line: l0, column: c0 });
        }
        i += adv;
        col += adv;
    }
    out.push(Spanned { tok: Tok::End, line, column: col });
    Ok(out)
}

fn parse_decimal(text: &str) -> Option<BigRational> {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() || frac.contains('.') {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = BigInt::from(10).pow(frac.len() as u32);
    Some(BigRational::new(num, den))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

/// Parses one expression.
///
/// Precedence from loosest: `|>` (right-assoc), `+ -`, `⊗` / `(x)`,
/// products (juxtaposition, `*`, `/`), unary `-`, `^`.
pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.action()?;
    if p.peek() != &Tok::End {
        return Err(p.error("unexpected trailing input", &["+", "-", "⊗", "|>", "end of input"]));
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: &str, expected: &[&str]) -> Error {
        let s = &self.toks[self.pos];
        Error::Syntax {
            line: s.line,
            column: s.column,
            message: format!("{message}, found {}", s.tok.describe()),
            expected: expected.iter().map(|e| e.to_string()).collect(),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == &t {
            self.bump();
            Ok(())
        } else {
            Err(self.error("unexpected token", &[t.symbol()]))
        }
    }

    fn action(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        if self.peek() == &Tok::Act {
            self.bump();
            let rhs = self.action()?;
            return Ok(Expr::Action(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.tensor()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        while self.peek() == &Tok::Otimes {
            self.bump();
            lhs = Expr::Tensor(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr> {
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
                t if t.starts_atom() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == &Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != &Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let paren = self.peek() == &Tok::LParen;
        if paren {
            self.bump();
        }
        let neg = self.peek() == &Tok::Minus;
        if neg {
            self.bump();
        }
        let n = match self.bump() {
            Tok::Number(r) if r.is_integer() => i64::try_from(r.to_integer()).map_err(|_| Error::ExponentOverflow)?,
            _ => {
                self.pos -= 1;
                return Err(self.error("exponent must be an integer", &["integer", "-"]));
            }
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn call(&mut self, f: fn(Box<Expr>) -> Expr) -> Result<Expr> {
        self.expect(Tok::LParen)?;
        let inner = self.action()?;
        self.expect(Tok::RParen)?;
        Ok(f(Box::new(inner)))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Number(r) => {
                self.bump();
                Ok(Expr::Number(r))
            }
            Tok::LParen => {
                self.bump();
                let e = self.action()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let a = self.action()?;
                self.expect(Tok::Comma)?;
                let b = self.action()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            Tok::Lt => {
                self.bump();
                let a = self.sum()?;
                self.expect(Tok::Bar)?;
                let b = self.sum()?;
                self.expect(Tok::Gt)?;
                Ok(Expr::Pairing(Box::new(a), Box::new(b)))
            }
            Tok::Ident(name) => {
                let next_is_paren = self.toks.get(self.pos + 1).is_some_and(|s| s.tok == Tok::LParen);
                match name.as_str() {
                    "D" if next_is_paren => {
                        self.bump();
                        self.call(Expr::Coproduct)
                    }
                    "S" if next_is_paren => {
                        self.bump();
                        self.call(Expr::Antipode)
                    }
                    "eps" if next_is_paren => {
                        self.bump();
                        self.call(Expr::Counit)
                    }
                    "i" => {
                        self.bump();
                        Ok(Expr::Imag)
                    }
                    "hbar" => {
                        self.bump();
                        Ok(Expr::Constant(Constant::Hbar))
                    }
                    "kappa" => {
                        self.bump();
                        Ok(Expr::Constant(Constant::Kappa))
                    }
                    "c" => {
                        self.bump();
                        Ok(Expr::Constant(Constant::C))
                    }
                    "q" => {
                        self.bump();
                        Ok(Expr::Q)
                    }
                    other => match Generator::from_name(other) {
                        Some(g) => {
                            self.bump();
                            Ok(Expr::Generator(g))
                        }
                        None => Err(self.error(&format!("unknown symbol `{other}`"), ATOM_START)),
                    },
                }
            }
            _ => Err(self.error("expected an operand", ATOM_START)),
        }
    }
}

const ATOM_START: &[&str] =
    &["number", "i", "hbar", "kappa", "c", "generator", "q", "(", "[", "<", "D(", "S(", "eps(", "-"];

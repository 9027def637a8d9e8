//! Expression syntax.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | primary
//! primary := literal | name "(" expr ("," expr)* ")" | "(" expr ")"
//! ```
//!
//! A literal is an integer, a finite decimal, or `a/b` written without
//! spaces, so `1/2` is the rational one half while `1 / 2` is a division.
//! A minus sign directly in front of a literal folds into it.

use cauchy_reals::expr::Expr;
use cauchy_reals::Rational;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{name} takes {expected} argument(s), got {found} (at {position})")]
    Arity { name: String, expected: usize, found: usize, position: usize },
    #[error("unknown function {name} at {position}")]
    UnknownFunction { name: String, position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Literal(Rational),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'/' => Some(Token::Slash),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(token) = simple {
            tokens.push((start, token));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == b'.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            let mut end = i;
            let integral = !text[start..end].contains('.');
            // a tight `a/b` with a nonzero integer denominator is one literal
            if integral && i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let denominator = &text[i + 1..j];
                let is_decimal = j < bytes.len() && bytes[j] == b'.';
                if !is_decimal && denominator.bytes().any(|b| b != b'0') {
                    end = j;
                    i = j;
                }
            }
            let literal = text[start..end]
                .parse::<Rational>()
                .map_err(|_| syntax(start, format!("malformed number {:?}", &text[start..end])))?;
            tokens.push((start, Token::Literal(literal)));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push((start, Token::Name(text[start..i].to_string())));
        } else {
            let ch = text[start..].chars().next().unwrap_or('?');
            return Err(syntax(start, format!("unexpected character {ch:?}")));
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(at, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::add(lhs, self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    lhs = Expr::mul(lhs, self.unary()?);
                }
                Some(Token::Slash) => {
                    self.bump();
                    lhs = Expr::div(lhs, self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            if let Some(Token::Literal(q)) = self.peek() {
                let q = -q;
                self.bump();
                return Ok(Expr::Lit(q));
            }
            return Ok(Expr::neg(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Literal(q)) => Ok(Expr::Lit(q)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Some(Token::Name(name)) => self.call(name, at),
            Some(_) => Err(syntax(at, "expected a number, a function call or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn call(&mut self, name: String, at: usize) -> Result<Expr, ParseError> {
        let arity = match name.as_str() {
            "min" | "max" => 2,
            "abs" | "recip" | "sqrt" => 1,
            _ => return Err(ParseError::UnknownFunction { name, position: at }),
        };
        self.expect(Token::LParen, "'(' after function name")?;
        let mut args = vec![self.expr()?];
        while self.peek() == Some(&Token::Comma) {
            self.bump();
            args.push(self.expr()?);
        }
        self.expect(Token::RParen, "')' closing the argument list")?;
        if args.len() != arity {
            return Err(ParseError::Arity { name, expected: arity, found: args.len(), position: at });
        }
        let mut args = args.into_iter();
        let mut next = || args.next().expect("arity checked");
        Ok(match name.as_str() {
            "min" => Expr::min(next(), next()),
            "max" => Expr::max(next(), next()),
            "abs" => Expr::abs(next()),
            "recip" => Expr::recip(next()),
            _ => Expr::sqrt(next()),
        })
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser { tokens: lex(text)?, pos: 0, end: text.len() };
    let e = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

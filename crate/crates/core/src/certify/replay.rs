//! Independent re-verification of certificates.
//!
//! The replay checker never looks at the certifier's expression trees. It
//! reparses the printed text of every check and evaluates it with its own
//! exact evaluator, so a certificate passes only if what it says is true.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::certificate::{Certificate, Verdict};
use super::expr::{Expr, Rel};
use crate::rational::{floor_int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("cannot parse check `{text}`: {message}")]
    Parse { text: String, message: String },
    #[error("cannot evaluate `{text}`: {message}")]
    Eval { text: String, message: String },
    #[error("check does not hold: `{text}`")]
    Failed { text: String },
    #[error("verdict {0} carries no checked justification")]
    Unjustified(Verdict),
}

/// Re-verifies every check of a certificate from its printed form.
pub fn replay_certificate(cert: &Certificate) -> Result<(), ReplayError> {
    let texts: Vec<String> = cert
        .justifications
        .iter()
        .flat_map(|j| j.checks.iter().map(|c| c.to_string()))
        .collect();
    if cert.verdict != Verdict::Unknown && texts.is_empty() {
        return Err(ReplayError::Unjustified(cert.verdict));
    }
    texts.iter().try_for_each(|t| replay_check(t))
}

/// Parses and evaluates one printed check.
pub fn replay_check(text: &str) -> Result<(), ReplayError> {
    let (lhs, rel, rhs) = parse_check(text)?;
    let eval_err = |message: String| ReplayError::Eval {
        text: text.to_string(),
        message,
    };
    let l = evaluate(&lhs).map_err(eval_err)?;
    let r = evaluate(&rhs).map_err(eval_err)?;
    let holds = match rel {
        Rel::Ge => l >= r,
        Rel::Gt => l > r,
        Rel::Le => l <= r,
        Rel::Lt => l < r,
        Rel::Eq => l == r,
        Rel::Ne => l != r,
    };
    if holds {
        Ok(())
    } else {
        Err(ReplayError::Failed {
            text: text.to_string(),
        })
    }
}

pub fn evaluate(e: &Expr) -> Result<Rational, String> {
    Ok(match e {
        Expr::Rat(r) => r.clone(),
        Expr::Add(a, b) => evaluate(a)? + evaluate(b)?,
        Expr::Sub(a, b) => evaluate(a)? - evaluate(b)?,
        Expr::Mul(a, b) => evaluate(a)? * evaluate(b)?,
        Expr::Div(a, b) => {
            let d = evaluate(b)?;
            if d.is_zero() {
                return Err("division by zero".into());
            }
            evaluate(a)? / d
        }
        Expr::Abs(a) => evaluate(a)?.abs(),
        Expr::Floor(a) => Rational::from_integer(floor_int(&evaluate(a)?)),
        Expr::Gcd(a, b) => Rational::from_integer(integer(a)?.gcd(&integer(b)?)),
        Expr::Mod(a, b) => {
            let d = integer(b)?;
            if d.is_zero() {
                return Err("mod by zero".into());
            }
            Rational::from_integer(integer(a)?.mod_floor(&d.abs()))
        }
    })
}

fn integer(e: &Expr) -> Result<BigInt, String> {
    let v = evaluate(e)?;
    if !v.is_integer() {
        return Err(format!("{v} is not an integer"));
    }
    Ok(v.to_integer())
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    /// An integer, or a `p/q` literal written without spaces.
    Num(Rational),
    Ident(String),
    Op(char),
    Rel(Rel),
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let s: String = chars[start..i].iter().collect();
            let r = parse_rational(&s).map_err(|_| format!("bad number {s}"))?;
            out.push(Token::Num(r));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
            continue;
        }
        for rel in Rel::ALL {
            let sym: Vec<char> = rel.symbol().chars().collect();
            if chars[i..].starts_with(&sym) {
                out.push(Token::Rel(rel));
                i += sym.len();
                continue 'outer;
            }
        }
        if "+-*/(),".contains(c) {
            out.push(Token::Op(c));
            i += 1;
            continue;
        }
        return Err(format!("unexpected character `{c}` at offset {i}"));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_op(&mut self, c: char) -> Result<(), String> {
        if self.eat_op(c) {
            Ok(())
        } else {
            Err(format!("expected `{c}` at token {}", self.pos))
        }
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = acc + self.term()?;
            } else if self.eat_op('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = acc * self.unary()?;
            } else if self.eat_op('/') {
                acc = acc / self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, String> {
        if self.eat_op('-') {
            let inner = self.unary()?;
            return Ok(Expr::int(0) - inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Rat(n))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                // `(-3)` and `(-1/2)` are literals
                if let [Token::Op('-'), Token::Num(n), Token::Op(')'), ..] =
                    &self.tokens[self.pos..]
                {
                    let e = Expr::Rat(-n.clone());
                    self.pos += 3;
                    return Ok(e);
                }
                let e = self.expr()?;
                self.expect_op(')')?;
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                self.expect_op('(')?;
                let a = self.expr()?;
                let e = match name.as_str() {
                    "abs" => a.abs(),
                    "floor" => a.floor(),
                    "gcd" | "mod" => {
                        self.expect_op(',')?;
                        let b = self.expr()?;
                        if name == "gcd" {
                            Expr::gcd(a, b)
                        } else {
                            Expr::modulo(a, b)
                        }
                    }
                    _ => return Err(format!("unknown function `{name}`")),
                };
                self.expect_op(')')?;
                Ok(e)
            }
            other => Err(format!("unexpected token {other:?} at {}", self.pos)),
        }
    }
}

/// Parses `lhs rel rhs`.
pub fn parse_check(text: &str) -> Result<(Expr, Rel, Expr), ReplayError> {
    let err = |message: String| ReplayError::Parse {
        text: text.to_string(),
        message,
    };
    let tokens = tokenize(text).map_err(err)?;
    let rels: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| matches!(t, Token::Rel(_)))
        .map(|(i, _)| i)
        .collect();
    let [at] = rels[..] else {
        return Err(err(format!("expected one relation, found {}", rels.len())));
    };
    let Token::Rel(rel) = tokens[at] else {
        unreachable!()
    };
    let side = |toks: &[Token]| -> Result<Expr, String> {
        let mut p = Parser {
            tokens: toks.to_vec(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != toks.len() {
            return Err(format!("trailing input at token {}", p.pos));
        }
        Ok(e)
    };
    let lhs = side(&tokens[..at]).map_err(err)?;
    let rhs = side(&tokens[at + 1..]).map_err(err)?;
    Ok((lhs, rel, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn evaluates_printed_checks() {
        replay_check("abs(2 * (1/2) - 0) >= 1").unwrap();
        replay_check("mod(7, 3) = 1").unwrap();
        replay_check("mod((-7), 3) = 2").unwrap();
        replay_check("gcd(3, 4) = 1").unwrap();
        replay_check("floor((-3/2)) = (-2)").unwrap();
        replay_check("1 - (2 - 3) = 2").unwrap();
        replay_check("4 / 2 / 2 = 1").unwrap();
        assert!(matches!(
            replay_check("abs(4 * (3/5) - 3) >= 1"),
            Err(ReplayError::Failed { .. })
        ));
        assert!(matches!(
            replay_check("1 / 0 = 1"),
            Err(ReplayError::Eval { .. })
        ));
        assert!(matches!(
            replay_check("gcd((1/2), 3) = 1"),
            Err(ReplayError::Eval { .. })
        ));
        assert!(matches!(
            replay_check("1 + 1"),
            Err(ReplayError::Parse { .. })
        ));
        assert!(matches!(
            replay_check("1 < 2 < 3"),
            Err(ReplayError::Parse { .. })
        ));
        assert!(matches!(
            replay_check("sqrt(4) = 2"),
            Err(ReplayError::Parse { .. })
        ));
    }

    #[test]
    fn printed_trees_reparse_to_the_same_value() {
        let e = Expr::int(1) / (Expr::rat(&ratio(-1, 2)) * Expr::int(3))
            - Expr::modulo(Expr::int(-7), Expr::int(4)).abs();
        let printed = e.to_string();
        let (lhs, _, _) = parse_check(&format!("{printed} = 0")).unwrap();
        assert_eq!(evaluate(&lhs).unwrap(), evaluate(&e).unwrap());
        assert_eq!(evaluate(&e).unwrap(), ratio(-2, 3) - int(1));
    }

    #[test]
    fn unjustified_verdicts_are_rejected() {
        let mut cert = Certificate::unknown("nothing");
        replay_certificate(&cert).unwrap();
        cert.verdict = Verdict::Excellent;
        assert_eq!(
            replay_certificate(&cert),
            Err(ReplayError::Unjustified(Verdict::Excellent))
        );
    }
}

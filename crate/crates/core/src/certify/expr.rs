//! Arithmetic expressions and inequalities carried by certificates.
//!
//! A [`Check`] prints as plain text such as `abs(2 * (1/2) - 0) >= 1`. That
//! text is what gets serialized, and the replay checker parses it back, so
//! the printer must produce something whose value does not depend on how the
//! reader resolves precedence. Non-integer and negative literals are always
//! parenthesized and binary operands are parenthesized when needed.

use std::fmt;
use std::ops;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rat(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Abs(Box<Expr>),
    /// Greatest common divisor of two integers.
    Gcd(Box<Expr>, Box<Expr>),
    Floor(Box<Expr>),
    /// Euclidean remainder of two integers.
    Mod(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Rat(int(n))
    }

    pub fn rat(r: &Rational) -> Expr {
        Expr::Rat(r.clone())
    }

    pub fn abs(self) -> Expr {
        Expr::Abs(Box::new(self))
    }

    pub fn floor(self) -> Expr {
        Expr::Floor(Box::new(self))
    }

    pub fn gcd(a: Expr, b: Expr) -> Expr {
        Expr::Gcd(Box::new(a), Box::new(b))
    }

    pub fn modulo(a: Expr, b: Expr) -> Expr {
        Expr::Mod(Box::new(a), Box::new(b))
    }

    pub fn ge(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Ge, rhs)
    }

    pub fn gt(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Gt, rhs)
    }

    pub fn le(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Le, rhs)
    }

    pub fn lt(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Lt, rhs)
    }

    pub fn eq(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Eq, rhs)
    }

    pub fn ne(self, rhs: Expr) -> Check {
        Check::new(self, Rel::Ne, rhs)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            _ => 3,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rat(r) => {
                if r.is_integer() && !r.is_negative() {
                    write!(f, "{r}")
                } else {
                    write!(f, "({r})")
                }
            }
            // left-associative: the right operand of `-` and `/` binds tighter
            Expr::Add(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_operand(f, 1)
            }
            Expr::Sub(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str(" - ")?;
                b.fmt_operand(f, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_operand(f, 2)?;
                f.write_str(" * ")?;
                b.fmt_operand(f, 2)
            }
            Expr::Div(a, b) => {
                a.fmt_operand(f, 2)?;
                f.write_str(" / ")?;
                b.fmt_operand(f, 3)
            }
            Expr::Abs(a) => write!(f, "abs({a})"),
            Expr::Gcd(a, b) => write!(f, "gcd({a}, {b})"),
            Expr::Floor(a) => write!(f, "floor({a})"),
            Expr::Mod(a, b) => write!(f, "mod({a}, {b})"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Ge,
    Gt,
    Le,
    Lt,
    Eq,
    Ne,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Ge => ">=",
            Rel::Gt => ">",
            Rel::Le => "<=",
            Rel::Lt => "<",
            Rel::Eq => "=",
            Rel::Ne => "!=",
        }
    }

    /// Longest symbols first, so `>=` is not read as `>`.
    pub const ALL: [Rel; 6] = [Rel::Ge, Rel::Le, Rel::Ne, Rel::Gt, Rel::Lt, Rel::Eq];
}

/// An instantiated inequality `lhs rel rhs` over exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub lhs: Expr,
    pub rel: Rel,
    pub rhs: Expr,
}

impl Check {
    pub fn new(lhs: Expr, rel: Rel, rhs: Expr) -> Self {
        Self { lhs, rel, rhs }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel.symbol(), self.rhs)
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Check {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let (lhs, rel, rhs) =
            super::replay::parse_check(&text).map_err(serde::de::Error::custom)?;
        Ok(Check { lhs, rel, rhs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn printing() {
        let e = (Expr::int(2) * Expr::rat(&ratio(1, 2)) - Expr::int(0)).abs();
        assert_eq!(e.ge(Expr::int(1)).to_string(), "abs(2 * (1/2) - 0) >= 1");
        let e = Expr::int(1) - (Expr::int(2) - Expr::int(3));
        assert_eq!(e.to_string(), "1 - (2 - 3)");
        let e = Expr::int(1) / (Expr::int(2) * Expr::int(3));
        assert_eq!(e.to_string(), "1 / (2 * 3)");
        let e = (Expr::int(1) + Expr::int(2)) * Expr::int(-3);
        assert_eq!(e.to_string(), "(1 + 2) * (-3)");
        let e = Expr::modulo(Expr::int(7), Expr::int(3)).eq(Expr::int(1));
        assert_eq!(e.to_string(), "mod(7, 3) = 1");
        let e = Expr::gcd(Expr::int(3), Expr::int(4)).ne(Expr::int(2));
        assert_eq!(e.to_string(), "gcd(3, 4) != 2");
    }
}

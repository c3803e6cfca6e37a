//! Parameter expressions: rational arithmetic over named parameters.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := rational | ident | '-' factor | '(' expr ')'
//! ```
//!
//! A rational literal is `p` or `p/q` written without spaces; `1 / 2` is a
//! division. Negation of a literal folds into the literal, so printing and
//! re-parsing any expression yields the same tree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamExpr {
    Lit(Rational),
    Var(String),
    Neg(Box<ParamExpr>),
    Add(Box<ParamExpr>, Box<ParamExpr>),
    Sub(Box<ParamExpr>, Box<ParamExpr>),
    Mul(Box<ParamExpr>, Box<ParamExpr>),
    Div(Box<ParamExpr>, Box<ParamExpr>),
}

/// A parse failure at a 1-based column of the expression text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprSyntaxError {
    pub column: usize,
    pub message: String,
}

/// Evaluation failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Unbound(String),
    DivisionByZero,
}

impl ParamExpr {
    pub fn lit(r: Rational) -> Self {
        ParamExpr::Lit(r)
    }

    pub fn parse(text: &str) -> Result<Self, ExprSyntaxError> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error(format!("unexpected {:?}", p.chars[p.pos])));
        }
        Ok(e)
    }

    /// Parameter names in first-occurrence-independent sorted order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            ParamExpr::Lit(_) => {}
            ParamExpr::Var(v) => {
                out.insert(v.clone());
            }
            ParamExpr::Neg(x) => x.collect_vars(out),
            ParamExpr::Add(a, b) | ParamExpr::Sub(a, b) | ParamExpr::Mul(a, b) | ParamExpr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn eval(&self, env: &BTreeMap<String, Rational>) -> Result<Rational, EvalError> {
        Ok(match self {
            ParamExpr::Lit(r) => r.clone(),
            ParamExpr::Var(v) => env.get(v).cloned().ok_or_else(|| EvalError::Unbound(v.clone()))?,
            ParamExpr::Neg(x) => -x.eval(env)?,
            ParamExpr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            ParamExpr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            ParamExpr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            ParamExpr::Div(a, b) => {
                let d = b.eval(env)?;
                let inv = d.recip().ok_or(EvalError::DivisionByZero)?;
                a.eval(env)? * inv
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            ParamExpr::Add(..) | ParamExpr::Sub(..) => 1,
            ParamExpr::Mul(..) | ParamExpr::Div(..) => 2,
            ParamExpr::Neg(_) => 3,
            ParamExpr::Lit(r) if r.is_negative() => 3,
            ParamExpr::Lit(_) | ParamExpr::Var(_) => 4,
        }
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &ParamExpr, paren: bool| {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        let binary = |f: &mut fmt::Formatter<'_>, a: &ParamExpr, op: &str, b: &ParamExpr, prec: u8| {
            // Left-associative: the right operand needs parentheses at equal
            // precedence to keep the tree shape.
            wrap(f, a, a.precedence() < prec)?;
            write!(f, " {op} ")?;
            wrap(f, b, b.precedence() <= prec)
        };
        match self {
            ParamExpr::Lit(r) => write!(f, "{r}"),
            ParamExpr::Var(v) => f.write_str(v),
            ParamExpr::Neg(x) => {
                f.write_str("-")?;
                wrap(f, x, x.precedence() < 3)
            }
            ParamExpr::Add(a, b) => binary(f, a, "+", b, 1),
            ParamExpr::Sub(a, b) => binary(f, a, "-", b, 1),
            ParamExpr::Mul(a, b) => binary(f, a, "*", b, 2),
            ParamExpr::Div(a, b) => binary(f, a, "/", b, 2),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: String) -> ExprSyntaxError {
        ExprSyntaxError {
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamExpr, ExprSyntaxError> {
        let mut left = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let right = self.term()?;
            left = if c == '+' {
                ParamExpr::Add(Box::new(left), Box::new(right))
            } else {
                ParamExpr::Sub(Box::new(left), Box::new(right))
            };
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<ParamExpr, ExprSyntaxError> {
        let mut left = self.factor()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let right = self.factor()?;
            left = if c == '*' {
                ParamExpr::Mul(Box::new(left), Box::new(right))
            } else {
                ParamExpr::Div(Box::new(left), Box::new(right))
            };
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<ParamExpr, ExprSyntaxError> {
        match self.peek() {
            None => Err(self.error("unexpected end of expression".into())),
            Some('-') => {
                self.pos += 1;
                Ok(match self.factor()? {
                    ParamExpr::Lit(r) => ParamExpr::Lit(-r),
                    other => ParamExpr::Neg(Box::new(other)),
                })
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(ParamExpr::Lit(self.literal())),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                Ok(ParamExpr::Var(self.chars[start..self.pos].iter().collect()))
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
        }
    }

    fn digits(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().expect("ascii digits")
    }

    /// `p` or `p/q`; a zero `q` is left for the division operator so that
    /// it surfaces as a bind-time division by zero.
    fn literal(&mut self) -> Rational {
        let numer = self.digits();
        let slash = self.pos;
        if self.chars.get(slash) == Some(&'/') && self.chars.get(slash + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let denom = self.digits();
            if !denom.is_zero() {
                return Rational::from_bigints(numer, denom).expect("nonzero denominator");
            }
            self.pos = slash;
        }
        Rational::from(numer)
    }
}

//! The small integer expression language used in catalog rows.
//!
//! Grammar:
//!
//! ```text
//! conds  := cond (',' cond)*
//! cond   := expr cmp expr
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := unary ('^' factor)?
//! unary  := '-' unary | atom
//! atom   := INT | 'n' | 'p' | 'legendre' '(' expr ')' | '(' expr ')'
//! ```

use crate::arith::legendre_valuation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Var {
    N,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BinOp {
    Add,
    Sub,
    Mul,
    Pow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Expr {
    Int(i128),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Legendre(Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Cmp {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
    Ne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Condition {
    lhs: Expr,
    cmp: Cmp,
    rhs: Expr,
}

/// Variable bindings for evaluation. An unbound variable makes the
/// surrounding condition false and the surrounding value an error.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Env {
    pub n: Option<u64>,
    pub p: Option<u64>,
}

impl Expr {
    pub(crate) fn eval(&self, env: &Env) -> Result<Option<i128>> {
        let overflow = || Error::Overflow("catalog expression");
        Ok(Some(match self {
            Expr::Int(v) => *v,
            Expr::Var(Var::N) => match env.n {
                Some(n) => i128::from(n),
                None => return Ok(None),
            },
            Expr::Var(Var::P) => match env.p {
                Some(p) => i128::from(p),
                None => return Ok(None),
            },
            Expr::Neg(e) => match e.eval(env)? {
                Some(v) => v.checked_neg().ok_or_else(overflow)?,
                None => return Ok(None),
            },
            Expr::Bin(op, a, b) => {
                let (Some(a), Some(b)) = (a.eval(env)?, b.eval(env)?) else {
                    return Ok(None);
                };
                match op {
                    BinOp::Add => a.checked_add(b),
                    BinOp::Sub => a.checked_sub(b),
                    BinOp::Mul => a.checked_mul(b),
                    BinOp::Pow => u32::try_from(b).ok().and_then(|e| a.checked_pow(e)),
                }
                .ok_or_else(overflow)?
            }
            Expr::Legendre(e) => {
                let (Some(m), Some(p)) = (e.eval(env)?, env.p) else {
                    return Ok(None);
                };
                let m = u64::try_from(m)
                    .map_err(|_| Error::InvalidInput(format!("legendre of negative {m}")))?;
                i128::from(legendre_valuation(m, p)?)
            }
        }))
    }
}

impl Condition {
    pub(crate) fn holds(&self, env: &Env) -> Result<bool> {
        let (Some(a), Some(b)) = (self.lhs.eval(env)?, self.rhs.eval(env)?) else {
            return Ok(false);
        };
        Ok(match self.cmp {
            Cmp::Le => a <= b,
            Cmp::Lt => a < b,
            Cmp::Ge => a >= b,
            Cmp::Gt => a > b,
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i128),
    Ident(String),
    Op(&'static str),
}

fn tokenize(src: &str) -> std::result::Result<Vec<Tok>, String> {
    const OPS: [&str; 13] = [
        "<=", ">=", "==", "!=", "<", ">", "+", "-", "*", "^", "(", ")", ",",
    ];
    let mut out = Vec::new();
    let mut rest = src.trim_start();
    while !rest.is_empty() {
        let c = rest.chars().next().unwrap();
        if c.is_ascii_digit() {
            let end = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            let v = rest[..end]
                .parse()
                .map_err(|_| format!("integer literal too large: {}", &rest[..end]))?;
            out.push(Tok::Int(v));
            rest = &rest[end..];
        } else if c.is_ascii_alphabetic() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            out.push(Tok::Ident(rest[..end].to_string()));
            rest = &rest[end..];
        } else if let Some(op) = OPS.iter().find(|op| rest.starts_with(**op)) {
            out.push(Tok::Op(op));
            rest = &rest[op.len()..];
        } else {
            return Err(format!("unexpected character '{c}'"));
        }
        rest = rest.trim_start();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Op(o)) if *o == op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: &str) -> std::result::Result<(), String> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(format!("expected '{op}'"))
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat("+") {
                BinOp::Add
            } else if self.eat("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.factor()?;
        while self.eat("*") {
            lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> std::result::Result<Expr, String> {
        let base = self.unary()?;
        if self.eat("^") {
            // right associative
            let exp = self.factor()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn unary(&mut self) -> std::result::Result<Expr, String> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> std::result::Result<Expr, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "n" => Ok(Expr::Var(Var::N)),
                    "p" => Ok(Expr::Var(Var::P)),
                    "legendre" => {
                        self.expect("(")?;
                        let arg = self.expr()?;
                        self.expect(")")?;
                        Ok(Expr::Legendre(Box::new(arg)))
                    }
                    other => Err(format!("unknown identifier '{other}'")),
                }
            }
            Some(Tok::Op("(")) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn cmp(&mut self) -> std::result::Result<Cmp, String> {
        for (op, cmp) in [
            ("<=", Cmp::Le),
            (">=", Cmp::Ge),
            ("==", Cmp::Eq),
            ("!=", Cmp::Ne),
            ("<", Cmp::Lt),
            (">", Cmp::Gt),
        ] {
            if self.eat(op) {
                return Ok(cmp);
            }
        }
        Err("expected a comparison".into())
    }

    fn done(&self) -> std::result::Result<(), String> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(format!("trailing input at {t:?}")),
        }
    }
}

pub(crate) fn parse_expr(src: &str) -> std::result::Result<Expr, String> {
    let mut parser = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = parser.expr()?;
    parser.done()?;
    Ok(e)
}

pub(crate) fn parse_conditions(src: &str) -> std::result::Result<Vec<Condition>, String> {
    let mut parser = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let mut out = Vec::new();
    loop {
        let lhs = parser.expr()?;
        let cmp = parser.cmp()?;
        let rhs = parser.expr()?;
        out.push(Condition { lhs, cmp, rhs });
        if !parser.eat(",") {
            break;
        }
    }
    parser.done()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, n: u64, p: u64) -> i128 {
        let env = Env {
            n: Some(n),
            p: Some(p),
        };
        parse_expr(src).unwrap().eval(&env).unwrap().unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(eval("n*(n^2-1)", 5, 3), 120);
        assert_eq!(eval("(p-1)^2+1", 0, 5), 17);
        assert_eq!(eval("2^3^2", 0, 0), 512);
        assert_eq!(eval("-3+p", 0, 7), 4);
        assert_eq!(
            eval("7^2*11^2*13*19*31", 0, 0),
            7 * 7 * 11 * 11 * 13 * 19 * 31
        );
        assert_eq!(eval("legendre(2*n-1)", 4, 5), 1);
    }

    #[test]
    fn conditions() {
        let conds = parse_conditions("n<=(p-1)^2+1, p>=3").unwrap();
        let env = Env {
            n: Some(17),
            p: Some(5),
        };
        assert!(conds.iter().all(|c| c.holds(&env).unwrap()));
        let env = Env {
            n: Some(18),
            p: Some(5),
        };
        assert!(!conds[0].holds(&env).unwrap());
        // unbound variables make a condition false
        assert!(!conds[1].holds(&Env::default()).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expr("n +").is_err());
        assert!(parse_expr("q").is_err());
        assert!(parse_expr("n $ 2").is_err());
        assert!(parse_conditions("n").is_err());
        assert!(parse_expr("(n").is_err());
    }
}

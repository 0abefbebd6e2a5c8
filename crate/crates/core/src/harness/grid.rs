//! Parameter grids such as `s=1..omega,l=3..n+1,k=2`.
//!
//! Each entry is `name=lo..hi` (inclusive) or `name=value`. Endpoints are
//! integer expressions over `+ - * /` (division floors) and parentheses, whose
//! atoms are integers, parameters bound earlier in the same grid, graph
//! invariants (`n`, `m`, `omega`, `delta`, `maxdeg`), or `@name` for a
//! parameter of the construction that produced the graph.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::HarnessError;
use crate::error::AnalysisError;
use crate::verdicts::Params;

pub const INVARIANTS: [&str; 5] = ["n", "m", "omega", "delta", "maxdeg"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

/// Lookup for the free names of a grid.
pub trait Scope {
    /// `Ok(None)` for names this scope does not know.
    fn lookup(&self, name: &str) -> Result<Option<i64>, AnalysisError>;
}

impl<F> Scope for F
where
    F: Fn(&str) -> Result<Option<i64>, AnalysisError>,
{
    fn lookup(&self, name: &str) -> Result<Option<i64>, AnalysisError> {
        self(name)
    }
}

#[derive(Debug)]
pub enum ResolveError {
    Unknown(String),
    DivisionByZero,
    Analysis(AnalysisError),
}

impl Expr {
    fn eval(&self, bound: &Params, scope: &dyn Scope) -> Result<i64, ResolveError> {
        let bin = |a: &Expr, b: &Expr| -> Result<(i64, i64), ResolveError> {
            Ok((a.eval(bound, scope)?, b.eval(bound, scope)?))
        };
        Ok(match self {
            Expr::Int(v) => *v,
            Expr::Var(name) => match bound.get(name) {
                Some(&v) => v,
                None => scope
                    .lookup(name)
                    .map_err(ResolveError::Analysis)?
                    .ok_or_else(|| ResolveError::Unknown(name.clone()))?,
            },
            Expr::Add(a, b) => {
                let (x, y) = bin(a, b)?;
                x + y
            }
            Expr::Sub(a, b) => {
                let (x, y) = bin(a, b)?;
                x - y
            }
            Expr::Mul(a, b) => {
                let (x, y) = bin(a, b)?;
                x * y
            }
            Expr::Div(a, b) => {
                let (x, y) = bin(a, b)?;
                if y == 0 {
                    return Err(ResolveError::DivisionByZero);
                }
                Integer::div_floor(&x, &y)
            }
        })
    }

    fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => out.push(v),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Div(a, b) => write!(f, "({a}/{b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut lhs = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == b'+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut lhs = self.atom()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.atom()?;
            lhs = if op == b'*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected ')' at {}", self.pos));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Sub(Box::new(Expr::Int(0)), Box::new(self.atom()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                text.parse().map(Expr::Int).map_err(|e| format!("{text}: {e}"))
            }
            Some(c) if c == b'@' || c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                self.pos += 1;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "@" {
                    return Err("'@' must be followed by a name".into());
                }
                Ok(Expr::Var(name.to_string()))
            }
            Some(c) => Err(format!("unexpected {:?} at {}", c as char, self.pos)),
            None => Err("unexpected end of expression".into()),
        }
    }
}

impl FromStr for Expr {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr().map_err(|e| HarnessError::Config(format!("bad expression {s:?}: {e}")))?;
        if p.peek().is_some() {
            return Err(HarnessError::Config(format!("trailing input in expression {s:?}")));
        }
        Ok(e)
    }
}

/// `name = lo..=hi`; a single value has `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridAxis {
    pub name: String,
    pub lo: Expr,
    pub hi: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamGrid {
    axes: Vec<GridAxis>,
    text: String,
}

/// What went wrong while expanding a grid on one graph.
#[derive(Debug)]
pub enum ExpandError {
    /// Computing an invariant needed by the grid ran out of budget.
    Analysis(AnalysisError),
    Fatal(HarnessError),
}

impl ParamGrid {
    pub fn new(axes: Vec<GridAxis>) -> Result<Self, HarnessError> {
        let text =
            axes.iter()
                .map(|a| {
                    if a.lo == a.hi {
                        format!("{}={}", a.name, a.lo)
                    } else {
                        format!("{}={}..{}", a.name, a.lo, a.hi)
                    }
                })
                .collect::<Vec<_>>()
                .join(",");
        let grid = ParamGrid { axes, text };
        grid.validate()?;
        Ok(grid)
    }

    /// A grid with a single cell.
    pub fn fixed(params: &Params) -> Self {
        let axes =
            params.iter().map(|(k, &v)| GridAxis { name: k.clone(), lo: Expr::Int(v), hi: Expr::Int(v) }).collect();
        ParamGrid::new(axes).expect("constant grid is valid")
    }

    pub fn axes(&self) -> &[GridAxis] {
        &self.axes
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.axes.iter().map(|a| a.name.as_str())
    }

    /// Whether any endpoint refers to `@name` construction parameters.
    pub fn uses_construction(&self) -> bool {
        self.free_names().iter().any(|v| v.starts_with('@'))
    }

    fn free_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        for a in &self.axes {
            a.lo.vars(&mut out);
            a.hi.vars(&mut out);
        }
        out
    }

    fn validate(&self) -> Result<(), HarnessError> {
        let mut seen: Vec<&str> = Vec::new();
        for a in &self.axes {
            if a.name.is_empty()
                || a.name.starts_with('@')
                || !a.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(HarnessError::Config(format!("bad parameter name {:?}", a.name)));
            }
            if seen.contains(&a.name.as_str()) {
                return Err(HarnessError::Config(format!("parameter {:?} given twice", a.name)));
            }
            let mut vars = Vec::new();
            a.lo.vars(&mut vars);
            a.hi.vars(&mut vars);
            for v in vars {
                if !(seen.contains(&v) || v.starts_with('@') || INVARIANTS.contains(&v)) {
                    return Err(HarnessError::Config(format!(
                        "{v:?} in the range of {:?} is neither an earlier parameter nor one of {INVARIANTS:?}",
                        a.name
                    )));
                }
            }
            seen.push(&a.name);
        }
        Ok(())
    }

    /// Every cell of the grid in lexicographic order of the axes as written.
    pub fn expand(&self, scope: &dyn Scope) -> Result<Vec<Params>, ExpandError> {
        let mut out = Vec::new();
        let mut current = Params::new();
        self.expand_from(0, scope, &mut current, &mut out)?;
        Ok(out)
    }

    fn expand_from(
        &self,
        depth: usize,
        scope: &dyn Scope,
        current: &mut Params,
        out: &mut Vec<Params>,
    ) -> Result<(), ExpandError> {
        let Some(axis) = self.axes.get(depth) else {
            out.push(current.clone());
            return Ok(());
        };
        let eval = |e: &Expr, current: &Params| {
            e.eval(current, scope).map_err(|err| match err {
                ResolveError::Analysis(a) => ExpandError::Analysis(a),
                ResolveError::Unknown(name) => {
                    ExpandError::Fatal(HarnessError::Config(format!("{name:?} is not defined for this graph source")))
                }
                ResolveError::DivisionByZero => ExpandError::Fatal(HarnessError::Config(format!(
                    "division by zero in the range of {:?}",
                    axis.name
                ))),
            })
        };
        let lo = eval(&axis.lo, current)?;
        let hi = eval(&axis.hi, current)?;
        for v in lo..=hi {
            current.insert(axis.name.clone(), v);
            self.expand_from(depth + 1, scope, current, out)?;
        }
        current.remove(&axis.name);
        Ok(())
    }
}

impl fmt::Display for ParamGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for ParamGrid {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let mut axes = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, range) = part
                .split_once('=')
                .ok_or_else(|| HarnessError::Config(format!("expected name=value or name=lo..hi, got {part:?}")))?;
            let (lo, hi) = match range.split_once("..") {
                Some((lo, hi)) => (lo.parse()?, hi.trim_start_matches('=').parse()?),
                None => {
                    let v: Expr = range.parse()?;
                    (v.clone(), v)
                }
            };
            axes.push(GridAxis { name: name.trim().to_string(), lo, hi });
        }
        ParamGrid::new(axes)
    }
}

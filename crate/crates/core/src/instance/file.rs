//! The `.alg` instance format: a JSON document whose scalar entries are
//! parameter expressions.
//!
//! ```json
//! {
//!   "name": "imex",
//!   "dimension": 4,
//!   "params": ["a", "b"],
//!   "phi": [["-1","0","0","0"], ["0","1","0","0"], ["0","0","-1","0"], ["0","0","0","1"]],
//!   "bracket": [{"i": 1, "j": 2, "coeffs": ["0","0","-a","0"]}]
//! }
//! ```
//!
//! Matrices are written row by row and act on column vectors, so column
//! `j` is the image of `e_j`. Bracket entries list `[e_i, e_j]` for
//! `i < j` only; product entries list any `e_i·e_j`. Indices are 1-based.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::expr::{EvalError, ParamExpr};
use crate::hom::commutator_bracket;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Rational;
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("syntax error at line {line}, column {column} ({context}): {message}")]
    Syntax {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared parameter {name:?} in {context}")]
    UndeclaredParameter { name: String, context: String },
    #[error("missing binding for parameter {0:?}")]
    MissingBinding(String),
    #[error("binding {0:?} does not name a declared parameter")]
    UnusedBinding(String),
    #[error("division by zero in {context}")]
    DivisionByZero { context: String },
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("invalid entry in {context}: {message}")]
    InvalidEntry { context: String, message: String },
    #[error("invalid binding {0:?}: expected name=value with a rational value")]
    InvalidBinding(String),
    #[error("{0}")]
    Io(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dimension: usize,
    #[serde(default)]
    params: Vec<String>,
    phi: Vec<Vec<String>>,
    #[serde(default)]
    bracket: Vec<RawEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<RawEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    omega: Option<Vec<Vec<String>>>,
    #[serde(default, rename = "J", skip_serializing_if = "Option::is_none")]
    j: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis_names: Option<Vec<String>>,
}

/// One sparse structure-constant entry: `e_i ∘ e_j = Σ coeffs[k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<ParamExpr>,
}

pub type ExprMatrix = Vec<Vec<ParamExpr>>;

/// A parsed, unbound instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub name: Option<String>,
    pub dimension: usize,
    pub params: Vec<String>,
    pub phi: ExprMatrix,
    pub bracket: Vec<SparseEntry>,
    pub product: Option<Vec<SparseEntry>>,
    pub metric: Option<ExprMatrix>,
    pub omega: Option<ExprMatrix>,
    pub j: Option<ExprMatrix>,
    pub basis_names: Option<Vec<String>>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
    (line, column)
}

struct Ctx<'a> {
    text: &'a str,
    params: BTreeSet<String>,
}

impl Ctx<'_> {
    fn expr(&self, s: &str, context: &str) -> Result<ParamExpr, InstanceError> {
        let e = ParamExpr::parse(s).map_err(|err| {
            // Locate the string literal in the source for a file position.
            let quoted = serde_json::to_string(s).expect("string");
            let (line, column) = match self.text.find(&quoted) {
                Some(off) => {
                    let (l, c) = line_col(self.text, off);
                    (l, c + err.column)
                }
                None => (1, err.column),
            };
            InstanceError::Syntax {
                context: context.to_string(),
                line,
                column,
                message: err.message,
            }
        })?;
        if let Some(name) = e.variables().into_iter().find(|v| !self.params.contains(v)) {
            return Err(InstanceError::UndeclaredParameter {
                name,
                context: context.to_string(),
            });
        }
        Ok(e)
    }

    fn matrix(&self, rows: &[Vec<String>], n: usize, field: &str) -> Result<ExprMatrix, InstanceError> {
        if rows.len() != n {
            return Err(InstanceError::DimensionMismatch {
                context: field.to_string(),
                expected: n,
                found: rows.len(),
            });
        }
        rows.iter()
            .enumerate()
            .map(|(r, row)| {
                if row.len() != n {
                    return Err(InstanceError::DimensionMismatch {
                        context: format!("{field} row {}", r + 1),
                        expected: n,
                        found: row.len(),
                    });
                }
                row.iter()
                    .enumerate()
                    .map(|(c, s)| self.expr(s, &format!("{field}[{}][{}]", r + 1, c + 1)))
                    .collect()
            })
            .collect()
    }

    fn entries(&self, raw: &[RawEntry], n: usize, field: &str, strict: bool) -> Result<Vec<SparseEntry>, InstanceError> {
        let mut seen = BTreeSet::new();
        raw.iter()
            .map(|e| {
                let context = format!("{field} entry ({}, {})", e.i, e.j);
                let in_range = (1..=n).contains(&e.i) && (1..=n).contains(&e.j);
                if !in_range || (strict && e.i >= e.j) {
                    let rule = if strict { "1 <= i < j <= dimension" } else { "1 <= i, j <= dimension" };
                    return Err(InstanceError::InvalidEntry {
                        context,
                        message: format!("indices must satisfy {rule}"),
                    });
                }
                if !seen.insert((e.i, e.j)) {
                    return Err(InstanceError::InvalidEntry {
                        context,
                        message: "duplicate entry".into(),
                    });
                }
                if e.coeffs.len() != n {
                    return Err(InstanceError::DimensionMismatch {
                        context,
                        expected: n,
                        found: e.coeffs.len(),
                    });
                }
                let coeffs = e
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, s)| self.expr(s, &format!("{context} coefficient {}", k + 1)))
                    .collect::<Result<_, _>>()?;
                Ok(SparseEntry { i: e.i, j: e.j, coeffs })
            })
            .collect()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| InstanceError::Syntax {
            context: "instance".into(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let n = raw.dimension;
        if n == 0 {
            return Err(InstanceError::InvalidEntry {
                context: "dimension".into(),
                message: "must be positive".into(),
            });
        }
        let mut params = BTreeSet::new();
        for p in &raw.params {
            if !is_identifier(p) {
                return Err(InstanceError::InvalidEntry {
                    context: "params".into(),
                    message: format!("{p:?} is not an identifier"),
                });
            }
            if !params.insert(p.clone()) {
                return Err(InstanceError::InvalidEntry {
                    context: "params".into(),
                    message: format!("duplicate parameter {p:?}"),
                });
            }
        }
        if let Some(names) = &raw.basis_names {
            if names.len() != n {
                return Err(InstanceError::DimensionMismatch {
                    context: "basis_names".into(),
                    expected: n,
                    found: names.len(),
                });
            }
        }
        let ctx = Ctx { text, params };
        let opt_matrix = |m: &Option<Vec<Vec<String>>>, field: &str| m.as_ref().map(|m| ctx.matrix(m, n, field)).transpose();
        Ok(InstanceFile {
            name: raw.name.clone(),
            dimension: n,
            params: raw.params.clone(),
            phi: ctx.matrix(&raw.phi, n, "phi")?,
            bracket: ctx.entries(&raw.bracket, n, "bracket", true)?,
            product: raw.product.as_ref().map(|p| ctx.entries(p, n, "product", false)).transpose()?,
            metric: opt_matrix(&raw.metric, "metric")?,
            omega: opt_matrix(&raw.omega, "omega")?,
            j: opt_matrix(&raw.j, "J")?,
            basis_names: raw.basis_names.clone(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, InstanceError> {
        let text = std::fs::read_to_string(path).map_err(|e| InstanceError::Io(format!("{}: {e}", path.display())))?;
        let mut inst = Self::parse(&text)?;
        if inst.name.is_none() {
            inst.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        }
        Ok(inst)
    }

    /// Pretty JSON; [`InstanceFile::parse`] of the output returns `self`.
    pub fn serialize(&self) -> String {
        let m = |m: &ExprMatrix| -> Vec<Vec<String>> { m.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect() };
        let entries = |es: &[SparseEntry]| -> Vec<RawEntry> {
            es.iter()
                .map(|e| RawEntry {
                    i: e.i,
                    j: e.j,
                    coeffs: e.coeffs.iter().map(|c| c.to_string()).collect(),
                })
                .collect()
        };
        let raw = RawInstance {
            name: self.name.clone(),
            dimension: self.dimension,
            params: self.params.clone(),
            phi: m(&self.phi),
            bracket: entries(&self.bracket),
            product: self.product.as_deref().map(entries),
            metric: self.metric.as_ref().map(m),
            omega: self.omega.as_ref().map(m),
            j: self.j.as_ref().map(m),
            basis_names: self.basis_names.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable") + "\n"
    }

    /// Evaluates every expression. Every declared parameter must be bound
    /// and every binding must name a declared parameter.
    pub fn bind(&self, bindings: &BTreeMap<String, Rational>) -> Result<BoundInstance, InstanceError> {
        if let Some(p) = self.params.iter().find(|p| !bindings.contains_key(*p)) {
            return Err(InstanceError::MissingBinding(p.clone()));
        }
        if let Some(b) = bindings.keys().find(|b| !self.params.contains(b)) {
            return Err(InstanceError::UnusedBinding(b.clone()));
        }
        let n = self.dimension;
        let eval = |e: &ParamExpr, context: &str| {
            e.eval(bindings).map_err(|err| match err {
                EvalError::DivisionByZero => InstanceError::DivisionByZero {
                    context: context.to_string(),
                },
                EvalError::Unbound(name) => InstanceError::MissingBinding(name),
            })
        };
        let matrix = |m: &ExprMatrix, field: &str| -> Result<Matrix<Rational>, InstanceError> {
            let rows = m
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, e)| eval(e, &format!("{field}[{}][{}]", r + 1, c + 1)))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Matrix::from_rows(rows).expect("validated at parse time"))
        };
        let tensor = |es: &[SparseEntry], field: &str, antisymmetric: bool| -> Result<Tensor3<Rational>, InstanceError> {
            let mut t = Tensor3::zeros(n);
            for e in es {
                let context = format!("{field} entry ({}, {})", e.i, e.j);
                let v = Vector(
                    e.coeffs
                        .iter()
                        .map(|c| eval(c, &context))
                        .collect::<Result<Vec<_>, _>>()?,
                );
                t.set_product(e.i - 1, e.j - 1, &v).expect("validated");
                if antisymmetric {
                    t.set_product(e.j - 1, e.i - 1, &-v).expect("validated");
                }
            }
            Ok(t)
        };
        let product = self.product.as_deref().map(|p| tensor(p, "product", false)).transpose()?;
        let declared = tensor(&self.bracket, "bracket", true)?;
        let bracket_declared = !self.bracket.is_empty() || product.is_none();
        let bracket = match (&product, bracket_declared) {
            (Some(p), false) => commutator_bracket(p),
            _ => declared,
        };
        Ok(BoundInstance {
            name: self.name.clone().unwrap_or_else(|| "instance".into()),
            dimension: n,
            bindings: bindings.clone(),
            twist: matrix(&self.phi, "phi")?,
            bracket,
            bracket_declared,
            product,
            metric: self.metric.as_ref().map(|m| matrix(m, "metric")).transpose()?,
            omega: self.omega.as_ref().map(|m| matrix(m, "omega")).transpose()?,
            j: self.j.as_ref().map(|m| matrix(m, "J")).transpose()?,
        })
    }
}

/// An instance with every parameter replaced by its value.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundInstance {
    pub name: String,
    pub dimension: usize,
    pub bindings: BTreeMap<String, Rational>,
    pub twist: Matrix<Rational>,
    /// Declared bracket, or the commutator of the product when only a
    /// product is given.
    pub bracket: Tensor3<Rational>,
    pub bracket_declared: bool,
    pub product: Option<Tensor3<Rational>>,
    pub metric: Option<Matrix<Rational>>,
    pub omega: Option<Matrix<Rational>>,
    pub j: Option<Matrix<Rational>>,
}

/// Parses `name=value` where `value` is a parameter-free expression.
pub fn parse_binding(s: &str) -> Result<(String, Rational), InstanceError> {
    let bad = || InstanceError::InvalidBinding(s.to_string());
    let (name, value) = s.split_once('=').ok_or_else(bad)?;
    let name = name.trim();
    if !is_identifier(name) {
        return Err(bad());
    }
    let e = ParamExpr::parse(value).map_err(|_| bad())?;
    let v = e.eval(&BTreeMap::new()).map_err(|_| bad())?;
    Ok((name.to_string(), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::q;

    const IMEX: &str = r#"{
  "name": "imex",
  "dimension": 4,
  "params": ["a", "b", "A"],
  "phi": [["-1","0","0","0"],["0","1","0","0"],["0","0","-1","0"],["0","0","0","1"]],
  "bracket": [
    {"i": 1, "j": 2, "coeffs": ["0","0","-a","0"]},
    {"i": 1, "j": 3, "coeffs": ["0","b","0","0"]},
    {"i": 2, "j": 4, "coeffs": ["0","-a","0","0"]},
    {"i": 3, "j": 4, "coeffs": ["0","0","a","0"]}
  ],
  "omega": [["0","0","-A","0"],["0","0","0","A*a/b"],["A","0","0","0"],["0","-A*a/b","0","0"]]
}"#;

    fn bindings(pairs: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn parses_and_binds_imex() {
        let inst = InstanceFile::parse(IMEX).unwrap();
        assert_eq!(inst.bracket[0].coeffs[2], ParamExpr::parse("-a").unwrap());
        let b = inst.bind(&bindings(&[("a", q(2, 1)), ("b", q(3, 1)), ("A", q(1, 1))])).unwrap();
        assert_eq!(b.bracket, fixtures::imex_bracket(&q(2, 1), &q(3, 1)));
        assert_eq!(b.twist, fixtures::imex_twist());
        assert_eq!(b.omega.unwrap(), fixtures::imex_omega(&q(2, 1), &q(3, 1), &q(1, 1)));
    }

    #[test]
    fn round_trip() {
        let inst = InstanceFile::parse(IMEX).unwrap();
        assert_eq!(InstanceFile::parse(&inst.serialize()).unwrap(), inst);
    }

    #[test]
    fn empty_bracket_is_abelian() {
        let text = r#"{"dimension": 2, "phi": [["1","0"],["0","1"]]}"#;
        let b = InstanceFile::parse(text).unwrap().bind(&BTreeMap::new()).unwrap();
        assert!(b.bracket.is_zero());
    }

    #[test]
    fn binding_errors() {
        let inst = InstanceFile::parse(IMEX).unwrap();
        assert_eq!(
            inst.bind(&bindings(&[("a", q(1, 1))])).unwrap_err(),
            InstanceError::MissingBinding("b".into())
        );
        let extra = bindings(&[("a", q(1, 1)), ("b", q(1, 1)), ("A", q(1, 1)), ("z", q(1, 1))]);
        assert_eq!(inst.bind(&extra).unwrap_err(), InstanceError::UnusedBinding("z".into()));
        let zero_b = bindings(&[("a", q(1, 1)), ("b", q(0, 1)), ("A", q(1, 1))]);
        assert!(matches!(inst.bind(&zero_b).unwrap_err(), InstanceError::DivisionByZero { .. }));
    }

    #[test]
    fn division_by_zero_expression() {
        let text = r#"{"dimension": 1, "params": ["a", "b"], "phi": [["a/(b-b)"]]}"#;
        let inst = InstanceFile::parse(text).unwrap();
        let err = inst.bind(&bindings(&[("a", q(1, 1)), ("b", q(5, 1))])).unwrap_err();
        assert_eq!(err, InstanceError::DivisionByZero { context: "phi[1][1]".into() });
    }

    #[test]
    fn parse_errors() {
        let undeclared = r#"{"dimension": 1, "params": ["a"], "phi": [["a*c"]]}"#;
        assert!(matches!(
            InstanceFile::parse(undeclared).unwrap_err(),
            InstanceError::UndeclaredParameter { name, .. } if name == "c"
        ));
        let syntax = "{\"dimension\": 1,\n \"phi\": [[\"1 +\"]]}";
        match InstanceFile::parse(syntax).unwrap_err() {
            InstanceError::Syntax { line, column, .. } => assert_eq!((line, column), (2, 15)),
            e => panic!("{e}"),
        }
        let json = "{\"dimension\": 1,\n \"phi\": [[\"1\"]]";
        assert!(matches!(InstanceFile::parse(json).unwrap_err(), InstanceError::Syntax { line: 2, .. }));
        let dims = r#"{"dimension": 2, "phi": [["1","0"]]}"#;
        assert!(matches!(InstanceFile::parse(dims).unwrap_err(), InstanceError::DimensionMismatch { .. }));
        let order = r#"{"dimension": 2, "phi": [["1","0"],["0","1"]], "bracket": [{"i": 2, "j": 1, "coeffs": ["0","1"]}]}"#;
        assert!(matches!(InstanceFile::parse(order).unwrap_err(), InstanceError::InvalidEntry { .. }));
    }

    #[test]
    fn product_only_gives_commutator_bracket() {
        let text = r#"{"dimension": 2, "phi": [["1","0"],["0","1"]],
            "product": [{"i": 2, "j": 1, "coeffs": ["0","-1"]}, {"i": 2, "j": 2, "coeffs": ["1/4","0"]}]}"#;
        let b = InstanceFile::parse(text).unwrap().bind(&BTreeMap::new()).unwrap();
        assert!(!b.bracket_declared);
        assert_eq!(b.bracket, fixtures::bracket_2d());
    }

    #[test]
    fn bindings_parse() {
        assert_eq!(parse_binding("a=-1/2").unwrap(), ("a".into(), q(-1, 2)));
        assert_eq!(parse_binding("B = 7").unwrap(), ("B".into(), q(7, 1)));
        assert!(parse_binding("a").is_err());
        assert!(parse_binding("a=b").is_err());
        assert!(parse_binding("1a=2").is_err());
    }
}

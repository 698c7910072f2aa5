//! The structure-constant file format shared by the library and the CLI.
//!
//! ```text
//! {
//!  "kind": "ly",
//!  "dim": 3,
//!  "labels": ["e", "h", "f"],
//!  "binary": [
//!   [0, 1, [[0, "-2"]]],
//!   ...
//!  ],
//!  "ternary": [
//!   [0, 1, 2, [[1, "1/2"]]],
//!   ...
//!  ]
//! }
//! ```
//!
//! `binary` lists e_i·e_j for i < j and `ternary` lists [e_i, e_j, e_k] for
//! i < j, each as sparse (index, rational) pairs. `kind` is "lie" (ternary
//! empty), "ly", "symplectic", "composition" or "jordan".
//!
//! A symplectic file stores {e_x e_y e_z} for all x, y, z in `ternary`,
//! leaves `binary` empty and adds `"form": [[x, y, "p/q"], ...]` with the
//! nonzero Gram entries. Composition and Jordan files store the full
//! multiplication table in `binary` (all i, j); a composition file adds the
//! polar form of the norm as `form`. An optional `cartan` lists basis
//! vectors of a split Cartan subalgebra (of g(m) restricted to m for LY
//! files). Rationals are strings "p/q" or "p"; JSON integers are accepted too.

use std::fmt::{self, Write};

use serde_json::Value;

use crate::algebra::{AlgError, AntiAlg, LYAlg};
use crate::compjordan::{CompAlg, CompKind, UnitalAlg};
use crate::linalg::{BilinForm, Mat, SpVec};
use crate::rat::Rat;
use crate::symplectic::SymplecticTripleData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Lie,
    Ly,
    Symplectic,
    Composition,
    Jordan,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::Ly => "ly",
            Kind::Symplectic => "symplectic",
            Kind::Composition => "composition",
            Kind::Jordan => "jordan",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.line {
            write!(f, "line {l}")?;
            if let Some(c) = self.column {
                write!(f, ", column {c}")?;
            }
            f.write_str(": ")?;
        }
        if let Some(p) = &self.field {
            write!(f, "field {p}: ")?;
        }
        f.write_str(&self.msg)
    }
}

impl std::error::Error for ParseError {}

fn field_err(field: impl Into<String>, msg: impl Into<String>) -> ParseError {
    ParseError { line: None, column: None, field: Some(field.into()), msg: msg.into() }
}

/// A parsed file before interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub kind: Kind,
    pub labels: Vec<String>,
    pub binary: Vec<(usize, usize, SpVec)>,
    pub ternary: Vec<(usize, usize, usize, SpVec)>,
    pub form: Vec<(usize, usize, Rat)>,
    pub cartan: Vec<SpVec>,
}

fn write_vec(out: &mut String, v: &SpVec) {
    out.push('[');
    for (n, (k, x)) in v.iter().enumerate() {
        if n > 0 {
            out.push_str(", ");
        }
        write!(out, "[{k}, \"{x}\"]").unwrap();
    }
    out.push(']');
}

fn write_lines(out: &mut String, name: &str, lines: &[String], last: bool) {
    writeln!(out, " \"{name}\": [").unwrap();
    for (n, l) in lines.iter().enumerate() {
        out.push_str("  ");
        out.push_str(l);
        out.push_str(if n + 1 < lines.len() { ",\n" } else { "\n" });
    }
    out.push_str(if last { " ]\n" } else { " ],\n" });
}

fn full_table(a: &UnitalAlg) -> Vec<(usize, usize, SpVec)> {
    let n = a.dim();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !a.basis_product(i, j).is_empty()).map(|(i, j)| (i, j, a.basis_product(i, j).clone())).collect()
}

fn gram_entries(g: &Mat) -> Vec<(usize, usize, Rat)> {
    let n = g.rows();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !g.get(i, j).is_zero()).map(|(i, j)| (i, j, g.get(i, j).clone())).collect()
}

impl StructureFile {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn from_lie(a: &AntiAlg) -> StructureFile {
        StructureFile { kind: Kind::Lie, labels: a.labels().to_vec(), binary: a.entries().map(|(i, j, v)| (i, j, v.clone())).collect(), ternary: Vec::new(), form: Vec::new(), cartan: Vec::new() }
    }

    pub fn with_cartan(mut self, cartan: Vec<SpVec>) -> StructureFile {
        self.cartan = cartan;
        self
    }

    pub fn from_composition(c: &CompAlg) -> StructureFile {
        StructureFile { kind: Kind::Composition, labels: c.alg.labels().to_vec(), binary: full_table(&c.alg), ternary: Vec::new(), form: gram_entries(&c.norm), cartan: Vec::new() }
    }

    pub fn from_jordan(j: &UnitalAlg) -> StructureFile {
        StructureFile { kind: Kind::Jordan, labels: j.labels().to_vec(), binary: full_table(j), ternary: Vec::new(), form: Vec::new(), cartan: Vec::new() }
    }

    pub fn from_ly(a: &LYAlg) -> StructureFile {
        let n = a.dim();
        let mut binary = Vec::new();
        let mut ternary = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = a.binary_upper(i, j);
                if !b.is_empty() {
                    binary.push((i, j, b.clone()));
                }
                for (k, v) in a.ternary_upper(i, j) {
                    ternary.push((i, j, *k, v.clone()));
                }
            }
        }
        StructureFile { kind: Kind::Ly, labels: a.labels().to_vec(), binary, ternary, form: Vec::new(), cartan: Vec::new() }
    }

    pub fn from_symplectic(t: &SymplecticTripleData) -> StructureFile {
        let n = t.dim();
        let mut ternary = Vec::new();
        let mut form = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let f = t.form.at(x, y);
                if !f.is_zero() {
                    form.push((x, y, f.clone()));
                }
                for z in 0..n {
                    let v = t.triple(x, y, z);
                    if !v.is_empty() {
                        ternary.push((x, y, z, v.clone()));
                    }
                }
            }
        }
        StructureFile { kind: Kind::Symplectic, labels: t.labels.clone(), binary: Vec::new(), ternary, form, cartan: Vec::new() }
    }

    /// One tensor entry per line; byte-deterministic.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        writeln!(out, " \"kind\": \"{}\",", self.kind.name()).unwrap();
        writeln!(out, " \"dim\": {},", self.dim()).unwrap();
        let labels: Vec<String> = self.labels.iter().map(|l| serde_json::to_string(l).unwrap()).collect();
        writeln!(out, " \"labels\": [{}],", labels.join(", ")).unwrap();
        let line = |prefix: String, v: &SpVec| {
            let mut s = prefix;
            write_vec(&mut s, v);
            s.push(']');
            s
        };
        let b: Vec<String> = self.binary.iter().map(|(i, j, v)| line(format!("[{i}, {j}, "), v)).collect();
        let t: Vec<String> = self.ternary.iter().map(|(i, j, k, v)| line(format!("[{i}, {j}, {k}, "), v)).collect();
        let mut sections = vec![("binary", b), ("ternary", t)];
        if matches!(self.kind, Kind::Symplectic | Kind::Composition) {
            sections.push(("form", self.form.iter().map(|(i, j, x)| format!("[{i}, {j}, \"{x}\"]")).collect()));
        }
        if !self.cartan.is_empty() {
            sections.push((
                "cartan",
                self.cartan
                    .iter()
                    .map(|v| {
                        let mut s = String::new();
                        write_vec(&mut s, v);
                        s
                    })
                    .collect(),
            ));
        }
        let last = sections.len() - 1;
        for (n, (name, lines)) in sections.iter().enumerate() {
            write_lines(&mut out, name, lines, n == last);
        }
        out.push_str("}\n");
        out
    }

    pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
        let v: Value = serde_json::from_str(text).map_err(|e| ParseError { line: Some(e.line()), column: Some(e.column()), field: None, msg: e.to_string() })?;
        let obj = v.as_object().ok_or_else(|| field_err("$", "expected an object"))?;
        let kind = match obj.get("kind").map(|k| k.as_str()) {
            None | Some(Some("ly")) => Kind::Ly,
            Some(Some("lie")) => Kind::Lie,
            Some(Some("symplectic")) => Kind::Symplectic,
            Some(Some("composition")) => Kind::Composition,
            Some(Some("jordan")) => Kind::Jordan,
            Some(_) => return Err(field_err("kind", "expected \"lie\", \"ly\", \"symplectic\", \"composition\" or \"jordan\"")),
        };
        let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| field_err("dim", "expected a nonnegative integer"))? as usize;
        let labels = match obj.get("labels") {
            None => crate::algebra::default_labels("e", dim),
            Some(Value::Array(a)) => a.iter().enumerate().map(|(i, l)| l.as_str().map(String::from).ok_or_else(|| field_err(format!("labels[{i}]"), "expected a string"))).collect::<Result<_, _>>()?,
            Some(_) => return Err(field_err("labels", "expected an array of strings")),
        };
        if labels.len() != dim {
            return Err(field_err("labels", format!("{} labels for dimension {dim}", labels.len())));
        }
        let index = |v: &Value, path: &str| -> Result<usize, ParseError> {
            let i = v.as_u64().ok_or_else(|| field_err(path, "expected a basis index"))? as usize;
            if i >= dim {
                return Err(field_err(path, format!("index {i} out of range for dimension {dim}")));
            }
            Ok(i)
        };
        let rat = |v: &Value, path: &str| -> Result<Rat, ParseError> {
            match v {
                Value::String(s) => s.parse().map_err(|_| field_err(path, format!("bad rational {s:?}"))),
                Value::Number(n) => n.as_i64().map(Rat::int).ok_or_else(|| field_err(path, "expected an integer or a \"p/q\" string")),
                _ => Err(field_err(path, "expected a rational")),
            }
        };
        let entries = |name: &str| -> Result<Vec<Value>, ParseError> {
            match obj.get(name) {
                None => Ok(Vec::new()),
                Some(Value::Array(a)) => Ok(a.clone()),
                Some(_) => Err(field_err(name, "expected an array")),
            }
        };
        let sparse = |v: &Value, path: &str| -> Result<SpVec, ParseError> {
            let a = v.as_array().ok_or_else(|| field_err(path, "expected [[index, rational], ...]"))?;
            let mut out = Vec::with_capacity(a.len());
            for (n, e) in a.iter().enumerate() {
                let p = format!("{path}[{n}]");
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| field_err(&p, "expected [index, rational]"))?;
                out.push((index(&pair[0], &format!("{p}[0]"))?, rat(&pair[1], &format!("{p}[1]"))?));
            }
            let v = crate::linalg::vector::collect(out);
            Ok(v)
        };
        let tuple = |e: &Value, path: &str, arity: usize| -> Result<(Vec<usize>, SpVec), ParseError> {
            let a = e.as_array().filter(|a| a.len() == arity + 1).ok_or_else(|| field_err(path, format!("expected {arity} indices and a vector")))?;
            let idx = (0..arity).map(|k| index(&a[k], &format!("{path}[{k}]"))).collect::<Result<Vec<_>, _>>()?;
            Ok((idx, sparse(&a[arity], &format!("{path}[{arity}]"))?))
        };
        let mut binary = Vec::new();
        for (n, e) in entries("binary")?.iter().enumerate() {
            let path = format!("binary[{n}]");
            let (idx, v) = tuple(e, &path, 2)?;
            if matches!(kind, Kind::Lie | Kind::Ly) && idx[0] >= idx[1] {
                return Err(field_err(path, "binary entries need i < j"));
            }
            binary.push((idx[0], idx[1], v));
        }
        let mut ternary = Vec::new();
        for (n, e) in entries("ternary")?.iter().enumerate() {
            let path = format!("ternary[{n}]");
            let (idx, v) = tuple(e, &path, 3)?;
            if kind != Kind::Symplectic && idx[0] >= idx[1] {
                return Err(field_err(path, "ternary entries need i < j"));
            }
            ternary.push((idx[0], idx[1], idx[2], v));
        }
        let mut form = Vec::new();
        for (n, e) in entries("form")?.iter().enumerate() {
            let path = format!("form[{n}]");
            let a = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| field_err(&path, "expected [x, y, rational]"))?;
            form.push((index(&a[0], &format!("{path}[0]"))?, index(&a[1], &format!("{path}[1]"))?, rat(&a[2], &format!("{path}[2]"))?));
        }
        let mut cartan = Vec::new();
        for (n, e) in entries("cartan")?.iter().enumerate() {
            cartan.push(sparse(e, &format!("cartan[{n}]"))?);
        }
        match kind {
            Kind::Lie if !ternary.is_empty() => return Err(field_err("ternary", "a Lie algebra file has no ternary entries")),
            Kind::Composition | Kind::Jordan if !ternary.is_empty() => return Err(field_err("ternary", format!("a {} file has no ternary entries", kind.name()))),
            Kind::Composition if form.is_empty() => return Err(field_err("form", "a composition file needs the polar form of the norm")),
            Kind::Symplectic if !binary.is_empty() => return Err(field_err("binary", "a symplectic file has no binary entries")),
            Kind::Symplectic if form.is_empty() => return Err(field_err("form", "a symplectic file needs a nonzero form")),
            _ => {}
        }
        Ok(StructureFile { kind, labels, binary, ternary, form, cartan })
    }

    pub fn to_lie(&self) -> AntiAlg {
        let mut a = AntiAlg::zero(self.dim(), self.labels.clone());
        for (i, j, v) in &self.binary {
            a.set(*i, *j, v.clone());
        }
        a
    }

    pub fn to_ly(&self) -> LYAlg {
        let mut a = LYAlg::zero(self.dim(), self.labels.clone());
        for (i, j, v) in &self.binary {
            a.set_binary(*i, *j, v.clone());
        }
        for (i, j, k, v) in &self.ternary {
            a.set_ternary(*i, *j, *k, v.clone());
        }
        a
    }

    fn gram(&self) -> Mat {
        let n = self.dim();
        let mut g = Mat::zeros(n, n);
        for (x, y, c) in &self.form {
            g.set(*x, *y, c.clone());
        }
        g
    }

    pub fn to_unital(&self) -> UnitalAlg {
        let n = self.dim();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, j, v) in &self.binary {
            table[*i][*j] = v.clone();
        }
        UnitalAlg::new(self.labels.clone(), table)
    }

    /// The kind is read off the dimension.
    pub fn to_composition(&self) -> Result<CompAlg, AlgError> {
        let kind = CompKind::ALL.into_iter().find(|k| k.dim() == self.dim()).ok_or_else(|| AlgError::Invalid(format!("no composition algebra of dimension {}", self.dim())))?;
        Ok(CompAlg { kind, alg: self.to_unital(), norm: self.gram() })
    }

    pub fn to_symplectic(&self) -> Result<SymplecticTripleData, AlgError> {
        let n = self.dim();
        let form = BilinForm::new(self.gram(), -1).map_err(|e| AlgError::Invalid(format!("form: {e}")))?;
        let mut table = vec![Vec::new(); n * n * n];
        for (x, y, z, v) in &self.ternary {
            table[(x * n + y) * n + z] = v.clone();
        }
        SymplecticTripleData::new(self.labels.clone(), form, |x, y, z| std::mem::take(&mut table[(x * n + y) * n + z]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::{build_adjoint_ly, AdjointLySpec, AdjointVariant};
    use crate::algebra::examples::sl2;

    #[test]
    fn lie_round_trip() {
        let f = StructureFile::from_lie(&sl2());
        let text = f.to_json();
        assert!(text.contains("[0, 1, [[0, \"-2\"]]]"));
        let g = StructureFile::parse(&text).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.to_lie(), sl2());
    }

    #[test]
    fn ly_round_trip() {
        let s = AdjointLySpec::new(sl2(), AdjointVariant::II(Rat::new(-1, 4))).unwrap();
        let a = build_adjoint_ly(&s);
        let text = StructureFile::from_ly(&a).to_json();
        assert!(text.contains("\"1/2\"") || text.contains("\"-1/2\""));
        assert_eq!(StructureFile::parse(&text).unwrap().to_ly(), a);
    }

    #[test]
    fn diagnostics() {
        let e = StructureFile::parse("{\n \"dim\": 2,\n \"binary\": [\n").unwrap_err();
        assert!(e.line.is_some());
        let e = StructureFile::parse("{\"dim\": 2, \"binary\": [[0, 1, [[5, \"1\"]]]]}").unwrap_err();
        assert_eq!(e.field.as_deref(), Some("binary[0][2][0][0]"));
        let e = StructureFile::parse("{\"dim\": 2, \"binary\": [[0, 1, [[1, \"x\"]]]]}").unwrap_err();
        assert!(e.to_string().contains("bad rational"));
        let e = StructureFile::parse("{\"dim\": 2, \"labels\": [\"a\"]}").unwrap_err();
        assert_eq!(e.field.as_deref(), Some("labels"));
        assert!(StructureFile::parse("{\"dim\": 2, \"binary\": [[1, 0, []]]}").is_err());
    }

    #[test]
    fn unital_round_trips() {
        let c = crate::compjordan::build_composition(CompKind::O);
        let text = StructureFile::from_composition(&c).to_json();
        let back = StructureFile::parse(&text).unwrap().to_composition().unwrap();
        assert_eq!(back.alg, c.alg);
        assert!(back.verify().is_ok());
        let j = crate::compjordan::build_jordan(&"H3(K)".parse().unwrap()).unwrap();
        let f = StructureFile::parse(&StructureFile::from_jordan(&j.alg).to_json()).unwrap();
        assert_eq!(f.kind, Kind::Jordan);
        assert_eq!(f.to_unital(), j.alg);
    }

    #[test]
    fn cartan_round_trip() {
        let f = StructureFile::from_lie(&sl2()).with_cartan(vec![vec![(1, Rat::one())]]);
        let g = StructureFile::parse(&f.to_json()).unwrap();
        assert_eq!(g.cartan, f.cartan);
        assert_eq!(g, f);
    }

    #[test]
    fn integers_accepted() {
        let f = StructureFile::parse("{\"kind\": \"lie\", \"dim\": 2, \"binary\": [[0, 1, [[1, 3]]]]}").unwrap();
        assert_eq!(f.to_lie().get(0, 1), vec![(1, Rat::int(3))]);
    }
}

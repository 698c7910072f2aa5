//! Named constructions.
//!
//! | name | structure |
//! |---|---|
//! | `lie:sl(n)`, `lie:so(n)`, `lie:sp(n)` | matrix Lie algebra |
//! | `lts-so(p,q)`, `lts-sp(p,q)` | triple system on V₁⊗V₂, symmetric or skew forms |
//! | `ly-sp2-sym(n,ε)` | LY algebra on sl(V₁)⊗sym₀(V₂), dim V₂ = n, sign ε |
//! | `ly-sl(n1,n2)` | LY algebra on sl(V₁)⊗sl(V₂) |
//! | `ly-tits:X,Y` | LY algebra inside T(X,Y) |
//! | `comp:k\|K\|Q\|O` | split composition algebra |
//! | `jordan:Hn(C)`, `jordan:JV(m)` | Jordan algebra |
//! | `tits:X,Y` | T(X,Y) for X, Y composition or Jordan algebras |
//! | `tkk:Q,J` | T(Q,J) through the Tits–Kantor–Koecher bracket |
//! | `symp:TJ(J)` | symplectic triple system T_J, J in `TJ_CATALOG` |
//! | `symp:g(F)` | g(T) for F a symplectic file or `TJ(J)` |
//! | `lts-symp:TJ(J)` | triple system on V⊗T_J |
//! | `adjoint:L,i` and `adjoint:L,ii,β` | adjoint-type LY algebra on `lie:L` |

use std::fmt;

use crate::adjoint::{build_adjoint_ly, AdjointLySpec, AdjointVariant};
use crate::algebra::{AlgError, AntiAlg, LYAlg};
use crate::compjordan::{build_composition, build_jordan, trace_admissible_view, CompAlg, CompKind, Ingredient, JordanAlg, JordanKind};
use crate::json::StructureFile;
use crate::linalg::{BilinForm, SpVec};
use crate::matrix::{build_matrix_lie, lts_orthosymplectic_sum, ly_sl_tensor_sl, ly_sp_tensor_sym, LyInstance, MatrixLieSpec};
use crate::rat::Rat;
use crate::symplectic::{build_g_of_t, construct_tj, cubic_jordan, lts_from_symplectic, SymplecticTripleData};
use crate::tits::{build_tits, build_tkk_row, ly_inside_tits, TitsAlgebra};

/// Example names, one per pattern.
pub const EXAMPLES: &[&str] = &[
    "lie:sl(3)",
    "lts-so(3,5)",
    "lts-sp(2,2)",
    "ly-sp2-sym(3,1)",
    "ly-sl(2,3)",
    "ly-tits:O,H3(k)",
    "comp:O",
    "jordan:H3(O)",
    "jordan:JV(4)",
    "tits:O,H3(O)",
    "tkk:Q,H3(K)",
    "symp:TJ(H3(k))",
    "symp:g(TJ(k))",
    "lts-symp:TJ(k)",
    "adjoint:sl2,ii,-1/4",
];

pub enum Structure {
    Lie { algebra: AntiAlg, cartan: Vec<SpVec> },
    /// `m_cartan` lies in m and completes the diagonal inner derivations to
    /// a split Cartan of g(m).
    Ly { algebra: LYAlg, m_cartan: Vec<SpVec>, reducible: bool },
    Symplectic(SymplecticTripleData),
    Composition(CompAlg),
    Jordan(JordanAlg),
}

pub struct Built {
    pub name: String,
    pub structure: Structure,
}

impl Built {
    pub fn dim(&self) -> usize {
        match &self.structure {
            Structure::Lie { algebra, .. } => algebra.dim(),
            Structure::Ly { algebra, .. } => algebra.dim(),
            Structure::Symplectic(t) => t.dim(),
            Structure::Composition(c) => c.dim(),
            Structure::Jordan(j) => j.dim(),
        }
    }

    pub fn to_file(&self) -> StructureFile {
        match &self.structure {
            Structure::Lie { algebra, cartan } => StructureFile::from_lie(algebra).with_cartan(cartan.clone()),
            Structure::Ly { algebra, m_cartan, .. } => StructureFile::from_ly(algebra).with_cartan(m_cartan.clone()),
            Structure::Symplectic(t) => StructureFile::from_symplectic(t),
            Structure::Composition(c) => StructureFile::from_composition(c),
            Structure::Jordan(j) => StructureFile::from_jordan(&j.alg),
        }
    }
}

impl fmt::Debug for Built {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Built({}, dim {})", self.name, self.dim())
    }
}

fn invalid(msg: impl Into<String>) -> AlgError {
    AlgError::Invalid(msg.into())
}

/// Splits at commas outside parentheses.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// "head(args)" → args.
fn call<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

fn numbers(args: &str, count: usize, name: &str) -> Result<Vec<i64>, AlgError> {
    let v: Vec<i64> = split_args(args).iter().map(|a| a.trim_start_matches('+').parse::<i64>()).collect::<Result<_, _>>().map_err(|_| invalid(format!("{name}: expected {count} integers")))?;
    if v.len() != count {
        return Err(invalid(format!("{name}: expected {count} integers")));
    }
    Ok(v)
}

fn dims(args: &str, name: &str) -> Result<(usize, usize), AlgError> {
    let v = numbers(args, 2, name)?;
    if v.iter().any(|&d| d < 1) {
        return Err(invalid(format!("{name}: dimensions must be positive")));
    }
    Ok((v[0] as usize, v[1] as usize))
}

fn ly(inst: LyInstance) -> Structure {
    Structure::Ly { algebra: inst.ly, m_cartan: inst.m_cartan, reducible: inst.reducible }
}

/// Parses "sl2", "sl(2)", "so5", "sp4" and the like.
pub fn matrix_lie_spec(s: &str) -> Result<MatrixLieSpec, AlgError> {
    let s = s.trim();
    let bad = || invalid(format!("unknown Lie algebra {s:?} (expected sl(n), so(n) or sp(n))"));
    let (head, rest) = s.split_at(s.len().min(2));
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    let n: usize = rest.trim().parse().map_err(|_| bad())?;
    match head {
        "sl" => Ok(MatrixLieSpec::sl(n)),
        "so" => Ok(MatrixLieSpec::so(n)),
        "sp" => Ok(MatrixLieSpec::sp(n)),
        _ => Err(bad()),
    }
}

fn tits_pair(args: &str, name: &str) -> Result<TitsAlgebra, AlgError> {
    let a = split_args(args);
    if a.len() != 2 {
        return Err(invalid(format!("{name}: expected two ingredients X,Y")));
    }
    let v = |s: &str| Ingredient::parse(s).map(|i| trace_admissible_view(&i));
    build_tits(v(a[0])?, v(a[1])?)
}

/// T_J for "TJ(J)", or a symplectic structure file.
fn symplectic_source(arg: &str) -> Result<SymplecticTripleData, AlgError> {
    if let Some(j) = call(arg, "TJ") {
        return Ok(construct_tj(&cubic_jordan(j)?)?.data);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| invalid(format!("{arg}: {e}")))?;
    let file = StructureFile::parse(&text).map_err(|e| invalid(format!("{arg}: {e}")))?;
    file.to_symplectic()
}

pub fn build(name: &str) -> Result<Built, AlgError> {
    let name = name.trim();
    let structure = build_structure(name)?;
    Ok(Built { name: name.to_string(), structure })
}

fn build_structure(name: &str) -> Result<Structure, AlgError> {
    if let Some(l) = name.strip_prefix("lie:") {
        let m = build_matrix_lie(&matrix_lie_spec(l)?)?;
        return Ok(Structure::Lie { algebra: m.algebra, cartan: m.cartan });
    }
    if let Some(args) = call(name, "lts-so") {
        let (p, q) = dims(args, "lts-so")?;
        return lts_orthosymplectic_sum(&BilinForm::split(p, 1, 1), &BilinForm::split(q, 1, -1)).map(ly);
    }
    if let Some(args) = call(name, "lts-sp") {
        let (p, q) = dims(args, "lts-sp")?;
        if p % 2 == 1 || q % 2 == 1 {
            return Err(invalid("lts-sp: skew forms need even dimensions"));
        }
        return lts_orthosymplectic_sum(&BilinForm::split(p, -1, 0), &BilinForm::split(q, -1, 0)).map(ly);
    }
    if let Some(args) = call(name, "ly-sp2-sym") {
        let v = numbers(args, 2, "ly-sp2-sym")?;
        let (n, eps) = (v[0], v[1]);
        let f2 = match eps {
            1 if n >= 1 => BilinForm::split(n as usize, 1, 1),
            -1 if n >= 2 && n % 2 == 0 => BilinForm::split(n as usize, -1, 0),
            1 | -1 => return Err(invalid(format!("ly-sp2-sym: no form of dimension {n} and sign {eps}"))),
            _ => return Err(invalid("ly-sp2-sym: the sign must be 1 or -1")),
        };
        return ly_sp_tensor_sym(&BilinForm::split(2, -1, 0), &f2).map(ly);
    }
    if let Some(args) = call(name, "ly-sl") {
        let (a, b) = dims(args, "ly-sl")?;
        return ly_sl_tensor_sl(a, b).map(ly);
    }
    if let Some(args) = name.strip_prefix("ly-tits:") {
        let t = tits_pair(args, "ly-tits")?;
        let (lo, hi) = (t.dx, t.dx + t.m_dim());
        let m_cartan = t.cartan.iter().filter(|v| v.iter().all(|(i, _)| (lo..hi).contains(i))).map(|v| v.iter().map(|(i, x)| (i - lo, x.clone())).collect()).collect();
        return Ok(Structure::Ly { algebra: ly_inside_tits(&t), m_cartan, reducible: false });
    }
    if let Some(c) = name.strip_prefix("comp:") {
        return Ok(Structure::Composition(build_composition(c.parse::<CompKind>()?)));
    }
    if let Some(j) = name.strip_prefix("jordan:") {
        return Ok(Structure::Jordan(build_jordan(&j.parse::<JordanKind>()?)?));
    }
    if let Some(args) = name.strip_prefix("tits:") {
        let t = tits_pair(args, "tits")?;
        return Ok(Structure::Lie { algebra: t.algebra, cartan: t.cartan });
    }
    if let Some(args) = name.strip_prefix("tkk:") {
        let a = split_args(args);
        if a.len() != 2 || a[0] != "Q" {
            return Err(invalid("tkk: expected Q,<jordan>"));
        }
        let t = build_tkk_row(build_jordan(&a[1].parse::<JordanKind>()?)?)?;
        return Ok(Structure::Lie { algebra: t.algebra, cartan: t.cartan });
    }
    if let Some(arg) = name.strip_prefix("symp:") {
        if let Some(j) = call(arg, "TJ") {
            return Ok(Structure::Symplectic(construct_tj(&cubic_jordan(j)?)?.data));
        }
        if let Some(src) = call(arg, "g") {
            let g = build_g_of_t(&symplectic_source(src)?)?;
            return Ok(Structure::Lie { algebra: g.algebra, cartan: g.cartan });
        }
        return Err(invalid("symp: expected TJ(<jordan>) or g(<file>)"));
    }
    if let Some(arg) = name.strip_prefix("lts-symp:") {
        let t = symplectic_source(arg)?;
        return Ok(Structure::Ly { algebra: lts_from_symplectic(&t), m_cartan: Vec::new(), reducible: false });
    }
    if let Some(args) = name.strip_prefix("adjoint:") {
        let a = split_args(args);
        let base = build_matrix_lie(&matrix_lie_spec(a[0])?)?.algebra;
        let variant = match a[1..] {
            ["i"] => AdjointVariant::I,
            ["ii", beta] => AdjointVariant::II(beta.parse::<Rat>().map_err(|_| invalid(format!("adjoint: bad beta {beta:?}")))?),
            _ => return Err(invalid("adjoint: expected <L>,i or <L>,ii,<beta>")),
        };
        return Ok(Structure::Ly { algebra: build_adjoint_ly(&AdjointLySpec::new(base, variant)?), m_cartan: Vec::new(), reducible: false });
    }
    Err(invalid(format!("unknown construction {name:?}; examples: {}", EXAMPLES.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn args_respect_parentheses() {
        assert_eq!(split_args("O,H3(O)"), vec!["O", "H3(O)"]);
        assert_eq!(split_args("sl2, ii, -1/4"), vec!["sl2", "ii", "-1/4"]);
        assert_eq!(call("ly-sl(2,3)", "ly-sl"), Some("2,3"));
    }

    #[test]
    fn dimensions() {
        for (name, dim) in [
            ("lie:sl(3)", 8),
            ("lie:sp4", 10),
            ("lts-so(3,5)", 15),
            ("lts-sp(2,2)", 4),
            ("ly-sp2-sym(3,1)", 15),
            ("ly-sp2-sym(6,-1)", 42),
            ("ly-sl(2,3)", 24),
            ("ly-tits:O,H3(k)", 35),
            ("comp:O", 8),
            ("jordan:H3(O)", 27),
            ("jordan:JV(4)", 5),
            ("tits:K,H3(K)", 16),
            ("tkk:Q,H3(K)", 35),
            ("symp:TJ(H3(k))", 14),
            ("symp:g(TJ(k))", 14),
            ("lts-symp:TJ(k)", 8),
            ("adjoint:sl2,ii,-1/4", 3),
            ("adjoint:sl(3),i", 8),
        ] {
            assert_eq!(build(name).unwrap().dim(), dim, "{name}");
        }
    }

    #[test]
    fn bad_names() {
        for name in ["nope", "ly-sl(1,3)", "ly-sl(2)", "lts-sp(3,2)", "adjoint:sl2,ii,0", "adjoint:sl2,iii", "tkk:O,H3(k)", "symp:TJ(H4(k))", "ly-sp2-sym(3,2)", "lie:gl3"] {
            assert!(build(name).is_err(), "{name}");
        }
    }

    #[test]
    fn examples_build() {
        for name in EXAMPLES.iter().filter(|n| !n.starts_with("tits:O")) {
            build(name).unwrap();
        }
    }
}

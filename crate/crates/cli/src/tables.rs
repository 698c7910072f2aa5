//! The `table` command: the magic square, the T_J series, and the
//! irreducible non-simple-type instances with their enveloping algebras.

use anyhow::{bail, Result};
use serde_json::{json, Value};

use lyalg::algebra::{
    centroid_dim, check_lie, check_ly, classify_type, commutant_dim, diagonal_elements, enveloping_cartan, enveloping_unchecked, is_semisimple_unchecked, is_simple_unchecked, orthogonal_complement, same_span,
};
use lyalg::catalog::{build, Structure};
use lyalg::symplectic::{construct_tj, cubic_jordan, TJ_CATALOG};
use lyalg::tits::magic_square;

use crate::report::Row;
use crate::verify::DEEP_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    MagicSquare,
    Symplectic,
    Classification,
}

impl Table {
    pub fn name(self) -> &'static str {
        match self {
            Table::MagicSquare => "magic-square",
            Table::Symplectic => "symplectic",
            Table::Classification => "classification",
        }
    }
}

/// (Inder, g) types of g(T_J), in the order of `TJ_CATALOG`.
const SYMPLECTIC_TYPES: [(&str, &str); 5] = [("A1", "G2"), ("C3", "F4"), ("A5", "E6"), ("D6", "E7"), ("E7", "E8")];

/// Construction, type of g(m), type of D(m,m).
const CLASSIFICATION: [(&str, &str, &str); 15] = [
    ("ly-sl(2,3)", "A5", "A1+A2"),
    ("lts-so(3,3)", "A3", "A1+A1"),
    ("lts-sp(2,2)", "B2", "A1+A1"),
    ("ly-sp2-sym(3,1)", "C3", "A1+A1"),
    ("ly-sp2-sym(6,-1)", "D6", "A1+C3"),
    ("lts-symp:TJ(k)", "G2", "A1+A1"),
    ("lts-symp:TJ(H3(k))", "F4", "A1+C3"),
    ("lts-symp:TJ(H3(K))", "E6", "A1+A5"),
    ("lts-symp:TJ(H3(Q))", "E7", "A1+D6"),
    ("lts-symp:TJ(H3(O))", "E8", "A1+E7"),
    ("ly-tits:O,H3(k)", "F4", "A1+G2"),
    ("ly-tits:O,H3(K)", "E6", "A2+G2"),
    ("ly-tits:O,H3(Q)", "E7", "C3+G2"),
    ("ly-tits:O,H3(O)", "E8", "F4+G2"),
    ("ly-tits:Q,H3(O)", "E7", "A1+F4"),
];

fn type_value<E: std::fmt::Display>(t: Result<impl ToString, E>) -> Value {
    match t {
        Ok(t) => json!(t.to_string()),
        Err(e) => json!(format!("unclassified: {e}")),
    }
}

fn magic(deep: bool) -> Result<Vec<Row>> {
    let limit = if deep { usize::MAX } else { DEEP_DIM - 1 };
    let mut rows = Vec::new();
    for c in magic_square(limit)? {
        let ok = c.matches();
        rows.push(Row {
            cells: vec![
                ("cell", json!(format!("T({},H3({}))", c.row, c.col))),
                ("dim", json!(c.dim)),
                ("jacobi", json!(c.lie)),
                ("type", type_value(c.computed.as_ref().map(|t| t.to_string()))),
                ("expected", json!(c.expected)),
                ("ok", json!(ok)),
            ],
            ok,
        });
        if !ok {
            break;
        }
    }
    Ok(rows)
}

fn symplectic() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (name, (ein, eg)) in TJ_CATALOG.iter().zip(SYMPLECTIC_TYPES) {
        let s = construct_tj(&cubic_jordan(name)?)?;
        let g = &s.g;
        let tin = classify_type(&g.inder.algebra, &diagonal_elements(&g.inder)).map(|t| t.to_string());
        let tg = classify_type(&g.algebra, &g.cartan).map(|t| t.to_string());
        let identity = g.dim() == 3 + 2 * s.data.dim() + g.inder_dim();
        let ok = identity && tin.as_deref().ok() == Some(ein) && tg.as_deref().ok() == Some(eg);
        rows.push(Row {
            cells: vec![
                ("J", json!(name)),
                ("dim_T", json!(s.data.dim())),
                ("dim_inder", json!(g.inder_dim())),
                ("dim_g", json!(g.dim())),
                ("dim_identity", json!(identity)),
                // construct_tj only returns triples whose g(T) passed Jacobi
                ("jacobi", json!(true)),
                ("inder", type_value(tin)),
                ("g", type_value(tg)),
                ("expected", json!(format!("{ein}/{eg}"))),
                ("ok", json!(ok)),
            ],
            ok,
        });
        if !ok {
            break;
        }
    }
    Ok(rows)
}

fn classification(deep: bool) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (name, eg, ed) in CLASSIFICATION {
        let b = build(name)?;
        let Structure::Ly { algebra: a, m_cartan, .. } = &b.structure else {
            bail!("{name} is not an LY algebra");
        };
        let ly = (deep || a.dim() < DEEP_DIM).then(|| check_ly(a).ok());
        let env = enveloping_unchecked(a)?;
        let g = env.g();
        let lie = (deep || g.dim() < DEEP_DIM).then(|| check_lie(g).ok);
        let d = &env.inner.algebra;
        let d_ss = is_semisimple_unchecked(d);
        let d_centroid = centroid_dim(d);
        let commutant = commutant_dim(&env.inner);
        let g_simple = is_simple_unchecked(g);
        let td = classify_type(d, &diagonal_elements(&env.inner)).map(|t| t.to_string());
        let tg = classify_type(g, &enveloping_cartan(&env, m_cartan)).map(|t| t.to_string());
        let perp = (lie == Some(true)).then(|| orthogonal_complement(&env.pair).is_ok_and(|c| same_span(&c, &env.pair.m_basis, g.dim())));
        let ok = ly != Some(false)
            && lie != Some(false)
            && perp != Some(false)
            && d_ss
            && d_centroid == 2
            && commutant == 1
            && g_simple
            && tg.as_deref().ok() == Some(eg)
            && td.as_deref().ok() == Some(ed);
        rows.push(Row {
            cells: vec![
                ("construction", json!(name)),
                ("m", json!(a.dim())),
                ("h", json!(env.h_dim())),
                ("g", json!(g.dim())),
                ("ly", json!(ly)),
                ("jacobi", json!(lie)),
                ("m_perp", json!(perp)),
                ("inner", type_value(td)),
                ("inner_centroid", json!(d_centroid)),
                ("commutant", json!(commutant)),
                ("g_simple", json!(g_simple)),
                ("g_type", type_value(tg)),
                ("expected", json!(format!("{eg}/{ed}"))),
                ("ok", json!(ok)),
            ],
            ok,
        });
        if !ok {
            break;
        }
    }
    Ok(rows)
}

pub fn rows(t: Table, deep: bool) -> Result<Vec<Row>> {
    match t {
        Table::MagicSquare => magic(deep),
        Table::Symplectic => symplectic(),
        Table::Classification => classification(deep),
    }
}

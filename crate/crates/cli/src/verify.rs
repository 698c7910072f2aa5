//! The `check` suites.

use lyalg::algebra::{
    centroid_dim, check_lie, check_ly, classify_type, commutant_dim, diagonal_elements, enveloping_cartan, enveloping_unchecked, is_semisimple_unchecked, is_simple_unchecked, orthogonal_complement, same_span, AntiAlg,
    LYAlg, ModuleAction, Violation,
};
use lyalg::compjordan::CompKind;
use lyalg::json::{Kind, StructureFile};
use lyalg::linalg::SpVec;
use lyalg::symplectic::{build_g_of_t, lts_from_symplectic};

use crate::report::Report;

/// Jacobi and LY axiom checks on structures of at least this dimension
/// need `--deep`.
pub const DEEP_DIM: usize = 150;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Lie,
    Ly,
    Full,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Lie => "lie",
            Mode::Ly => "ly",
            Mode::Full => "full",
        }
    }
}

fn tuple_text(labels: &[String], v: &Violation) -> String {
    let t: Vec<&str> = v.tuple.iter().map(|&i| labels[i].as_str()).collect();
    format!("fails on ({})", t.join(", "))
}

/// Jacobi identity, gated by size. Returns false only on a failure.
fn jacobi(r: &mut Report, name: &str, a: &AntiAlg, deep: bool) -> Option<bool> {
    if a.dim() >= DEEP_DIM && !deep {
        r.skip(format!("{name} (dim {} needs --deep)", a.dim()));
        return None;
    }
    let rep = check_lie(a);
    let detail = rep.violation.as_ref().map(|v| tuple_text(a.labels(), v));
    Some(r.check(name, rep.ok, detail))
}

fn ly_axioms(r: &mut Report, a: &LYAlg, deep: bool) -> Option<bool> {
    if a.dim() >= DEEP_DIM && !deep {
        r.skip(format!("LY1-LY6 (dim {} needs --deep)", a.dim()));
        return None;
    }
    let rep = check_ly(a);
    for ax in &rep.axioms {
        let detail = ax.violation.as_ref().map(|v| tuple_text(a.labels(), v));
        r.check(ax.name, ax.ok, detail);
    }
    Some(rep.ok())
}

/// Semisimplicity, centroid, simplicity and type of a Lie algebra known
/// (or assumed under the size gate) to satisfy Jacobi.
fn lie_invariants(r: &mut Report, prefix: &str, a: &AntiAlg, cartan: &[SpVec]) {
    let ss = is_semisimple_unchecked(a);
    r.prop(format!("{prefix}semisimple"), ss);
    if !ss {
        return;
    }
    r.prop(format!("{prefix}centroid_dim"), centroid_dim(a));
    r.prop(format!("{prefix}simple"), is_simple_unchecked(a));
    if cartan.is_empty() {
        r.skip(format!("{prefix}type (no split Cartan available)"));
        return;
    }
    match classify_type(a, cartan) {
        Ok(t) => r.prop(format!("{prefix}type"), t.to_string()),
        Err(e) => r.prop(format!("{prefix}type"), format!("unclassified: {e}")),
    }
}

fn module_invariants(r: &mut Report, prefix: &str, inner: &ModuleAction) {
    let d = &inner.algebra;
    let ss = is_semisimple_unchecked(d);
    r.prop(format!("{prefix}semisimple"), ss);
    if ss {
        r.prop(format!("{prefix}centroid_dim"), centroid_dim(d));
        match classify_type(d, &diagonal_elements(inner)) {
            Ok(t) => r.prop(format!("{prefix}type"), t.to_string()),
            Err(e) => r.prop(format!("{prefix}type"), format!("unclassified: {e}")),
        }
    }
    r.prop("commutant_dim", commutant_dim(inner));
}

fn check_lie_file(r: &mut Report, f: &StructureFile, mode: Mode, deep: bool) {
    let a = f.to_lie();
    r.dim("g", a.dim());
    let ok = jacobi(r, "jacobi", &a, deep);
    if mode == Mode::Full && ok != Some(false) {
        lie_invariants(r, "", &a, &f.cartan);
    }
}

fn check_ly_file(r: &mut Report, f: &StructureFile, mode: Mode, deep: bool) {
    let a = f.to_ly();
    r.dim("m", a.dim());
    if mode != Mode::Lie && ly_axioms(r, &a, deep) == Some(false) {
        return;
    }
    if mode == Mode::Ly {
        return;
    }
    let env = match enveloping_unchecked(&a) {
        Ok(e) => e,
        Err(e) => {
            r.check("inner derivations close", false, Some(e.to_string()));
            return;
        }
    };
    r.dim("h", env.h_dim());
    r.dim("g", env.g().dim());
    let ok = jacobi(r, "g(m) jacobi", env.g(), deep);
    if mode != Mode::Full || ok == Some(false) {
        return;
    }
    r.prop("binary_zero", a.is_binary_zero());
    module_invariants(r, "inner_", &env.inner);
    // subalgebra enumeration is out of reach
    r.prop("inner_maximal_subalgebra", "unverified");
    lie_invariants(r, "g_", env.g(), &enveloping_cartan(&env, &f.cartan));
    if ok == Some(true) {
        match orthogonal_complement(&env.pair) {
            Ok(c) => r.prop("m_is_killing_complement", same_span(&c, &env.pair.m_basis, env.g().dim())),
            Err(e) => r.prop("m_is_killing_complement", format!("undetermined: {e}")),
        }
    } else {
        r.skip("m_is_killing_complement (needs the g(m) Jacobi check)");
    }
}

fn check_symplectic_file(r: &mut Report, f: &StructureFile, mode: Mode, deep: bool) {
    let t = match f.to_symplectic() {
        Ok(t) => t,
        Err(e) => {
            r.check("symplectic data", false, Some(e.to_string()));
            return;
        }
    };
    r.dim("T", t.dim());
    if mode != Mode::Ly {
        r.check("nonzero triple product", !t.is_triple_zero(), None);
        let g = match build_g_of_t(&t) {
            Ok(g) => g,
            Err(e) => {
                r.check("g(T) assembles", false, Some(e.to_string()));
                return;
            }
        };
        r.dim("inder", g.inder_dim());
        r.dim("g", g.dim());
        let ok = jacobi(r, "g(T) jacobi", &g.algebra, deep);
        if mode == Mode::Full && ok != Some(false) {
            r.prop("dim_identity", g.dim() == 3 + 2 * t.dim() + g.inder_dim());
            module_invariants(r, "inder_", &g.inder);
            lie_invariants(r, "g_", &g.algebra, &g.cartan);
        }
    }
    if mode != Mode::Lie {
        let lts = lts_from_symplectic(&t);
        r.dim("m", lts.dim());
        ly_axioms(r, &lts, deep);
    }
}

fn check_composition_file(r: &mut Report, f: &StructureFile, mode: Mode) {
    let c = match f.to_composition() {
        Ok(c) => c,
        Err(e) => {
            r.check("composition", false, Some(e.to_string()));
            return;
        }
    };
    r.dim("C", c.dim());
    let v = c.verify();
    if !r.check("multiplicative norm", v.is_ok(), v.err()) {
        return;
    }
    if mode == Mode::Full {
        let v = c.verify_inner_derivations();
        r.check("inner derivations", v.is_ok(), v.err());
        r.prop("commutative", c.alg.is_commutative());
        r.prop("associative", c.alg.associativity_witness().is_none());
        if c.kind != CompKind::K1 {
            r.prop("der_dim", c.alg.derivation_algebra().algebra.dim());
        }
    }
}

fn check_jordan_file(r: &mut Report, f: &StructureFile, mode: Mode) {
    let j = f.to_unital();
    r.dim("J", j.dim());
    r.check("commutative", j.is_commutative(), None);
    r.check("unit", j.unit_index().is_some(), None);
    let w = j.jordan_witness();
    let detail = w.map(|(a, b, c)| format!("fails on ({}, {}, {})", j.labels()[a], j.labels()[b], j.labels()[c]));
    r.check("jordan identity", w.is_none(), detail);
    if mode == Mode::Full {
        r.prop("associative", j.associativity_witness().is_none());
        r.prop("der_dim", j.derivation_algebra().algebra.dim());
    }
}

pub fn check(id: &str, f: &StructureFile, mode: Mode, deep: bool) -> Report {
    let mut r = Report::new(id, f.kind.name(), mode.name());
    match f.kind {
        Kind::Lie => check_lie_file(&mut r, f, mode, deep),
        Kind::Ly => check_ly_file(&mut r, f, mode, deep),
        Kind::Symplectic => check_symplectic_file(&mut r, f, mode, deep),
        Kind::Composition => check_composition_file(&mut r, f, mode),
        Kind::Jordan => check_jordan_file(&mut r, f, mode),
    }
    r
}

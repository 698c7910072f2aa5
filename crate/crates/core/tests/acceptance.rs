//! Acceptance suite: one line per criterion, PASS or FAIL with details.
//! Runs without the test harness so the lines always reach the output.
//! Exact arithmetic throughout, so every comparison is literal equality;
//! the only tolerances are the runtime budgets pinned below.

use std::time::{Duration, Instant};

use lyalg::adjoint::{classify_adjoint_enveloping, AdjointEnveloping, AdjointLySpec, AdjointVariant};
use lyalg::algebra::{
    centroid_dim, check_lie, check_ly, classify_type, commutant_dim, enveloping, is_semisimple, is_simple, ly_from_reductive, orthogonal_complement, same_span, Enveloping, LYAlg,
};
use lyalg::catalog::{self, build, Structure};
use lyalg::compjordan::{CompKind, JordanKind};
use lyalg::json::StructureFile;
use lyalg::linalg::{BilinForm, Mat};
use lyalg::matrix::{build_matrix_lie, check_coincidence, lts_orthosymplectic_sum, ly_sl_tensor_sl, ly_sp_tensor_sym, sl_span, sp2_span, trace_form, Sym0Space};
use lyalg::symplectic::{build_g_of_t, construct_tj, cubic_jordan, SymplecticTripleData, TJ_CATALOG};
use lyalg::tits::{build_tits, ly_inside_tits, magic_cell, magic_square, solve_equivariant_bracket, tits_bracket_problem, tits_transport};
use lyalg::compjordan::{trace_admissible_view, Ingredient};
use lyalg::Rat;

const MAGIC_NO_JACOBI_BUDGET: Duration = Duration::from_secs(10);
const E8_JACOBI_BUDGET: Duration = Duration::from_secs(600);
const LY_ITEM_BUDGET: Duration = Duration::from_secs(60);

/// Jacobi is skipped at this dimension in the timed pass of criterion 1.
const NO_JACOBI_FROM: usize = 150;

/// Criteria whose literal statement is known not to hold; see the
/// analysis printed with the FAIL line.
const EXPECTED_FAILURES: &[usize] = &[4];

const MAGIC_DIMS: [usize; 16] = [3, 8, 21, 52, 8, 16, 35, 78, 21, 35, 66, 133, 52, 78, 133, 248];
const MAGIC_TYPES: [&str; 16] = ["A1", "A2", "C3", "F4", "A2", "A2+A2", "A5", "E6", "C3", "A5", "D6", "E7", "F4", "E6", "E7", "E8"];
const TABLE2: [(&str, &str); 5] = [("A1", "G2"), ("C3", "F4"), ("A5", "E6"), ("D6", "E7"), ("E7", "E8")];

/// Classical families at minimal and minimal+1 parameters.
const FAMILIES: [&str; 11] = [
    "ly-sl(2,3)",
    "ly-sl(2,4)",
    "ly-sl(3,3)",
    "lts-so(3,3)",
    "lts-so(3,4)",
    "lts-sp(2,2)",
    "lts-sp(2,4)",
    "ly-sp2-sym(3,1)",
    "ly-sp2-sym(4,1)",
    "ly-sp2-sym(6,-1)",
    "ly-sp2-sym(8,-1)",
];
const INSIDE_TITS: [&str; 5] = ["ly-tits:O,H3(k)", "ly-tits:O,H3(K)", "ly-tits:O,H3(Q)", "ly-tits:O,H3(O)", "ly-tits:Q,H3(O)"];
const ADJOINT: [&str; 6] = ["adjoint:sl2,ii,1", "adjoint:sl2,ii,-1", "adjoint:sl2,ii,-1/4", "adjoint:sl3,ii,1", "adjoint:sl3,ii,-1", "adjoint:sl3,ii,-1/4"];

struct Instance {
    name: String,
    ly: LYAlg,
    adjoint: bool,
    axioms_ok: bool,
    axioms_time: Duration,
    env: Option<Enveloping>,
}

fn instances() -> Vec<Instance> {
    let symp: Vec<String> = TJ_CATALOG.iter().map(|j| format!("lts-symp:TJ({j})")).collect();
    let names = FAMILIES.iter().chain(&INSIDE_TITS).map(|s| s.to_string()).chain(symp).chain(ADJOINT.iter().map(|s| s.to_string()));
    names
        .map(|name| {
            let b = build(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
            let Structure::Ly { algebra, .. } = b.structure else { panic!("{name} is not an LY algebra") };
            let t = Instant::now();
            let axioms_ok = check_ly(&algebra).ok();
            let axioms_time = t.elapsed();
            let env = enveloping(&algebra).ok();
            Instance { adjoint: name.starts_with("adjoint:"), name, ly: algebra, axioms_ok, axioms_time, env }
        })
        .collect()
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let cells = magic_square(NO_JACOBI_FROM - 1).map_err(|e| e.to_string())?;
    let fast = t.elapsed();
    ensure(fast <= MAGIC_NO_JACOBI_BUDGET, || format!("cells without Jacobi at dim {NO_JACOBI_FROM}+ took {fast:?}"))?;
    for (n, c) in cells.iter().enumerate() {
        let ty = c.computed.as_ref().map(|t| t.to_string()).map_err(|e| format!("{}/{}: {e}", c.row, c.col))?;
        ensure(ty == MAGIC_TYPES[n] && c.dim == MAGIC_DIMS[n], || format!("cell {}/{}: {ty} dim {}", c.row, c.col, c.dim))?;
        ensure(c.dim >= NO_JACOBI_FROM || c.lie == Some(true), || format!("cell {}/{} fails Jacobi", c.row, c.col))?;
    }
    let t = Instant::now();
    let e8 = magic_cell(CompKind::O, CompKind::O, usize::MAX).map_err(|e| e.to_string())?;
    let deep = t.elapsed();
    ensure(e8.lie == Some(true) && e8.matches(), || "T(O,H3(O)) fails Jacobi or classification".into())?;
    ensure(deep <= E8_JACOBI_BUDGET, || format!("E8 with Jacobi took {deep:?}"))?;
    Ok(format!("16 cells match, all pass Jacobi; no-Jacobi pass {:.2}s, E8 with Jacobi {:.2}s", fast.as_secs_f64(), deep.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let mut out = Vec::new();
    for (name, (ein, eg)) in TJ_CATALOG.iter().zip(TABLE2) {
        let s = construct_tj(&cubic_jordan(name).map_err(|e| e.to_string())?).map_err(|e| format!("{name}: {e}"))?;
        let g = &s.g;
        let inder = classify_type(&g.inder.algebra, &lyalg::algebra::diagonal_elements(&g.inder)).map_err(|e| format!("{name}: {e}"))?.to_string();
        let gt = classify_type(&g.algebra, &g.cartan).map_err(|e| format!("{name}: {e}"))?.to_string();
        ensure(inder == ein && gt == eg, || format!("{name}: ({inder}, {gt})"))?;
        ensure(g.dim() == 3 + 2 * s.data.dim() + g.inder_dim(), || format!("{name}: dimension identity fails"))?;
        ensure(check_lie(&g.algebra).ok, || format!("{name}: g(T) fails Jacobi"))?;
        out.push(format!("{}={}+{}+{}", g.dim(), 3, 2 * s.data.dim(), g.inder_dim()));
    }
    Ok(format!("(A1,G2) (C3,F4) (A5,E6) (D6,E7) (E7,E8); {}", out.join(", ")))
}

fn criterion_3(inst: &[Instance]) -> Outcome {
    let mut slowest = (Duration::ZERO, "");
    for i in inst {
        ensure(i.axioms_ok, || format!("{} fails an LY axiom", i.name))?;
        ensure(i.axioms_time <= LY_ITEM_BUDGET, || format!("{} took {:?}", i.name, i.axioms_time))?;
        if i.axioms_time > slowest.0 {
            slowest = (i.axioms_time, &i.name);
        }
    }
    Ok(format!("{} instances pass LY1-LY6; slowest {} at {:.2}s", inst.len(), slowest.1, slowest.0.as_secs_f64()))
}

fn criterion_4(inst: &[Instance]) -> Outcome {
    let mut off = Vec::new();
    for i in inst.iter().filter(|i| !i.adjoint) {
        let env = i.env.as_ref().ok_or_else(|| format!("{}: no enveloping algebra", i.name))?;
        let d = &env.inner.algebra;
        ensure(is_semisimple(d), || format!("{}: D(m,m) not semisimple", i.name))?;
        ensure(commutant_dim(&env.inner) == 1, || format!("{}: commutant is not 1-dimensional", i.name))?;
        ensure(is_simple(env.g()), || format!("{}: g(m) not simple", i.name))?;
        let c = centroid_dim(d);
        ensure(c >= 2, || format!("{}: D(m,m) is simple", i.name))?;
        if c != 2 {
            off.push(format!("{} (centroid {c})", i.name));
        }
    }
    if off.is_empty() {
        Ok("D(m,m) semisimple with centroid 2, commutant 1, g(m) simple for every instance".into())
    } else {
        Err(format!(
            "centroid_dim != 2 for {}; D(m,m) is semisimple and non-simple there, but an so(4) = sl2+sl2 factor adds a third simple ideal, so the literal centroid_dim = 2 cannot hold at these parameters",
            off.join(", ")
        ))
    }
}

fn criterion_5(inst: &[Instance]) -> Outcome {
    let mut n = 0;
    for i in inst.iter().filter(|i| !i.adjoint) {
        let env = i.env.as_ref().ok_or_else(|| format!("{}: no enveloping algebra", i.name))?;
        let comp = orthogonal_complement(&env.pair).map_err(|e| format!("{}: {e}", i.name))?;
        ensure(same_span(&comp, &env.pair.m_basis, env.g().dim()), || format!("{}: m differs from the Killing complement of D(m,m)", i.name))?;
        n += 1;
    }
    Ok(format!("m = D(m,m)^perp for {n} non-adjoint instances"))
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for l in ["sl2", "sl3", "so5"] {
        let base = build_matrix_lie(&catalog::matrix_lie_spec(l).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.algebra;
        let dim = base.dim();
        let mut cases: Vec<(AdjointVariant, bool)> = vec![(AdjointVariant::I, false)];
        for b in ["1", "-1", "2", "1/4"] {
            cases.push((AdjointVariant::II(b.parse().unwrap()), false));
        }
        cases.push((AdjointVariant::II(Rat::new(-1, 4)), true));
        for (v, dual) in cases {
            let spec = AdjointLySpec::new(base.clone(), v.clone()).map_err(|e| e.to_string())?;
            let got = classify_adjoint_enveloping(&spec).map_err(|e| format!("{l},{v}: {e}"))?;
            let want = if dual { AdjointEnveloping::DualNumbers { radical_dim: dim } } else { AdjointEnveloping::TwoCopies };
            ensure(got == want, || format!("{l},{v}: {got}"))?;
            let env = enveloping(&lyalg::adjoint::build_adjoint_ly(&spec)).map_err(|e| e.to_string())?;
            ensure(!is_simple(env.g()), || format!("{l},{v}: enveloping algebra is simple"))?;
            n += 1;
        }
    }
    Ok(format!("{n} cases over sl2, sl3, so5: dual-numbers exactly at beta = -1/4 with radical dim = dim L; no adjoint enveloping algebra is simple"))
}

fn criterion_7() -> Outcome {
    let id = Mat::identity;
    let err = |e: lyalg::algebra::AlgError| e.to_string();
    let a = ly_sp_tensor_sym(&BilinForm::split(2, -1, 0), &BilinForm::split(4, -1, 0)).map_err(err)?.ly;
    let w1 = BilinForm::new(trace_form(&sp2_span(), &Rat::one()), 1).map_err(|e| e.to_string())?;
    let s0 = Sym0Space::new(&BilinForm::split(4, -1, 0)).map_err(err)?;
    let w2 = BilinForm::new(trace_form(&s0.span, &Rat::new(-1, 2)), 1).map_err(|e| e.to_string())?;
    let b = lts_orthosymplectic_sum(&w1, &w2).map_err(err)?.ly;
    ensure(check_coincidence(&a, &b, &id(15)).map_err(err)?, || "sp2 x sym0(4) vs V3 x V5".into())?;
    ensure(!check_coincidence(&a, &b, &id(15).scale(&Rat::int(2))).map_err(err)?, || "scaled map accepted".into())?;
    let c = ly_sl_tensor_sl(2, 2).map_err(err)?.ly;
    let t = BilinForm::new(trace_form(&sl_span(2), &Rat::one()), 1).map_err(|e| e.to_string())?;
    let mt = BilinForm::new(trace_form(&sl_span(2), &Rat::int(-1)), 1).map_err(|e| e.to_string())?;
    let d = lts_orthosymplectic_sum(&t, &mt).map_err(err)?.ly;
    ensure(check_coincidence(&c, &d, &id(9)).map_err(err)?, || "sl2 x sl2 vs V3 x V3".into())?;
    let v = |s: &str| trace_admissible_view(&Ingredient::parse(s).unwrap());
    let tj = build_tits(v("JV(3)"), v("JV(5)")).map_err(err)?;
    let inside = ly_inside_tits(&tj);
    let sum = lts_orthosymplectic_sum(&BilinForm::split(3, 1, 1), &BilinForm::split(5, 1, 1)).map_err(err)?.ly;
    ensure(check_coincidence(&inside, &sum, &id(15)).map_err(err)?, || "T(J(V3),J(V5)) vs V3 x V5".into())?;
    Ok("sp2 x sym0(4) = V3 x V5, sl2 x sl2 = V3 x V3, inside T(J(V3),J(V5)) = V3 x V5, each under the trace-form identification".into())
}

fn round_trip(f: &StructureFile, name: &str) -> Result<(), String> {
    let text = f.to_json();
    let back = StructureFile::parse(&text).map_err(|e| format!("{name}: {e}"))?;
    ensure(&back == f && back.to_json() == text, || format!("{name}: parse(print(x)) != x"))
}

fn criterion_8(inst: &[Instance]) -> Outcome {
    for i in inst {
        let env = i.env.as_ref().ok_or_else(|| format!("{}: no enveloping algebra", i.name))?;
        let back = ly_from_reductive(&env.pair).map_err(|e| format!("{}: {e}", i.name))?;
        ensure(back == i.ly, || format!("{}: ly_from_reductive(enveloping) differs", i.name))?;
        round_trip(&StructureFile::from_ly(&i.ly), &i.name)?;
    }
    let mut files = inst.len();
    let mut names: Vec<String> = catalog::EXAMPLES.iter().map(|s| s.to_string()).collect();
    for r in CompKind::ALL {
        for c in CompKind::ALL {
            names.push(format!("tits:{r},H3({c})"));
        }
        names.push(format!("comp:{r}"));
        names.push(format!("jordan:H3({r})"));
    }
    names.extend(TJ_CATALOG.iter().map(|j| format!("symp:TJ({j})")));
    for name in &names {
        let b = build(name).map_err(|e| format!("{name}: {e}"))?;
        round_trip(&b.to_file(), name)?;
        if let Structure::Symplectic(t) = &b.structure {
            let back = StructureFile::parse(&b.to_file().to_json()).unwrap().to_symplectic().map_err(|e| e.to_string())?;
            ensure(same_triple(t, &back), || format!("{name}: symplectic data changed"))?;
        }
        files += 1;
    }
    Ok(format!("enveloping round trip exact for {} LY instances; {files} emitted files reparse identically", inst.len()))
}

fn same_triple(a: &SymplecticTripleData, b: &SymplecticTripleData) -> bool {
    let n = a.dim();
    a.labels == b.labels && a.form == b.form && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| a.triple(x, y, z) == b.triple(x, y, z))))
}

fn criterion_9() -> Outcome {
    let tk = construct_tj(&cubic_jordan("k").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.data;
    let g = build_g_of_t(&tk).map_err(|e| e.to_string())?.algebra;
    ensure(check_lie(&g).ok, || "g(T_k) fails Jacobi".into())?;
    let n = g.dim();
    let mut tried = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut bad = g.clone();
                let v = lyalg::linalg::vector::add(g.upper(i, j), &vec![(k, Rat::one())]);
                bad.set(i, j, v);
                ensure(!check_lie(&bad).ok, || format!("corrupting [{}, {}] in direction {} is not detected", g.labels()[i], g.labels()[j], g.labels()[k]))?;
                tried += 1;
            }
        }
    }
    let zero = SymplecticTripleData::new(tk.labels.clone(), tk.form.clone(), |_, _, _| Vec::new()).map_err(|e| e.to_string())?;
    ensure(zero.validate().is_err(), || "zero triple accepted".into())?;
    Ok(format!("all {tried} single-constant corruptions of g(T_k) fail Jacobi; zero triple rejected"))
}

fn criterion_10() -> Outcome {
    let (p, t) = tits_bracket_problem(CompKind::O, &JordanKind::Hermitian(3, CompKind::O)).map_err(|e| e.to_string())?;
    let s = solve_equivariant_bracket(&p).map_err(|e| e.to_string())?;
    ensure(s.dimension() == Some(1), || format!("solution dimension {:?}", s.dimension()))?;
    let f = s.families.iter().find(|f| f.dim() == 1).unwrap();
    let c = f.at(&[Rat::one()]);
    let g = p.assemble(&c);
    let lambda = Rat::int(2);
    ensure(g.homomorphism_violation(&t.algebra, &tits_transport(&t, &lambda)).is_none(), || "alpha = 1 point does not transport onto T(O,H3(O))".into())?;
    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    Ok(format!("one-parameter family, certified {}; alpha = 1 coefficients ({}) map onto T(O,H3(O)) with m scaled by {lambda}", f.certified, cs.join(", ")))
}

fn main() {
    let inst = instances();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "magic square", criterion_1()),
        (2, "symplectic series", criterion_2()),
        (3, "LY axiom suite", criterion_3(&inst)),
        (4, "non-simple-type certificates", criterion_4(&inst)),
        (5, "Killing complement", criterion_5(&inst)),
        (6, "adjoint dichotomy", criterion_6()),
        (7, "coincidences", criterion_7()),
        (8, "round trips", criterion_8(&inst)),
        (9, "negative controls", criterion_9()),
        (10, "uniqueness up to scalars", criterion_10()),
    ];
    let mut unexpected = Vec::new();
    for (n, title, r) in &results {
        match r {
            Ok(d) => println!("criterion {n} ({title}): PASS: {d}"),
            Err(d) => println!("criterion {n} ({title}): FAIL: {d}"),
        }
        if r.is_ok() == EXPECTED_FAILURES.contains(n) {
            unexpected.push(*n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}

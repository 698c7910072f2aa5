use proptest::prelude::*;

use lyalg::adjoint::{build_adjoint_ly, classify_adjoint_enveloping, AdjointEnveloping, AdjointLySpec, AdjointVariant};
use lyalg::algebra::examples::sl2;
use lyalg::algebra::{centroid_dim, check_lie, check_ly, enveloping, is_simple, ly_from_reductive, AntiAlg, default_labels};
use lyalg::catalog::{self, build, Structure};
use lyalg::json::StructureFile;
use lyalg::linalg::{inverse, kernel_basis, rank, vector, Mat};
use lyalg::matrix::build_matrix_lie;
use lyalg::Rat;

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d))
}

fn mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| Mat::from_fn(n, n, |i, j| Rat::int(v[i * n + j])))
}

fn random_alg(n: usize) -> impl Strategy<Value = AntiAlg> {
    let pairs = n * (n - 1) / 2;
    prop::collection::vec(prop::collection::vec((0..n, rat()), 0..3), pairs).prop_map(move |vals| {
        let mut it = vals.into_iter();
        AntiAlg::from_fn(n, default_labels("e", n), |_, _| vector::collect(it.next().unwrap()))
    })
}

/// The same algebra in the basis given by the columns of p.
fn change_basis(a: &AntiAlg, p: &Mat, pinv: &Mat) -> AntiAlg {
    let cols: Vec<_> = (0..a.dim()).map(|j| p.sparse_col(j)).collect();
    AntiAlg::from_fn(a.dim(), default_labels("f", a.dim()), |i, j| pinv.mul_sparse(&a.bracket(&cols[i], &cols[j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_form_a_field(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn rank_plus_nullity(m in mat(4)) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), 4);
        for k in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
        }
        if rank(&m) == 4 {
            prop_assert_eq!(inverse(&m).unwrap().mul(&m), Mat::identity(4));
        } else {
            prop_assert!(inverse(&m).is_err());
        }
    }

    #[test]
    fn lie_files_round_trip(a in random_alg(5)) {
        let f = StructureFile::from_lie(&a);
        let text = f.to_json();
        let back = StructureFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.to_lie(), a);
    }

    #[test]
    fn basis_change_preserves_invariants(p in mat(3)) {
        prop_assume!(rank(&p) == 3);
        let a = sl2();
        let b = change_basis(&a, &p, &inverse(&p).unwrap());
        prop_assert!(check_lie(&b).ok);
        prop_assert!(is_simple(&b));
        prop_assert_eq!(centroid_dim(&b), 1);
    }

    #[test]
    fn jacobi_agrees_with_the_jacobiator(i in 0usize..3, j in 0usize..3, k in 0usize..3, c in rat()) {
        prop_assume!(i < j);
        let mut a = sl2();
        a.set(i, j, vector::add(a.upper(i, j), &vec![(k, c)]));
        // in dimension 3 Jacobi reduces to the single basis triple
        let e = |t| vector::unit(t);
        let cyc = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];
        let jac = cyc.iter().fold(Vec::new(), |acc, &(x, y, z)| vector::add(&acc, &a.bracket(&a.bracket(&e(x), &e(y)), &e(z))));
        prop_assert_eq!(check_lie(&a).ok, jac.is_empty());
    }

    #[test]
    fn adjoint_type_dichotomy(beta in rat()) {
        prop_assume!(!beta.is_zero());
        let spec = AdjointLySpec::new(sl2(), AdjointVariant::II(beta.clone())).unwrap();
        let ly = build_adjoint_ly(&spec);
        prop_assert!(check_ly(&ly).ok());
        let got = classify_adjoint_enveloping(&spec).unwrap();
        if beta == Rat::new(-1, 4) {
            prop_assert_eq!(got, AdjointEnveloping::DualNumbers { radical_dim: 3 });
        } else {
            prop_assert_eq!(got, AdjointEnveloping::TwoCopies);
        }
        let env = enveloping(&ly).unwrap();
        prop_assert_eq!(ly_from_reductive(&env.pair).unwrap(), ly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn families_satisfy_the_axioms(which in 0usize..4, x in 0usize..3, y in 0usize..3, eps in prop::bool::ANY) {
        let name = match which {
            0 => format!("ly-sl({},{})", 2 + (x % 2).min(y % 2), 2 + (x % 2).max(y % 2)),
            1 => format!("lts-so({},{})", 3 + x, 3 + y),
            2 => format!("lts-sp({},{})", 2 + 2 * (x % 2), 2 + 2 * (y % 2)),
            _ => if eps { format!("ly-sp2-sym({},1)", 3 + x) } else { format!("ly-sp2-sym({},-1)", 4 + 2 * x) },
        };
        let b = build(&name).unwrap();
        let Structure::Ly { algebra, .. } = &b.structure else { panic!("{name}") };
        prop_assert!(check_ly(algebra).ok(), "{}", name);
        let env = enveloping(algebra).unwrap();
        prop_assert!(check_lie(env.g()).ok, "{}", name);
        prop_assert_eq!(&ly_from_reductive(&env.pair).unwrap(), algebra);
        prop_assert_eq!(build(&name).unwrap().to_file().to_json(), b.to_file().to_json());
    }

    #[test]
    fn matrix_algebras_are_lie(which in 0usize..3, n in 2usize..5) {
        let name = ["sl", "so", "sp"][which];
        let n = if which == 2 { 2 * n } else if which == 1 { n + 1 } else { n };
        let spec = catalog::matrix_lie_spec(&format!("{name}{n}")).unwrap();
        let l = build_matrix_lie(&spec).unwrap().algebra;
        prop_assert!(check_lie(&l).ok);
        prop_assert_eq!(centroid_dim(&l), if which == 1 && n == 4 { 2 } else { 1 });
    }
}

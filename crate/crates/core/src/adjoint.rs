//! LY-algebras of adjoint type on a simple Lie algebra L and the
//! dichotomy of their standard enveloping algebras: L ⊕ L, or k[t]/(t²) ⊗ L
//! at β = −1/4.

use std::fmt;

use crate::algebra::{centroid_dim, enveloping, is_semisimple, is_simple, killing_radical, AlgError, AntiAlg, LYAlg};
use crate::linalg::vector::{self, SpVec};
use crate::linalg::BasisCoords;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjointVariant {
    /// x·y = 0, [x,y,z] = [[x,y],z].
    I,
    /// x·y = [x,y], [x,y,z] = β[[x,y],z] with β ≠ 0.
    II(Rat),
}

impl fmt::Display for AdjointVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdjointVariant::I => f.write_str("i"),
            AdjointVariant::II(b) => write!(f, "ii,{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdjointLySpec {
    pub base: AntiAlg,
    pub variant: AdjointVariant,
}

impl AdjointLySpec {
    /// Checks that the base is simple and β ≠ 0.
    pub fn new(base: AntiAlg, variant: AdjointVariant) -> Result<AdjointLySpec, AlgError> {
        if let AdjointVariant::II(b) = &variant {
            if b.is_zero() {
                return Err(AlgError::Invalid("variant ii needs beta != 0".into()));
            }
        }
        if !is_simple(&base) {
            return Err(AlgError::Invalid("the base Lie algebra must be simple".into()));
        }
        Ok(AdjointLySpec { base, variant })
    }
}

pub fn build_adjoint_ly(spec: &AdjointLySpec) -> LYAlg {
    let l = &spec.base;
    let (binary, beta) = match &spec.variant {
        AdjointVariant::I => (false, Rat::one()),
        AdjointVariant::II(b) => (true, b.clone()),
    };
    LYAlg::from_fns(
        l.dim(),
        l.labels().to_vec(),
        |i, j| if binary { l.get(i, j) } else { Vec::new() },
        |i, j, k| {
            let v = l.bracket(&l.get(i, j), &vector::unit(k));
            vector::scale(&v, &beta)
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjointEnveloping {
    /// Semisimple with two-dimensional centroid: L ⊕ L.
    TwoCopies,
    /// Killing radical an abelian ideal of dimension dim L: k[t]/(t²) ⊗ L.
    DualNumbers { radical_dim: usize },
}

impl fmt::Display for AdjointEnveloping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdjointEnveloping::TwoCopies => f.write_str("two-copies"),
            AdjointEnveloping::DualNumbers { .. } => f.write_str("dual-numbers"),
        }
    }
}

/// Whether `basis` spans an abelian ideal of `g`.
fn is_abelian_ideal(g: &AntiAlg, basis: &[SpVec]) -> bool {
    let Some(mut coords) = BasisCoords::new(basis, g.dim()) else {
        return false;
    };
    for (s, r) in basis.iter().enumerate() {
        if basis[s + 1..].iter().any(|q| !g.bracket(r, q).is_empty()) {
            return false;
        }
        for i in 0..g.dim() {
            let v = g.bracket(&vector::unit(i), r);
            if coords.coords(&v).is_none() {
                return false;
            }
        }
    }
    true
}

/// Decides the enveloping algebra by invariants; any other outcome is an
/// error.
pub fn classify_adjoint_enveloping(spec: &AdjointLySpec) -> Result<AdjointEnveloping, AlgError> {
    let env = enveloping(&build_adjoint_ly(spec))?;
    let g = env.g();
    if is_semisimple(g) {
        return match centroid_dim(g) {
            2 => Ok(AdjointEnveloping::TwoCopies),
            c => Err(AlgError::Classify(format!("semisimple enveloping algebra with centroid of dimension {c}"))),
        };
    }
    let rad = killing_radical(g);
    if rad.len() == spec.base.dim() && is_abelian_ideal(g, &rad) {
        Ok(AdjointEnveloping::DualNumbers { radical_dim: rad.len() })
    } else {
        Err(AlgError::Classify(format!("Killing radical of dimension {} is not an abelian ideal of dimension {}", rad.len(), spec.base.dim())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::sl2;
    use crate::algebra::{check_ly, inner_derivations};
    use crate::linalg::vector::{scale, unit};
    use crate::matrix::{build_matrix_lie, MatrixLieSpec};

    fn spec(l: AntiAlg, beta: Option<Rat>) -> AdjointLySpec {
        AdjointLySpec::new(l, beta.map_or(AdjointVariant::I, AdjointVariant::II)).unwrap()
    }

    #[test]
    fn beta_zero_and_nonsimple_rejected() {
        assert!(AdjointLySpec::new(sl2(), AdjointVariant::II(Rat::zero())).is_err());
        assert!(AdjointLySpec::new(crate::algebra::examples::solvable2(), AdjointVariant::I).is_err());
    }

    #[test]
    fn variant_i_is_a_triple_system() {
        let a = build_adjoint_ly(&spec(sl2(), None));
        assert!(a.is_binary_zero());
        assert!(check_ly(&a).ok());
        assert_eq!(classify_adjoint_enveloping(&spec(sl2(), None)).unwrap(), AdjointEnveloping::TwoCopies);
    }

    #[test]
    fn boundary_beta_gives_dual_numbers() {
        let s = spec(sl2(), Some(Rat::new(-1, 4)));
        assert!(check_ly(&build_adjoint_ly(&s)).ok());
        assert_eq!(classify_adjoint_enveloping(&s).unwrap(), AdjointEnveloping::DualNumbers { radical_dim: 3 });
        let s = spec(sl2(), Some(Rat::int(2)));
        assert_eq!(classify_adjoint_enveloping(&s).unwrap(), AdjointEnveloping::TwoCopies);
    }

    #[test]
    fn sl3_cases() {
        let l = build_matrix_lie(&MatrixLieSpec::sl(3)).unwrap().algebra;
        let s = spec(l.clone(), Some(Rat::new(-1, 4)));
        assert!(check_ly(&build_adjoint_ly(&s)).ok());
        assert_eq!(classify_adjoint_enveloping(&s).unwrap(), AdjointEnveloping::DualNumbers { radical_dim: 8 });
        assert_eq!(classify_adjoint_enveloping(&spec(l, None)).unwrap(), AdjointEnveloping::TwoCopies);
    }

    #[test]
    fn d_map_is_scaled_adjoint() {
        let l = sl2();
        let beta = Rat::int(-1);
        let a = build_adjoint_ly(&spec(l.clone(), Some(beta.clone())));
        for i in 0..3 {
            for j in 0..3 {
                let d = a.d_cols(&unit(i), &unit(j));
                assert_eq!(d, l.ad_cols(&scale(&l.get(i, j), &beta)));
            }
        }
        assert_eq!(inner_derivations(&a).unwrap().algebra.dim(), 3);
    }
}

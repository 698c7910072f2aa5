//! Root-system identification from a caller-supplied split Cartan subalgebra.

use std::fmt;

use super::anti::AntiAlg;
use super::error::AlgError;
use crate::linalg::op;
use crate::linalg::poly::{char_poly, rational_roots};
use crate::linalg::vector::{self, SpVec};
use crate::linalg::{inverse, kernel_basis, BasisCoords, Echelon, Mat};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub family: char,
    pub rank: usize,
}

impl SimpleType {
    pub fn dim(&self) -> usize {
        let r = self.rank;
        match self.family {
            'A' => r * (r + 2),
            'B' | 'C' => r * (2 * r + 1),
            'D' => r * (2 * r - 1),
            'G' => 14,
            'F' => 52,
            'E' => [78, 133, 248][r - 6],
            _ => unreachable!("unknown family"),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A semisimple type as a sorted list of simple components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType(pub Vec<SimpleType>);

impl CartanType {
    pub fn label(&self) -> String {
        self.to_string()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|t| t.dim()).sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Parses labels such as "A2+A2" or "E8".
impl std::str::FromStr for CartanType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut v = Vec::new();
        for part in s.split('+') {
            let mut chars = part.trim().chars();
            let family = chars.next().ok_or("empty component")?;
            let rank: usize = chars.as_str().parse().map_err(|_| format!("bad rank in {part}"))?;
            v.push(SimpleType { family, rank });
        }
        v.sort();
        Ok(CartanType(v))
    }
}

/// Weight-space decomposition of the adjoint action of the Cartan.
pub struct RootData {
    pub rank: usize,
    pub zero_dim: usize,
    /// α(h_i) for each root, sorted.
    pub roots: Vec<Vec<Rat>>,
}

struct Block {
    vecs: Vec<SpVec>,
    weight: Vec<Rat>,
}

fn split_block(b: Block, ad: &[SpVec], n: usize) -> Result<Vec<Block>, AlgError> {
    let k = b.vecs.len();
    let mut bc = BasisCoords::new(&b.vecs, n).expect("block vectors independent");
    let mut m = Mat::zeros(k, k);
    for (j, v) in b.vecs.iter().enumerate() {
        let img = op::apply(ad, v, n);
        let c = bc.coords(&img).ok_or_else(|| AlgError::Classify("Cartan elements do not commute".into()))?;
        for (i, x) in c {
            m.set(i, j, x);
        }
    }
    let with = |w: &Rat| {
        let mut wt = b.weight.clone();
        wt.push(w.clone());
        wt
    };
    if m.is_diagonal() {
        let mut groups: Vec<(Rat, Vec<SpVec>)> = Vec::new();
        for (j, v) in b.vecs.iter().enumerate() {
            let x = m.get(j, j);
            match groups.iter_mut().find(|g| &g.0 == x) {
                Some(g) => g.1.push(v.clone()),
                None => groups.push((x.clone(), vec![v.clone()])),
            }
        }
        return Ok(groups.into_iter().map(|(x, vecs)| Block { weight: with(&x), vecs }).collect());
    }
    let roots = rational_roots(&char_poly(&m));
    if roots.len() != k {
        return Err(AlgError::Classify("Cartan element has non-rational eigenvalues".into()));
    }
    let mut distinct = roots.clone();
    distinct.dedup();
    let mut out = Vec::new();
    for lam in distinct {
        let mult = roots.iter().filter(|r| **r == lam).count();
        let ker = kernel_basis(&m.sub(&Mat::identity(k).scale(&lam)));
        if ker.len() != mult {
            return Err(AlgError::Classify("Cartan element is not diagonalizable".into()));
        }
        let vecs = ker
            .iter()
            .map(|c| {
                let mut acc = Vec::new();
                for (j, x) in c.iter().enumerate() {
                    acc = vector::axpy(&acc, x, &b.vecs[j]);
                }
                acc
            })
            .collect();
        out.push(Block { weight: with(&lam), vecs });
    }
    Ok(out)
}

/// Simultaneous eigenspaces of ad(cartan); checks commutativity,
/// diagonalizability, and maximality.
pub fn root_data(a: &AntiAlg, cartan: &[SpVec]) -> Result<RootData, AlgError> {
    let n = a.dim();
    let r = cartan.len();
    let mut ind = Echelon::new(n);
    for h in cartan {
        if !ind.insert(h) {
            return Err(AlgError::Classify("Cartan elements are linearly dependent".into()));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if !a.bracket(&cartan[i], &cartan[j]).is_empty() {
                return Err(AlgError::Classify(format!("Cartan elements {i} and {j} do not commute")));
            }
        }
    }
    let ads: Vec<Vec<SpVec>> = cartan.iter().map(|h| a.ad_cols(h)).collect();
    // diagonal elements first, keeping track of the original order of weights
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&i| op::diagonal(&ads[i]).is_none());
    let mut blocks = vec![Block { vecs: (0..n).map(vector::unit).collect(), weight: Vec::new() }];
    for &i in &order {
        let mut next = Vec::new();
        for b in blocks {
            next.extend(split_block(b, &ads[i], n)?);
        }
        blocks = next;
    }
    let mut zero_dim = 0;
    let mut roots = Vec::new();
    for b in blocks {
        let mut w = vec![Rat::zero(); r];
        for (pos, &i) in order.iter().enumerate() {
            w[i] = b.weight[pos].clone();
        }
        if w.iter().all(|x| x.is_zero()) {
            zero_dim += b.vecs.len();
        } else {
            if b.vecs.len() != 1 {
                return Err(AlgError::Classify(format!("root space of dimension {}", b.vecs.len())));
            }
            roots.push(w);
        }
    }
    if zero_dim != r {
        return Err(AlgError::Classify(format!("not maximal: zero weight space has dimension {zero_dim}, Cartan has {r}")));
    }
    roots.sort();
    Ok(RootData { rank: r, zero_dim, roots })
}

fn identify(rank: usize, roots: &[Vec<Rat>], kinv: &Mat) -> Result<SimpleType, AlgError> {
    let ip = |a: &[Rat], b: &[Rat]| -> Rat {
        let mut s = Rat::zero();
        for i in 0..a.len() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..b.len() {
                s += &a[i] * kinv.get(i, j) * &b[j];
            }
        }
        s
    };
    let n = roots.len();
    let lens: Vec<Rat> = roots.iter().map(|a| ip(a, a)).collect();
    let long = lens.iter().max().cloned().unwrap_or_default();
    let n_long = lens.iter().filter(|l| **l == long).count();
    let two = n_long < n;
    let r = rank;
    let t = |family| Ok(SimpleType { family, rank: r });
    if !two {
        if n == r * (r + 1) {
            return t('A');
        }
        if r >= 4 && n == 2 * r * (r - 1) {
            return t('D');
        }
        match (r, n) {
            (6, 72) => return t('E'),
            (7, 126) => return t('E'),
            (8, 240) => return t('E'),
            _ => {}
        }
    } else {
        match (r, n) {
            (2, 8) => return t('B'),
            (2, 12) => return t('G'),
            (4, 48) if n_long == 24 => return t('F'),
            _ => {}
        }
        if n == 2 * r * r {
            if n_long == 2 * r * (r - 1) {
                return t('B');
            }
            if n_long == 2 * r {
                return t('C');
            }
        }
    }
    Err(AlgError::Classify(format!("unrecognized root system: rank {r}, {n} roots, {n_long} long")))
}

/// Semisimple type from the root data.
pub fn classify_type(a: &AntiAlg, cartan: &[SpVec]) -> Result<CartanType, AlgError> {
    let rd = root_data(a, cartan)?;
    let r = rd.rank;
    let mut k = Mat::zeros(r, r);
    for al in &rd.roots {
        for i in 0..r {
            for j in 0..r {
                k.add_at(i, j, &(&al[i] * &al[j]));
            }
        }
    }
    let kinv = inverse(&k).map_err(|_| AlgError::Classify("roots do not span the dual of the Cartan".into()))?;
    let ip = |a: &[Rat], b: &[Rat]| -> bool {
        let mut s = Rat::zero();
        for i in 0..r {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..r {
                s += &a[i] * kinv.get(i, j) * &b[j];
            }
        }
        !s.is_zero()
    };
    let n = rd.roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if find(&mut parent, i) != find(&mut parent, j) && ip(&rd.roots[i], &rd.roots[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut comps: std::collections::BTreeMap<usize, Vec<Vec<Rat>>> = std::collections::BTreeMap::new();
    for i in 0..n {
        let c = find(&mut parent, i);
        comps.entry(c).or_default().push(rd.roots[i].clone());
    }
    let mut types = Vec::new();
    let mut total_rank = 0;
    for roots in comps.values() {
        let rank = crate::linalg::rank(&Mat::from_rows(roots.clone()));
        total_rank += rank;
        types.push(identify(rank, roots, &kinv)?);
    }
    if total_rank != r {
        return Err(AlgError::Classify("roots do not span the dual of the Cartan".into()));
    }
    types.sort();
    let ty = CartanType(types);
    if ty.dim() != a.dim() {
        return Err(AlgError::Classify(format!("type {ty} has dimension {} but the algebra has {}", ty.dim(), a.dim())));
    }
    Ok(ty)
}

/// Type of a simple Lie algebra.
pub fn classify_simple_type(a: &AntiAlg, cartan: &[SpVec]) -> Result<SimpleType, AlgError> {
    let t = classify_type(a, cartan)?;
    match t.0.as_slice() {
        [s] => Ok(*s),
        _ => Err(AlgError::Classify(format!("not simple: type {t}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::sl2;

    #[test]
    fn sl2_is_a1() {
        let t = classify_simple_type(&sl2(), &[vec![(1, Rat::one())]]).unwrap();
        assert_eq!(t.to_string(), "A1");
    }

    #[test]
    fn sum_of_two() {
        let s = sl2();
        let g = s.direct_sum(&s);
        let t = classify_type(&g, &[vec![(1, Rat::one())], vec![(4, Rat::one())]]).unwrap();
        assert_eq!(t.to_string(), "A1+A1");
        assert!(classify_type(&g, &[vec![(1, Rat::one())]]).is_err());
    }

    #[test]
    fn non_diagonal_cartan() {
        // h' = e + f is ad-diagonalizable with eigenvalues 0, ±2
        let t = classify_simple_type(&sl2(), &[vec![(0, Rat::one()), (2, Rat::one())]]).unwrap();
        assert_eq!(t.to_string(), "A1");
    }

    #[test]
    fn label_parse() {
        let t: CartanType = "A2+A2".parse().unwrap();
        assert_eq!(t.dim(), 16);
        assert_eq!(t.to_string(), "A2+A2");
    }
}

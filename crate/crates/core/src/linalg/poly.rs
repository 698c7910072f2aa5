//! Univariate polynomials over ℚ (coefficients low degree first): characteristic
//! polynomials and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::Mat;
use crate::rat::Rat;

pub type Poly = Vec<Rat>;

pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// det(xI − m), monic, via Faddeev–LeVerrier.
pub fn char_poly(m: &Mat) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = Mat::zeros(n, n);
    for k in 1..=n {
        // M_k = m (M_{k-1} + c_{n-k+1} I)
        let mut prev = mk.clone();
        for i in 0..n {
            prev.add_at(i, i, &coeffs[n - k + 1]);
        }
        mk = m.mul(&prev);
        coeffs[n - k] = -(mk.trace() / Rat::int(k as i64));
    }
    coeffs
}

/// Exact division by (x − r); `p(r)` must be zero.
pub fn deflate(p: &[Rat], r: &Rat) -> Poly {
    let d = p.len() - 1;
    let mut q = vec![Rat::zero(); d];
    let mut carry = Rat::zero();
    for i in (1..=d).rev() {
        carry = &p[i] + &(carry * r);
        q[i - 1] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    if small > 1 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots with multiplicity, in increasing order. Returns an empty
/// list for polynomials whose coefficients are too large to factor.
pub fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p: Poly = p.to_vec();
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        roots.push(Rat::zero());
    }
    if p.len() > 1 {
        let mut l = BigInt::one();
        for c in &p {
            l = l.lcm(&c.denom());
        }
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots;
        };
        let mut cands: Vec<Rat> = Vec::new();
        for a in &num {
            for b in &den {
                let r = Rat::from_bigints(a.clone(), b.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        for c in cands {
            while p.len() > 1 && eval(&p, &c).is_zero() {
                p = deflate(&p, &c);
                roots.push(c.clone());
            }
        }
    }
    roots.sort();
    roots
}

pub fn is_zero(p: &[Rat]) -> bool {
    p.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_diag() {
        let m = Mat::from_ints(&[&[2, 0], &[0, -3]]);
        // (x-2)(x+3) = x^2 + x - 6
        assert_eq!(char_poly(&m), vec![Rat::int(-6), Rat::one(), Rat::one()]);
        assert_eq!(rational_roots(&char_poly(&m)), vec![Rat::int(-3), Rat::int(2)]);
    }

    #[test]
    fn roots_with_fractions_and_multiplicity() {
        // (2x - 1)^2 x = 4x^3 - 4x^2 + x
        let p = vec![Rat::zero(), Rat::one(), Rat::int(-4), Rat::int(4)];
        assert_eq!(rational_roots(&p), vec![Rat::zero(), Rat::new(1, 2), Rat::new(1, 2)]);
        // x^2 - 2 has none
        assert!(rational_roots(&[Rat::int(-2), Rat::zero(), Rat::one()]).is_empty());
    }
}

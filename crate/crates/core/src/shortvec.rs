//! Short-vector enumeration (Fincke-Pohst).
//!
//! The search tree is pruned with a floating-point Cholesky factor of an
//! LLL-reduced Gram matrix. The float bound is inflated by a small relative
//! margin so no exact solution is lost, and every candidate is re-checked with
//! exact integer arithmetic before it is reported.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::lattice::Lattice;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShortVecError {
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("lattice is not integral")]
    NonIntegral,
    #[error("lattice has rank 0")]
    RankZero,
    #[error("Gram entries too large for the enumerator")]
    Overflow,
}

/// Vector counts by norm, both signs counted; norm 0 is excluded.
pub type NormProfile = BTreeMap<i64, u64>;

const MARGIN: f64 = 1e-9;
const LLL_DELTA: f64 = 0.99;

/// Gram matrix scaled to integers, together with the scaling denominator.
struct IntGram {
    g: Vec<Vec<i128>>,
    den: i128,
}

impl IntGram {
    fn of(l: &Lattice) -> Result<Self, ShortVecError> {
        let gram = l.gram();
        let den = gram.denominator().to_i128().ok_or(ShortVecError::Overflow)?;
        let n = l.rank();
        let mut g = vec![vec![0i128; n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = gram.numerator()[(i, j)].to_i128().ok_or(ShortVecError::Overflow)?;
            }
        }
        Ok(IntGram { g, den })
    }

    fn norm(&self, y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &yi) in y.iter().enumerate() {
            if yi == 0 {
                continue;
            }
            let mut row = 0i128;
            for (j, &yj) in y.iter().enumerate() {
                row += self.g[i][j] * yj as i128;
            }
            acc += yi as i128 * row;
        }
        acc
    }
}

/// LLL reduction acting on a Gram matrix. Returns the unimodular transform
/// `t` (rows are new basis vectors in old coordinates) and the reduced Gram.
fn lll(g: &[Vec<i128>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i128>>), ShortVecError> {
    let n = g.len();
    let mut r: Vec<Vec<i128>> = g.to_vec();
    let mut t: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n <= 1 {
        return Ok((t, r));
    }
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 1_000_000 {
            break;
        }
        let (mu, bstar) = gso(&r)?;
        let mut mu_k = mu[k].clone();
        for j in (0..k).rev() {
            let qf = mu_k[j].round();
            if qf == 0.0 {
                continue;
            }
            let q = qf as i128;
            for i in 0..n {
                r[k][i] = r[k][i].checked_sub(q * r[j][i]).ok_or(ShortVecError::Overflow)?;
            }
            for i in 0..n {
                r[i][k] = r[i][k].checked_sub(q * r[i][j]).ok_or(ShortVecError::Overflow)?;
            }
            for i in 0..n {
                t[k][i] -= q as i64 * t[j][i];
            }
            for i in 0..j {
                mu_k[i] -= qf * mu[j][i];
            }
            mu_k[j] -= qf;
        }
        let lhs = bstar[k] + mu_k[k - 1] * mu_k[k - 1] * bstar[k - 1];
        if lhs >= LLL_DELTA * bstar[k - 1] {
            k += 1;
        } else {
            r.swap(k, k - 1);
            for row in r.iter_mut() {
                row.swap(k, k - 1);
            }
            t.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    Ok((t, r))
}

/// Gram-Schmidt coefficients and squared lengths from a Gram matrix.
fn gso(r: &[Vec<i128>]) -> Result<(Vec<Vec<f64>>, Vec<f64>), ShortVecError> {
    let n = r.len();
    let mut mu = vec![vec![0.0f64; n]; n];
    let mut b = vec![0.0f64; n];
    for i in 0..n {
        for j in 0..i {
            let mut s = r[i][j] as f64;
            for k in 0..j {
                s -= mu[j][k] * mu[i][k] * b[k];
            }
            mu[i][j] = s / b[j];
        }
        let mut s = r[i][i] as f64;
        for k in 0..i {
            s -= mu[i][k] * mu[i][k] * b[k];
        }
        if s.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Err(ShortVecError::NotPositiveDefinite);
        }
        b[i] = s;
        mu[i][i] = 1.0;
    }
    Ok((mu, b))
}

struct Search<'a> {
    n: usize,
    mu: &'a [Vec<f64>],
    b: &'a [f64],
    radius: f64,
}

impl Search<'_> {
    /// Coordinates above `level` are fixed; enumerates the rest.
    /// `zero_above` says whether all fixed coordinates are zero, in which case
    /// the current one is restricted to be nonnegative (one of each +-pair).
    fn recurse(&self, y: &mut Vec<i64>, level: usize, partial: f64, zero_above: bool, out: &mut Vec<Vec<i64>>) {
        // center of coordinate `level` given the fixed higher ones
        let mut c = 0.0;
        for j in level + 1..self.n {
            c -= self.mu[j][level] * y[j] as f64;
        }
        let rem = self.radius - partial;
        if rem < 0.0 {
            return;
        }
        let w = (rem / self.b[level]).sqrt();
        let mut lo = (c - w).ceil() as i64;
        let hi = (c + w).floor() as i64;
        if zero_above {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            let d = v as f64 - c;
            let p = partial + d * d * self.b[level];
            if p > self.radius {
                continue;
            }
            y[level] = v;
            if level == 0 {
                if !(zero_above && v == 0) {
                    out.push(y.clone());
                }
            } else {
                self.recurse(y, level - 1, p, zero_above && v == 0, out);
            }
        }
        y[level] = 0;
    }
}

/// One representative of each `+-` pair of nonzero vectors with norm at most
/// `bound`, as coefficient vectors in the lattice basis. The representative
/// has its first nonzero coefficient positive; the list is sorted.
pub fn enumerate_up_to(l: &Lattice, bound: &BigRational) -> Result<Vec<Vec<i64>>, ShortVecError> {
    let n = l.rank();
    if n == 0 || bound <= &BigRational::zero() {
        return Ok(Vec::new());
    }
    let ig = IntGram::of(l)?;
    let (t, r) = lll(&ig.g)?;
    let (mu, b) = gso(&r)?;
    let reduced = IntGram { g: r, den: ig.den };
    // exact test: norm_num <= bound * den, i.e. norm_num * bden <= bnum * den
    let bnum = bound.numer().to_i128().ok_or(ShortVecError::Overflow)?;
    let bden = bound.denom().to_i128().ok_or(ShortVecError::Overflow)?;
    let limit_f = bnum as f64 * ig.den as f64 / bden as f64;
    let search = Search {
        n,
        mu: &mu,
        b: &b,
        radius: limit_f * (1.0 + MARGIN) + MARGIN,
    };

    // split on the top coordinate
    let top = n - 1;
    let w = (search.radius / b[top]).sqrt();
    let tops: Vec<i64> = (0..=w.floor() as i64).collect();
    let mut found: Vec<Vec<i64>> = tops
        .par_iter()
        .flat_map_iter(|&v| {
            let mut y = vec![0i64; n];
            let mut out = Vec::new();
            let p = (v as f64).powi(2) * b[top];
            if p <= search.radius {
                y[top] = v;
                if top == 0 {
                    if v != 0 {
                        out.push(y.clone());
                    }
                } else {
                    search.recurse(&mut y, top - 1, p, v == 0, &mut out);
                }
            }
            out.into_iter()
        })
        .filter(|y| {
            let nn = reduced.norm(y);
            nn > 0 && nn * bden <= bnum * ig.den
        })
        .map(|y| {
            let mut x = vec![0i64; n];
            for (yi, trow) in y.iter().zip(&t) {
                if *yi == 0 {
                    continue;
                }
                for (xj, tj) in x.iter_mut().zip(trow) {
                    *xj += yi * tj;
                }
            }
            if x.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
                for v in x.iter_mut() {
                    *v = -*v;
                }
            }
            x
        })
        .collect();
    found.sort();
    Ok(found)
}

/// Norm of a coefficient vector, exactly.
pub fn coefficient_norm(l: &Lattice, x: &[i64]) -> BigRational {
    let coords: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    let v = l.basis().apply(&coords);
    l.norm(&v)
}

/// Smallest norm of a nonzero vector.
pub fn min_norm(l: &Lattice) -> Result<BigRational, ShortVecError> {
    if l.rank() == 0 {
        return Err(ShortVecError::RankZero);
    }
    let ig = IntGram::of(l)?;
    let (_, r) = lll(&ig.g)?;
    let best_diag = (0..r.len()).map(|i| r[i][i]).min().expect("rank > 0");
    let bound = BigRational::new(best_diag.into(), ig.den.into());
    let vecs = enumerate_up_to(l, &bound)?;
    let min = vecs
        .iter()
        .map(|x| coefficient_norm(l, x))
        .min()
        .expect("a basis vector reaches the bound");
    Ok(min)
}

pub fn is_rootless(l: &Lattice) -> Result<bool, ShortVecError> {
    Ok(norm_profile(l, 2)?.get(&2).copied().unwrap_or(0) == 0)
}

/// Counts of lattice vectors by norm up to `bound` (both signs counted).
/// Requires an integral lattice.
pub fn norm_profile(l: &Lattice, bound: i64) -> Result<NormProfile, ShortVecError> {
    if !l.is_integral() {
        return Err(ShortVecError::NonIntegral);
    }
    let mut profile = NormProfile::new();
    if l.rank() == 0 {
        return Ok(profile);
    }
    let ig = IntGram::of(l)?;
    debug_assert!(ig.den == 1);
    for x in enumerate_up_to(l, &BigRational::from_integer(bound.into()))? {
        let nn = ig.norm(&x);
        let (q, rem) = nn.div_rem(&ig.den);
        debug_assert!(rem == 0);
        *profile.entry(q as i64).or_insert(0) += 2;
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::IntMatrix;

    fn lat(cols: usize, rows: &[&[i64]]) -> Lattice {
        Lattice::new(cols, BigRational::from_integer(1.into()), IntMatrix::from_rows(cols, rows)).unwrap()
    }

    fn e8() -> Lattice {
        // doubled coordinates at scale 4
        let mut rows: Vec<Vec<i64>> = (0..7)
            .map(|i| {
                let mut r = vec![0; 8];
                r[i] = 2;
                r[i + 1] = -2;
                r
            })
            .collect();
        rows.push(vec![0, 0, 0, 0, 0, 0, 2, 2]);
        rows.push(vec![1; 8]);
        Lattice::from_generators(8, BigRational::from_integer(4.into()), &IntMatrix::from_rows(8, &rows)).unwrap()
    }

    #[test]
    fn z2_unit_vectors() {
        let z = Lattice::standard(2);
        let v = enumerate_up_to(&z, &BigRational::from_integer(1.into())).unwrap();
        assert_eq!(v, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn e8_roots() {
        let l = e8();
        assert_eq!(l.det(), BigRational::from_integer(1.into()));
        let v = enumerate_up_to(&l, &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(v.len(), 120);
        assert_eq!(min_norm(&l).unwrap(), BigRational::from_integer(2.into()));
        assert!(!is_rootless(&l).unwrap());
        let ee8 = l.rescale(&BigRational::from_integer(2.into())).unwrap();
        assert!(enumerate_up_to(&ee8, &BigRational::from_integer(2.into())).unwrap().is_empty());
        assert_eq!(norm_profile(&ee8, 4).unwrap().get(&4), Some(&240));
    }

    #[test]
    fn a2_profile() {
        let a2 = lat(3, &[&[1, -1, 0], &[0, 1, -1]]);
        let p = norm_profile(&a2, 2).unwrap();
        assert_eq!(p, NormProfile::from([(2, 6)]));
        assert!(norm_profile(&Lattice::zero(3, BigRational::from_integer(1.into())), 4)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn indefinite_gram_is_rejected() {
        let g = vec![vec![1i128, 2], vec![2, 1]];
        assert!(matches!(gso(&g), Err(ShortVecError::NotPositiveDefinite)));
    }

    #[test]
    fn min_norm_scales() {
        let a1 = lat(2, &[&[1, -1]]);
        let aa1 = a1.rescale(&BigRational::from_integer(2.into())).unwrap();
        assert_eq!(min_norm(&aa1).unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(min_norm(&Lattice::zero(2, BigRational::from_integer(1.into()))), Err(ShortVecError::RankZero));
    }

    #[test]
    fn rational_lattice_bound() {
        // scale 2: the vector (1, 0) has norm 1/2
        let l = Lattice::new(2, BigRational::from_integer(2.into()), IntMatrix::identity(2)).unwrap();
        let v = enumerate_up_to(&l, &BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(v.len(), 2);
        assert!(norm_profile(&l, 2).is_err());
    }
}

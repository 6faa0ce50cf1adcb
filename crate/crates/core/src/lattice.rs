//! Embedded lattices: integer coordinate rows in `Q^n` with the inner product
//! `(x . y) / scale`.
//!
//! Everything that compares lattices (sums, intersections, containment)
//! requires both operands to share the ambient dimension and the scale.
//! [`Lattice::lift_scale`] re-embeds a lattice at a larger scale when two
//! lattices from different constructions have to be combined.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{self, ExactError, IntMatrix, RatMatrix, SmithSequence};
use crate::shortvec::{self, ShortVecError};

#[derive(Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("lattices live in different spaces (ambient {0} vs {1}, scale {2} vs {3})")]
    Mismatch(usize, usize, String, String),
    #[error("basis has {rows} rows but rank {rank}")]
    Dependent { rows: usize, rank: usize },
    #[error("basis has {cols} columns, ambient dimension is {ambient}")]
    Shape { cols: usize, ambient: usize },
    #[error("scale must be positive, got {0}")]
    BadScale(BigRational),
    #[error("lattice is not integral")]
    NonIntegral,
    #[error("not a sublattice")]
    NotSublattice,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("glue vector {0} lies outside the rational span of the components")]
    GlueOutsideSpan(usize),
    #[error("glue components are not pairwise orthogonal")]
    GlueNotOrthogonal,
    #[error("malformed lattice data: {0}")]
    Format(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    ShortVec(#[from] ShortVecError),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    scale: BigRational,
    basis: IntMatrix,
}

impl Lattice {
    pub fn new(ambient_dim: usize, scale: BigRational, basis: IntMatrix) -> Result<Self> {
        if !scale.is_positive() {
            return Err(LatticeError::BadScale(scale));
        }
        if basis.cols() != ambient_dim && basis.rows() > 0 {
            return Err(LatticeError::Shape {
                cols: basis.cols(),
                ambient: ambient_dim,
            });
        }
        let basis = if basis.rows() == 0 {
            IntMatrix::zeros(0, ambient_dim)
        } else {
            basis
        };
        let rank = basis.to_rat().rank();
        if rank != basis.rows() {
            return Err(LatticeError::Dependent {
                rows: basis.rows(),
                rank,
            });
        }
        Ok(Lattice {
            ambient_dim,
            scale,
            basis,
        })
    }

    /// Lattice generated by arbitrary (possibly dependent) rows, with the
    /// canonical Hermite basis.
    pub fn from_generators(ambient_dim: usize, scale: BigRational, gens: &IntMatrix) -> Result<Self> {
        if gens.rows() > 0 && gens.cols() != ambient_dim {
            return Err(LatticeError::Shape {
                cols: gens.cols(),
                ambient: ambient_dim,
            });
        }
        if !scale.is_positive() {
            return Err(LatticeError::BadScale(scale));
        }
        let basis = if gens.rows() == 0 {
            IntMatrix::zeros(0, ambient_dim)
        } else {
            exact::hnf_basis(gens)
        };
        Ok(Lattice {
            ambient_dim,
            scale,
            basis,
        })
    }

    pub fn zero(ambient_dim: usize, scale: BigRational) -> Self {
        Lattice {
            ambient_dim,
            scale,
            basis: IntMatrix::zeros(0, ambient_dim),
        }
    }

    /// `Z^n` with the standard form.
    pub fn standard(n: usize) -> Self {
        Lattice {
            ambient_dim: n,
            scale: BigRational::one(),
            basis: IntMatrix::identity(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Same lattice with its Hermite normal form basis.
    pub fn canonical(&self) -> Lattice {
        Lattice {
            ambient_dim: self.ambient_dim,
            scale: self.scale.clone(),
            basis: exact::hnf_basis(&self.basis),
        }
    }

    /// Set equality (same space, same canonical basis).
    pub fn same_lattice(&self, other: &Lattice) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.scale == other.scale
            && exact::hnf_basis(&self.basis) == exact::hnf_basis(&other.basis)
    }

    fn check_compatible(&self, other: &Lattice) -> Result<()> {
        if self.ambient_dim != other.ambient_dim || self.scale != other.scale {
            return Err(LatticeError::Mismatch(
                self.ambient_dim,
                other.ambient_dim,
                self.scale.to_string(),
                other.scale.to_string(),
            ));
        }
        Ok(())
    }

    fn inv_scale(&self) -> BigRational {
        self.scale.recip()
    }

    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let dot: BigInt = x.iter().zip(y).map(|(a, b)| a * b).sum();
        BigRational::from_integer(dot) * self.inv_scale()
    }

    pub fn norm(&self, x: &[BigInt]) -> BigRational {
        self.inner(x, x)
    }

    pub fn gram(&self) -> RatMatrix {
        let g = self.basis.mul(&self.basis.transpose());
        RatMatrix::from_int(g).scale(&self.inv_scale())
    }

    /// Inner products between the rows of two coordinate matrices.
    pub fn cross_gram(&self, a: &IntMatrix, b: &IntMatrix) -> RatMatrix {
        RatMatrix::from_int(a.mul(&b.transpose())).scale(&self.inv_scale())
    }

    pub fn is_integral(&self) -> bool {
        self.gram().is_integral()
    }

    pub fn is_even(&self) -> bool {
        let g = self.gram();
        g.is_integral() && (0..self.rank()).all(|i| g.numerator()[(i, i)].is_even())
    }

    /// Determinant of the Gram matrix (1 for the zero lattice).
    pub fn det(&self) -> BigRational {
        exact::det(&self.gram()).expect("Gram matrix is square")
    }

    /// Coefficients of `x` in this basis, if `x` lies in the lattice.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let b: Vec<BigRational> = x.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        let sol = exact::solve(&self.basis.to_rat(), &b)?;
        sol.into_iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    /// Coefficients of every row of `xs`, or `None` if some row is not in
    /// the lattice. Solves once against a maximal invertible minor.
    pub fn coordinates_many(&self, xs: &IntMatrix) -> Option<IntMatrix> {
        let r = self.rank();
        if xs.rows() == 0 {
            return Some(IntMatrix::zeros(0, r));
        }
        if r == 0 {
            return xs.is_zero().then(|| IntMatrix::zeros(xs.rows(), 0));
        }
        // pivot columns of the basis pick r independent ambient coordinates
        let mut tmp = self.basis.to_rat().rat_rows();
        let pivots = exact::row_reduce(&mut tmp, self.ambient_dim);
        let minor = IntMatrix::from_big_rows(
            r,
            (0..r)
                .map(|i| pivots.iter().map(|&c| self.basis[(i, c)].clone()).collect())
                .collect(),
        );
        let inv = minor.to_rat().inverse()?;
        let sel = IntMatrix::from_big_rows(
            r,
            (0..xs.rows())
                .map(|i| pivots.iter().map(|&c| xs[(i, c)].clone()).collect())
                .collect(),
        );
        let coeffs = sel.to_rat().mul(&inv).to_int()?;
        (coeffs.mul(&self.basis) == *xs).then_some(coeffs)
    }

    pub fn contains_vector(&self, x: &[BigInt]) -> bool {
        x.len() == self.ambient_dim && self.coordinates(x).is_some()
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains(&self, other: &Lattice) -> bool {
        self.check_compatible(other).is_ok() && self.coordinates_many(&other.basis).is_some()
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_compatible(other)?;
        Lattice::from_generators(self.ambient_dim, self.scale.clone(), &self.basis.stack(&other.basis))
    }

    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.check_compatible(other)?;
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(Lattice::zero(self.ambient_dim, self.scale.clone()));
        }
        // (a, b) with a*B1 = -b*B2
        let k = exact::kernel(&self.basis.stack(&other.basis).to_rat());
        let r1 = self.rank();
        let a = IntMatrix::from_big_rows(r1, (0..k.rows()).map(|i| k.row(i)[..r1].to_vec()).collect());
        Lattice::from_generators(self.ambient_dim, self.scale.clone(), &a.mul(&self.basis))
    }

    /// `{x in self : x . y = 0 for all y in s}`; only the rational span of
    /// `s` matters.
    pub fn annihilator(&self, s: &Lattice) -> Result<Lattice> {
        self.check_compatible(s)?;
        if s.rank() == 0 {
            return Ok(self.canonical());
        }
        if self.rank() == 0 {
            return Ok(self.clone());
        }
        let k = exact::kernel(&self.basis.mul(&s.basis.transpose()).to_rat());
        Lattice::from_generators(self.ambient_dim, self.scale.clone(), &k.mul(&self.basis))
    }

    /// Dual lattice inside the rational span. Coordinates are multiplied by
    /// a common denominator `k`, so the returned scale is `scale * k^2`.
    pub fn dual(&self) -> Result<Lattice> {
        if self.rank() == 0 {
            return Ok(self.clone());
        }
        let ginv = self.gram().inverse().ok_or(LatticeError::Dependent {
            rows: self.rank(),
            rank: self.gram().rank(),
        })?;
        let d = ginv.mul(&self.basis.to_rat());
        let k = d.denominator().clone();
        let coords = d.numerator().clone();
        let scale = &self.scale * BigRational::from_integer(&k * &k);
        Lattice::new(self.ambient_dim, scale, coords)
    }

    /// Smith sequence of the Gram matrix; its entries above one are the
    /// invariant factors of the discriminant group `L*/L`.
    pub fn discriminant_group(&self) -> Result<SmithSequence> {
        let g = self.gram().to_int().ok_or(LatticeError::NonIntegral)?;
        Ok(exact::snf(&g).0)
    }

    /// Multiplies every inner product by `c`.
    pub fn rescale(&self, c: &BigRational) -> Result<Lattice> {
        if !c.is_positive() {
            return Err(LatticeError::BadScale(c.clone()));
        }
        Ok(Lattice {
            ambient_dim: self.ambient_dim,
            scale: &self.scale / c,
            basis: self.basis.clone(),
        })
    }

    /// Isometric re-embedding at scale `scale * factor` for a positive
    /// integer `factor = m * t^2`: coordinates are multiplied by `t` and
    /// repeated `m` times.
    pub fn lift_scale(&self, factor: &BigInt) -> Lattice {
        assert!(factor.is_positive());
        let (m, t) = split_square(factor);
        let reps = m.to_usize().expect("scale factor too large");
        let n = self.ambient_dim;
        let mut basis = IntMatrix::zeros(self.rank(), n * reps);
        for i in 0..self.rank() {
            for rep in 0..reps {
                for j in 0..n {
                    basis[(i, rep * n + j)] = &self.basis[(i, j)] * &t;
                }
            }
        }
        Lattice {
            ambient_dim: n * reps,
            scale: &self.scale * BigRational::from_integer(factor.clone()),
            basis,
        }
    }

    /// Orthogonal direct sum in `Q^(n1+n2)`. Scales are unified first with
    /// [`Lattice::lift_scale`].
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = unify_scales(self, other);
        let (n1, n2) = (a.ambient_dim, b.ambient_dim);
        let mut basis = IntMatrix::zeros(a.rank() + b.rank(), n1 + n2);
        for i in 0..a.rank() {
            for j in 0..n1 {
                basis[(i, j)] = a.basis[(i, j)].clone();
            }
        }
        for i in 0..b.rank() {
            for j in 0..n2 {
                basis[(a.rank() + i, n1 + j)] = b.basis[(i, j)].clone();
            }
        }
        Lattice {
            ambient_dim: n1 + n2,
            scale: a.scale,
            basis,
        }
    }

    /// Tensor product; the Gram matrix is the Kronecker product of the two
    /// Gram matrices.
    pub fn tensor(&self, other: &Lattice) -> Lattice {
        Lattice {
            ambient_dim: self.ambient_dim * other.ambient_dim,
            scale: &self.scale * &other.scale,
            basis: self.basis.kron(&other.basis),
        }
    }

    /// Index `|L / sub|` for a full-rank sublattice.
    pub fn index_in(&self, l: &Lattice) -> Result<BigInt> {
        l.check_compatible(self)?;
        if self.rank() != l.rank() {
            return Err(LatticeError::RankMismatch(self.rank(), l.rank()));
        }
        let c = l.coordinates_many(&self.basis).ok_or(LatticeError::NotSublattice)?;
        Ok(exact::int_det(&c).abs())
    }

    /// Exponent of `L / sub` divides two, i.e. `2L` lies in `sub`.
    pub fn contains_double_of(&self, l: &Lattice) -> bool {
        let doubled = l.basis.scaled(&BigInt::from(2));
        self.check_compatible(l).is_ok() && self.coordinates_many(&doubled).is_some()
    }

    pub fn fingerprint(&self, norm_bound: i64) -> Result<Fingerprint> {
        let smith = self.discriminant_group()?;
        let det = self.det().to_integer();
        let counts = shortvec::norm_profile(self, norm_bound)?;
        Ok(Fingerprint {
            rank: self.rank(),
            det,
            smith,
            counts,
        })
    }

    pub fn to_json(&self) -> Result<LatticeJson> {
        let to_i64 = |v: &BigInt| {
            v.to_i64()
                .ok_or_else(|| LatticeError::Format(format!("entry {v} does not fit in i64")))
        };
        Ok(LatticeJson {
            ambient_dim: self.ambient_dim,
            scale_num: to_i64(self.scale.numer())?,
            scale_den: to_i64(self.scale.denom())?,
            basis: (0..self.rank())
                .map(|i| self.basis.row(i).iter().map(to_i64).collect())
                .collect::<Result<_>>()?,
        })
    }

    pub fn from_json(j: &LatticeJson) -> Result<Lattice> {
        if j.scale_den == 0 {
            return Err(LatticeError::Format("zero scale denominator".into()));
        }
        for (i, r) in j.basis.iter().enumerate() {
            if r.len() != j.ambient_dim {
                return Err(LatticeError::Format(format!(
                    "basis row {i} has {} entries, ambient_dim is {}",
                    r.len(),
                    j.ambient_dim
                )));
            }
        }
        let basis = IntMatrix::from_rows(j.ambient_dim, &j.basis);
        Lattice::new(
            j.ambient_dim,
            BigRational::new(j.scale_num.into(), j.scale_den.into()),
            basis,
        )
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lattice(rank {}, ambient {}, scale {}) {:?}",
            self.rank(),
            self.ambient_dim,
            self.scale,
            self.basis
        )
    }
}

/// Serialized form of a [`Lattice`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub ambient_dim: usize,
    pub scale_num: i64,
    pub scale_den: i64,
    pub basis: Vec<Vec<i64>>,
}

/// `n = m * t^2` with `m` squarefree.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::one();
    let mut t = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        t *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            m *= &p;
        }
        p += 1;
    }
    (m * rest, t)
}

fn unify_scales(a: &Lattice, b: &Lattice) -> (Lattice, Lattice) {
    if a.scale == b.scale {
        return (a.clone(), b.clone());
    }
    let target = BigRational::new(
        a.scale.numer().lcm(b.scale.numer()),
        a.scale.denom().gcd(b.scale.denom()),
    );
    let fa = (&target / &a.scale).to_integer();
    let fb = (&target / &b.scale).to_integer();
    (a.lift_scale(&fa), b.lift_scale(&fb))
}

/// Outcome of [`glue`]. Non-integral results are reported rather than
/// rejected.
#[derive(Clone, Debug)]
pub struct GlueResult {
    pub lattice: Lattice,
    pub integral: bool,
}

/// Overlattice of an orthogonal sum of components (all in one space)
/// generated by additional rational glue vectors.
pub fn glue(components: &[Lattice], glue_vectors: &[Vec<BigRational>]) -> Result<GlueResult> {
    let first = components
        .first()
        .ok_or_else(|| LatticeError::Format("glue needs at least one component".into()))?;
    for c in components {
        first.check_compatible(c)?;
    }
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            if !first.cross_gram(a.basis(), b.basis()).numerator().is_zero() {
                return Err(LatticeError::GlueNotOrthogonal);
            }
        }
    }
    let n = first.ambient_dim;
    let mut span = IntMatrix::zeros(0, n);
    for c in components {
        span = span.stack(c.basis());
    }
    let span_rat = span.to_rat();
    let mut den = BigInt::one();
    for (i, g) in glue_vectors.iter().enumerate() {
        if g.len() != n || exact::solve(&span_rat, g).is_none() {
            return Err(LatticeError::GlueOutsideSpan(i));
        }
        for v in g {
            den = den.lcm(v.denom());
        }
    }
    let mut gens = span.scaled(&den);
    for g in glue_vectors {
        let row: Vec<BigInt> = g.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        gens = gens.stack(&IntMatrix::from_big_rows(n, vec![row]));
    }
    let scale = &first.scale * BigRational::from_integer(&den * &den);
    let lattice = Lattice::from_generators(n, scale, &gens)?;
    let integral = lattice.is_integral();
    Ok(GlueResult { lattice, integral })
}

/// Isometry invariants used to tell lattice types apart: rank, determinant,
/// Smith chain of the Gram matrix and vector counts by norm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub rank: usize,
    #[serde(with = "bigint_str")]
    pub det: BigInt,
    #[serde(with = "smith_str")]
    pub smith: SmithSequence,
    pub counts: BTreeMap<i64, u64>,
}

/// Default norm bound for fingerprints.
pub const FINGERPRINT_NORM_BOUND: i64 = 6;

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.counts.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        write!(
            f,
            "rank {} det {} smith [{}] counts {{{}}}",
            self.rank,
            self.det,
            self.smith,
            counts.join(", ")
        )
    }
}

mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

mod smith_str {
    use crate::exact::SmithSequence;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &SmithSequence, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SmithSequence, D::Error> {
        let s = String::deserialize(d)?;
        if s == "()" {
            return Ok(SmithSequence::new(Vec::new()));
        }
        SmithSequence::parse(&s).ok_or_else(|| serde::de::Error::custom("bad Smith sequence"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn line(gen: i64) -> Lattice {
        Lattice::new(1, q(1, 1), IntMatrix::from_rows(1, &[[gen]])).unwrap()
    }

    fn a2() -> Lattice {
        Lattice::new(3, q(1, 1), IntMatrix::from_rows(3, &[[1, -1, 0], [0, 1, -1]])).unwrap()
    }

    #[test]
    fn sum_and_intersection_on_the_line() {
        assert!(line(2).sum(&line(3)).unwrap().same_lattice(&line(1)));
        assert!(line(2).intersect(&line(3)).unwrap().same_lattice(&line(6)));
        let l = a2();
        assert!(l.sum(&l).unwrap().same_lattice(&l));
    }

    #[test]
    fn annihilator_in_the_plane() {
        let z2 = Lattice::standard(2);
        let s = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[1, 1]])).unwrap();
        let ann = z2.annihilator(&s).unwrap();
        let expect = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[1, -1]])).unwrap();
        assert!(ann.same_lattice(&expect));
        assert_eq!(a2().annihilator(&a2()).unwrap().rank(), 0);
    }

    #[test]
    fn dual_of_a2() {
        let d = a2().dual().unwrap();
        assert_eq!(d.gram(), IntMatrix::from_rows(2, &[[2, 1], [1, 2]]).to_rat().scale(&q(1, 3)));
        let z = Lattice::standard(4);
        assert!(z.dual().unwrap().same_lattice(&z));
        // the lifted copy of A2 sits inside its dual with index 3
        let k = (d.scale() / a2().scale()).to_integer();
        let (_, t) = split_square(&k);
        assert_eq!(k, &t * &t);
        let lifted = Lattice::new(3, d.scale().clone(), a2().basis().scaled(&t)).unwrap();
        assert_eq!(lifted.index_in(&d).unwrap(), BigInt::from(3));
    }

    #[test]
    fn rescale_round_trip() {
        let l = a2();
        let back = l.rescale(&q(2, 1)).unwrap().rescale(&q(1, 2)).unwrap();
        assert_eq!(back, l);
        let aa1 = line(1).rescale(&q(4, 1)).unwrap();
        assert_eq!(aa1.gram().numerator()[(0, 0)], BigInt::from(4));
    }

    #[test]
    fn direct_sum_with_mismatched_scales() {
        let a1 = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[1, -1]])).unwrap();
        let s = a1.direct_sum(&a1);
        assert_eq!(s.gram(), IntMatrix::from_rows(2, &[[2, 0], [0, 2]]).to_rat());
        let half = a1.rescale(&q(2, 1)).unwrap();
        let mixed = a2().direct_sum(&half);
        assert_eq!(mixed.det(), q(12, 1));
        assert_eq!(mixed.gram().numerator()[(2, 2)], BigInt::from(4));
        let odd = a2().direct_sum(&line(1).rescale(&q(3, 2)).unwrap());
        assert_eq!(odd.det(), &a2().det() * q(3, 2));
    }

    #[test]
    fn tensor_gram_is_kronecker() {
        let t = a2().tensor(&a2());
        let g = a2().gram();
        assert_eq!(t.gram().numerator(), &g.numerator().kron(g.numerator()));
        let unit = Lattice::standard(1);
        assert_eq!(a2().tensor(&unit).gram(), a2().gram());
    }

    #[test]
    fn index_examples() {
        let z = Lattice::standard(3);
        assert_eq!(z.index_in(&z).unwrap(), BigInt::one());
        let two = Lattice::new(3, q(1, 1), IntMatrix::identity(3).scaled(&BigInt::from(2))).unwrap();
        assert_eq!(two.index_in(&z).unwrap(), BigInt::from(8));
        assert!(matches!(z.index_in(&two), Err(LatticeError::NotSublattice)));
        assert!(matches!(line(2).index_in(&z), Err(LatticeError::Mismatch(..))));
    }

    #[test]
    fn dependent_basis_rejected() {
        let err = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[1, 2], [2, 4]]));
        assert!(matches!(err, Err(LatticeError::Dependent { rows: 2, rank: 1 })));
    }

    #[test]
    fn glue_without_vectors_is_the_sum() {
        let a = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[1, 0]])).unwrap();
        let b = Lattice::new(2, q(1, 1), IntMatrix::from_rows(2, &[[0, 2]])).unwrap();
        let g = glue(&[a.clone(), b.clone()], &[]).unwrap();
        assert!(g.integral);
        assert!(g.lattice.same_lattice(&a.sum(&b).unwrap()));
        let outside = glue(&[a], &[vec![q(0, 1), q(1, 2)]]);
        assert!(matches!(outside, Err(LatticeError::GlueOutsideSpan(0))));
    }

    #[test]
    fn json_round_trip() {
        let l = a2().rescale(&q(2, 1)).unwrap();
        let j = l.to_json().unwrap();
        assert_eq!(Lattice::from_json(&j).unwrap(), l);
    }
}

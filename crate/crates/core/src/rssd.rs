//! Isometries, RSSD involutions and fixed-point sublattices.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::exact::{self, IntMatrix, RatMatrix};
use crate::lattice::{Lattice, LatticeError};

#[derive(Debug, thiserror::Error)]
pub enum RssdError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("sublattice is not contained in the host lattice")]
    NotSublattice,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("map does not preserve the lattice")]
    NotPreserved,
    #[error("sublattice is not RSSD in the host lattice")]
    NotRssd,
    #[error("isometry was certified on a different lattice")]
    Uncertified,
    #[error("image of the lattice has non-integral coordinates")]
    NonIntegralImage,
}

pub type Result<T> = std::result::Result<T, RssdError>;

/// An orthogonal map of the ambient space that has been checked to
/// preserve a lattice.
#[derive(Clone, Debug)]
pub struct IsometryMap {
    matrix: RatMatrix,
    lattice: Arc<Lattice>,
}

impl IsometryMap {
    /// Checks `M M^T = I` and that `L M = L`.
    pub fn certify(matrix: RatMatrix, lattice: Arc<Lattice>) -> Result<Self> {
        let n = lattice.ambient_dim();
        if matrix.rows() != n || matrix.cols() != n || !matrix.mul(&matrix.transpose()).is_identity() {
            return Err(RssdError::NotOrthogonal);
        }
        let images = lattice.basis().to_rat().mul(&matrix);
        let images = images.to_int().ok_or(RssdError::NotPreserved)?;
        let coords = lattice.coordinates_many(&images).ok_or(RssdError::NotPreserved)?;
        if !exact::int_det(&coords).abs().is_one() && lattice.rank() > 0 {
            return Err(RssdError::NotPreserved);
        }
        Ok(IsometryMap { matrix, lattice })
    }

    pub fn identity(lattice: Arc<Lattice>) -> Self {
        let n = lattice.ambient_dim();
        IsometryMap {
            matrix: RatMatrix::identity(n),
            lattice,
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    /// `x -> x self other` (apply `self` first).
    pub fn then(&self, other: &IsometryMap) -> Result<IsometryMap> {
        self.check_same(&other.lattice)?;
        Ok(IsometryMap {
            matrix: self.matrix.mul(&other.matrix),
            lattice: self.lattice.clone(),
        })
    }

    pub fn inverse(&self) -> IsometryMap {
        IsometryMap {
            matrix: self.matrix.transpose(),
            lattice: self.lattice.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> IsometryMap {
        IsometryMap {
            matrix: self.matrix.pow(k),
            lattice: self.lattice.clone(),
        }
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &IsometryMap) -> Result<IsometryMap> {
        g.inverse().then(self)?.then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Smallest `k <= cap` with `self^k = 1`.
    pub fn order(&self, cap: u32) -> Option<u32> {
        let mut p = self.matrix.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(&self.matrix);
        }
        None
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigRational> {
        let v: Vec<BigRational> = x.iter().map(|a| BigRational::from_integer(a.clone())).collect();
        self.matrix.apply(&v)
    }

    /// Image of a lattice in the same coordinates and scale.
    pub fn image(&self, s: &Lattice) -> Result<Lattice> {
        let b = s.basis().to_rat().mul(&self.matrix);
        let b = b.to_int().ok_or(RssdError::NonIntegralImage)?;
        Ok(Lattice::new(s.ambient_dim(), s.scale().clone(), b)?)
    }

    fn check_same(&self, l: &Lattice) -> Result<()> {
        if std::ptr::eq(&*self.lattice, l) || self.lattice.same_lattice(l) {
            Ok(())
        } else {
            Err(RssdError::Uncertified)
        }
    }
}

/// Orthogonal projection onto the rational span of `s`, as an ambient map.
pub fn projection(s: &Lattice) -> RatMatrix {
    let n = s.ambient_dim();
    if s.rank() == 0 {
        return RatMatrix::zeros(n, n);
    }
    let b = s.basis().to_rat();
    let inv = b.mul(&b.transpose()).inverse().expect("basis is independent");
    b.transpose().mul(&inv).mul(&b)
}

/// `t_S`: `-1` on `S`, `+1` on its orthogonal complement.
pub fn reflection_matrix(s: &Lattice) -> RatMatrix {
    let two = BigRational::from_integer(2.into());
    RatMatrix::identity(s.ambient_dim()).sub(&projection(s).scale(&two))
}

/// `2L <= S + ann_L(S)`. Requires `S <= L`.
pub fn rssd_check(l: &Lattice, s: &Lattice) -> Result<bool> {
    if !l.contains(s) {
        return Err(RssdError::NotSublattice);
    }
    let ann = l.annihilator(s)?;
    Ok(s.sum(&ann)?.contains_double_of(l))
}

/// The involution `t_S`, certified on `L`.
pub fn rssd_involution(l: &Arc<Lattice>, s: &Lattice) -> Result<IsometryMap> {
    if !l.contains(s) {
        return Err(RssdError::NotSublattice);
    }
    match IsometryMap::certify(reflection_matrix(s), l.clone()) {
        Ok(t) => Ok(t),
        Err(RssdError::NotPreserved) => Err(RssdError::NotRssd),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    Finite(u32),
    Overflow,
}

/// Order of `a b`, searched up to `cap`.
pub fn product_order(a: &IsometryMap, b: &IsometryMap, cap: u32) -> Result<ProductOrder> {
    let g = a.then(b)?;
    Ok(match g.order(cap) {
        Some(k) => ProductOrder::Finite(k),
        None => ProductOrder::Overflow,
    })
}

/// `Fix_L(g)`.
pub fn fixed_sublattice(l: &Lattice, g: &IsometryMap) -> Result<Lattice> {
    g.check_same(l)?;
    if l.rank() == 0 {
        return Ok(l.clone());
    }
    let n = l.ambient_dim();
    let diff = g.matrix().sub(&RatMatrix::identity(n));
    let k = exact::kernel(&l.basis().to_rat().mul(&diff));
    Ok(Lattice::from_generators(n, l.scale().clone(), &k.mul(l.basis()))?)
}

/// `L_g`, the annihilator of `Fix_L(g)` in `L`.
pub fn coinvariant(l: &Lattice, g: &IsometryMap) -> Result<Lattice> {
    let fix = fixed_sublattice(l, g)?;
    Ok(l.annihilator(&fix)?)
}

/// Smallest `g`-stable sublattice of `L` containing `S`.
pub fn zg_submodule(l: &Lattice, g: &IsometryMap, s: &Lattice) -> Result<Lattice> {
    g.check_same(l)?;
    if !l.contains(s) {
        return Err(RssdError::NotSublattice);
    }
    let mut k = s.canonical();
    loop {
        let img = g.image(&k)?;
        let next = Lattice::from_generators(k.ambient_dim(), k.scale().clone(), &k.basis().stack(img.basis()))?;
        if next.basis() == k.basis() {
            return Ok(k);
        }
        k = next;
    }
}

/// Integer matrix of `g` in the basis of `L` (row convention).
pub fn basis_matrix(l: &Lattice, g: &IsometryMap) -> Result<IntMatrix> {
    g.check_same(l)?;
    let images = l.basis().to_rat().mul(g.matrix()).to_int().ok_or(RssdError::NotPreserved)?;
    l.coordinates_many(&images).ok_or(RssdError::NotPreserved)
}

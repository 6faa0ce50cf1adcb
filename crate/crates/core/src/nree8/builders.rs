//! Explicit constructions of four table rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::data::{ALPHA, BETA, GAMMA};
use super::pair::{PairError, PairRecord, Result};
use crate::catalog::{self, CatalogId};
use crate::exact::IntMatrix;
use crate::lattice::{self, Lattice};
use crate::leech::{self, MogArray, LEECH_SCALE};

fn leech_rows(arrays: &[[[i64; 6]; 4]]) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = arrays.iter().map(|a| MogArray(*a).to_vector()).collect();
    for (i, r) in rows.iter().enumerate() {
        if !leech::leech_contains(r) {
            return Err(PairError::Invalid(format!("transcribed vector {} is not in the Leech lattice", i + 1)));
        }
    }
    Ok(IntMatrix::from_rows(24, &rows))
}

fn leech_lattice(basis: IntMatrix) -> Result<Lattice> {
    Ok(Lattice::new(24, BigRational::from_integer(LEECH_SCALE.into()), basis)?)
}

/// `M = E(O1)` with basis `beta`, `N` spanned by `alpha`.
pub fn build_dih6_16() -> Result<PairRecord> {
    let m = leech_lattice(leech_rows(&BETA)?)?;
    if !m.same_lattice(&leech::e_octad(leech::octad_o1())?) {
        return Err(PairError::Invalid("beta does not span E(O1)".into()));
    }
    let n = leech_lattice(leech_rows(&ALPHA)?)?;
    PairRecord::new("DIH6(16)", m, n, None)
}

/// Basis `gamma_1..gamma_8` of `E(O2)`.
pub fn gamma_basis() -> Result<IntMatrix> {
    leech_rows(&GAMMA)
}

/// `M = E(O2)` with basis `gamma`, `N = M xi`. `L` gets the basis
/// `gamma_1, .., gamma_8, gamma_3 xi, .., gamma_8 xi`.
pub fn build_dih6_14() -> Result<PairRecord> {
    let gamma = gamma_basis()?;
    let m = leech_lattice(gamma.clone())?;
    if !m.same_lattice(&leech::e_octad(leech::octad_o2())?) {
        return Err(PairError::Invalid("gamma does not span E(O2)".into()));
    }
    let xi = leech::xi();
    let n = xi.image(&m)?;
    let tail = n.basis().select_rows(&[2, 3, 4, 5, 6, 7]);
    let l = leech_lattice(gamma.stack(&tail))?;
    PairRecord::with_basis("DIH6(14)", m, n, l, None)
}

/// `E(O1)` and `E(O)` for the first octad `O` disjoint from `O1`.
pub fn build_dih4_16() -> Result<PairRecord> {
    let o1 = leech::octad_o1();
    let other = *leech::octads()
        .iter()
        .find(|&&o| o & o1 == 0)
        .expect("disjoint octads exist");
    let m = leech::e_octad(o1)?;
    let n = leech::e_octad(other)?;
    PairRecord::new("DIH4(16)", m, n, None)
}

/// Pieces of `E8 = A1 + E7 + glue`, in doubled coordinates at scale 4.
struct E8Split {
    root: Lattice,
    e7: Lattice,
    /// Glue vector split into its `A1*` and `E7*` parts.
    glue_root: Vec<BigRational>,
    glue_e7: Vec<BigRational>,
}

fn split_e8() -> Result<E8Split> {
    let e8 = catalog::lattice(&CatalogId::E(8)).expect("E8");
    let root = Lattice::new(
        8,
        e8.scale().clone(),
        IntMatrix::from_rows(8, &[[2, -2, 0, 0, 0, 0, 0, 0]]),
    )?;
    let e7 = e8.annihilator(&root)?;
    let sub = Lattice::new(8, e8.scale().clone(), root.basis().stack(e7.basis()))?;
    // a coset representative of E8 / (A1 + E7)
    let glue = (0..e8.rank())
        .map(|i| e8.basis().row(i).to_vec())
        .find(|v| !sub.contains_vector(v))
        .ok_or_else(|| PairError::Invalid("A1 + E7 is all of E8".into()))?;
    let r = root.basis().row(0);
    let dot: BigInt = glue.iter().zip(r).map(|(a, b)| a * b).sum();
    let rr: BigInt = r.iter().map(|a| a * a).sum();
    let c = BigRational::new(dot, rr);
    let glue_root: Vec<BigRational> = r.iter().map(|x| &c * BigRational::from_integer(x.clone())).collect();
    let glue_e7: Vec<BigRational> = glue
        .iter()
        .zip(&glue_root)
        .map(|(g, p)| BigRational::from_integer(g.clone()) - p)
        .collect();
    Ok(E8Split {
        root,
        e7,
        glue_root,
        glue_e7,
    })
}

fn embed(v: &[BigRational], copy: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); 16];
    for (i, x) in v.iter().enumerate() {
        out[8 * copy + i] = x.clone();
    }
    out
}

fn embed_lattice(l: &Lattice, copy: usize) -> Result<Lattice> {
    let rows: Vec<Vec<BigInt>> = (0..l.rank())
        .map(|i| {
            let mut r = vec![BigInt::zero(); 16];
            for (j, x) in l.basis().row(i).iter().enumerate() {
                r[8 * copy + j] = x.clone();
            }
            r
        })
        .collect();
    Ok(Lattice::new(16, l.scale().clone(), IntMatrix::from_big_rows(16, rows))?)
}

/// Two copies of `EE8` sharing an `AA1`: in `R^8 + R^8`, `F` is the root
/// line of the first copy, `A` the `EE7` orthogonal to it in the first
/// copy and `B` the same `EE7` in the second copy. `M` glues `F + A`, `N`
/// glues `F + B` with the mirrored glue vector.
pub fn build_dih4_15_glue() -> Result<PairRecord> {
    let s = split_e8()?;
    let f = embed_lattice(&s.root, 0)?;
    let a = embed_lattice(&s.e7, 0)?;
    let b = embed_lattice(&s.e7, 1)?;
    let glue_m: Vec<BigRational> = embed(&s.glue_root, 0)
        .into_iter()
        .zip(embed(&s.glue_e7, 0))
        .map(|(x, y)| x + y)
        .collect();
    let glue_n: Vec<BigRational> = embed(&s.glue_root, 0)
        .into_iter()
        .zip(embed(&s.glue_e7, 1))
        .map(|(x, y)| x + y)
        .collect();
    let two = BigRational::from_integer(2.into());
    let m = lattice::glue(&[f.clone(), a], &[glue_m])?.lattice;
    let n = lattice::glue(&[f, b], &[glue_n])?.lattice;
    if m.scale() != n.scale() {
        return Err(PairError::Invalid("glued copies landed at different scales".into()));
    }
    let m = m.rescale(&two)?;
    let n = n.rescale(&two)?;
    let rec = PairRecord::new("DIH4(15)", m, n, None)?;
    if !rec.invariants.integral || !rec.invariants.rootless {
        return Err(PairError::Invalid("glued sum is not integral and rootless".into()));
    }
    Ok(rec)
}

/// Scalar `c` with `gamma_(i+1) xi = c gamma_(i+1)`, if there is one.
pub fn xi_eigenvalue(i: usize) -> Result<Option<i64>> {
    let gamma = gamma_basis()?;
    let v: Vec<BigInt> = gamma.row(i).to_vec();
    let img = leech::xi().apply(&v);
    for c in [1i64, -1] {
        if img
            .iter()
            .zip(&v)
            .all(|(y, x)| *y == BigRational::from_integer(x * c))
        {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

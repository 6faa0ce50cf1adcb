//! Named lattices: root lattices, their `sqrt 2` rescalings (`AA_n`, `DD_n`,
//! `EE_n`), the Barnes-Wall lattice `BW16`, and tensor products.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;

use crate::exact::IntMatrix;
use crate::lattice::Lattice;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid catalog id '{0}'")]
    InvalidId(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    A(usize),
    D(usize),
    E(usize),
    AA(usize),
    DD(usize),
    EE(usize),
    Bw16,
    Tensor(Box<CatalogId>, Box<CatalogId>),
}

impl CatalogId {
    pub fn tensor(a: CatalogId, b: CatalogId) -> CatalogId {
        CatalogId::Tensor(Box::new(a), Box::new(b))
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let ok = match self {
            CatalogId::A(n) | CatalogId::AA(n) => *n >= 1,
            CatalogId::D(n) | CatalogId::DD(n) => *n >= 4,
            CatalogId::E(n) | CatalogId::EE(n) => (6..=8).contains(n),
            CatalogId::Bw16 => true,
            CatalogId::Tensor(a, b) => return a.validate().and_then(|_| b.validate()),
        };
        if ok {
            Ok(())
        } else {
            Err(CatalogError::InvalidId(self.to_string()))
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::A(n) => write!(f, "A{n}"),
            CatalogId::D(n) => write!(f, "D{n}"),
            CatalogId::E(n) => write!(f, "E{n}"),
            CatalogId::AA(n) => write!(f, "AA{n}"),
            CatalogId::DD(n) => write!(f, "DD{n}"),
            CatalogId::EE(n) => write!(f, "EE{n}"),
            CatalogId::Bw16 => write!(f, "BW16"),
            CatalogId::Tensor(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = CatalogError;

    /// Accepts `A2`, `DD4`, `EE8`, `BW16` and tensors such as `A2xE8`.
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::InvalidId(s.to_string());
        let s = s.trim();
        if let Some((a, b)) = s.split_once(['x', '*']) {
            let id = CatalogId::tensor(a.parse()?, b.parse()?);
            id.validate()?;
            return Ok(id);
        }
        if s.eq_ignore_ascii_case("BW16") {
            return Ok(CatalogId::Bw16);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (fam, num) = s.split_at(split);
        let n: usize = num.parse().map_err(|_| bad())?;
        let id = match fam {
            "A" => CatalogId::A(n),
            "D" => CatalogId::D(n),
            "E" => CatalogId::E(n),
            "AA" => CatalogId::AA(n),
            "DD" => CatalogId::DD(n),
            "EE" => CatalogId::EE(n),
            _ => return Err(bad()),
        };
        id.validate()?;
        Ok(id)
    }
}

fn memo() -> &'static Mutex<HashMap<CatalogId, Arc<Lattice>>> {
    static MEMO: OnceLock<Mutex<HashMap<CatalogId, Arc<Lattice>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Any catalog lattice, memoized. The first finished construction wins if
/// two threads race.
pub fn lattice(id: &CatalogId) -> Result<Arc<Lattice>, CatalogError> {
    id.validate()?;
    if let Some(l) = memo().lock().unwrap().get(id) {
        return Ok(l.clone());
    }
    let built = Arc::new(build(id)?);
    let mut m = memo().lock().unwrap();
    Ok(m.entry(id.clone()).or_insert(built).clone())
}

fn build(id: &CatalogId) -> Result<Lattice, CatalogError> {
    let two = BigRational::from_integer(2.into());
    Ok(match id {
        CatalogId::A(n) => a_n(*n),
        CatalogId::D(n) => d_n(*n),
        CatalogId::E(8) => e8(),
        CatalogId::E(7) => {
            let e8 = e8();
            let root = lat(8, 4, &[&[2, -2, 0, 0, 0, 0, 0, 0]]);
            e8.annihilator(&root).expect("same space")
        }
        CatalogId::E(6) => {
            let e8 = e8();
            let a2 = lat(8, 4, &[&[2, -2, 0, 0, 0, 0, 0, 0], &[0, 2, -2, 0, 0, 0, 0, 0]]);
            e8.annihilator(&a2).expect("same space")
        }
        CatalogId::AA(n) => root_lattice(&CatalogId::A(*n))?.rescale(&two).expect("positive"),
        CatalogId::DD(n) => root_lattice(&CatalogId::D(*n))?.rescale(&two).expect("positive"),
        CatalogId::EE(n) => root_lattice(&CatalogId::E(*n))?.rescale(&two).expect("positive"),
        CatalogId::Bw16 => bw16_build(),
        CatalogId::Tensor(a, b) => lattice(a)?.tensor(&*lattice(b)?),
        CatalogId::E(_) => return Err(CatalogError::InvalidId(id.to_string())),
    })
}

fn lat(cols: usize, scale: i64, rows: &[&[i64]]) -> Lattice {
    Lattice::from_generators(
        cols,
        BigRational::from_integer(scale.into()),
        &IntMatrix::from_rows(cols, rows),
    )
    .expect("valid generators")
}

/// `A_n` inside the sum-zero hyperplane of `Z^(n+1)`.
fn a_n(n: usize) -> Lattice {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n + 1];
            r[i] = 1;
            r[i + 1] = -1;
            r
        })
        .collect();
    Lattice::new(n + 1, BigRational::from_integer(1.into()), IntMatrix::from_rows(n + 1, &rows))
        .expect("independent")
}

/// `D_n`: integer vectors of even coordinate sum.
fn d_n(n: usize) -> Lattice {
    let mut rows: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r[i + 1] = -1;
            r
        })
        .collect();
    let mut last = vec![0; n];
    last[n - 2] = 1;
    last[n - 1] = 1;
    rows.push(last);
    Lattice::new(n, BigRational::from_integer(1.into()), IntMatrix::from_rows(n, &rows)).expect("independent")
}

/// `E8 = D8 + (1/2)^8`, in doubled coordinates at scale 4.
fn e8() -> Lattice {
    let d8 = d_n(8);
    let mut gens = d8.basis().scaled(&2.into());
    gens = gens.stack(&IntMatrix::from_rows(8, &[[1i64; 8]]));
    Lattice::from_generators(8, BigRational::from_integer(4.into()), &gens).expect("valid generators")
}

/// First-order Reed-Muller code of length 16 as 16-bit masks (basis only).
pub fn reed_muller_1_4() -> Vec<u16> {
    let mut gens = vec![0xffffu16];
    for bit in 0..4 {
        let mut w = 0u16;
        for pos in 0..16 {
            if (pos >> bit) & 1 == 1 {
                w |= 1 << pos;
            }
        }
        gens.push(w);
    }
    gens
}

/// `{x in Z^16 : x mod 2 in RM(1,4), sum(x) = 0 mod 4}` at scale 2.
fn bw16_build() -> Lattice {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for w in reed_muller_1_4() {
        rows.push((0..16).map(|i| i64::from((w >> i) & 1)).collect());
    }
    for i in 0..15 {
        let mut r = vec![0; 16];
        r[i] = 2;
        r[i + 1] = -2;
        rows.push(r);
    }
    let mut r = vec![0; 16];
    r[14] = 2;
    r[15] = 2;
    rows.push(r);
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    lat(16, 2, &refs)
}

/// Root lattice of type A, D or E in its standard embedding.
pub fn root_lattice(id: &CatalogId) -> Result<Arc<Lattice>, CatalogError> {
    match id {
        CatalogId::A(_) | CatalogId::D(_) | CatalogId::E(_) => lattice(id),
        _ => Err(CatalogError::InvalidId(id.to_string())),
    }
}

/// `sqrt 2` times a root lattice. Accepts either the root type (`E8`) or the
/// rescaled name (`EE8`).
pub fn ee_lattice(id: &CatalogId) -> Result<Arc<Lattice>, CatalogError> {
    let doubled = match id {
        CatalogId::A(n) | CatalogId::AA(n) => CatalogId::AA(*n),
        CatalogId::D(n) | CatalogId::DD(n) => CatalogId::DD(*n),
        CatalogId::E(n) | CatalogId::EE(n) => CatalogId::EE(*n),
        _ => return Err(CatalogError::InvalidId(id.to_string())),
    };
    lattice(&doubled)
}

pub fn bw16() -> Arc<Lattice> {
    lattice(&CatalogId::Bw16).expect("BW16 is always valid")
}

pub fn tensor_lattice(a: &CatalogId, b: &CatalogId) -> Result<Arc<Lattice>, CatalogError> {
    lattice(&CatalogId::tensor(a.clone(), b.clone()))
}

/// Orthogonal sum of catalog lattices, e.g. `AA1 + EE7 + EE7`.
pub fn orthogonal_sum(ids: &[CatalogId]) -> Result<Lattice, CatalogError> {
    let mut iter = ids.iter();
    let Some(first) = iter.next() else {
        return Ok(Lattice::zero(0, BigRational::from_integer(1.into())));
    };
    let mut acc = (*lattice(first)?).clone();
    for id in iter {
        acc = acc.direct_sum(&*lattice(id)?);
    }
    Ok(acc)
}

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact::{IntMatrix, SmithSequence};
use crate::lattice::{Fingerprint, Lattice, LatticeError, FINGERPRINT_NORM_BOUND};
use crate::leech::{self, WordStep};
use crate::rssd::{self, IsometryMap, ProductOrder, RssdError};
use crate::shortvec::{self, ShortVecError};

#[derive(Debug, thiserror::Error)]
pub enum PairError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rssd(#[from] RssdError),
    #[error(transparent)]
    ShortVec(#[from] ShortVecError),
    #[error(transparent)]
    Leech(#[from] leech::LeechError),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, PairError>;

/// How `N` was obtained from `M = E(frame)` inside the Leech lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub frame_octad: u32,
    pub word: Vec<WordStep>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairInvariants {
    /// `2 |t_M t_N|`, or `None` past the cap.
    pub dihedral_order: Option<u32>,
    pub rank: usize,
    #[serde(with = "smith_str")]
    pub smith: SmithSequence,
    pub integral: bool,
    pub even: bool,
    pub rootless: bool,
    pub in_leech: bool,
    pub intersection: Fingerprint,
    pub ann_m: Fingerprint,
    pub ann_n: Fingerprint,
}

mod smith_str {
    use crate::exact::SmithSequence;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &SmithSequence, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SmithSequence, D::Error> {
        let s = String::deserialize(d)?;
        SmithSequence::parse(&s).ok_or_else(|| serde::de::Error::custom("bad Smith sequence"))
    }
}

/// A pair of `EE8` sublattices together with everything derived from it.
#[derive(Clone, Debug)]
pub struct PairRecord {
    pub name: String,
    pub m: Lattice,
    pub n: Lattice,
    pub l: Arc<Lattice>,
    pub t_m: IsometryMap,
    pub t_n: IsometryMap,
    pub g: IsometryMap,
    pub invariants: PairInvariants,
    pub witness: Option<Witness>,
}

pub const ORDER_CAP: u32 = 12;

impl PairRecord {
    /// `L = M + N` with basis `M`-rows then `N`-rows when these are
    /// independent, otherwise the Hermite basis of the sum.
    pub fn new(name: &str, m: Lattice, n: Lattice, witness: Option<Witness>) -> Result<Self> {
        let stacked = m.basis().stack(n.basis());
        let l = match Lattice::new(m.ambient_dim(), m.scale().clone(), stacked) {
            Ok(l) => l,
            Err(LatticeError::Dependent { .. }) => m.sum(&n)?,
            Err(e) => return Err(e.into()),
        };
        Self::with_basis(name, m, n, l, witness)
    }

    /// Like [`PairRecord::new`] with a caller-chosen basis of `M + N`.
    pub fn with_basis(name: &str, m: Lattice, n: Lattice, l: Lattice, witness: Option<Witness>) -> Result<Self> {
        if !l.same_lattice(&m.sum(&n)?) {
            return Err(PairError::Invalid("given basis does not span M + N".into()));
        }
        let l = Arc::new(l);
        let t_m = rssd::rssd_involution(&l, &m)?;
        let t_n = rssd::rssd_involution(&l, &n)?;
        let g = t_m.then(&t_n)?;
        let dihedral_order = match rssd::product_order(&t_m, &t_n, ORDER_CAP)? {
            ProductOrder::Finite(k) => Some(2 * k),
            ProductOrder::Overflow => None,
        };
        let integral = l.is_integral();
        let even = l.is_even();
        let rootless = integral && shortvec::is_rootless(&l)?;
        let smith = if integral {
            l.discriminant_group()?
        } else {
            SmithSequence::new(Vec::new())
        };
        let in_leech = l.ambient_dim() == 24
            && *l.scale() == num_rational::BigRational::from_integer(leech::LEECH_SCALE.into())
            && leech::leech().contains(&l);
        let inter = m.intersect(&n)?;
        let ann_m = m.annihilator(&n)?;
        let ann_n = n.annihilator(&m)?;
        let invariants = PairInvariants {
            dihedral_order,
            rank: l.rank(),
            smith,
            integral,
            even,
            rootless,
            in_leech,
            intersection: inter.fingerprint(FINGERPRINT_NORM_BOUND)?,
            ann_m: ann_m.fingerprint(FINGERPRINT_NORM_BOUND)?,
            ann_n: ann_n.fingerprint(FINGERPRINT_NORM_BOUND)?,
        };
        Ok(PairRecord {
            name: name.to_string(),
            m,
            n,
            l,
            t_m,
            t_n,
            g,
            invariants,
            witness,
        })
    }

    /// Replays a Leech witness: `M = E(frame)`, `N = M w`.
    pub fn from_witness(name: &str, witness: Witness) -> Result<Self> {
        let m = leech::e_octad(witness.frame_octad)?;
        let w = leech::word_isometry(&witness.word)?;
        let n = w.image(&m)?.canonical();
        Self::new(name, m, n, Some(witness))
    }

    pub fn intersection(&self) -> Result<Lattice> {
        Ok(self.m.intersect(&self.n)?)
    }

    pub fn ann_m(&self) -> Result<Lattice> {
        Ok(self.m.annihilator(&self.n)?)
    }

    pub fn ann_n(&self) -> Result<Lattice> {
        Ok(self.n.annihilator(&self.m)?)
    }

    pub fn gram(&self) -> IntMatrix {
        self.l.gram().to_int().expect("integral pair")
    }

    pub fn order_of_g(&self) -> Option<u32> {
        self.invariants.dihedral_order.map(|d| d / 2)
    }
}

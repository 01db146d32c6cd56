//! Skeletal data (F-, R-symbols and pivotal coefficients) and its checks.
//!
//! Index conventions, all labels 1-based:
//!
//! * `F[a,b,c,d,e,f]` is `[F_d^{abc}]_f^e`, admissible iff `e ∈ a⊗b`,
//!   `d ∈ e⊗c`, `f ∈ b⊗c` and `d ∈ a⊗f`;
//! * `R[a,b,c]` is `R_c^{ab}`, present iff `c ∈ a⊗b`;
//! * `P[a]` is the pivotal coefficient `p_a`.

mod checks;
mod properties;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclo::{Cyclo, Matrix};
use crate::error::{Error, Result};
use crate::ring::{FusionRing, RingFile};

pub use checks::{
    check_hexagon, check_pentagon, check_pivotal, check_vacuum, hexagon_report, pivotal_report,
    verify_all, Counterexample, VerificationReport,
};
pub use properties::{
    classify_given_pentagon, classify_properties, is_spherical, quantum_dims, s_matrix,
    PropertyFlags, Unitarity,
};

pub type FIndex = [usize; 6];
pub type RIndex = [usize; 3];

/// Every admissible F-index of a ring, in lexicographic order.
pub fn admissible_f_indices(ring: &FusionRing) -> Vec<FIndex> {
    let mut out = Vec::new();
    for a in ring.labels() {
        for b in ring.labels() {
            for c in ring.labels() {
                for &e in ring.fuse(a, b) {
                    for &d in ring.fuse(e, c) {
                        for &f in ring.fuse(b, c) {
                            if ring.n(a, f, d) {
                                out.push([a, b, c, d, e, f]);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Every R-slot `(a, b, c)` with `c ∈ a⊗b`.
pub fn r_slots(ring: &FusionRing) -> Vec<RIndex> {
    let mut out = Vec::new();
    for a in ring.labels() {
        for b in ring.labels() {
            for &c in ring.fuse(a, b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn is_admissible(ring: &FusionRing, i: &FIndex) -> bool {
    let r = ring.rank();
    let [a, b, c, d, e, f] = *i;
    i.iter().all(|&x| (1..=r).contains(&x))
        && ring.n(a, b, e)
        && ring.n(e, c, d)
        && ring.n(b, c, f)
        && ring.n(a, f, d)
}

/// F-symbols of a ring with O(1) lookup by index.
#[derive(Clone, PartialEq, Eq)]
pub struct FTable {
    rank: usize,
    slots: Vec<u32>,
    entries: Vec<(FIndex, Cyclo)>,
}

const ABSENT: u32 = u32::MAX;

impl FTable {
    fn offset(rank: usize, i: &FIndex) -> usize {
        i.iter().fold(0, |acc, &x| acc * rank + (x - 1))
    }

    /// Builds the table; every admissible index must appear exactly once.
    pub fn new(ring: &FusionRing, values: impl IntoIterator<Item = (FIndex, Cyclo)>) -> Result<Self> {
        let rank = ring.rank();
        let mut slots = vec![ABSENT; rank.pow(6)];
        let mut entries: Vec<(FIndex, Cyclo)> = Vec::new();
        for (i, v) in values {
            if !is_admissible(ring, &i) {
                return Err(Error::InvalidData(format!(
                    "F{:?} is not admissible for this ring",
                    i
                )));
            }
            let off = Self::offset(rank, &i);
            if slots[off] != ABSENT {
                return Err(Error::InvalidData(format!("F{:?} given twice", i)));
            }
            slots[off] = entries.len() as u32;
            entries.push((i, v));
        }
        for i in admissible_f_indices(ring) {
            if slots[Self::offset(rank, &i)] == ABSENT {
                return Err(Error::InvalidData(format!("admissible F{:?} is missing", i)));
            }
        }
        entries.sort_by_key(|x| x.0);
        for (pos, (i, _)) in entries.iter().enumerate() {
            slots[Self::offset(rank, i)] = pos as u32;
        }
        Ok(FTable {
            rank,
            slots,
            entries,
        })
    }

    /// The value at an index, or `None` when the index is not admissible.
    #[inline]
    pub fn get(&self, i: &FIndex) -> Option<&Cyclo> {
        match self.slots[Self::offset(self.rank, i)] {
            ABSENT => None,
            pos => Some(&self.entries[pos as usize].1),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FIndex, &Cyclo)> {
        self.entries.iter().map(|(i, v)| (i, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same admissible index set with every value replaced by `f(index, value)`.
    pub fn map(&self, mut f: impl FnMut(&FIndex, &Cyclo) -> Cyclo) -> FTable {
        FTable {
            rank: self.rank,
            slots: self.slots.clone(),
            entries: self.entries.iter().map(|(i, v)| (*i, f(i, v))).collect(),
        }
    }
}

/// A ring together with F-symbols and optional R-symbols and pivotal data.
#[derive(Clone, PartialEq, Eq)]
pub struct SkeletalData {
    ring: FusionRing,
    f: FTable,
    r: Option<BTreeMap<RIndex, Cyclo>>,
    p: Option<Vec<Cyclo>>,
}

impl SkeletalData {
    pub fn new(
        ring: FusionRing,
        f: impl IntoIterator<Item = (FIndex, Cyclo)>,
        r: Option<BTreeMap<RIndex, Cyclo>>,
        p: Option<Vec<Cyclo>>,
    ) -> Result<Self> {
        let f = FTable::new(&ring, f)?;
        Self::from_parts(ring, f, r, p)
    }

    pub(crate) fn from_parts(
        ring: FusionRing,
        f: FTable,
        r: Option<BTreeMap<RIndex, Cyclo>>,
        p: Option<Vec<Cyclo>>,
    ) -> Result<Self> {
        if let Some(r) = &r {
            if !ring.is_commutative() {
                return Err(Error::InvalidData(
                    "R-symbols require a commutative fusion ring".into(),
                ));
            }
            for (s, v) in r {
                let ok = s.iter().all(|&x| (1..=ring.rank()).contains(&x))
                    && ring.n(s[0], s[1], s[2]);
                if !ok {
                    return Err(Error::InvalidData(format!("R{:?} is not admissible", s)));
                }
                if v.is_zero() {
                    return Err(Error::InvalidData(format!("R{:?} is zero", s)));
                }
            }
            if let Some(s) = r_slots(&ring).into_iter().find(|s| !r.contains_key(s)) {
                return Err(Error::InvalidData(format!("R{:?} is missing", s)));
            }
        }
        if let Some(p) = &p {
            if p.len() != ring.rank() {
                return Err(Error::InvalidData(format!(
                    "{} pivotal coefficients for rank {}",
                    p.len(),
                    ring.rank()
                )));
            }
            if let Some(a) = p.iter().position(|v| v.is_zero()) {
                return Err(Error::InvalidData(format!("p_{} is zero", a + 1)));
            }
        }
        Ok(SkeletalData { ring, f, r, p })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn f_table(&self) -> &FTable {
        &self.f
    }

    /// `[F_d^{abc}]_f^e`, or `None` if the index is inadmissible.
    #[inline]
    pub fn f(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Option<&Cyclo> {
        self.f.get(&[a, b, c, d, e, f])
    }

    pub fn r_symbols(&self) -> Option<&BTreeMap<RIndex, Cyclo>> {
        self.r.as_ref()
    }

    /// `R_c^{ab}`, if braided data is present and the slot exists.
    pub fn r(&self, a: usize, b: usize, c: usize) -> Option<&Cyclo> {
        self.r.as_ref()?.get(&[a, b, c])
    }

    pub fn pivotal(&self) -> Option<&[Cyclo]> {
        self.p.as_deref()
    }

    pub fn has_braiding(&self) -> bool {
        self.r.is_some()
    }

    pub fn with_braiding(&self, r: Option<BTreeMap<RIndex, Cyclo>>) -> Result<Self> {
        Self::from_parts(self.ring.clone(), self.f.clone(), r, self.p.clone())
    }

    pub fn with_pivotal(&self, p: Option<Vec<Cyclo>>) -> Result<Self> {
        Self::from_parts(self.ring.clone(), self.f.clone(), self.r.clone(), p)
    }

    /// Same data with F-symbols transformed entrywise.
    pub fn map_f(&self, f: impl FnMut(&FIndex, &Cyclo) -> Cyclo) -> Self {
        SkeletalData {
            ring: self.ring.clone(),
            f: self.f.map(f),
            r: self.r.clone(),
            p: self.p.clone(),
        }
    }

    /// `(e-labels, f-labels)` spanning the block `[F_d^{abc}]`.
    pub fn block_labels(&self, a: usize, b: usize, c: usize, d: usize) -> (Vec<usize>, Vec<usize>) {
        let ring = &self.ring;
        let es = ring
            .fuse(a, b)
            .iter()
            .copied()
            .filter(|&e| ring.n(e, c, d))
            .collect();
        let fs = ring
            .fuse(b, c)
            .iter()
            .copied()
            .filter(|&f| ring.n(a, f, d))
            .collect();
        (es, fs)
    }

    /// The matrix `M[i][j] = [F_d^{abc}]_{f_j}^{e_i}`.
    pub fn f_block(&self, a: usize, b: usize, c: usize, d: usize) -> Matrix {
        let (es, fs) = self.block_labels(a, b, c, d);
        es.iter()
            .map(|&e| {
                fs.iter()
                    .map(|&f| self.f(a, b, c, d, e, f).cloned().unwrap_or_default())
                    .collect()
            })
            .collect()
    }

    /// Every nonempty block `(a, b, c, d)`.
    pub fn blocks(&self) -> Vec<[usize; 4]> {
        let mut out: Vec<[usize; 4]> = self.f.iter().map(|(i, _)| [i[0], i[1], i[2], i[3]]).collect();
        out.dedup();
        out
    }

    pub fn to_file(&self) -> DataFile {
        DataFile {
            ring: RingRef::Body(self.ring.to_file()),
            f: self
                .f
                .iter()
                .map(|(i, v)| FEntry {
                    i: *i,
                    v: v.to_string(),
                })
                .collect(),
            r: self.r.as_ref().map(|r| {
                r.iter()
                    .map(|(i, v)| REntry {
                        i: *i,
                        v: v.to_string(),
                    })
                    .collect()
            }),
            p: self.p.as_ref().map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(a, v)| PEntry {
                        a: a + 1,
                        v: v.to_string(),
                    })
                    .collect()
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("data file serializes")
    }

    pub fn from_file(file: &DataFile) -> Result<Self> {
        let ring = file.ring.resolve()?;
        let lit = |v: &str| crate::cyclo::parse_cyclo(v);
        let f = file
            .f
            .iter()
            .map(|e| Ok((e.i, lit(&e.v)?)))
            .collect::<Result<Vec<_>>>()?;
        let r = match &file.r {
            None => None,
            Some(rs) => {
                let mut m = BTreeMap::new();
                for e in rs {
                    if m.insert(e.i, lit(&e.v)?).is_some() {
                        return Err(Error::InvalidData(format!("R{:?} given twice", e.i)));
                    }
                }
                Some(m)
            }
        };
        let p = match &file.p {
            None => None,
            Some(ps) => {
                let mut v = vec![None; ring.rank()];
                for e in ps {
                    if e.a == 0 || e.a > ring.rank() {
                        return Err(Error::InvalidData(format!("pivotal label {} out of range", e.a)));
                    }
                    if v[e.a - 1].replace(lit(&e.v)?).is_some() {
                        return Err(Error::InvalidData(format!("p_{} given twice", e.a)));
                    }
                }
                Some(
                    v.into_iter()
                        .enumerate()
                        .map(|(a, x)| {
                            x.ok_or_else(|| Error::InvalidData(format!("p_{} is missing", a + 1)))
                        })
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Self::new(ring, f, r, p)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DataFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }
}

impl std::fmt::Debug for SkeletalData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SkeletalData")
            .field("rank", &self.ring.rank())
            .field("f_symbols", &self.f.len())
            .field("braided", &self.r.is_some())
            .field("pivotal", &self.p)
            .finish()
    }
}

/// A ring given inline or by the name of a bundled ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Name(String),
    Body(RingFile),
}

impl RingRef {
    pub fn resolve(&self) -> Result<FusionRing> {
        match self {
            RingRef::Body(f) => FusionRing::from_file(f),
            RingRef::Name(n) => crate::data::ring(n)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown bundled ring `{n}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FEntry {
    pub i: FIndex,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct REntry {
    pub i: RIndex,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PEntry {
    pub a: usize,
    pub v: String,
}

/// JSON layout of a skeletal-data file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataFile {
    pub ring: RingRef,
    #[serde(rename = "F")]
    pub f: Vec<FEntry>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<REntry>>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<PEntry>>,
}

//! Multiplicity-free fusion rings, Frobenius–Perron dimensions and
//! automorphism groups.
//!
//! Labels are 1-based throughout; label 1 is the unit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated multiplicity-free fusion ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FusionRing {
    rank: usize,
    n: Vec<bool>,
    products: Vec<Vec<Vec<usize>>>,
    dual: Vec<usize>,
}

/// On-disk form: `table[a-1][b-1]` lists every `c` with `N_{a,b}^c = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub rank: usize,
    pub table: Vec<Vec<Vec<usize>>>,
}

impl FusionRing {
    /// Validates an `r×r×r` multiplicity array `m[a-1][b-1][c-1] = N_{a,b}^c`.
    pub fn validate(m: &[Vec<Vec<u32>>]) -> Result<FusionRing> {
        let r = m.len();
        if r == 0 {
            return Err(Error::InvalidRing("rank must be positive".into()));
        }
        for (a, rows) in m.iter().enumerate() {
            if rows.len() != r || rows.iter().any(|v| v.len() != r) {
                return Err(Error::InvalidRing(format!(
                    "table is not cubical at row {}",
                    a + 1
                )));
            }
        }
        let mut n = vec![false; r * r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    match m[a][b][c] {
                        0 => {}
                        1 => n[(a * r + b) * r + c] = true,
                        k => {
                            return Err(Error::InvalidRing(format!(
                                "N_{{{},{}}}^{} = {k}: only multiplicity-free rings are supported",
                                a + 1,
                                b + 1,
                                c + 1
                            )))
                        }
                    }
                }
            }
        }
        Self::from_bits(r, n)
    }

    /// Validates a product table, `table[a-1][b-1] = [c, ...]`.
    pub fn from_products(table: &[Vec<Vec<usize>>]) -> Result<FusionRing> {
        let r = table.len();
        let mut m = vec![vec![vec![0u32; r]; r]; r];
        for (a, row) in table.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidRing(format!(
                    "row {} has {} entries, expected {r}",
                    a + 1,
                    row.len()
                )));
            }
            for (b, cs) in row.iter().enumerate() {
                for &c in cs {
                    if c == 0 || c > r {
                        return Err(Error::InvalidRing(format!(
                            "label {c} in {}⊗{} is out of range",
                            a + 1,
                            b + 1
                        )));
                    }
                    m[a][b][c - 1] += 1;
                }
            }
        }
        Self::validate(&m)
    }

    fn from_bits(r: usize, n: Vec<bool>) -> Result<FusionRing> {
        let at = |a: usize, b: usize, c: usize| n[(a * r + b) * r + c];
        for a in 0..r {
            for b in 0..r {
                let want = a == b;
                if at(0, a, b) != want || at(a, 0, b) != want {
                    return Err(Error::InvalidRing(format!(
                        "unit axiom fails at (a, b) = ({}, {})",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        let mut dual = vec![0; r];
        for (a, slot) in dual.iter_mut().enumerate() {
            let ds: Vec<usize> = (0..r).filter(|&b| at(a, b, 0)).collect();
            if ds.len() != 1 {
                return Err(Error::InvalidRing(format!(
                    "label {} has {} duals",
                    a + 1,
                    ds.len()
                )));
            }
            *slot = ds[0];
        }
        for a in 0..r {
            if dual[dual[a]] != a || !at(dual[a], a, 0) {
                return Err(Error::InvalidRing(format!(
                    "dual map is not an involution at {}",
                    a + 1
                )));
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let lhs = (0..r).filter(|&e| at(a, b, e) && at(e, c, d)).count();
                        let rhs = (0..r).filter(|&f| at(a, f, d) && at(b, c, f)).count();
                        if lhs != rhs {
                            return Err(Error::InvalidRing(format!(
                                "associativity fails at (a, b, c, d) = ({}, {}, {}, {})",
                                a + 1,
                                b + 1,
                                c + 1,
                                d + 1
                            )));
                        }
                    }
                }
            }
        }
        let products = (0..r)
            .map(|a| {
                (0..r)
                    .map(|b| (0..r).filter(|&c| at(a, b, c)).map(|c| c + 1).collect())
                    .collect()
            })
            .collect();
        Ok(FusionRing {
            rank: r,
            n,
            products,
            dual: dual.into_iter().map(|d| d + 1).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    /// `N_{a,b}^c ≠ 0`.
    pub fn n(&self, a: usize, b: usize, c: usize) -> bool {
        let r = self.rank;
        self.n[((a - 1) * r + (b - 1)) * r + (c - 1)]
    }

    /// The labels `c` occurring in `a ⊗ b`, ascending.
    pub fn fuse(&self, a: usize, b: usize) -> &[usize] {
        &self.products[a - 1][b - 1]
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a - 1]
    }

    pub fn is_commutative(&self) -> bool {
        self.labels()
            .all(|a| self.labels().all(|b| self.fuse(a, b) == self.fuse(b, a)))
    }

    pub fn to_file(&self) -> RingFile {
        RingFile {
            rank: self.rank,
            table: self.products.clone(),
        }
    }

    pub fn from_file(f: &RingFile) -> Result<FusionRing> {
        if f.table.len() != f.rank {
            return Err(Error::InvalidRing(format!(
                "rank {} but table has {} rows",
                f.rank,
                f.table.len()
            )));
        }
        Self::from_products(&f.table)
    }

    pub fn from_json(text: &str) -> Result<FusionRing> {
        let f: RingFile = serde_json::from_str(text)?;
        Self::from_file(&f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("ring file serializes")
    }

    /// Frobenius–Perron dimensions to absolute tolerance `tol`.
    ///
    /// Uses power iteration on `Σ_a N_a`, a positive matrix whose Perron
    /// vector is the FP-dimension vector of every `N_a` simultaneously.
    pub fn fp_dims(&self, tol: f64) -> Vec<f64> {
        let r = self.rank;
        let mut v = vec![1.0f64; r];
        for _ in 0..1_000_000 {
            let mut w = vec![0.0f64; r];
            for a in self.labels() {
                for b in self.labels() {
                    for &c in self.fuse(a, b) {
                        w[b - 1] += v[c - 1];
                    }
                }
            }
            let s = w[0];
            for x in &mut w {
                *x /= s;
            }
            let delta = v
                .iter()
                .zip(&w)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            v = w;
            if delta < tol * 1e-3 {
                break;
            }
        }
        v
    }

    /// Every table-preserving permutation fixing the unit.
    pub fn automorphisms(&self) -> AutomorphismGroup {
        let r = self.rank;
        let dims = self.fp_dims(1e-12);
        let self_dual: Vec<bool> = self.labels().map(|a| self.dual(a) == a).collect();
        let compatible = |a: usize, b: usize| {
            self_dual[a - 1] == self_dual[b - 1] && (dims[a - 1] - dims[b - 1]).abs() < 1e-9
        };
        let mut img = vec![0usize; r + 1];
        let mut used = vec![false; r + 1];
        img[1] = 1;
        used[1] = true;
        let mut out = Vec::new();
        self.extend_automorphism(2, &mut img, &mut used, &compatible, &mut out);
        out.sort();
        AutomorphismGroup { elements: out }
    }

    fn extend_automorphism(
        &self,
        a: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Permutation>,
    ) {
        let r = self.rank;
        if a > r {
            out.push(Permutation(img[1..].to_vec()));
            return;
        }
        for t in 2..=r {
            if used[t] || !compatible(a, t) {
                continue;
            }
            img[a] = t;
            // Check every triple whose largest label is a.
            let ok = (1..=a).all(|x| {
                (1..=a).all(|y| {
                    (1..=a).all(|z| {
                        x.max(y).max(z) != a || self.n(x, y, z) == self.n(img[x], img[y], img[z])
                    })
                })
            });
            if ok {
                used[t] = true;
                self.extend_automorphism(a + 1, img, used, compatible, out);
                used[t] = false;
            }
        }
        img[a] = 0;
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FusionRing(rank {}, {:?})", self.rank, self.products)
    }
}

/// A permutation of `{1..r}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation((1..=r).collect())
    }

    /// From an image list `[σ(1), ..., σ(r)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &x in &images {
            if x == 0 || x > r || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses cycle notation such as `(2 3)(4 5 6)` or `()` on `{1..r}`.
    pub fn parse_cycles(text: &str, r: usize) -> Result<Self> {
        let mut img: Vec<usize> = (1..=r).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(text.len() - rest.len(), "expected `(`"))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(text.len(), "unclosed cycle"))?;
            let items: Vec<usize> = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(text.len() - rest.len(), format!("bad label `{s}`")))
                })
                .collect::<Result<_>>()?;
            for (i, &x) in items.iter().enumerate() {
                if x == 0 || x > r {
                    return Err(Error::InvalidArgument(format!("label {x} out of range")));
                }
                img[x - 1] = items[(i + 1) % items.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_images(img)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.0[a - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn is_automorphism_of(&self, ring: &FusionRing) -> bool {
        self.len() == ring.rank()
            && self.apply(1) == 1
            && ring.labels().all(|a| {
                ring.labels().all(|b| {
                    ring.labels()
                        .all(|c| ring.n(a, b, c) == ring.n(self.apply(a), self.apply(b), self.apply(c)))
                })
            })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len() + 1];
        let mut wrote = false;
        for start in 1..=self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            let parts: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    /// Cycle notation on the smallest `{1..r}` containing every label.
    fn from_str(s: &str) -> Result<Self> {
        let r = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Self::parse_cycles(s, r)
    }
}

/// The automorphism group of a fusion ring, sorted with the identity first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

//! Gauge transformations, label permutations and formal monomials.
//!
//! A gauge assigns a nonzero number `g_c^{ab}` to every fusion channel, with
//! `g_b^{1b} = g_b^{b1} = 1`. It acts by
//!
//! ```text
//! [F_d^{abc}]_f^e  ↦  g_e^{ab} g_d^{ec} / (g_d^{af} g_f^{bc}) · [F_d^{abc}]_f^e
//! R_c^{ab}         ↦  g_c^{ab} / g_c^{ba} · R_c^{ab}
//! p_a              ↦  g_1^{a*a} / g_1^{aa*} · p_a
//! ```

mod monomial;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::ring::{FusionRing, Permutation};
use crate::skeleton::{r_slots, FIndex, REntry, RIndex, RingRef, SkeletalData};

pub use monomial::{
    evaluate_monomial, gauge_weight, is_de_facto_invariant, is_de_jure_invariant, FormalMonomial,
    FormalSymbol, GaugeWeight,
};

/// Values `g_c^{ab}` keyed by `(a, b, c)`. Channels not listed are 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransform {
    ring: FusionRing,
    values: BTreeMap<RIndex, Cyclo>,
}

impl GaugeTransform {
    pub fn identity(ring: &FusionRing) -> Self {
        GaugeTransform {
            ring: ring.clone(),
            values: BTreeMap::new(),
        }
    }

    /// Rejects zero values, non-channels and non-trivial vacuum entries.
    pub fn new(ring: &FusionRing, values: BTreeMap<RIndex, Cyclo>) -> Result<Self> {
        for (&[a, b, c], v) in &values {
            let in_range = [a, b, c].iter().all(|&x| (1..=ring.rank()).contains(&x));
            if !in_range || !ring.n(a, b, c) {
                return Err(Error::InvalidArgument(format!("({a},{b},{c}) is not a fusion channel")));
            }
            if v.is_zero() {
                return Err(Error::InvalidArgument(format!("g_{c}^{{{a}{b}}} is zero")));
            }
            if (a == 1 || b == 1) && !v.is_one() {
                return Err(Error::Vacuum(format!("g_{c}^{{{a}{b}}} must be 1")));
            }
        }
        Ok(GaugeTransform {
            ring: ring.clone(),
            values,
        })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Cyclo {
        self.values.get(&[a, b, c]).cloned().unwrap_or_else(Cyclo::one)
    }

    pub fn values(&self) -> &BTreeMap<RIndex, Cyclo> {
        &self.values
    }

    /// Pointwise product; applying it equals applying `other` then `self`.
    pub fn compose(&self, other: &GaugeTransform) -> Result<GaugeTransform> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("gauges live on different rings".into()));
        }
        let values = r_slots(&self.ring)
            .into_iter()
            .map(|[a, b, c]| ([a, b, c], &self.get(a, b, c) * &other.get(a, b, c)))
            .filter(|(_, v)| !v.is_one())
            .collect();
        Ok(GaugeTransform {
            ring: self.ring.clone(),
            values,
        })
    }

    pub fn inverse(&self) -> GaugeTransform {
        GaugeTransform {
            ring: self.ring.clone(),
            values: self
                .values
                .iter()
                .map(|(k, v)| (*k, v.inv().expect("gauge values are nonzero")))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let file = GaugeFile {
            ring: RingRef::Body(self.ring.to_file()),
            g: self
                .values
                .iter()
                .map(|(i, v)| REntry {
                    i: *i,
                    v: v.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("gauge file serializes")
    }

    /// Reads `{"ring": ..., "g": [{"i": [a,b,c], "v": "<literal>"}, ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GaugeFile = serde_json::from_str(text)?;
        let ring = file.ring.resolve()?;
        let mut values = BTreeMap::new();
        for e in &file.g {
            let v = crate::cyclo::parse_cyclo(&e.v)?;
            if values.insert(e.i, v).is_some() {
                return Err(Error::InvalidData(format!("g{:?} given twice", e.i)));
            }
        }
        Self::new(&ring, values)
    }

    /// The factor multiplying `[F_d^{abc}]_f^e`.
    pub fn f_factor(&self, i: &FIndex) -> Cyclo {
        let [a, b, c, d, e, f] = *i;
        let num = &self.get(a, b, e) * &self.get(e, c, d);
        let den = &self.get(a, f, d) * &self.get(b, c, f);
        num.checked_div(&den).expect("gauge values are nonzero")
    }
}

#[derive(Serialize, Deserialize)]
struct GaugeFile {
    ring: RingRef,
    g: Vec<REntry>,
}

/// A gauge with every non-vacuum value a uniformly random root of unity of
/// order dividing `max_order`, reproducible from `seed`.
pub fn random_gauge(ring: &FusionRing, seed: u64, max_order: u32) -> GaugeTransform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = max_order.max(1);
    let values = r_slots(ring)
        .into_iter()
        .filter(|s| s[0] != 1 && s[1] != 1)
        .map(|s| (s, Cyclo::zeta(n, rng.gen_range(0..n as i64))))
        .collect();
    GaugeTransform {
        ring: ring.clone(),
        values,
    }
}

pub fn apply_gauge(data: &SkeletalData, g: &GaugeTransform) -> Result<SkeletalData> {
    let ring = data.ring();
    if ring != g.ring() {
        return Err(Error::RingMismatch("gauge and data use different rings".into()));
    }
    let out = data.map_f(|i, v| v * &g.f_factor(i));
    let r = data.r_symbols().map(|r| {
        r.iter()
            .map(|(&[a, b, c], v)| {
                let k = g.get(a, b, c).checked_div(&g.get(b, a, c)).expect("nonzero");
                ([a, b, c], v * &k)
            })
            .collect()
    });
    let p = data.pivotal().map(|p| {
        ring.labels()
            .map(|a| {
                let ad = ring.dual(a);
                let k = g.get(ad, a, 1).checked_div(&g.get(a, ad, 1)).expect("nonzero");
                &p[a - 1] * &k
            })
            .collect()
    });
    out.with_braiding(r)?.with_pivotal(p)
}

/// Relabels by a fusion-ring automorphism: the new value at `σ(x)` is the
/// old value at `x`.
pub fn apply_permutation(data: &SkeletalData, sigma: &Permutation) -> Result<SkeletalData> {
    let ring = data.ring();
    if sigma.len() != ring.rank() || !sigma.is_automorphism_of(ring) {
        return Err(Error::InvalidArgument(format!(
            "{sigma} is not an automorphism of the fusion ring"
        )));
    }
    let s = |x: usize| sigma.apply(x);
    let f: Vec<(FIndex, Cyclo)> = data
        .f_table()
        .iter()
        .map(|(i, v)| (i.map(s), v.clone()))
        .collect();
    let r = data
        .r_symbols()
        .map(|r| r.iter().map(|(i, v)| (i.map(s), v.clone())).collect());
    let p = data.pivotal().map(|p| {
        let mut out = vec![Cyclo::one(); p.len()];
        for (a, v) in p.iter().enumerate() {
            out[s(a + 1) - 1] = v.clone();
        }
        out
    });
    SkeletalData::new(ring.clone(), f, r, p)
}

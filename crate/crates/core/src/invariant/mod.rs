//! Gauge-invariant expressions, their evaluation, and census identification.

mod census;
mod numeric;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::gauge::{evaluate_monomial, FormalMonomial};
use crate::ring::{AutomorphismGroup, Permutation};
use crate::skeleton::SkeletalData;

pub use census::{match_census, CensusColumn, CensusRow, CensusTable};
pub use numeric::{numeric_matches, parse_numeric, NumericValue};

/// A single monomial, an ordered tuple of monomials, or the orbit of either
/// under the automorphism group of the fusion ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantItem {
    Mono(FormalMonomial),
    Tuple(Vec<FormalMonomial>),
    Orbit(Box<InvariantItem>),
}

impl InvariantItem {
    pub fn orbit_of(inner: InvariantItem) -> Result<Self> {
        if matches!(inner, InvariantItem::Orbit(_)) {
            return Err(Error::InvalidArgument("orbits cannot be nested".into()));
        }
        Ok(InvariantItem::Orbit(Box::new(inner)))
    }

    pub fn monomials(&self) -> Vec<&FormalMonomial> {
        match self {
            InvariantItem::Mono(m) => vec![m],
            InvariantItem::Tuple(ms) => ms.iter().collect(),
            InvariantItem::Orbit(inner) => inner.monomials(),
        }
    }

    pub fn mentions_r(&self) -> bool {
        self.monomials().iter().any(|m| m.mentions_r())
    }

    pub fn permute(&self, sigma: &Permutation) -> Self {
        match self {
            InvariantItem::Mono(m) => InvariantItem::Mono(m.permute(sigma)),
            InvariantItem::Tuple(ms) => {
                InvariantItem::Tuple(ms.iter().map(|m| m.permute(sigma)).collect())
            }
            InvariantItem::Orbit(inner) => InvariantItem::Orbit(Box::new(inner.permute(sigma))),
        }
    }
}

impl fmt::Display for InvariantItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantItem::Mono(m) => write!(f, "{m}"),
            InvariantItem::Tuple(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
            InvariantItem::Orbit(inner) => write!(f, "S({inner})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ItemRepr {
    Mono(FormalMonomial),
    Tuple(Vec<FormalMonomial>),
    Orbit { orbit: Box<ItemRepr> },
}

impl TryFrom<ItemRepr> for InvariantItem {
    type Error = Error;

    fn try_from(r: ItemRepr) -> Result<Self> {
        Ok(match r {
            ItemRepr::Mono(m) => InvariantItem::Mono(m),
            ItemRepr::Tuple(ms) => InvariantItem::Tuple(ms),
            ItemRepr::Orbit { orbit } => InvariantItem::orbit_of((*orbit).try_into()?)?,
        })
    }
}

impl From<&InvariantItem> for ItemRepr {
    fn from(item: &InvariantItem) -> Self {
        match item {
            InvariantItem::Mono(m) => ItemRepr::Mono(m.clone()),
            InvariantItem::Tuple(ms) => ItemRepr::Tuple(ms.clone()),
            InvariantItem::Orbit(inner) => ItemRepr::Orbit {
                orbit: Box::new(inner.as_ref().into()),
            },
        }
    }
}

impl Serialize for InvariantItem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ItemRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvariantItem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ItemRepr::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

/// The value of an [`InvariantItem`] on concrete data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantValue {
    Scalar(Cyclo),
    TupleVal(Vec<InvariantValue>),
    SetVal(BTreeSet<InvariantValue>),
    /// Stands for any quantity built from R-symbols of non-braided data.
    NonBraided,
}

impl InvariantValue {
    /// Numeric rendering with `digits` decimals.
    pub fn format_numeric(&self, digits: u32) -> String {
        match self {
            InvariantValue::Scalar(c) => c.format_numeric(digits),
            InvariantValue::TupleVal(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.format_numeric(digits)).collect();
                format!("({})", parts.join(", "))
            }
            InvariantValue::SetVal(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.format_numeric(digits)).collect();
                format!("{{{}}}", parts.join(", "))
            }
            InvariantValue::NonBraided => "-".into(),
        }
    }

    /// JSON form used by census files: literal strings, `"-"`, and arrays for
    /// tuples and sets.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            InvariantValue::Scalar(c) => Value::String(c.to_string()),
            InvariantValue::TupleVal(xs) => Value::Array(xs.iter().map(|x| x.to_json()).collect()),
            InvariantValue::SetVal(xs) => Value::Array(xs.iter().map(|x| x.to_json()).collect()),
            InvariantValue::NonBraided => Value::String("-".into()),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Scalar(c) => write!(f, "{c}"),
            InvariantValue::TupleVal(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
            InvariantValue::SetVal(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            InvariantValue::NonBraided => f.write_str("-"),
        }
    }
}

/// Relabels every index of `m`. `sigma` must be an automorphism of `ring`.
pub fn permute_monomial(
    sigma: &Permutation,
    m: &FormalMonomial,
    ring: &crate::ring::FusionRing,
) -> Result<FormalMonomial> {
    if sigma.len() != ring.rank() || !sigma.is_automorphism_of(ring) {
        return Err(Error::InvalidArgument(format!(
            "{sigma} is not an automorphism of the fusion ring"
        )));
    }
    Ok(m.permute(sigma))
}

/// `{σ·item : σ ∈ group}` without duplicates.
pub fn orbit(item: &InvariantItem, group: &AutomorphismGroup) -> Result<BTreeSet<InvariantItem>> {
    if matches!(item, InvariantItem::Orbit(_)) {
        return Err(Error::InvalidArgument("orbit of an orbit".into()));
    }
    Ok(group.iter().map(|s| item.permute(s)).collect())
}

fn evaluate_mono(m: &FormalMonomial, data: &SkeletalData) -> Result<InvariantValue> {
    if m.mentions_r() && !data.has_braiding() {
        return Ok(InvariantValue::NonBraided);
    }
    Ok(InvariantValue::Scalar(evaluate_monomial(m, data)?))
}

/// Evaluates with a precomputed automorphism group of the data's ring.
pub fn evaluate_item_with(
    item: &InvariantItem,
    data: &SkeletalData,
    group: &AutomorphismGroup,
) -> Result<InvariantValue> {
    let mut cache = HashMap::new();
    eval_cached(item, data, group, &mut cache)
}

fn eval_cached(
    item: &InvariantItem,
    data: &SkeletalData,
    group: &AutomorphismGroup,
    cache: &mut HashMap<FormalMonomial, InvariantValue>,
) -> Result<InvariantValue> {
    let mut mono = |m: &FormalMonomial| -> Result<InvariantValue> {
        if let Some(v) = cache.get(m) {
            return Ok(v.clone());
        }
        let v = evaluate_mono(m, data)?;
        cache.insert(m.clone(), v.clone());
        Ok(v)
    };
    match item {
        InvariantItem::Mono(m) => mono(m),
        InvariantItem::Tuple(ms) => Ok(InvariantValue::TupleVal(
            ms.iter().map(&mut mono).collect::<Result<_>>()?,
        )),
        InvariantItem::Orbit(inner) => {
            if let InvariantItem::Mono(m) = inner.as_ref() {
                if m.mentions_r() && !data.has_braiding() {
                    return Ok(InvariantValue::NonBraided);
                }
            }
            let mut set = BTreeSet::new();
            for member in orbit(inner, group)? {
                set.insert(eval_cached(&member, data, group, cache)?);
            }
            Ok(InvariantValue::SetVal(set))
        }
    }
}

pub fn evaluate_item(item: &InvariantItem, data: &SkeletalData) -> Result<InvariantValue> {
    let group = data.ring().automorphisms();
    evaluate_item_with(item, data, &group)
}

/// Keep-mask over columns: a column is dropped exactly when every category
/// has the same value in it. With fewer than two categories all are kept.
pub fn reduce_columns(evaluations: &[Vec<InvariantValue>]) -> Vec<bool> {
    let width = evaluations.first().map_or(0, |r| r.len());
    if evaluations.len() < 2 {
        return vec![true; width];
    }
    (0..width)
        .map(|j| evaluations.iter().any(|row| row[j] != evaluations[0][j]))
        .collect()
}

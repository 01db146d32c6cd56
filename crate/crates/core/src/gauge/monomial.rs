//! Formal rational monomials in F-, R-symbols and left quantum dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::ring::{FusionRing, Permutation};
use crate::skeleton::{is_admissible, quantum_dims, SkeletalData};

/// A formal symbol: `F[a,b,c,d,e,f]`, `R[a,b,c]` or `d[a]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormalSymbol {
    F([usize; 6]),
    R([usize; 3]),
    QDim(usize),
}

impl FormalSymbol {
    pub fn permute(&self, sigma: &Permutation) -> Self {
        let s = |x: usize| sigma.apply(x);
        match *self {
            FormalSymbol::F(i) => FormalSymbol::F(i.map(s)),
            FormalSymbol::R(i) => FormalSymbol::R(i.map(s)),
            FormalSymbol::QDim(a) => FormalSymbol::QDim(s(a)),
        }
    }

    pub fn is_admissible(&self, ring: &FusionRing) -> bool {
        let r = ring.rank();
        let in_range = |xs: &[usize]| xs.iter().all(|&x| (1..=r).contains(&x));
        match self {
            FormalSymbol::F(i) => is_admissible(ring, i),
            FormalSymbol::R(i) => in_range(i) && ring.n(i[0], i[1], i[2]),
            FormalSymbol::QDim(a) => in_range(&[*a]),
        }
    }
}

impl fmt::Display for FormalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FormalSymbol::F(i) => write!(f, "F[{}]", join(i)),
            FormalSymbol::R(i) => write!(f, "R[{}]", join(i)),
            FormalSymbol::QDim(a) => write!(f, "d[{a}]"),
        }
    }
}

/// Exponent on each gauge variable `g_c^{ab}`, keyed by `(a, b, c)`.
pub type GaugeWeight = BTreeMap<[usize; 3], i64>;

/// A product of formal symbols raised to nonzero integer powers. The empty
/// monomial is the constant 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalMonomial {
    exps: BTreeMap<FormalSymbol, i64>,
}

impl FormalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn symbol(s: FormalSymbol) -> Self {
        Self::power(s, 1)
    }

    pub fn power(s: FormalSymbol, e: i64) -> Self {
        let mut m = Self::one();
        m.push(s, e);
        m
    }

    pub fn f(i: [usize; 6]) -> Self {
        Self::symbol(FormalSymbol::F(i))
    }

    pub fn r(i: [usize; 3]) -> Self {
        Self::symbol(FormalSymbol::R(i))
    }

    pub fn qdim(a: usize) -> Self {
        Self::symbol(FormalSymbol::QDim(a))
    }

    fn push(&mut self, s: FormalSymbol, e: i64) {
        let v = self.exps.entry(s).or_insert(0);
        *v += e;
        if *v == 0 {
            self.exps.remove(&s);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<FormalSymbol, i64> {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, e) in &other.exps {
            out.push(*s, *e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = Self::one();
        for (s, e) in &self.exps {
            out.push(*s, e * k);
        }
        out
    }

    pub fn mentions_r(&self) -> bool {
        self.exps.keys().any(|s| matches!(s, FormalSymbol::R(_)))
    }

    pub fn mentions_qdim(&self) -> bool {
        self.exps.keys().any(|s| matches!(s, FormalSymbol::QDim(_)))
    }

    pub fn permute(&self, sigma: &Permutation) -> Self {
        let mut out = Self::one();
        for (s, e) in &self.exps {
            out.push(s.permute(sigma), *e);
        }
        out
    }

    pub fn check_admissible(&self, ring: &FusionRing) -> Result<()> {
        match self.exps.keys().find(|s| !s.is_admissible(ring)) {
            Some(s) => Err(Error::InvalidArgument(format!(
                "{s} is not admissible for this ring"
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for FormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(s, e)| {
                if *e == 1 {
                    s.to_string()
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

fn parse_factor(text: &str, base: usize) -> Result<(FormalSymbol, i64)> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    let at = |o: usize| base + lead + o;
    let open = t
        .find('[')
        .ok_or_else(|| Error::parse(at(0), "expected `F[`, `R[` or `d[`"))?;
    let close = t
        .find(']')
        .ok_or_else(|| Error::parse(at(t.len()), "unclosed `[`"))?;
    let head = t[..open].trim();
    let idx: Vec<usize> = t[open + 1..close]
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(at(open + 1), format!("bad label `{}`", s.trim())))
        })
        .collect::<Result<_>>()?;
    if idx.contains(&0) {
        return Err(Error::parse(at(open + 1), "labels are 1-based"));
    }
    let rest = t[close + 1..].trim();
    let e = if rest.is_empty() {
        1
    } else {
        let r = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::parse(at(close + 1), "expected `^` or `*`"))?;
        r.trim()
            .parse::<i64>()
            .map_err(|_| Error::parse(at(close + 1), format!("bad exponent `{}`", r.trim())))?
    };
    let arity = |n: usize| {
        if idx.len() == n {
            Ok(())
        } else {
            Err(Error::parse(
                at(open),
                format!("`{head}` takes {n} labels, got {}", idx.len()),
            ))
        }
    };
    let sym = match head {
        "F" => {
            arity(6)?;
            FormalSymbol::F([idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]])
        }
        "R" => {
            arity(3)?;
            FormalSymbol::R([idx[0], idx[1], idx[2]])
        }
        "d" => {
            arity(1)?;
            FormalSymbol::QDim(idx[0])
        }
        other => return Err(Error::parse(at(0), format!("unknown symbol `{other}`"))),
    };
    Ok((sym, e))
}

impl FromStr for FormalMonomial {
    type Err = Error;

    /// Text form `F[3,3,3,1,3,3]^1 * R[2,2,1]^-1`; `1` is the empty product.
    fn from_str(s: &str) -> Result<Self> {
        let mut m = FormalMonomial::one();
        if s.trim() == "1" {
            return Ok(m);
        }
        let mut offset = 0;
        for part in s.split('*') {
            if part.trim().is_empty() {
                return Err(Error::parse(offset, "empty factor"));
            }
            let (sym, e) = parse_factor(part, offset)?;
            m.push(sym, e);
            offset += part.len() + 1;
        }
        Ok(m)
    }
}

impl serde::Serialize for FormalMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for FormalMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Net exponent of every non-vacuum gauge variable after pushing a gauge
/// transform through `m`. Vacuum variables `g_b^{1b}`, `g_b^{b1}` are fixed to
/// 1 and omitted.
pub fn gauge_weight(m: &FormalMonomial) -> GaugeWeight {
    let mut w = GaugeWeight::new();
    let mut add = |slot: [usize; 3], k: i64| {
        if slot[0] == 1 || slot[1] == 1 {
            return;
        }
        let v = w.entry(slot).or_insert(0);
        *v += k;
        if *v == 0 {
            w.remove(&slot);
        }
    };
    for (s, &k) in m.exponents() {
        match *s {
            FormalSymbol::F([a, b, c, d, e, f]) => {
                add([a, b, e], k);
                add([e, c, d], k);
                add([a, f, d], -k);
                add([b, c, f], -k);
            }
            FormalSymbol::R([a, b, c]) => {
                add([a, b, c], k);
                add([b, a, c], -k);
            }
            FormalSymbol::QDim(_) => {}
        }
    }
    w
}

pub fn is_de_jure_invariant(m: &FormalMonomial) -> bool {
    gauge_weight(m).is_empty()
}

fn symbol_values(
    m: &FormalMonomial,
    data: &SkeletalData,
) -> Result<Vec<(FormalSymbol, i64, Cyclo)>> {
    m.check_admissible(data.ring())?;
    let dims = if m.mentions_qdim() {
        Some(quantum_dims(data)?)
    } else {
        None
    };
    if m.mentions_r() && !data.has_braiding() {
        return Err(Error::NotApplicable(format!("{m} needs R-symbols")));
    }
    m.exponents()
        .iter()
        .map(|(s, &e)| {
            let v = match *s {
                FormalSymbol::F([a, b, c, d, x, f]) => data
                    .f(a, b, c, d, x, f)
                    .cloned()
                    .expect("admissibility checked"),
                FormalSymbol::R([a, b, c]) => data.r(a, b, c).cloned().expect("admissible R slot"),
                FormalSymbol::QDim(a) => dims.as_ref().expect("dims computed")[a - 1].clone(),
            };
            Ok((*s, e, v))
        })
        .collect()
}

/// Exact value of `m` on `data`.
pub fn evaluate_monomial(m: &FormalMonomial, data: &SkeletalData) -> Result<Cyclo> {
    let mut acc = Cyclo::one();
    for (s, e, v) in symbol_values(m, data)? {
        if v.is_zero() && e < 0 {
            return Err(Error::UndefinedValue(format!("{s} is 0 in the denominator of {m}")));
        }
        acc = &acc * &v.pow(e)?;
    }
    Ok(acc)
}

/// De jure invariance, or a positive-power symbol that vanishes on `data`
/// (its value is then 0 under every gauge).
pub fn is_de_facto_invariant(m: &FormalMonomial, data: &SkeletalData) -> Result<bool> {
    let vals = symbol_values(m, data)?;
    if let Some((s, _, _)) = vals.iter().find(|(_, e, v)| *e < 0 && v.is_zero()) {
        return Err(Error::UndefinedValue(format!("{s} is 0 in the denominator of {m}")));
    }
    if is_de_jure_invariant(m) {
        return Ok(true);
    }
    Ok(vals.iter().any(|(_, e, v)| *e > 0 && v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m: FormalMonomial = "F[3,3,3,1,3,3]^1 * R[2,2,1]^-1".parse().unwrap();
        assert_eq!(m.to_string(), "F[3,3,3,1,3,3] * R[2,2,1]^-1");
        assert_eq!(m.to_string().parse::<FormalMonomial>().unwrap(), m);
        let sq: FormalMonomial = "d[2] * d[2]".parse().unwrap();
        assert_eq!(sq, FormalMonomial::qdim(2).pow(2));
        assert!("F[1,2]".parse::<FormalMonomial>().is_err());
        assert!("G[1]".parse::<FormalMonomial>().is_err());
        assert!("F[1,1,1,1,1,1] *".parse::<FormalMonomial>().is_err());
        assert_eq!("1".parse::<FormalMonomial>().unwrap(), FormalMonomial::one());
    }

    #[test]
    fn weights() {
        let m = FormalMonomial::f([5, 5, 5, 5, 6, 6]);
        let w = gauge_weight(&m);
        assert_eq!(w, GaugeWeight::from([([6, 5, 5], 1), ([5, 6, 5], -1)]));
        assert!(is_de_jure_invariant(&FormalMonomial::qdim(2)));
        assert!(is_de_jure_invariant(&FormalMonomial::r([3, 3, 1])));
        assert!(!is_de_jure_invariant(&FormalMonomial::r([2, 3, 4])));
        let prod = m.mul(&FormalMonomial::r([2, 3, 4]));
        let mut sum = gauge_weight(&m);
        for (k, v) in gauge_weight(&FormalMonomial::r([2, 3, 4])) {
            *sum.entry(k).or_insert(0) += v;
        }
        sum.retain(|_, v| *v != 0);
        assert_eq!(gauge_weight(&prod), sum);
    }
}

//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclo`] is stored at its minimal conductor with exponents drawn from a
//! fixed basis of Q(ζ_N) (see [`basis`]), so two values are equal exactly when
//! their representations are.

mod basis;
pub mod interval;
pub mod matrix;
mod parse;
pub mod rational;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
pub use interval::ComplexInterval;
pub use matrix::{conj_transpose, det, identity, mat_inverse, mat_mul, Matrix};
pub use rational::Rational;

/// An exact element of a cyclotomic field.
///
/// The derived ordering is structural (conductor, then terms); it exists for
/// deterministic sorting and says nothing about numeric size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclo {
    n: u32,
    terms: Vec<(u32, Rational)>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Cyclo {
                n: 1,
                terms: vec![(0, r)],
            }
        }
    }

    /// `ζ_n^k`, with `ζ_n = exp(2πi/n)`.
    pub fn from_root(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        Ok(Self::zeta(n, k))
    }

    /// Infallible form of [`Cyclo::from_root`]; panics when `n == 0`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u32;
        Self::from_raw_terms(n, vec![(k, Rational::ONE)])
    }

    /// `i = ζ_4`.
    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    /// Canonical form of `Σ c_k ζ_n^k` for arbitrary (unreduced) exponents.
    pub fn from_raw_terms(n: u32, terms: Vec<(u32, Rational)>) -> Self {
        canonical_from_sparse(n, terms.into_iter().map(|(k, c)| (k % n, c)).collect())
    }

    /// Square root of an integer, realised through quadratic Gauss sums.
    /// Negative input yields `i·√|m|`.
    pub fn sqrt_int(m: i64) -> Self {
        if m == 0 {
            return Self::zero();
        }
        if m < 0 {
            return &Self::i() * &Self::sqrt_int(-m);
        }
        let mut out = Self::one();
        for (p, e) in basis::factorize(m as u32) {
            out = out.mul_rational(&Rational::from_integer((p as i64).pow(e / 2)));
            if e % 2 == 1 {
                out = &out * &sqrt_prime(p);
            }
        }
        out
    }

    /// Golden ratio `(1 + √5)/2 = -ζ_5^2 - ζ_5^3`.
    pub fn phi() -> Self {
        -(&Self::zeta(5, 2) + &Self::zeta(5, 3))
    }

    /// Its Galois conjugate `(1 - √5)/2 = 1 + ζ_5^2 + ζ_5^3`.
    pub fn phi_bar() -> Self {
        &Self::one() - &Self::phi()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Basis exponents and coefficients, ascending by exponent.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.n != 1 {
            None
        } else {
            Some(self.terms.first().map_or(Rational::ZERO, |t| t.1.clone()))
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclo {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// The automorphism `ζ_N ↦ ζ_N^a`; `a` must be coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.n as i64;
        debug_assert_eq!(a.gcd(&n), 1);
        if self.n <= 2 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (((*k as i64 * a).rem_euclid(n)) as u32, c.clone()))
            .collect();
        Self::from_raw_terms(self.n, terms)
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (k, c) = &self.terms[0];
            let c = c.recip().expect("nonzero coefficient");
            return Ok(Self::from_raw_terms(self.n, vec![((self.n - k) % self.n, c)]));
        }
        // Roots of unity and their rational multiples: x^{-1} = x̄ / |x|².
        let conj = self.conj();
        if let Some(r) = (self * &conj).as_rational() {
            return Ok(conj.mul_rational(&r.recip().expect("nonzero |x|²")));
        }
        // x^{-1} = (∏_{σ≠1} σ(x)) / N(x), where the norm N(x) is rational.
        let n = self.n as i64;
        let mut others = Self::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = (&others * self)
            .as_rational()
            .expect("field norm is rational");
        Ok(others.mul_rational(&norm.recip().expect("norm of nonzero value")))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Floating-point approximation; for heuristics only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in &self.terms {
            let t = 2.0 * std::f64::consts::PI * (*k as f64) / (self.n as f64);
            let c = c.to_f64();
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// Certified enclosure with width below `10^-digits`.
    pub fn to_complex(&self, digits: u32) -> ComplexInterval {
        interval::enclose(self, digits.max(1))
    }

    /// Sign of a real value: `Some(true)` if positive, `Some(false)` if
    /// negative or zero, `None` if not real.
    pub fn is_positive_real(&self) -> Option<bool> {
        if !self.is_real() {
            return None;
        }
        if self.is_zero() {
            return Some(false);
        }
        if let Some(r) = self.as_rational() {
            return Some(!r.is_negative());
        }
        let mut digits = 8;
        loop {
            let b = self.to_complex(digits);
            if num_traits::Signed::is_positive(&b.re_lo) {
                return Some(true);
            }
            if num_traits::Signed::is_negative(&b.re_hi) {
                return Some(false);
            }
            digits *= 2;
        }
    }

    /// Rounded decimal rendering, e.g. `0.924 + 0.383i`.
    pub fn format_numeric(&self, digits: u32) -> String {
        interval::format_numeric(self, digits.max(1))
    }

    fn add_same(&self, rhs: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j == rhs.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i == self.terms.len()
                || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                terms.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                terms.push(rhs.terms[j].clone());
                j += 1;
            } else {
                let c = &self.terms[i].1 + &rhs.terms[j].1;
                if !c.is_zero() {
                    terms.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        minimize(self.n, terms)
    }
}

fn sqrt_prime(p: u32) -> Cyclo {
    if p == 2 {
        return &Cyclo::zeta(8, 1) + &Cyclo::zeta(8, 7);
    }
    // g = Σ (k/p) ζ_p^k satisfies g² = (-1/p)·p.
    let terms = (1..p)
        .map(|k| {
            let qr = (1..p).any(|x| (x as u64 * x as u64) % p as u64 == k as u64);
            (k, Rational::from_integer(if qr { 1 } else { -1 }))
        })
        .collect();
    let g = Cyclo::from_raw_terms(p, terms);
    if p % 4 == 1 {
        g
    } else {
        -(&Cyclo::i() * &g)
    }
}

/// Canonical value of a short list of `(exponent mod n, coefficient)` pairs.
/// Cheaper than the dense route when there are few terms and `n` is large.
fn canonical_from_sparse(n: u32, raw: Vec<(u32, Rational)>) -> Cyclo {
    if n % 4 == 2 {
        let m = n / 2;
        let half = raw
            .into_iter()
            .map(|(k, c)| {
                let kk = ((k as u64 * (m as u64 + 1) / 2) % m as u64) as u32;
                if k % 2 == 0 {
                    (kk, c)
                } else {
                    (kk, -&c)
                }
            })
            .collect();
        return canonical_from_sparse(m, half);
    }
    let plan = basis::plan(n);
    let mut out: Vec<(u32, Rational)> = Vec::with_capacity(raw.len());
    for (k, c) in raw {
        if c.is_zero() {
            continue;
        }
        if plan.allowed[k as usize] {
            out.push((k, c));
        } else {
            let neg = -&c;
            for &(j, s) in &plan.expand[k as usize] {
                out.push((j, if s > 0 { c.clone() } else { neg.clone() }));
            }
        }
    }
    out.sort_by_key(|(k, _)| *k);
    out.dedup_by(|(k, c), (kept, acc)| {
        let same = *k == *kept;
        if same {
            *acc += c;
        }
        same
    });
    out.retain(|(_, c)| !c.is_zero());
    minimize(n, out)
}

/// Canonical value of a dense coefficient vector indexed by exponent mod `n`.
fn canonical_from_dense(n: u32, dense: Vec<Rational>) -> Cyclo {
    if n % 4 == 2 {
        // ζ_{2m}^k = (-1)^k ζ_m^{k(m+1)/2} for odd m.
        let m = n / 2;
        let mut half = vec![Rational::ZERO; m as usize];
        for (k, c) in dense.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let kk = ((k as u64 * (m as u64 + 1) / 2) % m as u64) as usize;
            if k % 2 == 0 {
                half[kk] += &c;
            } else {
                half[kk] += &(-&c);
            }
        }
        return canonical_from_dense(m, half);
    }
    let plan = basis::plan(n);
    let mut out: Vec<Rational> = vec![Rational::ZERO; n as usize];
    for (k, c) in dense.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if plan.allowed[k] {
            out[k] += &c;
        } else {
            let neg = -&c;
            for &(j, s) in &plan.expand[k] {
                out[j as usize] += if s > 0 { &c } else { &neg };
            }
        }
    }
    let terms = out
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, c))
        .collect();
    minimize(n, terms)
}

/// Drops the conductor of canonical terms at `n` as far as the value allows.
fn minimize(n: u32, terms: Vec<(u32, Rational)>) -> Cyclo {
    if terms.is_empty() {
        return Cyclo::zero();
    }
    if n == 1 {
        return Cyclo { n, terms };
    }
    let plan = basis::plan(n);
    for f in &plan.factors {
        let p = f.p;
        if f.e >= 2 {
            if terms.iter().all(|(k, _)| k % p == 0) {
                let m = n / p;
                return canonical_from_sparse(m, terms.into_iter().map(|(k, c)| (k / p, c)).collect());
            }
        } else if p != 2 {
            // Value lies in Q(ζ_m), m = n/p, iff each class {k + b·m} carries
            // one coefficient on exactly p-1 members.
            let m = n / p;
            if !terms.len().is_multiple_of(p as usize - 1) {
                continue;
            }
            let mut by_class: Vec<(u32, &Rational)> = terms.iter().map(|(k, c)| (k % m, c)).collect();
            by_class.sort_by_key(|(r, _)| *r);
            let chunks = by_class.chunks(p as usize - 1);
            let ok = chunks.clone().all(|ch| ch.iter().all(|(r, c)| *r == ch[0].0 && *c == ch[0].1))
                && by_class.windows(p as usize).all(|w| w[0].0 != w[p as usize - 1].0);
            if ok {
                let reduced = chunks
                    .map(|ch| {
                        let r = ch[0].0;
                        let k0 = (0..p).map(|t| r + t * m).find(|k| k % p == 0).unwrap();
                        (k0 / p, -ch[0].1)
                    })
                    .collect();
                return canonical_from_sparse(m, reduced);
            }
        }
    }
    Cyclo { n, terms }
}

impl Default for Cyclo {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Self {
        Cyclo::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.n == rhs.n {
            return self.add_same(rhs);
        }
        let n = self.n.lcm(&rhs.n);
        if (self.terms.len() + rhs.terms.len()) * 4 <= n as usize {
            let raw = [self, rhs]
                .into_iter()
                .flat_map(|x| x.terms.iter().map(move |(k, c)| (k * (n / x.n), c.clone())))
                .collect();
            return canonical_from_sparse(n, raw);
        }
        let mut dense = vec![Rational::ZERO; n as usize];
        for x in [self, rhs] {
            let s = n / x.n;
            for (k, c) in &x.terms {
                dense[(k * s) as usize] += c;
            }
        }
        canonical_from_dense(n, dense)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.is_zero() || rhs.is_zero() {
            return Cyclo::zero();
        }
        if let Some(r) = self.as_rational() {
            return rhs.mul_rational(&r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.mul_rational(&r);
        }
        let n = self.n.lcm(&rhs.n);
        let (s1, s2) = (n / self.n, n / rhs.n);
        if self.terms.len() * rhs.terms.len() <= n as usize {
            let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
            for (k1, c1) in &self.terms {
                for (k2, c2) in &rhs.terms {
                    raw.push(((k1 * s1 + k2 * s2) % n, c1 * c2));
                }
            }
            return canonical_from_sparse(n, raw);
        }
        let mut dense = vec![Rational::ZERO; n as usize];
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let k = ((k1 * s1 + k2 * s2) % n) as usize;
                dense[k] += &(c1 * c2);
            }
        }
        canonical_from_dense(n, dense)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl<'a> Div<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    /// Panics on division by zero; see [`Cyclo::checked_div`].
    fn div(self, rhs: &Cyclo) -> Cyclo {
        self.checked_div(rhs).expect("division by zero cyclotomic")
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Cyclo {
    fn product<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::one(), |a, b| &a * &b)
    }
}

/// Parses the literal grammar, e.g. `-1/2*E(3)^2 + E(7)`.
pub fn parse_cyclo(text: &str) -> Result<Cyclo> {
    parse::parse(text)
}

/// Canonical text form: ascending exponents, bare rationals, `1*` elided.
pub fn format_cyclo(x: &Cyclo) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in x.terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if x.n == 1 {
            out.push_str(&a.to_string());
            continue;
        }
        if !a.is_one() {
            out.push_str(&a.to_string());
            out.push('*');
        }
        out.push_str(&format!("E({})", x.n));
        if *k != 1 {
            out.push_str(&format!("^{k}"));
        }
    }
    out
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cyclo(self))
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({})", format_cyclo(self))
    }
}

impl FromStr for Cyclo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_cyclo(s)
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_cyclo(self))
    }
}

impl<'de> serde::Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_cyclo(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::zeta(n, k)
    }

    #[test]
    fn roots_reduce_to_rationals() {
        assert_eq!(z(2, 1), Cyclo::from_int(-1));
        assert_eq!(z(1, 0), Cyclo::one());
        assert_eq!(z(4, 2), Cyclo::from_int(-1));
        assert_eq!(z(6, 3), Cyclo::from_int(-1));
        assert!(Cyclo::from_root(0, 1).is_err());
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(10, 1).conductor(), 5);
    }

    #[test]
    fn small_identities() {
        let s: Cyclo = (1..5).map(|k| z(5, k)).sum();
        assert_eq!(s, Cyclo::from_int(-1));
        assert_eq!(&z(3, 1) * &z(3, 2), Cyclo::one());
        assert_eq!(&z(8, 1) * &z(8, 1), Cyclo::i());
        assert_eq!(&Cyclo::phi() * &Cyclo::phi_bar(), Cyclo::from_int(-1));
        let r2 = &z(8, 1) + &z(8, 7);
        assert_eq!(&r2 * &r2, Cyclo::from_int(2));
        assert_eq!(r2, Cyclo::sqrt_int(2));
    }

    #[test]
    fn square_roots() {
        for m in [2i64, 3, 5, 6, 7, 8, 12, 13, -1, -3] {
            let r = Cyclo::sqrt_int(m);
            assert_eq!(&r * &r, Cyclo::from_int(m), "m = {m}");
            if m > 0 {
                assert_eq!(r.is_positive_real(), Some(true), "m = {m}");
            }
        }
        assert_eq!(Cyclo::sqrt_int(5), &Cyclo::phi() * &Cyclo::from_int(2) - Cyclo::one());
    }

    #[test]
    fn inverses() {
        assert_eq!(z(7, 3).inv().unwrap(), z(7, 4));
        assert_eq!(Cyclo::phi().inv().unwrap(), &Cyclo::phi() - &Cyclo::one());
        assert_eq!(Cyclo::zero().inv(), Err(Error::DivisionByZero));
        let x = parse_cyclo("E(7)^4 + E(7)^3 + 2").unwrap();
        assert_eq!(&x * &x.inv().unwrap(), Cyclo::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(5, 1).conj(), z(5, 4));
        assert_eq!(Cyclo::i().conj(), -Cyclo::i());
        let r2 = &z(8, 1) + &z(8, 7);
        assert_eq!(r2.conj(), r2);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_cyclo(&Cyclo::zero()), "0");
        assert_eq!(format_cyclo(&Cyclo::from_int(-1)), "-1");
        assert_eq!(format_cyclo(&z(3, 1)), "E(3)");
        assert_eq!(format_cyclo(&-z(3, 2)), "-E(3)^2");
        let x = parse_cyclo("-1/2*E(3)^2 + E(7)").unwrap();
        assert_eq!(parse_cyclo(&format_cyclo(&x)).unwrap(), x);
    }
}

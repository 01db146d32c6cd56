//! Certified numeric enclosures of cyclotomic values.
//!
//! All bounds are dyadic rationals. `π` comes from Machin's formula, `cos` and
//! `sin` from Taylor series at a dyadic midpoint with explicit remainder and
//! Lipschitz terms, so every box provably contains the exact value.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Cyclo, Rational};

/// An axis-aligned box in the complex plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re_lo: BigRational,
    pub re_hi: BigRational,
    pub im_lo: BigRational,
    pub im_hi: BigRational,
}

impl ComplexInterval {
    /// True when `other` lies entirely inside `self`.
    pub fn contains(&self, other: &ComplexInterval) -> bool {
        self.re_lo <= other.re_lo
            && other.re_hi <= self.re_hi
            && self.im_lo <= other.im_lo
            && other.im_hi <= self.im_hi
    }

    /// The larger of the two side lengths.
    pub fn width(&self) -> BigRational {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn midpoint(&self) -> (f64, f64) {
        let two = BigRational::from_integer(2.into());
        let re = (&self.re_lo + &self.re_hi) / &two;
        let im = (&self.im_lo + &self.im_hi) / &two;
        (
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

fn pow2(bits: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << bits)
}

fn floor_to(x: &BigRational, bits: u32) -> BigRational {
    let s = BigInt::one() << bits;
    let v = (x * BigRational::from_integer(s.clone())).floor().to_integer();
    BigRational::new(v, s)
}

fn ceil_to(x: &BigRational, bits: u32) -> BigRational {
    let s = BigInt::one() << bits;
    let v = (x * BigRational::from_integer(s.clone())).ceil().to_integer();
    BigRational::new(v, s)
}

/// Bounds on `atan(1/x)` from the alternating series, accurate to `2^-bits`.
fn atan_inv(x: i64, bits: u32) -> (BigRational, BigRational) {
    let eps = pow2(bits).recip();
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut pow = x.clone();
    let mut sum = BigRational::zero();
    let mut j: i64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * j + 1));
        if term < eps {
            // Remaining tail is bounded by this term and has its sign.
            return if j % 2 == 0 {
                (sum.clone(), sum + term)
            } else {
                (sum.clone() - term, sum)
            };
        }
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow *= &x2;
        j += 1;
    }
}

thread_local! {
    static PI: RefCell<HashMap<u32, (BigRational, BigRational)>> = RefCell::new(HashMap::new());
    static TRIG: RefCell<HashMap<(u32, u32, u32), [BigRational; 4]>> = RefCell::new(HashMap::new());
}

fn pi_bounds(bits: u32) -> (BigRational, BigRational) {
    if let Some(v) = PI.with(|c| c.borrow().get(&bits).cloned()) {
        return v;
    }
    let (a_lo, a_hi) = atan_inv(5, bits + 8);
    let (b_lo, b_hi) = atan_inv(239, bits + 8);
    let sixteen = BigRational::from_integer(16.into());
    let four = BigRational::from_integer(4.into());
    let lo = &sixteen * &a_lo - &four * &b_hi;
    let hi = &sixteen * &a_hi - &four * &b_lo;
    let v = (floor_to(&lo, bits + 2), ceil_to(&hi, bits + 2));
    PI.with(|c| c.borrow_mut().insert(bits, v.clone()));
    v
}

/// Taylor sums for cos and sin at `m` (|m| ≤ 4) with the truncation bound.
fn taylor(m: &BigRational, bits: u32) -> (BigRational, BigRational, BigRational) {
    let eps = pow2(bits).recip();
    let mut term = BigRational::one();
    let mut cos = BigRational::zero();
    let mut sin = BigRational::zero();
    let mut j: u32 = 0;
    let abs_m = m.abs();
    let mut abs_term = BigRational::one();
    loop {
        // Once j + 1 ≥ 2|m| the tail is at most twice the next term.
        if j > 7 && abs_term < eps {
            return (cos, sin, abs_term * BigRational::from_integer(2.into()));
        }
        match j % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        j += 1;
        let d = BigRational::from_integer(BigInt::from(j));
        term = term * m / &d;
        abs_term = abs_term * &abs_m / &d;
    }
}

/// Enclosures of cos and sin of `2πk/n`, each of width below `2^-(bits-2)`.
fn trig(n: u32, k: u32, bits: u32) -> [BigRational; 4] {
    if let Some(v) = TRIG.with(|c| c.borrow().get(&(n, k, bits)).cloned()) {
        return v;
    }
    let kk = if 2 * k <= n { k as i64 } else { k as i64 - n as i64 };
    let (p_lo, p_hi) = pi_bounds(bits + 6);
    let scale = BigRational::new(BigInt::from(2 * kk), BigInt::from(n));
    let (t_lo, t_hi) = if kk >= 0 {
        (&p_lo * &scale, &p_hi * &scale)
    } else {
        (&p_hi * &scale, &p_lo * &scale)
    };
    let two = BigRational::from_integer(2.into());
    let mid = floor_to(&((&t_lo + &t_hi) / &two), bits + 6);
    let lip = {
        let a = (&mid - &t_lo).abs();
        let b = (&t_hi - &mid).abs();
        if a > b {
            a
        } else {
            b
        }
    };
    let (c, s, rem) = taylor(&mid, bits + 6);
    let slack = rem + lip;
    let v = [
        floor_to(&(&c - &slack), bits + 4),
        ceil_to(&(&c + &slack), bits + 4),
        floor_to(&(&s - &slack), bits + 4),
        ceil_to(&(&s + &slack), bits + 4),
    ];
    TRIG.with(|cache| cache.borrow_mut().insert((n, k, bits), v.clone()));
    v
}

fn bit_length(r: &Rational) -> u32 {
    let n = r.numer().abs();
    let d = r.denom();
    let q = (n / d) + 1u32;
    q.bits() as u32
}

pub(crate) fn enclose(x: &Cyclo, digits: u32) -> ComplexInterval {
    if let Some(r) = x.as_rational() {
        let v = r.to_big();
        return ComplexInterval {
            re_lo: v.clone(),
            re_hi: v,
            im_lo: BigRational::zero(),
            im_hi: BigRational::zero(),
        };
    }
    let coeff_bits: u32 = x.terms().iter().map(|(_, c)| bit_length(c)).max().unwrap_or(1)
        + (usize::BITS - x.terms().len().leading_zeros());
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + coeff_bits + 4;
    let mut b = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    for (k, c) in x.terms() {
        let t = trig(x.conductor(), *k, bits);
        let c = c.to_big();
        let (re, im) = if c.is_negative() {
            ((&t[1], &t[0]), (&t[3], &t[2]))
        } else {
            ((&t[0], &t[1]), (&t[2], &t[3]))
        };
        b[0] += &c * re.0;
        b[1] += &c * re.1;
        b[2] += &c * im.0;
        b[3] += &c * im.1;
    }
    let [re_lo, re_hi, im_lo, im_hi] = b;
    ComplexInterval {
        re_lo: floor_to(&re_lo, bits + 2),
        re_hi: ceil_to(&re_hi, bits + 2),
        im_lo: floor_to(&im_lo, bits + 2),
        im_hi: ceil_to(&im_hi, bits + 2),
    }
}

/// Rounds `q` to `digits` decimals, ties to even; returns the scaled integer.
fn round_half_even(q: &BigRational, digits: u32) -> BigInt {
    let s = q * BigRational::from_integer(BigInt::from(10u32).pow(digits));
    let f = s.floor();
    let frac = &s - &f;
    let half = BigRational::new(1.into(), 2.into());
    let f = f.to_integer();
    if frac > half || (frac == half && f.is_odd()) {
        f + 1
    } else {
        f
    }
}

fn render(scaled: &BigInt, digits: u32, strip: bool) -> String {
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let d = digits as usize;
    let s = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - d);
    let frac = if strip { frac.trim_end_matches('0') } else { frac };
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(int);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}

/// Decimal string of a real cyclotomic value.
fn format_real(x: &Cyclo, digits: u32) -> String {
    if let Some(r) = x.as_rational() {
        return render(&round_half_even(&r.to_big(), digits), digits, true);
    }
    let mut extra = 4;
    loop {
        let b = enclose(x, digits + extra);
        let lo = round_half_even(&b.re_lo, digits);
        let hi = round_half_even(&b.re_hi, digits);
        if lo == hi {
            return render(&lo, digits, false);
        }
        extra *= 2;
    }
}

pub(crate) fn format_numeric(x: &Cyclo, digits: u32) -> String {
    let half = Rational::new(1, 2);
    let conj = x.conj();
    let re = (x + &conj).mul_rational(&half);
    // (x - conj x) / 2i = -i (x - conj x) / 2
    let im = (&(x - &conj) * &-Cyclo::i()).mul_rational(&half);
    let re_s = format_real(&re, digits);
    if im.is_zero() {
        return re_s;
    }
    let im_s = format_real(&im, digits);
    let (im_neg, im_abs) = match im_s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, im_s),
    };
    let im_abs = if im_abs == "1" {
        "i".to_string()
    } else {
        format!("{im_abs}i")
    };
    if re.is_zero() {
        if im_neg {
            format!("-{im_abs}")
        } else {
            im_abs
        }
    } else {
        format!("{re_s} {} {im_abs}", if im_neg { '-' } else { '+' })
    }
}

//! Reduction of exponent vectors onto a fixed basis of Q(ζ_N).
//!
//! Write `N = ∏ p^e` and decompose an exponent `k` into its CRT components
//! `j_p = k · (N/p^e)^{-1} mod p^e`, so that `ζ_N^k = ∏ ζ_{p^e}^{j_p}`. A
//! power is a basis element when every component is allowed:
//!
//! * odd `p`: `j_p ≥ p^{e-1}`, using `Σ_{b<p} ζ_{p^e}^{j + b·p^{e-1}} = 0`;
//! * `p = 2`: `j_2 < 2^{e-1}`, using `ζ_{2^e}^{j + 2^{e-1}} = -ζ_{2^e}^j`.
//!
//! Adding `N/p` to `k` moves only the `p` component (by `p^{e-1}`), so each
//! relation fixes one prime without disturbing the others.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Factor {
    pub p: u32,
    pub e: u32,
    pub pe: u32,
    cp: u64,
}

pub(crate) struct Plan {
    pub factors: Vec<Factor>,
    pub allowed: Vec<bool>,
    /// For each forbidden exponent, its ±1 expansion over allowed exponents.
    pub expand: Vec<Vec<(u32, i8)>>,
}

pub(crate) fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} not invertible mod {m}");
    t.rem_euclid(m as i64) as u64
}

impl Plan {
    fn new(n: u32) -> Plan {
        debug_assert!(n % 4 != 2, "conductor {n} is 2 mod 4");
        let factors: Vec<Factor> = factorize(n)
            .into_iter()
            .map(|(p, e)| {
                let pe = p.pow(e);
                Factor {
                    p,
                    e,
                    pe,
                    cp: inverse_mod((n / pe) as u64, pe as u64),
                }
            })
            .collect();
        let first_bad = |k: u32| -> Option<usize> {
            factors.iter().position(|f| {
                let j = (k as u64 * f.cp % f.pe as u64) as u32;
                let low = f.pe / f.p;
                if f.p == 2 {
                    j >= low
                } else {
                    j < low
                }
            })
        };
        let allowed: Vec<bool> = (0..n).map(|k| first_bad(k).is_none()).collect();
        let mut expand: Vec<Vec<(u32, i8)>> = vec![Vec::new(); n as usize];
        // Process exponents in an order where each relation only refers to
        // already-expanded or allowed exponents: resolve recursively with memo.
        fn resolve(
            k: u32,
            n: u32,
            factors: &[Factor],
            allowed: &[bool],
            first_bad: &dyn Fn(u32) -> Option<usize>,
            memo: &mut Vec<Option<Vec<(u32, i8)>>>,
        ) -> Vec<(u32, i8)> {
            if allowed[k as usize] {
                return vec![(k, 1)];
            }
            if let Some(v) = &memo[k as usize] {
                return v.clone();
            }
            let f = factors[first_bad(k).expect("forbidden exponent has a bad prime")];
            let step = n / f.p;
            let mut acc: BTreeMap<u32, i32> = BTreeMap::new();
            let count = if f.p == 2 { 1 } else { f.p - 1 };
            for b in 1..=count {
                let kk = (k + b * step) % n;
                for (j, s) in resolve(kk, n, factors, allowed, first_bad, memo) {
                    *acc.entry(j).or_insert(0) -= s as i32;
                }
            }
            let v: Vec<(u32, i8)> = acc
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|(j, c)| (j, c as i8))
                .collect();
            memo[k as usize] = Some(v.clone());
            v
        }
        let mut memo = vec![None; n as usize];
        for k in 0..n {
            if !allowed[k as usize] {
                expand[k as usize] = resolve(k, n, &factors, &allowed, &first_bad, &mut memo);
            }
        }
        Plan {
            factors,
            allowed,
            expand,
        }
    }
}

thread_local! {
    static PLANS: RefCell<Vec<Option<Rc<Plan>>>> = const { RefCell::new(Vec::new()) };
}

pub(crate) fn plan(n: u32) -> Rc<Plan> {
    PLANS.with(|cell| {
        let i = n as usize;
        if let Some(Some(p)) = cell.borrow().get(i) {
            return p.clone();
        }
        let p = Rc::new(Plan::new(n));
        let mut plans = cell.borrow_mut();
        if plans.len() <= i {
            plans.resize(i + 1, None);
        }
        plans[i] = Some(p.clone());
        p
    })
}

#[cfg(test)]
fn euler_phi(n: u32) -> u32 {
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

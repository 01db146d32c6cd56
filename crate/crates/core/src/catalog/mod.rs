//! Known categories built from closed formulas, plus finite solvers for their
//! braidings and pivotal structures.
//!
//! Every constructor places labels in the order used by the bundled rings
//! (sorted by Frobenius-Perron dimension, then self-duality), so census
//! tables apply directly.

mod solve;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclo;
use crate::data;
use crate::error::{Error, Result};
use crate::ring::FusionRing;
use crate::skeleton::{admissible_f_indices, FIndex, SkeletalData};

pub use solve::{
    pivotal_order_bound, solve_braidings, solve_braidings_with_budget, solve_pivotals,
    solve_pivotals_with, DEFAULT_BRAID_ORDER, DEFAULT_BUDGET,
};

/// Exponents `ā` of the labels of a cyclic group ring with respect to the
/// smallest label of full order, or `None` if the labels are not all
/// invertible or the group is not cyclic.
fn cyclic_exponents(ring: &FusionRing, labels: &[usize]) -> Option<Vec<u32>> {
    let n = labels.len();
    let order = |g: usize| {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            let next = ring.fuse(x, g);
            if next.len() != 1 || k > n {
                return None;
            }
            x = next[0];
            k += 1;
        }
        Some(k)
    };
    let g = *labels.iter().find(|&&g| order(g) == Some(n))?;
    let mut exp = vec![0u32; ring.rank()];
    let mut x = 1;
    for k in 0..n as u32 {
        exp[x - 1] = k;
        x = ring.fuse(x, g)[0];
    }
    Some(exp)
}

fn pointed_ring(n: u32) -> Result<FusionRing> {
    let name = format!("z{n}");
    match n {
        1 => Ok(data::ring("trivial").expect("bundled")),
        2..=7 => Ok(data::ring(&name).expect("bundled")),
        _ => Err(Error::InvalidArgument(format!(
            "pointed cyclic categories are available for n = 1..7, not {n}"
        ))),
    }
}

fn build(ring: FusionRing, mut value: impl FnMut(&FIndex) -> Cyclo) -> Result<SkeletalData> {
    let f: Vec<(FIndex, Cyclo)> = admissible_f_indices(&ring)
        .into_iter()
        .map(|i| {
            let v = value(&i);
            (i, v)
        })
        .collect();
    SkeletalData::new(ring, f, None, None)
}

/// `Vec_{Z_n}^ω` with `ω(a,b,c) = ζ_n^{q·ā·⌊(b̄+c̄)/n⌋}`.
pub fn build_pointed_cyclic(n: u32, q: u32) -> Result<SkeletalData> {
    let ring = pointed_ring(n)?;
    if q >= n.max(1) {
        return Err(Error::InvalidArgument(format!("cocycle class q must lie in 0..{n}")));
    }
    let labels: Vec<usize> = ring.labels().collect();
    let exp = cyclic_exponents(&ring, &labels).expect("bundled ring is cyclic");
    build(ring, |&[a, b, c, ..]| {
        let (x, y, z) = (exp[a - 1], exp[b - 1], exp[c - 1]);
        Cyclo::zeta(n, (q * x * ((y + z) / n)) as i64)
    })
}

/// Fibonacci data with `[F_2^{222}] = [[1/φ, 1], [1/φ, −1/φ]]`. Class 1 has
/// `[F_2^{222}]_2^2 = φ̄`; class 2 is its Galois conjugate.
pub fn build_fib(f_class: u32) -> Result<SkeletalData> {
    let phi = match f_class {
        1 => Cyclo::phi(),
        2 => Cyclo::phi_bar(),
        _ => return Err(Error::InvalidArgument("Fibonacci F-class must be 1 or 2".into())),
    };
    let inv = phi.inv()?;
    let ring = data::ring("fib").expect("bundled");
    build(ring, |i| match *i {
        [2, 2, 2, 2, 1, 1] | [2, 2, 2, 2, 2, 1] => inv.clone(),
        [2, 2, 2, 2, 2, 2] => -&inv,
        _ => Cyclo::one(),
    })
}

/// Ising data (labels 1, ψ = 2, σ = 3) with `[F_σ^{σσσ}] = κ/√2 [[1,1],[1,−1]]`
/// and `[F_ψ^{σψσ}]_σ^σ = [F_σ^{ψσψ}]_σ^σ = −1`; class 1 is `κ = 1`,
/// class 2 is `κ = −1`.
pub fn build_ising(f_class: u32) -> Result<SkeletalData> {
    let kappa = match f_class {
        1 => 1,
        2 => -1,
        _ => return Err(Error::InvalidArgument("Ising F-class must be 1 or 2".into())),
    };
    let s = Cyclo::from_int(kappa).checked_div(&Cyclo::sqrt_int(2))?;
    let ring = data::ring("ising").expect("bundled");
    build(ring, |i| match *i {
        [3, 3, 3, 3, 2, 2] => -&s,
        [3, 3, 3, 3, _, _] => s.clone(),
        [3, 2, 3, 2, 3, 3] | [2, 3, 2, 3, 3, 3] => Cyclo::from_int(-1),
        _ => Cyclo::one(),
    })
}

fn ty_ring(n: u32) -> Result<FusionRing> {
    match n {
        3 => Ok(data::ring("ty_z3").expect("bundled")),
        4 => Ok(data::ring("ty_z4").expect("bundled")),
        5 => Ok(data::ring("ty_z5").expect("bundled")),
        _ => Err(Error::InvalidArgument(format!(
            "Tambara-Yamagami categories are available for Z_3, Z_4, Z_5, not Z_{n}"
        ))),
    }
}

/// `TY(Z_n, χ, τ)` with `χ(a,b) = ζ_n^{k·ā·b̄}` for `k` coprime to `n` and
/// `τ = sign/√n`. The non-invertible label is the last one.
pub fn build_ty(n: u32, bichar: u32, sign: i32) -> Result<SkeletalData> {
    let ring = ty_ring(n)?;
    if bichar == 0 || bichar >= n || num_integer::gcd(bichar, n) != 1 {
        return Err(Error::InvalidArgument(format!(
            "bicharacter index must be a unit modulo {n}"
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument("sign must be +1 or -1".into()));
    }
    let m = ring.rank();
    let group: Vec<usize> = (1..m).collect();
    let exp = cyclic_exponents(&ring, &group).expect("group part is cyclic");
    let chi = |a: usize, b: usize| Cyclo::zeta(n, (bichar * exp[a - 1] * exp[b - 1]) as i64);
    let tau = Cyclo::from_int(sign as i64).checked_div(&Cyclo::sqrt_int(n as i64))?;
    build(ring, |&[a, b, c, d, e, f]| {
        if a != m && b == m && c != m {
            chi(a, c)
        } else if a == m && b != m && c == m && e == m && f == m {
            chi(b, d)
        } else if a == m && b == m && c == m {
            &tau * &chi(e, f).inv().expect("nonzero")
        } else {
            Cyclo::one()
        }
    })
}

/// Family and parameters of a catalog datum, plus optional 1-based indices
/// into the solved braidings and pivotal structures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivotal: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Pointed { n: u32, q: u32 },
    Fib { class: u32 },
    Ising { class: u32 },
    Ty { n: u32, bichar: u32, sign: i32 },
}

impl Family {
    /// F-symbols only.
    pub fn build(&self) -> Result<SkeletalData> {
        match *self {
            Family::Pointed { n, q } => build_pointed_cyclic(n, q),
            Family::Fib { class } => build_fib(class),
            Family::Ising { class } => build_ising(class),
            Family::Ty { n, bichar, sign } => build_ty(n, bichar, sign),
        }
    }

    /// Every F-class of the family on the given bundled ring name.
    pub fn all_for_ring(name: &str) -> Result<Vec<Family>> {
        let units = |n: u32| (1..n).filter(move |&k| num_integer::gcd(k, n) == 1);
        Ok(match name {
            "trivial" => vec![Family::Pointed { n: 1, q: 0 }],
            "z2" | "z3" | "z4" | "z5" | "z6" | "z7" => {
                let n: u32 = name[1..].parse().expect("digit");
                (0..n).map(|q| Family::Pointed { n, q }).collect()
            }
            "fib" => vec![Family::Fib { class: 1 }, Family::Fib { class: 2 }],
            "ising" => vec![Family::Ising { class: 1 }, Family::Ising { class: 2 }],
            "ty_z3" | "ty_z4" | "ty_z5" => {
                let n: u32 = name[4..].parse().expect("digit");
                units(n)
                    .flat_map(|k| [1, -1].map(|sign| Family::Ty { n, bichar: k, sign }))
                    .collect()
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "no catalog family builds the ring `{other}`"
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pointed { n, q } => write!(f, "pointed(n={n}, q={q})"),
            Family::Fib { class } => write!(f, "fib(class={class})"),
            Family::Ising { class } => write!(f, "ising(class={class})"),
            Family::Ty { n, bichar, sign } => write!(f, "ty(n={n}, bichar={bichar}, sign={sign})"),
        }
    }
}

impl CatalogSpec {
    pub fn new(family: Family) -> Self {
        CatalogSpec {
            family,
            braiding: None,
            pivotal: None,
        }
    }

    /// Builds the datum, attaching the requested braiding and pivotal
    /// structure from the solvers.
    pub fn build(&self, max_order: u32) -> Result<SkeletalData> {
        let mut d = self.family.build()?;
        if let Some(k) = self.braiding {
            let rs = solve_braidings(&d, max_order)?;
            let r = pick(rs, k, "braiding")?;
            d = d.with_braiding(Some(r))?;
        }
        if let Some(k) = self.pivotal {
            let ps = solve_pivotals(&d)?;
            let p = pick(ps, k, "pivotal structure")?;
            d = d.with_pivotal(Some(p))?;
        }
        Ok(d)
    }
}

fn pick<T>(mut xs: Vec<T>, k: usize, what: &str) -> Result<T> {
    if k == 0 || k > xs.len() {
        return Err(Error::InvalidArgument(format!(
            "{what} {k} requested but {} exist",
            xs.len()
        )));
    }
    Ok(xs.swap_remove(k - 1))
}

/// Every combination of F-class, braiding (or none, when the F-class admits
/// no braiding) and pivotal structure the catalog builds on a bundled ring.
pub fn enumerate_ring(name: &str, max_order: u32) -> Result<Vec<(CatalogSpec, SkeletalData)>> {
    let mut out = Vec::new();
    for fam in Family::all_for_ring(name)? {
        let base = fam.build()?;
        let braidings = solve_braidings(&base, max_order)?;
        let pivotals = solve_pivotals(&base)?;
        let rs: Vec<Option<(usize, BTreeMap<_, _>)>> = if braidings.is_empty() {
            vec![None]
        } else {
            braidings.into_iter().enumerate().map(|(i, r)| Some((i + 1, r))).collect()
        };
        for r in &rs {
            for (j, p) in pivotals.iter().enumerate() {
                let data = base
                    .with_braiding(r.as_ref().map(|x| x.1.clone()))?
                    .with_pivotal(Some(p.clone()))?;
                let spec = CatalogSpec {
                    family: fam,
                    braiding: r.as_ref().map(|x| x.0),
                    pivotal: Some(j + 1),
                };
                out.push((spec, data));
            }
        }
    }
    Ok(out)
}

use serde::Serialize;

use super::checks::{check_pentagon, hexagon_report, pivotal_report};
use super::SkeletalData;
use crate::cyclo::{conj_transpose, det, identity, mat_inverse, mat_mul, Cyclo, Matrix};
use crate::error::{Error, Result};

/// Unitarity can only be judged in the gauge the data was given in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Unitarity {
    YesInGivenGauge,
    NoInGivenGauge,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub pivotal: bool,
    pub braided: bool,
    pub spherical: bool,
    pub ribbon: bool,
    pub modular: bool,
    pub unitary: Unitarity,
}

/// Left quantum dimensions `d_a = p_a / [F_{a*}^{a* a a*}]_1^1`, indexed by `a - 1`.
pub fn quantum_dims(data: &SkeletalData) -> Result<Vec<Cyclo>> {
    let p = data
        .pivotal()
        .ok_or_else(|| Error::NotApplicable("data has no pivotal coefficients".into()))?;
    let ring = data.ring();
    ring.labels()
        .map(|a| {
            let ad = ring.dual(a);
            let den = data.f(ad, a, ad, ad, 1, 1).cloned().unwrap_or_default();
            p[a - 1].checked_div(&den).map_err(|_| {
                Error::InvalidData(format!("[F_{ad}^{{{ad},{a},{ad}}}]_1^1 is zero"))
            })
        })
        .collect()
}

/// `d_{a*} = d_a` for every label.
pub fn is_spherical(data: &SkeletalData) -> Result<bool> {
    let d = quantum_dims(data)?;
    let ring = data.ring();
    Ok(ring.labels().all(|a| d[a - 1] == d[ring.dual(a) - 1]))
}

/// The matrix `Ŝ` with `S[a-1][b-1] = Σ_c [F̃_a^{a b* b}]_c^1 R_c^{b* a} R_c^{a b*} [F_a^{a b* b}]_1^c`.
pub fn s_matrix(data: &SkeletalData) -> Result<Matrix> {
    if !data.has_braiding() {
        return Err(Error::NotApplicable("Ŝ needs R-symbols".into()));
    }
    if !is_spherical(data)? {
        return Err(Error::NotApplicable("Ŝ needs a spherical structure".into()));
    }
    let ring = data.ring();
    let r = |a: usize, b: usize, c: usize| data.r(a, b, c).cloned().unwrap_or_default();
    let mut s = vec![vec![Cyclo::zero(); ring.rank()]; ring.rank()];
    for a in ring.labels() {
        for b in ring.labels() {
            let bd = ring.dual(b);
            let (es, fs) = data.block_labels(a, bd, b, a);
            let m = data.f_block(a, bd, b, a);
            let minv = mat_inverse(&m)?;
            let one = fs.iter().position(|&f| f == 1).expect("1 ∈ b*⊗b");
            let mut acc = Cyclo::zero();
            for (ci, &c) in es.iter().enumerate() {
                let t = &(&(&minv[one][ci] * &r(bd, a, c)) * &r(a, bd, c)) * &m[ci][one];
                acc = &acc + &t;
            }
            s[a - 1][b - 1] = acc;
        }
    }
    Ok(s)
}

fn f_blocks_unitary(data: &SkeletalData) -> bool {
    data.blocks().into_iter().all(|[a, b, c, d]| {
        let m = data.f_block(a, b, c, d);
        mat_mul(&m, &conj_transpose(&m)) == identity(m.len())
    })
}

/// Property flags derived from the data and the outcome of its checks.
pub fn classify_properties(data: &SkeletalData) -> PropertyFlags {
    let pentagon = check_pentagon(data).pass;
    classify_given_pentagon(data, pentagon)
}

/// As [`classify_properties`], reusing a known pentagon verdict.
pub fn classify_given_pentagon(data: &SkeletalData, pentagon: bool) -> PropertyFlags {
    let pivotal = pentagon
        && data.pivotal().is_some()
        && pivotal_report(data).map(|r| r.pass).unwrap_or(false)
        && quantum_dims(data).is_ok();
    let braided = pentagon
        && data.has_braiding()
        && hexagon_report(data).map(|r| r.pass).unwrap_or(false);
    let spherical = pivotal && is_spherical(data).unwrap_or(false);
    let ribbon = spherical && braided;
    let modular = ribbon
        && s_matrix(data)
            .and_then(|s| det(&s))
            .map(|d| !d.is_zero())
            .unwrap_or(false);
    let unitary = if !pivotal {
        Unitarity::NotApplicable
    } else {
        let dims_positive = quantum_dims(data)
            .map(|d| d.iter().all(|x| x.is_positive_real() == Some(true)))
            .unwrap_or(false);
        let r_unitary = !braided
            || data
                .r_symbols()
                .is_some_and(|r| r.values().all(|v| (v * &v.conj()).is_one()));
        if spherical && dims_positive && r_unitary && f_blocks_unitary(data) {
            Unitarity::YesInGivenGauge
        } else {
            Unitarity::NoInGivenGauge
        }
    };
    PropertyFlags {
        pivotal,
        braided,
        spherical,
        ribbon,
        modular,
        unitary,
    }
}

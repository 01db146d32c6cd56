use std::collections::BTreeMap;

use serde::Serialize;

use super::{RIndex, SkeletalData};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

const MAX_STORED: usize = 200;

/// One failing equation instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub equation: String,
    pub indices: Vec<usize>,
    pub lhs: Cyclo,
    pub rhs: Cyclo,
}

/// Outcome of one check. At most a bounded number of counterexamples is
/// stored; `failures` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub pass: bool,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    fn new(check: &str) -> Self {
        VerificationReport {
            check: check.into(),
            pass: true,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn compare(&mut self, equation: &str, indices: &[usize], lhs: Cyclo, rhs: Cyclo) {
        if lhs != rhs {
            self.fail(equation, indices, lhs, rhs);
        }
    }

    fn fail(&mut self, equation: &str, indices: &[usize], lhs: Cyclo, rhs: Cyclo) {
        self.pass = false;
        self.failures += 1;
        if self.counterexamples.len() < MAX_STORED {
            self.counterexamples.push(Counterexample {
                equation: equation.into(),
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    fn finish(mut self) -> Self {
        self.counterexamples
            .sort_by(|x, y| (&x.equation, &x.indices).cmp(&(&y.equation, &y.indices)));
        self
    }
}

fn prod(xs: &[Option<&Cyclo>]) -> Cyclo {
    let mut acc = Cyclo::one();
    for x in xs {
        match x {
            Some(v) if !v.is_zero() => acc = &acc * v,
            _ => return Cyclo::zero(),
        }
    }
    acc
}

/// Vacuum normalization: every F-symbol with a vacuum upper label equals 1,
/// `[F_a^{a a* a}]_1^1 ≠ 0`, and vacuum R-symbols equal 1.
pub fn check_vacuum(data: &SkeletalData) -> VerificationReport {
    let mut rep = VerificationReport::new("vacuum");
    let one = Cyclo::one();
    for (i, v) in data.f_table().iter() {
        if (i[0] == 1 || i[1] == 1 || i[2] == 1) && *v != one {
            rep.fail("vacuum F", i, v.clone(), one.clone());
        }
    }
    let ring = data.ring();
    for a in ring.labels() {
        let ad = ring.dual(a);
        let v = data.f(a, ad, a, a, 1, 1).cloned().unwrap_or_default();
        if v.is_zero() {
            rep.fail("nondegeneracy", &[a, ad, a, a, 1, 1], v, Cyclo::zero());
        }
    }
    if let Some(r) = data.r_symbols() {
        for (i, v) in r {
            if (i[0] == 1 || i[1] == 1) && *v != one {
                rep.fail("vacuum R", i, v.clone(), one.clone());
            }
        }
    }
    rep.finish()
}

/// Every pentagon instance, with inadmissible symbols read as 0.
/// Counterexample indices are `[a, b, c, d, e, f, g, k, l]`.
pub fn check_pentagon(data: &SkeletalData) -> VerificationReport {
    let mut rep = VerificationReport::new("pentagon");
    let ring = data.ring();
    for a in ring.labels() {
        for b in ring.labels() {
            let bc_cache: Vec<&[usize]> = ring.labels().map(|c| ring.fuse(b, c)).collect();
            for c in ring.labels() {
                for d in ring.labels() {
                    for &f in ring.fuse(a, b) {
                        for &g in ring.fuse(f, c) {
                            for &e in ring.fuse(g, d) {
                                for &l in ring.fuse(c, d) {
                                    for &k in ring.fuse(b, l) {
                                        if !ring.n(a, k, e) {
                                            continue;
                                        }
                                        let lhs = prod(&[
                                            data.f(f, c, d, e, g, l),
                                            data.f(a, b, l, e, f, k),
                                        ]);
                                        let mut rhs = Cyclo::zero();
                                        for &h in bc_cache[c - 1] {
                                            let t = prod(&[
                                                data.f(a, b, c, g, f, h),
                                                data.f(a, h, d, e, g, k),
                                                data.f(b, c, d, k, h, l),
                                            ]);
                                            if !t.is_zero() {
                                                rhs = &rhs + &t;
                                            }
                                        }
                                        rep.compare(
                                            "pentagon",
                                            &[a, b, c, d, e, f, g, k, l],
                                            lhs,
                                            rhs,
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep.finish()
}

/// Both hexagon families. Refuses unless R-symbols are present and the
/// pentagon equations hold.
pub fn check_hexagon(data: &SkeletalData) -> Result<VerificationReport> {
    if !data.has_braiding() {
        return Err(Error::NotApplicable("data has no R-symbols".into()));
    }
    if !check_pentagon(data).pass {
        return Err(Error::NotApplicable(
            "hexagon equations presuppose a pentagon solution".into(),
        ));
    }
    hexagon_report(data)
}

/// Hexagon evaluation without the pentagon prerequisite.
/// Counterexample indices are `[a, b, c, d, e, g]`.
pub fn hexagon_report(data: &SkeletalData) -> Result<VerificationReport> {
    let r = data
        .r_symbols()
        .ok_or_else(|| Error::NotApplicable("data has no R-symbols".into()))?;
    let rinv: BTreeMap<RIndex, Cyclo> = r
        .iter()
        .map(|(i, v)| Ok((*i, v.inv()?)))
        .collect::<Result<_>>()?;
    let mut rep = VerificationReport::new("hexagon");
    let ring = data.ring();
    let rv = |a: usize, b: usize, c: usize| r.get(&[a, b, c]);
    let ri = |a: usize, b: usize, c: usize| rinv.get(&[a, b, c]);
    for a in ring.labels() {
        for b in ring.labels() {
            for c in ring.labels() {
                for &e in ring.fuse(a, c) {
                    for &d in ring.fuse(e, b) {
                        for &g in ring.fuse(c, b) {
                            if !ring.n(a, g, d) {
                                continue;
                            }
                            let fm = data.f(a, c, b, d, e, g);
                            let lhs = prod(&[rv(c, a, e), fm, rv(c, b, g)]);
                            let lhs_inv = prod(&[ri(a, c, e), fm, ri(b, c, g)]);
                            let mut rhs = Cyclo::zero();
                            let mut rhs_inv = Cyclo::zero();
                            for &f in ring.fuse(a, b) {
                                let x = data.f(c, a, b, d, e, f);
                                let y = data.f(a, b, c, d, f, g);
                                rhs = &rhs + &prod(&[x, rv(c, f, d), y]);
                                rhs_inv = &rhs_inv + &prod(&[x, ri(f, c, d), y]);
                            }
                            let idx = [a, b, c, d, e, g];
                            rep.compare("hexagon", &idx, lhs, rhs);
                            rep.compare("inverse hexagon", &idx, lhs_inv, rhs_inv);
                        }
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}

/// `p_1 = 1`, `p_a p_{a*} = 1`, and for every `c ∈ a⊗b`
/// `p_a p_b / p_c = [F_1^{a b c*}]_{a*}^{c} [F_1^{b c* a}]_{b*}^{a*} [F_1^{c* a b}]_{c}^{b*}`.
pub fn check_pivotal(data: &SkeletalData) -> Result<VerificationReport> {
    if data.pivotal().is_none() {
        return Err(Error::NotApplicable("data has no pivotal coefficients".into()));
    }
    if !check_pentagon(data).pass {
        return Err(Error::NotApplicable(
            "pivotal equations presuppose a pentagon solution".into(),
        ));
    }
    pivotal_report(data)
}

/// Pivotal evaluation without the pentagon prerequisite.
pub fn pivotal_report(data: &SkeletalData) -> Result<VerificationReport> {
    let p = data
        .pivotal()
        .ok_or_else(|| Error::NotApplicable("data has no pivotal coefficients".into()))?;
    let mut rep = VerificationReport::new("pivotal");
    let ring = data.ring();
    let pv = |a: usize| &p[a - 1];
    rep.compare("unit", &[1], pv(1).clone(), Cyclo::one());
    for a in ring.labels() {
        let ad = ring.dual(a);
        rep.compare("dual", &[a], pv(a) * pv(ad), Cyclo::one());
    }
    for a in ring.labels() {
        for b in ring.labels() {
            for &c in ring.fuse(a, b) {
                let (ad, bd, cd) = (ring.dual(a), ring.dual(b), ring.dual(c));
                let lhs = (pv(a) * pv(b)).checked_div(pv(c))?;
                let rhs = prod(&[
                    data.f(a, b, cd, 1, c, ad),
                    data.f(b, cd, a, 1, ad, bd),
                    data.f(cd, a, b, 1, bd, c),
                ]);
                rep.compare("pivotal", &[a, b, c], lhs, rhs);
            }
        }
    }
    Ok(rep.finish())
}

/// Vacuum, pentagon, and (when present and applicable) hexagon and pivotal.
pub fn verify_all(data: &SkeletalData) -> Vec<VerificationReport> {
    let mut out = vec![check_vacuum(data)];
    let pent = check_pentagon(data);
    let ok = pent.pass;
    out.push(pent);
    if ok {
        if data.has_braiding() {
            out.push(hexagon_report(data).expect("R-symbols present"));
        }
        if data.pivotal().is_some() {
            out.push(pivotal_report(data).expect("pivotal present"));
        }
    }
    out
}

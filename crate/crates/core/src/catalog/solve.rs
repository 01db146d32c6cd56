//! Finite searches for braidings and pivotal structures.
//!
//! Every unknown is a root of unity of bounded order. Slots are assigned in
//! a fixed order; after each assignment the equations whose unknowns are all
//! assigned are tested in floating point, and surviving leaves are confirmed
//! with the exact checkers.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use crate::cyclo::rational::lcm_u32;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::skeleton::{check_pentagon, hexagon_report, pivotal_report, r_slots, RIndex, SkeletalData};

/// Default bound on visited search nodes.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Default root-of-unity order for braidings: covers orders 3, 5, 8 and 16.
pub const DEFAULT_BRAID_ORDER: u32 = 240;

const TOL: f64 = 1e-8;

#[derive(Clone, Copy)]
struct C(f64, f64);

impl C {
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn from(x: &Cyclo) -> C {
        let (a, b) = x.approx();
        C(a, b)
    }
}

/// `coeff · Π unknown[i]^{±1}`.
struct Term {
    coeff: C,
    vars: Vec<(usize, bool)>,
}

/// `Σ lhs = Σ rhs`, checkable once unknowns up to `depth` are assigned.
struct Equation {
    lhs: Vec<Term>,
    rhs: Vec<Term>,
    depth: usize,
}

fn eval_side(terms: &[Term], roots: &[C], assign: &[usize]) -> C {
    let mut acc = C(0.0, 0.0);
    for t in terms {
        let mut v = t.coeff;
        for &(i, inv) in &t.vars {
            let z = roots[assign[i]];
            v = v.mul(if inv { C(z.0, -z.1) } else { z });
        }
        acc = C(acc.0 + v.0, acc.1 + v.1);
    }
    acc
}

fn finalize(mut eqs: Vec<Equation>) -> Vec<Vec<Equation>> {
    for e in &mut eqs {
        e.depth = e
            .lhs
            .iter()
            .chain(&e.rhs)
            .flat_map(|t| t.vars.iter().map(|v| v.0))
            .max()
            .unwrap_or(usize::MAX);
    }
    let n = eqs.iter().filter(|e| e.depth != usize::MAX).map(|e| e.depth + 1).max().unwrap_or(0);
    let mut by_depth: Vec<Vec<Equation>> = (0..n).map(|_| Vec::new()).collect();
    for e in eqs {
        if e.depth != usize::MAX {
            by_depth[e.depth].push(e);
        }
    }
    by_depth
}

/// Depth-first enumeration of all assignments of `order`-th roots of unity to
/// `unknowns` variables that satisfy `eqs` numerically.
fn search(unknowns: usize, order: u32, eqs: Vec<Equation>, budget: u64) -> Result<Vec<Vec<usize>>> {
    let roots: Vec<C> = (0..order)
        .map(|k| {
            let t = TAU * k as f64 / order as f64;
            C(t.cos(), t.sin())
        })
        .collect();
    let by_depth = finalize(eqs);
    let mut out = Vec::new();
    let mut assign = vec![0usize; unknowns];
    let mut visited = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        unknowns: usize,
        roots: &[C],
        by_depth: &[Vec<Equation>],
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        visited: &mut u64,
        budget: u64,
    ) -> Result<()> {
        if depth == unknowns {
            out.push(assign.clone());
            return Ok(());
        }
        for k in 0..roots.len() {
            *visited += 1;
            if *visited > budget {
                return Err(Error::BudgetExceeded { bound: budget });
            }
            assign[depth] = k;
            let ok = by_depth.get(depth).is_none_or(|eqs| {
                eqs.iter().all(|e| {
                    let l = eval_side(&e.lhs, roots, assign);
                    let r = eval_side(&e.rhs, roots, assign);
                    (l.0 - r.0).abs() < TOL && (l.1 - r.1).abs() < TOL
                })
            });
            if ok {
                rec(depth + 1, unknowns, roots, by_depth, assign, out, visited, budget)?;
            }
        }
        Ok(())
    }
    rec(0, unknowns, &roots, &by_depth, &mut assign, &mut out, &mut visited, budget)?;
    Ok(out)
}

/// All braidings whose R-symbols are roots of unity of order dividing
/// `max_order`, ordered lexicographically by slot.
pub fn solve_braidings(data: &SkeletalData, max_order: u32) -> Result<Vec<BTreeMap<RIndex, Cyclo>>> {
    solve_braidings_with_budget(data, max_order, DEFAULT_BUDGET)
}

pub fn solve_braidings_with_budget(
    data: &SkeletalData,
    max_order: u32,
    budget: u64,
) -> Result<Vec<BTreeMap<RIndex, Cyclo>>> {
    let ring = data.ring();
    if !ring.is_commutative() {
        return Err(Error::InvalidArgument(
            "braidings need a commutative fusion ring".into(),
        ));
    }
    if max_order == 0 {
        return Err(Error::InvalidArgument("max order must be positive".into()));
    }
    if !check_pentagon(data).pass {
        return Err(Error::NotApplicable("data fails the pentagon equations".into()));
    }
    let slots: Vec<RIndex> = r_slots(ring)
        .into_iter()
        .filter(|s| s[0] != 1 && s[1] != 1)
        .collect();
    let pos: BTreeMap<RIndex, usize> = slots.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let f = |a, b, c, d, e, g| data.f(a, b, c, d, e, g).map(C::from);
    let var = |s: RIndex, inv: bool| pos.get(&s).map(|&i| (i, inv));
    let term = |coeff: C, rs: &[(RIndex, bool)]| Term {
        coeff,
        vars: rs.iter().filter_map(|&(s, inv)| var(s, inv)).collect(),
    };
    let mut eqs = Vec::new();
    for a in ring.labels() {
        for b in ring.labels() {
            for c in ring.labels() {
                for &e in ring.fuse(a, c) {
                    for &d in ring.fuse(e, b) {
                        for &g in ring.fuse(c, b) {
                            if !ring.n(a, g, d) {
                                continue;
                            }
                            let fm = f(a, c, b, d, e, g).expect("admissible");
                            let mut rhs = Vec::new();
                            let mut rhs_inv = Vec::new();
                            for &x in ring.fuse(a, b) {
                                if let (Some(p), Some(q)) = (f(c, a, b, d, e, x), f(a, b, c, d, x, g)) {
                                    rhs.push(term(p.mul(q), &[([c, x, d], false)]));
                                    rhs_inv.push(term(p.mul(q), &[([x, c, d], true)]));
                                }
                            }
                            eqs.push(Equation {
                                lhs: vec![term(fm, &[([c, a, e], false), ([c, b, g], false)])],
                                rhs,
                                depth: 0,
                            });
                            eqs.push(Equation {
                                lhs: vec![term(fm, &[([a, c, e], true), ([b, c, g], true)])],
                                rhs: rhs_inv,
                                depth: 0,
                            });
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for sol in search(slots.len(), max_order, eqs, budget)? {
        let mut r: BTreeMap<RIndex, Cyclo> = r_slots(ring).into_iter().map(|s| (s, Cyclo::one())).collect();
        for (s, k) in slots.iter().zip(&sol) {
            r.insert(*s, Cyclo::zeta(max_order, *k as i64));
        }
        let braided = data.with_braiding(Some(r.clone()))?;
        if hexagon_report(&braided)?.pass {
            out.push(r);
        }
    }
    Ok(out)
}

/// Root-of-unity order used by [`solve_pivotals`]: twice the rank times the
/// common conductor of the F-symbols.
pub fn pivotal_order_bound(data: &SkeletalData) -> u32 {
    let cond = data
        .f_table()
        .iter()
        .fold(1u32, |acc, (_, v)| lcm_u32(acc, v.conductor()));
    2 * data.ring().rank() as u32 * cond
}

/// All pivotal structures with root-of-unity coefficients, ordered
/// lexicographically by label.
pub fn solve_pivotals(data: &SkeletalData) -> Result<Vec<Vec<Cyclo>>> {
    solve_pivotals_with(data, pivotal_order_bound(data), DEFAULT_BUDGET)
}

pub fn solve_pivotals_with(data: &SkeletalData, order: u32, budget: u64) -> Result<Vec<Vec<Cyclo>>> {
    if order == 0 {
        return Err(Error::InvalidArgument("max order must be positive".into()));
    }
    if !check_pentagon(data).pass {
        return Err(Error::NotApplicable("data fails the pentagon equations".into()));
    }
    let ring = data.ring();
    let r = ring.rank();
    // unknown i is p_{i+2}
    let var = |a: usize, inv: bool| if a == 1 { None } else { Some((a - 2, inv)) };
    let one = C(1.0, 0.0);
    let term = |coeff: C, ps: &[(usize, bool)]| Term {
        coeff,
        vars: ps.iter().filter_map(|&(a, inv)| var(a, inv)).collect(),
    };
    let mut eqs = Vec::new();
    for a in ring.labels() {
        let ad = ring.dual(a);
        eqs.push(Equation {
            lhs: vec![term(one, &[(a, false), (ad, false)])],
            rhs: vec![term(one, &[])],
            depth: 0,
        });
        for b in ring.labels() {
            for &c in ring.fuse(a, b) {
                let (bd, cd) = (ring.dual(b), ring.dual(c));
                let fs = [
                    data.f(a, b, cd, 1, c, ad),
                    data.f(b, cd, a, 1, ad, bd),
                    data.f(cd, a, b, 1, bd, c),
                ];
                let coeff = fs
                    .iter()
                    .fold(one, |acc, x| acc.mul(x.map(C::from).unwrap_or(C(0.0, 0.0))));
                eqs.push(Equation {
                    lhs: vec![term(one, &[(a, false), (b, false), (c, true)])],
                    rhs: vec![term(coeff, &[])],
                    depth: 0,
                });
            }
        }
    }
    let mut out = Vec::new();
    for sol in search(r - 1, order, eqs, budget)? {
        let mut p = vec![Cyclo::one()];
        p.extend(sol.iter().map(|&k| Cyclo::zeta(order, k as i64)));
        let piv = data.with_pivotal(Some(p.clone()))?;
        if pivotal_report(&piv)?.pass {
            out.push(p);
        }
    }
    Ok(out)
}

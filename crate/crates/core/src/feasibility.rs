//! Exact feasibility of homogeneous linear systems by Fourier–Motzkin
//! elimination with strictness tracking.
//!
//! A system is a list of constraints `c · w (= | >= | >) 0` over rational
//! `w`. Because every constraint is homogeneous the system is feasible iff
//! elimination never produces the contradiction `0 > 0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigInt>,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigInt>, relation: Relation) -> Self {
        Self { coeffs, relation }
    }

    pub fn from_i64(coeffs: &[i64], relation: Relation) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), relation)
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// True iff some rational vector satisfies every constraint.
pub fn is_feasible(nvars: usize, constraints: &[Constraint]) -> bool {
    let mut system: Vec<Constraint> = Vec::with_capacity(constraints.len());
    for c in constraints {
        assert_eq!(c.coeffs.len(), nvars, "constraint has the wrong number of coefficients");
        system.push(c.clone());
    }
    for var in 0..nvars {
        system = match dedup(system) {
            Some(s) => s,
            None => return false,
        };
        system = eliminate(system, var);
    }
    dedup(system).is_some()
}

fn eliminate(system: Vec<Constraint>, var: usize) -> Vec<Constraint> {
    if let Some(pos) = system.iter().position(|c| c.relation == Relation::Eq && !c.coeffs[var].is_zero()) {
        let mut rest = system;
        let eq = rest.swap_remove(pos);
        let e = eq.coeffs[var].clone();
        return rest
            .into_iter()
            .map(|c| {
                if c.coeffs[var].is_zero() {
                    return c;
                }
                // scale c by |e| (positive) and cancel var using eq
                let g = c.coeffs[var].gcd(&e);
                let ce = e.abs() / &g;
                let sign = if e.is_negative() { -BigInt::one() } else { BigInt::one() };
                let ck = &c.coeffs[var] / &g * sign;
                let coeffs = c.coeffs.iter().zip(&eq.coeffs).map(|(a, b)| a * &ce - b * &ck).collect();
                Constraint::new(coeffs, c.relation)
            })
            .collect();
    }

    let mut out = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for c in system {
        if c.coeffs[var].is_zero() {
            out.push(c);
        } else if c.coeffs[var].is_positive() {
            lower.push(c);
        } else {
            upper.push(c);
        }
    }
    for p in &lower {
        for q in &upper {
            let pv = &p.coeffs[var];
            let qv = -&q.coeffs[var];
            let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a * &qv + b * pv).collect();
            let relation =
                if p.relation == Relation::Gt || q.relation == Relation::Gt { Relation::Gt } else { Relation::Ge };
            out.push(Constraint::new(coeffs, relation));
        }
    }
    out
}

/// Normalises to primitive integer rows, merges duplicates (keeping the
/// stronger relation) and drops trivially true rows. Returns `None` if a
/// trivial row is violated.
fn dedup(system: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut seen: HashMap<(Vec<BigInt>, bool), Relation> = HashMap::new();
    let mut order = Vec::new();
    for mut c in system {
        if c.is_trivial() {
            if c.relation == Relation::Gt {
                return None;
            }
            continue;
        }
        let g = c.coeffs.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in c.coeffs.iter_mut() {
            *x /= &g;
        }
        if c.relation == Relation::Eq {
            let first = c.coeffs.iter().find(|x| !x.is_zero()).unwrap();
            if first.is_negative() {
                for x in c.coeffs.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        // equalities never merge with inequalities on the same row
        let key = (c.coeffs, c.relation == Relation::Eq);
        match seen.get_mut(&key) {
            None => {
                order.push(key.clone());
                seen.insert(key, c.relation);
            }
            Some(rel) => {
                *rel = stronger(*rel, c.relation);
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|k| {
                let rel = seen[&k];
                Constraint::new(k.0, rel)
            })
            .collect(),
    )
}

fn stronger(a: Relation, b: Relation) -> Relation {
    use Relation::*;
    match (a, b) {
        (Gt, _) | (_, Gt) => Gt,
        (Eq, Eq) => Eq,
        _ => Ge,
    }
}

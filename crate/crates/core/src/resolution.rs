//! Linear quotients and Betti numbers of monomial ideals.
//!
//! Two independent routes are provided. The certificate route computes the
//! colon ideals `<m_1, ..., m_{j-1}> : m_j` along a generator order and, when
//! all of them are generated by variables, reads off
//! `beta_l = sum_j C(|set(m_j)|, l)`. The oracle route computes multigraded
//! Betti numbers as reduced homology of upper Koszul simplicial complexes,
//! one per element of the lcm lattice, and never looks at an ordering.
//!
//! Betti numbers are those of the ideal itself, so `beta_0` counts minimal
//! generators.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::algebra::{Monomial, VariableId};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{rank, sparse_row};
use crate::matching_field::GeneratorTriple;

/// Largest ideal accepted by [`betti_oracle`].
pub const ORACLE_MAX_GENERATORS: usize = 25;

/// Total Betti numbers `beta_0, beta_1, ...`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable(Vec<u64>);

impl BettiTable {
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        Self(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, l: usize) -> u64 {
        self.0.get(l).copied().unwrap_or(0)
    }

    /// Index of the last nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `<prefix> : m`, minimally generated.
pub fn colon_by_monomial(prefix: &[Monomial], m: &Monomial) -> MonomialIdeal {
    let quotients = prefix.iter().map(|p| p.div_exact(&p.gcd(m)).expect("gcd divides")).collect();
    MonomialIdeal::new(m.nvars(), quotients)
}

/// Result of running the colon computation along a generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCertificate {
    pub order: Vec<Monomial>,
    /// `set(m_j)` as variable indices, ascending, for every generator up to
    /// the first failure.
    pub sets: Vec<Vec<usize>>,
    pub is_linear: bool,
    /// Position of the first non-linear colon ideal and one of its
    /// non-variable generators.
    pub first_failure: Option<(usize, Monomial)>,
}

impl QuotientCertificate {
    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }
}

pub fn linear_quotients_certificate(ordered: &[Monomial]) -> QuotientCertificate {
    let mut sets = Vec::with_capacity(ordered.len());
    for (j, m) in ordered.iter().enumerate() {
        let colon = colon_by_monomial(&ordered[..j], m);
        if let Some(bad) = colon.generators().iter().find(|g| g.as_variable().is_none()) {
            return QuotientCertificate {
                order: ordered.to_vec(),
                sets,
                is_linear: false,
                first_failure: Some((j, bad.clone())),
            };
        }
        let mut vars: Vec<usize> = colon.generators().iter().filter_map(Monomial::as_variable).collect();
        vars.sort_unstable();
        sets.push(vars);
    }
    QuotientCertificate { order: ordered.to_vec(), sets, is_linear: true, first_failure: None }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc.to_u64().expect("binomial fits in u64")
}

/// `beta_l = sum_j C(|set(m_j)|, l)`.
pub fn betti_from_certificate(cert: &QuotientCertificate) -> Result<BettiTable> {
    if !cert.is_linear {
        return Err(Error::NotLinearQuotients);
    }
    let top = cert.sets.iter().map(Vec::len).max().unwrap_or(0);
    let values =
        (0..=top as u64).map(|l| cert.sets.iter().map(|s| binomial(s.len() as u64, l)).sum()).collect();
    Ok(BettiTable::new(values))
}

/// `sum_{k=3}^{n} C(k-1, 2) C(k-3, l)`.
pub fn betti_diagonal_closed_form(n: usize, l: usize) -> u64 {
    (3..=n as u64).map(|k| binomial(k - 1, 2) * binomial(k - 3, l as u64)).sum()
}

/// The full closed-form table for the diagonal ideal.
pub fn betti_diagonal_table(n: usize) -> BettiTable {
    BettiTable::new((0..=n.saturating_sub(3)).map(|l| betti_diagonal_closed_form(n, l)).collect())
}

/// Variable sets of the diagonal generators `x_i y_j z_k` in lexicographic
/// order: `{x_1..x_{i-1}} ∪ {y_{i+1}..y_{j-1}} ∪ {z_{j+1}..z_{k-1}}`.
pub fn diagonal_lex_sets(n: usize) -> Vec<(GeneratorTriple, Vec<VariableId>)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let mut s: Vec<VariableId> = (1..i).map(VariableId::x).collect();
                s.extend((i + 1..j).map(VariableId::y));
                s.extend((j + 1..k).map(VariableId::z));
                out.push((GeneratorTriple::new(i, j, k), s));
            }
        }
    }
    out
}

/// Total Betti numbers from reduced homology of upper Koszul complexes.
///
/// For every `b` in the lcm lattice, `K^b` is the simplicial complex of
/// squarefree `F ⊆ supp(b)` with `b / x^F` in the ideal, and
/// `beta_{i,b} = dim H~_{i-1}(K^b; Q)`. Multidegrees outside the lattice
/// give cones and contribute nothing.
pub fn betti_oracle(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let gens = ideal.generators();
    if gens.len() > ORACLE_MAX_GENERATORS {
        return Err(Error::TooLarge(format!(
            "{} generators, the homology oracle accepts at most {ORACLE_MAX_GENERATORS}",
            gens.len()
        )));
    }
    let lattice = lcm_lattice(gens);
    let per_degree: Vec<Vec<u64>> = lattice.par_iter().map(|b| upper_koszul_betti(gens, b)).collect();
    let len = per_degree.iter().map(Vec::len).max().unwrap_or(0);
    let mut totals = vec![0u64; len];
    for v in per_degree {
        for (i, x) in v.into_iter().enumerate() {
            totals[i] += x;
        }
    }
    Ok(BettiTable::new(totals))
}

/// Multigraded Betti numbers `b -> (beta_{0,b}, beta_{1,b}, ...)`, nonzero degrees only.
pub fn multigraded_betti_oracle(ideal: &MonomialIdeal) -> Result<HashMap<Monomial, Vec<u64>>> {
    let gens = ideal.generators();
    if gens.len() > ORACLE_MAX_GENERATORS {
        return Err(Error::TooLarge(format!("{} generators", gens.len())));
    }
    let lattice = lcm_lattice(gens);
    Ok(lattice
        .into_par_iter()
        .filter_map(|b| {
            let v = upper_koszul_betti(gens, &b);
            if v.iter().any(|&x| x > 0) {
                Some((b, v))
            } else {
                None
            }
        })
        .collect())
}

/// Least common multiples of all nonempty subsets of `gens`.
fn lcm_lattice(gens: &[Monomial]) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut elems: Vec<Monomial> = Vec::new();
    for g in gens {
        let mut fresh = Vec::new();
        if seen.insert(g.clone()) {
            fresh.push(g.clone());
        }
        for e in &elems {
            let l = e.lcm(g);
            if seen.insert(l.clone()) {
                fresh.push(l);
            }
        }
        elems.extend(fresh);
    }
    elems.sort();
    elems
}

// beta_{i,b} for i = 0, 1, ... via reduced homology of K^b.
fn upper_koszul_betti(gens: &[Monomial], b: &Monomial) -> Vec<u64> {
    let support = b.support();
    let s = support.len();
    assert!(s < 32, "support too large for the oracle");
    let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides(b)).collect();
    let in_ideal = |mask: u32| -> bool {
        let mut exps = b.exponents().to_vec();
        for (bit, &v) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                exps[v] -= 1;
            }
        }
        below.iter().any(|g| g.exponents().iter().zip(&exps).all(|(a, e)| a <= e))
    };

    // faces grouped by cardinality; faces[0] = [empty face]
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1u32 << s) {
        if in_ideal(mask) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    if faces.is_empty() {
        return Vec::new();
    }
    let index: Vec<HashMap<u32, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();

    // rank of the boundary from cardinality c to c - 1
    let boundary_rank = |c: usize| -> usize {
        if c == 0 || c >= faces.len() {
            return 0;
        }
        let rows = faces[c].iter().map(|&f| {
            let mut entries = Vec::with_capacity(c);
            let mut pos = 0i64;
            for bit in 0..s {
                if f & (1 << bit) != 0 {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    entries.push((index[c - 1][&(f & !(1 << bit))], sign));
                    pos += 1;
                }
            }
            sparse_row(entries)
        });
        rank(rows)
    };
    let ranks: Vec<usize> = (0..=faces.len()).map(boundary_rank).collect();

    // beta_{i,b} = dim H~_{i-1} = f_i - rank d_i - rank d_{i+1}, indexing by cardinality i
    (0..faces.len()).map(|c| (faces[c].len() - ranks[c] - ranks[c + 1]) as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching_field::{matching_ideal, sort_generators, BlockStructure};

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn colon_examples() {
        let n = 5;
        let a = BlockStructure::new(vec![3, 2]).unwrap();
        let order: Vec<Monomial> = sort_generators(&a).unwrap().iter().map(|t| t.monomial(n)).collect();
        let colon = colon_by_monomial(&order[..9], &order[9]);
        let mut got: Vec<String> = colon.generators().iter().map(|g| g.display_xyz(n)).collect();
        got.sort();
        assert_eq!(got, vec!["z4", "z5"]);

        assert!(colon_by_monomial(&[], &order[0]).is_zero());

        let single = colon_by_monomial(&[Monomial::xyz(n, 1, 3, 5)], &Monomial::xyz(n, 2, 3, 5));
        assert_eq!(single.generators().len(), 1);
        assert_eq!(single.generators()[0].display_xyz(n), "x1");
    }

    #[test]
    fn certificate_for_n5() {
        let a = BlockStructure::new(vec![3, 2]).unwrap();
        let order: Vec<Monomial> = sort_generators(&a).unwrap().iter().map(|t| t.monomial(5)).collect();
        let cert = linear_quotients_certificate(&order);
        assert!(cert.is_linear);
        assert_eq!(cert.set_sizes(), vec![0, 1, 2, 1, 2, 2, 1, 2, 2, 2]);
        assert_eq!(betti_from_certificate(&cert).unwrap().values(), &[10, 15, 6]);
    }

    #[test]
    fn coprime_pair_is_not_linear() {
        let cert = linear_quotients_certificate(&[mono(&[1, 1, 0, 0]), mono(&[0, 0, 1, 1])]);
        assert!(!cert.is_linear);
        assert_eq!(cert.first_failure, Some((1, mono(&[1, 1, 0, 0]))));
        assert_eq!(betti_from_certificate(&cert).unwrap_err(), Error::NotLinearQuotients);
    }

    #[test]
    fn single_generator() {
        let cert = linear_quotients_certificate(&[mono(&[1, 2])]);
        assert_eq!(betti_from_certificate(&cert).unwrap().values(), &[1]);
    }

    #[test]
    fn diagonal_closed_form_small() {
        assert_eq!(betti_diagonal_table(3).values(), &[1]);
        assert_eq!(betti_diagonal_table(4).values(), &[4, 3]);
        assert_eq!(betti_diagonal_closed_form(4, 2), 0);
        assert_eq!(betti_diagonal_table(5).values(), &[10, 15, 6]);
    }

    #[test]
    fn diagonal_lex_sets_have_size_k_minus_3() {
        for n in 3..=7 {
            for (t, s) in diagonal_lex_sets(n) {
                assert_eq!(s.len(), t.z - 3);
            }
        }
        let sets = diagonal_lex_sets(5);
        let (_, s) = sets.iter().find(|(t, _)| t.as_tuple() == (2, 3, 5)).unwrap();
        assert_eq!(s, &vec![VariableId::x(1), VariableId::z(4)]);
    }

    #[test]
    fn oracle_coprime_pair() {
        let ideal = MonomialIdeal::new(4, vec![mono(&[1, 1, 0, 0]), mono(&[0, 0, 1, 1])]);
        assert_eq!(betti_oracle(&ideal).unwrap().values(), &[2, 1]);
    }

    #[test]
    fn oracle_triangle_edge_ideal() {
        // <x1y1, y1z1, z1x1>
        let ideal = MonomialIdeal::new(3, vec![mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 0, 1])]);
        assert_eq!(betti_oracle(&ideal).unwrap().values(), &[3, 2]);
    }

    #[test]
    fn oracle_non_squarefree() {
        // <x^2, xy, y^2>: resolution 3 -> 2
        let ideal = MonomialIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);
        assert_eq!(betti_oracle(&ideal).unwrap().values(), &[3, 2]);
        // <x, y, z>: Koszul 3, 3, 1
        let ideal = MonomialIdeal::new(3, vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        assert_eq!(betti_oracle(&ideal).unwrap().values(), &[3, 3, 1]);
    }

    #[test]
    fn oracle_matches_example_n5() {
        let a = BlockStructure::new(vec![3, 2]).unwrap();
        assert_eq!(betti_oracle(&matching_ideal(&a).unwrap()).unwrap().values(), &[10, 15, 6]);
    }

    #[test]
    fn oracle_rejects_large_ideals() {
        let a = BlockStructure::diagonal(7).unwrap();
        assert!(matches!(betti_oracle(&matching_ideal(&a).unwrap()), Err(Error::TooLarge(_))));
    }

    #[test]
    fn zero_ideal_has_empty_table() {
        assert_eq!(betti_oracle(&MonomialIdeal::zero(3)).unwrap().values(), &[] as &[u64]);
    }
}

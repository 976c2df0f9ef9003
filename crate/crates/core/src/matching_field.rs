//! Block-diagonal matching fields for 3×n matrices.
//!
//! A composition `a = (a_1, ..., a_r)` of `n` cuts the columns into
//! consecutive blocks. Each 3-subset `{i < j < k}` selects one term of its
//! minor: `x_j y_i z_k` when `i` is alone in the first block it meets,
//! `x_i y_j z_k` otherwise. This module builds those generators, the weight
//! order that picks them out, and the block ordering used for linear
//! quotients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use crate::algebra::{Monomial, VariableId, WeightOrder};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// A composition of `n` into consecutive column blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockStructure {
    parts: Vec<usize>,
    // alpha[t] = a_1 + ... + a_t, alpha[0] = 0
    alpha: Vec<usize>,
}

impl BlockStructure {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidBlocks("no blocks given".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidBlocks(format!("block sizes must be positive: {parts:?}")));
        }
        let mut alpha = vec![0];
        for p in &parts {
            alpha.push(alpha.last().unwrap() + p);
        }
        Ok(Self { parts, alpha })
    }

    /// Builds the structure and checks that the parts sum to `n`.
    pub fn with_n(n: usize, parts: Vec<usize>) -> Result<Self> {
        let b = Self::new(parts)?;
        if b.n() != n {
            return Err(Error::InvalidBlocks(format!("blocks {:?} sum to {}, expected n = {n}", b.parts, b.n())));
        }
        Ok(b)
    }

    /// The single-block (diagonal) structure `a = (n)`.
    pub fn diagonal(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn n(&self) -> usize {
        *self.alpha.last().unwrap()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_blocks(&self) -> usize {
        self.parts.len()
    }

    /// Prefix sums `alpha_1, ..., alpha_r`.
    pub fn prefix_sums(&self) -> &[usize] {
        &self.alpha[1..]
    }

    /// `alpha_t` for `0 <= t <= r`.
    pub fn alpha(&self, t: usize) -> usize {
        self.alpha[t]
    }

    /// Column intervals `I_1, ..., I_r`.
    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        (1..=self.num_blocks()).map(|t| self.block(t)).collect()
    }

    /// The interval `I_t` (1-based `t`).
    pub fn block(&self, t: usize) -> RangeInclusive<usize> {
        self.alpha[t - 1] + 1..=self.alpha[t]
    }

    /// 1-based index of the block containing column `i`.
    pub fn block_of(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n(), "column {i} out of range");
        self.alpha.partition_point(|&x| x < i)
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `n`, in lexicographic order of their part lists.
pub fn compositions(n: usize) -> Vec<BlockStructure> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out.into_iter().map(|p| BlockStructure::new(p).expect("valid composition")).collect()
}

/// A generator `x_l y_u z_v`, stored by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl GeneratorTriple {
    pub fn new(x: usize, y: usize, z: usize) -> Self {
        Self { x, y, z }
    }

    pub fn as_tuple(self) -> (usize, usize, usize) {
        (self.x, self.y, self.z)
    }

    /// The underlying column set, ascending.
    pub fn subset(self) -> [usize; 3] {
        let mut s = [self.x, self.y, self.z];
        s.sort_unstable();
        s
    }

    pub fn monomial(self, n: usize) -> Monomial {
        Monomial::xyz(n, self.x, self.y, self.z)
    }

    pub fn variables(self) -> [VariableId; 3] {
        [VariableId::x(self.x), VariableId::y(self.y), VariableId::z(self.z)]
    }

    /// Number of positions in which the two triples differ.
    pub fn hamming(self, other: Self) -> usize {
        usize::from(self.x != other.x) + usize::from(self.y != other.y) + usize::from(self.z != other.z)
    }
}

impl fmt::Display for GeneratorTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x < 10 && self.y < 10 && self.z < 10 {
            write!(f, "{}{}{}", self.x, self.y, self.z)
        } else {
            write!(f, "({},{},{})", self.x, self.y, self.z)
        }
    }
}

/// The matching-field term chosen for the 3-subset `{i < j < k}`.
pub fn generator(a: &BlockStructure, subset: [usize; 3]) -> Result<GeneratorTriple> {
    let [i, j, k] = subset;
    if !(1 <= i && i < j && j < k && k <= a.n()) {
        return Err(Error::InvalidSubset(subset.to_vec()));
    }
    // i is the smallest element, so its block is the first one met
    let s = a.block_of(i);
    let hits = subset.iter().filter(|&&c| a.block_of(c) == s).count();
    Ok(if hits == 1 { GeneratorTriple::new(j, i, k) } else { GeneratorTriple::new(i, j, k) })
}

/// All 3-subsets of `[n]` in lexicographic order.
pub fn three_subsets(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Generators of `M_a`, one per 3-subset, in lexicographic subset order.
pub fn generators(a: &BlockStructure) -> Result<Vec<GeneratorTriple>> {
    if a.n() < 3 {
        return Err(Error::TooSmall(a.n()));
    }
    three_subsets(a.n()).into_iter().map(|s| generator(a, s)).collect()
}

/// The matching-field ideal `M_a` in the 3n-variable ring.
pub fn matching_ideal(a: &BlockStructure) -> Result<MonomialIdeal> {
    let n = a.n();
    let gens = generators(a)?.into_iter().map(|t| t.monomial(n)).collect();
    Ok(MonomialIdeal::new(3 * n, gens))
}

pub fn is_generator(a: &BlockStructure, t: GeneratorTriple) -> bool {
    let s = t.subset();
    if s[0] == s[1] || s[1] == s[2] || s[0] < 1 || s[2] > a.n() {
        return false;
    }
    // z is always the largest column
    t.z == s[2] && generator(a, s).map(|g| g == t).unwrap_or(false)
}

/// Rows of the weight matrix `w_a`: x, y and z weights for columns `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRows {
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub z: Vec<u64>,
}

impl WeightRows {
    pub fn as_matrix(&self) -> [Vec<u64>; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

/// The weight rows for `a` and base weight `w0`.
pub fn weight_rows(a: &BlockStructure, w0: u64) -> Result<WeightRows> {
    if w0 == 0 {
        return Err(Error::InvalidWeightOrder("w0 must be at least 1".into()));
    }
    let n = a.n();
    let r = a.num_blocks();
    let mut y = vec![0u64; n + 1];
    // the last block starts at w0 + 1, every earlier block starts one above
    // the end of the block after it
    for t in (1..=r).rev() {
        let first = a.alpha(t - 1) + 1;
        y[first] = if t == r { w0 + 1 } else { y[a.alpha(t + 1)] + 1 };
        for j in first + 1..=a.alpha(t) {
            y[j] = y[first] + (j - first) as u64;
        }
    }
    let top_first_block = y[a.alpha(1)];
    let z = (1..=n)
        .map(|i| if i <= 2 { w0 } else { top_first_block + (n as u64 - 2) * (i as u64 - 2) })
        .collect();
    Ok(WeightRows { x: vec![w0; n], y: y[1..].to_vec(), z })
}

/// Tie-break precedence, highest first:
/// `z_n > ... > z_3 > (y's of I_1 descending) > ... > (y's of I_r descending) > z_2 > z_1 > x_1 > ... > x_n`.
pub fn tie_break_precedence(a: &BlockStructure) -> Vec<VariableId> {
    let n = a.n();
    let mut out = Vec::with_capacity(3 * n);
    out.extend((3..=n).rev().map(VariableId::z));
    for t in 1..=a.num_blocks() {
        out.extend(a.block(t).rev().map(VariableId::y));
    }
    out.extend((1..=n.min(2)).rev().map(VariableId::z));
    out.extend((1..=n).map(VariableId::x));
    out
}

/// The weight order `<_{w_a}` on the 3n variables.
pub fn weight_matrix(a: &BlockStructure, w0: u64) -> Result<WeightOrder> {
    let n = a.n();
    let rows = weight_rows(a, w0)?;
    let weights = rows.x.iter().chain(&rows.y).chain(&rows.z).copied().collect();
    let precedence = tie_break_precedence(a).into_iter().map(|v| v.position(n)).collect();
    WeightOrder::new(weights, precedence)
}

/// Block ordering `<_a`: `Ordering::Less` means `t1` comes first.
pub fn block_order_compare(a: &BlockStructure, t1: GeneratorTriple, t2: GeneratorTriple) -> Result<Ordering> {
    for t in [t1, t2] {
        if !is_generator(a, t) {
            return Err(Error::NotAGenerator(t.as_tuple()));
        }
    }
    Ok(block_key(a, t1).cmp(&block_key(a, t2)))
}

// Sort key realising the four clauses: larger z first, then earlier y-block,
// then larger y, then smaller x.
fn block_key(a: &BlockStructure, t: GeneratorTriple) -> (std::cmp::Reverse<usize>, usize, std::cmp::Reverse<usize>, usize) {
    use std::cmp::Reverse;
    (Reverse(t.z), a.block_of(t.y), Reverse(t.y), t.x)
}

/// All generators of `M_a` sorted by the block ordering.
pub fn sort_generators(a: &BlockStructure) -> Result<Vec<GeneratorTriple>> {
    let mut g = generators(a)?;
    g.sort_by_key(|&t| block_key(a, t));
    Ok(g)
}

/// Generators preceding `t` in the block ordering that differ from it in
/// exactly one coordinate, listed in block order.
pub fn s_set(a: &BlockStructure, t: GeneratorTriple) -> Result<Vec<GeneratorTriple>> {
    if !is_generator(a, t) {
        return Err(Error::NotAGenerator(t.as_tuple()));
    }
    let key = block_key(a, t);
    Ok(sort_generators(a)?.into_iter().filter(|&g| block_key(a, g) < key && g.hamming(t) == 1).collect())
}

/// The variable in which a one-coordinate neighbour differs from `t`.
pub fn differing_variable(t: GeneratorTriple, neighbour: GeneratorTriple) -> Option<VariableId> {
    if neighbour.hamming(t) != 1 {
        return None;
    }
    Some(if neighbour.x != t.x {
        VariableId::x(neighbour.x)
    } else if neighbour.y != t.y {
        VariableId::y(neighbour.y)
    } else {
        VariableId::z(neighbour.z)
    })
}

/// Which case of the closed-form count applies to a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// `x` and `y` in the same block `I_s` with `s < r`.
    SameBlock,
    /// `y` in an earlier block than `x`.
    SplitBlocks,
    /// `x` and `y` both in the last block.
    LastBlock,
}

/// Ways in which the candidate list behind the closed form differs from the
/// definitional neighbour set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CandidateMismatch {
    /// Listed triples that are not generators of `M_a`.
    pub non_generators: Vec<(usize, usize, usize)>,
    /// Listed generators that do not precede the triple.
    pub not_preceding: Vec<GeneratorTriple>,
    /// Members of the neighbour set the list omits.
    pub missing: Vec<GeneratorTriple>,
}

impl CandidateMismatch {
    pub fn is_empty(&self) -> bool {
        self.non_generators.is_empty() && self.not_preceding.is_empty() && self.missing.is_empty()
    }
}

/// Closed-form neighbour count, an unchecked fast path.
///
/// `value` is the printed formula; `mismatch` compares the formula's own
/// candidate list against the definitional set so callers can tell whether a
/// disagreement with [`s_set`] is explained by the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormCount {
    pub case: ClosedFormCase,
    pub value: i64,
    pub mismatch: CandidateMismatch,
}

pub fn s_size_closed_form(a: &BlockStructure, t: GeneratorTriple) -> Result<ClosedFormCount> {
    let truth = s_set(a, t)?;
    let n = a.n() as i64;
    let r = a.num_blocks();
    let (l, u, v) = (t.x as i64, t.y as i64, t.z as i64);
    let s = a.block_of(t.x);
    let bu = a.block_of(t.y);
    let alpha = |k: usize| a.alpha(k) as i64;

    let mut cands: Vec<(i64, i64, i64)> = Vec::new();
    let push_x = |range: std::ops::Range<i64>, c: &mut Vec<_>| c.extend(range.map(|x| (x, u, v)));
    let (case, value) = if s == bu && s < r {
        push_x(alpha(s - 1) + 1..l, &mut cands);
        cands.extend((u + 1..=alpha(s)).map(|y| (l, y, v)));
        cands.extend((1..=alpha(s - 1)).map(|y| (l, y, v)));
        (ClosedFormCase::SameBlock, alpha(s) - u + l - 1 + n - v)
    } else if bu < s {
        push_x(alpha(s - 1) + 1..u, &mut cands);
        push_x(alpha(s) + 1..l, &mut cands);
        cands.extend((u + 1..=alpha(s)).map(|y| (l, y, v)));
        cands.extend((1..=alpha(s - 1)).map(|y| (l, y, v)));
        (ClosedFormCase::SplitBlocks, l - 2 + n - v)
    } else {
        push_x(alpha(r - 1) + 1..l, &mut cands);
        cands.extend((l + 1..u).map(|y| (l, y, v)));
        cands.extend((1..=alpha(r - 1)).map(|y| (l, y, v)));
        (ClosedFormCase::LastBlock, u - 2 + n - v)
    };
    cands.extend((v + 1..=n).map(|z| (l, u, z)));

    let key = block_key(a, t);
    let mut mismatch = CandidateMismatch::default();
    let mut listed = Vec::new();
    for (x, y, z) in cands {
        let valid = x >= 1 && y >= 1 && z >= 1;
        let cand = GeneratorTriple::new(x.max(0) as usize, y.max(0) as usize, z.max(0) as usize);
        if !valid || !is_generator(a, cand) {
            mismatch.non_generators.push((x.max(0) as usize, y.max(0) as usize, z.max(0) as usize));
        } else if block_key(a, cand) >= key || cand.hamming(t) != 1 {
            mismatch.not_preceding.push(cand);
        } else {
            listed.push(cand);
        }
    }
    mismatch.missing = truth.iter().filter(|g| !listed.contains(g)).copied().collect();
    Ok(ClosedFormCount { case, value, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(parts: &[usize]) -> BlockStructure {
        BlockStructure::new(parts.to_vec()).unwrap()
    }

    fn triples(v: &[(usize, usize, usize)]) -> Vec<GeneratorTriple> {
        v.iter().map(|&(x, y, z)| GeneratorTriple::new(x, y, z)).collect()
    }

    #[test]
    fn blocks_and_prefix_sums() {
        let a = bs(&[2, 3, 2]);
        assert_eq!(a.blocks(), vec![1..=2, 3..=5, 6..=7]);
        assert_eq!(a.prefix_sums(), &[2, 5, 7]);
        assert_eq!(bs(&[5]).blocks(), vec![1..=5]);
        let b = bs(&[3, 2]);
        assert_eq!(b.blocks(), vec![1..=3, 4..=5]);
        assert_eq!(b.block_of(3), 1);
        assert_eq!(b.block_of(4), 2);
    }

    #[test]
    fn invalid_block_structures() {
        assert!(BlockStructure::new(vec![]).is_err());
        assert!(BlockStructure::new(vec![2, 0, 1]).is_err());
        assert!(BlockStructure::with_n(5, vec![2, 2]).is_err());
        assert!(BlockStructure::with_n(4, vec![2, 2]).is_ok());
    }

    #[test]
    fn compositions_count() {
        for n in 1..=8 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn generator_rule() {
        assert_eq!(generator(&bs(&[3, 2]), [3, 4, 5]).unwrap(), GeneratorTriple::new(4, 3, 5));
        assert_eq!(generator(&bs(&[2, 3, 2]), [1, 2, 3]).unwrap(), GeneratorTriple::new(1, 2, 3));
        for [i, j, k] in three_subsets(6) {
            assert_eq!(generator(&bs(&[6]), [i, j, k]).unwrap(), GeneratorTriple::new(i, j, k));
        }
        assert!(matches!(generator(&bs(&[3, 2]), [3, 2, 5]), Err(Error::InvalidSubset(_))));
        assert!(matches!(generator(&bs(&[3, 2]), [1, 2, 6]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn matching_ideal_n5() {
        let a = bs(&[3, 2]);
        let ideal = matching_ideal(&a).unwrap();
        let expected = triples(&[
            (1, 2, 3),
            (1, 3, 4),
            (2, 3, 4),
            (1, 2, 4),
            (1, 3, 5),
            (2, 3, 5),
            (4, 3, 5),
            (1, 2, 5),
            (4, 2, 5),
            (4, 1, 5),
        ]);
        let mut want: Vec<Monomial> = expected.iter().map(|t| t.monomial(5)).collect();
        want.sort();
        assert_eq!(ideal.sorted_generators(), want);
    }

    #[test]
    fn matching_ideal_too_small() {
        assert_eq!(matching_ideal(&bs(&[2])).unwrap_err(), Error::TooSmall(2));
    }

    #[test]
    fn m43_contains_547() {
        let a = bs(&[4, 3]);
        let ideal = matching_ideal(&a).unwrap();
        assert_eq!(ideal.len(), 35);
        assert!(ideal.generators().contains(&GeneratorTriple::new(5, 4, 7).monomial(7)));
    }

    #[test]
    fn weight_rows_match_printed_matrix() {
        let w = weight_rows(&bs(&[2, 3, 2]), 1).unwrap();
        assert_eq!(w.x, vec![1; 7]);
        assert_eq!(w.y, vec![7, 8, 4, 5, 6, 2, 3]);
        assert_eq!(w.z, vec![1, 1, 13, 18, 23, 28, 33]);
    }

    #[test]
    fn weight_rows_single_block_n3() {
        let w = weight_rows(&bs(&[3]), 1).unwrap();
        assert_eq!((w.x, w.y, w.z), (vec![1, 1, 1], vec![2, 3, 4], vec![1, 1, 5]));
    }

    #[test]
    fn weight_rows_reject_zero_base() {
        assert!(weight_rows(&bs(&[3]), 0).is_err());
    }

    #[test]
    fn y_weights_are_a_shifted_permutation() {
        for n in 1..=8 {
            for a in compositions(n) {
                for w0 in [1u64, 5] {
                    let mut y = weight_rows(&a, w0).unwrap().y;
                    y.sort_unstable();
                    assert_eq!(y, (w0 + 1..=w0 + n as u64).collect::<Vec<_>>(), "a = {a}");
                }
            }
        }
    }

    #[test]
    fn precedence_for_printed_example() {
        let names: Vec<String> = tie_break_precedence(&bs(&[2, 3, 2])).iter().map(|v| v.to_string()).collect();
        let want = "z7 z6 z5 z4 z3 y2 y1 y5 y4 y3 y7 y6 z2 z1 x1 x2 x3 x4 x5 x6 x7";
        assert_eq!(names.join(" "), want);
    }

    #[test]
    fn block_order_examples() {
        let a = bs(&[4, 3]);
        let g = GeneratorTriple::new;
        assert_eq!(block_order_compare(&a, g(1, 4, 7), g(1, 3, 7)).unwrap(), Ordering::Less);
        assert_eq!(block_order_compare(&a, g(5, 1, 7), g(5, 6, 7)).unwrap(), Ordering::Less);
        let b = bs(&[3, 2]);
        assert_eq!(block_order_compare(&b, g(1, 3, 5), g(1, 2, 3)).unwrap(), Ordering::Less);
        assert_eq!(block_order_compare(&b, g(1, 2, 3), g(1, 2, 3)).unwrap(), Ordering::Equal);
        assert!(matches!(block_order_compare(&b, g(2, 1, 3), g(1, 2, 3)), Err(Error::NotAGenerator(_))));
    }

    #[test]
    fn sorted_generators_n5() {
        let got = sort_generators(&bs(&[3, 2])).unwrap();
        let want = triples(&[
            (1, 3, 5),
            (2, 3, 5),
            (4, 3, 5),
            (1, 2, 5),
            (4, 2, 5),
            (4, 1, 5),
            (1, 3, 4),
            (2, 3, 4),
            (1, 2, 4),
            (1, 2, 3),
        ]);
        assert_eq!(got, want);
        assert_eq!(sort_generators(&bs(&[3])).unwrap(), triples(&[(1, 2, 3)]));
    }

    #[test]
    fn sorted_generators_tableau_43() {
        let got = sort_generators(&bs(&[4, 3])).unwrap();
        let printed = "147 247 347 547 647 137 237 537 637 127 527 627 517 617 567 \
                       146 246 346 546 136 236 536 126 526 516 \
                       145 245 345 135 235 125 134 234 124 123";
        let got: Vec<String> = got.iter().map(|t| t.to_string()).collect();
        assert_eq!(got.join(" "), printed.split_whitespace().collect::<Vec<_>>().join(" "));
    }

    #[test]
    fn s_set_examples() {
        let a = bs(&[3, 2]);
        let g = GeneratorTriple::new;
        assert!(s_set(&a, g(1, 3, 5)).unwrap().is_empty());
        assert_eq!(s_set(&a, g(1, 2, 3)).unwrap(), vec![g(1, 2, 5), g(1, 2, 4)]);
        let mut s = s_set(&a, g(4, 1, 5)).unwrap();
        s.sort();
        assert_eq!(s, vec![g(4, 2, 5), g(4, 3, 5)]);
    }

    #[test]
    fn closed_form_examples() {
        let g = GeneratorTriple::new;
        let c = s_size_closed_form(&bs(&[3, 2]), g(4, 2, 5)).unwrap();
        assert_eq!((c.case, c.value), (ClosedFormCase::SplitBlocks, 2));
        let c = s_size_closed_form(&bs(&[4, 3]), g(1, 4, 7)).unwrap();
        assert_eq!((c.case, c.value), (ClosedFormCase::SameBlock, 0));

        // known divergence: the list names (1,3,3), which is not a generator
        let c = s_size_closed_form(&bs(&[3, 2]), g(1, 2, 3)).unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(s_set(&bs(&[3, 2]), g(1, 2, 3)).unwrap().len(), 2);
        assert_eq!(c.mismatch.non_generators, vec![(1, 3, 3)]);
    }

    #[test]
    fn differing_variable_is_distinct_per_neighbour() {
        for n in 3..=6 {
            for a in compositions(n) {
                for t in generators(&a).unwrap() {
                    let vars: Vec<_> =
                        s_set(&a, t).unwrap().into_iter().map(|nb| differing_variable(t, nb).unwrap()).collect();
                    let mut dedup = vars.clone();
                    dedup.sort();
                    dedup.dedup();
                    assert_eq!(dedup.len(), vars.len(), "a = {a}, t = {t}");
                }
            }
        }
    }
}

//! Monomial Plücker maps and their toric kernels, degree by degree.
//!
//! A monomial in the Plücker variables is a sorted list of source indices
//! (a multiset). Kernels are read off from fibers of the induced map on
//! degree-`d` monomials: each fiber of size `s` contributes `s - 1` binomials.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::{sparse_row, EchelonBasis};
use crate::matching_field::{generator, three_subsets, BlockStructure};

/// Default cap on the number of degree-`d` monomials enumerated per slice.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 2_000_000;

/// `p_I ↦ m_I` for a list of index sets `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerMap {
    target_vars: usize,
    sources: Vec<Vec<usize>>,
    images: Vec<Monomial>,
}

impl PluckerMap {
    pub fn new(target_vars: usize, sources: Vec<Vec<usize>>, images: Vec<Monomial>) -> Result<Self> {
        if sources.len() != images.len() {
            return Err(Error::NotInjective(format!("{} sources but {} images", sources.len(), images.len())));
        }
        if let Some(m) = images.iter().find(|m| m.nvars() != target_vars) {
            return Err(Error::UnknownVariable(format!("image {m:?} is not over {target_vars} variables")));
        }
        let mut seen = BTreeMap::new();
        for (i, m) in images.iter().enumerate() {
            if let Some(j) = seen.insert(m, i) {
                return Err(Error::NotInjective(format!("p{:?} and p{:?} share an image", sources[j], sources[i])));
            }
        }
        Ok(Self { target_vars, sources, images })
    }

    /// The matching-field map on 3-subsets of `[n]`, variables in the usual
    /// `x, y, z` layout.
    pub fn from_matching_field(a: &BlockStructure) -> Result<Self> {
        let n = a.n();
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        let subsets = three_subsets(n);
        let images = subsets.iter().map(|&s| generator(a, s).map(|t| t.monomial(n))).collect::<Result<_>>()?;
        Self::new(3 * n, subsets.into_iter().map(|s| s.to_vec()).collect(), images)
    }

    /// The diagonal map on a generic `k × n` matrix: `p_I ↦ ∏_r v_{r, I_r}`,
    /// row `r` occupying variables `r*n .. (r+1)*n`.
    pub fn diagonal(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidBlocks(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
        }
        let sources = k_subsets(n, k);
        let images = sources
            .iter()
            .map(|s| Monomial::from_vars(k * n, &s.iter().enumerate().map(|(r, &c)| r * n + c - 1).collect::<Vec<_>>()))
            .collect();
        Self::new(k * n, sources, images)
    }

    pub fn num_sources(&self) -> usize {
        self.sources.len()
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn sources(&self) -> &[Vec<usize>] {
        &self.sources
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// Index of `p_I`, if `I` is a source.
    pub fn source_index(&self, subset: &[usize]) -> Option<usize> {
        self.sources.iter().position(|s| s == subset)
    }

    /// Image of a product of Plücker variables given by source indices.
    pub fn image_monomial(&self, vars: &[usize]) -> Result<Monomial> {
        let mut m = Monomial::one(self.target_vars);
        for &v in vars {
            let img = self.images.get(v).ok_or_else(|| Error::UnknownVariable(format!("p#{v}")))?;
            m = m.mul(img);
        }
        Ok(m)
    }

    /// `p13*p24`-style rendering of a Plücker monomial.
    pub fn display_monomial(&self, vars: &[usize]) -> String {
        if vars.is_empty() {
            return "1".into();
        }
        vars.iter()
            .map(|&v| format!("p{}", crate::cellular::edge_label(&self.sources[v])))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// All `k`-subsets of `[n]` (1-based), lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Sorted multisets of size `d` from `0..nvars`, lexicographic.
pub fn multisets(nvars: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, nvars: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..nvars {
            cur.push(i);
            rec(i, nvars, d, cur, out);
            cur.pop();
        }
    }
    rec(0, nvars, d, &mut cur, &mut out);
    out
}

/// `C(nvars + d - 1, d)`, saturating.
pub fn multiset_count(nvars: usize, d: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..d as u128 {
        c = c.saturating_mul(nvars as u128 + i) / (i + 1);
    }
    c
}

/// Degree-`d` Plücker monomials grouped by image; fibers and their members
/// come out in lexicographic order.
fn fibers(map: &PluckerMap, d: usize, budget: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let count = multiset_count(map.num_sources(), d);
    if count > budget as u128 {
        return Err(Error::TooLarge(format!("{count} monomials of degree {d}, budget {budget}")));
    }
    let monos = multisets(map.num_sources(), d);
    let images: Vec<Monomial> = monos.par_iter().map(|m| map.image_monomial(m)).collect::<Result<_>>()?;
    let mut groups: BTreeMap<Monomial, Vec<Vec<usize>>> = BTreeMap::new();
    for (m, img) in monos.into_iter().zip(images) {
        groups.entry(img).or_default().push(m);
    }
    let mut out: Vec<Vec<Vec<usize>>> = groups.into_values().collect();
    out.sort();
    Ok(out)
}

/// The degree-`d` part of the kernel of a Plücker map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSlice {
    pub degree: usize,
    pub monomials: usize,
    pub images: usize,
    pub dimension: usize,
    /// `(root, other)`: the fiber root is its lexicographically smallest member.
    pub binomials: Vec<(Vec<usize>, Vec<usize>)>,
    pub new_minimal_generators: usize,
}

pub fn kernel_slice(map: &PluckerMap, d: usize) -> Result<KernelSlice> {
    kernel_slice_with_budget(map, d, DEFAULT_MONOMIAL_BUDGET)
}

pub fn kernel_slice_with_budget(map: &PluckerMap, d: usize, budget: usize) -> Result<KernelSlice> {
    if d == 0 {
        return Err(Error::InvalidBlocks("kernel degree must be at least 1".into()));
    }
    let fibers = fibers(map, d, budget)?;
    let monomials: usize = fibers.iter().map(Vec::len).sum();
    let binomials: Vec<(Vec<usize>, Vec<usize>)> = fibers
        .iter()
        .flat_map(|f| f[1..].iter().map(move |m| (f[0].clone(), m.clone())))
        .collect();
    let dimension = monomials - fibers.len();

    let lower_span = if d == 1 || dimension == 0 {
        0
    } else {
        let lower = kernel_slice_with_budget(map, d - 1, budget)?;
        let index: BTreeMap<&Vec<usize>, usize> = fibers.iter().flatten().enumerate().map(|(i, m)| (m, i)).collect();
        let mut basis = EchelonBasis::new();
        for (u, v) in &lower.binomials {
            for p in 0..map.num_sources() {
                let (mut a, mut b) = (u.clone(), v.clone());
                a.push(p);
                a.sort_unstable();
                b.push(p);
                b.sort_unstable();
                basis.insert(sparse_row([(index[&a], 1), (index[&b], -1)]));
                if basis.rank() == dimension {
                    break;
                }
            }
        }
        basis.rank()
    };

    Ok(KernelSlice {
        degree: d,
        monomials,
        images: fibers.len(),
        dimension,
        binomials,
        new_minimal_generators: dimension - lower_span,
    })
}

/// Number of distinct images of degree-`d` Plücker monomials (1 for `d = 0`).
pub fn image_count(map: &PluckerMap, d: usize, budget: usize) -> Result<usize> {
    if d == 0 {
        return Ok(1);
    }
    Ok(fibers(map, d, budget)?.len())
}

/// Dimension of the degree-`d` piece of the Plücker algebra of `Gr(k, n)`,
/// by the hook-content formula on the `k × d` rectangle.
pub fn hilbert_dim_rect(k: usize, n: usize, d: usize) -> BigUint {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=k {
        for j in 1..=d {
            num *= BigUint::from(n + j - i);
            den *= BigUint::from((k - i) + (d - j) + 1);
        }
    }
    num / den
}

/// Per-degree comparison of image counts against the Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessReport {
    /// `(d, distinct images, hook-content dimension)`.
    pub rows: Vec<(usize, usize, BigUint)>,
}

impl FlatnessReport {
    pub fn is_flat(&self) -> bool {
        self.rows.iter().all(|(_, got, want)| BigUint::from(*got) == *want)
    }
}

pub fn flatness_check(map: &PluckerMap, k: usize, n: usize, dmax: usize) -> Result<FlatnessReport> {
    let rows = (0..=dmax)
        .map(|d| Ok((d, image_count(map, d, DEFAULT_MONOMIAL_BUDGET)?, hilbert_dim_rect(k, n, d))))
        .collect::<Result<_>>()?;
    Ok(FlatnessReport { rows })
}

/// The three-term Plücker relation `p_ij p_kl − p_ik p_jl + p_il p_jk` of
/// `Gr(2, n)` for `i < j < k < l`, in variables indexed by the 2-subsets
/// of `[n]` in lexicographic order.
pub fn plucker_quadric(n: usize, ijkl: [usize; 4]) -> Result<Polynomial> {
    let [i, j, k, l] = ijkl;
    if !(1 <= i && i < j && j < k && k < l && l <= n) {
        return Err(Error::InvalidColumns(ijkl.to_vec()));
    }
    let pairs = k_subsets(n, 2);
    let idx = |a: usize, b: usize| pairs.iter().position(|p| p[0] == a && p[1] == b).unwrap();
    let nv = pairs.len();
    let term = |c: i64, a: (usize, usize), b: (usize, usize)| (c, Monomial::from_vars(nv, &[idx(a.0, a.1), idx(b.0, b.1)]));
    Ok(Polynomial::from_int_terms(nv, [term(1, (i, j), (k, l)), term(-1, (i, k), (j, l)), term(1, (i, l), (j, k))]))
}

/// Binomial as a signed sparse row, for callers assembling their own ranks.
pub fn binomial_row(index: &BTreeMap<Vec<usize>, usize>, u: &[usize], v: &[usize]) -> Vec<(usize, BigInt)> {
    sparse_row([(index[u], 1), (index[v], -1)])
}

//! Polynomial reduction, Buchberger's criterion and the mechanical check
//! that the maximal minors of the generic 3×n matrix form a Gröbner basis
//! whose initial ideal is the matching-field ideal.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{minor_expand, Monomial, Polynomial, WeightOrder};
use crate::error::{Error, Result};
use crate::feasibility::{is_feasible, Constraint, Relation};
use crate::matching_field::{generator, three_subsets, weight_matrix, BlockStructure, GeneratorTriple};

/// Default bound on division steps for a single reduction.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// Largest polynomial accepted by [`attainable_initial_supports`].
pub const MAX_SUPPORT_TERMS: usize = 12;

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &WeightOrder) -> Result<Polynomial> {
    let (fc, fm) = f.leading_term(order)?;
    let (gc, gm) = g.leading_term(order)?;
    let l = fm.lcm(gm);
    let left = f.mul_term(&(fc.recip()), &l.div_exact(fm)?);
    let right = g.mul_term(&(gc.recip()), &l.div_exact(gm)?);
    Ok(left.sub(&right))
}

/// Full normal form of `f` modulo `basis`.
///
/// Zero basis elements are ignored. Terminates because the order is a
/// well-ordering.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &WeightOrder) -> Polynomial {
    reduce_bounded(f, basis, order, usize::MAX).expect("unbounded reduction cannot exceed its budget")
}

/// Like [`reduce`], but gives up with `BudgetExceeded` after `max_steps`
/// division steps.
pub fn reduce_bounded(f: &Polynomial, basis: &[Polynomial], order: &WeightOrder, max_steps: usize) -> Result<Polynomial> {
    let leads: Vec<(BigRational, Monomial, &Polynomial)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (c, m) = g.leading_term(order).expect("nonzero");
            (c.clone(), m.clone(), g)
        })
        .collect();

    let mut p = f.clone();
    let mut remainder = Polynomial::zero(f.nvars());
    let mut steps = 0usize;
    while !p.is_zero() {
        steps += 1;
        if steps > max_steps {
            return Err(Error::BudgetExceeded(max_steps));
        }
        let (c, m) = {
            let (c, m) = p.leading_term(order)?;
            (c.clone(), m.clone())
        };
        match leads.iter().find(|(_, lm, _)| lm.divides(&m)) {
            Some((lc, lm, g)) => {
                let q = m.div_exact(lm)?;
                p.add_scaled(&(-(c / lc)), &q, g);
            }
            None => {
                p.add_term(-c.clone(), m.clone());
                remainder.add_term(c, m);
            }
        }
    }
    Ok(remainder)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs with coprime leading monomials (they always reduce to zero).
    pub coprime_criterion: bool,
    pub step_limit: usize,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        Self { coprime_criterion: true, step_limit: DEFAULT_STEP_LIMIT }
    }
}

/// A pair whose S-polynomial did not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub residual: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerCheck {
    pub pairs_total: usize,
    pub pairs_skipped_coprime: usize,
    pub pairs_reduced_to_zero: usize,
    /// Failing pairs, sorted by `(i, j)`.
    pub witnesses: Vec<PairWitness>,
}

impl GroebnerCheck {
    pub fn is_groebner(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Buchberger's criterion: every S-pair of `basis` reduces to zero.
pub fn is_groebner(basis: &[Polynomial], order: &WeightOrder, opts: BuchbergerOptions) -> Result<GroebnerCheck> {
    if basis.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let leads: Vec<&Monomial> = basis.iter().map(|g| g.leading_monomial(order)).collect::<Result<_>>()?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    // normal strategy: smaller lcm first
    pairs.sort_by(|&(a, b), &(c, d)| {
        let l1 = leads[a].lcm(leads[b]);
        let l2 = leads[c].lcm(leads[d]);
        l1.degree().cmp(&l2.degree()).then_with(|| order.compare(&l1, &l2)).then_with(|| (a, b).cmp(&(c, d)))
    });

    let outcomes: Vec<Result<Option<PairWitness>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            if opts.coprime_criterion && leads[i].is_coprime(leads[j]) {
                return Ok(None);
            }
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            let r = reduce_bounded(&s, basis, order, opts.step_limit)?;
            Ok(if r.is_zero() { None } else { Some(PairWitness { i, j, residual: r }) })
        })
        .collect();

    let mut witnesses = Vec::new();
    for o in outcomes {
        if let Some(w) = o? {
            witnesses.push(w);
        }
    }
    witnesses.sort_by_key(|w| (w.i, w.j));
    let skipped = if opts.coprime_criterion {
        pairs.iter().filter(|&&(i, j)| leads[i].is_coprime(leads[j])).count()
    } else {
        0
    };
    Ok(GroebnerCheck {
        pairs_total: pairs.len(),
        pairs_skipped_coprime: skipped,
        pairs_reduced_to_zero: pairs.len() - witnesses.len(),
        witnesses,
    })
}

/// Why a minor failed the weight-uniqueness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorFailure {
    /// Several terms share the maximal weight.
    WeightTie { cols: [usize; 3], tied: Vec<Monomial> },
    /// The unique heaviest term is not the matching-field generator.
    WrongTerm { cols: [usize; 3], expected: GeneratorTriple, found: Monomial },
}

/// Outcome of checking that `M_a` is the initial ideal of the maximal minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerReport {
    pub n: usize,
    pub w0: u64,
    /// Every minor has a unique heaviest term (by weight alone) equal to `m_I`.
    pub per_minor_initial_ok: bool,
    pub s_pairs_total: usize,
    pub s_pairs_reduced_to_zero: usize,
    /// Leading monomials of the minors under the full order equal the generators of `M_a`.
    pub leading_terms_match: bool,
    pub initial_ideal_equals_ma: bool,
    pub minor_failures: Vec<MinorFailure>,
    pub pair_failures: Vec<PairWitness>,
    /// `(columns, leading monomial, weight)` per minor, lexicographic in the columns.
    pub leading_terms: Vec<([usize; 3], Monomial, u64)>,
}

impl GroebnerReport {
    pub fn passed(&self) -> bool {
        self.initial_ideal_equals_ma
    }
}

/// Maximal minors of the generic 3×n matrix in lexicographic column order.
pub fn maximal_minors(n: usize) -> Result<Vec<Polynomial>> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    three_subsets(n).into_iter().map(|c| minor_expand(n, c)).collect()
}

/// Mechanical check that the minors are a Gröbner basis under `<_{w_a}` with
/// initial ideal `M_a`.
pub fn verify_initial_ideal(a: &BlockStructure, w0: u64) -> Result<GroebnerReport> {
    verify_initial_ideal_with(a, w0, BuchbergerOptions::default())
}

pub fn verify_initial_ideal_with(a: &BlockStructure, w0: u64, opts: BuchbergerOptions) -> Result<GroebnerReport> {
    let n = a.n();
    let minors = maximal_minors(n)?;
    let order = weight_matrix(a, w0)?;
    let cols = three_subsets(n);

    // (1) unique heaviest term by weight alone
    let mut minor_failures = Vec::new();
    let mut leading_terms = Vec::with_capacity(minors.len());
    for (minor, &c) in minors.iter().zip(&cols) {
        let expected = generator(a, c)?;
        let top = minor.monomials().map(|m| order.weight_of(m)).max().unwrap();
        let heaviest: Vec<Monomial> = minor.monomials().filter(|m| order.weight_of(m) == top).cloned().collect();
        if heaviest.len() > 1 {
            minor_failures.push(MinorFailure::WeightTie { cols: c, tied: heaviest });
        } else if heaviest[0] != expected.monomial(n) {
            minor_failures.push(MinorFailure::WrongTerm { cols: c, expected, found: heaviest[0].clone() });
        }
        let lm = minor.leading_monomial(&order)?.clone();
        let w = order.weight_of(&lm);
        leading_terms.push((c, lm, w));
    }

    // (2) Buchberger
    let check = is_groebner(&minors, &order, opts)?;

    // (3) leading monomials as a set
    let mut leads: Vec<Monomial> = leading_terms.iter().map(|(_, m, _)| m.clone()).collect();
    leads.sort();
    let mut gens: Vec<Monomial> = cols.iter().map(|&c| generator(a, c).map(|t| t.monomial(n))).collect::<Result<_>>()?;
    gens.sort();
    let leading_terms_match = leads == gens;

    let per_minor_initial_ok = minor_failures.is_empty();
    Ok(GroebnerReport {
        n,
        w0,
        per_minor_initial_ok,
        s_pairs_total: check.pairs_total,
        s_pairs_reduced_to_zero: check.pairs_reduced_to_zero,
        leading_terms_match,
        initial_ideal_equals_ma: per_minor_initial_ok && check.is_groebner() && leading_terms_match,
        minor_failures,
        pair_failures: check.witnesses,
        leading_terms,
    })
}

/// Terms of `f` of maximal weight under the integer weight vector `w`.
pub fn weight_initial_form(w: &[i64], f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert_eq!(w.len(), f.nvars(), "weight vector length must match the ring");
    let weigh = |m: &Monomial| -> i128 {
        m.exponents().iter().zip(w).map(|(&e, &wi)| i128::from(e) * i128::from(wi)).sum()
    };
    let top = f.monomials().map(weigh).max().unwrap();
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.terms().filter(|(m, _)| weigh(m) == top).map(|(m, c)| (c.clone(), m.clone())),
    ))
}

/// All term subsets of `f` that are exactly the heaviest terms for some
/// rational weight vector, each listed by monomial in storage order.
///
/// Subsets are returned in increasing size, then lexicographically by term
/// index.
pub fn attainable_initial_supports(f: &Polynomial) -> Result<Vec<Vec<Monomial>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let terms: Vec<&Monomial> = f.monomials().collect();
    let t = terms.len();
    if t > MAX_SUPPORT_TERMS {
        return Err(Error::TooLarge(format!("{t} terms, at most {MAX_SUPPORT_TERMS} supported")));
    }
    let nvars = f.nvars();
    let diff = |a: &Monomial, b: &Monomial| -> Vec<BigInt> {
        a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| BigInt::from(i64::from(x) - i64::from(y))).collect()
    };

    let mut subsets: Vec<u32> = (1u32..(1u32 << t)).collect();
    subsets.sort_by_key(|&mask| (mask.count_ones(), (0..t).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>()));

    let attainable: Vec<bool> = subsets
        .par_iter()
        .map(|&mask| {
            let inside: Vec<usize> = (0..t).filter(|&i| mask & (1 << i) != 0).collect();
            let outside: Vec<usize> = (0..t).filter(|&i| mask & (1 << i) == 0).collect();
            let anchor = terms[inside[0]];
            let mut sys = Vec::new();
            for &i in &inside[1..] {
                sys.push(Constraint::new(diff(anchor, terms[i]), Relation::Eq));
            }
            for &k in &outside {
                sys.push(Constraint::new(diff(anchor, terms[k]), Relation::Gt));
            }
            is_feasible(nvars, &sys)
        })
        .collect();

    Ok(subsets
        .iter()
        .zip(attainable)
        .filter(|(_, ok)| *ok)
        .map(|(&mask, _)| (0..t).filter(|&i| mask & (1 << i) != 0).map(|i| terms[i].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableId;
    use crate::matching_field::compositions;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn s_polynomial_with_itself_is_zero() {
        let a = BlockStructure::new(vec![3, 2]).unwrap();
        let order = weight_matrix(&a, 1).unwrap();
        let f = minor_expand(5, [1, 3, 4]).unwrap();
        assert!(s_polynomial(&f, &f, &order).unwrap().is_zero());
        assert_eq!(s_polynomial(&Polynomial::zero(15), &f, &order).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn coprime_leads_reduce_to_zero() {
        let n = 3;
        let order = weight_matrix(&BlockStructure::diagonal(3).unwrap(), 1).unwrap();
        let f = Polynomial::from_int_terms(9, [(1, Monomial::xyz(n, 1, 2, 3)), (-1, Monomial::xyz(n, 1, 3, 2))]);
        let g = Polynomial::from_int_terms(9, [(1, Monomial::xyz(n, 2, 3, 1)), (1, Monomial::xyz(n, 2, 1, 3))]);
        let lf = f.leading_monomial(&order).unwrap();
        let lg = g.leading_monomial(&order).unwrap();
        if lf.is_coprime(lg) {
            let s = s_polynomial(&f, &g, &order).unwrap();
            assert!(reduce(&s, &[f.clone(), g.clone()], &order).is_zero());
        }
    }

    #[test]
    fn minors_123_124_spair_reduces() {
        for a in compositions(4) {
            let order = weight_matrix(&a, 1).unwrap();
            let minors = maximal_minors(4).unwrap();
            let s = s_polynomial(&minors[0], &minors[1], &order).unwrap();
            assert!(reduce(&s, &minors, &order).is_zero(), "a = {a}");
        }
    }

    #[test]
    fn single_division_step() {
        let n = 3;
        let order = weight_matrix(&BlockStructure::diagonal(3).unwrap(), 1).unwrap();
        let lead = Monomial::xyz(n, 1, 2, 3);
        let other = Monomial::xyz(n, 1, 3, 2);
        let g = Polynomial::from_int_terms(9, [(1, lead.clone()), (-1, other.clone())]);
        assert_eq!(g.leading_monomial(&order).unwrap(), &lead);
        let r = reduce(&Polynomial::monomial(lead), std::slice::from_ref(&g), &order);
        assert_eq!(r, Polynomial::monomial(other));
        assert!(reduce(&g, std::slice::from_ref(&g), &order).is_zero());
    }

    #[test]
    fn reduce_zero_is_zero() {
        let order = WeightOrder::with_natural_precedence(vec![1; 9]).unwrap();
        let g = minor_expand(3, [1, 2, 3]).unwrap();
        assert!(reduce(&Polynomial::zero(9), &[g], &order).is_zero());
    }

    #[test]
    fn reduction_budget() {
        let order = weight_matrix(&BlockStructure::diagonal(3).unwrap(), 1).unwrap();
        let g = minor_expand(3, [1, 2, 3]).unwrap();
        let f = g.mul_term(&q(1), &Monomial::xyz(3, 1, 1, 1)).add(&g.mul_term(&q(2), &Monomial::xyz(3, 2, 2, 2)));
        assert_eq!(reduce_bounded(&f, std::slice::from_ref(&g), &order, 1).unwrap_err(), Error::BudgetExceeded(1));
        assert!(reduce_bounded(&f, &[g], &order, 100).unwrap().is_zero());
    }

    #[test]
    fn two_by_two_minors_of_3x2_are_groebner() {
        // x1y2 - x2y1, x1z2 - x2z1, y1z2 - y2z1 with n = 2
        let n = 2;
        let v = |id: VariableId| id.position(n);
        let mono = |a: VariableId, b: VariableId| Monomial::from_vars(3 * n, &[v(a), v(b)]);
        let (x1, x2, y1, y2, z1, z2) =
            (VariableId::x(1), VariableId::x(2), VariableId::y(1), VariableId::y(2), VariableId::z(1), VariableId::z(2));
        let basis = vec![
            Polynomial::from_int_terms(6, [(1, mono(x1, y2)), (-1, mono(x2, y1))]),
            Polynomial::from_int_terms(6, [(1, mono(x1, z2)), (-1, mono(x2, z1))]),
            Polynomial::from_int_terms(6, [(1, mono(y1, z2)), (-1, mono(y2, z1))]),
        ];
        for weights in [vec![3, 7, 11, 2, 5, 13], vec![1, 2, 4, 8, 16, 32], vec![9, 1, 1, 9, 4, 6]] {
            let order = WeightOrder::with_natural_precedence(weights).unwrap();
            let opts = BuchbergerOptions { coprime_criterion: false, ..Default::default() };
            assert!(is_groebner(&basis, &order, opts).unwrap().is_groebner());
        }
    }

    #[test]
    fn truncated_basis_report_is_consistent() {
        let n = 3;
        let f = Polynomial::from_int_terms(9, [(1, Monomial::xyz(n, 1, 2, 3)), (-1, Monomial::xyz(n, 1, 3, 2))]);
        let g = Polynomial::from_int_terms(9, [(1, Monomial::xyz(n, 1, 3, 2)), (-1, Monomial::xyz(n, 2, 1, 3))]);
        let order = weight_matrix(&BlockStructure::diagonal(3).unwrap(), 1).unwrap();
        let basis = vec![f, g];
        let check = is_groebner(&basis, &order, BuchbergerOptions::default()).unwrap();
        assert_eq!(check.pairs_total, 1);
        assert_eq!(check.pairs_reduced_to_zero + check.witnesses.len(), 1);
        for w in &check.witnesses {
            assert!(!w.residual.is_zero());
            assert_eq!(reduce(&w.residual, &basis, &order), w.residual);
        }
    }

    #[test]
    fn is_groebner_rejects_zero() {
        let order = WeightOrder::with_natural_precedence(vec![1; 9]).unwrap();
        let err = is_groebner(&[Polynomial::zero(9)], &order, BuchbergerOptions::default()).unwrap_err();
        assert_eq!(err, Error::ZeroPolynomial);
    }

    #[test]
    fn verify_small_cases() {
        let a = BlockStructure::new(vec![3, 2]).unwrap();
        let report = verify_initial_ideal(&a, 1).unwrap();
        assert!(report.passed());
        assert!(report.per_minor_initial_ok);
        assert_eq!(report.s_pairs_total, 45);
        assert_eq!(report.s_pairs_reduced_to_zero, 45);

        let d = BlockStructure::diagonal(4).unwrap();
        let report = verify_initial_ideal(&d, 1).unwrap();
        assert!(report.passed());
        for (c, m, _) in &report.leading_terms {
            assert_eq!(m, &Monomial::xyz(4, c[0], c[1], c[2]));
        }
    }

    #[test]
    fn verify_rejects_small_n() {
        let a = BlockStructure::new(vec![2]).unwrap();
        assert_eq!(verify_initial_ideal(&a, 1).unwrap_err(), Error::TooSmall(2));
    }

    #[test]
    fn coprime_criterion_does_not_change_outcome() {
        for n in 3..=4 {
            for a in compositions(n) {
                let with = verify_initial_ideal(&a, 1).unwrap();
                let opts = BuchbergerOptions { coprime_criterion: false, ..Default::default() };
                let without = verify_initial_ideal_with(&a, 1, opts).unwrap();
                assert_eq!(with.passed(), without.passed());
                assert!(without.passed());
            }
        }
    }

    #[test]
    fn weight_initial_form_cases() {
        let f = minor_expand(3, [1, 2, 3]).unwrap();
        assert_eq!(weight_initial_form(&[0; 9], &f).unwrap(), f);
        let w = [1, 2, 3, 10, 20, 30, 100, 200, 300];
        let init = weight_initial_form(&w, &f).unwrap();
        assert_eq!(init.len(), 1);
        assert_eq!(weight_initial_form(&w, &Polynomial::zero(9)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn supports_of_small_polynomials() {
        let x = Monomial::from_exponents(vec![1, 0]);
        let y = Monomial::from_exponents(vec![0, 1]);
        let single = Polynomial::monomial(x.clone());
        assert_eq!(attainable_initial_supports(&single).unwrap().len(), 1);
        let binom = Polynomial::from_int_terms(2, [(1, x), (-1, y)]);
        assert_eq!(attainable_initial_supports(&binom).unwrap().len(), 3);
    }

    #[test]
    fn collinear_exponents_have_no_middle_singleton() {
        // 1 + t + t^2: the middle term is never strictly heaviest
        let p = Polynomial::from_int_terms(
            1,
            [
                (1, Monomial::from_exponents(vec![0])),
                (1, Monomial::from_exponents(vec![1])),
                (1, Monomial::from_exponents(vec![2])),
            ],
        );
        let supports = attainable_initial_supports(&p).unwrap();
        let sizes: Vec<usize> = supports.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 1, 3]);
    }

    #[test]
    fn too_many_terms() {
        let terms = (0..13u32).map(|e| (1, Monomial::from_exponents(vec![e])));
        let p = Polynomial::from_int_terms(1, terms);
        assert!(matches!(attainable_initial_supports(&p), Err(Error::TooLarge(_))));
    }
}

//! Exact monomial and polynomial arithmetic.
//!
//! Monomials are dense exponent vectors over a fixed number of variables.
//! For the generic 3×n matrix the variables are laid out row by row:
//! `x_1..x_n` occupy positions `0..n`, `y_1..y_n` positions `n..2n` and
//! `z_1..z_n` positions `2n..3n`. Other rings (Plücker variables, the
//! relabelled `t` variables) reuse the same types with their own layout.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Row of the generic 3×n matrix a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::X, Family::Y, Family::Z];

    fn row(self) -> usize {
        match self {
            Family::X => 0,
            Family::Y => 1,
            Family::Z => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
        }
    }
}

/// A variable `x_i`, `y_i` or `z_i` with a 1-based column index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    pub family: Family,
    pub index: usize,
}

impl VariableId {
    pub fn new(family: Family, index: usize) -> Self {
        Self { family, index }
    }

    pub fn x(index: usize) -> Self {
        Self::new(Family::X, index)
    }

    pub fn y(index: usize) -> Self {
        Self::new(Family::Y, index)
    }

    pub fn z(index: usize) -> Self {
        Self::new(Family::Z, index)
    }

    /// Position in the dense layout for ambient size `n`.
    pub fn position(self, n: usize) -> usize {
        debug_assert!(self.index >= 1 && self.index <= n, "{self} out of range for n = {n}");
        self.family.row() * n + self.index - 1
    }

    pub fn from_position(n: usize, pos: usize) -> Self {
        assert!(pos < 3 * n, "position {pos} out of range for n = {n}");
        Self::new(Family::ALL[pos / n], pos % n + 1)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// A monomial stored as a dense exponent vector.
///
/// The derived `Ord` compares exponent vectors lexicographically; it is a
/// storage order only. Use [`WeightOrder`] for term-order comparisons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = 1;
        m
    }

    /// Product of the given variables (with repetition) in a ring of `nvars` variables.
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    /// `x_l * y_u * z_v` in the 3n-variable ring.
    pub fn xyz(n: usize, l: usize, u: usize, v: usize) -> Self {
        Self::from_vars(
            3 * n,
            &[VariableId::x(l).position(n), VariableId::y(u).position(n), VariableId::z(v).position(n)],
        )
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with a nonzero exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The single variable of a degree-one monomial.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree() == 1 {
            self.exps.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        Self { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| op(a, b)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.zip_with(other, u32::max)
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, failing with `NotDivisible` when the quotient is not a monomial.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible { dividend: format!("{self}"), divisor: format!("{divisor}") });
        }
        Ok(self.zip_with(divisor, |a, b| a - b))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }

    /// Renders the monomial with a caller-supplied variable naming.
    pub fn display_with<F>(&self, name: F) -> String
    where
        F: Fn(usize) -> String,
    {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(name(i)),
                _ => parts.push(format!("{}^{}", name(i), e)),
            }
        }
        parts.join("*")
    }

    /// Renders the monomial using `x_i`, `y_j`, `z_k` names for ambient size `n`.
    pub fn display_xyz(&self, n: usize) -> String {
        self.display_with(|i| VariableId::from_position(n, i).to_string())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("v{i}")))
    }
}

/// A polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, Monomial)>,
    {
        let mut p = Self::zero(nvars);
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        Self::from_terms(nvars, terms.into_iter().map(|(c, m)| (BigRational::from_integer(BigInt::from(c)), m)))
    }

    pub fn monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Self::from_terms(nvars, [(BigRational::one(), m)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, c: BigRational, m: Monomial) {
        assert_eq!(m.nvars(), self.nvars, "monomial from a different ring");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (om, oc) in &other.terms {
            self.add_term(c * oc, om.mul(m));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(c.clone(), m.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(-c.clone(), m.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    /// Multiplies every term by `c * m`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Self {
        let mut r = Self::zero(self.nvars);
        r.add_scaled(c, m, self);
        r
    }

    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// The greatest term under `order`.
    pub fn leading_term(&self, order: &WeightOrder) -> Result<(&BigRational, &Monomial)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
            .map(|(m, c)| (c, m))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &WeightOrder) -> Result<&Monomial> {
        self.leading_term(order).map(|(_, m)| m)
    }

    pub fn display_with<F>(&self, name: F) -> String
    where
        F: Fn(usize) -> String,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.display_with(&name);
            if abs.is_one() {
                out.push_str(&mono);
            } else if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    pub fn display_xyz(&self, n: usize) -> String {
        self.display_with(|i| VariableId::from_position(n, i).to_string())
    }
}

/// A weight order with a graded reverse-lexicographic tie-break.
///
/// Monomials compare by total weight first, then by total degree, then by
/// grevlex with respect to `precedence` (highest variable first). With all
/// weights positive this is a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrder {
    weights: Vec<u64>,
    precedence: Vec<usize>,
}

impl WeightOrder {
    pub fn new(weights: Vec<u64>, precedence: Vec<usize>) -> Result<Self> {
        let nvars = weights.len();
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeightOrder(format!("weight of variable {i} is zero")));
        }
        let mut seen = vec![false; nvars];
        if precedence.len() != nvars {
            return Err(Error::InvalidWeightOrder(format!(
                "precedence lists {} variables, expected {nvars}",
                precedence.len()
            )));
        }
        for &v in &precedence {
            if v >= nvars || seen[v] {
                return Err(Error::InvalidWeightOrder(format!("precedence is not a permutation (at {v})")));
            }
            seen[v] = true;
        }
        Ok(Self { weights, precedence })
    }

    /// Weight order with the natural precedence `v0 > v1 > ... `.
    pub fn with_natural_precedence(weights: Vec<u64>) -> Result<Self> {
        let n = weights.len();
        Self::new(weights, (0..n).collect())
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, var: usize) -> u64 {
        self.weights[var]
    }

    /// Variables from highest to lowest in the tie-break.
    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn weight_of(&self, m: &Monomial) -> u64 {
        assert_eq!(m.nvars(), self.nvars(), "monomial from a different ring");
        m.exps.iter().zip(&self.weights).map(|(&e, &w)| u64::from(e) * w).sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight_of(a)
            .cmp(&self.weight_of(b))
            .then_with(|| a.degree().cmp(&b.degree()))
            .then_with(|| self.grevlex_tiebreak(a, b))
    }

    fn grevlex_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        // the smaller exponent in the lowest differing variable wins
        for &v in self.precedence.iter().rev() {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Signed six-term expansion of the 3×3 minor of the generic 3×n matrix on
/// columns `cols = [i, j, k]` with `i < j < k`.
pub fn minor_expand(n: usize, cols: [usize; 3]) -> Result<Polynomial> {
    let [i, j, k] = cols;
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(Error::InvalidColumns(cols.to_vec()));
    }
    const PERMS: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([0, 2, 1], -1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([2, 1, 0], -1)];
    let terms = PERMS.iter().map(|(p, sign)| (*sign, Monomial::xyz(n, cols[p[0]], cols[p[1]], cols[p[2]])));
    Ok(Polynomial::from_int_terms(3 * n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, vars: &[VariableId]) -> Monomial {
        Monomial::from_vars(3 * n, &vars.iter().map(|v| v.position(n)).collect::<Vec<_>>())
    }

    #[test]
    fn gcd_lcm_divides() {
        let n = 5;
        let a = Monomial::xyz(n, 1, 3, 5);
        let b = Monomial::xyz(n, 1, 2, 3);
        assert_eq!(a.gcd(&b), m(n, &[VariableId::x(1)]));

        let c = m(n, &[VariableId::x(1), VariableId::y(2)]);
        let d = m(n, &[VariableId::y(2), VariableId::z(4)]);
        assert_eq!(c.lcm(&d), m(n, &[VariableId::x(1), VariableId::y(2), VariableId::z(4)]));

        assert!(c.divides(&b));
        assert!(!b.divides(&c));
    }

    #[test]
    fn div_exact_rejects_non_divisor() {
        let n = 3;
        let a = Monomial::xyz(n, 1, 2, 3);
        let b = m(n, &[VariableId::x(2)]);
        assert!(matches!(a.div_exact(&b), Err(Error::NotDivisible { .. })));
        let c = m(n, &[VariableId::x(1)]);
        assert_eq!(a.div_exact(&c).unwrap(), m(n, &[VariableId::y(2), VariableId::z(3)]));
    }

    #[test]
    fn variable_positions_roundtrip() {
        let n = 7;
        for pos in 0..3 * n {
            assert_eq!(VariableId::from_position(n, pos).position(n), pos);
        }
        assert_eq!(VariableId::from_position(n, 7).to_string(), "y1");
    }

    #[test]
    fn minor_of_3x3() {
        let p = minor_expand(3, [1, 2, 3]).unwrap();
        assert_eq!(p.len(), 6);
        let expect = [
            (1, (1, 2, 3)),
            (-1, (1, 3, 2)),
            (-1, (2, 1, 3)),
            (1, (2, 3, 1)),
            (1, (3, 1, 2)),
            (-1, (3, 2, 1)),
        ];
        for (c, (l, u, v)) in expect {
            assert_eq!(p.coefficient(&Monomial::xyz(3, l, u, v)), BigRational::from_integer(c.into()));
        }
        assert!(p.coefficient_sum().is_zero());
    }

    #[test]
    fn minor_rejects_bad_columns() {
        assert!(matches!(minor_expand(4, [2, 1, 3]), Err(Error::InvalidColumns(_))));
        assert!(matches!(minor_expand(4, [1, 2, 5]), Err(Error::InvalidColumns(_))));
        assert!(matches!(minor_expand(4, [1, 1, 3]), Err(Error::InvalidColumns(_))));
    }

    #[test]
    fn grevlex_tiebreak_prefers_earlier_variable() {
        let n = 3;
        let order = WeightOrder::with_natural_precedence(vec![1; 3 * n]).unwrap();
        let x1 = m(n, &[VariableId::x(1)]);
        let x2 = m(n, &[VariableId::x(2)]);
        assert_eq!(order.compare(&x1, &x2), Ordering::Greater);
        assert_eq!(order.compare(&x1, &x1), Ordering::Equal);
    }

    #[test]
    fn weight_order_validation() {
        assert!(WeightOrder::new(vec![1, 0], vec![0, 1]).is_err());
        assert!(WeightOrder::new(vec![1, 1], vec![0, 0]).is_err());
        assert!(WeightOrder::new(vec![1, 1], vec![0]).is_err());
        assert!(WeightOrder::new(vec![1, 2], vec![1, 0]).is_ok());
    }

    #[test]
    fn leading_term_of_zero_fails() {
        let order = WeightOrder::with_natural_precedence(vec![1; 3]).unwrap();
        assert_eq!(Polynomial::zero(3).leading_term(&order).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn polynomial_display() {
        let p = minor_expand(3, [1, 2, 3]).unwrap();
        let s = p.display_xyz(3);
        assert_eq!(s.matches('*').count(), 12);
        assert_eq!(Polynomial::zero(9).display_xyz(3), "0");
    }
}

use std::fmt;

use crate::algebra::Monomial;

/// A monomial ideal given by its minimal generators.
///
/// Construction removes duplicates and generators divisible by another
/// generator; the original relative order of the survivors is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator from a different ring");
        }
        Self { nvars, generators: minimalize(gens) }
    }

    /// The zero ideal.
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// True if every minimal generator is a single variable.
    pub fn is_generated_by_variables(&self) -> bool {
        self.generators.iter().all(|g| g.as_variable().is_some())
    }

    /// Generators sorted by the storage order, for set-wise comparison.
    pub fn sorted_generators(&self) -> Vec<Monomial> {
        let mut g = self.generators.clone();
        g.sort();
        g
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Drops duplicates and non-minimal elements, preserving first occurrences.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| {
            if h == g {
                j < i
            } else {
                h.divides(g)
            }
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalize_drops_multiples_and_duplicates() {
        let a = Monomial::from_exponents(vec![1, 0, 0]);
        let b = Monomial::from_exponents(vec![1, 1, 0]);
        let c = Monomial::from_exponents(vec![0, 0, 1]);
        let ideal = MonomialIdeal::new(3, vec![b.clone(), a.clone(), c.clone(), a.clone()]);
        assert_eq!(ideal.generators(), &[a.clone(), c.clone()]);
        assert!(ideal.is_generated_by_variables());
        assert!(ideal.contains(&b));
    }

    #[test]
    fn zero_ideal() {
        let z = MonomialIdeal::zero(4);
        assert!(z.is_zero());
        assert!(!z.contains(&Monomial::one(4)));
        assert!(z.is_generated_by_variables());
    }
}

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::Scalar;

/// A canonical monomial: `(generator index, exponent)` pairs in declaration
/// order with positive exponents. The empty monomial is the unit.
///
/// Ordering compares degree first, which makes per-degree listings contiguous.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { degree: 0, factors: Vec::new() }
    }

    pub(crate) fn from_parts(degree: u32, factors: Vec<(usize, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        Monomial { degree, factors }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn exponent(&self, generator: usize) -> u32 {
        self.factors
            .binary_search_by_key(&generator, |(g, _)| *g)
            .map_or(0, |k| self.factors[k].1)
    }

    /// Number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// The generators with multiplicity, in canonical order.
    pub fn word(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|&(g, e)| core::iter::repeat(g).take(e as usize))
            .collect()
    }

    pub(crate) fn max_generator(&self) -> Option<usize> {
        self.factors.last().map(|(g, _)| *g)
    }
}

/// A linear combination of canonical monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: Monomial, c: Scalar) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Adds `c · m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Scalar) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, x) in &other.terms {
            out.add_term(m.clone(), x.clone());
        }
        out
    }

    pub fn minus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, x) in &other.terms {
            out.add_term(m.clone(), -x);
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn negated(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True if zero or every term has degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() as i64 == d)
    }
}

//! The normalized bar construction of a commutative DGA with bracket.
//!
//! A word `[α₁|…|α_s]` has external degree `s`, internal degree `Σ|α_i|`
//! and total degree `s + Σ|α_i|`. The sign weight of an entry is `|α_i| + 1`
//! and `σ(i)` is the sum of the first `i` weights.

mod shuffle;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

pub use shuffle::{walk_count, Walk};

use crate::algebra::{format_terms, odd, AlgebraElement, AlgebraSpec, Monomial};
use crate::field::{FieldSpec, Scalar};
use crate::{Error, Result};

/// A bar word: a sequence of nonunit canonical monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarWord {
    entries: Vec<Monomial>,
}

impl BarWord {
    pub fn empty() -> Self {
        BarWord { entries: Vec::new() }
    }

    /// Returns `None` if some entry is the unit (such words vanish in the
    /// normalized complex).
    pub fn new(entries: Vec<Monomial>) -> Option<Self> {
        entries.iter().all(|m| !m.is_unit()).then_some(BarWord { entries })
    }

    pub fn entries(&self) -> &[Monomial] {
        &self.entries
    }

    pub fn external_degree(&self) -> usize {
        self.entries.len()
    }

    pub fn internal_degree(&self) -> u32 {
        self.entries.iter().map(Monomial::degree).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.entries.len() as i64 + self.internal_degree() as i64
    }

    /// `|α_i| + 1` for each entry.
    pub fn weights(&self) -> Vec<i64> {
        self.entries.iter().map(|m| m.degree() as i64 + 1).collect()
    }

    /// σ(i): the sum of the first `i` weights.
    pub fn sigma(&self, i: usize) -> i64 {
        self.entries[..i].iter().map(|m| m.degree() as i64 + 1).sum()
    }

    pub fn split_at(&self, k: usize) -> (BarWord, BarWord) {
        (
            BarWord { entries: self.entries[..k].to_vec() },
            BarWord { entries: self.entries[k..].to_vec() },
        )
    }

    pub fn concat(&self, other: &BarWord) -> BarWord {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        BarWord { entries }
    }
}

/// A finite linear combination of bar words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BarElement {
    terms: BTreeMap<BarWord, Scalar>,
}

impl BarElement {
    pub fn zero() -> Self {
        BarElement { terms: BTreeMap::new() }
    }

    pub fn from_word(word: BarWord, c: Scalar) -> Self {
        let mut e = BarElement::zero();
        e.add_term(word, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BarWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &BarWord) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: BarWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &BarElement, c: &Scalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn plus(&self, other: &BarElement) -> BarElement {
        let mut out = self.clone();
        for (w, x) in &other.terms {
            out.add_term(w.clone(), x.clone());
        }
        out
    }

    pub fn minus(&self, other: &BarElement) -> BarElement {
        let mut out = self.clone();
        for (w, x) in &other.terms {
            out.add_term(w.clone(), -x);
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> BarElement {
        let mut out = BarElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn negated(&self) -> BarElement {
        BarElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// The common `(s, t)` bidegree; `None` for zero or inhomogeneous elements.
    pub fn bidegree(&self) -> Option<(usize, u32)> {
        let mut it = self.terms.keys().map(|w| (w.external_degree(), w.internal_degree()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// The common total degree; `None` for zero or total-inhomogeneous elements.
    pub fn total_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(BarWord::total_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The largest external degree among the terms.
    pub fn max_external_degree(&self) -> Option<usize> {
        self.terms.keys().map(BarWord::external_degree).max()
    }
}

/// An element of `B ⊗ B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorBarElement {
    terms: BTreeMap<(BarWord, BarWord), Scalar>,
}

impl TensorBarElement {
    pub fn zero() -> Self {
        TensorBarElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BarWord, BarWord), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: BarWord, right: BarWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.remove(&key) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorBarElement, c: &Scalar) {
        for ((l, r), x) in &other.terms {
            self.add_term(l.clone(), r.clone(), x * c);
        }
    }

    /// `Σ c · u ⊗ v` over the terms of both factors.
    pub fn tensor(u: &BarElement, v: &BarElement) -> TensorBarElement {
        let mut out = TensorBarElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                out.add_term(a.clone(), b.clone(), x * y);
            }
        }
        out
    }
}

/// Operations on the bar construction of a fixed algebra.
#[derive(Clone, Debug)]
pub struct BarConstruction {
    algebra: AlgebraSpec,
}

impl BarConstruction {
    pub fn new(algebra: AlgebraSpec) -> Self {
        BarConstruction { algebra }
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// Total-degree shift of the bar bracket: bidegree (−1, n−1).
    pub fn bracket_shift(&self) -> i64 {
        self.algebra.n() - 2
    }

    fn sign(&self, negative: bool) -> Scalar {
        self.algebra.field().sign(negative)
    }

    /// Every basis word with at most `max_s` entries and internal degree at
    /// most `max_t`, ordered by total degree, then external degree, then entries.
    pub fn basis_words(&self, max_s: usize, max_t: u32) -> Vec<BarWord> {
        let basis = self.algebra.augmentation_ideal_basis(max_t);
        let mut layer = alloc::vec![BarWord::empty()];
        let mut out = layer.clone();
        for _ in 0..max_s {
            let mut next = Vec::new();
            for w in &layer {
                for m in &basis {
                    if w.internal_degree() + m.degree() <= max_t {
                        let mut entries = w.entries.clone();
                        entries.push(m.clone());
                        next.push(BarWord { entries });
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort_by(|a, b| (a.total_degree(), a.external_degree(), a).cmp(&(b.total_degree(), b.external_degree(), b)));
        out
    }

    /// The multilinear word `[u₁|…|u_s]`; unit components of the entries are
    /// projected away.
    pub fn word(&self, entries: &[AlgebraElement]) -> BarElement {
        let mut out = BarElement::from_word(BarWord::empty(), self.field().one());
        for u in entries {
            let mut next = BarElement::zero();
            for (w, c) in out.terms() {
                for (m, x) in u.terms() {
                    if m.is_unit() {
                        continue;
                    }
                    let mut entries = w.entries.clone();
                    entries.push(m.clone());
                    next.add_term(BarWord { entries }, c * x);
                }
            }
            out = next;
        }
        out
    }

    /// The word on monomial entries, or zero if some entry is the unit.
    pub fn monomial_word(&self, entries: &[Monomial]) -> BarElement {
        match BarWord::new(entries.to_vec()) {
            Some(w) => BarElement::from_word(w, self.field().one()),
            None => BarElement::zero(),
        }
    }

    /// Adds `c · [w₀..start | replacement | w_end..]` to `out`, expanding
    /// the replacement linearly.
    fn splice(&self, w: &BarWord, start: usize, end: usize, replacement: &AlgebraElement, c: &Scalar, out: &mut BarElement) {
        for (m, x) in replacement.terms() {
            if m.is_unit() {
                continue;
            }
            let mut entries = Vec::with_capacity(w.entries.len() + 1 + start - end);
            entries.extend_from_slice(&w.entries[..start]);
            entries.push(m.clone());
            entries.extend_from_slice(&w.entries[end..]);
            out.add_term(BarWord { entries }, c * x);
        }
    }

    fn linear(&self, u: &BarElement, f: impl Fn(&BarWord, &Scalar, &mut BarElement)) -> BarElement {
        let mut out = BarElement::zero();
        for (w, c) in u.terms() {
            f(w, c, &mut out);
        }
        out
    }

    /// d[α₁|…|α_s] = Σ (−1)^{σ(i−1)} [α₁|…|dα_i|…|α_s], bidegree (0, −1).
    pub fn internal_differential(&self, u: &BarElement) -> BarElement {
        self.linear(u, |w, c, out| {
            for i in 0..w.entries.len() {
                let da = self.algebra.differential_monomial(&w.entries[i]);
                if da.is_zero() {
                    continue;
                }
                let coef = c * &self.sign(odd(w.sigma(i)));
                self.splice(w, i, i + 1, &da, &coef, out);
            }
        })
    }

    /// δ[α₁|…|α_s] = Σ (−1)^{σ(i)} [α₁|…|α_iα_{i+1}|…|α_s], bidegree (−1, 0).
    pub fn external_differential(&self, u: &BarElement) -> BarElement {
        self.linear(u, |w, c, out| {
            for i in 0..w.entries.len().saturating_sub(1) {
                let Some((m, neg)) = self.algebra.multiply_monomials(&w.entries[i], &w.entries[i + 1]) else {
                    continue;
                };
                let coef = c * &self.sign(odd(w.sigma(i + 1)) ^ neg);
                let product = AlgebraElement::from_monomial(m, self.field().one());
                self.splice(w, i, i + 2, &product, &coef, out);
            }
        })
    }

    /// D = d + δ.
    pub fn total_differential(&self, u: &BarElement) -> BarElement {
        self.internal_differential(u).plus(&self.external_differential(u))
    }

    /// Deconcatenation: Δ[α₁|…|α_s] = Σ_k [α₁|…|α_k] ⊗ [α_{k+1}|…|α_s].
    pub fn coproduct(&self, u: &BarElement) -> TensorBarElement {
        let mut out = TensorBarElement::zero();
        for (w, c) in u.terms() {
            for k in 0..=w.entries.len() {
                let (l, r) = w.split_at(k);
                out.add_term(l, r, c.clone());
            }
        }
        out
    }

    /// The shuffle product, signed by σ(φ).
    pub fn shuffle_product(&self, u: &BarElement, v: &BarElement) -> BarElement {
        let mut out = BarElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                self.shuffle_words(a, b, &(x * y), &mut out);
            }
        }
        out
    }

    fn shuffle_words(&self, a: &BarWord, b: &BarWord, c: &Scalar, out: &mut BarElement) {
        let (wa, wb) = (a.weights(), b.weights());
        for walk in Walk::all(a.entries.len(), b.entries.len()) {
            let entries = walk.interleave(&a.entries, &b.entries);
            out.add_term(BarWord { entries }, c * &self.sign(walk.shuffle_sign(&wa, &wb)));
        }
    }

    /// One shuffle of two words: `(−1)^{σ(φ)}` times the interleaved word.
    pub fn shuffle_term(&self, a: &BarWord, b: &BarWord, walk: &Walk) -> Result<BarElement> {
        self.check_walk(a, b, walk)?;
        let entries = walk.interleave(&a.entries, &b.entries);
        let sign = self.sign(walk.shuffle_sign(&a.weights(), &b.weights()));
        Ok(BarElement::from_word(BarWord { entries }, sign))
    }

    fn check_walk(&self, a: &BarWord, b: &BarWord, walk: &Walk) -> Result<()> {
        if walk.p() != a.entries.len() || walk.q() != b.entries.len() {
            return Err(Error::Selection(alloc::format!(
                "walk {walk} is a ({}, {})-shuffle but the words have lengths ({}, {})",
                walk.p(),
                walk.q(),
                a.entries.len(),
                b.entries.len()
            )));
        }
        Ok(())
    }

    /// The bar bracket: a sum over shuffles and their lower-right corners of
    /// the shuffled word with the two corner entries merged by the algebra
    /// bracket, signed by σ(φ) + σ′(φ, c). Bidegree (−1, n−1).
    pub fn bracket(&self, u: &BarElement, v: &BarElement) -> Result<BarElement> {
        let mut out = BarElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                self.bracket_words(a, b, &(x * y), &mut out)?;
            }
        }
        Ok(out)
    }

    fn bracket_words(&self, a: &BarWord, b: &BarWord, c: &Scalar, out: &mut BarElement) -> Result<()> {
        let (p, q) = (a.entries.len(), b.entries.len());
        if p == 0 || q == 0 {
            return Ok(());
        }
        let mut table = Vec::with_capacity(p * q);
        for xk in &a.entries {
            for yl in &b.entries {
                table.push(self.algebra.bracket_monomials(xk, yl)?);
            }
        }
        if table.iter().all(AlgebraElement::is_zero) {
            return Ok(());
        }
        for walk in Walk::all(p, q) {
            for corner in walk.corners() {
                self.corner_term(a, b, &walk, corner, &table[..], c, out);
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn corner_term(
        &self,
        a: &BarWord,
        b: &BarWord,
        walk: &Walk,
        corner: usize,
        table: &[AlgebraElement],
        c: &Scalar,
        out: &mut BarElement,
    ) {
        let (k, l) = walk.counts_before(corner);
        let merged = &table[k * b.entries.len() + l];
        if merged.is_zero() {
            return;
        }
        let (wa, wb) = (a.weights(), b.weights());
        let negative = walk.shuffle_sign(&wa, &wb) ^ walk.corner_sign(corner, &wa, &wb, self.algebra.n());
        let shuffled = BarWord { entries: walk.interleave(&a.entries, &b.entries) };
        self.splice(&shuffled, corner, corner + 2, merged, &(c * &self.sign(negative)), out);
    }

    /// The bracket contribution of a single shuffle and corner.
    pub fn bracket_term(&self, a: &BarWord, b: &BarWord, walk: &Walk, corner: usize) -> Result<BarElement> {
        self.check_walk(a, b, walk)?;
        if !walk.corners().contains(&corner) {
            return Err(Error::Selection(alloc::format!("position {corner} is not a lower-right corner of {walk}")));
        }
        let (k, l) = walk.counts_before(corner);
        let merged = self.algebra.bracket_monomials(&a.entries[k], &b.entries[l])?;
        let mut table = alloc::vec![AlgebraElement::zero(); a.entries.len() * b.entries.len()];
        table[k * b.entries.len() + l] = merged;
        let mut out = BarElement::zero();
        self.corner_term(a, b, walk, corner, &table, &self.field().one(), &mut out);
        Ok(out)
    }

    /// Product in `B ⊗ B`: (x₁⊗x₂)(y₁⊗y₂) = (−1)^{|x₂||y₁|} x₁y₁ ⊗ x₂y₂.
    pub fn tensor_product(&self, u: &TensorBarElement, v: &TensorBarElement) -> TensorBarElement {
        let mut out = TensorBarElement::zero();
        for ((x1, x2), a) in u.terms() {
            for ((y1, y2), b) in v.terms() {
                let c = &(a * b) * &self.sign(odd(x2.total_degree() * y1.total_degree()));
                let left = self.shuffle_product(&BarElement::from_word(x1.clone(), self.field().one()), &BarElement::from_word(y1.clone(), self.field().one()));
                let right = self.shuffle_product(&BarElement::from_word(x2.clone(), self.field().one()), &BarElement::from_word(y2.clone(), self.field().one()));
                accumulate_tensor(&mut out, &left, &right, &c);
            }
        }
        out
    }

    /// Bracket in `B ⊗ B` with bracket total degree `m = n − 2`:
    /// [x₁⊗x₂, y₁⊗y₂] = (−1)^{|x₂|(|y₁|+m)} [x₁,y₁] ⊗ x₂y₂
    ///                 + (−1)^{(|x₂|+m)|y₁|} x₁y₁ ⊗ [x₂,y₂].
    pub fn tensor_bracket(&self, u: &TensorBarElement, v: &TensorBarElement) -> Result<TensorBarElement> {
        let m = self.bracket_shift();
        let one = self.field().one();
        let mut out = TensorBarElement::zero();
        for ((x1, x2), a) in u.terms() {
            for ((y1, y2), b) in v.terms() {
                let ab = a * b;
                let (dx2, dy1) = (x2.total_degree(), y1.total_degree());
                let [x1, x2, y1, y2] = [x1, x2, y1, y2].map(|w| BarElement::from_word(w.clone(), one.clone()));

                let first = self.bracket(&x1, &y1)?;
                if !first.is_zero() {
                    let rest = self.shuffle_product(&x2, &y2);
                    accumulate_tensor(&mut out, &first, &rest, &(&ab * &self.sign(odd(dx2 * (dy1 + m)))));
                }
                let second = self.bracket(&x2, &y2)?;
                if !second.is_zero() {
                    let front = self.shuffle_product(&x1, &y1);
                    accumulate_tensor(&mut out, &front, &second, &(&ab * &self.sign(odd((dx2 + m) * dy1))));
                }
            }
        }
        Ok(out)
    }

    pub fn format_word(&self, w: &BarWord) -> String {
        let mut s = String::from("[");
        for (i, m) in w.entries.iter().enumerate() {
            if i > 0 {
                s.push('|');
            }
            s.push_str(&self.algebra.format_monomial(m));
        }
        s.push(']');
        s
    }

    pub fn format_element(&self, u: &BarElement) -> String {
        format_terms(u.terms().map(|(w, c)| (self.format_word(w), false, c)))
    }

    pub fn format_tensor(&self, u: &TensorBarElement) -> String {
        format_terms(
            u.terms()
                .map(|((l, r), c)| (alloc::format!("{} ⊗ {}", self.format_word(l), self.format_word(r)), false, c)),
        )
    }
}

fn accumulate_tensor(out: &mut TensorBarElement, left: &BarElement, right: &BarElement, c: &Scalar) {
    for (l, x) in left.terms() {
        for (r, y) in right.terms() {
            out.add_term(l.clone(), r.clone(), &(c * x) * y);
        }
    }
}

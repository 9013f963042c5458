//! Finitely generated graded-commutative algebras with a differential and a
//! Poisson bracket, both extended from tables on generators.
//!
//! Relations are monomial only: odd generators square to zero away from
//! characteristic 2, and a generator may carry a truncation `g^e = 0`.

mod monomial;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::field::{FieldSpec, Scalar};
use crate::{Error, Result};

pub use monomial::{AlgebraElement, Monomial};

/// `(-1)^k` as a parity bit.
#[inline]
pub(crate) fn odd(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    /// `Some(e)` imposes `g^e = 0`.
    pub truncation: Option<u32>,
}

impl GeneratorSpec {
    pub fn new(name: &str, degree: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, truncation: None }
    }

    pub fn truncated(name: &str, degree: u32, truncation: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, truncation: Some(truncation) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Inner {
    field: FieldSpec,
    n: i64,
    generators: Vec<GeneratorSpec>,
    differential: Vec<AlgebraElement>,
    /// Keyed by `(i, j)` with `i <= j`.
    bracket: BTreeMap<(usize, usize), AlgebraElement>,
    missing_brackets_are_zero: bool,
}

/// A connected graded-commutative differential Poisson algebra with bracket
/// of degree `n - 1`. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec(Arc<Inner>);

impl AlgebraSpec {
    /// An algebra with zero differential and zero bracket.
    pub fn new(field: FieldSpec, n: i64, generators: Vec<GeneratorSpec>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBracketShift(n));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            if g.degree == 0 {
                return Err(Error::NonPositiveDegree(g.name.clone()));
            }
            if let Some(e) = g.truncation {
                if e < 2 {
                    return Err(Error::InvalidTruncation { name: g.name.clone(), truncation: e });
                }
            }
        }
        let differential = alloc::vec![AlgebraElement::zero(); generators.len()];
        Ok(AlgebraSpec(Arc::new(Inner {
            field,
            n,
            generators,
            differential,
            bracket: BTreeMap::new(),
            missing_brackets_are_zero: true,
        })))
    }

    /// Sets `d(generator) = value`; the value must have degree `|generator| - 1`
    /// and lie in the augmentation ideal.
    pub fn with_differential(mut self, generator: &str, value: AlgebraElement) -> Result<Self> {
        let g = self.generator_index(generator)?;
        self.check_element(&value)?;
        let expected = self.0.generators[g].degree as i64 - 1;
        if !value.is_homogeneous_of(expected) {
            return Err(Error::InhomogeneousEntry { entry: alloc::format!("d({generator})"), expected });
        }
        if !self.augmentation(&value).is_zero() {
            return Err(Error::InhomogeneousEntry { entry: alloc::format!("d({generator})"), expected });
        }
        Arc::make_mut(&mut self.0).differential[g] = value;
        Ok(self)
    }

    /// Sets `[g, h] = value`; `[h, g]` follows by antisymmetry.
    pub fn with_bracket(mut self, g: &str, h: &str, value: AlgebraElement) -> Result<Self> {
        let (i, j) = (self.generator_index(g)?, self.generator_index(h)?);
        self.check_element(&value)?;
        let expected = self.generator_degree(i) as i64 + self.generator_degree(j) as i64 + self.0.n - 1;
        if !value.is_homogeneous_of(expected) {
            return Err(Error::InhomogeneousEntry { entry: alloc::format!("[{g},{h}]"), expected });
        }
        let (key, value) = if i <= j {
            ((i, j), value)
        } else {
            let flip = !odd(self.shifted(i) * self.shifted(j));
            ((j, i), value.scaled(&self.0.field.sign(flip)))
        };
        let inner = Arc::make_mut(&mut self.0);
        if value.is_zero() {
            inner.bracket.remove(&key);
        } else {
            inner.bracket.insert(key, value);
        }
        Ok(self)
    }

    /// Makes brackets on pairs absent from the table an error instead of zero.
    pub fn with_undefined_brackets(mut self) -> Self {
        Arc::make_mut(&mut self.0).missing_brackets_are_zero = false;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }

    /// The stored `n`; the bracket has degree `n - 1`.
    pub fn n(&self) -> i64 {
        self.0.n
    }

    pub fn n_is_odd(&self) -> bool {
        odd(self.0.n)
    }

    pub fn bracket_degree(&self) -> i64 {
        self.0.n - 1
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.0.generators
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.0
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn generator_degree(&self, g: usize) -> u32 {
        self.0.generators[g].degree
    }

    pub fn differential_table(&self) -> &[AlgebraElement] {
        &self.0.differential
    }

    pub fn bracket_table(&self) -> impl Iterator<Item = ((usize, usize), &AlgebraElement)> {
        self.0.bracket.iter().map(|(k, v)| (*k, v))
    }

    pub fn has_zero_differential(&self) -> bool {
        self.0.differential.iter().all(AlgebraElement::is_zero)
    }

    pub fn has_zero_bracket(&self) -> bool {
        self.0.bracket.is_empty() && self.0.missing_brackets_are_zero
    }

    fn shifted(&self, g: usize) -> i64 {
        self.generator_degree(g) as i64 + self.0.n - 1
    }

    fn signs_matter(&self) -> bool {
        self.0.field.characteristic() != 2
    }

    fn max_exponent(&self, g: usize) -> u32 {
        let spec = &self.0.generators[g];
        let mut cap = spec.truncation.map_or(u32::MAX, |e| e - 1);
        if spec.degree % 2 == 1 && self.signs_matter() {
            cap = cap.min(1);
        }
        cap
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        match m.max_generator() {
            Some(g) if g >= self.0.generators.len() => Err(Error::AlgebraMismatch),
            _ => Ok(()),
        }
    }

    fn check_element(&self, u: &AlgebraElement) -> Result<()> {
        for (m, c) in u.terms() {
            self.check_monomial(m)?;
            if c.field() != self.0.field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::from_monomial(Monomial::unit(), self.0.field.one())
    }

    pub fn scalar(&self, c: Scalar) -> AlgebraElement {
        AlgebraElement::from_monomial(Monomial::unit(), c)
    }

    pub fn generator_monomial(&self, g: usize) -> Monomial {
        Monomial::from_parts(self.generator_degree(g), alloc::vec![(g, 1)])
    }

    pub fn generator(&self, name: &str) -> Result<AlgebraElement> {
        let g = self.generator_index(name)?;
        Ok(AlgebraElement::from_monomial(self.generator_monomial(g), self.0.field.one()))
    }

    /// Sorts a word of generators into declaration order. Returns the
    /// canonical monomial with its Koszul sign (`true` = negative), or
    /// `None` when the product vanishes.
    pub fn canonicalize(&self, word: &[&str]) -> Result<Option<(Monomial, bool)>> {
        let indices = word
            .iter()
            .map(|name| self.generator_index(name))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.canonicalize_indices(&indices))
    }

    pub fn canonicalize_indices(&self, word: &[usize]) -> Option<(Monomial, bool)> {
        let mut acc = (Monomial::unit(), false);
        for &g in word {
            let (m, s) = self.multiply_monomials(&acc.0, &self.generator_monomial(g))?;
            acc = (m, acc.1 ^ s);
        }
        Some(acc)
    }

    /// Product of canonical monomials with its Koszul sign, or `None` if it vanishes.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        if a.is_unit() {
            return Some((b.clone(), false));
        }
        if b.is_unit() {
            return Some((a.clone(), false));
        }
        // Moving each factor of `b` left past the factors of `a` with larger index.
        let mut sign = false;
        if self.signs_matter() {
            let af = a.factors();
            let mut suffix_odd = alloc::vec![0u32; af.len() + 1];
            for k in (0..af.len()).rev() {
                let (g, e) = af[k];
                suffix_odd[k] = suffix_odd[k + 1] + if self.generator_degree(g) % 2 == 1 { e } else { 0 };
            }
            let mut k = 0;
            for &(h, e) in b.factors() {
                if self.generator_degree(h) % 2 == 0 {
                    continue;
                }
                while k < af.len() && af[k].0 <= h {
                    k += 1;
                }
                if (e * suffix_odd[k]) % 2 == 1 {
                    sign = !sign;
                }
            }
        }

        let mut factors = Vec::with_capacity(a.factors().len() + b.factors().len());
        let (mut i, mut j) = (0, 0);
        let (af, bf) = (a.factors(), b.factors());
        while i < af.len() || j < bf.len() {
            let next = if j == bf.len() || (i < af.len() && af[i].0 < bf[j].0) {
                i += 1;
                af[i - 1]
            } else if i == af.len() || bf[j].0 < af[i].0 {
                j += 1;
                bf[j - 1]
            } else {
                i += 1;
                j += 1;
                (af[i - 1].0, af[i - 1].1 + bf[j - 1].1)
            };
            if next.1 > self.max_exponent(next.0) {
                return None;
            }
            factors.push(next);
        }
        Some((Monomial::from_parts(a.degree() + b.degree(), factors), sign))
    }

    fn multiply_unchecked(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                if let Some((m, s)) = self.multiply_monomials(a, b) {
                    out.add_term(m, (x * y).signed(s));
                }
            }
        }
        out
    }

    pub fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        Ok(self.multiply_unchecked(u, v))
    }

    pub fn differential_monomial(&self, m: &Monomial) -> AlgebraElement {
        let word = m.word();
        let mut out = AlgebraElement::zero();
        let one = self.0.field.one();
        let mut prefix_degree = 0i64;
        for (k, &g) in word.iter().enumerate() {
            let dg = &self.0.differential[g];
            if !dg.is_zero() {
                let (prefix, _) = self.canonicalize_indices(&word[..k]).expect("sub-words of a nonzero monomial survive");
                let (suffix, _) = self.canonicalize_indices(&word[k + 1..]).expect("sub-words of a nonzero monomial survive");
                let left = self.multiply_unchecked(&AlgebraElement::from_monomial(prefix, one.clone()), dg);
                let term = self.multiply_unchecked(&left, &AlgebraElement::from_monomial(suffix, one.clone()));
                out.add_scaled(&term, &self.0.field.sign(odd(prefix_degree)));
            }
            prefix_degree += self.generator_degree(g) as i64;
        }
        out
    }

    /// The differential extended as a degree −1 derivation.
    pub fn differential(&self, u: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(u)?;
        let mut out = AlgebraElement::zero();
        for (m, c) in u.terms() {
            out.add_scaled(&self.differential_monomial(m), c);
        }
        Ok(out)
    }

    fn table_bracket(&self, g: usize, h: usize) -> Result<AlgebraElement> {
        let (key, flip) = if g <= h {
            ((g, h), false)
        } else {
            ((h, g), !odd(self.shifted(g) * self.shifted(h)))
        };
        match self.0.bracket.get(&key) {
            Some(v) => Ok(v.scaled(&self.0.field.sign(flip))),
            None if self.0.missing_brackets_are_zero => Ok(AlgebraElement::zero()),
            None => Err(Error::BracketUndefined(
                self.0.generators[g].name.clone(),
                self.0.generators[h].name.clone(),
            )),
        }
    }

    /// Splits off the first generator: `m = g · rest` with no sign.
    fn peel(&self, m: &Monomial) -> (usize, Monomial) {
        let (g, e) = m.factors()[0];
        let mut rest: Vec<(usize, u32)> = m.factors().to_vec();
        if e == 1 {
            rest.remove(0);
        } else {
            rest[0].1 -= 1;
        }
        (g, Monomial::from_parts(m.degree() - self.generator_degree(g), rest))
    }

    /// Bracket of canonical monomials. A product on the left is first moved
    /// to the right by antisymmetry; the Poisson identity then peels one
    /// generator at a time off the right argument.
    pub fn bracket_monomials(&self, u: &Monomial, v: &Monomial) -> Result<AlgebraElement> {
        if u.is_unit() || v.is_unit() {
            return Ok(AlgebraElement::zero());
        }
        let n1 = self.0.n - 1;
        let su = u.degree() as i64 + n1;
        let sv = v.degree() as i64 + n1;
        let one = self.0.field.one();
        if u.length() >= 2 {
            // [u, v] = -(-1)^{su sv} [v, g u'],
            // [v, g u'] = [v, g] u' + (-1)^{|g| sv} g [v, u'].
            let (g, rest) = self.peel(u);
            let gm = self.generator_monomial(g);
            let first = self.multiply_unchecked(
                &self.bracket_monomials(v, &gm)?,
                &AlgebraElement::from_monomial(rest.clone(), one.clone()),
            );
            let second = self.multiply_unchecked(
                &AlgebraElement::from_monomial(gm, one.clone()),
                &self.bracket_monomials(v, &rest)?,
            );
            let mut out = first;
            out.add_scaled(&second, &self.0.field.sign(odd(self.generator_degree(g) as i64 * sv)));
            return Ok(out.scaled(&self.0.field.sign(!odd(su * sv))));
        }
        let g = u.factors()[0].0;
        if v.length() >= 2 {
            // [g, h v'] = [g, h] v' + (-1)^{|h| su} h [g, v'].
            let (h, rest) = self.peel(v);
            let hm = self.generator_monomial(h);
            let mut out = self.multiply_unchecked(
                &self.table_bracket(g, h)?,
                &AlgebraElement::from_monomial(rest.clone(), one.clone()),
            );
            let second = self.multiply_unchecked(
                &AlgebraElement::from_monomial(hm, one.clone()),
                &self.bracket_monomials(u, &rest)?,
            );
            out.add_scaled(&second, &self.0.field.sign(odd(self.generator_degree(h) as i64 * su)));
            return Ok(out);
        }
        self.table_bracket(g, v.factors()[0].0)
    }

    pub fn bracket(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        let mut out = AlgebraElement::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                out.add_scaled(&self.bracket_monomials(a, b)?, &(x * y));
            }
        }
        Ok(out)
    }

    /// Coefficient of the unit.
    pub fn augmentation(&self, u: &AlgebraElement) -> Scalar {
        u.coefficient(&Monomial::unit())
            .cloned()
            .unwrap_or_else(|| self.0.field.zero())
    }

    /// All canonical monomials of degree `d`, in ascending monomial order.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut factors = Vec::new();
        self.enumerate(0, d, &mut factors, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, g: usize, remaining: u32, factors: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            let degree = factors.iter().map(|&(h, e)| self.generator_degree(h) * e).sum();
            out.push(Monomial::from_parts(degree, factors.clone()));
            return;
        }
        if g == self.0.generators.len() {
            return;
        }
        let deg = self.generator_degree(g);
        let cap = self.max_exponent(g).min(remaining / deg);
        for e in 0..=cap {
            if e > 0 {
                factors.push((g, e));
            }
            self.enumerate(g + 1, remaining - e * deg, factors, out);
            if e > 0 {
                factors.pop();
            }
        }
    }

    /// All nonunit basis monomials of degree at most `max_degree`.
    pub fn augmentation_ideal_basis(&self, max_degree: u32) -> Vec<Monomial> {
        (1..=max_degree).flat_map(|d| self.basis(d)).collect()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        let mut s = String::new();
        for (k, &(g, e)) in m.factors().iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(&self.0.generators[g].name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn format_element(&self, u: &AlgebraElement) -> String {
        format_terms(u.terms().map(|(m, c)| (self.format_monomial(m), m.is_unit(), c)))
    }
}

/// Formats `Σ c · label` as `2*a - b + 1/2*c`; unit labels print as the bare coefficient.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (String, bool, &'a Scalar)>,
{
    let mut s = String::new();
    for (label, is_unit, c) in terms {
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        if s.is_empty() {
            if negative {
                s.push('-');
            }
        } else {
            s.push_str(if negative { " - " } else { " + " });
        }
        if is_unit {
            s.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            s.push_str(&label);
        } else {
            let _ = write!(s, "{magnitude}*{label}");
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

use alloc::vec::Vec;

use super::{FieldSpec, Scalar, SparseVec};

/// A subspace of kⁿ kept as a fully reduced row-echelon basis, sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new() }
    }

    pub fn spanned_by<'a, I>(field: FieldSpec, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().unwrap().0)
    }

    /// The remainder of `v` after clearing every pivot column of the basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for row in &self.rows {
            let pivot = row.leading().unwrap().0;
            if let Some(c) = out.get(pivot).cloned() {
                out.axpy(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("leading entry is nonzero"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                row.axpy(&-c, &r);
            }
        }
        let at = self.rows.partition_point(|row| row.leading().unwrap().0 < pivot);
        self.rows.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    /// A linear combination of the basis with the given coefficients.
    pub fn combination(&self, coefficients: &[Scalar]) -> SparseVec {
        let mut out = SparseVec::new();
        for (row, c) in self.rows.iter().zip(coefficients) {
            out.axpy(c, row);
        }
        out
    }
}

/// The quotient `numerator / denominator` for `denominator ⊆ numerator`,
/// with representatives reduced against the denominator and against each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    denominator: Subspace,
    representatives: Subspace,
}

impl Quotient {
    pub fn new<'a, I>(numerator: I, denominator: Subspace) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut representatives = Subspace::zero(denominator.field, denominator.ambient);
        for v in numerator {
            representatives.insert(&denominator.reduce(v));
        }
        Quotient { denominator, representatives }
    }

    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        self.representatives.basis()
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Coordinates of the class of `v`, or `None` when `v` is not in
    /// `span(representatives) + denominator`.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let r = self.denominator.reduce(v);
        let coords: Vec<Scalar> = self
            .representatives
            .pivots()
            .map(|p| r.get(p).cloned().unwrap_or_else(|| self.denominator.field.zero()))
            .collect();
        let rest = self.representatives.reduce(&r);
        rest.is_zero().then_some(coords)
    }

    pub fn vector(&self, coordinates: &[Scalar]) -> SparseVec {
        self.representatives.combination(coordinates)
    }
}

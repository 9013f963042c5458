use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{FieldSpec, Scalar};
use crate::{Error, Result};

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds a vector from arbitrary pairs; repeated indices are summed.
    pub fn from_entries<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in iter {
            match map.remove(&i) {
                Some(old) => {
                    let s = &old + &v;
                    if !s.is_zero() {
                        map.insert(i, s);
                    }
                }
                None if !v.is_zero() => {
                    map.insert(i, v);
                }
                None => {}
            }
        }
        SparseVec { entries: map.into_iter().collect() }
    }

    pub fn unit(index: usize, field: FieldSpec) -> Self {
        SparseVec { entries: alloc::vec![(index, field.one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn last_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = core::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v * c));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = &x + &(y * c);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        if let Some((_, v)) = other.leading() {
            out.axpy(&-v.field().one(), other);
        }
        out
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect(),
        }
    }

    /// Keeps only indices in `[start, end)`, re-based at `start`.
    pub fn restricted(&self, start: usize, end: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < end)
                .map(|(i, v)| (i - start, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        let mut out = alloc::vec![field.zero(); len];
        for (i, v) in &self.entries {
            if *i < len {
                out[*i] = v.clone();
            }
        }
        out
    }
}

/// A rows × cols matrix stored as a map of its nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix { field, rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone())?;
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut m = SparseMatrix::new(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter() {
                m.set(i, j, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::Selection(alloc::format!(
                "entry ({row}, {col}) outside a {}x{} matrix",
                self.rows,
                self.cols
            )));
        }
        if value.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Scalar> {
        self.entries.get(&(row, col))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = alloc::vec![Vec::new(); self.rows];
        for ((i, j), v) in &self.entries {
            rows[*i].push((*j, v.clone()));
        }
        rows.into_iter().map(SparseVec::from_entries).collect()
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|((i, j), a)| v.get(*j).map(|x| (*i, a * x))),
        )
    }
}

/// Reduced row-echelon data of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    /// One vector per free column, with a `1` in that column.
    pub kernel_basis: Vec<SparseVec>,
    /// Nonzero rows of the reduced row-echelon form, ordered by pivot.
    pub rref: Vec<SparseVec>,
}

/// Gauss–Jordan elimination. Pivots are taken column by column from the
/// left, choosing the smallest remaining row index with a nonzero entry.
pub fn row_reduce(m: &SparseMatrix) -> RowReduction {
    let field = m.field;
    let mut pending: Vec<Option<SparseVec>> = m.row_vectors().into_iter().map(Some).collect();
    let mut rref: Vec<SparseVec> = Vec::new();
    let mut pivot_columns = Vec::new();

    for col in 0..m.cols {
        let Some(pick) = pending
            .iter()
            .position(|r| r.as_ref().is_some_and(|r| r.get(col).is_some()))
        else {
            continue;
        };
        let row = pending[pick].take().unwrap();
        let inv = row.get(col).unwrap().inv().expect("pivot is nonzero");
        let row = row.scale(&inv);
        for other in pending.iter_mut().flatten() {
            if let Some(c) = other.get(col).cloned() {
                other.axpy(&-c, &row);
            }
        }
        for done in rref.iter_mut() {
            if let Some(c) = done.get(col).cloned() {
                done.axpy(&-c, &row);
            }
        }
        rref.push(row);
        pivot_columns.push(col);
    }

    let mut kernel_basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..m.cols {
        if next_pivot < pivot_columns.len() && pivot_columns[next_pivot] == free {
            next_pivot += 1;
            continue;
        }
        let mut entries = alloc::vec![(free, field.one())];
        for (row, &pc) in rref.iter().zip(&pivot_columns) {
            if let Some(c) = row.get(free) {
                entries.push((pc, -c));
            }
        }
        kernel_basis.push(SparseVec::from_entries(entries));
    }

    RowReduction { rank: rref.len(), pivot_columns, kernel_basis, rref }
}

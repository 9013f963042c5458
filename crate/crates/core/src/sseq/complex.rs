use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{AlgebraSpec, Monomial};
use crate::bar::{BarConstruction, BarElement, BarWord};
use crate::field::{row_reduce, FieldSpec, SparseMatrix, SparseVec, Subspace};
use crate::{Error, Result};

/// Default limit on the number of words in a single bidegree.
pub const DEFAULT_MAX_BASIS: usize = 50_000;

/// Caps on external degree `S`, reported total degree `T` and page `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub max_external: usize,
    pub max_total: usize,
    pub max_page: usize,
}

impl Window {
    pub fn new(max_external: usize, max_total: usize, max_page: usize) -> Self {
        Window { max_external, max_total, max_page }
    }
}

#[derive(Clone, Debug)]
struct Block {
    words: Vec<BarWord>,
    index: BTreeMap<BarWord, usize>,
    /// `prefix[f]` = number of words with external degree ≤ f, for f ≤ S.
    prefix: Vec<usize>,
    /// No word of this total degree has external degree above S.
    complete: bool,
    /// Column `j` is D applied to word `j`, in the basis of the block below.
    boundary: Vec<SparseVec>,
}

/// The total complex truncated to `s ≤ S`, with total degrees `0..=T+1`.
///
/// Within each total degree the words are ordered by external degree and
/// then lexicographically, so `F_p` is always a prefix of the basis. The
/// extra degree `T + 1` supplies the boundaries needed at degree `T`.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    bar: BarConstruction,
    window: Window,
    blocks: Vec<Block>,
}

impl FilteredComplex {
    pub fn assemble(algebra: AlgebraSpec, window: Window, max_basis: usize) -> Result<Self> {
        let bar = BarConstruction::new(algebra);
        let top = window.max_total + 1;
        let s_cap = window.max_external;

        let mut by_internal: Vec<Vec<Monomial>> = (0..=top).map(|d| bar.algebra().basis(d as u32)).collect();
        by_internal[0].clear();

        // words[s][t]
        let mut words: Vec<Vec<Vec<BarWord>>> = alloc::vec![alloc::vec![Vec::new(); top + 1]];
        words[0][0].push(BarWord::empty());
        for s in 1..=s_cap.min(top / 2) {
            let mut level = alloc::vec![Vec::new(); top + 1];
            for t in 0..=top - s {
                let mut bucket = Vec::new();
                for d in 1..=t {
                    for w in &words[s - 1][t - d] {
                        for m in &by_internal[d] {
                            let mut entries = w.entries().to_vec();
                            entries.push(m.clone());
                            bucket.push(BarWord::new(entries).expect("augmentation ideal entries"));
                        }
                    }
                    if bucket.len() > max_basis {
                        return Err(Error::BasisBlowUp { s, t, size: bucket.len(), limit: max_basis });
                    }
                }
                bucket.sort();
                level[t] = bucket;
            }
            words.push(level);
        }

        let complete = long_words_absent(&by_internal, s_cap, top);
        let mut blocks: Vec<Block> = Vec::with_capacity(top + 1);
        for m in 0..=top {
            let mut list = Vec::new();
            let mut prefix = Vec::with_capacity(s_cap + 1);
            for s in 0..=s_cap {
                if s < words.len() && s <= m {
                    list.extend(words[s][m - s].iter().cloned());
                }
                prefix.push(list.len());
            }
            let index = list.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            blocks.push(Block { words: list, index, prefix, complete: complete[m], boundary: Vec::new() });
        }
        for m in 1..=top {
            let one = bar.field().one();
            let columns = blocks[m]
                .words
                .iter()
                .map(|w| {
                    let image = bar.total_differential(&BarElement::from_word(w.clone(), one.clone()));
                    SparseVec::from_entries(image.terms().map(|(v, c)| (blocks[m - 1].index[v], c.clone())))
                })
                .collect();
            blocks[m].boundary = columns;
        }
        Ok(FilteredComplex { bar, window, blocks })
    }

    pub fn bar(&self) -> &BarConstruction {
        &self.bar
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        self.bar.algebra()
    }

    pub fn field(&self) -> FieldSpec {
        self.bar.field()
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Highest total degree with an assembled basis (`T + 1`).
    pub fn top_degree(&self) -> usize {
        self.blocks.len() - 1
    }

    /// The basis words of total degree `m`, or an empty slice beyond `T + 1`.
    pub fn words(&self, m: usize) -> &[BarWord] {
        self.blocks.get(m).map_or(&[], |b| &b.words)
    }

    pub fn dimension(&self, m: usize) -> usize {
        self.words(m).len()
    }

    /// Number of words of bidegree `(s, t)` within the window.
    pub fn bidegree_dimension(&self, s: usize, t: usize) -> usize {
        self.words(s + t).iter().filter(|w| w.external_degree() == s).count()
    }

    /// True when every word of total degree `m` has external degree ≤ S.
    pub fn is_complete(&self, m: usize) -> bool {
        self.blocks.get(m).is_some_and(|b| b.complete)
    }

    /// True when `F_f` in total degree `m` is fully enumerated.
    pub fn known(&self, m: i64, f: i64) -> bool {
        if m < 0 || f < 0 {
            return true;
        }
        let m = m as usize;
        m < self.blocks.len() && (f as usize <= self.window.max_external || self.blocks[m].complete)
    }

    /// `dim F_f` in total degree `m` (clamped to the enumerated words).
    pub fn filtration_size(&self, m: usize, f: i64) -> usize {
        let Some(b) = self.blocks.get(m) else { return 0 };
        if f < 0 {
            0
        } else {
            b.prefix[(f as usize).min(self.window.max_external)]
        }
    }

    /// D on a coordinate vector of total degree `m` (`m ≥ 1`).
    pub fn boundary(&self, m: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        if m == 0 {
            return out;
        }
        for (j, c) in v.iter() {
            out.axpy(c, &self.blocks[m].boundary[j]);
        }
        out
    }

    /// Matrix of D from degree `m` to `m − 1`, restricted to columns `< cols`
    /// and rows in `rows.0..rows.1` (re-based).
    fn boundary_block(&self, m: usize, cols: usize, rows: (usize, usize)) -> SparseMatrix {
        let columns: Vec<SparseVec> = self.blocks[m].boundary[..cols]
            .iter()
            .map(|c| c.restricted(rows.0, rows.1))
            .collect();
        SparseMatrix::from_columns(self.field(), rows.1 - rows.0, &columns).expect("block indices are in range")
    }

    /// `Z^r_p = F_p ∩ D⁻¹(F_{p−r})` in total degree `m`; `r = None` means ∞.
    pub fn cycles(&self, m: usize, p: i64, r: Option<i64>) -> Subspace {
        let ambient = self.dimension(m);
        let cols = self.filtration_size(m, p);
        let floor = r.map_or(-1, |r| p - r);
        if m == 0 || (r.is_some() && floor >= p) {
            return basis_prefix(self.field(), ambient, cols);
        }
        let lo = self.filtration_size(m - 1, floor);
        let hi = self.filtration_size(m - 1, p).max(lo);
        if lo == hi || cols == 0 {
            return basis_prefix(self.field(), ambient, cols);
        }
        let rr = row_reduce(&self.boundary_block(m, cols, (lo, hi)));
        Subspace::spanned_by(self.field(), ambient, &rr.kernel_basis)
    }

    /// `B^r_p = F_p ∩ D(F_{p+r})` in total degree `m`; `r = None` means ∞.
    pub fn boundaries(&self, m: usize, p: i64, r: Option<i64>) -> Subspace {
        let ambient = self.dimension(m);
        if m + 1 >= self.blocks.len() || p < 0 {
            return Subspace::zero(self.field(), ambient);
        }
        let cols = match r {
            Some(r) => self.filtration_size(m + 1, p + r),
            None => self.dimension(m + 1),
        };
        let lo = self.filtration_size(m, p);
        let hi = self.dimension(m);
        let sources: Vec<SparseVec> = if lo == hi {
            (0..cols).map(|j| SparseVec::unit(j, self.field())).collect()
        } else {
            row_reduce(&self.boundary_block(m + 1, cols, (lo, hi))).kernel_basis
        };
        let images: Vec<SparseVec> = sources.iter().map(|v| self.boundary(m + 1, v)).collect();
        Subspace::spanned_by(self.field(), ambient, &images)
    }

    /// Rank of D from degree `m` to `m − 1`.
    pub fn boundary_rank(&self, m: usize) -> usize {
        if m == 0 || m >= self.blocks.len() {
            return 0;
        }
        let rows = self.dimension(m - 1);
        row_reduce(&self.boundary_block(m, self.dimension(m), (0, rows))).rank
    }

    /// Dimensions of `H_m(tot B, D)` for `m ≤ T`; `None` where the truncation
    /// cannot see every word of degree `m` or `m + 1`.
    pub fn tor_dimensions(&self) -> BTreeMap<usize, Option<usize>> {
        (0..=self.window.max_total)
            .map(|m| {
                let safe = self.is_complete(m) && self.is_complete(m + 1);
                let dim = safe.then(|| self.dimension(m) - self.boundary_rank(m) - self.boundary_rank(m + 1));
                (m, dim)
            })
            .collect()
    }

    /// Coordinates of a homogeneous element of total degree `m`.
    pub fn to_vector(&self, m: usize, u: &BarElement) -> Result<SparseVec> {
        let block = self.blocks.get(m).ok_or(Error::NotHomogeneous(m))?;
        let mut entries = Vec::with_capacity(u.num_terms());
        for (w, c) in u.terms() {
            if w.total_degree() != m as i64 {
                return Err(Error::NotHomogeneous(m));
            }
            let &j = block.index.get(w).ok_or(Error::Unknown {
                r: 0,
                p: w.external_degree() as i64,
                q: w.internal_degree() as i64,
            })?;
            entries.push((j, c.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn to_element(&self, m: usize, v: &SparseVec) -> BarElement {
        let mut out = BarElement::zero();
        for (j, c) in v.iter() {
            out.add_term(self.blocks[m].words[j].clone(), c.clone());
        }
        out
    }
}

fn basis_prefix(field: FieldSpec, ambient: usize, len: usize) -> Subspace {
    let units: Vec<SparseVec> = (0..len).map(|j| SparseVec::unit(j, field)).collect();
    Subspace::spanned_by(field, ambient, &units)
}

/// `complete[m]`: no word of total degree `m` has more than `s_cap` entries.
/// Entry weights are `d + 1` for each internal degree `d` with a nonzero
/// augmentation-ideal basis.
fn long_words_absent(by_internal: &[Vec<Monomial>], s_cap: usize, top: usize) -> Vec<bool> {
    let weights: Vec<usize> = (1..by_internal.len())
        .filter(|&d| !by_internal[d].is_empty())
        .map(|d| d + 1)
        .collect();
    // reach[k][m]: some word with exactly k entries has total degree m.
    let mut reach = alloc::vec![alloc::vec![false; top + 1]; top / 2 + 2];
    reach[0][0] = true;
    for k in 1..reach.len() {
        for m in 0..=top {
            reach[k][m] = weights.iter().any(|&w| w <= m && reach[k - 1][m - w]);
        }
    }
    (0..=top).map(|m| (s_cap + 1..reach.len()).all(|k| !reach[k][m])).collect()
}

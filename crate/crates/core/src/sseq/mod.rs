//! The spectral sequence of the external-degree filtration on `tot B(A)`.
//!
//! Filtration is increasing: `F_p` is spanned by words with at most `p`
//! entries and D does not raise it. Pages use
//! `Z^r_p = F_p ∩ D⁻¹(F_{p−r})`, `B^r_p = F_p ∩ D(F_{p+r})` and
//! `E^r_p = Z^r_p / (Z^{r−1}_{p−1} + B^{r−1}_p)`, so that `d^r` has
//! bidegree `(−r, r−1)`, `E⁰ = B(A)` with `d⁰ = d`, and `d¹` is induced by δ.

mod complex;
mod page;

pub use complex::{FilteredComplex, Window, DEFAULT_MAX_BASIS};
pub use page::{Page, PageClass, PageGroup, SpectralSequence};

#[cfg(test)]
mod tests;

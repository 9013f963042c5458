use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::complex::{FilteredComplex, Window};
use crate::algebra::AlgebraSpec;
use crate::bar::BarElement;
use crate::field::{Quotient, Scalar, SparseVec, Subspace};
use crate::{Error, Result};

/// `E^r_{p,q}` as the quotient `Z^r_p / (Z^{r−1}_{p−1} + B^{r−1}_p)` in
/// total degree `p + q`.
#[derive(Clone, Debug)]
pub struct PageGroup {
    p: i64,
    q: i64,
    cycles: Subspace,
    quotient: Quotient,
    representatives: Vec<BarElement>,
}

impl PageGroup {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn dimension(&self) -> usize {
        self.quotient.dim()
    }

    /// Basis representatives, in pivot order.
    pub fn representatives(&self) -> &[BarElement] {
        &self.representatives
    }

    /// The subspace `Z^r_p` in which representatives live.
    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }
}

/// One page: every group inside the safe region. Absent bidegrees with
/// `p, q ≥ 0` are unknown; bidegrees with `p < 0` or `q < 0` are zero.
#[derive(Clone, Debug)]
pub struct Page {
    r: Option<usize>,
    groups: BTreeMap<(i64, i64), PageGroup>,
}

impl Page {
    /// The page index; `None` for E^∞.
    pub fn r(&self) -> Option<usize> {
        self.r
    }

    pub fn group(&self, p: i64, q: i64) -> Option<&PageGroup> {
        self.groups.get(&(p, q))
    }

    pub fn groups(&self) -> impl Iterator<Item = &PageGroup> {
        self.groups.values()
    }

    /// `Some(dim)` inside the safe region or off the first quadrant, `None` when unknown.
    pub fn dimension(&self, p: i64, q: i64) -> Option<usize> {
        if p < 0 || q < 0 {
            return Some(0);
        }
        self.groups.get(&(p, q)).map(PageGroup::dimension)
    }

    pub fn dimensions(&self) -> BTreeMap<(i64, i64), usize> {
        self.groups.iter().map(|(k, g)| (*k, g.dimension())).collect()
    }

    pub fn is_known(&self, p: i64, q: i64) -> bool {
        p < 0 || q < 0 || self.groups.contains_key(&(p, q))
    }
}

/// A class on a finite page, carried by a representative in `Z^r_{p,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageClass {
    pub r: usize,
    pub p: i64,
    pub q: i64,
    pub representative: BarElement,
}

impl PageClass {
    pub fn total_degree(&self) -> i64 {
        self.p + self.q
    }
}

/// Pages `E^0 … E^R` and `E^∞` of the external-degree filtration.
#[derive(Clone, Debug)]
pub struct SpectralSequence {
    complex: FilteredComplex,
    pages: Vec<Page>,
    infinity: Page,
}

impl SpectralSequence {
    pub fn compute(algebra: AlgebraSpec, window: Window, max_basis: usize) -> Result<Self> {
        Ok(SpectralSequence::new(FilteredComplex::assemble(algebra, window, max_basis)?))
    }

    pub fn new(complex: FilteredComplex) -> Self {
        let pages = (0..=complex.window().max_page).map(|r| build_page(&complex, Some(r))).collect();
        let infinity = build_page(&complex, None);
        SpectralSequence { complex, pages, infinity }
    }

    pub fn complex(&self) -> &FilteredComplex {
        &self.complex
    }

    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    pub fn page(&self, r: usize) -> Result<&Page> {
        self.pages.get(r).ok_or(Error::PageOutOfRange(r))
    }

    pub fn infinity(&self) -> &Page {
        &self.infinity
    }

    /// First `r ≤ R` whose dimensions agree with E^∞ wherever both are known.
    pub fn stable_at(&self) -> Option<usize> {
        self.pages.iter().position(|page| {
            self.infinity
                .groups()
                .all(|g| page.dimension(g.p, g.q).is_none_or(|d| d == g.dimension()))
        })
    }

    fn group(&self, r: usize, p: i64, q: i64) -> Result<Option<&PageGroup>> {
        if p < 0 || q < 0 {
            return Ok(None);
        }
        self.page(r)?.group(p, q).map(Some).ok_or(Error::Unknown { r, p, q })
    }

    fn zero_class(&self, r: usize, p: i64, q: i64) -> PageClass {
        PageClass { r, p, q, representative: BarElement::zero() }
    }

    /// Validates `representative ∈ Z^r_{p,q}`.
    pub fn class(&self, r: usize, p: i64, q: i64, representative: BarElement) -> Result<PageClass> {
        match self.group(r, p, q)? {
            None if representative.is_zero() => Ok(self.zero_class(r, p, q)),
            None => Err(Error::NotACycle { r, p, q }),
            Some(g) => {
                let v = self.complex.to_vector((p + q) as usize, &representative)?;
                if !g.cycles.contains(&v) {
                    return Err(Error::NotACycle { r, p, q });
                }
                Ok(PageClass { r, p, q, representative })
            }
        }
    }

    /// The basis classes of `E^r_{p,q}`.
    pub fn basis_classes(&self, r: usize, p: i64, q: i64) -> Result<Vec<PageClass>> {
        Ok(match self.group(r, p, q)? {
            None => Vec::new(),
            Some(g) => g
                .representatives
                .iter()
                .map(|rep| PageClass { r, p, q, representative: rep.clone() })
                .collect(),
        })
    }

    /// Coordinates of a class in the basis of its group.
    pub fn coordinates(&self, c: &PageClass) -> Result<Vec<Scalar>> {
        let Some(g) = self.group(c.r, c.p, c.q)? else {
            return Ok(Vec::new());
        };
        let v = self.complex.to_vector(c.total_degree() as usize, &c.representative)?;
        g.quotient.coordinates(&v).ok_or(Error::NotACycle { r: c.r, p: c.p, q: c.q })
    }

    pub fn is_zero_class(&self, c: &PageClass) -> Result<bool> {
        Ok(self.coordinates(c)?.iter().all(Scalar::is_zero))
    }

    /// Projects a chain in `Z^r_p` to its class, with the normalized representative.
    fn project(&self, r: usize, p: i64, q: i64, chain: &BarElement) -> Result<PageClass> {
        let Some(g) = self.group(r, p, q)? else {
            return Ok(self.zero_class(r, p, q));
        };
        let v = self.complex.to_vector((p + q) as usize, chain)?;
        let coords = g.quotient.coordinates(&v).ok_or(Error::NotACycle { r, p, q })?;
        let mut representative = BarElement::zero();
        for (c, rep) in coords.iter().zip(&g.representatives) {
            representative.add_scaled(rep, c);
        }
        Ok(PageClass { r, p, q, representative })
    }

    /// The class with its representative normalized against the group basis.
    pub fn normalize(&self, c: &PageClass) -> Result<PageClass> {
        self.project(c.r, c.p, c.q, &c.representative)
    }

    /// `d^r`, of bidegree `(−r, r − 1)`, induced by D.
    pub fn differential(&self, c: &PageClass) -> Result<PageClass> {
        self.group(c.r, c.p, c.q)?;
        let r = c.r as i64;
        let image = self.complex.bar().total_differential(&c.representative);
        self.project(c.r, c.p - r, c.q + r - 1, &image)
    }

    /// The induced shuffle product, landing in `E^r_{p₁+p₂, q₁+q₂}`.
    pub fn product(&self, a: &PageClass, b: &PageClass) -> Result<PageClass> {
        self.same_page(a, b)?;
        let chain = self.complex.bar().shuffle_product(&a.representative, &b.representative);
        self.project(a.r, a.p + b.p, a.q + b.q, &chain)
    }

    /// The induced bar bracket, landing in `E^r_{p₁+p₂−1, q₁+q₂+n−1}`.
    pub fn bracket(&self, a: &PageClass, b: &PageClass) -> Result<PageClass> {
        self.same_page(a, b)?;
        let chain = self.complex.bar().bracket(&a.representative, &b.representative)?;
        let shift = self.complex.algebra().bracket_degree();
        self.project(a.r, a.p + b.p - 1, a.q + b.q + shift, &chain)
    }

    fn same_page(&self, a: &PageClass, b: &PageClass) -> Result<()> {
        if a.r != b.r {
            return Err(Error::Selection(alloc::format!("classes live on pages {} and {}", a.r, b.r)));
        }
        self.group(a.r, a.p, a.q)?;
        self.group(b.r, b.p, b.q)?;
        Ok(())
    }

    pub fn format_class(&self, c: &PageClass) -> alloc::string::String {
        self.complex.bar().format_element(&c.representative)
    }
}

/// Whether `E^r_{p,m−p}` (or E^∞ for `r = None`) is fully determined by the truncation.
pub(crate) fn is_safe(fc: &FilteredComplex, r: Option<usize>, p: i64, m: i64) -> bool {
    let w = fc.window();
    if p < 0 || p > m || p as usize > w.max_external || m as usize > w.max_total {
        return false;
    }
    match r {
        Some(r) => {
            let r = r as i64;
            fc.known(m - 1, p) && fc.known(m, p + r.max(1) - 1) && fc.known(m + 1, p + r - 1)
        }
        None => fc.known(m - 1, p) && fc.is_complete(m as usize) && fc.is_complete(m as usize + 1),
    }
}

fn build_page(fc: &FilteredComplex, r: Option<usize>) -> Page {
    let mut groups = BTreeMap::new();
    let w = fc.window();
    for m in 0..=w.max_total as i64 {
        for p in 0..=m.min(w.max_external as i64) {
            if is_safe(fc, r, p, m) {
                groups.insert((p, m - p), build_group(fc, r.map(|r| r as i64), p, m as usize));
            }
        }
    }
    Page { r, groups }
}

fn build_group(fc: &FilteredComplex, r: Option<i64>, p: i64, m: usize) -> PageGroup {
    let cycles = fc.cycles(m, p, r);
    let lower = fc.cycles(m, p - 1, r.map(|r| r - 1));
    let boundaries = fc.boundaries(m, p, r.map(|r| r - 1));
    let quotient = Quotient::new(cycles.basis(), lower.sum(&boundaries));
    let representatives = quotient
        .representatives()
        .iter()
        .map(|v: &SparseVec| fc.to_element(m, v))
        .collect();
    PageGroup { p, q: m as i64 - p, cycles, quotient, representatives }
}

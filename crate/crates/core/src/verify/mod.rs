//! Exhaustive identity checks with explicit witnesses.
//!
//! Every check sweeps basis tuples in order of increasing total degree, so
//! the first recorded failure is a smallest witness.

mod algebra;
mod bar;
mod page;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use algebra::check_algebra_axioms;
pub use bar::check_bar_axioms;
pub use page::{check_page_axioms, PageCheckOptions};

/// At most this many failing tuples are kept per axiom; the count is exact.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    Algebra,
    Bar,
    Page,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Algebra => "algebra",
            Scope::Bar => "bar",
            Scope::Page => "page",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A failing tuple: the inputs and both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub id: &'static str,
    pub scope: Scope,
    pub statement: &'static str,
    /// Tuples evaluated.
    pub tested: usize,
    /// Tuples not evaluated because a group they touch is outside the safe region.
    pub skipped: usize,
    /// Total number of failing tuples.
    pub failed: usize,
    /// The first failures in sweep order.
    pub failures: Vec<Failure>,
}

impl AxiomReport {
    pub(crate) fn new(id: &'static str, scope: Scope, statement: &'static str) -> Self {
        AxiomReport { id, scope, statement, tested: 0, skipped: 0, failed: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Counts one tuple; builds the witness only on failure.
    pub(crate) fn record<F>(&mut self, ok: bool, witness: F)
    where
        F: FnOnce() -> Failure,
    {
        self.tested += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(witness());
            }
        }
    }

    /// Counts one tuple whose evaluation raised an error.
    pub(crate) fn record_error(&mut self, inputs: Vec<String>, message: String) {
        self.record(false, || Failure { inputs, lhs: message, rhs: String::from("(not evaluated)") });
    }

    pub(crate) fn skip(&mut self) {
        self.skipped += 1;
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[AxiomReport]) -> bool {
    reports.iter().all(AxiomReport::passed)
}

/// Sign and indexing conventions, as printed at the top of every report.
pub fn conventions() -> Vec<(&'static str, &'static str)> {
    alloc::vec![
        ("entry weight", "|α|+1; σ(i) is the sum of the first i weights of a word"),
        ("internal differential", "d[α₁|…|α_s] = Σ_i (−1)^σ(i−1) [α₁|…|dα_i|…|α_s]"),
        ("external differential", "δ[α₁|…|α_s] = Σ_i (−1)^σ(i) [α₁|…|α_i·α_{i+1}|…|α_s]"),
        ("shuffle sign", "σ(φ) = Σ (|x_i|+1)(|y_j|+1) over pairs with x_i placed after y_j"),
        (
            "corner sign",
            "σ′(φ,i) = n·(Σ (|x_j|+1) over x entries placed after position i+1 + Σ (|y_j|+1) over y entries placed before position i)",
        ),
        (
            "tensor bracket",
            "[x₁⊗x₂, y₁⊗y₂] = (−1)^{|x₂|(|y₁|+m)} [x₁,y₁]⊗x₂y₂ + (−1)^{(|x₂|+m)|y₁|} x₁y₁⊗[x₂,y₂], m = n−2, total degrees",
        ),
        ("algebra bracket shift", "n−1: [u,v] = −(−1)^{(|u|+n−1)(|v|+n−1)} [v,u]"),
        ("algebra differential on brackets", "d[u,v] = [du,v] + (−1)^{n−1+|u|} [u,dv]"),
        ("bar bracket shift", "bidegree (−1, n−1), total shift m = n−2 in antisymmetry, Poisson and Jacobi"),
        ("bar differential on brackets", "D[u,v] = [Du,v] + (−1)^{n+|u|} [u,Dv], |u| total degree; same sign for d and δ"),
        ("filtration", "F_p = words with at most p entries (increasing)"),
        (
            "pages",
            "Z^r_p = F_p ∩ D⁻¹F_{p−r}, B^r_p = F_p ∩ D(F_{p+r}), E^r_p = Z^r_p / (Z^{r−1}_{p−1} + B^{r−1}_p), d^r of bidegree (−r, r−1)",
        ),
        ("bar tuple caps", "each word has s ≤ S; the combined internal degree of a tuple is ≤ T"),
    ]
}

/// Tuples of indices into `items`, keeping those accepted by `keep` and
/// ordering by `weight` (stable, so ties keep lexicographic order).
pub(crate) fn tuples<K, W>(len: usize, arity: usize, keep: K, weight: W) -> Vec<Vec<usize>>
where
    K: Fn(&[usize]) -> bool,
    W: Fn(&[usize]) -> i64,
{
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(arity);
    fn rec<K: Fn(&[usize]) -> bool>(len: usize, arity: usize, cur: &mut Vec<usize>, keep: &K, out: &mut Vec<Vec<usize>>) {
        if cur.len() == arity {
            if keep(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for i in 0..len {
            cur.push(i);
            rec(len, arity, cur, keep, out);
            cur.pop();
        }
    }
    rec(len, arity, &mut current, &keep, &mut out);
    out.sort_by_key(|t| weight(t));
    out
}

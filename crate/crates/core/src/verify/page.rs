use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{tuples, AxiomReport, Failure, Scope};
use crate::algebra::odd;
use crate::bar::BarElement;
use crate::field::{row_reduce, Scalar, SparseMatrix, SparseVec};
use crate::sseq::{PageClass, SpectralSequence};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PageCheckOptions {
    pub seed: u64,
    /// Perturbation trials per basis class.
    pub trials: usize,
}

impl Default for PageCheckOptions {
    fn default() -> Self {
        PageCheckOptions { seed: 0, trials: 100 }
    }
}

/// Page-level identities on a computed spectral sequence.
pub fn check_page_axioms(ss: &SpectralSequence, options: PageCheckOptions) -> Vec<AxiomReport> {
    let ctx = Ctx { ss };
    let mut reports = alloc::vec![ctx.chain_leibniz(), ctx.generator_brackets()];
    if ss.complex().algebra().has_zero_differential() {
        reports.push(ctx.e1_structure_constants());
    }
    reports.push(ctx.page_leibniz());
    reports.push(ctx.product_leibniz());
    reports.push(ctx.differential_squares());
    reports.push(ctx.iterated_homology());
    reports.push(ctx.monotone());
    reports.push(ctx.convergence());
    if ss.complex().algebra().has_zero_differential() {
        reports.push(ctx.higher_differentials_vanish());
    }
    reports.push(ctx.representative_independence(options));
    reports
}

struct Ctx<'a> {
    ss: &'a SpectralSequence,
}

/// Outcome of evaluating both sides of a page identity.
enum Eval {
    Compared { ok: bool, lhs: String, rhs: String },
    Unknown,
    Failed(String),
}

impl<'a> Ctx<'a> {
    fn n(&self) -> i64 {
        self.ss.complex().algebra().n()
    }

    fn sign(&self, k: i64) -> Scalar {
        self.ss.complex().field().sign(odd(k))
    }

    fn describe(&self, c: &PageClass) -> String {
        alloc::format!("E^{}_{{{},{}}} {}", c.r, c.p, c.q, self.ss.format_class(c))
    }

    fn coords(&self, c: &PageClass) -> Result<Vec<Scalar>> {
        self.ss.coordinates(c)
    }

    fn show_coords(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        alloc::format!("({})", parts.join(", "))
    }

    /// `a + c·b` for classes in the same group.
    fn combine(&self, a: &PageClass, b: &PageClass, c: &Scalar) -> PageClass {
        let mut rep = a.representative.clone();
        rep.add_scaled(&b.representative, c);
        PageClass { r: a.r, p: a.p, q: a.q, representative: rep }
    }

    fn compare(&self, lhs: Result<PageClass>, rhs: Result<PageClass>) -> Eval {
        let pair = lhs.and_then(|l| rhs.map(|r| (l, r)));
        let (l, r) = match pair {
            Ok(p) => p,
            Err(Error::Unknown { .. }) => return Eval::Unknown,
            Err(e) => return Eval::Failed(e.to_string()),
        };
        if (l.p, l.q) != (r.p, r.q) {
            return Eval::Compared {
                ok: false,
                lhs: alloc::format!("({}, {})", l.p, l.q),
                rhs: alloc::format!("({}, {})", r.p, r.q),
            };
        }
        match (self.coords(&l), self.coords(&r)) {
            (Ok(a), Ok(b)) => Eval::Compared { ok: a == b, lhs: Self::show_coords(&a), rhs: Self::show_coords(&b) },
            (Err(Error::Unknown { .. }), _) | (_, Err(Error::Unknown { .. })) => Eval::Unknown,
            (Err(e), _) | (_, Err(e)) => Eval::Failed(e.to_string()),
        }
    }

    fn apply(report: &mut AxiomReport, eval: Eval, inputs: impl FnOnce() -> Vec<String>) {
        match eval {
            Eval::Compared { ok, lhs, rhs } => report.record(ok, || Failure { inputs: inputs(), lhs, rhs }),
            Eval::Unknown => report.skip(),
            Eval::Failed(msg) => report.record_error(inputs(), msg),
        }
    }

    /// Basis classes of a page, ordered by total degree then filtration.
    fn basis(&self, r: usize) -> Vec<PageClass> {
        let mut out: Vec<PageClass> = Vec::new();
        let Ok(page) = self.ss.page(r) else { return out };
        for g in page.groups() {
            out.extend(self.ss.basis_classes(r, g.p(), g.q()).unwrap_or_default());
        }
        out.sort_by_key(|c| (c.p + c.q, c.p));
        out
    }

    fn chain_leibniz(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.chain-leibniz",
            Scope::Page,
            "D[x,y] = [Dx,y] + (−1)^{n+|x|} [x,Dy] on chains of the window",
        );
        let fc = self.ss.complex();
        let bar = fc.bar();
        let t_cap = fc.window().max_total;
        let words: Vec<_> = (0..=t_cap).flat_map(|m| fc.words(m).iter().cloned()).collect();
        let total: Vec<i64> = words.iter().map(|w| w.total_degree()).collect();
        let pairs = tuples(
            words.len(),
            2,
            |t| total[t[0]] + total[t[1]] <= t_cap as i64,
            |t| total[t[0]] + total[t[1]],
        );
        let one = fc.field().one();
        for t in pairs {
            let u = BarElement::from_word(words[t[0]].clone(), one.clone());
            let v = BarElement::from_word(words[t[1]].clone(), one.clone());
            let inputs = || alloc::vec![bar.format_element(&u), bar.format_element(&v)];
            let outcome = (|| -> Result<(BarElement, BarElement)> {
                let lhs = bar.total_differential(&bar.bracket(&u, &v)?);
                let mut rhs = bar.bracket(&bar.total_differential(&u), &v)?;
                rhs.add_scaled(&bar.bracket(&u, &bar.total_differential(&v))?, &self.sign(self.n() + total[t[0]]));
                Ok((lhs, rhs))
            })();
            match outcome {
                Ok((lhs, rhs)) => report.record(lhs == rhs, || Failure {
                    inputs: inputs(),
                    lhs: bar.format_element(&lhs),
                    rhs: bar.format_element(&rhs),
                }),
                Err(e) => report.record_error(inputs(), e.to_string()),
            }
        }
        report
    }

    fn generator_brackets(&self) -> AxiomReport {
        let mut report =
            AxiomReport::new("page.generator-bracket", Scope::Page, "[[x],[y]] = [[x,y]] on E¹ for generators x, y");
        let fc = self.ss.complex();
        let spec = fc.algebra();
        let bar = fc.bar();
        let gens = spec.generators().len();
        for g in 0..gens {
            for h in 0..gens {
                let x = spec.generator(&spec.generators()[g].name).expect("declared generator");
                let y = spec.generator(&spec.generators()[h].name).expect("declared generator");
                let inputs = || alloc::vec![spec.format_element(&x), spec.format_element(&y)];
                let class_of = |u: &crate::algebra::AlgebraElement| -> Result<PageClass> {
                    let rep = bar.word(core::slice::from_ref(u));
                    let t = u.degree().map_or(0, |d| d as i64);
                    self.ss.class(1, 1, t, rep)
                };
                let (cx, cy) = match (class_of(&x), class_of(&y)) {
                    (Ok(a), Ok(b)) => (a, b),
                    // A generator with nonzero differential does not survive to E¹.
                    (Err(Error::NotACycle { .. }), _) | (_, Err(Error::NotACycle { .. })) => {
                        report.skip();
                        continue;
                    }
                    (Err(Error::Unknown { .. }), _) | (_, Err(Error::Unknown { .. })) => {
                        report.skip();
                        continue;
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        report.record_error(inputs(), e.to_string());
                        continue;
                    }
                };
                let lhs = self.ss.bracket(&cx, &cy);
                let rhs = spec.bracket(&x, &y).and_then(|xy| {
                    let t = (x.degree().unwrap_or(0) + y.degree().unwrap_or(0)) as i64 + self.n() - 1;
                    self.ss.class(1, 1, t, bar.word(&[xy]))
                });
                Self::apply(&mut report, self.compare(lhs, rhs), inputs);
            }
        }
        report
    }

    fn e1_structure_constants(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.e1-structure-constants",
            Scope::Page,
            "with d = 0 the E¹ bracket of word classes has the bar bracket's coefficients",
        );
        let bar = self.ss.complex().bar();
        let basis = self.basis(1);
        for a in &basis {
            for b in &basis {
                let inputs = || alloc::vec![self.describe(a), self.describe(b)];
                let induced = match self.ss.bracket(a, b).and_then(|c| self.coords(&c).map(|v| (c, v))) {
                    Ok(x) => x,
                    Err(Error::Unknown { .. }) => {
                        report.skip();
                        continue;
                    }
                    Err(e) => {
                        report.record_error(inputs(), e.to_string());
                        continue;
                    }
                };
                let (target, coords) = induced;
                let chain = match bar.bracket(&a.representative, &b.representative) {
                    Ok(c) => c,
                    Err(e) => {
                        report.record_error(inputs(), e.to_string());
                        continue;
                    }
                };
                let reps = self.ss.basis_classes(1, target.p, target.q).unwrap_or_default();
                let direct: Option<Vec<Scalar>> = reps
                    .iter()
                    .map(|rc| {
                        let mut terms = rc.representative.terms();
                        match (terms.next(), terms.next()) {
                            (Some((w, c)), None) if c.is_one() => {
                                Some(chain.coefficient(w).cloned().unwrap_or_else(|| bar.field().zero()))
                            }
                            _ => None,
                        }
                    })
                    .collect();
                match direct {
                    Some(direct) => report.record(direct == coords, || Failure {
                        inputs: inputs(),
                        lhs: Self::show_coords(&coords),
                        rhs: Self::show_coords(&direct),
                    }),
                    None => report.record_error(inputs(), "E¹ basis representative is not a single word".into()),
                }
            }
        }
        report
    }

    fn page_leibniz(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.leibniz",
            Scope::Page,
            "d^r[u,v] = [d^r u,v] + (−1)^{n+|u|} [u,d^r v] on basis classes, 1 ≤ r ≤ R",
        );
        for r in 1..self.ss.pages().len() {
            let basis = self.basis(r);
            for a in &basis {
                for b in &basis {
                    let lhs = self.ss.bracket(a, b).and_then(|c| self.ss.differential(&c));
                    let rhs = (|| {
                        let first = self.ss.bracket(&self.ss.differential(a)?, b)?;
                        let second = self.ss.bracket(a, &self.ss.differential(b)?)?;
                        Ok(self.combine(&first, &second, &self.sign(self.n() + a.total_degree())))
                    })();
                    let eval = self.compare(lhs, rhs);
                    Self::apply(&mut report, eval, || alloc::vec![self.describe(a), self.describe(b)]);
                }
            }
        }
        report
    }

    fn product_leibniz(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.product-leibniz",
            Scope::Page,
            "d^r(uv) = (d^r u)v + (−1)^|u| u(d^r v) on basis classes",
        );
        for r in 0..self.ss.pages().len() {
            let basis = self.basis(r);
            for a in &basis {
                for b in &basis {
                    let lhs = self.ss.product(a, b).and_then(|c| self.ss.differential(&c));
                    let rhs = (|| {
                        let first = self.ss.product(&self.ss.differential(a)?, b)?;
                        let second = self.ss.product(a, &self.ss.differential(b)?)?;
                        Ok(self.combine(&first, &second, &self.sign(a.total_degree())))
                    })();
                    let eval = self.compare(lhs, rhs);
                    Self::apply(&mut report, eval, || alloc::vec![self.describe(a), self.describe(b)]);
                }
            }
        }
        report
    }

    fn differential_squares(&self) -> AxiomReport {
        let mut report = AxiomReport::new("page.differential-squared", Scope::Page, "d^r ∘ d^r = 0");
        for r in 0..self.ss.pages().len() {
            for a in self.basis(r) {
                let lhs = self.ss.differential(&a).and_then(|c| self.ss.differential(&c));
                let rhs = lhs.clone().map(|c| PageClass { representative: BarElement::zero(), ..c });
                let eval = self.compare(lhs, rhs);
                Self::apply(&mut report, eval, || alloc::vec![self.describe(&a)]);
            }
        }
        report
    }

    /// Rank of `d^r` out of `E^r_{p,q}`, or `None` if the target is unknown.
    fn rank_out(&self, r: usize, p: i64, q: i64) -> Option<usize> {
        let classes = self.ss.basis_classes(r, p, q).ok()?;
        let (tp, tq) = (p - r as i64, q + r as i64 - 1);
        let rows = self.ss.page(r).ok()?.dimension(tp, tq)?;
        let columns: Vec<SparseVec> = classes
            .iter()
            .map(|c| {
                let d = self.ss.differential(c).ok()?;
                let coords = self.coords(&d).ok()?;
                Some(SparseVec::from_entries(coords.into_iter().enumerate()))
            })
            .collect::<Option<_>>()?;
        let m = SparseMatrix::from_columns(self.ss.complex().field(), rows, &columns).ok()?;
        Some(row_reduce(&m).rank)
    }

    fn iterated_homology(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.iterated-homology",
            Scope::Page,
            "dim E^{r+1}_{p,q} = dim ker d^r − dim im d^r at (p,q)",
        );
        let pages = self.ss.pages();
        for r in 0..pages.len().saturating_sub(1) {
            let next = &pages[r + 1];
            for g in next.groups() {
                let (p, q) = (g.p(), g.q());
                let ri = r as i64;
                let here = pages[r].dimension(p, q);
                let out = self.rank_out(r, p, q);
                let incoming = if pages[r].dimension(p + ri, q - ri + 1) == Some(0) {
                    Some(0)
                } else {
                    self.rank_out(r, p + ri, q - ri + 1)
                };
                match (here, out, incoming) {
                    (Some(h), Some(o), Some(i)) => {
                        let homology = h - o - i;
                        report.record(homology == g.dimension(), || Failure {
                            inputs: alloc::vec![alloc::format!("r = {r}, (p, q) = ({p}, {q})")],
                            lhs: alloc::format!("{}", g.dimension()),
                            rhs: alloc::format!("{homology}"),
                        });
                    }
                    _ => report.skip(),
                }
            }
        }
        report
    }

    fn monotone(&self) -> AxiomReport {
        let mut report = AxiomReport::new("page.monotone", Scope::Page, "dim E^{r+1}_{p,q} ≤ dim E^r_{p,q}");
        let pages = self.ss.pages();
        for r in 0..pages.len().saturating_sub(1) {
            for g in pages[r + 1].groups() {
                match pages[r].dimension(g.p(), g.q()) {
                    Some(before) => report.record(g.dimension() <= before, || Failure {
                        inputs: alloc::vec![alloc::format!("r = {r}, (p, q) = ({}, {})", g.p(), g.q())],
                        lhs: alloc::format!("{}", g.dimension()),
                        rhs: alloc::format!("{before}"),
                    }),
                    None => report.skip(),
                }
            }
        }
        report
    }

    fn convergence(&self) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.convergence",
            Scope::Page,
            "Σ_{p+q=m} dim E^∞_{p,q} = dim H_m(tot B)",
        );
        let fc = self.ss.complex();
        let s_cap = fc.window().max_external as i64;
        for (m, tor) in fc.tor_dimensions() {
            let Some(tor) = tor else {
                report.skip();
                continue;
            };
            let sum: Option<usize> = (0..=m as i64)
                .map(|p| {
                    if p > s_cap && fc.is_complete(m) {
                        Some(0)
                    } else {
                        self.ss.infinity().dimension(p, m as i64 - p)
                    }
                })
                .sum();
            match sum {
                Some(sum) => report.record(sum == tor, || Failure {
                    inputs: alloc::vec![alloc::format!("m = {m}")],
                    lhs: alloc::format!("{sum}"),
                    rhs: alloc::format!("{tor}"),
                }),
                None => report.skip(),
            }
        }
        report
    }

    fn higher_differentials_vanish(&self) -> AxiomReport {
        let mut report =
            AxiomReport::new("page.higher-differentials-vanish", Scope::Page, "with d = 0, d^r = 0 for r ≥ 2");
        for r in 2..self.ss.pages().len() {
            for a in self.basis(r) {
                let lhs = self.ss.differential(&a);
                let rhs = lhs.clone().map(|c| PageClass { representative: BarElement::zero(), ..c });
                let eval = self.compare(lhs, rhs);
                Self::apply(&mut report, eval, || alloc::vec![self.describe(&a)]);
            }
        }
        report
    }

    fn random_scalar(&self, rng: &mut ChaCha8Rng) -> Scalar {
        self.ss.complex().field().from_i64((rng.next_u32() % 7) as i64 - 3)
    }

    /// Adds a random element of `Z^{r−1}_{p−1} + B^{r−1}_p` to the representative.
    fn perturb(&self, c: &PageClass, rng: &mut ChaCha8Rng) -> PageClass {
        let Some(group) = self.ss.page(c.r).ok().and_then(|pg| pg.group(c.p, c.q)) else {
            return c.clone();
        };
        let mut noise = SparseVec::new();
        for v in group.quotient().denominator().basis() {
            noise.axpy(&self.random_scalar(rng), v);
        }
        let m = (c.p + c.q) as usize;
        let mut representative = c.representative.clone();
        representative.add_scaled(&self.ss.complex().to_element(m, &noise), &self.ss.complex().field().one());
        PageClass { representative, ..c.clone() }
    }

    fn representative_independence(&self, options: PageCheckOptions) -> AxiomReport {
        let mut report = AxiomReport::new(
            "page.representative-independence",
            Scope::Page,
            "d^r, products and brackets are unchanged when representatives move within their class",
        );
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for r in 0..self.ss.pages().len() {
            let basis = self.basis(r);
            for a in &basis {
                for _ in 0..options.trials {
                    let b = &basis[rng.next_u32() as usize % basis.len()];
                    let (a2, b2) = (self.perturb(a, &mut rng), self.perturb(b, &mut rng));
                    let inputs = || {
                        alloc::vec![
                            self.describe(a),
                            self.describe(b),
                            self.ss.format_class(&a2),
                            self.ss.format_class(&b2),
                        ]
                    };
                    let eval = self.compare(self.ss.differential(&a2), self.ss.differential(a));
                    Self::apply(&mut report, eval, inputs);
                    let eval = self.compare(self.ss.product(&a2, &b2), self.ss.product(a, b));
                    Self::apply(&mut report, eval, inputs);
                    let eval = self.compare(self.ss.bracket(&a2, &b2), self.ss.bracket(a, b));
                    Self::apply(&mut report, eval, inputs);
                }
            }
        }
        report
    }
}

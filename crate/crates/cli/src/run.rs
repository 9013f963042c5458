//! Commands and their structured results.

use std::fmt::Write;

use barss_core::sseq::{PageClass, SpectralSequence};
use barss_core::verify::{self, check_algebra_axioms, check_bar_axioms, check_page_axioms, PageCheckOptions};
use barss_core::Error;
use serde::{Deserialize, Serialize};

use crate::config::{Config, FieldKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Axioms,
    Pages,
    Tor,
    Bracket,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Axioms => "axioms",
            Command::Pages => "pages",
            Command::Tor => "tor",
            Command::Bracket => "bracket",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub max_basis: usize,
    /// Perturbation trials per class in the page suite.
    pub trials: usize,
    /// Page for `bracket`; defaults to 1.
    pub page: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, max_basis: barss_core::sseq::DEFAULT_MAX_BASIS, trials: 100, page: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convention {
    pub name: String,
    pub rule: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub field: String,
    pub n: i64,
    pub generators: Vec<String>,
    pub differential: Vec<String>,
    pub bracket: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSummary {
    #[serde(rename = "S")]
    pub max_external: usize,
    #[serde(rename = "T")]
    pub max_total: usize,
    #[serde(rename = "R")]
    pub max_page: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub p: i64,
    pub q: i64,
    /// `None` outside the safe region.
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialEntry {
    pub p: i64,
    pub q: i64,
    pub source: String,
    /// `None` when the target lies outside the safe region.
    pub target: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageTable {
    /// `"0"`, `"1"`, … or `"inf"`.
    pub page: String,
    pub groups: Vec<GroupEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub differentials: Vec<DifferentialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorEntry {
    pub degree: usize,
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub page: usize,
    pub left: String,
    pub left_bidegree: (i64, i64),
    pub right: String,
    pub right_bidegree: (i64, i64),
    pub target_bidegree: (i64, i64),
    pub value: String,
    /// Coordinates in the target group's basis.
    pub coordinates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureEntry {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomEntry {
    pub id: String,
    pub scope: String,
    pub statement: String,
    pub passed: bool,
    pub tested: usize,
    pub skipped: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<FailureEntry>,
}

impl From<&verify::AxiomReport> for AxiomEntry {
    fn from(r: &verify::AxiomReport) -> Self {
        AxiomEntry {
            id: r.id.into(),
            scope: r.scope.as_str().into(),
            statement: r.statement.into(),
            passed: r.passed(),
            tested: r.tested,
            skipped: r.skipped,
            failed: r.failed,
            failures: r
                .failures
                .iter()
                .map(|f| FailureEntry { inputs: f.inputs.clone(), lhs: f.lhs.clone(), rhs: f.rhs.clone() })
                .collect(),
        }
    }
}

/// Everything a command produced. Field order is the output key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunResult {
    pub command: String,
    pub conventions: Vec<Convention>,
    pub algebra: AlgebraSummary,
    pub window: WindowSummary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pages: Vec<PageTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_at: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tor: Vec<TorEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketEntry>,
    /// Pairs of basis classes whose bracket lands outside the safe region.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknown_brackets: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub axioms: Vec<AxiomEntry>,
    /// Present for `axioms`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_passed: Option<bool>,
}

impl RunResult {
    /// True unless an axiom failed.
    pub fn passed(&self) -> bool {
        self.all_passed != Some(false)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

fn summarize(config: &Config) -> AlgebraSummary {
    AlgebraSummary {
        field: match config.field {
            FieldKind::Rationals => "Q".into(),
            FieldKind::Prime(p) => format!("F_{p}"),
        },
        n: config.n,
        generators: config
            .generators
            .iter()
            .map(|g| match g.truncation {
                Some(e) => format!("{} (degree {}, {}^{e} = 0)", g.name, g.degree, g.name),
                None => format!("{} (degree {})", g.name, g.degree),
            })
            .collect(),
        differential: config.differential.iter().map(|(g, e)| format!("d({g}) = {e}")).collect(),
        bracket: config.bracket.iter().map(|(g, h, e)| format!("[{g},{h}] = {e}")).collect(),
    }
}

/// Runs one command on a validated config.
pub fn run(command: Command, config: &Config, options: &RunOptions) -> Result<RunResult, Error> {
    let spec = config.algebra()?;
    let w = config.window;
    let mut result = RunResult {
        command: command.as_str().into(),
        conventions: verify::conventions()
            .into_iter()
            .map(|(name, rule)| Convention { name: name.into(), rule: rule.into() })
            .collect(),
        algebra: summarize(config),
        window: WindowSummary { max_external: w.max_external, max_total: w.max_total, max_page: w.max_page },
        pages: Vec::new(),
        stable_at: None,
        tor: Vec::new(),
        brackets: Vec::new(),
        unknown_brackets: None,
        axioms: Vec::new(),
        all_passed: None,
    };
    match command {
        Command::Tor => {
            let fc = barss_core::sseq::FilteredComplex::assemble(spec, config.window(), options.max_basis)?;
            result.tor = fc
                .tor_dimensions()
                .into_iter()
                .filter(|(m, _)| *m <= w.max_total)
                .map(|(degree, dimension)| TorEntry { degree, dimension })
                .collect();
        }
        Command::Axioms => {
            let mut reports = check_algebra_axioms(&spec, w.max_total as u32);
            reports.extend(check_bar_axioms(&spec, w.max_external, w.max_total as u32));
            let ss = SpectralSequence::compute(spec, config.window(), options.max_basis)?;
            reports.extend(check_page_axioms(&ss, PageCheckOptions { seed: options.seed, trials: options.trials }));
            result.all_passed = Some(verify::all_passed(&reports));
            result.axioms = reports.iter().map(AxiomEntry::from).collect();
        }
        Command::Pages => {
            let ss = SpectralSequence::compute(spec, config.window(), options.max_basis)?;
            for r in 0..=w.max_page {
                result.pages.push(page_table(&ss, Some(r))?);
            }
            result.pages.push(page_table(&ss, None)?);
            result.stable_at = ss.stable_at();
        }
        Command::Bracket => {
            let r = options.page.unwrap_or(1);
            let ss = SpectralSequence::compute(spec, config.window(), options.max_basis)?;
            let (entries, unknown) = bracket_table(&ss, r)?;
            result.brackets = entries;
            result.unknown_brackets = Some(unknown);
        }
    }
    Ok(result)
}

fn grid(ss: &SpectralSequence) -> impl Iterator<Item = (i64, i64)> {
    let w = ss.complex().window();
    let (s, t) = (w.max_external as i64, w.max_total as i64);
    (0..=t).flat_map(move |m| (0..=m.min(s)).map(move |p| (p, m - p)))
}

fn page_table(ss: &SpectralSequence, r: Option<usize>) -> Result<PageTable, Error> {
    let page = match r {
        Some(r) => ss.page(r)?,
        None => ss.infinity(),
    };
    let mut groups = Vec::new();
    let mut differentials = Vec::new();
    for (p, q) in grid(ss) {
        let Some(g) = page.group(p, q) else {
            groups.push(GroupEntry { p, q, dimension: None, basis: Vec::new() });
            continue;
        };
        let basis: Vec<String> =
            g.representatives().iter().map(|rep| ss.complex().bar().format_element(rep)).collect();
        groups.push(GroupEntry { p, q, dimension: Some(g.dimension()), basis: basis.clone() });
        let Some(r) = r else { continue };
        for (class, source) in ss.basis_classes(r, p, q)?.iter().zip(basis) {
            let target = match ss.differential(class) {
                Ok(d) if ss.is_zero_class(&d)? => continue,
                Ok(d) => Some(ss.format_class(&d)),
                Err(Error::Unknown { .. }) => None,
                Err(e) => return Err(e),
            };
            differentials.push(DifferentialEntry { p, q, source, target });
        }
    }
    let label = r.map_or_else(|| "inf".to_string(), |r| r.to_string());
    Ok(PageTable { page: label, groups, differentials })
}

/// Nonzero brackets of basis classes `a ≤ b`, and the number of pairs
/// whose target is outside the safe region.
fn bracket_table(ss: &SpectralSequence, r: usize) -> Result<(Vec<BracketEntry>, usize), Error> {
    let page = ss.page(r)?;
    let mut classes: Vec<PageClass> = Vec::new();
    for g in page.groups() {
        classes.extend(ss.basis_classes(r, g.p(), g.q())?);
    }
    classes.sort_by_key(|c| (c.total_degree(), c.p));
    let shift = ss.complex().algebra().bracket_degree();
    let mut out = Vec::new();
    let mut unknown = 0;
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i..] {
            let target_bidegree = (a.p + b.p - 1, a.q + b.q + shift);
            let (value, coordinates) = match ss.bracket(a, b) {
                Ok(c) => {
                    let coords = ss.coordinates(&c)?;
                    if coords.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    (ss.format_class(&c), coords.iter().map(ToString::to_string).collect())
                }
                Err(Error::Unknown { .. }) => {
                    unknown += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            out.push(BracketEntry {
                page: r,
                left: ss.format_class(a),
                left_bidegree: (a.p, a.q),
                right: ss.format_class(b),
                right_bidegree: (b.p, b.q),
                target_bidegree,
                value,
                coordinates,
            });
        }
    }
    Ok((out, unknown))
}

/// Human-readable rendering.
pub fn render_table(result: &RunResult) -> String {
    let mut s = String::new();
    let a = &result.algebra;
    let w = &result.window;
    let _ = writeln!(s, "command: {}", result.command);
    let _ = writeln!(s, "algebra: over {}, n = {}, generators {}", a.field, a.n, a.generators.join(", "));
    for line in a.differential.iter().chain(&a.bracket) {
        let _ = writeln!(s, "  {line}");
    }
    let _ = writeln!(s, "window: S = {}, T = {}, R = {}", w.max_external, w.max_total, w.max_page);
    let _ = writeln!(s, "conventions:");
    for c in &result.conventions {
        let _ = writeln!(s, "  {}: {}", c.name, c.rule);
    }

    for page in &result.pages {
        let title = if page.page == "inf" { "E^inf".to_string() } else { format!("E^{}", page.page) };
        let _ = writeln!(s, "\n{title} (rows q, columns p; ? = outside the safe region)");
        let max_p = page.groups.iter().map(|g| g.p).max().unwrap_or(0);
        let max_q = page.groups.iter().map(|g| g.q).max().unwrap_or(0);
        for q in (0..=max_q).rev() {
            let mut row = format!("{q:>4} |");
            for p in 0..=max_p {
                let cell = match page.groups.iter().find(|g| g.p == p && g.q == q) {
                    None => " ".to_string(),
                    Some(GroupEntry { dimension: None, .. }) => "?".to_string(),
                    Some(GroupEntry { dimension: Some(0), .. }) => ".".to_string(),
                    Some(GroupEntry { dimension: Some(d), .. }) => d.to_string(),
                };
                let _ = write!(row, " {cell:>3}");
            }
            let _ = writeln!(s, "{}", row.trim_end());
        }
        let mut axis = "     +".to_string();
        let mut labels = "      ".to_string();
        for p in 0..=max_p {
            axis.push_str("----");
            let _ = write!(labels, " {p:>3}");
        }
        let _ = writeln!(s, "{axis}\n{labels}");
        for d in &page.differentials {
            let target = d.target.as_deref().unwrap_or("unknown");
            let _ = writeln!(s, "  d^{}({}) = {}   from ({}, {})", page.page, d.source, target, d.p, d.q);
        }
    }
    if result.command == "pages" {
        match result.stable_at {
            Some(r) => {
                let _ = writeln!(s, "\nstable at r = {r}");
            }
            None => {
                let _ = writeln!(s, "\nnot stable by r = {}", w.max_page);
            }
        }
    }

    if !result.tor.is_empty() {
        let _ = writeln!(s, "\nTor dimensions by total degree:");
        for t in &result.tor {
            let dim = t.dimension.map_or_else(|| "?".to_string(), |d| d.to_string());
            let _ = writeln!(s, "  {:>3}: {dim}", t.degree);
        }
    }

    if result.command == "bracket" {
        let _ = writeln!(s, "\nnonzero brackets of basis classes:");
        for b in &result.brackets {
            let _ = writeln!(
                s,
                "  [{} {:?}, {} {:?}] = {} in {:?}",
                b.left, b.left_bidegree, b.right, b.right_bidegree, b.value, b.target_bidegree
            );
        }
        if let Some(unknown) = result.unknown_brackets {
            let _ = writeln!(s, "pairs landing outside the safe region: {unknown}");
        }
    }

    if !result.axioms.is_empty() {
        let _ = writeln!(s, "\naxioms:");
        for r in &result.axioms {
            let verdict = if r.passed { "pass" } else { "FAIL" };
            let _ = writeln!(
                s,
                "  {verdict}  {:<36} tested {:>6}  skipped {:>6}  failed {:>4}   {}",
                r.id, r.tested, r.skipped, r.failed, r.statement
            );
            for f in &r.failures {
                let _ = writeln!(s, "        inputs {}: lhs = {}, rhs = {}", f.inputs.join(", "), f.lhs, f.rhs);
            }
        }
        if let Some(all) = result.all_passed {
            let _ = writeln!(s, "\n{}", if all { "all axioms pass" } else { "some axioms FAIL" });
        }
    }
    s
}

//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use barss_cli::config::WindowSpec;
use barss_cli::{Config, Diagram, DiagramKind, WalkSelection};
use barss_core::algebra::AlgebraSpec;
use barss_core::bar::{BarConstruction, BarElement, Walk};
use barss_core::field::{FieldSpec, Scalar};
use barss_core::sseq::{PageClass, SpectralSequence, DEFAULT_MAX_BASIS};
use barss_core::verify::{self, check_bar_axioms, check_page_axioms, AxiomReport, PageCheckOptions};
use barss_core::Error;

const TIME_LIMIT: Duration = Duration::from_secs(120);

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> Config {
    let path = manifest_dir().join("configs").join(format!("{name}.barss"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Config::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn shipped() -> Vec<(String, Config)> {
    let mut names: Vec<String> = std::fs::read_dir(manifest_dir().join("configs"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "barss"))
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

fn with_window(mut c: Config, s: usize, t: usize, r: usize) -> Config {
    c.window = WindowSpec { max_external: s, max_total: t, max_page: r };
    c
}

fn sseq(c: &Config) -> SpectralSequence {
    SpectralSequence::compute(c.algebra().unwrap(), c.window(), DEFAULT_MAX_BASIS).unwrap()
}

fn odd(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// Every report passes and each listed identity was actually exercised.
fn require_reports(reports: &[AxiomReport], ids: &[&str], label: &str) -> Result<String, String> {
    for r in reports {
        if !r.passed() {
            let w = r.failures.first().map(|f| format!("{:?}: {} vs {}", f.inputs, f.lhs, f.rhs)).unwrap_or_default();
            return Err(format!("{label}: {} failed {} of {} ({w})", r.id, r.failed, r.tested));
        }
    }
    let mut tested = 0;
    for id in ids {
        let r = reports.iter().find(|r| r.id == *id).ok_or_else(|| format!("{label}: no report {id}"))?;
        if r.tested == 0 {
            return Err(format!("{label}: {id} tested nothing"));
        }
        tested += r.tested;
    }
    Ok(format!("{label}: {} identities, {tested} tuples", ids.len()))
}

const BAR_IDS: &[&str] = &[
    "bar.antisymmetry",
    "bar.poisson",
    "bar.jacobi",
    "bar.d-leibniz-bracket",
    "bar.delta-leibniz-bracket",
    "bar.D-leibniz-bracket",
    "bar.coproduct-bracket",
    "bar.bracket-bidegree",
    "bar.shuffle-commutativity",
    "bar.coproduct-multiplicative",
];

fn timed<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT {
        return Err(format!("took {elapsed:?}, over {TIME_LIMIT:?}"));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// 1 and 2: bar-level identities.

fn criterion_1() -> Result<String, String> {
    let mut details = Vec::new();
    for name in ["exterior", "truncated"] {
        let c = load(name);
        assert_eq!(c.n, 2);
        let reports = timed(|| check_bar_axioms(&c.algebra().unwrap(), 3, 10))?;
        details.push(require_reports(&reports, BAR_IDS, name)?);
    }
    Ok(details.join("; "))
}

/// A pair of words, a walk and a corner where σ′ flips the sign of a nonzero term.
fn corner_sign_witness(spec: &AlgebraSpec, max_s: usize, max_t: u32) -> Option<String> {
    let bar = BarConstruction::new(spec.clone());
    let words = bar.basis_words(max_s, max_t);
    for a in &words {
        for b in &words {
            if a.internal_degree() + b.internal_degree() > max_t {
                continue;
            }
            for walk in Walk::all(a.external_degree(), b.external_degree()) {
                for c in walk.corners() {
                    if !walk.corner_sign(c, &a.weights(), &b.weights(), spec.n()) {
                        continue;
                    }
                    if !bar.bracket_term(a, b, &walk, c).ok()?.is_zero() {
                        return Some(format!(
                            "[{}, {}] walk {walk} corner {}",
                            bar.format_word(a),
                            bar.format_word(b),
                            c + 1
                        ));
                    }
                }
            }
        }
    }
    None
}

fn criterion_2() -> Result<String, String> {
    let mut details = Vec::new();
    // The algebras of criterion 1 at n = 3. Antisymmetry forces [a,a] = 0 in
    // F_5[a]/a^5 and degree forces [x,x] = 0 in Λ(x), so their tables are zero.
    for name in ["exterior", "truncated"] {
        let mut c = load(name);
        c.n = 3;
        let spec = c.algebra().unwrap();
        assert!(spec.has_zero_bracket());
        let reports = timed(|| check_bar_axioms(&spec, 3, 10))?;
        details.push(require_reports(&reports, &BAR_IDS[..7], &format!("{name} n=3"))?);
    }
    // Nonzero tables: one generator adjoined to each.
    for name in ["odd-truncated", "odd-exterior"] {
        let c = load(name);
        assert_eq!(c.n, 3);
        let spec = c.algebra().unwrap();
        if spec.has_zero_bracket() {
            return Err(format!("{name} has a zero bracket"));
        }
        let reports = timed(|| check_bar_axioms(&spec, 3, 10))?;
        details.push(require_reports(&reports, BAR_IDS, name)?);
        let witness = corner_sign_witness(&spec, 3, 10).ok_or_else(|| format!("{name}: σ′ never flips a sign"))?;
        details.push(format!("σ′ ≠ 0 at {witness}"));
    }
    let header = verify::conventions();
    let corner = header.iter().find(|(k, _)| *k == "corner sign").ok_or("no corner sign in the report header")?;
    if !corner.1.starts_with("σ′(φ,i) = n·") {
        return Err(format!("unexpected corner sign header: {}", corner.1));
    }
    Ok(details.join("; "))
}

// ---------------------------------------------------------------------------
// 3: D² = 0 and dδ + δd = 0.

fn criterion_3() -> Result<String, String> {
    let mut words = 0;
    let configs = shipped();
    for (name, c) in &configs {
        let bar = BarConstruction::new(c.algebra().unwrap());
        let one = bar.field().one();
        for w in bar.basis_words(c.window.max_external, c.window.max_total as u32) {
            let u = BarElement::from_word(w.clone(), one.clone());
            let dd = bar.total_differential(&bar.total_differential(&u));
            if !dd.is_zero() {
                return Err(format!("{name}: D²{} = {}", bar.format_word(&w), bar.format_element(&dd)));
            }
            let anti = bar
                .internal_differential(&bar.external_differential(&u))
                .plus(&bar.external_differential(&bar.internal_differential(&u)));
            if !anti.is_zero() {
                return Err(format!("{name}: (dδ + δd){} = {}", bar.format_word(&w), bar.format_element(&anti)));
            }
            words += 1;
        }
    }
    Ok(format!("{} configs, {words} basis words", configs.len()))
}

// ---------------------------------------------------------------------------
// 4: Tor against an independent oracle.

/// One-generator algebra for the oracle: `a` of degree `degree`, with
/// `a^k ≠ 0` exactly for `k < top`.
struct OneGenerator {
    degree: i64,
    top: Option<i64>,
}

impl OneGenerator {
    fn nonzero(&self, k: i64) -> bool {
        self.top.is_none_or(|t| k < t)
    }

    /// Words `(k₁,…,k_s)` for `a^{k₁}|…|a^{k_s}` of total degree `m`.
    fn words(&self, m: i64) -> Vec<Vec<i64>> {
        fn rec(g: &OneGenerator, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            let mut k = 1;
            while g.nonzero(k) && k * g.degree + 1 <= left {
                cur.push(k);
                rec(g, left - k * g.degree - 1, cur, out);
                cur.pop();
                k += 1;
            }
        }
        let mut out = Vec::new();
        rec(self, m, &mut Vec::new(), &mut out);
        out
    }

    /// Matrix of δ from total degree `m` to `m − 1` (rows = targets).
    fn boundary(&self, m: i64) -> Vec<Vec<i128>> {
        let sources = self.words(m);
        let targets = if m > 0 { self.words(m - 1) } else { Vec::new() };
        let mut mat = vec![vec![0i128; sources.len()]; targets.len()];
        for (j, w) in sources.iter().enumerate() {
            let mut sigma = 0;
            for i in 0..w.len().saturating_sub(1) {
                sigma += w[i] * self.degree + 1;
                let merged = w[i] + w[i + 1];
                if !self.nonzero(merged) {
                    continue;
                }
                let mut t = w[..i].to_vec();
                t.push(merged);
                t.extend_from_slice(&w[i + 2..]);
                let row = targets.iter().position(|x| *x == t).expect("target enumerated");
                mat[row][j] += if sigma % 2 == 1 { -1 } else { 1 };
            }
        }
        mat
    }
}

/// Rank by fraction-free elimination over ℤ, exact for rank over ℚ.
fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = m[rank][col].checked_mul(m[r][c]).unwrap() - m[r][col].checked_mul(m[rank][c]).unwrap();
                assert_eq!(v % prev, 0, "fraction-free elimination divides exactly");
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

fn oracle_tor(g: &OneGenerator, max_total: i64) -> Vec<usize> {
    (0..=max_total)
        .map(|m| {
            let dim = g.words(m).len();
            dim - integer_rank(g.boundary(m)) - integer_rank(g.boundary(m + 1))
        })
        .collect()
}

fn cli_tor(config: &Config) -> Vec<Option<usize>> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("algebra.barss");
    std::fs::write(&path, config.to_string()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_barss"))
        .args(["tor", "--format", "json", "--config"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    json["tor"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["dimension"].as_u64().map(|d| d as usize))
        .collect()
}

fn criterion_4() -> Result<String, String> {
    let cases = [
        ("polynomial", OneGenerator { degree: 2, top: None }, (|m: usize| m == 0 || m == 3) as fn(usize) -> bool),
        ("exterior", OneGenerator { degree: 1, top: Some(2) }, |m: usize| m % 2 == 0),
    ];
    let mut details = Vec::new();
    for (name, g, pattern) in cases {
        for m in 1..=13 {
            let (d1, d0) = (g.boundary(m), g.boundary(m - 1));
            for (i, row) in d0.iter().enumerate() {
                for j in 0..d1.first().map_or(0, Vec::len) {
                    let v: i128 = row.iter().zip(&d1).map(|(a, r)| a * r[j]).sum();
                    if v != 0 {
                        return Err(format!("{name}: oracle δ² ≠ 0 at ({m}, {i}, {j})"));
                    }
                }
            }
        }
        let oracle = oracle_tor(&g, 12);
        let cli = cli_tor(&with_window(load(name), 6, 12, 1));
        if cli.len() != 13 {
            return Err(format!("{name}: expected 13 degrees, got {}", cli.len()));
        }
        for m in 0..=12 {
            let expected = pattern(m) as usize;
            if oracle[m] != expected {
                return Err(format!("{name}: oracle gives {} in degree {m}, pattern {expected}", oracle[m]));
            }
            if cli[m] != Some(oracle[m]) {
                return Err(format!("{name}: tor gives {:?} in degree {m}, oracle {}", cli[m], oracle[m]));
            }
        }
        details.push(format!("{name}: {oracle:?}"));
    }
    Ok(details.join("; "))
}

// ---------------------------------------------------------------------------
// 5: pages from Z/B formulas against homology of the previous page.

fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().unwrap();
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..cols {
                    let v = &m[r][c] - &(&f * &m[rank][c]);
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of d^r leaving `(p,q)`, or `None` if a target is unknown.
fn rank_of_differential(ss: &SpectralSequence, r: usize, p: i64, q: i64) -> Option<usize> {
    if p < 0 || q < 0 {
        return Some(0);
    }
    let sources = ss.basis_classes(r, p, q).ok()?;
    let mut columns = Vec::new();
    for c in &sources {
        let d = ss.differential(c).ok()?;
        columns.push(ss.coordinates(&d).ok()?);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let matrix = (0..rows).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect();
    Some(rank(matrix))
}

fn criterion_5() -> Result<String, String> {
    let mut compared = 0;
    let mut converged = 0;
    for (name, c) in shipped() {
        let c = with_window(c.clone(), c.window.max_external, c.window.max_total, c.window.max_page.max(4));
        let ss = sseq(&c);
        for r in 0..=3usize {
            let (page, next) = (ss.page(r).unwrap(), ss.page(r + 1).unwrap());
            for g in next.groups() {
                let (p, q) = (g.p(), g.q());
                let ri = r as i64;
                let Some(dim) = page.dimension(p, q) else { continue };
                let Some(out) = rank_of_differential(&ss, r, p, q) else { continue };
                let Some(inc) = rank_of_differential(&ss, r, p + ri, q - ri + 1) else { continue };
                let homology = dim - out - inc;
                if homology != g.dimension() {
                    return Err(format!(
                        "{name}: E^{}_{{{p},{q}}} has dimension {} but H(E^{r}, d^{r}) has {homology}",
                        r + 1,
                        g.dimension()
                    ));
                }
                compared += 1;
            }
        }
        for (m, tor) in ss.complex().tor_dimensions() {
            let Some(tor) = tor else { continue };
            let total: Option<usize> = (0..=m as i64).map(|p| ss.infinity().dimension(p, m as i64 - p)).sum();
            let Some(total) = total else { continue };
            if total != tor {
                return Err(format!("{name}: E^∞ sums to {total} in degree {m}, Tor is {tor}"));
            }
            converged += 1;
        }
    }
    // E^∞ against the criterion 4 oracle at its window.
    for (name, g) in [("polynomial", OneGenerator { degree: 2, top: None }), ("exterior", OneGenerator { degree: 1, top: Some(2) })] {
        let ss = sseq(&with_window(load(name), 6, 12, 2));
        let oracle = oracle_tor(&g, 12);
        for (m, &expected) in oracle.iter().enumerate() {
            let total: Option<usize> = (0..=m as i64).map(|p| ss.infinity().dimension(p, m as i64 - p)).sum();
            if let Some(total) = total {
                if total != expected {
                    return Err(format!("{name}: E^∞ sums to {total} in degree {m}, oracle {expected}"));
                }
                converged += 1;
            }
        }
    }
    if compared == 0 || converged == 0 {
        return Err("nothing compared".into());
    }
    Ok(format!("{compared} groups match iterated homology for r ≤ 3; {converged} degrees converge to Tor"))
}

// ---------------------------------------------------------------------------
// 6: [[x],[y]] = [[x,y]] on E¹.

fn criterion_6() -> Result<String, String> {
    let mut checked = 0;
    let mut skipped = 0;
    for (name, c) in shipped() {
        let ss = sseq(&c);
        let bar = ss.complex().bar();
        let spec = bar.algebra();
        let gens: Vec<String> = spec.generators().iter().map(|g| g.name.clone()).collect();
        let class_of = |entry: &barss_core::algebra::AlgebraElement| -> Result<PageClass, Error> {
            let w = bar.word(std::slice::from_ref(entry));
            let (s, t) = w.bidegree().unwrap_or((1, entry.degree().unwrap_or(0)));
            ss.class(1, s as i64, t as i64, w)
        };
        for g in &gens {
            for h in &gens {
                let (x, y) = (spec.generator(g).unwrap(), spec.generator(h).unwrap());
                let (Ok(cx), Ok(cy)) = (class_of(&x), class_of(&y)) else {
                    skipped += 1;
                    continue;
                };
                let xy = spec.bracket(&x, &y).unwrap();
                let chain = bar.bracket(&cx.representative, &cy.representative).unwrap();
                if chain != bar.word(std::slice::from_ref(&xy)) {
                    return Err(format!("{name}: [[{g}],[{h}]] = {} at chain level", bar.format_element(&chain)));
                }
                let lhs = match ss.bracket(&cx, &cy) {
                    Ok(v) => v,
                    Err(Error::Unknown { .. }) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(format!("{name}: {e}")),
                };
                let expected_bidegree = (1, x.degree().unwrap() as i64 + y.degree().unwrap() as i64 + spec.bracket_degree());
                let rhs = ss.class(1, expected_bidegree.0, expected_bidegree.1, bar.word(std::slice::from_ref(&xy)));
                let rhs = rhs.map_err(|e| format!("{name}: [[{g},{h}]]: {e}"))?;
                if (lhs.p, lhs.q) != expected_bidegree || ss.coordinates(&lhs) != ss.coordinates(&rhs) {
                    return Err(format!("{name}: [[{g}],[{h}]] = {} but [[{g},{h}]] = {}", ss.format_class(&lhs), ss.format_class(&rhs)));
                }
                checked += 1;
            }
        }
    }
    let sphere = sseq(&load("sphere"));
    let bar = sphere.complex().bar();
    let a = bar.word(&[bar.algebra().generator("a").unwrap()]);
    let ca = sphere.class(1, 1, 2, a).unwrap();
    let aa = sphere.bracket(&ca, &ca).unwrap();
    let b = sphere.class(1, 1, 5, bar.word(&[bar.algebra().generator("b").unwrap()])).unwrap();
    let two_b = PageClass { representative: b.representative.scaled(&FieldSpec::Rationals.from_i64(2)), ..b };
    if (aa.p, aa.q) != (1, 5) || sphere.coordinates(&aa) != sphere.coordinates(&two_b) {
        return Err(format!("sphere: [[a],[a]] = {} in ({}, {})", sphere.format_class(&aa), aa.p, aa.q));
    }
    if checked == 0 {
        return Err("no generator pair was checked".into());
    }
    Ok(format!(
        "{checked} generator pairs equal, {skipped} not on E¹ or outside the window; sphere [[a],[a]] = {} in E¹_{{1,5}}",
        sphere.format_class(&aa)
    ))
}

// ---------------------------------------------------------------------------
// 7: page Leibniz on E¹.

fn criterion_7() -> Result<String, String> {
    let mut tested = [0usize; 2];
    let mut skipped = 0;
    for (name, c) in shipped() {
        let ss = sseq(&c);
        let n = c.n;
        let field = c.field_spec();
        let page = ss.page(1).unwrap();
        let classes: Vec<PageClass> =
            page.groups().flat_map(|g| ss.basis_classes(1, g.p(), g.q()).unwrap()).collect();
        let shift = ss.complex().algebra().bracket_degree();
        for u in &classes {
            for v in &classes {
                let (p, q) = (u.p + v.p - 1, u.q + v.q + shift);
                if !page.is_known(p, q) || !page.is_known(p - 1, q) {
                    skipped += 1;
                    continue;
                }
                let eval = || -> Result<bool, Error> {
                    let lhs = ss.differential(&ss.bracket(u, v)?)?;
                    let first = ss.bracket(&ss.differential(u)?, v)?;
                    let second = ss.bracket(u, &ss.differential(v)?)?;
                    let sign = field.sign(odd(n + u.total_degree()));
                    let mut diff = lhs.representative.minus(&first.representative);
                    diff.add_scaled(&second.representative, &-sign);
                    ss.is_zero_class(&PageClass { representative: diff, ..lhs })
                };
                match eval() {
                    Ok(true) => tested[odd(n) as usize] += 1,
                    Ok(false) => {
                        return Err(format!(
                            "{name}: d¹[u,v] ≠ [d¹u,v] + (−1)^(n+|u|)[u,d¹v] for u = {}, v = {}",
                            ss.format_class(u),
                            ss.format_class(v)
                        ))
                    }
                    Err(Error::Unknown { .. }) => skipped += 1,
                    Err(e) => return Err(format!("{name}: {e}")),
                }
            }
        }
    }
    if tested[0] == 0 || tested[1] == 0 {
        return Err(format!("a parity was not exercised: {tested:?}"));
    }
    Ok(format!("{} pairs with n even, {} with n odd, {skipped} outside the safe region", tested[0], tested[1]))
}

// ---------------------------------------------------------------------------
// 8: representative independence.

fn criterion_8() -> Result<String, String> {
    let mut details = Vec::new();
    for name in ["exterior", "truncated", "odd-truncated", "odd-exterior"] {
        let c = with_window(load(name), 3, 10, 3);
        let ss = sseq(&c);
        let reports = timed(|| check_page_axioms(&ss, PageCheckOptions { seed: 2024, trials: 100 }))?;
        let r = reports
            .iter()
            .find(|r| r.id == "page.representative-independence")
            .ok_or("no representative-independence report")?;
        if !r.passed() {
            let f = &r.failures[0];
            return Err(format!("{name}: {:?}: {} vs {}", f.inputs, f.lhs, f.rhs));
        }
        if r.tested == 0 {
            return Err(format!("{name}: no trials ran"));
        }
        details.push(format!("{name}: {} comparisons", r.tested));
    }
    Ok(details.join("; "))
}

// ---------------------------------------------------------------------------
// 9: diagram goldens.

fn criterion_9() -> Result<String, String> {
    let golden = manifest_dir().join("tests").join("golden");
    let cases: [(&str, DiagramKind, usize, usize, WalkSelection, Option<usize>, usize, usize); 4] = [
        ("shuffle-identity-3-2.svg", DiagramKind::Shuffle, 3, 2, WalkSelection::Index(0), None, 0, 0),
        ("shuffle-ruurr-3-2.svg", DiagramKind::Shuffle, 3, 2, WalkSelection::Steps("RUURR".into()), None, 4, 0),
        ("bracket-ruurr-3-2-corner-1.svg", DiagramKind::BracketShuffle, 3, 2, WalkSelection::Steps("RUURR".into()), Some(1), 4, 2),
        ("bracket-ru-1-1-corner-1.svg", DiagramKind::BracketShuffle, 1, 1, WalkSelection::Steps("RU".into()), Some(1), 0, 2),
    ];
    for (file, kind, p, q, sel, corner, blocks, marks) in cases {
        let svg = Diagram::select(kind, p, q, &sel, corner).map_err(|e| e.to_string())?.to_svg();
        let expected = std::fs::read_to_string(golden.join(file)).map_err(|e| format!("{file}: {e}"))?;
        if svg != expected {
            return Err(format!("{file} differs from the rendered diagram"));
        }
        if svg.matches("<rect x=").count() != blocks || svg.matches("class=\"corner\"").count() != marks {
            return Err(format!("{file}: wrong number of shaded blocks or corner marks"));
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_barss"))
        .args(["diagram", "--kind", "bracket-shuffle", "--p", "3", "--q", "2", "--walk", "RUURR", "--corner", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    let expected = std::fs::read(golden.join("bracket-ruurr-3-2-corner-1.svg")).unwrap();
    if !out.status.success() || out.stdout != expected {
        return Err("barss diagram output differs from the golden".into());
    }
    Ok("4 goldens byte-identical".into())
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 9] = [
        ("bar identities, n even", criterion_1),
        ("bar identities, n odd", criterion_2),
        ("D² = 0 and dδ + δd = 0 on shipped configs", criterion_3),
        ("Tor against an independent oracle", criterion_4),
        ("pages against iterated homology; convergence", criterion_5),
        ("generator brackets on E¹", criterion_6),
        ("Leibniz rule for d¹", criterion_7),
        ("representative independence", criterion_8),
        ("diagram goldens", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {title} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {title} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

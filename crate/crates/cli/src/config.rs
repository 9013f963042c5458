//! The `.barss` configuration format.
//!
//! A config is a line-oriented file of sections:
//!
//! ```text
//! [field]
//! kind = prime
//! p = 5
//!
//! [algebra]
//! n = 2
//!
//! [generators]
//! a = 2 trunc 5
//!
//! [differential]
//! [bracket]
//! [a,a] = 0
//!
//! [window]
//! S = 3
//! T = 10
//! R = 4
//! ```
//!
//! Table values are sums of integer multiples of monomials such as
//! `2*a^2*b - c`; `0` is the empty sum. `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt;

use barss_core::algebra::{AlgebraElement, AlgebraSpec, GeneratorSpec};
use barss_core::field::FieldSpec;
use barss_core::sseq::Window;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub truncation: Option<u32>,
}

/// `coefficient * f₁^e₁ * f₂^e₂ * …`; the coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: i64,
    pub factors: Vec<(String, u32)>,
}

/// A sum of terms; the empty sum is written `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowSpec {
    pub max_external: usize,
    pub max_total: usize,
    pub max_page: usize,
}

impl From<WindowSpec> for Window {
    fn from(w: WindowSpec) -> Window {
        Window::new(w.max_external, w.max_total, w.max_page)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub field: FieldKind,
    pub n: i64,
    pub generators: Vec<Generator>,
    pub differential: Vec<(String, Expr)>,
    pub bracket: Vec<(String, String, Expr)>,
    pub window: WindowSpec,
}

/// A parse or validation error, positioned at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError { line, column, message: message.into() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Field,
    Algebra,
    Generators,
    Differential,
    Bracket,
    Window,
}

impl Section {
    fn from_name(name: &str) -> Option<Section> {
        Some(match name {
            "field" => Section::Field,
            "algebra" => Section::Algebra,
            "generators" => Section::Generators,
            "differential" => Section::Differential,
            "bracket" => Section::Bracket,
            "window" => Section::Window,
            _ => return None,
        })
    }
}

/// A piece of a line with its 1-based starting column.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    column: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let start = self.text.len() - self.text.trim_start().len();
        Span { text: self.text.trim(), column: self.column + self.text[..start].chars().count() }
    }

    fn split_once(self, sep: char) -> Option<(Span<'a>, Span<'a>)> {
        let at = self.text.find(sep)?;
        let left = Span { text: &self.text[..at], column: self.column };
        let right_col = self.column + self.text[..=at].chars().count();
        Some((left.trim(), Span { text: &self.text[at + sep.len_utf8()..], column: right_col }.trim()))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Where each factor of an expression appeared, for validation messages.
struct ExprSpans {
    factors: Vec<(usize, usize)>,
    whole: (usize, usize),
}

struct Positions {
    generators: Vec<(usize, usize)>,
    differential: Vec<((usize, usize), ExprSpans)>,
    bracket: Vec<((usize, usize), ExprSpans)>,
}

fn parse_number<T: std::str::FromStr>(span: Span, line: usize, what: &str) -> Result<T, ConfigError> {
    if span.text.is_empty() || !span.text.chars().all(|c| c.is_ascii_digit()) {
        return err(line, span.column, format!("expected a non-negative integer for {what}, found `{}`", span.text));
    }
    span.text.parse().or_else(|_| err(line, span.column, format!("{what} `{}` is out of range", span.text)))
}

fn parse_expr(span: Span, line: usize) -> Result<(Expr, ExprSpans), ConfigError> {
    let whole = (line, span.column);
    if span.text == "0" {
        return Ok((Expr::default(), ExprSpans { factors: Vec::new(), whole }));
    }
    if span.text.is_empty() {
        return err(line, span.column, "expected an expression");
    }
    // Split into signed terms at top-level `+`/`-`.
    let mut terms = Vec::new();
    let mut factor_spans = Vec::new();
    let bytes = span.text.as_bytes();
    let mut i = 0;
    let mut first = true;
    while i < bytes.len() {
        while i < bytes.len() && bytes[i] == b' ' {
            i += 1;
        }
        let mut negative = false;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            negative = bytes[i] == b'-';
            i += 1;
        } else if !first {
            return err(line, span.column + i, "expected `+` or `-` between terms");
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let body = Span { text: &span.text[start..i], column: span.column + start }.trim();
        if body.text.is_empty() {
            return err(line, body.column, "expected a term");
        }
        let (term, spans) = parse_term(body, line, negative)?;
        terms.push(term);
        factor_spans.extend(spans);
    }
    Ok((Expr { terms }, ExprSpans { factors: factor_spans, whole }))
}

fn parse_term(span: Span, line: usize, negative: bool) -> Result<(Term, Vec<(usize, usize)>), ConfigError> {
    let mut coefficient: Option<i64> = None;
    let mut factors = Vec::new();
    let mut spans = Vec::new();
    let mut rest = span.text;
    let mut column = span.column;
    loop {
        let (piece, next) = match rest.find('*') {
            Some(at) => (&rest[..at], Some(&rest[at + 1..])),
            None => (rest, None),
        };
        let piece_span = Span { text: piece, column }.trim();
        let text = piece_span.text;
        if text.is_empty() {
            return err(line, piece_span.column, "expected a factor");
        }
        if text.chars().all(|c| c.is_ascii_digit()) {
            if coefficient.is_some() || !factors.is_empty() {
                return err(line, piece_span.column, "the integer coefficient must come first and only once");
            }
            coefficient = Some(parse_number::<i64>(piece_span, line, "coefficient")?);
        } else {
            let (name, exponent) = match text.split_once('^') {
                Some((name, e)) => {
                    let e_col = piece_span.column + name.chars().count() + 1;
                    let e = parse_number::<u32>(Span { text: e.trim(), column: e_col }, line, "exponent")?;
                    if e == 0 {
                        return err(line, e_col, "exponents must be positive");
                    }
                    (name.trim(), e)
                }
                None => (text, 1),
            };
            if !is_identifier(name) {
                return err(line, piece_span.column, format!("`{name}` is not a generator name"));
            }
            factors.push((name.to_string(), exponent));
            spans.push((line, piece_span.column));
        }
        match next {
            Some(n) => {
                column += piece.chars().count() + 1;
                rest = n;
            }
            None => break,
        }
    }
    let magnitude = coefficient.unwrap_or(1);
    if magnitude == 0 {
        return err(line, span.column, "zero coefficients are not allowed; write `0` for the empty sum");
    }
    let coefficient = if negative { -magnitude } else { magnitude };
    Ok((Term { coefficient, factors }, spans))
}

impl Config {
    /// Parses and validates a config.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut seen = BTreeSet::new();
        let mut section: Option<Section> = None;
        let mut field_kind: Option<(String, usize, usize)> = None;
        let mut modulus: Option<(u64, usize, usize)> = None;
        let mut n: Option<i64> = None;
        let mut generators = Vec::new();
        let mut differential = Vec::new();
        let mut bracket = Vec::new();
        let (mut s, mut t, mut r) = (None, None, None);
        let mut positions = Positions { generators: Vec::new(), differential: Vec::new(), bracket: Vec::new() };
        let mut last_line = 1;

        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("");
            let span = Span { text: content, column: 1 }.trim();
            if span.text.is_empty() {
                continue;
            }
            let is_header = span.text.starts_with('[')
                && span.text.ends_with(']')
                && is_identifier(span.text[1..span.text.len() - 1].trim());
            if is_header {
                let name = span.text[1..span.text.len() - 1].trim();
                let Some(sec) = Section::from_name(name) else {
                    return err(line, span.column, format!("unknown section `[{name}]`"));
                };
                if !seen.insert(sec) {
                    return err(line, span.column, format!("section `[{name}]` appears twice"));
                }
                section = Some(sec);
                continue;
            }
            let Some(sec) = section else {
                return err(line, span.column, "expected a section header such as `[field]`");
            };
            let Some((key, value)) = span.split_once('=') else {
                return err(line, span.column, "expected `key = value`");
            };
            match sec {
                Section::Field => match key.text {
                    "kind" if field_kind.is_some() => return err(line, key.column, "duplicate key `kind`"),
                    "kind" => field_kind = Some((value.text.to_string(), line, value.column)),
                    "p" if modulus.is_some() => return err(line, key.column, "duplicate key `p`"),
                    "p" => modulus = Some((parse_number(value, line, "p")?, line, value.column)),
                    other => return err(line, key.column, format!("unknown key `{other}` in [field]")),
                },
                Section::Algebra => match key.text {
                    "n" if n.is_some() => return err(line, key.column, "duplicate key `n`"),
                    "n" => n = Some(parse_number(value, line, "n")?),
                    other => return err(line, key.column, format!("unknown key `{other}` in [algebra]")),
                },
                Section::Window => {
                    let slot = match key.text {
                        "S" => &mut s,
                        "T" => &mut t,
                        "R" => &mut r,
                        other => return err(line, key.column, format!("unknown key `{other}` in [window]")),
                    };
                    if slot.is_some() {
                        return err(line, key.column, format!("duplicate key `{}`", key.text));
                    }
                    *slot = Some(parse_number::<usize>(value, line, key.text)?);
                }
                Section::Generators => {
                    if !is_identifier(key.text) {
                        return err(line, key.column, format!("`{}` is not a valid generator name", key.text));
                    }
                    if generators.iter().any(|g: &Generator| g.name == key.text) {
                        return err(line, key.column, format!("generator `{}` declared twice", key.text));
                    }
                    let mut parts = value.text.split_whitespace();
                    let degree_text = parts.next().unwrap_or("");
                    let degree = parse_number::<u32>(Span { text: degree_text, column: value.column }, line, "degree")?;
                    if degree == 0 {
                        return err(line, value.column, "generator degrees must be positive");
                    }
                    let truncation = match (parts.next(), parts.next(), parts.next()) {
                        (None, _, _) => None,
                        (Some("trunc"), Some(e), None) => {
                            let col = value.column + value.text.find(e).unwrap_or(0);
                            let e = parse_number::<u32>(Span { text: e, column: col }, line, "truncation")?;
                            if e < 2 {
                                return err(line, col, "truncations must be at least 2");
                            }
                            Some(e)
                        }
                        _ => return err(line, value.column, "expected `<degree>` or `<degree> trunc <e>`"),
                    };
                    generators.push(Generator { name: key.text.to_string(), degree, truncation });
                    positions.generators.push((line, key.column));
                }
                Section::Differential => {
                    if !is_identifier(key.text) {
                        return err(line, key.column, format!("`{}` is not a generator name", key.text));
                    }
                    if differential.iter().any(|(g, _): &(String, Expr)| g == key.text) {
                        return err(line, key.column, format!("differential of `{}` given twice", key.text));
                    }
                    let (expr, spans) = parse_expr(value, line)?;
                    differential.push((key.text.to_string(), expr));
                    positions.differential.push(((line, key.column), spans));
                }
                Section::Bracket => {
                    let inner = key.text.strip_prefix('[').and_then(|k| k.strip_suffix(']'));
                    let pair = inner.and_then(|k| k.split_once(','));
                    let Some((g, h)) = pair.map(|(g, h)| (g.trim(), h.trim())) else {
                        return err(line, key.column, "expected `[g,h] = <expression>`");
                    };
                    if !is_identifier(g) || !is_identifier(h) {
                        return err(line, key.column, "bracket keys name two generators");
                    }
                    let duplicate = bracket
                        .iter()
                        .any(|(a, b, _): &(String, String, Expr)| (a == g && b == h) || (a == h && b == g));
                    if duplicate {
                        return err(line, key.column, format!("bracket [{g},{h}] given twice"));
                    }
                    let (expr, spans) = parse_expr(value, line)?;
                    bracket.push((g.to_string(), h.to_string(), expr));
                    positions.bracket.push(((line, key.column), spans));
                }
            }
        }

        let end = last_line + 1;
        let field = match field_kind {
            None => return err(end, 1, "missing `kind` in [field]"),
            Some((kind, line, column)) => match (kind.as_str(), modulus) {
                ("rationals", None) => FieldKind::Rationals,
                ("rationals", Some((_, l, c))) => return err(l, c, "`p` is only allowed with `kind = prime`"),
                ("prime", Some((p, l, c))) => {
                    FieldSpec::prime(p).or_else(|e| err(l, c, e.to_string()))?;
                    FieldKind::Prime(p)
                }
                ("prime", None) => return err(line, column, "`kind = prime` needs `p`"),
                (other, _) => {
                    return err(line, column, format!("unknown field kind `{other}`; expected `rationals` or `prime`"))
                }
            },
        };
        let Some(n) = n else { return err(end, 1, "missing `n` in [algebra]") };
        let window = match (s, t, r) {
            (Some(s), Some(t), Some(r)) => WindowSpec { max_external: s, max_total: t, max_page: r },
            _ => return err(end, 1, "[window] needs `S`, `T` and `R`"),
        };
        let config = Config { field, n, generators, differential, bracket, window };
        config.validate(&positions)?;
        Ok(config)
    }

    fn validate(&self, positions: &Positions) -> Result<(), ConfigError> {
        if self.n < 2 {
            return err(1, 1, format!("n = {} must be at least 2", self.n));
        }
        let names: BTreeSet<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        let check_expr = |expr: &Expr, spans: &ExprSpans| -> Result<(), ConfigError> {
            let factors = expr.terms.iter().flat_map(|t| &t.factors);
            for ((name, _), &(line, column)) in factors.zip(&spans.factors) {
                if !names.contains(name.as_str()) {
                    return err(line, column, format!("unknown generator `{name}`"));
                }
            }
            Ok(())
        };
        for ((g, expr), ((line, column), spans)) in self.differential.iter().zip(&positions.differential) {
            if !names.contains(g.as_str()) {
                return err(*line, *column, format!("unknown generator `{g}`"));
            }
            check_expr(expr, spans)?;
        }
        for ((g, h, expr), ((line, column), spans)) in self.bracket.iter().zip(&positions.bracket) {
            for name in [g, h] {
                if !names.contains(name.as_str()) {
                    return err(*line, *column, format!("unknown generator `{name}`"));
                }
            }
            check_expr(expr, spans)?;
        }

        let mut spec = self.base_algebra().map_err(|e| ConfigError { line: 1, column: 1, message: e.to_string() })?;
        for ((g, expr), (_, spans)) in self.differential.iter().zip(&positions.differential) {
            let value = self.element(&spec, expr);
            let (line, column) = spans.whole;
            spec = spec.with_differential(g, value).map_err(|e| ConfigError { line, column, message: e.to_string() })?;
        }
        for ((g, h, expr), (_, spans)) in self.bracket.iter().zip(&positions.bracket) {
            let value = self.element(&spec, expr);
            let (line, column) = spans.whole;
            spec = spec.with_bracket(g, h, value).map_err(|e| ConfigError { line, column, message: e.to_string() })?;
        }
        Ok(())
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self.field {
            FieldKind::Rationals => FieldSpec::Rationals,
            FieldKind::Prime(p) => FieldSpec::prime(p).expect("validated at parse time"),
        }
    }

    fn base_algebra(&self) -> barss_core::Result<AlgebraSpec> {
        let gens = self
            .generators
            .iter()
            .map(|g| GeneratorSpec { name: g.name.clone(), degree: g.degree, truncation: g.truncation })
            .collect();
        AlgebraSpec::new(self.field_spec(), self.n, gens)
    }

    fn element(&self, spec: &AlgebraSpec, expr: &Expr) -> AlgebraElement {
        let field = spec.field();
        let mut out = AlgebraElement::zero();
        for term in &expr.terms {
            let word: Vec<&str> =
                term.factors.iter().flat_map(|(name, e)| std::iter::repeat_n(name.as_str(), *e as usize)).collect();
            let Some((monomial, negative)) = spec.canonicalize(&word).expect("generators validated") else {
                continue;
            };
            out.add_term(monomial, field.from_i64(term.coefficient).signed(negative));
        }
        out
    }

    /// The algebra the config describes.
    pub fn algebra(&self) -> barss_core::Result<AlgebraSpec> {
        let mut spec = self.base_algebra()?;
        for (g, expr) in &self.differential {
            let value = self.element(&spec, expr);
            spec = spec.with_differential(g, value)?;
        }
        for (g, h, expr) in &self.bracket {
            let value = self.element(&spec, expr);
            spec = spec.with_bracket(g, h, value)?;
        }
        Ok(spec)
    }

    pub fn window(&self) -> Window {
        self.window.into()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let magnitude = term.coefficient.unsigned_abs();
            match (i, term.coefficient < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if term.factors.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            for (k, (name, e)) in term.factors.iter().enumerate() {
                if k > 0 {
                    f.write_str("*")?;
                }
                f.write_str(name)?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Config {
    /// The canonical text form; parsing it gives back an equal config.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[field]")?;
        match self.field {
            FieldKind::Rationals => writeln!(f, "kind = rationals")?,
            FieldKind::Prime(p) => writeln!(f, "kind = prime\np = {p}")?,
        }
        writeln!(f, "\n[algebra]\nn = {}\n\n[generators]", self.n)?;
        for g in &self.generators {
            match g.truncation {
                Some(e) => writeln!(f, "{} = {} trunc {e}", g.name, g.degree)?,
                None => writeln!(f, "{} = {}", g.name, g.degree)?,
            }
        }
        writeln!(f, "\n[differential]")?;
        for (g, expr) in &self.differential {
            writeln!(f, "{g} = {expr}")?;
        }
        writeln!(f, "\n[bracket]")?;
        for (g, h, expr) in &self.bracket {
            writeln!(f, "[{g},{h}] = {expr}")?;
        }
        let w = self.window;
        write!(f, "\n[window]\nS = {}\nT = {}\nR = {}\n", w.max_external, w.max_total, w.max_page)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXTERIOR: &str = "[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\nx = 1\n[window]\nS = 3\nT = 8\nR = 2\n";

    fn sphere(bracket: &str) -> String {
        format!(
            "[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\na = 2\nb = 5\n[bracket]\n{bracket}\n[window]\nS = 3\nT = 10\nR = 3\n"
        )
    }

    #[test]
    fn exterior_parses() {
        let c = Config::parse(EXTERIOR).unwrap();
        assert_eq!(c.generators, vec![Generator { name: "x".into(), degree: 1, truncation: None }]);
        assert!(c.algebra().unwrap().has_zero_bracket());
    }

    #[test]
    fn homogeneous_bracket_accepted() {
        let c = Config::parse(&sphere("[a,a] = 2*b")).unwrap();
        let spec = c.algebra().unwrap();
        let a = spec.generator("a").unwrap();
        assert_eq!(spec.format_element(&spec.bracket(&a, &a).unwrap()), "2*b");
    }

    #[test]
    fn inhomogeneous_bracket_rejected() {
        let text = "[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\na = 2\nb = 4\n[bracket]\n[a,a] = b\n[window]\nS = 3\nT = 10\nR = 3\n";
        let e = Config::parse(text).unwrap_err();
        assert_eq!((e.line, e.column), (9, 9));
        assert!(e.message.contains("[a,a]") && e.message.contains("degree 5"), "{}", e.message);
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let e = Config::parse(&sphere("[a,a] = 2*q")).unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (9, 11, "unknown generator `q`"));
        let e = Config::parse(&sphere("[a,a] = 2**b")).unwrap_err();
        assert_eq!((e.line, e.column), (9, 11));
        let e = Config::parse("[field]\nkind = reals\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        let e = Config::parse("[field]\ncolour = red\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = Config::parse("x = 1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn expressions_print_canonically() {
        let (e, _) = parse_expr(Span { text: "-2*a^2*b + c - 3", column: 1 }, 1).unwrap();
        assert_eq!(e.to_string(), "-2*a^2*b + c - 3");
        assert_eq!(e.terms[0], Term { coefficient: -2, factors: vec![("a".into(), 2), ("b".into(), 1)] });
        let (zero, _) = parse_expr(Span { text: "0", column: 1 }, 1).unwrap();
        assert_eq!(zero, Expr::default());
    }

    #[test]
    fn prime_field_needs_a_prime() {
        let e = Config::parse("[field]\nkind = prime\np = 6\n[algebra]\nn = 2\n[generators]\n[window]\nS = 1\nT = 1\nR = 1\n")
            .unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
    }
}

use barss_cli::config::{Expr, FieldKind, Generator, Term, WindowSpec};
use barss_cli::Config;
use barss_core::algebra::{AlgebraSpec, GeneratorSpec};
use barss_core::field::FieldSpec;
use proptest::prelude::*;

#[test]
fn shipped_configs_reserialize_to_equal_configs() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let config = Config::parse(&text).unwrap();
        assert_eq!(Config::parse(&config.to_string()).unwrap(), config);
    }
}

#[test]
fn truncation_and_prime_field_round_trip() {
    let text = "[field]\nkind = prime\np = 5\n[algebra]\nn = 2\n[generators]\na = 2 trunc 5 # comment\n[window]\nS = 3\nT = 10\nR = 2\n";
    let c = Config::parse(text).unwrap();
    assert_eq!(c.field, FieldKind::Prime(5));
    assert_eq!(c.generators[0], Generator { name: "a".into(), degree: 2, truncation: Some(5) });
    assert!(c.to_string().contains("a = 2 trunc 5\n"));
}

#[test]
fn differential_values_are_validated() {
    let base = |d: &str| {
        format!("[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\ny = 2\nz = 5\n[differential]\nz = {d}\n[window]\nS = 1\nT = 4\nR = 1\n")
    };
    assert!(Config::parse(&base("y^2")).is_ok());
    let e = Config::parse(&base("y")).unwrap_err();
    assert_eq!(e.line, 9);
    assert!(e.message.contains("d(z)") && e.message.contains("degree 4"), "{}", e.message);
}

fn arb_generators() -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec((1u32..6, prop::option::of(2u32..5)), 1..4).prop_map(|gs| {
        gs.into_iter()
            .enumerate()
            .map(|(i, (degree, truncation))| Generator { name: format!("g{i}"), degree, truncation })
            .collect()
    })
}

/// A homogeneous expression of degree `degree`, drawn from the basis of the algebra.
fn homogeneous(spec: &AlgebraSpec, degree: i64, picks: &[(usize, i64)]) -> Expr {
    if degree <= 0 {
        return Expr::default();
    }
    let basis = spec.basis(degree as u32);
    if basis.is_empty() {
        return Expr::default();
    }
    let mut terms = Vec::new();
    for &(i, c) in picks {
        let m = &basis[i % basis.len()];
        let factors = m.factors().iter().map(|&(g, e)| (spec.generators()[g].name.clone(), e)).collect();
        terms.push(Term { coefficient: c, factors });
    }
    Expr { terms }
}

fn arb_config() -> impl Strategy<Value = Config> {
    (
        prop_oneof![Just(FieldKind::Rationals), Just(FieldKind::Prime(3)), Just(FieldKind::Prime(7))],
        2i64..5,
        arb_generators(),
        prop::collection::vec((0usize..8, prop_oneof![-5i64..=-1, 1i64..=5]), 0..3),
        (0usize..5, 0usize..12, 0usize..4),
        any::<bool>(),
    )
        .prop_map(|(field, n, generators, picks, (s, t, r), with_tables)| {
            let field_spec = match field {
                FieldKind::Rationals => FieldSpec::Rationals,
                FieldKind::Prime(p) => FieldSpec::prime(p).unwrap(),
            };
            let gens =
                generators.iter().map(|g| GeneratorSpec { name: g.name.clone(), degree: g.degree, truncation: g.truncation }).collect();
            let spec = AlgebraSpec::new(field_spec, n, gens).unwrap();
            let mut bracket = Vec::new();
            if with_tables {
                let (g, h) = (&generators[0], generators.last().unwrap());
                let degree = g.degree as i64 + h.degree as i64 + n - 1;
                bracket.push((g.name.clone(), h.name.clone(), homogeneous(&spec, degree, &picks)));
            }
            Config {
                field,
                n,
                generators,
                differential: Vec::new(),
                bracket,
                window: WindowSpec { max_external: s, max_total: t, max_page: r },
            }
        })
}

proptest! {
    #[test]
    fn parse_serialize_parse_is_identity(config in arb_config()) {
        let text = config.to_string();
        let parsed = Config::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &config);
        prop_assert_eq!(Config::parse(&parsed.to_string()).unwrap(), parsed);
    }

    #[test]
    fn garbage_lines_never_panic(line in "[ -~]{0,24}") {
        let text = format!("[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\n{line}\n[window]\nS = 1\nT = 1\nR = 1\n");
        if let Err(e) = Config::parse(&text) {
            prop_assert!(e.line >= 1 && e.column >= 1);
        }
    }
}

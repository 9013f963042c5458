use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::{AlgebraElement, AlgebraSpec, GeneratorSpec};
use crate::bar::BarElement;
use crate::field::FieldSpec;
use crate::Error;

const Q: FieldSpec = FieldSpec::Rationals;

fn exterior() -> AlgebraSpec {
    AlgebraSpec::new(Q, 2, vec![GeneratorSpec::new("x", 1)]).unwrap()
}

fn poly() -> AlgebraSpec {
    AlgebraSpec::new(Q, 2, vec![GeneratorSpec::new("a", 2)]).unwrap()
}

fn sphere() -> AlgebraSpec {
    let a = AlgebraSpec::new(Q, 2, vec![GeneratorSpec::new("a", 2), GeneratorSpec::new("b", 5)]).unwrap();
    let two_b = a.generator("b").unwrap().scaled(&Q.from_i64(2));
    a.with_bracket("a", "a", two_b).unwrap()
}

fn dga() -> AlgebraSpec {
    let a = AlgebraSpec::new(Q, 2, vec![GeneratorSpec::new("y", 2), GeneratorSpec::new("z", 5)]).unwrap();
    let y = a.generator("y").unwrap();
    let y2 = a.multiply(&y, &y).unwrap();
    a.with_differential("z", y2).unwrap()
}

fn sseq(spec: AlgebraSpec, s: usize, t: usize, r: usize) -> SpectralSequence {
    SpectralSequence::compute(spec, Window::new(s, t, r), DEFAULT_MAX_BASIS).unwrap()
}

fn gen_class(ss: &SpectralSequence, r: usize, names: &[&str]) -> PageClass {
    let bar = ss.complex().bar();
    let entries: Vec<AlgebraElement> = names.iter().map(|n| bar.algebra().generator(n).unwrap()).collect();
    let rep = bar.word(&entries);
    let (s, t) = rep.bidegree().unwrap();
    ss.class(r, s as i64, t as i64, rep).unwrap()
}

fn tor(fc: &FilteredComplex) -> Vec<Option<usize>> {
    fc.tor_dimensions().into_values().collect()
}

#[test]
fn exterior_words() {
    let fc = FilteredComplex::assemble(exterior(), Window::new(3, 3, 1), DEFAULT_MAX_BASIS).unwrap();
    let sizes: Vec<usize> = (0..=3).map(|m| fc.dimension(m)).collect();
    assert_eq!(sizes, vec![1, 0, 1, 0]);
    assert_eq!(fc.bar().format_word(&fc.words(2)[0]), "[x]");
    assert_eq!(fc.top_degree(), 4);
}

#[test]
fn no_generators_gives_only_the_empty_word() {
    let trivial = AlgebraSpec::new(Q, 2, vec![]).unwrap();
    let fc = FilteredComplex::assemble(trivial, Window::new(3, 6, 2), DEFAULT_MAX_BASIS).unwrap();
    assert_eq!(fc.dimension(0), 1);
    assert!((1..=6).all(|m| fc.dimension(m) == 0));
    let expected: Vec<Option<usize>> = (0..=6).map(|m| Some((m == 0) as usize)).collect();
    assert_eq!(tor(&fc), expected);
}

#[test]
fn polynomial_words() {
    let fc = FilteredComplex::assemble(poly(), Window::new(3, 3, 1), DEFAULT_MAX_BASIS).unwrap();
    let words: Vec<(usize, u32)> = (0..=3)
        .flat_map(|m| fc.words(m).iter().map(|w| (w.external_degree(), w.internal_degree())))
        .collect();
    assert_eq!(words, vec![(0, 0), (1, 2)]);
}

#[test]
fn blow_up_is_reported() {
    let many = AlgebraSpec::new(Q, 2, (0..6).map(|i| GeneratorSpec::new(&alloc::format!("g{i}"), 1)).collect()).unwrap();
    let err = FilteredComplex::assemble(many, Window::new(4, 8, 1), 100).unwrap_err();
    assert!(matches!(err, Error::BasisBlowUp { limit: 100, .. }));
}

#[test]
fn page_zero_counts_words() {
    let ss = sseq(sphere(), 3, 10, 1);
    let e0 = ss.page(0).unwrap();
    for g in e0.groups() {
        assert_eq!(g.dimension(), ss.complex().bidegree_dimension(g.p() as usize, g.q() as usize));
    }
}

#[test]
fn zero_differential_page_one_is_the_bar_complex() {
    let ss = sseq(sphere(), 3, 10, 1);
    let e0 = ss.page(0).unwrap().dimensions();
    let e1 = ss.page(1).unwrap().dimensions();
    for (k, d) in &e1 {
        assert_eq!(e0[k], *d);
    }
}

#[test]
fn exterior_page_two_is_diagonal() {
    let ss = sseq(exterior(), 6, 12, 2);
    let e2 = ss.page(2).unwrap();
    assert!(e2.groups().count() > 0);
    for g in e2.groups() {
        assert_eq!(g.dimension(), (g.p() == g.q()) as usize, "({}, {})", g.p(), g.q());
    }
}

#[test]
fn polynomial_d1_of_a_square() {
    let ss = sseq(poly(), 3, 8, 2);
    let aa = gen_class(&ss, 1, &["a", "a"]);
    let d = ss.differential(&aa).unwrap();
    assert_eq!((d.p, d.q), (1, 4));
    assert_eq!(ss.format_class(&d), "-[a^2]");
}

#[test]
fn higher_differentials_vanish_without_internal_differential() {
    let ss = sseq(sphere(), 3, 10, 3);
    for r in 2..=3 {
        let page = ss.page(r).unwrap();
        for g in page.groups() {
            for c in ss.basis_classes(r, g.p(), g.q()).unwrap() {
                match ss.differential(&c) {
                    Ok(d) => assert!(ss.is_zero_class(&d).unwrap()),
                    Err(Error::Unknown { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}

#[test]
fn cycles_have_zero_differential() {
    let ss = sseq(poly(), 3, 8, 2);
    let a = gen_class(&ss, 1, &["a"]);
    assert!(ss.is_zero_class(&ss.differential(&a).unwrap()).unwrap());
}

#[test]
fn exterior_product_on_page_two() {
    let ss = sseq(exterior(), 3, 10, 2);
    let x = gen_class(&ss, 2, &["x"]);
    let xx = ss.product(&x, &x).unwrap();
    assert_eq!(ss.format_class(&xx), "2*[x|x]");
    let unit = ss.class(2, 0, 0, BarElement::from_word(crate::bar::BarWord::empty(), Q.one())).unwrap();
    assert_eq!(ss.product(&unit, &x).unwrap(), ss.normalize(&x).unwrap());
}

#[test]
fn product_outside_the_window_is_unknown() {
    let ss = sseq(exterior(), 2, 10, 2);
    let xx = gen_class(&ss, 2, &["x", "x"]);
    assert!(matches!(ss.product(&xx, &xx), Err(Error::Unknown { p: 4, q: 4, .. })));
}

#[test]
fn bracket_of_generators_on_page_one() {
    let ss = sseq(sphere(), 3, 10, 1);
    let a = gen_class(&ss, 1, &["a"]);
    let aa = ss.bracket(&a, &a).unwrap();
    assert_eq!((aa.p, aa.q), (1, 5));
    assert_eq!(ss.format_class(&aa), "2*[b]");

    let zero = sseq(poly(), 3, 8, 1);
    let a = gen_class(&zero, 1, &["a"]);
    assert!(zero.is_zero_class(&zero.bracket(&a, &a).unwrap()).unwrap());
}

#[test]
fn non_cycles_are_rejected() {
    let ss = sseq(poly(), 3, 8, 2);
    let bar = ss.complex().bar();
    let a = bar.algebra().generator("a").unwrap();
    let aa = bar.word(&[a.clone(), a]);
    assert!(matches!(ss.class(2, 2, 4, aa), Err(Error::NotACycle { .. })));
}

#[test]
fn unknown_outside_the_safe_region() {
    let ss = sseq(exterior(), 2, 10, 2);
    assert_eq!(ss.page(2).unwrap().dimension(3, 3), None);
    assert_eq!(ss.page(2).unwrap().dimension(-1, 3), Some(0));
    assert!(matches!(ss.page(5), Err(Error::PageOutOfRange(5))));
}

#[test]
fn tor_of_polynomial_algebra() {
    let fc = FilteredComplex::assemble(poly(), Window::new(6, 12, 1), DEFAULT_MAX_BASIS).unwrap();
    let expected: Vec<Option<usize>> = (0..=12).map(|m| Some((m == 0 || m == 3) as usize)).collect();
    assert_eq!(tor(&fc), expected);
}

#[test]
fn tor_of_exterior_algebra() {
    let fc = FilteredComplex::assemble(exterior(), Window::new(6, 12, 1), DEFAULT_MAX_BASIS).unwrap();
    let expected: Vec<Option<usize>> = (0..=12).map(|m| Some((m % 2 == 0) as usize)).collect();
    assert_eq!(tor(&fc), expected);
}

#[test]
fn tor_is_unknown_past_the_external_cap() {
    let fc = FilteredComplex::assemble(exterior(), Window::new(2, 8, 1), DEFAULT_MAX_BASIS).unwrap();
    let t = tor(&fc);
    assert_eq!(&t[..5], &[Some(1), Some(0), Some(1), Some(0), Some(1)]);
    assert_eq!(t[5], None);
}

#[test]
fn dga_converges_to_its_tor() {
    // Tor over ℚ[y₂] ⊗ Λ(z₅), dz = y², is 1 in every degree divisible by 3.
    let ss = sseq(dga(), 6, 12, 4);
    let tor = ss.complex().tor_dimensions();
    for (m, dim) in tor {
        let Some(dim) = dim else { continue };
        assert_eq!(dim, (m % 3 == 0) as usize, "degree {m}");
        let total: Option<usize> = (0..=m as i64).map(|p| ss.infinity().dimension(p, m as i64 - p)).sum();
        if let Some(total) = total {
            assert_eq!(total, dim);
        }
    }
    assert!(ss.stable_at().is_some());
}

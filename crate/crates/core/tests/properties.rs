use barss_core::algebra::{AlgebraElement, AlgebraSpec, GeneratorSpec};
use barss_core::bar::{BarConstruction, BarElement};
use barss_core::field::{row_reduce, FieldSpec, Scalar, SparseMatrix};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::prime(2).unwrap()), Just(FieldSpec::prime(5).unwrap()), Just(FieldSpec::prime(2_147_483_647).unwrap())]
}

fn scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6).prop_map(move |(n, d)| match field {
        FieldSpec::Rationals => field.ratio(n, d).unwrap(),
        _ => field.from_i64(n),
    })
}

fn matrix() -> impl Strategy<Value = (FieldSpec, Vec<Vec<Scalar>>)> {
    (fields(), 0usize..6, 0usize..6).prop_flat_map(|(f, r, c)| {
        (Just(f), prop::collection::vec(prop::collection::vec(scalar(f), c), r))
    })
}

proptest! {
    #[test]
    fn scalar_inverses(field in fields(), a in -50i64..50) {
        let a = field.from_i64(a);
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn rank_nullity((field, rows) in matrix()) {
        let cols = rows.first().map_or(0, Vec::len);
        let m = SparseMatrix::from_dense(field, &rows).unwrap();
        let red = row_reduce(&m);
        prop_assert_eq!(red.rank + red.kernel_basis.len(), m.cols());
        prop_assert_eq!(m.cols(), cols);
        for v in &red.kernel_basis {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        let again = row_reduce(&m);
        prop_assert_eq!(&again.pivot_columns, &red.pivot_columns);
        prop_assert_eq!(&again.kernel_basis, &red.kernel_basis);
    }

    #[test]
    fn graded_commutativity_on_random_elements(
        coeffs in prop::collection::vec(-3i64..4, 8),
        split in 1usize..7,
    ) {
        let q = FieldSpec::Rationals;
        let spec = AlgebraSpec::new(q, 2, vec![GeneratorSpec::new("a", 2), GeneratorSpec::new("x", 1), GeneratorSpec::new("y", 3)]).unwrap();
        let element = |d: u32, cs: &[i64]| {
            let mut u = AlgebraElement::zero();
            for (m, c) in spec.basis(d).into_iter().zip(cs) {
                u.add_term(m, q.from_i64(*c));
            }
            u
        };
        let (d1, d2) = (split as u32, 7 - split as u32);
        let (u, v) = (element(d1, &coeffs[..4]), element(d2, &coeffs[4..]));
        let lhs = spec.multiply(&u, &v).unwrap();
        let rhs = spec.multiply(&v, &u).unwrap().scaled(&q.sign((d1 * d2) % 2 == 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_differential_squares_to_zero_on_random_chains(coeffs in prop::collection::vec(-4i64..5, 1..12)) {
        let q = FieldSpec::Rationals;
        let spec = AlgebraSpec::new(q, 2, vec![GeneratorSpec::new("y", 2), GeneratorSpec::new("z", 5)]).unwrap();
        let y = spec.generator("y").unwrap();
        let y2 = spec.multiply(&y, &y).unwrap();
        let spec = spec.with_differential("z", y2).unwrap();
        let bar = BarConstruction::new(spec);
        let words = bar.basis_words(3, 9);
        let mut u = BarElement::zero();
        for (w, c) in words.iter().zip(&coeffs) {
            u.add_term(w.clone(), q.from_i64(*c));
        }
        prop_assert!(bar.total_differential(&bar.total_differential(&u)).is_zero());
    }
}

#[test]
fn field_examples() {
    let q = FieldSpec::Rationals;
    assert_eq!(&q.ratio(1, 2).unwrap() + &q.ratio(1, 3).unwrap(), q.ratio(5, 6).unwrap());
    let f5 = FieldSpec::prime(5).unwrap();
    assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
    assert!((-q.zero()).is_zero());
    assert!(q.zero().inv().is_err());
}

#[test]
fn rank_one_kernel() {
    let q = FieldSpec::Rationals;
    let m = SparseMatrix::from_dense(q, &[vec![q.from_i64(1), q.from_i64(2)], vec![q.from_i64(2), q.from_i64(4)]]).unwrap();
    let red = row_reduce(&m);
    assert_eq!(red.rank, 1);
    assert_eq!(red.kernel_basis.len(), 1);
    assert_eq!(red.kernel_basis[0].to_dense(q, 2), vec![q.from_i64(-2), q.from_i64(1)]);
}

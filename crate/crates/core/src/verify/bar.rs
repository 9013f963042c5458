use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{tuples, AxiomReport, Failure, Scope};
use crate::algebra::{odd, AlgebraSpec};
use crate::bar::{BarConstruction, BarElement, TensorBarElement};
use crate::Result;

/// Bar-level identities over basis words with `s ≤ max_s`; tuples are kept
/// when their combined internal degree is at most `max_t`.
pub fn check_bar_axioms(spec: &AlgebraSpec, max_s: usize, max_t: u32) -> Vec<AxiomReport> {
    let bar = BarConstruction::new(spec.clone());
    let one = bar.field().one();
    let words = bar.basis_words(max_s, max_t);
    let elems: Vec<BarElement> = words.iter().map(|w| BarElement::from_word(w.clone(), one.clone())).collect();
    let total: Vec<i64> = words.iter().map(|w| w.total_degree()).collect();
    let internal: Vec<u32> = words.iter().map(|w| w.internal_degree()).collect();
    let fmt = |u: &BarElement| bar.format_element(u);
    let fmt2 = |u: &TensorBarElement| bar.format_tensor(u);
    let show = |idx: &[usize]| idx.iter().map(|&i| bar.format_word(&words[i])).collect::<Vec<String>>();
    let sign = |k: i64| bar.field().sign(odd(k));
    let n = spec.n();
    let m = bar.bracket_shift();

    let within = |t: &[usize]| t.iter().map(|&i| internal[i]).sum::<u32>() <= max_t;
    let weight = |t: &[usize]| t.iter().map(|&i| total[i]).sum::<i64>();
    let pairs = tuples(words.len(), 2, within, weight);
    let triples = tuples(words.len(), 3, within, weight);

    let mut d2 = AxiomReport::new("bar.d-squared", Scope::Bar, "d∘d = 0");
    let mut delta2 = AxiomReport::new("bar.delta-squared", Scope::Bar, "δ∘δ = 0");
    let mut anti = AxiomReport::new("bar.d-delta-anticommute", Scope::Bar, "dδ + δd = 0");
    let mut big_d2 = AxiomReport::new("bar.D-squared", Scope::Bar, "D∘D = 0 for D = d + δ");
    for (i, u) in elems.iter().enumerate() {
        let zero = || "0".to_string();
        let dd = bar.internal_differential(&bar.internal_differential(u));
        d2.record(dd.is_zero(), || Failure { inputs: show(&[i]), lhs: fmt(&dd), rhs: zero() });
        let ee = bar.external_differential(&bar.external_differential(u));
        delta2.record(ee.is_zero(), || Failure { inputs: show(&[i]), lhs: fmt(&ee), rhs: zero() });
        let de = bar
            .internal_differential(&bar.external_differential(u))
            .plus(&bar.external_differential(&bar.internal_differential(u)));
        anti.record(de.is_zero(), || Failure { inputs: show(&[i]), lhs: fmt(&de), rhs: zero() });
        let big = bar.total_differential(&bar.total_differential(u));
        big_d2.record(big.is_zero(), || Failure { inputs: show(&[i]), lhs: fmt(&big), rhs: zero() });
    }

    let mut commutative = AxiomReport::new("bar.shuffle-commutativity", Scope::Bar, "x*y = (−1)^{|x||y|} y*x");
    let mut product_leibniz =
        AxiomReport::new("bar.D-leibniz-product", Scope::Bar, "D(x*y) = Dx*y + (−1)^|x| x*Dy");
    let mut coproduct_mult = AxiomReport::new(
        "bar.coproduct-multiplicative",
        Scope::Bar,
        "Δ(x*y) = Δx·Δy with (a⊗b)(c⊗e) = (−1)^{|b||c|} ac⊗be",
    );
    let mut bidegree = AxiomReport::new("bar.bracket-bidegree", Scope::Bar, "[u,v] has bidegree (s₁+s₂−1, t₁+t₂+n−1)");
    let mut antisym = AxiomReport::new("bar.antisymmetry", Scope::Bar, "[u,v] = −(−1)^{(|u|+m)(|v|+m)} [v,u], m = n−2");
    let mut d_leibniz = AxiomReport::new("bar.d-leibniz-bracket", Scope::Bar, "d[u,v] = [du,v] + (−1)^{n+|u|} [u,dv]");
    let mut delta_leibniz =
        AxiomReport::new("bar.delta-leibniz-bracket", Scope::Bar, "δ[u,v] = [δu,v] + (−1)^{n+|u|} [u,δv]");
    let mut big_leibniz = AxiomReport::new("bar.D-leibniz-bracket", Scope::Bar, "D[u,v] = [Du,v] + (−1)^{n+|u|} [u,Dv]");
    let mut coproduct_bracket =
        AxiomReport::new("bar.coproduct-bracket", Scope::Bar, "Δ[x,y] = [Δx,Δy] with the tensor-product bracket");

    for t in &pairs {
        let (u, v) = (&elems[t[0]], &elems[t[1]]);
        let (du, dv) = (total[t[0]], total[t[1]]);

        let lhs = bar.shuffle_product(u, v);
        let rhs = bar.shuffle_product(v, u).scaled(&sign(du * dv));
        commutative.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

        let lhs = bar.total_differential(&bar.shuffle_product(u, v));
        let mut rhs = bar.shuffle_product(&bar.total_differential(u), v);
        rhs.add_scaled(&bar.shuffle_product(u, &bar.total_differential(v)), &sign(du));
        product_leibniz.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

        let lhs = bar.coproduct(&bar.shuffle_product(u, v));
        let rhs = bar.tensor_product(&bar.coproduct(u), &bar.coproduct(v));
        coproduct_mult.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt2(&lhs), rhs: fmt2(&rhs) });

        let outcome: Result<()> = (|| {
            let uv = bar.bracket(u, v)?;
            let (s1, t1) = (words[t[0]].external_degree() as i64, internal[t[0]] as i64);
            let (s2, t2) = (words[t[1]].external_degree() as i64, internal[t[1]] as i64);
            let expected = (s1 + s2 - 1, t1 + t2 + n - 1);
            let ok = uv.terms().all(|(w, _)| (w.external_degree() as i64, w.internal_degree() as i64) == expected);
            bidegree.record(ok, || Failure {
                inputs: show(t),
                lhs: fmt(&uv),
                rhs: alloc::format!("bidegree {expected:?}"),
            });

            let rhs = bar.bracket(v, u)?.scaled(&sign((du + m) * (dv + m) + 1));
            antisym.record(uv == rhs, || Failure { inputs: show(t), lhs: fmt(&uv), rhs: fmt(&rhs) });

            let s = sign(n + du);
            type Op<'a> = &'a dyn Fn(&BarElement) -> BarElement;
            let ops: [(Op, &mut AxiomReport); 3] = [
                (&|x| bar.internal_differential(x), &mut d_leibniz),
                (&|x| bar.external_differential(x), &mut delta_leibniz),
                (&|x| bar.total_differential(x), &mut big_leibniz),
            ];
            for (op, report) in ops {
                let lhs = op(&uv);
                let mut rhs = bar.bracket(&op(u), v)?;
                rhs.add_scaled(&bar.bracket(u, &op(v))?, &s);
                report.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });
            }

            let lhs = bar.coproduct(&uv);
            let rhs = bar.tensor_bracket(&bar.coproduct(u), &bar.coproduct(v))?;
            coproduct_bracket.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt2(&lhs), rhs: fmt2(&rhs) });
            Ok(())
        })();
        if let Err(e) = outcome {
            antisym.record_error(show(t), e.to_string());
        }
    }

    let mut poisson = AxiomReport::new("bar.poisson", Scope::Bar, "[x,y*z] = [x,y]*z + (−1)^{|y|(|x|+m)} y*[x,z]");
    let mut jacobi = AxiomReport::new(
        "bar.jacobi",
        Scope::Bar,
        "[x,[y,z]] = [[x,y],z] + (−1)^{(|x|+m)(|y|+m)} [y,[x,z]]",
    );
    for t in &triples {
        let (x, y, z) = (&elems[t[0]], &elems[t[1]], &elems[t[2]]);
        let (dx, dy) = (total[t[0]], total[t[1]]);
        let outcome: Result<()> = (|| {
            let lhs = bar.bracket(x, &bar.shuffle_product(y, z))?;
            let mut rhs = bar.shuffle_product(&bar.bracket(x, y)?, z);
            rhs.add_scaled(&bar.shuffle_product(y, &bar.bracket(x, z)?), &sign(dy * (dx + m)));
            poisson.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

            let lhs = bar.bracket(x, &bar.bracket(y, z)?)?;
            let mut rhs = bar.bracket(&bar.bracket(x, y)?, z)?;
            rhs.add_scaled(&bar.bracket(y, &bar.bracket(x, z)?)?, &sign((dx + m) * (dy + m)));
            jacobi.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });
            Ok(())
        })();
        if let Err(e) = outcome {
            poisson.record_error(show(t), e.to_string());
        }
    }

    alloc::vec![
        d2,
        delta2,
        anti,
        big_d2,
        commutative,
        product_leibniz,
        coproduct_mult,
        bidegree,
        antisym,
        poisson,
        jacobi,
        d_leibniz,
        delta_leibniz,
        big_leibniz,
        coproduct_bracket,
    ]
}

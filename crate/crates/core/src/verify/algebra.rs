use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{tuples, AxiomReport, Failure, Scope};
use crate::algebra::{odd, AlgebraElement, AlgebraSpec};
use crate::Result;

/// Algebra-level identities on all basis monomials of degree ≤ `cap`.
pub fn check_algebra_axioms(spec: &AlgebraSpec, cap: u32) -> Vec<AxiomReport> {
    let one = spec.field().one();
    let basis: Vec<AlgebraElement> = (0..=cap)
        .flat_map(|d| spec.basis(d))
        .map(|m| AlgebraElement::from_monomial(m, one.clone()))
        .collect();
    let deg: Vec<i64> = basis.iter().map(|u| u.degree().unwrap_or(0) as i64).collect();
    let fmt = |u: &AlgebraElement| spec.format_element(u);
    let show = |idx: &[usize]| idx.iter().map(|&i| fmt(&basis[i])).collect::<Vec<String>>();
    let sign = |k: i64| spec.field().sign(odd(k));
    let n = spec.n();
    let n1 = n - 1;

    let pairs = tuples(basis.len(), 2, |_| true, |t| deg[t[0]] + deg[t[1]]);
    let triples = tuples(basis.len(), 3, |_| true, |t| deg[t[0]] + deg[t[1]] + deg[t[2]]);

    let mut d2 = AxiomReport::new("algebra.d-squared", Scope::Algebra, "d(du) = 0");
    for u in &basis {
        let ddu = spec.differential(&spec.differential(u).expect("same algebra")).expect("same algebra");
        d2.record(ddu.is_zero(), || Failure { inputs: alloc::vec![fmt(u)], lhs: fmt(&ddu), rhs: "0".into() });
    }

    let mut leibniz = AxiomReport::new("algebra.d-leibniz", Scope::Algebra, "d(uv) = (du)v + (−1)^|u| u(dv)");
    let mut commutative = AxiomReport::new("algebra.graded-commutativity", Scope::Algebra, "uv = (−1)^{|u||v|} vu");
    let mut degree = AxiomReport::new("algebra.bracket-degree", Scope::Algebra, "[u,v] is homogeneous of degree |u|+|v|+n−1");
    let mut antisym = AxiomReport::new(
        "algebra.antisymmetry",
        Scope::Algebra,
        "[u,v] = −(−1)^{(|u|+n−1)(|v|+n−1)} [v,u]",
    );
    let mut d_bracket = AxiomReport::new(
        "algebra.d-bracket-leibniz",
        Scope::Algebra,
        "d[u,v] = [du,v] + (−1)^{n−1+|u|} [u,dv]",
    );
    for t in &pairs {
        let (u, v) = (&basis[t[0]], &basis[t[1]]);
        let (du, dv) = (deg[t[0]], deg[t[1]]);
        let mul = |a: &AlgebraElement, b: &AlgebraElement| spec.multiply(a, b).expect("same algebra");
        let d = |a: &AlgebraElement| spec.differential(a).expect("same algebra");

        let lhs = d(&mul(u, v));
        let mut rhs = mul(&d(u), v);
        rhs.add_scaled(&mul(u, &d(v)), &sign(du));
        leibniz.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

        let lhs = mul(u, v);
        let rhs = mul(v, u).scaled(&sign(du * dv));
        commutative.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

        let outcome: Result<()> = (|| {
            let uv = spec.bracket(u, v)?;
            degree.record(uv.is_homogeneous_of(du + dv + n1), || Failure {
                inputs: show(t),
                lhs: fmt(&uv),
                rhs: alloc::format!("degree {}", du + dv + n1),
            });

            let rhs = spec.bracket(v, u)?.scaled(&sign((du + n1) * (dv + n1) + 1));
            antisym.record(uv == rhs, || Failure { inputs: show(t), lhs: fmt(&uv), rhs: fmt(&rhs) });

            let lhs = d(&uv);
            let mut rhs = spec.bracket(&d(u), v)?;
            rhs.add_scaled(&spec.bracket(u, &d(v))?, &sign(n1 + du));
            d_bracket.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });
            Ok(())
        })();
        if let Err(e) = outcome {
            antisym.record_error(show(t), e.to_string());
        }
    }

    let mut poisson = AxiomReport::new(
        "algebra.poisson",
        Scope::Algebra,
        "[x,yz] = [x,y]z + (−1)^{|y|(|x|+n−1)} y[x,z]",
    );
    let mut jacobi = AxiomReport::new(
        "algebra.jacobi",
        Scope::Algebra,
        "[x,[y,z]] = [[x,y],z] + (−1)^{(|x|+n−1)(|y|+n−1)} [y,[x,z]]",
    );
    for t in &triples {
        let (x, y, z) = (&basis[t[0]], &basis[t[1]], &basis[t[2]]);
        let (dx, dy) = (deg[t[0]], deg[t[1]]);
        let mul = |a: &AlgebraElement, b: &AlgebraElement| spec.multiply(a, b).expect("same algebra");
        let outcome: Result<()> = (|| {
            let lhs = spec.bracket(x, &mul(y, z))?;
            let mut rhs = mul(&spec.bracket(x, y)?, z);
            rhs.add_scaled(&mul(y, &spec.bracket(x, z)?), &sign(dy * (dx + n1)));
            poisson.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });

            let lhs = spec.bracket(x, &spec.bracket(y, z)?)?;
            let mut rhs = spec.bracket(&spec.bracket(x, y)?, z)?;
            rhs.add_scaled(&spec.bracket(y, &spec.bracket(x, z)?)?, &sign((dx + n1) * (dy + n1)));
            jacobi.record(lhs == rhs, || Failure { inputs: show(t), lhs: fmt(&lhs), rhs: fmt(&rhs) });
            Ok(())
        })();
        if let Err(e) = outcome {
            poisson.record_error(show(t), e.to_string());
        }
    }

    alloc::vec![d2, leibniz, commutative, degree, antisym, poisson, jacobi, d_bracket]
}

use super::{HopfAlgebra, Tensor};
use crate::report::Report;

/// Exhaustive check of every Hopf-algebra axiom on basis tuples. Each family
/// is reported separately with the first failing witness.
pub fn verify_axioms(h: &HopfAlgebra) -> Report {
    let mut r = Report::new();
    let n = h.dim();
    let f = h.field();

    r.record("associativity", first(n * n * n, |t| {
        let (i, j, k) = (t / (n * n), t / n % n, t % n);
        let left = h.mul(&h.mul_basis(i, j), &h.basis(k));
        let right = h.mul(&h.basis(i), &h.mul_basis(j, k));
        (left != right).then(|| format!("(b{i} b{j}) b{k} != b{i} (b{j} b{k})"))
    }));

    r.record("unit", first(n, |i| {
        let b = h.basis(i);
        (h.mul(h.unit(), &b) != b || h.mul(&b, h.unit()) != b).then(|| format!("1 b{i} or b{i} 1 differs from b{i}"))
    }));

    r.record("coassociativity", first(n, |i| {
        let d = h.comul(&h.basis(i));
        let left = h.comul_leg(&d, 0);
        let right = h.comul_leg(&d, 1);
        left.first_difference(&right, f)
            .map(|w| format!("b{i}: (D x id)D vs (id x D)D, {w}"))
    }));

    r.record("counit", first(n, |i| {
        let b = h.basis(i);
        let d = h.comul(&b);
        let left = h.contract_leg(&d, 0, h.counit_vector());
        let right = h.contract_leg(&d, 1, h.counit_vector());
        let expect = Tensor::pure(f, &[&b]);
        (left != expect || right != expect).then(|| format!("(eps x id)D(b{i}) or (id x eps)D(b{i}) differs from b{i}"))
    }));

    r.record("comult_multiplicative", {
        let unit_ok = h.comul(h.unit()) == h.unit_tensor(2);
        if !unit_ok {
            Some("D(1) != 1 x 1".to_string())
        } else {
            let deltas: Vec<Tensor> = (0..n).map(|i| h.comul(&h.basis(i))).collect();
            first(n * n, |t| {
                let (i, j) = (t / n, t % n);
                let left = h.comul(&h.mul_basis(i, j));
                let right = h.tensor_mul(&deltas[i], &deltas[j]);
                left.first_difference(&right, f)
                    .map(|w| format!("D(b{i} b{j}) != D(b{i})D(b{j}), {w}"))
            })
        }
    });

    r.record("counit_multiplicative", {
        if h.counit(h.unit()) != f.one() {
            Some("eps(1) != 1".to_string())
        } else {
            first(n * n, |t| {
                let (i, j) = (t / n, t % n);
                let e = h.counit_vector();
                (h.counit(&h.mul_basis(i, j)) != f.mul(e[i], e[j]))
                    .then(|| format!("eps(b{i} b{j}) != eps(b{i}) eps(b{j})"))
            })
        }
    });

    r.record("antipode", first(n, |i| {
        let b = h.basis(i);
        let d = h.comul(&b);
        let s = h.antipode_matrix();
        let left = h.multiply_legs(&h.map_leg(&d, 0, s));
        let right = h.multiply_legs(&h.map_leg(&d, 1, s));
        let expect = h.scalar(h.counit(&b));
        (left != expect || right != expect).then(|| format!("m(S x id)D(b{i}) or m(id x S)D(b{i}) != eps(b{i}) 1"))
    }));

    r.record("antipode_bijective", {
        let rank = h.antipode_matrix().rank();
        (rank != n).then(|| format!("rank S = {rank} < {n}"))
    });

    r
}

fn first(count: usize, mut check: impl FnMut(usize) -> Option<String>) -> Option<String> {
    (0..count).find_map(&mut check)
}

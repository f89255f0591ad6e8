//! Integrals of `H` and `H*`, the element `u = S(L2) L1` implementing `S^2`
//! by conjugation, and the distinguished group-like element.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::hopf::{Element, HopfAlgebra, Tensor};
use crate::linalg::Matrix;
use crate::report::Report;

/// Which defining equation the integral of `H*` satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualIntegralSide {
    /// `a(1) lambda(a(2)) = lambda(a) 1`
    Left,
    /// `lambda(a(1)) a(2) = lambda(a) 1`
    Right,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IntegralOptions {
    /// Skip the `p^2 > dim H` requirement.
    pub allow_small_characteristic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    pub integral: Element,
    pub dual_integral: Vec<Fe>,
    pub dual_side: DualIntegralSide,
    pub u: Element,
    pub u_inv: Element,
    pub grouplike: Element,
    pub eps_of_integral: Fe,
}

/// The kernel of the stacked system `(L_{b_i} - eps(b_i) I) x = 0`, normalized
/// so its first nonzero coordinate is 1.
pub fn compute_integral(h: &HopfAlgebra) -> Result<Element> {
    let n = h.dim();
    let f = h.field();
    let mut data = Vec::with_capacity(n * n * n);
    for i in 0..n {
        let mut m = h.left_mult_matrix(&h.basis(i));
        let e = h.counit_vector()[i];
        for d in 0..n {
            m.set(d, d, f.sub(m.get(d, d), e));
        }
        data.extend_from_slice(m.data());
    }
    let stacked = Matrix::from_data(f, n * n, n, data)?;
    one_dimensional_kernel(stacked).map(|v| normalize_first(h, v))
}

/// Nonzero covector on `H` satisfying the equation for `side` on every basis
/// element.
pub fn compute_dual_integral(h: &HopfAlgebra, side: DualIntegralSide) -> Result<Vec<Fe>> {
    let n = h.dim();
    let f = h.field();
    // row (i, o): coefficient of b_o in the defining identity for b_i
    let mut data = vec![f.zero(); n * n * n];
    for i in 0..n {
        for &(j, k, c) in h.comult_entries(i) {
            let (out, unknown) = match side {
                DualIntegralSide::Left => (j, k),
                DualIntegralSide::Right => (k, j),
            };
            let slot = &mut data[(i * n + out) * n + unknown];
            *slot = f.add(*slot, c);
        }
        for (o, &one) in h.unit().iter().enumerate() {
            let slot = &mut data[(i * n + o) * n + i];
            *slot = f.sub(*slot, one);
        }
    }
    let stacked = Matrix::from_data(f, n * n, n, data)?;
    one_dimensional_kernel(stacked).map(|v| normalize_first(h, v))
}

fn one_dimensional_kernel(m: Matrix) -> Result<Vec<Fe>> {
    let mut kernel = m.kernel();
    match kernel.len() {
        0 => Err(Error::NoIntegral),
        1 => Ok(kernel.pop().expect("one vector")),
        d => Err(Error::IntegralSpaceTooBig(d)),
    }
}

fn normalize_first(h: &HopfAlgebra, v: Vec<Fe>) -> Vec<Fe> {
    let f = h.field();
    let lead = v.iter().copied().find(|x| !x.is_zero()).expect("nonzero kernel vector");
    let s = f.inv(lead).expect("nonzero");
    v.into_iter().map(|x| f.mul(x, s)).collect()
}

/// `S(L2) L1` summed over `Delta(L)`.
pub fn compute_u(h: &HopfAlgebra, integral: &[Fe]) -> Element {
    let d = h.comul(integral);
    let s = h.antipode_matrix();
    let mut u = h.zero();
    for (idx, c) in d.iter() {
        let prod = h.mul(&s.column(idx[1]), &h.basis(idx[0]));
        u = h.add(&u, &h.scale(&prod, c));
    }
    u
}

impl IntegralData {
    pub fn compute(h: &HopfAlgebra, opts: IntegralOptions) -> Result<IntegralData> {
        let integral = compute_integral(h)?;
        IntegralData::from_integral(h, integral, opts)
    }

    /// Completes the data from a given nonzero left integral, which may be any
    /// rescaling of the one found by [`compute_integral`].
    pub fn from_integral(h: &HopfAlgebra, integral: Element, opts: IntegralOptions) -> Result<IntegralData> {
        let f = h.field();
        if integral.iter().all(|x| x.is_zero()) {
            return Err(Error::NoIntegral);
        }
        let eps_of_integral = h.counit(&integral);
        if eps_of_integral.is_zero() {
            return Err(Error::NotSemisimple("eps(Lambda) = 0".into()));
        }
        let p = f.characteristic();
        if !opts.allow_small_characteristic && (p as u128) * (p as u128) <= h.dim() as u128 {
            return Err(Error::PreconditionPSquare { p, dim: h.dim() });
        }
        for i in 0..h.dim() {
            let right = h.mul(&integral, &h.basis(i));
            if right != h.scale(&integral, h.counit_vector()[i]) {
                return Err(Error::NotUnimodular);
            }
        }

        let u = compute_u(h, &integral);
        let u_inv = h.inverse(&u).map_err(|_| Error::SingularU)?;
        let s2 = h.s_square_matrix();
        for i in 0..h.dim() {
            let b = h.basis(i);
            if h.mul(&s2.column(i), &u) != h.mul(&u, &b) {
                return Err(Error::identity("s_square_is_conjugation_by_u", format!("basis element b{i}")));
            }
        }

        let grouplike = h.mul(&h.antipode(&u_inv), &u);
        check_grouplike(h, &grouplike)?;

        let mut last = None;
        for side in [DualIntegralSide::Left, DualIntegralSide::Right] {
            let raw = compute_dual_integral(h, side)?;
            let pairing = h.pair(&raw, &integral);
            if pairing.is_zero() {
                return Err(Error::DegeneratePairing);
            }
            let s = f.inv(pairing)?;
            let dual_integral: Vec<Fe> = raw.iter().map(|&x| f.mul(x, s)).collect();
            let data = IntegralData {
                integral: integral.clone(),
                dual_integral,
                dual_side: side,
                u: u.clone(),
                u_inv: u_inv.clone(),
                grouplike: grouplike.clone(),
                eps_of_integral,
            };
            match dual_basis_witness(h, &data) {
                None => return Ok(data),
                Some(w) => last = Some(w),
            }
        }
        Err(Error::identity("dual_basis", last.unwrap_or_default()))
    }

    /// Same data for the integral `c * Lambda`.
    pub fn rescaled(&self, h: &HopfAlgebra, c: Fe, opts: IntegralOptions) -> Result<IntegralData> {
        IntegralData::from_integral(h, h.scale(&self.integral, c), opts)
    }

    /// `Lambda(1) (x) u^{-1} S(Lambda(2))`
    pub fn dual_basis_tensor(&self, h: &HopfAlgebra) -> Tensor {
        let d = h.comul(&self.integral);
        let t = h.map_leg(&d, 1, h.antipode_matrix());
        h.mul_leg(&t, 1, &self.u_inv, true)
    }

    /// The covector `lambda <- u`, i.e. `b |-> lambda(u b)`.
    pub fn lambda_hit_u(&self, h: &HopfAlgebra) -> Vec<Fe> {
        (0..h.dim())
            .map(|i| h.pair(&self.dual_integral, &h.mul(&self.u, &h.basis(i))))
            .collect()
    }

    /// The covector `u -> lambda`, i.e. `b |-> lambda(b u)`.
    pub fn u_hit_lambda(&self, h: &HopfAlgebra) -> Vec<Fe> {
        (0..h.dim())
            .map(|i| h.pair(&self.dual_integral, &h.mul(&h.basis(i), &self.u)))
            .collect()
    }
}

fn check_grouplike(h: &HopfAlgebra, g: &[Fe]) -> Result<()> {
    let f = h.field();
    if h.comul(g) != Tensor::pure(f, &[g, g]) {
        return Err(Error::NotGrouplike("Delta(g) != g (x) g".into()));
    }
    if h.counit(g) != f.one() {
        return Err(Error::NotGrouplike("eps(g) != 1".into()));
    }
    let g_inv = h.inverse(g).map_err(|_| Error::NotGrouplike("g is not invertible".into()))?;
    let s2 = h.s_square_matrix();
    let s4 = s2.mul(&s2)?;
    for i in 0..h.dim() {
        let conj = h.mul(&h.mul(g, &h.basis(i)), &g_inv);
        if s4.column(i) != conj {
            return Err(Error::NotGrouplike(format!("S^4(b{i}) != g b{i} g^-1")));
        }
    }
    Ok(())
}

fn dual_basis_witness(h: &HopfAlgebra, data: &IntegralData) -> Option<String> {
    let d = h.comul(&data.integral);
    let lam = &data.dual_integral;
    let s = h.antipode_matrix();
    (0..h.dim()).find_map(|a| {
        let b = h.basis(a);
        let mut first = h.zero();
        let mut second = h.zero();
        for (idx, c) in d.iter() {
            let (j, k) = (idx[0], idx[1]);
            let sk = s.column(k);
            let x = h.pair(lam, &h.mul(&b, &h.basis(j)));
            first = h.add(&first, &h.scale(&sk, h.field().mul(c, x)));
            let y = h.pair(lam, &h.mul(&sk, &b));
            second = h.add(&second, &h.scale(&h.basis(j), h.field().mul(c, y)));
        }
        if first != b {
            Some(format!("lambda(b{a} L1) S(L2) != b{a}"))
        } else if second != b {
            Some(format!("lambda(S(L2) b{a}) L1 != b{a}"))
        } else {
            None
        }
    })
}

/// Every identity tying `Lambda`, `lambda`, `u` and `g` together.
pub fn verify_frobenius_identities(h: &HopfAlgebra, data: &IntegralData) -> Report {
    let mut r = Report::new();
    let n = h.dim();
    let f = h.field();
    let s = h.antipode_matrix();
    let lam = &data.dual_integral;
    let d = h.comul(&data.integral);

    let witness_i = (0..n).find_map(|a| {
        let b = h.basis(a);
        let mut acc = h.zero();
        for (idx, c) in d.iter() {
            let x = h.pair(lam, &h.mul(&b, &h.basis(idx[0])));
            acc = h.add(&acc, &h.scale(&s.column(idx[1]), f.mul(c, x)));
        }
        (acc != b).then(|| format!("lambda(b{a} L1) S(L2) != b{a}"))
    });
    r.record("dual_basis_left", witness_i);

    let witness_ii = (0..n).find_map(|a| {
        let b = h.basis(a);
        let mut acc = h.zero();
        for (idx, c) in d.iter() {
            let y = h.pair(lam, &h.mul(&s.column(idx[1]), &b));
            acc = h.add(&acc, &h.scale(&h.basis(idx[0]), f.mul(c, y)));
        }
        (acc != b).then(|| format!("lambda(S(L2) b{a}) L1 != b{a}"))
    });
    r.record("dual_basis_right", witness_ii);

    let s2 = h.s_square_matrix();
    r.record(
        "lambda_twisted_symmetry",
        (0..n * n).find_map(|t| {
            let (a, b) = (t / n, t % n);
            let lhs = h.pair(lam, &h.mul_basis(a, b));
            let rhs = h.pair(lam, &h.mul(&s2.column(b), &h.basis(a)));
            (lhs != rhs).then(|| format!("lambda(b{a} b{b}) != lambda(S^2(b{b}) b{a})"))
        }),
    );

    let dual_basis = data.dual_basis_tensor(h);
    r.record(
        "dual_basis_symmetric",
        dual_basis.first_difference(&dual_basis.flip(), f),
    );

    r.record("dual_basis_contracts_to_one", {
        let prod = h.multiply_legs(&dual_basis);
        (prod != h.one()).then(|| "L1 u^-1 S(L2) != 1".to_string())
    });

    r.record("radford_relation", {
        let rhs = h.mul_leg(&h.map_leg(&d, 1, &s2), 1, &data.grouplike, false);
        d.flip().first_difference(&rhs, f)
    });

    let s_u_inv = h.antipode(&data.u_inv);
    r.record(
        "shifted_relation",
        (2..=4).find_map(|m| {
            let t = h.iterated_coproduct(&data.integral, m);
            let mut perm: Vec<usize> = (1..m).collect();
            perm.push(0);
            let lhs = h.mul_leg(&t, 0, &data.u_inv, true).permute_legs(&perm);
            let rhs = h.mul_leg(&t, m - 1, &s_u_inv, false);
            lhs.first_difference(&rhs, f).map(|w| format!("{m} legs: {w}"))
        }),
    );
    r
}

/// The three conditions `Delta(Lambda)` cocommutative, `lambda` cocommutative
/// and `S^2 = id`, which must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CocommutativityFlags {
    pub integral_cocommutative: bool,
    pub dual_integral_cocommutative: bool,
    pub involutory: bool,
}

pub fn cocommutativity_equivalence(h: &HopfAlgebra, data: &IntegralData) -> Result<CocommutativityFlags> {
    let d = h.comul(&data.integral);
    let n = h.dim();
    let lam = &data.dual_integral;
    let flags = CocommutativityFlags {
        integral_cocommutative: d == d.flip(),
        dual_integral_cocommutative: (0..n)
            .all(|a| (0..a).all(|b| h.pair(lam, &h.mul_basis(a, b)) == h.pair(lam, &h.mul_basis(b, a)))),
        involutory: h.is_involutory(),
    };
    let all = [
        flags.integral_cocommutative,
        flags.dual_integral_cocommutative,
        flags.involutory,
    ];
    if all.iter().all(|&x| x) || all.iter().all(|&x| !x) {
        Ok(flags)
    } else {
        Err(Error::EquivalenceViolation(format!("{flags:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{drinfeld_double, dual_group_algebra, group_algebra, group_algebra_unchecked, GroupTable};
    use crate::ff::Field;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn group_sum_is_the_integral() {
        let f = gf(7);
        for g in [GroupTable::cyclic(3), GroupTable::symmetric3()] {
            let h = group_algebra(&g, &f).unwrap();
            assert_eq!(compute_integral(&h).unwrap(), vec![f.one(); g.order()]);
        }
    }

    #[test]
    fn dual_group_integral_satisfies_definition() {
        let f = gf(5);
        let h = dual_group_algebra(&GroupTable::cyclic(2), &f).unwrap();
        let l = compute_integral(&h).unwrap();
        for i in 0..2 {
            assert_eq!(h.mul(&h.basis(i), &l), h.scale(&l, h.counit_vector()[i]));
        }
        assert_eq!(l, h.basis(0));
    }

    #[test]
    fn c3_dual_integral_is_identity_coefficient() {
        let f = gf(7);
        let h = group_algebra(&GroupTable::cyclic(3), &f).unwrap();
        let lam = compute_dual_integral(&h, DualIntegralSide::Left).unwrap();
        assert_eq!(lam, vec![f.one(), f.zero(), f.zero()]);
        let data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        assert_eq!(h.pair(&data.dual_integral, &data.integral), f.one());
        assert_eq!(data.dual_integral, lam);
    }

    #[test]
    fn c3_u_is_three() {
        let f = gf(7);
        let h = group_algebra(&GroupTable::cyclic(3), &f).unwrap();
        let data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        assert_eq!(data.u, h.scalar(f.from_int(3)));
        assert_eq!(h.mul(&data.u_inv, &data.u), h.one());
        assert_eq!(data.grouplike, h.one());
        assert!(verify_frobenius_identities(&h, &data).all_passed());
    }

    #[test]
    fn rescaling_the_integral_rescales_lambda() {
        let f = gf(7);
        let h = group_algebra(&GroupTable::symmetric3(), &f).unwrap();
        let data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        let three = f.from_int(3);
        let scaled = data.rescaled(&h, three, IntegralOptions::default()).unwrap();
        let inv3 = f.inv(three).unwrap();
        assert_eq!(scaled.dual_integral, h.scale(&data.dual_integral, inv3));
    }

    #[test]
    fn perturbed_lambda_breaks_dual_basis() {
        let f = gf(7);
        let h = group_algebra(&GroupTable::cyclic(3), &f).unwrap();
        let mut data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        data.dual_integral = h.scale(&data.dual_integral, f.from_int(2));
        let report = verify_frobenius_identities(&h, &data);
        assert!(!report.passed("dual_basis_left"));
        assert!(report.get("dual_basis_left").unwrap().witness.is_some());
    }

    #[test]
    fn doubles_have_trivial_grouplike() {
        let f = gf(7);
        let h = drinfeld_double(&GroupTable::symmetric3(), &f).unwrap();
        let data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        assert_eq!(data.grouplike, h.one());
        assert!(verify_frobenius_identities(&h, &data).all_passed());
        let flags = cocommutativity_equivalence(&h, &data).unwrap();
        assert!(flags.involutory && flags.integral_cocommutative && flags.dual_integral_cocommutative);
        // delta_e (x) sum_h h
        let m = 6;
        let e = GroupTable::symmetric3().identity();
        let expect: Vec<Fe> = (0..m * m).map(|i| if i / m == e { f.one() } else { f.zero() }).collect();
        assert_eq!(data.integral, expect);
    }

    #[test]
    fn dual_group_algebra_identities() {
        let f = gf(5);
        let h = dual_group_algebra(&GroupTable::cyclic(2), &f).unwrap();
        let data = IntegralData::compute(&h, IntegralOptions::default()).unwrap();
        assert!(verify_frobenius_identities(&h, &data).all_passed());
        let flags = cocommutativity_equivalence(&h, &data).unwrap();
        assert!(flags.involutory);
    }

    #[test]
    fn characteristic_dividing_order_is_not_semisimple() {
        let f = gf(3);
        let h = group_algebra_unchecked(&GroupTable::cyclic(3), &f);
        assert!(matches!(
            IntegralData::compute(&h, IntegralOptions::default()),
            Err(Error::NotSemisimple(_))
        ));
    }

    #[test]
    fn small_characteristic_needs_override() {
        let f = gf(2);
        let h = group_algebra_unchecked(&GroupTable::cyclic(5), &f);
        assert!(matches!(
            IntegralData::compute(&h, IntegralOptions::default()),
            Err(Error::PreconditionPSquare { p: 2, dim: 5 })
        ));
        let opts = IntegralOptions {
            allow_small_characteristic: true,
        };
        assert!(IntegralData::compute(&h, opts).is_ok());
    }
}

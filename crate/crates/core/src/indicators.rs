//! Sweedler power maps and higher Frobenius-Schur indicators, computed from
//! the integral and, for `n >= 1`, from the trace of the cyclic-shift
//! operator on invariants of tensor powers.


use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::hopf::{Element, HopfAlgebra, ModuleRep};
use crate::integrals::{IntegralData, IntegralOptions};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::wedderburn::WedderburnData;

/// Default cap on `dim(V)^n` for the operator route.
pub const DEFAULT_TENSOR_BUDGET: usize = 1296;

/// `P_n(a)` straight from the definition: multiply the legs of
/// `Delta_{n-1}(a)`, `eps(a) 1` for `n = 0`, and the antipode images of the
/// legs of `Delta_{-n-1}(a)` for negative `n`.
pub fn sweedler_power(h: &HopfAlgebra, a: &[Fe], n: i64) -> Element {
    match n {
        0 => h.scalar(h.counit(a)),
        n if n > 0 => h.multiply_legs(&h.iterated_coproduct(a, n as usize)),
        n => {
            let m = n.unsigned_abs() as usize;
            let mut t = h.iterated_coproduct(a, m);
            for leg in 0..m {
                t = h.map_leg(&t, leg, h.antipode_matrix());
            }
            h.multiply_legs(&t)
        }
    }
}

/// Matrix of `P_n`, built with `P_n(a) = a(1) P_{n-1}(a(2))` (and the
/// antipode variant for negative `n`).
pub fn sweedler_power_matrix(h: &HopfAlgebra, n: i64) -> Matrix {
    let dim = h.dim();
    let f = h.field();
    if n == 0 {
        let cols: Vec<Element> = (0..dim).map(|i| h.scalar(h.counit_vector()[i])).collect();
        return Matrix::from_columns(f, dim, &cols);
    }
    let s = h.antipode_matrix();
    let first_leg = |j: usize| if n > 0 { h.basis(j) } else { s.column(j) };
    let mut cols: Vec<Element> = (0..dim).map(first_leg).collect();
    for _ in 1..n.unsigned_abs() {
        cols = (0..dim)
            .map(|i| {
                let mut acc = h.zero();
                for &(j, k, c) in h.comult_entries(i) {
                    let term = h.mul(&first_leg(j), &cols[k]);
                    acc = h.add(&acc, &h.scale(&term, c));
                }
                acc
            })
            .collect();
    }
    Matrix::from_columns(f, dim, &cols)
}

/// `P_n(Lambda)` for each `n` in `range`, in order.
fn powers_of_integral(h: &HopfAlgebra, integral: &[Fe], range: (i64, i64)) -> Vec<Element> {
    (range.0..=range.1)
        .map(|n| sweedler_power_matrix(h, n).mul_vec(integral).expect("length"))
        .collect()
}

/// `chi(u^{-1} P_n(Lambda))`
pub fn indicator(h: &HopfAlgebra, id: &IntegralData, chi: &[Fe], n: i64) -> Fe {
    let p = sweedler_power_matrix(h, n).mul_vec(&id.integral).expect("length");
    h.pair(chi, &h.mul(&id.u_inv, &p))
}

/// `chi_i(P_n(Lambda)) lambda(e_i) / d_i^2`
pub fn indicator_simple(h: &HopfAlgebra, wd: &WedderburnData, id: &IntegralData, i: usize, n: i64) -> Result<Fe> {
    let f = h.field();
    let d = wd.dims[i];
    let d2 = f.from_int((d * d) as i64);
    let d2_inv = f.inv(d2).map_err(|_| Error::DimensionNotInvertible(d))?;
    let p = sweedler_power_matrix(h, n).mul_vec(&id.integral).expect("length");
    Ok(f.mul(f.mul(h.pair(&wd.characters[i], &p), wd.lambda_of_e[i]), d2_inv))
}

/// `nu_0` in its two closed forms; errors if they differ.
pub fn nu_zero(h: &HopfAlgebra, id: &IntegralData, wd: &WedderburnData, chi: &[Fe]) -> Result<Fe> {
    let f = h.field();
    let direct = f.mul(id.eps_of_integral, h.pair(chi, &id.u_inv));
    let mut sum = f.zero();
    for i in 0..wd.len() {
        let d = wd.dims[i];
        let d2_inv = f
            .inv(f.from_int((d * d) as i64))
            .map_err(|_| Error::DimensionNotInvertible(d))?;
        let term = f.mul(f.mul(wd.lambda_of_e[i], d2_inv), h.pair(chi, &wd.idempotents[i]));
        sum = f.add(sum, term);
    }
    let expanded = f.mul(id.eps_of_integral, sum);
    if direct != expanded {
        return Err(Error::identity(
            "nu_zero_forms",
            format!("{} vs {}", f.format(direct), f.format(expanded)),
        ));
    }
    Ok(direct)
}

/// `tr(S o P_{n-1})` on `H`.
pub fn regular_indicator_trace(h: &HopfAlgebra, n: i64) -> Fe {
    let m = h.antipode_matrix().mul(&sweedler_power_matrix(h, n - 1)).expect("square");
    m.trace().expect("square")
}

/// Trace of `v1 (x) ... (x) vn |-> v2 (x) ... (x) vn (x) u^{-1} v1` on the
/// invariants of `V^{(x)n}`, the image of `Lambda / eps(Lambda)`.
pub fn operator_indicator(h: &HopfAlgebra, id: &IntegralData, v: &ModuleRep, n: usize, budget: usize) -> Result<Fe> {
    if n == 0 {
        return Err(Error::Validation("the operator route needs n >= 1".into()));
    }
    if let Some(c) = v.verify(h).failures().next() {
        return Err(Error::NotAModule(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let f = h.field();
    let d = v.dim();
    let size = d
        .checked_pow(n as u32)
        .filter(|&s| s <= budget)
        .ok_or(Error::BudgetExceeded {
            needed: d.saturating_pow(n as u32),
            budget,
        })?;

    // rho_{V^n}(Lambda) = sum rho(L1) (x) ... (x) rho(Ln)
    let mut projector = Matrix::zeros(f, size, size);
    let eps_inv = f.inv(id.eps_of_integral)?;
    let legs = h.iterated_coproduct(&id.integral, n);
    let actions = v.action_matrices();
    for (idx, c) in legs.iter() {
        let mut k = actions[idx[0]].clone();
        for &i in &idx[1..] {
            k = k.kronecker(&actions[i]);
        }
        projector.axpy(f.mul(c, eps_inv), &k);
    }

    let pivots = projector.column_basis();
    if pivots.is_empty() {
        return Ok(f.zero());
    }
    let basis: Vec<Vec<Fe>> = pivots.iter().map(|&j| projector.column(j)).collect();
    let basis_matrix = Matrix::from_columns(f, size, &basis);
    // the shift uses u of the idempotent integral Lambda / eps(Lambda)
    let u_inv = v.act(h, &h.scale(&id.u_inv, id.eps_of_integral));
    let rest = size / d;
    let mut trace = f.zero();
    for (j, w) in basis.iter().enumerate() {
        // w indexed by (i1, rest); image indexed by (rest, k)
        let mut image = vec![f.zero(); size];
        for i1 in 0..d {
            for r in 0..rest {
                let x = w[i1 * rest + r];
                if x.is_zero() {
                    continue;
                }
                for k in 0..d {
                    let m = u_inv.get(k, i1);
                    if !m.is_zero() {
                        let slot = &mut image[r * d + k];
                        *slot = f.add(*slot, f.mul(x, m));
                    }
                }
            }
        }
        let coords = basis_matrix
            .solve(&image)?
            .ok_or_else(|| Error::identity("shift_preserves_invariants", format!("basis vector {j}")))?;
        trace = f.add(trace, coords.x[j]);
    }
    Ok(trace)
}

/// `P_n(Lambda)` central and fixed by `S`, for each `n` in `range`.
pub fn power_centrality_check(h: &HopfAlgebra, integral: &[Fe], range: (i64, i64)) -> Report {
    let mut r = Report::new();
    let powers = powers_of_integral(h, integral, range);
    r.record(
        "powers_of_integral_central",
        (range.0..=range.1)
            .zip(&powers)
            .find_map(|(n, p)| (!h.is_central(p)).then(|| format!("n = {n}"))),
    );
    r.record(
        "powers_of_integral_antipode_fixed",
        (range.0..=range.1)
            .zip(&powers)
            .find_map(|(n, p)| (h.antipode(p) != *p).then(|| format!("n = {n}"))),
    );
    r
}

/// Indicators of every simple module and of `H` itself, one column per `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorTable {
    pub n_range: (i64, i64),
    /// `rows[i][k]` is `nu_{n_range.0 + k}(V_i)`.
    pub rows: Vec<Vec<Fe>>,
    pub regular_row: Vec<Fe>,
}

impl IndicatorTable {
    pub fn ns(&self) -> impl Iterator<Item = i64> {
        self.n_range.0..=self.n_range.1
    }

    pub fn value(&self, i: usize, n: i64) -> Option<Fe> {
        self.column(n).map(|k| self.rows[i][k])
    }

    fn column(&self, n: i64) -> Option<usize> {
        (self.n_range.0..=self.n_range.1).contains(&n).then(|| (n - self.n_range.0) as usize)
    }

    /// The rows as a sorted multiset.
    pub fn row_multiset(&self) -> Vec<Vec<Fe>> {
        let mut rows = self.rows.clone();
        rows.sort();
        rows
    }
}

/// Fills the table from the integral formula and checks the `+-n` and dual
/// symmetries on the covered range.
pub fn indicator_table(h: &HopfAlgebra, id: &IntegralData, wd: &WedderburnData, range: (i64, i64)) -> Result<IndicatorTable> {
    if range.0 > range.1 {
        return Err(Error::Validation(format!("empty range {}..{}", range.0, range.1)));
    }
    let table = indicator_table_unchecked(h, id, wd, range);
    if let Some(c) = table_symmetries(h, wd, &table).failures().next() {
        return Err(Error::identity(c.name.clone(), c.witness.clone().unwrap_or_default()));
    }
    Ok(table)
}

fn table_symmetries(h: &HopfAlgebra, wd: &WedderburnData, t: &IndicatorTable) -> Report {
    let mut r = Report::new();
    r.record(
        "indicator_sign_symmetry",
        [1, 2].iter().find_map(|&n| {
            let (a, b) = (t.column(n)?, t.column(-n)?);
            (0..t.rows.len())
                .find(|&i| t.rows[i][a] != t.rows[i][b])
                .map(|i| format!("nu_{n} != nu_-{n} on V_{i}"))
        }),
    );
    match wd.dual_indices(h) {
        None => r.fail("indicator_dual_invariance", "S permutes no idempotents"),
        Some(star) => r.record(
            "indicator_dual_invariance",
            (0..t.rows.len())
                .find(|&i| t.rows[i] != t.rows[star[i]])
                .map(|i| format!("row of V_{i} differs from V_{}", star[i])),
        ),
    }
    r
}

/// Every identity about indicators over `range`.
pub fn verify_indicator_identities(
    h: &HopfAlgebra,
    id: &IntegralData,
    wd: &WedderburnData,
    range: (i64, i64),
) -> Result<Report> {
    let f = h.field();
    let mut r = power_centrality_check(h, &id.integral, range);
    let table = indicator_table_unchecked(h, id, wd, range);
    r.extend(table_symmetries(h, wd, &table));

    let mut closed_form = None;
    'outer: for n in table.ns() {
        for i in 0..wd.len() {
            if indicator_simple(h, wd, id, i, n)? != table.value(i, n).expect("in range") {
                closed_form = Some(format!("V_{i}, n = {n}"));
                break 'outer;
            }
        }
    }
    r.record("simple_indicator_closed_form", closed_form);

    r.record(
        "nu_zero_forms",
        wd.characters.iter().enumerate().find_map(|(i, chi)| match nu_zero(h, id, wd, chi) {
            Err(e) => Some(format!("V_{i}: {e}")),
            Ok(v) => table
                .value(i, 0)
                .filter(|&t| t != v)
                .map(|_| format!("V_{i}: closed form differs from the table")),
        }),
    );

    r.record(
        "regular_indicator_trace",
        table.ns().zip(&table.regular_row).find_map(|(n, &v)| {
            let t = regular_indicator_trace(h, n);
            (t != v).then(|| format!("n = {n}: tr(S P_(n-1)) = {} vs {}", f.format(t), f.format(v)))
        }),
    );

    let opts = IntegralOptions {
        allow_small_characteristic: true,
    };
    r.record(
        "indicators_independent_of_integral_scale",
        match id.rescaled(h, f.primitive_element(), opts) {
            Ok(id2) => (indicator_table_unchecked(h, &id2, wd, range) != table)
                .then(|| "table changed after rescaling Lambda".to_string()),
            Err(e) => Some(e.to_string()),
        },
    );
    Ok(r)
}

fn indicator_table_unchecked(h: &HopfAlgebra, id: &IntegralData, wd: &WedderburnData, range: (i64, i64)) -> IndicatorTable {
    let shifted: Vec<Element> = powers_of_integral(h, &id.integral, range)
        .iter()
        .map(|p| h.mul(&id.u_inv, p))
        .collect();
    IndicatorTable {
        n_range: range,
        rows: wd
            .characters
            .iter()
            .map(|chi| shifted.iter().map(|x| h.pair(chi, x)).collect())
            .collect(),
        regular_row: shifted.iter().map(|x| h.pair(&wd.regular_character, x)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{drinfeld_double, group_algebra, GroupTable};
    use crate::ff::{Field, Modulus};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pipeline(h: &HopfAlgebra) -> (IntegralData, WedderburnData) {
        let id = IntegralData::compute(h, IntegralOptions::default()).unwrap();
        let wd = WedderburnData::compute(h, &id, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        (id, wd)
    }

    fn c3() -> HopfAlgebra {
        group_algebra(&GroupTable::cyclic(3), &Field::prime(7).unwrap()).unwrap()
    }

    #[test]
    fn low_powers() {
        let h = drinfeld_double(&GroupTable::cyclic(3), &Field::prime(7).unwrap()).unwrap();
        for i in 0..h.dim() {
            let b = h.basis(i);
            assert_eq!(sweedler_power(&h, &b, 1), b);
            assert_eq!(sweedler_power(&h, &b, 0), h.scalar(h.counit(&b)));
            assert_eq!(sweedler_power(&h, &b, -1), h.antipode(&b));
        }
    }

    #[test]
    fn matrix_route_matches_definition() {
        let h = drinfeld_double(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap();
        for n in -3..=3 {
            let m = sweedler_power_matrix(&h, n);
            for i in [0, 7, 20, 35] {
                assert_eq!(m.column(i), sweedler_power(&h, &h.basis(i), n), "n = {n}, b{i}");
            }
        }
    }

    #[test]
    fn group_powers() {
        let h = c3();
        for n in -4..=4i64 {
            for g in 0..3 {
                let expect = h.basis((g as i64 * n).rem_euclid(3) as usize);
                assert_eq!(sweedler_power(&h, &h.basis(g), n), expect);
            }
        }
    }

    #[test]
    fn c3_second_indicators() {
        let h = c3();
        let (id, wd) = pipeline(&h);
        let t = indicator_table(&h, &id, &wd, (-4, 6)).unwrap();
        let f = h.field();
        let nu2: Vec<Fe> = (0..3).map(|i| t.value(i, 2).unwrap()).collect();
        assert_eq!(nu2, vec![f.one(), f.zero(), f.zero()]);
        assert_eq!(nu_zero(&h, &id, &wd, &wd.characters[0]).unwrap(), f.one());
    }

    #[test]
    fn s3_first_and_second_indicators() {
        let h = group_algebra(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap();
        let (id, wd) = pipeline(&h);
        let t = indicator_table(&h, &id, &wd, (1, 3)).unwrap();
        let f = h.field();
        let row = |n| (0..3).map(|i| t.value(i, n).unwrap()).collect::<Vec<_>>();
        assert_eq!(row(1), vec![f.one(), f.zero(), f.zero()]);
        assert_eq!(row(2), vec![f.one(); 3]);
        assert_eq!(indicator_simple(&h, &wd, &id, 2, 2).unwrap(), f.one());
        assert_eq!(regular_indicator_trace(&h, 2), f.from_int(4));
    }

    #[test]
    fn q8_has_one_quaternionic_simple() {
        let f = Field::new(5, 2, Modulus::Auto).unwrap();
        let h = group_algebra(&GroupTable::quaternion(), &f).unwrap();
        let (id, wd) = pipeline(&h);
        let t = indicator_table(&h, &id, &wd, (2, 2)).unwrap();
        let minus_one = f.from_int(-1);
        assert_eq!(t.rows.iter().filter(|r| r[0] == minus_one).count(), 1);
        let i = t.rows.iter().position(|r| r[0] == minus_one).unwrap();
        assert_eq!(wd.dims[i], 2);
    }

    #[test]
    fn regular_trace_counts_solutions() {
        let h = c3();
        let f = h.field();
        assert_eq!(regular_indicator_trace(&h, 3), f.from_int(3));
        assert_eq!(regular_indicator_trace(&h, 2), f.one());
    }

    #[test]
    fn operator_route_on_regular_c3() {
        let h = c3();
        let (id, wd) = pipeline(&h);
        let v = ModuleRep::regular(&h);
        for n in 1..=4 {
            let op = operator_indicator(&h, &id, &v, n, DEFAULT_TENSOR_BUDGET).unwrap();
            assert_eq!(op, indicator(&h, &id, &wd.regular_character, n as i64), "n = {n}");
        }
        assert_eq!(operator_indicator(&h, &id, &v, 3, 100).unwrap(), h.field().from_int(3));
    }

    #[test]
    fn operator_route_on_trivial_module() {
        let h = c3();
        let (id, _) = pipeline(&h);
        let t = ModuleRep::trivial(&h);
        for n in 1..=5 {
            assert_eq!(operator_indicator(&h, &id, &t, n, 10).unwrap(), h.field().one());
        }
    }

    #[test]
    fn operator_route_respects_budget() {
        let h = c3();
        let (id, _) = pipeline(&h);
        assert!(matches!(
            operator_indicator(&h, &id, &ModuleRep::regular(&h), 7, DEFAULT_TENSOR_BUDGET),
            Err(Error::BudgetExceeded { needed: 2187, .. })
        ));
    }

    #[test]
    fn identities_hold_on_double() {
        let h = drinfeld_double(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap();
        let (id, wd) = pipeline(&h);
        let r = verify_indicator_identities(&h, &id, &wd, (-6, 6)).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

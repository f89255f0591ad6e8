//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! With basis `b_0..b_{n-1}`:
//! `b_i b_j = sum_k mult(i,j,k) b_k`, `Delta(b_i) = sum_{j,k} comult(i,j,k) b_j (x) b_k`,
//! the unit and counit are vectors, and the antipode is a matrix whose column
//! `j` holds the coordinates of `S(b_j)`. Elements are dense coordinate
//! vectors; elements of tensor powers are sparse [`Tensor`]s.

mod axioms;
mod module;
mod tensor;

pub use axioms::verify_axioms;
pub use module::ModuleRep;
pub use tensor::Tensor;

use crate::error::{Error, Result};
use crate::ff::{Embedding, Fe, Field};
use crate::linalg::Matrix;

/// Coordinates of an element of `H`.
pub type Element = Vec<Fe>;

/// One structure-constant entry `(i, j, k, c)`.
pub type Entry = (usize, usize, usize, Fe);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: Field,
    dim: usize,
    /// `mult[i * dim + j]` lists `(k, c)` with `c != 0`, sorted by `k`.
    mult: Vec<Vec<(usize, Fe)>>,
    /// `comult[i]` lists `(j, k, c)` with `c != 0`, sorted.
    comult: Vec<Vec<(usize, usize, Fe)>>,
    unit: Element,
    counit: Vec<Fe>,
    antipode: Matrix,
}

impl HopfAlgebra {
    /// Assembles structure constants. Duplicate entries are summed. Only
    /// shapes are checked here; see [`verify_axioms`] for the axioms.
    pub fn from_parts(
        field: &Field,
        dim: usize,
        mult: impl IntoIterator<Item = Entry>,
        comult: impl IntoIterator<Item = Entry>,
        unit: Element,
        counit: Vec<Fe>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("algebra of dimension 0".into()));
        }
        let oob = |what: &str, e: &Entry| {
            Error::DimensionMismatch(format!("{what} entry {:?} out of range for dim {dim}", (e.0, e.1, e.2)))
        };
        let mut m: Vec<Vec<(usize, Fe)>> = vec![Vec::new(); dim * dim];
        for e in mult {
            if e.0 >= dim || e.1 >= dim || e.2 >= dim {
                return Err(oob("mult", &e));
            }
            m[e.0 * dim + e.1].push((e.2, e.3));
        }
        let mut d: Vec<Vec<(usize, usize, Fe)>> = vec![Vec::new(); dim];
        for e in comult {
            if e.0 >= dim || e.1 >= dim || e.2 >= dim {
                return Err(oob("comult", &e));
            }
            d[e.0].push((e.1, e.2, e.3));
        }
        let m = m.into_iter().map(|l| merge(field, l, |x| x.0, |x| &mut x.1)).collect();
        let d = d
            .into_iter()
            .map(|l| merge(field, l, |x| (x.0, x.1), |x| &mut x.2))
            .collect();
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch("unit/counit length differs from dim".into()));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimensionMismatch("antipode is not dim x dim".into()));
        }
        Ok(HopfAlgebra {
            field: field.clone(),
            dim,
            mult: m,
            comult: d,
            unit,
            counit,
            antipode,
        })
    }

    /// Like [`HopfAlgebra::from_parts`] but solves for the antipode from the
    /// bialgebra data. The antipode equations
    /// `S(b_j) b_k` and `b_j S(b_k)` summed over `Delta(b_i)` equal
    /// `eps(b_i) 1` are linear in the unknown matrix.
    pub fn with_solved_antipode(
        field: &Field,
        dim: usize,
        mult: impl IntoIterator<Item = Entry>,
        comult: impl IntoIterator<Item = Entry>,
        unit: Element,
        counit: Vec<Fe>,
    ) -> Result<HopfAlgebra> {
        let placeholder = Matrix::zeros(field, dim, dim);
        let mut h = HopfAlgebra::from_parts(field, dim, mult, comult, unit, counit, placeholder)?;
        h.antipode = h.solve_antipode()?;
        Ok(h)
    }

    fn solve_antipode(&self) -> Result<Matrix> {
        let n = self.dim;
        let f = &self.field;
        // unknown s[l * n + j] = coefficient of b_l in S(b_j)
        let mut rows: Vec<Vec<Fe>> = Vec::new();
        let mut rhs: Vec<Fe> = Vec::new();
        for i in 0..n {
            for side in 0..2 {
                let mut eqs = vec![vec![f.zero(); n * n]; n];
                for &(j, k, c) in &self.comult[i] {
                    for l in 0..n {
                        // side 0: S(b_j) b_k, side 1: b_j S(b_k)
                        let (unknown_col, prod) = if side == 0 {
                            (j, &self.mult[l * n + k])
                        } else {
                            (k, &self.mult[j * n + l])
                        };
                        for &(o, m) in prod {
                            let slot = &mut eqs[o][l * n + unknown_col];
                            *slot = f.add(*slot, f.mul(c, m));
                        }
                    }
                }
                for (o, eq) in eqs.into_iter().enumerate() {
                    rows.push(eq);
                    rhs.push(f.mul(self.counit[i], self.unit[o]));
                }
            }
        }
        let a = Matrix::from_data(f, rows.len(), n * n, rows.concat())?;
        let sol = a.solve(&rhs)?.ok_or(Error::NoAntipode)?;
        Matrix::from_data(f, n, n, sol.x)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_entries(&self, i: usize, j: usize) -> &[(usize, Fe)] {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_entries(&self, i: usize) -> &[(usize, usize, Fe)] {
        &self.comult[i]
    }

    /// All nonzero `(i, j, k, c)` of the multiplication tensor.
    pub fn mult_tensor(&self) -> impl Iterator<Item = Entry> + '_ {
        (0..self.dim).flat_map(move |i| {
            (0..self.dim).flat_map(move |j| self.mult_entries(i, j).iter().map(move |&(k, c)| (i, j, k, c)))
        })
    }

    pub fn comult_tensor(&self) -> impl Iterator<Item = Entry> + '_ {
        (0..self.dim).flat_map(move |i| self.comult[i].iter().map(move |&(j, k, c)| (i, j, k, c)))
    }

    pub fn unit(&self) -> &[Fe] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Fe] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// Same data with the antipode replaced; used to build corrupted inputs.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<HopfAlgebra> {
        HopfAlgebra::from_parts(
            &self.field,
            self.dim,
            self.mult_tensor().collect::<Vec<_>>(),
            self.comult_tensor().collect::<Vec<_>>(),
            self.unit.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    pub(crate) fn with_coalgebra(&self, comult: Vec<Vec<(usize, usize, Fe)>>, antipode: Matrix) -> HopfAlgebra {
        HopfAlgebra {
            field: self.field.clone(),
            dim: self.dim,
            mult: self.mult.clone(),
            comult,
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            antipode,
        }
    }

    // ---- elements ----

    pub fn zero(&self) -> Element {
        vec![self.field.zero(); self.dim]
    }

    pub fn one(&self) -> Element {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn scalar(&self, c: Fe) -> Element {
        self.scale(&self.unit, c)
    }

    fn check_len(&self, a: &[Fe]) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::AlgebraMismatch(format!(
                "element of length {} in an algebra of dimension {}",
                a.len(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &[Fe], b: &[Fe]) -> Element {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Fe], b: &[Fe]) -> Element {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &[Fe], c: Fe) -> Element {
        a.iter().map(|&x| self.field.mul(x, c)).collect()
    }

    /// `acc += c * b_i b_j`
    fn accumulate_product(&self, acc: &mut [Fe], i: usize, j: usize, c: Fe) {
        let f = &self.field;
        for &(k, m) in self.mult_entries(i, j) {
            acc[k] = f.add(acc[k], f.mul(c, m));
        }
    }

    pub fn mul(&self, a: &[Fe], b: &[Fe]) -> Element {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if !y.is_zero() {
                    self.accumulate_product(&mut out, i, j, f.mul(x, y));
                }
            }
        }
        out
    }

    /// Checked product, rejecting elements of the wrong length.
    pub fn multiply(&self, a: &[Fe], b: &[Fe]) -> Result<Element> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        let mut out = self.zero();
        self.accumulate_product(&mut out, i, j, self.field.one());
        out
    }

    pub fn comul(&self, a: &[Fe]) -> Tensor {
        let f = &self.field;
        let mut t = Tensor::zero(self.dim, 2);
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, k, c) in &self.comult[i] {
                t.add_term(f, vec![j, k], f.mul(x, c));
            }
        }
        t
    }

    pub fn comultiply(&self, a: &[Fe]) -> Result<Tensor> {
        self.check_len(a)?;
        Ok(self.comul(a))
    }

    pub fn antipode(&self, a: &[Fe]) -> Element {
        self.antipode.mul_vec(a).expect("length checked by caller")
    }

    pub fn antipode_apply(&self, a: &[Fe]) -> Result<Element> {
        self.check_len(a)?;
        Ok(self.antipode(a))
    }

    pub fn counit(&self, a: &[Fe]) -> Fe {
        let f = &self.field;
        a.iter()
            .zip(&self.counit)
            .fold(f.zero(), |acc, (&x, &e)| f.add(acc, f.mul(x, e)))
    }

    pub fn counit_apply(&self, a: &[Fe]) -> Result<Fe> {
        self.check_len(a)?;
        Ok(self.counit(a))
    }

    /// Evaluates a covector (functional given by its values on the basis).
    pub fn pair(&self, functional: &[Fe], a: &[Fe]) -> Fe {
        let f = &self.field;
        functional
            .iter()
            .zip(a)
            .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    }

    /// Solves `a x = 1`; in a finite-dimensional algebra a one-sided inverse
    /// is two-sided.
    pub fn inverse(&self, a: &[Fe]) -> Result<Element> {
        let sol = self.left_mult_matrix(a).solve(&self.unit)?;
        sol.map(|s| s.x).ok_or(Error::SingularMatrix)
    }

    pub fn commutes(&self, a: &[Fe], b: &[Fe]) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: &[Fe]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis(i);
            self.commutes(a, &b)
        })
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult_matrix(&self, a: &[Fe]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for &(k, c) in self.mult_entries(i, j) {
                    let v = f.add(m.get(k, j), f.mul(x, c));
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult_matrix(&self, a: &[Fe]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (j, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for &(k, c) in self.mult_entries(i, j) {
                    let v = f.add(m.get(k, i), f.mul(x, c));
                    m.set(k, i, v);
                }
            }
        }
        m
    }

    /// Regular character `chi_H(b_i) = tr(L_{b_i})`.
    pub fn regular_character(&self) -> Vec<Fe> {
        let f = &self.field;
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(f.zero(), |acc, j| {
                    let c = self
                        .mult_entries(i, j)
                        .iter()
                        .find(|e| e.0 == j)
                        .map_or(f.zero(), |e| e.1);
                    f.add(acc, c)
                })
            })
            .collect()
    }

    pub fn s_square_matrix(&self) -> Matrix {
        self.antipode.mul(&self.antipode).expect("square")
    }

    pub fn is_involutory(&self) -> bool {
        self.s_square_matrix().is_identity()
    }

    /// `Delta` applied to every term of `t` on leg `leg`, producing order + 1.
    pub fn comul_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let f = &self.field;
        let mut out = Tensor::zero(self.dim, t.order() + 1);
        for (idx, c) in t.iter() {
            for &(j, k, d) in &self.comult[idx[leg]] {
                let mut ni = Vec::with_capacity(idx.len() + 1);
                ni.extend_from_slice(&idx[..leg]);
                ni.push(j);
                ni.push(k);
                ni.extend_from_slice(&idx[leg + 1..]);
                out.add_term(f, ni, f.mul(c, d));
            }
        }
        out
    }

    /// `Delta_{m-1}(a)` in `H^{(x)m}`, folding `Delta (x) id` on the left.
    pub fn iterated_coproduct(&self, a: &[Fe], m: usize) -> Tensor {
        assert!(m >= 1, "iterated coproduct needs at least one leg");
        let f = &self.field;
        let mut t = Tensor::zero(self.dim, 1);
        for (i, &x) in a.iter().enumerate() {
            t.add_term(f, vec![i], x);
        }
        for _ in 1..m {
            t = self.comul_leg(&t, 0);
        }
        t
    }

    /// Applies a linear map (given as a matrix on coordinates) to one leg.
    pub fn map_leg(&self, t: &Tensor, leg: usize, map: &Matrix) -> Tensor {
        let f = &self.field;
        let mut out = Tensor::zero(self.dim, t.order());
        for (idx, c) in t.iter() {
            let col = idx[leg];
            for r in 0..self.dim {
                let m = map.get(r, col);
                if m.is_zero() {
                    continue;
                }
                let mut ni = idx.to_vec();
                ni[leg] = r;
                out.add_term(f, ni, f.mul(c, m));
            }
        }
        out
    }

    /// Left- or right-multiplies one leg by a fixed element.
    pub fn mul_leg(&self, t: &Tensor, leg: usize, a: &[Fe], on_left: bool) -> Tensor {
        let m = if on_left {
            self.left_mult_matrix(a)
        } else {
            self.right_mult_matrix(a)
        };
        self.map_leg(t, leg, &m)
    }

    /// Multiplies the legs of each term together: `a1 a2 ... am`.
    pub fn multiply_legs(&self, t: &Tensor) -> Element {
        let f = &self.field;
        let mut out = self.zero();
        for (idx, c) in t.iter() {
            let mut prod = self.basis(idx[0]);
            for &i in &idx[1..] {
                let mut next = self.zero();
                for (k, &x) in prod.iter().enumerate() {
                    if !x.is_zero() {
                        self.accumulate_product(&mut next, k, i, x);
                    }
                }
                prod = next;
            }
            for (o, x) in out.iter_mut().zip(prod) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    /// Contracts one leg against a functional, dropping that leg.
    pub fn contract_leg(&self, t: &Tensor, leg: usize, functional: &[Fe]) -> Tensor {
        let f = &self.field;
        let mut out = Tensor::zero(self.dim, t.order() - 1);
        for (idx, c) in t.iter() {
            let v = functional[idx[leg]];
            if v.is_zero() {
                continue;
            }
            let mut ni = idx.to_vec();
            ni.remove(leg);
            out.add_term(f, ni, f.mul(c, v));
        }
        out
    }

    /// Componentwise product in the algebra `H^{(x)m}`.
    pub fn tensor_mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        assert_eq!(s.order(), t.order());
        let f = &self.field;
        let mut out = Tensor::zero(self.dim, s.order());
        for (a, c) in s.iter() {
            for (b, d) in t.iter() {
                let mut partial: Vec<(Vec<usize>, Fe)> = vec![(Vec::new(), f.mul(c, d))];
                for (&i, &j) in a.iter().zip(b) {
                    let entries = self.mult_entries(i, j);
                    let mut next = Vec::with_capacity(partial.len() * entries.len());
                    for (idx, x) in &partial {
                        for &(k, m) in entries {
                            let mut ni = idx.clone();
                            ni.push(k);
                            next.push((ni, f.mul(*x, m)));
                        }
                    }
                    partial = next;
                }
                for (idx, x) in partial {
                    out.add_term(f, idx, x);
                }
            }
        }
        out
    }

    /// `1 (x) ... (x) 1`
    pub fn unit_tensor(&self, order: usize) -> Tensor {
        let legs: Vec<&[Fe]> = vec![&self.unit; order];
        Tensor::pure(&self.field, &legs)
    }

    /// Maps every structure constant through a field embedding.
    pub fn extend_scalars(&self, emb: &Embedding) -> HopfAlgebra {
        let g = emb.target();
        let map = |v: &[Fe]| v.iter().map(|&x| emb.apply(x)).collect::<Vec<_>>();
        let antipode = Matrix::from_data(g, self.dim, self.dim, map(self.antipode.data()))
            .expect("same shape");
        HopfAlgebra {
            field: g.clone(),
            dim: self.dim,
            mult: self
                .mult
                .iter()
                .map(|l| l.iter().map(|&(k, c)| (k, emb.apply(c))).collect())
                .collect(),
            comult: self
                .comult
                .iter()
                .map(|l| l.iter().map(|&(j, k, c)| (j, k, emb.apply(c))).collect())
                .collect(),
            unit: map(&self.unit),
            counit: map(&self.counit),
            antipode,
        }
    }
}

/// Sums duplicate keys and drops zeros.
fn merge<T, K: Ord + Copy>(
    field: &Field,
    mut list: Vec<T>,
    key: impl Fn(&T) -> K,
    val: impl Fn(&mut T) -> &mut Fe,
) -> Vec<T> {
    list.sort_by_key(|x| key(x));
    let mut out: Vec<T> = Vec::with_capacity(list.len());
    for mut item in list {
        if let Some(last) = out.last_mut() {
            if key(last) == key(&item) {
                let s = field.add(*val(last), *val(&mut item));
                *val(last) = s;
                continue;
            }
        }
        out.push(item);
    }
    out.retain_mut(|x| !val(x).is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{dual_group_algebra, group_algebra, GroupTable};
    use proptest::prelude::*;

    fn c3() -> HopfAlgebra {
        group_algebra(&GroupTable::cyclic(3), &Field::prime(7).unwrap()).unwrap()
    }

    #[test]
    fn group_algebra_structure_maps() {
        let h = c3();
        let (g, g2) = (h.basis(1), h.basis(2));
        assert_eq!(h.multiply(&g, &g2).unwrap(), h.one());
        let f = h.field();
        assert_eq!(h.comultiply(&g).unwrap(), Tensor::pure(f, &[&g, &g]));
        assert_eq!(h.antipode_apply(&g).unwrap(), g2);
        assert_eq!(h.counit_apply(&g).unwrap(), f.one());
        assert!(matches!(h.multiply(&g, &[f.one()]), Err(Error::AlgebraMismatch(_))));
    }

    #[test]
    fn iterated_coproduct_of_group_sum() {
        let h = c3();
        let f = h.field().clone();
        let sum = vec![f.one(); 3];
        assert_eq!(h.iterated_coproduct(&sum, 1), Tensor::pure(&f, &[&sum]));
        let g = h.basis(1);
        assert_eq!(h.iterated_coproduct(&g, 2), Tensor::pure(&f, &[&g, &g]));
        let mut expect = Tensor::zero(3, 3);
        for x in 0..3 {
            expect.add_term(&f, vec![x, x, x], f.one());
        }
        assert_eq!(h.iterated_coproduct(&sum, 3), expect);
    }

    #[test]
    fn left_multiplication_matrices() {
        let h = c3();
        let f = h.field();
        assert!(h.left_mult_matrix(&h.one()).is_identity());
        let lg = h.left_mult_matrix(&h.basis(1));
        assert_eq!(lg.trace().unwrap(), f.zero());
        assert_eq!(lg.mul(&lg).unwrap().mul(&lg).unwrap(), Matrix::identity(f, 3));
        let sum = vec![f.one(); 3];
        let l = h.left_mult_matrix(&sum);
        assert!(l.data().iter().all(|&c| c == f.one()));
        assert_eq!(l.trace().unwrap(), f.from_int(3));
    }

    #[test]
    fn involutory_examples() {
        let f = Field::prime(5).unwrap();
        let g = GroupTable::cyclic(2);
        assert!(group_algebra(&g, &f).unwrap().is_involutory());
        assert!(dual_group_algebra(&g, &f).unwrap().is_involutory());
    }

    #[test]
    fn corrupted_antipode_is_caught() {
        let h = c3();
        let bad = h.with_antipode(Matrix::identity(h.field(), 3)).unwrap();
        assert!(!bad.is_involutory() || !verify_axioms(&bad).all_passed());
        assert!(!verify_axioms(&bad).passed("antipode"));
        let swapped = h
            .with_antipode(Matrix::from_ints(h.field(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]))
            .unwrap();
        assert!(!swapped.is_involutory() || !verify_axioms(&swapped).passed("antipode"));
    }

    #[test]
    fn corrupted_multiplication_reports_associativity() {
        let h = c3();
        let f = h.field();
        let mut mult: Vec<Entry> = h.mult_tensor().collect();
        let pos = mult.iter().position(|e| e.0 == 1 && e.1 == 1).unwrap();
        mult[pos].2 = 0;
        let bad = HopfAlgebra::from_parts(
            f,
            3,
            mult,
            h.comult_tensor().collect::<Vec<_>>(),
            h.one(),
            h.counit_vector().to_vec(),
            h.antipode_matrix().clone(),
        )
        .unwrap();
        let report = verify_axioms(&bad);
        let check = report.get("associativity").unwrap();
        assert!(check.witness.as_deref().unwrap().contains('b'));
        assert!(!report.passed("associativity"));
    }

    #[test]
    fn antipode_solved_from_bialgebra_data() {
        let f = Field::prime(7).unwrap();
        for g in [GroupTable::symmetric3(), GroupTable::cyclic(4)] {
            let h = group_algebra(&g, &f).unwrap();
            let solved = HopfAlgebra::with_solved_antipode(
                &f,
                h.dim(),
                h.mult_tensor().collect::<Vec<_>>(),
                h.comult_tensor().collect::<Vec<_>>(),
                h.one(),
                h.counit_vector().to_vec(),
            )
            .unwrap();
            assert_eq!(solved, h);
        }
    }

    #[test]
    fn antipode_is_anti_multiplicative() {
        let f = Field::prime(7).unwrap();
        let h = crate::builders::drinfeld_double(&GroupTable::cyclic(2), &f).unwrap();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = h.antipode(&h.mul_basis(i, j));
                let rhs = h.mul(&h.antipode(&h.basis(j)), &h.antipode(&h.basis(i)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    fn element(h: &HopfAlgebra) -> impl Strategy<Value = Element> {
        let f = h.field().clone();
        proptest::collection::vec(0..f.order(), h.dim())
            .prop_map(move |v| v.into_iter().map(|x| f.element(x)).collect())
    }

    proptest! {
        #[test]
        fn coproduct_and_counit_are_multiplicative(
            (a, b) in {
                let h = crate::builders::drinfeld_double(&GroupTable::cyclic(2), &Field::prime(5).unwrap()).unwrap();
                (element(&h), element(&h))
            }
        ) {
            let h = crate::builders::drinfeld_double(&GroupTable::cyclic(2), &Field::prime(5).unwrap()).unwrap();
            let f = h.field();
            let ab = h.mul(&a, &b);
            prop_assert_eq!(h.comul(&ab), h.tensor_mul(&h.comul(&a), &h.comul(&b)));
            prop_assert_eq!(h.counit(&ab), f.mul(h.counit(&a), h.counit(&b)));
        }

        #[test]
        fn iterated_coproduct_bracketing(a in element(&c3()), m in 2usize..5) {
            let h = c3();
            let left = h.iterated_coproduct(&a, m);
            let inner = h.iterated_coproduct(&a, m - 1);
            prop_assert_eq!(&left, &h.comul_leg(&inner, 0));
            prop_assert_eq!(&left, &h.comul_leg(&inner, m - 2));
        }
    }
}

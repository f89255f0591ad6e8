use std::fmt;

use rand::Rng;

use super::Poly;
use crate::error::{Error, Result};
use crate::ff::{Fe, Field};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&x| self.field.format(x)).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A particular solution of `Ax = b` together with a basis of `ker A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<Fe>,
    pub nullspace: Vec<Vec<Fe>>,
}

/// Reduced row echelon form with pivot columns.
struct Echelon {
    m: Matrix,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn diagonal(field: &Field, diag: &[Fe]) -> Matrix {
        let n = diag.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_data(field: &Field, rows: usize, cols: usize, data: Vec<Fe>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| field.from_int(x)))
            .collect();
        Matrix::from_data(field, r, c, data).expect("ragged rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vec<Fe>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Fe] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    self.get(i, j) == if i == j { self.field.one() } else { self.field.zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: Fe) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`, shapes assumed equal.
    pub fn axpy(&mut self, c: Fe, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = f.add(*a, f.mul(c, b));
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Kronecker product `self (x) other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Fe> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        let f = &self.field;
        Ok((0..self.rows).fold(f.zero(), |acc, i| f.add(acc, self.get(i, i))))
    }

    fn echelon(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Fe>> {
        let f = &self.field;
        let Echelon { m, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Solves `Ax = b`; `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &[Fe]) -> Result<Option<Solution>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i * (self.cols + 1)..i * (self.cols + 1) + self.cols]
                .copy_from_slice(self.row(i));
            aug.data[i * (self.cols + 1) + self.cols] = b[i];
        }
        let Echelon { m, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(r, self.cols);
        }
        Ok(Some(Solution {
            x,
            nullspace: self.kernel(),
        }))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            aug.data[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug.data[i * 2 * n + n + i] = f.one();
        }
        let Echelon { m, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(f, n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&m.data[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Ok(inv)
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn column_basis(&self) -> Vec<usize> {
        self.echelon().pivots
    }

    /// Evaluates `g(self)` by Horner's rule.
    pub fn eval_poly(&self, g: &Poly) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("polynomial of a non-square matrix".into()));
        }
        let f = &self.field;
        let id = Matrix::identity(f, self.rows);
        let mut acc = Matrix::zeros(f, self.rows, self.cols);
        for &c in g.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            acc.axpy(c, &id);
        }
        Ok(acc)
    }

    /// Minimal polynomial of `v` relative to `self`: the monic generator of
    /// `{g : g(A) v = 0}`, from the first linear dependency in the Krylov
    /// sequence `v, Av, A^2 v, ...`.
    fn local_min_poly(&self, v: &[Fe]) -> Result<Poly> {
        let f = &self.field;
        let n = self.rows;
        let mut krylov: Vec<Vec<Fe>> = vec![v.to_vec()];
        loop {
            let last = krylov.last().expect("nonempty");
            let next = self.mul_vec(last)?;
            let basis = Matrix::from_columns(f, n, &krylov);
            if let Some(sol) = basis.solve(&next)? {
                // A^d v = sum c_i A^i v  =>  x^d - sum c_i x^i
                let mut coeffs: Vec<Fe> = sol.x.iter().map(|&c| f.neg(c)).collect();
                coeffs.push(f.one());
                return Ok(Poly::new(f, coeffs));
            }
            krylov.push(next);
        }
    }

    /// Monic minimal polynomial: the lcm of Krylov minimal polynomials of
    /// random vectors until the candidate annihilates the matrix, falling back
    /// to the standard basis.
    pub fn min_poly(&self, rng: &mut impl Rng) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(f));
        }
        let mut m = Poly::one(f);
        let q = f.order();
        for _ in 0..4 {
            let v: Vec<Fe> = (0..n).map(|_| f.element(rng.gen_range(0..q))).collect();
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            m = m.lcm(&self.local_min_poly(&v)?);
            if self.eval_poly(&m)?.is_zero() {
                return Ok(m);
            }
        }
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            m = m.lcm(&self.local_min_poly(&e)?);
        }
        debug_assert!(self.eval_poly(&m)?.is_zero());
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(1)
    }

    #[test]
    fn solve_examples() {
        let f5 = Field::prime(5).unwrap();
        let id = Matrix::identity(&f5, 2);
        let sol = id.solve(&[f5.from_int(1), f5.from_int(2)]).unwrap().unwrap();
        assert_eq!(sol.x, vec![f5.from_int(1), f5.from_int(2)]);
        assert!(sol.nullspace.is_empty());

        let f2 = Field::prime(2).unwrap();
        let a = Matrix::from_ints(&f2, &[&[1, 1], &[1, 1]]);
        let sol = a.solve(&[f2.zero(), f2.zero()]).unwrap().unwrap();
        assert_eq!(sol.nullspace, vec![vec![f2.one(), f2.one()]]);
        assert_eq!(a.solve(&[f2.one(), f2.zero()]).unwrap(), None);
        assert!(a.solve(&[f2.one()]).is_err());
    }

    #[test]
    fn rank_trace_kernel() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(Matrix::identity(&f7, 3).rank(), 3);
        let d = Matrix::from_ints(&f7, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(d.trace().unwrap(), f7.from_int(6));
        assert_eq!(Matrix::zeros(&f7, 2, 2).kernel().len(), 2);
        assert!(matches!(Matrix::zeros(&f7, 2, 2).inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn min_poly_examples() {
        let f5 = Field::prime(5).unwrap();
        let x1 = Poly::linear(&f5, f5.one());
        assert_eq!(Matrix::identity(&f5, 2).min_poly(&mut rng()).unwrap(), x1);
        let d = Matrix::from_ints(&f5, &[&[1, 0], &[0, 2]]);
        // (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 2x + 2 mod 5
        let expected = Poly::new(&f5, vec![f5.from_int(2), f5.from_int(2), f5.one()]);
        assert_eq!(d.min_poly(&mut rng()).unwrap(), expected);
        let j = Matrix::from_ints(&f5, &[&[0, 1], &[0, 0]]);
        assert_eq!(j.min_poly(&mut rng()).unwrap(), Poly::x(&f5).pow(2));
    }

    fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(0i64..7, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((r, c, data) in matrix_strategy()) {
            let f = Field::prime(7).unwrap();
            let m = Matrix::from_data(&f, r, c, data.iter().map(|&x| f.from_int(x)).collect()).unwrap();
            let ker = m.kernel();
            prop_assert_eq!(m.rank() + ker.len(), c);
            for v in ker {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn inverse_and_min_poly(data in proptest::collection::vec(0i64..5, 16), seed in any::<u64>()) {
            let f = Field::prime(5).unwrap();
            let m = Matrix::from_data(&f, 4, 4, data.iter().map(|&x| f.from_int(x)).collect()).unwrap();
            if let Ok(inv) = m.inverse() {
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            } else {
                prop_assert!(m.rank() < 4);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mp = m.min_poly(&mut rng).unwrap();
            prop_assert!(m.eval_poly(&mp).unwrap().is_zero());
            // minimality: no proper monic divisor annihilates
            for (g, _) in mp.factor() {
                let smaller = mp.divrem(&g).0;
                prop_assert!(!m.eval_poly(&smaller).unwrap().is_zero());
            }
        }
    }
}

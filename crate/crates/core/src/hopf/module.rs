use super::HopfAlgebra;
use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::linalg::Matrix;
use crate::report::Report;

/// A representation `rho: H -> End(V)` given by one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    dim_v: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    /// Wraps action matrices, checking only their shapes.
    pub fn new(h: &HopfAlgebra, dim_v: usize, action: Vec<Matrix>) -> Result<ModuleRep> {
        if action.len() != h.dim() {
            return Err(Error::AlgebraMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                h.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(Error::DimensionMismatch(format!("action matrix is not {dim_v} x {dim_v}")));
        }
        Ok(ModuleRep { dim_v, action })
    }

    /// Like [`ModuleRep::new`] but rejects data failing the module axioms.
    pub fn checked(h: &HopfAlgebra, dim_v: usize, action: Vec<Matrix>) -> Result<ModuleRep> {
        let v = ModuleRep::new(h, dim_v, action)?;
        let report = v.verify(h);
        let failure = report
            .failures()
            .next()
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
        match failure {
            None => Ok(v),
            Some(w) => Err(Error::ModuleAxiomViolation(w)),
        }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &HopfAlgebra) -> ModuleRep {
        let action = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis(i))).collect();
        ModuleRep { dim_v: h.dim(), action }
    }

    /// The one-dimensional module given by the counit.
    pub fn trivial(h: &HopfAlgebra) -> ModuleRep {
        let action = h
            .counit_vector()
            .iter()
            .map(|&e| Matrix::diagonal(h.field(), &[e]))
            .collect();
        ModuleRep { dim_v: 1, action }
    }

    pub fn dim(&self) -> usize {
        self.dim_v
    }

    pub fn action_matrices(&self) -> &[Matrix] {
        &self.action
    }

    /// `rho(a)` for an arbitrary element.
    pub fn act(&self, h: &HopfAlgebra, a: &[Fe]) -> Matrix {
        let mut m = Matrix::zeros(h.field(), self.dim_v, self.dim_v);
        for (i, &c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.action[i]);
            }
        }
        m
    }

    pub fn verify(&self, h: &HopfAlgebra) -> Report {
        let mut r = Report::new();
        let n = h.dim();
        r.record("unit_acts_as_identity", {
            (!self.act(h, h.unit()).is_identity()).then(|| "rho(1) != I".to_string())
        });
        r.record(
            "action_multiplicative",
            (0..n * n).find_map(|t| {
                let (i, j) = (t / n, t % n);
                let lhs = self.action[i].mul(&self.action[j]).expect("square");
                let rhs = self.act(h, &h.mul_basis(i, j));
                (lhs != rhs).then(|| format!("rho(b{i}) rho(b{j}) != rho(b{i} b{j})"))
            }),
        );
        r
    }

    /// `chi_V(b_i) = tr rho(b_i)`
    pub fn character(&self) -> Vec<Fe> {
        self.action.iter().map(|m| m.trace().expect("square")).collect()
    }

    /// Dual module: `rho*(b_i) = rho(S(b_i))^T`.
    pub fn dual(&self, h: &HopfAlgebra) -> ModuleRep {
        let s = h.antipode_matrix();
        let action = (0..h.dim())
            .map(|i| self.act(h, &s.column(i)).transpose())
            .collect();
        ModuleRep {
            dim_v: self.dim_v,
            action,
        }
    }

    /// `V (x) W` with `H` acting through the coproduct.
    pub fn tensor(&self, h: &HopfAlgebra, other: &ModuleRep) -> Result<ModuleRep> {
        if self.action.len() != h.dim() || other.action.len() != h.dim() {
            return Err(Error::AlgebraMismatch("modules over different algebras".into()));
        }
        let dim = self.dim_v * other.dim_v;
        let action = (0..h.dim())
            .map(|i| {
                let mut m = Matrix::zeros(h.field(), dim, dim);
                for &(j, k, c) in h.comult_entries(i) {
                    m.axpy(c, &self.action[j].kronecker(&other.action[k]));
                }
                m
            })
            .collect();
        Ok(ModuleRep { dim_v: dim, action })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{group_algebra, GroupTable};
    use crate::ff::Field;

    fn s3() -> (HopfAlgebra, GroupTable) {
        let g = GroupTable::symmetric3();
        (group_algebra(&g, &Field::prime(7).unwrap()).unwrap(), g)
    }

    /// Standard two-dimensional representation of S3: r rotates, s reflects.
    fn standard(h: &HopfAlgebra, g: &GroupTable) -> ModuleRep {
        let f = h.field();
        let r = Matrix::from_ints(f, &[&[0, -1], &[1, -1]]);
        let s = Matrix::from_ints(f, &[&[0, 1], &[1, 0]]);
        let action = (0..g.order())
            .map(|x| {
                let (a, b) = (x % 3, x / 3);
                let mut m = Matrix::identity(f, 2);
                for _ in 0..a {
                    m = m.mul(&r).unwrap();
                }
                if b == 1 {
                    m = m.mul(&s).unwrap();
                }
                m
            })
            .collect();
        ModuleRep::checked(h, 2, action).unwrap()
    }

    #[test]
    fn regular_and_trivial_modules_verify() {
        let (h, _) = s3();
        assert!(ModuleRep::regular(&h).verify(&h).all_passed());
        assert!(ModuleRep::trivial(&h).verify(&h).all_passed());
        assert_eq!(ModuleRep::regular(&h).character(), h.regular_character());
    }

    #[test]
    fn standard_representation_character() {
        let (h, g) = s3();
        let v = standard(&h, &g);
        let chi = v.character();
        let f = h.field();
        assert_eq!(chi[g.index_of("r^0 s^1").unwrap()], f.zero());
        assert_eq!(chi[g.index_of("r^1 s^0").unwrap()], f.from_int(-1));
        assert_eq!(chi[g.identity()], f.from_int(2));
    }

    #[test]
    fn dual_character_is_character_after_antipode() {
        let (h, g) = s3();
        let v = standard(&h, &g);
        let dual = v.dual(&h);
        assert!(dual.verify(&h).all_passed());
        let chi = v.character();
        let via_s: Vec<Fe> = (0..h.dim())
            .map(|i| h.pair(&chi, &h.antipode(&h.basis(i))))
            .collect();
        assert_eq!(dual.character(), via_s);
    }

    #[test]
    fn tensor_with_trivial_keeps_character() {
        let (h, g) = s3();
        let v = standard(&h, &g);
        let t = ModuleRep::trivial(&h).tensor(&h, &v).unwrap();
        assert!(t.verify(&h).all_passed());
        assert_eq!(t.character(), v.character());
    }

    #[test]
    fn tensor_character_is_convolution() {
        let (h, g) = s3();
        let v = standard(&h, &g);
        let vv = v.tensor(&h, &v).unwrap();
        let chi = v.character();
        let f = h.field();
        for i in 0..h.dim() {
            let conv = h.comult_entries(i).iter().fold(f.zero(), |acc, &(j, k, c)| {
                f.add(acc, f.mul(c, f.mul(chi[j], chi[k])))
            });
            assert_eq!(vv.character()[i], conv);
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let (h, _) = s3();
        let f = h.field();
        let action = vec![Matrix::identity(f, 1); h.dim()];
        assert!(ModuleRep::checked(&h, 1, action.clone()).is_ok());
        let mut bad = action;
        bad[1] = Matrix::diagonal(f, &[f.from_int(2)]);
        assert!(matches!(
            ModuleRep::checked(&h, 1, bad),
            Err(Error::ModuleAxiomViolation(_))
        ));
    }
}

//! Finite groups and the Hopf algebras built from them.

use crate::error::{Error, Result};
use crate::ff::{Fe, Field};
use crate::hopf::{Entry, HopfAlgebra};
use crate::linalg::Matrix;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

const MAX_ASSOCIATIVITY_CHECK: usize = 64;

impl GroupTable {
    /// Validates a Cayley table: Latin square, identity, inverses, and
    /// associativity (exhaustive up to order 64).
    pub fn new(cayley: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupTable> {
        let m = cayley.len();
        if m == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if labels.len() != m {
            return Err(Error::InvalidGroup(format!("{} labels for order {m}", labels.len())));
        }
        for (a, row) in cayley.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidGroup(format!("row {a} has length {}", row.len())));
            }
            let mut seen = vec![false; m];
            for &x in row {
                if x >= m || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {a} is not a permutation")));
                }
            }
        }
        for b in 0..m {
            let mut seen = vec![false; m];
            for row in &cayley {
                if std::mem::replace(&mut seen[row[b]], true) {
                    return Err(Error::InvalidGroup(format!("column {b} is not a permutation")));
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| cayley[e][a] == a && cayley[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let inverse: Vec<usize> = (0..m)
            .map(|a| (0..m).find(|&b| cayley[a][b] == identity).expect("Latin square"))
            .collect();
        if let Some(a) = (0..m).find(|&a| cayley[inverse[a]][a] != identity) {
            return Err(Error::InvalidGroup(format!("left and right inverse of {a} differ")));
        }
        if m <= MAX_ASSOCIATIVITY_CHECK {
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                            return Err(Error::InvalidGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                        }
                    }
                }
            }
        }
        Ok(GroupTable {
            cayley,
            identity,
            inverse,
            labels,
        })
    }

    fn from_rule(elements: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> GroupTable {
        let m = elements.len();
        let cayley = (0..m).map(|a| (0..m).map(|b| mul(a, b)).collect()).collect();
        GroupTable::new(cayley, elements).expect("built-in group is valid")
    }

    /// `C_m = <g>`, element `a` is `g^a`.
    pub fn cyclic(m: usize) -> GroupTable {
        assert!(m >= 1);
        let labels = (0..m).map(|a| format!("g^{a}")).collect();
        GroupTable::from_rule(labels, |a, b| (a + b) % m)
    }

    /// Dihedral group of order `2m`; element `b * m + a` is `r^a s^b`.
    pub fn dihedral(m: usize) -> GroupTable {
        assert!(m >= 1);
        let labels = (0..2 * m)
            .map(|i| format!("r^{} s^{}", i % m, i / m))
            .collect();
        GroupTable::from_rule(labels, |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            let rot = if b == 0 { a + c } else { a + m - c };
            ((b + d) % 2) * m + rot % m
        })
    }

    pub fn symmetric3() -> GroupTable {
        GroupTable::dihedral(3)
    }

    /// Quaternion group; indices 0..8 are `1, i, j, k, -1, -i, -j, -k`.
    pub fn quaternion() -> GroupTable {
        // unit products among {1,i,j,k} as (sign, unit)
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::from_rule(labels, |x, y| {
            let (neg, u) = T[x % 4][y % 4];
            let sign = (x / 4 + y / 4 + neg as usize) % 2;
            sign * 4 + u
        })
    }

    /// Direct product; element `a * |H| + b` is `(a, b)`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let n = h.order();
        let labels = (0..g.order() * n)
            .map(|i| format!("({},{})", g.labels[i / n], h.labels[i % n]))
            .collect();
        GroupTable::from_rule(labels, |x, y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n))
    }

    /// Looks up a built-in group by name: `c<m>`, `d<m>` (order 2m), `s3`,
    /// `q8`, `k4`, or a product such as `c3xc3`.
    pub fn by_name(name: &str) -> Result<GroupTable> {
        let name = name.trim().to_ascii_lowercase();
        if let Some((a, b)) = name.split_once('x') {
            return Ok(GroupTable::product(&GroupTable::by_name(a)?, &GroupTable::by_name(b)?));
        }
        let bad = || Error::InvalidGroup(format!("unknown group {name:?}"));
        let param = |s: &str| -> Result<usize> {
            let m: usize = s.parse().map_err(|_| bad())?;
            if (1..=32).contains(&m) {
                Ok(m)
            } else {
                Err(bad())
            }
        };
        match name.as_str() {
            "s3" => Ok(GroupTable::symmetric3()),
            "q8" => Ok(GroupTable::quaternion()),
            "k4" | "v4" => Ok(GroupTable::product(&GroupTable::cyclic(2), &GroupTable::cyclic(2))),
            _ => {
                if let Some(m) = name.strip_prefix('c') {
                    Ok(GroupTable::cyclic(param(m)?))
                } else if let Some(m) = name.strip_prefix('d') {
                    Ok(GroupTable::dihedral(param(m)?))
                } else {
                    Err(bad())
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, n: i64) -> usize {
        let base = if n < 0 { self.inv(a) } else { a };
        (0..n.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|a| (0..m).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, in order of first element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let m = self.order();
        let mut class_of = vec![usize::MAX; m];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..m {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..m).map(|h| self.mul(self.mul(h, a), self.inv(h))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                class_of[c] = classes.len();
            }
            classes.push(class);
        }
        classes
    }
}

fn check_field(field: &Field, order: usize, dim: usize) -> Result<()> {
    let p = field.characteristic();
    if order as u64 % p == 0 {
        return Err(Error::CharacteristicDividesOrder { p, order });
    }
    if (p as u128) * (p as u128) <= dim as u128 {
        return Err(Error::PreconditionPSquare { p, dim });
    }
    Ok(())
}

fn permutation_matrix(field: &Field, image: impl Fn(usize) -> usize, n: usize) -> Matrix {
    let mut s = Matrix::zeros(field, n, n);
    for j in 0..n {
        s.set(image(j), j, field.one());
    }
    s
}

/// `k[G]`: group-likes with `S(g) = g^{-1}`.
pub fn group_algebra(g: &GroupTable, field: &Field) -> Result<HopfAlgebra> {
    check_field(field, g.order(), g.order())?;
    Ok(group_algebra_unchecked(g, field))
}

/// [`group_algebra`] without the characteristic preconditions, for building
/// non-semisimple examples.
pub fn group_algebra_unchecked(g: &GroupTable, field: &Field) -> HopfAlgebra {
    let m = g.order();
    let one = field.one();
    let mult: Vec<Entry> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b, g.mul(a, b), one)))
        .collect();
    let comult: Vec<Entry> = (0..m).map(|a| (a, a, a, one)).collect();
    let mut unit = vec![field.zero(); m];
    unit[g.identity()] = one;
    let counit = vec![one; m];
    let antipode = permutation_matrix(field, |a| g.inv(a), m);
    HopfAlgebra::from_parts(field, m, mult, comult, unit, counit, antipode).expect("well-shaped")
}

/// `k^G`: basis of point masses `delta_g`.
pub fn dual_group_algebra(g: &GroupTable, field: &Field) -> Result<HopfAlgebra> {
    check_field(field, g.order(), g.order())?;
    let m = g.order();
    let one = field.one();
    let mult: Vec<Entry> = (0..m).map(|a| (a, a, a, one)).collect();
    let comult: Vec<Entry> = (0..m)
        .flat_map(|x| (0..m).map(move |y| (g.mul(x, y), x, y, one)))
        .collect();
    let unit = vec![one; m];
    let mut counit = vec![field.zero(); m];
    counit[g.identity()] = one;
    let antipode = permutation_matrix(field, |a| g.inv(a), m);
    HopfAlgebra::from_parts(field, m, mult, comult, unit, counit, antipode)
}

/// `D(G) = k^G # k[G]`; basis element `delta_x (x) h` has index `x * |G| + h`.
pub fn drinfeld_double(g: &GroupTable, field: &Field) -> Result<HopfAlgebra> {
    let m = g.order();
    check_field(field, m, m * m)?;
    let one = field.one();
    let idx = |x: usize, h: usize| x * m + h;
    let conj = |h: usize, x: usize| g.mul(g.mul(h, x), g.inv(h));
    let mut mult: Vec<Entry> = Vec::new();
    for x in 0..m {
        for h in 0..m {
            for k in 0..m {
                // (delta_x h)(delta_y k) is nonzero only for y = h^{-1} x h
                let y = conj(g.inv(h), x);
                mult.push((idx(x, h), idx(y, k), idx(x, g.mul(h, k)), one));
            }
        }
    }
    let mut comult: Vec<Entry> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for h in 0..m {
                comult.push((idx(g.mul(a, b), h), idx(a, h), idx(b, h), one));
            }
        }
    }
    let mut unit = vec![field.zero(); m * m];
    for x in 0..m {
        unit[idx(x, g.identity())] = one;
    }
    let counit: Vec<Fe> = (0..m * m)
        .map(|i| if i / m == g.identity() { one } else { field.zero() })
        .collect();
    let antipode = permutation_matrix(
        field,
        |i| {
            let (x, h) = (i / m, i % m);
            let hi = g.inv(h);
            idx(conj(hi, g.inv(x)), hi)
        },
        m * m,
    );
    HopfAlgebra::from_parts(field, m * m, mult, comult, unit, counit, antipode)
}

/// The construction used to turn a group into a Hopf algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    GroupAlgebra,
    DualGroupAlgebra,
    DrinfeldDouble,
}

impl Construction {
    pub fn build(self, g: &GroupTable, field: &Field) -> Result<HopfAlgebra> {
        match self {
            Construction::GroupAlgebra => group_algebra(g, field),
            Construction::DualGroupAlgebra => dual_group_algebra(g, field),
            Construction::DrinfeldDouble => drinfeld_double(g, field),
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Construction> {
        match s {
            "group" | "group-algebra" => Ok(Construction::GroupAlgebra),
            "dual" | "dual-group" | "dual-group-algebra" => Ok(Construction::DualGroupAlgebra),
            "double" | "drinfeld-double" => Ok(Construction::DrinfeldDouble),
            _ => Err(Error::Validation(format!("unknown construction {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_axioms;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn builtin_groups_are_groups() {
        assert_eq!(GroupTable::cyclic(4).order(), 4);
        let s3 = GroupTable::symmetric3();
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let d4 = GroupTable::dihedral(4);
        assert_eq!(d4.conjugacy_classes().len(), 5);
        let q8 = GroupTable::quaternion();
        assert_eq!(q8.conjugacy_classes().len(), 5);
        let i = q8.index_of("i").unwrap();
        assert_eq!(q8.label(q8.mul(i, i)), "-1");
        assert_eq!(GroupTable::by_name("c2xc2").unwrap().order(), 4);
        assert!(GroupTable::by_name("z9").is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(GroupTable::new(vec![vec![0, 1], vec![0, 1]], labels.clone()).is_err());
        assert!(GroupTable::new(vec![vec![0, 1]], labels).is_err());
    }

    #[test]
    fn c2_over_gf5() {
        let h = group_algebra(&GroupTable::cyclic(2), &gf(5)).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(verify_axioms(&h).all_passed());
    }

    #[test]
    fn s3_over_gf7() {
        let h = group_algebra(&GroupTable::symmetric3(), &gf(7)).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(verify_axioms(&h).all_passed());
    }

    #[test]
    fn c3_over_gf3_is_rejected() {
        assert!(matches!(
            group_algebra(&GroupTable::cyclic(3), &gf(3)),
            Err(Error::CharacteristicDividesOrder { p: 3, order: 3 })
        ));
    }

    #[test]
    fn dual_of_klein_four() {
        let g = GroupTable::by_name("k4").unwrap();
        let h = dual_group_algebra(&g, &gf(5)).unwrap();
        assert!(verify_axioms(&h).all_passed());
        assert_eq!(h.one(), vec![gf(5).one(); 4]);
    }

    #[test]
    fn doubles_pass_axioms() {
        let d = drinfeld_double(&GroupTable::cyclic(2), &gf(5)).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(verify_axioms(&d).all_passed());
        let d = drinfeld_double(&GroupTable::symmetric3(), &gf(7)).unwrap();
        assert_eq!(d.dim(), 36);
        assert!(verify_axioms(&d).all_passed());
    }

    #[test]
    fn double_of_abelian_group_is_commutative() {
        for m in [2, 3] {
            let d = drinfeld_double(&GroupTable::cyclic(m), &gf(7)).unwrap();
            assert!((0..d.dim()).all(|i| d.is_central(&d.basis(i))));
        }
    }

    #[test]
    fn double_requires_p_squared_above_dim() {
        assert!(matches!(
            drinfeld_double(&GroupTable::symmetric3(), &gf(5)),
            Err(Error::PreconditionPSquare { p: 5, dim: 36 })
        ));
    }
}

//! Block decomposition of a split semisimple algebra: center, central
//! primitive idempotents, block sizes, irreducible characters and Schur
//! elements.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::hopf::{Element, HopfAlgebra};
use crate::integrals::IntegralData;
use crate::linalg::{Matrix, Poly};
use crate::report::Report;

const MAX_SPLITTING_ROUNDS: usize = 64;
const FIELD_SIZE_SAMPLES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnData {
    pub idempotents: Vec<Element>,
    pub dims: Vec<usize>,
    pub characters: Vec<Vec<Fe>>,
    /// Schur elements relative to the Frobenius form `lambda <- u`.
    pub schur: Vec<Fe>,
    pub lambda_of_e: Vec<Fe>,
    pub regular_character: Vec<Fe>,
}

/// Basis of `Z(H)`, the kernel of `x |-> [x, b_i]` for all `i`.
pub fn center(h: &HopfAlgebra) -> Vec<Element> {
    let n = h.dim();
    let f = h.field();
    let mut data = Vec::with_capacity(n * n * n);
    for i in 0..n {
        // x b_i - b_i x as a function of x
        let b = h.basis(i);
        let m = h.right_mult_matrix(&b).sub(&h.left_mult_matrix(&b)).expect("square");
        data.extend_from_slice(m.data());
    }
    Matrix::from_data(f, n * n, n, data).expect("shape").kernel()
}

fn eval_at(h: &HopfAlgebra, poly: &Poly, z: &[Fe]) -> Element {
    let mut acc = h.zero();
    for &c in poly.coeffs().iter().rev() {
        acc = h.add(&h.mul(&acc, z), &h.scalar(c));
    }
    acc
}

fn random_element(h: &HopfAlgebra, basis: &[Element], rng: &mut impl Rng) -> Element {
    let f = h.field();
    let mut z = h.zero();
    for b in basis {
        let c = f.element(rng.gen_range(0..f.order()));
        z = h.add(&z, &h.scale(b, c));
    }
    z
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Eigen-idempotents of a central element whose minimal polynomial splits
/// into distinct linear factors; `Err(degree)` when some factor is not linear.
fn spectral_idempotents(h: &HopfAlgebra, z: &[Fe], rng: &mut impl Rng) -> Result<std::result::Result<Vec<Element>, usize>> {
    let f = h.field();
    let min = h.left_mult_matrix(z).min_poly(rng)?;
    if !min.gcd(&min.derivative()).is_one() {
        return Err(Error::NotSemisimple("a central element has a repeated eigenvalue factor".into()));
    }
    let factors = min.factor_with(rng);
    let degree = factors.iter().fold(1, |acc, (p, _)| lcm(acc, p.degree() as usize));
    if degree > 1 {
        return Ok(Err(degree));
    }
    let roots: Vec<Fe> = factors.iter().map(|(p, _)| f.neg(p.coeff(0))).collect();
    let idempotents = roots
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            let mut num = Poly::one(f);
            let mut den = f.one();
            for (l, &b) in roots.iter().enumerate() {
                if l != j {
                    num = num.mul(&Poly::linear(f, b));
                    den = f.mul(den, f.sub(a, b));
                }
            }
            let scaled = num.scale(f.inv(den).expect("distinct roots"));
            eval_at(h, &scaled, z)
        })
        .collect();
    Ok(Ok(idempotents))
}

/// Central primitive idempotents, the trivial block first and the rest in
/// descending lexicographic order of their coordinates.
pub fn central_primitive_idempotents(h: &HopfAlgebra, rng: &mut impl Rng) -> Result<Vec<Element>> {
    let z_basis = center(h);
    let target = z_basis.len();
    let mut blocks = vec![h.one()];
    let mut rounds = 0;
    while blocks.len() < target {
        if rounds == MAX_SPLITTING_ROUNDS {
            return Err(Error::SplittingFailed(rounds));
        }
        rounds += 1;
        let z = random_element(h, &z_basis, rng);
        match spectral_idempotents(h, &z, rng)? {
            Ok(parts) => {
                let mut refined = Vec::with_capacity(blocks.len() * parts.len());
                for e in &blocks {
                    for p in &parts {
                        let q = h.mul(e, p);
                        if q.iter().any(|c| !c.is_zero()) {
                            refined.push(q);
                        }
                    }
                }
                blocks = refined;
            }
            Err(first) => {
                let mut degree = first;
                for _ in 1..FIELD_SIZE_SAMPLES {
                    let z = random_element(h, &z_basis, rng);
                    if let Err(d) = spectral_idempotents(h, &z, rng)? {
                        degree = lcm(degree, d);
                    }
                }
                return Err(Error::FieldTooSmall { degree });
            }
        }
    }
    Ok(canonical_order(h, blocks))
}

fn canonical_order(h: &HopfAlgebra, mut blocks: Vec<Element>) -> Vec<Element> {
    blocks.sort_by(|a, b| {
        let trivial_a = !h.counit(a).is_zero();
        let trivial_b = !h.counit(b).is_zero();
        trivial_b.cmp(&trivial_a).then_with(|| b.cmp(a))
    });
    blocks
}

fn isqrt(r: usize) -> Option<usize> {
    let d = (r as f64).sqrt().round() as usize;
    (d.checked_mul(d) == Some(r)).then_some(d)
}

/// `d` with `rank L_e = d^2`.
pub fn block_dimension(h: &HopfAlgebra, e: &[Fe]) -> Result<usize> {
    let r = h.left_mult_matrix(e).rank();
    isqrt(r).ok_or(Error::NonSquareBlock(r))
}

/// `chi_i(a) = tr(L_{a e_i}) / d_i` on every basis element.
pub fn irreducible_characters(h: &HopfAlgebra, idempotents: &[Element], dims: &[usize]) -> Result<Vec<Vec<Fe>>> {
    let f = h.field();
    idempotents
        .iter()
        .zip(dims)
        .map(|(e, &d)| {
            let d_inv = f.inv(f.from_int(d as i64)).map_err(|_| Error::DimensionNotInvertible(d))?;
            let le = h.left_mult_matrix(e);
            Ok((0..h.dim())
                .map(|i| {
                    let m = h.left_mult_matrix(&h.basis(i)).mul(&le).expect("square");
                    f.mul(m.trace().expect("square"), d_inv)
                })
                .collect())
        })
        .collect()
}

/// Solves `lambda <- u = sum_i x_i chi_i` and returns `c_i = 1 / x_i`.
pub fn schur_elements(h: &HopfAlgebra, characters: &[Vec<Fe>], data: &IntegralData) -> Result<Vec<Fe>> {
    let f = h.field();
    let form = data.lambda_hit_u(h);
    let cols: Vec<Vec<Fe>> = characters.to_vec();
    let m = Matrix::from_columns(f, h.dim(), &cols);
    let sol = m
        .solve(&form)?
        .ok_or_else(|| Error::InconsistentSchur("lambda <- u is not a combination of the characters".into()))?;
    if !sol.nullspace.is_empty() {
        return Err(Error::InconsistentSchur("characters are linearly dependent".into()));
    }
    sol.x
        .iter()
        .enumerate()
        .map(|(i, &x)| f.inv(x).map_err(|_| Error::InconsistentSchur(format!("coefficient of chi_{i} is zero"))))
        .collect()
}

impl WedderburnData {
    pub fn compute(h: &HopfAlgebra, data: &IntegralData, rng: &mut impl Rng) -> Result<WedderburnData> {
        let idempotents = central_primitive_idempotents(h, rng)?;
        let dims = idempotents
            .iter()
            .map(|e| block_dimension(h, e))
            .collect::<Result<Vec<_>>>()?;
        let total: usize = dims.iter().map(|d| d * d).sum();
        if total != h.dim() {
            return Err(Error::NotSemisimple(format!("block sizes square-sum to {total}, not {}", h.dim())));
        }
        let characters = irreducible_characters(h, &idempotents, &dims)?;
        let schur = schur_elements(h, &characters, data)?;
        let lambda_of_e = idempotents.iter().map(|e| h.pair(&data.dual_integral, e)).collect();
        Ok(WedderburnData {
            idempotents,
            dims,
            characters,
            schur,
            lambda_of_e,
            regular_character: h.regular_character(),
        })
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// `i*` with `S(e_i) = e_{i*}`, or `None` if `S(e_i)` is not among the idempotents.
    pub fn dual_indices(&self, h: &HopfAlgebra) -> Option<Vec<usize>> {
        self.idempotents
            .iter()
            .map(|e| {
                let s = h.antipode(e);
                self.idempotents.iter().position(|x| *x == s)
            })
            .collect()
    }
}

/// All identities relating the blocks to `Lambda`, `lambda` and `u`.
pub fn verify_block_identities(h: &HopfAlgebra, wd: &WedderburnData, id: &IntegralData) -> Report {
    let mut r = Report::new();
    let f = h.field();
    let n = h.dim();
    let k = wd.len();
    let fi = |d: usize| f.from_int(d as i64);

    r.record("idempotents_complete", {
        let sum = wd.idempotents.iter().fold(h.zero(), |acc, e| h.add(&acc, e));
        (sum != h.one()).then(|| "sum of e_i != 1".to_string())
    });
    r.record(
        "idempotents_orthogonal",
        (0..k * k).find_map(|t| {
            let (i, j) = (t / k, t % k);
            let prod = h.mul(&wd.idempotents[i], &wd.idempotents[j]);
            let expect = if i == j { wd.idempotents[i].clone() } else { h.zero() };
            (prod != expect).then(|| format!("e_{i} e_{j}"))
        }),
    );
    r.record(
        "idempotents_central",
        (0..k).find_map(|i| (!h.is_central(&wd.idempotents[i])).then(|| format!("e_{i}"))),
    );
    r.record("dims_square_sum", {
        let s: usize = wd.dims.iter().map(|d| d * d).sum();
        (s != n).then(|| format!("sum d_i^2 = {s} != {n}"))
    });
    r.record(
        "characteristic_exceeds_block_sizes",
        wd.dims
            .iter()
            .find(|&&d| d as u64 >= f.characteristic())
            .map(|d| format!("d = {d}")),
    );
    r.record(
        "characters_on_idempotents",
        (0..k * k).find_map(|t| {
            let (i, j) = (t / k, t % k);
            let v = h.pair(&wd.characters[i], &wd.idempotents[j]);
            let expect = if i == j { fi(wd.dims[i]) } else { f.zero() };
            (v != expect).then(|| format!("chi_{i}(e_{j})"))
        }),
    );
    let weighted: Vec<Fe> = (0..n)
        .map(|b| {
            (0..k).fold(f.zero(), |acc, i| f.add(acc, f.mul(fi(wd.dims[i]), wd.characters[i][b])))
        })
        .collect();
    r.record(
        "regular_character_decomposes",
        (weighted != wd.regular_character).then(|| "chi_H != sum d_i chi_i".to_string()),
    );

    r.record(
        "schur_elements_inverse_dims",
        (0..k).find_map(|i| {
            let expect = f.inv(fi(wd.dims[i])).expect("p > d_i");
            (wd.schur[i] != expect).then(|| format!("c_{i} = {} != 1/{}", f.format(wd.schur[i]), wd.dims[i]))
        }),
    );

    r.record("u_relation_with_schur", {
        // u = u * sum d_i c_i e_i with the unit implementing S^2 taken to be u
        let central = (0..k).fold(h.zero(), |acc, i| {
            let w = f.mul(fi(wd.dims[i]), wd.schur[i]);
            h.add(&acc, &h.scale(&wd.idempotents[i], w))
        });
        (h.mul(&id.u, &central) != id.u).then(|| "u != u sum d_i c_i e_i".to_string())
    });

    let d = h.comul(&id.integral);
    let s = h.antipode_matrix();
    r.record("u_from_regular_character", {
        let mut acc = h.zero();
        for (idx, c) in d.iter() {
            let x = f.mul(c, wd.regular_character[idx[0]]);
            acc = h.add(&acc, &h.scale(&s.column(idx[1]), x));
        }
        (acc != id.u).then(|| "u != chi_H(L1) S(L2)".to_string())
    });

    r.record(
        "lambda_of_idempotents",
        (0..k).find_map(|i| {
            let expect = f.mul(fi(wd.dims[i]), h.pair(&wd.characters[i], &id.u_inv));
            (wd.lambda_of_e[i] != expect).then(|| format!("lambda(e_{i}) != d_{i} chi_{i}(u^-1)"))
        }),
    );

    r.record("u_times_s_of_u", {
        let su = h.antipode(&id.u);
        let lhs = h.mul(&id.u, &su);
        let rhs = (0..k).fold(h.zero(), |acc, i| {
            let d2 = fi(wd.dims[i] * wd.dims[i]);
            let w = f.mul(id.eps_of_integral, f.mul(d2, f.inv(wd.lambda_of_e[i]).unwrap_or(f.zero())));
            h.add(&acc, &h.scale(&wd.idempotents[i], w))
        });
        if lhs != h.mul(&su, &id.u) {
            Some("u S(u) != S(u) u".to_string())
        } else {
            (lhs != rhs).then(|| "u S(u) != eps(L) sum d_i^2 / lambda(e_i) e_i".to_string())
        }
    });

    r.record("grouplike_two_forms", {
        let g2 = h.mul(&id.u, &h.antipode(&id.u_inv));
        (g2 != id.grouplike).then(|| "S(u^-1) u != u S(u^-1)".to_string())
    });

    r.record(
        "lambda_antipode_invariant_on_idempotents",
        (0..k).find_map(|i| {
            let v = h.pair(&id.dual_integral, &h.antipode(&wd.idempotents[i]));
            (v != wd.lambda_of_e[i]).then(|| format!("lambda(S(e_{i})) != lambda(e_{i})"))
        }),
    );

    match wd.dual_indices(h) {
        None => r.fail("dual_index_involution", "S(e_i) is not a central primitive idempotent"),
        Some(star) => {
            r.record(
                "dual_index_involution",
                (0..k).find_map(|i| (star[star[i]] != i).then(|| format!("i = {i}"))),
            );
            r.record(
                "dual_characters",
                (0..k).find_map(|i| {
                    let via_s: Vec<Fe> = (0..n).map(|b| h.pair(&wd.characters[i], &s.column(b))).collect();
                    (via_s != wd.characters[star[i]]).then(|| format!("chi_{i} o S != chi_{}", star[i]))
                }),
            );
        }
    }

    let dual_basis = id.dual_basis_tensor(h);
    r.record(
        "idempotent_expansions",
        (0..k).find_map(|i| {
            let di = fi(wd.dims[i]);
            let chi = &wd.characters[i];
            let mut first = h.zero();
            let mut second = h.zero();
            for (idx, c) in dual_basis.iter() {
                let x = f.mul(c, f.mul(di, chi[idx[0]]));
                first = h.add(&first, &h.scale(&h.basis(idx[1]), x));
                let y = f.mul(c, f.mul(di, chi[idx[1]]));
                second = h.add(&second, &h.scale(&h.basis(idx[0]), y));
            }
            if first != wd.idempotents[i] {
                Some(format!("e_{i} != d chi(L1) u^-1 S(L2)"))
            } else {
                (second != wd.idempotents[i]).then(|| format!("e_{i} != d chi(u^-1 S(L2)) L1"))
            }
        }),
    );

    r.record("frobenius_form_is_regular_character", {
        let left = id.lambda_hit_u(h);
        let right = id.u_hit_lambda(h);
        if left != wd.regular_character {
            Some("lambda <- u != chi_H".to_string())
        } else {
            (right != wd.regular_character).then(|| "u -> lambda != chi_H".to_string())
        }
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{drinfeld_double, dual_group_algebra, group_algebra, GroupTable};
    use crate::ff::Field;
    use crate::integrals::IntegralOptions;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn setup(h: &HopfAlgebra) -> (IntegralData, WedderburnData) {
        let id = IntegralData::compute(h, IntegralOptions::default()).unwrap();
        let wd = WedderburnData::compute(h, &id, &mut rng(1)).unwrap();
        (id, wd)
    }

    #[test]
    fn center_dimensions() {
        let f = Field::prime(7).unwrap();
        assert_eq!(center(&group_algebra(&GroupTable::cyclic(3), &f).unwrap()).len(), 3);
        assert_eq!(center(&group_algebra(&GroupTable::symmetric3(), &f).unwrap()).len(), 3);
    }

    #[test]
    fn c2_idempotents() {
        let f = Field::prime(5).unwrap();
        let h = group_algebra(&GroupTable::cyclic(2), &f).unwrap();
        let e = central_primitive_idempotents(&h, &mut rng(0)).unwrap();
        let v = |a, b| vec![f.from_int(a), f.from_int(b)];
        assert_eq!(e, vec![v(3, 3), v(3, 2)]);
    }

    #[test]
    fn c3_idempotents_and_characters() {
        let f = Field::prime(7).unwrap();
        let h = group_algebra(&GroupTable::cyclic(3), &f).unwrap();
        let (_, wd) = setup(&h);
        assert_eq!(wd.dims, vec![1, 1, 1]);
        let third = f.inv(f.from_int(3)).unwrap();
        assert_eq!(wd.idempotents[0], vec![third; 3]);
        let mut values: Vec<u64> = wd.characters.iter().map(|c| c[1].raw()).collect();
        values.sort_unstable();
        assert_eq!(values, vec![1, 2, 4]);
        for (e, chi) in wd.idempotents.iter().zip(&wd.characters) {
            // e = (1/3) sum omega^{-k} g^k for the character omega = chi(g)
            let omega_inv = f.inv(chi[1]).unwrap();
            let expect: Vec<Fe> = (0..3).map(|k| f.mul(third, f.pow(omega_inv, k))).collect();
            assert_eq!(*e, expect);
        }
        let lam_e = f.inv(f.from_int(3)).unwrap();
        assert!(wd.lambda_of_e.iter().all(|&x| x == lam_e));
    }

    #[test]
    fn s3_blocks() {
        let f = Field::prime(7).unwrap();
        let g = GroupTable::symmetric3();
        let h = group_algebra(&g, &f).unwrap();
        let (id, wd) = setup(&h);
        assert_eq!(wd.dims, vec![1, 1, 2]);
        let t = g.index_of("r^0 s^1").unwrap();
        assert_eq!(wd.characters[2][t], f.zero());
        assert_eq!(wd.schur[2], f.from_int(4));
        assert_eq!(wd.schur[0], f.one());
        assert!(verify_block_identities(&h, &wd, &id).all_passed());
    }

    #[test]
    fn dual_group_blocks_are_one_dimensional() {
        let f = Field::prime(5).unwrap();
        let h = dual_group_algebra(&GroupTable::dihedral(4), &f).unwrap();
        let (id, wd) = setup(&h);
        assert!(wd.dims.iter().all(|&d| d == 1));
        assert!(verify_block_identities(&h, &wd, &id).all_passed());
    }

    #[test]
    fn double_of_s3() {
        let f = Field::prime(7).unwrap();
        let h = drinfeld_double(&GroupTable::symmetric3(), &f).unwrap();
        let (id, wd) = setup(&h);
        assert_eq!(wd.dims.iter().map(|d| d * d).sum::<usize>(), 36);
        assert_eq!(wd.len(), 8);
        assert!(verify_block_identities(&h, &wd, &id).all_passed());
    }

    #[test]
    fn order_does_not_depend_on_seed() {
        let f = Field::prime(7).unwrap();
        let h = group_algebra(&GroupTable::symmetric3(), &f).unwrap();
        let a = central_primitive_idempotents(&h, &mut rng(3)).unwrap();
        let b = central_primitive_idempotents(&h, &mut rng(99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_field_reports_extension_degree() {
        let f = Field::prime(5).unwrap();
        let h = group_algebra(&GroupTable::cyclic(3), &f).unwrap();
        assert!(matches!(
            central_primitive_idempotents(&h, &mut rng(0)),
            Err(Error::FieldTooSmall { degree: 2 })
        ));
    }

    #[test]
    fn block_dimension_of_one() {
        let f = Field::prime(5).unwrap();
        let h = group_algebra(&GroupTable::cyclic(1), &f).unwrap();
        assert_eq!(block_dimension(&h, &h.one()).unwrap(), 1);
    }
}

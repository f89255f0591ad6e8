use std::collections::BTreeMap;

use crate::ff::{Fe, Field};

/// A sparse element of `H^{(x)m}`, keyed by multi-indices in lexicographic
/// order. Zero coefficients are never stored, so structural equality is
/// equality of tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    order: usize,
    terms: BTreeMap<Vec<usize>, Fe>,
}

impl Tensor {
    pub fn zero(dim: usize, order: usize) -> Tensor {
        Tensor {
            dim,
            order,
            terms: BTreeMap::new(),
        }
    }

    /// `b_{i1} (x) ... (x) b_{im}`
    pub fn basis(field: &Field, dim: usize, index: &[usize]) -> Tensor {
        let mut t = Tensor::zero(dim, index.len());
        t.add_term(field, index.to_vec(), field.one());
        t
    }

    /// Pure tensor `a1 (x) ... (x) am` of dense elements.
    pub fn pure(field: &Field, legs: &[&[Fe]]) -> Tensor {
        let dim = legs.first().map_or(0, |l| l.len());
        let mut partial: Vec<(Vec<usize>, Fe)> = vec![(Vec::new(), field.one())];
        for leg in legs {
            let mut next = Vec::new();
            for (idx, c) in &partial {
                for (i, &a) in leg.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut idx = idx.clone();
                    idx.push(i);
                    next.push((idx, field.mul(*c, a)));
                }
            }
            partial = next;
        }
        let mut t = Tensor::zero(dim, legs.len());
        for (idx, c) in partial {
            t.add_term(field, idx, c);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &[usize]) -> Fe {
        self.terms.get(index).copied().unwrap_or(Fe::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], Fe)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn add_term(&mut self, field: &Field, index: Vec<usize>, c: Fe) {
        debug_assert_eq!(index.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, field: &Field, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(field, k.to_vec(), v);
        }
        out
    }

    pub fn sub(&self, field: &Field, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(field, k.to_vec(), field.neg(v));
        }
        out
    }

    pub fn scale(&self, field: &Field, c: Fe) -> Tensor {
        let mut out = Tensor::zero(self.dim, self.order);
        for (k, v) in self.iter() {
            out.add_term(field, k.to_vec(), field.mul(v, c));
        }
        out
    }

    /// Reorders legs: leg `j` of the result is leg `perm[j]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.order);
        let terms = self
            .terms
            .iter()
            .map(|(k, &v)| (perm.iter().map(|&p| k[p]).collect(), v))
            .collect();
        Tensor {
            dim: self.dim,
            order: self.order,
            terms,
        }
    }

    /// Swaps the two legs of an order-2 tensor.
    pub fn flip(&self) -> Tensor {
        self.permute_legs(&[1, 0])
    }

    /// Dense coefficient vector of length `dim^order`, lexicographic indices.
    pub fn to_dense(&self) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.dim.pow(self.order as u32)];
        for (k, &v) in &self.terms {
            let flat = k.iter().fold(0usize, |acc, &i| acc * self.dim + i);
            out[flat] = v;
        }
        out
    }

    pub fn from_dense(field: &Field, dim: usize, order: usize, dense: &[Fe]) -> Tensor {
        assert_eq!(dense.len(), dim.pow(order as u32));
        let mut t = Tensor::zero(dim, order);
        for (flat, &v) in dense.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut idx = vec![0; order];
            let mut r = flat;
            for slot in idx.iter_mut().rev() {
                *slot = r % dim;
                r /= dim;
            }
            t.add_term(field, idx, v);
        }
        t
    }

    /// Human-readable first differing coordinate between two tensors.
    pub fn first_difference(&self, other: &Tensor, field: &Field) -> Option<String> {
        let diff = self.sub(field, other);
        diff.terms.keys().next().map(|k| {
            format!(
                "coefficient at {:?}: {} vs {}",
                k,
                field.format(self.coeff(k)),
                field.format(other.coeff(k))
            )
        })
    }
}

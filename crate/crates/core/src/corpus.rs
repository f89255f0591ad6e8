//! The bundled example algebras, each pinned to a field, and the bicharacter
//! twists shipped with them.

use crate::builders::{Construction, GroupTable};
use crate::error::Result;
use crate::ff::{Field, Modulus};
use crate::hopf::{HopfAlgebra, Tensor};
use crate::twist::dual_bicharacter_twist;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub group: &'static str,
    pub construction: Construction,
    pub p: u64,
    pub k: usize,
}

impl CorpusEntry {
    pub fn group_table(&self) -> GroupTable {
        GroupTable::by_name(self.group).expect("corpus group names are valid")
    }

    pub fn field(&self) -> Field {
        Field::new(self.p, self.k, Modulus::Auto).expect("corpus fields are valid")
    }

    pub fn build(&self) -> Result<HopfAlgebra> {
        self.construction.build(&self.group_table(), &self.field())
    }

    pub fn file_name(&self) -> String {
        format!("{}.hopf", self.name)
    }
}

const fn entry(name: &'static str, group: &'static str, construction: Construction, p: u64, k: usize) -> CorpusEntry {
    CorpusEntry {
        name,
        group,
        construction,
        p,
        k,
    }
}

use Construction::{DrinfeldDouble as Double, DualGroupAlgebra as Dual, GroupAlgebra as Group};

pub const ENTRIES: &[CorpusEntry] = &[
    entry("c2_gf5", "c2", Group, 5, 1),
    entry("c3_gf7", "c3", Group, 7, 1),
    entry("c4_gf5", "c4", Group, 5, 1),
    entry("k4_gf5", "k4", Group, 5, 1),
    entry("s3_gf7", "s3", Group, 7, 1),
    entry("d4_gf5", "d4", Group, 5, 1),
    entry("q8_gf25", "q8", Group, 5, 2),
    entry("c2dual_gf5", "c2", Dual, 5, 1),
    entry("c3dual_gf7", "c3", Dual, 7, 1),
    entry("c4dual_gf5", "c4", Dual, 5, 1),
    entry("k4dual_gf5", "k4", Dual, 5, 1),
    entry("s3dual_gf7", "s3", Dual, 7, 1),
    entry("d4dual_gf5", "d4", Dual, 5, 1),
    entry("q8dual_gf25", "q8", Dual, 5, 2),
    entry("c3xc3dual_gf7", "c3xc3", Dual, 7, 1),
    entry("d_c2_gf5", "c2", Double, 5, 1),
    entry("d_c3_gf7", "c3", Double, 7, 1),
    entry("d_s3_gf7", "s3", Double, 7, 1),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// A bicharacter twist of a dual group algebra from the corpus.
#[derive(Clone, Copy, Debug)]
pub struct CorpusTwist {
    pub name: &'static str,
    pub algebra: &'static str,
    /// Order of each cyclic factor of `A = C_m x C_m`.
    pub m: usize,
}

pub const TWISTS: &[CorpusTwist] = &[
    CorpusTwist {
        name: "k4_bichar",
        algebra: "k4dual_gf5",
        m: 2,
    },
    CorpusTwist {
        name: "c3xc3_bichar",
        algebra: "c3xc3dual_gf7",
        m: 3,
    },
];

impl CorpusTwist {
    pub fn entry(&self) -> &'static CorpusEntry {
        find(self.algebra).expect("twist refers to a corpus algebra")
    }

    /// `J = sum w^(a1 b2) delta_a (x) delta_b` with `w` a primitive `m`-th
    /// root of unity; elements `(a1, a2)` sit at index `m a1 + a2`.
    pub fn build(&self, h: &HopfAlgebra) -> Result<(Tensor, Tensor)> {
        let entry = self.entry();
        let f = h.field().clone();
        let w = f
            .root_of_unity(self.m as u64)
            .ok_or_else(|| crate::Error::Validation(format!("no {}-th root of unity in {f}", self.m)))?;
        let m = self.m;
        dual_bicharacter_twist(h, &entry.group_table(), |x, y| {
            f.pow(w, ((x / m) * (y % m)) as u64)
        })
    }

    pub fn file_name(&self) -> String {
        format!("{}.twist", self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_axioms;
    use crate::twist::Twist;

    #[test]
    fn names_are_unique_and_buildable() {
        for (i, e) in ENTRIES.iter().enumerate() {
            assert!(ENTRIES[..i].iter().all(|o| o.name != e.name));
            let h = e.build().unwrap();
            assert!(h.field().characteristic().pow(2) > h.dim() as u64, "{}", e.name);
        }
    }

    #[test]
    fn dual_klein_axioms() {
        let h = find("k4dual_gf5").unwrap().build().unwrap();
        assert_eq!(h.dim(), 4);
        assert!(verify_axioms(&h).all_passed());
    }

    #[test]
    fn corpus_twists_validate() {
        for t in TWISTS {
            let h = t.entry().build().unwrap();
            let (j, j_inv) = t.build(&h).unwrap();
            assert_ne!(j, h.unit_tensor(2));
            Twist::validate(&h, j, Some(j_inv)).unwrap();
        }
    }
}

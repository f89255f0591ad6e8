//! Integrals followed by the Wedderburn split, with an optional single
//! retry over a larger field, and the full identity suite on the result.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{Embedding, Field, Modulus};
use crate::hopf::{verify_axioms, HopfAlgebra};
use crate::indicators::verify_indicator_identities;
use crate::integrals::{cocommutativity_equivalence, verify_frobenius_identities, IntegralData, IntegralOptions};
use crate::report::Report;
use crate::wedderburn::{verify_block_identities, WedderburnData};

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    pub integrals: IntegralOptions,
    /// Retry once over the extension reported by `FieldTooSmall`.
    pub extend_field: bool,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    /// The algebra actually analysed; differs from the input after a field
    /// extension.
    pub algebra: HopfAlgebra,
    pub integrals: IntegralData,
    pub wedderburn: WedderburnData,
    pub extended_from: Option<Field>,
}

pub fn analyze(h: &HopfAlgebra, opts: PipelineOptions) -> Result<Analysis> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let integrals = IntegralData::compute(h, opts.integrals)?;
    match WedderburnData::compute(h, &integrals, &mut rng) {
        Ok(wedderburn) => Ok(Analysis {
            algebra: h.clone(),
            integrals,
            wedderburn,
            extended_from: None,
        }),
        Err(Error::FieldTooSmall { degree }) if opts.extend_field => {
            let f = h.field();
            let target = Field::new(f.characteristic(), f.degree() * degree, Modulus::Auto)?;
            let big = h.extend_scalars(&Embedding::new(f, &target)?);
            let integrals = IntegralData::compute(&big, opts.integrals)?;
            let wedderburn = WedderburnData::compute(&big, &integrals, &mut rng)?;
            Ok(Analysis {
                algebra: big,
                integrals,
                wedderburn,
                extended_from: Some(f.clone()),
            })
        }
        Err(e) => Err(e),
    }
}

impl Analysis {
    /// Every identity check: axioms, the Frobenius and `u` identities,
    /// block data and indicators over `range`.
    pub fn identity_suite(&self, range: (i64, i64)) -> Result<Report> {
        let h = &self.algebra;
        let mut r = Report::new();
        r.extend_prefixed("axioms.", verify_axioms(h));
        r.extend_prefixed("integrals.", verify_frobenius_identities(h, &self.integrals));
        match cocommutativity_equivalence(h, &self.integrals) {
            Ok(_) => r.pass("integrals.cocommutativity_equivalence"),
            Err(e) => r.fail("integrals.cocommutativity_equivalence", e.to_string()),
        }
        r.extend_prefixed(
            "wedderburn.",
            verify_block_identities(h, &self.wedderburn, &self.integrals),
        );
        r.extend_prefixed(
            "indicators.",
            verify_indicator_identities(h, &self.integrals, &self.wedderburn, range)?,
        );
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{group_algebra, GroupTable};

    #[test]
    fn small_field_needs_permission_to_extend() {
        let h = group_algebra(&GroupTable::cyclic(3), &Field::prime(5).unwrap()).unwrap();
        assert!(matches!(
            analyze(&h, PipelineOptions::default()),
            Err(Error::FieldTooSmall { degree: 2 })
        ));
        let opts = PipelineOptions {
            extend_field: true,
            ..Default::default()
        };
        let a = analyze(&h, opts).unwrap();
        assert_eq!(a.algebra.field().order(), 25);
        assert_eq!(a.wedderburn.dims, vec![1, 1, 1]);
        assert!(a.identity_suite((-2, 3)).unwrap().all_passed());
    }

    #[test]
    fn seed_does_not_change_results() {
        let h = group_algebra(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap();
        let a = analyze(&h, PipelineOptions::default()).unwrap();
        let b = analyze(&h, PipelineOptions { seed: 99, ..Default::default() }).unwrap();
        assert_eq!(a.wedderburn, b.wedderburn);
    }
}

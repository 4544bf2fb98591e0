use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hopf::is_semisimple;
use crate::linalg::Matrix;
use crate::modalg::actions::{composition_factors, submodule_quotient_actions};

use super::Representation;

#[derive(Clone, Debug)]
pub struct SimpleFactor {
    pub rep: Representation,
    pub multiplicity: usize,
}

/// Simple constituents with multiplicities. When the parent algebra is not
/// semisimple these are composition factors, not direct summands.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<SimpleFactor>,
    pub composition_factors_only: bool,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|s| s.rep.dim()).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.factors.iter().map(|s| s.multiplicity).collect()
    }

    pub fn simples(&self) -> Vec<&Representation> {
        self.factors.iter().map(|s| &s.rep).collect()
    }
}

/// Sub- and quotient representations for an invariant subspace with the
/// given column basis.
pub fn submodule_quotient(rep: &Representation, sub: &Matrix) -> Result<(Representation, Representation)> {
    let (s, q) = submodule_quotient_actions(rep.field(), rep.dim(), rep.action(), sub)?;
    let parent = rep.parent().clone();
    Ok((Representation::new_unchecked(parent.clone(), s)?, Representation::new_unchecked(parent, q)?))
}

/// Splits a representation into absolutely irreducible constituents by a
/// seeded MeatAxe. Over Q only rational eigenvalues are used, so some inputs
/// are reported as [`Error::Undecided`].
pub fn split_into_simples(v: &Representation, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parent = v.parent().clone();
    let factors = composition_factors(v.field(), v.dim(), v.action(), &mut rng)?
        .into_iter()
        .map(|(action, multiplicity)| {
            Ok(SimpleFactor { rep: Representation::new_unchecked(parent.clone(), action)?, multiplicity })
        })
        .collect::<Result<Vec<_>>>()?;
    let semisimple = is_semisimple(&parent).unwrap_or(false);
    Ok(Decomposition { factors, composition_factors_only: !semisimple })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;
    use crate::rep::hom_space;
    use crate::hopf::builtins::{cyclic, sweedler, symmetric3};

    #[test]
    fn regular_s3_over_gf7() {
        let h = Arc::new(symmetric3(&Field::prime(7).unwrap()).unwrap());
        let d = split_into_simples(&Representation::regular(h), 0).unwrap();
        assert_eq!(d.dims(), vec![1, 1, 2]);
        assert_eq!(d.multiplicities(), vec![1, 1, 2]);
        assert!(!d.composition_factors_only);
        for (i, a) in d.simples().iter().enumerate() {
            for b in &d.simples()[i + 1..] {
                assert!(hom_space(a, b).is_empty());
            }
        }
    }

    #[test]
    fn regular_z2_over_q() {
        let h = Arc::new(cyclic(&Field::Rationals, 2).unwrap());
        let d = split_into_simples(&Representation::regular(h), 3).unwrap();
        assert_eq!(d.dims(), vec![1, 1]);
    }

    #[test]
    fn sweedler_composition_factors() {
        let h = Arc::new(sweedler());
        let d = split_into_simples(&Representation::regular(h), 1).unwrap();
        assert!(d.composition_factors_only);
        assert_eq!(d.dims(), vec![1, 1]);
        assert_eq!(d.multiplicities(), vec![2, 2]);
    }
}

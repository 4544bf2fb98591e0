use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{distinguished_functional, HopfAlgebra};
use crate::modalg::{socle, AlgebraStructure, FDAlgebra, ModuleOverAlgebra};
use crate::report::Report;

/// Character of soc(P₀) for the projective cover P₀ of the trivial module
/// over the given algebra structure (H or H°).
fn socle_character(h: &HopfAlgebra, b: FDAlgebra, seed: u64) -> Result<(usize, Vec<Scalar>)> {
    let st = AlgebraStructure::compute(Arc::new(b), seed)?;
    let trivial = ModuleOverAlgebra::from_character(st.algebra.clone(), h.counit())?;
    let i = st
        .cover_of(&trivial)
        .ok_or_else(|| Error::InternalMismatch("the trivial module is not the top of a projective".into()))?;
    let p0 = &st.projectives[i].module;
    let soc = socle(p0, &st.radical);
    if soc.cols() != 1 {
        return Err(Error::SocleNotSimple(soc.cols()));
    }
    let s = p0.restrict(&soc)?;
    Ok((p0.dim(), s.action().iter().map(|m| m.get(0, 0).clone()).collect()))
}

/// soc(P₀) is the one-dimensional module with character α, where P₀ is the
/// projective cover of the trivial right H-module (a left H°-module).
pub fn comparison_check(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Report> {
    let f = h.field();
    let alpha = distinguished_functional(h)?;
    let (p0_dim, right) = socle_character(h, FDAlgebra::from_hopf(h).opposite(), seed)?;
    let (_, left) = socle_character(h, FDAlgebra::from_hopf(h), seed)?;
    let fmt = |v: &[Scalar]| v.iter().map(|s| f.format_scalar(s)).collect::<Vec<_>>();
    Ok(Report::from_bool("comparison", right == alpha)
        .with("p0_dim", p0_dim)
        .with("socle_dim", 1)
        .with("socle_character", fmt(&right))
        .with("alpha", fmt(&alpha))
        .with("left_module_socle_character", fmt(&left))
        .with("alpha_is_counit", alpha == h.counit()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{sweedler, symmetric3, taft};

    #[test]
    fn socle_character_is_alpha() {
        let r = comparison_check(&Arc::new(sweedler()), 0).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.witnesses["p0_dim"], 2);
        let f7 = Field::prime(7).unwrap();
        let t = Arc::new(taft(&f7, 3, &f7.from_i64(2)).unwrap());
        let r = comparison_check(&t, 0).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.witnesses["socle_character"][1], "2");
        let s3 = Arc::new(symmetric3(&f7).unwrap());
        let r = comparison_check(&s3, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses["p0_dim"], 1);
        assert_eq!(r.witnesses["alpha_is_counit"], true);
    }
}

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{
    distinguished_element, is_semisimple, is_unimodular, pivot_candidates, pivotal_extension, HopfAlgebra,
};
use crate::linalg::Matrix;
use crate::report::Report;

use super::traces::{categorical_trace, categorical_trace_left, squared_norm};
use super::{hom_space, intertwines, split_into_simples, NaturalMap, Representation};

fn simples(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Vec<Representation>> {
    Ok(split_into_simples(&Representation::regular(h.clone()), seed)?
        .factors
        .into_iter()
        .map(|s| s.rep)
        .collect())
}

fn require_semisimple(h: &HopfAlgebra) -> Result<()> {
    if !is_semisimple(h)? {
        return Err(Error::PreconditionFailed("the Hopf algebra is not semisimple".into()));
    }
    Ok(())
}

/// δ_L: L** → **L on every simple L, realized by the action of g^{±1} where
/// g is the distinguished grouplike; the sign is whichever intertwines.
pub fn delta_semisimple(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Vec<NaturalMap>> {
    Ok(deltas_with_simples(h, seed)?.into_iter().map(|(_, d)| d).collect())
}

fn deltas_with_simples(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Vec<(Representation, NaturalMap)>> {
    require_semisimple(h)?;
    if !is_unimodular(h)? {
        return Err(Error::InternalMismatch("a semisimple Hopf algebra must be unimodular".into()));
    }
    let g = distinguished_element(h)?;
    let g_inv = h.apply_antipode(&g);
    let mut out = Vec::new();
    for l in simples(h, seed)? {
        let (source, target) = (l.double_dual_right(), l.double_dual_left());
        let matrix = [l.act(&g), l.act(&g_inv)]
            .into_iter()
            .find(|m| intertwines(&source, &target, m))
            .ok_or_else(|| {
                Error::IntertwiningFailed(format!("neither g nor g⁻¹ intertwines on a {}-dim simple", l.dim()))
            })?;
        out.push((l, NaturalMap { source, target, matrix }));
    }
    // tensor compatibility on the first simple
    if let Some((l, first)) = out.first() {
        let ll = l.tensor(l)?;
        let m = first.matrix.kron(&first.matrix)?;
        if ![ll.act(&g), ll.act(&g_inv)].contains(&m) {
            return Err(Error::IntertwiningFailed("δ is not tensor compatible".into()));
        }
    }
    Ok(out)
}

fn nonzero_rescaling(h: &HopfAlgebra) -> Scalar {
    let f = h.field();
    [5, 3, 2].into_iter().map(|c| f.from_i64(c)).find(|c| !f.is_zero(c)).unwrap_or_else(|| f.one())
}

/// Tr(φ⁻¹)·Tr(φ∘δ_L⁻¹) = |L|² for an isomorphism φ: L** → L, on every simple,
/// and unchanged when φ is rescaled.
pub fn vitia_monstr_check(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Report> {
    let f = h.field();
    let lambda = nonzero_rescaling(h);
    let mut report = Report::pass("vitia_monstr");
    for (i, (l, delta)) in deltas_with_simples(h, seed)?.iter().enumerate() {
        let homs = hom_space(&l.double_dual_right(), l);
        if homs.len() != 1 {
            return Err(Error::NotSplitSimple(format!("Hom(L**, L) has dimension {}", homs.len())));
        }
        let delta_inv = delta.matrix.inverse().ok_or_else(|| Error::IntertwiningFailed("δ_L is singular".into()))?;
        let side = |phi: &Matrix| -> Result<Scalar> {
            let phi_inv = phi.inverse().ok_or_else(|| Error::NotSplitSimple("φ is singular".into()))?;
            Ok(f.mul(&categorical_trace(&phi_inv), &categorical_trace_left(&phi.mul(&delta_inv))))
        };
        let lhs = side(&homs[0])?;
        let rescaled = side(&homs[0].scale(&lambda))?;
        let norm = squared_norm(l)?;
        report.push(
            Report::from_bool(format!("simple_{i}"), lhs == norm && rescaled == lhs)
                .with("dim", l.dim())
                .with("lhs", f.format_scalar(&lhs))
                .with("squared_norm", f.format_scalar(&norm))
                .with("rescaled_lhs", f.format_scalar(&rescaled)),
        );
    }
    Ok(report)
}

/// Tr_V(a) = Tr_V(ga) on every simple V, for an invertible a implementing S².
pub fn trtr_check(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Report> {
    require_semisimple(h)?;
    let f = h.field();
    let cands = pivot_candidates(h);
    let a = cands.require_invertible()?.clone();
    let g = distinguished_element(h)?;
    let ga = h.mul_elems(&g, &a);
    let mut report = Report::pass("trtr").with("semisimple", true).with("dim", h.dim());
    for (i, v) in simples(h, seed)?.iter().enumerate() {
        let (ta, tga) = (v.act(&a).trace(), v.act(&ga).trace());
        report.push(
            Report::from_bool(format!("simple_{i}"), ta == tga)
                .with("dim", v.dim())
                .with("tr_a", f.format_scalar(&ta))
                .with("tr_ga", f.format_scalar(&tga)),
        );
    }
    Ok(report)
}

/// For a unimodular, non-semisimple H, exhibits a one-dimensional
/// representation and a grouplike basis element x with Tr(x) ≠ Tr(x⁻¹).
pub fn ler_counterexample_check(h: &Arc<HopfAlgebra>, seed: u64) -> Result<Report> {
    let f = h.field();
    let unimodular = is_unimodular(h)?;
    let semisimple = is_semisimple(h)?;
    let dec = split_into_simples(&Representation::regular(h.clone()), seed)?;
    let grouplikes: Vec<usize> = (0..h.dim()).filter(|&b| h.is_grouplike(&h.basis_elem(b))).collect();
    let mut exhibit = None;
    'search: for s in dec.factors.iter().filter(|s| s.rep.dim() == 1) {
        for &b in &grouplikes {
            let x = s.rep.act(&h.basis_elem(b)).trace();
            let y = s.rep.act(&h.apply_antipode(&h.basis_elem(b))).trace();
            if x != y {
                exhibit = Some((s.rep.clone(), b, x, y));
                break 'search;
            }
        }
    }
    let mut report = Report::from_bool("ler_counterexample", unimodular && !semisimple && exhibit.is_some())
        .with("dim", h.dim())
        .with("unimodular", unimodular)
        .with("semisimple", semisimple);
    if let Some((rep, b, x, y)) = exhibit {
        let character: Vec<String> = rep.action().iter().map(|m| f.format_scalar(m.get(0, 0))).collect();
        report.witness("element", h.basis_names()[b].clone());
        report.witness("trace", f.format_scalar(&x));
        report.witness("trace_of_inverse", f.format_scalar(&y));
        report.witness("character", character);
        report.witness("representation_dim", rep.dim());
    }
    Ok(report)
}

/// Builds the pivotal extension K = H ⊕ Ht and checks Tr_V(t) = Tr_V(t⁻¹)
/// on every simple V of K.
pub fn spherical_check(h: &Arc<HopfAlgebra>, a: &[Scalar], seed: u64) -> Result<Report> {
    let ext = pivotal_extension(h, a)?;
    let k = Arc::new(ext.algebra);
    let f = k.field();
    let n = h.dim();
    let mut t = vec![f.zero(); k.dim()];
    for (i, u) in h.unit().iter().enumerate() {
        t[n + i] = u.clone();
    }
    let t_inv = k.apply_antipode(&t);
    let dec = split_into_simples(&Representation::regular(k.clone()), seed)?;
    let mut report = Report::pass("spherical").with("extension_dim", k.dim());
    if let Some(mu) = &ext.scaling {
        report.witness("scaling", f.format_scalar(mu));
    }
    for (i, s) in dec.factors.iter().enumerate() {
        let (x, y) = (s.rep.act(&t).trace(), s.rep.act(&t_inv).trace());
        report.push(
            Report::from_bool(format!("simple_{i}"), x == y)
                .with("dim", s.rep.dim())
                .with("tr_t", f.format_scalar(&x))
                .with("tr_t_inverse", f.format_scalar(&y)),
        );
    }
    if !dec.composition_factors_only {
        let sum: usize = dec.factors.iter().map(|s| s.rep.dim() * s.rep.dim()).sum();
        report.push(Report::from_bool("wedderburn_count", sum == k.dim()).with("sum_of_squares", sum));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{cyclic, gr_uq_sl2, symmetric3};

    #[test]
    fn s3_over_gf7() {
        let f7 = Field::prime(7).unwrap();
        let h = Arc::new(symmetric3(&f7).unwrap());
        for d in delta_semisimple(&h, 0).unwrap() {
            assert!(d.matrix.is_identity());
        }
        assert!(vitia_monstr_check(&h, 0).unwrap().passed());
        assert!(trtr_check(&h, 0).unwrap().passed());
        let sph = spherical_check(&h, h.unit(), 0).unwrap();
        assert!(sph.passed(), "{}", sph.summary());
    }

    #[test]
    fn cyclic_over_gf11() {
        let f11 = Field::prime(11).unwrap();
        let h = Arc::new(cyclic(&f11, 5).unwrap());
        assert!(trtr_check(&h, 0).unwrap().passed());
        assert!(vitia_monstr_check(&h, 0).unwrap().passed());
        assert!(spherical_check(&h, h.unit(), 0).unwrap().passed());
    }

    #[test]
    fn quantum_group_counterexample() {
        let f7 = Field::prime(7).unwrap();
        let h = Arc::new(gr_uq_sl2(&f7, 3, &Scalar::Residue(2)).unwrap());
        let r = ler_counterexample_check(&h, 0).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(trtr_check(&h, 0).is_err());
    }
}

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{is_semisimple, HopfAlgebra};
use crate::linalg::Matrix;

use super::{hom_space, split_into_simples, Representation};

/// coev_V: 1 → V⊗V*, the vector Σ e_i⊗f^i.
fn coevaluation(field: &Field, d: usize) -> Vec<Scalar> {
    let mut c = vec![field.zero(); d * d];
    for i in 0..d {
        c[i * d + i] = field.one();
    }
    c
}

/// ev: X*⊗X → k or X**⊗X* → k under the canonical identifications; both
/// pair slot i of the first factor with slot i of the second.
fn evaluation(field: &Field, x: &[Scalar], d: usize) -> Scalar {
    let mut acc = field.zero();
    for i in 0..d {
        field.add_assign(&mut acc, &x[i * d + i]);
    }
    acc
}

/// (A⊗id)x for x in k^d⊗k^e, without forming the Kronecker product.
fn apply_first(a: &Matrix, x: &[Scalar], e: usize) -> Vec<Scalar> {
    let f = a.field();
    let d = a.cols();
    let mut out = vec![f.zero(); a.rows() * e];
    for r in 0..a.rows() {
        for c in 0..d {
            let m = a.get(r, c);
            if f.is_zero(m) {
                continue;
            }
            for j in 0..e {
                let v = &x[c * e + j];
                if !f.is_zero(v) {
                    f.mul_add_assign(&mut out[r * e + j], m, v);
                }
            }
        }
    }
    out
}

/// (id⊗B)x for x in k^d⊗k^e.
fn apply_second(b: &Matrix, x: &[Scalar], d: usize) -> Vec<Scalar> {
    let f = b.field();
    let e = b.cols();
    let mut out = vec![f.zero(); d * b.rows()];
    for i in 0..d {
        for r in 0..b.rows() {
            for c in 0..e {
                let m = b.get(r, c);
                let v = &x[i * e + c];
                if !f.is_zero(m) && !f.is_zero(v) {
                    f.mul_add_assign(&mut out[i * b.rows() + r], m, v);
                }
            }
        }
    }
    out
}

/// Right categorical trace of f: V → V**, as the composite
/// 1 → V⊗V* → V**⊗V* → 1 (coev_V, then f⊗id, then ev_{V*}).
pub fn categorical_trace(f: &Matrix) -> Scalar {
    let field = f.field();
    let d = f.cols();
    let c = coevaluation(field, d);
    let y = apply_first(f, &c, d);
    evaluation(field, &y, d)
}

/// Left categorical trace of f: **V → V, as the composite
/// 1 → *V⊗**V → *V⊗V → 1.
pub fn categorical_trace_left(f: &Matrix) -> Scalar {
    let field = f.field();
    let d = f.cols();
    // coev_{**V} = Σ f^i ⊗ e_i, slot i of *V paired with slot i of **V
    let c = coevaluation(field, d);
    let y = apply_second(f, &c, d);
    evaluation(field, &y, d)
}

/// |L|² = Tr(φ)·Tr((φ⁻¹)*) for a chosen isomorphism φ: L → L**.
pub fn squared_norm_with(phi: &Matrix) -> Result<Scalar> {
    let inv = phi.inverse().ok_or_else(|| Error::NotSplitSimple("chosen map L → L** is not invertible".into()))?;
    // (φ⁻¹)*: L* → L*** is the transpose of φ⁻¹ under the identifications
    let dual = inv.transpose();
    Ok(phi.field().mul(&categorical_trace(phi), &categorical_trace(&dual)))
}

/// Squared norm of a split simple representation.
pub fn squared_norm(l: &Representation) -> Result<Scalar> {
    let homs = hom_space(l, &l.double_dual_right());
    if homs.len() != 1 {
        return Err(Error::NotSplitSimple(format!(
            "Hom(L, L**) has dimension {}, expected 1",
            homs.len()
        )));
    }
    squared_norm_with(&homs[0])
}

/// dim(C) = Σ |L_i|² over the simple representations, with the list of
/// simples and their squared norms.
pub fn global_dimension(h: &Arc<HopfAlgebra>, seed: u64) -> Result<(Scalar, Vec<(Representation, Scalar)>)> {
    if !is_semisimple(h)? {
        return Err(Error::PreconditionFailed("global dimension needs a semisimple algebra".into()));
    }
    let dec = split_into_simples(&Representation::regular(h.clone()), seed)?;
    let f = h.field();
    let mut total = f.zero();
    let mut norms = Vec::new();
    for s in dec.factors {
        let n = squared_norm(&s.rep)?;
        f.add_assign(&mut total, &n);
        norms.push((s.rep, n));
    }
    Ok((total, norms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::{cyclic, symmetric3};

    #[test]
    fn trace_matches_matrix_trace() {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_i64(&f, &[&[1, 2, 3], &[4, 5, 6], &[0, 1, 1]]);
        assert_eq!(categorical_trace(&m), m.trace());
        assert_eq!(categorical_trace_left(&m), m.trace());
    }

    #[test]
    fn global_dimensions() {
        let q = Field::Rationals;
        let (d, _) = global_dimension(&Arc::new(cyclic(&q, 2).unwrap()), 0).unwrap();
        assert_eq!(d, q.from_i64(2));
        let f7 = Field::prime(7).unwrap();
        let (d, _) = global_dimension(&Arc::new(cyclic(&f7, 3).unwrap()), 0).unwrap();
        assert_eq!(d, f7.from_i64(3));
        let (d, norms) = global_dimension(&Arc::new(symmetric3(&f7).unwrap()), 0).unwrap();
        assert_eq!(d, f7.from_i64(6));
        let mut ns: Vec<i64> = norms.iter().map(|(_, n)| f7.to_i64(n).unwrap()).collect();
        ns.sort();
        assert_eq!(ns, vec![1, 1, 4]);
    }

    #[test]
    fn rescaling_phi_does_not_change_the_norm() {
        let f7 = Field::prime(7).unwrap();
        let h = Arc::new(symmetric3(&f7).unwrap());
        let dec = split_into_simples(&Representation::regular(h), 0).unwrap();
        let l = &dec.factors[2].rep;
        let phi = hom_space(l, &l.double_dual_right()).remove(0);
        let base = squared_norm_with(&phi).unwrap();
        assert_eq!(squared_norm_with(&phi.scale(&f7.from_i64(3))).unwrap(), base);
        assert_eq!(base, f7.from_i64(4));
    }
}

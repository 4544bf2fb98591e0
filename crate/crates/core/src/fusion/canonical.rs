use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::rep::{global_dimension, squared_norm};
use crate::report::Report;

use super::FusionData;

/// A = ⊕_i L_i ⊗ *L_i with component i at `offsets[i]`, coordinates
/// p·d_i + p' for e_p ⊗ f^{p'}. `mult` is the D × D² matrix of m: A⊗A → A.
#[derive(Clone, Debug)]
pub struct CanonicalAlgebra {
    pub dims: Vec<usize>,
    pub offsets: Vec<usize>,
    pub carrier_dim: usize,
    pub mult: Matrix,
    pub unit_embed: Vec<Scalar>,
    pub checks: Report,
}

impl CanonicalAlgebra {
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.mult.field();
        let d = self.carrier_dim;
        let mut xy = vec![f.zero(); d * d];
        for (a, u) in x.iter().enumerate().filter(|(_, u)| !f.is_zero(u)) {
            for (b, v) in y.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
                xy[a * d + b] = f.mul(u, v);
            }
        }
        self.mult.mul_vec(&xy)
    }
}

/// Assembles the multiplication from dual bases of the hom spaces: the
/// component (L_i⊗L_j) ⊠ *(L_i⊗L_j) → L_m ⊠ *L_m is Σ_s b_s ⊠ *a_s.
/// Unit, associativity and H⊗H-equivariance are verified.
pub fn build_canonical_algebra(fd: &FusionData) -> Result<CanonicalAlgebra> {
    let h = &fd.parent;
    let f = h.field();
    let r = fd.rank();
    let dims = fd.dims();
    let mut offsets = Vec::with_capacity(r);
    let mut total = 0;
    for d in &dims {
        offsets.push(total);
        total += d * d;
    }
    let dd = total;
    let mut mult = Matrix::zeros(f, dd, dd * dd);
    let mut equivariant = true;
    for i in 0..r {
        let di = dims[i];
        for j in 0..r {
            let dj = dims[j];
            let t = fd.simples[i].tensor(&fd.simples[j])?;
            let u = fd.simples[j].left_dual().tensor(&fd.simples[i].left_dual())?;
            for m in 0..r {
                let pair = &fd.homs[i][j][m];
                if pair.incoming.is_empty() {
                    continue;
                }
                let dm = dims[m];
                let outs = pair.dual_outgoing()?;
                // component map on (L_i⊗L_j) ⊠ (*L_j⊗*L_i), regrouped coordinates
                let mut comp = Matrix::zeros(f, dm * dm, di * dj * di * dj);
                for (a, b) in pair.incoming.iter().zip(&outs) {
                    // *a: *L_j⊗*L_i → *L_m, with (q', p') ↔ functional index p'·d_j + q'
                    let mut a_dual = Matrix::zeros(f, dm, di * dj);
                    for q2 in 0..dj {
                        for p2 in 0..di {
                            for r2 in 0..dm {
                                a_dual.set(r2, q2 * di + p2, a.get(p2 * dj + q2, r2).clone());
                            }
                        }
                    }
                    comp.add_scaled(&f.one(), &b.kron(&a_dual)?);
                }
                let lm = &fd.simples[m];
                let lm_dual = lm.left_dual();
                let (id_t, id_u) = (Matrix::identity(f, di * dj), Matrix::identity(f, di * dj));
                let (id_m, id_md) = (Matrix::identity(f, dm), Matrix::identity(f, dm));
                for k in 0..h.dim() {
                    let left = comp.mul(&t.action()[k].kron(&id_u)?) == lm.action()[k].kron(&id_md)?.mul(&comp);
                    let right = comp.mul(&id_t.kron(&u.action()[k])?) == id_m.kron(&lm_dual.action()[k])?.mul(&comp);
                    equivariant &= left && right;
                }
                // scatter into carrier coordinates
                for p in 0..di {
                    for p2 in 0..di {
                        for q in 0..dj {
                            for q2 in 0..dj {
                                let col = (offsets[i] + p * di + p2) * dd + offsets[j] + q * dj + q2;
                                let src = (p * dj + q) * (di * dj) + q2 * di + p2;
                                for row in 0..dm * dm {
                                    let c = comp.get(row, src);
                                    if !f.is_zero(c) {
                                        let v = f.add(mult.get(offsets[m] + row, col), c);
                                        mult.set(offsets[m] + row, col, v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit_embed = vec![f.zero(); dd];
    unit_embed[offsets[0]] = f.one();
    let mut alg = CanonicalAlgebra { dims, offsets, carrier_dim: dd, mult, unit_embed, checks: Report::pass("canonical_algebra") };

    let basis: Vec<Vec<Scalar>> = (0..dd).map(|x| {
        let mut e = vec![f.zero(); dd];
        e[x] = f.one();
        e
    }).collect();
    let unit_ok = basis.iter().all(|e| alg.multiply(&alg.unit_embed, e) == *e && alg.multiply(e, &alg.unit_embed) == *e);
    let id = Matrix::identity(f, dd);
    let lhs = alg.mult.mul(&alg.mult.kron(&id)?);
    let rhs = alg.mult.mul(&id.kron(&alg.mult)?);
    let assoc_ok = lhs == rhs;
    alg.checks = Report::aggregate(
        "canonical_algebra",
        vec![
            Report::from_bool("unit", unit_ok),
            Report::from_bool("associativity", assoc_ok),
            Report::from_bool("equivariance", equivariant),
        ],
    )
    .with("carrier_dim", dd);
    if !assoc_ok {
        return Err(Error::AssociativityFailed("m∘(m⊗id) ≠ m∘(id⊗m) on the carrier".into()));
    }
    if !unit_ok || !equivariant {
        return Err(Error::InternalMismatch(format!("canonical algebra self-test failed: {}", alg.checks.summary())));
    }
    Ok(alg)
}

#[derive(Clone, Debug)]
pub struct DoubleDualTrace {
    pub total: Scalar,
    pub contributions: Vec<Scalar>,
    pub squared_norms: Vec<Scalar>,
    pub global_dimension: Scalar,
    pub report: Report,
}

/// Trace of the canonical isomorphism A ≅ A**, realized as the composite
/// A → A* → A** of the two isomorphisms induced by the invariant form
/// λ(xy), λ the projection onto the unit component: the matrix (Jᵀ)⁻¹J with
/// J[x][y] = λ(x·y). The total is asserted to equal dim(C).
pub fn canonical_double_dual_trace(fd: &FusionData, a: &CanonicalAlgebra, seed: u64) -> Result<DoubleDualTrace> {
    let f = fd.parent.field();
    let dd = a.carrier_dim;
    let row = a.offsets[0];
    let mut j = Matrix::zeros(f, dd, dd);
    for x in 0..dd {
        for y in 0..dd {
            j.set(x, y, a.mult.get(row, x * dd + y).clone());
        }
    }
    let jt_inv = j.transpose().inverse().ok_or_else(|| Error::InternalMismatch("invariant form is degenerate".into()))?;
    let nu = jt_inv.mul(&j);
    let mut contributions = Vec::new();
    for (i, &d) in a.dims.iter().enumerate() {
        let o = a.offsets[i];
        let block = nu.submatrix(o, o, d * d, d * d);
        let mut rest = nu.submatrix(0, o, dd, d * d);
        for r in 0..d * d {
            for c in 0..d * d {
                rest.set(o + r, c, f.zero());
            }
        }
        if !rest.is_zero() {
            return Err(Error::InternalMismatch("A → A** does not preserve the components".into()));
        }
        contributions.push(block.trace());
    }
    let total = nu.trace();
    let squared_norms = fd.simples.iter().map(squared_norm).collect::<Result<Vec<_>>>()?;
    let (dim_c, _) = global_dimension(&fd.parent, seed)?;
    let fmt = |v: &[Scalar]| v.iter().map(|s| f.format_scalar(s)).collect::<Vec<_>>();
    let report = Report::from_bool("canonical_double_dual_trace", total == dim_c)
        .with("trace", f.format_scalar(&total))
        .with("global_dimension", f.format_scalar(&dim_c))
        .with("contributions", fmt(&contributions))
        .with("squared_norms", fmt(&squared_norms));
    if total != dim_c {
        return Err(Error::InternalMismatch(format!(
            "trace of A ≅ A** is {} but dim(C) = {}",
            f.format_scalar(&total),
            f.format_scalar(&dim_c)
        )));
    }
    Ok(DoubleDualTrace { total, contributions, squared_norms, global_dimension: dim_c, report })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;
    use crate::fusion::build_fusion_data;
    use crate::hopf::builtins::{cyclic, symmetric3};

    #[test]
    fn z2_canonical_algebra() {
        let q = Field::Rationals;
        let h = Arc::new(cyclic(&q, 2).unwrap());
        let fd = build_fusion_data(&h, 0).unwrap();
        let a = build_canonical_algebra(&fd).unwrap();
        assert_eq!(a.carrier_dim, 2);
        assert!(a.checks.passed());
        // (1 ± s)/2 are orthogonal idempotents, so A ≅ k × k
        let half = q.parse_scalar("1/2").unwrap();
        let e = vec![half.clone(), half.clone()];
        let e2 = vec![half.clone(), q.neg(&half)];
        assert_eq!(a.multiply(&e, &e), e);
        assert_eq!(a.multiply(&e2, &e2), e2);
        assert_eq!(a.multiply(&e, &e2), vec![q.zero(), q.zero()]);
        let t = canonical_double_dual_trace(&fd, &a, 0).unwrap();
        assert_eq!(t.total, q.from_i64(2));
    }

    #[test]
    fn s3_and_z3_traces() {
        let f7 = Field::prime(7).unwrap();
        let h = Arc::new(symmetric3(&f7).unwrap());
        let mut totals = vec![];
        for seed in [0, 11] {
            let fd = build_fusion_data(&h, seed).unwrap();
            let a = build_canonical_algebra(&fd).unwrap();
            assert_eq!(a.carrier_dim, 6);
            totals.push(canonical_double_dual_trace(&fd, &a, seed).unwrap().total);
        }
        assert_eq!(totals, vec![f7.from_i64(6), f7.from_i64(6)]);
        let z3 = Arc::new(cyclic(&f7, 3).unwrap());
        let fd = build_fusion_data(&z3, 0).unwrap();
        let a = build_canonical_algebra(&fd).unwrap();
        assert_eq!(canonical_double_dual_trace(&fd, &a, 0).unwrap().total, f7.from_i64(3));
    }
}

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{drinfeld_element, is_semisimple, is_unimodular, HopfAlgebra, RMatrix};
use crate::linalg::Matrix;
use crate::report::Report;

use super::{intertwines, split_into_simples, NaturalMap, Representation};

/// Largest dimension for which u_V is also assembled from explicit
/// coevaluation, braiding and evaluation matrices (the braiding on V⊗V* is a
/// dim⁴-entry matrix).
pub const CATEGORICAL_DIM_LIMIT: usize = 24;

/// u_V: V → V** as the composite
/// V → V⊗V*⊗V** → V*⊗V⊗V** → V** (id⊗coev_{V*}, then σ_{V,V*}⊗id, then ev_V⊗id),
/// with σ = flip∘R acting through ρ and ρ*.
pub fn drinfeld_iso_categorical(v: &Representation, r: &RMatrix) -> Matrix {
    let h = v.parent();
    let f = v.field();
    let d = v.dim();
    let n = h.dim();
    let dual = v.right_dual();
    // σ_{V,V*} as an explicit d²×d² matrix
    let mut r_action = Matrix::zeros(f, d * d, d * d);
    for i in 0..n {
        for j in 0..n {
            let c = r.tensor.get(i, j);
            if !f.is_zero(c) {
                let k = v.action()[i].kron(&dual.action()[j]).expect("same field");
                r_action.add_scaled(c, &k);
            }
        }
    }
    let mut flip = Matrix::zeros(f, d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            flip.set(b * d + a, a * d + b, f.one());
        }
    }
    let sigma = flip.mul(&r_action);
    // coev_{V*} = Σ f^i ⊗ e_i and ev_V(f^a ⊗ e_b) = δ_ab
    let mut coev = vec![f.zero(); d * d];
    let mut ev = Matrix::zeros(f, 1, d * d);
    for i in 0..d {
        coev[i * d + i] = f.one();
        ev.set(0, i * d + i, f.one());
    }
    let mut u = Matrix::zeros(f, d, d);
    for k in 0..d {
        // v ⊗ coev in V⊗V*⊗V**, grouped as (V⊗V*)⊗V**
        let mut x = Matrix::zeros(f, d * d, d);
        for i in 0..d {
            for m in 0..d {
                if !f.is_zero(&coev[i * d + m]) {
                    x.set(k * d + i, m, coev[i * d + m].clone());
                }
            }
        }
        let y = ev.mul(&sigma.mul(&x));
        for m in 0..d {
            u.set(m, k, y.get(0, m).clone());
        }
    }
    u
}

/// The Drinfeld isomorphism u_V: V → V**, computed from the Drinfeld element
/// and, for small V, also categorically; the two must agree.
pub fn drinfeld_iso(v: &Representation, r: &RMatrix) -> Result<NaturalMap> {
    let u = drinfeld_element(v.parent(), r)?;
    let m = v.act(&u);
    if v.dim() <= CATEGORICAL_DIM_LIMIT {
        let c = drinfeld_iso_categorical(v, r);
        if c != m {
            return Err(Error::InternalMismatch("categorical and element forms of u_V differ".into()));
        }
    }
    let map = NaturalMap { source: v.clone(), target: v.double_dual_right(), matrix: m };
    if !map.intertwines() {
        return Err(Error::InternalMismatch("u_V does not intertwine V with V**".into()));
    }
    Ok(map)
}

/// D_V = u_{**V}⁻¹ ∘ (u_{*V})*: V** → **V.
pub fn delta_matrix(v: &Representation, r: &RMatrix) -> Result<Matrix> {
    let h = v.parent();
    let u_left = drinfeld_iso(&v.left_dual(), r)?.matrix;
    let ddl = v.double_dual_left();
    let u = drinfeld_element(h, r)?;
    let u_inv = h.inverse_elem(&u).ok_or(Error::DrinfeldElementNotInvertible)?;
    // u_{**V} acts as ρ_{**V}(u); its inverse is ρ_{**V}(u⁻¹)
    let inv = ddl.act(&u_inv);
    debug_assert!(inv.mul(&ddl.act(&u)).is_identity());
    Ok(inv.mul(&u_left.transpose()))
}

/// Checks that D_V intertwines V** with **V, is compatible with tensor
/// products, and is the identity on the trivial representation.
pub fn delta_check_braided(h: &Arc<HopfAlgebra>, r: &RMatrix, seed: u64) -> Result<Report> {
    if !is_unimodular(h)? {
        return Err(Error::PreconditionFailed("delta check needs a unimodular Hopf algebra".into()));
    }
    let semisimple = is_semisimple(h)?;
    let reps: Vec<(String, Representation)> = if semisimple {
        split_into_simples(&Representation::regular(h.clone()), seed)?
            .factors
            .into_iter()
            .enumerate()
            .map(|(i, s)| (format!("simple_{i}"), s.rep))
            .collect()
    } else {
        let reg = Representation::regular(h.clone());
        vec![
            ("right_dual_regular".to_string(), reg.right_dual()),
            ("left_dual_regular".to_string(), reg.left_dual()),
            ("regular".to_string(), reg),
        ]
    };
    let mut deltas = Vec::new();
    let mut inter = Report::pass("delta_intertwines");
    for (name, v) in &reps {
        let dv = delta_matrix(v, r)?;
        let ok = intertwines(&v.double_dual_right(), &v.double_dual_left(), &dv);
        inter.push(Report::from_bool(name.as_str(), ok).with("dim", v.dim()));
        deltas.push(dv);
    }

    let mut tensor = Report::pass("delta_tensor_compatible");
    let pairs: Vec<(usize, usize)> = if semisimple {
        (0..reps.len()).flat_map(|i| (0..reps.len()).map(move |j| (i, j))).collect()
    } else {
        let reg = reps.len() - 1;
        vec![(reg, reg)]
    };
    for (i, j) in pairs {
        let vw = reps[i].1.tensor(&reps[j].1)?;
        let dvw = delta_matrix(&vw, r)?;
        let ok = dvw == deltas[i].kron(&deltas[j])?;
        tensor.push(Report::from_bool(format!("{}⊗{}", reps[i].0, reps[j].0), ok).with("dim", vw.dim()));
    }

    let triv = delta_matrix(&Representation::trivial(h.clone()), r)?;
    let unit = Report::from_bool("delta_trivial_is_identity", triv.is_identity());

    Ok(Report::aggregate("delta_braided", vec![inter, tensor, unit]).with("semisimple", semisimple))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{cyclic, sweedler};
    use crate::hopf::drinfeld_double;

    #[test]
    fn trivial_braiding_gives_identity() {
        let h = Arc::new(cyclic(&Field::Rationals, 2).unwrap());
        let r = RMatrix::trivial(&h);
        let reg = Representation::regular(h.clone());
        assert!(drinfeld_iso(&reg, &r).unwrap().matrix.is_identity());
        let rep = delta_check_braided(&h, &r, 0).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }

    #[test]
    fn naturality_on_the_double_of_sweedler() {
        let (d, r) = drinfeld_double(&sweedler()).unwrap();
        let d = Arc::new(d);
        let reg = Representation::regular(d.clone());
        let u = drinfeld_iso(&reg, &r).unwrap();
        assert!(u.intertwines());
        // naturality for right multiplication by a basis element, an endomorphism of the regular rep
        let fmap = d.right_mult_matrix(&d.basis_elem(5));
        assert_eq!(u.matrix.mul(&fmap), fmap.mul(&u.matrix));
    }
}

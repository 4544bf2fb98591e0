//! Fusion data of a semisimple Rep(H) and the canonical algebra
//! A = ⊕ L_i ⊠ *L_i built from it.

mod canonical;

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hopf::{is_semisimple, HopfAlgebra};
use crate::linalg::Matrix;
use crate::rep::{global_dimension, hom_space, split_into_simples, squared_norm, Representation};
use crate::report::Report;

pub use canonical::{build_canonical_algebra, canonical_double_dual_trace, CanonicalAlgebra, DoubleDualTrace};

/// Chosen bases of Hom(L_m, L_i⊗L_j) and Hom(L_i⊗L_j, L_m) with the
/// pairing matrix P[s][t] = (out_s ∘ in_t) ∈ Hom(L_m, L_m) = k.
#[derive(Clone, Debug)]
pub struct HomPair {
    pub incoming: Vec<Matrix>,
    pub outgoing: Vec<Matrix>,
    pub pairing: Matrix,
}

impl HomPair {
    /// The basis of Hom(L_i⊗L_j, L_m) dual to `incoming` under the pairing.
    pub fn dual_outgoing(&self) -> Result<Vec<Matrix>> {
        let f = self.pairing.field();
        let inv = self.pairing.inverse().ok_or_else(|| Error::InternalMismatch("degenerate pairing".into()))?;
        Ok((0..self.outgoing.len())
            .map(|s| {
                let mut b = Matrix::zeros(f, self.outgoing[0].rows(), self.outgoing[0].cols());
                for (u, out) in self.outgoing.iter().enumerate() {
                    b.add_scaled(inv.get(s, u), out);
                }
                b
            })
            .collect())
    }
}

#[derive(Clone, Debug)]
pub struct FusionData {
    pub parent: Arc<HopfAlgebra>,
    /// simples[0] is the trivial representation.
    pub simples: Vec<Representation>,
    /// *L_i ≅ L_{duality[i]}.
    pub duality: Vec<usize>,
    /// N[i][j][m] = dim Hom(L_i⊗L_j, L_m).
    pub fusion: Vec<Vec<Vec<usize>>>,
    /// homs[i][j][m]
    pub homs: Vec<Vec<Vec<HomPair>>>,
    pub checks: Report,
}

fn random_invertible(f: &crate::field::Field, k: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let data = (0..k * k).map(|_| f.sample(rng)).collect();
        let m = Matrix::new(f, k, k, data).expect("square");
        if m.rank() == k {
            return m;
        }
    }
}

fn recombine(basis: Vec<Matrix>, c: &Matrix) -> Vec<Matrix> {
    (0..basis.len())
        .map(|s| {
            let mut m = Matrix::zeros(c.field(), basis[0].rows(), basis[0].cols());
            for (u, b) in basis.iter().enumerate() {
                m.add_scaled(c.get(u, s), b);
            }
            m
        })
        .collect()
}

/// Splits Rep(H) into simples and records duality, fusion multiplicities and
/// paired hom-space bases. The seed drives both the MeatAxe and a random
/// change of every hom basis, so different seeds exercise different choices.
pub fn build_fusion_data(h: &Arc<HopfAlgebra>, seed: u64) -> Result<FusionData> {
    if !is_semisimple(h)? {
        return Err(Error::PreconditionFailed("fusion data needs a semisimple Hopf algebra".into()));
    }
    let f = h.field().clone();
    let mut simples: Vec<Representation> =
        split_into_simples(&Representation::regular(h.clone()), seed)?.factors.into_iter().map(|s| s.rep).collect();
    let trivial = Representation::trivial(h.clone());
    let t = simples
        .iter()
        .position(|l| l.dim() == 1 && !hom_space(&trivial, l).is_empty())
        .ok_or_else(|| Error::InternalMismatch("trivial representation not among the simples".into()))?;
    simples.swap(0, t);
    let r = simples.len();
    let iso = |a: &Representation, b: &Representation| a.dim() == b.dim() && !hom_space(a, b).is_empty();

    let duality = simples
        .iter()
        .map(|l| {
            let dual = l.left_dual();
            simples
                .iter()
                .position(|m| iso(&dual, m))
                .ok_or_else(|| Error::InternalMismatch("dual of a simple is not simple".into()))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fusion = vec![vec![vec![0; r]; r]; r];
    let mut homs = Vec::with_capacity(r);
    let mut pairings_ok = true;
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let t = simples[i].tensor(&simples[j])?;
            let mut col = Vec::with_capacity(r);
            for m in 0..r {
                let outgoing = hom_space(&t, &simples[m]);
                let incoming = hom_space(&simples[m], &t);
                if outgoing.len() != incoming.len() {
                    return Err(Error::InternalMismatch("hom spaces in the two directions differ in dimension".into()));
                }
                let k = outgoing.len();
                fusion[i][j][m] = k;
                let (incoming, outgoing) = if k > 0 {
                    let ci = random_invertible(&f, k, &mut rng);
                    let co = random_invertible(&f, k, &mut rng);
                    (recombine(incoming, &ci), recombine(outgoing, &co))
                } else {
                    (incoming, outgoing)
                };
                let mut pairing = Matrix::zeros(&f, k, k);
                for s in 0..k {
                    for u in 0..k {
                        let comp = outgoing[s].mul(&incoming[u]);
                        let c = comp.get(0, 0).clone();
                        if comp != Matrix::scalar(&f, simples[m].dim(), &c) {
                            return Err(Error::NotSplitSimple("composite is not a scalar".into()));
                        }
                        pairing.set(s, u, c);
                    }
                }
                pairings_ok &= pairing.rank() == k;
                col.push(HomPair { incoming, outgoing, pairing });
            }
            row.push(col);
        }
        homs.push(row);
    }

    let mut checks = Report::pass("fusion_data").with("rank", r);
    checks.push(Report::from_bool("pairings_nondegenerate", pairings_ok));
    let unit_row = (0..r).all(|j| (0..r).all(|m| fusion[0][j][m] == usize::from(j == m)));
    checks.push(Report::from_bool("unit_row", unit_row));
    let mut frobenius = true;
    for i in 0..r {
        let di = simples[i].left_dual();
        for m in 0..r {
            let t = di.tensor(&simples[m])?;
            for j in 0..r {
                frobenius &= hom_space(&simples[j], &t).len() == fusion[i][j][m];
            }
        }
    }
    checks.push(Report::from_bool("frobenius_symmetry", frobenius));
    let mut assoc = true;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let a: usize = (0..r).map(|m| fusion[i][j][m] * fusion[m][k][l]).sum();
                    let b: usize = (0..r).map(|m| fusion[j][k][m] * fusion[i][m][l]).sum();
                    assoc &= a == b;
                }
            }
        }
    }
    checks.push(Report::from_bool("fusion_ring_associative", assoc));
    let dims_ok = (0..r).all(|i| {
        (0..r).all(|j| {
            (0..r).map(|m| fusion[i][j][m] * simples[m].dim()).sum::<usize>() == simples[i].dim() * simples[j].dim()
        })
    });
    checks.push(Report::from_bool("dimensions_add_up", dims_ok));
    if !checks.passed() {
        return Err(Error::InternalMismatch(format!("fusion data invariants fail: {}", checks.summary())));
    }
    Ok(FusionData { parent: h.clone(), simples, duality, fusion, homs, checks })
}

impl FusionData {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.dim()).collect()
    }

    /// Simple dimensions, duality, N-tensor, squared norms and dim(C).
    pub fn report(&self, seed: u64) -> Result<Report> {
        let f = self.parent.field();
        let norms = self.simples.iter().map(squared_norm).collect::<Result<Vec<_>>>()?;
        let (dim_c, _) = global_dimension(&self.parent, seed)?;
        Ok(Report::pass("fusion")
            .with("simple_dims", self.dims())
            .with("duality", self.duality.clone())
            .with("fusion", serde_json::to_value(&self.fusion).expect("plain integers"))
            .with("squared_norms", norms.iter().map(|n| f.format_scalar(n)).collect::<Vec<_>>())
            .with("global_dimension", f.format_scalar(&dim_c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{cyclic, symmetric3};

    #[test]
    fn z2_fusion_is_the_group_law() {
        let h = Arc::new(cyclic(&Field::Rationals, 2).unwrap());
        let fd = build_fusion_data(&h, 0).unwrap();
        assert_eq!(fd.duality, vec![0, 1]);
        assert_eq!(fd.fusion[1][1], vec![1, 0]);
        assert_eq!(fd.fusion[0][1], vec![0, 1]);
    }

    #[test]
    fn s3_fusion_matches_the_character_ring() {
        let f7 = Field::prime(7).unwrap();
        let h = Arc::new(symmetric3(&f7).unwrap());
        let fd = build_fusion_data(&h, 0).unwrap();
        assert_eq!(fd.dims(), vec![1, 1, 2]);
        assert_eq!(fd.fusion[2][2], vec![1, 1, 1]);
        assert_eq!(fd.fusion[1][2], vec![0, 0, 1]);
        assert!(fd.checks.passed());
        let r = fd.report(0).unwrap();
        assert_eq!(r.witnesses["global_dimension"], "6");
    }
}

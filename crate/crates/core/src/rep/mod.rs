//! Representations of Hopf algebras: constructions, intertwiners, splitting
//! into simples, and the trace identities built on top of them.

mod braided;
mod comparison;
mod meataxe;
mod semisimple;
mod traces;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::modalg::actions::{act_on, block_diagonal, hom_space_actions, restrict_actions};

pub use comparison::comparison_check;
pub use braided::{delta_check_braided, delta_matrix, drinfeld_iso, drinfeld_iso_categorical};
pub use crate::modalg::actions::MEATAXE_ATTEMPTS;
pub use meataxe::{split_into_simples, submodule_quotient, Decomposition, SimpleFactor};
pub use semisimple::{
    delta_semisimple, ler_counterexample_check, spherical_check, trtr_check, vitia_monstr_check,
};
pub use traces::{categorical_trace, categorical_trace_left, global_dimension, squared_norm, squared_norm_with};

/// A representation ρ: H → End(k^d), stored as the images of the basis.
#[derive(Clone, Debug)]
pub struct Representation {
    parent: Arc<HopfAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.action == other.action && *self.parent == *other.parent
    }
}

/// A linear map between representations, expected to intertwine them.
#[derive(Clone, Debug)]
pub struct NaturalMap {
    pub source: Representation,
    pub target: Representation,
    pub matrix: Matrix,
}

impl NaturalMap {
    pub fn intertwines(&self) -> bool {
        intertwines(&self.source, &self.target, &self.matrix)
    }
}

pub fn intertwines(v: &Representation, w: &Representation, t: &Matrix) -> bool {
    (0..v.parent.dim()).all(|i| t.mul(&v.action[i]) == w.action[i].mul(t))
}

impl Representation {
    /// Builds and checks that the action is an algebra homomorphism.
    pub fn new(parent: Arc<HopfAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        let r = Self::new_unchecked(parent, action)?;
        if let Some(bad) = r.homomorphism_failure() {
            return Err(Error::InvalidInput(format!("action is not multiplicative: {bad}")));
        }
        Ok(r)
    }

    pub fn new_unchecked(parent: Arc<HopfAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != parent.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                parent.dim()
            )));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != parent.field()) {
            return Err(Error::ShapeMismatch("action matrices must be square of equal size over the parent's field".into()));
        }
        Ok(Representation { parent, dim, action })
    }

    /// Where the representation invariant fails, if anywhere.
    pub fn homomorphism_failure(&self) -> Option<String> {
        let h = &*self.parent;
        if self.act(h.unit()) != Matrix::identity(h.field(), self.dim) {
            return Some("unit does not act as the identity".into());
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(h.field(), self.dim, self.dim);
                for (k, c) in h.mul_tensor().slice(i, j) {
                    rhs.add_scaled(c, &self.action[*k]);
                }
                if lhs != rhs {
                    return Some(format!("ρ(e_{i})ρ(e_{j}) ≠ ρ(e_{i}e_{j})"));
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.homomorphism_failure().is_none()
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn field(&self) -> &Field {
        self.parent.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// ρ(x) for an element x given by coefficients.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        act_on(self.field(), &self.action, self.dim, x)
    }

    /// The representation h ↦ ρ(φ(h)) for a linear map φ of H (given as a
    /// matrix on coefficient columns).
    fn twisted(&self, phi: &Matrix) -> Self {
        let action = (0..self.parent.dim()).map(|i| self.act(&phi.column(i))).collect();
        Representation { parent: self.parent.clone(), dim: self.dim, action }
    }

    pub fn trivial(parent: Arc<HopfAlgebra>) -> Self {
        let f = parent.field().clone();
        let action = parent.counit().iter().map(|c| Matrix::scalar(&f, 1, c)).collect();
        Representation { parent, dim: 1, action }
    }

    /// One-dimensional representation from an algebra map χ: H → k.
    pub fn from_character(parent: Arc<HopfAlgebra>, chi: &[Scalar]) -> Result<Self> {
        let f = parent.field().clone();
        let action = chi.iter().map(|c| Matrix::scalar(&f, 1, c)).collect();
        Self::new(parent, action)
    }

    /// Left regular representation.
    pub fn regular(parent: Arc<HopfAlgebra>) -> Self {
        let action = (0..parent.dim()).map(|i| parent.left_mult_matrix(&parent.basis_elem(i))).collect();
        let dim = parent.dim();
        Representation { parent, dim, action }
    }

    /// V⊗W with h acting by Σ ρ_V(h₁)⊗ρ_W(h₂).
    pub fn tensor(&self, other: &Representation) -> Result<Self> {
        if !Arc::ptr_eq(&self.parent, &other.parent) && *self.parent != *other.parent {
            return Err(Error::InvalidInput("tensor product of representations of different algebras".into()));
        }
        let h = &*self.parent;
        let n = h.dim();
        let d = self.dim * other.dim;
        let mut action = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = Matrix::zeros(h.field(), d, d);
            for (idx, c) in h.coproduct_basis(i) {
                let k = self.action[idx / n].kron(&other.action[idx % n])?;
                m.add_scaled(&c, &k);
            }
            action.push(m);
        }
        Ok(Representation { parent: self.parent.clone(), dim: d, action })
    }

    /// V* with h acting by ρ(S(h))ᵀ.
    pub fn right_dual(&self) -> Self {
        let s = self.parent.antipode().clone();
        let t = self.twisted(&s);
        Representation { action: t.action.iter().map(|m| m.transpose()).collect(), ..t }
    }

    /// *V with h acting by ρ(S⁻¹(h))ᵀ.
    pub fn left_dual(&self) -> Self {
        let s = self.parent.antipode_inverse().clone();
        let t = self.twisted(&s);
        Representation { action: t.action.iter().map(|m| m.transpose()).collect(), ..t }
    }

    /// V** on the same underlying space, h acting by ρ(S²(h)).
    pub fn double_dual_right(&self) -> Self {
        self.twisted(&self.parent.antipode().pow(2))
    }

    /// **V on the same underlying space, h acting by ρ(S⁻²(h)).
    pub fn double_dual_left(&self) -> Self {
        self.twisted(&self.parent.antipode_inverse().pow(2))
    }

    /// Restriction to an invariant subspace spanned by the columns of `basis`
    /// (which must be independent).
    pub fn restrict(&self, basis: &Matrix) -> Result<Self> {
        let action = restrict_actions(&self.action, basis)?;
        Ok(Representation { parent: self.parent.clone(), dim: basis.cols(), action })
    }

    /// The representation transported along an invertible change of basis P
    /// (new action P⁻¹ρP).
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse().ok_or_else(|| Error::InvalidInput("singular change of basis".into()))?;
        let action = self.action.iter().map(|m| p_inv.mul(m).mul(p)).collect();
        Ok(Representation { parent: self.parent.clone(), dim: self.dim, action })
    }

    /// Direct sum V ⊕ W.
    pub fn direct_sum(&self, other: &Representation) -> Self {
        let f = self.field();
        let action = self.action.iter().zip(&other.action).map(|(a, b)| block_diagonal(f, a, b)).collect();
        Representation { parent: self.parent.clone(), dim: self.dim + other.dim, action }
    }
}

/// Basis of Hom_H(V, W): the solutions T of Tρ_V(h) = ρ_W(h)T, each as a
/// dim W × dim V matrix.
pub fn hom_space(v: &Representation, w: &Representation) -> Vec<Matrix> {
    hom_space_actions(v.field(), &v.action, v.dim, &w.action, w.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::{cyclic, sweedler};

    fn z2() -> Arc<HopfAlgebra> {
        Arc::new(cyclic(&Field::Rationals, 2).unwrap())
    }

    #[test]
    fn sign_squared_is_trivial() {
        let h = z2();
        let q = Field::Rationals;
        let sign = Representation::from_character(h.clone(), &[q.one(), q.from_i64(-1)]).unwrap();
        let triv = Representation::trivial(h.clone());
        let ss = sign.tensor(&sign).unwrap();
        assert_eq!(hom_space(&ss, &triv).len(), 1);
        assert!(hom_space(&triv, &sign).is_empty());
        assert_eq!(triv.tensor(&sign).unwrap().dim(), 1);
    }

    #[test]
    fn invariants_of_the_regular_representation() {
        let h = z2();
        let reg = Representation::regular(h.clone());
        let homs = hom_space(&Representation::trivial(h), &reg);
        assert_eq!(homs.len(), 1);
        // spanned by the integral 1 + g
        assert_eq!(homs[0].get(0, 0), homs[0].get(1, 0));
    }

    #[test]
    fn dual_conventions() {
        let h = Arc::new(sweedler());
        let reg = Representation::regular(h);
        assert!(reg.is_valid());
        for v in [reg.right_dual(), reg.left_dual(), reg.double_dual_right(), reg.double_dual_left()] {
            assert!(v.is_valid());
        }
        assert_eq!(reg.right_dual().left_dual(), reg);
        assert_eq!(reg.left_dual().right_dual(), reg);
        assert_eq!(reg.right_dual().right_dual(), reg.double_dual_right());
        let t = reg.tensor(&reg).unwrap();
        assert!(t.is_valid());
        assert_eq!(t.dim(), 16);
    }
}

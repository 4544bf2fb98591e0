//! Module theory over plain finite-dimensional algebras: radical, socle,
//! tops, projective indecomposables and the projectivity test behind the
//! exactness verdict.

pub mod actions;
mod structure;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, SparseTensor3};
use crate::report::Report;

use actions::{act_on, block_diagonal, restrict_actions, submodule_quotient_actions};

pub use structure::{
    exactness_verdict, is_projective, module_radical, radical, socle, top, AlgebraStructure, Projective,
};

/// An associative unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FDAlgebra {
    field: Field,
    basis: Vec<String>,
    mul: SparseTensor3,
    unit: Vec<Scalar>,
}

impl FDAlgebra {
    /// Builds and validates associativity and the unit laws.
    pub fn new(field: &Field, basis: Vec<String>, mul: SparseTensor3, unit: Vec<Scalar>) -> Result<Self> {
        let a = Self::new_unchecked(field, basis, mul, unit)?;
        let report = a.validate();
        if !report.passed() {
            let failed: Vec<&str> =
                report.subchecks.iter().filter(|r| !r.passed()).map(|r| r.check.as_str()).collect();
            return Err(Error::InvalidInput(format!("algebra axioms fail: {}", failed.join(", "))));
        }
        Ok(a)
    }

    /// Shape checks only.
    pub fn new_unchecked(field: &Field, basis: Vec<String>, mul: SparseTensor3, unit: Vec<Scalar>) -> Result<Self> {
        let n = basis.len();
        if mul.dims() != (n, n, n) || unit.len() != n {
            return Err(Error::ShapeMismatch(format!("algebra of dimension {n} with tensor {:?}", mul.dims())));
        }
        if n == 0 {
            return Err(Error::InvalidInput("the zero algebra is not supported".into()));
        }
        Ok(FDAlgebra { field: field.clone(), basis, mul, unit })
    }

    /// The algebra underlying a Hopf algebra.
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        FDAlgebra {
            field: h.field().clone(),
            basis: h.basis_names().to_vec(),
            mul: h.mul_tensor().clone(),
            unit: h.unit().to_vec(),
        }
    }

    /// k[x]/(x^n), basis 1, x, …, x^{n−1}.
    pub fn truncated_polynomial(field: &Field, n: usize) -> Result<Self> {
        let basis = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let triples =
            (0..n).flat_map(|i| (0..n).filter(move |j| i + j < n).map(move |j| (i, j, i + j, field.one()))).collect();
        let mul = SparseTensor3::from_entries(field, (n, n, n), triples)?;
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Self::new(field, basis, mul, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mul_tensor(&self) -> &SparseTensor3 {
        &self.mul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_elem(&self, i: usize) -> Vec<Scalar> {
        let mut e = vec![self.field.zero(); self.dim()];
        e[i] = self.field.one();
        e
    }

    pub fn mul_elems(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
                let ab = f.mul(a, b);
                for (k, c) in self.mul.slice(i, j) {
                    f.mul_add_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Left multiplication by `x` (column j is x·e_j).
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul_elems(x, &self.basis_elem(j))).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Right multiplication by `x` (column j is e_j·x).
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul_elems(&self.basis_elem(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Report "validate_algebra" with sub-checks associativity and unit.
    pub fn validate(&self) -> Report {
        let n = self.dim();
        let assoc = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).find(|&(i, j, k)| {
            let (ei, ej, ek) = (self.basis_elem(i), self.basis_elem(j), self.basis_elem(k));
            self.mul_elems(&self.mul_elems(&ei, &ej), &ek) != self.mul_elems(&ei, &self.mul_elems(&ej, &ek))
        });
        let unit = (0..n).find(|&i| {
            let e = self.basis_elem(i);
            self.mul_elems(&self.unit, &e) != e || self.mul_elems(&e, &self.unit) != e
        });
        let sub = |name: &str, w: Option<Vec<usize>>| match w {
            None => Report::pass(name),
            Some(w) => Report::from_bool(name, false).with("witness_basis_indices", w),
        };
        Report::aggregate(
            "validate_algebra",
            vec![sub("associativity", assoc.map(|(i, j, k)| vec![i, j, k])), sub("unit", unit.map(|i| vec![i]))],
        )
    }

    /// B°: the same space with a∘b = ba.
    pub fn opposite(&self) -> Self {
        let triples = self.mul.triples().map(|(i, j, k, c)| (j, i, k, c.clone())).collect();
        let n = self.dim();
        let mul = SparseTensor3::from_entries(&self.field, (n, n, n), triples).expect("indices in range");
        let basis = self.basis.iter().map(|b| format!("{b}°")).collect();
        FDAlgebra { field: self.field.clone(), basis, mul, unit: self.unit.clone() }
    }

    /// B⊗C with e_i⊗f_j at index i·dim C + j.
    pub fn tensor(&self, other: &FDAlgebra) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let f = &self.field;
        let (n, m) = (self.dim(), other.dim());
        let mut triples = Vec::new();
        for (i, k, p, a) in self.mul.triples() {
            for (j, l, q, b) in other.mul.triples() {
                triples.push((i * m + j, k * m + l, p * m + q, f.mul(a, b)));
            }
        }
        let d = n * m;
        let mul = SparseTensor3::from_entries(f, (d, d, d), triples)?;
        let unit = (0..d).map(|x| f.mul(&self.unit[x / m], &other.unit[x % m])).collect();
        let basis = (0..d).map(|x| format!("{}⊗{}", self.basis[x / m], other.basis[x % m])).collect();
        Ok(FDAlgebra { field: f.clone(), basis, mul, unit })
    }
}

/// A left module over an [`FDAlgebra`], stored as the images of the basis.
#[derive(Clone, Debug)]
pub struct ModuleOverAlgebra {
    parent: Arc<FDAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl ModuleOverAlgebra {
    /// Builds and checks the algebra-homomorphism property.
    pub fn new(parent: Arc<FDAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(parent, dim, action)?;
        if let Some(bad) = m.homomorphism_failure() {
            return Err(Error::InvalidInput(format!("action is not multiplicative: {bad}")));
        }
        Ok(m)
    }

    pub fn new_unchecked(parent: Arc<FDAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let ok = action.len() == parent.dim()
            && action.iter().all(|m| m.rows() == dim && m.cols() == dim && m.field() == parent.field());
        if !ok {
            return Err(Error::ShapeMismatch("action matrices must be square of the module's dimension".into()));
        }
        Ok(ModuleOverAlgebra { parent, dim, action })
    }

    pub fn homomorphism_failure(&self) -> Option<String> {
        let a = &*self.parent;
        let f = a.field();
        if self.act(a.unit()) != Matrix::identity(f, self.dim) {
            return Some("unit does not act as the identity".into());
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(f, self.dim, self.dim);
                for (k, c) in a.mul_tensor().slice(i, j) {
                    rhs.add_scaled(c, &self.action[*k]);
                }
                if lhs != rhs {
                    return Some(format!("a(e_{i})a(e_{j}) ≠ a(e_{i}e_{j})"));
                }
            }
        }
        None
    }

    /// The left regular module.
    pub fn regular(parent: Arc<FDAlgebra>) -> Self {
        let action = (0..parent.dim()).map(|i| parent.left_mult_matrix(&parent.basis_elem(i))).collect();
        let dim = parent.dim();
        ModuleOverAlgebra { parent, dim, action }
    }

    /// B as a left module over B⊗B°: (a⊗b)·h = a·h·b.
    pub fn regular_bimodule(b: &FDAlgebra) -> Result<Self> {
        let env = Arc::new(b.tensor(&b.opposite())?);
        let n = b.dim();
        let lefts: Vec<Matrix> = (0..n).map(|i| b.left_mult_matrix(&b.basis_elem(i))).collect();
        let rights: Vec<Matrix> = (0..n).map(|j| b.right_mult_matrix(&b.basis_elem(j))).collect();
        let action = (0..n * n).map(|x| lefts[x / n].mul(&rights[x % n])).collect();
        Self::new(env, n, action)
    }

    /// One-dimensional module from an algebra map χ: B → k.
    pub fn from_character(parent: Arc<FDAlgebra>, chi: &[Scalar]) -> Result<Self> {
        let f = parent.field().clone();
        let action = chi.iter().map(|c| Matrix::scalar(&f, 1, c)).collect();
        Self::new(parent, 1, action)
    }

    pub fn parent(&self) -> &Arc<FDAlgebra> {
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

    pub fn act(&self, x: &[Scalar]) -> Matrix {
        act_on(self.field(), &self.action, self.dim, x)
    }

    /// Restriction to an invariant subspace spanned by independent columns.
    pub fn restrict(&self, basis: &Matrix) -> Result<Self> {
        let action = restrict_actions(&self.action, basis)?;
        Ok(ModuleOverAlgebra { parent: self.parent.clone(), dim: basis.cols(), action })
    }

    /// M/N for an invariant subspace N given by independent columns.
    pub fn quotient(&self, sub: &Matrix) -> Result<Self> {
        let (_, q) = submodule_quotient_actions(self.field(), self.dim, &self.action, sub)?;
        Ok(ModuleOverAlgebra { parent: self.parent.clone(), dim: self.dim - sub.cols(), action: q })
    }

    pub fn direct_sum(&self, other: &ModuleOverAlgebra) -> Self {
        let f = self.field();
        let action = self.action.iter().zip(&other.action).map(|(a, b)| block_diagonal(f, a, b)).collect();
        ModuleOverAlgebra { parent: self.parent.clone(), dim: self.dim + other.dim, action }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::{cyclic, sweedler};

    #[test]
    fn opposite_and_tensor() {
        let q = Field::Rationals;
        let b = FDAlgebra::from_hopf(&cyclic(&q, 3).unwrap());
        assert_eq!(b.opposite().mul_tensor(), b.mul_tensor());
        let s = FDAlgebra::from_hopf(&sweedler());
        assert!(s.opposite().validate().passed());
        assert_ne!(s.opposite().mul_tensor(), s.mul_tensor());
        let t = s.tensor(&b).unwrap();
        assert_eq!(t.dim(), 12);
        assert!(t.validate().passed());
    }

    #[test]
    fn bimodule_is_a_valid_module() {
        let s = FDAlgebra::from_hopf(&sweedler());
        let m = ModuleOverAlgebra::regular_bimodule(&s).unwrap();
        assert_eq!(m.parent().dim(), 16);
        assert!(m.homomorphism_failure().is_none());
        let dual = FDAlgebra::truncated_polynomial(&Field::Rationals, 2).unwrap();
        assert!(ModuleOverAlgebra::regular_bimodule(&dual).is_ok());
    }

    #[test]
    fn field_mismatch() {
        let a = FDAlgebra::truncated_polynomial(&Field::Rationals, 2).unwrap();
        let b = FDAlgebra::truncated_polynomial(&Field::prime(5).unwrap(), 2).unwrap();
        assert!(matches!(a.tensor(&b), Err(Error::FieldMismatch(..))));
    }
}

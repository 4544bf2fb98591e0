use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{common_kernel, Matrix, SparseTensor3};

use super::algebra::{Element, HopfAlgebra};
use super::integrals::{basis_mult_matrix, distinguished_element};

const PIVOT_ATTEMPTS: usize = 50;

/// Solutions of a·x = S²(x)·a for all x, with one invertible solution if found.
#[derive(Clone, Debug)]
pub struct PivotCandidates {
    pub space: Vec<Element>,
    pub invertible: Option<Element>,
}

impl PivotCandidates {
    pub fn require_invertible(&self) -> Result<&Element> {
        self.invertible.as_ref().ok_or(Error::NoInvertibleSolutionFound(PIVOT_ATTEMPTS))
    }
}

fn is_invertible(h: &HopfAlgebra, a: &[Scalar]) -> bool {
    h.left_mult_matrix(a).rank() == h.dim()
}

/// Scans basis vectors of a solution space, then seeded random combinations.
fn find_invertible(h: &HopfAlgebra, space: &[Element], seed: u64, accept: impl Fn(&Element) -> bool) -> Option<Element> {
    let f = h.field();
    if let Some(v) = space.iter().find(|v| is_invertible(h, v) && accept(v)) {
        return Some(v.clone());
    }
    if space.len() < 2 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PIVOT_ATTEMPTS {
        let mut v = h.zero_elem();
        for b in space {
            let c = f.sample(&mut rng);
            for (x, y) in v.iter_mut().zip(b) {
                f.mul_add_assign(x, &c, y);
            }
        }
        if is_invertible(h, &v) && accept(&v) {
            return Some(v);
        }
    }
    None
}

/// Elements implementing S² by conjugation: the solution space of
/// a·x − S²(x)·a = 0 over all basis x.
pub fn pivot_candidates(h: &HopfAlgebra) -> PivotCandidates {
    let s2 = h.antipode().pow(2);
    let space = conjugation_space(h, &s2);
    let invertible = find_invertible(h, &space, 0, |_| true);
    PivotCandidates { space, invertible }
}

/// Solutions a of a·e_x = φ(e_x)·a for every basis x.
fn conjugation_space(h: &HopfAlgebra, phi: &Matrix) -> Vec<Element> {
    let f = h.field();
    let blocks = (0..h.dim()).map(|x| {
        let right = basis_mult_matrix(h, x, false);
        let left = h.left_mult_matrix(&phi.column(x));
        right.sub(&left)
    });
    common_kernel(f, h.dim(), blocks).columns()
}

/// K = H ⊕ H·t with t grouplike, t x t⁻¹ = S²(x), t² = g⁻¹.
#[derive(Clone, Debug)]
pub struct PivotalExtension {
    pub algebra: HopfAlgebra,
    /// Element a with a x a⁻¹ = S²(x).
    pub pivot: Element,
    /// Grouplike g with g⁻¹ x g = S⁴(x).
    pub g: Element,
    /// μ with (μa)² = g⁻¹, when a²g is a scalar.
    pub scaling: Option<Scalar>,
}

/// Builds the pivotal extension. The grouplike g is the distinguished
/// element when it implements S⁴, else a grouplike found in the solution
/// space of x·g = g·S⁴(x).
pub fn pivotal_extension(h: &HopfAlgebra, a: &[Scalar]) -> Result<PivotalExtension> {
    let f = h.field();
    let n = h.dim();
    h.check_len(a)?;
    let s2 = h.antipode().pow(2);
    let a_inv = h
        .inverse_elem(a)
        .ok_or_else(|| Error::PreconditionFailed("pivot element is not invertible".into()))?;
    for x in 0..n {
        let conj = h.mul_elems(&h.mul_elems(a, &h.basis_elem(x)), &a_inv);
        if conj != s2.column(x) {
            return Err(Error::PreconditionFailed(format!("a e_{x} a⁻¹ ≠ S²(e_{x})")));
        }
    }
    let s4 = s2.mul(&s2);
    let implements_s4 = |g: &Element| -> bool {
        (0..n).all(|x| h.mul_elems(&h.basis_elem(x), g) == h.mul_elems(g, &s4.column(x)))
    };
    let distinguished = distinguished_element(h)?;
    let g = if implements_s4(&distinguished) {
        distinguished
    } else {
        let space = conjugation_space(h, &s4.inverse().expect("S is invertible"));
        find_invertible(h, &space, 1, |v| h.is_grouplike(v)).ok_or_else(|| {
            Error::ExtensionInconsistent("no grouplike g with g⁻¹xg = S⁴(x) was found".into())
        })?
    };
    let g_inv = h.apply_antipode(&g);

    let c = h.mul_elems(&h.mul_elems(a, a), &g);
    let scaling = match is_scalar_multiple_of_unit(h, &c) {
        Some(lambda) => Some(f.sqrt(&f.inv(&lambda)?).ok_or_else(|| {
            Error::ExtensionInconsistent(format!(
                "a²g = {}·1 and its inverse has no square root in {f}",
                f.format_scalar(&lambda)
            ))
        })?),
        None => None,
    };

    let algebra = build_extension(h, &g_inv, &g)?;
    Ok(PivotalExtension { algebra, pivot: a.to_vec(), g, scaling })
}

fn is_scalar_multiple_of_unit(h: &HopfAlgebra, x: &[Scalar]) -> Option<Scalar> {
    let f = h.field();
    let p = h.unit().iter().position(|u| !f.is_zero(u))?;
    let lambda = f.div(&x[p], &h.unit()[p]).ok()?;
    let scaled: Vec<Scalar> = h.unit().iter().map(|u| f.mul(u, &lambda)).collect();
    (scaled == x && !f.is_zero(&lambda)).then_some(lambda)
}

fn build_extension(h: &HopfAlgebra, g_inv: &[Scalar], g: &[Scalar]) -> Result<HopfAlgebra> {
    let f = h.field();
    let n = h.dim();
    let m = 2 * n;
    let s2 = h.antipode().pow(2);
    let s3 = s2.mul(h.antipode());
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let plain = h.mul_tensor().slice(i, j);
            for (k, c) in plain {
                mul.push((i, j, *k, c.clone()));
                mul.push((i, n + j, n + *k, c.clone()));
            }
            // (e_i t)(e_j) = e_i S²(e_j) t ; (e_i t)(e_j t) = e_i S²(e_j) g⁻¹
            let twisted = h.mul_elems(&h.basis_elem(i), &s2.column(j));
            let with_g = h.mul_elems(&twisted, g_inv);
            for k in 0..n {
                mul.push((n + i, j, n + k, twisted[k].clone()));
                mul.push((n + i, n + j, k, with_g[k].clone()));
            }
        }
    }
    let mut comul = Vec::new();
    for (i, a, b, c) in h.comul_tensor().triples() {
        comul.push((i, a, b, c.clone()));
        comul.push((n + i, n + a, n + b, c.clone()));
    }
    let mut unit = h.unit().to_vec();
    unit.resize(m, f.zero());
    let mut counit = h.counit().to_vec();
    counit.extend(h.counit().iter().cloned());
    let mut s = Matrix::zeros(f, m, m);
    for j in 0..n {
        for (r, v) in h.antipode().column(j).into_iter().enumerate() {
            s.set(r, j, v);
        }
        // S(e_j t) = g S³(e_j) t
        let col = h.mul_elems(g, &s3.column(j));
        for (r, v) in col.into_iter().enumerate() {
            s.set(n + r, n + j, v);
        }
    }
    let mut names: Vec<String> = h.basis_names().to_vec();
    names.extend(h.basis_names().iter().map(|b| if b == "1" { "t".to_string() } else { format!("{b}·t") }));
    let algebra = HopfAlgebra::new_unchecked(
        f,
        names,
        SparseTensor3::from_entries(f, (m, m, m), mul)?,
        unit,
        SparseTensor3::from_entries(f, (m, m, m), comul)?,
        counit,
        s,
    )?;
    let report = algebra.validate();
    if !report.passed() {
        return Err(Error::ExtensionInconsistent(format!("extension fails Hopf axioms: {}", report.to_json())));
    }
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{cyclic, sweedler};

    #[test]
    fn group_algebra_pivot_is_one() {
        let h = cyclic(&Field::Rationals, 2).unwrap();
        let c = pivot_candidates(&h);
        assert_eq!(c.space.len(), 2);
        let ext = pivotal_extension(&h, h.unit()).unwrap();
        assert_eq!(ext.algebra.dim(), 4);
        assert_eq!(ext.scaling, Some(Field::Rationals.one()));
    }

    #[test]
    fn sweedler_g_implements_s2() {
        let h = sweedler();
        let c = pivot_candidates(&h);
        let a = c.require_invertible().unwrap();
        let s2 = h.antipode().pow(2);
        let a_inv = h.inverse_elem(a).unwrap();
        for x in 0..4 {
            assert_eq!(h.mul_elems(&h.mul_elems(a, &h.basis_elem(x)), &a_inv), s2.column(x));
        }
        let g = h.elem_from_names(&[("g", 1)]);
        assert!(c.space.len() >= 1);
        let ext = pivotal_extension(&h, &g).unwrap();
        assert_eq!(ext.algebra.dim(), 8);
    }
}

//! Module-theoretic primitives on bare action matrices, shared by Hopf
//! representations and modules over plain algebras.

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{common_kernel, EchelonBasis, Matrix, Polynomial};

/// Random algebra elements tried per module before giving up.
pub const MEATAXE_ATTEMPTS: usize = 50;

/// Basis of the maps T: V → W with T·a_i = b_i·T for all i, each as a
/// dim W × dim V matrix.
pub fn hom_space_actions(field: &Field, va: &[Matrix], dv: usize, wa: &[Matrix], dw: usize) -> Vec<Matrix> {
    let f = field;
    let unknowns = dv * dw;
    let blocks = va.iter().zip(wa).map(|(rv, rw)| {
        let mut m = Matrix::zeros(f, unknowns, unknowns);
        for a in 0..dw {
            for c in 0..dv {
                let row = a * dv + c;
                for b in 0..dv {
                    let x = rv.get(b, c);
                    if !f.is_zero(x) {
                        let col = a * dv + b;
                        let y = f.add(m.get(row, col), x);
                        m.set(row, col, y);
                    }
                }
                for b in 0..dw {
                    let x = rw.get(a, b);
                    if !f.is_zero(x) {
                        let col = b * dv + c;
                        let y = f.sub(m.get(row, col), x);
                        m.set(row, col, y);
                    }
                }
            }
        }
        m
    });
    common_kernel(f, unknowns, blocks)
        .columns()
        .into_iter()
        .map(|c| Matrix::new(f, dw, dv, c).expect("shape matches"))
        .collect()
}

/// Σ x_i a_i for coefficients x.
pub fn act_on(field: &Field, action: &[Matrix], dim: usize, x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, dim, dim);
    for (c, a) in x.iter().zip(action) {
        if !field.is_zero(c) {
            m.add_scaled(c, a);
        }
    }
    m
}

/// Action on the invariant subspace spanned by the (independent) columns of `basis`.
pub fn restrict_actions(action: &[Matrix], basis: &Matrix) -> Result<Vec<Matrix>> {
    action
        .iter()
        .map(|m| {
            basis
                .solve(&m.mul(basis))?
                .ok_or_else(|| Error::InvalidInput("subspace is not invariant".into()))
        })
        .collect()
}

pub fn block_diagonal(field: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    let (da, db) = (a.rows(), b.rows());
    let mut m = Matrix::zeros(field, da + db, da + db);
    for i in 0..da {
        for j in 0..da {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..db {
        for j in 0..db {
            m.set(da + i, da + j, b.get(i, j).clone());
        }
    }
    m
}

/// Columns spanning the smallest subspace containing `v` and stable under `gens`.
pub fn spin(field: &Field, gens: &[&Matrix], v: Vec<Scalar>) -> Vec<Vec<Scalar>> {
    let d = v.len();
    let mut basis = EchelonBasis::new(field, d);
    let mut found = vec![];
    if basis.insert(&v) {
        found.push(v);
    }
    let mut next = 0;
    while next < found.len() && found.len() < d {
        let w = found[next].clone();
        next += 1;
        for g in gens {
            let gw = g.mul_vec(&w);
            if basis.insert(&gw) {
                found.push(gw);
                if found.len() == d {
                    break;
                }
            }
        }
    }
    found
}

/// Span of the images of the columns of `sub` under all of `gens`, together
/// with `sub` itself, closed under the action.
pub fn spin_subspace(field: &Field, gens: &[&Matrix], d: usize, seeds: &[Vec<Scalar>]) -> Matrix {
    let mut basis = EchelonBasis::new(field, d);
    let mut found: Vec<Vec<Scalar>> = vec![];
    for v in seeds {
        if basis.insert(v) {
            found.push(v.clone());
        }
    }
    let mut next = 0;
    while next < found.len() && found.len() < d {
        let w = found[next].clone();
        next += 1;
        for g in gens {
            let gw = g.mul_vec(&w);
            if basis.insert(&gw) {
                found.push(gw);
            }
        }
    }
    Matrix::from_columns(field, d, &found)
}

/// Irreducible factors of p usable for splitting: all of them over a finite
/// field, only the rational linear ones over Q.
pub fn splitting_factors(p: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut fs: Vec<Polynomial> = if p.field().is_finite() {
        p.factor_over_prime_field()?.factors.into_iter().map(|(f, _)| f).collect()
    } else {
        p.rational_partial_factor()?.linear.into_iter().map(|(f, _)| f).collect()
    };
    fs.sort_by_key(|f| f.degree());
    Ok(fs)
}

pub enum Split {
    Irreducible,
    Submodule(Matrix),
}

/// One MeatAxe round: a proper invariant subspace, an irreducibility
/// certificate, or `None` when the attempt budget runs out.
pub fn try_split(field: &Field, d: usize, action: &[Matrix], rng: &mut ChaCha8Rng) -> Result<Option<Split>> {
    let f = field;
    if d <= 1 {
        return Ok(Some(Split::Irreducible));
    }
    let gens: Vec<&Matrix> = action.iter().filter(|m| !m.is_zero()).collect();
    let gens_t: Vec<Matrix> = gens.iter().map(|m| m.transpose()).collect();
    let gens_t: Vec<&Matrix> = gens_t.iter().collect();
    for _ in 0..MEATAXE_ATTEMPTS {
        let mut theta = Matrix::zeros(f, d, d);
        for g in &gens {
            let c = f.sample(rng);
            if !f.is_zero(&c) {
                theta.add_scaled(&c, g);
            }
        }
        let minpoly = theta.minimal_polynomial();
        for factor in splitting_factors(&minpoly)? {
            let n = theta.eval_polynomial(&factor);
            let kernel = n.kernel_basis();
            if kernel.cols() == 0 {
                continue;
            }
            let sub = spin(f, &gens, kernel.column(0));
            if sub.len() < d {
                return Ok(Some(Split::Submodule(Matrix::from_columns(f, d, &sub))));
            }
            if kernel.cols() != factor.degree().unwrap_or(0) {
                continue;
            }
            // Norton's test: a proper submodule exists iff the transposed
            // action has one generated inside ker(Nᵀ)
            let kt = n.transpose().kernel_basis();
            let dual_sub = spin(f, &gens_t, kt.column(0));
            if dual_sub.len() < d {
                let rows = Matrix::from_columns(f, d, &dual_sub).transpose();
                return Ok(Some(Split::Submodule(rows.kernel_basis())));
            }
            return Ok(Some(Split::Irreducible));
        }
    }
    Ok(None)
}

/// Completes the columns of `sub` to a basis of k^d (standard vectors appended).
pub fn complete_basis(field: &Field, d: usize, sub: &Matrix) -> Matrix {
    let mut basis = EchelonBasis::new(field, d);
    let mut cols: Vec<Vec<Scalar>> = sub.columns();
    for c in &cols {
        basis.insert(c);
    }
    for i in 0..d {
        let mut e = vec![field.zero(); d];
        e[i] = field.one();
        if basis.insert(&e) {
            cols.push(e);
        }
    }
    Matrix::from_columns(field, d, &cols)
}

/// Sub- and quotient actions for an invariant subspace with the given column basis.
pub fn submodule_quotient_actions(field: &Field, d: usize, action: &[Matrix], sub: &Matrix) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let s = sub.cols();
    let p = complete_basis(field, d, sub);
    let p_inv = p.inverse().ok_or_else(|| Error::InvalidInput("singular change of basis".into()))?;
    let conj: Vec<Matrix> = action.iter().map(|m| p_inv.mul(m).mul(&p)).collect();
    let lower_left_zero = conj.iter().all(|m| m.submatrix(s, 0, d - s, s).is_zero());
    if !lower_left_zero {
        return Err(Error::InvalidInput("subspace is not invariant".into()));
    }
    Ok((
        conj.iter().map(|m| m.submatrix(0, 0, s, s)).collect(),
        conj.iter().map(|m| m.submatrix(s, s, d - s, d - s)).collect(),
    ))
}

/// Composition factors of a module, as absolutely irreducible actions with
/// multiplicities, isomorphic factors grouped and sorted by dimension.
pub fn composition_factors(field: &Field, d: usize, action: &[Matrix], rng: &mut ChaCha8Rng) -> Result<Vec<(Vec<Matrix>, usize)>> {
    let mut found: Vec<(Vec<Matrix>, usize)> = Vec::new();
    let mut stack = vec![(d, action.to_vec())];
    while let Some((dim, m)) = stack.pop() {
        if dim == 0 {
            continue;
        }
        match try_split(field, dim, &m, rng)? {
            None => {
                return Err(Error::Undecided(format!(
                    "no splitting or irreducibility certificate for a {dim}-dimensional module after {MEATAXE_ATTEMPTS} attempts over {field}"
                )))
            }
            Some(Split::Submodule(s)) => {
                let sd = s.cols();
                let (sub, quo) = submodule_quotient_actions(field, dim, &m, &s)?;
                stack.push((dim - sd, quo));
                stack.push((sd, sub));
            }
            Some(Split::Irreducible) => {
                if hom_space_actions(field, &m, dim, &m, dim).len() != 1 {
                    return Err(Error::Undecided(format!(
                        "a {dim}-dimensional simple constituent is not absolutely irreducible over {field}"
                    )));
                }
                let existing = found.iter_mut().find(|(a, _)| {
                    a[0].rows() == dim && !hom_space_actions(field, a, dim, &m, dim).is_empty()
                });
                match existing {
                    Some(e) => e.1 += 1,
                    None => found.push((m, 1)),
                }
            }
        }
    }
    found.sort_by_key(|(a, _)| a.first().map_or(0, |m| m.rows()));
    Ok(found)
}

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{canonical_column_basis, common_kernel, EchelonBasis, Matrix};
use crate::report::{Report, Verdict};

use super::actions::{
    composition_factors, hom_space_actions, restrict_actions, splitting_factors, MEATAXE_ATTEMPTS,
};
use super::{FDAlgebra, ModuleOverAlgebra};

fn span_columns(field: &crate::field::Field, d: usize, cols: impl IntoIterator<Item = Vec<Scalar>>) -> Matrix {
    let mut basis = EchelonBasis::new(field, d);
    for c in cols {
        basis.insert(&c);
    }
    Matrix::from_columns(field, d, basis.vectors())
}

/// Basis (as columns) of the Jacobson radical. In characteristic 0 this is
/// the kernel of the trace form (x, y) ↦ tr(L_{xy}); in characteristic p it is
/// the common annihilator of the composition factors of the regular module.
/// Either way the result is checked to be a nilpotent two-sided ideal with
/// semisimple quotient.
pub fn radical(b: &FDAlgebra, seed: u64) -> Result<Matrix> {
    let f = b.field();
    let n = b.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| b.left_mult_matrix(&b.basis_elem(i))).collect();
    let rad;
    let mut simple_square_sum = None;
    if f.characteristic() == 0 {
        let traces: Vec<Scalar> = lefts.iter().map(|m| m.trace()).collect();
        let mut g = Matrix::zeros(f, n, n);
        for (i, j, k, c) in b.mul_tensor().triples() {
            let v = f.add(g.get(i, j), &f.mul(c, &traces[k]));
            g.set(i, j, v);
        }
        rad = canonical_column_basis(&g.kernel_basis());
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let factors = composition_factors(f, n, &lefts, &mut rng)?;
        let mut rows = Vec::new();
        for (action, _) in &factors {
            let d = action[0].rows();
            simple_square_sum = Some(simple_square_sum.unwrap_or(0) + d * d);
            for r in 0..d {
                for c in 0..d {
                    rows.push(action.iter().map(|m| m.get(r, c).clone()).collect());
                }
            }
        }
        rad = canonical_column_basis(&Matrix::from_rows(f, rows)?.kernel_basis());
    }
    verify_radical(b, &lefts, &rad, simple_square_sum)?;
    Ok(rad)
}

fn verify_radical(b: &FDAlgebra, lefts: &[Matrix], rad: &Matrix, simple_square_sum: Option<usize>) -> Result<()> {
    let f = b.field();
    let n = b.dim();
    let j = rad.cols();
    let mut span = EchelonBasis::new(f, n);
    for c in rad.columns() {
        span.insert(&c);
    }
    for r in rad.columns() {
        for i in 0..n {
            let e = b.basis_elem(i);
            if !span.contains(&b.mul_elems(&e, &r)) || !span.contains(&b.mul_elems(&r, &e)) {
                return Err(Error::InternalMismatch("radical is not a two-sided ideal".into()));
            }
        }
    }
    let mut power = rad.clone();
    for _ in 0..=n {
        if power.cols() == 0 {
            break;
        }
        let prev = power.cols();
        let products = power.columns().into_iter().flat_map(|x| {
            rad.columns().into_iter().map(move |y| (x.clone(), y)).collect::<Vec<_>>()
        });
        power = span_columns(f, n, products.map(|(x, y)| b.mul_elems(&x, &y)));
        if power.cols() >= prev {
            return Err(Error::InternalMismatch("radical is not nilpotent".into()));
        }
    }
    let quotient_semisimple = match simple_square_sum {
        Some(s) => s == n - j,
        None => {
            // trace form of B/J: tr_B(L_z) − tr_J(L_z|_J)
            let on_j = if j == 0 { vec![] } else { restrict_actions(lefts, rad)? };
            let t: Vec<Scalar> = (0..n)
                .map(|k| if j == 0 { lefts[k].trace() } else { f.sub(&lefts[k].trace(), &on_j[k].trace()) })
                .collect();
            let mut q = Matrix::zeros(f, n, n);
            for (a, c, k, v) in b.mul_tensor().triples() {
                let x = f.add(q.get(a, c), &f.mul(v, &t[k]));
                q.set(a, c, x);
            }
            q.rank() == n - j
        }
    };
    if !quotient_semisimple {
        return Err(Error::InternalMismatch("quotient by the radical is not semisimple".into()));
    }
    Ok(())
}

/// rad(B)·M as a column basis.
pub fn module_radical(m: &ModuleOverAlgebra, rad: &Matrix) -> Matrix {
    let cols = rad.columns().into_iter().flat_map(|r| m.act(&r).columns());
    span_columns(m.field(), m.dim(), cols)
}

/// top(M) = M / rad(B)·M.
pub fn top(m: &ModuleOverAlgebra, rad: &Matrix) -> Result<ModuleOverAlgebra> {
    m.quotient(&module_radical(m, rad))
}

/// soc(M): the vectors annihilated by rad(B), as a column basis.
pub fn socle(m: &ModuleOverAlgebra, rad: &Matrix) -> Matrix {
    let blocks: Vec<Matrix> = rad.columns().iter().map(|r| m.act(r)).collect();
    canonical_column_basis(&common_kernel(m.field(), m.dim(), blocks))
}

/// A projective indecomposable B·e with its simple top, occurring
/// `multiplicity` times in the regular module.
#[derive(Clone, Debug)]
pub struct Projective {
    pub basis: Matrix,
    pub module: ModuleOverAlgebra,
    pub top: ModuleOverAlgebra,
    pub multiplicity: usize,
}

/// Radical and projective indecomposables of an algebra.
#[derive(Clone, Debug)]
pub struct AlgebraStructure {
    pub algebra: Arc<FDAlgebra>,
    pub radical: Matrix,
    pub projectives: Vec<Projective>,
    seed: u64,
}

fn has_simple_top(m: &ModuleOverAlgebra, rad: &Matrix, rng: &mut ChaCha8Rng) -> Result<Option<ModuleOverAlgebra>> {
    let t = top(m, rad)?;
    let factors = composition_factors(t.field(), t.dim(), t.action(), rng)?;
    Ok((factors.len() == 1 && factors[0].1 == 1).then_some(t))
}

impl AlgebraStructure {
    /// Splits the regular module into indecomposable summands by Fitting
    /// decompositions of seeded random endomorphisms (right multiplications
    /// projected onto each summand), stopping once every summand has a
    /// simple top.
    pub fn compute(b: Arc<FDAlgebra>, seed: u64) -> Result<Self> {
        let f = b.field().clone();
        let n = b.dim();
        let rad = radical(&b, seed)?;
        let regular = ModuleOverAlgebra::regular(b.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut pieces: Vec<(Matrix, Option<ModuleOverAlgebra>)> = vec![(Matrix::identity(&f, n), None)];
        loop {
            for piece in pieces.iter_mut() {
                if piece.1.is_none() {
                    let module = regular.restrict(&piece.0)?;
                    piece.1 = has_simple_top(&module, &rad, &mut rng)?;
                }
            }
            let Some(k) = pieces.iter().position(|p| p.1.is_none()) else { break };
            let all: Vec<Vec<Scalar>> = pieces.iter().flat_map(|p| p.0.columns()).collect();
            let p_inv = Matrix::from_columns(&f, n, &all)
                .inverse()
                .ok_or_else(|| Error::InternalMismatch("summands do not span the regular module".into()))?;
            let offset: usize = pieces[..k].iter().map(|p| p.0.cols()).sum();
            let m = pieces[k].0.clone();
            let d = m.cols();
            let mut split = None;
            'attempts: for _ in 0..MEATAXE_ATTEMPTS {
                let x: Vec<Scalar> = (0..n).map(|_| f.sample(&mut rng)).collect();
                let full = p_inv.mul(&b.right_mult_matrix(&x)).mul(&m);
                let phi = full.submatrix(offset, 0, d, d);
                for factor in splitting_factors(&phi.minimal_polynomial())? {
                    let nf = phi.eval_polynomial(&factor).pow(d as u64);
                    let kernel = nf.kernel_basis();
                    if kernel.cols() > 0 && kernel.cols() < d {
                        let image = canonical_column_basis(&nf);
                        split = Some((m.mul(&kernel), m.mul(&image)));
                        break 'attempts;
                    }
                }
            }
            let (a, c) = split.ok_or_else(|| {
                Error::Undecided(format!(
                    "no Fitting splitting of a {d}-dimensional summand after {MEATAXE_ATTEMPTS} attempts over {f}"
                ))
            })?;
            pieces.splice(k..=k, [(a, None), (c, None)]);
        }

        let mut projectives: Vec<Projective> = Vec::new();
        for (basis, t) in pieces {
            let t = t.expect("every summand has a simple top");
            let found = projectives.iter_mut().find(|p| {
                p.top.dim() == t.dim()
                    && !hom_space_actions(&f, p.top.action(), p.top.dim(), t.action(), t.dim()).is_empty()
            });
            match found {
                Some(p) => p.multiplicity += 1,
                None => {
                    let module = regular.restrict(&basis)?;
                    projectives.push(Projective { basis, module, top: t, multiplicity: 1 });
                }
            }
        }
        projectives.sort_by_key(|p| (p.top.dim(), p.module.dim()));
        let total: usize = projectives.iter().map(|p| p.multiplicity * p.module.dim()).sum();
        if total != n || projectives.iter().any(|p| p.multiplicity != p.top.dim()) {
            return Err(Error::InternalMismatch("projective decomposition does not account for the regular module".into()));
        }
        Ok(AlgebraStructure { algebra: b, radical: rad, projectives, seed })
    }

    /// The projective cover's index for a simple module, if it is a top.
    pub fn cover_of(&self, simple: &ModuleOverAlgebra) -> Option<usize> {
        let f = self.algebra.field();
        self.projectives.iter().position(|p| {
            p.top.dim() == simple.dim()
                && !hom_space_actions(f, p.top.action(), p.top.dim(), simple.action(), simple.dim()).is_empty()
        })
    }

    /// dim P(top M) = Σ mᵢ·dim Pᵢ over the simple constituents of top M.
    pub fn cover_dimension(&self, m: &ModuleOverAlgebra) -> Result<usize> {
        let t = top(m, &self.radical)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut total = 0;
        for (action, mult) in composition_factors(t.field(), t.dim(), t.action(), &mut rng)? {
            let s = ModuleOverAlgebra::new_unchecked(self.algebra.clone(), action[0].rows(), action)?;
            let i = self
                .cover_of(&s)
                .ok_or_else(|| Error::InternalMismatch("a simple module is not the top of any projective".into()))?;
            total += mult * self.projectives[i].module.dim();
        }
        Ok(total)
    }

    pub fn is_projective(&self, m: &ModuleOverAlgebra) -> Result<bool> {
        Ok(self.cover_dimension(m)? == m.dim())
    }
}

/// M is projective iff its projective cover has the same dimension.
pub fn is_projective(m: &ModuleOverAlgebra, seed: u64) -> Result<bool> {
    AlgebraStructure::compute(m.parent().clone(), seed)?.is_projective(m)
}

/// A module category over C is exact iff H is projective as a B⊗B°-module;
/// the verdict for a user-supplied bimodule.
pub fn exactness_verdict(bimodule: &ModuleOverAlgebra, seed: u64) -> Result<Report> {
    let base = Report::pass("exactness")
        .with("module_dim", bimodule.dim())
        .with("algebra_dim", bimodule.parent().dim());
    let outcome = AlgebraStructure::compute(bimodule.parent().clone(), seed)
        .and_then(|s| s.cover_dimension(bimodule));
    match outcome {
        Ok(cover) => {
            let exact = cover == bimodule.dim();
            let mut r = base.with("cover_dim", cover).with("exactness", if exact { "exact" } else { "not exact" });
            r.verdict = Verdict::from_bool(exact);
            Ok(r)
        }
        Err(Error::Undecided(why)) => {
            let mut r = base.with("exactness", "undecided").with("reason", why);
            r.verdict = Verdict::Undecided;
            Ok(r)
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::builtins::{cyclic, sweedler, symmetric3, taft};

    #[test]
    fn radicals() {
        let q = Field::Rationals;
        let dual = FDAlgebra::truncated_polynomial(&q, 2).unwrap();
        let r = radical(&dual, 0).unwrap();
        assert_eq!(r.columns(), vec![vec![q.zero(), q.one()]]);
        let f7 = Field::prime(7).unwrap();
        let s3 = FDAlgebra::from_hopf(&symmetric3(&f7).unwrap());
        assert_eq!(radical(&s3, 0).unwrap().cols(), 0);
        let sw = FDAlgebra::from_hopf(&sweedler());
        let r = radical(&sw, 0).unwrap();
        assert_eq!(r.cols(), 2);
        // spanned by x and gx (indices 2 and 3)
        assert!(r.columns().iter().all(|c| q.is_zero(&c[0]) && q.is_zero(&c[1])));
    }

    #[test]
    fn char_p_radical_of_taft() {
        let f7 = Field::prime(7).unwrap();
        let t = FDAlgebra::from_hopf(&taft(&f7, 3, &f7.from_i64(2)).unwrap());
        assert_eq!(radical(&t, 1).unwrap().cols(), 6);
    }

    #[test]
    fn socles() {
        let q = Field::Rationals;
        let dual = Arc::new(FDAlgebra::truncated_polynomial(&q, 2).unwrap());
        let rad = radical(&dual, 0).unwrap();
        let soc = socle(&ModuleOverAlgebra::regular(dual), &rad);
        assert_eq!(soc.columns(), vec![vec![q.zero(), q.one()]]);
        let f7 = Field::prime(7).unwrap();
        let s3 = Arc::new(FDAlgebra::from_hopf(&symmetric3(&f7).unwrap()));
        let reg = ModuleOverAlgebra::regular(s3.clone());
        assert_eq!(socle(&reg, &radical(&s3, 0).unwrap()).cols(), 6);
    }

    #[test]
    fn projective_indecomposables() {
        let sw = AlgebraStructure::compute(Arc::new(FDAlgebra::from_hopf(&sweedler())), 0).unwrap();
        let dims: Vec<usize> = sw.projectives.iter().map(|p| p.module.dim()).collect();
        assert_eq!(dims, vec![2, 2]);
        let f7 = Field::prime(7).unwrap();
        let t = FDAlgebra::from_hopf(&taft(&f7, 3, &f7.from_i64(2)).unwrap());
        let ts = AlgebraStructure::compute(Arc::new(t), 0).unwrap();
        assert_eq!(ts.projectives.iter().map(|p| p.module.dim()).collect::<Vec<_>>(), vec![3, 3, 3]);
        let s3 = FDAlgebra::from_hopf(&symmetric3(&f7).unwrap());
        let ss = AlgebraStructure::compute(Arc::new(s3), 0).unwrap();
        assert!(ss.projectives.iter().all(|p| p.module.dim() == p.top.dim()));
    }

    #[test]
    fn projectivity_and_exactness() {
        let q = Field::Rationals;
        let dual = Arc::new(FDAlgebra::truncated_polynomial(&q, 2).unwrap());
        assert!(is_projective(&ModuleOverAlgebra::regular(dual.clone()), 0).unwrap());
        let trivial = ModuleOverAlgebra::from_character(dual.clone(), &[q.one(), q.zero()]).unwrap();
        assert!(!is_projective(&trivial, 0).unwrap());

        let bimod = ModuleOverAlgebra::regular_bimodule(&dual).unwrap();
        let r = exactness_verdict(&bimod, 0).unwrap();
        assert_eq!(r.witnesses["exactness"], "not exact");
        assert_eq!(r.witnesses["cover_dim"], 4);

        let f7 = Field::prime(7).unwrap();
        let z2 = FDAlgebra::from_hopf(&cyclic(&f7, 2).unwrap());
        let r = exactness_verdict(&ModuleOverAlgebra::regular_bimodule(&z2).unwrap(), 0).unwrap();
        assert_eq!(r.witnesses["exactness"], "exact");
        assert_eq!(r.witnesses["cover_dim"], 2);
    }
}

use std::sync::Arc;

use hopfcheck::hopf::{
    change_basis, corrupt_constant, drinfeld_double, drinfeld_map, dual_hopf, is_semisimple, left_integral,
    left_integrals, right_integrals, HopfAlgebra,
};
use hopfcheck::io::{load_algebra, load_hopf};
use hopfcheck::modalg::actions::{composition_factors, spin_subspace};
use hopfcheck::modalg::{is_projective, radical, socle, FDAlgebra, ModuleOverAlgebra};
use hopfcheck::{Field, Matrix, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const HOPF_BUILTINS: [&str; 9] = [
    "k[Z/2]@Q",
    "sym3@GF7",
    "sweedler",
    "taft:3:2@GF7",
    "taft:4@GF13",
    "gr_uq_sl2:3:2@GF7",
    "double(sweedler)@Q",
    "k[Z/5]@GF11",
    "dihedral:4@Q",
];

fn fields() -> Vec<Field> {
    vec![Field::Rationals, Field::prime(7).unwrap(), Field::parse("GF3^2:1,0,1").unwrap()]
}

fn hopf(t: &str) -> Arc<HopfAlgebra> {
    load_hopf(t).unwrap().algebra
}

fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| if rng.gen_bool(0.4) { f.zero() } else { f.sample(rng) })
        .collect();
    Matrix::new(f, rows, cols, data).unwrap()
}

/// Permutation times nonzero diagonal times one elementary shear, so that
/// structure tensors stay sparse.
fn random_sparse_invertible(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut m = Matrix::zeros(f, n, n);
    for (i, &p) in perm.iter().enumerate() {
        m.set(p, i, f.sample_nonzero(rng));
    }
    let mut shear = Matrix::identity(f, n);
    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
    if a != b {
        shear.set(a, b, f.sample(rng));
    }
    m.mul(&shear)
}

fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    a.mul_tensor() == b.mul_tensor()
        && a.comul_tensor() == b.comul_tensor()
        && a.unit() == b.unit()
        && a.counit() == b.counit()
        && a.antipode() == b.antipode()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn field_axioms(seed in any::<u64>(), which in 0usize..3) {
        let f = &fields()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
        prop_assert_eq!(f.parse_scalar(&f.format_scalar(&a)).unwrap(), a);
    }

    #[test]
    fn rank_nullity(seed in any::<u64>(), which in 0usize..3, rows in 1usize..7, cols in 1usize..7) {
        let f = &fields()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(f, rows, cols, &mut rng);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kron_mixed_product(seed in any::<u64>(), which in 0usize..3) {
        let f = &fields()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_matrix(f, 2, 3, &mut rng), random_matrix(f, 3, 2, &mut rng));
        let (c, d) = (random_matrix(f, 3, 2, &mut rng), random_matrix(f, 2, 2, &mut rng));
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap());
        let rhs = a.mul(&c).kron(&b.mul(&d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factored_polynomials_multiply_back(seed in any::<u64>(), n in 1usize..6) {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&f, n, n, &mut rng);
        let p = m.minimal_polynomial();
        prop_assert!(m.eval_polynomial(&p).is_zero());
        let factors = hopfcheck::modalg::actions::splitting_factors(&p).unwrap();
        let mut prod = hopfcheck::Polynomial::one(&f);
        for q in &factors {
            prop_assert!(p.div_rem(q).1.is_zero());
            prod = prod.mul(q);
        }
        prop_assert!(prod.degree() <= p.degree());
    }

    #[test]
    fn corrupted_sweedler_is_rejected(seed in any::<u64>()) {
        let (bad, what) = corrupt_constant(&hopf("sweedler"), seed).unwrap();
        prop_assert!(!bad.validate().passed(), "undetected corruption of {}", what);
    }

    #[test]
    fn projectivity_is_additive(seed in any::<u64>(), which in 0usize..3) {
        let (t, chars): (&str, Vec<Vec<i64>>) = [
            ("trunc:2@Q", vec![vec![1, 0]]),
            ("trunc:3@GF5", vec![vec![1, 0, 0]]),
            ("k[Z/2]@GF7", vec![vec![1, 1], vec![1, -1]]),
        ][which].clone();
        let b = Arc::new(load_algebra(t).unwrap());
        let f = b.field().clone();
        let mut pool = vec![ModuleOverAlgebra::regular(b.clone())];
        for c in chars {
            let c: Vec<Scalar> = c.iter().map(|&x| f.from_i64(x)).collect();
            pool.push(ModuleOverAlgebra::from_character(b.clone(), &c).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = rng.gen_range(0..pool.len());
        let j = rng.gen_range(0..pool.len());
        let sum = pool[i].direct_sum(&pool[j]);
        let want = is_projective(&pool[i], seed).unwrap() && is_projective(&pool[j], seed).unwrap();
        prop_assert_eq!(is_projective(&sum, seed).unwrap(), want);
    }

    #[test]
    fn simple_submodules_lie_in_the_socle(seed in any::<u64>(), which in 0usize..3) {
        let t = ["taft:3:2@GF7", "sweedler", "trunc:3@GF5"][which];
        let b = Arc::new(load_algebra(t).unwrap());
        let f = b.field().clone();
        let rad = radical(&b, seed).unwrap();
        let m = ModuleOverAlgebra::regular(b.clone());
        let soc = socle(&m, &rad);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<&Matrix> = m.action().iter().collect();
        let n = m.dim();
        let mut v: Vec<Scalar> = (0..n).map(|_| f.sample(&mut rng)).collect();
        // push the probe down the radical series
        for _ in 0..n {
            let mut x = vec![f.zero(); n];
            for k in 0..rad.cols() {
                let c = f.sample(&mut rng);
                for (xi, ri) in x.iter_mut().zip(rad.column(k)) {
                    *xi = f.add(xi, &f.mul(&c, &ri));
                }
            }
            let w = m.act(&x).mul_vec(&v);
            if w.iter().all(|c| f.is_zero(c)) {
                break;
            }
            v = w;
        }
        if v.iter().all(|c| f.is_zero(c)) {
            return Ok(());
        }
        let sub = spin_subspace(&f, &gens, n, &[v]);
        let action = hopfcheck::modalg::actions::restrict_actions(m.action(), &sub).unwrap();
        let factors = composition_factors(&f, sub.cols(), &action, &mut rng).unwrap();
        if factors.len() == 1 && factors[0].1 == 1 {
            prop_assert_eq!(soc.hstack(&sub).rank(), soc.cols());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn drinfeld_map_rank_is_basis_independent(seed in any::<u64>()) {
        let h = hopf("sweedler");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_sparse_invertible(h.field(), h.dim(), &mut rng);
        let h2 = change_basis(&h, &p).unwrap();
        prop_assert!(h2.validate().passed());
        let (d1, r1) = drinfeld_double(&h).unwrap();
        let (d2, r2) = drinfeld_double(&h2).unwrap();
        prop_assert_eq!(drinfeld_map(&d1, &r1).rank(), drinfeld_map(&d2, &r2).rank());
    }
}

#[test]
fn dual_is_an_involution_on_builtins() {
    for t in HOPF_BUILTINS {
        let h = hopf(t);
        let dd = dual_hopf(&dual_hopf(&h));
        assert!(same_structure(&dd, &h), "{t}");
        assert!(dual_hopf(&h).validate().passed(), "{t}");
    }
}

#[test]
fn integrals_are_one_dimensional_and_s_maps_left_to_right() {
    for t in HOPF_BUILTINS {
        let h = hopf(t);
        let f = h.field().clone();
        assert_eq!(left_integrals(&h).len(), 1, "{t}");
        assert_eq!(right_integrals(&h).len(), 1, "{t}");
        let sl = h.apply_antipode(&left_integral(&h).unwrap());
        for b in 0..h.dim() {
            let e = h.basis_elem(b);
            let expect: Vec<Scalar> = sl.iter().map(|c| f.mul(c, &h.counit_of(&e))).collect();
            assert_eq!(h.mul_elems(&sl, &e), expect, "{t}");
        }
    }
}

#[test]
fn zero_radical_matches_semisimplicity() {
    for t in HOPF_BUILTINS {
        let h = hopf(t);
        let b = FDAlgebra::from_hopf(&h);
        let rad = radical(&b, 0).unwrap();
        assert_eq!(rad.cols() == 0, is_semisimple(&h).unwrap(), "{t}");
    }
}

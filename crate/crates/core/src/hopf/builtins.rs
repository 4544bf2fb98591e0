//! Builtin Hopf algebras: group algebras, Taft algebras (Sweedler's algebra
//! among them) and the graded restricted quantum group gr(u_q(sl2)).

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, SparseTensor3};

use super::algebra::{sp_add, Element, HopfAlgebra, TensorElem};

/// Group algebra from a multiplication table on `0..n`.
pub fn group_algebra(field: &Field, table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<HopfAlgebra> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(Error::InvalidInput("group table must be square with entries in range".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::InvalidInput("group table has no identity".into()))?;
    let inverse: Vec<usize> = (0..n)
        .map(|g| {
            (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {g} has no inverse")))
        })
        .collect::<Result<_>>()?;
    let names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
    if names.len() != n {
        return Err(Error::ShapeMismatch("group element names".into()));
    }
    let one = field.one();
    let mul = SparseTensor3::from_entries(
        field,
        (n, n, n),
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, table[i][j], one.clone())).collect(),
    )?;
    let comul = SparseTensor3::from_entries(field, (n, n, n), (0..n).map(|i| (i, i, i, one.clone())).collect())?;
    let mut unit = vec![field.zero(); n];
    unit[identity] = field.one();
    let mut s = Matrix::zeros(field, n, n);
    for (g, &h) in inverse.iter().enumerate() {
        s.set(h, g, field.one());
    }
    HopfAlgebra::new(field, names, mul, unit, comul, vec![field.one(); n], s)
}

fn power_name(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn monomial_name(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|(b, e)| power_name(b, *e)).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Cyclic group Z/n with basis g^k.
pub fn cyclic(field: &Field, n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group of order 0".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let names = (0..n).map(|k| monomial_name(&[("g", k)])).collect();
    group_algebra(field, &table, Some(names))
}

/// Dihedral group of order 2n with basis r^k s^e at index e·n + k.
pub fn dihedral(field: &Field, n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::InvalidInput("dihedral group needs n ≥ 1".into()));
    }
    let idx = |k: usize, e: usize| e * n + k;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for e in 0..2 {
        for a in 0..n {
            for f in 0..2 {
                for b in 0..n {
                    let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    table[idx(a, e)][idx(b, f)] = idx(k, (e + f) % 2);
                }
            }
        }
    }
    let names = (0..2 * n).map(|i| monomial_name(&[("r", i % n), ("s", i / n)])).collect();
    group_algebra(field, &table, Some(names))
}

/// Symmetric group S3, basis ordered lexicographically by images (identity first).
pub fn symmetric3(field: &Field) -> Result<HopfAlgebra> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| perms.iter().map(|t| pos([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    group_algebra(field, &table, Some(names))
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i];
        }
        let parts: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Data of one algebra generator: its coproduct, antipode and counit.
struct Generator {
    elem: Element,
    coproduct: TensorElem,
    antipode: Element,
    counit: Scalar,
}

/// Builds a Hopf algebra whose multiplication is monomial (`e_i e_j` is a
/// multiple of a single basis element) and whose basis elements are products
/// of generators. Δ and ε extend multiplicatively along each word, S
/// anti-multiplicatively; the result is validated.
fn from_generators(
    field: &Field,
    names: Vec<String>,
    mul: impl Fn(usize, usize) -> Option<(usize, Scalar)>,
    gens: impl Fn(&HopfAlgebra) -> Vec<Generator>,
    words: &[Vec<usize>],
) -> Result<HopfAlgebra> {
    let n = names.len();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if let Some((k, c)) = mul(i, j) {
                triples.push((i, j, k, c));
            }
        }
    }
    let mul = SparseTensor3::from_entries(field, (n, n, n), triples)?;
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let empty = SparseTensor3::from_entries(field, (n, n, n), Vec::new())?;
    let scaffold = HopfAlgebra::new_unchecked(
        field,
        names.clone(),
        mul.clone(),
        unit.clone(),
        empty,
        vec![field.zero(); n],
        Matrix::identity(field, n),
    )?;
    let gens = gens(&scaffold);
    let mut comul = Vec::new();
    let mut counit = Vec::with_capacity(n);
    let mut s_cols = Vec::with_capacity(n);
    for (b, word) in words.iter().enumerate() {
        let mut prod = unit.clone();
        let mut delta = scaffold.tensor_unit(2);
        let mut s = unit.clone();
        let mut eps = field.one();
        for &g in word {
            prod = scaffold.mul_elems(&prod, &gens[g].elem);
            delta = scaffold.tensor_mul(2, &delta, &gens[g].coproduct);
            s = scaffold.mul_elems(&gens[g].antipode, &s);
            eps = field.mul(&eps, &gens[g].counit);
        }
        if prod != scaffold.basis_elem(b) {
            return Err(Error::InternalMismatch(format!("word for basis element {} is not normalized", names[b])));
        }
        for (idx, c) in delta {
            comul.push((b, idx / n, idx % n, c));
        }
        counit.push(eps);
        s_cols.push(s);
    }
    let comul = SparseTensor3::from_entries(field, (n, n, n), comul)?;
    let s = Matrix::from_columns(field, n, &s_cols);
    HopfAlgebra::new(field, names, mul, unit, comul, counit, s)
}

fn q_power(field: &Field, q: &Scalar, e: i64, order: u64) -> Scalar {
    field.pow(q, e.rem_euclid(order as i64) as u64)
}

fn tensor_of(n: usize, terms: &[(usize, usize, Scalar)], field: &Field) -> TensorElem {
    let mut t = TensorElem::new();
    for (a, b, c) in terms {
        sp_add(field, &mut t, a * n + b, c);
    }
    t
}

/// Taft algebra T_n(q): g^n = 1, x^n = 0, gx = q·xg, Δg = g⊗g, Δx = x⊗1 + g⊗x.
/// Basis g^i x^j sits at index j·n + i. `q` must have multiplicative order n.
pub fn taft(field: &Field, n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("Taft algebra needs n ≥ 2".into()));
    }
    let q = field.normalize(q)?;
    let order_ok = field.pow(&q, n as u64) == field.one()
        && (1..n as u64).all(|d| field.pow(&q, d) != field.one());
    if !order_ok {
        return Err(Error::InvalidInput(format!(
            "{} is not a primitive {n}-th root of unity in {field}",
            field.format_scalar(&q)
        )));
    }
    let dim = n * n;
    let names = (0..dim).map(|i| monomial_name(&[("g", i % n), ("x", i / n)])).collect();
    let nn = n as u64;
    let mul = |i: usize, j: usize| {
        let (a, b, c, d) = (i % n, i / n, j % n, j / n);
        if b + d >= n {
            return None;
        }
        // x^b g^c = q^{-bc} g^c x^b
        let coeff = q_power(field, &q, -((b * c) as i64), nn);
        Some(((b + d) * n + (a + c) % n, coeff))
    };
    let words: Vec<Vec<usize>> = (0..dim).map(|i| [vec![0; i % n], vec![1; i / n]].concat()).collect();
    let gens = |h: &HopfAlgebra| {
        let (g, x, g_inv) = (1, n, n - 1);
        let one = field.one();
        let g_inv_x = h.mul_elems(&h.basis_elem(g_inv), &h.basis_elem(x));
        vec![
            Generator {
                elem: h.basis_elem(g),
                coproduct: tensor_of(dim, &[(g, g, one.clone())], field),
                antipode: h.basis_elem(g_inv),
                counit: one.clone(),
            },
            Generator {
                elem: h.basis_elem(x),
                coproduct: tensor_of(dim, &[(x, 0, one.clone()), (g, x, one.clone())], field),
                antipode: g_inv_x.iter().map(|c| field.neg(c)).collect(),
                counit: field.zero(),
            },
        ]
    };
    from_generators(field, names, mul, gens, &words)
}

/// Sweedler's 4-dimensional algebra T_2(-1) over Q, basis 1, g, x, gx.
pub fn sweedler() -> HopfAlgebra {
    let q = Field::Rationals;
    taft(&q, 2, &q.from_i64(-1)).expect("Sweedler's algebra is valid")
}

/// Graded restricted quantum group gr(u_q(sl2)) of dimension p³:
/// K^p = 1, E^p = F^p = 0, KEK⁻¹ = q²E, KFK⁻¹ = q⁻²F, EF = FE,
/// Δ(K) = K⊗K, Δ(E) = E⊗K + 1⊗E, Δ(F) = F⊗1 + K⁻¹⊗F.
/// Basis K^a E^b F^c at index a·p² + b·p + c; `q` must have order p, p odd.
pub fn gr_uq_sl2(field: &Field, p: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidInput("gr(u_q(sl2)) needs an odd p ≥ 3".into()));
    }
    let q = field.normalize(q)?;
    let pp = p as u64;
    if field.pow(&q, pp) != field.one() || (1..pp).any(|d| field.pow(&q, d) == field.one()) {
        return Err(Error::InvalidInput(format!(
            "{} is not a primitive {p}-th root of unity in {field}",
            field.format_scalar(&q)
        )));
    }
    let dim = p * p * p;
    let split = |i: usize| (i / (p * p), (i / p) % p, i % p);
    let names = (0..dim)
        .map(|i| {
            let (a, b, c) = split(i);
            monomial_name(&[("K", a), ("E", b), ("F", c)])
        })
        .collect();
    let mul = |i: usize, j: usize| {
        let (a, b, c) = split(i);
        let (d, e, f) = split(j);
        if b + e >= p || c + f >= p {
            return None;
        }
        let exp = 2 * (c * d) as i64 - 2 * (b * d) as i64;
        Some((((a + d) % p) * p * p + (b + e) * p + (c + f), q_power(field, &q, exp, pp)))
    };
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|i| {
            let (a, b, c) = split(i);
            [vec![0; a], vec![1; b], vec![2; c]].concat()
        })
        .collect();
    let gens = |h: &HopfAlgebra| {
        let (k, e, f, k_inv) = (p * p, p, 1, (p - 1) * p * p);
        let one = field.one();
        let neg = |v: Element| -> Element { v.iter().map(|c| field.neg(c)).collect() };
        vec![
            Generator {
                elem: h.basis_elem(k),
                coproduct: tensor_of(dim, &[(k, k, one.clone())], field),
                antipode: h.basis_elem(k_inv),
                counit: one.clone(),
            },
            Generator {
                elem: h.basis_elem(e),
                coproduct: tensor_of(dim, &[(e, k, one.clone()), (0, e, one.clone())], field),
                antipode: neg(h.mul_elems(&h.basis_elem(e), &h.basis_elem(k_inv))),
                counit: field.zero(),
            },
            Generator {
                elem: h.basis_elem(f),
                coproduct: tensor_of(dim, &[(f, 0, one.clone()), (k_inv, f, one.clone())], field),
                antipode: neg(h.mul_elems(&h.basis_elem(k), &h.basis_elem(f))),
                counit: field.zero(),
            },
        ]
    };
    from_generators(field, names, mul, gens, &words)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebras_validate() {
        let q = Field::Rationals;
        assert_eq!(cyclic(&q, 2).unwrap().dim(), 2);
        assert_eq!(dihedral(&q, 4).unwrap().dim(), 8);
        let s3 = symmetric3(&Field::prime(7).unwrap()).unwrap();
        assert_eq!(s3.basis_names()[0], "()");
        assert_eq!(s3.basis_names()[3], "(1 2 3)");
    }

    #[test]
    fn sweedler_structure() {
        let h = sweedler();
        assert_eq!(h.basis_names(), ["1", "g", "x", "gx"]);
        // gx = -xg
        let xg = h.mul_elems(&h.elem_from_names(&[("x", 1)]), &h.elem_from_names(&[("g", 1)]));
        assert_eq!(xg, h.elem_from_names(&[("gx", -1)]));
        // S(x) = -gx
        assert_eq!(h.apply_antipode(&h.elem_from_names(&[("x", 1)])), h.elem_from_names(&[("gx", -1)]));
    }

    #[test]
    fn taft_and_quantum_group_validate() {
        let f7 = Field::prime(7).unwrap();
        let t = taft(&f7, 3, &Scalar::Residue(2)).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(taft(&f7, 3, &Scalar::Residue(3)).is_err());
        let u = gr_uq_sl2(&f7, 3, &Scalar::Residue(2)).unwrap();
        assert_eq!(u.dim(), 27);
        assert_eq!(u.basis_names()[9], "K");
    }

    #[test]
    fn corrupted_sweedler_fails_associativity() {
        let h = sweedler();
        let f = h.field().clone();
        let bad = h.mul_tensor().with_entry(&f, 2, 1, 3, f.from_i64(5));
        let broken = HopfAlgebra::new_unchecked(
            &f,
            h.basis_names().to_vec(),
            bad,
            h.unit().to_vec(),
            h.comul_tensor().clone(),
            h.counit().to_vec(),
            h.antipode().clone(),
        )
        .unwrap();
        let r = broken.validate();
        let assoc = r.find("associativity").unwrap();
        assert!(!assoc.passed());
        assert!(assoc.witnesses.contains_key("witness_basis_indices"));
    }
}

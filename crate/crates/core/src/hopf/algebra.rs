use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{tensor_index, tensor_unindex, Matrix, SparseTensor3};
use crate::report::Report;

/// Coefficient vector of an element of `H` in the structure basis.
pub type Element = Vec<Scalar>;

/// Coefficient vector of a functional on `H` in the dual basis.
pub type Functional = Vec<Scalar>;

/// Sparse element of `H^{⊗k}`, keyed by the flat tensor index (first factor
/// most significant). Zero coefficients are never stored.
pub type TensorElem = BTreeMap<usize, Scalar>;

/// Finite-dimensional Hopf algebra given by structure constants.
///
/// Values built through [`HopfAlgebra::new`] have passed [`HopfAlgebra::validate`].
/// [`HopfAlgebra::new_unchecked`] exists for callers that validate themselves
/// (builtins, tests that corrupt data on purpose).
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    mul: SparseTensor3,
    unit: Vec<Scalar>,
    comul: SparseTensor3,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inv: OnceLock<Matrix>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.basis == other.basis
            && self.mul == other.mul
            && self.unit == other.unit
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

pub(crate) fn sp_add(field: &Field, acc: &mut TensorElem, idx: usize, c: &Scalar) {
    if field.is_zero(c) {
        return;
    }
    match acc.get_mut(&idx) {
        Some(v) => {
            field.add_assign(v, c);
            if field.is_zero(v) {
                acc.remove(&idx);
            }
        }
        None => {
            acc.insert(idx, c.clone());
        }
    }
}

impl HopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: &Field,
        basis: Vec<String>,
        mul: SparseTensor3,
        unit: Vec<Scalar>,
        comul: SparseTensor3,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let h = Self::new_unchecked(field, basis, mul, unit, comul, counit, antipode)?;
        let report = h.validate();
        if !report.passed() {
            let failed: Vec<String> = report
                .subchecks
                .iter()
                .filter(|s| !s.passed())
                .map(|s| s.check.clone())
                .collect();
            return Err(Error::InvalidInput(format!("Hopf axioms fail: {}", failed.join(", "))));
        }
        Ok(h)
    }

    /// Checks shapes only; the axioms are not verified.
    #[allow(clippy::too_many_arguments)]
    pub fn new_unchecked(
        field: &Field,
        basis: Vec<String>,
        mul: SparseTensor3,
        unit: Vec<Scalar>,
        comul: SparseTensor3,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let shape_err = |what: &str| Err(Error::ShapeMismatch(format!("{what} does not match dimension {n}")));
        if n == 0 {
            return Err(Error::InvalidInput("Hopf algebra of dimension 0".into()));
        }
        if mul.dims() != (n, n, n) {
            return shape_err("multiplication tensor");
        }
        if comul.dims() != (n, n, n) {
            return shape_err("comultiplication tensor");
        }
        if unit.len() != n {
            return shape_err("unit");
        }
        if counit.len() != n {
            return shape_err("counit");
        }
        if antipode.rows() != n || antipode.cols() != n {
            return shape_err("antipode");
        }
        if antipode.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), antipode.field().to_string()));
        }
        Ok(HopfAlgebra {
            field: field.clone(),
            dim: n,
            basis,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mul_tensor(&self) -> &SparseTensor3 {
        &self.mul
    }

    pub fn comul_tensor(&self) -> &SparseTensor3 {
        &self.comul
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Matrix of S acting on coefficient columns: column j holds S(e_j).
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &Matrix {
        self.antipode_inv.get_or_init(|| {
            self.antipode.inverse().expect("the antipode of a finite-dimensional Hopf algebra is bijective")
        })
    }

    /// The basis vector e_i.
    pub fn basis_elem(&self, i: usize) -> Element {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_elem(&self) -> Element {
        vec![self.field.zero(); self.dim]
    }

    pub fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for an algebra of dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Index of the basis element with the given name.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Element given as a combination of basis names, e.g. `&[("x", 1), ("gx", 1)]`.
    pub fn elem_from_names(&self, terms: &[(&str, i64)]) -> Element {
        let mut v = self.zero_elem();
        for (name, c) in terms {
            let i = self.basis_index(name).unwrap_or_else(|| panic!("no basis element {name}"));
            self.field.add_assign(&mut v[i], &self.field.from_i64(*c));
        }
        v
    }

    pub fn mul_elems(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let f = &self.field;
        let mut out = self.zero_elem();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.mul.slice(i, j) {
                    f.mul_add_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Left multiplication by `x` as a matrix (column j is x·e_j).
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul_elems(x, &self.basis_elem(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Right multiplication by `x` as a matrix (column j is e_j·x).
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul_elems(&self.basis_elem(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Element {
        self.antipode.mul_vec(x)
    }

    pub fn apply_antipode_inv(&self, x: &[Scalar]) -> Element {
        self.antipode_inverse().mul_vec(x)
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        self.eval_functional(&self.counit, x)
    }

    pub fn eval_functional(&self, f: &[Scalar], x: &[Scalar]) -> Scalar {
        let fld = &self.field;
        let mut acc = fld.zero();
        for (a, b) in f.iter().zip(x) {
            if !fld.is_zero(a) && !fld.is_zero(b) {
                fld.mul_add_assign(&mut acc, a, b);
            }
        }
        acc
    }

    /// Two-sided inverse, if `x` is invertible.
    pub fn inverse_elem(&self, x: &[Scalar]) -> Option<Element> {
        let l = self.left_mult_matrix(x);
        let rhs = Matrix::column_vector(&self.field, &self.unit);
        let y = l.solve(&rhs).ok()??.column(0);
        (self.mul_elems(&y, x) == self.unit).then_some(y)
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        let mut xx = TensorElem::new();
        for (i, a) in x.iter().enumerate() {
            for (j, b) in x.iter().enumerate() {
                sp_add(&self.field, &mut xx, i * self.dim + j, &self.field.mul(a, b));
            }
        }
        self.coproduct(x) == xx && self.field.is_one(&self.counit_of(x))
    }

    pub fn commutes_with_all(&self, x: &[Scalar]) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_elem(i);
            self.mul_elems(x, &e) == self.mul_elems(&e, x)
        })
    }

    /// Δ(x) as a sparse element of H⊗H.
    pub fn coproduct(&self, x: &[Scalar]) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.comul.slice(i, j) {
                    sp_add(f, &mut out, j * n + k, &f.mul(a, c));
                }
            }
        }
        out
    }

    pub fn coproduct_basis(&self, i: usize) -> TensorElem {
        let mut out = TensorElem::new();
        for j in 0..self.dim {
            for (k, c) in self.comul.slice(i, j) {
                out.insert(j * self.dim + k, c.clone());
            }
        }
        out
    }

    /// (Δ⊗id)Δ(e_i) as a sparse element of H⊗H⊗H.
    pub fn coproduct2_basis(&self, i: usize) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for j in 0..n {
            for (k, c) in self.comul.slice(i, j) {
                for a in 0..n {
                    for (b, d) in self.comul.slice(j, a) {
                        sp_add(f, &mut out, (a * n + b) * n + k, &f.mul(c, d));
                    }
                }
            }
        }
        out
    }

    /// Product in `H^{⊗k}` of two sparse tensors.
    pub fn tensor_mul(&self, k: usize, x: &TensorElem, y: &TensorElem) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for (&ix, a) in x {
            let ia = tensor_unindex(n, k, ix);
            for (&iy, b) in y {
                let ib = tensor_unindex(n, k, iy);
                let mut partial: Vec<(usize, Scalar)> = vec![(0, f.mul(a, b))];
                for s in 0..k {
                    let sl = self.mul.slice(ia[s], ib[s]);
                    let mut next = Vec::with_capacity(partial.len() * sl.len());
                    for (idx, c) in &partial {
                        for (m, d) in sl {
                            next.push((idx * n + m, f.mul(c, d)));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (idx, c) in partial {
                    sp_add(f, &mut out, idx, &c);
                }
            }
        }
        out
    }

    /// 1^{⊗k}.
    pub fn tensor_unit(&self, k: usize) -> TensorElem {
        let f = &self.field;
        let mut out = TensorElem::new();
        out.insert(0, f.one());
        for _ in 0..k {
            let mut next = TensorElem::new();
            for (idx, c) in &out {
                for (m, u) in self.unit.iter().enumerate() {
                    sp_add(f, &mut next, idx * self.dim + m, &f.mul(c, u));
                }
            }
            out = next;
        }
        out
    }

    /// Applies a linear map to factor `slot` of a k-fold tensor.
    pub fn tensor_apply(&self, k: usize, slot: usize, map: &Matrix, x: &TensorElem) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for (&ix, c) in x {
            let mut idx = tensor_unindex(n, k, ix);
            let col = idx[slot];
            for r in 0..map.rows() {
                let m = map.get(r, col);
                if f.is_zero(m) {
                    continue;
                }
                idx[slot] = r;
                sp_add(f, &mut out, tensor_index(n, &idx), &f.mul(c, m));
            }
        }
        out
    }

    /// Reorders tensor factors: output factor `s` is input factor `perm[s]`.
    pub fn tensor_permute(&self, k: usize, perm: &[usize], x: &TensorElem) -> TensorElem {
        let n = self.dim;
        x.iter()
            .map(|(&ix, c)| {
                let idx = tensor_unindex(n, k, ix);
                let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                (tensor_index(n, &out), c.clone())
            })
            .collect()
    }

    /// Inserts a unit factor at position `slot` of a k-fold tensor.
    pub fn tensor_insert_unit(&self, k: usize, slot: usize, x: &TensorElem) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for (&ix, c) in x {
            let idx = tensor_unindex(n, k, ix);
            for (m, u) in self.unit.iter().enumerate() {
                if f.is_zero(u) {
                    continue;
                }
                let mut full = idx.clone();
                full.insert(slot, m);
                sp_add(f, &mut out, tensor_index(n, &full), &f.mul(c, u));
            }
        }
        out
    }

    /// Applies Δ to factor `slot` of a k-fold tensor, giving a (k+1)-fold one.
    pub fn tensor_coproduct_at(&self, k: usize, slot: usize, x: &TensorElem) -> TensorElem {
        let f = &self.field;
        let n = self.dim;
        let mut out = TensorElem::new();
        for (&ix, c) in x {
            let idx = tensor_unindex(n, k, ix);
            for (&d, v) in &self.coproduct_basis(idx[slot]) {
                let mut full = idx.clone();
                full[slot] = d / n;
                full.insert(slot + 1, d % n);
                sp_add(f, &mut out, tensor_index(n, &full), &f.mul(c, v));
            }
        }
        out
    }

    /// m(S⊗id)Δ(e_i) and m(id⊗S)Δ(e_i).
    fn antipode_sides(&self, i: usize) -> (Element, Element) {
        let f = &self.field;
        let mut left = self.zero_elem();
        let mut right = self.zero_elem();
        for j in 0..self.dim {
            for (k, c) in self.comul.slice(i, j) {
                let sj = self.antipode.column(j);
                let sk = self.antipode.column(*k);
                let l = self.mul_elems(&sj, &self.basis_elem(*k));
                let r = self.mul_elems(&self.basis_elem(j), &sk);
                for t in 0..self.dim {
                    f.mul_add_assign(&mut left[t], c, &l[t]);
                    f.mul_add_assign(&mut right[t], c, &r[t]);
                }
            }
        }
        (left, right)
    }

    /// Checks every Hopf axiom exactly; each failed axiom carries a witness.
    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim;
        let mut subs = Vec::new();

        // associativity
        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = TensorElem::new();
                    for (m, c) in self.mul.slice(i, j) {
                        for (t, d) in self.mul.slice(*m, k) {
                            sp_add(f, &mut lhs, *t, &f.mul(c, d));
                        }
                    }
                    let mut rhs = TensorElem::new();
                    for (m, c) in self.mul.slice(j, k) {
                        for (t, d) in self.mul.slice(i, *m) {
                            sp_add(f, &mut rhs, *t, &f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        witness = Some((i, j, k));
                        break 'assoc;
                    }
                }
            }
        }
        subs.push(axiom("associativity", witness.map(|(i, j, k)| vec![i, j, k])));

        let one_fails = (0..n).find(|&i| {
            let e = self.basis_elem(i);
            self.mul_elems(&self.unit, &e) != e || self.mul_elems(&e, &self.unit) != e
        });
        subs.push(axiom("unit", one_fails.map(|i| vec![i])));

        let coassoc_fails = (0..n).find(|&i| {
            let d = self.coproduct_basis(i);
            self.tensor_coproduct_at(2, 0, &d) != self.tensor_coproduct_at(2, 1, &d)
        });
        subs.push(axiom("coassociativity", coassoc_fails.map(|i| vec![i])));

        let counit_fails = (0..n).find(|&i| {
            let e = self.basis_elem(i);
            let mut left = self.zero_elem();
            let mut right = self.zero_elem();
            for j in 0..n {
                for (k, c) in self.comul.slice(i, j) {
                    f.mul_add_assign(&mut left[*k], &self.counit[j], c);
                    f.mul_add_assign(&mut right[j], &self.counit[*k], c);
                }
            }
            left != e || right != e
        });
        subs.push(axiom("counit", counit_fails.map(|i| vec![i])));

        let deltas: Vec<TensorElem> = (0..n).map(|i| self.coproduct_basis(i)).collect();
        let mut witness = None;
        'mult: for i in 0..n {
            for j in 0..n {
                let mut lhs = TensorElem::new();
                for (m, c) in self.mul.slice(i, j) {
                    for (idx, d) in &deltas[*m] {
                        sp_add(f, &mut lhs, *idx, &f.mul(c, d));
                    }
                }
                if lhs != self.tensor_mul(2, &deltas[i], &deltas[j]) {
                    witness = Some((i, j));
                    break 'mult;
                }
            }
        }
        let unit_delta = {
            let mut d = TensorElem::new();
            for (m, u) in self.unit.iter().enumerate() {
                for (idx, c) in &deltas[m] {
                    sp_add(f, &mut d, *idx, &f.mul(u, c));
                }
            }
            d == self.tensor_unit(2)
        };
        subs.push(axiom(
            "comultiplication_multiplicative",
            witness.map(|(i, j)| vec![i, j]).or((!unit_delta).then(Vec::new)),
        ));

        let mut eps_witness = None;
        'eps: for i in 0..n {
            for j in 0..n {
                let mut v = f.zero();
                for (m, c) in self.mul.slice(i, j) {
                    f.mul_add_assign(&mut v, c, &self.counit[*m]);
                }
                if v != f.mul(&self.counit[i], &self.counit[j]) {
                    eps_witness = Some(vec![i, j]);
                    break 'eps;
                }
            }
        }
        if eps_witness.is_none() && !f.is_one(&self.counit_of(&self.unit)) {
            eps_witness = Some(Vec::new());
        }
        subs.push(axiom("counit_multiplicative", eps_witness));

        let anti_fails = (0..n).find(|&i| {
            let (l, r) = self.antipode_sides(i);
            let expected: Element = self.unit.iter().map(|u| f.mul(u, &self.counit[i])).collect();
            l != expected || r != expected
        });
        subs.push(axiom("antipode", anti_fails.map(|i| vec![i])));

        Report::aggregate("validate_hopf", subs).with("dim", n).with("field", self.field.to_string())
    }
}

fn axiom(name: &str, witness: Option<Vec<usize>>) -> Report {
    match witness {
        None => Report::pass(name),
        Some(w) => Report::from_bool(name, false).with("witness_basis_indices", w),
    }
}

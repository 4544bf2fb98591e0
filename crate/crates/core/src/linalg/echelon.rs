use crate::field::{Field, Scalar};

/// Incrementally built basis of a subspace, kept in echelon form.
///
/// Rows are reduced against earlier rows in insertion order, so every row has
/// a unique pivot that is zero in all later rows. When vectors are inserted
/// through [`EchelonBasis::insert_tracked`], each row also remembers how it is
/// expressed in terms of the inserted vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Scalar>>,
    inserted: usize,
}

impl EchelonBasis {
    pub fn new(field: &Field, len: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis, returning the residual and the
    /// coefficients used for each row.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let f = &self.field;
        let mut r = v.to_vec();
        let mut used = vec![f.zero(); self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = r[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            for (x, y) in r.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    f.mul_add_assign(x, &neg, y);
                }
            }
            used[k] = c;
        }
        (r, used)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let (r, _) = self.reduce(v);
        r.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` if it is independent of the current basis; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        self.push_reduced(v, None)
    }

    /// Like [`EchelonBasis::insert`], recording `v` as the next tracked input vector.
    pub fn insert_tracked(&mut self, v: &[Scalar]) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        self.push_reduced(v, Some(idx))
    }

    fn push_reduced(&mut self, v: &[Scalar], tracked: Option<usize>) -> bool {
        assert_eq!(v.len(), self.len);
        let f = self.field.clone();
        let (mut r, used) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        if let Some(idx) = tracked {
            // combo(new row) = (e_idx - Σ used_k combo_k) / pivot
            let mut combo = vec![f.zero(); idx + 1];
            combo[idx] = f.one();
            for (c, row_combo) in used.iter().zip(&self.combos) {
                if f.is_zero(c) {
                    continue;
                }
                let neg = f.neg(c);
                for (x, y) in combo.iter_mut().zip(row_combo) {
                    f.mul_add_assign(x, &neg, y);
                }
            }
            for x in combo.iter_mut() {
                *x = f.mul(x, &inv);
            }
            self.combos.push(combo);
        } else {
            self.combos.push(Vec::new());
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// If `v` lies in the span of the tracked inputs, the coefficients
    /// expressing `v` in terms of them.
    pub fn dependency(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = &self.field;
        let (r, used) = self.reduce(v);
        if !r.iter().all(|x| f.is_zero(x)) {
            return None;
        }
        let mut out = vec![f.zero(); self.inserted];
        for (c, combo) in used.iter().zip(&self.combos) {
            if f.is_zero(c) {
                continue;
            }
            for (x, y) in out.iter_mut().zip(combo) {
                f.mul_add_assign(x, c, y);
            }
        }
        Some(out)
    }

    /// Coordinates of `v` with respect to the current rows, if `v` is in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, used) = self.reduce(v);
        r.iter().all(|x| self.field.is_zero(x)).then_some(used)
    }
}

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Sparse order-3 tensor of structure constants, stored by `(i, j)` slice.
///
/// For a multiplication tensor, `slice(i, j)` lists the nonzero `(k, c)` with
/// `e_i e_j = Σ c e_k`; for a comultiplication tensor, `slice(i, j)` lists the
/// `(k, c)` in `Δ(e_i) = Σ c e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor3 {
    dims: (usize, usize, usize),
    offsets: Vec<usize>,
    entries: Vec<(usize, Scalar)>,
}

impl SparseTensor3 {
    /// Builds from `(i, j, k, value)` triples; zeros are dropped, duplicates rejected.
    pub fn from_entries(
        field: &Field,
        dims: (usize, usize, usize),
        mut triples: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        for t in &triples {
            if t.0 >= dims.0 || t.1 >= dims.1 || t.2 >= dims.2 {
                return Err(Error::InvalidInput(format!(
                    "tensor index ({}, {}, {}) out of range {:?}",
                    t.0, t.1, t.2, dims
                )));
            }
        }
        triples.retain(|t| !field.is_zero(&t.3));
        triples.sort_by_key(|t| (t.0, t.1, t.2));
        if let Some(w) = triples.windows(2).find(|w| (w[0].0, w[0].1, w[0].2) == (w[1].0, w[1].1, w[1].2)) {
            return Err(Error::InvalidInput(format!(
                "duplicate tensor index ({}, {}, {})",
                w[0].0, w[0].1, w[0].2
            )));
        }
        let mut offsets = vec![0usize; dims.0 * dims.1 + 1];
        for t in &triples {
            offsets[t.0 * dims.1 + t.1 + 1] += 1;
        }
        for s in 1..offsets.len() {
            offsets[s] += offsets[s - 1];
        }
        let entries = triples.into_iter().map(|t| (t.2, t.3)).collect();
        Ok(SparseTensor3 { dims, offsets, entries })
    }

    /// Builds from a dense closure over all index triples.
    pub fn from_slices(
        field: &Field,
        dims: (usize, usize, usize),
        mut slice: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let mut offsets = Vec::with_capacity(dims.0 * dims.1 + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                let v = slice(i, j);
                debug_assert_eq!(v.len(), dims.2);
                for (k, c) in v.into_iter().enumerate() {
                    if !field.is_zero(&c) {
                        entries.push((k, c));
                    }
                }
                offsets.push(entries.len());
            }
        }
        SparseTensor3 { dims, offsets, entries }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn slice(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        let s = i * self.dims.1 + j;
        &self.entries[self.offsets[s]..self.offsets[s + 1]]
    }

    pub fn get(&self, field: &Field, i: usize, j: usize, k: usize) -> Scalar {
        self.slice(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| field.zero())
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        (0..self.dims.0).flat_map(move |i| {
            (0..self.dims.1)
                .flat_map(move |j| self.slice(i, j).iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }

    /// Replaces one entry (used to build corrupted copies in tests and checks).
    pub fn with_entry(&self, field: &Field, i: usize, j: usize, k: usize, value: Scalar) -> Self {
        let mut triples: Vec<(usize, usize, usize, Scalar)> = self
            .triples()
            .filter(|t| (t.0, t.1, t.2) != (i, j, k))
            .map(|(a, b, c, v)| (a, b, c, v.clone()))
            .collect();
        triples.push((i, j, k, value));
        Self::from_entries(field, self.dims, triples).expect("indices already validated")
    }
}

/// Dense coefficient vector of an element of `A^{⊗k}` for `dim A = n`,
/// indexed by the global convention (first factor most significant).
pub fn tensor_index(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn tensor_unindex(n: usize, k: usize, mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
    out
}

use serde::{Deserialize, Serialize};

use super::SparseMat;

/// Labelled tensor factors. Flattening is row-major on the factor indices:
/// the leftmost factor varies slowest.
///
/// Regrouping a tensor word (moving brackets) never changes the flattened
/// data, so a shape carries no bracketing information.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct TensorShape {
    factors: Vec<(String, usize)>,
}

impl TensorShape {
    pub fn new(factors: Vec<(String, usize)>) -> Self {
        TensorShape { factors }
    }

    pub fn single(label: &str, dim: usize) -> Self {
        TensorShape { factors: vec![(label.to_string(), dim)] }
    }

    pub fn factors(&self) -> &[(String, usize)] {
        &self.factors
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.1).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.1).product()
    }

    pub fn concat(&self, other: &TensorShape) -> TensorShape {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        TensorShape { factors }
    }

    pub fn push(mut self, label: &str, dim: usize) -> TensorShape {
        self.factors.push((label.to_string(), dim));
        self
    }

    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors.iter().map(|f| f.0.as_str()).collect::<Vec<_>>().join("⊗")
    }
}

/// Flat index of a multi-index under the global flattening.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

/// Permutation of tensor legs: output leg `j` is input leg `perm[j]`.
///
/// Maps `V_0 ⊗ … ⊗ V_{k-1}` to `V_{perm[0]} ⊗ … ⊗ V_{perm[k-1]}`.
pub fn permute_legs(dims: &[usize], perm: &[usize]) -> SparseMat {
    assert_eq!(dims.len(), perm.len(), "permutation arity mismatch");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < perm.len() && !seen[p], "not a permutation: {perm:?}");
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let targets = (0..total)
        .map(|src| {
            let idx = multi_index(dims, src);
            let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            flat_index(&out_dims, &out)
        })
        .collect::<Vec<_>>();
    SparseMat::from_permutation(&targets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_round_trip() {
        let dims = [2, 3, 4];
        for f in 0..24 {
            assert_eq!(flat_index(&dims, &multi_index(&dims, f)), f);
        }
        assert_eq!(flat_index(&dims, &[1, 0, 0]), 12);
    }

    #[test]
    fn swap_two_legs() {
        let p = permute_legs(&[2, 3], &[1, 0]).to_dense();
        // e_1 ⊗ e_2 (flat 5) goes to e_2 ⊗ e_1 (flat 2*2+1 = 5 in dims [3,2])
        assert_eq!(p.get(5, 5).to_string(), "1");
        // e_0 ⊗ e_1 (flat 1) goes to e_1 ⊗ e_0 (flat 2)
        assert!(p.get(2, 1).is_one());
    }

    #[test]
    fn shape_metadata() {
        let s = TensorShape::single("M", 2).push("A", 3).push("A", 3);
        assert_eq!(s.total_dim(), 18);
        assert_eq!(s.label(), "M⊗A⊗A");
    }
}

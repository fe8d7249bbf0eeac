use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use super::echelon::{Echelon, SparseVec};
use super::{Mat, Scalar};

/// Column-compressed sparse matrix. Each column is sorted by row index and
/// holds no explicit zeros, so derived equality is exact matrix equality.
///
/// Used for maps between tensor powers, where most entries vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<SparseVec>,
}

const PAR_THRESHOLD: usize = 256;

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: (0..n).map(|i| vec![(i, Scalar::one())]).collect() }
    }

    /// Permutation matrix sending basis vector `src` to `targets[src]`.
    pub fn from_permutation(targets: &[usize]) -> Self {
        SparseMat { rows: targets.len(), cols: targets.iter().map(|&t| vec![(t, Scalar::one())]).collect() }
    }

    /// Columns must already be sorted by row and free of zeros.
    pub(crate) fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| e.0 < rows && !e.1.is_zero())));
        SparseMat { rows, cols }
    }

    /// Accepts columns in any order and with repeated rows; entries are summed.
    pub fn from_unsorted_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        let cols = cols.into_iter().map(normalize).collect();
        SparseMat { rows, cols }
    }

    pub fn from_dense(m: &Mat) -> Self {
        let cols = (0..m.cols())
            .map(|c| (0..m.rows()).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect())
            .collect();
        SparseMat { rows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.rows, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.cols[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols.len() && self.cols.iter().enumerate().all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    /// First `(row, col)` where the matrices differ.
    pub fn first_difference(&self, other: &SparseMat) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Some((usize::MAX, usize::MAX));
        }
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (Some(x), Some(y)) if x == y => {
                        i += 1;
                        j += 1;
                    }
                    (Some(x), Some(y)) => return Some((x.0.min(y.0), c)),
                    (Some(x), None) => return Some((x.0, c)),
                    (None, Some(y)) => return Some((y.0, c)),
                    (None, None) => unreachable!("columns differ"),
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        SparseMat { rows: self.cols.len(), cols }
    }

    pub fn scale(&self, s: &Scalar) -> SparseMat {
        if s.is_zero() {
            return SparseMat::zeros(self.rows, self.cols());
        }
        SparseMat { rows: self.rows, cols: self.cols.iter().map(|c| c.iter().map(|(r, v)| (*r, v * s)).collect()).collect() }
    }

    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let rows = self.rows * other.rows;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (ra, va) in a {
                    for (rb, vb) in b {
                        col.push((ra * other.rows + rb, va * vb));
                    }
                }
                cols.push(col);
            }
        }
        SparseMat { rows, cols }
    }

    /// `I_n ⊗ self`.
    pub fn lift_right(&self, n: usize) -> SparseMat {
        SparseMat::identity(n).kron(self)
    }

    /// `self ⊗ I_n`.
    pub fn lift_left(&self, n: usize) -> SparseMat {
        self.kron(&SparseMat::identity(n))
    }

    pub fn vstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols(), other.cols(), "vstack column mismatch");
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().cloned().chain(b.iter().map(|(r, v)| (r + self.rows, v.clone()))).collect())
            .collect();
        SparseMat { rows: self.rows + other.rows, cols }
    }

    pub fn hstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        SparseMat { rows: self.rows, cols }
    }

    pub fn select_cols(&self, idx: &[usize]) -> SparseMat {
        SparseMat { rows: self.rows, cols: idx.iter().map(|&c| self.cols[c].clone()).collect() }
    }

    pub fn select_rows(&self, idx: &[usize]) -> SparseMat {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, &r) in idx.iter().enumerate() {
            pos[r] = k;
        }
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let picked: SparseVec = c.iter().filter(|(r, _)| pos[*r] != usize::MAX).map(|(r, v)| (pos[*r], v.clone())).collect();
                normalize(picked)
            })
            .collect();
        SparseMat { rows: idx.len(), cols }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for col in &self.cols {
            e.insert(col);
        }
        e.rank()
    }

    /// Null-space basis together with the free column indices; the rows of
    /// the basis at those indices form an identity block.
    pub fn kernel(&self) -> (SparseMat, Vec<usize>) {
        let t = self.transpose();
        let mut e = Echelon::new(self.cols());
        for row in &t.cols {
            e.insert(row);
        }
        e.into_rref().kernel()
    }

    pub fn kernel_basis(&self) -> SparseMat {
        self.kernel().0
    }

    fn mul_col(&self, col: &[(usize, Scalar)], acc: &mut Vec<Scalar>, touched: &mut Vec<usize>) -> SparseVec {
        for (k, v) in col {
            for (i, a) in &self.cols[*k] {
                if acc[*i].is_zero() {
                    touched.push(*i);
                }
                acc[*i] += &(a * v);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut out = Vec::with_capacity(touched.len());
        for &i in touched.iter() {
            let v = std::mem::take(&mut acc[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        touched.clear();
        out
    }

    fn product(&self, rhs: &SparseMat) -> SparseMat {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch in product: {}x{} * {}x{}", self.rows, self.cols(), rhs.rows, rhs.cols());
        let cols = if rhs.cols() * self.rows >= PAR_THRESHOLD * PAR_THRESHOLD {
            rhs.cols
                .par_iter()
                .map_init(
                    || (vec![Scalar::zero(); self.rows], Vec::new()),
                    |(acc, touched), col| self.mul_col(col, acc, touched),
                )
                .collect()
        } else {
            let mut acc = vec![Scalar::zero(); self.rows];
            let mut touched = Vec::new();
            rhs.cols.iter().map(|col| self.mul_col(col, &mut acc, &mut touched)).collect()
        };
        SparseMat { rows: self.rows, cols }
    }

    fn combine(&self, rhs: &SparseMat, sign: bool) -> SparseMat {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()), "shape mismatch in sum");
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ra = a.get(i).map_or(usize::MAX, |e| e.0);
                    let rb = b.get(j).map_or(usize::MAX, |e| e.0);
                    if ra < rb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if rb < ra {
                        out.push((rb, if sign { b[j].1.clone() } else { -&b[j].1 }));
                        j += 1;
                    } else {
                        let v = if sign { &a[i].1 + &b[j].1 } else { &a[i].1 - &b[j].1 };
                        if !v.is_zero() {
                            out.push((ra, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseMat { rows: self.rows, cols }
    }
}

fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (r, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += &x,
            _ => out.push((r, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl Mul for &SparseMat {
    type Output = SparseMat;

    fn mul(self, rhs: &SparseMat) -> SparseMat {
        self.product(rhs)
    }
}

impl Add for &SparseMat {
    type Output = SparseMat;

    fn add(self, rhs: &SparseMat) -> SparseMat {
        self.combine(rhs, true)
    }
}

impl Sub for &SparseMat {
    type Output = SparseMat;

    fn sub(self, rhs: &SparseMat) -> SparseMat {
        self.combine(rhs, false)
    }
}

impl Neg for &SparseMat {
    type Output = SparseMat;

    fn neg(self) -> SparseMat {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(max: usize) -> impl Strategy<Value = Mat> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], r * c)
                .prop_map(move |v| Mat::new(r, c, v.into_iter().map(Scalar::from_int).collect()))
        })
    }

    #[test]
    fn permutation_columns() {
        let p = SparseMat::from_permutation(&[2, 0, 1]);
        assert!(p.get(2, 0).is_one());
        assert!((&p * &(&p * &p)).is_identity());
    }

    #[test]
    fn first_difference_reports_position() {
        let a = SparseMat::identity(3);
        let mut d = a.to_dense();
        d.set(1, 2, Scalar::from_int(5));
        assert_eq!(a.first_difference(&SparseMat::from_dense(&d)), Some((1, 2)));
        assert_eq!(a.first_difference(&a), None);
    }

    proptest! {
        #[test]
        fn agrees_with_dense(a in dense(4), b in dense(4)) {
            let (sa, sb) = (a.to_sparse(), b.to_sparse());
            prop_assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
            prop_assert_eq!(sa.transpose().to_dense(), a.transpose());
            prop_assert_eq!(sa.rank(), a.rank());
            if a.cols() == b.rows() {
                prop_assert_eq!((&sa * &sb).to_dense(), &a * &b);
            }
            if a.shape() == b.shape() {
                prop_assert_eq!((&sa - &sb).to_dense(), &a - &b);
                prop_assert_eq!((&sa + &sb).to_dense(), &a + &b);
            }
        }

        #[test]
        fn kernel_identity_block(a in dense(5)) {
            let (k, free) = a.to_sparse().kernel();
            prop_assert!((&a.to_sparse() * &k).is_zero());
            prop_assert!(k.select_rows(&free).is_identity());
        }
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::echelon::Echelon;
use super::{Scalar, SparseMat};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar(s: Scalar) -> Self {
        Mat { rows: 1, cols: 1, data: vec![s] }
    }

    /// Builds from rows; all rows must share a length. An empty list gives 0×0.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    /// Column vector.
    pub fn column(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Mat { rows: n, cols: 1, data: entries }
    }

    /// Row vector.
    pub fn row_vector(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Mat { rows: 1, cols: n, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() }))
    }

    /// First `(row, col)` where the matrices differ; `None` when equal.
    /// A shape mismatch reports `(usize::MAX, usize::MAX)`.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX));
        }
        self.data.iter().zip(&other.data).position(|(a, b)| a != b).map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Mat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Mat { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.set(r, k, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Mat { rows: rows.len(), cols: self.cols, data }
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for row in self.sparse_rows() {
            e.insert(&row);
        }
        e.rank()
    }

    /// Basis of the null space, one column per free variable.
    pub fn kernel_basis(&self) -> Mat {
        let mut e = Echelon::new(self.cols);
        for row in self.sparse_rows() {
            e.insert(&row);
        }
        e.into_rref().kernel().0.to_dense()
    }

    /// Exact inverse; `None` for singular or non-square input.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let piv = (c..n).filter(|&r| !a.get(r, c).is_zero()).min_by_key(|&r| a.get(r, c).weight())?;
            a.swap_rows(piv, c);
            inv.swap_rows(piv, c);
            let p = a.get(c, c).recip()?;
            a.scale_row(c, &p);
            inv.scale_row(c, &p);
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                a.axpy_row(r, c, &f);
                inv.axpy_row(r, c, &f);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.data.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for k in 0..self.cols {
            let v = &self.data[r * self.cols + k] * s;
            self.data[r * self.cols + k] = v;
        }
    }

    /// row[dst] -= f * row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, f: &Scalar) {
        for k in 0..self.cols {
            let s = self.get(src, k);
            if !s.is_zero() {
                let v = self.get(dst, k) - &(f * s);
                self.set(dst, k, v);
            }
        }
    }

    /// Non-negative power of a square matrix.
    pub fn pow(&self, k: u32) -> Mat {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn to_sparse(&self) -> SparseMat {
        SparseMat::from_dense(self)
    }

    /// Solves `self · x = b` for one particular solution, if any exists.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "right-hand side has the wrong height");
        let mut out = Mat::zeros(self.cols, b.cols);
        for j in 0..b.cols {
            let aug = self.hstack(&Mat::column(b.col(j)));
            let mut e = Echelon::new(aug.cols);
            for row in aug.sparse_rows() {
                e.insert(&row);
            }
            let rref = e.into_rref();
            if rref.pivots.contains(&self.cols) {
                return None;
            }
            for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                if let Some((_, v)) = row.iter().find(|(c, _)| *c == self.cols) {
                    out.set(p, j, v.clone());
                }
            }
        }
        Some(out)
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;

    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Mat {
    type Output = Mat;

    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in difference");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[Scalar]> = (0..self.rows).map(|r| self.row(r)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Mat::from_rows(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::zeros(3, 3).rank(), 0);
        assert_eq!(Mat::identity(4).rank(), 4);
        assert_eq!(Mat::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(3).kernel_basis().cols(), 0);
        let k = Mat::zeros(2, 5).kernel_basis();
        assert_eq!(k.shape(), (5, 5));
        assert_eq!(k.rank(), 5);
        let k = Mat::from_ints(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, Mat::from_ints(&[&[-1], &[1]]));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
        assert_eq!(Mat::from_ints(&[&[2]]).kron(&Mat::identity(2)), Mat::from_ints(&[&[2, 0], &[0, 2]]));
        let x = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let e00 = Mat::from_ints(&[&[1], &[0], &[0], &[0]]);
        let e11 = Mat::from_ints(&[&[0], &[0], &[0], &[1]]);
        assert_eq!(&x.kron(&x) * &e00, e11);
    }

    #[test]
    fn inverse_and_solve() {
        let a = Mat::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let b = Mat::from_ints(&[&[3], &[2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        let singular = Mat::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&Mat::from_ints(&[&[1], &[0]])).is_none());
    }

    #[test]
    fn json_shape() {
        let m = Mat::new(1, 2, vec![Scalar::ratio(1, 2).unwrap(), Scalar::from_int(-3)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3"]]"#);
        let back: Mat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    fn small_mat(max: usize) -> impl Strategy<Value = Mat> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Mat::new(r, c, v.into_iter().map(Scalar::from_int).collect()))
        })
    }

    proptest! {
        #[test]
        fn kron_associative(a in small_mat(2), b in small_mat(2), c in small_mat(2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn rank_of_transpose(a in small_mat(5)) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn kernel_is_annihilated(a in small_mat(5)) {
            let k = a.kernel_basis();
            prop_assert_eq!(k.cols(), a.cols() - a.rank());
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }
    }
}

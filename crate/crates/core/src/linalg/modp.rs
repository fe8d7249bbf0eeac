//! Prime-field matrices, used only to re-check structure-constant identities
//! modulo a prime. Homology never runs here.

use super::Mat;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over the prime field `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPMat {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModPMat {
    /// Reduces a rational matrix. Fails if `p` divides some denominator.
    pub fn reduce(m: &Mat, p: u64) -> Option<Self> {
        let data = m.entries().iter().map(|x| x.mod_p(p)).collect::<Option<Vec<_>>>()?;
        Some(ModPMat { p, rows: m.rows(), cols: m.cols(), data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn mul(&self, rhs: &ModPMat) -> ModPMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mod-p product");
        let p = self.p;
        let mut data = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let e = &mut data[i * rhs.cols + j];
                        *e = (*e + mul_mod(a, b, p)) % p;
                    }
                }
            }
        }
        ModPMat { p, rows: self.rows, cols: rhs.cols, data }
    }

    pub fn first_difference(&self, other: &ModPMat) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((usize::MAX, usize::MAX));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                a.swap(piv * cols + k, rank * cols + k);
            }
            let inv = inv_mod(a[rank * cols + c], p).expect("nonzero element of a prime field");
            for r in 0..rows {
                if r == rank || a[r * cols + c] == 0 {
                    continue;
                }
                let f = mul_mod(a[r * cols + c], inv, p);
                for k in 0..cols {
                    let sub = mul_mod(f, a[rank * cols + k], p);
                    a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(0, 7), None);
        assert!(is_prime(101));
        assert!(!is_prime(91));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = Mat::from_ints(&[&[1, 1], &[1, -1]]);
        assert_eq!(ModPMat::reduce(&m, 3).unwrap().rank(), 2);
        assert_eq!(ModPMat::reduce(&m, 2).unwrap().rank(), 1);
    }
}

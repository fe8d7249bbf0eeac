//! Hochschild and cyclic (co)homology dimensions of a finite tower.
//!
//! The Hochschild boundary is the alternating sum of faces. The cyclic theory
//! is read off Connes' complex: the quotient by `im(1 − λ)` for a cyclic
//! object and the subcomplex `ker(1 − λ)` for a cocyclic one, with
//! `λ_n = (−1)^n τ_n`. Only characteristic 0 is supported.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{CyclicObject, Variance};
use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseMat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub variance: Variance,
    pub hochschild_dims: Vec<usize>,
    pub cyclic_dims: Vec<usize>,
    pub max_valid_degree: usize,
}

fn sign(k: usize) -> Scalar {
    Scalar::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Differentials linking degrees `n` and `n + 1`, for `n < cap`: `b_{n+1}`
/// for a cyclic object, `b^n` for a cocyclic one.
fn differentials(co: &CyclicObject) -> Vec<SparseMat> {
    (0..co.degree_cap())
        .into_par_iter()
        .map(|n| {
            let faces = (0..=n + 1).map(|i| co.face(n + 1, i));
            let mut acc: Option<SparseMat> = None;
            for (i, f) in faces.enumerate() {
                let term = f.scale(&sign(i));
                acc = Some(match acc {
                    None => term,
                    Some(a) => &a + &term,
                });
            }
            acc.expect("at least two faces")
        })
        .collect()
}

/// `b∘b` at degree `n`, as a composable pair.
fn composite(co: &CyclicObject, diff: &[SparseMat], n: usize) -> SparseMat {
    match co.variance() {
        Variance::Cyclic => &diff[n - 1] * &diff[n],
        Variance::Cocyclic => &diff[n] * &diff[n - 1],
    }
}

fn check_complex(co: &CyclicObject, diff: &[SparseMat]) -> Result<()> {
    let bad = (1..diff.len()).into_par_iter().find_first(|&n| !composite(co, diff, n).is_zero());
    match bad {
        Some(n) => Err(Error::NotAComplex { degree: Some(n) }),
        None => Ok(()),
    }
}

fn lambda(co: &CyclicObject, n: usize) -> SparseMat {
    co.tau(n).scale(&sign(n))
}

fn one_minus_lambda(co: &CyclicObject, n: usize) -> SparseMat {
    &SparseMat::identity(co.dims()[n]) - &lambda(co, n)
}

/// Hochschild (co)homology dimensions at degrees `0..cap`.
pub fn hochschild(co: &CyclicObject) -> Result<Vec<usize>> {
    let diff = differentials(co);
    check_complex(co, &diff)?;
    let ranks: Vec<usize> = diff.par_iter().map(SparseMat::rank).collect();
    let cap = co.degree_cap();
    Ok((0..cap).map(|n| co.dims()[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }).collect())
}

/// Cyclic (co)homology dimensions at degrees `0..cap` over the rationals.
pub fn cyclic_homology(co: &CyclicObject) -> Result<Vec<usize>> {
    let diff = differentials(co);
    check_complex(co, &diff)?;
    let cap = co.degree_cap();
    match co.variance() {
        Variance::Cyclic => {
            // images of 1 − λ, one per degree
            let ims: Vec<SparseMat> = (0..=cap).into_par_iter().map(|n| one_minus_lambda(co, n)).collect();
            let im_ranks: Vec<usize> = ims.par_iter().map(SparseMat::rank).collect();
            // rank of b_{n+1} on the quotients, n < cap
            let bar: Vec<usize> = (0..cap)
                .into_par_iter()
                .map(|n| {
                    let moved = &diff[n] * &ims[n + 1];
                    if ims[n].hstack(&moved).rank() != im_ranks[n] {
                        return Err(Error::DescentFailure(n + 1));
                    }
                    Ok(ims[n].hstack(&diff[n]).rank() - im_ranks[n])
                })
                .collect::<Result<_>>()?;
            Ok((0..cap).map(|n| co.dims()[n] - im_ranks[n] - bar[n] - if n == 0 { 0 } else { bar[n - 1] }).collect())
        }
        Variance::Cocyclic => {
            let kers: Vec<SparseMat> = (0..=cap).into_par_iter().map(|n| one_minus_lambda(co, n).kernel_basis()).collect();
            // rank of b^n on the invariant cochains, n < cap
            let restricted: Vec<usize> = (0..cap)
                .into_par_iter()
                .map(|n| {
                    let image = &diff[n] * &kers[n];
                    if !(&one_minus_lambda(co, n + 1) * &image).is_zero() {
                        return Err(Error::DescentFailure(n));
                    }
                    Ok(image.rank())
                })
                .collect::<Result<_>>()?;
            Ok((0..cap).map(|n| kers[n].cols() - restricted[n] - if n == 0 { 0 } else { restricted[n - 1] }).collect())
        }
    }
}

impl ComplexReport {
    /// Both theories; `characteristic` must be 0.
    pub fn compute(co: &CyclicObject, characteristic: u64) -> Result<Self> {
        if characteristic != 0 {
            return Err(Error::CharNotZero(characteristic));
        }
        Ok(ComplexReport {
            variance: co.variance(),
            hochschild_dims: hochschild(co)?,
            cyclic_dims: cyclic_homology(co)?,
            max_valid_degree: co.degree_cap() - 1,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_table(&self) -> String {
        let (hh, hc) = match self.variance {
            Variance::Cyclic => ("HH_n", "HC_n"),
            Variance::Cocyclic => ("HH^n", "HC^n"),
        };
        let mut out = String::new();
        let _ = writeln!(out, "{:>6}  {:>6}  {:>6}", "degree", hh, hc);
        for n in 0..=self.max_valid_degree {
            let _ = writeln!(out, "{:>6}  {:>6}  {:>6}", n, self.hochschild_dims[n], self.cyclic_dims[n]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{build, BuildOptions, BuilderRoute, Theory};
    use crate::hopf::HopfAlgebra;
    use crate::rep::{trivial_modcomod, ModuleAlgebra, ModuleCoalgebra, ModuleObject};

    fn ground(theory: Theory, cap: usize) -> CyclicObject {
        let h = HopfAlgebra::trivial();
        let m = trivial_modcomod(&h);
        let obj = if theory.uses_algebra() {
            ModuleObject::Algebra(ModuleAlgebra::ground(&h))
        } else {
            ModuleObject::Coalgebra(ModuleCoalgebra::ground(&h))
        };
        build(theory, BuilderRoute::Generic, &h, &m, &obj, cap, BuildOptions::default()).unwrap()
    }

    #[test]
    fn ground_field_in_every_theory() {
        for theory in Theory::ALL {
            let r = ComplexReport::compute(&ground(theory, 5), 0).unwrap();
            assert_eq!(r.hochschild_dims, vec![1, 0, 0, 0, 0], "{theory}");
            assert_eq!(r.cyclic_dims, vec![1, 0, 1, 0, 1], "{theory}");
            assert_eq!(r.max_valid_degree, 4);
        }
    }

    #[test]
    fn zero_tower_is_acyclic() {
        for v in [Variance::Cyclic, Variance::Cocyclic] {
            let r = ComplexReport::compute(&CyclicObject::zero(v, 3), 0).unwrap();
            assert_eq!(r.hochschild_dims, vec![0; 3]);
            assert_eq!(r.cyclic_dims, vec![0; 3]);
        }
    }

    #[test]
    fn positive_characteristic_is_refused() {
        assert!(matches!(ComplexReport::compute(&ground(Theory::CovAlg, 2), 3), Err(Error::CharNotZero(3))));
    }

    #[test]
    fn broken_face_is_not_a_complex() {
        let mut co = ground(Theory::CovAlg, 3);
        co.replace_face(3, 0, SparseMat::zeros(1, 1)).unwrap();
        assert!(matches!(hochschild(&co), Err(Error::NotAComplex { degree: Some(2) })));
    }

    #[test]
    fn table_is_aligned() {
        let r = ComplexReport::compute(&ground(Theory::ContraAlg, 4), 0).unwrap();
        let t = r.to_table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines.iter().all(|l| l.len() == lines[0].len()));
        assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["2", "0", "1"]);
    }
}

//! Sources of modules, comodules and Yetter–Drinfeld coefficients for tests
//! and fixtures.

use rand::seq::SliceRandom;
use rand::Rng;

use super::yd::stability_with_power;
use super::{check_yd, LeftModule, ModComod, ModuleAlgebra, RightComodule};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{permute_legs, Mat, Scalar, SparseMat};

fn unit_vectors(n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = (code % 3) as i64 - 1;
                code /= 3;
                Scalar::from_int(v)
            })
            .collect()
    })
}

/// Grouplike elements with coordinates in `{−1, 0, 1}`.
pub fn grouplikes(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let n = h.dim();
    assert!(n <= 9, "exhaustive search is limited to small dimensions");
    unit_vectors(n)
        .filter(|g| {
            let col = Mat::column(g.clone());
            (h.counit() * &col).get(0, 0).is_one() && h.comult() * &col == col.kron(&col)
        })
        .collect()
}

/// Algebra maps `H → k` with values in `{−1, 0, 1}`.
pub fn characters(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let n = h.dim();
    assert!(n <= 9, "exhaustive search is limited to small dimensions");
    unit_vectors(n)
        .filter(|chi| {
            let row = Mat::row_vector(chi.clone());
            (&row * h.unit()).get(0, 0).is_one() && &row * h.mult() == row.kron(&row)
        })
        .collect()
}

/// `k` with action `χ` and coaction `1 ↦ 1 ⊗ γ`.
pub fn one_dim(h: &HopfAlgebra, chi: &[Scalar], gamma: &[Scalar]) -> ModComod {
    ModComod::new(LeftModule::character(h, chi), RightComodule::scalar(h, 1, gamma)).expect("both are 1-dim")
}

/// Left multiplication by each basis element, as matrices on `H`.
fn left_mult(h: &HopfAlgebra) -> Vec<SparseMat> {
    (0..h.dim()).map(|a| LeftModule::regular(h).block(a).clone()).collect()
}

fn right_mult(h: &HopfAlgebra) -> Vec<SparseMat> {
    let n = h.dim();
    (0..n)
        .map(|b| {
            let mut m = Mat::zeros(n, n);
            for a in 0..n {
                for (c, v) in h.product(a, b) {
                    m.set(*c, a, v.clone());
                }
            }
            m.to_sparse()
        })
        .collect()
}

/// The `YD_i` module `V⊗H` with coaction `v⊗k ↦ v⊗k₁⊗k₂` and action
/// `h·(v⊗k) = h₂v ⊗ h₃ k S^{-1-2i}(h₁)`.
pub fn induced(h: &HopfAlgebra, v: &LeftModule, i: i64) -> ModComod {
    let n = h.dim();
    let sp = h.s_power(-1 - 2 * i);
    let left = left_mult(h);
    let right = right_mult(h);
    let d = v.dim() * n;
    let blocks = (0..n)
        .map(|a| {
            let mut acc = SparseMat::zeros(d, d);
            for (idx, coef) in h.iterated_coproduct(a, 3) {
                let mut r = SparseMat::zeros(n, n);
                for (b, w) in h.apply_terms(&sp, &[(idx[0], Scalar::one())]) {
                    r = &r + &right[b].scale(&w);
                }
                let term = v.block(idx[1]).kron(&(&left[idx[2]] * &r));
                acc = &acc + &term.scale(&coef);
            }
            acc.to_dense()
        })
        .collect();
    let module = LeftModule::from_blocks(blocks);
    let coaction = Mat::identity(v.dim()).kron(h.comult());
    ModComod::new(module, RightComodule::new(n, coaction).expect("shape")).expect("dims agree")
}

/// A `{0, ±1}`-valued unimodular matrix from random elementary operations.
pub fn random_unimodular<R: Rng>(d: usize, steps: usize, rng: &mut R) -> (Mat, Mat) {
    let mut p = Mat::identity(d);
    if d > 1 {
        for _ in 0..steps {
            let r = rng.gen_range(0..d);
            let mut s = rng.gen_range(0..d - 1);
            if s >= r {
                s += 1;
            }
            let c = Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
            let mut e = Mat::identity(d);
            e.set(r, s, c);
            p = &e * &p;
        }
        if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..d).collect();
            perm.shuffle(rng);
            p = &SparseMat::from_permutation(&perm).to_dense() * &p;
        }
    }
    let inv = p.inverse().expect("unimodular");
    (p, inv)
}

/// Affine space of coactions satisfying the linear `YD_i` system and the
/// counit axiom for a fixed module, optionally also `p`-stability.
#[derive(Clone, Debug)]
pub struct CoactionSpace {
    pub particular: Mat,
    pub directions: Vec<Mat>,
}

impl CoactionSpace {
    pub fn point(&self, coefs: &[i64]) -> Mat {
        let mut out = self.particular.clone();
        for (dir, &c) in self.directions.iter().zip(coefs) {
            if c != 0 {
                out = &out + &dir.scale(&Scalar::from_int(c));
            }
        }
        out
    }
}

fn route1_residual(h: &HopfAlgebra, act: &SparseMat, co: &SparseMat, i: i64, d: usize) -> SparseMat {
    let n = h.dim();
    let id = SparseMat::identity;
    let mult = h.mult().to_sparse();
    let split = h.comult().to_sparse().kron(&id(d));
    let lhs = {
        let acted = &id(n).kron(act) * &split;
        let coacted = &h.s_power(-2 * i).to_sparse().kron(co) * &acted;
        &id(d).kron(&mult) * &(&permute_legs(&[n, d, n], &[1, 2, 0]) * &coacted)
    };
    let rhs = {
        let coacted = &id(n * n).kron(co) * &split;
        &act.kron(&mult) * &(&permute_legs(&[n, n, d, n], &[0, 2, 1, 3]) * &coacted)
    };
    &lhs - &rhs
}

fn vectorize(m: &SparseMat) -> Vec<(usize, Scalar)> {
    let mut out = Vec::new();
    for c in 0..m.cols() {
        for (r, v) in m.col(c) {
            out.push((r * m.cols() + c, v.clone()));
        }
    }
    out.sort_by_key(|e| e.0);
    out
}

/// Solves for all coactions on `module` that make it `YD_i`, as an affine
/// space. Coassociativity is quadratic and is not imposed here.
pub fn solve_yd_coactions(h: &HopfAlgebra, module: &LeftModule, i: i64, stable_power: Option<i64>) -> Result<CoactionSpace> {
    let n = h.dim();
    let d = module.dim();
    let unknowns = d * n * d;
    let act = module.action().to_sparse();
    let counit_map = SparseMat::identity(d).kron(&h.counit().to_sparse());
    let stab_map = stable_power.map(|p| {
        let twisted = SparseMat::identity(d).kron(&h.s_power(p).to_sparse());
        &act * &(&permute_legs(&[d, n], &[1, 0]) * &twisted)
    });
    let yd_rows = d * n * n * d;
    let mut columns = Vec::with_capacity(unknowns);
    for k in 0..unknowns {
        let (r, c) = (k / d, k % d);
        let mut e = Mat::zeros(d * n, d);
        e.set(r, c, Scalar::one());
        let e = e.to_sparse();
        let mut col = vectorize(&route1_residual(h, &act, &e, i, d));
        let off = yd_rows;
        col.extend(vectorize(&(&counit_map * &e)).into_iter().map(|(j, v)| (off + j, v)));
        if let Some(s) = &stab_map {
            let off = yd_rows + d * d;
            col.extend(vectorize(&(s * &e)).into_iter().map(|(j, v)| (off + j, v)));
        }
        columns.push(col);
    }
    let rows = yd_rows + d * d * if stab_map.is_some() { 2 } else { 1 };
    let system = SparseMat::from_unsorted_columns(rows, columns).to_dense();
    let mut rhs = Mat::zeros(rows, 1);
    for j in 0..d {
        rhs.set(yd_rows + j * d + j, 0, Scalar::one());
        if stab_map.is_some() {
            rhs.set(yd_rows + d * d + j * d + j, 0, Scalar::one());
        }
    }
    let x = system.solve(&rhs).ok_or_else(|| Error::InvalidStructure("no coaction solves the YD system".into()))?;
    let reshape = |v: &[Scalar]| {
        let mut m = Mat::zeros(d * n, d);
        for (k, s) in v.iter().enumerate() {
            m.set(k / d, k % d, s.clone());
        }
        m
    };
    let kernel = system.kernel_basis();
    let directions = (0..kernel.cols()).map(|c| reshape(&kernel.col(c))).collect();
    Ok(CoactionSpace { particular: reshape(&x.col(0)), directions })
}

/// Samples points of the space with coefficients in `{−1, 0, 1}` and keeps
/// the coassociative ones, without repetition.
pub fn search_coactions<R: Rng>(
    h: &HopfAlgebra,
    module: &LeftModule,
    space: &CoactionSpace,
    tries: usize,
    rng: &mut R,
) -> Vec<ModComod> {
    let mut found: Vec<ModComod> = Vec::new();
    for t in 0..tries {
        let coefs: Vec<i64> = if t == 0 {
            vec![0; space.directions.len()]
        } else {
            space.directions.iter().map(|_| if rng.gen_bool(0.7) { 0 } else { rng.gen_range(-1..=1) }).collect()
        };
        let co = space.point(&coefs);
        let Ok(comod) = RightComodule::new(h.dim(), co) else { continue };
        if comod.validate(h).is_err() {
            continue;
        }
        let m = ModComod::new(module.clone(), comod).expect("dims agree");
        if !found.contains(&m) {
            found.push(m);
        }
    }
    found
}

/// A comodule structure perturbed away from `m`'s: conjugating only the
/// coaction keeps both axioms but generally breaks compatibility.
pub fn perturb_coaction<R: Rng>(m: &ModComod, rng: &mut R) -> ModComod {
    let (p, p_inv) = random_unimodular(m.dim(), 2 + m.dim(), rng);
    ModComod::new(m.module().clone(), m.comodule().conjugate(&p, &p_inv)).expect("dims agree")
}

/// Small modules available over `h`, for random assembly.
fn module_blocks(h: &HopfAlgebra) -> Vec<LeftModule> {
    let mut out: Vec<LeftModule> = characters(h).iter().map(|c| LeftModule::character(h, c)).collect();
    let reg = LeftModule::regular(h);
    out.push(reg.dual(h));
    out.push(super::twist_module(h, &reg, 1));
    out.push(reg);
    out.push(induced(h, &LeftModule::trivial(h), 1).module().clone());
    if *h == HopfAlgebra::sweedler() {
        out.push(ModuleAlgebra::sweedler_quadratic(0).module().clone());
    }
    out
}

fn comodule_blocks(h: &HopfAlgebra) -> Vec<RightComodule> {
    let mut out: Vec<RightComodule> = grouplikes(h).iter().map(|g| RightComodule::scalar(h, 1, g)).collect();
    out.push(RightComodule::regular(h));
    out
}

fn assemble<T: Clone, R: Rng>(blocks: &[T], dims: impl Fn(&T) -> usize, sum: impl Fn(&T, &T) -> T, d: usize, rng: &mut R) -> T {
    let ones: Vec<&T> = blocks.iter().filter(|b| dims(b) == 1).collect();
    loop {
        let mut acc: Option<T> = None;
        let mut left = d;
        while left > 0 {
            let fitting: Vec<&T> = blocks.iter().filter(|b| dims(b) <= left).collect();
            let pick = if fitting.is_empty() { *ones.choose(rng).expect("a 1-dim block exists") } else { *fitting.choose(rng).unwrap() };
            left -= dims(pick);
            acc = Some(match acc {
                None => pick.clone(),
                Some(a) => sum(&a, pick),
            });
        }
        if let Some(a) = acc {
            return a;
        }
    }
}

/// A random valid module/comodule pair of dimension `1..=max_dim`, with no
/// compatibility imposed.
pub fn random_modcomod<R: Rng>(h: &HopfAlgebra, max_dim: usize, rng: &mut R) -> ModComod {
    let mods = module_blocks(h);
    let comods = comodule_blocks(h);
    let d = rng.gen_range(1..=max_dim);
    let module = assemble(&mods, LeftModule::dim, LeftModule::direct_sum, d, rng);
    let comod = assemble(&comods, RightComodule::dim, RightComodule::direct_sum, d, rng);
    let (p, pi) = random_unimodular(d, d + 1, rng);
    let (q, qi) = random_unimodular(d, d + 1, rng);
    ModComod::new(module.conjugate(&p, &pi), comod.conjugate(&q, &qi)).expect("dims agree")
}

/// Generated `YD_i` coefficients: one-dimensional ones, induced ones over
/// one-dimensional modules, and random conjugates of sums of pairs.
pub fn yd_coefficients<R: Rng>(h: &HopfAlgebra, i: i64, extra: usize, rng: &mut R) -> Vec<ModComod> {
    let mut base: Vec<ModComod> = Vec::new();
    for chi in characters(h) {
        for g in grouplikes(h) {
            let m = one_dim(h, &chi, &g);
            if check_yd(h, &m, i).unwrap_or(false) {
                base.push(m);
            }
        }
        base.push(induced(h, &LeftModule::character(h, &chi), i));
    }
    if h.s_power(2) == Mat::identity(h.dim()) && h.mult().transpose() == commuted(h) {
        // commutative and cocommutative: any module with a constant grading
        for g in grouplikes(h) {
            base.push(ModComod::new(LeftModule::regular(h), RightComodule::scalar(h, h.dim(), &g)).expect("dims agree"));
        }
    }
    let mut out = base.clone();
    for _ in 0..extra {
        let a = base.choose(rng).expect("nonempty").clone();
        let m = if rng.gen_bool(0.4) && a.dim() < 4 {
            let b = base.iter().filter(|b| b.dim() + a.dim() <= 5).collect::<Vec<_>>();
            match b.choose(rng) {
                Some(b) => a.direct_sum(b),
                None => a,
            }
        } else {
            a
        };
        let (p, pi) = random_unimodular(m.dim(), m.dim() + 1, rng);
        out.push(m.conjugate(&p, &pi));
    }
    out
}

fn commuted(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    (h.mult() * &permute_legs(&[n, n], &[1, 0]).to_dense()).transpose()
}

/// Whether `m` is stable for the power `2i`; a convenience re-export for
/// partitioning generated pools.
pub fn is_stable(h: &HopfAlgebra, m: &ModComod, i: i64) -> bool {
    stability_with_power(h, m, 2 * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sweedler_grouplikes_and_characters() {
        let h = HopfAlgebra::sweedler();
        assert_eq!(grouplikes(&h).len(), 2);
        // ε and the sign character; both kill x
        assert_eq!(characters(&h).len(), 2);
        let z2 = HopfAlgebra::cyclic_group_algebra(2);
        assert_eq!(grouplikes(&z2).len(), 2);
        assert_eq!(characters(&z2).len(), 2);
        let z3 = HopfAlgebra::cyclic_group_algebra(3);
        assert_eq!(characters(&z3).len(), 1);
    }

    #[test]
    fn sweedler_one_dim_yd_pattern() {
        let h = HopfAlgebra::sweedler();
        for chi in characters(&h) {
            for g in grouplikes(&h) {
                let m = one_dim(&h, &chi, &g);
                let chi_g = &chi[1];
                let gamma_is_g = g[1].is_one();
                for i in -2..=2i64 {
                    let sign = Scalar::from_int(if i.rem_euclid(2) == 0 { 1 } else { -1 });
                    let expected = if gamma_is_g { *chi_g == -sign } else { *chi_g == sign };
                    assert_eq!(check_yd(&h, &m, i).unwrap(), expected, "chi(g)={chi_g:?} gamma=g:{gamma_is_g} i={i}");
                }
            }
        }
    }

    #[test]
    fn induced_modules_are_yd() {
        for (name, h) in HopfAlgebra::builtins() {
            for i in -1..=1 {
                for v in [LeftModule::trivial(&h), LeftModule::regular(&h)] {
                    let m = induced(&h, &v, i);
                    m.validate(&h).unwrap();
                    assert!(check_yd(&h, &m, i).unwrap(), "{name} i={i}");
                }
            }
        }
    }

    #[test]
    fn solver_contains_induced_and_finds_coassociative_points() {
        let h = HopfAlgebra::sweedler();
        let m = induced(&h, &LeftModule::trivial(&h), -1);
        let space = solve_yd_coactions(&h, m.module(), -1, None).unwrap();
        // the known coaction lies in the affine space
        let diff = m.comodule().coaction() - &space.particular;
        let dirs = space.directions.iter().fold(Mat::zeros(diff.rows() * diff.cols(), 0), |acc, d| {
            acc.hstack(&Mat::column(d.entries().to_vec()))
        });
        let with = dirs.hstack(&Mat::column(diff.entries().to_vec()));
        assert_eq!(with.rank(), dirs.rank());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for found in search_coactions(&h, m.module(), &space, 200, &mut rng) {
            assert!(check_yd(&h, &found, -1).unwrap());
        }
    }

    #[test]
    fn random_pairs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (_, h) in HopfAlgebra::builtins() {
            for _ in 0..5 {
                random_modcomod(&h, 5, &mut rng).validate(&h).unwrap();
            }
            for m in yd_coefficients(&h, 1, 5, &mut rng) {
                assert!(check_yd(&h, &m, 1).unwrap());
            }
        }
    }
}

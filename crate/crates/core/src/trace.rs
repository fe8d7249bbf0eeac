//! The functors `Hom_H(1, −)` and `Hom_H(−, 1)` made concrete, and the swap
//! isomorphisms that turn a stable coefficient into a symmetric 2-trace.
//!
//! `Hom_H(1, X)` is the invariant subspace `X^H ⊆ X`. `Hom_H(X, 1)` is stored
//! as a subspace of the dual space, in dual-basis coordinates. A linear map
//! `T: X → Y` acts covariantly by restriction and contravariantly by
//! restricting `Tᵀ: Y* → X*`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{permute_legs, restrict_sparse, SparseMat, SubspaceBasis, TensorShape};
use crate::rep::{check_stability, check_yd, phi, phi_inv, tensor_action, twist_module, LeftModule, ModComod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceVariance {
    Covariant,
    Contravariant,
}

impl TraceVariance {
    /// Index `i` of the `YD_i` condition the coefficient must satisfy.
    pub fn yd_index(self) -> i64 {
        match self {
            TraceVariance::Covariant => 1,
            TraceVariance::Contravariant => -1,
        }
    }

    /// Index of the stability condition that makes `τ₀` the identity.
    pub fn stability_index(self) -> i64 {
        match self {
            TraceVariance::Covariant => 1,
            TraceVariance::Contravariant => 0,
        }
    }
}

fn shape_of(factors: &[(&str, &LeftModule)]) -> TensorShape {
    TensorShape::new(factors.iter().map(|(l, m)| (l.to_string(), m.dim())).collect())
}

/// `ρ(g) − ε(g)·I` over the algebra generators, stacked.
fn augmentation_system(h: &HopfAlgebra, factors: &[&LeftModule], transpose: bool) -> SparseMat {
    let d: usize = factors.iter().map(|f| f.dim()).product();
    let mut system = SparseMat::zeros(0, d);
    for g in h.algebra_generators() {
        let mut block = &tensor_action(h, factors, g) - &SparseMat::identity(d).scale(h.counit_of(g));
        if transpose {
            block = block.transpose();
        }
        system = system.vstack(&block);
    }
    system
}

/// `X^H` for `X = X₁⊗…⊗X_k` with the diagonal action.
pub fn invariants_of(h: &HopfAlgebra, factors: &[(&str, &LeftModule)]) -> SubspaceBasis {
    let mods: Vec<&LeftModule> = factors.iter().map(|f| f.1).collect();
    SubspaceBasis::kernel_of(shape_of(factors), &augmentation_system(h, &mods, false))
}

/// `H`-linear functionals on `X₁⊗…⊗X_k`, as dual coordinates.
pub fn functionals_of(h: &HopfAlgebra, factors: &[(&str, &LeftModule)]) -> SubspaceBasis {
    let mods: Vec<&LeftModule> = factors.iter().map(|f| f.1).collect();
    SubspaceBasis::kernel_of(shape_of(factors), &augmentation_system(h, &mods, true))
}

pub fn invariants_basis(h: &HopfAlgebra, x: &LeftModule) -> SubspaceBasis {
    invariants_of(h, &[("X", x)])
}

pub fn functionals_basis(h: &HopfAlgebra, x: &LeftModule) -> SubspaceBasis {
    functionals_of(h, &[("X", x)])
}

/// Solutions of `S(h)a⊗b = a⊗hb` for every basis element `h`: the swap form
/// of invariance in `A⊗B`.
pub fn swap_form_invariants(h: &HopfAlgebra, a: &LeftModule, b: &LeftModule) -> SubspaceBasis {
    let s = h.antipode();
    let mut system = SparseMat::zeros(0, a.dim() * b.dim());
    for x in 0..h.dim() {
        let sx: Vec<_> = h.apply_terms(s, &[(x, crate::Scalar::one())]);
        let lhs = a.act(&sx).kron(&SparseMat::identity(b.dim()));
        let rhs = SparseMat::identity(a.dim()).kron(b.block(x));
        system = system.vstack(&(&lhs - &rhs));
    }
    SubspaceBasis::kernel_of(shape_of(&[("A", a), ("B", b)]), &system)
}

/// Solutions of `f(ha⊗b) = f(a⊗S(h)b)` for every basis element `h`.
pub fn swap_form_functionals(h: &HopfAlgebra, a: &LeftModule, b: &LeftModule) -> SubspaceBasis {
    let s = h.antipode();
    let mut system = SparseMat::zeros(0, a.dim() * b.dim());
    for x in 0..h.dim() {
        let sx: Vec<_> = h.apply_terms(s, &[(x, crate::Scalar::one())]);
        let lhs = a.block(x).kron(&SparseMat::identity(b.dim()));
        let rhs = SparseMat::identity(a.dim()).kron(&b.act(&sx));
        system = system.vstack(&(&lhs - &rhs).transpose());
    }
    SubspaceBasis::kernel_of(shape_of(&[("A", a), ("B", b)]), &system)
}

/// The swap `y⊗b ↦ b⊗y` as a map `(Y⊗B)^H → (B'⊗Y)^H`, where `B'` is `B`
/// with its action twisted by `S⁻²`.
pub fn iota_f_cov(h: &HopfAlgebra, y: &LeftModule, b: &LeftModule) -> Result<SparseMat> {
    let tb = twist_module(h, b, -1);
    let dom = invariants_of(h, &[("Y", y), ("B", b)]);
    let cod = invariants_of(h, &[("#B", &tb), ("Y", y)]);
    let swap = permute_legs(&[y.dim(), b.dim()], &[1, 0]);
    restrict_sparse(&swap, &dom, &cod)
}

/// A coefficient together with the variance of the Hom functor it is paired
/// with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceInstance {
    hopf: HopfAlgebra,
    coeff: ModComod,
    variance: TraceVariance,
    stable: bool,
}

impl TraceInstance {
    /// Requires the coefficient to be central (`YD_{±1}`) and stable.
    pub fn new(hopf: HopfAlgebra, coeff: ModComod, variance: TraceVariance) -> Result<Self> {
        let t = TraceInstance::paracyclic(hopf, coeff, variance)?;
        if !t.stable {
            return Err(Error::CoefficientMismatch(format!(
                "the coefficient is not {}-stable",
                variance.stability_index()
            )));
        }
        Ok(t)
    }

    /// Requires only centrality; without stability the resulting towers are
    /// paracyclic.
    pub fn paracyclic(hopf: HopfAlgebra, coeff: ModComod, variance: TraceVariance) -> Result<Self> {
        let i = variance.yd_index();
        if !check_yd(&hopf, &coeff, i)? {
            return Err(Error::CoefficientMismatch(format!("the coefficient is not in YD_{i}")));
        }
        let stable = check_stability(&hopf, &coeff, variance.stability_index());
        Ok(TraceInstance { hopf, coeff, variance, stable })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn coeff(&self) -> &ModComod {
        &self.coeff
    }

    pub fn variance(&self) -> TraceVariance {
        self.variance
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// `F(M⊗X₁⊗…⊗X_k)`.
    pub fn space(&self, factors: &[(&str, &LeftModule)]) -> SubspaceBasis {
        let mut all = vec![("M", self.coeff.module())];
        all.extend_from_slice(factors);
        match self.variance {
            TraceVariance::Covariant => invariants_of(&self.hopf, &all),
            TraceVariance::Contravariant => functionals_of(&self.hopf, &all),
        }
    }

    /// The map on ambient coordinates behind `ι_c(x)`, from `M⊗X⊗C` data to
    /// `M⊗C⊗X` data (vectors covariantly, functionals contravariantly).
    pub fn iota_ambient(&self, c: &LeftModule, x_dim: usize) -> SparseMat {
        let (h, m) = (&self.hopf, &self.coeff);
        let dims = [m.dim(), x_dim, c.dim()];
        // (M, X, C) → (C, M, X)
        let front = permute_legs(&dims, &[2, 0, 1]);
        match self.variance {
            // m⊗x⊗c ↦ m₀ ⊗ m₁c ⊗ x
            TraceVariance::Covariant => &phi(h, m, c).kron(&SparseMat::identity(x_dim)) * &front,
            // f ↦ [m⊗c⊗x ↦ f(m₀ ⊗ x ⊗ S(m₁)c)]
            TraceVariance::Contravariant => &phi_inv(h, m, c).kron(&SparseMat::identity(x_dim)).transpose() * &front,
        }
    }

    /// `ι_c(x)` between precomputed spaces `F(M⊗X⊗C)` and `F(M⊗C⊗X)`.
    pub fn iota_between(&self, c: &LeftModule, x_dim: usize, dom: &SubspaceBasis, cod: &SubspaceBasis) -> Result<SparseMat> {
        restrict_sparse(&self.iota_ambient(c, x_dim), dom, cod)
    }
}

/// `ι_c(x): F(M⊗X⊗C) → F(M⊗C⊗X)`.
pub fn iota_pair(t: &TraceInstance, c: &LeftModule, x: &LeftModule) -> Result<SparseMat> {
    let dom = t.space(&[("X", x), ("C", c)]);
    let cod = t.space(&[("C", c), ("X", x)]);
    t.iota_between(c, x.dim(), &dom, &cod)
}

/// `τ₀ = ι_c(1)` on `F(M⊗c)`.
pub fn tau_zero_on(t: &TraceInstance, c: &LeftModule) -> Result<SparseMat> {
    iota_pair(t, c, &LeftModule::trivial(t.hopf()))
}

/// The dual of the coefficient's module that pairs with it through an
/// `H`-linear (co)evaluation: `(h·f)(m) = f(S(h)m)` covariantly and
/// `f(S⁻¹(h)m)` contravariantly.
pub fn coefficient_dual(t: &TraceInstance) -> LeftModule {
    let h = t.hopf();
    let dual = t.coeff().module().dual(h);
    match t.variance {
        TraceVariance::Covariant => dual,
        TraceVariance::Contravariant => twist_module(h, &dual, -1),
    }
}

/// `τ₀` on `F(M⊗M*)`. The (co)evaluation of `M` lies in this space and
/// touches every vector of `M`, so `τ₀` is the identity here exactly when it
/// is the identity on every `F(M⊗c)`.
pub fn tau_zero(t: &TraceInstance) -> Result<SparseMat> {
    tau_zero_on(t, &coefficient_dual(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::generate::{characters, grouplikes, induced, one_dim};
    use crate::rep::trivial_modcomod;
    use crate::Scalar;

    #[test]
    fn invariants_examples() {
        let z2 = HopfAlgebra::cyclic_group_algebra(2);
        assert_eq!(invariants_basis(&z2, &LeftModule::trivial(&z2)).dim(), 1);
        let inv = invariants_basis(&z2, &LeftModule::regular(&z2));
        assert_eq!(inv.dim(), 1);
        let col = inv.inclusion().to_dense().col(0);
        assert_eq!(col[0], col[1]);
        let sw = HopfAlgebra::sweedler();
        let inv = invariants_basis(&sw, &LeftModule::regular(&sw));
        assert_eq!(inv.dim(), 1);
        // proportional to (1 + g)x = x + gx
        let col = inv.inclusion().to_dense().col(0);
        assert!(col[0].is_zero() && col[1].is_zero() && col[2] == col[3] && !col[2].is_zero());
    }

    #[test]
    fn functionals_match_twisted_dual_invariants() {
        for (name, h) in HopfAlgebra::builtins() {
            for x in [LeftModule::trivial(&h), LeftModule::regular(&h), LeftModule::regular(&h).dual(&h)] {
                let f = functionals_basis(&h, &x);
                let d = invariants_basis(&h, &x.dual(&h));
                assert_eq!(f.dim(), d.dim(), "{name}");
            }
        }
        let z2 = HopfAlgebra::cyclic_group_algebra(2);
        assert_eq!(functionals_basis(&z2, &LeftModule::regular(&z2)).dim(), 1);
    }

    #[test]
    fn swap_forms_agree_with_invariance() {
        for (name, h) in HopfAlgebra::builtins() {
            let mods = [LeftModule::trivial(&h), LeftModule::regular(&h), twist_module(&h, &LeftModule::regular(&h), 1)];
            for a in &mods {
                for b in &mods {
                    let inv = invariants_of(&h, &[("A", a), ("B", b)]);
                    assert!(inv.same_span(&swap_form_invariants(&h, a, b)), "{name}");
                    let fun = functionals_of(&h, &[("A", a), ("B", b)]);
                    assert!(fun.same_span(&swap_form_functionals(&h, a, b)), "{name}");
                }
            }
        }
    }

    #[test]
    fn iota_f_cov_is_invertible_and_trivial_on_k() {
        let h = HopfAlgebra::sweedler();
        let reg = LeftModule::regular(&h);
        let k = LeftModule::trivial(&h);
        assert!(iota_f_cov(&h, &reg, &k).unwrap().is_identity());
        assert!(iota_f_cov(&h, &k, &reg).unwrap().is_identity());
        let f = iota_f_cov(&h, &reg, &reg).unwrap();
        assert_eq!(f.rows(), f.cols());
        assert_eq!(f.rank(), f.cols());
    }

    fn sweedler_stable(variance: TraceVariance) -> Vec<TraceInstance> {
        let h = HopfAlgebra::sweedler();
        let mut out = Vec::new();
        for chi in characters(&h) {
            for g in grouplikes(&h) {
                if let Ok(t) = TraceInstance::new(h.clone(), one_dim(&h, &chi, &g), variance) {
                    out.push(t);
                }
            }
        }
        out
    }

    #[test]
    fn symmetry_and_inverse_pairs() {
        for variance in [TraceVariance::Covariant, TraceVariance::Contravariant] {
            let ts = sweedler_stable(variance);
            assert_eq!(ts.len(), 2);
            for t in ts {
                let h = t.hopf().clone();
                let k = LeftModule::trivial(&h);
                let reg = LeftModule::regular(&h);
                let alg = crate::rep::ModuleAlgebra::sweedler_quadratic(0);
                let a = alg.module();
                assert!(iota_pair(&t, &k, &reg).unwrap().is_identity());
                assert!(iota_pair(&t, &k, a).unwrap().is_identity());
                assert!(tau_zero(&t).unwrap().is_identity());
                let there = iota_pair(&t, a, &reg).unwrap();
                let back = iota_pair(&t, &reg, a).unwrap();
                assert!((&back * &there).is_identity());
            }
        }
    }

    #[test]
    fn instance_preconditions() {
        let h = HopfAlgebra::sweedler();
        // ε with trivial coaction is YD_i only for even i
        let t = trivial_modcomod(&h);
        assert!(matches!(TraceInstance::new(h.clone(), t, TraceVariance::Covariant), Err(Error::CoefficientMismatch(_))));
        let m = induced(&h, &LeftModule::trivial(&h), 1);
        let p = TraceInstance::paracyclic(h.clone(), m.clone(), TraceVariance::Covariant).unwrap();
        assert!(!p.is_stable());
        assert!(!tau_zero(&p).unwrap().is_identity());
        assert!(TraceInstance::new(h.clone(), m, TraceVariance::Covariant).is_err());
        let z2 = HopfAlgebra::cyclic_group_algebra(2);
        let sign = vec![Scalar::one(), Scalar::from_int(-1)];
        let g = vec![Scalar::zero(), Scalar::one()];
        let ns = one_dim(&z2, &sign, &g);
        let p = TraceInstance::paracyclic(z2, ns, TraceVariance::Contravariant).unwrap();
        assert!(!p.is_stable());
        assert!(!tau_zero(&p).unwrap().is_identity());
    }
}

//! Modules, comodules and module (co)algebras over a Hopf algebra.
//!
//! Leg conventions: an action is a `d × (n·d)` matrix with legs `(H, M)`,
//! so the block of columns `a·d..(a+1)·d` is the action of the basis element
//! `e_a`. A coaction is a `(d·n) × d` matrix with legs `(M, H)`.

mod algebra;
pub mod generate;
mod yd;

pub use algebra::{ModuleAlgebra, ModuleCoalgebra, ModuleObject};
pub use yd::{
    check_center, check_stability, check_yd, phi, phi_inv, stability_with_power, tensor_action, trivial_modcomod, twist_module,
    yd_routes,
    YdRoutes,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Scalar, SparseMat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    dim: usize,
    action: Mat,
    blocks: Vec<SparseMat>,
}

impl LeftModule {
    /// Wraps an action matrix; only the shape is checked here.
    pub fn new(h_dim: usize, action: Mat) -> Result<Self> {
        let d = action.rows();
        if action.cols() != h_dim * d {
            return Err(Error::DimensionMismatch(format!("action is {}x{}, expected {d}x{}", d, action.cols(), h_dim * d)));
        }
        let blocks = (0..h_dim)
            .map(|a| action.select_cols(&(a * d..(a + 1) * d).collect::<Vec<_>>()).to_sparse())
            .collect();
        Ok(LeftModule { dim: d, action, blocks })
    }

    /// Builds from the action matrix of each basis element of `H`.
    pub fn from_blocks(blocks: Vec<Mat>) -> Self {
        let d = blocks.first().map_or(0, Mat::rows);
        let mut action = Mat::zeros(d, d * blocks.len());
        for (a, b) in blocks.iter().enumerate() {
            assert_eq!(b.shape(), (d, d), "action blocks must be square and equal-sized");
            for r in 0..d {
                for c in 0..d {
                    action.set(r, a * d + c, b.get(r, c).clone());
                }
            }
        }
        LeftModule { dim: d, action, blocks: blocks.iter().map(Mat::to_sparse).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Mat {
        &self.action
    }

    /// Action of the basis element `e_a`.
    pub fn block(&self, a: usize) -> &SparseMat {
        &self.blocks[a]
    }

    pub fn h_dim(&self) -> usize {
        self.blocks.len()
    }

    /// Action of an arbitrary element of `H`.
    pub fn act(&self, x: &[(usize, Scalar)]) -> SparseMat {
        let mut out = SparseMat::zeros(self.dim, self.dim);
        for (a, c) in x {
            out = &out + &self.blocks[*a].scale(c);
        }
        out
    }

    /// Module axioms: `ρ(e_a)ρ(e_b) = ρ(e_a e_b)` and `ρ(1) = I`.
    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        if self.h_dim() != h.dim() {
            return Err(Error::DimensionMismatch(format!("module over a {}-dim algebra used with a {}-dim one", self.h_dim(), h.dim())));
        }
        if !self.act(&h.unit_terms()).is_identity() {
            return Err(Error::InvalidStructure("unit does not act as the identity".into()));
        }
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                if &self.blocks[a] * &self.blocks[b] != self.act(h.product(a, b)) {
                    return Err(Error::InvalidStructure(format!(
                        "action is not associative on {}·{}",
                        h.basis_names()[a],
                        h.basis_names()[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `k` with `h` acting by `ε(h)`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        LeftModule::character(h, h.counit().row(0))
    }

    /// One-dimensional module through an algebra map `χ: H → k`.
    pub fn character(h: &HopfAlgebra, chi: &[Scalar]) -> Self {
        assert_eq!(chi.len(), h.dim());
        LeftModule::new(h.dim(), Mat::row_vector(chi.to_vec())).expect("shape is right")
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let blocks = (0..n)
            .map(|a| {
                let mut m = Mat::zeros(n, n);
                for b in 0..n {
                    for (c, v) in h.product(a, b) {
                        m.set(*c, b, v.clone());
                    }
                }
                m
            })
            .collect();
        LeftModule::from_blocks(blocks)
    }

    /// Dual module with `(h·f)(v) = f(S(h)v)`.
    pub fn dual(&self, h: &HopfAlgebra) -> Self {
        let s = h.antipode();
        let blocks = (0..h.dim())
            .map(|a| {
                let sa: Vec<(usize, Scalar)> = (0..h.dim()).filter(|&r| !s.get(r, a).is_zero()).map(|r| (r, s.get(r, a).clone())).collect();
                self.act(&sa).transpose().to_dense()
            })
            .collect();
        LeftModule::from_blocks(blocks)
    }

    /// Tensor product of modules, with `H` acting through the iterated
    /// coproduct. The empty product is the trivial module.
    pub fn tensor(h: &HopfAlgebra, factors: &[&LeftModule]) -> Self {
        let blocks = (0..h.dim()).map(|a| tensor_action(h, factors, a).to_dense()).collect();
        LeftModule::from_blocks(blocks)
    }

    pub fn direct_sum(&self, other: &LeftModule) -> Self {
        let d = self.dim + other.dim;
        let blocks = (0..self.h_dim())
            .map(|a| {
                let mut m = Mat::zeros(d, d);
                let (x, y) = (self.blocks[a].to_dense(), other.blocks[a].to_dense());
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        m.set(r, c, x.get(r, c).clone());
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        m.set(self.dim + r, self.dim + c, y.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        LeftModule::from_blocks(blocks)
    }

    /// Transport along the basis change `v ↦ P v`.
    pub fn conjugate(&self, p: &Mat, p_inv: &Mat) -> Self {
        let blocks = self.blocks.iter().map(|b| &(p * &b.to_dense()) * p_inv).collect();
        LeftModule::from_blocks(blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    dim: usize,
    coaction: Mat,
}

impl RightComodule {
    pub fn new(h_dim: usize, coaction: Mat) -> Result<Self> {
        let d = coaction.cols();
        if coaction.rows() != d * h_dim {
            return Err(Error::DimensionMismatch(format!("coaction is {}x{d}, expected {}x{d}", coaction.rows(), d * h_dim)));
        }
        Ok(RightComodule { dim: d, coaction })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &Mat {
        &self.coaction
    }

    pub fn h_dim(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.coaction.rows() / self.dim
        }
    }

    /// `δ(e_m)` as `(m', a, coefficient)` for `e_{m'} ⊗ e_a`.
    pub fn terms(&self, m: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.h_dim();
        (0..self.coaction.rows())
            .filter(|&r| !self.coaction.get(r, m).is_zero())
            .map(|r| (r / n, r % n, self.coaction.get(r, m).clone()))
            .collect()
    }

    /// Coassociativity and counitality.
    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        let n = h.dim();
        if self.dim > 0 && self.h_dim() != n {
            return Err(Error::DimensionMismatch(format!("comodule over a {}-dim coalgebra used with a {n}-dim one", self.h_dim())));
        }
        let d = self.dim;
        let co = self.coaction.to_sparse();
        let lhs = &co.lift_left(n) * &co;
        let rhs = &SparseMat::identity(d).kron(&h.comult().to_sparse()) * &co;
        if lhs != rhs {
            return Err(Error::InvalidStructure("coaction is not coassociative".into()));
        }
        let counit = &SparseMat::identity(d).kron(&h.counit().to_sparse()) * &co;
        if !counit.is_identity() {
            return Err(Error::InvalidStructure("coaction is not counital".into()));
        }
        Ok(())
    }

    /// `m ↦ m ⊗ γ` on `k^d`, for a grouplike `γ`.
    pub fn scalar(h: &HopfAlgebra, d: usize, gamma: &[Scalar]) -> Self {
        let n = h.dim();
        let mut co = Mat::zeros(d * n, d);
        for m in 0..d {
            for (a, v) in gamma.iter().enumerate() {
                co.set(m * n + a, m, v.clone());
            }
        }
        RightComodule { dim: d, coaction: co }
    }

    /// `H` with coaction `Δ`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        RightComodule { dim: h.dim(), coaction: h.comult().clone() }
    }

    pub fn direct_sum(&self, other: &RightComodule) -> Self {
        let n = self.h_dim().max(other.h_dim());
        let d = self.dim + other.dim;
        let mut co = Mat::zeros(d * n, d);
        for (off, part) in [(0, self), (self.dim, other)] {
            for m in 0..part.dim {
                for (m2, a, v) in part.terms(m) {
                    co.set((off + m2) * n + a, off + m, v);
                }
            }
        }
        RightComodule { dim: d, coaction: co }
    }

    pub fn conjugate(&self, p: &Mat, p_inv: &Mat) -> Self {
        let n = self.h_dim();
        let coaction = &(&p.kron(&Mat::identity(n)) * &self.coaction) * p_inv;
        RightComodule { dim: self.dim, coaction }
    }
}

/// A left module and right comodule on the same space, with no
/// compatibility assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComod {
    module: LeftModule,
    comodule: RightComodule,
}

#[derive(Serialize, Deserialize)]
struct ModComodJson {
    dim: usize,
    action: Mat,
    coaction: Mat,
}

impl ModComod {
    pub fn new(module: LeftModule, comodule: RightComodule) -> Result<Self> {
        if module.dim() != comodule.dim() {
            return Err(Error::DimensionMismatch(format!("module has dim {}, comodule has dim {}", module.dim(), comodule.dim())));
        }
        Ok(ModComod { module, comodule })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }

    pub fn comodule(&self) -> &RightComodule {
        &self.comodule
    }

    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        self.module.validate(h)?;
        self.comodule.validate(h)
    }

    pub fn direct_sum(&self, other: &ModComod) -> Self {
        ModComod { module: self.module.direct_sum(&other.module), comodule: self.comodule.direct_sum(&other.comodule) }
    }

    /// Transport both structures along `P`; compatibility is preserved.
    pub fn conjugate(&self, p: &Mat, p_inv: &Mat) -> Self {
        ModComod { module: self.module.conjugate(p, p_inv), comodule: self.comodule.conjugate(p, p_inv) }
    }

    pub fn from_json(h: &HopfAlgebra, text: &str) -> Result<Self> {
        let raw: ModComodJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let m = ModComod::new(LeftModule::new(h.dim(), raw.action)?, RightComodule::new(h.dim(), raw.coaction)?)?;
        if m.dim() != raw.dim {
            return Err(Error::Parse(format!("declared dim {} but matrices have dim {}", raw.dim, m.dim())));
        }
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let raw = ModComodJson { dim: self.dim(), action: self.module.action.clone(), coaction: self.comodule.coaction.clone() };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

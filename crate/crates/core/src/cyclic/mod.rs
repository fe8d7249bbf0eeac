//! Finite (co)cyclic towers, the builders that produce them from a stable
//! coefficient, and the relation verifier.
//!
//! Storage is degree-indexed in both variances. `faces[n]` holds the `n + 1`
//! maps between degrees `n` and `n − 1`; `degens[n]` holds the `n + 1` maps
//! between degrees `n` and `n + 1`. For a cyclic object they point down and
//! up respectively (`δ_i: C_n → C_{n−1}`, `σ_i: C_n → C_{n+1}`); for a
//! cocyclic object they point the other way (`δ_i: C^{n−1} → C^n`,
//! `σ_i: C^{n+1} → C^n`).

mod build;
mod relations;

pub use build::{
    build, build_contra_algebra, build_contra_coalgebra, build_cov_algebra, build_cov_coalgebra, build_generic, BuildOptions,
    BuilderRoute,
};
pub use relations::{verify_relations, RelationFamily, RelationReport, Violation};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, SparseMat, SubspaceBasis};
use crate::trace::TraceVariance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variance {
    Cyclic,
    Cocyclic,
}

/// The four ways of feeding a module (co)algebra to a Hom functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theory {
    CovAlg,
    CovCoalg,
    ContraAlg,
    ContraCoalg,
}

impl Theory {
    pub const ALL: [Theory; 4] = [Theory::CovAlg, Theory::CovCoalg, Theory::ContraAlg, Theory::ContraCoalg];

    pub fn from_parts(trace: TraceVariance, algebra: bool) -> Theory {
        match (trace, algebra) {
            (TraceVariance::Covariant, true) => Theory::CovAlg,
            (TraceVariance::Covariant, false) => Theory::CovCoalg,
            (TraceVariance::Contravariant, true) => Theory::ContraAlg,
            (TraceVariance::Contravariant, false) => Theory::ContraCoalg,
        }
    }

    pub fn trace_variance(self) -> TraceVariance {
        match self {
            Theory::CovAlg | Theory::CovCoalg => TraceVariance::Covariant,
            Theory::ContraAlg | Theory::ContraCoalg => TraceVariance::Contravariant,
        }
    }

    pub fn uses_algebra(self) -> bool {
        matches!(self, Theory::CovAlg | Theory::ContraAlg)
    }

    pub fn variance(self) -> Variance {
        match self {
            Theory::CovAlg | Theory::ContraCoalg => Variance::Cyclic,
            Theory::CovCoalg | Theory::ContraAlg => Variance::Cocyclic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::CovAlg => "cov-alg",
            Theory::CovCoalg => "cov-coalg",
            Theory::ContraAlg => "contra-alg",
            Theory::ContraCoalg => "contra-coalg",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theory::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theory {s:?}; expected one of cov-alg, cov-coalg, contra-alg, contra-coalg")))
    }
}

/// What a tower was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub theory: Theory,
    pub hopf_basis: Vec<String>,
    pub coeff_dim: usize,
    pub object_dim: usize,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicObject {
    variance: Variance,
    dims: Vec<usize>,
    faces: Vec<Vec<SparseMat>>,
    degens: Vec<Vec<SparseMat>>,
    cyclic_ops: Vec<SparseMat>,
    spaces: Vec<SubspaceBasis>,
    provenance: Option<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct CyclicJson {
    variance: Variance,
    degree_cap: usize,
    dims: Vec<usize>,
    faces: Vec<Vec<Mat>>,
    degens: Vec<Vec<Mat>>,
    cyclic_ops: Vec<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

impl CyclicObject {
    /// Checks that every map has the shape its position demands.
    pub fn new(
        variance: Variance,
        dims: Vec<usize>,
        faces: Vec<Vec<SparseMat>>,
        degens: Vec<Vec<SparseMat>>,
        cyclic_ops: Vec<SparseMat>,
        provenance: Option<Provenance>,
    ) -> Result<Self> {
        let co = CyclicObject { variance, dims, faces, degens, cyclic_ops, spaces: Vec::new(), provenance };
        co.check_shapes()?;
        Ok(co)
    }

    fn check_shapes(&self) -> Result<()> {
        let len = self.dims.len();
        if len < 2 {
            return Err(Error::CapTooSmall(len.saturating_sub(1)));
        }
        if self.faces.len() != len || self.degens.len() != len || self.cyclic_ops.len() != len {
            return Err(Error::InvalidStructure("faces, degeneracies and cyclic maps must be listed for every degree".into()));
        }
        let bad = |what: &str, n: usize| Error::InvalidStructure(format!("{what} at degree {n} has the wrong shape or count"));
        for n in 0..len {
            let dn = self.dims[n];
            let t = &self.cyclic_ops[n];
            if t.rows() != dn || t.cols() != dn {
                return Err(bad("cyclic map", n));
            }
            let want_faces = if n == 0 { 0 } else { n + 1 };
            if self.faces[n].len() != want_faces {
                return Err(bad("face list", n));
            }
            for f in &self.faces[n] {
                let (r, c) = self.oriented(dn, self.dims[n - 1]);
                if f.rows() != r || f.cols() != c {
                    return Err(bad("face", n));
                }
            }
            let want_degens = if n + 1 == len { 0 } else { n + 1 };
            if self.degens[n].len() != want_degens {
                return Err(bad("degeneracy list", n));
            }
            for s in &self.degens[n] {
                let (r, c) = self.oriented(dn, self.dims[n + 1]);
                if s.rows() != r || s.cols() != c {
                    return Err(bad("degeneracy", n));
                }
            }
        }
        Ok(())
    }

    /// `(rows, cols)` of a map between degree `n` (dim `dn`) and its
    /// neighbour (dim `dm`).
    fn oriented(&self, dn: usize, dm: usize) -> (usize, usize) {
        match self.variance {
            Variance::Cyclic => (dm, dn),
            Variance::Cocyclic => (dn, dm),
        }
    }

    pub(crate) fn with_spaces(mut self, spaces: Vec<SubspaceBasis>) -> Self {
        self.spaces = spaces;
        self
    }

    /// All-zero tower with the given cap.
    pub fn zero(variance: Variance, cap: usize) -> Self {
        let z = |r, c| SparseMat::zeros(r, c);
        let faces = (0..=cap).map(|n| if n == 0 { vec![] } else { vec![z(0, 0); n + 1] }).collect();
        let degens = (0..=cap).map(|n| if n == cap { vec![] } else { vec![z(0, 0); n + 1] }).collect();
        CyclicObject::new(variance, vec![0; cap + 1], faces, degens, vec![z(0, 0); cap + 1], None).expect("consistent")
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn degree_cap(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn face(&self, n: usize, i: usize) -> &SparseMat {
        &self.faces[n][i]
    }

    pub fn degen(&self, n: usize, i: usize) -> &SparseMat {
        &self.degens[n][i]
    }

    pub fn tau(&self, n: usize) -> &SparseMat {
        &self.cyclic_ops[n]
    }

    /// Subspaces the tower was computed in; empty for loaded objects.
    pub fn spaces(&self) -> &[SubspaceBasis] {
        &self.spaces
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Replaces one face map, keeping its shape.
    pub fn replace_face(&mut self, n: usize, i: usize, m: SparseMat) -> Result<()> {
        let old = &self.faces[n][i];
        if old.rows() != m.rows() || old.cols() != m.cols() {
            return Err(Error::DimensionMismatch("replacement face has a different shape".into()));
        }
        self.faces[n][i] = m;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let dense = |v: &Vec<SparseMat>| v.iter().map(SparseMat::to_dense).collect::<Vec<_>>();
        let raw = CyclicJson {
            variance: self.variance,
            degree_cap: self.degree_cap(),
            dims: self.dims.clone(),
            faces: self.faces.iter().map(dense).collect(),
            degens: self.degens.iter().map(dense).collect(),
            cyclic_ops: dense(&self.cyclic_ops),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CyclicJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.degree_cap + 1 != raw.dims.len() {
            return Err(Error::Parse(format!("degree_cap {} does not match {} listed dims", raw.degree_cap, raw.dims.len())));
        }
        let sparse = |v: Vec<Mat>| v.iter().map(Mat::to_sparse).collect::<Vec<_>>();
        CyclicObject::new(
            raw.variance,
            raw.dims,
            raw.faces.into_iter().map(sparse).collect(),
            raw.degens.into_iter().map(sparse).collect(),
            sparse(raw.cyclic_ops),
            raw.provenance,
        )
    }
}

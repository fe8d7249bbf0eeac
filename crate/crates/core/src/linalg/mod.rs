//! Exact rational linear algebra.
//!
//! Small structure-constant matrices use the dense [`Mat`]; maps between
//! tensor powers use [`SparseMat`]. Both share one elimination engine.

mod echelon;
mod mat;
pub mod modp;
mod scalar;
mod shape;
mod sparse;

pub use mat::Mat;
pub use scalar::{ParseScalarError, Scalar};
pub use shape::{flat_index, multi_index, permute_legs, TensorShape};
pub use sparse::SparseMat;

use crate::error::{Error, Result};
use echelon::Echelon;

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kron(b)
}

pub fn rank(a: &Mat) -> usize {
    a.rank()
}

pub fn kernel_basis(a: &Mat) -> Mat {
    a.kernel_basis()
}

/// A subspace of a tensor-product space given by an inclusion matrix of full
/// column rank.
///
/// Coordinates of a vector in the subspace are read off a set of rows on
/// which the inclusion is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_shape: TensorShape,
    inclusion: SparseMat,
    coord_rows: Vec<usize>,
    // `None` when the selected rows are already the identity.
    coord_inv: Option<SparseMat>,
}

impl SubspaceBasis {
    pub fn from_inclusion(ambient_shape: TensorShape, inclusion: SparseMat) -> Result<Self> {
        if ambient_shape.total_dim() != inclusion.rows() {
            return Err(Error::DimensionMismatch(format!(
                "shape {} has dim {}, inclusion has {} rows",
                ambient_shape.label(),
                ambient_shape.total_dim(),
                inclusion.rows()
            )));
        }
        let t = inclusion.transpose();
        let mut e = Echelon::new(inclusion.cols());
        let mut coord_rows = Vec::new();
        for r in 0..t.cols() {
            if coord_rows.len() == inclusion.cols() {
                break;
            }
            if e.insert(t.col(r)) {
                coord_rows.push(r);
            }
        }
        if coord_rows.len() < inclusion.cols() {
            return Err(Error::InvalidStructure("inclusion is not of full column rank".into()));
        }
        let block = inclusion.select_rows(&coord_rows);
        let coord_inv = if block.is_identity() {
            None
        } else {
            Some(block.to_dense().inverse().expect("independent rows give an invertible block").to_sparse())
        };
        Ok(SubspaceBasis { ambient_shape, inclusion, coord_rows, coord_inv })
    }

    /// Null space of `system` (rows = equations on the ambient space).
    pub fn kernel_of(ambient_shape: TensorShape, system: &SparseMat) -> Self {
        assert_eq!(ambient_shape.total_dim(), system.cols(), "system width does not match the ambient space");
        let (inclusion, coord_rows) = system.kernel();
        SubspaceBasis { ambient_shape, inclusion, coord_rows, coord_inv: None }
    }

    pub fn whole(ambient_shape: TensorShape) -> Self {
        let n = ambient_shape.total_dim();
        SubspaceBasis { ambient_shape, inclusion: SparseMat::identity(n), coord_rows: (0..n).collect(), coord_inv: None }
    }

    pub fn ambient_shape(&self) -> &TensorShape {
        &self.ambient_shape
    }

    pub fn ambient_dim(&self) -> usize {
        self.inclusion.rows()
    }

    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn inclusion(&self) -> &SparseMat {
        &self.inclusion
    }

    pub fn inclusion_dense(&self) -> Mat {
        self.inclusion.to_dense()
    }

    /// Coordinates of the columns of `v`, assuming they lie in the subspace.
    fn coordinates(&self, v: &SparseMat) -> SparseMat {
        let picked = v.select_rows(&self.coord_rows);
        match &self.coord_inv {
            None => picked,
            Some(inv) => inv * &picked,
        }
    }

    /// Coordinates of the columns of `v`, or `NotStable` if one leaves the span.
    pub fn express(&self, v: &SparseMat) -> Result<SparseMat> {
        let g = self.coordinates(v);
        let back = &self.inclusion * &g;
        match back.first_difference(v) {
            None => Ok(g),
            Some((_, c)) => Err(Error::NotStable { column: c }),
        }
    }

    /// Whether the two subspaces have the same column span.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.dim() == other.dim() && self.express(&other.inclusion).is_ok()
    }
}

/// Matrix of `f` between two subspaces: `cod.inclusion · g = f · dom.inclusion`.
pub fn restrict_sparse(f: &SparseMat, dom: &SubspaceBasis, cod: &SubspaceBasis) -> Result<SparseMat> {
    if f.cols() != dom.ambient_dim() || f.rows() != cod.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, subspaces live in {} and {}",
            f.rows(),
            f.cols(),
            dom.ambient_dim(),
            cod.ambient_dim()
        )));
    }
    cod.express(&(f * dom.inclusion()))
}

pub fn restrict_map(f: &Mat, dom: &SubspaceBasis, cod: &SubspaceBasis) -> Result<Mat> {
    restrict_sparse(&f.to_sparse(), dom, cod).map(|g| g.to_dense())
}

/// `dim ker d_out − rank d_in`, after checking `d_out · d_in = 0`.
pub fn homology_dim_sparse(d_out: &SparseMat, d_in: &SparseMat) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!("{} columns against {} rows", d_out.cols(), d_in.rows())));
    }
    if !(d_out * d_in).is_zero() {
        return Err(Error::NotAComplex { degree: None });
    }
    Ok(d_out.cols() - d_out.rank() - d_in.rank())
}

pub fn homology_dim(d_out: &Mat, d_in: &Mat) -> Result<usize> {
    homology_dim_sparse(&d_out.to_sparse(), &d_in.to_sparse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_subspace() -> SubspaceBasis {
        // symmetric tensors in k²⊗k²: e00, e01+e10, e11
        let inc = Mat::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        SubspaceBasis::from_inclusion(TensorShape::single("V", 2).push("V", 2), inc.to_sparse()).unwrap()
    }

    #[test]
    fn restrict_identity() {
        let s = sym_subspace();
        let g = restrict_map(&Mat::identity(4), &s, &s).unwrap();
        assert!(g.is_identity());
    }

    #[test]
    fn restrict_zero_domain() {
        let zero = SubspaceBasis::from_inclusion(TensorShape::single("V", 3), SparseMat::zeros(3, 0)).unwrap();
        let s = SubspaceBasis::whole(TensorShape::single("W", 4));
        let g = restrict_map(&Mat::zeros(4, 3), &zero, &s).unwrap();
        assert_eq!(g.shape(), (4, 0));
    }

    #[test]
    fn restrict_swap_to_symmetric() {
        let s = sym_subspace();
        let swap = permute_legs(&[2, 2], &[1, 0]).to_dense();
        let g = restrict_map(&swap, &s, &s).unwrap();
        assert!(g.is_identity());
    }

    #[test]
    fn restrict_detects_escape() {
        let s = sym_subspace();
        let mut f = Mat::identity(4);
        f.set(1, 1, Scalar::from_int(2));
        assert!(matches!(restrict_map(&f, &s, &s), Err(Error::NotStable { .. })));
    }

    #[test]
    fn non_identity_coordinate_block() {
        let inc = Mat::from_ints(&[&[2, 1], &[1, 1], &[3, 5]]);
        let s = SubspaceBasis::from_inclusion(TensorShape::single("V", 3), inc.to_sparse()).unwrap();
        let v = Mat::from_ints(&[&[3], &[2], &[8]]);
        let c = s.express(&v.to_sparse()).unwrap().to_dense();
        assert_eq!(c, Mat::from_ints(&[&[1], &[1]]));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_dim(&Mat::zeros(0, 1), &Mat::zeros(1, 0)).unwrap(), 1);
        assert_eq!(homology_dim(&Mat::identity(2), &Mat::zeros(2, 0)).unwrap(), 0);
        assert_eq!(homology_dim(&Mat::from_ints(&[&[1, 1]]), &Mat::zeros(2, 0)).unwrap(), 1);
        let d = Mat::from_ints(&[&[1]]);
        assert!(matches!(homology_dim(&d, &d), Err(Error::NotAComplex { .. })));
    }
}

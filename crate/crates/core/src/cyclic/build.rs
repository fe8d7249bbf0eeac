use rayon::prelude::*;

use super::{CyclicObject, Provenance, Theory};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{flat_index, multi_index, restrict_sparse, Scalar, SparseMat, SubspaceBasis};
use crate::rep::{LeftModule, ModComod, ModuleAlgebra, ModuleCoalgebra, ModuleObject};
use crate::trace::{TraceInstance, TraceVariance};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Accept central coefficients that are not stable; the result is then
    /// only paracyclic.
    pub allow_paracyclic: bool,
}

/// Which of the two independent constructions to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuilderRoute {
    /// Through the 2-trace: `τ` from `ι`, the last face from `δ₀` and `τ`.
    Generic,
    /// From the explicit element formulas.
    Concrete,
}

fn check_cap(cap: usize) -> Result<()> {
    if cap < 1 {
        return Err(Error::CapTooSmall(cap));
    }
    Ok(())
}

fn instance(h: &HopfAlgebra, m: &ModComod, theory: Theory, opts: BuildOptions) -> Result<TraceInstance> {
    let v = theory.trace_variance();
    if opts.allow_paracyclic {
        TraceInstance::paracyclic(h.clone(), m.clone(), v)
    } else {
        TraceInstance::new(h.clone(), m.clone(), v)
    }
}

/// `F(M⊗A^{⊗n+1})` for `n = 0..=cap`.
fn tower_spaces(t: &TraceInstance, a: &LeftModule, cap: usize) -> Vec<SubspaceBasis> {
    let labels: Vec<String> = (0..=cap).map(|k| format!("A{k}")).collect();
    (0..=cap)
        .into_par_iter()
        .map(|n| {
            let factors: Vec<(&str, &LeftModule)> = labels[..=n].iter().map(|l| (l.as_str(), a)).collect();
            t.space(&factors)
        })
        .collect()
}

/// Restricts an ambient map written in the covariant direction, `src → tgt`.
/// Contravariantly the induced map runs `F(tgt) → F(src)` through the
/// transpose.
fn induce(t: &TraceInstance, big: &SparseMat, src: &SubspaceBasis, tgt: &SubspaceBasis) -> Result<SparseMat> {
    match t.variance() {
        TraceVariance::Covariant => restrict_sparse(big, src, tgt),
        TraceVariance::Contravariant => restrict_sparse(&big.transpose(), tgt, src),
    }
}

fn invert(m: &SparseMat) -> Result<SparseMat> {
    m.to_dense()
        .inverse()
        .map(|i| i.to_sparse())
        .ok_or_else(|| Error::InvalidStructure("the swap isomorphism restricted to a singular matrix".into()))
}

/// Ambient structure maps of the tower, indexed by the covariant source
/// degree `n` (the space `M⊗A^{⊗n+1}`).
trait AmbientMaps: Sync {
    /// Algebra: multiply slots `i, i+1` (`n+1 → n` slots). Coalgebra:
    /// comultiply slot `i` (`n → n+1` slots).
    fn face(&self, n: usize, i: usize) -> SparseMat;
    /// Algebra: insert `1` after slot `i` (`n+1 → n+2`). Coalgebra: apply
    /// `ε` to slot `i+1` (`n+2 → n+1`).
    fn degen(&self, n: usize, i: usize) -> SparseMat;
}

struct KronMaps<'a> {
    m_dim: usize,
    a_dim: usize,
    obj: &'a ModuleObject,
}

impl KronMaps<'_> {
    fn id(&self, slots: usize, with_m: bool) -> SparseMat {
        let d = self.a_dim.pow(slots as u32) * if with_m { self.m_dim } else { 1 };
        SparseMat::identity(d)
    }
}

impl AmbientMaps for KronMaps<'_> {
    fn face(&self, n: usize, i: usize) -> SparseMat {
        match self.obj {
            ModuleObject::Algebra(a) => self.id(i, true).kron(&a.mult().to_sparse()).kron(&self.id(n - 1 - i, false)),
            ModuleObject::Coalgebra(c) => self.id(i, true).kron(&c.comult().to_sparse()).kron(&self.id(n - 1 - i, false)),
        }
    }

    fn degen(&self, n: usize, i: usize) -> SparseMat {
        match self.obj {
            ModuleObject::Algebra(a) => self.id(i + 1, true).kron(&a.unit().to_sparse()).kron(&self.id(n - i, false)),
            ModuleObject::Coalgebra(c) => self.id(i + 1, true).kron(&c.counit().to_sparse()).kron(&self.id(n - i, false)),
        }
    }
}

fn tower(
    t: &TraceInstance,
    obj: &ModuleObject,
    theory: Theory,
    cap: usize,
    spaces: Vec<SubspaceBasis>,
    maps: &dyn AmbientMaps,
    taus: Vec<SparseMat>,
    last_faces: Option<Vec<SparseMat>>,
) -> Result<CyclicObject> {
    let algebra = theory.uses_algebra();
    let cyclic = theory.variance() == super::Variance::Cyclic;
    let sp = &spaces;
    // faces[n] connects degrees n and n−1; the ambient face lives at source
    // degree n (algebra) or n−1 (coalgebra)
    let faces: Vec<Vec<SparseMat>> = (0..=cap)
        .into_par_iter()
        .map(|n| -> Result<Vec<SparseMat>> {
            if n == 0 {
                return Ok(Vec::new());
            }
            let mut out = (0..n)
                .map(|i| {
                    if algebra {
                        induce(t, &maps.face(n, i), &sp[n], &sp[n - 1])
                    } else {
                        induce(t, &maps.face(n, i), &sp[n - 1], &sp[n])
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let last = match &last_faces {
                Some(l) => l[n].clone(),
                None if cyclic => &out[0] * &taus[n],
                None => &taus[n] * &out[0],
            };
            out.push(last);
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let degens: Vec<Vec<SparseMat>> = (0..=cap)
        .into_par_iter()
        .map(|n| -> Result<Vec<SparseMat>> {
            if n == cap {
                return Ok(Vec::new());
            }
            (0..=n)
                .map(|i| {
                    if algebra {
                        induce(t, &maps.degen(n, i), &sp[n], &sp[n + 1])
                    } else {
                        induce(t, &maps.degen(n, i), &sp[n + 1], &sp[n])
                    }
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let provenance = Provenance {
        theory,
        hopf_basis: t.hopf().basis_names().to_vec(),
        coeff_dim: t.coeff().dim(),
        object_dim: obj.module().dim(),
        stable: t.is_stable(),
    };
    let dims = spaces.iter().map(SubspaceBasis::dim).collect();
    Ok(CyclicObject::new(theory.variance(), dims, faces, degens, taus, Some(provenance))?.with_spaces(spaces))
}

/// The tower of a symmetric 2-trace `F(M·−)` evaluated on `A^{⊗•+1}`:
/// `τ_n` comes from `ι_A(A^{⊗n})` (or its inverse), and the last face is
/// `δ₀∘τ_n` for cyclic and `τ_n∘δ₀` for cocyclic output.
pub fn build_generic(t: &TraceInstance, obj: &ModuleObject, cap: usize) -> Result<CyclicObject> {
    check_cap(cap)?;
    obj.validate(t.hopf())?;
    let theory = Theory::from_parts(t.variance(), matches!(obj, ModuleObject::Algebra(_)));
    let a = obj.module();
    let spaces = tower_spaces(t, a, cap);
    let ad = a.dim();
    let taus = (0..=cap)
        .into_par_iter()
        .map(|n| {
            let iota = t.iota_between(a, ad.pow(n as u32), &spaces[n], &spaces[n])?;
            match theory {
                Theory::CovAlg | Theory::ContraCoalg => Ok(iota),
                Theory::CovCoalg | Theory::ContraAlg => invert(&iota),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let maps = KronMaps { m_dim: t.coeff().dim(), a_dim: ad, obj };
    tower(t, obj, theory, cap, spaces, &maps, taus, None)
}

/// Sparse matrix of a map given on basis tensors.
fn tabulate<F>(in_dims: &[usize], out_dims: &[usize], f: F) -> SparseMat
where
    F: Fn(&[usize]) -> Vec<(Vec<usize>, Scalar)> + Sync,
{
    let cols: usize = in_dims.iter().product();
    let rows: usize = out_dims.iter().product();
    let columns = (0..cols)
        .into_par_iter()
        .map(|c| f(&multi_index(in_dims, c)).into_iter().map(|(idx, v)| (flat_index(out_dims, &idx), v)).collect())
        .collect();
    SparseMat::from_unsorted_columns(rows, columns)
}

/// Structure constants used by the element formulas.
struct Tables {
    m_dim: usize,
    a_dim: usize,
    // coaction[m] = (m', h, coefficient)
    coaction: Vec<Vec<(usize, usize, Scalar)>>,
    // antipode[h] = S(e_h)
    antipode: Vec<Vec<(usize, Scalar)>>,
    // act[h][b] = e_h · e_b in the object
    act: Vec<Vec<Vec<(usize, Scalar)>>>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vec<(usize, Scalar)>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
}

fn columns(m: &SparseMat) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.cols()).map(|c| m.col(c).to_vec()).collect()
}

impl Tables {
    fn new(h: &HopfAlgebra, m: &ModComod, obj: &ModuleObject) -> Self {
        let a = obj.module();
        let ad = a.dim();
        let mut t = Tables {
            m_dim: m.dim(),
            a_dim: ad,
            coaction: (0..m.dim()).map(|k| m.comodule().terms(k)).collect(),
            antipode: columns(&h.antipode().to_sparse()),
            act: (0..h.dim()).map(|x| columns(a.block(x))).collect(),
            mult: Vec::new(),
            unit: Vec::new(),
            comult: Vec::new(),
            counit: Vec::new(),
        };
        match obj {
            ModuleObject::Algebra(alg) => {
                let ms = alg.mult().to_sparse();
                t.mult = (0..ad).map(|x| (0..ad).map(|y| ms.col(x * ad + y).to_vec()).collect()).collect();
                t.unit = alg.unit().to_sparse().col(0).to_vec();
            }
            ModuleObject::Coalgebra(co) => {
                let cs = co.comult().to_sparse();
                t.comult = (0..ad).map(|x| cs.col(x).iter().map(|(r, v)| (r / ad, r % ad, v.clone())).collect()).collect();
                t.counit = co.counit().row(0).to_vec();
            }
        }
        t
    }

    fn dims(&self, slots: usize) -> Vec<usize> {
        let mut d = vec![self.m_dim];
        d.extend(std::iter::repeat_n(self.a_dim, slots));
        d
    }

    /// `x·e_b` for an element `x` of `H` given by terms.
    fn act_terms(&self, x: &[(usize, Scalar)], b: usize) -> Vec<(usize, Scalar)> {
        let mut out = Vec::new();
        for (hx, u) in x {
            for (r, v) in &self.act[*hx][b] {
                out.push((*r, u * v));
            }
        }
        out
    }

    fn product(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        &self.mult[x][y]
    }

    // m⊗a₀…a_n ↦ m₀ ⊗ m₁a_n ⊗ a₀ … a_{n−1}
    fn alg_tau(&self, n: usize) -> SparseMat {
        tabulate(&self.dims(n + 1), &self.dims(n + 1), |idx| {
            let mut out = Vec::new();
            for (m0, m1, c) in &self.coaction[idx[0]] {
                for (b, v) in self.act_terms(&[(*m1, Scalar::one())], idx[n + 1]) {
                    let mut o = vec![*m0, b];
                    o.extend_from_slice(&idx[1..=n]);
                    out.push((o, c * &v));
                }
            }
            out
        })
    }

    // m⊗a₀…a_n ↦ m₀ ⊗ (m₁a_n)a₀ ⊗ a₁ … a_{n−1}
    fn alg_last_face(&self, n: usize) -> SparseMat {
        tabulate(&self.dims(n + 1), &self.dims(n), |idx| {
            let mut out = Vec::new();
            for (m0, m1, c) in &self.coaction[idx[0]] {
                for (b, v) in self.act_terms(&[(*m1, Scalar::one())], idx[n + 1]) {
                    for (p, w) in self.product(b, idx[1]) {
                        let mut o = vec![*m0, *p];
                        o.extend_from_slice(&idx[2..=n]);
                        out.push((o, &(c * &v) * w));
                    }
                }
            }
            out
        })
    }

    // m⊗c₀…c_n ↦ m₀ ⊗ c₁ … c_n ⊗ S(m₁)c₀
    fn coalg_tau(&self, n: usize) -> SparseMat {
        tabulate(&self.dims(n + 1), &self.dims(n + 1), |idx| {
            let mut out = Vec::new();
            for (m0, m1, c) in &self.coaction[idx[0]] {
                for (b, v) in self.act_terms(&self.antipode[*m1], idx[1]) {
                    let mut o = vec![*m0];
                    o.extend_from_slice(&idx[2..=n + 1]);
                    o.push(b);
                    out.push((o, c * &v));
                }
            }
            out
        })
    }

    // m⊗c₀…c_{n−1} ↦ m₀ ⊗ c₀₍₂₎ ⊗ c₁ … c_{n−1} ⊗ S(m₁)c₀₍₁₎
    fn coalg_last_face(&self, n: usize) -> SparseMat {
        tabulate(&self.dims(n), &self.dims(n + 1), |idx| {
            let mut out = Vec::new();
            for (m0, m1, c) in &self.coaction[idx[0]] {
                for (x1, x2, w) in &self.comult[idx[1]] {
                    for (b, v) in self.act_terms(&self.antipode[*m1], *x1) {
                        let mut o = vec![*m0, *x2];
                        o.extend_from_slice(&idx[2..=n]);
                        o.push(b);
                        out.push((o, &(c * w) * &v));
                    }
                }
            }
            out
        })
    }
}

impl AmbientMaps for Tables {
    fn face(&self, n: usize, i: usize) -> SparseMat {
        if !self.mult.is_empty() {
            // a_i a_{i+1}
            tabulate(&self.dims(n + 1), &self.dims(n), |idx| {
                let s = i + 1;
                self.product(idx[s], idx[s + 1])
                    .iter()
                    .map(|(p, v)| {
                        let mut o = idx[..s].to_vec();
                        o.push(*p);
                        o.extend_from_slice(&idx[s + 2..]);
                        (o, v.clone())
                    })
                    .collect()
            })
        } else {
            // c_i ↦ c_i₍₁₎ ⊗ c_i₍₂₎
            tabulate(&self.dims(n), &self.dims(n + 1), |idx| {
                let s = i + 1;
                self.comult[idx[s]]
                    .iter()
                    .map(|(x, y, v)| {
                        let mut o = idx[..s].to_vec();
                        o.push(*x);
                        o.push(*y);
                        o.extend_from_slice(&idx[s + 1..]);
                        (o, v.clone())
                    })
                    .collect()
            })
        }
    }

    fn degen(&self, n: usize, i: usize) -> SparseMat {
        if !self.mult.is_empty() {
            // insert 1 after a_i
            tabulate(&self.dims(n + 1), &self.dims(n + 2), |idx| {
                let s = i + 2;
                self.unit
                    .iter()
                    .map(|(u, v)| {
                        let mut o = idx[..s].to_vec();
                        o.push(*u);
                        o.extend_from_slice(&idx[s..]);
                        (o, v.clone())
                    })
                    .collect()
            })
        } else {
            // ε(c_{i+1})
            tabulate(&self.dims(n + 2), &self.dims(n + 1), |idx| {
                let s = i + 2;
                let e = &self.counit[idx[s]];
                if e.is_zero() {
                    return Vec::new();
                }
                let mut o = idx[..s].to_vec();
                o.extend_from_slice(&idx[s + 1..]);
                vec![(o, e.clone())]
            })
        }
    }
}

fn build_concrete(h: &HopfAlgebra, m: &ModComod, obj: &ModuleObject, theory: Theory, cap: usize, opts: BuildOptions) -> Result<CyclicObject> {
    check_cap(cap)?;
    obj.validate(h)?;
    let t = instance(h, m, theory, opts)?;
    let tables = Tables::new(h, m, obj);
    let spaces = tower_spaces(&t, obj.module(), cap);
    let algebra = theory.uses_algebra();
    let sp = &spaces;
    let taus = (0..=cap)
        .into_par_iter()
        .map(|n| {
            let big = if algebra { tables.alg_tau(n) } else { tables.coalg_tau(n) };
            induce(&t, &big, &sp[n], &sp[n])
        })
        .collect::<Result<Vec<_>>>()?;
    let last = (0..=cap)
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                return Ok(SparseMat::zeros(0, 0));
            }
            if algebra {
                induce(&t, &tables.alg_last_face(n), &sp[n], &sp[n - 1])
            } else {
                induce(&t, &tables.coalg_last_face(n), &sp[n - 1], &sp[n])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    tower(&t, obj, theory, cap, spaces, &tables, taus, Some(last))
}

/// Covariant theory on a module algebra: a cyclic object. Needs a 1-stable
/// `YD_1` coefficient.
pub fn build_cov_algebra(h: &HopfAlgebra, m: &ModComod, a: &ModuleAlgebra, cap: usize, opts: BuildOptions) -> Result<CyclicObject> {
    build_concrete(h, m, &ModuleObject::Algebra(a.clone()), Theory::CovAlg, cap, opts)
}

/// Covariant theory on a module coalgebra: a cocyclic object.
pub fn build_cov_coalgebra(h: &HopfAlgebra, m: &ModComod, c: &ModuleCoalgebra, cap: usize, opts: BuildOptions) -> Result<CyclicObject> {
    build_concrete(h, m, &ModuleObject::Coalgebra(c.clone()), Theory::CovCoalg, cap, opts)
}

/// Contravariant theory on a module algebra: a cocyclic object. Needs a
/// 0-stable `YD_{−1}` coefficient.
pub fn build_contra_algebra(h: &HopfAlgebra, m: &ModComod, a: &ModuleAlgebra, cap: usize, opts: BuildOptions) -> Result<CyclicObject> {
    build_concrete(h, m, &ModuleObject::Algebra(a.clone()), Theory::ContraAlg, cap, opts)
}

/// Contravariant theory on a module coalgebra: a cyclic object.
pub fn build_contra_coalgebra(h: &HopfAlgebra, m: &ModComod, c: &ModuleCoalgebra, cap: usize, opts: BuildOptions) -> Result<CyclicObject> {
    build_concrete(h, m, &ModuleObject::Coalgebra(c.clone()), Theory::ContraCoalg, cap, opts)
}

/// Runs either route for a theory; the object kind must match the theory.
pub fn build(
    theory: Theory,
    route: BuilderRoute,
    h: &HopfAlgebra,
    m: &ModComod,
    obj: &ModuleObject,
    cap: usize,
    opts: BuildOptions,
) -> Result<CyclicObject> {
    if theory.uses_algebra() != matches!(obj, ModuleObject::Algebra(_)) {
        let want = if theory.uses_algebra() { "module algebra" } else { "module coalgebra" };
        return Err(Error::InvalidStructure(format!("theory {theory} needs a {want}")));
    }
    match route {
        BuilderRoute::Generic => build_generic(&instance(h, m, theory, opts)?, obj, cap),
        BuilderRoute::Concrete => build_concrete(h, m, obj, theory, cap, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::verify_relations;
    use crate::rep::generate::{characters, grouplikes, one_dim};
    use crate::rep::trivial_modcomod;

    #[test]
    fn trivial_everything_is_scalar_identity() {
        let h = HopfAlgebra::trivial();
        let m = trivial_modcomod(&h);
        let k = ModuleAlgebra::ground(&h);
        for route in [BuilderRoute::Generic, BuilderRoute::Concrete] {
            let co = build(Theory::CovAlg, route, &h, &m, &ModuleObject::Algebra(k.clone()), 3, BuildOptions::default()).unwrap();
            assert_eq!(co.dims(), &[1, 1, 1, 1]);
            for n in 0..=3 {
                assert!(co.tau(n).is_identity());
            }
            assert!(verify_relations(&co).passed());
        }
    }

    #[test]
    fn degeneracy_inserts_unit_for_dual_numbers() {
        let h = HopfAlgebra::trivial();
        let m = trivial_modcomod(&h);
        let chi = vec![Scalar::one()];
        let a = ModuleAlgebra::weighted_dual_numbers(&h, &chi);
        let co = build_cov_algebra(&h, &m, &a, 2, BuildOptions::default()).unwrap();
        assert_eq!(co.dims()[..2], [2, 4]);
        // σ₀: a ↦ a⊗1, i.e. e_0 ↦ e_00 and e_1 ↦ e_10
        let s0 = co.degen(0, 0).to_dense();
        assert_eq!(s0.shape(), (4, 2));
        for (r, c) in [(0, 0), (2, 1)] {
            assert!(s0.get(r, c).is_one());
        }
        assert_eq!(s0.to_sparse().nnz(), 2);
    }

    #[test]
    fn routes_agree_on_sweedler() {
        let h = HopfAlgebra::sweedler();
        let a = ModuleAlgebra::sweedler_quadratic(0);
        let c = ModuleCoalgebra::dual_of(&h, &a);
        let mut built = std::collections::HashMap::new();
        for chi in characters(&h) {
            for g in grouplikes(&h) {
                let m = one_dim(&h, &chi, &g);
                for theory in Theory::ALL {
                    let obj = if theory.uses_algebra() { ModuleObject::Algebra(a.clone()) } else { ModuleObject::Coalgebra(c.clone()) };
                    let gen = build(theory, BuilderRoute::Generic, &h, &m, &obj, 3, BuildOptions::default());
                    let con = build(theory, BuilderRoute::Concrete, &h, &m, &obj, 3, BuildOptions::default());
                    match (gen, con) {
                        (Ok(g), Ok(k)) => {
                            *built.entry(theory).or_insert(0) += 1;
                            assert_eq!(g, k, "{theory}");
                            let r = verify_relations(&g);
                            assert!(r.passed(), "{theory}: {:?}", r.violations);
                        }
                        (Err(Error::CoefficientMismatch(_)), Err(Error::CoefficientMismatch(_))) => {}
                        (g, k) => panic!("{theory}: routes disagree on acceptance: {g:?} vs {k:?}"),
                    }
                }
            }
        }
        for theory in Theory::ALL {
            assert_eq!(built.get(&theory), Some(&2), "{theory}");
        }
    }

    #[test]
    fn cap_and_kind_errors() {
        let h = HopfAlgebra::trivial();
        let m = trivial_modcomod(&h);
        let k = ModuleObject::Algebra(ModuleAlgebra::ground(&h));
        let opts = BuildOptions::default();
        assert!(matches!(build(Theory::CovAlg, BuilderRoute::Generic, &h, &m, &k, 0, opts), Err(Error::CapTooSmall(0))));
        assert!(matches!(build(Theory::CovCoalg, BuilderRoute::Concrete, &h, &m, &k, 2, opts), Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn unstable_coefficient_is_only_paracyclic() {
        use crate::cyclic::RelationFamily;
        let h = HopfAlgebra::cyclic_group_algebra(2);
        let sign = vec![Scalar::one(), Scalar::from_int(-1)];
        let g = vec![Scalar::zero(), Scalar::one()];
        let m = one_dim(&h, &sign, &g);
        let a = ModuleAlgebra::cyclic_functions(&h, 2);
        let c = ModuleCoalgebra::dual_of(&h, &a);
        for theory in Theory::ALL {
            let obj = if theory.uses_algebra() { ModuleObject::Algebra(a.clone()) } else { ModuleObject::Coalgebra(c.clone()) };
            let strict = build(theory, BuilderRoute::Concrete, &h, &m, &obj, 3, BuildOptions::default());
            assert!(matches!(strict, Err(Error::CoefficientMismatch(_))), "{theory}");
            let opts = BuildOptions { allow_paracyclic: true };
            let gen = build(theory, BuilderRoute::Generic, &h, &m, &obj, 3, opts).unwrap();
            let con = build(theory, BuilderRoute::Concrete, &h, &m, &obj, 3, opts).unwrap();
            assert_eq!(gen, con, "{theory}");
            let r = verify_relations(&gen);
            assert!(!r.passed(), "{theory}");
            assert_eq!(r.families(), vec![RelationFamily::CyclicPower], "{theory}");
        }
    }
}

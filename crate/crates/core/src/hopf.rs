//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Leg order follows the global flattening: the column of `mult` for
//! `e_a ⊗ e_b` is `a·n + b`, and the row of `comult` for `e_b ⊗ e_c` is
//! `b·n + c`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::modp::ModPMat;
use crate::linalg::{permute_legs, Mat, Scalar};

/// Sparse element of `H` or of a tensor power of `H`.
pub type Terms = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    basis: Vec<String>,
    mult: Mat,
    unit: Mat,
    comult: Mat,
    counit: Mat,
    antipode: Mat,
    antipode_inv: Mat,
    // products[a][b] = e_a e_b
    products: Vec<Vec<Terms>>,
    // coproducts[a] = Δ(e_a) as (b, c, coefficient)
    coproducts: Vec<Vec<(usize, usize, Scalar)>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }
}

impl Eq for HopfAlgebra {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// First `(row, col)` where the two sides differ.
    pub first_difference: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct HopfJson {
    dim: usize,
    basis: Vec<String>,
    mult: Mat,
    unit: Vec<Scalar>,
    comult: Mat,
    counit: Vec<Scalar>,
    antipode: Mat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode_inv: Option<Mat>,
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra from structure matrices without checking the
    /// axioms. Fails on shape errors or a singular antipode.
    pub fn from_parts(
        basis: Vec<String>,
        mult: Mat,
        unit: Mat,
        comult: Mat,
        counit: Mat,
        antipode: Mat,
        antipode_inv: Option<Mat>,
    ) -> Result<Self> {
        let n = basis.len();
        let shapes = [
            ("mult", mult.shape(), (n, n * n)),
            ("unit", unit.shape(), (n, 1)),
            ("comult", comult.shape(), (n * n, n)),
            ("counit", counit.shape(), (1, n)),
            ("antipode", antipode.shape(), (n, n)),
        ];
        for (name, got, want) in shapes {
            if got != want {
                return Err(Error::DimensionMismatch(format!("{name} is {}x{}, expected {}x{}", got.0, got.1, want.0, want.1)));
            }
        }
        let antipode_inv = match antipode_inv {
            Some(inv) => {
                if inv.shape() != (n, n) {
                    return Err(Error::DimensionMismatch(format!("antipode_inv is {}x{}, expected {n}x{n}", inv.rows(), inv.cols())));
                }
                inv
            }
            None => antipode.inverse().ok_or(Error::SingularAntipode)?,
        };
        let products = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).filter(|&c| !mult.get(c, a * n + b).is_zero()).map(|c| (c, mult.get(c, a * n + b).clone())).collect())
                    .collect()
            })
            .collect();
        let coproducts = (0..n)
            .map(|a| {
                (0..n * n)
                    .filter(|&r| !comult.get(r, a).is_zero())
                    .map(|r| (r / n, r % n, comult.get(r, a).clone()))
                    .collect()
            })
            .collect();
        Ok(HopfAlgebra { basis, mult, unit, comult, counit, antipode, antipode_inv, products, coproducts })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Mat {
        &self.antipode_inv
    }

    /// `S^k`; negative powers use `S⁻¹`.
    pub fn s_power(&self, k: i64) -> Mat {
        let base = if k >= 0 { &self.antipode } else { &self.antipode_inv };
        base.pow(k.unsigned_abs() as u32)
    }

    pub fn counit_of(&self, a: usize) -> &Scalar {
        self.counit.get(0, a)
    }

    pub fn unit_terms(&self) -> Terms {
        column_terms(&self.unit, 0)
    }

    /// `e_a e_b`.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.products[a][b]
    }

    /// `Δ(e_a)` as `(b, c, coefficient)` triples.
    pub fn coproduct(&self, a: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[a]
    }

    /// `Δ^{(k-1)}(e_a)` with `k` tensor legs, as multi-indices.
    pub fn iterated_coproduct(&self, a: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(legs >= 1);
        let mut terms = vec![(vec![a], Scalar::one())];
        for _ in 1..legs {
            let mut next = Vec::new();
            for (idx, coef) in terms {
                let last = *idx.last().unwrap();
                for (b, c, v) in self.coproduct(last) {
                    let mut nidx = idx[..idx.len() - 1].to_vec();
                    nidx.push(*b);
                    nidx.push(*c);
                    next.push((nidx, &coef * v));
                }
            }
            terms = next;
        }
        terms
    }

    /// Product of two elements given as sparse combinations.
    pub fn mul_terms(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Terms {
        let mut acc = vec![Scalar::zero(); self.dim()];
        for (a, u) in x {
            for (b, v) in y {
                let uv = u * v;
                for (c, w) in self.product(*a, *b) {
                    acc[*c] += &(&uv * w);
                }
            }
        }
        dense_to_terms(acc)
    }

    /// Applies a linear map on `H` (an `n×n` matrix such as a power of `S`).
    pub fn apply_terms(&self, m: &Mat, x: &[(usize, Scalar)]) -> Terms {
        let mut acc = vec![Scalar::zero(); self.dim()];
        for (a, u) in x {
            for (r, slot) in acc.iter_mut().enumerate() {
                let w = m.get(r, *a);
                if !w.is_zero() {
                    *slot += &(u * w);
                }
            }
        }
        dense_to_terms(acc)
    }

    fn axiom_pairs(&self) -> Vec<(&'static str, Mat, Mat)> {
        let n = self.dim();
        let i = Mat::identity(n);
        let m = &self.mult;
        let d = &self.comult;
        let u = &self.unit;
        let e = &self.counit;
        let s = &self.antipode;
        let swap_mid = permute_legs(&[n, n, n, n], &[0, 2, 1, 3]).to_dense();
        let one = Mat::identity(1);
        vec![
            ("associativity", m * &m.kron(&i), m * &i.kron(m)),
            ("unit", m * &u.kron(&i), i.clone()),
            ("unit", m * &i.kron(u), i.clone()),
            ("coassociativity", &d.kron(&i) * d, &i.kron(d) * d),
            ("counit", &e.kron(&i) * d, i.clone()),
            ("counit", &i.kron(e) * d, i.clone()),
            ("bialgebra_comult", d * m, &(&m.kron(m) * &swap_mid) * &d.kron(d)),
            ("bialgebra_counit", e * m, e.kron(e)),
            ("bialgebra_unit", d * u, u.kron(u)),
            ("bialgebra_unit", e * u, one),
            ("antipode", &(m * &s.kron(&i)) * d, u * e),
            ("antipode", &(m * &i.kron(s)) * d, u * e),
            ("antipode_inverse", &self.antipode_inv * s, i.clone()),
            ("antipode_inverse", s * &self.antipode_inv, i),
        ]
    }

    /// Every Hopf axiom as an exact matrix identity. Identities sharing a
    /// name are merged; the first failing side is reported.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport { checks: Vec::new() };
        for (name, lhs, rhs) in self.axiom_pairs() {
            merge(&mut report, name, lhs.first_difference(&rhs));
        }
        report
    }

    /// The same identities after reducing all structure constants modulo the
    /// prime `p`. Fails if `p` divides a denominator.
    pub fn verify_axioms_mod_p(&self, p: u64) -> Result<AxiomReport> {
        if !crate::linalg::modp::is_prime(p) {
            return Err(Error::InvalidStructure(format!("{p} is not prime")));
        }
        let mut report = AxiomReport { checks: Vec::new() };
        for (name, lhs, rhs) in self.axiom_pairs() {
            let l = ModPMat::reduce(&lhs, p);
            let r = ModPMat::reduce(&rhs, p);
            let (Some(l), Some(r)) = (l, r) else {
                return Err(Error::InvalidStructure(format!("a structure constant has a denominator divisible by {p}")));
            };
            merge(&mut report, name, l.first_difference(&r));
        }
        Ok(report)
    }

    /// Basis indices generating `H` as a unital algebra, picked greedily in
    /// basis order.
    pub fn algebra_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let span = self.generated_span(&gens);
            if span.rank() == n {
                return gens;
            }
            let next = (0..n)
                .find(|&a| {
                    let mut col = vec![Scalar::zero(); n];
                    col[a] = Scalar::one();
                    span.hstack(&Mat::column(col)).rank() > span.rank()
                })
                .expect("a basis vector lies outside a proper subspace");
            gens.push(next);
        }
    }

    fn generated_span(&self, gens: &[usize]) -> Mat {
        let n = self.dim();
        let mut span = self.unit.clone();
        loop {
            let mut grown = span.clone();
            for c in 0..span.cols() {
                let x = column_terms(&span, c);
                for &g in gens {
                    let y = self.mul_terms(&x, &[(g, Scalar::one())]);
                    let mut col = vec![Scalar::zero(); n];
                    for (k, v) in y {
                        col[k] = v;
                    }
                    let cand = grown.hstack(&Mat::column(col));
                    if cand.rank() > grown.rank() {
                        grown = cand;
                    }
                }
            }
            if grown.cols() == span.cols() {
                return span;
            }
            span = grown;
        }
    }

    pub fn from_json(text: &str, validate: bool) -> Result<Self> {
        let raw: HopfJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.basis.len() != raw.dim {
            return Err(Error::Parse(format!("basis has {} names but dim is {}", raw.basis.len(), raw.dim)));
        }
        let h = HopfAlgebra::from_parts(
            raw.basis,
            raw.mult,
            Mat::column(raw.unit),
            raw.comult,
            Mat::row_vector(raw.counit),
            raw.antipode,
            raw.antipode_inv,
        )?;
        if validate {
            let report = h.verify_axioms();
            if !report.passed() {
                return Err(Error::Axiom(report.failures().join(", ")));
            }
        }
        Ok(h)
    }

    pub fn to_json(&self) -> String {
        let raw = HopfJson {
            dim: self.dim(),
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            unit: self.unit.col(0),
            comult: self.comult.clone(),
            counit: self.counit.row(0).to_vec(),
            antipode: self.antipode.clone(),
            antipode_inv: Some(self.antipode_inv.clone()),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    // ---- builtin examples ----

    pub fn trivial() -> Self {
        let one = Mat::identity(1);
        HopfAlgebra::from_parts(vec!["1".into()], one.clone(), one.clone(), one.clone(), one.clone(), one.clone(), Some(one))
            .expect("valid shapes")
    }

    /// Group algebra `kG` of a finite group given by its multiplication table
    /// (`table[a][b]` is the index of `ab`).
    pub fn group_algebra(table: &[Vec<usize>]) -> Result<Self> {
        let g = Group::new(table)?;
        let n = g.order();
        let mut mult = Mat::zeros(n, n * n);
        let mut comult = Mat::zeros(n * n, n);
        let mut antipode = Mat::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                mult.set(g.mul(a, b), a * n + b, Scalar::one());
            }
            comult.set(a * n + a, a, Scalar::one());
            antipode.set(g.inv(a), a, Scalar::one());
        }
        let mut unit = Mat::zeros(n, 1);
        unit.set(g.identity, 0, Scalar::one());
        let counit = Mat::row_vector(vec![Scalar::one(); n]);
        let basis = g.names("");
        HopfAlgebra::from_parts(basis, mult, unit, comult, counit, antipode.clone(), Some(antipode))
    }

    /// Dual `k^G` of a group algebra: basis of point indicators `δ_g`.
    pub fn dual_group_algebra(table: &[Vec<usize>]) -> Result<Self> {
        let g = Group::new(table)?;
        let n = g.order();
        let mut mult = Mat::zeros(n, n * n);
        let mut comult = Mat::zeros(n * n, n);
        let mut antipode = Mat::zeros(n, n);
        for a in 0..n {
            mult.set(a, a * n + a, Scalar::one());
            for b in 0..n {
                comult.set(a * n + b, g.mul(a, b), Scalar::one());
            }
            antipode.set(g.inv(a), a, Scalar::one());
        }
        let unit = Mat::column(vec![Scalar::one(); n]);
        let mut counit = Mat::zeros(1, n);
        counit.set(0, g.identity, Scalar::one());
        let basis = g.names("δ");
        HopfAlgebra::from_parts(basis, mult, unit, comult, counit, antipode.clone(), Some(antipode))
    }

    pub fn cyclic_group_algebra(n: usize) -> Self {
        HopfAlgebra::group_algebra(&cyclic_table(n)).expect("cyclic groups are groups")
    }

    pub fn cyclic_dual_group_algebra(n: usize) -> Self {
        HopfAlgebra::dual_group_algebra(&cyclic_table(n)).expect("cyclic groups are groups")
    }

    /// Sweedler's four-dimensional algebra: `g² = 1`, `x² = 0`, `xg = −gx`,
    /// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(g) = g`, `S(x) = −gx`.
    ///
    /// Basis `g^a x^b` sits at index `a + 2b`: `1, g, x, gx`.
    pub fn sweedler() -> Self {
        let idx = |a: usize, b: usize| a + 2 * b;
        let n = 4;
        let mut mult = Mat::zeros(n, n * n);
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                // g^a x^b g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}
                if b + d >= 2 {
                    continue;
                }
                let sign = if b * c % 2 == 1 { -1 } else { 1 };
                mult.set(idx((a + c) % 2, b + d), idx(a, b) * n + idx(c, d), Scalar::from_int(sign));
            }
        }
        let mut unit = Mat::zeros(n, 1);
        unit.set(0, 0, Scalar::one());
        let mut comult = Mat::zeros(n * n, n);
        let one = Scalar::one();
        let mut put = |src: usize, l: usize, r: usize, v: &Scalar| comult.set(l * n + r, src, v.clone());
        put(0, 0, 0, &one);
        put(1, 1, 1, &one);
        // Δx = x⊗1 + g⊗x
        put(2, 2, 0, &one);
        put(2, 1, 2, &one);
        // Δ(gx) = gx⊗g + 1⊗gx
        put(3, 3, 1, &one);
        put(3, 0, 3, &one);
        let counit = Mat::from_ints(&[&[1, 1, 0, 0]]);
        // S(1)=1, S(g)=g, S(x)=−gx, S(gx)=x
        let antipode = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        let basis = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
        HopfAlgebra::from_parts(basis, mult, unit, comult, counit, antipode, None).expect("valid shapes")
    }

    /// The builtin suite, labelled.
    pub fn builtins() -> Vec<(&'static str, HopfAlgebra)> {
        vec![
            ("trivial", HopfAlgebra::trivial()),
            ("Z2", HopfAlgebra::cyclic_group_algebra(2)),
            ("Z3", HopfAlgebra::cyclic_group_algebra(3)),
            ("Z4", HopfAlgebra::cyclic_group_algebra(4)),
            ("dual-Z2", HopfAlgebra::cyclic_dual_group_algebra(2)),
            ("sweedler", HopfAlgebra::sweedler()),
        ]
    }

    pub fn builtin(name: &str) -> Option<HopfAlgebra> {
        HopfAlgebra::builtins().into_iter().find(|(n, _)| *n == name).map(|(_, h)| h)
    }
}

fn merge(report: &mut AxiomReport, name: &str, diff: Option<(usize, usize)>) {
    if let Some(existing) = report.checks.iter_mut().find(|c| c.name == name) {
        if existing.passed && diff.is_some() {
            existing.passed = false;
            existing.first_difference = diff;
        }
    } else {
        report.checks.push(AxiomCheck { name: name.to_string(), passed: diff.is_none(), first_difference: diff });
    }
}

pub(crate) fn column_terms(m: &Mat, c: usize) -> Terms {
    (0..m.rows()).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect()
}

pub(crate) fn dense_to_terms(v: Vec<Scalar>) -> Terms {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    cyclic: bool,
}

impl Group {
    fn new(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not square or has out-of-range entries".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let cyclic = table == cyclic_table(n).as_slice();
        Ok(Group { table: table.to_vec(), identity, inverses, cyclic })
    }

    fn order(&self) -> usize {
        self.table.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    fn names(&self, prefix: &str) -> Vec<String> {
        (0..self.order())
            .map(|k| {
                let base = if self.cyclic {
                    match k {
                        0 => "1".to_string(),
                        1 => "g".to_string(),
                        _ => format!("g^{k}"),
                    }
                } else if k == self.identity {
                    "e".to_string()
                } else {
                    format!("g{k}")
                };
                if prefix.is_empty() {
                    base
                } else {
                    format!("{prefix}_{base}")
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_pass() {
        for (name, h) in HopfAlgebra::builtins() {
            let r = h.verify_axioms();
            assert!(r.passed(), "{name}: {:?}", r.failures());
        }
    }

    #[test]
    fn sweedler_shape() {
        let h = HopfAlgebra::sweedler();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.coproduct(2).len(), 2);
        // S²(x) = −x
        let s2 = h.s_power(2);
        assert_eq!(h.apply_terms(&s2, &[(2, Scalar::one())]), vec![(2, Scalar::from_int(-1))]);
        assert_eq!(h.algebra_generators(), vec![1, 2]);
    }

    #[test]
    fn negated_antipode_entry_fails_only_antipode() {
        let h = HopfAlgebra::sweedler();
        let mut s = h.antipode().clone();
        s.set(3, 2, Scalar::one());
        let bad = HopfAlgebra::from_parts(
            h.basis_names().to_vec(),
            h.mult().clone(),
            h.unit().clone(),
            h.comult().clone(),
            h.counit().clone(),
            s,
            None,
        )
        .unwrap();
        assert_eq!(bad.verify_axioms().failures(), vec!["antipode"]);
    }

    #[test]
    fn z3_grouplike() {
        let h = HopfAlgebra::cyclic_group_algebra(3);
        assert_eq!(h.coproduct(1).to_vec(), vec![(1, 1, Scalar::one())]);
        assert!(h.antipode().get(2, 1).is_one());
        assert_eq!(h.algebra_generators(), vec![1]);
    }

    #[test]
    fn not_a_group() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(HopfAlgebra::group_algebra(&bad), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn json_round_trip_and_singular() {
        let h = HopfAlgebra::sweedler();
        let back = HopfAlgebra::from_json(&h.to_json(), true).unwrap();
        assert_eq!(back, h);
        let mut v: serde_json::Value = serde_json::from_str(&h.to_json()).unwrap();
        v["antipode"] = serde_json::to_value(Mat::zeros(4, 4)).unwrap();
        v.as_object_mut().unwrap().remove("antipode_inv");
        assert_eq!(HopfAlgebra::from_json(&v.to_string(), false), Err(Error::SingularAntipode));
    }

    #[test]
    fn missing_inverse_is_computed() {
        let h = HopfAlgebra::cyclic_group_algebra(4);
        let mut v: serde_json::Value = serde_json::from_str(&h.to_json()).unwrap();
        v.as_object_mut().unwrap().remove("antipode_inv");
        let back = HopfAlgebra::from_json(&v.to_string(), true).unwrap();
        assert_eq!(back.antipode_inv(), back.antipode());
    }

    #[test]
    fn power_laws() {
        for (_, h) in HopfAlgebra::builtins() {
            for a in -3..=3 {
                for b in -3..=3 {
                    assert_eq!(&h.s_power(a) * &h.s_power(b), h.s_power(a + b));
                }
            }
            assert_eq!(h.comult() * h.unit(), h.unit().kron(h.unit()));
        }
        for n in 2..=4 {
            assert!(HopfAlgebra::cyclic_group_algebra(n).s_power(2).is_identity());
        }
    }

    #[test]
    fn mod_p_axioms() {
        let h = HopfAlgebra::sweedler();
        assert!(h.verify_axioms_mod_p(3).unwrap().passed());
        assert!(h.verify_axioms_mod_p(4).is_err());
    }
}

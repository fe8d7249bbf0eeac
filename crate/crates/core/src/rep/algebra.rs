use serde::{Deserialize, Serialize};

use super::yd::tensor_action;
use super::LeftModule;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Scalar};

/// Unital associative algebra in the category of left `H`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    module: LeftModule,
    mult: Mat,
    unit: Mat,
}

/// Counital coassociative coalgebra in the category of left `H`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra {
    module: LeftModule,
    comult: Mat,
    counit: Mat,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    action: Mat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comult: Option<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<Scalar>>,
}

fn parse(text: &str) -> Result<AlgebraJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidStructure(what.to_string()))
    }
}

impl ModuleAlgebra {
    pub fn new(module: LeftModule, mult: Mat, unit: Mat) -> Result<Self> {
        let d = module.dim();
        if mult.shape() != (d, d * d) || unit.shape() != (d, 1) {
            return Err(Error::DimensionMismatch(format!(
                "algebra on a {d}-dim module needs a {d}x{} product and a {d}x1 unit",
                d * d
            )));
        }
        Ok(ModuleAlgebra { module, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        self.module.validate(h)?;
        let d = self.dim();
        let i = Mat::identity(d);
        let m = &self.mult;
        check(m * &m.kron(&i) == m * &i.kron(m), "product is not associative")?;
        check((m * &self.unit.kron(&i)).is_identity() && (m * &i.kron(&self.unit)).is_identity(), "unit is not two-sided")?;
        let ms = m.to_sparse();
        let us = self.unit.to_sparse();
        for a in 0..h.dim() {
            let lhs = self.module.block(a) * &ms;
            let rhs = &ms * &tensor_action(h, &[&self.module, &self.module], a);
            check(lhs == rhs, "product is not H-linear")?;
            check(self.module.block(a) * &us == us.scale(h.counit_of(a)), "unit is not H-linear")?;
        }
        Ok(())
    }

    /// The ground field with the trivial action.
    pub fn ground(h: &HopfAlgebra) -> Self {
        ModuleAlgebra::new(LeftModule::trivial(h), Mat::identity(1), Mat::identity(1)).expect("shapes")
    }

    /// `k[x]/(x²)` with `x` spanning a line on which `H` acts by the
    /// character `χ`.
    pub fn weighted_dual_numbers(h: &HopfAlgebra, chi: &[Scalar]) -> Self {
        let module = weighted_plane(h, chi);
        let mult = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        ModuleAlgebra::new(module, mult, Mat::from_ints(&[&[1], &[0]])).expect("shapes")
    }

    /// `k[y]/(y² − 1)` with `y` of weight `χ`; needs `χ * χ = ε`.
    pub fn weighted_clifford(h: &HopfAlgebra, chi: &[Scalar]) -> Self {
        let module = weighted_plane(h, chi);
        let mult = Mat::from_ints(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        ModuleAlgebra::new(module, mult, Mat::from_ints(&[&[1], &[0]])).expect("shapes")
    }

    /// Over Sweedler's algebra: `k[y]/(y² − c)` with `g·y = −y`, `x·y = 1`.
    /// `c = 0` gives the dual numbers.
    pub fn sweedler_quadratic(c: i64) -> Self {
        let h = HopfAlgebra::sweedler();
        // basis 1, y; blocks for 1, g, x, gx
        let blocks = vec![
            Mat::identity(2),
            Mat::from_ints(&[&[1, 0], &[0, -1]]),
            Mat::from_ints(&[&[0, 1], &[0, 0]]),
            Mat::from_ints(&[&[0, 1], &[0, 0]]),
        ];
        let module = LeftModule::from_blocks(blocks);
        debug_assert!(module.validate(&h).is_ok());
        let mult = Mat::from_ints(&[&[1, 0, 0, c], &[0, 1, 1, 0]]);
        ModuleAlgebra::new(module, mult, Mat::from_ints(&[&[1], &[0]])).expect("shapes")
    }

    /// Functions on `ℤ/m` under translation by the cyclic group algebra of
    /// order `n`, with `m | n`.
    pub fn cyclic_functions(h: &HopfAlgebra, m: usize) -> Self {
        let n = h.dim();
        assert!(m > 0 && n.is_multiple_of(m), "the translation action needs m | n");
        let blocks = (0..n)
            .map(|k| {
                let mut b = Mat::zeros(m, m);
                for j in 0..m {
                    b.set((j + k) % m, j, Scalar::one());
                }
                b
            })
            .collect();
        let module = LeftModule::from_blocks(blocks);
        let mut mult = Mat::zeros(m, m * m);
        for j in 0..m {
            mult.set(j, j * m + j, Scalar::one());
        }
        ModuleAlgebra::new(module, mult, Mat::column(vec![Scalar::one(); m])).expect("shapes")
    }

    pub fn from_json(h: &HopfAlgebra, text: &str) -> Result<Self> {
        let raw = parse(text)?;
        let (Some(mult), Some(unit)) = (raw.mult, raw.unit) else {
            return Err(Error::Parse("a module algebra needs \"mult\" and \"unit\"".into()));
        };
        let a = ModuleAlgebra::new(LeftModule::new(h.dim(), raw.action)?, mult, Mat::column(unit))?;
        if a.dim() != raw.dim {
            return Err(Error::Parse(format!("declared dim {} but matrices have dim {}", raw.dim, a.dim())));
        }
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        let raw = AlgebraJson {
            dim: self.dim(),
            action: self.module.action().clone(),
            mult: Some(self.mult.clone()),
            unit: Some(self.unit.col(0)),
            comult: None,
            counit: None,
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

fn weighted_plane(h: &HopfAlgebra, chi: &[Scalar]) -> LeftModule {
    let blocks = (0..h.dim())
        .map(|a| {
            let mut b = Mat::zeros(2, 2);
            b.set(0, 0, h.counit_of(a).clone());
            b.set(1, 1, chi[a].clone());
            b
        })
        .collect();
    LeftModule::from_blocks(blocks)
}

impl ModuleCoalgebra {
    pub fn new(module: LeftModule, comult: Mat, counit: Mat) -> Result<Self> {
        let d = module.dim();
        if comult.shape() != (d * d, d) || counit.shape() != (1, d) {
            return Err(Error::DimensionMismatch(format!(
                "coalgebra on a {d}-dim module needs a {}x{d} coproduct and a 1x{d} counit",
                d * d
            )));
        }
        Ok(ModuleCoalgebra { module, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        self.module.validate(h)?;
        let d = self.dim();
        let i = Mat::identity(d);
        let c = &self.comult;
        check(&c.kron(&i) * c == &i.kron(c) * c, "coproduct is not coassociative")?;
        check((&self.counit.kron(&i) * c).is_identity() && (&i.kron(&self.counit) * c).is_identity(), "counit is not two-sided")?;
        let cs = c.to_sparse();
        let es = self.counit.to_sparse();
        for a in 0..h.dim() {
            let lhs = &cs * self.module.block(a);
            let rhs = &tensor_action(h, &[&self.module, &self.module], a) * &cs;
            check(lhs == rhs, "coproduct is not H-linear")?;
            check(&es * self.module.block(a) == es.scale(h.counit_of(a)), "counit is not H-linear")?;
        }
        Ok(())
    }

    pub fn ground(h: &HopfAlgebra) -> Self {
        ModuleCoalgebra::new(LeftModule::trivial(h), Mat::identity(1), Mat::identity(1)).expect("shapes")
    }

    /// `H` itself with the regular action.
    pub fn regular(h: &HopfAlgebra) -> Self {
        ModuleCoalgebra::new(LeftModule::regular(h), h.comult().clone(), h.counit().clone()).expect("shapes")
    }

    /// Linear dual of a module algebra: `(h·f)(a) = f(S(h)a)`,
    /// `Δf(a⊗b) = f(ba)`, `ε(f) = f(1)`.
    pub fn dual_of(h: &HopfAlgebra, a: &ModuleAlgebra) -> Self {
        let d = a.dim();
        let mut comult = Mat::zeros(d * d, d);
        for k in 0..d {
            for x in 0..d {
                for y in 0..d {
                    comult.set(x * d + y, k, a.mult().get(k, y * d + x).clone());
                }
            }
        }
        let counit = a.unit().transpose();
        ModuleCoalgebra::new(a.module().dual(h), comult, counit).expect("shapes")
    }

    pub fn from_json(h: &HopfAlgebra, text: &str) -> Result<Self> {
        let raw = parse(text)?;
        let (Some(comult), Some(counit)) = (raw.comult, raw.counit) else {
            return Err(Error::Parse("a module coalgebra needs \"comult\" and \"counit\"".into()));
        };
        let c = ModuleCoalgebra::new(LeftModule::new(h.dim(), raw.action)?, comult, Mat::row_vector(counit))?;
        if c.dim() != raw.dim {
            return Err(Error::Parse(format!("declared dim {} but matrices have dim {}", raw.dim, c.dim())));
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        let raw = AlgebraJson {
            dim: self.dim(),
            action: self.module.action().clone(),
            mult: None,
            unit: None,
            comult: Some(self.comult.clone()),
            counit: Some(self.counit.row(0).to_vec()),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

/// Either kind of object, as accepted by the builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleObject {
    Algebra(ModuleAlgebra),
    Coalgebra(ModuleCoalgebra),
}

impl ModuleObject {
    pub fn module(&self) -> &LeftModule {
        match self {
            ModuleObject::Algebra(a) => a.module(),
            ModuleObject::Coalgebra(c) => c.module(),
        }
    }

    pub fn validate(&self, h: &HopfAlgebra) -> Result<()> {
        match self {
            ModuleObject::Algebra(a) => a.validate(h),
            ModuleObject::Coalgebra(c) => c.validate(h),
        }
    }

    /// Reads an algebra when `mult` is present and a coalgebra when
    /// `comult` is.
    pub fn from_json(h: &HopfAlgebra, text: &str) -> Result<Self> {
        let raw = parse(text)?;
        match (raw.mult.is_some(), raw.comult.is_some()) {
            (true, false) => ModuleAlgebra::from_json(h, text).map(ModuleObject::Algebra),
            (false, true) => ModuleCoalgebra::from_json(h, text).map(ModuleObject::Coalgebra),
            _ => Err(Error::Parse("an object file needs exactly one of \"mult\" and \"comult\"".into())),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            ModuleObject::Algebra(a) => a.to_json(),
            ModuleObject::Coalgebra(c) => c.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign(h: &HopfAlgebra) -> Vec<Scalar> {
        // g ↦ −1 on cyclic group algebras of even order
        (0..h.dim()).map(|k| Scalar::from_int(if k % 2 == 0 { 1 } else { -1 })).collect()
    }

    #[test]
    fn object_json_picks_the_kind() {
        let h = HopfAlgebra::sweedler();
        let a = ModuleAlgebra::sweedler_quadratic(1);
        for obj in [ModuleObject::Algebra(a.clone()), ModuleObject::Coalgebra(ModuleCoalgebra::dual_of(&h, &a))] {
            assert_eq!(ModuleObject::from_json(&h, &obj.to_json()).unwrap(), obj);
        }
        let both = a.to_json().replacen('{', "{\"comult\": [[\"1\"]],", 1);
        assert!(matches!(ModuleObject::from_json(&h, &both), Err(Error::Parse(_))));
    }

    #[test]
    fn examples_validate() {
        for (_, h) in HopfAlgebra::builtins() {
            ModuleAlgebra::ground(&h).validate(&h).unwrap();
            ModuleCoalgebra::ground(&h).validate(&h).unwrap();
            ModuleCoalgebra::regular(&h).validate(&h).unwrap();
        }
        for n in [2, 4] {
            let h = HopfAlgebra::cyclic_group_algebra(n);
            let a = ModuleAlgebra::weighted_dual_numbers(&h, &sign(&h));
            a.validate(&h).unwrap();
            ModuleAlgebra::weighted_clifford(&h, &sign(&h)).validate(&h).unwrap();
            ModuleAlgebra::cyclic_functions(&h, 2).validate(&h).unwrap();
            ModuleCoalgebra::dual_of(&h, &a).validate(&h).unwrap();
        }
        let z3 = HopfAlgebra::cyclic_group_algebra(3);
        let f3 = ModuleAlgebra::cyclic_functions(&z3, 3);
        f3.validate(&z3).unwrap();
        ModuleCoalgebra::dual_of(&z3, &f3).validate(&z3).unwrap();
        let sw = HopfAlgebra::sweedler();
        for c in [0, 1] {
            let a = ModuleAlgebra::sweedler_quadratic(c);
            a.validate(&sw).unwrap();
            ModuleCoalgebra::dual_of(&sw, &a).validate(&sw).unwrap();
        }
        let d2 = HopfAlgebra::cyclic_dual_group_algebra(2);
        let eval1 = vec![Scalar::zero(), Scalar::one()];
        ModuleAlgebra::weighted_dual_numbers(&d2, &eval1).validate(&d2).unwrap();
        ModuleAlgebra::weighted_clifford(&d2, &eval1).validate(&d2).unwrap();
    }

    #[test]
    fn wrong_weight_breaks_clifford() {
        // y² = 1 forces the weight of y to square to ε; the character of
        // weight (1, 2) on ℤ/2 is not even an algebra map
        let h = HopfAlgebra::cyclic_group_algebra(2);
        let bad = ModuleAlgebra::weighted_clifford(&h, &[Scalar::one(), Scalar::from_int(2)]);
        assert!(bad.validate(&h).is_err());
    }

    #[test]
    fn json_round_trips() {
        let h = HopfAlgebra::sweedler();
        let a = ModuleAlgebra::sweedler_quadratic(0);
        assert_eq!(ModuleAlgebra::from_json(&h, &a.to_json()).unwrap(), a);
        let c = ModuleCoalgebra::dual_of(&h, &a);
        assert_eq!(ModuleCoalgebra::from_json(&h, &c.to_json()).unwrap(), c);
        assert!(ModuleCoalgebra::from_json(&h, &a.to_json()).is_err());
    }
}

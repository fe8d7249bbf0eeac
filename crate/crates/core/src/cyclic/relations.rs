use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CyclicObject, Variance};
use crate::linalg::SparseMat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFamily {
    /// Face/face, degeneracy/degeneracy and face/degeneracy identities.
    Simplicial,
    /// Compatibility of `τ` with the faces.
    CyclicFace,
    /// Compatibility of `τ` with the degeneracies.
    CyclicDegeneracy,
    /// `τ_n^{n+1} = Id`.
    CyclicPower,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub family: RelationFamily,
    pub relation: String,
    pub degree: usize,
    pub indices: Vec<usize>,
    /// First `(row, col)` where the two sides differ.
    pub first_difference: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when every violation lies in `family`.
    pub fn only_family(&self, family: RelationFamily) -> bool {
        self.violations.iter().all(|v| v.family == family)
    }

    pub fn families(&self) -> Vec<RelationFamily> {
        let mut out: Vec<RelationFamily> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.family) {
                out.push(v.family);
            }
        }
        out
    }
}

enum Side {
    Face(usize, usize),
    Degen(usize, usize),
    Tau(usize),
    Id(usize),
}

struct Check {
    family: RelationFamily,
    relation: &'static str,
    degree: usize,
    indices: Vec<usize>,
    // products written left to right as composition, applied right to left
    lhs: Vec<Side>,
    rhs: Vec<Side>,
}

fn evaluate(co: &CyclicObject, word: &[Side]) -> SparseMat {
    let mat = |s: &Side| match s {
        Side::Face(n, i) => co.face(*n, *i).clone(),
        Side::Degen(n, i) => co.degen(*n, *i).clone(),
        Side::Tau(n) => co.tau(*n).clone(),
        Side::Id(n) => SparseMat::identity(co.dims()[*n]),
    };
    let mut it = word.iter();
    let mut acc = mat(it.next().expect("nonempty word"));
    for s in it {
        acc = &acc * &mat(s);
    }
    acc
}

fn cyclic_checks(cap: usize) -> Vec<Check> {
    use RelationFamily::*;
    use Side::*;
    let mut out = Vec::new();
    let mut push = |family, relation, degree, indices: Vec<usize>, lhs, rhs| {
        out.push(Check { family, relation, degree, indices, lhs, rhs });
    };
    for n in 2..=cap {
        for j in 1..=n {
            for i in 0..j {
                push(Simplicial, "d_i d_j = d_{j-1} d_i", n, vec![i, j], vec![Face(n - 1, i), Face(n, j)], vec![Face(n - 1, j - 1), Face(n, i)]);
            }
        }
    }
    for n in 0..cap.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                push(Simplicial, "s_i s_j = s_{j+1} s_i", n, vec![i, j], vec![Degen(n + 1, i), Degen(n, j)], vec![Degen(n + 1, j + 1), Degen(n, i)]);
            }
        }
    }
    for n in 0..cap {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = vec![Face(n + 1, i), Degen(n, j)];
                let rhs = if i < j {
                    vec![Degen(n - 1, j - 1), Face(n, i)]
                } else if i == j || i == j + 1 {
                    vec![Id(n)]
                } else {
                    vec![Degen(n - 1, j), Face(n, i - 1)]
                };
                push(Simplicial, "d_i s_j", n, vec![i, j], lhs, rhs);
            }
        }
    }
    for n in 1..=cap {
        for i in 1..=n {
            push(CyclicFace, "d_i t = t d_{i-1}", n, vec![i], vec![Face(n, i), Tau(n)], vec![Tau(n - 1), Face(n, i - 1)]);
        }
        push(CyclicFace, "d_0 t = d_n", n, vec![0], vec![Face(n, 0), Tau(n)], vec![Face(n, n)]);
    }
    for n in 0..cap {
        for i in 1..=n {
            push(CyclicDegeneracy, "s_i t = t s_{i-1}", n, vec![i], vec![Degen(n, i), Tau(n)], vec![Tau(n + 1), Degen(n, i - 1)]);
        }
        push(CyclicDegeneracy, "s_0 t = t^2 s_n", n, vec![0], vec![Degen(n, 0), Tau(n)], vec![Tau(n + 1), Tau(n + 1), Degen(n, n)]);
    }
    for n in 0..=cap {
        let power = (0..=n).map(|_| Tau(n)).collect();
        push(CyclicPower, "t^{n+1} = 1", n, vec![], power, vec![Id(n)]);
    }
    out
}

fn cocyclic_checks(cap: usize) -> Vec<Check> {
    use RelationFamily::*;
    use Side::*;
    let mut out = Vec::new();
    let mut push = |family, relation, degree, indices: Vec<usize>, lhs, rhs| {
        out.push(Check { family, relation, degree, indices, lhs, rhs });
    };
    for n in 2..=cap {
        for j in 1..=n {
            for i in 0..j {
                push(Simplicial, "d_j d_i = d_i d_{j-1}", n, vec![i, j], vec![Face(n, j), Face(n - 1, i)], vec![Face(n, i), Face(n - 1, j - 1)]);
            }
        }
    }
    for n in 0..cap.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                push(Simplicial, "s_j s_i = s_i s_{j+1}", n, vec![i, j], vec![Degen(n, j), Degen(n + 1, i)], vec![Degen(n, i), Degen(n + 1, j + 1)]);
            }
        }
    }
    for n in 0..cap {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = vec![Degen(n, j), Face(n + 1, i)];
                let rhs = if i < j {
                    vec![Face(n, i), Degen(n - 1, j - 1)]
                } else if i == j || i == j + 1 {
                    vec![Id(n)]
                } else {
                    vec![Face(n, i - 1), Degen(n - 1, j)]
                };
                push(Simplicial, "s_j d_i", n, vec![i, j], lhs, rhs);
            }
        }
    }
    for n in 1..=cap {
        for i in 1..=n {
            push(CyclicFace, "t d_i = d_{i-1} t", n, vec![i], vec![Tau(n), Face(n, i)], vec![Face(n, i - 1), Tau(n - 1)]);
        }
        push(CyclicFace, "t d_0 = d_n", n, vec![0], vec![Tau(n), Face(n, 0)], vec![Face(n, n)]);
    }
    for n in 0..cap {
        for i in 1..=n {
            push(CyclicDegeneracy, "t s_i = s_{i-1} t", n, vec![i], vec![Tau(n), Degen(n, i)], vec![Degen(n, i - 1), Tau(n + 1)]);
        }
        push(CyclicDegeneracy, "t s_0 = s_n t^2", n, vec![0], vec![Tau(n), Degen(n, 0)], vec![Degen(n, n), Tau(n + 1), Tau(n + 1)]);
    }
    for n in 0..=cap {
        let power = (0..=n).map(|_| Tau(n)).collect();
        push(CyclicPower, "t^{n+1} = 1", n, vec![], power, vec![Id(n)]);
    }
    out
}

/// Checks every (co)cyclic identity that fits below the degree cap.
pub fn verify_relations(co: &CyclicObject) -> RelationReport {
    let cap = co.degree_cap();
    let checks = match co.variance() {
        Variance::Cyclic => cyclic_checks(cap),
        Variance::Cocyclic => cocyclic_checks(cap),
    };
    let mut violations: Vec<Violation> = checks
        .par_iter()
        .filter_map(|c| {
            let l = evaluate(co, &c.lhs);
            let r = evaluate(co, &c.rhs);
            l.first_difference(&r).map(|first_difference| Violation {
                family: c.family,
                relation: c.relation.to_string(),
                degree: c.degree,
                indices: c.indices.clone(),
                first_difference,
            })
        })
        .collect();
    violations.sort_by(|a, b| (a.degree, &a.indices).cmp(&(b.degree, &b.indices)));
    RelationReport { checked: checks.len(), violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    /// The trivial cyclic set `C_n = k` with all maps the identity.
    fn constant(variance: Variance, cap: usize) -> CyclicObject {
        let one = || SparseMat::identity(1);
        let faces = (0..=cap).map(|n| if n == 0 { vec![] } else { vec![one(); n + 1] }).collect();
        let degens = (0..=cap).map(|n| if n == cap { vec![] } else { vec![one(); n + 1] }).collect();
        CyclicObject::new(variance, vec![1; cap + 1], faces, degens, vec![one(); cap + 1], None).unwrap()
    }

    #[test]
    fn constant_towers_pass() {
        for v in [Variance::Cyclic, Variance::Cocyclic] {
            let r = verify_relations(&constant(v, 4));
            assert!(r.passed(), "{:?}", r.violations);
            assert!(r.checked > 30);
        }
    }

    #[test]
    fn scaled_face_is_caught() {
        let mut co = constant(Variance::Cyclic, 3);
        co.replace_face(2, 1, SparseMat::identity(1).scale(&Scalar::from_int(2))).unwrap();
        let r = verify_relations(&co);
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v.family == RelationFamily::Simplicial && v.degree == 2));
    }

    #[test]
    fn sign_twisted_tau_breaks_only_cyclic_families() {
        // τ_n = −1 keeps the simplicial part intact
        let cap = 3;
        let mut co = constant(Variance::Cocyclic, cap);
        co.cyclic_ops = (0..=cap).map(|_| SparseMat::identity(1).scale(&Scalar::from_int(-1))).collect();
        let r = verify_relations(&co);
        assert!(!r.passed());
        assert!(r.violations.iter().all(|v| v.family != RelationFamily::Simplicial));
    }
}

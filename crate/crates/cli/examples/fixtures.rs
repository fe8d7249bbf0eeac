//! Regenerates the files in `fixtures/`.
//!
//! ```text
//! cargo run -p hopfcyc-cli --example fixtures
//! ```

use std::fs;
use std::path::Path;

use hopfcyc::cyclic::{build_cov_algebra, BuildOptions};
use hopfcyc::rep::generate::one_dim;
use hopfcyc::rep::{check_yd, trivial_modcomod, ModuleObject};
use hopfcyc::{HopfAlgebra, Mat, ModComod, ModuleAlgebra, ModuleCoalgebra, Scalar, SparseMat};

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&k| Scalar::from_int(k)).collect()
}

fn write(dir: &Path, name: &str, text: String) {
    fs::write(dir.join(name), text + "\n").expect("writable fixtures directory");
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir).expect("fixtures directory");

    let trivial = HopfAlgebra::trivial();
    let z2 = HopfAlgebra::cyclic_group_algebra(2);
    let sw = HopfAlgebra::sweedler();
    write(&dir, "trivial.json", trivial.to_json());
    write(&dir, "z2.json", z2.to_json());
    write(&dir, "sweedler.json", sw.to_json());

    // flip the sign of S(x); the inverse is recomputed on load
    let mut broken: serde_json::Value = serde_json::from_str(&sw.to_json()).unwrap();
    broken["antipode"][3][2] = serde_json::json!("1");
    broken.as_object_mut().unwrap().remove("antipode_inv");
    write(&dir, "broken-antipode.json", serde_json::to_string_pretty(&broken).unwrap());

    write(&dir, "trivial-coeff.json", trivial_modcomod(&trivial).to_json());

    // sign character with coaction by g: YD for every index, never stable
    let z2_sign_g = one_dim(&z2, &ints(&[1, -1]), &ints(&[0, 1]));
    write(&dir, "z2-sign-g.json", z2_sign_g.to_json());

    // (sign, 1) ⊕ (ε, g): stable YD_1 and YD_{−1}
    let stable = one_dim(&sw, &ints(&[1, -1, 0, 0]), &ints(&[1, 0, 0, 0]))
        .direct_sum(&one_dim(&sw, &ints(&[1, 1, 0, 0]), &ints(&[0, 1, 0, 0])));
    assert!(check_yd(&sw, &stable, 1).unwrap() && check_yd(&sw, &stable, -1).unwrap());
    write(&dir, "sweedler-stable.json", stable.to_json());

    // same module, coaction conjugated by a shear: still a comodule, no
    // longer YD
    let p = Mat::from_ints(&[&[1, 1], &[0, 1]]);
    let p_inv = Mat::from_ints(&[&[1, -1], &[0, 1]]);
    let perturbed = ModComod::new(stable.module().clone(), stable.comodule().conjugate(&p, &p_inv)).unwrap();
    perturbed.validate(&sw).unwrap();
    assert!(!check_yd(&sw, &perturbed, 1).unwrap());
    write(&dir, "sweedler-perturbed.json", perturbed.to_json());

    write(&dir, "ground-algebra.json", ModuleAlgebra::ground(&trivial).to_json());
    write(&dir, "ground-coalgebra.json", ModuleCoalgebra::ground(&trivial).to_json());
    write(&dir, "dual-numbers.json", ModuleAlgebra::weighted_dual_numbers(&trivial, &ints(&[1])).to_json());
    let quad = ModuleAlgebra::sweedler_quadratic(1);
    write(&dir, "sweedler-algebra.json", ModuleObject::Algebra(quad.clone()).to_json());
    write(&dir, "sweedler-coalgebra.json", ModuleCoalgebra::dual_of(&sw, &quad).to_json());
    write(&dir, "z2-functions.json", ModuleAlgebra::cyclic_functions(&z2, 2).to_json());

    let tower = build_cov_algebra(&trivial, &trivial_modcomod(&trivial), &ModuleAlgebra::weighted_dual_numbers(&trivial, &ints(&[1])), 3, BuildOptions::default())
        .unwrap();
    write(&dir, "dual-numbers-tower.json", tower.to_json());
    let mut tampered = tower.clone();
    let face = tampered.face(2, 1).to_dense();
    let mut bumped = face.clone();
    bumped.set(0, 0, face.get(0, 0) + &Scalar::one());
    tampered.replace_face(2, 1, SparseMat::from_dense(&bumped)).unwrap();
    write(&dir, "tampered-tower.json", tampered.to_json());
}

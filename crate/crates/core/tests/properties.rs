use proptest::prelude::*;

use jjrb_core::catalog::{get, nilpotent_module_instance};
use jjrb_core::cohomology::{cohomology_rb, rb0_matrix, rb1_matrix};
use jjrb_core::linalg::{image_basis, kernel_basis, rref};
use jjrb_core::rational::q;
use jjrb_core::{rb_constraint_system, InstanceFile, JjAlgebra, Matrix, Rational, RbOperator, RbRepresentation};

fn small() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small(), n * n).prop_map(move |v| Matrix::from_row_major(n, n, v).unwrap())
}

fn dim2() -> JjAlgebra {
    get("dim2").unwrap().algebra.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in small(), b in small(), c in small()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = b.recip() {
            prop_assert_eq!(&(&a * &b) * &inv, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in proptest::collection::vec(small(), 12)) {
        let m = Matrix::from_row_major(3, 4, m).unwrap();
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + rref(&m).rank, 4);
        prop_assert_eq!(image_basis(&m).dim(), rref(&m).rank);
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
        prop_assert_eq!(rref(&rref(&m).matrix), rref(&m));
    }

    #[test]
    fn constraint_system_agrees_with_identity(op in matrix(2), w in small()) {
        let sys = rb_constraint_system(&dim2(), &w).unwrap();
        let rb = RbOperator::new(dim2(), w, op.clone()).unwrap();
        prop_assert_eq!(sys.vanishes_at(op.entries()).unwrap(), rb.check().holds);
    }

    #[test]
    fn scaling_and_reflection_keep_operators(a2 in small(), b2 in small(), mu in small()) {
        let op = Matrix::from_rows(vec![vec![q(0, 1), q(0, 1)], vec![a2, b2]]).unwrap();
        let rb = RbOperator::new(dim2(), q(0, 1), op).unwrap();
        prop_assert!(rb.check().holds);
        prop_assert!(rb.scale(&mu).unwrap().check().holds);
        let rr = RbRepresentation::adjoint(&rb).unwrap();
        let back = rr.reflect().unwrap().reflect().unwrap();
        prop_assert_eq!(back, rr);
    }

    #[test]
    fn cochain_complex_on_dim3_family(r11 in small(), r12 in small(), r31 in small(), r32 in small()) {
        let lambda = q(1, 1);
        prop_assume!(!r11.is_zero() && !r12.is_zero() && !(&r11 + &lambda).is_zero());
        let r21 = &(&(&lambda + &r11) * &r11) * &r12.recip().unwrap();
        let z = q(0, 1);
        let op = Matrix::from_rows(vec![
            vec![r11.clone(), r12, z.clone()],
            vec![r21, r11.clone(), z],
            vec![r31, r32, r11],
        ])
        .unwrap();
        let rb = RbOperator::new(get("dim3").unwrap().algebra.clone(), lambda, op).unwrap();
        prop_assert!(rb.check().holds);
        let rr = RbRepresentation::adjoint(&rb).unwrap();
        prop_assert!(rb1_matrix(&rr, false).unwrap().mul(&rb0_matrix(&rr, true).unwrap()).is_zero());
        let h0 = cohomology_rb(&rr, 0).unwrap();
        prop_assert_eq!(h0.dim_cohomology, 0);
        let h1 = cohomology_rb(&rr, 1).unwrap();
        prop_assert_eq!(h1.dim_cocycles, h1.dim_coboundaries + h1.dim_cohomology);
    }

    #[test]
    fn instance_files_round_trip(c in proptest::collection::vec(small(), 3), op in matrix(3), w in small()) {
        // Products of e1, e2 landing in e3 keep the Jacobi identity trivially true.
        let mut consts = vec![q(0, 1); 27];
        for (slot, (i, j)) in [(0, 0), (0, 1), (1, 1)].into_iter().enumerate() {
            consts[(i * 3 + j) * 3 + 2] = c[slot].clone();
            consts[(j * 3 + i) * 3 + 2] = c[slot].clone();
        }
        let alg = JjAlgebra::from_constants(3, consts).unwrap();
        let f = InstanceFile::from_rb(&RbOperator::new(alg, w, op).unwrap());
        let text = f.to_json();
        let back = InstanceFile::parse(&text, true).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_json(), text);
    }
}

#[test]
fn gl_module_signs_on_nilpotent_module() {
    let rr = nilpotent_module_instance();
    assert!(rr.is_valid());
    assert!(rr.hat_gl(&q(1, 1)).is_valid());
    let minus = rr.hat_gl(&q(-1, 1));
    assert!(!minus.rep().check().holds);
    assert!(minus.check_compatibility().holds);
}

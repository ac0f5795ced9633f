//! Property tests for the exact linear algebra substrate.

use matcat_core::field::{Field, PrimeField, Rationals};
use matcat_core::linalg::{pushout, Matrix};
use proptest::prelude::*;

fn q_matrix_strategy(max_dim: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-4i64..=4, r * c).prop_map(move |entries| {
            Matrix::from_fn(Rationals, r, c, |i, j| Rationals.from_i64(entries[i * c + j]))
        })
    })
}

fn f5_matrix_strategy(max_dim: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    let f5 = PrimeField::new(5).unwrap();
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0i64..5, r * c).prop_map(move |entries| {
            Matrix::from_fn(f5, r, c, |i, j| f5.from_i64(entries[i * c + j]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solutions_satisfy_the_system(a in q_matrix_strategy(8), ys in proptest::collection::vec(-3i64..=3, 8)) {
        // build a consistent rhs from a chosen preimage
        let y = Matrix::from_fn(Rationals, a.cols(), 1, |i, _| Rationals.from_i64(ys[i % ys.len()]));
        let b = a.mul(&y);
        let x = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul(&x), b);
        // determinism: resolving is bit-identical
        let x2 = a.solve(&a.mul(&y)).unwrap().unwrap();
        prop_assert_eq!(x, x2);
    }

    #[test]
    fn inconsistent_or_satisfied(a in q_matrix_strategy(8), bs in proptest::collection::vec(-3i64..=3, 8)) {
        let b = Matrix::from_fn(Rationals, a.rows(), 1, |i, _| Rationals.from_i64(bs[i % bs.len()]));
        if let Some(x) = a.solve(&b).unwrap() {
            prop_assert_eq!(a.mul(&x), b);
        }
    }

    #[test]
    fn rank_nullity(a in q_matrix_strategy(8)) {
        prop_assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
        let k = a.kernel_basis();
        if k.cols() > 0 {
            prop_assert!(a.mul(&k).is_zero());
        }
    }

    #[test]
    fn rank_nullity_f5(a in f5_matrix_strategy(8)) {
        prop_assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
        prop_assert!(a.cokernel_projection().mul(&a).is_zero());
    }

    #[test]
    fn cokernel_projection_properties(a in q_matrix_strategy(8)) {
        let c = a.cokernel_projection();
        prop_assert!(c.mul(&a).is_zero());
        // full row rank
        prop_assert_eq!(c.rank(), c.rows());
        prop_assert_eq!(c.rows() + a.image_basis().cols(), a.rows());
    }

    #[test]
    fn pushout_universal_property(
        f in q_matrix_strategy(5),
        gs in proptest::collection::vec(-3i64..=3, 25),
        cocone_coeffs in proptest::collection::vec(-3i64..=3, 20),
    ) {
        // g shares the domain of f
        let rows_g = 1 + (gs[0].unsigned_abs() as usize % 4);
        let g = Matrix::from_fn(Rationals, rows_g, f.cols(), |i, j| {
            Rationals.from_i64(gs[(i * f.cols() + j) % gs.len()])
        });
        let (p_dim, f1, g1) = pushout(&f, &g).unwrap();
        // the square commutes
        prop_assert_eq!(f1.mul(&g), g1.mul(&f));
        prop_assert_eq!(f1.rows(), p_dim);
        // universal property against 20 random cocones into a 3-dim target:
        // sample from the solution space of u.f = v.g
        let vdim = 3usize;
        let a_rows = f.rows();
        let b_rows = g.rows();
        let unknowns = vdim * (a_rows + b_rows);
        let mut sys = Matrix::zero(Rationals, vdim * f.cols(), unknowns);
        for r in 0..vdim {
            for c in 0..f.cols() {
                let row = r * f.cols() + c;
                for k in 0..a_rows {
                    sys.set(row, r * a_rows + k, f.get(k, c).clone());
                }
                for k in 0..b_rows {
                    let mut v = g.get(k, c).clone();
                    v = Rationals.neg(&v);
                    sys.set(row, vdim * a_rows + r * b_rows + k, v);
                }
            }
        }
        let cocones = sys.kernel_basis();
        for t in 0..20 {
            // deterministic combination of the cocone space
            let mut combo = vec![Rationals.zero(); unknowns];
            for j in 0..cocones.cols() {
                let c = Rationals.from_i64(cocone_coeffs[(t + j) % cocone_coeffs.len()]);
                for i in 0..unknowns {
                    combo[i] = Rationals.add(&combo[i], &Rationals.mul(&c, cocones.get(i, j)));
                }
            }
            let u = Matrix::from_fn(Rationals, vdim, a_rows, |r, k| combo[r * a_rows + k].clone());
            let v = Matrix::from_fn(Rationals, vdim, b_rows, |r, k| {
                combo[vdim * a_rows + r * b_rows + k].clone()
            });
            prop_assert_eq!(u.mul(&f), v.mul(&g));
            // solve w . g1 = u and w . f1 = v simultaneously
            let lhs = g1.hstack(&f1).transpose();
            let rhs = u.hstack(&v).transpose();
            let w = lhs.solve(&rhs).unwrap();
            prop_assert!(w.is_some(), "factorization exists");
            let w = w.unwrap().transpose();
            prop_assert_eq!(w.mul(&g1), u);
            prop_assert_eq!(w.mul(&f1), v);
            // uniqueness: the joint constraint matrix has full column rank
            prop_assert_eq!(lhs.kernel_basis().cols(), 0);
        }
    }
}

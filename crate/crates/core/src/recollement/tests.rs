use std::sync::Arc;

use super::*;
use crate::bimodule::hom_bimodule;
use crate::field::Rationals;
use crate::module::{projective, simple};
use crate::quiver::{PathAlgebra, Quiver, RelationSet};

type Alg = Arc<PathAlgebra<Rationals>>;

fn a2() -> Alg {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    PathAlgebra::build(q, RelationSet::empty(10), Rationals).unwrap()
}

fn a3() -> Alg {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
    )
    .unwrap();
    PathAlgebra::build(q, RelationSet::empty(10), Rationals).unwrap()
}

fn indecomposables_a2(alg: &Alg) -> Vec<crate::module::Representation<Rationals>> {
    vec![projective(alg, 0), projective(alg, 1), simple(alg, 0)]
}

#[test]
fn quotient_of_a2_by_sink() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let q = quotient_category(&datum).unwrap();
    assert_eq!(q.algebra.n_objects(), 1);
    assert_eq!(q.algebra.hom_dim(0, 0), 1);
    assert_eq!(q.algebra.total_dim(), 1);
    // the arrow factors through the sink: it dies in the quotient
    assert_eq!(q.ideal_dims[0][1], 1);
    assert_eq!(q.ideal_dims[0][0], 0);
}

#[test]
fn quotient_kills_long_composites() {
    let alg = a3();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let q = quotient_category(&datum).unwrap();
    assert_eq!(q.algebra.n_objects(), 2);
    // Hom(1,3) dies: the only path runs through the middle vertex
    let v1 = q.new_index(0).unwrap();
    let v3 = q.new_index(2).unwrap();
    assert_eq!(q.algebra.hom_dim(v1, v3), 0);
    assert_eq!(q.ideal_dims[0][2], 1);
}

#[test]
fn subcategory_must_be_proper_and_nonempty() {
    let alg = a2();
    assert!(SubcategoryDatum::new(alg.clone(), vec![]).is_err());
    assert!(SubcategoryDatum::new(alg.clone(), vec![0, 1]).is_err());
}

#[test]
fn dimension_additivity_over_all_pairs() {
    let alg = a3();
    for b in 0..3 {
        let datum = SubcategoryDatum::new(alg.clone(), vec![b]).unwrap();
        let q = quotient_category(&datum).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let qdim = match (q.new_index(x), q.new_index(y)) {
                    (Some(nx), Some(ny)) => q.algebra.hom_dim(nx, ny),
                    _ => 0,
                };
                assert_eq!(
                    qdim + q.ideal_dims[x][y],
                    alg.hom_dim(x, y),
                    "pair ({x},{y}) with chosen {b}"
                );
            }
        }
    }
}

fn commutative_square() -> Alg {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("c".into(), "2".into(), "4".into()),
            ("b".into(), "1".into(), "3".into()),
            ("d".into(), "3".into(), "4".into()),
        ],
    )
    .unwrap();
    let one = crate::field::Field::one(&Rationals);
    let rels = crate::quiver::RelationSet {
        relations: vec![crate::quiver::Relation {
            terms: vec![
                (one.clone(), vec![0, 1]),
                (crate::field::Field::neg(&Rationals, &one), vec![2, 3]),
            ],
        }],
        nilpotency_bound: 10,
    };
    PathAlgebra::build(q, rels, Rationals).unwrap()
}

#[test]
fn quotient_drops_one_route_of_a_commutativity_relation() {
    // killing one corner of the square leaves the other route, which must
    // now vanish on its own in the quotient
    let alg = commutative_square();
    assert_eq!(alg.hom_dim(0, 3), 1);
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let q = quotient_category(&datum).unwrap();
    assert_eq!(q.algebra.n_objects(), 3);
    let v1 = q.new_index(0).unwrap();
    let v4 = q.new_index(3).unwrap();
    // the surviving route b then d is a relation of the quotient
    assert_eq!(q.algebra.hom_dim(v1, v4), 0);
    assert_eq!(q.ideal_dims[0][3], 1);
    // and the quotient still has the surviving arrows
    assert_eq!(q.algebra.hom_dim(v1, q.new_index(2).unwrap()), 1);
}

#[test]
fn recollement_axioms_over_a_relation_bearing_algebra() {
    let alg = crate::selftest::zigzag_quiver(4);
    let indecs = crate::enumerate::enumerate_indecomposables(&alg).unwrap();
    assert_eq!(indecs.len(), 7);
    for b in [0usize, 2] {
        let datum = SubcategoryDatum::new(alg.clone(), vec![b]).unwrap();
        let rec = build_recollement(&datum).unwrap();
        let report = check_recollement(&rec, &indecs).unwrap();
        assert!(
            report.all_passed(),
            "chosen {{{b}}} failed: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn j_functor_values_over_a2() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    // the subcategory has one object with a one-dimensional endomorphism
    // algebra, so its modules are vector spaces
    let k_mod = simple(rec.b.algebra(), 0);
    let j_lower = rec.j_lower_shriek(&k_mod);
    assert_eq!(j_lower.dims(), projective(&alg, 1).dims());
    let j_star = rec.j_lower_star(&k_mod);
    assert_eq!(j_star.dims(), &[1, 1]);
}

#[test]
fn i_functor_values_over_a2() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    let s_q = simple(&rec.quotient.algebra, 0);
    let extended = rec.i_star(&s_q);
    assert_eq!(extended.dims(), simple(&alg, 0).dims());
    // restriction to the subcategory vanishes on it
    assert!(rec.j_shriek(&extended).is_zero());
}

#[test]
fn recollement_axioms_on_a2_indecomposables() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    let report = check_recollement(&rec, &indecomposables_a2(&alg)).unwrap();
    assert!(
        report.all_passed(),
        "failed: {:?}",
        report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .collect::<Vec<_>>()
    );
}

#[test]
fn recollement_axioms_on_a3_all_singletons() {
    let alg = a3();
    let indecs = crate::enumerate::enumerate_indecomposables(&alg).unwrap();
    assert_eq!(indecs.len(), 6);
    for b in 0..3 {
        let datum = SubcategoryDatum::new(alg.clone(), vec![b]).unwrap();
        let rec = build_recollement(&datum).unwrap();
        let report = check_recollement(&rec, &indecs).unwrap();
        assert!(
            report.all_passed(),
            "chosen {{{b}}} failed: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn corrupted_counit_is_reported() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    let report = check_recollement_with_fault(
        &rec,
        &indecomposables_a2(&alg),
        Some(FaultInjection::ScaleCounitJLower),
    )
    .unwrap();
    assert!(!report.all_passed());
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
    assert!(failed.iter().all(|c| c.name.contains("(j_!, j^!)")));
    assert!(failed.iter().any(|c| c.counterexample.is_some()));
}

#[test]
fn induce_bimodule_identity_is_identity() {
    let alg = a2();
    let m = hom_bimodule(&alg);
    let id = IdentityFunctor(alg.clone());
    let n = induce_bimodule(&id, &m).unwrap();
    for u in 0..2 {
        for t in 0..2 {
            assert_eq!(n.dim(u, t), m.dim(u, t));
        }
    }
}

#[test]
fn induced_bimodule_along_j_lower() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    // bimodule over (subcategory, A2): restrict the hom bimodule
    let m = restricted_hom_bimodule(&rec, &alg);
    let n = induce_bimodule(&JLowerShriek(&rec), &m).unwrap();
    for t in 0..2 {
        let col = m.column_module(t);
        let jcol = rec.j_lower_shriek(&col);
        for (s, &d) in jcol.dims().iter().enumerate() {
            assert_eq!(n.dim(s, t), d);
        }
    }
}

#[test]
fn zero_bimodule_induced_recollement_degenerates() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    let m = crate::bimodule::Bimodule::zero(rec.b.algebra().clone(), alg.clone());
    let out = check_compatibility_and_induce(&rec, m).unwrap();
    assert!(
        out.report.all_passed(),
        "failed: {:?}",
        out.report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .collect::<Vec<_>>()
    );
}

#[test]
fn induced_recollement_with_restricted_hom() {
    let alg = a2();
    let datum = SubcategoryDatum::new(alg.clone(), vec![1]).unwrap();
    let rec = build_recollement(&datum).unwrap();
    let m = restricted_hom_bimodule(&rec, &alg);
    let out = check_compatibility_and_induce(&rec, m).unwrap();
    assert!(
        out.report.all_passed(),
        "failed: {:?}",
        out.report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .collect::<Vec<_>>()
    );
    // the induced matrix categories exist with the right block shapes
    assert_eq!(out.induced.lambda.algebra.n_objects(), 3);
    assert_eq!(out.induced.lambda_shriek.algebra.n_objects(), 4);
    assert_eq!(out.induced.lambda_star.algebra.n_objects(), 4);
}

//! Enumeration of indecomposables for representation-finite algebras over
//! the rationals, and the almost-split verifier for module-level sequences.
//!
//! The enumeration is a closure procedure: seed with the indecomposable
//! projectives, injectives and simples, then repeatedly add indecomposable
//! summands of translates, radicals, tops and socle quotients until nothing
//! new appears. On representation-finite input this terminates with the
//! full list; the iteration cap turns a runaway (wild input) into an error.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::module::{
    decompose_indecomposables, find_isomorphism, hom_space, injective, is_indecomposable,
    projective, radical, simple, socle, solve_factorization, tau, tau_inverse, top, FactorSide,
    ModuleMorphism, Representation, ShortExactSequence,
};
use crate::quiver::PathAlgebra;

const MAX_OBJECTS: usize = 512;
const MAX_ROUNDS: usize = 64;

type Rep = Representation<Rationals>;

fn add_if_new(list: &mut Vec<Rep>, cand: Rep) -> Result<bool> {
    if cand.is_zero() {
        return Ok(false);
    }
    for known in list.iter() {
        if find_isomorphism(known, &cand).is_some() {
            return Ok(false);
        }
    }
    list.push(cand);
    if list.len() > MAX_OBJECTS {
        return Err(Error::EnumerationScope(format!(
            "more than {MAX_OBJECTS} indecomposables; supply an explicit list"
        )));
    }
    Ok(true)
}

fn add_summands(list: &mut Vec<Rep>, x: &Rep) -> Result<bool> {
    let mut changed = false;
    if x.is_zero() {
        return Ok(false);
    }
    for (summand, _) in decompose_indecomposables(x)? {
        changed |= add_if_new(list, summand)?;
    }
    Ok(changed)
}

/// All indecomposables of a representation-finite algebra, up to
/// isomorphism, in a deterministic discovery order.
pub fn enumerate_indecomposables(alg: &Arc<PathAlgebra<Rationals>>) -> Result<Vec<Rep>> {
    let op = alg.opposite();
    let mut list: Vec<Rep> = Vec::new();
    for v in 0..alg.n_objects() {
        add_if_new(&mut list, projective(alg, v))?;
        add_if_new(&mut list, injective(alg, &op, v))?;
        add_if_new(&mut list, simple(alg, v))?;
    }
    for round in 0..MAX_ROUNDS {
        let mut changed = false;
        let snapshot = list.clone();
        for x in &snapshot {
            changed |= add_summands(&mut list, &tau(x, &op))?;
            changed |= add_summands(&mut list, &tau_inverse(x, &op))?;
            let (rad, _) = radical(x);
            changed |= add_summands(&mut list, &rad)?;
            let (t, _) = top(x);
            changed |= add_summands(&mut list, &t)?;
            let (_, sincl) = socle(x);
            let (quot, _) = sincl.cokernel();
            changed |= add_summands(&mut list, &quot)?;
        }
        if !changed {
            return Ok(list);
        }
        let _ = round;
    }
    Err(Error::EnumerationScope(
        "indecomposable closure did not stabilize; supply an explicit list".into(),
    ))
}

/// A factorization witness for one tested morphism into the end term.
#[derive(Debug)]
pub struct FactorizationWitness<F: crate::field::Field> {
    pub test_index: usize,
    pub through: ModuleMorphism<F>,
    pub exact: bool,
}

/// Outcome of checking the almost-split property of a module sequence.
#[derive(Debug)]
pub struct AlmostSplitReport {
    pub end_indecomposable: bool,
    pub first_indecomposable: bool,
    pub non_split: bool,
    pub tested_morphisms: usize,
    pub failed_factorizations: usize,
    pub verified: bool,
}

/// Every non-retraction into the end term must factor through the epi.
/// `indecomposables` must cover the module category up to isomorphism.
pub fn verify_almost_split_modules(
    ses: &ShortExactSequence<Rationals>,
    indecomposables: &[Rep],
) -> Result<AlmostSplitReport> {
    if indecomposables.is_empty() {
        return Err(Error::EnumerationScope(
            "an explicit indecomposable list is required".into(),
        ));
    }
    let end = ses.p.target();
    let first = ses.j.source();
    let end_indecomposable = is_indecomposable(end)?;
    let first_indecomposable = is_indecomposable(first)?;
    let non_split =
        solve_factorization(&ModuleMorphism::identity(end), &ses.p, FactorSide::Through).is_none();
    let mut tested = 0usize;
    let mut failed = 0usize;
    for t_obj in indecomposables {
        for test in radical_morphisms_into(t_obj, end)? {
            tested += 1;
            match solve_factorization(&test, &ses.p, FactorSide::Through) {
                Some(u) => {
                    if ses.p.compose(&u) != test {
                        failed += 1;
                    }
                }
                None => failed += 1,
            }
        }
    }
    Ok(AlmostSplitReport {
        end_indecomposable,
        first_indecomposable,
        non_split,
        tested_morphisms: tested,
        failed_factorizations: failed,
        verified: end_indecomposable && first_indecomposable && non_split && failed == 0,
    })
}

/// A basis of the non-isomorphisms T -> Z between indecomposables: the
/// whole hom space when T and Z are non-isomorphic, otherwise an
/// isomorphism composed with a radical basis of End(T).
pub fn radical_morphisms_into(
    t_obj: &Rep,
    z: &Rep,
) -> Result<Vec<ModuleMorphism<Rationals>>> {
    match find_isomorphism(t_obj, z) {
        None => Ok(hom_space(t_obj, z)),
        Some(iso) => {
            let basis = hom_space(t_obj, t_obj);
            // radical = kernel of the trace form within End(T)
            let f = Rationals;
            let n = basis.len();
            let mut gram = crate::linalg::Matrix::zero(f, n, n);
            for i in 0..n {
                for j in 0..n {
                    let comp = basis[i].compose(&basis[j]);
                    let mut tr = crate::field::Field::zero(&f);
                    for m in comp.components() {
                        for d in 0..m.rows().min(m.cols()) {
                            tr = crate::field::Field::add(&f, &tr, m.get(d, d));
                        }
                    }
                    gram.set(i, j, tr);
                }
            }
            let kernel = gram.kernel_basis();
            let mut out = Vec::new();
            for c in 0..kernel.cols() {
                let mut acc = ModuleMorphism::zero(t_obj, t_obj);
                for (i, b) in basis.iter().enumerate() {
                    let coeff = kernel.get(i, c);
                    if !crate::field::Field::is_zero(&f, coeff) {
                        acc = acc.add(&b.scale(coeff));
                    }
                }
                out.push(iso.compose(&acc));
            }
            Ok(out)
        }
    }
}

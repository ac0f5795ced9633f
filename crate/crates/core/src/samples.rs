//! Deterministic sample objects for randomized checks: random quotients of
//! projective sums (valid over any algebra) and random maps objects.

use std::sync::Arc;

use crate::detrand::DetRng;
use crate::field::Field;
use crate::maps::MapsObject;
use crate::module::{
    generated_submodule, hom_space, projective, ModuleMorphism, Representation,
};
use crate::quiver::PathAlgebra;

/// A random finite-dimensional module: a quotient of a small sum of
/// representables by a randomly generated submodule.
pub fn random_representation<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    rng: &mut DetRng,
    max_summands: usize,
) -> Representation<F> {
    let f = alg.field();
    let n = alg.n_objects();
    let k = 1 + rng.below(max_summands.max(1));
    let mut p = Representation::zero(alg.clone());
    for _ in 0..k {
        p = p.direct_sum(&projective(alg, rng.below(n)));
    }
    // generate a random submodule from a couple of radical-ish elements
    let n_gens = rng.below(3);
    let mut gens = Vec::new();
    for _ in 0..n_gens {
        let v = rng.below(n);
        if p.dim(v) == 0 {
            continue;
        }
        let elem: Vec<F::Elem> = (0..p.dim(v)).map(|_| f.from_i64(rng.small_int(1))).collect();
        gens.push((v, elem));
    }
    let (_, incl) = generated_submodule(&p, &gens);
    let (quot, _) = incl.cokernel();
    quot
}

/// A random maps object: two random modules joined by a random combination
/// of their hom basis.
pub fn random_maps_object<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    rng: &mut DetRng,
    max_summands: usize,
) -> MapsObject<F> {
    let f = alg.field();
    let a1 = random_representation(alg, rng, max_summands);
    let a0 = random_representation(alg, rng, max_summands);
    let basis = hom_space(&a1, &a0);
    let mut m = ModuleMorphism::zero(&a1, &a0);
    for h in &basis {
        m = m.add(&h.scale(&f.from_i64(rng.small_int(2))));
    }
    MapsObject::new(m)
}

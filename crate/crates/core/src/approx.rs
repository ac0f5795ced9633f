//! Left and right approximations by subcategories: the additive-closure
//! construction by (co)evaluation, the explicit constructions for the
//! epimorphism and monomorphism subcategories of the maps category, the
//! pushout construction on comma categories, and factorization
//! certification. Every construction is certified against the generator
//! list rather than trusted.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::maps::{
    factor_after, factor_through, maps_hom, MapsMorphism, MapsObject,
};
use crate::module::{
    flatten_components, hom_space, injective_envelope, projective_cover, solve_factorization,
    FactorSide, ModuleMorphism, Representation,
};
use crate::quiver::PathAlgebra;
use crate::recollement::RepFunctor;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

/// Result of certifying a candidate approximation: either every tested
/// morphism factors (with recomposition checked exactly), or a refuting
/// morphism is returned.
#[derive(Debug)]
pub enum Certification<T> {
    Certified { tested: usize, witnesses: Vec<T> },
    Refuted { failing_index: usize, description: String },
}

impl<T> Certification<T> {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified { .. })
    }

    pub fn tested(&self) -> usize {
        match self {
            Certification::Certified { tested, .. } => *tested,
            Certification::Refuted { .. } => 0,
        }
    }
}

/// Certify a module-level approximation candidate against generators.
/// Right: every basis morphism Z -> M factors through the candidate.
/// Left: every basis morphism M -> Z extends along it.
pub fn certify_module_approximation<F: Field>(
    candidate: &ModuleMorphism<F>,
    generators: &[Representation<F>],
    direction: Direction,
) -> Certification<ModuleMorphism<F>> {
    let mut witnesses = Vec::new();
    let mut index = 0usize;
    for z in generators {
        let tests = match direction {
            Direction::Right => hom_space(z, candidate.target()),
            Direction::Left => hom_space(candidate.source(), z),
        };
        for t in tests {
            let side = match direction {
                Direction::Right => FactorSide::Through,
                Direction::Left => FactorSide::After,
            };
            match solve_factorization(&t, candidate, side) {
                Some(u) => {
                    let recomposed = match direction {
                        Direction::Right => candidate.compose(&u),
                        Direction::Left => u.compose(candidate),
                    };
                    if recomposed != t {
                        return Certification::Refuted {
                            failing_index: index,
                            description: "witness does not recompose".into(),
                        };
                    }
                    witnesses.push(u);
                }
                None => {
                    return Certification::Refuted {
                        failing_index: index,
                        description: "no factorization".into(),
                    }
                }
            }
            index += 1;
        }
    }
    Certification::Certified { tested: index, witnesses }
}

/// The additive-closure approximation of a module: the evaluation map from
/// (right) or the coevaluation map into (left) a sum of generator copies,
/// one per hom basis element.
pub fn approximate_addg_module<F: Field>(
    m: &Representation<F>,
    generators: &[Representation<F>],
    direction: Direction,
) -> (ModuleMorphism<F>, Certification<ModuleMorphism<F>>) {
    let alg = m.algebra().clone();
    let mut total = Representation::zero(alg.clone());
    let mut parts: Vec<ModuleMorphism<F>> = Vec::new();
    for g in generators {
        let homs = match direction {
            Direction::Right => hom_space(g, m),
            Direction::Left => hom_space(m, g),
        };
        for h in homs {
            total = total.direct_sum(g);
            parts.push(h);
        }
    }
    let f = alg.field();
    let n = alg.n_objects();
    let candidate = match direction {
        Direction::Right => {
            let comps: Vec<Matrix<F>> = (0..n)
                .map(|v| {
                    parts
                        .iter()
                        .map(|h| h.component(v).clone())
                        .reduce(|a, b| a.hstack(&b))
                        .unwrap_or_else(|| Matrix::zero(f, m.dim(v), 0))
                })
                .collect();
            ModuleMorphism::new_unchecked(total.clone(), m.clone(), comps)
        }
        Direction::Left => {
            let comps: Vec<Matrix<F>> = (0..n)
                .map(|v| {
                    parts
                        .iter()
                        .map(|h| h.component(v).clone())
                        .reduce(|a, b| a.vstack(&b))
                        .unwrap_or_else(|| Matrix::zero(f, 0, m.dim(v)))
                })
                .collect();
            ModuleMorphism::new_unchecked(m.clone(), total.clone(), comps)
        }
    };
    let cert = certify_module_approximation(&candidate, generators, direction);
    (candidate, cert)
}

/// Certify a maps-level approximation candidate against generator objects.
pub fn certify_maps_approximation<F: Field>(
    candidate: &MapsMorphism<F>,
    generators: &[MapsObject<F>],
    direction: Direction,
) -> Certification<MapsMorphism<F>> {
    let mut witnesses = Vec::new();
    let mut index = 0usize;
    for z in generators {
        let tests = match direction {
            Direction::Right => maps_hom(z, candidate.target()),
            Direction::Left => maps_hom(candidate.source(), z),
        };
        for t in tests {
            let found = match direction {
                Direction::Right => factor_through(&t, candidate),
                Direction::Left => factor_after(&t, candidate),
            };
            match found {
                Some(u) => {
                    let recomposed = match direction {
                        Direction::Right => candidate.compose(&u),
                        Direction::Left => u.compose(candidate),
                    };
                    if recomposed != t {
                        return Certification::Refuted {
                            failing_index: index,
                            description: "witness does not recompose".into(),
                        };
                    }
                    witnesses.push(u);
                }
                None => {
                    return Certification::Refuted {
                        failing_index: index,
                        description: "no factorization".into(),
                    }
                }
            }
            index += 1;
        }
    }
    Certification::Certified { tested: index, witnesses }
}

/// Additive-closure approximation in the maps category.
pub fn approximate_addg_maps<F: Field>(
    x: &MapsObject<F>,
    generators: &[MapsObject<F>],
    direction: Direction,
) -> (MapsMorphism<F>, Certification<MapsMorphism<F>>) {
    let alg = x.algebra().clone();
    let mut total = MapsObject::zero(alg.clone());
    let mut parts: Vec<MapsMorphism<F>> = Vec::new();
    for g in generators {
        let homs = match direction {
            Direction::Right => maps_hom(g, x),
            Direction::Left => maps_hom(x, g),
        };
        for h in homs {
            total = total.direct_sum(g);
            parts.push(h);
        }
    }
    let f = alg.field();
    let n = alg.n_objects();
    let stack = |side1: bool, pick1: bool| -> ModuleMorphism<F> {
        // helper assembling one component (a1 or a0) of the candidate
        let (src, tgt): (Representation<F>, Representation<F>) = match (direction, pick1) {
            (Direction::Right, true) => (total.a1().clone(), x.a1().clone()),
            (Direction::Right, false) => (total.a0().clone(), x.a0().clone()),
            (Direction::Left, true) => (x.a1().clone(), total.a1().clone()),
            (Direction::Left, false) => (x.a0().clone(), total.a0().clone()),
        };
        let comps: Vec<Matrix<F>> = (0..n)
            .map(|v| {
                parts
                    .iter()
                    .map(|h| {
                        if pick1 {
                            h.h1().component(v).clone()
                        } else {
                            h.h0().component(v).clone()
                        }
                    })
                    .reduce(|a, b| if side1 { a.hstack(&b) } else { a.vstack(&b) })
                    .unwrap_or_else(|| Matrix::zero(f, tgt.dim(v), src.dim(v)))
            })
            .collect();
        ModuleMorphism::new_unchecked(src, tgt, comps)
    };
    let candidate = match direction {
        Direction::Right => MapsMorphism::new_unchecked(
            total.clone(),
            x.clone(),
            stack(true, true),
            stack(true, false),
        ),
        Direction::Left => MapsMorphism::new_unchecked(
            x.clone(),
            total.clone(),
            stack(false, true),
            stack(false, false),
        ),
    };
    let cert = certify_maps_approximation(&candidate, generators, direction);
    (candidate, cert)
}

/// Right approximation by epimorphisms: corestrict onto the image.
pub fn right_epi_approximation<F: Field>(x: &MapsObject<F>) -> MapsMorphism<F> {
    let onto = x.map().onto_image();
    let (_, incl) = x.map().image();
    let approx = MapsObject::new(onto);
    MapsMorphism::new(
        approx,
        x.clone(),
        ModuleMorphism::identity(x.a1()),
        incl,
    )
    .expect("image corestriction commutes")
}

/// Left approximation by epimorphisms: extend the codomain cover.
pub fn left_epi_approximation<F: Field>(x: &MapsObject<F>) -> MapsMorphism<F> {
    let f = x.algebra().field();
    let n = x.algebra().n_objects();
    let cover = projective_cover(x.a0());
    let a_ext = x.a1().direct_sum(cover.map.source());
    let comps: Vec<Matrix<F>> = (0..n)
        .map(|v| x.map().component(v).hstack(cover.map.component(v)))
        .collect();
    let extended = MapsObject::new(ModuleMorphism::new_unchecked(
        a_ext.clone(),
        x.a0().clone(),
        comps,
    ));
    let incl: Vec<Matrix<F>> = (0..n)
        .map(|v| {
            Matrix::identity(f, x.a1().dim(v)).vstack(&Matrix::zero(
                f,
                cover.map.source().dim(v),
                x.a1().dim(v),
            ))
        })
        .collect();
    MapsMorphism::new(
        x.clone(),
        extended,
        ModuleMorphism::new_unchecked(x.a1().clone(), a_ext, incl),
        ModuleMorphism::identity(x.a0()),
    )
    .expect("cover extension commutes")
}

/// Left approximation by monomorphisms: divide out the kernel.
pub fn left_mono_approximation<F: Field>(x: &MapsObject<F>) -> MapsMorphism<F> {
    let (_, kincl) = x.map().kernel();
    let (coim, proj) = kincl.cokernel();
    // induced monomorphism out of the coimage
    let comps: Vec<Matrix<F>> = (0..x.algebra().n_objects())
        .map(|v| {
            let lhs = proj.component(v).transpose();
            let rhs = x.map().component(v).transpose();
            lhs.solve(&rhs)
                .expect("shapes agree")
                .expect("map kills its kernel")
                .transpose()
        })
        .collect();
    let mono = ModuleMorphism::new_unchecked(coim, x.a0().clone(), comps);
    MapsMorphism::new(
        x.clone(),
        MapsObject::new(mono),
        proj,
        ModuleMorphism::identity(x.a0()),
    )
    .expect("coimage projection commutes")
}

/// Right approximation by monomorphisms: graph against the injective
/// envelope of the domain.
pub fn right_mono_approximation<F: Field>(
    x: &MapsObject<F>,
    op: &Arc<PathAlgebra<F>>,
) -> MapsMorphism<F> {
    let f = x.algebra().field();
    let n = x.algebra().n_objects();
    let env = injective_envelope(x.a1(), op);
    let b_ext = x.a0().direct_sum(env.target());
    let comps: Vec<Matrix<F>> = (0..n)
        .map(|v| x.map().component(v).vstack(env.component(v)))
        .collect();
    let graph = MapsObject::new(ModuleMorphism::new_unchecked(
        x.a1().clone(),
        b_ext.clone(),
        comps,
    ));
    let proj: Vec<Matrix<F>> = (0..n)
        .map(|v| {
            Matrix::identity(f, x.a0().dim(v)).hstack(&Matrix::zero(
                f,
                x.a0().dim(v),
                env.target().dim(v),
            ))
        })
        .collect();
    MapsMorphism::new(
        graph,
        x.clone(),
        ModuleMorphism::identity(x.a1()),
        ModuleMorphism::new_unchecked(b_ext, x.a0().clone(), proj),
    )
    .expect("graph projection commutes")
}

/// An object of the comma category over a covariant functor: a morphism
/// from the image of the domain-side object into the codomain-side object.
#[derive(Clone, Debug)]
pub struct FunctorComma<F: Field> {
    pub b: Representation<F>,
    pub a: Representation<F>,
    pub g: ModuleMorphism<F>,
}

impl<F: Field> FunctorComma<F> {
    pub fn new(
        functor: &dyn RepFunctor<F>,
        b: Representation<F>,
        a: Representation<F>,
        g: ModuleMorphism<F>,
    ) -> Result<Self> {
        let gb = functor.obj(&b);
        if g.source() != &gb || g.target() != &a {
            return Err(Error::DimensionMismatch("comma structure map".into()));
        }
        Ok(FunctorComma { b, a, g })
    }
}

/// A morphism of the functor comma category, found by a combined solve.
#[derive(Clone, Debug)]
pub struct FunctorCommaMorphism<F: Field> {
    pub beta: ModuleMorphism<F>,
    pub alpha: ModuleMorphism<F>,
}

/// Basis of the comma hom space over an additive functor: pairs (beta,
/// alpha) with alpha . g = g' . F(beta), solved over the product of hom
/// bases.
pub fn functor_comma_hom<F: Field>(
    functor: &dyn RepFunctor<F>,
    x: &FunctorComma<F>,
    y: &FunctorComma<F>,
) -> Vec<FunctorCommaMorphism<F>> {
    let f = x.b.field();
    let betas = hom_space(&x.b, &y.b);
    let alphas = hom_space(&x.a, &y.a);
    // constraint: alpha . g_x - g_y . F(beta) = 0
    let sample = ModuleMorphism::zero(x.g.source(), y.g.target());
    let rows = flatten_components(&sample).len();
    let mut sys = Matrix::zero(f, rows, betas.len() + alphas.len());
    for (j, beta) in betas.iter().enumerate() {
        let term = y.g.compose(&functor.mor(beta)).neg();
        for (i, v) in flatten_components(&term).iter().enumerate() {
            sys.set(i, j, v.clone());
        }
    }
    for (j, alpha) in alphas.iter().enumerate() {
        let term = alpha.compose(&x.g);
        for (i, v) in flatten_components(&term).iter().enumerate() {
            sys.set(i, betas.len() + j, v.clone());
        }
    }
    let kernel = sys.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for c in 0..kernel.cols() {
        let mut beta = ModuleMorphism::zero(&x.b, &y.b);
        for (j, bmor) in betas.iter().enumerate() {
            let coeff = kernel.get(j, c);
            if !f.is_zero(coeff) {
                beta = beta.add(&bmor.scale(coeff));
            }
        }
        let mut alpha = ModuleMorphism::zero(&x.a, &y.a);
        for (j, amor) in alphas.iter().enumerate() {
            let coeff = kernel.get(betas.len() + j, c);
            if !f.is_zero(coeff) {
                alpha = alpha.add(&amor.scale(coeff));
            }
        }
        out.push(FunctorCommaMorphism { beta, alpha });
    }
    out
}

/// Solve t = u . candidate over the comma category (left approximation
/// factorization).
fn functor_comma_factor_after<F: Field>(
    functor: &dyn RepFunctor<F>,
    t: &FunctorCommaMorphism<F>,
    candidate: &FunctorCommaMorphism<F>,
    mid: &FunctorComma<F>,
    tgt: &FunctorComma<F>,
) -> Option<FunctorCommaMorphism<F>> {
    let f = mid.b.field();
    let basis = functor_comma_hom(functor, mid, tgt);
    let rhs = {
        let mut v = flatten_components(&t.beta);
        v.extend(flatten_components(&t.alpha));
        v
    };
    let mut sys = Matrix::zero(f, rhs.len(), basis.len());
    for (j, u) in basis.iter().enumerate() {
        let composed_beta = u.beta.compose(&candidate.beta);
        let composed_alpha = u.alpha.compose(&candidate.alpha);
        let mut v = flatten_components(&composed_beta);
        v.extend(flatten_components(&composed_alpha));
        for (i, e) in v.iter().enumerate() {
            sys.set(i, j, e.clone());
        }
    }
    let sol = sys.solve(&Matrix::column(f, rhs)).expect("shapes agree")?;
    let mut beta = ModuleMorphism::zero(&mid.b, &tgt.b);
    let mut alpha = ModuleMorphism::zero(&mid.a, &tgt.a);
    for (j, u) in basis.iter().enumerate() {
        let c = sol.get(j, 0);
        if !f.is_zero(c) {
            beta = beta.add(&u.beta.scale(c));
            alpha = alpha.add(&u.alpha.scale(c));
        }
    }
    Some(FunctorCommaMorphism { beta, alpha })
}

/// The pushout construction of a left approximation in the comma category:
/// approximate the domain side, push out, approximate the corner.
pub struct CommaApproximation<F: Field> {
    pub target: FunctorComma<F>,
    pub morphism: FunctorCommaMorphism<F>,
    pub tested: usize,
    pub certified: bool,
}

pub fn smalo_comma_approximation<F: Field>(
    functor: &dyn RepFunctor<F>,
    x: &FunctorComma<F>,
    y_generators: &[Representation<F>],
    x_generators: &[Representation<F>],
) -> Result<CommaApproximation<F>> {
    let f = x.b.field();
    let n = x.a.algebra().n_objects();
    // left approximation of the domain-side object
    let (alpha_b, cert_b) = approximate_addg_module(&x.b, y_generators, Direction::Left);
    if !cert_b.is_certified() {
        return Err(Error::InconsistentActions(
            "domain-side approximation failed its own certificate".into(),
        ));
    }
    let y_b = alpha_b.target().clone();
    // pushout of (g, F(alpha_b)) in the codomain category
    let g_alpha = functor.mor(&alpha_b);
    let stacked_comps: Vec<Matrix<F>> = (0..n)
        .map(|v| x.g.component(v).vstack(&g_alpha.component(v).neg()))
        .collect();
    let corner_sum = x.a.direct_sum(g_alpha.target());
    let stacked = ModuleMorphism::new_unchecked(x.g.source().clone(), corner_sum.clone(), stacked_comps);
    let (pushout_obj, proj) = stacked.cokernel();
    let delta_comps: Vec<Matrix<F>> = (0..n)
        .map(|v| {
            proj.component(v)
                .submatrix(0..pushout_obj.dim(v), 0..x.a.dim(v))
        })
        .collect();
    let delta = ModuleMorphism::new_unchecked(x.a.clone(), pushout_obj.clone(), delta_comps);
    let gprime_comps: Vec<Matrix<F>> = (0..n)
        .map(|v| {
            proj.component(v).submatrix(
                0..pushout_obj.dim(v),
                x.a.dim(v)..x.a.dim(v) + g_alpha.target().dim(v),
            )
        })
        .collect();
    let gprime =
        ModuleMorphism::new_unchecked(g_alpha.target().clone(), pushout_obj.clone(), gprime_comps);
    // left approximation of the pushout corner
    let (beta_c, cert_c) = approximate_addg_module(&pushout_obj, x_generators, Direction::Left);
    if !cert_c.is_certified() {
        return Err(Error::InconsistentActions(
            "corner approximation failed its own certificate".into(),
        ));
    }
    let target = FunctorComma::new(
        functor,
        y_b.clone(),
        beta_c.target().clone(),
        beta_c.compose(&gprime),
    )?;
    let morphism = FunctorCommaMorphism {
        beta: alpha_b.clone(),
        alpha: beta_c.compose(&delta),
    };
    // the square must commute: alpha . g = g_target . F(beta)
    let lhs = morphism.alpha.compose(&x.g);
    let rhs = target.g.compose(&functor.mor(&morphism.beta));
    if lhs != rhs {
        return Err(Error::InconsistentActions(
            "pushout construction square does not commute".into(),
        ));
    }
    let _ = f;
    // certificate: factor every test morphism into generator-built objects
    let mut tested = 0usize;
    let mut certified = true;
    let mut targets: Vec<FunctorComma<F>> = Vec::new();
    for yg in y_generators {
        let gy = functor.obj(yg);
        let zero_a = Representation::zero(x.a.algebra().clone());
        targets.push(FunctorComma {
            b: yg.clone(),
            a: zero_a.clone(),
            g: ModuleMorphism::zero(&gy, &zero_a),
        });
        for xg in x_generators {
            targets.push(FunctorComma {
                b: yg.clone(),
                a: xg.clone(),
                g: ModuleMorphism::zero(&gy, xg),
            });
            for h in hom_space(&gy, xg) {
                targets.push(FunctorComma {
                    b: yg.clone(),
                    a: xg.clone(),
                    g: h,
                });
            }
        }
    }
    for xg in x_generators {
        let zero_b = Representation::zero(x.b.algebra().clone());
        let gzero = functor.obj(&zero_b);
        targets.push(FunctorComma {
            b: zero_b.clone(),
            a: xg.clone(),
            g: ModuleMorphism::zero(&gzero, xg),
        });
    }
    for tobj in &targets {
        for t in functor_comma_hom(functor, x, tobj) {
            tested += 1;
            match functor_comma_factor_after(functor, &t, &morphism, &target, tobj) {
                Some(u) => {
                    if u.beta.compose(&morphism.beta) != t.beta
                        || u.alpha.compose(&morphism.alpha) != t.alpha
                    {
                        certified = false;
                    }
                }
                None => certified = false,
            }
        }
    }
    Ok(CommaApproximation { target, morphism, tested, certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::module::{injective, projective, simple};
    use crate::quiver::{Quiver, RelationSet};
    use crate::recollement::IdentityFunctor;

    type Alg = Arc<PathAlgebra<Rationals>>;

    fn a2() -> Alg {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        PathAlgebra::build(q, RelationSet::empty(10), Rationals).unwrap()
    }

    #[test]
    fn right_addg_approximation_splits_for_member() {
        let alg = a2();
        let p1 = projective(&alg, 0);
        let (cand, cert) =
            approximate_addg_module(&p1, &[p1.clone(), projective(&alg, 1)], Direction::Right);
        assert!(cert.is_certified());
        // membership makes the evaluation a split epi
        assert!(cand.find_section().is_some());
    }

    #[test]
    fn right_addg_by_projectives_is_epi_for_generated() {
        let alg = a2();
        let gens = vec![projective(&alg, 0), projective(&alg, 1)];
        let s1 = simple(&alg, 0);
        let (cand, cert) = approximate_addg_module(&s1, &gens, Direction::Right);
        assert!(cert.is_certified());
        assert!(cand.is_epi());
    }

    #[test]
    fn left_addg_by_injectives_contains_envelope() {
        let alg = a2();
        let op = alg.opposite();
        let gens = vec![injective(&alg, &op, 0), injective(&alg, &op, 1)];
        let s1 = simple(&alg, 0);
        let (cand, cert) = approximate_addg_module(&s1, &gens, Direction::Left);
        assert!(cert.is_certified());
        assert!(cand.is_mono());
        // the envelope of the simple embeds through the approximation
        let env = crate::module::injective_envelope(&s1, &op);
        assert!(
            crate::module::solve_factorization(&env, &cand, FactorSide::After).is_some()
        );
    }

    #[test]
    fn certify_refutes_zero_candidate() {
        let alg = a2();
        let s1 = simple(&alg, 0);
        let zero = ModuleMorphism::zero(&Representation::zero(alg.clone()), &s1);
        let cert = certify_module_approximation(&zero, &[s1.clone()], Direction::Right);
        assert!(!cert.is_certified());
    }

    #[test]
    fn epi_approximations_over_a2() {
        let alg = a2();
        let s1 = simple(&alg, 0);
        // right approximation of a codomain-only object collapses to zero
        let x = MapsObject::codomain_only(&s1);
        let right = right_epi_approximation(&x);
        assert!(right.source().is_zero());
        // left approximation is the cover plugged in as an epi
        let left = left_epi_approximation(&x);
        assert!(left.target().map().is_epi());
        assert_eq!(left.target().a1().dims(), projective(&alg, 0).dims());
    }

    #[test]
    fn mono_approximations_over_a2() {
        let alg = a2();
        let op = alg.opposite();
        let s1 = simple(&alg, 0);
        let x = MapsObject::domain_only(&s1);
        let left = left_mono_approximation(&x);
        assert!(left.target().is_zero());
        let right = right_mono_approximation(&x, &op);
        assert!(right.source().map().is_mono());
        assert_eq!(
            right.source().a0().dims(),
            injective(&alg, &op, 0).dims()
        );
    }

    #[test]
    fn already_epi_right_approximation_is_iso_like() {
        let alg = a2();
        let p1 = projective(&alg, 0);
        let x = MapsObject::diagonal(&p1);
        let right = right_epi_approximation(&x);
        assert!(right.is_iso());
    }

    #[test]
    fn smalo_identity_functor_instance() {
        let alg = a2();
        let id = IdentityFunctor(alg.clone());
        let p1 = projective(&alg, 0);
        let s1 = simple(&alg, 0);
        // object g : P1 -> S1 (the cover)
        let cover = projective_cover(&s1);
        let x = FunctorComma::new(&id, p1.clone(), s1.clone(), cover.map.clone()).unwrap();
        let out = smalo_comma_approximation(
            &id,
            &x,
            &[p1.clone(), projective(&alg, 1)],
            &[s1.clone(), p1.clone()],
        )
        .unwrap();
        assert!(out.certified, "tested {}", out.tested);
        assert!(out.tested > 0);
    }

    #[test]
    fn smalo_everything_gives_trivial_factorizations() {
        let alg = a2();
        let id = IdentityFunctor(alg.clone());
        let indecs = crate::enumerate::enumerate_indecomposables(&alg).unwrap();
        let s1 = simple(&alg, 0);
        let x = FunctorComma::new(
            &id,
            s1.clone(),
            s1.clone(),
            ModuleMorphism::identity(&s1),
        )
        .unwrap();
        let out = smalo_comma_approximation(&id, &x, &indecs, &indecs).unwrap();
        assert!(out.certified);
    }
}

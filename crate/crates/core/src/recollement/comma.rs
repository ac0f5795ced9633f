//! Comma categories over a hom functor of a bimodule, the bimodule induced
//! along a functor, and the lifted recollements on triangular matrix
//! categories together with their compatibility checks.

use std::sync::Arc;

use crate::bimodule::{triangular_matrix_algebra, Bimodule, TriangularAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{
    flatten_components, hom_space, projective, simple, ModuleMorphism, Representation,
};
use crate::quiver::PathAlgebra;

use super::{CheckOutcome, RecollementReport, SixFunctorData};

/// A functor between module categories given extensionally.
pub trait RepFunctor<F: Field> {
    fn source_algebra(&self) -> &Arc<PathAlgebra<F>>;
    fn target_algebra(&self) -> &Arc<PathAlgebra<F>>;
    fn obj(&self, x: &Representation<F>) -> Representation<F>;
    fn mor(&self, h: &ModuleMorphism<F>) -> ModuleMorphism<F>;
}

pub struct IdentityFunctor<F: Field>(pub Arc<PathAlgebra<F>>);

impl<F: Field> RepFunctor<F> for IdentityFunctor<F> {
    fn source_algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.0
    }
    fn target_algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.0
    }
    fn obj(&self, x: &Representation<F>) -> Representation<F> {
        x.clone()
    }
    fn mor(&self, h: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        h.clone()
    }
}

/// j_! of a recollement as a functor value.
pub struct JLowerShriek<'a, F: Field>(pub &'a SixFunctorData<F>);

impl<F: Field> RepFunctor<F> for JLowerShriek<'_, F> {
    fn source_algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.0.b.algebra()
    }
    fn target_algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.0.ambient()
    }
    fn obj(&self, x: &Representation<F>) -> Representation<F> {
        self.0.j_lower_shriek(x)
    }
    fn mor(&self, h: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        self.0.j_lower_shriek_mor(h)
    }
}

/// j_* of a recollement as a functor value.
pub struct JLowerStar<'a, F: Field>(pub &'a SixFunctorData<F>);

impl<F: Field> RepFunctor<F> for JLowerStar<'_, F> {
    fn source_algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.0.b.algebra()
    }
    fn target_algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.0.ambient()
    }
    fn obj(&self, x: &Representation<F>) -> Representation<F> {
        self.0.j_lower_star(x)
    }
    fn mor(&self, h: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        self.0.j_lower_star_mor(h)
    }
}

/// The bimodule induced along a functor: new value at (s, t) is the functor
/// applied to the column at t, evaluated at s.
pub fn induce_bimodule<F: Field>(
    functor: &dyn RepFunctor<F>,
    m: &Bimodule<F>,
) -> Result<Bimodule<F>> {
    if functor.source_algebra().as_ref() != m.left_algebra().as_ref() {
        return Err(Error::AlgebraMismatch(
            "functor domain does not match the bimodule's left side".into(),
        ));
    }
    let s_alg = functor.target_algebra().clone();
    let t_alg = m.right_algebra().clone();
    let f = s_alg.field();
    let nt = t_alg.n_objects();
    let columns: Vec<Representation<F>> = (0..nt).map(|t| functor.obj(&m.column_module(t))).collect();
    let ns = s_alg.n_objects();
    let dims: Vec<Vec<usize>> = (0..ns)
        .map(|s| (0..nt).map(|t| columns[t].dim(s)).collect())
        .collect();
    let left_actions: Vec<Vec<Matrix<F>>> = (0..s_alg.quiver().arrows.len())
        .map(|b| (0..nt).map(|t| columns[t].arrow_map(b).clone()).collect())
        .collect();
    let right_actions: Vec<Vec<Matrix<F>>> = (0..t_alg.quiver().arrows.len())
        .map(|a| {
            let induced = functor.mor(&m.column_morphism(a));
            (0..ns).map(|s| induced.component(s).clone()).collect()
        })
        .collect();
    let _ = f;
    Bimodule::new(s_alg, t_alg, dims, left_actions, right_actions)
}

/// The hom functor of a bimodule, sending a module over the left side to a
/// module over the right side via hom from the columns.
pub struct GFunctor<'a, F: Field> {
    pub bimodule: &'a Bimodule<F>,
}

pub struct GValue<F: Field> {
    pub rep: Representation<F>,
    /// per right-side object, the hom basis from the column module
    pub bases: Vec<Vec<ModuleMorphism<F>>>,
}

impl<F: Field> GFunctor<'_, F> {
    fn t_algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.bimodule.right_algebra()
    }

    pub fn value(&self, a: &Representation<F>) -> GValue<F> {
        let t_alg = self.t_algebra();
        let f = t_alg.field();
        let nt = t_alg.n_objects();
        let bases: Vec<Vec<ModuleMorphism<F>>> = (0..nt)
            .map(|t| hom_space(&self.bimodule.column_module(t), a))
            .collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let maps: Vec<Matrix<F>> = t_alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(arrow, arr)| {
                // precompose with the column morphism M_{t'} -> M_t
                let (t, t2) = (arr.source, arr.target);
                let tbar = self.bimodule.column_morphism(arrow);
                coords_matrix(
                    f,
                    &bases[t2],
                    bases[t].iter().map(|phi| phi.compose(&tbar)),
                )
            })
            .collect();
        let rep = Representation::new(t_alg.clone(), dims, maps)
            .expect("hom functor defines a module");
        GValue { rep, bases }
    }

    pub fn on_morphism(
        &self,
        h: &ModuleMorphism<F>,
        src: &GValue<F>,
        tgt: &GValue<F>,
    ) -> ModuleMorphism<F> {
        let t_alg = self.t_algebra();
        let f = t_alg.field();
        let comps: Vec<Matrix<F>> = (0..t_alg.n_objects())
            .map(|t| {
                coords_matrix(
                    f,
                    &tgt.bases[t],
                    src.bases[t].iter().map(|phi| h.compose(phi)),
                )
            })
            .collect();
        ModuleMorphism::new_unchecked(src.rep.clone(), tgt.rep.clone(), comps)
    }
}

/// Coordinates of a family of morphisms in a fixed hom basis, as matrix
/// columns.
fn coords_matrix<'m, F: Field + 'm>(
    f: F,
    basis: &[ModuleMorphism<F>],
    items: impl Iterator<Item = ModuleMorphism<F>>,
) -> Matrix<F> {
    let items: Vec<ModuleMorphism<F>> = items.collect();
    let rows = basis
        .first()
        .map(|b| flatten_components(b).len())
        .unwrap_or(0);
    let mut sys = Matrix::zero(f, rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (i, v) in flatten_components(b).iter().enumerate() {
            sys.set(i, j, v.clone());
        }
    }
    let mut out = Matrix::zero(f, basis.len(), items.len());
    for (j, it) in items.iter().enumerate() {
        let rhs = Matrix::column(f, flatten_components(it));
        let sol = sys
            .solve(&rhs)
            .expect("shapes agree")
            .expect("morphism lies in the hom space");
        for r in 0..basis.len() {
            out.set(r, j, sol.get(r, 0).clone());
        }
    }
    out
}

/// An object of the comma category over a hom functor: a module over the
/// right side, a module over the left side, and a connecting morphism into
/// the hom value.
#[derive(Clone, Debug)]
pub struct CommaObject<F: Field> {
    pub d: Representation<F>,
    pub a: Representation<F>,
    pub phi: ModuleMorphism<F>,
}

impl<F: Field> CommaObject<F> {
    pub fn new(
        g: &GFunctor<'_, F>,
        d: Representation<F>,
        a: Representation<F>,
        phi: ModuleMorphism<F>,
    ) -> Result<Self> {
        let val = g.value(&a);
        if phi.source() != &d || phi.target() != &val.rep {
            return Err(Error::DimensionMismatch("comma object structure map".into()));
        }
        Ok(CommaObject { d, a, phi })
    }

    pub fn canonical(g: &GFunctor<'_, F>, a: &Representation<F>) -> Self {
        let val = g.value(a);
        CommaObject {
            d: val.rep.clone(),
            a: a.clone(),
            phi: ModuleMorphism::identity(&val.rep),
        }
    }

    pub fn from_a(g: &GFunctor<'_, F>, a: &Representation<F>) -> Self {
        let val = g.value(a);
        let zero = Representation::zero(val.rep.algebra().clone());
        CommaObject {
            d: zero.clone(),
            a: a.clone(),
            phi: ModuleMorphism::zero(&zero, &val.rep),
        }
    }

    pub fn from_d(g: &GFunctor<'_, F>, d: &Representation<F>, a_algebra: &Arc<PathAlgebra<F>>) -> Self {
        let a = Representation::zero(a_algebra.clone());
        let val = g.value(&a);
        CommaObject {
            d: d.clone(),
            a,
            phi: ModuleMorphism::zero(d, &val.rep),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.a.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct CommaMorphism<F: Field> {
    pub f: ModuleMorphism<F>,
    pub g: ModuleMorphism<F>,
}

impl<F: Field> CommaMorphism<F> {
    pub fn new(
        gf: &GFunctor<'_, F>,
        x: &CommaObject<F>,
        y: &CommaObject<F>,
        f: ModuleMorphism<F>,
        g: ModuleMorphism<F>,
    ) -> Result<Self> {
        let sval = gf.value(&x.a);
        let tval = gf.value(&y.a);
        let gg = gf.on_morphism(&g, &sval, &tval);
        if gg.compose(&x.phi) != y.phi.compose(&f) {
            return Err(Error::InconsistentActions(
                "comma square does not commute".into(),
            ));
        }
        Ok(CommaMorphism { f, g })
    }

    pub fn compose(&self, other: &Self) -> Self {
        CommaMorphism {
            f: self.f.compose(&other.f),
            g: self.g.compose(&other.g),
        }
    }

    pub fn is_identity_on(&self, x: &CommaObject<F>) -> bool {
        self.f == ModuleMorphism::identity(&x.d) && self.g == ModuleMorphism::identity(&x.a)
    }
}

/// Transport a comma object to a module over the matrix category.
pub fn comma_to_module<F: Field>(
    g: &GFunctor<'_, F>,
    x: &CommaObject<F>,
    tri: &TriangularAlgebra<F>,
) -> Representation<F> {
    let f = tri.algebra.field();
    let t_alg = &tri.t_side;
    let u_alg = &tri.u_side;
    let nt = t_alg.n_objects();
    let nu = u_alg.n_objects();
    let val = g.value(&x.a);
    let mut dims = vec![0usize; tri.algebra.n_objects()];
    for t in 0..nt {
        dims[tri.t_vertex(t)] = x.d.dim(t);
    }
    for u in 0..nu {
        dims[tri.u_vertex(u)] = x.a.dim(u);
    }
    let mut maps: Vec<Matrix<F>> = Vec::with_capacity(tri.algebra.quiver().arrows.len());
    let n_t_arrows = t_alg.quiver().arrows.len();
    let n_u_arrows = u_alg.quiver().arrows.len();
    for idx in 0..tri.algebra.quiver().arrows.len() {
        let m = if idx < n_t_arrows {
            x.d.arrow_map(idx).clone()
        } else if idx < n_t_arrows + n_u_arrows {
            x.a.arrow_map(idx - n_t_arrows).clone()
        } else {
            // connecting arrow for basis element k of M(u, t): evaluate the
            // classified hom morphism at u on that basis vector, after phi
            let (u, t, k) = tri_connecting_coords(tri, idx).expect("connecting arrow");
            let mut pairing = Matrix::zero(f, x.a.dim(u), val.bases[t].len());
            for (i, alpha) in val.bases[t].iter().enumerate() {
                let col = alpha.component(u);
                for r in 0..x.a.dim(u) {
                    pairing.set(r, i, col.get(r, k).clone());
                }
            }
            pairing.mul(x.phi.component(t))
        };
        maps.push(m);
    }
    Representation::new(tri.algebra.clone(), dims, maps)
        .expect("comma object induces a valid matrix module")
}

fn tri_connecting_coords<F: Field>(
    tri: &TriangularAlgebra<F>,
    arrow: usize,
) -> Option<(usize, usize, usize)> {
    for u in 0..tri.u_side.n_objects() {
        for t in 0..tri.t_side.n_objects() {
            for (k, &a) in tri.connecting[u][t].iter().enumerate() {
                if a == arrow {
                    return Some((u, t, k));
                }
            }
        }
    }
    None
}

/// Basis of the comma hom space, computed on the matrix category side and
/// read back as pairs.
pub fn comma_hom<F: Field>(
    g: &GFunctor<'_, F>,
    tri: &TriangularAlgebra<F>,
    x: &CommaObject<F>,
    y: &CommaObject<F>,
) -> Vec<CommaMorphism<F>> {
    let zx = comma_to_module(g, x, tri);
    let zy = comma_to_module(g, y, tri);
    let nt = tri.t_side.n_objects();
    let nu = tri.u_side.n_objects();
    hom_space(&zx, &zy)
        .into_iter()
        .map(|h| {
            let fcomps: Vec<Matrix<F>> = (0..nt).map(|t| h.component(tri.t_vertex(t)).clone()).collect();
            let gcomps: Vec<Matrix<F>> = (0..nu).map(|u| h.component(tri.u_vertex(u)).clone()).collect();
            CommaMorphism {
                f: ModuleMorphism::new_unchecked(x.d.clone(), y.d.clone(), fcomps),
                g: ModuleMorphism::new_unchecked(x.a.clone(), y.a.clone(), gcomps),
            }
        })
        .collect()
}

/// Everything produced by the induced-recollement construction.
pub struct InducedRecollement<F: Field> {
    pub lambda: TriangularAlgebra<F>,
    pub lambda_shriek: TriangularAlgebra<F>,
    pub lambda_star: TriangularAlgebra<F>,
    pub n_shriek: Bimodule<F>,
    pub n_star: Bimodule<F>,
}

pub struct CommaReport {
    pub report: RecollementReport,
    pub induced: InducedRecollement<crate::field::Rationals>,
}

/// Build the induced left and right recollements on the matrix categories
/// determined by a bimodule over (subcategory, T), and check LR1-LR3,
/// RR1-RR3, the monicity of the comparison transformation, its naturality,
/// and the compatibility identity, on a generated comma testset.
pub fn check_compatibility_and_induce(
    rec: &SixFunctorData<crate::field::Rationals>,
    m: Bimodule<crate::field::Rationals>,
) -> Result<CommaReport> {
    type F = crate::field::Rationals;
    let fld: F = crate::field::Rationals;
    if m.left_algebra().as_ref() != rec.b.algebra().as_ref() {
        return Err(Error::AlgebraMismatch(
            "bimodule left side must be the chosen subcategory".into(),
        ));
    }
    let t_alg = m.right_algebra().clone();
    let n_shriek = induce_bimodule(&JLowerShriek(rec), &m)?;
    let n_star = induce_bimodule(&JLowerStar(rec), &m)?;
    let lambda = triangular_matrix_algebra(t_alg.clone(), rec.b.algebra().clone(), m.clone())?;
    let lambda_shriek =
        triangular_matrix_algebra(t_alg.clone(), rec.ambient().clone(), n_shriek.clone())?;
    let lambda_star =
        triangular_matrix_algebra(t_alg.clone(), rec.ambient().clone(), n_star.clone())?;

    let g1 = GFunctor { bimodule: &m };
    let g2 = GFunctor { bimodule: &n_shriek };
    let g2s = GFunctor { bimodule: &n_star };

    let mut report = RecollementReport { checks: Vec::new() };

    // comma testset over the base side (modules over the subcategory)
    let b_alg = rec.b.algebra().clone();
    let mut a_objects: Vec<Representation<F>> = Vec::new();
    for v in 0..b_alg.n_objects() {
        a_objects.push(projective(&b_alg, v));
        a_objects.push(simple(&b_alg, v));
    }
    a_objects.truncate(3);
    let mut d_objects: Vec<Representation<F>> = Vec::new();
    for v in 0..t_alg.n_objects() {
        d_objects.push(simple(&t_alg, v));
        d_objects.push(projective(&t_alg, v));
    }
    d_objects.truncate(3);
    let mut base_testset: Vec<CommaObject<F>> = Vec::new();
    for a in &a_objects {
        base_testset.push(CommaObject::canonical(&g1, a));
        base_testset.push(CommaObject::from_a(&g1, a));
    }
    for d in &d_objects {
        base_testset.push(CommaObject::from_d(&g1, d, &b_alg));
    }
    // one object with a nontrivial structure map if available
    'outer: for d in &d_objects {
        for a in &a_objects {
            let val = g1.value(a);
            let basis = hom_space(d, &val.rep);
            if let Some(phi) = basis.into_iter().next() {
                if !phi.is_zero() {
                    base_testset.push(CommaObject { d: d.clone(), a: a.clone(), phi });
                    break 'outer;
                }
            }
        }
    }
    base_testset.truncate(8);

    // transformations between the hom functors on both sides
    let xi = |a: &Representation<F>| -> ModuleMorphism<F> {
        // G1(A) -> G2(j_! A), alpha -> j_!(alpha)
        let v1 = g1.value(a);
        let ja = rec.j_lower_shriek(a);
        let v2 = g2.value(&ja);
        let comps: Vec<Matrix<F>> = (0..t_alg.n_objects())
            .map(|t| {
                coords_matrix(
                    fld,
                    &v2.bases[t],
                    v1.bases[t].iter().map(|alpha| rec.j_lower_shriek_mor(alpha)),
                )
            })
            .collect();
        ModuleMorphism::new_unchecked(v1.rep.clone(), v2.rep.clone(), comps)
    };
    let rho = |l: &Representation<F>| -> ModuleMorphism<F> {
        // G2(L) -> G1(j^! L), beta -> j^!(beta) . unit
        let v2 = g2.value(l);
        let jl = rec.j_shriek(l);
        let v1 = g1.value(&jl);
        let comps: Vec<Matrix<F>> = (0..t_alg.n_objects())
            .map(|t| {
                let unit = rec.unit_j_lower(&m.column_module(t));
                coords_matrix(
                    fld,
                    &v1.bases[t],
                    v2.bases[t]
                        .iter()
                        .map(|beta| rec.j_shriek_mor(beta).compose(&unit)),
                )
            })
            .collect();
        ModuleMorphism::new_unchecked(v2.rep.clone(), v1.rep.clone(), comps)
    };
    // right-side transformations for (j^!, j_*)
    let xi_star = |l: &Representation<F>| -> ModuleMorphism<F> {
        // G2*(L) -> G1(j^! L), beta -> j^!(beta) . w with w the inverse of
        // the counit at the column
        let v2 = g2s.value(l);
        let jl = rec.j_shriek(l);
        let v1 = g1.value(&jl);
        let comps: Vec<Matrix<F>> = (0..t_alg.n_objects())
            .map(|t| {
                let counit = rec.counit_j_star(&m.column_module(t));
                let w_comps: Vec<Matrix<F>> = counit
                    .components()
                    .iter()
                    .map(|c| c.inverse().expect("counit at a column is invertible"))
                    .collect();
                let w = ModuleMorphism::new_unchecked(
                    counit.target().clone(),
                    counit.source().clone(),
                    w_comps,
                );
                coords_matrix(
                    fld,
                    &v1.bases[t],
                    v2.bases[t]
                        .iter()
                        .map(|beta| rec.j_shriek_mor(beta).compose(&w)),
                )
            })
            .collect();
        ModuleMorphism::new_unchecked(v2.rep.clone(), v1.rep.clone(), comps)
    };
    let rho_star = |a: &Representation<F>| -> ModuleMorphism<F> {
        // G1(A) -> G2*(j_* A), alpha -> j_*(alpha)
        let v1 = g1.value(a);
        let ja = rec.j_lower_star(a);
        let v2 = g2s.value(&ja);
        let comps: Vec<Matrix<F>> = (0..t_alg.n_objects())
            .map(|t| {
                coords_matrix(
                    fld,
                    &v2.bases[t],
                    v1.bases[t].iter().map(|alpha| rec.j_lower_star_mor(alpha)),
                )
            })
            .collect();
        ModuleMorphism::new_unchecked(v1.rep.clone(), v2.rep.clone(), comps)
    };

    // lifted functors on comma objects
    let lift_j_lower = |x: &CommaObject<F>| -> CommaObject<F> {
        let ja = rec.j_lower_shriek(&x.a);
        CommaObject {
            d: x.d.clone(),
            a: ja,
            phi: xi(&x.a).compose(&x.phi),
        }
    };
    let lift_j_shriek = |y: &CommaObject<F>| -> CommaObject<F> {
        let jl = rec.j_shriek(&y.a);
        CommaObject {
            d: y.d.clone(),
            a: jl,
            phi: rho(&y.a).compose(&y.phi),
        }
    };
    let lift_j_star = |x: &CommaObject<F>| -> CommaObject<F> {
        let ja = rec.j_lower_star(&x.a);
        CommaObject {
            d: x.d.clone(),
            a: ja,
            phi: rho_star(&x.a).compose(&x.phi),
        }
    };
    let lift_j_upper_star = |y: &CommaObject<F>| -> CommaObject<F> {
        let jl = rec.j_shriek(&y.a);
        CommaObject {
            d: y.d.clone(),
            a: jl,
            phi: xi_star(&y.a).compose(&y.phi),
        }
    };

    // rho must be a monomorphism at each middle-side test object
    let middle_testset: Vec<CommaObject<F>> =
        base_testset.iter().map(&lift_j_lower).collect();
    for (k, y) in middle_testset.iter().enumerate() {
        let r = rho(&y.a);
        report.checks.push(CheckOutcome {
            name: format!("rho mono at middle test {k}"),
            passed: r.is_mono(),
            counterexample: (!r.is_mono()).then(|| format!("object {k}")),
        });
    }
    // naturality of xi and rho on basis morphisms between test objects
    for (k, a) in a_objects.iter().enumerate() {
        for (k2, a2) in a_objects.iter().enumerate() {
            for (bi, eta) in hom_space(a, a2).into_iter().enumerate() {
                let v1a = g1.value(a);
                let v1a2 = g1.value(a2);
                let lhs = {
                    let jm = rec.j_lower_shriek_mor(&eta);
                    let v2 = g2.value(&rec.j_lower_shriek(a));
                    let v22 = g2.value(&rec.j_lower_shriek(a2));
                    g2.on_morphism(&jm, &v2, &v22).compose(&xi(a))
                };
                let rhs = xi(a2).compose(&g1.on_morphism(&eta, &v1a, &v1a2));
                let ok = lhs == rhs;
                report.checks.push(CheckOutcome {
                    name: format!("xi naturality at ({k},{k2}) basis {bi}"),
                    passed: ok,
                    counterexample: (!ok).then(|| format!("morphism {bi}")),
                });
            }
        }
    }
    // naturality of rho on basis morphisms between middle test objects
    for (k, l) in middle_testset.iter().take(3).enumerate() {
        for (k2, l2) in middle_testset.iter().take(3).enumerate() {
            for (bi, eta) in hom_space(&l.a, &l2.a).into_iter().enumerate().take(2) {
                let v2l = g2.value(&l.a);
                let v2l2 = g2.value(&l2.a);
                let jl = rec.j_shriek(&l.a);
                let jl2 = rec.j_shriek(&l2.a);
                let v1jl = g1.value(&jl);
                let v1jl2 = g1.value(&jl2);
                let jeta = rec.j_shriek_mor(&eta);
                let lhs = g1.on_morphism(&jeta, &v1jl, &v1jl2).compose(&rho(&l.a));
                let rhs = rho(&l2.a).compose(&g2.on_morphism(&eta, &v2l, &v2l2));
                let ok = lhs == rhs;
                report.checks.push(CheckOutcome {
                    name: format!("rho naturality at ({k},{k2}) basis {bi}"),
                    passed: ok,
                    counterexample: (!ok).then(|| format!("morphism {bi}")),
                });
            }
        }
    }
    // compatibility identity G1(adjunct(f)) = rho . G2(f) . xi on test
    // morphisms f : j_! A -> L
    for (k, a) in a_objects.iter().take(2).enumerate() {
        let ja = rec.j_lower_shriek(a);
        for (k2, l) in middle_testset.iter().take(2).enumerate() {
            for (bi, fmor) in hom_space(&ja, &l.a).into_iter().enumerate().take(2) {
                let adjunct = rec.j_shriek_mor(&fmor).compose(&rec.unit_j_lower(a));
                let v1a = g1.value(a);
                let v1jl = g1.value(&rec.j_shriek(&l.a));
                let lhs = g1.on_morphism(&adjunct, &v1a, &v1jl);
                let v2ja = g2.value(&ja);
                let v2l = g2.value(&l.a);
                let rhs = rho(&l.a)
                    .compose(&g2.on_morphism(&fmor, &v2ja, &v2l))
                    .compose(&xi(a));
                let ok = lhs == rhs;
                report.checks.push(CheckOutcome {
                    name: format!("compatibility identity at ({k},{k2}) basis {bi}"),
                    passed: ok,
                    counterexample: (!ok).then(|| format!("morphism {bi}")),
                });
            }
        }
    }

    // LR1: adjunction triangles for the lifted pair on the comma testsets
    for (k, x) in base_testset.iter().enumerate() {
        // unit: x -> lift_j_shriek(lift_j_lower(x)) given by (1, unit)
        let lifted = lift_j_lower(x);
        let back = lift_j_shriek(&lifted);
        let unit_ok = CommaMorphism::new(
            &g1,
            x,
            &back,
            ModuleMorphism::identity(&x.d),
            rec.unit_j_lower(&x.a),
        )
        .is_ok();
        report.checks.push(CheckOutcome {
            name: format!("LR1 lifted unit is a comma morphism at base test {k}"),
            passed: unit_ok,
            counterexample: (!unit_ok).then(|| format!("object {k}")),
        });
        // triangle L: counit at lifted . (lift of unit) = identity
        let tri_ok = {
            let counit_g = rec.counit_j_lower(&lifted.a);
            let unit_lift_g = rec.j_lower_shriek_mor(&rec.unit_j_lower(&x.a));
            counit_g.compose(&unit_lift_g) == ModuleMorphism::identity(&lifted.a)
        };
        report.checks.push(CheckOutcome {
            name: format!("LR1 (j~_!, j~^!) triangle L at base test {k}"),
            passed: tri_ok,
            counterexample: (!tri_ok).then(|| format!("object {k}")),
        });
    }
    for (k, y) in middle_testset.iter().enumerate() {
        let restricted = lift_j_shriek(y);
        let counit_ok = CommaMorphism::new(
            &g2,
            &lift_j_lower(&restricted),
            y,
            ModuleMorphism::identity(&y.d),
            rec.counit_j_lower(&y.a),
        )
        .is_ok();
        report.checks.push(CheckOutcome {
            name: format!("LR1 lifted counit is a comma morphism at middle test {k}"),
            passed: counit_ok,
            counterexample: (!counit_ok).then(|| format!("object {k}")),
        });
        let tri_ok = {
            let eps_r = rec.j_shriek_mor(&rec.counit_j_lower(&y.a));
            let eta_r = rec.unit_j_lower(&restricted.a);
            eps_r.compose(&eta_r) == ModuleMorphism::identity(&restricted.a)
        };
        report.checks.push(CheckOutcome {
            name: format!("LR1 (j~_!, j~^!) triangle R at middle test {k}"),
            passed: tri_ok,
            counterexample: (!tri_ok).then(|| format!("object {k}")),
        });
    }
    // LR1 for the lifted (i~^*, i~_*): reduced to the base adjunction plus
    // the canonical middle structure
    let q_testset: Vec<Representation<F>> = middle_testset
        .iter()
        .map(|y| rec.i_upper_star(&y.a).0)
        .collect();
    for (k, f_rep) in q_testset.iter().enumerate() {
        let istar = rec.i_star(f_rep);
        let v2 = g2.value(&istar);
        // lifted i_* object: (G2(i_* F), id, i_* F)
        let lifted = CommaObject {
            d: v2.rep.clone(),
            a: istar.clone(),
            phi: ModuleMorphism::identity(&v2.rep),
        };
        // i~^* of it must return F up to the canonical counit iso
        let back = rec.i_upper_star(&lifted.a).0;
        let counit = rec.counit_i_upper(f_rep);
        let ok = counit.is_iso() && back.dims() == counit.source().dims();
        report.checks.push(CheckOutcome {
            name: format!("LR1 (i~^*, i~_*) counit iso at quotient test {k}"),
            passed: ok,
            counterexample: (!ok).then(|| format!("object {k}")),
        });
        // LR2: j~^! i~_* = 0
        let zero_obj = lift_j_shriek(&lifted);
        let z_ok = zero_obj.a.is_zero() && {
            // the d part must also collapse: G2(i_* F) has zero value
            v2.rep.is_zero()
        };
        report.checks.push(CheckOutcome {
            name: format!("LR2 j~^! i~_* = 0 at quotient test {k}"),
            passed: z_ok,
            counterexample: (!z_ok).then(|| format!("object {k}")),
        });
    }
    // LR3: full embedding of the lifted j~_! on comma pairs
    for (k1, x1) in base_testset.iter().enumerate().take(4) {
        for (k2, x2) in base_testset.iter().enumerate().take(4) {
            let basis = comma_hom(&g1, &lambda, x1, x2);
            let y1 = lift_j_lower(x1);
            let y2 = lift_j_lower(x2);
            let target = comma_hom(&g2, &lambda_shriek, &y1, &y2);
            let images: Vec<Vec<_>> = basis
                .iter()
                .map(|cm| {
                    let lifted = CommaMorphism {
                        f: cm.f.clone(),
                        g: rec.j_lower_shriek_mor(&cm.g),
                    };
                    let mut v = flatten_components(&lifted.f);
                    v.extend(flatten_components(&lifted.g));
                    v
                })
                .collect();
            let rows = images.first().map(|v| v.len()).unwrap_or(0);
            let mut mat = Matrix::zero(fld, rows, images.len());
            for (j, col) in images.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    mat.set(i, j, v.clone());
                }
            }
            let ok = mat.rank() == basis.len() && basis.len() == target.len();
            report.checks.push(CheckOutcome {
                name: format!("LR3 j~_! hom bijectivity at ({k1},{k2})"),
                passed: ok,
                counterexample: (!ok).then(|| {
                    format!("dims {} -> rank {} vs {}", basis.len(), mat.rank(), target.len())
                }),
            });
        }
    }

    // RR1: triangles for (j~^*, j~_*) on the star side
    let star_testset: Vec<CommaObject<F>> = base_testset.iter().map(&lift_j_star).collect();
    for (k, x) in base_testset.iter().enumerate() {
        let lifted = lift_j_star(x);
        let back = lift_j_upper_star(&lifted);
        // counit of (j^!, j_*) on the base side: j^! j_* A -> A
        let eps = rec.counit_j_star(&x.a);
        let ok = CommaMorphism::new(&g1, &back, x, ModuleMorphism::identity(&x.d), eps.clone())
            .is_ok()
            && {
                let eta_l = rec.unit_j_star(&lifted.a);
                let eps_l = rec.j_lower_star_mor(&eps);
                eps_l.compose(&eta_l) == ModuleMorphism::identity(&lifted.a)
            };
        report.checks.push(CheckOutcome {
            name: format!("RR1 (j~^*, j~_*) triangle at base test {k}"),
            passed: ok,
            counterexample: (!ok).then(|| format!("object {k}")),
        });
    }
    for (k, y) in star_testset.iter().enumerate() {
        let restricted = lift_j_upper_star(y);
        // triangle: j~^*(unit) then counit = identity on restriction
        let ok = {
            let unit = rec.unit_j_star(&y.a);
            let eps = rec.counit_j_star(&restricted.a);
            eps.compose(&rec.j_shriek_mor(&unit)) == ModuleMorphism::identity(&restricted.a)
        };
        report.checks.push(CheckOutcome {
            name: format!("RR1 (j~^*, j~_*) triangle at star test {k}"),
            passed: ok,
            counterexample: (!ok).then(|| format!("object {k}")),
        });
    }
    // RR2: j~^* i~_! = 0: the embedding puts zero in the d part
    for (k, f_rep) in q_testset.iter().enumerate() {
        let istar = rec.i_star(f_rep);
        let zero_d = Representation::zero(t_alg.clone());
        let v2 = g2s.value(&istar);
        let lifted = CommaObject {
            d: zero_d.clone(),
            a: istar.clone(),
            phi: ModuleMorphism::zero(&zero_d, &v2.rep),
        };
        let back = lift_j_upper_star(&lifted);
        let ok = back.d.is_zero() && back.a.is_zero();
        report.checks.push(CheckOutcome {
            name: format!("RR2 j~^* i~_! = 0 at quotient test {k}"),
            passed: ok,
            counterexample: (!ok).then(|| format!("object {k}")),
        });
    }
    // RR3: full embedding of j~_* on comma pairs
    for (k1, x1) in base_testset.iter().enumerate().take(4) {
        for (k2, x2) in base_testset.iter().enumerate().take(4) {
            let basis = comma_hom(&g1, &lambda, x1, x2);
            let y1 = lift_j_star(x1);
            let y2 = lift_j_star(x2);
            let target = comma_hom(&g2s, &lambda_star, &y1, &y2);
            let images: Vec<Vec<_>> = basis
                .iter()
                .map(|cm| {
                    let lifted = CommaMorphism {
                        f: cm.f.clone(),
                        g: rec.j_lower_star_mor(&cm.g),
                    };
                    let mut v = flatten_components(&lifted.f);
                    v.extend(flatten_components(&lifted.g));
                    v
                })
                .collect();
            let rows = images.first().map(|v| v.len()).unwrap_or(0);
            let mut mat = Matrix::zero(fld, rows, images.len());
            for (j, col) in images.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    mat.set(i, j, v.clone());
                }
            }
            let ok = mat.rank() == basis.len() && basis.len() == target.len();
            report.checks.push(CheckOutcome {
                name: format!("RR3 j~_* hom bijectivity at ({k1},{k2})"),
                passed: ok,
                counterexample: (!ok).then(|| {
                    format!("dims {} -> rank {} vs {}", basis.len(), mat.rank(), target.len())
                }),
            });
        }
    }

    Ok(CommaReport {
        report,
        induced: InducedRecollement {
            lambda,
            lambda_shriek,
            lambda_star,
            n_shriek,
            n_star,
        },
    })
}

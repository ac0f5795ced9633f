//! The category of maps between modules: objects are morphisms f : A1 -> A0,
//! morphisms are commuting squares. Equivalent to modules over the doubled
//! triangular matrix algebra; both sides are implemented and checked against
//! each other.

mod ar;
mod phi;
mod proj;
mod tr;

pub use ar::{
    ar_sequence_from_module, construct_almost_split_sequence, enumerate_maps_indecomposables,
    maps_find_isomorphism, maps_is_indecomposable, verify_almost_split, ArVariant,
    MapsAlmostSplitReport,
};
pub use phi::{
    end_algebra_presentation, phi_on_morphism, phi_on_ses, phi_transfer, splits_neither_way,
    EndAlgebra, PhiImage,
};
pub use proj::{
    maps_injectives, maps_minimal_presentation, maps_projective_cover, maps_projectives,
    maps_radical_dim_formula, maps_radical_dim_units, maps_radical_object, MapsCover,
    MapsPresentation, MapsProjMorphism, MapsProjSum,
};
pub use tr::{maps_tau, maps_transpose, MapsTransposeData, TauClosedForm, TauData};

use std::sync::Arc;

use crate::bimodule::DoubledAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{algebras_match, ModuleMorphism, Representation};
use crate::quiver::PathAlgebra;

/// An object of the maps category: a morphism of representations.
#[derive(Clone, PartialEq)]
pub struct MapsObject<F: Field> {
    f: ModuleMorphism<F>,
}

impl<F: Field> std::fmt::Debug for MapsObject<F> {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fmt,
            "MapsObject({:?} -> {:?})",
            self.a1().dims(),
            self.a0().dims()
        )
    }
}

impl<F: Field> MapsObject<F> {
    pub fn new(f: ModuleMorphism<F>) -> Self {
        MapsObject { f }
    }

    /// The object (A, 1, A).
    pub fn diagonal(a: &Representation<F>) -> Self {
        MapsObject { f: ModuleMorphism::identity(a) }
    }

    /// The object (A, 0, 0).
    pub fn domain_only(a: &Representation<F>) -> Self {
        let zero = Representation::zero(a.algebra().clone());
        MapsObject { f: ModuleMorphism::zero(a, &zero) }
    }

    /// The object (0, 0, B).
    pub fn codomain_only(b: &Representation<F>) -> Self {
        let zero = Representation::zero(b.algebra().clone());
        MapsObject { f: ModuleMorphism::zero(&zero, b) }
    }

    pub fn zero(algebra: Arc<PathAlgebra<F>>) -> Self {
        let z = Representation::zero(algebra);
        MapsObject { f: ModuleMorphism::zero(&z, &z) }
    }

    pub fn a1(&self) -> &Representation<F> {
        self.f.source()
    }

    pub fn a0(&self) -> &Representation<F> {
        self.f.target()
    }

    pub fn map(&self) -> &ModuleMorphism<F> {
        &self.f
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra<F>> {
        self.f.source().algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.a1().is_zero() && self.a0().is_zero()
    }

    pub fn total_dim(&self) -> usize {
        self.a1().total_dim() + self.a0().total_dim()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let a1 = self.a1().direct_sum(other.a1());
        let a0 = self.a0().direct_sum(other.a0());
        let comps = self
            .f
            .components()
            .iter()
            .zip(other.f.components().iter())
            .map(|(x, y)| x.direct_sum(y))
            .collect();
        MapsObject { f: ModuleMorphism::new_unchecked(a1, a0, comps) }
    }
}

/// A morphism in the maps category: a pair of module morphisms making the
/// defining square commute.
#[derive(Clone, PartialEq)]
pub struct MapsMorphism<F: Field> {
    source: MapsObject<F>,
    target: MapsObject<F>,
    h1: ModuleMorphism<F>,
    h0: ModuleMorphism<F>,
}

impl<F: Field> std::fmt::Debug for MapsMorphism<F> {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fmt, "MapsMorphism({:?} => {:?})", self.source, self.target)
    }
}

impl<F: Field> MapsMorphism<F> {
    pub fn new(
        source: MapsObject<F>,
        target: MapsObject<F>,
        h1: ModuleMorphism<F>,
        h0: ModuleMorphism<F>,
    ) -> Result<Self> {
        if h1.source() != source.a1()
            || h1.target() != target.a1()
            || h0.source() != source.a0()
            || h0.target() != target.a0()
        {
            return Err(Error::DimensionMismatch("maps morphism endpoints".into()));
        }
        let lhs = h0.compose(source.map());
        let rhs = target.map().compose(&h1);
        if lhs != rhs {
            return Err(Error::InconsistentActions(
                "maps morphism square does not commute".into(),
            ));
        }
        Ok(MapsMorphism { source, target, h1, h0 })
    }

    pub(crate) fn new_unchecked(
        source: MapsObject<F>,
        target: MapsObject<F>,
        h1: ModuleMorphism<F>,
        h0: ModuleMorphism<F>,
    ) -> Self {
        debug_assert!(MapsMorphism::new(source.clone(), target.clone(), h1.clone(), h0.clone()).is_ok());
        MapsMorphism { source, target, h1, h0 }
    }

    pub fn identity(x: &MapsObject<F>) -> Self {
        MapsMorphism {
            source: x.clone(),
            target: x.clone(),
            h1: ModuleMorphism::identity(x.a1()),
            h0: ModuleMorphism::identity(x.a0()),
        }
    }

    pub fn zero(source: &MapsObject<F>, target: &MapsObject<F>) -> Self {
        MapsMorphism {
            h1: ModuleMorphism::zero(source.a1(), target.a1()),
            h0: ModuleMorphism::zero(source.a0(), target.a0()),
            source: source.clone(),
            target: target.clone(),
        }
    }

    pub fn source(&self) -> &MapsObject<F> {
        &self.source
    }
    pub fn target(&self) -> &MapsObject<F> {
        &self.target
    }
    pub fn h1(&self) -> &ModuleMorphism<F> {
        &self.h1
    }
    pub fn h0(&self) -> &ModuleMorphism<F> {
        &self.h0
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert!(other.target == self.source, "middle object mismatch");
        MapsMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            h1: self.h1.compose(&other.h1),
            h0: self.h0.compose(&other.h0),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        MapsMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            h1: self.h1.add(&other.h1),
            h0: self.h0.add(&other.h0),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        MapsMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            h1: self.h1.scale(c),
            h0: self.h0.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.h1.is_zero() && self.h0.is_zero()
    }

    pub fn is_mono(&self) -> bool {
        self.h1.is_mono() && self.h0.is_mono()
    }

    pub fn is_epi(&self) -> bool {
        self.h1.is_epi() && self.h0.is_epi()
    }

    pub fn is_iso(&self) -> bool {
        self.h1.is_iso() && self.h0.is_iso()
    }

    /// Componentwise kernel with the induced map between the kernels.
    pub fn kernel(&self) -> (MapsObject<F>, MapsMorphism<F>) {
        let (k1, incl1) = self.h1.kernel();
        let (k0, incl0) = self.h0.kernel();
        // induced map g : K1 -> K0 restricting f
        let rhs = self.source.map().compose(&incl1);
        let comps: Vec<Matrix<F>> = (0..k1.algebra().n_objects())
            .map(|v| {
                incl0
                    .component(v)
                    .solve(rhs.component(v))
                    .expect("shapes agree")
                    .expect("f restricts to kernels")
            })
            .collect();
        let g = ModuleMorphism::new_unchecked(k1.clone(), k0.clone(), comps);
        let ker = MapsObject::new(g);
        let incl = MapsMorphism::new_unchecked(ker.clone(), self.source.clone(), incl1, incl0);
        (ker, incl)
    }

    /// Componentwise cokernel with the induced map.
    pub fn cokernel(&self) -> (MapsObject<F>, MapsMorphism<F>) {
        let (c1, proj1) = self.h1.cokernel();
        let (c0, proj0) = self.h0.cokernel();
        let rhs = proj0.compose(self.target.map());
        let comps: Vec<Matrix<F>> = (0..c1.algebra().n_objects())
            .map(|v| {
                let lhs_t = proj1.component(v).transpose();
                let rhs_t = rhs.component(v).transpose();
                lhs_t
                    .solve(&rhs_t)
                    .expect("shapes agree")
                    .expect("map descends to cokernels")
                    .transpose()
            })
            .collect();
        let g = ModuleMorphism::new_unchecked(c1.clone(), c0.clone(), comps);
        let coker = MapsObject::new(g);
        let proj = MapsMorphism::new_unchecked(self.target.clone(), coker.clone(), proj1, proj0);
        (coker, proj)
    }

    /// A section through this morphism, when it is a split epi.
    pub fn find_section(&self) -> Option<MapsMorphism<F>> {
        factor_through(&MapsMorphism::identity(&self.target), self)
    }

    /// A retraction, when it is a split mono.
    pub fn find_retraction(&self) -> Option<MapsMorphism<F>> {
        factor_after(&MapsMorphism::identity(&self.source), self)
    }
}

/// Deterministic basis of Hom between two maps objects: the solution space
/// of the combined commuting-square system.
pub fn maps_hom<F: Field>(x: &MapsObject<F>, y: &MapsObject<F>) -> Vec<MapsMorphism<F>> {
    assert!(algebras_match(x.algebra(), y.algebra()));
    let f = x.algebra().field();
    let alg = x.algebra();
    let n = alg.n_objects();
    // unknowns: h1 components then h0 components, vertex-major, row-major
    let mut offsets1 = Vec::with_capacity(n + 1);
    let mut acc = 0usize;
    for v in 0..n {
        offsets1.push(acc);
        acc += y.a1().dim(v) * x.a1().dim(v);
    }
    let h1_total = acc;
    let mut offsets0 = Vec::with_capacity(n + 1);
    for v in 0..n {
        offsets0.push(acc);
        acc += y.a0().dim(v) * x.a0().dim(v);
    }
    let total = acc;

    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let mut push_arrow_constraints = |xr: &Representation<F>,
                                      yr: &Representation<F>,
                                      offsets: &[usize]| {
        for (a, arr) in alg.quiver().arrows.iter().enumerate() {
            let (s, t) = (arr.source, arr.target);
            let xa = xr.arrow_map(a);
            let ya = yr.arrow_map(a);
            for r in 0..yr.dim(t) {
                for c in 0..xr.dim(s) {
                    let mut row = vec![f.zero(); total];
                    for k in 0..xr.dim(t) {
                        let idx = offsets[t] + r * xr.dim(t) + k;
                        row[idx] = f.add(&row[idx], xa.get(k, c));
                    }
                    for k in 0..yr.dim(s) {
                        let idx = offsets[s] + k * xr.dim(s) + c;
                        row[idx] = f.sub(&row[idx], ya.get(r, k));
                    }
                    if row.iter().any(|v| !f.is_zero(v)) {
                        rows.push(row);
                    }
                }
            }
        }
    };
    push_arrow_constraints(x.a1(), y.a1(), &offsets1);
    push_arrow_constraints(x.a0(), y.a0(), &offsets0);
    // square condition: h0 . f = g . h1 at every vertex
    for v in 0..n {
        let fx = x.map().component(v);
        let gy = y.map().component(v);
        for r in 0..y.a0().dim(v) {
            for c in 0..x.a1().dim(v) {
                let mut row = vec![f.zero(); total];
                for k in 0..x.a0().dim(v) {
                    let idx = offsets0[v] + r * x.a0().dim(v) + k;
                    row[idx] = f.add(&row[idx], fx.get(k, c));
                }
                for k in 0..y.a1().dim(v) {
                    let idx = offsets1[v] + k * x.a1().dim(v) + c;
                    row[idx] = f.sub(&row[idx], gy.get(r, k));
                }
                if row.iter().any(|e| !f.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zero(f, 0, total)
    } else {
        Matrix::from_rows(f, rows)
    };
    let kernel = sys.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let mut comps1 = Vec::with_capacity(n);
        let mut comps0 = Vec::with_capacity(n);
        for v in 0..n {
            let mut m1 = Matrix::zero(f, y.a1().dim(v), x.a1().dim(v));
            for r in 0..y.a1().dim(v) {
                for c in 0..x.a1().dim(v) {
                    m1.set(r, c, kernel.get(offsets1[v] + r * x.a1().dim(v) + c, j).clone());
                }
            }
            comps1.push(m1);
            let mut m0 = Matrix::zero(f, y.a0().dim(v), x.a0().dim(v));
            for r in 0..y.a0().dim(v) {
                for c in 0..x.a0().dim(v) {
                    m0.set(r, c, kernel.get(offsets0[v] + r * x.a0().dim(v) + c, j).clone());
                }
            }
            comps0.push(m0);
        }
        let h1 = ModuleMorphism::new_unchecked(x.a1().clone(), y.a1().clone(), comps1);
        let h0 = ModuleMorphism::new_unchecked(x.a0().clone(), y.a0().clone(), comps0);
        out.push(MapsMorphism { source: x.clone(), target: y.clone(), h1, h0 });
    }
    let _ = h1_total;
    out
}

pub fn maps_hom_dim<F: Field>(x: &MapsObject<F>, y: &MapsObject<F>) -> usize {
    maps_hom(x, y).len()
}

/// Solve t = p . u for u (first solution in echelon order).
pub fn factor_through<F: Field>(
    t: &MapsMorphism<F>,
    p: &MapsMorphism<F>,
) -> Option<MapsMorphism<F>> {
    assert!(t.target == p.target);
    solve_in_hom_basis(&t.source, &p.source, |u| p.compose(u), t)
}

/// Solve t = u . j for u.
pub fn factor_after<F: Field>(t: &MapsMorphism<F>, j: &MapsMorphism<F>) -> Option<MapsMorphism<F>> {
    assert!(t.source == j.source);
    solve_in_hom_basis(&j.target, &t.target, |u| u.compose(j), t)
}

fn solve_in_hom_basis<F: Field>(
    usrc: &MapsObject<F>,
    utgt: &MapsObject<F>,
    composite: impl Fn(&MapsMorphism<F>) -> MapsMorphism<F>,
    t: &MapsMorphism<F>,
) -> Option<MapsMorphism<F>> {
    let f = usrc.algebra().field();
    let basis = maps_hom(usrc, utgt);
    let rhs = flatten_maps_morphism(t);
    let mut sys = Matrix::zero(f, rhs.len(), basis.len());
    for (j, h) in basis.iter().enumerate() {
        let col = flatten_maps_morphism(&composite(h));
        for (i, v) in col.iter().enumerate() {
            sys.set(i, j, v.clone());
        }
    }
    let sol = sys.solve(&Matrix::column(f, rhs)).expect("shapes agree")?;
    let mut u = MapsMorphism::zero(usrc, utgt);
    for (j, h) in basis.iter().enumerate() {
        let c = sol.get(j, 0);
        if !f.is_zero(c) {
            u = u.add(&h.scale(c));
        }
    }
    Some(u)
}

pub(crate) fn flatten_maps_morphism<F: Field>(h: &MapsMorphism<F>) -> Vec<F::Elem> {
    let mut out = crate::module::flatten_components(&h.h1);
    out.extend(crate::module::flatten_components(&h.h0));
    out
}

/// A componentwise short exact sequence of maps objects.
#[derive(Clone, Debug)]
pub struct MapsSES<F: Field> {
    pub j: MapsMorphism<F>,
    pub p: MapsMorphism<F>,
}

impl<F: Field> MapsSES<F> {
    pub fn new(j: MapsMorphism<F>, p: MapsMorphism<F>) -> Result<Self> {
        if j.target != p.source {
            return Err(Error::DimensionMismatch("sequence middle object".into()));
        }
        let s = MapsSES { j, p };
        if !s.is_exact() {
            return Err(Error::InconsistentActions("maps sequence is not exact".into()));
        }
        Ok(s)
    }

    pub fn is_exact(&self) -> bool {
        if !self.j.is_mono() || !self.p.is_epi() {
            return false;
        }
        if !self.p.compose(&self.j).is_zero() {
            return false;
        }
        let n = self.j.source.algebra().n_objects();
        (0..n).all(|v| {
            self.j.h1.component(v).rank() == self.p.h1.component(v).kernel_basis().cols()
                && self.j.h0.component(v).rank() == self.p.h0.component(v).kernel_basis().cols()
        })
    }
}

/// Transport a maps object to a module over the doubled algebra.
pub fn to_matrix_module<F: Field>(
    x: &MapsObject<F>,
    d: &DoubledAlgebra<F>,
) -> Representation<F> {
    let c = d.base();
    assert!(algebras_match(x.algebra(), c));
    let f = c.field();
    let n = c.n_objects();
    let lambda = d.algebra();
    let mut dims = vec![0usize; lambda.n_objects()];
    for v in 0..n {
        dims[d.phi1(v)] = x.a1().dim(v);
        dims[d.phi2(v)] = x.a0().dim(v);
    }
    let mut maps: Vec<Matrix<F>> = Vec::with_capacity(lambda.quiver().arrows.len());
    for (idx, arr) in lambda.quiver().arrows.iter().enumerate() {
        let m = if idx < c.quiver().arrows.len() {
            // first copy
            x.a1().arrow_map(idx).clone()
        } else if idx < 2 * c.quiver().arrows.len() {
            x.a0().arrow_map(idx - c.quiver().arrows.len()).clone()
        } else {
            // connecting arrow for a basis class m of Hom_C(t, u): acts as
            // A0(m) . f_t
            let (u, t, k) = connecting_coords(d, idx).expect("connecting arrow");
            let mut unit = vec![f.zero(); c.hom_dim(t, u)];
            unit[k] = f.one();
            x.a0().class_action(t, u, &unit).mul(x.map().component(t))
        };
        let _ = arr;
        maps.push(m);
    }
    Representation::new(lambda.clone(), dims, maps).expect("maps object induces a valid module")
}

fn connecting_coords<F: Field>(d: &DoubledAlgebra<F>, arrow: usize) -> Option<(usize, usize, usize)> {
    let c = d.base();
    for u in 0..c.n_objects() {
        for t in 0..c.n_objects() {
            for (k, &a) in d.tri.connecting[u][t].iter().enumerate() {
                if a == arrow {
                    return Some((u, t, k));
                }
            }
        }
    }
    None
}

/// Read a maps object back off a module over the doubled algebra.
pub fn from_matrix_module<F: Field>(
    z: &Representation<F>,
    d: &DoubledAlgebra<F>,
) -> MapsObject<F> {
    let c = d.base();
    let n = c.n_objects();
    let n_arrows = c.quiver().arrows.len();
    let dims1: Vec<usize> = (0..n).map(|v| z.dim(d.phi1(v))).collect();
    let dims0: Vec<usize> = (0..n).map(|v| z.dim(d.phi2(v))).collect();
    let maps1: Vec<Matrix<F>> = (0..n_arrows).map(|a| z.arrow_map(a).clone()).collect();
    let maps0: Vec<Matrix<F>> = (0..n_arrows)
        .map(|a| z.arrow_map(n_arrows + a).clone())
        .collect();
    let a1 = Representation::new(c.clone(), dims1, maps1).expect("first copy restricts");
    let a0 = Representation::new(c.clone(), dims0, maps0).expect("second copy restricts");
    let comps: Vec<Matrix<F>> = (0..n)
        .map(|v| z.arrow_map(d.identity_connecting[v]).clone())
        .collect();
    MapsObject::new(ModuleMorphism::new(a1, a0, comps).expect("connecting components commute"))
}

#[cfg(test)]
mod tests;

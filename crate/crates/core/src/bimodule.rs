//! Bimodules over a pair of path algebras and the triangular matrix
//! categories they generate.
//!
//! A bimodule M over (U, T) assigns a space M(u, t) to every vertex pair
//! with a left action by U-arrows and a right action by T-arrows; the two
//! actions commute and respect the relations on both sides. The triangular
//! matrix category [[T, 0], [M, U]] is materialized as a quiver with
//! relations: one connecting arrow per chosen basis element of each M(u, t),
//! with relations rewriting composites of connecting arrows with T- and
//! U-arrows back into connecting arrows.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::{PathAlgebra, Quiver, Relation, RelationSet, DEFAULT_DIM_CAP};

#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    left_algebra: Arc<PathAlgebra<F>>,
    right_algebra: Arc<PathAlgebra<F>>,
    /// dims[u][t] = dim M(u, t)
    dims: Vec<Vec<usize>>,
    /// left_actions[b][t] : M(u, t) -> M(u', t) for the U-arrow b : u -> u'
    left_actions: Vec<Vec<Matrix<F>>>,
    /// right_actions[a][u] : M(u, t) -> M(u, t') for the T-arrow a : t' -> t
    right_actions: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        left_algebra: Arc<PathAlgebra<F>>,
        right_algebra: Arc<PathAlgebra<F>>,
        dims: Vec<Vec<usize>>,
        left_actions: Vec<Vec<Matrix<F>>>,
        right_actions: Vec<Vec<Matrix<F>>>,
    ) -> Result<Self> {
        let m = Bimodule { left_algebra, right_algebra, dims, left_actions, right_actions };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(left_algebra: Arc<PathAlgebra<F>>, right_algebra: Arc<PathAlgebra<F>>) -> Self {
        let f = left_algebra.field();
        let nu = left_algebra.n_objects();
        let nt = right_algebra.n_objects();
        Bimodule {
            dims: vec![vec![0; nt]; nu],
            left_actions: left_algebra
                .quiver()
                .arrows
                .iter()
                .map(|_| (0..nt).map(|_| Matrix::zero(f, 0, 0)).collect())
                .collect(),
            right_actions: right_algebra
                .quiver()
                .arrows
                .iter()
                .map(|_| (0..nu).map(|_| Matrix::zero(f, 0, 0)).collect())
                .collect(),
            left_algebra,
            right_algebra,
        }
    }

    pub fn left_algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.left_algebra
    }
    pub fn right_algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.right_algebra
    }

    pub fn dim(&self, u: usize, t: usize) -> usize {
        self.dims[u][t]
    }

    pub fn left_action_of_arrow(&self, b: usize, t: usize) -> &Matrix<F> {
        &self.left_actions[b][t]
    }

    pub fn right_action_of_arrow(&self, a: usize, u: usize) -> &Matrix<F> {
        &self.right_actions[a][u]
    }

    /// Action M(u, t) -> M(u', t) of a class in Hom_U(u, u').
    pub fn left_action(&self, u: usize, u2: usize, t: usize, coords: &[F::Elem]) -> Matrix<F> {
        let f = self.left_algebra.field();
        let mut out = Matrix::zero(f, self.dims[u2][t], self.dims[u][t]);
        for (k, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let path = self.left_algebra.basis_path(u, u2, k).to_vec();
            let mut m = Matrix::identity(f, self.dims[u][t]);
            let mut cur = u;
            for &b in &path {
                m = self.left_actions[b][t].mul(&m);
                cur = self.left_algebra.quiver().arrows[b].target;
            }
            debug_assert_eq!(cur, u2);
            out = out.add(&m.scale(c));
        }
        out
    }

    /// Action M(u, t) -> M(u, t') of a class in Hom_T(t', t).
    pub fn right_action(&self, t2: usize, t: usize, u: usize, coords: &[F::Elem]) -> Matrix<F> {
        let f = self.right_algebra.field();
        let mut out = Matrix::zero(f, self.dims[u][t2], self.dims[u][t]);
        for (k, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            // a path t2 -> t acts contravariantly: traverse in reverse
            let path = self.right_algebra.basis_path(t2, t, k).to_vec();
            let mut m = Matrix::identity(f, self.dims[u][t]);
            for &a in path.iter().rev() {
                m = self.right_actions[a][u].mul(&m);
            }
            out = out.add(&m.scale(c));
        }
        out
    }

    /// The column functor at a fixed right-side object: a module over the
    /// left algebra.
    pub fn column_module(&self, t: usize) -> crate::module::Representation<F> {
        let nu = self.left_algebra.n_objects();
        let dims: Vec<usize> = (0..nu).map(|u| self.dims[u][t]).collect();
        let maps: Vec<Matrix<F>> = (0..self.left_algebra.quiver().arrows.len())
            .map(|b| self.left_actions[b][t].clone())
            .collect();
        crate::module::Representation::new(self.left_algebra.clone(), dims, maps)
            .expect("bimodule column is a valid module")
    }

    /// The morphism between column modules induced by a right-side arrow
    /// a : t' -> t, running M_t -> M_{t'}.
    pub fn column_morphism(&self, a: usize) -> crate::module::ModuleMorphism<F> {
        let arr = &self.right_algebra.quiver().arrows[a];
        let src = self.column_module(arr.target);
        let tgt = self.column_module(arr.source);
        let comps: Vec<Matrix<F>> = (0..self.left_algebra.n_objects())
            .map(|u| self.right_actions[a][u].clone())
            .collect();
        crate::module::ModuleMorphism::new(src, tgt, comps)
            .expect("right action commutes with the left actions")
    }

    fn validate(&self) -> Result<()> {
        let f = self.left_algebra.field();
        let ua = &self.left_algebra;
        let ta = &self.right_algebra;
        let nu = ua.n_objects();
        let nt = ta.n_objects();
        if self.dims.len() != nu || self.dims.iter().any(|row| row.len() != nt) {
            return Err(Error::DimensionMismatch("bimodule dims table".into()));
        }
        for (b, arr) in ua.quiver().arrows.iter().enumerate() {
            for t in 0..nt {
                let m = &self.left_actions[b][t];
                if m.rows() != self.dims[arr.target][t] || m.cols() != self.dims[arr.source][t] {
                    return Err(Error::DimensionMismatch(format!(
                        "left action of arrow {} at t={t}",
                        arr.name
                    )));
                }
            }
        }
        for (a, arr) in ta.quiver().arrows.iter().enumerate() {
            for u in 0..nu {
                let m = &self.right_actions[a][u];
                if m.rows() != self.dims[u][arr.source] || m.cols() != self.dims[u][arr.target] {
                    return Err(Error::DimensionMismatch(format!(
                        "right action of arrow {} at u={u}",
                        arr.name
                    )));
                }
            }
        }
        // U-relations act as zero on every column M(-, t)
        for rel in &ua.relations().relations {
            for t in 0..nt {
                let (src, tgt) = relation_endpoints(ua, rel);
                let mut sum = Matrix::zero(f, self.dims[tgt][t], self.dims[src][t]);
                for (c, path) in &rel.terms {
                    let mut m = Matrix::identity(f, self.dims[src][t]);
                    for &b in path {
                        m = self.left_actions[b][t].mul(&m);
                    }
                    sum = sum.add(&m.scale(c));
                }
                if !sum.is_zero() {
                    return Err(Error::InconsistentActions(
                        "left-side relation acts nonzero".into(),
                    ));
                }
            }
        }
        // T-relations act as zero on every row M(u, -), contravariantly
        for rel in &ta.relations().relations {
            for u in 0..nu {
                let (src, tgt) = relation_endpoints(ta, rel);
                let mut sum = Matrix::zero(f, self.dims[u][src], self.dims[u][tgt]);
                for (c, path) in &rel.terms {
                    let mut m = Matrix::identity(f, self.dims[u][tgt]);
                    for &a in path.iter().rev() {
                        m = self.right_actions[a][u].mul(&m);
                    }
                    sum = sum.add(&m.scale(c));
                }
                if !sum.is_zero() {
                    return Err(Error::InconsistentActions(
                        "right-side relation acts nonzero".into(),
                    ));
                }
            }
        }
        // the two actions commute
        for (b, barr) in ua.quiver().arrows.iter().enumerate() {
            for (a, aarr) in ta.quiver().arrows.iter().enumerate() {
                let (u, u2) = (barr.source, barr.target);
                let (t2, t) = (aarr.source, aarr.target);
                let lhs = self.right_actions[a][u2].mul(&self.left_actions[b][t]);
                let rhs = self.left_actions[b][t2].mul(&self.right_actions[a][u]);
                if lhs != rhs {
                    return Err(Error::InconsistentActions(format!(
                        "actions of {} and {} do not commute",
                        barr.name, aarr.name
                    )));
                }
                let _ = (u, t, t2, u2);
            }
        }
        Ok(())
    }
}

fn relation_endpoints<F: Field>(alg: &PathAlgebra<F>, rel: &Relation<F>) -> (usize, usize) {
    let path = &rel.terms[0].1;
    let arrows = &alg.quiver().arrows;
    (arrows[path[0]].source, arrows[*path.last().unwrap()].target)
}

/// The hom bimodule of a path algebra: M(u, t) = Hom_C(t, u) with the left
/// action by post-composition and the right action by pre-composition.
pub fn hom_bimodule<F: Field>(c: &Arc<PathAlgebra<F>>) -> Bimodule<F> {
    let f = c.field();
    let n = c.n_objects();
    let dims: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|t| c.hom_dim(t, u)).collect()).collect();
    let left_actions = c
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(b, arr)| {
            let (u, u2) = (arr.source, arr.target);
            (0..n)
                .map(|t| {
                    let (_, _, bclass) = c.path_class(&[b]).expect("arrow path");
                    let mut m = Matrix::zero(f, c.hom_dim(t, u2), c.hom_dim(t, u));
                    for k in 0..c.hom_dim(t, u) {
                        let mut unit = vec![f.zero(); c.hom_dim(t, u)];
                        unit[k] = f.one();
                        let col = c.compose_coords(t, u, u2, &unit, &bclass);
                        for (r, v) in col.iter().enumerate() {
                            m.set(r, k, v.clone());
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    let right_actions = c
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let (t2, t) = (arr.source, arr.target);
            (0..n)
                .map(|u| {
                    let (_, _, aclass) = c.path_class(&[a]).expect("arrow path");
                    let mut m = Matrix::zero(f, c.hom_dim(t2, u), c.hom_dim(t, u));
                    for k in 0..c.hom_dim(t, u) {
                        let mut unit = vec![f.zero(); c.hom_dim(t, u)];
                        unit[k] = f.one();
                        let col = c.compose_coords(t2, t, u, &aclass, &unit);
                        for (r, v) in col.iter().enumerate() {
                            m.set(r, k, v.clone());
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    Bimodule {
        left_algebra: c.clone(),
        right_algebra: c.clone(),
        dims,
        left_actions,
        right_actions,
    }
}

/// A triangular matrix category realized as a path algebra, together with
/// the bookkeeping linking its vertices and connecting arrows back to the
/// two sides and the bimodule basis.
#[derive(Debug)]
pub struct TriangularAlgebra<F: Field> {
    pub algebra: Arc<PathAlgebra<F>>,
    pub t_side: Arc<PathAlgebra<F>>,
    pub u_side: Arc<PathAlgebra<F>>,
    pub bimodule: Bimodule<F>,
    n_t_arrows: usize,
    n_u_arrows: usize,
    /// connecting[u][t][k] = arrow index in `algebra` for basis element k of M(u, t)
    pub connecting: Vec<Vec<Vec<usize>>>,
}

impl<F: Field> TriangularAlgebra<F> {
    pub fn t_vertex(&self, x: usize) -> usize {
        x
    }
    pub fn u_vertex(&self, y: usize) -> usize {
        self.t_side.n_objects() + y
    }
    pub fn t_arrow(&self, a: usize) -> usize {
        a
    }
    pub fn u_arrow(&self, b: usize) -> usize {
        self.n_t_arrows + b
    }
    pub fn n_connecting(&self) -> usize {
        self.algebra.quiver().arrows.len() - self.n_t_arrows - self.n_u_arrows
    }
}

use crate::quiver::paths_of_exact_length;

/// Build the triangular matrix category [[T, 0], [M, U]] as a quiver with
/// relations: objects are the tagged disjoint union of T- and U-objects,
/// with one connecting arrow per basis element of each M(u, t). Hom blocks
/// are verified against the defining formula after construction.
pub fn triangular_matrix_algebra<F: Field>(
    t_side: Arc<PathAlgebra<F>>,
    u_side: Arc<PathAlgebra<F>>,
    bimodule: Bimodule<F>,
) -> Result<TriangularAlgebra<F>> {
    if bimodule.right_algebra().as_ref() != t_side.as_ref()
        || bimodule.left_algebra().as_ref() != u_side.as_ref()
    {
        return Err(Error::AlgebraMismatch(
            "bimodule sides do not match the given algebras".into(),
        ));
    }
    bimodule.validate()?;
    let f = t_side.field();
    let nt = t_side.n_objects();
    let nu = u_side.n_objects();
    let bound_t = t_side.relations().nilpotency_bound;
    let bound_u = u_side.relations().nilpotency_bound;

    let mut vertices: Vec<String> = Vec::with_capacity(nt + nu);
    for x in 0..nt {
        vertices.push(format!("T:{}", t_side.object_label(x)));
    }
    for y in 0..nu {
        vertices.push(format!("U:{}", u_side.object_label(y)));
    }

    let mut arrows: Vec<(String, String, String)> = Vec::new();
    for arr in &t_side.quiver().arrows {
        arrows.push((
            format!("T:{}", arr.name),
            vertices[arr.source].clone(),
            vertices[arr.target].clone(),
        ));
    }
    let n_t_arrows = arrows.len();
    for arr in &u_side.quiver().arrows {
        arrows.push((
            format!("U:{}", arr.name),
            vertices[nt + arr.source].clone(),
            vertices[nt + arr.target].clone(),
        ));
    }
    let n_u_arrows = arrows.len() - n_t_arrows;

    let mut connecting: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); nt]; nu];
    for u in 0..nu {
        for t in 0..nt {
            for k in 0..bimodule.dim(u, t) {
                let id = arrows.len();
                arrows.push((
                    format!(
                        "m{}[{}>{}]",
                        k,
                        t_side.object_label(t),
                        u_side.object_label(u)
                    ),
                    vertices[t].clone(),
                    vertices[nt + u].clone(),
                ));
                connecting[u][t].push(id);
            }
        }
    }

    let quiver = Quiver::new(vertices, arrows)?;

    let mut relations: Vec<Relation<F>> = Vec::new();
    let remap = |rel: &Relation<F>, offset: usize| Relation {
        terms: rel
            .terms
            .iter()
            .map(|(c, p)| (c.clone(), p.iter().map(|&a| a + offset).collect()))
            .collect(),
    };
    for rel in &t_side.relations().relations {
        relations.push(remap(rel, 0));
    }
    for rel in &u_side.relations().relations {
        relations.push(remap(rel, n_t_arrows));
    }
    // truncation relations: paths at the nilpotency bound of each side are
    // zero there by fiat, which must be restated inside the larger category
    for p in paths_of_exact_length(t_side.quiver(), bound_t, DEFAULT_DIM_CAP)? {
        relations.push(Relation { terms: vec![(f.one(), p.clone())] });
    }
    for p in paths_of_exact_length(u_side.quiver(), bound_u, DEFAULT_DIM_CAP)? {
        relations.push(Relation {
            terms: vec![(f.one(), p.iter().map(|&a| a + n_t_arrows).collect())],
        });
    }
    // rewrite composites through connecting arrows via the bimodule actions
    for u in 0..nu {
        for t in 0..nt {
            for (k, &beta) in connecting[u][t].iter().enumerate() {
                for (a, aarr) in t_side.quiver().arrows.iter().enumerate() {
                    if aarr.target != t {
                        continue;
                    }
                    let t0 = aarr.source;
                    let action = bimodule.right_action_of_arrow(a, u);
                    let mut terms = vec![(f.one(), vec![a, beta])];
                    for j in 0..bimodule.dim(u, t0) {
                        let c = action.get(j, k);
                        if !f.is_zero(c) {
                            terms.push((f.neg(c), vec![connecting[u][t0][j]]));
                        }
                    }
                    relations.push(Relation { terms });
                }
                for (b, barr) in u_side.quiver().arrows.iter().enumerate() {
                    if barr.source != u {
                        continue;
                    }
                    let u1 = barr.target;
                    let action = bimodule.left_action_of_arrow(b, t);
                    let mut terms = vec![(f.one(), vec![beta, n_t_arrows + b])];
                    for j in 0..bimodule.dim(u1, t) {
                        let c = action.get(j, k);
                        if !f.is_zero(c) {
                            terms.push((f.neg(c), vec![connecting[u1][t][j]]));
                        }
                    }
                    relations.push(Relation { terms });
                }
            }
        }
    }

    let algebra = PathAlgebra::build_internal(
        quiver,
        RelationSet { relations, nilpotency_bound: bound_t + bound_u },
        f,
        true,
        DEFAULT_DIM_CAP,
    )?;

    let tri = TriangularAlgebra {
        algebra,
        t_side,
        u_side,
        bimodule,
        n_t_arrows,
        n_u_arrows,
        connecting,
    };

    // hom blocks must match [[Hom_T, 0], [M, Hom_U]]
    for x in 0..nt {
        for y in 0..nt {
            if tri.algebra.hom_dim(tri.t_vertex(x), tri.t_vertex(y)) != tri.t_side.hom_dim(x, y) {
                return Err(Error::InconsistentActions(format!("T block at ({x},{y})")));
            }
        }
    }
    for x in 0..nu {
        for y in 0..nu {
            if tri.algebra.hom_dim(tri.u_vertex(x), tri.u_vertex(y)) != tri.u_side.hom_dim(x, y) {
                return Err(Error::InconsistentActions(format!("U block at ({x},{y})")));
            }
        }
    }
    for x in 0..nt {
        for y in 0..nu {
            if tri.algebra.hom_dim(tri.t_vertex(x), tri.u_vertex(y)) != tri.bimodule.dim(y, x) {
                return Err(Error::InconsistentActions(format!("M block at ({x},{y})")));
            }
            if tri.algebra.hom_dim(tri.u_vertex(y), tri.t_vertex(x)) != 0 {
                return Err(Error::InconsistentActions(format!("zero block at ({y},{x})")));
            }
        }
    }
    Ok(tri)
}

/// The doubled category [[C, 0], [Hom, C]] whose modules are maps between
/// C-modules, together with the two vertex embeddings and, per vertex, the
/// connecting arrow carrying the identity class.
#[derive(Debug)]
pub struct DoubledAlgebra<F: Field> {
    pub tri: TriangularAlgebra<F>,
    /// identity_connecting[v] = arrow of `tri.algebra` for the class of e_v
    /// inside Hom_C(v, v)
    pub identity_connecting: Vec<usize>,
}

impl<F: Field> DoubledAlgebra<F> {
    pub fn base(&self) -> &Arc<PathAlgebra<F>> {
        &self.tri.t_side
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.tri.algebra
    }

    /// First embedding on vertices (domain copy).
    pub fn phi1(&self, v: usize) -> usize {
        self.tri.t_vertex(v)
    }

    /// Second embedding on vertices (codomain copy).
    pub fn phi2(&self, v: usize) -> usize {
        self.tri.u_vertex(v)
    }
}

pub fn doubled_maps_algebra<F: Field>(c: &Arc<PathAlgebra<F>>) -> Result<DoubledAlgebra<F>> {
    let m = hom_bimodule(c);
    let tri = triangular_matrix_algebra(c.clone(), c.clone(), m)?;
    let f = c.field();
    let mut identity_connecting = Vec::with_capacity(c.n_objects());
    for v in 0..c.n_objects() {
        let id = c.identity_coords(v);
        let pos = id
            .iter()
            .position(|x| !f.is_zero(x))
            .expect("identity class is nonzero");
        debug_assert!(f.is_one(&id[pos]));
        identity_connecting.push(tri.connecting[v][v][pos]);
    }
    Ok(DoubledAlgebra { tri, identity_connecting })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn a2() -> Arc<PathAlgebra<Rationals>> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        PathAlgebra::build(q, RelationSet::empty(10), Rationals).unwrap()
    }

    fn a3() -> Arc<PathAlgebra<Rationals>> {
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

    #[test]
    fn hom_bimodule_of_a2_dimensions() {
        let c = a2();
        let m = hom_bimodule(&c);
        // M(u, t) = Hom(t, u)
        assert_eq!(m.dim(1, 0), 1); // Hom(1,2)
        assert_eq!(m.dim(0, 1), 0); // Hom(2,1)
        assert_eq!(m.dim(0, 0), 1);
        assert_eq!(m.dim(1, 1), 1);
        m.validate().unwrap();
    }

    #[test]
    fn hom_bimodule_action_associativity_a3() {
        let c = a3();
        let m = hom_bimodule(&c);
        m.validate().unwrap();
        // u . (m . t) = (u . m) . t on all basis triples
        let n = c.n_objects();
        for u in 0..n {
            for u2 in 0..n {
                for t in 0..n {
                    for t2 in 0..n {
                        for i in 0..c.hom_dim(u, u2) {
                            let mut uclass = vec![Rationals.zero(); c.hom_dim(u, u2)];
                            uclass[i] = Rationals.one();
                            for j in 0..c.hom_dim(t2, t) {
                                let mut tclass = vec![Rationals.zero(); c.hom_dim(t2, t)];
                                tclass[j] = Rationals.one();
                                let left = m
                                    .left_action(u, u2, t2, &uclass)
                                    .mul(&m.right_action(t2, t, u, &tclass));
                                let right = m
                                    .right_action(t2, t, u2, &tclass)
                                    .mul(&m.left_action(u, u2, t, &uclass));
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn doubled_a2_matches_expected_presentation() {
        let c = a2();
        let d = doubled_maps_algebra(&c).unwrap();
        let alg = d.algebra();
        assert_eq!(alg.n_objects(), 4);
        assert_eq!(alg.quiver().arrows.len(), 5);
        assert_eq!(alg.total_dim(), 9);
        assert_eq!(alg.total_dim(), 3 * c.total_dim());
        // connecting relations: two of them rewrite composites into the
        // diagonal connecting arrow
        let essential: Vec<_> = alg
            .relations()
            .relations
            .iter()
            .filter(|r| r.terms.len() > 1)
            .collect();
        assert_eq!(essential.len(), 2);
    }

    #[test]
    fn hom_bimodule_columns_are_representables() {
        let c = a3();
        let m = hom_bimodule(&c);
        for t in 0..c.n_objects() {
            assert_eq!(m.column_module(t), crate::module::projective(&c, t));
        }
    }

    #[test]
    fn doubled_block_formula() {
        let c = a3();
        let d = doubled_maps_algebra(&c).unwrap();
        let alg = d.algebra();
        let n = c.n_objects();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(alg.hom_dim(d.phi1(x), d.phi1(y)), c.hom_dim(x, y));
                assert_eq!(alg.hom_dim(d.phi2(x), d.phi2(y)), c.hom_dim(x, y));
                assert_eq!(alg.hom_dim(d.phi1(x), d.phi2(y)), c.hom_dim(x, y));
                assert_eq!(alg.hom_dim(d.phi2(x), d.phi1(y)), 0);
            }
        }
        assert_eq!(alg.total_dim(), 3 * c.total_dim());
    }

    #[test]
    fn zero_bimodule_gives_block_diagonal() {
        let t = a2();
        let u = a3();
        let m = Bimodule::zero(u.clone(), t.clone());
        let tri = triangular_matrix_algebra(t.clone(), u.clone(), m).unwrap();
        for x in 0..t.n_objects() {
            for y in 0..u.n_objects() {
                assert_eq!(tri.algebra.hom_dim(tri.t_vertex(x), tri.u_vertex(y)), 0);
            }
        }
        assert_eq!(tri.algebra.total_dim(), t.total_dim() + u.total_dim());
    }

    #[test]
    fn doubled_single_object_is_arrow_quiver() {
        let q = Quiver::new(vec!["v".into()], vec![]).unwrap();
        let c = PathAlgebra::build(q, RelationSet::empty(5), Rationals).unwrap();
        let d = doubled_maps_algebra(&c).unwrap();
        let alg = d.algebra();
        assert_eq!(alg.n_objects(), 2);
        assert_eq!(alg.quiver().arrows.len(), 1);
        assert_eq!(alg.total_dim(), 3);
    }

    #[test]
    fn zigzag_doubled_hom_vanishing_pattern() {
        let c = crate::quiver::tests::zigzag(6);
        let d = doubled_maps_algebra(&c).unwrap();
        let alg = d.algebra();
        let n = 6;
        for i in 0..n {
            for j in 0..n {
                let in01 = |d: i64| d == 0 || d == 1;
                let expect = usize::from(in01(j as i64 - i as i64));
                assert_eq!(alg.hom_dim(d.phi1(i), d.phi1(j)), expect);
                assert_eq!(alg.hom_dim(d.phi2(i), d.phi2(j)), expect);
                assert_eq!(alg.hom_dim(d.phi1(i), d.phi2(j)), expect);
                assert_eq!(alg.hom_dim(d.phi2(i), d.phi1(j)), 0);
            }
        }
        assert_eq!(alg.total_dim(), 3 * c.total_dim());
    }
}

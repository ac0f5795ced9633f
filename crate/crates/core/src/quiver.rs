//! Finite K-categories presented by quivers with relations.
//!
//! A [`PathAlgebra`] stores, for every ordered pair of vertices, an explicit
//! basis of the hom space as path classes, obtained by spanning all paths of
//! length below the nilpotency bound and quotienting by the two-sided ideal
//! closure of the relations. All bases are deterministic: paths are ordered
//! by length then lexicographically by arrow index, and the ideal is put in
//! reduced row echelon form with leftmost pivots.
//!
//! User-supplied relation sets must be admissible (every term a path of
//! length at least two). Derived categories built internally (triangular
//! matrix categories, multiplication-table presentations) also use relations
//! with length-one terms; those never pass through the admissibility check.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub const DEFAULT_DIM_CAP: usize = 8192;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(name, source label, target label)`.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex label {v:?}")));
            }
        }
        let mut arrow_names = BTreeMap::new();
        let mut built = Vec::new();
        for (i, (name, src, tgt)) in arrows.into_iter().enumerate() {
            if arrow_names.insert(name.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate arrow name {name:?}")));
            }
            let source = *seen.get(&src).ok_or(Error::UnknownVertex(src.clone()))?;
            let target = *seen.get(&tgt).ok_or(Error::UnknownVertex(tgt.clone()))?;
            built.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: built })
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// One K-linear combination of parallel paths. Paths are stored as arrow
/// indices in traversal order: `[a, b]` is the composite "b after a".
#[derive(Clone, Debug, PartialEq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet<F: Field> {
    pub relations: Vec<Relation<F>>,
    pub nilpotency_bound: usize,
}

impl<F: Field> RelationSet<F> {
    pub fn empty(nilpotency_bound: usize) -> Self {
        RelationSet { relations: Vec::new(), nilpotency_bound }
    }
}

#[derive(Clone, Debug, PartialEq)]
struct HomSpace<F: Field> {
    /// All paths between the two vertices, ordered by (length, lex).
    paths: Vec<Vec<usize>>,
    /// Echelon basis of the relation-ideal component, rows over path coords.
    ideal: Matrix<F>,
    ideal_pivots: Vec<usize>,
    /// Indices into `paths` of the non-pivot paths; their classes form the
    /// chosen basis of the hom space.
    basis: Vec<usize>,
}

/// A finite K-category presented by a quiver with relations, with computed
/// hom bases and composition. Immutable after construction.
#[derive(Debug)]
pub struct PathAlgebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: RelationSet<F>,
    inhomogeneous: bool,
    hom: Vec<Vec<HomSpace<F>>>,
}

impl<F: Field> PartialEq for PathAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }
}

impl<F: Field> PathAlgebra<F> {
    pub fn build(quiver: Quiver, relations: RelationSet<F>, field: F) -> Result<Arc<Self>> {
        Self::build_with_cap(quiver, relations, field, DEFAULT_DIM_CAP)
    }

    pub fn build_with_cap(
        quiver: Quiver,
        relations: RelationSet<F>,
        field: F,
        cap: usize,
    ) -> Result<Arc<Self>> {
        Self::build_internal(quiver, relations, field, false, cap)
    }

    pub(crate) fn build_internal(
        quiver: Quiver,
        relations: RelationSet<F>,
        field: F,
        allow_short_terms: bool,
        cap: usize,
    ) -> Result<Arc<Self>> {
        if relations.nilpotency_bound < 2 {
            return Err(Error::NonAdmissibleRelation(
                "nilpotency bound must be at least 2".into(),
            ));
        }
        let min_len = if allow_short_terms { 1 } else { 2 };
        for rel in &relations.relations {
            if rel.terms.is_empty() {
                return Err(Error::NonAdmissibleRelation("empty relation".into()));
            }
            let mut endpoints = None;
            for (_, path) in &rel.terms {
                if path.len() < min_len {
                    return Err(Error::NonAdmissibleRelation(format!(
                        "term of length {} (minimum {min_len})",
                        path.len()
                    )));
                }
                for &a in path {
                    if a >= quiver.arrows.len() {
                        return Err(Error::UnknownArrow(format!("arrow index {a}")));
                    }
                }
                for w in path.windows(2) {
                    if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                        return Err(Error::NonAdmissibleRelation(
                            "non-composable path in relation".into(),
                        ));
                    }
                }
                let src = quiver.arrows[path[0]].source;
                let tgt = quiver.arrows[*path.last().unwrap()].target;
                match endpoints {
                    None => endpoints = Some((src, tgt)),
                    Some(e) if e == (src, tgt) => {}
                    Some(_) => {
                        return Err(Error::NonAdmissibleRelation(
                            "terms do not share source and target".into(),
                        ))
                    }
                }
            }
        }

        let n = quiver.vertices.len();
        let bound = relations.nilpotency_bound;

        // enumerate all paths of length < bound, grouped by (source, target),
        // generated in (length, lex) order
        let mut paths: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![Vec::new(); n]; n];
        let mut total_paths = 0usize;
        for x in 0..n {
            paths[x][x].push(Vec::new());
            total_paths += 1;
        }
        let mut frontier: Vec<(usize, usize, Vec<usize>)> =
            (0..n).map(|x| (x, x, Vec::new())).collect();
        for _len in 1..bound {
            let mut next = Vec::new();
            for (src, tgt, p) in &frontier {
                for (ai, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source == *tgt {
                        let mut q = p.clone();
                        q.push(ai);
                        paths[*src][arrow.target].push(q.clone());
                        total_paths += 1;
                        if total_paths > cap {
                            return Err(Error::DimensionOverflow { total: total_paths, cap });
                        }
                        next.push((*src, arrow.target, q));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }

        // two-sided ideal closure: all composites q . r . p of relations with
        // paths on both sides, truncating terms of length >= bound to zero
        let mut hom: Vec<Vec<HomSpace<F>>> = Vec::with_capacity(n);
        for x in 0..n {
            let mut row = Vec::with_capacity(n);
            for y in 0..n {
                let plist = &paths[x][y];
                let index_of = |p: &[usize]| -> Option<usize> {
                    plist
                        .binary_search_by(|q| {
                            (q.len(), q.as_slice()).cmp(&(p.len(), p))
                        })
                        .ok()
                };
                let mut vectors: Vec<Vec<F::Elem>> = Vec::new();
                for rel in &relations.relations {
                    let (rs, rt) = {
                        let path = &rel.terms[0].1;
                        (
                            quiver.arrows[path[0]].source,
                            quiver.arrows[*path.last().unwrap()].target,
                        )
                    };
                    for pre in &paths[x][rs] {
                        for post in &paths[rt][y] {
                            let mut vec = vec![field.zero(); plist.len()];
                            for (coeff, w) in &rel.terms {
                                let total_len = pre.len() + w.len() + post.len();
                                if total_len >= bound {
                                    continue;
                                }
                                let mut full = Vec::with_capacity(total_len);
                                full.extend_from_slice(pre);
                                full.extend_from_slice(w);
                                full.extend_from_slice(post);
                                let idx = index_of(&full).expect("composite path enumerated");
                                vec[idx] = field.add(&vec[idx], coeff);
                            }
                            if vec.iter().any(|e| !field.is_zero(e)) {
                                vectors.push(vec);
                            }
                        }
                    }
                }
                let ideal_raw = if vectors.is_empty() {
                    Matrix::zero(field, 0, plist.len())
                } else {
                    Matrix::from_rows(field, vectors)
                };
                let (e, pivots) = ideal_raw.rref();
                let ideal = e.submatrix(0..pivots.len(), 0..plist.len());
                let basis: Vec<usize> =
                    (0..plist.len()).filter(|i| !pivots.contains(i)).collect();
                row.push(HomSpace {
                    paths: plist.clone(),
                    ideal,
                    ideal_pivots: pivots,
                    basis,
                });
            }
            hom.push(row);
        }

        let alg = PathAlgebra {
            field,
            quiver,
            relations,
            inhomogeneous: allow_short_terms,
            hom,
        };
        let total = alg.total_dim();
        if total > cap {
            return Err(Error::DimensionOverflow { total, cap });
        }
        Ok(Arc::new(alg))
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet<F> {
        &self.relations
    }

    pub fn is_inhomogeneous(&self) -> bool {
        self.inhomogeneous
    }

    pub fn n_objects(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn object_label(&self, x: usize) -> &str {
        &self.quiver.vertices[x]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom[x][y].basis.len()
    }

    pub fn total_dim(&self) -> usize {
        let n = self.n_objects();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| self.hom_dim(x, y))
            .sum()
    }

    /// The representative path (arrow indices, traversal order) of basis
    /// element `k` of Hom(x, y).
    pub fn basis_path(&self, x: usize, y: usize, k: usize) -> &[usize] {
        let h = &self.hom[x][y];
        &h.paths[h.basis[k]]
    }

    /// Indices of the basis elements spanning rad(x, y): the classes of
    /// positive-length paths. For x != y this is the whole basis.
    pub fn radical_basis_indices(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.hom_dim(x, y))
            .filter(|&k| !self.basis_path(x, y, k).is_empty())
            .collect()
    }

    pub fn radical_dim(&self, x: usize, y: usize) -> usize {
        self.radical_basis_indices(x, y).len()
    }

    pub fn identity_coords(&self, x: usize) -> Vec<F::Elem> {
        let h = &self.hom[x][x];
        let pos = h
            .basis
            .iter()
            .position(|&i| h.paths[i].is_empty())
            .expect("identity class survives in the quotient");
        let mut v = vec![self.field.zero(); h.basis.len()];
        v[pos] = self.field.one();
        v
    }

    /// Normal form of a vector in raw path coordinates: coordinates of its
    /// class in the chosen hom basis.
    fn normal_form(&self, x: usize, y: usize, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = self.field;
        let h = &self.hom[x][y];
        for (row, &p) in h.ideal_pivots.iter().enumerate() {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..v.len() {
                let delta = f.mul(&factor, h.ideal.get(row, c));
                v[c] = f.sub(&v[c], &delta);
            }
        }
        h.basis.iter().map(|&i| v[i].clone()).collect()
    }

    /// Class of a single path given by arrow indices in traversal order.
    pub fn path_class(&self, path: &[usize]) -> Result<(usize, usize, Vec<F::Elem>)> {
        if path.is_empty() {
            return Err(Error::Parse("empty path has no endpoints".into()));
        }
        let x = self.quiver.arrows[path[0]].source;
        let y = self.quiver.arrows[*path.last().unwrap()].target;
        Ok((x, y, self.path_class_between(x, y, path)))
    }

    fn path_class_between(&self, x: usize, y: usize, path: &[usize]) -> Vec<F::Elem> {
        let f = self.field;
        let h = &self.hom[x][y];
        if path.len() >= self.relations.nilpotency_bound {
            return vec![f.zero(); h.basis.len()];
        }
        let idx = h
            .paths
            .binary_search_by(|q| (q.len(), q.as_slice()).cmp(&(path.len(), path)))
            .expect("path of admissible length is enumerated");
        let mut v = vec![f.zero(); h.paths.len()];
        v[idx] = f.one();
        self.normal_form(x, y, v)
    }

    /// Composite class `g . f` of basis elements `f in Hom(x,y)`,
    /// `g in Hom(y,z)`.
    pub fn compose_basis(&self, x: usize, y: usize, z: usize, i: usize, j: usize) -> Vec<F::Elem> {
        let mut p = self.basis_path(x, y, i).to_vec();
        p.extend_from_slice(self.basis_path(y, z, j));
        if p.is_empty() {
            return self.identity_coords(x);
        }
        self.path_class_between(x, z, &p)
    }

    /// Bilinear extension of [`Self::compose_basis`] to coordinate vectors.
    pub fn compose_coords(
        &self,
        x: usize,
        y: usize,
        z: usize,
        f_coords: &[F::Elem],
        g_coords: &[F::Elem],
    ) -> Vec<F::Elem> {
        let f = self.field;
        assert_eq!(f_coords.len(), self.hom_dim(x, y));
        assert_eq!(g_coords.len(), self.hom_dim(y, z));
        let mut out = vec![f.zero(); self.hom_dim(x, z)];
        for (i, ci) in f_coords.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, cj) in g_coords.iter().enumerate() {
                if f.is_zero(cj) {
                    continue;
                }
                let prod = f.mul(ci, cj);
                let comp = self.compose_basis(x, y, z, i, j);
                for (o, c) in out.iter_mut().zip(comp.iter()) {
                    *o = f.add(o, &f.mul(&prod, c));
                }
            }
        }
        out
    }

    /// The opposite category: arrows reversed, relation paths reversed.
    pub fn opposite(&self) -> Arc<Self> {
        let quiver = self.quiver.reversed();
        let relations = RelationSet {
            relations: self
                .relations
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| {
                            let mut q = p.clone();
                            q.reverse();
                            (c.clone(), q)
                        })
                        .collect(),
                })
                .collect(),
            nilpotency_bound: self.relations.nilpotency_bound,
        };
        Self::build_internal(quiver, relations, self.field, true, usize::MAX)
            .expect("opposite of a built algebra rebuilds")
    }

    /// Coordinates over the opposite algebra of the class corresponding to
    /// `coords in Hom(x, y)`; the result lives in `Hom_op(y, x)`.
    pub fn transport_to_opposite(
        &self,
        op: &PathAlgebra<F>,
        x: usize,
        y: usize,
        coords: &[F::Elem],
    ) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); op.hom_dim(y, x)];
        for (k, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let mut p = self.basis_path(x, y, k).to_vec();
            p.reverse();
            let cls = if p.is_empty() {
                op.identity_coords(x)
            } else {
                op.path_class_between(y, x, &p)
            };
            for (o, v) in out.iter_mut().zip(cls.iter()) {
                *o = f.add(o, &f.mul(c, v));
            }
        }
        out
    }

    /// Display name for a basis element: arrow names joined right-to-left,
    /// or `e_x` for an identity class.
    pub fn basis_name(&self, x: usize, y: usize, k: usize) -> String {
        let p = self.basis_path(x, y, k);
        if p.is_empty() {
            format!("e_{}", self.quiver.vertices[x])
        } else {
            p.iter()
                .rev()
                .map(|&a| self.quiver.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// Build accepting relation terms of length one: needed to re-read
/// presentations the library itself emits, where composites are rewritten
/// into single connecting arrows. Ordinary user input should go through
/// [`PathAlgebra::build`], which insists on admissibility.
pub fn build_with_short_relations<F: Field>(
    quiver: Quiver,
    relations: RelationSet<F>,
    field: F,
) -> Result<Arc<PathAlgebra<F>>> {
    PathAlgebra::build_internal(quiver, relations, field, true, DEFAULT_DIM_CAP)
}

/// All paths of exactly the given length, as arrow index sequences.
pub(crate) fn paths_of_exact_length(
    quiver: &Quiver,
    len: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut frontier: Vec<(usize, Vec<usize>)> =
        (0..quiver.vertices.len()).map(|x| (x, Vec::new())).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for (tgt, p) in frontier.iter() {
            for (ai, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source == *tgt {
                    let mut q = p.clone();
                    q.push(ai);
                    next.push((arrow.target, q));
                    if next.len() > cap {
                        return Err(Error::DimensionOverflow { total: next.len(), cap });
                    }
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(frontier
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| p.len() == len)
        .collect())
}

/// Presentation of an explicit category by formal arrows and
/// multiplication-table relations.
///
/// The category is handed over as pairwise non-isomorphic objects with a
/// chosen radical basis per hom pair (the full basis off the diagonal, a
/// complement of the identity on it) and a composition rule on radical
/// vectors expressed in the source category's hom coordinates.
pub struct TablePresentation<F: Field> {
    pub algebra: Arc<PathAlgebra<F>>,
    /// For each arrow of the presented quiver: source object, target object,
    /// and the corresponding radical vector in source-category coordinates.
    pub arrow_payload: Vec<(usize, usize, Vec<F::Elem>)>,
}

/// Build a quiver-with-relations presentation of an explicit finite
/// category from its radical data.
///
/// `hom_dims[x][y]` is the hom dimension, `identity[x]` the identity
/// coordinates, `radical[x][y]` a matrix whose columns are the radical
/// basis vectors, and `compose(x, y, z, f, g)` the composite `g . f` in the
/// source coordinates. The presented algebra is verified to have the same
/// hom dimensions; a mismatch means the table was inconsistent.
pub fn present_by_table<F: Field>(
    field: F,
    labels: Vec<String>,
    hom_dims: &[Vec<usize>],
    identity: &[Vec<F::Elem>],
    radical: &[Vec<Matrix<F>>],
    compose: &dyn Fn(usize, usize, usize, &[F::Elem], &[F::Elem]) -> Vec<F::Elem>,
) -> Result<TablePresentation<F>> {
    let n = labels.len();
    let mut arrows = Vec::new();
    let mut arrow_payload: Vec<(usize, usize, Vec<F::Elem>)> = Vec::new();
    let mut arrow_ids: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            let r = &radical[x][y];
            let expected = if x == y { hom_dims[x][y].saturating_sub(1) } else { hom_dims[x][y] };
            if r.cols() != expected {
                return Err(Error::InconsistentActions(format!(
                    "radical basis of ({x},{y}) has {} vectors, expected {expected}",
                    r.cols()
                )));
            }
            for k in 0..r.cols() {
                let id = arrows.len();
                arrows.push((
                    format!("r{}[{}>{}]", k, labels[x], labels[y]),
                    labels[x].clone(),
                    labels[y].clone(),
                ));
                arrow_payload.push((x, y, r.col_vec(k)));
                arrow_ids[x][y].push(id);
            }
        }
    }
    let quiver = Quiver::new(labels.clone(), arrows)?;

    // express a radical vector of Hom(x, z) in terms of identity + arrows;
    // the identity coefficient must vanish
    let express = |x: usize, z: usize, v: &[F::Elem]| -> Result<Vec<(F::Elem, usize)>> {
        let mut cols: Vec<Matrix<F>> = Vec::new();
        if x == z {
            cols.push(Matrix::column(field, identity[x].clone()));
        }
        cols.push(radical[x][z].clone());
        let basis = cols
            .into_iter()
            .reduce(|a, b| a.hstack(&b))
            .unwrap_or_else(|| Matrix::zero(field, v.len(), 0));
        let rhs = Matrix::column(field, v.to_vec());
        let sol = basis
            .solve(&rhs)?
            .ok_or_else(|| Error::InconsistentActions("composite outside radical span".into()))?;
        let offset = usize::from(x == z);
        if x == z && !field.is_zero(sol.get(0, 0)) {
            return Err(Error::InconsistentActions(
                "radical composite has identity component".into(),
            ));
        }
        Ok((0..radical[x][z].cols())
            .map(|k| (sol.get(offset + k, 0).clone(), arrow_ids[x][z][k]))
            .filter(|(c, _)| !field.is_zero(c))
            .collect())
    };

    let mut relations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for &g_arrow in &arrow_ids[x][y] {
                    for &h_arrow in &arrow_ids[y][z] {
                        let gv = &arrow_payload[g_arrow].2;
                        let hv = &arrow_payload[h_arrow].2;
                        let comp = compose(x, y, z, gv, hv);
                        let mut terms = vec![(field.one(), vec![g_arrow, h_arrow])];
                        for (c, arrow) in express(x, z, &comp)? {
                            terms.push((field.neg(&c), vec![arrow]));
                        }
                        relations.push(Relation { terms });
                    }
                }
            }
        }
    }

    // Loewy length of the radical bounds path lengths
    let mut bound = 2usize;
    {
        // powers of the radical: dims of rad^k until zero
        let mut current: Vec<Vec<Matrix<F>>> = radical.to_vec();
        let mut k = 1usize;
        loop {
            let all_zero = current
                .iter()
                .flatten()
                .all(|m| m.cols() == 0);
            if all_zero {
                bound = bound.max(k.max(2));
                break;
            }
            if k > 64 {
                return Err(Error::InconsistentActions("radical is not nilpotent".into()));
            }
            // rad^{k+1}(x,z) = sum_y rad(y,z) . rad^k(x,y)
            let mut next: Vec<Vec<Matrix<F>>> = Vec::with_capacity(n);
            for x in 0..n {
                let mut row = Vec::with_capacity(n);
                for z in 0..n {
                    let mut gens: Vec<Vec<F::Elem>> = Vec::new();
                    for y in 0..n {
                        for i in 0..current[x][y].cols() {
                            for j in 0..radical[y][z].cols() {
                                let v = compose(
                                    x,
                                    y,
                                    z,
                                    &current[x][y].col_vec(i),
                                    &radical[y][z].col_vec(j),
                                );
                                if v.iter().any(|e| !field.is_zero(e)) {
                                    gens.push(v);
                                }
                            }
                        }
                    }
                    let m = if gens.is_empty() {
                        Matrix::zero(field, hom_dims[x][z], 0)
                    } else {
                        let raw = Matrix::from_rows(field, gens).transpose();
                        raw.image_basis()
                    };
                    row.push(m);
                }
                next.push(row);
            }
            current = next;
            k += 1;
        }
    }

    let algebra = PathAlgebra::build_internal(
        quiver,
        RelationSet { relations, nilpotency_bound: bound },
        field,
        true,
        usize::MAX,
    )?;

    for x in 0..n {
        for y in 0..n {
            if algebra.hom_dim(x, y) != hom_dims[x][y] {
                return Err(Error::InconsistentActions(format!(
                    "presented hom dim at ({x},{y}) is {}, expected {}",
                    algebra.hom_dim(x, y),
                    hom_dims[x][y]
                )));
            }
        }
    }

    Ok(TablePresentation { algebra, arrow_payload })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::field::Rationals;

    pub(crate) fn a2(field: Rationals) -> Arc<PathAlgebra<Rationals>> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        PathAlgebra::build(q, RelationSet::empty(10), field).unwrap()
    }

    #[test]
    fn a2_hom_dimensions() {
        let alg = a2(Rationals);
        assert_eq!(alg.hom_dim(0, 0), 1);
        assert_eq!(alg.hom_dim(0, 1), 1);
        assert_eq!(alg.hom_dim(1, 0), 0);
        assert_eq!(alg.hom_dim(1, 1), 1);
        assert_eq!(alg.total_dim(), 3);
    }

    #[test]
    fn loop_with_square_zero() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![("x".into(), "v".into(), "v".into())],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation { terms: vec![(Rationals.one(), vec![0, 0])] }],
            nilpotency_bound: 10,
        };
        let alg = PathAlgebra::build(q, rels, Rationals).unwrap();
        assert_eq!(alg.hom_dim(0, 0), 2);
        // e, x with x.x = 0
        let sq = alg.compose_basis(0, 0, 0, 1, 1);
        assert!(sq.iter().all(|c| Rationals.is_zero(c)));
    }

    #[test]
    fn zigzag_truncation_hom_pattern() {
        // vertices 0..=5, arrows i -> i+1, consecutive composites vanish
        let alg = zigzag(6);
        for i in 0..6 {
            for j in 0..6 {
                let expect = usize::from(j == i || j == i + 1);
                assert_eq!(alg.hom_dim(i, j), expect, "Hom({i},{j})");
            }
        }
        assert_eq!(alg.total_dim(), 11);
    }

    pub(crate) fn zigzag(n: usize) -> Arc<PathAlgebra<Rationals>> {
        let vertices: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> = (0..n - 1)
            .map(|i| (format!("al{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        let q = Quiver::new(vertices, arrows).unwrap();
        let relations = (0..n.saturating_sub(2))
            .map(|i| Relation {
                terms: vec![(Rationals.one(), vec![i, i + 1])],
            })
            .collect();
        PathAlgebra::build(q, RelationSet { relations, nilpotency_bound: 8 }, Rationals).unwrap()
    }

    #[test]
    fn non_admissible_relation_rejected() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation { terms: vec![(Rationals.one(), vec![0])] }],
            nilpotency_bound: 10,
        };
        assert!(matches!(
            PathAlgebra::build(q, rels, Rationals),
            Err(Error::NonAdmissibleRelation(_))
        ));
    }

    #[test]
    fn dimension_cap_enforced() {
        let q = Quiver::new(
            vec!["v".into()],
            vec![("x".into(), "v".into(), "v".into())],
        )
        .unwrap();
        let res = PathAlgebra::build_with_cap(q, RelationSet::empty(100), Rationals, 16);
        assert!(matches!(res, Err(Error::DimensionOverflow { .. })));
    }

    #[test]
    fn opposite_is_involution_and_transposes_dims() {
        let alg = a2(Rationals);
        let op = alg.opposite();
        assert_eq!(op.hom_dim(1, 0), 1);
        assert_eq!(op.hom_dim(0, 1), 0);
        let opop = op.opposite();
        assert_eq!(*opop, *alg);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(alg.hom_dim(x, y), op.hom_dim(y, x));
            }
        }
    }

    #[test]
    fn opposite_preserves_total_dim_commutative_square() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "1".into(), "3".into()),
                ("c".into(), "2".into(), "4".into()),
                ("d".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let one = Rationals.one();
        let rels = RelationSet {
            relations: vec![Relation {
                terms: vec![(one.clone(), vec![0, 2]), (Rationals.neg(&one), vec![1, 3])],
            }],
            nilpotency_bound: 10,
        };
        let alg = PathAlgebra::build(q, rels, Rationals).unwrap();
        let op = alg.opposite();
        assert_eq!(alg.total_dim(), op.total_dim());
        assert_eq!(alg.hom_dim(0, 3), 1);
    }

    #[test]
    fn associativity_and_identity_on_all_basis_triples() {
        for alg in [a2(Rationals), zigzag(4)] {
            let n = alg.n_objects();
            assert!(alg.total_dim() <= 60);
            for x in 0..n {
                let idx = alg.identity_coords(x);
                for y in 0..n {
                    for i in 0..alg.hom_dim(x, y) {
                        let mut unit = vec![Rationals.zero(); alg.hom_dim(x, y)];
                        unit[i] = Rationals.one();
                        assert_eq!(alg.compose_coords(x, x, y, &idx, &unit), unit);
                        let idy = alg.identity_coords(y);
                        assert_eq!(alg.compose_coords(x, y, y, &unit, &idy), unit);
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for w in 0..n {
                            for i in 0..alg.hom_dim(x, y) {
                                for j in 0..alg.hom_dim(y, z) {
                                    for k in 0..alg.hom_dim(z, w) {
                                        let gf = alg.compose_basis(x, y, z, i, j);
                                        let mut hk = vec![Rationals.zero(); alg.hom_dim(z, w)];
                                        hk[k] = Rationals.one();
                                        let left = alg.compose_coords(x, z, w, &gf, &hk);
                                        let hg = alg.compose_basis(y, z, w, j, k);
                                        let mut fi = vec![Rationals.zero(); alg.hom_dim(x, y)];
                                        fi[i] = Rationals.one();
                                        let right = alg.compose_coords(x, y, w, &fi, &hg);
                                        assert_eq!(left, right);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

//! Projective covers, minimal presentations, the star duality on
//! projectives, and the transpose / translate built from them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::PathAlgebra;

use super::{
    algebras_match, morphism_from_projective, projective, top, ModuleMorphism, Representation,
};

/// A finite direct sum of representables, kept with its summand list.
#[derive(Clone, Debug)]
pub struct ProjectiveSum<F: Field> {
    algebra: Arc<PathAlgebra<F>>,
    pub vertices: Vec<usize>,
    rep: Representation<F>,
}

impl<F: Field> ProjectiveSum<F> {
    pub fn new(algebra: &Arc<PathAlgebra<F>>, vertices: Vec<usize>) -> Self {
        let mut rep = Representation::zero(algebra.clone());
        for &v in &vertices {
            rep = rep.direct_sum(&projective(algebra, v));
        }
        ProjectiveSum { algebra: algebra.clone(), vertices, rep }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra<F>> {
        &self.algebra
    }

    pub fn rep(&self) -> &Representation<F> {
        &self.rep
    }

    pub fn n_summands(&self) -> usize {
        self.vertices.len()
    }

    /// Column offset of summand `i` at vertex `w`.
    fn offset(&self, i: usize, w: usize) -> usize {
        self.vertices[..i]
            .iter()
            .map(|&v| self.algebra.hom_dim(v, w))
            .sum()
    }

    /// Morphism from the sum determined by one target element per summand.
    pub fn morphism_to<'a>(
        &self,
        target: &Representation<F>,
        elements: impl Iterator<Item = &'a Vec<F::Elem>>,
    ) -> ModuleMorphism<F>
    where
        F::Elem: 'a,
    {
        let f = self.algebra.field();
        let n = self.algebra.n_objects();
        let mut comps: Vec<Matrix<F>> = (0..n)
            .map(|w| Matrix::zero(f, target.dim(w), self.rep.dim(w)))
            .collect();
        for (i, elem) in elements.enumerate() {
            let v = self.vertices[i];
            let part = morphism_from_projective(&self.algebra, v, target, elem);
            for w in 0..n {
                let off = self.offset(i, w);
                let block = part.component(w);
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        comps[w].set(r, off + c, block.get(r, c).clone());
                    }
                }
            }
        }
        ModuleMorphism::new_unchecked(self.rep.clone(), target.clone(), comps)
    }
}

/// A morphism between sums of representables recorded by its hom-class
/// entries: entry (i, j) classifies the component P(src[j]) -> P(tgt[i])
/// and lives in Hom(tgt[i], src[j]).
#[derive(Clone, Debug)]
pub struct ProjMorphism<F: Field> {
    pub src: ProjectiveSum<F>,
    pub tgt: ProjectiveSum<F>,
    pub entries: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> ProjMorphism<F> {
    pub fn realize(&self) -> ModuleMorphism<F> {
        let alg = self.src.algebra();
        let f = alg.field();
        // column j of class entries determines the morphism out of P(src[j])
        let elements: Vec<Vec<F::Elem>> = (0..self.src.vertices.len())
            .map(|j| {
                // the target element in (tgt rep)(src[j]) is the stacked
                // class vector over the summands
                let v = self.src.vertices[j];
                let mut elem = Vec::new();
                for (i, &w) in self.tgt.vertices.iter().enumerate() {
                    let _ = w;
                    elem.extend(self.entries[i][j].iter().cloned());
                }
                let _ = v;
                elem
            })
            .collect();
        let _ = f;
        self.src.morphism_to(self.tgt.rep(), elements.iter())
    }

    /// Recover the class entries of a realized morphism between sums.
    pub fn from_module_morphism(
        h: &ModuleMorphism<F>,
        src: &ProjectiveSum<F>,
        tgt: &ProjectiveSum<F>,
    ) -> Result<Self> {
        if h.source() != src.rep() || h.target() != tgt.rep() {
            return Err(Error::NotProjective(
                "morphism endpoints do not match the given sums".into(),
            ));
        }
        let alg = src.algebra();
        let f = alg.field();
        let mut entries = vec![vec![Vec::new(); src.vertices.len()]; tgt.vertices.len()];
        for (j, &v) in src.vertices.iter().enumerate() {
            // image of the identity class of P(v) under the j-th block
            let id = alg.identity_coords(v);
            let off_j = src.offset(j, v);
            let comp = h.component(v);
            let mut img = vec![f.zero(); comp.rows()];
            for (k, c) in id.iter().enumerate() {
                for r in 0..comp.rows() {
                    img[r] = f.add(&img[r], &f.mul(c, comp.get(r, off_j + k)));
                }
            }
            for (i, &w) in tgt.vertices.iter().enumerate() {
                let off_i = tgt.offset(i, v);
                entries[i][j] = img[off_i..off_i + alg.hom_dim(w, v)].to_vec();
            }
        }
        Ok(ProjMorphism { src: src.clone(), tgt: tgt.clone(), entries })
    }

    /// The star dual: the same classes read backwards over the opposite
    /// algebra, giving a morphism between the opposite representables with
    /// sources and targets exchanged.
    pub fn star(&self, op: &Arc<PathAlgebra<F>>) -> ProjMorphism<F> {
        let alg = self.src.algebra();
        let star_src = ProjectiveSum::new(op, self.tgt.vertices.clone());
        let star_tgt = ProjectiveSum::new(op, self.src.vertices.clone());
        let mut entries =
            vec![vec![Vec::new(); star_src.vertices.len()]; star_tgt.vertices.len()];
        for (i, &ti) in self.tgt.vertices.iter().enumerate() {
            for (j, &sj) in self.src.vertices.iter().enumerate() {
                entries[j][i] = alg.transport_to_opposite(op, ti, sj, &self.entries[i][j]);
            }
        }
        ProjMorphism { src: star_src, tgt: star_tgt, entries }
    }
}

/// A projective cover: an epi from a sum of representables whose kernel
/// lies in the radical.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub sum: ProjectiveSum<F>,
    pub map: ModuleMorphism<F>,
}

/// Build the projective cover of a representation. The top determines the
/// summands; lifts of a top basis give the map. Minimality (kernel inside
/// the radical) is certified before returning.
pub fn projective_cover<F: Field>(x: &Representation<F>) -> Cover<F> {
    let alg = x.algebra().clone();
    let f = alg.field();
    let (t, tproj) = top(x);
    let mut vertices = Vec::new();
    let mut elements: Vec<Vec<F::Elem>> = Vec::new();
    for v in 0..alg.n_objects() {
        for k in 0..t.dim(v) {
            // preimage in X(v) of the k-th top basis vector
            let mut unit = Matrix::zero(f, t.dim(v), 1);
            unit.set(k, 0, f.one());
            let lift = tproj
                .component(v)
                .solve(&unit)
                .expect("shapes agree")
                .expect("top projection is onto");
            vertices.push(v);
            elements.push((0..x.dim(v)).map(|r| lift.get(r, 0).clone()).collect());
        }
    }
    let sum = ProjectiveSum::new(&alg, vertices);
    let map = sum.morphism_to(x, elements.iter());
    assert!(map.is_epi(), "cover must be onto");
    // minimality: the kernel lies in the radical, i.e. composing the kernel
    // inclusion with the top projection of the sum is zero
    let (_, kincl) = map.kernel();
    let (_, ptop) = top(sum.rep());
    assert!(
        ptop.compose(&kincl).is_zero(),
        "cover kernel must lie in the radical"
    );
    Cover { sum, map }
}

/// A minimal projective presentation P1 -> P0 -> X -> 0.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub p1: ProjectiveSum<F>,
    pub p0: ProjectiveSum<F>,
    pub d1: ProjMorphism<F>,
    pub d1_map: ModuleMorphism<F>,
    pub d0: ModuleMorphism<F>,
}

pub fn minimal_projective_presentation<F: Field>(x: &Representation<F>) -> Presentation<F> {
    let cover0 = projective_cover(x);
    let (_, kincl) = cover0.map.kernel();
    let cover1 = projective_cover(kincl.source());
    let d1_map = kincl.compose(&cover1.map);
    let d1 = ProjMorphism::from_module_morphism(&d1_map, &cover1.sum, &cover0.sum)
        .expect("cover composite lands in the cover sum");
    Presentation {
        p1: cover1.sum,
        p0: cover0.sum,
        d1,
        d1_map,
        d0: cover0.map,
    }
}

/// The transpose along with the pieces of its construction.
#[derive(Clone, Debug)]
pub struct TransposeData<F: Field> {
    pub presentation: Presentation<F>,
    /// star of d1, a morphism between opposite representables
    pub star_d1: ProjMorphism<F>,
    /// the transpose itself, a module over the opposite algebra
    pub tr: Representation<F>,
    /// cokernel projection (star of P1) -> Tr
    pub q: ModuleMorphism<F>,
}

/// Cokernel of the star dual of a minimal presentation.
pub fn transpose<F: Field>(x: &Representation<F>, op: &Arc<PathAlgebra<F>>) -> TransposeData<F> {
    let presentation = minimal_projective_presentation(x);
    let star_d1 = presentation.d1.star(op);
    let realized = star_d1.realize();
    let (tr, q) = realized.cokernel();
    TransposeData { presentation, star_d1, tr, q }
}

/// The translate: dual of the transpose, landing back over the original
/// algebra. Vanishes on projectives.
pub fn tau<F: Field>(x: &Representation<F>, op: &Arc<PathAlgebra<F>>) -> Representation<F> {
    transpose(x, op).tr.dual_into(x.algebra())
}

/// The inverse translate: transpose of the dual.
pub fn tau_inverse<F: Field>(x: &Representation<F>, op: &Arc<PathAlgebra<F>>) -> Representation<F> {
    let dx = x.dual_into(op);
    transpose(&dx, x.algebra()).tr
}

/// Lift a morphism from a sum of representables through an epi: replaces
/// each generator image by a chosen preimage.
pub fn lift_through_epi<F: Field>(
    from: &ProjectiveSum<F>,
    map: &ModuleMorphism<F>,
    epi: &ModuleMorphism<F>,
) -> ModuleMorphism<F> {
    assert!(algebras_match(from.algebra(), epi.source().algebra()));
    assert!(map.source() == from.rep() && map.target() == epi.target());
    let f = from.algebra().field();
    let mut elements: Vec<Vec<F::Elem>> = Vec::new();
    for (i, &v) in from.vertices.iter().enumerate() {
        let id = from.algebra().identity_coords(v);
        let off = from.offset(i, v);
        let comp = map.component(v);
        let mut img = vec![f.zero(); comp.rows()];
        for (k, c) in id.iter().enumerate() {
            for r in 0..comp.rows() {
                img[r] = f.add(&img[r], &f.mul(c, comp.get(r, off + k)));
            }
        }
        let pre = epi
            .component(v)
            .solve(&Matrix::column(f, img))
            .expect("shapes agree")
            .expect("epi component is onto");
        elements.push((0..pre.rows()).map(|r| pre.get(r, 0).clone()).collect());
    }
    from.morphism_to(epi.source(), elements.iter())
}

/// Injective envelope: the dual of the projective cover of the dual.
pub fn injective_envelope<F: Field>(
    x: &Representation<F>,
    op: &Arc<PathAlgebra<F>>,
) -> ModuleMorphism<F> {
    let dx = x.dual_into(op);
    let cover = projective_cover(&dx);
    // dualizing the cover epi gives a mono from the double dual, which is
    // literally x again
    let env = cover.map.dual_into(x.algebra());
    assert!(env.source() == x, "double dual is the identity on the nose");
    env
}

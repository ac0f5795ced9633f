//! Transfer from the maps category to modules over the (opposite of the)
//! endomorphism algebra of an additive generator: each maps object goes to
//! the cokernel of the induced map on covariant hom spaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::Matrix;
use crate::module::decompose::end_radical;
use crate::module::{
    find_isomorphism, flatten_components, hom_space, is_indecomposable, ModuleMorphism,
    Representation, ShortExactSequence,
};
use crate::quiver::{present_by_table, PathAlgebra, TablePresentation};

use super::{MapsMorphism, MapsObject, MapsSES};

type Rep = Representation<Rationals>;

/// The endomorphism algebra of a list of pairwise non-isomorphic
/// indecomposables, presented as a path algebra, with its opposite.
pub struct EndAlgebra {
    pub summands: Vec<Rep>,
    pub presentation: TablePresentation<Rationals>,
    pub op: Arc<PathAlgebra<Rationals>>,
    /// hom bases between summands
    bases: Vec<Vec<Vec<ModuleMorphism<Rationals>>>>,
}

impl EndAlgebra {
    pub fn algebra(&self) -> &Arc<PathAlgebra<Rationals>> {
        &self.presentation.algebra
    }

    pub fn basis(&self, i: usize, j: usize) -> &[ModuleMorphism<Rationals>] {
        &self.bases[i][j]
    }

    /// Realize a hom-coordinate vector as an actual module morphism.
    pub fn realize_class(&self, i: usize, j: usize, coords: &[num_rational::BigRational]) -> ModuleMorphism<Rationals> {
        let f = Rationals;
        let mut acc = ModuleMorphism::zero(&self.summands[i], &self.summands[j]);
        for (k, c) in coords.iter().enumerate() {
            if !f.is_zero(c) {
                acc = acc.add(&self.bases[i][j][k].scale(c));
            }
        }
        acc
    }
}

/// Coordinates of a morphism in the chosen hom basis.
fn coords_in_basis(
    basis: &[ModuleMorphism<Rationals>],
    h: &ModuleMorphism<Rationals>,
) -> Vec<num_rational::BigRational> {
    let f = Rationals;
    let rhs = flatten_components(h);
    let mut sys = Matrix::zero(f, rhs.len(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (i, v) in flatten_components(b).iter().enumerate() {
            sys.set(i, j, v.clone());
        }
    }
    let sol = sys
        .solve(&Matrix::column(f, rhs))
        .expect("shapes agree")
        .expect("morphism lies in the hom space");
    (0..basis.len()).map(|k| sol.get(k, 0).clone()).collect()
}

/// Present End of the given generators by formal arrows with
/// multiplication-table relations. Generators must be pairwise
/// non-isomorphic indecomposables over the rationals.
pub fn end_algebra_presentation(generators: &[Rep]) -> Result<EndAlgebra> {
    if generators.is_empty() {
        return Err(Error::EnumerationScope("empty generator list".into()));
    }
    let f = Rationals;
    let n = generators.len();
    for (i, g) in generators.iter().enumerate() {
        if !is_indecomposable(g)? {
            return Err(Error::EnumerationScope(format!(
                "generator {i} is not indecomposable"
            )));
        }
        for h in generators.iter().skip(i + 1) {
            if find_isomorphism(g, h).is_some() {
                return Err(Error::EnumerationScope(
                    "generators must be pairwise non-isomorphic".into(),
                ));
            }
        }
    }
    let mut bases = Vec::with_capacity(n);
    for gi in generators {
        let mut row = Vec::with_capacity(n);
        for gj in generators {
            row.push(hom_space(gi, gj));
        }
        bases.push(row);
    }
    let hom_dims: Vec<Vec<usize>> = bases
        .iter()
        .map(|row| row.iter().map(|b| b.len()).collect())
        .collect();
    let identity: Vec<Vec<num_rational::BigRational>> = (0..n)
        .map(|i| coords_in_basis(&bases[i][i], &ModuleMorphism::identity(&generators[i])))
        .collect();
    let mut radical: Vec<Vec<Matrix<Rationals>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let m = if i == j {
                // trace-form radical inside End(G_i), in basis coordinates
                let (basis, _) = end_radical(&generators[i])?;
                debug_assert_eq!(basis.len(), bases[i][i].len());
                let nn = bases[i][i].len();
                let mut gram = Matrix::zero(f, nn, nn);
                for a in 0..nn {
                    for b in 0..nn {
                        let comp = bases[i][i][a].compose(&bases[i][i][b]);
                        let mut tr = f.zero();
                        for mat in comp.components() {
                            for d in 0..mat.rows().min(mat.cols()) {
                                tr = f.add(&tr, mat.get(d, d));
                            }
                        }
                        gram.set(a, b, tr);
                    }
                }
                gram.kernel_basis()
            } else {
                Matrix::identity(f, bases[i][j].len())
            };
            row.push(m);
        }
        radical.push(row);
    }
    let labels: Vec<String> = (0..n).map(|i| format!("G{i}")).collect();
    let bases_ref = &bases;
    let compose = move |x: usize,
                        y: usize,
                        z: usize,
                        fv: &[num_rational::BigRational],
                        gv: &[num_rational::BigRational]|
          -> Vec<num_rational::BigRational> {
        let fr = Rationals;
        let mut fm = ModuleMorphism::zero(&generators[x], &generators[y]);
        for (k, c) in fv.iter().enumerate() {
            if !fr.is_zero(c) {
                fm = fm.add(&bases_ref[x][y][k].scale(c));
            }
        }
        let mut gm = ModuleMorphism::zero(&generators[y], &generators[z]);
        for (k, c) in gv.iter().enumerate() {
            if !fr.is_zero(c) {
                gm = gm.add(&bases_ref[y][z][k].scale(c));
            }
        }
        coords_in_basis(&bases_ref[x][z], &gm.compose(&fm))
    };
    let presentation = present_by_table(f, labels, &hom_dims, &identity, &radical, &compose)?;
    let op = presentation.algebra.opposite();
    Ok(EndAlgebra {
        summands: generators.to_vec(),
        presentation,
        op,
        bases,
    })
}

/// Data carried by the transfer of one maps object: the module over the
/// opposite endomorphism algebra together with the per-summand cokernel
/// projections, which is what morphisms transfer through.
pub struct PhiImage {
    pub module: Rep,
    projections: Vec<Matrix<Rationals>>,
}

fn hom_matrix_of_postcomposition(
    basis_src: &[ModuleMorphism<Rationals>],
    basis_tgt: &[ModuleMorphism<Rationals>],
    h: &ModuleMorphism<Rationals>,
) -> Matrix<Rationals> {
    let f = Rationals;
    let mut m = Matrix::zero(f, basis_tgt.len(), basis_src.len());
    for (j, u) in basis_src.iter().enumerate() {
        let col = coords_in_basis(basis_tgt, &h.compose(u));
        for (r, v) in col.iter().enumerate() {
            m.set(r, j, v.clone());
        }
    }
    m
}

/// The transfer of a maps object: per generator the cokernel of composing
/// with the structure map, assembled into a module over the opposite
/// presented endomorphism algebra.
pub fn phi_transfer(x: &MapsObject<Rationals>, ea: &EndAlgebra) -> Result<PhiImage> {
    let f = Rationals;
    let n = ea.summands.len();
    let mut dims = vec![0usize; n];
    let mut projections = Vec::with_capacity(n);
    let mut hom_a0: Vec<Vec<ModuleMorphism<Rationals>>> = Vec::with_capacity(n);
    for i in 0..n {
        let from_a1 = hom_space(&ea.summands[i], x.a1());
        let into_a0 = hom_space(&ea.summands[i], x.a0());
        let induced = hom_matrix_of_postcomposition(&from_a1, &into_a0, x.map());
        let proj = induced.cokernel_projection();
        dims[i] = proj.rows();
        projections.push(proj);
        hom_a0.push(into_a0);
    }
    // op-arrow actions: an arrow g : i -> j of the presentation acts on the
    // opposite side by precomposition Hom(G_j, A0) -> Hom(G_i, A0)
    let op = &ea.op;
    let mut maps: Vec<Matrix<Rationals>> = Vec::new();
    for (arrow_idx, arr) in op.quiver().arrows.iter().enumerate() {
        let (i, j, payload) = &ea.presentation.arrow_payload[arrow_idx];
        // over the opposite, this arrow runs j -> i
        debug_assert_eq!((arr.source, arr.target), (*j, *i));
        let g_mor = ea.realize_class(*i, *j, payload);
        // precomposition on hom spaces
        let mut pre = Matrix::zero(f, hom_a0[*i].len(), hom_a0[*j].len());
        for (c, u) in hom_a0[*j].iter().enumerate() {
            let col = coords_in_basis(&hom_a0[*i], &u.compose(&g_mor));
            for (r, v) in col.iter().enumerate() {
                pre.set(r, c, v.clone());
            }
        }
        // descend to cokernels: solve C . proj_j = proj_i . pre
        let lhs = projections[*j].transpose();
        let rhs = projections[*i].mul(&pre).transpose();
        let sol = lhs
            .solve(&rhs)
            .expect("shapes agree")
            .ok_or_else(|| Error::InconsistentActions("transfer does not descend".into()))?
            .transpose();
        maps.push(sol);
    }
    let module = Representation::new(op.clone(), dims, maps)?;
    Ok(PhiImage { module, projections })
}

/// Transfer of a maps morphism between transferred objects.
pub fn phi_on_morphism(
    m: &MapsMorphism<Rationals>,
    src: &PhiImage,
    tgt: &PhiImage,
    ea: &EndAlgebra,
) -> Result<ModuleMorphism<Rationals>> {
    let f = Rationals;
    let n = ea.summands.len();
    let mut comps = Vec::with_capacity(n);
    for i in 0..n {
        let basis_src = hom_space(&ea.summands[i], m.source().a0());
        let basis_tgt = hom_space(&ea.summands[i], m.target().a0());
        let post = hom_matrix_of_postcomposition(&basis_src, &basis_tgt, m.h0());
        let lhs = src.projections[i].transpose();
        let rhs = tgt.projections[i].mul(&post).transpose();
        let sol = lhs
            .solve(&rhs)
            .expect("shapes agree")
            .ok_or_else(|| Error::InconsistentActions("morphism does not descend".into()))?
            .transpose();
        comps.push(sol);
    }
    let _ = f;
    ModuleMorphism::new(src.module.clone(), tgt.module.clone(), comps)
}

/// Transfer a componentwise exact sequence; under the standard hypotheses
/// (neither structure map of the outer terms splits) the image is exact and
/// is returned as a short exact sequence.
pub fn phi_on_ses(s: &MapsSES<Rationals>, ea: &EndAlgebra) -> Result<ShortExactSequence<Rationals>> {
    let left = phi_transfer(s.j.source(), ea)?;
    let mid = phi_transfer(s.j.target(), ea)?;
    let right = phi_transfer(s.p.target(), ea)?;
    let j = phi_on_morphism(&s.j, &left, &mid, ea)?;
    let p = phi_on_morphism(&s.p, &mid, &right, ea)?;
    ShortExactSequence::new(j, p)
}

/// Whether a module morphism splits on either side; transferring an
/// almost split sequence needs outer structure maps that split on neither.
pub fn splits_neither_way(h: &ModuleMorphism<Rationals>) -> bool {
    h.find_section().is_none() && h.find_retraction().is_none()
}

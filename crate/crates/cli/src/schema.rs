//! The JSON workspace format and its conversion into core values.
//!
//! One canonical schema is shared by every subcommand: fields are
//! `{"kind":"Q"}` or `{"kind":"Fp","p":<prime>}`, matrices are arrays of
//! arrays of strings ("3/2" over the rationals, decimal residues over a
//! prime field), and a morphism matrix has shape (target dim x source dim),
//! acting on column vectors. Relation paths are written in composition
//! order (rightmost arrow applied first).

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use serde::{Deserialize, Serialize};

use matcat_core::field::{Field, FieldSpec, PrimeField, Rationals};
use matcat_core::linalg::Matrix;
use matcat_core::maps::{MapsMorphism, MapsObject, MapsSES};
use matcat_core::module::{ModuleMorphism, Representation, ShortExactSequence};
use matcat_core::quiver::{PathAlgebra, Quiver, Relation, RelationSet};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDto {
    Q,
    Fp { p: u64 },
}

impl FieldDto {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldDto::Q => FieldSpec::Rationals,
            FieldDto::Fp { p } => FieldSpec::Prime(*p),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowDto {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverDto {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationTermDto {
    pub coeff: String,
    /// arrow names, rightmost applied first
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDto {
    pub terms: Vec<RelationTermDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDto {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BimoduleDto {
    /// the hom bimodule of the workspace algebra
    Hom,
    /// the hom bimodule restricted to a named vertex subcategory
    RestrictedHom { subcategory: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WorkspaceDto {
    pub field: FieldDto,
    pub quiver: QuiverDto,
    #[serde(default)]
    pub relations: Vec<RelationDto>,
    pub nilpotency_bound: usize,
    #[serde(default)]
    pub allow_short_relations: bool,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDto>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleDto>,
    #[serde(default)]
    pub subcategories: BTreeMap<String, Vec<String>>,
}

/// A maps object: named or inline module ends with per-vertex matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapsObjectDto {
    pub a1: ModuleRef,
    pub a0: ModuleRef,
    #[serde(default)]
    pub f: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleRef {
    Named(String),
    Inline(ModuleDto),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleSesDto {
    pub left: ModuleRef,
    pub middle: ModuleRef,
    pub right: ModuleRef,
    #[serde(default)]
    pub j: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub p: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapsMorphismDto {
    #[serde(default)]
    pub h1: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub h0: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapsSesDto {
    pub left: MapsObjectDto,
    pub middle: MapsObjectDto,
    pub right: MapsObjectDto,
    pub j: MapsMorphismDto,
    pub p: MapsMorphismDto,
}

/// A parsed workspace over a fixed field.
pub struct Workspace<F: Field> {
    pub field: F,
    pub algebra: Arc<PathAlgebra<F>>,
    pub modules: BTreeMap<String, Representation<F>>,
    pub subcategories: BTreeMap<String, Vec<String>>,
}

pub enum AnyWorkspace {
    Q(Workspace<Rationals>),
    Fp(Workspace<PrimeField>),
}

pub fn parse_matrix<F: Field>(
    field: F,
    rows: usize,
    cols: usize,
    data: Option<&Vec<Vec<String>>>,
    what: &str,
) -> anyhow::Result<Matrix<F>> {
    match data {
        None => Ok(Matrix::zero(field, rows, cols)),
        Some(entries) => {
            if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                bail!("{what}: expected a {rows}x{cols} matrix");
            }
            let mut m = Matrix::zero(field, rows, cols);
            for (i, row) in entries.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    let v = field
                        .parse(s)
                        .map_err(|e| anyhow!("{what} entry ({i},{j}): {e}"))?;
                    m.set(i, j, v);
                }
            }
            Ok(m)
        }
    }
}

pub fn render_matrix<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    m.render_rows()
}

fn build_algebra<F: Field>(field: F, dto: &WorkspaceDto) -> anyhow::Result<Arc<PathAlgebra<F>>> {
    let quiver = Quiver::new(
        dto.quiver.vertices.clone(),
        dto.quiver
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.source.clone(), a.target.clone()))
            .collect(),
    )?;
    let mut relations = Vec::new();
    for r in &dto.relations {
        let mut terms = Vec::new();
        for t in &r.terms {
            let coeff = field.parse(&t.coeff)?;
            // JSON lists arrows in composition order; traversal order is
            // the reverse
            let mut path = Vec::with_capacity(t.path.len());
            for name in t.path.iter().rev() {
                path.push(quiver.arrow_index(name)?);
            }
            terms.push((coeff, path));
        }
        relations.push(Relation { terms });
    }
    let set = RelationSet { relations, nilpotency_bound: dto.nilpotency_bound };
    let alg = if dto.allow_short_relations {
        matcat_core::quiver::build_with_short_relations(quiver, set, field)?
    } else {
        PathAlgebra::build(quiver, set, field)?
    };
    Ok(alg)
}

pub fn module_from_dto<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    dto: &ModuleDto,
    name: &str,
) -> anyhow::Result<Representation<F>> {
    let field = alg.field();
    let n = alg.n_objects();
    let mut dims = vec![0usize; n];
    for (label, d) in &dto.dims {
        let v = alg
            .quiver()
            .vertex_index(label)
            .map_err(|_| anyhow!("module {name}: unknown vertex {label:?}"))?;
        dims[v] = *d;
    }
    let mut maps = Vec::new();
    for arr in &alg.quiver().arrows {
        let m = parse_matrix(
            field,
            dims[arr.target],
            dims[arr.source],
            dto.maps.get(&arr.name),
            &format!("module {name}, arrow {}", arr.name),
        )?;
        maps.push(m);
    }
    for key in dto.maps.keys() {
        if alg.quiver().arrow_index(key).is_err() {
            bail!("module {name}: unknown arrow {key:?}");
        }
    }
    Representation::new(alg.clone(), dims, maps)
        .with_context(|| format!("module {name} is not a representation"))
}

pub fn module_to_dto<F: Field>(x: &Representation<F>) -> ModuleDto {
    let alg = x.algebra();
    let mut dims = BTreeMap::new();
    for v in 0..alg.n_objects() {
        dims.insert(alg.object_label(v).to_string(), x.dim(v));
    }
    let mut maps = BTreeMap::new();
    for (a, arr) in alg.quiver().arrows.iter().enumerate() {
        if x.dim(arr.source) > 0 && x.dim(arr.target) > 0 {
            maps.insert(arr.name.clone(), render_matrix(x.arrow_map(a)));
        }
    }
    ModuleDto { dims, maps }
}

impl<F: Field> Workspace<F> {
    pub fn module(&self, name: &str) -> anyhow::Result<&Representation<F>> {
        self.modules
            .get(name)
            .ok_or_else(|| anyhow!("unknown module {name:?}"))
    }

    pub fn resolve_module_ref(&self, r: &ModuleRef) -> anyhow::Result<Representation<F>> {
        match r {
            ModuleRef::Named(name) => Ok(self.module(name)?.clone()),
            ModuleRef::Inline(dto) => module_from_dto(&self.algebra, dto, "<inline>"),
        }
    }

    pub fn components_from_json(
        &self,
        src: &Representation<F>,
        tgt: &Representation<F>,
        data: &BTreeMap<String, Vec<Vec<String>>>,
        what: &str,
    ) -> anyhow::Result<Vec<Matrix<F>>> {
        let alg = &self.algebra;
        for key in data.keys() {
            if alg.quiver().vertex_index(key).is_err() {
                bail!("{what}: unknown vertex {key:?}");
            }
        }
        (0..alg.n_objects())
            .map(|v| {
                parse_matrix(
                    self.field,
                    tgt.dim(v),
                    src.dim(v),
                    data.get(alg.object_label(v)),
                    &format!("{what} at vertex {}", alg.object_label(v)),
                )
            })
            .collect()
    }

    pub fn maps_object_from_dto(&self, dto: &MapsObjectDto) -> anyhow::Result<MapsObject<F>> {
        let a1 = self.resolve_module_ref(&dto.a1)?;
        let a0 = self.resolve_module_ref(&dto.a0)?;
        let comps = self.components_from_json(&a1, &a0, &dto.f, "maps object")?;
        let f = ModuleMorphism::new(a1, a0, comps).context("maps object structure map")?;
        Ok(MapsObject::new(f))
    }

    pub fn module_ses_from_dto(
        &self,
        dto: &ModuleSesDto,
    ) -> anyhow::Result<ShortExactSequence<F>> {
        let left = self.resolve_module_ref(&dto.left)?;
        let middle = self.resolve_module_ref(&dto.middle)?;
        let right = self.resolve_module_ref(&dto.right)?;
        let j = ModuleMorphism::new(
            left.clone(),
            middle.clone(),
            self.components_from_json(&left, &middle, &dto.j, "sequence inclusion")?,
        )?;
        let p = ModuleMorphism::new(
            middle,
            right.clone(),
            self.components_from_json(j.target(), &right, &dto.p, "sequence projection")?,
        )?;
        Ok(ShortExactSequence::new(j, p)?)
    }

    pub fn maps_ses_from_dto(&self, dto: &MapsSesDto) -> anyhow::Result<MapsSES<F>> {
        let left = self.maps_object_from_dto(&dto.left)?;
        let middle = self.maps_object_from_dto(&dto.middle)?;
        let right = self.maps_object_from_dto(&dto.right)?;
        let j = MapsMorphism::new(
            left.clone(),
            middle.clone(),
            ModuleMorphism::new(
                left.a1().clone(),
                middle.a1().clone(),
                self.components_from_json(left.a1(), middle.a1(), &dto.j.h1, "j.h1")?,
            )?,
            ModuleMorphism::new(
                left.a0().clone(),
                middle.a0().clone(),
                self.components_from_json(left.a0(), middle.a0(), &dto.j.h0, "j.h0")?,
            )?,
        )?;
        let p = MapsMorphism::new(
            middle.clone(),
            right.clone(),
            ModuleMorphism::new(
                middle.a1().clone(),
                right.a1().clone(),
                self.components_from_json(middle.a1(), right.a1(), &dto.p.h1, "p.h1")?,
            )?,
            ModuleMorphism::new(
                middle.a0().clone(),
                right.a0().clone(),
                self.components_from_json(middle.a0(), right.a0(), &dto.p.h0, "p.h0")?,
            )?,
        )?;
        Ok(MapsSES::new(j, p)?)
    }

    pub fn subcategory_vertices(&self, name: &str) -> anyhow::Result<Vec<usize>> {
        let labels = self
            .subcategories
            .get(name)
            .ok_or_else(|| anyhow!("unknown subcategory {name:?}"))?;
        labels
            .iter()
            .map(|l| {
                self.algebra
                    .quiver()
                    .vertex_index(l)
                    .map_err(|_| anyhow!("subcategory {name:?}: unknown vertex {l:?}"))
            })
            .collect()
    }

    pub fn subcategory_modules(&self, name: &str) -> anyhow::Result<Vec<Representation<F>>> {
        let names = self
            .subcategories
            .get(name)
            .ok_or_else(|| anyhow!("unknown subcategory {name:?}"))?;
        names.iter().map(|n| Ok(self.module(n)?.clone())).collect()
    }
}

fn workspace_over<F: Field>(field: F, dto: &WorkspaceDto) -> anyhow::Result<Workspace<F>> {
    let algebra = build_algebra(field, dto)?;
    let mut modules = BTreeMap::new();
    for (name, mdto) in &dto.modules {
        modules.insert(name.clone(), module_from_dto(&algebra, mdto, name)?);
    }
    for (name, b) in &dto.bimodules {
        if let BimoduleDto::RestrictedHom { subcategory } = b {
            if !dto.subcategories.contains_key(subcategory) {
                bail!("bimodule {name:?} references unknown subcategory {subcategory:?}");
            }
        }
    }
    Ok(Workspace {
        field,
        algebra,
        modules,
        subcategories: dto.subcategories.clone(),
    })
}

pub fn workspace_from_dto(dto: &WorkspaceDto) -> anyhow::Result<AnyWorkspace> {
    dto.field.spec().validate()?;
    match dto.field.spec() {
        FieldSpec::Rationals => Ok(AnyWorkspace::Q(workspace_over(Rationals, dto)?)),
        FieldSpec::Prime(p) => Ok(AnyWorkspace::Fp(workspace_over(PrimeField::new(p)?, dto)?)),
    }
}

pub fn load_workspace(
    path: &std::path::Path,
    field_override: Option<&str>,
) -> anyhow::Result<AnyWorkspace> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let mut dto: WorkspaceDto = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}: line {} column {}: {e}", path.display(), e.line(), e.column()))?;
    if let Some(spec) = field_override {
        dto.field = parse_field_flag(spec)?;
    }
    workspace_from_dto(&dto)
}

pub fn parse_field_flag(spec: &str) -> anyhow::Result<FieldDto> {
    if spec == "Q" {
        return Ok(FieldDto::Q);
    }
    if let Some(p) = spec.strip_prefix("Fp:") {
        return Ok(FieldDto::Fp { p: p.parse().context("prime in --field")? });
    }
    bail!("--field must be Q or Fp:<prime>")
}

pub fn load_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}: line {} column {}: {e}", path.display(), e.line(), e.column()))
}

//! Subcommand implementations. Exit codes: 0 = success or verified,
//! 1 = refuted or a failed check, 2 = input error (handled by main).

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail};
use serde::Serialize;

use matcat_core::approx::{
    approximate_addg_module, certify_maps_approximation, left_epi_approximation,
    left_mono_approximation, right_epi_approximation, right_mono_approximation, Certification,
    Direction,
};
use matcat_core::bimodule::doubled_maps_algebra;
use matcat_core::field::{Field, Rationals};
use matcat_core::maps::{
    ar_sequence_from_module, enumerate_maps_indecomposables, maps_tau, verify_almost_split,
    ArVariant, MapsMorphism, MapsObject, MapsSES,
};
use matcat_core::module::{hom_space, tau, Representation};
use matcat_core::quiver::PathAlgebra;
use matcat_core::recollement::{
    build_recollement, check_compatibility_and_induce, check_recollement,
    restricted_hom_bimodule, SubcategoryDatum,
};

use crate::schema::{
    module_to_dto, render_matrix, AnyWorkspace, MapsMorphismDto, MapsObjectDto, MapsSesDto,
    ModuleRef, ModuleSesDto, QuiverDto, Workspace,
};

fn dims_map<F: Field>(x: &Representation<F>) -> BTreeMap<String, usize> {
    let alg = x.algebra();
    (0..alg.n_objects())
        .map(|v| (alg.object_label(v).to_string(), x.dim(v)))
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

pub fn cmd_hom(ws: &AnyWorkspace, names: &[String], json: bool) -> anyhow::Result<i32> {
    if names.len() != 2 {
        bail!("hom needs exactly two module names (-m X -m Y)");
    }
    match ws {
        AnyWorkspace::Q(w) => hom_impl(w, names, json),
        AnyWorkspace::Fp(w) => hom_impl(w, names, json),
    }
}

fn hom_impl<F: Field>(w: &Workspace<F>, names: &[String], json: bool) -> anyhow::Result<i32> {
    let x = w.module(&names[0])?;
    let y = w.module(&names[1])?;
    let basis = hom_space(x, y);
    if json {
        #[derive(Serialize)]
        struct HomOut {
            dim: usize,
            basis: Vec<BTreeMap<String, Vec<Vec<String>>>>,
        }
        let basis_out = basis
            .iter()
            .map(|h| {
                let alg = w.algebra.clone();
                (0..alg.n_objects())
                    .map(|v| {
                        (
                            alg.object_label(v).to_string(),
                            render_matrix(h.component(v)),
                        )
                    })
                    .collect()
            })
            .collect();
        print_json(&HomOut { dim: basis.len(), basis: basis_out })?;
    } else {
        println!("dim Hom({}, {}) = {}", names[0], names[1], basis.len());
        for (i, h) in basis.iter().enumerate() {
            println!("basis[{i}]:");
            for v in 0..w.algebra.n_objects() {
                if h.component(v).rows() * h.component(v).cols() > 0 {
                    println!(
                        "  at {}: {:?}",
                        w.algebra.object_label(v),
                        render_matrix(h.component(v))
                    );
                }
            }
        }
    }
    Ok(0)
}

pub fn cmd_tau(ws: &AnyWorkspace, name: &str, json: bool) -> anyhow::Result<i32> {
    match ws {
        AnyWorkspace::Q(w) => tau_impl(w, name, json),
        AnyWorkspace::Fp(w) => tau_impl(w, name, json),
    }
}

fn tau_impl<F: Field>(w: &Workspace<F>, name: &str, json: bool) -> anyhow::Result<i32> {
    let x = w.module(name)?;
    let op = w.algebra.opposite();
    let t = tau(x, &op);
    if json {
        print_json(&module_to_dto(&t))?;
    } else {
        let dims = dims_map(&t)
            .into_iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect::<Vec<_>>()
            .join(", ");
        println!("tau({name}) = module with dims {{{dims}}}");
    }
    Ok(0)
}

fn maps_object_to_dto<F: Field>(x: &MapsObject<F>) -> MapsObjectDto {
    let alg = x.algebra();
    let mut f = BTreeMap::new();
    for v in 0..alg.n_objects() {
        if x.a1().dim(v) > 0 && x.a0().dim(v) > 0 {
            f.insert(
                alg.object_label(v).to_string(),
                render_matrix(x.map().component(v)),
            );
        }
    }
    MapsObjectDto {
        a1: ModuleRef::Inline(module_to_dto(x.a1())),
        a0: ModuleRef::Inline(module_to_dto(x.a0())),
        f,
    }
}

fn maps_morphism_to_dto<F: Field>(m: &MapsMorphism<F>) -> MapsMorphismDto {
    let alg = m.source().algebra();
    let mut h1 = BTreeMap::new();
    let mut h0 = BTreeMap::new();
    for v in 0..alg.n_objects() {
        if m.h1().component(v).rows() * m.h1().component(v).cols() > 0 {
            h1.insert(
                alg.object_label(v).to_string(),
                render_matrix(m.h1().component(v)),
            );
        }
        if m.h0().component(v).rows() * m.h0().component(v).cols() > 0 {
            h0.insert(
                alg.object_label(v).to_string(),
                render_matrix(m.h0().component(v)),
            );
        }
    }
    MapsMorphismDto { h1, h0 }
}

fn maps_ses_to_dto<F: Field>(s: &MapsSES<F>) -> MapsSesDto {
    MapsSesDto {
        left: maps_object_to_dto(s.j.source()),
        middle: maps_object_to_dto(s.j.target()),
        right: maps_object_to_dto(s.p.target()),
        j: maps_morphism_to_dto(&s.j),
        p: maps_morphism_to_dto(&s.p),
    }
}

pub fn cmd_maps_tau(ws: &AnyWorkspace, maps_path: &Path, json: bool) -> anyhow::Result<i32> {
    match ws {
        AnyWorkspace::Q(w) => maps_tau_impl(w, maps_path, json),
        AnyWorkspace::Fp(w) => maps_tau_impl(w, maps_path, json),
    }
}

fn maps_tau_impl<F: Field>(w: &Workspace<F>, maps_path: &Path, json: bool) -> anyhow::Result<i32> {
    let dto: MapsObjectDto = crate::schema::load_json(maps_path)?;
    let x = w.maps_object_from_dto(&dto)?;
    let op = w.algebra.opposite();
    let data = maps_tau(&x, &op);
    if json {
        #[derive(Serialize)]
        struct TauOut {
            tau: MapsObjectDto,
            closed_form_certified: bool,
        }
        print_json(&TauOut {
            tau: maps_object_to_dto(&data.tau),
            closed_form_certified: data.closed_form.is_some(),
        })?;
    } else {
        println!(
            "Tau: a1 dims {:?}, a0 dims {:?}, closed form certified: {}",
            dims_map(data.tau.a1()),
            dims_map(data.tau.a0()),
            data.closed_form.is_some()
        );
    }
    Ok(0)
}

pub fn cmd_ar_seq(
    ws: &AnyWorkspace,
    seq_path: &Path,
    variant: &str,
    json: bool,
) -> anyhow::Result<i32> {
    let variant = ArVariant::parse(variant)?;
    match ws {
        AnyWorkspace::Q(w) => ar_seq_impl(w, seq_path, variant, json),
        AnyWorkspace::Fp(w) => ar_seq_impl(w, seq_path, variant, json),
    }
}

fn ar_seq_impl<F: Field>(
    w: &Workspace<F>,
    seq_path: &Path,
    variant: ArVariant,
    json: bool,
) -> anyhow::Result<i32> {
    let dto: ModuleSesDto = crate::schema::load_json(seq_path)?;
    let ses = w.module_ses_from_dto(&dto)?;
    let op = w.algebra.opposite();
    let lifted = ar_sequence_from_module(&ses, variant, &op)?;
    if json {
        print_json(&maps_ses_to_dto(&lifted))?;
    } else {
        println!(
            "lifted sequence: ({:?} -> {:?}) >-> ({:?} -> {:?}) ->> ({:?} -> {:?})",
            dims_map(lifted.j.source().a1()),
            dims_map(lifted.j.source().a0()),
            dims_map(lifted.j.target().a1()),
            dims_map(lifted.j.target().a0()),
            dims_map(lifted.p.target().a1()),
            dims_map(lifted.p.target().a0()),
        );
    }
    Ok(0)
}

pub fn cmd_verify_ar(ws: &AnyWorkspace, seq_path: &Path, json: bool) -> anyhow::Result<i32> {
    match ws {
        AnyWorkspace::Q(w) => {
            let dto: MapsSesDto = crate::schema::load_json(seq_path)?;
            let ses = w.maps_ses_from_dto(&dto)?;
            let doubled = doubled_maps_algebra(&w.algebra)?;
            let indecs = enumerate_maps_indecomposables(&doubled)?;
            let report = verify_almost_split(&ses, &indecs)?;
            if json {
                #[derive(Serialize)]
                struct VerifyOut {
                    verified: bool,
                    end_indecomposable: bool,
                    first_indecomposable: bool,
                    non_split: bool,
                    tested_morphisms: usize,
                    failed_factorizations: usize,
                }
                print_json(&VerifyOut {
                    verified: report.verified,
                    end_indecomposable: report.end_indecomposable,
                    first_indecomposable: report.first_indecomposable,
                    non_split: report.non_split,
                    tested_morphisms: report.tested_morphisms,
                    failed_factorizations: report.failed_factorizations,
                })?;
            } else if report.verified {
                println!(
                    "verified almost split ({} factorizations checked)",
                    report.tested_morphisms
                );
            } else {
                if !report.non_split {
                    println!("not almost split: section found");
                }
                if !report.end_indecomposable {
                    println!("not almost split: end term decomposes");
                }
                if !report.first_indecomposable {
                    println!("not almost split: first term decomposes");
                }
                if report.failed_factorizations > 0 {
                    println!(
                        "not almost split: {} factorizations missing",
                        report.failed_factorizations
                    );
                }
            }
            Ok(if report.verified { 0 } else { 1 })
        }
        AnyWorkspace::Fp(_) => bail!("verify-ar needs the rationals (endomorphism radicals)"),
    }
}

fn quiver_to_dto<F: Field>(alg: &PathAlgebra<F>) -> (QuiverDto, Vec<crate::schema::RelationDto>) {
    let field = alg.field();
    let q = QuiverDto {
        vertices: alg.quiver().vertices.clone(),
        arrows: alg
            .quiver()
            .arrows
            .iter()
            .map(|a| crate::schema::ArrowDto {
                name: a.name.clone(),
                source: alg.quiver().vertices[a.source].clone(),
                target: alg.quiver().vertices[a.target].clone(),
            })
            .collect(),
    };
    let relations = alg
        .relations()
        .relations
        .iter()
        .map(|r| crate::schema::RelationDto {
            terms: r
                .terms
                .iter()
                .map(|(c, path)| crate::schema::RelationTermDto {
                    coeff: field.render(c),
                    path: path
                        .iter()
                        .rev()
                        .map(|&a| alg.quiver().arrows[a].name.clone())
                        .collect(),
                })
                .collect(),
        })
        .collect();
    (q, relations)
}

pub fn cmd_maps_algebra(ws: &AnyWorkspace, json: bool) -> anyhow::Result<i32> {
    match ws {
        AnyWorkspace::Q(w) => maps_algebra_impl(w, json),
        AnyWorkspace::Fp(w) => maps_algebra_impl(w, json),
    }
}

#[derive(Serialize)]
struct EmittedAlgebra {
    field: crate::schema::FieldDto,
    quiver: QuiverDto,
    relations: Vec<crate::schema::RelationDto>,
    nilpotency_bound: usize,
    allow_short_relations: bool,
}

fn maps_algebra_impl<F: Field>(w: &Workspace<F>, json: bool) -> anyhow::Result<i32> {
    let doubled = doubled_maps_algebra(&w.algebra)?;
    let alg = doubled.algebra();
    let (quiver, relations) = quiver_to_dto(alg);
    let out = EmittedAlgebra {
        field: match w.field.characteristic() {
            0 => crate::schema::FieldDto::Q,
            p => crate::schema::FieldDto::Fp { p },
        },
        quiver,
        relations,
        nilpotency_bound: alg.relations().nilpotency_bound,
        allow_short_relations: true,
    };
    if json {
        print_json(&out)?;
    } else {
        println!(
            "doubled algebra: {} vertices, {} arrows, {} relations, total dim {}",
            alg.n_objects(),
            alg.quiver().arrows.len(),
            alg.relations().relations.len(),
            alg.total_dim()
        );
        println!("{}", serde_json::to_string_pretty(&out)?);
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckOut {
    name: String,
    passed: bool,
    counterexample: Option<String>,
}

pub fn cmd_recollement_check(
    ws: &AnyWorkspace,
    sub: &str,
    induced: bool,
    json: bool,
) -> anyhow::Result<i32> {
    match ws {
        AnyWorkspace::Q(w) => {
            let vertices = w.subcategory_vertices(sub)?;
            let datum = SubcategoryDatum::new(w.algebra.clone(), vertices)?;
            let rec = build_recollement(&datum)?;
            let testset = matcat_core::enumerate::enumerate_indecomposables(&w.algebra)?;
            let mut checks: Vec<CheckOut> = Vec::new();
            let report = check_recollement(&rec, &testset)?;
            checks.extend(report.checks.iter().map(|c| CheckOut {
                name: c.name.clone(),
                passed: c.passed,
                counterexample: c.counterexample.clone(),
            }));
            let mut all = report.all_passed();
            if induced {
                let m = restricted_hom_bimodule(&rec, &w.algebra);
                let out = check_compatibility_and_induce(&rec, m)?;
                checks.extend(out.report.checks.iter().map(|c| CheckOut {
                    name: c.name.clone(),
                    passed: c.passed,
                    counterexample: c.counterexample.clone(),
                }));
                all &= out.report.all_passed();
            }
            emit_checks(&checks, all, json)?;
            Ok(if all { 0 } else { 1 })
        }
        AnyWorkspace::Fp(w) => {
            if induced {
                bail!("the induced recollement checks need the rationals");
            }
            let vertices = w.subcategory_vertices(sub)?;
            let datum = SubcategoryDatum::new(w.algebra.clone(), vertices)?;
            let rec = build_recollement(&datum)?;
            let op = w.algebra.opposite();
            let mut testset = Vec::new();
            for v in 0..w.algebra.n_objects() {
                testset.push(matcat_core::module::projective(&w.algebra, v));
                testset.push(matcat_core::module::injective(&w.algebra, &op, v));
                testset.push(matcat_core::module::simple(&w.algebra, v));
            }
            let report = check_recollement(&rec, &testset)?;
            let checks: Vec<CheckOut> = report
                .checks
                .iter()
                .map(|c| CheckOut {
                    name: c.name.clone(),
                    passed: c.passed,
                    counterexample: c.counterexample.clone(),
                })
                .collect();
            emit_checks(&checks, report.all_passed(), json)?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn emit_checks(checks: &[CheckOut], all: bool, json: bool) -> anyhow::Result<()> {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            all_passed: bool,
            checks: &'a [CheckOut],
        }
        print_json(&Out { all_passed: all, checks })?;
    } else {
        for c in checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            match &c.counterexample {
                Some(w) if !c.passed => println!("[{status}] {} ({w})", c.name),
                _ => println!("[{status}] {}", c.name),
            }
        }
        println!("{}: {} checks", if all { "ok" } else { "failed" }, checks.len());
    }
    Ok(())
}

pub enum ApproxKind {
    AddG,
    EpiLeft,
    EpiRight,
    MonoLeft,
    MonoRight,
}

impl ApproxKind {
    pub fn parse(s: &str) -> anyhow::Result<Self> {
        Ok(match s {
            "addg" => ApproxKind::AddG,
            "epi-left" => ApproxKind::EpiLeft,
            "epi-right" => ApproxKind::EpiRight,
            "mono-left" => ApproxKind::MonoLeft,
            "mono-right" => ApproxKind::MonoRight,
            other => bail!("unknown approximation kind {other:?}"),
        })
    }
}

pub fn cmd_approx(
    ws: &AnyWorkspace,
    kind: &str,
    module: Option<&str>,
    maps_path: Option<&Path>,
    sub: Option<&str>,
    direction: &str,
    json: bool,
) -> anyhow::Result<i32> {
    let kind = ApproxKind::parse(kind)?;
    let direction = Direction::parse(direction)?;
    match (ws, kind) {
        (AnyWorkspace::Q(w), ApproxKind::AddG) => {
            let name = module.ok_or_else(|| anyhow!("addg needs -m <module>"))?;
            let sub = sub.ok_or_else(|| anyhow!("addg needs --sub <generator list>"))?;
            let m = w.module(name)?.clone();
            let gens = w.subcategory_modules(sub)?;
            let (_cand, cert) = approximate_addg_module(&m, &gens, direction);
            emit_certification(&cert, json)
        }
        (AnyWorkspace::Fp(w), ApproxKind::AddG) => {
            let name = module.ok_or_else(|| anyhow!("addg needs -m <module>"))?;
            let sub = sub.ok_or_else(|| anyhow!("addg needs --sub <generator list>"))?;
            let m = w.module(name)?.clone();
            let gens = w.subcategory_modules(sub)?;
            let (_cand, cert) = approximate_addg_module(&m, &gens, direction);
            emit_certification(&cert, json)
        }
        (AnyWorkspace::Q(w), kind) => {
            let path = maps_path.ok_or_else(|| anyhow!("this kind needs --maps <file>"))?;
            let dto: MapsObjectDto = crate::schema::load_json(path)?;
            let x = w.maps_object_from_dto(&dto)?;
            let op = w.algebra.opposite();
            let doubled = doubled_maps_algebra(&w.algebra)?;
            let indecs = enumerate_maps_indecomposables(&doubled)?;
            let (candidate, generators, dir) = match kind {
                ApproxKind::EpiRight => (
                    right_epi_approximation(&x),
                    epi_generators(&indecs),
                    Direction::Right,
                ),
                ApproxKind::EpiLeft => (
                    left_epi_approximation(&x),
                    epi_generators(&indecs),
                    Direction::Left,
                ),
                ApproxKind::MonoLeft => (
                    left_mono_approximation(&x),
                    mono_generators(&indecs),
                    Direction::Left,
                ),
                ApproxKind::MonoRight => (
                    right_mono_approximation(&x, &op),
                    mono_generators(&indecs),
                    Direction::Right,
                ),
                ApproxKind::AddG => unreachable!(),
            };
            let cert = certify_maps_approximation(&candidate, &generators, dir);
            emit_certification(&cert, json)
        }
        (AnyWorkspace::Fp(_), _) => {
            bail!("epi/mono approximations need the rationals (indecomposable enumeration)")
        }
    }
}

fn epi_generators(indecs: &[MapsObject<Rationals>]) -> Vec<MapsObject<Rationals>> {
    indecs.iter().filter(|x| x.map().is_epi()).cloned().collect()
}

fn mono_generators(indecs: &[MapsObject<Rationals>]) -> Vec<MapsObject<Rationals>> {
    indecs.iter().filter(|x| x.map().is_mono()).cloned().collect()
}

fn emit_certification<T>(cert: &Certification<T>, json: bool) -> anyhow::Result<i32> {
    match cert {
        Certification::Certified { tested, .. } => {
            if json {
                #[derive(Serialize)]
                struct Out {
                    certified: bool,
                    tested: usize,
                }
                print_json(&Out { certified: true, tested: *tested })?;
            } else {
                println!("certified: all {tested} generator morphisms factor exactly");
            }
            Ok(0)
        }
        Certification::Refuted { failing_index, description } => {
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    certified: bool,
                    failing_index: usize,
                    description: &'a str,
                }
                print_json(&Out { certified: false, failing_index: *failing_index, description })?;
            } else {
                println!("refuted: test morphism {failing_index}: {description}");
            }
            Ok(1)
        }
    }
}

pub fn cmd_selftest(json: bool) -> anyhow::Result<i32> {
    let results = matcat_core::selftest::run_all();
    let all = results.iter().all(|r| r.passed);
    if json {
        #[derive(Serialize)]
        struct Out {
            number: usize,
            name: String,
            passed: bool,
            detail: String,
        }
        let rows: Vec<Out> = results
            .into_iter()
            .map(|r| Out { number: r.number, name: r.name, passed: r.passed, detail: r.detail })
            .collect();
        print_json(&rows)?;
    } else {
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("criterion {:>2} [{status}] {} - {}", r.number, r.name, r.detail);
        }
    }
    Ok(if all { 0 } else { 1 })
}

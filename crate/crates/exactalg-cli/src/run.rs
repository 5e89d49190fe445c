//! The subcommand implementations. Each returns the human-readable
//! summary lines, the result document, and whether the run counts as a
//! verification failure (exit code 2). Negative mathematical *answers*
//! (an algebra that is not exact, a module that is not projective) are
//! successful runs; failed *checks* (axiom violations, disagreeing
//! cross-computations, failing law suites) are not.

use std::io::Read;

use exactalg_core::hopf::{regular_module, HopfAlgebra};
use exactalg_core::kleisli::KleisliContext;
use exactalg_core::modalg::{
    act_module, regular_module_object, AModuleObject, IdealObject, ModuleAlgebra,
};
use exactalg_core::smash::{is_c_projective, skryabin_check, smash};
use exactalg_core::subspace::enumerate_subspaces;
use exactalg_core::{Error, Subspace};

use crate::doc::{
    field_name, parse_document, parse_field, AlgebraData, Body, Document, HopfData,
    ModuleAlgebraData, ReportData, SubspaceData, Verdict,
};
use crate::examples::{self, Instance};
use crate::verify;
use crate::{failure, usage, CliResult};

#[derive(Debug, Clone)]
pub struct Options {
    pub field: Option<String>,
    /// Kleisli probe depth; when set, radical commands cross-validate
    /// against the probe-category route.
    pub probes: Option<usize>,
    pub enum_bound: u128,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            field: None,
            probes: None,
            enum_bound: 1 << 20,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub summary: Vec<String>,
    pub document: Document,
    pub failed: bool,
}

impl Outcome {
    fn ok(summary: Vec<String>, document: Document) -> Outcome {
        Outcome {
            summary,
            document,
            failed: false,
        }
    }
}

/// Anything a command can take as input: a registry name, a path to a
/// document, or `-` for standard input.
pub enum Input {
    Algebra(exactalg_core::algebra::Algebra),
    Hopf(HopfAlgebra),
    ModuleAlgebra(ModuleAlgebra),
    ModuleObject(AModuleObject),
    Subspace(Subspace),
    Other(Document),
}

pub fn load(source: &str, opts: &Options) -> CliResult<(Input, String)> {
    if examples::is_example(source) {
        let field = opts.field.as_deref().map(parse_field).transpose()?;
        return Ok(match examples::build(source, field)? {
            Instance::ModuleAlgebra(ma) => (Input::ModuleAlgebra(ma), source.to_string()),
            Instance::Hopf(h) => (Input::Hopf(h), source.to_string()),
        });
    }
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| usage(format!("cannot read {source}: {e}")))?
    };
    let doc = parse_document(&text)?;
    let input = match &doc.body {
        Body::Algebra(d) => Input::Algebra(d.to_core()?),
        Body::Hopf(d) => Input::Hopf(d.to_core()?),
        Body::ModuleAlgebra(d) => Input::ModuleAlgebra(d.to_core()?),
        Body::ModuleObject(d) => Input::ModuleObject(d.to_core()?),
        Body::Subspace(d) => Input::Subspace(d.to_core()?),
        Body::Field(_) | Body::Report(_) => Input::Other(doc),
    };
    let id = if source == "-" {
        String::from("stdin")
    } else {
        source.to_string()
    };
    Ok((input, id))
}

fn want_module_algebra(input: Input, id: &str) -> CliResult<ModuleAlgebra> {
    match input {
        Input::ModuleAlgebra(ma) => {
            let report = ma.check();
            if report.ok() {
                Ok(ma)
            } else {
                Err(usage(format!(
                    "{id} violates {} module-algebra axioms; run the check command for the list",
                    report.violations.len()
                )))
            }
        }
        _ => Err(usage(format!("{id} is not a module algebra document"))),
    }
}

fn report_doc(command: &str, instance: &str) -> ReportData {
    ReportData {
        command: command.to_string(),
        instance: instance.to_string(),
        results: serde_json::Map::new(),
        verdicts: Vec::new(),
    }
}

pub fn example(name: &str, opts: &Options) -> CliResult<Outcome> {
    let field = opts.field.as_deref().map(parse_field).transpose()?;
    let (summary, body) = match examples::build(name, field)? {
        Instance::ModuleAlgebra(ma) => {
            let report = ma.check();
            if !report.ok() {
                return Err(failure(format!(
                    "registry instance {name} violates {} axioms",
                    report.violations.len()
                )));
            }
            let line = format!(
                "{name}: module algebra of dimension {} over a Hopf algebra of dimension {}, field {}",
                ma.dim(),
                ma.hopf().dim(),
                field_name(ma.algebra().field()),
            );
            (line, Body::ModuleAlgebra(ModuleAlgebraData::from_core(&ma)))
        }
        Instance::Hopf(h) => {
            let report = h.check();
            if !report.ok() {
                return Err(failure(format!(
                    "registry instance {name} violates {} axioms",
                    report.violations.len()
                )));
            }
            let line = format!(
                "{name}: Hopf algebra of dimension {} over {}, {}",
                h.dim(),
                field_name(h.field()),
                if h.is_cocommutative() {
                    "cocommutative"
                } else {
                    "not cocommutative"
                },
            );
            (line, Body::Hopf(HopfData::from_core(&h)))
        }
    };
    Ok(Outcome::ok(vec![summary], Document::new(body)))
}

pub fn check(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let (what, violations): (&str, Vec<String>) = match &input {
        Input::Algebra(a) => (
            "algebra",
            a.check().violations.iter().map(|v| v.to_string()).collect(),
        ),
        Input::Hopf(h) => (
            "hopf",
            h.check().violations.iter().map(|v| v.to_string()).collect(),
        ),
        Input::ModuleAlgebra(ma) => (
            "module_algebra",
            ma.check().violations.iter().map(|v| v.to_string()).collect(),
        ),
        Input::ModuleObject(m) => (
            "module_object",
            m.check().violations.iter().map(|v| v.to_string()).collect(),
        ),
        Input::Subspace(_) => ("subspace", Vec::new()),
        Input::Other(doc) => (doc.kind(), Vec::new()),
    };
    let ok = violations.is_empty();
    let mut report = report_doc("check", &id);
    report.results.insert("kind".into(), what.into());
    report.results.insert("ok".into(), ok.into());
    report
        .results
        .insert("violations".into(), violations.clone().into());
    let mut summary = vec![if ok {
        format!("{id}: every {what} axiom holds")
    } else {
        format!("{id}: {} axiom violations", violations.len())
    }];
    summary.extend(violations.iter().take(10).map(|v| format!("  {v}")));
    Ok(Outcome {
        summary,
        document: Document::new(Body::Report(report)),
        failed: !ok,
    })
}

pub fn radical(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let algebra = match input {
        Input::Algebra(a) => {
            let report = a.check();
            if !report.ok() {
                return Err(usage(format!(
                    "{id} violates {} algebra axioms",
                    report.violations.len()
                )));
            }
            a
        }
        Input::Hopf(h) => h.algebra().clone(),
        other => want_module_algebra(other, &id)?.algebra().clone(),
    };
    let rad = algebra.radical()?;
    let summary = vec![format!(
        "radical of {id}: dimension {} of {}",
        rad.space().dim(),
        algebra.dim()
    )];
    let doc = Document::new(Body::Subspace(SubspaceData::from_core(rad.space())));
    Ok(Outcome::ok(summary, doc))
}

pub fn c_radical(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let rad = ma.c_module_radical()?;
    let mut summary = vec![format!(
        "equivariant radical of {id}: dimension {} of {}",
        rad.dim(),
        ma.dim()
    )];
    let mut failed = false;
    if let Some(powers) = opts.probes {
        let ctx = KleisliContext::new(&ma, powers)?;
        let other = ctx.c_module_radical_kleisli()?;
        if other.space() == rad.space() {
            summary.push(format!(
                "probe-category route with {powers} probes agrees"
            ));
        } else {
            summary.push(format!(
                "probe-category route disagrees: dimension {} against {}",
                other.dim(),
                rad.dim()
            ));
            failed = true;
        }
    }
    let doc = Document::new(Body::Subspace(SubspaceData::from_core(rad.space())));
    Ok(Outcome {
        summary,
        document: doc,
        failed,
    })
}

pub fn exact(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let answer = ma.is_exact()?;
    let mut report = report_doc("exact", &id);
    report.results.insert("exact".into(), answer.into());
    let summary = vec![if answer {
        format!("{id} is exact: the equivariant radical vanishes")
    } else {
        format!("{id} is not exact")
    }];
    Ok(Outcome::ok(summary, Document::new(Body::Report(report))))
}

pub fn decompose(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let mut report = report_doc("decompose", &id);
    match ma.decompose_simple_factors() {
        Ok(factors) => {
            let dims: Vec<usize> = factors.iter().map(|f| f.factor.dim()).collect();
            let idempotents: Vec<Vec<String>> = factors
                .iter()
                .map(|f| f.idempotent.iter().map(|c| c.to_string()).collect())
                .collect();
            report
                .results
                .insert("factors".into(), (dims.len() as u64).into());
            report.results.insert(
                "factor_dims".into(),
                dims.iter().map(|d| *d as u64).collect::<Vec<u64>>().into(),
            );
            report.results.insert(
                "idempotents".into(),
                serde_json::to_value(&idempotents).expect("strings serialize"),
            );
            let mut summary = vec![if dims.len() == 1 {
                format!("{id} is already simple, of dimension {}", dims[0])
            } else {
                format!(
                    "{id} is a product of {} simple factors of dimensions {:?}",
                    dims.len(),
                    dims
                )
            }];
            for (k, f) in factors.iter().enumerate() {
                summary.push(format!(
                    "  factor {k}: dimension {}, central idempotent [{}]",
                    f.factor.dim(),
                    idempotents[k].join(", ")
                ));
            }
            Ok(Outcome::ok(summary, Document::new(Body::Report(report))))
        }
        Err(Error::NotExact) => {
            report.results.insert("exact".into(), false.into());
            Ok(Outcome {
                summary: vec![format!(
                    "{id} is not exact, so it is not a product of simple factors"
                )],
                document: Document::new(Body::Report(report)),
                failed: true,
            })
        }
        Err(Error::FieldExtensionNeeded(msg)) => {
            report
                .results
                .insert("field_extension_needed".into(), msg.clone().into());
            Ok(Outcome {
                summary: vec![format!("{id}: decomposition needs a field extension: {msg}")],
                document: Document::new(Body::Report(report)),
                failed: true,
            })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn quotient(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    match input {
        Input::Algebra(a) => {
            let report = a.check();
            if !report.ok() {
                return Err(usage(format!(
                    "{id} violates {} algebra axioms",
                    report.violations.len()
                )));
            }
            let rad = a.radical()?;
            let q = a.quotient(&rad);
            let summary = vec![format!(
                "semisimple quotient of {id}: dimension {} of {}",
                q.algebra.dim(),
                a.dim()
            )];
            let doc = Document::new(Body::Algebra(AlgebraData::from_core(&q.algebra)));
            Ok(Outcome::ok(summary, doc))
        }
        other => {
            let ma = want_module_algebra(other, &id)?;
            let (quot, _) = ma.semisimple_quotient()?;
            let summary = vec![format!(
                "semisimple quotient of {id}: module algebra of dimension {} of {}",
                quot.dim(),
                ma.dim()
            )];
            let doc = Document::new(Body::ModuleAlgebra(ModuleAlgebraData::from_core(&quot)));
            Ok(Outcome::ok(summary, doc))
        }
    }
}

pub fn smash_cmd(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let s = smash(&ma)?;
    let summary = vec![format!(
        "smash product of {id}: dimension {} = {} × {}, {}",
        s.dim(),
        ma.dim(),
        ma.hopf().dim(),
        if s.algebra().is_commutative() {
            "commutative"
        } else {
            "noncommutative"
        }
    )];
    let doc = Document::new(Body::Algebra(AlgebraData::from_core(s.algebra())));
    Ok(Outcome::ok(summary, doc))
}

/// The canonical module objects every module-algebra instance carries.
fn standard_modules(ma: &ModuleAlgebra) -> CliResult<Vec<(String, AModuleObject)>> {
    let regular = regular_module_object(ma);
    let free = act_module(&regular_module(ma.hopf()), &regular)?;
    Ok(vec![
        (String::from("regular"), regular),
        (String::from("H ⊳ regular"), free),
    ])
}

pub fn projective(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let modules: Vec<(String, AModuleObject)> = match input {
        Input::ModuleObject(m) => {
            let report = m.check();
            if !report.ok() {
                return Err(usage(format!(
                    "{id} violates {} module axioms",
                    report.violations.len()
                )));
            }
            vec![(id.clone(), m)]
        }
        other => standard_modules(&want_module_algebra(other, &id)?)?,
    };
    let mut report = report_doc("projective", &id);
    let mut summary = Vec::new();
    let mut answers = serde_json::Map::new();
    for (name, m) in &modules {
        let answer = is_c_projective(m)?;
        answers.insert(name.clone(), answer.into());
        summary.push(format!(
            "{name}: {}",
            if answer { "projective" } else { "not projective" }
        ));
    }
    report.results.insert("projective".into(), answers.into());
    Ok(Outcome::ok(summary, Document::new(Body::Report(report))))
}

/// All ideal objects of `ma`: exhaustively when the field is finite and
/// the lattice fits the bound, otherwise the always-available family
/// 0 ⊆ Rad ⊆ A (reported as restricted).
fn ideal_objects(
    ma: &ModuleAlgebra,
    bound: u128,
) -> CliResult<(Vec<IdealObject>, bool)> {
    let field = ma.algebra().field();
    match enumerate_subspaces(field, ma.dim(), bound) {
        Ok(spaces) => {
            let mut out = Vec::new();
            for s in spaces {
                if ma.is_ideal_object(&s) {
                    out.push(ma.ideal_object_from(s).expect("just verified"));
                }
            }
            Ok((out, true))
        }
        Err(Error::RationalEnumeration) | Err(Error::EnumerationBound { .. }) => {
            let mut out = vec![
                ma.ideal_object_from(Subspace::zero(field, ma.dim()))
                    .expect("zero is an ideal object"),
                ma.c_module_radical()?,
            ];
            out.push(
                ma.ideal_object_from(Subspace::full(field, ma.dim()))
                    .expect("the whole algebra is an ideal object"),
            );
            out.dedup_by(|a, b| a.space() == b.space());
            Ok((out, false))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn correspondence(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let ctx = KleisliContext::new(&ma, opts.probes.unwrap_or(2))?;
    let (ideals, exhaustive) = ideal_objects(&ma, opts.enum_bound)?;
    let mut verdicts = Vec::new();
    let clock = std::time::Instant::now();
    let mut elapsed = 0u64;
    let tick = |clock: &std::time::Instant, last: &mut u64| -> u64 {
        let now = clock.elapsed().as_millis() as u64;
        let step = now - *last;
        *last = now;
        step
    };
    let stables: CliResult<Vec<_>> = ideals
        .iter()
        .map(|i| ctx.ideal_to_stable(i).map_err(Into::into))
        .collect();
    let stables = stables?;
    for (k, (i, s)) in ideals.iter().zip(&stables).enumerate() {
        let name = format!("ideal {k} (dim {})", i.dim());
        let ok = ctx.roundtrip_rs(s)?;
        let ms = tick(&clock, &mut elapsed);
        verdicts.push(if ok {
            Verdict::pass("stable ideal survives the roundtrip", &name, ms)
        } else {
            Verdict::fail(
                "stable ideal survives the roundtrip",
                &name,
                "componentwise span changed",
                ms,
            )
        });
        let mixed = ctx.s_map(s)?;
        let ok = mixed.space() == i.space();
        let ms = tick(&clock, &mut elapsed);
        verdicts.push(if ok {
            Verdict::pass("the mixed subfunctor recovers the ideal object", &name, ms)
        } else {
            Verdict::fail(
                "the mixed subfunctor recovers the ideal object",
                &name,
                format!("recovered dimension {} instead of {}", mixed.dim(), i.dim()),
                ms,
            )
        });
        let ok = ctx.roundtrip_sr(&mixed)?;
        let ms = tick(&clock, &mut elapsed);
        verdicts.push(if ok {
            Verdict::pass("mixed subfunctor survives the roundtrip", &name, ms)
        } else {
            Verdict::fail(
                "mixed subfunctor survives the roundtrip",
                &name,
                "component subspace changed",
                ms,
            )
        });
    }
    for (k, (i, si)) in ideals.iter().zip(&stables).enumerate() {
        for (l, (j, sj)) in ideals.iter().zip(&stables).enumerate() {
            if j.space().contains(i.space()) {
                let ok = sj.contains(si);
                let ms = tick(&clock, &mut elapsed);
                let name = format!("ideals {k} ⊆ {l}");
                verdicts.push(if ok {
                    Verdict::pass("the correspondence is monotone", &name, ms)
                } else {
                    Verdict::fail(
                        "the correspondence is monotone",
                        &name,
                        "containment lost on a component",
                        ms,
                    )
                });
            }
            let product = ma.ideal_object_product(i, j);
            let via_ideals = ctx.ideal_to_stable(&product)?;
            let via_stables = ctx.stable_ideal_product(si, sj);
            let ok = via_ideals == via_stables;
            let ms = tick(&clock, &mut elapsed);
            let name = format!("ideals {k} · {l}");
            verdicts.push(if ok {
                Verdict::pass("products transport through the correspondence", &name, ms)
            } else {
                Verdict::fail(
                    "products transport through the correspondence",
                    &name,
                    "the two product ideals differ",
                    ms,
                )
            });
        }
    }
    let failures = verdicts.iter().filter(|v| !v.pass).count();
    let mut report = report_doc("correspondence", &id);
    report
        .results
        .insert("ideal_objects".into(), (ideals.len() as u64).into());
    report.results.insert("exhaustive".into(), exhaustive.into());
    report.verdicts = verdicts;
    let summary = vec![
        format!(
            "{id}: {} ideal objects ({}), {} laws checked, {failures} failures",
            ideals.len(),
            if exhaustive {
                "exhaustive"
            } else {
                "enumeration unavailable, canonical family only"
            },
            report.verdicts.len(),
        ),
    ];
    Ok(Outcome {
        summary,
        document: Document::new(Body::Report(report)),
        failed: failures > 0,
    })
}

pub fn skryabin(source: &str, opts: &Options) -> CliResult<Outcome> {
    let (input, id) = load(source, opts)?;
    let ma = want_module_algebra(input, &id)?;
    let modules = standard_modules(&ma)?;
    let objects: Vec<AModuleObject> = modules.iter().map(|(_, m)| m.clone()).collect();
    let report = skryabin_check(&ma, &objects, opts.enum_bound)?;
    let mut doc = report_doc("skryabin", &id);
    doc.results.insert(
        "simple".into(),
        match report.simple {
            Some(answer) => answer.into(),
            None => "unknown".into(),
        },
    );
    doc.results.insert("skipped".into(), report.skipped().into());
    let mut answers = serde_json::Map::new();
    for ((name, _), ok) in modules.iter().zip(&report.projective) {
        answers.insert(name.clone(), (*ok).into());
    }
    doc.results.insert("projective".into(), answers.into());
    let mut summary = Vec::new();
    let failed = match report.simple {
        None => {
            summary.push(format!(
                "{id}: simplicity is undecided here (enumeration unavailable); sweep skipped"
            ));
            false
        }
        Some(false) => {
            summary.push(format!("{id} is not simple; sweep skipped"));
            false
        }
        Some(true) => {
            let bad = report.counterexamples();
            if bad.is_empty() {
                summary.push(format!(
                    "{id} is simple and every standard module is projective, as they must be"
                ));
                false
            } else {
                for k in &bad {
                    summary.push(format!(
                        "{id} is simple but {} is not projective — this falsifies the implementation, not the theorem",
                        modules[*k].0
                    ));
                }
                true
            }
        }
    };
    Ok(Outcome {
        summary,
        document: Document::new(Body::Report(doc)),
        failed,
    })
}

pub fn verify_cmd(suite: &str, opts: &Options) -> CliResult<Outcome> {
    let suites = verify::resolve(suite)?;
    let results = verify::run(&suites, opts.seed, opts.enum_bound);
    let mut report = report_doc("verify", suite);
    report
        .results
        .insert("seed".into(), opts.seed.into());
    let mut summary = Vec::new();
    let mut total = 0usize;
    let mut failures = 0usize;
    for (name, verdicts) in &results {
        let bad = verdicts.iter().filter(|v| !v.pass).count();
        summary.push(format!(
            "suite {name}: {} laws, {bad} failures",
            verdicts.len()
        ));
        for v in verdicts.iter().filter(|v| !v.pass) {
            summary.push(format!(
                "  FAIL {} on {} — {}",
                v.law,
                v.instance,
                v.witness.as_deref().unwrap_or("no witness")
            ));
        }
        total += verdicts.len();
        failures += bad;
    }
    summary.push(format!("{total} laws checked, {failures} failures"));
    report.verdicts = results
        .into_iter()
        .flat_map(|(name, verdicts)| {
            verdicts.into_iter().map(move |mut v| {
                v.instance = format!("{name}:{}", v.instance);
                v
            })
        })
        .collect();
    Ok(Outcome {
        summary,
        document: Document::new(Body::Report(report)),
        failed: failures > 0,
    })
}

use std::env;
use std::fs;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{
    CatalogCommand, Command, Edges, GameCommand, KsCommand, SelftestArgs, SetSource, StateCommand,
};
use crate::report::Timer;
use crate::{Failure, Outcome};
use supersinglet_core::game::{
    classical_value_with, verify_perfect_strategy, ClassicalOptions, GameSpec,
    QuantumReferenceStrategy, DEFAULT_MAX_VERTICES,
};
use supersinglet_core::io::{parse_set_json, set_to_json, LoadedSet, SetFile};
use supersinglet_core::ks::catalog::{builtin, BUILTIN_NAMES};
use supersinglet_core::ks::{
    check_completeness, check_ks_property, complete_set, enumerate_contexts, Context,
    EdgeSemantics, Verdict,
};
use supersinglet_core::selftest::{general_d_selftest, selftest_contexts};
use supersinglet_core::supersinglet::{
    build_supersinglet, check_unitary_invariance, reexpand_in_basis, seeded_special_unitary,
};

type CmdResult = Result<Outcome, Failure>;

struct Input {
    loaded: LoadedSet,
    /// Canonical JSON of the input, hashed into the report.
    canonical: String,
}

impl Input {
    fn contexts(&self) -> Vec<Context> {
        self.loaded
            .contexts
            .clone()
            .unwrap_or_else(|| enumerate_contexts(&self.loaded.set))
    }
}

fn load_parts(set: Option<&std::path::Path>, name: Option<&str>) -> Result<Input, Failure> {
    let loaded = match (set, name) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::Usage(format!("cannot read {}: {e}", path.display()), None)
            })?;
            parse_set_json(&text)?
        }
        (None, Some(name)) => {
            let b = builtin(name)?;
            LoadedSet {
                set: b.set,
                contexts: b.contexts,
            }
        }
        (None, None) => {
            return Err(Failure::Usage(
                "one of --set or --builtin is required".into(),
                None,
            ))
        }
    };
    let canonical = set_to_json(&loaded.set, loaded.contexts.as_deref())?;
    Ok(Input { loaded, canonical })
}

fn load(source: &SetSource) -> Result<Input, Failure> {
    load_parts(source.set.as_deref(), source.builtin.as_deref())
}

fn done<T: Serialize>(
    timer: Timer,
    command: &str,
    input: &str,
    results: &T,
    success: bool,
) -> CmdResult {
    Ok(Outcome {
        report: timer.finish(command, input, results),
        success,
        raw: None,
    })
}

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Catalog(c) => catalog(c),
        Command::Ks(c) => ks(c),
        Command::State(c) => state(c),
        Command::Game(c) => game(c),
        Command::Selftest(a) => selftest(a),
    }
}

fn catalog(command: CatalogCommand) -> CmdResult {
    let timer = Timer::start();
    match command {
        CatalogCommand::List => {
            let mut sets = Vec::new();
            for name in ["ceg18", "peres24", "ck31", "merged-peres-5"] {
                let b = builtin(name)?;
                sets.push(json!({
                    "name": name,
                    "dim": b.set.dim(),
                    "vectors": b.set.len(),
                    "contexts": b.contexts.as_ref().map_or_else(|| enumerate_contexts(&b.set).len(), Vec::len),
                    "fixed_contexts": b.contexts.is_some(),
                }));
            }
            let results = json!({ "sets": sets, "names": BUILTIN_NAMES });
            done(timer, "catalog list", "", &results, true)
        }
        CatalogCommand::Export { builtin: name } => {
            let b = builtin(&name)?;
            let canonical = set_to_json(&b.set, b.contexts.as_deref())?;
            let mut outcome = done(
                timer,
                "catalog export",
                &canonical,
                &json!({ "name": name }),
                true,
            )?;
            outcome.raw = Some(canonical);
            Ok(outcome)
        }
    }
}

fn ks(command: KsCommand) -> CmdResult {
    let timer = Timer::start();
    match command {
        KsCommand::Verify {
            source,
            edges,
            enumerate,
        } => {
            let input = load(&source)?;
            let contexts = if enumerate {
                enumerate_contexts(&input.loaded.set)
            } else {
                input.contexts()
            };
            let semantics = match edges {
                Edges::All => EdgeSemantics::AllGraphEdges,
                Edges::Context => EdgeSemantics::ContextEdgesOnly,
            };
            let decision = check_ks_property(&input.loaded.set, &contexts, semantics)?;
            let results = json!({
                "verdict": decision.verdict,
                "witness": decision.witness,
                "nodes": decision.nodes,
                "vectors": input.loaded.set.len(),
                "contexts": contexts.len(),
                "edges": semantics,
            });
            done(
                timer,
                "ks verify",
                &input.canonical,
                &results,
                decision.verdict == Verdict::Uncolorable,
            )
        }
        KsCommand::Complete { source } => {
            let input = load(&source)?;
            let before = check_completeness(&input.loaded.set);
            let completed = complete_set(&input.loaded.set)?;
            let results = json!({
                "complete_before": before.complete,
                "uncovered_before": before.uncovered,
                "vectors_before": input.loaded.set.len(),
                "vectors_after": completed.len(),
                "set": SetFile::from_set(&completed, None)?,
            });
            done(timer, "ks complete", &input.canonical, &results, true)
        }
        KsCommand::Contexts { source } => {
            let input = load(&source)?;
            let contexts = enumerate_contexts(&input.loaded.set);
            let report = check_completeness(&input.loaded.set);
            let results = json!({
                "count": contexts.len(),
                "contexts": contexts,
                "complete": report.complete,
                "uncovered": report.uncovered,
            });
            done(timer, "ks contexts", &input.canonical, &results, true)
        }
    }
}

fn state(command: StateCommand) -> CmdResult {
    let timer = Timer::start();
    match command {
        StateCommand::Expand { source, context } => {
            let input = load(&source)?;
            let contexts = input.contexts();
            let c = contexts.get(context).ok_or_else(|| {
                Failure::Usage(
                    format!(
                        "context {context} out of range ({} contexts)",
                        contexts.len()
                    ),
                    None,
                )
            })?;
            let set = &input.loaded.set;
            let basis: Vec<_> = c.members().iter().map(|&v| set.vector(v).clone()).collect();
            let d = set.dim();
            let exp = reexpand_in_basis(&build_supersinglet(d)?, &basis)?;
            let terms: Vec<Value> = exp
                .coefficients
                .iter()
                .map(|(tuple, amp)| {
                    let vertices: Vec<usize> = tuple.iter().map(|&t| c.members()[t]).collect();
                    json!({
                        "tuple": vertices,
                        "labels": vertices.iter().map(|&v| set.label(v)).collect::<Vec<_>>(),
                        "sign": amp.sign(),
                        "numerator": amp.numerator,
                        "probability": amp.probability(),
                    })
                })
                .collect();
            let total = exp.total_probability();
            let results = json!({
                "context": c,
                "nonzero": terms.len(),
                "tuples_evaluated": exp.tuples_evaluated,
                "total_probability": total,
                "terms": terms,
            });
            done(
                timer,
                "state expand",
                &input.canonical,
                &results,
                total.is_one(),
            )
        }
        StateCommand::Invariance {
            d,
            seed,
            samples,
            tolerance,
            phase,
        } => {
            let mut rows = Vec::new();
            let mut all_covariant = true;
            let z = Complex64::from_polar(1.0, phase);
            for s in 0..samples {
                let mut u = seeded_special_unitary(d, seed.wrapping_add(s));
                for row in u.iter_mut() {
                    for x in row.iter_mut() {
                        *x *= z;
                    }
                }
                let r = check_unitary_invariance(d, &u, tolerance)?;
                all_covariant &= r.det_covariant();
                rows.push(json!({
                    "seed": seed.wrapping_add(s),
                    "det": [r.det_re, r.det_im],
                    "deviation_from_state": r.deviation_from_state,
                    "deviation_from_det_state": r.deviation_from_det_state,
                    "unitarity_deviation": r.unitarity_deviation,
                    "invariant": r.invariant(),
                    "det_covariant": r.det_covariant(),
                }));
            }
            let input =
                format!("d={d} seed={seed} samples={samples} tolerance={tolerance} phase={phase}");
            let results = json!({ "d": d, "tolerance": tolerance, "samples": rows, "det_covariant": all_covariant });
            done(timer, "state invariance", &input, &results, all_covariant)
        }
    }
}

fn search_budget() -> Result<usize, Failure> {
    match env::var("KS_SEARCH_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(
                format!("KS_SEARCH_BUDGET must be a vertex count, got {v:?}"),
                Some("set KS_SEARCH_BUDGET to the largest number of vertices to scan, e.g. 28"),
            )
        }),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

fn game(command: GameCommand) -> CmdResult {
    let timer = Timer::start();
    match command {
        GameCommand::QuantumVerify { source } => {
            let input = load(&source)?;
            let contexts = input.contexts();
            let spec = GameSpec::new(input.loaded.set.clone(), contexts)?;
            let strategy = QuantumReferenceStrategy::new(&spec)?;
            let r = verify_perfect_strategy(&spec, &strategy)?;
            done(
                timer,
                "game quantum-verify",
                &input.canonical,
                &r,
                r.perfect,
            )
        }
        GameCommand::ClassicalBound { source, threads } => {
            let input = load(&source)?;
            let spec = GameSpec::new(input.loaded.set.clone(), input.contexts())?;
            let options = ClassicalOptions {
                max_vertices: search_budget()?,
            };
            let r = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::Usage(format!("cannot start {n} threads: {e}"), None))?
                    .install(|| classical_value_with(&spec, options))?,
                None => classical_value_with(&spec, options)?,
            };
            done(timer, "game classical-bound", &input.canonical, &r, true)
        }
    }
}

fn parse_basis(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            Failure::Usage(
                format!("--basis expects comma-separated vertex indices, got {text:?}"),
                None,
            )
        })
}

fn selftest(args: SelftestArgs) -> CmdResult {
    let timer = Timer::start();
    if let Some(d) = args.d {
        let r = general_d_selftest(d, args.all_contexts)?;
        let input = format!("d={d} all_contexts={}", args.all_contexts);
        return done(timer, "selftest", &input, &r, r.report.unique);
    }
    let input = load_parts(args.set.as_deref(), args.builtin.as_deref())?;
    let set = &input.loaded.set;
    let mut chosen = Vec::new();
    if !args.contexts.is_empty() {
        let all = input.contexts();
        for &i in &args.contexts {
            let c = all.get(i).ok_or_else(|| {
                Failure::Usage(
                    format!("context {i} out of range ({} contexts)", all.len()),
                    None,
                )
            })?;
            chosen.push(c.clone());
        }
    }
    for b in &args.bases {
        chosen.push(Context::new(parse_basis(b)?, set)?);
    }
    if chosen.is_empty() {
        return Err(Failure::Usage(
            "choose contexts with --contexts or --basis, or use --d".into(),
            None,
        ));
    }
    let r = selftest_contexts(set, &chosen)?;
    done(timer, "selftest", &input.canonical, &r, r.unique)
}

use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use charsub::action::{
    extract_action, semidirect_product, Action, ActionBounds, ActionEnumerator, InvarianceWitness,
};
use charsub::actor::{actor, check_universal_property, faithful_quotient};
use charsub::corpus::{group_corpus, ring_like_corpus, ring_like_of_rank, Instance};
use charsub::harness::{run_table_harness, HarnessConfig};
use charsub::invariants::{
    centralizer, centre, higgins_commutator, huq_commutator, CharWitness, CharacteristicTest,
    Centraliser, Oracle, OracleWitness, WitnessMap,
};
use charsub::linalg::Matrix;
use charsub::spec_format::{emit_spec, load_spec, SpecDocument};
use charsub::subobject::{enumerate_subobjects, is_normal, DEFAULT_LATTICE_BOUND};
use charsub::{Error, FiniteAlgebra, Subobject, Variety, VarietyTag};

#[derive(Parser)]
#[command(name = "charsub", version, about = "Characteristic subobjects of finite groups, rings and Lie algebras")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check against the exhaustive action oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Largest group order enumerated: the corpus for verify-table and search,
    /// the acting groups for the oracle elsewhere.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra file.
    Validate { file: PathBuf },
    /// List the subobject lattice with normality and characteristic flags.
    Subobjects { file: PathBuf },
    /// Decide whether declared subobjects are characteristic.
    Char {
        file: PathBuf,
        /// Declared subobject to test; all of them when omitted.
        #[arg(long)]
        sub: Option<String>,
    },
    /// Commutator of two declared subobjects (the whole algebra by default).
    Commutator {
        file: PathBuf,
        #[arg(long = "sub", value_name = "NAME", num_args = 1, action = clap::ArgAction::Append)]
        subs: Vec<String>,
        #[arg(long, conflicts_with = "higgins")]
        huq: bool,
        #[arg(long)]
        higgins: bool,
    },
    Centralizer {
        file: PathBuf,
        #[arg(long)]
        sub: String,
    },
    Centre { file: PathBuf },
    /// Split extension classifier: automorphisms or derivations.
    Actor { file: PathBuf },
    /// Semidirect product of an action on FILE and its round trip back to the action.
    Semidirect {
        file: PathBuf,
        /// Acting algebra; conjugation of FILE on itself when omitted.
        #[arg(long)]
        acting: Option<PathBuf>,
        /// Position in the enumeration of actions; every action when omitted.
        #[arg(long)]
        index: Option<u64>,
    },
    /// Quotient of the acting algebra by its trivially acting part.
    FaithfulQuotient {
        file: PathBuf,
        #[arg(long)]
        acting: Option<PathBuf>,
        #[arg(long)]
        index: Option<u64>,
    },
    /// Run the property table over built-in corpora and algebra files.
    VerifyTable {
        #[arg(long, value_enum, default_value_t = CorpusKind::All)]
        corpus: CorpusKind,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
        moduli: Vec<u32>,
        files: Vec<PathBuf>,
    },
    /// Look for algebras whose derived subobject or centre is not characteristic.
    Search {
        #[arg(long, default_value = "naring")]
        variety: String,
        #[arg(long = "mod", default_value_t = 5)]
        modulus: u32,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Property::Derived)]
        property: Property,
        /// Random structure constants instead of the isomorphism-class enumeration.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorpusKind {
    None,
    Groups,
    Ring,
    Naring,
    Lie,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Derived,
    Centre,
}

/// Printed output plus whether a property violation was found.
struct Outcome {
    text: String,
    json: Value,
    /// Preformatted JSON printed verbatim instead of `json`.
    raw_json: Option<String>,
    violation: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, raw_json: None, violation: false }
    }

    fn checked(text: String, json: Value, violation: bool) -> Self {
        Outcome { text, json, raw_json: None, violation }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let (true, Some(raw)) = (cli.json, &out.raw_json) {
                print!("{raw}");
            } else if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(u8::from(out.violation))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let bounds = ActionBounds { max_group_order: cli.max_order.unwrap_or(8), ..ActionBounds::default() };
    match &cli.command {
        Command::Validate { file } => validate(&load_spec(file)?),
        Command::Subobjects { file } => subobjects(&load_spec(file)?, cli.oracle.then_some(bounds)),
        Command::Char { file, sub } => char_check(&load_spec(file)?, sub.as_deref(), cli.oracle.then_some(bounds)),
        Command::Commutator { file, subs, higgins, .. } => commutator(&load_spec(file)?, subs, *higgins),
        Command::Centralizer { file, sub } => {
            let doc = load_spec(file)?;
            let h = doc.subobject(sub)?;
            centraliser_outcome(&doc.algebra, &format!("C({sub})"), centralizer(&doc.algebra, h)?)
        }
        Command::Centre { file } => {
            let doc = load_spec(file)?;
            centraliser_outcome(&doc.algebra, "Z(G)", centre(&doc.algebra)?)
        }
        Command::Actor { file } => actor_outcome(&load_spec(file)?, cli.oracle.then_some(bounds)),
        Command::Semidirect { file, acting, index } => {
            let g = load_spec(file)?.algebra;
            semidirect(&g, acting.as_deref(), *index, bounds)
        }
        Command::FaithfulQuotient { file, acting, index } => {
            let g = load_spec(file)?.algebra;
            faithful(&g, acting.as_deref(), *index, bounds)
        }
        Command::VerifyTable { corpus, max_rank, moduli, files } => {
            let mut instances = builtin_corpus(*corpus, cli.max_order.unwrap_or(16), *max_rank, moduli)?;
            for f in files {
                instances.push(Instance { name: f.display().to_string(), algebra: load_spec(f)?.algebra });
            }
            let config = HarnessConfig {
                seed: cli.seed,
                oracle: cli.oracle.then_some(ActionBounds::default()),
                round_trip: cli.oracle.then_some(ActionBounds::default()),
                universal_property: cli.oracle.then_some(ActionBounds::default()),
                ..HarnessConfig::default()
            };
            let report = run_table_harness(&instances, &config);
            Ok(Outcome {
                text: report.to_text(),
                json: Value::Null,
                raw_json: Some(report.to_json()),
                violation: report.has_failures(),
            })
        }
        Command::Search { variety, modulus, rank, property, samples } => {
            search(variety, *modulus, *rank, *property, *samples, cli.seed, cli.max_order.unwrap_or(8))
        }
    }
}

fn builtin_corpus(kind: CorpusKind, max_order: usize, max_rank: usize, moduli: &[u32]) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    if matches!(kind, CorpusKind::Groups | CorpusKind::All) {
        out.extend(group_corpus(max_order)?);
    }
    for (k, tag) in [(CorpusKind::Ring, VarietyTag::Ring), (CorpusKind::Naring, VarietyTag::NaRing), (CorpusKind::Lie, VarietyTag::Lie)] {
        if kind == k || kind == CorpusKind::All {
            out.extend(ring_like_corpus(tag, moduli, max_rank)?);
        }
    }
    Ok(out)
}

fn header(g: &FiniteAlgebra) -> String {
    match g.rank() {
        Some(r) => format!("{} of rank {r} (order {})", g.variety(), g.order()),
        None => format!("group of order {}", g.order()),
    }
}

fn validate(doc: &SpecDocument) -> Result<Outcome, Error> {
    let g = &doc.algebra;
    let mut text = format!("valid {}\n", header(g));
    for (name, s) in &doc.subobjects {
        text.push_str(&format!("  {name} = {}\n", s.describe(g)));
    }
    let json = json!({
        "variety": g.variety().to_string(),
        "order": g.order(),
        "rank": g.rank(),
        "subobjects": doc.subobjects.iter().map(|(n, s)| json!({"name": n, "elements": s.describe(g)})).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn describe_char_witness(g: &FiniteAlgebra, w: &CharWitness) -> String {
    let map = match &w.map {
        WitnessMap::Automorphism(_) => String::new(),
        WitnessMap::Derivation(d) => format!(" D = {}", fmt_matrix(d)),
        WitnessMap::Pair(l, r) => format!(" (λ = {}, ρ = {})", fmt_matrix(l), fmt_matrix(r)),
    };
    format!("{}{map} sends {} to {}", w.generator, g.format_element(w.element), g.format_element(w.image))
}

fn describe_invariance(g: &FiniteAlgebra, b: &FiniteAlgebra, w: &InvarianceWitness) -> String {
    format!(
        "{} acting on {} ({:?}) gives {}",
        b.format_element(w.b),
        g.format_element(w.h),
        w.side,
        g.format_element(w.image)
    )
}

fn describe_oracle_witness(g: &FiniteAlgebra, oracle: &Oracle, w: &OracleWitness) -> String {
    let b = oracle.acting_algebras().iter().find(|i| i.name == w.acting).map(|i| i.algebra.clone());
    let detail = b.map_or(String::new(), |b| format!(": {}", describe_invariance(g, &b, &w.witness)));
    format!("action #{} of {}{detail}", w.action_index, w.acting)
}

fn subobjects(doc: &SpecDocument, oracle: Option<ActionBounds>) -> Result<Outcome, Error> {
    let g = &doc.algebra;
    let subs = enumerate_subobjects(g, DEFAULT_LATTICE_BOUND)?;
    let test = CharacteristicTest::new(g.clone())?;
    let fast: Vec<bool> = subs.iter().map(|s| test.check(s).map(|v| v.characteristic)).collect::<Result<_, _>>()?;
    let slow = match oracle {
        Some(b) => Some(Oracle::new(g.clone(), b)?.check_all(&subs)?),
        None => None,
    };
    let mut text = format!("{}: {} subobjects\n", header(g), subs.len());
    let mut rows = Vec::new();
    let mut violation = false;
    for (i, s) in subs.iter().enumerate() {
        let normal = is_normal(g, s);
        let agrees = slow.as_ref().map(|v| v[i].characteristic == fast[i]);
        violation |= agrees == Some(false);
        text.push_str(&format!(
            "  {:>4}  {:<8} {:<20} {}\n",
            s.len(),
            if normal { "normal" } else { "-" },
            if fast[i] { "characteristic" } else { "-" },
            s.describe(g)
        ));
        if agrees == Some(false) {
            text.push_str("        oracle disagrees\n");
        }
        rows.push(json!({"order": s.len(), "elements": s.describe(g), "normal": normal, "characteristic": fast[i], "oracle_agrees": agrees}));
    }
    Ok(Outcome::checked(text, json!({"subobjects": rows}), violation))
}

fn char_check(doc: &SpecDocument, name: Option<&str>, oracle: Option<ActionBounds>) -> Result<Outcome, Error> {
    let g = &doc.algebra;
    let targets: Vec<(String, Subobject)> = match name {
        Some(n) => vec![(n.to_string(), doc.subobject(n)?.clone())],
        None if doc.subobjects.is_empty() => return Err(Error::UnknownSubobject("(none declared)".into())),
        None => doc.subobjects.clone(),
    };
    let test = CharacteristicTest::new(g.clone())?;
    let oracle = oracle.map(|b| Oracle::new(g.clone(), b)).transpose()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut violation = false;
    for (n, h) in &targets {
        let v = test.check(h)?;
        let normal = is_normal(g, h);
        text.push_str(&format!(
            "{n} = {}: {}, {v}\n",
            h.describe(g),
            if normal { "normal" } else { "not normal" }
        ));
        let witness = v.witness.as_ref().map(|w| describe_char_witness(g, w));
        if let Some(w) = &witness {
            text.push_str(&format!("  witness: {w}\n"));
        }
        let mut row = json!({"name": n, "elements": h.describe(g), "normal": normal, "characteristic": v.characteristic, "witness": witness});
        if let Some(o) = &oracle {
            let ov = o.check(h)?;
            let agrees = ov.characteristic == v.characteristic;
            violation |= !agrees;
            let ow = ov.witness.as_ref().map(|w| describe_oracle_witness(g, o, w));
            text.push_str(&format!(
                "  oracle ({} acting algebras): {}{}\n",
                o.acting_algebras().len(),
                if ov.characteristic { "characteristic" } else { "NOT characteristic" },
                ow.as_ref().map_or(String::new(), |w| format!(", {w}"))
            ));
            if !agrees {
                text.push_str("  DISAGREEMENT with the fast criterion\n");
            }
            row["oracle"] = json!({"characteristic": ov.characteristic, "witness": ow});
        }
        rows.push(row);
    }
    Ok(Outcome::checked(text, json!({"checks": rows}), violation))
}

fn commutator(doc: &SpecDocument, names: &[String], higgins: bool) -> Result<Outcome, Error> {
    let g = &doc.algebra;
    let whole = Subobject::whole(g);
    let pick = |i: usize| -> Result<(String, Subobject), Error> {
        match names.get(i).or(names.first()) {
            Some(n) => Ok((n.clone(), doc.subobject(n)?.clone())),
            None => Ok(("G".into(), whole.clone())),
        }
    };
    if names.len() > 2 {
        return Err(Error::Unsupported("a commutator takes at most two subobjects".into()));
    }
    let ((hn, h), (kn, k)) = (pick(0)?, pick(1)?);
    let c = if higgins { higgins_commutator(g, &h, &k)? } else { huq_commutator(g, &h, &k)? };
    let kind = if higgins { "Higgins" } else { "Huq" };
    let normal = is_normal(g, &c);
    let text = format!(
        "{kind} [{hn}, {kn}] = {} ({})\n",
        c.describe(g),
        if normal { "normal" } else { "not normal" }
    );
    Ok(Outcome::ok(text, json!({"kind": kind, "h": hn, "k": kn, "elements": c.describe(g), "order": c.len(), "normal": normal})))
}

fn centraliser_outcome(g: &Arc<FiniteAlgebra>, label: &str, c: Centraliser) -> Result<Outcome, Error> {
    match c {
        Centraliser::Exists(s) => {
            let v = CharacteristicTest::new(g.clone())?.check(&s)?;
            let normal = is_normal(g, &s);
            let mut text = format!(
                "{label} = {}: {}, {v}\n",
                s.describe(g),
                if normal { "normal" } else { "not normal" }
            );
            let witness = v.witness.as_ref().map(|w| describe_char_witness(g, w));
            if let Some(w) = &witness {
                text.push_str(&format!("  witness: {w}\n"));
            }
            Ok(Outcome::ok(
                text,
                json!({"exists": true, "elements": s.describe(g), "normal": normal, "characteristic": v.characteristic, "witness": witness}),
            ))
        }
        Centraliser::DoesNotExist(maximal) => {
            let mut text = format!("{label} does not exist; maximal commuting subobjects:\n");
            for m in &maximal {
                text.push_str(&format!("  {}\n", m.describe(g)));
            }
            let json = json!({"exists": false, "maximal": maximal.iter().map(|m| m.describe(g)).collect::<Vec<_>>()});
            Ok(Outcome::ok(text, json))
        }
    }
}

fn actor_outcome(doc: &SpecDocument, oracle: Option<ActionBounds>) -> Result<Outcome, Error> {
    let g = &doc.algebra;
    let act = match actor(g) {
        Ok(a) => a,
        Err(Error::NotRepresentative(v)) => {
            let text = format!("{v} has no actor: split extensions are not classified by a single object\n");
            return Ok(Outcome::ok(text, json!({"exists": false, "variety": v.to_string()})));
        }
        Err(e) => return Err(e),
    };
    let obj = act.object();
    let kind = if g.is_group() { "Aut(G)" } else { "Der(G)" };
    let mut text = format!("actor {kind}: {}, faithful: {}\n", header(obj), act.is_faithful());
    let mut json = json!({"exists": true, "kind": kind, "order": obj.order(), "rank": obj.rank(), "faithful": act.is_faithful()});
    let mut violation = false;
    if let Some(b) = oracle {
        let r = check_universal_property(&act, b)?;
        violation = r.violation.is_some();
        text.push_str(&format!(
            "universal property over {} acting algebras, {} actions: {}\n",
            r.acting_algebras,
            r.actions,
            r.violation.as_deref().unwrap_or("holds")
        ));
        json["universal_property"] = json!({"acting_algebras": r.acting_algebras, "actions": r.actions, "violation": r.violation});
    }
    Ok(Outcome::checked(text, json, violation))
}

/// The selected actions on `g`: conjugation, one enumerated action, or all of them.
fn selected_actions(
    g: &Arc<FiniteAlgebra>,
    acting: Option<&Path>,
    index: Option<u64>,
    bounds: ActionBounds,
    mut visit: impl FnMut(u64, &Action) -> Result<ControlFlow<()>, Error>,
) -> Result<u64, Error> {
    let Some(path) = acting else {
        if index.is_some_and(|i| i != 0) {
            return Err(Error::Unsupported("conjugation is the only action without --acting".into()));
        }
        let _ = visit(0, &Action::conjugation(g.clone()))?;
        return Ok(1);
    };
    let b = load_spec(path)?.algebra;
    let bounds = ActionBounds { max_group_order: bounds.max_group_order.max(b.order()), max_rank: bounds.max_rank.max(b.rank().unwrap_or(0)) };
    let en = ActionEnumerator::new(g.clone(), bounds)?;
    let mut i = 0u64;
    let mut err = None;
    en.for_each(&b, |xi| {
        let flow = if index.map_or(true, |want| want == i) {
            match visit(i, xi) {
                Ok(f) => f,
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        } else {
            ControlFlow::Continue(())
        };
        i += 1;
        if index.is_some_and(|want| i > want) {
            return ControlFlow::Break(());
        }
        flow
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    if let Some(want) = index {
        if want >= i {
            return Err(Error::Unsupported(format!("action index {want} out of range ({i} actions)")));
        }
    }
    Ok(i)
}

fn semidirect(g: &Arc<FiniteAlgebra>, acting: Option<&Path>, index: Option<u64>, bounds: ActionBounds) -> Result<Outcome, Error> {
    let mut text = String::new();
    let mut failures = Vec::new();
    let mut last = None;
    let count = selected_actions(g, acting, index, bounds, |i, xi| {
        let e = semidirect_product(xi)?;
        if extract_action(&e)?.data() != xi.data() {
            failures.push(i);
        }
        last = Some(e);
        Ok(ControlFlow::Continue(()))
    })?;
    let single = index.is_some() || acting.is_none();
    if let (true, Some(e)) = (single, &last) {
        text.push_str(&format!("G ⋊ B: {}\n", header(&e.total)));
        if e.total.order() <= 64 {
            text.push_str(&emit_spec(&e.total, &[]));
        }
    }
    text.push_str(&format!(
        "round trip on {count} action(s): {}\n",
        if failures.is_empty() { "identity".to_string() } else { format!("differs at {failures:?}") }
    ));
    let json = json!({
        "actions": count,
        "round_trip_failures": failures,
        "total": last.filter(|_| single).map(|e| json!({"order": e.total.order(), "rank": e.total.rank()})),
    });
    Ok(Outcome::checked(text, json, !failures.is_empty()))
}

fn faithful(g: &Arc<FiniteAlgebra>, acting: Option<&Path>, index: Option<u64>, bounds: ActionBounds) -> Result<Outcome, Error> {
    if !g.variety().is_action_accessible() {
        let text = format!("{} is not action accessible: no canonical faithful quotient\n", g.variety());
        return Ok(Outcome::ok(text, json!({"exists": false})));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let count = selected_actions(g, acting, index, bounds, |i, xi| {
        let fq = faithful_quotient(xi)?;
        let b = xi.actor();
        text.push_str(&format!(
            "action #{i}: Z = {} (order {}), T0 order {}, T1 order {}\n",
            fq.z.describe(b),
            fq.z.len(),
            fq.t0.order(),
            fq.extension.total.order()
        ));
        rows.push(json!({"index": i, "z": fq.z.describe(b), "z_order": fq.z.len(), "t0_order": fq.t0.order(), "t1_order": fq.extension.total.order()}));
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(Outcome::ok(text, json!({"actions": count, "quotients": rows})))
}

fn search(
    variety: &str,
    modulus: u32,
    rank: usize,
    property: Property,
    samples: Option<usize>,
    seed: u64,
    max_order: usize,
) -> Result<Outcome, Error> {
    let tag = VarietyTag::from_keyword(variety)
        .ok_or_else(|| Error::Unsupported(format!("unknown variety `{variety}`")))?;
    let v = Variety::with_tag(tag, (tag != VarietyTag::Group).then_some(modulus))
        .ok_or_else(|| Error::Unsupported(format!("no {variety} variety over Z_{modulus}")))?;
    let candidates: Vec<Arc<FiniteAlgebra>> = match (v, samples) {
        (Variety::Group, _) => group_corpus(max_order)?.into_iter().map(|i| i.algebra).collect(),
        (_, None) => ring_like_of_rank(v, rank)?.into_iter().map(Arc::new).collect(),
        (_, Some(n)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            while out.len() < n {
                let c: Vec<u32> = (0..rank * rank * rank).map(|_| rng.gen_range(0..modulus)).collect();
                // Draws that break the variety laws are discarded.
                if let Ok(g) = FiniteAlgebra::ring_like(v, FiniteAlgebra::default_labels(rank), c) {
                    out.push(Arc::new(g));
                }
            }
            out
        }
    };
    let what = match property {
        Property::Derived => "[G,G]",
        Property::Centre => "Z(G)",
    };
    let mut found = Vec::new();
    for g in &candidates {
        let h = match property {
            Property::Derived => {
                let whole = Subobject::whole(g);
                huq_commutator(g, &whole, &whole)?
            }
            Property::Centre => match centre(g)? {
                Centraliser::Exists(s) => s,
                Centraliser::DoesNotExist(_) => continue,
            },
        };
        let v = CharacteristicTest::new(g.clone())?.check(&h)?;
        if !v.characteristic {
            let w = v.witness.as_ref().map(|w| describe_char_witness(g, w)).unwrap_or_default();
            found.push((g.clone(), h, w));
        }
    }
    let mut text = format!("searched {} {v} algebras: {} with {what} not characteristic\n", candidates.len(), found.len());
    if let Some((g, h, w)) = found.first() {
        text.push_str(&format!("first: {what} = {}, witness: {w}\n", h.describe(g)));
        text.push_str(&emit_spec(g, &[("H".to_string(), h.clone())]));
    }
    let json = json!({
        "variety": v.to_string(),
        "searched": candidates.len(),
        "found": found.len(),
        "first": found.first().map(|(g, h, w)| json!({"spec": emit_spec(g, &[("H".to_string(), h.clone())]), "witness": w})),
    });
    // Inside a category of interest both subobjects are always characteristic.
    Ok(Outcome::checked(text, json, v.is_category_of_interest() && !found.is_empty()))
}

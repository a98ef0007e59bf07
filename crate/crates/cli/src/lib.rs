//! Command-line front end: argument definitions and command execution.
//!
//! Every command produces a [`Report`] carrying human-readable text, a JSON
//! document (`schema_version` 1) and a success flag that becomes the exit
//! code.

pub mod parse;

use std::fs;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use invariable::classify::{iterated_status, iterated_status_direct};
use invariable::constructions::{fold_to_cyclic, nottorsion_igset, torsion_igset};
use invariable::group::DEFAULT_CLOSURE_CAP;
use invariable::invgen::{
    invariably_generates, invariably_generates_oracle_with_cap, min_invariable_size_with_cap,
    DEFAULT_SEARCH_CAP,
};
use invariable::verify::{self, Suite, VerifyConfig};
use invariable::{named, ActionSpec, FiniteGroup, Perm, Wreath, WreathElement};

use parse::{ActionText, ChainSpec, ElementExpr, GroupSpec, HeadSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "invariable", version, about = "Invariable generation and wreath product toolkit")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest group any step may build or search exhaustively.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of a group.
    Classes {
        /// Group, e.g. `sym 3` or `perm 3: (0 1), (0 1 2)`; `@file` reads a file.
        group: String,
    },
    /// Decide invariable generation, or find a smallest invariable generating set.
    Invgen {
        group: String,
        /// Candidate set, e.g. `(0 1), (0 1 2)`.
        set: Option<String>,
        /// Search for a smallest invariable generating set.
        #[arg(long)]
        min: bool,
        /// Cross-check against the maximal-subgroup criterion.
        #[arg(long)]
        oracle: bool,
    },
    /// FIG / IG / NEG_IG status of an iterated wreath product.
    Classify {
        /// Chain, e.g. `{FIG, fg} wr int-translation`.
        chain: String,
    },
    /// Arithmetic in a wreath product.
    #[command(subcommand)]
    Wreath(WreathCommand),
    /// Build the explicit invariable generating sets.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Run a self-check suite.
    Verify {
        /// conjugation, coset, alpha, beta, gamma, igsets or all.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Debug, Args)]
pub struct Ambient {
    /// Base group G.
    #[arg(long)]
    pub base: String,
    /// Head: a group or `int`.
    #[arg(long, default_value = "int")]
    pub head: String,
    /// natural, regular, int-translation or `perm-action N: ...`; defaults
    /// to int-translation for `int` and natural otherwise.
    #[arg(long)]
    pub action: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum WreathCommand {
    /// Evaluate an element expression such as `{[0: (0 1)] t}^3 * t^-1`.
    Eval {
        expr: String,
        #[command(flatten)]
        ambient: Ambient,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// Base set at orbit representatives together with a head set (finite head).
    Torsion {
        #[command(flatten)]
        ambient: Ambient,
        /// Invariable generating set of G; a smallest one is searched if omitted.
        #[arg(long)]
        base_set: Option<String>,
        /// Invariable generating set of H; a smallest one is searched if omitted.
        #[arg(long)]
        head_set: Option<String>,
        /// Verify the result by exhaustive search in the finite product.
        #[arg(long)]
        check: bool,
    },
    /// The set built from the generators of G in G wr Z.
    Nottorsion {
        #[arg(long)]
        base: String,
        /// Head shifts, comma separated; their gcd must be 1.
        #[arg(long, value_delimiter = ',', default_value = "1", allow_hyphen_values = true)]
        shifts: Vec<i64>,
        /// Check the images in G wr C2 and G wr C3 (abelian G only).
        #[arg(long)]
        check: bool,
    },
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub success: bool,
}

impl Report {
    fn ok(command: &str, text: String, mut json: Value) -> Self {
        stamp(&mut json, command);
        Report { text, json, success: true }
    }
}

fn stamp(json: &mut Value, command: &str) {
    let map = json.as_object_mut().expect("reports are objects");
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
}

/// Reads `@path` arguments from disk; other arguments are used verbatim.
fn source(arg: &str) -> anyhow::Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_string()),
    }
}

fn group(arg: &str, cap: usize) -> anyhow::Result<(GroupSpec, FiniteGroup)> {
    let spec = GroupSpec::parse(&source(arg)?).context("parsing group")?;
    let g = spec.build(cap)?;
    Ok((spec, g))
}

fn perms_text(ps: &[Perm]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn perms_json(ps: &[Perm]) -> Value {
    json!(ps.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    let cap = cli.cap.unwrap_or(DEFAULT_CLOSURE_CAP);
    match &cli.command {
        Command::Classes { group: g } => classes(g, cap),
        Command::Invgen { group: g, set, min, oracle } => invgen(g, set.as_deref(), *min, *oracle, cli.cap),
        Command::Classify { chain } => classify(chain, cap),
        Command::Wreath(WreathCommand::Eval { expr, ambient }) => wreath_eval(expr, ambient, cap),
        Command::Construct(c) => construct(c, cli.cap),
        Command::Verify { suite, seed, count } => run_verify(suite, *seed, *count),
    }
}

fn classes(arg: &str, cap: usize) -> anyhow::Result<Report> {
    let (spec, g) = group(arg, cap)?;
    let classes = g.conjugacy_classes();
    let mut text = format!("{spec}: order {}, {} classes\n", g.order(), classes.len());
    let mut rows = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let rep = &c.representative;
        text.push_str(&format!(
            "  class {i}: size {}, element order {}, representative {rep}\n",
            c.size(),
            rep.order()
        ));
        rows.push(json!({
            "size": c.size(),
            "element_order": rep.order(),
            "representative": rep.to_string(),
        }));
    }
    Ok(Report::ok(
        "classes",
        text,
        json!({ "group": spec.to_string(), "order": g.order(), "classes": rows }),
    ))
}

fn invgen(arg: &str, set: Option<&str>, min: bool, oracle: bool, cap: Option<usize>) -> anyhow::Result<Report> {
    let (spec, g) = group(arg, cap.unwrap_or(DEFAULT_CLOSURE_CAP))?;
    if set.is_none() && !min {
        bail!("give a candidate set, --min, or both");
    }
    let mut text = String::new();
    let mut out = json!({ "group": spec.to_string(), "order": g.order() });
    if let Some(set) = set {
        let perms = parse::parse_perms(&source(set)?, g.degree()).context("parsing the candidate set")?;
        let verdict = invariably_generates(&g, &perms)?;
        let yes = verdict.invariably_generates;
        text.push_str(&format!("invariably generates: {}\n", if yes { "yes" } else { "no" }));
        out["set"] = perms_json(&perms);
        out["invariably_generates"] = json!(yes);
        out["witness"] = Value::Null;
        if let Some(w) = &verdict.witness {
            let chosen: Vec<Perm> = w.choice.iter().map(|(_, c)| c.clone()).collect();
            text.push_str(&format!(
                "witness: conjugates {} generate a subgroup of order {}\n",
                perms_text(&chosen),
                w.generated_order
            ));
            out["witness"] = json!({
                "conjugates": perms_json(&chosen),
                "generated_order": w.generated_order,
            });
        }
        if oracle {
            let by_maximal = invariably_generates_oracle_with_cap(&g, &perms, cap.unwrap_or(invariable::group::DEFAULT_SUBGROUP_CAP))?;
            if by_maximal != yes {
                bail!("deciders disagree: tuple search says {yes}, maximal-subgroup criterion says {by_maximal}");
            }
            text.push_str("maximal-subgroup criterion agrees\n");
            out["oracle_agrees"] = json!(true);
        }
    }
    if min {
        let m = min_invariable_size_with_cap(&g, cap.unwrap_or(DEFAULT_SEARCH_CAP))?;
        text.push_str(&format!("minimal invariable generating set size: {}\n", m.size));
        if !m.set.is_empty() {
            text.push_str(&format!("example: {}\n", perms_text(&m.set)));
        }
        out["minimal_size"] = json!(m.size);
        out["minimal_set"] = perms_json(&m.set);
    }
    Ok(Report::ok("invgen", text, out))
}

fn classify(arg: &str, cap: usize) -> anyhow::Result<Report> {
    let chain = ChainSpec::parse(&source(arg)?).context("parsing chain")?;
    let levels = chain.descriptors(cap)?;
    let derivation = iterated_status(&levels)?;
    let direct = iterated_status_direct(&levels)?;
    if direct != derivation.status {
        bail!(
            "internal inconsistency: step-by-step status {} but closed form {direct}",
            derivation.status
        );
    }
    let mut text = format!("{chain}\nstatus: {}\n", derivation.status);
    let mut steps = Vec::new();
    for step in &derivation.trace {
        let fg = if step.finitely_generated { "finitely generated" } else { "not finitely generated" };
        let rule = step
            .rule
            .map_or_else(|| "innermost factor".to_string(), |r| r.to_string());
        text.push_str(&format!("  level {}: {} ({fg}); {rule}\n", step.level, step.status));
        steps.push(json!({
            "level": step.level,
            "status": step.status,
            "finitely_generated": step.finitely_generated,
            "rule": step.rule,
            "reason": rule,
        }));
    }
    Ok(Report::ok(
        "classify",
        text,
        json!({
            "chain": chain.to_string(),
            "status": derivation.status,
            "finitely_generated": derivation.finitely_generated,
            "trace": steps,
        }),
    ))
}

fn ambient(a: &Ambient, cap: usize) -> anyhow::Result<Wreath> {
    let base = GroupSpec::parse(&source(&a.base)?).context("parsing --base")?.build(cap)?;
    let head = HeadSpec::parse_concrete(&source(&a.head)?).context("parsing --head")?;
    let action = match &a.action {
        Some(text) => ActionText::parse(&source(text)?).context("parsing --action")?,
        None if head == HeadSpec::Int => ActionText::IntTranslation,
        None => ActionText::Natural,
    };
    Ok(Wreath::new(base, action.realise(&head, cap)?)?)
}

fn wreath_eval(expr: &str, a: &Ambient, cap: usize) -> anyhow::Result<Report> {
    let w = ambient(a, cap)?;
    let e = ElementExpr::parse(&source(expr)?).context("parsing expression")?;
    let value = e.eval(&w)?;
    let text = format!("{value}\n");
    Ok(Report::ok(
        "wreath eval",
        text,
        json!({ "element": value.to_string(), "in_base": value.has_trivial_head() }),
    ))
}

fn elements_json(us: &[WreathElement]) -> Value {
    json!(us.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn construct(c: &ConstructCommand, cap: Option<usize>) -> anyhow::Result<Report> {
    let group_cap = cap.unwrap_or(DEFAULT_CLOSURE_CAP);
    match c {
        ConstructCommand::Torsion { ambient: a, base_set, head_set, check } => {
            let w = ambient(a, group_cap)?;
            let ActionSpec::Finite(action) = w.action() else {
                bail!("the torsion construction needs a finite head");
            };
            let search_cap = cap.unwrap_or(DEFAULT_SEARCH_CAP);
            let pick = |set: &Option<String>, g: &FiniteGroup| -> anyhow::Result<Vec<Perm>> {
                match set {
                    Some(s) => Ok(parse::parse_perms(&source(s)?, g.degree())?),
                    None => Ok(min_invariable_size_with_cap(g, search_cap)?.set),
                }
            };
            let gs = pick(base_set, w.base_group())?;
            let hs = pick(head_set, action.head())?;
            let set = torsion_igset(&w, &gs, &hs)?;
            let mut text = String::new();
            for u in &set {
                text.push_str(&format!("{u}\n"));
            }
            let mut out = json!({
                "base_set": perms_json(&gs),
                "head_set": perms_json(&hs),
                "elements": elements_json(&set),
            });
            let mut success = true;
            if *check {
                let group = w.as_perm_group()?;
                let perms: Vec<Perm> = set.iter().map(|u| w.to_perm(u)).collect::<Result<_, _>>()?;
                let verdict = invariably_generates(&group, &perms)?;
                success = verdict.invariably_generates;
                text.push_str(&format!(
                    "check: invariably generates the product (order {}): {}\n",
                    group.order(),
                    if success { "yes" } else { "no" }
                ));
                out["check"] = json!({ "order": group.order(), "invariably_generates": success });
            }
            let mut r = Report::ok("construct torsion", text, out);
            r.success = success;
            Ok(r)
        }
        ConstructCommand::Nottorsion { base, shifts, check } => {
            let g = GroupSpec::parse(&source(base)?).context("parsing --base")?.build(group_cap)?;
            let w = Wreath::over_integers(g.clone())?;
            let set = nottorsion_igset(&w, g.generators(), shifts)?;
            let members = set.members();
            let mut text = String::new();
            for u in &members {
                text.push_str(&format!("{u}\n"));
            }
            text.push_str(&format!(
                "{} distinct elements ({} counting repeats across parts)\n",
                members.len(),
                set.len_with_multiplicity()
            ));
            let mut out = json!({
                "elements": elements_json(&members),
                "count_with_multiplicity": set.len_with_multiplicity(),
            });
            let mut success = true;
            if *check {
                if !g.is_abelian() {
                    bail!("--check folds indices modulo N, which needs an abelian base group");
                }
                let mut checks = Vec::new();
                for n in [2usize, 3] {
                    let target = Wreath::new(g.clone(), ActionSpec::natural(named::cyclic(n)?))?;
                    let images: Vec<WreathElement> = members
                        .iter()
                        .map(|u| fold_to_cyclic(&w, &target, u))
                        .collect::<Result<_, _>>()?;
                    let group = target.as_perm_group()?;
                    let perms: Vec<Perm> = images.iter().map(|u| target.to_perm(u)).collect::<Result<_, _>>()?;
                    let ok = invariably_generates(&group, &perms)?.invariably_generates;
                    success &= ok;
                    text.push_str(&format!(
                        "check: images invariably generate G wr C{n}: {}\n",
                        if ok { "yes" } else { "no" }
                    ));
                    checks.push(json!({ "cyclic_quotient": n, "invariably_generates": ok }));
                }
                out["check"] = json!(checks);
            }
            let mut r = Report::ok("construct nottorsion", text, out);
            r.success = success;
            Ok(r)
        }
    }
}

fn run_verify(suite: &str, seed: u64, count: usize) -> anyhow::Result<Report> {
    let suites = Suite::parse_list(suite)?;
    let config = VerifyConfig { seed, count };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut success = true;
    for s in suites {
        let report = verify::run(s, config)?;
        for c in &report.checks {
            if c.passed() {
                text.push_str(&format!("PASS {s}: {} ({}/{})\n", c.name, c.cases, c.cases));
            } else {
                text.push_str(&format!(
                    "FAIL {s}: {} ({}/{} failed)\n  counterexample: {}\n",
                    c.name,
                    c.failures,
                    c.cases,
                    c.counterexample.as_deref().unwrap_or("none recorded")
                ));
            }
        }
        success &= report.passed();
        reports.push(report);
    }
    let mut json = json!({ "seed": seed, "count": count, "passed": success, "suites": reports });
    stamp(&mut json, "verify");
    Ok(Report { text, json, success })
}

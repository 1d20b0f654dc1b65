//! `sn`: command-line front end for the strong-negation proof kernel.
//!
//! Exit codes: 0 success, 1 not proved or rejected, 2 usage or contract
//! error, 3 axiom-8 oracle undecided under `--strict-axiom8`.

mod io;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sn_core::calculus::{least_system, AxiomOutcome, Kernel, System, Tableau, Verdict};
use sn_core::cutelim::{consistency_demos, pcn_cut, sn_cut_restricted, CutInstance};
use sn_core::embedding::{cn_check, consistency_cn_demo, embed, embedded_sequent, translate, CnProof, CnVerdict};
use sn_core::metatheory::{self as mt, Disjunct, XFORMS};
use sn_core::polarity::{parts, PartRef};
use sn_core::search::{prove, SearchBudget, SearchOutcome};
use sn_core::syntax::{parse_formula, parse_sequent, parse_term, sym, Sequent};
use sn_core::Error as KernelError;

#[derive(Parser, Debug)]
#[command(name = "sn", version, about = "Check, search and transform strong-negation tableau proofs")]
struct Cli {
    /// Proof system: sn, pcn or fn
    #[arg(long, global = true, default_value = "sn", value_parser = parse_system)]
    system: System,

    /// Treat an undecided axiom 8 as a failure (exit 3) instead of a warning
    #[arg(long, global = true)]
    strict_axiom8: bool,

    /// Print a JSON report on standard output
    #[arg(long, global = true)]
    json: bool,

    /// TOML file with a [budget] table (depth, pool, nodes, millis)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct BudgetArgs {
    /// Choice steps allowed on one search branch
    #[arg(long, global = true)]
    budget_depth: Option<usize>,
    /// Largest numeral in the instantiation pool
    #[arg(long, global = true)]
    budget_pool: Option<u64>,
    /// Node limit for one search
    #[arg(long, global = true)]
    budget_nodes: Option<usize>,
    /// Wall-clock limit in milliseconds
    #[arg(long, global = true)]
    budget_millis: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a sequent and list its parts
    Parse {
        sequent: String,
        /// Also list every part with its sign and formula
        #[arg(long)]
        parts: bool,
    },
    /// Check a proof file
    Check { proof: PathBuf },
    /// Search for a proof of a sequent
    Prove {
        sequent: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a proof transformation (`sn xform list` shows the catalogue)
    Xform(XformArgs),
    /// Eliminate a cut between two proofs
    Cutelim {
        #[arg(value_enum)]
        mode: CutMode,
        left: PathBuf,
        right: PathBuf,
        /// Cut occurrence in the left proof's conclusion
        #[arg(long)]
        left_part: String,
        /// Cut occurrence in the right proof's conclusion
        #[arg(long)]
        right_part: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the implication-free translation of a classical formula
    Translate {
        formula: String,
        /// Print the sequent a CN proof of the formula embeds as
        #[arg(long)]
        sequent: bool,
    },
    /// Embed a CN Hilbert proof (JSON) as a PCN proof
    Embed {
        cnproof: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the consistency checks and print a summary table
    Demo,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CutMode {
    Pcn,
    Sn,
}

#[derive(Args, Debug)]
struct XformArgs {
    /// Transformation name, or `list`
    name: String,
    /// Input proof (not needed for `list`, `extended-axiom`, `equality`)
    proof: Option<PathBuf>,
    /// Part path such as `ant:/and.left/neg`; repeat for two-part transformations
    #[arg(long = "part")]
    parts: Vec<String>,
    /// Target sequent for `thin`, `untranslate` and `weaken`
    #[arg(long)]
    target: Option<String>,
    /// Premise index for `invert`
    #[arg(long, default_value_t = 0)]
    choice: usize,
    /// `x=t` binding for `substitute`; repeatable
    #[arg(long = "bind")]
    binds: Vec<String>,
    /// Formula operands for `extended-axiom` (two) and `equality` (one)
    #[arg(long = "formula")]
    formulas: Vec<String>,
    /// Term operands `s` and `t` for `equality`
    #[arg(long = "term")]
    terms: Vec<String>,
    /// Substituted variable for `equality`
    #[arg(long)]
    var: Option<String>,
    /// Sequent form (1..=3 for `extended-axiom`, 1..=6 for `equality`)
    #[arg(long, default_value_t = 1)]
    shape: u8,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_system(s: &str) -> std::result::Result<System, String> {
    s.parse().map_err(|e: KernelError| e.to_string())
}

/// What a command reports back: exit code, human text and a JSON object.
struct Report {
    code: u8,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Report {
        Report { code: 0, text: text.into(), json }
    }

    fn fail(code: u8, text: impl Into<String>, json: Value) -> Report {
        Report { code, text: text.into(), json }
    }
}

struct Ctx {
    kernel: Kernel,
    system: System,
    strict: bool,
    budget: SearchBudget,
}

fn budget_from(cli: &Cli) -> Result<SearchBudget> {
    let mut b = match &cli.config {
        Some(p) => io::load_config(p)?.budget.unwrap_or_default(),
        None => SearchBudget::default(),
    };
    let a = &cli.budget;
    if let Some(v) = a.budget_depth {
        b.depth = v;
    }
    if let Some(v) = a.budget_pool {
        b.pool = v;
    }
    if let Some(v) = a.budget_nodes {
        b.nodes = v;
    }
    if let Some(v) = a.budget_millis {
        b.millis = v;
    }
    Ok(b)
}

/// Exit code for a kernel error surfacing from a command.
fn code_for(e: &anyhow::Error, strict: bool) -> u8 {
    match e.downcast_ref::<KernelError>() {
        Some(KernelError::Axiom8Unknown(_)) if strict => 3,
        Some(KernelError::Rejected { reason, .. }) if strict && reason.contains("axiom 8 undecided") => 3,
        Some(KernelError::Rejected { .. } | KernelError::NoDisjunct(_) | KernelError::NotConstructive(_)) => 1,
        _ => 2,
    }
}

fn error_kind(e: &anyhow::Error) -> String {
    match e.downcast_ref::<KernelError>() {
        Some(k) => format!("{k:?}").split(['(', ' ', '{']).next().unwrap_or("Error").to_string(),
        None => "Usage".into(),
    }
}

fn require_checked(ctx: &Ctx, tb: &Tableau, what: &str) -> Result<()> {
    match ctx.kernel.check(tb, ctx.system) {
        Verdict::Accepted { .. } => Ok(()),
        Verdict::Rejected { node, reason } => {
            Err(anyhow!("{what} does not check in {} (at {node}: {reason})", ctx.system))
        }
    }
}

fn part_in(text: &str, s: &Sequent) -> Result<PartRef> {
    PartRef::parse_in(text, s).with_context(|| format!("part `{text}` in `{s}`"))
}

fn proof_report(ctx: &Ctx, tb: &Tableau, system: System, out: Option<&Path>, headline: String, mut extra: Value) -> Result<Report> {
    let printed = io::emit_proof(&ctx.kernel, tb, system, out)?;
    let mut text = headline;
    if let Some(p) = out {
        text.push_str(&format!("\nwrote {}", p.display()));
    }
    if let Some(body) = &printed {
        text.push('\n');
        text.push_str(body);
    }
    let obj = extra.as_object_mut().expect("reports are objects");
    obj.insert("conclusion".into(), json!(tb.seq.to_string()));
    obj.insert("size".into(), json!(tb.size()));
    obj.insert("system".into(), json!(system.to_string()));
    if let Some(p) = out {
        obj.insert("written".into(), json!(p.display().to_string()));
    }
    if let Some(body) = printed {
        let v: Value = serde_json::from_str(&body)?;
        obj.insert("proof".into(), v);
    }
    Ok(Report::ok(text, extra))
}

fn cmd_parse(src: &str, list: bool) -> Result<Report> {
    let s = parse_sequent(src)?;
    let mut text = s.to_string();
    let mut rows = Vec::new();
    if list {
        for (p, f) in parts(&s) {
            let sign = if p.sign == sn_core::polarity::Sign::Pos { "+" } else { "-" };
            text.push_str(&format!("\n{sign} {p}  {f}"));
            rows.push(json!({"path": p.to_string(), "sign": sign, "formula": f.to_string()}));
        }
    }
    Ok(Report::ok(text, json!({"sequent": s.to_string(), "length": s.length(), "parts": rows})))
}

fn cmd_check(ctx: &Ctx, path: &Path) -> Result<Report> {
    let tb = io::read_proof(path)?;
    match ctx.kernel.check(&tb, ctx.system) {
        Verdict::Accepted { warnings } => {
            let mut text = format!(
                "accepted in {}: `{}` (size {}, height {}, least system {})",
                ctx.system,
                tb.seq,
                tb.size(),
                tb.height(),
                least_system(&tb)
            );
            for w in &warnings {
                text.push_str(&format!("\nwarning: {w}"));
            }
            Ok(Report::ok(
                text,
                json!({"verdict": "accepted", "conclusion": tb.seq.to_string(), "size": tb.size(), "height": tb.height(),
                       "least_system": least_system(&tb).to_string(), "warnings": warnings}),
            ))
        }
        Verdict::Rejected { node, reason } => {
            let code = if ctx.strict && reason.contains("axiom 8 undecided") { 3 } else { 1 };
            Ok(Report::fail(
                code,
                format!("rejected in {} at {node}: {reason}", ctx.system),
                json!({"verdict": "rejected", "node": node, "reason": reason}),
            ))
        }
    }
}

fn cmd_prove(ctx: &Ctx, src: &str, out: Option<&Path>) -> Result<Report> {
    let goal = parse_sequent(src)?;
    for f in goal.formulas() {
        ctx.kernel.sig.validate(f)?;
    }
    match prove(&ctx.kernel, &goal, ctx.system, ctx.budget) {
        SearchOutcome::Found(tb) => proof_report(ctx, &tb, ctx.system, out, format!("proved `{goal}` in {}", ctx.system), json!({"outcome": "found"})),
        SearchOutcome::Refuted(s) => Ok(Report::fail(
            1,
            format!("refuted: `{goal}` leads without choices to `{s}`, which is no axiom of {} and admits no rule", ctx.system),
            json!({"outcome": "refuted", "goal": goal.to_string(), "stuck": s.to_string()}),
        )),
        SearchOutcome::Exhausted => {
            let undecided = matches!(ctx.kernel.match_axiom(&goal, ctx.system), AxiomOutcome::Unknown(_));
            let code = if ctx.strict && undecided { 3 } else { 1 };
            Ok(Report::fail(
                code,
                format!("no proof of `{goal}` within depth {} and {} nodes", ctx.budget.depth, ctx.budget.nodes),
                json!({"outcome": "exhausted", "goal": goal.to_string(), "axiom8_undecided": undecided}),
            ))
        }
    }
}

fn list_xforms() -> Report {
    let mut text = String::new();
    let mut rows = Vec::new();
    for x in XFORMS {
        text.push_str(&format!("{:<15} {} => {} [{}]\n", x.name, x.input, x.output, x.size_bound));
        rows.push(json!({"name": x.name, "input": x.input, "output": x.output, "size_bound": x.size_bound}));
    }
    text.push_str(&format!("{:<15} {} => {} [{}]", "weaken", "S", "target containing S", "input plus splits"));
    rows.push(json!({"name": "weaken", "input": "S", "output": "target containing S", "size_bound": "input plus splits"}));
    Report::ok(text, json!({"xforms": rows}))
}

fn nth_part(a: &XformArgs, i: usize, s: &Sequent) -> Result<PartRef> {
    let text = a.parts.get(i).ok_or_else(|| anyhow!("`{}` needs {} --part argument(s)", a.name, i + 1))?;
    part_in(text, s)
}

fn target_of(a: &XformArgs) -> Result<Sequent> {
    let t = a.target.as_deref().ok_or_else(|| anyhow!("`{}` needs --target", a.name))?;
    Ok(parse_sequent(t)?)
}

fn cmd_xform(ctx: &Ctx, a: &XformArgs) -> Result<Report> {
    let k = &ctx.kernel;
    let sys = ctx.system;
    let out = a.output.as_deref();
    match a.name.as_str() {
        "list" => return Ok(list_xforms()),
        "extended-axiom" => {
            let [x, y] = a.formulas.as_slice() else { bail!("`extended-axiom` needs two --formula arguments") };
            let tb = mt::xf_extended_axiom(k, a.shape, &parse_formula(x)?, &parse_formula(y)?)?;
            return proof_report(ctx, &tb, least_system(&tb), out, format!("built `{}`", tb.seq), json!({"xform": a.name}));
        }
        "equality" => {
            let [s, t] = a.terms.as_slice() else { bail!("`equality` needs two --term arguments") };
            let [f] = a.formulas.as_slice() else { bail!("`equality` needs one --formula argument") };
            let var = a.var.as_deref().ok_or_else(|| anyhow!("`equality` needs --var"))?;
            let tb = mt::xf_equality(k, a.shape, &parse_term(s)?, &parse_term(t)?, &sym(var), &parse_formula(f)?)?;
            return proof_report(ctx, &tb, least_system(&tb), out, format!("built `{}`", tb.seq), json!({"xform": a.name}));
        }
        _ => {}
    }
    let path = a.proof.as_deref().ok_or_else(|| anyhow!("`{}` needs an input proof", a.name))?;
    let tb = io::read_proof(path)?;
    require_checked(ctx, &tb, "input proof")?;
    let s = &tb.seq;
    let mut extra = json!({"xform": a.name});
    let (result, out_sys) = match a.name.as_str() {
        "substitute" => {
            let mut sigma = Vec::new();
            for b in &a.binds {
                let (x, t) = b.split_once('=').ok_or_else(|| anyhow!("binding `{b}` is not of the form x=t"))?;
                sigma.push((sym(x.trim()), parse_term(t.trim())?));
            }
            (mt::xf_substitute(k, &tb, &sigma, sys)?, sys)
        }
        "invert" => (mt::xf_invert(k, &tb, &nth_part(a, 0, s)?, a.choice, sys)?, sys),
        "contract" => (mt::xf_contract(k, &tb, &nth_part(a, 0, s)?, &nth_part(a, 1, s)?, sys)?, sys),
        "thin" => {
            let target = target_of(a)?;
            (mt::xf_thin(k, &tb, &target, &nth_part(a, 0, &target)?, sys)?, sys)
        }
        "weaken" => (mt::xf_weaken_into(k, &tb, &target_of(a)?, sys)?, sys),
        "translate" => (mt::xf_translate(k, &tb, &nth_part(a, 0, s)?, sys)?, sys),
        "untranslate" => {
            let target = target_of(a)?;
            (mt::xf_untranslate(k, &tb, &target, &nth_part(a, 0, &target)?, sys)?, sys)
        }
        "interchange" => (mt::xf_interchange(k, &tb, &nth_part(a, 0, s)?, &nth_part(a, 1, s)?, sys)?, sys),
        "disjunction" => {
            let r = mt::xf_disjunction(k, &tb, &nth_part(a, 0, s)?)?;
            let (which, p) = match r {
                Disjunct::Left(p) => ("context", p),
                Disjunct::Right(p) => ("part", p),
            };
            extra["disjunct"] = json!(which);
            (p, System::Sn)
        }
        "witness" => {
            let (t, p) = mt::xf_witness(k, &tb, &nth_part(a, 0, s)?)?;
            extra["witness"] = json!(t.to_string());
            (p, System::Sn)
        }
        "shift-right" => (mt::xf_shift_right(k, &tb, &nth_part(a, 0, s)?)?, System::Sn),
        "neg-right" => (mt::xf_neg_right(k, &tb, &nth_part(a, 0, s)?)?, System::Sn),
        "fn-prime" => (mt::xf_fn_prime(k, &tb, &nth_part(a, 0, s)?)?, System::Fn),
        "fn-to-pcn" => (mt::xf_fn_to_pcn(k, &tb)?, System::Pcn),
        "impfree-to-pcn" => (mt::xf_impfree_to_pcn(k, &tb)?, System::Pcn),
        "fn-drop-imp" => (mt::xf_fn_drop_imp(k, &tb, &nth_part(a, 0, s)?)?, System::Pcn),
        other => bail!("unknown transformation `{other}`; run `sn xform list`"),
    };
    let mut headline = format!("{}: `{}` => `{}`", a.name, tb.seq, result.seq);
    if let Some(w) = extra.get("witness").and_then(Value::as_str) {
        headline.push_str(&format!(" (witness {w})"));
    }
    if let Some(d) = extra.get("disjunct").and_then(Value::as_str) {
        headline.push_str(&format!(" ({d} disjunct)"));
    }
    proof_report(ctx, &result, out_sys, out, headline, extra)
}

fn cmd_cutelim(ctx: &Ctx, mode: CutMode, left: &Path, right: &Path, lp: &str, rp: &str, out: Option<&Path>) -> Result<Report> {
    let l = io::read_proof(left)?;
    let r = io::read_proof(right)?;
    let left_part = part_in(lp, &l.seq)?;
    let right_part = part_in(rp, &r.seq)?;
    match mode {
        CutMode::Pcn => {
            let ci = CutInstance { left: l, right: r, left_part, right_part };
            let m = ci.measure()?;
            let res = pcn_cut(&ctx.kernel, &ci)?;
            let headline = format!("cut eliminated: `{}` (initial measure {m}, {} calls)", res.proof.seq, res.trace.len());
            let trace: Vec<Value> = res.trace.iter().map(|(d, m)| json!({"depth": d, "grade": m.grade, "rank": m.rank})).collect();
            proof_report(ctx, &res.proof, System::Pcn, out, headline, json!({"mode": "pcn", "measure": m.to_string(), "trace": trace}))
        }
        CutMode::Sn => {
            let tb = sn_cut_restricted(&ctx.kernel, &l, &left_part, &r, &right_part)?;
            proof_report(ctx, &tb, System::Sn, out, format!("cut eliminated: `{}`", tb.seq), json!({"mode": "sn"}))
        }
    }
}

fn cmd_translate(src: &str, as_sequent: bool) -> Result<Report> {
    let a = parse_formula(src)?;
    let text = if as_sequent { embedded_sequent(&a).to_string() } else { translate(&a).to_string() };
    Ok(Report::ok(text.clone(), json!({"input": a.to_string(), "output": text})))
}

fn cmd_embed(ctx: &Ctx, path: &Path, out: Option<&Path>) -> Result<Report> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let p = CnProof::from_json(&text)?;
    match cn_check(&p) {
        CnVerdict::Rejected { line, reason } => {
            Ok(Report::fail(1, format!("CN proof rejected at line {line}: {reason}"), json!({"verdict": "rejected", "line": line, "reason": reason})))
        }
        CnVerdict::Accepted(c) => {
            let end = c.conclusion().map(|f| f.to_string()).unwrap_or_default();
            let tb = embed(&ctx.kernel, &p)?;
            let headline = format!("embedded CN proof of `{end}` as `{}` ({} lines)", tb.seq, p.lines.len());
            proof_report(ctx, &tb, System::Pcn, out, headline, json!({"cn_conclusion": end}))
        }
    }
}

fn cmd_demo(ctx: &Ctx) -> Report {
    let mut text = format!("{:<12} {:<4} {:<6} {:<6} {:<26} ok\n", "sequent", "sys", "axiom", "rules", "expected");
    let mut rows = Vec::new();
    let mut all = true;
    for d in consistency_demos(&ctx.kernel) {
        let ax = d.axiom.map(|k| k.to_string()).unwrap_or_else(|| "none".into());
        text.push_str(&format!("{:<12} {:<4} {:<6} {:<6} {:<26} {}\n", d.sequent, d.system.to_string(), ax, d.applicable_rules, d.expected, d.holds));
        all &= d.holds;
        rows.push(json!({"sequent": d.sequent, "system": d.system.to_string(), "axiom": ax, "rules": d.applicable_rules,
                         "expected": d.expected, "holds": d.holds}));
    }
    let mut cn = Vec::new();
    for c in consistency_cn_demo(&ctx.kernel) {
        text.push_str(&format!("{} {}\n", if c.holds { "ok  " } else { "FAIL" }, c.claim));
        all &= c.holds;
        cn.push(json!({"claim": c.claim, "holds": c.holds}));
    }
    let json = json!({"demos": rows, "cn": cn, "all_hold": all});
    let text = text.trim_end().to_string();
    if all {
        Report::ok(text, json)
    } else {
        Report::fail(1, text, json)
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let mut kernel = Kernel::default();
    if !cli.strict_axiom8 {
        kernel = kernel.permissive();
    }
    let ctx = Ctx { kernel, system: cli.system, strict: cli.strict_axiom8, budget: budget_from(cli)? };
    match &cli.command {
        Command::Parse { sequent, parts } => cmd_parse(sequent, *parts),
        Command::Check { proof } => cmd_check(&ctx, proof),
        Command::Prove { sequent, output } => cmd_prove(&ctx, sequent, output.as_deref()),
        Command::Xform(a) => cmd_xform(&ctx, a),
        Command::Cutelim { mode, left, right, left_part, right_part, output } => {
            cmd_cutelim(&ctx, *mode, left, right, left_part, right_part, output.as_deref())
        }
        Command::Translate { formula, sequent } => cmd_translate(formula, *sequent),
        Command::Embed { cnproof, output } => cmd_embed(&ctx, cnproof, output.as_deref()),
        Command::Demo => Ok(cmd_demo(&ctx)),
    }
}

/// Print, ignoring a closed pipe on the other end.
fn emit(to_stderr: bool, text: &str) {
    use std::io::Write;
    let _ = if to_stderr { writeln!(std::io::stderr(), "{text}") } else { writeln!(std::io::stdout(), "{text}") };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(r) => {
            if cli.json {
                emit(false, &serde_json::to_string_pretty(&r.json).expect("json values serialize"));
            } else {
                emit(r.code != 0, &r.text);
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            let code = code_for(&e, cli.strict_axiom8);
            if cli.json {
                emit(false, &json!({"error": error_kind(&e), "message": format!("{e:#}"), "exit": code}).to_string());
            }
            emit(true, &format!("error: {e:#}"));
            ExitCode::from(code)
        }
    }
}

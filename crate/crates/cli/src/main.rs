//! `mubar`: μ̄-invariants of Seifert rational homology spheres and the
//! constraints they place on spin fillings.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mubar_core::bounds::{self, ConstraintVerdict, FormCandidate, KappaRecord, RuleProfile};
use mubar_core::dataset::{self, Dataset};
use mubar_core::parse::parse_seifert;
use mubar_core::plumbing::{self, moves, star_plumbing, GraphJson, PlumbingGraph};
use mubar_core::rational::{self, to_json};
use mubar_core::{spin, table, CaseFlags, Error, Execution, Rational, SeifertInvariants};

const SPEC_HELP: &str = "Seifert spec: \"b;a1/b1,a2/b2,...\", \"sigma:a1,a2,...\" or \"sigma(a1,...)\"; \
a leading '-' on the sigma or parenthesized form reverses orientation, e.g. \"-sigma:2,3,7\", \"-(-2;3/1)\"";

#[derive(Parser)]
#[command(name = "mubar", version, about = "Neumann-Siebenmann mu-bar invariants and spin filling obstructions")]
struct Cli {
    /// Emit newline-delimited JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Run batch work on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Spec {
    #[arg(help = SPEC_HELP, allow_hyphen_values = true)]
    spec: String,
}

#[derive(Args)]
struct GraphSource {
    #[arg(help = SPEC_HELP, allow_hyphen_values = true, required_unless_present = "input")]
    spec: Option<String>,

    /// Read a plumbing graph in JSON form instead ("-" for stdin).
    #[arg(long, conflicts_with = "spec")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct KappaArgs {
    /// Known κ for this spin structure ("p" or "p/q"); defaults to the dataset value for table manifolds.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,

    /// Whether Y is Floer K_G split.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    kg_split: Option<bool>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Auto,
    Generic,
}

impl From<Profile> for RuleProfile {
    fn from(p: Profile) -> Self {
        match p {
            Profile::Auto => RuleProfile::Auto,
            Profile::Generic => RuleProfile::Generic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized invariants, degree, |H1|, spin structures, case flags and plumbing summary.
    Info(Spec),

    /// μ̄ and Rokhlin invariants.
    Mubar {
        #[command(flatten)]
        source: GraphSource,
        /// Every spin structure instead of one.
        #[arg(long)]
        all_spin: bool,
        #[arg(long, default_value_t = 0)]
        spin: usize,
    },

    /// The κ / μ̄ / β / d table for ±Σ(2,3,12n±1), ±Σ(2,3,12n±5), μ̄ recomputed.
    Table {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },

    /// Check one candidate intersection form (b2+, b2-) for a spin filling.
    CheckForm {
        #[command(flatten)]
        spec: Spec,
        #[arg(long, default_value_t = 0)]
        spin: usize,
        #[arg(long)]
        b2plus: u32,
        #[arg(long)]
        b2minus: u32,
        #[arg(long, value_enum, default_value = "auto")]
        profile: Profile,
        #[command(flatten)]
        kappa: KappaArgs,
    },

    /// All (b2+, b2-) with b2+ + b2- <= max rank that survive every rule.
    Scan {
        #[command(flatten)]
        spec: Spec,
        #[arg(long, default_value_t = 0)]
        spin: usize,
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        #[arg(long, value_enum, default_value = "auto")]
        profile: Profile,
        #[command(flatten)]
        kappa: KappaArgs,
        /// Also list infeasible candidates with their violated rules.
        #[arg(long)]
        verbose: bool,
    },

    /// Values κ may take given μ̄, and the published value if there is one.
    Kappa {
        #[command(flatten)]
        spec: Spec,
        #[arg(long, default_value_t = 0)]
        spin: usize,
        /// Whether Y is Floer K_G split.
        #[arg(long, num_args = 0..=1, default_missing_value = "true")]
        kg_split: Option<bool>,
    },

    /// The star-shaped plumbing graph.
    Graph {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },

    /// Apply seeded random Neumann moves and check |det| and μ̄ are unchanged.
    MovesVerify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 100)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Ctx {
    json: bool,
    exec: Execution,
    out: io::StdoutLock<'static>,
}

impl Ctx {
    fn record(&mut self, v: Value) -> anyhow::Result<()> {
        writeln!(self.out, "{v}")?;
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) -> anyhow::Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        json: cli.json,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        out: io::stdout().lock(),
    };
    match run(cli.command, &mut ctx) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = ctx.out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 for failed assertions and data problems, 2 for bad input.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::TableMismatch { .. } | Error::Dataset(_) | Error::Overflow(_)) => 1,
        _ => 2,
    }
}

/// Ok(false) means the command ran but reported infeasibility or a failed check.
fn run(cmd: Command, ctx: &mut Ctx) -> anyhow::Result<bool> {
    match cmd {
        Command::Info(spec) => info(ctx, &spec.spec),
        Command::Mubar {
            source,
            all_spin,
            spin,
        } => mubar(ctx, &source, all_spin, spin),
        Command::Table { n_max } => table(ctx, n_max),
        Command::CheckForm {
            spec,
            spin,
            b2plus,
            b2minus,
            profile,
            kappa,
        } => check_form(ctx, &spec.spec, spin, FormCandidate::new(b2plus, b2minus), profile.into(), &kappa),
        Command::Scan {
            spec,
            spin,
            max_rank,
            profile,
            kappa,
            verbose,
        } => scan(ctx, &spec.spec, spin, max_rank, profile.into(), &kappa, verbose),
        Command::Kappa { spec, spin, kg_split } => kappa(ctx, &spec.spec, spin, kg_split),
        Command::Graph { source, format } => graph(ctx, &source, format),
        Command::MovesVerify { source, moves, seed } => moves_verify(ctx, &source, moves, seed),
    }
}

fn seifert(spec: &str) -> anyhow::Result<SeifertInvariants> {
    parse_seifert(spec).with_context(|| format!("in spec {spec:?}"))
}

fn load_graph(src: &GraphSource) -> anyhow::Result<(String, PlumbingGraph)> {
    if let Some(path) = &src.input {
        let mut text = String::new();
        if path.as_os_str() == "-" {
            io::stdin().read_to_string(&mut text)?;
        } else {
            text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        }
        let j: GraphJson = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidGraph(e.to_string()))
            .with_context(|| format!("parsing {}", path.display()))?;
        return Ok((path.display().to_string(), PlumbingGraph::from_json(&j)?));
    }
    let spec = src.spec.as_deref().expect("clap enforces spec or --input");
    Ok((spec.to_string(), star_plumbing(&seifert(spec)?)?))
}

fn flags_text(f: &CaseFlags) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    format!(
        "even multiplicity {}, deg {}, spherical {}, ZHS {}, all-odd parity match {}",
        yn(f.has_even_multiplicity),
        match f.deg_sign {
            mubar_core::DegreeSign::Positive => "> 0",
            mubar_core::DegreeSign::Negative => "< 0",
        },
        yn(f.is_spherical),
        yn(f.is_integral_homology_sphere),
        yn(f.all_odd_with_parity_match),
    )
}

fn info(ctx: &mut Ctx, spec: &str) -> anyhow::Result<bool> {
    let si = seifert(spec)?;
    let h1 = si.h1_order()?;
    let spins = si.spin_structures()?.len();
    let flags = si.case_flags()?;
    let g = star_plumbing(&si)?;
    let q = g.intersection_matrix();
    let det = plumbing::determinant(&q);
    let sig = plumbing::signature(&q);
    if ctx.json {
        ctx.record(json!({
            "spec": spec,
            "invariants": si.to_string(),
            "b": si.b(),
            "pairs": si.pairs(),
            "degree": to_json(&si.degree()),
            "h1_order": h1.to_string(),
            "spin_structures": spins,
            "case_flags": flags,
            "graph": {
                "vertices": g.len(),
                "edges": g.edges().len(),
                "determinant": det.to_string(),
                "signature": sig,
            },
        }))?;
    } else {
        ctx.line(format!("invariants       {si}"))?;
        ctx.line(format!("degree           {}", si.degree()))?;
        ctx.line(format!("|H1|             {h1}"))?;
        ctx.line(format!("spin structures  {spins}"))?;
        ctx.line(format!("flags            {}", flags_text(&flags)))?;
        ctx.line(format!(
            "plumbing         {} vertices, {} edges, det {det}, (b+, b-, b0) = ({}, {}, {})",
            g.len(),
            g.edges().len(),
            sig.b_plus,
            sig.b_minus,
            sig.b_zero
        ))?;
    }
    Ok(true)
}

fn mubar(ctx: &mut Ctx, src: &GraphSource, all: bool, index: usize) -> anyhow::Result<bool> {
    let (label, g) = load_graph(src)?;
    let table = spin::mubar_graph(&g)?;
    let count = table.len();
    if !all && index >= count {
        return Err(Error::SpinIndexOutOfRange { index, count }.into());
    }
    let rows: Vec<(usize, _, Rational)> = table
        .into_iter()
        .enumerate()
        .filter(|(i, _)| all || *i == index)
        .map(|(i, (w, m))| (i, w, m))
        .collect();
    if !ctx.json {
        ctx.line(&label)?;
        ctx.line(format!("{:<6} {:<w$}  {:>8}  {:>8}", "spin", "w", "mubar", "rokhlin", w = g.len().max(1)))?;
    }
    for (i, w, m) in rows {
        let r = spin::rokhlin(&m);
        if ctx.json {
            ctx.record(json!({
                "spec": label,
                "spin": i,
                "w": w.to_bitstring(),
                "mubar": to_json(&m),
                "rokhlin": to_json(&r),
            }))?;
        } else {
            let bits = w.to_bitstring();
            ctx.line(format!("{i:<6} {bits:<w$}  {m:>8}  {r:>8}", w = g.len().max(1)))?;
        }
    }
    Ok(true)
}

fn table(ctx: &mut Ctx, n_max: u32) -> anyhow::Result<bool> {
    let ds = Dataset::from_env()?;
    let rows = table::compute_table(n_max, &ds, ctx.exec)?;
    if !ctx.json {
        ctx.line(format!(
            "{:>3}  {:<18} {:>6} {:>6} {:>6} {:>6}  {}",
            "n", "manifold", "kappa", "mubar", "beta", "d", "K_G split"
        ))?;
    }
    for r in rows {
        if ctx.json {
            ctx.record(serde_json::to_value(&r)?)?;
        } else {
            ctx.line(format!(
                "{:>3}  {:<18} {:>6} {:>6} {:>6} {:>6}  {}",
                r.n,
                r.manifold,
                r.kappa.to_string(),
                r.mubar.to_string(),
                r.beta.to_string(),
                r.d_underline.to_string(),
                if r.kg_split { "yes" } else { "no" }
            ))?;
        }
    }
    Ok(true)
}

/// κ from the command line, or the dataset's value for table manifolds.
fn known_kappa(si: &SeifertInvariants, args: &KappaArgs) -> anyhow::Result<Option<KappaRecord>> {
    if let Some(s) = &args.kappa {
        let Some(v) = rational::parse(s) else {
            bail!(Error::InvalidArgument(format!("--kappa {s:?} is not a rational")));
        };
        return Ok(Some(KappaRecord::new(v, args.kg_split, "command line")));
    }
    let Some((family, _, o)) = dataset::identify(si) else {
        return Ok(None);
    };
    let mut rec = Dataset::from_env()?.get(family, o).kappa_record();
    if args.kg_split.is_some() {
        rec.kg_split = args.kg_split;
    }
    Ok(Some(rec))
}

fn verdict_json(v: &ConstraintVerdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn print_verdict(ctx: &mut Ctx, v: &ConstraintVerdict) -> anyhow::Result<()> {
    for r in &v.rules {
        let tag = match (r.applicable, r.satisfied) {
            (false, _) => "n/a ",
            (true, true) => "pass",
            (true, false) => "FAIL",
        };
        ctx.line(format!("  [{tag}] {:<28} {}", r.rule.as_str(), r.detail))?;
        ctx.line(format!("         {}", r.citation))?;
    }
    Ok(())
}

fn check_form(
    ctx: &mut Ctx,
    spec: &str,
    index: usize,
    fc: FormCandidate,
    profile: RuleProfile,
    kargs: &KappaArgs,
) -> anyhow::Result<bool> {
    let si = seifert(spec)?;
    let (w, mu) = spin::mubar_at(&si, index)?;
    let flags = si.case_flags()?;
    let kappa = known_kappa(&si, kargs)?;
    let v = bounds::evaluate_form(&mu, &flags, profile, kappa.as_ref(), &fc);
    if ctx.json {
        ctx.record(json!({
            "spec": spec,
            "spin": index,
            "w": w.to_bitstring(),
            "mubar": to_json(&mu),
            "b2_plus": fc.b2_plus,
            "b2_minus": fc.b2_minus,
            "sigma": fc.sigma(),
            "kappa": kappa,
            "verdict": verdict_json(&v),
        }))?;
    } else {
        ctx.line(format!("{spec}  spin {index}  mubar {mu}  W {fc}  sigma/8 {}", fc.sigma8()))?;
        if let Some(k) = &kappa {
            ctx.line(format!("kappa {} ({})", k.value, k.provenance))?;
        }
        ctx.line(if v.feasible { "feasible" } else { "infeasible" })?;
        print_verdict(ctx, &v)?;
    }
    Ok(v.feasible)
}

fn scan(
    ctx: &mut Ctx,
    spec: &str,
    index: usize,
    max_rank: u32,
    profile: RuleProfile,
    kargs: &KappaArgs,
    verbose: bool,
) -> anyhow::Result<bool> {
    let si = seifert(spec)?;
    let (_, mu) = spin::mubar_at(&si, index)?;
    let flags = si.case_flags()?;
    let kappa = known_kappa(&si, kargs)?;
    let res = bounds::scan_forms(&mu, &flags, max_rank, profile, kappa.as_ref(), ctx.exec);
    let total = res.len();
    let feasible = res.iter().filter(|(_, v)| v.feasible).count();
    if !ctx.json {
        ctx.line(format!("{spec}  spin {index}  mubar {mu}  max rank {max_rank}"))?;
        ctx.line(format!("{:>4} {:>4} {:>4} {:>6}  verdict", "rank", "b2+", "b2-", "sigma"))?;
    }
    for (fc, v) in res.iter().filter(|(_, v)| verbose || v.feasible) {
        if ctx.json {
            let mut rec = json!({
                "spec": spec,
                "spin": index,
                "b2_plus": fc.b2_plus,
                "b2_minus": fc.b2_minus,
                "sigma": fc.sigma(),
                "feasible": v.feasible,
            });
            if verbose {
                rec["rules"] = verdict_json(v)["rules"].take();
            }
            ctx.record(rec)?;
        } else {
            let failed: Vec<&str> = v.violated().map(|r| r.rule.as_str()).collect();
            let verdict = if v.feasible {
                "feasible".to_string()
            } else {
                format!("infeasible: {}", failed.join(", "))
            };
            ctx.line(format!(
                "{:>4} {:>4} {:>4} {:>6}  {verdict}",
                fc.rank(),
                fc.b2_plus,
                fc.b2_minus,
                fc.sigma()
            ))?;
        }
    }
    if !ctx.json {
        ctx.line(format!("{feasible} feasible of {total} candidates"))?;
    }
    Ok(feasible > 0)
}

fn kappa(ctx: &mut Ctx, spec: &str, index: usize, kg_split: Option<bool>) -> anyhow::Result<bool> {
    let si = seifert(spec)?;
    let (_, mu) = spin::mubar_at(&si, index)?;
    let flags = si.case_flags()?;
    let published = match dataset::identify(&si) {
        Some((family, n, o)) => Some((n, Dataset::from_env()?.get(family, o).clone())),
        None => None,
    };
    let split = kg_split.or(published.as_ref().map(|(_, r)| r.kg_split));
    let w = bounds::kappa_window(&mu, &flags, split);
    let consistent = published.as_ref().is_none_or(|(_, r)| w.contains(&r.kappa));
    if ctx.json {
        ctx.record(json!({
            "spec": spec,
            "spin": index,
            "mubar": to_json(&mu),
            "kg_split": split,
            "window": w,
            "published": published.as_ref().map(|(n, r)| json!({
                "row": r.name(),
                "n": n,
                "kappa": to_json(&r.kappa),
                "source": r.source,
            })),
            "consistent": consistent,
        }))?;
    } else {
        let vals: Vec<String> = w.values.iter().map(|v| v.to_string()).collect();
        ctx.line(format!("{spec}  spin {index}  mubar {mu}"))?;
        ctx.line(format!("kappa in {{{}}}", vals.join(", ")))?;
        if let Some(c) = w.collapse {
            ctx.line(format!("collapsed: {}", serde_json::to_value(c)?.as_str().unwrap_or_default()))?;
        }
        if let Some(c) = &w.caveat {
            ctx.line(format!("caveat: {c}"))?;
        }
        if let Some((n, r)) = &published {
            ctx.line(format!(
                "published kappa {} for {} (n = {n}){}",
                r.kappa,
                r.name(),
                if consistent { "" } else { ": NOT in window" }
            ))?;
        }
    }
    Ok(consistent)
}

fn graph(ctx: &mut Ctx, src: &GraphSource, format: GraphFormat) -> anyhow::Result<bool> {
    let (_, g) = load_graph(src)?;
    match format {
        GraphFormat::Json => ctx.record(serde_json::to_value(g.to_json())?)?,
        GraphFormat::Matrix => {
            let q = g.intersection_matrix();
            if ctx.json {
                ctx.record(serde_json::to_value(&q)?)?;
            } else {
                for row in q.rows() {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                    ctx.line(cells.join(" "))?;
                }
            }
        }
        GraphFormat::Dot => {
            if ctx.json {
                ctx.record(json!({ "dot": g.to_dot() }))?;
            } else {
                write!(ctx.out, "{}", g.to_dot())?;
            }
        }
    }
    Ok(true)
}

fn moves_verify(ctx: &mut Ctx, src: &GraphSource, count: usize, seed: u64) -> anyhow::Result<bool> {
    let (label, g) = load_graph(src)?;
    let check = moves::verify_random_moves(&g, count, seed)?;
    if ctx.json {
        ctx.record(json!({
            "spec": label,
            "moves": count,
            "seed": seed,
            "ok": check.ok(),
            "first_violation": check.first_violation,
            "det_abs": check.before.det_abs.to_string(),
            "mubar": check.before.mubar.iter().map(to_json).collect::<Vec<_>>(),
            "final_vertices": check.final_vertices,
        }))?;
    } else {
        let mus: Vec<String> = check.before.mubar.iter().map(|m| m.to_string()).collect();
        ctx.line(format!(
            "{label}: {count} moves, seed {seed}, {} -> {} vertices",
            g.len(),
            check.final_vertices
        ))?;
        ctx.line(format!("|det| {}  mubar {{{}}}", check.before.det_abs, mus.join(", ")))?;
        match check.first_violation {
            None => ctx.line("invariants preserved")?,
            Some(i) => ctx.line(format!("invariants changed after move {i}: {:?}", check.moves[i]))?,
        }
    }
    Ok(check.ok())
}

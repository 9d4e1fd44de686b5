use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use spherimult::branchkit::{branch, diagonal_embedding, growth_scan, pair_embedding, EmbeddingSpec};
use spherimult::chevalley::{ChevalleyAlgebra, SubalgebraSpan};
use spherimult::classifier::{
    Agreement, Classifier, CrosscheckReport, FormSpec, GroupSub, TableId, TableReport, TripleQuery, Verdict, Window,
};
use spherimult::rootsys::{CartanType, RootSystem, Weight};
use spherimult::satake::names::ambient_type;
use spherimult::satake::{parse_pair_key, Catalog};
use spherimult::spherical::{has_open_orbit, is_spherical, SphericityVerdict, TrialPolicy};
use spherimult::Theta;

/// Bounded multiplicity for symmetric-pair triples, decided by sphericity
/// of flag varieties and checked against finite-dimensional branching.
#[derive(Parser, Debug)]
#[command(name = "spherimult", version)]
struct Cli {
    /// Seed for the random trials.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random trials per sphericity test.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Print JSON instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Directory holding satake.json and pairs.json (defaults to the
    /// built-in catalog).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Restriction triple (g, h, g').
    Classify {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        gprime: String,
    },
    /// Tensor product triple (g, h1, h2).
    Tensor {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
    },
    /// Group manifold (g+g)/diag g restricted to h1+h2, or to a twisted diagonal.
    GroupManifold {
        #[arg(long)]
        g: String,
        #[command(flatten)]
        sub: GroupSubArgs,
    },
    /// g complex simple viewed as a real algebra; h and g' are written
    /// `complex:<name>` or `real:<name>` (`real:compact` for the compact form).
    Complex {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        gprime: String,
    },
    /// Reproduce a classification table over a finite window.
    Table {
        /// 1 (restriction) or 2 (tensor).
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
    },
    /// Sphericity of G/Q and d_q values for nested parabolics Q ⊆ P.
    QpReport {
        #[arg(long)]
        g: String,
        /// Comma-separated 1-based simple roots of the Levi of P.
        #[arg(long, default_value = "")]
        theta_p: String,
        #[arg(long, default_value = "")]
        theta_q: String,
        #[arg(long)]
        sub: String,
        #[arg(long, default_value_t = 2)]
        grid_max: i64,
    },
    /// Running supremum of branching multiplicities over distinguished weights.
    Crosscheck {
        #[arg(long, value_enum, default_value_t = Mode::Restriction)]
        mode: Mode,
        #[arg(long)]
        g: String,
        /// h (restriction), h1 (tensor) or the first factor (product).
        #[arg(long)]
        first: Option<String>,
        /// g' (restriction), h2 (tensor) or the second factor (product);
        /// the twisting involution for `diag`.
        #[arg(long)]
        second: Option<String>,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Decompose V(λ) under a subalgebra.
    Branch {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        lambda: String,
    },
    /// Largest multiplicity in V(Nλ) for N = 1..n-max, as CSV.
    Scan {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Does a Borel of sub (or sub itself) have an open orbit on G/P^Θ?
    Sphericity {
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "")]
        theta: String,
        /// A symmetric subalgebra of g, or a JSON file {"label", "vectors"}
        /// with vectors in the Chevalley basis.
        #[arg(long)]
        sub: String,
        /// Use sub itself rather than its Borel.
        #[arg(long)]
        open_orbit: bool,
    },
}

#[derive(Args, Debug)]
struct GroupSubArgs {
    #[arg(long, requires = "h2", conflicts_with_all = ["diag", "sigma"])]
    h1: Option<String>,
    #[arg(long, requires = "h1")]
    h2: Option<String>,
    /// Diagonal subgroup, twisted by `--sigma` when given.
    #[arg(long)]
    diag: bool,
    #[arg(long, requires = "diag")]
    sigma: Option<String>,
}

#[derive(Args, Debug)]
struct EmbArgs {
    /// Ambient type, e.g. A2 or sl3.
    #[arg(long)]
    g: String,
    /// Embedding: a pair such as `sl3>so3:principal`, or `diag` for g in g+g.
    #[arg(long)]
    emb: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Restriction,
    Tensor,
    Product,
    Diag,
}

#[derive(Deserialize)]
struct SpanFile {
    #[serde(default)]
    label: Option<String>,
    vectors: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct BranchOutput {
    embedding: String,
    lambda: Vec<i64>,
    dimension: u64,
    terms: Vec<(Vec<i64>, u64)>,
    max_multiplicity: u64,
}

#[derive(Serialize)]
struct ScanOutput {
    embedding: String,
    lambda: Vec<i64>,
    multiplicities: Vec<u64>,
}

#[derive(Serialize)]
struct SphericityOutput {
    g: String,
    theta: Vec<usize>,
    sub: String,
    whole_subalgebra: bool,
    verdict: SphericityVerdict,
}

/// Process exit status derived from a finished command.
enum Status {
    Ok,
    Disagreement,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Disagreement) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn policy(cli: &Cli) -> TrialPolicy {
    let mut p = TrialPolicy::default();
    if let Some(s) = cli.seed {
        p.seed = s;
    }
    if let Some(t) = cli.trials {
        p.trials = t;
    }
    p
}

fn catalog(cli: &Cli) -> Result<Catalog> {
    match &cli.data_dir {
        Some(d) => Catalog::from_dir(d).with_context(|| format!("loading catalog from {}", d.display())),
        None => Ok(Catalog::builtin()?),
    }
}

fn parse_theta(s: &str) -> Result<Theta> {
    s.parse::<Theta>().map_err(|e| anyhow!("bad Θ {s:?}: {e}"))
}

fn parse_form(s: &str) -> Result<FormSpec> {
    match s.split_once(':') {
        Some(("complex" | "c", name)) => Ok(FormSpec::Complex(name.to_string())),
        Some(("real" | "r", name)) => Ok(FormSpec::Real(name.to_string())),
        _ => bail!("{s:?}: expected complex:<name> or real:<name>"),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn kebab<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn show_verdict(v: &Verdict, json: bool) -> Result<Status> {
    if json {
        print_json(v)?;
    } else {
        println!("{} {}: {}", v.mode, v.query, kebab(&v.outcome));
        println!("  ambient {}, Θ = {:?}", v.ambient, v.theta_used);
        println!(
            "  sphericity: {} (rank {}/{}, {} trials)",
            kebab(&v.sphericity.outcome),
            v.sphericity.best_rank,
            v.sphericity.target_rank,
            v.sphericity.trials
        );
        if let Some(hit) = &v.table_hit {
            println!("  table {} row {}: {}", hit.table, hit.row, hit.instance);
        }
        for n in &v.notes {
            println!("  note: {n}");
        }
        if let Some(d) = &v.diagnostic {
            println!("  DIAGNOSTIC: {d}");
        }
    }
    Ok(if v.diagnostic.is_some() {
        Status::Disagreement
    } else {
        Status::Ok
    })
}

fn show_table(t: &TableReport, json: bool) -> Result<Status> {
    if json {
        print_json(t)?;
    } else {
        println!("table {} (n <= {}, m <= {})", t.table, t.window.n_max, t.window.m_max);
        for r in &t.rows {
            let got = r.outcome.as_ref().map(kebab).unwrap_or_else(|| "error".into());
            let mark = if r.agrees { "ok " } else { "BAD" };
            println!("  {mark} {:<16} {:<40} {got}", r.row.row, r.row.label());
            if let Some(d) = &r.detail {
                println!("      {d}");
            }
        }
        for n in &t.notes {
            println!("note: {n}");
        }
        println!("{} rows, {} disagreements", t.rows.len(), t.disagreements);
    }
    Ok(if t.disagreements > 0 {
        Status::Disagreement
    } else {
        Status::Ok
    })
}

fn show_crosscheck(r: &CrosscheckReport, json: bool) -> Result<Status> {
    if json {
        print_json(r)?;
    } else {
        println!("{}: verdict {}, bound {}", r.query, kebab(&r.outcome), r.bound);
        println!("  level  weights  skipped  sup  running");
        for l in &r.levels {
            let sup = l.sup.map_or("-".to_string(), |s| s.to_string());
            println!("  {:>5}  {:>7}  {:>7}  {:>3}  {:>7}", l.level, l.weights, l.skipped, sup, l.running_sup);
        }
        println!("  agreement: {}", kebab(&r.agreement));
    }
    Ok(if r.agreement == Agreement::Inconsistent {
        Status::Disagreement
    } else {
        Status::Ok
    })
}

fn embedding(cat: &Catalog, args: &EmbArgs) -> Result<(RootSystem, EmbeddingSpec)> {
    let g = ambient_type(&args.g)?;
    let emb = if args.emb.trim() == "diag" {
        diagonal_embedding(&g)?
    } else {
        let (eg, eh) = parse_pair_key(&args.emb)?;
        let rec = cat.lookup(&eg, &eh)?;
        if rec.g != g {
            bail!("embedding {} lives in {}, not in {}", args.emb, rec.g, g);
        }
        pair_embedding(&rec)?
    };
    let rs = RootSystem::new(&emb.ambient)?;
    Ok((rs, emb))
}

fn parse_lambda(s: &str, rs: &RootSystem) -> Result<Vec<i64>> {
    let w: Weight = s.parse()?;
    let ints = w.to_ints().ok_or_else(|| anyhow!("λ = {s} is not integral"))?;
    if ints.len() != rs.weight_len() {
        bail!("λ = {s} has {} coordinates, {} expects {}", ints.len(), rs.cartan_type(), rs.weight_len());
    }
    Ok(ints)
}

fn sub_span(cat: &Catalog, alg: &ChevalleyAlgebra, g: &str, sub: &str) -> Result<SubalgebraSpan> {
    let path = PathBuf::from(sub);
    if path.is_file() {
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let f: SpanFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(v) = f.vectors.iter().find(|v| v.len() != alg.dim()) {
            bail!("span vector of length {} in an algebra of dimension {}", v.len(), alg.dim());
        }
        return Ok(SubalgebraSpan::new(f.vectors, f.label.unwrap_or_else(|| sub.to_string())));
    }
    let rec = cat.lookup(g, sub)?;
    Ok(SubalgebraSpan::from_involution(alg, &rec.involution, rec.h_label())?)
}

fn run(cli: Cli) -> Result<Status> {
    let cat = catalog(&cli)?;
    let json = cli.json;
    let classifier = || -> Result<Classifier> { Ok(Classifier::new(catalog(&cli)?, policy(&cli))) };
    match &cli.command {
        Command::Classify { g, h, gprime } => show_verdict(&classifier()?.classify_restriction(g, h, gprime)?, json),
        Command::Tensor { g, h1, h2 } => show_verdict(&classifier()?.classify_tensor(g, h1, h2)?, json),
        Command::GroupManifold { g, sub } => {
            let s = match (&sub.h1, &sub.h2, sub.diag) {
                (Some(a), Some(b), false) => GroupSub::Product(a.clone(), b.clone()),
                (None, None, true) => GroupSub::Diag(sub.sigma.clone()),
                _ => bail!("give either --h1 and --h2, or --diag"),
            };
            show_verdict(&classifier()?.classify_group_manifold(g, s)?, json)
        }
        Command::Complex { g, h, gprime } => {
            let v = classifier()?.classify_complex_g(g, parse_form(h)?, parse_form(gprime)?)?;
            show_verdict(&v, json)
        }
        Command::Table { which, n_max, m_max } => {
            let table: TableId = which.parse()?;
            let window = Window {
                n_max: *n_max,
                m_max: *m_max,
            };
            show_table(&classifier()?.reproduce_table(table, window), json)
        }
        Command::QpReport {
            g,
            theta_p,
            theta_q,
            sub,
            grid_max,
        } => {
            let r = classifier()?.qp_report(g, &parse_theta(theta_p)?, &parse_theta(theta_q)?, sub, *grid_max)?;
            if json {
                print_json(&r)?;
            } else {
                println!("{} with Θ_P = {:?}, Θ_Q = {:?}, sub {}", r.g, r.theta_p, r.theta_q, r.sub);
                println!("  G/Q: {}", kebab(&r.sphericity.outcome));
                if let Some(n) = &r.orbit_note {
                    println!("  {n}");
                }
                for e in &r.d_q {
                    println!("  d_q{:?} = {}", e.lambda, e.d_q);
                }
            }
            Ok(Status::Ok)
        }
        Command::Crosscheck {
            mode,
            g,
            first,
            second,
            bound,
        } => {
            let need = |x: &Option<String>, flag: &str| x.clone().ok_or_else(|| anyhow!("--{flag} is required for this mode"));
            let q = match mode {
                Mode::Restriction => TripleQuery::restriction(g, &need(first, "first")?, &need(second, "second")?),
                Mode::Tensor => TripleQuery::tensor(g, &need(first, "first")?, &need(second, "second")?),
                Mode::Product => TripleQuery::GroupManifold {
                    g: g.clone(),
                    sub: GroupSub::Product(need(first, "first")?, need(second, "second")?),
                },
                Mode::Diag => TripleQuery::GroupManifold {
                    g: g.clone(),
                    sub: GroupSub::Diag(second.clone()),
                },
            };
            show_crosscheck(&classifier()?.empirical_crosscheck(&q, *bound)?, json)
        }
        Command::Branch { emb, lambda } => {
            let (rs, e) = embedding(&cat, emb)?;
            let lam = parse_lambda(lambda, &rs)?;
            let d = branch(&rs, &Weight::from_ints(&lam), &e)?;
            let sub = RootSystem::new(&e.sub)?;
            let out = BranchOutput {
                embedding: e.key.clone(),
                lambda: lam,
                dimension: d.dimension(&sub)?,
                max_multiplicity: d.max_multiplicity(),
                terms: d.terms,
            };
            if json {
                print_json(&out)?;
            } else {
                println!("{} V{:?} (dim {}) restricted to {}:", out.embedding, out.lambda, out.dimension, e.sub);
                for (mu, m) in &out.terms {
                    println!("  {m} x {mu:?}");
                }
            }
            Ok(Status::Ok)
        }
        Command::Scan { emb, lambda, n_max } => {
            let (rs, e) = embedding(&cat, emb)?;
            let lam = parse_lambda(lambda, &rs)?;
            let ms = growth_scan(&rs, &Weight::from_ints(&lam), &e, *n_max)?;
            if json {
                print_json(&ScanOutput {
                    embedding: e.key,
                    lambda: lam,
                    multiplicities: ms,
                })?;
            } else {
                println!("n,multiplicity");
                for (i, m) in ms.iter().enumerate() {
                    println!("{},{m}", i + 1);
                }
            }
            Ok(Status::Ok)
        }
        Command::Sphericity {
            g,
            theta,
            sub,
            open_orbit,
        } => {
            let t: CartanType = ambient_type(g)?;
            let alg = ChevalleyAlgebra::new(&t)?;
            let th = parse_theta(theta)?;
            let span = sub_span(&cat, &alg, g, sub)?;
            let p = policy(&cli);
            let verdict = if *open_orbit {
                has_open_orbit(&alg, &th, &span, &p)?
            } else {
                is_spherical(&alg, &th, &span, &p)?
            };
            let out = SphericityOutput {
                g: t.to_string(),
                theta: th.labels(),
                sub: span.label.clone(),
                whole_subalgebra: *open_orbit,
                verdict,
            };
            if json {
                print_json(&out)?;
            } else {
                let v = &out.verdict;
                println!("{} Θ = {:?}, sub {}: {}", out.g, out.theta, out.sub, kebab(&v.outcome));
                println!("  rank {}/{} after {} trials, gap {}", v.best_rank, v.target_rank, v.trials, v.rank_gap);
                if let Some(c) = &v.certificate {
                    println!("  certified: exact rank {}, scalars up to {}", c.exact_rank, c.max_scalar);
                }
            }
            Ok(Status::Ok)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disagreements_map_to_status_two() {
        let t = TableReport {
            table: TableId::Tensor,
            window: Window::default(),
            rows: vec![],
            disagreements: 1,
            notes: vec![],
        };
        assert!(matches!(show_table(&t, true).unwrap(), Status::Disagreement));
        let ok = TableReport { disagreements: 0, ..t };
        assert!(matches!(show_table(&ok, true).unwrap(), Status::Ok));
    }

    #[test]
    fn form_specs_parse() {
        assert_eq!(parse_form("complex:gl2").unwrap(), FormSpec::Complex("gl2".into()));
        assert_eq!(parse_form("real:compact").unwrap(), FormSpec::Real("compact".into()));
        assert!(parse_form("gl2").is_err());
    }
}

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kostka_core::charge::kostka_charge;
use kostka_core::closed_forms::{k_a2_weight0, k_b2_weight0, k_c2_weight0, small_matrix_entry};
use kostka_core::cyclage::CyclageGraph;
use kostka_core::kostant::kostka_def;
use kostka_core::morris::morris_kostka;
use kostka_core::statistic::{chi_trace, kostka_statistic, statistic_valid};
use kostka_core::tableau::component_tableaux;
use kostka_core::validate::{run, ValidateConfig};
use kostka_core::{Error, Family, GenPartition, QLaurent, Weight};

/// Kostka-Foulkes polynomials for the classical root systems.
#[derive(Parser)]
#[command(name = "kostka", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute K_{λ,μ}(q).
    Kostka(KostkaArgs),
    /// List the tableaux of shape λ and weight μ.
    Tableaux(TableauxArgs),
    /// Export the cyclage graph on tableaux of weight μ.
    Cyclage(CyclageArgs),
    /// Cross-check every method against the Weyl-sum definition.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Def,
    Morris,
    Statistic,
    Closed,
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Parts λ_n̄,…,λ_1̄, comma separated; halves as `a/2`. Missing trailing parts are zero.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Parts of μ in the same order; defaults to zero.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
}

#[derive(Args)]
struct KostkaArgs {
    #[command(flatten)]
    pair: Pair,
    #[arg(long, value_enum, default_value = "def")]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableauxArgs {
    #[command(flatten)]
    pair: Pair,
    /// Print χ for each tableau.
    #[arg(long)]
    chi: bool,
    /// Print the catabolism steps behind χ.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
    /// Largest crystal component to enumerate.
    #[arg(long, default_value_t = 2_000_000)]
    cap: usize,
}

#[derive(Args)]
struct CyclageArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long)]
    max_boxes: i32,
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 100_000)]
    max_nodes: usize,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, default_value_t = 3)]
    max_rank: usize,
    #[arg(long, default_value_t = 4)]
    max_boxes: i32,
    /// Comma separated subset of A,B,C,D.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<Family>>,
    #[arg(long)]
    json: bool,
    /// Perturb the oracle so that every comparison fails.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn weight(csv: &str, rank: usize) -> anyhow::Result<Weight> {
    let w: Weight = csv.parse()?;
    if w.rank() > rank {
        return Err(Error::Parse(format!("({csv}) has more than {rank} parts")).into());
    }
    let mut d = w.doubled().to_vec();
    d.resize(rank, 0);
    Ok(Weight::from_doubled(d))
}

fn partition(family: Family, csv: &str, rank: usize) -> anyhow::Result<GenPartition> {
    Ok(GenPartition::new(family, weight(csv, rank)?)?)
}

impl Pair {
    fn resolve(&self) -> anyhow::Result<(GenPartition, GenPartition)> {
        let lam = partition(self.family, &self.lambda, self.rank).context("λ")?;
        let mu = partition(self.family, self.mu.as_deref().unwrap_or("0"), self.rank).context("μ")?;
        Ok((lam, mu))
    }
}

fn closed(lam: &GenPartition, mu: &GenPartition) -> anyhow::Result<QLaurent> {
    if let Some(v) = small_matrix_entry(lam, mu)? {
        return Ok(v);
    }
    let n = lam.rank();
    match lam.family {
        Family::C if n == 2 && mu.weight.is_zero() => Ok(k_c2_weight0(lam)?),
        Family::B if n == 2 && mu.weight.is_zero() => Ok(k_b2_weight0(lam)?),
        Family::A if n == 3 => {
            let k = lam.boxes().unwrap_or(-1);
            let m = mu.ints().unwrap_or_default();
            if k % 3 != 0 || m.iter().any(|&x| 3 * x != k) {
                bail!(Error::Unsupported("A2 closed form only covers the weight ((a+b)/3)(1,1,1)".into()));
            }
            Ok(k_a2_weight0(lam)?)
        }
        _ => bail!(Error::Unsupported(format!("no closed form for {}{n} ({lam}) ({mu})", lam.family))),
    }
}

fn cmd_kostka(a: &KostkaArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let (lam, mu) = a.pair.resolve()?;
    let mut valid = None;
    let (k, name) = match a.method {
        Method::Def => (kostka_def(&lam, &mu)?, "def"),
        Method::Morris => (morris_kostka(&lam, &mu)?, "morris"),
        Method::Closed => (closed(&lam, &mu)?, "closed"),
        Method::Statistic => {
            if lam.family == Family::A {
                (kostka_charge(&lam, &mu)?, "statistic")
            } else {
                let (k, ok) = kostka_statistic(&lam, &mu)?;
                valid = Some(ok);
                (k, "statistic")
            }
        }
    };
    if a.json {
        let mut v = json!({
            "family": lam.family,
            "rank": lam.rank(),
            "lambda": lam.weight.to_string(),
            "mu": mu.weight.to_string(),
            "method": name,
            "polynomial": k.to_string(),
            "coefficients": k,
        });
        if let Some(ok) = valid {
            v["hypotheses_satisfied"] = json!(ok);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "{k}")?;
        if let Some(ok) = valid {
            writeln!(out, "statistic hypotheses: {}", if ok { "satisfied" } else { "not satisfied" })?;
        }
    }
    if valid == Some(false) {
        eprintln!("WARNING: statistic hypotheses not satisfied; the sum may differ from K_{{λ,μ}}(q)");
    }
    Ok(0)
}

fn cmd_tableaux(a: &TableauxArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let (lam, mu) = a.pair.resolve()?;
    let ts: Vec<_> = component_tableaux(&lam, a.cap)?
        .into_iter()
        .filter(|t| t.weight() == mu.weight)
        .collect();
    let want_chi = a.chi || a.trace;
    if want_chi && !statistic_valid(&lam, &mu) {
        eprintln!("WARNING: statistic hypotheses not satisfied for ({lam}) ({mu})");
    }
    if a.json {
        let mut items = Vec::new();
        for t in &ts {
            let mut v = serde_json::to_value(t.to_json())?;
            if want_chi {
                let tr = chi_trace(t)?;
                v["chi"] = json!(tr.total);
                if a.trace {
                    v["trace"] = serde_json::to_value(&tr)?;
                }
            }
            items.push(v);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "count": ts.len(), "tableaux": items }))?)?;
        return Ok(0);
    }
    writeln!(out, "{} tableaux of shape ({lam}) and weight ({mu})", ts.len())?;
    for (i, t) in ts.iter().enumerate() {
        writeln!(out)?;
        writeln!(out, "#{}", i + 1)?;
        writeln!(out, "{}", t.render())?;
        if want_chi {
            let tr = chi_trace(t)?;
            if a.trace {
                for s in &tr.steps {
                    writeln!(
                        out,
                        "  rank {}: row [{}] rest [{}] stripped [{}] +{}",
                        s.rank, s.row, s.rest, s.stripped, s.increment
                    )?;
                }
                writeln!(out, "  base rank {}: [{}] +{}", tr.base_rank, tr.base_tableau, tr.base_value)?;
            }
            writeln!(out, "chi = {}", tr.total)?;
        }
    }
    Ok(0)
}

fn cmd_cyclage(a: &CyclageArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let mu = weight(a.mu.as_deref().unwrap_or("0"), a.rank)?;
    let mut seeds = Vec::new();
    for lam in GenPartition::enumerate(a.family, a.rank, a.max_boxes) {
        let ts = component_tableaux(&lam, a.max_nodes)?;
        seeds.extend(ts.into_iter().filter(|t| t.weight() == mu));
    }
    let graph = CyclageGraph::build(&seeds, a.max_nodes)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&graph.to_json())?)?;
    } else {
        write!(out, "{}", graph.to_dot())?;
    }
    Ok(0)
}

fn cmd_validate(a: &ValidateArgs, out: &mut impl Write) -> anyhow::Result<u8> {
    let cfg = ValidateConfig {
        max_rank: a.max_rank,
        max_boxes: a.max_boxes,
        families: a.families.clone().unwrap_or_else(|| ValidateConfig::default().families),
        inject_fault: a.inject_fault,
    };
    let report = run(&cfg)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write!(out, "{}", report.render())?;
    }
    Ok(if report.ok() { 0 } else { 1 })
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::TooLarge { .. }) => 4,
        Some(Error::Unsupported(_)) | Some(Error::Precondition(_)) => 3,
        Some(Error::Parse(_))
        | Some(Error::InvalidWeight(_))
        | Some(Error::InvalidRank { .. })
        | Some(Error::Mismatch(_))
        | Some(Error::InvalidLetter { .. })
        | Some(Error::MalformedTableau(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Kostka(a) => cmd_kostka(a, &mut out),
        Command::Tableaux(a) => cmd_tableaux(a, &mut out),
        Command::Cyclage(a) => cmd_cyclage(a, &mut out),
        Command::Validate(a) => cmd_validate(a, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

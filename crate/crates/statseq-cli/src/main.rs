//! `statseq` command line: construct the tree/unicyclic family, verify
//! same-sequence pairs, decide status injectivity, run exhaustive searches
//! and check the four-window property.
//!
//! Human-readable summaries go to stderr; machine-readable payloads go to
//! stdout or `--out`. Exit codes: 0 success/verified, 1 checked-and-false,
//! 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use statseq::codec::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use statseq::construct::{build_pair, closed_form_table, correspondence, tree_statuses};
use statseq::injective::{even_injective, four_window_check, odd_injective, InjectivityVerdict};
use statseq::search::{find_pairs, verify_pair, SearchOptions, Universe};
use statseq::status::is_status_injective;
use statseq::Graph;

const EXIT_FALSE: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "statseq", version, about = "status sequences of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the order-n tree and unicyclic graph with equal status sequences
    Construct(ConstructArgs),
    /// Check whether two graph files form a (tree, non-tree) same-sequence pair
    Verify(VerifyArgs),
    /// Status injectivity verdicts for a range of family orders
    Injective(InjectiveArgs),
    /// Exhaustive same-sequence pair search at one order
    Search(SearchArgs),
    /// Verify that every four consecutive even orders contain an injective one
    Window(WindowArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// order of the pair (>= 19)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    /// write payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// tree candidate (graph6 or edge-list file)
    file_a: PathBuf,
    /// non-tree candidate (graph6 or edge-list file)
    file_b: PathBuf,
}

#[derive(Args)]
struct InjectiveArgs {
    /// order or inclusive order range, e.g. 22 or 19..51 (orders >= 19)
    #[arg(long)]
    n: IntRange,
    /// only odd orders
    #[arg(long)]
    odd_only: bool,
    /// additionally check each verdict against brute force on the tree
    #[arg(long)]
    brute_check: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// order to search
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    universe: UniverseArg,
    /// worker count (defaults to STATSEQ_WORKERS, then available parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// write pair reports (JSON lines) to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// allow the order-10 all-nontree search (long runtime)
    #[arg(long)]
    allow_order_10: bool,
}

#[derive(Args)]
struct WindowArgs {
    /// k value or inclusive range, e.g. 7..500 (k >= 7)
    #[arg(long)]
    k: IntRange,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    Unicyclic,
    AllNontree,
}

impl From<UniverseArg> for Universe {
    fn from(u: UniverseArg) -> Universe {
        match u {
            UniverseArg::Unicyclic => Universe::UnicyclicOnly,
            UniverseArg::AllNontree => Universe::AllNontree,
        }
    }
}

/// Inclusive `lo..hi` range; a bare integer means `n..n`.
#[derive(Clone, Copy)]
struct IntRange {
    lo: usize,
    hi: usize,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("not an integer: {t:?}"))
        };
        let range = match s.split_once("..") {
            Some((lo, hi)) => IntRange {
                lo: parse(lo)?,
                hi: parse(hi)?,
            },
            None => {
                let v = parse(s)?;
                IntRange { lo: v, hi: v }
            }
        };
        if range.lo > range.hi {
            return Err(format!("empty range {}..{}", range.lo, range.hi));
        }
        Ok(range)
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Injective(args) => cmd_injective(args),
        Command::Search(args) => cmd_search(args),
        Command::Window(args) => cmd_window(args),
    }
}

fn write_payload(out: &Option<PathBuf>, payload: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, payload)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<i32> {
    let pair = build_pair(args.n).map_err(|e| anyhow!("{e}"))?;
    let table = closed_form_table(args.n).expect("same bounds as build_pair");
    let sigma = correspondence(args.n).expect("same bounds as build_pair");
    let annotation = serde_json::json!({
        "n": pair.n,
        "k": pair.k,
        "parity": pair.parity,
        "min_status": table.base,
        "tree_statuses": tree_statuses(&pair.tree),
        "unicyclic_statuses": tree_statuses(&pair.unicyclic),
        "correspondence": sigma,
    });

    let payload = match args.format {
        Format::Graph6 => format!(
            "{}\n{}\n{}\n",
            to_graph6(&pair.tree),
            to_graph6(&pair.unicyclic),
            annotation
        ),
        Format::EdgeList => {
            let mut text = String::new();
            text.push_str(&to_edge_list(&pair.tree));
            text.push('\n');
            text.push_str(&to_edge_list(&pair.unicyclic));
            text.push('\n');
            text.push_str(&annotation_text(&pair.n, &table.entries, &sigma));
            text
        }
        Format::Json => {
            let doc = serde_json::json!({
                "tree": { "graph6": to_graph6(&pair.tree), "edges": pair.tree.edges() },
                "unicyclic": { "graph6": to_graph6(&pair.unicyclic), "edges": pair.unicyclic.edges() },
                "annotation": annotation,
            });
            format!("{doc}\n")
        }
    };
    write_payload(&args.out, &payload)?;
    eprintln!(
        "order {} (k={}, {:?}): tree and unicyclic graph share the status sequence; minimum status {} at label {}",
        pair.n,
        pair.k,
        pair.parity,
        table.base,
        pair.k + 1
    );
    Ok(0)
}

fn annotation_text(n: &usize, statuses: &[u64], sigma: &[usize]) -> String {
    let mut text = format!("# label correspondence and statuses for order {n}\n");
    text.push_str("# label status maps_to\n");
    for (i, (s, m)) in statuses.iter().zip(sigma).enumerate() {
        text.push_str(&format!("{} {} {}\n", i + 1, s, m));
    }
    text
}

fn read_graph_file(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| anyhow!("{}: empty file", path.display()))?;
    // a line starting with a digit cannot be graph6 (bytes below 63)
    let graph = if first.trim_start().starts_with(|c: char| c.is_ascii_digit()) {
        from_edge_list(&text)
    } else {
        from_graph6(first)
    };
    graph.map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<i32> {
    let a = read_graph_file(&args.file_a)?;
    let b = read_graph_file(&args.file_b)?;
    let report = verify_pair(&a, &b).map_err(|e| anyhow!("{e}"))?;
    println!("{}", serde_json::to_string(&report)?);
    if report.verified {
        eprintln!("verified: tree and non-tree graph of order {} share the status sequence", report.order);
        Ok(0)
    } else {
        eprintln!("not a same-sequence (tree, non-tree) pair");
        Ok(EXIT_FALSE)
    }
}

fn verdict_for_order(n: usize) -> anyhow::Result<InjectivityVerdict> {
    if n < 19 {
        return Err(anyhow!("orders below 19 have no uniform family tree"));
    }
    let verdict = if n % 2 == 1 {
        odd_injective((n - 5) / 2)
    } else {
        even_injective((n - 6) / 2)
    };
    verdict.map_err(|e| anyhow!("{e}"))
}

fn cmd_injective(args: InjectiveArgs) -> anyhow::Result<i32> {
    let mut disagreements = 0usize;
    let mut stdout = std::io::stdout().lock();
    for n in args.n.lo..=args.n.hi {
        if args.odd_only && n % 2 == 0 {
            continue;
        }
        let verdict = verdict_for_order(n)?;
        let mut line = serde_json::to_value(&verdict)?;
        if args.brute_check {
            let brute = is_status_injective(&statseq::build_tree(n).map_err(|e| anyhow!("{e}"))?)
                .expect("family trees are connected");
            let agrees = brute == verdict.injective;
            if !agrees {
                disagreements += 1;
            }
            line["brute_force_agrees"] = serde_json::Value::Bool(agrees);
        }
        writeln!(stdout, "{line}")?;
        eprintln!(
            "n={:<4} k={:<3} {:>4}  {}  {}",
            verdict.n,
            verdict.k,
            if n % 2 == 1 { "odd" } else { "even" },
            if verdict.injective {
                "status injective    "
            } else {
                "not status injective"
            },
            verdict
                .witness
                .map(|(a, b)| format!("equal statuses at labels {a} and {b}"))
                .unwrap_or_default()
        );
    }
    if disagreements > 0 {
        eprintln!("{disagreements} verdicts disagreed with brute force");
        return Ok(EXIT_FALSE);
    }
    Ok(0)
}

fn default_workers() -> usize {
    if let Ok(value) = std::env::var("STATSEQ_WORKERS") {
        if let Ok(w) = value.parse::<usize>() {
            if w >= 1 {
                return w;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

fn cmd_search(args: SearchArgs) -> anyhow::Result<i32> {
    let workers = args.workers.unwrap_or_else(default_workers).max(1);
    let opts = SearchOptions {
        workers,
        allow_order_ten: args.allow_order_10,
    };
    let start = Instant::now();
    let outcome = find_pairs(args.n, args.universe.into(), &opts).map_err(|e| anyhow!("{e}"))?;
    let elapsed = start.elapsed();

    let mut payload = String::new();
    for pair in &outcome.pairs {
        payload.push_str(&serde_json::to_string(pair)?);
        payload.push('\n');
    }
    write_payload(&args.out, &payload)?;

    eprintln!("trees {} {}", outcome.order, outcome.tree_count);
    eprintln!(
        "{} {} {}",
        outcome.universe.family_name(),
        outcome.order,
        outcome.universe_count
    );
    eprintln!(
        "{} pair(s) found in {:.3}s with {} worker(s)",
        outcome.pairs.len(),
        elapsed.as_secs_f64(),
        workers
    );
    Ok(0)
}

fn cmd_window(args: WindowArgs) -> anyhow::Result<i32> {
    let report = four_window_check(args.k.lo, args.k.hi).map_err(|e| anyhow!("{e}"))?;
    if report.pass {
        eprintln!(
            "pass: every window of four consecutive k in [{}, {}] contains an injective order",
            args.k.lo, args.k.hi
        );
        Ok(0)
    } else {
        let k = report.first_failing.expect("failing window recorded");
        println!("first failing window: k={k}..{}", k + 3);
        eprintln!("fail: no injective order among k={k}..{}", k + 3);
        Ok(EXIT_FALSE)
    }
}

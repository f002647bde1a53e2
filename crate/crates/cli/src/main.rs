//! `wordrep`: check, build and search word-representants from the shell.
//!
//! Exit status: 0 success, 1 verification failure, 2 input error,
//! 3 search budget exhausted.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wordrep::cartesian::{construct_g_h, construct_g_k2, construct_g_kn, construct_kn_k2};
use wordrep::oracle::{
    min_length_word_starting_with, min_length_word_with, minimal_word_audit, representation_number,
    SearchBudget, SearchOptions,
};
use wordrep::products::{cartesian_product, rooted_product};
use wordrep::rooted::{construct_rooted_h, construct_rooted_k2, construct_rooted_kn};
use wordrep::{BoundReport, Error, Graph, Letter, StandardKind, Word};

#[derive(Parser)]
#[command(
    name = "wordrep",
    version,
    about = "Word-representants of graphs and graph products"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Does WORD represent GRAPH?
    Check { graph: String, word: String },
    /// Graph whose edges are the alternating pairs of WORD
    FromWord { word: String },
    /// Cartesian or rooted product of two graphs
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        g: String,
        h: String,
        /// Root vertex of H (rooted products only)
        #[arg(long)]
        root: Option<String>,
    },
    /// Build a product representant and report its length bound
    Construct(ConstructArgs),
    /// Minimum-length representant by exhaustive search
    Minimize {
        graph: String,
        #[arg(long)]
        max_len: Option<usize>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Least k such that a k-uniform word represents GRAPH
    Repnum {
        graph: String,
        #[arg(long)]
        max_k: Option<usize>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Minimize, then check the singleton and occurrence-spread inequalities
    Audit {
        graph: String,
        #[command(flatten)]
        search: SearchFlags,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Cartesian,
    Rooted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructionKind {
    #[value(name = "g-k2")]
    GK2,
    KnK2,
    GKn,
    #[value(name = "g-h")]
    GH,
    RootedK2,
    RootedKn,
    RootedH,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructionKind,
    /// Base graph G (all constructions except kn-k2)
    #[arg(long)]
    g: Option<String>,
    /// Fiber graph H (g-h and rooted-h)
    #[arg(long)]
    h: Option<String>,
    /// Representant of G; found by search when omitted
    #[arg(long)]
    wg: Option<String>,
    /// Representant of H; found by search when omitted
    #[arg(long)]
    wh: Option<String>,
    /// Order of the complete fiber
    #[arg(long)]
    n: Option<usize>,
    /// Root vertex of H (rooted-h)
    #[arg(long)]
    root: Option<String>,
    #[command(flatten)]
    search: SearchFlags,
}

#[derive(Args, Clone, Copy)]
struct SearchFlags {
    /// Cap on candidate words examined by the search
    #[arg(long)]
    max_states: Option<u64>,
    /// Start words only at automorphism-orbit representatives
    #[arg(long)]
    symmetry: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BudgetExhausted { .. } => 3,
            Error::NotRepresenting(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, ok)) => {
            println!("{output}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { graph, word } => {
            let g = load_graph(graph)?;
            let w = parse_word(word)?;
            let represents = g.is_represented_by(&w);
            let out = if cli.json {
                json!({ "represents": represents }).to_string()
            } else {
                format!("represents: {represents}")
            };
            Ok((out, represents))
        }
        Command::FromWord { word } => {
            let g = Graph::from_word(&parse_word(word)?)?;
            Ok((render_graph(&g, cli.json), true))
        }
        Command::Product { kind, g, h, root } => {
            let (g, h) = (load_graph(g)?, load_graph(h)?);
            let product = match kind {
                ProductKind::Cartesian => {
                    if root.is_some() {
                        return Err(Failure::input("--root applies to rooted products only"));
                    }
                    cartesian_product(&g, &h)?
                }
                ProductKind::Rooted => {
                    let root = root
                        .as_deref()
                        .ok_or_else(|| Failure::input("rooted product needs --root"))?;
                    rooted_product(&g, &h, &parse_letter(root)?)?
                }
            };
            Ok((render_graph(&product, cli.json), true))
        }
        Command::Construct(args) => construct(args, cli.json),
        Command::Minimize {
            graph,
            max_len,
            search,
        } => {
            let g = load_graph(graph)?;
            let mut budget = budget(&g, search);
            if let Some(max_len) = max_len {
                budget.max_length = *max_len;
            }
            match min_length_word_with(&g, &budget, &options(search))? {
                Some((word, l)) => {
                    let out = if cli.json {
                        json!({ "l": l, "word": word }).to_string()
                    } else {
                        format!("l = {l}\nword: {word}")
                    };
                    Ok((out, true))
                }
                None => Err(Failure::verification(format!(
                    "no representant of length at most {}",
                    budget.max_length
                ))),
            }
        }
        Command::Repnum {
            graph,
            max_k,
            search,
        } => {
            let g = load_graph(graph)?;
            let mut budget = budget(&g, search);
            if let Some(max_k) = max_k {
                budget.max_uniform_k = *max_k;
            }
            match representation_number(&g, &budget)? {
                Some((k, word)) => {
                    let out = if cli.json {
                        json!({ "k": k, "word": word }).to_string()
                    } else {
                        format!("R = {k}\nword: {word}")
                    };
                    Ok((out, true))
                }
                None => Err(Failure::verification(format!(
                    "no k-uniform representant for k <= {}",
                    budget.max_uniform_k
                ))),
            }
        }
        Command::Audit { graph, search } => {
            let g = load_graph(graph)?;
            let word = search_minimal(&g, search)?;
            let audit = minimal_word_audit(&g, &word)?;
            let ok = audit.lemma_kap_holds && audit.theorem_di_holds;
            let out = if cli.json {
                serde_json::to_string_pretty(&audit).expect("audit serializes")
            } else {
                format!(
                    "l = {}\nword: {}\nsingletons: {} (clique number {}): {}\noccurrences: min {} max {} (diameter {}): {}",
                    audit.l,
                    audit.word,
                    audit.singletons,
                    audit.clique_number,
                    verdict(audit.lemma_kap_holds),
                    audit.o_min,
                    audit.o_max,
                    audit.diameter,
                    verdict(audit.theorem_di_holds),
                )
            };
            Ok((out, ok))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "VIOLATED"
    }
}

fn construct(args: &ConstructArgs, json: bool) -> Outcome {
    use ConstructionKind::*;
    let needs_h = matches!(args.kind, GH | RootedH);
    let needs_n = matches!(args.kind, KnK2 | GKn | RootedKn);
    if args.kind != KnK2 && args.g.is_none() {
        return Err(Failure::input("this construction needs --g"));
    }
    if needs_h && args.h.is_none() {
        return Err(Failure::input("this construction needs --h"));
    }
    if !needs_h && (args.h.is_some() || args.wh.is_some()) {
        return Err(Failure::input(
            "--h and --wh apply to g-h and rooted-h only",
        ));
    }
    if needs_n != args.n.is_some() {
        return Err(Failure::input(if needs_n {
            "this construction needs --n"
        } else {
            "--n applies to kn-k2, g-kn and rooted-kn only"
        }));
    }
    if (args.kind == RootedH) != args.root.is_some() {
        return Err(Failure::input(if args.kind == RootedH {
            "rooted-h needs --root"
        } else {
            "--root applies to rooted-h only"
        }));
    }
    if args.kind == KnK2 && (args.g.is_some() || args.wg.is_some()) {
        return Err(Failure::input("kn-k2 takes only --n"));
    }

    let report = if args.kind == KnK2 {
        construct_kn_k2(args.n.unwrap_or_default())?
    } else {
        let g = load_graph(args.g.as_deref().unwrap_or_default())?;
        let (w_g, g_minimal) = factor_word(&g, args.wg.as_deref(), None, &args.search)?;
        let report = match args.kind {
            GK2 => construct_g_k2(&g, &w_g)?,
            GKn => construct_g_kn(&g, &w_g, args.n.unwrap_or_default())?,
            RootedK2 => construct_rooted_k2(&g, &w_g)?,
            RootedKn => construct_rooted_kn(&g, &w_g, args.n.unwrap_or_default())?,
            GH | RootedH => {
                let h = load_graph(args.h.as_deref().unwrap_or_default())?;
                let root = args.root.as_deref().map(parse_letter).transpose()?;
                let (w_h, h_minimal) =
                    factor_word(&h, args.wh.as_deref(), root.as_ref(), &args.search)?;
                let report = match &root {
                    Some(root) => construct_rooted_h(&g, &w_g, &h, &w_h, root)?,
                    None => construct_g_h(&g, &w_g, &h, &w_h)?,
                };
                report.certified(g_minimal && h_minimal)
            }
            KnK2 => unreachable!(),
        };
        if matches!(args.kind, GH | RootedH) {
            report
        } else {
            report.certified(g_minimal)
        }
    };
    Ok((render_report(&report, json), report.is_success()))
}

/// The supplied word, or a minimum-length one from the search. With a root,
/// the search is restricted to words starting at the root. The flag is
/// true when the word is known to have minimum length.
fn factor_word(
    g: &Graph,
    supplied: Option<&str>,
    root: Option<&Letter>,
    search: &SearchFlags,
) -> Result<(Word, bool), Failure> {
    if let Some(text) = supplied {
        return Ok((parse_word(text)?, false));
    }
    let unconstrained = search_minimal(g, search)?;
    let Some(root) = root else {
        return Ok((unconstrained, true));
    };
    if unconstrained.letters().first() == Some(root) {
        return Ok((unconstrained, true));
    }
    match min_length_word_starting_with(g, root, &budget(g, search))? {
        Some((word, len)) => Ok((word, len == unconstrained.len())),
        None => Err(Failure::verification(format!(
            "no representant starting with {root} within the length limit"
        ))),
    }
}

fn search_minimal(g: &Graph, search: &SearchFlags) -> Result<Word, Failure> {
    let budget = budget(g, search);
    min_length_word_with(g, &budget, &options(search))?
        .map(|(word, _)| word)
        .ok_or_else(|| {
            Failure::verification(format!(
                "no representant of length at most {}",
                budget.max_length
            ))
        })
}

fn budget(g: &Graph, search: &SearchFlags) -> SearchBudget {
    let mut budget = SearchBudget::for_graph(g);
    if let Some(states) = search.max_states {
        budget.max_states = states;
    }
    budget
}

fn options(search: &SearchFlags) -> SearchOptions {
    let threads = std::env::var("WORDREP_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    SearchOptions {
        threads,
        symmetry_reduction: search.symmetry,
    }
}

/// Reads a graph file, or builds `K<n>`, `P<n>`, `C<n>` when no file of that
/// name exists.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{arg}: {e}")))?;
        return Graph::parse(&text).map_err(|e| Failure::input(format!("{arg}: {e}")));
    }
    if let Some(graph) = standard_graph(arg) {
        return graph.map_err(Failure::from);
    }
    Err(Failure::input(format!("{arg}: no such file")))
}

fn standard_graph(arg: &str) -> Option<wordrep::Result<Graph>> {
    let kind = match arg.chars().next()? {
        'K' => StandardKind::Complete,
        'P' => StandardKind::Path,
        'C' => StandardKind::Cycle,
        _ => return None,
    };
    let n: usize = arg[1..].parse().ok()?;
    Some(Graph::standard(kind, n))
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    Word::parse(text).map_err(|e| Failure::input(format!("word {text:?}: {e}")))
}

fn parse_letter(text: &str) -> Result<Letter, Failure> {
    Letter::new(text).map_err(Failure::from)
}

fn render_graph(g: &Graph, as_json: bool) -> String {
    if as_json {
        let edges: Vec<[String; 2]> = g
            .edges()
            .into_iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect();
        serde_json::to_string_pretty(&json!({ "vertices": g.vertices(), "edges": edges }))
            .expect("graph serializes")
    } else {
        g.to_text().trim_end().to_string()
    }
}

fn render_report(report: &BoundReport, as_json: bool) -> String {
    if as_json {
        report.to_json()
    } else {
        report.to_string()
    }
}

//! `icg`: solve, generate, verify and play independence coloring games.

use std::io::{self, BufRead, Write};
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use icgame::classic::{game_chromatic_number, game_coloring_number};
use icgame::families::{self_check, FamilySpec};
use icgame::game::{apply_move, initial_state, GameState, Move, Player, Variant};
use icgame::graph::{parse_corpus, CorpusEntry, Graph};
use icgame::solver::{best_move, evaluate_moves, solve_with_stats, SolveLimits};
use icgame::verify::{parse_check_list, run_checks, value_tables, VerifyOptions};
use icgame_service::{SessionStore, IDLE_EXPIRY};
use serde_json::json;

/// `println!` that exits quietly when stdout is closed (e.g. piped to `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        let mut stdout = io::stdout().lock();
        if writeln!(stdout, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// Long graph6 strings shortened for human-readable lines.
fn short(g6: &str) -> String {
    if g6.len() <= 40 {
        g6.to_string()
    } else {
        format!("{}...", &g6[..37])
    }
}

#[derive(Parser)]
#[command(
    name = "icg",
    version,
    about = "Exact solvers for independence coloring games"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for layouts and random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest graph the exact solver accepts.
    #[arg(long, global = true)]
    limit_vertices: Option<usize>,
    /// Largest transposition table before giving up.
    #[arg(long, global = true)]
    limit_states: Option<usize>,
    /// Wall-clock budget per solve, e.g. `500ms` or `30s`.
    #[arg(long, global = true, value_parser = parse_duration)]
    time_budget: Option<Duration>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

impl Global {
    fn limits(&self) -> SolveLimits {
        let d = SolveLimits::default();
        SolveLimits {
            max_vertices: self.limit_vertices.unwrap_or(d.max_vertices),
            max_states: self.limit_states.unwrap_or(d.max_states),
            time_budget: self.time_budget,
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

/// Where graphs come from: graph6 arguments, a family, a file, or stdin.
#[derive(Args)]
struct GraphInput {
    /// graph6 strings.
    #[arg(long = "graph6", num_args = 1..)]
    graph6: Vec<String>,
    /// A family spec such as `path:6`, `g2:3` or `nary:2:3`.
    #[arg(long)]
    family: Option<String>,
    /// A file with one graph6 per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GraphInput {
    fn read(&self) -> Result<Vec<CorpusEntry>, String> {
        let mut out = Vec::new();
        for g6 in &self.graph6 {
            out.extend(parse_corpus(g6).map_err(|e| e.to_string())?);
        }
        if let Some(spec) = &self.family {
            let fam = spec
                .parse::<FamilySpec>()
                .and_then(|s| s.generate())
                .map_err(|e| e.to_string())?;
            out.push(CorpusEntry {
                line: 0,
                graph6: fam.graph.to_graph6(),
                graph: fam.graph,
            });
        }
        if let Some(path) = &self.file {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            out.extend(parse_corpus(&text).map_err(|e| e.to_string())?);
        }
        if self.graph6.is_empty() && self.family.is_none() && self.file.is_none() {
            let text = io::read_to_string(io::stdin()).map_err(|e| e.to_string())?;
            out.extend(parse_corpus(&text).map_err(|e| e.to_string())?);
        }
        Ok(out)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact game values.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        /// A, B, AB, BA, AliceSkip or `all`.
        #[arg(long, default_value = "all")]
        variant: String,
    },
    /// Game chromatic number and game coloring number.
    Classic {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Prints a family member as graph6.
    Generate {
        /// Family spec, e.g. `g3:1` or `split:4:3:5:1`.
        spec: String,
        /// Also print `id<TAB>label` lines.
        #[arg(long)]
        labels: bool,
        /// Run the family's structural self-check.
        #[arg(long)]
        check: bool,
    },
    /// Runs named checks and reports pass, fail and skip counts.
    Verify {
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// graph6 corpus; the bundled connected graphs on at most 7 vertices by default.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Random split graphs to check.
        #[arg(long, default_value_t = 50)]
        split_graphs: u64,
        /// Random trees to check.
        #[arg(long, default_value_t = 200)]
        random_trees: u64,
    },
    /// Path and cycle values next to their closed forms.
    Tables {
        #[arg(long, default_value_t = 10)]
        paths: usize,
        #[arg(long, default_value_t = 10)]
        cycles: usize,
    },
    /// Plays a game in the terminal against the engine.
    Play {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "A")]
        variant: String,
        /// The side you play.
        #[arg(long = "as", value_enum, default_value_t = Side::Alice)]
        side: Side,
        /// Show the value of every legal move before each of your turns.
        #[arg(long)]
        eval: bool,
    },
    /// Starts the HTTP session service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: SocketAddr,
        /// Directory of built explorer assets to serve at `/`.
        #[arg(long)]
        assets: Option<PathBuf>,
        #[arg(long, default_value_t = IDLE_EXPIRY.as_secs() / 60)]
        idle_minutes: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Alice,
    Bob,
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    let (num, scale) = if let Some(n) = s.strip_suffix("ms") {
        (n, 1)
    } else if let Some(n) = s.strip_suffix('s') {
        (n, 1000)
    } else {
        (s, 1)
    };
    num.trim()
        .parse::<u64>()
        .map(|n| Duration::from_millis(n * scale))
        .map_err(|_| format!("bad duration `{s}`; use e.g. 500ms or 30s"))
}

fn parse_variants(s: &str) -> Result<Vec<Variant>, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(Variant::ALL.to_vec())
    } else {
        s.split(',').map(|v| v.trim().parse()).collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("icg: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but something failed.
fn run(cli: Cli) -> Result<bool, String> {
    let g = &cli.global;
    match cli.command {
        Command::Solve { input, variant } => {
            solve_cmd(g, &input.read()?, &parse_variants(&variant)?)
        }
        Command::Classic { input } => classic_cmd(g, &input.read()?),
        Command::Generate {
            spec,
            labels,
            check,
        } => generate_cmd(g, &spec, labels, check),
        Command::Verify {
            check,
            corpus,
            threads,
            split_graphs,
            random_trees,
        } => {
            let ids = parse_check_list(&check).map_err(|e| e.to_string())?;
            let corpus = match corpus {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    parse_corpus(&text).map_err(|e| e.to_string())?
                }
                None => icgame::corpus::connected_n7(),
            };
            let opts = VerifyOptions {
                limits: g.limits(),
                threads,
                split_seeds: g.seed..g.seed + split_graphs,
                random_trees,
            };
            let reports = run_checks(&ids, &corpus, &opts);
            for r in &reports {
                if g.json() {
                    out!("{}", serde_json::to_string(r).expect("reports serialize"));
                } else {
                    out!("{r}");
                }
            }
            Ok(reports.iter().all(|r| r.ok()))
        }
        Command::Tables { paths, cycles } => tables_cmd(g, paths, cycles),
        Command::Play {
            input,
            variant,
            side,
            eval,
        } => {
            let graphs = input.read()?;
            let [entry] = graphs.as_slice() else {
                return Err("play needs exactly one graph".into());
            };
            let variant = variant.parse()?;
            let human = if side == Side::Alice {
                Player::Alice
            } else {
                Player::Bob
            };
            play_cmd(g, &entry.graph, variant, human, eval)
        }
        Command::Serve {
            addr,
            assets,
            idle_minutes,
        } => {
            let store = Arc::new(SessionStore::new(
                g.limits(),
                Duration::from_secs(idle_minutes * 60),
                g.seed,
            ));
            let rt = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
            eprintln!("icg: serving on http://{addr}");
            rt.block_on(icgame_service::serve(addr, store, assets))
                .map_err(|e| e.to_string())?;
            Ok(true)
        }
    }
}

fn solve_cmd(g: &Global, graphs: &[CorpusEntry], variants: &[Variant]) -> Result<bool, String> {
    let mut ok = true;
    for e in graphs {
        let mut values = Vec::new();
        for &v in variants {
            let start = Instant::now();
            let result = solve_with_stats(&e.graph, v, g.limits());
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            match result {
                Ok((value, stats)) => {
                    if g.json() {
                        let rec = json!({
                            "graph6": e.graph6, "variant": v, "value": value,
                            "nodes_expanded": stats.nodes_expanded, "elapsed_ms": elapsed_ms,
                        });
                        out!("{rec}");
                    }
                    values.push(value.to_string());
                }
                Err(err) => {
                    ok = false;
                    if g.json() {
                        out!(
                            "{}",
                            json!({"graph6": e.graph6, "variant": v, "error": err})
                        );
                    } else {
                        eprintln!("{} {v}: {err}", short(&e.graph6));
                    }
                    values.push("-".into());
                }
            }
        }
        if !g.json() {
            let tags: Vec<&str> = variants.iter().map(|v| v.tag()).collect();
            out!(
                "{}\t{}\t({})",
                short(&e.graph6),
                values.join(","),
                tags.join(",")
            );
        }
    }
    Ok(ok)
}

fn classic_cmd(g: &Global, graphs: &[CorpusEntry]) -> Result<bool, String> {
    let mut ok = true;
    for e in graphs {
        let start = Instant::now();
        let chi_g = game_chromatic_number(&e.graph);
        let col_g = game_coloring_number(&e.graph);
        let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
        match (chi_g, col_g) {
            (Ok(chi_g), Ok(col_g)) => {
                if g.json() {
                    let rec = json!({
                        "graph6": e.graph6, "game_chromatic_number": chi_g,
                        "game_coloring_number": col_g, "elapsed_ms": elapsed_ms,
                    });
                    out!("{rec}");
                } else {
                    out!("{}\tchi_g={chi_g}\tcol_g={col_g}", short(&e.graph6));
                }
            }
            (Err(err), _) | (_, Err(err)) => {
                ok = false;
                if g.json() {
                    out!("{}", json!({"graph6": e.graph6, "error": err.to_string()}));
                } else {
                    eprintln!("{}: {err}", short(&e.graph6));
                }
            }
        }
    }
    Ok(ok)
}

fn generate_cmd(g: &Global, spec: &str, labels: bool, check: bool) -> Result<bool, String> {
    let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
    let fam = spec.generate().map_err(|e| e.to_string())?;
    let report = check.then(|| self_check(&spec, &fam.graph));
    let passed = report.as_ref().is_none_or(|r| r.passed());
    if g.json() {
        let mut rec =
            json!({"spec": spec.to_string(), "graph6": fam.graph.to_graph6(), "n": fam.graph.n()});
        if labels {
            rec["labels"] = json!(fam.labels);
        }
        if let Some(r) = &report {
            rec["check"] = json!({"checks": r.checks, "failures": r.failures});
        }
        out!("{rec}");
    } else {
        out!("{}", fam.graph.to_graph6());
        if labels {
            print!("{}", fam.label_lines());
        }
        if let Some(r) = &report {
            eprintln!(
                "{} structural checks, {} failed",
                r.checks,
                r.failures.len()
            );
            for f in &r.failures {
                eprintln!("  {f}");
            }
        }
    }
    Ok(passed)
}

fn tables_cmd(g: &Global, paths: usize, cycles: usize) -> Result<bool, String> {
    let rows = value_tables(paths, cycles, g.limits());
    let show = |v: &Result<u32, _>| v.as_ref().map_or("-".to_string(), |x: &u32| x.to_string());
    if !g.json() {
        out!("{:<10} {:<22} {:<22}", "graph", "solved", "closed form");
    }
    for row in &rows {
        if g.json() {
            let values: Vec<_> = row.values.iter().map(|v| v.as_ref().ok()).collect();
            let rec = json!({
                "graph": row.name(), "variants": Variant::MAIN, "values": values,
                "closed_form": row.stated, "matches": row.matches(),
            });
            out!("{rec}");
        } else {
            let solved: Vec<String> = Variant::MAIN
                .iter()
                .zip(&row.values)
                .map(|(v, x)| format!("{v}:{}", show(x)))
                .collect();
            let stated: Vec<String> = Variant::MAIN
                .iter()
                .zip(row.stated)
                .map(|(v, x)| format!("{v}:{x}"))
                .collect();
            let mark = if row.matches() { "" } else { "  <- differs" };
            out!(
                "{:<10} {:<22} {:<22}{mark}",
                row.name(),
                solved.join(" "),
                stated.join(" ")
            );
        }
    }
    // a differing row is reported, not an error: the solved value is exact
    Ok(rows.iter().all(|r| r.values.iter().all(Result::is_ok)))
}

fn describe(s: &GameState) -> String {
    let colored: Vec<String> = s
        .coloring()
        .iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|c| format!("{v}:{c}")))
        .collect();
    let protected: Vec<String> = s.protected.iter().map(|v| v.to_string()).collect();
    format!(
        "round {}  colored [{}]  protected [{}]",
        s.round,
        colored.join(" "),
        protected.join(" ")
    )
}

fn play_cmd(
    g: &Global,
    graph: &Graph,
    variant: Variant,
    human: Player,
    eval: bool,
) -> Result<bool, String> {
    let limits = g.limits();
    let mut s = initial_state(graph, variant);
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    out!("{variant} game on {} vertices; you are {human}", graph.n());
    while !s.is_terminal() {
        out!("{}", describe(&s));
        let mv = if s.mover == human {
            if eval {
                match evaluate_moves(graph, &s, limits) {
                    Ok(values) => {
                        let shown: Vec<String> = values
                            .iter()
                            .map(|m| format!("{}={}", m.mv, m.value))
                            .collect();
                        out!("  values: {}", shown.join(" "));
                    }
                    Err(e) => out!("  values: {e}"),
                }
            }
            let legal: Vec<String> = s
                .legal_moves()
                .to_vec()
                .iter()
                .map(|m| m.to_string())
                .collect();
            print!("{human} to move [{}]: ", legal.join(" "));
            io::stdout().flush().map_err(|e| e.to_string())?;
            let Some(line) = lines.next() else {
                out!("");
                return Ok(false);
            };
            let line = line.map_err(|e| e.to_string())?;
            let mv = match line.trim() {
                "pass" => Move::Pass,
                "quit" | "q" => return Ok(false),
                t => match t.parse() {
                    Ok(v) => Move::Vertex(v),
                    Err(_) => {
                        out!("  enter a vertex id, `pass` or `quit`");
                        continue;
                    }
                },
            };
            mv
        } else {
            let e = best_move(graph, &s, limits).map_err(|e| e.to_string())?;
            let mv = e.best_move.expect("non-terminal");
            out!("{} plays {mv} (game value {})", s.mover, e.total);
            mv
        };
        match apply_move(graph, &s, mv) {
            Ok(next) => s = next,
            Err(e) => out!("  illegal: {e}"),
        }
    }
    out!("{}", describe(&s));
    out!("game over: {} colors", s.rounds_used());
    Ok(true)
}

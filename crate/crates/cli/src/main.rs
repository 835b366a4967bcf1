//! `webworld` command-line tool.
//!
//! Exit codes: 0 success, 1 a verification found a mismatch, 2 invalid input,
//! 3 an enumeration guard was exceeded (raise it with `WEBWORLD_MAX_ENUM`).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use webworld::identities::{fubini_log_identity, fubini_log_terms, identity_terms, DiagonalSpec};
use webworld::io;
use webworld::matrices::{
    check_flip_symmetry, check_row_sums, check_square, colouring_matrix_of_graph,
    verify_idempotent, DisjointPair, Report,
};
use webworld::polyalg::l_series;
use webworld::words::{conjecture_report, f_word, two_peg_trace};
use webworld::{enumerate_world, Error, Limits, Poly, WebGraph};

#[derive(Parser)]
#[command(
    name = "webworld",
    version,
    about = "Exact combinatorics of web diagrams and web worlds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Web worlds of a web graph.
    World {
        #[command(subcommand)]
        action: WorldCmd,
    },
    /// Colouring or mixing matrix of a world, with its index table.
    Matrix {
        kind: MatrixKind,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check one of the matrix theorems on a world.
    Verify {
        check: Check,
        #[arg(long)]
        graph: PathBuf,
        /// Second graph, for `disjoint`.
        #[arg(long)]
        graph2: Option<PathBuf>,
    },
    /// Black diamond product of coefficient lists (constant term first).
    Diamond {
        #[arg(long = "poly", required = true, value_parser = parse_poly)]
        polys: Vec<Poly>,
    },
    /// Print L_i(x).
    Lseries {
        #[arg(long = "i")]
        i: u32,
    },
    /// Identities from vanishing traces.
    Identity {
        #[command(subcommand)]
        action: IdentityCmd,
    },
    /// Word reconstruction polynomials.
    Words {
        #[command(subcommand)]
        action: WordsCmd,
    },
    /// The two-peg permutation world.
    Twopeg {
        #[command(subcommand)]
        action: TwopegCmd,
    },
}

#[derive(Subcommand)]
enum WorldCmd {
    /// List the diagrams of the world in canonical order.
    Enumerate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum IdentityCmd {
    /// Σ (-1)^{k+1} (k-1)! S(m,k).
    FubiniLog {
        #[arg(long)]
        m: u64,
    },
    /// Identity from m disjoint copies of a world.
    Trace {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand)]
enum WordsCmd {
    /// F_w for the word, one letter per character.
    Fw {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum TwopegCmd {
    /// Trace of the colouring matrix of the world with n edges between two pegs.
    Trace {
        #[arg(long)]
        n: u32,
    },
    /// Compare [x^{n-1}] of the trace with the conjectured formula.
    Conjecture {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Colouring,
    Mixing,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Idempotent,
    Flip,
    Square,
    Rowsums,
    Disjoint,
}

fn parse_poly(s: &str) -> Result<Poly, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_graph(path: &Path) -> Result<WebGraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Ok(io::parse_input(&text)?.graph())
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

/// Text to print and whether every check held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn report(name: &str, r: Report) -> Outcome {
    match r.failure {
        None => Outcome::ok(format!("{name}: holds ({} entries checked)\n", r.checked)),
        Some(m) => Outcome {
            text: format!(
                "{name}: FAILS\n{m}\nrow: {}\ncol: {}\n",
                io::diagram_to_json(&m.row),
                io::diagram_to_json(&m.col)
            ),
            ok: false,
        },
    }
}

fn run(cmd: Cmd, limits: &Limits) -> Result<Outcome, Error> {
    Ok(match cmd {
        Cmd::World {
            action: WorldCmd::Enumerate { graph, json },
        } => {
            let world = enumerate_world(&read_graph(&graph)?, limits)?;
            if json {
                Outcome::ok(pretty(&io::world_to_json(&world)))
            } else {
                Outcome::ok(format!(
                    "graph: {}\ndiagrams: {}\n{}",
                    world.graph(),
                    world.len(),
                    io::render_order(&world)
                ))
            }
        }
        Cmd::Matrix { kind, graph, json } => {
            let m = colouring_matrix_of_graph(&read_graph(&graph)?, limits)?;
            let text = match (kind, json) {
                (MatrixKind::Colouring, true) => pretty(&io::colouring_matrix_to_json(&m)),
                (MatrixKind::Mixing, true) => pretty(&io::mixing_matrix_to_json(&m.to_mixing())),
                (MatrixKind::Colouring, false) => {
                    format!(
                        "order:\n{}entries:\n{}",
                        io::render_order(m.world()),
                        io::render_colouring_matrix(&m)
                    )
                }
                (MatrixKind::Mixing, false) => format!(
                    "order:\n{}entries:\n{}",
                    io::render_order(m.world()),
                    io::render_mixing_matrix(&m.to_mixing())
                ),
            };
            Outcome::ok(text)
        }
        Cmd::Verify {
            check,
            graph,
            graph2,
        } => {
            let g = read_graph(&graph)?;
            if let Check::Disjoint = check {
                let g2 =
                    graph2.ok_or_else(|| Error::InvalidInput("disjoint needs --graph2".into()))?;
                let pair = DisjointPair::build(&g, &read_graph(&g2)?, limits)?;
                return Ok(report("disjoint", pair.check()));
            }
            let m = colouring_matrix_of_graph(&g, limits)?;
            match check {
                Check::Idempotent => report("idempotent", verify_idempotent(&m.to_mixing())),
                Check::Flip => report("flip", check_flip_symmetry(&m)),
                Check::Square => report("square", check_square(&m)),
                Check::Rowsums => report("rowsums", check_row_sums(&m)),
                Check::Disjoint => unreachable!(),
            }
        }
        Cmd::Diamond { polys } => Outcome::ok(format!(
            "{}\n",
            webworld::black_diamond(&polys)?.to_coeff_string()
        )),
        Cmd::Lseries { i } => Outcome::ok(format!("{}\n", l_series(i).to_coeff_string())),
        Cmd::Identity {
            action: IdentityCmd::FubiniLog { m },
        } => {
            let terms = fubini_log_terms(m)?;
            let mut cells = vec![vec!["k".to_string(), "term".to_string()]];
            cells.extend(
                terms
                    .iter()
                    .enumerate()
                    .map(|(k, t)| vec![(k + 1).to_string(), t.to_string()]),
            );
            let sum = fubini_log_identity(m)?;
            let mut text = io::render_grid(&cells);
            writeln!(text, "sum = {sum}").unwrap();
            Outcome {
                text,
                ok: sum.is_zero(),
            }
        }
        Cmd::Identity {
            action: IdentityCmd::Trace { graph, m },
        } => {
            let matrix = colouring_matrix_of_graph(&read_graph(&graph)?, limits)?;
            let spec = DiagonalSpec::from_matrix(&matrix);
            let terms = identity_terms(&spec, m)?;
            let mut text = String::from("diagonal:\n");
            for (p, h) in spec.polys().iter().zip(spec.mults()) {
                writeln!(text, "  {} (multiplicity {h})", p.to_coeff_string()).unwrap();
            }
            let mut cells = vec![vec![
                "exponents".into(),
                "weight".into(),
                "product".into(),
                "value".into(),
            ]];
            for t in &terms {
                let exps: Vec<String> = t.exponents.iter().map(u64::to_string).collect();
                cells.push(vec![
                    exps.join(","),
                    t.weight.to_string(),
                    t.product.to_coeff_string(),
                    t.value.to_string(),
                ]);
            }
            text.push_str(&io::render_grid(&cells));
            let sum: webworld::Rat = terms.into_iter().map(|t| t.value).sum();
            writeln!(text, "sum = {sum}").unwrap();
            Outcome {
                text,
                ok: sum.is_zero(),
            }
        }
        Cmd::Words {
            action: WordsCmd::Fw { word },
        } => {
            let w: Vec<char> = word.chars().collect();
            Outcome::ok(format!("{}\n", f_word(&w, limits)?.to_coeff_string()))
        }
        Cmd::Twopeg {
            action: TwopegCmd::Trace { n },
        } => Outcome::ok(format!("{}\n", two_peg_trace(n, limits)?.to_coeff_string())),
        Cmd::Twopeg {
            action: TwopegCmd::Conjecture { n },
        } => Outcome::ok(format!("{}\n", conjecture_report(n, limits)?)),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd, &Limits::from_env()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_guard() { 3 } else { 2 })
        }
    }
}

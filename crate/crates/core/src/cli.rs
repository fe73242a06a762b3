//! Command-line front end. Exit codes: 0 member / accepted, 1 non-member /
//! rejected, 2 usage, I/O, parse or schema error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{run_bench, BenchConfig, Family};
use crate::bipartite::AuxBipartite;
use crate::certificate::Obstruction;
use crate::generate::{gnp, planted_no, planted_yes, rng_from_seed};
use crate::graph::{parse_graph, write_graph, Format, Graph};
use crate::oracle::{oracle_completion, oracle_forbidden};
use crate::recognize::{recognize, verify, Certificate};
use crate::roles::{assign_roles, RolesOutcome};

pub const EXIT_MEMBER: i32 = 0;
pub const EXIT_NON_MEMBER: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "probedf",
    version,
    about = "Certifying recognition of probe diamond-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Gnp,
    PlantedYes,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::Edgelist,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Gnp,
    PlantedYes,
    PlantedNo,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recognize one or more graphs and print their certificates.
    Recognize {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Generate a random graph.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Template planted by `planted-no` (1..=17); drawn from the seed if absent.
        #[arg(long)]
        indicator: Option<u8>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Decide membership by brute force (at most 64 vertices).
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Print the auxiliary bipartite graph as an edgelist.
    Aux {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Time recognition on instances with m close to density * n.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [500, 1000, 2000, 4000, 8000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10.0)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Instances per size.
        #[arg(long, default_value_t = 1)]
        instances: usize,
        #[arg(long, value_enum, default_value = "gnp")]
        family: FamilyArg,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_MEMBER;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Recognize { files, format, json } => cmd_recognize(&files, format.into(), json, out),
        Command::Verify { graph, cert, format } => cmd_verify(&graph, &cert, format.into(), out),
        Command::Gen {
            kind,
            n,
            p,
            seed,
            indicator,
            format,
        } => cmd_gen(kind, n, p, seed, indicator, format.into(), out),
        Command::Oracle { file, format } => cmd_oracle(&file, format.into(), out),
        Command::Aux { file, format } => cmd_aux(&file, format.into(), out),
        Command::Bench {
            sizes,
            density,
            seed,
            repeats,
            instances,
            family,
            json,
        } => {
            let cfg = BenchConfig {
                sizes,
                density,
                seed,
                repeats,
                instances,
                family: match family {
                    FamilyArg::Gnp => Family::Gnp,
                    FamilyArg::PlantedYes => Family::PlantedYes,
                },
            };
            cmd_bench(&cfg, json, out)
        }
    }
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn load(path: &Path, format: Format) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text, format).map_err(|e| format!("{}: {e}", path.display()))
}

/// Worker count for batch recognition, from `PROBEDF_THREADS`.
pub fn thread_budget() -> usize {
    std::env::var("PROBEDF_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Applies `f` to every item on at most `threads` workers, keeping order.
pub fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn describe(cert: &Certificate) -> String {
    let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    match cert {
        Certificate::Positive(p) => {
            let pairs: Vec<String> = p.completion.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            format!(
                "member: yes\nprobes: {}\nnonprobes: {}\ncompletion: {}\n",
                list(&p.probes),
                list(&p.nonprobes),
                pairs.join(" ")
            )
        }
        Certificate::Negative(w) => format!(
            "member: no\nobstruction: {} (indicator {})\nvertices: {}\n",
            w.obstruction.name(),
            w.indicator(),
            list(&w.vertices)
        ),
    }
}

fn cmd_recognize(files: &[PathBuf], format: Format, json: bool, out: &mut dyn Write) -> Result<i32, String> {
    let results = par_map(files, thread_budget(), |path| load(path, format).map(|g| recognize(&g)));
    let mut code = EXIT_MEMBER;
    let mut first_error = None;
    for (path, res) in files.iter().zip(results) {
        match res {
            Ok(cert) => {
                if !cert.is_member() {
                    code = code.max(EXIT_NON_MEMBER);
                }
                if json {
                    writeln!(out, "{}", cert.to_json()).map_err(io)?;
                } else {
                    if files.len() > 1 {
                        writeln!(out, "# {}", path.display()).map_err(io)?;
                    }
                    write!(out, "{}", describe(&cert)).map_err(io)?;
                }
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        Some(e) => Err(e),
        None => Ok(code),
    }
}

fn cmd_verify(graph: &Path, cert: &Path, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let g = load(graph, format)?;
    let text = std::fs::read_to_string(cert).map_err(|e| format!("{}: {e}", cert.display()))?;
    let c = Certificate::from_json(&text).map_err(|e| format!("{}: {e}", cert.display()))?;
    let ok = verify(&g, &c);
    writeln!(out, "{}", if ok { "valid" } else { "invalid" }).map_err(io)?;
    Ok(if ok { EXIT_MEMBER } else { EXIT_NON_MEMBER })
}

fn cmd_gen(
    kind: Kind,
    n: usize,
    p: f64,
    seed: u64,
    indicator: Option<u8>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("--p must lie in [0, 1], got {p}"));
    }
    let mut rng = rng_from_seed(seed);
    let g = match kind {
        Kind::Gnp => gnp(n, p, &mut rng),
        Kind::PlantedYes => planted_yes(n, p, &mut rng),
        Kind::PlantedNo => {
            let ob = match indicator {
                Some(i) => Obstruction::from_indicator(i).ok_or_else(|| format!("no template with indicator {i}"))?,
                None => {
                    use rand::seq::IndexedRandom;
                    *Obstruction::all().choose(&mut rng).expect("non-empty")
                }
            };
            if n < ob.order() {
                return Err(format!("{} needs --n at least {}", ob.name(), ob.order()));
            }
            planted_no(n, p, ob, &mut rng)
        }
    };
    write!(out, "{}", write_graph(&g, format)).map_err(io)?;
    Ok(EXIT_MEMBER)
}

fn cmd_oracle(file: &Path, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let g = load(file, format)?;
    if g.n() > 64 {
        return Err(format!("oracles handle at most 64 vertices, got {}", g.n()));
    }
    let forbidden = oracle_forbidden(&g);
    let completion = oracle_completion(&g);
    let obstruction = forbidden
        .obstruction
        .as_ref()
        .map(|(ob, vs)| json!({"indicator": ob.indicator(), "name": ob.name(), "vertices": vs}));
    let report = json!({
        "member": forbidden.member,
        "obstruction": obstruction,
        "completion_member": completion.member,
    });
    writeln!(out, "{report}").map_err(io)?;
    if forbidden.member != completion.member {
        return Err("oracles disagree".to_string());
    }
    Ok(if forbidden.member { EXIT_MEMBER } else { EXIT_NON_MEMBER })
}

fn cmd_aux(file: &Path, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let g = load(file, format)?;
    match assign_roles(&g) {
        RolesOutcome::LucsViolation(_) => return Err("graph is not LUCS; the auxiliary graph is undefined".into()),
        RolesOutcome::Conflict(_) | RolesOutcome::Ok(_) => {}
    }
    let aux = AuxBipartite::build(&g);
    for a in 0..aux.rep_count() {
        let (i, j) = aux.rep(a);
        writeln!(out, "# {} represents {i} {j}", aux.n() + a).map_err(io)?;
    }
    write!(out, "{}", write_graph(&aux.to_graph(), Format::Edgelist)).map_err(io)?;
    Ok(EXIT_MEMBER)
}

fn cmd_bench(cfg: &BenchConfig, json: bool, out: &mut dyn Write) -> Result<i32, String> {
    if cfg.sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err("--sizes must be ascending".into());
    }
    if cfg.density.is_nan() || cfg.density < 0.0 {
        return Err("--density must be non-negative".into());
    }
    let report = run_bench(cfg);
    if json {
        let text = serde_json::to_string(&report).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(io)?;
        return Ok(EXIT_MEMBER);
    }
    writeln!(
        out,
        "{:>8} {:>9} {:>7} {:>12} {:>12} {:>9}",
        "n", "m", "member", "seconds", "ops", "ops/nm"
    )
    .map_err(io)?;
    for r in &report.rows {
        writeln!(
            out,
            "{:>8} {:>9} {:>7} {:>12.3e} {:>12} {:>9.5}",
            r.n,
            r.m,
            if r.member { "yes" } else { "no" },
            r.seconds,
            r.ops.total(),
            r.ops_per_nm()
        )
        .map_err(io)?;
    }
    match report.exponent {
        Some(e) => writeln!(out, "exponent (time vs n*m): {e:.3}"),
        None => writeln!(out, "exponent (time vs n*m): undefined"),
    }
    .map_err(io)?;
    Ok(EXIT_MEMBER)
}

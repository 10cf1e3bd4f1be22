use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rabu_core::gwreath::{self, GwpSpec};
use rabu_core::report::all_pass;
use rabu_core::suite::{self, SuiteOptions};
use rabu_core::universal;
use rabu_core::{load_config, Ball, Check, Config, Error, Result, TreeWallTree};

#[derive(Parser)]
#[command(name = "rabu", version, about = "Right-angled buildings and their universal groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Reduce {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two words represent the same element.
    Equal {
        #[arg(short, long)]
        config: PathBuf,
        a: String,
        b: String,
    },
    /// All reduced representations of a reduced word.
    Rep {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long)]
        word: String,
    },
    /// Position poset and descent data of a reduced word.
    Poset {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long)]
        word: String,
    },
    /// Build the ball of chambers around the base chamber.
    Ball {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long)]
        radius: usize,
        #[arg(long)]
        stats: bool,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Write the chamber index table.
        #[arg(long = "table", value_name = "FILE")]
        table: Option<PathBuf>,
    },
    /// Tree-wall tree of one generator.
    Twtree {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short = 't', long = "type")]
        gen: String,
        #[arg(short, long)]
        radius: usize,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Order of the stabilizer action on a Weyl-sphere.
    SphereOrder {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long)]
        word: String,
        #[arg(short, long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Order of the stabilizer action on a ball.
    BallOrder {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long)]
        radius: usize,
        #[arg(short, long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Generalized wreath product of a word, or of a spec file.
    Gwp {
        #[arg(short, long, required_unless_present = "spec", requires = "word")]
        config: Option<PathBuf>,
        #[arg(short, long, conflicts_with = "spec")]
        word: Option<String>,
        #[arg(long, value_name = "FILE")]
        spec: Option<PathBuf>,
        /// Compare with the intersection of iterated wreath products.
        #[arg(long, requires = "word")]
        intersect: bool,
    },
    /// Report the simplicity hypotheses.
    Check {
        #[arg(short, long)]
        config: PathBuf,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(short, long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        word_pairs: usize,
        #[arg(long, default_value_t = 8)]
        word_length: usize,
        #[arg(long, default_value_t = 1000)]
        concave_pairs: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Generate,
    Both,
}

/// Text lines, the JSON mirror and the overall verdict.
struct Report {
    lines: Vec<String>,
    json: Value,
    pass: bool,
}

impl Report {
    fn info(lines: Vec<String>, json: Value) -> Self {
        Report { lines, json, pass: true }
    }

    fn checks(checks: Vec<Check>) -> Self {
        let pass = all_pass(&checks);
        let mut lines: Vec<String> = checks.iter().map(ToString::to_string).collect();
        lines.push(if pass { "PASS".into() } else { "FAIL".into() });
        Report {
            lines,
            json: json!({ "checks": checks, "pass": pass }),
            pass,
        }
    }
}

fn config(path: &Path) -> Result<Config> {
    load_config(path).map_err(|e| match e {
        Error::Io(err) => Error::config(path.display().to_string(), err.to_string()),
        other => other,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(Error::from)
}

/// `formula=… generated=… PASS` or the single value that was asked for.
fn compare(method: Method, formula: impl FnOnce() -> Result<String>, generated: impl FnOnce() -> Result<String>) -> Result<Report> {
    let f = matches!(method, Method::Formula | Method::Both).then(formula).transpose()?;
    let g = matches!(method, Method::Generate | Method::Both).then(generated).transpose()?;
    let mut parts = Vec::new();
    let mut obj = serde_json::Map::new();
    if let Some(f) = &f {
        parts.push(format!("formula={f}"));
        obj.insert("formula".into(), json!(f));
    }
    if let Some(g) = &g {
        parts.push(format!("generated={g}"));
        obj.insert("generated".into(), json!(g));
    }
    let pass = match (&f, &g) {
        (Some(f), Some(g)) => {
            let pass = f == g;
            parts.push(if pass { "PASS".into() } else { "FAIL".into() });
            obj.insert("pass".into(), json!(pass));
            pass
        }
        _ => true,
    };
    Ok(Report {
        lines: vec![parts.join(" ")],
        json: Value::Object(obj),
        pass,
    })
}

fn run(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Reduce { config: path, word } => {
            let d = config(&path)?.diagram;
            let w = d.parse_word(&word)?;
            let r = d.format_word(&d.reduce(&w)?);
            Ok(Report::info(vec![r.clone()], json!({ "word": word, "normal_form": r })))
        }
        Command::Equal { config: path, a, b } => {
            let d = config(&path)?.diagram;
            let eq = d.equal(&d.parse_word(&a)?, &d.parse_word(&b)?)?;
            Ok(Report::info(vec![eq.to_string()], json!({ "equal": eq })))
        }
        Command::Rep { config: path, word } => {
            let d = config(&path)?.diagram;
            let reps = d.rep_set(&d.parse_word(&word)?)?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for r in &reps {
                let w = d.format_word(&r.word);
                let pos: Vec<usize> = r.positions.iter().map(|p| p + 1).collect();
                lines.push(format!("{w}\t{pos:?}"));
                rows.push(json!({ "word": w, "positions": pos }));
            }
            Ok(Report::info(lines, json!({ "reps": rows })))
        }
        Command::Poset { config: path, word } => {
            let d = config(&path)?.diagram;
            let w = d.parse_word(&word)?;
            let poset = d.position_poset(&w)?;
            let class = d.descent_data(&w)?.class;
            let pairs: Vec<(usize, usize)> = poset.pairs().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
            let class = format!("{class:?}");
            Ok(Report::info(
                vec![poset.to_string(), format!("class {class}")],
                json!({ "precedes": pairs, "class": class }),
            ))
        }
        Command::Ball { config: path, radius, stats, dot, table } => {
            let Config { diagram: d, caps } = config(&path)?;
            let ball = Ball::build(&d, radius, &caps)?;
            let s = ball.stats();
            let mut lines = vec![format!("chambers={} panels={} edges={}", s.chambers, s.panels, s.edges)];
            if stats {
                for (n, k) in s.sphere_sizes.iter().enumerate() {
                    lines.push(format!("sphere {n}: {k}"));
                }
            }
            if let Some(p) = dot {
                write(&p, &ball.to_dot(&d))?;
            }
            if let Some(p) = table {
                write(&p, &serde_json::to_string_pretty(&ball.to_json(&d))?)?;
            }
            Ok(Report::info(lines, serde_json::to_value(&s)?))
        }
        Command::Twtree { config: path, gen, radius, dot } => {
            let Config { diagram: d, caps } = config(&path)?;
            let s = d.generator(&gen)?;
            let ball = Ball::build(&d, radius, &caps)?;
            let tree = TreeWallTree::build(&d, &ball, s);
            if let Some(p) = dot {
                write(&p, &tree.to_dot(&d))?;
            }
            let checks = vec![
                Check::holds("connected", tree.is_connected()),
                Check::holds("acyclic", tree.is_tree()),
            ];
            let mut r = Report::checks(checks);
            let sizes = format!(
                "tree-walls={} residues={} edges={}",
                tree.tree_walls.len(),
                tree.residues.len(),
                tree.edges.len()
            );
            r.lines.insert(0, sizes);
            r.json["tree_walls"] = json!(tree.tree_walls.len());
            r.json["residues"] = json!(tree.residues.len());
            r.json["edges"] = json!(tree.edges.len());
            Ok(r)
        }
        Command::SphereOrder { config: path, word, method } => {
            let Config { diagram: d, caps } = config(&path)?;
            let w = d.parse_word(&word)?;
            compare(
                method,
                || Ok(universal::sphere_order_formula(&d, &w)?.to_string()),
                || Ok(universal::sphere_stabilizer(&d, &w, &caps)?.order().to_string()),
            )
        }
        Command::BallOrder { config: path, radius, method } => {
            let Config { diagram: d, caps } = config(&path)?;
            compare(
                method,
                || Ok(universal::ball_order_formula(&d, radius)?.to_string()),
                || Ok(universal::ball_stabilizer(&d, radius, &caps)?.order().to_string()),
            )
        }
        Command::Gwp { config: path, word, spec, intersect } => {
            let (spec, caps, word) = match (spec, path, word) {
                (Some(file), _, _) => {
                    let text = std::fs::read_to_string(&file)?;
                    (GwpSpec::from_json(&text)?, rabu_core::Caps::default(), None)
                }
                (None, Some(path), Some(word)) => {
                    let Config { diagram: d, caps } = config(&path)?;
                    let w = d.parse_word(&word)?;
                    (GwpSpec::for_word(&d, &w)?, caps, Some((d, w)))
                }
                _ => return Err(Error::Precondition("gwp needs --spec FILE or -c CONFIG --word W".into())),
            };
            let group = gwreath::gwp_generate(&spec, caps.enumeration)?;
            let mut checks = vec![Check::equal(
                "order",
                gwreath::gwp_order_formula(&spec),
                group.order(),
            )];
            if intersect {
                if let Some((d, w)) = &word {
                    let meet = gwreath::wreath_intersection(d, w, caps.enumeration)?;
                    checks.push(Check::holds(
                        "equals intersection of wreath products",
                        meet.group.same_action(&group.group)?,
                    ));
                }
            }
            let summary = gwreath::summarize(&spec, &group.group);
            let mut r = Report::checks(checks);
            r.lines.insert(0, format!("degree={}", summary.degree));
            r.lines.insert(0, format!("elements={}", summary.elements.join(",")));
            r.json["summary"] = serde_json::to_value(&summary)?;
            Ok(r)
        }
        Command::Check { config: path } => {
            let d = config(&path)?.diagram;
            let checks = universal::check_preconditions(&d);
            let ir = universal::verdict(&checks, "IR");
            let st = universal::verdict(&checks, "ST");
            let mut lines: Vec<String> = checks.iter().map(ToString::to_string).collect();
            let mark = |b: bool| if b { "yes" } else { "no" };
            lines.push(format!("IR {} ST {}", mark(ir), mark(st)));
            Ok(Report::info(lines, json!({ "checks": checks, "ir": ir, "st": st })))
        }
        Command::Verify { config: path, radius, seed, word_pairs, word_length, concave_pairs } => {
            let Config { diagram: d, caps } = config(&path)?;
            let opts = SuiteOptions { radius, seed, word_pairs, word_length, concave_pairs };
            Ok(Report::checks(suite::run_suite(&d, &opts, &caps)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("serializable"));
            } else {
                for l in &r.lines {
                    println!("{l}");
                }
            }
            ExitCode::from(if r.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

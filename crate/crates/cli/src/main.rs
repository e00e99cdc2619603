mod render;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partcat::classify::ClassificationReport;
use partcat::engine::{CategoryTag, DEFAULT_BOUND};
use partcat::lab::{build_sigma_infty, build_sigma_k, check_relations, DEFAULT_SIZE_BUDGET};
use partcat::named::resolve;
use partcat::suite::{run_suite, Suite};
use partcat::word::{doubling_check, wdepth_capped, DEFAULT_LENGTH_CAP};
use partcat::{
    classify, CategoryClosure, ClassifyOptions, ClosureOptions, Corner, Error, MembershipAnswer, Mode, Partition, Word,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "partcat", version, about = "Categories of partitions on the command line")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for closure runs (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Partition operations.
    #[command(subcommand)]
    Op(OpCommand),
    /// Word analytics on one-row partitions.
    #[command(subcommand)]
    Word(WordCommand),
    /// Draw a partition, or the Dyck path of a word, as SVG.
    Render {
        /// Partition literal or catalog tag.
        partition: String,
        /// Draw the Dyck path of the word instead.
        #[arg(long)]
        dyck: bool,
    },
    /// Build a closure and print its document.
    Generate {
        #[command(flatten)]
        closure: ClosureArgs,
        /// Include a derivation step for every orbit.
        #[arg(long)]
        derivations: bool,
    },
    /// Three-valued membership of a partition.
    Member {
        #[command(flatten)]
        closure: ClosureArgs,
        #[arg(long)]
        query: String,
    },
    /// Classify the category generated by the given partitions.
    Classify {
        #[command(flatten)]
        closure: ClosureArgs,
        /// Exit with status 1 unless the class matches, e.g. `PiSeries(2)`,
        /// `GroupTheoretical` or a category tag such as `group-orthogonal`.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Separating representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Run a verification suite.
    Verify {
        /// One of lemma2.1, lemma3.x, doubling, wdepth, thmain, sigma, catalog, or all.
        suite: String,
    },
    /// Configuration.
    #[command(subcommand)]
    Config(ConfigCommand),
}

#[derive(Args)]
struct ClosureArgs {
    /// Generator: catalog tag or partition literal. Repeatable.
    #[arg(long = "gen")]
    generators: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    #[arg(long, default_value = "full")]
    mode: String,
}

#[derive(Subcommand)]
enum OpCommand {
    Tensor { p: String, q: String },
    /// `q ∘ p`: `p` is placed on top of `q`.
    Compose { q: String, p: String },
    Involute { p: String },
    Rotate {
        p: String,
        /// top-left, top-right, bottom-left or bottom-right.
        #[arg(long, default_value = "bottom-left")]
        corner: String,
    },
    Reflect { p: String },
}

#[derive(Subcommand)]
enum WordCommand {
    /// Single-double leg form.
    Sdl { word: String },
    Dyck { word: String },
    Wdepth {
        word: String,
        /// Accept words longer than the default cap.
        #[arg(long)]
        length_cap_override: Option<usize>,
    },
    Doubling { word: String },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Check the relations of `σ_k` up to a depth.
    SigmaK {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        depth: usize,
        /// A violation is the expected outcome.
        #[arg(long)]
        expect_violation: bool,
    },
    /// Relations of `σ_∞` and the noncommuting pair `u11²`, `u33`.
    SigmaInf {
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Print a representation as a matrix-literal document.
    Export {
        /// `σ_k`; omit for `σ_∞`.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConfigCommand {
    Show,
}

/// Failure of a command: status 1 for unexpected results, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) | Error::Document(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn unexpected(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type Out = Result<String, Failure>;

fn parse(text: &str) -> Result<Partition, Failure> {
    Ok(resolve(text)?)
}

/// A word literal, or failing that a one-row catalog partition.
fn parse_word(text: &str) -> Result<Word, Failure> {
    match Word::parse(text) {
        Ok(w) => Ok(w),
        Err(e) => match resolve(text) {
            Ok(p) => Ok(Word::from_partition(&p)?),
            Err(_) => Err(e.into()),
        },
    }
}

fn shown(p: &Partition) -> String {
    if p.is_empty() {
        "empty".into()
    } else {
        p.to_string()
    }
}

fn letter(b: u32) -> String {
    if b < 26 {
        ((b'a' + b as u8) as char).to_string()
    } else {
        format!("{{b{}}}", b + 1)
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn closure_of(args: &ClosureArgs, workers: Option<usize>) -> Result<CategoryClosure, Failure> {
    let gens = args.generators.iter().map(|g| parse(g)).collect::<Result<Vec<_>, _>>()?;
    let mode: Mode = args.mode.parse()?;
    Ok(CategoryClosure::build(
        &gens,
        ClosureOptions::new(args.bound).mode(mode).workers(workers),
    )?)
}

fn cmd_op(cmd: &OpCommand, format: Format) -> Out {
    let (result, loops) = match cmd {
        OpCommand::Tensor { p, q } => (parse(p)?.tensor(&parse(q)?), None),
        OpCommand::Compose { q, p } => {
            let (r, loops) = parse(q)?.compose(&parse(p)?)?;
            (r, Some(loops))
        }
        OpCommand::Involute { p } => (parse(p)?.involute(), None),
        OpCommand::Rotate { p, corner } => {
            let corner: Corner = corner.parse()?;
            (parse(p)?.rotate(corner)?, None)
        }
        OpCommand::Reflect { p } => (parse(p)?.vertical_reflect(), None),
    };
    Ok(match format {
        Format::Svg => render::partition_svg(&result),
        Format::Structured => pretty(&json!({ "result": result.literal(), "loops": loops })),
        Format::Text => match loops {
            Some(l) => format!("{}, loops={l}\n", shown(&result)),
            None => format!("{}\n", shown(&result)),
        },
    })
}

fn cmd_word(cmd: &WordCommand, format: Format) -> Out {
    match cmd {
        WordCommand::Sdl { word } => {
            let sd = parse_word(word)?.single_double_form();
            Ok(match format {
                Format::Structured => pretty(&json!({ "single_double_form": sd.to_string() })),
                _ => format!("{sd}\n"),
            })
        }
        WordCommand::Dyck { word } => {
            let path = parse_word(word)?.dyck_path();
            Ok(match format {
                Format::Svg => render::dyck_svg(&path),
                Format::Structured => pretty(&json!({ "path": path.as_string(), "levels": path.levels() })),
                Format::Text => format!("{path}\n"),
            })
        }
        WordCommand::Wdepth {
            word,
            length_cap_override,
        } => {
            let w = parse_word(word)?;
            let cap = length_cap_override.unwrap_or(DEFAULT_LENGTH_CAP);
            let (depth, witness) = wdepth_capped(&w, cap)?;
            if format == Format::Structured {
                return Ok(pretty(&json!({ "wdepth": depth, "witness": witness })));
            }
            let mut s = format!("{depth}\n");
            if let Some(wit) = witness {
                let n = w.len();
                let rot: Vec<u32> = (0..n).map(|i| w.letters()[(i + wit.offset) % n]).collect();
                let letters: Vec<String> = wit.letters.iter().map(|&b| letter(b)).collect();
                let _ = writeln!(s, "letters: {}  rotation offset: {}", letters.join(" "), wit.offset);
                for (name, range) in wit.segments(n) {
                    let text: String = range.map(|i| letter(rot[i % n])).collect();
                    let _ = writeln!(s, "  {name:<8} {text}");
                }
            }
            Ok(s)
        }
        WordCommand::Doubling { word } => {
            let w = parse_word(word)?;
            let v = doubling_check(&w);
            if format == Format::Structured {
                return Ok(pretty(&json!({ "violations": v })));
            }
            let mut s = format!("{} violations\n", v.len());
            for x in &v {
                let _ = writeln!(
                    s,
                    "  {:?}: letter {} from {} to {}",
                    x.rule,
                    letter(x.letter),
                    x.start + 1,
                    x.end + 1
                );
            }
            Ok(s)
        }
    }
}

fn cmd_member(closure: &CategoryClosure, query: &Partition, format: Format) -> Out {
    let answer = closure.member(query);
    if format == Format::Structured {
        return Ok(pretty(&serde_json::to_value(&answer).expect("json")));
    }
    let mut s = format!("{}\n", answer.label());
    match &answer {
        MembershipAnswer::InClosure { derivation } => s.push_str(&derivation.to_string()),
        MembershipAnswer::ExcludedByCertificate { certificate } => {
            let _ = writeln!(s, "{certificate}");
        }
        MembershipAnswer::NotFoundUpToBound { bound } => {
            let _ = writeln!(s, "not reached with at most {bound} points");
        }
    }
    Ok(s)
}

/// Does the report match an expectation such as `PiSeries(2)`?
fn class_matches(report: &ClassificationReport, expect: &str) -> bool {
    let norm = |s: &str| s.to_ascii_lowercase().replace([' ', '_', '-'], "");
    let class = report.class.to_string();
    if norm(&class) == norm(expect) {
        return true;
    }
    if let partcat::Class::NonHyperoctahedral(tag) = report.class {
        if let Ok(t) = expect.parse::<CategoryTag>() {
            return t == tag;
        }
        return norm(&tag.symbol()).contains(&norm(expect)) && !expect.trim().is_empty();
    }
    false
}

fn cmd_rep(cmd: &RepCommand, format: Format) -> Out {
    match cmd {
        RepCommand::SigmaK {
            k,
            depth,
            expect_violation,
        } => {
            let rep = build_sigma_k(*k)?;
            let report = check_relations(&rep, *depth);
            let out = match format {
                Format::Structured => pretty(&serde_json::to_value(&report).expect("json")),
                _ => format!("sigma_{k} on {}: {report}\n", rep.space()),
            };
            match (report.holds(), *expect_violation) {
                (true, false) | (false, true) => Ok(out),
                (true, true) => Err(unexpected(format!("{out}expected a violation, all relations hold"))),
                (false, false) => Err(unexpected(out)),
            }
        }
        RepCommand::SigmaInf { depth } => {
            let rep = build_sigma_infty();
            let report = check_relations(&rep, *depth);
            let u11 = rep.entry_matrix(0, 0);
            let sq = &u11 * &u11;
            let u33 = rep.entry_matrix(2, 2);
            let commute = sq.commutes_with(&u33);
            let out = match format {
                Format::Structured => pretty(&json!({
                    "relations": report,
                    "u11_squared": sq.rows(),
                    "u33": u33.rows(),
                    "u11_squared_u33": (&sq * &u33).rows(),
                    "u33_u11_squared": (&u33 * &sq).rows(),
                    "commute": commute,
                })),
                _ => format!(
                    "sigma_inf on {}: {report}\nu11^2 = {sq}\nu33 = {u33}\nu11^2 u33 = {}\nu33 u11^2 = {}\n{}\n",
                    rep.space(),
                    &sq * &u33,
                    &u33 * &sq,
                    if commute { "u11^2 and u33 commute" } else { "u11^2 and u33 do not commute" }
                ),
            };
            if report.holds() && !commute {
                Ok(out)
            } else {
                Err(unexpected(out))
            }
        }
        RepCommand::Export { k } => {
            let rep = match k {
                Some(k) => build_sigma_k(*k)?,
                None => build_sigma_infty(),
            };
            Ok(rep.to_document().to_json())
        }
    }
}

fn cmd_verify(suite: &str, workers: Option<usize>, format: Format) -> Out {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, workers)).collect();
    let ok = reports.iter().all(|r| r.all_passed());
    let out = match format {
        Format::Structured => pretty(&serde_json::to_value(&reports).expect("json")),
        _ => reports.iter().map(|r| r.to_string()).collect(),
    };
    if ok {
        Ok(out)
    } else {
        Err(unexpected(out))
    }
}

fn cmd_config(format: Format, workers: Option<usize>) -> Out {
    let config = json!({
        "bound": DEFAULT_BOUND,
        "mode": Mode::default().to_string(),
        "format": "text",
        "intertwiner_size_budget": DEFAULT_SIZE_BUDGET,
        "wdepth_length_cap": DEFAULT_LENGTH_CAP,
        "workers": workers.map_or("all cores".to_string(), |w| w.to_string()),
    });
    Ok(match format {
        Format::Structured => pretty(&config),
        _ => config
            .as_object()
            .expect("object")
            .iter()
            .map(|(k, v)| format!("{k} = {}\n", v.as_str().map_or(v.to_string(), str::to_owned)))
            .collect(),
    })
}

fn run(cli: &Cli) -> Out {
    let format = cli.format;
    match &cli.command {
        Command::Op(cmd) => cmd_op(cmd, format),
        Command::Word(cmd) => cmd_word(cmd, format),
        Command::Render { partition, dyck } => {
            if *dyck {
                Ok(render::dyck_svg(&parse_word(partition)?.dyck_path()))
            } else {
                Ok(render::partition_svg(&parse(partition)?))
            }
        }
        Command::Generate { closure, derivations } => {
            let c = closure_of(closure, cli.workers)?;
            Ok(match format {
                Format::Text => {
                    let st = c.stats();
                    let mut s = format!(
                        "{} orbits, {} one-row members, {} rounds, bound {}\n",
                        c.orbit_count(),
                        st.one_row_by_size.values().sum::<usize>(),
                        st.rounds,
                        c.bound()
                    );
                    for (size, count) in &st.orbits_by_size {
                        let _ = writeln!(s, "  {size:>3} points: {count} orbits");
                    }
                    if st.frontier_at_bound > 0 {
                        let _ = writeln!(s, "note: {} orbits at the bound; closure is truncated", st.frontier_at_bound);
                    }
                    s
                }
                _ => c.export(*derivations),
            })
        }
        Command::Member { closure, query } => {
            let q = parse(query)?;
            let c = closure_of(closure, cli.workers)?;
            cmd_member(&c, &q, format)
        }
        Command::Classify { closure, expect } => {
            let gens = closure.generators.iter().map(|g| parse(g)).collect::<Result<Vec<_>, _>>()?;
            let mut opts = ClassifyOptions::new(closure.bound);
            opts.workers = cli.workers;
            let report = classify(&gens, opts)?;
            let out = match format {
                Format::Structured => report.to_json(),
                _ => report.to_string(),
            };
            match expect {
                Some(e) if !class_matches(&report, e) => {
                    Err(unexpected(format!("{out}expected {e}, got {}", report.class)))
                }
                _ => Ok(out),
            }
        }
        Command::Rep(cmd) => cmd_rep(cmd, format),
        Command::Verify { suite } => cmd_verify(suite, cli.workers, format),
        Command::Config(ConfigCommand::Show) => cmd_config(format, cli.workers),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == 1 {
                print!("{}", f.message);
                if !f.message.ends_with('\n') {
                    println!();
                }
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

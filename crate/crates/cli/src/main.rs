//! `lzend`: greedy and optimal LZ-End parsings from the command line.
//!
//! Machine outputs (parsings, WCNF, gadget files) go to files named on the
//! command line; human summaries go to standard output. Errors print one
//! line `error[<tag>]: <message>` on standard error and exit with 1 for
//! domain errors, 2 for usage errors and 3 for resource or solver errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lzend::gadget::{build_gadget, verify_reduction, witness_parsing, Graph, VertexCover};
use lzend::maxsat::{decode, encode, parse_solver_output, solve, write_wcnf, SolverCommand, VarMap, WcnfDialect, SOLVER_ENV};
use lzend::{family, greedy_parse, optimal_parse, validate, ErrorKind, Parsing, SearchConfig, Text, Validity};

mod repro;

#[derive(Parser, Debug)]
#[command(name = "lzend", version, about = "Greedy and optimal LZ-End parsings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Greedy LZ-End parsing.
    Greedy {
        #[command(flatten)]
        input: InputArgs,
        /// Write the parsing as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum-size LZ-End-like parsing.
    Optimal {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Bruteforce)]
        method: Method,
        #[command(flatten)]
        solver: SolverArgs,
        /// Node budget of the branch-and-bound search.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a parsing against a text.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        /// Parsing in JSON, as written by the other subcommands.
        #[arg(long)]
        parsing: PathBuf,
    },
    /// Write the MAX-SAT encoding of a text.
    Encode {
        #[command(flatten)]
        input: InputArgs,
        /// WCNF output file.
        #[arg(long)]
        out: PathBuf,
        /// Variable map; defaults to `<out>.varmap.json`.
        #[arg(long)]
        varmap: Option<PathBuf>,
        /// Emit the `p wcnf` header dialect.
        #[arg(long)]
        legacy_wcnf: bool,
    },
    /// Turn a solver's output into a parsing.
    Decode {
        #[command(flatten)]
        input: InputArgs,
        /// Solver standard output (`s`, `o` and `v` lines).
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        varmap: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the vertex-cover reduction string of a graph.
    Gadget {
        /// Edge list: `n m`, then `m` lines `u v`.
        #[arg(long)]
        graph: PathBuf,
        /// Output prefix for `.tokens`, `.legend`, `.segments` and `.witness.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build the parsing induced by this vertex cover, e.g. `v1,v3`.
        #[arg(long)]
        witness_cover: Option<VertexCover>,
        /// Check all phrase counts of the reduction.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// The binary family with greedy/optimal ratio tending to 2.
    Family {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=family::MAX_FAMILY_K as i64))]
        k: Option<u32>,
        /// Output prefix for `.tokens` and `.witness.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the short parsing of `w_k`.
        #[arg(long, requires = "out")]
        witness: bool,
        /// Print the ratio table for k = 1..=KMAX.
        #[arg(long, value_name = "KMAX", value_parser = clap::value_parser!(u32).range(1..=62))]
        table: Option<u32>,
        /// Rows up to this k run the greedy parser; the rest use closed forms.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=family::MAX_FAMILY_K as i64))]
        measure_up_to: u32,
        /// Write the ratio table as CSV.
        #[arg(long, requires = "table")]
        csv: Option<PathBuf>,
    },
    /// Rerun the reference checks and print a pass/fail checklist.
    Repro {
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input text; `-` reads standard input.
    input: PathBuf,
    /// Read whitespace-separated integer tokens instead of raw bytes.
    #[arg(long)]
    tokens: bool,
}

#[derive(Args, Debug)]
struct SolverArgs {
    /// MAX-SAT solver command; the WCNF path is appended as last argument.
    #[arg(long, env = SOLVER_ENV)]
    solver: Option<String>,
    /// Feed the solver the `p wcnf` dialect.
    #[arg(long)]
    solver_legacy_wcnf: bool,
}

impl SolverArgs {
    fn command(&self) -> anyhow::Result<Option<SolverCommand>> {
        let Some(line) = &self.solver else { return Ok(None) };
        let dialect = if self.solver_legacy_wcnf { WcnfDialect::Legacy } else { WcnfDialect::Modern };
        Ok(Some(line.parse::<SolverCommand>()?.with_dialect(dialect)))
    }

    fn required(&self) -> anyhow::Result<SolverCommand> {
        self.command()?.ok_or_else(|| {
            lzend::Error::Solver {
                message: format!("no solver configured; pass --solver or set {SOLVER_ENV}"),
                output: String::new(),
            }
            .into()
        })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Bruteforce,
    Maxsat,
}

fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

impl InputArgs {
    /// In byte mode one trailing newline (`\n` or `\r\n`) is dropped.
    fn load(&self) -> anyhow::Result<Text> {
        let raw = read_input(&self.input)?;
        if self.tokens {
            let s = String::from_utf8(raw)
                .map_err(|_| lzend::Error::InputFormat("token file is not UTF-8".into()))?;
            return Ok(Text::from_token_str(&s)?);
        }
        let body = raw
            .strip_suffix(b"\r\n")
            .or_else(|| raw.strip_suffix(b"\n"))
            .unwrap_or(&raw);
        Ok(Text::from_bytes(body))
    }
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn report_parsing(text: &Text, parsing: &Parsing, out: Option<&Path>) -> anyhow::Result<()> {
    println!("{}", parsing.render(text));
    println!("size: {}", parsing.size());
    if let Some(path) = out {
        write_file(path, &parsing.to_json()?)?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Greedy { input, out } => {
            let text = input.load()?;
            report_parsing(&text, &greedy_parse(&text), out.as_deref())?;
        }
        Command::Optimal { input, method, solver, budget, out } => {
            let text = input.load()?;
            let parsing = match method {
                Method::Bruteforce => {
                    let mut config = SearchConfig::default();
                    if let Some(b) = budget {
                        config.node_budget = b;
                    }
                    optimal_parse(&text, &config)?
                }
                Method::Maxsat => {
                    let solved = solve(&text, &solver.required()?)?;
                    for w in &solved.warnings {
                        eprintln!("warning: {w}");
                    }
                    solved.parsing
                }
            };
            report_parsing(&text, &parsing, out.as_deref())?;
        }
        Command::Validate { input, parsing } => {
            let text = input.load()?;
            let contents = fs::read_to_string(&parsing).with_context(|| format!("reading {}", parsing.display()))?;
            let parsing = Parsing::from_json(&contents)?;
            match validate(&text, &parsing) {
                Validity::Accept => println!("accept: {} phrases", parsing.size()),
                Validity::Reject(rejection) => {
                    println!("reject: {rejection}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Encode { input, out, varmap, legacy_wcnf } => {
            let text = input.load()?;
            let (instance, map) = encode(&text);
            let dialect = if legacy_wcnf { WcnfDialect::Legacy } else { WcnfDialect::Modern };
            let file = fs::File::create(&out).with_context(|| format!("writing {}", out.display()))?;
            write_wcnf(&instance, dialect, std::io::BufWriter::new(file))?;
            let varmap = varmap.unwrap_or_else(|| with_suffix(&out, ".varmap.json"));
            write_file(&varmap, &map.to_json()?)?;
            println!(
                "variables: {} (positions {}, references {}, auxiliary {})",
                instance.num_vars,
                map.n,
                map.num_refs(),
                map.num_aux()
            );
            println!("hard clauses: {}", instance.hard.len());
            println!("soft clauses: {}", instance.soft.len());
        }
        Command::Decode { input, model, varmap, out } => {
            let text = input.load()?;
            let map = VarMap::from_json(&fs::read_to_string(&varmap).with_context(|| format!("reading {}", varmap.display()))?)?;
            let stdout = fs::read_to_string(&model).with_context(|| format!("reading {}", model.display()))?;
            let outcome = parse_solver_output(&stdout, map.num_vars)?;
            let Some(model) = outcome.model else {
                bail!(lzend::Error::Solver { message: "model file has no v-line".into(), output: String::new() });
            };
            let parsing = decode(&model, &map, &text)?;
            report_parsing(&text, &parsing, out.as_deref())?;
        }
        Command::Gadget { graph, out, witness_cover, verify, solver } => {
            let contents = fs::read_to_string(&graph).with_context(|| format!("reading {}", graph.display()))?;
            let g = Graph::parse(&contents)?;
            let gadget = build_gadget(&g)?;
            println!("gadget length: {}", gadget.text.len());
            println!("alphabet size: {}", gadget.text.alphabet_size());
            if let Some(prefix) = &out {
                write_file(&with_suffix(prefix, ".tokens"), &gadget.text.to_token_string())?;
                write_file(&with_suffix(prefix, ".legend"), &gadget.legend())?;
                write_file(&with_suffix(prefix, ".segments"), &gadget.segment_table())?;
            }
            if let Some(cover) = &witness_cover {
                let parsing = witness_parsing(&g, cover)?;
                println!("witness cover: {cover}");
                println!("witness size: {}", parsing.size());
                if let Some(prefix) = &out {
                    write_file(&with_suffix(prefix, ".witness.json"), &parsing.to_json()?)?;
                }
            }
            if verify {
                print!("{}", verify_reduction(&g, solver.command()?.as_ref())?);
            }
        }
        Command::Family { k, out, witness, table, measure_up_to, csv } => {
            if k.is_none() && table.is_none() {
                bail!(lzend::Error::InvalidArgument("nothing to do: pass --k and/or --table".into()));
            }
            if let Some(k) = k {
                let instance = family::build_family(k)?;
                println!("w_{k}: length {}, {} blocks", instance.text.len(), instance.blocks);
                if let Some(prefix) = &out {
                    write_file(&with_suffix(prefix, ".tokens"), &instance.text.to_token_string())?;
                    if witness {
                        let parsing = family::witness_parsing_family(&instance)?;
                        println!("short parsing size: {}", parsing.size());
                        write_file(&with_suffix(prefix, ".witness.json"), &parsing.to_json()?)?;
                    }
                }
            }
            if let Some(k_max) = table {
                let rows = family::ratio_table(k_max, measure_up_to.min(k_max))?;
                print!("{}", family::render_table(&rows));
                if let Some(path) = &csv {
                    write_file(path, &family::render_csv(&rows))?;
                }
            }
        }
        Command::Repro { solver } => {
            let ok = repro::run(solver.command()?.as_ref());
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let (tag, code) = match err.downcast_ref::<lzend::Error>() {
                Some(e) => (e.tag(), if e.kind() == ErrorKind::Domain { 1 } else { 3 }),
                None => ("io", 3),
            };
            let message = format!("{err:#}").replace('\n', " ");
            eprintln!("error[{tag}]: {message}");
            if let Some(lzend::Error::Solver { output, .. }) = err.downcast_ref::<lzend::Error>() {
                if !output.is_empty() {
                    eprintln!("{output}");
                }
            }
            ExitCode::from(code)
        }
    }
}

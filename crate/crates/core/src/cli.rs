//! Command-line front end.
//!
//! Exit codes: 0 on success or a true verdict, 1 on a false verdict or a
//! violated precondition, 2 on usage or input errors.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coloring::{self, FallbackSolver, Injection};
use crate::cotree::{
    self, binary_refine, discriminating_cotree, BinaryCotree, Cotree, RefinePolicy,
};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::io::{parse_coloring, parse_graph, write_coloring, write_graph};
use crate::mdtree::modular_decomposition;
use crate::oracles::{generate, Flavor, GeneratorConfig, OracleCaps};
use crate::p4sparse::{self, SpiderFlavor};

#[derive(Parser, Debug)]
#[command(
    name = "modcolor",
    version,
    about = "Hierarchical and modularly-minimal graph colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the modular decomposition tree.
    Decompose {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
    },
    /// Print the chromatic number.
    Chi {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ChiMethod::Md)]
        method: ChiMethod,
        /// JSON file overriding the brute-force size caps.
        #[arg(long)]
        caps: Option<PathBuf>,
    },
    /// Print a coloring in `vertex color` lines.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: ColorMode,
        /// Comma-separated vertex order for greedy mode.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Binary cotree JSON for tt-minimal mode.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Shuffles the greedy order or randomizes palette injections.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Test a coloring for a property.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count hc-colorings of a cograph up to color renaming.
    Count {
        graph: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Decide membership in a graph class.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: GraphClass,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a random graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        flavor: Option<GenFlavor>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p_join: f64,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0.3)]
        spider_rate: f64,
        #[arg(long, default_value_t = 3)]
        max_head: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SpiderKind::Thin)]
        spider_flavor: SpiderKind,
        #[arg(long, default_value_t = 0)]
        head_n: usize,
        /// JSON generator config; replaces the other flags.
        #[arg(long, conflicts_with = "flavor")]
        config: Option<PathBuf>,
    },
    /// Time the P4-sparse coloring pipeline; prints CSV.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFlavor::P4sparse)]
        flavor: BenchFlavor,
        #[arg(long, value_delimiter = ',', default_value = "1e3,1e4,1e5")]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChiMethod {
    Md,
    Brute,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorMode {
    Greedy,
    TtMinimal,
    Modmin,
    P4sparse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Proper,
    Greedy,
    Hierarchical,
    Strict,
    Modmin,
    Hc,
    TtMinimal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphClass {
    Cograph,
    P4sparse,
    Spider,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFlavor {
    Cograph,
    P4sparse,
    ErdosRenyi,
    Spider,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpiderKind {
    Thin,
    Thick,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchFlavor {
    P4sparse,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String> {
        if path.as_os_str() == "-" {
            if self.stdin_used {
                return Err(Error::InvalidConfig(
                    "stdin (`-`) can feed only one input".into(),
                ));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            return Ok(s);
        }
        Ok(std::fs::read_to_string(path)?)
    }

    fn graph(&mut self, path: &PathBuf) -> Result<Graph> {
        parse_graph(&self.read(path)?)
    }

    fn tree(&mut self, path: &PathBuf) -> Result<Cotree> {
        Ok(serde_json::from_str(&self.read(path)?)?)
    }

    fn print(&mut self, text: impl AsRef<str>) -> Result<()> {
        self.out.write_all(text.as_ref().as_bytes())?;
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
        out: stdout,
    };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn verdict(io: &mut Io<'_>, format: Format, ok: bool, witness: serde_json::Value) -> Result<i32> {
    match format {
        Format::Json => io.print(format!("{}\n", json!({ "result": ok, "witness": witness })))?,
        Format::Text if ok => io.print("true\n")?,
        Format::Text => io.print(format!("false\nwitness: {witness}\n"))?,
    }
    Ok(if ok { 0 } else { 1 })
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32> {
    match command {
        Command::Decompose { graph, format } => {
            let g = io.graph(&graph)?;
            let md = modular_decomposition(&g)?;
            match format {
                TreeFormat::Json => io.print(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&md.to_json())?
                ))?,
                TreeFormat::Dot => io.print(md.to_dot())?,
            }
        }
        Command::Chi {
            graph,
            method,
            caps,
        } => {
            let g = io.graph(&graph)?;
            let chi = match method {
                ChiMethod::Md => coloring::chromatic_number(&g, &FallbackSolver::default())?,
                ChiMethod::Brute => {
                    let caps = match caps {
                        Some(path) => OracleCaps::from_json(&io.read(&path)?)?,
                        None => OracleCaps::default(),
                    };
                    caps.chi(&g)?
                }
            };
            io.print(format!("{chi}\n"))?;
        }
        Command::Color {
            graph,
            mode,
            order,
            tree,
            seed,
        } => {
            let g = io.graph(&graph)?;
            let injection = seed.map_or(Injection::Canonical, Injection::Seeded);
            let sigma = match mode {
                ColorMode::Greedy => {
                    let order = order.unwrap_or_else(|| {
                        let mut o: Vec<usize> = (0..g.n()).collect();
                        if let Some(s) = seed {
                            o.shuffle(&mut ChaCha8Rng::seed_from_u64(s));
                        }
                        o
                    });
                    coloring::greedy_coloring(&g, &order)?
                }
                ColorMode::TtMinimal => {
                    let t = binary_tree(io, &g, tree.as_ref())?;
                    coloring::tt_minimal_coloring(&g, &t, injection)?
                }
                ColorMode::Modmin => coloring::modularly_minimal_coloring_with(
                    &g,
                    &FallbackSolver::default(),
                    injection,
                )?,
                ColorMode::P4sparse => p4sparse::p4sparse_modmin_coloring(&g)?,
            };
            io.print(write_coloring(&sigma))?;
        }
        Command::Check {
            graph,
            coloring: col,
            property,
            tree,
            format,
        } => {
            let g = io.graph(&graph)?;
            let sigma = parse_coloring(&io.read(&col)?)?;
            g.check_size(&sigma)?;
            if !matches!(
                property,
                Property::Proper | Property::Hc | Property::TtMinimal
            ) {
                if let Some((u, v)) = g.monochromatic_edge(&sigma) {
                    return verdict(io, format, false, json!({ "improper_edge": [u, v] }));
                }
            }
            let solver = FallbackSolver::default();
            let (ok, witness) = match property {
                Property::Proper => match g.monochromatic_edge(&sigma) {
                    Some((u, v)) => (false, json!({ "edge": [u, v] })),
                    None => (true, json!(null)),
                },
                Property::Greedy => match coloring::greedy_violation(&g, &sigma)? {
                    Some(colors) => (false, json!({ "unrankable_colors": colors })),
                    None => (true, json!(null)),
                },
                Property::Hierarchical | Property::Strict => {
                    let strict = matches!(property, Property::Strict);
                    match coloring::hierarchy_violation(&g, &sigma, strict)? {
                        Some(module) => (false, json!({ "module": module })),
                        None => (true, json!(null)),
                    }
                }
                Property::Modmin => match coloring::modmin_violation(&g, &sigma, &solver)? {
                    Some(v) => (false, serde_json::to_value(v)?),
                    None => (true, json!(null)),
                },
                Property::Hc => {
                    let t = binary_tree(io, &g, tree.as_ref())?;
                    match coloring::hc_violation(&g, &sigma, &t)? {
                        Some(v) => (false, serde_json::to_value(v)?),
                        None => (true, json!(null)),
                    }
                }
                Property::TtMinimal => {
                    let t = binary_tree(io, &g, tree.as_ref())?;
                    match coloring::tt_violation(&g, &sigma, &t)? {
                        Some((module, colors, chi)) => (
                            false,
                            json!({ "node": module, "colors": colors, "chi": chi }),
                        ),
                        None => (true, json!(null)),
                    }
                }
            };
            return verdict(io, format, ok, witness);
        }
        Command::Count { graph, tree } => {
            let g = io.graph(&graph)?;
            let z = match tree {
                Some(path) => {
                    let t = BinaryCotree::for_graph(io.tree(&path)?, &g)?;
                    coloring::count_hc_colorings(&g, &t)?
                }
                None => coloring::count_hc_colorings_total(&g)?,
            };
            io.print(format!("{z}\n"))?;
        }
        Command::Recognize {
            graph,
            class,
            format,
        } => {
            let g = io.graph(&graph)?;
            let (ok, witness) = match class {
                GraphClass::Cograph => match cotree::find_p4(&g) {
                    Some(p4) => (false, json!({ "p4": p4 })),
                    None => (true, json!(null)),
                },
                GraphClass::P4sparse => match p4sparse::p4_sparse_violation(&g) {
                    Some(module) => (false, json!({ "prime_module": module })),
                    None => (true, json!(null)),
                },
                GraphClass::Spider => match p4sparse::recognize_spider(&g) {
                    Some(sd) => (true, serde_json::to_value(sd)?),
                    None => (false, json!(null)),
                },
            };
            if ok && !witness.is_null() {
                match format {
                    Format::Json => io.print(format!(
                        "{}\n",
                        json!({ "result": true, "decomposition": witness })
                    ))?,
                    Format::Text => io.print(format!("true\n{witness}\n"))?,
                }
                return Ok(0);
            }
            return verdict(io, format, ok, witness);
        }
        Command::Gen {
            flavor,
            n,
            seed,
            p_join,
            p,
            spider_rate,
            max_head,
            k,
            spider_flavor,
            head_n,
            config,
        } => {
            let config = match config {
                Some(path) => serde_json::from_str::<GeneratorConfig>(&io.read(&path)?)?,
                None => {
                    let flavor = flavor.ok_or_else(|| {
                        Error::InvalidConfig("--flavor or --config is required".into())
                    })?;
                    let spider_flavor = match spider_flavor {
                        SpiderKind::Thin => SpiderFlavor::Thin,
                        SpiderKind::Thick => SpiderFlavor::Thick,
                    };
                    let flavor = match flavor {
                        GenFlavor::Cograph => Flavor::Cograph { p_join },
                        GenFlavor::P4sparse => Flavor::P4Sparse {
                            spider_rate,
                            max_head,
                            p_join,
                        },
                        GenFlavor::ErdosRenyi => Flavor::ErdosRenyi { p },
                        GenFlavor::Spider => Flavor::Spider {
                            k,
                            flavor: spider_flavor,
                            head_n,
                        },
                    };
                    let n = match (&flavor, n) {
                        (_, Some(n)) => n,
                        (Flavor::Spider { .. }, None) => 2 * k + head_n,
                        (_, None) => return Err(Error::InvalidConfig("--n is required".into())),
                    };
                    GeneratorConfig { n, seed, flavor }
                }
            };
            io.print(write_graph(&generate(&config)?))?;
        }
        Command::Bench {
            flavor: BenchFlavor::P4sparse,
            sizes,
            seed,
            repeats,
        } => {
            io.print("flavor,n,m,millis\n")?;
            for raw in sizes {
                let n = parse_size(&raw)?;
                let g = generate(&GeneratorConfig::p4sparse(n, seed, 0.3, 3))?;
                let millis = time_pipeline(&g, repeats.max(1))?;
                io.print(format!("p4sparse,{},{},{:.3}\n", g.n(), g.m(), millis))?;
            }
        }
    }
    Ok(0)
}

/// The tree from `path`, or the left-comb refinement of the discriminating
/// cotree when none is given.
fn binary_tree(io: &mut Io<'_>, g: &Graph, path: Option<&PathBuf>) -> Result<BinaryCotree> {
    match path {
        Some(path) => BinaryCotree::for_graph(io.tree(path)?, g),
        None => binary_refine(&discriminating_cotree(g)?, RefinePolicy::LeftComb),
    }
}

fn parse_size(raw: &str) -> Result<usize> {
    let x: f64 = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("size `{raw}` is not a number")))?;
    if !(1.0..=1e9).contains(&x) || x.fract() != 0.0 {
        return Err(Error::InvalidConfig(format!(
            "size `{raw}` is not a positive integer"
        )));
    }
    Ok(x as usize)
}

/// Fastest of `repeats` end-to-end runs, in milliseconds.
pub fn time_pipeline(g: &Graph, repeats: usize) -> Result<f64> {
    let mut best = f64::INFINITY;
    for _ in 0..repeats {
        let start = Instant::now();
        let sigma: Coloring = p4sparse::p4sparse_modmin_coloring(g)?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        std::hint::black_box(sigma);
    }
    Ok(best)
}

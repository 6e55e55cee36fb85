//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for usage errors, 2 for data errors
//! (unreadable or invalid input files, failed runs).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bigcross::bench::{run_family, summarize, Family};
use bigcross::engine::run;
use bigcross::generators::{ClassicGraph, GenError, GenSpec, Model};
use bigcross::io::{layout_for, parse_edge_list, render_svg, write_edge_list, LayoutFile, SvgOptions};
use bigcross::metrics::measure_with_crossings;
use bigcross::params::{LayoutParams, Variant};
use bigcross::Graph;

#[derive(Parser)]
#[command(
    name = "bigcross",
    version,
    about = "Force-directed layout with large crossing angles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Lay out a graph.
    Layout(LayoutArgs),
    /// Print the metrics of a drawing as JSON.
    Measure(MeasureArgs),
    /// Run the paired classical/BIGCROSS comparison.
    Bench(BenchArgs),
    /// Render a drawing as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    ErdosRenyi,
    WattsStrogatz,
    EppsteinWang,
    RandomPlanar,
    Classic,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    model: ModelArg,
    /// Vertex count; required except for fixed-size classic graphs.
    #[arg(long)]
    n: Option<usize>,
    /// Edge count (erdos-renyi, eppstein-wang, random-planar).
    #[arg(long)]
    m: Option<usize>,
    /// Lattice degree (watts-strogatz).
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Rewiring probability (watts-strogatz).
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Mixing steps (eppstein-wang); defaults to 10 n.
    #[arg(long)]
    steps: Option<usize>,
    /// Classic graph name: cycle, path, star, tree, dodecahedron,
    /// icosahedron, triangulated-triangle.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Algo {
    Classical,
    Bigcross,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Parallel,
    Rotational,
    AttractRepel,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Parallel => Variant::Parallel,
            VariantArg::Rotational => Variant::Rotational,
            VariantArg::AttractRepel => Variant::AttractRepel,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Default,
    HighQuality,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::Parallel)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Preset::Default)]
    preset: Preset,
    /// Override the cosine force constant.
    #[arg(long)]
    k_cos: Option<f64>,
}

impl ParamArgs {
    fn params(&self, algo: Algo) -> Result<LayoutParams, CliError> {
        let base = match self.preset {
            Preset::Default => LayoutParams::default(),
            Preset::HighQuality => LayoutParams::high_quality(),
        };
        let variant = match algo {
            Algo::Classical => Variant::Classical,
            Algo::Bigcross => self.variant.into(),
        };
        let mut params = base.with_variant(variant);
        if let Some(k) = self.k_cos {
            params.k_cos = k;
        }
        params.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(params)
    }
}

#[derive(Args)]
struct LayoutArgs {
    /// Edge-list file.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Bigcross)]
    algo: Algo,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    layout: PathBuf,
    /// Include the list of crossings.
    #[arg(long)]
    crossings: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated families: erdos-renyi, watts-strogatz,
    /// eppstein-wang, random-planar.
    #[arg(long, value_delimiter = ',', default_value = "erdos-renyi")]
    models: Vec<String>,
    /// Graphs per family; at least 6.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(6..))]
    count: u64,
    #[arg(long, default_value_t = 0)]
    master_seed: u64,
    /// Smallest vertex count of sampled graphs.
    #[arg(long, default_value_t = 10)]
    n_min: usize,
    /// Largest vertex count of sampled graphs.
    #[arg(long, default_value_t = 50)]
    n_max: usize,
    #[arg(long)]
    outdir: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    /// Keep wall-clock times in the record files.
    #[arg(long)]
    record_times: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    layout: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Mark crossings with their angles.
    #[arg(long)]
    annotate: bool,
}

enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn data(e: impl std::fmt::Display) -> Self {
        CliError::Data(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read(path)?).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn generate(a: GenerateArgs) -> Result<(), CliError> {
    let need =
        |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this model")));
    let (model, n) = match a.model {
        ModelArg::Classic => {
            let raw = a
                .name
                .as_deref()
                .ok_or_else(|| CliError::Usage("--name is required for classic graphs".into()))?;
            let name: ClassicGraph = raw.parse().map_err(|e: GenError| CliError::Usage(e.to_string()))?;
            let n = match name.fixed_size() {
                Some(size) => size,
                None => need(a.n, "n")?,
            };
            (Model::Classic { name }, n)
        }
        ModelArg::ErdosRenyi => (Model::ErdosRenyi { m: need(a.m, "m")? }, need(a.n, "n")?),
        ModelArg::WattsStrogatz => (Model::WattsStrogatz { k: a.k, p: a.p }, need(a.n, "n")?),
        ModelArg::EppsteinWang => {
            let n = need(a.n, "n")?;
            (
                Model::EppsteinWang {
                    m: need(a.m, "m")?,
                    steps: a.steps.unwrap_or(10 * n),
                },
                n,
            )
        }
        ModelArg::RandomPlanar => (Model::RandomPlanar { m: need(a.m, "m")? }, need(a.n, "n")?),
    };
    let spec = GenSpec { model, n, seed: a.seed };
    let graph = spec.generate().map_err(|e| match e {
        GenError::Infeasible(_) | GenError::UnknownClassic(_) => CliError::Usage(e.to_string()),
        _ => CliError::data(e),
    })?;
    let meta = serde_json::to_string(&spec).expect("specs serialize");
    let mut text = format!("# {meta}\n");
    if let Some(note) = spec.model.note() {
        text.push_str(&format!("# {note}\n"));
    }
    text.push_str(&write_edge_list(&graph));
    emit(a.out.as_deref(), &text)?;
    if a.out.is_some() {
        println!("{meta}");
    } else {
        eprintln!("{meta}");
    }
    Ok(())
}

fn layout(a: LayoutArgs) -> Result<(), CliError> {
    let params = a.params.params(a.algo)?;
    let graph = load_graph(&a.input)?;
    let result = run(&graph, &params, a.seed).map_err(CliError::data)?;
    let file = LayoutFile::from_run(&result, a.seed, &params);
    emit(a.out.as_deref(), &file.to_json())
}

fn measure(a: MeasureArgs) -> Result<(), CliError> {
    let graph = load_graph(&a.graph)?;
    let layout =
        layout_for(&graph, &read(&a.layout)?).map_err(|e| CliError::Data(format!("{}: {e}", a.layout.display())))?;
    let (report, crossings) = measure_with_crossings(&graph, &layout);
    let mut value = serde_json::to_value(report).expect("reports serialize");
    if a.crossings {
        value["crossing_list"] = serde_json::to_value(crossings).expect("crossings serialize");
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("json values serialize")
    );
    Ok(())
}

fn bench(a: BenchArgs) -> Result<(), CliError> {
    let families = a
        .models
        .iter()
        .map(|m| m.parse::<Family>().map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let params = a.params.params(Algo::Bigcross)?;
    if a.n_min < 7 || a.n_min > a.n_max {
        return Err(CliError::Usage(format!(
            "invalid vertex range {}..={}",
            a.n_min, a.n_max
        )));
    }
    fs::create_dir_all(&a.outdir).map_err(|e| CliError::Data(format!("{}: {e}", a.outdir.display())))?;
    for family in families {
        let records =
            run_family(family, a.count as usize, a.master_seed, a.n_min..=a.n_max, &params).map_err(CliError::data)?;
        for (i, rec) in records.iter().enumerate() {
            let rec = if a.record_times {
                rec.clone()
            } else {
                rec.clone().without_timing()
            };
            let json = serde_json::to_string_pretty(&rec).expect("records serialize");
            write(&a.outdir.join(format!("{family}-{i:04}.json")), &(json + "\n"))?;
        }
        let summary = summarize(&records).map_err(CliError::data)?;
        write(&a.outdir.join(format!("summary-{family}.csv")), &summary.to_csv())?;
        let title = match family.note() {
            Some(note) => format!("{family}: {note}"),
            None => family.to_string(),
        };
        println!("{}", summary.to_table(&title));
    }
    Ok(())
}

fn render(a: RenderArgs) -> Result<(), CliError> {
    let graph = load_graph(&a.graph)?;
    let layout =
        layout_for(&graph, &read(&a.layout)?).map_err(|e| CliError::Data(format!("{}: {e}", a.layout.display())))?;
    let opts = SvgOptions {
        mark_crossings: a.annotate,
        ..SvgOptions::default()
    };
    let svg = render_svg(&graph, &layout, &opts).map_err(CliError::data)?;
    emit(a.out.as_deref(), &svg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Layout(a) => layout(a),
        Command::Measure(a) => measure(a),
        Command::Bench(a) => bench(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zdg::cache::{self, Cache};
use zdg::{export, graph_file, presentation_file, report, verify};
use zdg_core::harness::{catalog_default, Catalog, CatalogBounds, HarnessOptions, RowError};
use zdg_core::{
    build_zdg, domination_number, dsl, invariant_row, total_domination_number, DominationResult,
    FiniteRing, InvariantRow, LoopGraph,
};

#[derive(Parser)]
#[command(name = "zdg", version, about = "Zero-divisor graphs of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, zero divisors and structural witnesses of a ring
    RingInfo {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Domination numbers, girth and diameter of a ring's zero-divisor graph
    Invariants {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = RowFormat::Text)]
        format: RowFormat,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Write a ring's zero-divisor graph as DOT or JSON
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the domination statements over a catalog of rings
    Verify {
        #[arg(long, default_value_t = 200)]
        max_zn: u32,
        #[arg(long, default_value_t = 13)]
        max_product_factor: u32,
        /// Verify these specs instead of the default catalog (repeatable)
        #[arg(long = "spec")]
        specs: Vec<String>,
        #[arg(long, default_value_t = 30)]
        clique_cap: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Domination numbers of a graph read from an edge-list file
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Also compute the total domination number
        #[arg(long)]
        total: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RingArg {
    spec: Option<String>,
    /// Structure-constant presentation file instead of a spec
    #[arg(long)]
    presentation: Option<PathBuf>,
}

#[derive(Args)]
struct CacheArgs {
    #[arg(long)]
    no_cache: bool,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

enum Failure {
    Theorem,
    Parse(String),
    EmptyGraph(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Theorem => 1,
            Failure::Parse(_) => 2,
            Failure::EmptyGraph(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<RowError> for Failure {
    fn from(e: RowError) -> Self {
        match e {
            RowError::Spec(e) => Failure::Parse(e.to_string()),
            RowError::Domain(label) => {
                Failure::EmptyGraph(format!("empty zero-divisor graph: {label} is a domain"))
            }
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn load_ring(arg: &RingArg) -> Result<FiniteRing, Failure> {
    match (&arg.spec, &arg.presentation) {
        (Some(spec), _) => dsl::ring(spec).map_err(|e| Failure::Parse(e.to_string())),
        (None, Some(path)) => {
            let text = read(path)?;
            presentation_file::parse(&text)
                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
        }
        (None, None) => unreachable!("clap requires one ring source"),
    }
}

fn or_dash(v: &Option<String>) -> &str {
    v.as_deref().unwrap_or("-")
}

fn braces(set: &[String]) -> String {
    format!("{{{}}}", set.join(", "))
}

fn ring_info(arg: &RingArg, format: TextOrJson) -> Result<(), Failure> {
    let ring = load_ring(arg)?;
    let zd: Vec<String> = ring
        .zero_divisors()
        .iter()
        .map(|e| ring.element_label(e))
        .collect();
    let z2xd = ring.z2_times_domain().map(|e| ring.element_label(e));
    let ann = ring.annihilator_ideal_witness().map(|e| ring.element_label(e));
    let text = match format {
        TextOrJson::Json => {
            let doc = serde_json::json!({
                "spec": ring.label(),
                "order": ring.order(),
                "zero_divisors": zd,
                "domain": ring.is_domain(),
                "z2xD": z2xd,
                "ann_witness": ann,
            });
            format!("{doc}\n")
        }
        TextOrJson::Text => format!(
            "ring           {}\norder          {}\nZ(R)*          {} {}\ndomain         {}\nz2xD           {}\nann witness    {}\n",
            ring.label(),
            ring.order(),
            zd.len(),
            braces(&zd),
            ring.is_domain(),
            or_dash(&z2xd),
            or_dash(&ann),
        ),
    };
    emit(&text, None)
}

fn row_text(r: &InvariantRow) -> String {
    let t_witness = r.gamma_t_witness.as_deref().map(braces);
    format!(
        "spec           {}\norder          {}\n|Z(R)*|        {}\ngamma          {} {}\ngamma_t        {} {}\ngirth          {}\ndiameter       {}\nconnected      {}\nz2xD           {}\nann witness    {}\nuniversal      {}\n",
        r.spec,
        r.order,
        r.z_star,
        r.gamma,
        braces(&r.gamma_witness),
        r.gamma_t,
        or_dash(&t_witness),
        r.girth,
        r.diameter,
        r.connected,
        or_dash(&r.z2xd),
        or_dash(&r.ann_witness),
        or_dash(&r.universal),
    )
}

fn row_csv(r: &InvariantRow) -> String {
    let rec = report::CsvRecord::from_row(r, &[]);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&report::CSV_COLUMNS[..9]).expect("csv to memory");
    w.write_record([
        &rec.spec,
        &rec.order,
        &rec.z_star,
        &rec.gamma,
        &rec.gamma_t,
        &rec.girth,
        &rec.diameter,
        &rec.z2xd,
        &rec.ann_witness,
    ])
    .expect("csv to memory");
    String::from_utf8(w.into_inner().expect("csv to memory")).expect("utf-8")
}

fn cached_row(spec: &str, args: &CacheArgs) -> Result<InvariantRow, Failure> {
    let canonical = dsl::canonicalize(spec).map_err(|e| Failure::Parse(e.to_string()))?;
    if args.no_cache {
        return Ok(invariant_row(&canonical)?);
    }
    let dir = cache::resolve_dir(args.cache_dir.as_deref());
    let mut cache = match Cache::open(&dir) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("warning: cache unavailable ({}): {e}", dir.display());
            return Ok(invariant_row(&canonical)?);
        }
    };
    if let Some(row) = cache.get(&canonical) {
        return Ok(row.clone());
    }
    let row = invariant_row(&canonical)?;
    if let Err(e) = cache.insert(row.clone()) {
        eprintln!("warning: could not write cache ({}): {e}", dir.display());
    }
    Ok(row)
}

fn invariants(arg: &RingArg, format: RowFormat, cache_args: &CacheArgs) -> Result<(), Failure> {
    let row = match &arg.spec {
        Some(spec) => cached_row(spec, cache_args)?,
        None => {
            let ring = load_ring(arg)?;
            let g = build_zdg(&ring).map_err(|_| RowError::Domain(ring.label().to_string()))?;
            zdg_core::harness::row_for(ring.label(), &ring, &g)
        }
    };
    let text = match format {
        RowFormat::Text => row_text(&row),
        RowFormat::Json => format!("{}\n", serde_json::to_string(&row).expect("row serializes")),
        RowFormat::Csv => row_csv(&row),
    };
    emit(&text, None)
}

fn export_cmd(spec: &str, format: GraphFormat, out: Option<&Path>) -> Result<(), Failure> {
    let ring = dsl::ring(spec).map_err(|e| Failure::Parse(e.to_string()))?;
    let g = build_zdg(&ring).map_err(|_| RowError::Domain(ring.label().to_string()))?;
    let text = match format {
        GraphFormat::Dot => export::to_dot(&g, ring.label()),
        GraphFormat::Json => export::to_json(&g),
    };
    emit(&text, out)
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    max_zn: u32,
    max_product_factor: u32,
    specs: &[String],
    clique_cap: usize,
    jobs: Option<usize>,
    format: ReportFormat,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let catalog = if specs.is_empty() {
        catalog_default(CatalogBounds {
            max_zn,
            max_product_factor,
            ..CatalogBounds::default()
        })
    } else {
        Catalog::from_specs(specs)
    };
    let jobs = jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let opts = HarnessOptions {
        clique_cap,
        ..HarnessOptions::default()
    };
    let rep = verify::run(&catalog, &opts, jobs);
    let text = match format {
        ReportFormat::Csv => report::to_csv(&rep),
        ReportFormat::Json => report::to_json(&rep),
    };
    emit(&text, out)?;

    let s = &rep.summary;
    let line = format!(
        "{} rings: {} analysed, {} skipped; checks: {} passed, {} failed, {} skipped",
        s.rings, s.analyzed, s.skipped, s.checks_passed, s.checks_failed, s.checks_skipped
    );
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    for r in &rep.rings {
        for c in r.failed_checks() {
            if let zdg_core::Verdict::Fail(detail) = &c.verdict {
                eprintln!("counterexample: {} fails {}: {detail}", r.spec, c.name);
            }
        }
    }
    if rep.is_success() {
        Ok(())
    } else {
        Err(Failure::Theorem)
    }
}

fn solve_line(name: &str, r: &DominationResult) -> String {
    let witness = r
        .witness
        .as_ref()
        .map(|w| braces(&w.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
    format!("{name:<8} {} {}\n", r.value, witness.as_deref().unwrap_or("-"))
}

fn solve_cmd(path: &Path, total: bool, format: TextOrJson) -> Result<(), Failure> {
    let text = read(path)?;
    let g: LoopGraph = graph_file::parse(&text)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let gamma = domination_number(&g);
    let gamma_t = total.then(|| total_domination_number(&g));
    let out = match format {
        TextOrJson::Text => {
            let mut s = solve_line("gamma", &gamma);
            if let Some(t) = &gamma_t {
                s.push_str(&solve_line("gamma_t", t));
            }
            s
        }
        TextOrJson::Json => {
            let mut doc = serde_json::json!({
                "n": g.vertex_count(),
                "gamma": gamma.value,
                "gamma_witness": gamma.witness,
            });
            if let Some(t) = &gamma_t {
                doc["gamma_t"] = serde_json::json!(t.value);
                doc["gamma_t_witness"] = serde_json::json!(t.witness);
            }
            format!("{doc}\n")
        }
    };
    emit(&out, None)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::RingInfo { ring, format } => ring_info(&ring, format),
        Command::Invariants {
            ring,
            format,
            cache,
        } => invariants(&ring, format, &cache),
        Command::Export { spec, format, out } => export_cmd(&spec, format, out.as_deref()),
        Command::Verify {
            max_zn,
            max_product_factor,
            specs,
            clique_cap,
            jobs,
            format,
            out,
        } => verify_cmd(
            max_zn,
            max_product_factor,
            &specs,
            clique_cap,
            jobs,
            format,
            out.as_deref(),
        ),
        Command::Solve {
            graph,
            total,
            format,
        } => solve_cmd(&graph, total, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Theorem => {}
                Failure::Parse(m) | Failure::EmptyGraph(m) | Failure::Io(m) => {
                    eprintln!("error: {m}")
                }
            }
            ExitCode::from(f.code())
        }
    }
}

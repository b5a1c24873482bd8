use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num::BigUint;
use std::path::PathBuf;
use std::process::ExitCode;
use stretchlie::{catalog, demazure_dim, generate_roots, DominantWeight, WeylWord};
use stretchlie_cli::cache::DimCache;
use stretchlie_cli::report::{render_csv, render_json, render_md, EmbeddingReport};
use stretchlie_cli::verify::{run_table, DEFAULT_MAX_DIM};

#[derive(Parser)]
#[command(name = "stretchlie", version, about = "Dynkin diagram stretch embedding verifier")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the embedding verification matrix and emit a report.
    Verify {
        /// Comma-separated source types (default: all of G2,F4,E6,E7,E8).
        #[arg(long, value_delimiter = ',', env = "STRETCHLIE_SOURCE")]
        source: Option<Vec<String>>,
        /// Skip rows whose Weyl dimension exceeds this bound.
        #[arg(long, default_value_t = DEFAULT_MAX_DIM, env = "STRETCHLIE_MAX_DIM")]
        max_dim: u64,
        /// Worker threads (0 = one per CPU).
        #[arg(long, default_value_t = 0, env = "STRETCHLIE_JOBS")]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json, env = "STRETCHLIE_FORMAT")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long, env = "STRETCHLIE_OUT")]
        out: Option<PathBuf>,
        /// Treat SKIPPED rows as failures.
        #[arg(long, env = "STRETCHLIE_STRICT")]
        strict: bool,
        /// Dimension cache file (read and updated).
        #[arg(long, env = "STRETCHLIE_CACHE")]
        cache: Option<PathBuf>,
        /// Override the target root generation height.
        #[arg(long, env = "STRETCHLIE_HEIGHT_CUTOFF")]
        height_cutoff: Option<i64>,
    },
    /// Dump the positive roots of a catalog type up to a height.
    Roots {
        #[arg(long = "type")]
        r#type: String,
        #[arg(long)]
        max_height: i64,
    },
    /// Compute a single Demazure module dimension.
    Demazure {
        #[arg(long = "type")]
        r#type: String,
        /// Anchor weight in fundamental-weight coordinates, e.g. 1,0,2.
        #[arg(long, value_delimiter = ',')]
        weight: Vec<i64>,
        /// Word as node labels, e.g. 1,2,1.
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
    },
}

const ALL_SOURCES: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

fn cmd_verify(
    source: Option<Vec<String>>,
    max_dim: u64,
    jobs: usize,
    format: Format,
    out: Option<PathBuf>,
    strict: bool,
    cache_path: Option<PathBuf>,
    height_cutoff: Option<i64>,
) -> Result<bool> {
    let sources: Vec<String> = match source {
        Some(v) => {
            for s in &v {
                if !ALL_SOURCES.contains(&s.as_str()) {
                    bail!("unsupported source type `{s}`");
                }
            }
            v
        }
        None => ALL_SOURCES.iter().map(|s| s.to_string()).collect(),
    };
    let cache = cache_path.as_deref().map(DimCache::open);
    let reports = run_table(
        &sources,
        &BigUint::from(max_dim),
        jobs,
        cache.as_ref(),
        height_cutoff,
    )?;
    if let Some(c) = &cache {
        c.flush().context("writing cache file")?;
    }
    let text = match format {
        Format::Json => render_json(&reports),
        Format::Csv => render_csv(&reports),
        Format::Md => render_md(&reports),
    };
    match out {
        Some(path) => std::fs::write(&path, text)
            .with_context(|| format!("writing report to {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(table_ok(&reports, strict))
}

fn table_ok(reports: &[EmbeddingReport], strict: bool) -> bool {
    reports
        .iter()
        .all(|r| !r.has_failure() && (!strict || !r.has_skip()))
}

fn cmd_roots(label: &str, max_height: i64) -> Result<()> {
    let gcm = catalog(label)?;
    let roots = generate_roots(&gcm, max_height)?;
    for (i, r) in roots.iter().enumerate() {
        let kind = if roots.real_flag(i) { "real" } else { "imaginary" };
        println!("{r}  height={}  {kind}", r.height());
    }
    eprintln!(
        "{} positive roots of {} up to height {max_height}{}",
        roots.len(),
        gcm.label(),
        if roots.is_complete() { " (complete)" } else { "" },
    );
    Ok(())
}

fn cmd_demazure(label: &str, weight: &[i64], word: &[usize]) -> Result<()> {
    let gcm = catalog(label)?;
    if weight.len() != gcm.node_count() {
        bail!(
            "weight has {} coordinates, {} has rank {}",
            weight.len(),
            gcm.label(),
            gcm.node_count()
        );
    }
    let anchor = DominantWeight::new(&gcm, weight.to_vec())?;
    let letters: Result<Vec<usize>, _> = word.iter().map(|&l| gcm.node_index(l)).collect();
    let w = WeylWord::new(&gcm, letters?);
    println!("{}", demazure_dim(&anchor, &w)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Verify {
            source,
            max_dim,
            jobs,
            format,
            out,
            strict,
            cache,
            height_cutoff,
        } => match cmd_verify(source, max_dim, jobs, format, out, strict, cache, height_cutoff) {
            Ok(true) => return ExitCode::SUCCESS,
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        Cmd::Roots { r#type, max_height } => cmd_roots(&r#type, max_height),
        Cmd::Demazure { r#type, weight, word } => cmd_demazure(&r#type, &weight, &word),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

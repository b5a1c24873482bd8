//! The verification matrix: enumerate stretch embeddings per source and
//! check the fundamental-weight dimension rows in the target.

use crate::cache::DimCache;
use crate::report::{CheckReport, EmbeddingReport, RowReport, RowStatus};
use anyhow::Result;
use num::BigUint;
use std::time::Instant;
use stretchlie::{
    default_cutoff, demazure_character, enumerate_embeddings_with_cutoff, generate_roots,
    weyl_dim, DominantWeight, EmbeddingSpec,
};

pub const DEFAULT_MAX_DIM: u64 = 10_000_000;

fn check_report(spec: &EmbeddingSpec) -> CheckReport {
    CheckReport {
        additive_closure: spec.checks.additive_closure,
        root_lengths: spec.checks.root_lengths,
        biconvex: spec.checks.biconvex,
        psi_compat: spec.checks.psi_compat,
        brackets: spec.checks.brackets,
    }
}

fn verify_row(
    spec: &EmbeddingSpec,
    node: usize,
    weyl: &BigUint,
    max_dim: &BigUint,
    cache: Option<&DimCache>,
) -> RowReport {
    let start = Instant::now();
    let weyl_str = weyl.to_string();
    if weyl > max_dim {
        return RowReport {
            node: spec.source.node_label(node),
            weyl_dim: weyl_str,
            demazure_dim: None,
            status: RowStatus::Skipped,
            elapsed_ms: 0,
        };
    }
    let mut coeffs = vec![0i64; spec.target.node_count()];
    coeffs[spec.psi_weights[node]] = 1;

    let demazure = cache
        .and_then(|c| c.lookup(spec.target.label(), &spec.w_iota.letters, &coeffs))
        .map(|entry| Ok(entry.dim))
        .unwrap_or_else(|| {
            let anchor = DominantWeight::new(&spec.target, coeffs.clone())
                .expect("unit weight is dominant");
            demazure_character(&anchor, &spec.w_iota).map(|ch| {
                let dim = ch.dimension().to_string();
                if let Some(c) = cache {
                    c.insert(
                        spec.target.label(),
                        &spec.w_iota.letters,
                        &coeffs,
                        &dim,
                        &ch.weight_count().to_string(),
                    );
                }
                dim
            })
        });

    let elapsed_ms = start.elapsed().as_millis() as u64;
    match demazure {
        Ok(dim) => {
            let status = if dim == weyl_str {
                RowStatus::Equal
            } else {
                RowStatus::Mismatch
            };
            RowReport {
                node: spec.source.node_label(node),
                weyl_dim: weyl_str,
                demazure_dim: Some(dim),
                status,
                elapsed_ms,
            }
        }
        Err(e) => {
            eprintln!(
                "warning: demazure computation failed for {} node {}: {e}",
                spec.target.label(),
                spec.source.node_label(node)
            );
            RowReport {
                node: spec.source.node_label(node),
                weyl_dim: weyl_str,
                demazure_dim: None,
                status: RowStatus::Failed,
                elapsed_ms,
            }
        }
    }
}

pub fn verify_embedding(
    spec: &EmbeddingSpec,
    max_dim: &BigUint,
    cache: Option<&DimCache>,
) -> Result<EmbeddingReport> {
    let src_roots = generate_roots(&spec.source, default_cutoff(&spec.source)?)?;
    let rows: Result<Vec<RowReport>> = (0..spec.source.node_count())
        .map(|i| {
            let lam = DominantWeight::fundamental(&spec.source, i);
            let weyl = weyl_dim(&spec.source, &lam, &src_roots)?;
            Ok(verify_row(spec, i, &weyl, max_dim, cache))
        })
        .collect();
    Ok(EmbeddingReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        source: spec.source.label().to_string(),
        target: spec.target.label().to_string(),
        node_map: spec.node_map.clone(),
        stretched_edge: [spec.stretched_edge.0, spec.stretched_edge.1],
        w_word: spec.w_iota.letters.clone(),
        checks: check_report(spec),
        rows: rows?,
    })
}

/// Verifies every embedding of every requested source. Embeddings run
/// concurrently on up to `jobs` threads; output order is deterministic
/// (source, then target label, then node map) regardless of scheduling.
pub fn run_table(
    sources: &[String],
    max_dim: &BigUint,
    jobs: usize,
    cache: Option<&DimCache>,
    height_cutoff: Option<i64>,
) -> Result<Vec<EmbeddingReport>> {
    let mut specs: Vec<EmbeddingSpec> = Vec::new();
    for src in sources {
        specs.extend(enumerate_embeddings_with_cutoff(src, height_cutoff)?);
    }
    specs.sort_by(|a, b| {
        (a.source.label(), a.target.label(), &a.node_map)
            .cmp(&(b.source.label(), b.target.label(), &b.node_map))
    });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let reports: Result<Vec<EmbeddingReport>> = pool.install(|| {
        use rayon::prelude::*;
        specs
            .par_iter()
            .map(|spec| verify_embedding(spec, max_dim, cache))
            .collect()
    });
    reports
}

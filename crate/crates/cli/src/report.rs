//! Report records and the three output renderers.
//!
//! JSON is the normative format; CSV flattens the per-weight rows and
//! Markdown renders one table per embedding. Big integers are serialized
//! as decimal strings so downstream tooling never has to parse them as
//! floats.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowStatus {
    Equal,
    Mismatch,
    Skipped,
    Failed,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Equal => "EQUAL",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Skipped => "SKIPPED",
            RowStatus::Failed => "FAILED",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowReport {
    /// Source node (external label).
    pub node: usize,
    pub weyl_dim: String,
    pub demazure_dim: Option<String>,
    pub status: RowStatus,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub additive_closure: bool,
    pub root_lengths: bool,
    pub biconvex: bool,
    pub psi_compat: bool,
    pub brackets: bool,
}

impl CheckReport {
    pub fn all(&self) -> bool {
        self.additive_closure && self.root_lengths && self.biconvex && self.psi_compat && self.brackets
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub version: String,
    pub source: String,
    pub target: String,
    /// Source node index -> target node index (internal, 0-based).
    pub node_map: Vec<usize>,
    pub stretched_edge: [usize; 2],
    pub w_word: Vec<usize>,
    pub checks: CheckReport,
    pub rows: Vec<RowReport>,
}

impl EmbeddingReport {
    pub fn has_failure(&self) -> bool {
        !self.checks.all()
            || self
                .rows
                .iter()
                .any(|r| matches!(r.status, RowStatus::Mismatch | RowStatus::Failed))
    }

    pub fn has_skip(&self) -> bool {
        self.rows.iter().any(|r| r.status == RowStatus::Skipped)
    }
}

pub fn render_json(reports: &[EmbeddingReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("report serialization");
    s.push('\n');
    s
}

pub fn render_csv(reports: &[EmbeddingReport]) -> String {
    let mut out = String::from(
        "source,target,node_map,stretched_edge,checks_ok,node,weyl_dim,demazure_dim,status,elapsed_ms\n",
    );
    for rep in reports {
        let map = join(&rep.node_map, ' ');
        let edge = format!("{} {}", rep.stretched_edge[0], rep.stretched_edge[1]);
        for row in &rep.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                rep.source,
                rep.target,
                map,
                edge,
                rep.checks.all(),
                row.node,
                row.weyl_dim,
                row.demazure_dim.as_deref().unwrap_or(""),
                row.status.as_str(),
                row.elapsed_ms,
            );
        }
    }
    out
}

pub fn render_md(reports: &[EmbeddingReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let _ = writeln!(out, "## {} -> {}\n", rep.source, rep.target);
        let _ = writeln!(
            out,
            "node map: `[{}]`, stretched edge: `({}, {})`, |w| = {}\n",
            join(&rep.node_map, ' '),
            rep.stretched_edge[0],
            rep.stretched_edge[1],
            rep.w_word.len(),
        );
        let _ = writeln!(
            out,
            "checks: closure {} / lengths {} / biconvex {} / weights {} / brackets {}\n",
            tick(rep.checks.additive_closure),
            tick(rep.checks.root_lengths),
            tick(rep.checks.biconvex),
            tick(rep.checks.psi_compat),
            tick(rep.checks.brackets),
        );
        out.push_str("| node | weyl dim | demazure dim | status | ms |\n");
        out.push_str("|-----:|---------:|-------------:|:-------|---:|\n");
        for row in &rep.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                row.node,
                row.weyl_dim,
                row.demazure_dim.as_deref().unwrap_or("-"),
                row.status.as_str(),
                row.elapsed_ms,
            );
        }
        out.push('\n');
    }
    out
}

fn tick(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn join(xs: &[usize], sep: char) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(sep);
        }
        let _ = write!(s, "{x}");
    }
    s
}

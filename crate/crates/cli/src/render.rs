//! Text, JSON and LaTeX renderings of representations and reports.

use std::fmt::Write;

use braid3::{DecompositionReport, InvariantLine, Isomorphism, Matrix, Representation, Side, VerificationReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Column vector as a comma-separated tuple.
pub fn tuple(v: &Matrix) -> String {
    let parts: Vec<String> = (0..v.rows()).map(|i| v.get(i, 0).to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn rep_text(r: &Representation) -> String {
    r.to_string().trim_end().to_string()
}

/// Generator images in the published `σ → [array]` layout.
pub fn rep_latex(r: &Representation) -> String {
    let mut out = format!("% {}\n", r.meta());
    let n = r.images().len();
    for (i, m) in r.images().iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "\\sigma _{{{}}}\\rightarrow {}{sep}", i + 1, m.to_latex());
    }
    out.trim_end().to_string()
}

pub fn verification_text(label: &str, report: &VerificationReport) -> String {
    let mut out = format!("{label}\n");
    for c in &report.relations_checked {
        let verdict = if c.holds { "holds" } else { "FAILS" };
        let _ = writeln!(out, "  {} = {}  {verdict}", c.lhs, c.rhs);
    }
    let _ = write!(out, "overall: {}", if report.overall { "holds" } else { "FAILS" });
    out
}

pub fn verification_latex(report: &VerificationReport) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for c in &report.relations_checked {
        let side = |w: &str| {
            w.split(' ')
                .map(|g| format!("\\sigma _{{{}}}", g.trim_start_matches('s')))
                .collect::<String>()
        };
        let rel = if c.holds { "=" } else { "\\neq" };
        let _ = writeln!(out, "{} &{rel} {} \\\\", side(&c.lhs), side(&c.rhs));
    }
    out.push_str("\\end{align*}");
    out
}

fn line_text(w: &InvariantLine) -> String {
    let side = match w.side {
        Side::Right => "right",
        Side::Left => "left",
    };
    format!("{side} line, eigenvalue {}: {}", w.eigenvalue, tuple(&w.vector))
}

/// A decomposition plus per-block facts computed by the caller.
#[derive(Debug, Clone, Serialize)]
pub struct BlockSummary {
    pub dim: usize,
    pub family: String,
    pub irreducible: Option<bool>,
    pub reason: String,
    pub isomorphic_to: Option<String>,
}

pub fn decomposition_text(report: &DecompositionReport, blocks: &[BlockSummary]) -> String {
    let mut out = format!("basis change:\n{}\n", report.basis_change);
    for (i, (b, s)) in report.blocks.iter().zip(blocks).enumerate() {
        let _ = writeln!(out, "\nblock {} (dim {}): {}", i + 1, s.dim, s.reason);
        if let Some(iso) = &s.isomorphic_to {
            let _ = writeln!(out, "  isomorphic to {iso}");
        }
        let _ = writeln!(out, "{}", rep_text(b));
    }
    out.push_str("\nwitnesses:\n");
    for w in &report.witnesses {
        let _ = writeln!(out, "  {}", line_text(w));
    }
    out.trim_end().to_string()
}

pub fn decomposition_latex(report: &DecompositionReport) -> String {
    let mut out = format!("Q={}\n", report.basis_change.to_latex());
    for b in &report.blocks {
        let _ = writeln!(out, "{}", rep_latex(b));
    }
    out.trim_end().to_string()
}

pub fn isomorphism_text(left: &str, right: &str, verdict: &Isomorphism) -> String {
    match verdict {
        Isomorphism::Isomorphic { conjugator } => {
            format!("{left} and {right} are isomorphic\nconjugator M (M*left = right*M):\n{conjugator}")
        }
        Isomorphism::NotIsomorphic { reason } => format!("{left} and {right} are not isomorphic: {reason}"),
        Isomorphism::Undecided {
            trials,
            intertwiner_dim,
        } => format!(
            "undecided: intertwiner space has dimension {intertwiner_dim} but {trials} random combinations were singular"
        ),
    }
}

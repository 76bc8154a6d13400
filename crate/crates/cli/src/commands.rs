//! Subcommand implementations. Each returns the text to print and an exit
//! code, or a [`Failure`] carrying the code and message for stderr.

use std::path::Path;

use braid3::analysis::{AnalysisError, IsoOptions, DEFAULT_TRIALS};
use braid3::reps::{burau3, mu, SpecError};
use braid3::scalar::parse::parse_scalar;
use braid3::{decompose, is_irreducible, is_isomorphic, verify_braid_relations, FamilySpec, RepError, Representation, Scalar};
use serde::Serialize;

use crate::render::{self, BlockSummary, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: EXIT_OK }
    }

    fn check(output: String, passed: bool) -> Self {
        let code = if passed { EXIT_OK } else { EXIT_CHECK_FAILED };
        Outcome { output, code }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Parse(p) => Failure::usage(p.to_string()),
            other => Failure::domain(other.to_string()),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        match e {
            RepError::RelationViolated(_) => Failure::check(e.to_string()),
            other => Failure::domain(other.to_string()),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Rep(r) => r.into(),
            AnalysisError::Linalg(_) => Failure::domain(e.to_string()),
            other => Failure::check(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// Where a representation comes from: a family spec or a raw JSON file.
#[derive(Debug, Clone)]
pub enum Source {
    Spec(String),
    Raw(std::path::PathBuf),
}

pub struct Loaded {
    pub label: String,
    pub spec: Option<FamilySpec>,
    pub rep: Representation,
}

pub fn parse_spec(text: &str) -> Result<FamilySpec, Failure> {
    Ok(text.parse::<FamilySpec>()?)
}

pub fn load_raw(path: &Path) -> Result<Representation, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("invalid representation JSON: {e}")))
}

pub fn load(source: &Source) -> Result<Loaded, Failure> {
    match source {
        Source::Spec(text) => {
            let spec = parse_spec(text)?;
            let rep = spec.build()?;
            Ok(Loaded {
                label: spec.to_string(),
                spec: Some(spec),
                rep,
            })
        }
        Source::Raw(path) => Ok(Loaded {
            label: path.display().to_string(),
            spec: None,
            rep: load_raw(path)?,
        }),
    }
}

pub fn show(source: &Source, format: Format) -> CmdResult {
    let loaded = load(source)?;
    let output = match format {
        Format::Text => render::rep_text(&loaded.rep),
        Format::Json => render::json(&loaded.rep),
        Format::Latex => render::rep_latex(&loaded.rep),
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    input: &'a str,
    #[serde(flatten)]
    report: &'a braid3::VerificationReport,
}

/// Named families verify their relations on construction, so a spec that
/// fails is reported here as a check failure rather than a domain error.
pub fn verify(source: &Source, format: Format) -> CmdResult {
    let loaded = match source {
        Source::Spec(text) => {
            let spec = parse_spec(text)?;
            match spec.build() {
                Ok(rep) => Loaded {
                    label: spec.to_string(),
                    spec: Some(spec),
                    rep,
                },
                Err(RepError::RelationViolated(what)) => {
                    return Err(Failure::check(format!("braid relations fail for {what}")))
                }
                Err(e) => return Err(e.into()),
            }
        }
        raw => load(raw)?,
    };
    let report = verify_braid_relations(&loaded.rep);
    let output = match format {
        Format::Text => render::verification_text(&loaded.label, &report),
        Format::Json => render::json(&VerifyOutput {
            input: &loaded.label,
            report: &report,
        }),
        Format::Latex => render::verification_latex(&report),
    };
    Ok(Outcome::check(output, report.overall))
}

/// Parameter a spec is built at, used to name blocks by comparison with
/// the families at the same parameter.
fn base_parameter(spec: &FamilySpec) -> Option<Scalar> {
    match spec {
        FamilySpec::Specialize(_, p) => Some(p.clone()),
        FamilySpec::Xi { z, .. }
        | FamilySpec::Thm1I { z, .. }
        | FamilySpec::Thm1II { z, .. }
        | FamilySpec::Burau(z)
        | FamilySpec::BurauDiag(z)
        | FamilySpec::Mu(z)
        | FamilySpec::MuPascal(z) => Some(z.clone()),
        FamilySpec::StandardS3 => Some(Scalar::from(1)),
        FamilySpec::Tensor(a, _) | FamilySpec::DirectSum(a, _) => base_parameter(a),
        FamilySpec::Dual(a) | FamilySpec::TensorOneDim(a, _) => base_parameter(a),
    }
}

fn identify(block: &Representation, param: Option<&Scalar>, seed: u64) -> Option<String> {
    let p = param?;
    if block.dim() == 1 {
        return Some(block.meta().to_string());
    }
    if block.field() != p.tag() {
        return None;
    }
    let (name, rep) = match block.dim() {
        2 => (format!("burau({p})"), burau3(p).ok()?),
        3 => (format!("mu({p})"), mu(p).ok()?),
        _ => return None,
    };
    let opts = IsoOptions {
        seed,
        trials: DEFAULT_TRIALS,
    };
    is_isomorphic(block, &rep, opts).ok()?.is_isomorphic().then_some(name)
}

#[derive(Serialize)]
struct DecomposeOutput<'a> {
    input: &'a str,
    #[serde(flatten)]
    report: &'a braid3::DecompositionReport,
    summaries: &'a [BlockSummary],
}

pub fn decompose_cmd(source: &Source, format: Format, seed: u64) -> CmdResult {
    let loaded = load(source)?;
    let report = decompose(&loaded.rep)?;
    let param = loaded.spec.as_ref().and_then(base_parameter);
    let mut summaries = Vec::new();
    for b in &report.blocks {
        let (irreducible, reason) = match is_irreducible(b) {
            Ok(v) => (Some(v.irreducible), if v.irreducible { format!("irreducible ({})", v.reason) } else { v.reason }),
            Err(e) => (None, e.to_string()),
        };
        summaries.push(BlockSummary {
            dim: b.dim(),
            family: b.meta().to_string(),
            irreducible,
            reason,
            isomorphic_to: identify(b, param.as_ref(), seed),
        });
    }
    let output = match format {
        Format::Text => render::decomposition_text(&report, &summaries),
        Format::Json => render::json(&DecomposeOutput {
            input: &loaded.label,
            report: &report,
            summaries: &summaries,
        }),
        Format::Latex => render::decomposition_latex(&report),
    };
    Ok(Outcome::ok(output))
}

pub fn parse_point(text: &str) -> Result<Scalar, Failure> {
    let point = parse_scalar(text).map_err(|e| Failure::usage(format!("invalid point '{text}': {e}")))?;
    if point.tag() == braid3::FieldTag::RatFunc {
        return Err(Failure::usage(format!("point '{text}' must not mention z")));
    }
    Ok(point)
}

#[derive(Serialize)]
struct SpecializeOutput<'a> {
    input: &'a str,
    point: &'a Scalar,
    representation: &'a Representation,
    relations_hold: bool,
}

pub fn specialize(source: &Source, point: &str, format: Format) -> CmdResult {
    let loaded = load(source)?;
    let point = parse_point(point)?;
    let rep = loaded.rep.specialize(&point)?;
    let report = verify_braid_relations(&rep);
    let output = match format {
        Format::Text => format!(
            "{}\nbraid relations: {}",
            render::rep_text(&rep),
            if report.overall { "hold" } else { "FAIL" }
        ),
        Format::Json => render::json(&SpecializeOutput {
            input: &loaded.label,
            point: &point,
            representation: &rep,
            relations_hold: report.overall,
        }),
        Format::Latex => render::rep_latex(&rep),
    };
    Ok(Outcome::check(output, report.overall))
}

#[derive(Serialize)]
struct IsomorphicOutput<'a> {
    left: &'a str,
    right: &'a str,
    #[serde(flatten)]
    result: &'a braid3::Isomorphism,
}

/// Exit 0 when isomorphic; 1 when not, or when the search is undecided.
pub fn isomorphic(left: &Source, right: &Source, format: Format, opts: IsoOptions) -> CmdResult {
    let a = load(left)?;
    let b = load(right)?;
    let verdict = is_isomorphic(&a.rep, &b.rep, opts)?;
    let output = match format {
        Format::Text => render::isomorphism_text(&a.label, &b.label, &verdict),
        Format::Json => render::json(&IsomorphicOutput {
            left: &a.label,
            right: &b.label,
            result: &verdict,
        }),
        Format::Latex => match &verdict {
            braid3::Isomorphism::Isomorphic { conjugator } => format!("M={}", conjugator.to_latex()),
            other => render::isomorphism_text(&a.label, &b.label, other),
        },
    };
    Ok(Outcome::check(output, verdict.is_isomorphic()))
}

//! The replication checklist: every published identity, recomputed exactly.
//!
//! Checks run in id order and never abort the run; an error inside a check
//! marks that check as failed. Random sweeps draw from a ChaCha stream
//! seeded by the caller, so output is a pure function of the seed.

use std::time::{Duration, Instant};

use braid3::analysis::{AnalysisError, IsoOptions};
use braid3::reps::{
    burau3, burau3_diag, burau_diagonalizer, mu_pascal, tensor_square_diagonalizer, theorem1_i, theorem1_ii, xi,
};
use braid3::{
    common_invariant_lines, intertwiners, is_irreducible, is_isomorphic, split_once, verify_braid_relations, FieldTag,
    Isomorphism, Matrix, RepError, Representation, Scalar, Side,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::golden;
use crate::render::tuple;

pub const RELATIONS_TIME_LIMIT: Duration = Duration::from_secs(1);
pub const LOCUS_TIME_LIMIT: Duration = Duration::from_secs(5);
pub const LOCUS_SAMPLES: usize = 100;
pub const SCALING_SAMPLES: usize = 20;
pub const FLOAT_SAMPLES: usize = 50;
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An open question probe: the computed answer is recorded, not judged.
    Reported,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    /// Acceptance criterion number, if the check belongs to one.
    pub criterion: Option<u8>,
    pub description: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// Checks belonging to acceptance criterion `n`.
    pub fn criterion(&self, n: u8) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.criterion == Some(n)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS    ",
                Status::Fail => "FAIL    ",
                Status::Reported => "REPORTED",
            };
            out.push_str(&format!("{status} {:<30} {}\n", c.id, c.description));
            if c.status != Status::Pass {
                out.push_str(&format!("         {}\n", c.witness));
            }
        }
        let failed = self.failed().len();
        out.push_str(&format!(
            "{} checks, {} failed (seed {})",
            self.checks.len(),
            failed,
            self.seed
        ));
        out
    }
}

/// Builder for the three-dimensional summand; swappable so a corrupted
/// build can be exercised as a negative control.
pub type MuBuilder = fn(&Scalar) -> Result<Representation, RepError>;

#[derive(Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub mu: MuBuilder,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: braid3::analysis::DEFAULT_SEED,
            mu: braid3::reps::mu,
        }
    }
}

type CheckResult = Result<(bool, Value), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn z() -> Scalar {
    Scalar::z()
}

fn int(n: i64) -> Scalar {
    Scalar::from(n)
}

fn rf(text: &str) -> Scalar {
    braid3::scalar::parse::parse_scalar(text)
        .and_then(|s| Ok(s.promote(FieldTag::RatFunc)?))
        .expect("constant expression")
}

/// Random rational `p/q` with small numerator and denominator, avoiding
/// the listed values.
fn random_rational(rng: &mut ChaCha8Rng, avoid: &[i64]) -> Scalar {
    loop {
        let p: i64 = rng.gen_range(-40..=40);
        let q: i64 = rng.gen_range(1..=25);
        let s = Scalar::ratio(p, q);
        if !avoid.iter().any(|&a| s == int(a)) {
            return s;
        }
    }
}

struct Runner {
    cfg: SuiteConfig,
    checks: Vec<Check>,
}

impl Runner {
    fn record(&mut self, id: &str, criterion: Option<u8>, description: &str, f: impl FnOnce(&SuiteConfig) -> CheckResult) {
        let (status, witness) = match f(&self.cfg) {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(e) => (Status::Fail, json!({ "error": e })),
        };
        self.push(id, criterion, description, status, witness);
    }

    fn report(&mut self, id: &str, description: &str, f: impl FnOnce(&SuiteConfig) -> Result<Value, String>) {
        let (status, witness) = match f(&self.cfg) {
            Ok(w) => (Status::Reported, w),
            Err(e) => (Status::Fail, json!({ "error": e })),
        };
        self.push(id, None, description, status, witness);
    }

    fn push(&mut self, id: &str, criterion: Option<u8>, description: &str, status: Status, witness: Value) {
        self.checks.push(Check {
            id: id.to_string(),
            criterion,
            description: description.to_string(),
            status,
            witness,
        });
    }
}

pub fn run(cfg: &SuiteConfig) -> SuiteResult {
    let mut r = Runner {
        cfg: cfg.clone(),
        checks: Vec::new(),
    };
    r.record("c01-braid-relations", Some(1), "braid relation holds exactly for every named family", relations);
    r.record("c02-burau-diagonalization", Some(2), "conjugating Burau by P gives the diagonal-sigma1 pair", burau_diagonalization);
    r.record("c03a-tensor-square", Some(3), "Burau tensor square images equal A and B", tensor_square);
    r.record("c03b-tensor-square-conjugated", Some(3), "P4^-1 A P4 and P4^-1 B P4 equal the published forms", tensor_square_conjugated);
    r.record("c03c-mu-golden", Some(3), "deleting row/column 3 gives C and D, and mu(z) builds C and D", mu_golden);
    r.record("c04-mu-eigenvectors", Some(4), "kernel(D - lambda I) matches the published eigenvectors", mu_eigenvectors);
    r.record("c05-tensor-square-split", Some(5), "tensor square = xi(-z) + block isomorphic to mu(z)", tensor_square_split);
    r.record("c06-mu-irreducibility-locus", Some(6), "mu irreducible symbolically and at random z, reducible at 1 and omega", mu_locus);
    r.record("c07-specialization-at-one", Some(7), "common vector (3,0,1), trivial summand, S3 relations and trace identity at z=1", at_one);
    r.record("c08-pascal-form", Some(8), "Pascal-pattern matrices and explicit isomorphism to mu(z)", pascal_form);
    r.record("c09-family-properties", Some(9), "fg product, diag(1,t) scaling, family (ii) irreducible, family (i) reducible at omega", family_properties);
    r.record("c10-schur", Some(10), "self-intertwiners are exactly the scalars", schur);
    r.record("c11-float-consistency", Some(11), "float specialization agrees with exact specialization", float_consistency);
    r.record("c12-negative-controls", Some(12), "perturbed input fails verification; Burau has no invariant line", negative_controls);
    r.report("q01-burau-diagonal-at-one", "diagonalized Burau at z=1, where the published statement excludes it", burau_diag_at_one);
    r.report("q02-family-one-at-omega", "family (i) on the locus z^2+z+1=0", family_one_at_omega);
    r.checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteResult {
        seed: cfg.seed,
        checks: r.checks,
    }
}

fn relations(cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let mut built: Vec<(String, Result<Representation, RepError>)> = vec![
        ("burau(z)".into(), burau3(&z())),
        ("burau_diag(z)".into(), burau3_diag(&z())),
        ("mu(z)".into(), (cfg.mu)(&z())),
        ("mu_pascal(z)".into(), mu_pascal(&z())),
        ("xi(z)".into(), xi(&z(), 3)),
        ("xi(-z)".into(), xi(&-&z(), 3)),
    ];
    for f in ["-z/(z+1)", "1", "z"] {
        built.push((format!("thm1_i(z; f={f})"), theorem1_i(&z(), &rf(f))));
    }
    for e in ["0", "1", "2", "-1"] {
        built.push((format!("thm1_ii(z; e={e})"), theorem1_ii(&z(), &rf(e))));
    }
    let mut all = true;
    let mut rows = Vec::new();
    for (name, rep) in built {
        let holds = match rep {
            Ok(rep) => verify_braid_relations(&rep).overall,
            Err(e) => {
                rows.push(json!({ "family": name, "error": e.to_string() }));
                all = false;
                continue;
            }
        };
        all &= holds;
        rows.push(json!({ "family": name, "holds": holds }));
    }
    let in_time = start.elapsed() < RELATIONS_TIME_LIMIT;
    Ok((
        all && in_time,
        json!({ "families": rows, "within_time_limit": in_time, "limit_ms": RELATIONS_TIME_LIMIT.as_millis() as u64 }),
    ))
}

fn burau_diagonalization(_: &SuiteConfig) -> CheckResult {
    let p = golden::burau_p();
    let ok_p = burau_diagonalizer(&z()).map_err(err)? == p;
    let conj = burau3(&z()).map_err(err)?.conjugate(&p).map_err(err)?;
    let s1 = conj.generator(1) == &golden::burau_diag_s1();
    let s2 = conj.generator(2) == &golden::burau_diag_s2();
    Ok((ok_p && s1 && s2, json!({ "p_matches": ok_p, "sigma1_matches": s1, "sigma2_matches": s2 })))
}

fn square() -> Result<Representation, String> {
    let b = burau3(&z()).map_err(err)?;
    b.tensor(&b).map_err(err)
}

fn tensor_square(_: &SuiteConfig) -> CheckResult {
    let sq = square()?;
    let a = sq.generator(1) == &golden::square_a();
    let b = sq.generator(2) == &golden::square_b();
    Ok((a && b, json!({ "a_matches": a, "b_matches": b })))
}

fn tensor_square_conjugated(_: &SuiteConfig) -> CheckResult {
    let p = golden::square_p();
    let ok_p = tensor_square_diagonalizer(&z()).map_err(err)? == p;
    let conj = square()?.conjugate(&p).map_err(err)?;
    let a = conj.generator(1) == &golden::square_a_conj();
    let b = conj.generator(2) == &golden::square_b_conj();
    Ok((ok_p && a && b, json!({ "p_matches": ok_p, "a_matches": a, "b_matches": b })))
}

fn mu_golden(cfg: &SuiteConfig) -> CheckResult {
    let conj = square()?.conjugate(&golden::square_p()).map_err(err)?;
    let keep = [0, 1, 3];
    let c = conj.generator(1).select(&keep, &keep) == golden::mu_c();
    let d = conj.generator(2).select(&keep, &keep) == golden::mu_d();
    let built = (cfg.mu)(&z()).map_err(err)?;
    let built_c = built.generator(1) == &golden::mu_c();
    let built_d = built.generator(2) == &golden::mu_d();
    let mut mismatches = Vec::new();
    for (name, got, want) in [("C", built.generator(1), golden::mu_c()), ("D", built.generator(2), golden::mu_d())] {
        for i in 0..3 {
            for j in 0..3 {
                if got.get(i, j) != want.get(i, j) {
                    mismatches.push(json!({ "matrix": name, "row": i + 1, "col": j + 1,
                        "got": got.get(i, j).to_string(), "expected": want.get(i, j).to_string() }));
                }
            }
        }
    }
    Ok((
        c && d && built_c && built_d,
        json!({ "deleted_c_matches": c, "deleted_d_matches": d, "constructor_mismatches": mismatches }),
    ))
}

fn mu_eigenvectors(cfg: &SuiteConfig) -> CheckResult {
    let d = (cfg.mu)(&z()).map_err(err)?.generator(2).clone();
    let mut all = true;
    let mut rows = Vec::new();
    for (lambda, expected) in golden::mu_d_eigenvectors() {
        let basis = d.sub_scalar_identity(&lambda).map_err(err)?.kernel();
        let ok = basis.len() == 1 && basis.vectors[0].is_scalar_multiple_of(&expected);
        all &= ok;
        rows.push(json!({
            "eigenvalue": lambda.to_string(),
            "computed": basis.iter().map(tuple).collect::<Vec<_>>(),
            "matches": ok,
        }));
    }
    Ok((all, json!(rows)))
}

fn tensor_square_split(cfg: &SuiteConfig) -> CheckResult {
    let sq = square()?;
    let report = split_once(&sq).map_err(err)?;
    let line = report.blocks[0].images() == xi(&-&z(), 3).map_err(err)?.images();
    let conj = sq.conjugate(&report.basis_change).map_err(err)?;
    let block_diagonal = conj.images().iter().enumerate().all(|(g, img)| {
        img.select(&[0], &[0]) == report.blocks[0].images()[g]
            && img.select(&[1, 2, 3], &[1, 2, 3]) == report.blocks[1].images()[g]
            && (1..4).all(|i| img.get(0, i).is_zero() && img.get(i, 0).is_zero())
    });
    let mu = (cfg.mu)(&z()).map_err(err)?;
    let iso = is_isomorphic(&report.blocks[1], &mu, IsoOptions { seed: cfg.seed, ..IsoOptions::default() })
        .map_err(err)?;
    let conjugator = match &iso {
        Isomorphism::Isomorphic { conjugator } => Some(conjugator.clone()),
        _ => None,
    };
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| json!({ "side": w.side, "eigenvalue": w.eigenvalue.to_string(), "vector": tuple(&w.vector) }))
        .collect();
    Ok((
        line && block_diagonal && conjugator.is_some(),
        json!({
            "line_block_is_xi(-z)": line,
            "block_diagonal": block_diagonal,
            "basis_change": report.basis_change,
            "witnesses": witnesses,
            "conjugator_to_mu": conjugator,
        }),
    ))
}

fn mu_locus(cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let symbolic = (cfg.mu)(&z()).map_err(err)?;
    let generic = is_irreducible(&symbolic).map_err(err)?.irreducible;
    let at_one = is_irreducible(&symbolic.specialize(&int(1)).map_err(err)?).map_err(err)?.irreducible;
    let at_omega = is_irreducible(&symbolic.specialize(&Scalar::omega()).map_err(err)?).map_err(err)?.irreducible;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reducible_samples = Vec::new();
    for _ in 0..LOCUS_SAMPLES {
        let point = random_rational(&mut rng, &[0, -1, 1]);
        let rep = symbolic.specialize(&point).map_err(err)?;
        if !is_irreducible(&rep).map_err(err)?.irreducible {
            reducible_samples.push(point.to_string());
        }
    }
    let in_time = start.elapsed() < LOCUS_TIME_LIMIT;
    Ok((
        generic && !at_one && !at_omega && reducible_samples.is_empty() && in_time,
        json!({
            "symbolic_irreducible": generic,
            "irreducible_at_1": at_one,
            "irreducible_at_omega": at_omega,
            "samples": LOCUS_SAMPLES,
            "reducible_samples": reducible_samples,
            "within_time_limit": in_time,
            "limit_ms": LOCUS_TIME_LIMIT.as_millis() as u64,
        }),
    ))
}

fn q_column(v: &[i64]) -> Matrix {
    Matrix::column(v.iter().map(|&x| int(x)).collect()).expect("nonempty")
}

fn at_one(cfg: &SuiteConfig) -> CheckResult {
    let one = int(1);
    let mu1 = (cfg.mu)(&z()).map_err(err)?.specialize(&one).map_err(err)?;
    let lines = common_invariant_lines(&mu1, Side::Right).map_err(err)?;
    let common = lines.len() == 1 && lines[0].eigenvalue.is_one() && lines[0].vector.is_scalar_multiple_of(&q_column(&[3, 0, 1]));

    let report = split_once(&mu1).map_err(err)?;
    let trivial = report.blocks[0].images() == xi(&one, 3).map_err(err)?.images();
    let rho = burau3(&one).map_err(err)?;
    let standard = is_isomorphic(&report.blocks[1], &rho, IsoOptions { seed: cfg.seed, ..IsoOptions::default() })
        .map_err(err)?
        .is_isomorphic();
    let involutions = rho.images().iter().all(|m| m.mul(m).map(|p| p.is_identity()).unwrap_or(false));

    let sq = rho.tensor(&rho).map_err(err)?;
    let sign = xi(&int(-1), 3).map_err(err)?;
    let mut traces = Vec::new();
    let mut trace_ok = true;
    for (name, word) in [("s1", vec![1]), ("s2", vec![2]), ("s1 s2", vec![1, 2])] {
        let lhs = sq.image_of_word(&word).map_err(err)?.trace().map_err(err)?;
        let rhs = &(&rho.image_of_word(&word).map_err(err)?.trace().map_err(err)?
            + &sign.image_of_word(&word).map_err(err)?.trace().map_err(err)?)
            + &one;
        trace_ok &= lhs == rhs;
        traces.push(json!({ "word": name, "tensor_square": lhs.to_string(), "rho_plus_sign_plus_1": rhs.to_string() }));
    }
    Ok((
        common && trivial && standard && involutions && trace_ok,
        json!({
            "common_vector": lines.first().map(|l| tuple(&l.vector)),
            "common_vector_is_(3,0,1)": common,
            "trivial_summand": trivial,
            "complement_isomorphic_to_burau(1)": standard,
            "burau(1)_images_are_involutions": involutions,
            "traces": traces,
        }),
    ))
}

fn pascal_form(cfg: &SuiteConfig) -> CheckResult {
    let pascal = mu_pascal(&z()).map_err(err)?;
    let printed = pascal.generator(1) == &golden::pascal_s1() && pascal.generator(2) == &golden::pascal_s2();
    let mu = (cfg.mu)(&z()).map_err(err)?;
    let iso = is_isomorphic(&mu, &pascal, IsoOptions { seed: cfg.seed, ..IsoOptions::default() }).map_err(err)?;
    let (conj_ok, conjugator) = match &iso {
        Isomorphism::Isomorphic { conjugator } => {
            let ok = mu
                .images()
                .iter()
                .zip(pascal.images())
                .all(|(a, b)| conjugator.mul(a).ok() == b.mul(conjugator).ok());
            (ok && conjugator.is_invertible(), Some(conjugator.clone()))
        }
        _ => (false, None),
    };
    Ok((printed && conj_ok, json!({ "matrices_match": printed, "conjugator": conjugator, "conjugator_verified": conj_ok })))
}

fn family_properties(cfg: &SuiteConfig) -> CheckResult {
    let fam = theorem1_i(&z(), &int(1)).map_err(err)?;
    let s2 = fam.generator(2);
    let fg = (s2.get(0, 1) * s2.get(1, 0)) == golden::family_one_fg();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5ca1e);
    let mut scaling_ok = true;
    let mut failures = Vec::new();
    for _ in 0..SCALING_SAMPLES {
        let t = random_rational(&mut rng, &[0]).promote(FieldTag::RatFunc).map_err(err)?;
        let f = rf("z");
        let d = Matrix::diag(&[Scalar::one(FieldTag::RatFunc), t.clone()]).map_err(err)?;
        let lhs = theorem1_i(&z(), &f).map_err(err)?.conjugate(&d).map_err(err)?;
        let rhs = theorem1_i(&z(), &(&t * &f)).map_err(err)?;
        if lhs.images() != rhs.images() {
            scaling_ok = false;
            failures.push(t.to_string());
        }
    }

    let mut family_two = Vec::new();
    let mut two_ok = true;
    let mut cases: Vec<(Scalar, Scalar)> = ["0", "1", "2", "-1", "1/2"].iter().map(|e| (z(), rf(e))).collect();
    for _ in 0..10 {
        let zz = random_rational(&mut rng, &[0]);
        let e = random_rational(&mut rng, &[]);
        cases.push((zz, e));
    }
    for (zz, e) in cases {
        let irreducible = is_irreducible(&theorem1_ii(&zz, &e).map_err(err)?).map_err(err)?.irreducible;
        two_ok &= irreducible;
        family_two.push(json!({ "z": zz.to_string(), "e": e.to_string(), "irreducible": irreducible }));
    }

    let omega = theorem1_i(&Scalar::omega(), &Scalar::one(FieldTag::Omega)).map_err(err)?;
    let omega_reducible = !is_irreducible(&omega).map_err(err)?.irreducible;
    Ok((
        fg && scaling_ok && two_ok && omega_reducible,
        json!({
            "fg_identity": fg,
            "scaling_samples": SCALING_SAMPLES,
            "scaling_failures": failures,
            "family_two": family_two,
            "family_one_reducible_at_omega": omega_reducible,
        }),
    ))
}

fn schur(_: &SuiteConfig) -> CheckResult {
    let reps = [
        ("burau(z)", burau3(&z())),
        ("mu(z)", braid3::reps::mu(&z())),
        ("thm1_ii(z; e=0)", theorem1_ii(&z(), &int(0))),
    ];
    let mut all = true;
    let mut rows = Vec::new();
    for (name, rep) in reps {
        let rep = rep.map_err(err)?;
        let dim = intertwiners(&rep, &rep).map_err(err)?.len();
        all &= dim == 1;
        rows.push(json!({ "rep": name, "intertwiner_dim": dim }));
    }
    Ok((all, json!(rows)))
}

fn float_consistency(cfg: &SuiteConfig) -> CheckResult {
    let families = [burau3(&z()).map_err(err)?, (cfg.mu)(&z()).map_err(err)?, theorem1_ii(&z(), &int(2)).map_err(err)?];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xf10a7);
    let mut disagreements = Vec::new();
    for _ in 0..FLOAT_SAMPLES {
        let point = random_rational(&mut rng, &[0, -1]);
        let x = point.to_complex().expect("rational").re;
        for fam in &families {
            let exact = fam.specialize(&point).map_err(err)?;
            let float = fam.specialize(&Scalar::float(x)).map_err(err)?;
            let exact_holds = verify_braid_relations(&exact).overall;
            let float_holds = verify_braid_relations(&float).overall;
            let entries_agree = exact.images().iter().zip(float.images()).all(|(a, b)| {
                a.entries().iter().zip(b.entries()).all(|(u, v)| {
                    let (u, v) = (u.to_complex().expect("exact"), v.to_complex().expect("float"));
                    (u - v).norm() <= FLOAT_TOLERANCE * (1.0 + u.norm().max(v.norm()))
                })
            });
            if exact_holds != float_holds || !entries_agree {
                disagreements.push(json!({ "family": fam.meta().to_string(), "z": point.to_string(),
                    "exact_holds": exact_holds, "float_holds": float_holds, "entries_agree": entries_agree }));
            }
        }
    }
    Ok((
        disagreements.is_empty(),
        json!({ "samples": FLOAT_SAMPLES, "tolerance": FLOAT_TOLERANCE, "disagreements": disagreements }),
    ))
}

/// Burau with `σ₂` replaced by the identity: the braid relation then
/// reads `σ₁² = σ₁`, which fails.
pub fn perturbed_burau() -> Result<Representation, String> {
    let b = burau3(&z()).map_err(err)?;
    Representation::new(3, vec![b.generator(1).clone(), Matrix::identity(2, FieldTag::RatFunc)], Default::default())
        .map_err(err)
}

fn negative_controls(_: &SuiteConfig) -> CheckResult {
    let perturbed_fails = !verify_braid_relations(&perturbed_burau()?).overall;
    let no_line = matches!(split_once(&burau3(&z()).map_err(err)?), Err(AnalysisError::NoInvariantLine));
    Ok((perturbed_fails && no_line, json!({ "perturbed_fails": perturbed_fails, "burau_has_no_invariant_line": no_line })))
}

fn burau_diag_at_one(_: &SuiteConfig) -> Result<Value, String> {
    let p = burau_diagonalizer(&z()).map_err(err)?;
    let det = p.det().map_err(err)?;
    let at_one = burau3_diag(&int(1));
    let at_minus_one = burau3_diag(&int(-1));
    Ok(json!({
        "det_p": det.to_string(),
        "p_invertible_at_1": burau_diagonalizer(&int(1)).map_err(err)?.is_invertible(),
        "builds_at_1": at_one.is_ok(),
        "relations_hold_at_1": at_one.as_ref().map(|r| verify_braid_relations(r).overall).unwrap_or(false),
        "isomorphic_to_burau_at_1": at_one.as_ref().ok().and_then(|r| {
            is_isomorphic(&burau3(&int(1)).ok()?, r, IsoOptions::default()).ok().map(|v| v.is_isomorphic())
        }),
        "rejected_at_minus_1": at_minus_one.err().map(|e| e.to_string()),
    }))
}

fn family_one_at_omega(_: &SuiteConfig) -> Result<Value, String> {
    let fam = theorem1_i(&Scalar::omega(), &Scalar::one(FieldTag::Omega)).map_err(err)?;
    let verdict = is_irreducible(&fam).map_err(err)?;
    Ok(json!({
        "f": "1",
        "g": fam.generator(2).get(1, 0).to_string(),
        "irreducible": verdict.irreducible,
        "reason": verdict.reason,
        "witness": verdict.witness.map(|w| json!({ "eigenvalue": w.eigenvalue.to_string(), "vector": tuple(&w.vector) })),
    }))
}

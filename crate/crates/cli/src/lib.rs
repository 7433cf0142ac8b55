//! The `qfock` command line: argument parsing, dispatch to the engines and
//! rendering. [`run`] does everything except touching the process streams,
//! so it is callable from tests.

pub mod cache;
pub mod report;

use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use qfock::decomp::{character_identity_check, grade_part, psi_k_check, sl2_character_matches, sl2_factorize, sl2_intertwiner};
use qfock::heckepoly::{macdonald_phi, macdonald_phi_p1, CompositionLabel, PMode};
use qfock::qaffine::{verify_relations, Action};
use qfock::rmodule::{image_basis, strip_product, Variant};
use qfock::tableaux::{char_level1, enumerate_sst, BorderStrip};
use qfock::wedge::{fock_component_basis, straighten, WedgeVector};
use qfock::Error;

use cache::Cache;
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Comma-separated integers, e.g. `0,-1,2`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntList(Vec::new()));
        }
        s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("'{x}': {e}"))).collect::<Result<_, _>>().map(IntList)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActionKind {
    U0,
    U1,
    Eval,
    U0Fock,
    U1Fock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PArg {
    Generic,
    One,
}

impl From<PArg> for PMode {
    fn from(p: PArg) -> PMode {
        match p {
            PArg::Generic => PMode::Generic,
            PArg::One => PMode::One,
        }
    }
}

fn rank_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 2 {
        return Err("n must be at least 2".into());
    }
    Ok(n)
}

#[derive(Parser, Debug)]
#[command(name = "qfock", version, about = "Exact computations on the q-Fock space and its border-strip decomposition")]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Non-symmetric Macdonald polynomial Phi_sigma^lambda.
    Macdonald {
        /// Number of variables.
        #[arg(long = "N")]
        n_vars: usize,
        /// Entries of lambda in any order; sorted non-increasingly.
        #[arg(long, allow_hyphen_values = true)]
        lambda: IntList,
        /// `min` or a 1-based permutation such as `2,1`.
        #[arg(long, default_value = "min")]
        sigma: String,
        /// Specialize at p = 1.
        #[arg(long)]
        p1: bool,
    },
    /// Normally ordered expansion of u_{k_1} (x) .. (x) u_{k_N}.
    Straighten {
        #[arg(long, value_parser = rank_n)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: IntList,
    },
    /// Check the quantum affine relations of an action on a finite basis.
    Verify {
        #[arg(long, value_enum)]
        action: ActionKind,
        #[arg(long, value_parser = rank_n)]
        n: usize,
        /// Evaluation parameters (eval).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<IntList>,
        /// Vacuum charge (u0-fock, u1-fock).
        #[arg(long = "M", default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
        /// Fock degree (u0-fock, u1-fock).
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Wedge length (u0, u1).
        #[arg(long = "N", default_value_t = 2)]
        len: usize,
        /// Index window `lo,hi` for wedge bases (u0, u1).
        #[arg(long, default_value = "-2,2", allow_hyphen_values = true)]
        window: IntList,
        #[arg(long, value_enum, default_value = "generic")]
        p: PArg,
    },
    /// Image of the R-matrix product of a border strip.
    StripModule {
        #[arg(long, value_parser = rank_n)]
        n: usize,
        #[arg(long)]
        strip: BorderStrip,
        /// Content label base.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a0: i64,
        #[arg(long)]
        character: bool,
        #[arg(long)]
        dim: bool,
    },
    /// Graded level-one character as a border-strip sum.
    Characters {
        #[arg(long, value_parser = rank_n)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cutoff: usize,
        /// Compare with the Fock quotient grade by grade.
        #[arg(long)]
        check: bool,
    },
    /// Decompose one degree of the Fock quotient into strip modules.
    Decompose {
        #[arg(long, value_parser = rank_n)]
        n: usize,
        #[arg(long = "M", allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluation-module factorization of an sl_2 strip module.
    Sl2 {
        #[arg(long)]
        strip: BorderStrip,
        /// Also solve for an explicit intertwiner.
        #[arg(long)]
        intertwiner: bool,
    },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(&cli.cmd, cli.format) {
        Ok((text, ok)) => Outcome { code: if ok { EXIT_OK } else { EXIT_MISMATCH }, stdout: text, stderr: String::new() },
        Err(Failure::Usage(m)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Engine(e)) => Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Bad input is a usage error; anything else the engines raise is a broken
/// internal invariant.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) | Error::InvalidLambdaClass(_) | Error::NotSl2Strip(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn render<R: Report>(r: &R, format: Format) -> (String, bool) {
    let text = match format {
        Format::Table => r.table(),
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialize") + "\n",
    };
    (text, r.ok())
}

fn dispatch(cmd: &Cmd, format: Format) -> Result<(String, bool), Failure> {
    Ok(match cmd {
        Cmd::Macdonald { n_vars, lambda, sigma, p1 } => render(&macdonald(*n_vars, &lambda.0, sigma, *p1)?, format),
        Cmd::Straighten { n, word } => {
            let v = straighten(*n, &WedgeVector::basis(word.0.clone()))?;
            let mut terms: Vec<_> = v.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
            terms.reverse();
            render(&StraightenReport { n: *n, word: word.0.clone(), terms }, format)
        }
        Cmd::Verify { action, n, a, m, degree, len, window, p } => {
            render(&verify(*action, *n, a.as_ref(), *m, *degree, *len, &window.0, (*p).into())?, format)
        }
        Cmd::StripModule { n, strip, a0, character, dim } => {
            let (want_dim, want_char) = if !character && !dim { (true, true) } else { (*dim, *character) };
            let im = image_basis(&strip_product(strip, *a0, Variant::R, *n)?)?;
            let report = StripModuleReport {
                n: *n,
                strip: strip.cols.clone(),
                labels: strip.content_labels(*a0),
                dim: want_dim.then(|| im.dim()),
                character: want_char.then(|| im.character()),
            };
            render(&report, format)
        }
        Cmd::Characters { n, k, cutoff, check } => {
            if k >= n {
                return Err(usage(format!("need 0 <= k < n, got k={k}")));
            }
            let ch = char_level1(*n, *k, *cutoff as i64);
            let grades = (0..=*cutoff as i64)
                .map(|g| {
                    let character = grade_part(&ch, g);
                    let dim = character.graded().values().sum();
                    GradeLine { grade: g, dim, character }
                })
                .collect();
            let fock_check = if *check {
                Some(Verdict::from_status(&character_identity_check(*n, *k, *cutoff)?.status))
            } else {
                None
            };
            render(&CharactersReport { n: *n, k: *k, cutoff: *cutoff, grades, fock_check }, format)
        }
        Cmd::Decompose { n, m, degree } => {
            let r = psi_k_check(*n, *m, *degree)?;
            let verdict = Verdict::from_status(&r.status);
            let entries = r
                .entries
                .into_iter()
                .map(|e| DecompLine { strip: e.strip.cols, grade: e.grade, dim: e.dim, character: e.character, lambda: e.lambda })
                .collect();
            let report = DecomposeReport {
                n: *n,
                m: *m,
                degree: *degree,
                entries,
                quotient_dim: r.quotient_dim,
                status: verdict.status,
                details: verdict.details,
            };
            render(&report, format)
        }
        Cmd::Sl2 { strip, intertwiner } => {
            let factors = sl2_factorize(strip)?;
            let dim = factors.iter().map(|(n, _)| n + 1).product();
            let sst_count = enumerate_sst(&strip.to_skew(), 2).len();
            let character_matches = sl2_character_matches(strip)?;
            let found = if *intertwiner { Some(sl2_intertwiner(strip)?.is_some()) } else { None };
            let ok = dim == sst_count && character_matches && found != Some(false);
            let report = Sl2Report {
                strip: strip.cols.clone(),
                factors: factors.into_iter().map(|(n, b)| Sl2Factor { n, b }).collect(),
                dim,
                sst_count,
                character_matches,
                intertwiner: found,
                status: if ok { "MATCH" } else { "MISMATCH" }.into(),
            };
            render(&report, format)
        }
    })
}

fn macdonald(n_vars: usize, lambda: &[i64], sigma: &str, p1: bool) -> Result<MacdonaldReport, Failure> {
    if lambda.len() != n_vars {
        return Err(usage(format!("lambda has {} entries but N = {n_vars}", lambda.len())));
    }
    let mut lam = lambda.to_vec();
    lam.sort_by(|a, b| b.cmp(a));
    let label = if sigma.trim() == "min" {
        CompositionLabel::min(&lam)?
    } else {
        let perm = IntList::from_str(sigma).map_err(usage)?;
        let perm: Vec<usize> = perm.0.iter().map(|&s| usize::try_from(s).map_err(|_| usage("sigma entries must be positive"))).collect::<Result<_, _>>()?;
        CompositionLabel::new(lam.clone(), perm)?
    };
    let key = format!("macdonald lambda={:?} sigma={:?} p1={p1}", label.lambda, label.sigma);
    let cache = Cache::from_env();
    let cached: Option<Vec<Term>> = cache.as_ref().and_then(|c| c.get(&key));
    let terms = match cached {
        Some(t) => t,
        None => {
            let phi = if p1 { macdonald_phi_p1(&label)? } else { macdonald_phi(&label, PMode::Generic)? };
            let mut terms: Vec<Term> = phi.iter().map(|(e, c)| Term { exponent: e.clone(), coefficient: c.clone() }).collect();
            terms.reverse();
            if let Some(c) = &cache {
                c.put(&key, &terms);
            }
            terms
        }
    };
    Ok(MacdonaldReport { n_vars, lambda: label.lambda, sigma: label.sigma, p1, terms })
}

fn normal_words(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, lo: i64, top: i64, w: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if w.len() == len {
            out.push(w.clone());
            return;
        }
        for x in (lo..=top).rev() {
            w.push(x);
            rec(len, lo, x - 1, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, lo, hi, &mut Vec::new(), &mut out);
    out
}

fn colour_words(n: usize, len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w: Vec<i64>| (1..=n as i64).map(move |c| [w.clone(), vec![c]].concat())).collect();
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn verify(
    action: ActionKind,
    n: usize,
    a: Option<&IntList>,
    m: i64,
    degree: usize,
    len: usize,
    window: &[i64],
    p: PMode,
) -> Result<VerifyReport, Failure> {
    let (ctx, words, name) = match action {
        ActionKind::Eval => {
            let a = a.ok_or_else(|| usage("eval needs --a"))?.0.clone();
            let words = colour_words(n, a.len());
            (Action::Eval { n, a: a.clone() }, words, format!("eval a=({})", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        }
        ActionKind::U0 | ActionKind::U1 => {
            let [lo, hi] = window else { return Err(usage("--window takes lo,hi")) };
            let words = normal_words(len, *lo, *hi);
            if action == ActionKind::U0 {
                (Action::U0 { n, p }, words, format!("u0 N={len} p={p:?}"))
            } else {
                (Action::U1 { n }, words, format!("u1 N={len}"))
            }
        }
        ActionKind::U0Fock => {
            (Action::U0Fock { n, m, p, extra: 0 }, fock_component_basis(m, degree as i64, n), format!("u0-fock M={m} degree={degree} p={p:?}"))
        }
        ActionKind::U1Fock => (Action::U1Fock { n, m }, fock_component_basis(m, degree as i64, n), format!("u1-fock M={m} degree={degree}")),
    };
    let basis: Vec<WedgeVector> = words.into_iter().map(WedgeVector::basis).collect();
    let r = verify_relations(&ctx, &basis)?;
    let checks = r.checks.iter().map(|c| CheckLine { family: c.family.clone(), instances: c.instances, passed: c.passed }).collect();
    Ok(VerifyReport {
        action: name,
        n,
        basis_size: basis.len(),
        checks,
        central: r.central.clone(),
        status: if r.passed() { "PASS" } else { "FAIL" }.into(),
    })
}

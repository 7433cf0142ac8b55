//! Serializable outputs of the subcommands and their table rendering.

use std::fmt::Write;

use qfock::tableaux::CharPoly;
use qfock::RingElem;
use serde::{Deserialize, Serialize};

pub trait Report: Serialize {
    fn table(&self) -> String;

    /// `false` turns into a MISMATCH exit code.
    fn ok(&self) -> bool {
        true
    }
}

fn ints<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn strip_str(cols: &[usize]) -> String {
    format!("<{}>", ints(cols))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: Vec<i64>,
    pub coefficient: RingElem,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MacdonaldReport {
    #[serde(rename = "N")]
    pub n_vars: usize,
    pub lambda: Vec<i64>,
    pub sigma: Vec<usize>,
    pub p1: bool,
    pub terms: Vec<Term>,
}

impl Report for MacdonaldReport {
    fn table(&self) -> String {
        let mut poly = CharPoly::new();
        for t in &self.terms {
            poly.add_term(t.exponent.clone(), t.coefficient.clone());
        }
        let at = if self.p1 { " at p=1" } else { "" };
        format!(
            "Phi  lambda=({}) sigma=({}){at}\nterms: {}\n{poly}\n",
            ints(&self.lambda),
            ints(&self.sigma),
            self.terms.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StraightenReport {
    pub n: usize,
    pub word: Vec<i64>,
    pub terms: Vec<(Vec<i64>, RingElem)>,
}

impl Report for StraightenReport {
    fn table(&self) -> String {
        let mut out = format!("u_{} (n={})\n", self.word.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" (x) u_"), self.n);
        if self.terms.is_empty() {
            out.push_str("  = 0\n");
        }
        for (w, c) in &self.terms {
            let wedge = w.iter().map(|k| format!("u_{k}")).collect::<Vec<_>>().join(" ^ ");
            let _ = writeln!(out, "  {c}\t{wedge}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub family: String,
    pub instances: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub action: String,
    pub n: usize,
    pub basis_size: usize,
    pub checks: Vec<CheckLine>,
    /// Eigenvalue of `K_0 .. K_{n-1}` when it is a scalar on the basis.
    pub central: Option<RingElem>,
    pub status: String,
}

impl Report for VerifyReport {
    fn table(&self) -> String {
        let mut out = format!("{} n={} basis={}\n", self.action, self.n, self.basis_size);
        for c in &self.checks {
            let _ = writeln!(out, "  {:<28} {:>6}  {}", c.family, c.instances, if c.passed { "PASS" } else { "FAIL" });
        }
        match &self.central {
            Some(c) => {
                let _ = writeln!(out, "central c' = {c}");
            }
            None => out.push_str("central c' not scalar\n"),
        }
        let _ = writeln!(out, "{}", self.status);
        out
    }

    fn ok(&self) -> bool {
        self.status == "PASS"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StripModuleReport {
    pub n: usize,
    pub strip: Vec<usize>,
    pub labels: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub character: Option<CharPoly>,
}

impl Report for StripModuleReport {
    fn table(&self) -> String {
        let mut out = format!("Im R_theta  theta={} n={}\nlabels: {}\n", strip_str(&self.strip), self.n, ints(&self.labels));
        if let Some(d) = self.dim {
            let _ = writeln!(out, "dim: {d}");
        }
        if let Some(c) = &self.character {
            let _ = writeln!(out, "character: {c}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradeLine {
    pub grade: i64,
    pub dim: i64,
    pub character: CharPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub details: Option<String>,
}

impl Verdict {
    pub fn from_status(s: &qfock::decomp::Status) -> Self {
        match s {
            qfock::decomp::Status::Match => Verdict { status: "MATCH".into(), details: None },
            qfock::decomp::Status::Mismatch(d) => Verdict { status: "MISMATCH".into(), details: Some(d.clone()) },
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == "MATCH"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharactersReport {
    pub n: usize,
    pub k: usize,
    pub cutoff: usize,
    pub grades: Vec<GradeLine>,
    /// Grade-by-grade comparison with the Fock quotient, when requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fock_check: Option<Verdict>,
}

impl Report for CharactersReport {
    fn table(&self) -> String {
        let mut out = format!("ch V(Lambda_{}) n={} up to q^{}\n", self.k, self.n, self.cutoff);
        for g in &self.grades {
            let _ = writeln!(out, "  q^{:<3} dim {:>4}  {}", g.grade, g.dim, g.character);
        }
        if let Some(v) = &self.fock_check {
            let _ = writeln!(out, "Fock quotient: {}", v.status);
            if let Some(d) = &v.details {
                let _ = writeln!(out, "  {d}");
            }
        }
        out
    }

    fn ok(&self) -> bool {
        self.fock_check.as_ref().is_none_or(Verdict::is_match)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompLine {
    pub strip: Vec<usize>,
    pub grade: i64,
    pub dim: usize,
    pub character: CharPoly,
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecomposeReport {
    pub n: usize,
    #[serde(rename = "M")]
    pub m: i64,
    pub degree: usize,
    pub entries: Vec<DecompLine>,
    pub quotient_dim: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub details: Option<String>,
}

impl Report for DecomposeReport {
    fn table(&self) -> String {
        let mut out = format!("F_{} degree {} n={}  quotient dim {}\n", self.m, self.degree, self.n, self.quotient_dim);
        for e in &self.entries {
            let _ = writeln!(
                out,
                "  {:<12} grade {:>2}  dim {:>4}  lambda=({})  {}",
                strip_str(&e.strip),
                e.grade,
                e.dim,
                ints(&e.lambda),
                e.character
            );
        }
        let _ = writeln!(out, "{}", self.status);
        if let Some(d) = &self.details {
            let _ = writeln!(out, "  {d}");
        }
        out
    }

    fn ok(&self) -> bool {
        self.status == "MATCH"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sl2Factor {
    pub n: usize,
    pub b: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Sl2Report {
    pub strip: Vec<usize>,
    pub factors: Vec<Sl2Factor>,
    pub dim: usize,
    pub sst_count: usize,
    pub character_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intertwiner: Option<bool>,
    pub status: String,
}

impl Report for Sl2Report {
    fn table(&self) -> String {
        let factors = if self.factors.is_empty() {
            "trivial (1-dimensional)".to_string()
        } else {
            self.factors.iter().map(|f| format!("W_{}({})", f.n, f.b)).collect::<Vec<_>>().join(" (x) ")
        };
        let mut out = format!("theta={}  {factors}\n", strip_str(&self.strip));
        let _ = writeln!(out, "dim {}  SST count {}  character {}", self.dim, self.sst_count, if self.character_matches { "matches" } else { "differs" });
        if let Some(x) = self.intertwiner {
            let _ = writeln!(out, "intertwiner {}", if x { "found" } else { "none" });
        }
        let _ = writeln!(out, "{}", self.status);
        out
    }

    fn ok(&self) -> bool {
        self.status == "MATCH"
    }
}

//! Level-0 and level-1 actions of `U'_q(sl_n-hat)` on wedge spaces, Fock
//! components and tensor products of evaluation modules, and a checker for
//! the defining relations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::RingElem;
use crate::heckepoly::{cherednik_y, cherednik_y_inv, monomial, Mono, PMode, PolyVector, RelationCheck};
use crate::wedge::{
    join_index, partition_degree, partition_to_word, residue, split_index, stabilized, straighten,
    vacuum_index, word_to_partition, Word, WedgeVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    E,
    F,
    K,
    Kinv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn e(i: usize) -> Self {
        Generator { kind: GenKind::E, index: i }
    }
    pub fn f(i: usize) -> Self {
        Generator { kind: GenKind::F, index: i }
    }
    pub fn k(i: usize) -> Self {
        Generator { kind: GenKind::K, index: i }
    }
    pub fn kinv(i: usize) -> Self {
        Generator { kind: GenKind::Kinv, index: i }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::E => write!(f, "E{}", self.index),
            GenKind::F => write!(f, "F{}", self.index),
            GenKind::K => write!(f, "K{}", self.index),
            GenKind::Kinv => write!(f, "K{}^-1", self.index),
        }
    }
}

/// Where the algebra acts. Vectors are [`WedgeVector`]s whose keys are
/// index words (`U0`, `U1`), colour words `(eps_1, .., eps_N)` (`Eval`) or
/// partitions (`U0Fock`, `U1Fock`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// `U_0^(N)` on `wedge^N V(z)`.
    U0 { n: usize, p: PMode },
    /// `U_1^(N)` on `wedge^N V(z)`.
    U1 { n: usize },
    /// Evaluation action on `(x)^N V` with parameters `a`.
    Eval { n: usize, a: Vec<i64> },
    /// Level-0 action on `F_M`, through `V_M^{s+nl}` with `l = degree + extra`.
    U0Fock { n: usize, m: i64, p: PMode, extra: usize },
    /// Level-1 action on `F_M`.
    U1Fock { n: usize, m: i64 },
}

impl Action {
    pub fn n(&self) -> usize {
        match self {
            Action::U0 { n, .. }
            | Action::U1 { n }
            | Action::Eval { n, .. }
            | Action::U0Fock { n, .. }
            | Action::U1Fock { n, .. } => *n,
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let n = self.n();
        [GenKind::E, GenKind::F, GenKind::K, GenKind::Kinv]
            .into_iter()
            .flat_map(|kind| (0..n).map(move |index| Generator { kind, index }))
            .collect()
    }
}

/// Cartan matrix entry `a_ij` of `sl_n-hat`.
pub fn cartan(n: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if n == 2 {
        -2
    } else if (i + 1) % n == j || (j + 1) % n == i {
        -1
    } else {
        0
    }
}

/// Exponent of `q` in `K^i` on `v_eps`.
fn k_exp(n: usize, i: usize, eps: usize) -> i64 {
    if i == 0 {
        (eps == n) as i64 - (eps == 1) as i64
    } else {
        (eps == i) as i64 - (eps == i + 1) as i64
    }
}

/// `(from, to)` colours of the matrix unit in `E_i`.
fn e_colours(n: usize, i: usize) -> (usize, usize) {
    if i == 0 {
        (1, n)
    } else {
        (i + 1, i)
    }
}

fn f_colours(n: usize, i: usize) -> (usize, usize) {
    let (a, b) = e_colours(n, i);
    (b, a)
}

/// `q^{sum_j K^i exponent}` over colours.
pub fn k_eigenvalue(n: usize, i: usize, colours: impl IntoIterator<Item = usize>) -> i64 {
    colours.into_iter().map(|e| k_exp(n, i, e)).sum()
}

/// What multiplies the polynomial part in the `j`-th term of `E_0`/`F_0`.
#[derive(Clone, Copy)]
enum Affine<'a> {
    Cherednik(PMode),
    Mult,
    Eval(&'a [i64]),
}

/// Normalization of `Y_j` inside `E_0`, `F_0` of `U_0^(N)`: the Hecke
/// generator `q^{1-N} Y_j^(N)`.
fn y_scalar(nvars: usize, inverse: bool) -> RingElem {
    let e = 1 - nvars as i64;
    RingElem::q_pow(if inverse { -e } else { e })
}

type YKey = (PMode, bool, usize, Mono);

fn y_cache() -> &'static Mutex<HashMap<YKey, PolyVector>> {
    static C: OnceLock<Mutex<HashMap<YKey, PolyVector>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Y_j^{+-1}` (normalized) on a monomial, cached.
fn y_on_monomial(mode: PMode, inverse: bool, j: usize, m: &[i64]) -> Result<PolyVector> {
    let key = (mode, inverse, j, m.to_vec());
    if let Some(v) = y_cache().lock().expect("y cache").get(&key) {
        return Ok(v.clone());
    }
    let f = monomial(m);
    let raw = if inverse { cherednik_y_inv(j, mode, &f)? } else { cherednik_y(j, mode, &f)? };
    let v = raw.scale(&y_scalar(m.len(), inverse));
    y_cache().lock().expect("y cache").insert(key, v.clone());
    Ok(v)
}

/// A pure tensor `z^m (x) v_e`; `m` is empty for the evaluation action.
type Pure = (Vec<i64>, Vec<usize>);

fn act_pure(n: usize, g: Generator, aff: Affine, m: &[i64], e: &[usize]) -> Result<Vec<(Pure, RingElem)>> {
    let i = g.index;
    let nv = e.len();
    let mut out = Vec::new();
    match g.kind {
        GenKind::K | GenKind::Kinv => {
            let x = k_eigenvalue(n, i, e.iter().copied());
            let x = if g.kind == GenKind::K { x } else { -x };
            out.push(((m.to_vec(), e.to_vec()), RingElem::q_pow(x)));
        }
        GenKind::E | GenKind::F => {
            let (from, to) = if g.kind == GenKind::E { e_colours(n, i) } else { f_colours(n, i) };
            for j in 0..nv {
                if e[j] != from {
                    continue;
                }
                let kx: i64 = if g.kind == GenKind::E {
                    e[j + 1..].iter().map(|&c| k_exp(n, i, c)).sum()
                } else {
                    -e[..j].iter().map(|&c| k_exp(n, i, c)).sum::<i64>()
                };
                let coeff = RingElem::q_pow(kx);
                let mut e2 = e.to_vec();
                e2[j] = to;
                if i != 0 {
                    out.push(((m.to_vec(), e2), coeff));
                    continue;
                }
                let raise = g.kind == GenKind::E;
                match aff {
                    Affine::Eval(a) => {
                        let s = if raise { a[j] } else { -a[j] };
                        out.push(((m.to_vec(), e2), &coeff * &RingElem::q_pow(s)));
                    }
                    Affine::Mult => {
                        let mut m2 = m.to_vec();
                        m2[j] += if raise { 1 } else { -1 };
                        out.push(((m2, e2), coeff));
                    }
                    Affine::Cherednik(mode) => {
                        for (m2, c) in y_on_monomial(mode, raise, j + 1, m)?.iter() {
                            out.push(((m2.clone(), e2.clone()), &coeff * c));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn word_to_pure(n: usize, w: &[i64]) -> Pure {
    w.iter().map(|&k| split_index(k, n)).unzip()
}

fn pure_to_word(n: usize, (m, e): &Pure) -> Word {
    m.iter().zip(e).map(|(&m, &e)| join_index(m, e, n)).collect()
}

/// A generator on the tensor `u_{w_1} (x) .. (x) u_{w_N}`, before
/// straightening.
fn act_word_tensor(n: usize, g: Generator, aff: Affine, w: &[i64]) -> Result<WedgeVector> {
    let (m, e) = word_to_pure(n, w);
    let mut out = WedgeVector::new();
    for (p, c) in act_pure(n, g, aff, &m, &e)? {
        out.add_term(pure_to_word(n, &p), c);
    }
    Ok(out)
}

fn check_generator(n: usize, g: Generator) -> Result<()> {
    if g.index >= n {
        return Err(Error::InvalidArgument(format!("generator index {} out of range for n={n}", g.index)));
    }
    Ok(())
}

/// `U_0` on `F_M^k` through `V_M^{s+nl,k}`.
fn act_u0_fock(n: usize, m: i64, p: PMode, extra: usize, g: Generator, lam: &[i64]) -> Result<WedgeVector> {
    let k = partition_degree(m, n, lam);
    let l = k as usize + extra;
    let len = residue(m, n) + n * l;
    let head = partition_to_word(m, lam, len)?;
    let image = straighten(n, &act_word_tensor(n, g, Affine::Cherednik(p), &head)?)?;
    let mut out = WedgeVector::new();
    for (w, c) in image.iter() {
        if w.len() != len || (len > 0 && w[len - 1] < vacuum_index(m, len)) {
            return Err(Error::Invariant(format!("U0 image {w:?} leaves V_M^{len}")));
        }
        out.add_term(word_to_partition(m, w), c.clone());
    }
    Ok(out)
}

/// `U_1` on `F_M`: the head of length `N` with the tail `|M - N>`.
fn act_u1_fock(n: usize, m: i64, g: Generator, v: &WedgeVector) -> Result<WedgeVector> {
    let deg = v.keys().map(|l| partition_degree(m, n, l)).max().unwrap_or(0).max(0);
    let start = residue(m, n) + n * (deg as usize + 2);
    let i = g.index;
    stabilized(m, n, v, start, |st, head| {
        let len = head.len();
        let tail_m = m - len as i64;
        let tail_hit = tail_m.rem_euclid(n as i64) as usize == i;
        let colours = head.iter().map(|&k| split_index(k, n).1);
        let mut out = WedgeVector::new();
        match g.kind {
            GenKind::K | GenKind::Kinv => {
                let x = k_eigenvalue(n, i, colours) + tail_hit as i64;
                let x = if g.kind == GenKind::K { x } else { -x };
                out.add_scaled(&st.semi_infinite(m, head)?, &RingElem::q_pow(x));
            }
            GenKind::E => {
                let t = act_word_tensor(n, g, Affine::Mult, head)?;
                let kt = RingElem::q_pow(tail_hit as i64);
                for (w, c) in t.iter() {
                    out.add_scaled(&st.semi_infinite(m, w)?, &(c * &kt));
                }
            }
            GenKind::F => {
                for (w, c) in act_word_tensor(n, g, Affine::Mult, head)?.iter() {
                    out.add_scaled(&st.semi_infinite(m, w)?, c);
                }
                if tail_hit {
                    let kinv = RingElem::q_pow(-k_eigenvalue(n, i, colours));
                    let mut w = head.clone();
                    w.push(tail_m + 1);
                    // the tail |M-N> loses u_{M-N}; continue it with |M-N-1>
                    let rest = st.semi_infinite(m, &w)?;
                    out.add_scaled(&rest, &kinv);
                }
            }
        }
        Ok(out)
    })
}

/// `act(g, ctx, v)`: exact image, straightened for wedge contexts.
pub fn act(ctx: &Action, g: Generator, v: &WedgeVector) -> Result<WedgeVector> {
    let n = ctx.n();
    check_generator(n, g)?;
    match ctx {
        Action::U0 { .. } | Action::U1 { .. } => {
            let aff = match ctx {
                Action::U0 { p, .. } => Affine::Cherednik(*p),
                _ => Affine::Mult,
            };
            let mut t = WedgeVector::new();
            for (w, c) in v.iter() {
                t.add_scaled(&act_word_tensor(n, g, aff, w)?, c);
            }
            straighten(n, &t)
        }
        Action::Eval { a, .. } => {
            let mut out = WedgeVector::new();
            for (w, c) in v.iter() {
                if w.len() != a.len() || w.iter().any(|&x| x < 1 || x > n as i64) {
                    return Err(Error::DimensionMismatch(format!("{w:?} is not a colour word of length {}", a.len())));
                }
                let e: Vec<usize> = w.iter().map(|&x| x as usize).collect();
                for ((_, e2), c2) in act_pure(n, g, Affine::Eval(a), &[], &e)? {
                    out.add_term(e2.iter().map(|&x| x as i64).collect(), c * &c2);
                }
            }
            Ok(out)
        }
        Action::U0Fock { m, p, extra, .. } => {
            let mut out = WedgeVector::new();
            for (lam, c) in v.iter() {
                out.add_scaled(&act_u0_fock(n, *m, *p, *extra, g, lam)?, c);
            }
            Ok(out)
        }
        Action::U1Fock { m, .. } => act_u1_fock(n, *m, g, v),
    }
}

/// Applies a word of generators, rightmost first.
pub fn act_word(ctx: &Action, gens: &[Generator], v: &WedgeVector) -> Result<WedgeVector> {
    let mut cur = v.clone();
    for &g in gens.iter().rev() {
        cur = act(ctx, g, &cur)?;
    }
    Ok(cur)
}

/// Memoized action on basis keys.
pub struct Actor<'a> {
    ctx: &'a Action,
    memo: HashMap<(Generator, Word), WedgeVector>,
}

impl<'a> Actor<'a> {
    pub fn new(ctx: &'a Action) -> Self {
        Actor { ctx, memo: HashMap::new() }
    }

    pub fn apply(&mut self, g: Generator, v: &WedgeVector) -> Result<WedgeVector> {
        let mut out = WedgeVector::new();
        for (w, c) in v.iter() {
            let key = (g, w.clone());
            if !self.memo.contains_key(&key) {
                let img = act(self.ctx, g, &WedgeVector::basis(w.clone()))?;
                self.memo.insert(key.clone(), img);
            }
            out.add_scaled(&self.memo[&key], c);
        }
        Ok(out)
    }

    /// `gens[0] gens[1] .. gens[r-1] v`.
    pub fn apply_word(&mut self, gens: &[Generator], v: &WedgeVector) -> Result<WedgeVector> {
        let mut cur = v.clone();
        for &g in gens.iter().rev() {
            cur = self.apply(g, &cur)?;
        }
        Ok(cur)
    }
}

/// Result of [`verify_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
    /// Common eigenvalue of `c' = K_0 .. K_{n-1}` on the basis, if any.
    pub central: Option<RingElem>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn combination(terms: &[(RingElem, WedgeVector)]) -> WedgeVector {
    let mut out = WedgeVector::new();
    for (c, v) in terms {
        out.add_scaled(v, c);
    }
    out
}

/// Checks every defining relation of `U'_q(sl_n-hat)` on each basis vector
/// and records the eigenvalue of `c'`.
pub fn verify_relations(ctx: &Action, basis: &[WedgeVector]) -> Result<RelationReport> {
    let n = ctx.n();
    let mut actor = Actor::new(ctx);
    let mut fams: BTreeMap<&'static str, (bool, usize)> = BTreeMap::new();
    let record = |fams: &mut BTreeMap<&'static str, (bool, usize)>, name: &'static str, ok: bool| {
        let e = fams.entry(name).or_insert((true, 0));
        e.0 &= ok;
        e.1 += 1;
    };
    let qq = &RingElem::q() - &RingElem::q_pow(-1);
    let mut central: Option<RingElem> = None;
    let mut central_ok = true;
    for v in basis {
        for i in 0..n {
            let kk = actor.apply_word(&[Generator::k(i), Generator::kinv(i)], v)?;
            let kk2 = actor.apply_word(&[Generator::kinv(i), Generator::k(i)], v)?;
            record(&mut fams, "K K^-1 = K^-1 K = 1", kk == *v && kk2 == *v);
            for j in 0..n {
                let a = actor.apply_word(&[Generator::k(i), Generator::k(j)], v)?;
                let b = actor.apply_word(&[Generator::k(j), Generator::k(i)], v)?;
                record(&mut fams, "K_i K_j = K_j K_i", a == b);
                let aij = cartan(n, i, j);
                let lhs = actor.apply_word(&[Generator::k(i), Generator::e(j), Generator::kinv(i)], v)?;
                let rhs = actor.apply(Generator::e(j), v)?.scale(&RingElem::q_pow(aij));
                record(&mut fams, "K_i E_j K_i^-1 = q^a_ij E_j", lhs == rhs);
                let lhs = actor.apply_word(&[Generator::k(i), Generator::f(j), Generator::kinv(i)], v)?;
                let rhs = actor.apply(Generator::f(j), v)?.scale(&RingElem::q_pow(-aij));
                record(&mut fams, "K_i F_j K_i^-1 = q^-a_ij F_j", lhs == rhs);
                let ef = actor.apply_word(&[Generator::e(i), Generator::f(j)], v)?;
                let fe = actor.apply_word(&[Generator::f(j), Generator::e(i)], v)?;
                let lhs = ef.sub(&fe);
                let rhs = if i == j {
                    let k = actor.apply(Generator::k(i), v)?;
                    let ki = actor.apply(Generator::kinv(i), v)?;
                    k.sub(&ki).scale(&qq.inv()?)
                } else {
                    WedgeVector::new()
                };
                record(&mut fams, "[E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1)", lhs == rhs);
                if i != j {
                    let deg = (1 - aij) as usize;
                    for (kind, name) in [(GenKind::E, "Serre (E)"), (GenKind::F, "Serre (F)")] {
                        let gi = Generator { kind, index: i };
                        let gj = Generator { kind, index: j };
                        let mut terms = Vec::new();
                        for r in 0..=deg {
                            let mut w = vec![gi; r];
                            w.push(gj);
                            w.extend(std::iter::repeat_n(gi, deg - r));
                            let c = RingElem::q_binomial(deg as i64, r as i64);
                            let c = if r % 2 == 1 { -c } else { c };
                            terms.push((c, actor.apply_word(&w, v)?));
                        }
                        record(&mut fams, name, combination(&terms).is_zero());
                    }
                }
            }
        }
        let ks: Vec<Generator> = (0..n).map(Generator::k).collect();
        let c = actor.apply_word(&ks, v)?;
        match v.iter().next() {
            Some((key, coeff)) if !v.is_zero() => {
                let ratio = c.coeff(key).checked_div(coeff)?;
                if c != v.scale(&ratio) {
                    central_ok = false;
                }
                match &central {
                    None => central = Some(ratio),
                    Some(x) if *x != ratio => central_ok = false,
                    _ => {}
                }
            }
            _ => {}
        }
    }
    record(&mut fams, "c' acts by a scalar", central_ok);
    let checks = fams
        .into_iter()
        .map(|(family, (passed, instances))| RelationCheck { family: family.to_string(), passed, instances })
        .collect();
    Ok(RelationReport { checks, central: if central_ok { central } else { None } })
}

/// Colour counts `(#eps=1, .., #eps=n)` of a word.
pub fn colour_counts(n: usize, w: &[i64]) -> Vec<i64> {
    let mut c = vec![0; n];
    for &k in w {
        c[split_index(k, n).1 - 1] += 1;
    }
    c
}

/// Weight of the Fock basis vector `lambda` relative to the vacuum `|M>`:
/// colour counts of its head minus those of the vacuum head.
pub fn fock_relative_weight(m: i64, n: usize, lambda: &[i64]) -> Vec<i64> {
    let len = lambda.len();
    let head = partition_to_word(m, lambda, len).expect("length fits");
    let vac: Vec<i64> = (1..=len).map(|i| vacuum_index(m, i)).collect();
    colour_counts(n, &head).iter().zip(colour_counts(n, &vac)).map(|(a, b)| a - b).collect()
}

/// `q`-graded weight character: `(z-exponents, degree) -> multiplicity`.
pub type CharPoly = BTreeMap<(Vec<i64>, i64), usize>;

/// Character of basis keys of a context: colour counts (relative to the
/// vacuum for Fock contexts) and degree. Keys that are not `K_i`
/// eigenvectors cannot occur, since all bases here are monomial.
pub fn weight_character(ctx: &Action, basis: &[Word]) -> Result<CharPoly> {
    let n = ctx.n();
    let mut out = CharPoly::new();
    for w in basis {
        let key = match ctx {
            Action::Eval { a, .. } => {
                if w.len() != a.len() {
                    return Err(Error::DimensionMismatch(format!("{w:?}")));
                }
                let mut c = vec![0; n];
                for &x in w {
                    c[(x - 1) as usize] += 1;
                }
                (c, 0)
            }
            Action::U0 { .. } | Action::U1 { .. } => (colour_counts(n, w), -w.iter().map(|&k| split_index(k, n).0).sum::<i64>()),
            Action::U0Fock { m, .. } | Action::U1Fock { m, .. } => {
                (fock_relative_weight(*m, n, w), partition_degree(*m, n, w))
            }
        };
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// `g |M>` for the level-1 action.
pub fn fock_vacuum_action(n: usize, m: i64, g: Generator) -> Result<WedgeVector> {
    act(&Action::U1Fock { n, m }, g, &WedgeVector::basis(Vec::new()))
}

//! Seeded self-checks of the wreath-product identities and constructions.
//!
//! Each suite runs a fixed family of exact checks; randomised suites draw
//! their instances from a ChaCha stream seeded with [`VerifyConfig::seed`],
//! so a report is a pure function of `(suite, seed, count)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::{ActionSpec, FiniteAction, HeadElement, Point};
use crate::constructions::{
    assemble_alpha_power, assemble_beta, alpha_power_form, beta, build_alpha, choose_mn,
    fold_to_cyclic, gamma_coordinate, gamma_coordinate_with, nottorsion_igset, torsion_igset,
    AlphaElement, BetaParams,
};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::invgen::invariably_generates;
use crate::named;
use crate::perm::Perm;
use crate::wreath::{BaseTuple, Wreath, WreathElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Conjugation,
    Coset,
    Alpha,
    Beta,
    Gamma,
    Igsets,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Conjugation,
        Suite::Coset,
        Suite::Alpha,
        Suite::Beta,
        Suite::Gamma,
        Suite::Igsets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Conjugation => "conjugation",
            Suite::Coset => "coset",
            Suite::Alpha => "alpha",
            Suite::Beta => "beta",
            Suite::Gamma => "gamma",
            Suite::Igsets => "igsets",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random instances per randomised check.
    pub count: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, count: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// The first failing instance, if any.
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    /// Records an operation that should not fail; an error counts as a failure.
    fn record_result(&mut self, result: Result<bool>, describe: impl FnOnce() -> String) {
        match result {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

pub fn run(suite: Suite, config: VerifyConfig) -> Result<SuiteReport> {
    let salt = Suite::ALL.iter().position(|&s| s == suite).unwrap() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9E37_79B9).wrapping_add(salt));
    let checks = match suite {
        Suite::Conjugation => conjugation()?,
        Suite::Coset => coset(&mut rng, config.count)?,
        Suite::Alpha => alpha(&mut rng, config.count)?,
        Suite::Beta => beta_suite(&mut rng, config.count)?,
        Suite::Gamma => gamma(&mut rng, config.count)?,
        Suite::Igsets => igsets(&mut rng, config.count)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Perm {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(degree, &cycles).expect("fixed permutation")
}

fn finite_head(w: &Wreath) -> &FiniteGroup {
    match w.action() {
        ActionSpec::Finite(a) => a.head(),
        ActionSpec::IntTranslation => unreachable!("finite ambient expected"),
    }
}

fn points(w: &Wreath) -> Vec<Point> {
    (0..w.action().point_count().unwrap_or(0) as Point).collect()
}

fn random_element<R: Rng>(rng: &mut R, g: &FiniteGroup) -> Perm {
    g.elements().choose(rng).unwrap().clone()
}

fn random_tuple<R: Rng>(rng: &mut R, g: &FiniteGroup, pts: &[Point]) -> BaseTuple {
    let mut out = BaseTuple::new();
    for &x in pts {
        if rng.gen_bool(0.5) {
            out.insert(x, random_element(rng, g));
        }
    }
    out
}

// ----------------------------------------------------------------------
// conjugation

struct Named {
    label: &'static str,
    wreath: Wreath,
}

fn conjugation_ambients() -> Result<Vec<Named>> {
    let c2 = named::cyclic(2)?;
    Ok(vec![
        Named {
            label: "C2 wr C2",
            wreath: Wreath::new(c2.clone(), ActionSpec::natural(c2.clone()))?,
        },
        Named {
            label: "S3 wr C2",
            wreath: Wreath::new(named::symmetric(3)?, ActionSpec::natural(c2))?,
        },
    ])
}

fn conjugation() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for Named { label, wreath: w } in conjugation_ambients()? {
        out.extend(conjugation_checks(label, &w)?);
    }
    Ok(out)
}

/// Exhaustive conjugation checks on a finite ambient.
pub fn conjugation_checks(label: &str, w: &Wreath) -> Result<Vec<CheckReport>> {
    let all = w.enumerate()?;
    let g = w.base_group();
    let h = finite_head(w);

    let mut base = CheckReport::new(format!("{label}: conjugates of g^(y) are base-embedded at y·k"));
    for x in g.elements().iter().filter(|x| !x.is_identity()) {
        for y in points(w) {
            let gy = w.base_at(x.clone(), y)?;
            for a in &all {
                let c = w.conj(&gy, a)?;
                let target = w.action().apply(y, a.head())?;
                let ok = match c.as_base_embedded() {
                    Some((z, f)) => z == target && g.are_conjugate(f, x)?,
                    None => false,
                };
                base.record(ok, || format!("g = {x}, y = {y}, a = {a}, conjugate = {c}"));
            }
        }
    }

    let mut head = CheckReport::new(format!("{label}: conjugates of head elements are w'·h' with h' ∼ h"));
    for k in h.elements() {
        let hk = w.head_at(HeadElement::Perm(k.clone()))?;
        for a in &all {
            let c = w.conj(&hk, a)?;
            let expected = w.action().head_mul(
                &w.action().head_mul(&w.action().head_inv(a.head()), hk.head())?,
                a.head(),
            )?;
            let ok = match c.head() {
                HeadElement::Perm(p) => *c.head() == expected && h.are_conjugate(p, k)?,
                HeadElement::Shift(_) => false,
            };
            head.record(ok, || format!("h = {k}, a = {a}, conjugate = {c}"));
        }
    }

    let mut mul = CheckReport::new(format!("{label}: products match the imprimitive permutation action"));
    let mut conj = CheckReport::new(format!("{label}: conjugates match the imprimitive permutation action"));
    let perms: Vec<Perm> = all.iter().map(|u| w.to_perm(u)).collect::<Result<_>>()?;
    for (u, pu) in all.iter().zip(&perms) {
        for (v, pv) in all.iter().zip(&perms) {
            let prod = w.to_perm(&w.mul(u, v)?)?;
            mul.record(prod == pu.mul(pv), || format!("u = {u}, v = {v}"));
            let c = w.to_perm(&w.conj(u, v)?)?;
            conj.record(c == pu.conjugate_by(pv), || format!("u = {u}, a = {v}"));
        }
    }
    Ok(vec![base, head, mul, conj])
}

// ----------------------------------------------------------------------
// coset

fn cyclic_ambient(g: FiniteGroup, d: usize, extra_fixed: bool) -> Result<Wreath> {
    let n = d + 1 + usize::from(extra_fixed);
    let rot: Vec<u32> = (0..d as u32 + 1).collect();
    let k = Perm::from_cycles(n, &[rot])?;
    Wreath::new(g, ActionSpec::Finite(FiniteAction::natural(crate::group::closure(&[k])?)))
}

/// The orbit `y, y·k, y·k², …` in order.
fn cyclic_orbit(w: &Wreath, y: Point, k: &HeadElement) -> Result<Vec<Point>> {
    let mut orbit = vec![y];
    let mut x = w.action().apply(y, k)?;
    while x != y {
        orbit.push(x);
        x = w.action().apply(x, k)?;
    }
    Ok(orbit)
}

/// One random instance of each coset identity in a finite ambient.
///
/// With `u = u₀^(y) u₁^(yk) ⋯ u_d^(yk^d)` on the orbit `C = y⟨k⟩` and `v`
/// off it, conjugating `u·v·k` by the tuple with `u_j ⋯ u_d` at `yk^j`
/// (`j ≥ 1`) gives `(u₀ ⋯ u_d)^(y)·v·k`; conjugating `u^(y)·v·k` by `g` on
/// every point of `C` gives `(g⁻¹ u g)^(y)·v·k`.
pub fn coset_instance<R: Rng>(
    w: &Wreath,
    rng: &mut R,
    reps: &mut CheckReport,
    works: &mut CheckReport,
) -> Result<()> {
    let g = w.base_group();
    let pts = points(w);
    let y = *pts.choose(rng).unwrap();
    let k = HeadElement::Perm(random_element(rng, finite_head(w)));
    let orbit = cyclic_orbit(w, y, &k)?;
    let off: Vec<Point> = pts.iter().copied().filter(|x| !orbit.contains(x)).collect();
    let u: Vec<Perm> = orbit.iter().map(|_| random_element(rng, g)).collect();
    let v = random_tuple(rng, g, &off);

    let mut full = v.clone();
    full.extend(orbit.iter().copied().zip(u.iter().cloned()));
    let start = w.element(full, k.clone())?;
    let mut conjugator = BaseTuple::new();
    for j in 1..orbit.len() {
        let tail = u[j..]
            .iter()
            .fold(g.identity().clone(), |acc, x| acc.mul(x));
        conjugator.insert(orbit[j], tail);
    }
    let u_star = u.iter().fold(g.identity().clone(), |acc, x| acc.mul(x));
    let mut collapsed = v.clone();
    collapsed.insert(y, u_star);
    let expected = w.element(collapsed, k.clone())?;
    let got = w.conj(&start, &w.element(conjugator.clone(), w.action().head_identity())?)?;
    reps.record(got == expected, || {
        format!("y = {y}, k = {k}, start = {start}, conjugator = {conjugator:?}, got {got}, expected {expected}")
    });

    let x = random_element(rng, g);
    let mut single = v.clone();
    single.insert(y, u[0].clone());
    let start = w.element(single, k.clone())?;
    let spread: BaseTuple = orbit.iter().map(|&p| (p, x.clone())).collect();
    let mut conjugated = v;
    conjugated.insert(y, u[0].conjugate_by(&x));
    let expected = w.element(conjugated, k.clone())?;
    let got = w.conj(&start, &w.element(spread, w.action().head_identity())?)?;
    works.record(got == expected, || {
        format!("y = {y}, k = {k}, g = {x}, start = {start}, got {got}, expected {expected}")
    });
    Ok(())
}

fn coset<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (gname, g) in [("C2", named::cyclic(2)?), ("S3", named::symmetric(3)?)] {
        for d in [1usize, 2] {
            for extra in [false, true] {
                let w = cyclic_ambient(g.clone(), d, extra)?;
                let label = format!(
                    "{gname} wr C{}{}",
                    d + 1,
                    if extra { " (plus a fixed point)" } else { " regular" }
                );
                let mut reps = CheckReport::new(format!("{label}: collapse onto one orbit point"));
                let mut works = CheckReport::new(format!("{label}: conjugate the collapsed coordinate"));
                for _ in 0..count {
                    coset_instance(&w, rng, &mut reps, &mut works)?;
                }
                out.push(reps);
                out.push(works);
            }
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------------
// alpha / beta / gamma

const WINDOW: Point = 4;

fn window() -> Vec<Point> {
    (-WINDOW..=WINDOW).collect()
}

/// A random `α_g` in `S3 ≀ ℤ` whose tuples live in `[-4, 4]`.
pub fn random_alpha<R: Rng>(w: &Wreath, rng: &mut R, g: &Perm) -> Result<(AlphaElement, BaseTuple, BaseTuple)> {
    let a = random_tuple(rng, w.base_group(), &window());
    let corr = random_tuple(rng, w.base_group(), &window());
    Ok((build_alpha(w, g, &a, &corr)?, a, corr))
}

fn s3_over_z() -> Result<Wreath> {
    Wreath::over_integers(named::symmetric(3)?)
}

/// Conjugating `g^(0)·t` by `a·k` and correcting by `w·k` lands on
/// `(a·w⁻¹)⁻¹·g^(0)·t·(a·w⁻¹)`.
fn alpha_form_holds<R: Rng>(w: &Wreath, rng: &mut R, alpha: &AlphaElement, a: &BaseTuple, corr: &BaseTuple) -> Result<bool> {
    let k = HeadElement::Shift(rng.gen_range(-3..=3));
    let ak = w.element(a.clone(), k.clone())?;
    let wk = w.element(corr.clone(), k)?;
    let core = w.mul(&w.base_at(alpha.g.clone(), 0)?, &w.t()?)?;
    let conjugate = w.conj(&core, &ak)?;
    let corrected = w.mul(&w.mul(&wk, &conjugate)?, &w.inv(&wk)?)?;
    Ok(corrected == alpha.element)
}

fn radius_is_minimal(alpha: &AlphaElement) -> bool {
    let c = alpha.support_radius as i64;
    let keys: Vec<Point> = alpha.conjugator.keys().copied().collect();
    keys.iter().all(|x| x.abs() < c) && (c == 0 || keys.iter().any(|x| x.abs() == c - 1))
}

fn alpha<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<CheckReport>> {
    let w = s3_over_z()?;
    let e = w.base_group().identity().clone();
    let mut form = CheckReport::new("S3 wr Z: corrected conjugate of g^(0)·t has the alpha form");
    let mut radius = CheckReport::new("S3 wr Z: recorded support radius is minimal");
    let mut power = CheckReport::new("S3 wr Z: alpha_e^-m alpha_f^m equals the assembled block form");
    for _ in 0..count {
        let f = random_element(rng, w.base_group());
        let (alpha_e, a, wa) = random_alpha(&w, rng, &e)?;
        let (alpha_f, b, wb) = random_alpha(&w, rng, &f)?;
        let m = rng.gen_range(0..=6u32);
        let describe = || {
            format!(
                "f = {f}, m = {m}, a = {a:?}, w_a = {wa:?}, b = {b:?}, w_b = {wb:?}"
            )
        };
        form.record_result(alpha_form_holds(&w, rng, &alpha_e, &a, &wa), describe);
        form.record_result(alpha_form_holds(&w, rng, &alpha_f, &b, &wb), describe);
        radius.record(radius_is_minimal(&alpha_e) && radius_is_minimal(&alpha_f), describe);
        let check = alpha_power_form(&w, &alpha_e, &alpha_f, m)
            .and_then(|direct| Ok(direct == assemble_alpha_power(&w, &alpha_e, &alpha_f, m)?));
        power.record_result(check, describe);
    }
    Ok(vec![form, radius, power])
}

fn beta_suite<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<CheckReport>> {
    let w = s3_over_z()?;
    let e = w.base_group().identity().clone();
    let mut form = CheckReport::new("S3 wr Z: beta(f, m, n) equals the assembled block form");
    let mut head = CheckReport::new("S3 wr Z: beta(f, m, n) lies in the base");
    for _ in 0..count {
        let f = random_element(rng, w.base_group());
        let (alpha_e, a, _) = random_alpha(&w, rng, &e)?;
        let (alpha_f, b, _) = random_alpha(&w, rng, &f)?;
        let m = rng.gen_range(0..=6u32);
        let n = rng.gen_range(0..=4u32);
        let describe = || format!("f = {f}, m = {m}, n = {n}, a = {a:?}, b = {b:?}");
        match beta(&w, &alpha_e, &alpha_f, m, n) {
            Ok(direct) => {
                head.record(direct.has_trivial_head(), describe);
                let check = assemble_beta(&w, &alpha_e, &alpha_f, m, n).map(|x| x == direct);
                form.record_result(check, describe);
            }
            Err(err) => {
                head.record(false, || format!("{}: {err}", describe()));
                form.record(false, || format!("{}: {err}", describe()));
            }
        }
    }
    Ok(vec![form, head])
}

fn gamma<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<CheckReport>> {
    let w = s3_over_z()?;
    let e = w.base_group().identity().clone();
    let gens = [perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])];
    let mut least = CheckReport::new("S3 wr Z: beta(g, m+n, n) has g at index c (least m, n)");
    let mut any = CheckReport::new("S3 wr Z: beta(g, m+n, n) has g at index c (larger admissible m, n)");
    for _ in 0..count {
        let (alpha_e, a, _) = random_alpha(&w, rng, &e)?;
        for g in &gens {
            let (alpha_g, b, _) = random_alpha(&w, rng, g)?;
            let describe = || format!("g = {g}, a = {a:?}, b = {b:?}");
            let check = gamma_coordinate(&w, &alpha_e, &alpha_g)
                .map(|(c, x)| c == alpha_e.support_radius as Point && &x == g);
            least.record_result(check, describe);
            let base = choose_mn(alpha_e.support_radius, alpha_g.support_radius);
            let params = BetaParams {
                m: base.m + rng.gen_range(0..3),
                n: base.n + rng.gen_range(0..3),
                ..base
            };
            let check = gamma_coordinate_with(&w, &alpha_e, &alpha_g, params).map(|(_, x)| &x == g);
            any.record_result(check, || format!("{}, params = {params:?}", describe()));
        }
    }
    Ok(vec![least, any])
}

// ----------------------------------------------------------------------
// igsets

struct IgAmbient {
    label: &'static str,
    wreath: Wreath,
    g_igset: Vec<Perm>,
    h_igset: Vec<Perm>,
}

fn ig_ambients() -> Result<Vec<IgAmbient>> {
    let c2 = named::cyclic(2)?;
    let c3 = named::cyclic(3)?;
    let s3 = named::symmetric(3)?;
    let t2 = perm(2, &[&[0, 1]]);
    let s3_set = vec![perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])];
    let swap_with_fixed = FiniteAction::from_generator_images(&c2, &[perm(3, &[&[0, 1]])])?;
    Ok(vec![
        IgAmbient {
            label: "C2 wr C2",
            wreath: Wreath::new(c2.clone(), ActionSpec::natural(c2.clone()))?,
            g_igset: vec![t2.clone()],
            h_igset: vec![t2.clone()],
        },
        IgAmbient {
            label: "C3 wr_X Sym(3)",
            wreath: Wreath::new(c3.clone(), ActionSpec::natural(s3.clone()))?,
            g_igset: vec![perm(3, &[&[0, 1, 2]])],
            h_igset: s3_set.clone(),
        },
        IgAmbient {
            label: "C2 wr_X C2 on three points",
            wreath: Wreath::new(c2.clone(), ActionSpec::Finite(swap_with_fixed))?,
            g_igset: vec![t2.clone()],
            h_igset: vec![perm(3, &[&[0, 1]])],
        },
        IgAmbient {
            label: "S3 wr C2",
            wreath: Wreath::new(s3, ActionSpec::natural(c2))?,
            g_igset: s3_set,
            h_igset: vec![t2],
        },
    ])
}

/// Exhaustive check that the torsion-type construction invariably
/// generates a finite ambient.
pub fn torsion_igset_check(w: &Wreath, g_igset: &[Perm], h_igset: &[Perm]) -> Result<(bool, String)> {
    let set = torsion_igset(w, g_igset, h_igset)?;
    let group = w.as_perm_group()?;
    let perms: Vec<Perm> = set.iter().map(|u| w.to_perm(u)).collect::<Result<_>>()?;
    let verdict = invariably_generates(&group, &perms)?;
    let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
    let mut description = format!("set {{{}}}", shown.join("; "));
    if let Some(wit) = &verdict.witness {
        let choice: Vec<String> = wit
            .choice
            .iter()
            .map(|(_, c)| w.from_perm(c).map(|u| u.to_string()).unwrap_or_default())
            .collect();
        description.push_str(&format!(
            ", failing conjugates {{{}}} generate {} elements",
            choice.join("; "),
            wit.generated_order
        ));
    }
    Ok((verdict.invariably_generates, description))
}

fn random_conjugate<R: Rng>(w: &Wreath, all: &[WreathElement], rng: &mut R, u: &WreathElement) -> Result<WreathElement> {
    w.conj(u, all.choose(rng).unwrap())
}

fn igsets<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let ambients = ig_ambients()?;
    for amb in &ambients {
        let mut check = CheckReport::new(format!(
            "{}: base and head invariable generating sets combine into one",
            amb.label
        ));
        match torsion_igset_check(&amb.wreath, &amb.g_igset, &amb.h_igset) {
            Ok((ok, desc)) => check.record(ok, || desc),
            Err(e) => check.record(false, || e.to_string()),
        }
        out.push(check);
    }

    for amb in &ambients {
        let w = &amb.wreath;
        let all = w.enumerate()?;
        let group = w.as_perm_group()?;
        let reps = w.action().orbit_reps();
        let heads: Vec<WreathElement> = amb
            .h_igset
            .iter()
            .map(|h| w.head_at(HeadElement::Perm(h.clone())))
            .collect::<Result<_>>()?;
        let mut gh = CheckReport::new(format!(
            "{}: G at orbit representatives plus conjugated head set generate",
            amb.label
        ));
        let mut strategy = CheckReport::new(format!(
            "{}: conjugated head and base sets plus Gamma-sets generate",
            amb.label
        ));
        for _ in 0..count {
            let conj_heads: Vec<WreathElement> = heads
                .iter()
                .map(|h| random_conjugate(w, &all, rng, h))
                .collect::<Result<_>>()?;

            let mut set = conj_heads.clone();
            for &y in &reps {
                for g in w.base_group().generators() {
                    set.push(w.base_at(g.clone(), y)?);
                }
            }
            let perms: Vec<Perm> = set.iter().map(|u| w.to_perm(u)).collect::<Result<_>>()?;
            gh.record_result(group.generates(&perms), || {
                let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
                shown.join("; ")
            });

            let mut set = conj_heads;
            for &y in &reps {
                for g in w.base_group().generators() {
                    set.push(random_conjugate(w, &all, rng, &w.base_at(g.clone(), y)?)?);
                }
                // a Gamma-set at a random point z of the orbit of y
                let orbit: Vec<Point> = points(w)
                    .into_iter()
                    .filter(|&x| {
                        finite_head(w)
                            .elements()
                            .iter()
                            .any(|k| w.action().apply(y, &HeadElement::Perm(k.clone())).ok() == Some(x))
                    })
                    .collect();
                let z = *orbit.choose(rng).unwrap();
                for g in w.base_group().elements() {
                    let mut tuple = random_tuple(rng, w.base_group(), &points(w));
                    tuple.insert(z, g.clone());
                    set.push(w.element(tuple, w.action().head_identity())?);
                }
            }
            let perms: Vec<Perm> = set.iter().map(|u| w.to_perm(u)).collect::<Result<_>>()?;
            strategy.record_result(group.generates(&perms), || {
                let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
                shown.join("; ")
            });
        }
        out.push(gh);
        out.push(strategy);
    }

    for (gname, g, n) in [
        ("C2", named::cyclic(2)?, 2usize),
        ("C2", named::cyclic(2)?, 3),
        ("C3", named::cyclic(3)?, 2),
    ] {
        let mut check = CheckReport::new(format!(
            "{gname} wr Z: non-torsion set maps onto invariable generators of {gname} wr C{n}"
        ));
        let source = Wreath::over_integers(g.clone())?;
        let target = cyclic_ambient(g.clone(), n - 1, false)?;
        let set = nottorsion_igset(&source, g.generators(), &[1])?;
        let images: Vec<WreathElement> = set
            .members()
            .iter()
            .map(|u| fold_to_cyclic(&source, &target, u))
            .collect::<Result<_>>()?;
        let group = target.as_perm_group()?;
        let perms: Vec<Perm> = images.iter().map(|u| target.to_perm(u)).collect::<Result<_>>()?;
        let verdict = invariably_generates(&group, &perms)?;
        check.record(verdict.invariably_generates, || format!("witness {:?}", verdict.witness));
        out.push(check);
    }
    Ok(out)
}

//! Explicit invariable generating sets for wreath products, and the
//! `α`/`β` elements of `G ≀ ℤ` that isolate a chosen coordinate.
//!
//! Everything on the `ℤ` side runs in `G ≀ ℤ` with `y = 0` and `t = +1`:
//!
//! * `α_g = a⁻¹·g^(0)·t·a` for a finitely supported base tuple `a`;
//! * `β(g, m, n) = α_eⁿ·(α_e⁻ᵐ·α_gᵐ)·α_e⁻ⁿ`.
//!
//! A tuple has radius `c` when its support lies in `{i : |i| < c}` and `c`
//! is least with that property. For `m > c + max(c, d)` and `d − n < c`
//! (with `c`, `d` the radii of `α_e`, `α_g`), the coordinate of
//! `β(g, m + n, n)` at `c` is exactly `g`.

use serde::Serialize;

use crate::action::{ActionSpec, HeadElement, Point};
use crate::error::{Error, Result};
use crate::invgen::invariably_generates;
use crate::perm::Perm;
use crate::wreath::{base_inv, base_mul, BaseTuple, Wreath, WreathElement};

/// `∪_y {g^(y) : g ∈ G_igset} ∪ H_igset`, one `y` per head orbit.
///
/// Both input sets are checked to be invariable generating sets first.
/// Identity elements are left out of the result.
pub fn torsion_igset(
    wreath: &Wreath,
    g_igset: &[Perm],
    h_igset: &[Perm],
) -> Result<Vec<WreathElement>> {
    let ActionSpec::Finite(action) = wreath.action() else {
        return Err(Error::Precondition(
            "the torsion-type construction needs a finite index set".into(),
        ));
    };
    check_igset(wreath.base_group(), g_igset, "base")?;
    check_igset(action.head(), h_igset, "head")?;

    let mut out: Vec<WreathElement> = Vec::new();
    let mut push = |u: WreathElement| {
        if u != wreath.identity() && !out.contains(&u) {
            out.push(u);
        }
    };
    for y in wreath.action().orbit_reps() {
        for g in g_igset {
            push(wreath.base_at(g.clone(), y)?);
        }
    }
    for h in h_igset {
        push(wreath.head_at(HeadElement::Perm(h.clone()))?);
    }
    Ok(out)
}

fn check_igset(group: &crate::group::FiniteGroup, set: &[Perm], what: &str) -> Result<()> {
    if set.is_empty() && group.order() == 1 {
        return Ok(());
    }
    if !invariably_generates(group, set)?.invariably_generates {
        return Err(Error::Precondition(format!(
            "{what} set does not invariably generate the {what} group"
        )));
    }
    Ok(())
}

/// Least `c ≥ 0` with the support of `tuple` inside `{i : |i| < c}`.
pub fn support_radius(tuple: &BaseTuple) -> u64 {
    tuple
        .iter()
        .filter(|(_, g)| !g.is_identity())
        .map(|(x, _)| x.unsigned_abs() + 1)
        .max()
        .unwrap_or(0)
}

/// `conjugator⁻¹·g^(0)·t·conjugator` in `G ≀ ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaElement {
    pub element: WreathElement,
    pub g: Perm,
    pub conjugator: BaseTuple,
    pub support_radius: u64,
}

fn require_integers(wreath: &Wreath) -> Result<()> {
    match wreath.action() {
        ActionSpec::IntTranslation => Ok(()),
        _ => Err(Error::AmbientMismatch("expected G ≀ ℤ".into())),
    }
}

fn pure_base(wreath: &Wreath, tuple: BaseTuple) -> Result<WreathElement> {
    wreath.element(tuple, HeadElement::Shift(0))
}

/// Builds `(a·w⁻¹)⁻¹·g^(0)·t·(a·w⁻¹)` by literal wreath multiplication,
/// where `a = conj_base` and `w = w_correction`.
pub fn build_alpha(
    wreath: &Wreath,
    g: &Perm,
    conj_base: &BaseTuple,
    w_correction: &BaseTuple,
) -> Result<AlphaElement> {
    require_integers(wreath)?;
    let conjugator = base_mul(conj_base, &base_inv(w_correction));
    let a = pure_base(wreath, conjugator.clone())?;
    let core = wreath.mul(&wreath.base_at(g.clone(), 0)?, &wreath.t()?)?;
    let element = wreath.conj(&core, &a)?;
    Ok(AlphaElement {
        element,
        g: g.clone(),
        support_radius: support_radius(&conjugator),
        conjugator,
    })
}

/// `α_e⁻ᵐ·α_fᵐ` by repeated multiplication.
pub fn alpha_power_form(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_f: &AlphaElement,
    m: u32,
) -> Result<WreathElement> {
    require_integers(wreath)?;
    let left = wreath.pow(&alpha_e.element, -(m as i64))?;
    let right = wreath.pow(&alpha_f.element, m as i64)?;
    wreath.mul(&left, &right)
}

fn shifted(tuple: &BaseTuple, by: i64) -> BaseTuple {
    tuple.iter().map(|(x, g)| (x + by, g.clone())).collect()
}

fn run(g: &Perm, from: Point, to: Point) -> BaseTuple {
    (from..=to).map(|x| (x, g.clone())).collect()
}

fn product(blocks: &[BaseTuple]) -> BaseTuple {
    blocks
        .iter()
        .fold(BaseTuple::new(), |acc, b| base_mul(&acc, b))
}

fn require_plain_e(alpha_e: &AlphaElement) -> Result<()> {
    if alpha_e.g.is_identity() {
        Ok(())
    } else {
        Err(Error::Precondition("α_e must carry the identity".into()))
    }
}

/// The predicted normal form of `α_e⁻ᵐ·α_fᵐ`, assembled block by block
/// without any wreath multiplication:
///
/// ```text
/// A^[i] · a^[i+m] · B^[i+m] · f^[1] ⋯ f^[m] · b^[i]
/// ```
///
/// where `a`, `b` are the conjugators of `α_e`, `α_f` and `A = a⁻¹`, `B = b⁻¹`.
pub fn assemble_alpha_power(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_f: &AlphaElement,
    m: u32,
) -> Result<WreathElement> {
    require_integers(wreath)?;
    require_plain_e(alpha_e)?;
    let m = m as i64;
    let (a, b) = (&alpha_e.conjugator, &alpha_f.conjugator);
    let tuple = product(&[
        base_inv(a),
        shifted(a, m),
        shifted(&base_inv(b), m),
        run(&alpha_f.g, 1, m),
        b.clone(),
    ]);
    pure_base(wreath, tuple)
}

/// `β(g, m, n) = α_eⁿ·(α_e⁻ᵐ·α_gᵐ)·α_e⁻ⁿ` by repeated multiplication.
pub fn beta(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_g: &AlphaElement,
    m: u32,
    n: u32,
) -> Result<WreathElement> {
    let inner = alpha_power_form(wreath, alpha_e, alpha_g, m)?;
    let outer = wreath.pow(&alpha_e.element, n as i64)?;
    let outer_inv = wreath.pow(&alpha_e.element, -(n as i64))?;
    wreath.mul(&wreath.mul(&outer, &inner)?, &outer_inv)
}

/// The predicted normal form of `β(f, m, n)`:
///
/// ```text
/// A^[i] · a^[i+m-n] · B^[i+m-n] · f^[1-n] ⋯ f^[m-n] · b^[i-n] · A^[i-n] · a^[i]
/// ```
pub fn assemble_beta(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_f: &AlphaElement,
    m: u32,
    n: u32,
) -> Result<WreathElement> {
    require_integers(wreath)?;
    require_plain_e(alpha_e)?;
    let (m, n) = (m as i64, n as i64);
    let (a, b) = (&alpha_e.conjugator, &alpha_f.conjugator);
    let tuple = product(&[
        base_inv(a),
        shifted(a, m - n),
        shifted(&base_inv(b), m - n),
        run(&alpha_f.g, 1 - n, m - n),
        shifted(b, -n),
        shifted(&base_inv(a), -n),
        a.clone(),
    ]);
    pure_base(wreath, tuple)
}

/// Exponents for isolating a coordinate, with the radii they were chosen for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BetaParams {
    pub m: u64,
    pub n: u64,
    pub c: u64,
    pub d: u64,
}

impl BetaParams {
    /// `m > c + max(c, d)`, `d − n < c`, and `m, n ≥ 1`.
    pub fn is_admissible(&self) -> bool {
        self.m >= 1
            && self.n >= 1
            && self.m > self.c + self.c.max(self.d)
            && (self.d as i128) - (self.n as i128) < self.c as i128
    }
}

/// The least admissible `(m, n)` for radii `c` (of `α_e`) and `d` (of `α_g`).
pub fn choose_mn(c: u64, d: u64) -> BetaParams {
    BetaParams {
        m: c + c.max(d) + 1,
        n: (d + 1).saturating_sub(c).max(1),
        c,
        d,
    }
}

/// Computes `β(g, m + n, n)` for the least admissible `(m, n)` and returns
/// the index `c` with the coordinate found there.
///
/// Anything other than `g` at index `c` is reported as a contract violation.
pub fn gamma_coordinate(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_g: &AlphaElement,
) -> Result<(Point, Perm)> {
    let params = choose_mn(alpha_e.support_radius, alpha_g.support_radius);
    gamma_coordinate_with(wreath, alpha_e, alpha_g, params)
}

/// As [`gamma_coordinate`], for any admissible parameters.
pub fn gamma_coordinate_with(
    wreath: &Wreath,
    alpha_e: &AlphaElement,
    alpha_g: &AlphaElement,
    params: BetaParams,
) -> Result<(Point, Perm)> {
    require_plain_e(alpha_e)?;
    if params.c != alpha_e.support_radius || params.d != alpha_g.support_radius {
        return Err(Error::Precondition(
            "parameters were chosen for different radii".into(),
        ));
    }
    if !params.is_admissible() {
        return Err(Error::Precondition(format!("{params:?} is not admissible")));
    }
    let m = u32::try_from(params.m + params.n)
        .map_err(|_| Error::Precondition("exponent too large".into()))?;
    let n = u32::try_from(params.n).map_err(|_| Error::Precondition("exponent too large".into()))?;
    let element = beta(wreath, alpha_e, alpha_g, m, n)?;
    if !element.has_trivial_head() {
        return Err(Error::ContractViolation(format!(
            "β has non-trivial head: {element}"
        )));
    }
    let c = params.c as Point;
    let coord = wreath.coordinate(&element, c)?;
    if coord != alpha_g.g {
        return Err(Error::ContractViolation(format!(
            "coordinate {c} of {element} is {coord}, expected {}",
            alpha_g.g
        )));
    }
    Ok((c, coord))
}

/// The generating set `S_H ∪ 𝒢 ∪ 𝒢t ∪ {t}` of `G ≀ ℤ`, kept part by part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotTorsionIgSet {
    pub head_part: Vec<WreathElement>,
    pub base_part: Vec<WreathElement>,
    pub twisted_part: Vec<WreathElement>,
    pub t: WreathElement,
}

impl NotTorsionIgSet {
    /// The union with repeated elements removed, in part order.
    pub fn members(&self) -> Vec<WreathElement> {
        let mut out: Vec<WreathElement> = Vec::new();
        for u in self.all_parts() {
            if !out.contains(u) {
                out.push(u.clone());
            }
        }
        out
    }

    /// Total size of the parts, counting repeats.
    pub fn len_with_multiplicity(&self) -> usize {
        self.all_parts().count()
    }

    fn all_parts(&self) -> impl Iterator<Item = &WreathElement> {
        self.head_part
            .iter()
            .chain(&self.base_part)
            .chain(&self.twisted_part)
            .chain(std::iter::once(&self.t))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds `S_H ∪ {g^(0)} ∪ {g^(0)·t} ∪ {t}` in `G ≀ ℤ`.
///
/// `generators` must generate `G` and the shifts in `head_set` must
/// generate `ℤ` (for an abelian head this is invariable generation).
pub fn nottorsion_igset(
    wreath: &Wreath,
    generators: &[Perm],
    head_set: &[i64],
) -> Result<NotTorsionIgSet> {
    require_integers(wreath)?;
    let g = wreath.base_group();
    let generates = if generators.is_empty() {
        g.order() == 1
    } else {
        g.generates(generators)?
    };
    if !generates {
        return Err(Error::Precondition(
            "the base set does not generate the base group".into(),
        ));
    }
    if head_set.iter().fold(0, |acc, s| gcd(acc, s.unsigned_abs())) != 1 {
        return Err(Error::Precondition(
            "the head shifts do not generate ℤ".into(),
        ));
    }
    let t = wreath.t()?;
    let base_part = generators
        .iter()
        .map(|x| wreath.base_at(x.clone(), 0))
        .collect::<Result<Vec<_>>>()?;
    let twisted_part = base_part
        .iter()
        .map(|u| wreath.mul(u, &t))
        .collect::<Result<Vec<_>>>()?;
    let head_part = head_set
        .iter()
        .map(|&s| wreath.head_at(HeadElement::Shift(s)))
        .collect::<Result<Vec<_>>>()?;
    Ok(NotTorsionIgSet {
        head_part,
        base_part,
        twisted_part,
        t,
    })
}

/// The image of an element of `G ≀ ℤ` in `G ≀ C_N` (regular) under reduction
/// of indices mod `N`. Coordinates landing on the same residue are
/// multiplied, which is a homomorphism only for abelian `G`.
pub fn fold_to_cyclic(
    source: &Wreath,
    target: &Wreath,
    u: &WreathElement,
) -> Result<WreathElement> {
    require_integers(source)?;
    if !source.base_group().is_abelian() {
        return Err(Error::Precondition(
            "folding indices is a homomorphism only for abelian G".into(),
        ));
    }
    let ActionSpec::Finite(a) = target.action() else {
        return Err(Error::AmbientMismatch("target must be finite".into()));
    };
    let n = a.points() as i64;
    let HeadElement::Shift(s) = u.head() else {
        return Err(Error::AmbientMismatch("expected a shift head".into()));
    };
    let rotation: Vec<u32> = (0..n).map(|x| (x + s).rem_euclid(n) as u32).collect();
    let head = HeadElement::Perm(Perm::from_images(rotation)?);
    let mut base = BaseTuple::new();
    for (x, g) in u.base() {
        base = base_mul(&base, &BaseTuple::from([(x.rem_euclid(n), g.clone())]));
    }
    target.element(base, head)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn p(degree: usize, cycles: &[&[u32]]) -> Perm {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn s3z() -> Wreath {
        Wreath::over_integers(named::symmetric(3).unwrap()).unwrap()
    }

    #[test]
    fn choose_mn_examples() {
        let cases = [((0, 0), (1, 1)), ((2, 3), (6, 2)), ((3, 1), (7, 1))];
        for ((c, d), (m, n)) in cases {
            let got = choose_mn(c, d);
            assert_eq!((got.m, got.n), (m, n), "c={c} d={d}");
            assert!(got.is_admissible());
        }
    }

    #[test]
    fn choose_mn_is_minimal() {
        for c in 0..6u64 {
            for d in 0..6u64 {
                let best = choose_mn(c, d);
                for m in 1..=best.m {
                    for n in 1..=best.n {
                        let cand = BetaParams { m, n, c, d };
                        if cand.is_admissible() {
                            assert_eq!((m, n), (best.m, best.n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn radius() {
        let g = p(3, &[&[0, 1]]);
        let t = BaseTuple::from([(-2, g.clone()), (3, g)]);
        assert_eq!(support_radius(&t), 4);
        assert_eq!(support_radius(&BaseTuple::new()), 0);
        assert_eq!(support_radius(&BaseTuple::from([(0, p(3, &[&[0, 1]]))])), 1);
    }

    #[test]
    fn trivial_alpha() {
        let w = s3z();
        let g = p(3, &[&[0, 1, 2]]);
        let alpha = build_alpha(&w, &g, &BaseTuple::new(), &BaseTuple::new()).unwrap();
        assert_eq!(alpha.support_radius, 0);
        assert_eq!(
            alpha.element,
            w.mul(&w.base_at(g, 0).unwrap(), &w.t().unwrap()).unwrap()
        );
    }

    #[test]
    fn alpha_with_one_point_conjugator() {
        let w = s3z();
        let g = p(3, &[&[0, 1]]);
        let a = p(3, &[&[0, 1, 2]]);
        let alpha = build_alpha(&w, &g, &BaseTuple::from([(0, a.clone())]), &BaseTuple::new())
            .unwrap();
        // a⁻¹ at 0, then g at 0, then t moves a to index -1
        let expected = w
            .element(
                BaseTuple::from([(0, a.inverse().mul(&g)), (-1, a.clone())]),
                HeadElement::Shift(1),
            )
            .unwrap();
        assert_eq!(alpha.element, expected);
        assert_eq!(alpha.support_radius, 1);
    }

    #[test]
    fn trivial_power_form() {
        let w = s3z();
        let f = p(3, &[&[0, 1]]);
        let e = w.base_group().identity().clone();
        let alpha_e = build_alpha(&w, &e, &BaseTuple::new(), &BaseTuple::new()).unwrap();
        let alpha_f = build_alpha(&w, &f, &BaseTuple::new(), &BaseTuple::new()).unwrap();
        let got = alpha_power_form(&w, &alpha_e, &alpha_f, 3).unwrap();
        let expected = w
            .element(
                BaseTuple::from([(1, f.clone()), (2, f.clone()), (3, f.clone())]),
                HeadElement::Shift(0),
            )
            .unwrap();
        assert_eq!(got, expected);
        assert_eq!(alpha_power_form(&w, &alpha_e, &alpha_f, 0).unwrap(), w.identity());
        assert_eq!(assemble_alpha_power(&w, &alpha_e, &alpha_f, 3).unwrap(), expected);

        let b = beta(&w, &alpha_e, &alpha_f, 2, 1).unwrap();
        let expected = w
            .element(BaseTuple::from([(0, f.clone()), (1, f.clone())]), HeadElement::Shift(0))
            .unwrap();
        assert_eq!(b, expected);
        assert_eq!(
            beta(&w, &alpha_e, &alpha_f, 4, 0).unwrap(),
            alpha_power_form(&w, &alpha_e, &alpha_f, 4).unwrap()
        );
    }

    #[test]
    fn gamma_on_trivial_conjugators() {
        let w = s3z();
        let e = w.base_group().identity().clone();
        let alpha_e = build_alpha(&w, &e, &BaseTuple::new(), &BaseTuple::new()).unwrap();
        for g in w.base_group().elements() {
            let alpha_g = build_alpha(&w, g, &BaseTuple::new(), &BaseTuple::new()).unwrap();
            let (c, coord) = gamma_coordinate(&w, &alpha_e, &alpha_g).unwrap();
            assert_eq!(c, 0);
            assert_eq!(&coord, g);
        }
    }

    #[test]
    fn gamma_rejects_bad_params() {
        let w = s3z();
        let e = w.base_group().identity().clone();
        let alpha_e = build_alpha(&w, &e, &BaseTuple::new(), &BaseTuple::new()).unwrap();
        let alpha_g =
            build_alpha(&w, &p(3, &[&[0, 1]]), &BaseTuple::new(), &BaseTuple::new()).unwrap();
        let bad = BetaParams { m: 0, n: 1, c: 0, d: 0 };
        assert!(gamma_coordinate_with(&w, &alpha_e, &alpha_g, bad).is_err());
    }

    #[test]
    fn torsion_igset_examples() {
        let c2 = named::cyclic(2).unwrap();
        let w = Wreath::new(c2.clone(), ActionSpec::natural(c2.clone())).unwrap();
        let g = p(2, &[&[0, 1]]);
        let set = torsion_igset(&w, std::slice::from_ref(&g), std::slice::from_ref(&g)).unwrap();
        assert_eq!(
            set,
            vec![
                w.base_at(g.clone(), 0).unwrap(),
                w.head_at(HeadElement::Perm(g.clone())).unwrap()
            ]
        );

        let trivial = crate::action::FiniteAction::trivial(1).unwrap();
        let s3 = named::symmetric(3).unwrap();
        let gens = vec![p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])];
        let w = Wreath::new(s3, ActionSpec::Finite(trivial)).unwrap();
        let set = torsion_igset(&w, &gens, &[]).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.iter().all(|u| u.as_base_embedded().map(|(x, _)| x) == Some(0)));

        let c3 = named::cyclic(3).unwrap();
        let s3 = named::symmetric(3).unwrap();
        let w = Wreath::new(c3, ActionSpec::natural(s3)).unwrap();
        let set = torsion_igset(&w, &[p(3, &[&[0, 1, 2]])], &gens).unwrap();
        assert_eq!(set.len(), 3);

        // {(0 1 2)} alone does not invariably generate Sym(3)
        assert!(torsion_igset(&w, &[p(3, &[&[0, 1, 2]])], &[p(3, &[&[0, 1, 2]])]).is_err());
    }

    #[test]
    fn nottorsion_igset_examples() {
        let c2 = Wreath::over_integers(named::cyclic(2).unwrap()).unwrap();
        let g = p(2, &[&[0, 1]]);
        let set = nottorsion_igset(&c2, std::slice::from_ref(&g), &[1]).unwrap();
        let t = c2.t().unwrap();
        let g0 = c2.base_at(g, 0).unwrap();
        assert_eq!(set.head_part, vec![t.clone()]);
        assert_eq!(set.base_part, vec![g0.clone()]);
        assert_eq!(set.twisted_part, vec![c2.mul(&g0, &t).unwrap()]);
        assert_eq!(set.len_with_multiplicity(), 4);
        assert_eq!(set.members().len(), 3);

        let trivial = Wreath::over_integers(named::cyclic(1).unwrap()).unwrap();
        let set = nottorsion_igset(&trivial, &[], &[1]).unwrap();
        assert_eq!(set.members(), vec![trivial.t().unwrap()]);

        let s3 = s3z();
        let gens = [p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])];
        let set = nottorsion_igset(&s3, &gens, &[1]).unwrap();
        assert_eq!(set.len_with_multiplicity(), 6);
        assert_eq!(set.members().len(), 5);

        assert!(nottorsion_igset(&s3, &gens[..1], &[1]).is_err());
        assert!(nottorsion_igset(&s3, &gens, &[2, 4]).is_err());
    }

    #[test]
    fn folding_is_multiplicative_for_abelian_base() {
        let c3 = named::cyclic(3).unwrap();
        let z = Wreath::over_integers(c3.clone()).unwrap();
        let target = Wreath::new(c3.clone(), ActionSpec::natural(named::cyclic(2).unwrap())).unwrap();
        let g = p(3, &[&[0, 1, 2]]);
        let u = z.mul(&z.base_at(g.clone(), 3).unwrap(), &z.t().unwrap()).unwrap();
        let v = z.mul(&z.base_at(g.clone(), -4).unwrap(), &z.pow(&z.t().unwrap(), -3).unwrap()).unwrap();
        let lhs = fold_to_cyclic(&z, &target, &z.mul(&u, &v).unwrap()).unwrap();
        let rhs = target
            .mul(
                &fold_to_cyclic(&z, &target, &u).unwrap(),
                &fold_to_cyclic(&z, &target, &v).unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(fold_to_cyclic(&s3z(), &target, &s3z().identity()).is_err());
    }
}

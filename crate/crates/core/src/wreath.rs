//! Restricted wreath products `G ≀_X H` with finite `G`.
//!
//! An element is a finitely supported base tuple `w: X → G` together with a
//! head element `k`, read as the product `w·k`. Multiplication is fixed by
//! the relation `k⁻¹·g^(y)·k = g^(y·k)`, which together with right-action
//! composition gives
//!
//! ```text
//! (w k)(w' k') = w·(x ↦ w'(x·k)) · k k'
//! ```
//!
//! Base tuples are stored without identity entries, so structural equality
//! is group equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::action::{ActionSpec, HeadElement, Point};
use crate::error::{Error, Result};
use crate::group::{closure_with_cap, FiniteGroup, DEFAULT_CLOSURE_CAP};
use crate::perm::Perm;

/// Default ceiling for [`Wreath::enumerate`].
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

/// A finitely supported map `X → G`; absent keys are the identity.
pub type BaseTuple = BTreeMap<Point, Perm>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WreathElement {
    base: BaseTuple,
    head: HeadElement,
}

fn canonical(mut base: BaseTuple) -> BaseTuple {
    base.retain(|_, g| !g.is_identity());
    base
}

impl WreathElement {
    /// `w·k`, with identity entries of `w` dropped.
    pub fn new(base: BaseTuple, head: HeadElement) -> Self {
        WreathElement {
            base: canonical(base),
            head,
        }
    }

    pub fn base(&self) -> &BaseTuple {
        &self.base
    }

    pub fn head(&self) -> &HeadElement {
        &self.head
    }

    pub fn support(&self) -> Vec<Point> {
        self.base.keys().copied().collect()
    }

    pub fn has_trivial_head(&self) -> bool {
        match &self.head {
            HeadElement::Perm(p) => p.is_identity(),
            HeadElement::Shift(s) => *s == 0,
        }
    }

    /// `Some((x, g))` when this is `g^(x)` for a single point `x`.
    pub fn as_base_embedded(&self) -> Option<(Point, &Perm)> {
        if self.has_trivial_head() && self.base.len() == 1 {
            self.base.iter().next().map(|(x, g)| (*x, g))
        } else {
            None
        }
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_empty() {
            return write!(f, "{}", self.head);
        }
        write!(f, "[")?;
        for (i, (x, g)) in self.base.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}: {g}")?;
        }
        write!(f, "]")?;
        if !self.head.is_identity() {
            write!(f, " {}", self.head)?;
        }
        Ok(())
    }
}

/// Coordinatewise product of base tuples.
pub fn base_mul(a: &BaseTuple, b: &BaseTuple) -> BaseTuple {
    let mut out = a.clone();
    for (x, g) in b {
        match out.get_mut(x) {
            Some(h) => *h = h.mul(g),
            None => {
                out.insert(*x, g.clone());
            }
        }
    }
    canonical(out)
}

/// Coordinatewise inverse of a base tuple.
pub fn base_inv(a: &BaseTuple) -> BaseTuple {
    a.iter().map(|(x, g)| (*x, g.inverse())).collect()
}

/// The ambient group `G ≀_X H`.
#[derive(Clone, Debug)]
pub struct Wreath {
    base_group: FiniteGroup,
    action: ActionSpec,
}

impl Wreath {
    /// Builds the ambient and checks `k⁻¹·g^(y)·k = g^(y·k)` on generators.
    pub fn new(base_group: FiniteGroup, action: ActionSpec) -> Result<Self> {
        let w = Wreath { base_group, action };
        w.self_test()?;
        Ok(w)
    }

    /// `G ≀ ℤ` with `ℤ` translating `ℤ`.
    pub fn over_integers(base_group: FiniteGroup) -> Result<Self> {
        Wreath::new(base_group, ActionSpec::IntTranslation)
    }

    fn self_test(&self) -> Result<()> {
        let (points, heads): (Vec<Point>, Vec<HeadElement>) = match &self.action {
            ActionSpec::Finite(a) => (
                (0..a.points() as Point).collect(),
                a.head()
                    .generators()
                    .iter()
                    .cloned()
                    .map(HeadElement::Perm)
                    .collect(),
            ),
            ActionSpec::IntTranslation => (vec![-1, 0, 1], vec![HeadElement::Shift(1)]),
        };
        for g in self.base_group.generators() {
            for &y in &points {
                for k in &heads {
                    let lhs = self.conj(&self.base_at(g.clone(), y)?, &self.head_at(k.clone())?)?;
                    let rhs = self.base_at(g.clone(), self.action.apply(y, k)?)?;
                    if lhs != rhs {
                        return Err(Error::ContractViolation(format!(
                            "k⁻¹ g^(y) k ≠ g^(yk) for g = {g}, y = {y}, k = {k}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base_group(&self) -> &FiniteGroup {
        &self.base_group
    }

    pub fn action(&self) -> &ActionSpec {
        &self.action
    }

    /// `|G|^|X|·|H|` for finite ambients, computed without overflow.
    pub fn order(&self) -> Option<u128> {
        let ActionSpec::Finite(a) = &self.action else {
            return None;
        };
        let mut n: u128 = a.head().order() as u128;
        for _ in 0..a.points() {
            n = n.checked_mul(self.base_group.order() as u128)?;
        }
        Some(n)
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement::new(BaseTuple::new(), self.action.head_identity())
    }

    /// Validates and canonicalises `w·k`.
    pub fn element(&self, base: BaseTuple, head: HeadElement) -> Result<WreathElement> {
        let u = WreathElement::new(base, head);
        self.validate(&u)?;
        Ok(u)
    }

    /// `g^(x)`.
    pub fn base_at(&self, g: Perm, x: Point) -> Result<WreathElement> {
        self.element(BaseTuple::from([(x, g)]), self.action.head_identity())
    }

    pub fn head_at(&self, k: HeadElement) -> Result<WreathElement> {
        self.element(BaseTuple::new(), k)
    }

    /// The translation `t` of `G ≀ ℤ`.
    pub fn t(&self) -> Result<WreathElement> {
        self.head_at(HeadElement::Shift(1))
    }

    pub fn validate(&self, u: &WreathElement) -> Result<()> {
        self.action.check_head(&u.head)?;
        for (&x, g) in &u.base {
            self.action.check_point(x)?;
            if !self.base_group.contains(g) {
                return Err(Error::NotAMember(g.to_string()));
            }
        }
        Ok(())
    }

    fn check_shape(&self, u: &WreathElement) -> Result<()> {
        match (&self.action, &u.head) {
            (ActionSpec::Finite(a), HeadElement::Perm(p)) if p.degree() == a.points() => {}
            (ActionSpec::IntTranslation, HeadElement::Shift(_)) => {}
            _ => {
                return Err(Error::AmbientMismatch(format!(
                    "head {} does not fit this ambient",
                    u.head
                )))
            }
        }
        let d = self.base_group.degree();
        for (&x, g) in &u.base {
            self.action.check_point(x)?;
            if g.degree() != d {
                return Err(Error::AmbientMismatch(format!(
                    "coordinate {g} has degree {}, base group has degree {d}",
                    g.degree()
                )));
            }
        }
        Ok(())
    }

    pub fn mul(&self, u: &WreathElement, v: &WreathElement) -> Result<WreathElement> {
        self.check_shape(u)?;
        self.check_shape(v)?;
        let k_inv = self.action.head_inv(&u.head);
        let mut base = u.base.clone();
        for (&y, g) in &v.base {
            // the coordinate of v at y lands at y·k⁻¹
            let x = self.action.apply(y, &k_inv)?;
            match base.get_mut(&x) {
                Some(h) => *h = h.mul(g),
                None => {
                    base.insert(x, g.clone());
                }
            }
        }
        Ok(WreathElement {
            base: canonical(base),
            head: self.action.head_mul(&u.head, &v.head)?,
        })
    }

    pub fn inv(&self, u: &WreathElement) -> Result<WreathElement> {
        self.check_shape(u)?;
        let base = u
            .base
            .iter()
            .map(|(&y, g)| Ok((self.action.apply(y, &u.head)?, g.inverse())))
            .collect::<Result<BaseTuple>>()?;
        Ok(WreathElement {
            base,
            head: self.action.head_inv(&u.head),
        })
    }

    /// `a⁻¹·g·a`.
    pub fn conj(&self, g: &WreathElement, a: &WreathElement) -> Result<WreathElement> {
        self.mul(&self.mul(&self.inv(a)?, g)?, a)
    }

    pub fn pow(&self, u: &WreathElement, e: i64) -> Result<WreathElement> {
        let step = if e < 0 { self.inv(u)? } else { u.clone() };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &step)?;
        }
        Ok(acc)
    }

    /// The base entry at `x`; the identity of `G` off the support.
    pub fn coordinate(&self, u: &WreathElement, x: Point) -> Result<Perm> {
        self.action.check_point(x)?;
        Ok(u
            .base
            .get(&x)
            .cloned()
            .unwrap_or_else(|| self.base_group.identity().clone()))
    }

    pub fn enumerate(&self) -> Result<Vec<WreathElement>> {
        self.enumerate_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Every element of a finite ambient: head elements in the head group's
    /// order, and for each head all base tuples with point `0` varying fastest.
    pub fn enumerate_with_cap(&self, cap: usize) -> Result<Vec<WreathElement>> {
        let ActionSpec::Finite(a) = &self.action else {
            return Err(Error::Precondition("enumeration needs a finite index set".into()));
        };
        let total = self.order().filter(|&n| n <= cap as u128).ok_or(Error::TooLarge {
            what: "wreath product",
            cap,
        })?;
        let m = a.points();
        let g = self.base_group.elements();
        let mut out = Vec::with_capacity(total as usize);
        for k in a.head().elements() {
            let mut digits = vec![0usize; m];
            loop {
                let base: BaseTuple = digits
                    .iter()
                    .enumerate()
                    .map(|(x, &d)| (x as Point, g[d].clone()))
                    .collect();
                out.push(WreathElement::new(base, HeadElement::Perm(k.clone())));
                let mut i = 0;
                while i < m {
                    digits[i] += 1;
                    if digits[i] < g.len() {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == m {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn finite_points(&self) -> Result<usize> {
        self.action
            .point_count()
            .ok_or_else(|| Error::Precondition("needs a finite index set".into()))
    }

    /// The imprimitive permutation action on `X × {0, .., deg G - 1}`:
    /// `(x, p)·(w k) = (x·k, p·w(x))`, point `(x, p)` numbered `x·deg G + p`.
    pub fn to_perm(&self, u: &WreathElement) -> Result<Perm> {
        let m = self.finite_points()?;
        self.check_shape(u)?;
        let d = self.base_group.degree();
        let mut images = vec![0u32; m * d];
        for x in 0..m {
            let xk = self.action.apply(x as Point, &u.head)? as usize;
            let w = u.base.get(&(x as Point));
            for p in 0..d {
                let q = w.map_or(p, |w| w.apply(p));
                images[x * d + p] = (xk * d + q) as u32;
            }
        }
        Perm::from_images(images)
    }

    /// Inverse of [`Wreath::to_perm`] on its image.
    pub fn from_perm(&self, perm: &Perm) -> Result<WreathElement> {
        let m = self.finite_points()?;
        let d = self.base_group.degree();
        if perm.degree() != m * d {
            return Err(Error::DegreeMismatch {
                left: m * d,
                right: perm.degree(),
            });
        }
        let mut head = vec![0u32; m];
        let mut base = BaseTuple::new();
        for (x, slot) in head.iter_mut().enumerate() {
            let target = perm.apply(x * d) / d;
            *slot = target as u32;
            let mut imgs = Vec::with_capacity(d);
            for p in 0..d {
                let img = perm.apply(x * d + p);
                if img / d != target {
                    return Err(Error::NotAMember(format!(
                        "{perm} does not preserve the block system"
                    )));
                }
                imgs.push((img % d) as u32);
            }
            base.insert(x as Point, Perm::from_images(imgs)?);
        }
        self.element(base, HeadElement::Perm(Perm::from_images(head)?))
    }

    /// The whole ambient as a permutation group via [`Wreath::to_perm`],
    /// generated by `G` placed at one point per orbit plus the head generators.
    pub fn as_perm_group(&self) -> Result<FiniteGroup> {
        let ActionSpec::Finite(a) = &self.action else {
            return Err(Error::Precondition("needs a finite index set".into()));
        };
        let mut gens = Vec::new();
        for y in self.action.orbit_reps() {
            for g in self.base_group.generators() {
                gens.push(self.to_perm(&self.base_at(g.clone(), y)?)?);
            }
        }
        for k in a.head().generators() {
            gens.push(self.to_perm(&self.head_at(HeadElement::Perm(k.clone()))?)?);
        }
        let group = closure_with_cap(&gens, DEFAULT_CLOSURE_CAP)?;
        if Some(group.order() as u128) != self.order() {
            return Err(Error::ContractViolation(format!(
                "generated {} elements, expected {:?}",
                group.order(),
                self.order()
            )));
        }
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::FiniteAction;
    use crate::named;

    fn p(degree: usize, cycles: &[&[u32]]) -> Perm {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn c2_wr_c2() -> Wreath {
        let c2 = named::cyclic(2).unwrap();
        Wreath::new(c2.clone(), ActionSpec::natural(c2)).unwrap()
    }

    #[test]
    fn defining_relation() {
        let w = c2_wr_c2();
        let g = p(2, &[&[0, 1]]);
        let k = w.head_at(HeadElement::Perm(p(2, &[&[0, 1]]))).unwrap();
        let lhs = w.conj(&w.base_at(g.clone(), 0).unwrap(), &k).unwrap();
        assert_eq!(lhs, w.base_at(g, 1).unwrap());
    }

    #[test]
    fn identity_and_inverse() {
        let w = c2_wr_c2();
        let all = w.enumerate().unwrap();
        for u in &all {
            assert_eq!(&w.mul(&w.identity(), u).unwrap(), u);
            assert_eq!(w.mul(u, &w.inv(u).unwrap()).unwrap(), w.identity());
        }
        assert_eq!(w.inv(&w.identity()).unwrap(), w.identity());
        let inv = w.base_at(p(2, &[&[0, 1]]), 1).unwrap();
        assert_eq!(w.inv(&inv).unwrap(), inv);
    }

    #[test]
    fn s3_wr_c2_conjugates_by_head() {
        let s3 = named::symmetric(3).unwrap();
        let w = Wreath::new(s3, ActionSpec::natural(named::cyclic(2).unwrap())).unwrap();
        let g = p(3, &[&[0, 1, 2]]);
        let k = w.head_at(HeadElement::Perm(p(2, &[&[0, 1]]))).unwrap();
        assert_eq!(
            w.conj(&w.base_at(g.clone(), 0).unwrap(), &k).unwrap(),
            w.base_at(g, 1).unwrap()
        );
    }

    #[test]
    fn coordinates() {
        let w = Wreath::over_integers(named::symmetric(3).unwrap()).unwrap();
        let g = p(3, &[&[0, 1]]);
        let h = p(3, &[&[0, 1, 2]]);
        assert!(w.coordinate(&w.identity(), 4).unwrap().is_identity());
        assert_eq!(w.coordinate(&w.base_at(g.clone(), 5).unwrap(), 5).unwrap(), g);
        let prod = w
            .mul(&w.base_at(g.clone(), 0).unwrap(), &w.base_at(h.clone(), 0).unwrap())
            .unwrap();
        assert_eq!(w.coordinate(&prod, 0).unwrap(), g.mul(&h));
    }

    #[test]
    fn integer_shift_moves_support() {
        let w = Wreath::over_integers(named::cyclic(3).unwrap()).unwrap();
        let g = p(3, &[&[0, 1, 2]]);
        let t = w.t().unwrap();
        let conj = w.conj(&w.base_at(g.clone(), 0).unwrap(), &w.pow(&t, 4).unwrap()).unwrap();
        assert_eq!(conj, w.base_at(g, 4).unwrap());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(c2_wr_c2().enumerate().unwrap().len(), 8);
        let c3 = named::cyclic(3).unwrap();
        let w = Wreath::new(c3, ActionSpec::natural(named::symmetric(3).unwrap())).unwrap();
        let all = w.enumerate().unwrap();
        assert_eq!(all.len(), 162);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 162);
        let trivial = closure_with_cap(&[Perm::identity(1)], 10).unwrap();
        let w = Wreath::new(trivial, ActionSpec::natural(named::symmetric(3).unwrap())).unwrap();
        assert_eq!(w.enumerate().unwrap().len(), 6);
    }

    #[test]
    fn enumeration_cap() {
        let s3 = named::symmetric(3).unwrap();
        let w = Wreath::new(s3, ActionSpec::natural(named::symmetric(6).unwrap())).unwrap();
        assert!(matches!(w.enumerate(), Err(Error::TooLarge { .. })));
        let z = Wreath::over_integers(named::cyclic(2).unwrap()).unwrap();
        assert!(z.enumerate().is_err());
    }

    #[test]
    fn ambient_mismatch() {
        let w = c2_wr_c2();
        let z = Wreath::over_integers(named::cyclic(2).unwrap()).unwrap();
        let t = z.t().unwrap();
        assert!(matches!(w.mul(&w.identity(), &t), Err(Error::AmbientMismatch(_))));
        assert!(w.base_at(p(2, &[&[0, 1]]), 2).is_err());
        assert!(w.base_at(p(3, &[&[0, 1]]), 0).is_err());
    }

    #[test]
    fn perm_round_trip() {
        let c3 = named::cyclic(3).unwrap();
        let w = Wreath::new(
            c3,
            ActionSpec::Finite(FiniteAction::regular(&named::cyclic(2).unwrap()).unwrap()),
        )
        .unwrap();
        for u in w.enumerate().unwrap() {
            let perm = w.to_perm(&u).unwrap();
            assert_eq!(w.from_perm(&perm).unwrap(), u);
        }
        assert_eq!(w.as_perm_group().unwrap().order(), 18);
    }

    #[test]
    fn display() {
        let w = Wreath::over_integers(named::symmetric(3).unwrap()).unwrap();
        let u = w
            .mul(&w.base_at(p(3, &[&[0, 1]]), -2).unwrap(), &w.pow(&w.t().unwrap(), 3).unwrap())
            .unwrap();
        assert_eq!(u.to_string(), "[-2: (0 1)] t^3");
        assert_eq!(w.identity().to_string(), "e");
    }
}

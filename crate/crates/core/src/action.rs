//! Faithful head actions on an index set, and the torsion-type property.
//!
//! Two families are supported: a finite permutation group acting on
//! `{0, .., m-1}`, and `ℤ` acting on `ℤ` by translation. Head elements are
//! permutations of `X` in the first case and shift amounts in the second.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{closure, FiniteGroup};
use crate::perm::Perm;

/// A point of the index set `X`. Finite index sets use `0..m`.
pub type Point = i64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum HeadElement {
    /// A permutation of a finite `X`.
    Perm(Perm),
    /// The translation `x ↦ x + s` of `ℤ`.
    Shift(i64),
}

impl HeadElement {
    pub fn is_identity(&self) -> bool {
        match self {
            HeadElement::Perm(p) => p.is_identity(),
            HeadElement::Shift(s) => *s == 0,
        }
    }
}

impl fmt::Display for HeadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadElement::Perm(p) if p.is_identity() => write!(f, "e"),
            HeadElement::Perm(p) => write!(f, "{p}"),
            HeadElement::Shift(0) => write!(f, "e"),
            HeadElement::Shift(1) => write!(f, "t"),
            HeadElement::Shift(s) => write!(f, "t^{s}"),
        }
    }
}

/// A finite group of permutations of `X = {0, .., m-1}`.
#[derive(Clone, Debug)]
pub struct FiniteAction {
    head: FiniteGroup,
}

impl FiniteAction {
    /// The natural action of a permutation group on its own points.
    pub fn natural(head: FiniteGroup) -> Self {
        FiniteAction { head }
    }

    /// The right regular action: `X` is the element list of `group` and
    /// `x·h` is the index of `elements[x]·h`.
    pub fn regular(group: &FiniteGroup) -> Result<Self> {
        let images: Vec<Perm> = group
            .generators()
            .iter()
            .map(|g| {
                let imgs = group
                    .elements()
                    .iter()
                    .map(|x| group.index_of(&x.mul(g)).unwrap() as u32)
                    .collect();
                Perm::from_images(imgs)
            })
            .collect::<Result<_>>()?;
        Ok(FiniteAction {
            head: closure(&images)?,
        })
    }

    /// The action determined by sending the i-th generator of `head` to
    /// `images[i]`. Fails unless this extends to a faithful homomorphism.
    pub fn from_generator_images(head: &FiniteGroup, images: &[Perm]) -> Result<Self> {
        if images.len() != head.generators().len() {
            return Err(Error::Precondition(format!(
                "{} generator images given for {} generators",
                images.len(),
                head.generators().len()
            )));
        }
        let m = images
            .first()
            .map(Perm::degree)
            .ok_or(Error::EmptyGenerators)?;
        let d = head.degree();
        // the graph of the map is a subgroup of H × Sym(X); it is a function
        // exactly when it has order |H|
        let diagonal: Vec<Perm> = head
            .generators()
            .iter()
            .zip(images)
            .map(|(h, x)| {
                if x.degree() != m {
                    return Err(Error::DegreeMismatch {
                        left: m,
                        right: x.degree(),
                    });
                }
                let imgs = h
                    .images()
                    .iter()
                    .copied()
                    .chain(x.images().iter().map(|&p| p + d as u32))
                    .collect();
                Perm::from_images(imgs)
            })
            .collect::<Result<_>>()?;
        let graph = closure(&diagonal)?;
        if graph.order() != head.order() {
            return Err(Error::Precondition(
                "generator images do not define a homomorphism".into(),
            ));
        }
        let image = closure(images)?;
        if image.order() != head.order() {
            return Err(Error::Precondition("action is not faithful".into()));
        }
        Ok(FiniteAction { head: image })
    }

    /// The trivial group on `points` points.
    pub fn trivial(points: usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::Precondition("index set must be nonempty".into()));
        }
        Ok(FiniteAction {
            head: closure(&[Perm::identity(points)])?,
        })
    }

    pub fn points(&self) -> usize {
        self.head.degree()
    }

    pub fn head(&self) -> &FiniteGroup {
        &self.head
    }

    /// Orbits of the head on `X`, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let m = self.points();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for g in self.head.generators() {
                    let y = g.apply(orbit[i]);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            let mut orbit: Vec<Point> = orbit.into_iter().map(|x| x as Point).collect();
            orbit.sort();
            out.push(orbit);
        }
        out
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum ActionSpec {
    Finite(FiniteAction),
    /// `ℤ` acting on `ℤ`, generated by `t: x ↦ x + 1`.
    IntTranslation,
}

/// Facts about an action consumed by the classification engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ActionDescriptor {
    pub torsion_type: bool,
    pub finitely_many_orbits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitSize {
    Finite(usize),
    Infinite,
}

impl ActionSpec {
    pub fn natural(head: FiniteGroup) -> Self {
        ActionSpec::Finite(FiniteAction::natural(head))
    }

    /// Number of points, or `None` for `ℤ`.
    pub fn point_count(&self) -> Option<usize> {
        match self {
            ActionSpec::Finite(a) => Some(a.points()),
            ActionSpec::IntTranslation => None,
        }
    }

    pub fn contains_point(&self, x: Point) -> bool {
        match self {
            ActionSpec::Finite(a) => x >= 0 && (x as usize) < a.points(),
            ActionSpec::IntTranslation => true,
        }
    }

    pub(crate) fn check_point(&self, x: Point) -> Result<()> {
        if self.contains_point(x) {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point: x,
                size: self.point_count().unwrap_or(0),
            })
        }
    }

    pub fn check_head(&self, h: &HeadElement) -> Result<()> {
        match (self, h) {
            (ActionSpec::Finite(a), HeadElement::Perm(p)) => {
                if a.head().contains(p) {
                    Ok(())
                } else {
                    Err(Error::NotAMember(p.to_string()))
                }
            }
            (ActionSpec::IntTranslation, HeadElement::Shift(_)) => Ok(()),
            (_, h) => Err(Error::AmbientMismatch(format!(
                "head element {h} does not belong to this action"
            ))),
        }
    }

    pub fn head_identity(&self) -> HeadElement {
        match self {
            ActionSpec::Finite(a) => HeadElement::Perm(a.head().identity().clone()),
            ActionSpec::IntTranslation => HeadElement::Shift(0),
        }
    }

    /// `h1` followed by `h2`.
    pub fn head_mul(&self, h1: &HeadElement, h2: &HeadElement) -> Result<HeadElement> {
        match (h1, h2) {
            (HeadElement::Perm(a), HeadElement::Perm(b)) => Ok(HeadElement::Perm(a.compose(b)?)),
            (HeadElement::Shift(a), HeadElement::Shift(b)) => Ok(HeadElement::Shift(a + b)),
            _ => Err(Error::AmbientMismatch("mixed head element kinds".into())),
        }
    }

    pub fn head_inv(&self, h: &HeadElement) -> HeadElement {
        match h {
            HeadElement::Perm(p) => HeadElement::Perm(p.inverse()),
            HeadElement::Shift(s) => HeadElement::Shift(-s),
        }
    }

    /// The image `x·h`.
    pub fn apply(&self, x: Point, h: &HeadElement) -> Result<Point> {
        self.check_point(x)?;
        match (self, h) {
            (ActionSpec::Finite(_), HeadElement::Perm(p)) => {
                if p.degree() as Point <= x {
                    return Err(Error::PointOutOfRange {
                        point: x,
                        size: p.degree(),
                    });
                }
                Ok(p.apply(x as usize) as Point)
            }
            (ActionSpec::IntTranslation, HeadElement::Shift(s)) => Ok(x + s),
            _ => Err(Error::AmbientMismatch(format!(
                "head element {h} does not belong to this action"
            ))),
        }
    }

    /// One representative per orbit, the least point of each. `ℤ` has the
    /// single orbit represented by `0`.
    pub fn orbit_reps(&self) -> Vec<Point> {
        match self {
            ActionSpec::Finite(a) => a.orbits().into_iter().map(|o| o[0]).collect(),
            ActionSpec::IntTranslation => vec![0],
        }
    }

    /// `|x⟨k⟩|`.
    pub fn cyclic_orbit_size(&self, x: Point, k: &HeadElement) -> Result<OrbitSize> {
        self.check_point(x)?;
        self.check_head(k)?;
        match k {
            HeadElement::Shift(0) => Ok(OrbitSize::Finite(1)),
            HeadElement::Shift(_) => Ok(OrbitSize::Infinite),
            HeadElement::Perm(_) => {
                let mut y = self.apply(x, k)?;
                let mut n = 1;
                while y != x {
                    y = self.apply(y, k)?;
                    n += 1;
                }
                Ok(OrbitSize::Finite(n))
            }
        }
    }

    /// Whether some orbit `yH` has every `⟨k⟩`-orbit inside it finite.
    ///
    /// Finite index sets always qualify. For translation, `y = 0` and
    /// `k = t` give an infinite orbit and `ℤ` is a single orbit, so no `y`
    /// works.
    pub fn is_torsion_type(&self) -> bool {
        match self {
            ActionSpec::Finite(_) => true,
            ActionSpec::IntTranslation => false,
        }
    }

    pub fn descriptor(&self) -> ActionDescriptor {
        ActionDescriptor {
            torsion_type: self.is_torsion_type(),
            finitely_many_orbits: true,
        }
    }
}

//! Standard small groups as permutation groups.

use crate::error::{Error, Result};
use crate::group::{closure, FiniteGroup};
use crate::perm::Perm;

fn cycle(degree: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(format!("{what} needs n ≥ 1")));
    }
    Ok(())
}

/// `C_n` generated by the n-cycle `(0 1 .. n-1)`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    require_positive(n, "cyclic")?;
    let pts: Vec<u32> = (0..n as u32).collect();
    closure(&[cycle(n, &pts)])
}

/// `Sym(n)` generated by `(0 1)` and `(0 1 .. n-1)`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    require_positive(n, "sym")?;
    if n == 1 {
        return closure(&[Perm::identity(1)]);
    }
    let pts: Vec<u32> = (0..n as u32).collect();
    let mut gens = vec![cycle(n, &[0, 1])];
    if n > 2 {
        gens.push(cycle(n, &pts));
    }
    closure(&gens)
}

/// `Alt(n)` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    require_positive(n, "alt")?;
    if n < 3 {
        return closure(&[Perm::identity(n)]);
    }
    let gens: Vec<Perm> = (2..n as u32).map(|i| cycle(n, &[0, 1, i])).collect();
    closure(&gens)
}

/// `C2 × C2` on four points.
pub fn klein4() -> FiniteGroup {
    let a = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    closure(&[a, b]).unwrap()
}

/// Symmetries of the n-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Precondition("dihedral needs n ≥ 3".into()));
    }
    let pts: Vec<u32> = (0..n as u32).collect();
    let rot = cycle(n, &pts);
    let refl = Perm::from_images((0..n as u32).map(|x| (n as u32 - x) % n as u32).collect())?;
    closure(&[rot, refl])
}

/// The quaternion group via its right regular action on eight points.
///
/// Point `2u + s` stands for `(-1)^s · unit[u]` with units `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign flip, unit)
    const TABLE: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let right_mul = |g: usize| {
        let images = (0..8u32)
            .map(|x| {
                let (xu, xs) = (x as usize / 2, x % 2 == 1);
                let (gu, gs) = (g / 2, g % 2 == 1);
                let (flip, u) = TABLE[xu][gu];
                (2 * u + usize::from(xs ^ gs ^ flip)) as u32
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    closure(&[right_mul(2), right_mul(4)]).unwrap()
}

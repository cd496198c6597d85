use crate::error::Result;

use super::{check_params, ForbiddenMinorSpec};

/// Whether `K(a, b)` is free of every connected minor with parameters `(t, x)`.
///
/// Integer form of `1.5a + b < t - 0.5x` (for `a >= x`) and `2a + b < t` (for `a < x`).
pub fn shape_minor_free(t: usize, x: usize, a: usize, b: usize) -> Result<bool> {
    check_params(t, x)?;
    let (t, x, a, b) = (t as i64, x as i64, a as i64, b as i64);
    Ok(if a >= x {
        3 * a + 2 * b < 2 * t - x
    } else {
        2 * a + b < t
    })
}

/// The same condition in its derivation form: the clique-minor size left after
/// embedding the missing matching, `floor(1.5 (a - x)) + b`, is below `t - 2x`.
pub fn floor_form_minor_free(t: usize, x: usize, a: usize, b: usize) -> Result<bool> {
    check_params(t, x)?;
    let (t, x, a, b) = (t as i64, x as i64, a as i64, b as i64);
    Ok(if a >= x {
        (3 * (a - x)).div_euclid(2) + b <= t - 2 * x - 1
    } else {
        2 * (x - a) + (t - 2 * x) > b
    })
}

/// Largest `b` with `K(a, b)` minor-free for `(t, x)`, or `None` if even `b = 0` fails.
///
/// `t - 2a - 1` when `a < x`, otherwise `floor((2t - x - 3a - 1) / 2)`.
pub fn b_cap(t: usize, x: usize, a: usize) -> Option<usize> {
    let (t, x, a) = (t as i64, x as i64, a as i64);
    let cap = if a < x {
        t - 2 * a - 1
    } else {
        (2 * t - x - 3 * a - 1).div_euclid(2)
    };
    (cap >= 0).then_some(cap as usize)
}

/// Largest feasible `b` for `a` across a whole family.
pub fn family_b_cap(family: &[ForbiddenMinorSpec], a: usize) -> Option<usize> {
    family
        .iter()
        .map(|s| b_cap(s.t, s.x, a))
        .try_fold(usize::MAX, |acc, c| c.map(|c| acc.min(c)))
}

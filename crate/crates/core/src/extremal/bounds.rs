use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::ShapeParams;
use crate::Rational;

use super::optimum::Exponent;

/// `k(s) <= 3^(s/3)` for the maximum clique count over graphs with `n + omega <= s`,
/// held as the integer statement `c^3 <= 3^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsBound {
    pub s: usize,
    /// `K(s/3, 0)` when `3 | s`, which attains the bound.
    pub witness: Option<ShapeParams>,
}

impl KsBound {
    pub fn admits(&self, count: &BigUint) -> bool {
        count.pow(3) <= BigUint::from(3u8).pow(self.s as u32)
    }

    pub fn is_attained_by(&self, count: &BigUint) -> bool {
        count.pow(3) == BigUint::from(3u8).pow(self.s as u32)
    }

    pub fn to_f64(&self) -> f64 {
        3f64.powf(self.s as f64 / 3.0)
    }
}

pub fn k_s_bound(s: usize) -> KsBound {
    KsBound {
        s,
        witness: (s % 3 == 0).then(|| ShapeParams::new(s / 3, 0)),
    }
}

/// Clique bounds for `K_t`-minor-free graphs on `n <= (4t - 2)/3` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallNBound {
    /// `n < t`: the clique itself, with `2^n` cliques.
    Clique { n: usize, count: BigUint },
    /// `K(x, n - 2x)` with `x = 2(n - t) + 1`, against `2^(4t - 3n) 3^(2(n - t))`.
    Matching {
        shape: ShapeParams,
        count: BigUint,
        upper: Exponent,
        upper_count: BigUint,
    },
}

impl SmallNBound {
    pub fn count(&self) -> &BigUint {
        match self {
            SmallNBound::Clique { count, .. } | SmallNBound::Matching { count, .. } => count,
        }
    }
}

pub fn small_n_bound(t: usize, n: usize) -> Result<SmallNBound> {
    if t == 0 {
        return Err(Error::input("t must be at least 1"));
    }
    if n < t {
        return Ok(SmallNBound::Clique {
            n,
            count: BigUint::from(2u8).pow(n as u32),
        });
    }
    if 3 * n + 2 > 4 * t {
        return Err(Error::input(format!(
            "n = {n} exceeds (4t - 2)/3 for t = {t}"
        )));
    }
    let x = 2 * (n - t) + 1;
    let shape = ShapeParams::new(x, n - 2 * x);
    let count = BigUint::from(3u8).pow(x as u32) * BigUint::from(2u8).pow((n - 2 * x) as u32);
    let (three, two) = (2 * (n - t), 4 * t - 3 * n);
    let upper_count = BigUint::from(3u8).pow(three as u32) * BigUint::from(2u8).pow(two as u32);
    if &count * 4u8 != &upper_count * 3u8 {
        return Err(Error::Internal(format!("construction count {count} is not 3/4 of {upper_count}")));
    }
    Ok(SmallNBound::Matching {
        shape,
        count,
        upper: Exponent {
            log3_coefficient: Rational::from_integer(three as i64),
            constant: Rational::from_integer(two as i64),
        },
        upper_count,
    })
}

/// `2^(t-2) (n - t + 3)`.
pub fn wood_bound(t: usize, n: usize) -> Result<BigUint> {
    if t < 3 || n + 2 < t {
        return Err(Error::input(format!("need t >= 3 and n >= t - 2, got t = {t}, n = {n}")));
    }
    Ok(BigUint::from(2u8).pow((t - 2) as u32) * BigUint::from(n + 3 - t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::count_cliques;
    use crate::extremal::shape_minor_free;

    #[test]
    fn k_s_examples() {
        let b = k_s_bound(3);
        assert_eq!(b.witness, Some(ShapeParams::new(1, 0)));
        assert!(b.is_attained_by(&BigUint::from(3u8)));
        let b = k_s_bound(6);
        let c4 = b.witness.unwrap().to_graph();
        assert!(b.is_attained_by(&count_cliques(&c4)));
        let b = k_s_bound(4);
        assert_eq!(b.witness, None);
        assert!(b.admits(&BigUint::from(4u8)) && !b.admits(&BigUint::from(5u8)));
    }

    #[test]
    fn witnesses_attain_the_bound() {
        for s in (0..=24).step_by(3) {
            let b = k_s_bound(s);
            let w = b.witness.unwrap();
            assert!(b.is_attained_by(&count_cliques(&w.to_graph())));
        }
    }

    #[test]
    fn small_n_examples() {
        match small_n_bound(6, 7).unwrap() {
            SmallNBound::Matching { shape, count, upper_count, .. } => {
                assert_eq!(shape, ShapeParams::new(3, 1));
                assert_eq!(count, BigUint::from(54u8));
                assert_eq!(upper_count, BigUint::from(72u8));
                assert_eq!(count_cliques(&shape.to_graph()), count);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(small_n_bound(6, 4).unwrap().count(), &BigUint::from(16u8));
        assert!(small_n_bound(6, 8).is_err());
        for t in 2..12 {
            let b = small_n_bound(t, t).unwrap();
            assert_eq!(b.count(), &(BigUint::from(3u8) << (t - 2)));
        }
    }

    #[test]
    fn small_n_shapes_are_minor_free() {
        for t in 2..40 {
            for n in t..=(4 * t - 2) / 3 {
                if let SmallNBound::Matching { shape, .. } = small_n_bound(t, n).unwrap() {
                    assert!(shape_minor_free(t, 0, shape.a, shape.b).unwrap());
                    assert_eq!(shape.vertex_count(), n);
                }
            }
        }
    }

    #[test]
    fn wood_values() {
        assert_eq!(wood_bound(5, 5).unwrap(), BigUint::from(24u8));
        assert_eq!(wood_bound(4, 4).unwrap(), BigUint::from(12u8));
        assert_eq!(wood_bound(3, 3).unwrap(), BigUint::from(6u8));
        assert_eq!(wood_bound(3, 1).unwrap(), BigUint::from(2u8));
        assert!(wood_bound(2, 5).is_err());
        assert!(wood_bound(6, 3).is_err());
    }
}

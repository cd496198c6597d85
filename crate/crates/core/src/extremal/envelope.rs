use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{EnvelopeScalar, ExactRational};

use super::optimum::compare_shape_values;
use super::{check_family, check_params, ForbiddenMinorSpec};

pub(crate) const LOG2_3: f64 = 1.584_962_500_721_156_3;

/// A point `(a, b)` of the relaxed shape plane.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopePoint<T> {
    pub a: T,
    pub b: T,
}

impl<T: EnvelopeScalar> EnvelopePoint<T> {
    pub fn new(a: T, b: T) -> Self {
        EnvelopePoint { a, b }
    }

    /// `log2(3^a 2^b)`, for display.
    pub fn value_log2(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) * LOG2_3 + self.b.to_f64().unwrap_or(f64::NAN)
    }
}

/// The boundary of the relaxed feasible region for a family: the pointwise
/// minimum of the one-bend boundaries `b_i(a)`, clipped to the first quadrant.
///
/// `extreme_points` runs from the `b`-axis to the `a`-axis with `a` strictly
/// increasing and `b` strictly decreasing; only genuine corners are kept.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerEnvelope<T> {
    pub constraints: Vec<(usize, usize)>,
    pub extreme_points: Vec<EnvelopePoint<T>>,
}

/// A line `b = intercept + slope * a`.
struct Line<T> {
    intercept: T,
    slope: T,
}

impl<T: EnvelopeScalar> LowerEnvelope<T> {
    pub fn build(family: &[ForbiddenMinorSpec]) -> Result<Self> {
        check_family(family)?;
        let constraints: Vec<_> = family.iter().map(|s| (s.t, s.x)).collect();
        Self::from_constraints(&constraints)
    }

    pub fn from_constraints(constraints: &[(usize, usize)]) -> Result<Self> {
        if constraints.is_empty() {
            return Err(Error::input("forbidden-minor family is empty"));
        }
        for &(t, x) in constraints {
            check_params(t, x)?;
        }
        let mut env = LowerEnvelope {
            constraints: constraints.to_vec(),
            extreme_points: Vec::new(),
        };
        env.extreme_points = env.corners();
        Ok(env)
    }

    /// `b_i(a)` for a single constraint, without clipping.
    pub fn boundary(t: usize, x: usize, a: &T) -> T {
        let (tt, xx) = (T::from_int(t as i64), T::from_int(x as i64));
        if *a <= xx {
            tt - T::from_int(2) * a.clone()
        } else {
            tt - xx / T::from_int(2) - T::ratio(3, 2) * a.clone()
        }
    }

    /// Pointwise minimum of the constraint boundaries at `a`.
    pub fn height(&self, a: &T) -> T {
        let mut it = self.constraints.iter().map(|&(t, x)| Self::boundary(t, x, a));
        let first = it.next().expect("nonempty constraints");
        it.fold(first, |m, v| if v < m { v } else { m })
    }

    /// Membership in the closed relaxed region.
    pub fn contains(&self, a: &T, b: &T) -> bool {
        if a.is_negative() || b.is_negative() {
            return false;
        }
        let h = self.height(a);
        *b < h || b.same(&h)
    }

    /// On an axis, or on at least one constraint boundary.
    pub fn is_tight(&self, p: &EnvelopePoint<T>) -> bool {
        p.a.is_zero()
            || p.b.is_zero()
            || self.constraints.iter().any(|&(t, x)| Self::boundary(t, x, &p.a).same(&p.b))
    }

    /// The `a`-intercept of the envelope.
    fn end(&self) -> T {
        // Each boundary crosses the axis on its second piece, at (2t - x) / 3.
        let mut it = self
            .constraints
            .iter()
            .map(|&(t, x)| T::ratio(2 * t as i64 - x as i64, 3));
        let first = it.next().expect("nonempty constraints");
        it.fold(first, |m, v| if v < m { v } else { m })
    }

    fn lines(&self) -> Vec<Line<T>> {
        let mut out = Vec::with_capacity(2 * self.constraints.len());
        for &(t, x) in &self.constraints {
            out.push(Line {
                intercept: T::from_int(t as i64),
                slope: T::from_int(-2),
            });
            out.push(Line {
                intercept: T::ratio(2 * t as i64 - x as i64, 2),
                slope: T::ratio(-3, 2),
            });
        }
        out
    }

    fn corners(&self) -> Vec<EnvelopePoint<T>> {
        let end = self.end();
        let mut xs = vec![T::zero(), end.clone()];
        xs.extend(self.constraints.iter().map(|&(_, x)| T::from_int(x as i64)));
        let lines = self.lines();
        for (i, p) in lines.iter().enumerate() {
            for q in &lines[i + 1..] {
                if !p.slope.same(&q.slope) {
                    xs.push((q.intercept.clone() - p.intercept.clone()) / (p.slope.clone() - q.slope.clone()));
                }
            }
        }
        xs.retain(|a| !a.is_negative() && (*a < end || a.same(&end)));
        xs.sort_by(|p, q| p.partial_cmp(q).unwrap_or(Ordering::Equal));
        xs.dedup_by(|p, q| p.same(q));

        let mut pts: Vec<EnvelopePoint<T>> = xs
            .into_iter()
            .map(|a| {
                let b = if a.same(&end) { T::zero() } else { self.height(&a) };
                EnvelopePoint { a, b }
            })
            .collect();
        if let Some(last) = pts.last_mut() {
            last.b = T::zero();
        }

        let mut out: Vec<EnvelopePoint<T>> = Vec::with_capacity(pts.len());
        for p in pts.drain(..) {
            while out.len() >= 2 {
                let (u, v) = (&out[out.len() - 2], &out[out.len() - 1]);
                let s1 = (v.b.clone() - u.b.clone()) / (v.a.clone() - u.a.clone());
                let s2 = (p.b.clone() - v.b.clone()) / (p.a.clone() - v.a.clone());
                if s1.same(&s2) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out
    }

    /// Extreme point maximizing `log2(3) a + b`, compared in floating point.
    pub fn lp_optimum_approx(&self) -> &EnvelopePoint<T> {
        let mut best = &self.extreme_points[0];
        for p in &self.extreme_points[1..] {
            if p.value_log2() > best.value_log2() {
                best = p;
            }
        }
        best
    }
}

impl<T: ExactRational> LowerEnvelope<T> {
    /// Extreme point maximizing `3^a 2^b`, compared exactly; ties go to the smaller `a`.
    pub fn lp_optimum(&self) -> &EnvelopePoint<T> {
        let mut best = &self.extreme_points[0];
        for p in &self.extreme_points[1..] {
            if compare_shape_values(&p.a.to_parts(), &p.b.to_parts(), &best.a.to_parts(), &best.b.to_parts())
                == Ordering::Greater
            {
                best = p;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::ToPrimitive;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pts(env: &LowerEnvelope<Rational>) -> Vec<(Rational, Rational)> {
        env.extreme_points.iter().map(|p| (p.a, p.b)).collect()
    }

    #[test]
    fn clique_family() {
        for t in 1..12 {
            let env = LowerEnvelope::<Rational>::from_constraints(&[(t, 0)]).unwrap();
            assert_eq!(pts(&env), vec![(r(0, 1), r(t as i64, 1)), (r(2 * t as i64, 3), r(0, 1))]);
        }
    }

    #[test]
    fn single_bend() {
        let env = LowerEnvelope::<Rational>::from_constraints(&[(10, 3)]).unwrap();
        assert_eq!(
            pts(&env),
            vec![(r(0, 1), r(10, 1)), (r(3, 1), r(4, 1)), (r(17, 3), r(0, 1))]
        );
        // x = t/2 puts the bend on the axis.
        let env = LowerEnvelope::<Rational>::from_constraints(&[(10, 5)]).unwrap();
        assert_eq!(pts(&env), vec![(r(0, 1), r(10, 1)), (r(5, 1), r(0, 1))]);
    }

    #[test]
    fn two_member_example() {
        let env = LowerEnvelope::<Rational>::from_constraints(&[(8, 0), (10, 5)]).unwrap();
        assert_eq!(
            pts(&env),
            vec![(r(0, 1), r(8, 1)), (r(4, 1), r(2, 1)), (r(5, 1), r(0, 1))]
        );
        assert_eq!(env.lp_optimum(), &EnvelopePoint::new(r(4, 1), r(2, 1)));
        assert_eq!(env.lp_optimum_approx(), env.lp_optimum());
    }

    #[test]
    fn dominated_constraint_is_absorbed() {
        let alone = LowerEnvelope::<Rational>::from_constraints(&[(6, 0)]).unwrap();
        let both = LowerEnvelope::<Rational>::from_constraints(&[(6, 0), (9, 2)]).unwrap();
        assert_eq!(alone.extreme_points, both.extreme_points);
    }

    #[test]
    fn float_matches_exact() {
        let fam = [(8, 0), (10, 5), (13, 4), (9, 1)];
        let exact = LowerEnvelope::<Rational>::from_constraints(&fam).unwrap();
        let float = LowerEnvelope::<f64>::from_constraints(&fam).unwrap();
        assert_eq!(exact.extreme_points.len(), float.extreme_points.len());
        for (e, f) in exact.extreme_points.iter().zip(&float.extreme_points) {
            assert!((e.a.to_f64().unwrap() - f.a).abs() < 1e-9);
            assert!((e.b.to_f64().unwrap() - f.b).abs() < 1e-9);
        }
    }

    #[test]
    fn empty_family_rejected() {
        assert!(LowerEnvelope::<Rational>::from_constraints(&[]).is_err());
        assert!(LowerEnvelope::<Rational>::from_constraints(&[(4, 3)]).is_err());
    }
}

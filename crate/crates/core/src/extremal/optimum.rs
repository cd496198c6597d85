use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::ShapeParams;
use crate::scalar::ExactRational;
use crate::Rational;

use super::envelope::{EnvelopePoint, LowerEnvelope, LOG2_3};
use super::predicate::{b_cap, family_b_cap};
use super::{check_family, ForbiddenMinorSpec};

/// Optimum of the relaxation: an exact point and its value `log2(3) a + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpOptimum {
    pub point: EnvelopePoint<Rational>,
    pub value_log2: f64,
}

/// The best integer shape together with the relaxation optimum it is measured against.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeOptimum {
    pub shape: ShapeParams,
    /// `3^a 2^b`, the number of cliques in `K(a, b)`.
    pub clique_count: BigUint,
    pub lp: LpOptimum,
}

impl ShapeOptimum {
    /// Whether `factor * clique_count >= 3^a 2^b` at the relaxation optimum, exactly.
    pub fn within_factor(&self, factor: u32) -> bool {
        let lhs = BigInt::from(&self.clique_count * factor);
        let (a, b) = (self.lp.point.a.to_parts(), self.lp.point.b.to_parts());
        let d = a.1.lcm(&b.1);
        let e3 = exponent(&(&a.0 * (&d / &a.1)));
        let e2 = exponent(&(&b.0 * (&d / &b.1)));
        let d = exponent(&d);
        num_traits::pow(lhs, d) >= BigInt::from(3u8).pow(e3 as u32) * BigInt::from(2u8).pow(e2 as u32)
    }

    /// `3^a 2^b` at the relaxation optimum divided by the integer count.
    pub fn gap_ratio(&self) -> f64 {
        (self.lp.value_log2 - log2_biguint(&self.clique_count)).exp2()
    }
}

/// `log2(3) * log3_coefficient + constant`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponent {
    pub log3_coefficient: Rational,
    pub constant: Rational,
}

impl Exponent {
    pub fn to_f64(&self) -> f64 {
        self.log3_coefficient.to_f64().unwrap_or(f64::NAN) * LOG2_3 + self.constant.to_f64().unwrap_or(f64::NAN)
    }
}

/// The exponent of the extremal constant for a family, with an integer shape attaining it up to `log2 6`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalExponent {
    pub point: EnvelopePoint<Rational>,
    pub exponent: Exponent,
    pub ip: ShapeOptimum,
    /// `exponent - log2(ip count)`.
    pub gap_log2: f64,
}

fn exponent(v: &BigInt) -> usize {
    v.to_usize().expect("exponent fits in usize")
}

pub(crate) fn log2_biguint(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 60 {
        return v.to_f64().unwrap_or(0.0).log2();
    }
    let shift = bits - 60;
    (v >> shift).to_f64().unwrap_or(0.0).log2() + shift as f64
}

/// Exact comparison of `3^a1 2^b1` with `3^a2 2^b2` for rational exponents given as reduced parts.
pub fn compare_shape_values(
    a1: &(BigInt, BigInt),
    b1: &(BigInt, BigInt),
    a2: &(BigInt, BigInt),
    b2: &(BigInt, BigInt),
) -> Ordering {
    let d = a1.1.lcm(&b1.1).lcm(&a2.1).lcm(&b2.1);
    let scale = |p: &(BigInt, BigInt)| &p.0 * (&d / &p.1);
    // Compare 3^da with 2^db, where both sides were raised to the power d.
    let da = scale(a1) - scale(a2);
    let db = scale(b2) - scale(b1);
    match (da.sign(), db.sign()) {
        (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
        (Sign::Plus | Sign::NoSign, Sign::Minus | Sign::NoSign) => Ordering::Greater,
        (Sign::Minus | Sign::NoSign, Sign::Plus | Sign::NoSign) => Ordering::Less,
        (Sign::Plus, Sign::Plus) => {
            BigUint::from(3u8).pow(exponent(&da) as u32).cmp(&BigUint::from(2u8).pow(exponent(&db) as u32))
        }
        (Sign::Minus, Sign::Minus) => BigUint::from(2u8)
            .pow(exponent(&-db) as u32)
            .cmp(&BigUint::from(3u8).pow(exponent(&-da) as u32)),
    }
}

fn parts(r: &Rational) -> (BigInt, BigInt) {
    r.to_parts()
}

fn shape_count(a: usize, b: usize) -> BigUint {
    BigUint::from(3u8).pow(a as u32) * BigUint::from(2u8).pow(b as u32)
}

/// Best integer shape for `a = 0, 1, ...` while `cap(a)` is defined; ties keep the smaller `a`.
fn best_integer_shape(limit: usize, cap: impl Fn(usize) -> Option<usize>) -> Result<(ShapeParams, BigUint)> {
    let mut best: Option<(ShapeParams, BigUint)> = None;
    for a in 0..=limit {
        let Some(b) = cap(a) else { break };
        let count = shape_count(a, b);
        if best.as_ref().map_or(true, |(_, c)| count > *c) {
            best = Some((ShapeParams::new(a, b), count));
        }
    }
    best.ok_or_else(|| Error::Internal("no feasible shape; K(0,0) should always be feasible".into()))
}

fn lp_from(point: EnvelopePoint<Rational>) -> LpOptimum {
    let value_log2 = point.value_log2();
    LpOptimum { point, value_log2 }
}

/// Exact integer optimum for one connected forbidden minor, with the relaxation optimum
/// at whichever of `(0, t)` and `((2t - x)/3, 0)` is larger.
pub fn single_minor_optimum(spec: &ForbiddenMinorSpec) -> Result<ShapeOptimum> {
    check_family(std::slice::from_ref(spec))?;
    let (t, x) = spec.params();
    let (shape, clique_count) = best_integer_shape(t, |a| b_cap(t, x, a))?;
    let on_b = EnvelopePoint::new(Rational::from_integer(0), Rational::from_integer(t as i64));
    let on_a = EnvelopePoint::new(Rational::new(2 * t as i64 - x as i64, 3), Rational::from_integer(0));
    let point = match compare_shape_values(&parts(&on_a.a), &parts(&on_a.b), &parts(&on_b.a), &parts(&on_b.b)) {
        Ordering::Greater => on_a,
        _ => on_b,
    };
    let opt = ShapeOptimum {
        shape,
        clique_count,
        lp: lp_from(point),
    };
    if !opt.within_factor(3) {
        return Err(Error::Internal(format!("integer optimum {:?} is not within factor 3", opt.shape)));
    }
    Ok(opt)
}

/// Exact integer optimum for a family, measured against the best envelope corner.
pub fn family_ip_optimum(family: &[ForbiddenMinorSpec]) -> Result<ShapeOptimum> {
    check_family(family)?;
    let limit = family.iter().map(|s| s.t).max().unwrap_or(0);
    let (shape, clique_count) = best_integer_shape(limit, |a| family_b_cap(family, a))?;
    let env = LowerEnvelope::<Rational>::build(family)?;
    let opt = ShapeOptimum {
        shape,
        clique_count,
        lp: lp_from(env.lp_optimum().clone()),
    };
    if !opt.within_factor(6) {
        return Err(Error::Internal(format!("integer optimum {:?} is not within factor 6", opt.shape)));
    }
    Ok(opt)
}

pub fn extremal_exponent(family: &[ForbiddenMinorSpec]) -> Result<ExtremalExponent> {
    let ip = family_ip_optimum(family)?;
    let point = ip.lp.point.clone();
    let exponent = Exponent {
        log3_coefficient: point.a,
        constant: point.b,
    };
    let gap_log2 = exponent.to_f64() - log2_biguint(&ip.clique_count);
    Ok(ExtremalExponent {
        point,
        exponent,
        ip,
        gap_log2,
    })
}

//! Rational scalars and the small helpers every other module leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Arbitrary-precision rational. `BigRational` keeps itself in lowest terms
/// with a positive denominator after every operation.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign_of(r: &Rat) -> i32 {
    match r.cmp(&Rat::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub fn half(r: &Rat) -> Rat {
    r / rat(2)
}

pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / rat(2)
}

pub fn pow(r: &Rat, e: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e {
        out *= r;
    }
    out
}

pub fn to_f64(r: &Rat) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // huge numerator or denominator: scale down by bit length first
            let nb = r.numer().bits() as i64;
            let db = r.denom().bits() as i64;
            let shift = (nb - db).clamp(-1000, 1000);
            let scaled = if shift > 0 {
                r / Rat::from_integer(BigInt::one() << (shift as usize))
            } else {
                r * Rat::from_integer(BigInt::one() << ((-shift) as usize))
            };
            let n = scaled.numer().to_f64().unwrap_or(0.0);
            let d = scaled.denom().to_f64().unwrap_or(1.0);
            (n / d) * 2f64.powi(shift as i32)
        }
    }
}

/// Closest "nice" rational with a power-of-two denominator, for display
/// coordinates and sample points.
pub fn from_f64(x: f64) -> Rat {
    Rat::from_float(x).unwrap_or_else(Rat::zero)
}

/// Smallest integer strictly greater than |r|.
pub fn ceil_abs_plus_one(r: &Rat) -> Rat {
    let a = r.abs();
    Rat::from_integer(a.floor().to_integer() + BigInt::one())
}

/// Serialize as `p/q` (always with an explicit denominator).
pub fn to_pq(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A rational with small height inside the open interval (lo, hi).
/// Used to pick clean sample points; falls back to the midpoint.
pub fn simple_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo < hi);
    // try integers first
    let fl = lo.floor() + Rat::one();
    if &fl < hi {
        // integer closest to zero in the interval
        let z = Rat::zero();
        if lo < &z && &z < hi {
            return z;
        }
        if &fl > &z {
            return fl;
        }
        let ch = hi.ceil() - Rat::one();
        if &ch > lo {
            return ch;
        }
        return fl;
    }
    let mut den = BigInt::from(2);
    for _ in 0..64 {
        let dr = Rat::from_integer(den.clone());
        let cand = ((lo * &dr).floor() + Rat::one()) / &dr;
        if &cand < hi && &cand > lo {
            return cand;
        }
        den *= 2;
    }
    midpoint(lo, hi)
}

/// The rational of least denominator in the closed interval `[lo, hi]`.
pub fn simplest_in(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let up = &fl + Rat::one();
    if &up <= hi {
        return up;
    }
    // continued fraction step: lo and hi share their integer part
    let inner = simplest_in(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_in(&ratq(3, 10), &ratq(4, 10)), ratq(1, 3));
        assert_eq!(simplest_in(&ratq(-7, 5), &ratq(-6, 5)), ratq(-4, 3));
        assert_eq!(simplest_in(&ratq(-1, 2), &ratq(1, 7)), rat(0));
        assert_eq!(simplest_in(&ratq(22, 7), &ratq(22, 7)), ratq(22, 7));
    }

    #[test]
    fn canonical_form() {
        let r = ratq(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(to_pq(&r), "-3/2");
        assert_eq!(to_pq(&rat(4)), "4/1");
    }

    #[test]
    fn simple_between_is_inside() {
        let cases = [
            (ratq(1, 3), ratq(1, 2)),
            (rat(-5), rat(7)),
            (ratq(-7, 3), ratq(-2, 1)),
            (ratq(100, 1), ratq(1001, 10)),
        ];
        for (a, b) in cases {
            let s = simple_between(&a, &b);
            assert!(a < s && s < b, "{a} {s} {b}");
        }
    }
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_pq {
    use super::{to_pq, Rat};
    use serde::Serializer;

    pub fn one<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(r))
    }

    pub fn many<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_pq))
    }

    pub fn opt<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&to_pq(r)),
            None => s.serialize_none(),
        }
    }
}

use super::rat::{sign_of, Rat};
use num_traits::{Signed, Zero};

/// Closed rational interval used for enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if v < &lo {
                lo = v.clone();
            }
            if v > &hi {
                hi = v.clone();
            }
        }
        Interval::new(lo, hi)
    }

    pub fn scale(&self, r: &Rat) -> Interval {
        self.mul(&Interval::point(r.clone()))
    }

    pub fn contains(&self, r: &Rat) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// Sign shared by every point of the interval, if there is one.
    pub fn definite_sign(&self) -> Option<i32> {
        if self.lo > Rat::zero() {
            Some(1)
        } else if self.hi < Rat::zero() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn abs_max(&self) -> Rat {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound on |x| over the interval (zero if it straddles 0).
    pub fn abs_min(&self) -> Rat {
        match (sign_of(&self.lo), sign_of(&self.hi)) {
            (1, _) => self.lo.clone(),
            (_, -1) => -self.hi.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn overlaps(&self, o: &Interval) -> bool {
        !(self.hi < o.lo || o.hi < self.lo)
    }

    /// Horner evaluation of a rational polynomial over the interval.
    pub fn eval_poly(coeffs: &[Rat], x: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::point(c.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratq};

    #[test]
    fn mul_and_sign() {
        let a = Interval::new(rat(-1), rat(2));
        let b = Interval::new(rat(3), rat(4));
        assert_eq!(a.mul(&b), Interval::new(rat(-4), rat(8)));
        assert_eq!(a.definite_sign(), None);
        assert_eq!(b.definite_sign(), Some(1));
        let p = Interval::eval_poly(&[rat(-2), rat(0), rat(1)], &Interval::new(ratq(3, 2), ratq(3, 2)));
        assert_eq!(p, Interval::point(ratq(1, 4)));
    }
}

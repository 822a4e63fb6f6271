use super::field::{Ext, Field, QQ};
use super::fpoly::{self, IsolInterval};
use super::rat::{rat, sign_of, simplest_in, to_f64, to_pq, Rat};
use super::upoly::{UPoly, Var};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// `|a_n|` once `p` is scaled to a primitive integer polynomial.
fn leading_of_primitive(p: &[Rat]) -> BigInt {
    let Some(lc) = p.last() else { return BigInt::one() };
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&l / c.denom()))));
    (lc.numer() * (&l / lc.denom()) / g).abs()
}

/// A rational root `u/v` of `p` has `v | n`, and two such fractions are at
/// least `1/n²` apart, so one candidate per narrow box decides it.
fn rational_root_in(p: &[Rat], b: IsolInterval, n: &BigInt) -> IsolInterval {
    if b.is_exact() {
        return b;
    }
    let n2 = Rat::from_integer(n * n * 2);
    let narrow = fpoly::refine_box(&mut QQ, p, &b, &n2.recip());
    if narrow.is_exact() {
        return narrow;
    }
    let c = simplest_in(&narrow.lo, &narrow.hi);
    if c.denom() <= n && fpoly::eval(&QQ, p, &c).is_zero() {
        return IsolInterval { lo: c.clone(), hi: c };
    }
    b
}

/// A real algebraic number: the unique root of a squarefree rational
/// polynomial inside an isolating interval.
#[derive(Clone, Debug)]
pub struct AlgNumber {
    defining: UPoly,
    interval: IsolInterval,
}

impl AlgNumber {
    pub fn from_rat(r: &Rat) -> Self {
        AlgNumber {
            defining: UPoly::new(vec![-r.clone(), rat(1)], Var::T),
            interval: IsolInterval { lo: r.clone(), hi: r.clone() },
        }
    }

    /// Checked constructor.
    pub fn new(defining: UPoly, interval: IsolInterval) -> Result<Self> {
        let mut k = QQ;
        let c = defining.coeffs().to_vec();
        if c.len() < 2 {
            return Err(Error::Degenerate("defining polynomial must have positive degree".into()));
        }
        let d = fpoly::derivative(&k, &c);
        if fpoly::gcd(&mut k, &c, &d).len() > 1 {
            return Err(Error::Precondition("defining polynomial is not squarefree".into()));
        }
        if interval.lo > interval.hi {
            return Err(Error::Precondition("empty interval".into()));
        }
        if interval.is_exact() {
            if !defining.eval(&interval.lo).is_zero() {
                return Err(Error::Precondition("point interval is not a root".into()));
            }
            return Ok(Self::from_rat(&interval.lo));
        }
        if defining.eval(&interval.lo).is_zero() {
            return Err(Error::EndpointRoot("lo".into()));
        }
        if defining.eval(&interval.hi).is_zero() {
            return Err(Error::EndpointRoot("hi".into()));
        }
        let seq = fpoly::sturm_sequence(&mut k, &c);
        if fpoly::count_roots_seq(&mut k, &seq, &interval.lo, &interval.hi) != 1 {
            return Err(Error::Precondition("interval does not isolate exactly one root".into()));
        }
        Ok(Self::new_unchecked(defining, interval))
    }

    /// Constructor for callers that already hold an isolating interval of
    /// a squarefree polynomial.
    pub fn new_unchecked_pub(defining: UPoly, interval: IsolInterval) -> Self {
        Self::new_unchecked(defining, interval)
    }

    pub(crate) fn new_unchecked(defining: UPoly, interval: IsolInterval) -> Self {
        if interval.is_exact() {
            return Self::from_rat(&interval.lo);
        }
        if defining.degree() == Some(1) {
            let c = defining.coeffs();
            return Self::from_rat(&(-&c[0] / &c[1]));
        }
        AlgNumber { defining, interval }
    }

    /// All real roots of a rational polynomial, increasing.
    /// Rational roots are always returned exact.
    pub fn roots_of(p: &[Rat]) -> Vec<AlgNumber> {
        let mut k = QQ;
        let sq = fpoly::squarefree(&mut k, p);
        let n = leading_of_primitive(&sq);
        fpoly::isolate_real_roots(&mut k, &sq)
            .into_iter()
            .map(|b| {
                let b = rational_root_in(&sq, b, &n);
                Self::new_unchecked(UPoly::new(sq.clone(), Var::T), b)
            })
            .collect()
    }

    pub fn from_ext(e: &Ext<QQ>) -> Self {
        match e.is_exact_rational() {
            Some(r) => Self::from_rat(&r),
            None => Self::new_unchecked(
                UPoly::new(e.modulus().to_vec(), Var::T),
                IsolInterval { lo: e.lo().clone(), hi: e.hi().clone() },
            ),
        }
    }

    pub fn to_ext(&self) -> Ext<QQ> {
        Ext::new(
            QQ,
            self.defining.coeffs().to_vec(),
            self.interval.lo.clone(),
            self.interval.hi.clone(),
        )
    }

    pub fn defining(&self) -> &UPoly {
        &self.defining
    }

    pub fn interval(&self) -> &IsolInterval {
        &self.interval
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.interval.is_exact() {
            Some(self.interval.lo.clone())
        } else {
            None
        }
    }

    pub fn refine(&self, width: &Rat) -> AlgNumber {
        if self.interval.is_exact() {
            return self.clone();
        }
        let mut k = QQ;
        let b = fpoly::refine_box(&mut k, self.defining.coeffs(), &self.interval, width);
        Self::new_unchecked(self.defining.clone(), b)
    }

    /// `-self`.
    pub fn neg(&self) -> AlgNumber {
        let c: Vec<Rat> = self
            .defining
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
            .collect();
        Self::new_unchecked(
            UPoly::new(c, Var::T),
            IsolInterval { lo: -self.interval.hi.clone(), hi: -self.interval.lo.clone() },
        )
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.refine(&(rat(1) / rat(1i64 << 52)));
        (to_f64(&r.interval.lo) + to_f64(&r.interval.hi)) / 2.0
    }

    pub fn sign(&self) -> i32 {
        self.cmp_rat(&Rat::zero()) as i32
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if let Some(a) = self.as_rational() {
            return a.cmp(r);
        }
        let mut e = self.to_ext();
        let v = e.sub(&e.gen(), &e.from_rat(r));
        e.sign(&v).cmp(&0)
    }

    /// Exact total order on real algebraic numbers.
    pub fn cmp_exact(&self, o: &AlgNumber) -> Ordering {
        if let Some(b) = o.as_rational() {
            return self.cmp_rat(&b);
        }
        if let Some(a) = self.as_rational() {
            return o.cmp_rat(&a).reverse();
        }
        if self.interval.hi <= o.interval.lo {
            return Ordering::Less;
        }
        if o.interval.hi <= self.interval.lo {
            return Ordering::Greater;
        }
        let mut ea = self.to_ext();
        let def_b = fpoly::map_rat(&ea, o.defining.coeffs());
        let def_b_lift: Vec<Vec<Rat>> = def_b.iter().map(|c| c.clone()).collect();
        let at_a = fpoly::eval(&ea, &def_b_lift, &ea.gen());
        let a_root_of_b = ea.is_zero(&at_a);
        let mut a = self.clone();
        let mut b = o.clone();
        let mut w = (&a.interval.hi - &a.interval.lo) / rat(4);
        loop {
            if a.interval.hi <= b.interval.lo {
                return Ordering::Less;
            }
            if b.interval.hi <= a.interval.lo {
                return Ordering::Greater;
            }
            if a_root_of_b && o.interval.lo < a.interval.lo && a.interval.hi < o.interval.hi {
                return Ordering::Equal;
            }
            a = a.refine(&w);
            b = b.refine(&w);
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return x.cmp(&y);
            }
            if a.as_rational().is_some() || b.as_rational().is_some() {
                return a.cmp_exact(&b);
            }
            w = w / rat(4);
        }
    }

    /// A rational strictly between `self` and a larger `o`.
    pub fn rational_between(&self, o: &AlgNumber) -> Rat {
        debug_assert_eq!(self.cmp_exact(o), Ordering::Less);
        let mut a = self.clone();
        let mut b = o.clone();
        let mut w = rat(1);
        loop {
            if a.interval.hi < b.interval.lo {
                return super::rat::simple_between(&a.interval.hi, &b.interval.lo);
            }
            if a.interval.hi == b.interval.lo && !a.interval.is_exact() && !b.interval.is_exact() {
                // shared endpoint, not a root of either
                return a.interval.hi.clone();
            }
            w = w / rat(8);
            a = a.refine(&w);
            b = b.refine(&w);
        }
    }

    /// A rational strictly below.
    pub fn rational_below(&self) -> Rat {
        match self.as_rational() {
            Some(r) => r - rat(1),
            None => self.interval.lo.floor() - rat(0),
        }
    }

    /// A rational strictly above.
    pub fn rational_above(&self) -> Rat {
        match self.as_rational() {
            Some(r) => r + rat(1),
            None => self.interval.hi.ceil(),
        }
    }
}

impl PartialEq for AlgNumber {
    fn eq(&self, o: &Self) -> bool {
        self.cmp_exact(o) == Ordering::Equal
    }
}

impl Eq for AlgNumber {}

impl PartialOrd for AlgNumber {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for AlgNumber {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_exact(o)
    }
}

impl fmt::Display for AlgNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", to_pq(&r)),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.defining,
                to_pq(&self.interval.lo),
                to_pq(&self.interval.hi)
            ),
        }
    }
}

impl serde::Serialize for AlgNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Sign of a rational value, as an integer.
pub fn rat_sign(r: &Rat) -> i32 {
    sign_of(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratq;

    fn sqrt(n: i64) -> AlgNumber {
        AlgNumber::new(
            UPoly::from_ints(&[-n, 0, 1], Var::T),
            IsolInterval { lo: rat(0), hi: rat(n + 1) },
        )
        .unwrap()
    }

    #[test]
    fn ordering() {
        let s2 = sqrt(2);
        let s3 = sqrt(3);
        assert!(s2 < s3);
        assert_eq!(s2.cmp_rat(&ratq(141, 100)), Ordering::Greater);
        // sqrt(2) as a root of (x^2-2)(x^2-3) isolated differently
        let m = UPoly::from_ints(&[6, 0, -5, 0, 1], Var::T);
        let other = AlgNumber::new(m, IsolInterval { lo: ratq(13, 10), hi: ratq(3, 2) }).unwrap();
        assert_eq!(s2, other);
        let r = s2.rational_between(&s3);
        assert!(s2.cmp_rat(&r) == Ordering::Less && s3.cmp_rat(&r) == Ordering::Greater);
    }

    #[test]
    fn rational_collapse() {
        let a = AlgNumber::new(
            UPoly::from_ints(&[-3, 1], Var::T),
            IsolInterval { lo: rat(2), hi: rat(4) },
        )
        .unwrap();
        assert_eq!(a.as_rational(), Some(rat(3)));
        assert_eq!(a.to_string(), "3/1");
    }
}

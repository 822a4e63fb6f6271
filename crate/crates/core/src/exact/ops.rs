//! Rational-coefficient front end to the exact machinery.

use super::algnum::AlgNumber;
use super::bivar;
use super::bpoly::BPoly;
use super::field::QQ;
use super::fpoly::{self, IsolInterval};
use super::rat::{rat, Rat};
use super::upoly::{UPoly, Var};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};

/// Resultant of `p` and `q` eliminating `eliminate` (`X` or `Y`).
pub fn resultant(p: &BPoly, q: &BPoly, eliminate: Var) -> Result<UPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::Degenerate("resultant of two zero polynomials".into()));
    }
    let (pp, qq, kept) = match eliminate {
        Var::Y => (p.clone(), q.clone(), Var::X),
        Var::X => (p.transpose(), q.transpose(), Var::Y),
        Var::T => return Err(Error::Precondition("can only eliminate x or y".into())),
    };
    let r = bivar::resultant_y(&mut QQ, &pp.to_dense_y(), &qq.to_dense_y());
    Ok(UPoly::new(r, kept))
}

/// Number of distinct real roots in the open interval; refuses when an
/// endpoint is itself a root.
pub fn sturm_count(p: &UPoly, iv: &IsolInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Degenerate("zero polynomial".into()));
    }
    if p.eval(&iv.lo).is_zero() {
        return Err(Error::EndpointRoot("lo".into()));
    }
    if p.eval(&iv.hi).is_zero() {
        return Err(Error::EndpointRoot("hi".into()));
    }
    if iv.lo >= iv.hi {
        return Ok(0);
    }
    let mut k = QQ;
    let sq = fpoly::squarefree(&mut k, p.coeffs());
    let seq = fpoly::sturm_sequence(&mut k, &sq);
    Ok(fpoly::count_roots_seq(&mut k, &seq, &iv.lo, &iv.hi))
}

/// Pairwise disjoint isolating intervals, one per distinct real root.
pub fn isolate_roots(p: &UPoly) -> Result<Vec<IsolInterval>> {
    if p.is_zero() {
        return Err(Error::Degenerate("zero polynomial".into()));
    }
    Ok(fpoly::isolate_real_roots(&mut QQ, p.coeffs()))
}

pub fn refine(a: &AlgNumber, width: &Rat) -> Result<AlgNumber> {
    if !width.is_positive() {
        return Err(Error::Precondition("width must be positive".into()));
    }
    Ok(a.refine(width))
}

/// `1 + max |a_i / a_n|`; zero for constants.
pub fn cauchy_root_bound(p: &UPoly) -> Rat {
    let c = p.coeffs();
    if c.len() <= 1 {
        return Rat::zero();
    }
    let lc = c.last().unwrap().abs();
    let m = c[..c.len() - 1].iter().map(|a| a.abs() / &lc).max().unwrap_or_else(Rat::zero);
    rat(1) + m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;
    use crate::exact::rat::ratq;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c, Var::X)
    }

    #[test]
    fn resultant_examples() {
        let r = resultant(&parse_poly("x - 1").unwrap(), &parse_poly("x + 1").unwrap(), Var::X)
            .unwrap();
        assert_eq!(r.coeffs(), &[rat(2)]);
        let r = resultant(&parse_poly("x^3 - y").unwrap(), &parse_poly("1").unwrap(), Var::X)
            .unwrap();
        assert_eq!(r.coeffs(), &[rat(1)]);
        let r = resultant(&parse_poly("y^2 - x").unwrap(), &parse_poly("y").unwrap(), Var::Y)
            .unwrap();
        assert_eq!(r.coeffs(), &[rat(0), rat(-1)]);
        assert!(resultant(&BPoly::zero(), &BPoly::zero(), Var::X).is_err());
    }

    #[test]
    fn sturm_examples() {
        let iv = |a: i64, b: i64| IsolInterval { lo: rat(a), hi: rat(b) };
        assert_eq!(sturm_count(&up(&[-2, 0, 1]), &iv(0, 2)).unwrap(), 1);
        assert_eq!(sturm_count(&up(&[1, 0, 1]), &iv(-10, 10)).unwrap(), 0);
        assert_eq!(sturm_count(&up(&[-6, 11, -6, 1]), &iv(0, 4)).unwrap(), 3);
        assert_eq!(sturm_count(&up(&[-1, 1]), &iv(1, 2)), Err(Error::EndpointRoot("lo".into())));
    }

    #[test]
    fn isolate_examples() {
        let r = isolate_roots(&up(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let p = up(&[-2, 0, 1]);
        for b in &r {
            assert!(p.eval(&b.lo) * p.eval(&b.hi) < rat(0));
        }
        assert!(r[0].hi <= rat(0) && r[1].lo >= rat(0));
        assert!(isolate_roots(&up(&[1, 0, 1])).unwrap().is_empty());
        let r = isolate_roots(&up(&[0, 0, 0, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].lo <= rat(0) && rat(0) <= r[0].hi);
    }

    #[test]
    fn refine_and_bound() {
        let a = AlgNumber::new(up(&[-2, 0, 1]), IsolInterval { lo: rat(1), hi: rat(2) }).unwrap();
        let b = refine(&a, &ratq(1, 8)).unwrap();
        assert!(&b.interval().hi - &b.interval().lo <= ratq(1, 8));
        assert_eq!(b, a);
        assert_eq!(cauchy_root_bound(&up(&[-4, 0, 1])), rat(5));
        assert_eq!(cauchy_root_bound(&up(&[7])), rat(0));
        assert_eq!(cauchy_root_bound(&up(&[0, -1, 0, 1])), rat(2));
    }
}

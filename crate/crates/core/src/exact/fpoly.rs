//! Dense univariate polynomials over an exact [`Field`], stored low degree
//! first. Leading coefficients may be zero until [`trim`] is called.

use super::field::Field;
use super::interval::Interval;
use super::rat::{midpoint, rat, Rat};
use num_traits::{Signed, Zero};

pub fn trim<F: Field>(k: &mut F, p: &mut Vec<F::Elem>) {
    while let Some(last) = p.last() {
        if k.is_zero(last) {
            p.pop();
        } else {
            break;
        }
    }
}

pub fn trimmed<F: Field>(k: &mut F, p: &[F::Elem]) -> Vec<F::Elem> {
    let mut v = p.to_vec();
    trim(k, &mut v);
    v
}

/// Degree after trimming; `None` for the zero polynomial.
pub fn degree<F: Field>(k: &mut F, p: &[F::Elem]) -> Option<usize> {
    let t = trimmed(k, p);
    if t.is_empty() {
        None
    } else {
        Some(t.len() - 1)
    }
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => k.neg(y),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn neg<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|c| k.neg(c)).collect()
}

pub fn scale<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    a.iter().map(|x| k.mul(x, c)).collect()
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_trivially_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if k.is_trivially_zero(y) {
                continue;
            }
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    out
}

pub fn pow<F: Field>(k: &F, a: &[F::Elem], e: u32) -> Vec<F::Elem> {
    let mut r = vec![k.one()];
    for _ in 0..e {
        r = mul(k, &r, a);
    }
    r
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_rat(&rat(i as i64))))
        .collect()
}

/// Remainder modulo a monic polynomial; needs no zero tests.
pub fn rem_monic<F: Field>(k: &F, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let top = r.pop().unwrap();
        let shift = r.len() - dm;
        for (i, mc) in m.iter().take(dm).enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&top, mc));
        }
    }
    r
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(
    k: &mut F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let b = trimmed(k, b);
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trimmed(k, a);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv_lc = k.inv(b.last().unwrap());
    let mut q = vec![k.zero(); r.len() - db];
    while r.len() > db {
        let top = r.pop().unwrap();
        if k.is_trivially_zero(&top) {
            continue;
        }
        let c = k.mul(&top, &inv_lc);
        let shift = r.len() - db;
        for (i, bc) in b.iter().take(db).enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, bc));
        }
        q[shift] = c;
    }
    trim(k, &mut r);
    (q, r)
}

pub fn rem<F: Field>(k: &mut F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(k, a, b).1
}

/// Exact quotient; panics in debug builds when the division leaves a remainder.
pub fn exact_div<F: Field>(k: &mut F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (q, r) = divrem(k, a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub fn monic<F: Field>(k: &mut F, a: &[F::Elem]) -> Vec<F::Elem> {
    let a = trimmed(k, a);
    match a.last() {
        None => a,
        Some(lc) => {
            let i = k.inv(lc);
            let mut out = scale(k, &a, &i);
            *out.last_mut().unwrap() = k.one();
            out
        }
    }
}

/// Monic greatest common divisor (zero when both inputs are zero).
pub fn gcd<F: Field>(k: &mut F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = trimmed(k, a);
    let mut b = trimmed(k, b);
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = monic(k, &r);
    }
    monic(k, &a)
}

/// `(g, u, v)` with `u a + v b = g`, `g` the monic gcd.
pub fn ext_gcd<F: Field>(
    k: &mut F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let (mut r0, mut r1) = (trimmed(k, a), trimmed(k, b));
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let i = k.inv(r0.last().unwrap());
    (
        monic(k, &r0),
        trimmed(k, &scale(k, &s0, &i)),
        trimmed(k, &scale(k, &t0, &i)),
    )
}

/// The squarefree part `p / gcd(p, p')`, made monic.
pub fn squarefree<F: Field>(k: &mut F, p: &[F::Elem]) -> Vec<F::Elem> {
    let p = trimmed(k, p);
    if p.len() <= 1 {
        return monic(k, &p);
    }
    let d = derivative(k, &p);
    let g = gcd(k, &p, &d);
    let q = exact_div(k, &p, &g);
    monic(k, &q)
}

pub fn eval<F: Field>(k: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = k.zero();
    for c in p.iter().rev() {
        acc = k.add(&k.mul(&acc, x), c);
    }
    acc
}

pub fn eval_rat<F: Field>(k: &mut F, p: &[F::Elem], r: &Rat) -> F::Elem {
    let x = k.from_rat(r);
    eval(k, p, &x)
}

pub fn sign_at_rat<F: Field>(k: &mut F, p: &[F::Elem], r: &Rat) -> i32 {
    k.poly_sign_at(p, r)
}

/// Sign as `x -> +inf` (`positive`) or `x -> -inf`.
pub fn sign_at_inf<F: Field>(k: &mut F, p: &[F::Elem], positive: bool) -> i32 {
    let p = trimmed(k, p);
    match p.last() {
        None => 0,
        Some(lc) => {
            let s = k.sign(lc);
            if !positive && (p.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sturm sequence of `p`, each term scaled by a positive constant.
pub fn sturm_sequence<F: Field>(k: &mut F, p: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let p = trimmed(k, p);
    if p.is_empty() {
        return Vec::new();
    }
    let mut seq = vec![normalize_positive(k, &p)];
    let d = trimmed(k, &derivative(k, &p));
    if d.is_empty() {
        return seq;
    }
    seq.push(normalize_positive(k, &d));
    loop {
        let n = seq.len();
        let r = rem(k, &seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        let r = neg(k, &r);
        seq.push(normalize_positive(k, &r));
    }
    seq
}

fn normalize_positive<F: Field>(k: &mut F, p: &[F::Elem]) -> Vec<F::Elem> {
    let lc = p.last().unwrap().clone();
    let s = k.sign(&lc);
    let i = k.inv(&lc);
    let f = if s < 0 { k.neg(&i) } else { i };
    scale(k, p, &f)
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

pub fn variations_at<F: Field>(k: &mut F, seq: &[Vec<F::Elem>], r: &Rat) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at_rat(k, p, r)).collect();
    variations(signs.into_iter())
}

pub fn variations_at_inf<F: Field>(k: &mut F, seq: &[Vec<F::Elem>], positive: bool) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| sign_at_inf(k, p, positive)).collect();
    variations(signs.into_iter())
}

/// Number of distinct real roots in `(a, b]` (`a` must not be a root).
pub fn count_roots_seq<F: Field>(k: &mut F, seq: &[Vec<F::Elem>], a: &Rat, b: &Rat) -> usize {
    if seq.is_empty() {
        return 0;
    }
    let va = variations_at(k, seq, a);
    let vb = variations_at(k, seq, b);
    va.saturating_sub(vb)
}

pub fn count_all_roots<F: Field>(k: &mut F, seq: &[Vec<F::Elem>]) -> usize {
    if seq.is_empty() {
        return 0;
    }
    let a = variations_at_inf(k, seq, false);
    let b = variations_at_inf(k, seq, true);
    a.saturating_sub(b)
}

/// Rational bound `B` with every real root strictly inside `(-B, B)`.
pub fn root_bound<F: Field>(k: &mut F, p: &[F::Elem]) -> Rat {
    let p = trimmed(k, p);
    if p.len() <= 1 {
        return rat(1);
    }
    let n = p.len() - 1;
    let w = rat(1) / rat(1 << 20);
    let lc = k.enclose(&p[n], &w);
    let mut lc_min = lc.abs_min();
    let mut w2 = w.clone();
    while lc_min.is_zero() {
        w2 = &w2 / rat(1 << 10);
        lc_min = k.enclose(&p[n], &w2).abs_min();
    }
    let mut m = Rat::zero();
    for c in &p[..n] {
        let a = k.enclose(c, &w).abs_max();
        if a > m {
            m = a;
        }
    }
    rat(1) + m / lc_min + rat(1)
}

/// An isolating box for a real root: `lo == hi` is an exact rational root;
/// otherwise exactly one root lies in the open interval and neither
/// endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl IsolInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }
}

/// Isolate all real roots of `p` (any multiplicity), in increasing order.
pub fn isolate_real_roots<F: Field>(k: &mut F, p: &[F::Elem]) -> Vec<IsolInterval> {
    let p = trimmed(k, p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let sq = squarefree(k, &p);
    let seq = sturm_sequence(k, &sq);
    let b = root_bound(k, &sq);
    let mut out = Vec::new();
    isolate_in(k, &sq, &seq, -b.clone(), b, &mut out);
    out
}

/// Isolate the roots of a squarefree polynomial inside `(lo, hi)`; neither
/// endpoint may be a root.
pub fn isolate_in<F: Field>(
    k: &mut F,
    sq: &[F::Elem],
    seq: &[Vec<F::Elem>],
    lo: Rat,
    hi: Rat,
    out: &mut Vec<IsolInterval>,
) {
    let n = count_roots_seq(k, seq, &lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(IsolInterval { lo, hi });
        return;
    }
    let mid = midpoint(&lo, &hi);
    if sign_at_rat(k, sq, &mid) == 0 {
        let eps = (&hi - &lo) / rat(1024);
        let mut e = eps;
        let (a, b) = loop {
            let a = &mid - &e;
            let b = &mid + &e;
            if sign_at_rat(k, sq, &a) != 0
                && sign_at_rat(k, sq, &b) != 0
                && count_roots_seq(k, seq, &a, &b) == 1
            {
                break (a, b);
            }
            e = e / rat(2);
        };
        isolate_in(k, sq, seq, lo, a, out);
        out.push(IsolInterval { lo: mid.clone(), hi: mid });
        isolate_in(k, sq, seq, b, hi, out);
    } else {
        isolate_in(k, sq, seq, lo, mid.clone(), out);
        isolate_in(k, sq, seq, mid, hi, out);
    }
}

/// Shrink a root box of the squarefree `sq` to width at most `width`.
pub fn refine_box<F: Field>(k: &mut F, sq: &[F::Elem], b: &IsolInterval, width: &Rat) -> IsolInterval {
    let (mut lo, mut hi) = (b.lo.clone(), b.hi.clone());
    if lo == hi {
        return b.clone();
    }
    let s_lo = sign_at_rat(k, sq, &lo);
    while &hi - &lo > *width {
        let mid = midpoint(&lo, &hi);
        let s = sign_at_rat(k, sq, &mid);
        if s == 0 {
            return IsolInterval { lo: mid.clone(), hi: mid };
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolInterval { lo, hi }
}

pub fn map_rat<F: Field>(k: &F, p: &[Rat]) -> Vec<F::Elem> {
    p.iter().map(|c| k.from_rat(c)).collect()
}

pub fn abs_rat(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{Ext, QQ};

    fn q(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn gcd_and_division() {
        let mut k = QQ;
        // (x-1)(x+2) and (x-1)(x-3)
        let a = mul(&k, &q(&[-1, 1]), &q(&[2, 1]));
        let b = mul(&k, &q(&[-1, 1]), &q(&[-3, 1]));
        assert_eq!(gcd(&mut k, &a, &b), q(&[-1, 1]));
        let (g, u, v) = ext_gcd(&mut k, &q(&[-1, 1]), &q(&[1, 1]));
        assert_eq!(g, q(&[1]));
        let lhs = add(&k, &mul(&k, &u, &q(&[-1, 1])), &mul(&k, &v, &q(&[1, 1])));
        assert_eq!(trimmed(&mut k, &lhs), q(&[1]));
    }

    #[test]
    fn sturm_counts() {
        let mut k = QQ;
        // x^3 - x has roots -1, 0, 1
        let p = q(&[0, -1, 0, 1]);
        let seq = sturm_sequence(&mut k, &p);
        assert_eq!(count_all_roots(&mut k, &seq), 3);
        let boxes = isolate_real_roots(&mut k, &p);
        assert_eq!(boxes.len(), 3);
        assert!(boxes[1].is_exact());
        // x^2 + 1 has none
        let seq = sturm_sequence(&mut k, &q(&[1, 0, 1]));
        assert_eq!(count_all_roots(&mut k, &seq), 0);
    }

    #[test]
    fn sqrt2_arithmetic() {
        let mut e = Ext::new(QQ, q(&[-2, 0, 1]), rat(1), rat(2));
        let s = e.gen();
        let s2 = e.mul(&s, &s);
        let two = e.from_rat(&rat(2));
        assert!(e.is_zero(&e.sub(&s2, &two)));
        let d = e.sub(&s, &e.from_rat(&crate::exact::rat::ratq(141, 100)));
        assert_eq!(e.sign(&d), 1);
        let inv = e.inv(&s);
        let one = e.mul(&inv, &s);
        assert!(e.is_zero(&e.sub(&one, &e.one())));
    }

    #[test]
    fn splitting_keeps_value() {
        // (x^2-2)(x-5): root sqrt(2) isolated in (1, 2)
        let m = mul(&QQ, &q(&[-2, 0, 1]), &q(&[-5, 1]));
        let mut e = Ext::new(QQ, m, rat(1), rat(2));
        let c = e.gen();
        let z = e.sub(&c, &e.from_rat(&rat(5)));
        assert!(!e.is_zero(&z));
        assert_eq!(e.modulus().len(), 3);
        let sq = e.sub(&e.mul(&c, &c), &e.from_rat(&rat(2)));
        assert!(e.is_zero(&sq));
    }

    #[test]
    fn tower_sign() {
        // c = sqrt(2), d = root of y^2 - c in (1, 2), i.e. 2^(1/4)
        let base = Ext::new(QQ, q(&[-2, 0, 1]), rat(1), rat(2));
        let c = base.gen();
        let m = vec![base.neg(&c), base.zero(), base.one()];
        let mut t = Ext::new(base, m, rat(1), rat(2));
        let d = t.gen();
        // d^4 - 2 == 0
        let d2 = t.mul(&d, &d);
        let d4 = t.mul(&d2, &d2);
        assert!(t.is_zero(&t.sub(&d4, &t.from_rat(&rat(2)))));
        // 2^(1/4) ~ 1.1892 > 1.189
        let v = t.sub(&d, &t.from_rat(&crate::exact::rat::ratq(1189, 1000)));
        assert_eq!(t.sign(&v), 1);
        let v = t.sub(&d, &t.from_rat(&crate::exact::rat::ratq(1190, 1000)));
        assert_eq!(t.sign(&v), -1);
    }
}

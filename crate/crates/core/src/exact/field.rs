//! Exact real fields: the rationals and towers of simple real algebraic
//! extensions over them.
//!
//! An [`Ext`] represents `F(c)` for one *real* root `c` of a squarefree
//! polynomial with coefficients in `F`, pinned by an isolating interval.
//! Zero tests use dynamic evaluation: when an element shares a factor with
//! the modulus, the modulus is replaced by whichever factor still vanishes
//! at `c`. Every mutating call therefore only sharpens the representation;
//! the value of every element is unchanged.

use super::fpoly;
use super::interval::Interval;
use super::rat::{midpoint, rat, sign_of, to_f64, Rat};
use num_traits::{One, Zero};
use std::fmt::Debug;

pub trait Field: Clone + Debug {
    type Elem: Clone + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&mut self, a: &Self::Elem) -> bool;
    /// Exact sign of the real value of `a`.
    fn sign(&mut self, a: &Self::Elem) -> i32;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&mut self, a: &Self::Elem) -> Self::Elem;
    /// Rational interval of width at most `width` containing the value of `a`.
    fn enclose(&mut self, a: &Self::Elem, width: &Rat) -> Interval;

    /// True when the element is syntactically zero (cheap, no refinement).
    fn is_trivially_zero(&self, a: &Self::Elem) -> bool;

    /// Sign of the polynomial `p` (coefficients low to high) at `r`.
    fn poly_sign_at(&mut self, p: &[Self::Elem], r: &Rat) -> i32 {
        let x = self.from_rat(r);
        let v = fpoly::eval(self, p, &x);
        self.sign(&v)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct QQ;

impl Field for QQ {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn is_zero(&mut self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn sign(&mut self, a: &Rat) -> i32 {
        sign_of(a)
    }
    fn inv(&mut self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn enclose(&mut self, a: &Rat, _width: &Rat) -> Interval {
        Interval::point(a.clone())
    }
    fn is_trivially_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn poly_sign_at(&mut self, p: &[Rat], r: &Rat) -> i32 {
        if let Some(s) = float_sign_at(p, r) {
            return s;
        }
        let v = fpoly::eval(self, p, r);
        sign_of(&v)
    }
}

/// Sign of `p(r)` from a floating point Horner evaluation, when the
/// value clears its error bound.
fn float_sign_at(p: &[Rat], r: &Rat) -> Option<i32> {
    const TINY: f64 = 1e-250;
    let ok = |v: f64| v.is_finite() && (v == 0.0 || v.abs() > TINY);
    let x = to_f64(r);
    if !ok(x) {
        return None;
    }
    let (mut acc, mut mag) = (0.0f64, 0.0f64);
    for c in p.iter().rev() {
        let a = to_f64(c);
        if !ok(a) {
            return None;
        }
        acc = acc * x + a;
        mag = mag * x.abs() + a.abs();
    }
    if !mag.is_finite() {
        return None;
    }
    let n = p.len() as f64;
    let bound = 8.0 * (n + 2.0) * f64::EPSILON * mag + n * 1e-300;
    if acc > bound {
        Some(1)
    } else if acc < -bound {
        Some(-1)
    } else {
        None
    }
}

/// `F(c)` with `c` a real root of `modulus`, isolated in `[lo, hi]`.
///
/// Invariants: `modulus` is monic and squarefree over `F`; either
/// `lo == hi == c`, or `c` is the only root of `modulus` in the open
/// interval `(lo, hi)` and neither endpoint is a root.
#[derive(Clone, Debug)]
pub struct Ext<F: Field> {
    pub base: F,
    modulus: Vec<F::Elem>,
    lo: Rat,
    hi: Rat,
}

impl<F: Field> Ext<F> {
    /// Builds the extension. `modulus` must be squarefree with exactly one
    /// root in `(lo, hi)` (or `lo == hi` a root).
    pub fn new(mut base: F, modulus: Vec<F::Elem>, lo: Rat, hi: Rat) -> Self {
        let mut m = modulus;
        fpoly::trim(&mut base, &mut m);
        assert!(m.len() >= 2, "modulus must have positive degree");
        let m = fpoly::monic(&mut base, &m);
        let mut e = Ext { base, modulus: m, lo, hi };
        if e.lo == e.hi {
            e.collapse_to_point();
        }
        e
    }

    /// `F(r)` for a rational `r`: the generator is the rational itself.
    pub fn rational(base: F, r: &Rat) -> Self {
        let m = vec![base.neg(&base.from_rat(r)), base.one()];
        Ext { base, modulus: m, lo: r.clone(), hi: r.clone() }
    }

    pub fn modulus(&self) -> &[F::Elem] {
        &self.modulus
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_exact_rational(&self) -> Option<Rat> {
        if self.lo == self.hi {
            Some(self.lo.clone())
        } else {
            None
        }
    }

    /// The generator `c` as an element.
    pub fn gen(&self) -> Vec<F::Elem> {
        vec![self.base.zero(), self.base.one()]
    }

    pub fn lift(&self, a: &F::Elem) -> Vec<F::Elem> {
        vec![a.clone()]
    }

    fn collapse_to_point(&mut self) {
        let r = self.lo.clone();
        self.modulus = vec![self.base.neg(&self.base.from_rat(&r)), self.base.one()];
    }

    fn modulus_sign_at(&mut self, r: &Rat) -> i32 {
        fpoly::sign_at_rat(&mut self.base, &self.modulus, r)
    }

    /// Bisect until the isolating interval is no wider than `width`.
    pub fn refine(&mut self, width: &Rat) {
        if self.lo == self.hi {
            return;
        }
        let mut s_lo = self.modulus_sign_at(&self.lo.clone());
        while &self.hi - &self.lo > *width {
            let mid = midpoint(&self.lo, &self.hi);
            let s_mid = self.modulus_sign_at(&mid);
            if s_mid == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                self.collapse_to_point();
                return;
            }
            if s_mid == s_lo {
                self.lo = mid;
                s_lo = s_mid;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn reduce(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        fpoly::rem_monic(&self.base, a, &self.modulus)
    }

    /// Does the generator annihilate `g` (a divisor of the modulus)?
    fn root_of_divisor(&mut self, g: &[F::Elem]) -> bool {
        if self.lo == self.hi {
            let v = fpoly::eval_rat(&mut self.base, g, &self.lo.clone());
            return self.base.is_zero(&v);
        }
        let seq = fpoly::sturm_sequence(&mut self.base, g);
        let (lo, hi) = (self.lo.clone(), self.hi.clone());
        fpoly::count_roots_seq(&mut self.base, &seq, &lo, &hi) == 1
    }
}

impl<F: Field> Field for Ext<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.base.one()]
    }
    fn from_rat(&self, r: &Rat) -> Self::Elem {
        vec![self.base.from_rat(r)]
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        fpoly::add(&self.base, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        fpoly::sub(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p = fpoly::mul(&self.base, a, b);
        fpoly::rem_monic(&self.base, &p, &self.modulus)
    }

    fn is_zero(&mut self, a: &Self::Elem) -> bool {
        let mut r = self.reduce(a);
        fpoly::trim(&mut self.base, &mut r);
        if r.is_empty() {
            return true;
        }
        if r.len() == 1 {
            return false;
        }
        let m = self.modulus.clone();
        let g = fpoly::gcd(&mut self.base, &m, &r);
        if g.len() <= 1 {
            return false;
        }
        if self.root_of_divisor(&g) {
            self.modulus = g;
            true
        } else {
            let q = fpoly::exact_div(&mut self.base, &m, &g);
            self.modulus = fpoly::monic(&mut self.base, &q);
            false
        }
    }

    fn sign(&mut self, a: &Self::Elem) -> i32 {
        let a = self.reduce(a);
        // cheap enclosures first, the exact zero test only when they fail
        let mut w = rat(1);
        for _ in 0..4 {
            if let Some(s) = self.enclose(&a, &w).definite_sign() {
                return s;
            }
            w = w / rat(256);
        }
        if self.is_zero(&a) {
            return 0;
        }
        loop {
            let iv = self.enclose(&a, &w);
            if let Some(s) = iv.definite_sign() {
                if s != 0 {
                    return s;
                }
            }
            w = w / rat(16);
        }
    }

    fn inv(&mut self, a: &Self::Elem) -> Self::Elem {
        assert!(!self.is_zero(a), "inverse of zero in extension");
        let r = self.reduce(a);
        let m = self.modulus.clone();
        let (g, u, _v) = fpoly::ext_gcd(&mut self.base, &r, &m);
        debug_assert_eq!(g.len(), 1);
        // g is monic, hence one
        self.reduce(&u)
    }

    fn enclose(&mut self, a: &Self::Elem, width: &Rat) -> Interval {
        let a = self.reduce(a);
        if a.is_empty() {
            return Interval::point(Rat::zero());
        }
        let mut w = width / rat(4);
        loop {
            let x = Interval::new(self.lo.clone(), self.hi.clone());
            let mut acc = Interval::point(Rat::zero());
            for c in a.iter().rev() {
                let ci = self.base.enclose(c, &w);
                acc = acc.mul(&x).add(&ci);
            }
            if acc.width() <= *width {
                return acc;
            }
            self.refine(&w);
            w = w / rat(4);
        }
    }

    fn is_trivially_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_trivially_zero(c))
    }
}

/// Compare the values of two elements living in (possibly) different
/// fields. Requires that they are not equal, or returns `None` after the
/// enclosures shrink below `give_up`.
pub fn compare_distinct<A: Field, B: Field>(
    fa: &mut A,
    a: &A::Elem,
    fb: &mut B,
    b: &B::Elem,
    give_up: &Rat,
) -> Option<i32> {
    let mut w = rat(1);
    loop {
        let ia = fa.enclose(a, &w);
        let ib = fb.enclose(b, &w);
        if ia.hi < ib.lo {
            return Some(-1);
        }
        if ib.hi < ia.lo {
            return Some(1);
        }
        if w < *give_up {
            return None;
        }
        w = w / rat(16);
    }
}

/// Convenience: an element of `F(c)` from a polynomial in `c` with rational
/// coefficients.
pub fn ext_from_rat_poly<F: Field>(e: &Ext<F>, coeffs: &[Rat]) -> Vec<F::Elem> {
    coeffs.iter().map(|c| e.base.from_rat(c)).collect()
}

impl<F: Field> Ext<F> {
    /// Sign of `p(c)` for a polynomial with coefficients in the base field.
    pub fn sign_of_poly(&mut self, p: &[F::Elem]) -> i32 {
        self.sign(&p.to_vec())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        midpoint(&self.lo, &self.hi)
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }
}

//! Certified real solutions of a bivariate system `P = Q = 0`.
//!
//! Each solution is a point `(c, d)` with `c` a real root of the squarefree
//! eliminant `Res_y(P, Q)` and `d` a real root of `gcd(P(c, y), Q(c, y))`
//! over `Q(c)`. The pair is held as the tower `Q(c)(d)`, so the sign of
//! any rational polynomial at the point is decided exactly.

use super::algnum::AlgNumber;
use super::bivar;
use super::bpoly::BPoly;
use super::field::{Ext, Field, QQ};
use super::fpoly;
use super::interval::Interval;
use super::rat::{midpoint, rat, to_f64, Rat};
use crate::error::{Error, Result};
use num_traits::Zero;

pub type PointField = Ext<Ext<QQ>>;

#[derive(Clone, Debug)]
pub struct PlanePoint {
    field: PointField,
}

impl PlanePoint {
    fn new(field: PointField) -> Self {
        PlanePoint { field }
    }

    /// Element of the point field for `p(x, y)` at the point.
    pub fn element(&self, p: &BPoly) -> Vec<Vec<Rat>> {
        bivar::at_generator(&self.field.base, &p.to_dense_y())
    }

    pub fn sign_of(&mut self, p: &BPoly) -> i32 {
        let e = self.element(p);
        self.field.sign(&e)
    }

    pub fn field_mut(&mut self) -> &mut PointField {
        &mut self.field
    }

    pub fn field(&self) -> &PointField {
        &self.field
    }

    /// Enclosure of `p` at the point, of width at most `width`.
    pub fn enclose(&mut self, p: &BPoly, width: &Rat) -> Interval {
        let e = self.element(p);
        self.field.enclose(&e, width)
    }

    pub fn refine(&mut self, width: &Rat) {
        self.field.base.refine(width);
        self.field.refine(width);
    }

    pub fn x_interval(&self) -> Interval {
        self.field.base.interval()
    }

    pub fn y_interval(&self) -> Interval {
        self.field.interval()
    }

    pub fn x_alg(&self) -> AlgNumber {
        AlgNumber::from_ext(&self.field.base)
    }

    pub fn to_f64(&mut self) -> (f64, f64) {
        let w = rat(1) / rat(1 << 30);
        self.refine(&w);
        let xi = self.x_interval();
        let yi = self.y_interval();
        (
            (to_f64(&xi.lo) + to_f64(&xi.hi)) / 2.0,
            (to_f64(&yi.lo) + to_f64(&yi.hi)) / 2.0,
        )
    }

    /// `p` at the point as an algebraic number, via the norm of the tower
    /// element over the rationals.
    pub fn value_of(&mut self, p: &BPoly) -> AlgNumber {
        let e = self.element(p);
        if let Some(r) = self.field.is_exact_rational() {
            if let Some(s) = self.field.base.is_exact_rational() {
                return AlgNumber::from_rat(&p.eval(&s, &r));
            }
        }
        let base = self.field.base.clone();
        let mut kb = base.clone();
        // over K = Q(c): rows indexed by y, each row a polynomial in t
        let g = self.field.modulus().to_vec();
        let a: Vec<Vec<Vec<Rat>>> = g.iter().map(|c| vec![c.clone()]).collect();
        let mut b: Vec<Vec<Vec<Rat>>> = e.iter().map(|c| vec![kb.neg(c)]).collect();
        if b.is_empty() {
            b.push(vec![Vec::new()]);
        }
        b[0].push(kb.one());
        let n1 = bivar::resultant_y(&mut kb, &a, &b);
        // over Q: rows indexed by c, each row a polynomial in t
        let m = base.modulus().to_vec();
        let ma: Vec<Vec<Rat>> = m.iter().map(|c| vec![c.clone()]).collect();
        let width = n1.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut nb: Vec<Vec<Rat>> = vec![Vec::new(); width];
        for (ti, coeff) in n1.iter().enumerate() {
            for (ci, r) in coeff.iter().enumerate() {
                if nb[ci].len() <= ti {
                    nb[ci].resize(ti + 1, Rat::zero());
                }
                nb[ci][ti] = r.clone();
            }
        }
        let mut q = QQ;
        let n2 = bivar::resultant_y(&mut q, &ma, &nb);
        let mut roots = AlgNumber::roots_of(&n2);
        let mut w = rat(1);
        loop {
            roots = roots.iter().map(|r| r.refine(&w)).collect();
            let iv = self.field.enclose(&e, &w);
            let hits: Vec<&AlgNumber> = roots
                .iter()
                .filter(|r| {
                    let b = r.interval();
                    b.lo <= iv.hi && iv.lo <= b.hi
                })
                .collect();
            if hits.len() == 1 {
                return hits[0].clone();
            }
            w = w / rat(16);
        }
    }

    /// Is the point also a zero of `p`?
    pub fn is_zero_of(&mut self, p: &BPoly) -> bool {
        let e = self.element(p);
        self.field.is_zero(&e)
    }
}

fn has_real_roots(p: &[Rat]) -> bool {
    !fpoly::isolate_real_roots(&mut QQ, p).is_empty()
}

/// Real zeros of a single polynomial, required to be finite.
fn finite_zeros(g: &BPoly) -> Result<Vec<PlanePoint>> {
    let mut k = QQ;
    let d = bivar::squarefree(&mut k, &g.to_dense_y());
    let c = bivar::content(&mut k, &d);
    if has_real_roots(&c) {
        return Err(Error::InfiniteCriticalSet("solution set contains a vertical line".into()));
    }
    let pp = bivar::primitive_part(&mut k, &d);
    if pp.len() <= 1 {
        return Ok(Vec::new());
    }
    let py = bivar::deriv_y(&k, &pp);
    let disc = bivar::resultant_y(&mut k, &pp, &py);
    let lc = pp.last().unwrap().clone();
    let crit = fpoly::mul(&k, &disc, &lc);
    let boxes = fpoly::isolate_real_roots(&mut k, &crit);
    let mut samples = Vec::new();
    if boxes.is_empty() {
        samples.push(rat(0));
    } else {
        samples.push(&boxes[0].lo - rat(1));
        for w in boxes.windows(2) {
            samples.push(midpoint(&w[0].hi, &w[1].lo));
        }
        samples.push(&boxes.last().unwrap().hi + rat(1));
    }
    for s in &samples {
        let fib = bivar::eval_x(&k, &pp, s);
        if has_real_roots(&fib) {
            return Err(Error::InfiniteCriticalSet("solution set contains a curve".into()));
        }
    }
    let ppb = BPoly::from_dense_y(&pp);
    let pyb = BPoly::from_dense_y(&py);
    solve_coprime(&ppb, &pyb)
}

fn solve_coprime(p: &BPoly, q: &BPoly) -> Result<Vec<PlanePoint>> {
    let mut k = QQ;
    let pd = p.to_dense_y();
    let qd = q.to_dense_y();
    let r = bivar::resultant_y(&mut k, &pd, &qd);
    if r.is_empty() {
        return Err(Error::InfiniteCriticalSet("eliminant vanishes identically".into()));
    }
    let rs = fpoly::squarefree(&mut k, &r);
    let mut out = Vec::new();
    for b in fpoly::isolate_real_roots(&mut k, &rs) {
        let mut base = Ext::new(QQ, rs.clone(), b.lo.clone(), b.hi.clone());
        let mut pc = bivar::at_generator(&base, &pd);
        let mut qc = bivar::at_generator(&base, &qd);
        fpoly::trim(&mut base, &mut pc);
        fpoly::trim(&mut base, &mut qc);
        if pc.is_empty() && qc.is_empty() {
            return Err(Error::InfiniteCriticalSet("solution set contains a vertical line".into()));
        }
        let g = fpoly::gcd(&mut base, &pc, &qc);
        if g.len() <= 1 {
            continue;
        }
        for yb in fpoly::isolate_real_roots(&mut base, &g) {
            let f = Ext::new(base.clone(), g.clone(), yb.lo.clone(), yb.hi.clone());
            out.push(PlanePoint::new(f));
        }
    }
    Ok(out)
}

/// All real solutions of `P = Q = 0`, or an error when the real solution
/// set is infinite.
pub fn solve_system(p: &BPoly, q: &BPoly) -> Result<Vec<PlanePoint>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InfiniteCriticalSet("both equations vanish identically".into()));
    }
    if p.is_zero() {
        return finite_zeros(q);
    }
    if q.is_zero() {
        return finite_zeros(p);
    }
    let mut k = QQ;
    let pd = p.to_dense_y();
    let qd = q.to_dense_y();
    let g = bivar::gcd(&mut k, &pd, &qd);
    let is_unit = g.len() == 1 && g[0].len() == 1;
    if is_unit {
        return solve_coprime(p, q);
    }
    let gb = BPoly::from_dense_y(&g);
    let p1 = BPoly::from_dense_y(&bivar::exact_div(&mut k, &pd, &g));
    let q1 = BPoly::from_dense_y(&bivar::exact_div(&mut k, &qd, &g));
    let mut pts = solve_system(&p1, &q1)?;
    for mut z in finite_zeros(&gb)? {
        if !(z.is_zero_of(&p1) && z.is_zero_of(&q1)) {
            pts.push(z);
        }
    }
    Ok(pts)
}

/// Refine all points until their boxes are pairwise disjoint and each box
/// is narrower than `width`.
pub fn separate(points: &mut [PlanePoint], width: &Rat) {
    let mut w = width.clone();
    loop {
        for p in points.iter_mut() {
            p.refine(&w);
        }
        let mut ok = true;
        'outer: for i in 0..points.len() {
            for j in i + 1..points.len() {
                let (a, b) = (&points[i], &points[j]);
                if a.x_interval().overlaps(&b.x_interval()) && a.y_interval().overlaps(&b.y_interval()) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            return;
        }
        w = w / rat(4);
    }
}

/// Upper bound on `|x| + |y|` over all given points.
pub fn l1_bound(points: &[PlanePoint]) -> Rat {
    let mut m = Rat::zero();
    for p in points {
        let v = p.x_interval().abs_max() + p.y_interval().abs_max();
        if v > m {
            m = v;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn solve(a: &str, b: &str) -> Result<Vec<PlanePoint>> {
        solve_system(&parse_poly(a).unwrap(), &parse_poly(b).unwrap())
    }

    #[test]
    fn simple_systems() {
        let pts = solve("3*x^2 - 3", "2*y").unwrap();
        assert_eq!(pts.len(), 2);
        let pts = solve("x^2 + y^2 - 1", "x - y").unwrap();
        assert_eq!(pts.len(), 2);
        for mut p in pts {
            let (x, y) = p.to_f64();
            assert!((x - y).abs() < 1e-6 && (x * x - 0.5).abs() < 1e-6);
        }
        assert!(solve("2*x*y - 1", "x^2").unwrap().is_empty());
    }

    #[test]
    fn infinite_and_corner_cases() {
        assert!(matches!(solve("x*y", "x"), Err(Error::InfiniteCriticalSet(_))));
        // common factor with a single real zero
        let pts = solve("x*(x^2 + y^2)", "y*(x^2 + y^2)").unwrap();
        assert_eq!(pts.len(), 1);
        // one equation vanishes; the other has no real zeros
        assert!(solve("0", "3*y^2 + 1").unwrap().is_empty());
        assert!(solve("0", "y^2").is_err());
    }

    #[test]
    fn exact_signs_at_points() {
        let mut pts = solve("x^2 - 2", "y - x").unwrap();
        for p in pts.iter_mut() {
            assert!(p.is_zero_of(&parse_poly("x*y - 2").unwrap()));
            let s = p.sign_of(&parse_poly("x").unwrap());
            assert_eq!(s, p.sign_of(&parse_poly("y").unwrap()));
        }
    }
}

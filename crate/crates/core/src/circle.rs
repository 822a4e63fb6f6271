//! Curves cut by circles, winding numbers, local degrees and the degree of
//! the gradient at infinity.
//!
//! A circle of center `a` and radius `R` is parametrized by
//! `x = a1 + R (1 - t^2)/(1 + t^2)`, `y = a2 + 2 R t/(1 + t^2)`, which runs
//! counterclockwise from `(a1 + R, a2)` at `t = 0` and reaches the antipode
//! `(a1 - R, a2)` only as `t -> ±inf`.

use crate::error::{Error, Result};
use crate::exact::bivar::{self, Bi};
use crate::exact::field::{Ext, Field, QQ};
use crate::exact::fpoly::{self, IsolInterval};
use crate::exact::interval::Interval;
use crate::exact::rat::{midpoint, rat, sign_of, to_f64, Rat};
use crate::exact::system::{self, PlanePoint};
use crate::exact::{AlgNumber, BPoly, UPoly, Var};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: (Rat, Rat),
    pub radius: Rat,
}

impl Circle {
    pub fn new(center: (Rat, Rat), radius: Rat) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::Precondition("circle radius must be positive".into()));
        }
        Ok(Circle { center, radius })
    }

    pub fn centered(radius: Rat) -> Self {
        Circle { center: (rat(0), rat(0)), radius }
    }

    pub fn antipode(&self) -> (Rat, Rat) {
        (&self.center.0 - &self.radius, self.center.1.clone())
    }

    pub fn point_at(&self, t: &Rat) -> (Rat, Rat) {
        let w = rat(1) + t * t;
        (
            &self.center.0 + &self.radius * (rat(1) - t * t) / &w,
            &self.center.1 + &self.radius * rat(2) * t / &w,
        )
    }

    pub fn point_f64(&self, t: f64) -> (f64, f64) {
        let w = 1.0 + t * t;
        let r = to_f64(&self.radius);
        (to_f64(&self.center.0) + r * (1.0 - t * t) / w, to_f64(&self.center.1) + r * 2.0 * t / w)
    }

    pub fn with_radius(&self, radius: Rat) -> Circle {
        Circle { center: self.center.clone(), radius }
    }
}

pub(crate) fn total_degree<K: Field>(k: &K, p: &Bi<K::Elem>) -> usize {
    let mut d = 0;
    for (j, row) in p.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if !k.is_trivially_zero(c) {
                d = d.max(i + j);
            }
        }
    }
    d
}

/// `(1 + t^2)^d p(x(t), y(t))` with `d` the total degree of `p`.
pub(crate) fn substitute<K: Field>(k: &K, p: &Bi<K::Elem>, c: &Circle) -> Vec<K::Elem> {
    let d = total_degree(k, p);
    let (a1, a2, r) = (&c.center.0, &c.center.1, &c.radius);
    let xt = fpoly::map_rat(k, &[a1 + r, rat(0), a1 - r]);
    let yt = fpoly::map_rat(k, &[a2.clone(), r * rat(2), a2.clone()]);
    let wt = fpoly::map_rat(k, &[rat(1), rat(0), rat(1)]);
    let pw = |b: &[K::Elem]| {
        let mut v = vec![vec![k.one()]];
        for _ in 0..d {
            let last = v.last().unwrap();
            v.push(fpoly::mul(k, last, b));
        }
        v
    };
    let (xp, yp, wp) = (pw(&xt), pw(&yt), pw(&wt));
    let mut out: Vec<K::Elem> = Vec::new();
    for (j, row) in p.iter().enumerate() {
        for (i, cij) in row.iter().enumerate() {
            if k.is_trivially_zero(cij) {
                continue;
            }
            let m = fpoly::mul(k, &fpoly::mul(k, &xp[i], &yp[j]), &wp[d - i - j]);
            out = fpoly::add(k, &out, &fpoly::scale(k, &m, cij));
        }
    }
    out
}

/// Value of a bivariate polynomial over `K` at a rational point.
pub(crate) fn eval_at<K: Field>(k: &K, p: &Bi<K::Elem>, x: &Rat, y: &Rat) -> K::Elem {
    let fx = bivar::eval_x(k, p, &k.from_rat(x));
    fpoly::eval(k, &fx, &k.from_rat(y))
}

/// The intersection of `{p = 0}` with a circle, with signs of `p` on the
/// open arcs between consecutive intersection points.
#[derive(Clone, Debug)]
pub(crate) struct Cut<K: Field> {
    pub k: K,
    pub circle: Circle,
    pub sq: Vec<K::Elem>,
    pub roots: Vec<IsolInterval>,
    pub antipode: bool,
    /// `arcs[i]` is the sign on the open arc following event `i`; a single
    /// entry for the whole circle when there are no events.
    pub arcs: Vec<i32>,
    fields: Vec<Option<Ext<K>>>,
}

impl<K: Field> Cut<K> {
    pub fn new(mut k: K, p: &Bi<K::Elem>, circle: &Circle) -> Result<Self> {
        let mut sub = substitute(&k, p, circle);
        fpoly::trim(&mut k, &mut sub);
        if sub.is_empty() {
            return Err(Error::Degenerate("curve contains the whole circle".into()));
        }
        let (ax, ay) = circle.antipode();
        let at_antipode = eval_at(&k, p, &ax, &ay);
        let antipode = k.is_zero(&at_antipode);
        let sq = fpoly::squarefree(&mut k, &sub);
        let roots = if sq.len() > 1 {
            let seq = fpoly::sturm_sequence(&mut k, &sq);
            let b = fpoly::root_bound(&mut k, &sq);
            let mut out = Vec::new();
            fpoly::isolate_in(&mut k, &sq, &seq, -b.clone(), b, &mut out);
            out
        } else {
            Vec::new()
        };
        let mut cut = Cut {
            k,
            circle: circle.clone(),
            sq,
            fields: vec![None; roots.len()],
            roots,
            antipode,
            arcs: Vec::new(),
        };
        let m = cut.n_events().max(1);
        let mut arcs = Vec::with_capacity(m);
        for i in 0..m {
            let t = cut.arc_sample(i);
            arcs.push(fpoly::sign_at_rat(&mut cut.k, &sub, &t));
        }
        cut.arcs = arcs;
        Ok(cut)
    }

    pub fn n_events(&self) -> usize {
        self.roots.len() + usize::from(self.antipode)
    }

    pub fn is_antipode(&self, i: usize) -> bool {
        i == self.roots.len()
    }

    /// A rational parameter inside the open arc following event `i`.
    pub fn arc_sample(&self, i: usize) -> Rat {
        let n = self.roots.len();
        if n == 0 {
            return rat(0);
        }
        if i + 1 < n {
            midpoint(&self.roots[i].hi, &self.roots[i + 1].lo)
        } else if i + 1 == n {
            &self.roots[n - 1].hi + rat(1)
        } else {
            &self.roots[0].lo - rat(1)
        }
    }

    pub fn arc_before(&self, i: usize) -> i32 {
        let m = self.n_events();
        self.arcs[(i + m - 1) % m]
    }

    pub fn transverse(&self, i: usize) -> bool {
        self.arc_before(i) * self.arcs[i] < 0
    }

    /// The field generated by the parameter of a finite event.
    pub fn event_field(&mut self, i: usize) -> &mut Ext<K> {
        if self.fields[i].is_none() {
            let b = &self.roots[i];
            self.fields[i] =
                Some(Ext::new(self.k.clone(), self.sq.clone(), b.lo.clone(), b.hi.clone()));
        }
        self.fields[i].as_mut().unwrap()
    }

    /// Exact sign of another polynomial at event `i`.
    pub fn sign_at_event(&mut self, i: usize, q: &Bi<K::Elem>) -> i32 {
        if self.is_antipode(i) {
            let (ax, ay) = self.circle.antipode();
            let v = eval_at(&self.k, q, &ax, &ay);
            return self.k.sign(&v);
        }
        let qs = substitute(&self.k, q, &self.circle);
        self.event_field(i).sign(&qs)
    }

    /// Enclosure of `q` at event `i` of width at most `w`.
    pub fn enclose_at_event(&mut self, i: usize, q: &Bi<K::Elem>, w: &Rat) -> Interval {
        if self.is_antipode(i) {
            let (ax, ay) = self.circle.antipode();
            let v = eval_at(&self.k, q, &ax, &ay);
            return self.k.enclose(&v, w);
        }
        // numerator and the positive denominator (1 + t²)^d separately,
        // which avoids an inverse in the event field
        let d = total_degree(&self.k, q);
        let qs = substitute(&self.k, q, &self.circle);
        let f = self.event_field(i);
        let t = f.gen();
        let w1 = f.add(&f.one(), &f.mul(&t, &t));
        let mut wd = f.one();
        for _ in 0..d {
            wd = f.mul(&wd, &w1);
        }
        let mut v = w / rat(4);
        loop {
            let num = f.enclose(&qs, &v);
            let den = f.enclose(&wd, &v);
            if den.lo.is_positive() {
                let qs = [&num.lo / &den.lo, &num.lo / &den.hi, &num.hi / &den.lo, &num.hi / &den.hi];
                let lo = qs.iter().min().unwrap().clone();
                let hi = qs.iter().max().unwrap().clone();
                let out = Interval::new(lo, hi);
                if out.width() <= *w {
                    return out;
                }
            }
            v = v / rat(16);
        }
    }

    /// Euler characteristic of `{p σ 0}` on the circle, `σ` given by the
    /// sign predicate.
    pub fn chi(&self, keep: impl Fn(i32) -> bool) -> i64 {
        let m = self.n_events();
        if m == 0 {
            return 0;
        }
        let pts = if keep(0) { m as i64 } else { 0 };
        let arcs = self.arcs.iter().filter(|&&s| keep(s)).count() as i64;
        pts - arcs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CirclePoint {
    /// Tangent-half-angle parameter.
    Param(AlgNumber),
    Antipode,
}

#[derive(Clone, Debug)]
pub struct CircleEvent {
    pub point: CirclePoint,
    pub sign_before: i32,
    pub sign_after: i32,
}

impl CircleEvent {
    pub fn transverse(&self) -> bool {
        self.sign_before * self.sign_after < 0
    }
}

#[derive(Clone, Debug)]
pub struct CircleProfile {
    pub circle: Circle,
    pub events: Vec<CircleEvent>,
    /// Sign of the curve polynomial on the whole circle when there are no
    /// events.
    pub empty_sign: i32,
}

impl CircleProfile {
    pub fn count(&self) -> usize {
        self.events.len()
    }

    pub fn all_transverse(&self) -> bool {
        self.events.iter().all(|e| e.transverse())
    }

    pub fn point_f64(&self, i: usize) -> (f64, f64) {
        match &self.events[i].point {
            CirclePoint::Param(t) => self.circle.point_f64(t.to_f64()),
            CirclePoint::Antipode => {
                let (x, y) = self.circle.antipode();
                (to_f64(&x), to_f64(&y))
            }
        }
    }
}

fn profile_from_cut(cut: &Cut<QQ>) -> CircleProfile {
    let m = cut.n_events();
    let events = (0..m)
        .map(|i| CircleEvent {
            point: if cut.is_antipode(i) {
                CirclePoint::Antipode
            } else {
                let b = cut.roots[i].clone();
                let a = AlgNumber::new_unchecked_pub(UPoly::new(cut.sq.clone(), Var::T), b);
                CirclePoint::Param(a)
            },
            sign_before: cut.arc_before(i),
            sign_after: cut.arcs[i],
        })
        .collect();
    CircleProfile {
        circle: cut.circle.clone(),
        events,
        empty_sign: if m == 0 { cut.arcs[0] } else { 0 },
    }
}

/// All points of `{g = 0}` on the circle, in counterclockwise order
/// starting just after the antipode.
pub fn curve_circle_intersections(g: &BPoly, c: &Circle) -> Result<CircleProfile> {
    let cut = Cut::new(QQ, &g.to_dense_y(), c)?;
    Ok(profile_from_cut(&cut))
}

/// Topological degree of `(P, Q)/|(P, Q)|` on the circle.
pub fn winding_number(p: &BPoly, q: &BPoly, c: &Circle) -> Result<i64> {
    let qd = q.to_dense_y();
    let mut cut = Cut::new(QQ, &p.to_dense_y(), c)
        .map_err(|_| Error::Precondition("first component vanishes on the circle".into()))?;
    let mut sum = 0i64;
    for i in 0..cut.n_events() {
        let sq = cut.sign_at_event(i, &qd);
        if sq == 0 {
            return Err(Error::Precondition("common zero on the circle".into()));
        }
        if cut.transverse(i) {
            sum += i64::from(cut.arcs[i] * sq);
        }
    }
    debug_assert!(sum % 2 == 0);
    Ok(-sum / 2)
}

/// A rational circle around `points[i]` that excludes every other point.
pub fn isolating_circle(points: &mut [PlanePoint], i: usize) -> Circle {
    let mut w = rat(1);
    loop {
        system::separate(points, &w);
        let xi = points[i].x_interval();
        let yi = points[i].y_interval();
        let cx = midpoint(&xi.lo, &xi.hi);
        let cy = midpoint(&yi.lo, &yi.hi);
        let mut dmin: Option<Rat> = None;
        for (j, p) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let gap = |iv: &Interval, c: &Rat| -> Rat {
                if c < &iv.lo {
                    &iv.lo - c
                } else if c > &iv.hi {
                    c - &iv.hi
                } else {
                    Rat::zero()
                }
            };
            let d = gap(&p.x_interval(), &cx).max(gap(&p.y_interval(), &cy));
            dmin = Some(match dmin {
                None => d,
                Some(m) => m.min(d),
            });
        }
        let r = match dmin {
            None => rat(1),
            Some(d) => d / rat(2),
        };
        let hw = xi.width().max(yi.width());
        if r.is_positive() && &hw * &hw < &r * &r {
            return Circle { center: (cx, cy), radius: r };
        }
        w = w / rat(4);
    }
}

/// Local degree of `∇f` at `points[i]`, a zero among the complete list.
pub fn local_degree(f: &BPoly, points: &mut [PlanePoint], i: usize) -> Result<i64> {
    let c = isolating_circle(points, i);
    winding_number(&f.deriv_x(), &f.deriv_y(), &c)
}

/// Radius of an origin-centered circle enclosing every zero of `∇f`.
pub fn gradient_zero_radius(f: &BPoly, points: &[PlanePoint]) -> Rat {
    let fx = f.deriv_x();
    let fy = f.deriv_y();
    if !fx.is_zero() && !fy.is_zero() {
        let r1 = crate::exact::resultant(&fx, &fy, Var::Y).ok();
        let r2 = crate::exact::resultant(&fx, &fy, Var::X).ok();
        if let (Some(r1), Some(r2)) = (r1, r2) {
            if !r1.is_zero() && !r2.is_zero() {
                let b1 = fpoly::root_bound(&mut QQ, r1.coeffs());
                let b2 = fpoly::root_bound(&mut QQ, r2.coeffs());
                return b1 + b2;
            }
        }
    }
    system::l1_bound(points) + rat(1)
}

/// Degree of `∇f/|∇f|` on a circle enclosing all zeros of `∇f`.
pub fn degree_at_infinity(f: &BPoly) -> Result<i64> {
    let fx = f.deriv_x();
    let fy = f.deriv_y();
    let pts = system::solve_system(&fx, &fy)?;
    if fx.is_zero() || fy.is_zero() {
        return Ok(0);
    }
    let r = gradient_zero_radius(f, &pts);
    winding_number(&fx, &fy, &Circle::centered(r))
}

/// Sign of a rational polynomial at a rational point.
pub fn sign_at_point(p: &BPoly, x: &Rat, y: &Rat) -> i32 {
    sign_of(&p.eval(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> BPoly {
        parse_poly(s).unwrap()
    }

    fn unit() -> Circle {
        Circle::centered(rat(1))
    }

    /// Winding number by sampling the angle finely.
    fn numeric_winding(a: &BPoly, b: &BPoly, c: &Circle) -> i64 {
        let n = 4000;
        let mut total = 0.0;
        let ang = |k: usize| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (cx, cy) = (to_f64(&c.center.0), to_f64(&c.center.1));
            let r = to_f64(&c.radius);
            let (x, y) = (cx + r * th.cos(), cy + r * th.sin());
            b.eval_f64(x, y).atan2(a.eval_f64(x, y))
        };
        let mut prev = ang(0);
        for k in 1..=n {
            let cur = ang(k);
            let mut d = cur - prev;
            while d > std::f64::consts::PI {
                d -= 2.0 * std::f64::consts::PI;
            }
            while d < -std::f64::consts::PI {
                d += 2.0 * std::f64::consts::PI;
            }
            total += d;
            prev = cur;
        }
        (total / (2.0 * std::f64::consts::PI)).round() as i64
    }

    #[test]
    fn intersections() {
        assert_eq!(curve_circle_intersections(&p("x"), &unit()).unwrap().count(), 2);
        assert_eq!(curve_circle_intersections(&p("x^2 + y^2 - 1/4"), &unit()).unwrap().count(), 0);
        let pr = curve_circle_intersections(&p("y - x^2"), &Circle::centered(rat(2))).unwrap();
        assert_eq!(pr.count(), 2);
        for i in 0..2 {
            let (x, y) = pr.point_f64(i);
            assert!((y - x * x).abs() < 1e-6);
            assert!((y - (17f64.sqrt() - 1.0) / 2.0).abs() < 1e-6);
        }
        // the antipode (-1, 0) lies on x + 1 = 0 (tangent there)
        let pr = curve_circle_intersections(&p("x + 1"), &unit()).unwrap();
        assert_eq!(pr.count(), 1);
        assert_eq!(pr.events[0].point, CirclePoint::Antipode);
        assert!(!pr.events[0].transverse());
        assert!(curve_circle_intersections(&p("x^2 + y^2 - 1"), &unit()).is_err());
    }

    #[test]
    fn windings() {
        let cases = [("x", "y", 1), ("x", "-y", -1), ("x^2 - y^2", "2*x*y", 2)];
        for (a, b, w) in cases {
            let got = winding_number(&p(a), &p(b), &unit()).unwrap();
            assert_eq!(got, w, "{a}, {b}");
            assert_eq!(numeric_winding(&p(a), &p(b), &unit()), w);
            assert_eq!(winding_number(&p(b), &p(a), &unit()).unwrap(), -w);
        }
        // off-center circle not enclosing the origin
        let c = Circle::new((rat(3), rat(1)), rat(1)).unwrap();
        assert_eq!(winding_number(&p("x"), &p("y"), &c).unwrap(), 0);
        assert!(winding_number(&p("x"), &p("y - 1"), &unit()).is_err());
    }

    #[test]
    fn local_degrees() {
        for (f, d) in [("x^2 + y^2", 1), ("x^2 - y^2", -1), ("x^3 - 3*x*y^2", -2)] {
            let f = p(f);
            let mut pts = system::solve_system(&f.deriv_x(), &f.deriv_y()).unwrap();
            assert_eq!(pts.len(), 1);
            assert_eq!(local_degree(&f, &mut pts, 0).unwrap(), d);
        }
    }

    #[test]
    fn degrees_at_infinity() {
        assert_eq!(degree_at_infinity(&p("x^2 + y^2")).unwrap(), 1);
        assert_eq!(degree_at_infinity(&p("x^2 - y^2")).unwrap(), -1);
        assert_eq!(degree_at_infinity(&p("x*(x*y - 1)")).unwrap(), 0);
        assert_eq!(degree_at_infinity(&p("x^3 - 3*x + y^2")).unwrap(), 0);
        assert!(degree_at_infinity(&p("x^2*y")).is_err());
    }
}

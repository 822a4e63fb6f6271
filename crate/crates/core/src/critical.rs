//! Critical points of `f` on the plane, their local degrees, indices and
//! critical values.

use crate::circle::{self, Circle, Cut};
use crate::error::{Error, Result};
use crate::exact::field::QQ;
use crate::exact::interval::Interval;
use crate::exact::rat::{rat, simple_between, to_pq, Rat};
use crate::exact::system::{self, PlanePoint};
use crate::exact::{AlgNumber, BPoly};
use crate::flavor::Flavor;
use crate::infinity::{at_level, level_poly, LinkChi};

#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub point: PlanePoint,
    pub local_degree: i64,
    pub value: AlgNumber,
    pub ind_f: i64,
    pub ind_neg_f: i64,
}

impl CriticalPoint {
    pub fn x_interval(&self) -> Interval {
        self.point.x_interval()
    }

    pub fn y_interval(&self) -> Interval {
        self.point.y_interval()
    }

    pub fn describe(&self) -> String {
        let (xi, yi) = (self.x_interval(), self.y_interval());
        format!(
            "[{}, {}] x [{}, {}]",
            to_pq(&xi.lo),
            to_pq(&xi.hi),
            to_pq(&yi.lo),
            to_pq(&yi.hi)
        )
    }
}

/// The zeros of `∇f`, each with a certified box. Fails when the zero set
/// is infinite.
pub fn gradient_zeros(f: &BPoly) -> Result<Vec<PlanePoint>> {
    if f.is_constant() {
        return Err(Error::InfiniteCriticalSet("constant function".into()));
    }
    system::solve_system(&f.deriv_x(), &f.deriv_y())
}

pub fn find_critical_points(f: &BPoly) -> Result<Vec<CriticalPoint>> {
    let mut pts = gradient_zeros(f)?;
    let mut degs = Vec::with_capacity(pts.len());
    for i in 0..pts.len() {
        degs.push(circle::local_degree(f, &mut pts, i)?);
    }
    let mut out = Vec::with_capacity(pts.len());
    for (mut p, d) in pts.into_iter().zip(degs) {
        let value = p.value_of(f);
        out.push(CriticalPoint { point: p, local_degree: d, value, ind_f: d, ind_neg_f: d });
    }
    Ok(out)
}

/// `ind(f, R^2, p)`; in the plane this is the local degree of `∇f`.
pub fn index(_f: &BPoly, p: &CriticalPoint) -> i64 {
    p.ind_f
}

/// Sorted distinct critical values.
pub fn critical_values(f: &BPoly) -> Result<Vec<AlgNumber>> {
    let mut v: Vec<AlgNumber> = find_critical_points(f)?.into_iter().map(|c| c.value).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

/// The polynomial `(x - c1) q_y - (y - c2) q_x`, whose zeros on a circle
/// centered at `c` are the critical points of `q` restricted to it.
pub fn polar(q: &BPoly, c: &(Rat, Rat)) -> BPoly {
    let dx = &BPoly::x() - &BPoly::constant(c.0.clone());
    let dy = &BPoly::y() - &BPoly::constant(c.1.clone());
    &(&dx * &q.deriv_y()) - &(&dy * &q.deriv_x())
}

/// Rational levels strictly below and above `v`, with no critical value
/// of `f` restricted to the circle between them and `v`. `None` when a
/// circle critical value cannot be separated from `v`.
pub(crate) fn levels_near(f: &BPoly, v: &AlgNumber, circle: &Circle) -> Option<(Rat, Rat)> {
    let h = polar(f, &circle.center);
    let mut cut = Cut::new(QQ, &h.to_dense_y(), circle).ok();
    let fd = f.to_dense_y();
    let mut w = rat(1) / rat(16);
    let tiny = rat(1) / (rat(1) * Rat::from_integer(num_bigint::BigInt::from(1u8) << 100usize));
    loop {
        let vi = v.refine(&w).interval().interval();
        let vals: Vec<Interval> = match cut.as_mut() {
            Some(cut) => (0..cut.n_events()).map(|i| cut.enclose_at_event(i, &fd, &w)).collect(),
            // f is constant on the circle
            None => {
                let (x, y) = circle.point_at(&rat(0));
                vec![Interval::point(f.eval(&x, &y))]
            }
        };
        if vals.iter().all(|iv| iv.hi < vi.lo || iv.lo > vi.hi) {
            let lo = match vals.iter().filter(|iv| iv.hi < vi.lo).map(|iv| iv.hi.clone()).max() {
                Some(l) => simple_between(&l, &vi.lo),
                None => &vi.lo - rat(1),
            };
            let hi = match vals.iter().filter(|iv| iv.lo > vi.hi).map(|iv| iv.lo.clone()).min() {
                Some(u) => simple_between(&vi.hi, &u),
                None => &vi.hi + rat(1),
            };
            return Some((lo, hi));
        }
        if w < tiny {
            return None;
        }
        w = w / rat(16);
    }
}

fn box_center(lo: &Rat, hi: &Rat) -> Rat {
    if lo == hi {
        lo.clone()
    } else {
        simple_between(lo, hi)
    }
}

fn arc_chi(f: &BPoly, t: &Rat, c: &Circle) -> Option<i64> {
    let g = f - &BPoly::constant(t.clone());
    let cut = Cut::new(QQ, &g.to_dense_y(), c).ok()?;
    let n = cut.n_events();
    if (0..n).all(|e| cut.transverse(e)) && n % 2 == 0 {
        Some((n / 2) as i64)
    } else {
        None
    }
}

/// Euler characteristics of `{f = v - δ}` and `{f = v + δ}` inside a
/// small circle around `points[i]`, by counting arcs: each arc meets the
/// circle twice and closed ovals do not count. The radius is halved until
/// two consecutive radii agree.
pub fn fiber_chis_by_arcs(f: &BPoly, points: &mut [PlanePoint], i: usize) -> Result<(i64, i64)> {
    let v = points[i].value_of(f);
    let mut r = circle::isolating_circle(points, i).radius;
    let mut prev: Option<(i64, i64)> = None;
    for _ in 0..16 {
        points[i].refine(&(&r / rat(8)));
        let (xi, yi) = (points[i].x_interval(), points[i].y_interval());
        let c = Circle { center: (box_center(&xi.lo, &xi.hi), box_center(&yi.lo, &yi.hi)), radius: r.clone() };
        if let Some((lo, hi)) = levels_near(f, &v, &c) {
            if let (Some(b), Some(a)) = (arc_chi(f, &lo, &c), arc_chi(f, &hi, &c)) {
                if prev == Some((b, a)) {
                    return Ok((b, a));
                }
                prev = Some((b, a));
            }
        }
        r = r / rat(2);
    }
    Err(Error::Unstable("arc count did not stabilize under radius halving".into()))
}

pub fn fiber_chi_by_arcs(f: &BPoly, points: &mut [PlanePoint], i: usize, below: bool) -> Result<i64> {
    let (b, a) = fiber_chis_by_arcs(f, points, i)?;
    Ok(if below { b } else { a })
}

/// Index of `f` at `points[i]` from the arc count of the lower fiber.
pub fn index_by_arcs(f: &BPoly, points: &mut [PlanePoint], i: usize) -> Result<i64> {
    Ok(1 - fiber_chi_by_arcs(f, points, i, true)?)
}

/// Critical points with `ind(f)` and `ind(-f)` computed from arc counts
/// of nearby fibers instead of the gradient degree.
pub fn critical_points_by_arcs(f: &BPoly) -> Result<Vec<CriticalPoint>> {
    let mut pts = gradient_zeros(f)?;
    let mut rows = Vec::with_capacity(pts.len());
    for i in 0..pts.len() {
        let d = circle::local_degree(f, &mut pts, i)?;
        // the lower fiber of -f is the upper fiber of f
        let (below, above) = fiber_chis_by_arcs(f, &mut pts, i)?;
        let (a, b) = (1 - below, 1 - above);
        rows.push((d, a, b));
    }
    Ok(pts
        .into_iter()
        .zip(rows)
        .map(|(mut p, (d, a, b))| {
            let value = p.value_of(f);
            CriticalPoint { point: p, local_degree: d, value, ind_f: a, ind_neg_f: b }
        })
        .collect())
}

/// Euler characteristics of `{f σ f(p)}` on a small circle around
/// `points[i]`, for the three flavors.
pub fn local_link_chis(f: &BPoly, points: &mut [PlanePoint], i: usize) -> Result<LinkChi> {
    let v = points[i].value_of(f);
    let mut r = circle::isolating_circle(points, i).radius;
    let mut prev: Option<LinkChi> = None;
    for _ in 0..16 {
        points[i].refine(&(&r / rat(8)));
        let (xi, yi) = (points[i].x_interval(), points[i].y_interval());
        let c = Circle { center: (box_center(&xi.lo, &xi.hi), box_center(&yi.lo, &yi.hi)), radius: r.clone() };
        let got = at_level!(v, |k, e| {
            let g = level_poly(&k, f, &e);
            match Cut::new(k, &g, &c) {
                Ok(cut) if (0..cut.n_events()).all(|j| cut.transverse(j)) => Some(LinkChi {
                    le: cut.chi(|s| Flavor::Le.keeps(s)),
                    eq: cut.chi(|s| Flavor::Eq.keeps(s)),
                    ge: cut.chi(|s| Flavor::Ge.keeps(s)),
                }),
                _ => None,
            }
        });
        if let Some(l) = got {
            if prev == Some(l) {
                return Ok(l);
            }
            prev = Some(l);
        }
        r = r / rat(2);
    }
    Err(Error::Unstable("local link did not stabilize under radius halving".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> BPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn examples() {
        let c = find_critical_points(&p("x^2 + y^2")).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].local_degree, 1);
        assert_eq!(c[0].value.as_rational(), Some(rat(0)));
        let vals = critical_values(&p("x^3 - 3*x + y^2")).unwrap();
        assert_eq!(vals, vec![AlgNumber::from_rat(&rat(-2)), AlgNumber::from_rat(&rat(2))]);
        assert!(find_critical_points(&p("x*(x*y - 1)")).unwrap().is_empty());
        assert!(find_critical_points(&p("x^2*y")).is_err());
    }

    #[test]
    fn irrational_values() {
        // critical points at x = ±1/sqrt(3), values ∓2/(3 sqrt(3))
        let vals = critical_values(&p("x^3 - x + y^2")).unwrap();
        assert_eq!(vals.len(), 2);
        let expect = 2.0 / (3.0 * 3f64.sqrt());
        assert!((vals[0].to_f64() + expect).abs() < 1e-9);
        assert!((vals[1].to_f64() - expect).abs() < 1e-9);
    }

    #[test]
    fn arc_counts() {
        for (f, d) in [("x^2 + y^2", 1), ("x^2 - y^2", -1), ("-x^2 - y^2", 1), ("x^3 - 3*x*y^2", -2)] {
            let f = p(f);
            let mut pts = gradient_zeros(&f).unwrap();
            assert_eq!(index_by_arcs(&f, &mut pts, 0).unwrap(), d);
            assert_eq!(1 - fiber_chi_by_arcs(&f, &mut pts, 0, false).unwrap(), d);
            let l = local_link_chis(&f, &mut pts, 0).unwrap();
            assert_eq!((l.le, l.ge), (1 - d, 1 - d));
        }
        let c = critical_points_by_arcs(&p("x^3 - 3*x + y^2")).unwrap();
        assert!(c.iter().all(|c| c.ind_f == c.local_degree && c.ind_neg_f == c.local_degree));
    }
}

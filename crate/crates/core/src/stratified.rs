//! Closed sets `X = {g ≤ 0}` or `X = {g = 0}` with smooth boundary curve,
//! their stratified critical points, generic linear functions and the
//! Gauss–Bonnet measure.

use crate::circle::{isolating_circle, local_degree, Circle, Cut};
use crate::critical::gradient_zeros;
use crate::error::{Error, Result};
use crate::euler::sweep_atoms;
use crate::exact::bivar::{self, Bi};
use crate::exact::field::QQ;
use crate::exact::rat::{from_f64, midpoint, rat, simple_between, to_f64, to_pq, Rat};
use crate::exact::system::{solve_system, PlanePoint};
use crate::exact::{AlgNumber, BPoly, Var};
use crate::flavor::Flavor;
use crate::infinity::{interpolate, leading_in_first, link_atoms, squarefree, LinkChi};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Region,
    Curve,
}

#[derive(Clone, Debug)]
pub struct PlaneSet {
    pub g: BPoly,
    pub kind: SetKind,
}

impl fmt::Display for PlaneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SetKind::Region => write!(f, "{{{} <= 0}}", self.g),
            SetKind::Curve => write!(f, "{{{} = 0}}", self.g),
        }
    }
}

fn smooth_check(g: &BPoly) -> Result<()> {
    let (gx, gy) = (g.deriv_x(), g.deriv_y());
    let tries = [(&gx, &gy, g), (g, &gx, &gy), (g, &gy, &gx)];
    for (p, q, other) in tries {
        match solve_system(p, q) {
            Ok(mut pts) => {
                for z in pts.iter_mut() {
                    if z.is_zero_of(other) && z.is_zero_of(g) {
                        return Err(Error::Precondition("the boundary curve has a singular point".into()));
                    }
                }
                return Ok(());
            }
            Err(Error::InfiniteCriticalSet(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Precondition("the boundary curve has a singular component".into()))
}

impl PlaneSet {
    pub fn new(g: BPoly, kind: SetKind) -> Result<Self> {
        if g.is_constant() {
            return Err(Error::Precondition("constant defining polynomial".into()));
        }
        smooth_check(&g)?;
        let x = PlaneSet { g, kind };
        if kind == SetKind::Region {
            let on_curve = sweep_atoms(&[(x.g.clone(), Flavor::Eq)], false)?.cells.iter().sum::<usize>();
            if on_curve == 0 && x.g.eval(&rat(0), &rat(0)).is_positive() {
                return Err(Error::Precondition("empty region".into()));
            }
        }
        Ok(x)
    }

    pub fn region(g: BPoly) -> Result<Self> {
        Self::new(g, SetKind::Region)
    }

    pub fn curve(g: BPoly) -> Result<Self> {
        Self::new(g, SetKind::Curve)
    }

    pub fn atom(&self) -> (BPoly, Flavor) {
        match self.kind {
            SetKind::Region => (self.g.clone(), Flavor::Le),
            SetKind::Curve => (self.g.clone(), Flavor::Eq),
        }
    }

    /// `χ(X ∩ S)` and `χ(Lk^∞(X ∩ S))`, `S` cut out by the extra atoms.
    pub fn chi_with(&self, extra: &[(BPoly, Flavor)]) -> Result<(i64, i64)> {
        let mut atoms = vec![self.atom()];
        atoms.extend(extra.iter().cloned());
        let cc = sweep_atoms(&atoms, false)?.chi_c();
        let (lk, _) = link_atoms(&atoms, 0)?;
        Ok((cc + lk, lk))
    }

    pub fn chi(&self) -> Result<i64> {
        Ok(self.chi_with(&[])?.0)
    }

    pub fn link_chi(&self) -> Result<i64> {
        Ok(self.chi_with(&[])?.1)
    }

    pub fn is_compact(&self) -> Result<bool> {
        Ok(link_atoms(&[self.atom()], 0)?.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    Interior,
    Boundary,
}

#[derive(Clone, Debug)]
pub struct StratCriticalPoint {
    pub point: PlanePoint,
    pub stratum: Stratum,
    /// Sign of `⟨∇f, ∇g⟩` at a boundary point.
    pub lambda_sign: Option<i32>,
    pub index: i64,
    pub value: AlgNumber,
}

impl StratCriticalPoint {
    pub fn describe(&self) -> String {
        let (x, y) = (self.point.x_interval(), self.point.y_interval());
        format!(
            "{:?} point near ({:.6}, {:.6}), value {}, index {}",
            self.stratum,
            to_f64(&midpoint(&x.lo, &x.hi)),
            to_f64(&midpoint(&y.lo, &y.hi)),
            self.value,
            self.index
        )
    }
}

fn cmp_event(cut: &mut Cut<QQ>, i: usize, fd: &Bi<Rat>, v: &AlgNumber) -> Option<Ordering> {
    let mut w = rat(1) / rat(16);
    for _ in 0..40 {
        let fi = cut.enclose_at_event(i, fd, &w);
        let vi = v.refine(&w).interval().interval();
        if fi.hi < vi.lo {
            return Some(Ordering::Less);
        }
        if fi.lo > vi.hi {
            return Some(Ordering::Greater);
        }
        w = w / rat(16);
    }
    None
}

/// Index of `f` restricted to the curve `{g = 0}` at `points[i]`, one of
/// the complete list of critical points of `f` on the curve: one minus
/// the number of nearby curve points on a slightly lower level.
fn curve_index(g: &BPoly, f: &BPoly, points: &mut [PlanePoint], i: usize) -> Result<i64> {
    let v = points[i].value_of(f);
    let (gd, fd) = (g.to_dense_y(), f.to_dense_y());
    let mut r = isolating_circle(points, i).radius / rat(2);
    let mut prev = None;
    for _ in 0..20 {
        points[i].refine(&(&r / rat(8)));
        let (xi, yi) = (points[i].x_interval(), points[i].y_interval());
        let c = Circle { center: (midpoint(&xi.lo, &xi.hi), midpoint(&yi.lo, &yi.hi)), radius: r.clone() };
        if let Ok(mut cut) = Cut::new(QQ, &gd, &c) {
            if cut.n_events() == 2 && (0..2).all(|e| cut.transverse(e)) {
                let mut below = 0;
                let mut ok = true;
                for e in 0..2 {
                    match cmp_event(&mut cut, e, &fd, &v) {
                        Some(Ordering::Less) => below += 1,
                        Some(_) => {}
                        None => ok = false,
                    }
                }
                if ok {
                    let idx = 1 - below;
                    if prev == Some(idx) {
                        return Ok(idx);
                    }
                    prev = Some(idx);
                }
            }
        }
        r = r / rat(2);
    }
    Err(Error::Unstable("curve index did not stabilize under radius halving".into()))
}

/// Critical points of `f` restricted to the strata of `X`, with indices.
pub fn stratified_critical_points(x: &PlaneSet, f: &BPoly) -> Result<Vec<StratCriticalPoint>> {
    let g = &x.g;
    let mut out = Vec::new();
    if x.kind == SetKind::Region && f.total_degree().unwrap_or(0) > 1 {
        let mut zs = gradient_zeros(f)?;
        for i in 0..zs.len() {
            if zs[i].sign_of(g) < 0 {
                let index = local_degree(f, &mut zs, i)?;
                let value = zs[i].value_of(f);
                out.push(StratCriticalPoint {
                    point: zs[i].clone(),
                    stratum: Stratum::Interior,
                    lambda_sign: None,
                    index,
                    value,
                });
            }
        }
    }
    let (fx, fy, gx, gy) = (f.deriv_x(), f.deriv_y(), g.deriv_x(), g.deriv_y());
    let j = &(&fx * &gy) - &(&fy * &gx);
    let dot = &(&fx * &gx) + &(&fy * &gy);
    let mut bs = solve_system(&j, g).map_err(|e| match e {
        Error::InfiniteCriticalSet(m) => {
            Error::InfiniteCriticalSet(format!("critical set on the boundary curve is not finite: {m}"))
        }
        e => e,
    })?;
    let mut lams = Vec::new();
    for b in bs.iter_mut() {
        let s = b.sign_of(&dot);
        if s == 0 {
            return Err(Error::Hypothesis("gradient of f is tangent to the boundary at a critical point".into()));
        }
        lams.push(s);
    }
    for i in 0..bs.len() {
        let index = match (x.kind, lams[i]) {
            (SetKind::Region, s) if s > 0 => 0,
            _ => curve_index(g, f, &mut bs, i)?,
        };
        let value = bs[i].value_of(f);
        out.push(StratCriticalPoint {
            point: bs[i].clone(),
            stratum: Stratum::Boundary,
            lambda_sign: Some(lams[i]),
            index,
            value,
        });
    }
    Ok(out)
}

/// Index of `f` at the `i`-th stratified critical point.
pub fn stratified_index(x: &PlaneSet, f: &BPoly, i: usize) -> Result<i64> {
    let pts = stratified_critical_points(x, f)?;
    pts.get(i).map(|p| p.index).ok_or_else(|| Error::Precondition("no such critical point".into()))
}

/// A unit vector with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    pub v: (Rat, Rat),
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", to_pq(&self.v.0), to_pq(&self.v.1))
    }
}

impl Serialize for Direction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Direction {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        if &a * &a + &b * &b != rat(1) {
            return Err(Error::Precondition(format!("({a}, {b}) is not a unit vector")));
        }
        Ok(Direction { v: (a, b) })
    }

    /// The point `((1 - t²)/(1 + t²), 2t/(1 + t²))`.
    pub fn from_param(t: &Rat) -> Self {
        let d = rat(1) + t * t;
        Direction { v: ((rat(1) - t * t) / &d, (rat(2) * t) / &d) }
    }

    /// A rational direction close to angle `theta`.
    pub fn near_angle(theta: f64) -> Self {
        let t = (theta / 2.0).tan();
        if !t.is_finite() || t.abs() > 1e6 {
            return Direction { v: (rat(-1), rat(0)) };
        }
        let eps = 1e-4 * (1.0 + t.abs());
        Self::from_param(&simple_between(&from_f64(t - eps), &from_f64(t + eps)))
    }

    /// Parameter `t` of the point, `None` for `(-1, 0)`.
    pub fn param(&self) -> Option<Rat> {
        if self.v.0 == rat(-1) {
            None
        } else {
            Some(&self.v.1 / (rat(1) + &self.v.0))
        }
    }

    pub fn neg(&self) -> Self {
        Direction { v: (-self.v.0.clone(), -self.v.1.clone()) }
    }

    /// The linear function `v*(x) = ⟨v, x⟩`.
    pub fn linear(&self) -> BPoly {
        BPoly::linear(&self.v.0, &self.v.1, &rat(0))
    }
}

/// A finite set of directions, as parameters plus the point `(-1, 0)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BadDirections {
    pub params: Vec<AlgNumber>,
    pub antipode: bool,
}

impl BadDirections {
    pub fn contains(&self, d: &Direction) -> bool {
        match d.param() {
            None => self.antipode,
            Some(t) => self.params.iter().any(|p| p.cmp_rat(&t) == Ordering::Equal),
        }
    }

    pub fn len(&self) -> usize {
        self.params.len() + usize::from(self.antipode)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Res_y(g, a + t b + t² c)` as a polynomial in `(x, t)`.
fn normal_eliminant(g: &BPoly, a: &BPoly, b: &BPoly, c: &BPoly) -> Result<BPoly> {
    let gen = [a, b, c].iter().filter_map(|p| p.deg_y()).max();
    let Some(gen) = gen else {
        return Err(Error::Degenerate("normal condition vanishes identically".into()));
    };
    let need = 2 * g.deg_y().unwrap_or(0) as usize + 1;
    let (mut ts, mut vals) = (Vec::new(), Vec::new());
    let mut t = 0i64;
    while ts.len() < need {
        let tr = rat(t);
        let n = &(a + &b.scale(&tr)) + &c.scale(&(&tr * &tr));
        if n.deg_y() == Some(gen) {
            vals.push(crate::exact::resultant(g, &n, Var::Y)?.coeffs().to_vec());
            ts.push(tr);
        }
        t += 1;
    }
    Ok(interpolate(&ts, &vals))
}

/// Curvature numerator of `{g = 0}`.
fn curvature(g: &BPoly) -> BPoly {
    let (gx, gy) = (g.deriv_x(), g.deriv_y());
    let (gxx, gxy, gyy) = (gx.deriv_x(), gx.deriv_y(), gy.deriv_y());
    let two = BPoly::constant(rat(2));
    &(&(&gxx * &(&gy * &gy)) - &(&two * &(&gxy * &(&gx * &gy)))) + &(&gyy * &(&gx * &gx))
}

/// Polynomials in the direction parameter whose real roots contain the
/// directions along which normals of `{g = 0}` escape to infinity, or
/// which are normal at an inflection point.
fn bad_polys(g: &BPoly, a: &BPoly, b: &BPoly, c: &BPoly) -> Result<Vec<Vec<Rat>>> {
    let r1 = normal_eliminant(g, a, b, c)?;
    let r2 = normal_eliminant(&g.transpose(), &a.transpose(), &b.transpose(), &c.transpose())?;
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::Degenerate("normal map eliminant vanishes identically".into()));
    }
    let mut out = vec![leading_in_first(&r1), leading_in_first(&r2)];
    let k = curvature(g);
    if !k.is_zero() {
        let gd = g.to_dense_y();
        let cd = bivar::gcd(&mut QQ, &gd, &k.to_dense_y());
        let g2 = BPoly::from_dense_y(&bivar::exact_div(&mut QQ, &gd, &cd));
        if !g2.is_constant() {
            let rg = crate::exact::resultant(&g2, &k, Var::Y)?;
            if rg.is_zero() {
                return Err(Error::Degenerate("inflection eliminant vanishes identically".into()));
            }
            if rg.degree().unwrap_or(0) > 0 {
                let mut rb = BPoly::zero();
                for (i, cf) in rg.coeffs().iter().enumerate() {
                    rb.add_term(i as u32, 0, cf.clone());
                }
                let tp = crate::exact::resultant(&r1, &rb, Var::X)?;
                if tp.is_zero() {
                    return Err(Error::Degenerate("inflection direction eliminant vanishes".into()));
                }
                out.push(tp.coeffs().to_vec());
            }
        }
    }
    Ok(out)
}

/// A finite superset of the directions `v` for which `v*` restricted to
/// `X` is not generic.
pub fn bad_directions(x: &PlaneSet) -> Result<BadDirections> {
    let g = squarefree(&x.g);
    if g.is_constant() {
        return Ok(BadDirections::default());
    }
    let (gx, gy) = (g.deriv_x(), g.deriv_y());
    let m2 = BPoly::constant(rat(-2));
    let p2 = BPoly::constant(rat(2));
    let mut params = Vec::new();
    for p in bad_polys(&g, &gy, &(&m2 * &gx), &-&gy)? {
        params.extend(AlgNumber::roots_of(&p));
    }
    params.sort();
    params.dedup();
    let antipode = bad_polys(&g, &-&gy, &(&p2 * &gx), &gy)?
        .iter()
        .any(|p| p.first().map_or(true, |c| c.is_zero()));
    Ok(BadDirections { params, antipode })
}

/// `Σ_x ind(v*, X, x)`.
pub fn index_sum(x: &PlaneSet, d: &Direction) -> Result<i64> {
    Ok(stratified_critical_points(x, &d.linear())?.iter().map(|p| p.index).sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct CritSummary {
    pub value: AlgNumber,
    pub stratum: Stratum,
    pub lambda_sign: Option<i32>,
    pub index: i64,
    pub index_neg: i64,
}

/// Everything entering the linear-function identities at `(v, α)`.
#[derive(Clone, Debug, Serialize)]
pub struct MorseSummary {
    pub direction: Direction,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub alpha: Rat,
    pub points: Vec<CritSummary>,
    /// `Σ_{v*(p) > α} ind(v*)`.
    pub above: i64,
    /// `Σ_{v*(p) < α} ind(-v*)`.
    pub below_neg: i64,
    pub total: i64,
    pub total_neg: i64,
    /// `χ(X ∩ {v* σ α})` and the links at infinity of those sets.
    pub chi: LinkChi,
    pub link: LinkChi,
    pub chi_x: i64,
    pub link_x: i64,
}

pub fn linear_morse_summary(x: &PlaneSet, d: &Direction, alpha: &Rat) -> Result<MorseSummary> {
    let bad = bad_directions(x)?;
    if bad.contains(d) {
        return Err(Error::Hypothesis(format!("direction {d} is not generic for {x}")));
    }
    let f = d.linear();
    let plus = stratified_critical_points(x, &f)?;
    let minus = stratified_critical_points(x, &-&f)?;
    let mut points = Vec::new();
    let (mut above, mut below_neg) = (0, 0);
    for (p, m) in plus.iter().zip(&minus) {
        match p.value.cmp_rat(alpha) {
            Ordering::Greater => above += p.index,
            Ordering::Less => below_neg += m.index,
            Ordering::Equal => {}
        }
        points.push(CritSummary {
            value: p.value.clone(),
            stratum: p.stratum,
            lambda_sign: p.lambda_sign,
            index: p.index,
            index_neg: m.index,
        });
    }
    let level = &f - &BPoly::constant(alpha.clone());
    let mut chi = LinkChi::default();
    let mut link = LinkChi::default();
    for fl in Flavor::ALL {
        let (c, l) = x.chi_with(&[(level.clone(), fl)])?;
        match fl {
            Flavor::Le => (chi.le, link.le) = (c, l),
            Flavor::Eq => (chi.eq, link.eq) = (c, l),
            Flavor::Ge => (chi.ge, link.ge) = (c, l),
        }
    }
    let (chi_x, link_x) = x.chi_with(&[])?;
    Ok(MorseSummary {
        direction: d.clone(),
        alpha: alpha.clone(),
        total: points.iter().map(|p| p.index).sum(),
        total_neg: points.iter().map(|p| p.index_neg).sum(),
        points,
        above,
        below_neg,
        chi,
        link,
        chi_x,
        link_x,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbMode {
    Exact,
    Sampled(usize),
}

/// One arc of directions between consecutive bad directions.
#[derive(Clone, Debug, Serialize)]
pub struct GbArc {
    pub from: Option<AlgNumber>,
    pub to: Option<AlgNumber>,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub measure: Rat,
    pub index_sum: i64,
    /// `χ(Lk^∞(X ∩ {v* = 0}))` on the arc.
    pub section_link: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussBonnet {
    /// `Λ₀(X, X)` and a bound on its error.
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub value: Rat,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub error: Rat,
    /// `χ(X) - χ(Lk^∞ X)/2 - (mean of χ(Lk^∞(X ∩ {v* = 0})))/2` and its
    /// error bound.
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub rhs: Rat,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::one")]
    pub rhs_error: Rat,
    pub chi: i64,
    pub link_chi: i64,
    pub bad: BadDirections,
    pub arcs: Vec<GbArc>,
    pub samples: Vec<(Direction, i64)>,
}

/// `atan(t)/π` with an error bound; `None` stands for `±∞`.
fn atan_over_pi(t: Option<&AlgNumber>, upper: bool) -> (Rat, Rat) {
    let Some(t) = t else {
        return (if upper { rat(1) / rat(2) } else { rat(-1) / rat(2) }, Rat::zero());
    };
    if let Some(r) = t.as_rational() {
        if r.is_zero() {
            return (Rat::zero(), Rat::zero());
        }
        if r.abs() == rat(1) {
            return (r / rat(4), Rat::zero());
        }
    }
    let x = t.refine(&Rat::new(1.into(), num_bigint::BigInt::from(10u64).pow(18))).to_f64();
    (from_f64(x.atan() / std::f64::consts::PI), Rat::new(1.into(), num_bigint::BigInt::from(10u64).pow(12)))
}

fn section_link(x: &PlaneSet, d: &Direction) -> Result<i64> {
    Ok(x.chi_with(&[(d.linear(), Flavor::Eq)])?.1)
}

fn arc_samples(from: Option<&AlgNumber>, to: Option<&AlgNumber>) -> [Rat; 2] {
    match (from, to) {
        (None, None) => [rat(0), rat(1)],
        (None, Some(b)) => {
            let s = b.rational_below();
            [s.clone(), s - rat(1)]
        }
        (Some(a), None) => {
            let s = a.rational_above();
            [s.clone(), s + rat(1)]
        }
        (Some(a), Some(b)) => {
            let m = AlgNumber::from_rat(&a.rational_between(b));
            [a.rational_between(&m), m.rational_between(b)]
        }
    }
}

/// The Gauss–Bonnet measure `Λ₀(X, X)` together with the right-hand side
/// of the closed-set formula, integrated exactly over arcs.
pub fn gauss_bonnet(x: &PlaneSet, mode: GbMode) -> Result<GaussBonnet> {
    let bad = bad_directions(x)?;
    let (chi, link_chi) = x.chi_with(&[])?;
    let ends: Vec<Option<&AlgNumber>> =
        std::iter::once(None).chain(bad.params.iter().map(Some)).chain(std::iter::once(None)).collect();
    let mut arcs = Vec::new();
    let (mut value, mut error) = (Rat::zero(), Rat::zero());
    let (mut jint, mut jerr) = (Rat::zero(), Rat::zero());
    for w in ends.windows(2) {
        let (from, to) = (w[0], w[1]);
        let (lo, elo) = atan_over_pi(from, false);
        let (hi, ehi) = atan_over_pi(to, true);
        let measure = hi - lo;
        let err = elo + ehi;
        let mut vals = Vec::new();
        for s in arc_samples(from, to) {
            let d = Direction::from_param(&s);
            vals.push((index_sum(x, &d)?, section_link(x, &d)?));
        }
        if vals[0] != vals[1] {
            return Err(Error::Unstable(format!("integrand not constant on an arc: {vals:?}")));
        }
        let (i, j) = vals[0];
        value += &measure * rat(i);
        error += &err * rat(i.abs());
        jint += &measure * rat(j);
        jerr += &err * rat(j.abs());
        arcs.push(GbArc { from: from.cloned(), to: to.cloned(), measure, index_sum: i, section_link: j });
    }
    let rhs = rat(chi) - rat(link_chi) / rat(2) - &jint / rat(2);
    let rhs_error = jerr / rat(2);
    let mut samples = Vec::new();
    if let GbMode::Sampled(n) = mode {
        let n = n.max(2) & !1;
        let mut sum = 0i64;
        let mut maxi = 0i64;
        for j in 0..n / 2 {
            let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
            let mut d = Direction::near_angle(theta);
            let mut bump = 1;
            while bad.contains(&d) || bad.contains(&d.neg()) {
                d = Direction::near_angle(theta + 1e-3 * bump as f64);
                bump += 1;
            }
            for d in [d.clone(), d.neg()] {
                let i = index_sum(x, &d)?;
                sum += i;
                maxi = maxi.max(i.abs());
                samples.push((d, i));
            }
        }
        value = rat(sum) / rat(n as i64);
        error = rat(2 * maxi * (bad.len() as i64 + 1)) / rat(n as i64);
    }
    Ok(GaussBonnet { value, error, rhs, rhs_error, chi, link_chi, bad, arcs, samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> BPoly {
        parse_poly(s).unwrap()
    }

    fn disk() -> PlaneSet {
        PlaneSet::region(p("x^2 + y^2 - 1")).unwrap()
    }

    #[test]
    fn construction() {
        assert!(PlaneSet::region(p("x^2 - y^2")).is_err());
        assert!(PlaneSet::region(p("x^2 + y^2 + 1")).is_err());
        assert!(PlaneSet::curve(p("y")).is_ok());
        assert_eq!(disk().chi().unwrap(), 1);
        assert!(disk().is_compact().unwrap());
        assert!(!PlaneSet::region(p("y")).unwrap().is_compact().unwrap());
        assert_eq!(PlaneSet::curve(p("x^2 + y^2 - 1")).unwrap().chi().unwrap(), 0);
    }

    #[test]
    fn disk_points() {
        let pts = stratified_critical_points(&disk(), &p("x")).unwrap();
        assert_eq!(pts.len(), 2);
        for pt in &pts {
            let x = pt.value.to_f64();
            if x > 0.0 {
                assert_eq!((pt.lambda_sign, pt.index), (Some(1), 0));
            } else {
                assert_eq!((pt.lambda_sign, pt.index), (Some(-1), 1));
            }
        }
        assert!(stratified_critical_points(&disk(), &p("x^2 + y^2")).is_err());
        let c = PlaneSet::curve(p("x^2 + y^2 - 1")).unwrap();
        let pts = stratified_critical_points(&c, &p("y")).unwrap();
        let mut idx: Vec<(i64, i64)> = pts.iter().map(|q| (q.value.sign() as i64, q.index)).collect();
        idx.sort();
        assert_eq!(idx, vec![(-1, 1), (1, -1)]);
    }

    #[test]
    fn interior_points() {
        let pts = stratified_critical_points(&disk(), &p("x^2 - y^2")).unwrap();
        let interior: Vec<_> = pts.iter().filter(|q| q.stratum == Stratum::Interior).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(interior[0].index, -1);
    }

    #[test]
    fn bad_direction_sets() {
        assert!(bad_directions(&disk()).unwrap().is_empty());
        let hp = bad_directions(&PlaneSet::region(p("y")).unwrap()).unwrap();
        let ts: Vec<f64> = hp.params.iter().map(|a| a.to_f64()).collect();
        assert_eq!(ts, vec![-1.0, 1.0]);
        assert!(!hp.antipode);
        let par = bad_directions(&PlaneSet::curve(p("y - x^2")).unwrap()).unwrap();
        assert_eq!(par.params, vec![AlgNumber::from_rat(&rat(0))]);
        assert!(par.antipode);
        let cubic = bad_directions(&PlaneSet::curve(p("y - x^3")).unwrap()).unwrap();
        assert!(cubic.contains(&Direction::new(rat(0), rat(1)).unwrap()));
    }

    #[test]
    fn morse_summaries() {
        let e1 = Direction::new(rat(1), rat(0)).unwrap();
        let m = linear_morse_summary(&disk(), &e1, &rat(0)).unwrap();
        assert_eq!((m.above, m.chi.ge, m.chi.eq), (0, 1, 1));
        let c = PlaneSet::curve(p("x^2 + y^2 - 1")).unwrap();
        let e2 = Direction::new(rat(0), rat(1)).unwrap();
        let m = linear_morse_summary(&c, &e2, &rat(0)).unwrap();
        assert_eq!((m.above, m.chi.ge, m.chi.eq), (-1, 1, 2));
        let hp = PlaneSet::region(p("y")).unwrap();
        let d = Direction::from_param(&rat(3));
        let m = linear_morse_summary(&hp, &d, &rat(5)).unwrap();
        assert!(m.points.is_empty());
        assert_eq!((m.link.le, m.chi_x), (1, 1));
        assert!(linear_morse_summary(&hp, &e2, &rat(0)).is_err());
    }

    #[test]
    fn gauss_bonnet_values() {
        let gb = gauss_bonnet(&disk(), GbMode::Exact).unwrap();
        assert_eq!((gb.value.clone(), gb.error.clone()), (rat(1), rat(0)));
        assert_eq!(gb.rhs, rat(1));
        let gb = gauss_bonnet(&PlaneSet::region(p("y")).unwrap(), GbMode::Exact).unwrap();
        assert_eq!((gb.value.clone(), gb.rhs.clone()), (rat(0), rat(0)));
        let gb = gauss_bonnet(&PlaneSet::curve(p("x^2 + y^2 - 1")).unwrap(), GbMode::Exact).unwrap();
        assert_eq!(gb.value, rat(0));
        let gb = gauss_bonnet(&PlaneSet::region(p("y - x^2")).unwrap(), GbMode::Sampled(16)).unwrap();
        assert_eq!((gb.value.clone(), gb.rhs.clone()), (rat(-1) / rat(2), rat(-1) / rat(2)));
    }
}

//! Behaviour at infinity: the polar curve `Γ = {h = 0}` with respect to a
//! base point `a`, Morse data of `f` on large circles centered at `a`,
//! the correction terms λ, μ, ν, links at infinity, asymptotic critical
//! values and branch counts.

use crate::circle::{self, Circle, CirclePoint, Cut};
use crate::critical::{gradient_zeros, levels_near, polar};
use crate::error::{Error, Result};
use crate::exact::bivar::{self, Bi};
use crate::exact::field::{Field, QQ};
use crate::exact::fpoly;
use crate::exact::interval::Interval;
use crate::exact::rat::{rat, Rat};
use crate::exact::{AlgNumber, BPoly, Var};
use crate::flavor::Flavor;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Runs `$body` with `$k` bound to a field containing the level and `$e`
/// to the level as an element of it.
macro_rules! at_level {
    ($alpha:expr, |$k:ident, $e:ident| $body:expr) => {
        match $alpha.as_rational() {
            Some(r) => {
                #[allow(unused_mut)]
                let mut $k = QQ;
                let $e = r;
                $body
            }
            None => {
                #[allow(unused_mut)]
                let mut $k = $alpha.to_ext();
                let $e = $k.gen();
                $body
            }
        }
    };
}
pub(crate) use at_level;

#[derive(Clone, Debug)]
pub struct GammaCurve {
    pub h: BPoly,
    pub base: (Rat, Rat),
}

pub fn gamma_polynomial(f: &BPoly, a: &(Rat, Rat)) -> Result<GammaCurve> {
    let h = polar(f, a);
    if h.is_zero() {
        return Err(Error::Degenerate("polar curve vanishes identically; choose another base point".into()));
    }
    Ok(GammaCurve { h, base: a.clone() })
}

/// `f - α` as a bivariate polynomial over the field of `α`.
pub(crate) fn level_poly<K: Field>(k: &K, f: &BPoly, alpha: &K::Elem) -> Bi<K::Elem> {
    let mut g = bivar::from_rat(k, &f.to_dense_y());
    if g.is_empty() {
        g.push(Vec::new());
    }
    if g[0].is_empty() {
        g[0].push(k.zero());
    }
    g[0][0] = k.sub(&g[0][0], alpha);
    g
}

pub(crate) fn l1(a: &(Rat, Rat)) -> Rat {
    a.0.abs() + a.1.abs()
}

pub(crate) fn ceil_rat(r: &Rat) -> Rat {
    Rat::from_integer(r.ceil().to_integer())
}

/// Strict bound on `|x| + |y|` over the common zeros of `p` and `q`.
pub fn pair_bound(p: &BPoly, q: &BPoly) -> Result<Rat> {
    let r1 = crate::exact::resultant(p, q, Var::Y)?;
    let r2 = crate::exact::resultant(p, q, Var::X)?;
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::Degenerate("curves share a component; choose another base point".into()));
    }
    Ok(fpoly::root_bound(&mut QQ, r1.coeffs()) + fpoly::root_bound(&mut QQ, r2.coeffs()))
}

pub(crate) fn squarefree(p: &BPoly) -> BPoly {
    BPoly::from_dense_y(&bivar::squarefree(&mut QQ, &p.to_dense_y()))
}

/// Radius beyond which every circle centered at `a` meets `{g = 0}`
/// transversally.
pub fn tangency_radius(g: &BPoly, a: &(Rat, Rat)) -> Result<Rat> {
    let gs = squarefree(g);
    let j = polar(&gs, a);
    if j.is_zero() {
        return Err(Error::Degenerate("curve is a union of circles around the base point".into()));
    }
    Ok(l1(a) + pair_bound(&gs, &j)? + rat(1))
}

/// The polynomial in `(x, t)`, `t` in the `y` slot, taking the value
/// `vals[i]` (a polynomial in `x`) at `t = ts[i]`.
pub(crate) fn interpolate(ts: &[Rat], vals: &[Vec<Rat>]) -> BPoly {
    let mut out = BPoly::zero();
    for (i, ti) in ts.iter().enumerate() {
        let mut basis = vec![rat(1)];
        let mut den = rat(1);
        for (j, tj) in ts.iter().enumerate() {
            if i != j {
                basis = fpoly::mul(&QQ, &basis, &[-tj.clone(), rat(1)]);
                den *= ti - tj;
            }
        }
        for (k, v) in vals[i].iter().enumerate() {
            for (e, b) in basis.iter().enumerate() {
                out.add_term(k as u32, e as u32, v * b / &den);
            }
        }
    }
    out
}

/// `Res_y(h, f - t)` as a polynomial in `(x, t)`, `t` stored in the `y`
/// slot; computed by interpolation in `t`.
pub fn level_eliminant(h: &BPoly, f: &BPoly) -> BPoly {
    let n = h.deg_y().unwrap_or(0) as i64;
    let hd = h.to_dense_y();
    let ts: Vec<Rat> = (0..=n).map(rat).collect();
    let vals: Vec<Vec<Rat>> = ts
        .iter()
        .map(|t| {
            let g = f - &BPoly::constant(t.clone());
            bivar::resultant_y(&mut QQ, &hd, &g.to_dense_y())
        })
        .collect();
    interpolate(&ts, &vals)
}

/// Leading coefficient in the first variable, as a polynomial in the second.
pub(crate) fn leading_in_first(p: &BPoly) -> Vec<Rat> {
    let t = p.transpose();
    match t.deg_y() {
        None => Vec::new(),
        Some(d) => t.y_coeff(d),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Properness {
    ToPlusInfinity,
    ToMinusInfinity,
    NotProper,
}

#[derive(Clone, Debug)]
pub struct CircleCritPoint {
    pub point: CirclePoint,
    pub mu_sign: i32,
    pub f_interval: Interval,
    pub circle_index: i64,
}

/// Morse data of `f` on one circle, kept together with the exact cut so
/// that values can be compared with levels.
pub struct MorseData {
    pub circle: Circle,
    pub points: Vec<CircleCritPoint>,
    cut: Cut<QQ>,
    fd: Bi<Rat>,
}

impl MorseData {
    /// Exact comparison of `f(q_i)` with a level.
    pub fn cmp_level(&mut self, i: usize, alpha: &AlgNumber) -> Result<Ordering> {
        let mut w = rat(1) / rat(16);
        let tiny = Rat::new(1.into(), num_bigint::BigInt::from(1u8) << 200usize);
        loop {
            let fi = self.cut.enclose_at_event(i, &self.fd, &w);
            let ai = alpha.refine(&w).interval().interval();
            if fi.hi < ai.lo {
                return Ok(Ordering::Less);
            }
            if fi.lo > ai.hi {
                return Ok(Ordering::Greater);
            }
            if w < tiny {
                return Err(Error::RadiusNotCertified("circle critical value meets the level".into()));
            }
            w = w / rat(16);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub struct LinkChi {
    pub le: i64,
    pub eq: i64,
    pub ge: i64,
}

impl LinkChi {
    pub fn get(&self, fl: Flavor) -> i64 {
        match fl {
            Flavor::Le => self.le,
            Flavor::Eq => self.eq,
            Flavor::Ge => self.ge,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct JumpSets {
    /// Asymptotic critical values certified by a jump of some link.
    pub lambda: Vec<AlgNumber>,
    pub le: Vec<AlgNumber>,
    pub eq: Vec<AlgNumber>,
    pub ge: Vec<AlgNumber>,
    /// All candidates with their link values, and the rational samples
    /// between them with theirs.
    pub candidates: Vec<(AlgNumber, LinkChi)>,
    pub samples: Vec<(Rat, LinkChi)>,
}

impl JumpSets {
    pub fn get(&self, fl: Flavor) -> &[AlgNumber] {
        match fl {
            Flavor::Le => &self.le,
            Flavor::Eq => &self.eq,
            Flavor::Ge => &self.ge,
        }
    }
}

/// Everything at infinity for one `f` and base point `a`.
#[derive(Clone, Debug)]
pub struct Infinity {
    pub f: BPoly,
    pub a: (Rat, Rat),
    pub h: BPoly,
    p_xt: BPoly,
    q_yt: BPoly,
    base_radius: Rat,
    morse: MorseCache,
}

/// Morse data per radius, shared by clones.
#[derive(Clone, Default)]
struct MorseCache(Arc<Mutex<HashMap<Rat, MorseData>>>);

impl std::fmt::Debug for MorseCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("MorseCache")
    }
}

impl Infinity {
    pub fn new(f: &BPoly, a: &(Rat, Rat)) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::Degenerate("constant function".into()));
        }
        let h = gamma_polynomial(f, a)?.h;
        let tb = tangency_radius(&h, a)?;
        let pts = gradient_zeros(f)?;
        let cb = circle::gradient_zero_radius(f, &pts) + l1(a) + rat(1);
        let p_xt = level_eliminant(&h, f);
        let q_yt = level_eliminant(&h.transpose(), &f.transpose());
        if p_xt.is_zero() || q_yt.is_zero() {
            return Err(Error::Degenerate("level eliminant vanishes; choose another base point".into()));
        }
        let base_radius = ceil_rat(&tb.max(cb));
        Ok(Infinity { f: f.clone(), a: a.clone(), h, p_xt, q_yt, base_radius, morse: MorseCache::default() })
    }

    pub fn base_radius(&self) -> &Rat {
        &self.base_radius
    }

    pub fn circle(&self, r: &Rat) -> Circle {
        Circle { center: self.a.clone(), radius: r.clone() }
    }

    fn radius_k<K: Field>(&self, k: &mut K, alpha: &K::Elem) -> Result<Rat> {
        let px = bivar::eval_y(k, &bivar::from_rat(k, &self.p_xt.to_dense_y()), alpha);
        let qy = bivar::eval_y(k, &bivar::from_rat(k, &self.q_yt.to_dense_y()), alpha);
        let px = fpoly::trimmed(k, &px);
        let qy = fpoly::trimmed(k, &qy);
        if px.is_empty() || qy.is_empty() {
            return Err(Error::Degenerate(
                "the level curve shares a component with the polar curve; choose another base point".into(),
            ));
        }
        let b = fpoly::root_bound(k, &px) + fpoly::root_bound(k, &qy);
        Ok(ceil_rat(&(l1(&self.a) + b + rat(1))).max(self.base_radius.clone()))
    }

    /// Radius beyond which circles around `a` avoid the critical points,
    /// cut `Γ` and `{f = α}` transversally, and miss `Γ ∩ {f = α}`.
    pub fn radius_for(&self, alpha: &AlgNumber) -> Result<Rat> {
        at_level!(alpha, |k, e| self.radius_k(&mut k, &e))
    }

    pub fn morse_data(&self, r: &Rat) -> Result<MorseData> {
        let circle = self.circle(r);
        let mut cut = Cut::new(QQ, &self.h.to_dense_y(), &circle)
            .map_err(|_| Error::RadiusNotCertified("polar curve contains the circle".into()))?;
        let dx = &BPoly::x() - &BPoly::constant(self.a.0.clone());
        let dy = &BPoly::y() - &BPoly::constant(self.a.1.clone());
        let rho = &(&dx * &self.f.deriv_x()) + &(&dy * &self.f.deriv_y());
        let rd = rho.to_dense_y();
        let fd = self.f.to_dense_y();
        let w = rat(1) / rat(1024);
        let mut points = Vec::new();
        for i in 0..cut.n_events() {
            let mu = cut.sign_at_event(i, &rd);
            if mu == 0 {
                return Err(Error::RadiusNotCertified("radial derivative vanishes on the polar curve".into()));
            }
            let idx = match (cut.arc_before(i), cut.arcs[i]) {
                (-1, 1) => 1,
                (1, -1) => -1,
                _ => 0,
            };
            let point = if cut.is_antipode(i) {
                CirclePoint::Antipode
            } else {
                let b = cut.roots[i].clone();
                CirclePoint::Param(AlgNumber::new_unchecked_pub(
                    crate::exact::UPoly::new(cut.sq.clone(), Var::T),
                    b,
                ))
            };
            let f_interval = cut.enclose_at_event(i, &fd, &w);
            points.push(CircleCritPoint { point, mu_sign: mu, f_interval, circle_index: idx });
        }
        Ok(MorseData { circle, points, cut, fd })
    }

    fn lmn_at(&self, r: &Rat, alpha: &AlgNumber) -> Result<(i64, i64, i64)> {
        let mut cache = self.morse.0.lock().unwrap_or_else(|e| e.into_inner());
        let md = match cache.entry(r.clone()) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(self.morse_data(r)?),
        };
        let (mut l, mut m, mut n) = (0, 0, 0);
        for i in 0..md.points.len() {
            let (mu, idx) = (md.points[i].mu_sign, md.points[i].circle_index);
            match (md.cmp_level(i, alpha)?, mu < 0) {
                (Ordering::Greater, true) => l += idx,
                (Ordering::Less, false) => m += idx,
                (Ordering::Less, true) => n += idx,
                _ => {}
            }
        }
        Ok((l, m, n))
    }

    /// `(λ, μ, ν)` at the level `α`, stabilized under radius doubling.
    pub fn lambda_mu_nu(&self, alpha: &AlgNumber) -> Result<(i64, i64, i64)> {
        let mut r = self.radius_for(alpha)?;
        let mut seen: Vec<(i64, i64, i64)> = Vec::new();
        for _ in 0..=8 {
            seen.push(self.lmn_at(&r, alpha)?);
            let n = seen.len();
            if n >= 3 && seen[n - 1] == seen[n - 2] && seen[n - 2] == seen[n - 3] {
                return Ok(seen[n - 1]);
            }
            r = r * rat(2);
        }
        Err(Error::Unstable(format!("λ, μ, ν did not stabilize: {seen:?}")))
    }

    fn link_k<K: Field>(&self, k: K, alpha: &K::Elem, r: &Rat) -> Result<(LinkChi, usize)> {
        let g = level_poly(&k, &self.f, alpha);
        let cut = Cut::new(k, &g, &self.circle(r))
            .map_err(|_| Error::RadiusNotCertified("level curve contains the circle".into()))?;
        let lc = LinkChi {
            le: cut.chi(|s| Flavor::Le.keeps(s)),
            eq: cut.chi(|s| Flavor::Eq.keeps(s)),
            ge: cut.chi(|s| Flavor::Ge.keeps(s)),
        };
        Ok((lc, cut.n_events()))
    }

    /// Euler characteristics of the links at infinity of `{f σ α}` for the
    /// three flavors, at the given radius.
    pub fn link_chis_at(&self, alpha: &AlgNumber, r: &Rat) -> Result<LinkChi> {
        at_level!(alpha, |k, e| self.link_k(k, &e, r).map(|v| v.0))
    }

    /// At an irrational level the circle is cut at a rational level with
    /// no critical value of `f` on the circle in between.
    pub fn link_chis(&self, alpha: &AlgNumber) -> Result<LinkChi> {
        let r = self.radius_for(alpha)?;
        if alpha.as_rational().is_none() {
            if let Some((lo, _)) = levels_near(&self.f, alpha, &self.circle(&r)) {
                return self.link_chis_at(&AlgNumber::from_rat(&lo), &r);
            }
        }
        self.link_chis_at(alpha, &r)
    }

    pub fn link_chi(&self, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
        Ok(self.link_chis(alpha)?.get(fl))
    }

    /// Candidates for asymptotic critical values: real roots of the
    /// leading coefficients of both level eliminants.
    pub fn candidates(&self) -> Vec<AlgNumber> {
        let mut v = AlgNumber::roots_of(&leading_in_first(&self.p_xt));
        v.extend(AlgNumber::roots_of(&leading_in_first(&self.q_yt)));
        v.sort();
        v.dedup();
        v
    }

    pub fn jump_sets(&self) -> Result<JumpSets> {
        let cands = self.candidates();
        let mut out = JumpSets::default();
        if cands.is_empty() {
            return Ok(out);
        }
        let mut samples = vec![cands[0].rational_below()];
        for w in cands.windows(2) {
            samples.push(w[0].rational_between(&w[1]));
        }
        samples.push(cands.last().unwrap().rational_above());
        for s in &samples {
            let l = self.link_chis(&AlgNumber::from_rat(s))?;
            out.samples.push((s.clone(), l));
        }
        for (i, c) in cands.iter().enumerate() {
            let l = self.link_chis(c)?;
            let (lo, hi) = (out.samples[i].1, out.samples[i + 1].1);
            let mut any = false;
            for fl in Flavor::ALL {
                if l.get(fl) != lo.get(fl) || l.get(fl) != hi.get(fl) {
                    any = true;
                    match fl {
                        Flavor::Le => out.le.push(c.clone()),
                        Flavor::Eq => out.eq.push(c.clone()),
                        Flavor::Ge => out.ge.push(c.clone()),
                    }
                }
            }
            if any {
                out.lambda.push(c.clone());
            }
            out.candidates.push((c.clone(), l));
        }
        Ok(out)
    }

    pub fn lambda_set(&self) -> Result<Vec<AlgNumber>> {
        Ok(self.jump_sets()?.lambda)
    }

    /// Certificate of properness from the Morse data on a large circle.
    pub fn properness(&self) -> Result<Properness> {
        let cands = self.candidates();
        let mut r = self.base_radius.clone();
        for _ in 0..6 {
            let mut md = self.morse_data(&r)?;
            let pos = md.points.iter().filter(|p| p.mu_sign > 0).count();
            let neg = md.points.len() - pos;
            if pos > 0 && neg > 0 {
                return Ok(Properness::NotProper);
            }
            let up = neg == 0;
            let mut all_beyond = true;
            if let Some(extreme) = if up { cands.last() } else { cands.first() } {
                for i in 0..md.points.len() {
                    let o = md.cmp_level(i, extreme)?;
                    if (up && o != Ordering::Greater) || (!up && o != Ordering::Less) {
                        all_beyond = false;
                        break;
                    }
                }
            }
            if all_beyond {
                return Ok(if up { Properness::ToPlusInfinity } else { Properness::ToMinusInfinity });
            }
            r = r * rat(2);
        }
        Ok(Properness::NotProper)
    }
}

/// Euler characteristic of `∩ {q_i σ_i 0}` on a circle.
pub fn circle_chi_atoms(atoms: &[(BPoly, Flavor)], c: &Circle) -> Result<i64> {
    Ok(circle_atoms(atoms, c)?.0)
}

/// Euler characteristic of `∩ {q_i σ_i 0}` on a circle and whether that
/// set is empty.
fn circle_atoms(atoms: &[(BPoly, Flavor)], c: &Circle) -> Result<(i64, bool)> {
    let mut prod = BPoly::constant(rat(1));
    for (q, _) in atoms {
        prod = &prod * q;
    }
    let mut cut = Cut::new(QQ, &prod.to_dense_y(), c)?;
    let m = cut.n_events();
    let dense: Vec<(Bi<Rat>, Flavor)> = atoms.iter().map(|(q, fl)| (q.to_dense_y(), *fl)).collect();
    let arc_kept = |i: usize, cut: &Cut<QQ>| {
        let t = cut.arc_sample(i);
        dense.iter().all(|(q, fl)| {
            let sub = circle::substitute(&QQ, q, c);
            fl.keeps(fpoly::sign_at_rat(&mut QQ, &sub, &t))
        })
    };
    if m == 0 {
        return Ok((0, !arc_kept(0, &cut)));
    }
    let (mut pts, mut arcs) = (0i64, 0i64);
    for i in 0..m {
        if dense.iter().all(|(q, fl)| fl.keeps(cut.sign_at_event(i, q))) {
            pts += 1;
        }
        if arc_kept(i, &cut) {
            arcs += 1;
        }
    }
    Ok((pts - arcs, pts + arcs == 0))
}

/// Radius beyond which circles around `a` meet every stratum of the
/// arrangement of the atoms transversally.
pub fn atoms_radius(atoms: &[(BPoly, Flavor)], a: &(Rat, Rat)) -> Result<Rat> {
    let mut r = rat(1) + l1(a);
    for (i, (q, _)) in atoms.iter().enumerate() {
        if q.is_constant() {
            continue;
        }
        r = r.max(tangency_radius(q, a)?);
        for (q2, _) in &atoms[i + 1..] {
            if q2.is_constant() {
                continue;
            }
            let g = crate::exact::bivar::gcd(&mut QQ, &squarefree(q).to_dense_y(), &squarefree(q2).to_dense_y());
            if g.len() > 1 || g.first().map_or(false, |r| r.len() > 1) {
                return Err(Error::Degenerate("defining curves share a component".into()));
            }
            r = r.max(l1(a) + pair_bound(q, q2)? + rat(1));
        }
    }
    Ok(ceil_rat(&r))
}

/// Euler characteristic of the link at infinity of `∩ {q_i σ_i 0}`,
/// checked at two radii.
pub fn link_chi_atoms(atoms: &[(BPoly, Flavor)], seed: u64) -> Result<i64> {
    Ok(link_atoms(atoms, seed)?.0)
}

/// Link at infinity of `∩ {q_i σ_i 0}`: its Euler characteristic and
/// whether it is empty, i.e. whether the set is bounded.
pub fn link_atoms(atoms: &[(BPoly, Flavor)], seed: u64) -> Result<(i64, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Error::Degenerate("no draws".into());
    for _ in 0..20 {
        let a = draw_point(&mut rng);
        let r = match atoms_radius(atoms, &a) {
            Ok(r) => r,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let c = Circle { center: a, radius: r.clone() };
        let v = circle_atoms(atoms, &c)?;
        let w = circle_atoms(atoms, &c.with_radius(r * rat(2)))?;
        if v != w {
            return Err(Error::Unstable(format!("link changed under radius doubling: {v:?} vs {w:?}")));
        }
        return Ok(v);
    }
    Err(last)
}

pub(crate) fn draw_point(rng: &mut ChaCha8Rng) -> (Rat, Rat) {
    let mut c = || Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
    (c(), c())
}

/// A small pseudo-random rational base point for which the polar curve
/// and the level eliminants are non-degenerate. Deterministic in `seed`.
pub fn generic_basepoint(f: &BPoly, seed: u64) -> Result<(Rat, Rat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Error::Degenerate("no draws".into());
    for _ in 0..20 {
        let a = draw_point(&mut rng);
        match Infinity::new(f, &a) {
            Ok(_) => return Ok(a),
            Err(e @ Error::InfiniteCriticalSet(_)) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(Error::Degenerate(format!("no generic base point in 20 draws: {last}")))
}

/// Infinity data at the base point drawn from `seed`.
pub fn infinity_for(f: &BPoly, seed: u64) -> Result<Infinity> {
    let a = generic_basepoint(f, seed)?;
    Infinity::new(f, &a)
}

pub fn certified_radius(f: &BPoly, a: &(Rat, Rat), extra: &[BPoly]) -> Result<Rat> {
    let inf = Infinity::new(f, a)?;
    let mut r = inf.base_radius.clone();
    for g in extra {
        r = r.max(ceil_rat(&tangency_radius(g, a)?));
    }
    Ok(r)
}

pub fn circle_morse_data(f: &BPoly, a: &(Rat, Rat), r: &Rat) -> Result<Vec<CircleCritPoint>> {
    Ok(Infinity::new(f, a)?.morse_data(r)?.points)
}

pub fn lambda_mu_nu(f: &BPoly, a: &(Rat, Rat), alpha: &AlgNumber) -> Result<(i64, i64, i64)> {
    Infinity::new(f, a)?.lambda_mu_nu(alpha)
}

pub fn link_chi(f: &BPoly, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
    infinity_for(f, 0)?.link_chi(alpha, fl)
}

pub fn lambda_set(f: &BPoly, a: &(Rat, Rat)) -> Result<Vec<AlgNumber>> {
    Infinity::new(f, a)?.lambda_set()
}

pub fn jump_sets(f: &BPoly, a: &(Rat, Rat)) -> Result<JumpSets> {
    Infinity::new(f, a)?.jump_sets()
}

/// Number of points of `{g = 0}` on a circle beyond every tangency with
/// circles around a generic center: one per half-branch at infinity.
pub fn half_branches(g: &BPoly) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::Degenerate("zero polynomial".into()));
    }
    if g.is_constant() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut last = Error::Degenerate("no draws".into());
    for _ in 0..20 {
        let a = draw_point(&mut rng);
        let r = match tangency_radius(g, &a) {
            Ok(r) => ceil_rat(&r),
            Err(e) => {
                last = e;
                continue;
            }
        };
        let c = Circle { center: a, radius: r };
        let cut = Cut::new(QQ, &g.to_dense_y(), &c)?;
        let n = cut.n_events();
        if n % 2 == 1 || !(0..n).all(|i| cut.transverse(i)) {
            return Err(Error::RadiusNotCertified("odd or tangential half-branch count".into()));
        }
        return Ok(n);
    }
    Err(last)
}

pub fn r_infinity(g: &BPoly) -> Result<usize> {
    Ok(half_branches(g)? / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;
    use crate::exact::rat::ratq;
    use num_traits::Zero;

    fn p(s: &str) -> BPoly {
        parse_poly(s).unwrap()
    }

    fn q(v: i64) -> AlgNumber {
        AlgNumber::from_rat(&rat(v))
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_polynomial(&p("x^2 + y^2"), &(rat(1), rat(0))).unwrap().h, p("-2*y"));
        assert_eq!(gamma_polynomial(&p("x"), &(rat(0), rat(0))).unwrap().h, p("-y"));
        assert!(gamma_polynomial(&p("5"), &(rat(0), rat(0))).is_err());
    }

    #[test]
    fn basepoint_avoids_symmetry_center() {
        let f = p("((x - 3)^2 + (y - 7)^2)^2");
        assert!(gamma_polynomial(&f, &(rat(3), rat(7))).is_err());
        let a = generic_basepoint(&f, 1).unwrap();
        assert_ne!(a, (rat(3), rat(7)));
    }

    #[test]
    fn eliminant_interpolation_matches_direct() {
        let f = p("x*(x*y - 1)");
        let h = polar(&f, &(ratq(1, 3), ratq(-2, 5)));
        let e = level_eliminant(&h, &f);
        for t in [-2i64, 3, 7] {
            let g = &f - &BPoly::constant(rat(t));
            let direct = crate::exact::resultant(&h, &g, Var::Y).unwrap();
            let specialized = crate::exact::UPoly::new(
                (0..=e.deg_x().unwrap()).map(|i| {
                    let mut v = Rat::zero();
                    for j in 0..=e.deg_y().unwrap() {
                        v += e.coeff(i, j) * crate::exact::rat::pow(&rat(t), j);
                    }
                    v
                }).collect(),
                Var::X,
            );
            assert_eq!(direct, specialized);
        }
    }

    #[test]
    fn morse_data_of_x() {
        let md = circle_morse_data(&p("x"), &(rat(0), rat(0)), &rat(1)).unwrap();
        assert_eq!(md.len(), 2);
        // (1, 0) at t = 0 is the maximum; (-1, 0) is the antipode, the minimum
        let at_max = md.iter().find(|c| matches!(c.point, CirclePoint::Param(_))).unwrap();
        assert_eq!((at_max.mu_sign, at_max.circle_index), (1, -1));
        let at_min = md.iter().find(|c| c.point == CirclePoint::Antipode).unwrap();
        assert_eq!((at_min.mu_sign, at_min.circle_index), (-1, 1));
    }

    #[test]
    fn lmn_examples() {
        let a = (ratq(1, 3), ratq(2, 7));
        for al in [-3, 0, 5] {
            assert_eq!(lambda_mu_nu(&p("x^2 + y^2"), &a, &q(al)).unwrap().0, 0);
            assert_eq!(lambda_mu_nu(&p("x^2 + y^2"), &a, &q(al)).unwrap().1, 0);
            assert_eq!(lambda_mu_nu(&p("x"), &a, &q(al)).unwrap(), (0, 0, 1));
        }
    }

    #[test]
    fn links() {
        assert_eq!(link_chi(&p("x"), &q(0), Flavor::Eq).unwrap(), 2);
        assert_eq!(link_chi(&p("x"), &q(0), Flavor::Le).unwrap(), 1);
        assert_eq!(link_chi(&p("x"), &q(0), Flavor::Ge).unwrap(), 1);
        for fl in Flavor::ALL {
            assert_eq!(link_chi(&p("x^2 + y^2"), &q(1), fl).unwrap(), 0);
        }
        assert_eq!(link_chi(&p("x*y"), &q(0), Flavor::Eq).unwrap(), 4);
    }

    #[test]
    fn broughton_lambda() {
        let f = p("x*(x*y - 1)");
        let inf = infinity_for(&f, 0).unwrap();
        let js = inf.jump_sets().unwrap();
        assert_eq!(js.lambda, vec![q(0)]);
        assert_eq!(js.eq, vec![q(0)]);
        assert_eq!(inf.link_chi(&q(0), Flavor::Eq).unwrap(), 6);
        assert_eq!(inf.link_chi(&q(1), Flavor::Eq).unwrap(), 4);
        assert!(infinity_for(&p("x^2 + y^2"), 0).unwrap().lambda_set().unwrap().is_empty());
        assert!(infinity_for(&p("x"), 0).unwrap().lambda_set().unwrap().is_empty());
    }

    #[test]
    fn atom_links() {
        let l = |a: &[(&str, Flavor)]| {
            let atoms: Vec<_> = a.iter().map(|(s, fl)| (p(s), *fl)).collect();
            link_chi_atoms(&atoms, 3).unwrap()
        };
        assert_eq!(l(&[("x^2 + y^2 - 1", Flavor::Le)]), 0);
        assert_eq!(l(&[("y", Flavor::Le)]), 1);
        assert_eq!(l(&[("y", Flavor::Le), ("x - 1", Flavor::Eq)]), 1);
        assert_eq!(l(&[("y - x^2", Flavor::Le), ("x + y", Flavor::Eq)]), 2);
        assert_eq!(l(&[("y - x^2", Flavor::Eq)]), 2);
        assert_eq!(l(&[("x*y", Flavor::Ge)]), 2);
    }

    #[test]
    fn branches() {
        assert_eq!(half_branches(&p("x")).unwrap(), 2);
        assert_eq!(r_infinity(&p("x")).unwrap(), 1);
        assert_eq!(half_branches(&p("x*(x*y - 1)")).unwrap(), 6);
        assert_eq!(r_infinity(&p("x*(x*y - 1)")).unwrap(), 3);
        assert_eq!(half_branches(&p("x^2 + y^2 - 1")).unwrap(), 0);
    }

    #[test]
    fn properness() {
        let pr = |s: &str| infinity_for(&p(s), 0).unwrap().properness().unwrap();
        assert_eq!(pr("x^2 + y^2"), Properness::ToPlusInfinity);
        assert_eq!(pr("-x^4 - y^2 + x"), Properness::ToMinusInfinity);
        assert_eq!(pr("x"), Properness::NotProper);
        assert_eq!(pr("x*(x*y - 1)"), Properness::NotProper);
        assert_eq!(pr("x^2 - y^2"), Properness::NotProper);
    }
}

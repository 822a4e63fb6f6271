use super::{finish, Eval, IdentityId, IdentityReport, Params};
use crate::circle;
use crate::critical::{critical_points_by_arcs, fiber_chis_by_arcs, find_critical_points, local_link_chis, CriticalPoint};
use crate::error::{Error, Result};
use crate::euler;
use crate::exact::rat::{rat, Rat};
use crate::exact::{AlgNumber, BPoly};
use crate::flavor::Flavor;
use crate::infinity::{self, Infinity, JumpSets, LinkChi, Properness};
use serde_json::{json, Value};
use std::cell::{OnceCell, RefCell};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Offset between the base point seeds of the two pipelines.
const LHS_SEED_SHIFT: u64 = 1_000_003;

fn cell<'a, T>(c: &'a OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&'a T> {
    c.get_or_init(init).as_ref().map_err(Clone::clone)
}

#[derive(Clone, Copy)]
enum Weight {
    Ind,
    IndNeg,
    Deg,
}

/// Rational samples of the open intervals cut out by sorted breakpoints.
pub(crate) fn gap_samples(bps: &[AlgNumber]) -> Vec<Rat> {
    if bps.is_empty() {
        return vec![rat(0)];
    }
    let mut v = vec![bps[0].rational_below()];
    for w in bps.windows(2) {
        v.push(w[0].rational_between(&w[1]));
    }
    v.push(bps.last().unwrap().rational_above());
    v
}

fn alg_key(a: &AlgNumber) -> String {
    a.to_string()
}

/// Cached data for verifying the identities of one polynomial.
pub struct PolyCtx {
    pub f: BPoly,
    pub seed: u64,
    desc: String,
    crit: OnceCell<Result<Vec<CriticalPoint>>>,
    degs: OnceCell<Result<Vec<CriticalPoint>>>,
    inf: OnceCell<Result<Infinity>>,
    inf_neg: OnceCell<Result<Infinity>>,
    inf_lhs: OnceCell<Result<Infinity>>,
    js: OnceCell<Result<JumpSets>>,
    proper: OnceCell<Result<Properness>>,
    deg_inf: OnceCell<Result<i64>>,
    plane: OnceCell<Result<(i64, i64)>>,
    chis: RefCell<HashMap<(String, Flavor), i64>>,
    links: RefCell<HashMap<String, LinkChi>>,
    lmns: RefCell<HashMap<(String, bool), (i64, i64, i64)>>,
}

impl PolyCtx {
    pub fn new(f: &BPoly, seed: u64) -> Self {
        PolyCtx {
            f: f.clone(),
            seed,
            desc: format!("poly: {f}"),
            crit: OnceCell::new(),
            degs: OnceCell::new(),
            inf: OnceCell::new(),
            inf_neg: OnceCell::new(),
            inf_lhs: OnceCell::new(),
            js: OnceCell::new(),
            proper: OnceCell::new(),
            deg_inf: OnceCell::new(),
            plane: OnceCell::new(),
            chis: RefCell::new(HashMap::new()),
            links: RefCell::new(HashMap::new()),
            lmns: RefCell::new(HashMap::new()),
        }
    }

    pub fn description(&self) -> &str {
        &self.desc
    }

    /// Critical points with indices from arc counts.
    pub fn critical(&self) -> Result<&[CriticalPoint]> {
        if self.f.is_constant() {
            return Err(Error::Degenerate("constant function".into()));
        }
        cell(&self.crit, || critical_points_by_arcs(&self.f)).map(|v| v.as_slice())
    }

    /// Critical points with local degrees and values only; the index
    /// fields are not computed by arcs unless `critical` already ran.
    pub fn critical_degrees(&self) -> Result<&[CriticalPoint]> {
        if let Some(Ok(v)) = self.crit.get() {
            return Ok(v);
        }
        if self.f.is_constant() {
            return Err(Error::Degenerate("constant function".into()));
        }
        cell(&self.degs, || find_critical_points(&self.f)).map(|v| v.as_slice())
    }

    pub fn infinity(&self) -> Result<&Infinity> {
        self.critical_degrees()?;
        cell(&self.inf, || infinity::infinity_for(&self.f, self.seed))
    }

    fn infinity_neg(&self) -> Result<&Infinity> {
        let a = self.infinity()?.a.clone();
        cell(&self.inf_neg, || Infinity::new(&-&self.f, &a))
    }

    fn infinity_lhs(&self) -> Result<&Infinity> {
        self.critical_degrees()?;
        cell(&self.inf_lhs, || infinity::infinity_for(&self.f, self.seed.wrapping_add(LHS_SEED_SHIFT)))
    }

    pub fn jump_sets(&self) -> Result<&JumpSets> {
        cell(&self.js, || self.infinity()?.jump_sets())
    }

    pub fn properness(&self) -> Result<Properness> {
        cell(&self.proper, || {
            if !self.jump_sets()?.lambda.is_empty() {
                return Ok(Properness::NotProper);
            }
            self.infinity()?.properness()
        })
        .copied()
    }

    fn require_proper(&self) -> Result<Properness> {
        match self.properness()? {
            Properness::NotProper => Err(Error::Hypothesis("f is not proper".into())),
            p => Ok(p),
        }
    }

    pub fn degree_at_infinity(&self) -> Result<i64> {
        self.critical_degrees()?;
        cell(&self.deg_inf, || circle::degree_at_infinity(&self.f)).copied()
    }

    /// `χ(R²)` and `χ(Lk^∞ R²)` from a sweep of `{x² + y² + 1 ≥ 0}`.
    fn plane(&self) -> Result<(i64, i64)> {
        cell(&self.plane, || {
            let sq = &BPoly::x().pow(2) + &BPoly::y().pow(2);
            let atoms = [(&sq + &BPoly::constant(rat(1)), Flavor::Ge)];
            let cc = euler::sweep_atoms(&atoms, false)?.chi_c();
            let lk = infinity::link_chi_atoms(&atoms, self.seed)?;
            Ok((cc + lk, lk))
        })
        .copied()
    }

    /// Critical values and the sublevel and superlevel jump sets.
    pub fn breakpoints(&self) -> Result<Vec<AlgNumber>> {
        let mut b: Vec<AlgNumber> = self.critical_degrees()?.iter().map(|c| c.value.clone()).collect();
        let js = self.jump_sets()?;
        b.extend(js.le.iter().cloned());
        b.extend(js.ge.iter().cloned());
        b.sort();
        b.dedup();
        Ok(b)
    }

    /// `χ({f σ α})`: sweep plus the link seen from the second base point.
    pub fn chi(&self, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
        let key = (alg_key(alpha), fl);
        if let Some(v) = self.chis.borrow().get(&key) {
            return Ok(*v);
        }
        let l = self.lhs_links(alpha)?;
        let c = match alpha.as_rational() {
            Some(_) => euler::chi_c_flavors(&self.f, alpha)?,
            None => self.chi_c_irrational(alpha, l.eq)?,
        };
        for (i, g) in Flavor::ALL.iter().enumerate() {
            self.chis.borrow_mut().insert((key.0.clone(), *g), c[i] + l.get(*g));
        }
        Ok(self.chis.borrow()[&key])
    }

    /// Sweeping over a number field of high degree is slow, so an
    /// irrational level is handled from rational levels on either side.
    fn chi_c_irrational(&self, gamma: &AlgNumber, ends: i64) -> Result<[i64; 3]> {
        let crit = self.critical_degrees()?;
        let mut near: Vec<AlgNumber> = crit.iter().map(|c| c.value.clone()).collect();
        near.extend(self.infinity_lhs()?.candidates());
        near.extend(self.infinity()?.candidates());
        let below = match near.iter().filter(|v| *v < gamma).max() {
            Some(v) => v.rational_between(gamma),
            None => gamma.rational_below(),
        };
        let above = match near.iter().filter(|v| *v > gamma).min() {
            Some(v) => gamma.rational_between(v),
            None => gamma.rational_above(),
        };
        let mut points: Vec<_> = crit.iter().map(|c| c.point.clone()).collect();
        let sing: Vec<usize> = (0..crit.len()).filter(|&i| crit[i].value == *gamma).collect();
        euler::chi_c_flavors_split(&self.f, &below, &above, &mut points, &sing, ends)
    }

    fn lhs_links(&self, alpha: &AlgNumber) -> Result<LinkChi> {
        self.infinity_lhs()?.link_chis(alpha)
    }

    /// Links at infinity from the base point of the right-hand pipeline.
    pub fn links(&self, alpha: &AlgNumber) -> Result<LinkChi> {
        let key = alg_key(alpha);
        if let Some(v) = self.links.borrow().get(&key) {
            return Ok(*v);
        }
        let v = self.infinity()?.link_chis(alpha)?;
        self.links.borrow_mut().insert(key, v);
        Ok(v)
    }

    fn sum(&self, alpha: Option<&AlgNumber>, keep: impl Fn(Ordering) -> bool, w: Weight) -> Result<i64> {
        let mut s = 0;
        let pts = match w {
            Weight::Deg => self.critical_degrees()?,
            _ => self.critical()?,
        };
        for c in pts {
            if alpha.map_or(true, |a| keep(c.value.cmp(a))) {
                s += match w {
                    Weight::Ind => c.ind_f,
                    Weight::IndNeg => c.ind_neg_f,
                    Weight::Deg => c.local_degree,
                };
            }
        }
        Ok(s)
    }

    fn lmn_cached(&self, alpha: &AlgNumber, neg: bool) -> Result<(i64, i64, i64)> {
        let key = (alg_key(alpha), neg);
        if let Some(v) = self.lmns.borrow().get(&key) {
            return Ok(*v);
        }
        let v = if neg {
            self.infinity_neg()?.lambda_mu_nu(&alpha.neg())?
        } else {
            self.infinity()?.lambda_mu_nu(alpha)?
        };
        self.lmns.borrow_mut().insert(key, v);
        Ok(v)
    }

    /// `(λ, μ, ν)` of `f` at `α`.
    pub fn lmn(&self, alpha: &AlgNumber) -> Result<(i64, i64, i64)> {
        self.lmn_cached(alpha, false)
    }

    /// `(λ, μ, ν)` of `-f` at `-α`.
    pub fn lmn_neg(&self, alpha: &AlgNumber) -> Result<(i64, i64, i64)> {
        self.lmn_cached(alpha, true)
    }

    fn crit_witness(&self) -> Result<Value> {
        let by_arcs = matches!(self.crit.get(), Some(Ok(_)));
        Ok(Value::Array(
            self.critical_degrees()?
                .iter()
                .map(|c| {
                    let mut w = json!({
                        "box": c.describe(),
                        "value": c.value.to_string(),
                        "deg": c.local_degree,
                    });
                    if by_arcs {
                        w["ind"] = json!(c.ind_f);
                        w["ind_neg"] = json!(c.ind_neg_f);
                    }
                    w
                })
                .collect(),
        ))
    }

    pub fn verify(&self, id: IdentityId, params: &Params) -> IdentityReport {
        let alpha = if id.uses_alpha() {
            match params.alpha.clone() {
                Some(a) => Some(a),
                None => match super::corpus::auto_alphas(self) {
                    Ok(v) => Some(v[v.len() / 2].clone()),
                    Err(e) => return finish(id, &self.desc, Err(e), None),
                },
            }
        } else {
            None
        };
        let r = self.eval(id, alpha.as_ref().map(AlgNumber::from_rat).as_ref());
        finish(id, &self.desc, r, alpha.as_ref())
    }

    fn eval(&self, id: IdentityId, alpha: Option<&AlgNumber>) -> Result<Eval> {
        use IdentityId::*;
        let mut ev = Eval::new();
        self.critical_degrees()?;
        let a = || alpha.ok_or_else(|| Error::Precondition("a level α is required".into()));
        let gt = |o: Ordering| o == Ordering::Greater;
        let lt = |o: Ordering| o == Ordering::Less;
        let le = |o: Ordering| o != Ordering::Greater;
        let ne = |o: Ordering| o != Ordering::Equal;
        match id {
            KhLocFiber | KhLocLe | KhLocGe => self.local(id, &mut ev)?,
            Sekalski => self.sekalski(&mut ev)?,
            T31Ge => {
                self.require_proper()?;
                let a = a()?;
                let (c_ge, c_eq) = (self.chi(a, Flavor::Ge)?, self.chi(a, Flavor::Eq)?);
                ev.wit("chi_ge", c_ge).wit("chi_eq", c_eq);
                ev.int("", c_ge - c_eq, self.sum(Some(a), gt, Weight::Ind)?);
            }
            T31Le => {
                self.require_proper()?;
                let a = a()?;
                let (c, l) = (self.chi(a, Flavor::Le)?, self.lhs_links(a)?.le);
                ev.wit("chi_le", c).wit("link_le", l);
                ev.int("", c - l, self.sum(Some(a), le, Weight::Ind)?);
            }
            C32Fiber => {
                self.require_proper()?;
                let a = a()?;
                let (x, _) = self.plane()?;
                let rhs = x - self.sum(Some(a), gt, Weight::Ind)? - self.sum(Some(a), lt, Weight::IndNeg)?;
                ev.wit("chi_plane", x);
                ev.int("", self.chi(a, Flavor::Eq)?, rhs);
            }
            C32Diff => {
                self.require_proper()?;
                let a = a()?;
                let lhs = self.chi(a, Flavor::Ge)? - self.chi(a, Flavor::Le)?;
                ev.int("", lhs, self.sum(Some(a), gt, Weight::Ind)? - self.sum(Some(a), lt, Weight::Ind)?);
            }
            C33 => {
                self.require_proper()?;
                let a = a()?;
                let (x, _) = self.plane()?;
                ev.int("", self.lhs_links(a)?.le, x - self.sum(None, gt, Weight::Ind)?);
            }
            C34 => {
                self.require_proper()?;
                let (x, lx) = self.plane()?;
                ev.wit("chi_plane", x).wit("link_plane", lx);
                ev.int("", 2 * x - lx, self.sum(None, gt, Weight::Ind)? + self.sum(None, gt, Weight::IndNeg)?);
            }
            P36Ge | P36Le | C37Fiber | C37Diff | P38Le | P38Ge | C39 => self.lambda_family(id, a()?, &mut ev)?,
            T316 | T317 | C318 | T44 => self.jump_family(id, &mut ev)?,
            P319 => self.plateaus(&mut ev)?,
            T320 | T321Le | T321Ge | C322 | T45All => self.breakpoint_family(id, &mut ev)?,
            P41Ge | P41Le | C42Fiber | C42Diff | P43Links => {
                let a = a()?;
                let (l, m, n) = self.lmn(a)?;
                ev.wit("lambda", l).wit("mu", m).wit("nu", n);
                let sgt = self.sum(Some(a), gt, Weight::Deg)?;
                let slt = self.sum(Some(a), lt, Weight::Deg)?;
                match id {
                    P41Ge => {
                        ev.int("", self.chi(a, Flavor::Ge)? - self.chi(a, Flavor::Eq)?, sgt + l);
                    }
                    P41Le => {
                        ev.int("", self.chi(a, Flavor::Le)? - self.chi(a, Flavor::Eq)?, slt - m);
                    }
                    C42Fiber => {
                        ev.int("", self.chi(a, Flavor::Eq)?, 1 - self.sum(Some(a), ne, Weight::Deg)? - l + m);
                    }
                    C42Diff => {
                        ev.int("", self.chi(a, Flavor::Ge)? - self.chi(a, Flavor::Le)?, sgt - slt + l + m);
                    }
                    _ => {
                        let d = self.degree_at_infinity()?;
                        let lk = self.lhs_links(a)?;
                        ev.wit("deg_inf", d).wit("links", lk);
                        let one = 1 - d - l + m;
                        ev.int("Lk(f <= a)", lk.le, one);
                        ev.int("Lk(f >= a)", lk.ge, one);
                        ev.int("Lk(f = a)", lk.eq, 2 * one);
                    }
                }
            }
            P54All | P55All | T56 | T58 => {
                return Err(Error::Precondition(format!("{id} needs a region or curve")));
            }
        }
        ev.wit("critical_points", self.crit_witness()?);
        Ok(ev)
    }

    fn local(&self, id: IdentityId, ev: &mut Eval) -> Result<()> {
        let crit = self.critical_degrees()?;
        if crit.is_empty() {
            return Err(Error::Hypothesis("f has no critical points".into()));
        }
        let mut pts: Vec<_> = crit.iter().map(|c| c.point.clone()).collect();
        for (i, c) in crit.iter().enumerate() {
            let rhs = 1 - c.local_degree;
            match id {
                IdentityId::KhLocFiber => {
                    let (below, above) = fiber_chis_by_arcs(&self.f, &mut pts, i)?;
                    ev.int(&format!("p{i}, delta < 0"), below, rhs);
                    ev.int(&format!("p{i}, delta > 0"), above, rhs);
                }
                _ => {
                    let l = local_link_chis(&self.f, &mut pts, i)?;
                    let v = if id == IdentityId::KhLocLe { l.le } else { l.ge };
                    ev.int(&format!("p{i}"), v, rhs);
                }
            }
        }
        Ok(())
    }

    fn sekalski(&self, ev: &mut Eval) -> Result<()> {
        let d = self.degree_at_infinity()?;
        let js = self.jump_sets()?;
        let mut at = Vec::new();
        let mut rhs = 1i64;
        for l in &js.lambda {
            let r = match l.as_rational() {
                Some(q) => infinity::r_infinity(&(&self.f - &BPoly::constant(q)))? as i64,
                None => self.links(l)?.eq / 2,
            };
            rhs += r;
            at.push(json!({"level": l.to_string(), "r": r}));
        }
        let mut gaps = Vec::new();
        for s in gap_samples(&js.lambda) {
            let r = infinity::r_infinity(&(&self.f - &BPoly::constant(s.clone())))? as i64;
            rhs -= r;
            gaps.push(json!({"level": crate::exact::rat::to_pq(&s), "r": r}));
        }
        ev.wit("lambda_set", &js.lambda).wit("r_at_lambda", at).wit("r_between", gaps);
        ev.int("", d, rhs);
        Ok(())
    }

    fn lambda_family(&self, id: IdentityId, a: &AlgNumber, ev: &mut Eval) -> Result<()> {
        use IdentityId::*;
        let gt = |o: Ordering| o == Ordering::Greater;
        let lt = |o: Ordering| o == Ordering::Less;
        let (l, m, n) = self.lmn(a)?;
        let (ln, mn, nn) = self.lmn_neg(a)?;
        ev.wit("lambda", l).wit("mu", m).wit("nu", n);
        ev.wit("lambda_neg", ln).wit("mu_neg", mn).wit("nu_neg", nn);
        let (x, lx) = self.plane()?;
        let s_gt = self.sum(Some(a), gt, Weight::Ind)?;
        let s_lt_neg = self.sum(Some(a), lt, Weight::IndNeg)?;
        let tot = self.sum(None, gt, Weight::Ind)?;
        let tot_neg = self.sum(None, gt, Weight::IndNeg)?;
        match id {
            P36Ge => {
                ev.int("", self.chi(a, Flavor::Ge)? - self.chi(a, Flavor::Eq)?, s_gt + l);
            }
            P36Le => {
                ev.int("", self.chi(a, Flavor::Le)? - self.chi(a, Flavor::Eq)?, s_lt_neg + ln);
            }
            C37Fiber => {
                ev.int("", self.chi(a, Flavor::Eq)?, x - s_gt - s_lt_neg - l - ln);
            }
            C37Diff => {
                ev.int("", self.chi(a, Flavor::Ge)? - self.chi(a, Flavor::Le)?, s_gt + l - s_lt_neg - ln);
            }
            P38Le => {
                ev.int("", self.lhs_links(a)?.le, x - tot - l + m);
            }
            P38Ge => {
                ev.int("", self.lhs_links(a)?.ge, x - tot_neg - ln + mn);
            }
            _ => {
                ev.int("", self.lhs_links(a)?.eq, 2 * x - lx - tot - tot_neg - l + m - ln + mn);
            }
        }
        Ok(())
    }

    /// `Σ_gaps v(gap) − Σ_jumps v(jump)` for a per-level quantity `v`.
    fn variation(&self, jumps: &[AlgNumber], v: impl Fn(&AlgNumber) -> Result<i64>) -> Result<(i64, Value)> {
        let mut total = 0;
        let mut seen = Vec::new();
        for s in gap_samples(jumps) {
            let x = v(&AlgNumber::from_rat(&s))?;
            total += x;
            seen.push(json!({"level": crate::exact::rat::to_pq(&s), "kind": "between", "value": x}));
        }
        for j in jumps {
            let x = v(j)?;
            total -= x;
            seen.push(json!({"level": j.to_string(), "kind": "at", "value": x}));
        }
        Ok((total, Value::Array(seen)))
    }

    fn jump_family(&self, id: IdentityId, ev: &mut Eval) -> Result<()> {
        use IdentityId::*;
        let js = self.jump_sets()?.clone();
        let (x, lx) = self.plane()?;
        let tot = || self.sum(None, |_| true, Weight::Ind);
        let tot_neg = || self.sum(None, |_| true, Weight::IndNeg);
        ev.wit("jumps_le", &js.le).wit("jumps_eq", &js.eq).wit("jumps_ge", &js.ge);
        ev.wit("chi_plane", x).wit("chi_plane_link", lx);
        let var = |fl: Flavor| self.variation(js.get(fl), |t| Ok(self.links(t)?.get(fl)));
        match id {
            T316 => {
                let (v, w) = var(Flavor::Le)?;
                ev.wit("links", w).int("", x, tot()? + v);
            }
            T317 => {
                let (v, w) = var(Flavor::Ge)?;
                ev.wit("links", w).int("", x, tot_neg()? + v);
            }
            C318 => {
                let (v, w) = var(Flavor::Eq)?;
                ev.wit("links", w).int("", 2 * x - lx, tot()? + tot_neg()? + v);
            }
            _ => {
                let d = self.degree_at_infinity()?;
                ev.wit("deg_inf", d);
                let (vle, wle) = var(Flavor::Le)?;
                let (vge, wge) = var(Flavor::Ge)?;
                let (veq, weq) = var(Flavor::Eq)?;
                ev.wit("links_le", wle).wit("links_ge", wge).wit("links_eq", weq);
                ev.int("<=", x, d + vle);
                ev.int(">=", x, d + vge);
                ev.int("=", 2 * x - lx, 2 * d + veq);
            }
        }
        Ok(())
    }

    fn breakpoint_family(&self, id: IdentityId, ev: &mut Eval) -> Result<()> {
        use IdentityId::*;
        let bps = self.breakpoints()?;
        let (x, _) = self.plane()?;
        let tot = || self.sum(None, |_| true, Weight::Ind);
        let tot_neg = || self.sum(None, |_| true, Weight::IndNeg);
        ev.wit("breakpoints", &bps);
        let var = |fl: Flavor| self.variation(&bps, |t| self.chi(t, fl));
        let diff = || self.variation(&bps, |t| Ok(self.chi(t, Flavor::Ge)? - self.chi(t, Flavor::Le)?));
        match id {
            T320 => {
                let (v, w) = var(Flavor::Eq)?;
                ev.wit("chi_eq", w).int("", x, tot()? + tot_neg()? + v);
            }
            T321Le => {
                let (v, w) = var(Flavor::Le)?;
                ev.wit("chi_le", w).int("", x, tot()? + v);
            }
            T321Ge => {
                let (v, w) = var(Flavor::Ge)?;
                ev.wit("chi_ge", w).int("", x, tot_neg()? + v);
            }
            C322 => {
                let (v, w) = diff()?;
                ev.wit("chi_ge_minus_le", w).int("", v, tot()? - tot_neg()?);
            }
            _ => {
                let d = self.degree_at_infinity()?;
                ev.wit("deg_inf", d);
                let (veq, _) = var(Flavor::Eq)?;
                let (vle, _) = var(Flavor::Le)?;
                let (vge, _) = var(Flavor::Ge)?;
                let (ge_gaps, ge_at) = self.split_variation(&bps, Flavor::Ge)?;
                let (le_gaps, le_at) = self.split_variation(&bps, Flavor::Le)?;
                ev.int("=", x, 2 * d + veq);
                ev.int("<=", x, d + vle);
                ev.int(">=", x, d + vge);
                ev.int("ge-le", ge_gaps - le_gaps, ge_at - le_at);
            }
        }
        Ok(())
    }

    fn split_variation(&self, bps: &[AlgNumber], fl: Flavor) -> Result<(i64, i64)> {
        let mut g = 0;
        for s in gap_samples(bps) {
            g += self.chi(&AlgNumber::from_rat(&s), fl)?;
        }
        let mut a = 0;
        for b in bps {
            a += self.chi(b, fl)?;
        }
        Ok((g, a))
    }

    /// Each plateau of the breakpoint set is probed at its sample and two
    /// further rational points for all three flavors.
    fn plateaus(&self, ev: &mut Eval) -> Result<()> {
        let bps = self.breakpoints()?;
        let samples = gap_samples(&bps);
        let mut probes: Vec<[Rat; 3]> = Vec::new();
        for (i, s) in samples.iter().enumerate() {
            let lo = if i == 0 { None } else { Some(&bps[i - 1]) };
            let hi = bps.get(i);
            let sa = AlgNumber::from_rat(s);
            let p = match lo {
                Some(l) => l.rational_between(&sa),
                None => s - rat(1),
            };
            let q = match hi {
                Some(h) => sa.rational_between(h),
                None => s + rat(1),
            };
            probes.push([s.clone(), p, q]);
        }
        let (mut constant, mut total) = (0i64, 0i64);
        let mut seen = Vec::new();
        for pr in &probes {
            for fl in Flavor::ALL {
                let vals: Vec<i64> =
                    pr.iter().map(|t| self.chi(&AlgNumber::from_rat(t), fl)).collect::<Result<_>>()?;
                total += 1;
                if vals.iter().all(|v| *v == vals[0]) {
                    constant += 1;
                }
                let levels: Vec<String> = pr.iter().map(crate::exact::rat::to_pq).collect();
                seen.push(json!({"flavor": fl.symbol(), "levels": levels, "chi": vals}));
            }
        }
        ev.wit("breakpoints", &bps).wit("probes", seen);
        ev.int("", constant, total);
        Ok(())
    }
}

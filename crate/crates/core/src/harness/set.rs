use super::poly::gap_samples;
use super::{finish, Eval, IdentityId, IdentityReport, Params};
use crate::error::{Error, Result};
use crate::exact::rat::{rat, ratq, Rat};
use crate::exact::AlgNumber;
use crate::stratified::{self, bad_directions, gauss_bonnet, Direction, GbMode, PlaneSet};

const PARAMS: [(i64, i64); 10] = [(1, 3), (2, 1), (-3, 5), (5, 7), (-4, 1), (7, 2), (-2, 9), (9, 4), (-5, 3), (3, 8)];

/// The first `n` directions of a fixed rational list that are generic
/// for `x`.
pub fn generic_directions(x: &PlaneSet, n: usize) -> Result<Vec<Direction>> {
    let bad = bad_directions(x)?;
    let out: Vec<Direction> = PARAMS
        .iter()
        .map(|&(p, q)| Direction::from_param(&ratq(p, q)))
        .filter(|d| !bad.contains(d))
        .take(n)
        .collect();
    if out.len() < n {
        return Err(Error::Degenerate("too few generic directions in the fixed list".into()));
    }
    Ok(out)
}

/// Levels below, at or between and above the critical values of `v*`.
pub fn linear_alphas(x: &PlaneSet, d: &Direction) -> Result<Vec<Rat>> {
    let mut vals: Vec<AlgNumber> =
        stratified::stratified_critical_points(x, &d.linear())?.into_iter().map(|p| p.value).collect();
    vals.sort();
    vals.dedup();
    let mut c = gap_samples(&vals);
    c.extend(vals.iter().filter_map(AlgNumber::as_rational));
    c.sort();
    Ok(vec![c[0].clone(), c[c.len() / 2].clone(), c[c.len() - 1].clone()])
}

pub struct SetCtx {
    pub x: PlaneSet,
    desc: String,
}

impl SetCtx {
    pub fn new(x: &PlaneSet, _params: &Params) -> Self {
        SetCtx { x: x.clone(), desc: super::Input::Set(x.clone()).to_string() }
    }

    pub fn verify(&self, id: IdentityId, params: &Params) -> IdentityReport {
        let mut alpha = None;
        let r = (|| {
            let mut ev = Eval::new();
            match id {
                IdentityId::P54All | IdentityId::P55All => {
                    let d = match &params.direction {
                        Some(d) => d.clone(),
                        None => generic_directions(&self.x, 1)?.remove(0),
                    };
                    let a = match &params.alpha {
                        Some(a) => a.clone(),
                        None => linear_alphas(&self.x, &d)?.remove(1),
                    };
                    alpha = Some(a.clone());
                    let ms = stratified::linear_morse_summary(&self.x, &d, &a)?;
                    if id == IdentityId::P54All {
                        ev.int(">= minus =", ms.chi.ge - ms.chi.eq, ms.above);
                        ev.int("<= minus =", ms.chi.le - ms.chi.eq, ms.below_neg);
                        ev.int("=", ms.chi.eq, ms.chi_x - ms.above - ms.below_neg);
                        ev.int(">= minus <=", ms.chi.ge - ms.chi.le, ms.above - ms.below_neg);
                    } else {
                        ev.int("Lk <=", ms.link.le, ms.chi_x - ms.total);
                        ev.int("Lk >=", ms.link.ge, ms.chi_x - ms.total_neg);
                        ev.int("Lk =", ms.link.eq, 2 * ms.chi_x - ms.link_x - ms.total - ms.total_neg);
                    }
                    ev.wit("summary", &ms);
                }
                IdentityId::T56 => {
                    if !self.x.is_compact()? {
                        return Err(Error::Hypothesis(format!("{} is not compact", self.x)));
                    }
                    let gb = gauss_bonnet(&self.x, GbMode::Exact)?;
                    if gb.error > rat(0) {
                        ev.with_tol(gb.error.clone());
                    }
                    ev.part("", gb.value.clone(), rat(gb.chi));
                    ev.wit("gauss_bonnet", &gb);
                }
                IdentityId::T58 => {
                    let gb = gauss_bonnet(&self.x, params.gb_mode)?;
                    match params.gb_mode {
                        GbMode::Sampled(_) => {
                            ev.with_tol(params.tol.clone());
                        }
                        GbMode::Exact => {
                            let e = &gb.error + &gb.rhs_error;
                            if e > rat(0) {
                                ev.with_tol(e);
                            }
                        }
                    }
                    ev.part("", gb.value.clone(), gb.rhs.clone());
                    ev.wit("gauss_bonnet", &gb);
                }
                _ => return Err(Error::Precondition(format!("{id} needs a polynomial input"))),
            }
            Ok(ev)
        })();
        finish(id, &self.desc, r, alpha.as_ref())
    }
}

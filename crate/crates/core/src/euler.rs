//! Euler characteristics of `{f σ α}` by a cylindrical sweep.
//!
//! The plane is cut by vertical lines over the critical abscissas of
//! `f - α`. Over a critical abscissa the fiber contributes its own
//! compactly supported Euler characteristic; over an open interval between
//! two of them the cylinder contributes minus that of a sample fiber.

use crate::critical::{critical_values, fiber_chis_by_arcs};
use crate::error::{Error, Result};
use crate::exact::bivar::{self, Bi};
use crate::exact::field::{Ext, Field, QQ};
use crate::exact::fpoly::{self, IsolInterval};
use crate::exact::rat::{midpoint, rat, Rat};
use crate::exact::system::PlanePoint;
use crate::exact::{AlgNumber, BPoly};
use crate::flavor::Flavor;
use crate::infinity::{at_level, level_poly, Infinity};
use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CellComplexSummary {
    /// Open cells of dimension 0, 1 and 2 inside the set.
    pub cells: [usize; 3],
    pub abscissas: Vec<AlgNumber>,
}

impl CellComplexSummary {
    pub fn chi_c(&self) -> i64 {
        self.cells[0] as i64 - self.cells[1] as i64 + self.cells[2] as i64
    }
}

/// Rational points strictly between consecutive isolated roots, plus one
/// below the first and one above the last.
fn samples_around(roots: &[IsolInterval]) -> Vec<Rat> {
    if roots.is_empty() {
        return vec![rat(0)];
    }
    let mut out = vec![&roots[0].lo - rat(1)];
    for w in roots.windows(2) {
        out.push(midpoint(&w[0].hi, &w[1].lo));
    }
    out.push(&roots[roots.len() - 1].hi + rat(1));
    out
}

/// Cells of `∩ {q_i σ_i 0}` in one vertical fiber, each `q_i` restricted
/// to it: `(points, open intervals)` kept, once per flavor assignment.
fn fiber_cells<E: Field>(e: &mut E, qs: &[Vec<E::Elem>], assign: &[Vec<Flavor>]) -> Vec<(usize, usize)> {
    let qs: Vec<Vec<E::Elem>> = qs.iter().map(|q| fpoly::trimmed(e, q)).collect();
    let live: Vec<usize> = (0..qs.len()).filter(|&i| !qs[i].is_empty()).collect();
    let mut prod = vec![e.one()];
    for &i in &live {
        let s = fpoly::squarefree(e, &qs[i]);
        prod = fpoly::mul(e, &prod, &s);
    }
    let prod = fpoly::squarefree(e, &prod);
    let roots = if prod.len() > 1 { fpoly::isolate_real_roots(e, &prod) } else { Vec::new() };
    let mut out = vec![(0, 0); assign.len()];
    for s in samples_around(&roots) {
        let signs: Vec<i32> = qs.iter().map(|q| fpoly::sign_at_rat(e, q, &s)).collect();
        for (o, fls) in out.iter_mut().zip(assign) {
            if fls.iter().zip(&signs).all(|(fl, s)| fl.keeps(*s)) {
                o.1 += 1;
            }
        }
    }
    for b in &roots {
        let signs: Vec<i32> = if live.len() <= 1 {
            vec![0; qs.len()]
        } else {
            let mut at = Ext::new(e.clone(), prod.clone(), b.lo.clone(), b.hi.clone());
            qs.iter()
                .map(|q| {
                    let v = at.reduce(q);
                    at.sign(&v)
                })
                .collect()
        };
        for (o, fls) in out.iter_mut().zip(assign) {
            if fls.iter().zip(&signs).all(|(fl, s)| fl.keeps(*s)) {
                o.0 += 1;
            }
        }
    }
    out
}

fn critical_abscissa_poly<K: Field>(k: &mut K, g: &Bi<K::Elem>) -> Vec<K::Elem> {
    let c = bivar::content(k, g);
    let pp = bivar::primitive_part(k, g);
    let ps = bivar::squarefree(k, &pp);
    let mut d = fpoly::squarefree(k, &c);
    if bivar::deg_y(&ps).unwrap_or(0) > 0 {
        let lc = ps.last().unwrap().clone();
        d = fpoly::mul(k, &d, &lc);
        let dy = bivar::deriv_y(k, &ps);
        let disc = bivar::resultant_y(k, &ps, &dy);
        d = fpoly::mul(k, &d, &disc);
    }
    fpoly::trimmed(k, &d)
}

fn sweep_k<K: Field>(
    mut k: K,
    polys: &[Bi<K::Elem>],
    assign: &[Vec<Flavor>],
) -> Result<Vec<CellComplexSummary>> {
    let mut prod: Bi<K::Elem> = vec![vec![k.one()]];
    let mut polys_t = Vec::new();
    for g in polys {
        let g = bivar::trimmed(&mut k, g);
        if g.is_empty() {
            return Err(Error::Degenerate("a defining polynomial vanishes identically".into()));
        }
        prod = bivar::mul(&k, &prod, &g);
        polys_t.push(g);
    }
    let d = critical_abscissa_poly(&mut k, &prod);
    let d = if d.is_empty() { vec![k.one()] } else { fpoly::squarefree(&mut k, &d) };
    let roots = fpoly::isolate_real_roots(&mut k, &d);
    let mut out = vec![CellComplexSummary::default(); assign.len()];
    for s in samples_around(&roots) {
        let x = k.from_rat(&s);
        let fibers: Vec<_> = polys_t.iter().map(|g| bivar::eval_x(&k, g, &x)).collect();
        for (o, (p, i)) in out.iter_mut().zip(fiber_cells(&mut k, &fibers, assign)) {
            o.cells[1] += p;
            o.cells[2] += i;
        }
    }
    for b in &roots {
        let mut e = Ext::new(k.clone(), d.clone(), b.lo.clone(), b.hi.clone());
        let fibers: Vec<_> = polys_t.iter().map(|g| bivar::at_generator(&e, g)).collect();
        for (o, (p, i)) in out.iter_mut().zip(fiber_cells(&mut e, &fibers, assign)) {
            o.cells[0] += p;
            o.cells[1] += i;
        }
    }
    Ok(out)
}

fn rational_d(d: Vec<Rat>) -> Vec<AlgNumber> {
    AlgNumber::roots_of(&d)
}

/// Cell summaries of `{f ≤ α}`, `{f = α}` and `{f ≥ α}` from one sweep
/// along `x` (or along `y` when `transpose` is set).
pub fn sweep_flavors(f: &BPoly, alpha: &AlgNumber, transpose: bool) -> Result<[CellComplexSummary; 3]> {
    let f = if transpose { f.transpose() } else { f.clone() };
    let assign: Vec<Vec<Flavor>> = Flavor::ALL.iter().map(|fl| vec![*fl]).collect();
    let out = at_level!(alpha, |k, e| {
        let g = level_poly(&k, &f, &e);
        sweep_k(k, &[g], &assign)
    })?;
    let mut out: [CellComplexSummary; 3] = out.try_into().expect("three flavors");
    if let Some(a) = alpha.as_rational() {
        let g = level_poly(&QQ, &f, &a);
        let d = rational_d(critical_abscissa_poly(&mut QQ, &bivar::trimmed(&mut QQ, &g)));
        for o in &mut out {
            o.abscissas = d.clone();
        }
    }
    Ok(out)
}

/// Cell summary of `{f σ α}`, sweeping along `x` (or along `y` when
/// `transpose` is set).
pub fn sweep(f: &BPoly, alpha: &AlgNumber, fl: Flavor, transpose: bool) -> Result<CellComplexSummary> {
    let [le, eq, ge] = sweep_flavors(f, alpha, transpose)?;
    Ok(match fl {
        Flavor::Le => le,
        Flavor::Eq => eq,
        Flavor::Ge => ge,
    })
}

/// Cell summary of a set cut out by sign conditions on rational
/// polynomials.
pub fn sweep_atoms(atoms: &[(BPoly, Flavor)], transpose: bool) -> Result<CellComplexSummary> {
    let dense: Vec<Bi<Rat>> =
        atoms.iter().map(|(g, _)| if transpose { g.transpose() } else { g.clone() }.to_dense_y()).collect();
    let assign = vec![atoms.iter().map(|(_, fl)| *fl).collect()];
    Ok(sweep_k(QQ, &dense, &assign)?.remove(0))
}

/// `χ_c` of the three sets `{f ≤ α}`, `{f = α}`, `{f ≥ α}`.
pub fn chi_c_flavors(f: &BPoly, alpha: &AlgNumber) -> Result<[i64; 3]> {
    Ok(sweep_flavors(f, alpha, false)?.map(|s| s.chi_c()))
}

/// `χ_c` of `{f ≤ γ}`, `{f = γ}`, `{f ≥ γ}` without sweeping over `Q(γ)`.
/// No value in `(below, γ)` or `(γ, above)` may be atypical, `sing` lists
/// the critical points on the level and `ends` counts the points of
/// `{f = γ}` on a large circle.
pub fn chi_c_flavors_split(
    f: &BPoly,
    below: &Rat,
    above: &Rat,
    points: &mut [PlanePoint],
    sing: &[usize],
    ends: i64,
) -> Result<[i64; 3]> {
    // the regular part is a union of ovals and open arcs; every arc has two
    // ends, at infinity or at a singular point
    let mut arc_ends = ends;
    for &i in sing {
        arc_ends += 2 * fiber_chis_by_arcs(f, points, i)?.0;
    }
    if arc_ends % 2 != 0 {
        return Err(Error::Unstable("odd number of arc ends on a level curve".into()));
    }
    let eq = sing.len() as i64 - arc_ends / 2;
    // the open slabs are products with an open interval
    let [le_b, eq_b, _] = chi_c_flavors(f, &AlgNumber::from_rat(below))?;
    let [_, eq_a, ge_a] = chi_c_flavors(f, &AlgNumber::from_rat(above))?;
    let lt = le_b - eq_b;
    let gt = ge_a - eq_a;
    Ok([lt + eq, eq, gt + eq])
}

pub fn chi_c_alg(f: &BPoly, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
    Ok(sweep(f, alpha, fl, false)?.chi_c())
}

/// Euler characteristic with compact supports of `{f σ α}`.
pub fn chi_c(f: &BPoly, alpha: &Rat, fl: Flavor) -> Result<i64> {
    chi_c_alg(f, &AlgNumber::from_rat(alpha), fl)
}

/// `χ = χ_c + χ(Lk^∞)`, with the link taken from `inf`.
pub fn chi_with(inf: &Infinity, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
    Ok(chi_c_alg(&inf.f, alpha, fl)? + inf.link_chi(alpha, fl)?)
}

pub fn chi_alg(f: &BPoly, alpha: &AlgNumber, fl: Flavor) -> Result<i64> {
    if f.is_constant() {
        return chi_c_alg(f, alpha, fl);
    }
    let inf = crate::infinity::infinity_for(f, 0)?;
    chi_with(&inf, alpha, fl)
}

/// Euler characteristic of `{f σ α}`.
pub fn chi(f: &BPoly, alpha: &Rat, fl: Flavor) -> Result<i64> {
    chi_alg(f, &AlgNumber::from_rat(alpha), fl)
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberProfile {
    pub breakpoints: Vec<AlgNumber>,
    /// `χ({f = t})` at each breakpoint.
    pub at: Vec<i64>,
    /// `χ({f = t})` on each open interval, one more entry than breakpoints.
    pub between: Vec<i64>,
    /// Rational samples used for the open intervals.
    #[serde(serialize_with = "crate::exact::rat::serde_pq::many")]
    pub samples: Vec<Rat>,
}

impl FiberProfile {
    /// `χ({f = t})` for a rational `t`.
    pub fn value_at(&self, t: &Rat) -> i64 {
        for (i, b) in self.breakpoints.iter().enumerate() {
            match b.cmp_rat(t) {
                std::cmp::Ordering::Greater => return self.between[i],
                std::cmp::Ordering::Equal => return self.at[i],
                std::cmp::Ordering::Less => {}
            }
        }
        self.between[self.breakpoints.len()]
    }
}

/// Critical values together with the level and sublevel jump sets.
pub fn breakpoints(inf: &Infinity) -> Result<Vec<AlgNumber>> {
    let mut b = critical_values(&inf.f)?;
    let js = inf.jump_sets()?;
    b.extend(js.le);
    b.extend(js.ge);
    b.sort();
    b.dedup();
    Ok(b)
}

/// Plateau values of `χ({f = t})`; each open interval is checked at three
/// rational points.
pub fn fiber_profile_with(inf: &Infinity) -> Result<FiberProfile> {
    let bps = breakpoints(inf)?;
    let mut samples = Vec::new();
    let mut extra: Vec<[Rat; 2]> = Vec::new();
    if bps.is_empty() {
        samples.push(rat(0));
        extra.push([rat(-7), rat(5)]);
    } else {
        let lo = bps[0].rational_below();
        samples.push(lo.clone());
        extra.push([&lo - rat(1), &lo - rat(10)]);
        for w in bps.windows(2) {
            let m = w[0].rational_between(&w[1]);
            let a = w[0].rational_between(&AlgNumber::from_rat(&m));
            let b = AlgNumber::from_rat(&m).rational_between(&w[1]);
            samples.push(m);
            extra.push([a, b]);
        }
        let hi = bps.last().unwrap().rational_above();
        samples.push(hi.clone());
        extra.push([&hi + rat(1), &hi + rat(10)]);
    }
    let mut between = Vec::new();
    for (s, ex) in samples.iter().zip(&extra) {
        let v = chi_with(inf, &AlgNumber::from_rat(s), Flavor::Eq)?;
        for t in ex {
            let w = chi_with(inf, &AlgNumber::from_rat(t), Flavor::Eq)?;
            if w != v {
                return Err(Error::Unstable(format!("χ of fibers not constant near {s}: {v} vs {w} at {t}")));
            }
        }
        between.push(v);
    }
    let mut at = Vec::new();
    for b in &bps {
        at.push(chi_with(inf, b, Flavor::Eq)?);
    }
    Ok(FiberProfile { breakpoints: bps, at, between, samples })
}

pub fn fiber_profile(f: &BPoly) -> Result<FiberProfile> {
    fiber_profile_with(&crate::infinity::infinity_for(f, 0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> BPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn cell_counts() {
        assert_eq!(chi_c(&p("x^2 + y^2"), &rat(1), Flavor::Le).unwrap(), 1);
        assert_eq!(chi_c(&p("x^2 + y^2"), &rat(1), Flavor::Eq).unwrap(), 0);
        assert_eq!(chi_c(&p("x^2 + y^2"), &rat(1), Flavor::Ge).unwrap(), 0);
        assert_eq!(chi_c(&p("x"), &rat(0), Flavor::Le).unwrap(), 0);
        assert_eq!(chi_c(&p("x"), &rat(0), Flavor::Eq).unwrap(), -1);
        assert_eq!(chi_c(&p("x*y"), &rat(0), Flavor::Eq).unwrap(), -3);
        assert_eq!(chi_c(&p("y"), &rat(0), Flavor::Ge).unwrap(), 0);
        assert_eq!(chi_c(&p("x^2 + y^2"), &rat(-1), Flavor::Ge).unwrap(), 1);
        assert!(chi_c(&p("3"), &rat(3), Flavor::Eq).is_err());
    }

    #[test]
    fn additivity_and_transpose() {
        for (s, a) in [("x*(x*y - 1)", 0), ("x^3 - 3*x + y^2", 1), ("x^2*y^2 + x", 2), ("(x^2 - 1)^2*y", 0)] {
            let f = p(s);
            let a = AlgNumber::from_rat(&rat(a));
            let c = |fl| chi_c_alg(&f, &a, fl).unwrap();
            assert_eq!(c(Flavor::Le) + c(Flavor::Ge) - c(Flavor::Eq), 1, "{s}");
            for fl in Flavor::ALL {
                assert_eq!(sweep(&f, &a, fl, true).unwrap().chi_c(), c(fl), "{s} {fl}");
            }
        }
    }

    #[test]
    fn intersections() {
        let c = |a: &[(&str, Flavor)]| {
            let atoms: Vec<_> = a.iter().map(|(s, fl)| (p(s), *fl)).collect();
            let v = sweep_atoms(&atoms, false).unwrap().chi_c();
            assert_eq!(v, sweep_atoms(&atoms, true).unwrap().chi_c());
            v
        };
        assert_eq!(c(&[("x^2 + y^2 - 1", Flavor::Le), ("x", Flavor::Le)]), 1);
        assert_eq!(c(&[("x^2 + y^2 - 1", Flavor::Eq), ("y", Flavor::Ge)]), 1);
        assert_eq!(c(&[("x^2 + y^2 - 1", Flavor::Eq), ("y", Flavor::Eq)]), 2);
        assert_eq!(c(&[("y", Flavor::Le), ("x", Flavor::Eq)]), 0);
        assert_eq!(c(&[("y - x^2", Flavor::Le), ("y", Flavor::Ge)]), -1);
        assert_eq!(c(&[("x^2 + y^2 - 1", Flavor::Le), ("x^2 + y^2 - 4", Flavor::Ge)]), 0);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&p("x^2 + y^2"), &rat(1), Flavor::Le).unwrap(), 1);
        assert_eq!(chi(&p("x"), &rat(0), Flavor::Le).unwrap(), 1);
        assert_eq!(chi(&p("x*y"), &rat(0), Flavor::Eq).unwrap(), 1);
        assert_eq!(chi(&p("x*(x*y - 1)"), &rat(0), Flavor::Eq).unwrap(), 3);
        assert_eq!(chi(&p("x*(x*y - 1)"), &rat(1), Flavor::Eq).unwrap(), 2);
    }

    #[test]
    fn irrational_level() {
        // f = x^2 + y^2 at α = √2: a circle
        let a = AlgNumber::roots_of(&[rat(-2), rat(0), rat(1)]).pop().unwrap();
        let f = p("x^2 + y^2");
        assert_eq!(chi_alg(&f, &a, Flavor::Eq).unwrap(), 0);
        assert_eq!(chi_alg(&f, &a, Flavor::Le).unwrap(), 1);
        // the saddle value of x^3 - 3x + y^2 shifted by √2
        let g = p("x^3 - 3*x + y^2");
        let v = AlgNumber::roots_of(&[rat(-2), rat(0), rat(1)]).pop().unwrap();
        assert_eq!(chi_c_alg(&g, &v, Flavor::Eq).unwrap(), chi_c(&g, &rat(1), Flavor::Eq).unwrap());
    }

    #[test]
    fn profiles() {
        let fp = fiber_profile(&p("x^2 + y^2")).unwrap();
        assert_eq!(fp.breakpoints, vec![AlgNumber::from_rat(&rat(0))]);
        assert_eq!((fp.between.clone(), fp.at.clone()), (vec![0, 0], vec![1]));
        let fp = fiber_profile(&p("x*(x*y - 1)")).unwrap();
        assert_eq!(fp.breakpoints, vec![AlgNumber::from_rat(&rat(0))]);
        assert_eq!((fp.between.clone(), fp.at.clone()), (vec![2, 2], vec![3]));
        let fp = fiber_profile(&p("x")).unwrap();
        assert!(fp.breakpoints.is_empty());
        assert_eq!(fp.between, vec![1]);
    }
}

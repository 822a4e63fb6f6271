//! The eight acceptance criteria. Each prints one line; the process fails
//! if any criterion does.

use satopo::circle::{degree_at_infinity, local_degree};
use satopo::critical::{fiber_chis_by_arcs, find_critical_points, gradient_zeros};
use satopo::euler::chi_c_flavors;
use satopo::exact::parse::parse_poly;
use satopo::exact::rat::{rat, ratq, to_pq};
use satopo::harness::{
    auto_alphas, generic_directions, linear_alphas, random_corpus, verify, IdentityId, Input, Outcome, Params,
    PolyCtx,
};
use satopo::infinity::{half_branches, infinity_for, Properness};
use satopo::stratified::{gauss_bonnet, GbMode, PlaneSet};
use satopo::{AlgNumber, BPoly, Flavor, Rat};
use std::time::{Duration, Instant};

const CORPUS_SEED: u64 = 1;

type Check = Result<String, String>;

fn p(s: &str) -> BPoly {
    parse_poly(s).unwrap()
}

fn corpus() -> Vec<BPoly> {
    let mut v = random_corpus(CORPUS_SEED, 20);
    v.push(p("x*(x*y - 1)"));
    v.push(p("x^2*y - x"));
    v
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn khimshiashvili() -> Check {
    let cases = [("x^2 + y^2", 1), ("x^2 - y^2", -1), ("x^3 - 3*x*y^2", -2), ("-x^2 - y^2", 1)];
    for (s, want) in cases {
        let f = p(s);
        let mut pts = gradient_zeros(&f).map_err(|e| format!("{s}: {e}"))?;
        ensure(pts.len() == 1, || format!("{s}: {} critical points", pts.len()))?;
        let d = local_degree(&f, &mut pts, 0).map_err(|e| e.to_string())?;
        ensure(d == want, || format!("{s}: degree {d}, expected {want}"))?;
        let (below, above) = fiber_chis_by_arcs(&f, &mut pts, 0).map_err(|e| e.to_string())?;
        ensure(below == 1 - d && above == 1 - d, || format!("{s}: fibers {below}/{above}, 1 - deg = {}", 1 - d))?;
    }
    Ok("4 germs, both signs of delta".into())
}

fn sekalski() -> Check {
    let f = p("x*(x*y - 1)");
    let js = infinity_for(&f, 0).and_then(|i| i.jump_sets()).map_err(|e| e.to_string())?;
    ensure(js.lambda.len() == 1 && js.lambda[0].as_rational() == Some(rat(0)), || {
        format!("Lambda = {:?}", js.lambda.iter().map(|a| a.to_string()).collect::<Vec<_>>())
    })?;
    let at0 = half_branches(&f).map_err(|e| e.to_string())?;
    let generic = half_branches(&(&f - &BPoly::constant(rat(1)))).map_err(|e| e.to_string())?;
    ensure(at0 == 6 && generic == 4, || format!("half-branches {at0} at 0, {generic} generic"))?;
    let d = degree_at_infinity(&f).map_err(|e| e.to_string())?;
    ensure(d == 0, || format!("deg_inf = {d}"))?;
    let r = verify(IdentityId::Sekalski, &Input::Poly(f), &Params::default());
    ensure(r.pass && r.lhs == Some(rat(0)) && r.rhs == Some(rat(0)), || r.to_json())?;
    Ok("Lambda = {0}, half-branches 6/4, 0 = 1 + 3 - 2 - 2".into())
}

fn degree_additivity(polys: &[BPoly]) -> Check {
    for f in polys {
        let local: i64 = find_critical_points(f).map_err(|e| format!("{f}: {e}"))?.iter().map(|c| c.local_degree).sum();
        let d = degree_at_infinity(f).map_err(|e| format!("{f}: {e}"))?;
        ensure(d == local, || format!("{f}: deg_inf {d}, sum of local degrees {local}"))?;
    }
    Ok(format!("{} polynomials", polys.len()))
}

fn theorem_45(polys: &[BPoly]) -> Check {
    for f in polys {
        let r = PolyCtx::new(f, 0).verify(IdentityId::T45All, &Params::default());
        ensure(r.pass, || r.to_json())?;
    }
    let r = verify(IdentityId::T45All, &Input::Poly(p("x^2*y")), &Params::default());
    ensure(matches!(r.outcome, Outcome::Degenerate | Outcome::Skipped) && r.skipped_reason.is_some(), || {
        format!("x^2*y was not refused: {}", r.to_json())
    })?;
    Ok(format!("{} polynomials, 4 parts each; x^2*y refused with a reason", polys.len()))
}

fn links_across_lambda() -> Check {
    let ctx = PolyCtx::new(&p("x*(x*y - 1)"), 0);
    for id in [IdentityId::T316, IdentityId::T317, IdentityId::C318] {
        let r = ctx.verify(id, &Params::default());
        ensure(r.pass && r.witnesses["chi_plane"] == 1, || r.to_json())?;
    }
    Ok("chi(R^2) = 1 from T3.16, T3.17 and C3.18 (the last as 2 chi(R^2) - chi(Lk R^2) = 2)".into())
}

const LAMBDA_FAMILY: [IdentityId; 7] = [
    IdentityId::P36Ge,
    IdentityId::P36Le,
    IdentityId::C37Fiber,
    IdentityId::C37Diff,
    IdentityId::P38Le,
    IdentityId::P38Ge,
    IdentityId::C39,
];

fn lambda_family(ctxs: &[PolyCtx]) -> Check {
    let mut n = 0;
    for ctx in ctxs {
        let alphas = auto_alphas(ctx).map_err(|e| format!("{}: {e}", ctx.description()))?;
        ensure(alphas.len() == 3, || format!("{}: {} levels", ctx.description(), alphas.len()))?;
        for a in &alphas {
            for id in LAMBDA_FAMILY {
                let r = ctx.verify(id, &Params { alpha: Some(a.clone()), ..Params::default() });
                ensure(r.pass, || r.to_json())?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} reports over {} polynomials at 3 levels each", ctxs.len()))
}

fn stratified() -> Check {
    let sets = [
        ("disk", PlaneSet::region(p("x^2 + y^2 - 1")), Some(rat(1))),
        ("parabola", PlaneSet::region(p("y - x^2")), None),
        ("half-plane", PlaneSet::region(p("y")), None),
        ("circle", PlaneSet::curve(p("x^2 + y^2 - 1")), Some(rat(0))),
    ];
    let mut n = 0;
    for (name, x, compact_value) in sets {
        let x = x.map_err(|e| format!("{name}: {e}"))?;
        let dirs = generic_directions(&x, 5).map_err(|e| format!("{name}: {e}"))?;
        ensure(dirs.len() == 5, || format!("{name}: {} generic directions", dirs.len()))?;
        let input = Input::Set(x.clone());
        for d in &dirs {
            for a in linear_alphas(&x, d).map_err(|e| e.to_string())? {
                for id in [IdentityId::P54All, IdentityId::P55All] {
                    let params = Params { alpha: Some(a.clone()), direction: Some(d.clone()), ..Params::default() };
                    let r = verify(id, &input, &params);
                    ensure(r.pass, || format!("{name}: {}", r.to_json()))?;
                    n += 1;
                }
            }
        }
        match compact_value {
            Some(v) => {
                let r = verify(IdentityId::T56, &input, &Params::default());
                ensure(r.pass && r.lhs == Some(v.clone()), || format!("{name}: {}", r.to_json()))?;
            }
            None => {
                let sampled = Params { gb_mode: GbMode::Sampled(64), tol: ratq(1, 100), ..Params::default() };
                let r = verify(IdentityId::T58, &input, &sampled);
                ensure(r.pass, || format!("{name} sampled: {}", r.to_json()))?;
                let exact = verify(IdentityId::T58, &input, &Params::default());
                ensure(exact.pass, || format!("{name} exact: {}", exact.to_json()))?;
                if name == "half-plane" {
                    let gb = gauss_bonnet(&x, GbMode::Exact).map_err(|e| e.to_string())?;
                    ensure(gb.value == rat(0), || format!("half-plane Lambda_0 = {}", to_pq(&gb.value)))?;
                }
            }
        }
    }
    Ok(format!("{n} linear Morse reports, Gauss-Bonnet on 4 sets"))
}

fn properties(ctxs: &[PolyCtx]) -> Check {
    let mut checks = 0;
    for ctx in ctxs {
        let name = ctx.description();
        let err = |e: satopo::Error| format!("{name}: {e}");
        let inf = ctx.infinity().map_err(err)?;
        let js = ctx.jump_sets().map_err(err)?;
        let has = |set: &[AlgNumber], a: &AlgNumber| set.iter().any(|b| b == a);
        for fl in Flavor::ALL {
            for a in js.get(fl) {
                ensure(has(&js.lambda, a), || format!("{name}: jump {a} of {fl:?} outside Lambda"))?;
            }
        }
        let union = |a: &[AlgNumber], b: &[AlgNumber]| {
            let mut u: Vec<AlgNumber> = a.iter().chain(b).cloned().collect();
            u.sort();
            u.dedup();
            u
        };
        let (le_ge, le_eq, eq_ge) = (union(&js.le, &js.ge), union(&js.le, &js.eq), union(&js.eq, &js.ge));
        ensure(le_ge == le_eq && le_eq == eq_ge, || format!("{name}: pairwise unions differ"))?;
        checks += 2;

        let proper = ctx.properness().map_err(err)? != Properness::NotProper;
        let mut levels: Vec<Rat> = auto_alphas(ctx).map_err(err)?;
        levels.extend(js.samples.iter().map(|(s, _)| s.clone()));
        levels.sort();
        levels.dedup();
        for t in &levels {
            let a = AlgNumber::from_rat(t);
            if proper {
                let (l, m, _) = ctx.lmn(&a).map_err(err)?;
                ensure(l == 0 && m == 0, || format!("{name}: proper but lambda {l}, mu {m} at {}", to_pq(t)))?;
            }
            let r = inf.radius_for(&a).map_err(err)?;
            let l1 = inf.link_chis_at(&a, &r).map_err(err)?;
            let l2 = inf.link_chis_at(&a, &(&r * rat(2))).map_err(err)?;
            let l4 = inf.link_chis_at(&a, &(&r * rat(4))).map_err(err)?;
            ensure(l1 == l2 && l2 == l4, || format!("{name}: links change under doubling at {}", to_pq(t)))?;
            ensure(l1.eq % 2 == 0, || format!("{name}: odd intersection count at {}", to_pq(t)))?;
            let g = &ctx.f - &BPoly::constant(t.clone());
            let hb = half_branches(&g).map_err(err)? as i64;
            ensure(l1.eq == hb, || format!("{name}: link chi(=) {} vs 2 r_inf {hb} at {}", l1.eq, to_pq(t)))?;
            let [le, eq, ge] = chi_c_flavors(&ctx.f, &a).map_err(err)?;
            ensure(le + ge - eq == 1, || format!("{name}: chi_c {le} + {ge} - {eq} != 1 at {}", to_pq(t)))?;
            checks += 4 + proper as usize;
        }
        let r = ctx.verify(IdentityId::P319, &Params::default());
        ensure(r.pass, || r.to_json())?;
        checks += 1;
    }
    Ok(format!("{checks} checks over {} polynomials", ctxs.len()))
}

fn report(no: usize, what: &str, limit: Option<Duration>, run: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let res = run();
    let took = t.elapsed();
    let res = match (res, limit) {
        (Ok(m), Some(l)) if took > l => Err(format!("{m}, but took {took:.1?} (limit {l:?})")),
        (r, _) => r,
    };
    match &res {
        Ok(m) => println!("criterion {no} PASS  {what}: {m} [{took:.1?}]"),
        Err(m) => println!("criterion {no} FAIL  {what}: {m} [{took:.1?}]"),
    }
    res.is_ok()
}

fn main() {
    let polys = corpus();
    let mut ok = true;
    ok &= report(1, "local Euler characteristic of fibers", Some(Duration::from_secs(5)), khimshiashvili);
    ok &= report(2, "Broughton's example", Some(Duration::from_secs(10)), sekalski);
    ok &= report(3, "degree additivity", Some(Duration::from_secs(120)), || degree_additivity(&polys[..20]));
    ok &= report(4, "T4.5-ALL", Some(Duration::from_secs(300)), || theorem_45(&polys));
    ok &= report(5, "links across Lambda", None, links_across_lambda);
    let ctxs: Vec<PolyCtx> = polys.iter().map(|f| PolyCtx::new(f, 0)).collect();
    ok &= report(6, "lambda, mu, nu identities", None, || lambda_family(&ctxs));
    ok &= report(7, "stratified suite", Some(Duration::from_secs(180)), stratified);
    ok &= report(8, "property suite", None, || properties(&ctxs));
    if !ok {
        std::process::exit(1);
    }
}

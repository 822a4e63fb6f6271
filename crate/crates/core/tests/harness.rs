use satopo::exact::parse::parse_poly;
use satopo::exact::rat::rat;
use satopo::harness::{parse_corpus, run_corpus, verify, IdentityId, Input, Outcome, Params};
use satopo::stratified::PlaneSet;
use satopo::Error;
use serde_json::Value;

fn poly(s: &str) -> Input {
    Input::Poly(parse_poly(s).unwrap())
}

fn at(alpha: i64) -> Params {
    Params { alpha: Some(rat(alpha)), ..Params::default() }
}

#[test]
fn fiber_of_the_paraboloid_below_its_minimum() {
    let r = verify(IdentityId::C42Fiber, &poly("x^2 + y^2"), &at(-1));
    assert!(r.pass, "{}", r.to_json());
    assert_eq!(r.lhs, Some(rat(0)));
    assert_eq!(r.rhs, Some(rat(0)));
}

#[test]
fn broughton_sekalski() {
    let r = verify(IdentityId::Sekalski, &poly("x*(x*y - 1)"), &Params::default());
    assert!(r.pass, "{}", r.to_json());
    assert_eq!(r.lhs, Some(rat(0)));
    let w = &r.witnesses;
    assert_eq!(w["lambda_set"], serde_json::json!(["0/1"]));
    assert_eq!(w["r_at_lambda"][0]["r"], 3);
}

#[test]
fn disk_gauss_bonnet() {
    let disk = Input::Set(PlaneSet::region(parse_poly("x^2 + y^2 - 1").unwrap()).unwrap());
    let r = verify(IdentityId::T56, &disk, &Params::default());
    assert!(r.pass, "{}", r.to_json());
    assert_eq!(r.lhs, Some(rat(1)));
}

#[test]
fn proper_only_identities_skip_on_broughton() {
    let r = verify(IdentityId::T31Ge, &poly("x*(x*y - 1)"), &at(1));
    assert_eq!(r.outcome, Outcome::Skipped);
    assert!(!r.pass);
    assert!(r.skipped_reason.as_deref().unwrap().contains("proper"));
}

#[test]
fn report_schema() {
    let r = verify(IdentityId::T45All, &poly("x^2 - y^2"), &Params::default());
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort();
    assert_eq!(keys, ["identity", "input", "lhs", "pass", "rhs", "skipped_reason", "witnesses"]);
    assert_eq!(v["identity"], "T4.5-ALL");
    assert_eq!(v["input"], "poly: x^2 - y^2");
    for side in ["lhs", "rhs"] {
        let s = v[side].as_str().unwrap();
        let (p, q) = s.split_once('/').unwrap();
        p.parse::<i64>().unwrap();
        assert!(q.parse::<u64>().unwrap() > 0);
    }
    assert!(v["skipped_reason"].is_null());
    assert!(v["witnesses"].is_object());
}

#[test]
fn stratified_identities_need_a_set() {
    let r = verify(IdentityId::P54All, &poly("x^2 + y^2"), &Params::default());
    assert_eq!(r.outcome, Outcome::Skipped);
}

#[test]
fn bad_direction_is_a_hypothesis_violation() {
    // y restricted to y = x^3 has a degenerate critical point at the origin
    let x = Input::Set(PlaneSet::region(parse_poly("y - x^3").unwrap()).unwrap());
    let up = satopo::stratified::Direction::new(rat(0), rat(1)).unwrap();
    for id in [IdentityId::P54All, IdentityId::P55All] {
        let r = verify(id, &x, &Params { direction: Some(up.clone()), alpha: Some(rat(0)), ..Params::default() });
        assert_eq!(r.outcome, Outcome::Skipped, "{}", r.to_json());
    }
}

#[test]
fn constant_corpus_is_degenerate() {
    let entries = parse_corpus("poly: 3 # a constant\n").unwrap();
    let ledger = run_corpus(&entries);
    assert!(!ledger.reports.is_empty());
    assert!(ledger.reports.iter().all(|r| matches!(r.outcome, Outcome::Degenerate | Outcome::Skipped)));
    assert!(ledger.reports.iter().all(|r| !r.pass && r.skipped_reason.is_some()));
    assert_eq!(ledger.exit_code(), 2);
}

#[test]
fn corpus_errors_name_the_line() {
    let e = parse_corpus("poly: x^2\n\n# fine\nwhat: x\npoly: x +\n").unwrap_err();
    let Error::Parse { msg, .. } = e else { panic!("{e:?}") };
    assert!(msg.contains("line 4"), "{msg}");
    assert!(msg.contains("line 5"), "{msg}");
}

#[test]
fn small_corpus_passes() {
    let text = "poly: x^2 + y^2 alpha=1\npoly: x^2 - y^2 alpha=-1\nregion: x^2 + y^2 - 1\n";
    let ledger = run_corpus(&parse_corpus(text).unwrap());
    let bad: Vec<String> = ledger
        .reports
        .iter()
        .filter(|r| r.outcome == Outcome::Fail || r.outcome == Outcome::Degenerate)
        .map(|r| r.to_json())
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert_eq!(ledger.exit_code(), 0);
    assert!(ledger.summary.pass > 0);
}

#[test]
fn exit_codes() {
    use satopo::harness::{IdentityReport, Ledger};
    let rep = |outcome: Outcome| IdentityReport {
        identity: "T4.4".into(),
        input: "poly: x".into(),
        lhs: None,
        rhs: None,
        pass: outcome == Outcome::Pass,
        witnesses: Value::Null,
        skipped_reason: None,
        outcome,
    };
    let code = |v: Vec<Outcome>| Ledger::from_reports(v.into_iter().map(rep).collect()).exit_code();
    assert_eq!(code(vec![Outcome::Pass, Outcome::Skipped]), 0);
    assert_eq!(code(vec![Outcome::Pass, Outcome::Degenerate]), 2);
    assert_eq!(code(vec![Outcome::Degenerate, Outcome::Fail]), 1);
}

#[test]
fn irrational_levels_agree_with_a_full_sweep() {
    use satopo::euler::chi_c_flavors;
    use satopo::harness::PolyCtx;
    use satopo::Flavor;
    for s in ["x^3 - 2*x + y^2", "x^3 - 2*x - y^3 + y"] {
        let f = parse_poly(s).unwrap();
        let ctx = PolyCtx::new(&f, 0);
        for b in ctx.breakpoints().unwrap().into_iter().filter(|b| b.as_rational().is_none()) {
            let c = chi_c_flavors(&f, &b).unwrap();
            let l = ctx.links(&b).unwrap();
            for (i, fl) in Flavor::ALL.iter().enumerate() {
                assert_eq!(ctx.chi(&b, *fl).unwrap(), c[i] + l.get(*fl), "{s} at {b:?} {fl:?}");
            }
        }
    }
}

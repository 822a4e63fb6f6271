use super::poly::gap_samples;
use super::set::{generic_directions, linear_alphas};
use super::{error_report, IdentityId, IdentityReport, Input, InputKind, Outcome, Params, PolyCtx, SetCtx};
use crate::critical::gradient_zeros;
use crate::error::{Error, Result};
use crate::exact::parse::{parse_poly, parse_rat};
use crate::exact::rat::{rat, Rat};
use crate::exact::{AlgNumber, BPoly};
use crate::infinity::infinity_for;
use crate::stratified::{Direction, PlaneSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub line: usize,
    pub text: String,
    /// The input, or the reason it could not be built.
    pub input: std::result::Result<Input, Error>,
    pub kind: InputKind,
    pub alpha: Option<Rat>,
    pub seed: u64,
    pub direction: Option<Direction>,
}

fn parse_direction(s: &str) -> Result<Direction> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse { col: 0, msg: format!("direction {s:?} is not of the form a/b,c/d") })?;
    Direction::new(parse_rat(a)?, parse_rat(b)?)
}

fn parse_line(no: usize, raw: &str) -> Result<Option<CorpusEntry>> {
    let line = raw.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return Ok(None);
    }
    let err = |msg: String| Error::Parse { col: 0, msg: format!("line {no}: {msg}") };
    let (kind, rest) = line.split_once(':').ok_or_else(|| err("expected `poly:`, `region:` or `curve:`".into()))?;
    let (mut alpha, mut seed, mut direction) = (None, 0u64, None);
    let mut expr = Vec::new();
    for tok in rest.split_whitespace() {
        match tok.split_once('=') {
            Some(("alpha", v)) => alpha = Some(parse_rat(v).map_err(|e| err(e.to_string()))?),
            Some(("seed", v)) => seed = v.parse().map_err(|_| err(format!("bad seed {v:?}")))?,
            Some(("v", v)) => direction = Some(parse_direction(v).map_err(|e| err(e.to_string()))?),
            _ => expr.push(tok),
        }
    }
    let expr = expr.join(" ");
    let p = parse_poly(&expr).map_err(|e| err(e.to_string()))?;
    let (kind, input) = match kind.trim() {
        "poly" => (InputKind::Poly, Ok(Input::Poly(p))),
        "region" => (InputKind::Set, PlaneSet::region(p).map(Input::Set)),
        "curve" => (InputKind::Set, PlaneSet::curve(p).map(Input::Set)),
        k => return Err(err(format!("unknown input kind {k:?}"))),
    };
    Ok(Some(CorpusEntry { line: no, text: line.to_string(), input, kind, alpha, seed, direction }))
}

/// Parse a corpus file; errors carry line numbers.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        match parse_line(i + 1, raw) {
            Ok(Some(e)) => out.push(e),
            Ok(None) => {}
            Err(Error::Parse { msg, .. }) => errs.push(msg),
            Err(e) => errs.push(e.to_string()),
        }
    }
    if errs.is_empty() {
        Ok(out)
    } else {
        Err(Error::Parse { col: 0, msg: errs.join("; ") })
    }
}

/// Three rational levels: below every breakpoint, in the middle, and
/// above every breakpoint. Rational breakpoints are eligible for the
/// middle one.
pub fn auto_alphas(ctx: &PolyCtx) -> Result<Vec<Rat>> {
    let bps = ctx.breakpoints()?;
    let mut c = gap_samples(&bps);
    c.extend(bps.iter().filter_map(AlgNumber::as_rational));
    c.sort();
    Ok(vec![c[0].clone(), c[c.len() / 2].clone(), c[c.len() - 1].clone()])
}

fn dedup(v: Vec<Rat>) -> Vec<Rat> {
    let mut v = v;
    v.sort();
    v.dedup();
    v
}

/// All applicable identities on one corpus entry.
pub fn run_entry(entry: &CorpusEntry) -> Vec<IdentityReport> {
    let ids: Vec<IdentityId> = IdentityId::ALL.iter().copied().filter(|i| i.kind() == entry.kind).collect();
    let input = match &entry.input {
        Ok(i) => i,
        Err(e) => return ids.iter().map(|id| error_report(*id, &entry.text, e, entry.alpha.as_ref())).collect(),
    };
    let mut out = Vec::new();
    let base = Params { seed: entry.seed, direction: entry.direction.clone(), ..Params::default() };
    match input {
        Input::Poly(f) => {
            let ctx = PolyCtx::new(f, entry.seed);
            let alphas = match &entry.alpha {
                Some(a) => Ok(vec![a.clone()]),
                None => auto_alphas(&ctx).map(dedup),
            };
            for id in ids {
                if !id.uses_alpha() {
                    out.push(ctx.verify(id, &base));
                    continue;
                }
                match &alphas {
                    Ok(al) => {
                        for a in al {
                            out.push(ctx.verify(id, &Params { alpha: Some(a.clone()), ..base.clone() }));
                        }
                    }
                    Err(e) => out.push(error_report(id, ctx.description(), e, None)),
                }
            }
        }
        Input::Set(x) => {
            let ctx = SetCtx::new(x, &base);
            let dirs = match &entry.direction {
                Some(d) => Ok(vec![d.clone()]),
                None => generic_directions(x, 1),
            };
            for id in ids {
                if !id.uses_alpha() {
                    out.push(ctx.verify(id, &base));
                    continue;
                }
                let ds = match &dirs {
                    Ok(d) => d,
                    Err(e) => {
                        out.push(error_report(id, &input.to_string(), e, None));
                        continue;
                    }
                };
                for d in ds {
                    let alphas = match &entry.alpha {
                        Some(a) => Ok(vec![a.clone()]),
                        None => linear_alphas(x, d).map(dedup),
                    };
                    match alphas {
                        Ok(al) => {
                            for a in al {
                                let p = Params { alpha: Some(a), direction: Some(d.clone()), ..base.clone() };
                                out.push(ctx.verify(id, &p));
                            }
                        }
                        Err(e) => out.push(error_report(id, &input.to_string(), &e, None)),
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub degenerate: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Ledger {
    pub reports: Vec<IdentityReport>,
    pub summary: CorpusSummary,
}

impl Ledger {
    pub fn from_reports(reports: Vec<IdentityReport>) -> Self {
        let mut s = CorpusSummary { total: reports.len(), ..Default::default() };
        for r in &reports {
            match r.outcome {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Skipped => s.skipped += 1,
                Outcome::Degenerate => s.degenerate += 1,
            }
        }
        Ledger { reports, summary: s }
    }

    /// 0 when everything passed or was skipped by a hypothesis check, 1 on
    /// any failure, 2 when some input was degenerate.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.degenerate > 0 {
            2
        } else {
            0
        }
    }
}

/// Verify every entry on a pool of worker threads; reports keep corpus
/// order.
pub fn run_corpus(entries: &[CorpusEntry]) -> Ledger {
    let next = AtomicUsize::new(0);
    let done: Mutex<Vec<(usize, Vec<IdentityReport>)>> = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= entries.len() {
                    break;
                }
                let r = run_entry(&entries[i]);
                done.lock().expect("ledger lock").push((i, r));
            });
        }
    });
    let mut done = done.into_inner().expect("ledger lock");
    done.sort_by_key(|(i, _)| *i);
    Ledger::from_reports(done.into_iter().flat_map(|(_, r)| r).collect())
}

/// `count` sparse polynomials with 3 to 5 monomials of degree at most 4
/// and a finite critical set.
pub fn random_corpus(seed: u64, count: usize) -> Vec<BPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(3..=5);
        let mut f = BPoly::zero();
        let mut used = Vec::new();
        while used.len() < k {
            let i = rng.gen_range(0..=4u32);
            let j = rng.gen_range(0..=4 - i);
            if i + j == 0 || used.contains(&(i, j)) {
                continue;
            }
            used.push((i, j));
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            f.add_term(i, j, rat(c));
        }
        if f.total_degree().unwrap_or(0) < 2 || out.contains(&f) {
            continue;
        }
        if gradient_zeros(&f).is_err() || infinity_for(&f, 0).is_err() {
            continue;
        }
        out.push(f);
    }
    out
}

/// Whether the jump sets and the link values at and between them agree
/// for the base points drawn from each seed.
pub fn basepoint_independence(f: &BPoly, seeds: &[u64]) -> Result<bool> {
    let mut prev: Option<Vec<(String, crate::infinity::LinkChi)>> = None;
    let mut prev_sets: Option<[Vec<AlgNumber>; 4]> = None;
    for &s in seeds {
        let inf = infinity_for(f, s)?;
        let js = inf.jump_sets()?;
        let sets = [js.lambda.clone(), js.le.clone(), js.eq.clone(), js.ge.clone()];
        let mut probe = Vec::new();
        let mut all = js.lambda.clone();
        all.sort();
        for t in gap_samples(&all) {
            probe.push((crate::exact::rat::to_pq(&t), inf.link_chis(&AlgNumber::from_rat(&t))?));
        }
        for t in &all {
            probe.push((t.to_string(), inf.link_chis(t)?));
        }
        if let (Some(p), Some(ps)) = (&prev, &prev_sets) {
            let same_sets = ps.iter().zip(&sets).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.cmp(y) == std::cmp::Ordering::Equal)
            });
            let same_links = p.iter().map(|x| x.1).eq(probe.iter().map(|x| x.1));
            if !same_sets || !same_links {
                return Ok(false);
            }
        }
        prev = Some(probe);
        prev_sets = Some(sets);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let text = "# comment\npoly: x^2 + y^2  alpha=1/2 seed=3 # trailing\n\nregion: x^2 + y^2 - 1 v=3/5,4/5\n";
        let e = parse_corpus(text).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].line, 2);
        assert_eq!(e[0].alpha, Some(Rat::new(1.into(), 2.into())));
        assert_eq!(e[0].seed, 3);
        assert!(e[1].direction.is_some());
        let bad = parse_corpus("poly: x^2\nfoo: x\npoly: x +* y\n").unwrap_err();
        let msg = bad.to_string();
        assert!(msg.contains("line 2") && msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn random_members_are_tame() {
        let fs = random_corpus(7, 4);
        assert_eq!(fs.len(), 4);
        for f in &fs {
            let d = f.total_degree().unwrap();
            assert!((2..=4).contains(&d));
            let n = f.terms().count();
            assert!((3..=5).contains(&n));
        }
        assert_eq!(random_corpus(7, 4), fs);
    }

    #[test]
    fn constant_is_degenerate() {
        let e = parse_corpus("poly: 3").unwrap();
        let l = Ledger::from_reports(run_entry(&e[0]));
        assert_eq!(l.summary.pass + l.summary.fail, 0);
        assert!(l.reports.iter().all(|r| r.skipped_reason.is_some() && r.lhs.is_none()));
        assert_eq!(l.exit_code(), 2);
    }
}

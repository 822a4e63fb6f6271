//! The identity ledger: every identity instantiated on an input, both
//! sides computed independently and compared exactly.

mod corpus;
mod ids;
mod poly;
mod set;
mod svg;

pub use corpus::{
    auto_alphas, basepoint_independence, parse_corpus, random_corpus, run_corpus, run_entry, CorpusEntry,
    CorpusSummary, Ledger,
};
pub use ids::{IdentityId, InputKind};
pub use poly::PolyCtx;
pub use set::{generic_directions, linear_alphas, SetCtx};
pub use svg::render_svg;

use crate::error::{Error, Result};
use crate::exact::rat::{rat, Rat};
use crate::exact::BPoly;
use crate::stratified::{Direction, GbMode, PlaneSet, SetKind};
use serde::Serialize;
use serde_json::{Map, Value};
use num_traits::Signed;
use std::fmt;

/// The object an identity is instantiated on.
#[derive(Clone, Debug)]
pub enum Input {
    Poly(BPoly),
    Set(PlaneSet),
}

impl Input {
    pub fn kind(&self) -> InputKind {
        match self {
            Input::Poly(_) => InputKind::Poly,
            Input::Set(_) => InputKind::Set,
        }
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Poly(p) => write!(f, "poly: {p}"),
            Input::Set(x) => match x.kind {
                SetKind::Region => write!(f, "region: {}", x.g),
                SetKind::Curve => write!(f, "curve: {}", x.g),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Params {
    pub alpha: Option<Rat>,
    pub seed: u64,
    pub direction: Option<Direction>,
    pub gb_mode: GbMode,
    /// Declared bound for sampled Gauss–Bonnet comparisons.
    pub tol: Rat,
}

impl Default for Params {
    fn default() -> Self {
        Params { alpha: None, seed: 0, direction: None, gb_mode: GbMode::Exact, tol: rat(1) / rat(100) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
    Degenerate,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub input: String,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::opt")]
    pub lhs: Option<Rat>,
    #[serde(serialize_with = "crate::exact::rat::serde_pq::opt")]
    pub rhs: Option<Rat>,
    pub pass: bool,
    pub witnesses: Value,
    pub skipped_reason: Option<String>,
    #[serde(skip)]
    pub outcome: Outcome,
}

impl IdentityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn status(&self) -> &'static str {
        match self.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "skipped",
            Outcome::Degenerate => "degenerate",
        }
    }
}

/// Both sides of an identity, possibly made of several equations.
#[derive(Default)]
pub(crate) struct Eval {
    parts: Vec<(String, Rat, Rat)>,
    pub(crate) w: Map<String, Value>,
    tol: Option<Rat>,
}

impl Eval {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn part(&mut self, label: &str, lhs: impl Into<Rat>, rhs: impl Into<Rat>) -> &mut Self {
        self.parts.push((label.to_string(), lhs.into(), rhs.into()));
        self
    }

    pub(crate) fn int(&mut self, label: &str, lhs: i64, rhs: i64) -> &mut Self {
        self.part(label, rat(lhs), rat(rhs))
    }

    pub(crate) fn with_tol(&mut self, tol: Rat) -> &mut Self {
        self.tol = Some(tol);
        self
    }

    pub(crate) fn wit(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.w.insert(key.to_string(), serde_json::to_value(v).expect("witness serializes"));
        self
    }

    fn into_report(mut self, id: IdentityId, input: &str) -> IdentityReport {
        let close = |l: &Rat, r: &Rat| match &self.tol {
            Some(t) => (l - r).abs() <= *t,
            None => l == r,
        };
        let pass = !self.parts.is_empty() && self.parts.iter().all(|(_, l, r)| close(l, r));
        let lhs = self.parts.iter().fold(Rat::from_integer(0.into()), |a, p| a + &p.1);
        let rhs = self.parts.iter().fold(Rat::from_integer(0.into()), |a, p| a + &p.2);
        if self.parts.len() > 1 {
            let parts: Vec<Value> = self
                .parts
                .iter()
                .map(|(k, l, r)| {
                    serde_json::json!({
                        "equation": k,
                        "lhs": crate::exact::rat::to_pq(l),
                        "rhs": crate::exact::rat::to_pq(r),
                        "pass": close(l, r),
                    })
                })
                .collect();
            self.w.insert("parts".into(), Value::Array(parts));
        }
        if let Some(t) = &self.tol {
            self.w.insert("tolerance".into(), Value::String(crate::exact::rat::to_pq(t)));
        }
        IdentityReport {
            identity: id.name().into(),
            input: input.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            pass,
            witnesses: Value::Object(self.w),
            skipped_reason: None,
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        }
    }
}

fn error_report(id: IdentityId, input: &str, e: &Error, alpha: Option<&Rat>) -> IdentityReport {
    let outcome = match e {
        Error::Hypothesis(_) | Error::Precondition(_) => Outcome::Skipped,
        Error::Degenerate(_) | Error::InfiniteCriticalSet(_) | Error::Parse { .. } => Outcome::Degenerate,
        Error::Unstable(_) | Error::RadiusNotCertified(_) | Error::EndpointRoot(_) => Outcome::Fail,
    };
    let mut w = Map::new();
    if let Some(a) = alpha {
        w.insert("alpha".into(), Value::String(crate::exact::rat::to_pq(a)));
    }
    if outcome == Outcome::Fail {
        w.insert("error".into(), Value::String(e.to_string()));
    }
    IdentityReport {
        identity: id.name().into(),
        input: input.into(),
        lhs: None,
        rhs: None,
        pass: false,
        witnesses: Value::Object(w),
        skipped_reason: (outcome != Outcome::Fail).then(|| e.to_string()),
        outcome,
    }
}

pub(crate) fn finish(id: IdentityId, input: &str, r: Result<Eval>, alpha: Option<&Rat>) -> IdentityReport {
    match r {
        Ok(mut ev) => {
            if let Some(a) = alpha {
                ev.w.insert("alpha".into(), Value::String(crate::exact::rat::to_pq(a)));
            }
            ev.w.insert("formula".into(), Value::String(id.formula().into()));
            ev.into_report(id, input)
        }
        Err(e) => error_report(id, input, &e, alpha),
    }
}

/// Verify one identity on one input.
pub fn verify(id: IdentityId, input: &Input, params: &Params) -> IdentityReport {
    let desc = input.to_string();
    if id.kind() != input.kind() {
        let e = Error::Precondition(format!("{} needs a {} input", id, match id.kind() {
            InputKind::Poly => "polynomial",
            InputKind::Set => "region or curve",
        }));
        return error_report(id, &desc, &e, None);
    }
    match input {
        Input::Poly(f) => PolyCtx::new(f, params.seed).verify(id, params),
        Input::Set(x) => SetCtx::new(x, params).verify(id, params),
    }
}

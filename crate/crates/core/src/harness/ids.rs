use crate::error::Error;
use std::fmt;
use std::str::FromStr;

/// What an identity is instantiated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Poly,
    Set,
}

macro_rules! identities {
    ($($v:ident = $name:literal, $kind:ident, $alpha:literal, $formula:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId { $($v),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(IdentityId::$v => $name),* }
            }

            pub fn kind(self) -> InputKind {
                match self { $(IdentityId::$v => InputKind::$kind),* }
            }

            /// Whether the identity depends on a level `α`.
            pub fn uses_alpha(self) -> bool {
                match self { $(IdentityId::$v => $alpha),* }
            }

            /// The instantiated statement, `lhs = rhs`.
            pub fn formula(self) -> &'static str {
                match self { $(IdentityId::$v => $formula),* }
            }
        }
    };
}

identities! {
    KhLocFiber = "KH-LOC-FIBER", Poly, false, "χ(f⁻¹(f(p) ± δ) ∩ B_ε(p)) = 1 − deg_p ∇f";
    KhLocLe = "KH-LOC-LE", Poly, false, "χ({f ≤ f(p)} ∩ S_ε(p)) = 1 − deg_p ∇f";
    KhLocGe = "KH-LOC-GE", Poly, false, "χ({f ≥ f(p)} ∩ S_ε(p)) = 1 − deg_p ∇f";
    Sekalski = "SEKALSKI", Poly, false, "deg_∞ ∇f = 1 + Σ_{λ∈Λ} r(f − λ) − Σ_k r(f − λ_k⁺)";
    T31Ge = "T3.1-GE", Poly, true, "χ(f ≥ α) − χ(f = α) = Σ_{f(p)>α} ind(f)";
    T31Le = "T3.1-LE", Poly, true, "χ(f ≤ α) − χ(Lk^∞(f ≤ α)) = Σ_{f(p)≤α} ind(f)";
    C32Fiber = "C3.2-FIBER", Poly, true, "χ(f = α) = χ(R²) − Σ_{f(p)>α} ind(f) − Σ_{f(p)<α} ind(−f)";
    C32Diff = "C3.2-DIFF", Poly, true, "χ(f ≥ α) − χ(f ≤ α) = Σ_{f(p)>α} ind(f) − Σ_{f(p)<α} ind(f)";
    C33 = "C3.3", Poly, true, "χ(Lk^∞(f ≤ α)) = χ(R²) − Σ ind(f)";
    C34 = "C3.4", Poly, false, "2χ(R²) − χ(Lk^∞ R²) = Σ ind(f) + Σ ind(−f)";
    P36Ge = "P3.6-GE", Poly, true, "χ(f ≥ α) − χ(f = α) = Σ_{f(p)>α} ind(f) + λ_{f,α}";
    P36Le = "P3.6-LE", Poly, true, "χ(f ≤ α) − χ(f = α) = Σ_{f(p)<α} ind(−f) + λ_{−f,−α}";
    C37Fiber = "C3.7-FIBER", Poly, true, "χ(f = α) = χ(R²) − Σ_{f(p)>α} ind(f) − Σ_{f(p)<α} ind(−f) − λ_{f,α} − λ_{−f,−α}";
    C37Diff = "C3.7-DIFF", Poly, true, "χ(f ≥ α) − χ(f ≤ α) = Σ_{f(p)>α} ind(f) + λ_{f,α} − Σ_{f(p)<α} ind(−f) − λ_{−f,−α}";
    P38Le = "P3.8-LE", Poly, true, "χ(Lk^∞(f ≤ α)) = χ(R²) − Σ ind(f) − λ_{f,α} + μ_{f,α}";
    P38Ge = "P3.8-GE", Poly, true, "χ(Lk^∞(f ≥ α)) = χ(R²) − Σ ind(−f) − λ_{−f,−α} + μ_{−f,−α}";
    C39 = "C3.9", Poly, true, "χ(Lk^∞(f = α)) = 2χ(R²) − χ(Lk^∞ R²) − Σ ind(f) − Σ ind(−f) − λ_{f,α} + μ_{f,α} − λ_{−f,−α} + μ_{−f,−α}";
    T316 = "T3.16", Poly, false, "χ(R²) = Σ ind(f) + Σ_{j=0}^r χ(Lk^∞(f ≤ b_j⁺)) − Σ_{j=1}^r χ(Lk^∞(f ≤ b_j))";
    T317 = "T3.17", Poly, false, "χ(R²) = Σ ind(−f) + Σ_{j=0}^s χ(Lk^∞(f ≥ c_j⁺)) − Σ_{j=1}^s χ(Lk^∞(f ≥ c_j))";
    C318 = "C3.18", Poly, false, "2χ(R²) − χ(Lk^∞ R²) = Σ ind(f) + Σ ind(−f) + Σ_{j=0}^t χ(Lk^∞(f = d_j⁺)) − Σ_{j=1}^t χ(Lk^∞(f = d_j))";
    P319 = "P3.19", Poly, false, "β ↦ χ(f σ β) is constant on each component of R ∖ B̃(f)";
    T320 = "T3.20", Poly, false, "χ(R²) = Σ ind(f) + Σ ind(−f) + Σ_{k=0}^u χ(f = γ_k⁺) − Σ_{k=1}^u χ(f = γ_k)";
    T321Le = "T3.21-LE", Poly, false, "χ(R²) = Σ ind(f) + Σ_{k=0}^u χ(f ≤ γ_k⁺) − Σ_{k=1}^u χ(f ≤ γ_k)";
    T321Ge = "T3.21-GE", Poly, false, "χ(R²) = Σ ind(−f) + Σ_{k=0}^u χ(f ≥ γ_k⁺) − Σ_{k=1}^u χ(f ≥ γ_k)";
    C322 = "C3.22", Poly, false, "Σ_{k=0}^u [χ(f ≥ γ_k⁺) − χ(f ≤ γ_k⁺)] − Σ_{k=1}^u [χ(f ≥ γ_k) − χ(f ≤ γ_k)] = Σ ind(f) − Σ ind(−f)";
    P41Ge = "P4.1-GE", Poly, true, "χ(f ≥ α) − χ(f = α) = Σ_{f(p)>α} deg_p ∇f + λ_{f,α}";
    P41Le = "P4.1-LE", Poly, true, "χ(f ≤ α) − χ(f = α) = Σ_{f(p)<α} deg_p ∇f − μ_{f,α}";
    C42Fiber = "C4.2-FIBER", Poly, true, "χ(f = α) = 1 − Σ_{f(p)≠α} deg_p ∇f − λ_{f,α} + μ_{f,α}";
    C42Diff = "C4.2-DIFF", Poly, true, "χ(f ≥ α) − χ(f ≤ α) = Σ_{f(p)>α} deg_p ∇f − Σ_{f(p)<α} deg_p ∇f + λ_{f,α} + μ_{f,α}";
    P43Links = "P4.3-LINKS", Poly, true, "χ(Lk^∞(f ≤ α)) = χ(Lk^∞(f ≥ α)) = 1 − deg_∞ ∇f − λ_{f,α} + μ_{f,α}; χ(Lk^∞(f = α)) = 2 − 2deg_∞ ∇f − 2λ_{f,α} + 2μ_{f,α}";
    T44 = "T4.4", Poly, false, "1 = deg_∞ ∇f + Σ χ(Lk^∞(f ≤ b_j⁺)) − Σ χ(Lk^∞(f ≤ b_j)) = deg_∞ ∇f + Σ χ(Lk^∞(f ≥ c_j⁺)) − Σ χ(Lk^∞(f ≥ c_j)); 2 = 2deg_∞ ∇f + Σ χ(Lk^∞(f = d_j⁺)) − Σ χ(Lk^∞(f = d_j))";
    T45All = "T4.5-ALL", Poly, false, "1 = 2deg_∞ ∇f + Σ χ(f = γ_k⁺) − Σ χ(f = γ_k); 1 = deg_∞ ∇f + Σ χ(f ≤ γ_k⁺) − Σ χ(f ≤ γ_k); 1 = deg_∞ ∇f + Σ χ(f ≥ γ_k⁺) − Σ χ(f ≥ γ_k); Σ [χ(f ≥ γ_k⁺) − χ(f ≤ γ_k⁺)] = Σ [χ(f ≥ γ_k) − χ(f ≤ γ_k)]";
    P54All = "P5.4-ALL", Set, true, "χ(X ∩ {v* ≥ α}) − χ(X ∩ {v* = α}) = Σ_{>α} ind(v*); χ(X ∩ {v* ≤ α}) − χ(X ∩ {v* = α}) = Σ_{<α} ind(−v*); χ(X ∩ {v* = α}) = χ(X) − Σ_{>α} ind(v*) − Σ_{<α} ind(−v*); χ(X ∩ {v* ≥ α}) − χ(X ∩ {v* ≤ α}) = Σ_{>α} ind(v*) − Σ_{<α} ind(−v*)";
    P55All = "P5.5-ALL", Set, true, "χ(Lk^∞(X ∩ {v* ≤ α})) = χ(X) − Σ ind(v*); χ(Lk^∞(X ∩ {v* ≥ α})) = χ(X) − Σ ind(−v*); χ(Lk^∞(X ∩ {v* = α})) = 2χ(X) − χ(Lk^∞ X) − Σ ind(v*) − Σ ind(−v*)";
    T56 = "T5.6", Set, false, "Λ₀(X, X) = χ(X) for compact X";
    T58 = "T5.8", Set, false, "Λ₀(X, X) = χ(X) − ½χ(Lk^∞ X) − ½∫ χ(Lk^∞(X ∩ {v* = 0})) dv";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse { col: 0, msg: format!("unknown identity {t:?}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        assert_eq!(IdentityId::ALL.len(), 36);
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), *id);
        }
        let mut names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 36);
        assert!("t3.16".parse::<IdentityId>().is_ok());
        assert!("X9".parse::<IdentityId>().is_err());
    }
}

use proptest::prelude::*;
use satopo::circle::{degree_at_infinity, local_degree};
use satopo::critical::gradient_zeros;
use satopo::euler::{chi_c_flavors, sweep};
use satopo::exact::parse::{parse_poly, parse_rat};
use satopo::exact::rat::{ratq, to_pq};
use satopo::{AlgNumber, BPoly, Flavor, Rat};
use std::cmp::Ordering;

fn poly_from(terms: &[(u32, u32, i64)]) -> BPoly {
    let mut f = BPoly::zero();
    for &(i, j, c) in terms {
        f.add_term(i, j, Rat::from_integer(c.into()));
    }
    f
}

fn small_poly(max_deg: u32) -> impl Strategy<Value = BPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -3i64..=3), 2..5)
        .prop_map(move |t| {
            let t: Vec<_> = t.into_iter().filter(|(i, j, _)| i + j <= max_deg).collect();
            poly_from(&t)
        })
        .prop_filter("non-constant", |f| !f.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn pq_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
        let r = ratq(n, d);
        let s = to_pq(&r);
        prop_assert!(s.contains('/'));
        prop_assert_eq!(parse_rat(&s).unwrap(), r);
    }

    #[test]
    fn display_parses_back(f in small_poly(4)) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn roots_of_products(roots in prop::collection::vec(-12i64..12, 1..6), den in 1i64..5) {
        let mut p = vec![Rat::from_integer(1.into())];
        for r in &roots {
            let mut q = vec![Rat::from_integer(0.into()); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                q[k + 1] += c;
                q[k] -= c * ratq(*r, den);
            }
            p = q;
        }
        let mut want: Vec<Rat> = roots.iter().map(|r| ratq(*r, den)).collect();
        want.sort();
        want.dedup();
        let got = AlgNumber::roots_of(&p);
        prop_assert_eq!(got.len(), want.len());
        for (a, w) in got.iter().zip(&want) {
            prop_assert_eq!(a.cmp_rat(w), Ordering::Equal);
            prop_assert_eq!(a.as_rational(), Some(w.clone()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn compact_support_flavor_additivity(f in small_poly(3), a in -3i64..=3) {
        let alpha = AlgNumber::from_rat(&Rat::from_integer(a.into()));
        let [le, eq, ge] = chi_c_flavors(&f, &alpha).unwrap();
        // {f ≤ α} ∪ {f ≥ α} = R², intersecting in {f = α}; χ_c(R²) = 1
        prop_assert_eq!(le + ge - eq, 1);
    }

    #[test]
    fn sweep_direction_does_not_matter(f in small_poly(3), a in -2i64..=2) {
        let alpha = AlgNumber::from_rat(&Rat::from_integer(a.into()));
        for fl in Flavor::ALL {
            let along_x = sweep(&f, &alpha, fl, false).unwrap().chi_c();
            let along_y = sweep(&f, &alpha, fl, true).unwrap().chi_c();
            prop_assert_eq!(along_x, along_y);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn degree_at_infinity_is_sum_of_local_degrees(f in small_poly(3)) {
        let Ok(mut pts) = gradient_zeros(&f) else { return Ok(()) };
        let mut total = 0;
        for i in 0..pts.len() {
            total += local_degree(&f, &mut pts, i).unwrap();
        }
        prop_assert_eq!(degree_at_infinity(&f).unwrap(), total);
    }
}

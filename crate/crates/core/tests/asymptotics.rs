use gaussratio::asymptotics::*;
use gaussratio::hyp2f1_core::Params;
use gaussratio::shift_engine::derive_shifts;
use proptest::prelude::*;

fn params(a: f64, b: f64, c: f64) -> Params {
    Params::new(a, b, c).unwrap()
}

const WORKED: [(i64, i64, i64); 15] = [
    (0, 1, 1),
    (0, 1, 0),
    (1, 1, 1),
    (1, 1, 2),
    (0, 2, 2),
    (0, 2, 0),
    (1, 1, 0),
    (0, 0, 1),
    (0, 0, -1),
    (0, 0, 2),
    (0, 1, 2),
    (0, -1, 0),
    (-1, -1, 0),
    (-1, 1, 0),
    (-2, -2, 0),
];

#[test]
fn gauss_ratio_at_one() {
    let s = derive_shifts(0, 1, 1);
    let r = classify_at_one(&params(0.3, 0.6, 1.4), &s).unwrap();
    assert_eq!((r.nu, r.log_flag, r.degenerate_case), (0.0, 0, DegenerateCase::None));
    assert!(r.integrable);
}

#[test]
fn contiguous_b_at_one_needs_c_above_a_plus_b() {
    let s = derive_shifts(0, 1, 0);
    for (c, ok) in [(1.4, true), (0.95, true), (0.9, false), (0.7, false)] {
        let r = classify_at_one(&params(0.3, 0.6, c), &s).unwrap();
        assert_eq!(r.integrable, ok, "c = {c}");
    }
    let r = classify_at_one(&params(0.3, 0.6, 0.9), &s).unwrap();
    assert_eq!((r.nu, r.log_flag), (-1.0, -1));
}

#[test]
fn shifted_all_at_one() {
    let r = classify_at_one(&params(0.25, 0.25, 1.0), &derive_shifts(1, 1, 1)).unwrap();
    assert!((r.nu + 0.5).abs() < 1e-15);
    assert!(r.integrable);
}

#[test]
fn degenerate_cases_at_one() {
    // denominator polynomial
    let r = classify_at_one(&params(-2.0, 0.6, 1.4), &derive_shifts(0, 1, 1)).unwrap();
    assert_eq!(r.degenerate_case, DegenerateCase::AOrBNonposIntDen);
    // numerator polynomial: b + n2 = 0
    let r = classify_at_one(&params(0.3, 1.0, 1.4), &derive_shifts(0, -1, 0)).unwrap();
    assert_eq!(r.degenerate_case, DegenerateCase::AOrBNonposIntNum);
    assert!((r.nu - 0.0).abs() < 1e-15);
    // a − c ∈ ℕ₀: F(a,b;c;z) = (1−z)^η F(c−a, c−b; c; z)
    let p = params(2.4, 0.3, 1.4);
    let r = classify_at_one(&p, &derive_shifts(0, 1, 1)).unwrap();
    assert_eq!(r.degenerate_case, DegenerateCase::EulerReducedDen);
    // F(−2, b; b; z) = (1 − z)², reduced rather than polynomial
    let r = classify_at_one(&params(-2.0, 1.5, 1.5), &derive_shifts(0, 0, 1)).unwrap();
    assert_eq!(r.denominator, LocalForm::EulerReduced);
}

#[test]
fn mixed_polynomial_probe() {
    // F(−2, b; b; z) = (1 − z)², numerator regular at 1: ν = −2
    let p = params(-2.0, 1.5, 1.5);
    let s = derive_shifts(0, 0, 1);
    let r = classify_at_one(&p, &s).unwrap();
    assert!((r.nu + 2.0).abs() < 1e-12);
    let v = probe_at_one(&p, &s, -2.0).unwrap();
    let m = v[0];
    assert!(v.iter().all(|x| (x / m - 1.0).abs() < 0.05), "{v:?}");
}

#[test]
fn undefined_numerator() {
    assert!(classify_at_one(&params(0.3, 0.6, 1.0), &derive_shifts(0, 0, -1)).is_err());
    assert!(classify_at_infinity(&params(0.3, 0.6, 1.0), &derive_shifts(0, 0, -1)).is_err());
}

#[test]
fn gauss_ratio_polynomial_part() {
    let s = derive_shifts(0, 1, 1);
    let hi = classify_at_infinity(&params(0.3, 0.6, 1.4), &s).unwrap();
    assert_eq!(hi.N, 0);
    let want = 1.4 * 0.3 / (0.6 * 1.1);
    assert!((hi.Q.coeff(0) - want).abs() < 1e-14);
    assert!(hi.tabulated && hi.A_ratio_defined);
    let lo = classify_at_infinity(&params(0.6, 0.3, 1.4), &s).unwrap();
    assert!(lo.Q.is_zero() && lo.N == 0);
}

#[test]
fn contiguous_c_polynomial_part() {
    let s = derive_shifts(0, 0, 1);
    let r = classify_at_infinity(&params(0.3, 0.6, 1.4), &s).unwrap();
    assert!((r.Q.coeff(0) - 1.4 / 1.1).abs() < 1e-14);
    let r = classify_at_infinity(&params(0.6, 0.3, 1.4), &s).unwrap();
    assert!((r.Q.coeff(0) - 1.4 / 1.1).abs() < 1e-14);
    let r = classify_at_infinity(&params(0.6, 0.6, 1.4), &s).unwrap();
    assert_eq!(r.case, InfinityCase::EqualParams);
    assert!((r.Q.coeff(0) - 1.4 / 0.8).abs() < 1e-12);
}

#[test]
fn log_ratio_example() {
    // R_{0,−1,0}(z) for a = b = 1, c = 2 equals z / log(1 + z)
    let p = params(1.0, 1.0, 2.0);
    let s = derive_shifts(0, -1, 0);
    let r = classify_at_infinity(&p, &s).unwrap();
    assert_eq!(r.N, 1);
    assert!(r.Q.is_zero());
    assert!(r.tabulated);
    assert_eq!((r.leading_exponent, r.leading_log), (1.0, -1));
    assert!(decreasing(&probe_at_infinity(&p, &s, &r).unwrap()));
}

#[test]
fn quadratic_part_of_double_lowering() {
    let s = derive_shifts(-2, -2, 0);
    for (a, b, c) in [(0.3, 0.6, 1.4), (3.1, 0.2, 4.5), (0.2, 3.1, 4.5)] {
        let p = params(a, b, c);
        let r = classify_at_infinity(&p, &s).unwrap();
        assert_eq!((r.N, r.tabulated), (2, true));
        let (x, y) = if a >= b { (a, b) } else { (b, a) };
        let g = (x - 2.0) * (x - 1.0) / ((c - y) * (c - y + 1.0));
        assert!((r.Q.coeff(2) - g).abs() < 1e-12 * g.abs());
        assert!(decreasing(&probe_at_infinity(&p, &s, &r).unwrap()));
    }
}

#[test]
fn degenerate_table_entry_falls_back() {
    // a = 0: R_{0,1,1} ≡ 1, the tabulated Q = 0 for b ≤ a would be wrong
    let p = params(0.0, -0.5, 1.4);
    let s = derive_shifts(0, 1, 1);
    let r = classify_at_infinity(&p, &s).unwrap();
    assert!(!r.tabulated);
    assert_eq!(r.N, 1);
    assert!(r.Q.is_zero());
    assert_eq!(r.case, InfinityCase::Reduced);
    assert!((r.leading_coeff - 1.0).abs() < 1e-15);
}

#[test]
fn general_order_rule() {
    assert_eq!(general_order(-0.7), 1);
    assert_eq!(general_order(0.0), 1);
    assert_eq!(general_order(0.4), 2);
    assert_eq!(general_order(2.0), 3);
    let r = classify_at_infinity(&params(0.3, 0.6, 1.4), &derive_shifts(2, -3, 1)).unwrap();
    assert!(!r.tabulated && r.Q.is_zero());
    assert_eq!(r.N, general_order(r.leading_exponent));
}

#[test]
fn worked_triples_at_corpus_parameters() {
    for (k, &(n1, n2, m)) in WORKED.iter().enumerate() {
        let (a, b, c) = match k + 1 {
            3 => (0.3, 0.4, 2.2),
            5 => (0.3, 0.7, 1.9),
            6 | 7 => (0.3, 0.6, 2.4),
            _ => (0.3, 0.6, 1.4),
        };
        let p = params(a, b, c);
        let s = derive_shifts(n1, n2, m);
        let r = classify_at_infinity(&p, &s).unwrap();
        assert!(r.tabulated, "example {}", k + 1);
        let bound = 0f64.max(r.leading_exponent.ceil());
        assert!(r.Q.degree() as f64 <= bound, "example {}", k + 1);
        let v = probe_at_infinity(&p, &s, &r).unwrap();
        assert!(decreasing(&v), "example {}: {v:?}", k + 1);
        let one = classify_at_one(&p, &s).unwrap();
        assert!(one.integrable, "example {}", k + 1);
    }
}

fn away_from_integers(gap: f64) -> impl Strategy<Value = Params> {
    (-2.5f64..2.5, -2.5f64..2.5, 0.2f64..4.0).prop_filter_map("generic", move |(a, b, c)| {
        let p = Params::new(a, b, c).ok()?;
        let far = |x: f64| (x - x.round()).abs() > gap;
        [a, b, c - a, c - b, c - a - b, a - b].iter().all(|&x| far(x)).then_some(p)
    })
}

fn generic() -> impl Strategy<Value = Params> {
    away_from_integers(0.05)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, max_local_rejects: 1 << 20, ..ProptestConfig::default() })]

    #[test]
    fn generic_exponent_at_one(p in generic(), n1 in -2i64..3, n2 in -2i64..3, m in -2i64..3) {
        let s = derive_shifts(n1, n2, m);
        let r = classify_at_one(&p, &s).unwrap();
        let eta = p.c - p.a - p.b;
        let q = (m - n1 - n2) as f64;
        prop_assert_eq!(r.degenerate_case, DegenerateCase::None);
        prop_assert!((r.nu - ((eta + q).min(0.0) - eta.min(0.0))).abs() < 1e-12);
    }

    #[test]
    fn estimate_near_one(p in away_from_integers(0.15), k in 0usize..15) {
        let (n1, n2, m) = WORKED[k];
        let s = derive_shifts(n1, n2, m);
        let r = classify_at_one(&p, &s).unwrap();
        prop_assume!(r.integrable);
        let theta = (r.nu - 1.0) / 2.0;
        let v = probe_at_one(&p, &s, theta).unwrap();
        prop_assert!(confirms_decay(&v), "{:?}", v);
    }

    #[test]
    fn worked_table_is_consistent(p in generic(), k in 0usize..15) {
        let (n1, n2, m) = WORKED[k];
        let s = derive_shifts(n1, n2, m);
        let r = classify_at_infinity(&p, &s).unwrap();
        prop_assert!(r.tabulated);
        prop_assert!(r.A_ratio_defined);
    }

    #[test]
    fn polynomial_part_at_infinity(p in away_from_integers(0.15), k in 0usize..15) {
        let (n1, n2, m) = WORKED[k];
        let s = derive_shifts(n1, n2, m);
        let r = classify_at_infinity(&p, &s).unwrap();
        let v = probe_at_infinity(&p, &s, &r).unwrap();
        prop_assert!(confirms_decay(&v), "{:?}", v);
    }
}

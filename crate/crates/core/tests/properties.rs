use bateman::output::round_sig;
use bateman::{
    bateman_k, bateman_k_quadrature, format_number, havelock_h, havelock_h_quadrature, ki, KiOrder, Order, OrderClass,
    QuadConfig,
};
use proptest::prelude::*;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn k_reflects_through_the_origin(nu in -6.0f64..6.0, x in 0.1f64..5.0) {
        let c = cfg();
        let a = bateman_k(nu, -x, &c).unwrap().value;
        let b = bateman_k_quadrature(-nu, x, &c).unwrap().value;
        prop_assert!((a - b).abs() < 1e-8, "{a} vs {b}");
    }

    #[test]
    fn h_reflects_with_a_sign(nu in -6.0f64..6.0, x in 0.1f64..5.0) {
        let c = cfg();
        let a = havelock_h(nu, -x, &c).unwrap().value;
        let b = havelock_h_quadrature(-nu, x, &c).unwrap().value;
        prop_assert!((a + b).abs() < 1e-8, "{a} vs {b}");
    }

    #[test]
    fn integer_orders_are_bounded(n in -12i32..=12, x in -20.0f64..20.0) {
        let v = bateman_k(n, x, &cfg()).unwrap().value;
        prop_assert!(v.abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn even_orders_vanish_on_the_far_side(n in 1u32..=8, x in 0.01f64..30.0) {
        let c = cfg();
        prop_assert_eq!(bateman_k(2.0 * n as f64, -x, &c).unwrap().value, 0.0);
        prop_assert_eq!(bateman_k(-2.0 * n as f64, x, &c).unwrap().value, 0.0);
    }

    #[test]
    fn even_closed_forms_match_quadrature(n in 0u32..=6, x in 0.2f64..6.0) {
        let c = cfg();
        let nu = 2.0 * n as f64;
        let a = bateman_k(nu, x, &c).unwrap().value;
        let b = bateman_k_quadrature(nu, x, &c).unwrap().value;
        prop_assert!((a - b).abs() < 1e-8);
        let a = havelock_h(nu, x, &c).unwrap().value;
        let b = havelock_h_quadrature(nu, x, &c).unwrap().value;
        prop_assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn ki_two_is_minus_twice_k0(x in 0.05f64..20.0) {
        let c = cfg();
        let a = ki(KiOrder::from_bateman_order(2.0).unwrap(), x, &c).unwrap().value;
        prop_assert!((a + 2.0 * (-x).exp()).abs() < 1e-12);
    }

    #[test]
    fn order_classification(m in -40i32..40) {
        prop_assert_eq!(Order::new(m as f64).class(), if m % 2 == 0 { OrderClass::EvenInt } else { OrderClass::OddInt });
        prop_assert_eq!(Order::new(m as f64 + 0.5).class(), OrderClass::HalfInt);
        prop_assert_eq!(Order::new(m as f64 + 0.3).class(), OrderClass::General);
    }

    #[test]
    fn printed_numbers_round_trip(v in prop::num::f64::NORMAL) {
        let s = format_number(v);
        let back: f64 = s.parse().unwrap();
        prop_assert_eq!(back, round_sig(v));
        let digits = s
            .split('e')
            .next()
            .unwrap()
            .chars()
            .filter(|c| c.is_ascii_digit())
            .collect::<String>();
        prop_assert!(digits.trim_start_matches('0').len() <= 15, "{}", s);
        prop_assert!(!s.contains(','));
    }
}

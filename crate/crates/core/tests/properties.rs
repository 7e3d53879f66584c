use fge_core::entanglement::{concurrence_closed_form, entropy_of_formation, is_entangled};
use fge_core::exchange::{exchange_amplitude, f_dimensional, f_from_pressure, ReducedCoordinates};
use fge_core::fermi::{
    chemical_potential, density_from_fermi_momentum, entanglement_distance, fermi_dirac,
    fermi_momentum_from_density, fermi_momentum_from_pressure, occupation, pressure_from_density,
    pressure_from_entanglement_distance, FermiGasState, GasRegime, MuMode,
};
use proptest::prelude::*;

const ZETA0: f64 = 1.814_822_977_001_229;

fn regime() -> impl Strategy<Value = GasRegime> {
    prop_oneof![
        Just(GasRegime::NonRelativistic),
        Just(GasRegime::ExtremeRelativistic)
    ]
}

fn rel(a: f64, b: f64) -> f64 {
    (a / b - 1.0).abs()
}

proptest! {
    #[test]
    fn density_pressure_round_trip(log_n in 20.0f64..40.0, regime in regime()) {
        let n = 10f64.powf(log_n);
        let p = pressure_from_density(n, regime).unwrap();
        let k = fermi_momentum_from_pressure(p, regime).unwrap();
        prop_assert!(rel(density_from_fermi_momentum(k).unwrap(), n) < 1e-10);
        prop_assert!(rel(fermi_momentum_from_density(n).unwrap(), k) < 1e-12);

        let r_e = entanglement_distance(k, ZETA0).unwrap();
        prop_assert!(rel(pressure_from_entanglement_distance(r_e, regime, ZETA0).unwrap(), p) < 1e-10);
    }

    #[test]
    fn pressure_is_homogeneous(log_n in 20.0f64..40.0, lambda in 0.1f64..10.0, regime in regime()) {
        let n = 10f64.powf(log_n);
        let degree = match regime {
            GasRegime::NonRelativistic => 5,
            GasRegime::ExtremeRelativistic => 4,
        };
        let p = pressure_from_density(n, regime).unwrap();
        let scaled = pressure_from_density(lambda.powi(3) * n, regime).unwrap();
        prop_assert!(rel(scaled, lambda.powi(degree) * p) < 1e-12);
    }

    #[test]
    fn occupation_decreases_in_energy(k1 in 0.0f64..4e9, dk in 1.0f64..1e9, temp in 1.0f64..1e6, regime in regime()) {
        let mu = 1e-18;
        let a = occupation(k1, mu, temp, regime).unwrap();
        let b = occupation(k1 + dk, mu, temp, regime).unwrap();
        prop_assert!(b <= a);
        prop_assert!((0.0..=1.0).contains(&a));
    }

    #[test]
    fn fermi_dirac_has_no_nan(z in -1e6f64..1e6) {
        let v = fermi_dirac(z);
        prop_assert!(v.is_finite() && (0.0..=1.0).contains(&v));
    }

    #[test]
    fn amplitude_bounded_and_even(x in 0.0f64..50.0, t in 0.0f64..0.5, regime in regime()) {
        let c = ReducedCoordinates::with_mu_mode(x, t, regime, MuMode::ExactNormalization).unwrap();
        let f = exchange_amplitude(c, 1e-10).unwrap().value;
        prop_assert!(f.abs() <= 1.0 + 1e-9, "f = {f}");
        let g = f.clamp(-1.0, 1.0);
        prop_assert_eq!(concurrence_closed_form(g).unwrap(), concurrence_closed_form(-g).unwrap());
        prop_assert_eq!(entropy_of_formation(g).unwrap(), entropy_of_formation(-g).unwrap());
        prop_assert_eq!(is_entangled(g).unwrap(), is_entangled(-g).unwrap());
    }

    #[test]
    fn concurrence_monotone_in_amplitude(a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(concurrence_closed_form(lo).unwrap() <= concurrence_closed_form(hi).unwrap());
        prop_assert!(entropy_of_formation(lo).unwrap() <= entropy_of_formation(hi).unwrap());
    }
}

#[test]
fn round_trip_over_twenty_decades() {
    for regime in [GasRegime::NonRelativistic, GasRegime::ExtremeRelativistic] {
        for i in 0..=200 {
            let n = 10f64.powf(20.0 + i as f64 * 0.1);
            let p = pressure_from_density(n, regime).unwrap();
            let k = fermi_momentum_from_pressure(p, regime).unwrap();
            assert!(
                rel(density_from_fermi_momentum(k).unwrap(), n) < 1e-10,
                "{regime:?} {n:e}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    // (k_F, r) → (λ k_F, r/λ) at fixed t = T/T_F; T and μ scale with ε_F
    #[test]
    fn scaling_invariance_of_the_dimensional_integral(
        log_lambda in -3.0f64..3.0,
        x in 0.01f64..5.0,
        t in 0.0f64..0.3,
        regime in regime(),
    ) {
        let eval = |k_f: f64, r: f64| {
            let n = density_from_fermi_momentum(k_f).unwrap();
            let t_f = FermiGasState::new(n, 0.0, regime, MuMode::default()).unwrap().fermi_temperature;
            let temp = t * t_f;
            let mu = chemical_potential(n, temp, regime, MuMode::default()).unwrap();
            f_dimensional(r, k_f, temp, mu, regime, 1e-12).unwrap()
        };
        let lambda = 10f64.powf(log_lambda);
        let base = eval(1e10, x * 1e-10);
        let scaled = eval(lambda * 1e10, x * 1e-10 / lambda);
        prop_assert!((scaled - base).abs() <= 1e-12 * base.abs().max(1e-3), "{base} {scaled}");
    }
}

#[test]
fn amplitude_decreases_with_pressure_below_the_first_zero() {
    let mut last = 1.0;
    for i in 0..60 {
        let p = 10f64.powf(1.0 + i as f64 * 0.2);
        let f = f_from_pressure(
            1e-10,
            p,
            0.0,
            GasRegime::NonRelativistic,
            MuMode::default(),
            1e-10,
        )
        .unwrap()
        .value;
        if f < 0.0 {
            break;
        }
        assert!(f <= last, "P = {p:e}");
        last = f;
    }
}

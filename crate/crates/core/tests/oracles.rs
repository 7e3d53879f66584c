use fge_core::astro::{dwarf_report, scaling_law_re, WhiteDwarf};
use fge_core::constants::{SOLAR_MASS, SOLAR_RADIUS};
use fge_core::entanglement::{
    concurrence_closed_form, is_entangled, ppt_min_eigenvalue, werner_state_from_f,
    wootters_concurrence,
};
use fge_core::exchange::{
    exchange_amplitude, f_from_pressure, f_from_pressure_dimensional, zeta_zero_temperature,
    ReducedCoordinates,
};
use fge_core::fermi::{reduced_chemical_potential, GasRegime, MuMode};

/// Composite Simpson on a uniform grid of `n` intervals over the occupied range.
fn simpson_oracle(x: f64, t: f64, regime: GasRegime, n: usize) -> f64 {
    let mu = reduced_chemical_potential(t, regime, MuMode::ExactNormalization).unwrap();
    let d_max = mu.max(0.0) + 40.0 * t;
    let u_max = match regime {
        GasRegime::NonRelativistic => d_max.sqrt(),
        GasRegime::ExtremeRelativistic => d_max,
    };
    let g = |u: f64| {
        let d = match regime {
            GasRegime::NonRelativistic => u * u,
            GasRegime::ExtremeRelativistic => u,
        };
        u * (x * u).sin() / (((d - mu) / t).exp() + 1.0)
    };
    let h = u_max / n as f64;
    let mut s = g(0.0) + g(u_max);
    for i in 1..n {
        s += g(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    3.0 / x * s * h / 3.0
}

#[test]
fn quadrature_against_fixed_grid_oracle() {
    for regime in [GasRegime::NonRelativistic, GasRegime::ExtremeRelativistic] {
        for (x, t) in [(1.0, 0.01), (3.0, 0.1), (0.5, 0.3)] {
            let c =
                ReducedCoordinates::with_mu_mode(x, t, regime, MuMode::ExactNormalization).unwrap();
            let f = exchange_amplitude(c, 1e-10).unwrap().value;
            let oracle = simpson_oracle(x, t, regime, 10_000_000);
            assert!(
                (f - oracle).abs() < 1e-9,
                "{regime:?} x={x} t={t}: {f} vs {oracle}"
            );
        }
    }
}

#[test]
fn reduced_and_dimensional_routes_agree() {
    for regime in [GasRegime::NonRelativistic, GasRegime::ExtremeRelativistic] {
        for (r, p, temp) in [
            (1e-10, 1e9, 0.0),
            (1e-10, 1e9, 500.0),
            (3e-12, 1e20, 1e6),
            (1e-13, 1e22, 3e7),
        ] {
            let a = f_from_pressure(r, p, temp, regime, MuMode::ExactNormalization, 1e-11)
                .unwrap()
                .value;
            let b =
                f_from_pressure_dimensional(r, p, temp, regime, MuMode::ExactNormalization, 1e-11)
                    .unwrap();
            assert!(
                (a - b).abs() < 1e-9,
                "{regime:?} r={r:e} P={p:e} T={temp}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn wootters_and_ppt_match_closed_forms() {
    for i in 0..=200 {
        let f = -1.0 + 2.0 * i as f64 / 200.0;
        let state = werner_state_from_f(f).unwrap();
        let c = wootters_concurrence(&state);
        assert!(
            (c - concurrence_closed_form(f).unwrap()).abs() < 1e-10,
            "f = {f}"
        );
        // exact (1 − 2f²)/(4 − 2f²)
        let ppt = ppt_min_eigenvalue(&state);
        assert!((ppt - (1.0 - 2.0 * f * f) / (4.0 - 2.0 * f * f)).abs() < 1e-12);
        if (2.0 * f * f - 1.0).abs() > 1e-9 {
            assert_eq!(ppt < 0.0, is_entangled(f).unwrap(), "f = {f}");
        }
    }
}

#[test]
fn werner_spectrum() {
    for i in 0..=50 {
        let f = i as f64 / 50.0;
        let f2 = f * f;
        let e = werner_state_from_f(f).unwrap().eigenvalues();
        let triplet = (1.0 - f2) / (4.0 - 2.0 * f2);
        let singlet = (1.0 + f2) / (4.0 - 2.0 * f2);
        let mut expect = [triplet, triplet, triplet, singlet];
        expect.sort_by(f64::total_cmp);
        for (a, b) in e.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "f = {f}");
        }
        assert!((e.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn dwarf_scaling_over_three_decades() {
    let zeta = zeta_zero_temperature();
    let reference =
        dwarf_report(&WhiteDwarf::sirius_b(), zeta, GasRegime::NonRelativistic).unwrap();
    for i in 0..=12 {
        for j in 0..=12 {
            let mass = SOLAR_MASS * 10f64.powf(-1.5 + 0.25 * i as f64);
            let radius = 0.008 * SOLAR_RADIUS * 10f64.powf(-1.5 + 0.25 * j as f64);
            let dwarf = WhiteDwarf::carbon_oxygen(mass, radius, 1e4).unwrap();
            let full = dwarf_report(&dwarf, zeta, GasRegime::NonRelativistic)
                .unwrap()
                .r_e;
            let law = scaling_law_re(mass, radius, &reference).unwrap();
            assert!((full / law - 1.0).abs() < 1e-12, "M={mass:e} R={radius:e}");
        }
    }
}

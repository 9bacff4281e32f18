//! Property-based invariants: frame-transform geometry, steady-state
//! parity and monotonicity, design symmetry, and trajectory integrity.

mod common;

use common::W0;
use proptest::prelude::*;
use qheat_core::model::POSITIVITY_EPS;
use qheat_core::*;

fn bloch_vector() -> impl Strategy<Value = BlochVector> {
    (
        0.0..1.0f64,
        0.0..std::f64::consts::PI,
        0.0..std::f64::consts::TAU,
    )
        .prop_map(|(r, polar, azimuth)| {
            BlochVector::new(
                r * polar.sin() * azimuth.cos(),
                r * polar.sin() * azimuth.sin(),
                r * polar.cos(),
            )
            .unwrap()
        })
}

fn baths() -> impl Strategy<Value = (BathSpec, BathSpec)> {
    (8.0..10.0f64, 8.0..10.0f64, 0.0..1.0f64, 0.0..1.0f64).prop_map(|(eh, ec, nh, nc)| {
        (
            BathSpec::new(10f64.powf(eh), nh, BathLabel::Hot).unwrap(),
            BathSpec::new(10f64.powf(ec), nc, BathLabel::Cold).unwrap(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn frame_round_trip_is_identity(
        b in bloch_vector(),
        omega_d in 1e9..1e11f64,
        t in 0.0..1e-6f64,
    ) {
        let r = to_rotating(b, omega_d, t);
        let back = from_rotating(r, omega_d, t);
        prop_assert!((back.x - b.x).abs() <= 1e-12);
        prop_assert!((back.y - b.y).abs() <= 1e-12);
        prop_assert!((back.z - b.z).abs() <= 1e-12);
        // z untouched by either map
        prop_assert_eq!(r.p_e - r.p_g, back.z);
        // norm preserved within the positivity budget
        prop_assert!(r.bloch_norm() <= 1.0 + POSITIVITY_EPS);
        prop_assert!(back.norm() <= 1.0 + POSITIVITY_EPS);
    }
}

proptest! {
    #[test]
    fn occupation_detailed_balance(
        omega_exp in 9.0..11.5f64,
        temp in 0.01..10.0f64,
    ) {
        let omega0 = 10f64.powf(omega_exp);
        let n = thermal_occupation(omega0, temp).unwrap();
        let boltzmann = (-qheat_core::model::HBAR * omega0 / (qheat_core::model::K_B * temp)).exp();
        let lhs = n / (n + 1.0);
        prop_assert!((lhs - boltzmann).abs() <= 1e-12 * boltzmann.max(1e-300));
    }

    #[test]
    fn steady_state_parity_in_detuning(
        (hot, cold) in baths(),
        g_frac in 0.0..5.0f64,
        delta_frac in 0.0..5.0f64,
    ) {
        let gt = gamma_tot(&hot, &cold);
        let delta = delta_frac * gt;
        let plus = steady_analytic(&hot, &cold, &DriveSpec::new(W0, g_frac * gt, delta).unwrap()).unwrap();
        let minus = steady_analytic(&hot, &cold, &DriveSpec::new(W0, g_frac * gt, -delta).unwrap()).unwrap();
        // x̃ is odd in δ; ỹ and z̃ are even
        prop_assert_eq!(plus.x_tilde_inf, -minus.x_tilde_inf);
        prop_assert_eq!(plus.y_tilde_inf, minus.y_tilde_inf);
        prop_assert_eq!(plus.z_tilde_inf, minus.z_tilde_inf);
    }

    #[test]
    fn population_contrast_shrinks_with_drive(
        (hot, cold) in baths(),
        delta_frac in -5.0..5.0f64,
    ) {
        let gt = gamma_tot(&hot, &cold);
        let delta = delta_frac * gt;
        let mut prev = f64::INFINITY;
        for step in 1..6 {
            let g = step as f64 * 0.8 * gt;
            let s = steady_analytic(&hot, &cold, &DriveSpec::new(W0, g, delta).unwrap()).unwrap();
            prop_assert!(s.z_tilde_inf.abs() < prev);
            prev = s.z_tilde_inf.abs();
        }
    }

    #[test]
    fn g_star_is_even_in_detuning(
        (hot, cold) in baths(),
        delta_frac in 0.0..5.0f64,
    ) {
        let (hot, cold) = if hot.n_bar >= cold.n_bar {
            (hot, cold)
        } else {
            (BathSpec::new(hot.gamma, cold.n_bar, BathLabel::Hot).unwrap(),
             BathSpec::new(cold.gamma, hot.n_bar, BathLabel::Cold).unwrap())
        };
        let delta = delta_frac * gamma_tot(&hot, &cold);
        prop_assert_eq!(
            g_star(&hot, &cold, delta).unwrap(),
            g_star(&hot, &cold, -delta).unwrap()
        );
    }

    #[test]
    fn trajectories_preserve_trace_and_stay_in_ball(
        (hot, cold) in baths(),
        g_frac in 0.0..5.0f64,
        delta_frac in -5.0..5.0f64,
        z0 in -1.0..1.0f64,
    ) {
        let gt = gamma_tot(&hot, &cold);
        let drive = DriveSpec::new(W0, g_frac * gt, delta_frac * gt).unwrap();
        let gen = build_generator(hot, cold, drive, 0.0).unwrap();
        let y0 = RotFrameState::from_z(z0).unwrap();
        let grid: Vec<f64> = (1..40).map(|i| i as f64 * 0.5 / gt).collect();
        let traj = evolve_trajectory(&gen, &y0, &grid).unwrap();
        for y in &traj.states {
            prop_assert!((y.p_e + y.p_g - 1.0).abs() <= 1e-12);
            prop_assert!(y.bloch_norm() <= 1.0 + POSITIVITY_EPS);
        }
    }
}

#[test]
fn steady_norm_never_exceeds_unit_ball() {
    // closed-form steady states are physical for any parameters
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_000a);
    for _ in 0..2000 {
        let d = common::draw(&mut rng, false, true);
        let s = steady_analytic_dephasing(&d.hot, &d.cold, &d.drive, d.gamma_phi).unwrap();
        let norm = (s.x_tilde_inf.powi(2) + s.y_tilde_inf.powi(2) + s.z_tilde_inf.powi(2)).sqrt();
        assert!(
            norm <= 1.0 + POSITIVITY_EPS,
            "steady norm {norm} out of ball"
        );
        assert!(s.z_tilde_inf < 0.0);
    }
}

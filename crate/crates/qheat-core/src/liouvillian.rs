//! Rotating-frame generator of the driven, two-bath qubit: construction of
//! the 4×4 evolution matrix for Y = (P_e, x̃, ỹ, P_g), time propagation by
//! dense matrix exponential, and numeric steady-state extraction from the
//! null space.

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};
use crate::model::{gamma_tot, BathSpec, DriveSpec, RotFrameState};

/// Relative threshold on the second-smallest singular value below which the
/// null space is treated as degenerate.
const DEGENERACY_REL: f64 = 1e-6;

/// Time-independent generator A with Ẏ = A·Y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generator {
    matrix: Matrix4<f64>,
    hot: BathSpec,
    cold: BathSpec,
    drive: DriveSpec,
    gamma_phi: f64,
}

/// Build the rotating-frame generator.
///
/// Populations exchange at the bare rates γ(n̄+1) down and γn̄ up; both
/// coherence components decay at γ_tot/2 and are mixed by the detuning;
/// the drive couples ỹ to the populations. Pure dephasing adds −γ_φ to
/// the two coherence diagonal entries and leaves the population rows
/// untouched (a σ_z channel cannot move population).
pub fn build_generator(
    hot: BathSpec,
    cold: BathSpec,
    drive: DriveSpec,
    gamma_phi: f64,
) -> Result<Generator> {
    if gamma_phi < 0.0 || !gamma_phi.is_finite() {
        return Err(Error::Domain(format!(
            "dephasing rate must be non-negative and finite, got {gamma_phi:e}"
        )));
    }
    let down = hot.gamma * (hot.n_bar + 1.0) + cold.gamma * (cold.n_bar + 1.0);
    let up = hot.gamma * hot.n_bar + cold.gamma * cold.n_bar;
    let coh = -gamma_tot(&hot, &cold) / 2.0 - gamma_phi;
    let g = drive.g;
    let delta = drive.delta;

    #[rustfmt::skip]
    let matrix = Matrix4::new(
        -down,      0.0,    g,    up,
         0.0,       coh,   -delta, 0.0,
        -g / 2.0,   delta,  coh,   g / 2.0,
         down,      0.0,   -g,    -up,
    );

    Ok(Generator {
        matrix,
        hot,
        cold,
        drive,
        gamma_phi,
    })
}

impl Generator {
    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.matrix
    }

    pub fn hot(&self) -> &BathSpec {
        &self.hot
    }

    pub fn cold(&self) -> &BathSpec {
        &self.cold
    }

    pub fn drive(&self) -> &DriveSpec {
        &self.drive
    }

    pub fn gamma_phi(&self) -> f64 {
        self.gamma_phi
    }

    pub fn gamma_tot(&self) -> f64 {
        gamma_tot(&self.hot, &self.cold)
    }

    /// Slowest nonzero relaxation rate: min |Re λ| over the non-stationary
    /// eigenvalues of the generator.
    pub fn slowest_rate(&self) -> f64 {
        let eigs = self.matrix.complex_eigenvalues();
        let scale = self.gamma_tot();
        eigs.iter()
            .map(|l| l.re.abs())
            .filter(|r| *r > 1e-9 * scale)
            .fold(f64::INFINITY, f64::min)
    }
}

fn state_to_vec(y: &RotFrameState) -> Vector4<f64> {
    Vector4::new(y.p_e, y.x_tilde, y.y_tilde, y.p_g)
}

fn vec_to_state(v: &Vector4<f64>) -> Result<RotFrameState> {
    RotFrameState::new(v[0], v[1], v[2], v[3])
}

/// Propagate a state for a time t ≥ 0: returns exp(A·t)·y0.
pub fn propagate(gen: &Generator, y0: &RotFrameState, t: f64) -> Result<RotFrameState> {
    if t < 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!(
            "propagation time must be non-negative and finite, got {t:e}"
        )));
    }
    y0.check()?;
    if t == 0.0 {
        return Ok(*y0);
    }
    let prop = (gen.matrix * t).exp();
    vec_to_state(&(prop * state_to_vec(y0)))
}

/// A propagated state sequence on a strictly increasing time grid.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<RotFrameState>,
    pub generator: Generator,
}

/// Evaluate the trajectory of y0 on the given time grid.
///
/// Steps incrementally between grid points, reusing the step propagator on
/// uniform grids; each step is a dense matrix exponential, so the result
/// matches direct propagation to the exp accuracy.
pub fn evolve_trajectory(
    gen: &Generator,
    y0: &RotFrameState,
    t_grid: &[f64],
) -> Result<Trajectory> {
    if t_grid.is_empty() {
        return Err(Error::Domain("time grid must not be empty".into()));
    }
    if t_grid[0] < 0.0 || t_grid[0].is_nan() {
        return Err(Error::Domain(format!(
            "time grid must start at a non-negative time, got {:e}",
            t_grid[0]
        )));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0] || w[1].is_nan()) {
        return Err(Error::Domain(
            "time grid must be strictly increasing".into(),
        ));
    }
    y0.check()?;

    let mut states = Vec::with_capacity(t_grid.len());
    let mut current = state_to_vec(y0);
    let mut prev_t = 0.0;
    let mut cached: Option<(f64, Matrix4<f64>)> = None;
    for &t in t_grid {
        let dt = t - prev_t;
        if dt > 0.0 {
            let step = match cached {
                Some((cdt, m)) if cdt == dt => m,
                _ => {
                    let m = (gen.matrix * dt).exp();
                    cached = Some((dt, m));
                    m
                }
            };
            current = step * current;
        }
        states.push(vec_to_state(&current)?);
        prev_t = t;
    }
    Ok(Trajectory {
        times: t_grid.to_vec(),
        states,
        generator: *gen,
    })
}

/// Steady state from the null space of the generator.
///
/// Takes the right singular vector of the smallest singular value and
/// normalizes it so P_e + P_g = 1. Rejects generators whose null space is
/// not one-dimensional within tolerance.
pub fn steady_numeric(gen: &Generator) -> Result<RotFrameState> {
    let svd = gen.matrix.svd(false, true);
    let sv = &svd.singular_values;
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Integrity("SVD failed to produce right singular vectors".into()))?;

    let mut idx_min = 0;
    for i in 1..4 {
        if sv[i] < sv[idx_min] {
            idx_min = i;
        }
    }
    let sigma_max = (0..4).map(|i| sv[i]).fold(0.0, f64::max);
    let sigma_second = (0..4)
        .filter(|&i| i != idx_min)
        .map(|i| sv[i])
        .fold(f64::INFINITY, f64::min);
    if sigma_max <= 0.0 || sigma_max.is_nan() {
        return Err(Error::Degenerate("generator is identically zero".into()));
    }
    if sigma_second < DEGENERACY_REL * sigma_max {
        return Err(Error::Degenerate(format!(
            "second-smallest singular value {sigma_second:e} below {DEGENERACY_REL:e} × {sigma_max:e}"
        )));
    }

    let null = v_t.row(idx_min).transpose();
    let trace = null[0] + null[3];
    if trace.abs() < 1e-6 {
        return Err(Error::Degenerate(
            "null vector has (numerically) zero population sum".into(),
        ));
    }
    vec_to_state(&(null / trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::BathLabel;
    use crate::steady::{steady_analytic, steady_analytic_dephasing};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    const W0: f64 = std::f64::consts::TAU * 1e10;

    fn fig2_gen(g: f64, delta: f64, gamma_phi: f64) -> Generator {
        let hot = BathSpec::new(2.7e9, 0.34, BathLabel::Hot).unwrap();
        let cold = BathSpec::new(2.7e9, 0.10, BathLabel::Cold).unwrap();
        let drive = DriveSpec::new(W0, g, delta).unwrap();
        build_generator(hot, cold, drive, gamma_phi).unwrap()
    }

    #[test]
    fn zero_temperature_undriven_entries() {
        let hot = BathSpec::new(1.0, 0.0, BathLabel::Hot).unwrap();
        let cold = BathSpec::new(1.0, 0.0, BathLabel::Cold).unwrap();
        let drive = DriveSpec::new(W0, 0.0, 0.0).unwrap();
        let gen = build_generator(hot, cold, drive, 0.0).unwrap();
        let m = gen.matrix();
        assert_eq!(m.row(0), nalgebra::RowVector4::new(-2.0, 0.0, 0.0, 0.0));
        assert_eq!(m.row(3), nalgebra::RowVector4::new(2.0, 0.0, 0.0, 0.0));
        assert_eq!(m[(1, 1)], -1.0);
        assert_eq!(m[(2, 2)], -1.0);
    }

    #[test]
    fn population_rows_cancel_exactly() {
        for (g, d, p) in [(0.0, 0.0, 0.0), (2.2e9, 6.3e8, 0.0), (7e9, -3e9, 4e9)] {
            let gen = fig2_gen(g, d, p);
            let m = gen.matrix();
            for j in 0..4 {
                assert_eq!(m[(0, j)] + m[(3, j)], 0.0);
            }
        }
    }

    #[test]
    fn generator_is_singular() {
        let gen = fig2_gen(2.2e9, 6.3e8, 0.0);
        let svd = gen.matrix().svd(false, false);
        let min = (0..4)
            .map(|i| svd.singular_values[i])
            .fold(f64::INFINITY, f64::min);
        let max = (0..4).map(|i| svd.singular_values[i]).fold(0.0, f64::max);
        assert!(min <= 1e-8 * max, "smallest σ {min:e} vs largest {max:e}");
    }

    #[test]
    fn dephasing_touches_only_coherence_diagonal() {
        let base = fig2_gen(2.2e9, 6.3e8, 0.0);
        let phi = 1.3e9;
        let deph = fig2_gen(2.2e9, 6.3e8, phi);
        let diff = deph.matrix() - base.matrix();
        let expect = Matrix4::from_diagonal(&Vector4::new(0.0, -phi, -phi, 0.0));
        assert_eq!(diff, expect);
    }

    #[test]
    fn gamma_tot_fig2() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        assert_relative_eq!(gen.gamma_tot(), 7.776e9, max_relative = 1e-12);
    }

    #[test]
    fn rejects_negative_dephasing() {
        let hot = BathSpec::new(2.7e9, 0.34, BathLabel::Hot).unwrap();
        let cold = BathSpec::new(2.7e9, 0.10, BathLabel::Cold).unwrap();
        let drive = DriveSpec::new(W0, 0.0, 0.0).unwrap();
        assert!(build_generator(hot, cold, drive, -1.0).is_err());
    }

    #[test]
    fn propagate_zero_time_is_identity() {
        let gen = fig2_gen(2.2e9, 6.3e8, 0.0);
        let y0 = RotFrameState::new(0.3, 0.1, -0.2, 0.7).unwrap();
        let y1 = propagate(&gen, &y0, 0.0).unwrap();
        assert_eq!(y0, y1);
    }

    #[test]
    fn propagate_rejects_negative_time() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        assert!(propagate(&gen, &RotFrameState::ground(), -1e-9).is_err());
    }

    #[test]
    fn undriven_relaxation_reaches_detailed_balance() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        let t = 50.0 / gen.gamma_tot();
        let y = propagate(&gen, &RotFrameState::ground(), t).unwrap();
        let up = 2.7e9 * 0.34 + 2.7e9 * 0.10;
        assert_relative_eq!(y.p_e, up / gen.gamma_tot(), max_relative = 1e-9);
        assert_eq!(y.x_tilde, 0.0);
    }

    #[test]
    fn semigroup_property() {
        let gen = fig2_gen(2.2e9, 6.3e8, 0.5e9);
        let y0 = RotFrameState::excited();
        for (t1, t2) in [(1e-10, 2e-10), (3e-9, 1e-9), (1e-8, 1e-8)] {
            let direct = propagate(&gen, &y0, t1 + t2).unwrap();
            let stepped = propagate(&gen, &propagate(&gen, &y0, t1).unwrap(), t2).unwrap();
            assert_abs_diff_eq!(direct.p_e, stepped.p_e, epsilon = 1e-10);
            assert_abs_diff_eq!(direct.x_tilde, stepped.x_tilde, epsilon = 1e-10);
            assert_abs_diff_eq!(direct.y_tilde, stepped.y_tilde, epsilon = 1e-10);
            assert_abs_diff_eq!(direct.p_g, stepped.p_g, epsilon = 1e-10);
        }
    }

    #[test]
    fn long_time_propagation_matches_analytic_steady_state() {
        let gen = fig2_gen(2.2738607532889647e9, std::f64::consts::TAU * 1e8, 0.0);
        let t = 50.0 / gen.slowest_rate();
        let y = propagate(&gen, &RotFrameState::ground(), t).unwrap();
        let s = steady_analytic(gen.hot(), gen.cold(), gen.drive()).unwrap();
        assert_abs_diff_eq!(y.x_tilde, s.x_tilde_inf, epsilon = 1e-6);
        assert_abs_diff_eq!(y.y_tilde, s.y_tilde_inf, epsilon = 1e-6);
        assert_abs_diff_eq!(y.z(), s.z_tilde_inf, epsilon = 1e-6);
    }

    #[test]
    fn strongly_driven_relaxation_settles_within_fifty_lifetimes() {
        // drive fixed at the cancellation strength for a 20γ detuning,
        // propagated for 50 bare-bath lifetimes
        let g = 3.1257620638813828e10;
        let gen = fig2_gen(g, 20.0 * 2.7e9, 0.0);
        let y = propagate(&gen, &RotFrameState::ground(), 50.0 / 2.7e9).unwrap();
        let s = steady_analytic(gen.hot(), gen.cold(), gen.drive()).unwrap();
        assert_abs_diff_eq!(y.x_tilde, s.x_tilde_inf, epsilon = 1e-6);
        assert_abs_diff_eq!(y.y_tilde, s.y_tilde_inf, epsilon = 1e-6);
        assert_abs_diff_eq!(y.z(), s.z_tilde_inf, epsilon = 1e-6);
    }

    #[test]
    fn trajectory_single_point_grid() {
        let gen = fig2_gen(1e9, 0.0, 0.0);
        let y0 = RotFrameState::excited();
        let traj = evolve_trajectory(&gen, &y0, &[0.0]).unwrap();
        assert_eq!(traj.states.len(), 1);
        assert_eq!(traj.states[0], y0);
    }

    #[test]
    fn trajectory_matches_direct_propagation() {
        let gen = fig2_gen(2.2e9, 6.3e8, 0.0);
        let y0 = RotFrameState::excited();
        let grid: Vec<f64> = (0..200).map(|i| i as f64 * 2e-11).skip(1).collect();
        let traj = evolve_trajectory(&gen, &y0, &grid).unwrap();
        let t_end = *grid.last().unwrap();
        let direct = propagate(&gen, &y0, t_end).unwrap();
        let last = traj.states.last().unwrap();
        assert_abs_diff_eq!(last.p_e, direct.p_e, epsilon = 1e-10);
        assert_abs_diff_eq!(last.x_tilde, direct.x_tilde, epsilon = 1e-10);
        assert_abs_diff_eq!(last.y_tilde, direct.y_tilde, epsilon = 1e-10);
    }

    #[test]
    fn trajectory_trace_preserved() {
        let gen = fig2_gen(8e9, -2e9, 1e9);
        let grid: Vec<f64> = (1..100).map(|i| i as f64 * 1e-10).collect();
        let traj = evolve_trajectory(&gen, &RotFrameState::excited(), &grid).unwrap();
        for y in &traj.states {
            assert_abs_diff_eq!(y.p_e + y.p_g, 1.0, epsilon = 1e-12);
            assert!(y.bloch_norm() <= 1.0 + crate::model::POSITIVITY_EPS);
        }
    }

    #[test]
    fn trajectory_undriven_population_monotone() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        let grid: Vec<f64> = (1..80).map(|i| i as f64 * 5e-11).collect();
        let traj = evolve_trajectory(&gen, &RotFrameState::excited(), &grid).unwrap();
        let mut prev = 1.0;
        for y in &traj.states {
            assert!(
                y.p_e <= prev + 1e-15,
                "undriven relaxation must be monotone"
            );
            prev = y.p_e;
        }
    }

    #[test]
    fn trajectory_rejects_bad_grids() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        let y0 = RotFrameState::ground();
        assert!(evolve_trajectory(&gen, &y0, &[]).is_err());
        assert!(evolve_trajectory(&gen, &y0, &[-1e-9, 0.0]).is_err());
        assert!(evolve_trajectory(&gen, &y0, &[0.0, 0.0]).is_err());
        assert!(evolve_trajectory(&gen, &y0, &[1e-9, 0.5e-9]).is_err());
    }

    #[test]
    fn steady_numeric_undriven() {
        let gen = fig2_gen(0.0, 0.0, 0.0);
        let y = steady_numeric(&gen).unwrap();
        assert_abs_diff_eq!(y.x_tilde, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(y.y_tilde, 0.0, epsilon = 1e-14);
        let expect = -(2.7e9 + 2.7e9) / 7.776e9;
        assert_relative_eq!(y.z(), expect, max_relative = 1e-12);
    }

    #[test]
    fn steady_numeric_matches_closed_form() {
        let gen = fig2_gen(2.2738607532889647e9, std::f64::consts::TAU * 1e8, 0.0);
        let y = steady_numeric(&gen).unwrap();
        let s = steady_analytic(gen.hot(), gen.cold(), gen.drive()).unwrap();
        assert_relative_eq!(y.x_tilde, s.x_tilde_inf, max_relative = 1e-10);
        assert_relative_eq!(y.y_tilde, s.y_tilde_inf, max_relative = 1e-10);
        assert_relative_eq!(y.z(), s.z_tilde_inf, max_relative = 1e-10);
    }

    #[test]
    fn steady_numeric_matches_closed_form_with_dephasing() {
        let gen = fig2_gen(2.2e9, 6.3e8, 7.776e9);
        let y = steady_numeric(&gen).unwrap();
        let s = steady_analytic_dephasing(gen.hot(), gen.cold(), gen.drive(), 7.776e9).unwrap();
        assert_relative_eq!(y.x_tilde, s.x_tilde_inf, max_relative = 1e-10);
        assert_relative_eq!(y.y_tilde, s.y_tilde_inf, max_relative = 1e-10);
        assert_relative_eq!(y.z(), s.z_tilde_inf, max_relative = 1e-10);
    }

    #[test]
    fn steady_numeric_residual_is_small() {
        let gen = fig2_gen(5e9, -1.2e9, 3e8);
        let y = steady_numeric(&gen).unwrap();
        let v = Vector4::new(y.p_e, y.x_tilde, y.y_tilde, y.p_g);
        let residual = (gen.matrix() * v).norm();
        let scale = gen.matrix().norm();
        assert!(
            residual <= 1e-10 * scale,
            "residual {residual:e} vs scale {scale:e}"
        );
    }
}

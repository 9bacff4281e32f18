//! Drive design for the heat switch: the coupling strength g*(δ) at which
//! the steady-state population matches hot-bath equilibrium (cancelling the
//! classical heat flow), its dephasing extension, an independent numeric
//! root-finder, and the distinguished resonant operating point.

use crate::error::{Error, Result};
use crate::liouvillian::{build_generator, steady_numeric};
use crate::model::{gamma_tot, BathSpec, DriveSpec, HBAR};
use crate::steady::steady_analytic_dephasing;
use crate::thermo::{drive_power, heat_components_hot};

/// Relative convergence target of the numeric root-finder.
const ROOT_REL_TOL: f64 = 1e-12;
const MAX_BRACKET_DOUBLINGS: u32 = 60;

fn require_occupation_bias(hot: &BathSpec, cold: &BathSpec) -> Result<()> {
    if hot.n_bar < cold.n_bar {
        return Err(Error::Domain(format!(
            "classical heat cannot be suppressed without a colder bath \
             (n̄_h = {} < n̄_c = {})",
            hot.n_bar, cold.n_bar
        )));
    }
    Ok(())
}

fn check_gamma_phi(gamma_phi: f64) -> Result<()> {
    if gamma_phi < 0.0 || !gamma_phi.is_finite() {
        return Err(Error::Domain(format!(
            "dephasing rate must be non-negative and finite, got {gamma_phi:e}"
        )));
    }
    Ok(())
}

/// Drive strength cancelling the classical hot-bath heat at detuning δ:
/// `g*(δ) = [(γ_c/γ_tot)(γ_tot² + 4δ²)(n̄_h − n̄_c)]^½`.
pub fn g_star(hot: &BathSpec, cold: &BathSpec, delta: f64) -> Result<f64> {
    g_star_dephasing(hot, cold, delta, 0.0)
}

/// [`g_star`] with pure dephasing: γ_tot broadens to γ_tot + 2γ_φ inside
/// the bracket, keeping the leading γ_c/(γ_tot + 2γ_φ) weight.
pub fn g_star_dephasing(
    hot: &BathSpec,
    cold: &BathSpec,
    delta: f64,
    gamma_phi: f64,
) -> Result<f64> {
    require_occupation_bias(hot, cold)?;
    check_gamma_phi(gamma_phi)?;
    let big = gamma_tot(hot, cold) + 2.0 * gamma_phi;
    Ok((cold.gamma / big * (big * big + 4.0 * delta * delta) * (hot.n_bar - cold.n_bar)).sqrt())
}

/// Independent check of the closed form: solve z̃∞(g) = −1/(2n̄_h + 1) on
/// the *numeric* steady state by bracketed bisection.
///
/// z̃∞ rises monotonically toward 0 with g, so the bracket starts below the
/// root at g = 0 and the upper end doubles from γ_tot until the sign
/// changes.
pub fn g_star_numeric(hot: &BathSpec, cold: &BathSpec, delta: f64, gamma_phi: f64) -> Result<f64> {
    require_occupation_bias(hot, cold)?;
    check_gamma_phi(gamma_phi)?;
    let target = hot.equilibrium_z();
    let omega0_dummy = 1.0; // z̃∞ does not depend on ω₀
    let f = |g: f64| -> Result<f64> {
        let drive = DriveSpec::new(omega0_dummy, g, delta)?;
        let y = steady_numeric(&build_generator(*hot, *cold, drive, gamma_phi)?)?;
        Ok(y.z() - target)
    };

    let f0 = f(0.0)?;
    if f0 == 0.0 || hot.n_bar == cold.n_bar {
        return Ok(0.0);
    }
    if f0 > 0.0 {
        return Err(Error::Domain(format!(
            "population already above hot-bath equilibrium at g = 0 (f(0) = {f0:e}); \
             no cancelling drive exists"
        )));
    }

    let mut hi = gamma_tot(hot, cold);
    let mut f_hi = f(hi)?;
    let mut doublings = 0;
    while f_hi < 0.0 {
        doublings += 1;
        if doublings > MAX_BRACKET_DOUBLINGS {
            return Err(Error::Domain(format!(
                "no sign change after {MAX_BRACKET_DOUBLINGS} bracket doublings \
                 (n̄_h < n̄_c or pathological inputs)"
            )));
        }
        hi *= 2.0;
        f_hi = f(hi)?;
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }

    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= ROOT_REL_TOL * hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Steady-state heat from the hot bath along the cancellation line
/// (g*(δ), δ): `J_q∞ = ħδ(γ_h γ_c / γ_tot)(n̄_h − n̄_c)`, linear in δ.
pub fn quantum_heat_on_line(hot: &BathSpec, cold: &BathSpec, delta: f64) -> Result<f64> {
    quantum_heat_on_line_dephasing(hot, cold, delta, 0.0)
}

/// [`quantum_heat_on_line`] with pure dephasing: γ_tot → γ_tot + 2γ_φ.
pub fn quantum_heat_on_line_dephasing(
    hot: &BathSpec,
    cold: &BathSpec,
    delta: f64,
    gamma_phi: f64,
) -> Result<f64> {
    require_occupation_bias(hot, cold)?;
    check_gamma_phi(gamma_phi)?;
    let big = gamma_tot(hot, cold) + 2.0 * gamma_phi;
    Ok(HBAR * delta * (hot.gamma * cold.gamma / big) * (hot.n_bar - cold.n_bar))
}

/// One operating point on the cancellation line, with the steady-state
/// quantities measured there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchPoint {
    /// Detuning of the point, rad/s.
    pub delta: f64,
    /// Cancelling drive strength g*(δ), rad/s.
    pub g_star: f64,
    /// Steady hot-bath heat at the point (purely the coherence part), W.
    pub j_q_inf: f64,
    /// Steady out-of-phase coherence ỹ∞.
    pub y_tilde_inf: f64,
    /// Steady drive power, W.
    pub p_inf: f64,
    /// Residual classical heat at the point, W (zero up to rounding).
    pub residual_j_cl: f64,
}

/// Evaluate the cancellation point at the given detuning and dephasing.
pub fn switch_point_report(
    hot: &BathSpec,
    cold: &BathSpec,
    omega0: f64,
    delta: f64,
    gamma_phi: f64,
) -> Result<SwitchPoint> {
    let g = g_star_dephasing(hot, cold, delta, gamma_phi)?;
    let drive = DriveSpec::new(omega0, g, delta)?;
    let steady = steady_analytic_dephasing(hot, cold, &drive, gamma_phi)?;
    let state = steady.as_state();
    let (j_cl, j_q) = heat_components_hot(&state, hot, &drive);
    Ok(SwitchPoint {
        delta,
        g_star: g,
        j_q_inf: j_q,
        y_tilde_inf: steady.y_tilde_inf,
        p_inf: drive_power(&state, &drive),
        residual_j_cl: j_cl,
    })
}

/// The resonant cancellation point (g*(0), δ = 0), where both heat
/// components from the hot bath vanish while the drive keeps feeding power
/// into the cold bath. Needs a strict occupation bias.
pub fn special_point_report(hot: &BathSpec, cold: &BathSpec, omega0: f64) -> Result<SwitchPoint> {
    if hot.n_bar <= cold.n_bar {
        return Err(Error::Domain(format!(
            "the resonant cancellation point needs a strict occupation bias \
             (n̄_h = {} ≤ n̄_c = {})",
            hot.n_bar, cold.n_bar
        )));
    }
    switch_point_report(hot, cold, omega0, 0.0, 0.0)
}

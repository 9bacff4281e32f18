//! Shared random parameter draws for the cross-module test suites.
#![allow(dead_code)]

use qheat_core::{BathLabel, BathSpec, DriveSpec};
use rand::Rng;

pub const W0: f64 = std::f64::consts::TAU * 1e10;

/// One random model configuration: baths, drive, dephasing rate.
#[derive(Debug, Clone, Copy)]
pub struct Draw {
    pub hot: BathSpec,
    pub cold: BathSpec,
    pub drive: DriveSpec,
    pub gamma_phi: f64,
}

/// Draw rates log-uniform in [1e8, 1e10] 1/s, occupations uniform in
/// [0, 1], drive and detuning on the γ_tot scale, with the hot bath at
/// least as occupied as the cold one when `biased` is set.
pub fn draw<R: Rng>(rng: &mut R, biased: bool, with_dephasing: bool) -> Draw {
    let gamma_h = 10f64.powf(rng.random_range(8.0..10.0));
    let gamma_c = 10f64.powf(rng.random_range(8.0..10.0));
    let mut n_h: f64 = rng.random_range(0.0..1.0);
    let mut n_c: f64 = rng.random_range(0.0..1.0);
    if biased && n_h < n_c {
        std::mem::swap(&mut n_h, &mut n_c);
    }
    let hot = BathSpec::new(gamma_h, n_h, BathLabel::Hot).unwrap();
    let cold = BathSpec::new(gamma_c, n_c, BathLabel::Cold).unwrap();
    let gt = qheat_core::gamma_tot(&hot, &cold);
    let g = rng.random_range(0.0..5.0 * gt);
    let delta = rng.random_range(-5.0 * gt..5.0 * gt);
    let gamma_phi = if with_dephasing {
        rng.random_range(0.0..2.0 * gt)
    } else {
        0.0
    };
    Draw {
        hot,
        cold,
        drive: DriveSpec::new(W0, g, delta).unwrap(),
        gamma_phi,
    }
}

/// Relative difference scaled by the larger magnitude.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

//! Closed-form harmonic-oscillator states: eigenfunctions, their Wigner
//! functions, the Gaussian-smoothed Wigner functions, and the exact
//! information ladder. These serve as the independent oracle for the
//! entropy and smoothing machinery.
//!
//! With `H(x,p) = p²/2m + mω²x²/2`:
//!
//! ```text
//! ψ_n(x)  = (2ⁿ n!)^{-1/2} (mω/πħ)^{1/4} e^{-mωx²/2ħ} H_n(x √(mω/ħ))
//! W_n     = ((-1)ⁿ/πħ) e^{-2H/ħω} L_n(4H/ħω)
//! W̄_n     = (2πħ n!)⁻¹ (H/ħω)ⁿ e^{-H/ħω}        (kernel width σ² = ħ/2mω)
//! Ī_n     = 2πħ ∫ W̄_n² = (2n)! / (2^{2n+1} (n!)²)
//! ```
//!
//! `H_n` are the physicists' Hermite polynomials and `L_n` the Laguerre
//! polynomials; both are evaluated by their three-term recurrences, never by
//! factorial ratios, so everything stays stable through n = 20 and beyond.

use num_complex::Complex64;

use crate::error::{Result, WignerError};
use crate::grid::{Field2D, PhaseGrid};
use crate::transform::Wavefunction;

/// Maximum quantum number for on-grid state construction.
pub const MAX_GRID_N: u32 = 20;

/// Mass, angular frequency, and ħ of the oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        for (name, value) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(WignerError::NonPositive { name, value });
            }
        }
        Ok(Self { mass, omega, hbar })
    }

    /// Ground-state width `σ = √(ħ/2mω)`.
    pub fn sigma(&self) -> f64 {
        (self.hbar / (2.0 * self.mass * self.omega)).sqrt()
    }

    /// `H(x, p)` sampled on a grid.
    pub fn hamiltonian_field(&self, grid: &PhaseGrid) -> Field2D {
        let m = self.mass;
        let w = self.omega;
        Field2D::from_fn(grid, |x, p| p * p / (2.0 * m) + 0.5 * m * w * w * x * x)
    }

    fn check_grid(&self, grid: &PhaseGrid) -> Result<()> {
        if self.hbar != grid.spec().hbar {
            return Err(WignerError::HbarMismatch { params: self.hbar, grid: grid.spec().hbar });
        }
        Ok(())
    }
}

/// Normalized Hermite functions `φ_n(ξ) = (2ⁿ n! √π)^{-1/2} e^{-ξ²/2} H_n(ξ)`
/// for n = 0..=n_max, by the stable recurrence
/// `φ_{n+1} = ξ √(2/(n+1)) φ_n − √(n/(n+1)) φ_{n-1}`.
fn hermite_functions(xi: f64, n_max: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let phi0 = std::f64::consts::PI.powf(-0.25) * (-xi * xi / 2.0).exp();
    out.push(phi0);
    if n_max == 0 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * xi * phi0);
    for n in 1..n_max as usize {
        let next = xi * (2.0 / (n as f64 + 1.0)).sqrt() * out[n]
            - (n as f64 / (n as f64 + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    out
}

/// Laguerre polynomial `L_n(ξ)` by the three-term recurrence.
fn laguerre(xi: f64, n: u32) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 - xi;
    for k in 1..n as usize {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - xi) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// The n-th oscillator eigenfunction sampled on the grid. Errors if the
/// grid cannot hold the state (boundary leakage at or above 1e-10).
pub fn ho_eigenstate(n: u32, params: &OscillatorParams, grid: &PhaseGrid) -> Result<Wavefunction> {
    if n > MAX_GRID_N {
        return Err(WignerError::QuantumNumberTooLarge { n, max: MAX_GRID_N });
    }
    params.check_grid(grid)?;
    let scale = (params.mass * params.omega / params.hbar).sqrt();
    let amp = scale.sqrt();
    let values = grid
        .x_values()
        .iter()
        .map(|&x| {
            let phi = hermite_functions(x * scale, n);
            Complex64::new(amp * phi[n as usize], 0.0)
        })
        .collect();
    let psi = Wavefunction::normalized(grid, values)?;
    let leakage = psi.boundary_leakage();
    if leakage >= 1e-10 {
        return Err(WignerError::UnderResolved { leakage });
    }
    Ok(psi)
}

/// Closed-form Wigner function of the n-th eigenstate.
pub fn ho_wigner_closed(n: u32, params: &OscillatorParams, grid: &PhaseGrid) -> Result<Field2D> {
    if n > MAX_GRID_N {
        return Err(WignerError::QuantumNumberTooLarge { n, max: MAX_GRID_N });
    }
    params.check_grid(grid)?;
    let hbar = params.hbar;
    let homega = hbar * params.omega;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let m = params.mass;
    let w = params.omega;
    Ok(Field2D::from_fn(grid, |x, p| {
        let h = p * p / (2.0 * m) + 0.5 * m * w * w * x * x;
        sign / (std::f64::consts::PI * hbar)
            * (-2.0 * h / homega).exp()
            * laguerre(4.0 * h / homega, n)
    }))
}

/// Closed-form Wigner function of the n-th eigenstate smoothed with the
/// matched Gaussian kernel (σ² = ħ/2mω): `(2πħ n!)⁻¹ (H/ħω)ⁿ e^{-H/ħω}`.
/// Non-negative by construction.
pub fn ho_smoothed_closed(n: u32, params: &OscillatorParams, grid: &PhaseGrid) -> Result<Field2D> {
    if n > MAX_GRID_N {
        return Err(WignerError::QuantumNumberTooLarge { n, max: MAX_GRID_N });
    }
    params.check_grid(grid)?;
    let homega = params.hbar * params.omega;
    let planck = grid.spec().planck();
    let ln_nfact: f64 = (1..=n as u64).map(|k| (k as f64).ln()).sum();
    let m = params.mass;
    let w = params.omega;
    Ok(Field2D::from_fn(grid, |x, p| {
        let h = (p * p / (2.0 * m) + 0.5 * m * w * w * x * x) / homega;
        if n == 0 {
            (-h).exp() / planck
        } else if h == 0.0 {
            0.0
        } else {
            (n as f64 * h.ln() - h - ln_nfact).exp() / planck
        }
    }))
}

/// Exact information of the smoothed n-th state,
/// `Ī_n = (2n)!/(2^{2n+1}(n!)²) = (1/2) Π_{k=1..n} (2k-1)/(2k)`.
///
/// The product form never overflows, so any n is fine; Ī_0 is exactly 1/2.
pub fn ho_info_ladder(n: u32) -> f64 {
    let mut value = 0.5;
    for k in 1..=n as u64 {
        value *= (2 * k - 1) as f64 / (2 * k) as f64;
    }
    value
}

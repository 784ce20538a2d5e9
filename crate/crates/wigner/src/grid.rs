//! Phase-space discretization, quadrature, Fourier transforms, and
//! convolution.
//!
//! A grid couples a position axis `x_j = (j - nx/2) dx` to a momentum axis
//! `p_k = (k - npts/2) dp` through the offset spacing `dλ = 2 dx` used by the
//! Wigner transform: `dp = 2π ħ / (npts dλ)`, so that `ψ(x ± λ/2)` always
//! lands on grid points and the λ ↔ p direction is an exact DFT pair. Sizes
//! are restricted to powers of two.
//!
//! Fields are periodic on the computational box. Every quadrature is the
//! rectangle rule, which is exact for the trigonometric content the FFT
//! resolves; users are expected to pick `x_half` large enough that their
//! states decay below ~1e-12 at the box edge (see
//! [`Field2D::boundary_leakage`]).

use std::f64::consts::TAU;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Result, WignerError};
use crate::fft::{transform_cols, transform_rows, CenteredFft};

/// Defining parameters of a phase-space grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Number of position samples; power of two.
    pub nx: usize,
    /// Number of momentum samples; power of two.
    pub npts: usize,
    /// Half-width of the position box, `x ∈ [-x_half, x_half)`.
    pub x_half: f64,
    /// Reduced Planck constant.
    pub hbar: f64,
    /// Particle mass.
    pub mass: f64,
}

impl GridSpec {
    pub fn new(nx: usize, npts: usize, x_half: f64, hbar: f64, mass: f64) -> Result<Self> {
        let spec = Self { nx, npts, x_half, hbar, mass };
        spec.validate()?;
        Ok(spec)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !self.nx.is_power_of_two() {
            return Err(WignerError::NotPowerOfTwo { name: "nx", value: self.nx });
        }
        if !self.npts.is_power_of_two() {
            return Err(WignerError::NotPowerOfTwo { name: "npts", value: self.npts });
        }
        for (name, value) in [("x_half", self.x_half), ("hbar", self.hbar), ("mass", self.mass)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(WignerError::NonPositive { name, value });
            }
        }
        Ok(())
    }

    /// Position spacing `2 x_half / nx`.
    pub fn dx(&self) -> f64 {
        2.0 * self.x_half / self.nx as f64
    }

    /// Offset spacing of the Wigner transform, `2 dx`.
    pub fn dlambda(&self) -> f64 {
        2.0 * self.dx()
    }

    /// Momentum spacing `2π ħ / (npts dλ)`.
    pub fn dp(&self) -> f64 {
        TAU * self.hbar / (self.npts as f64 * self.dlambda())
    }

    /// Planck's constant `h = 2π ħ`.
    pub fn planck(&self) -> f64 {
        TAU * self.hbar
    }
}

/// A realized grid: the spec plus its induced axes.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    spec: GridSpec,
    x_values: Vec<f64>,
    p_values: Vec<f64>,
    cell_area: f64,
}

impl PhaseGrid {
    pub fn new(spec: GridSpec) -> Result<Self> {
        spec.validate()?;
        let dx = spec.dx();
        let dp = spec.dp();
        let x_values = (0..spec.nx).map(|j| (j as f64 - spec.nx as f64 / 2.0) * dx).collect();
        let p_values = (0..spec.npts).map(|k| (k as f64 - spec.npts as f64 / 2.0) * dp).collect();
        Ok(Self { spec, x_values, p_values, cell_area: dx * dp })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn x_values(&self) -> &[f64] {
        &self.x_values
    }

    pub fn p_values(&self) -> &[f64] {
        &self.p_values
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_values[j]
    }

    pub fn p(&self, k: usize) -> f64 {
        self.p_values[k]
    }

    pub fn cell_area(&self) -> f64 {
        self.cell_area
    }

    /// Total area of the computational box.
    pub fn box_area(&self) -> f64 {
        self.cell_area * (self.spec.nx * self.spec.npts) as f64
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.spec.nx, self.spec.npts)
    }
}

/// Build a grid from its spec.
pub fn make_grid(spec: GridSpec) -> Result<PhaseGrid> {
    PhaseGrid::new(spec)
}

/// A real-valued field `W(x_j, p_k)` sampled on a phase grid. Wigner
/// functions, observables, and probability densities all use this carrier;
/// entries may be negative.
#[derive(Debug, Clone)]
pub struct Field2D {
    values: Array2<f64>,
    grid: PhaseGrid,
}

impl Field2D {
    pub fn zeros(grid: &PhaseGrid) -> Self {
        Self { values: Array2::zeros(grid.shape()), grid: grid.clone() }
    }

    /// Sample `f(x, p)` on the grid.
    pub fn from_fn(grid: &PhaseGrid, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        let mut values = Array2::zeros(grid.shape());
        for (j, &x) in grid.x_values().iter().enumerate() {
            for (k, &p) in grid.p_values().iter().enumerate() {
                values[(j, k)] = f(x, p);
            }
        }
        Self { values, grid: grid.clone() }
    }

    pub fn from_array(grid: &PhaseGrid, values: Array2<f64>) -> Result<Self> {
        if values.dim() != grid.shape() {
            return Err(WignerError::ShapeMismatch { expected: grid.shape(), got: values.dim() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(WignerError::NonFinite);
        }
        Ok(Self { values, grid: grid.clone() })
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut Array2<f64> {
        &mut self.values
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    /// Rectangle-rule quadrature `ΣΣ W dx dp`.
    pub fn integrate(&self) -> f64 {
        self.values.sum() * self.grid.cell_area
    }

    /// `ΣΣ W² dx dp`.
    pub fn square_integral(&self) -> f64 {
        self.values.mapv(|v| v * v).sum() * self.grid.cell_area
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Largest |W| on the outermost two cells of either axis. States must
    /// keep this below ~1e-12 for the periodic box to be a faithful model
    /// of the open plane.
    pub fn boundary_leakage(&self) -> f64 {
        let (nx, npts) = self.values.dim();
        let mut max = 0.0f64;
        for ((j, k), v) in self.values.indexed_iter() {
            if j < 2 || j >= nx - 2 || k < 2 || k >= npts - 2 {
                max = max.max(v.abs());
            }
        }
        max
    }

    /// `Σ c_i F_i` over fields sharing one grid.
    pub fn linear_combination(terms: &[(f64, &Field2D)]) -> Result<Field2D> {
        let (_, first) = terms.first().ok_or(WignerError::GridMismatch)?;
        let mut out = Field2D::zeros(first.grid());
        for &(coeff, field) in terms {
            if field.grid().spec() != out.grid().spec() {
                return Err(WignerError::GridMismatch);
            }
            out.values.scaled_add(coeff, &field.values);
        }
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &Field2D) -> Result<f64> {
        if self.grid.spec() != other.grid.spec() {
            return Err(WignerError::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs())))
    }
}

/// The double Fourier transform `W(k, λ) = ∫∫ W(x,p) e^{-ikx-iλp} dx dp` of
/// a field, sampled on the conjugate grid. `k` is conjugate to `x` and `λ`
/// to `p`; the zero-frequency entry equals `integrate`.
#[derive(Debug, Clone)]
pub struct SpectralField {
    values: Array2<Complex64>,
    grid: PhaseGrid,
}

impl SpectralField {
    pub fn values(&self) -> &Array2<Complex64> {
        &self.values
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    /// Spacing of the k axis, `2π / (nx dx)`.
    pub fn dk(&self) -> f64 {
        TAU / (self.grid.spec().nx as f64 * self.grid.spec().dx())
    }

    /// Spacing of the λ axis, `2π / (npts dp) = dλ_grid / ħ`.
    pub fn dlambda(&self) -> f64 {
        TAU / (self.grid.spec().npts as f64 * self.grid.spec().dp())
    }

    pub fn k_values(&self) -> Vec<f64> {
        let dk = self.dk();
        let nx = self.grid.spec().nx;
        (0..nx).map(|a| (a as f64 - nx as f64 / 2.0) * dk).collect()
    }

    pub fn lambda_values(&self) -> Vec<f64> {
        let dl = self.dlambda();
        let npts = self.grid.spec().npts;
        (0..npts).map(|b| (b as f64 - npts as f64 / 2.0) * dl).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |acc, v| acc.max(v.norm()))
    }

    /// `(1/4π²) ΣΣ |W(k,λ)|² dk dλ`; equals `∫ W² dx dp` by Parseval.
    pub fn parseval_square_integral(&self) -> f64 {
        let scale = self.dk() * self.dlambda() / (TAU * TAU);
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * scale
    }

    /// Invert the transform back to a real field. The imaginary residue is
    /// discarded; for transforms of real fields it sits at rounding level.
    pub fn inverse_fourier2(&self) -> Field2D {
        let mut work = self.values.clone();
        let spec = self.grid.spec();
        let mut fft_x = CenteredFft::new(spec.nx);
        let mut fft_p = CenteredFft::new(spec.npts);
        transform_cols(&mut fft_x, &mut work, false);
        transform_rows(&mut fft_p, &mut work, false);
        let scale = 1.0 / ((spec.nx * spec.npts) as f64 * self.grid.cell_area());
        let values = work.mapv(|v| v.re * scale);
        Field2D { values, grid: self.grid.clone() }
    }
}

/// Forward double Fourier transform of a field.
pub fn fourier2(field: &Field2D) -> SpectralField {
    let spec = field.grid().spec();
    let mut work = field.values().mapv(|v| Complex64::new(v, 0.0));
    let mut fft_x = CenteredFft::new(spec.nx);
    let mut fft_p = CenteredFft::new(spec.npts);
    transform_cols(&mut fft_x, &mut work, true);
    transform_rows(&mut fft_p, &mut work, true);
    let cell = field.grid().cell_area();
    work.mapv_inplace(|v| v * cell);
    SpectralField { values: work, grid: field.grid().clone() }
}

/// Periodic phase-space convolution `(a ∗ b)(x,p) = ΣΣ a(x',p') b(x-x',p-p')
/// dx dp`, evaluated spectrally. Commutative; preserves the product of the
/// total integrals.
pub fn convolve(a: &Field2D, b: &Field2D) -> Result<Field2D> {
    if a.grid().spec() != b.grid().spec() {
        return Err(WignerError::GridMismatch);
    }
    let fa = fourier2(a);
    let fb = fourier2(b);
    let mut prod = fa.values;
    prod.zip_mut_with(&fb.values, |x, y| *x *= y);
    let spectral = SpectralField { values: prod, grid: a.grid().clone() };
    Ok(spectral.inverse_fourier2())
}

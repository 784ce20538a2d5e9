//! Wigner transforms of wavefunctions and density matrices, plus marginals,
//! overlaps, expectation values, and mixtures.
//!
//! For a pure state the transform is
//!
//! ```text
//! W(x, p) = (1/2πħ) ∫ ψ(x - λ/2) ψ*(x + λ/2) e^{ipλ/ħ} dλ
//! ```
//!
//! and for a mixed state the same with `ρ(x - λ/2, x + λ/2)` in place of the
//! ψψ* product. The offset grid has spacing `dλ = 2 dx`, so `x ± λ/2` always
//! falls on position samples and the λ → p direction is an exact centered
//! DFT: marginals, normalization, and the pure-state orthogonality relation
//! `∫ W_i W_j = δ_ij / 2πħ` all hold to rounding.
//!
//! Offsets reaching past the box are treated as zero (the state itself must
//! decay inside the box). Wrapping them periodically instead would alias a
//! mirror image of every coherence onto the far side of the box and double
//! `∫ W²`.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Result, WignerError};
use crate::fft::CenteredFft;
use crate::grid::{Field2D, PhaseGrid};

const NORM_TOL: f64 = 1e-10;
const HERMITICITY_TOL: f64 = 1e-12;

/// Complex amplitudes `ψ(x_j)` with unit discrete norm `Σ |ψ|² dx = 1`.
#[derive(Debug, Clone)]
pub struct Wavefunction {
    values: Array1<Complex64>,
    grid: PhaseGrid,
}

impl Wavefunction {
    /// Wrap raw samples, requiring unit norm within 1e-10. Use
    /// [`Wavefunction::normalized`] to renormalize explicitly instead.
    pub fn new(grid: &PhaseGrid, values: Array1<Complex64>) -> Result<Self> {
        if values.len() != grid.spec().nx {
            return Err(WignerError::ShapeMismatch {
                expected: (grid.spec().nx, 1),
                got: (values.len(), 1),
            });
        }
        let psi = Self { values, grid: grid.clone() };
        let norm = psi.norm_squared();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(WignerError::NotNormalized { norm });
        }
        Ok(psi)
    }

    /// Wrap raw samples and rescale them to unit norm.
    pub fn normalized(grid: &PhaseGrid, mut values: Array1<Complex64>) -> Result<Self> {
        if values.len() != grid.spec().nx {
            return Err(WignerError::ShapeMismatch {
                expected: (grid.spec().nx, 1),
                got: (values.len(), 1),
            });
        }
        let norm = values.iter().map(|v| v.norm_sqr()).sum::<f64>() * grid.spec().dx();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(WignerError::NotNormalized { norm });
        }
        let scale = 1.0 / norm.sqrt();
        values.mapv_inplace(|v| v * scale);
        Ok(Self { values, grid: grid.clone() })
    }

    /// Sample `f(x)` on the position axis and normalize.
    pub fn from_fn(grid: &PhaseGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.x_values().iter().map(|&x| f(x)).collect();
        Self::normalized(grid, values)
    }

    pub fn values(&self) -> &Array1<Complex64> {
        &self.values
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    pub fn norm_squared(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.spec().dx()
    }

    /// `⟨self|other⟩ = Σ self* · other dx`.
    pub fn inner(&self, other: &Wavefunction) -> Result<Complex64> {
        if self.grid.spec() != other.grid.spec() {
            return Err(WignerError::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * self.grid.spec().dx())
    }

    /// Spatial density `n(x_j) = |ψ(x_j)|²`.
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// Largest density |ψ|² on the outermost two cells of the position
    /// axis. Density units make this directly comparable with
    /// [`Field2D::boundary_leakage`], since Wigner values scale like |ψ|².
    pub fn boundary_leakage(&self) -> f64 {
        let n = self.values.len();
        self.values
            .iter()
            .enumerate()
            .filter(|(j, _)| *j < 2 || *j >= n - 2)
            .fold(0.0f64, |acc, (_, v)| acc.max(v.norm_sqr()))
    }
}

/// The minimum-uncertainty packet `ψ(x) = (2π)^{-1/4} σ^{-1/2} e^{-x²/4σ²}`.
pub fn gaussian_packet(grid: &PhaseGrid, sigma: f64) -> Result<Wavefunction> {
    if !(sigma > 0.0) {
        return Err(WignerError::NonPositive { name: "sigma", value: sigma });
    }
    let amp = (2.0 * std::f64::consts::PI).powf(-0.25) / sigma.sqrt();
    Wavefunction::from_fn(grid, |x| {
        Complex64::new(amp * (-x * x / (4.0 * sigma * sigma)).exp(), 0.0)
    })
}

/// A coherent state: the Gaussian packet displaced to `(x0, p0)`.
pub fn coherent_state(grid: &PhaseGrid, x0: f64, p0: f64, sigma: f64) -> Result<Wavefunction> {
    if !(sigma > 0.0) {
        return Err(WignerError::NonPositive { name: "sigma", value: sigma });
    }
    let hbar = grid.spec().hbar;
    let amp = (2.0 * std::f64::consts::PI).powf(-0.25) / sigma.sqrt();
    Wavefunction::from_fn(grid, |x| {
        let xc = x - x0;
        Complex64::from_polar(amp * (-xc * xc / (4.0 * sigma * sigma)).exp(), p0 * x / hbar)
    })
}

/// Dense matrix `ρ(x_i, x_j)` on the position grid. Hermitian; admissible
/// states additionally have unit trace and non-negative eigenvalues.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    values: Array2<Complex64>,
    grid: PhaseGrid,
}

impl DensityMatrix {
    /// Wrap a matrix, requiring Hermiticity (1e-12) and unit trace (1e-10).
    pub fn new(grid: &PhaseGrid, values: Array2<Complex64>) -> Result<Self> {
        let rho = Self::hermitian_only(grid, values)?;
        let trace = rho.trace();
        if (trace - 1.0).abs() > NORM_TOL {
            return Err(WignerError::BadTrace { trace });
        }
        Ok(rho)
    }

    /// Wrap a matrix checking Hermiticity but not the trace. Inverse
    /// transforms of fields that do not integrate to one need this.
    pub fn hermitian_only(grid: &PhaseGrid, values: Array2<Complex64>) -> Result<Self> {
        let nx = grid.spec().nx;
        if values.dim() != (nx, nx) {
            return Err(WignerError::ShapeMismatch { expected: (nx, nx), got: values.dim() });
        }
        let mut max_asym = 0.0f64;
        for i in 0..nx {
            for j in i..nx {
                max_asym = max_asym.max((values[(i, j)] - values[(j, i)].conj()).norm());
            }
        }
        if max_asym > HERMITICITY_TOL {
            return Err(WignerError::NotHermitian { max_asymmetry: max_asym });
        }
        Ok(Self { values, grid: grid.clone() })
    }

    /// `ρ = |ψ⟩⟨ψ|`, i.e. `ρ(x, y) = ψ(x) ψ*(y)`.
    pub fn pure(psi: &Wavefunction) -> Self {
        let n = psi.values().len();
        let mut values = Array2::default((n, n));
        for i in 0..n {
            for j in 0..n {
                values[(i, j)] = psi.values()[i] * psi.values()[j].conj();
            }
        }
        Self { values, grid: psi.grid().clone() }
    }

    /// Weighted combination `Σ w_i ρ_i`.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let (_, first) = parts.first().ok_or(WignerError::GridMismatch)?;
        let mut values = Array2::default(first.values.dim());
        for &(w, rho) in parts {
            if rho.grid.spec() != first.grid.spec() {
                return Err(WignerError::GridMismatch);
            }
            values.zip_mut_with(&rho.values, |acc, v| *acc += w * v);
        }
        Self::hermitian_only(&first.grid, values)
    }

    pub fn values(&self) -> &Array2<Complex64> {
        &self.values
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    /// Discrete trace `Σ ρ(x_j, x_j) dx`.
    pub fn trace(&self) -> f64 {
        self.values.diag().iter().map(|v| v.re).sum::<f64>() * self.grid.spec().dx()
    }

    /// Discrete `Tr ρ² = ΣΣ |ρ(x_i, x_j)|² dx²`.
    pub fn trace_squared(&self) -> f64 {
        let dx = self.grid.spec().dx();
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * dx * dx
    }
}

/// Evaluate `a[j - m̃] * conj(b[j + m̃])` with out-of-box offsets reading
/// zero; the common kernel of every transform in this module.
#[inline]
fn offset_product(a: &[Complex64], b: &[Complex64], j: isize, mt: isize) -> Complex64 {
    let n = a.len() as isize;
    let u = j - mt;
    let v = j + mt;
    if u < 0 || u >= n || v < 0 || v >= n {
        Complex64::new(0.0, 0.0)
    } else {
        a[u as usize] * b[v as usize].conj()
    }
}

fn wigner_from_rows(
    grid: &PhaseGrid,
    mut row_fn: impl FnMut(isize, isize) -> Complex64,
) -> Field2D {
    let (nx, npts) = grid.shape();
    let half = npts as isize / 2;
    let scale = grid.spec().dlambda() / grid.spec().planck();
    let mut fft = CenteredFft::new(npts);
    let mut buf = vec![Complex64::default(); npts];
    let mut values = Array2::zeros((nx, npts));
    let mut max_im = 0.0f64;
    for j in 0..nx {
        for (m, slot) in buf.iter_mut().enumerate() {
            *slot = row_fn(j as isize, m as isize - half);
        }
        fft.inverse(&mut buf);
        for (k, v) in buf.iter().enumerate() {
            values[(j, k)] = v.re * scale;
            max_im = max_im.max(v.im.abs() * scale);
        }
    }
    debug_assert!(max_im < 1e-12, "imaginary residue {max_im:e} in Wigner transform");
    Field2D::from_array(grid, values).expect("finite by construction")
}

/// Wigner transform of a pure state.
pub fn wigner_from_psi(psi: &Wavefunction) -> Field2D {
    let amps = psi.values().as_slice().expect("contiguous");
    wigner_from_rows(psi.grid(), |j, mt| offset_product(amps, amps, j, mt))
}

/// Wigner transform of a density matrix.
pub fn wigner_from_rho(rho: &DensityMatrix) -> Field2D {
    let nx = rho.grid().spec().nx as isize;
    let values = rho.values();
    wigner_from_rows(rho.grid(), |j, mt| {
        let r = j - mt;
        let c = j + mt;
        if r < 0 || r >= nx || c < 0 || c >= nx {
            Complex64::new(0.0, 0.0)
        } else {
            values[(r as usize, c as usize)]
        }
    })
}

/// Invert the Wigner transform back to a density matrix.
///
/// Entries `ρ(x_r, x_c)` with `r + c` even come from an exact inverse DFT of
/// the rows; entries with `r + c` odd live between grid centers and are
/// recovered by band-limited interpolation (a half-cell spectral shift in x
/// and a half-step offset in λ), which is exact for fields that decay inside
/// the box. The result is Hermitized and has `trace = integrate(w)`.
pub fn rho_from_wigner(w: &Field2D) -> DensityMatrix {
    let grid = w.grid().clone();
    let (nx, npts) = grid.shape();
    let half = npts as isize / 2;
    let dp = grid.spec().dp();
    let hbar = grid.spec().hbar;
    let dx = grid.spec().dx();

    let mut rho: Array2<Complex64> = Array2::default((nx, nx));
    let mut fft_p = CenteredFft::new(npts);
    let mut buf = vec![Complex64::default(); npts];

    // Even sublattice: centers on the grid, offsets in whole λ steps.
    for j in 0..nx {
        for (k, slot) in buf.iter_mut().enumerate() {
            *slot = Complex64::new(w.values()[(j, k)] * dp, 0.0);
        }
        fft_p.forward(&mut buf);
        for (m, v) in buf.iter().enumerate() {
            let mt = m as isize - half;
            let r = j as isize - mt;
            let c = j as isize + mt;
            if r >= 0 && r < nx as isize && c >= 0 && c < nx as isize {
                rho[(r as usize, c as usize)] = *v;
            }
        }
    }

    // Odd sublattice: shift the field half a cell in x, evaluate the λ
    // transform at half-step offsets.
    let mut shifted = w.values().mapv(|v| Complex64::new(v, 0.0));
    let mut fft_x = CenteredFft::new(nx);
    crate::fft::transform_cols(&mut fft_x, &mut shifted, true);
    let dk = std::f64::consts::TAU / (nx as f64 * dx);
    for (a, mut row) in shifted.rows_mut().into_iter().enumerate() {
        let k = (a as f64 - nx as f64 / 2.0) * dk;
        let phase = Complex64::from_polar(1.0, k * dx / 2.0);
        for v in row.iter_mut() {
            *v *= phase;
        }
    }
    crate::fft::transform_cols(&mut fft_x, &mut shifted, false);
    shifted.mapv_inplace(|v| v / nx as f64);

    for j in 0..nx {
        for (k, slot) in buf.iter_mut().enumerate() {
            let p = grid.p(k);
            *slot = shifted[(j, k)] * dp * Complex64::from_polar(1.0, -p * dx / hbar);
        }
        fft_p.forward(&mut buf);
        for (m, v) in buf.iter().enumerate() {
            let mt = m as isize - half;
            let r = j as isize - mt;
            let c = j as isize + mt + 1;
            if r >= 0 && r < nx as isize && c >= 0 && c < nx as isize {
                rho[(r as usize, c as usize)] = *v;
            }
        }
    }

    // Hermitize away the interpolation noise.
    for i in 0..nx {
        for j in i..nx {
            let avg = 0.5 * (rho[(i, j)] + rho[(j, i)].conj());
            rho[(i, j)] = avg;
            rho[(j, i)] = avg.conj();
        }
    }
    DensityMatrix { values: rho, grid }
}

/// Marginal distributions: `(Σ_p W dp, Σ_x W dx)`.
pub fn marginals(w: &Field2D) -> (Vec<f64>, Vec<f64>) {
    let dp = w.grid().spec().dp();
    let dx = w.grid().spec().dx();
    let x_marginal = w.values().rows().into_iter().map(|r| r.sum() * dp).collect();
    let p_marginal = w.values().columns().into_iter().map(|c| c.sum() * dx).collect();
    (x_marginal, p_marginal)
}

/// Phase-space average `⟨A⟩ = ∫ W A dx dp`.
pub fn expectation(w: &Field2D, a: &Field2D) -> Result<f64> {
    if w.grid().spec() != a.grid().spec() {
        return Err(WignerError::GridMismatch);
    }
    Ok(w.values()
        .iter()
        .zip(a.values().iter())
        .map(|(x, y)| x * y)
        .sum::<f64>()
        * w.grid().cell_area())
}

/// `∫ w1 w2 dx dp`; equals `δ_ij / 2πħ` for orthonormal pure states and is
/// non-negative for any pair of admissible states.
pub fn overlap(w1: &Field2D, w2: &Field2D) -> Result<f64> {
    expectation(w1, w2)
}

/// A member of a statistical mixture.
#[derive(Debug, Clone)]
pub enum MixtureMember {
    Psi(Wavefunction),
    Field(Field2D),
}

impl MixtureMember {
    fn to_field(&self) -> Field2D {
        match self {
            MixtureMember::Psi(psi) => wigner_from_psi(psi),
            MixtureMember::Field(f) => f.clone(),
        }
    }
}

/// Weighted combination `W = Σ α_i W_i` with `Σ α_i = 1`. Negative weights
/// are allowed — they build deliberately non-admissible fields — and are
/// surfaced through [`MixtureSpec::has_negative_weights`] rather than
/// rejected.
#[derive(Debug, Clone)]
pub struct MixtureSpec {
    pub weights: Vec<f64>,
    pub states: Vec<MixtureMember>,
}

impl MixtureSpec {
    pub fn has_negative_weights(&self) -> bool {
        self.weights.iter().any(|&w| w < 0.0)
    }
}

/// Realize a mixture as a Wigner field.
pub fn mix(spec: &MixtureSpec) -> Result<Field2D> {
    if spec.weights.len() != spec.states.len() {
        return Err(WignerError::MixtureLength {
            weights: spec.weights.len(),
            states: spec.states.len(),
        });
    }
    let sum: f64 = spec.weights.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(WignerError::WeightSum { sum });
    }
    let fields: Vec<Field2D> = spec.states.iter().map(|s| s.to_field()).collect();
    let terms: Vec<(f64, &Field2D)> =
        spec.weights.iter().copied().zip(fields.iter()).collect();
    Field2D::linear_combination(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{fourier2, GridSpec};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn grid_256() -> PhaseGrid {
        PhaseGrid::new(GridSpec::new(256, 256, 8.0, 1.0, 1.0).unwrap()).unwrap()
    }

    fn gaussian_wigner_closed(grid: &PhaseGrid, sigma: f64) -> Field2D {
        let hbar = grid.spec().hbar;
        Field2D::from_fn(grid, |x, p| {
            (1.0 / (PI * hbar))
                * (-x * x / (2.0 * sigma * sigma)
                    - 2.0 * p * p * sigma * sigma / (hbar * hbar))
                    .exp()
        })
    }

    #[test]
    fn gaussian_packet_transforms_to_gaussian_wigner() {
        let grid = grid_256();
        let sigma = 0.7;
        let w = wigner_from_psi(&gaussian_packet(&grid, sigma).unwrap());
        let closed = gaussian_wigner_closed(&grid, sigma);
        assert!(w.max_abs_diff(&closed).unwrap() < 1e-8);
        assert_relative_eq!(w.values()[(128, 128)], 1.0 / PI, epsilon = 1e-9);
        assert_relative_eq!(w.integrate(), 1.0, epsilon = 1e-8);
    }

    #[test]
    fn pure_state_purity_is_exact() {
        let grid = grid_256();
        let w = wigner_from_psi(&gaussian_packet(&grid, 0.9).unwrap());
        let purity = grid.spec().planck() * w.square_integral();
        assert_relative_eq!(purity, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn x_marginal_is_the_density() {
        let grid = grid_256();
        let psi = coherent_state(&grid, 1.0, 2.0 * grid.spec().dp(), 0.8).unwrap();
        let w = wigner_from_psi(&psi);
        let (xm, pm) = marginals(&w);
        let density = psi.density();
        let worst = xm
            .iter()
            .zip(density.iter())
            .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
        assert!(worst < 1e-8, "x marginal deviates by {worst:e}");
        let dx = grid.spec().dx();
        let dp = grid.spec().dp();
        assert_relative_eq!(xm.iter().sum::<f64>() * dx, 1.0, epsilon = 1e-8);
        assert_relative_eq!(pm.iter().sum::<f64>() * dp, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn overlap_of_a_state_with_itself() {
        let grid = grid_256();
        let w = wigner_from_psi(&gaussian_packet(&grid, 0.6).unwrap());
        assert_relative_eq!(
            overlap(&w, &w).unwrap(),
            1.0 / grid.spec().planck(),
            epsilon = 1e-7
        );
    }

    #[test]
    fn translation_covariance_on_grid() {
        let grid = grid_256();
        let sigma = 0.7;
        let shift_cells = 16usize; // 1.0 in x
        let base = gaussian_packet(&grid, sigma).unwrap();
        let shifted = coherent_state(&grid, 16.0 * grid.spec().dx(), 0.0, sigma).unwrap();
        let w0 = wigner_from_psi(&base);
        let w1 = wigner_from_psi(&shifted);
        let mut rolled = Field2D::zeros(&grid);
        for j in 0..256 {
            for k in 0..256 {
                rolled.values_mut()[(j, k)] = w0.values()[((j + 256 - shift_cells) % 256, k)];
            }
        }
        assert!(w1.max_abs_diff(&rolled).unwrap() < 1e-10);
    }

    #[test]
    fn boost_covariance_shifts_the_momentum_axis() {
        let grid = grid_256();
        let sigma = 0.7;
        let cells = 6usize;
        let p0 = cells as f64 * grid.spec().dp();
        let w0 = wigner_from_psi(&gaussian_packet(&grid, sigma).unwrap());
        let w1 = wigner_from_psi(&coherent_state(&grid, 0.0, p0, sigma).unwrap());
        let mut rolled = Field2D::zeros(&grid);
        for j in 0..256 {
            for k in 0..256 {
                rolled.values_mut()[(j, k)] = w0.values()[(j, (k + 256 - cells) % 256)];
            }
        }
        assert!(w1.max_abs_diff(&rolled).unwrap() < 1e-10);
    }

    #[test]
    fn pure_density_matrix_agrees_with_psi_route() {
        let grid = grid_256();
        let psi = coherent_state(&grid, 0.5, grid.spec().dp() * 3.0, 0.8).unwrap();
        let rho = DensityMatrix::pure(&psi);
        assert_relative_eq!(rho.trace(), 1.0, epsilon = 1e-10);
        let w_rho = wigner_from_rho(&rho);
        let w_psi = wigner_from_psi(&psi);
        assert!(w_rho.max_abs_diff(&w_psi).unwrap() < 1e-10);
    }

    #[test]
    fn mixture_density_matrix_is_linear() {
        let grid = grid_256();
        let a = gaussian_packet(&grid, 0.6).unwrap();
        let b = coherent_state(&grid, 2.0, 0.0, 0.6).unwrap();
        let rho = DensityMatrix::mixture(&[
            (0.5, &DensityMatrix::pure(&a)),
            (0.5, &DensityMatrix::pure(&b)),
        ])
        .unwrap();
        let w = wigner_from_rho(&rho);
        let expect = Field2D::linear_combination(&[
            (0.5, &wigner_from_psi(&a)),
            (0.5, &wigner_from_psi(&b)),
        ])
        .unwrap();
        assert!(w.max_abs_diff(&expect).unwrap() < 1e-10);
    }

    #[test]
    fn rho_from_wigner_recovers_the_outer_product() {
        let grid = grid_256();
        let sigma = 0.8;
        let w = gaussian_wigner_closed(&grid, sigma);
        let rho = rho_from_wigner(&w);
        let psi = gaussian_packet(&grid, sigma).unwrap();
        let mut worst = 0.0f64;
        for i in 0..grid.spec().nx {
            for j in 0..grid.spec().nx {
                let want = psi.values()[i] * psi.values()[j].conj();
                worst = worst.max((rho.values()[(i, j)] - want).norm());
            }
        }
        assert!(worst < 1e-8, "outer-product error {worst:e}");
        assert_relative_eq!(rho.trace(), w.integrate(), epsilon = 1e-8);
    }

    #[test]
    fn rho_from_wigner_of_zero_is_zero() {
        let grid = PhaseGrid::new(GridSpec::new(64, 64, 6.0, 1.0, 1.0).unwrap()).unwrap();
        let rho = rho_from_wigner(&Field2D::zeros(&grid));
        assert!(rho.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn wigner_rho_round_trip_on_a_mixture() {
        let grid = grid_256();
        let a = gaussian_packet(&grid, 0.7).unwrap();
        let b = coherent_state(&grid, 1.5, -4.0 * grid.spec().dp(), 0.7).unwrap();
        let rho = DensityMatrix::mixture(&[
            (0.3, &DensityMatrix::pure(&a)),
            (0.7, &DensityMatrix::pure(&b)),
        ])
        .unwrap();
        let w = wigner_from_rho(&rho);
        let rho2 = rho_from_wigner(&w);
        let mut worst = 0.0f64;
        for (x, y) in rho.values().iter().zip(rho2.values().iter()) {
            worst = worst.max((x - y).norm());
        }
        assert!(worst < 1e-9, "round-trip error {worst:e}");

        let w2 = wigner_from_rho(&rho2);
        assert!(w.max_abs_diff(&w2).unwrap() < 1e-9);
    }

    #[test]
    fn expectation_values() {
        let grid = grid_256();
        let w = wigner_from_psi(&gaussian_packet(&grid, 0.7).unwrap());
        let unit = Field2D::from_fn(&grid, |_, _| 1.0);
        assert_relative_eq!(expectation(&w, &unit).unwrap(), 1.0, epsilon = 1e-8);
        let xop = Field2D::from_fn(&grid, |x, _| x);
        assert!(expectation(&w, &xop).unwrap().abs() < 1e-10);
    }

    #[test]
    fn spectral_reality_of_pure_states() {
        // The double transform of a centered real-even state is real; the
        // imaginary residue must stay at rounding level.
        let grid = grid_256();
        let w = wigner_from_psi(&gaussian_packet(&grid, 1.0).unwrap());
        let f = fourier2(&w);
        let max_im = f.values().iter().fold(0.0f64, |acc, v| acc.max(v.im.abs()));
        assert!(max_im < 1e-12);
    }

    #[test]
    fn mix_validates_weights() {
        let grid = PhaseGrid::new(GridSpec::new(64, 64, 6.0, 1.0, 1.0).unwrap()).unwrap();
        let a = gaussian_packet(&grid, 0.7).unwrap();
        let spec = MixtureSpec {
            weights: vec![0.6, 0.3],
            states: vec![
                MixtureMember::Psi(a.clone()),
                MixtureMember::Psi(coherent_state(&grid, 1.0, 0.0, 0.7).unwrap()),
            ],
        };
        assert!(matches!(mix(&spec).unwrap_err(), WignerError::WeightSum { .. }));
        assert!(!spec.has_negative_weights());
    }

    #[test]
    fn trivial_mixture_returns_the_state() {
        let grid = PhaseGrid::new(GridSpec::new(64, 64, 6.0, 1.0, 1.0).unwrap()).unwrap();
        let a = gaussian_packet(&grid, 0.7).unwrap();
        let w = wigner_from_psi(&a);
        let spec = MixtureSpec {
            weights: vec![1.0, 0.0],
            states: vec![
                MixtureMember::Field(w.clone()),
                MixtureMember::Psi(coherent_state(&grid, 1.0, 0.0, 0.7).unwrap()),
            ],
        };
        assert!(mix(&spec).unwrap().max_abs_diff(&w).unwrap() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized_wavefunctions() {
        let grid = PhaseGrid::new(GridSpec::new(64, 64, 6.0, 1.0, 1.0).unwrap()).unwrap();
        let raw = Array1::from_elem(64, Complex64::new(1.0, 0.0));
        assert!(matches!(
            Wavefunction::new(&grid, raw.clone()).unwrap_err(),
            WignerError::NotNormalized { .. }
        ));
        // The explicit route accepts and rescales the same samples.
        let psi = Wavefunction::normalized(&grid, raw).unwrap();
        assert_relative_eq!(psi.norm_squared(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn rejects_non_hermitian_matrices() {
        let grid = PhaseGrid::new(GridSpec::new(8, 8, 4.0, 1.0, 1.0).unwrap()).unwrap();
        let mut values: Array2<Complex64> = Array2::default((8, 8));
        values[(0, 1)] = Complex64::new(0.3, 0.0);
        values[(1, 0)] = Complex64::new(0.7, 0.0);
        assert!(matches!(
            DensityMatrix::hermitian_only(&grid, values).unwrap_err(),
            WignerError::NotHermitian { .. }
        ));
    }
}

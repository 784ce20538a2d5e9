//! Centered discrete Fourier transforms.
//!
//! All grids in this crate are symmetric around zero, with index `m`
//! standing for the coordinate `(m - n/2) * step`. The natural transform
//! between such grids is the centered DFT
//!
//! ```text
//! out[k] = sum_m v[m] exp(±i 2π (k - n/2)(m - n/2) / n)
//! ```
//!
//! which reduces to a plain FFT after conjugating with `(-1)^m` phases:
//! `(k - c)(m - c) = km - c(k + m) + c^2` with `c = n/2`, so the centered
//! kernel is `(-1)^{k+m} i^{±n}` times the uncentered one.
//!
//! `forward` uses the `-i` sign, `inverse` the `+i` sign; both are
//! unnormalized, so `inverse(forward(v)) = n * v`.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

pub(crate) struct CenteredFft {
    len: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
    /// i^n, the residual center phase.
    phase: Complex64,
}

impl CenteredFft {
    pub fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(len);
        let inv = planner.plan_fft_inverse(len);
        let scratch_len = fwd.get_inplace_scratch_len().max(inv.get_inplace_scratch_len());
        let phase = match len % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        Self { len, fwd, inv, scratch: vec![Complex64::default(); scratch_len], phase }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// In-place centered DFT with kernel `exp(-i 2π (k-c)(m-c)/n)`.
    pub fn forward(&mut self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        alternate_signs(buf);
        self.fwd.process_with_scratch(buf, &mut self.scratch);
        alternate_signs(buf);
        let ph = self.phase.conj();
        for v in buf.iter_mut() {
            *v *= ph;
        }
    }

    /// In-place centered DFT with kernel `exp(+i 2π (k-c)(m-c)/n)`.
    pub fn inverse(&mut self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        alternate_signs(buf);
        self.inv.process_with_scratch(buf, &mut self.scratch);
        alternate_signs(buf);
        for v in buf.iter_mut() {
            *v *= self.phase;
        }
    }
}

fn alternate_signs(buf: &mut [Complex64]) {
    for v in buf.iter_mut().skip(1).step_by(2) {
        *v = -*v;
    }
}

/// Apply a centered transform to every contiguous row (axis 1) of a matrix
/// stored in standard layout.
pub(crate) fn transform_rows(
    fft: &mut CenteredFft,
    values: &mut ndarray::Array2<Complex64>,
    forward: bool,
) {
    for mut row in values.rows_mut() {
        let lane = row.as_slice_mut().expect("standard layout");
        if forward {
            fft.forward(lane);
        } else {
            fft.inverse(lane);
        }
    }
}

/// Apply a centered transform to every column (axis 0) of a matrix,
/// staging each column through a contiguous buffer.
pub(crate) fn transform_cols(
    fft: &mut CenteredFft,
    values: &mut ndarray::Array2<Complex64>,
    forward: bool,
) {
    let n = values.nrows();
    debug_assert_eq!(n, fft.len());
    let mut lane = vec![Complex64::default(); n];
    for mut col in values.columns_mut() {
        for (dst, src) in lane.iter_mut().zip(col.iter()) {
            *dst = *src;
        }
        if forward {
            fft.forward(&mut lane);
        } else {
            fft.inverse(&mut lane);
        }
        for (dst, src) in col.iter_mut().zip(lane.iter()) {
            *dst = *src;
        }
    }
}

//! Periodic cube, cell-centred samples and 3-D FFTs.

use std::fmt;
use std::sync::Arc;

use rustfft::{Fft, FftPlanner};
use rayon::prelude::*;

use crate::num::C64;
use crate::SpectralError;

/// N³ cell-centred samples on `[−L/2, L/2)³`; no sample sits at the origin
/// when N is even.
pub struct Grid {
    n: usize,
    box_len: f64,
    coords: Vec<f64>,
    momenta: Vec<f64>,
    neg: Vec<u32>,
    fft: Arc<dyn Fft<f64>>,
    ifft: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grid").field("n", &self.n).field("box_len", &self.box_len).finish()
    }
}

impl Grid {
    pub const MIN_POINTS: usize = 8;

    pub fn new(n: usize, box_len: f64) -> Result<Arc<Grid>, SpectralError> {
        if n < Self::MIN_POINTS || n % 2 != 0 {
            return Err(SpectralError::GridTooCoarse(n));
        }
        if !(box_len.is_finite() && box_len > 0.0) {
            return Err(SpectralError::InvalidParameter(format!("box length {box_len}")));
        }
        let h = box_len / n as f64;
        let coords = (0..n).map(|i| -0.5 * box_len + (i as f64 + 0.5) * h).collect();
        let dk = 2.0 * std::f64::consts::PI / box_len;
        // The Nyquist mode has no sign; zeroing it keeps k(−i) = −k(i) exact.
        let momenta = (0..n)
            .map(|i| match i.cmp(&(n / 2)) {
                std::cmp::Ordering::Less => dk * i as f64,
                std::cmp::Ordering::Equal => 0.0,
                std::cmp::Ordering::Greater => dk * (i as f64 - n as f64),
            })
            .collect();
        let neg1 = |i: usize| (n - i) % n;
        let mut neg = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    neg.push(((neg1(i) * n + neg1(j)) * n + neg1(l)) as u32);
                }
            }
        }
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(n);
        let ifft = planner.plan_fft_inverse(n);
        Ok(Arc::new(Grid { n, box_len, coords, momenta, neg, fft, ifft }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn box_len(&self) -> f64 {
        self.box_len
    }

    pub fn spacing(&self) -> f64 {
        self.box_len / self.n as f64
    }

    /// Number of sample points, N³.
    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn split(&self, idx: usize) -> [usize; 3] {
        let n = self.n;
        [idx / (n * n), (idx / n) % n, idx % n]
    }

    pub fn point(&self, idx: usize) -> [f64; 3] {
        self.split(idx).map(|i| self.coords[i])
    }

    pub fn momentum(&self, idx: usize) -> [f64; 3] {
        self.split(idx).map(|i| self.momenta[i])
    }

    /// Flat index of the momentum −k for the sample at `idx`.
    pub fn negated(&self, idx: usize) -> usize {
        self.neg[idx] as usize
    }

    pub(crate) fn neg_table(&self) -> &[u32] {
        &self.neg
    }

    pub fn sample_position(&self, f: impl Fn([f64; 3]) -> f64) -> Vec<f64> {
        (0..self.len()).map(|i| f(self.point(i))).collect()
    }

    pub fn sample_momentum<T>(&self, f: impl Fn([f64; 3]) -> T) -> Vec<T> {
        (0..self.len()).map(|i| f(self.momentum(i))).collect()
    }

    /// In-place unnormalised forward transform of every N³ block of `data`.
    pub fn forward(&self, data: &mut [C64]) {
        self.transform(data, &self.fft);
    }

    /// In-place inverse transform including the 1/N³ factor.
    pub fn inverse(&self, data: &mut [C64]) {
        self.transform(data, &self.ifft);
        let s = 1.0 / self.len() as f64;
        data.iter_mut().for_each(|z| *z *= s);
    }

    fn transform(&self, data: &mut [C64], fft: &Arc<dyn Fft<f64>>) {
        let n = self.n;
        data.par_chunks_mut(n * n * n).for_each(|block| {
            let mut scratch = vec![C64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
            let mut lines = vec![C64::new(0.0, 0.0); n * n];
            // last axis is contiguous
            fft.process_with_scratch(block, &mut scratch);
            self.axis_pass(block, n, fft, &mut scratch, &mut lines);
            self.axis_pass(block, n * n, fft, &mut scratch, &mut lines);
        });
    }

    /// Transforms along the axis with the given stride (N or N²).
    fn axis_pass(
        &self,
        block: &mut [C64],
        stride: usize,
        fft: &Arc<dyn Fft<f64>>,
        scratch: &mut [C64],
        lines: &mut [C64],
    ) {
        let n = self.n;
        // Index = a·N² + b·N + c. Stride N runs over b, stride N² over a.
        // Lines are batched N at a time, one per value of the fastest free index.
        for outer in 0..n {
            for l in 0..n {
                let base = if stride == n { outer * n * n + l } else { outer * n + l };
                for j in 0..n {
                    lines[l * n + j] = block[base + j * stride];
                }
            }
            fft.process_with_scratch(lines, scratch);
            for l in 0..n {
                let base = if stride == n { outer * n * n + l } else { outer * n + l };
                for j in 0..n {
                    block[base + j * stride] = lines[l * n + j];
                }
            }
        }
    }
}

/// Four complex components sampled on a grid, stored component-major.
#[derive(Clone, Debug)]
pub struct GridSpinor {
    grid: Arc<Grid>,
    data: Vec<C64>,
}

impl GridSpinor {
    pub fn zeros(grid: &Arc<Grid>) -> Self {
        GridSpinor { grid: grid.clone(), data: vec![C64::new(0.0, 0.0); 4 * grid.len()] }
    }

    pub fn from_fn(grid: &Arc<Grid>, f: impl Fn([f64; 3]) -> [C64; 4]) -> Self {
        let mut s = Self::zeros(grid);
        let len = grid.len();
        for p in 0..len {
            let v = f(grid.point(p));
            for c in 0..4 {
                s.data[c * len + p] = v[c];
            }
        }
        s
    }

    pub fn from_data(grid: &Arc<Grid>, data: Vec<C64>) -> Result<Self, SpectralError> {
        if data.len() != 4 * grid.len() {
            return Err(SpectralError::SizeMismatch { expected: 4 * grid.len(), got: data.len() });
        }
        Ok(GridSpinor { grid: grid.clone(), data })
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<C64> {
        self.data
    }

    pub fn component(&self, c: usize) -> &[C64] {
        let len = self.grid.len();
        &self.data[c * len..(c + 1) * len]
    }

    pub fn value(&self, p: usize) -> [C64; 4] {
        let len = self.grid.len();
        std::array::from_fn(|c| self.data[c * len + p])
    }

    /// L² norm with the cell volume h³.
    pub fn norm(&self) -> f64 {
        let h3 = self.grid.spacing().powi(3);
        (self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * h3).sqrt()
    }

    /// `⟨self, other⟩`, antilinear in the first slot.
    pub fn inner(&self, other: &GridSpinor) -> C64 {
        let h3 = self.grid.spacing().powi(3);
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum::<C64>() * h3
    }

    pub fn scale(&self, c: C64) -> GridSpinor {
        GridSpinor { grid: self.grid.clone(), data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn add(&self, o: &GridSpinor) -> GridSpinor {
        GridSpinor { grid: self.grid.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &GridSpinor) -> GridSpinor {
        GridSpinor { grid: self.grid.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn normalized(&self) -> GridSpinor {
        self.scale(C64::new(1.0 / self.norm(), 0.0))
    }
}

//! Exact real spans of operator lists over ℚ(√2).

use crate::op::RealLinearOp;
use crate::scalar::RealQ2;

/// Row-reduced basis of the real span of a list of operators.
///
/// Each basis row is tracked together with the combination of input
/// operators that produced it, so membership tests also return
/// coordinates against the original list.
#[derive(Clone, Debug)]
pub struct RealSpan {
    inputs: usize,
    rows: Vec<Vec<RealQ2>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<RealQ2>>,
}

impl RealSpan {
    pub fn new(ops: &[RealLinearOp]) -> Self {
        let n = ops.len();
        let mut span = RealSpan { inputs: n, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() };
        for (idx, op) in ops.iter().enumerate() {
            let mut combo = vec![RealQ2::zero(); n];
            combo[idx] = RealQ2::one();
            span.insert(op.real_coordinates(), combo);
        }
        span
    }

    fn reduce(&self, v: &mut [RealQ2], combo: &mut [RealQ2]) {
        for ((row, &p), rc) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<RealQ2>, mut combo: Vec<RealQ2>) {
        self.reduce(&mut v, &mut combo);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for x in combo.iter_mut() {
            *x = &*x * &inv;
        }
        // keep earlier rows fully reduced against the new pivot
        for (row, rc) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in rc.iter_mut().zip(&combo) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.combos.push(combo);
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, op: &RealLinearOp) -> bool {
        self.coordinates(op).is_some()
    }

    /// Real coefficients `c` with `Σ cᵢ opsᵢ = op`, or `None` when `op` is
    /// outside the span. Unique when the inputs are independent.
    pub fn coordinates(&self, op: &RealLinearOp) -> Option<Vec<RealQ2>> {
        let mut v = op.real_coordinates();
        let mut combo = vec![RealQ2::zero(); self.inputs];
        self.reduce(&mut v, &mut combo);
        if v.iter().all(RealQ2::is_zero) {
            // reduce subtracted the combination, so negate it back
            Some(combo.into_iter().map(|x| -x).collect())
        } else {
            None
        }
    }
}

/// Dimension of the real span of `ops` over ℚ(√2); zero for an empty list.
pub fn real_span_dim(ops: &[RealLinearOp]) -> usize {
    RealSpan::new(ops).dim()
}

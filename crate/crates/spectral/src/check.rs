#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// value ≤ threshold
    AtMost,
    /// value ≥ threshold (negative controls)
    AtLeast,
}

/// One measured value against its threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub bound: Bound,
}

impl NumericCheck {
    pub fn at_most(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        NumericCheck { name: name.into(), value, threshold, bound: Bound::AtMost }
    }

    pub fn at_least(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        NumericCheck { name: name.into(), value, threshold, bound: Bound::AtLeast }
    }

    /// NaN never passes.
    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.value <= self.threshold,
            Bound::AtLeast => self.value >= self.threshold,
        }
    }
}

/// NaN-propagating maximum.
pub fn nan_max(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |a: f64, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
}

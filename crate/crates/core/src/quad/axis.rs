//! One-dimensional quadrature rules.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::scalar::Real;

/// Which measure the axis weights encode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureTag {
    /// Normalized rotation-invariant measure on the circle (total mass 1).
    CircleNormalized,
    /// Lebesgue measure on a truncated interval.
    Lebesgue,
    /// Multiplicative Haar measure `da/a`, parameterized by `t = log a`
    /// (the weights encode plain `dt`).
    MultiplicativeLog,
    /// Counting measure over integer indices (spectral sum axis).
    Counting,
}

/// Scheme for truncated-line rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineScheme {
    /// Composite trapezoid; spectrally accurate for smooth integrands whose
    /// derivatives vanish at the truncation boundary.
    Trapezoid,
    /// Gauss–Legendre on the truncated interval.
    GaussLegendre,
}

/// A labelled 1-D quadrature rule: strictly increasing nodes with positive
/// weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis<T> {
    /// Coordinate name (`phi`, `n`, `t`, `z`, `y`, `x`, `eta1`…).
    pub label: String,
    /// Strictly increasing node positions.
    pub nodes: Vec<T>,
    /// Positive weights, same length as `nodes`.
    pub weights: Vec<T>,
    /// Measure semantics of the weights.
    pub measure: MeasureTag,
}

impl<T: Real> Axis<T> {
    /// Uniform rule on the circle: nodes `2πj/m`, weights `1/m`.
    ///
    /// Exact for trigonometric polynomials of degree `< m/2`.  Requires
    /// `m ≥ 4` and even.
    pub fn circle(label: &str, m: usize) -> Result<Self, CoreError> {
        if m < 4 || m % 2 != 0 {
            return Err(CoreError::BadAxis {
                label: label.to_string(),
                reason: format!("circle rule needs an even node count ≥ 4, got {m}"),
            });
        }
        let tau = T::TAU();
        let mf = T::of(m as f64);
        let nodes = (0..m).map(|j| tau * T::of(j as f64) / mf).collect();
        let weights = vec![mf.recip(); m];
        Ok(Self {
            label: label.to_string(),
            nodes,
            weights,
            measure: MeasureTag::CircleNormalized,
        })
    }

    /// Truncated line rule on `[−l, l]` with Lebesgue weights.
    pub fn line(label: &str, l: T, n: usize, scheme: LineScheme) -> Result<Self, CoreError> {
        Self::interval(label, -l, l, n, scheme, MeasureTag::Lebesgue)
    }

    /// Log-scale rule: nodes are `t ∈ [−l, l]` standing for `a = e^t`; the
    /// weights encode the multiplicative measure `da/a = dt`.
    pub fn log_scale(label: &str, l: T, n: usize) -> Result<Self, CoreError> {
        Self::interval(
            label,
            -l,
            l,
            n,
            LineScheme::Trapezoid,
            MeasureTag::MultiplicativeLog,
        )
    }

    /// General truncated interval rule.
    pub fn interval(
        label: &str,
        lo: T,
        hi: T,
        n: usize,
        scheme: LineScheme,
        measure: MeasureTag,
    ) -> Result<Self, CoreError> {
        if !(lo.is_finite() && hi.is_finite()) || hi <= lo {
            return Err(CoreError::BadAxis {
                label: label.to_string(),
                reason: "truncation bounds must be finite with lo < hi".into(),
            });
        }
        if n < 8 {
            return Err(CoreError::BadAxis {
                label: label.to_string(),
                reason: format!("line rule needs at least 8 nodes, got {n}"),
            });
        }
        let (nodes, weights) = match scheme {
            LineScheme::Trapezoid => trapezoid(lo, hi, n),
            LineScheme::GaussLegendre => gauss_legendre(lo, hi, n),
        };
        Ok(Self {
            label: label.to_string(),
            nodes,
            weights,
            measure,
        })
    }

    /// Counting axis over the integer interval `lo..=hi` (weights 1).
    pub fn counting(label: &str, lo: i64, hi: i64) -> Self {
        let nodes = (lo..=hi).map(|m| T::of(m as f64)).collect::<Vec<_>>();
        let weights = vec![T::one(); nodes.len()];
        Self {
            label: label.to_string(),
            nodes,
            weights,
            measure: MeasureTag::Counting,
        }
    }

    /// Single-node axis (weight 1): pins a coordinate without integrating it.
    pub fn pinned(label: &str, at: T) -> Self {
        Self {
            label: label.to_string(),
            nodes: vec![at],
            weights: vec![T::one()],
            measure: MeasureTag::Counting,
        }
    }

    /// Node count.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when the axis has no nodes.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Structural validation: monotone nodes, positive weights, equal
    /// lengths, and mass 1 for circle axes.
    pub fn validate(&self) -> Result<(), CoreError> {
        let bad = |reason: String| CoreError::BadAxis {
            label: self.label.clone(),
            reason,
        };
        if self.nodes.len() != self.weights.len() {
            return Err(bad("node/weight length mismatch".into()));
        }
        if self.nodes.is_empty() {
            return Err(bad("empty axis".into()));
        }
        for w in &self.weights {
            if !(*w > T::zero()) {
                return Err(bad("weights must be strictly positive".into()));
            }
        }
        for pair in self.nodes.windows(2) {
            if !(pair[0] < pair[1]) {
                return Err(bad("nodes must be strictly increasing".into()));
            }
        }
        if self.measure == MeasureTag::CircleNormalized {
            let mass = self
                .weights
                .iter()
                .fold(T::zero(), |acc, w| acc + *w);
            if (mass - T::one()).abs() > T::of(1e-14).max(T::epsilon() * T::of(16.0)) {
                return Err(bad(format!(
                    "circle weights must sum to 1, got {mass}"
                )));
            }
        }
        Ok(())
    }

    /// Truncation half-width for reporting (max |node|).
    pub fn truncation(&self) -> T {
        self.nodes
            .iter()
            .fold(T::zero(), |acc, x| acc.max(x.abs()))
    }
}

fn trapezoid<T: Real>(lo: T, hi: T, n: usize) -> (Vec<T>, Vec<T>) {
    let nf = T::of((n - 1) as f64);
    let h = (hi - lo) / nf;
    let nodes: Vec<T> = (0..n).map(|j| lo + h * T::of(j as f64)).collect();
    let mut weights = vec![h; n];
    let half = T::of(0.5);
    weights[0] = h * half;
    weights[n - 1] = h * half;
    (nodes, weights)
}

/// Gauss–Legendre nodes/weights by Newton iteration on the Legendre
/// recurrence, mapped from `[−1, 1]` to `[lo, hi]`.
fn gauss_legendre<T: Real>(lo: T, hi: T, n: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let half = (hi - lo) * T::of(0.5);
    let mid = (hi + lo) * T::of(0.5);
    let m = (n + 1) / 2;
    for i in 0..m {
        // Tricomi initial guess.
        let theta = T::PI() * (T::of(i as f64) + T::of(0.75)) / (T::of(n as f64) + T::of(0.5));
        let mut x = theta.cos();
        let mut dp;
        loop {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= T::epsilon() * T::of(4.0) {
                break;
            }
        }
        let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = w * half;
        weights[n - 1 - i] = w * half;
    }
    // Nodes were filled symmetric-descending in x; ensure ascending order.
    nodes.reverse();
    weights.reverse();
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (nodes, weights)
}

/// Legendre polynomial `P_n` and derivative at `x`.
fn legendre<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = T::of(k as f64);
        let p2 = ((T::of(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = T::of(n as f64) * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

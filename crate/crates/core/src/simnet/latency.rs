//! Per-segment latency models.

use crate::hash::SplitMix64;

/// How a latency model draws its delays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Distribution {
    /// Every sample equals `base_ms`.
    #[default]
    Constant,
    /// Samples are uniform in `[base_ms - jitter_ms, base_ms + jitter_ms]`,
    /// clamped at zero.
    Uniform,
}

impl Distribution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Distribution::Constant => "constant",
            Distribution::Uniform => "uniform",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "constant" => Some(Distribution::Constant),
            "uniform" => Some(Distribution::Uniform),
            _ => None,
        }
    }
}

/// Latency model for one channel segment.
#[derive(Debug, Clone, PartialEq)]
pub struct LatencyModel {
    pub base_ms: f64,
    pub jitter_ms: f64,
    pub distribution: Distribution,
}

impl LatencyModel {
    pub fn constant(base_ms: f64) -> Self {
        Self {
            base_ms,
            jitter_ms: 0.0,
            distribution: Distribution::Constant,
        }
    }

    pub fn uniform(base_ms: f64, jitter_ms: f64) -> Self {
        Self {
            base_ms,
            jitter_ms,
            distribution: Distribution::Uniform,
        }
    }

    /// Parameters must be finite and non-negative.
    pub fn is_valid(&self) -> bool {
        self.base_ms.is_finite()
            && self.base_ms >= 0.0
            && self.jitter_ms.is_finite()
            && self.jitter_ms >= 0.0
    }

    /// Draw one delay. Constant mode does not consume the stream, so
    /// zeroing the jitter of one segment never shifts another's samples.
    pub fn sample(&self, rng: &mut SplitMix64) -> f64 {
        match self.distribution {
            Distribution::Constant => self.base_ms,
            Distribution::Uniform => {
                let u = rng.next_f64(); // [0, 1)
                let d = self.base_ms + (2.0 * u - 1.0) * self.jitter_ms;
                d.max(0.0)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_always_base() {
        let m = LatencyModel::constant(10.4);
        let mut rng = SplitMix64::new(1);
        for _ in 0..100 {
            assert_eq!(m.sample(&mut rng), 10.4);
        }
    }

    #[test]
    fn uniform_within_bounds_and_mean_close() {
        // Sampling statistics oracle: 1000 draws from uniform(100 ± 10)
        // all land in [90, 110] and their mean is within ±2 of 100.
        let m = LatencyModel::uniform(100.0, 10.0);
        let mut rng = SplitMix64::new(99);
        let mut sum = 0.0;
        for _ in 0..1000 {
            let d = m.sample(&mut rng);
            assert!((90.0..=110.0).contains(&d), "sample {d} out of bounds");
            sum += d;
        }
        let mean = sum / 1000.0;
        assert!((mean - 100.0).abs() < 2.0, "mean {mean} too far from base");
    }

    #[test]
    fn uniform_never_negative() {
        let m = LatencyModel::uniform(1.0, 50.0);
        let mut rng = SplitMix64::new(3);
        for _ in 0..1000 {
            assert!(m.sample(&mut rng) >= 0.0);
        }
    }

    #[test]
    fn validity() {
        assert!(LatencyModel::constant(0.0).is_valid());
        assert!(!LatencyModel::constant(f64::NAN).is_valid());
        assert!(!LatencyModel::constant(-1.0).is_valid());
        assert!(!LatencyModel::uniform(1.0, f64::INFINITY).is_valid());
    }
}

//! Streaming mean/variance accumulators with order-independent merging.

/// Welford accumulator for numerically stable streaming statistics.
///
/// Merging is associative, so per-worker accumulators can be combined in a
/// fixed order to give results independent of how shots were partitioned.
#[derive(Debug, Clone, Copy, Default, PartialEq, serde::Serialize)]
pub struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Welford {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fold one sample into the running statistics.
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Combine with another accumulator (Chan et al. pairwise update).
    pub fn merge(&mut self, other: &Welford) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / total as f64;
        self.m2 += other.m2 + delta * delta * (self.count as f64) * (other.count as f64)
            / total as f64;
        self.count = total;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Sample mean; NaN while empty.
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            f64::NAN
        } else {
            self.mean
        }
    }

    /// Unbiased sample variance; NaN below two samples.
    pub fn sample_variance(&self) -> f64 {
        if self.count < 2 {
            f64::NAN
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    pub fn sample_std(&self) -> f64 {
        self.sample_variance().sqrt()
    }

    /// Standard error of the mean, sample std / sqrt(count).
    pub fn sem(&self) -> f64 {
        self.sample_std() / (self.count as f64).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(xs: &[f64]) -> (f64, f64) {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (mean, var)
    }

    #[test]
    fn matches_two_pass_reference() {
        let xs: Vec<f64> = (0..257).map(|i| (i as f64 * 0.37).sin() + 1e6).collect();
        let mut w = Welford::new();
        for &x in &xs {
            w.push(x);
        }
        let (mean, var) = reference(&xs);
        assert!((w.mean() - mean).abs() < 1e-9);
        assert!((w.sample_variance() - var).abs() / var < 1e-9);
    }

    #[test]
    fn merge_equals_sequential() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 2654435761u64 % 1000) as f64) / 7.0).collect();
        let mut whole = Welford::new();
        for &x in &xs {
            whole.push(x);
        }
        // merge in uneven pieces
        let mut parts = Welford::new();
        for chunk in xs.chunks(137) {
            let mut w = Welford::new();
            for &x in chunk {
                w.push(x);
            }
            parts.merge(&w);
        }
        assert_eq!(whole.count(), parts.count());
        assert!((whole.mean() - parts.mean()).abs() < 1e-10);
        assert!((whole.sample_variance() - parts.sample_variance()).abs() < 1e-8);
    }

    #[test]
    fn empty_and_single() {
        let w = Welford::new();
        assert!(w.mean().is_nan());
        let mut w = Welford::new();
        w.push(3.0);
        assert_eq!(w.mean(), 3.0);
        assert!(w.sem().is_nan());
    }
}

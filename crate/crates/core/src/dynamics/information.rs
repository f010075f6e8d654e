use super::DynamicsError;

/// Equal-width bin of `x` among `bins` bins spanning `[lo, hi]`. The last bin
/// is closed on the right. A degenerate range puts everything in bin 0.
fn bin_of(x: f64, lo: f64, hi: f64, bins: usize) -> usize {
    if hi <= lo {
        return 0;
    }
    let scaled = (x - lo) / (hi - lo) * bins as f64;
    (scaled.floor() as usize).min(bins - 1)
}

fn range(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    })
}

/// Histogram estimate of the mutual information between two paired
/// sequences, in bits.
///
/// Each sequence is binned into `bins` equal-width bins over its own
/// `[min, max]`. Cell probabilities are counts divided by the sample size,
/// and `MI = Σ p_xy · log₂((p_xy + ε) / (p_x·p_y + ε))` with `ε` the machine
/// epsilon, summed over occupied cells.
pub fn mutual_information(x: &[f64], y: &[f64], bins: usize) -> Result<f64, DynamicsError> {
    if x.len() != y.len() {
        return Err(DynamicsError::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(DynamicsError::EmptyInput);
    }
    if bins == 0 {
        return Err(DynamicsError::ZeroBins);
    }
    let n = x.len() as f64;
    let (xlo, xhi) = range(x);
    let (ylo, yhi) = range(y);

    let mut px = vec![0usize; bins];
    let mut py = vec![0usize; bins];
    let mut joint = vec![0usize; bins * bins];
    for (&a, &b) in x.iter().zip(y) {
        let i = bin_of(a, xlo, xhi, bins);
        let j = bin_of(b, ylo, yhi, bins);
        px[i] += 1;
        py[j] += 1;
        joint[i * bins + j] += 1;
    }

    let eps = f64::EPSILON;
    let mut mi = 0.0;
    for i in 0..bins {
        for j in 0..bins {
            let c = joint[i * bins + j];
            if c == 0 {
                continue;
            }
            let pxy = c as f64 / n;
            let marginal = (px[i] as f64 / n) * (py[j] as f64 / n);
            mi += pxy * ((pxy + eps) / (marginal + eps)).log2();
        }
    }
    Ok(mi)
}

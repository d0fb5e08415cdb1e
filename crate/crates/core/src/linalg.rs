//! Small dense linear-algebra helpers bridging `ndarray` and `nalgebra`.

use nalgebra::DMatrix;
use ndarray::Array2;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn to_na(m: &Array2<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[[i, j]])
}

pub fn from_na(m: &DMatrix<f64>) -> Array2<f64> {
    Array2::from_shape_fn((m.nrows(), m.ncols()), |(i, j)| m[(i, j)])
}

pub fn gaussian<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Array2<f64> {
    Array2::from_shape_fn((rows, cols), |_| rng.sample::<f64, _>(StandardNormal))
}

/// `rows × cols` matrix with orthonormal columns (`rows ≥ cols`).
pub fn orthonormal_columns<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Array2<f64> {
    assert!(rows >= cols);
    let g = to_na(&gaussian(rng, rows, cols));
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    // Fix column signs so the factorization is unique.
    let mut q = from_na(&q);
    for j in 0..cols {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).mapv_inplace(|x| -x);
        }
    }
    q
}

pub fn spectral_norm(m: &Array2<f64>) -> f64 {
    to_na(m)
        .singular_values()
        .iter()
        .fold(0.0_f64, |acc, &s| acc.max(s))
}

/// Rescales `m` so its spectral norm equals `target`.
pub fn with_spectral_norm(m: Array2<f64>, target: f64) -> Array2<f64> {
    let s = spectral_norm(&m);
    if s == 0.0 {
        m
    } else {
        m * (target / s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q = orthonormal_columns(&mut rng, 8, 4);
        let gram = q.t().dot(&q);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((gram[[i, j]] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn spectral_rescale() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let m = with_spectral_norm(gaussian(&mut rng, 5, 3), 0.9);
        assert!((spectral_norm(&m) - 0.9).abs() < 1e-12);
    }
}

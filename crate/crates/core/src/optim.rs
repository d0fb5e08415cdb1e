//! AdamW with decoupled weight decay and global gradient-norm clipping.

use ndarray::Array2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdamWConfig {
    pub lr: f64,
    pub weight_decay: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    /// Global L2 gradient-norm cap; `None` disables clipping.
    pub clip_norm: Option<f64>,
}

impl Default for AdamWConfig {
    fn default() -> Self {
        Self {
            lr: 5e-4,
            weight_decay: 1e-4,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            clip_norm: Some(5.0),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AdamW {
    cfg: AdamWConfig,
    m: Vec<Array2<f64>>,
    v: Vec<Array2<f64>>,
    step: u64,
}

pub fn global_norm(grads: &[Array2<f64>]) -> f64 {
    grads
        .iter()
        .map(|g| g.iter().map(|x| x * x).sum::<f64>())
        .sum::<f64>()
        .sqrt()
}

impl AdamW {
    pub fn new(cfg: AdamWConfig, params: &[Array2<f64>]) -> Self {
        let zeros: Vec<_> = params.iter().map(|p| Array2::zeros(p.dim())).collect();
        Self {
            cfg,
            m: zeros.clone(),
            v: zeros,
            step: 0,
        }
    }

    pub fn steps_taken(&self) -> u64 {
        self.step
    }

    /// One update; returns the gradient norm before clipping.
    pub fn step(&mut self, params: &mut [Array2<f64>], grads: &[Array2<f64>]) -> f64 {
        assert_eq!(params.len(), grads.len());
        assert_eq!(params.len(), self.m.len());
        let norm = global_norm(grads);
        let scale = match self.cfg.clip_norm {
            Some(c) if norm > c => c / norm,
            _ => 1.0,
        };
        self.step += 1;
        let c = self.cfg;
        let bc1 = 1.0 - c.beta1.powi(self.step as i32);
        let bc2 = 1.0 - c.beta2.powi(self.step as i32);
        for ((p, g), (m, v)) in params
            .iter_mut()
            .zip(grads)
            .zip(self.m.iter_mut().zip(self.v.iter_mut()))
        {
            ndarray::Zip::from(p).and(g).and(m).and(v).for_each(|p, &g, m, v| {
                let g = g * scale;
                *m = c.beta1 * *m + (1.0 - c.beta1) * g;
                *v = c.beta2 * *v + (1.0 - c.beta2) * g * g;
                let mhat = *m / bc1;
                let vhat = *v / bc2;
                *p -= c.lr * (mhat / (vhat.sqrt() + c.eps) + c.weight_decay * *p);
            });
        }
        norm
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn first_step_moves_by_lr() {
        let cfg = AdamWConfig {
            weight_decay: 0.0,
            clip_norm: None,
            ..Default::default()
        };
        let mut p = vec![array![[1.0, -2.0]]];
        let mut opt = AdamW::new(cfg, &p);
        opt.step(&mut p, &[array![[3.0, -0.5]]]);
        assert!((p[0][[0, 0]] - (1.0 - 5e-4)).abs() < 1e-9);
        assert!((p[0][[0, 1]] - (-2.0 + 5e-4)).abs() < 1e-9);
    }

    #[test]
    fn decay_with_zero_grad() {
        let cfg = AdamWConfig {
            lr: 0.1,
            weight_decay: 0.5,
            clip_norm: None,
            ..Default::default()
        };
        let mut p = vec![array![[2.0]]];
        let mut opt = AdamW::new(cfg, &p);
        opt.step(&mut p, &[array![[0.0]]]);
        assert!((p[0][[0, 0]] - (2.0 - 0.1 * 0.5 * 2.0)).abs() < 1e-12);
    }

    #[test]
    fn minimizes_quadratic() {
        let cfg = AdamWConfig {
            lr: 0.05,
            weight_decay: 0.0,
            ..Default::default()
        };
        let mut p = vec![array![[3.0, -4.0]]];
        let mut opt = AdamW::new(cfg, &p);
        for _ in 0..2000 {
            let g = vec![p[0].mapv(|x| 2.0 * (x - 1.0))];
            opt.step(&mut p, &g);
        }
        assert!(p[0].iter().all(|x| (x - 1.0).abs() < 1e-3), "{:?}", p[0]);
    }

    #[test]
    fn clipping_reports_raw_norm() {
        let mut p = vec![array![[0.0, 0.0]]];
        let mut opt = AdamW::new(AdamWConfig::default(), &p);
        let n = opt.step(&mut p, &[array![[30.0, 40.0]]]);
        assert_eq!(n, 50.0);
    }
}

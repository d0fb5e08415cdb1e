//! Minimal reverse-mode automatic differentiation over dense `f64` matrices.
//!
//! A [`Graph`] records every operation in creation order, which is already a
//! topological order, so [`Graph::backward`] is a single reverse sweep.
//! Scalars are `1 × 1` matrices. Only the handful of ops the HAL model needs
//! are provided.

use ndarray::{s, Array2, Axis, Zip};

pub type Mat = Array2<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(usize);

#[derive(Debug, Clone)]
enum Op {
    Leaf,
    MatMul(NodeId, NodeId),
    /// `a · bᵀ`
    MatMulT(NodeId, NodeId),
    Add(NodeId, NodeId),
    Sub(NodeId, NodeId),
    Mul(NodeId, NodeId),
    /// `a + r` with `r` a `1 × n` row broadcast over rows of `a`.
    AddRow(NodeId, NodeId),
    /// `a * r` with `r` a `1 × n` row broadcast over rows of `a`.
    MulRow(NodeId, NodeId),
    Scale(NodeId, f64),
    AddScalar(NodeId),
    Relu(NodeId),
    Tanh(NodeId),
    Exp(NodeId),
    Abs(NodeId),
    Square(NodeId),
    Clamp(NodeId, f64, f64),
    SoftmaxRows(NodeId),
    LogSoftmaxRows(NodeId),
    LayerNormRows { x: NodeId, inv_std: Vec<f64> },
    L2NormalizeRows { x: NodeId, norms: Vec<f64>, eps: f64 },
    SumAll(NodeId),
    MeanAll(NodeId),
    MeanCols(NodeId),
    SliceRows(NodeId, usize),
    SliceCols(NodeId, usize),
    ConcatCols(Vec<NodeId>),
    Transpose(NodeId),
    PoolRows2(NodeId),
    UnpoolRows2(NodeId),
}

#[derive(Debug)]
struct Node {
    value: Mat,
    op: Op,
    requires_grad: bool,
}

/// Recorded computation.
#[derive(Debug, Default)]
pub struct Graph {
    nodes: Vec<Node>,
}

/// Gradients of a scalar output with respect to every node that needs one.
#[derive(Debug)]
pub struct Grads {
    grads: Vec<Option<Mat>>,
}

impl Grads {
    pub fn get(&self, id: NodeId) -> Option<&Mat> {
        self.grads[id.0].as_ref()
    }

    /// Zero-filled when the node did not influence the output.
    pub fn get_or_zeros(&self, id: NodeId, shape: (usize, usize)) -> Mat {
        self.get(id).cloned().unwrap_or_else(|| Mat::zeros(shape))
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn push(&mut self, value: Mat, op: Op, requires_grad: bool) -> NodeId {
        self.nodes.push(Node {
            value,
            op,
            requires_grad,
        });
        NodeId(self.nodes.len() - 1)
    }

    fn rg(&self, ids: &[NodeId]) -> bool {
        ids.iter().any(|id| self.nodes[id.0].requires_grad)
    }

    /// Leaf that receives a gradient.
    pub fn param(&mut self, value: Mat) -> NodeId {
        self.push(value, Op::Leaf, true)
    }

    /// Leaf that never receives a gradient.
    pub fn constant(&mut self, value: Mat) -> NodeId {
        self.push(value, Op::Leaf, false)
    }

    pub fn scalar(&mut self, v: f64) -> NodeId {
        self.constant(Mat::from_elem((1, 1), v))
    }

    /// Copy of `x`'s value with the gradient path cut.
    pub fn detach(&mut self, x: NodeId) -> NodeId {
        let v = self.nodes[x.0].value.clone();
        self.constant(v)
    }

    pub fn value(&self, id: NodeId) -> &Mat {
        &self.nodes[id.0].value
    }

    pub fn scalar_value(&self, id: NodeId) -> f64 {
        self.nodes[id.0].value[[0, 0]]
    }

    pub fn shape(&self, id: NodeId) -> (usize, usize) {
        self.nodes[id.0].value.dim()
    }

    pub fn matmul(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let v = self.value(a).dot(self.value(b));
        let rg = self.rg(&[a, b]);
        self.push(v, Op::MatMul(a, b), rg)
    }

    pub fn matmul_t(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let v = self.value(a).dot(&self.value(b).t());
        let rg = self.rg(&[a, b]);
        self.push(v, Op::MatMulT(a, b), rg)
    }

    pub fn add(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let v = self.value(a) + self.value(b);
        let rg = self.rg(&[a, b]);
        self.push(v, Op::Add(a, b), rg)
    }

    pub fn sub(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let v = self.value(a) - self.value(b);
        let rg = self.rg(&[a, b]);
        self.push(v, Op::Sub(a, b), rg)
    }

    pub fn mul(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let v = self.value(a) * self.value(b);
        let rg = self.rg(&[a, b]);
        self.push(v, Op::Mul(a, b), rg)
    }

    pub fn add_row(&mut self, a: NodeId, row: NodeId) -> NodeId {
        debug_assert_eq!(self.shape(row).0, 1);
        let v = self.value(a) + self.value(row);
        let rg = self.rg(&[a, row]);
        self.push(v, Op::AddRow(a, row), rg)
    }

    pub fn mul_row(&mut self, a: NodeId, row: NodeId) -> NodeId {
        debug_assert_eq!(self.shape(row).0, 1);
        let v = self.value(a) * self.value(row);
        let rg = self.rg(&[a, row]);
        self.push(v, Op::MulRow(a, row), rg)
    }

    pub fn scale(&mut self, a: NodeId, k: f64) -> NodeId {
        let v = self.value(a) * k;
        let rg = self.rg(&[a]);
        self.push(v, Op::Scale(a, k), rg)
    }

    pub fn add_scalar(&mut self, a: NodeId, k: f64) -> NodeId {
        let v = self.value(a) + k;
        let rg = self.rg(&[a]);
        self.push(v, Op::AddScalar(a), rg)
    }

    fn unary(&mut self, a: NodeId, f: impl Fn(f64) -> f64, op: Op) -> NodeId {
        let v = self.value(a).mapv(f);
        let rg = self.rg(&[a]);
        self.push(v, op, rg)
    }

    pub fn relu(&mut self, a: NodeId) -> NodeId {
        self.unary(a, |x| x.max(0.0), Op::Relu(a))
    }

    pub fn tanh(&mut self, a: NodeId) -> NodeId {
        self.unary(a, f64::tanh, Op::Tanh(a))
    }

    pub fn exp(&mut self, a: NodeId) -> NodeId {
        self.unary(a, f64::exp, Op::Exp(a))
    }

    pub fn abs(&mut self, a: NodeId) -> NodeId {
        self.unary(a, f64::abs, Op::Abs(a))
    }

    pub fn square(&mut self, a: NodeId) -> NodeId {
        self.unary(a, |x| x * x, Op::Square(a))
    }

    pub fn clamp(&mut self, a: NodeId, lo: f64, hi: f64) -> NodeId {
        self.unary(a, |x| x.clamp(lo, hi), Op::Clamp(a, lo, hi))
    }

    pub fn softmax_rows(&mut self, a: NodeId) -> NodeId {
        let v = softmax_rows(self.value(a));
        let rg = self.rg(&[a]);
        self.push(v, Op::SoftmaxRows(a), rg)
    }

    pub fn log_softmax_rows(&mut self, a: NodeId) -> NodeId {
        let x = self.value(a);
        let mut v = x.clone();
        for mut row in v.rows_mut() {
            let m = row.fold(f64::NEG_INFINITY, |acc, &x| acc.max(x));
            let lse = m + row.iter().map(|&x| (x - m).exp()).sum::<f64>().ln();
            row.mapv_inplace(|x| x - lse);
        }
        let rg = self.rg(&[a]);
        self.push(v, Op::LogSoftmaxRows(a), rg)
    }

    /// Per-row standardization without affine parameters.
    pub fn layer_norm_rows(&mut self, a: NodeId, eps: f64) -> NodeId {
        let x = self.value(a);
        let n = x.ncols() as f64;
        let mut v = x.clone();
        let mut inv_std = Vec::with_capacity(x.nrows());
        for mut row in v.rows_mut() {
            let mean = row.sum() / n;
            let var = row.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / n;
            let is = 1.0 / (var + eps).sqrt();
            row.mapv_inplace(|x| (x - mean) * is);
            inv_std.push(is);
        }
        let rg = self.rg(&[a]);
        self.push(v, Op::LayerNormRows { x: a, inv_std }, rg)
    }

    /// Divides every row by its L2 norm; rows with norm below `eps` get
    /// `eps` added to the norm instead.
    pub fn l2_normalize_rows(&mut self, a: NodeId, eps: f64) -> NodeId {
        let mut v = self.value(a).clone();
        let mut norms = Vec::with_capacity(v.nrows());
        for mut row in v.rows_mut() {
            let r = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            let n = if r < eps { r + eps } else { r };
            row.mapv_inplace(|x| x / n);
            norms.push(r);
        }
        let rg = self.rg(&[a]);
        self.push(v, Op::L2NormalizeRows { x: a, norms, eps }, rg)
    }

    pub fn sum_all(&mut self, a: NodeId) -> NodeId {
        let v = Mat::from_elem((1, 1), self.value(a).sum());
        let rg = self.rg(&[a]);
        self.push(v, Op::SumAll(a), rg)
    }

    pub fn mean_all(&mut self, a: NodeId) -> NodeId {
        let x = self.value(a);
        let v = Mat::from_elem((1, 1), x.sum() / x.len() as f64);
        let rg = self.rg(&[a]);
        self.push(v, Op::MeanAll(a), rg)
    }

    /// Row means, `T × n → T × 1`.
    pub fn mean_cols(&mut self, a: NodeId) -> NodeId {
        let x = self.value(a);
        let v = x.mean_axis(Axis(1)).expect("nonempty").insert_axis(Axis(1));
        let rg = self.rg(&[a]);
        self.push(v, Op::MeanCols(a), rg)
    }

    pub fn slice_rows(&mut self, a: NodeId, start: usize, end: usize) -> NodeId {
        let v = self.value(a).slice(s![start..end, ..]).to_owned();
        let rg = self.rg(&[a]);
        self.push(v, Op::SliceRows(a, start), rg)
    }

    pub fn slice_cols(&mut self, a: NodeId, start: usize, end: usize) -> NodeId {
        let v = self.value(a).slice(s![.., start..end]).to_owned();
        let rg = self.rg(&[a]);
        self.push(v, Op::SliceCols(a, start), rg)
    }

    pub fn concat_cols(&mut self, parts: &[NodeId]) -> NodeId {
        let views: Vec<_> = parts.iter().map(|p| self.value(*p).view()).collect();
        let v = ndarray::concatenate(Axis(1), &views).expect("row counts agree");
        let rg = self.rg(parts);
        self.push(v, Op::ConcatCols(parts.to_vec()), rg)
    }

    pub fn transpose(&mut self, a: NodeId) -> NodeId {
        let v = self.value(a).t().to_owned();
        let rg = self.rg(&[a]);
        self.push(v, Op::Transpose(a), rg)
    }

    /// Stride-2 average pooling over rows; an odd trailing row is kept as is.
    pub fn pool_rows2(&mut self, a: NodeId) -> NodeId {
        let x = self.value(a);
        let t = x.nrows();
        let out_t = t.div_ceil(2);
        let mut v = Mat::zeros((out_t, x.ncols()));
        for i in 0..out_t {
            let lo = 2 * i;
            let hi = (2 * i + 2).min(t);
            let k = (hi - lo) as f64;
            let mean = x.slice(s![lo..hi, ..]).sum_axis(Axis(0)) / k;
            v.row_mut(i).assign(&mean);
        }
        let rg = self.rg(&[a]);
        self.push(v, Op::PoolRows2(a), rg)
    }

    /// Nearest-neighbour unpooling back to `target_len` rows.
    pub fn unpool_rows2(&mut self, a: NodeId, target_len: usize) -> NodeId {
        let x = self.value(a);
        let mut v = Mat::zeros((target_len, x.ncols()));
        for t in 0..target_len {
            v.row_mut(t).assign(&x.row(t / 2));
        }
        let rg = self.rg(&[a]);
        self.push(v, Op::UnpoolRows2(a), rg)
    }

    /// Reverse sweep from the scalar node `out`.
    pub fn backward(&self, out: NodeId) -> Grads {
        assert_eq!(self.shape(out), (1, 1), "backward needs a scalar output");
        let mut grads: Vec<Option<Mat>> = vec![None; self.nodes.len()];
        grads[out.0] = Some(Mat::from_elem((1, 1), 1.0));
        for i in (0..=out.0).rev() {
            let node = &self.nodes[i];
            if !node.requires_grad {
                continue;
            }
            let Some(g) = grads[i].take() else { continue };
            self.propagate(i, &g, &mut grads);
            grads[i] = Some(g);
        }
        Grads { grads }
    }

    fn accumulate(&self, grads: &mut [Option<Mat>], id: NodeId, g: Mat) {
        if !self.nodes[id.0].requires_grad {
            return;
        }
        match &mut grads[id.0] {
            Some(acc) => *acc += &g,
            slot @ None => *slot = Some(g),
        }
    }

    fn propagate(&self, i: usize, g: &Mat, grads: &mut [Option<Mat>]) {
        let y = &self.nodes[i].value;
        match &self.nodes[i].op {
            Op::Leaf => {}
            Op::MatMul(a, b) => {
                let (av, bv) = (self.value(*a), self.value(*b));
                self.accumulate(grads, *a, g.dot(&bv.t()));
                self.accumulate(grads, *b, av.t().dot(g));
            }
            Op::MatMulT(a, b) => {
                let (av, bv) = (self.value(*a), self.value(*b));
                self.accumulate(grads, *a, g.dot(bv));
                self.accumulate(grads, *b, g.t().dot(av));
            }
            Op::Add(a, b) => {
                self.accumulate(grads, *a, g.clone());
                self.accumulate(grads, *b, g.clone());
            }
            Op::Sub(a, b) => {
                self.accumulate(grads, *a, g.clone());
                self.accumulate(grads, *b, -g);
            }
            Op::Mul(a, b) => {
                self.accumulate(grads, *a, g * self.value(*b));
                self.accumulate(grads, *b, g * self.value(*a));
            }
            Op::AddRow(a, r) => {
                self.accumulate(grads, *a, g.clone());
                self.accumulate(grads, *r, g.sum_axis(Axis(0)).insert_axis(Axis(0)));
            }
            Op::MulRow(a, r) => {
                self.accumulate(grads, *a, g * self.value(*r));
                let gr = (g * self.value(*a)).sum_axis(Axis(0)).insert_axis(Axis(0));
                self.accumulate(grads, *r, gr);
            }
            Op::Scale(a, k) => self.accumulate(grads, *a, g * *k),
            Op::AddScalar(a) => self.accumulate(grads, *a, g.clone()),
            Op::Relu(a) => {
                let mut d = g.clone();
                Zip::from(&mut d)
                    .and(self.value(*a))
                    .for_each(|d, &x| if x <= 0.0 { *d = 0.0 });
                self.accumulate(grads, *a, d);
            }
            Op::Tanh(a) => {
                let mut d = g.clone();
                Zip::from(&mut d).and(y).for_each(|d, &y| *d *= 1.0 - y * y);
                self.accumulate(grads, *a, d);
            }
            Op::Exp(a) => self.accumulate(grads, *a, g * y),
            Op::Abs(a) => {
                let d = g * &self.value(*a).mapv(sign);
                self.accumulate(grads, *a, d);
            }
            Op::Square(a) => self.accumulate(grads, *a, g * &(self.value(*a) * 2.0)),
            Op::Clamp(a, lo, hi) => {
                let mut d = g.clone();
                Zip::from(&mut d).and(self.value(*a)).for_each(|d, &x| {
                    if x < *lo || x > *hi {
                        *d = 0.0;
                    }
                });
                self.accumulate(grads, *a, d);
            }
            Op::SoftmaxRows(a) => {
                let mut d = g * y;
                let dots = d.sum_axis(Axis(1));
                for (mut row, (yr, dot)) in d.rows_mut().into_iter().zip(y.rows().into_iter().zip(dots.iter())) {
                    Zip::from(&mut row).and(&yr).for_each(|d, &y| *d -= y * dot);
                }
                self.accumulate(grads, *a, d);
            }
            Op::LogSoftmaxRows(a) => {
                let sums = g.sum_axis(Axis(1));
                let mut d = g.clone();
                for ((mut row, yr), s) in d.rows_mut().into_iter().zip(y.rows()).zip(sums.iter()) {
                    Zip::from(&mut row).and(&yr).for_each(|d, &y| *d -= y.exp() * s);
                }
                self.accumulate(grads, *a, d);
            }
            Op::LayerNormRows { x, inv_std } => {
                let n = y.ncols() as f64;
                let mut d = g.clone();
                for (t, mut row) in d.rows_mut().into_iter().enumerate() {
                    let yr = y.row(t);
                    let mean_g = row.sum() / n;
                    let mean_gy = row.iter().zip(yr.iter()).map(|(a, b)| a * b).sum::<f64>() / n;
                    let is = inv_std[t];
                    Zip::from(&mut row)
                        .and(&yr)
                        .for_each(|d, &yh| *d = is * (*d - mean_g - yh * mean_gy));
                }
                self.accumulate(grads, *x, d);
            }
            Op::L2NormalizeRows { x, norms, eps } => {
                let xv = self.value(*x);
                let mut d = g.clone();
                for (t, mut row) in d.rows_mut().into_iter().enumerate() {
                    let r = norms[t];
                    let n = if r < *eps { r + eps } else { r };
                    let xr = xv.row(t);
                    let dot = row.iter().zip(xr.iter()).map(|(a, b)| a * b).sum::<f64>();
                    let k = if r > 0.0 { dot / (n * n * r) } else { 0.0 };
                    Zip::from(&mut row).and(&xr).for_each(|d, &x| *d = *d / n - x * k);
                }
                self.accumulate(grads, *x, d);
            }
            Op::SumAll(a) => {
                let shape = self.shape(*a);
                self.accumulate(grads, *a, Mat::from_elem(shape, g[[0, 0]]));
            }
            Op::MeanAll(a) => {
                let shape = self.shape(*a);
                let k = g[[0, 0]] / (shape.0 * shape.1) as f64;
                self.accumulate(grads, *a, Mat::from_elem(shape, k));
            }
            Op::MeanCols(a) => {
                let (rows, cols) = self.shape(*a);
                let mut d = Mat::zeros((rows, cols));
                for t in 0..rows {
                    d.row_mut(t).fill(g[[t, 0]] / cols as f64);
                }
                self.accumulate(grads, *a, d);
            }
            Op::SliceRows(a, start) => {
                let mut d = Mat::zeros(self.shape(*a));
                d.slice_mut(s![*start..*start + g.nrows(), ..]).assign(g);
                self.accumulate(grads, *a, d);
            }
            Op::SliceCols(a, start) => {
                let mut d = Mat::zeros(self.shape(*a));
                d.slice_mut(s![.., *start..*start + g.ncols()]).assign(g);
                self.accumulate(grads, *a, d);
            }
            Op::ConcatCols(parts) => {
                let mut col = 0;
                for p in parts {
                    let w = self.shape(*p).1;
                    self.accumulate(grads, *p, g.slice(s![.., col..col + w]).to_owned());
                    col += w;
                }
            }
            Op::Transpose(a) => self.accumulate(grads, *a, g.t().to_owned()),
            Op::PoolRows2(a) => {
                let (t, cols) = self.shape(*a);
                let mut d = Mat::zeros((t, cols));
                for i in 0..g.nrows() {
                    let lo = 2 * i;
                    let hi = (2 * i + 2).min(t);
                    let k = (hi - lo) as f64;
                    for r in lo..hi {
                        d.row_mut(r).scaled_add(1.0 / k, &g.row(i));
                    }
                }
                self.accumulate(grads, *a, d);
            }
            Op::UnpoolRows2(a) => {
                let mut d = Mat::zeros(self.shape(*a));
                for t in 0..g.nrows() {
                    d.row_mut(t / 2).scaled_add(1.0, &g.row(t));
                }
                self.accumulate(grads, *a, d);
            }
        }
    }
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

pub fn softmax_rows(x: &Mat) -> Mat {
    let mut v = x.clone();
    for mut row in v.rows_mut() {
        let m = row.fold(f64::NEG_INFINITY, |acc, &x| acc.max(x));
        row.mapv_inplace(|x| (x - m).exp());
        let s = row.sum();
        row.mapv_inplace(|x| x / s);
    }
    v
}

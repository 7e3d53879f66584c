//! Gauss-Legendre rules and a globally adaptive panel integrator.
//!
//! Each panel is integrated with a high-order rule and a half-order
//! companion; their difference is the panel's error estimate. The panel with
//! the largest estimate is bisected until the summed estimate falls below
//! `rel_tol` times the L1 norm of the integrand over the whole range.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// An `N`-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre<const N: usize> {
    nodes: [f64; N],
    weights: [f64; N],
}

impl<const N: usize> GaussLegendre<N> {
    /// Nodes by Newton iteration on P_N from the Tricomi initial guesses.
    pub fn new() -> Self {
        assert!(N > 0);
        let mut nodes = [0.0; N];
        let mut weights = [0.0; N];
        let n = N as f64;
        for i in 0..N.div_ceil(2) {
            let mut z = libm::cos(PI * (i as f64 + 0.75) / (n + 0.5));
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(N, z);
                let step = p / dp;
                z -= step;
                if step.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(N, z);
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[N - 1 - i] = z;
            weights[i] = w;
            weights[N - 1 - i] = w;
        }
        if N % 2 == 1 {
            nodes[N / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64; N] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64; N] {
        &self.weights
    }

    /// Returns (∫f, ∫|f|) over [a, b].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> (f64, f64) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        let mut abs = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = w * f(mid + half * x);
            sum += v;
            abs += v.abs();
        }
        (sum * half, abs * half.abs())
    }
}

impl<const N: usize> Default for GaussLegendre<N> {
    fn default() -> Self {
        Self::new()
    }
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
    }
    let dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
    (p1, dp)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// ∫|f|, the scale the relative tolerance refers to.
    pub l1_norm: f64,
    /// Summed absolute error estimate.
    pub error: f64,
    pub panels: usize,
}

impl Integral {
    pub fn relative_error(&self) -> f64 {
        if self.l1_norm > 0.0 {
            self.error / self.l1_norm
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    abs: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // Largest error first; ties broken by position so the refinement order is deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Adaptive integrator pairing an `H`-point rule with an `L`-point estimator.
#[derive(Debug, Clone)]
pub struct AdaptiveQuadrature<const H: usize, const L: usize> {
    high: GaussLegendre<H>,
    low: GaussLegendre<L>,
    pub max_panels: usize,
}

impl<const H: usize, const L: usize> AdaptiveQuadrature<H, L> {
    pub fn new(max_panels: usize) -> Self {
        Self {
            high: GaussLegendre::new(),
            low: GaussLegendre::new(),
            max_panels,
        }
    }

    fn panel<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> Panel {
        let (value, abs) = self.high.integrate(f, a, b);
        let (coarse, _) = self.low.integrate(f, a, b);
        Panel {
            a,
            b,
            value,
            abs,
            err: (value - coarse).abs(),
        }
    }

    /// Integrates `f` over consecutive intervals of the sorted `breakpoints`.
    pub fn integrate<F: Fn(f64) -> f64>(
        &self,
        f: &F,
        breakpoints: &[f64],
        rel_tol: f64,
    ) -> Result<Integral> {
        let mut heap = BinaryHeap::with_capacity(breakpoints.len() + 16);
        let mut total_err = 0.0;
        let mut total_abs = 0.0;
        for w in breakpoints.windows(2) {
            if w[1] > w[0] {
                let p = self.panel(f, w[0], w[1]);
                total_err += p.err;
                total_abs += p.abs;
                heap.push(p);
            }
        }

        while total_err > rel_tol * total_abs {
            if heap.len() >= self.max_panels {
                return Err(Error::Quadrature {
                    panels: heap.len(),
                    estimate: total_err / total_abs,
                });
            }
            let worst = match heap.pop() {
                Some(p) => p,
                None => break,
            };
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // Panel cannot be split in floating point.
                return Err(Error::Quadrature {
                    panels: heap.len() + 1,
                    estimate: total_err / total_abs,
                });
            }
            let left = self.panel(f, worst.a, mid);
            let right = self.panel(f, mid, worst.b);
            total_err += left.err + right.err - worst.err;
            total_abs += left.abs + right.abs - worst.abs;
            heap.push(left);
            heap.push(right);
        }

        let mut panels: Vec<Panel> = heap.into_vec();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let mut out = Integral {
            value: 0.0,
            l1_norm: 0.0,
            error: 0.0,
            panels: panels.len(),
        };
        for p in &panels {
            out.value += p.value;
            out.l1_norm += p.abs;
            out.error += p.err;
        }
        Ok(out)
    }
}

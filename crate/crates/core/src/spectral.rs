//! Q-index computation via two independent routes.
//!
//! [`qindex`] runs power iteration on `Q(G)`. For a connected graph with at
//! least two vertices every degree is positive, so `Q` is an irreducible
//! non-negative matrix with positive diagonal, hence primitive, and the
//! iteration converges to the Perron pair without any shift. [`full_spectrum`]
//! is the cross-validation oracle: cyclic Jacobi rotations on an independent
//! code path, sharing nothing with the power iteration beyond the assembled
//! matrix.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::matrix::{signless_laplacian, QMatrix};

/// Default convergence tolerance for [`qindex`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// Iteration cap for the power method.
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
pub const JACOBI_OFF_NORM: f64 = 1e-12;

/// Largest eigenvalue estimate together with its unit Perron eigenvector.
#[derive(Clone, Debug)]
pub struct PerronResult {
    /// Estimate of the Q-index `q(G)`.
    pub q: f64,
    /// Unit eigenvector; entrywise positive for connected graphs.
    pub vector: Vec<f64>,
    /// `‖Qx - qx‖₂` at termination.
    pub residual: f64,
    pub iterations: usize,
}

/// Q-index and Perron eigenvector of a connected graph by power iteration
/// from the all-ones vector.
///
/// Terminates once successive Rayleigh quotients differ by less than `tol`
/// and the residual is below `sqrt(tol)`; for a symmetric matrix the Rayleigh
/// quotient is then within `tol` of the true maximum eigenvalue (residual² /
/// spectral gap). Disconnected input is rejected rather than handled
/// per-component, since Perron positivity is what downstream eigenvector
/// comparisons rely on.
pub fn qindex<G: Graph + ?Sized>(g: &G, tol: f64) -> Result<PerronResult> {
    // written negated so a NaN tolerance is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let q = signless_laplacian(g);
    let n = q.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut prev_rq = f64::NEG_INFINITY;
    let residual_cap = tol.sqrt();

    for it in 1..=MAX_ITERATIONS {
        q.matvec_into(&x, &mut y);
        // x stays unit; the Rayleigh quotient is x·y
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual: f64 = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - rq * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if (rq - prev_rq).abs() < tol && residual < residual_cap {
            return Ok(PerronResult {
                q: rq,
                vector: x,
                residual,
                iterations: it,
            });
        }
        prev_rq = rq;
        let norm: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // Q is the zero matrix (a single isolated vertex): q = 0 exactly.
            return Ok(PerronResult {
                q: 0.0,
                vector: x,
                residual: 0.0,
                iterations: it,
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }

    q.matvec_into(&x, &mut y);
    let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    let residual: f64 = x
        .iter()
        .zip(&y)
        .map(|(xi, yi)| (yi - rq * xi).powi(2))
        .sum::<f64>()
        .sqrt();
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        last: Box::new(PerronResult {
            q: rq,
            vector: x,
            residual,
            iterations: MAX_ITERATIONS,
        }),
    })
}

/// All eigenvalues of `Q(G)` in descending order, by cyclic Jacobi rotations
/// run until the off-diagonal Frobenius norm drops below
/// [`JACOBI_OFF_NORM`].
pub fn full_spectrum<G: Graph + ?Sized>(g: &G) -> Vec<f64> {
    let q = signless_laplacian(g);
    jacobi_eigenvalues(q)
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i][j] * a[i][j];
        }
    }
    s.sqrt()
}

fn jacobi_eigenvalues(q: QMatrix) -> Vec<f64> {
    let n = q.n();
    let mut a = q.to_rows();
    if n > 1 {
        // quadratic convergence; a handful of sweeps suffices at this scale
        for _sweep in 0..100 {
            if off_diagonal_norm(&a) < JACOBI_OFF_NORM {
                break;
            }
            for p in 0..n - 1 {
                for r in p + 1..n {
                    let apq = a[p][r];
                    if apq == 0.0 {
                        continue;
                    }
                    let theta = (a[r][r] - a[p][p]) / (2.0 * apq);
                    let t = if theta >= 0.0 {
                        1.0 / (theta + (theta * theta + 1.0).sqrt())
                    } else {
                        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                    };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    // rotate rows/columns p and r
                    for j in 0..n {
                        let ajp = a[j][p];
                        let ajr = a[j][r];
                        a[j][p] = c * ajp - s * ajr;
                        a[j][r] = s * ajp + c * ajr;
                    }
                    for j in 0..n {
                        let apj = a[p][j];
                        let arj = a[r][j];
                        a[p][j] = c * apj - s * arj;
                        a[r][j] = s * apj + c * arj;
                    }
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eigs
}

/// The edge form of the quadratic form: `xᵀQx = Σ_{uv ∈ E} (x_u + x_v)²`.
pub fn quadratic_form_edges<G: Graph + ?Sized>(g: &G, x: &[f64]) -> f64 {
    g.edges()
        .into_iter()
        .map(|(u, v)| (x[u] + x[v]).powi(2))
        .sum()
}

/// Rayleigh quotient `xᵀQx / xᵀx`.
///
/// The numerator is evaluated both through the assembled matrix and through
/// the edge sum; the two routes must agree to 1e-12 (relative at large
/// magnitudes), which guards the matrix assembly against the edge set.
pub fn rayleigh<G: Graph + ?Sized>(g: &G, x: &[f64]) -> Result<f64> {
    let norm_sq: f64 = x.iter().map(|v| v * v).sum();
    if norm_sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = signless_laplacian(g);
    let via_matrix = q.quadratic_form(x);
    let via_edges = quadratic_form_edges(g, x);
    let scale = via_matrix.abs().max(1.0);
    assert!(
        (via_matrix - via_edges).abs() <= 1e-12 * scale,
        "quadratic-form routes disagree: {via_matrix} vs {via_edges}"
    );
    Ok(via_matrix / norm_sq)
}

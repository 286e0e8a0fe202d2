//! Dense symmetric storage for the signless Laplacian `Q(G) = D(G) + A(G)`.
//!
//! Orders stay in the hundreds at most, so a dense row-major buffer keeps both
//! eigensolvers simple and cache-friendly.

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    n: usize,
    data: Vec<f64>,
}

impl QMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `y = Qx`, writing into `y`.
    pub fn matvec_into(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        self.matvec_into(x, &mut y);
        y
    }

    /// The quadratic form `xᵀQx`, evaluated through the matrix entries.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let y = self.matvec(x);
        y.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

/// Assembles `Q(G) = D(G) + A(G)`: diagonal entry `i` is the degree of vertex
/// `i`, off-diagonal `(i, j)` is 1 iff `v_i ~ v_j`. Entry order of the edge
/// set cannot influence the result since each edge touches disjoint cells.
pub fn signless_laplacian<G: Graph + ?Sized>(g: &G) -> QMatrix {
    let n = g.order();
    let mut data = vec![0.0; n * n];
    for (a, b) in g.edges() {
        data[a * n + b] = 1.0;
        data[b * n + a] = 1.0;
        data[a * n + a] += 1.0;
        data[b * n + b] += 1.0;
    }
    QMatrix { n, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{CycleGraph, GeneralGraph};

    #[test]
    fn k2_matrix() {
        let k2 = GeneralGraph::new(2, [(0, 1)]).unwrap();
        let q = signless_laplacian(&k2);
        assert_eq!(q.to_rows(), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
    }

    #[test]
    fn c4_matrix() {
        let c4 = CycleGraph::new(4, []).unwrap();
        let q = signless_laplacian(&c4);
        for i in 0..4 {
            assert_eq!(q.get(i, i), 2.0);
        }
        assert_eq!(q.get(0, 1), 1.0);
        assert_eq!(q.get(0, 2), 0.0);
        assert_eq!(q.get(0, 3), 1.0);
    }

    #[test]
    fn fan6_diagonal_and_row_sums() {
        let fan = crate::families::fan(6).unwrap();
        let q = signless_laplacian(&fan);
        let diag: Vec<f64> = (0..6).map(|i| q.get(i, i)).collect();
        assert_eq!(diag, vec![5.0, 2.0, 3.0, 3.0, 3.0, 2.0]);
        // row sum of off-diagonal entries equals the diagonal; trace is 2m
        for i in 0..6 {
            let off: f64 = (0..6).filter(|&j| j != i).map(|j| q.get(i, j)).sum();
            assert_eq!(off, q.get(i, i));
        }
        assert_eq!(q.trace(), 18.0);
    }
}

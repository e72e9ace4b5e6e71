//! ADE graphs as SU(2) module categories.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_core::{build_lie_data, Family, LieType};
use crate::numeric::{Precision, Real};

/// A simply-laced Dynkin diagram viewed as the fusion graph of an SU(2)
/// module category at level `γ - 2`.
///
/// Vertices are ordered from the end of the longest arm (the unit `0̲`, at
/// index 0) towards the branch point, then along the next arm outwards, with
/// the vertex of the shortest branch last.
#[derive(Clone, Debug, Serialize)]
pub struct AdeGraph {
    pub lie_type: LieType,
    pub adjacency: Vec<Vec<i64>>,
    pub coxeter: u32,
    /// `ν = γ - 2`, the SU(2) level.
    pub level: u32,
    pub distinguished_vertex: usize,
    /// Bourbaki label (1-based) of each vertex.
    pub bourbaki_labels: Vec<usize>,
}

/// Bourbaki labels in graph-vertex order.
fn vertex_order(t: LieType) -> Vec<usize> {
    let r = t.rank;
    match (t.family, r) {
        (Family::E, 6) => vec![1, 3, 4, 5, 6, 2],
        (Family::E, 7) => vec![7, 6, 5, 4, 3, 1, 2],
        (Family::E, 8) => vec![8, 7, 6, 5, 4, 3, 1, 2],
        _ => (1..=r).collect(),
    }
}

impl AdeGraph {
    pub fn new(t: LieType) -> Result<Self> {
        if !t.is_simply_laced() {
            return Err(Error::InvalidArgument(format!("{t} is not simply laced")));
        }
        let data = build_lie_data(t)?;
        let labels = vertex_order(t);
        let adjacency = labels
            .iter()
            .map(|&a| {
                labels
                    .iter()
                    .map(|&b| i64::from(a == b) * 2 - data.cartan[a - 1][b - 1])
                    .collect()
            })
            .collect();
        Ok(AdeGraph {
            lie_type: t,
            adjacency,
            coxeter: data.coxeter,
            level: data.coxeter - 2,
            distinguished_vertex: 0,
            bourbaki_labels: labels,
        })
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    fn check_vertex(&self, a: usize) -> Result<()> {
        if a >= self.len() {
            return Err(Error::InvalidArgument(format!(
                "vertex {a} out of range for {} (0..{})",
                self.lie_type,
                self.len()
            )));
        }
        Ok(())
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// `F_0 = I`, `F_1 = G`, `F_n = F_{n-1} G - F_{n-2}` for `n = 0..=n_max`.
pub fn annular_matrices(graph: &AdeGraph, n_max: usize) -> Vec<Vec<Vec<i64>>> {
    let n = graph.len();
    let identity: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut out = vec![identity];
    if n_max >= 1 {
        out.push(graph.adjacency.clone());
    }
    for m in 2..=n_max {
        let prod = mat_mul(&out[m - 1], &graph.adjacency);
        let next = prod
            .iter()
            .zip(&out[m - 2])
            .map(|(p, q)| p.iter().zip(q).map(|(x, y)| x - y).collect())
            .collect();
        out.push(next);
    }
    out
}

/// `(E_a)_{nb} = (F_n)_{ab}` for `n = 0..=ν`.
pub fn essential_matrix(graph: &AdeGraph, a: usize) -> Result<Vec<Vec<i64>>> {
    graph.check_vertex(a)?;
    let f = annular_matrices(graph, graph.level as usize);
    Ok(f.iter().map(|fm| fm[a].clone()).collect())
}

/// Perron-Frobenius eigenvector of the adjacency matrix, normalized to 1 at
/// the unit vertex, and the eigenvalue residue `max |(G v - λ v)_i|`.
pub fn module_quantum_dims(graph: &AdeGraph, prec: Precision) -> (Vec<Real>, Real) {
    let n = graph.len();
    let lambda = Real::from_i64(2, prec) * (Real::pi(prec) / Real::from_i64(graph.coxeter as i64, prec)).cos();
    let entry = |i: usize, j: usize| -> Real {
        let g = Real::from_i64(graph.adjacency[i][j], prec);
        if i == j {
            g - &lambda
        } else {
            g
        }
    };
    let v0 = graph.distinguished_vertex;
    let unknowns: Vec<usize> = (0..n).filter(|&j| j != v0).collect();
    // (G - λ) v = 0 with v_{v0} = 1: n equations, n - 1 unknowns
    let mut rows: Vec<Vec<Real>> = (0..n)
        .map(|i| {
            let mut row: Vec<Real> = unknowns.iter().map(|&j| entry(i, j)).collect();
            row.push(-entry(i, v0));
            row
        })
        .collect();
    let m = unknowns.len();
    for col in 0..m {
        let pivot = (col..n)
            .max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).expect("finite"))
            .expect("rows remain");
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            let pivot_row = rows[col].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
    }
    let mut v = vec![Real::one(prec); n];
    for (k, &j) in unknowns.iter().enumerate() {
        v[j] = rows[k][m].clone();
    }
    let residue = (0..n)
        .map(|i| {
            let gv: Real = (0..n).map(|j| Real::from_i64(graph.adjacency[i][j], prec) * &v[j]).sum();
            (gv - &lambda * &v[i]).abs()
        })
        .reduce(|a, b| a.max(&b))
        .expect("non-empty graph");
    (v, residue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_close;
    use crate::qnum::{q_number, QContext};
    use num_rational::Rational64;

    fn graph(s: &str) -> AdeGraph {
        AdeGraph::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn e8_order_and_adjacency() {
        let g = graph("E8");
        assert_eq!(g.bourbaki_labels, vec![8, 7, 6, 5, 4, 3, 1, 2]);
        assert_eq!(g.level, 28);
        // path 0-1-2-3-4-5-6 with 7 attached to 4
        let edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| (i + 1..8).map(move |j| (i, j)))
            .filter(|&(i, j)| g.adjacency[i][j] == 1)
            .collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 7), (5, 6)]);
    }

    #[test]
    fn non_simply_laced_rejected() {
        assert!(AdeGraph::new("B3".parse().unwrap()).is_err());
    }

    #[test]
    fn chebyshev_periodicity() {
        for s in ["A4", "D5", "E6", "E7", "E8"] {
            let g = graph(s);
            let period = 2 * g.coxeter as usize;
            let f = annular_matrices(&g, 2 * period);
            for n in 0..=period {
                assert_eq!(f[n + period], f[n], "{s} n={n}");
            }
        }
    }

    #[test]
    fn a_type_dims_are_q_numbers() {
        let g = graph("A6");
        let p = Precision::default();
        let (v, res) = module_quantum_dims(&g, p);
        assert!(res < Real::ten_pow_neg(40, p));
        let ctx = QContext::new(7, p).unwrap();
        for (i, x) in v.iter().enumerate() {
            let want = q_number(&ctx, Rational64::from_integer(i as i64 + 1));
            assert!(rel_close(x, &want, &Real::ten_pow_neg(30, p)));
        }
    }

    #[test]
    fn essential_row_zero_is_unit() {
        let g = graph("D5");
        let e = essential_matrix(&g, 0).unwrap();
        assert_eq!(e[0], vec![1, 0, 0, 0, 0]);
        assert!(essential_matrix(&g, 9).is_err());
    }
}

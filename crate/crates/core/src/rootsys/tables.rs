//! Dynkin data in Bourbaki numbering.
//!
//! | series | diagram (0-based nodes)            | `d_i`                         |
//! |--------|------------------------------------|-------------------------------|
//! | `A_n`  | chain `0-1-…-(n-1)`                | all 1                         |
//! | `B_n`  | chain, last node short             | 2,…,2,1                       |
//! | `C_n`  | chain, last node long              | 1,…,1,2                       |
//! | `D_n`  | chain to `n-2`, plus `(n-3)-(n-1)` | all 1                         |
//! | `E_n`  | `0-2-3-…-(n-1)`, plus `1-3`        | all 1                         |
//! | `F_4`  | chain, nodes 0,1 long              | 2,2,1,1                       |
//! | `G_2`  | `0-1`, node 1 long                 | 1,3                           |
//!
//! The symmetrized form is `(α_i,α_i) = 2d_i` and `(α_i,α_j) = -max(d_i,d_j)`
//! on edges; the Cartan matrix is `a_ij = (α_i,α_j)/d_i`.

use alloc::vec;
use alloc::vec::Vec;

use super::{LieType, Series};

pub(crate) struct Diagram {
    pub symmetrizers: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub(crate) fn diagram(t: LieType) -> Diagram {
    let n = t.rank();
    match t.series() {
        Series::A => Diagram { symmetrizers: vec![1; n], edges: chain(n) },
        Series::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            Diagram { symmetrizers: d, edges: chain(n) }
        }
        Series::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            Diagram { symmetrizers: d, edges: chain(n) }
        }
        Series::D => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            Diagram { symmetrizers: vec![1; n], edges }
        }
        Series::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((3..n).map(|i| (i - 1, i)));
            Diagram { symmetrizers: vec![1; n], edges }
        }
        Series::F => Diagram { symmetrizers: vec![2, 2, 1, 1], edges: chain(4) },
        Series::G => Diagram { symmetrizers: vec![1, 3], edges: chain(2) },
    }
}

/// Symmetrized Gram matrix `(α_i,α_j)` of the simple roots.
pub(crate) fn root_form(t: LieType) -> (Vec<i64>, Vec<Vec<i64>>) {
    let Diagram { symmetrizers: d, edges } = diagram(t);
    let n = d.len();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        b[i][i] = 2 * d[i];
    }
    for (i, j) in edges {
        let v = -d[i].max(d[j]);
        b[i][j] = v;
        b[j][i] = v;
    }
    (d, b)
}

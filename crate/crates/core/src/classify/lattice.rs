//! Integer row reduction for finitely generated subgroups of `ℚ^P × ℤ`.

use alloc::vec::Vec;

pub(crate) type Row = Vec<i128>;

/// Reduces `rows` so that at most one has a nonzero entry in `col`, by
/// unimodular row operations (Euclid on that column). Returns the pivot row,
/// with a positive entry, if any row was nonzero there.
pub(crate) fn eliminate_column(rows: &mut Vec<Row>, col: usize) -> Option<Row> {
    loop {
        let mut nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
        if nz.is_empty() {
            return None;
        }
        nz.sort_by_key(|&r| rows[r][col].abs());
        let p = nz[0];
        if nz.len() == 1 {
            let mut pivot = rows.swap_remove(p);
            if pivot[col] < 0 {
                pivot.iter_mut().for_each(|v| *v = -*v);
            }
            return Some(pivot);
        }
        let pivot = rows[p].clone();
        for &r in &nz[1..] {
            let f = rows[r][col].div_euclid(pivot[col]);
            for (v, pv) in rows[r].iter_mut().zip(&pivot) {
                *v -= f * pv;
            }
        }
    }
}

/// Row echelon basis of the lattice spanned by `rows` (zero rows dropped).
pub(crate) fn echelon(mut rows: Vec<Row>) -> Vec<Row> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut basis = Vec::new();
    for col in 0..width {
        if let Some(p) = eliminate_column(&mut rows, col) {
            basis.push(p);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn gcd_pivot() {
        let mut rows = vec![vec![4, 1], vec![6, 0], vec![0, 5]];
        let p = eliminate_column(&mut rows, 0).unwrap();
        assert_eq!(p[0], 2);
        assert!(rows.iter().all(|r| r[0] == 0));
    }

    #[test]
    fn echelon_rank() {
        let b = echelon(vec![vec![2, 4], vec![1, 2], vec![3, 6]]);
        assert_eq!(b, vec![vec![1, 2]]);
        let b = echelon(vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(b.len(), 2);
        assert!(echelon(vec![vec![0, 0]]).is_empty());
    }
}

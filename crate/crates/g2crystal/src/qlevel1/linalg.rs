//! Gaussian elimination over `Q(q)`.

use super::qrat::QRat;

/// A basis of `{x : rows * x = 0}` for `rows` with `n` columns.
pub fn nullspace(rows: &[Vec<QRat>], n: usize) -> Vec<Vec<QRat>> {
    let mut m: Vec<Vec<QRat>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&k| !m[k][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][col].inv();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![QRat::zero(); n];
            v[fc] = QRat::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[k][fc];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_kernel() {
        let q = QRat::q_pow(1);
        let rows = vec![vec![QRat::one(), -&q], vec![q.clone(), -&(&q * &q)]];
        let ns = nullspace(&rows, 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![q, QRat::one()]);
    }
}

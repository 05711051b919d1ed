use crate::arith::field::Field;

/// Solve an augmented system (`nvars` unknowns, right-hand side in the last
/// column); free variables are set to zero. `None` if inconsistent.
pub fn solve<F: Field>(mut rows: Vec<Vec<F>>, nvars: usize) -> Option<Vec<F>> {
    let pivots = echelon(&mut rows, nvars);
    for r in rows.iter().skip(pivots.len()) {
        if !r[nvars].is_zero() {
            return None;
        }
    }
    let mut x = vec![F::zero(); nvars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][nvars].clone();
    }
    Some(x)
}

/// Reduced row echelon form over the first `ncols` columns; returns pivot columns.
pub fn echelon<F: Field>(rows: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(pivot_row) {
                    *v = v.clone() - f.clone() * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    echelon(&mut rows, n).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, Rational};

    #[test]
    fn small_systems() {
        // x + y = 3, x - y = 1
        let rows: Vec<Vec<Rational>> = vec![vec![rat(1), rat(1), rat(3)], vec![rat(1), rat(-1), rat(1)]];
        assert_eq!(solve(rows, 2), Some(vec![rat(2), rat(1)]));
        let bad: Vec<Vec<Rational>> = vec![vec![rat(1), rat(1)], vec![rat(1), rat(2)]];
        assert_eq!(solve(bad, 1), None);
        assert_eq!(rank(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]), 1);
    }
}

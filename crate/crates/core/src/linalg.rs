//! Gauss-Jordan elimination over exact rationals.

use crate::exterior::Rational;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<Rational>>;

/// Solves `a x = b` for square `a`; `None` when `a` is singular.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    eliminate(&mut m, n)?;
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    eliminate(&mut m, n)?;
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

// reduces the left n×n block of `m` to the identity
fn eliminate(m: &mut Matrix, n: usize) -> Option<()> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Rational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_row = m[col].clone();
            for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                *x -= &factor * p;
            }
        }
    }
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{rat, ratio};

    #[test]
    fn solves_small_system() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let x = solve(&a, &[rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![
            vec![rat(0), rat(1), rat(2)],
            vec![rat(1), rat(0), rat(3)],
            vec![rat(4), rat(-3), rat(8)],
        ];
        let inv = inverse(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: Rational = (0..3).map(|k| &a[i][k] * &inv[k][j]).sum();
                assert_eq!(s, if i == j { rat(1) } else { rat(0) });
            }
        }
    }
}

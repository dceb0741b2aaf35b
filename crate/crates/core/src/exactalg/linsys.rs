use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A square system `matrix · v = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        let n = rhs.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Domain(format!("expected a {}x{} matrix for a right-hand side of length {}", n, n, n)));
        }
        Ok(LinearSystem { matrix, rhs })
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    /// `matrix · v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Clears denominators row by row so that elimination runs over the
/// integers.
fn integer_rows(sys: &LinearSystem) -> Vec<Vec<BigInt>> {
    sys.matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let l = row.iter().chain(std::iter::once(b)).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().chain(std::iter::once(b)).map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Solves a square system by fraction-free (Bareiss) elimination.
pub fn solve_exact(sys: &LinearSystem) -> Result<Vec<Rational>> {
    let n = sys.dim();
    let mut a = integer_rows(sys);
    let mut prev = BigInt::one();
    for k in 0..n {
        let piv = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(k, piv);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut s = Rational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            s -= Rational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = s / Rational::from_integer(a[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn sys(m: &[&[i64]], b: &[i64]) -> LinearSystem {
        LinearSystem::new(
            m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
            b.iter().map(|&x| int(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_exact(&sys(&[&[2, 0], &[0, 3]], &[4, 9])).unwrap(), vec![int(2), int(3)]);
        assert_eq!(
            solve_exact(&sys(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[5, -1, 7])).unwrap(),
            vec![int(5), int(-1), int(7)]
        );
        assert_eq!(solve_exact(&sys(&[&[1, 1], &[1, 1]], &[1, 2])), Err(Error::SingularSystem));
    }

    #[test]
    fn needs_pivoting_and_fractions() {
        let s =
            LinearSystem::new(vec![vec![int(0), rat(1, 2)], vec![rat(2, 3), int(1)]], vec![int(1), int(0)]).unwrap();
        let v = solve_exact(&s).unwrap();
        assert_eq!(s.apply(&v), s.rhs);
        assert_eq!(v, vec![int(-3), int(2)]);
    }

    #[test]
    fn empty_and_bad_shape() {
        assert_eq!(solve_exact(&LinearSystem::new(vec![], vec![]).unwrap()).unwrap(), vec![]);
        assert!(LinearSystem::new(vec![vec![int(1)]], vec![int(1), int(2)]).is_err());
    }
}

//! Dense matrices over exact rings, with fraction-free elimination.

use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> ExactMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: PartialEq> ExactMatrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Zero + One + Clone> ExactMatrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

/// Rings with a partial exact division: `a.div_exact(b)` returns `q` with
/// `q * b == a` when such `q` exists.
pub trait ExactDivision: Sized {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl ExactDivision for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl ExactDivision for BivariatePolynomial {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        BivariatePolynomial::div_exact(self, rhs)
    }
}

/// Determinant by Bareiss fraction-free elimination, with row swaps on zero pivots.
pub fn det_fraction_free<T>(m: &ExactMatrix<T>) -> Result<T>
where
    T: Clone + Zero + One + ExactDivision + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap(k, piv);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let num = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                row[j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Rank over ℚ. Rows are scaled to integers and reduced by fraction-free
/// elimination, which gives the same rank as elimination over the rationals.
pub fn rank_exact(m: &ExactMatrix<BigRational>) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    integer_rank(&mut a, m.cols)
}

fn integer_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            for j in col + 1..cols {
                let num = &pivot_row[col] * &row[j] - &row[col] * &pivot_row[j];
                row[j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn nullity_exact(m: &ExactMatrix<BigRational>) -> usize {
    m.cols - rank_exact(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> ExactMatrix<BigInt> {
        ExactMatrix::new(rows, cols, v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn rat_matrix(rows: usize, cols: usize, v: &[i64]) -> ExactMatrix<BigRational> {
        int_matrix(rows, cols, v).map(|x| BigRational::from_integer(x.clone()))
    }

    #[test]
    fn symbolic_two_by_two() {
        let d = BivariatePolynomial::delta();
        let a = BivariatePolynomial::alpha();
        let m = ExactMatrix::new(2, 2, vec![d.clone(), a.clone(), a.clone(), d.clone()]).unwrap();
        assert_eq!(det_fraction_free(&m).unwrap(), &(&d * &d) - &(&a * &a));
    }

    #[test]
    fn identity_determinant() {
        let m = ExactMatrix::<BivariatePolynomial>::identity(4);
        assert_eq!(det_fraction_free(&m).unwrap(), BivariatePolynomial::one());
    }

    #[test]
    fn zero_leading_pivot() {
        let m = int_matrix(3, 3, &[0, 2, 1, 1, 0, 3, 4, 1, 0]);
        // cofactor expansion along the first row: -2(0-12) + 1(1-0) = 25
        assert_eq!(det_fraction_free(&m).unwrap(), BigInt::from(25));
    }

    #[test]
    fn singular_is_zero() {
        let m = int_matrix(3, 3, &[1, 2, 3, 2, 4, 6, 0, 0, 0]);
        assert_eq!(det_fraction_free(&m).unwrap(), BigInt::zero());
    }

    #[test]
    fn non_square_rejected() {
        let m = int_matrix(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(
            det_fraction_free(&m),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&rat_matrix(2, 2, &[1, 1, 1, 1])), 1);
        assert_eq!(rank_exact(&rat_matrix(3, 3, &[0; 9])), 0);
        // rows r1, r2, r1, r2 with r1, r2 independent
        let m = rat_matrix(4, 4, &[1, 2, 0, 5, 0, 3, 7, 1, 1, 2, 0, 5, 0, 3, 7, 1]);
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(nullity_exact(&m), 2);
    }

    #[test]
    fn rank_with_fractions_and_skipped_columns() {
        let h = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let m = ExactMatrix::new(
            3,
            4,
            vec![
                h(0, 1),
                h(1, 2),
                h(1, 3),
                h(0, 1),
                h(0, 1),
                h(1, 4),
                h(1, 6),
                h(0, 1),
                h(0, 1),
                h(0, 1),
                h(0, 1),
                h(2, 7),
            ],
        )
        .unwrap();
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn symmetric_check() {
        assert!(int_matrix(2, 2, &[1, 5, 5, 2]).is_symmetric());
        assert!(!int_matrix(2, 2, &[1, 5, 4, 2]).is_symmetric());
    }
}

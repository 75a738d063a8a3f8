//! Word-sized prime fields and modular determinants for evaluation-based
//! identity testing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

/// Fixed primes just below `2^61, 2^60, …, 2^51` (largest prime under each power of two).
pub const PRIMES: [u64; 11] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    1_152_921_504_606_846_883, // 2^60 - 93
    576_460_752_303_423_433,   // 2^59 - 55
    288_230_376_151_711_717,   // 2^58 - 27
    144_115_188_075_855_859,   // 2^57 - 13
    72_057_594_037_927_931,    // 2^56 - 5
    36_028_797_018_963_913,    // 2^55 - 55
    18_014_398_509_481_951,    // 2^54 - 33
    9_007_199_254_740_881,     // 2^53 - 111
    4_503_599_627_370_449,     // 2^52 - 47
    2_251_799_813_685_119,     // 2^51 - 129
];

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let field = PrimeField { p: n };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = field.pow(w, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = field.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// ℤ/pℤ for a prime `p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn reduce(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        self.reduce(&BigInt::from(x))
    }
}

/// Determinant over ℤ/pℤ by Gaussian elimination.
pub fn det_modular(m: &ExactMatrix<u64>, p: u64) -> Result<u64> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let f = PrimeField::new(p)?;
    let n = m.rows();
    let mut a: Vec<u64> = m.data().iter().map(|&x| x % p).collect();
    let mut det = 1 % p;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return Ok(0);
        };
        if piv != col {
            for c in 0..n {
                a.swap(piv * n + c, col * n + c);
            }
            det = f.neg(det);
        }
        let pv = a[col * n + col];
        det = f.mul(det, pv);
        let inv = f.inv(pv);
        for r in col + 1..n {
            let factor = f.mul(a[r * n + col], inv);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let v = f.mul(factor, a[col * n + c]);
                a[r * n + c] = f.sub(a[r * n + c], v);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_primes_are_prime() {
        for (k, &p) in PRIMES.iter().enumerate() {
            assert!(is_prime(p), "{p}");
            assert!(p > 1 << 50);
            assert!(p < 1u64 << (61 - k as u32) && p > 1u64 << (60 - k as u32));
        }
    }

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        // Carmichael number and a strong pseudoprime to base 2
        assert!(!is_prime(561));
        assert!(!is_prime(2047));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn diag_mod_seven() {
        let m = ExactMatrix::new(2, 2, vec![2, 0, 0, 3]).unwrap();
        assert_eq!(det_modular(&m, 7).unwrap(), 6);
    }

    #[test]
    fn identity_has_unit_determinant() {
        let m = ExactMatrix::from_fn(5, 5, |i, j| u64::from(i == j));
        for p in PRIMES {
            assert_eq!(det_modular(&m, p).unwrap(), 1);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let m = ExactMatrix::from_fn(2, 3, |_, _| 1u64);
        assert!(matches!(det_modular(&m, 7), Err(Error::NotSquare { .. })));
        let m = ExactMatrix::from_fn(2, 2, |_, _| 1u64);
        assert_eq!(det_modular(&m, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn row_swap_flips_sign() {
        let m = ExactMatrix::new(2, 2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(det_modular(&m, 11).unwrap(), 10);
    }
}

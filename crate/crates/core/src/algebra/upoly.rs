//! Dense univariate polynomials over ℤ, used only to canonicalize rational
//! functions. Index `i` holds the coefficient of `x^i`; vectors are kept trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(p: &[BigInt]) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let c = c * sign;
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut a = primitive_part(a);
    let mut b = primitive_part(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(&pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact quotient `a / b` in ℤ[x]; caller guarantees divisibility.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Dense = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Dense {
        trim(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = p(&[-2, -1, 1]);
        let b = p(&[5, 8, 3]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(div_exact(&a, &p(&[1, 1])), p(&[-2, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), p(&[1]));
    }
}

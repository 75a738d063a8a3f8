//! The element obtained by resolving a closed curve that encircles all strands.
//!
//! The curve crosses every strand twice: on a lower row it passes over the
//! strands, on an upper row it passes under them. Each of the `2k` crossings is
//! resolved by the Kauffman relation into an `A` and an `A⁻¹` smoothing.

use std::collections::BTreeMap;

use super::tl::{PlanarMatching, TLElement};
use crate::algebra::{loop_value, LaurentScalar, RationalFunction};
use crate::error::Result;
use crate::guard;

pub const MAX_ENCIRCLE_K: usize = 4;

const N: usize = 0;
const E: usize = 1;
const S: usize = 2;
const W: usize = 3;

/// `−A^{2(k+1)} − A^{−2(k+1)}`, the expected eigenvalue on `f_k`.
pub fn encircle_eigenvalue(k: usize) -> LaurentScalar {
    let e = 2 * (k as i64 + 1);
    LaurentScalar::from_terms([(e, -1), (-e, -1)])
}

pub fn encircle(k: usize) -> Result<TLElement> {
    guard::check("k", k, 0, MAX_ENCIRCLE_K)?;
    let ends = 2 * k;
    // Crossing (col, row) has ports at ends + 4*(2*col + row) + dir.
    let port = |col: usize, row: usize, dir: usize| ends + 4 * (2 * col + row) + dir;
    let nodes = ends + 8 * k;
    let mut wire = vec![usize::MAX; nodes];
    let mut join = |a: usize, b: usize| {
        wire[a] = b;
        wire[b] = a;
    };
    for col in 0..k {
        join(col, port(col, 0, S));
        join(port(col, 0, N), port(col, 1, S));
        join(port(col, 1, N), 2 * k - 1 - col);
        if col + 1 < k {
            join(port(col, 0, E), port(col + 1, 0, W));
            join(port(col, 1, E), port(col + 1, 1, W));
        }
    }
    if k > 0 {
        join(port(0, 0, W), port(0, 1, W));
        join(port(k - 1, 0, E), port(k - 1, 1, E));
    }

    let crossings = 2 * k;
    let mut grouped: BTreeMap<(PlanarMatching, usize), LaurentScalar> = BTreeMap::new();
    for state in 0u32..(1 << crossings) {
        let mut smooth = vec![usize::MAX; nodes];
        let mut a_count = 0i64;
        for c in 0..crossings {
            let (col, row) = (c / 2, c % 2);
            let a_side = state >> c & 1 == 0;
            a_count += if a_side { 1 } else { -1 };
            // Row 0: the curve is over, so the A-smoothing joins N–W and S–E.
            // Row 1: the strand is over, so the A-smoothing joins N–E and S–W.
            let nw = (row == 0) == a_side;
            let pairs = if nw {
                [(N, W), (S, E)]
            } else {
                [(N, E), (S, W)]
            };
            for (x, y) in pairs {
                let (px, py) = (port(col, row, x), port(col, row, y));
                smooth[px] = py;
                smooth[py] = px;
            }
        }
        let mut partner = vec![usize::MAX; ends];
        let mut seen = vec![false; nodes];
        for start in 0..ends {
            if partner[start] != usize::MAX {
                continue;
            }
            seen[start] = true;
            let mut p = wire[start];
            while p >= ends {
                seen[p] = true;
                let q = smooth[p];
                seen[q] = true;
                p = wire[q];
            }
            seen[p] = true;
            partner[start] = p;
            partner[p] = start;
        }
        let mut loops = if k == 0 { 1 } else { 0 };
        for start in ends..nodes {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let q = smooth[p];
                seen[q] = true;
                p = wire[q];
            }
        }
        let d = PlanarMatching::new(k, partner)?;
        let entry = grouped.entry((d, loops)).or_default();
        *entry = &*entry + &LaurentScalar::monomial(1, a_count);
    }

    let mut out = TLElement::zero(k);
    for ((d, loops), c) in grouped {
        let c = &c * &loop_value().pow(loops as u32);
        out = out.add(&TLElement::term(d, RationalFunction::from(c)))?;
    }
    Ok(out)
}

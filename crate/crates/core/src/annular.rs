//! Chord diagrams in an annulus with `2n` marked points on the outer circle.
//!
//! A fixed segment `S` joins the outer circle, between `a_{2n}` and `a_1`, to
//! the inner circle. Each chord `(i, j)` with `i < j` either stays on the
//! `a_i … a_j` side of the core (`w = 0`) or runs around the other side and
//! crosses `S` exactly once (`w = 1`). In the universal cover of the annulus
//! a `w = 0` chord lifts to the segments `(i + 2nt, j + 2nt)` and a `w = 1`
//! chord to `(j + 2nt, i + 2n(t + 1))`; a diagram is non-crossing when no two
//! lifts interleave.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::guard;

pub const MAX_ENUMERATE_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chord {
    pub i: u32,
    pub j: u32,
    pub w: u8,
}

impl Chord {
    pub fn new(i: u32, j: u32, w: u8) -> Self {
        Self { i, j, w }
    }

    pub fn cuts(&self) -> bool {
        self.w == 1
    }

    /// Lift to the universal cover for translate `t`.
    pub fn lift(&self, n: usize, t: i64) -> (i64, i64) {
        let period = 2 * n as i64;
        let (i, j) = (self.i as i64, self.j as i64);
        if self.w == 0 {
            (i + period * t, j + period * t)
        } else {
            (j + period * t, i + period * (t + 1))
        }
    }
}

fn interleave((a, b): (i64, i64), (c, d): (i64, i64)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn chords_cross(n: usize, x: &Chord, y: &Chord) -> bool {
    let lx = x.lift(n, 0);
    (-2..=2).any(|t| interleave(lx, y.lift(n, t)))
}

/// Checks that `chords` is a perfect matching of `{1, …, 2n}` with `i < j` and
/// flags in `{0, 1}`, where `n = chords.len()`.
fn validate_matching(chords: &[Chord]) -> Result<()> {
    let n = chords.len();
    if n == 0 {
        return Err(Error::InvalidDiagram("no chords".into()));
    }
    let mut seen = vec![false; 2 * n + 1];
    for c in chords {
        if c.w > 1 {
            return Err(Error::InvalidDiagram(format!(
                "flag w={} not in {{0,1}}",
                c.w
            )));
        }
        if !(1 <= c.i && c.i < c.j && c.j as usize <= 2 * n) {
            return Err(Error::InvalidDiagram(format!(
                "chord ({}, {}) out of order or range",
                c.i, c.j
            )));
        }
        for p in [c.i, c.j] {
            if std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidDiagram(format!("point {p} used twice")));
            }
        }
    }
    Ok(())
}

/// Whether the flagged matching has pairwise non-interleaving lifts.
pub fn is_noncrossing(chords: &[Chord]) -> Result<bool> {
    validate_matching(chords)?;
    let n = chords.len();
    Ok(chords
        .iter()
        .enumerate()
        .all(|(k, x)| chords[k + 1..].iter().all(|y| !chords_cross(n, x, y))))
}

/// A basis diagram of the annulus; chords are stored sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnnularDiagram {
    chords: Vec<Chord>,
}

impl AnnularDiagram {
    pub fn new(mut chords: Vec<Chord>) -> Result<Self> {
        if !is_noncrossing(&chords)? {
            return Err(Error::InvalidDiagram("chords cross".into()));
        }
        chords.sort();
        Ok(Self { chords })
    }

    pub fn n(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// `c(b)`: number of chords crossing `S`.
    pub fn cut_crossings(&self) -> usize {
        self.chords.iter().filter(|c| c.cuts()).count()
    }

    /// The chord containing point `p` (1-based).
    pub fn chord_at(&self, p: u32) -> &Chord {
        self.chords
            .iter()
            .find(|c| c.i == p || c.j == p)
            .expect("every point lies on a chord")
    }

    /// Sort key: (partner of the smallest point, flag, partner of the next
    /// unmatched point, flag, …).
    pub fn canonical_key(&self) -> Vec<u32> {
        // chords sorted by i visit the points in exactly that order
        self.chords.iter().flat_map(|c| [c.j, c.w as u32]).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.chords).expect("chords serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let chords: Vec<Chord> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let d = Self::new(chords)?;
        if d.to_json() != s {
            return Err(Error::Parse(format!("non-canonical diagram JSON `{s}`")));
        }
        Ok(d)
    }
}

impl Ord for AnnularDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.canonical_key().cmp(&other.canonical_key()))
    }
}

impl PartialOrd for AnnularDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AnnularDiagram {
    /// `n=2;(1,2,w=0),(3,4,w=1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n())?;
        for (k, c) in self.chords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{},w={})", c.i, c.j, c.w)?;
        }
        Ok(())
    }
}

impl FromStr for AnnularDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed diagram text `{s}`"));
        let (head, body) = s.split_once(';').ok_or_else(bad)?;
        let n: usize = head
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(bad)?;
        let chords = body
            .split("),(")
            .map(|c| {
                let mut parts = c.split(',');
                let i = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let j = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let w = parts
                    .next()
                    .and_then(|w| w.strip_prefix("w="))
                    .ok_or_else(bad)?;
                let w = w.parse().map_err(|_| bad())?;
                if parts.next().is_some() {
                    return Err(bad());
                }
                Ok(Chord { i, j, w })
            })
            .collect::<Result<Vec<_>>>()?;
        if chords.len() != n {
            return Err(Error::SizeMismatch(format!(
                "n={n} but {} chords",
                chords.len()
            )));
        }
        let d = Self::new(chords)?;
        if d.to_string() != s {
            return Err(Error::Parse(format!("non-canonical diagram text `{s}`")));
        }
        Ok(d)
    }
}

/// All basis diagrams for `n`, in canonical order. There are `C(2n, n)` of them.
pub fn enumerate(n: usize) -> Result<Vec<AnnularDiagram>> {
    guard::check("n", n, 1, MAX_ENUMERATE_N)?;
    let mut out = Vec::new();
    let mut partner = vec![0u32; 2 * n + 1];
    let mut chords = Vec::with_capacity(n);
    extend(n, &mut partner, &mut chords, &mut out);
    Ok(out)
}

fn extend(n: usize, partner: &mut [u32], chords: &mut Vec<Chord>, out: &mut Vec<AnnularDiagram>) {
    let Some(p) = (1..=2 * n as u32).find(|&p| partner[p as usize] == 0) else {
        out.push(AnnularDiagram {
            chords: chords.clone(),
        });
        return;
    };
    // a chord must enclose an even number of points on either side
    for q in (p + 1..=2 * n as u32).step_by(2) {
        if partner[q as usize] != 0 {
            continue;
        }
        for w in 0..=1 {
            let c = Chord { i: p, j: q, w };
            if chords.iter().any(|x| chords_cross(n, x, &c)) {
                continue;
            }
            partner[p as usize] = q;
            partner[q as usize] = p;
            chords.push(c);
            extend(n, partner, chords, out);
            chords.pop();
            partner[p as usize] = 0;
            partner[q as usize] = 0;
        }
    }
}

/// `⟨b_i, b_j⟩ = α^m δ^t`: `m` non-trivial and `t` trivial circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairingValue {
    pub m: u32,
    pub t: u32,
}

impl PairingValue {
    pub fn to_polynomial(self) -> BivariatePolynomial {
        BivariatePolynomial::monomial(1, self.m, self.t)
    }
}

/// Winding contribution of traversing `c` starting from endpoint `from`.
fn winding_step(c: &Chord, from: u32) -> i64 {
    match (c.w, from == c.j) {
        (0, _) => 0,
        (_, true) => 1,
        (_, false) => -1,
    }
}

/// Glues `d1` to the inversion of `d2` and returns the winding number of every
/// closed loop, in order of each loop's smallest point.
pub fn trace_loops(d1: &AnnularDiagram, d2: &AnnularDiagram) -> Result<Vec<i64>> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch(format!(
            "pairing n={} with n={}",
            d1.n(),
            d2.n()
        )));
    }
    let n = d1.n();
    let mut visited = vec![false; 2 * n + 1];
    let mut loops = Vec::new();
    for start in 1..=2 * n as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut winding = 0;
        let mut p = start;
        loop {
            visited[p as usize] = true;
            let c1 = d1.chord_at(p);
            winding += winding_step(c1, p);
            let q = if c1.i == p { c1.j } else { c1.i };
            visited[q as usize] = true;
            let c2 = d2.chord_at(q);
            winding += winding_step(c2, q);
            p = if c2.i == q { c2.j } else { c2.i };
            if p == start {
                break;
            }
        }
        loops.push(winding);
    }
    Ok(loops)
}

pub fn pair(d1: &AnnularDiagram, d2: &AnnularDiagram) -> Result<PairingValue> {
    let loops = trace_loops(d1, d2)?;
    let m = loops.iter().filter(|&&w| w != 0).count() as u32;
    Ok(PairingValue {
        m,
        t: loops.len() as u32 - m,
    })
}

//! Temperley–Lieb diagrams and their linear combinations.
//!
//! A diagram on `k` strands matches `2k` boundary points of a rectangle. Points
//! are numbered in circular order: `0..k` along the bottom edge left to right,
//! then `k..2k` along the top edge right to left, so the top point at column
//! `i` has index `2k − 1 − i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{loop_value, RationalFunction};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    k: usize,
    partner: Vec<usize>,
}

impl PlanarMatching {
    /// Builds a diagram from its partner array, checking it is a non-crossing
    /// perfect matching.
    pub fn new(k: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != 2 * k {
            return Err(Error::InvalidDiagram(format!(
                "expected {} points, got {}",
                2 * k,
                partner.len()
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= 2 * k || q == p || partner[q] != p {
                return Err(Error::InvalidDiagram(format!(
                    "point {p} is not matched consistently"
                )));
            }
        }
        for (p, &q) in partner.iter().enumerate() {
            let (lo, hi) = (p.min(q), p.max(q));
            if (lo + 1..hi).any(|r| partner[r] < lo || partner[r] > hi) {
                return Err(Error::InvalidDiagram(format!(
                    "chord {lo}-{hi} crosses another"
                )));
            }
        }
        Ok(Self { k, partner })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            k,
            partner: (0..2 * k).map(|p| 2 * k - 1 - p).collect(),
        }
    }

    /// The generator `e_i` (1-based): caps joining columns `i−1` and `i` on both edges.
    pub fn generator(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::OutOfRange {
                name: "i",
                value: i as i64,
                min: 1,
                max: k as i64 - 1,
            });
        }
        let mut d = Self::identity(k);
        let (b0, b1) = (i - 1, i);
        let (t0, t1) = (2 * k - 1 - b0, 2 * k - 1 - b1);
        d.partner[b0] = b1;
        d.partner[b1] = b0;
        d.partner[t0] = t1;
        d.partner[t1] = t0;
        Ok(d)
    }

    /// Reads Dyck-word notation: one bracket per point in circular order.
    pub fn from_parens(s: &str) -> Result<Self> {
        if !s.len().is_multiple_of(2) {
            return Err(Error::Parse(format!("odd length bracket word `{s}`")));
        }
        let mut partner = vec![0; s.len()];
        let mut stack = Vec::new();
        for (p, ch) in s.chars().enumerate() {
            match ch {
                '(' => stack.push(p),
                ')' => {
                    let q = stack
                        .pop()
                        .ok_or_else(|| Error::Parse(format!("unbalanced `{s}`")))?;
                    partner[p] = q;
                    partner[q] = p;
                }
                _ => return Err(Error::Parse(format!("unexpected `{ch}` in `{s}`"))),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Parse(format!("unbalanced `{s}`")));
        }
        Self::new(s.len() / 2, partner)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn bottom(&self, col: usize) -> usize {
        col
    }

    pub fn top(&self, col: usize) -> usize {
        2 * self.k - 1 - col
    }

    /// Appends a straight strand on the right.
    pub fn extend(&self) -> Self {
        let k = self.k + 1;
        let mut partner = vec![0; 2 * k];
        let shift = |p: usize| if p < self.k { p } else { p + 2 };
        for (p, &q) in self.partner.iter().enumerate() {
            partner[shift(p)] = shift(q);
        }
        partner[k - 1] = k;
        partner[k] = k - 1;
        Self { k, partner }
    }

    /// Stacks `self` on top of `below`. Returns the composite diagram and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, below: &Self) -> (Self, usize) {
        let k = self.k;
        debug_assert_eq!(k, below.k);
        let mut partner = vec![usize::MAX; 2 * k];
        let mut seen_mid = vec![false; k];
        // Walk from an outer point until reaching another outer point. Outer
        // points are bottom points of `below` and top points of `self`.
        let walk = |start_upper: bool, start: usize, seen: &mut Vec<bool>| -> usize {
            let (mut upper, mut p) = (start_upper, start);
            loop {
                let q = if upper {
                    self.partner[p]
                } else {
                    below.partner[p]
                };
                if upper && q >= k {
                    return q;
                }
                if !upper && q < k {
                    return q;
                }
                let col = if upper { q } else { 2 * k - 1 - q };
                seen[col] = true;
                upper = !upper;
                p = if upper { col } else { 2 * k - 1 - col };
            }
        };
        for p in 0..2 * k {
            if partner[p] != usize::MAX {
                continue;
            }
            let q = walk(p >= k, p, &mut seen_mid);
            partner[p] = q;
            partner[q] = p;
        }
        let mut loops = 0;
        for col in 0..k {
            if seen_mid[col] {
                continue;
            }
            loops += 1;
            let mut c = col;
            loop {
                seen_mid[c] = true;
                let down = 2 * k - 1 - below.partner[2 * k - 1 - c];
                seen_mid[down] = true;
                c = self.partner[down];
                if c == col {
                    break;
                }
            }
        }
        (Self { k, partner }, loops)
    }

    /// Loops formed by joining top column `i` to bottom column `i` around the side.
    pub fn closure_loops(&self) -> usize {
        let n = 2 * self.k;
        let mut seen = vec![false; n];
        let mut loops = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = n - 1 - q;
            }
        }
        loops
    }
}

impl fmt::Display for PlanarMatching {
    /// Dyck word over the circular order; the identity on two strands is `(())`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &q) in self.partner.iter().enumerate() {
            f.write_str(if q > p { "(" } else { ")" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All non-crossing matchings on `k` strands, in Dyck-word order.
pub fn all_matchings(k: usize) -> Vec<PlanarMatching> {
    fn go(open: usize, close: usize, word: &mut String, out: &mut Vec<String>) {
        if open == 0 && close == 0 {
            out.push(word.clone());
            return;
        }
        if open > 0 {
            word.push('(');
            go(open - 1, close + 1, word, out);
            word.pop();
        }
        if close > 0 {
            word.push(')');
            go(open, close - 1, word, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    go(k, 0, &mut String::new(), &mut words);
    words
        .iter()
        .map(|w| PlanarMatching::from_parens(w).expect("balanced"))
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    k: usize,
    terms: BTreeMap<PlanarMatching, RationalFunction>,
}

impl TLElement {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn diagram(d: PlanarMatching) -> Self {
        Self::term(d, RationalFunction::one())
    }

    pub fn term(d: PlanarMatching, c: RationalFunction) -> Self {
        let mut x = Self::zero(d.k);
        x.add_term(d, c);
        x
    }

    pub fn identity(k: usize) -> Self {
        Self::diagram(PlanarMatching::identity(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &PlanarMatching) -> RationalFunction {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn add_term(&mut self, d: PlanarMatching, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero(self.k);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        same_k(self, rhs)?;
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        same_k(self, rhs)?;
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), -c);
        }
        Ok(out)
    }

    /// Embeds into one more strand by adding a straight strand on the right.
    pub fn extend(&self) -> Self {
        Self {
            k: self.k + 1,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.extend(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&RationalFunction) -> RationalFunction) -> Self {
        let mut out = Self::zero(self.k);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f(c));
        }
        out
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn same_k(x: &TLElement, y: &TLElement) -> Result<()> {
    if x.k != y.k {
        return Err(Error::SizeMismatch(format!(
            "strand counts {} and {}",
            x.k, y.k
        )));
    }
    Ok(())
}

/// `x · y` with `x` stacked on top of `y`; every closed loop contributes `−A² − A⁻²`.
pub fn tl_multiply(x: &TLElement, y: &TLElement) -> Result<TLElement> {
    tl_multiply_with_loop(x, y, &RationalFunction::from(loop_value()))
}

/// Stacking product with an arbitrary loop factor, e.g. `δ` already evaluated
/// at a number when the coefficients have been.
pub fn tl_multiply_with_loop(
    x: &TLElement,
    y: &TLElement,
    delta: &RationalFunction,
) -> Result<TLElement> {
    same_k(x, y)?;
    let mut delta_pows = vec![RationalFunction::one()];
    // Products are grouped by (diagram, loops) so each coefficient sum is
    // formed before the loop factor is applied.
    let mut grouped: BTreeMap<(PlanarMatching, usize), RationalFunction> = BTreeMap::new();
    for (dx, cx) in &x.terms {
        for (dy, cy) in &y.terms {
            let (d, loops) = dx.compose(dy);
            let c = cx * cy;
            match grouped.entry((d, loops)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get() + &c;
                    *e.get_mut() = s;
                }
            }
        }
    }
    let mut out = TLElement::zero(x.k);
    for ((d, loops), c) in grouped {
        while delta_pows.len() <= loops {
            let next = delta_pows.last().expect("nonempty") * delta;
            delta_pows.push(next);
        }
        out.add_term(d, &c * &delta_pows[loops]);
    }
    Ok(out)
}

/// Trace closure: `Σ c · δ^{loops}`.
pub fn markov_closure(x: &TLElement) -> RationalFunction {
    let delta = RationalFunction::from(loop_value());
    let mut acc = RationalFunction::zero();
    for (d, c) in &x.terms {
        let mut term = c.clone();
        for _ in 0..d.closure_loops() {
            term = &term * &delta;
        }
        acc = &acc + &term;
    }
    acc
}

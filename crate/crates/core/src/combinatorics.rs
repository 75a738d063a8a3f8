//! Non-crossing matchings of the disk `D_n^k`, strata of the annular basis by
//! number of chords crossing `S`, and the bijection between `(n−j)`-subsets of
//! the marks and diagrams crossing `S` at least `j` times.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::annular::{enumerate, AnnularDiagram, Chord};
use crate::error::{Error, Result};
use crate::guard;

pub const MAX_DISK_POINTS_HALF: usize = 8;
pub const MAX_STRATA_N: usize = 6;

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(m: usize) -> BigInt {
    binomial(2 * m as i64, m as i64) / (m as i64 + 1)
}

/// Boundary point of `D_n^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A(usize),
    L(usize),
    U(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(i) => write!(f, "a{i}"),
            Label::L(i) => write!(f, "l{i}"),
            Label::U(i) => write!(f, "u{i}"),
        }
    }
}

/// Non-crossing perfect matching of the `2(n+k)` points of `D_n^k`, listed
/// counter-clockwise as `a_1 … a_{2n}, l_1 … l_k, u_k … u_1`. Positions are
/// 0-based indices into that list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskDiagram {
    n: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl DiskDiagram {
    pub fn new(n: usize, k: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let size = 2 * (n + k);
        let mut seen = vec![false; size];
        let mut norm = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            let (x, y) = (x.min(y), x.max(y));
            if x == y || y >= size || seen[x] || seen[y] {
                return Err(Error::InvalidDiagram(format!("bad disk chord ({x}, {y})")));
            }
            seen[x] = true;
            seen[y] = true;
            norm.push((x, y));
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("not a perfect matching".into()));
        }
        norm.sort();
        let crossing = norm.iter().enumerate().any(|(i, &(a, b))| {
            norm[i + 1..]
                .iter()
                .any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b))
        });
        if crossing {
            return Err(Error::InvalidDiagram("disk chords cross".into()));
        }
        Ok(Self { n, k, pairs: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn label(&self, pos: usize) -> Label {
        label_of(self.n, self.k, pos)
    }

    pub fn position(&self, label: Label) -> usize {
        position_of(self.n, self.k, label)
    }

    /// Whether some chord joins two `u` points or two `l` points.
    pub fn has_cap_on_strands(&self) -> bool {
        self.pairs.iter().any(|&(x, y)| {
            matches!(
                (self.label(x), self.label(y)),
                (Label::U(_), Label::U(_)) | (Label::L(_), Label::L(_))
            )
        })
    }
}

fn label_of(n: usize, k: usize, pos: usize) -> Label {
    if pos < 2 * n {
        Label::A(pos + 1)
    } else if pos < 2 * n + k {
        Label::L(pos - 2 * n + 1)
    } else {
        Label::U(2 * n + 2 * k - pos)
    }
}

fn position_of(n: usize, k: usize, label: Label) -> usize {
    match label {
        Label::A(i) => i - 1,
        Label::L(i) => 2 * n + i - 1,
        Label::U(i) => 2 * n + 2 * k - i,
    }
}

impl fmt::Display for DiskDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, &(x, y)) in self.pairs.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", self.label(x), self.label(y))?;
        }
        Ok(())
    }
}

fn noncrossing_matchings(
    points: &[usize],
    out: &mut Vec<Vec<(usize, usize)>>,
    prefix: &mut Vec<(usize, usize)>,
) {
    // segments still to be matched are kept on a stack
    fn go(
        segments: &mut Vec<Vec<usize>>,
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(seg) = segments.pop() else {
            out.push(prefix.clone());
            return;
        };
        if seg.is_empty() {
            go(segments, prefix, out);
            segments.push(seg);
            return;
        }
        for q in (1..seg.len()).step_by(2) {
            prefix.push((seg[0], seg[q]));
            segments.push(seg[q + 1..].to_vec());
            segments.push(seg[1..q].to_vec());
            go(segments, prefix, out);
            segments.pop();
            segments.pop();
            prefix.pop();
        }
        segments.push(seg);
    }
    let mut segments = vec![points.to_vec()];
    go(&mut segments, prefix, out);
}

/// All of `NC(D_n^k)`; there are `Catalan(n + k)` of them.
pub fn enumerate_disk(n: usize, k: usize) -> Result<Vec<DiskDiagram>> {
    guard::check("n+k", n + k, 1, MAX_DISK_POINTS_HALF)?;
    let points: Vec<usize> = (0..2 * (n + k)).collect();
    let mut raw = Vec::new();
    noncrossing_matchings(&points, &mut raw, &mut Vec::new());
    let mut out: Vec<DiskDiagram> = raw
        .into_iter()
        .map(|mut pairs| {
            pairs.sort();
            DiskDiagram { n, k, pairs }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `|NC~(D_n^k)|`: disk diagrams with no `u–u` and no `l–l` chord.
pub fn count_tilde(n: usize, k: usize) -> Result<usize> {
    Ok(enumerate_disk(n, k)?
        .iter()
        .filter(|d| !d.has_cap_on_strands())
        .count())
}

/// `C(2n, n) − C(2n, n−k−1)`.
pub fn count_tilde_formula(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    binomial(2 * n, n) - binomial(2 * n, n - k - 1)
}

/// `|NC_{≤k}(A_n)|`: basis diagrams crossing `S` at most `k` times.
pub fn count_atmost(n: usize, k: usize) -> Result<usize> {
    guard::check("n", n, 1, MAX_STRATA_N)?;
    Ok(enumerate(n)?
        .iter()
        .filter(|d| d.cut_crossings() <= k)
        .count())
}

/// `|NC_{≥j}(A_n)|`.
pub fn count_atleast(n: usize, j: usize) -> Result<usize> {
    guard::check("n", n, 1, MAX_STRATA_N)?;
    Ok(enumerate(n)?
        .iter()
        .filter(|d| d.cut_crossings() >= j)
        .count())
}

/// Chords crossing `S`, ordered from the marked circle inwards.
fn cutting_chords_outer_first(d: &AnnularDiagram) -> Vec<Chord> {
    let mut cut: Vec<Chord> = d.chords().iter().copied().filter(Chord::cuts).collect();
    // all cutting chords are nested around x0; the shortest lift is outermost
    cut.sort_by_key(|c| {
        let (a, b) = c.lift(d.n(), 0);
        b - a
    });
    cut
}

/// Adds `k − c(d)` loops around the core and cuts the annulus open along `S`,
/// giving an element of `NC~(D_n^k)`. The `d`-th crossing of `S` (counted from
/// the marked circle) becomes the pair `l_d` / `u_d`.
pub fn cut_along_segment(d: &AnnularDiagram, k: usize) -> Result<DiskDiagram> {
    let n = d.n();
    if d.cut_crossings() > k {
        return Err(Error::Precondition(format!(
            "diagram crosses S {} > {k} times",
            d.cut_crossings()
        )));
    }
    let a = |i: u32| position_of(n, k, Label::A(i as usize));
    let mut pairs: Vec<(usize, usize)> = d
        .chords()
        .iter()
        .filter(|c| !c.cuts())
        .map(|c| (a(c.i), a(c.j)))
        .collect();
    let cut = cutting_chords_outer_first(d);
    for (depth, c) in cut.iter().enumerate() {
        // the arc from a_j runs through a_{2n}'s side of S, the arc from a_i through a_1's side
        pairs.push((a(c.j), position_of(n, k, Label::L(depth + 1))));
        pairs.push((a(c.i), position_of(n, k, Label::U(depth + 1))));
    }
    for depth in cut.len() + 1..=k {
        pairs.push((
            position_of(n, k, Label::L(depth)),
            position_of(n, k, Label::U(depth)),
        ));
    }
    DiskDiagram::new(n, k, pairs)
}

fn oriented_chord(from: u32, to: u32) -> Chord {
    if from < to {
        Chord::new(from, to, 0)
    } else {
        Chord::new(to, from, 1)
    }
}

/// Builds the diagram attached to a set of `n − j` chosen marks: every chosen
/// mark whose next surviving mark (counter-clockwise) is unchosen starts a chord
/// to it, all such chords are drawn and their marks removed, and this repeats
/// until no chosen mark is left. The `2j` remaining marks are then joined by
/// repeatedly connecting the largest one to its successor across `S`.
pub fn subset_to_diagram(n: usize, marks: &BTreeSet<u32>, j: usize) -> Result<AnnularDiagram> {
    guard::check("j", j, 0, n)?;
    if marks.len() != n - j {
        return Err(Error::SizeMismatch(format!(
            "{} marks given, n - j = {}",
            marks.len(),
            n - j
        )));
    }
    if let Some(&bad) = marks.iter().find(|&&m| m == 0 || m as usize > 2 * n) {
        return Err(Error::SizeMismatch(format!(
            "mark {bad} outside 1..={}",
            2 * n
        )));
    }
    let mut surviving: Vec<u32> = (1..=2 * n as u32).collect();
    let mut chords = Vec::with_capacity(n);
    while surviving.iter().any(|m| marks.contains(m)) {
        let len = surviving.len();
        let starts: Vec<usize> = (0..len)
            .filter(|&s| {
                marks.contains(&surviving[s]) && !marks.contains(&surviving[(s + 1) % len])
            })
            .collect();
        let mut used = BTreeSet::new();
        for s in starts {
            let (from, to) = (surviving[s], surviving[(s + 1) % len]);
            chords.push(oriented_chord(from, to));
            used.insert(from);
            used.insert(to);
        }
        surviving.retain(|m| !used.contains(m));
    }
    while let Some(&largest) = surviving.last() {
        chords.push(oriented_chord(largest, surviving[0]));
        surviving.pop();
        surviving.remove(0);
    }
    AnnularDiagram::new(chords)
}

/// Inverse of [`subset_to_diagram`]: orients every chord counter-clockwise
/// and returns the starting marks of the chords missing `S` together with the
/// `n − j − s` cutting chords closest to the marked circle.
pub fn diagram_to_subset(d: &AnnularDiagram, j: usize) -> Result<BTreeSet<u32>> {
    let n = d.n();
    if j > n || d.cut_crossings() < j {
        return Err(Error::Precondition(format!(
            "diagram crosses S {} times, fewer than j = {j}",
            d.cut_crossings()
        )));
    }
    let mut marks: BTreeSet<u32> = d
        .chords()
        .iter()
        .filter(|c| !c.cuts())
        .map(|c| c.i)
        .collect();
    let extra = n - j - marks.len();
    marks.extend(
        cutting_chords_outer_first(d)
            .iter()
            .take(extra)
            .map(|c| c.j),
    );
    Ok(marks)
}

/// All `size`-element subsets of `{1, …, m}` in lexicographic order.
pub fn subsets(m: u32, size: usize) -> Vec<BTreeSet<u32>> {
    fn go(start: u32, m: u32, size: usize, cur: &mut Vec<u32>, out: &mut Vec<BTreeSet<u32>>) {
        if cur.len() == size {
            out.push(cur.iter().copied().collect());
            return;
        }
        for x in start..=m {
            cur.push(x);
            go(x + 1, m, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, size, &mut Vec::new(), &mut out);
    out
}

/// Outcome of exhausting the subset ↔ diagram correspondence for one `j`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BijectionCheck {
    pub n: usize,
    pub j: usize,
    pub subsets: usize,
    /// `|NC_{≥j}(A_n)|` by enumeration.
    pub stratum: usize,
    /// `C(2n, n−j)`.
    pub expected: String,
    pub subsets_round_trip: bool,
    pub diagrams_round_trip: bool,
}

impl BijectionCheck {
    pub fn pass(&self) -> bool {
        self.subsets_round_trip
            && self.diagrams_round_trip
            && self.subsets == self.stratum
            && self.expected == self.stratum.to_string()
    }
}

/// Runs both round trips of the correspondence for every `0 ≤ j ≤ n`.
pub fn check_bijection(n: usize) -> Result<Vec<BijectionCheck>> {
    guard::check("n", n, 1, MAX_STRATA_N)?;
    let basis = enumerate(n)?;
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let all = subsets(2 * n as u32, n - j);
        let mut subsets_round_trip = true;
        for s in &all {
            let d = subset_to_diagram(n, s, j)?;
            subsets_round_trip &= d.cut_crossings() >= j && diagram_to_subset(&d, j)? == *s;
        }
        let stratum: Vec<&AnnularDiagram> =
            basis.iter().filter(|d| d.cut_crossings() >= j).collect();
        let mut diagrams_round_trip = true;
        for d in &stratum {
            diagrams_round_trip &= subset_to_diagram(n, &diagram_to_subset(d, j)?, j)? == **d;
        }
        out.push(BijectionCheck {
            n,
            j,
            subsets: all.len(),
            stratum: stratum.len(),
            expected: binomial(2 * n as i64, (n - j) as i64).to_string(),
            subsets_round_trip,
            diagrams_round_trip,
        });
    }
    Ok(out)
}

/// Whether cutting along `S` maps `NC_{≤k}(A_n)` injectively into `NC~(D_n^k)`
/// with image of the same size as the target.
pub fn cut_is_bijective(n: usize, k: usize) -> Result<bool> {
    guard::check("n", n, 1, MAX_STRATA_N)?;
    let mut images = BTreeSet::new();
    for d in enumerate(n)?.iter().filter(|d| d.cut_crossings() <= k) {
        let c = cut_along_segment(d, k)?;
        if c.has_cap_on_strands() || !images.insert(c) {
            return Ok(false);
        }
    }
    Ok(images.len() == count_tilde(n, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(chords: &[(u32, u32, u8)]) -> AnnularDiagram {
        AnnularDiagram::new(
            chords
                .iter()
                .map(|&(i, j, w)| Chord::new(i, j, w))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(catalan(4), BigInt::from(14));
    }

    #[test]
    fn disk_enumeration_small() {
        assert_eq!(enumerate_disk(1, 0).unwrap().len(), 1);
        assert_eq!(enumerate_disk(2, 0).unwrap().len(), 2);
        assert_eq!(enumerate_disk(1, 1).unwrap().len(), 2);
        assert!(enumerate_disk(5, 4).is_err());
    }

    #[test]
    fn labels_run_counter_clockwise() {
        let n = 2;
        let k = 2;
        let got: Vec<String> = (0..8).map(|p| label_of(n, k, p).to_string()).collect();
        assert_eq!(got, ["a1", "a2", "a3", "a4", "l1", "l2", "u2", "u1"]);
        for p in 0..8 {
            assert_eq!(position_of(n, k, label_of(n, k, p)), p);
        }
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(count_tilde(2, 1).unwrap(), 5);
        assert_eq!(count_tilde(1, 1).unwrap(), 2);
        for n in 1..=5 {
            assert_eq!(BigInt::from(count_tilde(n, 0).unwrap()), catalan(n));
        }
    }

    #[test]
    fn atmost_examples() {
        assert_eq!(count_atmost(1, 0).unwrap(), 1);
        assert_eq!(count_atmost(2, 1).unwrap(), 5);
        for n in 1..=4 {
            assert_eq!(
                BigInt::from(count_atmost(n, n).unwrap()),
                binomial(2 * n as i64, n as i64)
            );
        }
    }

    #[test]
    fn bijection_examples() {
        let four: BTreeSet<u32> = [4].into();
        let x = subset_to_diagram(2, &four, 1).unwrap();
        assert_eq!(x, d(&[(1, 4, 1), (2, 3, 1)]));
        assert_eq!(diagram_to_subset(&x, 1).unwrap(), four);

        let y = subset_to_diagram(1, &BTreeSet::new(), 1).unwrap();
        assert_eq!(y, d(&[(1, 2, 1)]));
        assert!(diagram_to_subset(&y, 1).unwrap().is_empty());
    }

    #[test]
    fn bijection_errors() {
        assert!(subset_to_diagram(2, &[1, 2].into(), 1).is_err());
        assert!(subset_to_diagram(2, &[5].into(), 1).is_err());
        assert!(subset_to_diagram(2, &BTreeSet::new(), 3).is_err());
        assert!(diagram_to_subset(&d(&[(1, 2, 0), (3, 4, 0)]), 1).is_err());
    }

    #[test]
    fn cut_correspondence_lands_in_tilde() {
        let x = d(&[(1, 4, 1), (2, 3, 1)]);
        let c = cut_along_segment(&x, 2).unwrap();
        assert!(!c.has_cap_on_strands());
        assert_eq!(c.to_string(), "(a1,u1),(a2,u2),(a3,l2),(a4,l1)");
        assert!(cut_along_segment(&x, 1).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for n in 1..=3 {
            assert!(check_bijection(n).unwrap().iter().all(BijectionCheck::pass));
            for k in 0..=n {
                assert!(cut_is_bijective(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(6, 2).len(), 15);
        assert_eq!(subsets(4, 0), vec![BTreeSet::new()]);
    }
}

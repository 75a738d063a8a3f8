use std::collections::BTreeSet;

use proptest::prelude::*;

use tlb_core::annular::{enumerate, is_noncrossing, pair, trace_loops, AnnularDiagram, Chord};
use tlb_core::combinatorics::{binomial, count_atleast};

/// Every perfect matching of 1..=2n with every choice of flags.
fn all_flagged_matchings(n: usize) -> Vec<Vec<Chord>> {
    fn matchings(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
        let Some((&first, rest)) = points.split_first() else {
            return vec![vec![]];
        };
        let mut out = Vec::new();
        for (idx, &other) in rest.iter().enumerate() {
            let remaining: Vec<u32> = rest
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, &p)| p)
                .collect();
            for mut m in matchings(&remaining) {
                m.push((first, other));
                out.push(m);
            }
        }
        out
    }
    let points: Vec<u32> = (1..=2 * n as u32).collect();
    let mut out = Vec::new();
    for m in matchings(&points) {
        for flags in 0u32..(1 << n) {
            out.push(
                m.iter()
                    .enumerate()
                    .map(|(b, &(i, j))| Chord::new(i, j, (flags >> b & 1) as u8))
                    .collect(),
            );
        }
    }
    out
}

/// Lifts every chord to the strip over a wide range of periods and looks for
/// interleaving segments.
fn noncrossing_oracle(n: usize, chords: &[Chord]) -> bool {
    let period = 2 * n as i64;
    let mut segs = Vec::new();
    for c in chords {
        for t in -4..=4 {
            let (i, j) = (c.i as i64, c.j as i64);
            segs.push(if c.w == 0 {
                (i + period * t, j + period * t)
            } else {
                (j + period * t, i + period * (t + 1))
            });
        }
    }
    for &(a, b) in &segs {
        for &(c, d) in &segs {
            if a < c && c < b && b < d {
                return false;
            }
        }
    }
    true
}

/// Follows glued loops on the strip; a loop's winding is its net displacement in periods.
fn pair_oracle(d1: &AnnularDiagram, d2: &AnnularDiagram) -> (u32, u32, Vec<i64>) {
    let n = d1.n() as i64;
    let period = 2 * n;
    let step = |d: &AnnularDiagram, x: i64| -> i64 {
        let p = (x - 1).rem_euclid(period) + 1;
        let level = (x - p) / period;
        let c = d.chord_at(p as u32);
        let (i, j) = (c.i as i64, c.j as i64);
        match (c.w, p == i) {
            (0, true) => j + level * period,
            (0, false) => i + level * period,
            (_, true) => j + (level - 1) * period,
            (_, false) => i + (level + 1) * period,
        }
    };
    let mut seen = BTreeSet::new();
    let (mut m, mut t, mut windings) = (0, 0, Vec::new());
    for start in 1..=period {
        if seen.contains(&start) {
            continue;
        }
        let mut x = start;
        loop {
            seen.insert((x - 1).rem_euclid(period) + 1);
            x = step(d1, x);
            seen.insert((x - 1).rem_euclid(period) + 1);
            x = step(d2, x);
            if (x - start).rem_euclid(period) == 0 {
                break;
            }
        }
        let w = (x - start) / period;
        windings.push(w);
        if w == 0 {
            t += 1;
        } else {
            m += 1;
        }
    }
    (m, t, windings)
}

#[test]
fn enumeration_matches_exhaustive_search() {
    for n in 1..=5 {
        let mut expected: Vec<AnnularDiagram> = all_flagged_matchings(n)
            .into_iter()
            .filter(|c| noncrossing_oracle(n, c))
            .map(|c| AnnularDiagram::new(c).unwrap())
            .collect();
        expected.sort();
        expected.dedup();
        let got = enumerate(n).unwrap();
        assert_eq!(got, expected, "n={n}");
        assert!(got
            .windows(2)
            .all(|w| w[0].canonical_key() < w[1].canonical_key()));
    }
}

#[test]
fn counts_are_central_binomials() {
    for n in 1..=7 {
        assert_eq!(
            num_bigint::BigInt::from(enumerate(n).unwrap().len()),
            binomial(2 * n as i64, n as i64)
        );
    }
}

#[test]
fn pairing_matches_cover_oracle() {
    for n in 1..=3 {
        let basis = enumerate(n).unwrap();
        for x in &basis {
            for y in &basis {
                let v = pair(x, y).unwrap();
                let (m, t, windings) = pair_oracle(x, y);
                assert_eq!((v.m, v.t), (m, t), "{x} vs {y}");
                assert_eq!(trace_loops(x, y).unwrap(), windings, "{x} vs {y}");
            }
        }
    }
}

#[test]
fn pairing_laws() {
    for n in 1..=4 {
        let basis = enumerate(n).unwrap();
        for x in &basis {
            for y in &basis {
                let v = pair(x, y).unwrap();
                assert_eq!(v, pair(y, x).unwrap());
                assert!((v.m + v.t) as usize <= n);
                assert!(trace_loops(x, y)
                    .unwrap()
                    .iter()
                    .all(|w| (-1..=1).contains(w)));
                assert_eq!(
                    v.m as usize % 2,
                    (x.cut_crossings() + y.cut_crossings()) % 2
                );
            }
        }
    }
}

#[test]
fn self_pairing_is_delta_to_the_n() {
    for n in 1..=5 {
        for x in enumerate(n).unwrap() {
            let v = pair(&x, &x).unwrap();
            assert_eq!((v.m, v.t as usize), (0, n), "{x}");
        }
    }
}

#[test]
fn strata_counts() {
    for n in 1..=6 {
        let basis = enumerate(n).unwrap();
        assert_eq!(
            basis.iter().map(AnnularDiagram::cut_crossings).max(),
            Some(n)
        );
        for j in 0..=n {
            assert_eq!(
                num_bigint::BigInt::from(count_atleast(n, j).unwrap()),
                binomial(2 * n as i64, (n - j) as i64),
                "n={n} j={j}"
            );
        }
    }
}

#[test]
fn text_and_json_round_trip() {
    for n in 1..=4 {
        for d in enumerate(n).unwrap() {
            assert_eq!(d.to_string().parse::<AnnularDiagram>().unwrap(), d);
            assert_eq!(AnnularDiagram::from_json(&d.to_json()).unwrap(), d);
        }
    }
    assert_eq!(
        "n=2;(1,2,w=0),(3,4,w=1)"
            .parse::<AnnularDiagram>()
            .unwrap()
            .to_json(),
        r#"[{"i":1,"j":2,"w":0},{"i":3,"j":4,"w":1}]"#
    );
}

fn random_flagged_matching() -> impl Strategy<Value = (usize, Vec<Chord>)> {
    (1usize..=5).prop_flat_map(|n| {
        (
            Just(n),
            Just((1..=2 * n as u32).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(0u8..=1, n),
        )
            .prop_map(|(n, pts, flags)| {
                let chords = (0..n)
                    .map(|b| {
                        let (x, y) = (pts[2 * b], pts[2 * b + 1]);
                        Chord::new(x.min(y), x.max(y), flags[b])
                    })
                    .collect();
                (n, chords)
            })
    })
}

proptest! {
    #[test]
    fn noncrossing_matches_lift_oracle((n, chords) in random_flagged_matching()) {
        prop_assert_eq!(is_noncrossing(&chords).unwrap(), noncrossing_oracle(n, &chords));
    }
}

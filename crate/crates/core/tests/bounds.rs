mod common;

use std::collections::{HashMap, VecDeque};

use proptest::prelude::*;
use tristram::bounds::{
    clasp_bound, gordian_bound, nonbalanced_bound_from_values, signed_bounds, unknotting_bound, BoundReport,
    FactorInvariants, SignedBound,
};
use tristram::signature::step_function;

fn t(j: i32, s: i32, big_s: i32) -> FactorInvariants {
    FactorInvariants::from_triple(j, s, big_s)
}

fn triples(range: i32) -> impl Iterator<Item = (i32, i32, i32)> {
    (0..=range).flat_map(move |j| {
        (-range..=range).flat_map(move |s| {
            (s..=range).filter(move |&big| (j - s) % 2 == 0 && (j - big) % 2 == 0).map(move |big| (j, s, big))
        })
    })
}

/// Crossing-change moves on `(j, s, S)` with the sign of the change:
/// `false` for negative-to-positive, `true` for positive-to-negative.
const MOVES: [((i32, i32, i32), bool); 10] = [
    ((0, -2, 0), false),
    ((0, 0, -2), false),
    ((0, -2, -2), false),
    ((-1, -1, -1), false),
    ((1, -1, -1), false),
    ((0, 2, 0), true),
    ((0, 0, 2), true),
    ((0, 2, 2), true),
    ((-1, 1, 1), true),
    ((1, 1, 1), true),
];

/// Plain BFS distances to the origin inside a box, plus the fewest moves of
/// each sign along any path, by Dijkstra with unit weights on that sign only.
struct Search {
    dist: HashMap<(i32, i32, i32), u32>,
    n_min: HashMap<(i32, i32, i32), u32>,
    p_min: HashMap<(i32, i32, i32), u32>,
}

impl Search {
    fn new(radius: i32) -> Self {
        let inside = |(j, s, big): (i32, i32, i32)| {
            (0..=radius).contains(&j) && s <= big && s.abs() <= radius && big.abs() <= radius
        };
        let bfs = |weight: &dyn Fn(bool) -> u32| {
            let mut d: HashMap<(i32, i32, i32), u32> = HashMap::new();
            let mut q = VecDeque::new();
            d.insert((0, 0, 0), 0);
            q.push_back((0, 0, 0));
            while let Some(x) = q.pop_front() {
                let dx = d[&x];
                // walk moves backwards: y --m--> x
                for ((a, b, c), sign) in MOVES {
                    let y = (x.0 - a, x.1 - b, x.2 - c);
                    if !inside(y) {
                        continue;
                    }
                    let w = weight(sign);
                    let cand = dx + w;
                    if d.get(&y).map_or(true, |&old| cand < old) {
                        d.insert(y, cand);
                        if w == 0 {
                            q.push_front(y);
                        } else {
                            q.push_back(y);
                        }
                    }
                }
            }
            d
        };
        Search { dist: bfs(&|_| 1), n_min: bfs(&|plus| u32::from(!plus)), p_min: bfs(&|plus| u32::from(plus)) }
    }
}

#[test]
fn closed_forms_match_independent_search() {
    let range = 10;
    let search = Search::new(range + 4);
    let mut count = 0;
    for (j, s, big) in triples(range) {
        let f = t(j, s, big);
        let key = (j, s, big);
        assert_eq!(unknotting_bound(&f).unwrap(), search.dist[&key], "{f}");
        let b = signed_bounds(&f).unwrap();
        assert_eq!(b.n, search.n_min[&key], "{f}");
        assert_eq!(b.p, search.p_min[&key], "{f}");
        count += 1;
    }
    assert!(count > 600, "{count}");
}

#[test]
fn table_is_consistent_over_large_range() {
    for (j, s, big) in triples(20) {
        let f = t(j, s, big);
        let u = unknotting_bound(&f).unwrap();
        let b = signed_bounds(&f).unwrap();
        assert_eq!(u, b.total(), "{f}");
        assert!(u as i32 >= j.max(big.abs()).max(s.abs()) / 2, "{f}");
        let m = f.mirror();
        assert_eq!(unknotting_bound(&m).unwrap(), u, "{f}");
        assert_eq!(signed_bounds(&m).unwrap(), b.swapped(), "{f}");
    }
}

#[test]
fn bound_examples() {
    let k = common::resolve("-5_1 # -10_132");
    let r = BoundReport::for_matrix("-5_1 # -10_132", &k).unwrap();
    assert_eq!(r.factors.len(), 1);
    assert_eq!(r.factors[0].invariants(), t(2, 0, 2));
    assert_eq!(r.factors[0].signed(), SignedBound { n: 2, p: 1 });
    assert_eq!((r.u1, r.u2), (2, 3));

    let r = BoundReport::for_matrix("-5_1 # 10_132", &common::resolve("-5_1 # 10_132")).unwrap();
    assert_eq!(r.factors[0].invariants(), t(2, 2, 4));
    assert_eq!(r.factors[0].signed(), SignedBound { n: 3, p: 0 });

    let r = BoundReport::for_pair(
        "T(3,10)",
        &common::resolve("T(3,10)"),
        "T(2,15) # T(5,6)",
        &common::resolve("T(2,15) # T(5,6)"),
        6,
    )
    .unwrap();
    let phi30 = r.factors.iter().find(|f| f.cyclotomic == Some(30)).unwrap();
    assert_eq!(phi30.invariants(), t(3, 1, 13));
    assert_eq!(phi30.signed(), SignedBound { n: 8, p: 1 });
    assert_eq!((r.u1, r.u2, r.g4), (8, 9, 8));
    assert_eq!(r.gordian, Some(9));

    let r = BoundReport::for_matrix("8_20", &common::resolve("8_20")).unwrap();
    assert_eq!((r.u1, r.u2, r.nonbalanced), (0, 0, 1));
    assert_eq!(r.double_slice, 1);

    let r = BoundReport::for_matrix("0_1", &common::resolve("0_1")).unwrap();
    assert_eq!((r.u1, r.u2, r.g4, r.nonbalanced), (0, 0, 0, 0));
    assert!(r.factors.is_empty());

    let ex = common::resolve("2*3_1 # -5_1 # -8_2 # 10_132 # -11n6");
    let r = BoundReport::for_matrix("ex", &ex).unwrap();
    let got: Vec<FactorInvariants> = r.factors.iter().map(|f| f.invariants()).collect();
    assert_eq!(got, vec![t(2, 2, 2), t(2, 0, 2), t(2, 2, 4)]);

    assert_eq!(nonbalanced_bound_from_values(&[3, -3]), 4);
}

#[test]
fn report_json_round_trip() {
    for (name, v) in common::suite().into_iter().step_by(7) {
        let r = BoundReport::for_matrix(&name, &v).unwrap();
        let back = BoundReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r, "{name}");
        let value: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(value["u2"], r.u2);
        assert!(r.render_text().contains(&format!("u2: {}\n", r.u2)));
    }
}

#[test]
fn mirror_duality_per_knot() {
    for (name, v) in common::suite() {
        let a = BoundReport::for_matrix(&name, &v).unwrap();
        let b = BoundReport::for_matrix(&name, &v.mirror()).unwrap();
        assert_eq!((a.u1, a.u2, a.g4, a.nonbalanced), (b.u1, b.u2, b.g4, b.nonbalanced), "{name}");
        assert_eq!(a.factors.len(), b.factors.len(), "{name}");
        for (x, y) in a.factors.iter().zip(&b.factors) {
            assert_eq!(x.invariants().mirror(), y.invariants(), "{name}");
            assert_eq!(x.signed().swapped(), y.signed(), "{name}");
        }
    }
}

#[test]
fn bound_ordering_on_suite() {
    for (name, v) in common::suite() {
        let r = BoundReport::for_matrix(&name, &v).unwrap();
        assert!(r.u1 <= r.u2 && r.u2 <= 2 * r.u1, "{name}: u1 = {}, u2 = {}", r.u1, r.u2);
        let max_n = r.factors.iter().map(|f| f.n).max().unwrap_or(0);
        let max_p = r.factors.iter().map(|f| f.p).max().unwrap_or(0);
        assert_eq!(r.u2, (max_n + max_p).max(r.u1), "{name}");
        for f in &r.factors {
            assert_eq!(f.u_factor, f.n + f.p, "{name}");
            assert!(f.u_factor <= r.u2, "{name}");
        }
        // the genus bounds every invariant above
        let g = v.genus() as u32;
        assert!(r.g4 <= g, "{name}");
        assert!(r.nonbalanced <= g + 1, "{name}");
    }
}

/// `⌈M/2⌉ - ⌊m/2⌋` recomputed from the step function.
#[test]
fn nonbalanced_bound_recomputed() {
    for (name, v) in common::suite() {
        let sf = step_function(&v).unwrap();
        let mut hi = 0i32;
        let mut lo = 0i32;
        for x in sf.plateaus.iter().map(|p| p.value).chain(sf.breakpoints.iter().map(|b| b.nonbalanced)) {
            hi = hi.max(x);
            lo = lo.min(x);
        }
        let want = (hi + 1).div_euclid(2) - lo.div_euclid(2);
        let r = BoundReport::for_matrix(&name, &v).unwrap();
        assert_eq!(r.nonbalanced as i32, want, "{name}");
        // when every root has full-rank limits the non-balanced and balanced
        // values agree and the bound sees only the plateaus
        if sf.breakpoints.iter().all(|b| 2 * b.nonbalanced == b.balanced_x2) {
            let plateaus: Vec<i32> = sf.plateau_values();
            let bal: Vec<i32> = sf.breakpoints.iter().map(|b| b.balanced_x2 / 2).collect();
            let all: Vec<i32> = plateaus.into_iter().chain(bal).collect();
            assert_eq!(nonbalanced_bound_from_values(&all), r.nonbalanced, "{name}");
        }
    }
}

#[test]
fn gordian_symmetry() {
    let names = common::table_names();
    for a in names.iter().take(12) {
        for b in names.iter().take(12) {
            let (k, j) = (common::resolve(a), common::resolve(b));
            let d = gordian_bound(&k, &j).unwrap();
            assert_eq!(d, gordian_bound(&j, &k).unwrap(), "{a} {b}");
            assert_eq!(d, clasp_bound(&k, &j).unwrap(), "{a} {b}");
            if a == b {
                assert_eq!(d, 0, "{a}");
            }
        }
    }
}

proptest! {
    #[test]
    fn mirror_swaps_signed_bounds(j in 0i32..30, a in -30i32..30, gap in 0i32..30) {
        let s = a - (a - j).rem_euclid(2);
        let big = s + 2 * (gap / 2);
        let f = t(j, s, big);
        prop_assert_eq!(signed_bounds(&f.mirror()).unwrap(), signed_bounds(&f).unwrap().swapped());
        prop_assert_eq!(unknotting_bound(&f.mirror()).unwrap(), unknotting_bound(&f).unwrap());
    }

    #[test]
    fn bound_is_monotone_in_jump(j in 0i32..30, a in -30i32..30, gap in 0i32..30) {
        let s = a - (a - j).rem_euclid(2);
        let big = s + 2 * (gap / 2);
        let u = unknotting_bound(&t(j, s, big)).unwrap();
        let u2 = unknotting_bound(&t(j + 2, s, big)).unwrap();
        prop_assert!(u2 >= u);
    }
}

//! Independent oracles for the integration and acceptance tests. Nothing
//! here calls the LP or the DFS; it uses integer orientation predicates and
//! brute-force assignment enumeration instead.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_xoshiro::SplitMix64;

use colored_tverberg::geometry::PointConfiguration;
use colored_tverberg::search::{CapVector, Coloring, Instance};

pub type Pt = (i64, i64);

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    let (ax, ay, bx, by, cx, cy) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128, c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// `p` lies on the closed segment `ab` (which may be a single point).
fn on_segment(p: Pt, a: Pt, b: Pt) -> bool {
    orient(a, b, p) == 0 && a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

fn segments_meet(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// `p` in the hull of at most three points.
fn in_hull(p: Pt, set: &[Pt]) -> bool {
    match set {
        [a] => p == *a,
        [a, b] => on_segment(p, *a, *b),
        [a, b, c] => {
            if orient(*a, *b, *c) == 0 {
                return on_segment(p, *a, *b) || on_segment(p, *b, *c) || on_segment(p, *a, *c);
            }
            let s = [orient(*a, *b, p), orient(*b, *c, p), orient(*c, *a, p)];
            s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0)
        }
        _ => panic!("oracle handles faces of 1..=3 points"),
    }
}

/// Planar hull intersection for two faces of at most three points each:
/// two convex sets meet iff one contains a point of the other or their
/// boundaries cross, and every boundary edge is a pair of the points.
pub fn planar_hulls_meet(a: &[Pt], b: &[Pt]) -> bool {
    if a.iter().any(|&p| in_hull(p, b)) || b.iter().any(|&p| in_hull(p, a)) {
        return true;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            for k in 0..b.len() {
                for l in k + 1..b.len() {
                    if segments_meet(a[i], a[j], b[k], b[l]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Hulls of point sets on the line meet iff the intervals share a point.
pub fn intervals_meet(faces: &[Vec<i64>]) -> bool {
    let lo = faces.iter().map(|f| *f.iter().min().unwrap()).max().unwrap();
    let hi = faces.iter().map(|f| *f.iter().max().unwrap()).min().unwrap();
    lo <= hi
}

/// Counts partitions by trying every map from vertices to
/// `{unused, face 1, …, face r}` and deduplicating by sorting faces.
/// Geometry: intervals for `d = 1`; planar predicates for `d = 2, r = 2`.
pub fn naive_count(coords: &[Vec<i64>], colors: &[usize], caps: &[usize], r: usize) -> u64 {
    let n = coords.len();
    let d = coords[0].len();
    let mut seen = BTreeSet::new();
    let mut assign = vec![0usize; n];
    loop {
        let mut faces: Vec<Vec<usize>> = vec![Vec::new(); r];
        for (v, &a) in assign.iter().enumerate() {
            if a > 0 {
                faces[a - 1].push(v);
            }
        }
        let mut usage = vec![0; caps.len()];
        for v in (0..n).filter(|&v| assign[v] > 0) {
            usage[colors[v]] += 1;
        }
        let rainbow = faces.iter().all(|f| {
            let cs: BTreeSet<usize> = f.iter().map(|&v| colors[v]).collect();
            cs.len() == f.len()
        });
        let ok = faces.iter().all(|f| !f.is_empty())
            && rainbow
            && usage.iter().zip(caps).all(|(u, c)| u <= c)
            && match d {
                1 => {
                    intervals_meet(&faces.iter().map(|f| f.iter().map(|&v| coords[v][0]).collect()).collect::<Vec<_>>())
                }
                2 => {
                    assert_eq!(r, 2, "planar oracle is for two faces");
                    let pts = |f: &Vec<usize>| f.iter().map(|&v| (coords[v][0], coords[v][1])).collect::<Vec<_>>();
                    planar_hulls_meet(&pts(&faces[0]), &pts(&faces[1]))
                }
                _ => panic!("oracle supports d <= 2"),
            };
        if ok {
            faces.sort();
            seen.insert(faces);
        }
        // next assignment in base r+1
        let mut i = 0;
        while i < n {
            assign[i] += 1;
            if assign[i] <= r {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            return seen.len() as u64;
        }
    }
}

pub fn instance_from(d: usize, r: usize, coords: &[Vec<i64>], colors: &[usize], caps: &[usize]) -> Instance {
    let m = caps.len();
    Instance::new(
        d,
        r,
        Coloring::new(m, colors.to_vec()).unwrap(),
        CapVector::new(caps.to_vec(), r).unwrap(),
        Some(PointConfiguration::from_integers(d, coords).unwrap()),
    )
    .unwrap()
}

/// Small random instance with every color used; coordinates in a narrow
/// range so coincidences and collinearities are common.
pub struct SmallInstance {
    pub d: usize,
    pub r: usize,
    pub coords: Vec<Vec<i64>>,
    pub colors: Vec<usize>,
    pub caps: Vec<usize>,
}

impl SmallInstance {
    pub fn random(rng: &mut SplitMix64, d: usize, r: usize, max_vertices: usize, max_colors: usize) -> Self {
        let m = rng.gen_range(1..=max_colors);
        let n = rng.gen_range(m.max(r)..=max_vertices);
        // every color appears at least once, the rest random
        let mut colors: Vec<usize> = (0..n).map(|v| if v < m { v } else { rng.gen_range(0..m) }).collect();
        for i in (1..n).rev() {
            colors.swap(i, rng.gen_range(0..=i));
        }
        let coords = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let caps = (0..m).map(|_| rng.gen_range(1..=r)).collect();
        SmallInstance { d, r, coords, colors, caps }
    }

    pub fn instance(&self) -> Instance {
        instance_from(self.d, self.r, &self.coords, &self.colors, &self.caps)
    }

    pub fn naive_count(&self) -> u64 {
        naive_count(&self.coords, &self.colors, &self.caps, self.r)
    }
}

#[test]
fn oracle_sanity() {
    assert!(planar_hulls_meet(&[(0, 0), (2, 2)], &[(0, 2), (2, 0)]));
    assert!(!planar_hulls_meet(&[(0, 0), (1, 1)], &[(2, 2), (3, 3)]));
    assert!(planar_hulls_meet(&[(0, 0), (2, 2)], &[(1, 1)]));
    assert!(planar_hulls_meet(&[(0, 0), (4, 0), (0, 4)], &[(1, 1)]));
    assert!(!planar_hulls_meet(&[(0, 0), (4, 0), (0, 4)], &[(3, 3)]));
    assert!(planar_hulls_meet(&[(0, 0), (1, 0), (2, 0)], &[(2, 0), (5, 5)]));
    assert!(intervals_meet(&[vec![0, 2], vec![2, 5]]));
    assert!(!intervals_meet(&[vec![0, 1], vec![2, 5]]));
    // three points on a line, caps generous: {0,2}|{1}, {0}|{1,2}?, ...
    assert_eq!(naive_count(&[vec![0], vec![1], vec![2]], &[0, 1, 2], &[1, 1, 1], 2), 1);
}

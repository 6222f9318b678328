mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use colored_tverberg::geometry::{hulls_intersect, ratio, PointConfiguration, Rational};
use colored_tverberg::homology::{betti_numbers, boundary_matrix, homological_connectivity, Connectivity};
use colored_tverberg::rng::stream;
use colored_tverberg::search::{
    count_partitions, find_exhaustive, find_heuristic, verify_partition, CapVector, Coloring, Instance,
    DEFAULT_ENUM_BOUND,
};
use colored_tverberg::simplicial::{chessboard, join, make_complex, skeleton, SimplicialComplex};

use common::SmallInstance;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Small complexes exercising several shapes.
fn zoo() -> Vec<SimplicialComplex> {
    let mut out = vec![
        make_complex(1, &[vec![0]]).unwrap(),
        make_complex(2, &[vec![0], vec![1]]).unwrap(),
        make_complex(3, &[vec![0, 1, 2]]).unwrap(),
        skeleton(&make_complex(3, &[vec![0, 1, 2]]).unwrap(), 1),
        make_complex(5, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]]).unwrap(),
    ];
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (2, 5)] {
        out.push(chessboard(m, n).unwrap());
    }
    out
}

#[test]
fn chessboard_face_counts() {
    for m in 1..=6 {
        for n in 1..=6 {
            let f = chessboard(m, n).unwrap().f_vector();
            for (k, &count) in f.iter().enumerate() {
                let fact: usize = (1..=k + 1).product();
                assert_eq!(count, binom(m, k + 1) * binom(n, k + 1) * fact, "Δ_{m},{n} f_{k}");
            }
            assert_eq!(f.len(), m.min(n));
        }
    }
}

#[test]
fn complexes_are_closed_downward() {
    let cx = zoo();
    for k in &cx {
        k.check_invariants().unwrap();
    }
    for a in &cx[..6] {
        for b in &cx[..6] {
            join(a, b).check_invariants().unwrap();
        }
    }
}

#[test]
fn join_f_vector_is_a_convolution() {
    let cx = zoo();
    for a in &cx {
        for b in &cx {
            let (fa, fb) = (a.f_vector(), b.f_vector());
            // prepend f_{-1} = 1
            let ext = |f: &[usize]| std::iter::once(1).chain(f.iter().copied()).collect::<Vec<_>>();
            let (ea, eb) = (ext(&fa), ext(&fb));
            let mut conv = vec![0; ea.len() + eb.len() - 1];
            for (i, x) in ea.iter().enumerate() {
                for (j, y) in eb.iter().enumerate() {
                    conv[i + j] += x * y;
                }
            }
            assert_eq!(join(a, b).f_vector(), conv[1..].to_vec());
        }
    }
}

#[test]
fn skeleton_of_skeleton() {
    for k in zoo() {
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(skeleton(&skeleton(&k, a), b), skeleton(&k, a.min(b)));
            }
        }
        let top = k.dim().unwrap();
        assert_eq!(skeleton(&k, top), k);
    }
}

#[test]
fn join_is_associative_on_f_vectors() {
    let cx = zoo();
    for a in &cx[..5] {
        for b in &cx[..5] {
            for c in &cx[..3] {
                assert_eq!(join(&join(a, b), c).f_vector(), join(a, &join(b, c)).f_vector());
            }
        }
    }
}

#[test]
fn boundary_squares_to_zero() {
    for k in zoo().iter().chain([chessboard(4, 4).unwrap()].iter()) {
        for p in [2, 3, 5] {
            let top = k.dim().unwrap();
            for deg in 0..top {
                let outer = boundary_matrix(k, deg, p).unwrap();
                let inner = boundary_matrix(k, deg + 1, p).unwrap();
                assert!(outer.mul(&inner).is_zero(), "∂∂ ≠ 0 in degree {deg} over F_{p}");
            }
        }
    }
}

#[test]
fn reduced_euler_relation() {
    for k in zoo() {
        for p in [2, 3, 5] {
            let profile = betti_numbers(&k, p).unwrap();
            assert_eq!(profile.reduced_euler(), k.euler_characteristic() - 1);
        }
    }
}

#[test]
fn betti_numbers_ignore_vertex_labels() {
    let mut rng = stream(17);
    for k in zoo() {
        let n = k.num_vertices();
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let facets: Vec<Vec<usize>> =
                k.facets().iter().map(|s| s.vertices().iter().map(|&v| perm[v]).collect()).collect();
            let relabeled = make_complex(n, &facets).unwrap();
            for p in [2, 3] {
                assert_eq!(betti_numbers(&relabeled, p).unwrap(), betti_numbers(&k, p).unwrap());
            }
        }
    }
}

fn law_holds(c: Connectivity, bound: Option<i64>) -> bool {
    match bound {
        None => c.lower_bound().is_none(),
        Some(b) => c.at_least(b),
    }
}

#[test]
fn skeleton_and_join_laws() {
    let cx = zoo();
    for p in [2, 3] {
        for k in &cx {
            let hk = homological_connectivity(k, p).unwrap();
            for s in 0..k.dim().unwrap() {
                let sk = homological_connectivity(&skeleton(k, s + 1), p).unwrap();
                let bound = hk.lower_bound().map_or(s as i64, |h| h.min(s as i64));
                assert!(sk.at_least(bound), "skeleton law, s = {s}");
            }
        }
        for a in &cx[..7] {
            for b in &cx[..7] {
                let ha = homological_connectivity(a, p).unwrap();
                let hb = homological_connectivity(b, p).unwrap();
                let hj = homological_connectivity(&join(a, b), p).unwrap();
                let bound = match (ha.lower_bound(), hb.lower_bound()) {
                    (Some(x), Some(y)) => Some(x + y + 2),
                    _ => None,
                };
                assert!(law_holds(hj, bound), "join law: {ha} + {hb} + 2 vs {hj}");
            }
        }
    }
}

fn small_planar(rng: &mut rand_xoshiro::SplitMix64) -> (PointConfiguration, Vec<Vec<usize>>) {
    let n = rng.gen_range(2..=7);
    let d = rng.gen_range(1..=3);
    let pts: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-4..=4)).collect()).collect();
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let r = rng.gen_range(2..=n.min(3));
    let mut faces: Vec<Vec<usize>> = (0..r).map(|j| vec![ids[j]]).collect();
    for &v in &ids[r..] {
        if rng.gen_bool(0.7) {
            let j = rng.gen_range(0..r);
            faces[j].push(v);
        }
    }
    (PointConfiguration::from_integers(d, &pts).unwrap(), faces)
}

#[test]
fn hull_test_is_monotone_and_witnesses_verify() {
    let mut rng = stream(99);
    for _ in 0..300 {
        let (config, faces) = small_planar(&mut rng);
        let res = hulls_intersect(&config, &faces).unwrap();
        assert!(res.verify(&config, &faces));
        let used: Vec<usize> = faces.iter().flatten().copied().collect();
        if let Some(extra) = (0..config.len()).find(|v| !used.contains(v)) {
            let mut grown = faces.clone();
            let j = rng.gen_range(0..grown.len());
            grown[j].push(extra);
            let after = hulls_intersect(&config, &grown).unwrap();
            assert!(!res.feasible || after.feasible, "adding a vertex lost feasibility");
        }
    }
}

fn random_affine(rng: &mut rand_xoshiro::SplitMix64, d: usize) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    loop {
        let a: Vec<Vec<Rational>> =
            (0..d).map(|_| (0..d).map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect()).collect();
        let det = match d {
            1 => a[0][0].clone(),
            2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
            _ => {
                &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
                    - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
                    + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
            }
        };
        if det != Rational::from_integer(0.into()) {
            let t = (0..d).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
            return (a, t);
        }
    }
}

#[test]
fn hull_test_is_affinely_invariant() {
    let mut rng = stream(7);
    for _ in 0..300 {
        let (config, faces) = small_planar(&mut rng);
        let (a, t) = random_affine(&mut rng, config.dim());
        let moved = config.transformed(&a, &t);
        assert_eq!(
            hulls_intersect(&config, &faces).unwrap().feasible,
            hulls_intersect(&moved, &faces).unwrap().feasible
        );
    }
}

#[test]
fn counts_are_symmetric_and_monotone_in_caps() {
    let mut rng = stream(2024);
    for _ in 0..40 {
        let d = rng.gen_range(1..=2);
        let s = SmallInstance::random(&mut rng, d, 2, 7, 3);
        let inst = s.instance();
        let base = count_partitions(&inst, DEFAULT_ENUM_BOUND).unwrap();

        // relabel colors by a permutation
        let m = s.caps.len();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut rng);
        let colors: Vec<usize> = s.colors.iter().map(|&c| perm[c]).collect();
        let mut caps = vec![0; m];
        for (c, &l) in s.caps.iter().enumerate() {
            caps[perm[c]] = l;
        }
        let relabeled = common::instance_from(d, 2, &s.coords, &colors, &caps);
        assert_eq!(count_partitions(&relabeled, DEFAULT_ENUM_BOUND).unwrap(), base);

        // affine image
        let (a, t) = random_affine(&mut rng, d);
        let moved = Instance { config: Some(inst.config.as_ref().unwrap().transformed(&a, &t)), ..inst.clone() };
        assert_eq!(count_partitions(&moved, DEFAULT_ENUM_BOUND).unwrap(), base);

        // raising a cap
        if let Some(i) = s.caps.iter().position(|&l| l < 2) {
            let mut caps = s.caps.clone();
            caps[i] += 1;
            let raised = common::instance_from(d, 2, &s.coords, &s.colors, &caps);
            assert!(count_partitions(&raised, DEFAULT_ENUM_BOUND).unwrap() >= base);
        }
    }
}

#[test]
fn returned_partitions_are_sound() {
    let mut rng = stream(5);
    for _ in 0..60 {
        let d = rng.gen_range(1..=2);
        let r = rng.gen_range(2..=3);
        let s = SmallInstance::random(&mut rng, d, r, 8, 3);
        let inst = s.instance();
        for part in [find_exhaustive(&inst, DEFAULT_ENUM_BOUND).unwrap(), find_heuristic(&inst, 50, 3).unwrap()]
            .into_iter()
            .flatten()
        {
            let rep = verify_partition(&inst, &part, true).unwrap();
            assert!(rep.passed(), "{rep:?}");
            // the witness need not be unique, but must lie in every hull
            let config = inst.config.as_ref().unwrap();
            let mut pts = config.points().to_vec();
            pts.push(part.witness.clone().expect("search attaches a witness"));
            let extended = PointConfiguration::new(config.dim(), pts).unwrap();
            for face in part.faces() {
                assert!(hulls_intersect(&extended, &[face.clone(), vec![config.len()]]).unwrap().feasible);
            }
        }
    }
}

#[test]
fn partitions_exist_under_the_cap_sum_hypothesis() {
    // |C_i| >= 2r-1 and Σ l_i > (d+1)(r-1), on generic and degenerate points
    let mut rng = stream(51);
    for trial in 0..40 {
        let d = 1 + trial % 2;
        let r = 2;
        let m = rng.gen_range(1..=d + 1);
        let sizes: Vec<usize> = (0..m).map(|_| rng.gen_range(3..=4)).collect();
        let need = (d + 1) * (r - 1) + 1;
        let caps: Vec<usize> = loop {
            let caps: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=r)).collect();
            if caps.iter().sum::<usize>() >= need {
                break caps;
            }
            if m * r < need {
                break vec![r; m];
            }
        };
        if caps.iter().sum::<usize>() < need {
            continue;
        }
        let n: usize = sizes.iter().sum();
        let range = if trial % 4 == 0 { 1 } else { 1000 };
        let pts: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-range..=range)).collect()).collect();
        let inst = Instance::new(
            d,
            r,
            Coloring::from_sizes(&sizes).unwrap(),
            CapVector::new(caps.clone(), r).unwrap(),
            Some(PointConfiguration::from_integers(d, &pts).unwrap()),
        )
        .unwrap();
        let part = find_exhaustive(&inst, DEFAULT_ENUM_BOUND).unwrap();
        assert!(part.is_some(), "no partition for sizes {sizes:?} caps {caps:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn single_point_faces_meet_iff_equal(x in -5i64..5, y in -5i64..5, u in -5i64..5, v in -5i64..5) {
        let config = PointConfiguration::from_integers(2, &[vec![x, y], vec![u, v]]).unwrap();
        let res = hulls_intersect(&config, &[vec![0], vec![1]]).unwrap();
        prop_assert_eq!(res.feasible, (x, y) == (u, v));
    }

    #[test]
    fn count_matches_naive_on_the_line(seed in any::<u64>()) {
        let mut rng = stream(seed);
        let r = rng.gen_range(2..=3);
        let s = SmallInstance::random(&mut rng, 1, r, 6, 3);
        prop_assert_eq!(count_partitions(&s.instance(), DEFAULT_ENUM_BOUND).unwrap(), s.naive_count());
    }
}

use ordspec::{OrderSet, PrimeGraph};
use proptest::prelude::*;

const LABELS: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// `(n, edges as index pairs)`
fn graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=16).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = pairs.len();
        (Just(n), prop::collection::vec(any::<bool>(), m)).prop_map(move |(n, keep)| {
            let edges = pairs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| *e)
                .collect();
            (n, edges)
        })
    })
}

fn build(n: usize, edges: &[(usize, usize)]) -> PrimeGraph {
    let e: Vec<(u64, u64)> = edges.iter().map(|&(i, j)| (LABELS[i], LABELS[j])).collect();
    PrimeGraph::from_edges(&LABELS[..n], &e).unwrap()
}

/// All maximum independent sets by scanning every subset.
fn brute_force(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    let mut adj = vec![0u32; n];
    for &(i, j) in edges {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut best = 0;
    let mut found: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << n) {
        let independent = (0..n).all(|i| mask & (1 << i) == 0 || adj[i] & mask == 0);
        if !independent {
            continue;
        }
        let size = mask.count_ones();
        if size > best {
            best = size;
            found.clear();
        }
        if size == best {
            found.push(mask);
        }
    }
    let mut out: Vec<Vec<u64>> = found
        .into_iter()
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).map(|i| LABELS[i]).collect())
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_subset_enumeration((n, edges) in graph()) {
        let g = build(n, &edges);
        let got = g.max_cocliques();
        prop_assert_eq!(&got, &brute_force(n, &edges));
        prop_assert_eq!(g.independence_number(), got[0].len());
    }

    #[test]
    fn outputs_are_maximal((n, edges) in graph()) {
        let g = build(n, &edges);
        let all = g.max_cocliques();
        let size = all[0].len();
        for c in &all {
            prop_assert_eq!(c.len(), size);
            prop_assert!(g.is_coclique(c).unwrap());
            for &v in g.vertices() {
                if c.contains(&v) {
                    continue;
                }
                let mut bigger = c.clone();
                bigger.push(v);
                prop_assert!(!g.is_coclique(&bigger).unwrap());
            }
        }
    }

    #[test]
    fn adding_edges_never_helps((n, edges) in graph(), a in 0usize..16, b in 0usize..16) {
        let (a, b) = (a % n, b % n);
        let g = build(n, &edges);
        let mut more = edges.clone();
        if a != b {
            more.push((a.min(b), a.max(b)));
        }
        let h = build(n, &more);
        prop_assert!(h.independence_number() <= g.independence_number());
    }

    #[test]
    fn spectrum_graph_respects_membership(g in prop::collection::vec(1u64..=3000, 1..6)) {
        let s = OrderSet::from_generators(&g).unwrap();
        let gk = PrimeGraph::from_spectrum(&s);
        prop_assert_eq!(gk.vertices(), &s.pi()[..]);
        for &p in gk.vertices() {
            for &q in gk.vertices() {
                let expected = p != q && s.contains(p * q);
                prop_assert_eq!(gk.adjacent(p, q).unwrap(), expected);
            }
        }
    }
}

#[test]
fn complete_graph_has_singleton_cocliques() {
    let edges: Vec<(u64, u64)> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (LABELS[i], LABELS[j])))
        .collect();
    let g = PrimeGraph::from_edges(&LABELS[..5], &edges).unwrap();
    assert!(g.is_complete());
    assert_eq!(
        g.max_cocliques(),
        LABELS[..5].iter().map(|&v| vec![v]).collect::<Vec<_>>()
    );
}

#[test]
fn trivial_spectrum_gives_empty_graph() {
    let g = PrimeGraph::from_spectrum(&OrderSet::trivial());
    assert!(g.vertices().is_empty());
    assert_eq!(g.independence_number(), 0);
    assert_eq!(g.to_dot(), "graph gk {\n}\n");
}

#[test]
fn unknown_vertices_are_rejected() {
    let g = build(3, &[(0, 1)]);
    assert!(g.is_coclique(&[2, 7]).is_err());
    assert!(g.is_coclique(&[5]).unwrap());
    assert!(PrimeGraph::from_edges(&[2, 3], &[(2, 5)]).is_err());
}

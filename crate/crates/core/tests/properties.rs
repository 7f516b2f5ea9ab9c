mod common;

use common::{
    brute_force_covers, has_odd_cycle, minor_rank, permutations, random_01, random_graph,
};
use coverlat::algebra::{build_matrices, dimension_report};
use coverlat::covers::{
    enumerate_minimal_covers, hall_violation_labeled, relabel_with_matching, x_parts,
    DEFAULT_MAX_VERTICES,
};
use coverlat::graph::{bipartition, parse_graph, LabeledBipartiteGraph};
use coverlat::lattice::{
    check_sublattice, closure, enumerate_sublattices, graph_from_lattice, is_full,
    lattice_from_covers, random_sublattice, rank, CoverLattice,
};
use coverlat::pipeline::analyze;
use coverlat::rank::rank_exact;
use coverlat::{BitSet, Exec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn labeled_pipeline(g: &LabeledBipartiteGraph) -> (coverlat::covers::CoverFamily, CoverLattice) {
    let covers = enumerate_minimal_covers(&g.to_graph(), 64).unwrap();
    let lat = lattice_from_covers(&x_parts(g, &covers).unwrap(), g.n()).unwrap();
    (covers, lat)
}

fn all_small_lattices() -> Vec<CoverLattice> {
    (1..=4)
        .flat_map(|n| enumerate_sublattices(n, Exec::default()).unwrap())
        .collect()
}

#[test]
fn sublattice_counts_match_preorders_and_posets() {
    // sublattices with ∅ and [n] correspond to preorders on [n];
    // the full ones to partial orders
    let preorders = [1, 4, 29, 355];
    let posets = [1, 3, 19, 219];
    for n in 1..=4 {
        let all = enumerate_sublattices(n, Exec::default()).unwrap();
        assert_eq!(all.len(), preorders[n - 1], "n = {n}");
        assert_eq!(
            all.iter().filter(|l| is_full(l)).count(),
            posets[n - 1],
            "n = {n}"
        );
    }
}

#[test]
fn enumeration_strategies_agree() {
    assert_eq!(
        enumerate_sublattices(4, Exec::Sequential).unwrap(),
        enumerate_sublattices(4, Exec::Parallel).unwrap()
    );
}

#[test]
fn random_closures_land_in_enumeration() {
    for n in 2..=3 {
        let all = enumerate_sublattices(n, Exec::default()).unwrap();
        for seed in 0..100 {
            let l = random_sublattice(n, 1 + (seed as usize % 5), seed).unwrap();
            assert!(all.contains(&l));
        }
    }
}

#[test]
fn round_trip_a_exhaustive() {
    for lat in all_small_lattices() {
        let g = graph_from_lattice(&lat).unwrap();
        let (_, back) = labeled_pipeline(&g);
        assert_eq!(back, lat);
    }
}

#[test]
fn modular_indicator_identity() {
    // χ(A∪B) + χ(A∩B) = χ(A) + χ(B), coordinate-wise
    for lat in all_small_lattices() {
        for &a in lat.elements() {
            for &b in lat.elements() {
                assert!(lat.contains(a.union(b)) && lat.contains(a.intersection(b)));
                for k in 0..lat.n() {
                    let chi = |s: BitSet| u8::from(s.contains(k));
                    assert_eq!(chi(a.union(b)) + chi(a.intersection(b)), chi(a) + chi(b));
                }
            }
        }
    }
}

fn all_maximal_chain_lengths(lat: &CoverLattice) -> Vec<usize> {
    // DFS over strict inclusions in the lattice, always stepping to a cover
    fn go(lat: &CoverLattice, at: BitSet, len: usize, out: &mut Vec<usize>) {
        let ups: Vec<BitSet> = lat
            .elements()
            .iter()
            .copied()
            .filter(|&b| at.is_proper_subset(b))
            .collect();
        let covers: Vec<BitSet> = ups
            .iter()
            .copied()
            .filter(|&b| !ups.iter().any(|&c| c.is_proper_subset(b)))
            .collect();
        if covers.is_empty() {
            out.push(len);
        }
        for b in covers {
            go(lat, b, len + 1, out);
        }
    }
    let mut out = Vec::new();
    go(lat, BitSet::EMPTY, 1, &mut out);
    out
}

#[test]
fn gradedness_by_chain_enumeration() {
    for lat in all_small_lattices() {
        let lens = all_maximal_chain_lengths(&lat);
        assert!(lens.iter().all(|&l| l == rank(&lat) + 1), "{lat:?}");
    }
}

#[test]
fn matching_graph_gives_boolean_lattice() {
    for n in 1..=6 {
        let g = LabeledBipartiteGraph::matching(n).unwrap();
        let (covers, lat) = labeled_pipeline(&g);
        assert_eq!(lat, CoverLattice::boolean(n).unwrap());
        assert!(is_full(&lat));
        assert_eq!(dimension_report(&g, &covers, &lat).unwrap().dim, n + 1);
    }
}

#[test]
fn covers_of_labeled_graphs_have_the_split_form() {
    for lat in all_small_lattices() {
        let g = graph_from_lattice(&lat).unwrap();
        let n = g.n();
        let (covers, _) = labeled_pipeline(&g);
        let all_x = BitSet::full(n);
        let all_y = BitSet(all_x.0 << n);
        assert!(covers.covers().contains(&all_x) && covers.covers().contains(&all_y));
        for &c in covers.covers() {
            assert_eq!(c.len(), n);
            for i in 0..n {
                assert!(c.contains(i) != c.contains(n + i));
            }
        }
        assert_eq!(hall_violation_labeled(&g), None);
    }
}

#[test]
fn column_identity() {
    for lat in all_small_lattices() {
        let g = graph_from_lattice(&lat).unwrap();
        let (covers, _) = labeled_pipeline(&g);
        let (b, _) = build_matrices(&covers, &g).unwrap();
        let rows = b.to_integer_rows();
        for j in 0..g.n() {
            assert!(rows.iter().all(|r| r[g.n() + j] == 1 - r[j]));
        }
    }
}

/// All perfect matchings of a labelled graph, as `(x, y)` pairs in the flat
/// vertex space.
fn perfect_matchings(g: &LabeledBipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| g.has_edge(i, p[i])))
        .map(|p| (0..n).map(|i| (i, n + p[i])).collect())
        .collect()
}

#[test]
fn relabelling_invariance_over_all_matchings() {
    for lat in all_small_lattices() {
        let g = graph_from_lattice(&lat).unwrap();
        let flat = g.to_graph();
        let (covers, _) = labeled_pipeline(&g);
        let base = dimension_report(&g, &covers, &lat).unwrap();
        for matching in perfect_matchings(&g) {
            let (h, map) = relabel_with_matching(&flat, &matching);
            // uniqueness: any matching yields the same labelled graph
            assert_eq!(h, g);
            let hc = enumerate_minimal_covers(&flat, 64).unwrap().relabeled(&map);
            let hl = lattice_from_covers(&x_parts(&h, &hc).unwrap(), h.n()).unwrap();
            assert_eq!(dimension_report(&h, &hc, &hl).unwrap(), base);
        }
    }
}

#[test]
fn vertex_permutation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for lat in all_small_lattices().into_iter().step_by(3) {
        let g = graph_from_lattice(&lat).unwrap();
        let (covers, _) = labeled_pipeline(&g);
        let base = dimension_report(&g, &covers, &lat).unwrap();
        let flat = g.to_graph();
        let mut perm: Vec<usize> = (0..flat.vertex_count()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let shuffled = flat.permuted(&perm);
        let form = analyze(&shuffled, DEFAULT_MAX_VERTICES)
            .unwrap()
            .form
            .unwrap();
        let r = dimension_report(&form.labeled, &form.covers, &form.lattice).unwrap();
        assert_eq!(
            (r.d, r.rank_b, r.rank_b_trunc, r.lattice_rank, r.dim, r.cm),
            (
                base.d,
                base.rank_b,
                base.rank_b_trunc,
                base.lattice_rank,
                base.dim,
                base.cm
            )
        );
    }
}

#[test]
fn bipartition_agrees_with_odd_cycle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for k in 0..300 {
        let n = 2 + k % 9;
        let g = random_graph(&mut rng, n, 0.3);
        match bipartition(&g) {
            Some(p) => {
                assert!(p.side_u.intersection(p.side_v).is_empty());
                assert_eq!(p.side_u.union(p.side_v), g.all_vertices());
                for &(u, v) in g.edges() {
                    assert!(p.side_u.contains(u) != p.side_u.contains(v));
                }
                assert!(!has_odd_cycle(&g));
            }
            None => assert!(has_odd_cycle(&g), "{g:?}"),
        }
    }
}

proptest! {
    #[test]
    fn covers_match_brute_force(seed in any::<u64>(), n in 2usize..=12, density in 0.1f64..0.7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, density);
        let mut got = enumerate_minimal_covers(&g, DEFAULT_MAX_VERTICES).unwrap().covers().to_vec();
        got.sort_by_key(|s| s.0);
        prop_assert_eq!(got, brute_force_covers(&g));
    }

    #[test]
    fn rank_matches_minor_search(seed in any::<u64>(), rows in 1usize..=6, cols in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_01(&mut rng, rows, cols);
        prop_assert_eq!(rank_exact(&m), minor_rank(&m));
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 2usize..=16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.3);
        let text = g.to_edge_list();
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.to_edge_list(), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn random_lattices_round_trip(seed in any::<u64>(), n in 1usize..=8, gens in 0usize..6) {
        let lat = random_sublattice(n, gens, seed).unwrap();
        prop_assert!(check_sublattice(n, lat.elements()).is_ok());
        let g = graph_from_lattice(&lat).unwrap();
        let (covers, back) = labeled_pipeline(&g);
        prop_assert_eq!(&back, &lat);
        let again = graph_from_lattice(&back).unwrap();
        prop_assert_eq!(&again, &g);
        let r = dimension_report(&g, &covers, &lat).unwrap();
        prop_assert_eq!(r.dim, rank(&lat) + 1);
    }

    #[test]
    fn closure_is_closed(n in 1usize..=6, raw in proptest::collection::vec(any::<u64>(), 0..6)) {
        let gens: Vec<BitSet> = raw.iter().map(|&r| BitSet(r & BitSet::full(n).0)).collect();
        let c = closure(n, gens.iter().copied());
        prop_assert!(check_sublattice(n, &c).is_ok());
        for g in gens {
            prop_assert!(c.contains(&g));
        }
    }
}

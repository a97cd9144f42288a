use superdom::bounds::{bound_report, BoundTag};
use superdom::graph::{all_labeled_graphs, generate_standard, GraphKind};
use superdom::rng::{random_graph, seeded};
use superdom::solver::{gamma_sp_exact, SolverConfig};

#[test]
fn random_graphs_respect_every_bound() {
    let mut rng = seeded(5);
    for i in 0..500 {
        let n = 6 + i % 7;
        let g = random_graph(n, [0.1, 0.25, 0.5, 0.8][i % 4], &mut rng);
        let r = bound_report(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        if r.attained.contains(&BoundTag::EdgeUpper) {
            assert!(g.is_tree());
        }
    }
}

#[test]
fn extreme_values_exhaustively() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n) {
            let gamma = gamma_sp_exact(&g, &SolverConfig::default()).unwrap().gamma_sp;
            assert_eq!(gamma == 1, n == 1 || (n == 2 && g.q() == 1), "{g:?}");
            assert_eq!(gamma == n, g.q() == 0, "{g:?}");
        }
    }
}

#[test]
fn diameter_two_does_not_force_n_minus_one() {
    for k in 2..=5 {
        let g = generate_standard(GraphKind::FriendshipLike(k)).unwrap();
        let r = bound_report(&g).unwrap();
        assert_eq!(g.diameter(), Some(2));
        assert!(r.gamma_sp <= k + 1 && k + 1 < 2 * k);
        assert!(g.is_semi_universal(0).unwrap());
    }
}

/// Each term is at least ⌈n/2⌉, so a sum of n needs even n.
#[test]
fn nordhaus_gaddum_lower_attainment_needs_even_order() {
    for n in [3, 5] {
        assert!(all_labeled_graphs(n).all(|g| !bound_report(&g).unwrap().nordhaus_gaddum.unwrap().lower_attained));
    }
    let p4 = generate_standard(GraphKind::Path(4)).unwrap();
    assert!(bound_report(&p4).unwrap().nordhaus_gaddum.unwrap().lower_attained);
    let attained = all_labeled_graphs(4).filter(|g| bound_report(g).unwrap().nordhaus_gaddum.unwrap().lower_attained);
    assert!(attained.count() > 1);
}

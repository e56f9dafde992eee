use pcdfs::oracle::{check_forest, forests_equal, generate, standard_dfs, GeneratorSpec};
use pcdfs::{
    build_pc_lists, build_pc_lists_counted, complement_vertex, materialize, pc_dfs_forest, pcdg,
    ArcList, DfsForest, DfsOptions, PcDigraph, VertexId,
};
use proptest::prelude::*;

/// Arbitrary valid pc-digraph: `n` in 1..=max_n, any subset of off-diagonal
/// pairs, any complement flags.
fn pc_digraph(max_n: u32) -> impl Strategy<Value = PcDigraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|v| (1..=n).filter(move |&w| w != v).map(move |w| (v, w)))
            .collect();
        let k = pairs.len();
        (
            proptest::sample::subsequence(pairs, 0..=k).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), n as usize),
        )
            .prop_map(move |(entries, flags)| build_pc_lists(n, &entries, &flags).unwrap())
    })
}

/// Textbook recursive DFS, kept separate from the explicit-stack oracle.
fn recursive_dfs(adj: &ArcList) -> DfsForest {
    fn visit(
        adj: &ArcList,
        v: VertexId,
        parent: &mut Vec<Option<VertexId>>,
        pre: &mut Vec<u32>,
        post: &mut Vec<u32>,
        clocks: &mut (u32, u32),
    ) {
        clocks.0 += 1;
        pre[v.index()] = clocks.0;
        for &w in adj.out(v) {
            if pre[w.index()] == 0 {
                parent[w.index()] = Some(v);
                visit(adj, w, parent, pre, post, clocks);
            }
        }
        clocks.1 += 1;
        post[v.index()] = clocks.1;
    }
    let n = adj.n() as usize;
    let (mut parent, mut pre, mut post) = (vec![None; n], vec![0; n], vec![0; n]);
    let mut clocks = (0, 0);
    for v in (1..=adj.n()).map(VertexId::new) {
        if pre[v.index()] == 0 {
            visit(adj, v, &mut parent, &mut pre, &mut post, &mut clocks);
        }
    }
    DfsForest::from_parts(parent, pre, post)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lists_are_sorted_and_terminated(g in pc_digraph(12)) {
        let mut total = 0;
        for v in g.vertices() {
            let list = g.pc_list(v);
            prop_assert_eq!(*list.last().unwrap(), g.sentinel());
            prop_assert!(list.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(!list.contains(&v));
            total += list.len() - 1;
        }
        prop_assert_eq!(total, g.m_tilde());
    }

    #[test]
    fn out_degrees_follow_complement_bits(g in pc_digraph(12)) {
        let arcs = materialize(&g);
        for v in g.vertices() {
            let listed = g.entries(v).len();
            let expect = if g.is_complemented(v) { g.n() as usize - 1 - listed } else { listed };
            prop_assert_eq!(arcs.out(v).len(), expect);
            prop_assert!(!arcs.out(v).contains(&v));
        }
    }

    #[test]
    fn toggling_partitions_other_vertices(g in pc_digraph(12), pick in any::<prop::sample::Index>()) {
        let v = VertexId::new(1 + pick.index(g.n() as usize) as u32);
        let h = complement_vertex(&g, v);
        let (before, after) = (materialize(&g), materialize(&h));
        prop_assert_eq!(before.out(v).len() + after.out(v).len(), g.n() as usize - 1);
        prop_assert!(before.out(v).iter().all(|w| !after.out(v).contains(w)));
        for x in g.vertices().filter(|&x| x != v) {
            prop_assert_eq!(before.out(x), after.out(x));
        }
        prop_assert_eq!(materialize(&complement_vertex(&h, v)), before);
    }

    #[test]
    fn uncomplemented_materializes_to_input_pairs(
        (n, mut pairs) in (1u32..=10).prop_flat_map(|n| {
            let all: Vec<(u32, u32)> = (1..=n)
                .flat_map(|v| (1..=n).filter(move |&w| w != v).map(move |w| (v, w)))
                .collect();
            let k = all.len();
            (Just(n), proptest::sample::subsequence(all, 0..=k).prop_shuffle())
        })
    ) {
        let g = build_pc_lists(n, &pairs, &vec![false; n as usize]).unwrap();
        let arcs = materialize(&g);
        let got: Vec<(u32, u32)> = g
            .vertices()
            .flat_map(|v| arcs.out(v).iter().map(move |w| (v.get(), w.get())))
            .collect();
        pairs.sort();
        prop_assert_eq!(got, pairs);
    }

    #[test]
    fn pc_dfs_matches_both_references(g in pc_digraph(8)) {
        let arcs = materialize(&g);
        let (forest, counters) = pc_dfs_forest(&g, DfsOptions::checked()).unwrap();
        let reference = recursive_dfs(&arcs);
        prop_assert_eq!(forests_equal(&standard_dfs(&arcs), &reference), Ok(()));
        prop_assert_eq!(forests_equal(&forest, &reference), Ok(()));
        prop_assert_eq!(check_forest(&forest, &arcs), Ok(()));
        prop_assert_eq!(counters.calls, g.n() as u64);
    }

    #[test]
    fn counters_obey_charging_bounds(g in pc_digraph(24)) {
        let (_, c) = pc_dfs_forest(&g, DfsOptions::checked()).unwrap();
        let (n, m) = (g.n() as u64, g.m_tilde() as u64);
        prop_assert_eq!(c.calls, n);
        prop_assert_eq!(c.u_removals, n);
        prop_assert!(c.deletions <= m);
        prop_assert!(c.restarts < n);
        prop_assert!(c.back_steps <= c.deletions + c.restarts);
        prop_assert!(c.fwd_steps <= 2 * (n + m + n));
        prop_assert!(c.total() <= 8 * (n + m + 1));
    }

    #[test]
    fn construction_steps_are_linear(g in pc_digraph(16)) {
        let pairs: Vec<(u32, u32)> = g.entry_pairs().map(|(v, w)| (v.get(), w.get())).collect();
        let (h, steps) = build_pc_lists_counted(g.n(), &pairs, g.complement_flags()).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert!(steps <= 8 * (g.n() as u64 + pairs.len() as u64));
    }

    #[test]
    fn pcdg_round_trips(g in pc_digraph(16)) {
        let text = pcdg::serialize(&g);
        let back = pcdg::parse(&text).unwrap();
        prop_assert_eq!(pcdg::serialize(&back), text);
        prop_assert_eq!(back, g);
    }
}

#[test]
fn generator_is_pure() {
    for seed in 0..20 {
        let spec = GeneratorSpec::random(30, 100, 0.3, seed);
        assert_eq!(
            pcdg::serialize(&generate(&spec).unwrap()),
            pcdg::serialize(&generate(&spec).unwrap())
        );
    }
}

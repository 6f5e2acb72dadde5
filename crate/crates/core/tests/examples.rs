//! Worked examples on small named graphs, with expected values fixed from the
//! exact solvers.

use cyclocover_core::graph::{base_decomposition, bfs_index, shortest_path};
use cyclocover_core::instances::{bouquet, cycle, k2k_plus_edge, path, spider};
use cyclocover_core::oracle::{brute_force_min_path_system, brute_force_min_set, verify_set, Witness};
use cyclocover_core::{
    construct, construct_paths, good_edge_set, is_good, solve_paths, solve_set, structure_profile, Edge, Error,
    Graph, GoodnessViolation, Method, PathMode, Problem,
};

/// Rooted example with levels {r}, {u1,u2,u3}, {v3,u5,u4}, {v1,v2}.
/// Ids: r=0, u1=1, u2=2, u3=3, u4=4, u5=5, v1=6, v2=7, v3=8.
fn layered_example() -> Graph {
    Graph::from_edges(
        9,
        [
            (0, 1), (1, 8), (8, 6), (4, 3), (3, 0), (0, 2), (2, 5), (5, 7),
            (6, 5), (5, 4), (4, 7), (7, 6), (2, 8),
        ],
    )
    .unwrap()
}

fn layered_example_red() -> Vec<Edge> {
    [(6, 5), (5, 4), (4, 7), (7, 6), (2, 8)].into_iter().map(|(a, b)| Edge::new(a, b)).collect()
}

#[test]
fn parse_examples() {
    let t = Graph::parse("3 3\n0 1\n1 2\n2 0").unwrap();
    assert_eq!((t.n(), t.m()), (3, 3));
    assert!(matches!(Graph::parse("3 2\n0 1\n0 5"), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(Graph::parse("4 2\n0 1\n2 3"), Err(Error::Disconnected { .. })));
}

#[test]
fn bfs_examples() {
    let c4 = cycle(4).unwrap();
    let b = bfs_index(&c4, 0);
    assert_eq!(b.layers(), &[vec![0], vec![1, 3], vec![2]]);
    assert!(b.horizontal_edges().is_empty());
    assert_eq!(b.up_neighbors(2), &[1, 3]);

    let c5 = cycle(5).unwrap();
    assert_eq!(bfs_index(&c5, 0).horizontal_edges(), &[Edge::new(2, 3)]);

    let g = layered_example();
    let b = bfs_index(&g, 0);
    assert_eq!(b.horizontal_edges(), &[Edge::new(4, 5), Edge::new(6, 7)]);
    assert_eq!(b.up_degree(8), 2);
    assert_eq!(b.up_neighbors(6), &[5, 8]);
}

#[test]
fn layered_example_good_sets() {
    let g = layered_example();
    assert_eq!(g.cyclomatic_number(), 5);
    assert_eq!(is_good(&g, 0, &layered_example_red()), Ok(()));
    let ges = good_edge_set(&g, 0);
    assert_eq!(ges.edges().len(), 5);
    assert_eq!(is_good(&g, 0, ges.edges()), Ok(()));
}

#[test]
fn is_good_rejections() {
    let c5 = cycle(5).unwrap();
    assert!(matches!(is_good(&c5, 0, &[]), Err(GoodnessViolation::MissingHorizontal { .. })));
    let c4 = cycle(4).unwrap();
    let both = [Edge::new(1, 2), Edge::new(2, 3)];
    assert_eq!(
        is_good(&c4, 0, &both),
        Err(GoodnessViolation::UpSetCount { vertex: 2, in_f: 2, up_degree: 2 })
    );
}

#[test]
fn trees_have_empty_good_sets() {
    let s = spider(4).unwrap();
    for r in 0..s.n() {
        assert!(good_edge_set(&s, r).edges().is_empty());
    }
}

#[test]
fn root_paths_on_c5() {
    let c5 = cycle(5).unwrap();
    let ges = good_edge_set(&c5, 0);
    assert_eq!(ges.edges(), &[Edge::new(2, 3)]);
    assert_eq!(ges.root_path(0), vec![0]);
    assert_eq!(ges.root_path(2), vec![2, 1, 0]);
    assert_eq!(ges.root_path(3), vec![3, 4, 0]);
}

#[test]
fn structure_examples() {
    let b = bouquet(&[5, 5], &[1, 1, 1]).unwrap();
    let p = structure_profile(&b);
    assert_eq!((p.cyclomatic, p.leaf_count), (2, 3));

    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let p = structure_profile(&star);
    assert_eq!(p.legs.get(&0), Some(&3));
    assert_eq!((p.branch_resolving, p.lambda), (2, 2));

    let p = structure_profile(&cycle(7).unwrap());
    assert_eq!((p.cyclomatic, p.leaf_count, p.min_degree, p.branch_resolving, p.lambda), (1, 0, 2, 0, 1));
}

#[test]
fn base_examples() {
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)]).unwrap();
    let d = base_decomposition(&g);
    assert_eq!(d.base_vertices, vec![0, 1, 2, 3, 4]);
    assert_eq!(d.pendant_trees.len(), 1);
    assert_eq!(d.pendant_trees[&0].vertices, vec![5, 6]);

    let d = base_decomposition(&cycle(6).unwrap());
    assert!(d.pendant_trees.is_empty());
    assert_eq!(d.base_vertices.len(), 6);

    let d = base_decomposition(&path(6).unwrap());
    assert!(d.is_tree_input && d.base_vertices.is_empty());
}

#[test]
fn shortest_path_tie_break() {
    assert_eq!(shortest_path(&cycle(4).unwrap(), 0, 2), vec![0, 1, 2]);
    let p6 = path(6).unwrap();
    assert_eq!(shortest_path(&p6, 4, 1), vec![4, 3, 2, 1]);
}

#[test]
fn construction_examples() {
    let c4 = cycle(4).unwrap();
    let dem = construct(Problem::Dem, &c4, None).unwrap();
    assert_eq!(dem.size(), 2);
    assert!(verify_set(Problem::Dem, &c4, &dem.vertices).unwrap().valid);

    let p5 = path(5).unwrap();
    assert_eq!(construct(Problem::Geodetic, &p5, None).unwrap().vertices, vec![0, 4]);
    assert_eq!(construct(Problem::Dim, &p5, None).unwrap().size(), 1);
    assert_eq!(construct(Problem::Mdim, &spider(3).unwrap(), None).unwrap().vertices, spider(3).unwrap().leaves());

    let c5 = cycle(5).unwrap();
    assert_eq!(construct(Problem::Geodetic, &c5, None).unwrap().vertices, vec![0, 2, 3]);
    assert_eq!(construct_paths(PathMode::EdgeCover, &c5, None).unwrap().count(), 3);
    assert_eq!(construct_paths(PathMode::VertexPartition, &c4, None).unwrap().paths, vec![vec![2, 1, 0], vec![3]]);
}

#[test]
fn exact_small_values() {
    let brute = |p, g: &Graph| brute_force_min_set(p, g, None).unwrap().size();
    assert_eq!(brute(Problem::Dim, &cycle(6).unwrap()), 2);
    assert_eq!(brute(Problem::Geodetic, &cycle(5).unwrap()), 3);
    assert_eq!(brute(Problem::Geodetic, &cycle(6).unwrap()), 2);
    assert_eq!(brute(Problem::Dem, &cycle(4).unwrap()), 2);
    assert_eq!(brute(Problem::Geodetic, &k2k_plus_edge(3).unwrap()), 3);
    let k2 = path(2).unwrap();
    assert_eq!(brute(Problem::Dim, &k2), 1);
    assert_eq!(brute(Problem::Edim, &k2), 1);
    assert_eq!(brute(Problem::Mdim, &k2), 2);
    assert_eq!(verify_set(Problem::Edim, &k2, &[]).unwrap().witness, Some(Witness::EmptySet));
    let paths = |m, g: &Graph| brute_force_min_path_system(m, g).unwrap().count();
    assert_eq!(paths(PathMode::EdgeCover, &cycle(5).unwrap()), 3);
    assert_eq!(paths(PathMode::VertexPartition, &cycle(4).unwrap()), 2);
    assert_eq!(paths(PathMode::VertexPartition, &spider(4).unwrap()), 3);
}

#[test]
fn bouquet_edge_cover_with_one_pendant_edge() {
    // A pendant edge at the hub of C5 needs no extra path.
    let g = bouquet(&[5], &[1]).unwrap();
    assert_eq!(brute_force_min_path_system(PathMode::EdgeCover, &g).unwrap().count(), 3);
}

#[test]
fn method_dispatch() {
    let c6 = cycle(6).unwrap();
    for m in [Method::Construct, Method::Xp, Method::Brute] {
        let s = solve_set(Problem::Geodetic, m, &c6, None, None).unwrap();
        assert_eq!(s.method, m);
        assert!(verify_set(Problem::Geodetic, &c6, &s.vertices).unwrap().valid);
    }
    assert!(matches!(
        solve_paths(PathMode::EdgeCover, Method::Xp, &c6, None),
        Err(Error::Unsupported(_))
    ));
    assert!(matches!(solve_set(Problem::Doubly, Method::Xp, &c6, None, None), Err(Error::Unsupported(_))));
    let big = path(30).unwrap();
    assert!(matches!(
        solve_set(Problem::Dim, Method::Brute, &big, None, None),
        Err(Error::LimitExceeded(_))
    ));
}

#[test]
fn tampered_solution_has_witness() {
    let c5 = cycle(5).unwrap();
    let s = construct(Problem::Geodetic, &c5, None).unwrap();
    let rep = verify_set(Problem::Geodetic, &c5, &s.vertices[1..]).unwrap();
    assert!(!rep.valid);
    assert!(matches!(rep.witness, Some(Witness::UncoveredVertex { .. })));
    assert!(matches!(verify_set(Problem::Geodetic, &c5, &[7]), Err(Error::VertexOutOfRange { .. })));
}

#[test]
fn solution_json_round_trip() {
    let c5 = cycle(5).unwrap();
    let s = construct(Problem::Meg, &c5, None).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    assert!(text.contains("\"size\":"));
    assert_eq!(serde_json::from_str::<cyclocover_core::SolutionSet>(&text).unwrap(), s);
    let ps = construct_paths(PathMode::EdgeCover, &c5, None).unwrap();
    let text = serde_json::to_string(&ps).unwrap();
    assert_eq!(serde_json::from_str::<cyclocover_core::PathSystem>(&text).unwrap(), ps);
}

use super::*;
use crate::groups::{build_abelian_p, build_cyclic, families};
use crate::numtheory::factorize;
use crate::powergraph::{
    build_power_graph, build_power_graph_zn_fast, build_proper_power_graph, build_reduced_graph, equiv_classes,
    generator_set_szn,
};

fn zn(n: u64) -> Graph {
    build_power_graph_zn_fast(n).unwrap()
}

fn reduced(n: u64) -> Graph {
    build_reduced_graph(n).unwrap()
}

/// Vertices of `graph` carrying the given elements.
fn v(graph: &Graph, elements: &[usize]) -> Vec<usize> {
    graph.vertices_of(elements).unwrap()
}

#[test]
fn components_examples() {
    let klein = build_proper_power_graph(&build_abelian_p(2, &[1, 1]).unwrap());
    assert_eq!(components(&klein), vec![vec![0], vec![1], vec![2]]);
    assert_eq!(components(&Graph::complete(5)).len(), 1);
    let r6 = reduced(6);
    let comps: Vec<Vec<usize>> = components(&r6).iter().map(|c| r6.elements_of(c)).collect();
    assert_eq!(comps, vec![vec![2, 4], vec![3]]);
    assert!(components(&Graph::null()).is_empty());
}

#[test]
fn separating_examples() {
    let r = is_separating(&zn(6), &[0, 1, 5]).unwrap();
    assert!(r.is_separating);
    assert_eq!(r.components_after_removal, 2);

    assert!(!is_separating(&zn(12), &generator_set_szn(12)).unwrap().is_separating);

    let r12 = reduced(12);
    let r = is_separating(&r12, &v(&r12, &[6])).unwrap();
    assert!(r.is_separating);
    let comps: Vec<Vec<usize>> = components(&r12.without(&v(&r12, &[6])))
        .iter()
        .map(|c| c.iter().map(|&i| [2, 3, 4, 8, 9, 10][i]).collect())
        .collect();
    assert_eq!(comps, vec![vec![2, 4, 8, 10], vec![3, 9]]);

    assert_eq!(
        is_separating(&zn(3), &[0, 1, 2]).unwrap_err(),
        ConnectivityError::AllVertices
    );
    assert_eq!(is_separating(&zn(3), &[7]).unwrap_err(), ConnectivityError::OutOfRange(7));
}

#[test]
fn minimality_examples() {
    let r12 = reduced(12);
    let r = is_minimal_separating(&r12, &v(&r12, &[2, 10])).unwrap();
    assert!(r.is_separating && r.is_minimal);

    let r = is_minimal_separating(&r12, &v(&r12, &[2, 6, 10])).unwrap();
    assert!(r.is_separating && !r.is_minimal);

    let r = is_minimal_separating(&r12, &v(&r12, &[4, 6, 8])).unwrap();
    assert!(r.is_separating && !r.is_minimal);

    assert_eq!(is_minimal_separating(&r12, &[]).unwrap_err(), ConnectivityError::EmptySet);
}

#[test]
fn local_connectivity_examples() {
    let r12 = reduced(12);
    let (a, b) = (r12.vertex_of(3).unwrap(), r12.vertex_of(4).unwrap());
    assert_eq!(local_connectivity(&r12, a, b).unwrap(), 1);
    assert_eq!(r12.elements_of(&local_cut(&r12, a, b).unwrap()), vec![6]);

    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    assert_eq!(local_connectivity(&path, 0, 2).unwrap(), 1);

    assert_eq!(local_connectivity(&zn(6), 2, 3).unwrap(), 3);

    assert_eq!(local_connectivity(&path, 0, 1).unwrap_err(), ConnectivityError::Adjacent(0, 1));
    assert_eq!(local_connectivity(&path, 1, 1).unwrap_err(), ConnectivityError::SameVertex);
}

#[test]
fn direct_flow_examples() {
    let caps = Caps::default();
    let r = vertex_connectivity(&zn(8), &caps).unwrap();
    assert_eq!((r.kappa, r.witness.len()), (7, 0));

    let r = vertex_connectivity(&zn(6), &caps).unwrap();
    assert_eq!(r.kappa, 3);
    assert_eq!(r.witness, vec![0, 1, 5]);

    assert_eq!(vertex_connectivity(&zn(12), &caps).unwrap().kappa, 6);

    assert_eq!(vertex_connectivity(&Graph::null(), &caps).unwrap().kappa, 0);
    assert_eq!(vertex_connectivity(&Graph::complete(1), &caps).unwrap().kappa, 0);
    assert_eq!(vertex_connectivity(&Graph::from_edges(3, &[(0, 1)]), &caps).unwrap().kappa, 0);

    let small = Caps { flow: 5, ..caps };
    assert!(matches!(
        vertex_connectivity(&zn(6), &small),
        Err(ConnectivityError::CapExceeded { size: 6, cap: 5, .. })
    ));
}

#[test]
fn quotient_examples() {
    let g12 = build_cyclic(12).unwrap();
    let r = vertex_connectivity_via_quotient(&zn(12), &equiv_classes(&g12)).unwrap();
    assert_eq!(r.kappa, 6);
    assert_eq!(r.witness, vec![0, 1, 5, 6, 7, 11]);
    assert_eq!(r.method, Method::QuotientCut);

    let g30 = build_cyclic(30).unwrap();
    assert_eq!(vertex_connectivity_via_quotient(&zn(30), &equiv_classes(&g30)).unwrap().kappa, 12);

    let g6 = build_cyclic(6).unwrap();
    let r = vertex_connectivity_via_quotient(&zn(6), &equiv_classes(&g6)).unwrap();
    assert_eq!((r.kappa, r.witness), (3, vec![0, 1, 5]));

    let g8 = build_cyclic(8).unwrap();
    assert_eq!(
        vertex_connectivity_via_quotient(&zn(8), &equiv_classes(&g8)).unwrap_err(),
        ConnectivityError::Complete
    );
}

#[test]
fn brute_force_examples() {
    let r = brute_force_min_sepset(&zn(6), 22).unwrap();
    assert_eq!((r.kappa, r.witness), (3, vec![0, 1, 5]));

    let r = brute_force_min_sepset(&Graph::complete(4), 22).unwrap();
    assert_eq!((r.kappa, r.witness.len()), (3, 0));

    let r12 = reduced(12);
    let r = brute_force_min_sepset(&r12, 22).unwrap();
    assert_eq!(r.kappa, 1);
    assert_eq!(r12.elements_of(&r.witness), vec![6]);
}

#[test]
fn enumeration_examples() {
    let r12 = reduced(12);
    let found: Vec<Vec<usize>> = enumerate_minimal_sepsets(&r12, 2, 22)
        .unwrap()
        .iter()
        .map(|s| r12.elements_of(s))
        .collect();
    assert!(found.contains(&vec![6]));
    assert!(found.contains(&vec![2, 10]));

    assert!(enumerate_minimal_sepsets(&Graph::complete(6), 5, 22).unwrap().is_empty());

    assert!(enumerate_minimal_sepsets(&zn(6), 3, 22).unwrap().contains(&vec![0, 1, 5]));
}

#[test]
fn three_methods_agree_on_small_groups() {
    let caps = Caps::default();
    for g in families::small_groups(22) {
        let graph = build_power_graph(&g);
        let direct = vertex_connectivity(&graph, &caps).unwrap();
        let brute = brute_force_min_sepset(&graph, caps.brute).unwrap();
        assert_eq!(direct.kappa, brute.kappa, "{}", g.name());
        if graph.is_complete() {
            continue;
        }
        let quotient = vertex_connectivity_via_quotient(&graph, &equiv_classes(&g)).unwrap();
        assert_eq!(quotient.kappa, direct.kappa, "{}", g.name());
        for w in [&direct.witness, &brute.witness, &quotient.witness] {
            assert_eq!(w.len(), direct.kappa);
            assert!(is_separating(&graph, w).unwrap().is_separating, "{}", g.name());
        }
    }
}

#[test]
fn identity_deletion_lowers_kappa_by_one() {
    let caps = Caps::default();
    for n in 2..=100u64 {
        let g = build_cyclic(n).unwrap();
        let proper = build_proper_power_graph(&g);
        if !is_connected(&proper) {
            continue;
        }
        let full = vertex_connectivity(&zn(n), &caps).unwrap().kappa;
        let without_e = vertex_connectivity(&proper, &caps).unwrap().kappa;
        assert_eq!(without_e + 1, full, "n={n}");
    }
}

#[test]
fn minimal_sepsets_contain_generators_and_identity() {
    for n in 2..=30u64 {
        let f = factorize(n).unwrap();
        if f.is_prime_power() {
            continue;
        }
        let max_size = if n <= 20 { n as usize } else { 8 };
        let s = generator_set_szn(n);
        for set in enumerate_minimal_sepsets(&zn(n), max_size, 30).unwrap() {
            assert!(s.iter().all(|x| set.contains(x)), "n={n} set={set:?}");
        }
    }
}

#[test]
fn neighbourhood_separation_laws() {
    for n in 1..=100u64 {
        let g = build_cyclic(n).unwrap();
        let graph = zn(n);
        let classes = equiv_classes(&g);
        for x in 0..n as usize {
            let nx = graph.neighborhood(&[x]);
            let nclass = crate::powergraph::class_neighborhood(&graph, &classes, x);
            let has_non_neighbour = (0..n as usize).any(|y| y != x && !graph.is_adjacent(x, y));
            let sep_x = is_separating(&graph, &nx).unwrap();
            let sep_class = is_separating(&graph, &nclass).unwrap();
            assert_eq!(sep_x.is_separating, has_non_neighbour, "n={n} x={x}");
            assert_eq!(sep_class.is_separating, has_non_neighbour, "n={n} x={x}");
            match g.element_order(x) {
                1 => assert!(!sep_x.is_separating),
                2 => assert_eq!(nx, nclass),
                _ => assert!(!sep_x.is_minimal, "n={n} x={x}"),
            }
        }
    }
}

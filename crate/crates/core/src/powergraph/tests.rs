use super::*;
use crate::connectivity::components;
use crate::groups::{build_abelian_p, families};
use crate::numtheory::{euler_phi, factorize};

fn zn(n: u64) -> Graph {
    build_power_graph_zn_fast(n).unwrap()
}

/// Adjacency straight from the definition: one element is a multiple of the other.
fn adjacent_by_powers(n: u64, a: u64, b: u64) -> bool {
    a != b && ((1..=n).any(|k| (k * a) % n == b) || (1..=n).any(|k| (k * b) % n == a))
}

#[test]
fn power_graph_examples() {
    let z4 = build_power_graph(&build_cyclic(4).unwrap());
    assert!(z4.is_complete());
    assert_eq!(z4.vertex_count(), 4);

    let z6 = build_power_graph(&build_cyclic(6).unwrap());
    assert!(!z6.is_adjacent(2, 3));
    assert!(z6.is_adjacent(2, 4));

    let trivial = build_power_graph(&build_cyclic(1).unwrap());
    assert_eq!(trivial.vertex_count(), 1);
    assert_eq!(trivial.edge_count(), 0);
}

#[test]
fn fast_builder_examples() {
    let g = zn(12);
    assert!(g.is_adjacent(2, 10));
    assert!(!g.is_adjacent(4, 6));
    assert!(zn(7).is_complete());
    assert!(build_power_graph_zn_fast(0).is_err());
}

#[test]
fn fast_builder_matches_definition() {
    for n in 1..=40u64 {
        let g = zn(n);
        for a in 0..n {
            for b in 0..n {
                assert_eq!(g.is_adjacent(a as usize, b as usize), adjacent_by_powers(n, a, b), "n={n} {a} {b}");
            }
        }
    }
}

#[test]
fn fast_builder_matches_generic() {
    for n in 1..=500u64 {
        assert_eq!(zn(n), build_power_graph_zn_generic(n).unwrap(), "n={n}");
    }
}

#[test]
fn proper_power_graph_examples() {
    let z5 = build_proper_power_graph(&build_cyclic(5).unwrap());
    assert!(z5.is_complete());
    assert_eq!(z5.vertex_count(), 4);

    let klein = build_proper_power_graph(&build_abelian_p(2, &[1, 1]).unwrap());
    assert_eq!(klein.vertex_count(), 3);
    assert_eq!(klein.edge_count(), 0);

    let g = build_proper_power_graph(&build_abelian_p(2, &[1, 2]).unwrap());
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(components(&g).len(), 3);
}

#[test]
fn generator_set_examples() {
    assert_eq!(generator_set_szn(12), vec![0, 1, 5, 7, 11]);
    assert_eq!(generator_set_szn(6), vec![0, 1, 5]);
    assert_eq!(generator_set_szn(2), vec![0, 1]);
    assert_eq!(generator_set_szn(1), vec![0]);
    for n in 2..=300 {
        assert_eq!(generator_set_szn(n).len() as u64, euler_phi(n).unwrap() + 1);
    }
}

#[test]
fn reduced_graph_examples() {
    let r12 = build_reduced_graph(12).unwrap();
    assert_eq!(r12.elements(), &[2, 3, 4, 6, 8, 9, 10]);

    let r6 = build_reduced_graph(6).unwrap();
    assert_eq!(r6.elements(), &[2, 3, 4]);
    assert_eq!(r6.to_edge_list(), "2 4\n");
    assert_eq!(components(&r6).len(), 2);

    let r4 = build_reduced_graph(4).unwrap();
    assert_eq!(r4.elements(), &[2]);

    assert_eq!(build_reduced_graph(7).unwrap_err(), PowerGraphError::NullReducedGraph(7));
    assert_eq!(build_reduced_graph(1).unwrap_err(), PowerGraphError::NullReducedGraph(1));
}

#[test]
fn reduced_vertices_are_union_of_prime_subgroups() {
    for n in 2..=300u64 {
        let f = factorize(n).unwrap();
        if f.is_prime() {
            continue;
        }
        let mut expected: Vec<usize> = (1..n)
            .filter(|a| f.primes().any(|p| a % p == 0))
            .map(|a| a as usize)
            .collect();
        expected.sort_unstable();
        assert_eq!(build_reduced_graph(n).unwrap().elements(), expected.as_slice());
    }
}

#[test]
fn class_examples() {
    let classes = equiv_classes(&build_cyclic(12).unwrap());
    let summary: Vec<(usize, usize)> = classes
        .blocks()
        .iter()
        .map(|b| (b[0], b.len()))
        .collect();
    assert_eq!(summary, vec![(0, 1), (1, 4), (2, 2), (3, 2), (4, 2), (6, 1)]);
    assert_eq!(equiv_classes(&build_cyclic(13).unwrap()).len(), 2);
    assert_eq!(equiv_classes(&build_cyclic(30).unwrap()).len(), 8);
}

#[test]
fn cyclic_classes_match_divisor_structure() {
    for n in 1..=300u64 {
        let g = build_cyclic(n).unwrap();
        let classes = equiv_classes(&g);
        let generic = ClassPartition::from_keys((0..g.order()).map(|x| g.cyclic_subgroup(x)));
        assert_eq!(classes, generic, "n={n}");
        assert_eq!(classes.len() as u64, factorize(n).unwrap().divisor_count());
        for (b, block) in classes.blocks().iter().enumerate() {
            let rep = classes.representative(b) as u64;
            assert_eq!(rep, gcd(rep, n) % n, "representative is a divisor");
            if rep != 0 {
                assert_eq!(block.len() as u64, euler_phi(n / rep).unwrap());
            }
        }
    }
}

#[test]
fn neighborhood_examples() {
    let g = zn(12);
    assert_eq!(g.neighborhood(&[3, 9]), vec![0, 1, 5, 6, 7, 11]);
    assert!(g.neighborhood(&(0..12).collect::<Vec<_>>()).is_empty());
    assert_eq!(g.neighborhood(&[0]), (1..12).collect::<Vec<_>>());
}

#[test]
fn reduced_class_neighborhood_examples() {
    assert_eq!(reduced_class_neighborhood(12, 3).unwrap(), vec![6]);
    assert_eq!(reduced_class_neighborhood(12, 4).unwrap(), vec![2, 10]);
    assert_eq!(reduced_class_neighborhood(12, 2).unwrap(), vec![4, 6, 8]);
    assert!(reduced_class_neighborhood(12, 5).is_err());
    assert!(reduced_class_neighborhood(12, 0).is_err());
}

#[test]
fn reduced_class_neighborhood_matches_union_formula() {
    for n in 2..=300u64 {
        let full = zn(n);
        for a in 1..n {
            if gcd(a, n) == 1 {
                continue;
            }
            let direct = reduced_class_neighborhood_in(&full, n, a).unwrap();
            let formula = nbd_union_formula(n, a).unwrap();
            assert_eq!(direct, formula, "n={n} a={a}");
        }
    }
}

#[test]
fn quotient_of_reduced_z12() {
    let reduced = build_reduced_graph(12).unwrap();
    let classes = equiv_classes(&build_cyclic(12).unwrap()).on_graph(&reduced);
    let q = quotient_graph(&reduced, &classes).unwrap();
    let reps: Vec<usize> = (0..q.node_count())
        .map(|i| reduced.element(classes.representative(q.node_block(i))))
        .collect();
    assert_eq!(reps, vec![2, 3, 4, 6]);
    assert_eq!(q.weights(), &[2, 2, 2, 1]);
    // [2]-[4], [2]-[6], [3]-[6]
    assert_eq!(q.edges(), vec![(0, 2), (0, 3), (1, 3)]);
}

#[test]
fn quotient_of_reduced_pqr_is_hexagon() {
    for n in [30u64, 42, 66, 70, 105, 1001] {
        let reduced = build_reduced_graph(n).unwrap();
        let classes = equiv_classes(&build_cyclic(n).unwrap()).on_graph(&reduced);
        let q = quotient_graph(&reduced, &classes).unwrap();
        assert_eq!(q.node_count(), 6);
        let rep = |i: usize| reduced.element(classes.representative(i)) as u64;
        let f = factorize(n).unwrap();
        let ps: Vec<u64> = f.primes().collect();
        let (p, qq, r) = (ps[0], ps[1], ps[2]);
        let node = |d: u64| (0..6).find(|&i| rep(i) == d).unwrap();
        let mut expected = vec![
            (p, p * qq),
            (p, p * r),
            (qq, p * qq),
            (qq, qq * r),
            (r, p * r),
            (r, qq * r),
        ]
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (node(a), node(b));
            (x.min(y), x.max(y))
        })
        .collect::<Vec<_>>();
        expected.sort_unstable();
        assert_eq!(q.edges(), expected, "n={n}");
    }
}

#[test]
fn quotient_of_complete_graph() {
    let k = Graph::complete(5);
    let classes = ClassPartition::from_keys((0..5).map(|v| v == 0));
    let q = quotient_graph(&k, &classes).unwrap();
    assert_eq!(q.node_count(), 2);
    assert!(q.is_adjacent(0, 1));
    assert_eq!(q.weights(), &[1, 4]);
}

#[test]
fn quotient_rejects_non_uniform_partition() {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    let bad = ClassPartition::from_keys([0, 0, 1]);
    assert!(matches!(quotient_graph(&path, &bad), Err(PowerGraphError::NotUniform { .. })));
    let not_clique = ClassPartition::from_keys([0, 1, 0]);
    assert!(matches!(
        quotient_graph(&path, &not_clique),
        Err(PowerGraphError::ClassNotClique { .. })
    ));
}

#[test]
fn every_power_graph_is_connected() {
    for g in families::small_groups(256) {
        let graph = build_power_graph(&g);
        assert_eq!(components(&graph).len(), 1, "{}", g.name());
    }
}

#[test]
fn complete_iff_order_one_or_prime_power() {
    for n in 1..=500u64 {
        let f = factorize(n).unwrap();
        assert_eq!(zn(n).is_complete(), n == 1 || f.is_prime_power(), "n={n}");
    }
}

#[test]
fn classes_are_cliques_with_uniform_adjacency() {
    for g in families::small_groups(64) {
        let graph = build_power_graph(&g);
        let classes = equiv_classes(&g);
        quotient_graph(&graph, &classes).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
    }
    for n in 1..=300 {
        let g = build_cyclic(n).unwrap();
        quotient_graph(&zn(n), &equiv_classes(&g)).unwrap();
    }
}

#[test]
fn generators_and_identity_are_universal() {
    for n in 1..=500u64 {
        let g = zn(n);
        for s in generator_set_szn(n) {
            assert_eq!(g.degree(s) as u64, n - 1, "n={n} s={s}");
        }
    }
}

#[test]
fn adjacency_to_one_member_means_adjacency_to_class() {
    for n in 1..=200u64 {
        let graph = zn(n);
        let classes = equiv_classes(&build_cyclic(n).unwrap());
        for x in 0..n as usize {
            for y in 0..n as usize {
                if classes.class_of(x) == classes.class_of(y) || !graph.is_adjacent(x, y) {
                    continue;
                }
                let cls = classes.block(classes.class_of(y));
                assert!(cls.iter().all(|&z| graph.is_adjacent(x, z)), "n={n} x={x} y={y}");
            }
        }
    }
}

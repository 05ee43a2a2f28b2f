//! Constructors for standard families of small groups, all emitted as
//! validated Cayley tables with the identity at index 0.

use super::{build_abelian_p, build_cyclic, FiniteGroup, GroupError};
use crate::numtheory;

/// Dihedral group of order `2n`; `r^k s^f` is index `k + n f`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut cells = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, f) = (x % n, x / n);
        for y in 0..order {
            let (b, g) = (y % n, y / n);
            let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
            cells.push((k + n * ((f + g) % 2)) as u32);
        }
    }
    FiniteGroup::from_table(format!("D_{order}"), order, cells).expect("dihedral table")
}

/// Dicyclic group of order `4n` (`n = 2` gives the quaternion group).
/// `a^k x^j` is index `k + 2n j`, with `a^{2n} = 1`, `x^2 = a^n`, `x a x^-1 = a^-1`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    assert!(n >= 2);
    let m = 2 * n;
    let order = 2 * m;
    let mut cells = Vec::with_capacity(order * order);
    for x in 0..order {
        let (k, j) = (x % m, x / m);
        for y in 0..order {
            let (l, i) = (y % m, y / m);
            let (power, xs) = match (j, i) {
                (0, _) => ((k + l) % m, i),
                (_, 0) => ((k + m - l) % m, 1),
                _ => ((k + m - l + n) % m, 0),
            };
            cells.push((power + m * xs) as u32);
        }
    }
    FiniteGroup::from_table(format!("Dic_{order}"), order, cells).expect("dicyclic table")
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        out.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

fn permutation_group(name: String, perms: Vec<Vec<usize>>) -> FiniteGroup {
    let order = perms.len();
    let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
    let mut cells = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            // (p q)(i) = p(q(i))
            let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
            cells.push(index(&pq) as u32);
        }
    }
    FiniteGroup::from_table(name, order, cells).expect("permutation table")
}

pub fn symmetric(k: usize) -> FiniteGroup {
    permutation_group(format!("S_{k}"), permutations(k))
}

pub fn alternating(k: usize) -> FiniteGroup {
    let perms = permutations(k).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(format!("A_{k}"), perms)
}

/// `G x H`; the pair `(g, h)` is index `g + |G| h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    let mut cells = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let a = g.op(x % m, y % m);
            let b = h.op(x / m, y / m);
            cells.push((a + m * b) as u32);
        }
    }
    FiniteGroup::from_table(format!("{} x {}", g.name(), h.name()), order, cells)
        .expect("direct product table")
}

/// `N : Z_k`, where the generator of `Z_k` acts on `N` by the automorphism
/// `auto` (a permutation of the indices of `N` with `auto^k = 1`).
/// The pair `(x, j)` is index `x + |N| j`.
pub fn semidirect_cyclic(
    name: impl Into<String>,
    n: &FiniteGroup,
    k: usize,
    auto: &[usize],
) -> Result<FiniteGroup, GroupError> {
    let m = n.order();
    assert_eq!(auto.len(), m);
    // powers[j][y] = auto^j(y)
    let mut powers: Vec<Vec<usize>> = vec![(0..m).collect()];
    for j in 1..k {
        powers.push(powers[j - 1].iter().map(|&y| auto[y]).collect());
    }
    let order = m * k;
    let mut cells = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, j) = (x % m, x / m);
        for y in 0..order {
            let (b, l) = (y % m, y / m);
            cells.push((n.op(a, powers[j][b]) + m * ((j + l) % k)) as u32);
        }
    }
    FiniteGroup::from_table(name, order, cells)
}

/// `Z_m : Z_k` with the generator of `Z_k` acting as `a -> a^r`.
pub fn metacyclic(m: usize, k: usize, r: usize) -> Result<FiniteGroup, GroupError> {
    let base = build_cyclic(m as u64)?;
    let auto: Vec<usize> = (0..m).map(|a| a * r % m).collect();
    semidirect_cyclic(format!("Z_{m} : Z_{k} (r={r})"), &base, k, &auto)
}

/// `A : Z_2` with inversion, for an abelian group `A`.
pub fn generalized_dihedral(a: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let inv: Vec<usize> = (0..a.order())
        .map(|x| (0..a.order()).find(|&y| a.op(x, y) == a.identity()).unwrap())
        .collect();
    semidirect_cyclic(format!("Dih({})", a.name()), a, 2, &inv)
}

/// The two order-16 groups `(Z_4 x Z_2) : Z_2` not reachable by the other
/// constructors. With `a` of order 4 and `b` of order 2, `c` acts as
/// `a -> ab, b -> b` for the first and `a -> a, b -> a^2 b` for the second
/// (the central product of `Z_4` and `D_8`).
fn order16_extras() -> Vec<FiniteGroup> {
    let n = direct_product(&build_cyclic(4).unwrap(), &build_cyclic(2).unwrap());
    // a^i b^j is index i + 4j
    let twist = |f: fn(usize, usize) -> (usize, usize)| -> Vec<usize> {
        (0..8)
            .map(|x| {
                let (i, j) = f(x % 4, x / 4);
                i % 4 + 4 * (j % 2)
            })
            .collect()
    };
    vec![
        semidirect_cyclic("(Z_4 x Z_2) : Z_2", &n, 2, &twist(|i, j| (i, i + j))).unwrap(),
        semidirect_cyclic("Z_4 o D_8", &n, 2, &twist(|i, j| (i + 2 * j, j))).unwrap(),
    ]
}

/// Integer partitions of `m` as nondecreasing part lists.
pub fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, 1, &mut Vec::new(), &mut out);
    out
}

/// Every abelian `p`-group of order at most `max_order`, one per exponent
/// multiset, including the cyclic ones.
pub fn abelian_p_groups(max_order: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for p in 2..=max_order as u64 {
        if !numtheory::is_prime(p) {
            continue;
        }
        let mut m = 1u32;
        while p.pow(m) <= max_order as u64 {
            for exps in partitions(m) {
                out.push(build_abelian_p(p, &exps).expect("valid abelian p-group"));
            }
            m += 1;
        }
    }
    out
}

/// A catalog of small groups up to `max_order`: all cyclic groups, all abelian
/// `p`-groups, dihedral and dicyclic groups, `A_4`, `S_4`, some semidirect
/// products and a handful of direct products. Up to order 22 it contains every
/// group up to isomorphism (with a few repeats, e.g. `D_12` and `S_3 x Z_2`).
pub fn small_groups(max_order: usize) -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=max_order as u64)
        .map(|n| build_cyclic(n).unwrap())
        .collect();
    out.extend(
        abelian_p_groups(max_order)
            .into_iter()
            .filter(|g| !g.is_cyclic()),
    );
    out.extend((3..).take_while(|n| 2 * n <= max_order).map(dihedral));
    out.extend((2..).take_while(|n| 4 * n <= max_order).map(dicyclic));
    if max_order >= 12 {
        out.push(alternating(4));
    }
    if max_order >= 24 {
        out.push(symmetric(4));
    }
    let z = |n| build_cyclic(n).unwrap();
    let products: Vec<(FiniteGroup, FiniteGroup)> = vec![
        (z(2), z(6)),
        (z(3), z(6)),
        (z(2), z(10)),
        (z(2), z(12)),
        (z(2), z(14)),
        (build_abelian_p(2, &[1, 1]).unwrap(), z(6)),
        (dihedral(3), z(2)),
        (dihedral(3), z(3)),
        (dihedral(3), z(4)),
        (dihedral(4), z(2)),
        (dihedral(4), z(3)),
        (dicyclic(2), z(2)),
        (dicyclic(2), z(3)),
        (dicyclic(3), z(2)),
        (alternating(4), z(2)),
        (dihedral(5), z(3)),
    ];
    out.extend(
        products
            .into_iter()
            .filter(|(g, h)| g.order() * h.order() <= max_order)
            .map(|(g, h)| direct_product(&g, &h)),
    );
    // (m, k, r): Z_4 : Z_4, M_16, SD_16, F_20, Z_7 : Z_3, Z_9 : Z_3 and Z_13 : Z_3
    let meta = [(4, 4, 3), (8, 2, 5), (8, 2, 3), (5, 4, 2), (7, 3, 2), (9, 3, 4), (13, 3, 3)];
    out.extend(
        meta.iter()
            .filter(|&&(m, k, _)| m * k <= max_order)
            .map(|&(m, k, r)| metacyclic(m, k, r).expect("valid action")),
    );
    if max_order >= 16 {
        out.extend(order16_extras());
    }
    if max_order >= 18 {
        let z3sq = build_abelian_p(3, &[1, 1]).unwrap();
        out.push(generalized_dihedral(&z3sq).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_census(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn family_orders() {
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dicyclic(2).order(), 8);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert!(!dihedral(3).is_abelian());
        assert!(!dicyclic(2).is_abelian());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = dicyclic(2);
        assert_eq!(order_census(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn dihedral_census() {
        // D_8: rotations of order 1, 4, 2, 4 and four reflections.
        assert_eq!(order_census(&dihedral(4)), vec![1, 2, 2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn partitions_counts() {
        let counts: Vec<usize> = (1..=8).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    /// Isomorphism invariants: element order census, abelian flag, centre
    /// census, commutator count and number of distinct squares.
    fn signature(g: &FiniteGroup) -> (usize, Vec<usize>, bool, Vec<usize>, usize, usize) {
        let n = g.order();
        let centre: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| g.op(x, y) == g.op(y, x)))
            .collect();
        let mut centre_census: Vec<usize> = centre.iter().map(|&x| g.element_order(x)).collect();
        centre_census.sort_unstable();
        let inv = |x: usize| (0..n).find(|&y| g.op(x, y) == 0).unwrap();
        let mut commutators = std::collections::BTreeSet::new();
        let mut squares = std::collections::BTreeSet::new();
        for x in 0..n {
            squares.insert(g.op(x, x));
            for y in 0..n {
                commutators.insert(g.op(g.op(inv(x), inv(y)), g.op(x, y)));
            }
        }
        (n, order_census(g), g.is_abelian(), centre_census, commutators.len(), squares.len())
    }

    #[test]
    fn catalog_is_complete_through_order_22() {
        // number of groups of order 1..=22 up to isomorphism
        let known = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2];
        let groups = small_groups(22);
        for (i, &count) in known.iter().enumerate() {
            let distinct: std::collections::BTreeSet<_> = groups
                .iter()
                .filter(|g| g.order() == i + 1)
                .map(signature)
                .collect();
            assert_eq!(distinct.len(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn semidirect_examples() {
        // F_20 has five involutions, the dicyclic group of the same order one.
        let f20 = metacyclic(5, 4, 2).unwrap();
        assert_eq!(order_census(&f20).iter().filter(|&&o| o == 2).count(), 5);
        let m16 = metacyclic(8, 2, 5).unwrap();
        assert!(!m16.is_abelian());
        assert_eq!(order_census(&m16).iter().filter(|&&o| o == 8).count(), 8);
        // a -> a^2 on Z_5 has order 4, not 2
        assert!(metacyclic(5, 2, 2).is_err());
        let dih = generalized_dihedral(&build_abelian_p(3, &[1, 1]).unwrap()).unwrap();
        assert_eq!(order_census(&dih).iter().filter(|&&o| o == 2).count(), 9);
    }

    #[test]
    fn catalog_respects_bound() {
        let groups = small_groups(30);
        assert!(groups.iter().all(|g| g.order() <= 30));
        assert!(groups.iter().any(|g| g.name() == "S_4"));
    }
}

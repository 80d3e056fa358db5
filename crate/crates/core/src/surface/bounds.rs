//! Lower bounds for genus and crosscap number.
//!
//! For a connected simple graph with v ≥ 3 and Euler characteristic χ on a
//! closed surface, f ≤ 2e/3 gives e ≤ 3(v − χ), hence
//! genus ≥ ⌈(e − 3v + 6)/6⌉ and crosscap ≥ ⌈(e − 3v + 6)/3⌉. Both bounds are
//! monotone under subgraphs, so any clique found in the graph raises them to
//! the exact clique values: genus(K_n) = ⌈(n−3)(n−4)/12⌉ and
//! crosscap(K_n) = ⌈(n−3)(n−4)/6⌉ except crosscap(K7) = 3.

use crate::graph::{bits, SimpleGraph};

/// Genus of the complete graph K_n (Ringel–Youngs).
pub fn clique_genus(n: usize) -> u32 {
    if n <= 4 {
        return 0;
    }
    ((n - 3) * (n - 4)).div_ceil(12) as u32
}

/// Crosscap number of K_n: ⌈(n−3)(n−4)/6⌉, except K7 which needs 3 because
/// K7 embeds in the torus but not in the Klein bottle.
pub fn clique_crosscap(n: usize) -> u32 {
    if n <= 4 {
        return 0;
    }
    if n == 7 {
        return 3;
    }
    ((n - 3) * (n - 4)).div_ceil(6) as u32
}

/// A maximum clique search: returns `(size, exact)` where `exact` is false if
/// the node budget ran out (the size is still a valid clique, so it remains a
/// usable lower-bound witness). Branch and bound with a greedy-colouring
/// upper bound on candidate sets.
pub fn max_clique(g: &SimpleGraph, node_budget: u64) -> (usize, bool) {
    let n = g.v();
    if n == 0 {
        return (0, true);
    }
    // Greedy seed: repeatedly take the candidate of largest degree.
    let mut best = greedy_clique(g);
    let words = g.row(0).len();
    let mut nodes = 0u64;
    let mut exact = true;

    // Order vertices by descending degree for better early pruning.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    fn expand(
        g: &SimpleGraph,
        order: &[usize],
        cand: &mut Vec<u64>,
        size: usize,
        best: &mut usize,
        nodes: &mut u64,
        budget: u64,
        exact: &mut bool,
        words: usize,
    ) {
        *nodes += 1;
        if *nodes > budget {
            *exact = false;
            return;
        }
        let members: Vec<usize> = bits(cand).collect();
        if members.is_empty() {
            if size > *best {
                *best = size;
            }
            return;
        }
        // Greedy colouring of the candidate set bounds the clique number.
        let mut colour = vec![0usize; members.len()];
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for (i, &v) in members.iter().enumerate() {
            let mut c = 0;
            while c < classes.len() && classes[c][v / 64] & (1u64 << (v % 64)) != 0 {
                c += 1;
            }
            if c == classes.len() {
                classes.push(vec![0u64; words]);
            }
            for (w, &r) in classes[c].iter_mut().zip(g.row(v)) {
                *w |= r;
            }
            colour[i] = c + 1;
        }
        if size + classes.len() <= *best {
            return;
        }
        // Branch on candidates in `order` sequence, highest colour first.
        let mut seq: Vec<(usize, usize)> =
            members.iter().copied().zip(colour.iter().copied()).collect();
        seq.sort_by_key(|&(_, c)| std::cmp::Reverse(c));
        for &(v, c) in &seq {
            if size + c <= *best {
                return;
            }
            let mut next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            expand(g, order, &mut next, size + 1, best, nodes, budget, exact, words);
            if !*exact {
                return;
            }
            cand[v / 64] &= !(1u64 << (v % 64));
        }
    }

    let mut cand = vec![!0u64; words];
    if n % 64 != 0 {
        cand[words - 1] = (1u64 << (n % 64)) - 1;
    }
    expand(
        g, &order, &mut cand, 0, &mut best, &mut nodes, node_budget, &mut exact, words,
    );
    (best, exact)
}

fn greedy_clique(g: &SimpleGraph) -> usize {
    let n = g.v();
    let mut best = 0;
    for start in 0..n {
        let mut cand: Vec<u64> = g.row(start).to_vec();
        let mut size = 1;
        loop {
            let mut pick = None;
            let mut pick_deg = 0;
            for v in bits(&cand) {
                let d = cand
                    .iter()
                    .zip(g.row(v))
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>();
                if pick.is_none() || d > pick_deg {
                    pick = Some(v);
                    pick_deg = d;
                }
            }
            match pick {
                Some(v) => {
                    size += 1;
                    for (w, &r) in cand.iter_mut().zip(g.row(v)) {
                        *w &= r;
                    }
                }
                None => break,
            }
        }
        best = best.max(size);
    }
    best
}

/// Euler-formula lower bounds `(genus, crosscap)` for a connected graph,
/// raised by the best clique found within `clique_budget` nodes.
pub fn euler_lower_bounds(g: &SimpleGraph, clique_budget: u64) -> (u32, u32) {
    let v = g.v() as i64;
    let e = g.e() as i64;
    let mut genus_lb = 0i64;
    let mut crosscap_lb = 0i64;
    if v >= 3 {
        genus_lb = (e - 3 * v + 6).div_euclid(6) + i64::from((e - 3 * v + 6).rem_euclid(6) > 0);
        crosscap_lb = (e - 3 * v + 6).div_euclid(3) + i64::from((e - 3 * v + 6).rem_euclid(3) > 0);
        genus_lb = genus_lb.max(0);
        crosscap_lb = crosscap_lb.max(0);
    }
    let (clique, _) = max_clique(g, clique_budget);
    (
        (genus_lb as u32).max(clique_genus(clique)),
        (crosscap_lb as u32).max(clique_crosscap(clique)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_formulas_match_known_small_values() {
        let genus: Vec<u32> = (1..=12).map(clique_genus).collect();
        assert_eq!(genus, vec![0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 5, 6]);
        let crosscap: Vec<u32> = (1..=12).map(clique_crosscap).collect();
        assert_eq!(crosscap, vec![0, 0, 0, 0, 1, 1, 3, 4, 5, 7, 10, 12]);
    }

    #[test]
    fn max_clique_on_complete_and_sparse_graphs() {
        assert_eq!(max_clique(&SimpleGraph::complete(8), 1 << 20), (8, true));
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(max_clique(&p4, 1 << 20), (2, true));
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_clique(&c5, 1 << 20), (2, true));
        assert_eq!(max_clique(&SimpleGraph::new(3), 1 << 20), (1, true));
        assert_eq!(max_clique(&SimpleGraph::new(0), 1 << 20), (0, true));
    }

    #[test]
    fn max_clique_finds_planted_clique() {
        // K6 plus pendant paths.
        let mut g = SimpleGraph::new(10);
        for i in 0..6 {
            for j in i + 1..6 {
                g.add_edge(i, j);
            }
        }
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 8);
        g.add_edge(8, 9);
        assert_eq!(max_clique(&g, 1 << 20), (6, true));
    }

    #[test]
    fn euler_bounds_are_tight_on_cliques() {
        assert_eq!(euler_lower_bounds(&SimpleGraph::complete(5), 1 << 20), (1, 1));
        assert_eq!(euler_lower_bounds(&SimpleGraph::complete(7), 1 << 20), (1, 3));
        assert_eq!(euler_lower_bounds(&SimpleGraph::complete(8), 1 << 20), (2, 4));
        assert_eq!(euler_lower_bounds(&SimpleGraph::complete(4), 1 << 20), (0, 0));
    }

    #[test]
    fn euler_bounds_zero_for_tiny_graphs() {
        assert_eq!(euler_lower_bounds(&SimpleGraph::new(1), 1 << 10), (0, 0));
        let k2 = SimpleGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(euler_lower_bounds(&k2, 1 << 10), (0, 0));
    }
}

//! Biconnected blocks. Genus is additive over blocks, and the crosscap of a
//! graph is determined by per-block invariants, so every exact computation
//! starts here.

use crate::graph::SimpleGraph;

/// The biconnected blocks of `g` as sorted vertex lists (a bridge yields a
/// two-vertex block; isolated vertices yield none). Blocks are maximal sets
/// in which every pair of edges lies on a common cycle; two blocks share at
/// most a cut vertex. Order is deterministic: by discovery, then sorted
/// internally.
pub fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.v();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // Iterative DFS; each frame tracks the parent and a neighbor cursor.
    struct Frame {
        v: usize,
        parent: usize,
        neighbors: Vec<usize>,
        idx: usize,
    }

    let mut pop_block = |edge_stack: &mut Vec<(usize, usize)>, until: (usize, usize)| {
        let mut verts = Vec::new();
        while let Some(e) = edge_stack.pop() {
            verts.push(e.0);
            verts.push(e.1);
            if e == until {
                break;
            }
        }
        verts.sort_unstable();
        verts.dedup();
        blocks.push(verts);
    };

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![Frame {
            v: root,
            parent: usize::MAX,
            neighbors: g.neighbors(root).collect(),
            idx: 0,
        }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;

        while let Some(top) = stack.last_mut() {
            if top.idx < top.neighbors.len() {
                let w = top.neighbors[top.idx];
                top.idx += 1;
                let v = top.v;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        neighbors: g.neighbors(w).collect(),
                        idx: 0,
                    });
                } else if w != top.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = stack.pop().unwrap();
                if let Some(parent_frame) = stack.last_mut() {
                    let (v, p) = (done.v, parent_frame.v);
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p separates the subtree at v: emit its block.
                        pop_block(&mut edge_stack, (p, v));
                    }
                }
            }
        }
    }
    blocks
}

/// Cut vertices: members of more than one block.
pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    let blocks = biconnected_blocks(g);
    let mut count = vec![0u32; g.v()];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    (0..g.v()).filter(|&v| count[v] > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_ring_expr;
    use crate::graph::upper_ideal_graph;

    #[test]
    fn complete_graph_is_one_block() {
        let blocks = biconnected_blocks(&SimpleGraph::complete(5));
        assert_eq!(blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(cut_vertices(&SimpleGraph::complete(5)).is_empty());
    }

    #[test]
    fn path_splits_into_edges() {
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut blocks = biconnected_blocks(&p4);
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(cut_vertices(&p4), vec![1, 2]);
    }

    #[test]
    fn bowtie_splits_at_the_waist() {
        let bowtie =
            SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let mut blocks = biconnected_blocks(&bowtie);
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(cut_vertices(&bowtie), vec![2]);
    }

    #[test]
    fn two_field_product_blocks_are_the_cliques() {
        // Γ_U(F_a × F_b) = K1 ∨ (K_{a−1} ∪ K_{b−1}): blocks K_a and K_b at 0.
        let g = upper_ideal_graph(&parse_ring_expr("Z5*Z7").unwrap());
        let blocks = biconnected_blocks(&g);
        let mut sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![5, 7]);
        assert_eq!(cut_vertices(&g), vec![0]);
    }

    #[test]
    fn glued_cliques_with_shared_edge_stay_one_block() {
        // Two K4s sharing an edge are 2-connected.
        let g = upper_ideal_graph(&parse_ring_expr("Z2*Z4").unwrap());
        assert_eq!(biconnected_blocks(&g).len(), 1);
        assert!(cut_vertices(&g).is_empty());
    }

    #[test]
    fn disconnected_graphs_are_handled_per_component() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]);
        let mut blocks = biconnected_blocks(&g);
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![2, 3, 4]]);
    }
}

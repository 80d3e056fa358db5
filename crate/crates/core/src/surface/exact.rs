//! Exact genus and crosscap number via block decomposition.
//!
//! Genus is additive over biconnected blocks. Crosscap composes through
//! ε(B) = min(2·genus(B), crosscap(B)): with ε = Σ_B ε(B), the crosscap of a
//! graph is 0 when every block is planar, ε when some nonplanar block
//! attains ε nonorientably (crosscap(B) ≤ 2·genus(B)), and ε + 1 when every
//! nonplanar block is orientably simple (crosscap(B) > 2·genus(B)), because
//! such blocks must surrender a handle to share a surface.
//!
//! Per block, complete graphs are scored by the closed formulas; anything
//! else starts from Euler/clique lower bounds and climbs surfaces with the
//! embedding search until it finds or refutes. Optional ceilings stop the
//! climb early, leaving honest bounds with `exact = false`.

use super::blocks::biconnected_blocks;
use super::bounds::{clique_crosscap, clique_genus, max_clique};
use super::scheme::{trace_faces, EmbeddingScheme, Surface};
use super::search::{exhaustive_decide, search_embedding, Decision, SearchBudget};
use crate::graph::SimpleGraph;
use serde::Serialize;
use std::collections::BTreeSet;

/// Knobs for `surface_invariants`: surface ceilings stop climbs early,
/// budgets and the seed control the searches.
#[derive(Clone, Debug)]
pub struct SurfaceOptions {
    pub genus_ceiling: Option<u32>,
    pub crosscap_ceiling: Option<u32>,
    pub budget: SearchBudget,
    pub seed: u64,
    /// Node cap for the clique lower-bound search.
    pub clique_nodes: u64,
}

impl Default for SurfaceOptions {
    fn default() -> Self {
        SurfaceOptions {
            genus_ceiling: None,
            crosscap_ceiling: None,
            budget: SearchBudget::default(),
            seed: 0,
            clique_nodes: 1 << 20,
        }
    }
}

/// Genus and crosscap bounds; `*_exact` means lower == upper == the value.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceInvariants {
    pub genus_lower: u32,
    pub genus_upper: u32,
    pub genus_exact: bool,
    pub crosscap_lower: u32,
    pub crosscap_upper: u32,
    pub crosscap_exact: bool,
    /// max(2 − 2·genus, 2 − crosscap) when both are exact.
    pub mu: Option<i32>,
}

#[derive(Clone, Copy)]
struct BlockInv {
    g_lo: u32,
    g_hi: u32,
    g_exact: bool,
    c_lo: u32,
    c_hi: u32,
    c_exact: bool,
}

fn euler_arithmetic_bounds(v: i64, e: i64) -> (u32, u32) {
    if v < 3 {
        return (0, 0);
    }
    let t = e - 3 * v + 6;
    let g = (t.div_euclid(6) + i64::from(t.rem_euclid(6) > 0)).max(0);
    let c = (t.div_euclid(3) + i64::from(t.rem_euclid(3) > 0)).max(0);
    (g as u32, c as u32)
}

fn block_invariants(b: &SimpleGraph, opts: &SurfaceOptions) -> BlockInv {
    let (v, e) = (b.v(), b.e());
    if v <= 2 {
        return BlockInv { g_lo: 0, g_hi: 0, g_exact: true, c_lo: 0, c_hi: 0, c_exact: true };
    }
    if e == v * (v - 1) / 2 {
        let (g, c) = (clique_genus(v), clique_crosscap(v));
        return BlockInv { g_lo: g, g_hi: g, g_exact: true, c_lo: c, c_hi: c, c_exact: true };
    }
    let beta = (e - v + 1) as u32;
    let g_cap = beta / 2;
    let c_cap = beta;
    let gceil = opts.genus_ceiling.unwrap_or(u32::MAX);
    let cceil = opts.crosscap_ceiling.unwrap_or(u32::MAX);
    let (mut g_lo, mut c_lo) = euler_arithmetic_bounds(v as i64, e as i64);
    if g_lo <= gceil || c_lo <= cceil {
        let (q, _) = max_clique(b, opts.clique_nodes);
        g_lo = g_lo.max(clique_genus(q));
        c_lo = c_lo.max(clique_crosscap(q));
    }

    // Orientable climb: every refutation at g raises the bound to g + 1.
    let mut g_hi = g_cap;
    let mut g_exact = false;
    let mut g = g_lo;
    while g <= gceil {
        match search_embedding(b, Surface::Orientable(g), &opts.budget, opts.seed) {
            Decision::Found(_) => {
                g_exact = true;
                break;
            }
            Decision::Refuted => g += 1,
            Decision::Exhausted => break,
        }
    }
    if g_exact {
        g_lo = g;
        g_hi = g;
    } else {
        g_lo = g.min(g_cap);
    }

    // Nonorientable climb; a planar block has crosscap 0 by definition.
    let mut c_hi = c_cap;
    let mut c_exact = false;
    if g_exact && g_lo == 0 {
        c_exact = true;
        c_lo = 0;
        c_hi = 0;
    } else if g_exact || g_lo >= 1 {
        // The block is known nonplanar, so the crosscap is at least 1.
        c_lo = c_lo.max(1);
        let mut k = c_lo;
        while k <= cceil {
            match search_embedding(b, Surface::NonOrientable(k), &opts.budget, opts.seed) {
                Decision::Found(_) => {
                    c_exact = true;
                    c_hi = k;
                    break;
                }
                Decision::Refuted => k += 1,
                Decision::Exhausted => break,
            }
        }
        c_lo = if c_exact { c_hi } else { k.min(c_cap) };
    }
    BlockInv { g_lo, g_hi, g_exact, c_lo, c_hi, c_exact }
}

/// Compute genus and crosscap bounds (exact where the climbs close) for an
/// arbitrary simple graph, by blocks.
pub fn surface_invariants(g: &SimpleGraph, opts: &SurfaceOptions) -> SurfaceInvariants {
    let blocks = biconnected_blocks(g);
    let invs: Vec<BlockInv> = blocks
        .iter()
        .map(|verts| block_invariants(&g.induced(verts), opts))
        .collect();

    let genus_lower: u32 = invs.iter().map(|b| b.g_lo).sum();
    let genus_upper: u32 = invs.iter().map(|b| b.g_hi).sum();
    let genus_exact = invs.iter().all(|b| b.g_exact);

    let all_exact = genus_exact && invs.iter().all(|b| b.c_exact);
    let (crosscap_lower, crosscap_upper, crosscap_exact) = if all_exact {
        let nonplanar: Vec<&BlockInv> = invs.iter().filter(|b| b.g_lo > 0).collect();
        let cr = if nonplanar.is_empty() {
            0
        } else {
            let eps: u32 = nonplanar.iter().map(|b| (2 * b.g_lo).min(b.c_lo)).sum();
            if nonplanar.iter().any(|b| b.c_lo <= 2 * b.g_lo) {
                eps
            } else {
                eps + 1
            }
        };
        (cr, cr, true)
    } else {
        let sum_lo: u32 = invs.iter().map(|b| (2 * b.g_lo).min(b.c_lo)).sum();
        let max_lo = invs.iter().map(|b| b.c_lo).max().unwrap_or(0);
        let lo = sum_lo.max(max_lo);
        let sum_hi: u32 = invs.iter().map(|b| (2 * b.g_hi).min(b.c_hi)).sum();
        let hi = if sum_hi == 0 { 0 } else { sum_hi + 1 };
        (lo, hi.max(lo), false)
    };

    let mu = if genus_exact && crosscap_exact {
        Some((2 - 2 * genus_lower as i32).max(2 - crosscap_lower as i32))
    } else {
        None
    };
    SurfaceInvariants {
        genus_lower,
        genus_upper,
        genus_exact,
        crosscap_lower,
        crosscap_upper,
        crosscap_exact,
        mu,
    }
}

/// Exact genus with default options, if the climbs close.
pub fn genus_exact(g: &SimpleGraph) -> Option<u32> {
    let si = surface_invariants(g, &SurfaceOptions::default());
    si.genus_exact.then_some(si.genus_lower)
}

/// Exact crosscap number with default options, if the climbs close.
pub fn crosscap_exact(g: &SimpleGraph) -> Option<u32> {
    let si = surface_invariants(g, &SurfaceOptions::default());
    si.crosscap_exact.then_some(si.crosscap_lower)
}

/// A sphere embedding of a connected planar graph, assembled by
/// concatenating block embeddings at cut vertices (each concatenation merges
/// one face pair, keeping χ = 2). Returns None if some block refuses to
/// embed in the sphere.
pub fn planar_embedding(g: &SimpleGraph) -> Option<EmbeddingScheme> {
    debug_assert!(g.is_connected());
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.v()];
    for verts in biconnected_blocks(g) {
        let b = g.induced(&verts);
        if verts.len() == 2 {
            rotation[verts[0]].push(verts[1]);
            rotation[verts[1]].push(verts[0]);
            continue;
        }
        match exhaustive_decide(&b, Surface::Orientable(0), 1 << 32) {
            Decision::Found(scheme) => {
                for (local, rot) in scheme.rotation.iter().enumerate() {
                    rotation[verts[local]].extend(rot.iter().map(|&w| verts[w]));
                }
            }
            _ => return None,
        }
    }
    let scheme = EmbeddingScheme {
        surface: Surface::Orientable(0),
        rotation,
        negative: BTreeSet::new(),
    };
    match trace_faces(g, &scheme) {
        Ok(t) => {
            debug_assert_eq!(t.euler_characteristic, 2);
            Some(scheme)
        }
        Err(e) => panic!("block merge produced an invalid scheme: {e}"),
    }
}

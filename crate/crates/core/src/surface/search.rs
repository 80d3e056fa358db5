//! Embedding search. An orientable embedding of a connected graph is a
//! rotation system; faces are orbits of d ↦ ρ(rev(d)) on the 2e darts, and
//! the embedding lies on S_g iff v − e + f = 2 − 2g. A nonorientable
//! embedding is a rotation system plus an edge signature with some negative
//! cycle; faces are mirror-paired orbits on the 4e signed darts. Both
//! searches are face-driven and complete: faces are built one dart at a
//! time, rotations accumulate as partial successor chains, and a branch is
//! cut as soon as the remaining darts cannot fill the remaining faces at
//! three sides each (valid since minimum degree 2 forces faces of length
//! ≥ 3). Signatures are tree-normalized: spanning-tree edges are positive,
//! cotree signs branch on first traversal.

use super::scheme::{trace_faces, EmbeddingScheme, Surface};
use crate::graph::SimpleGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

const UNSET: usize = usize::MAX;

/// Outcome of a surface-membership search.
#[derive(Debug)]
pub enum Decision {
    /// An embedding on the requested surface, already re-traced and checked.
    Found(EmbeddingScheme),
    /// No embedding on the requested surface exists (the search was complete).
    Refuted,
    /// The node budget ran out before the search completed.
    Exhausted,
}

/// Budgets for the exhaustive and stochastic searches.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Branch-node cap for the exhaustive backtracking search.
    pub exhaustive_nodes: u64,
    /// Hill-climbing restarts.
    pub restarts: u32,
    /// Mutation steps per restart.
    pub steps_per_restart: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            exhaustive_nodes: 50_000_000,
            restarts: 64,
            steps_per_restart: 20_000,
        }
    }
}

/// Dart tables: edge k yields dart 2k (low → high endpoint) and 2k+1.
struct Darts {
    head: Vec<usize>,
    out: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Darts {
    fn new(g: &SimpleGraph) -> Self {
        let edges = g.edge_list();
        let mut head = Vec::with_capacity(edges.len() * 2);
        let mut out = vec![Vec::new(); g.v()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            head.push(v);
            head.push(u);
            out[u].push(2 * k);
            out[v].push(2 * k + 1);
        }
        Darts { head, out, edges }
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).expect("edge present")
    }
}

/// Required face count for `g` on `target`, from Euler's formula.
fn face_target(g: &SimpleGraph, target: Surface) -> i64 {
    i64::from(target.euler_characteristic()) - g.v() as i64 + g.e() as i64
}

/// Whether setting succ[x] = y keeps the rotation under construction a
/// disjoint union of chains, or completes the full cycle of length `deg`.
fn chain_ok(succ: &[usize], deg: usize, x: usize, y: usize) -> bool {
    let mut cur = y;
    let mut cnt = 1;
    loop {
        if cur == x {
            return cnt == deg;
        }
        match succ[cur] {
            UNSET => return true,
            nxt => {
                cur = nxt;
                cnt += 1;
            }
        }
    }
}

/// Read complete rotations (as neighbor orders) out of a successor table.
fn rotations_from_succ(d: &Darts, succ: &[usize]) -> Vec<Vec<usize>> {
    d.out
        .iter()
        .map(|darts| {
            let mut rot = Vec::with_capacity(darts.len());
            if darts.is_empty() {
                return rot;
            }
            let first = darts[0];
            let mut cur = first;
            loop {
                rot.push(d.head[cur]);
                cur = succ[cur];
                if cur == first {
                    break;
                }
            }
            debug_assert_eq!(rot.len(), darts.len());
            rot
        })
        .collect()
}

struct OrientableSearch<'a> {
    d: &'a Darts,
    deg: Vec<usize>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    f_target: usize,
    faces_done: usize,
    used: usize,
    total: usize,
    nodes: u64,
    node_budget: u64,
    out_of_budget: bool,
    found: Option<Vec<usize>>,
}

impl<'a> OrientableSearch<'a> {
    fn new_face(&mut self) {
        if self.found.is_some() || self.out_of_budget {
            return;
        }
        if self.faces_done == self.f_target {
            if self.used == self.total {
                self.found = Some(self.succ.clone());
            }
            return;
        }
        if self.used == self.total
            || self.used + 3 * (self.f_target - self.faces_done) > self.total
        {
            return;
        }
        // Canonical start: the smallest dart not yet on any face.
        let d0 = (0..self.total).find(|&d| self.pred[d] == UNSET).unwrap();
        self.used += 1;
        self.extend(d0, d0, 1);
        self.used -= 1;
    }

    fn extend(&mut self, start: usize, cur: usize, len: usize) {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.out_of_budget = true;
            return;
        }
        let v = self.d.head[cur];
        let x = cur ^ 1;
        debug_assert_eq!(self.succ[x], UNSET);
        let need_cur = 3usize.saturating_sub(len + 1);
        let fut = 3 * (self.f_target - self.faces_done - 1);
        for i in 0..self.d.out[v].len() {
            let y = self.d.out[v][i];
            if self.pred[y] != UNSET || !chain_ok(&self.succ, self.deg[v], x, y) {
                continue;
            }
            if y == start {
                self.succ[x] = y;
                self.pred[y] = x;
                self.faces_done += 1;
                self.new_face();
                self.faces_done -= 1;
                self.succ[x] = UNSET;
                self.pred[y] = UNSET;
            } else if self.used + 1 + need_cur + fut <= self.total {
                self.succ[x] = y;
                self.pred[y] = x;
                self.used += 1;
                self.extend(start, y, len + 1);
                self.used -= 1;
                self.succ[x] = UNSET;
                self.pred[y] = UNSET;
            }
            if self.found.is_some() || self.out_of_budget {
                return;
            }
        }
    }
}

struct SignedSearch<'a> {
    d: &'a Darts,
    deg: Vec<usize>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    sigma: Vec<i8>,
    consumed: Vec<bool>,
    orbit: Vec<usize>,
    orbits_done: usize,
    f2: usize,
    used: usize,
    total: usize,
    nodes: u64,
    node_budget: u64,
    out_of_budget: bool,
    found: Option<(Vec<usize>, Vec<i8>)>,
}

impl<'a> SignedSearch<'a> {
    fn new_orbit(&mut self) {
        if self.found.is_some() || self.out_of_budget {
            return;
        }
        if self.orbits_done == self.f2 {
            if self.used == self.total && self.sigma.contains(&-1) {
                self.found = Some((self.succ.clone(), self.sigma.clone()));
            }
            return;
        }
        let pairs = (self.f2 - self.orbits_done) / 2;
        if self.used == self.total || self.used + 6 * pairs > self.total {
            return;
        }
        let s0 = (0..self.total).find(|&s| !self.consumed[s]).unwrap();
        self.consumed[s0] = true;
        self.used += 1;
        self.orbit.push(s0);
        self.step(s0, s0, 1);
        self.orbit.pop();
        self.used -= 1;
        self.consumed[s0] = false;
    }

    fn step(&mut self, start: usize, cur: usize, len: usize) {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.out_of_budget = true;
            return;
        }
        let edge = (cur >> 1) >> 1;
        match self.sigma[edge] {
            0 => {
                for sig in [1i8, -1] {
                    self.sigma[edge] = sig;
                    self.advance(start, cur, len, sig);
                    self.sigma[edge] = 0;
                    if self.found.is_some() || self.out_of_budget {
                        return;
                    }
                }
            }
            sig => self.advance(start, cur, len, sig),
        }
    }

    /// One transition out of state `cur` with its edge sign fixed to `sig`.
    fn advance(&mut self, start: usize, cur: usize, len: usize, sig: i8) {
        let dart = cur >> 1;
        let neg = (cur & 1) == 1;
        let neg_after = neg ^ (sig == -1);
        let v = self.d.head[dart];
        let x = dart ^ 1;
        if !neg_after {
            // Positive side: the face continues along the rotation successor.
            if self.succ[x] != UNSET {
                let next = self.succ[x] << 1;
                self.try_state(start, len, next);
            } else {
                for i in 0..self.d.out[v].len() {
                    let y = self.d.out[v][i];
                    if self.pred[y] != UNSET || !chain_ok(&self.succ, self.deg[v], x, y) {
                        continue;
                    }
                    self.succ[x] = y;
                    self.pred[y] = x;
                    self.try_state(start, len, y << 1);
                    self.succ[x] = UNSET;
                    self.pred[y] = UNSET;
                    if self.found.is_some() || self.out_of_budget {
                        return;
                    }
                }
            }
        } else {
            // Negative side: the face continues along the rotation predecessor.
            if self.pred[x] != UNSET {
                let next = (self.pred[x] << 1) | 1;
                self.try_state(start, len, next);
            } else {
                for i in 0..self.d.out[v].len() {
                    let z = self.d.out[v][i];
                    if self.succ[z] != UNSET || !chain_ok(&self.succ, self.deg[v], z, x) {
                        continue;
                    }
                    self.succ[z] = x;
                    self.pred[x] = z;
                    self.try_state(start, len, (z << 1) | 1);
                    self.succ[z] = UNSET;
                    self.pred[x] = UNSET;
                    if self.found.is_some() || self.out_of_budget {
                        return;
                    }
                }
            }
        }
    }

    fn try_state(&mut self, start: usize, len: usize, next: usize) {
        if next == start {
            self.close_orbit();
            return;
        }
        if self.consumed[next] {
            return;
        }
        let need_cur = 3usize.saturating_sub(len + 1);
        let mirror_cur = (len + 1 + need_cur).max(3);
        let pairs_future = (self.f2 - self.orbits_done - 2) / 2;
        if self.used + 1 + need_cur + mirror_cur + 6 * pairs_future > self.total {
            return;
        }
        self.consumed[next] = true;
        self.used += 1;
        self.orbit.push(next);
        self.step(start, next, len + 1);
        self.orbit.pop();
        self.used -= 1;
        self.consumed[next] = false;
    }

    /// The current orbit closed; its mirror orbit is fully forced by the
    /// same rotation links and signs, so mark it consumed without branching.
    fn close_orbit(&mut self) {
        let l = self.orbit.len();
        debug_assert!(l >= 3);
        let mut mirrors = Vec::with_capacity(l);
        for &st in &self.orbit {
            let dart = st >> 1;
            let neg = (st & 1) == 1;
            let sig = self.sigma[dart >> 1];
            debug_assert!(sig != 0);
            // M(d, s) = (rev d, −s·σ): negative iff s·σ positive.
            let mneg = !(neg ^ (sig == -1));
            let mid = ((dart ^ 1) << 1) | mneg as usize;
            if self.consumed[mid] {
                debug_assert!(false, "orbit equal to its own mirror");
                return;
            }
            mirrors.push(mid);
        }
        for &m in &mirrors {
            self.consumed[m] = true;
        }
        self.used += l;
        self.orbits_done += 2;
        let saved = std::mem::take(&mut self.orbit);
        self.new_orbit();
        self.orbit = saved;
        self.orbits_done -= 2;
        self.used -= l;
        for &m in &mirrors {
            self.consumed[m] = false;
        }
    }
}

/// Complete backtracking decision for "does `g` embed in `target`".
/// `g` must be connected with v ≥ 3 and minimum degree ≥ 2 (callers pass
/// biconnected blocks or whole graphs satisfying this).
pub fn exhaustive_decide(g: &SimpleGraph, target: Surface, node_budget: u64) -> Decision {
    let ft = face_target(g, target);
    if ft < 1 || 2 * g.e() < 3 * ft as usize {
        return Decision::Refuted;
    }
    let f_target = ft as usize;
    debug_assert!(g.is_connected());
    debug_assert!((0..g.v()).all(|v| g.degree(v) >= 2));
    let d = Darts::new(g);
    let deg: Vec<usize> = (0..g.v()).map(|v| g.degree(v)).collect();
    match target {
        Surface::Orientable(_) => {
            let mut s = OrientableSearch {
                d: &d,
                deg,
                succ: vec![UNSET; 2 * g.e()],
                pred: vec![UNSET; 2 * g.e()],
                f_target,
                faces_done: 0,
                used: 0,
                total: 2 * g.e(),
                nodes: 0,
                node_budget,
                out_of_budget: false,
                found: None,
            };
            s.new_face();
            match s.found {
                Some(succ) => {
                    let scheme = EmbeddingScheme {
                        surface: target,
                        rotation: rotations_from_succ(&d, &succ),
                        negative: BTreeSet::new(),
                    };
                    checked(g, scheme)
                }
                None if s.out_of_budget => Decision::Exhausted,
                None => Decision::Refuted,
            }
        }
        Surface::NonOrientable(k) => {
            debug_assert!(k >= 1);
            if g.e() < g.v() {
                // No cycle, hence no unbalanced signature.
                return Decision::Refuted;
            }
            let mut sigma = vec![0i8; g.e()];
            // Tree normalization: spanning-tree edges are positive.
            let mut seen = vec![false; g.v()];
            let mut queue = vec![0usize];
            seen[0] = true;
            while let Some(u) = queue.pop() {
                for w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        sigma[d.edge_index(u, w)] = 1;
                        queue.push(w);
                    }
                }
            }
            let mut s = SignedSearch {
                d: &d,
                deg,
                succ: vec![UNSET; 2 * g.e()],
                pred: vec![UNSET; 2 * g.e()],
                sigma,
                consumed: vec![false; 4 * g.e()],
                orbit: Vec::new(),
                orbits_done: 0,
                f2: 2 * f_target,
                used: 0,
                total: 4 * g.e(),
                nodes: 0,
                node_budget,
                out_of_budget: false,
                found: None,
            };
            s.new_orbit();
            match s.found {
                Some((succ, sigma)) => {
                    let negative = d
                        .edges
                        .iter()
                        .zip(&sigma)
                        .filter(|&(_, &s)| s == -1)
                        .map(|(&e, _)| e)
                        .collect();
                    let scheme = EmbeddingScheme {
                        surface: target,
                        rotation: rotations_from_succ(&d, &succ),
                        negative,
                    };
                    checked(g, scheme)
                }
                None if s.out_of_budget => Decision::Exhausted,
                None => Decision::Refuted,
            }
        }
    }
}

/// Re-trace a scheme produced by a search; any mismatch is a bug.
fn checked(g: &SimpleGraph, scheme: EmbeddingScheme) -> Decision {
    match trace_faces(g, &scheme) {
        Ok(_) => Decision::Found(scheme),
        Err(e) => panic!("search produced an invalid scheme: {e}"),
    }
}

fn set_vertex_rotation(rot_v: &[usize], succ: &mut [usize], pred: &mut [usize]) {
    for i in 0..rot_v.len() {
        let a = rot_v[i];
        let b = rot_v[(i + 1) % rot_v.len()];
        succ[a] = b;
        pred[b] = a;
    }
}

/// Count faces of a complete rotation/signature pair: orbit count over the
/// 4e signed darts, halved (orbits come in mirror pairs).
fn trace_count(succ: &[usize], pred: &[usize], sigma: &[i8]) -> usize {
    let total = succ.len() * 2;
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for s0 in 0..total {
        if seen[s0] {
            continue;
        }
        orbits += 1;
        let mut cur = s0;
        while !seen[cur] {
            seen[cur] = true;
            let dart = cur >> 1;
            let neg_after = (cur & 1 == 1) ^ (sigma[dart >> 1] == -1);
            let x = dart ^ 1;
            let nd = if neg_after { pred[x] } else { succ[x] };
            cur = (nd << 1) | neg_after as usize;
        }
        debug_assert_eq!(cur, s0);
    }
    debug_assert_eq!(orbits % 2, 0);
    orbits / 2
}

/// Seeded hill climbing over rotation systems (and cotree signs for
/// nonorientable targets). Objective: face count, accepted on ties so the
/// walk drifts across plateaus. Returns the first scheme whose traced face
/// count matches the target surface exactly.
pub fn stochastic_search(
    g: &SimpleGraph,
    target: Surface,
    restarts: u32,
    steps: u32,
    seed: u64,
) -> Option<EmbeddingScheme> {
    let ft = face_target(g, target);
    if ft < 1 {
        return None;
    }
    let f_target = ft as usize;
    let d = Darts::new(g);
    let nonorientable = !target.is_orientable();
    // Cotree edges: sign flips stay inside them so "some negative cotree
    // edge" remains equivalent to "unbalanced".
    let mut tree = vec![false; g.e()];
    let mut seen = vec![false; g.v()];
    let mut queue = vec![0usize];
    seen[0] = true;
    while let Some(u) = queue.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                tree[d.edge_index(u, w)] = true;
                queue.push(w);
            }
        }
    }
    let cotree: Vec<usize> = (0..g.e()).filter(|&k| !tree[k]).collect();
    if nonorientable && cotree.is_empty() {
        return None;
    }
    let deg3: Vec<usize> = (0..g.v()).filter(|&v| g.degree(v) >= 3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..restarts {
        let mut rot: Vec<Vec<usize>> = d.out.clone();
        for r in &mut rot {
            r.shuffle(&mut rng);
        }
        let mut sigma = vec![1i8; g.e()];
        let mut negs = 0usize;
        if nonorientable {
            sigma[cotree[rng.gen_range(0..cotree.len())]] = -1;
            negs = 1;
        }
        let mut succ = vec![UNSET; 2 * g.e()];
        let mut pred = vec![UNSET; 2 * g.e()];
        for v in 0..g.v() {
            set_vertex_rotation(&rot[v], &mut succ, &mut pred);
        }
        let mut faces = trace_count(&succ, &pred, &sigma);
        for _ in 0..steps {
            if faces == f_target && (!nonorientable || negs > 0) {
                let scheme = EmbeddingScheme {
                    surface: target,
                    rotation: rot
                        .iter()
                        .map(|r| r.iter().map(|&dart| d.head[dart]).collect())
                        .collect(),
                    negative: d
                        .edges
                        .iter()
                        .zip(&sigma)
                        .filter(|&(_, &s)| s == -1)
                        .map(|(&e, _)| e)
                        .collect(),
                };
                if trace_faces(g, &scheme).is_ok() {
                    return Some(scheme);
                }
                debug_assert!(false, "hill climb produced an invalid scheme");
                return None;
            }
            if nonorientable && !cotree.is_empty() && rng.gen_bool(0.3) {
                let c = cotree[rng.gen_range(0..cotree.len())];
                if sigma[c] == -1 && negs == 1 {
                    continue;
                }
                sigma[c] = -sigma[c];
                let f2 = trace_count(&succ, &pred, &sigma);
                if f2 >= faces {
                    faces = f2;
                    negs = (negs as isize + if sigma[c] == -1 { 1 } else { -1 }) as usize;
                } else {
                    sigma[c] = -sigma[c];
                }
            } else {
                if deg3.is_empty() {
                    break;
                }
                let v = deg3[rng.gen_range(0..deg3.len())];
                let dv = rot[v].len();
                let i = rng.gen_range(0..dv);
                let j = (i + 1) % dv;
                rot[v].swap(i, j);
                set_vertex_rotation(&rot[v], &mut succ, &mut pred);
                let f2 = trace_count(&succ, &pred, &sigma);
                if f2 >= faces {
                    faces = f2;
                } else {
                    rot[v].swap(i, j);
                    set_vertex_rotation(&rot[v], &mut succ, &mut pred);
                }
            }
        }
    }
    None
}

/// Search for an embedding of `g` on exactly `target`: a cheap Euler screen,
/// then hill climbing when the face budget is loose, then the complete
/// backtracking decision. `Refuted` is definitive; `Exhausted` only reports
/// that `budget.exhaustive_nodes` ran out.
pub fn search_embedding(
    g: &SimpleGraph,
    target: Surface,
    budget: &SearchBudget,
    seed: u64,
) -> Decision {
    let ft = face_target(g, target);
    if ft < 1 || 2 * g.e() < 3 * ft as usize {
        return Decision::Refuted;
    }
    let slack = 2 * g.e() as i64 - 3 * ft;
    if slack > 8 && budget.restarts > 0 {
        if let Some(scheme) =
            stochastic_search(g, target, budget.restarts, budget.steps_per_restart, seed)
        {
            return Decision::Found(scheme);
        }
    }
    exhaustive_decide(g, target, budget.exhaustive_nodes)
}

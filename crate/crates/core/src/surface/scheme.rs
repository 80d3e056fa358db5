//! Embedding schemes (rotation systems with edge signs) and face tracing.
//!
//! A scheme on a connected graph determines a cellular embedding in a unique
//! surface. Faces are traced on *sided arcs*: a state is a directed arc
//! `u → v` carried with a side `s ∈ {+1, −1}`. From `(u → v, s)` the trace
//! moves to side `s' = s·σ(uv)` and leaves `v` along the rotation successor
//! (for `s' = +1`) or predecessor (`s' = −1`) of `u` in the cyclic order at
//! `v`. Every face corresponds to exactly two orbits of this successor map
//! (a face and its mirror), so `f = orbits / 2`.
//!
//! The scheme is orientable iff its signature is balanced (every cycle has
//! positive sign product), which is tested by two-coloring a spanning tree.

use crate::graph::SimpleGraph;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

/// A closed surface: `S_g` (orientable, `g` handles) or `N_k` (non-orientable,
/// `k` crosscaps, `k ≥ 1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Surface {
    Orientable(u32),
    NonOrientable(u32),
}

impl Surface {
    /// `χ(S_g) = 2 − 2g`, `χ(N_k) = 2 − k`.
    pub fn euler_characteristic(&self) -> i64 {
        match self {
            Surface::Orientable(g) => 2 - 2 * *g as i64,
            Surface::NonOrientable(k) => 2 - *k as i64,
        }
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self, Surface::Orientable(_))
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Orientable(g) => write!(f, "orientable {g}"),
            Surface::NonOrientable(k) => write!(f, "nonorientable {k}"),
        }
    }
}

impl serde::Serialize for Surface {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("scheme has {found} rotations but the graph has {expected} vertices")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    RotationMismatch(usize),
    #[error("sign given for non-edge {0} -- {1}")]
    SignOnNonEdge(usize, usize),
    #[error("face tracing requires a connected graph")]
    NotConnected,
    #[error("declared surface `{declared}` but the trace gives `{traced}`")]
    SurfaceMismatch { declared: Surface, traced: Surface },
    #[error("no stored certificate named `{0}`")]
    MissingCertificate(String),
}

/// A rotation system with edge signs and the surface it claims to embed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingScheme {
    pub surface: Surface,
    /// `rotation[v]` lists the neighbors of `v` in cyclic order.
    pub rotation: Vec<Vec<usize>>,
    /// Edges with sign −1, normalized `(min, max)`; absent edges are +1.
    pub negative: BTreeSet<(usize, usize)>,
}

impl EmbeddingScheme {
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        let key = (u.min(v), u.max(v));
        if self.negative.contains(&key) {
            -1
        } else {
            1
        }
    }

    /// Serialize to the certificate text format:
    /// `surface <kind> <n>`, one `rot <v> <neighbors…>` line per vertex,
    /// and a `sign <u> <v> -1` line per negative edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("surface {}\n", self.surface);
        for (v, rot) in self.rotation.iter().enumerate() {
            out.push_str(&format!("rot {v}"));
            for w in rot {
                out.push_str(&format!(" {w}"));
            }
            out.push('\n');
        }
        for (u, v) in &self.negative {
            out.push_str(&format!("sign {u} {v} -1\n"));
        }
        out
    }

    /// Parse the certificate text format.
    pub fn parse(text: &str) -> Result<EmbeddingScheme, SchemeError> {
        let err = |line: usize, msg: &str| SchemeError::Parse { line, msg: msg.to_string() };
        let mut surface: Option<Surface> = None;
        let mut rotations: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut negative: BTreeSet<(usize, usize)> = BTreeSet::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "surface" => {
                    if tokens.len() != 3 {
                        return Err(err(line_no, "expected `surface <kind> <number>`"));
                    }
                    let n: u32 = tokens[2]
                        .parse()
                        .map_err(|_| err(line_no, "surface number must be an integer"))?;
                    surface = Some(match tokens[1] {
                        "orientable" => Surface::Orientable(n),
                        "nonorientable" => Surface::NonOrientable(n),
                        _ => return Err(err(line_no, "kind must be orientable|nonorientable")),
                    });
                }
                "rot" => {
                    if tokens.len() < 2 {
                        return Err(err(line_no, "expected `rot <vertex> <neighbors…>`"));
                    }
                    let v: usize = tokens[1]
                        .parse()
                        .map_err(|_| err(line_no, "rot vertex must be an integer"))?;
                    let mut rot = Vec::with_capacity(tokens.len() - 2);
                    for t in &tokens[2..] {
                        rot.push(
                            t.parse()
                                .map_err(|_| err(line_no, "rot neighbors must be integers"))?,
                        );
                    }
                    if rotations.insert(v, rot).is_some() {
                        return Err(err(line_no, "duplicate rot line"));
                    }
                }
                "sign" => {
                    if tokens.len() != 4 || tokens[3] != "-1" {
                        return Err(err(line_no, "expected `sign <u> <v> -1`"));
                    }
                    let u: usize = tokens[1]
                        .parse()
                        .map_err(|_| err(line_no, "sign endpoints must be integers"))?;
                    let v: usize = tokens[2]
                        .parse()
                        .map_err(|_| err(line_no, "sign endpoints must be integers"))?;
                    negative.insert((u.min(v), u.max(v)));
                }
                _ => return Err(err(line_no, "unknown directive")),
            }
        }

        let surface = surface.ok_or_else(|| err(1, "missing `surface` line"))?;
        let n = rotations.len();
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            rotation.push(
                rotations
                    .remove(&v)
                    .ok_or_else(|| err(1, &format!("missing rot line for vertex {v}")))?,
            );
        }
        for (v, rot) in rotation.iter().enumerate() {
            if let Some(&w) = rot.iter().find(|&&w| w >= n) {
                return Err(err(1, &format!("rot {v} mentions vertex {w}, which has no rot line")));
            }
        }
        Ok(EmbeddingScheme { surface, rotation, negative })
    }
}

/// Result of a successful face trace.
#[derive(Clone, Copy, Debug)]
pub struct FaceTrace {
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub surface: Surface,
}

/// Whether the signature is balanced: the sign product of every cycle is +1.
/// Tested by propagating vertex potentials over a spanning tree and checking
/// all non-tree edges.
fn is_balanced(g: &SimpleGraph, scheme: &EmbeddingScheme) -> bool {
    let n = g.v();
    let mut pot = vec![0i8; n];
    pot[0] = 1;
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if pot[v] == 0 {
                pot[v] = pot[u] * scheme.sign(u, v);
                stack.push(v);
            }
        }
    }
    (0..n).all(|u| g.neighbors(u).all(|v| scheme.sign(u, v) == pot[u] * pot[v]))
}

/// Trace the faces of `scheme` on `g`, verify the Euler identity, and check
/// the declared surface against the traced one.
pub fn trace_faces(g: &SimpleGraph, scheme: &EmbeddingScheme) -> Result<FaceTrace, SchemeError> {
    let n = g.v();
    let e = g.e();
    if scheme.rotation.len() != n {
        return Err(SchemeError::WrongVertexCount { expected: n, found: scheme.rotation.len() });
    }
    if n == 1 && e == 0 {
        // K1 embeds in the sphere with one face.
        let traced = Surface::Orientable(0);
        if scheme.surface != traced {
            return Err(SchemeError::SurfaceMismatch { declared: scheme.surface, traced });
        }
        return Ok(FaceTrace { faces: 1, euler_characteristic: 2, orientable: true, surface: traced });
    }
    if !g.is_connected() {
        return Err(SchemeError::NotConnected);
    }
    for v in 0..n {
        let mut sorted = scheme.rotation[v].clone();
        sorted.sort_unstable();
        let mut expected: Vec<usize> = g.neighbors(v).collect();
        expected.sort_unstable();
        if sorted != expected {
            return Err(SchemeError::RotationMismatch(v));
        }
    }
    for &(u, v) in &scheme.negative {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(SchemeError::SignOnNonEdge(u, v));
        }
    }

    // Arc bookkeeping: arc ids in rotation order, positions for O(1) steps.
    let mut arc_id: HashMap<(usize, usize), usize> = HashMap::with_capacity(2 * e);
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * e);
    let mut pos: HashMap<(usize, usize), usize> = HashMap::with_capacity(2 * e);
    for u in 0..n {
        for (i, &w) in scheme.rotation[u].iter().enumerate() {
            arc_id.insert((u, w), arcs.len());
            arcs.push((u, w));
            pos.insert((u, w), i);
        }
    }

    // States are (arc, side); the successor permutation's orbit count is 2f.
    let states = 4 * e;
    let next = |state: usize| -> usize {
        let (a, neg_side) = (state / 2, state % 2 == 1);
        let (u, v) = arcs[a];
        let s = if neg_side { -1 } else { 1 };
        let s2 = s * scheme.sign(u, v);
        let d = scheme.rotation[v].len();
        let i = pos[&(v, u)];
        let w = if s2 > 0 {
            scheme.rotation[v][(i + 1) % d]
        } else {
            scheme.rotation[v][(i + d - 1) % d]
        };
        arc_id[&(v, w)] * 2 + usize::from(s2 < 0)
    };

    let mut seen = vec![false; states];
    let mut orbits = 0usize;
    for start in 0..states {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = next(s);
        }
    }
    debug_assert_eq!(orbits % 2, 0, "orbits pair into faces");
    let faces = orbits / 2;

    let orientable = is_balanced(g, scheme);
    let chi = n as i64 - e as i64 + faces as i64;
    debug_assert!(chi <= 2);
    let traced = if orientable {
        debug_assert_eq!((2 - chi) % 2, 0);
        Surface::Orientable(((2 - chi) / 2) as u32)
    } else {
        Surface::NonOrientable((2 - chi) as u32)
    };
    if traced != scheme.surface {
        return Err(SchemeError::SurfaceMismatch { declared: scheme.surface, traced });
    }
    Ok(FaceTrace { faces, euler_characteristic: chi, orientable, surface: traced })
}

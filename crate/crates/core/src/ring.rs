//! Finite commutative rings as explicit operation tables.
//!
//! A ring of order `n` is a pair of `n × n` tables over element indices.
//! Index `0` is the additive zero. Rings are built as direct products of
//! local factors from the [`catalog`](crate::catalog); elements of a product
//! are ordered lexicographically by factor coordinates (first factor most
//! significant), so `0 = (0,…,0)` and the identity is `(1,…,1)` with `1`
//! the identity index of each factor.
//!
//! Everything downstream — units, principal ideals, the upper ideal relation
//! graph — is computed directly from the tables, never from the presentation
//! that produced them.

use crate::catalog::LocalRingSpec;
use thiserror::Error;

/// Hard cap on the order of a constructed product ring; tables are dense
/// `order²` arrays, so this bounds memory at ~64 MiB per ring.
pub const MAX_PRODUCT_ORDER: u64 = 4096;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("a product ring needs at least one factor")]
    EmptyProduct,
    #[error("product order {0} exceeds the supported maximum {MAX_PRODUCT_ORDER}")]
    TooLarge(u64),
}

/// A sorted, duplicate-free set of element indices of some fixed ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    elems: Vec<u16>,
}

impl ElementSet {
    pub fn new(mut elems: Vec<u16>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        ElementSet { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Two-pointer subset test; both sets are sorted.
    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        let mut it = other.elems.iter();
        'outer: for &x in &self.elems {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.elems
    }
}

/// A finite commutative ring with identity, stored as explicit tables.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    one: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    /// Catalog identifiers of the local factors, in construction order.
    factor_ids: Vec<&'static str>,
    factor_orders: Vec<u16>,
}

impl FiniteRing {
    /// Direct product of local factors, componentwise operations.
    pub fn product(factors: &[&LocalRingSpec]) -> Result<FiniteRing, RingError> {
        if factors.is_empty() {
            return Err(RingError::EmptyProduct);
        }
        let total: u64 = factors.iter().map(|f| f.order() as u64).product();
        if total > MAX_PRODUCT_ORDER {
            return Err(RingError::TooLarge(total));
        }
        let n = total as usize;
        let k = factors.len();
        let factor_orders: Vec<u16> = factors.iter().map(|f| f.order()).collect();

        // Pre-decode every index into its coordinate tuple (flat n × k).
        let mut coords = vec![0u16; n * k];
        for i in 0..n {
            let mut rest = i;
            for f in (0..k).rev() {
                coords[i * k + f] = (rest % factor_orders[f] as usize) as u16;
                rest /= factor_orders[f] as usize;
            }
        }

        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let (mut a, mut m) = (0usize, 0usize);
                for f in 0..k {
                    let (ci, cj) = (coords[i * k + f], coords[j * k + f]);
                    a = a * factor_orders[f] as usize + factors[f].add(ci, cj) as usize;
                    m = m * factor_orders[f] as usize + factors[f].mul(ci, cj) as usize;
                }
                add[i * n + j] = a as u16;
                mul[i * n + j] = m as u16;
            }
        }

        let mut one = 0usize;
        for f in factors {
            one = one * f.order() as usize + f.one() as usize;
        }

        Ok(FiniteRing {
            order: n,
            one: one as u16,
            add,
            mul,
            factor_ids: factors.iter().map(|f| f.id()).collect(),
            factor_orders,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> u16 {
        0
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    /// Catalog ids of the local factors.
    pub fn factor_ids(&self) -> &[&'static str] {
        &self.factor_ids
    }

    /// Canonical expression for this ring: factor ids joined by `*`.
    pub fn expr(&self) -> String {
        self.factor_ids.join("*")
    }

    /// Coordinates of an element in the factor decomposition.
    pub fn coords(&self, i: u16) -> Vec<u16> {
        let k = self.factor_orders.len();
        let mut out = vec![0u16; k];
        let mut rest = i as usize;
        for f in (0..k).rev() {
            out[f] = (rest % self.factor_orders[f] as usize) as u16;
            rest /= self.factor_orders[f] as usize;
        }
        out
    }

    /// Display label of an element: its coordinate tuple, e.g. `(0,1,2)`.
    pub fn element_label(&self, i: u16) -> String {
        let coords = self.coords(i);
        let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(","))
    }

    /// The unit group, by brute inverse scan: `x` is a unit iff some `y`
    /// has `x·y = 1`.
    pub fn units(&self) -> ElementSet {
        let n = self.order;
        let mut units = Vec::new();
        for x in 0..n {
            let row = &self.mul[x * n..(x + 1) * n];
            if row.iter().any(|&p| p == self.one) {
                units.push(x as u16);
            }
        }
        ElementSet::new(units)
    }

    /// All non-units, ascending.
    pub fn nonunits(&self) -> Vec<u16> {
        let units = self.units();
        (0..self.order as u16).filter(|&x| !units.contains(x)).collect()
    }

    /// The principal ideal `(x) = { a·x : a ∈ R }`.
    pub fn principal_ideal(&self, x: u16) -> ElementSet {
        let n = self.order;
        let mut elems: Vec<u16> = (0..n).map(|a| self.mul[a * n + x as usize]).collect();
        elems.sort_unstable();
        elems.dedup();
        ElementSet { elems }
    }

    /// The maximal elements of the poset of proper principal ideals, i.e. the
    /// distinct ideals `(z)` over non-units `z` that are contained in no other
    /// such ideal. Sorted by element list for determinism.
    ///
    /// These are exactly the cliques whose union is the upper ideal relation
    /// graph.
    pub fn maximal_proper_principal_ideals(&self) -> Vec<ElementSet> {
        let mut distinct: Vec<ElementSet> = Vec::new();
        for x in self.nonunits() {
            let ideal = self.principal_ideal(x);
            if !distinct.contains(&ideal) {
                distinct.push(ideal);
            }
        }
        let mut maximal: Vec<ElementSet> = distinct
            .iter()
            .filter(|i| {
                !distinct
                    .iter()
                    .any(|j| j.len() > i.len() && i.is_subset_of(j))
            })
            .cloned()
            .collect();
        maximal.sort();
        maximal
    }
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("expr", &self.expr())
            .field("order", &self.order)
            .finish()
    }
}

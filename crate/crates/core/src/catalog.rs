//! Curated catalog of finite local commutative rings of order ≤ 9, and
//! enumeration of their direct products.
//!
//! Up to isomorphism the local rings of each order are classical:
//!
//! * prime order `p`: the field `Z_p`;
//! * order `p²`: `Z_{p²}`, `Z_p[x]/(x²)`, and the field `F_{p²}`;
//! * order 8: the field `F_8`, the chain rings `Z_8`, `Z_2[x]/(x³)`,
//!   `Z_4[x]/(2x, x²−2)`, and the non-chain rings `Z_2[x,y]/(x², xy, y²)`,
//!   `Z_4[x]/(2x, x²)`.
//!
//! Each entry carries a presentation from which its operation tables are
//! generated once; the unit group, the maximal ideal, and whether that ideal
//! is principal are then computed from the tables, never assumed.
//!
//! A *non-local* finite commutative ring is a direct product of at least two
//! local ones, so enumerating multisets of catalog entries enumerates every
//! non-local ring whose factors stay within the catalog bound. Multisets are
//! kept in catalog order, which makes `Z2*Z8` — and never `Z8*Z2` — the
//! canonical expression of that ring.

use crate::ring::{FiniteRing, RingError};
use std::sync::OnceLock;
use thiserror::Error;

/// Largest local-ring order the catalog covers.
pub const MAX_CATALOG_ORDER: u16 = 9;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("max_order {0} exceeds the curated catalog bound of {MAX_CATALOG_ORDER}")]
    UnsupportedBound(u16),
    #[error("unknown ring id `{token}`; valid ids: {}", valid_ids().join(" "))]
    UnknownId { token: String },
    #[error("empty ring expression")]
    EmptyExpr,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// How a local ring's tables are generated.
#[derive(Clone, Debug)]
enum Presentation {
    /// Integers modulo `n`, `n` a prime power.
    Modular { n: u16 },
    /// `Z_p[x]/(m)` for a monic polynomial `m` (coefficients low → high);
    /// elements are polynomials of degree < deg m, index `Σ aᵢ pⁱ`.
    PolyQuotient { p: u16, modulus: Vec<u16> },
    /// `Z_p[x,y]/(x², xy, y²)`: elements `a + bx + cy`, index `a + bp + cp²`.
    BivariateNil { p: u16 },
    /// `Z_4[x]/(2x, x² − c)` with `c ∈ {0, 2}`: elements `a + bx` with
    /// `a ∈ Z_4`, `b ∈ Z_2` (because `2x = 0`), index `a + 4b`.
    Z4Ext { xsq: u16 },
}

impl Presentation {
    fn order(&self) -> u16 {
        match self {
            Presentation::Modular { n } => *n,
            Presentation::PolyQuotient { p, modulus } => {
                p.pow(modulus.len() as u32 - 1)
            }
            Presentation::BivariateNil { p } => p * p * p,
            Presentation::Z4Ext { .. } => 8,
        }
    }

    fn add(&self, a: u16, b: u16) -> u16 {
        match self {
            Presentation::Modular { n } => (a + b) % n,
            Presentation::PolyQuotient { p, modulus } => {
                let d = modulus.len() - 1;
                let (xs, ys) = (digits(a, *p, d), digits(b, *p, d));
                let sum: Vec<u16> = xs.iter().zip(&ys).map(|(x, y)| (x + y) % p).collect();
                undigits(&sum, *p)
            }
            Presentation::BivariateNil { p } => {
                let (xs, ys) = (digits(a, *p, 3), digits(b, *p, 3));
                let sum: Vec<u16> = xs.iter().zip(&ys).map(|(x, y)| (x + y) % p).collect();
                undigits(&sum, *p)
            }
            Presentation::Z4Ext { .. } => {
                let (a0, a1) = (a % 4, a / 4);
                let (b0, b1) = (b % 4, b / 4);
                (a0 + b0) % 4 + 4 * ((a1 + b1) % 2)
            }
        }
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        match self {
            Presentation::Modular { n } => (a * b) % n,
            Presentation::PolyQuotient { p, modulus } => {
                let d = modulus.len() - 1;
                let (xs, ys) = (digits(a, *p, d), digits(b, *p, d));
                // Schoolbook product, then reduce by the monic modulus.
                let mut prod = vec![0u16; 2 * d.max(1)];
                for (i, x) in xs.iter().enumerate() {
                    for (j, y) in ys.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (d..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate().take(d) {
                        let idx = k - d + i;
                        prod[idx] = (prod[idx] + p * p - (c * m) % p) % p;
                    }
                }
                undigits(&prod[..d], *p)
            }
            Presentation::BivariateNil { p } => {
                // (a + bx + cy)(a' + b'x + c'y) with x² = xy = y² = 0.
                let (xs, ys) = (digits(a, *p, 3), digits(b, *p, 3));
                let c0 = (xs[0] * ys[0]) % p;
                let c1 = (xs[0] * ys[1] + xs[1] * ys[0]) % p;
                let c2 = (xs[0] * ys[2] + xs[2] * ys[0]) % p;
                undigits(&[c0, c1, c2], *p)
            }
            Presentation::Z4Ext { xsq } => {
                // (a + bx)(a' + b'x) = aa' + bb'·x² + (ab' + a'b)x, 2x = 0.
                let (a0, a1) = (a % 4, a / 4);
                let (b0, b1) = (b % 4, b / 4);
                let konst = (a0 * b0 + a1 * b1 * xsq) % 4;
                let xcoef = (a0 * b1 + b0 * a1) % 2;
                konst + 4 * xcoef
            }
        }
    }
}

fn digits(mut v: u16, p: u16, len: usize) -> Vec<u16> {
    let mut out = vec![0u16; len];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn undigits(digits: &[u16], p: u16) -> u16 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// A catalog local ring: identifier, generated tables, and structural facts
/// computed from them.
#[derive(Clone, Debug)]
pub struct LocalRingSpec {
    id: &'static str,
    order: u16,
    one: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    maximal_ideal: Vec<u16>,
    is_field: bool,
    maximal_ideal_is_principal: bool,
}

impl LocalRingSpec {
    fn build(id: &'static str, presentation: Presentation) -> LocalRingSpec {
        let n = presentation.order();
        let mut add = vec![0u16; n as usize * n as usize];
        let mut mul = vec![0u16; n as usize * n as usize];
        for a in 0..n {
            for b in 0..n {
                add[a as usize * n as usize + b as usize] = presentation.add(a, b);
                mul[a as usize * n as usize + b as usize] = presentation.mul(a, b);
            }
        }
        let one = 1u16;
        debug_assert!((0..n).all(|a| mul[a as usize * n as usize + 1] == a));

        // Non-units form the maximal ideal of a local ring.
        let is_unit = |x: u16| (0..n).any(|y| mul[x as usize * n as usize + y as usize] == one);
        let maximal_ideal: Vec<u16> = (0..n).filter(|&x| !is_unit(x)).collect();
        let is_field = maximal_ideal == [0];
        let maximal_ideal_is_principal = maximal_ideal.iter().any(|&z| {
            let mut ideal: Vec<u16> = (0..n)
                .map(|a| mul[a as usize * n as usize + z as usize])
                .collect();
            ideal.sort_unstable();
            ideal.dedup();
            ideal == maximal_ideal
        });

        LocalRingSpec {
            id,
            order: n,
            one,
            add,
            mul,
            maximal_ideal,
            is_field,
            maximal_ideal_is_principal,
        }
    }

    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn order(&self) -> u16 {
        self.order
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order as usize + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    /// The unique maximal ideal (= the non-units), ascending.
    pub fn maximal_ideal(&self) -> &[u16] {
        &self.maximal_ideal
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    /// Whether the maximal ideal is a principal ideal. True for every field
    /// (the ideal is `(0)`) and every chain ring; false exactly for
    /// `Z2[x,y]/(x^2,xy,y^2)` and `Z4[x]/(2x,x^2)` within this catalog.
    pub fn maximal_ideal_is_principal(&self) -> bool {
        self.maximal_ideal_is_principal
    }

    /// This local ring as a standalone [`FiniteRing`].
    pub fn to_ring(&self) -> FiniteRing {
        FiniteRing::product(&[self]).expect("single catalog factor always builds")
    }
}

fn catalog() -> &'static Vec<LocalRingSpec> {
    static CATALOG: OnceLock<Vec<LocalRingSpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        vec![
            LocalRingSpec::build("Z2", Presentation::Modular { n: 2 }),
            LocalRingSpec::build("Z3", Presentation::Modular { n: 3 }),
            LocalRingSpec::build(
                "F4",
                Presentation::PolyQuotient { p: 2, modulus: vec![1, 1, 1] },
            ),
            LocalRingSpec::build("Z4", Presentation::Modular { n: 4 }),
            LocalRingSpec::build(
                "Z2[x]/(x^2)",
                Presentation::PolyQuotient { p: 2, modulus: vec![0, 0, 1] },
            ),
            LocalRingSpec::build("Z5", Presentation::Modular { n: 5 }),
            LocalRingSpec::build("Z7", Presentation::Modular { n: 7 }),
            LocalRingSpec::build(
                "F8",
                Presentation::PolyQuotient { p: 2, modulus: vec![1, 1, 0, 1] },
            ),
            LocalRingSpec::build("Z8", Presentation::Modular { n: 8 }),
            LocalRingSpec::build(
                "Z2[x]/(x^3)",
                Presentation::PolyQuotient { p: 2, modulus: vec![0, 0, 0, 1] },
            ),
            LocalRingSpec::build(
                "Z2[x,y]/(x^2,xy,y^2)",
                Presentation::BivariateNil { p: 2 },
            ),
            LocalRingSpec::build("Z4[x]/(2x,x^2)", Presentation::Z4Ext { xsq: 0 }),
            LocalRingSpec::build("Z4[x]/(2x,x^2-2)", Presentation::Z4Ext { xsq: 2 }),
            LocalRingSpec::build(
                "F9",
                Presentation::PolyQuotient { p: 3, modulus: vec![1, 0, 1] },
            ),
            LocalRingSpec::build("Z9", Presentation::Modular { n: 9 }),
            LocalRingSpec::build(
                "Z3[x]/(x^2)",
                Presentation::PolyQuotient { p: 3, modulus: vec![0, 0, 1] },
            ),
        ]
    })
}

/// All valid catalog identifiers, in catalog order.
pub fn valid_ids() -> Vec<&'static str> {
    catalog().iter().map(|s| s.id).collect()
}

/// Every catalog local ring of order ≤ `max_order`, in a fixed order
/// (ascending ring order, fields first within an order).
pub fn catalog_local_rings(max_order: u16) -> Result<Vec<&'static LocalRingSpec>, CatalogError> {
    if max_order > MAX_CATALOG_ORDER {
        return Err(CatalogError::UnsupportedBound(max_order));
    }
    Ok(catalog().iter().filter(|s| s.order <= max_order).collect())
}

/// Look up one catalog ring by its exact identifier.
pub fn local_ring(id: &str) -> Result<&'static LocalRingSpec, CatalogError> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CatalogError::UnknownId { token: id.to_string() })
}

/// Parse a ring expression: catalog ids joined by `*`, split at bracket
/// depth zero (ids themselves contain commas and parentheses). Whitespace
/// around factors is ignored. The factors are sorted into catalog order, so
/// the resulting ring's [`expr`](FiniteRing::expr) is canonical.
pub fn parse_ring_expr(expr: &str) -> Result<FiniteRing, CatalogError> {
    let mut factors: Vec<&'static LocalRingSpec> = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let flush = |tok: &str, factors: &mut Vec<&'static LocalRingSpec>| {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(CatalogError::EmptyExpr);
        }
        factors.push(local_ring(tok)?);
        Ok(())
    };
    for (i, ch) in expr.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '*' if depth == 0 => {
                flush(&expr[start..i], &mut factors)?;
                start = i + 1;
            }
            _ => {}
        }
    }
    flush(&expr[start..], &mut factors)?;

    let all = catalog();
    factors.sort_by_key(|f| all.iter().position(|s| s.id == f.id).unwrap());
    Ok(FiniteRing::product(&factors)?)
}

/// Bounds on the enumerated universe of non-local rings.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RingUniverseFilter {
    /// Largest allowed order of a single local factor (≤ 9).
    pub max_factor_order: u16,
    /// Largest allowed number of local factors (at least 2 are always used).
    pub max_factors: u8,
    /// Optional cap on the order of the product.
    pub max_total_order: Option<u32>,
}

impl Default for RingUniverseFilter {
    fn default() -> Self {
        RingUniverseFilter {
            max_factor_order: MAX_CATALOG_ORDER,
            max_factors: 4,
            max_total_order: Some(1024),
        }
    }
}

/// The factor multisets of the ring universe allowed by the filter, without
/// building the rings: each entry is a non-decreasing (catalog-order) list
/// of 2..=`max_factors` catalog entries whose total order passes the filter.
/// Fixed order: factor count ascending, then lexicographic in catalog
/// positions.
pub fn enumerate_factor_multisets(
    filter: &RingUniverseFilter,
) -> Result<Vec<Vec<&'static LocalRingSpec>>, CatalogError> {
    let eligible: Vec<&'static LocalRingSpec> =
        catalog_local_rings(filter.max_factor_order)?;
    let cap = filter.max_total_order.unwrap_or(u32::MAX) as u64;

    // Multisets as non-decreasing index tuples; indices are in catalog order
    // (ascending ring order), so a partial product can prune the rest.
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        eligible: &[&LocalRingSpec],
        cap: u64,
        size: usize,
        from: usize,
        product: u64,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in from..eligible.len() {
            let next = product * eligible[i].order() as u64;
            if next > cap {
                continue;
            }
            current.push(i);
            extend(eligible, cap, size, i, next, current, out);
            current.pop();
        }
    }
    for size in 2..=filter.max_factors as usize {
        extend(&eligible, cap, size, 0, 1, &mut current, &mut tuples);
    }

    Ok(tuples
        .into_iter()
        .map(|tuple| tuple.iter().map(|&i| eligible[i]).collect())
        .collect())
}

/// Enumerate every non-local ring allowed by the filter: one ring per
/// multiset from [`enumerate_factor_multisets`], built lazily.
pub fn enumerate_nonlocal_rings(
    filter: &RingUniverseFilter,
) -> Result<impl Iterator<Item = FiniteRing>, CatalogError> {
    Ok(enumerate_factor_multisets(filter)?
        .into_iter()
        .map(|factors| FiniteRing::product(&factors).expect("filtered product always fits")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_counts_by_order() {
        assert_eq!(catalog_local_rings(2).unwrap().len(), 1);
        assert_eq!(catalog_local_rings(4).unwrap().len(), 5);
        assert_eq!(catalog_local_rings(8).unwrap().len(), 13);
        let all = catalog_local_rings(9).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all.iter().filter(|s| s.order() == 8).count(), 6);
        assert!(catalog_local_rings(10).is_err());
    }

    #[test]
    fn fields_are_detected() {
        for (id, field) in [
            ("Z2", true),
            ("Z3", true),
            ("F4", true),
            ("Z4", false),
            ("Z2[x]/(x^2)", false),
            ("F8", true),
            ("F9", true),
            ("Z8", false),
            ("Z9", false),
        ] {
            assert_eq!(local_ring(id).unwrap().is_field(), field, "{id}");
        }
    }

    #[test]
    fn maximal_ideal_principality() {
        // Chain rings and fields have principal maximal ideals; the two
        // non-chain order-8 rings do not.
        for (id, principal) in [
            ("Z2", true),
            ("F8", true),
            ("Z4", true),
            ("Z8", true),
            ("Z2[x]/(x^3)", true),
            ("Z4[x]/(2x,x^2-2)", true),
            ("Z9", true),
            ("Z3[x]/(x^2)", true),
            ("Z2[x,y]/(x^2,xy,y^2)", false),
            ("Z4[x]/(2x,x^2)", false),
        ] {
            assert_eq!(
                local_ring(id).unwrap().maximal_ideal_is_principal(),
                principal,
                "{id}"
            );
        }
    }

    #[test]
    fn maximal_ideal_sizes() {
        for (id, size) in [
            ("Z2", 1),
            ("F9", 1),
            ("Z4", 2),
            ("Z8", 4),
            ("Z9", 3),
            ("Z2[x,y]/(x^2,xy,y^2)", 4),
            ("Z4[x]/(2x,x^2)", 4),
            ("Z4[x]/(2x,x^2-2)", 4),
        ] {
            assert_eq!(local_ring(id).unwrap().maximal_ideal().len(), size, "{id}");
        }
    }

    /// Exhaustive ring-axiom check: commutativity, associativity of both
    /// operations, distributivity, identities, additive inverses.
    fn assert_ring_axioms(r: &FiniteRing, what: &str) {
        let n = r.order() as u16;
        for a in 0..n {
            assert_eq!(r.add(a, 0), a, "{what}: additive identity");
            assert_eq!(r.mul(a, r.one()), a, "{what}: multiplicative identity");
            assert!((0..n).any(|b| r.add(a, b) == 0), "{what}: inverse of {a}");
        }
        for a in 0..n {
            for b in 0..n {
                assert_eq!(r.add(a, b), r.add(b, a), "{what}: + commutes");
                assert_eq!(r.mul(a, b), r.mul(b, a), "{what}: · commutes");
                for c in 0..n {
                    assert_eq!(
                        r.add(r.add(a, b), c),
                        r.add(a, r.add(b, c)),
                        "{what}: + associates"
                    );
                    assert_eq!(
                        r.mul(r.mul(a, b), c),
                        r.mul(a, r.mul(b, c)),
                        "{what}: · associates"
                    );
                    assert_eq!(
                        r.mul(a, r.add(b, c)),
                        r.add(r.mul(a, b), r.mul(a, c)),
                        "{what}: distributes"
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_rings_satisfy_ring_axioms() {
        for spec in catalog_local_rings(9).unwrap() {
            assert_ring_axioms(&spec.to_ring(), spec.id());
        }
    }

    #[test]
    fn small_products_satisfy_ring_axioms() {
        for expr in ["Z2*Z3", "Z4*Z8", "Z2*Z2*Z2*Z2", "F4*Z2[x]/(x^2)"] {
            assert_ring_axioms(&parse_ring_expr(expr).unwrap(), expr);
        }
    }

    #[test]
    fn parse_roundtrip_and_canonical_order() {
        let r = parse_ring_expr("Z8*Z2").unwrap();
        assert_eq!(r.expr(), "Z2*Z8");
        let r = parse_ring_expr(" Z2 * Z4[x]/(2x,x^2-2) ").unwrap();
        assert_eq!(r.expr(), "Z2*Z4[x]/(2x,x^2-2)");
        assert_eq!(r.order(), 16);
        let r = parse_ring_expr("Z2[x,y]/(x^2,xy,y^2)").unwrap();
        assert_eq!(r.order(), 8);
        assert!(parse_ring_expr("Z2*Q8").is_err());
        assert!(parse_ring_expr("").is_err());
        assert!(parse_ring_expr("Z2**Z3").is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |max_factor_order, max_factors, cap: Option<u32>| {
            enumerate_nonlocal_rings(&RingUniverseFilter {
                max_factor_order,
                max_factors,
                max_total_order: cap,
            })
            .unwrap()
            .count()
        };
        // Multisets of {Z2, Z3} of size 2.
        assert_eq!(count(3, 2, None), 3);
        // Z2×Z2 and Z2×Z2×Z2.
        assert_eq!(count(2, 3, None), 2);
        // 16 catalog rings of order ≤ 9: C(16,2) + 16 pairs.
        assert_eq!(count(9, 2, None), 136);
    }

    #[test]
    fn enumeration_is_deduplicated_and_canonical() {
        let filter = RingUniverseFilter {
            max_factor_order: 4,
            max_factors: 3,
            max_total_order: None,
        };
        let exprs: Vec<String> = enumerate_nonlocal_rings(&filter)
            .unwrap()
            .map(|r| r.expr())
            .collect();
        let mut dedup = exprs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), exprs.len(), "no multiset appears twice");
        assert!(exprs.contains(&"Z2*Z2".to_string()));
        assert!(exprs.contains(&"Z2*F4*Z4".to_string()));
    }

    #[test]
    fn total_order_cap_is_respected() {
        let filter = RingUniverseFilter {
            max_factor_order: 9,
            max_factors: 4,
            max_total_order: Some(64),
        };
        for r in enumerate_nonlocal_rings(&filter).unwrap() {
            assert!(r.order() <= 64, "{} has order {}", r.expr(), r.order());
        }
    }
}

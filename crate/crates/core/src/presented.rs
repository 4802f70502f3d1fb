//! The ring `U` generated by `u_α` (one per positive root) subject to
//! `u_α u_β = u_min(α,β)` whenever `α` and `β` are comparable, its associated
//! graded ring, and the isomorphism `ρ: U → H` with `ρ(u_α) = h_α`.
//!
//! The relation is applied to `α = β` as well, so `u_α² = u_α`.
//!
//! The antichain monomials `u_p = ∏_{α ∈ p} u_α` form a basis. The product of
//! two monomials is computed on ideals (`I_p ∪ I_q`), while
//! [`reduce_multiset`] rewrites a word of generators with the relation itself.
//! The two are checked against each other in the tests.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::antichain::{minimal_mask, to_mask, Antichain, AntichainPoset};
use crate::error::{Error, Result};
use crate::heaviside::{HeavisideRing, RingElement};
use crate::root_system::RootSystem;

/// `u_p` (ungraded) or `ũ_p` (graded).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UMonomial {
    pub antichain: Antichain,
    pub graded: bool,
}

/// Integer combination of the monomials `u_p`, indexed canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UElement {
    pub coords: Vec<i64>,
}

impl UElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// Normal form of `u_p · u_q`: the antichain generating `I_p ∪ I_q`.
pub fn monomial_product(rs: &RootSystem, p: &Antichain, q: &Antichain) -> Result<Antichain> {
    let p = Antichain::new(rs, p.roots().to_vec())?;
    let q = Antichain::new(rs, q.roots().to_vec())?;
    Ok(Antichain::from_mask_unchecked(minimal_mask(rs, p.mask() | q.mask())))
}

/// Rewrites a word of generators with `u_α u_β → u_min(α,β)` until no two
/// factors are comparable or equal. Always rewrites the first such pair.
pub fn reduce_multiset(rs: &RootSystem, roots: &[usize]) -> Result<Antichain> {
    reduce_multiset_by(rs, roots, |_| 0)
}

/// Like [`reduce_multiset`], but `choose` picks which of the currently
/// reducible pairs (given as positions into the word) is rewritten next.
pub fn reduce_multiset_by(
    rs: &RootSystem,
    roots: &[usize],
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<Antichain> {
    for &r in roots {
        rs.check_index(r)?;
    }
    let mut word = roots.to_vec();
    loop {
        let mut pairs = Vec::new();
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] == word[j] || rs.comparable(word[i], word[j]) {
                    pairs.push((i, j));
                }
            }
        }
        if pairs.is_empty() {
            break;
        }
        let (i, j) = pairs[choose(&pairs) % pairs.len()];
        let (a, b) = (word[i], word[j]);
        let min = if rs.leq_table()[a][b] { a } else { b };
        word.remove(j);
        word[i] = min;
    }
    Antichain::new(rs, word)
}

/// Product in the associated graded ring: `ũ_p ũ_q = ũ_{p ∪ q}` when the union
/// is an antichain with `|p| + |q|` elements, and zero otherwise.
pub fn graded_product(rs: &RootSystem, p: &Antichain, q: &Antichain) -> Result<Option<Antichain>> {
    let p = Antichain::new(rs, p.roots().to_vec())?;
    let q = Antichain::new(rs, q.roots().to_vec())?;
    if p.mask() & q.mask() != 0 {
        return Ok(None);
    }
    let mut union = p.roots().to_vec();
    union.extend_from_slice(q.roots());
    Ok(Antichain::new(rs, union).ok())
}

#[derive(Debug)]
pub struct PresentedRing {
    ap: Arc<AntichainPoset>,
    table: OnceLock<Vec<Vec<usize>>>,
}

impl PresentedRing {
    pub fn new(ap: Arc<AntichainPoset>) -> Self {
        PresentedRing {
            ap,
            table: OnceLock::new(),
        }
    }

    pub fn poset(&self) -> &AntichainPoset {
        &self.ap
    }

    /// Number of basis monomials.
    pub fn rank(&self) -> usize {
        self.ap.len()
    }

    pub fn one(&self) -> UElement {
        self.monomial(0)
    }

    pub fn monomial(&self, p: usize) -> UElement {
        let mut coords = vec![0; self.rank()];
        coords[p] = 1;
        UElement { coords }
    }

    pub fn generator(&self, root: usize) -> Result<UElement> {
        Ok(self.monomial(self.ap.singleton(root)?))
    }

    /// Index of `u_p · u_q` in canonical order.
    pub fn product_index(&self, p: usize, q: usize) -> usize {
        let ideal = self.ap.ideal_mask(p) | self.ap.ideal_mask(q);
        self.ap
            .index_of_ideal(ideal)
            .expect("a union of upper ideals is an upper ideal")
    }

    /// Full multiplication table on canonical indices.
    pub fn multiplication_table(&self) -> &Vec<Vec<usize>> {
        self.table.get_or_init(|| {
            let m = self.rank();
            (0..m)
                .map(|p| (0..m).map(|q| self.product_index(p, q)).collect())
                .collect()
        })
    }

    pub fn multiply(&self, x: &UElement, y: &UElement) -> Result<UElement> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut coords = vec![0; self.rank()];
        for (p, &a) in x.coords.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (q, &b) in y.coords.iter().enumerate().filter(|(_, b)| **b != 0) {
                coords[self.product_index(p, q)] += a * b;
            }
        }
        Ok(UElement { coords })
    }

    /// Product in `gr U`, with `x` and `y` read in the basis `ũ_p`.
    pub fn graded_multiply(&self, x: &UElement, y: &UElement) -> Result<UElement> {
        self.check_len(x)?;
        self.check_len(y)?;
        let rs = self.ap.root_system();
        let mut coords = vec![0; self.rank()];
        for (p, &a) in x.coords.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (q, &b) in y.coords.iter().enumerate().filter(|(_, b)| **b != 0) {
                if let Some(r) = graded_product(rs, self.ap.antichain(p), self.ap.antichain(q))? {
                    coords[self.ap.index_of(&r)?] += a * b;
                }
            }
        }
        Ok(UElement { coords })
    }

    /// Word of generators, reduced to a monomial.
    pub fn word(&self, roots: &[usize]) -> Result<UElement> {
        let rs = self.ap.root_system();
        for &r in roots {
            rs.check_index(r)?;
        }
        let ideal = roots.iter().fold(0u128, |acc, &r| acc | rs.up_mask(r));
        let p = self
            .ap
            .index_of_ideal(ideal)
            .ok_or_else(|| Error::Invariant("ideal missing from poset".into()))?;
        debug_assert_eq!(self.ap.antichain(p).mask(), minimal_mask(rs, to_mask(roots)));
        Ok(self.monomial(p))
    }

    /// `ρ(Σ c_p u_p) = Σ c_p h_p`, in δ-coordinates.
    pub fn rho(&self, x: &UElement) -> Result<RingElement> {
        self.check_len(x)?;
        let m = self.rank();
        let mut coords = vec![0; m];
        for (p, &c) in x.coords.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (q, slot) in coords.iter_mut().enumerate() {
                if self.ap.leq(p, q) {
                    *slot += c;
                }
            }
        }
        Ok(RingElement::delta(coords))
    }

    /// Matrix of `ρ` from the basis `(u_p)` to the basis `(δ_p)`: row `p` holds
    /// the δ-coordinates of `ρ(u_p)`.
    pub fn rho_matrix(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rank())
            .map(|p| Ok(self.rho(&self.monomial(p))?.coords))
            .collect()
    }

    /// Inverse of `ρ`, through the Möbius matrix.
    pub fn rho_inverse(&self, ring: &HeavisideRing, x: &RingElement) -> Result<UElement> {
        let h = ring.to_h_basis(x)?;
        Ok(UElement { coords: h.coords })
    }

    fn check_len(&self, x: &UElement) -> Result<()> {
        if x.coords.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.rank(),
                found: x.coords.len(),
            })
        }
    }
}

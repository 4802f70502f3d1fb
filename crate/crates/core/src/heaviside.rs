//! The ring `H` of locally constant integer functions on the dominant regions.
//!
//! An element is a function on antichains (one value per dominant region).
//! Arithmetic always happens in the trivial basis `δ_p`, where multiplication
//! is componentwise. The Heaviside basis `h_p = Σ_{p ⪯ q} δ_q` is a view
//! obtained through the zeta and Möbius matrices.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::antichain::AntichainPoset;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Delta,
    H,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Delta => "delta",
            Basis::H => "h",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingElement {
    pub basis: Basis,
    pub coords: Vec<i64>,
}

impl RingElement {
    pub fn delta(coords: Vec<i64>) -> Self {
        RingElement {
            basis: Basis::Delta,
            coords,
        }
    }

    pub fn h(coords: Vec<i64>) -> Self {
        RingElement {
            basis: Basis::H,
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Canonical antichain indices with a nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i] != 0).collect()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Delta => "δ",
            Basis::H => "h",
        };
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|i| match self.coords[i] {
                1 => format!("{sym}[{i}]"),
                -1 => format!("-{sym}[{i}]"),
                c => format!("{c}{sym}[{i}]"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Ranks of the filtration `F_0 ⊆ F_1 ⊆ …` of `H` by products of at most
/// `k` Heaviside generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub ranks: Vec<usize>,
    /// The `h_p` are all in `F_n` and form a unimodular system, so `F_n = H`
    /// as lattices, not just rationally.
    pub lattice_certified: bool,
}

#[derive(Debug)]
pub struct HeavisideRing {
    ap: Arc<AntichainPoset>,
    zeta: OnceLock<IntMatrix>,
    mobius: OnceLock<IntMatrix>,
}

impl HeavisideRing {
    pub fn new(ap: Arc<AntichainPoset>) -> Self {
        HeavisideRing {
            ap,
            zeta: OnceLock::new(),
            mobius: OnceLock::new(),
        }
    }

    pub fn poset(&self) -> &AntichainPoset {
        &self.ap
    }

    pub fn poset_arc(&self) -> &Arc<AntichainPoset> {
        &self.ap
    }

    pub fn dim(&self) -> usize {
        self.ap.len()
    }

    pub fn zeta(&self) -> &IntMatrix {
        self.zeta.get_or_init(|| self.ap.zeta_matrix())
    }

    pub fn mobius(&self) -> &IntMatrix {
        self.mobius
            .get_or_init(|| linalg::unitriangular_inverse(self.zeta()))
    }

    pub fn one(&self) -> RingElement {
        RingElement::delta(vec![1; self.dim()])
    }

    pub fn zero(&self) -> RingElement {
        RingElement::delta(vec![0; self.dim()])
    }

    /// Indicator of the region of antichain `p`.
    pub fn delta_element(&self, p: usize) -> Result<RingElement> {
        self.check_antichain(p)?;
        let mut coords = vec![0; self.dim()];
        coords[p] = 1;
        Ok(RingElement::delta(coords))
    }

    /// `h_α`: 1 on the regions where `α(x) > 1`, i.e. where `α ∈ I_p`.
    pub fn h_root(&self, root: usize) -> Result<RingElement> {
        self.ap.root_system().check_index(root)?;
        let bit = 1u128 << root;
        let coords = (0..self.dim())
            .map(|q| (self.ap.ideal_mask(q) & bit != 0) as i64)
            .collect();
        Ok(RingElement::delta(coords))
    }

    /// `h_p = Σ_{p ⪯ q} δ_q`, from the order directly.
    pub fn h_antichain(&self, p: usize) -> Result<RingElement> {
        self.check_antichain(p)?;
        let coords = (0..self.dim()).map(|q| self.ap.leq(p, q) as i64).collect();
        Ok(RingElement::delta(coords))
    }

    /// `∏_{α ∈ p} h_α`, with the empty product equal to 1.
    pub fn h_antichain_product(&self, p: usize) -> Result<RingElement> {
        self.check_antichain(p)?;
        let mut acc = self.one();
        for &root in self.ap.antichain(p).roots() {
            acc = self.multiply(&acc, &self.h_root(root)?)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let x = self.to_delta_basis(x)?;
        let y = self.to_delta_basis(y)?;
        let coords = x.coords.iter().zip(&y.coords).map(|(a, b)| a * b).collect();
        Ok(RingElement::delta(coords))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let x = self.to_delta_basis(x)?;
        let y = self.to_delta_basis(y)?;
        let coords = x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect();
        Ok(RingElement::delta(coords))
    }

    /// Coordinates in the basis `(h_p)`. With `δ = Zᵀ c` for the h-coordinates
    /// `c`, this is `c = Mᵀ δ` for the Möbius matrix `M`.
    pub fn to_h_basis(&self, x: &RingElement) -> Result<RingElement> {
        self.check_len(x)?;
        match x.basis {
            Basis::H => Ok(x.clone()),
            Basis::Delta => {
                let m = self.mobius();
                let n = self.dim();
                let coords = (0..n)
                    .map(|p| (0..=p).map(|q| m[q][p] * x.coords[q]).sum())
                    .collect();
                Ok(RingElement::h(coords))
            }
        }
    }

    pub fn to_delta_basis(&self, x: &RingElement) -> Result<RingElement> {
        self.check_len(x)?;
        match x.basis {
            Basis::Delta => Ok(x.clone()),
            Basis::H => {
                let z = self.zeta();
                let n = self.dim();
                let coords = (0..n)
                    .map(|q| (0..=q).map(|p| x.coords[p] * z[p][q]).sum())
                    .collect();
                Ok(RingElement::delta(coords))
            }
        }
    }

    /// Rank of `F_k`.
    ///
    /// Any product of at most `k` generators from `{1} ∪ {h_α}` equals `h_p`
    /// where `p` is the set of minimal roots among the factors, an antichain
    /// of at most `k` roots; conversely each such `h_p` is such a product. The
    /// spanning set is therefore `{h_p : |p| ≤ k}`, reduced by fraction-free
    /// elimination.
    pub fn filtration_rank(&self, k: usize) -> usize {
        let rows: Vec<Vec<i64>> = self
            .spanning_set(k)
            .into_iter()
            .map(|p| (0..self.dim()).map(|q| self.ap.leq(p, q) as i64).collect())
            .collect();
        linalg::rank(&rows)
    }

    /// Canonical indices of the antichains `p` with `|p| ≤ k`.
    pub fn spanning_set(&self, k: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&p| self.ap.antichain(p).len() <= k)
            .collect()
    }

    pub fn filtration(&self) -> FiltrationReport {
        let n = self.ap.root_system().rank();
        let ranks = (0..=n).map(|k| self.filtration_rank(k)).collect();
        FiltrationReport {
            ranks,
            lattice_certified: self.spanning_set(n).len() == self.dim()
                && linalg::is_upper_unitriangular(self.zeta()),
        }
    }

    /// Support of `x` in the δ-basis as `(antichain roots, coefficient)` pairs.
    pub fn describe(&self, x: &RingElement) -> Result<Vec<(Vec<usize>, i64)>> {
        let x = self.to_delta_basis(x)?;
        Ok(x.support()
            .into_iter()
            .map(|i| (self.ap.antichain(i).roots().to_vec(), x.coords[i]))
            .collect())
    }

    fn check_antichain(&self, p: usize) -> Result<()> {
        if p < self.dim() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("antichain index {p}")))
        }
    }

    fn check_len(&self, x: &RingElement) -> Result<()> {
        if x.coords.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.dim(),
                found: x.coords.len(),
            })
        }
    }
}

//! Antichains of the root poset, the upper ideals they generate, and the
//! inclusion order on ideals.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{RootMask, RootSystem};

/// Pairwise incomparable positive roots, stored as sorted root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Antichain {
    roots: Vec<usize>,
}

impl Antichain {
    /// Checks pairwise incomparability.
    pub fn new(rs: &RootSystem, mut roots: Vec<usize>) -> Result<Self> {
        roots.sort_unstable();
        roots.dedup();
        for &r in &roots {
            rs.check_index(r)?;
        }
        for (i, &a) in roots.iter().enumerate() {
            for &b in &roots[i + 1..] {
                if rs.comparable(a, b) {
                    return Err(Error::NotAntichain(a, b));
                }
            }
        }
        Ok(Antichain { roots })
    }

    pub fn empty() -> Self {
        Antichain { roots: Vec::new() }
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub(crate) fn mask(&self) -> RootMask {
        to_mask(&self.roots)
    }

    pub(crate) fn from_mask_unchecked(mask: RootMask) -> Self {
        Antichain {
            roots: from_mask(mask),
        }
    }

    pub fn label(&self, rs: &RootSystem) -> String {
        let names: Vec<String> = self
            .roots
            .iter()
            .map(|&r| rs.positive_roots()[r].label())
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Upward-closed set of positive roots, stored as sorted root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UpperIdeal {
    roots: Vec<usize>,
}

impl UpperIdeal {
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.roots.binary_search(&root).is_ok()
    }
}

pub(crate) fn to_mask(roots: &[usize]) -> RootMask {
    roots.iter().fold(0, |m, &r| m | (1 << r))
}

pub(crate) fn from_mask(mut mask: RootMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let r = mask.trailing_zeros() as usize;
        out.push(r);
        mask &= mask - 1;
    }
    out
}

pub(crate) fn upward_closure(rs: &RootSystem, set: RootMask) -> RootMask {
    from_mask(set)
        .into_iter()
        .fold(0, |acc, r| acc | rs.up_mask(r))
}

pub(crate) fn minimal_mask(rs: &RootSystem, set: RootMask) -> RootMask {
    from_mask(set)
        .into_iter()
        .filter(|&r| rs.down_mask(r) & set == 1 << r)
        .fold(0, |acc, r| acc | (1 << r))
}

/// The upper ideal generated by `p`.
pub fn ideal_of(rs: &RootSystem, p: &Antichain) -> Result<UpperIdeal> {
    let checked = Antichain::new(rs, p.roots.clone())?;
    Ok(UpperIdeal {
        roots: from_mask(upward_closure(rs, checked.mask())),
    })
}

/// Elements of `set` with no strictly smaller element in `set`.
pub fn minimal_elements(rs: &RootSystem, set: &[usize]) -> Result<Antichain> {
    for &r in set {
        rs.check_index(r)?;
    }
    Ok(Antichain::from_mask_unchecked(minimal_mask(rs, to_mask(set))))
}

/// All antichains of a root poset, in canonical order: by size of the
/// generated ideal, then lexicographically by sorted root indices. This order
/// is a linear extension of `⪯`.
#[derive(Debug, Clone)]
pub struct AntichainPoset {
    rs: Arc<RootSystem>,
    antichains: Vec<Antichain>,
    ideals: Vec<RootMask>,
    index: HashMap<RootMask, usize>,
}

impl AntichainPoset {
    pub fn enumerate(rs: Arc<RootSystem>) -> Self {
        let m = rs.num_positive_roots();
        let mut ideals = Vec::new();
        collect_ideals(&rs, m, 0, &mut ideals);

        let mut entries: Vec<(RootMask, Antichain)> = ideals
            .into_iter()
            .map(|ideal| (ideal, Antichain::from_mask_unchecked(minimal_mask(&rs, ideal))))
            .collect();
        entries.sort_by(|(ia, a), (ib, b)| {
            ia.count_ones()
                .cmp(&ib.count_ones())
                .then_with(|| a.roots.cmp(&b.roots))
        });

        let index = entries
            .iter()
            .enumerate()
            .map(|(i, (ideal, _))| (*ideal, i))
            .collect();
        let (ideals, antichains) = entries.into_iter().unzip();
        AntichainPoset {
            rs,
            antichains,
            ideals,
            index,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }

    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn antichain(&self, i: usize) -> &Antichain {
        &self.antichains[i]
    }

    pub fn ideal_size(&self, i: usize) -> usize {
        self.ideals[i].count_ones() as usize
    }

    pub fn ideal_sizes(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.ideal_size(i)).collect()
    }

    pub fn ideal(&self, i: usize) -> UpperIdeal {
        UpperIdeal {
            roots: from_mask(self.ideals[i]),
        }
    }

    pub(crate) fn ideal_mask(&self, i: usize) -> RootMask {
        self.ideals[i]
    }

    pub(crate) fn index_of_ideal(&self, ideal: RootMask) -> Option<usize> {
        self.index.get(&ideal).copied()
    }

    /// Canonical index of `p`.
    pub fn index_of(&self, p: &Antichain) -> Result<usize> {
        let ideal = upward_closure(&self.rs, p.mask());
        match self.index_of_ideal(ideal) {
            Some(i) if self.antichains[i] == *p => Ok(i),
            _ => Err(Error::UnknownAntichain(p.roots.clone())),
        }
    }

    /// Index of the antichain with the given roots.
    pub fn find(&self, roots: &[usize]) -> Result<usize> {
        let p = Antichain::new(&self.rs, roots.to_vec())?;
        self.index_of(&p)
    }

    /// Index of the singleton antichain `{α}`.
    pub fn singleton(&self, root: usize) -> Result<usize> {
        self.rs.check_index(root)?;
        self.index_of_ideal(self.rs.up_mask(root))
            .ok_or_else(|| Error::Invariant(format!("singleton {{{root}}} missing from poset")))
    }

    /// `p ⪯ q` iff `I_p ⊆ I_q`.
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.ideals[p] & !self.ideals[q] == 0
    }

    pub fn antichain_leq(&self, p: &Antichain, q: &Antichain) -> Result<bool> {
        Ok(self.leq(self.index_of(p)?, self.index_of(q)?))
    }

    /// `Z[i][j] = 1` iff antichain `i ⪯` antichain `j`.
    pub fn zeta_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.len();
        (0..m)
            .map(|i| (0..m).map(|j| self.leq(i, j) as i64).collect())
            .collect()
    }

    /// Integer inverse of the zeta matrix, by back substitution.
    pub fn mobius_matrix(&self) -> Vec<Vec<i64>> {
        crate::linalg::unitriangular_inverse(&self.zeta_matrix())
    }

    /// Covering relations `(i, j)` of `⪯`: `I_j` is `I_i` plus one root.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        let m = self.rs.num_positive_roots();
        let mut covers = Vec::new();
        for (i, &ideal) in self.ideals.iter().enumerate() {
            for r in 0..m {
                let bit = 1 << r;
                if ideal & bit != 0 {
                    continue;
                }
                let strict_up = self.rs.up_mask(r) & !bit;
                if strict_up & !ideal == 0 {
                    if let Some(j) = self.index_of_ideal(ideal | bit) {
                        covers.push((i, j));
                    }
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Index of the `⪯`-maximum (the full ideal).
    pub fn top(&self) -> usize {
        self.len() - 1
    }
}

/// Decides, from the highest root down, whether each root enters the ideal.
/// A root may enter only if every root above it already has.
fn collect_ideals(rs: &RootSystem, pending: usize, ideal: RootMask, out: &mut Vec<RootMask>) {
    if pending == 0 {
        out.push(ideal);
        return;
    }
    let r = pending - 1;
    collect_ideals(rs, r, ideal, out);
    let strict_up = rs.up_mask(r) & !(1 << r);
    if strict_up & !ideal == 0 {
        collect_ideals(rs, r, ideal | (1 << r), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(name: &str) -> AntichainPoset {
        AntichainPoset::enumerate(Arc::new(RootSystem::from_name(name).unwrap()))
    }

    #[test]
    fn a2_antichains_in_canonical_order() {
        let ap = poset("A2");
        let got: Vec<Vec<usize>> = ap.antichains().iter().map(|p| p.roots().to_vec()).collect();
        assert_eq!(got, vec![vec![], vec![2], vec![0], vec![1], vec![0, 1]]);
        assert_eq!(ap.ideal_sizes(), vec![0, 1, 2, 2, 3]);
    }

    #[test]
    fn counts() {
        assert_eq!(poset("B2").len(), 6);
        assert_eq!(poset("A3").len(), 14);
        assert_eq!(poset("A1").len(), 2);
    }

    #[test]
    fn ideal_of_examples() {
        let a2 = RootSystem::from_name("A2").unwrap();
        let p = Antichain::new(&a2, vec![0]).unwrap();
        assert_eq!(ideal_of(&a2, &p).unwrap().roots(), &[0, 2]);
        assert!(ideal_of(&a2, &Antichain::empty()).unwrap().is_empty());

        let b2 = RootSystem::from_name("B2").unwrap();
        let p = Antichain::new(&b2, vec![1]).unwrap();
        assert_eq!(ideal_of(&b2, &p).unwrap().roots(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_non_antichain() {
        let a2 = RootSystem::from_name("A2").unwrap();
        assert_eq!(Antichain::new(&a2, vec![0, 2]), Err(Error::NotAntichain(0, 2)));
        assert!(matches!(Antichain::new(&a2, vec![5]), Err(Error::RootIndex { .. })));
    }

    #[test]
    fn minimal_elements_examples() {
        let a2 = RootSystem::from_name("A2").unwrap();
        assert_eq!(minimal_elements(&a2, &[0, 2]).unwrap().roots(), &[0]);
        assert!(minimal_elements(&a2, &[]).unwrap().is_empty());
        let b2 = RootSystem::from_name("B2").unwrap();
        assert_eq!(minimal_elements(&b2, &[0, 1, 2]).unwrap().roots(), &[0, 1]);
    }

    #[test]
    fn antichain_leq_examples() {
        let ap = poset("A2");
        let rs = ap.root_system().clone();
        let theta = Antichain::new(&rs, vec![2]).unwrap();
        let a1 = Antichain::new(&rs, vec![0]).unwrap();
        let a2 = Antichain::new(&rs, vec![1]).unwrap();
        assert!(ap.antichain_leq(&theta, &a1).unwrap());
        assert!(!ap.antichain_leq(&a1, &a2).unwrap());
        for p in ap.antichains() {
            assert!(ap.antichain_leq(&Antichain::empty(), p).unwrap());
        }
    }

    #[test]
    fn a2_zeta_and_mobius() {
        let ap = poset("A2");
        let z = ap.zeta_matrix();
        assert_eq!(
            z,
            vec![
                vec![1, 1, 1, 1, 1],
                vec![0, 1, 1, 1, 1],
                vec![0, 0, 1, 0, 1],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 1],
            ]
        );
        let m = ap.mobius_matrix();
        assert_eq!(m[0][1], -1);
        assert_eq!(m[0][2], 0);
    }

    #[test]
    fn a1_matrices() {
        let ap = poset("A1");
        assert_eq!(ap.zeta_matrix(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(ap.mobius_matrix(), vec![vec![1, -1], vec![0, 1]]);
    }

    #[test]
    fn mobius_of_constant_function_is_top_indicator() {
        for name in ["A3", "B3", "G2", "D4"] {
            let ap = poset(name);
            let m = ap.mobius_matrix();
            let sums: Vec<i64> = m.iter().map(|row| row.iter().sum()).collect();
            let expected: Vec<i64> = (0..ap.len()).map(|i| (i == ap.top()) as i64).collect();
            assert_eq!(sums, expected, "{name}");
        }
    }

    #[test]
    fn covers_add_one_root() {
        let ap = poset("A3");
        let covers = ap.covering_relations();
        for &(i, j) in &covers {
            assert_eq!(ap.ideal_size(j), ap.ideal_size(i) + 1);
            assert!(ap.leq(i, j));
        }
        // the lattice of order ideals of the A3 root poset has 14 elements
        // and the Hasse diagram is connected
        assert!(covers.len() >= ap.len() - 1);
    }
}

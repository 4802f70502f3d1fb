//! Positive roots of a finite crystallographic root system.
//!
//! Cartan matrices use Bourbaki numbering and the convention
//! `cartan[i][j] = <α_i^∨, α_j>`, so the row of a short simple root carries the
//! `-2` (or `-3` in G2) entry:
//!
//! | family | simple roots (Bourbaki)                                         |
//! |--------|-----------------------------------------------------------------|
//! | A_n    | chain `1 - 2 - … - n`                                           |
//! | B_n    | chain, `α_n` short: `cartan[n][n-1] = -2`                       |
//! | C_n    | chain, `α_n` long: `cartan[n-1][n] = -2`                        |
//! | D_n    | chain `1 - … - (n-2)`, with `n-1` and `n` both attached to `n-2` |
//! | E_n    | chain `1 - 3 - 4 - … - n`, with `2` attached to `4`             |
//! | F_4    | `1 - 2 => 3 - 4`, `α_1, α_2` long                               |
//! | G_2    | `α_1` short, `α_2` long: `cartan[1][2] = -3`                    |
//!
//! Everything else (roots, order, exponents, Coxeter number) is derived from
//! the Cartan matrix.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Bitmask over positive-root indices. E8 has 120 positive roots.
pub(crate) type RootMask = u128;

pub(crate) const MAX_ROOTS: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank} is not a finite Dynkin type")))
        }
    }

    /// Bourbaki Cartan matrix, `cartan[i][j] = <α_i^∨, α_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        DynkinType::new(family, rank)
    }
}

/// A positive root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// ASCII label such as `a1+2a2`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("a{}", i + 1)),
                c => parts.push(format!("{c}a{}", i + 1)),
            }
        }
        parts.join("+")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    highest_root_index: usize,
    exponents: Vec<usize>,
    coxeter_number: usize,
    leq: Vec<Vec<bool>>,
    up: Vec<RootMask>,
    down: Vec<RootMask>,
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> Result<Self> {
        // re-validate in case the struct was built by hand
        let dynkin = DynkinType::new(dynkin.family, dynkin.rank)?;
        let cartan = dynkin.cartan_matrix();
        let roots = generate_positive_roots(&cartan);
        let n = dynkin.rank;
        if roots.len() > MAX_ROOTS {
            return Err(Error::InvalidType(format!(
                "{dynkin} has {} positive roots, more than the supported {MAX_ROOTS}",
                roots.len()
            )));
        }

        let m = roots.len();
        let mut leq = vec![vec![false; m]; m];
        let mut up = vec![0 as RootMask; m];
        let mut down = vec![0 as RootMask; m];
        for a in 0..m {
            for b in 0..m {
                if coeff_leq(&roots[a], &roots[b]) {
                    leq[a][b] = true;
                    up[a] |= 1 << b;
                    down[b] |= 1 << a;
                }
            }
        }

        let highest_root_index = m - 1;
        let coxeter_number = roots[highest_root_index].height() as usize + 1;
        let mut rs = RootSystem {
            dynkin,
            cartan,
            roots,
            highest_root_index,
            exponents: Vec::new(),
            coxeter_number,
            leq,
            up,
            down,
        };
        rs.exponents = rs.exponents_from_heights()?;

        if rs.up[highest_root_index] != 1 << highest_root_index
            || rs.down[highest_root_index].count_ones() as usize != m
        {
            return Err(Error::Invariant(format!("{dynkin}: last root is not the highest root")));
        }
        if 2 * m != n * coxeter_number {
            return Err(Error::Invariant(format!(
                "{dynkin}: {m} positive roots but n*h/2 = {}",
                n * coxeter_number / 2
            )));
        }
        if rs.exponents.iter().sum::<usize>() != m {
            return Err(Error::Invariant(format!("{dynkin}: exponents do not sum to |Φ+|")));
        }
        Ok(rs)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RootSystem::new(name.parse()?)
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then by coefficients in decreasing
    /// lexicographic order, so the simple roots come first as `α_1, …, α_n`.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, index: usize) -> Result<&Root> {
        self.roots.get(index).ok_or(Error::RootIndex {
            index,
            count: self.roots.len(),
        })
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root_index
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn leq_table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r.coeffs == coeffs)
    }

    pub fn root_leq(&self, a: usize, b: usize) -> Result<bool> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.leq[a][b])
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(Error::RootIndex {
                index: i,
                count: self.roots.len(),
            })
        }
    }

    /// Roots `β ≥ α`, including `α`.
    pub(crate) fn up_mask(&self, a: usize) -> RootMask {
        self.up[a]
    }

    /// Roots `β ≤ α`, including `α`.
    pub(crate) fn down_mask(&self, a: usize) -> RootMask {
        self.down[a]
    }

    /// Exponents as the conjugate of the partition of `|Φ+|` given by the
    /// number of roots at each height.
    pub fn exponents_from_heights(&self) -> Result<Vec<usize>> {
        let max_height = self.roots.iter().map(Root::height).max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max_height];
        for r in &self.roots {
            counts[r.height() as usize - 1] += 1;
        }
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!(
                "{}: height distribution {counts:?} is not a partition",
                self.dynkin
            )));
        }
        let parts = counts.first().copied().unwrap_or(0);
        let mut exps: Vec<usize> = (1..=parts)
            .map(|j| counts.iter().filter(|&&c| c >= j).count())
            .collect();
        exps.sort_unstable();
        Ok(exps)
    }

    /// Covering relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        let m = self.roots.len();
        let mut covers = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = (self.up[a] & !(1 << a)) & (self.down[b] & !(1 << b));
                if between == 0 {
                    covers.push((a, b));
                }
            }
        }
        covers
    }
}

fn coeff_leq(a: &Root, b: &Root) -> bool {
    a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x <= y)
}

/// Height-by-height closure using root strings: for a root `α` and simple
/// root `α_i`, with `q` the largest `k` such that `α - kα_i` is a root, the
/// string continues upward iff `q - <α, α_i^∨> > 0`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut all = Vec::new();
    while !level.is_empty() {
        for r in &level {
            known.insert(r.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in &level {
            for i in 0..n {
                let mut q = 0;
                let mut probe = r.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] >= 0 && known.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
                if q - pairing > 0 {
                    let mut s = r.clone();
                    s[i] += 1;
                    if !next.contains(&s) {
                        next.push(s);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(|coeffs| Root { coeffs }).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));
    roots
}

//! Generalized Catalan numbers and their refinements.

use std::fmt;

use serde::Serialize;

use crate::antichain::AntichainPoset;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// Polynomial in `q` with non-negative integer coefficients, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * q as i128 + c as i128)
    }

    /// `q^deg · P(1/q)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        QPolynomial::from_coeffs(c)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `∏ (h + e_i + 1) / (e_i + 1)` over the exponents `e_i`.
pub fn catalan_number(rs: &RootSystem) -> Result<u128> {
    let h = rs.coxeter_number() as u128;
    let (num, den) = rs
        .exponents()
        .iter()
        .fold((1u128, 1u128), |(num, den), &e| {
            let e = e as u128;
            (num * (h + e + 1), den * (e + 1))
        });
    if num % den != 0 {
        return Err(Error::Invariant(format!(
            "{}: Catalan product {num}/{den} is not an integer",
            rs.dynkin()
        )));
    }
    Ok(num / den)
}

/// Antichains counted by the cardinality of the ideal they generate.
pub fn q_catalan(ap: &AntichainPoset) -> QPolynomial {
    let mut coeffs = vec![0u64; ap.root_system().num_positive_roots() + 1];
    for size in ap.ideal_sizes() {
        coeffs[size] += 1;
    }
    QPolynomial::from_coeffs(coeffs)
}

/// Entry `k` is the number of antichains with `k` elements.
pub fn graded_distribution(ap: &AntichainPoset) -> Vec<u64> {
    let mut dist = vec![0u64; ap.root_system().rank() + 1];
    for p in ap.antichains() {
        dist[p.len()] += 1;
    }
    while dist.len() > 1 && dist.last() == Some(&0) {
        dist.pop();
    }
    dist
}

pub const MAX_DYCK_RANK: usize = 12;

/// Dyck paths of semilength `n + 1` by area above the path.
///
/// A path is a word in up and down steps that never goes below its start. The
/// area above it is the number of whole unit cells between the path and the
/// highest path `U^{n+1} D^{n+1}`, in the usual north/east drawing; this
/// equals `n(n+1)/2` minus the number of cells between the path and the
/// diagonal. Paths are enumerated explicitly.
pub fn dyck_area_polynomial(n: usize) -> Result<QPolynomial> {
    if n == 0 || n > MAX_DYCK_RANK {
        return Err(Error::OutOfRange(format!(
            "Dyck rank {n} (supported 1..={MAX_DYCK_RANK})"
        )));
    }
    let semilength = n + 1;
    let max_area = n * (n + 1) / 2;
    let mut coeffs = vec![0u64; max_area + 1];
    let mut steps = Vec::with_capacity(2 * semilength);
    walk(semilength, 0, 0, &mut steps, &mut |path| {
        coeffs[max_area - area_below(path)] += 1;
    });
    Ok(QPolynomial::from_coeffs(coeffs))
}

fn walk(
    semilength: usize,
    ups: usize,
    downs: usize,
    steps: &mut Vec<bool>,
    visit: &mut impl FnMut(&[bool]),
) {
    if downs == semilength {
        visit(steps);
        return;
    }
    if ups < semilength {
        steps.push(true);
        walk(semilength, ups + 1, downs, steps, visit);
        steps.pop();
    }
    if downs < ups {
        steps.push(false);
        walk(semilength, ups, downs + 1, steps, visit);
        steps.pop();
    }
}

/// Whole cells between a north/east path (`true` = north) and the diagonal:
/// each east step at height `y` after `x` earlier east steps covers
/// `y - x - 1` cells strictly above the diagonal.
fn area_below(path: &[bool]) -> usize {
    let mut north = 0usize;
    let mut east = 0usize;
    let mut area = 0usize;
    for &up in path {
        if up {
            north += 1;
        } else {
            area += north - east - 1;
            east += 1;
        }
    }
    area
}

/// How a polynomial matches the Dyck area polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// Coefficients agree as given.
    Direct,
    /// Coefficients agree after `q^deg · P(1/q)`.
    Reversed,
}

/// `Direct` is preferred when a polynomial is palindromic.
pub fn dyck_orientation(q: &QPolynomial, dyck: &QPolynomial) -> Option<Orientation> {
    if q == dyck {
        Some(Orientation::Direct)
    } else if q.degree() == dyck.degree() && q.reversed() == *dyck {
        Some(Orientation::Reversed)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn build(name: &str) -> (Arc<RootSystem>, AntichainPoset) {
        let rs = Arc::new(RootSystem::from_name(name).unwrap());
        let ap = AntichainPoset::enumerate(rs.clone());
        (rs, ap)
    }

    #[test]
    fn catalan_examples() {
        for (name, c) in [("A3", 14), ("B2", 6), ("F4", 105), ("G2", 8), ("E8", 25080)] {
            let rs = RootSystem::from_name(name).unwrap();
            assert_eq!(catalan_number(&rs).unwrap(), c, "{name}");
        }
    }

    #[test]
    fn q_catalan_examples() {
        let (_, ap) = build("A2");
        assert_eq!(q_catalan(&ap).coeffs(), &[1, 1, 2, 1]);
        let (_, ap) = build("A1");
        assert_eq!(q_catalan(&ap).coeffs(), &[1, 1]);
        let (_, ap) = build("B2");
        let q = q_catalan(&ap);
        assert_eq!(q.degree(), 4);
        assert_eq!(q.eval_at_one(), 6);
    }

    #[test]
    fn graded_examples() {
        let (_, ap) = build("A2");
        assert_eq!(graded_distribution(&ap), vec![1, 3, 1]);
        let (_, ap) = build("A1");
        assert_eq!(graded_distribution(&ap), vec![1, 1]);
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(dyck_area_polynomial(1).unwrap().coeffs(), &[1, 1]);
        assert_eq!(dyck_area_polynomial(2).unwrap().coeffs(), &[1, 1, 2, 1]);
        assert_eq!(dyck_area_polynomial(3).unwrap().eval_at_one(), 14);
        assert!(dyck_area_polynomial(0).is_err());
        assert!(dyck_area_polynomial(13).is_err());
    }

    #[test]
    fn area_below_by_hand() {
        // NNNEEE is the highest path, NENENE hugs the diagonal
        let p = |s: &str| s.chars().map(|c| c == 'N').collect::<Vec<_>>();
        assert_eq!(area_below(&p("NNNEEE")), 3);
        assert_eq!(area_below(&p("NENENE")), 0);
        assert_eq!(area_below(&p("NNENEE")), 2);
    }

    #[test]
    fn display() {
        let q = QPolynomial::from_coeffs(vec![1, 1, 2, 1]);
        assert_eq!(q.to_string(), "1 + q + 2q^2 + q^3");
        assert_eq!(q.reversed().coeffs(), &[1, 2, 1, 1]);
        assert_eq!(q.eval(2), 1 + 2 + 8 + 8);
    }
}

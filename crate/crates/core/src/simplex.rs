//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `maximize c·x` subject to linear constraints and `x ≥ 0`. Bland's
//! rule (lowest eligible column enters, ties in the ratio test broken by the
//! lowest basic variable) guarantees termination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<BigRational>,
    pub objective: BigRational,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<BigRational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    /// Maximize `objective · x` over `x ≥ 0`.
    pub fn maximize(objective: Vec<BigRational>) -> Self {
        LinearProgram {
            num_vars: objective.len(),
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add(&mut self, coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn solve(&self) -> Result<Solution, LpError> {
        let n = self.num_vars;
        let rows: Vec<Constraint> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    Constraint {
                        coeffs: c.coeffs.iter().map(|a| -a).collect(),
                        relation: match c.relation {
                            Relation::Le => Relation::Ge,
                            Relation::Ge => Relation::Le,
                            Relation::Eq => Relation::Eq,
                        },
                        rhs: -&c.rhs,
                    }
                } else {
                    c.clone()
                }
            })
            .collect();

        // columns: originals, one slack/surplus per inequality, then artificials
        let num_slack = rows.iter().filter(|c| c.relation != Relation::Eq).count();
        let num_art = rows.iter().filter(|c| c.relation != Relation::Le).count();
        let art_start = n + num_slack;
        let width = art_start + num_art;

        let mut t = Tableau {
            a: Vec::with_capacity(rows.len()),
            basis: Vec::with_capacity(rows.len()),
            obj: vec![BigRational::zero(); width + 1],
            width,
        };
        let (mut s, mut r) = (n, art_start);
        for c in &rows {
            let mut row = vec![BigRational::zero(); width + 1];
            row[..n].clone_from_slice(&c.coeffs);
            row[width] = c.rhs.clone();
            match c.relation {
                Relation::Le => {
                    row[s] = BigRational::one();
                    t.basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -BigRational::one();
                    s += 1;
                    row[r] = BigRational::one();
                    t.basis.push(r);
                    r += 1;
                }
                Relation::Eq => {
                    row[r] = BigRational::one();
                    t.basis.push(r);
                    r += 1;
                }
            }
            t.a.push(row);
        }

        // phase 1: maximize -Σ artificials
        let mut phase1 = vec![BigRational::zero(); width];
        for c in phase1.iter_mut().skip(art_start) {
            *c = -BigRational::one();
        }
        t.set_objective(&phase1);
        t.run(width).map_err(|_| LpError::Infeasible)?;
        if t.obj[width].is_negative() {
            return Err(LpError::Infeasible);
        }
        t.evict_artificials(art_start);

        // phase 2
        let mut cost = vec![BigRational::zero(); width];
        cost[..n].clone_from_slice(&self.objective);
        t.set_objective(&cost);
        t.run(art_start)?;

        let mut values = vec![BigRational::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                values[b] = t.a[i][width].clone();
            }
        }
        let objective = values
            .iter()
            .zip(&self.objective)
            .map(|(x, c)| x * c)
            .fold(BigRational::zero(), |acc, v| acc + v);
        Ok(Solution { values, objective })
    }
}

struct Tableau {
    a: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    /// `obj[j] = c_B · B⁻¹A_j - c_j`; `obj[width]` is the objective value.
    obj: Vec<BigRational>,
    width: usize,
}

impl Tableau {
    fn set_objective(&mut self, cost: &[BigRational]) {
        let w = self.width;
        let mut obj: Vec<BigRational> = cost.iter().map(|c| -c).collect();
        obj.push(BigRational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=w {
                obj[j] += cb * &self.a[i][j];
            }
        }
        self.obj = obj;
    }

    /// Pivots until optimal. Only columns below `allowed` may enter.
    fn run(&mut self, allowed: usize) -> Result<(), LpError> {
        let w = self.width;
        loop {
            let Some(col) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Ok(());
            };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.a[i][w] / &self.a[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((row, _)) = best else {
                return Err(LpError::Unbounded);
            };
            self.pivot(row, col);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.width;
        let p = self.a[row][col].clone();
        for v in self.a[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.a[row].clone();
        for (i, r) in self.a.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for j in 0..=w {
                if !pivot_row[j].is_zero() {
                    r[j] -= &f * &pivot_row[j];
                }
            }
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for j in 0..=w {
                if !pivot_row[j].is_zero() {
                    self.obj[j] -= &f * &pivot_row[j];
                }
            }
        }
        self.basis[row] = col;
    }

    /// After phase 1, swaps zero-valued artificials out of the basis, dropping
    /// rows that turn out to be redundant.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] >= art_start {
                match (0..art_start).find(|&j| !self.a[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.a.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

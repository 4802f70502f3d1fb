//! Dominant regions of the Shi arrangement, realized on exact rational points.
//!
//! Points are given in the basis of fundamental coweights, so the value of a
//! root `α = Σ c_i α_i` at `x` is the integer dot product `Σ c_i x_i`. The
//! region of antichain `p` is `{x : α(x) > 1 for α ∈ I_p, 0 < α(x) < 1
//! otherwise}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::antichain::{from_mask, minimal_mask, upward_closure, Antichain};
use crate::error::{Error, Result};
use crate::root_system::{Root, RootMask, RootSystem};
use crate::simplex::{LinearProgram, LpError, Relation};

/// Largest rank handled by [`witness_point`] unless large ranks are allowed.
pub const WITNESS_RANK_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_ratios(ratios: &[(i64, i64)]) -> Self {
        RationalPoint {
            coords: ratios
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        }
    }

    /// Value of a root at this point.
    pub fn eval(&self, root: &Root) -> BigRational {
        root.coeffs
            .iter()
            .zip(&self.coords)
            .fold(BigRational::zero(), |acc, (&c, x)| {
                acc + x * BigRational::from_integer(BigInt::from(c))
            })
    }

    /// Coordinates as `"numerator/denominator"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    /// Parses `a/b,c/d,…`; integers are accepted, decimals are not.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty point".into()));
        }
        let coords = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                if part.contains(['.', 'e', 'E']) {
                    return Err(Error::Parse(format!(
                        "`{part}` is not an exact rational; write it as a/b"
                    )));
                }
                BigRational::from_str(part).map_err(|_| Error::Parse(format!("`{part}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalPoint { coords })
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Side {
    /// `0 < α(x) < 1`
    Below,
    /// `α(x) > 1`
    Above,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SignVector {
    pub sides: Vec<Side>,
}

impl SignVector {
    pub fn above(&self) -> Vec<usize> {
        (0..self.sides.len())
            .filter(|&i| self.sides[i] == Side::Above)
            .collect()
    }
}

/// Region of a strictly dominant point that lies on no Shi hyperplane.
pub fn classify_point(rs: &RootSystem, x: &RationalPoint) -> Result<Antichain> {
    let above = above_set(rs, x)?;
    if upward_closure(rs, above) != above {
        return Err(Error::Invariant(format!(
            "roots above 1 at {x} do not form an upper ideal"
        )));
    }
    Ok(Antichain::from_mask_unchecked(minimal_mask(rs, above)))
}

/// Sign vector of `x`, checked the same way as [`classify_point`].
pub fn point_sign_vector(rs: &RootSystem, x: &RationalPoint) -> Result<SignVector> {
    let above = above_set(rs, x)?;
    Ok(mask_to_signs(rs, above))
}

fn above_set(rs: &RootSystem, x: &RationalPoint) -> Result<RootMask> {
    let n = rs.rank();
    if x.coords.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.coords.len(),
        });
    }
    let roots = rs.positive_roots();
    for (i, xi) in x.coords.iter().enumerate() {
        if xi.is_negative() {
            return Err(Error::Chamber {
                root: roots[i].label(),
                value: format_rational(xi),
            });
        }
        if xi.is_zero() {
            return Err(Error::Boundary {
                root: roots[i].label(),
                level: 0,
            });
        }
    }
    let one = BigRational::one();
    let mut above: RootMask = 0;
    for (r, root) in roots.iter().enumerate() {
        let v = x.eval(root);
        if v == one {
            return Err(Error::Boundary {
                root: root.label(),
                level: 1,
            });
        }
        if v > one {
            above |= 1 << r;
        }
    }
    Ok(above)
}

fn mask_to_signs(rs: &RootSystem, above: RootMask) -> SignVector {
    SignVector {
        sides: (0..rs.num_positive_roots())
            .map(|r| {
                if above & (1 << r) != 0 {
                    Side::Above
                } else {
                    Side::Below
                }
            })
            .collect(),
    }
}

/// `Above` exactly on the ideal generated by `p`.
pub fn sign_vector(rs: &RootSystem, p: &Antichain) -> Result<SignVector> {
    let p = Antichain::new(rs, p.roots().to_vec())?;
    Ok(mask_to_signs(rs, upward_closure(rs, p.mask())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub point: RationalPoint,
    /// Largest uniform margin `t` by which every inequality of the region can
    /// hold at once (capped at 1). The returned point keeps margin `t/2`.
    #[serde(serialize_with = "serialize_rational")]
    pub slack: BigRational,
}

fn serialize_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// An exact interior point of the region of `p`.
///
/// First maximizes a margin `t` subject to `α(x) ≥ 1 + t` on `I_p`,
/// `t ≤ α(x) ≤ 1 - t` elsewhere and `t ≤ 1`; then fixes the margin at half its
/// optimum and returns the vertex minimizing `Σ x_i`.
pub fn witness_point(rs: &RootSystem, p: &Antichain, allow_large: bool) -> Result<Witness> {
    let n = rs.rank();
    if n > WITNESS_RANK_LIMIT && !allow_large {
        return Err(Error::RankGuard {
            rank: n,
            limit: WITNESS_RANK_LIMIT,
        });
    }
    let p = Antichain::new(rs, p.roots().to_vec())?;
    let ideal = upward_closure(rs, p.mask());
    let roots = rs.positive_roots();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));

    let mut objective = vec![BigRational::zero(); n + 1];
    objective[n] = BigRational::one();
    let mut lp = LinearProgram::maximize(objective);
    for (r, root) in roots.iter().enumerate() {
        let mut row: Vec<BigRational> = root.coeffs.iter().map(|&c| q(c)).collect();
        if ideal & (1 << r) != 0 {
            row.push(q(-1));
            lp.add(row, Relation::Ge, q(1));
        } else {
            let mut lower = row.clone();
            lower.push(q(-1));
            lp.add(lower, Relation::Ge, q(0));
            row.push(q(1));
            lp.add(row, Relation::Le, q(1));
        }
    }
    let mut cap = vec![BigRational::zero(); n + 1];
    cap[n] = BigRational::one();
    lp.add(cap, Relation::Le, q(1));

    let label = p.label(rs);
    let slack = match lp.solve() {
        Ok(s) if s.objective.is_positive() => s.objective,
        Ok(_) | Err(LpError::Infeasible) => {
            return Err(Error::Invariant(format!("region of {label} is empty")))
        }
        Err(LpError::Unbounded) => {
            return Err(Error::Invariant(format!("margin LP for {label} is unbounded")))
        }
    };

    let margin = &slack / q(2);
    let mut fixed = LinearProgram::maximize(vec![q(-1); n]);
    for (r, root) in roots.iter().enumerate() {
        let row: Vec<BigRational> = root.coeffs.iter().map(|&c| q(c)).collect();
        if ideal & (1 << r) != 0 {
            fixed.add(row, Relation::Ge, q(1) + &margin);
        } else {
            fixed.add(row.clone(), Relation::Ge, margin.clone());
            fixed.add(row, Relation::Le, q(1) - &margin);
        }
    }
    let point = match fixed.solve() {
        Ok(s) => RationalPoint::new(s.values),
        Err(e) => {
            return Err(Error::Invariant(format!(
                "half-margin system for {label} failed: {e:?}"
            )))
        }
    };

    let back = classify_point(rs, &point)?;
    if back != p {
        return Err(Error::Invariant(format!(
            "witness {point} of {label} classifies as {}",
            back.label(rs)
        )));
    }
    Ok(Witness { point, slack })
}

/// `{antichain, ideal, sign_vector, slack}` summary of one region.
#[derive(Debug, Clone, Serialize)]
pub struct RegionReport {
    pub antichain: Vec<usize>,
    pub ideal: Vec<usize>,
    pub sign_vector: SignVector,
    pub point: RationalPoint,
    #[serde(serialize_with = "serialize_rational")]
    pub slack: BigRational,
}

pub fn region_report(rs: &RootSystem, p: &Antichain, allow_large: bool) -> Result<RegionReport> {
    let w = witness_point(rs, p, allow_large)?;
    Ok(RegionReport {
        antichain: p.roots().to_vec(),
        ideal: from_mask(upward_closure(rs, p.mask())),
        sign_vector: sign_vector(rs, p)?,
        point: w.point,
        slack: w.slack,
    })
}

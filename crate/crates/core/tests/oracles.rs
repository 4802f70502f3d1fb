//! Cross-checks against independent, slower computations.

use std::collections::HashSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use shi_core::antichain::{ideal_of, minimal_elements};
use shi_core::catalan::{catalan_number, dyck_area_polynomial, graded_distribution, q_catalan};
use shi_core::presented::{graded_product, monomial_product, PresentedRing};
use shi_core::verify::brute_force_antichains;
use shi_core::{Antichain, AntichainPoset, HeavisideRing, RootSystem};

fn poset(name: &str) -> Arc<AntichainPoset> {
    let rs = Arc::new(RootSystem::from_name(name).unwrap());
    Arc::new(AntichainPoset::enumerate(rs))
}

/// Rank by plain Gaussian elimination over the rationals.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn enumeration_matches_subset_filter() {
    for name in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2"] {
        let ap = poset(name);
        assert_eq!(brute_force_antichains(ap.root_system()), ap.len(), "{name}");
    }
}

#[test]
fn exceptional_counts() {
    for (name, count) in [("E6", 833), ("E7", 4160), ("E8", 25080), ("F4", 105)] {
        let ap = poset(name);
        assert_eq!(ap.len(), count, "{name}");
        assert_eq!(catalan_number(ap.root_system()).unwrap(), count as u128);
    }
}

#[test]
fn canonical_order_is_a_linear_extension() {
    for name in ["A4", "B3", "D4", "G2", "F4"] {
        let ap = poset(name);
        for i in 0..ap.len() {
            for j in 0..ap.len() {
                if ap.leq(i, j) {
                    assert!(i <= j, "{name}: {i} ⪯ {j}");
                }
            }
        }
    }
}

#[test]
fn mobius_matches_recursive_definition() {
    // μ(p, p) = 1, μ(p, q) = -Σ_{p ⪯ r ≺ q} μ(p, r)
    for name in ["A3", "B3", "G2", "D4"] {
        let ap = poset(name);
        let m = ap.len();
        let matrix = ap.mobius_matrix();
        for p in 0..m {
            let mut mu = vec![0i64; m];
            for q in p..m {
                if !ap.leq(p, q) {
                    continue;
                }
                mu[q] = if q == p {
                    1
                } else {
                    -(p..q).filter(|&r| ap.leq(r, q)).map(|r| mu[r]).sum::<i64>()
                };
            }
            assert_eq!(matrix[p], mu, "{name}: row {p}");
        }
    }
}

#[test]
fn ideal_and_minimal_are_inverse_on_all_subsets() {
    for name in ["A3", "B2", "G2", "B3"] {
        let rs = RootSystem::from_name(name).unwrap();
        let m = rs.num_positive_roots();
        for mask in 0u32..(1 << m) {
            let set: Vec<usize> = (0..m).filter(|&r| mask & (1 << r) != 0).collect();
            let min = minimal_elements(&rs, &set).unwrap();
            let closure = ideal_of(&rs, &min).unwrap();
            let expected: Vec<usize> = (0..m)
                .filter(|&b| set.iter().any(|&a| rs.leq_table()[a][b]))
                .collect();
            assert_eq!(closure.roots(), expected.as_slice(), "{name}: {set:?}");
            assert_eq!(minimal_elements(&rs, closure.roots()).unwrap(), min);
        }
    }
}

#[test]
fn singleton_embedding_reverses_order() {
    for name in ["A4", "C3", "F4"] {
        let ap = poset(name);
        let rs = ap.root_system();
        for a in 0..rs.num_positive_roots() {
            for b in 0..rs.num_positive_roots() {
                let (sa, sb) = (ap.singleton(a).unwrap(), ap.singleton(b).unwrap());
                assert_eq!(rs.leq_table()[a][b], ap.leq(sb, sa), "{name}: {a} {b}");
            }
        }
    }
}

/// F_k from raw products: every multiset of at most k generators from
/// `{1} ∪ {h_α}` multiplied out pointwise.
fn raw_filtration_rank(ring: &HeavisideRing, k: usize) -> usize {
    let rs = ring.poset().root_system();
    let gens: Vec<Vec<i64>> = (0..rs.num_positive_roots())
        .map(|r| ring.h_root(r).unwrap().coords)
        .collect();
    let mut products: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier = vec![vec![1i64; ring.dim()]];
    products.insert(frontier[0].clone());
    for _ in 0..k {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &gens {
                let prod: Vec<i64> = f.iter().zip(g).map(|(a, b)| a * b).collect();
                if products.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    let mut rows: Vec<Vec<i64>> = products.into_iter().collect();
    rows.sort();
    rational_rank(&rows)
}

#[test]
fn filtration_matches_raw_products() {
    for name in ["A2", "A3", "B2", "B3", "G2"] {
        let ap = poset(name);
        let ring = HeavisideRing::new(ap.clone());
        for k in 0..=ap.root_system().rank() + 1 {
            assert_eq!(ring.filtration_rank(k), raw_filtration_rank(&ring, k), "{name} k={k}");
        }
    }
}

#[test]
fn filtration_is_cumulative_graded_distribution() {
    for name in ["A4", "B3", "C3", "D4"] {
        let ap = poset(name);
        let ring = HeavisideRing::new(ap.clone());
        let dist = graded_distribution(&ap);
        let report = ring.filtration();
        let mut acc = 0;
        for (k, rank) in report.ranks.iter().enumerate() {
            acc += dist.get(k).copied().unwrap_or(0) as usize;
            assert_eq!(*rank, acc, "{name} k={k}");
        }
        assert!(report.ranks.iter().all(|&r| r <= ap.len()));
    }
}

#[test]
fn monomial_product_is_associative_and_commutative() {
    for name in ["A3", "B3", "C3", "G2"] {
        let ap = poset(name);
        let rs = ap.root_system();
        let all = ap.antichains();
        for p in all {
            for q in all {
                let pq = monomial_product(rs, p, q).unwrap();
                assert_eq!(pq, monomial_product(rs, q, p).unwrap());
                for r in all {
                    let left = monomial_product(rs, &pq, r).unwrap();
                    let qr = monomial_product(rs, q, r).unwrap();
                    assert_eq!(left, monomial_product(rs, p, &qr).unwrap());
                }
            }
        }
    }
}

#[test]
fn graded_degree_counts() {
    for name in ["A3", "B3", "D4", "G2"] {
        let ap = poset(name);
        let rs = ap.root_system();
        let dist = graded_distribution(&ap);
        // degree-k monomials are exactly the nonzero products of k generators
        let gens: Vec<Antichain> = (0..rs.num_positive_roots())
            .map(|r| Antichain::new(rs, vec![r]).unwrap())
            .collect();
        let mut level: HashSet<Antichain> = [Antichain::empty()].into_iter().collect();
        for (k, &expected) in dist.iter().enumerate() {
            assert_eq!(level.len() as u64, expected, "{name} degree {k}");
            let mut next = HashSet::new();
            for p in &level {
                for g in &gens {
                    if let Some(r) = graded_product(rs, p, g).unwrap() {
                        next.insert(r);
                    }
                }
            }
            level = next;
        }
        assert!(level.is_empty());
    }
}

#[test]
fn presented_ring_rank_is_catalan() {
    for name in ["A4", "B4", "F4"] {
        let ap = poset(name);
        let u = PresentedRing::new(ap.clone());
        assert_eq!(u.rank() as u128, catalan_number(ap.root_system()).unwrap());
    }
}

#[test]
fn rho_respects_filtration_degree() {
    // ρ maps u_p (filtration degree |p|) to h_p, which lies in F_|p|
    let ap = poset("B3");
    let ring = HeavisideRing::new(ap.clone());
    let u = PresentedRing::new(ap.clone());
    for p in 0..ap.len() {
        let image = u.rho(&u.monomial(p)).unwrap();
        let k = ap.antichain(p).len();
        let mut rows: Vec<Vec<i64>> = ring
            .spanning_set(k)
            .into_iter()
            .map(|q| ring.h_antichain(q).unwrap().coords)
            .collect();
        let before = rational_rank(&rows);
        rows.push(image.coords);
        assert_eq!(rational_rank(&rows), before, "antichain {p}");
    }
}

#[test]
fn dyck_oracle_beyond_acceptance_range() {
    for n in 6..=7 {
        let ap = poset(&format!("A{n}"));
        assert_eq!(q_catalan(&ap), dyck_area_polynomial(n).unwrap(), "A{n}");
    }
}

#[test]
fn q_catalan_shape() {
    for name in ["B3", "D4", "G2", "F4", "E6"] {
        let ap = poset(name);
        let q = q_catalan(&ap);
        assert_eq!(q.eval_at_one() as usize, ap.len());
        assert_eq!(q.coeffs()[0], 1);
        assert_eq!(*q.coeffs().last().unwrap(), 1);
        assert_eq!(q.degree(), ap.root_system().num_positive_roots());
    }
}

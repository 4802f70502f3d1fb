use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use shi_core::presented::{reduce_multiset, reduce_multiset_by};
use shi_core::regions::{classify_point, witness_point};
use shi_core::{AntichainPoset, HeavisideRing, PresentedRing, RationalPoint, RingElement, RootSystem};

fn b3() -> &'static Arc<AntichainPoset> {
    static POSET: OnceLock<Arc<AntichainPoset>> = OnceLock::new();
    POSET.get_or_init(|| {
        Arc::new(AntichainPoset::enumerate(Arc::new(RootSystem::from_name("B3").unwrap())))
    })
}

fn b3_ring() -> &'static HeavisideRing {
    static RING: OnceLock<HeavisideRing> = OnceLock::new();
    RING.get_or_init(|| HeavisideRing::new(b3().clone()))
}

proptest! {
    #[test]
    fn basis_change_round_trips(coords in prop::collection::vec(-50i64..50, 20)) {
        let ring = b3_ring();
        let x = RingElement::delta(coords);
        let h = ring.to_h_basis(&x).unwrap();
        prop_assert_eq!(ring.to_delta_basis(&h).unwrap(), x);
    }

    #[test]
    fn rho_is_multiplicative(
        a in prop::collection::vec(-5i64..5, 20),
        b in prop::collection::vec(-5i64..5, 20),
    ) {
        let ring = b3_ring();
        let u = PresentedRing::new(b3().clone());
        let x = shi_core::UElement { coords: a };
        let y = shi_core::UElement { coords: b };
        let lhs = u.rho(&u.multiply(&x, &y).unwrap()).unwrap();
        let rhs = ring.multiply(&u.rho(&x).unwrap(), &u.rho(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rewriting_is_confluent(
        word in prop::collection::vec(0usize..9, 0..10),
        picks in prop::collection::vec(any::<usize>(), 64),
    ) {
        let rs = b3().root_system();
        let mut it = picks.into_iter().cycle();
        let random = reduce_multiset_by(rs, &word, |pairs| it.next().unwrap() % pairs.len()).unwrap();
        prop_assert_eq!(random, reduce_multiset(rs, &word).unwrap());
    }

    #[test]
    fn classified_ideals_are_upward_closed(
        coords in prop::collection::vec((1i64..40, 1i64..20), 3),
    ) {
        let rs = b3().root_system();
        let x = RationalPoint::from_ratios(&coords);
        if let Ok(p) = classify_point(rs, &x) {
            let ideal = shi_core::antichain::ideal_of(rs, &p).unwrap();
            for (r, root) in rs.positive_roots().iter().enumerate() {
                let above = x.eval(root) > BigRational::from_integer(1.into());
                prop_assert_eq!(above, ideal.contains(r));
            }
        }
    }

    #[test]
    fn witness_points_survive_small_perturbations(
        index in 0usize..20,
        signs in prop::collection::vec(prop::bool::ANY, 3),
    ) {
        let ap = b3();
        let rs = ap.root_system();
        let p = ap.antichain(index);
        let w = witness_point(rs, p, false).unwrap();
        // the point keeps margin slack/2 on every inequality; a coordinate
        // shift of ε moves α(x) by at most height(θ)·ε
        let theta = rs.positive_roots()[rs.highest_root_index()].height();
        let eps = &w.slack / BigRational::from_integer((4 * theta).into());
        prop_assert!(eps.is_positive());
        let moved: Vec<BigRational> = w
            .point
            .coords
            .iter()
            .zip(&signs)
            .map(|(c, &up)| if up { c + &eps } else { c - &eps })
            .collect();
        prop_assert_eq!(&classify_point(rs, &RationalPoint::new(moved)).unwrap(), p);
    }
}

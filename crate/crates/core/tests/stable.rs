mod common;

use common::{arb_polymatroidal, arb_veronese_spec, prime};
use proptest::prelude::*;
use stableass::oracle::{ass_primes, astab_certified};
use stableass::polymatroid::veronese_ideal;
use stableass::rank::exponent_rank;
use stableass::veronese::{normalize, VeroneseCase};
use stableass::stable::{analytic_spread, ass_infinity, limit_depth, ExponentMatrix};
use stableass::{Error, Limits, MonomialIdeal};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_sandwich(ideal in arb_polymatroidal()) {
        let l = Limits::default();
        let stable = ass_infinity(&ideal, &l).unwrap();
        let (k0, report) = astab_certified(&ideal, &l).unwrap();
        prop_assert!(report.certified());
        prop_assert_eq!(report.primes_at(k0).unwrap(), &stable);
        for k in 1..=k0 {
            let at_k = ass_primes(&ideal.power(k).unwrap(), &l).unwrap();
            prop_assert!(at_k.is_subset(&stable));
        }
    }

    #[test]
    fn maximal_ideal_iff_full_spread(ideal in arb_polymatroidal()) {
        let n = ideal.nvars();
        let stable = ass_infinity(&ideal, &Limits::default()).unwrap();
        let full = prime(&(0..n).collect::<Vec<_>>());
        let spread = analytic_spread(&ideal).unwrap();
        prop_assert_eq!(stable.contains(&full), spread == n);
        // For F = [n] the restricted computation is the plain rank.
        let matrix = ExponentMatrix::of_ideal(&ideal);
        prop_assert_eq!(matrix.localized_rank(&full).unwrap() == n, spread == n);
        let rows: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
        prop_assert_eq!(exponent_rank(&rows), spread);
        prop_assert_eq!(limit_depth(&ideal).unwrap(), n - spread);
    }

    #[test]
    fn veronese_stable_set_is_vstar(spec in arb_veronese_spec(4, 4, 3)) {
        prop_assume!(normalize(&spec).case() == VeroneseCase::General);
        let ideal = veronese_ideal(&spec).unwrap();
        let l = Limits::default();
        // Variables with cap 0 never occur, so compare inside their complement.
        let active = prime(normalize(&spec).active());
        let vstar: std::collections::BTreeSet<_> = ideal
            .vstar(&l)
            .unwrap()
            .into_iter()
            .filter(|p| p.is_subset(&active))
            .collect();
        prop_assert_eq!(ass_infinity(&ideal, &l).unwrap(), vstar);
    }
}

#[test]
fn refuses_non_polymatroidal_input() {
    let squares = MonomialIdeal::from_exponents(2, [vec![2, 0], vec![0, 2]]).unwrap();
    assert!(matches!(
        ass_infinity(&squares, &Limits::default()),
        Err(Error::NotPolymatroidal)
    ));
}

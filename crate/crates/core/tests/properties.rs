mod common;

use common::props;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ab_index_is_symmetric_on_eulerian_posets(p in props::eulerian_poset()) {
        props::check_ab_symmetry(&p)?;
    }

    #[test]
    fn cd_index_is_multiplicative_under_join(p in props::small_eulerian(), q in props::small_eulerian()) {
        props::check_join_multiplicative(&p, &q)?;
    }

    #[test]
    fn cd_expansion_roundtrips(p in props::cd_polynomial()) {
        props::check_cd_roundtrip(&p)?;
    }

    #[test]
    fn ab_conversion_roundtrips(p in props::ab_polynomial()) {
        props::check_ab_roundtrip(&p)?;
    }

    #[test]
    fn cd_words_are_counted_by_fibonacci(n in 0usize..=15) {
        props::check_fibonacci(n)?;
    }

    #[test]
    fn toric_h_is_palindromic(p in props::eulerian_poset()) {
        props::check_toric_h_palindrome(&p)?;
    }

    #[test]
    fn local_h_is_palindromic(m in props::stellar_subdivision()) {
        props::check_local_h_palindrome(&m)?;
    }

    #[test]
    fn eulerian_test_agrees_with_mobius(p in props::perturbed_poset()) {
        props::check_mobius_agreement(&p)?;
    }
}

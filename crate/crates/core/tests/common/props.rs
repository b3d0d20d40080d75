#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::oracle;
use super::{cube, polygon, random_stellar, sphere};
use cdindex::complex::make_stacked;
use cdindex::ncpoly::{cd_words, expand_cd, to_cd, Ab, Cd, Word};
use cdindex::poset::{boolean_algebra, dual, is_eulerian, join, pyramid, suspension};
use cdindex::{ab_index, build_poset, cd_index, local_h, toric_h, AbPolynomial, CdPolynomial, GradedPoset};

/// Size cap for randomly composed posets.
const MAX_ELEMENTS: usize = 90;

fn base(kind: u8, n: usize, seed: u64) -> GradedPoset {
    match kind % 4 {
        0 => boolean_algebra(1 + n % 4),
        1 => polygon(3 + n % 6),
        2 => sphere(&make_stacked(3, 1 + n % 4, seed).unwrap().boundary),
        _ => cube(),
    }
}

fn apply(p: GradedPoset, op: u8, n: usize) -> GradedPoset {
    if p.len() > MAX_ELEMENTS / 2 {
        return p;
    }
    match op % 4 {
        0 => suspension(&p).unwrap(),
        1 => pyramid(&p).unwrap(),
        2 => dual(&p),
        _ => join(&p, &polygon(3 + n % 3)).unwrap(),
    }
}

/// Eulerian posets built from boolean algebras, polygons, stacked 3-polytopes and the cube by
/// suspension, pyramid, duality and joins.
pub fn eulerian_poset() -> impl Strategy<Value = GradedPoset> {
    (any::<u8>(), 0usize..24, any::<u64>(), prop::collection::vec((any::<u8>(), 0usize..6), 0..3))
        .prop_map(|(kind, n, seed, ops)| ops.into_iter().fold(base(kind, n, seed), |p, (op, m)| apply(p, op, m)))
}

/// Small Eulerian posets without composition.
pub fn small_eulerian() -> impl Strategy<Value = GradedPoset> {
    (any::<u8>(), 0usize..24, any::<u64>()).prop_map(|(kind, n, seed)| base(kind, n, seed))
}

/// Eulerian posets with up to two covers removed or added, which usually breaks the property.
pub fn perturbed_poset() -> impl Strategy<Value = GradedPoset> {
    (
        small_eulerian(),
        prop::collection::vec((any::<bool>(), any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..3),
    )
        .prop_map(|(p, edits)| {
            let ids: Vec<String> = p.ids().to_vec();
            let mut covers: Vec<(String, String)> =
                p.covers().map(|(x, y)| (p.id(x).to_string(), p.id(y).to_string())).collect();
            for (remove, i, j) in edits {
                if remove && covers.len() > 1 {
                    covers.remove(i.index(covers.len()));
                } else {
                    let (x, y) = (i.index(ids.len()), j.index(ids.len()));
                    if p.rank_of(x) + 1 == p.rank_of(y) && !p.less(x, y) {
                        covers.push((ids[x].clone(), ids[y].clone()));
                    }
                }
            }
            build_poset(&ids, &covers).unwrap()
        })
}

pub fn cd_polynomial() -> impl Strategy<Value = CdPolynomial> {
    (1usize..=8, prop::collection::vec((any::<prop::sample::Index>(), -5i64..=5), 0..6)).prop_map(|(deg, terms)| {
        let words = cd_words(deg);
        let mut p = CdPolynomial::zero();
        for (i, k) in terms {
            p.add_term(words[i.index(words.len())].clone(), BigInt::from(k));
        }
        p
    })
}

pub fn ab_polynomial() -> impl Strategy<Value = AbPolynomial> {
    (1usize..=6, prop::collection::vec((any::<u64>(), -3i64..=3), 0..5)).prop_map(|(deg, terms)| {
        let mut p = AbPolynomial::zero();
        for (bits, k) in terms {
            let w = Word((0..deg).map(|i| if bits >> i & 1 == 1 { Ab::B } else { Ab::A }).collect());
            p.add_term(w, BigInt::from(k));
        }
        p
    })
}

pub fn stellar_subdivision() -> impl Strategy<Value = cdindex::SubdivisionMap> {
    (1usize..=3, prop::collection::vec(any::<usize>(), 0..4))
        .prop_map(|(d, picks)| random_stellar(d, picks.len(), &picks))
}

pub fn check_ab_symmetry(p: &GradedPoset) -> Result<(), TestCaseError> {
    let psi = ab_index(p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(psi.swap_ab(), psi);
    Ok(())
}

pub fn check_join_multiplicative(p: &GradedPoset, q: &GradedPoset) -> Result<(), TestCaseError> {
    let pq = join(p, q).unwrap();
    prop_assert_eq!(cd_index(&pq).unwrap(), &cd_index(p).unwrap() * &cd_index(q).unwrap());
    Ok(())
}

pub fn check_cd_roundtrip(p: &CdPolynomial) -> Result<(), TestCaseError> {
    prop_assert_eq!(&to_cd(&expand_cd(p)).unwrap(), p);
    Ok(())
}

pub fn check_ab_roundtrip(p: &AbPolynomial) -> Result<(), TestCaseError> {
    if let Ok(cd) = to_cd(p) {
        prop_assert_eq!(&expand_cd(&cd), p);
        prop_assert_eq!(&p.swap_ab(), p);
    }
    Ok(())
}

pub fn check_fibonacci(n: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(cd_words(n).len() as u64, oracle::fibonacci(n + 1));
    for w in cd_words(n) {
        prop_assert_eq!(w.degree(), n);
        prop_assert!(w.letters().iter().all(|l| matches!(l, Cd::C | Cd::D)));
    }
    Ok(())
}

pub fn check_toric_h_palindrome(p: &GradedPoset) -> Result<(), TestCaseError> {
    let n = p.rank().unwrap();
    let h = toric_h(p).unwrap();
    prop_assert!(h.is_palindromic(n - 1), "h = {} not palindromic at {}", h, n - 1);
    Ok(())
}

pub fn check_local_h_palindrome(m: &cdindex::SubdivisionMap) -> Result<(), TestCaseError> {
    let table = local_h(m).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for row in &table.rows {
        prop_assert!(row.ell.is_palindromic(row.rank), "ell({}) = {} not palindromic", row.sigma, row.ell);
    }
    Ok(())
}

pub fn check_mobius_agreement(p: &GradedPoset) -> Result<(), TestCaseError> {
    let lib = is_eulerian(p).unwrap_or(false);
    prop_assert_eq!(lib, oracle::is_eulerian(p));
    Ok(())
}

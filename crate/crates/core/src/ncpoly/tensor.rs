//! Letter-deletion coproduct, the map kappa, and collapse of tensors into `Z[x]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Ab, Cd, Letter, NcPolynomial, UniPolynomial, Word};

/// Finite sum `sum k * (u (x) v)` over pairs of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSum<L: Letter> {
    terms: BTreeMap<(Word<L>, Word<L>), BigInt>,
}

impl<L: Letter> Default for TensorSum<L> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<L: Letter> TensorSum<L> {
    /// Adds `k * (u (x) v)`.
    pub fn add_term(&mut self, u: Word<L>, v: Word<L>, k: BigInt) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry((u, v)).or_default();
        *e += k;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Terms `((u, v), k)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Word<L>, Word<L>), &BigInt)> {
        self.terms.iter()
    }

    /// True when empty.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Left and right factors as polynomials, one pair per term with multiplicity folded in.
    pub fn pairs(&self) -> Vec<(NcPolynomial<L>, NcPolynomial<L>)> {
        self.terms
            .iter()
            .map(|((u, v), k)| (NcPolynomial::monomial(u.clone(), k.clone()), NcPolynomial::monomial(v.clone(), 1)))
            .collect()
    }
}

/// `C(w_1...w_n) = sum_i w_1...w_{i-1} (x) w_{i+1}...w_n`, extended linearly.
pub fn coproduct(p: &NcPolynomial<Ab>) -> TensorSum<Ab> {
    let mut t = TensorSum::default();
    for (w, k) in p.terms() {
        for i in 0..w.len() {
            t.add_term(Word(w.0[..i].to_vec()), Word(w.0[i + 1..].to_vec()), k.clone());
        }
    }
    t
}

/// The same coproduct written in `c, d`: a derivation with `c -> 2 (1 (x) 1)` and
/// `d -> c (x) 1 + 1 (x) c`.
pub fn coproduct_cd(p: &NcPolynomial<Cd>) -> TensorSum<Cd> {
    let mut t = TensorSum::default();
    for (w, k) in p.terms() {
        for i in 0..w.len() {
            let left = &w.0[..i];
            let right = &w.0[i + 1..];
            match w.0[i] {
                Cd::C => t.add_term(Word(left.to_vec()), Word(right.to_vec()), k * 2),
                Cd::D => {
                    let mut lc = left.to_vec();
                    lc.push(Cd::C);
                    t.add_term(Word(lc), Word(right.to_vec()), k.clone());
                    let mut cr = vec![Cd::C];
                    cr.extend_from_slice(right);
                    t.add_term(Word(left.to_vec()), Word(cr), k.clone());
                }
            }
        }
    }
    t
}

/// Applies linear maps to both tensor factors and multiplies in `Z[x]`.
pub fn tensor_collapse<L: Letter>(
    t: &TensorSum<L>,
    mut left: impl FnMut(&Word<L>) -> UniPolynomial,
    mut right: impl FnMut(&Word<L>) -> UniPolynomial,
) -> UniPolynomial {
    let mut out = UniPolynomial::zero();
    for ((u, v), k) in t.terms() {
        let r = right(v);
        if r.is_zero() {
            continue;
        }
        let term = &(&left(u) * &r) * &UniPolynomial::new(vec![k.clone()]);
        out = &out + &term;
    }
    out
}

/// Algebra map `a -> x - 1`, `b -> 0`.
pub fn kappa(p: &NcPolynomial<Ab>) -> UniPolynomial {
    let mut out = UniPolynomial::zero();
    for (w, k) in p.terms() {
        if w.0.iter().all(|&l| l == Ab::A) {
            out = &out + &(&UniPolynomial::x_minus_one_pow(w.len()) * &UniPolynomial::new(vec![k.clone()]));
        }
    }
    out
}

/// Kappa on `c, d`: `c -> x - 1`, `d -> 0`.
pub fn kappa_cd(p: &NcPolynomial<Cd>) -> UniPolynomial {
    let mut out = UniPolynomial::zero();
    for (w, k) in p.terms() {
        if w.0.iter().all(|&l| l == Cd::C) {
            out = &out + &(&UniPolynomial::x_minus_one_pow(w.len()) * &UniPolynomial::new(vec![k.clone()]));
        }
    }
    out
}

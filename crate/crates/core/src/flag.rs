//! Flag f- and h-vectors, flag polynomial, ab-index, cd-index and local indices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{to_cd, Ab, AbPolynomial, Cd, CdPolynomial, Word};
use crate::poset::{adjoin_max, boundary, is_eulerian, is_near_eulerian, semisuspension, GradedPoset};

/// Values indexed by subsets of `{1..n}`; bit `i - 1` of a mask stands for rank `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    values: Vec<BigInt>,
}

impl FlagVector {
    /// Number of proper ranks.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Value at a mask.
    pub fn get(&self, mask: u64) -> &BigInt {
        &self.values[mask as usize]
    }

    /// Value at a set of ranks, each in `1..=n`.
    pub fn at(&self, ranks: &[usize]) -> &BigInt {
        self.get(ranks.iter().fold(0u64, |m, &r| m | 1 << (r - 1)))
    }

    /// All values, indexed by mask.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Masks ordered by size, then lexicographically by their sorted rank lists.
    pub fn masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = (0..1u64 << self.n).collect();
        masks.sort_by_key(|&m| (m.count_ones(), rank_list(m)));
        masks
    }

    /// `sum value(S) u_S` where `u_S` has `b` at the positions in `S`.
    pub fn to_polynomial(&self) -> AbPolynomial {
        let mut p = AbPolynomial::zero();
        for (mask, v) in self.values.iter().enumerate() {
            p.add_term(AbPolynomial::mask_word(mask as u64, self.n), v.clone());
        }
        p
    }
}

/// Sorted ranks encoded by a mask.
pub fn rank_list(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn proper_rank(p: &GradedPoset) -> Result<usize> {
    let (_, _, rank) = p.bounded_rank()?;
    if rank == 0 {
        return Err(Error::DomainError("flag vectors need rank at least 1".into()));
    }
    if rank - 1 > 62 {
        return Err(Error::RankTooLarge(rank));
    }
    Ok(rank - 1)
}

/// Flag f-vector by a rank-stratified dynamic program over masks.
pub fn flag_f(p: &GradedPoset) -> Result<FlagVector> {
    let n = proper_rank(p)?;
    let levels = p.levels()?;
    let size = 1usize << n;
    let mut vecs: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    let mut values = Vec::with_capacity(size);
    for mask in 0..size {
        if mask == 0 {
            vecs.push(vec![BigInt::one()]);
            values.push(BigInt::one());
            continue;
        }
        let high = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let prev = mask ^ (1 << high);
        let prev_rank = if prev == 0 { 0 } else { usize::BITS as usize - prev.leading_zeros() as usize };
        let from = &levels[prev_rank];
        let to = &levels[high + 1];
        let counts = &vecs[prev];
        let next: Vec<BigInt> = to
            .iter()
            .map(|&y| {
                from.iter().zip(counts).filter(|(&x, _)| p.less(x, y)).fold(BigInt::zero(), |acc, (_, c)| acc + c)
            })
            .collect();
        values.push(next.iter().sum());
        vecs.push(next);
    }
    Ok(FlagVector { n, values })
}

/// Flag h-vector by inclusion-exclusion over subsets.
pub fn flag_h(p: &GradedPoset) -> Result<FlagVector> {
    let mut f = flag_f(p)?;
    for i in 0..f.n {
        for mask in 0..f.values.len() {
            if mask >> i & 1 == 1 {
                let lower = f.values[mask ^ (1 << i)].clone();
                f.values[mask] -= lower;
            }
        }
    }
    Ok(f)
}

/// Flag polynomial `sum alpha(S) u_S`.
pub fn flag_polynomial(p: &GradedPoset) -> Result<AbPolynomial> {
    Ok(flag_f(p)?.to_polynomial())
}

/// ab-index `sum beta(S) u_S`.
pub fn ab_index(p: &GradedPoset) -> Result<AbPolynomial> {
    Ok(flag_h(p)?.to_polynomial())
}

fn chain_words(p: &GradedPoset) -> Result<(usize, Vec<Vec<bool>>)> {
    let n = proper_rank(p)?;
    let mut out = Vec::new();
    for chain in p.enumerate_chains()? {
        let mut marks = vec![false; n];
        for &x in &chain {
            marks[p.rank_of(x) - 1] = true;
        }
        out.push(marks);
    }
    Ok((n, out))
}

/// Flag polynomial as a sum over chains of their rank-set words.
pub fn flag_polynomial_by_chains(p: &GradedPoset) -> Result<AbPolynomial> {
    let (_, words) = chain_words(p)?;
    let mut out = AbPolynomial::zero();
    for marks in words {
        out.add_term(Word(marks.iter().map(|&m| if m { Ab::B } else { Ab::A }).collect()), BigInt::one());
    }
    Ok(out)
}

/// ab-index as a sum over chains of products of `b` (rank in chain) and `a - b` (otherwise).
pub fn ab_index_by_chains(p: &GradedPoset) -> Result<AbPolynomial> {
    let (_, words) = chain_words(p)?;
    let b = AbPolynomial::letter(Ab::B);
    let a_minus_b = &AbPolynomial::letter(Ab::A) - &b;
    let mut out = AbPolynomial::zero();
    for marks in words {
        let mut term = AbPolynomial::one();
        for m in marks {
            term = &term * if m { &b } else { &a_minus_b };
        }
        out += &term;
    }
    Ok(out)
}

/// cd-index.
///
/// Eulerian input: the rewriting of the ab-index in `c, d`. Near-Eulerian input: the local
/// cd-index plus the cd-index of the boundary, a non-homogeneous polynomial. Any other input
/// is attempted as the rewriting of its ab-index and fails with `NotCdExpressible`.
pub fn cd_index(p: &GradedPoset) -> Result<CdPolynomial> {
    p.bounded_rank()?;
    if is_eulerian(p)? {
        return to_cd(&ab_index(p)?);
    }
    if is_near_eulerian(p) {
        let local = local_index(p)?;
        return Ok(&local.cd + &cd_index(&boundary(p)?)?);
    }
    to_cd(&ab_index(p)?)
}

/// Local ab-index, local cd-index and local flag polynomial of a near-Eulerian poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIndex {
    /// `Psi(semisuspension) - Psi(boundary) * (a + b)`.
    pub ab: AbPolynomial,
    /// The same polynomial written in `c, d`.
    pub cd: CdPolynomial,
    /// `Upsilon(P) - Upsilon(P_1(boundary))`.
    pub flag: AbPolynomial,
}

/// Local indices of a near-Eulerian poset; the two-element chain has all three equal to 1.
pub fn local_index(p: &GradedPoset) -> Result<LocalIndex> {
    let (_, _, rank) = p.bounded_rank()?;
    if rank == 1 {
        return Ok(LocalIndex { ab: AbPolynomial::one(), cd: CdPolynomial::one(), flag: AbPolynomial::one() });
    }
    let q = semisuspension(p)?;
    let d = boundary(p)?;
    let c = AbPolynomial::c();
    let ab = &ab_index(&q)? - &(&ab_index(&d)? * &c);
    let flag = &flag_polynomial(p)? - &flag_polynomial(&adjoin_max(&d))?;
    if flag != ab.substitute_ab(&c, &AbPolynomial::letter(Ab::B)) {
        return Err(Error::IdentityViolated(format!(
            "local flag polynomial {flag} disagrees with local ab-index {ab}"
        )));
    }
    let cd = to_cd(&ab)?;
    Ok(LocalIndex { ab, cd, flag })
}

/// `c^2 + (n - 2) d`, the cd-index of an `n`-gon.
pub fn polygon_cd(n: usize) -> Result<CdPolynomial> {
    if n < 3 {
        return Err(Error::DomainError(format!("polygon needs at least 3 sides, got {n}")));
    }
    let mut p = CdPolynomial::monomial(Word(vec![Cd::C, Cd::C]), 1);
    p.add_term(Word(vec![Cd::D]), BigInt::from(n - 2));
    Ok(p)
}

/// `c^3 + (f0 - 2) dc + (f2 - 2) cd`, the cd-index of a 3-polytope.
pub fn three_polytope_cd(f0: usize, f2: usize) -> Result<CdPolynomial> {
    if f0 < 4 || f2 < 4 {
        return Err(Error::DomainError(format!("no 3-polytope has f0 = {f0}, f2 = {f2}")));
    }
    let mut p = CdPolynomial::monomial(Word(vec![Cd::C, Cd::C, Cd::C]), 1);
    p.add_term(Word(vec![Cd::D, Cd::C]), BigInt::from(f0 - 2));
    p.add_term(Word(vec![Cd::C, Cd::D]), BigInt::from(f2 - 2));
    Ok(p)
}

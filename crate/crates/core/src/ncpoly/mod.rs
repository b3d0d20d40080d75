//! Exact-integer polynomials: noncommutative in `{a,b}` or `{c,d}`, and univariate in `x`.

mod tensor;
mod uni;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use tensor::{coproduct, coproduct_cd, kappa, kappa_cd, tensor_collapse, TensorSum};
pub use uni::UniPolynomial;

/// A letter of a two-letter noncommutative alphabet.
pub trait Letter: Copy + Ord + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    /// The alphabet in its canonical order.
    const ALPHABET: [Self; 2];
    /// Degree contributed by one occurrence.
    fn weight(self) -> usize;
    /// Printed symbol.
    fn symbol(self) -> char;
    /// Letter for a printed symbol.
    fn from_symbol(c: char) -> Option<Self> {
        Self::ALPHABET.into_iter().find(|l| l.symbol() == c)
    }
}

/// Letters `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ab {
    /// The letter `a`.
    A,
    /// The letter `b`.
    B,
}

/// Letters `c < d`, of degrees 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cd {
    /// The letter `c`, standing for `a + b`.
    C,
    /// The letter `d`, standing for `ab + ba`.
    D,
}

impl Letter for Ab {
    const ALPHABET: [Self; 2] = [Ab::A, Ab::B];
    fn weight(self) -> usize {
        1
    }
    fn symbol(self) -> char {
        match self {
            Ab::A => 'a',
            Ab::B => 'b',
        }
    }
}

impl Letter for Cd {
    const ALPHABET: [Self; 2] = [Cd::C, Cd::D];
    fn weight(self) -> usize {
        match self {
            Cd::C => 1,
            Cd::D => 2,
        }
    }
    fn symbol(self) -> char {
        match self {
            Cd::C => 'c',
            Cd::D => 'd',
        }
    }
}

/// A word; ordered by degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word<L>(pub Vec<L>);

impl<L: Letter> Word<L> {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Sum of letter weights.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.weight()).sum()
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters of the word.
    pub fn letters(&self) -> &[L] {
        &self.0
    }

    /// Concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl<L: Letter> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Letter> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            write!(f, "{}", self.0[i].symbol())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl<L: Letter> FromStr for Word<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let l =
                L::from_symbol(chars[i]).ok_or_else(|| Error::Parse(format!("unexpected `{}` in `{s}`", chars[i])))?;
            i += 1;
            let mut power = 1usize;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                power = digits.parse().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            }
            letters.extend(std::iter::repeat_n(l, power));
        }
        Ok(Word(letters))
    }
}

/// Noncommutative polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in canonical order (degree, then lexicographic) with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcPolynomial<L: Letter> {
    terms: BTreeMap<Word<L>, BigInt>,
}

/// Polynomial in `a` and `b`.
pub type AbPolynomial = NcPolynomial<Ab>;
/// Polynomial in `c` and `d`.
pub type CdPolynomial = NcPolynomial<Cd>;

impl<L: Letter> Default for NcPolynomial<L> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Letter> NcPolynomial<L> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::monomial(Word::empty(), BigInt::one())
    }

    /// A single letter.
    pub fn letter(l: L) -> Self {
        Self::monomial(Word(vec![l]), BigInt::one())
    }

    /// `coeff * word`.
    pub fn monomial(word: Word<L>, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff.into());
        p
    }

    /// Adds `coeff * word` in place.
    pub fn add_term(&mut self, word: Word<L>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word<L>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a word.
    pub fn coeff(&self, word: &Word<L>) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        let mut p = Self::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c * k);
        }
        p
    }

    /// Terms of the given degree.
    pub fn component(&self, degree: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct degrees of the terms, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|w| w.degree()).collect();
        d.dedup();
        d
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficientwise comparison `self >= other`, missing terms read as 0.
    pub fn dominates(&self, other: &Self) -> bool {
        (self - other).is_nonnegative()
    }

    /// Replaces every letter by a polynomial over another alphabet.
    pub fn substitute<M: Letter>(&self, image: impl Fn(L) -> NcPolynomial<M>) -> NcPolynomial<M> {
        let images: Vec<(L, NcPolynomial<M>)> = L::ALPHABET.iter().map(|&l| (l, image(l))).collect();
        let lookup = |l: L| &images.iter().find(|(k, _)| *k == l).expect("letter in alphabet").1;
        let mut out = NcPolynomial::zero();
        for (w, c) in &self.terms {
            let mut term = NcPolynomial::monomial(Word::empty(), c.clone());
            for &l in &w.0 {
                term = &term * lookup(l);
                if term.is_zero() {
                    break;
                }
            }
            out += &term;
        }
        out
    }
}

impl AbPolynomial {
    /// Parses text, e.g. `aa + 3*ab - b^2`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    /// Word with `b` exactly at the 1-based positions set in `mask`, of length `n`.
    pub fn mask_word(mask: u64, n: usize) -> Word<Ab> {
        Word((0..n).map(|i| if mask >> i & 1 == 1 { Ab::B } else { Ab::A }).collect())
    }

    /// Substitution `a -> image_a`, `b -> image_b`.
    pub fn substitute_ab(&self, image_a: &AbPolynomial, image_b: &AbPolynomial) -> AbPolynomial {
        self.substitute(|l| match l {
            Ab::A => image_a.clone(),
            Ab::B => image_b.clone(),
        })
    }

    /// Exchanges the letters `a` and `b`.
    pub fn swap_ab(&self) -> AbPolynomial {
        let mut p = Self::zero();
        for (w, c) in &self.terms {
            p.add_term(Word(w.0.iter().map(|l| if *l == Ab::A { Ab::B } else { Ab::A }).collect()), c.clone());
        }
        p
    }

    /// `a + b`.
    pub fn c() -> AbPolynomial {
        Self::letter(Ab::A) + Self::letter(Ab::B)
    }
}

impl CdPolynomial {
    /// Parses text, e.g. `c^3 + 3*dc + 4*cd`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

/// Expands `c -> a+b`, `d -> ab+ba`.
pub fn expand_cd(p: &CdPolynomial) -> AbPolynomial {
    let a = AbPolynomial::letter(Ab::A);
    let b = AbPolynomial::letter(Ab::B);
    let c = &a + &b;
    let d = &(&a * &b) + &(&b * &a);
    p.substitute(|l| match l {
        Cd::C => c.clone(),
        Cd::D => d.clone(),
    })
}

fn expand_word(w: &Word<Cd>) -> AbPolynomial {
    expand_cd(&CdPolynomial::monomial(w.clone(), 1))
}

fn parse_lex_min(w: &Word<Ab>) -> Option<Word<Cd>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.0.len() {
        match w.0[i] {
            Ab::B => return None,
            Ab::A if i + 1 < w.0.len() && w.0[i + 1] == Ab::B => {
                out.push(Cd::D);
                i += 2;
            }
            Ab::A => {
                out.push(Cd::C);
                i += 1;
            }
        }
    }
    Some(Word(out))
}

/// Rewrites an ab-polynomial in `c = a+b`, `d = ab+ba` by triangular reduction on the
/// lexicographically least surviving word.
pub fn to_cd(p: &AbPolynomial) -> Result<CdPolynomial> {
    let mut residual = p.clone();
    let mut out = CdPolynomial::zero();
    while let Some((w, c)) = residual.terms.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        let cd = parse_lex_min(&w).ok_or_else(|| Error::NotCdExpressible(residual.to_string()))?;
        residual -= &expand_word(&cd).scale(&c);
        out.add_term(cd, c);
    }
    Ok(out)
}

/// Every cd-word of the given degree, in canonical order.
pub fn cd_words(degree: usize) -> Vec<Word<Cd>> {
    fn go(rest: usize, prefix: &mut Vec<Cd>, out: &mut Vec<Word<Cd>>) {
        if rest == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        prefix.push(Cd::C);
        go(rest - 1, prefix, out);
        prefix.pop();
        if rest >= 2 {
            prefix.push(Cd::D);
            go(rest - 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl<L: Letter> AddAssign<&NcPolynomial<L>> for NcPolynomial<L> {
    fn add_assign(&mut self, rhs: &NcPolynomial<L>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<L: Letter> SubAssign<&NcPolynomial<L>> for NcPolynomial<L> {
    fn sub_assign(&mut self, rhs: &NcPolynomial<L>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl<L: Letter> Add for &NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn add(self, rhs: Self) -> NcPolynomial<L> {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl<L: Letter> Sub for &NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn sub(self, rhs: Self) -> NcPolynomial<L> {
        let mut p = self.clone();
        p -= rhs;
        p
    }
}

impl<L: Letter> Add for NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn add(mut self, rhs: Self) -> NcPolynomial<L> {
        self += &rhs;
        self
    }
}

impl<L: Letter> Sub for NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn sub(mut self, rhs: Self) -> NcPolynomial<L> {
        self -= &rhs;
        self
    }
}

impl<L: Letter> Neg for &NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn neg(self) -> NcPolynomial<L> {
        self.scale(&BigInt::from(-1))
    }
}

impl<L: Letter> Mul for &NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn mul(self, rhs: Self) -> NcPolynomial<L> {
        let mut p = NcPolynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }
}

impl<L: Letter> Mul for NcPolynomial<L> {
    type Output = NcPolynomial<L>;
    fn mul(self, rhs: Self) -> NcPolynomial<L> {
        &self * &rhs
    }
}

impl<L: Letter> fmt::Display for NcPolynomial<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

/// Splits polynomial text into signed terms.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.ends_with('^') {
            if !current.is_empty() {
                out.push((negative, std::mem::take(&mut current)));
                negative = false;
            }
            negative ^= ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, current));
    Ok(out)
}

/// Splits a term into coefficient and the remaining factor text.
pub(crate) fn split_coefficient(term: &str) -> Result<(BigInt, String)> {
    let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() {
        return Ok((BigInt::one(), term.to_string()));
    }
    let k: BigInt = digits.parse().map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?;
    let rest = &term[digits.len()..];
    let rest = match rest.strip_prefix('*') {
        Some("") => return Err(Error::Parse(format!("missing word after `*` in `{term}`"))),
        Some(r) => r,
        None => rest,
    };
    Ok((k, if rest.is_empty() { "1".to_string() } else { rest.to_string() }))
}

impl<L: Letter> FromStr for NcPolynomial<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for (negative, term) in split_terms(s)? {
            let (k, rest) = split_coefficient(&term)?;
            let w: Word<L> = rest.parse()?;
            p.add_term(w, if negative { -k } else { k });
        }
        Ok(p)
    }
}

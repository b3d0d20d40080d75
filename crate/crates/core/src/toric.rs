//! Toric g- and h-polynomials, local h-polynomials of subdivisions, and the morphism pair
//! `(f, g)` from ab-polynomials to `Z[x]`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flag::local_index;
use crate::ncpoly::{
    coproduct_cd, expand_cd, kappa, kappa_cd, Ab, AbPolynomial, Cd, CdPolynomial, NcPolynomial, UniPolynomial, Word,
};
use crate::poset::{is_eulerian, is_lower_eulerian, GradedPoset};
use crate::subdivision::SubdivisionMap;

/// Direction of the intervals handled by [`interval_g_from`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Intervals `[root, y]`.
    Up,
    /// Duals of the intervals `[y, root]`.
    Down,
}

fn powers(n: usize) -> Vec<UniPolynomial> {
    let base = UniPolynomial::from_i64s(&[-1, 1]);
    let mut out = vec![UniPolynomial::one()];
    for k in 1..=n {
        out.push(&out[k - 1] * &base);
    }
    out
}

fn one_minus_x() -> UniPolynomial {
    UniPolynomial::from_i64s(&[1, -1])
}

/// g-polynomials of the closed intervals `[root, y]` (or the duals of `[y, root]`) for every
/// comparable `y`, by the recursion `g = U_{<= (r-1)/2}[(1 - x) sum_{z < y} g_z (x - 1)^{r-1-r(z)}]`
/// with `g = 1` at rank 0. Entries for incomparable elements are `None`.
pub fn interval_g_from(p: &GradedPoset, root: usize, dir: Direction) -> Result<Vec<Option<UniPolynomial>>> {
    let ranks = p.ranks().ok_or(Error::NotGraded)?;
    let in_range = |y: usize| match dir {
        Direction::Up => p.leq(root, y),
        Direction::Down => p.leq(y, root),
    };
    let dist = |y: usize| ranks[y].abs_diff(ranks[root]);
    let mut elems: Vec<usize> = (0..p.len()).filter(|&y| in_range(y)).collect();
    elems.sort_by_key(|&y| dist(y));
    let pw = powers(elems.last().map_or(0, |&y| dist(y)));
    let mut g: Vec<Option<UniPolynomial>> = vec![None; p.len()];
    for &y in &elems {
        let r = dist(y);
        if r == 0 {
            g[y] = Some(UniPolynomial::one());
            continue;
        }
        let mut s = UniPolynomial::zero();
        for &z in &elems {
            let between = match dir {
                Direction::Up => p.less(z, y),
                Direction::Down => p.less(y, z),
            };
            if between {
                let gz = g[z].as_ref().expect("smaller intervals come first");
                s = &s + &(gz * &pw[r - 1 - dist(z)]);
            }
        }
        g[y] = Some((&one_minus_x() * &s).truncate((r - 1) / 2));
    }
    Ok(g)
}

fn require_lower_eulerian(p: &GradedPoset) -> Result<usize> {
    let bottom = p.bottom().ok_or(Error::RequiresMin)?;
    if !is_lower_eulerian(p)? {
        return Err(Error::NotLowerEulerian);
    }
    Ok(bottom)
}

fn h_from_g(
    p: &GradedPoset,
    g: &[Option<UniPolynomial>],
    keep: impl Fn(usize) -> bool,
    n: usize,
) -> Result<UniPolynomial> {
    let pw = powers(n);
    let mut sum = UniPolynomial::zero();
    for y in (0..p.len()).filter(|&y| keep(y)) {
        if let Some(gy) = &g[y] {
            sum = &sum + &(gy * &pw[n - p.rank_of(y)]);
        }
    }
    sum.reverse(n)
}

/// h-polynomial of a lower Eulerian poset of rank `n`:
/// `x^n h(1/x) = sum_sigma g([bottom, sigma]) (x - 1)^(n - rho(sigma))`.
pub fn h_poly(p: &GradedPoset) -> Result<UniPolynomial> {
    let bottom = require_lower_eulerian(p)?;
    let n = p.rank().unwrap_or(0);
    let g = interval_g_from(p, bottom, Direction::Up)?;
    h_from_g(p, &g, |_| true, n)
}

/// g-polynomial of an Eulerian poset of rank `n`, from the first differences of the symmetric
/// toric h-polynomial up to degree `(n - 1) / 2`, checked against the defining identity
/// `x^n g(1/x) = sum_{sigma in P} g([bottom, sigma]) (x - 1)^(n - rho(sigma))`.
pub fn g_poly(p: &GradedPoset) -> Result<UniPolynomial> {
    let (bottom, top, n) = p.bounded_rank()?;
    if !is_eulerian(p)? {
        return Err(Error::NotEulerian);
    }
    if n == 0 {
        return Ok(UniPolynomial::one());
    }
    let h = h_poly(&p.without(top))?;
    if !h.is_palindromic(n - 1) {
        return Err(Error::IdentityViolated(format!("toric h-polynomial {h} is not palindromic")));
    }
    let g = UniPolynomial::new(
        (0..=(n - 1) / 2).map(|i| h.coeff(i) - if i == 0 { 0.into() } else { h.coeff(i - 1) }).collect(),
    );
    let recursive = interval_g_from(p, bottom, Direction::Up)?;
    if recursive[top].as_ref() != Some(&g) {
        return Err(Error::IdentityViolated(format!("g from differences {g} disagrees with the recursion")));
    }
    if g.reverse(n)? != h_from_g(p, &recursive, |_| true, n)?.reverse(n)? {
        return Err(Error::IdentityViolated(format!("g = {g} does not satisfy its defining identity")));
    }
    Ok(g)
}

/// `sum_{y < top} g([bottom, y]) (x - 1)^(n - 1 - rho(y))` for a graded poset with both bounds.
fn stanley_h(p: &GradedPoset) -> Result<UniPolynomial> {
    let (bottom, top, n) = p.bounded_rank()?;
    if n == 0 {
        return Err(Error::DomainError("toric h needs rank at least 1".into()));
    }
    let g = interval_g_from(p, bottom, Direction::Up)?;
    let pw = powers(n - 1);
    let mut sum = UniPolynomial::zero();
    for y in (0..p.len()).filter(|&y| y != top) {
        sum = &sum + &(g[y].as_ref().expect("every element is above the bottom") * &pw[n - 1 - p.rank_of(y)]);
    }
    Ok(sum)
}

/// Toric h-polynomial of a graded poset with both bounds.
///
/// Eulerian input: `h(P without top)`, asserted palindromic of degree `n - 1` and equal to the
/// unreversed sum `sum_{y < top} g([bottom, y]) (x - 1)^(n-1-rho(y))`. Other input: that sum.
pub fn toric_h(p: &GradedPoset) -> Result<UniPolynomial> {
    let (_, top, n) = p.bounded_rank()?;
    let stanley = stanley_h(p)?;
    if !is_eulerian(p)? {
        return Ok(stanley);
    }
    let h = h_poly(&p.without(top))?;
    if !h.is_palindromic(n - 1) || h != stanley {
        return Err(Error::IdentityViolated(format!("toric h {h} is not palindromic or differs from {stanley}")));
    }
    Ok(h)
}

/// Toric g-polynomial of a graded poset with both bounds, by the interval recursion.
pub fn toric_g(p: &GradedPoset) -> Result<UniPolynomial> {
    let (bottom, top, _) = p.bounded_rank()?;
    let g = interval_g_from(p, bottom, Direction::Up)?;
    Ok(g[top].clone().expect("top is above the bottom"))
}

/// Toric g- and h-polynomials of one poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPair {
    /// g-polynomial, degree below `rank / 2`.
    pub g: UniPolynomial,
    /// Toric h-polynomial.
    pub h: UniPolynomial,
    /// Rank of the poset.
    pub rank: usize,
}

/// Toric g and h of a graded poset with both bounds.
pub fn toric(p: &GradedPoset) -> Result<ToricPair> {
    let (_, _, rank) = p.bounded_rank()?;
    let g = if is_eulerian(p)? { g_poly(p)? } else { toric_g(p)? };
    Ok(ToricPair { g, h: toric_h(p)?, rank })
}

/// Memoized evaluation of the morphism pair `f, g`:
/// `f(w) = kappa(w) + sum g(w_(1)) kappa(w_(2))` over the letter-deletion coproduct and
/// `g(w) = U_{<= deg(w)/2}[(1 - x) f(w)]`.
#[derive(Clone, Debug, Default)]
pub struct Morphism {
    ab: HashMap<Word<Ab>, (UniPolynomial, UniPolynomial)>,
    cd: HashMap<Word<Cd>, (UniPolynomial, UniPolynomial)>,
}

impl Morphism {
    /// Empty memo tables.
    pub fn new() -> Self {
        Self::default()
    }

    fn ab_word(&mut self, w: &Word<Ab>) -> (UniPolynomial, UniPolynomial) {
        if let Some(v) = self.ab.get(w) {
            return v.clone();
        }
        let n = w.len();
        let mut f = kappa(&AbPolynomial::monomial(w.clone(), 1));
        for i in 0..n {
            if w.0[i + 1..].iter().all(|&l| l == Ab::A) {
                let (_, g) = self.ab_word(&Word(w.0[..i].to_vec()));
                f = &f + &(&g * &UniPolynomial::x_minus_one_pow(n - i - 1));
            }
        }
        let g = (&one_minus_x() * &f).truncate(n / 2);
        self.ab.insert(w.clone(), (f.clone(), g.clone()));
        (f, g)
    }

    fn cd_word(&mut self, w: &Word<Cd>) -> (UniPolynomial, UniPolynomial) {
        if let Some(v) = self.cd.get(w) {
            return v.clone();
        }
        let mono = CdPolynomial::monomial(w.clone(), 1);
        let mut f = kappa_cd(&mono);
        for ((u, v), k) in coproduct_cd(&mono).terms() {
            let right = kappa_cd(&CdPolynomial::monomial(v.clone(), 1));
            if right.is_zero() {
                continue;
            }
            let (_, g) = self.cd_word(u);
            f = &f + &(&(&g * &right) * &UniPolynomial::new(vec![k.clone()]));
        }
        let g = (&one_minus_x() * &f).truncate(w.degree() / 2);
        self.cd.insert(w.clone(), (f.clone(), g.clone()));
        (f, g)
    }

    fn linear<L: crate::ncpoly::Letter>(
        p: &NcPolynomial<L>,
        mut eval: impl FnMut(&Word<L>) -> UniPolynomial,
    ) -> UniPolynomial {
        let mut out = UniPolynomial::zero();
        for (w, k) in p.terms() {
            out = &out + &(&eval(w) * &UniPolynomial::new(vec![k.clone()]));
        }
        out
    }

    /// `f` on an ab-polynomial.
    pub fn f(&mut self, p: &AbPolynomial) -> UniPolynomial {
        Self::linear(p, |w| self.ab_word(w).0)
    }

    /// `g` on an ab-polynomial.
    pub fn g(&mut self, p: &AbPolynomial) -> UniPolynomial {
        Self::linear(p, |w| self.ab_word(w).1)
    }

    /// `f` evaluated directly on a cd-polynomial through the cd form of the coproduct.
    pub fn f_cd(&mut self, p: &CdPolynomial) -> UniPolynomial {
        Self::linear(p, |w| self.cd_word(w).0)
    }

    /// `g` evaluated directly on a cd-polynomial.
    pub fn g_cd(&mut self, p: &CdPolynomial) -> UniPolynomial {
        Self::linear(p, |w| self.cd_word(w).1)
    }
}

/// `f` on an ab-polynomial with a fresh memo table.
pub fn morphism_f(p: &AbPolynomial) -> UniPolynomial {
    Morphism::new().f(p)
}

/// `g` on an ab-polynomial with a fresh memo table.
pub fn morphism_g(p: &AbPolynomial) -> UniPolynomial {
    Morphism::new().g(p)
}

/// `f` on a cd-polynomial with a fresh memo table.
pub fn morphism_f_cd(p: &CdPolynomial) -> UniPolynomial {
    Morphism::new().f_cd(p)
}

/// `g` on a cd-polynomial with a fresh memo table.
pub fn morphism_g_cd(p: &CdPolynomial) -> UniPolynomial {
    Morphism::new().g_cd(p)
}

/// Local h-polynomial of one base element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHRow {
    /// Id of the base element.
    pub sigma: String,
    /// Rank of the base element.
    pub rank: usize,
    /// `l_sigma(Gamma_sigma, x)`.
    pub ell: UniPolynomial,
}

/// Local h-polynomials of every base element and the h-polynomial of the subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHTable {
    /// One row per base element, in base element order.
    pub rows: Vec<LocalHRow>,
    /// `h(Gamma, x) = sum_sigma l_sigma g([sigma, top])`.
    pub h: UniPolynomial,
}

/// Local h-polynomials of a validated strong formal subdivision of an Eulerian poset.
///
/// Every row is computed twice: by the explicit sum
/// `sum_{tau <= sigma} h(Gamma_tau) (-1)^(rho(sigma) - rho(tau)) g([tau, sigma]*)` and by solving
/// `h(Gamma_sigma) = sum_{tau <= sigma} l_tau g([tau, sigma])` upward; the two must agree.
pub fn local_h(m: &SubdivisionMap) -> Result<LocalHTable> {
    m.require_strong_formal()?;
    let (gamma, pi) = (m.source(), m.target());
    let (_, top, _) = pi.bounded_rank()?;
    let gamma_bottom = gamma.bottom().ok_or(Error::RequiresMin)?;
    let g_gamma = interval_g_from(gamma, gamma_bottom, Direction::Up)?;
    let h_gamma: Vec<UniPolynomial> = (0..pi.len())
        .map(|tau| h_from_g(gamma, &g_gamma, |y| pi.leq(m.carrier_of(y), tau), pi.rank_of(tau)))
        .collect::<Result<_>>()?;
    let g_up: Vec<Vec<Option<UniPolynomial>>> =
        (0..pi.len()).map(|tau| interval_g_from(pi, tau, Direction::Up)).collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..pi.len()).collect();
    order.sort_by_key(|&s| pi.rank_of(s));
    let mut recursive: Vec<Option<UniPolynomial>> = vec![None; pi.len()];
    for &sigma in &order {
        let mut ell = h_gamma[sigma].clone();
        for tau in (0..pi.len()).filter(|&t| pi.less(t, sigma)) {
            let lt = recursive[tau].as_ref().expect("lower faces come first");
            ell = &ell - &(lt * g_up[tau][sigma].as_ref().expect("tau is below sigma"));
        }
        recursive[sigma] = Some(ell);
    }
    let mut rows = Vec::with_capacity(pi.len());
    for (sigma, solved) in recursive.iter_mut().enumerate() {
        let g_down = interval_g_from(pi, sigma, Direction::Down)?;
        let mut explicit = UniPolynomial::zero();
        for tau in (0..pi.len()).filter(|&t| pi.leq(t, sigma)) {
            let term = &h_gamma[tau] * g_down[tau].as_ref().expect("tau is below sigma");
            explicit =
                if (pi.rank_of(sigma) - pi.rank_of(tau)) % 2 == 0 { &explicit + &term } else { &explicit - &term };
        }
        let ell = solved.take().expect("every row solved");
        if explicit != ell {
            return Err(Error::ConventionMismatch(format!(
                "local h of `{}`: explicit form gives {explicit}, recursion gives {ell}",
                pi.id(sigma)
            )));
        }
        rows.push(LocalHRow { sigma: pi.id(sigma).to_string(), rank: pi.rank_of(sigma), ell });
    }
    let mut total = UniPolynomial::zero();
    for (sigma, row) in rows.iter().enumerate() {
        total = &total + &(&row.ell * g_up[sigma][top].as_ref().expect("every element is below the top"));
    }
    if total != h_gamma[top] {
        return Err(Error::IdentityViolated(format!("local h rows sum to {total}, h is {}", h_gamma[top])));
    }
    Ok(LocalHTable { rows, h: total })
}

/// One base element of the local correspondence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceRow {
    /// Id of the base element.
    pub sigma: String,
    /// `f` applied to the local ab-index of the preimage ideal with a maximum adjoined.
    pub f_local: UniPolynomial,
    /// Local h-polynomial of the same element.
    pub local_h: UniPolynomial,
    /// `f` applied to the cd-index of `[sigma, top]`.
    pub f_upper: UniPolynomial,
    /// Toric h-polynomial of `[sigma, top]`.
    pub upper_h: UniPolynomial,
}

/// Result of the local correspondence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// One row per base element below the maximum.
    pub rows: Vec<CorrespondenceRow>,
    /// `sum_{sigma < top} l_sigma * toric_h([sigma, top))`.
    pub diagram_sum: UniPolynomial,
    /// Toric h-polynomial of the subdivision.
    pub source_h: UniPolynomial,
    /// True when every row and the diagram agree.
    pub holds: bool,
}

/// Checks that `f` sends each local ab-index below the maximum to the local h-polynomial, each upper cd-index to
/// the toric h of its interval, and that the images of the decomposition sum to the toric h of
/// the subdivision.
pub fn verify_local_correspondence(m: &SubdivisionMap) -> Result<CorrespondenceReport> {
    m.require_strong_eulerian()?;
    if !is_eulerian(m.source())? || !is_eulerian(m.target())? {
        return Err(Error::NotEulerian);
    }
    let table = local_h(m)?;
    let t = m.target();
    let (_, top, _) = t.bounded_rank()?;
    let rows = (0..t.len())
        .into_par_iter()
        .filter(|&sigma| sigma != top)
        .map(|sigma| {
            let local = local_index(&m.face_hat(sigma))?;
            let mut morphism = Morphism::new();
            let f_local = morphism.f(&local.ab);
            let upper = t.interval(sigma, top)?;
            let cd = crate::flag::cd_index(&upper)?;
            let (f_upper, upper_h) = (morphism.f(&expand_cd(&cd)), toric_h(&upper)?);
            Ok(CorrespondenceRow {
                sigma: t.id(sigma).to_string(),
                f_local,
                local_h: table.rows[sigma].ell.clone(),
                f_upper,
                upper_h,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut diagram_sum = UniPolynomial::zero();
    for row in &rows {
        diagram_sum = &diagram_sum + &(&row.local_h * &row.upper_h);
    }
    let source_h = toric_h(m.source())?;
    let holds = rows.iter().all(|r| r.f_local == r.local_h && r.f_upper == r.upper_h) && diagram_sum == source_h;
    Ok(CorrespondenceReport { rows, diagram_sum, source_h, holds })
}

//! Shelling verification and backtracking search for pure simplicial complexes.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{face_poset, SimplicialComplex};
use crate::error::{Error, Result};
use crate::flag::{cd_index, local_index};
use crate::ncpoly::{Cd, CdPolynomial};
use crate::poset::boundary;

/// Node budget of the shelling search.
pub const SHELLING_NODE_LIMIT: usize = 1_000_000;

/// Outcome of a shelling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    /// A shelling order, as facet vertex-id lists.
    Found(Vec<Vec<String>>),
    /// The search space was exhausted: no shelling exists.
    Exhausted,
    /// The node budget ran out before a decision.
    Cutoff,
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// True iff `facet` meets the union of `placed` in a pure complex of codimension one in `facet`.
fn attaches(facet: &[usize], placed: &[&Vec<usize>]) -> bool {
    if placed.is_empty() {
        return true;
    }
    let meets: Vec<Vec<usize>> = placed.iter().map(|p| intersection(facet, p)).collect();
    meets.iter().all(|m| {
        m.len() + 1 == facet.len() || meets.iter().any(|o| o.len() + 1 == facet.len() && super::is_subset(m, o))
    })
}

/// Checks the simplicial shelling criterion for a facet order given by vertex ids.
pub fn verify_shelling<S: AsRef<str>>(k: &SimplicialComplex, order: &[Vec<S>]) -> Result<bool> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let mut facets = Vec::with_capacity(order.len());
    for f in order {
        let face = k.find_face(f)?;
        if !k.facets().contains(&face) {
            return Ok(false);
        }
        facets.push(face);
    }
    let mut seen = facets.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != facets.len() || facets.len() != k.facets().len() {
        return Ok(false);
    }
    for j in 1..facets.len() {
        let placed: Vec<&Vec<usize>> = facets[..j].iter().collect();
        if !attaches(&facets[j], &placed) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Search<'a> {
    facets: &'a [Vec<usize>],
    nodes: usize,
    tie_order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, order: &mut Vec<usize>, used: &mut [bool]) -> Option<bool> {
        if order.len() == self.facets.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > SHELLING_NODE_LIMIT {
            return None;
        }
        let placed: Vec<&Vec<usize>> = order.iter().map(|&i| &self.facets[i]).collect();
        let mut candidates: Vec<(usize, usize)> = self
            .tie_order
            .iter()
            .copied()
            .filter(|&i| !used[i] && attaches(&self.facets[i], &placed))
            .map(|i| {
                let shared = placed
                    .iter()
                    .filter(|p| intersection(&self.facets[i], p).len() + 1 == self.facets[i].len())
                    .count();
                (i, shared)
            })
            .collect();
        candidates.sort_by_key(|c| std::cmp::Reverse(c.1));
        for (i, _) in candidates {
            used[i] = true;
            order.push(i);
            match self.extend(order, used) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            order.pop();
            used[i] = false;
        }
        Some(false)
    }
}

/// Backtracking search for a shelling, most-connected candidates first, ties broken by `seed`.
pub fn find_shelling(k: &SimplicialComplex, seed: u64) -> Result<ShellingSearch> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = k.facets();
    let mut tie_order: Vec<usize> = (0..facets.len()).collect();
    tie_order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut search = Search { facets, nodes: 0, tie_order };
    let mut order = Vec::new();
    let mut used = vec![false; facets.len()];
    Ok(match search.extend(&mut order, &mut used) {
        Some(true) => ShellingSearch::Found(order.iter().map(|&i| k.face_vertices(&facets[i])).collect()),
        Some(false) => ShellingSearch::Exhausted,
        None => ShellingSearch::Cutoff,
    })
}

/// Local cd-indices along a shelling: `before` and `after` adding a facet, and the predicted
/// increment `local(Gamma) * c + Phi(boundary of Gamma) * d` where `Gamma` is the intersection of
/// the new facet with the facets placed so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingStep {
    /// Number of facets placed before the step.
    pub placed: usize,
    /// Local cd-index of the placed facets with a maximum adjoined.
    pub before: CdPolynomial,
    /// Local cd-index after adding the next facet.
    pub after: CdPolynomial,
    /// `local(Gamma) * c + Phi(boundary of Gamma) * d`.
    pub predicted: CdPolynomial,
}

impl ShellingStep {
    /// True iff the observed increment equals the predicted one.
    pub fn holds(&self) -> bool {
        &self.after - &self.before == self.predicted
    }
}

/// Steps `i -> i + 1` for `1 <= i <= k - 2` along a verified shelling of a sphere with `k` facets.
pub fn shelling_steps<S: AsRef<str>>(k: &SimplicialComplex, order: &[Vec<S>]) -> Result<Vec<ShellingStep>> {
    if !verify_shelling(k, order)? {
        return Err(Error::DomainError("facet order is not a shelling".into()));
    }
    let facets: Vec<Vec<usize>> = order.iter().map(|f| k.find_face(f)).collect::<Result<_>>()?;
    let ids = |fs: &[Vec<usize>]| -> Vec<Vec<String>> { fs.iter().map(|f| k.face_vertices(f)).collect() };
    let local = |fs: &[Vec<usize>]| -> Result<CdPolynomial> {
        Ok(local_index(&face_poset(&SimplicialComplex::new(&ids(fs))?, true))?.cd)
    };
    let c = CdPolynomial::letter(Cd::C);
    let d = CdPolynomial::letter(Cd::D);
    let mut steps = Vec::new();
    for i in 1..facets.len().saturating_sub(1) {
        let meets: Vec<Vec<usize>> = facets[..i].iter().map(|p| intersection(&facets[i], p)).collect();
        let gamma = face_poset(&SimplicialComplex::new(&ids(&meets))?, true);
        let predicted = &(&local_index(&gamma)?.cd * &c) + &(&cd_index(&boundary(&gamma)?)? * &d);
        steps.push(ShellingStep { placed: i, before: local(&facets[..i])?, after: local(&facets[..=i])?, predicted });
    }
    Ok(steps)
}

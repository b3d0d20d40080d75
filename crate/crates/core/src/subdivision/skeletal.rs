//! Skeletal posets interpolating between the base and the subdivision, with skeletal maps.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::SubdivisionMap;
use crate::error::{Error, Result};
use crate::flag::{flag_polynomial, local_index};
use crate::ncpoly::AbPolynomial;
use crate::poset::{is_near_eulerian, GradedPoset};

/// Where an element of a skeletal poset comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    /// A base element, by target index.
    Old(usize),
    /// A subdivision element, by source index.
    New(usize),
}

/// Classification of a flag of a skeletal poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagClass {
    /// Every element is a base element.
    Old,
    /// Every element is a subdivision element; `switch` is the carrier rank of the last one.
    New {
        /// Rank of the carrier of the largest subdivision element.
        switch: usize,
    },
    /// Subdivision elements followed by base elements.
    Mixed {
        /// Rank of the carrier of the largest subdivision element.
        switch: usize,
    },
}

/// The skeletal posets `Pi_0, ..., Pi_n` of a subdivision map and the maps `phi_i: Pi_{i+1} -> Pi_i`.
#[derive(Clone, Debug)]
pub struct SkeletalFamily {
    map: SubdivisionMap,
    levels: Vec<GradedPoset>,
    origins: Vec<Vec<Origin>>,
    lookup: Vec<HashMap<Origin, usize>>,
    maps: Vec<Vec<usize>>,
}

impl SkeletalFamily {
    /// Builds the family of a validated strong Eulerian map onto a poset with a maximum.
    ///
    /// The source need not have a maximum, so restrictions to faces are accepted.
    pub fn new(map: &SubdivisionMap) -> Result<Self> {
        map.require_strong_eulerian()?;
        Self::new_unchecked(map)
    }

    /// Builds the family without validating the map; telescoping checks then detect violations.
    pub fn new_unchecked(map: &SubdivisionMap) -> Result<Self> {
        let (s, t) = (map.source(), map.target());
        let (_, _, n) = t.bounded_rank()?;
        if !s.is_graded() || s.rank() != Some(n) {
            return Err(Error::InvalidSubdivision("source and target ranks differ".into()));
        }
        let mut levels = Vec::with_capacity(n + 1);
        let mut origins = Vec::with_capacity(n + 1);
        let mut lookup: Vec<HashMap<Origin, usize>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut elems: Vec<Origin> =
                (0..s.len()).filter(|&x| t.rank_of(map.carrier_of(x)) <= i).map(Origin::New).collect();
            elems.extend((0..t.len()).filter(|&y| t.rank_of(y) > i).map(Origin::Old));
            let poset = build_level(map, &elems)?;
            if !poset.is_graded() || poset.rank() != Some(n) {
                return Err(Error::InvalidSubdivision(format!("skeletal poset {i} is not graded of rank {n}")));
            }
            lookup.push(elems.iter().enumerate().map(|(k, &o)| (o, k)).collect());
            levels.push(poset);
            origins.push(elems);
        }
        let mut maps = Vec::with_capacity(n);
        for i in 0..n {
            let image = origins[i + 1]
                .iter()
                .map(|&o| {
                    let o = match o {
                        Origin::New(x) if t.rank_of(map.carrier_of(x)) == i + 1 => Origin::Old(map.carrier_of(x)),
                        other => other,
                    };
                    lookup[i][&o]
                })
                .collect();
            maps.push(image);
        }
        let family = Self { map: map.clone(), levels, origins, lookup, maps };
        family.check_composition()?;
        Ok(family)
    }

    fn check_composition(&self) -> Result<()> {
        let n = self.maps.len();
        for x in 0..self.map.source().len() {
            let mut e = self.lookup[n][&Origin::New(x)];
            for i in (0..n).rev() {
                e = self.maps[i][e];
            }
            let reached = match self.origins[0][e] {
                Origin::Old(y) => y,
                Origin::New(z) => self.map.carrier_of(z),
            };
            if reached != self.map.carrier_of(x) {
                return Err(Error::IdentityViolated(format!(
                    "composite of skeletal maps sends `{}` to `{}`, carrier is `{}`",
                    self.map.source().id(x),
                    self.map.target().id(reached),
                    self.map.target().id(self.map.carrier_of(x))
                )));
            }
        }
        Ok(())
    }

    /// The map this family decomposes.
    pub fn map(&self) -> &SubdivisionMap {
        &self.map
    }

    /// Rank `n` of the posets.
    pub fn n(&self) -> usize {
        self.maps.len()
    }

    /// The skeletal poset `Pi_i`.
    pub fn level(&self, i: usize) -> &GradedPoset {
        &self.levels[i]
    }

    /// All skeletal posets, `Pi_0` first.
    pub fn levels(&self) -> &[GradedPoset] {
        &self.levels
    }

    /// Origin of every element of `Pi_i`.
    pub fn origins(&self, i: usize) -> &[Origin] {
        &self.origins[i]
    }

    /// The skeletal map `phi_i: Pi_{i+1} -> Pi_i` as an index table.
    pub fn skeletal_map(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    /// Classifies a chain of `Pi_i` given by element indices.
    pub fn classify_flag(&self, i: usize, chain: &[usize]) -> Result<FlagClass> {
        let p = self.levels.get(i).ok_or_else(|| Error::InvalidChain(format!("no skeletal poset {i}")))?;
        if chain.iter().any(|&x| x >= p.len()) || chain.windows(2).any(|w| !p.less(w[0], w[1])) {
            return Err(Error::InvalidChain(format!("not a chain of skeletal poset {i}")));
        }
        let t = self.map.target();
        let last_new = chain.iter().rev().find_map(|&x| match self.origins[i][x] {
            Origin::New(s) => Some(s),
            Origin::Old(_) => None,
        });
        Ok(match last_new {
            None => FlagClass::Old,
            Some(s) => {
                let switch = t.rank_of(self.map.carrier_of(s));
                if chain.iter().all(|&x| matches!(self.origins[i][x], Origin::New(_))) {
                    FlagClass::New { switch }
                } else {
                    FlagClass::Mixed { switch }
                }
            }
        })
    }

    /// Classifies a chain of `Pi_i` given by element ids.
    pub fn classify_flag_ids<S: AsRef<str>>(&self, i: usize, chain: &[S]) -> Result<FlagClass> {
        let p = self.levels.get(i).ok_or_else(|| Error::InvalidChain(format!("no skeletal poset {i}")))?;
        let idx = chain
            .iter()
            .map(|id| {
                p.index_of(id.as_ref()).ok_or_else(|| Error::InvalidChain(format!("`{}` not in poset", id.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.classify_flag(i, &idx)
    }

    /// Both sides of `Upsilon(Pi_i) - Upsilon(Pi_{i-1}) = sum_{rho(sigma) = i} localflag(sigma hat) * Upsilon([sigma, top])`.
    ///
    /// Returns `None` for the right side when some `sigma hat` of rank `i` is not near-Eulerian.
    pub fn telescoping_sides(&self, i: usize) -> Result<(AbPolynomial, Option<AbPolynomial>)> {
        if i == 0 || i > self.n() {
            return Err(Error::DomainError(format!("telescoping index must be in 1..={}, got {i}", self.n())));
        }
        let lhs = &flag_polynomial(&self.levels[i])? - &flag_polynomial(&self.levels[i - 1])?;
        let t = self.map.target();
        let (_, top, _) = t.bounded_rank()?;
        let mut rhs = AbPolynomial::zero();
        for sigma in (0..t.len()).filter(|&y| t.rank_of(y) == i && y != top) {
            let hat = self.map.face_hat(sigma);
            if !is_near_eulerian(&hat) {
                return Ok((lhs, None));
            }
            let local = match local_index(&hat) {
                Ok(l) => l,
                Err(Error::IdentityViolated(_)) | Err(Error::NotNearEulerian) => return Ok((lhs, None)),
                Err(e) => return Err(e),
            };
            rhs += &(&local.flag * &flag_polynomial(&t.interval(sigma, top)?)?);
        }
        Ok((lhs, Some(rhs)))
    }

    /// True iff the rank-`i` telescoping identity holds.
    pub fn verify_rank_telescoping(&self, i: usize) -> Result<bool> {
        let (lhs, rhs) = self.telescoping_sides(i)?;
        Ok(rhs.is_some_and(|r| r == lhs))
    }
}

fn build_level(map: &SubdivisionMap, elems: &[Origin]) -> Result<GradedPoset> {
    let (s, t) = (map.source(), map.target());
    let less = |a: Origin, b: Origin| match (a, b) {
        (Origin::New(x), Origin::New(y)) => s.less(x, y),
        (Origin::Old(x), Origin::Old(y)) => t.less(x, y),
        (Origin::New(x), Origin::Old(y)) => t.leq(map.carrier_of(x), y),
        (Origin::Old(_), Origin::New(_)) => false,
    };
    let old_ids: std::collections::HashSet<&str> =
        elems.iter().filter_map(|o| if let Origin::Old(y) = o { Some(t.id(*y)) } else { None }).collect();
    let ids: Vec<String> = elems
        .iter()
        .map(|&o| match o {
            Origin::Old(y) => t.id(y).to_string(),
            Origin::New(x) if old_ids.contains(s.id(x)) => format!("new:{}", s.id(x)),
            Origin::New(x) => s.id(x).to_string(),
        })
        .collect();
    let above = elems
        .iter()
        .map(|&a| {
            let mut set = FixedBitSet::with_capacity(elems.len());
            for (k, &b) in elems.iter().enumerate() {
                if less(a, b) {
                    set.insert(k);
                }
            }
            set
        })
        .collect();
    GradedPoset::from_above(ids, above)
}

/// Builds the skeletal family of a validated strong Eulerian map.
pub fn skeletal_family(map: &SubdivisionMap) -> Result<SkeletalFamily> {
    SkeletalFamily::new(map)
}

//! Finite posets stored as cover relations with cached reachability, rank function and bounds.

mod iso;
mod ops;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use iso::is_isomorphic;
pub use ops::{
    adjoin_max, boolean_algebra, boundary, chain_poset, dual, is_eulerian, is_lattice, is_lower_eulerian,
    is_near_eulerian, join, lattice_join, lattice_meet, pyramid, semisuspension, suspension,
};

/// A finite poset with its cover relation, order closure and (when it exists) rank function.
///
/// Elements are addressed by index `0..len()`; every element also carries a unique string id.
/// Values are immutable after construction.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    rank: Option<Vec<usize>>,
    graded: bool,
    bottom: Option<usize>,
    top: Option<usize>,
}

/// A strictly increasing sequence of element indices.
pub type Chain = Vec<usize>;

/// Builds a poset from element ids and generating relations `(lower, upper)`.
///
/// The relations need not be exactly the covers: the order is their transitive closure and
/// the stored covers are recomputed from it. Gradedness is detected and recorded, never required.
pub fn build_poset<S: AsRef<str>, T: AsRef<str>>(elements: &[S], covers: &[(T, T)]) -> Result<GradedPoset> {
    let ids: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicateId(id.clone()));
        }
    }
    let mut succ = vec![Vec::new(); ids.len()];
    for (lo, hi) in covers {
        let l = *index.get(lo.as_ref()).ok_or_else(|| Error::UnknownId(lo.as_ref().to_string()))?;
        let h = *index.get(hi.as_ref()).ok_or_else(|| Error::UnknownId(hi.as_ref().to_string()))?;
        succ[l].push(h);
    }
    GradedPoset::from_successors(ids, &succ)
}

impl GradedPoset {
    /// Builds a poset from ids and successor lists whose transitive closure is the order.
    pub(crate) fn from_successors(ids: Vec<String>, succ: &[Vec<usize>]) -> Result<Self> {
        let n = ids.len();
        let mut indeg = vec![0usize; n];
        for s in succ {
            for &t in s {
                indeg[t] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(Error::CycleDetected);
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            for &y in &succ[x] {
                set.insert(y);
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        Self::from_above(ids, above)
    }

    /// Builds a poset from ids and strict upper sets (`above[x]` holds every `y > x`).
    ///
    /// The upper sets must already be transitively closed.
    pub(crate) fn from_above(ids: Vec<String>, above: Vec<FixedBitSet>) -> Result<Self> {
        let n = ids.len();
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (x, up) in above.iter().enumerate() {
            if up.contains(x) {
                return Err(Error::CycleDetected);
            }
            for y in up.ones() {
                below[y].insert(x);
            }
        }
        for x in 0..n {
            if !above[x].is_disjoint(&below[x]) {
                return Err(Error::CycleDetected);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in above[x].ones() {
                if above[x].is_disjoint(&below[y]) {
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| below[x].count_ones(..));
        let mut r = vec![0usize; n];
        for &y in &order {
            r[y] = lower_covers[y].iter().map(|&x| r[x] + 1).max().unwrap_or(0);
        }
        let ranked = (0..n).all(|x| upper_covers[x].iter().all(|&y| r[y] == r[x] + 1));
        let maximal_ranks: Vec<usize> = (0..n).filter(|&x| upper_covers[x].is_empty()).map(|x| r[x]).collect();
        let graded = ranked && n > 0 && maximal_ranks.iter().all(|&m| m == maximal_ranks[0]);
        let bottom = (0..n).find(|&x| above[x].count_ones(..) + 1 == n);
        let top = (0..n).find(|&x| below[x].count_ones(..) + 1 == n);
        Ok(Self {
            ids,
            index,
            above,
            below,
            upper_covers,
            lower_covers,
            rank: ranked.then_some(r),
            graded,
            bottom,
            top,
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// True when the poset has no elements.
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Element ids in index order.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// Id of element `x`.
    pub fn id(&self, x: usize) -> &str {
        &self.ids[x]
    }

    /// Index of the element with the given id.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Index of the element with the given id, or `UnknownId`.
    pub fn element(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Strict order test `x < y`.
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Order test `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    /// Strict upper set of `x`.
    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Strict lower set of `x`.
    pub fn below(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// All cover pairs `(lower, upper)`.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper_covers.iter().enumerate().flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    /// True when a rank function exists: minimal elements have rank 0 and covers raise rank by one.
    pub fn is_ranked(&self) -> bool {
        self.rank.is_some()
    }

    /// True when ranked and every maximal element has the same rank.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Rank function, when it exists.
    pub fn ranks(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    /// Rank of `x`.
    ///
    /// # Panics
    /// If the poset is not ranked.
    pub fn rank_of(&self, x: usize) -> usize {
        self.rank.as_ref().expect("poset is not ranked")[x]
    }

    /// Largest rank of an element, when ranked.
    pub fn rank(&self) -> Option<usize> {
        self.rank.as_ref().map(|r| r.iter().copied().max().unwrap_or(0))
    }

    /// Minimum element, if any.
    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// Maximum element, if any.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// Elements grouped by rank.
    pub fn levels(&self) -> Result<Vec<Vec<usize>>> {
        let r = self.rank.as_ref().ok_or(Error::NotGraded)?;
        let mut levels = vec![Vec::new(); self.rank().unwrap_or(0) + 1];
        for (x, &k) in r.iter().enumerate() {
            levels[k].push(x);
        }
        Ok(levels)
    }

    /// Returns `(bottom, top, rank)` for a graded poset with both bounds.
    pub fn bounded_rank(&self) -> Result<(usize, usize, usize)> {
        if !self.graded {
            return Err(Error::NotGraded);
        }
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t, self.rank_of(t))),
            _ => Err(Error::RequiresBounds),
        }
    }

    /// Subposet induced on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> GradedPoset {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            pos[x] = i;
        }
        let above = keep
            .iter()
            .map(|&x| {
                let mut set = FixedBitSet::with_capacity(keep.len());
                for y in self.above[x].ones() {
                    if pos[y] != usize::MAX {
                        set.insert(pos[y]);
                    }
                }
                set
            })
            .collect();
        let ids = keep.iter().map(|&x| self.ids[x].clone()).collect();
        Self::from_above(ids, above).expect("induced subposet of a valid poset")
    }

    /// Closed interval `[lo, hi]` as a poset.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<GradedPoset> {
        if !self.leq(lo, hi) {
            return Err(Error::DomainError(format!("`{}` is not below `{}`", self.ids[lo], self.ids[hi])));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&z| self.leq(lo, z) && self.leq(z, hi)).collect();
        Ok(self.induced(&keep))
    }

    /// Principal order ideal `{z : z <= x}`.
    pub fn ideal(&self, x: usize) -> GradedPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&z| self.leq(z, x)).collect();
        self.induced(&keep)
    }

    /// Principal filter `{z : z >= x}`.
    pub fn filter(&self, x: usize) -> GradedPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&z| self.leq(x, z)).collect();
        self.induced(&keep)
    }

    /// Poset with element `x` removed.
    pub fn without(&self, x: usize) -> GradedPoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&z| z != x).collect();
        self.induced(&keep)
    }

    /// An id not used by any element, derived from `base`.
    pub fn fresh_id(&self, base: &str) -> String {
        let mut id = base.to_string();
        while self.index.contains_key(&id) {
            id.push('\'');
        }
        id
    }

    /// Every nondegenerate chain (no bottom, no top), the empty chain first.
    pub fn enumerate_chains(&self) -> Result<ChainIter<'_>> {
        let (bottom, top) = match (self.bottom, self.top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(Error::RequiresBounds),
        };
        Ok(ChainIter { poset: self, bottom, top, stack: vec![Vec::new()] })
    }

    /// Maximal chains of the open interval between bottom and top, as saturated cover paths.
    pub fn maximal_chains(&self) -> Result<Vec<Chain>> {
        let (bottom, top) = match (self.bottom, self.top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(Error::RequiresBounds),
        };
        let mut out = Vec::new();
        let mut stack: Vec<Chain> = vec![Vec::new()];
        while let Some(chain) = stack.pop() {
            let last = chain.last().copied().unwrap_or(bottom);
            let next: Vec<usize> = self.upper_covers[last].iter().copied().filter(|&y| y != top).collect();
            if next.is_empty() {
                if last == bottom && bottom == top {
                    continue;
                }
                out.push(chain);
                continue;
            }
            for &y in next.iter().rev() {
                let mut c = chain.clone();
                c.push(y);
                stack.push(c);
            }
        }
        Ok(out)
    }
}

/// Depth-first iterator over nondegenerate chains.
pub struct ChainIter<'a> {
    poset: &'a GradedPoset,
    bottom: usize,
    top: usize,
    stack: Vec<Chain>,
}

impl Iterator for ChainIter<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        let chain = self.stack.pop()?;
        let p = self.poset;
        let candidates: Vec<usize> = match chain.last() {
            Some(&last) => p.above[last].ones().filter(|&y| y != self.top).collect(),
            None => (0..p.len()).filter(|&y| y != self.top && y != self.bottom).collect(),
        };
        for &y in candidates.iter().rev() {
            let mut c = chain.clone();
            c.push(y);
            self.stack.push(c);
        }
        Some(chain)
    }
}

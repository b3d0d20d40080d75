//! Structural predicates and constructive operators on posets.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::GradedPoset;
use crate::error::{Error, Result};

/// Boolean algebra of subsets of `{1..n}`, ids in set notation such as `{1,3}`.
pub fn boolean_algebra(n: usize) -> GradedPoset {
    let size = 1usize << n;
    let ids: Vec<String> = (0..size)
        .map(|mask| {
            let parts: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let succ: Vec<Vec<usize>> =
        (0..size).map(|mask| (0..n).filter(|i| mask >> i & 1 == 0).map(|i| mask | 1 << i).collect()).collect();
    GradedPoset::from_successors(ids, &succ).expect("boolean algebra")
}

/// Chain `0 < 1 < ... < n` of rank `n`.
pub fn chain_poset(n: usize) -> GradedPoset {
    let ids: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let succ: Vec<Vec<usize>> = (0..=n).map(|i| if i < n { vec![i + 1] } else { vec![] }).collect();
    GradedPoset::from_successors(ids, &succ).expect("chain")
}

/// Adjoins a new maximum element above every element.
pub fn adjoin_max(p: &GradedPoset) -> GradedPoset {
    let n = p.len();
    let mut ids = p.ids().to_vec();
    ids.push(p.fresh_id("top"));
    let mut above: Vec<FixedBitSet> = (0..n)
        .map(|x| {
            let mut s = p.above(x).clone();
            s.grow(n + 1);
            s.insert(n);
            s
        })
        .collect();
    above.push(FixedBitSet::with_capacity(n + 1));
    GradedPoset::from_above(ids, above).expect("adjoining a maximum keeps the order acyclic")
}

/// Order dual: same ids, reversed order.
pub fn dual(p: &GradedPoset) -> GradedPoset {
    let above = (0..p.len()).map(|x| p.below(x).clone()).collect();
    GradedPoset::from_above(p.ids().to_vec(), above).expect("dual of a valid poset")
}

fn disjoint_ids(left: &[String], right: &[String]) -> (Vec<String>, Vec<String>) {
    let seen: HashSet<&String> = left.iter().collect();
    if right.iter().any(|id| seen.contains(id)) {
        (left.iter().map(|id| format!("p:{id}")).collect(), right.iter().map(|id| format!("q:{id}")).collect())
    } else {
        (left.to_vec(), right.to_vec())
    }
}

/// Join `P * Q`: `P` without its maximum below `Q` without its minimum.
pub fn join(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset> {
    let p_top = p.top().ok_or(Error::RequiresBounds)?;
    let q_bottom = q.bottom().ok_or(Error::RequiresBounds)?;
    let left: Vec<usize> = (0..p.len()).filter(|&x| x != p_top).collect();
    let right: Vec<usize> = (0..q.len()).filter(|&x| x != q_bottom).collect();
    let (lids, rids) = disjoint_ids(
        &left.iter().map(|&x| p.id(x).to_string()).collect::<Vec<_>>(),
        &right.iter().map(|&x| q.id(x).to_string()).collect::<Vec<_>>(),
    );
    let total = left.len() + right.len();
    let mut above = Vec::with_capacity(total);
    for &x in &left {
        let mut s = FixedBitSet::with_capacity(total);
        for (i, &y) in left.iter().enumerate() {
            if p.less(x, y) {
                s.insert(i);
            }
        }
        s.insert_range(left.len()..total);
        above.push(s);
    }
    for &x in &right {
        let mut s = FixedBitSet::with_capacity(total);
        for (i, &y) in right.iter().enumerate() {
            if q.less(x, y) {
                s.insert(left.len() + i);
            }
        }
        above.push(s);
    }
    let mut ids = lids;
    ids.extend(rids);
    GradedPoset::from_above(ids, above)
}

/// Suspension `P * B_2`.
pub fn suspension(p: &GradedPoset) -> Result<GradedPoset> {
    if p.bottom().is_none() || p.top().is_none() {
        return Err(Error::RequiresBounds);
    }
    join(p, &boolean_algebra(2))
}

/// Pyramid `P x {0,1}` with rank `rank(x) + a`; ids `(x,0)` and `(x,1)`.
pub fn pyramid(p: &GradedPoset) -> Result<GradedPoset> {
    if !p.is_graded() {
        return Err(Error::NotGraded);
    }
    let n = p.len();
    let mut ids = Vec::with_capacity(2 * n);
    for a in 0..2 {
        for x in 0..n {
            ids.push(format!("({},{a})", p.id(x)));
        }
    }
    let mut succ = vec![Vec::new(); 2 * n];
    for (x, y) in p.covers() {
        succ[x].push(y);
        succ[n + x].push(n + y);
    }
    for (x, s) in succ.iter_mut().take(n).enumerate() {
        s.push(n + x);
    }
    GradedPoset::from_successors(ids, &succ)
}

fn parity_sets(p: &GradedPoset) -> FixedBitSet {
    let mut even = FixedBitSet::with_capacity(p.len());
    for x in 0..p.len() {
        if p.rank_of(x).is_multiple_of(2) {
            even.insert(x);
        }
    }
    even
}

fn intervals_balanced(p: &GradedPoset) -> bool {
    let even = parity_sets(p);
    for s in 0..p.len() {
        for t in p.above(s).ones() {
            let mut interval = p.above(s).clone();
            interval.intersect_with(p.below(t));
            interval.insert(s);
            interval.insert(t);
            let size = interval.count_ones(..);
            if 2 * interval.intersection_count(&even) != size {
                return false;
            }
        }
    }
    true
}

/// True iff every interval `[s,t]` with `s < t` has equally many elements of even and odd rank.
pub fn is_eulerian(p: &GradedPoset) -> Result<bool> {
    if p.bottom().is_none() || p.top().is_none() {
        return Err(Error::RequiresBounds);
    }
    if !p.is_graded() {
        return Ok(false);
    }
    Ok(intervals_balanced(p))
}

/// True iff the poset has a minimum and every interval is Eulerian.
pub fn is_lower_eulerian(p: &GradedPoset) -> Result<bool> {
    if p.bottom().is_none() {
        return Err(Error::RequiresMin);
    }
    if !p.is_ranked() {
        return Err(Error::NotGraded);
    }
    Ok(intervals_balanced(p))
}

/// Adds a coatom covering every `y` with `|[y, top]| = 3` and checks the result is Eulerian.
pub fn semisuspension(p: &GradedPoset) -> Result<GradedPoset> {
    let (_, top, rank) = p.bounded_rank()?;
    if rank < 2 {
        return Err(Error::NotNearEulerian);
    }
    let targets: Vec<usize> = (0..p.len()).filter(|&y| p.above(y).count_ones(..) == 2).collect();
    if targets.is_empty() {
        return Err(Error::NotNearEulerian);
    }
    let n = p.len();
    let mut ids = p.ids().to_vec();
    ids.push(p.fresh_id("tau"));
    let mut succ: Vec<Vec<usize>> = (0..n).map(|x| p.upper_covers(x).to_vec()).collect();
    for &y in &targets {
        succ[y].push(n);
    }
    succ.push(vec![top]);
    let q = GradedPoset::from_successors(ids, &succ)?;
    if q.bounded_rank().map(|(_, _, r)| r) != Ok(rank) || !is_eulerian(&q)? {
        return Err(Error::NotNearEulerian);
    }
    Ok(q)
}

/// True iff `p` is near-Eulerian.
///
/// The two-element chain counts as near-Eulerian (it adjoins a maximum to the one-element
/// poset); otherwise the semisuspension must exist and be Eulerian.
pub fn is_near_eulerian(p: &GradedPoset) -> bool {
    if p.bounded_rank().map(|(_, _, r)| r) == Ok(1) {
        return true;
    }
    semisuspension(p).is_ok()
}

/// Boundary poset.
///
/// For Eulerian `p` this is `p` without its maximum. For near-Eulerian `p` it is the set of
/// elements below the coatom added by the semisuspension, together with the maximum of `p`.
pub fn boundary(p: &GradedPoset) -> Result<GradedPoset> {
    let (_, top, _) = p.bounded_rank()?;
    if is_eulerian(p)? {
        return Ok(p.without(top));
    }
    let q = semisuspension(p)?;
    let tau = p.len();
    let keep: Vec<usize> = (0..p.len()).filter(|&x| q.less(x, tau) || x == top).collect();
    Ok(p.induced(&keep))
}

fn least_in(p: &GradedPoset, set: &FixedBitSet, upward: bool) -> Option<usize> {
    set.ones().find(|&z| {
        let cone = if upward { p.above(z) } else { p.below(z) };
        set.ones().all(|w| w == z || cone.contains(w))
    })
}

fn upper_bounds(p: &GradedPoset, x: usize, y: usize) -> FixedBitSet {
    let mut a = p.above(x).clone();
    a.insert(x);
    let mut b = p.above(y).clone();
    b.insert(y);
    a.intersect_with(&b);
    a
}

fn lower_bounds(p: &GradedPoset, x: usize, y: usize) -> FixedBitSet {
    let mut a = p.below(x).clone();
    a.insert(x);
    let mut b = p.below(y).clone();
    b.insert(y);
    a.intersect_with(&b);
    a
}

/// Least upper bound of `x` and `y`.
pub fn lattice_join(p: &GradedPoset, x: usize, y: usize) -> Result<usize> {
    least_in(p, &upper_bounds(p, x, y), true).ok_or_else(|| Error::NotALattice(p.id(x).into(), p.id(y).into()))
}

/// Greatest lower bound of `x` and `y`.
pub fn lattice_meet(p: &GradedPoset, x: usize, y: usize) -> Result<usize> {
    least_in(p, &lower_bounds(p, x, y), false).ok_or_else(|| Error::NotALattice(p.id(x).into(), p.id(y).into()))
}

/// True iff every pair has a join and a meet.
pub fn is_lattice(p: &GradedPoset) -> Result<bool> {
    if p.bottom().is_none() || p.top().is_none() {
        return Err(Error::RequiresBounds);
    }
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            if lattice_join(p, x, y).is_err() || lattice_meet(p, x, y).is_err() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

//! Poset isomorphism for small instances: colour refinement followed by backtracking.

use std::collections::HashMap;

use super::GradedPoset;

fn refine(p: &GradedPoset, q: &GradedPoset) -> Option<(Vec<usize>, Vec<usize>)> {
    let initial = |g: &GradedPoset, x: usize| {
        vec![g.below(x).count_ones(..), g.above(x).count_ones(..), g.upper_covers(x).len(), g.lower_covers(x).len()]
    };
    let mut table: HashMap<Vec<usize>, usize> = HashMap::new();
    let colour = |key: Vec<usize>, table: &mut HashMap<Vec<usize>, usize>| {
        let next = table.len();
        *table.entry(key).or_insert(next)
    };
    let mut cp: Vec<usize> = (0..p.len()).map(|x| colour(initial(p, x), &mut table)).collect();
    let mut cq: Vec<usize> = (0..q.len()).map(|x| colour(initial(q, x), &mut table)).collect();
    loop {
        let classes = |c: &[usize]| {
            let mut v = c.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        let before = classes(&cp) + classes(&cq);
        let signature = |g: &GradedPoset, c: &[usize], x: usize| {
            let mut up: Vec<usize> = g.upper_covers(x).iter().map(|&y| c[y]).collect();
            let mut down: Vec<usize> = g.lower_covers(x).iter().map(|&y| c[y]).collect();
            up.sort_unstable();
            down.sort_unstable();
            let mut key = vec![c[x], usize::MAX];
            key.extend(up);
            key.push(usize::MAX);
            key.extend(down);
            key
        };
        let mut table2: HashMap<Vec<usize>, usize> = HashMap::new();
        let np: Vec<usize> = (0..p.len()).map(|x| colour(signature(p, &cp, x), &mut table2)).collect();
        let nq: Vec<usize> = (0..q.len()).map(|x| colour(signature(q, &cq, x), &mut table2)).collect();
        cp = np;
        cq = nq;
        let mut hp = cp.clone();
        let mut hq = cq.clone();
        hp.sort_unstable();
        hq.sort_unstable();
        if hp != hq {
            return None;
        }
        if classes(&cp) + classes(&cq) == before {
            return Some((cp, cq));
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &GradedPoset,
    q: &GradedPoset,
    order: &[usize],
    cp: &[usize],
    cq: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..q.len() {
        if used[y] || cq[y] != cp[x] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = map[u];
            p.less(u, x) == q.less(v, y) && p.less(x, u) == q.less(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(p, q, order, cp, cq, map, used, depth + 1) {
            return true;
        }
        used[y] = false;
    }
    false
}

/// True iff `p` and `q` are isomorphic as posets (ids are ignored).
pub fn is_isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let Some((cp, cq)) = refine(p, q) else {
        return false;
    };
    let mut size: HashMap<usize, usize> = HashMap::new();
    for &c in &cp {
        *size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| (size[&cp[x]], p.below(x).count_ones(..)));
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    extend(p, q, &order, &cp, &cq, &mut map, &mut used, 0)
}

//! Reduced rational homology and the Gorenstein predicates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SimplicialComplex;
use crate::error::{Error, Result};

/// Rank over the rationals of a set of sparse vectors.
fn rank(columns: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, BigRational>> = HashMap::new();
    for mut v in columns {
        while let Some((&lead, coeff)) = v.iter().next() {
            let coeff = coeff.clone();
            match pivots.get(&lead) {
                Some(p) => {
                    for (&i, c) in p {
                        let e = v.entry(i).or_insert_with(BigRational::zero);
                        *e -= &coeff * c;
                        if e.is_zero() {
                            v.remove(&i);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / coeff;
                    for c in v.values_mut() {
                        *c *= &inv;
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced Betti numbers over the rationals for dimensions `-1..=dim`.
pub fn reduced_betti_full(k: &SimplicialComplex) -> Vec<usize> {
    let top = (k.dim() + 1) as usize;
    let by_size: Vec<Vec<&Vec<usize>>> = (0..=top).map(|s| k.faces_of_size(s).collect()).collect();
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();
    let mut ranks = vec![0usize; top + 2];
    for size in 1..=top {
        let columns = by_size[size]
            .iter()
            .map(|f| {
                let mut col = BTreeMap::new();
                for i in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    col.insert(index[size - 1][&g], BigRational::from_integer(BigInt::from(sign)));
                }
                col
            })
            .collect();
        ranks[size] = rank(columns);
    }
    (0..=top).map(|size| by_size[size].len() - ranks[size] - ranks[size + 1]).collect()
}

/// Reduced Betti numbers over the rationals for dimensions `0..=dim`.
pub fn reduced_betti(k: &SimplicialComplex) -> Vec<usize> {
    reduced_betti_full(k).into_iter().skip(1).collect()
}

fn betti_is(k: &SimplicialComplex, sphere_dim: Option<isize>) -> bool {
    let b = reduced_betti_full(k);
    b.iter().enumerate().all(|(i, &v)| {
        let expected = usize::from(sphere_dim == Some(i as isize - 1));
        v == expected
    }) && sphere_dim.is_none_or(|d| d <= k.dim())
}

/// True iff `k` has the reduced rational homology of a sphere of dimension `dim`.
pub fn is_homology_sphere(k: &SimplicialComplex, dim: isize) -> bool {
    betti_is(k, Some(dim))
}

/// True iff `k` and the link of every face are rational homology spheres of the expected dimension.
pub fn is_gorenstein(k: &SimplicialComplex) -> Result<bool> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let n = k.dim();
    Ok(k.faces().iter().all(|f| betti_is(&k.link_of(f), Some(n - f.len() as isize))))
}

/// True iff `boundary` is a Gorenstein subcomplex of dimension `dim - 1` and every link of
/// `k` is acyclic at boundary faces and a homology sphere elsewhere.
pub fn is_near_gorenstein(k: &SimplicialComplex, boundary: &SimplicialComplex) -> Result<bool> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let n = k.dim();
    if boundary.dim() != n - 1 || !k.contains_complex(boundary) || !is_gorenstein(boundary)? {
        return Ok(false);
    }
    Ok(k.faces().iter().all(|f| {
        let in_boundary = boundary.find_face(&k.face_vertices(f)).is_ok();
        let link = k.link_of(f);
        if in_boundary {
            betti_is(&link, None)
        } else {
            betti_is(&link, Some(n - f.len() as isize))
        }
    }))
}

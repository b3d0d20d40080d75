//! Generators for simplices, polygons, the cube, boolean algebras and stacked polytopes.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{face_label, natural_cmp, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::{boolean_algebra, build_poset, GradedPoset};

fn labels(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|v| v.to_string()).collect()
}

/// The full `d`-simplex on vertices `1..=d+1`.
pub fn make_simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::new(&[labels(1..=d + 1)]).expect("simplex")
}

/// Boundary of the `d`-simplex: all `d`-element subsets of `1..=d+1`.
pub fn make_boundary_simplex(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::DomainError("boundary of a 0-simplex is not a complex of facets".into()));
    }
    let all = labels(1..=d + 1);
    let facets: Vec<Vec<String>> = (0..=d)
        .map(|skip| all.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| v.clone()).collect())
        .collect();
    SimplicialComplex::new(&facets)
}

/// The `n`-cycle, the boundary complex of an `n`-gon.
pub fn make_polygon(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::DomainError(format!("polygon needs at least 3 sides, got {n}")));
    }
    let facets: Vec<Vec<String>> = (1..=n).map(|i| vec![i.to_string(), (i % n + 1).to_string()]).collect();
    SimplicialComplex::new(&facets)
}

/// Face lattice of a polytope given by the vertex sets of its facets: all intersections of
/// facets, the empty face and the whole polytope, ordered by inclusion.
pub fn polytope_face_lattice<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<GradedPoset> {
    let vertices: BTreeSet<String> = facets.iter().flatten().map(|v| v.as_ref().to_string()).collect();
    let mut faces: BTreeSet<BTreeSet<String>> =
        facets.iter().map(|f| f.iter().map(|v| v.as_ref().to_string()).collect()).collect();
    loop {
        let current: Vec<BTreeSet<String>> = faces.iter().cloned().collect();
        let before = faces.len();
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                faces.insert(a.intersection(b).cloned().collect());
            }
        }
        if faces.len() == before {
            break;
        }
    }
    faces.insert(BTreeSet::new());
    faces.insert(vertices);
    let faces: Vec<BTreeSet<String>> = faces.into_iter().collect();
    let label = |f: &BTreeSet<String>| {
        let mut vs: Vec<&String> = f.iter().collect();
        vs.sort_by(|a, b| natural_cmp(a, b));
        face_label(&vs)
    };
    let ids: Vec<String> = faces.iter().map(label).collect();
    let mut relations = Vec::new();
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if i != j && a.is_subset(b) {
                relations.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    build_poset(&ids, &relations)
}

/// Face lattice of the 3-cube; vertex `1 + x + 2y + 4z` sits at `(x, y, z)`.
pub fn make_cube3() -> GradedPoset {
    let mut facets = Vec::new();
    for axis in 0..3 {
        for side in 0..2 {
            let f: Vec<String> = (0..8usize).filter(|v| v >> axis & 1 == side).map(|v| (v + 1).to_string()).collect();
            facets.push(f);
        }
    }
    polytope_face_lattice(&facets).expect("cube face lattice")
}

/// The boolean algebra `B_n`.
pub fn make_boolean(n: usize) -> GradedPoset {
    boolean_algebra(n)
}

/// A stacked polytope: its boundary complex, the stacking triangulation of the solid, and the
/// simplices of the triangulation in stacking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedPolytope {
    /// Boundary sphere.
    pub boundary: SimplicialComplex,
    /// Triangulation of the solid polytope by `k` simplices.
    pub triangulation: SimplicialComplex,
    /// Simplices of the triangulation in the order they were glued.
    pub order: Vec<Vec<String>>,
}

/// Stacks `k - 1` simplices onto the `d`-simplex, each onto a boundary facet containing the most
/// recently added vertex; `seed` selects among those facets.
pub fn make_stacked(d: usize, k: usize, seed: u64) -> Result<StackedPolytope> {
    if d < 2 || k < 1 {
        return Err(Error::DomainError(format!("stacked polytope needs d >= 2 and k >= 1, got d = {d}, k = {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first: Vec<usize> = (1..=d + 1).collect();
    let mut boundary: Vec<Vec<usize>> =
        (0..=d).map(|skip| first.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect()).collect();
    let mut simplices = vec![first];
    for step in 1..k {
        let newest = d + step;
        let candidates: Vec<usize> = (0..boundary.len()).filter(|&i| boundary[i].contains(&newest)).collect();
        let pick = candidates[rng.gen_range(0..candidates.len())];
        let base = boundary.remove(pick);
        let apex = d + 1 + step;
        for skip in 0..base.len() {
            let mut f: Vec<usize> = base.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
            f.push(apex);
            boundary.push(f);
        }
        let mut s = base;
        s.push(apex);
        simplices.push(s);
    }
    let to_ids = |fs: &[Vec<usize>]| -> Vec<Vec<String>> {
        fs.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect()
    };
    let order = to_ids(&simplices);
    Ok(StackedPolytope {
        boundary: SimplicialComplex::new(&to_ids(&boundary))?,
        triangulation: SimplicialComplex::new(&order)?,
        order,
    })
}

//! Simplicial complexes: faces, face posets, order complexes, links, f- and h-vectors.

mod generate;
mod homology;
mod shelling;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::flag_h;
use crate::ncpoly::UniPolynomial;
use crate::poset::{build_poset, GradedPoset};
use crate::subdivision::SubdivisionMap;

pub use generate::{
    make_boolean, make_boundary_simplex, make_cube3, make_polygon, make_simplex, make_stacked, polytope_face_lattice,
    StackedPolytope,
};
pub use homology::{is_gorenstein, is_homology_sphere, is_near_gorenstein, reduced_betti, reduced_betti_full};
pub use shelling::{find_shelling, shelling_steps, verify_shelling, ShellingSearch, ShellingStep, SHELLING_NODE_LIMIT};

/// Compares ids numerically when both are integers, otherwise as strings.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// Set-notation id of a face, such as `{1,2}`; the empty face is `{}`.
pub fn face_label<S: AsRef<str>>(vertices: &[S]) -> String {
    let parts: Vec<&str> = vertices.iter().map(|v| v.as_ref()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A finite simplicial complex given by its facets; the empty face is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by the given vertex sets; non-maximal sets are dropped.
    pub fn new<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut vertices: Vec<String> =
            facets.iter().flatten().map(|v| v.as_ref().to_string()).collect::<BTreeSet<_>>().into_iter().collect();
        vertices.sort_by(|a, b| natural_cmp(a, b));
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            let mut s: Vec<usize> = f.iter().map(|v| index[v.as_ref()]).collect();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("repeated vertex in facet {}", face_label(f))));
            }
            sets.push(s);
        }
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut maximal: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !maximal.iter().any(|m| is_subset(&s, m)) {
                maximal.push(s);
            }
        }
        if maximal.is_empty() {
            maximal.push(Vec::new());
        }
        maximal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(Vec::new());
        for f in &maximal {
            for mask in 1u64..(1u64 << f.len()) {
                all.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        let mut faces: Vec<Vec<usize>> = all.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Self { vertices, facets: maximal, faces })
    }

    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        Self { vertices: Vec::new(), facets: vec![Vec::new()], faces: vec![Vec::new()] }
    }

    /// Vertex ids in natural order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Facets as sorted vertex-index lists.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Every face, including the empty face, ordered by size then lexicographically.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Vertex ids of a face.
    pub fn face_vertices(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Facets as vertex-id lists.
    pub fn facet_ids(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.face_vertices(f)).collect()
    }

    /// Set-notation id of a face.
    pub fn face_id(&self, face: &[usize]) -> String {
        face_label(&self.face_vertices(face))
    }

    /// Looks up a face given by vertex ids.
    pub fn find_face<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Vec<usize>> {
        let missing = || Error::FaceNotFound(face_label(vertices));
        let mut face = Vec::with_capacity(vertices.len());
        for v in vertices {
            face.push(self.vertices.iter().position(|w| w == v.as_ref()).ok_or_else(missing)?);
        }
        face.sort_unstable();
        if self.facets.iter().any(|f| is_subset(&face, f)) {
            Ok(face)
        } else {
            Err(missing())
        }
    }

    /// Dimension; `-1` for the complex `{{}}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// True when all facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// Faces sharing the given size.
    pub fn faces_of_size(&self, size: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter().filter(move |f| f.len() == size)
    }

    /// True iff every face of `other` (compared by vertex ids) is a face of `self`.
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        other.facet_ids().iter().all(|f| self.find_face(f).is_ok())
    }

    /// Star of a face: the closure of the facets containing it.
    pub fn star<S: AsRef<str>>(&self, face: &[S]) -> Result<SimplicialComplex> {
        let f = self.find_face(face)?;
        let facets: Vec<Vec<String>> =
            self.facets.iter().filter(|g| is_subset(&f, g)).map(|g| self.face_vertices(g)).collect();
        SimplicialComplex::new(&facets)
    }

    /// Link of a face: faces disjoint from it whose union with it is a face.
    pub fn link<S: AsRef<str>>(&self, face: &[S]) -> Result<SimplicialComplex> {
        let f = self.find_face(face)?;
        Ok(self.link_of(&f))
    }

    pub(crate) fn link_of(&self, f: &[usize]) -> SimplicialComplex {
        let facets: Vec<Vec<String>> = self
            .facets
            .iter()
            .filter(|g| is_subset(f, g))
            .map(|g| g.iter().filter(|v| !f.contains(v)).map(|&v| self.vertices[v].clone()).collect())
            .collect();
        SimplicialComplex::new(&facets).expect("link of a valid complex")
    }

    /// Boundary of a pure complex: the closure of the codimension-one faces lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut count: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &self.facets {
            for i in 0..f.len() {
                let mut r = f.clone();
                r.remove(i);
                *count.entry(r).or_default() += 1;
            }
        }
        let mut ridges: Vec<Vec<usize>> = count.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        ridges.sort();
        let facets: Vec<Vec<String>> = ridges.iter().map(|r| self.face_vertices(r)).collect();
        SimplicialComplex::new(&facets)
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Face poset ordered by inclusion, ranked by `dim + 1`, optionally with a new maximum `top`.
pub fn face_poset(k: &SimplicialComplex, with_max: bool) -> GradedPoset {
    let ids: Vec<String> = k.faces.iter().map(|f| k.face_id(f)).collect();
    let index: HashMap<&Vec<usize>, usize> = k.faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut covers: Vec<(String, String)> = Vec::new();
    for f in &k.faces {
        for i in 0..f.len() {
            let mut g = f.clone();
            g.remove(i);
            covers.push((ids[index[&g]].clone(), ids[index[f]].clone()));
        }
    }
    let mut elements = ids.clone();
    if with_max {
        let mut top = "top".to_string();
        while ids.contains(&top) {
            top.push('\'');
        }
        for f in &k.facets {
            covers.push((ids[index[f]].clone(), top.clone()));
        }
        elements.push(top);
    }
    build_poset(&elements, &covers).expect("face poset of a valid complex")
}

/// Order complex of the open interval between bottom and top: vertices are proper elements,
/// faces are chains.
pub fn order_complex(p: &GradedPoset) -> Result<SimplicialComplex> {
    let chains = p.maximal_chains()?;
    let facets: Vec<Vec<String>> = chains.iter().map(|c| c.iter().map(|&x| p.id(x).to_string()).collect()).collect();
    if facets.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    SimplicialComplex::new(&facets)
}

/// Barycentric subdivision with the map sending each chain of faces to its largest face.
///
/// The map goes between face posets without adjoined maxima.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Result<(SimplicialComplex, SubdivisionMap)> {
    let base = face_poset(k, false);
    let faces = crate::poset::adjoin_max(&base);
    let sd = order_complex(&faces)?;
    let source = face_poset(&sd, false);
    let mut carrier: Vec<(String, String)> = Vec::new();
    for f in sd.faces() {
        let labels = sd.face_vertices(f);
        let target = labels
            .iter()
            .map(|l| base.element(l).expect("vertex of subdivision is a face"))
            .max_by_key(|&x| base.rank_of(x))
            .unwrap_or_else(|| base.bottom().expect("face poset has the empty face"));
        carrier.push((sd.face_id(f), base.id(target).to_string()));
    }
    let map = SubdivisionMap::new(source, base, &carrier)?;
    Ok((sd, map))
}

/// f-vector `[f_{-1}, f_0, ..., f_dim]`.
pub fn f_vector(k: &SimplicialComplex) -> Vec<usize> {
    let mut f = vec![0usize; (k.dim() + 2) as usize];
    for face in &k.faces {
        f[face.len()] += 1;
    }
    f
}

/// h-vector `h_0..h_d` of a pure complex of dimension `d - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    /// Dimension plus one.
    pub d: usize,
    /// Entries `h_0..h_d`.
    pub h: Vec<BigInt>,
}

impl HVector {
    /// `sum h_i x^i`.
    pub fn to_polynomial(&self) -> UniPolynomial {
        UniPolynomial::new(self.h.clone())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Classical h-vector `h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}`.
pub fn h_vector(k: &SimplicialComplex) -> Result<HVector> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let f = f_vector(k);
    let d = (k.dim() + 1) as usize;
    let h = (0..=d)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = binomial(d - i, j - i) * BigInt::from(f[i]);
                if (j - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(HVector { d, h })
}

/// h-vector of the order complex, `h_i = sum_{|S| = i} beta(S)`.
pub fn flag_to_h(p: &GradedPoset) -> Result<HVector> {
    let beta = flag_h(p)?;
    let n = beta.n();
    let mut h = vec![BigInt::zero(); n + 1];
    for (mask, v) in beta.values().iter().enumerate() {
        h[mask.count_ones() as usize] += v;
    }
    Ok(HVector { d: n, h })
}

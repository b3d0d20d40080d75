#![allow(dead_code)]

pub mod props;

use std::collections::{BTreeSet, HashMap};

use cdindex::complex::{
    barycentric_subdivision, face_poset, make_boundary_simplex, make_cube3, make_polygon, make_simplex, make_stacked,
    natural_cmp, SimplicialComplex,
};
use cdindex::poset::{boolean_algebra, dual, join, pyramid, suspension};
use cdindex::{GradedPoset, SubdivisionMap};

pub fn complex(facets: &[&[&str]]) -> SimplicialComplex {
    let f: Vec<Vec<String>> = facets.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
    SimplicialComplex::new(&f).unwrap()
}

/// Face poset of a sphere or ball with a maximum adjoined.
pub fn sphere(k: &SimplicialComplex) -> GradedPoset {
    face_poset(k, true)
}

pub fn square() -> GradedPoset {
    polygon(4)
}

pub fn polygon(n: usize) -> GradedPoset {
    sphere(&make_polygon(n).unwrap())
}

pub fn cube() -> GradedPoset {
    make_cube3()
}

pub fn tetrahedron() -> GradedPoset {
    sphere(&make_boundary_simplex(3).unwrap())
}

pub fn bipyramid() -> GradedPoset {
    sphere(&make_stacked(3, 2, 0).unwrap().boundary)
}

pub fn octahedron() -> GradedPoset {
    sphere(&cross_polytope(3))
}

/// Boundary complex of the `d`-dimensional cross-polytope on vertices `i` and `-i`.
pub fn cross_polytope(d: usize) -> SimplicialComplex {
    let mut facets = Vec::new();
    for signs in 0..1usize << d {
        facets.push((1..=d).map(|i| if signs >> (i - 1) & 1 == 1 { format!("-{i}") } else { i.to_string() }).collect());
    }
    SimplicialComplex::new(&facets).unwrap()
}

/// Chain `0 < 1 < ... < n`.
pub fn chain(n: usize) -> GradedPoset {
    cdindex::poset::chain_poset(n)
}

/// Eulerian fixtures with names.
pub fn eulerian_fixtures() -> Vec<(String, GradedPoset)> {
    let mut out: Vec<(String, GradedPoset)> = Vec::new();
    for n in 3..=12 {
        out.push((format!("polygon {n}"), polygon(n)));
    }
    for n in 1..=6 {
        out.push((format!("B{n}"), boolean_algebra(n)));
    }
    out.push(("cube".into(), cube()));
    out.push(("dual cube".into(), dual(&cube())));
    out.push(("tetrahedron".into(), tetrahedron()));
    out.push(("bipyramid".into(), bipyramid()));
    out.push(("octahedron".into(), octahedron()));
    out.push(("stacked 3,4".into(), sphere(&make_stacked(3, 4, 7).unwrap().boundary)));
    out.push(("stacked 4,3".into(), sphere(&make_stacked(4, 3, 1).unwrap().boundary)));
    out.push(("suspension of square".into(), suspension(&square()).unwrap()));
    out.push(("pyramid over square".into(), pyramid(&square()).unwrap()));
    out.push(("pentagon * B3".into(), join(&polygon(5), &boolean_algebra(3)).unwrap()));
    out.push(("cross-polytope 4".into(), sphere(&cross_polytope(4))));
    out.push((
        "barycentric tetrahedron".into(),
        sphere(&barycentric_subdivision(&make_boundary_simplex(3).unwrap()).unwrap().0),
    ));
    out
}

/// Map whose carrier sends a face to the smallest target face containing its vertex carriers.
pub fn vertex_carried(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    vertex: &dyn Fn(&str) -> Vec<String>,
) -> SubdivisionMap {
    let sp = face_poset(source, false);
    let tp = face_poset(target, false);
    let mut pairs = Vec::new();
    for f in source.faces() {
        let mut verts: Vec<String> = source.face_vertices(f).iter().flat_map(|v| vertex(v)).collect();
        verts.sort_by(|a, b| natural_cmp(a, b));
        verts.dedup();
        let face = target.find_face(&verts).unwrap();
        pairs.push((source.face_id(f), target.face_id(&face)));
    }
    let m = SubdivisionMap::new(sp, tp, &pairs).unwrap();
    if m.target().top().is_none() {
        m.with_top().unwrap()
    } else {
        m
    }
}

fn same(v: &str) -> Vec<String> {
    vec![v.to_string()]
}

fn pair(a: &str, b: &str) -> Vec<String> {
    vec![a.to_string(), b.to_string()]
}

/// Tetrahedron boundary with edge `{1,2}` split by vertex 5 and its two adjacent triangles halved.
pub fn split_tetrahedron() -> SubdivisionMap {
    let source = complex(&[
        &["1", "5", "3"],
        &["5", "2", "3"],
        &["1", "5", "4"],
        &["5", "2", "4"],
        &["1", "3", "4"],
        &["2", "3", "4"],
    ]);
    vertex_carried(&source, &make_boundary_simplex(3).unwrap(), &|v| if v == "5" { pair("1", "2") } else { same(v) })
}

/// Tetrahedron boundary with vertex 5 placed inside the triangle `{1,2,3}`.
pub fn stellar_facet() -> SubdivisionMap {
    let source = complex(&[
        &["1", "2", "5"],
        &["1", "3", "5"],
        &["2", "3", "5"],
        &["1", "2", "4"],
        &["1", "3", "4"],
        &["2", "3", "4"],
    ]);
    vertex_carried(&source, &make_boundary_simplex(3).unwrap(), &|v| {
        if v == "5" {
            vec!["1".into(), "2".into(), "3".into()]
        } else {
            same(v)
        }
    })
}

/// Triangle boundary with each edge split, a hexagon.
pub fn hexagon_over_triangle() -> SubdivisionMap {
    let source = complex(&[&["1", "4"], &["4", "2"], &["2", "5"], &["5", "3"], &["3", "6"], &["6", "1"]]);
    vertex_carried(&source, &make_boundary_simplex(2).unwrap(), &|v| match v {
        "4" => pair("1", "2"),
        "5" => pair("2", "3"),
        "6" => pair("1", "3"),
        _ => same(v),
    })
}

/// Barycentric subdivision of a complex with a maximum adjoined to both sides.
pub fn barycentric_sphere(k: &SimplicialComplex) -> SubdivisionMap {
    barycentric_subdivision(k).unwrap().1.with_top().unwrap()
}

/// Strong Eulerian subdivisions between Eulerian posets.
pub fn eulerian_subdivisions() -> Vec<(String, SubdivisionMap)> {
    vec![
        ("split tetrahedron".into(), split_tetrahedron()),
        ("stellar facet".into(), stellar_facet()),
        ("hexagon over triangle".into(), hexagon_over_triangle()),
        ("barycentric triangle boundary".into(), barycentric_sphere(&make_boundary_simplex(2).unwrap())),
        ("barycentric tetrahedron boundary".into(), barycentric_sphere(&make_boundary_simplex(3).unwrap())),
        ("barycentric square".into(), barycentric_sphere(&make_polygon(4).unwrap())),
    ]
}

/// Barycentric subdivision of the solid triangle over `B_3`.
pub fn barycentric_triangle() -> SubdivisionMap {
    barycentric_subdivision(&make_simplex(2)).unwrap().1
}

/// Edge `{1,2}` with `t` interior points.
pub fn edge_with_points(t: usize) -> SubdivisionMap {
    let path: Vec<String> = std::iter::once("1".to_string())
        .chain((3..t + 3).map(|v| v.to_string()))
        .chain(std::iter::once("2".to_string()))
        .collect();
    let facets: Vec<Vec<String>> = path.windows(2).map(|w| w.to_vec()).collect();
    let source = SimplicialComplex::new(&facets).unwrap();
    vertex_carried(&source, &make_simplex(1), &|v| if v == "1" || v == "2" { same(v) } else { pair("1", "2") })
}

/// Pentagon `1..5` triangulated from vertex 5, with a maximum adjoined.
pub fn fan_pentagon() -> GradedPoset {
    sphere(&complex(&[&["1", "2", "5"], &["2", "3", "5"], &["3", "4", "5"]]))
}

/// Hexagon `1..6` triangulated with one interior vertex 7.
pub fn hexagon_disc() -> SimplicialComplex {
    complex(&[
        &["1", "2", "6"],
        &["2", "5", "6"],
        &["2", "5", "7"],
        &["2", "3", "7"],
        &["3", "4", "7"],
        &["4", "5", "7"],
    ])
}

/// The triangulated disc over the hexagon 2-cell: boundary faces map to themselves, the rest to the cell.
pub fn hexagon_disc_map() -> SubdivisionMap {
    let disc = hexagon_disc();
    let source = face_poset(&disc, false);
    let target = face_poset(&make_polygon(6).unwrap(), true);
    let pairs: Vec<(String, String)> = disc
        .faces()
        .iter()
        .map(|f| {
            let id = disc.face_id(f);
            let t = if target.index_of(&id).is_some() { id.clone() } else { "top".to_string() };
            (id, t)
        })
        .collect();
    SubdivisionMap::new(source, target, &pairs).unwrap()
}

/// Stellar subdivision of `face` in a complex whose vertices carry supports in a base simplex.
pub fn stellar(k: &[BTreeSet<String>], face: &BTreeSet<String>, apex: &str) -> Vec<BTreeSet<String>> {
    let mut out = Vec::new();
    for g in k {
        if face.is_subset(g) {
            for u in face {
                let mut h = g.clone();
                h.remove(u);
                h.insert(apex.to_string());
                out.push(h);
            }
        } else {
            out.push(g.clone());
        }
    }
    out
}

/// Random sequence of stellar subdivisions of the solid `d`-simplex, as a map onto `B_{d+1}`.
pub fn random_stellar(d: usize, steps: usize, picks: &[usize]) -> SubdivisionMap {
    let mut facets: Vec<BTreeSet<String>> = vec![(1..=d + 1).map(|v| v.to_string()).collect()];
    let mut support: HashMap<String, BTreeSet<String>> =
        (1..=d + 1).map(|v| (v.to_string(), BTreeSet::from([v.to_string()]))).collect();
    for (s, &pick) in picks.iter().enumerate().take(steps) {
        let mut faces: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        for f in &facets {
            let vs: Vec<&String> = f.iter().collect();
            for mask in 1..1usize << vs.len() {
                faces.insert((0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect());
            }
        }
        let faces: Vec<BTreeSet<String>> = faces.into_iter().filter(|f| f.len() >= 2).collect();
        let face = &faces[pick % faces.len()];
        let apex = (d + 2 + s).to_string();
        support.insert(apex.clone(), face.iter().flat_map(|v| support[v].clone()).collect());
        facets = stellar(&facets, face, &apex);
    }
    let list: Vec<Vec<String>> = facets.iter().map(|f| f.iter().cloned().collect()).collect();
    let source = SimplicialComplex::new(&list).unwrap();
    vertex_carried(&source, &make_simplex(d), &|v| support[v].iter().cloned().collect())
}

/// Independent oracles used to cross-check library results.
pub mod oracle {
    use cdindex::GradedPoset;

    /// Möbius function by the defining recursion.
    pub fn mobius(p: &GradedPoset, x: usize, y: usize) -> i64 {
        if x == y {
            return 1;
        }
        if !p.less(x, y) {
            return 0;
        }
        -(0..p.len()).filter(|&z| p.leq(x, z) && p.less(z, y)).map(|z| mobius(p, x, z)).sum::<i64>()
    }

    /// Eulerian test: `mu(x, y) = (-1)^(rho(y) - rho(x))` for all `x <= y`.
    #[allow(clippy::needless_range_loop)]
    pub fn is_eulerian(p: &GradedPoset) -> bool {
        if p.bottom().is_none() || p.top().is_none() || !p.is_graded() {
            return false;
        }
        let n = p.len();
        let mut mu = vec![vec![0i64; n]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| p.rank_of(x));
        for x in 0..n {
            for &y in &order {
                mu[x][y] = if x == y {
                    1
                } else if p.less(x, y) {
                    -(0..n).filter(|&z| p.leq(x, z) && p.less(z, y)).map(|z| mu[x][z]).sum::<i64>()
                } else {
                    0
                };
                if p.leq(x, y) {
                    let want = if (p.rank_of(y) - p.rank_of(x)).is_multiple_of(2) { 1 } else { -1 };
                    if mu[x][y] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Flag f-vector by brute-force enumeration of element subsets, indexed by rank mask.
    pub fn flag_f(p: &GradedPoset) -> Vec<i64> {
        let (bottom, top) = (p.bottom().unwrap(), p.top().unwrap());
        let n = p.rank_of(top) - 1;
        let inner: Vec<usize> = (0..p.len()).filter(|&x| x != bottom && x != top).collect();
        let mut f = vec![0i64; 1 << n];
        fn walk(p: &GradedPoset, inner: &[usize], i: usize, chain: &mut Vec<usize>, f: &mut [i64]) {
            if i == inner.len() {
                let mask = chain.iter().fold(0usize, |m, &x| m | 1 << (p.rank_of(x) - 1));
                f[mask] += 1;
                return;
            }
            walk(p, inner, i + 1, chain, f);
            let x = inner[i];
            if chain.iter().all(|&y| p.less(y, x) || p.less(x, y)) {
                chain.push(x);
                walk(p, inner, i + 1, chain, f);
                chain.pop();
            }
        }
        walk(p, &inner, 0, &mut Vec::new(), &mut f);
        f
    }

    /// Integer polynomials as coefficient vectors, lowest degree first.
    pub type Poly = Vec<i64>;

    pub fn trim(mut p: Poly) -> Poly {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    pub fn add(a: &Poly, b: &Poly) -> Poly {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    pub fn mul(a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn x_minus_one(k: usize) -> Poly {
        (0..k).fold(vec![1], |acc, _| mul(&acc, &vec![-1, 1]))
    }

    /// Toric h and g of the closed interval `[lo, hi]` from the classical definition:
    /// `h = sum_{lo <= y < hi} g([lo, y]) (x - 1)^(r - 1 - r(y))` and
    /// `g_i = h_i - h_(i-1)` for `i < r / 2`, with `h = g = 1` at rank 0.
    pub fn toric_hg(p: &GradedPoset, lo: usize, hi: usize) -> (Poly, Poly) {
        let r = p.rank_of(hi) - p.rank_of(lo);
        if r == 0 {
            return (vec![1], vec![1]);
        }
        let mut h: Poly = Vec::new();
        for y in (0..p.len()).filter(|&y| p.leq(lo, y) && p.less(y, hi)) {
            let (_, gy) = toric_hg(p, lo, y);
            h = add(&h, &mul(&gy, &x_minus_one(r - 1 - (p.rank_of(y) - p.rank_of(lo)))));
        }
        let coeff = |i: isize| if i < 0 { 0 } else { h.get(i as usize).copied().unwrap_or(0) };
        let g = trim((0..=(r - 1) / 2).map(|i| coeff(i as isize) - coeff(i as isize - 1)).collect());
        (h, g)
    }

    /// Classical h-vector of a pure simplicial complex from its f-vector.
    #[allow(clippy::needless_range_loop)]
    pub fn classical_h(f: &[usize]) -> Poly {
        let d = f.len() - 1;
        let mut out = Vec::new();
        for k in 0..=d {
            let mut s = 0i64;
            for i in 0..=k {
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                s += sign * binom((d - i) as i64, (k - i) as i64) * f[i] as i64;
            }
            out.push(s);
        }
        trim(out)
    }

    pub fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Fibonacci numbers with `F_1 = F_2 = 1`.
    pub fn fibonacci(n: usize) -> u64 {
        let (mut a, mut b) = (0u64, 1u64);
        for _ in 0..n {
            let t = a + b;
            a = b;
            b = t;
        }
        a
    }
}

/// Converts a library polynomial to an oracle coefficient vector.
pub fn coeffs(p: &cdindex::UniPolynomial) -> oracle::Poly {
    use num_traits::ToPrimitive;
    p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
}

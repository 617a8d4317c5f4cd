//! Plane triangulations and the colored maps carved out of them.
//!
//! An edge set of a triangulation with every vertex degree even is the
//! boundary of some set of faces, so picking a set of black triangles picks
//! an even subgraph together with a proper coloring of its faces. Every
//! simple plane graph extends to a triangulation on the same vertices, which
//! makes this exhaustive once every triangulation is visited.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::map::{trace_component, Color, EmbeddedColoredGraph, Placement};
use crate::complex::UnionFind;
use crate::error::{out_of_range, Error, Result};

/// Largest vertex count for [`exhaustive_maps`].
pub const EXHAUSTIVE_CAP: usize = 8;

/// A triangulation of the sphere as oriented faces `[a, b, c]`, each walked
/// with the face on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTriangulation {
    n: usize,
    faces: Vec<[usize; 3]>,
}

fn rotate_to(face: &[usize; 3], v: usize) -> Option<[usize; 3]> {
    let [a, b, c] = *face;
    match v {
        _ if v == a => Some([a, b, c]),
        _ if v == b => Some([b, c, a]),
        _ if v == c => Some([c, a, b]),
        _ => None,
    }
}

impl PlaneTriangulation {
    /// Two triangles glued along their boundary.
    pub fn triangle() -> Self {
        PlaneTriangulation {
            n: 3,
            faces: vec![[0, 1, 2], [0, 2, 1]],
        }
    }

    /// Vertex 3 inside triangle 0-1-2.
    pub fn tetrahedron() -> Self {
        PlaneTriangulation {
            n: 4,
            faces: vec![[0, 1, 3], [1, 2, 3], [2, 0, 3], [0, 2, 1]],
        }
    }

    pub fn from_faces(n: usize, faces: Vec<[usize; 3]>) -> Result<Self> {
        let t = PlaneTriangulation { n, faces };
        t.validate()?;
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    fn validate(&self) -> Result<()> {
        let mut darts = HashSet::new();
        for f in &self.faces {
            if f.iter().any(|&v| v >= self.n) || f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::Rotation(format!("bad face {f:?}")));
            }
            for i in 0..3 {
                if !darts.insert((f[i], f[(i + 1) % 3])) {
                    return Err(Error::Rotation(format!(
                        "dart {}->{} used twice",
                        f[i],
                        f[(i + 1) % 3]
                    )));
                }
            }
        }
        if darts.iter().any(|&(u, v)| !darts.contains(&(v, u))) {
            return Err(Error::Rotation("unpaired dart".into()));
        }
        let e = darts.len() / 2;
        if self.faces.len() != 2 * self.n - 4 || e != 3 * self.n - 6 {
            return Err(Error::Rotation("not a triangulation of the sphere".into()));
        }
        for v in 0..self.n {
            let deg = self.rotation_of(v).len();
            let incident = self.faces.iter().filter(|f| f.contains(&v)).count();
            if deg != incident {
                return Err(Error::Rotation(format!("vertex {v} is pinched")));
            }
        }
        Ok(())
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn rotation_of(&self, v: usize) -> Vec<usize> {
        let mut succ = BTreeMap::new();
        for f in &self.faces {
            if let Some([_, x, y]) = rotate_to(f, v) {
                succ.insert(x, y);
            }
        }
        let Some((&start, _)) = succ.iter().next() else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut cur = succ[&start];
        while cur != start && out.len() <= succ.len() {
            out.push(cur);
            cur = succ[&cur];
        }
        out
    }

    pub fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.rotation_of(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.faces.iter().filter(|f| f.contains(&v)).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.faces
            .iter()
            .any(|f| rotate_to(f, u).is_some_and(|g| g[1] == v))
    }

    /// Index of the face on the left of `u -> v`.
    pub fn face_left(&self, u: usize, v: usize) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| rotate_to(f, u).is_some_and(|g| g[1] == v))
    }

    /// Undirected edges `(u, v)`, `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .faces
            .iter()
            .flat_map(|f| (0..3).map(move |i| (f[i], f[(i + 1) % 3])))
            .filter(|(u, v)| u < v)
            .collect();
        e.sort_unstable();
        e
    }

    /// Adds a new vertex inside face `face`.
    pub fn insert_vertex(&mut self, face: usize) -> usize {
        let [a, b, c] = self.faces[face];
        let w = self.n;
        self.n += 1;
        self.faces[face] = [a, b, w];
        self.faces.push([b, c, w]);
        self.faces.push([c, a, w]);
        w
    }

    /// Replaces edge `u-v` by the other diagonal of its quadrilateral, unless
    /// that would create a double edge or a vertex of degree below 3.
    pub fn flip(&mut self, u: usize, v: usize) -> bool {
        let (Some(i), Some(j)) = (self.face_left(u, v), self.face_left(v, u)) else {
            return false;
        };
        let a = rotate_to(&self.faces[i], u).unwrap()[2];
        let b = rotate_to(&self.faces[j], v).unwrap()[2];
        if a == b || self.has_edge(a, b) || self.degree(u) <= 3 || self.degree(v) <= 3 {
            return false;
        }
        self.faces[i] = [a, u, b];
        self.faces[j] = [b, v, a];
        true
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        PlaneTriangulation {
            n: self.n,
            faces: self.faces.iter().map(|f| f.map(|v| perm[v])).collect(),
        }
    }

    /// Invariant under relabeling and, with `mirror`, under reflection.
    pub fn canonical_code(&self, mirror: bool) -> Vec<usize> {
        let rot = self.rotation();
        let mut best: Option<Vec<usize>> = None;
        let orientations: &[bool] = if mirror { &[false, true] } else { &[false] };
        for &flip in orientations {
            let rot: Vec<Vec<usize>> = rot
                .iter()
                .map(|r| {
                    if flip {
                        r.iter().rev().copied().collect()
                    } else {
                        r.clone()
                    }
                })
                .collect();
            for u in 0..self.n {
                for &v in &rot[u] {
                    let code = bfs_code(&rot, u, v);
                    if best.as_ref().map_or(true, |b| code < *b) {
                        best = Some(code);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }
}

fn bfs_code(rot: &[Vec<usize>], root: usize, first: usize) -> Vec<usize> {
    let n = rot.len();
    let mut label = vec![usize::MAX; n];
    let mut start = vec![usize::MAX; n];
    label[root] = 0;
    start[root] = first;
    let mut next = 1;
    let mut queue = VecDeque::from([root]);
    let mut code = Vec::new();
    while let Some(x) = queue.pop_front() {
        let r = &rot[x];
        let s = r.iter().position(|&y| y == start[x]).unwrap();
        for i in 0..r.len() {
            let y = r[(s + i) % r.len()];
            if label[y] == usize::MAX {
                label[y] = next;
                next += 1;
                start[y] = x;
                queue.push_back(y);
            }
            code.push(label[y]);
        }
        code.push(usize::MAX);
    }
    code
}

/// One triangulation per isomorphism class (reflections identified) on `n`
/// vertices, `3 <= n <= 10`, by breadth-first search over edge flips.
pub fn triangulations_up_to_isomorphism(n: usize) -> Result<Vec<PlaneTriangulation>> {
    if !(3..=10).contains(&n) {
        return Err(out_of_range(format!(
            "triangulation listing needs 3 <= n <= 10, got {n}"
        )));
    }
    if n == 3 {
        return Ok(vec![PlaneTriangulation::triangle()]);
    }
    let mut start = PlaneTriangulation::tetrahedron();
    while start.n() < n {
        start.insert_vertex(0);
    }
    let mut seen = HashSet::from([start.canonical_code(true)]);
    let mut reps = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for (u, v) in t.edges() {
            let mut f = t.clone();
            if f.flip(u, v) && seen.insert(f.canonical_code(true)) {
                reps.push(f.clone());
                queue.push_back(f);
            }
        }
    }
    Ok(reps)
}

/// A random triangulation on `n >= 3` vertices: random stacking, random
/// flips, then a random relabeling.
pub fn random_triangulation(n: usize, rng: &mut impl Rng) -> Result<PlaneTriangulation> {
    if n < 3 {
        return Err(out_of_range(format!("a triangulation needs n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(PlaneTriangulation::triangle());
    }
    let mut t = PlaneTriangulation::tetrahedron();
    while t.n() < n {
        let f = rng.gen_range(0..t.faces.len());
        t.insert_vertex(f);
    }
    for _ in 0..6 * n {
        let edges = t.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        t.flip(u, v);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Ok(t.relabel(&perm))
}

/// The map cut out of `tri` by the faces marked `black`: its edges separate
/// a black from a non-black face. `None` if some vertex is left isolated.
pub fn map_from_face_set(tri: &PlaneTriangulation, black: &[bool]) -> Option<EmbeddedColoredGraph> {
    let n = tri.n();
    let full = tri.rotation();
    let in_h = |u: usize, v: usize| {
        let a = tri.face_left(u, v).unwrap();
        let b = tri.face_left(v, u).unwrap();
        black[a] != black[b]
    };
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|u| full[u].iter().copied().filter(|&v| in_h(u, v)).collect())
        .collect();
    if rotation.iter().any(Vec::is_empty) {
        return None;
    }

    // regions: triangles joined across edges that are not in the map
    let mut regions = UnionFind::new(tri.faces.len());
    for (u, v) in tri.edges() {
        if !in_h(u, v) {
            regions.union(tri.face_left(u, v).unwrap(), tri.face_left(v, u).unwrap());
        }
    }

    // union by minimum: each region is named by its smallest face
    let region_of: Vec<usize> = (0..tri.faces.len()).map(|f| regions.find(f)).collect();

    let mut cuf = UnionFind::new(n);
    for (u, nb) in rotation.iter().enumerate() {
        for &v in nb {
            cuf.union(u, v);
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        comps.entry(cuf.find(v)).or_default().push(v);
    }
    let mut comps: Vec<Vec<usize>> = comps.into_values().collect();
    comps.sort_by_key(|c| c[0]);
    let r = comps.len();

    let local: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| {
            trace_component(&rotation, c)
                .iter()
                .map(|lf| {
                    let (u, v) = lf.darts[0];
                    region_of[tri.face_left(u, v).unwrap()]
                })
                .collect()
        })
        .collect();
    let mut region_members: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, lfs) in local.iter().enumerate() {
        for (lf, &reg) in lfs.iter().enumerate() {
            region_members.entry(reg).or_default().push((c, lf));
        }
    }

    // orient the face/component tree away from component 0
    let mut containment: Vec<Option<Placement>> = vec![None; r];
    let mut outer_of = vec![usize::MAX; r];
    outer_of[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for (lf, reg) in local[c].iter().enumerate() {
            if c != 0 && lf == outer_of[c] {
                continue;
            }
            for &(d, dlf) in &region_members[reg] {
                if d == c || outer_of[d] != usize::MAX {
                    continue;
                }
                outer_of[d] = dlf;
                containment[d] = Some(Placement {
                    parent: c,
                    face: lf,
                    outer: dlf,
                });
                queue.push_back(d);
            }
        }
    }

    // colors in the order the map numbers its global faces
    let mut seen_regions = BTreeSet::new();
    let mut colors = Vec::new();
    for lfs in &local {
        for &reg in lfs {
            if seen_regions.insert(reg) {
                colors.push(if black[reg] { Color::Black } else { Color::White });
            }
        }
    }
    let g = EmbeddedColoredGraph::new(rotation, containment, vec![0], colors)
        .expect("face sets of a triangulation give valid maps");
    debug_assert!(g.faces().iter().all(|f| {
        let regs: BTreeSet<usize> = f.pieces.iter().map(|&(c, lf)| local[c][lf]).collect();
        regs.len() == 1
    }));
    Some(g)
}

/// Every colored map on `m` vertices, up to isomorphism but with repeats,
/// `3 <= m <= 8`. Both colorings of each underlying embedding appear.
pub fn exhaustive_maps(m: usize) -> Result<Vec<EmbeddedColoredGraph>> {
    if !(3..=EXHAUSTIVE_CAP).contains(&m) {
        return Err(out_of_range(format!(
            "exhaustive maps need 3 <= m <= {EXHAUSTIVE_CAP}, got {m}"
        )));
    }
    let mut out = Vec::new();
    for tri in triangulations_up_to_isomorphism(m)? {
        let f = tri.faces().len();
        for mask in 0u32..(1 << f) {
            let black: Vec<bool> = (0..f).map(|i| mask >> i & 1 == 1).collect();
            if let Some(g) = map_from_face_set(&tri, &black) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

const RETRY_CAP: usize = 200;

/// A random member of the colored-map family on `m >= 3` vertices. Disjoint
/// components, nested in each other's faces, arise when the black faces
/// split the triangulation that way.
pub fn generate_random_colored_map(m: usize, seed: u64) -> Result<EmbeddedColoredGraph> {
    if m < 3 {
        return Err(out_of_range(format!("colored maps need m >= 3, got {m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_CAP {
        let tri = random_triangulation(m, &mut rng)?;
        let f = tri.faces().len();
        let density = rng.gen_range(0.2..0.8);
        let mut black: Vec<bool> = (0..f).map(|_| rng.gen_bool(density)).collect();
        let stars: Vec<Vec<usize>> = (0..m)
            .map(|v| (0..f).filter(|&i| tri.faces()[i].contains(&v)).collect())
            .collect();
        // a vertex whose faces all share a color would be isolated
        for _ in 0..20 * m {
            let flat: Vec<usize> = (0..m)
                .filter(|&v| stars[v].iter().all(|&i| black[i] == black[stars[v][0]]))
                .collect();
            if flat.is_empty() {
                break;
            }
            let v = flat[rng.gen_range(0..flat.len())];
            let i = stars[v][rng.gen_range(0..stars[v].len())];
            black[i] = !black[i];
        }
        if let Some(g) = map_from_face_set(&tri, &black) {
            return Ok(g);
        }
    }
    Err(Error::RetryCap(RETRY_CAP))
}

/// Edges of a random simple planar graph on `n` vertices: a random
/// triangulation with each edge kept with probability `keep`.
pub fn random_planar_edges(n: usize, keep: f64, seed: u64) -> Result<Vec<(usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tri = random_triangulation(n, &mut rng)?;
    Ok(tri.edges().into_iter().filter(|_| rng.gen_bool(keep)).collect())
}

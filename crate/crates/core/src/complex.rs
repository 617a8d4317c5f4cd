//! Labeled pure 2-dimensional simplicial complexes and the combinatorial
//! sphere recognizer.
//!
//! A complex is stored as its set of triangles over vertices `0..n`; edges and
//! vertices are implied. A triangle set is a 2-sphere exactly when every edge
//! lies in two triangles, every vertex link is a single cycle, the support is
//! connected and the Euler characteristic is 2.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A 2-simplex, stored as a strictly increasing vertex triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([usize; 3]);

impl Triangle {
    /// Builds the canonical (sorted) triangle. Fails on a repeated vertex.
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::DegenerateTriangle([a, b, c]));
        }
        Ok(Triangle(v))
    }

    /// Panicking constructor for literal fixtures.
    pub fn of(a: usize, b: usize, c: usize) -> Self {
        Self::new(a, b, c).expect("distinct vertices")
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn max_vertex(&self) -> usize {
        self.0[2]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// The three edges, each as an increasing pair.
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The edge opposite `v`, if `v` is a vertex of this triangle.
    pub fn opposite(&self, v: usize) -> Option<(usize, usize)> {
        let [a, b, c] = self.0;
        match v {
            _ if v == a => Some((b, c)),
            _ if v == b => Some((a, c)),
            _ if v == c => Some((a, b)),
            _ => None,
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        let [a, b, c] = self.0;
        Triangle::of(perm[a], perm[b], perm[c])
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "t {a} {b} {c}")
    }
}

/// Index of the triangle `{a<b<c}` in the lexicographic order of all
/// triples of `0..n`.
pub fn triangle_rank(n: usize, t: &Triangle) -> usize {
    // Count triples lexicographically smaller, one leading coordinate at a time.
    let [a, b, c] = t.0;
    let mut rank = 0;
    for x in 0..a {
        rank += binom2(n - x - 1);
    }
    for y in (a + 1)..b {
        rank += n - y - 1;
    }
    rank + (c - b - 1)
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// All `C(n,3)` triangles in lexicographic order.
pub fn all_triangles(n: usize) -> Vec<Triangle> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                out.push(Triangle([a, b, c]));
            }
        }
    }
    out
}

/// A pure 2-complex on the labeled vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complex2 {
    n: usize,
    triangles: BTreeSet<Triangle>,
}

impl Complex2 {
    pub fn empty(n: usize) -> Self {
        Complex2 {
            n,
            triangles: BTreeSet::new(),
        }
    }

    /// Builds a complex, rejecting duplicates and out-of-range vertices.
    pub fn new(n: usize, triangles: impl IntoIterator<Item = Triangle>) -> Result<Self> {
        let mut c = Complex2::empty(n);
        for t in triangles {
            c.insert(t)?;
        }
        Ok(c)
    }

    /// The complete complex: every triple of `0..n`.
    pub fn complete(n: usize) -> Self {
        Complex2 {
            n,
            triangles: all_triangles(n).into_iter().collect(),
        }
    }

    pub fn insert(&mut self, t: Triangle) -> Result<()> {
        if t.max_vertex() >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: t.max_vertex(),
                n: self.n,
            });
        }
        if !self.triangles.insert(t) {
            return Err(Error::DuplicateTriangle(t.0));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangles(&self) -> &BTreeSet<Triangle> {
        &self.triangles
    }

    pub fn contains(&self, t: &Triangle) -> bool {
        self.triangles.contains(t)
    }

    /// Vertex-relabeled copy; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Complex2 {
        Complex2 {
            n: self.n,
            triangles: self.triangles.iter().map(|t| t.relabel(perm)).collect(),
        }
    }

    /// Number of triangles containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for t in &self.triangles {
            for v in t.0 {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Parses the line-oriented text format (`n <N>` then `t <i> <j> <k>` lines).
    pub fn parse(text: &str) -> Result<Self> {
        let mut complex: Option<Complex2> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: line_no,
                msg: msg.to_string(),
            };
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("n") => {
                    if complex.is_some() {
                        return Err(parse_err("repeated `n` line"));
                    }
                    let n = tokens
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| parse_err("expected `n <N>`"))?;
                    if tokens.next().is_some() {
                        return Err(parse_err("trailing tokens"));
                    }
                    complex = Some(Complex2::empty(n));
                }
                Some("t") => {
                    let c = complex
                        .as_mut()
                        .ok_or_else(|| parse_err("triangle before `n` line"))?;
                    let idx: Vec<usize> = tokens
                        .map(|s| s.parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| parse_err("non-integer vertex"))?;
                    if idx.len() != 3 {
                        return Err(parse_err("expected `t <i> <j> <k>`"));
                    }
                    if !(idx[0] < idx[1] && idx[1] < idx[2]) {
                        return Err(parse_err("vertices must satisfy i < j < k"));
                    }
                    c.insert(Triangle([idx[0], idx[1], idx[2]]))
                        .map_err(|e| parse_err(&e.to_string()))?;
                }
                Some(other) => return Err(parse_err(&format!("unknown record `{other}`"))),
                None => unreachable!(),
            }
        }
        complex.ok_or(Error::Parse {
            line: 0,
            msg: "missing `n` line".into(),
        })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Complex2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for t in &self.triangles {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Complex2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Complex2::parse(s)
    }
}

/// Maps each edge of a triangle set to the number of triangles containing it.
pub fn edge_multiset<'a>(
    triangles: impl IntoIterator<Item = &'a Triangle>,
) -> BTreeMap<(usize, usize), usize> {
    let mut edges = BTreeMap::new();
    for t in triangles {
        for e in t.edges() {
            *edges.entry(e).or_insert(0) += 1;
        }
    }
    edges
}

/// `V - E + F` of the subcomplex generated by `triangles`.
pub fn euler_characteristic<'a>(triangles: impl IntoIterator<Item = &'a Triangle>) -> i64 {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut faces = 0i64;
    for t in triangles {
        faces += 1;
        vertices.extend(t.0);
        edges.extend(t.edges());
    }
    vertices.len() as i64 - edges.len() as i64 + faces
}

/// The link of a vertex: a simple graph on the neighbors of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkGraph {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl LinkGraph {
    /// True iff the graph is one cycle through all of its vertices.
    pub fn is_cycle(&self) -> bool {
        if self.vertices.len() < 3 || self.edges.len() != self.vertices.len() {
            return false;
        }
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        deg.values().all(|&d| d == 2) && self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(index.len());
        for &(a, b) in &self.edges {
            uf.union(index[&a], index[&b]);
        }
        uf.count()
    }
}

pub fn vertex_link(c: &Complex2, v: usize) -> Result<LinkGraph> {
    if v >= c.n {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.n });
    }
    Ok(link_of(c.triangles.iter(), v))
}

fn link_of<'a>(triangles: impl Iterator<Item = &'a Triangle>, v: usize) -> LinkGraph {
    let mut link = LinkGraph::default();
    for t in triangles {
        if let Some((a, b)) = t.opposite(v) {
            link.vertices.insert(a);
            link.vertices.insert(b);
            link.edges.insert((a, b));
        }
    }
    link
}

/// Why a triangle set failed to be a (spanning) 2-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// Some edge does not lie in exactly two triangles.
    NotPureDegree {
        edge: (usize, usize),
        degree: usize,
    },
    LinkNotCycle(usize),
    Disconnected,
    WrongEuler(i64),
    NotSpanning(usize),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::NotPureDegree { edge, degree } => {
                write!(f, "NOT_PURE_DEGREE({}-{} in {degree})", edge.0, edge.1)
            }
            FailureReason::LinkNotCycle(v) => write!(f, "LINK_NOT_CYCLE({v})"),
            FailureReason::Disconnected => write!(f, "DISCONNECTED"),
            FailureReason::WrongEuler(chi) => write!(f, "WRONG_EULER({chi})"),
            FailureReason::NotSpanning(v) => write!(f, "NOT_SPANNING({v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub is_sphere: bool,
    pub vertices_used: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub failure_reason: Option<FailureReason>,
}

/// Tests whether the triangles of `c` form a closed connected surface with
/// Euler characteristic 2. Unused vertices of `c` are ignored.
///
/// The conditions are checked in a fixed order (edge degree, links,
/// connectivity, Euler) and the first violated one is reported.
pub fn check_closed_surface(c: &Complex2) -> SurfaceReport {
    let edges = edge_multiset(&c.triangles);
    let used: BTreeSet<usize> = c.triangles.iter().flat_map(|t| t.0).collect();
    let chi = used.len() as i64 - edges.len() as i64 + c.triangles.len() as i64;
    let mut report = SurfaceReport {
        is_sphere: false,
        vertices_used: used.len(),
        edges: edges.len(),
        faces: c.triangles.len(),
        euler_characteristic: chi,
        failure_reason: None,
    };

    let reason = if let Some((&edge, &degree)) = edges.iter().find(|(_, &d)| d != 2) {
        Some(FailureReason::NotPureDegree { edge, degree })
    } else if let Some(&v) = used.iter().find(|&&v| !link_of(c.triangles.iter(), v).is_cycle()) {
        Some(FailureReason::LinkNotCycle(v))
    } else if !support_connected(c, &used) {
        Some(FailureReason::Disconnected)
    } else if chi != 2 {
        Some(FailureReason::WrongEuler(chi))
    } else {
        None
    };
    report.is_sphere = reason.is_none();
    report.failure_reason = reason;
    report
}

fn support_connected(c: &Complex2, used: &BTreeSet<usize>) -> bool {
    if used.is_empty() {
        return true;
    }
    let mut uf = UnionFind::new(c.n);
    for t in &c.triangles {
        let [a, b, d] = t.0;
        uf.union(a, b);
        uf.union(a, d);
    }
    let root = uf.find(*used.iter().next().unwrap());
    used.iter().all(|&v| uf.find(v) == root)
}

/// Like [`check_closed_surface`] but additionally requires every vertex of
/// `0..n` to be used.
pub fn check_spanning_sphere(c: &Complex2) -> SurfaceReport {
    let mut report = check_closed_surface(c);
    if report.is_sphere {
        let mut seen = vec![false; c.n];
        for t in &c.triangles {
            for v in t.0 {
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            report.is_sphere = false;
            report.failure_reason = Some(FailureReason::NotSpanning(v));
        }
    }
    report
}

/// True iff `s` triangulates a 2-sphere using every vertex of `0..n`.
pub fn is_spanning_sphere<'a>(n: usize, s: impl IntoIterator<Item = &'a Triangle>) -> bool {
    match Complex2::new(n, s.into_iter().copied()) {
        Ok(c) => check_spanning_sphere(&c).is_sphere,
        Err(_) => false,
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.components
    }
}

/// Standard small complexes used as fixtures in tests and examples.
pub mod known {
    use super::{Complex2, Triangle};

    fn build(n: usize, tris: impl IntoIterator<Item = (usize, usize, usize)>) -> Complex2 {
        Complex2::new(n, tris.into_iter().map(|(a, b, c)| Triangle::of(a, b, c)))
            .expect("fixture is a valid complex")
    }

    /// Boundary of the tetrahedron on `{0,1,2,3}`.
    pub fn tetrahedron() -> Complex2 {
        build(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    }

    /// Suspension of the triangle `base` with apexes `apexes`, on `n` vertices.
    pub fn bipyramid(n: usize, apexes: [usize; 2], base: [usize; 3]) -> Complex2 {
        let [x, y, z] = base;
        build(n, apexes.iter().flat_map(|&a| [(a, x, y), (a, y, z), (a, x, z)]))
    }

    /// Octahedron: apexes 4 and 5 over the 4-cycle 0-1-2-3.
    pub fn octahedron() -> Complex2 {
        build(
            6,
            [4usize, 5]
                .iter()
                .flat_map(|&a| (0..4).map(move |i| (a, i, (i + 1) % 4))),
        )
    }

    /// Icosahedron: 0 on top, rings 1..=5 and 6..=10, 11 at the bottom.
    pub fn icosahedron() -> Complex2 {
        let up = |i: usize| 1 + i % 5;
        let lo = |i: usize| 6 + i % 5;
        let mut tris = Vec::new();
        for i in 0..5 {
            tris.push((0, up(i), up(i + 1)));
            tris.push((11, lo(i), lo(i + 1)));
            tris.push((up(i), up(i + 1), lo(i)));
            tris.push((up(i + 1), lo(i), lo(i + 1)));
        }
        build(12, tris)
    }

    /// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn csaszar_torus() -> Complex2 {
        build(
            7,
            (0..7).flat_map(|i| [(i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7)]),
        )
    }

    /// The 6-vertex real projective plane (hemi-icosahedron).
    pub fn projective_plane() -> Complex2 {
        build(
            6,
            [
                (0, 1, 2),
                (0, 2, 3),
                (0, 3, 4),
                (0, 4, 5),
                (0, 1, 5),
                (1, 2, 4),
                (2, 3, 5),
                (1, 3, 4),
                (2, 4, 5),
                (1, 3, 5),
            ],
        )
    }

    /// Two tetrahedron boundaries sharing only vertex 0.
    pub fn pinched_spheres() -> Complex2 {
        build(
            7,
            [
                (0, 1, 2),
                (0, 1, 3),
                (0, 2, 3),
                (1, 2, 3),
                (0, 4, 5),
                (0, 4, 6),
                (0, 5, 6),
                (4, 5, 6),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::known::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(tetrahedron().triangles()), 2);
        assert_eq!(euler_characteristic([Triangle::of(0, 1, 2)].iter()), 1);
        let torus = csaszar_torus();
        assert_eq!(torus.len(), 14);
        assert_eq!(edge_multiset(torus.triangles()).len(), 21);
        assert_eq!(euler_characteristic(torus.triangles()), 0);
        assert_eq!(euler_characteristic([].iter()), 0);
    }

    #[test]
    fn links() {
        let l = vertex_link(&tetrahedron(), 0).unwrap();
        assert_eq!(l.vertices, BTreeSet::from([1, 2, 3]));
        assert!(l.is_cycle());

        let single = Complex2::new(3, [Triangle::of(0, 1, 2)]).unwrap();
        let l = vertex_link(&single, 0).unwrap();
        assert_eq!(l.edges, BTreeSet::from([(1, 2)]));
        assert!(!l.is_cycle());

        let oct = octahedron();
        for v in 0..6 {
            let l = vertex_link(&oct, v).unwrap();
            assert_eq!(l.vertices.len(), 4);
            assert!(l.is_cycle());
        }
        assert!(vertex_link(&oct, 6).is_err());
    }

    #[test]
    fn recognizer_examples() {
        for c in [tetrahedron(), octahedron(), icosahedron()] {
            let r = check_closed_surface(&c);
            assert!(r.is_sphere, "{r:?}");
            assert_eq!(r.euler_characteristic, 2);
            assert_eq!(r.faces, 2 * r.vertices_used - 4);
        }
        let r = check_closed_surface(&csaszar_torus());
        assert_eq!(r.failure_reason, Some(FailureReason::WrongEuler(0)));
        let r = check_closed_surface(&projective_plane());
        assert_eq!(r.failure_reason, Some(FailureReason::WrongEuler(1)));
        let r = check_closed_surface(&pinched_spheres());
        assert_eq!(r.failure_reason, Some(FailureReason::LinkNotCycle(0)));

        let single = Complex2::new(3, [Triangle::of(0, 1, 2)]).unwrap();
        assert!(matches!(
            check_closed_surface(&single).failure_reason,
            Some(FailureReason::NotPureDegree { .. })
        ));
        let mut two = tetrahedron().triangles().clone();
        two.extend([
            Triangle::of(4, 5, 6),
            Triangle::of(4, 5, 7),
            Triangle::of(4, 6, 7),
            Triangle::of(5, 6, 7),
        ]);
        let two = Complex2::new(8, two).unwrap();
        assert_eq!(
            check_closed_surface(&two).failure_reason,
            Some(FailureReason::Disconnected)
        );
    }

    #[test]
    fn spanning_examples() {
        assert!(is_spanning_sphere(4, tetrahedron().triangles()));
        assert!(!is_spanning_sphere(5, tetrahedron().triangles()));
        let padded = Complex2::new(5, tetrahedron().triangles().iter().copied()).unwrap();
        assert_eq!(
            check_spanning_sphere(&padded).failure_reason,
            Some(FailureReason::NotSpanning(4))
        );
        let bp = bipyramid(5, [3, 4], [0, 1, 2]);
        assert_eq!(bp.len(), 6);
        assert!(is_spanning_sphere(5, bp.triangles()));
    }

    #[test]
    fn removing_a_triangle_breaks_sphere() {
        for c in [tetrahedron(), octahedron(), icosahedron()] {
            for t in c.triangles() {
                let mut s = c.triangles().clone();
                s.remove(t);
                let r = check_closed_surface(&Complex2::new(c.n(), s).unwrap());
                assert!(matches!(
                    r.failure_reason,
                    Some(FailureReason::NotPureDegree { .. })
                ));
            }
        }
    }

    #[test]
    fn rank_matches_lexicographic_order() {
        for n in 3..9 {
            for (i, t) in all_triangles(n).iter().enumerate() {
                assert_eq!(triangle_rank(n, t), i);
            }
        }
    }

    #[test]
    fn text_format() {
        let c = icosahedron();
        let back = Complex2::parse(&c.to_text()).unwrap();
        assert_eq!(back, c);
        let with_comments = "# header\nn 4  # four vertices\n\nt 0 1 2\nt 0 1 3 # x\n";
        assert_eq!(Complex2::parse(with_comments).unwrap().len(), 2);
        assert!(Complex2::parse("n 4\nt 0 1 2\nt 0 1 2\n").is_err());
        assert!(Complex2::parse("n 4\nt 0 1 4\n").is_err());
        assert!(Complex2::parse("n 4\nt 1 0 2\n").is_err());
        assert!(Complex2::parse("t 0 1 2\n").is_err());
        assert!(Complex2::parse("").is_err());
    }

    fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn recognizer_is_relabeling_invariant(perm in permutation(12), which in 0usize..4) {
            let c = match which {
                0 => icosahedron(),
                1 => csaszar_torus(),
                2 => pinched_spheres(),
                _ => projective_plane(),
            };
            let n = c.n();
            let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
            let a = check_closed_surface(&c);
            let b = check_closed_surface(&c.relabel(&perm));
            prop_assert_eq!(a.is_sphere, b.is_sphere);
            prop_assert_eq!(a.euler_characteristic, b.euler_characteristic);
            prop_assert_eq!(
                std::mem::discriminant(&a.failure_reason),
                std::mem::discriminant(&b.failure_reason)
            );
        }

        #[test]
        fn euler_is_additive_over_disjoint_union(shift in 4usize..10) {
            let a = octahedron();
            let b = csaszar_torus();
            let shifted: Vec<Triangle> = b
                .triangles()
                .iter()
                .map(|t| {
                    let [x, y, z] = t.vertices();
                    Triangle::of(x + 6 + shift, y + 6 + shift, z + 6 + shift)
                })
                .collect();
            let union: Vec<Triangle> = a.triangles().iter().copied().chain(shifted).collect();
            prop_assert_eq!(
                euler_characteristic(union.iter()),
                euler_characteristic(a.triangles()) + euler_characteristic(b.triangles())
            );
        }
    }
}

//! Complete search for a spanning sphere inside a 2-complex.
//!
//! The search fixes a root vertex of minimum degree and branches over its
//! incident triangles, excluding earlier branches. The rest of the sphere is
//! grown by filling open discs: every open disc is bounded by a simple cycle,
//! and each step closes one boundary edge with a triangle whose third vertex
//! is either new or on the same cycle. The edge with the fewest options goes
//! first.

use std::fmt;
use std::time::{Duration, Instant};

use crate::complex::{is_spanning_sphere, Complex2, Triangle};

/// Default node limit used by the CLI and sweeps.
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_NODE_LIMIT,
            max_time: None,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            max_time: None,
        }
    }

    pub fn unlimited() -> Self {
        Self::nodes(u64::MAX)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<Triangle>),
    NotFound,
    Timeout,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "FOUND",
            SearchOutcome::NotFound => "NOT_FOUND",
            SearchOutcome::Timeout => "TIMEOUT",
        }
    }

    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            SearchOutcome::Found(_) => 0,
            SearchOutcome::NotFound => 1,
            SearchOutcome::Timeout => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
    /// Set when the answer came from [`quick_reject`] without searching.
    pub rejected: Option<RejectReason>,
}

impl SearchResult {
    pub fn found(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Found(_))
    }

    pub fn is_timeout(&self) -> bool {
        self.outcome == SearchOutcome::Timeout
    }

    pub fn witness(&self) -> Option<&[Triangle]> {
        match &self.outcome {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// A certificate that no spanning sphere exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    TooFewVertices(usize),
    TooFewTriangles { have: usize, need: usize },
    LowDegree { vertex: usize, triangles: usize },
    FewNeighbors { vertex: usize, neighbors: usize },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::TooFewVertices(n) => write!(f, "only {n} vertices"),
            RejectReason::TooFewTriangles { have, need } => {
                write!(f, "{have} triangles, a spanning sphere needs {need}")
            }
            RejectReason::LowDegree { vertex, triangles } => {
                write!(f, "vertex {vertex} lies in {triangles} triangles")
            }
            RejectReason::FewNeighbors { vertex, neighbors } => {
                write!(f, "vertex {vertex} has {neighbors} neighbors")
            }
        }
    }
}

/// Cheap necessary conditions for a spanning sphere.
pub fn quick_reject(c: &Complex2) -> Option<RejectReason> {
    let n = c.n();
    if n < 4 {
        return Some(RejectReason::TooFewVertices(n));
    }
    if c.len() < 2 * n - 4 {
        return Some(RejectReason::TooFewTriangles {
            have: c.len(),
            need: 2 * n - 4,
        });
    }
    let degrees = c.vertex_degrees();
    if let Some((v, &d)) = degrees.iter().enumerate().find(|(_, &d)| d < 3) {
        return Some(RejectReason::LowDegree {
            vertex: v,
            triangles: d,
        });
    }
    let mut nbrs = vec![vec![false; n]; n];
    for t in c.triangles() {
        let [a, b, d] = t.vertices();
        for (x, y) in [(a, b), (a, d), (b, d)] {
            nbrs[x][y] = true;
            nbrs[y][x] = true;
        }
    }
    for (v, row) in nbrs.iter().enumerate() {
        let k = row.iter().filter(|&&b| b).count();
        if k < 3 {
            return Some(RejectReason::FewNeighbors {
                vertex: v,
                neighbors: k,
            });
        }
    }
    None
}

/// Decides whether `c` contains a spanning sphere, within `budget`.
pub fn find_spanning_sphere(c: &Complex2, budget: SearchBudget) -> SearchResult {
    let start = Instant::now();
    if let Some(reason) = quick_reject(c) {
        return SearchResult {
            outcome: SearchOutcome::NotFound,
            stats: SearchStats {
                elapsed: start.elapsed(),
                ..Default::default()
            },
            rejected: Some(reason),
        };
    }
    let mut s = Search::new(c, budget, start);
    let outcome = s.run();
    if let SearchOutcome::Found(w) = &outcome {
        assert!(is_spanning_sphere(c.n(), w), "search produced an invalid witness");
    }
    SearchResult {
        outcome,
        stats: SearchStats {
            nodes: s.nodes,
            max_depth: s.max_depth,
            elapsed: start.elapsed(),
        },
        rejected: None,
    }
}

enum Step {
    Found,
    Exhausted,
    Timeout,
}

struct Search {
    n: usize,
    /// Sorted third vertices of the input triangles on each edge `u*n+v`.
    thirds: Vec<Vec<usize>>,
    present: std::collections::HashSet<Triangle>,
    /// Root triangles already ruled out.
    excluded: std::collections::HashSet<Triangle>,
    placed: Vec<Triangle>,
    placed_set: std::collections::HashSet<Triangle>,
    edge_use: Vec<u8>,
    /// Input triangles at each vertex.
    stars: Vec<Vec<Triangle>>,
    vertex_use: Vec<u32>,
    used: Vec<bool>,
    unused_count: usize,
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    max_depth: usize,
}

impl Search {
    fn new(c: &Complex2, budget: SearchBudget, start: Instant) -> Self {
        let n = c.n();
        let mut thirds = vec![Vec::new(); n * n];
        for t in c.triangles() {
            let [a, b, d] = t.vertices();
            for (x, y, z) in [(a, b, d), (a, d, b), (b, d, a)] {
                thirds[x * n + y].push(z);
                thirds[y * n + x].push(z);
            }
        }
        for l in &mut thirds {
            l.sort_unstable();
        }
        let mut stars = vec![Vec::new(); n];
        for t in c.triangles() {
            for v in t.vertices() {
                stars[v].push(*t);
            }
        }
        Search {
            n,
            thirds,
            present: c.triangles().iter().copied().collect(),
            excluded: Default::default(),
            placed: Vec::new(),
            placed_set: Default::default(),
            edge_use: vec![0; n * n],
            stars,
            vertex_use: vec![0; n],
            used: vec![false; n],
            unused_count: n,
            budget,
            start,
            nodes: 0,
            max_depth: 0,
        }
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.n + a.max(b)
    }

    fn run(&mut self) -> SearchOutcome {
        let degrees = {
            let mut d = vec![0usize; self.n];
            for t in &self.present {
                for v in t.vertices() {
                    d[v] += 1;
                }
            }
            d
        };
        let root = (0..self.n).min_by_key(|&v| (degrees[v], v)).unwrap();
        let mut roots: Vec<Triangle> = self
            .present
            .iter()
            .filter(|t| t.contains(root))
            .copied()
            .collect();
        roots.sort_unstable();
        for t in roots {
            self.place(t);
            let [a, b, d] = t.vertices();
            // the open region is everything but t, bounded by t reversed
            let regions = vec![vec![a, d, b]];
            let step = self.fill(regions, 1);
            if let Step::Found = step {
                let mut w = self.placed.clone();
                w.sort_unstable();
                return SearchOutcome::Found(w);
            }
            self.unplace(t);
            if let Step::Timeout = step {
                return SearchOutcome::Timeout;
            }
            self.excluded.insert(t);
        }
        SearchOutcome::NotFound
    }

    fn place(&mut self, t: Triangle) {
        self.placed.push(t);
        self.placed_set.insert(t);
        for (a, b) in t.edges() {
            let e = self.edge(a, b);
            self.edge_use[e] += 1;
        }
        for v in t.vertices() {
            self.vertex_use[v] += 1;
            if !self.used[v] {
                self.used[v] = true;
                self.unused_count -= 1;
            }
        }
    }

    fn unplace(&mut self, t: Triangle) {
        self.placed.pop();
        self.placed_set.remove(&t);
        for (a, b) in t.edges() {
            let e = self.edge(a, b);
            self.edge_use[e] -= 1;
        }
        for v in t.vertices() {
            self.vertex_use[v] -= 1;
            if self.vertex_use[v] == 0 {
                self.used[v] = false;
                self.unused_count += 1;
            }
        }
    }

    fn available(&self, t: &Triangle) -> bool {
        !self.placed_set.contains(t) && !self.excluded.contains(t)
    }

    /// Third vertices that may close edge `cyc[j] -> cyc[j+1]` of `cyc`,
    /// with their position on the cycle (or `None` for a new vertex).
    fn candidates(&self, cyc: &[usize], j: usize) -> Vec<(usize, Option<usize>)> {
        let len = cyc.len();
        let u = cyc[j];
        let v = cyc[(j + 1) % len];
        let prev = cyc[(j + len - 1) % len];
        let next = cyc[(j + 2) % len];
        let mut out = Vec::new();
        for &w in &self.thirds[u * self.n + v] {
            let t = Triangle::of(u, v, w);
            if !self.available(&t) {
                continue;
            }
            if !self.used[w] {
                out.push((w, None));
                continue;
            }
            let Some(pos) = cyc.iter().position(|&x| x == w) else {
                continue;
            };
            let uw_ok = w == prev || self.edge_use[self.edge(u, w)] == 0;
            let vw_ok = w == next || self.edge_use[self.edge(v, w)] == 0;
            if uw_ok && vw_ok {
                out.push((w, Some(pos)));
            }
        }
        out
    }

    /// Each new vertex needs three usable triangles whose other corners are
    /// still open.
    fn unused_vertices_reachable(&self, regions: &[Vec<usize>]) -> bool {
        if self.unused_count == 0 {
            return true;
        }
        let mut open = vec![false; self.n];
        for c in regions {
            for &v in c {
                open[v] = true;
            }
        }
        for x in (0..self.n).filter(|&x| !self.used[x]) {
            let usable = self.stars[x]
                .iter()
                .filter(|t| {
                    let (y, z) = t.opposite(x).expect("star triangle");
                    (!self.used[y] || open[y])
                        && (!self.used[z] || open[z])
                        && self.edge_use[self.edge(y, z)] < 2
                        && !self.excluded.contains(t)
                })
                .take(3)
                .count();
            if usable < 3 {
                return false;
            }
        }
        true
    }

    fn fill(&mut self, regions: Vec<Vec<usize>>, depth: usize) -> Step {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        if self.nodes > self.budget.max_nodes {
            return Step::Timeout;
        }
        if let Some(limit) = self.budget.max_time {
            if self.nodes % 1024 == 0 && self.start.elapsed() > limit {
                return Step::Timeout;
            }
        }
        let open: Vec<Vec<usize>> = regions.into_iter().filter(|c| c.len() > 2).collect();
        if open.is_empty() {
            return if self.unused_count == 0 {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        if !self.unused_vertices_reachable(&open) {
            return Step::Exhausted;
        }

        // fail-first: the boundary edge with the fewest closing triangles
        let mut best: Option<(usize, usize, Vec<(usize, Option<usize>)>)> = None;
        'outer: for (ri, cyc) in open.iter().enumerate() {
            for j in 0..cyc.len() {
                let cands = self.candidates(cyc, j);
                let better = best.as_ref().map_or(true, |b| cands.len() < b.2.len());
                if better {
                    let empty = cands.is_empty();
                    best = Some((ri, j, cands));
                    if empty {
                        break 'outer;
                    }
                }
            }
        }
        let (ri, j, cands) = best.expect("open regions have edges");
        if cands.is_empty() {
            return Step::Exhausted;
        }
        let cyc = &open[ri];
        let len = cyc.len();
        // rotate so the chosen edge starts the cycle
        let rot: Vec<usize> = (0..len).map(|i| cyc[(j + i) % len]).collect();
        let (u, v) = (rot[0], rot[1]);
        for (w, pos) in cands {
            let t = Triangle::of(u, v, w);
            let mut next: Vec<Vec<usize>> = open
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != ri)
                .map(|(_, c)| c.clone())
                .collect();
            match pos {
                None => {
                    let mut grown = rot.clone();
                    grown.insert(1, w);
                    next.push(grown);
                }
                Some(_) => {
                    let i = rot.iter().position(|&x| x == w).unwrap();
                    next.push(rot[1..=i].to_vec());
                    let mut right = rot[i..].to_vec();
                    right.push(u);
                    next.push(right);
                }
            }
            self.place(t);
            let step = self.fill(next, depth + 1);
            if let Step::Found = step {
                return step;
            }
            self.unplace(t);
            if let Step::Timeout = step {
                return step;
            }
        }
        Step::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::known;
    use crate::complex::triangle_rank;
    use crate::moments::{sample_complex, sphere_masks, Seed};

    #[test]
    fn complete_complex_on_five() {
        let r = find_spanning_sphere(&Complex2::complete(5), SearchBudget::default());
        let w = r.witness().unwrap();
        assert_eq!(w.len(), 6);
        assert!(is_spanning_sphere(5, w));
    }

    #[test]
    fn single_bipyramid_is_its_own_witness() {
        let b = known::bipyramid(5, [0, 4], [1, 2, 3]);
        let r = find_spanning_sphere(&b, SearchBudget::default());
        assert_eq!(
            r.witness().unwrap(),
            b.triangles().iter().copied().collect::<Vec<_>>().as_slice()
        );
    }

    #[test]
    fn isolated_vertex_blocks_sphere() {
        let mut c = Complex2::empty(5);
        for t in known::tetrahedron().triangles() {
            c.insert(*t).unwrap();
        }
        let r = find_spanning_sphere(&c, SearchBudget::default());
        assert_eq!(r.outcome, SearchOutcome::NotFound);
        assert_eq!(r.outcome.exit_code(), 1);
    }

    #[test]
    fn quick_reject_examples() {
        let mut c = Complex2::empty(6);
        for t in crate::complex::all_triangles(6).into_iter().take(7) {
            c.insert(t).unwrap();
        }
        assert_eq!(
            quick_reject(&c),
            Some(RejectReason::TooFewTriangles { have: 7, need: 8 })
        );
        assert!(quick_reject(&Complex2::complete(7)).is_none());
        let mut c = Complex2::complete(6);
        // leave vertex 5 in exactly two triangles
        let keep = [Triangle::of(0, 1, 5), Triangle::of(1, 2, 5)];
        for t in crate::complex::all_triangles(6) {
            if t.contains(5) && !keep.contains(&t) {
                c = Complex2::new(6, c.triangles().iter().copied().filter(|x| *x != t)).unwrap();
            }
        }
        assert!(matches!(
            quick_reject(&c),
            Some(RejectReason::LowDegree {
                vertex: 5,
                triangles: 2
            })
        ));
    }

    #[test]
    fn finds_known_spheres_and_rejects_surfaces() {
        for s in [known::octahedron(), known::icosahedron()] {
            assert!(find_spanning_sphere(&s, SearchBudget::default()).found());
        }
        // a torus and a projective plane have the wrong triangle count
        assert!(!find_spanning_sphere(&known::csaszar_torus(), SearchBudget::default()).found());
        assert!(!find_spanning_sphere(&known::projective_plane(), SearchBudget::default()).found());
    }

    #[test]
    fn tiny_budget_times_out() {
        let r = find_spanning_sphere(&Complex2::complete(9), SearchBudget::nodes(2));
        assert!(r.found() || r.is_timeout());
        let r = find_spanning_sphere(&Complex2::complete(12), SearchBudget::nodes(3));
        assert!(r.is_timeout());
        assert_eq!(r.outcome.exit_code(), 2);
    }

    fn oracle(c: &Complex2) -> bool {
        let n = c.n();
        let mask = c
            .triangles()
            .iter()
            .fold(0u64, |m, t| m | 1 << triangle_rank(n, t));
        sphere_masks(n).unwrap().iter().any(|&s| s & mask == s)
    }

    #[test]
    fn agrees_with_enumeration_on_random_complexes() {
        for n in 4..=6 {
            for (pi, p) in [0.3, 0.5, 0.7, 0.9].into_iter().enumerate() {
                for t in 0..250 {
                    let c = sample_complex(n, p, Seed::new(pi as u64).trial(t)).unwrap();
                    let r = find_spanning_sphere(&c, SearchBudget::unlimited());
                    assert_eq!(r.found(), oracle(&c), "n={n} p={p} trial={t}\n{c}");
                    if quick_reject(&c).is_some() {
                        assert!(!oracle(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let c = sample_complex(10, 0.6, Seed::new(5)).unwrap();
        let a = find_spanning_sphere(&c, SearchBudget::default());
        let b = find_spanning_sphere(&c, SearchBudget::default());
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }
}

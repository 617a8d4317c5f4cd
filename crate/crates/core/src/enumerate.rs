//! Brute-force oracles: labeled sphere triangulations, triangulated polygons
//! with labeled interior points, and triangulated annuli.
//!
//! Spheres come from an include/exclude search over all triples with edge
//! degree pruning. Discs and annuli come from a region-filling recursion that
//! repeatedly closes the first free edge of a boundary cycle. The two code
//! paths share nothing but the recognizer used to validate their output.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;

use crate::complex::{all_triangles, is_spanning_sphere, Complex2, Triangle};
use crate::counts::polygon_triangulation_count;
use crate::error::{out_of_range, Result};

/// Largest `n` accepted by [`enumerate_labeled_spheres`].
pub const SPHERE_CAP: usize = 7;
/// Largest `n` accepted by [`enumerate_labeled_spheres_extended`].
pub const SPHERE_CAP_EXTENDED: usize = 8;

/// All triangulations of the 2-sphere on the labeled vertex set `0..n`,
/// `4 <= n <= 7`.
pub fn enumerate_labeled_spheres(n: usize) -> Result<Vec<Complex2>> {
    if !(4..=SPHERE_CAP).contains(&n) {
        return Err(out_of_range(format!(
            "sphere enumeration needs 4 <= n <= {SPHERE_CAP}, got {n}"
        )));
    }
    Ok(sphere_search(n))
}

/// As [`enumerate_labeled_spheres`], additionally allowing `n = 8`.
pub fn enumerate_labeled_spheres_extended(n: usize) -> Result<Vec<Complex2>> {
    if !(4..=SPHERE_CAP_EXTENDED).contains(&n) {
        return Err(out_of_range(format!(
            "sphere enumeration needs 4 <= n <= {SPHERE_CAP_EXTENDED}, got {n}"
        )));
    }
    Ok(sphere_search(n))
}

/// Filters every `(2n-4)`-subset of triples through the recognizer. Only
/// practical for `n <= 6`.
pub fn enumerate_spheres_naive(n: usize) -> Result<Vec<Complex2>> {
    if !(4..=6).contains(&n) {
        return Err(out_of_range(format!(
            "naive enumeration needs 4 <= n <= 6, got {n}"
        )));
    }
    let all = all_triangles(n);
    let size = 2 * n - 4;
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        let chosen: Vec<Triangle> = pick.iter().map(|&i| all[i]).collect();
        if is_spanning_sphere(n, &chosen) {
            out.push(Complex2::new(n, chosen).unwrap());
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pick[i] < all.len() - size + i {
                break;
            }
        }
        pick[i] += 1;
        for j in (i + 1)..size {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

struct SphereSearch {
    n: usize,
    triangles: Vec<Triangle>,
    /// Edge index of each of the three edges of each triangle.
    tri_edges: Vec<[usize; 3]>,
    edge_count: Vec<u8>,
    edge_open: Vec<u8>,
    vertex_count: Vec<u8>,
    vertex_open: Vec<u8>,
    chosen: Vec<usize>,
    target: usize,
    out: Vec<Complex2>,
}

fn edge_index(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

fn sphere_search(n: usize) -> Vec<Complex2> {
    let triangles = all_triangles(n);
    let tri_edges: Vec<[usize; 3]> = triangles
        .iter()
        .map(|t| t.edges().map(|(a, b)| edge_index(n, a, b)))
        .collect();
    let mut edge_open = vec![0u8; n * n];
    let mut vertex_open = vec![0u8; n];
    for (t, es) in triangles.iter().zip(&tri_edges) {
        for &e in es {
            edge_open[e] += 1;
        }
        for v in t.vertices() {
            vertex_open[v] += 1;
        }
    }
    let mut s = SphereSearch {
        n,
        triangles,
        tri_edges,
        edge_count: vec![0; n * n],
        edge_open,
        vertex_count: vec![0; n],
        vertex_open,
        chosen: Vec::new(),
        target: 2 * n - 4,
        out: Vec::new(),
    };
    s.descend(0);
    s.out
}

impl SphereSearch {
    fn descend(&mut self, idx: usize) {
        if self.chosen.len() == self.target {
            // every remaining triple is excluded; edges must all be closed
            if self.all_edges_closed() {
                let c = Complex2::new(self.n, self.chosen.iter().map(|&i| self.triangles[i]))
                    .expect("distinct triangles");
                if crate::complex::check_spanning_sphere(&c).is_sphere {
                    self.out.push(c);
                }
            }
            return;
        }
        if idx == self.triangles.len() || self.chosen.len() + (self.triangles.len() - idx) < self.target {
            return;
        }
        let es = self.tri_edges[idx];
        let vs = self.triangles[idx].vertices();
        for &e in &es {
            self.edge_open[e] -= 1;
        }
        for &v in &vs {
            self.vertex_open[v] -= 1;
        }

        // include
        if es.iter().all(|&e| self.edge_count[e] < 2) {
            for &e in &es {
                self.edge_count[e] += 1;
            }
            for &v in &vs {
                self.vertex_count[v] += 1;
            }
            self.chosen.push(idx);
            if self.locally_feasible(&es, &vs) {
                self.descend(idx + 1);
            }
            self.chosen.pop();
            for &e in &es {
                self.edge_count[e] -= 1;
            }
            for &v in &vs {
                self.vertex_count[v] -= 1;
            }
        }

        // exclude
        if self.locally_feasible(&es, &vs) {
            self.descend(idx + 1);
        }

        for &e in &es {
            self.edge_open[e] += 1;
        }
        for &v in &vs {
            self.vertex_open[v] += 1;
        }
    }

    /// Every touched edge can still end with degree 0 or 2 and every touched
    /// vertex can still reach three triangles.
    fn locally_feasible(&self, es: &[usize; 3], vs: &[usize; 3]) -> bool {
        es.iter().all(|&e| {
            let c = self.edge_count[e];
            c == 0 || c == 2 || self.edge_open[e] > 0
        }) && vs
            .iter()
            .all(|&v| self.vertex_count[v] + self.vertex_open[v] >= 3)
    }

    fn all_edges_closed(&self) -> bool {
        self.edge_count.iter().all(|&c| c == 0 || c == 2)
    }
}

/// A polygon with `m` boundary vertices `0..m` (in cyclic order) and `k`
/// labeled interior vertices `m..m+k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonInstance {
    pub m: usize,
    pub k: usize,
}

/// A sphere with holes of the given boundary lengths and `k` labeled interior
/// vertices. Hole `i` uses the next `holes[i]` labels; interior labels follow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoledSphereInstance {
    pub holes: Vec<usize>,
    pub k: usize,
}

impl HoledSphereInstance {
    pub fn vertex_count(&self) -> usize {
        self.holes.iter().sum::<usize>() + self.k
    }

    /// Boundary cycles, each oriented so the triangulated region lies on the
    /// same side.
    pub fn boundary_cycles(&self) -> Vec<Vec<usize>> {
        let mut start = 0;
        let mut cycles = Vec::new();
        for (i, &len) in self.holes.iter().enumerate() {
            let mut c: Vec<usize> = (start..start + len).collect();
            if i > 0 {
                c.reverse();
            }
            cycles.push(c);
            start += len;
        }
        cycles
    }

    /// `2k + sum m_i + 2l - 4`, the triangle count of every triangulation.
    pub fn triangle_count(&self) -> usize {
        2 * self.k + self.holes.iter().sum::<usize>() + 2 * self.holes.len() - 4
    }

    /// Caps each hole with a new apex vertex; the result is a spanning sphere
    /// exactly when `tris` triangulates this holed sphere.
    pub fn cap_holes(&self, tris: &[Triangle]) -> (usize, Vec<Triangle>) {
        let mut n = self.vertex_count();
        let mut all = tris.to_vec();
        for cycle in self.boundary_cycles() {
            let apex = n;
            n += 1;
            for i in 0..cycle.len() {
                all.push(Triangle::of(apex, cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
        (n, all)
    }
}

/// All triangulations (as sorted triangle lists) of the given polygon.
///
/// Caps: `3 <= m <= 6`, `k <= 3`.
pub fn enumerate_polygon_triangulations(inst: PolygonInstance) -> Result<Vec<Vec<Triangle>>> {
    if !(3..=6).contains(&inst.m) || inst.k > 3 {
        return Err(out_of_range(format!(
            "polygon enumeration caps are 3 <= m <= 6, k <= 3; got m = {}, k = {}",
            inst.m, inst.k
        )));
    }
    Ok(fill_holed_sphere(&HoledSphereInstance {
        holes: vec![inst.m],
        k: inst.k,
    }))
}

#[derive(Debug, Clone)]
pub struct AnnulusEnumeration {
    pub m1: usize,
    pub m2: usize,
    pub k: usize,
    pub triangulations: Vec<Vec<Triangle>>,
}

impl AnnulusEnumeration {
    pub fn count(&self) -> usize {
        self.triangulations.len()
    }
}

/// All triangulations of the annulus with outer boundary `m1`, inner boundary
/// `m2` and `k` labeled interior vertices. Caps: `m1, m2 in {3, 4}`, `k <= 2`.
pub fn enumerate_annulus_triangulations(m1: usize, m2: usize, k: usize) -> Result<AnnulusEnumeration> {
    if !(3..=4).contains(&m1) || !(3..=4).contains(&m2) || k > 2 {
        return Err(out_of_range(format!(
            "annulus caps are m1, m2 in {{3,4}}, k <= 2; got ({m1}, {m2}, {k})"
        )));
    }
    let triangulations = fill_holed_sphere(&HoledSphereInstance {
        holes: vec![m1, m2],
        k,
    });
    Ok(AnnulusEnumeration {
        m1,
        m2,
        k,
        triangulations,
    })
}

#[derive(Debug, Clone)]
pub struct InjectionReport {
    pub holds: bool,
    /// `(k+m2)(k+m2-1)...(k+1) / m2 * T(k; m1, m2)`, scaled by `m2`.
    pub lhs_times_m2: BigUint,
    /// `T(k+m2+1, m1)`, scaled by `m2`.
    pub rhs_times_m2: BigUint,
    pub annulus_count: usize,
}

/// Checks `[(k+m2)...(k+1) / m2] T(k; m1, m2) <= T(k+m2+1, m1)`, with the
/// annulus count from the enumerator and the disc count from the formula.
pub fn injection_inequality_check(m1: usize, m2: usize, k: usize) -> Result<InjectionReport> {
    let annulus = enumerate_annulus_triangulations(m1, m2, k)?;
    let falling: BigUint = ((k + 1)..=(k + m2)).map(BigUint::from).product();
    let lhs = falling * annulus.count();
    let rhs = polygon_triangulation_count((k + m2 + 1) as u64, m1 as u64)? * m2;
    Ok(InjectionReport {
        holds: lhs <= rhs,
        lhs_times_m2: lhs,
        rhs_times_m2: rhs,
        annulus_count: annulus.count(),
    })
}

/// A region still to be triangulated, bounded by one or more cycles.
type Region = Vec<Vec<usize>>;

struct Filler {
    edges: HashSet<(usize, usize)>,
    placed: Vec<Triangle>,
    placed_set: HashSet<Triangle>,
    unused: Vec<usize>,
    found: BTreeSet<Vec<Triangle>>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn fill_holed_sphere(inst: &HoledSphereInstance) -> Vec<Vec<Triangle>> {
    let cycles = inst.boundary_cycles();
    let mut edges = HashSet::new();
    for c in &cycles {
        for i in 0..c.len() {
            edges.insert(key(c[i], c[(i + 1) % c.len()]));
        }
    }
    let boundary: usize = inst.holes.iter().sum();
    let mut filler = Filler {
        edges,
        placed: Vec::new(),
        placed_set: HashSet::new(),
        unused: (boundary..boundary + inst.k).collect(),
        found: BTreeSet::new(),
    };
    filler.fill(vec![cycles]);
    let (target, n_capped) = (inst.triangle_count(), inst.vertex_count() + inst.holes.len());
    filler
        .found
        .into_iter()
        .filter(|t| t.len() == target && is_spanning_sphere(n_capped, &inst.cap_holes(t).1))
        .collect()
}

impl Filler {
    fn place(&mut self, t: Triangle, new_edges: &[(usize, usize)]) -> bool {
        if !self.placed_set.insert(t) {
            return false;
        }
        self.placed.push(t);
        for &e in new_edges {
            self.edges.insert(e);
        }
        true
    }

    fn unplace(&mut self, t: Triangle, new_edges: &[(usize, usize)]) {
        self.placed.pop();
        self.placed_set.remove(&t);
        for e in new_edges {
            self.edges.remove(e);
        }
    }

    /// Edges of `(u, v, w)` other than the consumed edge `u-v` that are not
    /// already boundary edges adjacent at the chosen position. `None` when the
    /// triangle would duplicate an existing edge.
    fn new_edges(
        &self,
        u: usize,
        v: usize,
        w: usize,
        uw_on_cycle: bool,
        vw_on_cycle: bool,
    ) -> Option<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (x, on_cycle) in [(u, uw_on_cycle), (v, vw_on_cycle)] {
            let e = key(x, w);
            if on_cycle {
                continue;
            }
            if self.edges.contains(&e) {
                return None;
            }
            out.push(e);
        }
        Some(out)
    }

    fn fill(&mut self, mut pending: Vec<Region>) {
        // drop finished regions (a single digon is a closed edge)
        while let Some(r) = pending.last() {
            if r.len() == 1 && r[0].len() == 2 {
                pending.pop();
            } else {
                break;
            }
        }
        let Some(region) = pending.pop() else {
            if self.unused.is_empty() {
                let mut t = self.placed.clone();
                t.sort_unstable();
                self.found.insert(t);
            }
            return;
        };
        if region.iter().any(|c| c.len() < 3) {
            // a digon next to other boundary cannot be closed without a double edge
            return;
        }
        let cycle = &region[0];
        let (u, v) = (cycle[0], cycle[1]);
        let len = cycle.len();

        // third vertex is a fresh interior vertex
        for idx in 0..self.unused.len() {
            let w = self.unused[idx];
            let t = Triangle::of(u, v, w);
            let Some(new) = self.new_edges(u, v, w, false, false) else {
                continue;
            };
            if !self.place(t, &new) {
                continue;
            }
            self.unused.remove(idx);
            let mut grown = cycle.clone();
            grown.insert(1, w);
            let mut next_region = region.clone();
            next_region[0] = grown;
            let mut next = pending.clone();
            next.push(next_region);
            self.fill(next);
            self.unused.insert(idx, w);
            self.unplace(t, &new);
        }

        // third vertex on the same cycle: the region splits in two
        for i in 2..len {
            let w = cycle[i];
            if w == u || w == v {
                continue;
            }
            let Some(new) = self.new_edges(u, v, w, i == len - 1, i == 2) else {
                continue;
            };
            let t = Triangle::of(u, v, w);
            if !self.place(t, &new) {
                continue;
            }
            let left: Vec<usize> = cycle[1..=i].to_vec();
            let mut right: Vec<usize> = cycle[i..].to_vec();
            right.push(u);
            let others = &region[1..];
            // distribute the remaining holes between the two sides
            for mask in 0..(1u32 << others.len()) {
                let mut a: Region = vec![left.clone()];
                let mut b: Region = vec![right.clone()];
                for (j, c) in others.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        a.push(c.clone());
                    } else {
                        b.push(c.clone());
                    }
                }
                let mut next = pending.clone();
                next.push(a);
                next.push(b);
                self.fill(next);
            }
            self.unplace(t, &new);
        }

        // third vertex on another cycle of the region: the two cycles merge
        for ci in 1..region.len() {
            let other = &region[ci];
            for j in 0..other.len() {
                let w = other[j];
                let Some(new) = self.new_edges(u, v, w, false, false) else {
                    continue;
                };
                let t = Triangle::of(u, v, w);
                if !self.place(t, &new) {
                    continue;
                }
                // u -> w -> (around other) -> w -> v -> rest of cycle
                let mut merged = vec![u, w];
                for s in 1..=other.len() {
                    merged.push(other[(j + s) % other.len()]);
                }
                merged.extend_from_slice(&cycle[1..]);
                // rotate so the merged cycle starts at v
                let pos = merged.len() - (len - 1);
                merged.rotate_left(pos);
                let mut next_region: Region = vec![merged];
                for (cj, c) in region.iter().enumerate().skip(1) {
                    if cj != ci {
                        next_region.push(c.clone());
                    }
                }
                let mut next = pending.clone();
                next.push(next_region);
                self.fill(next);
                self.unplace(t, &new);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::known;

    #[test]
    fn small_sphere_counts() {
        let s4 = enumerate_labeled_spheres(4).unwrap();
        assert_eq!(s4, vec![known::tetrahedron()]);
        let s5 = enumerate_labeled_spheres(5).unwrap();
        assert_eq!(s5.len(), 10);
        for s in &s5 {
            assert_eq!(s.len(), 6);
            // a bipyramid: exactly two vertices of degree 3
            assert_eq!(s.vertex_degrees().iter().filter(|&&d| d == 3).count(), 2);
        }
        assert!(enumerate_labeled_spheres(3).is_err());
        assert!(enumerate_labeled_spheres(8).is_err());
    }

    #[test]
    fn search_matches_naive_filter() {
        for n in 4..=5 {
            let fast: BTreeSet<_> = enumerate_labeled_spheres(n)
                .unwrap()
                .into_iter()
                .map(|c| c.triangles().clone())
                .collect();
            let naive: BTreeSet<_> = enumerate_spheres_naive(n)
                .unwrap()
                .into_iter()
                .map(|c| c.triangles().clone())
                .collect();
            assert_eq!(fast, naive);
        }
    }

    #[test]
    fn six_vertex_spheres() {
        let s6 = enumerate_labeled_spheres(6).unwrap();
        assert!(s6.iter().all(|s| s.len() == 8));
        let distinct: BTreeSet<_> = s6.iter().map(|c| c.triangles().clone()).collect();
        assert_eq!(distinct.len(), s6.len());
        assert_eq!(s6.len(), 195);
    }

    #[test]
    fn polygon_examples() {
        let count = |m, k| {
            enumerate_polygon_triangulations(PolygonInstance { m, k })
                .unwrap()
                .len()
        };
        assert_eq!(count(3, 0), 1);
        assert_eq!(count(4, 0), 2);
        assert_eq!(count(4, 1), 5);
        assert_eq!(count(3, 2), 6);
        assert!(enumerate_polygon_triangulations(PolygonInstance { m: 7, k: 0 }).is_err());
        assert!(enumerate_polygon_triangulations(PolygonInstance { m: 3, k: 4 }).is_err());
    }

    #[test]
    fn polygon_outputs_are_simple_discs() {
        for m in 3..=5 {
            for k in 0..=2 {
                let inst = HoledSphereInstance { holes: vec![m], k };
                for t in enumerate_polygon_triangulations(PolygonInstance { m, k }).unwrap() {
                    assert_eq!(t.len(), inst.triangle_count());
                    let (n, capped) = inst.cap_holes(&t);
                    assert!(is_spanning_sphere(n, &capped));
                    // no loops by construction; no double edges since the capped
                    // complex is simplicial
                    let c = Complex2::new(n, capped).unwrap();
                    assert_eq!(crate::complex::edge_multiset(c.triangles()).len(), 3 * n - 6);
                }
            }
        }
    }

    #[test]
    fn annulus_triangle_counts() {
        let a = enumerate_annulus_triangulations(3, 3, 0).unwrap();
        assert!(a.count() > 0);
        assert!(a.triangulations.iter().all(|t| t.len() == 6));
        let b = enumerate_annulus_triangulations(3, 4, 0).unwrap();
        assert!(b.triangulations.iter().all(|t| t.len() == 7));
        assert!(enumerate_annulus_triangulations(5, 3, 0).is_err());
        assert!(enumerate_annulus_triangulations(3, 3, 3).is_err());
    }

    #[test]
    fn injection_examples() {
        for (m1, m2, k) in [(3, 3, 0), (3, 3, 1), (4, 3, 0)] {
            let r = injection_inequality_check(m1, m2, k).unwrap();
            assert!(r.holds, "({m1},{m2},{k}): {r:?}");
        }
    }

    #[test]
    fn seven_vertex_spheres_match_formula() {
        let s7 = enumerate_labeled_spheres(7).unwrap();
        assert_eq!(
            BigUint::from(s7.len()),
            crate::counts::labeled_sphere_count(7).unwrap()
        );
    }

    #[test]
    fn polygon_counts_match_formula() {
        for m in 3..=5 {
            for k in 0..=2 {
                let c = enumerate_polygon_triangulations(PolygonInstance { m, k })
                    .unwrap()
                    .len();
                assert_eq!(
                    BigUint::from(c),
                    polygon_triangulation_count(k as u64, m as u64).unwrap(),
                    "m = {m}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn annulus_counts_symmetric_in_boundaries() {
        for k in 0..=1 {
            let a = enumerate_annulus_triangulations(3, 4, k).unwrap().count();
            let b = enumerate_annulus_triangulations(4, 3, k).unwrap().count();
            assert_eq!(a, b);
        }
        assert_eq!(enumerate_annulus_triangulations(3, 3, 0).unwrap().count(), 21);
    }
}

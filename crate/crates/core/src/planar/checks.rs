use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::map::{Color, EmbeddedColoredGraph};
use crate::check::Outcome;
use crate::error::{out_of_range, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimatesReport {
    pub m: usize,
    pub white: usize,
    pub black: usize,
    pub components: usize,
    /// `sum_f (l_f - 1)` over all faces.
    pub excess: usize,
    pub outcome: Outcome,
}

/// Face counts of each color at most `m - 2`, at most `floor(m/3)`
/// components, and `sum_f (l_f - 1) <= m/3`, where `m` is the vertex count.
pub fn planar_estimates_check(g: &EmbeddedColoredGraph) -> EstimatesReport {
    let m = g.vertex_count();
    let white = g.count_color(Color::White);
    let black = g.count_color(Color::Black);
    let excess: usize = g.faces().iter().map(|f| f.components - 1).sum();
    let r = g.component_count();
    let ok = white + 2 <= m && black + 2 <= m && r <= m / 3 && 3 * excess <= m;
    EstimatesReport {
        m,
        white,
        black,
        components: r,
        excess,
        outcome: Outcome::from_bool(ok),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayReport {
    /// `sum over edges of min(z_i, z_j)`
    pub l: i128,
    /// `z_(2) + 2 z_(3) + 3 (z_(4) + ...)` with weights sorted descending.
    pub refined: i128,
    /// `3 sum z`
    pub bound: i128,
    pub outcome: Outcome,
}

/// Weighted edge bound for a planar graph on vertices `0..z.len()`.
/// Planarity is the caller's responsibility (pass edges of an embedding).
pub fn mckay_check(edges: &[(usize, usize)], z: &[i64]) -> Result<McKayReport> {
    if let Some(w) = z.iter().find(|&&w| w < 0) {
        return Err(out_of_range(format!("negative weight {w}")));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= z.len() || v >= z.len()) {
        return Err(out_of_range(format!("edge {u}-{v} outside the weight vector")));
    }
    let l: i128 = edges.iter().map(|&(u, v)| z[u].min(z[v]) as i128).sum();
    let mut sorted: Vec<i64> = z.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let refined: i128 = sorted
        .iter()
        .enumerate()
        .map(|(i, &w)| i.min(3) as i128 * w as i128)
        .sum();
    let bound = 3 * z.iter().map(|&w| w as i128).sum::<i128>();
    Ok(McKayReport {
        l,
        refined,
        bound,
        outcome: Outcome::from_bool(l <= refined && refined <= bound),
    })
}

pub fn mckay_check_map(g: &EmbeddedColoredGraph, z: &[i64]) -> Result<McKayReport> {
    if z.len() != g.vertex_count() {
        return Err(out_of_range(format!(
            "{} weights for {} vertices",
            z.len(),
            g.vertex_count()
        )));
    }
    mckay_check(&g.edges(), z)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficitReport {
    pub outer_color: Color,
    /// Black faces other than the outer face.
    pub black: usize,
    /// White faces other than the outer face.
    pub white: usize,
    pub bound: i64,
    pub outcome: Outcome,
}

/// `B - W <= floor((m-1)/2)` with a white outer face, `<= floor((m-5)/2)`
/// with a black one; the outer face is not counted.
pub fn bw_deficit_check(g: &EmbeddedColoredGraph, outer: usize) -> Result<DeficitReport> {
    if g.component_count() != 1 {
        return Err(Error::InvalidMap(format!(
            "deficit check needs a connected map, got {} components",
            g.component_count()
        )));
    }
    if outer >= g.face_count() {
        return Err(out_of_range(format!("face {outer} of {}", g.face_count())));
    }
    let outer_color = g.color(outer);
    let mut black = g.count_color(Color::Black);
    let mut white = g.count_color(Color::White);
    let m = g.vertex_count() as i64;
    let bound = match outer_color {
        Color::White => {
            white -= 1;
            (m - 1).div_euclid(2)
        }
        Color::Black => {
            black -= 1;
            (m - 5).div_euclid(2)
        }
    };
    Ok(DeficitReport {
        outer_color,
        black,
        white,
        bound,
        outcome: Outcome::from_bool(black as i64 - white as i64 <= bound),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteTriangleReport {
    /// `T_{G,k} = sum over white faces of (2 k_f + sum m_i + 2 l_f - 4)`
    pub triangles: u64,
    pub k: u64,
    /// Components surrounded by a white face, with a white outer face.
    pub surrounded_by_white: usize,
    /// `2 (m + k - T/2)`
    pub lhs_twice: i64,
    /// `m + r + W - B + 3 - 2 |C_B|`
    pub rhs_twice: i64,
    pub outcome: Outcome,
}

/// Triangles needed to fill every white face with the given interior
/// points, and the identity
/// `m + k - T/2 = (m + r + W - B + 3)/2 - |C_B|`.
///
/// `alloc[f]` is the number of interior points in face `f` and must be 0 on
/// black faces. `|C_B|` is counted with a white face as the outer face.
pub fn white_triangle_count(g: &EmbeddedColoredGraph, alloc: &[u64]) -> Result<WhiteTriangleReport> {
    if alloc.len() != g.face_count() {
        return Err(Error::InvalidMap(format!(
            "allocation has {} entries for {} faces",
            alloc.len(),
            g.face_count()
        )));
    }
    let mut triangles: i64 = 0;
    for (f, data) in g.faces().iter().enumerate() {
        match data.color {
            Color::Black if alloc[f] != 0 => {
                return Err(Error::InvalidMap(format!(
                    "interior points allocated to black face {f}"
                )));
            }
            Color::Black => {}
            Color::White => {
                let t = 2 * alloc[f] as i64 + data.boundary_len() as i64 + 2 * data.components as i64 - 4;
                if t < 1 {
                    return Err(Error::InvalidMap(format!(
                        "white face {f} cannot be triangulated"
                    )));
                }
                triangles += t;
            }
        }
    }
    let k: u64 = alloc.iter().sum();
    let outer = (0..g.face_count())
        .find(|&f| g.color(f) == Color::White)
        .expect("every edge has a white side");
    let c_b = g.surrounded_by(Color::White, outer);
    let m = g.vertex_count() as i64;
    let r = g.component_count() as i64;
    let w = g.count_color(Color::White) as i64;
    let b = g.count_color(Color::Black) as i64;
    let lhs_twice = 2 * m + 2 * k as i64 - triangles;
    let rhs_twice = m + r + w - b + 3 - 2 * c_b as i64;
    Ok(WhiteTriangleReport {
        triangles: triangles as u64,
        k,
        surrounded_by_white: c_b,
        lhs_twice,
        rhs_twice,
        outcome: Outcome::from_bool(lhs_twice == rhs_twice),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyReport {
    pub n: usize,
    /// `sum over labeled trees of prod x_v^deg(v)`
    pub tree_sum: BigUint,
    /// `prod x_v * (sum x_v)^(n-2)`
    pub closed_form: BigUint,
    pub outcome: Outcome,
}

/// Decodes a Prüfer sequence over `0..n` into the edges of a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Weighted Cayley formula over all `n^(n-2)` labeled trees, `2 <= n <= 7`.
pub fn weighted_cayley_check(x: &[u64]) -> Result<CayleyReport> {
    let n = x.len();
    if !(2..=7).contains(&n) {
        return Err(out_of_range(format!(
            "weighted Cayley check needs 2 <= n <= 7, got {n}"
        )));
    }
    if x.contains(&0) {
        return Err(out_of_range("weights must be positive"));
    }
    let mut tree_sum = BigUint::zero();
    let mut seen = std::collections::BTreeSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = prufer_decode(&seq, n);
        let mut deg = vec![0u32; n];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        seen.insert(edges);
        tree_sum += x
            .iter()
            .zip(&deg)
            .fold(BigUint::one(), |acc, (&xv, &d)| acc * BigUint::from(xv).pow(d));
        // odometer over sequences
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
        seq[i] += 1;
    }
    assert_eq!(seen.len(), n.pow(n as u32 - 2), "Prüfer decoding is a bijection");
    let total: u64 = x.iter().sum();
    let closed_form =
        x.iter().fold(BigUint::one(), |acc, &v| acc * v) * BigUint::from(total).pow(n as u32 - 2);
    Ok(CayleyReport {
        n,
        outcome: Outcome::from_bool(tree_sum == closed_form),
        tree_sum,
        closed_form,
    })
}

/// Results of every planar check on one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapChecks {
    pub estimates: Outcome,
    pub mckay: Outcome,
    /// Over every outer face; `None` for disconnected maps.
    pub deficit: Option<Outcome>,
    pub identity: Outcome,
}

impl MapChecks {
    pub fn outcome(&self) -> Outcome {
        self.estimates
            .and(self.mckay)
            .and(self.deficit.unwrap_or(Outcome::Pass))
            .and(self.identity)
    }
}

/// Runs every check on `g` with the given weights and allocation.
pub fn check_map(g: &EmbeddedColoredGraph, z: &[i64], alloc: &[u64]) -> Result<MapChecks> {
    let deficit = if g.component_count() == 1 {
        let mut o = Outcome::Pass;
        for f in 0..g.face_count() {
            o = o.and(bw_deficit_check(g, f)?.outcome);
        }
        Some(o)
    } else {
        None
    };
    Ok(MapChecks {
        estimates: planar_estimates_check(g).outcome,
        mckay: mckay_check_map(g, z)?.outcome,
        deficit,
        identity: white_triangle_count(g, alloc)?.outcome,
    })
}

/// Tally of faces by `(color, l_f)`, handy for reports.
pub fn face_profile(g: &EmbeddedColoredGraph) -> BTreeMap<(Color, usize), usize> {
    let mut out = BTreeMap::new();
    for f in g.faces() {
        *out.entry((f.color, f.components)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::map::fixtures::*;
    use super::*;

    #[test]
    fn estimates_examples() {
        let r = planar_estimates_check(&triangle(true));
        assert_eq!((r.white, r.black, r.components, r.excess), (1, 1, 1, 0));
        assert_eq!(r.outcome, Outcome::Pass);
        let r = planar_estimates_check(&nested_triangles());
        assert_eq!((r.m, r.components, r.excess), (6, 2, 1));
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn mckay_examples() {
        let tri = [(0, 1), (1, 2), (0, 2)];
        let r = mckay_check(&tri, &[3, 2, 1]).unwrap();
        assert_eq!((r.l, r.refined, r.bound), (4, 4, 18));
        assert_eq!(r.outcome, Outcome::Pass);
        let star = [(0, 1), (0, 2), (0, 3)];
        let r = mckay_check(&star, &[1, 1, 1, 1]).unwrap();
        assert_eq!((r.l, r.bound), (3, 12));
        assert_eq!(mckay_check(&tri, &[0, 0, 0]).unwrap().l, 0);
        assert!(mckay_check(&tri, &[1, -1, 0]).is_err());
    }

    #[test]
    fn deficit_examples() {
        let g = triangle(true);
        for f in 0..2 {
            let r = bw_deficit_check(&g, f).unwrap();
            let diff = r.black as i64 - r.white as i64;
            match r.outer_color {
                Color::White => assert_eq!((diff, r.bound), (1, 1)),
                Color::Black => assert_eq!((diff, r.bound), (-1, -1)),
            }
            assert_eq!(r.outcome, Outcome::Pass);
        }
        assert!(bw_deficit_check(&g, 2).is_err());
        assert!(bw_deficit_check(&nested_triangles(), 0).is_err());
    }

    #[test]
    fn white_triangle_examples() {
        let g = triangle(true);
        let r = white_triangle_count(&g, &[0, 0]).unwrap();
        assert_eq!(r.triangles, 1);
        assert_eq!(r.surrounded_by_white, 1);
        // 2 * 5/2 on both sides
        assert_eq!((r.lhs_twice, r.rhs_twice), (5, 5));
        assert_eq!(r.outcome, Outcome::Pass);
        let g = nested_triangles();
        let r = white_triangle_count(&g, &[2, 0, 0]).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(white_triangle_count(&g, &[0, 1, 0]).is_err());
        assert!(white_triangle_count(&g, &[0]).is_err());
    }

    #[test]
    fn cayley_examples() {
        let r = weighted_cayley_check(&[1, 1, 1]).unwrap();
        assert_eq!(r.tree_sum, BigUint::from(3u32));
        let r = weighted_cayley_check(&[1, 1, 1, 1]).unwrap();
        assert_eq!(r.tree_sum, BigUint::from(16u32));
        let r = weighted_cayley_check(&[2, 1, 1, 1]).unwrap();
        assert_eq!(
            (r.tree_sum.clone(), r.outcome),
            (BigUint::from(50u32), Outcome::Pass)
        );
        assert_eq!(
            weighted_cayley_check(&[3, 1, 4, 1, 5, 9, 2]).unwrap().outcome,
            Outcome::Pass
        );
        assert!(weighted_cayley_check(&[1]).is_err());
        assert!(weighted_cayley_check(&[1; 8]).is_err());
    }
}

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::complex::UnionFind;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

/// Where a non-root component sits: inside local face `face` of component
/// `parent`, with its own local face `outer` facing outward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub parent: usize,
    pub face: usize,
    pub outer: usize,
}

/// One boundary walk of a single component. Darts are `(from, to)` with the
/// face on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFace {
    pub darts: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceData {
    pub color: Color,
    /// Number of components touching this face (`l_f`).
    pub components: usize,
    /// `(component, boundary edge count)` for each touching component.
    pub boundary: Vec<(usize, usize)>,
    /// `(component, local face)` pieces merged into this face.
    pub pieces: Vec<(usize, usize)>,
}

impl FaceData {
    /// Total number of boundary edges, `sum m_i`.
    pub fn boundary_len(&self) -> usize {
        self.boundary.iter().map(|&(_, m)| m).sum()
    }
}

/// A planar graph embedded in the sphere with a proper 2-coloring of its
/// faces, stored as one rotation system per vertex plus a containment forest
/// for the components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedColoredGraph {
    /// Neighbors of each vertex in counterclockwise order.
    rotation: Vec<Vec<usize>>,
    /// Vertex sets of the components, ordered by smallest vertex.
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    /// Placement of every component; `None` for roots.
    containment: Vec<Option<Placement>>,
    /// Outer local face of each root component (0 unless set).
    root_outer: Vec<usize>,
    local_faces: Vec<Vec<LocalFace>>,
    /// Global face of each `(component, local face)`.
    face_of: Vec<Vec<usize>>,
    faces: Vec<FaceData>,
}

impl EmbeddedColoredGraph {
    /// Builds and validates a map. `containment[c]` and `root_outer[c]` are
    /// indexed by component (components ordered by smallest vertex);
    /// `root_outer` may be shorter, missing entries default to 0. Colors are
    /// per global face.
    pub fn new(
        rotation: Vec<Vec<usize>>,
        containment: Vec<Option<Placement>>,
        root_outer: Vec<usize>,
        colors: Vec<Color>,
    ) -> Result<Self> {
        let n = rotation.len();
        let rot_err = |m: String| Error::Rotation(m);
        for (v, nb) in rotation.iter().enumerate() {
            if nb.is_empty() {
                return Err(rot_err(format!("vertex {v} is isolated")));
            }
            let distinct: BTreeSet<_> = nb.iter().collect();
            if distinct.len() != nb.len() {
                return Err(rot_err(format!("vertex {v} repeats a neighbor")));
            }
            for &w in nb {
                if w >= n {
                    return Err(rot_err(format!("vertex {v} lists unknown neighbor {w}")));
                }
                if w == v {
                    return Err(rot_err(format!("loop at vertex {v}")));
                }
                if !rotation[w].contains(&v) {
                    return Err(rot_err(format!("edge {v}-{w} missing at {w}")));
                }
            }
        }

        let mut uf = UnionFind::new(n);
        for (v, nb) in rotation.iter().enumerate() {
            for &w in nb {
                uf.union(v, w);
            }
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            by_root.entry(uf.find(v)).or_default().push(v);
        }
        let mut components: Vec<Vec<usize>> = by_root.into_values().collect();
        components.sort_by_key(|c| c[0]);
        let r = components.len();
        let mut component_of = vec![0; n];
        for (i, c) in components.iter().enumerate() {
            for &v in c {
                component_of[v] = i;
            }
        }

        let local_faces: Vec<Vec<LocalFace>> =
            components.iter().map(|c| trace_component(&rotation, c)).collect();
        for (i, c) in components.iter().enumerate() {
            let e: usize = c.iter().map(|&v| rotation[v].len()).sum::<usize>() / 2;
            let chi = c.len() as i64 - e as i64 + local_faces[i].len() as i64;
            if chi != 2 {
                return Err(rot_err(format!(
                    "component {i} is not planar (V - E + F = {chi})"
                )));
            }
        }

        let bad = |m: String| Error::InvalidMap(m);
        if containment.len() != r {
            return Err(bad(format!(
                "{} placements for {r} components",
                containment.len()
            )));
        }
        let mut root_outer = root_outer;
        if root_outer.len() > r {
            return Err(bad("more outer-face entries than components".into()));
        }
        root_outer.resize(r, 0);
        for (c, p) in containment.iter().enumerate() {
            if let Some(p) = p {
                if p.parent >= r || p.parent == c {
                    return Err(bad(format!("component {c} has invalid parent {}", p.parent)));
                }
                if p.face >= local_faces[p.parent].len() {
                    return Err(bad(format!("component {} has no face {}", p.parent, p.face)));
                }
                if p.outer >= local_faces[c].len() {
                    return Err(bad(format!("component {c} has no face {}", p.outer)));
                }
            } else if root_outer[c] >= local_faces[c].len() {
                return Err(bad(format!("component {c} has no face {}", root_outer[c])));
            }
        }
        // the forest must be acyclic
        for start in 0..r {
            let mut seen = vec![false; r];
            let mut c = start;
            while let Some(p) = containment[c] {
                if seen[c] {
                    return Err(bad(format!("containment cycle through component {c}")));
                }
                seen[c] = true;
                c = p.parent;
            }
        }

        // merge local faces into global faces
        let offsets: Vec<usize> = local_faces
            .iter()
            .scan(0, |acc, f| {
                let o = *acc;
                *acc += f.len();
                Some(o)
            })
            .collect();
        let total_local: usize = local_faces.iter().map(Vec::len).sum();
        let mut fuf = UnionFind::new(total_local);
        let mut first_root: Option<usize> = None;
        for c in 0..r {
            match containment[c] {
                Some(p) => {
                    fuf.union(offsets[c] + p.outer, offsets[p.parent] + p.face);
                }
                None => {
                    let me = offsets[c] + root_outer[c];
                    match first_root {
                        Some(x) => {
                            fuf.union(x, me);
                        }
                        None => first_root = Some(me),
                    }
                }
            }
        }
        let mut class_id: BTreeMap<usize, usize> = BTreeMap::new();
        let mut face_of = Vec::with_capacity(r);
        let mut pieces: Vec<Vec<(usize, usize)>> = Vec::new();
        for c in 0..r {
            let mut ids = Vec::new();
            for lf in 0..local_faces[c].len() {
                let root = fuf.find(offsets[c] + lf);
                let next = class_id.len();
                let id = *class_id.entry(root).or_insert(next);
                if id == pieces.len() {
                    pieces.push(Vec::new());
                }
                pieces[id].push((c, lf));
                ids.push(id);
            }
            face_of.push(ids);
        }
        let f = pieces.len();
        if colors.len() != f {
            return Err(bad(format!("{} colors for {f} faces", colors.len())));
        }

        let faces: Vec<FaceData> = pieces
            .into_iter()
            .zip(&colors)
            .map(|(pieces, &color)| {
                let boundary: Vec<(usize, usize)> = pieces
                    .iter()
                    .map(|&(c, lf)| (c, local_faces[c][lf].darts.len()))
                    .collect();
                let comps: BTreeSet<usize> = pieces.iter().map(|&(c, _)| c).collect();
                FaceData {
                    color,
                    components: comps.len(),
                    boundary,
                    pieces,
                }
            })
            .collect();

        let g = EmbeddedColoredGraph {
            rotation,
            components,
            component_of,
            containment,
            root_outer,
            local_faces,
            face_of,
            faces,
        };

        for (u, v) in g.edges() {
            let (a, b) = (g.face_left(u, v), g.face_left(v, u));
            if g.faces[a].color == g.faces[b].color {
                return Err(bad(format!(
                    "edge {u}-{v} has {} faces on both sides",
                    g.faces[a].color
                )));
            }
        }
        let euler = g.face_count() as i64 - g.edge_count() as i64 + g.vertex_count() as i64;
        if euler != g.component_count() as i64 + 1 {
            return Err(bad(format!("F - E + V = {euler}, expected r + 1 = {}", r + 1)));
        }
        for v in 0..n {
            if g.rotation[v].len() % 2 == 1 {
                return Err(bad(format!("vertex {v} has odd degree")));
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn containment(&self) -> &[Option<Placement>] {
        &self.containment
    }

    pub fn local_faces(&self, component: usize) -> &[LocalFace] {
        &self.local_faces[component]
    }

    pub fn faces(&self) -> &[FaceData] {
        &self.faces
    }

    pub fn color(&self, face: usize) -> Color {
        self.faces[face].color
    }

    pub fn colors(&self) -> Vec<Color> {
        self.faces.iter().map(|f| f.color).collect()
    }

    pub fn count_color(&self, color: Color) -> usize {
        self.faces.iter().filter(|f| f.color == color).count()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Global face to the left of dart `u -> v`.
    pub fn face_left(&self, u: usize, v: usize) -> usize {
        let c = self.component_of[u];
        let lf = self.local_faces[c]
            .iter()
            .position(|f| f.darts.contains(&(u, v)))
            .expect("dart of this component");
        self.face_of[c][lf]
    }

    /// Global face containing local face `lf` of component `c`.
    pub fn global_face(&self, c: usize, lf: usize) -> usize {
        self.face_of[c][lf]
    }

    /// The global face that holds the root components.
    pub fn outer_face(&self) -> usize {
        let c = (0..self.components.len())
            .find(|&c| self.containment[c].is_none())
            .expect("forest has a root");
        self.face_of[c][self.root_outer[c]]
    }

    /// The same map with every color swapped.
    pub fn recolored(&self) -> Self {
        let mut g = self.clone();
        for f in &mut g.faces {
            f.color = f.color.flip();
        }
        g
    }

    /// For each component, the face that surrounds it when `outer` is the
    /// outer face. Read off the face/component incidence tree rooted at
    /// `outer`.
    pub fn surrounding_faces(&self, outer: usize) -> Vec<usize> {
        let r = self.components.len();
        let mut comp_faces: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
        for (f, data) in self.faces.iter().enumerate() {
            for &(c, _) in &data.pieces {
                comp_faces[c].insert(f);
            }
        }
        let mut parent = vec![usize::MAX; r];
        let mut face_seen = vec![false; self.faces.len()];
        let mut queue = VecDeque::from([outer]);
        face_seen[outer] = true;
        while let Some(f) = queue.pop_front() {
            for &(c, _) in &self.faces[f].pieces {
                if parent[c] != usize::MAX {
                    continue;
                }
                parent[c] = f;
                for &g in &comp_faces[c] {
                    if !face_seen[g] {
                        face_seen[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        parent
    }

    /// Number of components surrounded by a face of `color` when `outer` is
    /// the outer face.
    pub fn surrounded_by(&self, color: Color, outer: usize) -> usize {
        self.surrounding_faces(outer)
            .into_iter()
            .filter(|&f| self.faces[f].color == color)
            .count()
    }

    /// Serializes the map. Vertex lines list neighbors in rotation order;
    /// component and color lines follow.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for comp in &self.components {
            for &v in comp {
                let nb: Vec<String> = self.rotation[v].iter().map(|w| w.to_string()).collect();
                s.push_str(&format!("{v}: {}\n", nb.join(" ")));
            }
        }
        for (c, p) in self.containment.iter().enumerate() {
            match p {
                Some(p) => s.push_str(&format!(
                    "comp {c} in comp {} face {} outer {}\n",
                    p.parent, p.face, p.outer
                )),
                None if self.root_outer[c] != 0 => {
                    s.push_str(&format!("comp {c} outer {}\n", self.root_outer[c]))
                }
                None => {}
            }
        }
        for (f, data) in self.faces.iter().enumerate() {
            s.push_str(&format!("color face {f} {}\n", data.color));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rotation: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut placements: BTreeMap<usize, Placement> = BTreeMap::new();
        let mut outers: BTreeMap<usize, usize> = BTreeMap::new();
        let mut colors: BTreeMap<usize, Color> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: &str| Error::Parse {
                line: line_no,
                msg: msg.to_string(),
            };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(&format!("bad number {s:?}")));
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["comp", c, "in", "comp", p, "face", f, rest @ ..] => {
                    let outer = match rest {
                        [] => 0,
                        ["outer", g] => num(g)?,
                        _ => return Err(err("expected `outer <face>`")),
                    };
                    placements.insert(
                        num(c)?,
                        Placement {
                            parent: num(p)?,
                            face: num(f)?,
                            outer,
                        },
                    );
                }
                ["comp", c, "outer", g] => {
                    outers.insert(num(c)?, num(g)?);
                }
                ["color", "face", f, col] => {
                    let color = match *col {
                        "black" => Color::Black,
                        "white" => Color::White,
                        _ => return Err(err("color must be black or white")),
                    };
                    if colors.insert(num(f)?, color).is_some() {
                        return Err(err("face colored twice"));
                    }
                }
                [head, tail @ ..] if head.ends_with(':') => {
                    let v = num(head.trim_end_matches(':'))?;
                    let nb = tail.iter().map(|w| num(w)).collect::<Result<Vec<_>>>()?;
                    if rotation.insert(v, nb).is_some() {
                        return Err(err("vertex listed twice"));
                    }
                }
                _ => return Err(err("unrecognized line")),
            }
        }
        let n = rotation.keys().next_back().map_or(0, |&v| v + 1);
        if rotation.len() != n {
            return Err(Error::InvalidMap("vertices must be 0..n without gaps".into()));
        }
        let rotation: Vec<Vec<usize>> = rotation.into_values().collect();
        // component count is needed to size the forest
        let mut uf = UnionFind::new(n);
        for (v, nb) in rotation.iter().enumerate() {
            for &w in nb {
                if w < n {
                    uf.union(v, w);
                }
            }
        }
        let r = uf.count();
        if let Some((&c, _)) = placements.iter().next_back().filter(|(&c, _)| c >= r) {
            return Err(Error::InvalidMap(format!("component {c} does not exist")));
        }
        let containment: Vec<Option<Placement>> = (0..r).map(|c| placements.get(&c).copied()).collect();
        let root_outer: Vec<usize> = (0..r).map(|c| outers.get(&c).copied().unwrap_or(0)).collect();
        let f = colors.keys().next_back().map_or(0, |&f| f + 1);
        if colors.len() != f {
            return Err(Error::InvalidMap(
                "colored faces must be 0..F without gaps".into(),
            ));
        }
        Self::new(rotation, containment, root_outer, colors.into_values().collect())
    }
}

impl fmt::Display for EmbeddedColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for EmbeddedColoredGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Next dart around the face on the left of `u -> v`.
fn next_dart(rotation: &[Vec<usize>], u: usize, v: usize) -> (usize, usize) {
    let rv = &rotation[v];
    let i = rv.iter().position(|&x| x == u).expect("symmetric rotation");
    (v, rv[(i + rv.len() - 1) % rv.len()])
}

pub(crate) fn trace_component(rotation: &[Vec<usize>], vertices: &[usize]) -> Vec<LocalFace> {
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for &u in vertices {
        for &v in &rotation[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = (u, v);
            while seen.insert(d) {
                darts.push(d);
                d = next_dart(rotation, d.0, d.1);
            }
            faces.push(LocalFace { darts });
        }
    }
    faces
}

/// Faces of a map, with Euler's relation `F - E + V = r + 1` checked.
pub fn trace_faces(g: &EmbeddedColoredGraph) -> Result<Vec<FaceData>> {
    let euler = g.face_count() as i64 - g.edge_count() as i64 + g.vertex_count() as i64;
    if euler != g.component_count() as i64 + 1 {
        return Err(Error::InvalidMap(format!("Euler relation fails: {euler}")));
    }
    Ok(g.faces.clone())
}

/// Faces of an uncolored connected rotation system, as dart cycles.
pub fn trace_rotation_faces(rotation: &[Vec<usize>]) -> Vec<LocalFace> {
    let vertices: Vec<usize> = (0..rotation.len()).filter(|&v| !rotation[v].is_empty()).collect();
    trace_component(rotation, &vertices)
}

//! Ribbon graphs as signed rotation systems.
//!
//! Half-edges are numbered `0..2m`. Each vertex lists its half-edges in
//! counter-clockwise order, each edge pairs two half-edges, and a twist bit
//! marks ribbons glued with a half-turn.
//!
//! Boundary tracing works on the ends of the attaching segments: half-edge
//! `h` occupies a segment of its vertex boundary from `h⁻` to `h⁺` (in
//! rotation order). Between consecutive half-edges of a rotation runs a corner
//! arc `h⁺↔next(h)⁻`. An untwisted ribbon on half-edges `a, b` has sides
//! `a⁺↔b⁻` and `a⁻↔b⁺`; a twisted one has sides `a⁺↔b⁺` and `a⁻↔b⁻`.
//! Every segment end meets exactly one corner arc and one side (or, when the
//! edge is absent, its own segment), so the boundary is a disjoint union of
//! cycles.

use std::fmt;

use itertools::Itertools;

use crate::deltamatroid::{DeltaMatroid, FramedGraph, SetSystem};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ground::{GroundSet, Subset};
use crate::symplectic::LagrangianSubspace;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: String,
    pub ends: [usize; 2],
    pub twisted: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    rotations: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    ground: GroundSet,
    // Derived lookups.
    edge_of: Vec<usize>,
    vertex_of: Vec<usize>,
    next: Vec<usize>,
}

/// Endpoint `h⁻` or `h⁺` of the segment of half-edge `h`.
#[inline]
fn minus(h: usize) -> usize {
    2 * h
}

#[inline]
fn plus(h: usize) -> usize {
    2 * h + 1
}

/// A boundary arc that is not a corner, with its reference direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arc {
    /// Segment of a half-edge whose edge is absent, from `h⁻` to `h⁺`.
    Segment(usize),
    /// Side of a present edge: side 0 starts at `a⁺`, side 1 ends at `a⁻`.
    Side(usize, usize),
}

struct Tracing {
    /// For each point, the non-corner arc through it and its other endpoint.
    arc_at: Vec<(Arc, usize)>,
    arc_start: Vec<usize>,
}

impl RibbonGraph {
    pub fn new(rotations: Vec<Vec<usize>>, edges: Vec<Edge>) -> Result<Self> {
        let half = 2 * edges.len();
        let mut edge_of = vec![usize::MAX; half];
        for (k, e) in edges.iter().enumerate() {
            for &h in &e.ends {
                if h >= half {
                    return Err(Error::InvalidRibbonGraph(format!(
                        "half-edge {h} out of range 0..{half}"
                    )));
                }
                if edge_of[h] != usize::MAX {
                    return Err(Error::InvalidRibbonGraph(format!(
                        "half-edge {h} belongs to two edge ends"
                    )));
                }
                edge_of[h] = k;
            }
        }
        let mut vertex_of = vec![usize::MAX; half];
        let mut next = vec![usize::MAX; half];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                if h >= half || vertex_of[h] != usize::MAX {
                    return Err(Error::InvalidRibbonGraph(format!(
                        "half-edge {h} is out of range or listed twice in rotations"
                    )));
                }
                vertex_of[h] = v;
                next[h] = rot[(i + 1) % rot.len()];
            }
        }
        if let Some(h) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidRibbonGraph(format!(
                "half-edge {h} is not in any rotation"
            )));
        }
        let ground = GroundSet::new(edges.iter().map(|e| e.label.clone()))?;
        Ok(RibbonGraph {
            rotations,
            edges,
            ground,
            edge_of,
            vertex_of,
            next,
        })
    }

    /// One vertex whose rotation lists half-edges `0..2m` in order;
    /// `chords[k] = (p, q, twisted)` joins positions `p` and `q`.
    pub fn chord_diagram(chords: &[(usize, usize, bool)]) -> Result<Self> {
        let edges = chords
            .iter()
            .enumerate()
            .map(|(k, &(p, q, twisted))| Edge {
                label: (k + 1).to_string(),
                ends: [p, q],
                twisted,
            })
            .collect();
        Self::new(vec![(0..2 * chords.len()).collect()], edges)
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        let nv = self.num_vertices();
        if nv == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in &self.edges {
            let (a, b) = (self.vertex_of[e.ends[0]], self.vertex_of[e.ends[1]]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..nv).all(|v| find(&mut parent, v) == root)
    }

    fn tracing(&self, present: Subset) -> Tracing {
        let points = 2 * 2 * self.num_edges();
        let mut arc_at = vec![(Arc::Segment(0), 0); points];
        let mut arc_start = vec![0; points];
        let mut put = |arc: Arc, from: usize, to: usize| {
            arc_at[from] = (arc, to);
            arc_at[to] = (arc, from);
            arc_start[from] = from;
            arc_start[to] = from;
        };
        for (k, e) in self.edges.iter().enumerate() {
            let [a, b] = e.ends;
            if present.contains(k) {
                if e.twisted {
                    put(Arc::Side(k, 0), plus(a), plus(b));
                    put(Arc::Side(k, 1), minus(b), minus(a));
                } else {
                    put(Arc::Side(k, 0), plus(a), minus(b));
                    put(Arc::Side(k, 1), plus(b), minus(a));
                }
            } else {
                put(Arc::Segment(a), minus(a), plus(a));
                put(Arc::Segment(b), minus(b), plus(b));
            }
        }
        Tracing { arc_at, arc_start }
    }

    #[inline]
    fn corner_partner(&self, p: usize) -> usize {
        let h = p / 2;
        if p == plus(h) {
            minus(self.next[h])
        } else {
            // p = h⁻: its corner comes from the half-edge preceding h.
            let rot = &self.rotations[self.vertex_of[h]];
            let i = rot.iter().position(|&x| x == h).expect("in rotation");
            plus(rot[(i + rot.len() - 1) % rot.len()])
        }
    }

    /// Traces every boundary cycle, tagged with the vertex it starts at. Each
    /// cycle is the list of non-corner arcs
    /// in traversal order, with a flag set when the arc is traversed against
    /// its reference direction. Cycles start at `h⁻` for the earliest
    /// unvisited half-edge in rotation order.
    fn boundary_cycles(&self, present: Subset) -> Vec<(usize, Vec<(Arc, bool)>)> {
        let t = self.tracing(present);
        let points = 4 * self.num_edges();
        let mut seen = vec![false; points];
        let mut cycles = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &h in rot {
                let start = minus(h);
                if seen[start] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut p = start;
                loop {
                    let (arc, q) = t.arc_at[p];
                    seen[p] = true;
                    seen[q] = true;
                    cycle.push((arc, t.arc_start[p] != p));
                    p = self.corner_partner(q);
                    if p == start {
                        break;
                    }
                }
                cycles.push((v, cycle));
            }
        }
        cycles
    }

    fn count_boundary(&self, present: Subset) -> usize {
        let isolated = self.rotations.iter().filter(|r| r.is_empty()).count();
        isolated + self.boundary_cycles(present).len()
    }

    /// Number of boundary components of the surface.
    pub fn boundary_components(&self) -> usize {
        self.count_boundary(self.ground.full())
    }

    /// Boundary components of the spanning subgraph on `f`, without building it.
    pub fn spanning_boundary_components(&self, f: Subset) -> usize {
        self.count_boundary(f)
    }

    /// Keeps every vertex and the edges in `f`; half-edges are renumbered in
    /// increasing order of their old ids.
    pub fn spanning_subgraph(&self, f: Subset) -> Result<RibbonGraph> {
        if !self.ground.contains_subset(f) {
            return Err(Error::NotSubset);
        }
        let kept: Vec<usize> = (0..2 * self.num_edges())
            .filter(|&h| f.contains(self.edge_of[h]))
            .collect();
        let mut renumber = vec![usize::MAX; 2 * self.num_edges()];
        for (new, &old) in kept.iter().enumerate() {
            renumber[old] = new;
        }
        let rotations = self
            .rotations
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|&&h| renumber[h] != usize::MAX)
                    .map(|&h| renumber[h])
                    .collect()
            })
            .collect();
        let edges = f
            .iter()
            .map(|k| {
                let e = &self.edges[k];
                Edge {
                    label: e.label.clone(),
                    ends: [renumber[e.ends[0]], renumber[e.ends[1]]],
                    twisted: e.twisted,
                }
            })
            .collect();
        RibbonGraph::new(rotations, edges)
    }

    /// Bouchet's delta-matroid: `F` is feasible when the spanning subgraph on
    /// `F` has one boundary component.
    pub fn rho(&self) -> Result<DeltaMatroid> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let family = Subset::all(self.num_edges()).filter(|&f| self.count_boundary(f) == 1);
        let s = SetSystem::new(self.ground.clone(), family)?;
        Ok(DeltaMatroid::trusted(s))
    }

    /// Partial dual with respect to the edges in `s`.
    ///
    /// The new vertices are the boundary cycles of the spanning subgraph on
    /// `s`. An edge outside `s` keeps its half-edges, attached at the same
    /// segments; an edge `e ∈ s` is reattached along its two sides, side 0
    /// becoming `e.ends[0]` and side 1 becoming `e.ends[1]`. Each new vertex is
    /// oriented along its traversal, and twist bits absorb the reversals.
    pub fn partial_dual(&self, s: Subset) -> Result<RibbonGraph> {
        if !self.ground.contains_subset(s) {
            return Err(Error::NotSubset);
        }
        let mut reversed = vec![false; 2 * self.num_edges()];
        let mut rotations = Vec::new();
        let mut cycles = self.boundary_cycles(s).into_iter().peekable();
        // Cycles come out in vertex order, so isolated vertices keep their place.
        for (v, rot) in self.rotations.iter().enumerate() {
            if rot.is_empty() {
                rotations.push(Vec::new());
            }
            while let Some((_, cycle)) = cycles.next_if(|(start, _)| *start == v) {
                let mut rotation = Vec::new();
                for (arc, rev) in cycle {
                    let h = match arc {
                        Arc::Segment(h) => h,
                        Arc::Side(k, side) => self.edges[k].ends[side],
                    };
                    reversed[h] = rev;
                    rotation.push(h);
                }
                rotations.push(rotation);
            }
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let [a, b] = e.ends;
                let base = if s.contains(k) { false } else { e.twisted };
                Edge {
                    label: e.label.clone(),
                    ends: e.ends,
                    twisted: base ^ reversed[a] ^ reversed[b],
                }
            })
            .collect();
        RibbonGraph::new(rotations, edges)
    }

    /// Framed intersection graph of a one-vertex ribbon graph: chords are
    /// adjacent when their ends interleave, and framings are twist bits.
    pub fn intersection_graph(&self) -> Result<FramedGraph> {
        if self.num_vertices() != 1 {
            return Err(Error::MultipleVertices(self.num_vertices()));
        }
        let m = self.num_edges();
        let mut pos = vec![0; 2 * m];
        for (i, &h) in self.rotations[0].iter().enumerate() {
            pos[h] = i;
        }
        let span = |e: &Edge| {
            let (p, q) = (pos[e.ends[0]], pos[e.ends[1]]);
            (p.min(q), p.max(q))
        };
        let mut a = BitMatrix::zeros(m, m);
        for (i, ei) in self.edges.iter().enumerate() {
            a.set(i, i, ei.twisted);
            let (lo, hi) = span(ei);
            for (j, ej) in self.edges.iter().enumerate().skip(i + 1) {
                let inside = ej
                    .ends
                    .iter()
                    .filter(|&&h| lo < pos[h] && pos[h] < hi)
                    .count();
                if inside == 1 {
                    a.set(i, j, true);
                    a.set(j, i, true);
                }
            }
        }
        FramedGraph::new(self.ground.clone(), a)
    }

    /// First edge set, by size then lexicographically, whose partial dual has
    /// a single vertex.
    pub fn single_vertex_dual_set(&self) -> Result<Subset> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Subset::all_by_size(self.num_edges())
            .into_iter()
            .find(|&s| self.partial_dual(s).is_ok_and(|d| d.num_vertices() == 1))
            .ok_or(Error::NoSingleVertexDual)
    }

    /// The Lagrangian subspace of the ribbon graph.
    ///
    /// A chord diagram maps to the graphic subspace of its framed intersection
    /// matrix. Any other connected graph is first made single-vertex by a
    /// partial dual `Γ*E'`, and the result is carried back by local duality at
    /// `E'`.
    pub fn pi(&self) -> Result<LagrangianSubspace> {
        let s = self.single_vertex_dual_set()?;
        self.pi_via(s)
    }

    /// `pi` computed through a specific single-vertex partial dual.
    pub fn pi_via(&self, s: Subset) -> Result<LagrangianSubspace> {
        let d = self.partial_dual(s)?;
        if d.num_vertices() != 1 {
            return Err(Error::MultipleVertices(d.num_vertices()));
        }
        let g = d.intersection_graph()?;
        LagrangianSubspace::from_symmetric_matrix(self.ground.clone(), g.adjacency())?.local_dual(s)
    }

    /// Whether some choice of vertex flips untwists every edge, that is,
    /// every cycle carries an even number of twists.
    pub fn is_orientable(&self) -> bool {
        let mut flip: Vec<Option<bool>> = vec![None; self.num_vertices()];
        for root in 0..self.num_vertices() {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for e in &self.edges {
                    let (a, b) = (self.vertex_of[e.ends[0]], self.vertex_of[e.ends[1]]);
                    let (from, to) = if a == u {
                        (a, b)
                    } else if b == u {
                        (b, a)
                    } else {
                        continue;
                    };
                    let want = flip[from].expect("visited") ^ e.twisted;
                    match flip[to] {
                        None => {
                            flip[to] = Some(want);
                            stack.push(to);
                        }
                        Some(f) if f != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// `v − e + f`, with `f` the number of boundary components.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.boundary_components() as i64
    }

    /// Canonical form up to vertex order, rotation start, vertex flips, and
    /// half-edge renumbering; edge labels are kept.
    ///
    /// Flipping a vertex reverses its rotation and toggles the twist of every
    /// non-loop edge at it. Brute force over flips, so only for small graphs.
    pub fn canonical_form(&self) -> (Vec<Vec<usize>>, Vec<bool>) {
        let nv = self.num_vertices();
        assert!(nv <= 16, "canonical_form is brute force over vertex flips");
        let mut best: Option<(Vec<Vec<usize>>, Vec<bool>)> = None;
        for flips in 0u32..1 << nv {
            let twist: Vec<bool> = self
                .edges
                .iter()
                .map(|e| {
                    let (u, v) = (self.vertex_of[e.ends[0]], self.vertex_of[e.ends[1]]);
                    e.twisted ^ (flips >> u & 1 == 1) ^ (flips >> v & 1 == 1)
                })
                .collect();
            let mut verts: Vec<Vec<usize>> = self
                .rotations
                .iter()
                .enumerate()
                .map(|(v, rot)| {
                    let mut seq: Vec<usize> = rot.iter().map(|&h| self.edge_of[h]).collect();
                    if flips >> v & 1 == 1 {
                        seq.reverse();
                    }
                    min_rotation(&seq)
                })
                .collect();
            verts.sort();
            let cand = (verts, twist);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("at least one flip pattern")
    }

    /// Parses `vertices edges`, one rotation line per vertex (`-` if empty),
    /// then one `label a b twist` line per edge.
    pub fn parse_text(text: &str) -> Result<RibbonGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `vertices edges` header"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(hline, "header must be two nonnegative integers"))?;
        let [nv, ne] = nums[..] else {
            return Err(Error::parse(
                hline,
                "header must be two nonnegative integers",
            ));
        };
        let mut rotations = Vec::with_capacity(nv);
        let mut edges = Vec::with_capacity(ne);
        let mut last = hline;
        for _ in 0..nv {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| Error::parse(last + 1, "missing vertex line"))?;
            last = lineno;
            if line == "-" {
                rotations.push(Vec::new());
                continue;
            }
            let rot = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<Vec<usize>, _>>()
                .map_err(|_| Error::parse(lineno, "rotation must list half-edge ids"))?;
            rotations.push(rot);
        }
        for _ in 0..ne {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| Error::parse(last + 1, "missing edge line"))?;
            last = lineno;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [label, a, b, t] = toks[..] else {
                return Err(Error::parse(lineno, "edge line must be `label a b twist`"));
            };
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(lineno, format!("`{s}` is not a half-edge id")))
            };
            let twisted = match t {
                "0" => false,
                "1" => true,
                _ => return Err(Error::parse(lineno, "twist must be 0 or 1")),
            };
            edges.push(Edge {
                label: label.to_string(),
                ends: [num(a)?, num(b)?],
                twisted,
            });
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::parse(lineno, "unexpected trailing line"));
        }
        RibbonGraph::new(rotations, edges).map_err(|e| Error::parse(last, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.num_vertices(), self.num_edges());
        for rot in &self.rotations {
            if rot.is_empty() {
                out.push_str("-\n");
            } else {
                out.push_str(&rot.iter().join(" "));
                out.push('\n');
            }
        }
        for e in &self.edges {
            out.push_str(&format!(
                "{} {} {} {}\n",
                e.label,
                e.ends[0],
                e.ends[1],
                u8::from(e.twisted)
            ));
        }
        out
    }
}

fn min_rotation(seq: &[usize]) -> Vec<usize> {
    (0..seq.len().max(1))
        .map(|i| {
            seq[i.min(seq.len())..]
                .iter()
                .chain(&seq[..i.min(seq.len())])
                .copied()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RibbonGraph {{ rotations: {:?}, edges: [",
            self.rotations
        )?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}:{}-{}{}",
                e.label,
                e.ends[0],
                e.ends[1],
                if e.twisted { "~" } else { "" }
            )?;
        }
        f.write_str("] }")
    }
}

/// All perfect matchings of `0..2m`, each as a list of pairs `(p, q)` with
/// `p < q`, sorted by `p`.
fn matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        free: &mut Vec<usize>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if free.is_empty() {
            out.push(acc.clone());
            return;
        }
        let p = free.remove(0);
        for i in 0..free.len() {
            let q = free.remove(i);
            acc.push((p, q));
            go(free, acc, out);
            acc.pop();
            free.insert(i, q);
        }
        free.insert(0, p);
    }
    let mut out = Vec::new();
    go(&mut (0..2 * m).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every one-vertex ribbon graph with `m` edges: all chord diagrams on `2m`
/// points with chords labeled in order of their first end, times all twist
/// patterns.
pub fn chord_diagrams(m: usize) -> Vec<RibbonGraph> {
    matchings(m)
        .into_iter()
        .flat_map(|pairs| {
            (0u32..1 << m).map(move |twists| {
                let chords: Vec<(usize, usize, bool)> = pairs
                    .iter()
                    .enumerate()
                    .map(|(k, &(p, q))| (p, q, twists >> k & 1 == 1))
                    .collect();
                RibbonGraph::chord_diagram(&chords).expect("valid chord diagram")
            })
        })
        .collect()
}

/// Chord diagrams with at most `max_edges` chords and all their partial duals.
pub fn test_corpus(max_edges: usize) -> Vec<RibbonGraph> {
    (0..=max_edges)
        .flat_map(chord_diagrams)
        .flat_map(|d| {
            Subset::all(d.num_edges())
                .map(|s| d.partial_dual(s).expect("subset of edges"))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_graph(twisted: bool) -> RibbonGraph {
        RibbonGraph::chord_diagram(&[(0, 1, twisted)]).unwrap()
    }

    fn bare_vertex() -> RibbonGraph {
        RibbonGraph::new(vec![vec![]], vec![]).unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(bare_vertex().boundary_components(), 1);
        assert_eq!(loop_graph(false).boundary_components(), 2);
        assert_eq!(loop_graph(true).boundary_components(), 1);
        // Planar pair of loops versus the torus.
        let planar = RibbonGraph::chord_diagram(&[(0, 1, false), (2, 3, false)]).unwrap();
        assert_eq!(planar.boundary_components(), 3);
        let torus = RibbonGraph::chord_diagram(&[(0, 2, false), (1, 3, false)]).unwrap();
        assert_eq!(torus.boundary_components(), 1);
    }

    #[test]
    fn spanning_subgraph_examples() {
        let g = RibbonGraph::chord_diagram(&[(0, 1, false), (2, 3, true)]).unwrap();
        assert_eq!(g.spanning_subgraph(Subset::full(2)).unwrap(), g);
        let bare = g.spanning_subgraph(Subset::EMPTY).unwrap();
        assert_eq!(bare.boundary_components(), bare.num_vertices());
        let one = g.spanning_subgraph(Subset::singleton(0)).unwrap();
        assert_eq!(one, loop_graph(false));
        for f in Subset::all(2) {
            assert_eq!(
                g.spanning_subgraph(f).unwrap().boundary_components(),
                g.spanning_boundary_components(f)
            );
        }
    }

    #[test]
    fn rho_examples() {
        let r = bare_vertex().rho().unwrap();
        assert_eq!(r.feasible(), &[Subset::EMPTY]);
        assert_eq!(
            loop_graph(false).rho().unwrap().feasible(),
            &[Subset::EMPTY]
        );
        assert_eq!(
            loop_graph(true).rho().unwrap().feasible(),
            &[Subset::EMPTY, Subset::singleton(0)]
        );
        let two = RibbonGraph::new(vec![vec![], vec![]], vec![]).unwrap();
        assert_eq!(two.rho(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn partial_dual_examples() {
        let g = RibbonGraph::chord_diagram(&[(0, 2, true), (1, 3, false)]).unwrap();
        assert_eq!(g.partial_dual(Subset::EMPTY).unwrap(), g);
        for s in Subset::all(2) {
            let back = g.partial_dual(s).unwrap().partial_dual(s).unwrap();
            assert_eq!(back.canonical_form(), g.canonical_form());
        }
        // The untwisted loop dualises to a single edge between two vertices.
        let d = loop_graph(false)
            .partial_dual(Subset::singleton(0))
            .unwrap();
        assert_eq!(d.num_vertices(), 2);
        // The twisted loop is self-dual.
        let m = loop_graph(true).partial_dual(Subset::singleton(0)).unwrap();
        assert_eq!(m.canonical_form(), loop_graph(true).canonical_form());
    }

    #[test]
    fn intersection_graph_examples() {
        let apart = RibbonGraph::chord_diagram(&[(0, 1, false), (2, 3, false)]).unwrap();
        assert_eq!(
            apart.intersection_graph().unwrap().adjacency(),
            &BitMatrix::zeros(2, 2)
        );
        let crossed = RibbonGraph::chord_diagram(&[(0, 2, false), (1, 3, false)]).unwrap();
        assert_eq!(
            crossed.intersection_graph().unwrap().adjacency(),
            &BitMatrix::from_u8(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            loop_graph(true).intersection_graph().unwrap().adjacency(),
            &BitMatrix::from_u8(&[&[1]])
        );
        let d = loop_graph(false)
            .partial_dual(Subset::singleton(0))
            .unwrap();
        assert_eq!(d.intersection_graph(), Err(Error::MultipleVertices(2)));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(bare_vertex().pi().unwrap(), LagrangianSubspace::zero());
        let crossed = RibbonGraph::chord_diagram(&[(0, 2, false), (1, 3, false)]).unwrap();
        assert_eq!(
            crossed.pi().unwrap(),
            LagrangianSubspace::from_tokens(GroundSet::numbered(2), &["1^+2", "2^+1"]).unwrap()
        );
    }

    #[test]
    fn nu_of_pi_is_rho_on_small_graphs() {
        for g in test_corpus(2) {
            let rho = g.rho().unwrap();
            assert_eq!(crate::nu(&g.pi().unwrap()), *rho.as_set_system(), "{g:?}");
        }
    }

    #[test]
    fn orientability() {
        assert!(loop_graph(false).is_orientable());
        assert!(!loop_graph(true).is_orientable());
        let torus = RibbonGraph::chord_diagram(&[(0, 2, false), (1, 3, false)]).unwrap();
        assert!(torus.is_orientable());
        assert_eq!(torus.euler_characteristic(), 0);
        // A twisted edge between two vertices can be undone by a flip.
        let d = loop_graph(false)
            .partial_dual(Subset::singleton(0))
            .unwrap();
        assert!(d.is_orientable());
        assert_eq!(d.euler_characteristic(), 2);
    }

    #[test]
    fn corpus_sizes() {
        let sizes: Vec<usize> = (0..=3).map(|m| chord_diagrams(m).len()).collect();
        assert_eq!(sizes, vec![1, 2, 12, 120]);
        assert_eq!(test_corpus(3).len(), 1 + 2 * 2 + 12 * 4 + 120 * 8);
    }

    #[test]
    fn text_roundtrip() {
        let g = RibbonGraph::chord_diagram(&[(0, 2, true), (1, 3, false)]).unwrap();
        assert_eq!(RibbonGraph::parse_text(&g.to_text()).unwrap(), g);
        let d = g.partial_dual(Subset::singleton(1)).unwrap();
        assert_eq!(RibbonGraph::parse_text(&d.to_text()).unwrap(), d);
        assert!(matches!(
            RibbonGraph::parse_text("1 1\n0 1\ne 0 1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(RibbonGraph::parse_text("1 1\n0\ne 0 1 0\n").is_err());
    }
}

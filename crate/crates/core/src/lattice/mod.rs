//! Path graphs on the Aztec diamond and the domino/path correspondence.
//!
//! Coordinates: unit square `s(a, b) = [a, a+1] x [b, b+1]`. The Aztec
//! diamond `AD(n)` is the set of squares with `|a + 1/2| + |b + 1/2| <= n`,
//! and `s(a, b)` is black when `a + b ≡ n - 1 (mod 2)`, so the squares along
//! the north-east side are black. A path vertex is the midpoint of the left
//! edge of a black square and is named by that square's `(a, b)`.
//!
//! Each domino with a black square gives one step between vertices:
//!
//! * horizontal, black on the left: `E`, `(a, b) -> (a + 2, b)`
//! * vertical, black on top: `SE`, `(a, b) -> (a + 1, b - 1)`
//! * vertical, black on the bottom: `NE`, `(a, b) -> (a + 1, b + 1)`
//!
//! and horizontal dominoes with the black square on the right give none.

mod family;
pub mod svg;
mod tiling;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use family::{
    count_families, enumerate_families, enumerate_families_to, first_family, EndpointMode,
    LatticePath,
};
pub use svg::{family_svg, tiling_svg};
pub use tiling::{
    cell_assignments, enumerate_tilings, for_each_tiling, half_paths_to_tiling, list_tilings,
    paths_to_tiling, tiling_to_half_paths, tiling_to_paths, CellAssignment, Domino, DominoTiling,
    Region, TilingFilter,
};

/// Midpoint of the left edge of the black square `s(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVertex {
    pub a: i32,
    pub b: i32,
}

impl LatticeVertex {
    pub const fn new(a: i32, b: i32) -> Self {
        LatticeVertex { a, b }
    }

    pub fn after(self, step: Step) -> Self {
        match step {
            Step::E => LatticeVertex::new(self.a + 2, self.b),
            Step::SE => LatticeVertex::new(self.a + 1, self.b - 1),
            Step::NE => LatticeVertex::new(self.a + 1, self.b + 1),
        }
    }

    /// The white square of the domino that realizes `step` from here.
    pub fn white_partner(self, step: Step) -> (i32, i32) {
        match step {
            Step::E => (self.a + 1, self.b),
            Step::SE => (self.a, self.b - 1),
            Step::NE => (self.a, self.b + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    SE,
    NE,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::E, Step::SE, Step::NE];

    pub fn between(from: LatticeVertex, to: LatticeVertex) -> Option<Step> {
        Step::ALL.into_iter().find(|s| from.after(*s) == to)
    }
}

/// Whether `s(a, b)` lies in `AD(n)`.
pub fn in_diamond(n: usize, a: i32, b: i32) -> bool {
    (2 * a + 1).abs() + (2 * b + 1).abs() <= 2 * n as i32
}

/// Whether `s(a, b)` is black in the coloring of `AD(n)`.
pub fn is_black(n: usize, a: i32, b: i32) -> bool {
    (a + b - (n as i32 - 1)).rem_euclid(2) == 0
}

/// South-west boundary vertex labeled `i` (bottom to top).
pub fn sw_vertex(n: usize, i: usize) -> LatticeVertex {
    LatticeVertex::new(-(i as i32), i as i32 - n as i32 - 1)
}

/// Point just outside the south-east boundary square labeled `j`.
pub fn se_vertex(n: usize, j: usize) -> LatticeVertex {
    LatticeVertex::new(j as i32, j as i32 - n as i32 - 1)
}

/// Diagonal target `v_l` of the half graph of order `n`.
pub fn diagonal_vertex(n: usize, l: usize) -> LatticeVertex {
    let i = l.div_ceil(2) as i32;
    let n = n as i32;
    if l.is_multiple_of(2) {
        LatticeVertex::new(0, 2 * i - n - 1)
    } else {
        LatticeVertex::new(-1, 2 * i - n - 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// The full diamond graph, sources on the SW side and sinks past the SE side.
    Aztec,
    /// Left half (`a <= 0`), with targets on the two central columns.
    Half,
    /// The half graph of order `m + 1` with its SW sources and `v_2` deleted.
    ReducedHalf,
}

/// Index of a vertex inside a [`PathGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Finite DAG with labeled sources, targets and (for half graphs) the
/// auxiliary points `x_i`. Vertices are stored sorted by `(a, b)`, which is
/// a topological order since every step increases `a`.
#[derive(Debug, Clone)]
pub struct PathGraph {
    kind: GraphKind,
    order: usize,
    vertices: Vec<LatticeVertex>,
    index: HashMap<LatticeVertex, VertexId>,
    out: Vec<Vec<(VertexId, Step)>>,
    sources: Vec<VertexId>,
    targets: Vec<VertexId>,
    xpoints: Vec<VertexId>,
}

impl PathGraph {
    fn assemble(
        kind: GraphKind,
        order: usize,
        mut vertices: Vec<LatticeVertex>,
        has_edge: impl Fn(LatticeVertex, Step) -> bool,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        let index: HashMap<_, _> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (*v, VertexId(i)))
            .collect();
        let out = vertices
            .iter()
            .map(|v| {
                Step::ALL
                    .into_iter()
                    .filter_map(|s| {
                        let w = v.after(s);
                        match index.get(&w) {
                            Some(&id) if has_edge(*v, s) => Some((id, s)),
                            _ => None,
                        }
                    })
                    .collect()
            })
            .collect();
        PathGraph {
            kind,
            order,
            vertices,
            index,
            out,
            sources: Vec::new(),
            targets: Vec::new(),
            xpoints: Vec::new(),
        }
    }

    fn ids(&self, points: impl IntoIterator<Item = LatticeVertex>) -> Vec<VertexId> {
        points
            .into_iter()
            .map(|p| *self.index.get(&p).expect("labeled point is a vertex"))
            .collect()
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// The order parameter the graph was built with.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, id: VertexId) -> LatticeVertex {
        self.vertices[id.0]
    }

    pub fn vertices(&self) -> &[LatticeVertex] {
        &self.vertices
    }

    pub fn id_of(&self, v: LatticeVertex) -> Result<VertexId> {
        self.index
            .get(&v)
            .copied()
            .ok_or(Error::VertexNotInGraph(v.a, v.b))
    }

    pub fn contains(&self, v: LatticeVertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn out_edges(&self, id: VertexId) -> &[(VertexId, Step)] {
        &self.out[id.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticeVertex, LatticeVertex, Step)> + '_ {
        self.out.iter().enumerate().flat_map(move |(i, outs)| {
            outs.iter()
                .map(move |(w, s)| (self.vertices[i], self.vertices[w.0], *s))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// `u_1, ..., u_n` bottom to top (empty for the reduced half graph).
    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }

    /// `w_1..w_n` for the full graph, `v_1..v_2n` for half graphs.
    pub fn targets(&self) -> &[VertexId] {
        &self.targets
    }

    /// `x_1, ..., x_m` bottom to top.
    pub fn xpoints(&self) -> &[VertexId] {
        &self.xpoints
    }

    /// 1-based source label lookup.
    pub fn source(&self, i: usize) -> Result<VertexId> {
        label(&self.sources, i)
    }

    pub fn target(&self, l: usize) -> Result<VertexId> {
        label(&self.targets, l)
    }

    pub fn xpoint(&self, i: usize) -> Result<VertexId> {
        label(&self.xpoints, i)
    }

    /// Position of `id` in the target list.
    pub fn target_position(&self, id: VertexId) -> Option<usize> {
        self.targets.iter().position(|t| *t == id)
    }

    /// Path counts from `from` to every vertex, by dynamic programming in
    /// topological order.
    pub fn path_counts_all(&self, from: VertexId) -> Vec<BigInt> {
        let mut counts = vec![BigInt::zero(); self.vertices.len()];
        counts[from.0] = BigInt::from(1);
        for i in from.0..self.vertices.len() {
            if counts[i].is_zero() {
                continue;
            }
            let c = counts[i].clone();
            for (w, _) in &self.out[i] {
                counts[w.0] += &c;
            }
        }
        counts
    }

    /// Path counts from `from` to each target, in target order.
    pub fn path_counts_from(&self, from: VertexId) -> Vec<BigInt> {
        let all = self.path_counts_all(from);
        self.targets.iter().map(|t| all[t.0].clone()).collect()
    }
}

fn label(list: &[VertexId], i: usize) -> Result<VertexId> {
    if i == 0 || i > list.len() {
        return Err(Error::Index {
            index: i,
            max: list.len(),
        });
    }
    Ok(list[i - 1])
}

fn check_order(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain("graph order must be >= 1".into()));
    }
    Ok(())
}

fn black_squares(n: usize, keep: impl Fn(i32, i32) -> bool) -> Vec<LatticeVertex> {
    let r = n as i32;
    let mut out = Vec::new();
    for a in -r..r {
        for b in -r..r {
            if in_diamond(n, a, b) && is_black(n, a, b) && keep(a, b) {
                out.push(LatticeVertex::new(a, b));
            }
        }
    }
    out
}

/// An edge exists when its white square lies in the region.
fn white_in_diamond(n: usize) -> impl Fn(LatticeVertex, Step) -> bool {
    move |v, s| {
        let (a, b) = v.white_partner(s);
        in_diamond(n, a, b) && in_diamond(n, v.a, v.b)
    }
}

/// Path graph of the whole Aztec diamond `AD(n)`: sources `u_1..u_n` on the
/// SW boundary, targets `w_1..w_n` just past the SE boundary.
pub fn build_ad_graph(n: usize) -> Result<PathGraph> {
    check_order(n)?;
    let mut vertices = black_squares(n, |_, _| true);
    vertices.extend((1..=n).map(|j| se_vertex(n, j)));
    let mut g = PathGraph::assemble(GraphKind::Aztec, n, vertices, white_in_diamond(n));
    g.sources = g.ids((1..=n).map(|i| sw_vertex(n, i)));
    g.targets = g.ids((1..=n).map(|j| se_vertex(n, j)));
    Ok(g)
}

/// Left half (`a <= 0`) of the Aztec graph of order `n`, with targets
/// `v_1..v_2n` on columns `a = -1` (odd labels) and `a = 0` (even labels).
pub fn build_ds_graph(n: usize) -> Result<PathGraph> {
    check_order(n)?;
    let vertices = black_squares(n, |a, _| a <= 0);
    let mut g = PathGraph::assemble(GraphKind::Half, n, vertices, white_in_diamond(n));
    g.sources = g.ids((1..=n).map(|i| sw_vertex(n, i)));
    g.targets = g.ids((1..=2 * n).map(|l| diagonal_vertex(n, l)));
    // x_i are the two non-boundary neighbours of u_{i+1} and u_{i+2}
    g.xpoints = g.ids((1..n).map(|i| xpoint_in_half(n, i)));
    Ok(g)
}

fn xpoint_in_half(n: usize, i: usize) -> LatticeVertex {
    LatticeVertex::new(-(i as i32), i as i32 + 1 - n as i32)
}

/// The half graph of order `m + 1` with every `u_i` and `v_2` deleted; its
/// SW boundary points become `x_1..x_m` and the targets are renumbered
/// `v_1..v_2m` (old `v_3..v_{2m+2}`).
pub fn build_dsbar_graph(m: usize) -> Result<PathGraph> {
    check_order(m)?;
    let n = m + 1;
    let deleted: Vec<LatticeVertex> = (1..=n)
        .map(|i| sw_vertex(n, i))
        .chain([diagonal_vertex(n, 2)])
        .collect();
    let vertices = black_squares(n, |a, b| {
        a <= 0 && !deleted.contains(&LatticeVertex::new(a, b))
    });
    let mut g = PathGraph::assemble(GraphKind::ReducedHalf, m, vertices, white_in_diamond(n));
    g.targets = g.ids((3..=2 * n).map(|l| diagonal_vertex(n, l)));
    g.xpoints = g.ids((1..=m).map(|i| xpoint_in_half(n, i)));
    Ok(g)
}

/// Path counts from `from` to every target of `g`.
pub fn path_counts(g: &PathGraph, from: LatticeVertex) -> Result<Vec<BigInt>> {
    let id = g.id_of(from)?;
    Ok(g.path_counts_from(id))
}

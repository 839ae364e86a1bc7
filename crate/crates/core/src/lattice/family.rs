use super::{LatticeVertex, PathGraph, Step, VertexId};
use crate::error::Result;
use crate::kernel::IndexSet;

/// A path in a [`PathGraph`], as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub vertices: Vec<LatticeVertex>,
}

impl LatticePath {
    pub fn start(&self) -> LatticeVertex {
        self.vertices[0]
    }

    pub fn end(&self) -> LatticeVertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn steps(&self) -> Vec<Step> {
        self.vertices
            .windows(2)
            .map(|w| Step::between(w[0], w[1]).expect("consecutive vertices are one step apart"))
            .collect()
    }

    /// Whether every consecutive pair is an edge of `g`.
    pub fn follows(&self, g: &PathGraph) -> bool {
        self.vertices.windows(2).all(|w| {
            g.id_of(w[0])
                .is_ok_and(|id| g.out_edges(id).iter().any(|(to, _)| g.vertex(*to) == w[1]))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointMode {
    /// Any set of distinct targets.
    Free,
    /// For every `l`, `v_{2l-1}` and `v_{2l}` are both endpoints or neither.
    Paired,
}

struct Search<'g> {
    g: &'g PathGraph,
    starts: Vec<VertexId>,
    allowed_end: Vec<bool>,
    mode: EndpointMode,
    used: Vec<bool>,
    ended: Vec<bool>,
    paths: Vec<Vec<VertexId>>,
    stopped: bool,
}

impl Search<'_> {
    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool) {
        self.next_path(visit);
    }

    fn next_path(&mut self, visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool) {
        if self.stopped {
            return;
        }
        let k = self.paths.len();
        if k == self.starts.len() {
            if self.endpoints_ok() && !visit(&self.paths) {
                self.stopped = true;
            }
            return;
        }
        let s = self.starts[k];
        if self.used[s.0] {
            return;
        }
        self.used[s.0] = true;
        self.paths.push(vec![s]);
        self.extend(visit);
        self.paths.pop();
        self.used[s.0] = false;
    }

    fn extend(&mut self, visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool) {
        let cur = *self.paths.last().and_then(|p| p.last()).expect("open path");
        if self.allowed_end[cur.0] {
            self.ended[cur.0] = true;
            self.next_path(visit);
            self.ended[cur.0] = false;
        }
        let g = self.g;
        for (w, _) in g.out_edges(cur) {
            if self.stopped {
                return;
            }
            if self.used[w.0] {
                continue;
            }
            self.used[w.0] = true;
            self.paths.last_mut().expect("open path").push(*w);
            self.extend(visit);
            self.paths.last_mut().expect("open path").pop();
            self.used[w.0] = false;
        }
    }

    fn endpoints_ok(&self) -> bool {
        match self.mode {
            EndpointMode::Free => true,
            EndpointMode::Paired => self
                .g
                .targets()
                .chunks(2)
                .all(|pair| pair.len() == 2 && self.ended[pair[0].0] == self.ended[pair[1].0]),
        }
    }
}

fn search<'g>(
    g: &'g PathGraph,
    starts: &[VertexId],
    targets: &[VertexId],
    mode: EndpointMode,
) -> Search<'g> {
    let mut allowed_end = vec![false; g.vertex_count()];
    for t in targets {
        allowed_end[t.0] = true;
    }
    Search {
        g,
        starts: starts.to_vec(),
        allowed_end,
        mode,
        used: vec![false; g.vertex_count()],
        ended: vec![false; g.vertex_count()],
        paths: Vec::new(),
        stopped: false,
    }
}

fn start_ids(g: &PathGraph, sources: &IndexSet) -> Result<Vec<VertexId>> {
    let list = if g.sources().is_empty() {
        g.xpoints()
    } else {
        g.sources()
    };
    sources.check_within(list.len())?;
    Ok(sources.iter().map(|i| list[i - 1]).collect())
}

fn for_each_family(
    g: &PathGraph,
    sources: &IndexSet,
    targets: Option<&IndexSet>,
    mode: EndpointMode,
    visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool,
) -> Result<()> {
    let starts = start_ids(g, sources)?;
    let ends: Vec<VertexId> = match targets {
        Some(t) => {
            t.check_within(g.targets().len())?;
            t.iter().map(|l| g.targets()[l - 1]).collect()
        }
        None => g.targets().to_vec(),
    };
    search(g, &starts, &ends, mode).run(visit);
    Ok(())
}

/// All families of vertex-disjoint paths, one from each selected source
/// (the `u_i`, or the `x_i` for reduced half graphs), ending at distinct
/// targets.
pub fn enumerate_families(
    g: &PathGraph,
    sources: &IndexSet,
    mode: EndpointMode,
) -> Result<Vec<Vec<LatticePath>>> {
    enumerate_families_to(g, sources, None, mode)
}

/// As [`enumerate_families`], with the endpoints restricted to the targets
/// labeled in `targets`.
pub fn enumerate_families_to(
    g: &PathGraph,
    sources: &IndexSet,
    targets: Option<&IndexSet>,
    mode: EndpointMode,
) -> Result<Vec<Vec<LatticePath>>> {
    let mut out = Vec::new();
    for_each_family(g, sources, targets, mode, &mut |paths| {
        out.push(
            paths
                .iter()
                .map(|p| LatticePath {
                    vertices: p.iter().map(|id| g.vertex(*id)).collect(),
                })
                .collect(),
        );
        true
    })?;
    Ok(out)
}

/// Number of families [`enumerate_families_to`] would return, without
/// materializing them.
pub fn count_families(
    g: &PathGraph,
    sources: &IndexSet,
    targets: Option<&IndexSet>,
    mode: EndpointMode,
) -> Result<u64> {
    let mut n = 0u64;
    for_each_family(g, sources, targets, mode, &mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

/// The first family in search order, if there is one.
pub fn first_family(
    g: &PathGraph,
    sources: &IndexSet,
    targets: Option<&IndexSet>,
    mode: EndpointMode,
) -> Result<Option<Vec<LatticePath>>> {
    let mut out = None;
    for_each_family(g, sources, targets, mode, &mut |paths| {
        out = Some(
            paths
                .iter()
                .map(|p| LatticePath {
                    vertices: p.iter().map(|id| g.vertex(*id)).collect(),
                })
                .collect(),
        );
        false
    })?;
    Ok(out)
}

use std::collections::HashMap;
use std::sync::Arc;

use super::{
    diagonal_vertex, in_diamond, is_black, se_vertex, sw_vertex, LatticePath, LatticeVertex, Step,
};
use crate::error::{Error, Result};
use crate::kernel::IndexSet;

type Square = (i32, i32);

/// `AD(n)` with the SW boundary squares not labeled in `kept` removed,
/// together with their mirror images on the SE boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    n: usize,
    kept: IndexSet,
    squares: Vec<Square>,
    index: HashMap<Square, usize>,
}

impl Region {
    pub fn new(n: usize, kept: IndexSet) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("region order must be >= 1".into()));
        }
        kept.check_within(n)?;
        let removed: Vec<Square> = (1..=n)
            .filter(|l| !kept.contains(*l))
            .flat_map(|l| {
                let u = sw_vertex(n, l);
                [(u.a, u.b), (-u.a - 1, u.b)]
            })
            .collect();
        let r = n as i32;
        let mut squares = Vec::new();
        for b in -r..r {
            for a in -r..r {
                if in_diamond(n, a, b) && !removed.contains(&(a, b)) {
                    squares.push((a, b));
                }
            }
        }
        let index = squares.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Ok(Region {
            n,
            kept,
            squares,
            index,
        })
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, IndexSet::full(n))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kept(&self) -> &IndexSet {
        &self.kept
    }

    /// Squares in `(b, a)` lexicographic order.
    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn contains(&self, a: i32, b: i32) -> bool {
        self.index.contains_key(&(a, b))
    }

    pub fn is_black(&self, a: i32, b: i32) -> bool {
        is_black(self.n, a, b)
    }

    fn id(&self, s: Square) -> Option<usize> {
        self.index.get(&s).copied()
    }
}

/// An unordered pair of adjacent squares, stored with the smaller square
/// (in `(b, a)` order) first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub first: Square,
    pub second: Square,
}

impl Domino {
    pub fn new(x: Square, y: Square) -> Result<Self> {
        let adjacent = (x.0 - y.0).abs() + (x.1 - y.1).abs() == 1;
        if !adjacent {
            return Err(Error::InvalidTiling(format!(
                "squares {x:?} and {y:?} are not adjacent"
            )));
        }
        let (first, second) = if (x.1, x.0) < (y.1, y.0) {
            (x, y)
        } else {
            (y, x)
        };
        Ok(Domino { first, second })
    }

    pub fn is_horizontal(&self) -> bool {
        self.first.1 == self.second.1
    }

    pub fn contains(&self, s: Square) -> bool {
        self.first == s || self.second == s
    }

    /// Reflection in the vertical diagonal `x = 0`.
    pub fn mirrored(&self) -> Domino {
        Domino::new(mirror(self.first), mirror(self.second)).expect("reflection keeps adjacency")
    }
}

fn mirror(s: Square) -> Square {
    (-s.0 - 1, s.1)
}

/// A domino tiling of a [`Region`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoTiling {
    region: Arc<Region>,
    partner: Vec<usize>,
}

impl DominoTiling {
    pub fn from_dominoes(region: Region, dominoes: &[Domino]) -> Result<Self> {
        let region = Arc::new(region);
        let mut partner = vec![usize::MAX; region.squares.len()];
        for d in dominoes {
            let (x, y) = match (region.id(d.first), region.id(d.second)) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(Error::InvalidTiling(format!(
                        "domino {d:?} leaves the region"
                    )))
                }
            };
            if partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::InvalidTiling(format!(
                    "domino {d:?} overlaps another"
                )));
            }
            partner[x] = y;
            partner[y] = x;
        }
        if let Some(i) = partner.iter().position(|p| *p == usize::MAX) {
            return Err(Error::InvalidTiling(format!(
                "square {:?} is not covered",
                region.squares[i]
            )));
        }
        Ok(DominoTiling { region, partner })
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn order(&self) -> usize {
        self.region.n
    }

    pub fn dominoes(&self) -> Vec<Domino> {
        let sq = &self.region.squares;
        (0..sq.len())
            .filter(|i| *i < self.partner[*i])
            .map(|i| Domino::new(sq[i], sq[self.partner[i]]).expect("tiling dominoes are adjacent"))
            .collect()
    }

    /// The square paired with `s`, if `s` is in the region.
    pub fn partner_of(&self, s: Square) -> Option<Square> {
        self.region
            .id(s)
            .map(|i| self.region.squares[self.partner[i]])
    }

    fn paired(&self, x: Square, y: Square) -> bool {
        self.partner_of(x) == Some(y)
    }

    pub fn is_diag_symmetric(&self) -> bool {
        self.region
            .squares
            .iter()
            .all(|s| self.partner_of(mirror(*s)) == self.partner_of(*s).map(mirror))
    }

    pub fn is_off_diag_symmetric(&self) -> bool {
        self.is_diag_symmetric() && cell_assignments(self).is_off_diagonal()
    }
}

/// One value in `{-1, 0, 1}` per diagonal cell, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellAssignment(pub Vec<i8>);

impl CellAssignment {
    pub fn values(&self) -> &[i8] {
        &self.0
    }

    /// Every diagonal cell holds exactly one complete domino.
    pub fn is_off_diagonal(&self) -> bool {
        self.0.iter().all(|v| *v == 0)
    }
}

/// Cell values on the vertical diagonal: complete dominoes in the cell, minus one.
///
/// Cell `i` is the 2x2 block centered at `(0, 2i - n - 1)`.
pub fn cell_assignments(t: &DominoTiling) -> CellAssignment {
    let n = t.order() as i32;
    let values = (1..=n)
        .map(|i| {
            let c = 2 * i - n - 1;
            let (ne, nw, sw, se) = ((0, c), (-1, c), (-1, c - 1), (0, c - 1));
            let complete = [(nw, ne), (sw, se), (sw, nw), (se, ne)]
                .iter()
                .filter(|(x, y)| t.paired(*x, *y))
                .count() as i8;
            complete - 1
        })
        .collect();
    CellAssignment(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingFilter {
    All,
    DiagSymmetric,
    OffDiagSymmetric,
}

struct TilingSearch<'r> {
    region: &'r Region,
    partner: Vec<usize>,
    symmetric: bool,
    mirror_of: Vec<usize>,
}

impl TilingSearch<'_> {
    fn place(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        if self.partner[x] != usize::MAX || self.partner[y] != usize::MAX {
            return None;
        }
        self.partner[x] = y;
        self.partner[y] = x;
        let mut placed = vec![x, y];
        if self.symmetric {
            let (mx, my) = (self.mirror_of[x], self.mirror_of[y]);
            if (mx, my) != (y, x) {
                if self.partner[mx] != usize::MAX || self.partner[my] != usize::MAX {
                    self.unplace(&placed);
                    return None;
                }
                self.partner[mx] = my;
                self.partner[my] = mx;
                placed.extend([mx, my]);
            }
        }
        Some(placed)
    }

    fn unplace(&mut self, placed: &[usize]) {
        for s in placed {
            self.partner[*s] = usize::MAX;
        }
    }

    fn run(&mut self, from: usize, visit: &mut dyn FnMut(&[usize])) {
        let sq = &self.region.squares;
        let Some(first) = (from..sq.len()).find(|i| self.partner[*i] == usize::MAX) else {
            visit(&self.partner);
            return;
        };
        let (a, b) = sq[first];
        for next in [(a + 1, b), (a, b + 1)] {
            if let Some(y) = self.region.id(next) {
                if let Some(placed) = self.place(first, y) {
                    self.run(first + 1, visit);
                    self.unplace(&placed);
                }
            }
        }
    }
}

/// Calls `visit` on every tiling of `region` passing `filter`, in the order
/// of a depth-first search that always covers the first empty square in
/// `(b, a)` order, trying the horizontal domino before the vertical one.
pub fn for_each_tiling(
    region: &Region,
    filter: TilingFilter,
    mut visit: impl FnMut(&DominoTiling),
) {
    let shared = Arc::new(region.clone());
    let mirror_of = region
        .squares
        .iter()
        .map(|s| region.id(mirror(*s)).expect("regions are mirror symmetric"))
        .collect();
    let mut search = TilingSearch {
        region,
        partner: vec![usize::MAX; region.squares.len()],
        symmetric: filter != TilingFilter::All,
        mirror_of,
    };
    search.run(0, &mut |partner| {
        let t = DominoTiling {
            region: Arc::clone(&shared),
            partner: partner.to_vec(),
        };
        if filter != TilingFilter::OffDiagSymmetric || cell_assignments(&t).is_off_diagonal() {
            visit(&t);
        }
    });
}

/// Number of tilings of the dented region `(n, kept)` passing `filter`.
pub fn enumerate_tilings(n: usize, filter: TilingFilter, kept: &IndexSet) -> Result<u64> {
    let region = Region::new(n, kept.clone())?;
    let mut count = 0u64;
    for_each_tiling(&region, filter, |_| count += 1);
    Ok(count)
}

pub fn list_tilings(n: usize, filter: TilingFilter, kept: &IndexSet) -> Result<Vec<DominoTiling>> {
    let region = Region::new(n, kept.clone())?;
    let mut out = Vec::new();
    for_each_tiling(&region, filter, |t| out.push(t.clone()));
    Ok(out)
}

fn step_of(t: &DominoTiling, v: LatticeVertex) -> Result<Option<Step>> {
    let Some(p) = t.partner_of((v.a, v.b)) else {
        return Ok(None);
    };
    Step::ALL
        .into_iter()
        .find(|s| v.white_partner(*s) == p)
        .map(Some)
        .ok_or_else(|| Error::InvalidTiling(format!("path stops at ({}, {})", v.a, v.b)))
}

/// Non-intersecting paths of the full diamond graph, one from each kept
/// `u_i` to the matching `w_j`, ordered by source.
pub fn tiling_to_paths(t: &DominoTiling) -> Result<Vec<LatticePath>> {
    let n = t.order();
    t.region
        .kept
        .iter()
        .map(|i| {
            let mut v = sw_vertex(n, i);
            let mut vertices = vec![v];
            while let Some(step) = step_of(t, v)? {
                v = v.after(step);
                vertices.push(v);
            }
            let sink = (1..=n).any(|j| se_vertex(n, j) == v);
            if !sink {
                return Err(Error::InvalidTiling(format!(
                    "path from u_{i} ends inside the region"
                )));
            }
            Ok(LatticePath { vertices })
        })
        .collect()
}

/// Paths of the left half graph, one from each kept `u_i`, for a
/// diagonally symmetric tiling.
pub fn tiling_to_half_paths(t: &DominoTiling) -> Result<Vec<LatticePath>> {
    if !t.is_diag_symmetric() {
        return Err(Error::InvalidTiling(
            "tiling is not diagonally symmetric".into(),
        ));
    }
    let n = t.order();
    t.region
        .kept
        .iter()
        .map(|i| {
            let mut v = sw_vertex(n, i);
            let mut vertices = vec![v];
            loop {
                let step = step_of(t, v)?.ok_or_else(|| {
                    Error::InvalidTiling(format!("path from u_{i} leaves the region"))
                })?;
                if step == Step::E && v.a == -1 {
                    break;
                }
                v = v.after(step);
                vertices.push(v);
                if v.a == 0 {
                    break;
                }
            }
            Ok(LatticePath { vertices })
        })
        .collect()
}

fn path_dominoes(path: &LatticePath) -> Result<Vec<Domino>> {
    path.vertices
        .windows(2)
        .map(|w| {
            let step = Step::between(w[0], w[1]).ok_or_else(|| {
                Error::InvalidTiling(format!("{:?} -> {:?} is not a step", w[0], w[1]))
            })?;
            Domino::new((w[0].a, w[0].b), w[0].white_partner(step))
        })
        .collect()
}

struct Cover<'r> {
    region: &'r Region,
    used: Vec<bool>,
    dominoes: Vec<Domino>,
}

impl<'r> Cover<'r> {
    fn new(region: &'r Region) -> Self {
        Cover {
            region,
            used: vec![false; region.squares.len()],
            dominoes: Vec::new(),
        }
    }

    fn free(&self, s: Square) -> bool {
        self.region.id(s).is_some_and(|i| !self.used[i])
    }

    fn add(&mut self, d: Domino) -> Result<()> {
        if !self.free(d.first) || !self.free(d.second) {
            return Err(Error::InvalidTiling(format!(
                "domino {d:?} overlaps or leaves the region"
            )));
        }
        for s in [d.first, d.second] {
            let i = self.region.id(s).expect("checked above");
            self.used[i] = true;
        }
        self.dominoes.push(d);
        Ok(())
    }

    /// Covers each remaining black square in the selection with the white
    /// square to its left.
    fn fill_left(&mut self, select: impl Fn(Square) -> bool) -> Result<()> {
        let todo: Vec<Square> = self
            .region
            .squares
            .iter()
            .copied()
            .filter(|s| select(*s) && self.region.is_black(s.0, s.1) && self.free(*s))
            .collect();
        for (a, b) in todo {
            self.add(Domino::new((a - 1, b), (a, b))?)?;
        }
        Ok(())
    }
}

fn check_sources(n: usize, kept: &IndexSet, paths: &[LatticePath]) -> Result<()> {
    let starts: Vec<LatticeVertex> = kept.iter().map(|i| sw_vertex(n, i)).collect();
    let got: Vec<LatticeVertex> = paths.iter().map(LatticePath::start).collect();
    if starts != got {
        return Err(Error::InvalidTiling(
            "paths must start at the kept sources in order".into(),
        ));
    }
    Ok(())
}

/// Inverse of [`tiling_to_paths`].
pub fn paths_to_tiling(n: usize, kept: &IndexSet, paths: &[LatticePath]) -> Result<DominoTiling> {
    let region = Region::new(n, kept.clone())?;
    check_sources(n, kept, paths)?;
    let mut cover = Cover::new(&region);
    for p in paths {
        for d in path_dominoes(p)? {
            cover.add(d)?;
        }
    }
    cover.fill_left(|_| true)?;
    let dominoes = cover.dominoes;
    DominoTiling::from_dominoes(region, &dominoes)
}

/// Inverse of [`tiling_to_half_paths`]: the symmetric tiling determined by
/// a family of half-graph paths.
pub fn half_paths_to_tiling(
    n: usize,
    kept: &IndexSet,
    paths: &[LatticePath],
) -> Result<DominoTiling> {
    let region = Region::new(n, kept.clone())?;
    check_sources(n, kept, paths)?;
    let targets: Vec<LatticeVertex> = (1..=2 * n).map(|l| diagonal_vertex(n, l)).collect();
    let mut cover = Cover::new(&region);
    for p in paths {
        if !targets.contains(&p.end()) {
            return Err(Error::InvalidTiling(format!(
                "path ends at {:?}, not a diagonal target",
                p.end()
            )));
        }
        for d in path_dominoes(p)? {
            cover.add(d)?;
        }
        let end = p.end();
        if end.a == -1 {
            cover.add(Domino::new((-1, end.b), (0, end.b))?)?;
        }
    }
    cover.fill_left(|(a, _)| a <= -1)?;
    let crossing: Vec<Square> = region
        .squares
        .iter()
        .copied()
        .filter(|s| s.0 == -1 && cover.free(*s))
        .collect();
    for (a, b) in crossing {
        cover.add(Domino::new((a, b), (0, b))?)?;
    }
    let left: Vec<Domino> = cover
        .dominoes
        .iter()
        .filter(|d| d.second.0 <= -1 && d.first.0 <= -1)
        .copied()
        .collect();
    for d in left {
        cover.add(d.mirrored())?;
    }
    let dominoes = cover.dominoes;
    let t = DominoTiling::from_dominoes(region, &dominoes)?;
    debug_assert!(t.is_diag_symmetric());
    Ok(t)
}

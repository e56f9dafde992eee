use thiserror::Error;

use crate::vertex::VertexId;

/// Rejected input to [`build_pc_lists`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("n must be >= 1")]
    NoVertices,
    #[error("expected {expected} complement flags, found {found}")]
    FlagCount { expected: usize, found: usize },
    #[error("entry ({v}, {w}) is out of range 1..={n}")]
    VertexOutOfRange { v: u32, w: u32, n: u32 },
    #[error("entry ({v}, {v}) lists a vertex in its own pc-list")]
    SelfEntry { v: u32 },
    #[error("entry ({v}, {w}) appears more than once")]
    DuplicatePair { v: u32, w: u32 },
    #[error("{cells} list cells do not fit in 32-bit cell handles")]
    TooLarge { cells: usize },
}

/// The pc-list representation of a digraph `G`.
///
/// Every vertex `v` owns a strictly ascending list of vertex ids terminated by
/// a sentinel cell holding `n + 1`. If `v` is uncomplemented the list holds
/// its out-neighbors in `G`; otherwise it holds the vertices of `V \ {v}` that
/// are *not* out-neighbors.
///
/// The value is immutable once built. Traversals take a private
/// [`PcLists`](crate::PcLists) working copy of the links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcDigraph {
    n: u32,
    m_tilde: usize,
    complemented: Vec<bool>,
    // starts[i]..starts[i + 1] is the cell range of vertex i + 1, sentinel last.
    starts: Vec<u32>,
    cells: Vec<VertexId>,
}

impl PcDigraph {
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of real (non-sentinel) list entries, fixed at construction.
    #[inline]
    pub fn m_tilde(&self) -> usize {
        self.m_tilde
    }

    #[inline]
    pub fn is_complemented(&self, v: VertexId) -> bool {
        self.complemented[v.index()]
    }

    pub fn complement_flags(&self) -> &[bool] {
        &self.complemented
    }

    /// The sentinel id `n + 1`.
    #[inline]
    pub fn sentinel(&self) -> VertexId {
        VertexId::from_raw(self.n + 1)
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> {
        (1..=self.n).map(VertexId::from_raw)
    }

    /// The full stored list of `v`, including the trailing sentinel.
    #[inline]
    pub fn pc_list(&self, v: VertexId) -> &[VertexId] {
        let i = v.index();
        &self.cells[self.starts[i] as usize..self.starts[i + 1] as usize]
    }

    /// The real entries of `v`'s list, without the sentinel.
    #[inline]
    pub fn entries(&self, v: VertexId) -> &[VertexId] {
        let list = self.pc_list(v);
        &list[..list.len() - 1]
    }

    pub(crate) fn cell_starts(&self) -> &[u32] {
        &self.starts
    }

    pub(crate) fn cell_vertices(&self) -> &[VertexId] {
        &self.cells
    }

    /// Heap bytes held by this value.
    pub fn heap_bytes(&self) -> usize {
        self.complemented.capacity()
            + self.starts.capacity() * std::mem::size_of::<u32>()
            + self.cells.capacity() * std::mem::size_of::<VertexId>()
    }

    /// All `(v, w)` entry pairs in list order.
    pub fn entry_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |v| self.entries(v).iter().map(move |&w| (v, w)))
    }
}

/// Builds a [`PcDigraph`] from unsorted `(v, w)` entry pairs.
///
/// Pairs are grouped and ordered with a two-pass counting sort (first by `w`,
/// then stably by `v`), so construction is `O(n + entries.len())`.
pub fn build_pc_lists(
    n: u32,
    entries: &[(u32, u32)],
    complemented: &[bool],
) -> Result<PcDigraph, BuildError> {
    build_pc_lists_counted(n, entries, complemented).map(|(g, _)| g)
}

/// Like [`build_pc_lists`], also returning the number of elementary loop
/// iterations performed.
pub fn build_pc_lists_counted(
    n: u32,
    entries: &[(u32, u32)],
    complemented: &[bool],
) -> Result<(PcDigraph, u64), BuildError> {
    if n == 0 {
        return Err(BuildError::NoVertices);
    }
    let nu = n as usize;
    if complemented.len() != nu {
        return Err(BuildError::FlagCount {
            expected: nu,
            found: complemented.len(),
        });
    }
    let total = entries.len() + nu;
    if total > u32::MAX as usize - 1 {
        return Err(BuildError::TooLarge { cells: total });
    }

    let mut steps = 0u64;
    for &(v, w) in entries {
        steps += 1;
        if v == 0 || w == 0 || v > n || w > n {
            return Err(BuildError::VertexOutOfRange { v, w, n });
        }
        if v == w {
            return Err(BuildError::SelfEntry { v });
        }
    }

    // Pass 1: stable counting sort on the secondary key w.
    let mut count = vec![0u32; nu + 1];
    for &(_, w) in entries {
        steps += 1;
        count[w as usize] += 1;
    }
    let mut acc = 0;
    for c in count.iter_mut() {
        steps += 1;
        let k = *c;
        *c = acc;
        acc += k;
    }
    let mut by_w = vec![(0u32, 0u32); entries.len()];
    for &(v, w) in entries {
        steps += 1;
        let slot = &mut count[w as usize];
        by_w[*slot as usize] = (v, w);
        *slot += 1;
    }

    // Pass 2: stable counting sort on the primary key v, leaving one extra
    // slot per vertex for its sentinel.
    let mut per_vertex = vec![0u32; nu];
    for &(v, _) in &by_w {
        steps += 1;
        per_vertex[v as usize - 1] += 1;
    }
    let mut starts = Vec::with_capacity(nu + 1);
    let mut acc = 0u32;
    for &c in &per_vertex {
        steps += 1;
        starts.push(acc);
        acc += c + 1;
    }
    starts.push(acc);

    let sentinel = VertexId::from_raw(n + 1);
    let mut cells = vec![sentinel; total];
    let mut fill = starts.clone();
    for &(v, w) in &by_w {
        steps += 1;
        let slot = &mut fill[v as usize - 1];
        cells[*slot as usize] = VertexId::from_raw(w);
        *slot += 1;
    }

    for i in 0..nu {
        let list = &cells[starts[i] as usize..starts[i + 1] as usize - 1];
        for pair in list.windows(2) {
            steps += 1;
            if pair[0] == pair[1] {
                return Err(BuildError::DuplicatePair {
                    v: i as u32 + 1,
                    w: pair[0].get(),
                });
            }
        }
    }

    let g = PcDigraph {
        n,
        m_tilde: entries.len(),
        complemented: complemented.to_vec(),
        starts,
        cells,
    };
    Ok((g, steps))
}

/// Explicit out-adjacency of `G`, one ascending list per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcList {
    out: Vec<Vec<VertexId>>,
}

impl ArcList {
    /// From zero-based out-lists of 1-based vertex ids; each list must be
    /// ascending.
    pub fn from_lists(out: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(out.iter().all(|l| l.windows(2).all(|p| p[0] < p[1])));
        ArcList { out }
    }

    pub fn n(&self) -> u32 {
        self.out.len() as u32
    }

    pub fn out(&self, v: VertexId) -> &[VertexId] {
        &self.out[v.index()]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, v: VertexId, w: VertexId) -> bool {
        self.out(v).binary_search(&w).is_ok()
    }
}

/// Expands `g` into the adjacency of `G`. Takes `Θ(n²)` for complemented
/// vertices; intended for testing.
pub fn materialize(g: &PcDigraph) -> ArcList {
    let out = g
        .vertices()
        .map(|v| {
            let listed = g.entries(v);
            if !g.is_complemented(v) {
                return listed.to_vec();
            }
            let mut out = Vec::with_capacity(g.n() as usize - 1 - listed.len());
            let mut skip = listed.iter().peekable();
            for w in g.vertices() {
                if skip.next_if_eq(&&w).is_some() || w == v {
                    continue;
                }
                out.push(w);
            }
            out
        })
        .collect();
    ArcList { out }
}

/// Returns `g` with `v`'s complement bit toggled. The stored list is
/// unchanged, so `v`'s out-set in `G` flips relative to `V \ {v}`.
pub fn complement_vertex(g: &PcDigraph, v: VertexId) -> PcDigraph {
    let mut h = g.clone();
    h.complemented[v.index()] ^= true;
    h
}

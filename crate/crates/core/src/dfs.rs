//! Depth-first search on `G` driven directly by the pc-lists of `G̃`.
//!
//! Uncomplemented activations scan their list like ordinary DFS. A
//! complemented activation `v` walks `U` (the undiscovered vertices) and its
//! own list in parallel, merge style: a vertex found in both is a
//! non-neighbor and is skipped; a list entry smaller than the `U` cursor has
//! already been discovered and is deleted; a `U` entry smaller than the list
//! cursor is an undiscovered out-neighbor and gets a recursive call. After
//! that call returns, [`restart_cursor`] walks the list backward from the
//! list cursor, deleting discovered entries, to find where in `U` to resume.
//!
//! Every backward step beyond the first of a restart deletes a list cell,
//! and every list has at most its initial length in cells, so the whole
//! traversal costs `O(n + m̃)`.
//!
//! Recursion is kept on an explicit [`DfsFrame`] stack; the activation depth
//! reaches `n` on a complete digraph.

use serde::Serialize;
use thiserror::Error;

use crate::cells::{CellId, PcLists};
use crate::graph::PcDigraph;
use crate::undiscovered::UndiscoveredList;
use crate::vertex::VertexId;

/// Elementary-step tallies of one traversal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    /// Activations of DFS(v).
    pub calls: u64,
    /// Forward cursor advances in either list.
    pub fwd_steps: u64,
    /// `prev` steps taken while restarting.
    pub back_steps: u64,
    /// Cells removed from pc-lists.
    pub deletions: u64,
    /// Removals from `U`.
    pub u_removals: u64,
    /// Restarts performed after a call from a complemented vertex returned.
    pub restarts: u64,
}

impl OpCounters {
    /// The step total charged against `n + m̃`.
    pub fn total(&self) -> u64 {
        self.calls + self.fwd_steps + self.back_steps + self.deletions + self.u_removals
    }

    /// `total() / (n + m̃ + 1)`.
    pub fn ratio(&self, g: &PcDigraph) -> f64 {
        self.total() as f64 / (g.n() as u64 + g.m_tilde() as u64 + 1) as f64
    }
}

/// Sink for traversal step counts. [`NoTally`] compiles the counting away.
pub trait Tally {
    fn call(&mut self);
    fn fwd(&mut self, steps: u64);
    fn back(&mut self);
    fn delete(&mut self);
    fn u_remove(&mut self);
    fn restart(&mut self);
}

impl Tally for OpCounters {
    #[inline]
    fn call(&mut self) {
        self.calls += 1;
    }
    #[inline]
    fn fwd(&mut self, steps: u64) {
        self.fwd_steps += steps;
    }
    #[inline]
    fn back(&mut self) {
        self.back_steps += 1;
    }
    #[inline]
    fn delete(&mut self) {
        self.deletions += 1;
    }
    #[inline]
    fn u_remove(&mut self) {
        self.u_removals += 1;
    }
    #[inline]
    fn restart(&mut self) {
        self.restarts += 1;
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NoTally;

impl Tally for NoTally {
    #[inline(always)]
    fn call(&mut self) {}
    #[inline(always)]
    fn fwd(&mut self, _: u64) {}
    #[inline(always)]
    fn back(&mut self) {}
    #[inline(always)]
    fn delete(&mut self) {}
    #[inline(always)]
    fn u_remove(&mut self) {}
    #[inline(always)]
    fn restart(&mut self) {}
}

/// One activation of DFS(v).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DfsFrame {
    pub v: VertexId,
    /// Position in `U`; `None` once past the end. Unused when `v` is
    /// uncomplemented.
    pub u_cursor: Option<VertexId>,
    /// Position in `v`'s pc-list. Never moves backward.
    pub n_cursor: CellId,
}

/// How a complemented activation resumes after a recursive call returns.
#[allow(clippy::manual_non_exhaustive)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RestartStrategy {
    /// Backward walk over the pc-list, see [`restart_cursor`].
    #[default]
    Backward,
    /// Reset both cursors to the heads of their lists. Still correct, but
    /// not linear; exists to check that the step counters catch it.
    #[doc(hidden)]
    RescanFromHead,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DfsOptions {
    /// Record [`OpCounters`]. When off the returned counters are all zero.
    pub instrument: bool,
    /// Verify the list invariants at every mutation site. Costs time
    /// proportional to the scanned `U` prefix per cursor move; test use only.
    pub debug_checks: bool,
    #[doc(hidden)]
    pub restart: RestartStrategy,
}

impl DfsOptions {
    pub fn instrumented() -> Self {
        DfsOptions {
            instrument: true,
            ..Default::default()
        }
    }

    pub fn checked() -> Self {
        DfsOptions {
            instrument: true,
            debug_checks: true,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantViolation {
    #[error("vertex {w} deleted from the pc-list of {v} while still undiscovered")]
    DeletedUndiscovered { v: VertexId, w: VertexId },
    #[error("vertex {x} precedes the U cursor of {v} but is not in its pc-list")]
    MissingPredecessor { v: VertexId, x: VertexId },
    #[error("pc-list cursor of {v} moved back from {from} to {to}")]
    CursorRegressed {
        v: VertexId,
        from: VertexId,
        to: VertexId,
    },
}

/// Parent function and timestamps of a complete DFS.
///
/// `pre` and `post` run on separate clocks, each a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsForest {
    parent: Vec<Option<VertexId>>,
    pre: Vec<u32>,
    post: Vec<u32>,
    roots: Vec<VertexId>,
}

impl DfsForest {
    /// Assembles a forest from per-vertex arrays (index `v - 1`); roots are
    /// the parentless vertices.
    pub fn from_parts(parent: Vec<Option<VertexId>>, pre: Vec<u32>, post: Vec<u32>) -> Self {
        assert!(parent.len() == pre.len() && pre.len() == post.len());
        let roots = (1..=parent.len() as u32)
            .map(VertexId::from_raw)
            .filter(|v| parent[v.index()].is_none())
            .collect();
        DfsForest {
            parent,
            pre,
            post,
            roots,
        }
    }

    pub fn n(&self) -> u32 {
        self.parent.len() as u32
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.index()]
    }

    pub fn pre(&self, v: VertexId) -> u32 {
        self.pre[v.index()]
    }

    pub fn post(&self, v: VertexId) -> u32 {
        self.post[v.index()]
    }

    /// Tree roots, ascending.
    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn parents(&self) -> &[Option<VertexId>] {
        &self.parent
    }

    pub fn pre_times(&self) -> &[u32] {
        &self.pre
    }

    pub fn post_times(&self) -> &[u32] {
        &self.post
    }

    /// Vertices in discovery order.
    pub fn preorder(&self) -> Vec<VertexId> {
        order_by(&self.pre)
    }

    /// Vertices in finishing order.
    pub fn postorder(&self) -> Vec<VertexId> {
        order_by(&self.post)
    }
}

fn order_by(stamps: &[u32]) -> Vec<VertexId> {
    let mut order = vec![VertexId::from_raw(0); stamps.len()];
    for (i, &t) in stamps.iter().enumerate() {
        order[t as usize - 1] = VertexId::from_raw(i as u32 + 1);
    }
    order
}

/// Accumulates a [`DfsForest`] from discover/finish events.
#[derive(Debug)]
pub(crate) struct ForestBuilder {
    forest: DfsForest,
    clock_pre: u32,
    clock_post: u32,
}

impl ForestBuilder {
    pub(crate) fn new(n: u32) -> Self {
        let n = n as usize;
        ForestBuilder {
            forest: DfsForest {
                parent: vec![None; n],
                pre: vec![0; n],
                post: vec![0; n],
                roots: Vec::new(),
            },
            clock_pre: 0,
            clock_post: 0,
        }
    }

    #[inline]
    pub(crate) fn discover(&mut self, v: VertexId, parent: Option<VertexId>) {
        self.clock_pre += 1;
        self.forest.pre[v.index()] = self.clock_pre;
        self.forest.parent[v.index()] = parent;
        if parent.is_none() {
            self.forest.roots.push(v);
        }
    }

    #[inline]
    pub(crate) fn finish(&mut self, v: VertexId) {
        self.clock_post += 1;
        self.forest.post[v.index()] = self.clock_post;
    }

    pub(crate) fn build(self) -> DfsForest {
        debug_assert_eq!(self.clock_pre as usize, self.forest.pre.len());
        self.forest
    }
}

/// Resumes the complemented activation `frame` after a recursive call from
/// it has returned.
///
/// Walks `frame.v`'s pc-list backward from the cell before `n_cursor`,
/// deleting each cell whose vertex has left `U`, and stops at the first cell
/// still in `U` or at the list front. `u_cursor` becomes that cell's
/// successor in `U`, or `head(U)` if the front was reached. Afterwards every
/// vertex of `U` before `u_cursor` is in the pc-list.
pub fn restart_cursor<T: Tally>(
    frame: &mut DfsFrame,
    lists: &mut PcLists<'_>,
    undiscovered: &UndiscoveredList,
    tally: &mut T,
) {
    tally.restart();
    let mut probe = lists.prev(frame.n_cursor);
    tally.back();
    while let Some(cell) = probe {
        if undiscovered.contains(lists.vertex(cell)) {
            break;
        }
        probe = lists.prev(cell);
        tally.back();
        lists.remove(frame.v, cell);
        tally.delete();
    }
    frame.u_cursor = match probe {
        None => undiscovered.head(),
        Some(cell) => {
            tally.fwd(1);
            undiscovered.next(lists.vertex(cell))
        }
    };
}

/// Runs DFS over all of `G`, starting a new tree at each still-undiscovered
/// vertex in ascending order, and scanning candidates in ascending order.
///
/// The graph is not modified; deletions happen in a private working copy of
/// its links. Returns an error only when `opts.debug_checks` is set and an
/// invariant fails.
pub fn pc_dfs_forest(
    g: &PcDigraph,
    opts: DfsOptions,
) -> Result<(DfsForest, OpCounters), InvariantViolation> {
    if opts.instrument {
        Run::new(g, opts, OpCounters::default()).execute()
    } else {
        Run::new(g, opts, NoTally)
            .execute()
            .map(|(forest, _)| (forest, OpCounters::default()))
    }
}

/// Labels each vertex with the root of its DFS tree. When `G` is symmetric
/// these are its connected components; otherwise the labels only identify
/// forest trees.
pub fn undirected_components(g: &PcDigraph) -> Vec<VertexId> {
    let (forest, _) =
        pc_dfs_forest(g, DfsOptions::default()).expect("no invariant checks requested");
    let mut label = vec![VertexId::from_raw(0); g.n() as usize];
    for v in forest.preorder() {
        label[v.index()] = match forest.parent(v) {
            Some(p) => label[p.index()],
            None => v,
        };
    }
    label
}

enum Next {
    Call(VertexId),
    Done,
}

struct Run<'g, T> {
    g: &'g PcDigraph,
    lists: PcLists<'g>,
    undiscovered: UndiscoveredList,
    stack: Vec<DfsFrame>,
    forest: ForestBuilder,
    tally: T,
    opts: DfsOptions,
}

impl<'g, T: Tally> Run<'g, T> {
    fn new(g: &'g PcDigraph, opts: DfsOptions, tally: T) -> Self {
        Run {
            g,
            lists: PcLists::new(g),
            undiscovered: UndiscoveredList::new(g.n()),
            stack: Vec::new(),
            forest: ForestBuilder::new(g.n()),
            tally,
            opts,
        }
    }

    fn execute(mut self) -> Result<(DfsForest, T), InvariantViolation> {
        for root in self.g.vertices() {
            if self.undiscovered.contains(root) {
                self.tree(root)?;
            }
        }
        Ok((self.forest.build(), self.tally))
    }

    fn tree(&mut self, root: VertexId) -> Result<(), InvariantViolation> {
        self.activate(root, None)?;
        while let Some(&top) = self.stack.last() {
            let mut frame = top;
            let next = if self.g.is_complemented(frame.v) {
                self.walk_complemented(&mut frame)?
            } else {
                self.walk_plain(&mut frame)
            };
            *self.stack.last_mut().unwrap() = frame;
            match next {
                Next::Call(u) => self.activate(u, Some(frame.v))?,
                Next::Done => self.finish()?,
            }
        }
        Ok(())
    }

    fn activate(
        &mut self,
        v: VertexId,
        parent: Option<VertexId>,
    ) -> Result<(), InvariantViolation> {
        self.undiscovered.remove(v);
        self.tally.u_remove();
        self.tally.call();
        self.forest.discover(v, parent);
        let complemented = self.g.is_complemented(v);
        let frame = DfsFrame {
            v,
            u_cursor: if complemented {
                self.undiscovered.head()
            } else {
                None
            },
            n_cursor: self.lists.head(v),
        };
        if complemented && self.opts.debug_checks {
            check_predecessors(&frame, &self.lists, &self.undiscovered)?;
        }
        self.stack.push(frame);
        Ok(())
    }

    fn finish(&mut self) -> Result<(), InvariantViolation> {
        let done = self.stack.pop().expect("finish with an empty stack");
        self.forest.finish(done.v);
        let Some(parent) = self.stack.last_mut() else {
            return Ok(());
        };
        if !self.g.is_complemented(parent.v) {
            return Ok(());
        }
        match self.opts.restart {
            RestartStrategy::Backward => {
                restart_cursor(parent, &mut self.lists, &self.undiscovered, &mut self.tally)
            }
            RestartStrategy::RescanFromHead => {
                self.tally.restart();
                parent.n_cursor = self.lists.head(parent.v);
                parent.u_cursor = self.undiscovered.head();
            }
        }
        if self.opts.debug_checks {
            check_predecessors(parent, &self.lists, &self.undiscovered)?;
        }
        Ok(())
    }

    /// Continues an uncomplemented activation up to its next call.
    fn walk_plain(&mut self, frame: &mut DfsFrame) -> Next {
        loop {
            let cell = frame.n_cursor;
            if self.lists.is_sentinel(cell) {
                return Next::Done;
            }
            let w = self.lists.vertex(cell);
            frame.n_cursor = self
                .lists
                .next(cell)
                .expect("sentinel terminates every list");
            self.tally.fwd(1);
            if self.undiscovered.contains(w) {
                return Next::Call(w);
            }
        }
    }

    /// Continues the merge walk of a complemented activation up to its next
    /// call.
    fn walk_complemented(&mut self, frame: &mut DfsFrame) -> Result<Next, InvariantViolation> {
        let check = self.opts.debug_checks;
        loop {
            let Some(u) = frame.u_cursor else {
                return Ok(Next::Done);
            };
            let cell = frame.n_cursor;
            let listed = self.lists.vertex(cell);
            if u < listed {
                return Ok(Next::Call(u));
            }
            // The sentinel exceeds every vertex, so `cell` is a real entry.
            let next = self
                .lists
                .next(cell)
                .expect("sentinel terminates every list");
            if u == listed {
                frame.u_cursor = self.undiscovered.next(u);
                frame.n_cursor = next;
                self.tally.fwd(2);
                if check {
                    check_predecessors(frame, &self.lists, &self.undiscovered)?;
                }
            } else {
                if check && self.undiscovered.contains(listed) {
                    return Err(InvariantViolation::DeletedUndiscovered {
                        v: frame.v,
                        w: listed,
                    });
                }
                frame.n_cursor = next;
                self.tally.fwd(1);
                self.lists.remove(frame.v, cell);
                self.tally.delete();
            }
            if check {
                let to = self.lists.vertex(frame.n_cursor);
                if to <= listed {
                    return Err(InvariantViolation::CursorRegressed {
                        v: frame.v,
                        from: listed,
                        to,
                    });
                }
            }
        }
    }
}

/// Every vertex of `U` ahead of `frame.u_cursor` must be in `frame.v`'s
/// pc-list. Both sequences are ascending, so one merged pass decides it.
fn check_predecessors(
    frame: &DfsFrame,
    lists: &PcLists<'_>,
    undiscovered: &UndiscoveredList,
) -> Result<(), InvariantViolation> {
    let mut listed = lists.iter(frame.v).peekable();
    for x in undiscovered.iter() {
        if Some(x) == frame.u_cursor {
            break;
        }
        while listed.next_if(|&y| y < x).is_some() {}
        if listed.next_if_eq(&x).is_none() {
            return Err(InvariantViolation::MissingPredecessor { v: frame.v, x });
        }
    }
    Ok(())
}

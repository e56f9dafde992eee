use crate::graph::PcDigraph;
use crate::vertex::VertexId;

const NIL: u32 = u32::MAX;

/// Handle to one cell of a pc-list.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CellId(u32);

/// Mutable doubly-linked view of a [`PcDigraph`]'s lists.
///
/// Cells live in index-addressed arrays, one per entry plus one sentinel per
/// vertex, so `next`, `prev` and `remove` are O(1). Sentinel cells can never
/// be removed.
#[derive(Clone, Debug)]
pub struct PcLists<'g> {
    vertex: &'g [VertexId],
    sentinel: VertexId,
    head: Vec<u32>,
    prev: Vec<u32>,
    next: Vec<u32>,
}

impl<'g> PcLists<'g> {
    pub fn new(g: &'g PcDigraph) -> Self {
        let vertex = g.cell_vertices();
        let starts = g.cell_starts();
        let mut prev = Vec::with_capacity(vertex.len());
        let mut next = Vec::with_capacity(vertex.len());
        for range in starts.windows(2) {
            let (lo, hi) = (range[0], range[1]);
            for c in lo..hi {
                prev.push(if c == lo { NIL } else { c - 1 });
                next.push(if c + 1 == hi { NIL } else { c + 1 });
            }
        }
        PcLists {
            vertex,
            sentinel: g.sentinel(),
            head: starts[..starts.len() - 1].to_vec(),
            prev,
            next,
        }
    }

    /// First live cell of `v`'s list; the sentinel when the list is empty.
    #[inline]
    pub fn head(&self, v: VertexId) -> CellId {
        CellId(self.head[v.index()])
    }

    #[inline]
    pub fn next(&self, c: CellId) -> Option<CellId> {
        link(self.next[c.0 as usize])
    }

    #[inline]
    pub fn prev(&self, c: CellId) -> Option<CellId> {
        link(self.prev[c.0 as usize])
    }

    #[inline]
    pub fn vertex(&self, c: CellId) -> VertexId {
        self.vertex[c.0 as usize]
    }

    #[inline]
    pub fn is_sentinel(&self, c: CellId) -> bool {
        self.vertex(c) == self.sentinel
    }

    /// Unlinks `c` from `v`'s list.
    #[inline]
    pub fn remove(&mut self, v: VertexId, c: CellId) {
        assert!(!self.is_sentinel(c), "sentinel cells are never removed");
        let i = c.0 as usize;
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NIL {
            self.head[v.index()] = n;
        } else {
            self.next[p as usize] = n;
        }
        // n is never NIL: the sentinel follows every real cell.
        self.prev[n as usize] = p;
    }

    /// Live vertex ids of `v`'s list, sentinel included.
    pub fn iter(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let mut cur = Some(self.head(v));
        std::iter::from_fn(move || {
            let c = cur?;
            cur = self.next(c);
            Some(self.vertex(c))
        })
    }
}

#[inline]
fn link(raw: u32) -> Option<CellId> {
    (raw != NIL).then_some(CellId(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_pc_lists;

    #[test]
    fn unlink_front_middle_and_back() {
        let g = build_pc_lists(5, &[(1, 2), (1, 3), (1, 4), (1, 5)], &[true; 5]).unwrap();
        let v = VertexId::new(1);
        let mut lists = PcLists::new(&g);
        let ids = |l: &PcLists| l.iter(v).map(VertexId::get).collect::<Vec<_>>();
        assert_eq!(ids(&lists), [2, 3, 4, 5, 6]);

        let c3 = lists.next(lists.head(v)).unwrap();
        lists.remove(v, c3);
        assert_eq!(ids(&lists), [2, 4, 5, 6]);
        lists.remove(v, lists.head(v));
        assert_eq!(ids(&lists), [4, 5, 6]);
        assert_eq!(lists.prev(lists.head(v)), None);

        let sentinel = lists.next(lists.next(lists.head(v)).unwrap()).unwrap();
        assert!(lists.is_sentinel(sentinel));
        lists.remove(v, lists.prev(sentinel).unwrap());
        assert_eq!(ids(&lists), [4, 6]);
        assert_eq!(lists.vertex(lists.prev(sentinel).unwrap()).get(), 4);
        assert_eq!(lists.next(sentinel), None);

        // the immutable graph is untouched
        assert_eq!(g.entries(v).len(), 4);
        assert_eq!(ids(&PcLists::new(&g)), [2, 3, 4, 5, 6]);
    }

    #[test]
    #[should_panic(expected = "sentinel")]
    fn sentinel_is_not_removable() {
        let g = build_pc_lists(2, &[], &[false; 2]).unwrap();
        let v = VertexId::new(2);
        let mut lists = PcLists::new(&g);
        let h = lists.head(v);
        lists.remove(v, h);
    }
}

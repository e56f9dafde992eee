use crate::vertex::VertexId;

/// The ascending list `U` of vertices DFS has not yet called.
///
/// Positions `0` and `n + 1` are fixed boundary nodes so that every real node
/// has both neighbors; `head`, `next`, `prev`, `contains` and `remove` are
/// O(1). Removed vertices are never reinserted.
#[derive(Clone, Debug)]
pub struct UndiscoveredList {
    n: u32,
    len: u32,
    prev: Vec<u32>,
    next: Vec<u32>,
    present: Vec<bool>,
}

impl UndiscoveredList {
    /// All of `1..=n`.
    pub fn new(n: u32) -> Self {
        let size = n as usize + 2;
        let next = (1..=size as u32).collect::<Vec<_>>();
        let prev = std::iter::once(0).chain(0..size as u32 - 1).collect();
        let mut present = vec![true; size];
        present[0] = false;
        present[size - 1] = false;
        UndiscoveredList {
            n,
            len: n,
            prev,
            next,
            present,
        }
    }

    #[inline]
    fn real(&self, raw: u32) -> Option<VertexId> {
        (raw != 0 && raw != self.n + 1).then(|| VertexId::from_raw(raw))
    }

    #[inline]
    pub fn head(&self) -> Option<VertexId> {
        self.real(self.next[0])
    }

    /// Successor of `v`, which must still be present.
    #[inline]
    pub fn next(&self, v: VertexId) -> Option<VertexId> {
        debug_assert!(self.contains(v));
        self.real(self.next[v.get() as usize])
    }

    #[inline]
    pub fn prev(&self, v: VertexId) -> Option<VertexId> {
        debug_assert!(self.contains(v));
        self.real(self.prev[v.get() as usize])
    }

    /// Membership test. Ids outside `1..=n`, including the sentinel, are
    /// never members.
    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.present.get(v.get() as usize).copied().unwrap_or(false)
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        let i = v.get() as usize;
        assert!(self.present[i], "vertex {v} already removed from U");
        self.present[i] = false;
        let (p, n) = (self.prev[i], self.next[i]);
        self.next[p as usize] = n;
        self.prev[n as usize] = p;
        self.len -= 1;
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        let mut cur = self.head();
        std::iter::from_fn(move || {
            let v = cur?;
            cur = self.next(v);
            Some(v)
        })
    }
}

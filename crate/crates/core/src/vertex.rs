use std::fmt;

/// A vertex number in `1..=n`. The value `n + 1` is reserved for the list
/// sentinel and never names a real vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
#[serde(transparent)]
pub struct VertexId(u32);

impl VertexId {
    /// Panics on zero, which is never a vertex number.
    #[inline]
    pub fn new(id: u32) -> Self {
        assert!(id != 0, "vertex ids start at 1");
        VertexId(id)
    }

    #[inline]
    pub(crate) const fn from_raw(id: u32) -> Self {
        VertexId(id)
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position, for indexing per-vertex arrays.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<VertexId> for u32 {
    fn from(v: VertexId) -> u32 {
        v.0
    }
}

//! Ground truth for the pc-list traversal: textbook DFS on the materialized
//! graph, exact forest comparison, and reproducible instance generators.

mod generate;
mod rng;

use std::fmt;

pub use generate::{generate, GenerateError, GeneratorKind, GeneratorSpec};
pub use rng::SeededRng;

use crate::dfs::{DfsForest, ForestBuilder};
use crate::graph::ArcList;
use crate::vertex::VertexId;

/// Plain DFS over explicit adjacency: roots ascending, each out-list scanned
/// ascending. Uses an explicit stack, so depth is bounded only by memory.
pub fn standard_dfs(adj: &ArcList) -> DfsForest {
    let n = adj.n();
    let mut seen = vec![false; n as usize];
    let mut forest = ForestBuilder::new(n);
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    for root in (1..=n).map(VertexId::new) {
        if seen[root.index()] {
            continue;
        }
        seen[root.index()] = true;
        forest.discover(root, None);
        stack.push((root, 0));
        while let Some((v, pos)) = stack.last_mut() {
            let v = *v;
            let out = adj.out(v);
            match out[*pos..].iter().position(|w| !seen[w.index()]) {
                Some(k) => {
                    let w = out[*pos + k];
                    *pos += k + 1;
                    seen[w.index()] = true;
                    forest.discover(w, Some(v));
                    stack.push((w, 0));
                }
                None => {
                    forest.finish(v);
                    stack.pop();
                }
            }
        }
    }
    forest.build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestField {
    VertexCount,
    Parent,
    Pre,
    Post,
    Roots,
}

/// First difference between two forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDiff {
    /// Smallest differing vertex; `None` for whole-forest fields.
    pub vertex: Option<VertexId>,
    pub field: ForestField,
}

impl fmt::Display for ForestDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field {
            ForestField::VertexCount => "vertex count",
            ForestField::Parent => "parent",
            ForestField::Pre => "pre",
            ForestField::Post => "post",
            ForestField::Roots => "roots",
        };
        match self.vertex {
            Some(v) => write!(f, "forests differ in {field} of vertex {v}"),
            None => write!(f, "forests differ in {field}"),
        }
    }
}

impl std::error::Error for ForestDiff {}

/// Exact comparison of parent, pre, post and roots.
pub fn forests_equal(a: &DfsForest, b: &DfsForest) -> Result<(), ForestDiff> {
    if a.n() != b.n() {
        return Err(ForestDiff {
            vertex: None,
            field: ForestField::VertexCount,
        });
    }
    for v in (1..=a.n()).map(VertexId::new) {
        let field = if a.parent(v) != b.parent(v) {
            ForestField::Parent
        } else if a.pre(v) != b.pre(v) {
            ForestField::Pre
        } else if a.post(v) != b.post(v) {
            ForestField::Post
        } else {
            continue;
        };
        return Err(ForestDiff {
            vertex: Some(v),
            field,
        });
    }
    if a.roots() != b.roots() {
        return Err(ForestDiff {
            vertex: None,
            field: ForestField::Roots,
        });
    }
    Ok(())
}

/// Structural sanity of `forest` as a DFS forest of `adj`: tree edges are
/// arcs, both clocks are permutations, roots are exactly the parentless
/// vertices, and each child is discovered after and finished before its
/// parent.
pub fn check_forest(forest: &DfsForest, adj: &ArcList) -> Result<(), String> {
    let n = forest.n();
    if n != adj.n() {
        return Err(format!("forest has {n} vertices, graph has {}", adj.n()));
    }
    for (name, stamps) in [("pre", forest.pre_times()), ("post", forest.post_times())] {
        let mut sorted = stamps.to_vec();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(1..=n) {
            return Err(format!("{name} is not a permutation of 1..={n}"));
        }
    }
    let mut roots = Vec::new();
    for v in (1..=n).map(VertexId::new) {
        let Some(p) = forest.parent(v) else {
            roots.push(v);
            continue;
        };
        if !adj.has_arc(p, v) {
            return Err(format!("tree edge {p}->{v} is not an arc"));
        }
        if forest.pre(p) >= forest.pre(v) || forest.post(v) >= forest.post(p) {
            return Err(format!("{v} is not nested inside its parent {p}"));
        }
    }
    if roots != forest.roots() {
        return Err("roots are not the parentless vertices in order".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(lists: &[&[u32]]) -> ArcList {
        ArcList::from_lists(
            lists
                .iter()
                .map(|l| l.iter().map(|&x| VertexId::new(x)).collect())
                .collect(),
        )
    }

    fn raw(vs: &[VertexId]) -> Vec<u32> {
        vs.iter().map(|x| x.get()).collect()
    }

    #[test]
    fn edgeless() {
        let f = standard_dfs(&arcs(&[&[], &[], &[]]));
        assert_eq!(raw(f.roots()), [1, 2, 3]);
        assert_eq!(f.pre_times(), [1, 2, 3]);
        assert_eq!(f.post_times(), [1, 2, 3]);
    }

    #[test]
    fn complete_digraph() {
        let f = standard_dfs(&arcs(&[&[2, 3, 4], &[1, 3, 4], &[1, 2, 4], &[1, 2, 3]]));
        assert_eq!(raw(f.roots()), [1]);
        assert_eq!(raw(&f.preorder()), [1, 2, 3, 4]);
        let parents: Vec<_> = f.parents().iter().map(|p| p.map(VertexId::get)).collect();
        assert_eq!(parents, [None, Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn mixed_adjacency() {
        let adj = arcs(&[&[2, 4], &[1], &[], &[2]]);
        let f = standard_dfs(&adj);
        assert_eq!(raw(&f.preorder()), [1, 2, 4, 3]);
        assert_eq!(raw(f.roots()), [1, 3]);
        check_forest(&f, &adj).unwrap();
    }

    #[test]
    fn reports_smallest_differing_vertex() {
        let a = standard_dfs(&arcs(&[&[2, 3], &[], &[]]));
        assert_eq!(forests_equal(&a, &a), Ok(()));
        // 3 hangs off 2 instead of 1; vertex 2 already differs in post
        let b = standard_dfs(&arcs(&[&[2], &[3], &[]]));
        let diff = forests_equal(&a, &b).unwrap_err();
        assert_eq!(diff.vertex, Some(VertexId::new(2)));
        assert_eq!(diff.field, ForestField::Post);
    }

    #[test]
    fn post_only_difference_names_vertex() {
        let a = standard_dfs(&arcs(&[&[], &[], &[]]));
        let mut post = a.post_times().to_vec();
        post.swap(1, 2);
        let b = DfsForest::from_parts(a.parents().to_vec(), a.pre_times().to_vec(), post);
        let diff = forests_equal(&a, &b).unwrap_err();
        assert_eq!(diff.vertex, Some(VertexId::new(2)));
        assert_eq!(diff.field, ForestField::Post);
        assert_eq!(diff.to_string(), "forests differ in post of vertex 2");
    }
}

//! Finite simple graphs: links, stars, vertex classes, components and symmetries.
//!
//! Vertices are addressed by their index in input order. That order is the
//! canonical tie-breaking order everywhere else in the crate.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest graph the bitset representation can hold.
pub const MAX_VERTICES: usize = 64;

/// Default vertex cap for [`SimpleGraph::symmetries`].
pub const DEFAULT_SYMMETRY_CAP: usize = 10;

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Least member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// How the members of a vertex class relate to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    Singleton,
    Clique,
    AntiClique,
}

impl ClassKind {
    /// Whether the class generates a free abelian subgroup of rank at least 2.
    pub fn is_clique(self) -> bool {
        self == ClassKind::Clique
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Singleton => "singleton",
            ClassKind::Clique => "clique",
            ClassKind::AntiClique => "anti-clique",
        })
    }
}

/// An equivalence class of vertices under the link/star preorder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexClass {
    pub members: VertexSet,
    pub kind: ClassKind,
}

impl VertexClass {
    /// Least member; used as the class representative.
    pub fn representative(&self) -> usize {
        self.members.first().expect("vertex classes are nonempty")
    }

    /// Free (possibly cyclic) rather than free abelian of rank at least 2.
    pub fn is_free(&self) -> bool {
        !self.kind.is_clique()
    }
}

/// A finite simple graph with labelled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adjacency: Vec<VertexSet>,
}

/// The structured (JSON) graph document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

impl SimpleGraph {
    /// Builds a graph from labels and index pairs. Duplicate edges collapse.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{l}`")));
            }
        }
        let n = labels.len();
        let mut adjacency = vec![VertexSet::empty(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("{}", u.max(v))));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at `{}`", labels[u])));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(SimpleGraph { labels, adjacency })
    }

    /// Builds a graph from label pairs; vertex order is order of first appearance.
    pub fn from_label_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut idx = Vec::new();
        let index_of = |l: &str, labels: &mut Vec<String>| match labels.iter().position(|x| x == l)
        {
            Some(i) => i,
            None => {
                labels.push(l.to_string());
                labels.len() - 1
            }
        };
        for (a, b) in edges {
            let i = index_of(a, &mut labels);
            let j = index_of(b, &mut labels);
            idx.push((i, j));
        }
        SimpleGraph::new(labels, idx)
    }

    /// Path on `n` vertices labelled `a, b, c, ...`.
    pub fn path(n: usize) -> Self {
        SimpleGraph::new(default_labels(n), (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices labelled `a, b, c, ...`.
    pub fn cycle(n: usize) -> Self {
        SimpleGraph::new(default_labels(n), (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Complete graph on `n` vertices labelled `a, b, c, ...`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        SimpleGraph::new(default_labels(n), edges).expect("valid complete graph")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_labels(&self) -> Vec<(&str, &str)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect()
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Neighbours of `v` together with `v`.
    pub fn star(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency[v];
        s.insert(v);
        s
    }

    /// Link of a class: `lk(u) \ [u]` for any member `u`.
    pub fn class_link(&self, class: &VertexClass) -> VertexSet {
        self.link(class.representative()).difference(class.members)
    }

    /// Star of a class: `lk(u) ∪ [u]`.
    pub fn class_star(&self, class: &VertexClass) -> VertexSet {
        self.class_link(class).union(class.members)
    }

    /// Connected components of the subgraph induced on `within`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier.iter() {
                    next = next.union(self.adjacency[v]);
                }
                next = next.intersection(within).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices())
    }

    /// Components of `Γ \ st([u])`, split into non-singleton parts and isolated vertices.
    pub fn components_outside_star(&self, class: &VertexClass) -> (Vec<VertexSet>, Vec<usize>) {
        let outside = self.all_vertices().difference(self.class_star(class));
        let mut big = Vec::new();
        let mut singles = Vec::new();
        for c in self.components_within(outside) {
            if c.len() == 1 {
                singles.push(c.first().unwrap());
            } else {
                big.push(c);
            }
        }
        (big, singles)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced on `keep`, plus the map from new to old indices.
    pub fn induced(&self, keep: VertexSet) -> (SimpleGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adjacency = old
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .intersection(keep)
                    .iter()
                    .map(|w| new_of[w])
                    .collect()
            })
            .collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        (SimpleGraph { labels, adjacency }, old)
    }

    /// All adjacency-preserving permutations, identity first.
    pub fn symmetries(&self) -> Result<Vec<Vec<usize>>> {
        self.symmetries_capped(DEFAULT_SYMMETRY_CAP)
    }

    /// Backtracking over images, restricted to vertices of equal degree.
    /// Permutations come out in lexicographic order of their image lists.
    pub fn symmetries_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        if n > cap {
            return Err(Error::SymmetryCapExceeded { vertices: n, cap });
        }
        let mut out = Vec::new();
        let mut image = Vec::with_capacity(n);
        let mut used = VertexSet::empty();
        self.extend_symmetry(&mut image, &mut used, &mut out);
        Ok(out)
    }

    fn extend_symmetry(
        &self,
        image: &mut Vec<usize>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = image.len();
        if v == self.len() {
            out.push(image.clone());
            return;
        }
        for w in 0..self.len() {
            if used.contains(w) || self.degree(w) != self.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| self.adjacent(u, v) == self.adjacent(image[u], w));
            if !consistent {
                continue;
            }
            image.push(w);
            used.insert(w);
            self.extend_symmetry(image, used, out);
            used.remove(w);
            image.pop();
        }
    }

    pub fn is_symmetry(&self, perm: &[usize]) -> bool {
        perm.len() == self.len()
            && perm.iter().copied().collect::<VertexSet>() == self.all_vertices()
            && (0..self.len()).all(|u| {
                (0..self.len()).all(|v| self.adjacent(u, v) == self.adjacent(perm[u], perm[v]))
            })
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.labels.clone(),
            edges: self
                .edge_labels()
                .into_iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }

    /// Edge-list text: every vertex declared first, then one edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for l in &self.labels {
            s.push_str("vertex ");
            s.push_str(l);
            s.push('\n');
        }
        for (a, b) in self.edge_labels() {
            s.push_str(a);
            s.push(' ');
            s.push_str(b);
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("graph document serializes")
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        set.iter()
            .map(|v| self.label(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `a, b, ..., z, v26, v27, ...`
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains('^') && !s.contains('#') && s.chars().all(|c| !c.is_whitespace())
}

/// Parses either graph format: a JSON document `{"vertices": [...], "edges": [[u, v], ...]}`,
/// or an edge list with one `u v` per line, `vertex u` declarations and `#` comments.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    if text.trim_start().starts_with('{') {
        parse_document(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut edges = Vec::new();
    let index = |labels: &mut Vec<String>, l: &str| -> usize {
        match labels.iter().position(|x| x == l) {
            Some(i) => i,
            None => {
                labels.push(l.to_string());
                labels.len() - 1
            }
        }
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| Error::Parse { line, message };
        match tokens.as_slice() {
            ["vertex", v] => {
                if !valid_label(v) {
                    return Err(err(format!("invalid vertex label `{v}`")));
                }
                if labels.iter().any(|l| l == v) || !declared.insert(v.to_string()) {
                    return Err(err(format!("duplicate vertex `{v}`")));
                }
                index(&mut labels, v);
            }
            [u, v] => {
                for l in [u, v] {
                    if !valid_label(l) {
                        return Err(err(format!("invalid vertex label `{l}`")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop at `{u}`")));
                }
                let a = index(&mut labels, u);
                let b = index(&mut labels, v);
                edges.push((a, b));
            }
            _ => return Err(err(format!("malformed line `{content}`"))),
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
    }
    SimpleGraph::new(labels, edges)
}

fn line_of(text: &str, needle: &str) -> usize {
    let quoted = format!("\"{needle}\"");
    text.lines()
        .position(|l| l.contains(&quoted))
        .map_or(1, |i| i + 1)
}

fn parse_document(text: &str) -> Result<SimpleGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut labels: Vec<String> = Vec::new();
    for v in &doc.vertices {
        if !valid_label(v) {
            return Err(Error::Parse {
                line: line_of(text, v),
                message: format!("invalid vertex label `{v}`"),
            });
        }
        if labels.contains(v) {
            return Err(Error::Parse {
                line: line_of(text, v),
                message: format!("duplicate vertex `{v}`"),
            });
        }
        labels.push(v.clone());
    }
    let mut edges = Vec::new();
    for [u, v] in &doc.edges {
        let find = |l: &String| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Parse {
                    line: line_of(text, l),
                    message: format!("unknown endpoint `{l}`"),
                })
        };
        let a = find(u)?;
        let b = find(v)?;
        if a == b {
            return Err(Error::Parse {
                line: line_of(text, u),
                message: format!("self-loop at `{u}`"),
            });
        }
        edges.push((a, b));
    }
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(labels.len()));
    }
    SimpleGraph::new(labels, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &SimpleGraph, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| g.vertex(l).unwrap()).collect()
    }

    fn class(g: &SimpleGraph, labels: &[&str], kind: ClassKind) -> VertexClass {
        VertexClass {
            members: set(g, labels),
            kind,
        }
    }

    #[test]
    fn parses_edge_list() {
        let g = parse_graph("a b\nb c").unwrap();
        assert_eq!(g.labels(), ["a", "b", "c"]);
        assert_eq!(g.edges().len(), 2);

        let g = parse_graph("a b\na b").unwrap();
        assert_eq!(g.labels(), ["a", "b"]);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_lines_with_line_numbers() {
        match parse_graph("a a") {
            Err(Error::Parse { line: 1, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph("# comment\na b\nvertex c\nvertex c") {
            Err(Error::Parse { line: 4, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph("a b c") {
            Err(Error::Parse { line: 1, message }) => assert!(message.contains("malformed")),
            other => panic!("unexpected {other:?}"),
        }
        let doc = "{\n \"vertices\": [\"a\", \"b\"],\n \"edges\": [[\"a\", \"z\"]]\n}";
        match parse_graph(doc) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("unknown endpoint")),
            other => panic!("unexpected {other:?}"),
        }
        let doc = "{\n \"vertices\": [\"a\",\n \"a\"],\n \"edges\": []\n}";
        match parse_graph(doc) {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn isolated_vertices_and_comments() {
        let g = parse_graph("vertex x  # lonely\n\na b # edge\n").unwrap();
        assert_eq!(g.labels(), ["x", "a", "b"]);
        assert!(!g.is_connected());
    }

    #[test]
    fn both_formats_round_trip() {
        let g = parse_graph("vertex z\na b\nb c\nc a\n").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
        assert_eq!(parse_graph(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn links_and_stars() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(p3.link(1), set(&p3, &["a", "c"]));
        assert_eq!(p3.link(0), set(&p3, &["b"]));
        assert_eq!(p3.star(1), set(&p3, &["a", "b", "c"]));
        assert_eq!(p3.star(0), set(&p3, &["a", "b"]));
        let k3 = SimpleGraph::complete(3);
        assert_eq!(k3.link(0), set(&k3, &["b", "c"]));
        let single = SimpleGraph::new(["a"], []).unwrap();
        assert_eq!(single.star(0), VertexSet::singleton(0));
    }

    #[test]
    fn class_links_and_stars() {
        let p3 = SimpleGraph::path(3);
        let ac = class(&p3, &["a", "c"], ClassKind::AntiClique);
        let b = class(&p3, &["b"], ClassKind::Singleton);
        assert_eq!(p3.class_link(&ac), set(&p3, &["b"]));
        assert_eq!(p3.class_link(&b), set(&p3, &["a", "c"]));
        assert_eq!(p3.class_star(&ac), p3.all_vertices());

        let c4 = SimpleGraph::cycle(4);
        let ac = class(&c4, &["a", "c"], ClassKind::AntiClique);
        assert_eq!(c4.class_star(&ac), c4.all_vertices());

        let k3 = SimpleGraph::complete(3);
        let all = class(&k3, &["a", "b", "c"], ClassKind::Clique);
        assert!(k3.class_link(&all).is_empty());
        assert_eq!(k3.class_star(&all), k3.all_vertices());
    }

    #[test]
    fn components_outside_star_examples() {
        let p3 = SimpleGraph::path(3);
        let ac = class(&p3, &["a", "c"], ClassKind::AntiClique);
        assert_eq!(p3.components_outside_star(&ac), (vec![], vec![]));

        let p4 = SimpleGraph::path(4);
        let b = class(&p4, &["b"], ClassKind::Singleton);
        assert_eq!(p4.components_outside_star(&b), (vec![], vec![3]));

        let p5 = SimpleGraph::path(5);
        let c = class(&p5, &["c"], ClassKind::Singleton);
        assert_eq!(p5.components_outside_star(&c), (vec![], vec![0, 4]));

        let p4a = class(&p4, &["a"], ClassKind::Singleton);
        assert_eq!(
            p4.components_outside_star(&p4a),
            (vec![set(&p4, &["c", "d"])], vec![])
        );
    }

    fn brute_force_symmetries(g: &SimpleGraph) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.len()).iter().filter(|p| g.is_symmetry(p)).count()
    }

    #[test]
    fn symmetry_examples() {
        let p3 = SimpleGraph::path(3);
        assert_eq!(p3.symmetries().unwrap(), vec![vec![0, 1, 2], vec![2, 1, 0]]);
        let c4 = SimpleGraph::cycle(4);
        let syms = c4.symmetries().unwrap();
        assert_eq!(syms.len(), 8);
        assert_eq!(syms.len(), brute_force_symmetries(&c4));
        assert_eq!(syms[0], vec![0, 1, 2, 3]);
        assert!(syms.iter().all(|p| c4.is_symmetry(p)));
        assert_eq!(SimpleGraph::complete(3).symmetries().unwrap().len(), 6);
        let petersen_ish = SimpleGraph::path(11);
        assert!(matches!(
            petersen_ish.symmetries(),
            Err(Error::SymmetryCapExceeded { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::path(3).is_connected());
        assert!(!SimpleGraph::new(["a", "b"], []).unwrap().is_connected());
        assert!(SimpleGraph::cycle(4).is_connected());
        assert!(SimpleGraph::new(Vec::<String>::new(), [])
            .unwrap()
            .is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let c4 = SimpleGraph::cycle(4);
        let (sub, map) = c4.induced(set(&c4, &["a", "b", "d"]));
        assert_eq!(sub.labels(), ["a", "b", "d"]);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.edges(), vec![(0, 1), (0, 2)]);
    }
}

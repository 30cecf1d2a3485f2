//! The graph of groups attached to a hyperedge and the quotient map onto its
//! fundamental group.
//!
//! The fundamental group is represented operationally: it is the group of
//! the induced subgraph on `Γ \ lk([u])`, and the quotient map deletes the
//! killed generators.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::{labels_of, FlagsHypergraph, Hyperedge, HyperedgeKind};
use crate::graph::{ClassKind, SimpleGraph, VertexSet};
use crate::word::{exponent_sums, nf_unchecked, normal_form, Letter, NormalForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexGroup {
    /// The group of the induced subgraph on a non-singleton component of `Γ \ st([u])`.
    InducedSubgraph(VertexSet),
    /// The free abelian group on a clique top class.
    FreeAbelianClass(VertexSet),
}

impl VertexGroup {
    pub fn vertices(&self) -> VertexSet {
        match *self {
            VertexGroup::InducedSubgraph(s) | VertexGroup::FreeAbelianClass(s) => s,
        }
    }
}

/// Every edge group of the decompositions built here is trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeGroup {
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphOfGroups {
    pub hyperedge: usize,
    pub vertex_groups: Vec<VertexGroup>,
    /// Loops from the generators of a free top class.
    pub loops_s: usize,
    /// Loops from isolated vertices of `Γ \ st([u])`; their generators survive.
    pub loops_t: usize,
    /// `lk([u])`, normally generating the kernel.
    pub killed: VertexSet,
    /// One per loop, in the order s-loops then t-loops.
    pub edge_groups: Vec<EdgeGroup>,
    /// Isolated vertices of `Γ \ st([u])`, labelling the t-loops.
    pub isolated: Vec<usize>,
    pub top: VertexSet,
}

pub fn build_graph_of_groups(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
) -> GraphOfGroups {
    let top = fh.top(e);
    let killed = g.class_link(top);
    let (components, isolated) = g.components_outside_star(top);
    let mut vertex_groups = Vec::new();
    let abelian_top = matches!(e.kind, HyperedgeKind::FreeAbelianLevelOne)
        || (top.kind == ClassKind::Clique && top.members.len() >= 2);
    let loops_s = if abelian_top {
        vertex_groups.push(VertexGroup::FreeAbelianClass(top.members));
        0
    } else {
        top.members.len()
    };
    vertex_groups.extend(components.into_iter().map(VertexGroup::InducedSubgraph));
    let loops_t = isolated.len();
    GraphOfGroups {
        hyperedge: e.id,
        vertex_groups,
        loops_s,
        loops_t,
        killed,
        edge_groups: vec![EdgeGroup::Trivial; loops_s + loops_t],
        isolated,
        top: top.members,
    }
}

/// Structural check: all edge groups are trivial, and the killed set avoids every vertex group.
pub fn check_edge_stabilizers_trivial(gog: &GraphOfGroups) -> bool {
    gog.edge_groups.iter().all(|e| *e == EdgeGroup::Trivial)
        && gog
            .vertex_groups
            .iter()
            .all(|vg| vg.vertices().is_disjoint(gog.killed))
}

/// The quotient group's defining graph together with the map from its
/// vertices back to vertices of `g`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: SimpleGraph,
    pub original: Vec<usize>,
    index: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new(g: &SimpleGraph, killed: VertexSet) -> Self {
        let (graph, original) = g.induced(g.all_vertices().difference(killed));
        let mut index = vec![None; g.len()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = Some(i);
        }
        Quotient {
            graph,
            original,
            index,
        }
    }

    pub fn for_hyperedge(g: &SimpleGraph, fh: &FlagsHypergraph, e: &Hyperedge) -> Self {
        Quotient::new(g, g.class_link(fh.top(e)))
    }

    pub fn survives(&self, v: usize) -> bool {
        self.index[v].is_some()
    }

    /// Image of a word of `g`, as a normal form over the quotient graph.
    pub fn map(&self, w: &[Letter]) -> NormalForm {
        let kept: Vec<_> = w
            .iter()
            .filter_map(|l| {
                self.index[l.vertex].map(|i| Letter {
                    vertex: i,
                    inverse: l.inverse,
                })
            })
            .collect();
        nf_unchecked(&self.graph, &kept)
    }

    /// A quotient normal form rewritten with the original vertex indices.
    pub fn lift(&self, w: &NormalForm) -> Vec<Letter> {
        w.letters()
            .iter()
            .map(|l| Letter {
                vertex: self.original[l.vertex],
                inverse: l.inverse,
            })
            .collect()
    }
}

/// Deletes killed letters and normalizes in the quotient group. Returned
/// letters use the quotient graph's vertex indices.
pub fn quotient_word(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
    w: &[Letter],
) -> Result<NormalForm> {
    normal_form(g, w)?;
    Ok(Quotient::for_hyperedge(g, fh, e).map(w))
}

/// Retraction onto the cyclic subgroup of one top-class generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineAction {
    pub surviving: usize,
    pub killed: VertexSet,
}

impl LineAction {
    /// Translation length of a word on the line.
    pub fn translation(&self, w: &[Letter]) -> i64 {
        let n = w
            .iter()
            .map(|l| l.vertex + 1)
            .max()
            .unwrap_or(0)
            .max(self.surviving + 1);
        exponent_sums(n, w)[self.surviving]
    }
}

pub fn line_actions(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
) -> Result<Vec<LineAction>> {
    if !matches!(
        e.kind,
        HyperedgeKind::FreeAbelianLevelOne | HyperedgeKind::Abelian { .. }
    ) {
        return Err(Error::WrongHyperedgeKind {
            hyperedge: e.id,
            kind: e.kind.name().to_string(),
            expected: "free-abelian-level-one or abelian",
        });
    }
    let all = g.all_vertices();
    Ok(fh
        .top(e)
        .members
        .iter()
        .map(|v| LineAction {
            surviving: v,
            killed: all.difference(VertexSet::singleton(v)),
        })
        .collect())
}

#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum VertexGroupDocument {
    InducedSubgraph {
        vertices: Vec<String>,
        edges: Vec<[String; 2]>,
    },
    FreeAbelianClass {
        generators: Vec<String>,
    },
}

#[derive(Debug, Serialize)]
pub struct GraphOfGroupsDocument {
    pub hyperedge: usize,
    pub top_class: Vec<String>,
    pub vertex_groups: Vec<VertexGroupDocument>,
    pub loops_s: usize,
    pub loops_t: usize,
    pub isolated: Vec<String>,
    pub killed: Vec<String>,
    pub edge_groups: Vec<EdgeGroup>,
    pub edge_stabilizers_trivial: bool,
}

impl GraphOfGroups {
    pub fn to_document(&self, g: &SimpleGraph) -> GraphOfGroupsDocument {
        let vertex_groups = self
            .vertex_groups
            .iter()
            .map(|vg| match *vg {
                VertexGroup::InducedSubgraph(s) => VertexGroupDocument::InducedSubgraph {
                    vertices: labels_of(g, s),
                    edges: g
                        .edges()
                        .into_iter()
                        .filter(|&(u, v)| s.contains(u) && s.contains(v))
                        .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                        .collect(),
                },
                VertexGroup::FreeAbelianClass(s) => VertexGroupDocument::FreeAbelianClass {
                    generators: labels_of(g, s),
                },
            })
            .collect();
        GraphOfGroupsDocument {
            hyperedge: self.hyperedge,
            top_class: labels_of(g, self.top),
            vertex_groups,
            loops_s: self.loops_s,
            loops_t: self.loops_t,
            isolated: self
                .isolated
                .iter()
                .map(|&v| g.label(v).to_string())
                .collect(),
            killed: labels_of(g, self.killed),
            edge_groups: self.edge_groups.clone(),
            edge_stabilizers_trivial: check_edge_stabilizers_trivial(self),
        }
    }

    /// DOT rendering: one node per vertex group plus a base point carrying the loops.
    pub fn to_dot(&self, g: &SimpleGraph) -> String {
        let mut s = format!("digraph gog_E{} {{\n  node [shape=box];\n", self.hyperedge);
        let _ = writeln!(
            s,
            "  base [shape=point];\n  killed [shape=note, label=\"killed: {{{}}}\"];",
            g.format_set(self.killed)
        );
        for (i, vg) in self.vertex_groups.iter().enumerate() {
            let label = match vg {
                VertexGroup::InducedSubgraph(v) => format!("A<{}>", g.format_set(*v)),
                VertexGroup::FreeAbelianClass(v) => format!("Z^{} <{}>", v.len(), g.format_set(*v)),
            };
            let _ = writeln!(s, "  V{i} [label=\"{label}\"];");
            let _ = writeln!(s, "  base -> V{i} [arrowhead=none, label=\"1\"];");
        }
        let free_loops = if self.loops_s > 0 {
            self.top.iter().collect()
        } else {
            Vec::new()
        };
        for v in free_loops.into_iter().chain(self.isolated.iter().copied()) {
            let _ = writeln!(s, "  base -> base [label=\"{} (1)\"];", g.label(v));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::build_flags_hypergraph;
    use crate::word::parse_word;

    fn gog_for(g: &SimpleGraph, top: &str) -> (FlagsHypergraph, GraphOfGroups) {
        let fh = build_flags_hypergraph(g).unwrap();
        let e = fh.hyperedge_of_vertex(g.vertex(top).unwrap()).clone();
        let gog = build_graph_of_groups(g, &fh, &e);
        (fh, gog)
    }

    #[test]
    fn p3_level_one() {
        let p3 = SimpleGraph::path(3);
        let (_, gog) = gog_for(&p3, "b");
        assert_eq!(
            gog.vertex_groups,
            [VertexGroup::FreeAbelianClass(VertexSet::singleton(1))]
        );
        assert_eq!((gog.loops_s, gog.loops_t), (0, 0));
        assert_eq!(p3.format_set(gog.killed), "a,c");
        assert!(check_edge_stabilizers_trivial(&gog));
    }

    #[test]
    fn c4_free_class() {
        let c4 = SimpleGraph::cycle(4);
        let (_, gog) = gog_for(&c4, "a");
        assert!(gog.vertex_groups.is_empty());
        assert_eq!((gog.loops_s, gog.loops_t), (2, 0));
        assert_eq!(c4.format_set(gog.killed), "b,d");
        assert!(check_edge_stabilizers_trivial(&gog));
    }

    #[test]
    fn p4_with_center() {
        let p4 = SimpleGraph::path(4);
        let (_, gog) = gog_for(&p4, "a");
        assert_eq!(gog.loops_s, 1);
        assert_eq!(
            gog.vertex_groups,
            [VertexGroup::InducedSubgraph([2, 3].into_iter().collect())]
        );
        assert_eq!(gog.loops_t, 0);
        assert_eq!(p4.format_set(gog.killed), "b");
        assert!(check_edge_stabilizers_trivial(&gog));
    }

    #[test]
    fn quotient_examples() {
        let p3 = SimpleGraph::path(3);
        let fh = build_flags_hypergraph(&p3).unwrap();
        let e = fh.hyperedge_of_vertex(1);
        let q = Quotient::for_hyperedge(&p3, &fh, e);
        let w = parse_word(&p3, "a b c").unwrap();
        let img = quotient_word(&p3, &fh, e, &w).unwrap();
        assert_eq!(img.display(&q.graph).to_string(), "b");
        assert!(quotient_word(&p3, &fh, e, &[]).unwrap().is_empty());

        let c4 = SimpleGraph::cycle(4);
        let fh = build_flags_hypergraph(&c4).unwrap();
        let e = fh.hyperedge_of_vertex(0);
        let q = Quotient::for_hyperedge(&c4, &fh, e);
        let w = parse_word(&c4, "b a d c").unwrap();
        assert_eq!(
            quotient_word(&c4, &fh, e, &w)
                .unwrap()
                .display(&q.graph)
                .to_string(),
            "a c"
        );
        let w = parse_word(&c4, "c a").unwrap();
        assert_eq!(q.map(&w).display(&q.graph).to_string(), "c a");
    }

    #[test]
    fn line_action_examples() {
        let k3 = SimpleGraph::complete(3);
        let fh = build_flags_hypergraph(&k3).unwrap();
        let lines = line_actions(&k3, &fh, &fh.hyperedges[0]).unwrap();
        assert_eq!(lines.len(), 3);
        let w = parse_word(&k3, "a b a").unwrap();
        assert_eq!(lines[0].translation(&w), 2);

        let p3 = SimpleGraph::path(3);
        let fh = build_flags_hypergraph(&p3).unwrap();
        assert_eq!(
            line_actions(&p3, &fh, fh.hyperedge_of_vertex(1))
                .unwrap()
                .len(),
            1
        );

        let c4 = SimpleGraph::cycle(4);
        let fh = build_flags_hypergraph(&c4).unwrap();
        assert!(matches!(
            line_actions(&c4, &fh, fh.hyperedge_of_vertex(0)),
            Err(Error::WrongHyperedgeKind { .. })
        ));
    }

    #[test]
    fn exports() {
        let p4 = SimpleGraph::path(4);
        let (_, gog) = gog_for(&p4, "a");
        let doc = serde_json::to_value(gog.to_document(&p4)).unwrap();
        assert_eq!(doc["vertex_groups"][0]["type"], "induced-subgraph");
        assert_eq!(doc["killed"][0], "b");
        let dot = gog.to_dot(&p4);
        assert!(dot.contains("A<c,d>"));
        assert!(dot.contains("base -> base [label=\"a (1)\"]"));
    }
}

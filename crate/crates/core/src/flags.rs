//! The link/star preorder on vertices, its vertex classes, and the graded
//! flags hypergraph built by repeatedly peeling off maximal classes.

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ClassKind, SimpleGraph, VertexClass, VertexSet};

/// `u ≤ v` iff `lk(u) ⊆ st(v)`.
pub fn leq(g: &SimpleGraph, u: usize, v: usize) -> bool {
    g.link(u).is_subset(g.star(v))
}

/// Checked variant of [`leq`] taking labels.
pub fn leq_labels(g: &SimpleGraph, u: &str, v: &str) -> Result<bool> {
    Ok(leq(g, g.vertex(u)?, g.vertex(v)?))
}

/// Equivalence classes of `u ≤ v ∧ v ≤ u`, taken within each connected
/// component, ordered by least member.
pub fn vertex_classes(g: &SimpleGraph) -> Result<Vec<VertexClass>> {
    let components = g.components();
    let component_of = component_index(g, &components);
    let mut assigned = VertexSet::empty();
    let mut classes = Vec::new();
    for u in 0..g.len() {
        if assigned.contains(u) {
            continue;
        }
        let members: VertexSet = (u..g.len())
            .filter(|&v| component_of[v] == component_of[u] && leq(g, u, v) && leq(g, v, u))
            .collect();
        assigned = assigned.union(members);
        classes.push(VertexClass {
            members,
            kind: class_kind(g, members)?,
        });
    }
    Ok(classes)
}

fn class_kind(g: &SimpleGraph, members: VertexSet) -> Result<ClassKind> {
    if members.len() == 1 {
        return Ok(ClassKind::Singleton);
    }
    let (mut adjacent, mut apart) = (false, false);
    for u in members.iter() {
        for v in members.iter().filter(|&v| v > u) {
            if g.adjacent(u, v) {
                adjacent = true;
            } else {
                apart = true;
            }
        }
    }
    match (adjacent, apart) {
        (true, false) => Ok(ClassKind::Clique),
        (false, true) => Ok(ClassKind::AntiClique),
        _ => Err(Error::MixedClass(g.format_set(members))),
    }
}

fn component_index(g: &SimpleGraph, components: &[VertexSet]) -> Vec<usize> {
    let mut out = vec![0; g.len()];
    for (i, c) in components.iter().enumerate() {
        for v in c.iter() {
            out[v] = i;
        }
    }
    out
}

/// Classification of a hyperedge by the structure of its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperedgeKind {
    /// Level one, anti-clique class: a free group of rank at least 2.
    FreeLevelOne,
    /// Level one, clique or singleton class: a free abelian group.
    FreeAbelianLevelOne,
    /// No vertex outside the top class commutes with the whole top class.
    Centerless { b_part: VertexSet },
    /// `A = Ab ⊕ (B * A_[v])` with a nontrivial center `Ab`.
    WithCenter { ab: VertexSet, b_part: VertexSet },
    /// `B` trivial and the top class abelian, so the whole group is abelian.
    Abelian { ab: VertexSet },
}

impl HyperedgeKind {
    pub fn ab(&self) -> VertexSet {
        match *self {
            HyperedgeKind::WithCenter { ab, .. } | HyperedgeKind::Abelian { ab } => ab,
            _ => VertexSet::empty(),
        }
    }

    pub fn b_part(&self) -> VertexSet {
        match *self {
            HyperedgeKind::Centerless { b_part } | HyperedgeKind::WithCenter { b_part, .. } => {
                b_part
            }
            _ => VertexSet::empty(),
        }
    }

    /// Whether the hyperedge's group is abelian.
    pub fn is_abelian(&self) -> bool {
        matches!(
            self,
            HyperedgeKind::FreeAbelianLevelOne | HyperedgeKind::Abelian { .. }
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            HyperedgeKind::FreeLevelOne => "free-level-one",
            HyperedgeKind::FreeAbelianLevelOne => "free-abelian-level-one",
            HyperedgeKind::Centerless { .. } => "centerless",
            HyperedgeKind::WithCenter { .. } => "with-center",
            HyperedgeKind::Abelian { .. } => "abelian",
        }
    }
}

impl fmt::Display for HyperedgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperedge {
    pub id: usize,
    pub level: usize,
    /// Index into [`FlagsHypergraph::classes`].
    pub top_class: usize,
    /// Ids of all lower-level hyperedges contained in this one.
    pub contained: Vec<usize>,
    pub vertex_set: VertexSet,
    pub kind: HyperedgeKind,
    /// Index into [`FlagsHypergraph::components`].
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagsHypergraph {
    pub classes: Vec<VertexClass>,
    /// `greater[i]` holds the classes strictly above class `i`, as class indices.
    greater: Vec<Vec<usize>>,
    pub hyperedges: Vec<Hyperedge>,
    /// `class_hyperedge[i]` is the hyperedge topped by class `i`.
    pub class_hyperedge: Vec<usize>,
    pub components: Vec<VertexSet>,
}

impl FlagsHypergraph {
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(v))
            .expect("classes partition the vertices")
    }

    /// Strict class order `[i] < [j]`.
    pub fn class_less(&self, i: usize, j: usize) -> bool {
        self.greater[i].contains(&j)
    }

    pub fn classes_above(&self, i: usize) -> &[usize] {
        &self.greater[i]
    }

    /// All pairs `(i, j)` with `[i] < [j]`.
    pub fn class_order(&self) -> Vec<(usize, usize)> {
        self.greater
            .iter()
            .enumerate()
            .flat_map(|(i, above)| above.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn top(&self, e: &Hyperedge) -> &VertexClass {
        &self.classes[e.top_class]
    }

    /// The hyperedge whose top class contains `v`.
    pub fn hyperedge_of_vertex(&self, v: usize) -> &Hyperedge {
        &self.hyperedges[self.class_hyperedge[self.class_of(v)]]
    }

    pub fn max_level(&self) -> usize {
        self.hyperedges.iter().map(|e| e.level).max().unwrap_or(0)
    }

    pub fn level(&self, k: usize) -> impl Iterator<Item = &Hyperedge> {
        self.hyperedges.iter().filter(move |e| e.level == k)
    }

    /// Checks that the class order is irreflexive and transitive.
    pub fn order_is_strict_partial_order(&self) -> bool {
        let n = self.classes.len();
        (0..n).all(|i| !self.class_less(i, i))
            && (0..n).all(|i| {
                self.greater[i]
                    .iter()
                    .all(|&j| self.greater[j].iter().all(|&k| self.class_less(i, k)))
            })
    }

    pub fn describe(&self, g: &SimpleGraph, e: &Hyperedge) -> String {
        format!("E{}{{{}}}", e.id, g.format_set(self.top(e).members))
    }
}

/// Builds the flags hypergraph, each connected component on its own.
pub fn build_flags_hypergraph(g: &SimpleGraph) -> Result<FlagsHypergraph> {
    let classes = vertex_classes(g)?;
    let components = g.components();
    let component_of = component_index(g, &components);
    let class_component: Vec<usize> = classes
        .iter()
        .map(|c| component_of[c.representative()])
        .collect();

    // Representatives are interchangeable; check every pair agrees before trusting one.
    let mut greater = vec![Vec::new(); classes.len()];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            if i == j || class_component[i] != class_component[j] {
                continue;
            }
            let r = leq(g, ci.representative(), cj.representative());
            let agree = ci
                .members
                .iter()
                .all(|u| cj.members.iter().all(|v| leq(g, u, v) == r));
            if !agree {
                return Err(Error::MixedClass(format!(
                    "{} vs {}",
                    g.format_set(ci.members),
                    g.format_set(cj.members)
                )));
            }
            if r {
                greater[i].push(j);
            }
        }
    }

    let n = classes.len();
    let mut level_of = vec![0usize; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut level = 0;
    while !remaining.is_empty() {
        level += 1;
        let maximal: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| !greater[i].iter().any(|j| remaining.contains(j)))
            .collect();
        for &i in &maximal {
            level_of[i] = level;
        }
        remaining.retain(|i| !maximal.contains(i));
    }

    // Hyperedges in (level, least member) order; classes are already sorted by least member.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (level_of[i], classes[i].representative()));
    let mut class_hyperedge = vec![0; n];
    let mut hyperedges: Vec<Hyperedge> = Vec::with_capacity(n);
    // Every class appearing in each hyperedge, recursively.
    let mut classes_in: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (id, &i) in order.iter().enumerate() {
        let mut contained = Vec::new();
        let mut vertex_set = classes[i].members;
        let mut all_classes = vec![i];
        for (lower_id, lower) in hyperedges.iter().enumerate() {
            if lower.level >= level_of[i] {
                continue;
            }
            if classes_in[lower_id]
                .iter()
                .all(|&c| greater[i].contains(&c))
            {
                contained.push(lower_id);
                vertex_set = vertex_set.union(lower.vertex_set);
                all_classes.extend(classes_in[lower_id].iter().copied());
            }
        }
        all_classes.sort_unstable();
        all_classes.dedup();
        class_hyperedge[i] = id;
        let mut e = Hyperedge {
            id,
            level: level_of[i],
            top_class: i,
            contained,
            vertex_set,
            kind: HyperedgeKind::FreeLevelOne,
            component: class_component[i],
        };
        e.kind = classify(g, &classes[i], &e)?;
        hyperedges.push(e);
        classes_in.push(all_classes);
    }

    Ok(FlagsHypergraph {
        classes,
        greater,
        hyperedges,
        class_hyperedge,
        components,
    })
}

/// Recomputes the kind of `e` from the graph.
pub fn classify_hyperedge(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
) -> Result<HyperedgeKind> {
    classify(g, fh.top(e), e)
}

fn classify(g: &SimpleGraph, top: &VertexClass, e: &Hyperedge) -> Result<HyperedgeKind> {
    if e.level == 1 {
        return Ok(match top.kind {
            ClassKind::AntiClique => HyperedgeKind::FreeLevelOne,
            ClassKind::Clique | ClassKind::Singleton => HyperedgeKind::FreeAbelianLevelOne,
        });
    }
    let rest = e.vertex_set.difference(top.members);
    let ab: VertexSet = rest
        .iter()
        .filter(|&w| top.members.is_subset(g.link(w)))
        .collect();
    let is_clique = ab
        .iter()
        .all(|u| ab.iter().all(|v| u == v || g.adjacent(u, v)));
    if !is_clique {
        return Err(Error::CenterNotClique {
            top: g.format_set(top.members),
            center: g.format_set(ab),
        });
    }
    if ab.is_empty() {
        return Ok(HyperedgeKind::Centerless { b_part: rest });
    }
    let b_part = rest.difference(ab);
    if b_part.is_empty() && top.kind != ClassKind::AntiClique {
        Ok(HyperedgeKind::Abelian { ab })
    } else {
        Ok(HyperedgeKind::WithCenter { ab, b_part })
    }
}

#[derive(Debug, Serialize)]
pub struct ClassDocument {
    pub members: Vec<String>,
    pub kind: ClassKind,
    pub level: usize,
}

#[derive(Debug, Serialize)]
pub struct HyperedgeDocument {
    pub id: usize,
    pub level: usize,
    pub component: usize,
    pub top_class: Vec<String>,
    pub vertex_set: Vec<String>,
    pub contained: Vec<usize>,
    pub kind: &'static str,
    pub ab: Vec<String>,
    pub b_part: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct FlagsDocument {
    pub classes: Vec<ClassDocument>,
    /// Pairs `[lower, upper]` of class indices.
    pub class_order: Vec<[usize; 2]>,
    pub hyperedges: Vec<HyperedgeDocument>,
}

pub(crate) fn labels_of(g: &SimpleGraph, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_string()).collect()
}

impl FlagsHypergraph {
    pub fn to_document(&self, g: &SimpleGraph) -> FlagsDocument {
        FlagsDocument {
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| ClassDocument {
                    members: labels_of(g, c.members),
                    kind: c.kind,
                    level: self.hyperedges[self.class_hyperedge[i]].level,
                })
                .collect(),
            class_order: self
                .class_order()
                .into_iter()
                .map(|(i, j)| [i, j])
                .collect(),
            hyperedges: self
                .hyperedges
                .iter()
                .map(|e| HyperedgeDocument {
                    id: e.id,
                    level: e.level,
                    component: e.component,
                    top_class: labels_of(g, self.top(e).members),
                    vertex_set: labels_of(g, e.vertex_set),
                    contained: e.contained.clone(),
                    kind: e.kind.name(),
                    ab: labels_of(g, e.kind.ab()),
                    b_part: labels_of(g, e.kind.b_part()),
                })
                .collect(),
        }
    }

    /// DOT rendering: one node per hyperedge, coloured by level, with arrows to
    /// directly contained hyperedges.
    pub fn to_dot(&self, g: &SimpleGraph) -> String {
        const PALETTE: [&str; 6] = [
            "#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4", "#fed9a6", "#ffffcc",
        ];
        let mut s = String::from("digraph flags {\n  node [shape=box, style=filled];\n");
        for e in &self.hyperedges {
            let top = self.top(e);
            let mut label = format!(
                "E{} L{}\\n[{}] {}",
                e.id,
                e.level,
                g.format_set(top.members),
                top.kind
            );
            let _ = write!(label, "\\n{}", e.kind);
            if !e.kind.ab().is_empty() {
                let _ = write!(label, " Ab={{{}}}", g.format_set(e.kind.ab()));
            }
            if !e.kind.b_part().is_empty() {
                let _ = write!(label, " B={{{}}}", g.format_set(e.kind.b_part()));
            }
            let colour = PALETTE[(e.level - 1) % PALETTE.len()];
            let _ = writeln!(
                s,
                "  E{} [label=\"{}\", fillcolor=\"{}\"];",
                e.id, label, colour
            );
        }
        for e in &self.hyperedges {
            for &c in &e.contained {
                // skip arrows implied by transitivity
                let implied = e
                    .contained
                    .iter()
                    .any(|&mid| mid != c && self.hyperedges[mid].contained.contains(&c));
                if !implied {
                    let _ = writeln!(s, "  E{} -> E{};", e.id, c);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

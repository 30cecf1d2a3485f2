//! Automorphisms of the group as generator-image tables, the classical
//! (Laurence–Servatius) generating set, and the per-hyperedge generator
//! families whose union generates the subgroup `Aut₁`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::{leq, FlagsHypergraph, Hyperedge, HyperedgeKind};
use crate::graph::{SimpleGraph, VertexSet};
use crate::word::{
    conjugate, exponent_sums, format_word, inverse_word, nf_unchecked, parse_word, product,
    ConjugatorBall, Letter, NormalForm, Word,
};

/// An automorphism given by the images of the standard generators, together
/// with a formal inverse. Validity is checked by [`check_homomorphism`], not
/// assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    forward: Vec<NormalForm>,
    backward: Vec<NormalForm>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<NormalForm> = (0..n).map(NormalForm::generator).collect();
        Automorphism {
            forward: ids.clone(),
            backward: ids,
        }
    }

    /// Normalizes both image tables. No validity check.
    pub fn from_images(g: &SimpleGraph, forward: Vec<Word>, backward: Vec<Word>) -> Self {
        Automorphism {
            forward: forward.iter().map(|w| nf_unchecked(g, w)).collect(),
            backward: backward.iter().map(|w| nf_unchecked(g, w)).collect(),
        }
    }

    /// `x ↦ c x c⁻¹`.
    pub fn inner(g: &SimpleGraph, c: &[Letter]) -> Self {
        let ci = inverse_word(c);
        Automorphism {
            forward: (0..g.len())
                .map(|v| conjugate(g, c, &[Letter::pos(v)]))
                .collect(),
            backward: (0..g.len())
                .map(|v| conjugate(g, &ci, &[Letter::pos(v)]))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self, v: usize) -> &NormalForm {
        &self.forward[v]
    }

    pub fn backward(&self, v: usize) -> &NormalForm {
        &self.backward[v]
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .enumerate()
            .all(|(v, img)| img.letters() == [Letter::pos(v)])
    }

    pub fn to_document(&self, g: &SimpleGraph) -> AutomorphismDocument {
        let table = |imgs: &[NormalForm]| {
            imgs.iter()
                .enumerate()
                .map(|(v, w)| (g.label(v).to_string(), w.display(g).to_string()))
                .collect()
        };
        AutomorphismDocument {
            forward: table(&self.forward),
            backward: table(&self.backward),
        }
    }

    /// Parses a document and checks the result is a valid automorphism.
    pub fn from_document(g: &SimpleGraph, doc: &AutomorphismDocument) -> Result<Self> {
        let read = |table: &BTreeMap<String, String>| -> Result<Vec<Word>> {
            g.labels()
                .iter()
                .map(|l| {
                    let text = table
                        .get(l)
                        .ok_or_else(|| Error::InvalidAutomorphism(format!("no image for `{l}`")))?;
                    parse_word(g, text)
                })
                .collect()
        };
        let aut = Automorphism::from_images(g, read(&doc.forward)?, read(&doc.backward)?);
        if !check_homomorphism(g, &aut) {
            return Err(Error::InvalidAutomorphism(
                "images do not define an automorphism".into(),
            ));
        }
        Ok(aut)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismDocument {
    pub forward: BTreeMap<String, String>,
    pub backward: BTreeMap<String, String>,
}

fn substitute(images: &[NormalForm], w: &[Letter]) -> Word {
    let mut out = Vec::new();
    for l in w {
        let img = images[l.vertex].letters();
        if l.inverse {
            out.extend(inverse_word(img));
        } else {
            out.extend_from_slice(img);
        }
    }
    out
}

pub(crate) fn apply_unchecked(g: &SimpleGraph, aut: &Automorphism, w: &[Letter]) -> NormalForm {
    nf_unchecked(g, &substitute(&aut.forward, w))
}

/// Image of a word, normalized.
pub fn apply(g: &SimpleGraph, aut: &Automorphism, w: &[Letter]) -> Result<NormalForm> {
    crate::word::normal_form(g, w)?;
    Ok(apply_unchecked(g, aut, w))
}

pub(crate) fn compose_unchecked(
    g: &SimpleGraph,
    a1: &Automorphism,
    a2: &Automorphism,
) -> Automorphism {
    Automorphism {
        forward: a2
            .forward
            .iter()
            .map(|w| nf_unchecked(g, &substitute(&a1.forward, w.letters())))
            .collect(),
        backward: a1
            .backward
            .iter()
            .map(|w| nf_unchecked(g, &substitute(&a2.backward, w.letters())))
            .collect(),
    }
}

/// `a1 ∘ a2`: apply `a2` first. The result is revalidated.
pub fn compose(g: &SimpleGraph, a1: &Automorphism, a2: &Automorphism) -> Result<Automorphism> {
    let c = compose_unchecked(g, a1, a2);
    if !check_homomorphism(g, &c) {
        return Err(Error::InvalidAutomorphism(
            "composition failed validation".into(),
        ));
    }
    Ok(c)
}

fn respects_relations(g: &SimpleGraph, images: &[NormalForm]) -> bool {
    g.edges().into_iter().all(|(u, v)| {
        let (x, y) = (images[u].letters(), images[v].letters());
        product(g, &[x, y, &inverse_word(x), &inverse_word(y)]).is_empty()
    })
}

/// Both image tables respect every commutation relation and are mutually inverse.
pub fn check_homomorphism(g: &SimpleGraph, aut: &Automorphism) -> bool {
    let n = g.len();
    if aut.forward.len() != n || aut.backward.len() != n {
        return false;
    }
    if aut
        .forward
        .iter()
        .chain(&aut.backward)
        .any(|w| w.letters().iter().any(|l| l.vertex >= n))
    {
        return false;
    }
    respects_relations(g, &aut.forward)
        && respects_relations(g, &aut.backward)
        && (0..n).all(|v| {
            let gen = [Letter::pos(v)];
            nf_unchecked(g, &substitute(&aut.backward, aut.forward[v].letters())).letters() == gen
                && nf_unchecked(g, &substitute(&aut.forward, aut.backward[v].letters())).letters()
                    == gen
        })
}

/// On-the-nose equality of generator images.
pub fn equal_automorphisms(a1: &Automorphism, a2: &Automorphism) -> bool {
    a1.forward == a2.forward
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerEquality {
    /// `inner(c) ∘ a1 = a2`.
    InnerWitness(NormalForm),
    /// No conjugator within the radius works; not a proof of inequality in Out.
    NotWithinRadius,
}

pub fn equal_modulo_inner(
    g: &SimpleGraph,
    a1: &Automorphism,
    a2: &Automorphism,
    radius: usize,
) -> InnerEquality {
    equal_modulo_inner_in(g, a1, a2, &ConjugatorBall::new(g, radius))
}

/// Like [`equal_modulo_inner`] with a precomputed conjugator ball.
pub fn equal_modulo_inner_in(
    g: &SimpleGraph,
    a1: &Automorphism,
    a2: &Automorphism,
    ball: &ConjugatorBall,
) -> InnerEquality {
    if equal_automorphisms(a1, a2) {
        return InnerEquality::InnerWitness(NormalForm::identity());
    }
    let n = g.len();
    // inner automorphisms act trivially on the abelianization
    let abelian_agree = (0..n).all(|v| {
        exponent_sums(n, a1.forward[v].letters()) == exponent_sums(n, a2.forward[v].letters())
    });
    if !abelian_agree {
        return InnerEquality::NotWithinRadius;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| a1.forward[v] == a2.forward[v]);
    for c in ball.iter().skip(1) {
        if order
            .iter()
            .all(|&v| conjugate(g, c.letters(), a1.forward[v].letters()) == a2.forward[v])
        {
            return InnerEquality::InnerWitness(c.clone());
        }
    }
    InnerEquality::NotWithinRadius
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// The classical generators of `Aut(A_Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LaurenceGenerator {
    Inner {
        conjugator: Letter,
    },
    Symmetry {
        permutation: Vec<usize>,
    },
    Inversion {
        v: usize,
    },
    /// `v ↦ v w`, allowed when `v ≤ w`.
    Transvection {
        v: usize,
        w: usize,
    },
    /// Conjugates one component of `Γ \ st(v)` by `v`.
    PartialConjugation {
        v: usize,
        component: VertexSet,
    },
}

impl LaurenceGenerator {
    pub fn id(&self, g: &SimpleGraph) -> String {
        match self {
            LaurenceGenerator::Inner { conjugator } => {
                format!("inner({})", format_word(g, &[*conjugator]))
            }
            LaurenceGenerator::Symmetry { permutation } => {
                let images: Vec<&str> = permutation.iter().map(|&v| g.label(v)).collect();
                format!("symmetry[{}]", images.join(","))
            }
            LaurenceGenerator::Inversion { v } => format!("inversion({})", g.label(*v)),
            LaurenceGenerator::Transvection { v, w } => {
                format!("transvection({},{})", g.label(*v), g.label(*w))
            }
            LaurenceGenerator::PartialConjugation { v, component } => {
                format!(
                    "partial-conjugation({};{{{}}})",
                    g.label(*v),
                    g.format_set(*component)
                )
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            LaurenceGenerator::Inner { .. } => "inner",
            LaurenceGenerator::Symmetry { .. } => "symmetry",
            LaurenceGenerator::Inversion { .. } => "inversion",
            LaurenceGenerator::Transvection { .. } => "transvection",
            LaurenceGenerator::PartialConjugation { .. } => "partial-conjugation",
        }
    }
}

/// Inner, symmetries (without the identity), inversions, transvections,
/// partial conjugations; each group in vertex order.
pub fn enumerate_laurence_generators(g: &SimpleGraph) -> Result<Vec<LaurenceGenerator>> {
    let n = g.len();
    let mut out: Vec<LaurenceGenerator> = (0..n)
        .map(|v| LaurenceGenerator::Inner {
            conjugator: Letter::pos(v),
        })
        .collect();
    out.extend(
        g.symmetries()?
            .into_iter()
            .skip(1)
            .map(|permutation| LaurenceGenerator::Symmetry { permutation }),
    );
    out.extend((0..n).map(|v| LaurenceGenerator::Inversion { v }));
    for v in 0..n {
        for w in 0..n {
            if v != w && leq(g, v, w) {
                out.push(LaurenceGenerator::Transvection { v, w });
            }
        }
    }
    for v in 0..n {
        let outside = g.all_vertices().difference(g.star(v));
        for component in g.components_within(outside) {
            out.push(LaurenceGenerator::PartialConjugation { v, component });
        }
    }
    Ok(out)
}

fn images_with(g: &SimpleGraph, mut f: impl FnMut(usize) -> Word) -> Vec<Word> {
    (0..g.len()).map(&mut f).collect()
}

fn gen(v: usize) -> Word {
    vec![Letter::pos(v)]
}

fn transvection_images(g: &SimpleGraph, v: usize, by: Letter, side: Side) -> Automorphism {
    let image = |b: Letter| match side {
        Side::Right => vec![Letter::pos(v), b],
        Side::Left => vec![b, Letter::pos(v)],
    };
    let fwd = images_with(g, |x| if x == v { image(by) } else { gen(x) });
    let bwd = images_with(g, |x| if x == v { image(by.inv()) } else { gen(x) });
    Automorphism::from_images(g, fwd, bwd)
}

fn conjugation_images(g: &SimpleGraph, support: VertexSet, by: Letter) -> Automorphism {
    let conj = |c: Letter, x: usize| vec![c, Letter::pos(x), c.inv()];
    let fwd = images_with(g, |x| {
        if support.contains(x) {
            conj(by, x)
        } else {
            gen(x)
        }
    });
    let bwd = images_with(g, |x| {
        if support.contains(x) {
            conj(by.inv(), x)
        } else {
            gen(x)
        }
    });
    Automorphism::from_images(g, fwd, bwd)
}

fn check_vertex(g: &SimpleGraph, v: usize) -> Result<()> {
    if v < g.len() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{v}")))
    }
}

pub fn realize_laurence(g: &SimpleGraph, gen_: &LaurenceGenerator) -> Result<Automorphism> {
    let invalid = || Error::InvalidGenerator(gen_.id(g));
    match gen_ {
        LaurenceGenerator::Inner { conjugator } => {
            check_vertex(g, conjugator.vertex)?;
            Ok(Automorphism::inner(g, &[*conjugator]))
        }
        LaurenceGenerator::Symmetry { permutation } => {
            if !g.is_symmetry(permutation) {
                return Err(Error::InvalidGenerator(format!(
                    "not a graph symmetry: {permutation:?}"
                )));
            }
            let mut inv = vec![0; permutation.len()];
            for (i, &p) in permutation.iter().enumerate() {
                inv[p] = i;
            }
            Ok(Automorphism::from_images(
                g,
                images_with(g, |x| gen(permutation[x])),
                images_with(g, |x| gen(inv[x])),
            ))
        }
        LaurenceGenerator::Inversion { v } => {
            check_vertex(g, *v)?;
            let imgs = images_with(g, |x| {
                if x == *v {
                    vec![Letter::neg(x)]
                } else {
                    gen(x)
                }
            });
            Ok(Automorphism::from_images(g, imgs.clone(), imgs))
        }
        LaurenceGenerator::Transvection { v, w } => {
            check_vertex(g, *v)?;
            check_vertex(g, *w)?;
            if v == w || !leq(g, *v, *w) {
                return Err(invalid());
            }
            Ok(transvection_images(g, *v, Letter::pos(*w), Side::Right))
        }
        LaurenceGenerator::PartialConjugation { v, component } => {
            check_vertex(g, *v)?;
            let outside = g.all_vertices().difference(g.star(*v));
            if !g.components_within(outside).contains(component) {
                return Err(invalid());
            }
            Ok(conjugation_images(g, *component, Letter::pos(*v)))
        }
    }
}

/// Elementary automorphisms of the group generated by a top class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassOp {
    Invert {
        u: usize,
    },
    Swap {
        u: usize,
        w: usize,
    },
    /// `u ↦ u·by^±1` or `u ↦ by^±1·u`.
    Transvect {
        u: usize,
        by: usize,
        side: Side,
        inverse: bool,
    },
}

/// What a component conjugation acts on. Either way the whole component is conjugated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugationTarget {
    /// A component holding the lower-level vertices `block` of the hyperedge.
    Block {
        block: VertexSet,
        component: VertexSet,
    },
    /// A component disjoint from the hyperedge.
    Free { component: VertexSet },
}

impl ConjugationTarget {
    pub fn component(&self) -> VertexSet {
        match *self {
            ConjugationTarget::Block { component, .. } | ConjugationTarget::Free { component } => {
                component
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Aut1Kind {
    ClassAut(ClassOp),
    /// `v ↦ v·w^±1` or `w^±1·v` with `v` in the top class and `w` in the `B` part.
    FactorTransvection {
        v: usize,
        w: usize,
        side: Side,
        inverse: bool,
    },
    ComponentConjugation {
        target: ConjugationTarget,
        conjugator: Letter,
    },
    /// `v ↦ v z` with `z` in the center part `Ab`.
    CenterTransvection {
        v: usize,
        z: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Aut1Generator {
    pub hyperedge: usize,
    pub kind: Aut1Kind,
}

fn sign_str(inverse: bool) -> &'static str {
    if inverse {
        "-"
    } else {
        "+"
    }
}

impl Aut1Generator {
    pub fn id(&self, g: &SimpleGraph) -> String {
        let l = |v: usize| g.label(v).to_string();
        let body = match self.kind {
            Aut1Kind::ClassAut(ClassOp::Invert { u }) => format!("class-invert({})", l(u)),
            Aut1Kind::ClassAut(ClassOp::Swap { u, w }) => format!("class-swap({},{})", l(u), l(w)),
            Aut1Kind::ClassAut(ClassOp::Transvect {
                u,
                by,
                side,
                inverse,
            }) => {
                format!(
                    "class-transvect({},{},{},{})",
                    l(u),
                    l(by),
                    side.name(),
                    sign_str(inverse)
                )
            }
            Aut1Kind::FactorTransvection {
                v,
                w,
                side,
                inverse,
            } => {
                format!(
                    "factor-transvect({},{},{},{})",
                    l(v),
                    l(w),
                    side.name(),
                    sign_str(inverse)
                )
            }
            Aut1Kind::ComponentConjugation { target, conjugator } => {
                let mut s = format!(
                    "component-conjugate({{{}}}",
                    g.format_set(target.component())
                );
                if let ConjugationTarget::Block { block, .. } = target {
                    let _ = write!(s, ";block{{{}}}", g.format_set(block));
                }
                let _ = write!(s, ",{})", format_word(g, &[conjugator]));
                s
            }
            Aut1Kind::CenterTransvection { v, z } => format!("center-transvect({},{})", l(v), l(z)),
        };
        format!("E{}:{}", self.hyperedge, body)
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Aut1Kind::ClassAut(_) => "class-aut",
            Aut1Kind::FactorTransvection { .. } => "factor-transvection",
            Aut1Kind::ComponentConjugation { .. } => "component-conjugation",
            Aut1Kind::CenterTransvection { .. } => "center-transvection",
        }
    }
}

/// All generators attached to one hyperedge.
pub fn hyperedge_generators(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
) -> Vec<Aut1Generator> {
    let top = fh.top(e);
    let members: Vec<usize> = top.members.iter().collect();
    let mut kinds = Vec::new();
    for &u in &members {
        kinds.push(Aut1Kind::ClassAut(ClassOp::Invert { u }));
    }
    for (i, &u) in members.iter().enumerate() {
        for &w in &members[i + 1..] {
            kinds.push(Aut1Kind::ClassAut(ClassOp::Swap { u, w }));
        }
    }
    // left and right multiplication agree in an abelian class
    let sides: &[Side] = if top.is_free() {
        &[Side::Right, Side::Left]
    } else {
        &[Side::Right]
    };
    for &u in &members {
        for &by in members.iter().filter(|&&b| b != u) {
            for &side in sides {
                for inverse in [false, true] {
                    kinds.push(Aut1Kind::ClassAut(ClassOp::Transvect {
                        u,
                        by,
                        side,
                        inverse,
                    }));
                }
            }
        }
    }
    let b_part = e.kind.b_part();
    if top.is_free() {
        for &v in &members {
            for w in b_part.iter() {
                for side in [Side::Right, Side::Left] {
                    for inverse in [false, true] {
                        kinds.push(Aut1Kind::FactorTransvection {
                            v,
                            w,
                            side,
                            inverse,
                        });
                    }
                }
            }
        }
    }
    let lower = e.vertex_set.difference(top.members);
    let (components, _) = g.components_outside_star(top);
    for component in components {
        let block = component.intersection(lower);
        let target = if block.is_empty() {
            ConjugationTarget::Free { component }
        } else {
            ConjugationTarget::Block { block, component }
        };
        for c in e.vertex_set.iter() {
            for conjugator in [Letter::pos(c), Letter::neg(c)] {
                kinds.push(Aut1Kind::ComponentConjugation { target, conjugator });
            }
        }
    }
    if matches!(
        e.kind,
        HyperedgeKind::WithCenter { .. } | HyperedgeKind::Abelian { .. }
    ) {
        for &v in &members {
            for z in e.kind.ab().iter() {
                kinds.push(Aut1Kind::CenterTransvection { v, z });
            }
        }
    }
    kinds
        .into_iter()
        .map(|kind| Aut1Generator {
            hyperedge: e.id,
            kind,
        })
        .collect()
}

/// Generators of every hyperedge, in hyperedge order.
pub fn enumerate_aut1_generators(g: &SimpleGraph, fh: &FlagsHypergraph) -> Vec<Aut1Generator> {
    fh.hyperedges
        .iter()
        .flat_map(|e| hyperedge_generators(g, fh, e))
        .collect()
}

pub fn realize_aut1(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    gen_: &Aut1Generator,
) -> Result<Automorphism> {
    let invalid = || Error::InvalidGenerator(gen_.id(g));
    let e = fh.hyperedges.get(gen_.hyperedge).ok_or_else(invalid)?;
    let top = fh.top(e);
    match gen_.kind {
        Aut1Kind::ClassAut(op) => match op {
            ClassOp::Invert { u } => {
                if !top.members.contains(u) {
                    return Err(invalid());
                }
                let imgs = images_with(g, |x| if x == u { vec![Letter::neg(x)] } else { gen(x) });
                Ok(Automorphism::from_images(g, imgs.clone(), imgs))
            }
            ClassOp::Swap { u, w } => {
                if u == w || !top.members.contains(u) || !top.members.contains(w) {
                    return Err(invalid());
                }
                let imgs = images_with(g, |x| {
                    if x == u {
                        gen(w)
                    } else if x == w {
                        gen(u)
                    } else {
                        gen(x)
                    }
                });
                Ok(Automorphism::from_images(g, imgs.clone(), imgs))
            }
            ClassOp::Transvect {
                u,
                by,
                side,
                inverse,
            } => {
                if u == by || !top.members.contains(u) || !top.members.contains(by) {
                    return Err(invalid());
                }
                let by = Letter {
                    vertex: by,
                    inverse,
                };
                Ok(transvection_images(g, u, by, side))
            }
        },
        Aut1Kind::FactorTransvection {
            v,
            w,
            side,
            inverse,
        } => {
            if !top.is_free() || !top.members.contains(v) || !e.kind.b_part().contains(w) {
                return Err(invalid());
            }
            Ok(transvection_images(
                g,
                v,
                Letter { vertex: w, inverse },
                side,
            ))
        }
        Aut1Kind::ComponentConjugation { target, conjugator } => {
            let (components, _) = g.components_outside_star(top);
            let component = target.component();
            if !components.contains(&component) || !e.vertex_set.contains(conjugator.vertex) {
                return Err(invalid());
            }
            Ok(conjugation_images(g, component, conjugator))
        }
        Aut1Kind::CenterTransvection { v, z } => {
            if !top.members.contains(v) || !e.kind.ab().contains(z) {
                return Err(invalid());
            }
            Ok(transvection_images(g, v, Letter::pos(z), Side::Right))
        }
    }
}

//! Routing classical generators through the per-hyperedge families, and the
//! kernel-preservation check for the quotient attached to a hyperedge.

use serde::Serialize;

use crate::decomposition::Quotient;
use crate::error::{Error, Result};
use crate::flags::{FlagsHypergraph, Hyperedge};
use crate::generators::{
    apply_unchecked, compose_unchecked, enumerate_aut1_generators, equal_automorphisms,
    equal_modulo_inner_in, realize_aut1, realize_laurence, Aut1Generator, Aut1Kind, Automorphism,
    ClassOp, InnerEquality, LaurenceGenerator, Side,
};
use crate::graph::SimpleGraph;
use crate::word::{format_word, inverse_word, nf_unchecked, ConjugatorBall, Letter, NormalForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    /// Conjugator radius for equality modulo inner automorphisms.
    pub radius: usize,
    /// Maximum number of generator terms in a searched composition.
    pub depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            radius: 4,
            depth: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessTerm {
    Aut1 {
        generator: Aut1Generator,
        inverted: bool,
    },
    Inner(NormalForm),
}

impl WitnessTerm {
    fn aut1(generator: Aut1Generator) -> Self {
        WitnessTerm::Aut1 {
            generator,
            inverted: false,
        }
    }

    pub fn inverse(&self, g: &SimpleGraph) -> Self {
        match self {
            WitnessTerm::Aut1 {
                generator,
                inverted,
            } => WitnessTerm::Aut1 {
                generator: *generator,
                inverted: !inverted,
            },
            WitnessTerm::Inner(c) => {
                WitnessTerm::Inner(nf_unchecked(g, &inverse_word(c.letters())))
            }
        }
    }

    pub fn realize(&self, g: &SimpleGraph, fh: &FlagsHypergraph) -> Result<Automorphism> {
        match self {
            WitnessTerm::Aut1 {
                generator,
                inverted,
            } => {
                let a = realize_aut1(g, fh, generator)?;
                Ok(if *inverted { a.inverse() } else { a })
            }
            WitnessTerm::Inner(c) => Ok(Automorphism::inner(g, c.letters())),
        }
    }

    pub fn describe(&self, g: &SimpleGraph) -> String {
        match self {
            WitnessTerm::Aut1 {
                generator,
                inverted: false,
            } => generator.id(g),
            WitnessTerm::Aut1 {
                generator,
                inverted: true,
            } => format!("({})^-1", generator.id(g)),
            WitnessTerm::Inner(c) => format!("inner({})", format_word(g, c.letters())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RoutingResult {
    /// `terms[0] ∘ terms[1] ∘ …` equals the routed generator. `radius` is the
    /// length of the inner correction that was needed.
    Witness {
        terms: Vec<WitnessTerm>,
        hyperedge: usize,
        radius: usize,
    },
    SymmetryResidue,
    SearchFailed {
        diagnostic: String,
        explored: usize,
    },
}

impl RoutingResult {
    pub fn is_witness(&self) -> bool {
        matches!(self, RoutingResult::Witness { .. })
    }

    /// Reverses the terms and inverts each, so the result witnesses the inverse generator.
    pub fn inverted(&self, g: &SimpleGraph) -> Self {
        match self {
            RoutingResult::Witness {
                terms,
                hyperedge,
                radius,
            } => RoutingResult::Witness {
                terms: terms.iter().rev().map(|t| t.inverse(g)).collect(),
                hyperedge: *hyperedge,
                radius: *radius,
            },
            other => other.clone(),
        }
    }
}

/// Routes generators of one graph; holds the conjugator ball so it is built once.
pub struct Router<'a> {
    g: &'a SimpleGraph,
    fh: &'a FlagsHypergraph,
    config: SearchConfig,
    ball: ConjugatorBall,
}

impl<'a> Router<'a> {
    pub fn new(g: &'a SimpleGraph, fh: &'a FlagsHypergraph, config: SearchConfig) -> Self {
        Router {
            g,
            fh,
            config,
            ball: ConjugatorBall::new(g, config.radius),
        }
    }

    pub fn config(&self) -> SearchConfig {
        self.config
    }

    pub fn route(&self, gen: &LaurenceGenerator) -> RoutingResult {
        let (g, fh) = (self.g, self.fh);
        match gen {
            LaurenceGenerator::Symmetry { .. } => RoutingResult::SymmetryResidue,
            LaurenceGenerator::Inner { conjugator } => RoutingResult::Witness {
                terms: vec![WitnessTerm::Inner(nf_unchecked(g, &[*conjugator]))],
                hyperedge: fh.hyperedge_of_vertex(conjugator.vertex).id,
                radius: 0,
            },
            LaurenceGenerator::Inversion { v } => {
                let e = fh.hyperedge_of_vertex(*v);
                single(e, Aut1Kind::ClassAut(ClassOp::Invert { u: *v }))
            }
            LaurenceGenerator::Transvection { v, w } => self.route_transvection(*v, *w),
            LaurenceGenerator::PartialConjugation { v, .. } => match realize_laurence(g, gen) {
                Ok(target) => self.search(*v, &target),
                Err(err) => failed(err.to_string(), 0),
            },
        }
    }

    fn route_transvection(&self, v: usize, w: usize) -> RoutingResult {
        let (g, fh) = (self.g, self.fh);
        let e = fh.hyperedge_of_vertex(v);
        let (cv, cw) = (fh.class_of(v), fh.class_of(w));
        if cv == cw {
            return single(
                e,
                Aut1Kind::ClassAut(ClassOp::Transvect {
                    u: v,
                    by: w,
                    side: Side::Right,
                    inverse: false,
                }),
            );
        }
        if !fh.class_less(cv, cw) {
            return failed(format!("[{}] is not below [{}]", g.label(v), g.label(w)), 0);
        }
        if g.adjacent(v, w) {
            if e.kind.ab().contains(w) {
                single(e, Aut1Kind::CenterTransvection { v, z: w })
            } else {
                failed(
                    format!(
                        "{} is not in the center part of {}",
                        g.label(w),
                        fh.describe(g, e)
                    ),
                    0,
                )
            }
        } else if fh.top(e).is_free() && e.kind.b_part().contains(w) {
            single(
                e,
                Aut1Kind::FactorTransvection {
                    v,
                    w,
                    side: Side::Right,
                    inverse: false,
                },
            )
        } else {
            failed(
                format!(
                    "{} is not in the B part of {}",
                    g.label(w),
                    fh.describe(g, e)
                ),
                0,
            )
        }
    }

    /// Generators that can contribute to conjugating part of the graph by `v`:
    /// component conjugations by `v^±1`, and transvections multiplying by `v^±1`.
    fn pool(&self, v: usize, support: crate::graph::VertexSet) -> Vec<Aut1Generator> {
        enumerate_aut1_generators(self.g, self.fh)
            .into_iter()
            .filter(|gen| match gen.kind {
                Aut1Kind::ComponentConjugation { target, conjugator } => {
                    conjugator.vertex == v && target.component().is_subset(support)
                }
                Aut1Kind::ClassAut(ClassOp::Transvect { u, by, .. }) => {
                    by == v && support.contains(u)
                }
                Aut1Kind::FactorTransvection { v: x, w, .. } => w == v && support.contains(x),
                _ => false,
            })
            .collect()
    }

    /// Bounded search: all compositions of at most `depth` pool terms, first
    /// for exact equality, then modulo inner automorphisms within the radius.
    fn search(&self, v: usize, target: &Automorphism) -> RoutingResult {
        let g = self.g;
        let support = (0..g.len())
            .filter(|&x| target.forward(x).letters() != [Letter::pos(x)])
            .collect();
        let pool = self.pool(v, support);
        let realized: Vec<Automorphism> =
            match pool.iter().map(|p| realize_aut1(g, self.fh, p)).collect() {
                Ok(r) => r,
                Err(err) => return failed(err.to_string(), 0),
            };
        let e = self.fh.hyperedge_of_vertex(v).id;
        let mut explored = 0;
        for exact in [true, false] {
            let mut found = None;
            for_each_sequence(g, &realized, self.config.depth, &mut |seq, aut| {
                explored += 1;
                let hit = if exact {
                    equal_automorphisms(aut, target).then(NormalForm::identity)
                } else {
                    match equal_modulo_inner_in(g, aut, target, &self.ball) {
                        InnerEquality::InnerWitness(c) => Some(c),
                        InnerEquality::NotWithinRadius => None,
                    }
                };
                if let Some(c) = hit {
                    found = Some((seq.to_vec(), c));
                    true
                } else {
                    false
                }
            });
            if let Some((seq, c)) = found {
                let radius = c.len();
                let mut terms = Vec::new();
                if !c.is_empty() {
                    terms.push(WitnessTerm::Inner(c));
                }
                terms.extend(seq.into_iter().map(|i| WitnessTerm::aut1(pool[i])));
                return RoutingResult::Witness {
                    terms,
                    hyperedge: e,
                    radius,
                };
            }
        }
        failed(
            format!(
                "no composition of at most {} of {} candidate terms matches within radius {}",
                self.config.depth,
                pool.len(),
                self.config.radius
            ),
            explored,
        )
    }

    /// Composes the witness and compares it with the generator modulo inner
    /// automorphisms within the configured radius.
    pub fn verify(&self, gen: &LaurenceGenerator, result: &RoutingResult) -> bool {
        let Ok(target) = realize_laurence(self.g, gen) else {
            return false;
        };
        self.verify_against(&target, result)
    }

    pub fn verify_against(&self, target: &Automorphism, result: &RoutingResult) -> bool {
        let RoutingResult::Witness { terms, .. } = result else {
            return false;
        };
        let Ok(composed) = compose_terms(self.g, self.fh, terms) else {
            return false;
        };
        crate::generators::check_homomorphism(self.g, &composed)
            && matches!(
                equal_modulo_inner_in(self.g, &composed, target, &self.ball),
                InnerEquality::InnerWitness(_)
            )
    }
}

fn single(e: &Hyperedge, kind: Aut1Kind) -> RoutingResult {
    RoutingResult::Witness {
        terms: vec![WitnessTerm::aut1(Aut1Generator {
            hyperedge: e.id,
            kind,
        })],
        hyperedge: e.id,
        radius: 0,
    }
}

fn failed(diagnostic: String, explored: usize) -> RoutingResult {
    RoutingResult::SearchFailed {
        diagnostic,
        explored,
    }
}

/// Visits sequences by increasing length, then lexicographically, passing
/// the composition `p[s0] ∘ p[s1] ∘ …`. Stops when the visitor returns true.
fn for_each_sequence(
    g: &SimpleGraph,
    pool: &[Automorphism],
    depth: usize,
    visit: &mut dyn FnMut(&[usize], &Automorphism) -> bool,
) {
    fn go(
        g: &SimpleGraph,
        pool: &[Automorphism],
        remaining: usize,
        seq: &mut Vec<usize>,
        acc: &Automorphism,
        visit: &mut dyn FnMut(&[usize], &Automorphism) -> bool,
    ) -> bool {
        if remaining == 0 {
            return visit(seq, acc);
        }
        for (i, p) in pool.iter().enumerate() {
            seq.push(i);
            let next = compose_unchecked(g, acc, p);
            let stop = go(g, pool, remaining - 1, seq, &next, visit);
            seq.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let id = Automorphism::identity(g.len());
    for len in 0..=depth {
        if go(g, pool, len, &mut Vec::new(), &id, visit) {
            return;
        }
    }
}

pub fn compose_terms(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    terms: &[WitnessTerm],
) -> Result<Automorphism> {
    let mut acc = Automorphism::identity(g.len());
    for t in terms {
        acc = compose_unchecked(g, &acc, &t.realize(g, fh)?);
    }
    Ok(acc)
}

pub fn route_laurence_generator(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    gen: &LaurenceGenerator,
    config: SearchConfig,
) -> RoutingResult {
    Router::new(g, fh, config).route(gen)
}

pub fn verify_witness(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    gen: &LaurenceGenerator,
    result: &RoutingResult,
    radius: usize,
) -> bool {
    Router::new(g, fh, SearchConfig { radius, depth: 0 }).verify(gen, result)
}

/// The quotient group attached to `e` is non-abelian.
pub fn kernel_check_applies(e: &Hyperedge) -> bool {
    !e.kind.is_abelian()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelEvidence {
    pub killed: String,
    /// Quotient image of the forward image of the killed generator.
    pub forward_image: String,
    /// Quotient image of the backward image of the killed generator.
    pub backward_image: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub hyperedge: usize,
    pub generator: Aut1Generator,
    pub kernel_preserved: bool,
    pub evidence: Vec<KernelEvidence>,
    pub induced_bijective: bool,
}

/// Checks that `gen` maps the kernel of the quotient attached to `e` into
/// itself (in both directions) and that the induced maps on the quotient are
/// mutually inverse.
pub fn verify_kernel_preservation(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    e: &Hyperedge,
    gen: &Aut1Generator,
) -> Result<KernelReport> {
    if !kernel_check_applies(e) {
        return Err(Error::WrongHyperedgeKind {
            hyperedge: e.id,
            kind: e.kind.name().to_string(),
            expected: "a non-abelian quotient",
        });
    }
    let aut = realize_aut1(g, fh, gen)?;
    Ok(kernel_check_with(
        g,
        &Quotient::for_hyperedge(g, fh, e),
        e,
        gen,
        &aut,
    ))
}

pub(crate) fn kernel_check_with(
    g: &SimpleGraph,
    q: &Quotient,
    e: &Hyperedge,
    gen: &Aut1Generator,
    aut: &Automorphism,
) -> KernelReport {
    let inv = aut.inverse();
    let evidence: Vec<KernelEvidence> = (0..g.len())
        .filter(|&x| !q.survives(x))
        .map(|x| KernelEvidence {
            killed: g.label(x).to_string(),
            forward_image: q
                .map(aut.forward(x).letters())
                .display(&q.graph)
                .to_string(),
            backward_image: q
                .map(aut.backward(x).letters())
                .display(&q.graph)
                .to_string(),
        })
        .collect();
    let kernel_preserved = evidence
        .iter()
        .all(|k| k.forward_image.is_empty() && k.backward_image.is_empty());
    let induced = |first: &Automorphism, second: &Automorphism, y: usize| {
        let image = q.lift(&q.map(first.forward(y).letters()));
        let back = q.lift(&q.map(apply_unchecked(g, second, &image).letters()));
        back == [Letter::pos(y)]
    };
    let induced_bijective = (0..g.len())
        .filter(|&y| q.survives(y))
        .all(|y| induced(aut, &inv, y) && induced(&inv, aut, y));
    KernelReport {
        hyperedge: e.id,
        generator: *gen,
        kernel_preserved,
        evidence,
        induced_bijective,
    }
}

/// All hyperedges satisfying the hypothesis, each against every generator of every hyperedge.
pub fn verify_kernel_preservation_all(
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
) -> Result<Vec<KernelReport>> {
    let gens = enumerate_aut1_generators(g, fh);
    let realized: Vec<Automorphism> = gens
        .iter()
        .map(|x| realize_aut1(g, fh, x))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for e in fh.hyperedges.iter().filter(|e| kernel_check_applies(e)) {
        let q = Quotient::for_hyperedge(g, fh, e);
        for (gen, aut) in gens.iter().zip(&realized) {
            out.push(kernel_check_with(g, &q, e, gen, aut));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::build_flags_hypergraph;
    use crate::generators::enumerate_laurence_generators;
    use crate::graph::VertexSet;

    fn ids(g: &SimpleGraph, r: &RoutingResult) -> Vec<String> {
        match r {
            RoutingResult::Witness { terms, .. } => terms.iter().map(|t| t.describe(g)).collect(),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn routing_examples() {
        let p3 = SimpleGraph::path(3);
        let fh = build_flags_hypergraph(&p3).unwrap();
        let cfg = SearchConfig::default();
        let ac = LaurenceGenerator::Transvection { v: 0, w: 2 };
        let r = route_laurence_generator(&p3, &fh, &ac, cfg);
        assert_eq!(ids(&p3, &r), ["E1:class-transvect(a,c,right,+)"]);
        assert!(verify_witness(&p3, &fh, &ac, &r, 0));

        let ab = LaurenceGenerator::Transvection { v: 0, w: 1 };
        let r = route_laurence_generator(&p3, &fh, &ab, cfg);
        assert_eq!(ids(&p3, &r), ["E1:center-transvect(a,b)"]);
        assert!(verify_witness(&p3, &fh, &ab, &r, 0));

        let p4 = SimpleGraph::path(4);
        let fh4 = build_flags_hypergraph(&p4).unwrap();
        let ac = LaurenceGenerator::Transvection { v: 0, w: 2 };
        let r = route_laurence_generator(&p4, &fh4, &ac, cfg);
        assert_eq!(ids(&p4, &r), ["E2:factor-transvect(a,c,right,+)"]);
        assert!(verify_witness(&p4, &fh4, &ac, &r, 2));
    }

    #[test]
    fn wrong_witness_rejected() {
        let p3 = SimpleGraph::path(3);
        let fh = build_flags_hypergraph(&p3).unwrap();
        let r = route_laurence_generator(
            &p3,
            &fh,
            &LaurenceGenerator::Transvection { v: 0, w: 2 },
            SearchConfig::default(),
        );
        assert!(!verify_witness(
            &p3,
            &fh,
            &LaurenceGenerator::Transvection { v: 2, w: 0 },
            &r,
            4
        ));
        let empty = RoutingResult::Witness {
            terms: vec![],
            hyperedge: 0,
            radius: 0,
        };
        let id = LaurenceGenerator::Symmetry {
            permutation: vec![0, 1, 2],
        };
        assert!(verify_witness(&p3, &fh, &id, &empty, 0));
        assert!(!verify_witness(
            &p3,
            &fh,
            &id,
            &RoutingResult::SymmetryResidue,
            4
        ));
    }

    #[test]
    fn partial_conjugations_route() {
        for g in [
            SimpleGraph::path(3),
            SimpleGraph::path(4),
            SimpleGraph::cycle(4),
            SimpleGraph::cycle(5),
        ] {
            let fh = build_flags_hypergraph(&g).unwrap();
            let router = Router::new(&g, &fh, SearchConfig::default());
            for gen in enumerate_laurence_generators(&g).unwrap() {
                let r = router.route(&gen);
                if matches!(gen, LaurenceGenerator::Symmetry { .. }) {
                    assert_eq!(r, RoutingResult::SymmetryResidue);
                    continue;
                }
                assert!(router.verify(&gen, &r), "{} -> {r:?}", gen.id(&g));
                let inverse = realize_laurence(&g, &gen).unwrap().inverse();
                assert!(
                    router.verify_against(&inverse, &r.inverted(&g)),
                    "{}",
                    gen.id(&g)
                );
            }
        }
    }

    #[test]
    fn c4_class_member_conjugation() {
        let c4 = SimpleGraph::cycle(4);
        let fh = build_flags_hypergraph(&c4).unwrap();
        let pc = LaurenceGenerator::PartialConjugation {
            v: 0,
            component: VertexSet::singleton(2),
        };
        let r = route_laurence_generator(&c4, &fh, &pc, SearchConfig::default());
        assert_eq!(ids(&c4, &r).len(), 2);
    }

    #[test]
    fn routing_is_deterministic() {
        let g = SimpleGraph::path(4);
        let fh = build_flags_hypergraph(&g).unwrap();
        let gens = enumerate_laurence_generators(&g).unwrap();
        let run = || {
            gens.iter()
                .map(|x| route_laurence_generator(&g, &fh, x, SearchConfig::default()))
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn kernel_preservation_examples() {
        let p3 = SimpleGraph::path(3);
        let fh = build_flags_hypergraph(&p3).unwrap();
        let e = fh.hyperedges[1].clone();
        let ct = Aut1Generator {
            hyperedge: 1,
            kind: Aut1Kind::CenterTransvection { v: 0, z: 1 },
        };
        let rep = verify_kernel_preservation(&p3, &fh, &e, &ct).unwrap();
        assert!(rep.kernel_preserved && rep.induced_bijective);
        assert_eq!(rep.evidence.len(), 1);
        assert_eq!(rep.evidence[0].killed, "b");
        assert!(verify_kernel_preservation(&p3, &fh, &fh.hyperedges[0], &ct).is_err());

        let p4 = SimpleGraph::path(4);
        let fh = build_flags_hypergraph(&p4).unwrap();
        let ea = fh.hyperedge_of_vertex(0).clone();
        let ed = fh.hyperedge_of_vertex(3);
        let dc = Aut1Generator {
            hyperedge: ed.id,
            kind: Aut1Kind::FactorTransvection {
                v: 3,
                w: 1,
                side: Side::Right,
                inverse: false,
            },
        };
        let rep = verify_kernel_preservation(&p4, &fh, &ea, &dc).unwrap();
        assert!(rep.kernel_preserved && rep.induced_bijective);
        let dc = Aut1Generator {
            hyperedge: ed.id,
            kind: Aut1Kind::CenterTransvection { v: 3, z: 2 },
        };
        let rep = verify_kernel_preservation(&p4, &fh, &ea, &dc).unwrap();
        assert!(rep.kernel_preserved && rep.induced_bijective);
    }

    #[test]
    fn kernel_preservation_all_small() {
        let star = SimpleGraph::from_label_edges([("b", "a"), ("b", "c"), ("b", "d")]).unwrap();
        for g in [
            SimpleGraph::path(4),
            SimpleGraph::path(5),
            SimpleGraph::cycle(4),
            star,
        ] {
            let fh = build_flags_hypergraph(&g).unwrap();
            let reports = verify_kernel_preservation_all(&g, &fh).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(
                    r.kernel_preserved && r.induced_bijective,
                    "{} E{}: {} {r:?}",
                    g.to_edge_list(),
                    r.hyperedge,
                    r.generator.id(&g)
                );
            }
        }
    }
}

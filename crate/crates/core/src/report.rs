//! Per-graph verification runs and their structured documents.
//!
//! Documents carry no timings or host data, so identical inputs serialize to
//! identical bytes.

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusGraph;
use crate::decomposition::{build_graph_of_groups, check_edge_stabilizers_trivial, Quotient};
use crate::error::{Error, Result};
use crate::factor::{
    kernel_check_applies, verify_kernel_preservation_all, KernelEvidence, Router, RoutingResult,
    SearchConfig,
};
use crate::flags::{build_flags_hypergraph, FlagsHypergraph};
use crate::generators::{
    check_homomorphism, compose_unchecked, enumerate_aut1_generators,
    enumerate_laurence_generators, realize_aut1, realize_laurence, Automorphism,
};
use crate::graph::{SimpleGraph, VertexSet};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoutingRecord {
    pub generator: String,
    pub kind: &'static str,
    /// `witness`, `symmetry-residue` or `search-failed`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperedge: Option<usize>,
    pub terms: Vec<String>,
    /// Length of the inner correction in the witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    pub verified: bool,
    /// The formally inverted witness verifies against the inverse generator.
    pub inverse_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl RoutingRecord {
    pub fn is_failure(&self) -> bool {
        self.status != "symmetry-residue" && !(self.verified && self.inverse_verified)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub graph: String,
    pub config: SearchConfig,
    pub records: Vec<RoutingRecord>,
    pub verified: usize,
    pub symmetry_residues: usize,
    pub failures: usize,
}

/// Routes and verifies every classical generator of `g`.
pub fn factor_report(
    name: &str,
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    config: SearchConfig,
) -> Result<FactorReport> {
    let gens = enumerate_laurence_generators(g)?;
    let router = Router::new(g, fh, config);
    let records: Vec<RoutingRecord> = gens
        .par_iter()
        .map(|gen| {
            let result = router.route(gen);
            let base = RoutingRecord {
                generator: gen.id(g),
                kind: gen.kind_name(),
                status: "search-failed",
                hyperedge: None,
                terms: Vec::new(),
                radius: None,
                verified: false,
                inverse_verified: false,
                diagnostic: None,
            };
            match &result {
                RoutingResult::SymmetryResidue => RoutingRecord {
                    status: "symmetry-residue",
                    ..base
                },
                RoutingResult::SearchFailed {
                    diagnostic,
                    explored,
                } => RoutingRecord {
                    diagnostic: Some(format!("{diagnostic} (explored {explored})")),
                    ..base
                },
                RoutingResult::Witness {
                    terms,
                    hyperedge,
                    radius,
                } => {
                    let target = realize_laurence(g, gen).expect("enumerated generators realize");
                    RoutingRecord {
                        status: "witness",
                        hyperedge: Some(*hyperedge),
                        terms: terms.iter().map(|t| t.describe(g)).collect(),
                        radius: Some(*radius),
                        verified: router.verify_against(&target, &result),
                        inverse_verified: router
                            .verify_against(&target.inverse(), &result.inverted(g)),
                        ..base
                    }
                }
            }
        })
        .collect();
    Ok(FactorReport {
        graph: name.to_string(),
        config,
        verified: records
            .iter()
            .filter(|r| r.status == "witness" && !r.is_failure())
            .count(),
        symmetry_residues: records
            .iter()
            .filter(|r| r.status == "symmetry-residue")
            .count(),
        failures: records.iter().filter(|r| r.is_failure()).count(),
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelRecord {
    pub hyperedge: usize,
    pub generator: String,
    pub kernel_preserved: bool,
    pub induced_bijective: bool,
    pub evidence: Vec<KernelEvidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verify15Report {
    pub graph: String,
    /// Hyperedges whose quotient is non-abelian.
    pub checked_hyperedges: Vec<usize>,
    pub excluded_hyperedges: Vec<usize>,
    pub checks: usize,
    pub failures: usize,
    /// Every check when requested, otherwise only failing ones.
    pub records: Vec<KernelRecord>,
}

pub fn verify15_report(
    name: &str,
    g: &SimpleGraph,
    fh: &FlagsHypergraph,
    all_records: bool,
) -> Result<Verify15Report> {
    let reports = verify_kernel_preservation_all(g, fh)?;
    let (checked, excluded): (Vec<_>, Vec<_>) = fh
        .hyperedges
        .iter()
        .map(|e| e.id)
        .partition(|&id| kernel_check_applies(&fh.hyperedges[id]));
    let failures = reports
        .iter()
        .filter(|r| !(r.kernel_preserved && r.induced_bijective))
        .count();
    let records = reports
        .iter()
        .filter(|r| all_records || !(r.kernel_preserved && r.induced_bijective))
        .map(|r| KernelRecord {
            hyperedge: r.hyperedge,
            generator: r.generator.id(g),
            kernel_preserved: r.kernel_preserved,
            induced_bijective: r.induced_bijective,
            evidence: r.evidence.clone(),
        })
        .collect();
    Ok(Verify15Report {
        graph: name.to_string(),
        checked_hyperedges: checked,
        excluded_hyperedges: excluded,
        checks: reports.len(),
        failures,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub laurence: usize,
    pub aut1: usize,
    /// Ids of generators that fail validation or whose inverse does not compose to the identity.
    pub invalid: Vec<String>,
}

fn valid(g: &SimpleGraph, a: &Automorphism) -> bool {
    check_homomorphism(g, a)
        && compose_unchecked(g, a, &a.inverse()).is_identity()
        && compose_unchecked(g, &a.inverse(), a).is_identity()
}

pub fn generator_validity(g: &SimpleGraph, fh: &FlagsHypergraph) -> Result<ValidityReport> {
    let laurence = enumerate_laurence_generators(g)?;
    let aut1 = enumerate_aut1_generators(g, fh);
    let mut invalid = Vec::new();
    for gen in &laurence {
        if !realize_laurence(g, gen).is_ok_and(|a| valid(g, &a)) {
            invalid.push(gen.id(g));
        }
    }
    for gen in &aut1 {
        if !realize_aut1(g, fh, gen).is_ok_and(|a| valid(g, &a)) {
            invalid.push(gen.id(g));
        }
    }
    Ok(ValidityReport {
        laurence: laurence.len(),
        aut1: aut1.len(),
        invalid,
    })
}

/// Every decomposition has trivial edge groups, and the quotient's defining
/// graph splits into exactly the top-class part and the outside components.
pub fn decompositions_consistent(g: &SimpleGraph, fh: &FlagsHypergraph) -> bool {
    fh.hyperedges.iter().all(|e| {
        let gog = build_graph_of_groups(g, fh, e);
        let q = Quotient::for_hyperedge(g, fh, e);
        let lift = |s: VertexSet| -> VertexSet { s.iter().map(|v| q.original[v]).collect() };
        let mut actual: Vec<u64> = q
            .graph
            .components()
            .into_iter()
            .map(|c| lift(c).bits())
            .collect();
        let top = fh.top(e);
        let mut expected: Vec<u64> = if top.members.len() > 1 && !top.kind.is_clique() {
            top.members
                .iter()
                .map(|v| VertexSet::singleton(v).bits())
                .collect()
        } else {
            vec![top.members.bits()]
        };
        let (components, isolated) = g.components_outside_star(top);
        expected.extend(components.iter().map(|c| c.bits()));
        expected.extend(isolated.iter().map(|&v| VertexSet::singleton(v).bits()));
        actual.sort_unstable();
        expected.sort_unstable();
        check_edge_stabilizers_trivial(&gog) && actual == expected
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub vertices: usize,
    pub edges: Vec<[String; 2]>,
    pub hyperedge_kinds: Vec<&'static str>,
    pub laurence_generators: usize,
    pub aut1_generators: usize,
    pub invalid_generators: Vec<String>,
    pub verified: usize,
    pub symmetry_residues: usize,
    pub max_witness_radius: usize,
    pub max_witness_length: usize,
    pub routing_failures: Vec<RoutingRecord>,
    pub kernel_checks: usize,
    pub kernel_failures: Vec<KernelRecord>,
    pub decompositions_consistent: bool,
    pub failures: usize,
}

pub fn summarize_graph(name: &str, g: &SimpleGraph, config: SearchConfig) -> Result<GraphSummary> {
    let fh = build_flags_hypergraph(g)?;
    let validity = generator_validity(g, &fh)?;
    let factor = factor_report(name, g, &fh, config)?;
    let v15 = verify15_report(name, g, &fh, false)?;
    let consistent = decompositions_consistent(g, &fh);
    let witnesses = factor.records.iter().filter(|r| r.status == "witness");
    let failures =
        validity.invalid.len() + factor.failures + v15.failures + usize::from(!consistent);
    Ok(GraphSummary {
        name: name.to_string(),
        vertices: g.len(),
        edges: g.to_document().edges,
        hyperedge_kinds: fh.hyperedges.iter().map(|e| e.kind.name()).collect(),
        laurence_generators: validity.laurence,
        aut1_generators: validity.aut1,
        invalid_generators: validity.invalid,
        verified: factor.verified,
        symmetry_residues: factor.symmetry_residues,
        max_witness_radius: witnesses
            .clone()
            .filter_map(|r| r.radius)
            .max()
            .unwrap_or(0),
        max_witness_length: witnesses.map(|r| r.terms.len()).max().unwrap_or(0),
        routing_failures: factor
            .records
            .into_iter()
            .filter(|r| r.is_failure())
            .collect(),
        kernel_checks: v15.checks,
        kernel_failures: v15.records,
        decompositions_consistent: consistent,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub laurence_generators: usize,
    pub aut1_generators: usize,
    pub invalid_generators: usize,
    pub verified: usize,
    pub symmetry_residues: usize,
    pub routing_failures: usize,
    pub max_witness_radius: usize,
    pub max_witness_length: usize,
    pub kernel_checks: usize,
    pub kernel_failures: usize,
    pub inconsistent_decompositions: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub min_n: usize,
    pub max_n: usize,
    #[serde(flatten)]
    pub search: SearchConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: CorpusConfig,
    pub summary: CorpusSummary,
    pub graphs: Vec<GraphSummary>,
}

/// Runs every check on every graph, on `jobs` threads (0: rayon's default).
/// The result does not depend on `jobs`.
pub fn corpus_report(
    graphs: &[CorpusGraph],
    config: CorpusConfig,
    jobs: usize,
) -> Result<CorpusReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?;
    let mut summaries: Vec<GraphSummary> = pool.install(|| {
        graphs
            .par_iter()
            .map(|c| summarize_graph(&c.name, &c.graph, config.search))
            .collect::<Result<_>>()
    })?;
    summaries.sort_by(|a, b| a.name.cmp(&b.name));
    let sum = |f: fn(&GraphSummary) -> usize| summaries.iter().map(f).sum::<usize>();
    let summary = CorpusSummary {
        graphs: summaries.len(),
        laurence_generators: sum(|s| s.laurence_generators),
        aut1_generators: sum(|s| s.aut1_generators),
        invalid_generators: sum(|s| s.invalid_generators.len()),
        verified: sum(|s| s.verified),
        symmetry_residues: sum(|s| s.symmetry_residues),
        routing_failures: sum(|s| s.routing_failures.len()),
        max_witness_radius: summaries
            .iter()
            .map(|s| s.max_witness_radius)
            .max()
            .unwrap_or(0),
        max_witness_length: summaries
            .iter()
            .map(|s| s.max_witness_length)
            .max()
            .unwrap_or(0),
        kernel_checks: sum(|s| s.kernel_checks),
        kernel_failures: sum(|s| s.kernel_failures.len()),
        inconsistent_decompositions: sum(|s| usize::from(!s.decompositions_consistent)),
        failures: sum(|s| s.failures),
    };
    Ok(CorpusReport {
        schema_version: SCHEMA_VERSION,
        command: "corpus",
        config,
        summary,
        graphs: summaries,
    })
}

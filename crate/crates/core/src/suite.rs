//! Seeded random instances and the property checks run on them.
//!
//! Asserted properties must hold on every instance they apply to. Reported
//! properties are tallied only: they monitor statements whose status is open
//! or known to fail.

use std::collections::BTreeMap;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::abstract_elements::{self, ElementTypes};
use crate::io::{Provenance, SemiDecompositionJson};
use crate::morse;
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::semidecomp::SemiDecomposition;
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// Down-sets of a random pre-order.
    RandomPreorder,
    /// Blocks of a random partition.
    RandomDecomposition,
    Singletons,
    /// Down-sets of a random pre-order contained in the specialization order.
    RefiningTopology,
    /// Closures of points.
    PointClosures,
    /// Connected components.
    Components,
}

const KINDS: [InstanceKind; 6] = [
    InstanceKind::RandomPreorder,
    InstanceKind::RandomDecomposition,
    InstanceKind::Singletons,
    InstanceKind::RefiningTopology,
    InstanceKind::PointClosures,
    InstanceKind::Components,
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: u64,
    pub max_points: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, count: 500, max_points: 8 }
    }
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_relation(rng: &mut ChaCha8Rng, n: usize, p: f64, allowed: Option<&Relation>) -> Relation {
    let mut rel = Relation::identity(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && allowed.is_none_or(|a| a.contains(x, y)) && rng.gen_bool(p) {
                rel.insert(x, y);
            }
        }
    }
    rel.reflexive_transitive_closure()
}

/// The instance with the given index; fully determined by `(seed, index)`.
/// Kinds cycle with the index.
pub fn generate(seed: u64, index: u64, max_points: usize) -> (InstanceKind, SemiDecomposition) {
    let kind = KINDS[(index % KINDS.len() as u64) as usize];
    (kind, generate_kind(seed, index, max_points, kind))
}

/// An instance of a fixed kind, fully determined by `(seed, index, kind)`.
pub fn generate_kind(seed: u64, index: u64, max_points: usize, kind: InstanceKind) -> SemiDecomposition {
    let mut rng = rng_for(seed, index);
    let n = rng.gen_range(1..=max_points.max(1));
    let ids: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let density = rng.gen_range(0.05..0.45);
    let space = FiniteSpace::with_order(ids, random_relation(&mut rng, n, density, None)).expect("closed relation");
    let down_sets = |order: &Relation| -> Vec<PointSet> { (0..n).map(|y| order.predecessors(y)).collect() };
    let elements = match kind {
        InstanceKind::RandomPreorder => {
            let p = rng.gen_range(0.05..0.4);
            down_sets(&random_relation(&mut rng, n, p, None))
        }
        InstanceKind::RandomDecomposition => {
            let blocks = rng.gen_range(1..=n);
            let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..blocks)).collect();
            (0..n).map(|x| PointSet::from_indices(n, (0..n).filter(|&y| labels[y] == labels[x]))).collect()
        }
        InstanceKind::Singletons => (0..n).map(|x| PointSet::singleton(n, x)).collect(),
        InstanceKind::RefiningTopology => {
            let p = rng.gen_range(0.2..0.8);
            down_sets(&random_relation(&mut rng, n, p, Some(space.order())))
        }
        InstanceKind::PointClosures => (0..n).map(|x| space.down(x).clone()).collect(),
        InstanceKind::Components => {
            let comps = space.connected_components(&space.all_points());
            (0..n).map(|x| comps.iter().find(|c| c.contains(x)).expect("covering").clone()).collect()
        }
    };
    SemiDecomposition::new(space, elements).expect("generated instances satisfy both axioms")
}

/// Properties checked on every instance, in report order.
pub const ASSERTED: &[&str] = &[
    "element_within_class_element_within_closure",
    "class_semidecomposition_valid",
    "class_order_monotone",
    "element_class_within_class_element",
    "decomposition_class_elements_agree",
    "weak_refines_abstract",
    "cases_partition",
    "abstract_classes_single_case",
    "abstract_classes_share_case_data",
    "complement_of_q_proper_and_maximal",
    "cond1_reduction_matches_exhaustive",
    "invariant_cases_saturated",
    "invariant_derived_sets_in_q",
    "invariant_proper_derived_sets_not_maximal",
    "invariant_morse_exists",
    "invariant_morse_exact_partition",
    "invariant_quotient_relation",
    "invariant_pieces_invariant",
    "invariant_decomposition_elements_contain_element",
    "invariant_decomposition_preimage_formula",
    "invariant_decomposition_component_formula",
    "invariant_decomposition_morse_coincide",
    "invariant_decomposition_q_invariant",
];

/// Statements tallied without failing the run.
pub const REPORTED: &[&str] = &[
    "raw_element_relation_transitive",
    "raw_weak_relation_transitive",
    "morse_exists",
    "q_invariant",
    "decomposition_cond2",
    "decomposition_cond3",
];

/// Per-instance verdicts: `Some(true)` holds, `Some(false)` fails, `None`
/// does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub kind: Option<InstanceKind>,
    pub invariant: bool,
    pub decomposition: bool,
    pub verdicts: BTreeMap<&'static str, Option<bool>>,
}

impl InstanceOutcome {
    pub fn asserted_failures(&self) -> Vec<&'static str> {
        ASSERTED.iter().copied().filter(|p| self.verdicts.get(p) == Some(&Some(false))).collect()
    }

    pub fn reported_failures(&self) -> Vec<&'static str> {
        REPORTED.iter().copied().filter(|p| self.verdicts.get(p) == Some(&Some(false))).collect()
    }
}

/// Runs every property on one instance.
pub fn check_instance(f: &SemiDecomposition) -> InstanceOutcome {
    let n = f.len();
    let space = f.space();
    let mut v: BTreeMap<&'static str, Option<bool>> = BTreeMap::new();
    let all = |p: &dyn Fn(usize) -> bool| (0..n).all(p);

    let class_order = f.class_order();
    let tilde: Vec<PointSet> = (0..n).map(|x| class_order.predecessors(x)).collect();
    let hat: Vec<PointSet> = (0..n).map(|x| f.element_class(x)).collect();
    v.insert(
        "element_within_class_element_within_closure",
        Some(all(&|x| f.element(x).is_subset(&tilde[x]) && tilde[x].is_subset(f.element_closure(x)))),
    );
    v.insert("class_semidecomposition_valid", Some(SemiDecomposition::new(space.clone(), tilde.clone()).is_ok()));
    v.insert(
        "class_order_monotone",
        Some(class_order.pairs().all(|(x, z)| f.element_closure(x).is_subset(f.element_closure(z)))),
    );
    v.insert("element_class_within_class_element", Some(all(&|x| hat[x].is_subset(&tilde[x]))));
    let decomposition = f.is_decomposition();
    v.insert("decomposition_class_elements_agree", decomposition.then(|| hat == tilde));

    let types = ElementTypes::homeomorphism(f);
    let cls = f.classify();
    let elements = abstract_elements::abstract_elements_with(f, &cls);
    let weak = abstract_elements::abstract_weak_elements_with(f, &cls, &types);
    v.insert("weak_refines_abstract", Some(weak.refines(&elements)));
    v.insert("cases_partition", Some(cls.is_partition(n)));
    let cases = [&cls.closed, &cls.proper, &cls.residual];
    v.insert(
        "abstract_classes_single_case",
        Some(
            elements.classes.iter().chain(&weak.classes).all(|c| cases.iter().filter(|s| s.intersects(c)).count() == 1),
        ),
    );
    v.insert(
        "abstract_classes_share_case_data",
        Some(elements.classes.iter().all(|c| {
            let x = c.first().expect("classes are non-empty");
            if cls.proper.contains(x) {
                c.iter().all(|y| f.derived_set(y) == f.derived_set(x))
            } else if cls.residual.contains(x) {
                c.iter().all(|y| f.element_closure(y) == f.element_closure(x))
            } else {
                true
            }
        })),
    );
    let q = abstract_elements::quasi_recurrent_with(f, &cls, &elements);
    let max = abstract_elements::maximal_points(f);
    v.insert("complement_of_q_proper_and_maximal", Some(q.complement().is_subset(&cls.proper.intersection(&max))));
    v.insert("cond1_reduction_matches_exhaustive", (n <= 4).then(|| f.cond1_exhaustive() == f.check_invariance().cond1));

    v.insert("raw_element_relation_transitive", Some(elements.raw_relation_transitive));
    v.insert("raw_weak_relation_transitive", Some(weak.raw_relation_transitive));
    let morse = morse::morse_hypergraph_with(f, &elements);
    v.insert("morse_exists", Some(morse.is_ok()));
    v.insert("q_invariant", (!decomposition).then(|| f.is_invariant_set(&q)));
    let report = f.check_invariance();
    v.insert("decomposition_cond2", decomposition.then_some(report.cond2));
    v.insert("decomposition_cond3", decomposition.then_some(report.cond3));

    let invariant = report.overall;
    let when = |b: bool| if invariant { Some(b) } else { None };
    let saturate_hat = |s: &PointSet| s.iter().fold(PointSet::empty(n), |acc, x| acc.union(&hat[x]));
    v.insert("invariant_cases_saturated", when(cases.iter().all(|s| &saturate_hat(s) == *s)));
    let derived_union = (0..n).fold(PointSet::empty(n), |acc, x| acc.union(&f.derived_set(x)));
    v.insert("invariant_derived_sets_in_q", when(derived_union.is_subset(&q)));
    let proper_derived = cls.proper.iter().fold(PointSet::empty(n), |acc, x| acc.union(&f.derived_set(x)));
    v.insert("invariant_proper_derived_sets_not_maximal", when(!proper_derived.intersects(&max)));
    v.insert("invariant_morse_exists", when(morse.is_ok()));
    if let Ok(m) = &morse {
        v.insert("invariant_morse_exact_partition", when(m.is_exact_partition(n)));
        v.insert("invariant_quotient_relation", when(morse::quotient_relation_witness(&elements, m).is_none()));
        v.insert(
            "invariant_pieces_invariant",
            (invariant && f.is_invariant_set(&q)).then(|| morse::pieces_invariant(f, m)),
        );
    }

    let inv_dec = invariant && decomposition;
    let when_dec = |b: bool| if inv_dec { Some(b) } else { None };
    v.insert(
        "invariant_decomposition_elements_contain_element",
        when_dec(all(&|x| {
            let c = elements.class_of_point(x);
            f.element(x).is_subset(c) && f.is_invariant_set(c)
        })),
    );
    if inv_dec {
        let by_preimage = abstract_elements::decomposition_abstract_elements(f).expect("decomposition");
        v.insert("invariant_decomposition_preimage_formula", Some(by_preimage.classes == elements.classes));
        let connected = all(&|x| space.is_connected(f.element(x)));
        v.insert(
            "invariant_decomposition_component_formula",
            connected.then(|| {
                abstract_elements::component_formula_elements(f)
                    .is_some_and(|c| all(&|x| &c[x] == elements.class_of_point(x)))
            }),
        );
        let other = morse::morse_hypergraph_with(f, &by_preimage);
        v.insert("invariant_decomposition_morse_coincide", Some(other == morse));
        v.insert("invariant_decomposition_q_invariant", Some(f.is_invariant_set(&q)));
    }

    InstanceOutcome { kind: None, invariant, decomposition, verdicts: v }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub checked: u64,
    pub failures: u64,
    /// Index of the first failing instance.
    pub first_failure: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub config: SuiteConfig,
    pub instances_by_kind: BTreeMap<InstanceKind, u64>,
    pub invariant_instances: u64,
    pub decomposition_instances: u64,
    pub asserted: BTreeMap<&'static str, PropertyTally>,
    pub reported: BTreeMap<&'static str, PropertyTally>,
    pub asserted_failures: u64,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.asserted_failures == 0
    }
}

/// Runs `count` instances in parallel; the summary depends only on the
/// configuration.
pub fn run_suite(config: &SuiteConfig) -> (SuiteSummary, Vec<(u64, SemiDecomposition, InstanceOutcome)>) {
    let outcomes: Vec<(u64, SemiDecomposition, InstanceOutcome)> = (0..config.count)
        .into_par_iter()
        .map(|i| {
            let (kind, f) = generate(config.seed, i, config.max_points);
            let mut outcome = check_instance(&f);
            outcome.kind = Some(kind);
            (i, f, outcome)
        })
        .collect();

    let mut summary = SuiteSummary {
        config: config.clone(),
        instances_by_kind: BTreeMap::new(),
        invariant_instances: 0,
        decomposition_instances: 0,
        asserted: ASSERTED.iter().map(|&p| (p, PropertyTally::default())).collect(),
        reported: REPORTED.iter().map(|&p| (p, PropertyTally::default())).collect(),
        asserted_failures: 0,
    };
    for (i, _, outcome) in &outcomes {
        *summary.instances_by_kind.entry(outcome.kind.expect("set above")).or_default() += 1;
        summary.invariant_instances += outcome.invariant as u64;
        summary.decomposition_instances += outcome.decomposition as u64;
        for (&name, &verdict) in &outcome.verdicts {
            let tally = match summary.asserted.get_mut(name) {
                Some(t) => t,
                None => summary.reported.get_mut(name).expect("every property is listed"),
            };
            if let Some(ok) = verdict {
                tally.checked += 1;
                if !ok {
                    tally.failures += 1;
                    tally.first_failure.get_or_insert(*i);
                }
            }
        }
    }
    summary.asserted_failures = summary.asserted.values().map(|t| t.failures).sum();
    (summary, outcomes)
}

/// Writes one replayable file per failing (instance, property) pair, for
/// asserted properties and for the reported `morse_exists`. Returns the file
/// names in order.
pub fn persist_counterexamples(
    dir: &Path,
    seed: u64,
    outcomes: &[(u64, SemiDecomposition, InstanceOutcome)],
) -> std::io::Result<Vec<String>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (i, f, outcome) in outcomes {
        let mut props = outcome.asserted_failures();
        if outcome.verdicts.get("morse_exists") == Some(&Some(false)) {
            props.push("morse_exists");
        }
        for p in props {
            let mut json = SemiDecompositionJson::from_semidecomposition(f);
            json.counterexample = Some(Provenance { property: p.to_string(), seed, index: *i });
            let name = format!("{p}-{i}.json");
            let text = serde_json::to_string_pretty(&json).expect("serializable");
            std::fs::write(dir.join(&name), text + "\n")?;
            written.push(name);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn generation_is_deterministic() {
        for i in 0..20 {
            assert_eq!(generate(7, i, 6).1, generate(7, i, 6).1);
        }
        assert_ne!(generate(7, 3, 8).1, generate(8, 3, 8).1);
    }

    #[test]
    fn fixtures_pass_every_asserted_property() {
        for f in [fixtures::arc(), fixtures::semiarc().unwrap(), fixtures::chain().unwrap(), fixtures::fixture_e().unwrap()] {
            assert!(check_instance(&f).asserted_failures().is_empty());
        }
    }

    #[test]
    fn small_suite_is_clean() {
        let (summary, _) = run_suite(&SuiteConfig { seed: 3, count: 60, max_points: 6 });
        assert!(summary.passed(), "{summary:#?}");
        assert_eq!(summary.instances_by_kind.values().sum::<u64>(), 60);
    }

    #[test]
    fn one_point_instances() {
        let (summary, _) = run_suite(&SuiteConfig { seed: 1, count: 12, max_points: 1 });
        assert!(summary.passed());
        assert_eq!(summary.invariant_instances, 12);
    }
}

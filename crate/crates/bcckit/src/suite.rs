//! The property suite behind the verify command.
//!
//! Eleven numbered criteria, each checking one structural property of
//! the toolkit against the whole corpus with independent computation
//! paths on both sides of every equality.  A criterion never trusts
//! another's conclusions; mismatches are collected as replayable failure
//! records rather than panics so a broken property produces a readable
//! report.
//!
//! The per-instance work fans out over a rayon pool.  All sampling is
//! seeded, so two runs of the same corpus spec produce identical reports.

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    classify_matroid, gorenstein_shape, is_ci_complex, is_complete_intersection, link_shape,
    synthesize_ci_order, equivalence_panel, LinkShape, Verdict,
};
use crate::complex::{
    bc_complex, h_from_f, matroid_complex, reduced_bc_complex, ElementOrder, HVector,
};
use crate::constructions::{direct_sum, free_dual_extension, parallel_connection, ConnectionSpec};
use crate::corpus::{
    build_corpus, k4_minor_free, oracle_ci_orders, oracle_h_vector, seeded_rng, CorpusInstance,
    CorpusSpec, OrderBudget, Provenance,
};
use crate::elements::{ElemSet, Element, MAX_GROUND};
use crate::error::Error;
use crate::invariants::{
    beta, component_count_from_h, deletion_contraction_h_check, h_polynomial_tutte,
};
use crate::matroid::Matroid;
use crate::orlik_terao::{generic_arrangement, graphic_arrangement, ot_classification};

/// One corpus instance that violated a property, with enough context to
/// rerun it by hand.
#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub instance: String,
    pub detail: String,
    pub replay: serde_json::Value,
}

impl FailureRecord {
    fn new(instance: &str, detail: String, m: &Matroid) -> FailureRecord {
        FailureRecord {
            instance: instance.to_string(),
            detail,
            replay: serde_json::to_value(m.to_json()).unwrap_or(serde_json::Value::Null),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: String,
    /// Units checked: matroids, (matroid, order) pairs, or constructions,
    /// depending on the criterion.
    pub instances: usize,
    pub passed: bool,
    pub elapsed_ms: u64,
    pub failures: Vec<FailureRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub corpus_size: usize,
    pub outcomes: Vec<CriterionOutcome>,
    pub all_passed: bool,
    pub total_failures: usize,
}

/// Runs every criterion over the corpus described by `spec`.  `jobs` pins
/// the worker count; `inject_fault` deliberately corrupts one comparison
/// so the reporting path itself can be exercised end to end.
pub fn run_suite(
    spec: &CorpusSpec,
    jobs: Option<usize>,
    inject_fault: bool,
) -> Result<SuiteReport, Error> {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(format!("worker pool: {e}")))?
            .install(|| run_all(spec, inject_fault)),
        None => run_all(spec, inject_fault),
    }
}

fn timed(f: impl FnOnce() -> Result<CriterionOutcome, Error>) -> Result<CriterionOutcome, Error> {
    let start = std::time::Instant::now();
    let mut o = f()?;
    o.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(o)
}

fn run_all(spec: &CorpusSpec, inject_fault: bool) -> Result<SuiteReport, Error> {
    let corpus = build_corpus(spec)?;
    let budget = &spec.order_budget;
    let outcomes = vec![
        timed(|| c1_order_invariance(&corpus, budget))?,
        timed(|| c2_tutte_vs_face_counts(&corpus, inject_fault))?,
        timed(|| c3_h_vector_identities(&corpus))?,
        timed(|| c4_six_condition_panel(&corpus, budget))?,
        timed(|| c5_symmetry_and_synthesis(&corpus, budget))?,
        timed(|| c6_arrangements(&corpus, budget))?,
        timed(|| c7_link_shapes(&corpus, budget))?,
        timed(|| c8_link_vertex_comparison(&corpus, budget))?,
        timed(|| c9_symmetry_under_connections(&corpus))?,
        timed(|| c10_reduced_complex_bridge(&corpus))?,
        timed(|| c11_series_parallel_triple(&corpus))?,
    ];
    let total_failures = outcomes.iter().map(|o| o.failures.len()).sum();
    Ok(SuiteReport {
        corpus_size: corpus.len(),
        all_passed: total_failures == 0,
        total_failures,
        outcomes,
    })
}

fn outcome(id: usize, name: &str, instances: usize, failures: Vec<FailureRecord>) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name: name.to_string(),
        instances,
        passed: failures.is_empty(),
        elapsed_ms: 0,
        failures,
    }
}

/// All orderings below the exhaustive threshold, a seeded sample above it.
fn orders_for(ground: ElemSet, budget: &OrderBudget, salt: u64) -> Vec<ElementOrder> {
    let ids = ground.ids();
    if ids.len() < budget.exhaustive_below {
        let mut all = Vec::new();
        crate::util::for_each_permutation_lex(&ids, &mut |p| {
            all.push(ElementOrder::from_ids(p).expect("permuted ids stay distinct"));
            true
        });
        all
    } else {
        let mut rng = seeded_rng(salt);
        (0..budget.sample_count)
            .map(|_| {
                let mut v = ids.clone();
                v.shuffle(&mut rng);
                ElementOrder::from_ids(&v).expect("shuffled ids stay distinct")
            })
            .collect()
    }
}

fn salt_for(index: usize) -> u64 {
    0x5EED ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn truncate(h: &HVector) -> Vec<i64> {
    match h.0.iter().rposition(|&x| x != 0) {
        Some(last) => h.0[..=last].to_vec(),
        None => Vec::new(),
    }
}

fn last_two_of(h: &HVector) -> Result<bool, Error> {
    crate::classify::last_two_symmetric(&h.0)
}

/// Aggregates per-instance work running on the rayon pool.
fn fan_out<F>(corpus: &[CorpusInstance], f: F) -> Result<(usize, Vec<FailureRecord>), Error>
where
    F: Fn(usize, &CorpusInstance) -> Result<(usize, Vec<FailureRecord>), Error> + Sync,
{
    let parts: Result<Vec<(usize, Vec<FailureRecord>)>, Error> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, inst)| f(i, inst))
        .collect();
    let mut count = 0;
    let mut failures = Vec::new();
    for (c, mut fs) in parts? {
        count += c;
        failures.append(&mut fs);
    }
    Ok((count, failures))
}

/// Criterion 1: the h-vector computed by face counting is the same under
/// every ordering of the ground set.
fn c1_order_invariance(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |i, inst| {
        let m = &inst.matroid;
        let r = m.rank_full();
        let mut checked = 0;
        let mut fails = Vec::new();
        let mut reference: Option<HVector> = None;
        for ord in orders_for(m.ground(), budget, salt_for(i)) {
            let delta = bc_complex(m, &ord)?;
            let h = h_from_f(&delta.f_vector()?, r);
            checked += 1;
            match &reference {
                None => reference = Some(h),
                Some(first) if *first == h => {}
                Some(first) => {
                    fails.push(FailureRecord::new(
                        &inst.name,
                        format!(
                            "h depends on the order: {:?} vs {:?} under {:?}",
                            first.0,
                            h.0,
                            ord.ids()
                        ),
                        m,
                    ));
                }
            }
        }
        Ok((checked, fails))
    })?;
    Ok(outcome(1, "order-invariance of the h-vector", count, failures))
}

/// Criterion 2: the Tutte specialization and the subset-counting oracle
/// compute the same h-vector.
fn c2_tutte_vs_face_counts(
    corpus: &[CorpusInstance],
    inject_fault: bool,
) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |i, inst| {
        let m = &inst.matroid;
        let mut tutte = h_polynomial_tutte(m)?.h_vector();
        if inject_fault && i == 0 {
            tutte.0[0] += 1;
        }
        let oracle = oracle_h_vector(m)?;
        let fails = if tutte == oracle {
            Vec::new()
        } else {
            vec![FailureRecord::new(
                &inst.name,
                format!("tutte route {:?} vs face counting {:?}", tutte.0, oracle.0),
                m,
            )]
        };
        Ok((1, fails))
    })?;
    Ok(outcome(
        2,
        "Tutte specialization equals face counting",
        count,
        failures,
    ))
}

/// Criterion 3: the classical h-vector identities: boundary entries, the
/// direct-sum product, component counting, the deletion-contraction
/// recurrence with its connectivity consequences, and partial-sum
/// dominance for graphic instances.
fn c3_h_vector_identities(corpus: &[CorpusInstance]) -> Result<CriterionOutcome, Error> {
    let (count, mut failures) = fan_out(corpus, |_, inst| {
        let m = &inst.matroid;
        if !m.is_simple() {
            return Ok((0, Vec::new()));
        }
        let mut fails = Vec::new();
        let n = m.size() as i64;
        let r = m.rank_full();
        let h = h_polynomial_tutte(m)?.h_vector();
        let mut push = |detail: String| fails.push(FailureRecord::new(&inst.name, detail, m));

        // (i) boundary entries
        if h.0[0] != 1 {
            push(format!("h_0 = {} instead of 1", h.0[0]));
        }
        if r >= 1 {
            if h.0[1] != n - r as i64 {
                push(format!("h_1 = {} instead of n - r = {}", h.0[1], n - r as i64));
            }
            let b = beta(m)?;
            if h.0[r - 1] != b {
                push(format!("h_(r-1) = {} but beta = {b}", h.0[r - 1]));
            }
            if h.0[r] != 0 {
                push(format!("h_r = {} instead of 0", h.0[r]));
            }
            // (iii) component count from the h-vector
            let from_h = component_count_from_h(&h, r)?;
            let actual = m.components().len();
            if from_h != actual {
                push(format!("h-vector sees {from_h} components, matroid has {actual}"));
            }
            if (b > 0) != m.is_connected() {
                push(format!("beta = {b} disagrees with connectivity"));
            }
        }

        // (iv) recurrence and connectivity consequences
        for e in m.ground_elems() {
            if m.is_coloop(e) {
                continue;
            }
            if !deletion_contraction_h_check(m, e)? {
                push(format!("h recurrence fails at element {e}"));
            }
            if m.is_connected() && r >= 1 {
                let del_connected = m.delete(e)?.is_connected();
                let con_connected = m.contract(e)?.simplify().0.is_connected();
                if !del_connected && !con_connected {
                    push(format!("neither deletion nor contraction at {e} is connected"));
                }
                if beta(m)? == 1 && del_connected == con_connected {
                    push(format!(
                        "beta = 1 but deletion and contraction at {e} are both {}",
                        if del_connected { "connected" } else { "separable" }
                    ));
                }
            }
        }

        // (v) partial-sum dominance for representable instances
        if matches!(
            inst.provenance,
            Provenance::Graph(_) | Provenance::SeriesParallel(_)
        ) {
            let t = truncate(&h);
            let s = t.len() - 1;
            let mut front = 0i64;
            let mut back = 0i64;
            for i in 0..=s {
                front += t[i];
                back += t[s - i];
                if front > back {
                    push(format!("partial sums cross at index {i}: {front} > {back}"));
                }
            }
        }
        Ok((1, fails))
    })?;

    // (ii) direct sums from corpus pairs, h multiplies exactly
    let mut sums = 0;
    'outer: for a in corpus.iter().filter(|x| x.matroid.is_simple()) {
        for b in corpus.iter().filter(|x| x.matroid.is_simple()) {
            if a.matroid.size() + b.matroid.size() > MAX_GROUND {
                continue;
            }
            let shifted = shift_matroid(&b.matroid, &a.matroid)?;
            let sum = direct_sum(&a.matroid, &shifted)?;
            let lhs = h_polynomial_tutte(&sum)?.poly();
            let rhs = &h_polynomial_tutte(&a.matroid)?.poly() * &h_polynomial_tutte(&shifted)?.poly();
            if lhs != rhs {
                failures.push(FailureRecord::new(
                    &format!("{}+{}", a.name, b.name),
                    "direct sum h-polynomial is not the product".to_string(),
                    &sum,
                ));
            }
            sums += 1;
            if sums >= 100 {
                break 'outer;
            }
        }
    }
    Ok(outcome(
        3,
        "h-vector identities and recurrence",
        count + sums,
        failures,
    ))
}

/// Relabels `b` onto fresh ids above everything `a` uses.
fn shift_matroid(b: &Matroid, a: &Matroid) -> Result<Matroid, Error> {
    let base = a.ground().ids().into_iter().max().unwrap_or(0) + 1;
    let map: std::collections::BTreeMap<Element, Element> = b
        .ground_elems()
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, Element(base + k as u32)))
        .collect();
    b.relabeled(&map)
}

/// Criterion 4: the six equivalent conditions evaluate identically on
/// every (matroid, order) pair small enough to sweep, and at least ten
/// thousand pairs get swept.
fn c4_six_condition_panel(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let (pairs, mut failures) = fan_out(corpus, |_, inst| {
        let m = &inst.matroid;
        if m.size() >= budget.exhaustive_below {
            return Ok((0, Vec::new()));
        }
        let mut checked = 0;
        let mut fails = Vec::new();
        for ord in orders_for(m.ground(), budget, 0) {
            let panel = equivalence_panel(m, &ord)?;
            checked += 1;
            if !panel.unanimous() {
                fails.push(FailureRecord::new(
                    &inst.name,
                    format!("panel split {:?} under {:?}", panel.as_array(), ord.ids()),
                    m,
                ));
            }
        }
        Ok((checked, fails))
    })?;
    if pairs < 10_000 {
        failures.push(FailureRecord {
            instance: "corpus".to_string(),
            detail: format!("only {pairs} pairs swept, need at least 10000"),
            replay: serde_json::Value::Null,
        });
    }
    Ok(outcome(4, "six-condition panel agreement", pairs, failures))
}

/// Criterion 5: full symmetry, outer-pair symmetry, decomposability, and
/// order synthesis agree on every matroid, extended by the exhaustive
/// order oracle on small instances, with the three fixed anchors pinned.
fn c5_symmetry_and_synthesis(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let (count, mut failures) = fan_out(corpus, |_, inst| {
        let m = &inst.matroid;
        let mut fails = Vec::new();
        let report = classify_matroid(m)?;
        let bits = [
            report.dehn_sommerville,
            report.last_two,
            report.decomposition.is_some(),
            report.ci_order.is_some(),
        ];
        if bits.iter().any(|&b| b != bits[0]) {
            fails.push(FailureRecord::new(
                &inst.name,
                format!(
                    "symmetry/decomposition/synthesis split: ds={} last_two={} tree={} order={}",
                    bits[0], bits[1], bits[2], bits[3]
                ),
                m,
            ));
        }
        let simple = if m.is_simple() { m.clone() } else { m.simplify().0 };
        if simple.size() < budget.exhaustive_below {
            let any_order = !oracle_ci_orders(&simple)?.is_empty();
            if any_order != report.last_two {
                fails.push(FailureRecord::new(
                    &inst.name,
                    format!(
                        "exhaustive sweep finds a disjoint order: {any_order}, h symmetry says {}",
                        report.last_two
                    ),
                    m,
                ));
            }
        }
        Ok((1, fails))
    })?;

    let mut anchors = 0;
    for m in 2..=5usize {
        let u = Matroid::uniform(m, m + 1)?;
        let report = classify_matroid(&u)?;
        anchors += 1;
        if report.h != vec![1; m] || report.verdict != Verdict::CiAndGorenstein {
            failures.push(FailureRecord::new(
                &format!("anchor-u{m}{}", m + 1),
                format!("expected all-ones h and a positive verdict, got {:?}", report.h),
                &u,
            ));
        }
    }
    let k4 = Matroid::graphic(crate::graph::complete_graph(4))?;
    let report = classify_matroid(&k4)?;
    let sweeps = oracle_ci_orders(&k4)?;
    anchors += 1;
    if report.h != vec![1, 3, 2] || report.verdict != Verdict::Neither || !sweeps.is_empty() {
        failures.push(FailureRecord::new(
            "anchor-k4",
            format!(
                "expected h (1,3,2), negative verdict, empty sweep; got {:?} and {} orders",
                report.h,
                sweeps.len()
            ),
            &k4,
        ));
    }
    let left = Matroid::uniform_on(2, ElemSet::from_ids(&[1, 2, 3])?)?;
    let right = Matroid::uniform_on(2, ElemSet::from_ids(&[3, 4, 5])?)?;
    let glued = parallel_connection(&ConnectionSpec::new(left, right, Element(3))?)?;
    let report = classify_matroid(&glued)?;
    let order = synthesize_ci_order(&glued)?;
    anchors += 1;
    let order_ok = match &order {
        Some(ord) => is_complete_intersection(&glued, ord)?,
        None => false,
    };
    if report.h != vec![1, 2, 1] || !order_ok {
        failures.push(FailureRecord::new(
            "anchor-glued-triangles",
            format!("expected h (1,2,1) with a working order, got {:?}", report.h),
            &glued,
        ));
    }
    Ok(outcome(
        5,
        "symmetry, decomposition, and order synthesis",
        count + anchors,
        failures,
    ))
}

/// Criterion 6: arrangement relations vanish exactly, their lead terms are
/// the broken circuit monomials under every ordering tried, and the
/// algebra verdict matches an independently computed h-symmetry.
fn c6_arrangements(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let mut arrangements = Vec::new();
    for inst in corpus {
        if let Provenance::Graph(g) = &inst.provenance {
            arrangements.push((format!("incidence-{}", inst.name), graphic_arrangement(g)?));
        }
    }
    for (r, n) in [(2usize, 4usize), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)] {
        arrangements.push((format!("generic-{r}-{n}"), generic_arrangement(r, n)?));
    }

    let parts: Result<Vec<(usize, Vec<FailureRecord>)>, Error> = arrangements
        .par_iter()
        .enumerate()
        .map(|(i, (name, a))| {
            let m = a.underlying_matroid()?;
            let mut fails = Vec::new();
            let mut checked = 0;

            let relations: Vec<_> = m
                .circuits()
                .into_iter()
                .map(|c| a.circuit_relation(c))
                .collect::<Result<_, _>>()?;
            for rel in &relations {
                checked += 1;
                if !rel.satisfied_by(a) {
                    fails.push(FailureRecord::new(
                        name,
                        format!("relation on {:?} does not vanish", rel.circuit()),
                        &m,
                    ));
                }
            }
            for ord in orders_for(m.ground(), budget, salt_for(i)) {
                checked += 1;
                if !a.lead_term_check(&ord)? {
                    fails.push(FailureRecord::new(
                        name,
                        format!("lead term mismatch under {:?}", ord.ids()),
                        &m,
                    ));
                }
            }

            let verdict = ot_classification(a)?.report.verdict;
            let simple = if m.is_simple() { m.clone() } else { m.simplify().0 };
            let independent = last_two_of(&oracle_h_vector(&simple)?)?;
            checked += 1;
            if (verdict == Verdict::CiAndGorenstein) != independent {
                fails.push(FailureRecord::new(
                    name,
                    format!("verdict {verdict:?} against independent h symmetry {independent}"),
                    &m,
                ));
            }
            Ok((checked, fails))
        })
        .collect();
    let mut count = 0;
    let mut failures = Vec::new();
    for (c, mut fs) in parts? {
        count += c;
        failures.append(&mut fs);
    }
    if arrangements.len() < 10 {
        failures.push(FailureRecord {
            instance: "corpus".to_string(),
            detail: format!("only {} arrangements built, need 10", arrangements.len()),
            replay: serde_json::Value::Null,
        });
    }
    Ok(outcome(
        6,
        "arrangement relations and verdicts",
        count,
        failures,
    ))
}

/// Criterion 7: one-dimensional links of broken circuit complexes are
/// never large polygons, and a one-dimensional broken circuit complex is
/// never a long path.
fn c7_link_shapes(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |i, inst| {
        let m = &inst.matroid;
        let mut checked = 0;
        let mut fails = Vec::new();
        for ord in orders_for(m.ground(), budget, salt_for(i)) {
            let delta = bc_complex(m, &ord)?;
            if delta.dim() == Some(1) {
                if let LinkShape::Path(v) = link_shape(&delta)? {
                    if v >= 4 {
                        fails.push(FailureRecord::new(
                            &inst.name,
                            format!("the complex itself is a {v}-vertex path under {:?}", ord.ids()),
                            m,
                        ));
                    }
                }
            }
            for face in delta.faces() {
                let link = delta.link(face)?;
                if link.dim() != Some(1) {
                    continue;
                }
                checked += 1;
                if let LinkShape::NGon(v) = link_shape(&link)? {
                    if v >= 5 {
                        fails.push(FailureRecord::new(
                            &inst.name,
                            format!(
                                "link of {face} is a {v}-gon under {:?}",
                                ord.ids()
                            ),
                            m,
                        ));
                    }
                }
            }
        }
        Ok((checked, fails))
    })?;
    Ok(outcome(7, "one-dimensional link shapes", count, failures))
}

/// Criterion 8: at every face of a broken circuit complex, some surviving
/// link vertex precedes every vertex that the matroid complex link has
/// and the broken circuit link lost.
fn c8_link_vertex_comparison(
    corpus: &[CorpusInstance],
    budget: &OrderBudget,
) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |_, inst| {
        let m = &inst.matroid;
        if m.size() >= budget.exhaustive_below {
            return Ok((0, Vec::new()));
        }
        let sigma = matroid_complex(m);
        let mut checked = 0;
        let mut fails = Vec::new();
        for ord in orders_for(m.ground(), budget, 0) {
            let delta = bc_complex(m, &ord)?;
            for face in delta.faces() {
                let v1 = delta.link(face)?.vertices();
                let v2 = sigma.link(face)?.vertices();
                let lost = v2.difference(v1);
                if lost.is_empty() {
                    continue;
                }
                checked += 1;
                let witness = ord.min_of(v1);
                let bound = ord.min_of(lost).expect("nonempty set has a minimum");
                let ok = witness.is_some_and(|u| ord.precedes(u, bound));
                if !ok {
                    fails.push(FailureRecord::new(
                        &inst.name,
                        format!(
                            "no surviving vertex before {bound} at face {face} under {:?}",
                            ord.ids()
                        ),
                        m,
                    ));
                }
            }
        }
        Ok((checked, fails))
    })?;
    Ok(outcome(8, "link vertex comparison", count, failures))
}

/// Criterion 9: outer-pair symmetry passes to and from direct sums and
/// parallel connections, 100 of each built from corpus parts.
fn c9_symmetry_under_connections(corpus: &[CorpusInstance]) -> Result<CriterionOutcome, Error> {
    let simple: Vec<&CorpusInstance> = corpus
        .iter()
        .filter(|inst| inst.matroid.is_simple() && inst.matroid.rank_full() >= 1)
        .collect();
    let mut count = 0;
    let mut failures = Vec::new();

    let mut sums = 0;
    'sums: for a in &simple {
        for b in &simple {
            if a.matroid.size() + b.matroid.size() > MAX_GROUND {
                continue;
            }
            let shifted = shift_matroid(&b.matroid, &a.matroid)?;
            let sum = direct_sum(&a.matroid, &shifted)?;
            let whole = last_two_of(&h_polynomial_tutte(&sum)?.h_vector())?;
            let parts = last_two_of(&h_polynomial_tutte(&a.matroid)?.h_vector())?
                && last_two_of(&h_polynomial_tutte(&shifted)?.h_vector())?;
            count += 1;
            if whole != parts {
                failures.push(FailureRecord::new(
                    &format!("{}+{}", a.name, b.name),
                    format!("sum symmetry {whole} but parts give {parts}"),
                    &sum,
                ));
            }
            sums += 1;
            if sums >= 100 {
                break 'sums;
            }
        }
    }

    let mut glued = 0;
    'glue: for a in &simple {
        let Some(base) = a.matroid.circuits().first().and_then(|c| c.min_elem()) else {
            continue;
        };
        for b in &simple {
            if a.matroid.size() + b.matroid.size() - 1 > MAX_GROUND {
                continue;
            }
            let Some(attach) = b.matroid.circuits().first().and_then(|c| c.min_elem()) else {
                continue;
            };
            // relabel b so its attachment element lands on the basepoint
            // and everything else is fresh
            let fresh = a.matroid.ground().ids().into_iter().max().unwrap_or(0) + 1;
            let mut next = fresh;
            let map: std::collections::BTreeMap<Element, Element> = b
                .matroid
                .ground_elems()
                .iter()
                .map(|&e| {
                    if e == attach {
                        (e, base)
                    } else {
                        let to = Element(next);
                        next += 1;
                        (e, to)
                    }
                })
                .collect();
            let shifted = b.matroid.relabeled(&map)?;
            let spec = ConnectionSpec::new(a.matroid.clone(), shifted.clone(), base)?;
            let connection = parallel_connection(&spec)?;
            let whole = last_two_of(&h_polynomial_tutte(&connection)?.h_vector())?;
            let parts = last_two_of(&h_polynomial_tutte(&a.matroid)?.h_vector())?
                && last_two_of(&h_polynomial_tutte(&shifted)?.h_vector())?;
            count += 1;
            if whole != parts {
                failures.push(FailureRecord::new(
                    &format!("{}|{}", a.name, b.name),
                    format!("connection symmetry {whole} but parts give {parts}"),
                    &connection,
                ));
            }
            glued += 1;
            if glued >= 100 {
                break 'glue;
            }
        }
    }
    if sums < 100 || glued < 100 {
        failures.push(FailureRecord {
            instance: "corpus".to_string(),
            detail: format!("built {sums} sums and {glued} connections, need 100 of each"),
            replay: serde_json::Value::Null,
        });
    }
    Ok(outcome(
        9,
        "symmetry under sum and parallel connection",
        count,
        failures,
    ))
}

/// Criterion 10: the matroid complex is the reduced broken circuit complex
/// of the free dual extension under the order that puts the fresh element
/// first, and the matroid complex's shape verdict matches its non-face
/// verdict.
fn c10_reduced_complex_bridge(corpus: &[CorpusInstance]) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |_, inst| {
        let m = &inst.matroid;
        if m.size() > 6 {
            return Ok((0, Vec::new()));
        }
        let mut fails = Vec::new();
        let sigma = matroid_complex(m);

        let extended = free_dual_extension(m)?;
        let fresh = extended
            .ground()
            .difference(m.ground())
            .min_elem()
            .expect("the extension adds one element");
        let seq: Vec<Element> = std::iter::once(fresh).chain(m.ground().iter()).collect();
        let ord = ElementOrder::new(seq)?;
        let reduced = reduced_bc_complex(&extended, &ord)?;
        if reduced != sigma {
            fails.push(FailureRecord::new(
                &inst.name,
                format!(
                    "reduced complex facets {:?} differ from matroid complex facets {:?}",
                    reduced.facets(),
                    sigma.facets()
                ),
                m,
            ));
        }

        let shape = gorenstein_shape(&sigma, true)?;
        let nonfaces = is_ci_complex(&sigma);
        if shape != nonfaces {
            fails.push(FailureRecord::new(
                &inst.name,
                format!("shape verdict {shape} against non-face verdict {nonfaces}"),
                m,
            ));
        }
        Ok((1, fails))
    })?;
    Ok(outcome(
        10,
        "matroid complex as a reduced broken circuit complex",
        count,
        failures,
    ))
}

/// Criterion 11: on connected graphic instances, beta = 1, freeness from
/// K4 minors, and (for the generated family) the construction trace all
/// point the same way, and the simple ones expose a degree-2 vertex.
fn c11_series_parallel_triple(corpus: &[CorpusInstance]) -> Result<CriterionOutcome, Error> {
    let (count, failures) = fan_out(corpus, |_, inst| {
        let graph = match &inst.provenance {
            Provenance::Graph(g) => g,
            Provenance::SeriesParallel(sp) => &sp.graph,
            _ => return Ok((0, Vec::new())),
        };
        let m = &inst.matroid;
        if !m.is_connected() || m.rank_full() == 0 {
            return Ok((0, Vec::new()));
        }
        let mut fails = Vec::new();
        let b = beta(m)?;
        let minor_free = k4_minor_free(graph);
        if (b == 1) != minor_free {
            fails.push(FailureRecord::new(
                &inst.name,
                format!("beta = {b} but K4-minor-free = {minor_free}"),
                m,
            ));
        }
        if let Provenance::SeriesParallel(_) = &inst.provenance {
            // the trace is the constructive witness; both predicates must confirm it
            if b != 1 || !minor_free {
                fails.push(FailureRecord::new(
                    &inst.name,
                    format!("traced construction with beta = {b}, minor-free = {minor_free}"),
                    m,
                ));
            }
        }
        if b == 1 && graph.is_simple() && graph.edge_count() >= 2 {
            if !graph.degrees().iter().any(|&d| d == 2) {
                fails.push(FailureRecord::new(
                    &inst.name,
                    "simple series-parallel graph without a degree-2 vertex".to_string(),
                    m,
                ));
            }
        }
        Ok((1, fails))
    })?;
    Ok(outcome(11, "series-parallel triple agreement", count, failures))
}

//! Instance generators and the brute-force oracles that back the test
//! suites.
//!
//! Everything downstream is checked against two independent computation
//! paths, so the oracles here deliberately avoid the clever routes: the
//! h-vector oracle counts faces subset by subset and expands the binomial
//! transform as literal polynomial arithmetic, and the order oracle tries
//! every permutation.  Slow and obviously correct is the point.
//!
//! Randomized families use ChaCha8 seeded with a fixed integer, so streams
//! are reproducible bit for bit; see the README for the algorithm note.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::HVector;
use crate::constructions::{parallel_connection, ConnectionSpec};
use crate::elements::{ElemSet, Element, MAX_GROUND};
use crate::error::Error;
use crate::graph::Multigraph;
use crate::matroid::Matroid;

/// Which instance families to build and how hard to sweep orderings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graphs: Option<GraphFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform: Option<UniformFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sp_random: Option<SpFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallel_um: Option<ParallelUmFamily>,
    #[serde(default = "OrderBudget::default")]
    pub order_budget: OrderBudget,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFamily {
    pub max_vertices: usize,
    pub max_edges: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniformFamily {
    pub max_n: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpFamily {
    pub count: usize,
    pub max_size: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParallelUmFamily {
    pub count: usize,
    pub max_blocks: usize,
    pub seed: u64,
}

/// Ordering effort per matroid: every permutation below the threshold,
/// a fixed number of samples above it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderBudget {
    pub exhaustive_below: usize,
    pub sample_count: usize,
}

impl Default for OrderBudget {
    fn default() -> Self {
        OrderBudget {
            exhaustive_below: 8,
            sample_count: 20,
        }
    }
}

pub fn default_spec() -> CorpusSpec {
    CorpusSpec {
        graphs: Some(GraphFamily {
            max_vertices: 5,
            max_edges: 8,
        }),
        uniform: Some(UniformFamily { max_n: 6 }),
        sp_random: Some(SpFamily {
            count: 30,
            max_size: 10,
            seed: 0xBC_2024,
        }),
        parallel_um: Some(ParallelUmFamily {
            count: 30,
            max_blocks: 3,
            seed: 0xCE_2024,
        }),
        order_budget: OrderBudget::default(),
    }
}

/// Where an instance came from, kept so family-specific promises stay
/// checkable after the fact.
#[derive(Clone, Debug)]
pub enum Provenance {
    Graph(Multigraph),
    Uniform { m: usize, n: usize },
    SeriesParallel(SpInstance),
    ParallelBlocks { block_sizes: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub name: String,
    pub matroid: Matroid,
    pub provenance: Provenance,
}

/// Builds every requested family, deterministically.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusInstance>, Error> {
    let mut out = Vec::new();
    if let Some(g) = &spec.graphs {
        for (i, graph) in gen_graphic(g.max_vertices, g.max_edges)?.into_iter().enumerate() {
            out.push(CorpusInstance {
                name: format!("graph-{i:03}-v{}e{}", graph.vertices, graph.edge_count()),
                matroid: Matroid::graphic(graph.clone())?,
                provenance: Provenance::Graph(graph),
            });
        }
    }
    if let Some(u) = &spec.uniform {
        for n in 1..=u.max_n {
            for m in 1..=n {
                out.push(CorpusInstance {
                    name: format!("uniform-{m}-{n}"),
                    matroid: Matroid::uniform(m, n)?,
                    provenance: Provenance::Uniform { m, n },
                });
            }
        }
    }
    if let Some(sp) = &spec.sp_random {
        for (i, inst) in gen_sp_random(sp.count, sp.max_size, sp.seed)?.into_iter().enumerate() {
            out.push(CorpusInstance {
                name: format!("sp-{i:03}-e{}", inst.graph.edge_count()),
                matroid: Matroid::graphic(inst.graph.clone())?,
                provenance: Provenance::SeriesParallel(inst),
            });
        }
    }
    if let Some(p) = &spec.parallel_um {
        for (i, (matroid, block_sizes)) in
            gen_parallel_um(p.count, p.max_blocks, p.seed)?.into_iter().enumerate()
        {
            out.push(CorpusInstance {
                name: format!("pum-{i:03}-b{}", block_sizes.len()),
                matroid,
                provenance: Provenance::ParallelBlocks { block_sizes },
            });
        }
    }
    Ok(out)
}

/// All connected simple graphs with 3..=max_v vertices and at most max_e
/// edges, one per isomorphism class.
pub fn gen_graphic(max_v: usize, max_e: usize) -> Result<Vec<Multigraph>, Error> {
    if max_e > MAX_GROUND {
        return Err(Error::CapExceeded(max_e));
    }
    let mut out = Vec::new();
    let mut seen: Vec<Vec<(usize, usize)>> = Vec::new();
    for v in 3..=max_v {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        let total = 1u32 << pairs.len();
        for mask in 0..total {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.len() < v - 1 || edges.len() > max_e {
                continue;
            }
            let g = Multigraph::new(v, edges)?;
            if !g.is_connected() {
                continue;
            }
            let code = g.canonical_code();
            if !seen.contains(&code) {
                seen.push(code);
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// One step of a series-parallel construction applied to an edge index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum SpStep {
    /// Subdivide the edge: series extension.
    Series { edge: usize },
    /// Duplicate the edge: parallel extension.
    Parallel { edge: usize },
}

/// A graph built from the two-element circuit by recorded steps.  The
/// trace is the constructive witness that the matroid is series-parallel.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpInstance {
    pub graph: Multigraph,
    pub steps: Vec<SpStep>,
}

/// Replays a trace from the double edge, for checking that an instance is
/// what its trace claims.
pub fn replay_sp_trace(steps: &[SpStep]) -> Result<Multigraph, Error> {
    let mut g = Multigraph::new(2, vec![(0, 1), (0, 1)])?;
    for &step in steps {
        match step {
            SpStep::Series { edge } => {
                let (u, v) = *g
                    .edges
                    .get(edge)
                    .ok_or_else(|| Error::Schema(format!("trace touches missing edge {edge}")))?;
                let w = g.vertices;
                g.vertices += 1;
                g.edges[edge] = (u, w);
                g.edges.push((w, v));
            }
            SpStep::Parallel { edge } => {
                let (u, v) = *g
                    .edges
                    .get(edge)
                    .ok_or_else(|| Error::Schema(format!("trace touches missing edge {edge}")))?;
                g.edges.push((u, v));
            }
        }
    }
    Ok(g)
}

/// Random series-parallel networks grown from the double edge.  Sizes vary
/// up to max_size edges; the same seed always yields the same stream.
pub fn gen_sp_random(count: usize, max_size: usize, seed: u64) -> Result<Vec<SpInstance>, Error> {
    if max_size > MAX_GROUND {
        return Err(Error::CapExceeded(max_size));
    }
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let target = if max_size <= 2 { 2 } else { rng.gen_range(2..=max_size) };
        let mut steps = Vec::new();
        let mut edge_count = 2usize;
        while edge_count < target {
            let edge = rng.gen_range(0..edge_count);
            let step = if rng.gen_bool(0.5) {
                SpStep::Series { edge }
            } else {
                SpStep::Parallel { edge }
            };
            steps.push(step);
            edge_count += 1;
        }
        let graph = replay_sp_trace(&steps)?;
        out.push(SpInstance { graph, steps });
    }
    Ok(out)
}

/// Random iterated parallel connections of uniform blocks U_{m,m+1},
/// m between 2 and 4, glued at randomly chosen basepoints.  Returns each
/// matroid with its block sizes.
pub fn gen_parallel_um(
    count: usize,
    max_blocks: usize,
    seed: u64,
) -> Result<Vec<(Matroid, Vec<usize>)>, Error> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let blocks = rng.gen_range(1..=max_blocks.max(1));
        let m0 = rng.gen_range(2..=4usize);
        let mut sizes = vec![m0 + 1];
        let mut matroid = Matroid::uniform(m0, m0 + 1)?;
        for _ in 1..blocks {
            let m = rng.gen_range(2..=4usize);
            if matroid.size() + m > MAX_GROUND {
                break;
            }
            let ground: Vec<Element> = matroid.ground().iter().collect();
            let basepoint = ground[rng.gen_range(0..ground.len())];
            let next_id = matroid.ground().ids().into_iter().max().unwrap() + 1;
            let fresh: Vec<u32> = (next_id..next_id + m as u32).collect();
            let block_ids: Vec<u32> = std::iter::once(basepoint.0).chain(fresh).collect();
            let block = Matroid::uniform_on(m, ElemSet::from_ids(&block_ids)?)?;
            matroid = parallel_connection(&ConnectionSpec::new(matroid, block, basepoint)?)?;
            sizes.push(m + 1);
        }
        out.push((matroid, sizes));
    }
    Ok(out)
}

/// The seedable generator used for every randomized family.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// No minor isomorphic to K4; for 2-connected simple graphs this is the
/// series-parallel property.
pub fn k4_minor_free(g: &Multigraph) -> bool {
    !g.has_k4_minor()
}

/// h-vector by raw face counting: every subset of the ground set is tested
/// against the broken circuits of the ground order, and the binomial
/// transform is expanded as explicit polynomial multiplication.  Shares no
/// code with the Tutte route or the complex module.
pub fn oracle_h_vector(m: &Matroid) -> Result<HVector, Error> {
    if m.ground_elems().iter().any(|&e| m.is_loop(e)) {
        return Err(Error::LoopPresent);
    }
    let ground: Vec<Element> = m.ground().iter().collect();
    let n = ground.len();
    let r = m.rank_full();
    // broken circuits under the ascending ground order: drop each circuit's
    // smallest element
    let broken: Vec<u64> = m
        .circuits()
        .into_iter()
        .map(|c| {
            let min = c.min_elem().expect("circuits are nonempty");
            c.without(min).mask()
        })
        .collect();
    let mut f = vec![0i64; r + 1];
    for sub in 0u64..1 << n {
        let mask = ground
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0u64, |acc, (_, e)| acc | 1 << e.0);
        if broken.iter().any(|&b| b & mask == b) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size <= r {
            f[size] += 1;
        } else {
            // a face bigger than the rank would mean the complex is not
            // what a broken circuit complex must be
            return Err(Error::Internal(format!(
                "face of size {size} in a rank {r} broken circuit complex"
            )));
        }
    }
    // h(t) = sum_i f_i t^i (1-t)^(r-i), multiplied out longhand
    let mut h = vec![0i64; r + 1];
    for (i, &fi) in f.iter().enumerate() {
        let mut term = vec![0i64; r + 1];
        term[i] = fi;
        for _ in 0..r - i {
            let mut next = vec![0i64; r + 1];
            for (d, &c) in term.iter().enumerate() {
                if c != 0 {
                    next[d] += c;
                    if d + 1 <= r {
                        next[d + 1] -= c;
                    }
                }
            }
            term = next;
        }
        for (d, &c) in term.iter().enumerate() {
            h[d] += c;
        }
    }
    Ok(HVector(h))
}

pub const ORDER_ORACLE_LIMIT: usize = 7;

/// Every ordering of the ground set whose minimal broken circuits are
/// pairwise disjoint, by trying all |E|! permutations.  The broken circuit
/// and minimality computations are local to this function.
pub fn oracle_ci_orders(m: &Matroid) -> Result<Vec<Vec<u32>>, Error> {
    if m.size() > ORDER_ORACLE_LIMIT {
        return Err(Error::SweepTooLarge {
            size: m.size(),
            limit: ORDER_ORACLE_LIMIT,
        });
    }
    let circuits = m.circuits();
    let ids = m.ground().ids();
    let mut hits = Vec::new();
    crate::util::for_each_permutation_lex(&ids, &mut |perm| {
        let pos = |id: u32| perm.iter().position(|&p| p == id).unwrap();
        let mut broken: Vec<ElemSet> = circuits
            .iter()
            .map(|c| {
                let min = c
                    .iter()
                    .min_by_key(|e| pos(e.0))
                    .expect("circuits are nonempty");
                c.without(min)
            })
            .collect();
        broken.sort_by_key(|b| b.len());
        let minimal: Vec<ElemSet> = broken
            .iter()
            .enumerate()
            .filter(|(i, b)| !broken[..*i].iter().any(|a| a.is_subset_of(**b)))
            .map(|(_, &b)| b)
            .collect();
        let mut union = ElemSet::EMPTY;
        let disjoint = minimal.iter().all(|&b| {
            let ok = b.intersection(union).is_empty();
            union = union.union(b);
            ok
        });
        if disjoint {
            hits.push(perm.to_vec());
        }
        true
    });
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::synthesize_ci_order;
    use crate::complex::{bc_complex, ElementOrder};
    use crate::graph::{complete_graph, cycle_graph};
    use crate::invariants::{beta, h_polynomial_tutte};

    /// Golden enumeration counts, frozen on first run.
    const GOLDEN: &str = include_str!("../data/graphic_counts.json");

    #[test]
    fn graphic_enumeration_matches_the_golden_counts() {
        let golden: std::collections::BTreeMap<String, usize> =
            serde_json::from_str(GOLDEN).unwrap();
        for (key, &expected) in &golden {
            let (v, e) = key.split_once(',').unwrap();
            let got = gen_graphic(v.parse().unwrap(), e.parse().unwrap())
                .unwrap()
                .len();
            assert_eq!(got, expected, "count drifted at bounds {key}");
        }
    }

    #[test]
    fn smallest_graphs_are_the_path_and_the_triangle() {
        let graphs = gen_graphic(3, 3).unwrap();
        assert_eq!(graphs.len(), 2);
        let mut edge_counts: Vec<usize> = graphs.iter().map(Multigraph::edge_count).collect();
        edge_counts.sort();
        assert_eq!(edge_counts, vec![2, 3]);
    }

    #[test]
    fn k4_shows_up_in_the_four_vertex_family() {
        let graphs = gen_graphic(4, 6).unwrap();
        let k4_code = complete_graph(4).canonical_code();
        assert!(graphs.iter().any(|g| g.canonical_code() == k4_code));
    }

    #[test]
    fn sp_random_is_seed_stable_and_beta_one() {
        let a = gen_sp_random(10, 9, 42).unwrap();
        let b = gen_sp_random(10, 9, 42).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.steps, y.steps);
            assert_eq!(x.graph.edges, y.graph.edges);
        }
        let c = gen_sp_random(10, 9, 43).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.steps != y.steps));
        for inst in &a {
            assert_eq!(replay_sp_trace(&inst.steps).unwrap().edges, inst.graph.edges);
            let m = Matroid::graphic(inst.graph.clone()).unwrap();
            if m.rank_full() >= 1 {
                assert_eq!(beta(&m).unwrap(), 1, "series-parallel network with beta != 1");
            }
            assert!(k4_minor_free(&inst.graph));
        }
    }

    #[test]
    fn sp_simple_instances_have_a_degree_two_vertex() {
        let mut checked = 0;
        for inst in gen_sp_random(40, 10, 7).unwrap() {
            let g = &inst.graph;
            if g.is_simple() && g.edge_count() >= 2 {
                assert!(
                    g.degrees().iter().any(|&d| d == 2),
                    "simple series-parallel graph without a degree-2 vertex"
                );
                checked += 1;
            }
        }
        assert!(checked > 0, "family never produced a simple instance");
    }

    #[test]
    fn parallel_um_instances_classify_positively() {
        let family = gen_parallel_um(12, 3, 5).unwrap();
        assert_eq!(family.len(), 12);
        for (m, sizes) in &family {
            assert!(!sizes.is_empty());
            assert!(m.is_simple());
            assert!(m.is_connected());
            let ord = synthesize_ci_order(m).unwrap();
            assert!(ord.is_some(), "uniform-block glueing must admit an order");
        }
        let again = gen_parallel_um(12, 3, 5).unwrap();
        for ((m1, s1), (m2, s2)) in family.iter().zip(&again) {
            assert!(m1.equals_by_circuits(m2));
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn minor_freedom_matches_known_cases() {
        assert!(!k4_minor_free(&complete_graph(4)));
        assert!(k4_minor_free(&cycle_graph(5)));
        let two_tri = Multigraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 3)]).unwrap();
        assert!(k4_minor_free(&two_tri));
    }

    #[test]
    fn h_oracle_agrees_with_the_tutte_route() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(3, 6).unwrap(),
            Matroid::graphic(complete_graph(4)).unwrap(),
            Matroid::graphic(cycle_graph(5)).unwrap(),
        ] {
            assert_eq!(
                oracle_h_vector(&m).unwrap(),
                h_polynomial_tutte(&m).unwrap().h_vector()
            );
        }
    }

    #[test]
    fn h_oracle_agrees_with_face_counts() {
        let m = Matroid::graphic(complete_graph(4)).unwrap();
        let delta = bc_complex(&m, &ElementOrder::ground_order(m.ground())).unwrap();
        let f = delta.f_vector().unwrap();
        let h = crate::complex::h_from_f(&f, m.rank_full());
        assert_eq!(oracle_h_vector(&m).unwrap(), h);
    }

    #[test]
    fn order_oracle_matches_frozen_counts() {
        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        assert!(oracle_ci_orders(&k4).unwrap().is_empty());

        let two_tri = Matroid::from_circuits_on(
            ElemSet::from_ids(&[1, 2, 3, 4, 5]).unwrap(),
            vec![
                ElemSet::from_ids(&[1, 2, 3]).unwrap(),
                ElemSet::from_ids(&[3, 4, 5]).unwrap(),
                ElemSet::from_ids(&[1, 2, 4, 5]).unwrap(),
            ],
        )
        .unwrap();
        let orders = oracle_ci_orders(&two_tri).unwrap();
        assert!(!orders.is_empty());
        let synthesized = synthesize_ci_order(&two_tri).unwrap().unwrap().ids();
        assert!(orders.contains(&synthesized));

        let big = Matroid::uniform(2, 8).unwrap();
        assert!(matches!(
            oracle_ci_orders(&big),
            Err(Error::SweepTooLarge { .. })
        ));
    }

    #[test]
    fn corpus_builds_all_families() {
        let corpus = build_corpus(&default_spec()).unwrap();
        assert!(corpus.len() > 80, "corpus unexpectedly small: {}", corpus.len());
        let mut kinds = [0usize; 4];
        for inst in &corpus {
            match inst.provenance {
                Provenance::Graph(_) => kinds[0] += 1,
                Provenance::Uniform { .. } => kinds[1] += 1,
                Provenance::SeriesParallel(_) => kinds[2] += 1,
                Provenance::ParallelBlocks { .. } => kinds[3] += 1,
            }
            assert!(inst.matroid.size() <= MAX_GROUND);
        }
        assert!(kinds.iter().all(|&k| k > 0), "family counts {kinds:?}");
    }

    #[test]
    fn corpus_spec_round_trips_through_json() {
        let spec = default_spec();
        let json = serde_json::to_string(&spec).unwrap();
        let back: CorpusSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);

        let partial: CorpusSpec =
            serde_json::from_str(r#"{"uniform":{"max_n":4}}"#).unwrap();
        assert!(partial.graphs.is_none());
        assert_eq!(partial.order_budget.exhaustive_below, 8);
        let built = build_corpus(&partial).unwrap();
        assert_eq!(built.len(), 10);
    }
}

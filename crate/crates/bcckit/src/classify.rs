//! Decision procedures for the Gorenstein and complete intersection
//! questions about broken circuit complexes.
//!
//! Two very different routes arrive at the same verdict.  The shape route
//! inspects the complex itself: its core, the reduced Euler characteristic,
//! and the one-dimensional links, which must be small polygons or short
//! paths.  The arithmetic route inspects the h-vector: symmetry of the
//! truncated h-vector, equivalently symmetry of just its first and last two
//! entries.  The structural route decomposes the matroid into an iterated
//! parallel connection of uniform blocks and, when that succeeds, builds an
//! explicit element order whose minimal broken circuits are pairwise
//! disjoint.  The test suites check that all routes always agree; none of
//! the code here assumes it.

use serde::{Deserialize, Serialize};

use crate::complex::{bc_complex, minimal_broken_circuits, ElementOrder, SimplicialComplex};
use crate::constructions::{parallel_connection, ConnectionSpec};
use crate::elements::{ElemSet, Element};
use crate::error::Error;
use crate::invariants::h_polynomial_tutte;
use crate::matroid::Matroid;
use crate::util::for_each_permutation_lex;

/// What a complex of dimension at most one looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkShape {
    /// Cycle on n >= 3 vertices.
    NGon(usize),
    /// Path on m >= 2 vertices.
    Path(usize),
    Point,
    Empty,
    Other,
}

/// Classifies a complex of dimension <= 1 up to the distinctions the
/// Gorenstein criterion cares about.
pub fn link_shape(delta: &SimplicialComplex) -> Result<LinkShape, Error> {
    let dim = match delta.dim() {
        None => return Ok(LinkShape::Empty),
        Some(-1) => return Ok(LinkShape::Empty),
        Some(d) if d > 1 => return Err(Error::DimensionTooHigh(d)),
        Some(d) => d,
    };
    let vertices: Vec<Element> = delta.vertices().iter().collect();
    if dim == 0 {
        return Ok(if vertices.len() == 1 {
            LinkShape::Point
        } else {
            LinkShape::Other
        });
    }
    let edges: Vec<ElemSet> = delta
        .faces()
        .into_iter()
        .filter(|f| f.len() == 2)
        .collect();
    let degree = |v: Element| edges.iter().filter(|e| e.contains(v)).count();
    if vertices.iter().any(|&v| degree(v) == 0) {
        return Ok(LinkShape::Other);
    }
    // connectivity over the edge set
    let mut reached = ElemSet::singleton(vertices[0]);
    loop {
        let grown = edges
            .iter()
            .filter(|e| !e.intersection(reached).is_empty())
            .fold(reached, |acc, &e| acc.union(e));
        if grown == reached {
            break;
        }
        reached = grown;
    }
    if reached != delta.vertices() {
        return Ok(LinkShape::Other);
    }
    let n = vertices.len();
    if vertices.iter().all(|&v| degree(v) == 2) && n >= 3 && edges.len() == n {
        return Ok(LinkShape::NGon(n));
    }
    if edges.len() == n - 1 && vertices.iter().all(|&v| degree(v) <= 2) {
        return Ok(LinkShape::Path(n));
    }
    Ok(LinkShape::Other)
}

/// Pairwise disjoint minimal non-faces, the combinatorial reading of a
/// complete intersection Stanley-Reisner ideal.
pub fn is_ci_complex(delta: &SimplicialComplex) -> bool {
    pairwise_disjoint(&delta.minimal_nonfaces())
}

fn pairwise_disjoint(sets: &[ElemSet]) -> bool {
    let mut seen = ElemSet::EMPTY;
    for &s in sets {
        if !s.intersection(seen).is_empty() {
            return false;
        }
        seen = seen.union(s);
    }
    true
}

/// Hochster's criterion for Gorensteinness of a Cohen-Macaulay complex:
/// either very small, or the core has the Euler characteristic of a sphere
/// and every one-dimensional link is an n-gon or a path on at most three
/// vertices.
///
/// The criterion is only valid for Cohen-Macaulay complexes, which this
/// function cannot check; the caller must pass `cm_granted = true` to assert
/// it.  Broken circuit complexes and matroid complexes are shellable, so
/// for them the grant is always sound.
pub fn gorenstein_shape(delta: &SimplicialComplex, cm_granted: bool) -> Result<bool, Error> {
    if !cm_granted {
        return Err(Error::CmNotGranted);
    }
    let dim = match delta.dim() {
        // the void complex and {emptyset} both pass as degenerate cases
        None | Some(-1) => return Ok(true),
        Some(d) => d,
    };
    if dim == 0 {
        return Ok(delta.vertices().len() <= 2);
    }
    let core = delta.core();
    let core_dim = core.dim().expect("core of a non-void complex is non-void");
    let sphere_sign = if core_dim.rem_euclid(2) == 0 { 1 } else { -1 };
    if core.reduced_euler() != sphere_sign {
        return Ok(false);
    }
    for face in delta.faces() {
        let link = delta.link(face).expect("faces of the complex have links");
        if link.dim() == Some(1) {
            match link_shape(&link)? {
                LinkShape::NGon(_) => {}
                LinkShape::Path(m) if m <= 3 => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// True when the minimal broken circuits under this order are pairwise
/// disjoint, making the broken circuit complex a complete intersection.
pub fn is_complete_intersection(m: &Matroid, ord: &ElementOrder) -> Result<bool, Error> {
    Ok(pairwise_disjoint(&minimal_broken_circuits(m, ord)?))
}

/// The six equivalent conditions evaluated independently on one broken
/// circuit complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CiPanel {
    pub gorenstein: bool,
    pub locally_gorenstein: bool,
    pub links_gorenstein: bool,
    pub links_ci: bool,
    pub locally_ci: bool,
    pub ci: bool,
}

impl CiPanel {
    pub fn as_array(&self) -> [bool; 6] {
        [
            self.gorenstein,
            self.locally_gorenstein,
            self.links_gorenstein,
            self.links_ci,
            self.locally_ci,
            self.ci,
        ]
    }

    pub fn unanimous(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

/// Evaluates all six conditions on BC(M, ord) separately: Gorenstein,
/// locally Gorenstein, Gorenstein links at one-dimensional link faces,
/// complete intersection links there, locally complete intersection, and
/// complete intersection.  They are provably equivalent; the suites check
/// the panel is always unanimous.
pub fn equivalence_panel(m: &Matroid, ord: &ElementOrder) -> Result<CiPanel, Error> {
    let delta = bc_complex(m, ord)?;
    let gorenstein = gorenstein_shape(&delta, true)?;

    let mut locally_gorenstein = true;
    let mut locally_ci = true;
    for v in delta.vertices().iter() {
        let link = delta.link(ElemSet::singleton(v))?;
        locally_gorenstein &= gorenstein_shape(&link, true)?;
        locally_ci &= is_ci_complex(&link);
    }

    let mut links_gorenstein = true;
    let mut links_ci = true;
    for face in delta.faces() {
        let link = delta.link(face)?;
        if link.dim() == Some(1) {
            links_gorenstein &= gorenstein_shape(&link, true)?;
            links_ci &= matches!(
                link_shape(&link)?,
                LinkShape::NGon(3) | LinkShape::NGon(4) | LinkShape::Path(2) | LinkShape::Path(3)
            );
        }
    }

    let ci = is_complete_intersection(m, ord)?;
    Ok(CiPanel {
        gorenstein,
        locally_gorenstein,
        links_gorenstein,
        links_ci,
        locally_ci,
        ci,
    })
}

fn truncated(h: &[i64]) -> Result<&[i64], Error> {
    match h.iter().rposition(|&x| x != 0) {
        Some(last) => Ok(&h[..=last]),
        None => Err(Error::EmptyHVector),
    }
}

/// Full symmetry h_i = h_{s-i} of the truncated h-vector.
pub fn dehn_sommerville(h: &[i64]) -> Result<bool, Error> {
    let h = truncated(h)?;
    let s = h.len() - 1;
    Ok((0..=s / 2).all(|i| h[i] == h[s - i]))
}

/// Symmetry of just the two outermost pairs: h_0 = h_s and h_1 = h_{s-1}.
pub fn last_two_symmetric(h: &[i64]) -> Result<bool, Error> {
    let h = truncated(h)?;
    let s = h.len() - 1;
    match s {
        0 => Ok(true),
        1 => Ok(h[0] == h[1]),
        _ => Ok(h[0] == h[s] && h[1] == h[s - 1]),
    }
}

/// How a connected simple matroid is assembled from uniform blocks by
/// parallel connection.  Evaluating the tree reproduces the matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "lowercase")]
pub enum DecompositionTree {
    /// U_{m,m+1} on the listed elements; the rank is one less than the size.
    Leaf { elements: ElemSet },
    Coloop { element: Element },
    Parallel {
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
        basepoint: Element,
    },
}

impl DecompositionTree {
    pub fn evaluate(&self) -> Result<Matroid, Error> {
        match self {
            DecompositionTree::Leaf { elements } => {
                Matroid::uniform_on(elements.len() - 1, *elements)
            }
            DecompositionTree::Coloop { element } => {
                Matroid::uniform_on(1, ElemSet::singleton(*element))
            }
            DecompositionTree::Parallel {
                left,
                right,
                basepoint,
            } => {
                let spec = ConnectionSpec::new(left.evaluate()?, right.evaluate()?, *basepoint)?;
                parallel_connection(&spec)
            }
        }
    }

    /// Leaf blocks in left-to-right traversal order.
    fn blocks(&self, out: &mut Vec<ElemSet>) {
        match self {
            DecompositionTree::Leaf { elements } => out.push(*elements),
            DecompositionTree::Coloop { element } => out.push(ElemSet::singleton(*element)),
            DecompositionTree::Parallel { left, right, .. } => {
                left.blocks(out);
                right.blocks(out);
            }
        }
    }
}

/// Splits a connected simple matroid as an iterated parallel connection of
/// uniform matroids U_{m,m+1}, if it is one.
///
/// A matroid is a parallel connection relative to f exactly when the
/// simplification of M/f is separable, so the scan tries each f in ground
/// order and splits off the component class of the first f that works.  The
/// split is verified by reassembling the circuit family before recursing.
/// `None` means some part is parallel irreducible but not uniform, which
/// settles the classification negatively.
pub fn parallel_decompose(m: &Matroid) -> Result<Option<DecompositionTree>, Error> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if m.size() == 1 {
        let e = m.ground().min_elem().unwrap();
        return Ok(Some(DecompositionTree::Coloop { element: e }));
    }
    let circuits = m.circuits();
    if circuits.len() == 1 && circuits[0] == m.ground() && m.size() == m.rank_full() + 1 {
        return Ok(Some(DecompositionTree::Leaf {
            elements: m.ground(),
        }));
    }
    for f in m.ground().iter() {
        let contracted = m.contract(f)?;
        let (simplified, _) = contracted.simplify();
        if simplified.is_connected() {
            continue;
        }
        // lift the component classes of the simplification back through the
        // parallel classes of M/f
        let classes = contracted.parallel_classes();
        let lift = |reps: ElemSet| -> ElemSet {
            reps.iter().fold(ElemSet::EMPTY, |acc, rep| {
                let class = classes
                    .iter()
                    .find(|c| c.contains(rep))
                    .expect("component members are representatives");
                acc.union(*class)
            })
        };
        let mut parts: Vec<ElemSet> = simplified
            .components()
            .into_iter()
            .map(|(reps, _)| lift(reps))
            .collect();
        parts.sort_by_key(|p| p.min_elem().map(|e| e.0));
        let first = parts[0];
        let rest = parts[1..]
            .iter()
            .fold(ElemSet::EMPTY, |acc, &p| acc.union(p));
        let m1 = m.restrict(first.with(f))?;
        let m2 = m.restrict(rest.with(f))?;
        let rebuilt = parallel_connection(&ConnectionSpec::new(m1.clone(), m2.clone(), f)?)?;
        if !rebuilt.equals_by_circuits(m) {
            return Err(Error::Internal(format!(
                "split at {f} does not reassemble the matroid"
            )));
        }
        let left = parallel_decompose(&m1)?;
        let right = parallel_decompose(&m2)?;
        return Ok(match (left, right) {
            (Some(l), Some(r)) => Some(DecompositionTree::Parallel {
                left: Box::new(l),
                right: Box::new(r),
                basepoint: f,
            }),
            _ => None,
        });
    }
    Ok(None)
}

/// Builds an element order from a decomposition tree: the first block in
/// ground order, then repeatedly the next attachable block with its
/// attachment element left in place and the remaining elements appended.
/// Each appended block therefore has its shared element as its order
/// minimum, so its broken circuit avoids the shared element and the minimal
/// broken circuits stay pairwise disjoint.
fn tree_order(tree: &DecompositionTree) -> Vec<Element> {
    let mut blocks = Vec::new();
    tree.blocks(&mut blocks);
    let mut order: Vec<Element> = blocks[0].iter().collect();
    let mut placed = blocks[0];
    let mut used = vec![false; blocks.len()];
    used[0] = true;
    for _ in 1..blocks.len() {
        let next = (0..blocks.len())
            .find(|&i| !used[i] && !blocks[i].intersection(placed).is_empty())
            .expect("the block tree is connected");
        used[next] = true;
        order.extend(blocks[next].difference(placed).iter());
        placed = placed.union(blocks[next]);
    }
    order
}

/// Synthesizes an order whose broken circuit complex is a complete
/// intersection, or reports that none exists.  Works per connected
/// component; a component qualifies when it is a coloop or decomposes into
/// uniform blocks.  The returned order is checked against the minimal
/// broken circuit test before being handed out.
pub fn synthesize_ci_order(m: &Matroid) -> Result<Option<ElementOrder>, Error> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let mut seq: Vec<Element> = Vec::new();
    for (_, component) in m.components() {
        match parallel_decompose(&component)? {
            Some(tree) => seq.extend(tree_order(&tree)),
            None => return Ok(None),
        }
    }
    let ord = ElementOrder::new(seq)?;
    assert!(
        is_complete_intersection(m, &ord)?,
        "synthesized order failed the disjointness check"
    );
    Ok(Some(ord))
}

/// Tally of a sweep over every ordering of the ground set.
#[derive(Clone, Debug, Serialize)]
pub struct OrderSweepReport {
    pub orders_tried: usize,
    pub ci_orders: usize,
    pub lex_least_ci: Option<Vec<u32>>,
}

pub const SWEEP_LIMIT: usize = 7;

/// Tries all |E|! orderings and counts those giving a complete
/// intersection.  Only sensible for tiny ground sets, so sizes above 7 are
/// rejected.
pub fn exhaustive_order_sweep(m: &Matroid) -> Result<OrderSweepReport, Error> {
    if m.size() > SWEEP_LIMIT {
        return Err(Error::SweepTooLarge {
            size: m.size(),
            limit: SWEEP_LIMIT,
        });
    }
    let ids: Vec<u32> = m.ground().ids();
    let mut tried = 0;
    let mut hits = 0;
    let mut witness: Option<Vec<u32>> = None;
    let mut failure: Option<Error> = None;
    for_each_permutation_lex(&ids, &mut |perm| {
        tried += 1;
        let ord = ElementOrder::from_ids(perm).expect("permutation of distinct ids");
        match is_complete_intersection(m, &ord) {
            Ok(true) => {
                hits += 1;
                if witness.is_none() {
                    witness = Some(perm.to_vec());
                }
                true
            }
            Ok(false) => true,
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(OrderSweepReport {
        orders_tried: tried,
        ci_orders: hits,
        lex_least_ci: witness,
    })
}

/// Two-valued because Gorenstein and complete intersection coincide for
/// these complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CiAndGorenstein,
    Neither,
}

/// Everything the classifier can say about one matroid.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    /// Truncated h-vector (h_0, ..., h_s).
    pub h: Vec<i64>,
    pub s: usize,
    pub dehn_sommerville: bool,
    pub last_two: bool,
    pub components: usize,
    /// One tree per connected component when every component decomposes.
    pub decomposition: Option<Vec<DecompositionTree>>,
    pub ci_order: Option<Vec<u32>>,
    pub verdict: Verdict,
    /// Set when the input was not simple and was simplified first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplified: Option<String>,
}

/// Runs the full classification.  Non-simple input is simplified first,
/// with a notice in the report; the broken circuit complex cannot tell the
/// difference.  The equivalence of the arithmetic tests with the
/// decomposition and the synthesized order is asserted, not assumed.
pub fn classify_matroid(m: &Matroid) -> Result<ClassificationReport, Error> {
    let (simple, notice) = if m.is_simple() {
        (m.clone(), None)
    } else {
        let (s, _) = m.simplify();
        let notice = format!(
            "input was not simple; classified its simplification on {} of {} elements",
            s.size(),
            m.size()
        );
        (s, Some(notice))
    };
    let h_full = h_polynomial_tutte(&simple)?.h_vector();
    let h = truncated(&h_full.0)?.to_vec();
    let s = h.len() - 1;
    let ds = dehn_sommerville(&h)?;
    let last_two = last_two_symmetric(&h)?;
    let components = simple.components();

    let mut trees = Vec::new();
    let mut all_decompose = true;
    for (_, component) in &components {
        match parallel_decompose(component)? {
            Some(t) => trees.push(t),
            None => {
                all_decompose = false;
                break;
            }
        }
    }
    let decomposition = if all_decompose { Some(trees) } else { None };
    let ci_order = synthesize_ci_order(&simple)?;

    assert_eq!(
        decomposition.is_some(),
        last_two,
        "decomposability must match h-vector symmetry"
    );
    assert_eq!(
        ci_order.is_some(),
        last_two,
        "order synthesis must match h-vector symmetry"
    );

    let verdict = if last_two {
        Verdict::CiAndGorenstein
    } else {
        Verdict::Neither
    };
    Ok(ClassificationReport {
        h,
        s,
        dehn_sommerville: ds,
        last_two,
        components: components.len(),
        decomposition,
        ci_order: ci_order.map(|o| o.ids()),
        verdict,
        simplified: notice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::matroid_complex;
    use crate::graph::complete_graph;

    fn set(ids: &[u32]) -> ElemSet {
        ElemSet::from_ids(ids).unwrap()
    }

    fn two_triangles() -> Matroid {
        Matroid::from_circuits_on(
            set(&[1, 2, 3, 4, 5]),
            vec![set(&[1, 2, 3]), set(&[3, 4, 5]), set(&[1, 2, 4, 5])],
        )
        .unwrap()
    }

    fn complex_of(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| set(f)).collect())
    }

    #[test]
    fn link_shapes() {
        let square = complex_of(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(link_shape(&square).unwrap(), LinkShape::NGon(4));
        let triangle = complex_of(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(link_shape(&triangle).unwrap(), LinkShape::NGon(3));
        let path3 = complex_of(&[&[1, 2], &[2, 3]]);
        assert_eq!(link_shape(&path3).unwrap(), LinkShape::Path(3));
        let two_edges = complex_of(&[&[1, 2], &[3, 4]]);
        assert_eq!(link_shape(&two_edges).unwrap(), LinkShape::Other);
        let point = complex_of(&[&[5]]);
        assert_eq!(link_shape(&point).unwrap(), LinkShape::Point);
        assert_eq!(
            link_shape(&SimplicialComplex::empty_complex()).unwrap(),
            LinkShape::Empty
        );
        let dangling = complex_of(&[&[1, 2], &[3]]);
        assert_eq!(link_shape(&dangling).unwrap(), LinkShape::Other);
        let solid = complex_of(&[&[1, 2, 3]]);
        assert!(matches!(
            link_shape(&solid),
            Err(Error::DimensionTooHigh(2))
        ));
    }

    #[test]
    fn gorenstein_needs_the_cm_grant() {
        let square = complex_of(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert!(matches!(
            gorenstein_shape(&square, false),
            Err(Error::CmNotGranted)
        ));
        assert!(gorenstein_shape(&square, true).unwrap());
    }

    #[test]
    fn gorenstein_small_cases() {
        assert!(gorenstein_shape(&SimplicialComplex::empty_complex(), true).unwrap());
        assert!(gorenstein_shape(&SimplicialComplex::void(), true).unwrap());
        assert!(gorenstein_shape(&complex_of(&[&[1]]), true).unwrap());
        assert!(gorenstein_shape(&complex_of(&[&[1], &[2]]), true).unwrap());
        assert!(!gorenstein_shape(&complex_of(&[&[1], &[2], &[3]]), true).unwrap());
        // a path on four vertices fails through its core
        let path4 = complex_of(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(!gorenstein_shape(&path4, true).unwrap());
    }

    #[test]
    fn gorenstein_on_broken_circuit_complexes() {
        let m = two_triangles();
        let good = ElementOrder::ground_order(m.ground());
        let delta = bc_complex(&m, &good).unwrap();
        assert!(gorenstein_shape(&delta, true).unwrap());

        let u24 = Matroid::uniform(2, 4).unwrap();
        let delta = bc_complex(&u24, &ElementOrder::ground_order(u24.ground())).unwrap();
        assert!(!gorenstein_shape(&delta, true).unwrap());
    }

    #[test]
    fn ci_depends_on_the_order() {
        let m = two_triangles();
        let good = ElementOrder::ground_order(m.ground());
        assert!(is_complete_intersection(&m, &good).unwrap());
        let bad = ElementOrder::from_ids(&[1, 4, 2, 3, 5]).unwrap();
        assert!(!is_complete_intersection(&m, &bad).unwrap());
    }

    #[test]
    fn u24_has_no_ci_order_at_all() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let sweep = exhaustive_order_sweep(&u24).unwrap();
        assert_eq!(sweep.orders_tried, 24);
        assert_eq!(sweep.ci_orders, 0);
        assert!(sweep.lex_least_ci.is_none());
    }

    #[test]
    fn panels_are_unanimous_and_correct() {
        let m = two_triangles();
        let good = equivalence_panel(&m, &ElementOrder::ground_order(m.ground())).unwrap();
        assert!(good.unanimous());
        assert!(good.ci);

        let bad_order = ElementOrder::from_ids(&[1, 4, 2, 3, 5]).unwrap();
        let bad = equivalence_panel(&m, &bad_order).unwrap();
        assert!(bad.unanimous());
        assert!(!bad.ci);

        let u24 = Matroid::uniform(2, 4).unwrap();
        let panel = equivalence_panel(&u24, &ElementOrder::ground_order(u24.ground())).unwrap();
        assert!(panel.unanimous());
        assert!(!panel.gorenstein);

        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        let panel = equivalence_panel(&k4, &ElementOrder::ground_order(k4.ground())).unwrap();
        assert!(panel.unanimous());
        assert!(!panel.ci);
    }

    #[test]
    fn symmetry_tests() {
        assert!(dehn_sommerville(&[1, 2, 1]).unwrap());
        assert!(last_two_symmetric(&[1, 2, 1]).unwrap());
        assert!(!dehn_sommerville(&[1, 3, 2]).unwrap());
        assert!(!last_two_symmetric(&[1, 3, 2]).unwrap());
        assert!(dehn_sommerville(&[1]).unwrap());
        assert!(last_two_symmetric(&[1]).unwrap());
        assert!(dehn_sommerville(&[1, 1]).unwrap());
        // trailing zeros are trimmed before the symmetry check
        assert!(!dehn_sommerville(&[1, 2, 0]).unwrap());
        assert!(matches!(dehn_sommerville(&[0, 0]), Err(Error::EmptyHVector)));
        // symmetric in the outer pairs without full symmetry
        assert!(last_two_symmetric(&[1, 2, 7, 5, 2, 1]).unwrap());
        assert!(!dehn_sommerville(&[1, 2, 7, 5, 2, 1]).unwrap());
        assert!(dehn_sommerville(&[1, 2, 2, 1]).unwrap());
    }

    #[test]
    fn decompose_uniform_and_coloop() {
        let u34 = Matroid::uniform(3, 4).unwrap();
        assert_eq!(
            parallel_decompose(&u34).unwrap(),
            Some(DecompositionTree::Leaf {
                elements: u34.ground()
            })
        );
        let coloop = Matroid::uniform(1, 1).unwrap();
        assert_eq!(
            parallel_decompose(&coloop).unwrap(),
            Some(DecompositionTree::Coloop {
                element: Element(1)
            })
        );
    }

    #[test]
    fn decompose_two_triangles() {
        let m = two_triangles();
        let tree = parallel_decompose(&m).unwrap().unwrap();
        match &tree {
            DecompositionTree::Parallel {
                left,
                right,
                basepoint,
            } => {
                assert_eq!(*basepoint, Element(3));
                assert_eq!(
                    **left,
                    DecompositionTree::Leaf {
                        elements: set(&[1, 2, 3])
                    }
                );
                assert_eq!(
                    **right,
                    DecompositionTree::Leaf {
                        elements: set(&[3, 4, 5])
                    }
                );
            }
            other => panic!("expected a parallel node, got {other:?}"),
        }
        assert!(tree.evaluate().unwrap().equals_by_circuits(&m));
    }

    #[test]
    fn k4_does_not_decompose() {
        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        assert_eq!(parallel_decompose(&k4).unwrap(), None);
    }

    #[test]
    fn synthesized_orders_pass_their_own_check() {
        let m = two_triangles();
        let ord = synthesize_ci_order(&m).unwrap().unwrap();
        assert!(is_complete_intersection(&m, &ord).unwrap());
        assert!(ord.precedes(Element(3), Element(4)));
        assert!(ord.precedes(Element(3), Element(5)));

        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        assert!(synthesize_ci_order(&k4).unwrap().is_none());
    }

    #[test]
    fn chain_with_interleaved_labels_gets_a_working_order() {
        // triangle blocks {1,3,8}, {3,5,9}, {2,5,10} glued at 3 and 5; a
        // naive left-to-right merge of suborders puts 2 before 5 and breaks
        // the disjointness, so this pins the assembly-order construction
        let m = Matroid::from_circuits_on(
            set(&[1, 2, 3, 5, 8, 9, 10]),
            vec![
                set(&[1, 3, 8]),
                set(&[3, 5, 9]),
                set(&[2, 5, 10]),
                set(&[1, 8, 5, 9]),
                set(&[3, 9, 2, 10]),
                set(&[1, 8, 2, 9, 10]),
            ],
        )
        .unwrap();
        let ord = synthesize_ci_order(&m).unwrap().unwrap();
        assert!(is_complete_intersection(&m, &ord).unwrap());
        assert_eq!(ord.ids(), vec![1, 3, 8, 5, 9, 2, 10]);
    }

    #[test]
    fn disconnected_matroids_synthesize_per_component() {
        let sum = crate::constructions::direct_sum(
            &Matroid::uniform(2, 3).unwrap(),
            &Matroid::uniform_on(1, set(&[9])).unwrap(),
        )
        .unwrap();
        let ord = synthesize_ci_order(&sum).unwrap().unwrap();
        assert!(is_complete_intersection(&sum, &ord).unwrap());
        assert_eq!(ord.ids(), vec![1, 2, 3, 9]);
    }

    #[test]
    fn sweep_finds_orders_for_two_triangles() {
        let m = two_triangles();
        let sweep = exhaustive_order_sweep(&m).unwrap();
        assert_eq!(sweep.orders_tried, 120);
        assert!(sweep.ci_orders > 0);
        assert_eq!(sweep.lex_least_ci, Some(vec![1, 2, 3, 4, 5]));

        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        let sweep = exhaustive_order_sweep(&k4).unwrap();
        assert_eq!(sweep.orders_tried, 720);
        assert_eq!(sweep.ci_orders, 0);

        let big = Matroid::uniform(2, 8).unwrap();
        assert!(matches!(
            exhaustive_order_sweep(&big),
            Err(Error::SweepTooLarge { size: 8, limit: 7 })
        ));
    }

    #[test]
    fn classify_two_triangles() {
        let report = classify_matroid(&two_triangles()).unwrap();
        assert_eq!(report.h, vec![1, 2, 1]);
        assert_eq!(report.s, 2);
        assert!(report.dehn_sommerville);
        assert!(report.last_two);
        assert_eq!(report.components, 1);
        assert!(report.decomposition.is_some());
        assert!(report.ci_order.is_some());
        assert_eq!(report.verdict, Verdict::CiAndGorenstein);
        assert!(report.simplified.is_none());
    }

    #[test]
    fn classify_k4() {
        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        let report = classify_matroid(&k4).unwrap();
        assert_eq!(report.h, vec![1, 3, 2]);
        assert!(!report.dehn_sommerville);
        assert!(!report.last_two);
        assert!(report.decomposition.is_none());
        assert!(report.ci_order.is_none());
        assert_eq!(report.verdict, Verdict::Neither);
    }

    #[test]
    fn classify_uniform_family() {
        for m in 2..=5 {
            let u = Matroid::uniform(m, m + 1).unwrap();
            let report = classify_matroid(&u).unwrap();
            assert_eq!(report.h, vec![1; m]);
            assert_eq!(report.verdict, Verdict::CiAndGorenstein);
        }
    }

    #[test]
    fn classify_simplifies_when_needed() {
        let c2 = Matroid::uniform(1, 2).unwrap();
        let report = classify_matroid(&c2).unwrap();
        assert!(report.simplified.is_some());
        assert_eq!(report.h, vec![1]);
        assert_eq!(report.verdict, Verdict::CiAndGorenstein);
    }

    #[test]
    fn decomposition_tree_serializes() {
        let m = two_triangles();
        let tree = parallel_decompose(&m).unwrap().unwrap();
        let json = serde_json::to_string(&tree).unwrap();
        let back: DecompositionTree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tree);
        assert!(json.contains("\"basepoint\":3"));
    }

    #[test]
    fn matroid_complex_shape_matches_its_nonface_test() {
        // the same equivalence that holds for broken circuit complexes
        // holds for matroid complexes
        for m in [
            Matroid::uniform(2, 3).unwrap(),
            Matroid::uniform(2, 4).unwrap(),
            Matroid::graphic(complete_graph(4)).unwrap(),
            two_triangles(),
        ] {
            let sigma = matroid_complex(&m);
            assert_eq!(
                gorenstein_shape(&sigma, true).unwrap(),
                is_ci_complex(&sigma),
                "shape and nonface verdicts split on {m:?}"
            );
        }
    }
}

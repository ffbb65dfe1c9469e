//! Simplicial complexes and broken circuit complexes.
//!
//! A complex is stored by its facet antichain over a small vertex set.  The
//! void complex (no faces at all) and the empty complex {emptyset} are
//! distinct values: the first has no facets, the second has the single facet
//! emptyset.
//!
//! Given a matroid M without loops and a linear order on its ground set, the
//! broken circuit bc(C) of a circuit C drops the order-minimal element of C.
//! The broken circuit complex has as faces exactly the subsets of the ground
//! set containing no broken circuit.  Its f-vector depends on the order; its
//! h-vector does not, which the test suites check exhaustively at small size.

use serde::{Deserialize, Serialize};

use crate::elements::{ElemSet, Element, MAX_ID};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::util::{binomial, minimalize_antichain};

/// A linear order on a set of elements, listed from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    seq: Vec<Element>,
    pos: [u8; 64],
}

impl ElementOrder {
    pub fn new(seq: Vec<Element>) -> Result<ElementOrder, Error> {
        let mut pos = [u8::MAX; 64];
        for (i, e) in seq.iter().enumerate() {
            if e.0 > MAX_ID {
                return Err(Error::IdTooLarge(e.0));
            }
            if pos[e.0 as usize] != u8::MAX {
                return Err(Error::BadOrdering);
            }
            pos[e.0 as usize] = i as u8;
        }
        Ok(ElementOrder { seq, pos })
    }

    /// Ascending id order on a ground set.
    pub fn ground_order(ground: ElemSet) -> ElementOrder {
        ElementOrder::new(ground.iter().collect()).expect("ground sets have distinct ids")
    }

    pub fn from_ids(ids: &[u32]) -> Result<ElementOrder, Error> {
        ElementOrder::new(ids.iter().map(|&i| Element(i)).collect())
    }

    pub fn is_order_of(&self, ground: ElemSet) -> bool {
        self.seq.len() == ground.len() && self.seq.iter().all(|e| ground.contains(*e))
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.seq
    }

    pub fn position(&self, e: Element) -> usize {
        let p = self.pos[e.0 as usize];
        assert!(p != u8::MAX, "element {e} is not ordered");
        p as usize
    }

    pub fn precedes(&self, a: Element, b: Element) -> bool {
        self.position(a) < self.position(b)
    }

    /// Order-minimal element of a non-empty subset of the ordered elements.
    pub fn min_of(&self, s: ElemSet) -> Option<Element> {
        s.iter().min_by_key(|&e| self.position(e))
    }

    pub fn ids(&self) -> Vec<u32> {
        self.seq.iter().map(|e| e.0).collect()
    }
}

/// Facet antichain over an explicit vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: ElemSet,
    facets: Vec<ElemSet>,
}

/// f-vector indexed by face cardinality, so f[0] counts the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<i64>);

/// h-vector with trailing zeros kept, h[0]..h[r].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    /// h with trailing zeros removed.
    pub fn truncated(&self) -> &[i64] {
        let last = self.0.iter().rposition(|&x| x != 0);
        match last {
            Some(i) => &self.0[..=i],
            None => &[],
        }
    }

    /// Index of the last nonzero entry.
    pub fn s(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x != 0)
    }
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> SimplicialComplex {
        SimplicialComplex {
            vertices: ElemSet::EMPTY,
            facets: Vec::new(),
        }
    }

    /// The complex whose only face is the empty set.
    pub fn empty_complex() -> SimplicialComplex {
        SimplicialComplex {
            vertices: ElemSet::EMPTY,
            facets: vec![ElemSet::EMPTY],
        }
    }

    /// Builds from generating faces; kept facets are the maximal ones and the
    /// vertex set is their union.
    pub fn from_faces(faces: &[ElemSet]) -> SimplicialComplex {
        if faces.is_empty() {
            return SimplicialComplex::void();
        }
        // maximal members: nobody else contains them
        let mut facets: Vec<ElemSet> = Vec::new();
        for &f in faces {
            if faces.iter().any(|&g| f != g && f.is_subset_of(g)) {
                continue;
            }
            facets.push(f);
        }
        facets.sort_by_key(|f| f.mask());
        facets.dedup();
        let vertices = facets
            .iter()
            .fold(ElemSet::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex { vertices, facets }
    }

    pub fn from_facets(facets: Vec<ElemSet>) -> SimplicialComplex {
        SimplicialComplex::from_faces(&facets)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex {emptyset}.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == vec![ElemSet::EMPTY]
    }

    pub fn vertices(&self) -> ElemSet {
        self.vertices
    }

    pub fn facets(&self) -> &[ElemSet] {
        &self.facets
    }

    /// Dimension, None for the void complex.  The empty complex has
    /// dimension -1.
    pub fn dim(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
    }

    pub fn is_face(&self, f: ElemSet) -> bool {
        self.facets.iter().any(|&g| f.is_subset_of(g))
    }

    /// All faces, sorted by cardinality then mask.
    pub fn faces(&self) -> Vec<ElemSet> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &facet in &self.facets {
            // walk the downset of each facet
            let mut stack = vec![facet];
            while let Some(f) = stack.pop() {
                if !seen.insert(f.mask()) {
                    continue;
                }
                out.push(f);
                for e in f.iter() {
                    stack.push(f.without(e));
                }
            }
        }
        out.sort_by_key(|f| (f.len(), f.mask()));
        out
    }

    /// Faces G disjoint from F with F u G a face.
    pub fn link(&self, f: ElemSet) -> Result<SimplicialComplex, Error> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&g| f.is_subset_of(g))
            .map(|&g| g.difference(f))
            .collect();
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Faces G with F u G a face.
    pub fn star(&self, f: ElemSet) -> Result<SimplicialComplex, Error> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&g| f.is_subset_of(g))
            .copied()
            .collect();
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Vertices lying in every facet, the cone apexes.
    pub fn cone_apexes(&self) -> ElemSet {
        self.facets
            .iter()
            .fold(self.vertices, |acc, f| acc.intersection(*f))
    }

    /// Restriction to the vertices that are not cone apexes.
    pub fn core(&self) -> SimplicialComplex {
        let keep = self.vertices.difference(self.cone_apexes());
        self.restrict_to(keep)
    }

    /// Full subcomplex on a vertex subset.
    pub fn restrict_to(&self, keep: ElemSet) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.intersection(keep))
            .collect();
        SimplicialComplex::from_facets(facets)
    }

    /// Face counts by cardinality; errors on the void complex.
    pub fn f_vector(&self) -> Result<FVector, Error> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let top = self.dim().unwrap() + 1;
        let mut f = vec![0i64; top as usize + 1];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        Ok(FVector(f))
    }

    /// h-vector of a complex of dimension r-1, via the standard binomial
    /// transform of the f-vector.
    pub fn h_vector(&self) -> Result<HVector, Error> {
        let f = self.f_vector()?;
        let r = f.0.len() - 1;
        Ok(h_from_f(&f, r))
    }

    /// Reduced Euler characteristic; the empty face contributes -1.
    pub fn reduced_euler(&self) -> i64 {
        let mut chi = 0i64;
        for face in self.faces() {
            if face.len() % 2 == 0 {
                chi -= 1;
            } else {
                chi += 1;
            }
        }
        chi
    }

    /// Inclusion-minimal subsets of the vertex set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<ElemSet> {
        let elems: Vec<Element> = self.vertices.iter().collect();
        let mut found: Vec<ElemSet> = Vec::new();
        for k in 0..=elems.len() {
            let mut fresh = Vec::new();
            crate::util::for_each_subset_of_size(&elems, k, &mut |s| {
                if found.iter().any(|c| c.is_subset_of(s)) {
                    return;
                }
                if !self.is_face(s) {
                    fresh.push(s);
                }
            });
            found.append(&mut fresh);
        }
        found.sort_by_key(|c| c.mask());
        found
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertices.ids(),
            facets: self.facets.iter().map(|f| f.ids()).collect(),
        }
    }
}

/// JSON wire form of a complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

pub fn h_from_f(f: &FVector, r: usize) -> HVector {
    let mut h = vec![0i64; r + 1];
    for (i, hi) in h.iter_mut().enumerate() {
        let mut acc = 0i64;
        for (j, &fj) in f.0.iter().enumerate().take(i + 1) {
            let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial(r - j, i - j) * fj;
        }
        *hi = acc;
    }
    HVector(h)
}

/// Broken circuits bc(C) = C minus its order-minimal element, one per
/// circuit.  Errors when the matroid has a loop, whose broken circuit would
/// be empty.
pub fn broken_circuits(m: &Matroid, ord: &ElementOrder) -> Result<Vec<ElemSet>, Error> {
    if !ord.is_order_of(m.ground()) {
        return Err(Error::BadOrdering);
    }
    if !m.loops().is_empty() {
        return Err(Error::LoopPresent);
    }
    let mut out: Vec<ElemSet> = m
        .circuits()
        .iter()
        .map(|&c| c.without(ord.min_of(c).expect("circuits are non-empty")))
        .collect();
    out.sort_by_key(|c| c.mask());
    out.dedup();
    Ok(out)
}

pub fn minimal_broken_circuits(m: &Matroid, ord: &ElementOrder) -> Result<Vec<ElemSet>, Error> {
    Ok(minimalize_antichain(broken_circuits(m, ord)?))
}

/// The broken circuit complex: subsets of the ground set containing no
/// broken circuit.
pub fn bc_complex(m: &Matroid, ord: &ElementOrder) -> Result<SimplicialComplex, Error> {
    let bcs = minimal_broken_circuits(m, ord)?;
    Ok(complex_avoiding(m.ground(), &bcs))
}

/// Faces of the reduced broken circuit complex: the broken circuit complex
/// restricted away from the global order minimum, over which it cones.
pub fn reduced_bc_complex(m: &Matroid, ord: &ElementOrder) -> Result<SimplicialComplex, Error> {
    let full = bc_complex(m, ord)?;
    match ord.as_slice().first() {
        Some(&apex) => Ok(full.restrict_to(m.ground().without(apex))),
        None => Ok(full),
    }
}

/// Independent sets of a matroid as a complex.
pub fn matroid_complex(m: &Matroid) -> SimplicialComplex {
    complex_avoiding(m.ground(), &m.circuits())
}

/// The complex of subsets of `ground` containing none of the given minimal
/// non-faces.  Faces are grown depth first in ascending element order.
fn complex_avoiding(ground: ElemSet, nonfaces: &[ElemSet]) -> SimplicialComplex {
    let elems: Vec<Element> = ground.iter().collect();
    let mut faces: Vec<ElemSet> = Vec::new();
    let mut stack: Vec<(ElemSet, usize)> = vec![(ElemSet::EMPTY, 0)];
    if nonfaces.iter().any(|b| b.is_empty()) {
        return SimplicialComplex::void();
    }
    while let Some((face, next)) = stack.pop() {
        faces.push(face);
        for i in next..elems.len() {
            let grown = face.with(elems[i]);
            let blocked = nonfaces
                .iter()
                .any(|b| b.contains(elems[i]) && b.is_subset_of(grown));
            if !blocked {
                stack.push((grown, i + 1));
            }
        }
    }
    SimplicialComplex::from_faces(&faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use crate::matroid::Matroid;

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

    #[test]
    fn orders_validate() {
        assert!(ElementOrder::from_ids(&[1, 4, 2, 3, 5]).is_ok());
        assert!(ElementOrder::from_ids(&[1, 1, 2]).is_err());
        let ord = ElementOrder::from_ids(&[2, 0, 1]).unwrap();
        assert_eq!(ord.min_of(set(&[0, 1])), Some(Element(0)));
        assert_eq!(ord.min_of(set(&[0, 2])), Some(Element(2)));
        assert!(ord.precedes(Element(0), Element(1)));
    }

    #[test]
    fn broken_circuits_of_the_triangle() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let ord = ElementOrder::ground_order(u23.ground());
        assert_eq!(broken_circuits(&u23, &ord).unwrap(), vec![set(&[2, 3])]);
    }

    #[test]
    fn broken_circuits_depend_on_the_order() {
        let m = two_triangles();
        let ground = ElementOrder::ground_order(m.ground());
        assert_eq!(
            minimal_broken_circuits(&m, &ground).unwrap(),
            vec![set(&[2, 3]), set(&[4, 5])]
        );
        let other = ElementOrder::from_ids(&[1, 4, 2, 3, 5]).unwrap();
        let mbc = minimal_broken_circuits(&m, &other).unwrap();
        assert_eq!(mbc, vec![set(&[2, 3]), set(&[3, 5]), set(&[2, 4, 5])]);
    }

    #[test]
    fn loops_block_broken_circuits() {
        let loopy = Matroid::from_circuits(2, vec![set(&[0])]).unwrap();
        let ord = ElementOrder::ground_order(loopy.ground());
        assert!(matches!(
            broken_circuits(&loopy, &ord),
            Err(Error::LoopPresent)
        ));
    }

    #[test]
    fn bc_complex_of_the_triangle() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let ord = ElementOrder::ground_order(u23.ground());
        let c = bc_complex(&u23, &ord).unwrap();
        assert_eq!(c.facets(), &[set(&[1, 2]), set(&[1, 3])]);
        assert_eq!(c.f_vector().unwrap().0, vec![1, 3, 2]);
        assert_eq!(c.h_vector().unwrap().0, vec![1, 1, 0]);
        assert_eq!(c.dim(), Some(1));
    }

    #[test]
    fn bc_complex_of_u24() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let ord = ElementOrder::ground_order(u24.ground());
        let c = bc_complex(&u24, &ord).unwrap();
        assert_eq!(c.f_vector().unwrap().0, vec![1, 4, 3]);
        assert_eq!(c.h_vector().unwrap().0, vec![1, 2, 0]);
    }

    #[test]
    fn bc_complex_of_two_triangles() {
        let m = two_triangles();
        let ord = ElementOrder::ground_order(m.ground());
        let c = bc_complex(&m, &ord).unwrap();
        assert_eq!(c.f_vector().unwrap().0, vec![1, 5, 8, 4]);
        assert_eq!(c.h_vector().unwrap().0, vec![1, 2, 1, 0]);
        // pure of dimension rank - 1
        assert!(c.facets().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn h_vector_ignores_the_order_on_small_sweeps() {
        let m = two_triangles();
        let ids: Vec<u32> = m.ground().ids();
        let reference = bc_complex(&m, &ElementOrder::ground_order(m.ground()))
            .unwrap()
            .h_vector()
            .unwrap();
        let mut orders = 0;
        crate::util::for_each_permutation_lex(&ids, &mut |p| {
            let ord = ElementOrder::from_ids(p).unwrap();
            let h = bc_complex(&m, &ord).unwrap().h_vector().unwrap();
            assert_eq!(h, reference, "h drifted under order {p:?}");
            orders += 1;
            true
        });
        assert_eq!(orders, 120);
    }

    #[test]
    fn bc_complex_cones_over_the_reduced_complex() {
        let m = Matroid::graphic(complete_graph(4)).unwrap();
        let ord = ElementOrder::ground_order(m.ground());
        let full = bc_complex(&m, &ord).unwrap();
        let reduced = reduced_bc_complex(&m, &ord).unwrap();
        assert!(full.cone_apexes().contains(Element(0)));
        // f_full(t) = (1 + t) f_reduced(t) coefficientwise
        let f_full = full.f_vector().unwrap().0;
        let f_red = reduced.f_vector().unwrap().0;
        for i in 0..f_full.len() {
            let a = if i < f_red.len() { f_red[i] } else { 0 };
            let b = if i >= 1 && i - 1 < f_red.len() { f_red[i - 1] } else { 0 };
            assert_eq!(f_full[i], a + b);
        }
    }

    #[test]
    fn link_star_core() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let ord = ElementOrder::ground_order(u23.ground());
        let c = bc_complex(&u23, &ord).unwrap();
        let link = c.link(set(&[1])).unwrap();
        assert_eq!(link.facets(), &[set(&[2]), set(&[3])]);
        let star = c.star(set(&[2])).unwrap();
        assert_eq!(star.facets(), &[set(&[1, 2])]);
        assert!(c.link(set(&[2, 3])).is_err());

        // the cone over {2},{3} has core the two points
        let core = c.core();
        assert_eq!(core.vertices(), set(&[2, 3]));
        assert_eq!(core.f_vector().unwrap().0, vec![1, 2]);
        assert_eq!(core.reduced_euler(), 1);
    }

    #[test]
    fn core_of_two_triangle_bc_complex_is_a_square() {
        let m = two_triangles();
        let ord = ElementOrder::ground_order(m.ground());
        let c = bc_complex(&m, &ord).unwrap();
        let core = c.core();
        assert_eq!(core.vertices(), set(&[2, 3, 4, 5]));
        assert_eq!(core.f_vector().unwrap().0, vec![1, 4, 4]);
        assert_eq!(core.reduced_euler(), -1);
        assert_eq!(core.dim(), Some(1));
    }

    #[test]
    fn empty_versus_void() {
        let empty = SimplicialComplex::empty_complex();
        assert!(!empty.is_void());
        assert!(empty.is_empty_complex());
        assert_eq!(empty.f_vector().unwrap().0, vec![1]);
        assert_eq!(empty.h_vector().unwrap().0, vec![1]);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.reduced_euler(), -1);

        let void = SimplicialComplex::void();
        assert!(void.is_void());
        assert!(matches!(void.f_vector(), Err(Error::VoidComplex)));
        assert!(matches!(void.h_vector(), Err(Error::VoidComplex)));
        assert_eq!(void.dim(), None);
    }

    #[test]
    fn minimal_nonfaces_recover_minimal_broken_circuits() {
        for m in [
            two_triangles(),
            Matroid::uniform(2, 4).unwrap(),
            Matroid::graphic(complete_graph(4)).unwrap(),
        ] {
            let ord = ElementOrder::ground_order(m.ground());
            let c = bc_complex(&m, &ord).unwrap();
            assert_eq!(
                c.minimal_nonfaces(),
                minimal_broken_circuits(&m, &ord).unwrap()
            );
        }
    }

    #[test]
    fn matroid_complex_faces_are_independent_sets() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let c = matroid_complex(&u24);
        assert_eq!(c.f_vector().unwrap().0, vec![1, 4, 6]);
        assert!(c.is_face(set(&[1, 2])));
        assert!(!c.is_face(set(&[1, 2, 3])));
    }

    #[test]
    fn faces_listing_matches_f_vector() {
        let m = Matroid::graphic(complete_graph(4)).unwrap();
        let ord = ElementOrder::ground_order(m.ground());
        let c = bc_complex(&m, &ord).unwrap();
        let f = c.f_vector().unwrap();
        assert_eq!(f.0, vec![1, 6, 11, 6]);
        assert_eq!(c.faces().len() as i64, f.0.iter().sum::<i64>());
        assert_eq!(c.h_vector().unwrap().0, vec![1, 3, 2, 0]);
        assert_eq!(c.h_vector().unwrap().truncated(), &[1, 3, 2]);
        assert_eq!(c.h_vector().unwrap().s(), Some(2));
    }
}

//! Matroids over small ground sets.
//!
//! Four representations share one interface: uniform, graphic (cycle matroid
//! of a multigraph), linear (exact rational matrix, one column per element),
//! and an explicit circuit list.  Deletion, contraction and duality stay in
//! the native representation when it is closed under the operation and fall
//! back to the circuit representation otherwise.
//!
//! Ground sets hold at most [`crate::elements::MAX_GROUND`] elements.  Ids do
//! not have to be contiguous; constructions create fresh ids freely.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::elements::{ElemSet, Element, MAX_GROUND, MAX_ID};
use crate::error::Error;
use crate::graph::Multigraph;
use crate::ratmat::RatMat;
use crate::util::{for_each_subset_of_size, minimalize_antichain};

#[derive(Clone, Debug)]
enum Rep {
    Uniform { m: usize },
    Graphic(Multigraph),
    Linear(RatMat),
    Circuits(Vec<ElemSet>),
}

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: ElemSet,
    rep: Rep,
}

impl Matroid {
    fn check_ground(ground: ElemSet) -> Result<(), Error> {
        if ground.len() > MAX_GROUND {
            return Err(Error::CapExceeded(ground.len()));
        }
        Ok(())
    }

    /// Uniform matroid of rank `m` on elements 1..=n.
    pub fn uniform(m: usize, n: usize) -> Result<Matroid, Error> {
        let ids: Vec<u32> = (1..=n as u32).collect();
        Matroid::uniform_on(m, ElemSet::from_ids(&ids)?)
    }

    /// Uniform matroid of rank `m` on an explicit ground set.
    pub fn uniform_on(m: usize, ground: ElemSet) -> Result<Matroid, Error> {
        Matroid::check_ground(ground)?;
        if m > ground.len() {
            return Err(Error::InvalidUniform {
                m,
                n: ground.len(),
            });
        }
        Ok(Matroid {
            ground,
            rep: Rep::Uniform { m },
        })
    }

    /// Cycle matroid of a multigraph; element i is edge i.
    pub fn graphic(graph: Multigraph) -> Result<Matroid, Error> {
        let ids: Vec<u32> = (0..graph.edge_count() as u32).collect();
        let ground = ElemSet::from_ids(&ids)?;
        Matroid::check_ground(ground)?;
        Ok(Matroid {
            ground,
            rep: Rep::Graphic(graph),
        })
    }

    /// Linear matroid of a rational matrix; element i is column i.
    pub fn linear(mat: RatMat) -> Result<Matroid, Error> {
        let ids: Vec<u32> = (0..mat.cols() as u32).collect();
        Matroid::linear_on(mat, ElemSet::from_ids(&ids)?)
    }

    /// Linear matroid with explicit element ids, ascending id per column.
    pub fn linear_on(mat: RatMat, ground: ElemSet) -> Result<Matroid, Error> {
        Matroid::check_ground(ground)?;
        if mat.cols() != ground.len() {
            return Err(Error::LengthMismatch(format!(
                "{} columns for {} elements",
                mat.cols(),
                ground.len()
            )));
        }
        Ok(Matroid {
            ground,
            rep: Rep::Linear(mat),
        })
    }

    /// Matroid from an explicit circuit antichain on elements 0..n-1.
    pub fn from_circuits(n: usize, circuits: Vec<ElemSet>) -> Result<Matroid, Error> {
        let ids: Vec<u32> = (0..n as u32).collect();
        Matroid::from_circuits_on(ElemSet::from_ids(&ids)?, circuits)
    }

    /// Matroid from an explicit circuit antichain on a given ground set.
    pub fn from_circuits_on(ground: ElemSet, circuits: Vec<ElemSet>) -> Result<Matroid, Error> {
        Matroid::check_ground(ground)?;
        for c in &circuits {
            if c.is_empty() {
                return Err(Error::InvalidCircuits("empty circuit".into()));
            }
            if !c.is_subset_of(ground) {
                return Err(Error::InvalidCircuits(format!(
                    "circuit {c} leaves the ground set {ground}"
                )));
            }
        }
        let mut sorted = circuits.clone();
        sorted.sort_by_key(|c| c.mask());
        sorted.dedup();
        for (i, c) in sorted.iter().enumerate() {
            for (j, d) in sorted.iter().enumerate() {
                if i != j && c.is_subset_of(*d) {
                    return Err(Error::InvalidCircuits(format!(
                        "{c} is contained in {d}; the family must be an antichain"
                    )));
                }
            }
        }
        Ok(Matroid {
            ground,
            rep: Rep::Circuits(sorted),
        })
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.ground.contains(e)
    }

    pub fn ground_elems(&self) -> Vec<Element> {
        self.ground.iter().collect()
    }

    fn position_of(&self, e: Element) -> usize {
        self.ground
            .iter()
            .position(|x| x == e)
            .expect("element in ground set")
    }

    /// Rank of a subset of the ground set.
    pub fn rank(&self, s: ElemSet) -> Result<usize, Error> {
        if !s.is_subset_of(self.ground) {
            let stray = s.difference(self.ground).min_elem().unwrap();
            return Err(Error::UnknownElement(stray));
        }
        Ok(self.rank_unchecked(s))
    }

    fn rank_unchecked(&self, s: ElemSet) -> usize {
        match &self.rep {
            Rep::Uniform { m } => s.len().min(*m),
            Rep::Graphic(g) => {
                let positions = self
                    .ground
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| s.contains(*e))
                    .map(|(i, _)| i);
                g.rank_of_edges(positions)
            }
            Rep::Linear(mat) => {
                let cols: Vec<usize> = self
                    .ground
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| s.contains(*e))
                    .map(|(i, _)| i)
                    .collect();
                mat.rank_of_columns(&cols)
            }
            Rep::Circuits(circuits) => {
                // greedy in ascending id order; all maximal independent
                // subsets of a set share one size
                let mut indep = ElemSet::EMPTY;
                for e in s.iter() {
                    let cand = indep.with(e);
                    if circuits.iter().all(|c| !c.is_subset_of(cand)) {
                        indep = cand;
                    }
                }
                indep.len()
            }
        }
    }

    pub fn rank_full(&self) -> usize {
        self.rank_unchecked(self.ground)
    }

    pub fn is_independent(&self, s: ElemSet) -> Result<bool, Error> {
        if !s.is_subset_of(self.ground) {
            let stray = s.difference(self.ground).min_elem().unwrap();
            return Err(Error::UnknownElement(stray));
        }
        Ok(self.is_independent_unchecked(s))
    }

    fn is_independent_unchecked(&self, s: ElemSet) -> bool {
        match &self.rep {
            Rep::Circuits(circuits) => circuits.iter().all(|c| !c.is_subset_of(s)),
            _ => self.rank_unchecked(s) == s.len(),
        }
    }

    /// All circuits, the inclusion-minimal dependent sets.
    pub fn circuits(&self) -> Vec<ElemSet> {
        match &self.rep {
            Rep::Circuits(circuits) => circuits.clone(),
            Rep::Uniform { m } => {
                let elems = self.ground_elems();
                let mut out = Vec::new();
                if elems.len() >= m + 1 {
                    for_each_subset_of_size(&elems, m + 1, &mut |s| out.push(s));
                }
                out.sort_by_key(|c| c.mask());
                out
            }
            _ => {
                let elems = self.ground_elems();
                let max_size = self.rank_full() + 1;
                circuits_by_sweep(&elems, max_size, &mut |s| self.is_independent_unchecked(s))
            }
        }
    }

    pub fn delete(&self, e: Element) -> Result<Matroid, Error> {
        if !self.ground.contains(e) {
            return Err(Error::UnknownElement(e));
        }
        let ground = self.ground.without(e);
        let rep = match &self.rep {
            Rep::Uniform { m } => Rep::Uniform {
                m: (*m).min(ground.len()),
            },
            Rep::Graphic(g) => Rep::Graphic(g.delete_edge(self.position_of(e))),
            Rep::Linear(mat) => Rep::Linear(mat.drop_column(self.position_of(e))),
            Rep::Circuits(circuits) => Rep::Circuits(
                circuits
                    .iter()
                    .filter(|c| !c.contains(e))
                    .copied()
                    .collect(),
            ),
        };
        Ok(Matroid { ground, rep })
    }

    pub fn contract(&self, e: Element) -> Result<Matroid, Error> {
        if !self.ground.contains(e) {
            return Err(Error::UnknownElement(e));
        }
        // contracting a loop is deletion
        if self.rank_unchecked(ElemSet::singleton(e)) == 0 {
            return self.delete(e);
        }
        let ground = self.ground.without(e);
        let rep = match &self.rep {
            Rep::Uniform { m } => Rep::Uniform { m: *m - 1 },
            Rep::Graphic(g) => Rep::Graphic(g.contract_edge(self.position_of(e))),
            Rep::Linear(mat) => Rep::Linear(
                mat.contract_column(self.position_of(e))
                    .expect("non-loop column has a pivot"),
            ),
            Rep::Circuits(circuits) => {
                let shrunk: Vec<ElemSet> = circuits.iter().map(|c| c.without(e)).collect();
                Rep::Circuits(
                    minimalize_antichain(shrunk)
                        .into_iter()
                        .filter(|c| !c.is_empty())
                        .collect(),
                )
            }
        };
        Ok(Matroid { ground, rep })
    }

    /// Restriction to a subset of the ground set.
    pub fn restrict(&self, s: ElemSet) -> Result<Matroid, Error> {
        if !s.is_subset_of(self.ground) {
            let stray = s.difference(self.ground).min_elem().unwrap();
            return Err(Error::UnknownElement(stray));
        }
        let mut out = self.clone();
        for e in self.ground.difference(s).iter() {
            out = out.delete(e)?;
        }
        Ok(out)
    }

    /// Dual matroid on the same ground set.
    pub fn dual(&self) -> Matroid {
        if let Rep::Uniform { m } = &self.rep {
            let n = self.ground.len();
            return Matroid {
                ground: self.ground,
                rep: Rep::Uniform { m: n - m },
            };
        }
        // a set is independent in the dual exactly when its complement spans
        let r = self.rank_full();
        let n = self.ground.len();
        let elems = self.ground_elems();
        let max_size = (n - r) + 1;
        let circuits = circuits_by_sweep(&elems, max_size, &mut |s| {
            self.rank_unchecked(self.ground.difference(s)) == r
        });
        Matroid {
            ground: self.ground,
            rep: Rep::Circuits(circuits),
        }
    }

    pub fn is_loop(&self, e: Element) -> bool {
        self.ground.contains(e) && self.rank_unchecked(ElemSet::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: Element) -> bool {
        self.ground.contains(e)
            && self.rank_unchecked(self.ground.without(e)) == self.rank_full().saturating_sub(1)
            && self.rank_full() >= 1
    }

    pub fn loops(&self) -> ElemSet {
        self.ground
            .iter()
            .filter(|&e| self.rank_unchecked(ElemSet::singleton(e)) == 0)
            .collect()
    }

    pub fn coloops(&self) -> ElemSet {
        let r = self.rank_full();
        if r == 0 {
            return ElemSet::EMPTY;
        }
        self.ground
            .iter()
            .filter(|&e| self.rank_unchecked(self.ground.without(e)) == r - 1)
            .collect()
    }

    /// Partition of the non-loop elements into parallel classes, sorted by
    /// least element.  Two non-loops are parallel when their pair has rank 1.
    pub fn parallel_classes(&self) -> Vec<ElemSet> {
        let nonloops: Vec<Element> = self
            .ground
            .iter()
            .filter(|&e| self.rank_unchecked(ElemSet::singleton(e)) == 1)
            .collect();
        let mut classes: Vec<ElemSet> = Vec::new();
        for &e in &nonloops {
            let found = classes.iter().position(|cl| {
                let rep = cl.min_elem().unwrap();
                self.rank_unchecked(ElemSet::singleton(e).with(rep)) == 1
            });
            match found {
                Some(i) => classes[i] = classes[i].with(e),
                None => classes.push(ElemSet::singleton(e)),
            }
        }
        classes.sort_by_key(|c| c.min_elem().map(|e| e.0));
        classes
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_classes().iter().all(|c| c.len() == 1)
    }

    /// Deletes loops and all but the least element of each parallel class.
    /// The map sends every non-loop element to its class representative.
    pub fn simplify(&self) -> (Matroid, BTreeMap<Element, Element>) {
        let classes = self.parallel_classes();
        let mut map = BTreeMap::new();
        let mut keep = ElemSet::EMPTY;
        for cl in &classes {
            let rep = cl.min_elem().unwrap();
            keep = keep.with(rep);
            for e in cl.iter() {
                map.insert(e, rep);
            }
        }
        let simple = self.restrict(keep).expect("keep set is in the ground set");
        (simple, map)
    }

    /// Connected components: classes of the transitive closure of "lies in a
    /// common circuit".  Coloops end up as singleton classes.
    pub fn components(&self) -> Vec<(ElemSet, Matroid)> {
        let elems = self.ground_elems();
        let mut parent: Vec<usize> = (0..elems.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let index: BTreeMap<Element, usize> =
            elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for c in self.circuits() {
            let mut it = c.iter();
            let first = index[&it.next().unwrap()];
            for e in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, index[&e]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, ElemSet> = BTreeMap::new();
        for (i, &e) in elems.iter().enumerate() {
            let root = find(&mut parent, i);
            *groups.entry(root).or_insert(ElemSet::EMPTY) =
                groups.get(&root).copied().unwrap_or(ElemSet::EMPTY).with(e);
        }
        let mut sets: Vec<ElemSet> = groups.into_values().collect();
        sets.sort_by_key(|s| s.min_elem().map(|e| e.0));
        sets.into_iter()
            .map(|s| {
                let sub = self.restrict(s).expect("component inside ground");
                (s, sub)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        !self.ground.is_empty() && self.components().len() == 1
    }

    /// All bases, as element sets.
    pub fn bases(&self) -> Vec<ElemSet> {
        let r = self.rank_full();
        let elems = self.ground_elems();
        let mut out = Vec::new();
        for_each_subset_of_size(&elems, r, &mut |s| {
            if self.is_independent_unchecked(s) {
                out.push(s);
            }
        });
        out
    }

    /// Basis family with elements renamed to ground positions, sorted.  Two
    /// matroids get the same signature exactly when the position-relabeled
    /// basis families coincide; used as a memo key.
    pub fn basis_signature(&self) -> (usize, Vec<u64>) {
        let elems = self.ground_elems();
        let mut sig: Vec<u64> = self
            .bases()
            .iter()
            .map(|b| {
                let mut mask = 0u64;
                for (i, e) in elems.iter().enumerate() {
                    if b.contains(*e) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        sig.sort_unstable();
        (elems.len(), sig)
    }

    /// Renames elements through an injective id map covering the ground set.
    pub fn relabeled(&self, map: &BTreeMap<Element, Element>) -> Result<Matroid, Error> {
        let mut new_ids = Vec::new();
        for e in self.ground.iter() {
            let Some(&to) = map.get(&e) else {
                return Err(Error::UnknownElement(e));
            };
            if to.0 > MAX_ID {
                return Err(Error::IdTooLarge(to.0));
            }
            new_ids.push(to);
        }
        let new_ground = ElemSet::from_elems(&new_ids)?;
        if new_ground.len() != self.ground.len() {
            return Err(Error::Schema("relabeling map is not injective".into()));
        }
        // permutation sending new ascending positions to old positions
        let mut order: Vec<usize> = (0..new_ids.len()).collect();
        order.sort_by_key(|&i| new_ids[i].0);
        let rep = match &self.rep {
            Rep::Uniform { m } => Rep::Uniform { m: *m },
            Rep::Graphic(g) => {
                let edges = order.iter().map(|&i| g.edges[i]).collect();
                Rep::Graphic(Multigraph {
                    vertices: g.vertices,
                    edges,
                })
            }
            Rep::Linear(mat) => Rep::Linear(mat.select_columns(&order)),
            Rep::Circuits(circuits) => {
                let mut moved: Vec<ElemSet> = circuits
                    .iter()
                    .map(|c| c.iter().map(|e| map[&e]).collect())
                    .collect();
                moved.sort_by_key(|c| c.mask());
                Rep::Circuits(moved)
            }
        };
        Ok(Matroid {
            ground: new_ground,
            rep,
        })
    }

    /// Same ground set and same circuit family.
    pub fn equals_by_circuits(&self, other: &Matroid) -> bool {
        if self.ground != other.ground {
            return false;
        }
        let mut a = self.circuits();
        let mut b = other.circuits();
        a.sort_by_key(|c| c.mask());
        b.sort_by_key(|c| c.mask());
        a == b
    }

    pub fn to_json(&self) -> MatroidJson {
        let n = self.ground.len();
        let dense = |k: usize| {
            let ids: Vec<u32> = (0..k as u32).collect();
            ElemSet::from_ids(&ids).unwrap()
        };
        let one_based: ElemSet = (1..=n as u32).map(Element).collect();
        match &self.rep {
            Rep::Uniform { m } if self.ground == one_based => MatroidJson::Uniform { m: *m, n },
            Rep::Graphic(g) if self.ground == dense(n) => MatroidJson::Graphic {
                vertices: g.vertices,
                edges: g.edges.clone(),
            },
            Rep::Linear(mat) if self.ground == dense(n) => MatroidJson::Linear {
                matrix: mat.to_string_columns(),
            },
            _ => {
                // fall back to the circuit schema, relabeling to 0..n-1
                let map: BTreeMap<Element, Element> = self
                    .ground
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (e, Element(i as u32)))
                    .collect();
                let circuits = self
                    .circuits()
                    .iter()
                    .map(|c| c.iter().map(|e| map[&e].0).collect())
                    .collect();
                MatroidJson::Circuits { n, circuits }
            }
        }
    }

    pub fn from_json(json: &MatroidJson) -> Result<Matroid, Error> {
        match json {
            MatroidJson::Uniform { m, n } => Matroid::uniform(*m, *n),
            MatroidJson::Graphic { vertices, edges } => {
                Matroid::graphic(Multigraph::new(*vertices, edges.clone())?)
            }
            MatroidJson::Linear { matrix } => {
                Matroid::linear(RatMat::from_string_columns(matrix)?)
            }
            MatroidJson::Circuits { n, circuits } => {
                let mut sets = Vec::new();
                for c in circuits {
                    for &id in c {
                        if id as usize >= *n {
                            return Err(Error::Schema(format!(
                                "circuit element {id} out of range for n={n}"
                            )));
                        }
                    }
                    sets.push(ElemSet::from_ids(c)?);
                }
                Matroid::from_circuits(*n, sets)
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Matroid, Error> {
        let json: MatroidJson =
            serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Matroid::from_json(&json)
    }
}

/// JSON wire form of a matroid.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidJson {
    Uniform { m: usize, n: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Linear { matrix: Vec<Vec<String>> },
    Circuits { n: usize, circuits: Vec<Vec<u32>> },
}

/// Size-increasing subset sweep: a set is a circuit exactly when it is
/// dependent and every proper subset is independent, so sweeping by size and
/// skipping supersets of found circuits yields the minimal dependent sets.
pub(crate) fn circuits_by_sweep(
    elems: &[Element],
    max_size: usize,
    is_independent: &mut impl FnMut(ElemSet) -> bool,
) -> Vec<ElemSet> {
    let mut found: Vec<ElemSet> = Vec::new();
    for k in 1..=max_size.min(elems.len()) {
        let mut fresh = Vec::new();
        for_each_subset_of_size(elems, k, &mut |s| {
            if found.iter().any(|c| c.is_subset_of(s)) {
                return;
            }
            if !is_independent(s) {
                fresh.push(s);
            }
        });
        found.append(&mut fresh);
    }
    found.sort_by_key(|c| c.mask());
    found
}

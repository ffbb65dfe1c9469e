//! Building new matroids from old ones.
//!
//! Direct sums glue disjoint ground sets.  Series and parallel connections
//! glue two matroids along one shared basepoint and are assembled directly
//! from the circuit formulas: writing Mi for the two sides and e for the
//! basepoint,
//!
//!   circuits(series)   = C(M1 - e) u C(M2 - e) u { C1 u C2 : e in both Ci }
//!   circuits(parallel) = C(M1) u C(M2) u { C1 u C2 - e : e in both Ci }
//!
//! minimalized to an antichain.  Callers must pre-align the shared element
//! id; nothing here renames elements implicitly.

use crate::elements::{ElemSet, Element};
use crate::error::Error;
use crate::matroid::{circuits_by_sweep, Matroid};
use crate::util::minimalize_antichain;

/// Two matroids whose ground sets meet in exactly the basepoint, which must
/// not be a loop or a coloop on either side.
pub struct ConnectionSpec {
    left: Matroid,
    right: Matroid,
    basepoint: Element,
}

impl ConnectionSpec {
    pub fn new(left: Matroid, right: Matroid, basepoint: Element) -> Result<Self, Error> {
        let overlap = left.ground().intersection(right.ground());
        if overlap != ElemSet::singleton(basepoint) {
            return Err(Error::InvalidConnection(format!(
                "ground sets meet in {overlap}, expected exactly {{{basepoint}}}"
            )));
        }
        for (side, m) in [("left", &left), ("right", &right)] {
            if m.is_loop(basepoint) {
                return Err(Error::InvalidConnection(format!(
                    "basepoint {basepoint} is a loop on the {side} side"
                )));
            }
            if m.is_coloop(basepoint) {
                return Err(Error::InvalidConnection(format!(
                    "basepoint {basepoint} is a coloop on the {side} side"
                )));
            }
        }
        Ok(ConnectionSpec {
            left,
            right,
            basepoint,
        })
    }

    pub fn left(&self) -> &Matroid {
        &self.left
    }

    pub fn right(&self) -> &Matroid {
        &self.right
    }

    pub fn basepoint(&self) -> Element {
        self.basepoint
    }
}

/// Direct sum of matroids on disjoint ground sets.
pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Matroid, Error> {
    if !a.ground().intersection(b.ground()).is_empty() {
        return Err(Error::GroundsNotDisjoint);
    }
    let ground = a.ground().union(b.ground());
    let mut circuits = a.circuits();
    circuits.extend(b.circuits());
    Matroid::from_circuits_on(ground, circuits)
}

pub fn series_connection(spec: &ConnectionSpec) -> Result<Matroid, Error> {
    let e = spec.basepoint;
    let ground = spec.left.ground().union(spec.right.ground());
    let mut circuits: Vec<ElemSet> = Vec::new();
    let left_through: Vec<ElemSet> = collect_split(&spec.left, e, &mut circuits);
    let right_through: Vec<ElemSet> = collect_split(&spec.right, e, &mut circuits);
    for c1 in &left_through {
        for c2 in &right_through {
            circuits.push(c1.union(*c2));
        }
    }
    Matroid::from_circuits_on(ground, minimalize_antichain(circuits))
}

pub fn parallel_connection(spec: &ConnectionSpec) -> Result<Matroid, Error> {
    let e = spec.basepoint;
    let ground = spec.left.ground().union(spec.right.ground());
    let mut circuits: Vec<ElemSet> = Vec::new();
    let mut left_through: Vec<ElemSet> = Vec::new();
    let mut right_through: Vec<ElemSet> = Vec::new();
    for c in spec.left.circuits() {
        if c.contains(e) {
            left_through.push(c);
        }
        circuits.push(c);
    }
    for c in spec.right.circuits() {
        if c.contains(e) {
            right_through.push(c);
        }
        circuits.push(c);
    }
    for c1 in &left_through {
        for c2 in &right_through {
            circuits.push(c1.union(*c2).without(e));
        }
    }
    Matroid::from_circuits_on(ground, minimalize_antichain(circuits))
}

/// Circuits avoiding e go straight into `out`; circuits through e are
/// returned for pairing.
fn collect_split(m: &Matroid, e: Element, out: &mut Vec<ElemSet>) -> Vec<ElemSet> {
    let mut through = Vec::new();
    for c in m.circuits() {
        if c.contains(e) {
            through.push(c);
        } else {
            out.push(c);
        }
    }
    through
}

/// Adds a new element in the freest possible position: independent with
/// every independent set of size below the rank.  The new element id is one
/// past the current maximum.
pub fn free_extension(m: &Matroid) -> Result<Matroid, Error> {
    let new_elem = next_fresh_id(m)?;
    let ground = m.ground().with(new_elem);
    if ground.len() > crate::elements::MAX_GROUND {
        return Err(Error::CapExceeded(ground.len()));
    }
    let r = m.rank_full();
    // uniform matroids stay uniform under free extension
    let existing = m.circuits();
    if existing.len() == expected_uniform_circuits(m)
        && existing.iter().all(|c| c.len() == r + 1)
    {
        return Matroid::uniform_on(r, ground);
    }
    let elems: Vec<Element> = ground.iter().collect();
    let circuits = circuits_by_sweep(&elems, r + 1, &mut |s| {
        if s.contains(new_elem) {
            let rest = s.without(new_elem);
            s.len() <= r && m.is_independent(rest).unwrap_or(false)
        } else {
            m.is_independent(s).unwrap_or(false)
        }
    });
    Matroid::from_circuits_on(ground, circuits)
}

fn expected_uniform_circuits(m: &Matroid) -> usize {
    let n = m.size();
    let r = m.rank_full();
    if n >= r + 1 {
        crate::util::binomial(n, r + 1) as usize
    } else {
        0
    }
}

fn next_fresh_id(m: &Matroid) -> Result<Element, Error> {
    let next = match m.ground().max_elem() {
        Some(e) => e.0 + 1,
        None => 0,
    };
    if next > crate::elements::MAX_ID {
        return Err(Error::IdTooLarge(next));
    }
    Ok(Element(next))
}

/// Dual of the free extension of the dual.  The new element is forced into
/// every basis-sized spanning set as weakly as possible.
pub fn free_dual_extension(m: &Matroid) -> Result<Matroid, Error> {
    Ok(free_extension(&m.dual())?.dual())
}

/// The circuit on m+1 elements: the uniform matroid of rank m whose unique
/// circuit is the whole ground set.  Elements are 1..=m+1.
pub fn circuit_matroid(m: usize) -> Result<Matroid, Error> {
    Matroid::uniform(m, m + 1)
}

//! Circuit relations of a hyperplane arrangement.
//!
//! An arrangement is given by an exact rational matrix whose columns are
//! the defining linear forms.  Every circuit of the column matroid carries a
//! unique dependency up to scale, and the corresponding relation
//! sum_j c_j prod_{l != j} x_{i_l} generates the ideal cutting out the
//! coordinate ring of the arrangement's dependency variety.  Under the
//! right term order the leading monomials of these generators are exactly
//! the broken circuit monomials, which ties the algebra back to the
//! combinatorics of the rest of this crate.
//!
//! Only the generator-level statement is checked here.  Reports therefore
//! say "consistent with" the initial-ideal picture; a Groebner basis
//! computation is deliberately out of scope.

use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::classify::{classify_matroid, ClassificationReport};
use crate::complex::ElementOrder;
use crate::elements::{ElemSet, Element};
use crate::error::Error;
use crate::graph::Multigraph;
use crate::matroid::Matroid;
use crate::ratmat::{format_rational, RatMat};

/// Columns of an essential simple arrangement, with the element id each
/// column carries in the underlying matroid.
#[derive(Clone, Debug)]
pub struct ArrangementMatrix {
    mat: RatMat,
    ids: Vec<u32>,
    notice: Option<String>,
}

impl ArrangementMatrix {
    /// Validates a matrix as an arrangement.  Zero columns and rank
    /// deficiency are hard errors.  Proportional columns describe the same
    /// hyperplane twice, so all but the first of each class are dropped
    /// with a notice; the kept columns retain their original indices as
    /// element ids.
    pub fn new(mat: RatMat) -> Result<ArrangementMatrix, Error> {
        for j in 0..mat.cols() {
            if mat.column_is_zero(j) {
                return Err(Error::ZeroColumn(j));
            }
        }
        if mat.rank() != mat.rows() {
            return Err(Error::NotEssential {
                rank: mat.rank(),
                rows: mat.rows(),
            });
        }
        let mut kept: Vec<usize> = Vec::new();
        let mut dropped: Vec<(usize, usize)> = Vec::new();
        for j in 0..mat.cols() {
            match kept.iter().find(|&&k| mat.columns_proportional(k, j)) {
                Some(&k) => dropped.push((j, k)),
                None => kept.push(j),
            }
        }
        let notice = if dropped.is_empty() {
            None
        } else {
            let detail: Vec<String> = dropped
                .iter()
                .map(|(j, k)| format!("column {j} is proportional to column {k}"))
                .collect();
            Some(format!(
                "dropped {} repeated hyperplane(s): {}",
                dropped.len(),
                detail.join("; ")
            ))
        };
        let ids: Vec<u32> = kept.iter().map(|&k| k as u32).collect();
        Ok(ArrangementMatrix {
            mat: mat.select_columns(&kept),
            ids,
            notice,
        })
    }

    pub fn from_string_columns(columns: &[Vec<String>]) -> Result<ArrangementMatrix, Error> {
        ArrangementMatrix::new(RatMat::from_string_columns(columns)?)
    }

    pub fn matrix(&self) -> &RatMat {
        &self.mat
    }

    pub fn column_ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn notice(&self) -> Option<&str> {
        self.notice.as_deref()
    }

    fn column_of(&self, e: Element) -> Result<usize, Error> {
        self.ids
            .iter()
            .position(|&id| id == e.0)
            .ok_or(Error::UnknownElement(e))
    }

    /// The column matroid, with element ids matching the kept columns.
    pub fn underlying_matroid(&self) -> Result<Matroid, Error> {
        Matroid::linear_on(self.mat.clone(), ElemSet::from_ids(&self.ids)?)
    }

    /// The unique-up-to-scale dependency among the columns of a circuit,
    /// normalized so the coefficient of the smallest element is one.
    pub fn circuit_relation(&self, circuit: ElemSet) -> Result<CircuitRelation, Error> {
        let elems: Vec<Element> = circuit.iter().collect();
        let cols: Vec<usize> = elems
            .iter()
            .map(|&e| self.column_of(e))
            .collect::<Result<_, _>>()?;
        let raw = self
            .mat
            .nullspace_one_dim(&cols)
            .ok_or(Error::NotACircuit(circuit))?;
        if raw.iter().any(Zero::is_zero) {
            // nullity one but a coefficient vanishes: a proper subset is
            // already dependent, so this set is not minimal
            return Err(Error::NotACircuit(circuit));
        }
        let lead = raw[0].clone();
        let coeffs: Vec<BigRational> = raw.into_iter().map(|c| c / &lead).collect();
        Ok(CircuitRelation {
            circuit: elems,
            coeffs,
        })
    }

    /// Checks, circuit by circuit, that the leading monomial of the
    /// relation under the reversed-precedence lexicographic order is the
    /// broken circuit monomial of that circuit.
    pub fn lead_term_check(&self, ord: &ElementOrder) -> Result<bool, Error> {
        let m = self.underlying_matroid()?;
        for circuit in m.circuits() {
            let rel = self.circuit_relation(circuit)?;
            let expected = circuit.without(ord.min_of(circuit).ok_or(Error::NotACircuit(circuit))?);
            if rel.lead_monomial(ord) != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One generator of the arrangement ideal: the circuit, its dependency
/// coefficients, and the polynomial sum_j c_j prod_{l != j} x_{i_l}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitRelation {
    circuit: Vec<Element>,
    coeffs: Vec<BigRational>,
}

impl CircuitRelation {
    pub fn circuit(&self) -> &[Element] {
        &self.circuit
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The monomials of the relation, each a circuit with one element
    /// omitted, paired with its coefficient.
    pub fn terms(&self) -> Vec<(ElemSet, BigRational)> {
        let full = self
            .circuit
            .iter()
            .fold(ElemSet::EMPTY, |acc, &e| acc.with(e));
        self.circuit
            .iter()
            .zip(&self.coeffs)
            .map(|(&e, c)| (full.without(e), c.clone()))
            .collect()
    }

    /// Substitutes the columns back into the dependency: sum c_j alpha_j
    /// must vanish in every coordinate.
    pub fn satisfied_by(&self, a: &ArrangementMatrix) -> bool {
        let Ok(cols) = self
            .circuit
            .iter()
            .map(|&e| a.column_of(e))
            .collect::<Result<Vec<_>, _>>()
        else {
            return false;
        };
        (0..a.mat.rows()).all(|i| {
            let mut acc = BigRational::zero();
            for (&j, c) in cols.iter().zip(&self.coeffs) {
                acc += a.mat.get(i, j) * c;
            }
            acc.is_zero()
        })
    }

    /// Leading monomial under the lexicographic order whose variable
    /// precedence is the reverse of `ord`: elements later in `ord` weigh
    /// more.  Scans the actual terms rather than trusting the theory.
    pub fn lead_monomial(&self, ord: &ElementOrder) -> ElemSet {
        let mut precedence: Vec<Element> = ord.as_slice().to_vec();
        precedence.reverse();
        lex_max(self.terms().iter().map(|(m, _)| *m), &precedence)
    }

    pub fn to_json(&self, ord: &ElementOrder) -> RelationJson {
        RelationJson {
            circuit: self.circuit.iter().map(|e| e.0).collect(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
            lead_monomial: self.lead_monomial(ord).ids(),
        }
    }
}

/// Wire form of a relation.
#[derive(Clone, Debug, Serialize)]
pub struct RelationJson {
    pub circuit: Vec<u32>,
    pub coeffs: Vec<String>,
    pub lead_monomial: Vec<u32>,
}

/// Lex-max of squarefree monomials; `precedence` lists variables from most
/// to least significant.
fn lex_max(monomials: impl Iterator<Item = ElemSet>, precedence: &[Element]) -> ElemSet {
    monomials
        .reduce(|best, cand| {
            for &v in precedence {
                match (best.contains(v), cand.contains(v)) {
                    (true, false) => return best,
                    (false, true) => return cand,
                    _ => {}
                }
            }
            best
        })
        .expect("a relation has at least one term")
}

/// Classification of the arrangement's algebra via its underlying matroid,
/// with the notes a reader of the verdict needs.
#[derive(Clone, Debug, Serialize)]
pub struct OtClassification {
    pub report: ClassificationReport,
    pub notes: Vec<String>,
}

pub fn ot_classification(a: &ArrangementMatrix) -> Result<OtClassification, Error> {
    let m = a.underlying_matroid()?;
    let report = classify_matroid(&m)?;
    let n = m.size();
    let r = m.rank_full();
    let s = report.s;
    let mut notes = vec![
        "complete intersection and Gorenstein coincide for this algebra; one verdict covers both"
            .to_string(),
        format!(
            "h_0 = 1 and h_1 = n - r = {} are forced, so the verdict depends only on the last \
             two nonzero entries h_{} = {} and h_{} = {}",
            n - r,
            s.saturating_sub(1),
            report.h[s.saturating_sub(1)],
            s,
            report.h[s],
        ),
        "generator lead terms are consistent with the broken-circuit initial ideal; no Groebner \
         basis is computed, so this is evidence, not a proof"
            .to_string(),
    ];
    if let Some(notice) = a.notice() {
        notes.push(notice.to_string());
    }
    Ok(OtClassification { report, notes })
}

/// Incidence-style arrangement of a connected graph: one column e_u - e_v
/// per edge, last coordinate dropped so the matrix is essential.  Column j
/// is edge j, matching the graphic matroid's element ids.
pub fn graphic_arrangement(g: &Multigraph) -> Result<ArrangementMatrix, Error> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let rows = g.vertices - 1;
    let columns: Vec<Vec<BigRational>> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut col = vec![BigRational::zero(); rows];
            if u < rows {
                col[u] += BigRational::one();
            }
            if v < rows {
                col[v] -= BigRational::one();
            }
            col
        })
        .collect();
    ArrangementMatrix::new(RatMat::from_columns(&columns)?)
}

/// Vandermonde arrangement realizing the uniform matroid U_{r,n}: column i
/// is (1, t, t^2, ..., t^{r-1}) at t = i, so every r columns are
/// independent.
pub fn generic_arrangement(r: usize, n: usize) -> Result<ArrangementMatrix, Error> {
    if r == 0 || n < r {
        return Err(Error::InvalidUniform { m: r, n });
    }
    let columns: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let t = BigRational::from_integer((i as i64 + 1).into());
            let mut col = Vec::with_capacity(r);
            let mut p = BigRational::one();
            for _ in 0..r {
                col.push(p.clone());
                p *= &t;
            }
            col
        })
        .collect();
    ArrangementMatrix::new(RatMat::from_columns(&columns)?)
}

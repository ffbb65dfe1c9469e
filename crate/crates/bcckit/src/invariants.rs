//! The h-polynomial through the Tutte lens.
//!
//! The face-count route to the h-vector goes through a broken circuit
//! complex and therefore through a choice of order.  This module computes
//! the same polynomial by deletion and contraction alone, giving the test
//! suites a second, independent path to every h-vector: the Tutte polynomial
//! evaluated at (t, 0).

use std::collections::HashMap;
use std::ops::{Add, Mul};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::complex::HVector;
use crate::elements::MAX_GROUND;
use crate::error::Error;
use crate::matroid::Matroid;
use crate::util::binomial;

/// Dense integer polynomial, coefficients listed lowest degree first with no
/// trailing zeros.  The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![BigInt::one()])
    }

    /// The monomial t^k.
    pub fn t_power(k: usize) -> Poly {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Poly(c)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Poly {
        let mut p = Poly(coeffs);
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }

    /// The polynomial p(t + 1).
    pub fn shifted_by_one(&self) -> Poly {
        let mut out = vec![BigInt::zero(); self.0.len()];
        for (k, c) in self.0.iter().enumerate() {
            for (i, slot) in out.iter_mut().enumerate().take(k + 1) {
                *slot += c * BigInt::from(binomial(k, i));
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = vec![BigInt::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

/// h_M(t) = h_0 t^r + h_1 t^{r-1} + ... + h_r, stored as the coefficient
/// list (h_0, ..., h_r).  A matroid with a loop gets the zero polynomial,
/// recorded as all-zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolynomial {
    rank: usize,
    h: Vec<BigInt>,
}

impl HPolynomial {
    fn from_poly(p: &Poly, rank: usize) -> HPolynomial {
        let h = (0..=rank).map(|i| p.coeff(rank - i)).collect();
        HPolynomial { rank, h }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// (h_0, ..., h_r), the coefficient of t^{r-i} at index i.
    pub fn h_coeffs(&self) -> &[BigInt] {
        &self.h
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|c| c.is_zero())
    }

    pub fn h_vector(&self) -> HVector {
        HVector(
            self.h
                .iter()
                .map(|c| i64::try_from(c).expect("h-vector entries stay far below i64"))
                .collect(),
        )
    }

    /// As a plain polynomial in t, lowest degree first.
    pub fn poly(&self) -> Poly {
        Poly::from_coeffs(self.h.iter().rev().cloned().collect())
    }
}

/// h_M(t) by deletion and contraction, memoized on the basis signature so
/// relabeled repeats of the same minor are computed once.  A loop kills the
/// whole branch: its Tutte factor vanishes at the evaluation point.
pub fn h_polynomial_tutte(m: &Matroid) -> Result<HPolynomial, Error> {
    if m.size() > MAX_GROUND {
        return Err(Error::CapExceeded(m.size()));
    }
    let mut memo: HashMap<(usize, Vec<u64>), Poly> = HashMap::new();
    let p = tutte_at_t_zero(m, &mut memo);
    Ok(HPolynomial::from_poly(&p, m.rank_full()))
}

fn tutte_at_t_zero(m: &Matroid, memo: &mut HashMap<(usize, Vec<u64>), Poly>) -> Poly {
    if m.size() == 0 {
        return Poly::one();
    }
    if !m.loops().is_empty() {
        return Poly::zero();
    }
    let sig = m.basis_signature();
    if let Some(p) = memo.get(&sig) {
        return p.clone();
    }
    let pivot = m.ground().iter().find(|&e| !m.is_coloop(e));
    let p = match pivot {
        // every element is a coloop, so the matroid is free
        None => Poly::t_power(m.size()),
        Some(e) => {
            let del = m.delete(e).expect("pivot is a ground element");
            let con = m.contract(e).expect("pivot is a ground element");
            &tutte_at_t_zero(&del, memo) + &tutte_at_t_zero(&con, memo)
        }
    };
    memo.insert(sig, p.clone());
    p
}

/// h_{r-1}, positive exactly for connected matroids.
pub fn beta(m: &Matroid) -> Result<i64, Error> {
    let r = m.rank_full();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let h = h_polynomial_tutte(m)?;
    Ok(i64::try_from(&h.h_coeffs()[r - 1]).expect("beta stays far below i64"))
}

/// Number of connected components read off the h-vector: the smallest k
/// with h_{r-k} nonzero.
pub fn component_count_from_h(h: &HVector, r: usize) -> Result<usize, Error> {
    if r == 0 {
        return Err(Error::RankZero);
    }
    if h.0.len() != r + 1 {
        return Err(Error::LengthMismatch(format!(
            "h has {} entries for rank {}",
            h.0.len(),
            r
        )));
    }
    (0..=r)
        .find(|&k| h.0[r - k] != 0)
        .ok_or(Error::EmptyHVector)
}

/// pi(t) = sum of f_i t^i, the Poincare polynomial attached to a face count.
pub fn poincare_polynomial(f: &crate::complex::FVector) -> Poly {
    Poly::from_i64s(&f.0)
}

/// The numerator sum of h_i t^i of the Hilbert series of the face ring.
pub fn hilbert_numerator(h: &HVector) -> Poly {
    Poly::from_i64s(&h.0)
}

/// Exact polynomial identity sum f_i t^i (1-t)^{r-i} = sum h_i t^i, which is
/// the same statement as f(t) = h(t+1).
pub fn check_hilbert_identity(
    f: &crate::complex::FVector,
    h: &HVector,
    r: usize,
) -> Result<bool, Error> {
    if f.0.len() != r + 1 || h.0.len() != r + 1 {
        return Err(Error::LengthMismatch(format!(
            "expected {} entries, got f: {}, h: {}",
            r + 1,
            f.0.len(),
            h.0.len()
        )));
    }
    let one_minus_t = Poly::from_i64s(&[1, -1]);
    let mut lhs = Poly::zero();
    for (i, &fi) in f.0.iter().enumerate() {
        let mut term = &Poly::from_i64s(&[fi]) * &Poly::t_power(i);
        for _ in 0..(r - i) {
            term = &term * &one_minus_t;
        }
        lhs = &lhs + &term;
    }
    Ok(lhs == hilbert_numerator(h))
}

/// Checks h_M(t) = h_{M-e}(t) + h_{M'}(t) where M' is the simplification of
/// M/e.  Needs M simple, otherwise contracting e can leave loops behind and
/// simplification would discard them.
pub fn deletion_contraction_h_check(m: &Matroid, e: crate::elements::Element) -> Result<bool, Error> {
    if !m.contains(e) {
        return Err(Error::UnknownElement(e));
    }
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    if m.is_coloop(e) {
        return Err(Error::ColoopPivot(e));
    }
    let whole = h_polynomial_tutte(m)?.poly();
    let deleted = h_polynomial_tutte(&m.delete(e)?)?.poly();
    let contracted = h_polynomial_tutte(&m.contract(e)?.simplify().0)?.poly();
    Ok(whole == &deleted + &contracted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{bc_complex, ElementOrder, FVector};
    use crate::constructions::direct_sum;
    use crate::elements::{ElemSet, Element};
    use crate::graph::complete_graph;

    fn h_vec(m: &Matroid) -> Vec<i64> {
        h_polynomial_tutte(m).unwrap().h_vector().0
    }

    #[test]
    fn poly_arithmetic() {
        let p = Poly::from_i64s(&[1, 1]);
        let q = &p * &p;
        assert_eq!(q, Poly::from_i64s(&[1, 2, 1]));
        assert_eq!(&q + &Poly::from_i64s(&[0, -2]), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(Poly::from_i64s(&[0, 0]), Poly::zero());
        assert_eq!(Poly::t_power(2).degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
        // (t^2 + 1) at t+1 is t^2 + 2t + 2
        assert_eq!(
            Poly::from_i64s(&[1, 0, 1]).shifted_by_one(),
            Poly::from_i64s(&[2, 2, 1])
        );
    }

    #[test]
    fn coloop_has_h_equal_t() {
        let coloop = Matroid::uniform(1, 1).unwrap();
        let h = h_polynomial_tutte(&coloop).unwrap();
        assert_eq!(h.h_vector().0, vec![1, 0]);
        assert_eq!(h.poly(), Poly::t_power(1));
    }

    #[test]
    fn triangle_has_h_t_squared_plus_t() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(h_vec(&u23), vec![1, 1, 0]);
    }

    #[test]
    fn k4_has_h_1_3_2_0() {
        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        assert_eq!(h_vec(&k4), vec![1, 3, 2, 0]);
    }

    #[test]
    fn loops_zero_the_polynomial() {
        let loopy = Matroid::from_circuits(3, vec![ElemSet::from_ids(&[0]).unwrap()]).unwrap();
        let h = h_polynomial_tutte(&loopy).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn tutte_route_matches_face_count_route() {
        let instances = vec![
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(3, 6).unwrap(),
            Matroid::graphic(complete_graph(4)).unwrap(),
            Matroid::graphic(crate::graph::cycle_graph(5)).unwrap(),
        ];
        for m in instances {
            let ord = ElementOrder::ground_order(m.ground());
            let via_faces = bc_complex(&m, &ord).unwrap().h_vector().unwrap();
            assert_eq!(h_polynomial_tutte(&m).unwrap().h_vector(), via_faces);
        }
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(&Matroid::uniform(2, 3).unwrap()).unwrap(), 1);
        assert_eq!(
            beta(&Matroid::graphic(complete_graph(4)).unwrap()).unwrap(),
            2
        );
        let sum = direct_sum(
            &Matroid::uniform(2, 3).unwrap(),
            &Matroid::uniform_on(1, ElemSet::from_ids(&[10, 11]).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!(beta(&sum).unwrap(), 0);
        assert!(matches!(
            beta(&Matroid::uniform(0, 0).unwrap()),
            Err(Error::RankZero)
        ));
    }

    #[test]
    fn h_is_multiplicative_over_direct_sums() {
        let a = Matroid::uniform(2, 3).unwrap();
        let b = Matroid::uniform_on(2, ElemSet::from_ids(&[7, 8, 9, 10]).unwrap()).unwrap();
        let sum = direct_sum(&a, &b).unwrap();
        let lhs = h_polynomial_tutte(&sum).unwrap().poly();
        let rhs = &h_polynomial_tutte(&a).unwrap().poly() * &h_polynomial_tutte(&b).unwrap().poly();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn component_counts() {
        assert_eq!(
            component_count_from_h(&HVector(vec![1, 1, 0]), 2).unwrap(),
            1
        );
        assert_eq!(
            component_count_from_h(&HVector(vec![1, 1, 0, 0]), 3).unwrap(),
            2
        );
        assert!(matches!(
            component_count_from_h(&HVector(vec![1]), 0),
            Err(Error::RankZero)
        ));
        assert!(matches!(
            component_count_from_h(&HVector(vec![0, 0]), 1),
            Err(Error::EmptyHVector)
        ));
    }

    #[test]
    fn hilbert_identity() {
        let f = FVector(vec![1, 3, 2]);
        let h = HVector(vec![1, 1, 0]);
        assert_eq!(poincare_polynomial(&f), Poly::from_i64s(&[1, 3, 2]));
        assert!(check_hilbert_identity(&f, &h, 2).unwrap());
        // and in the f(t) = h(t+1) form with f_0, h_0 on the top power:
        // h = t^2 + t shifted gives t^2 + 3t + 2 = f
        let h_poly = Poly::from_i64s(&[0, 1, 1]);
        let f_poly = Poly::from_i64s(&[2, 3, 1]);
        assert_eq!(h_poly.shifted_by_one(), f_poly);

        let k4f = FVector(vec![1, 6, 11, 6]);
        let k4h = HVector(vec![1, 3, 2, 0]);
        assert!(check_hilbert_identity(&k4f, &k4h, 3).unwrap());
        assert!(!check_hilbert_identity(&k4f, &HVector(vec![1, 3, 1, 0]), 3).unwrap());
        assert!(check_hilbert_identity(&FVector(vec![1, 3]), &h, 2).is_err());
    }

    #[test]
    fn deletion_contraction_recurrence() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        for e in u24.ground().iter() {
            assert!(deletion_contraction_h_check(&u24, e).unwrap());
        }
        let k4 = Matroid::graphic(complete_graph(4)).unwrap();
        for e in k4.ground().iter() {
            assert!(deletion_contraction_h_check(&k4, e).unwrap());
        }
        let coloop_side = Matroid::uniform(1, 1).unwrap();
        assert!(matches!(
            deletion_contraction_h_check(&coloop_side, Element(1)),
            Err(Error::ColoopPivot(_))
        ));
        let c2 = Matroid::uniform(1, 2).unwrap();
        assert!(matches!(
            deletion_contraction_h_check(&c2, Element(1)),
            Err(Error::NotSimple)
        ));
    }

    #[test]
    fn u24_recurrence_values() {
        // h(U24) = t^2 + 2t, deletion gives t^2 + t, contraction simplifies
        // to a coloop worth t
        let u24 = Matroid::uniform(2, 4).unwrap();
        let e = Element(1);
        assert_eq!(h_vec(&u24), vec![1, 2, 0]);
        assert_eq!(h_vec(&u24.delete(e).unwrap()), vec![1, 1, 0]);
        let contracted = u24.contract(e).unwrap().simplify().0;
        assert_eq!(h_vec(&contracted), vec![1, 0]);
    }
}

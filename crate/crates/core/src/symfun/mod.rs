//! Symmetric functions as graded sparse coefficient maps.
//!
//! The power-sum basis is the working basis: chromatic symmetric functions are
//! produced there, and every other basis is reached through exact per-degree
//! transition matrices held in a [`TransitionCache`].

mod cache;
mod family;

pub use cache::{DegreeTransition, TransitionCache};
pub use family::GraphFamily;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{partitions_of, Partition, Rational, UniPoly};
use crate::{Error, Result};

/// Which basis a [`SymFun`]'s coefficients refer to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    PowerSum,
    Monomial,
    /// The multiplicative basis generated by a registered graph family.
    Chromatic(String),
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisId::PowerSum => f.write_str("p"),
            BasisId::Monomial => f.write_str("m"),
            BasisId::Chromatic(name) => f.write_str(name),
        }
    }
}

/// A symmetric function: a finite sum `Σ a_λ b_λ` over a basis `b`.
///
/// No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    basis: BasisId,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFun {
    pub fn zero(basis: BasisId) -> Self {
        SymFun { basis, coeffs: BTreeMap::new() }
    }

    /// The unit, `b_∅`.
    pub fn one(basis: BasisId) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: BasisId, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.coeffs.insert(lambda, Rational::one());
        f
    }

    pub fn from_terms(basis: BasisId, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, &c);
        }
        f
    }

    pub fn basis(&self) -> &BasisId {
        &self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest partition size present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    /// Whether every term has the same size.
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coeffs.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Adds `c · b_λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    fn same_basis(&self, other: &SymFun) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: alloc::format!("{}", self.basis),
                got: alloc::format!("{}", other.basis),
            })
        }
    }

    pub fn add(&self, other: &SymFun) -> Result<SymFun> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFun) -> Result<SymFun> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SymFun {
        if c.is_zero() {
            return SymFun::zero(self.basis.clone());
        }
        SymFun {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    /// The same coefficients read in another basis.
    pub fn reinterpret(&self, basis: BasisId) -> SymFun {
        SymFun { basis, coeffs: self.coeffs.clone() }
    }

    /// The polynomial whose `x^k` coefficient is the sum of the coefficients on
    /// partitions of length `k`, taken in this function's own basis.
    pub fn collapse_by_length(&self) -> UniPoly {
        let top = self.coeffs.keys().map(Partition::len).max().unwrap_or(0);
        let mut out = alloc::vec![Rational::zero(); top + 1];
        for (lambda, c) in &self.coeffs {
            out[lambda.len()] += c;
        }
        UniPoly::from_coeffs(out)
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> Rational {
        self.coeffs.values().sum()
    }

    /// Coefficient vector of the degree-`d` part, indexed by `partitions_of(d)`.
    pub fn degree_vector(&self, d: usize) -> Vec<Rational> {
        partitions_of(d).iter().map(|l| self.coeff(l)).collect()
    }

    /// Sizes that carry at least one nonzero coefficient, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// Product in the power-sum basis: `p_λ · p_μ = p_{λ ∪ μ}`.
pub fn p_multiply(f: &SymFun, g: &SymFun) -> Result<SymFun> {
    for h in [f, g] {
        if h.basis != BasisId::PowerSum {
            return Err(Error::BasisMismatch { expected: "p".into(), got: alloc::format!("{}", h.basis) });
        }
    }
    let mut out = SymFun::zero(BasisId::PowerSum);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            out.add_term(a.union(b), &(ca * cb));
        }
    }
    Ok(out)
}

/// `[x^μ] p_λ`: the number of ways to send the parts of `λ` to the variables
/// `x_1 … x_{ℓ(μ)}` so that variable `i` receives total exponent `μ_i`.
pub fn power_sum_monomial_coefficient(lambda: &Partition, mu: &Partition) -> BigInt {
    fn place(parts: &[usize], remaining: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(remaining.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..remaining.len() {
            if remaining[i] >= first {
                remaining[i] -= first;
                total += place(rest, remaining);
                remaining[i] += first;
            }
        }
        total
    }
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let mut remaining = mu.parts().to_vec();
    BigInt::from(place(lambda.parts(), &mut remaining))
}

/// Expansion of a power-sum `f` in `num_vars` variables, collected by monomial
/// type: the value at `μ` is the coefficient of `x_1^{μ_1} x_2^{μ_2} ⋯`, i.e.
/// the monomial-basis coefficient `[m_μ] f`.
///
/// `num_vars` must be at least the degree of `f`, so no monomial is lost.
pub fn p_to_monomials(f: &SymFun, num_vars: usize) -> Result<BTreeMap<Partition, Rational>> {
    if f.basis != BasisId::PowerSum {
        return Err(Error::BasisMismatch { expected: "p".into(), got: alloc::format!("{}", f.basis) });
    }
    let degree = f.degree().unwrap_or(0);
    if num_vars < degree {
        return Err(Error::TooFewVariables { vars: num_vars, degree });
    }
    let mut out = BTreeMap::new();
    for d in f.degrees() {
        for mu in partitions_of(d) {
            let mut acc = Rational::zero();
            for (lambda, c) in f.coeffs.iter().filter(|(l, _)| l.size() == d) {
                let k = power_sum_monomial_coefficient(lambda, &mu);
                if !k.is_zero() {
                    acc += c * Rational::from_integer(k);
                }
            }
            if !acc.is_zero() {
                out.insert(mu, acc);
            }
        }
    }
    Ok(out)
}

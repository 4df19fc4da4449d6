use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// The coefficient ring of a [`SparsePoly`]. Carries whatever context its
/// elements need (e.g. the cyclotomic modulus).
pub trait CoefficientRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_assign(&self, x: &mut Self::Elem, y: &Self::Elem);
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    /// Fails when two rings cannot be mixed.
    fn check_same(&self, other: &Self) -> Result<()>;
}

/// The rational integers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }

    fn add_assign(&self, x: &mut BigInt, y: &BigInt) {
        *x += y;
    }

    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }

    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }

    fn check_same(&self, _: &Self) -> Result<()> {
        Ok(())
    }
}

/// A sparse polynomial in a fixed number of variables.
///
/// Terms are kept sorted in decreasing graded-lexicographic order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct SparsePoly<R: CoefficientRing> {
    ring: R,
    vars: usize,
    terms: Vec<(Monomial, R::Elem)>,
}

impl<R: CoefficientRing> PartialEq for SparsePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<R: CoefficientRing> SparsePoly<R> {
    pub fn zero(ring: R, vars: usize) -> Self {
        SparsePoly {
            ring,
            vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: R, vars: usize, c: R::Elem) -> Self {
        Self::from_terms(ring, vars, [(Monomial::one(vars), c)])
    }

    pub fn one(ring: R, vars: usize) -> Self {
        let one = ring.one();
        Self::constant(ring, vars, one)
    }

    /// x_i, with `i` 0-based.
    pub fn variable(ring: R, vars: usize, i: usize) -> Self {
        let one = ring.one();
        Self::from_terms(ring, vars, [(Monomial::variable(vars, i), one)])
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    ///
    /// Panics if a monomial has the wrong number of exponent slots.
    pub fn from_terms<I>(ring: R, vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.vars(), vars, "monomial has the wrong number of variables");
            match acc.get_mut(&m) {
                Some(existing) => ring.add_assign(existing, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, vars, acc)
    }

    fn from_map(ring: R, vars: usize, acc: HashMap<Monomial, R::Elem>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        SparsePoly { ring, vars, terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> &[(Monomial, R::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, R::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`SparsePoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == self.ring.one()
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.zero())
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// True when every term has the same total degree (vacuously for 0).
    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    /// Smallest ambient that holds every occurring variable.
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.support_len()).max().unwrap_or(0)
    }

    /// The same polynomial in an ambient of `vars` variables.
    pub fn with_vars(&self, vars: usize) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                m.resized(vars)
                    .map(|m| (m, c.clone()))
                    .ok_or(Error::AmbientTooLarge {
                        vars: self.support_len(),
                        limit: vars,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparsePoly {
            ring: self.ring.clone(),
            vars,
            terms,
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        self.ring.check_same(&other.ring)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let ring = &self.ring;
        let rhs = |c: &R::Elem| if negate_other { ring.neg(c) } else { c.clone() };
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push((mb.clone(), rhs(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = ca.clone();
                    ring.add_assign(&mut c, &rhs(cb));
                    if !ring.is_zero(&c) {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        SparsePoly {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), self.vars));
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        let ring = &self.ring;
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ring.mul(ca, cb);
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => ring.add_assign(e.get_mut(), &c),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.ring.clone(), self.vars, acc))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(self.ring.clone(), self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), self.ring.mul(x, c)))
            .filter(|(_, x)| !self.ring.is_zero(x))
            .collect();
        SparsePoly {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }

    pub fn negate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), self.ring.neg(x)))
            .collect();
        SparsePoly {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }

    /// Multiplies by a monomial with coefficient one.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        assert_eq!(m.vars(), self.vars);
        // Multiplying by a monomial preserves the term order.
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        SparsePoly {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }

    /// Applies a monomial map to every term and recollects.
    pub fn map_monomials<F>(&self, vars: usize, mut f: F) -> Self
    where
        F: FnMut(&Monomial) -> Monomial,
    {
        Self::from_terms(
            self.ring.clone(),
            vars,
            self.terms.iter().map(|(m, c)| (f(m), c.clone())),
        )
    }

    /// Exchanges x_i and x_j (0-based).
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        self.map_monomials(self.vars, |m| m.swapped(i, j))
    }

    /// Exact division by `x_i − x_j` (0-based indices).
    ///
    /// Repeatedly cancels the term of highest x_i-degree: a term `c·m` with
    /// x_i | m contributes `c·m/x_i` to the quotient. A surviving term free of
    /// x_i is a non-zero remainder.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i < self.vars && j < self.vars && i != j);
        let ring = &self.ring;
        let mut rest: BTreeMap<(u32, Monomial), R::Elem> = self
            .terms
            .iter()
            .map(|(m, c)| ((m.exponents()[i], m.clone()), c.clone()))
            .collect();
        let mut quotient = Vec::new();
        while let Some(((degree, m), c)) = rest.pop_last() {
            if degree == 0 {
                return Err(Error::InexactDivision(i + 1, j + 1));
            }
            let mut q = m;
            q.exponents_mut()[i] -= 1;
            // Subtracting c·q·(x_i − x_j) removes c·m and adds c·q·x_j.
            let mut shifted = q.clone();
            shifted.exponents_mut()[j] += 1;
            let key = (degree - 1, shifted);
            match rest.get_mut(&key) {
                Some(existing) => {
                    ring.add_assign(existing, &c);
                    if ring.is_zero(existing) {
                        rest.remove(&key);
                    }
                }
                None => {
                    rest.insert(key, c.clone());
                }
            }
            quotient.push((q, c));
        }
        Ok(Self::from_terms(self.ring.clone(), self.vars, quotient))
    }
}

impl<R: CoefficientRing> Add for &SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn add(self, rhs: Self) -> SparsePoly<R> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<R: CoefficientRing> Sub for &SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn sub(self, rhs: Self) -> SparsePoly<R> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<R: CoefficientRing> Mul for &SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn mul(self, rhs: Self) -> SparsePoly<R> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<R: CoefficientRing> Neg for &SparsePoly<R> {
    type Output = SparsePoly<R>;

    fn neg(self) -> SparsePoly<R> {
        self.negate()
    }
}

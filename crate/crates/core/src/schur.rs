//! Flagged complete homogeneous polynomials, the flagged Jacobi–Trudi
//! determinant, and both sides of the root-of-unity factorization.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{
    epsilon_t, quotient_flags, residue_data, t_core, t_quotient, Flag, FlagPair, Partition, SkewShape, Twist,
};
use crate::polyring::{
    determinant, extract_integer_form, phi_t_substitute, CycPolynomial, IntPolynomial, Integers, Monomial,
    SparsePoly,
};

/// h_k(x_{u+1}, ..., x_v) in an ambient of `vars ≥ v` variables, with the
/// conventions h_0 = 1, h_k = 0 for k < 0, and h_k = 0 when u ≥ v, k ≠ 0.
fn complete_homogeneous(k: i64, u: usize, v: usize, vars: usize) -> IntPolynomial {
    if k == 0 {
        return IntPolynomial::int_one(vars);
    }
    if k < 0 || u >= v {
        return IntPolynomial::int_zero(vars);
    }
    fn fill(slot: usize, end: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<(Monomial, BigInt)>) {
        if slot + 1 == end {
            exps[slot] = left;
            out.push((Monomial::from_exponents(exps), BigInt::one()));
            exps[slot] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[slot] = e;
            fill(slot + 1, end, left - e, exps, out);
        }
        exps[slot] = 0;
    }
    let mut terms = Vec::new();
    fill(u, v, k as u32, &mut vec![0; vars], &mut terms);
    SparsePoly::from_terms(Integers, vars, terms)
}

/// h_k(u, v) := h_k(x_{u+1}, ..., x_v), over the ambient x_1..x_v.
pub fn h_flagged(k: i64, u: usize, v: usize) -> IntPolynomial {
    complete_homogeneous(k, u, v, v)
}

/// A flagged Jacobi–Trudi determinant of order `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiTrudiSpec {
    shape: SkewShape,
    a: Flag,
    b: Flag,
    order: usize,
}

impl JacobiTrudiSpec {
    /// Requires `order ≥ l(λ), l(μ)` and flags of at least `order` entries.
    pub fn new(shape: SkewShape, a: Flag, b: Flag, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::NonPositiveParameter { name: "order" });
        }
        for p in [&shape.outer, &shape.inner] {
            if p.len() > order {
                return Err(Error::ShapeTooLong {
                    length: p.len(),
                    limit: order,
                });
            }
        }
        a.require_len(order)?;
        b.require_len(order)?;
        Ok(JacobiTrudiSpec { shape, a, b, order })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Ambient of the result: the largest upper-flag entry.
    pub fn vars(&self) -> usize {
        Flag::max(&self.b)
    }

    /// h-entry index λ_i − μ_j − i + j (0-based i, j).
    fn degree(&self, i: usize, j: usize) -> i64 {
        self.shape.outer.part(i) as i64 - self.shape.inner.part(j) as i64 - i as i64 + j as i64
    }

    /// The matrix `(h_{λ_i − μ_j − i + j}(a_j, b_i))`.
    pub fn matrix(&self) -> Vec<Vec<IntPolynomial>> {
        let vars = self.vars();
        let mut cache: HashMap<(i64, usize, usize), IntPolynomial> = HashMap::new();
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let key = (self.degree(i, j), self.a[j], self.b[i]);
                        cache
                            .entry(key)
                            .or_insert_with(|| complete_homogeneous(key.0, key.1, key.2, vars))
                            .clone()
                    })
                    .collect()
            })
            .collect()
    }
}

/// `det(h_{λ_i − μ_j − i + j}(a_j, b_i))`; zero whenever μ ⊄ λ.
pub fn jacobi_trudi(spec: &JacobiTrudiSpec) -> Result<IntPolynomial> {
    determinant(&spec.matrix())
}

fn check_twisted_input(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<JacobiTrudiSpec> {
    let tn = twist.tn();
    let spec = JacobiTrudiSpec::new(shape.clone(), a.clone(), b.clone(), tn)?;
    if b.max() > tn {
        return Err(Error::FlagTooLarge {
            position: b.len(),
            value: b.max(),
            limit: tn,
        });
    }
    Ok(spec)
}

/// φ_t(s_{λ/μ}(a, b)) with the determinant taken at order tn.
pub fn phi_of_flagged_schur(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<CycPolynomial> {
    let spec = check_twisted_input(shape, a, b, twist)?;
    phi_t_substitute(&jacobi_trudi(&spec)?, twist)
}

/// φ_t applied entrywise to the Jacobi–Trudi matrix before taking the
/// determinant over ℤ[ω]. Agrees with [`phi_of_flagged_schur`] because φ_t
/// is a ring homomorphism.
pub fn phi_by_entries(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<CycPolynomial> {
    let spec = check_twisted_input(shape, a, b, twist)?;
    let matrix = spec
        .matrix()
        .iter()
        .map(|row| row.iter().map(|h| phi_t_substitute(h, twist)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    determinant(&matrix)
}

/// The right-hand side together with the data it was assembled from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Factorization {
    pub value: IntPolynomial,
    pub epsilon: i8,
    pub core_match: bool,
    pub quotients: Vec<QuotientPair>,
    pub quotient_flags: Vec<FlagPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientPair {
    pub outer: Partition,
    pub inner: Partition,
}

fn check_divisible(flag: &Flag, twist: Twist) -> Result<()> {
    flag.require_len(twist.tn())?;
    match flag.entries().iter().position(|v| v % twist.t() != 0) {
        Some(i) => Err(Error::FlagNotDivisible {
            position: i + 1,
            value: flag[i],
            t: twist.t(),
        }),
        None => Ok(()),
    }
}

/// ε_t(λ/μ) Π_r s_{λ^(r)/μ^(r)}(a^(r), b^(r)) in x_1..x_n, with full
/// bookkeeping. Each factor is a Jacobi–Trudi determinant of order m_r.
pub fn factorize(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<Factorization> {
    check_divisible(a, twist)?;
    check_divisible(b, twist)?;
    let n = twist.n();
    let epsilon = epsilon_t(shape, twist)?;
    let core_match = t_core(&shape.outer, twist)? == t_core(&shape.inner, twist)?;
    let quotients: Vec<QuotientPair> = t_quotient(&shape.outer, twist)?
        .into_iter()
        .zip(t_quotient(&shape.inner, twist)?)
        .map(|(outer, inner)| QuotientPair { outer, inner })
        .collect();
    let zero = IntPolynomial::int_zero(n);
    if epsilon == 0 {
        return Ok(Factorization {
            value: zero,
            epsilon,
            core_match,
            quotients,
            quotient_flags: Vec::new(),
        });
    }
    let quotient_flags = quotient_flags(a, b, shape, twist)?;
    let counts = residue_data(&shape.outer, twist)?.counts;

    let mut value = zero.clone();
    if quotients.iter().all(|q| q.outer.contains(&q.inner)) {
        value = IntPolynomial::int_one(n);
        for ((q, flags), &m) in quotients.iter().zip(&quotient_flags).zip(&counts) {
            if m == 0 {
                continue;
            }
            let shape = SkewShape::new(q.outer.clone(), q.inner.clone());
            let spec = JacobiTrudiSpec::new(shape, flags.lower.clone(), flags.upper.clone(), m)?;
            let factor = jacobi_trudi(&spec)?.with_vars(n)?;
            value = value.try_mul(&factor)?;
            if value.is_zero() {
                break;
            }
        }
        if epsilon < 0 {
            value = value.negate();
        }
    }
    Ok(Factorization {
        value,
        epsilon,
        core_match,
        quotients,
        quotient_flags,
    })
}

/// The right-hand side alone.
pub fn factorized_rhs(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<IntPolynomial> {
    Ok(factorize(shape, a, b, twist)?.value)
}

/// Both sides of the factorization, computed independently.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainTheoremReport {
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub equal: bool,
    pub epsilon: i8,
    pub core_match: bool,
    pub quotients: Vec<QuotientPair>,
    pub quotient_flags: Vec<FlagPair>,
}

/// Compares φ_t(s_{λ/μ}(a, b)), rewritten in x_i = y_i^t, with the signed
/// product over quotients. A non-zero left side that is not an integer
/// polynomial in the y_i^t is reported as an error.
pub fn verify_main_theorem(shape: &SkewShape, a: &Flag, b: &Flag, twist: Twist) -> Result<MainTheoremReport> {
    let phi = phi_of_flagged_schur(shape, a, b, twist)?;
    let lhs = if phi.is_zero() {
        IntPolynomial::int_zero(twist.n())
    } else {
        extract_integer_form(&phi).map_err(|e| {
            Error::TheoremViolation(format!("left side of {shape} is not in the image of ψ_t: {e}"))
        })?
    };
    let Factorization {
        value: rhs,
        epsilon,
        core_match,
        quotients,
        quotient_flags,
    } = factorize(shape, a, b, twist)?;
    Ok(MainTheoremReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        epsilon,
        core_match,
        quotients,
        quotient_flags,
    })
}

/// The full-flag straight-shape case: s_λ in tn variables against
/// ε_t(λ/∅) Π_r s_{λ^(r)}(x_1..x_n).
pub fn littlewood_specialize(lam: &Partition, twist: Twist) -> Result<MainTheoremReport> {
    let tn = twist.tn();
    verify_main_theorem(
        &SkewShape::straight(lam.clone()),
        &Flag::constant(0, tn),
        &Flag::constant(tn, tn),
        twist,
    )
}

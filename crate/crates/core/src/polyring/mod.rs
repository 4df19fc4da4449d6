//! Sparse multivariate polynomials over ℤ and over the cyclotomic integers,
//! with the root-of-unity specialization φ_t and the power substitution ψ_t.

mod cyclotomic;
mod determinant;
mod monomial;
mod sparse;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicInteger, CyclotomicRing};
pub use determinant::determinant;
pub use monomial::Monomial;
pub use sparse::{CoefficientRing, Integers, SparsePoly};

use crate::error::{Error, Result};
use crate::partitions::Twist;

pub type IntPolynomial = SparsePoly<Integers>;
pub type CycPolynomial = SparsePoly<Cyclotomic>;

impl IntPolynomial {
    pub fn int_zero(vars: usize) -> Self {
        SparsePoly::zero(Integers, vars)
    }

    pub fn int_one(vars: usize) -> Self {
        SparsePoly::one(Integers, vars)
    }

    /// `c · x^exps`.
    pub fn int_monomial(exps: &[u32], c: impl Into<BigInt>) -> Self {
        SparsePoly::from_terms(Integers, exps.len(), [(Monomial::from_exponents(exps), c.into())])
    }

    /// x_i with a 1-based index, as in the text form.
    pub fn x(vars: usize, i: usize) -> Self {
        SparsePoly::variable(Integers, vars, i - 1)
    }

    /// Lifts integer coefficients into ℤ[ω].
    pub fn to_cyclotomic(&self, ring: &Cyclotomic) -> CycPolynomial {
        SparsePoly::from_terms(
            ring.clone(),
            self.vars(),
            self.terms()
                .iter()
                .map(|(m, c)| (m.clone(), CyclotomicInteger::from_int(&ring.0, c.clone()))),
        )
    }
}

fn write_terms<C>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(Monomial, C)],
    var: &str,
    mut write_coeff: impl FnMut(&mut fmt::Formatter<'_>, &C, bool, bool) -> fmt::Result,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (m, c)) in terms.iter().enumerate() {
        write_coeff(f, c, i == 0, m.is_one())?;
        monomial::write_monomial(f, m, var)?;
    }
    Ok(())
}

/// Canonical text form, e.g. `x1^2 - 3*x1*x2 + 1`, terms in decreasing
/// graded-lex order.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "x", |f, c, first, unit| {
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if unit {
                write!(f, "{magnitude}")
            } else if magnitude.is_one() {
                Ok(())
            } else {
                write!(f, "{magnitude}*")
            }
        })
    }
}

/// Text form over y-variables with parenthesized ℤ[ω] coefficients,
/// e.g. `(1 - w)*y1^2 + 3`.
impl fmt::Display for CycPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "y", |f, c, first, unit| {
            if !first {
                write!(f, " + ")?;
            }
            match c.as_integer() {
                Some(k) if unit => write!(f, "{k}"),
                Some(k) if k.is_one() => Ok(()),
                Some(k) if (-k).is_one() => write!(f, "-"),
                Some(k) => write!(f, "{k}*"),
                None if unit => write!(f, "({c})"),
                None => write!(f, "({c})*"),
            }
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: usize,
    terms: Vec<TermJson>,
}

/// `{"vars": k, "terms": [{"exp": [...], "coeff": "decimal"}]}`, terms in
/// decreasing graded-lex order.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars(),
            terms: self
                .terms()
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                if t.exp.len() != raw.vars {
                    return Err(D::Error::custom(format!(
                        "exponent vector {:?} does not have {} entries",
                        t.exp, raw.vars
                    )));
                }
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((Monomial::from_exponents(&t.exp), c))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SparsePoly::from_terms(Integers, raw.vars, terms))
    }
}

/// φ_t: sends x_{(i−1)t+j+1} to ω^j·y_i, turning a polynomial in at most tn
/// variables into one over ℤ[ω] in n variables.
pub fn phi_t_substitute(p: &IntPolynomial, twist: Twist) -> Result<CycPolynomial> {
    let (t, n) = (twist.t(), twist.n());
    if p.support_len() > twist.tn() {
        return Err(Error::AmbientTooLarge {
            vars: p.support_len(),
            limit: twist.tn(),
        });
    }
    let ring = Cyclotomic::new(t)?;
    let mut acc: HashMap<Monomial, CyclotomicInteger> = HashMap::new();
    for (m, c) in p.terms() {
        let mut image = Monomial::one(n);
        let mut omega_power = 0usize;
        for (slot, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            image.exponents_mut()[slot / t] += e;
            omega_power += (slot % t) * e as usize;
        }
        acc.entry(image)
            .or_insert_with(|| CyclotomicInteger::zero(&ring.0))
            .add_scaled_omega_pow(c, omega_power % t);
    }
    Ok(SparsePoly::from_terms(ring, n, acc))
}

fn describe(m: &Monomial, var: &str) -> String {
    struct Shown<'a>(&'a Monomial, &'a str);
    impl fmt::Display for Shown<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0.is_one() {
                write!(f, "1")
            } else {
                monomial::write_monomial(f, self.0, self.1)
            }
        }
    }
    Shown(m, var).to_string()
}

/// Rewrites a polynomial over ℤ[ω] in y-variables as an integer polynomial
/// in x_i = y_i^t. Fails on the first term (in graded-lex order) with a
/// non-integer coefficient or an exponent not divisible by t.
pub fn extract_integer_form(p: &CycPolynomial) -> Result<IntPolynomial> {
    let t = p.ring().t();
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let Some(k) = c.as_integer() else {
            return Err(Error::NonIntegerCoefficient {
                term: describe(m, "y"),
            });
        };
        if let Some(var) = m.exponents().iter().position(|&e| !(e as usize).is_multiple_of(t)) {
            return Err(Error::ExponentNotDivisible {
                term: describe(m, "y"),
                var: var + 1,
                exponent: m.exponents()[var],
                t,
            });
        }
        let exps: Vec<u32> = m.exponents().iter().map(|&e| e / t as u32).collect();
        terms.push((Monomial::from_exponents(&exps), k.clone()));
    }
    Ok(SparsePoly::from_terms(Integers, p.vars(), terms))
}

/// ψ_t: x_i ↦ x_i^t.
pub fn psi_t(p: &IntPolynomial, t: usize) -> IntPolynomial {
    let t = t as u32;
    p.map_monomials(p.vars(), |m| {
        let exps: Vec<u32> = m.exponents().iter().map(|&e| e * t).collect();
        Monomial::from_exponents(&exps)
    })
}

//! Exact arithmetic in ℤ[ω] = ℤ[x]/(Φ_t) for ω a primitive t-th root of
//! unity.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::sparse::CoefficientRing;
use crate::error::{Error, Result};

/// Quotient and remainder of `num` by a monic `den`, both ascending.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let d = den.len() - 1;
    debug_assert!(den[d].is_one());
    let mut rem = num.to_vec();
    if rem.len() <= d {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for k in (d..rem.len()).rev() {
        let c = std::mem::take(&mut rem[k]);
        if c.is_zero() {
            continue;
        }
        for (i, coeff) in den[..d].iter().enumerate() {
            rem[k - d + i] -= &c * coeff;
        }
        quot[k - d] = c;
    }
    rem.truncate(d);
    (quot, rem)
}

/// The t-th cyclotomic polynomial Φ_t, coefficients ascending, obtained by
/// dividing x^t − 1 by Φ_d for every proper divisor d of t.
///
/// Panics if `t == 0`.
pub fn cyclotomic_polynomial(t: usize) -> Vec<BigInt> {
    assert!(t >= 1, "cyclotomic order must be positive");
    let mut poly = vec![BigInt::zero(); t + 1];
    poly[0] = -BigInt::one();
    poly[t] = BigInt::one();
    for d in (1..t).filter(|d| t.is_multiple_of(*d)) {
        let (quot, rem) = divide_monic(&poly, &cyclotomic_polynomial(d));
        debug_assert!(rem.iter().all(Zero::is_zero));
        poly = quot;
    }
    poly
}

/// The ring ℤ[ω] for a fixed t, holding Φ_t and the reduced powers of ω.
#[derive(Debug)]
pub struct CyclotomicRing {
    t: usize,
    modulus: Vec<BigInt>,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicRing {
    pub fn new(t: usize) -> Result<Arc<Self>> {
        if t == 0 {
            return Err(Error::NonPositiveParameter { name: "t" });
        }
        let modulus = cyclotomic_polynomial(t);
        let degree = modulus.len() - 1;
        let powers = (0..t)
            .map(|k| {
                let mut x = vec![BigInt::zero(); k + 1];
                x[k] = BigInt::one();
                let (_, mut rem) = divide_monic(&x, &modulus);
                rem.resize(degree, BigInt::zero());
                rem
            })
            .collect();
        Ok(Arc::new(CyclotomicRing { t, modulus, powers }))
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// deg Φ_t, which is Euler's φ(t).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Coordinates of ω^k.
    pub fn omega_pow_coeffs(&self, k: usize) -> &[BigInt] {
        &self.powers[k % self.t]
    }

    fn reduce(&self, coeffs: Vec<BigInt>) -> Vec<BigInt> {
        let (_, mut rem) = divide_monic(&coeffs, &self.modulus);
        rem.resize(self.degree(), BigInt::zero());
        rem
    }
}

/// An element of ℤ[ω], stored as its remainder modulo Φ_t.
#[derive(Clone, Debug)]
pub struct CyclotomicInteger {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        self.ring.t == other.ring.t && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInteger {}

impl CyclotomicInteger {
    /// Reduces an arbitrary polynomial in ω (ascending coefficients).
    pub fn from_poly(ring: &Arc<CyclotomicRing>, coeffs: Vec<BigInt>) -> Self {
        CyclotomicInteger {
            ring: ring.clone(),
            coeffs: ring.reduce(coeffs),
        }
    }

    pub fn from_int(ring: &Arc<CyclotomicRing>, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); ring.degree()];
        coeffs[0] = c;
        CyclotomicInteger {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &Arc<CyclotomicRing>) -> Self {
        Self::from_int(ring, BigInt::zero())
    }

    pub fn one(ring: &Arc<CyclotomicRing>) -> Self {
        Self::from_int(ring, BigInt::one())
    }

    /// ω^k.
    pub fn omega_pow(ring: &Arc<CyclotomicRing>, k: usize) -> Self {
        CyclotomicInteger {
            ring: ring.clone(),
            coeffs: ring.omega_pow_coeffs(k).to_vec(),
        }
    }

    pub fn t(&self) -> usize {
        self.ring.t
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    /// Coordinates in the basis 1, ω, ..., ω^{deg Φ_t − 1}.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.t(), other.t(), "cyclotomic orders differ");
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *x += y;
        }
    }

    /// Adds `c·ω^k` in place.
    pub fn add_scaled_omega_pow(&mut self, c: &BigInt, k: usize) {
        let ring = self.ring.clone();
        for (x, y) in self.coeffs.iter_mut().zip(ring.omega_pow_coeffs(k)) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.t(), other.t(), "cyclotomic orders differ");
        let d = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        Self::from_poly(&self.ring, prod)
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    write!(f, "w")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficient context for polynomials over ℤ[ω].
#[derive(Clone, Debug)]
pub struct Cyclotomic(pub Arc<CyclotomicRing>);

impl Cyclotomic {
    pub fn new(t: usize) -> Result<Self> {
        Ok(Cyclotomic(CyclotomicRing::new(t)?))
    }

    pub fn t(&self) -> usize {
        self.0.t
    }
}

impl CoefficientRing for Cyclotomic {
    type Elem = CyclotomicInteger;

    fn zero(&self) -> CyclotomicInteger {
        CyclotomicInteger::zero(&self.0)
    }

    fn one(&self) -> CyclotomicInteger {
        CyclotomicInteger::one(&self.0)
    }

    fn is_zero(&self, x: &CyclotomicInteger) -> bool {
        x.is_zero()
    }

    fn add_assign(&self, x: &mut CyclotomicInteger, y: &CyclotomicInteger) {
        x.add_assign(y);
    }

    fn mul(&self, x: &CyclotomicInteger, y: &CyclotomicInteger) -> CyclotomicInteger {
        x.mul(y)
    }

    fn neg(&self, x: &CyclotomicInteger) -> CyclotomicInteger {
        x.neg()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.t() != other.t() {
            return Err(Error::OrderMismatch {
                left: self.t(),
                right: other.t(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn euler_phi(t: usize) -> usize {
        (1..=t).filter(|&k| num_integer::gcd(k, t) == 1).count()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        // Φ_105 is the first with a coefficient outside {−1, 0, 1}.
        assert!(cyclotomic_polynomial(105).contains(&BigInt::from(-2)));
    }

    #[test]
    fn degree_is_euler_phi() {
        for t in 1..=40 {
            assert_eq!(CyclotomicRing::new(t).unwrap().degree(), euler_phi(t), "t = {t}");
        }
    }

    #[test]
    fn omega_identities() {
        for t in 1..=12 {
            let ring = CyclotomicRing::new(t).unwrap();
            let omega = CyclotomicInteger::omega_pow(&ring, 1);
            let mut power = CyclotomicInteger::one(&ring);
            for _ in 0..t {
                power = power.mul(&omega);
            }
            assert_eq!(power, CyclotomicInteger::one(&ring), "ω^t = 1 for t = {t}");

            // Φ_t(ω) = 0
            let mut value = CyclotomicInteger::zero(&ring);
            for (k, c) in ring.modulus().iter().enumerate() {
                value.add_scaled_omega_pow(c, k);
            }
            assert!(value.is_zero(), "Φ_t(ω) = 0 for t = {t}");
        }
        for t in [2, 3, 5, 7, 11] {
            let ring = CyclotomicRing::new(t).unwrap();
            let mut sum = CyclotomicInteger::zero(&ring);
            for k in 0..t {
                sum.add_assign(&CyclotomicInteger::omega_pow(&ring, k));
            }
            assert!(sum.is_zero(), "1 + ω + ... + ω^(t-1) = 0 for prime t = {t}");
        }
    }

    #[test]
    fn omega_squared_at_order_two() {
        let ring = CyclotomicRing::new(2).unwrap();
        let omega = CyclotomicInteger::omega_pow(&ring, 1);
        assert_eq!(omega.coeffs(), &ints(&[-1])[..]);
        assert_eq!(omega.mul(&omega), CyclotomicInteger::one(&ring));
    }

    #[test]
    fn display() {
        let ring = CyclotomicRing::new(5).unwrap();
        let x = CyclotomicInteger::from_poly(&ring, ints(&[2, -1, 0, 3]));
        assert_eq!(x.to_string(), "2 - w + 3*w^3");
        assert_eq!(CyclotomicInteger::zero(&ring).to_string(), "0");
        assert_eq!(x.as_integer(), None);
        assert_eq!(CyclotomicInteger::from_int(&ring, BigInt::from(-4)).as_integer(), Some(&BigInt::from(-4)));
    }
}

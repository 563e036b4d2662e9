//! Exact arithmetic in `F_p` (p ≥ 5 prime), `F_{p^k}` and `Q`.
//!
//! A [`Field`] is a cheap, shareable handle on an immutable [`FieldSpec`].
//! Every [`FieldElement`] carries its field, so mixing elements of different
//! fields is detected at runtime: the `checked_*` methods report
//! [`FieldError::MixedFields`], while the operator impls panic.
//!
//! ```
//! use howe_sextic::field::Field;
//!
//! let f31 = Field::prime(31).unwrap();
//! let three = f31.from_i64(3);
//! assert_eq!(three.inv().unwrap(), f31.from_i64(21));
//! assert_eq!(&f31.from_i64(14) * &f31.from_i64(7), f31.from_i64(5));
//! ```

mod element;
pub(crate) mod raw;
mod sqrt;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use element::FieldElement;
pub(crate) use element::Repr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (need p >= 5)")]
    SmallCharacteristic(u64),
    #[error("modulus polynomial is not monic and irreducible of degree >= 1")]
    BadModulus,
    #[error("operation not supported over {0}")]
    Unsupported(String),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    Extension,
    Rational,
}

/// Static description of a field.
///
/// For extensions, `modulus` is the monic irreducible polynomial over `F_p`
/// (constant term first, length `k + 1`) and elements are residues in the
/// generator `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime => write!(f, "F_{}", self.0.p),
            FieldKind::Extension => {
                write!(f, "F_{}^{}[t]/(", self.0.p, self.0.k)?;
                write_raw_poly(f, &self.0.modulus, "t")?;
                write!(f, ")")
            }
        }
    }
}

pub(crate) fn write_raw_poly(f: &mut impl fmt::Write, coeffs: &[u64], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match (i, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => write!(f, "{var}")?,
            (1, c) => write!(f, "{c}*{var}")?,
            (i, 1) => write!(f, "{var}^{i}")?,
            (i, c) => write!(f, "{c}*{var}^{i}")?,
        }
    }
    Ok(())
}

impl Field {
    /// The prime field `F_p`; `p` must be a prime ≥ 5.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p < 5 {
            return Err(if raw::is_prime_u64(p) {
                FieldError::SmallCharacteristic(p)
            } else {
                FieldError::NotPrime(p)
            });
        }
        if !raw::is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldSpec {
            kind: FieldKind::Prime,
            p,
            k: 1,
            modulus: Vec::new(),
        })))
    }

    pub fn rational() -> Field {
        Field(Arc::new(FieldSpec {
            kind: FieldKind::Rational,
            p: 0,
            k: 1,
            modulus: Vec::new(),
        }))
    }

    /// `F_p[t]/(modulus)`. A degree-1 modulus yields `F_p` itself.
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Field, FieldError> {
        let base = Field::prime(p)?;
        let mut modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        raw::trim(&mut modulus);
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulus);
        }
        if modulus.len() == 2 {
            return Ok(base);
        }
        if !raw::is_irreducible(&modulus, p) {
            return Err(FieldError::BadModulus);
        }
        Ok(Field(Arc::new(FieldSpec {
            kind: FieldKind::Extension,
            p,
            k: modulus.len() - 1,
            modulus,
        })))
    }

    /// `F_{p^k}` with a modulus found by seeded random search.
    pub fn build_extension(p: u64, k: usize, seed: u64) -> Result<Field, FieldError> {
        let base = Field::prime(p)?;
        if k <= 1 {
            return Ok(base);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut candidate: Vec<u64> = (0..k).map(|_| rng.random_range(0..p)).collect();
            candidate.push(1);
            if candidate[0] != 0 && raw::is_irreducible(&candidate, p) {
                return Field::extension(p, candidate);
            }
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn is_finite(&self) -> bool {
        self.0.kind != FieldKind::Rational
    }

    pub fn is_rational(&self) -> bool {
        self.0.kind == FieldKind::Rational
    }

    /// 0 for `Q`.
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Degree over the prime field (1 for `F_p` and `Q`).
    pub fn degree(&self) -> usize {
        self.0.k
    }

    /// `p^k`, or `None` for `Q`.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite().then(|| BigUint::from(self.0.p).pow(self.0.k as u32))
    }

    /// `p^k` when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        (0..self.0.k).try_fold(1u64, |acc, _| acc.checked_mul(self.0.p))
    }

    /// The prime subfield `F_p` (or `Q`).
    pub fn prime_subfield(&self) -> Field {
        match self.0.kind {
            FieldKind::Extension => Field::prime(self.0.p).expect("validated at construction"),
            _ => self.clone(),
        }
    }

    pub(crate) fn element(&self, repr: Repr) -> FieldElement {
        FieldElement::from_parts(self.clone(), repr)
    }

    pub fn zero(&self) -> FieldElement {
        match self.0.kind {
            FieldKind::Prime => self.element(Repr::Prime(0)),
            FieldKind::Extension => self.element(Repr::Ext(Vec::new())),
            FieldKind::Rational => self.element(Repr::Rational(BigRational::zero())),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        match self.0.kind {
            FieldKind::Prime => self.element(Repr::Prime(n % self.0.p)),
            FieldKind::Extension => {
                let mut v = vec![n % self.0.p];
                raw::trim(&mut v);
                self.element(Repr::Ext(v))
            }
            FieldKind::Rational => self.element(Repr::Rational(BigRational::from_integer(n.into()))),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self.0.kind {
            FieldKind::Rational => self.element(Repr::Rational(BigRational::from_integer(n.into()))),
            _ => {
                let p = self.0.p as i128;
                self.from_u64((n as i128).rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.0.kind {
            FieldKind::Rational => self.element(Repr::Rational(BigRational::from_integer(n.clone()))),
            _ => {
                let p = BigInt::from(self.0.p);
                let r = ((n % &p) + &p) % &p;
                let (_, digits) = r.to_u64_digits();
                self.from_u64(digits.first().copied().unwrap_or(0))
            }
        }
    }

    /// `num / den`, reduced into the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self.0.kind {
            FieldKind::Rational => Ok(self.element(Repr::Rational(BigRational::new(num.clone(), den.clone())))),
            _ => self.from_bigint(num).checked_div(&self.from_bigint(den)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement, FieldError> {
        self.from_ratio(q.numer(), q.denom())
    }

    /// Element of an extension given by its coefficients in `t` (constant first).
    /// On a prime field only the constant coefficient may be nonzero after reduction.
    pub fn from_prime_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        match self.0.kind {
            FieldKind::Rational => Err(FieldError::Unsupported("Q".into())),
            FieldKind::Prime => {
                let mut v: Vec<u64> = coeffs.iter().map(|c| c % self.0.p).collect();
                raw::trim(&mut v);
                match v.len() {
                    0 => Ok(self.zero()),
                    1 => Ok(self.from_u64(v[0])),
                    _ => Err(FieldError::Unsupported(format!("{self} has no generator"))),
                }
            }
            FieldKind::Extension => {
                let p = self.0.p;
                let v: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
                Ok(self.element(Repr::Ext(raw::poly_rem(&v, &self.0.modulus, p))))
            }
        }
    }

    /// The generator `t` of an extension.
    pub fn generator(&self) -> Result<FieldElement, FieldError> {
        self.from_prime_coeffs(&[0, 1])
    }

    /// Uniformly random element of a finite field.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<FieldElement, FieldError> {
        match self.0.kind {
            FieldKind::Rational => Err(FieldError::Unsupported("Q".into())),
            FieldKind::Prime => Ok(self.from_u64(rng.random_range(0..self.0.p))),
            FieldKind::Extension => {
                let coeffs: Vec<u64> = (0..self.0.k).map(|_| rng.random_range(0..self.0.p)).collect();
                self.from_prime_coeffs(&coeffs)
            }
        }
    }

    /// Every element of a finite field, in canonical order (base-`p` digits of the
    /// coefficient vector, constant digit least significant).
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_, FieldError> {
        let q = self
            .order_u64()
            .ok_or_else(|| FieldError::Unsupported(self.to_string()))?;
        let p = self.0.p;
        let k = self.0.k;
        Ok((0..q).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(k);
            for _ in 0..k {
                coeffs.push(idx % p);
                idx /= p;
            }
            self.from_prime_coeffs(&coeffs).expect("finite field")
        }))
    }

    /// Parses `"-1"`, `"12"`, or `"n/d"` and reduces into the field.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement, FieldError> {
        let text = text.trim();
        let parse_int = |s: &str| -> Result<BigInt, FieldError> {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| FieldError::Parse(text.to_string()))
        };
        match text.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(FieldError::Parse(text.to_string()));
                }
                self.from_ratio(&parse_int(n)?, &den)
            }
            None => Ok(self.from_bigint(&parse_int(text)?)),
        }
    }
}

/// A field homomorphism `source -> target` between finite fields of the same
/// characteristic, determined by the image of the source generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    source: Field,
    target: Field,
    image_of_generator: Option<FieldElement>,
}

impl Embedding {
    pub(crate) fn new(source: Field, target: Field, image_of_generator: Option<FieldElement>) -> Self {
        Embedding {
            source,
            target,
            image_of_generator,
        }
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn image_of_generator(&self) -> Option<&FieldElement> {
        self.image_of_generator.as_ref()
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert_eq!(a.field(), &self.source, "element outside the embedding's source");
        let coeffs = a.prime_coeffs().expect("finite field element");
        match &self.image_of_generator {
            None => self.target.from_u64(coeffs.first().copied().unwrap_or(0)),
            Some(g) => coeffs
                .iter()
                .rev()
                .fold(self.target.zero(), |acc, &c| &(&acc * g) + &self.target.from_u64(c)),
        }
    }
}

/// Exact square root of a rational number, if it is a perfect square.
pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Convenience for `build_extension` as a free function.
pub fn build_extension(p: u64, k: usize, seed: u64) -> Result<Field, FieldError> {
    Field::build_extension(p, k, seed)
}

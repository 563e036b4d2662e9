//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored constant term first with no trailing zeros, so the
//! zero polynomial has no coefficients and `degree()` is `None` for it.

mod finite;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

pub use finite::Root;
pub use rational::RationalFactorization;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Highest power first, e.g. `4*x^3 + 26*x^2 + 23*x + 11`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl UniPoly {
    /// Builds a polynomial from coefficients, constant term first.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> UniPoly {
        let mut p = UniPoly {
            field: field.clone(),
            coeffs,
        };
        debug_assert!(p.coeffs.iter().all(|c| c.field() == field));
        p.trim();
        p
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly::new(field, Vec::new())
    }

    pub fn constant(c: FieldElement) -> UniPoly {
        let field = c.field().clone();
        UniPoly::new(&field, vec![c])
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field.one())
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: FieldElement, n: usize) -> UniPoly {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n];
        coeffs.push(c);
        UniPoly::new(&field, coeffs)
    }

    pub fn x(field: &Field) -> UniPoly {
        UniPoly::monomial(field.one(), 1)
    }

    /// The monic polynomial `∏ (x - r)`.
    pub fn from_roots(field: &Field, roots: &[FieldElement]) -> UniPoly {
        roots.iter().fold(UniPoly::one(field), |acc, r| {
            &acc * &UniPoly::new(field, vec![-r, field.one()])
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_u64(i as u64))
            .collect();
        UniPoly::new(&self.field, coeffs)
    }

    /// Substitution `x ↦ x + a`.
    pub fn shift(&self, a: &FieldElement) -> UniPoly {
        let lin = UniPoly::new(&self.field, vec![a.clone(), self.field.one()]);
        self.compose(&lin)
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(&self.field), |acc, c| {
            &(&acc * g) + &UniPoly::constant(c.clone())
        })
    }

    /// Applies `map` to every coefficient, landing in `target`.
    pub fn map_coeffs(&self, target: &Field, map: impl Fn(&FieldElement) -> FieldElement) -> UniPoly {
        UniPoly::new(target, self.coeffs.iter().map(map).collect())
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        let lc = divisor.leading().ok_or(PolyError::ZeroPolynomial)?;
        let lc_inv = lc.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top * &lc_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&factor * c);
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(&self.field, quot), UniPoly::new(&self.field, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly, PolyError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<Option<UniPoly>, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly), PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(f), UniPoly::zero(f));
        let (mut t0, mut t1) = (UniPoly::zero(f), UniPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = r0.leading().expect("nonzero gcd").inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Resultant in the Sylvester convention with the rows of `self` first.
    ///
    /// Computed by the Euclidean recursion
    /// `res(f, g) = (-1)^(mn) lc(g)^(m - deg r) res(g, r)` with `r = f mod g`,
    /// which agrees with the determinant exactly in any field.
    pub fn resultant(&self, other: &UniPoly) -> Result<FieldElement, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let field = &self.field;
        let mut acc = field.one();
        let (mut f, mut g) = (self.clone(), other.clone());
        loop {
            let m = f.degree().expect("nonzero");
            let n = g.degree().expect("nonzero");
            if n == 0 {
                return Ok(&acc * &g.coeffs[0].pow(m as u64));
            }
            if m == 0 {
                return Ok(&acc * &f.coeffs[0].pow(n as u64));
            }
            let r = f.rem(&g)?;
            if r.is_zero() {
                return Ok(field.zero());
            }
            let k = r.degree().expect("nonzero");
            let mut factor = g.leading().expect("nonzero").pow((m - k) as u64);
            if (m * n) % 2 == 1 {
                factor = -factor;
            }
            acc = &acc * &factor;
            (f, g) = (g, r);
        }
    }

    /// Squarefree decomposition `f = lc · ∏ a_i^i` as `(a_i, i)` pairs with
    /// each `a_i` monic, squarefree and non-constant.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        squarefree_rec(&self.monic(), 1, &mut out)?;
        out.sort_by_key(|f| f.1);
        Ok(out)
    }

    /// The product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<UniPoly, PolyError> {
        Ok(self
            .squarefree_decomposition()?
            .into_iter()
            .fold(UniPoly::one(&self.field), |acc, (a, _)| &acc * &a))
    }

    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        Ok(self.squarefree_decomposition()?.iter().all(|(_, m)| *m == 1))
    }

    /// Some `g` with `g² = self`, if one exists over the base field.
    ///
    /// `g` is unique up to sign; the returned one has the canonical (smaller)
    /// leading coefficient for finite fields and a positive one over `Q`.
    pub fn is_perfect_square(&self) -> Result<Option<UniPoly>, PolyError> {
        let lc = self.leading().ok_or(PolyError::ZeroPolynomial)?;
        let lc_root = if let Some(q) = lc.as_rational() {
            match crate::field::rational_sqrt(q) {
                Some(r) => self.field.from_rational(&r)?,
                None => return Ok(None),
            }
        } else {
            match lc.sqrt(0)? {
                Some(r) => r,
                None => return Ok(None),
            }
        };
        let mut g = UniPoly::constant(lc_root);
        for (a, m) in self.squarefree_decomposition()? {
            if m % 2 == 1 {
                return Ok(None);
            }
            for _ in 0..m / 2 {
                g = &g * &a;
            }
        }
        debug_assert_eq!(&g * &g, *self);
        Ok(Some(g))
    }

    /// `self^exp mod modulus`.
    pub fn powmod(&self, exp: &BigUint, modulus: &UniPoly) -> Result<UniPoly, PolyError> {
        let base = self.rem(modulus)?;
        let mut acc = UniPoly::one(&self.field).rem(modulus)?;
        for i in (0..exp.bits()).rev() {
            acc = (&acc * &acc).rem(modulus)?;
            if exp.bit(i) {
                acc = (&acc * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }
}

/// Yun's algorithm, with the p-th-root step for finite fields: after the
/// separable part is peeled off, what remains is a polynomial in `x^p`.
fn squarefree_rec(f: &UniPoly, scale: usize, out: &mut Vec<(UniPoly, usize)>) -> Result<(), PolyError> {
    if f.is_constant() {
        return Ok(());
    }
    let fd = f.derivative();
    if fd.is_zero() {
        return squarefree_rec(&pth_root_poly(f), scale * f.field.characteristic() as usize, out);
    }
    let mut c = f.gcd(&fd)?;
    let mut w = f.exact_div(&c)?.expect("gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?.expect("gcd divides");
        if !z.is_constant() {
            push_factor(out, z.monic(), i * scale);
        }
        c = c.exact_div(&y)?.expect("gcd divides");
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        // only reachable in positive characteristic
        let p = f.field.characteristic() as usize;
        squarefree_rec(&pth_root_poly(&c), scale * p, out)?;
    }
    Ok(())
}

fn push_factor(out: &mut Vec<(UniPoly, usize)>, a: UniPoly, m: usize) {
    match out.iter_mut().find(|(_, k)| *k == m) {
        Some((b, _)) => *b = &*b * &a,
        None => out.push((a, m)),
    }
}

/// For `f(x) = g(x^p)` over a perfect field of characteristic `p`, returns
/// the polynomial `h` with `h^p = f`.
fn pth_root_poly(f: &UniPoly) -> UniPoly {
    let p = f.field.characteristic() as usize;
    let coeffs = f.coeffs.iter().step_by(p).map(|c| c.pth_root()).collect();
    UniPoly::new(&f.field, coeffs)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        UniPoly::new(&self.field, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        UniPoly::new(&self.field, coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.field, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::raw;
use super::{Field, FieldError, FieldKind};

/// Canonical representative of a field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Repr {
    /// Residue in `[0, p)`.
    Prime(u64),
    /// Coefficients in the generator `t`, constant first, trimmed.
    Ext(Vec<u64>),
    /// Always reduced with a positive denominator.
    Rational(BigRational),
}

/// An element of a [`Field`]. Equality is representational equality within
/// the same field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

/// Orders by canonical representative; only meaningful within one field.
impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            // graded: shorter coefficient vectors first, then by high coefficients
            (Repr::Ext(a), Repr::Ext(b)) => a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())),
            (a, b) => a.cmp(b),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Ext(c) => {
                if c.iter().filter(|&&v| v != 0).count() > 1 {
                    write!(f, "(")?;
                    super::write_raw_poly(f, c, "t")?;
                    write!(f, ")")
                } else {
                    super::write_raw_poly(f, c, "t")
                }
            }
        }
    }
}

impl FieldElement {
    pub(crate) fn from_parts(field: Field, repr: Repr) -> Self {
        FieldElement { field, repr }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 0,
            Repr::Ext(c) => c.is_empty(),
            Repr::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime(v) => *v == 1,
            Repr::Ext(c) => c.len() == 1 && c[0] == 1,
            Repr::Rational(q) => q.is_one(),
        }
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn as_u64(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Coefficients over `F_p` in the generator (a single residue for prime fields).
    pub fn prime_coeffs(&self) -> Option<Vec<u64>> {
        match &self.repr {
            Repr::Prime(0) => Some(Vec::new()),
            Repr::Prime(v) => Some(vec![*v]),
            Repr::Ext(c) => Some(c.clone()),
            Repr::Rational(_) => None,
        }
    }

    /// The residue if this element lies in the prime subfield `F_p`.
    pub fn prime_subfield_value(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            Repr::Ext(c) if c.len() <= 1 => Some(c.first().copied().unwrap_or(0)),
            _ => None,
        }
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    fn with(&self, repr: Repr) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let p = self.field.spec().p;
        Ok(self.with(match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(raw::add_mod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(raw::poly_add(a, b, p)),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            _ => unreachable!("representation matches field kind"),
        }))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let p = self.field.spec().p;
        Ok(self.with(match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(raw::sub_mod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(raw::poly_sub(a, b, p)),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a - b),
            _ => unreachable!("representation matches field kind"),
        }))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        let spec = self.field.spec();
        let p = spec.p;
        Ok(self.with(match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(raw::mul_mod(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(raw::poly_mulmod(a, b, &spec.modulus, p)),
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            _ => unreachable!("representation matches field kind"),
        }))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let spec = self.field.spec();
        Ok(self.with(match &self.repr {
            Repr::Prime(a) => Repr::Prime(raw::inv_mod(*a, spec.p).expect("nonzero")),
            Repr::Ext(a) => Repr::Ext(raw::poly_inv_mod(a, &spec.modulus, spec.p).expect("modulus is irreducible")),
            Repr::Rational(q) => Repr::Rational(q.recip()),
        }))
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        self.pow_big(&BigUint::from(exp))
    }

    pub fn pow_big(&self, exp: &BigUint) -> FieldElement {
        let mut acc = self.field.one();
        for i in (0..exp.bits()).rev() {
            acc = &acc * &acc;
            if exp.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Inverse Frobenius `a ↦ a^(1/p)`; the identity on `F_p` and `Q`.
    pub fn pth_root(&self) -> FieldElement {
        match self.field.kind() {
            FieldKind::Extension => {
                let spec = self.field.spec();
                let exp = BigUint::from(spec.p).pow(spec.k as u32 - 1);
                self.pow_big(&exp)
            }
            _ => self.clone(),
        }
    }

    /// Whether the element is a square in its own field.
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        match &self.repr {
            Repr::Rational(q) => super::rational_sqrt(q).is_some(),
            _ => {
                let q = self.field.order().expect("finite field");
                self.pow_big(&((q - 1u32) >> 1)).is_one()
            }
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.repr, Repr::Rational(q) if q.is_negative())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.spec().p;
        self.with(match &self.repr {
            Repr::Prime(a) => Repr::Prime(raw::neg_mod(*a, p)),
            Repr::Ext(a) => Repr::Ext(a.iter().map(|&c| raw::neg_mod(c, p)).collect()),
            Repr::Rational(q) => Repr::Rational(-q),
        })
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

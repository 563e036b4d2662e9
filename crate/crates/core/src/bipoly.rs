//! Sparse polynomials in `x, y` and homogeneous polynomials in `x, y, z`.
//!
//! Both store only nonzero coefficients in ordered maps, so equality is
//! structural and rendering is deterministic. Rendering uses graded order:
//! higher total degree first, and within a degree higher powers of `x` first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiPolyError {
    #[error("term x^{i} y^{j} exceeds homogenizing degree {degree}")]
    DegreeTooLow { i: u32, j: u32, degree: u32 },
    #[error("variable index {0} out of range")]
    BadVariable(usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: Field,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &FieldElement, exps: &[(char, u32)]) -> fmt::Result {
    let vars: Vec<String> = exps
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if vars.is_empty() {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{}", vars.join("*"))
    } else {
        write!(f, "{c}*{}", vars.join("*"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ordered = self.graded_terms();
        if ordered.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in ordered.into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, c, &[('x', i), ('y', j)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl BiPoly {
    pub fn zero(field: &Field) -> BiPoly {
        BiPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `((i, j), c)` pairs meaning `c x^i y^j`; repeated
    /// monomials are summed.
    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>) -> BiPoly {
        let mut p = BiPoly::zero(field);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn constant(c: FieldElement) -> BiPoly {
        let field = c.field().clone();
        BiPoly::from_terms(&field, [((0, 0), c)])
    }

    pub fn x(field: &Field) -> BiPoly {
        BiPoly::from_terms(field, [((1, 0), field.one())])
    }

    pub fn y(field: &Field) -> BiPoly {
        BiPoly::from_terms(field, [((0, 1), field.one())])
    }

    /// A polynomial in `x` alone.
    pub fn from_unipoly(p: &UniPoly) -> BiPoly {
        BiPoly::from_terms(
            p.field(),
            p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    fn add_term(&mut self, e: (u32, u32), c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), FieldElement> {
        &self.terms
    }

    /// Terms in display order.
    pub fn graded_terms(&self) -> Vec<((u32, u32), &FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|((i, j), _)| std::cmp::Reverse((i + j, *i)));
        v
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn scale(&self, c: &FieldElement) -> BiPoly {
        BiPoly::from_terms(&self.field, self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    pub fn partial_x(&self) -> BiPoly {
        BiPoly::from_terms(
            &self.field,
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c * &self.field.from_u64(*i as u64))),
        )
    }

    pub fn partial_y(&self) -> BiPoly {
        BiPoly::from_terms(
            &self.field,
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c * &self.field.from_u64(*j as u64))),
        )
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.terms.iter().fold(self.field.zero(), |acc, ((i, j), c)| {
            &acc + &(&(c * &x.pow(*i as u64)) * &y.pow(*j as u64))
        })
    }

    /// The coefficient of `y^j`, as a polynomial in `x`.
    pub fn coeff_of_y(&self, j: u32) -> UniPoly {
        let deg = self.degree_x().unwrap_or(0) as usize;
        let mut coeffs = vec![self.field.zero(); deg + 1];
        for ((i, jj), c) in &self.terms {
            if *jj == j {
                coeffs[*i as usize] = c.clone();
            }
        }
        UniPoly::new(&self.field, coeffs)
    }

    /// `f(x, 0)`.
    pub fn restrict_y0(&self) -> UniPoly {
        self.coeff_of_y(0)
    }

    /// Substitution `x ↦ x + a`.
    pub fn shift_x(&self, a: &FieldElement) -> BiPoly {
        let max_j = self.degree_y().unwrap_or(0);
        let mut out = BiPoly::zero(&self.field);
        for j in 0..=max_j {
            let shifted = self.coeff_of_y(j).shift(a);
            for (i, c) in shifted.coeffs().iter().enumerate() {
                out.add_term((i as u32, j), c.clone());
            }
        }
        out
    }

    /// `f(x, -y) = f(x, y)`.
    pub fn is_even_in_y(&self) -> bool {
        self.terms.keys().all(|(_, j)| j % 2 == 0)
    }

    pub fn map_coeffs(&self, target: &Field, map: impl Fn(&FieldElement) -> FieldElement) -> BiPoly {
        BiPoly::from_terms(target, self.terms.iter().map(|(e, c)| (*e, map(c))))
    }

    /// `z^degree · f(x/z, y/z)`.
    pub fn homogenize(&self, degree: u32) -> Result<HomPoly, BiPolyError> {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            if i + j > degree {
                return Err(BiPolyError::DegreeTooLow { i: *i, j: *j, degree });
            }
            terms.insert([*i, *j, degree - i - j], c.clone());
        }
        Ok(HomPoly {
            field: self.field.clone(),
            degree,
            terms,
        })
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(&self.field, self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(&self.field);
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

/// A homogeneous polynomial in `x, y, z` of fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct HomPoly {
    field: Field,
    degree: u32,
    terms: BTreeMap<[u32; 3], FieldElement>,
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // lexicographic in (x, y) exponents, descending
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, c, &[('x', e[0]), ('y', e[1]), ('z', e[2])])?;
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{}]({self})", self.degree)
    }
}

impl HomPoly {
    pub fn zero(field: &Field, degree: u32) -> HomPoly {
        HomPoly {
            field: field.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, e: [u32; 3], c: FieldElement) {
        debug_assert_eq!(e.iter().sum::<u32>(), self.degree);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Partial derivative in variable `var` (0 = x, 1 = y, 2 = z). The
    /// result has degree one less (saturating at 0).
    pub fn partial(&self, var: usize) -> Result<HomPoly, BiPolyError> {
        if var > 2 {
            return Err(BiPolyError::BadVariable(var));
        }
        let mut out = HomPoly::zero(&self.field, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = *e;
            d[var] -= 1;
            out.add_term(d, c * &self.field.from_u64(e[var] as u64));
        }
        Ok(out)
    }

    /// Multiplication by the variable `var`.
    pub fn mul_var(&self, var: usize) -> Result<HomPoly, BiPolyError> {
        if var > 2 {
            return Err(BiPolyError::BadVariable(var));
        }
        let mut out = HomPoly::zero(&self.field, self.degree + 1);
        for (e, c) in &self.terms {
            let mut d = *e;
            d[var] += 1;
            out.add_term(d, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> HomPoly {
        let mut out = HomPoly::zero(&self.field, self.degree);
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    pub fn eval(&self, point: [&FieldElement; 3]) -> FieldElement {
        self.terms.iter().fold(self.field.zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for v in 0..3 {
                if e[v] > 0 {
                    t = &t * &point[v].pow(e[v] as u64);
                }
            }
            &acc + &t
        })
    }

    /// Sets variable `var` to 1, keeping the other two in order
    /// (e.g. `var = 2` gives `f(x, y)`, `var = 0` gives a polynomial in `(y, z)`).
    pub fn dehomogenize(&self, var: usize) -> Result<BiPoly, BiPolyError> {
        if var > 2 {
            return Err(BiPolyError::BadVariable(var));
        }
        let keep: Vec<usize> = (0..3).filter(|&v| v != var).collect();
        Ok(BiPoly::from_terms(
            &self.field,
            self.terms.iter().map(|(e, c)| ((e[keep[0]], e[keep[1]]), c.clone())),
        ))
    }

    /// Checks `deg · F = x F_x + y F_y + z F_z` as a polynomial identity.
    pub fn euler_identity_holds(&self) -> bool {
        let lhs = self.scale(&self.field.from_u64(self.degree as u64));
        let mut rhs = HomPoly::zero(&self.field, self.degree);
        for v in 0..3 {
            let term = self.partial(v).and_then(|d| d.mul_var(v)).expect("valid variable");
            if term.degree == self.degree {
                for (e, c) in term.terms {
                    rhs.add_term(e, c);
                }
            }
        }
        lhs == rhs
    }
}

impl Add for &HomPoly {
    type Output = HomPoly;
    fn add(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degrees");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &HomPoly {
    type Output = HomPoly;
    fn mul(self, rhs: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(&self.field, self.degree + rhs.degree);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f31() -> Field {
        Field::prime(31).unwrap()
    }

    fn poly(field: &Field, terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(field, terms.iter().map(|&(e, c)| (e, field.from_i64(c))))
    }

    #[test]
    fn zero_is_identity_and_unit_scale() {
        let f = f31();
        let p = poly(&f, &[((2, 1), 3), ((0, 4), 1)]);
        assert_eq!(&p + &BiPoly::zero(&f), p);
        assert_eq!(p.scale(&f.one()), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn shape_a_product_expands() {
        // (y^2 + x^2 + 1)(y^2 - 4x^4 + 1) over Q
        let q = Field::rational();
        let a = poly(&q, &[((0, 2), 1), ((2, 0), 1), ((0, 0), 1)]);
        let b = poly(&q, &[((0, 2), 1), ((4, 0), -4), ((0, 0), 1)]);
        let prod = &a * &b;
        let expected = poly(
            &q,
            &[
                ((6, 0), -4),
                ((4, 2), -4),
                ((4, 0), -4),
                ((2, 2), 1),
                ((0, 4), 1),
                ((2, 0), 1),
                ((0, 2), 2),
                ((0, 0), 1),
            ],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn display_is_graded() {
        let f = f31();
        let p = poly(
            &f,
            &[((0, 0), 28), ((6, 0), 16), ((4, 2), 27), ((0, 4), 1), ((5, 0), 22)],
        );
        assert_eq!(p.to_string(), "16*x^6 + 27*x^4*y^2 + 22*x^5 + y^4 + 28");
        assert_eq!(BiPoly::zero(&f).to_string(), "0");
    }

    #[test]
    fn partials() {
        let f = f31();
        let only_y = poly(&f, &[((0, 4), 1), ((0, 2), 5)]);
        assert!(only_y.partial_x().is_zero());
        let p = poly(&f, &[((3, 2), 2)]);
        assert_eq!(p.partial_x(), poly(&f, &[((2, 2), 6)]));
        assert_eq!(p.partial_y(), poly(&f, &[((3, 1), 4)]));
        let hp = p.homogenize(5).unwrap();
        assert!(hp.partial(2).unwrap().is_zero());
    }

    #[test]
    fn homogenize_round_trip() {
        let f = f31();
        let one = BiPoly::constant(f.one());
        let h = one.homogenize(6).unwrap();
        assert_eq!(h.terms().keys().collect::<Vec<_>>(), vec![&[0, 0, 6]]);
        let p = poly(&f, &[((6, 0), 1), ((1, 1), 3), ((0, 0), 2)]);
        assert_eq!(p.homogenize(6).unwrap().dehomogenize(2).unwrap(), p);
        assert!(matches!(
            p.homogenize(5),
            Err(BiPolyError::DegreeTooLow { i: 6, j: 0, degree: 5 })
        ));
    }

    #[test]
    fn shift_round_trip() {
        let f = f31();
        let p = poly(&f, &[((3, 2), 2), ((1, 0), 7), ((0, 4), 1)]);
        assert_eq!(p.shift_x(&f.zero()), p);
        let a = f.from_i64(9);
        assert_eq!(p.shift_x(&a).shift_x(&-&a), p);
        // values agree: p(x + a, y) at x = 2 equals p(11, y)
        let y = f.from_i64(5);
        assert_eq!(p.shift_x(&a).eval(&f.from_i64(2), &y), p.eval(&f.from_i64(11), &y));
    }

    #[test]
    fn cusp_is_not_euler_special() {
        // Euler relation holds for any form, including a non-Howe cusp
        let f = f31();
        let cusp = poly(&f, &[((0, 2), 1), ((3, 0), -1)]).homogenize(3).unwrap();
        assert!(cusp.euler_identity_holds());
    }

    fn arb_bipoly() -> impl Strategy<Value = Vec<((u32, u32), i64)>> {
        prop::collection::vec(((0u32..4, 0u32..4), -30i64..30), 0..6)
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            let f = Field::prime(1009).unwrap();
            let (a, b, c) = (poly(&f, &a), poly(&f, &b), poly(&f, &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn euler_relation_for_random_forms(a in arb_bipoly()) {
            let f = Field::prime(31).unwrap();
            let h = poly(&f, &a).homogenize(8).unwrap();
            prop_assert!(h.euler_identity_holds());
        }

        #[test]
        fn eval_agrees_with_homogeneous_eval(a in arb_bipoly(), x in 0i64..31, y in 0i64..31) {
            let f = Field::prime(31).unwrap();
            let p = poly(&f, &a);
            let h = p.homogenize(6).unwrap();
            let (x, y) = (f.from_i64(x), f.from_i64(y));
            prop_assert_eq!(p.eval(&x, &y), h.eval([&x, &y, &f.one()]));
        }
    }
}

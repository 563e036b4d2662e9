//! Absolute irreducibility of the sextic.
//!
//! A polynomial `f = y^4 + B(x) y^2 + C(x)` with `c42 = -4`, `c04 = 1` and
//! `f(x, 0) != 0` can only factor in two ways:
//!
//! * shape A: `(y^2 + P(x)) (y^2 + Q(x))`;
//! * shape B: `H1 H2` with
//!   `H1 = y^2 + (2x^2 + a1 x + a2) y + (a3 x^3 + a4 x^2 + a5 x + a6)` and
//!   `H2` the same with the `y`-linear term negated.
//!
//! Shape A exists iff `B^2 - 4C` is a square in `k[x]`. For shape B, `a3` and
//! `a6` are square roots of `c60` and `c00`; each of the four sign choices
//! fixes the remaining `a_i` and leaves five residuals `q1..q5` that must all
//! vanish. Three quadratic factors always regroup into shape A.
//!
//! Two entry points: [`is_absolutely_irreducible`] works from ramification
//! data (square roots are the differences `σi - τi`), and
//! [`is_absolutely_irreducible_poly`] works on the coefficients of an arbitrary
//! admissible polynomial, for synthetic inputs.

use std::fmt;

use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::field::{rational_sqrt, Embedding, Field, FieldElement, FieldError};
use crate::howe::{sextic_coeffs, RamificationData, SexticCoeffs, SexticModel};
use crate::unipoly::{PolyError, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrreducibleError {
    #[error("polynomial is outside the analyzed family: {0}")]
    NotAdmissible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `f = h1 · h2`, verified by multiplying back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub h1: BiPoly,
    pub h2: BiPoly,
}

/// One sign choice for `(a3, a6)` (and `a4` when `a3 = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeBCase {
    /// `B1..B4` for `(a3, a6) = (±r3, ±r6)` in the order `(+,+), (-,+),
    /// (+,-), (-,-)`; when `a3 = 0`, `B0(s4,s6)` with the signs of `a4, a6`.
    pub label: String,
    pub a: [FieldElement; 6],
    pub residuals: [FieldElement; 5],
}

impl ShapeBCase {
    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(FieldElement::is_zero)
    }
}

impl fmt::Display for ShapeBCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: q = [", self.label)?;
        for (k, q) in self.residuals.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeBWitness {
    pub label: String,
    /// `a1..a6` read off `h1` in the input's coordinates.
    pub a: [FieldElement; 6],
    pub factors: Factorization,
}

/// Every attempted shape-B case and the first that multiplies back, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeBReport {
    /// The `x ↦ x + shift` applied before solving.
    pub shift: FieldElement,
    pub cases: Vec<ShapeBCase>,
    pub witness: Option<ShapeBWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub shape_a_witness: Option<Factorization>,
    pub shape_b_witness: Option<ShapeBWitness>,
    pub shape_b_cases: Vec<ShapeBCase>,
}

impl IrreducibilityVerdict {
    fn new(shape_a: Option<Factorization>, shape_b: ShapeBReport) -> Self {
        IrreducibilityVerdict {
            irreducible: shape_a.is_none() && shape_b.witness.is_none(),
            shape_a_witness: shape_a,
            shape_b_witness: shape_b.witness,
            shape_b_cases: shape_b.cases,
        }
    }
}

fn y_squared_plus(p: &UniPoly) -> BiPoly {
    let field = p.field();
    &BiPoly::from_terms(field, [((0, 2), field.one())]) + &BiPoly::from_unipoly(p)
}

/// Splits `y^4 + B y^2 + C` given a square root `D` of `B^2 - 4C`.
fn shape_a_from_root(f: &BiPoly, b: &UniPoly, d: &UniPoly) -> Factorization {
    let half = f.field().from_u64(2).inv().expect("p >= 5");
    let p = (b + d).scale(&half);
    let q = (b - d).scale(&half);
    let (p, q) = if p.degree() <= q.degree() { (p, q) } else { (q, p) };
    let out = Factorization {
        h1: y_squared_plus(&p),
        h2: y_squared_plus(&q),
    };
    assert_eq!(&out.h1 * &out.h2, *f, "shape A witness does not multiply back");
    out
}

/// Shape A on Howe data: `B^2 - 4C = 16 φ1 φ2`, which is never a square since
/// `φ1 φ2` has eight distinct roots.
pub fn shape_a_test(rd: &RamificationData) -> Result<Option<Factorization>, IrreducibleError> {
    let field = rd.field();
    let disc = (&rd.phi1() * &rd.phi2()).scale(&field.from_u64(16));
    let Some(d) = disc.is_perfect_square()? else {
        return Ok(None);
    };
    let b = (&rd.phi1() + &rd.phi2()).scale(&field.from_i64(-2));
    Ok(Some(shape_a_from_root(SexticModel::new(rd).f(), &b, &d)))
}

/// Shape A on the coefficients of an admissible `f`.
pub fn shape_a_test_poly(f: &BiPoly) -> Result<Option<Factorization>, IrreducibleError> {
    admissible(f)?;
    let b = f.coeff_of_y(2);
    let c = f.coeff_of_y(0);
    let disc = &(&b * &b) - &c.scale(&f.field().from_u64(4));
    // deg B = 4 with leading -4 and deg C <= 6, so disc has leading 16 and the
    // square root of the leading coefficient is always in the base field
    debug_assert_eq!(disc.leading(), Some(&f.field().from_u64(16)));
    Ok(disc.is_perfect_square()?.map(|d| shape_a_from_root(f, &b, &d)))
}

/// Solves the shape-B coefficient equations for the given `a3, a6` (and `a4`
/// when `a3 = 0`) and returns `a1..a6` with `q1..q5`.
fn solve_shape_b(
    c: &SexticCoeffs,
    a3: FieldElement,
    a6: FieldElement,
    a4_if_a3_zero: Option<FieldElement>,
) -> ([FieldElement; 6], [FieldElement; 5]) {
    let field = a3.field().clone();
    let two = field.from_u64(2);
    let four = field.from_u64(4);
    let a4 = match a4_if_a3_zero {
        Some(a4) => a4,
        None => &c.c50 / &(&two * &a3),
    };
    let a1 = -&(&(&c.c32 - &(&two * &a3)) / &four);
    let a2 = &(&(&(&two * &a4) - &(&a1 * &a1)) - &c.c22) / &four;
    let a5 = &c.c10 / &(&two * &a6);
    let q1 = &(&(&two * &(&a3 * &a5)) + &(&a4 * &a4)) - &c.c40;
    let q2 = &(&(&two * &(&a3 * &a6)) + &(&two * &(&a4 * &a5))) - &c.c30;
    let q3 = &(&(&two * &a5) - &(&two * &(&a1 * &a2))) - &c.c12;
    let q4 = &(&(&two * &(&a4 * &a6)) + &(&a5 * &a5)) - &c.c20;
    let q5 = &(&(&two * &a6) - &(&a2 * &a2)) - &c.c02;
    ([a1, a2, a3, a4, a5, a6], [q1, q2, q3, q4, q5])
}

/// The four sign cases. `r3, r6` are square roots of `c60, c00` (`r6 != 0`)
/// and `r40` of `c40`, used only when `r3 = 0`.
fn shape_b_cases(c: &SexticCoeffs, r3: &FieldElement, r6: &FieldElement, r40: &FieldElement) -> Vec<ShapeBCase> {
    assert!(!r6.is_zero(), "a6 must be nonzero");
    let signed = |v: &FieldElement, plus: bool| if plus { v.clone() } else { -v };
    let mut cases = Vec::with_capacity(4);
    for (k, (s3, s6)) in [(true, true), (false, true), (true, false), (false, false)]
        .into_iter()
        .enumerate()
    {
        let (label, a4) = if r3.is_zero() {
            let sign = |s| if s { '+' } else { '-' };
            (format!("B0({},{})", sign(s3), sign(s6)), Some(signed(r40, s3)))
        } else {
            (format!("B{}", k + 1), None)
        };
        let (a, residuals) = solve_shape_b(c, signed(r3, s3), signed(r6, s6), a4);
        cases.push(ShapeBCase { label, a, residuals });
    }
    cases
}

fn shape_b_factors(field: &Field, a: &[FieldElement; 6]) -> Factorization {
    let linear = BiPoly::from_terms(
        field,
        [
            ((2, 1), field.from_u64(2)),
            ((1, 1), a[0].clone()),
            ((0, 1), a[1].clone()),
        ],
    );
    let rest = BiPoly::from_terms(
        field,
        [
            ((0, 2), field.one()),
            ((3, 0), a[2].clone()),
            ((2, 0), a[3].clone()),
            ((1, 0), a[4].clone()),
            ((0, 0), a[5].clone()),
        ],
    );
    Factorization {
        h1: &rest + &linear,
        h2: &rest - &linear,
    }
}

/// Reads `a1..a6` off a shape-B `h1`.
fn shape_b_params(h1: &BiPoly) -> [FieldElement; 6] {
    [
        h1.coeff(1, 1),
        h1.coeff(0, 1),
        h1.coeff(3, 0),
        h1.coeff(2, 0),
        h1.coeff(1, 0),
        h1.coeff(0, 0),
    ]
}

/// Picks the first case whose residuals vanish and whose factors, moved back
/// by `x ↦ x - shift`, multiply to `f`.
fn first_witness(f: &BiPoly, shift: &FieldElement, cases: &[ShapeBCase]) -> Option<ShapeBWitness> {
    let back = -shift;
    cases.iter().filter(|c| c.residuals_vanish()).find_map(|case| {
        let t = shape_b_factors(f.field(), &case.a);
        let factors = Factorization {
            h1: t.h1.shift_x(&back),
            h2: t.h2.shift_x(&back),
        };
        (&factors.h1 * &factors.h2 == *f).then(|| ShapeBWitness {
            label: case.label.clone(),
            a: shape_b_params(&factors.h1),
            factors,
        })
    })
}

/// Shape B on Howe data, after moving `α1` to 0 so that `σ4 = 0 != τ4`.
pub fn shape_b_test(rd: &RamificationData) -> ShapeBReport {
    let shift = rd.alphas()[0].clone();
    let t = rd.translated(&shift);
    let c = sextic_coeffs(&t);
    let [d1, d2, _, d4] = t.differences();
    let cases = shape_b_cases(&c, &d1, &d4, &d2);
    let witness = first_witness(SexticModel::new(rd).f(), &shift, &cases);
    ShapeBReport { shift, cases, witness }
}

fn sqrt_in(v: &FieldElement, seed: u64) -> Result<Option<FieldElement>, IrreducibleError> {
    if v.field().is_rational() {
        let q = v.as_rational().expect("rational field");
        return Ok(match rational_sqrt(q) {
            Some(r) => Some(v.field().from_rational(&r)?),
            None => None,
        });
    }
    Ok(v.sqrt(seed)?)
}

/// Shape B on the coefficients of an admissible `f`.
///
/// Square roots of `c60`, `c00`, `c40` are taken in the base field; over a
/// finite field where one is missing, the search moves to the quadratic
/// extension (built with `seed`) and the witness lives there.
pub fn shape_b_test_poly(f: &BiPoly, seed: u64) -> Result<ShapeBReport, IrreducibleError> {
    admissible(f)?;
    if let Some(report) = shape_b_over(f, seed)? {
        return Ok(report);
    }
    let field = f.field();
    if !field.is_finite() {
        return Err(IrreducibleError::Unsupported(
            "shape B needs an irrational square root over Q".into(),
        ));
    }
    let ext = Field::build_extension(field.characteristic(), 2 * field.degree(), seed)?;
    let e: Embedding = field.embedding_into(&ext, seed)?;
    let lifted = f.map_coeffs(&ext, |c| e.apply(c));
    Ok(shape_b_over(&lifted, seed)?.expect("every base element is a square in the quadratic extension"))
}

fn shape_b_over(f: &BiPoly, seed: u64) -> Result<Option<ShapeBReport>, IrreducibleError> {
    let field = f.field().clone();
    let f0 = f.restrict_y0();
    let Some(shift) = nonroot(&f0)? else {
        return Ok(None);
    };
    let moved = f.shift_x(&shift);
    let c = SexticCoeffs::from_bipoly(&moved).expect("shift preserves the monomial support");
    let roots = [&c.c60, &c.c00, &c.c40].map(|v| sqrt_in(v, seed));
    let [r3, r6, r40] = roots;
    let (Some(r3), Some(r6)) = (r3?, r6?) else {
        return Ok(None);
    };
    let r40 = if r3.is_zero() {
        match r40? {
            Some(r) => r,
            None => return Ok(None),
        }
    } else {
        field.zero()
    };
    let cases = shape_b_cases(&c, &r3, &r6, &r40);
    let witness = first_witness(f, &shift, &cases);
    Ok(Some(ShapeBReport { shift, cases, witness }))
}

/// A small field element where `g` does not vanish, if the field has one
/// among its first seven elements.
fn nonroot(g: &UniPoly) -> Result<Option<FieldElement>, IrreducibleError> {
    let field = g.field();
    let candidates: Vec<FieldElement> = if field.is_finite() {
        field.elements()?.take(7).collect()
    } else {
        (0..7).map(|n| field.from_u64(n)).collect()
    };
    Ok(candidates.into_iter().find(|v| !g.eval(v).is_zero()))
}

fn admissible(f: &BiPoly) -> Result<SexticCoeffs, IrreducibleError> {
    let reject = |why: &str| IrreducibleError::NotAdmissible(why.into());
    let c = SexticCoeffs::from_bipoly(f).ok_or_else(|| reject("term outside the 13 sextic monomials"))?;
    if c.c42 != f.field().from_i64(-4) {
        return Err(reject("coefficient of x^4 y^2 is not -4"));
    }
    if !c.c04.is_one() {
        return Err(reject("coefficient of y^4 is not 1"));
    }
    if f.restrict_y0().is_zero() {
        return Err(reject("f(x, 0) = 0"));
    }
    Ok(c)
}

/// Runs both shape tests on the Howe sextic of `rd`.
pub fn is_absolutely_irreducible(rd: &RamificationData) -> Result<IrreducibilityVerdict, IrreducibleError> {
    // f(x, 0) = h1^2 and h1 = φ2 - φ1 is nonzero for distinct points
    assert!(
        !SexticModel::new(rd).f().restrict_y0().is_zero(),
        "f(x, 0) vanishes on validated data"
    );
    Ok(IrreducibilityVerdict::new(shape_a_test(rd)?, shape_b_test(rd)))
}

/// Runs both shape tests on an admissible polynomial.
///
/// When shape A already factors `f`, a shape-B search that would need an
/// irrational square root over `Q` is skipped (its case list is left empty)
/// instead of failing, since the verdict is settled.
pub fn is_absolutely_irreducible_poly(f: &BiPoly, seed: u64) -> Result<IrreducibilityVerdict, IrreducibleError> {
    let shape_a = shape_a_test_poly(f)?;
    let shape_b = match shape_b_test_poly(f, seed) {
        Err(IrreducibleError::Unsupported(_)) if shape_a.is_some() => ShapeBReport {
            shift: f.field().zero(),
            cases: Vec::new(),
            witness: None,
        },
        other => other?,
    };
    Ok(IrreducibilityVerdict::new(shape_a, shape_b))
}

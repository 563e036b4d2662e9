//! The plane sextic model of a genus-5 Howe curve.
//!
//! Given genus-1 curves `C1: y1^2 = φ1(x)` and `C2: y2^2 = φ2(x)` with
//! `φ1 = ∏(x - αi)`, `φ2 = ∏(x - βj)` and all eight roots distinct, the fiber
//! product is birational to the plane curve
//!
//! ```text
//! f(x, y) = y^4 - 2(φ1 + φ2) y^2 + (φ1 - φ2)^2 = 0
//! ```
//!
//! via `(x, y1, y2) ↦ (x, y1 + y2)`. The 13 coefficients of `f` are closed
//! forms in the elementary symmetric functions `σi` of the `α`s and `τi` of
//! the `β`s; [`sextic_coeffs`] evaluates those forms and [`assemble_sextic`]
//! multiplies out the defining expression, so the two can be compared.

use std::fmt;

use thiserror::Error;

use crate::bipoly::{BiPoly, HomPoly};
use crate::field::{Field, FieldElement, FieldError};
use crate::unipoly::{PolyError, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoweError {
    #[error("duplicate ramification point: {first} = {second} = {value}")]
    DuplicateRamificationPoint {
        first: String,
        second: String,
        value: String,
    },
    #[error("ramification point {0} is at infinity; apply a Möbius normalization first")]
    InfinityNotSupported(String),
    #[error("ramification points lie in different fields")]
    MixedFields,
    #[error("no Möbius normalization keeps all eight points finite")]
    NormalizationImpossible,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("operation not supported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Labels of the eight slots, `alpha1..alpha4, beta1..beta4`.
pub const POINT_NAMES: [&str; 8] = [
    "alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4",
];

/// Validated ramification data with its elementary symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationData {
    field: Field,
    alphas: [FieldElement; 4],
    betas: [FieldElement; 4],
    sigma: [FieldElement; 4],
    tau: [FieldElement; 4],
}

fn elementary_symmetric(field: &Field, xs: &[FieldElement; 4]) -> [FieldElement; 4] {
    // e_k accumulated root by root: e_k <- e_k + r e_{k-1}
    let mut e = [field.one(), field.zero(), field.zero(), field.zero(), field.zero()];
    for r in xs {
        for k in (1..5).rev() {
            e[k] = &e[k] + &(r * &e[k - 1]);
        }
    }
    [e[1].clone(), e[2].clone(), e[3].clone(), e[4].clone()]
}

impl RamificationData {
    pub fn new(alphas: [FieldElement; 4], betas: [FieldElement; 4]) -> Result<Self, HoweError> {
        let field = alphas[0].field().clone();
        let all: Vec<&FieldElement> = alphas.iter().chain(betas.iter()).collect();
        if all.iter().any(|v| v.field() != &field) {
            return Err(HoweError::MixedFields);
        }
        for i in 0..8 {
            for j in i + 1..8 {
                if all[i] == all[j] {
                    return Err(HoweError::DuplicateRamificationPoint {
                        first: POINT_NAMES[i].into(),
                        second: POINT_NAMES[j].into(),
                        value: all[i].to_string(),
                    });
                }
            }
        }
        let sigma = elementary_symmetric(&field, &alphas);
        let tau = elementary_symmetric(&field, &betas);
        Ok(RamificationData {
            field,
            alphas,
            betas,
            sigma,
            tau,
        })
    }

    /// Accepts points of `P^1`, with `None` standing for infinity, which is
    /// rejected.
    pub fn from_projective(points: [Option<FieldElement>; 8]) -> Result<Self, HoweError> {
        if let Some(i) = points.iter().position(Option::is_none) {
            return Err(HoweError::InfinityNotSupported(POINT_NAMES[i].into()));
        }
        let v: Vec<FieldElement> = points.into_iter().map(|p| p.expect("checked")).collect();
        RamificationData::new(
            [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
            [v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()],
        )
    }

    /// Convenience constructor from integers reduced into `field`.
    pub fn from_i64s(field: &Field, alphas: [i64; 4], betas: [i64; 4]) -> Result<Self, HoweError> {
        RamificationData::new(alphas.map(|a| field.from_i64(a)), betas.map(|b| field.from_i64(b)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alphas(&self) -> &[FieldElement; 4] {
        &self.alphas
    }

    pub fn betas(&self) -> &[FieldElement; 4] {
        &self.betas
    }

    /// All eight points in slot order.
    pub fn points(&self) -> Vec<FieldElement> {
        self.alphas.iter().chain(self.betas.iter()).cloned().collect()
    }

    /// `(σ1, σ2, σ3, σ4)`.
    pub fn sigma(&self) -> &[FieldElement; 4] {
        &self.sigma
    }

    /// `(τ1, τ2, τ3, τ4)`.
    pub fn tau(&self) -> &[FieldElement; 4] {
        &self.tau
    }

    /// `σi - τi` for `i = 1..4`.
    pub fn differences(&self) -> [FieldElement; 4] {
        [0, 1, 2, 3].map(|i| &self.sigma[i] - &self.tau[i])
    }

    pub fn phi1(&self) -> UniPoly {
        UniPoly::from_roots(&self.field, &self.alphas)
    }

    pub fn phi2(&self) -> UniPoly {
        UniPoly::from_roots(&self.field, &self.betas)
    }

    /// Data for `f(x + c, y)`: every point moves to `point - c`.
    pub fn translated(&self, c: &FieldElement) -> RamificationData {
        RamificationData::new(self.alphas.clone().map(|a| &a - c), self.betas.clone().map(|b| &b - c))
            .expect("translation preserves distinctness")
    }

    /// The roles of `φ1` and `φ2` exchanged.
    pub fn swapped(&self) -> RamificationData {
        RamificationData {
            field: self.field.clone(),
            alphas: self.betas.clone(),
            betas: self.alphas.clone(),
            sigma: self.tau.clone(),
            tau: self.sigma.clone(),
        }
    }
}

/// The 13 possibly nonzero coefficients `c_ij` of `x^i y^j` in `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticCoeffs {
    pub c60: FieldElement,
    pub c50: FieldElement,
    pub c42: FieldElement,
    pub c40: FieldElement,
    pub c32: FieldElement,
    pub c30: FieldElement,
    pub c22: FieldElement,
    pub c20: FieldElement,
    pub c12: FieldElement,
    pub c10: FieldElement,
    pub c04: FieldElement,
    pub c02: FieldElement,
    pub c00: FieldElement,
}

/// Exponents `(i, j)` of the 13 coefficient slots, in the order of
/// [`SexticCoeffs::entries`].
pub const COEFF_EXPONENTS: [(u32, u32); 13] = [
    (6, 0),
    (5, 0),
    (4, 2),
    (4, 0),
    (3, 2),
    (3, 0),
    (2, 2),
    (2, 0),
    (1, 2),
    (1, 0),
    (0, 4),
    (0, 2),
    (0, 0),
];

impl SexticCoeffs {
    /// `(name, (i, j), value)` for each slot.
    pub fn entries(&self) -> [(&'static str, (u32, u32), &FieldElement); 13] {
        let values = [
            &self.c60, &self.c50, &self.c42, &self.c40, &self.c32, &self.c30, &self.c22, &self.c20, &self.c12,
            &self.c10, &self.c04, &self.c02, &self.c00,
        ];
        let names = [
            "c60", "c50", "c42", "c40", "c32", "c30", "c22", "c20", "c12", "c10", "c04", "c02", "c00",
        ];
        std::array::from_fn(|k| (names[k], COEFF_EXPONENTS[k], values[k]))
    }

    pub fn to_bipoly(&self, field: &Field) -> BiPoly {
        BiPoly::from_terms(field, self.entries().map(|(_, e, c)| (e, c.clone())))
    }

    /// Reads the coefficients back from a polynomial; `None` if it has a term
    /// outside the 13 slots.
    pub fn from_bipoly(f: &BiPoly) -> Option<SexticCoeffs> {
        if f.terms().keys().any(|e| !COEFF_EXPONENTS.contains(e)) {
            return None;
        }
        let c = |i, j| f.coeff(i, j);
        Some(SexticCoeffs {
            c60: c(6, 0),
            c50: c(5, 0),
            c42: c(4, 2),
            c40: c(4, 0),
            c32: c(3, 2),
            c30: c(3, 0),
            c22: c(2, 2),
            c20: c(2, 0),
            c12: c(1, 2),
            c10: c(1, 0),
            c04: c(0, 4),
            c02: c(0, 2),
            c00: c(0, 0),
        })
    }
}

/// The closed-form coefficients.
pub fn sextic_coeffs(rd: &RamificationData) -> SexticCoeffs {
    let f = &rd.field;
    let k = |n: i64| f.from_i64(n);
    let (s, t) = (&rd.sigma, &rd.tau);
    let [d1, d2, d3, d4] = rd.differences();
    let sum = |i: usize| &s[i] + &t[i];
    let two = k(2);
    SexticCoeffs {
        c60: &d1 * &d1,
        c50: &(&k(-2) * &d1) * &d2,
        c42: k(-4),
        c40: &(&(&two * &d1) * &d3) + &(&d2 * &d2),
        c32: &two * &sum(0),
        c30: &(&(&k(-2) * &d1) * &d4) - &(&(&two * &d2) * &d3),
        c22: &k(-2) * &sum(1),
        c20: &(&d3 * &d3) + &(&(&two * &d4) * &d2),
        c12: &two * &sum(2),
        c10: &(&k(-2) * &d4) * &d3,
        c04: k(1),
        c02: &k(-2) * &sum(3),
        c00: &d4 * &d4,
    }
}

/// `y^4 - 2(φ1 + φ2) y^2 + (φ1 - φ2)^2` by direct polynomial arithmetic.
pub fn assemble_sextic(rd: &RamificationData) -> BiPoly {
    assemble_from_polys(&rd.phi1(), &rd.phi2())
}

/// The defining expression for arbitrary `φ1`, `φ2` (no validation).
pub fn assemble_from_polys(phi1: &UniPoly, phi2: &UniPoly) -> BiPoly {
    let field = phi1.field();
    let y = BiPoly::y(field);
    let y2 = &y * &y;
    let sum = BiPoly::from_unipoly(&(phi1 + phi2));
    let diff = BiPoly::from_unipoly(&(phi1 - phi2));
    let middle = (&sum * &y2).scale(&field.from_i64(-2));
    &(&(&y2 * &y2) + &middle) + &(&diff * &diff)
}

/// The sextic together with its projective closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticModel {
    data: RamificationData,
    coeffs: SexticCoeffs,
    f: BiPoly,
    projective: HomPoly,
}

impl SexticModel {
    /// Builds `f` from the closed-form coefficients.
    pub fn new(data: &RamificationData) -> SexticModel {
        let coeffs = sextic_coeffs(data);
        let f = coeffs.to_bipoly(&data.field);
        let projective = f.homogenize(6).expect("total degree at most 6");
        SexticModel {
            data: data.clone(),
            coeffs,
            f,
            projective,
        }
    }

    pub fn data(&self) -> &RamificationData {
        &self.data
    }

    pub fn coeffs(&self) -> &SexticCoeffs {
        &self.coeffs
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    /// The homogenization `F(x, y, z)` of degree 6.
    pub fn projective(&self) -> &HomPoly {
        &self.projective
    }

    pub fn field(&self) -> &Field {
        &self.data.field
    }

    /// Whether the coefficient route agrees with the direct assembly.
    pub fn assembly_matches(&self) -> bool {
        assemble_sextic(&self.data) == self.f
    }
}

/// A fractional linear map `z ↦ (a z + b) / (c z + d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z -> ({}*z + {}) / ({}*z + {})", self.a, self.b, self.c, self.d)
    }
}

impl Mobius {
    /// The image of a finite point; `None` when it is sent to infinity.
    pub fn apply(&self, z: &FieldElement) -> Option<FieldElement> {
        let den = &(&self.c * z) + &self.d;
        if den.is_zero() {
            return None;
        }
        Some(&(&(&self.a * z) + &self.b) / &den)
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// The map sending `(p1, p2, p3)` to `(0, 1, -1)`.
    pub fn normalizing(p1: &FieldElement, p2: &FieldElement, p3: &FieldElement) -> Mobius {
        let field = p1.field();
        let two = field.from_u64(2);
        let c = &(&(p2 + p3) - &(&two * p1)) / &(p2 - p3);
        let d = &(p2 - p1) - &(&c * p2);
        Mobius {
            a: field.one(),
            b: -p1,
            c,
            d,
        }
    }
}

/// Result of [`mobius_normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub data: RamificationData,
    pub transform: Mobius,
    /// Slot indices (into `alpha1..beta4`) of the points sent to `0, 1, -1`.
    pub triple: [usize; 3],
}

/// Applies the Möbius map sending `(α1, α2, α3)` to `(0, 1, -1)`.
///
/// If that map sends another point to infinity, ordered triples of slots are
/// tried in lexicographic order and the first admissible one is used. Each
/// image keeps its slot, so for a fallback triple the normalized values sit
/// in the slots recorded in `triple`.
pub fn mobius_normalize(rd: &RamificationData) -> Result<Normalization, HoweError> {
    let pts = rd.points();
    let triples = std::iter::once([0, 1, 2]).chain(
        (0..8)
            .flat_map(|i| (0..8).flat_map(move |j| (0..8).map(move |k| [i, j, k])))
            .filter(|t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2]),
    );
    for triple in triples {
        let m = Mobius::normalizing(&pts[triple[0]], &pts[triple[1]], &pts[triple[2]]);
        let images: Option<Vec<FieldElement>> = pts.iter().map(|p| m.apply(p)).collect();
        if let Some(v) = images {
            let data = RamificationData::new(
                [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
                [v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()],
            )?;
            return Ok(Normalization {
                data,
                transform: m,
                triple,
            });
        }
    }
    Err(HoweError::NormalizationImpossible)
}

/// A point `(x, y1, y2)` of the fiber product `C1 ×_{P^1} C2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPoint {
    pub x: FieldElement,
    pub y1: FieldElement,
    pub y2: FieldElement,
    /// Degree of the field of `y1, y2` over the field of the input `(x, y)`:
    /// 1 or 2.
    pub extension_degree: usize,
}

/// Outcome of [`lift_point`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lift {
    Unique(FiberPoint),
    /// The map is undefined here: `y = 0` and `φ1(x) = φ2(x) ≠ 0`, so both
    /// `(r, -r)` and `(-r, r)` lie over the point.
    Indeterminate(Vec<FiberPoint>),
}

/// The forward map `(x, y1, y2) ↦ (x, y1 + y2)`.
pub fn fiber_to_plane(p: &FiberPoint) -> (FieldElement, FieldElement) {
    (p.x.clone(), &p.y1 + &p.y2)
}

/// Inverts `(x, y1, y2) ↦ (x, y1 + y2)` at a point of `f = 0`.
///
/// `x` and `y` may live in the model's field or in a finite extension of it;
/// the square roots of `φ1(x)` and `φ2(x)` are taken there or, if needed, in
/// its quadratic extension (built with `seed`).
pub fn lift_point(model: &SexticModel, x: &FieldElement, y: &FieldElement, seed: u64) -> Result<Lift, HoweError> {
    let base = model.field();
    if !base.is_finite() {
        return Err(HoweError::Unsupported(format!("point lifting over {base}")));
    }
    let k = x.field().clone();
    if y.field() != &k {
        return Err(HoweError::MixedFields);
    }
    let into_k = base.embedding_into(&k, seed)?;
    let phi1 = model.data.phi1().map_coeffs(&k, |c| into_k.apply(c));
    let phi2 = model.data.phi2().map_coeffs(&k, |c| into_k.apply(c));
    let f = model.f.map_coeffs(&k, |c| into_k.apply(c));
    if !f.eval(x, y).is_zero() {
        return Err(HoweError::NotOnCurve);
    }

    let (a, b) = (phi1.eval(x), phi2.eval(x));
    let (l, to_l, degree) = if a.is_square() && b.is_square() {
        (k.clone(), None, 1)
    } else {
        let l = Field::build_extension(k.characteristic(), 2 * k.degree(), seed)?;
        let e = k.embedding_into(&l, seed)?;
        (l, Some(e), 2)
    };
    let lift = |v: &FieldElement| match &to_l {
        Some(e) => e.apply(v),
        None => v.clone(),
    };
    let (xl, yl) = (lift(x), lift(y));
    let r1 = lift(&a).sqrt(seed)?.expect("square in the extension");
    let r2 = lift(&b).sqrt(seed)?.expect("square in the extension");
    debug_assert_eq!(r1.field(), &l);

    let mut found: Vec<FiberPoint> = Vec::new();
    for y1 in [r1.clone(), -&r1] {
        for y2 in [r2.clone(), -&r2] {
            if &y1 + &y2 != yl {
                continue;
            }
            let p = FiberPoint {
                x: xl.clone(),
                y1: y1.clone(),
                y2,
                extension_degree: degree,
            };
            if !found.contains(&p) {
                found.push(p);
            }
        }
    }
    match found.len() {
        0 => unreachable!("f = ∏(y ± √φ1 ± √φ2) vanishes at (x, y)"),
        1 => Ok(Lift::Unique(found.pop().expect("one element"))),
        _ => Ok(Lift::Indeterminate(found)),
    }
}

/// `g(H) = 2(g1 + g2) + 1 - r` for the Howe curve of two hyperelliptic curves
/// of genera `g1`, `g2` sharing `r` ramification points.
pub fn genus_of_howe(g1: i64, g2: i64, r: i64) -> i64 {
    2 * (g1 + g2) + 1 - r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f31() -> Field {
        Field::prime(31).unwrap()
    }

    fn example_i1() -> RamificationData {
        RamificationData::from_i64s(&f31(), [0, 1, -1, 20], [28, 16, 7, 27]).unwrap()
    }

    fn ints(v: &[FieldElement]) -> Vec<u64> {
        v.iter().map(|c| c.as_u64().unwrap()).collect()
    }

    /// Elementary symmetric functions by summing products over index subsets.
    fn esym_oracle(xs: &[FieldElement; 4], k: usize) -> FieldElement {
        let field = xs[0].field();
        (0u32..16)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| {
                (0..4)
                    .filter(|i| m & (1 << i) != 0)
                    .fold(field.one(), |acc, i| &acc * &xs[i])
            })
            .fold(field.zero(), |acc, t| &acc + &t)
    }

    #[test]
    fn symmetric_functions_of_example() {
        let rd = example_i1();
        assert_eq!(ints(rd.sigma()), vec![20, 30, 11, 0]);
        assert_eq!(ints(rd.tau()), vec![16, 25, 19, 11]);
        for k in 1..=4 {
            assert_eq!(rd.sigma()[k - 1], esym_oracle(rd.alphas(), k));
            assert_eq!(rd.tau()[k - 1], esym_oracle(rd.betas(), k));
        }
    }

    #[test]
    fn duplicates_are_named() {
        let err = RamificationData::from_i64s(&f31(), [0, 1, -1, 1], [28, 16, 7, 27]).unwrap_err();
        assert_eq!(
            err,
            HoweError::DuplicateRamificationPoint {
                first: "alpha2".into(),
                second: "alpha4".into(),
                value: "1".into()
            }
        );
        let err = RamificationData::from_i64s(&f31(), [0, 1, -1, 20], [28, 16, 7, 20]).unwrap_err();
        assert!(
            matches!(err, HoweError::DuplicateRamificationPoint { ref first, ref second, .. }
            if first == "alpha4" && second == "beta4")
        );
    }

    #[test]
    fn infinity_is_rejected() {
        let f = f31();
        let mut pts: [Option<FieldElement>; 8] = std::array::from_fn(|i| Some(f.from_u64(i as u64)));
        pts[5] = None;
        assert_eq!(
            RamificationData::from_projective(pts).unwrap_err(),
            HoweError::InfinityNotSupported("beta2".into())
        );
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = f31();
        let b = Field::prime(37).unwrap();
        let err = RamificationData::new([0, 1, 2, 3].map(|v| a.from_u64(v)), [4, 5, 6, 7].map(|v| b.from_u64(v)))
            .unwrap_err();
        assert_eq!(err, HoweError::MixedFields);
    }

    #[test]
    fn swap_exchanges_sigma_and_tau() {
        let rd = example_i1();
        let sw = rd.swapped();
        assert_eq!(sw.sigma(), rd.tau());
        assert_eq!(sw.tau(), rd.sigma());
        let rebuilt = RamificationData::new(rd.betas().clone(), rd.alphas().clone()).unwrap();
        assert_eq!(sw, rebuilt);
    }

    #[test]
    fn example_i1_coefficients() {
        let model = SexticModel::new(&example_i1());
        assert_eq!(
            model.f().to_string(),
            "16*x^6 + 27*x^4*y^2 + 22*x^5 + 10*x^3*y^2 + 23*x^4 + 14*x^2*y^2 + y^4 \
             + 13*x^3 + 29*x*y^2 + 16*x^2 + 9*y^2 + 10*x + 28"
        );
        assert!(model.assembly_matches());
    }

    #[test]
    fn example_ii4_coefficients() {
        let rd = RamificationData::from_i64s(&f31(), [0, 1, -1, 2], [8, 20, 24, 12]).unwrap();
        let model = SexticModel::new(&rd);
        assert_eq!(
            model.f().to_string(),
            "27*x^4*y^2 + 8*x^3*y^2 + 4*x^2*y^2 + y^4 + 23*x*y^2 + 3*y^2 + 10"
        );
        let d = rd.differences();
        assert!(d[0].is_zero() && d[1].is_zero() && d[2].is_zero());
        assert_eq!(d[3], f31().from_u64(17));
        assert!(!model.coeffs().c00.is_zero());
    }

    #[test]
    fn degree_in_x_tracks_sigma1() {
        let model = SexticModel::new(&example_i1());
        assert_eq!(model.f().degree_x(), Some(6));
        assert_eq!(model.f().degree_y(), Some(4));
        let rd = RamificationData::from_i64s(&f31(), [0, 1, -1, 2], [8, 20, 24, 12]).unwrap();
        assert_eq!(SexticModel::new(&rd).f().degree_x(), Some(4));
    }

    /// The simplified forms for `σ1 = τ1, σ2 = τ2` (and additionally `σ3 = τ3`),
    /// written out term by term.
    fn simplified_form(rd: &RamificationData) -> BiPoly {
        let f = rd.field();
        let (s, t) = (rd.sigma(), rd.tau());
        let k = |n: i64| f.from_i64(n);
        let d3 = &s[2] - &t[2];
        let d4 = &s[3] - &t[3];
        BiPoly::from_terms(
            f,
            [
                ((4, 2), k(-4)),
                ((3, 2), &k(4) * &s[0]),
                ((2, 2), &k(-4) * &s[1]),
                ((0, 4), k(1)),
                ((1, 2), &k(2) * &(&s[2] + &t[2])),
                ((2, 0), &d3 * &d3),
                ((0, 2), &k(-2) * &(&s[3] + &t[3])),
                ((1, 0), &(&k(-2) * &d3) * &d4),
                ((0, 0), &d4 * &d4),
            ],
        )
    }

    #[test]
    fn simplified_forms_on_searched_instances() {
        use rand::{Rng, SeedableRng};
        let f = f31();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let (mut found1, mut found2) = (0, 0);
        for _ in 0..400_000 {
            if found1 >= 5 {
                break;
            }
            let v: Vec<i64> = (0..8).map(|_| rng.random_range(0..31)).collect();
            let Ok(rd) = RamificationData::from_i64s(&f, [v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]]) else {
                continue;
            };
            let d = rd.differences();
            if !(d[0].is_zero() && d[1].is_zero()) {
                continue;
            }
            found1 += 1;
            if d[2].is_zero() {
                found2 += 1;
            }
            let model = SexticModel::new(&rd);
            assert_eq!(model.f(), &simplified_form(&rd));
            assert!(model.assembly_matches());
        }
        assert!(found1 >= 5, "search found {found1} instances");
        // the second simplified form via the II-4 example
        let rd = RamificationData::from_i64s(&f, [0, 1, -1, 2], [8, 20, 24, 12]).unwrap();
        let s = rd.sigma();
        let expected = BiPoly::from_terms(
            &f,
            [
                ((4, 2), f.from_i64(-4)),
                ((3, 2), &f.from_i64(4) * &s[0]),
                ((2, 2), &f.from_i64(-4) * &s[1]),
                ((0, 4), f.one()),
                ((1, 2), &f.from_i64(4) * &s[2]),
                ((0, 2), &f.from_i64(-2) * &(&s[3] + &rd.tau()[3])),
                ((0, 0), &(&s[3] - &rd.tau()[3]) * &(&s[3] - &rd.tau()[3])),
            ],
        );
        assert_eq!(SexticModel::new(&rd).f(), &expected);
        let _ = found2;
    }

    #[test]
    fn restriction_to_y0_is_h1_squared() {
        let rd = example_i1();
        let model = SexticModel::new(&rd);
        let h1 = &rd.phi2() - &rd.phi1();
        assert_eq!(model.f().restrict_y0(), &h1 * &h1);
    }

    #[test]
    fn mobius_identity_on_normalized_data() {
        let n = mobius_normalize(&example_i1()).unwrap();
        assert!(n.transform.is_identity());
        assert_eq!(n.triple, [0, 1, 2]);
        assert_eq!(n.data, example_i1());
    }

    #[test]
    fn mobius_normalizes_and_inverts() {
        let f = f31();
        let rd = RamificationData::from_i64s(&f, [5, 7, 11, 13], [17, 19, 23, 29]).unwrap();
        let n = mobius_normalize(&rd).unwrap();
        let a = n.data.alphas();
        assert_eq!(ints(&a[..3]), vec![0, 1, 30]);
        let inv = n.transform.inverse();
        let back: Vec<FieldElement> = n.data.points().iter().map(|p| inv.apply(p).unwrap()).collect();
        assert_eq!(back, rd.points());
        // three-point interpolation oracle: cross-ratio preservation
        let cross =
            |p: &[FieldElement]| &(&(&p[0] - &p[2]) * &(&p[1] - &p[3])) / &(&(&p[0] - &p[3]) * &(&p[1] - &p[2]));
        let pts = rd.points();
        let img = n.data.points();
        assert_eq!(cross(&pts[3..7]), cross(&img[3..7]));
    }

    #[test]
    fn mobius_falls_back_when_a_point_hits_the_pole() {
        let f = f31();
        // with (p1, p2, p3) = (5, 7, 11): c = (18 - 10)/(-4) = -2, d = 2 + 14 = 16, pole at 8
        let rd = RamificationData::from_i64s(&f, [5, 7, 11, 8], [17, 19, 23, 29]).unwrap();
        let n = mobius_normalize(&rd).unwrap();
        assert_ne!(n.triple, [0, 1, 2]);
        assert_eq!(n.triple, [0, 1, 3]);
        let img = n.data.points();
        assert_eq!(ints(&[img[0].clone(), img[1].clone(), img[3].clone()]), vec![0, 1, 30]);
    }

    #[test]
    fn lift_point_round_trip_and_errors() {
        let rd = example_i1();
        let model = SexticModel::new(&rd);
        let f = f31();
        let mut checked = 0;
        for xv in 0..31 {
            let x = f.from_u64(xv);
            let (a, b) = (rd.phi1().eval(&x), rd.phi2().eval(&x));
            let (Some(r1), Some(r2)) = (a.sqrt(0).unwrap(), b.sqrt(0).unwrap()) else {
                continue;
            };
            let p = FiberPoint {
                x: x.clone(),
                y1: r1,
                y2: -&r2,
                extension_degree: 1,
            };
            let (px, py) = fiber_to_plane(&p);
            match lift_point(&model, &px, &py, 3).unwrap() {
                Lift::Unique(q) => assert_eq!(q, p),
                Lift::Indeterminate(_) => assert!(py.is_zero()),
            }
            checked += 1;
        }
        assert!(checked > 3);
        // f(0, 1) = c04 + c02 + c00 = 1 + 9 + 28 = 7
        let (x, y) = (f.zero(), f.one());
        assert!(!model.f().eval(&x, &y).is_zero());
        assert_eq!(lift_point(&model, &x, &y, 0), Err(HoweError::NotOnCurve));
        let q = Field::rational();
        let rq = RamificationData::from_i64s(&q, [0, 1, -1, 2], [3, 4, 5, 6]).unwrap();
        assert!(matches!(
            lift_point(&SexticModel::new(&rq), &q.zero(), &q.zero(), 0),
            Err(HoweError::Unsupported(_))
        ));
    }

    #[test]
    fn indeterminate_when_phi_values_agree() {
        // φ1(x) = φ2(x) ≠ 0 at a root x of h1; then y = 0 has two lifts
        let rd = example_i1();
        let model = SexticModel::new(&rd);
        let f = f31();
        let x = f.from_u64(24);
        let a = rd.phi1().eval(&x);
        assert_eq!(a, rd.phi2().eval(&x));
        assert!(!a.is_zero());
        match lift_point(&model, &x, &f.zero(), 1).unwrap() {
            Lift::Indeterminate(v) => {
                assert_eq!(v.len(), 2);
                assert_eq!(v[0].y1, -&v[1].y1);
                assert_eq!(v[0].y1, -&v[0].y2);
            }
            other => panic!("expected two lifts, got {other:?}"),
        }
    }

    #[test]
    fn lift_uses_quadratic_extension_when_needed() {
        let rd = example_i1();
        let model = SexticModel::new(&rd);
        let f = f31();
        let x = (0..31)
            .map(|v| f.from_u64(v))
            .find(|x| {
                let (a, b) = (rd.phi1().eval(x), rd.phi2().eval(x));
                a != b && !a.is_square() && !b.is_square()
            })
            .expect("some x with both values non-residues");
        let k = Field::build_extension(31, 2, 4).unwrap();
        let e = f.embedding_into(&k, 4).unwrap();
        let xk = e.apply(&x);
        let r1 = e.apply(&rd.phi1().eval(&x)).sqrt(0).unwrap().unwrap();
        let r2 = e.apply(&rd.phi2().eval(&x)).sqrt(0).unwrap().unwrap();
        let y = &r1 + &r2;
        match lift_point(&model, &xk, &y, 2).unwrap() {
            Lift::Unique(p) => {
                assert_eq!(p.extension_degree, 1);
                assert_eq!((p.y1, p.y2), (r1, r2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn genus_formula() {
        assert_eq!(genus_of_howe(1, 1, 0), 5);
        assert_eq!(genus_of_howe(2, 2, 4), 5);
        assert_eq!(genus_of_howe(1, 1, 3), 2);
    }

    proptest! {
        #[test]
        fn coefficient_route_matches_assembly(v in prop::collection::vec(-50i64..=50, 8)) {
            for field in [Field::prime(1009).unwrap(), Field::rational()] {
                let Ok(rd) = RamificationData::from_i64s(&field, [v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]]) else {
                    return Ok(());
                };
                let model = SexticModel::new(&rd);
                prop_assert!(model.assembly_matches());
                prop_assert_eq!(model.coeffs().c42.clone(), field.from_i64(-4));
                prop_assert!(model.coeffs().c04.is_one());
                prop_assert!(model.f().is_even_in_y());
                let h1 = &rd.phi2() - &rd.phi1();
                prop_assert_eq!(model.f().restrict_y0(), &h1 * &h1);
                let c = model.coeffs();
                prop_assert!(!(c.c60.is_zero() && c.c40.is_zero() && c.c20.is_zero() && c.c00.is_zero()));
                prop_assert!(model.projective().euler_identity_holds());
            }
        }

        #[test]
        fn translation_shifts_the_sextic(v in prop::collection::vec(0i64..31, 8), c in 0i64..31) {
            let f = f31();
            let Ok(rd) = RamificationData::from_i64s(&f, [v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]]) else {
                return Ok(());
            };
            let c = f.from_i64(c);
            let moved = SexticModel::new(&rd.translated(&c));
            prop_assert_eq!(moved.f(), &SexticModel::new(&rd).f().shift_x(&c));
        }
    }
}

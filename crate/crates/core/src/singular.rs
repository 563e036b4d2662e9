//! Singular points of the projective closure `F(x, y, z) = 0` of the sextic.
//!
//! Every singular point is one of `(ξ:0:1)` for a root `ξ` of
//! `h1 = -(φ1 - φ2)`, the point `(0:1:0)` (always singular), or `(1:0:0)`
//! (singular exactly when `σ1 = τ1`). [`classify`] decides the configuration
//! from `h1` by resultants, [`singular_points`] locates the points and
//! certifies multiplicity two, and [`brute_force_singular_scan`] is an
//! independent exhaustive check over a small finite field.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::bipoly::HomPoly;
use crate::field::{Embedding, Field, FieldElement, FieldError};
use crate::howe::{RamificationData, SexticModel};
use crate::unipoly::{PolyError, UniPoly};

/// Default cap on the number of projective points a scan may visit.
pub const DEFAULT_SCAN_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    #[error("{0} is not a singular point")]
    NotSingular(String),
    #[error("all second partials vanish at {0}")]
    MultiplicityExceedsTwo(String),
    #[error("scan needs {needed} point evaluations, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The seven configurations; `m` affine and `n` infinite singular points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    I1,
    I2,
    I3,
    II1,
    II2,
    II3,
    II4,
}

impl SingularityType {
    pub const ALL: [SingularityType; 7] = [
        SingularityType::I1,
        SingularityType::I2,
        SingularityType::I3,
        SingularityType::II1,
        SingularityType::II2,
        SingularityType::II3,
        SingularityType::II4,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SingularityType::I1 => "I-1",
            SingularityType::I2 => "I-2",
            SingularityType::I3 => "I-3",
            SingularityType::II1 => "II-1",
            SingularityType::II2 => "II-2",
            SingularityType::II3 => "II-3",
            SingularityType::II4 => "II-4",
        }
    }

    pub fn from_label(label: &str) -> Option<SingularityType> {
        SingularityType::ALL.into_iter().find(|t| t.label() == label)
    }

    pub fn affine_count(self) -> usize {
        match self {
            SingularityType::I1 => 3,
            SingularityType::I2 | SingularityType::II1 => 2,
            SingularityType::I3 | SingularityType::II2 | SingularityType::II3 => 1,
            SingularityType::II4 => 0,
        }
    }

    pub fn infinity_count(self) -> usize {
        match self {
            SingularityType::I1 | SingularityType::I2 | SingularityType::I3 => 1,
            _ => 2,
        }
    }

    pub fn total(self) -> usize {
        self.affine_count() + self.infinity_count()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A resultant evaluated on the way to a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantValue {
    /// `"Res(h1, h1')"` or `"Res(h1', h1'')"`.
    pub name: &'static str,
    pub value: FieldElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: SingularityType,
    pub resultants: Vec<ResultantValue>,
    /// The unique affine singular abscissa in types I-3, II-2 and II-3.
    pub xi: Option<FieldElement>,
}

/// `h1 = (σ1-τ1) x^3 - (σ2-τ2) x^2 + (σ3-τ3) x - (σ4-τ4)`.
pub fn h1_poly(rd: &RamificationData) -> UniPoly {
    let [d1, d2, d3, d4] = rd.differences();
    UniPoly::new(rd.field(), vec![-d4, d3, -d2, d1])
}

pub fn classify(rd: &RamificationData) -> Classification {
    let field = rd.field();
    let [d1, d2, d3, d4] = rd.differences();
    let h1 = h1_poly(rd);
    let h1d = h1.derivative();
    let res = |a: &UniPoly, b: &UniPoly, name| ResultantValue {
        name,
        value: a.resultant(b).expect("nonzero polynomials"),
    };
    let mut resultants = Vec::new();
    let (kind, xi) = if !d1.is_zero() {
        let r1 = res(&h1, &h1d, "Res(h1, h1')");
        let nonzero = !r1.value.is_zero();
        resultants.push(r1);
        if nonzero {
            (SingularityType::I1, None)
        } else {
            let r2 = res(&h1d, &h1d.derivative(), "Res(h1', h1'')");
            let nonzero = !r2.value.is_zero();
            resultants.push(r2);
            if nonzero {
                (SingularityType::I2, None)
            } else {
                (SingularityType::I3, Some(&d2 / &(&field.from_u64(3) * &d1)))
            }
        }
    } else if !d2.is_zero() {
        // h1 has degree exactly 2 here
        let r1 = res(&h1, &h1d, "Res(h1, h1')");
        let nonzero = !r1.value.is_zero();
        resultants.push(r1);
        if nonzero {
            (SingularityType::II1, None)
        } else {
            (SingularityType::II2, Some(&d3 / &(&field.from_u64(2) * &d2)))
        }
    } else if !d3.is_zero() {
        (SingularityType::II3, Some(&d4 / &d3))
    } else {
        (SingularityType::II4, None)
    };
    Classification { kind, resultants, xi }
}

/// Where a singular point sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLocation {
    /// `(ξ:0:1)`, with `ξ` in the base field or in the extension reached by
    /// the point's embedding.
    Affine(FieldElement),
    /// The `degree` conjugate points `(ξ:0:1)` with `ξ` a root of the
    /// irreducible `minpoly` over `Q`.
    AffineAlgebraic(UniPoly),
    /// `(0:1:0)`.
    InfinityY,
    /// `(1:0:0)`.
    InfinityX,
}

/// A nonzero second partial derivative at the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// `"F_yy"`, `"F_zz"`, ...
    pub partial: String,
    pub value: CertificateValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateValue {
    Element(FieldElement),
    /// The second partial restricted to `y = 0, z = 1`, reduced modulo the
    /// minimal polynomial; nonzero means it vanishes at no conjugate.
    Residue(UniPoly),
}

impl fmt::Display for CertificateValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateValue::Element(v) => write!(f, "{v}"),
            CertificateValue::Residue(r) => write!(f, "{r} (mod minimal polynomial)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub location: PointLocation,
    /// Degree over the base field of the field generated by the coordinates.
    pub extension_degree: usize,
    /// Maps base-field coefficients into the field of `ξ` when they differ.
    pub embedding: Option<Embedding>,
    pub multiplicity: usize,
    pub certificate: Certificate,
}

impl SingularPoint {
    /// Number of geometric points this entry stands for.
    pub fn point_count(&self) -> usize {
        match &self.location {
            PointLocation::AffineAlgebraic(m) => m.degree().unwrap_or(0),
            _ => 1,
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(
            self.location,
            PointLocation::Affine(_) | PointLocation::AffineAlgebraic(_)
        )
    }

    /// The point of `P^2` over the base field, if it is rational there.
    pub fn rational_point(&self) -> Option<ProjPoint> {
        match &self.location {
            PointLocation::Affine(xi) if self.embedding.is_none() => {
                let f = xi.field();
                Some(ProjPoint::new([xi.clone(), f.zero(), f.one()]))
            }
            _ => None,
        }
    }

    /// Coordinates as text, e.g. `(24:0:1)`, `(0:1:0)`, or `(ξ:0:1), ξ root of ...`.
    pub fn coordinates(&self) -> String {
        match &self.location {
            PointLocation::Affine(xi) => format!("({xi}:0:1)"),
            PointLocation::AffineAlgebraic(m) => format!("(ξ:0:1), ξ root of {m}"),
            PointLocation::InfinityY => "(0:1:0)".into(),
            PointLocation::InfinityX => "(1:0:0)".into(),
        }
    }
}

/// A point of `P^2` scaled so that its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([FieldElement; 3]);

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> ProjPoint {
        let pivot = coords
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("not all coordinates zero")
            .inv()
            .expect("nonzero");
        ProjPoint(coords.map(|c| &c * &pivot))
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.0
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

const VAR_NAMES: [char; 3] = ['x', 'y', 'z'];

fn second_partial_name(a: usize, b: usize) -> String {
    format!("F_{}{}", VAR_NAMES[a], VAR_NAMES[b])
}

fn map_hom(f: &HomPoly, e: Option<&Embedding>) -> HomPoly {
    match e {
        None => f.clone(),
        Some(e) => f
            .dehomogenize(2)
            .expect("valid variable")
            .map_coeffs(e.target(), |c| e.apply(c))
            .homogenize(f.degree())
            .expect("degree preserved"),
    }
}

/// Checks that `F` and its first partials vanish at `point` and returns a
/// nonzero second partial (preferring `F_yy`, or `F_zz` at `(0:1:0)`).
pub fn verify_multiplicity_two(f: &HomPoly, point: &SingularPoint) -> Result<Certificate, SingularError> {
    let preferred = match point.location {
        PointLocation::InfinityY => (2, 2),
        _ => (1, 1),
    };
    let order = std::iter::once(preferred).chain(
        [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
            .into_iter()
            .filter(move |p| *p != preferred),
    );
    let name = point.coordinates();

    if let PointLocation::AffineAlgebraic(minpoly) = &point.location {
        // restrict to y = 0, z = 1 and reduce modulo the minimal polynomial
        let residue = |g: &HomPoly| -> Result<UniPoly, SingularError> {
            let at = g.dehomogenize(2).expect("valid variable").restrict_y0();
            Ok(at.rem(minpoly)?)
        };
        let mut first = vec![residue(f)?];
        for v in 0..3 {
            first.push(residue(&f.partial(v).expect("valid variable"))?);
        }
        if first.iter().any(|r| !r.is_zero()) {
            return Err(SingularError::NotSingular(name));
        }
        for (a, b) in order {
            let r = residue(&f.partial(a).and_then(|g| g.partial(b)).expect("valid variable"))?;
            if !r.is_zero() {
                // minpoly is irreducible, so a nonzero residue is a unit
                return Ok(Certificate {
                    partial: second_partial_name(a, b),
                    value: CertificateValue::Residue(r),
                });
            }
        }
        return Err(SingularError::MultiplicityExceedsTwo(name));
    }

    let f = map_hom(f, point.embedding.as_ref());
    let field = f.field().clone();
    let coords = match &point.location {
        PointLocation::Affine(xi) => [xi.clone(), field.zero(), field.one()],
        PointLocation::InfinityY => [field.zero(), field.one(), field.zero()],
        PointLocation::InfinityX => [field.one(), field.zero(), field.zero()],
        PointLocation::AffineAlgebraic(_) => unreachable!("handled above"),
    };
    let at = |g: &HomPoly| g.eval([&coords[0], &coords[1], &coords[2]]);
    if !at(&f).is_zero() || (0..3).any(|v| !at(&f.partial(v).expect("valid variable")).is_zero()) {
        return Err(SingularError::NotSingular(name));
    }
    for (a, b) in order {
        let v = at(&f.partial(a).and_then(|g| g.partial(b)).expect("valid variable"));
        if !v.is_zero() {
            return Ok(Certificate {
                partial: second_partial_name(a, b),
                value: CertificateValue::Element(v),
            });
        }
    }
    Err(SingularError::MultiplicityExceedsTwo(name))
}

/// All singular points, each with its multiplicity-two certificate.
///
/// Affine points come first (sorted by extension degree, then value),
/// followed by `(0:1:0)` and, when `σ1 = τ1`, `(1:0:0)`. Over finite fields,
/// roots of `h1` in extensions of degree up to 3 are materialized in fields
/// built with `seed`.
pub fn singular_points(model: &SexticModel, seed: u64) -> Result<Vec<SingularPoint>, SingularError> {
    let rd = model.data();
    let field = model.field();
    let class = classify(rd);
    let placeholder = Certificate {
        partial: String::new(),
        value: CertificateValue::Element(field.zero()),
    };
    let point = |location, extension_degree, embedding| SingularPoint {
        location,
        extension_degree,
        embedding,
        multiplicity: 2,
        certificate: placeholder.clone(),
    };

    let mut out = Vec::new();
    if let Some(xi) = &class.xi {
        out.push(point(PointLocation::Affine(xi.clone()), 1, None));
    } else if class.kind.affine_count() > 0 {
        let h1 = h1_poly(rd);
        if field.is_rational() {
            for (g, _) in h1.factor_rational()?.factors {
                if g.degree() == Some(1) {
                    let xi = -&(&g.coeff(0) / &g.coeff(1));
                    out.push(point(PointLocation::Affine(xi), 1, None));
                } else {
                    let d = g.degree().expect("non-constant");
                    out.push(point(PointLocation::AffineAlgebraic(g), d, None));
                }
            }
        } else {
            for root in h1.roots(3, seed)? {
                let embedding = (root.degree > 1).then_some(root.embedding);
                out.push(point(PointLocation::Affine(root.value), root.degree, embedding));
            }
        }
    }
    out.push(point(PointLocation::InfinityY, 1, None));
    if rd.differences()[0].is_zero() {
        out.push(point(PointLocation::InfinityX, 1, None));
    }
    for p in &mut out {
        p.certificate = verify_multiplicity_two(model.projective(), p)?;
    }
    Ok(out)
}

/// Every point of `P^2(F_q)` where `F`, `F_x`, `F_y` and `F_z` all vanish.
///
/// Points are enumerated once each through the disjoint charts `(x:y:1)`,
/// `(x:1:0)` and `(1:0:0)`; the `z = 1` chart is split across threads.
pub fn brute_force_singular_scan(f: &HomPoly, budget: u64) -> Result<BTreeSet<ProjPoint>, SingularError> {
    let field = f.field().clone();
    let q = field
        .order_u64()
        .ok_or_else(|| SingularError::Unsupported(format!("scan over {field}")))?;
    let needed = q.checked_mul(q).and_then(|v| v.checked_add(q + 1)).unwrap_or(u64::MAX);
    if needed > budget {
        return Err(SingularError::BudgetExceeded { needed, budget });
    }
    let partials: Vec<HomPoly> = (0..3).map(|v| f.partial(v).expect("valid variable")).collect();
    let elements: Vec<FieldElement> = field.elements()?.collect();
    let is_singular = |p: [&FieldElement; 3]| f.eval(p).is_zero() && partials.iter().all(|g| g.eval(p).is_zero());
    let (zero, one) = (field.zero(), field.one());

    let mut found: BTreeSet<ProjPoint> = elements
        .par_iter()
        .flat_map_iter(|x| {
            elements
                .iter()
                .filter(|y| is_singular([x, y, &one]))
                .map(|y| ProjPoint::new([x.clone(), y.clone(), one.clone()]))
                .collect::<Vec<_>>()
        })
        .collect();
    for x in &elements {
        if is_singular([x, &one, &zero]) {
            found.insert(ProjPoint::new([x.clone(), one.clone(), zero.clone()]));
        }
    }
    if is_singular([&one, &zero, &zero]) {
        found.insert(ProjPoint::new([one.clone(), zero.clone(), zero.clone()]));
    }
    Ok(found)
}

/// The base-field-rational singular points among `points`.
pub fn rational_singular_set(points: &[SingularPoint]) -> BTreeSet<ProjPoint> {
    points
        .iter()
        .filter_map(|p| match &p.location {
            PointLocation::InfinityY => {
                let f = p.certificate_field();
                Some(ProjPoint::new([f.zero(), f.one(), f.zero()]))
            }
            PointLocation::InfinityX => {
                let f = p.certificate_field();
                Some(ProjPoint::new([f.one(), f.zero(), f.zero()]))
            }
            _ => p.rational_point(),
        })
        .collect()
}

impl SingularPoint {
    fn certificate_field(&self) -> Field {
        match &self.certificate.value {
            CertificateValue::Element(v) => v.field().clone(),
            CertificateValue::Residue(r) => r.field().clone(),
        }
    }
}

/// A scan result confirms that every singular point has `y = 0` or lies at
/// `(1:0:0)` or `(0:1:0)`.
pub fn no_offaxis_singularities(scan: &BTreeSet<ProjPoint>) -> bool {
    scan.iter().all(|p| {
        let [x, y, z] = p.coords();
        if z.is_zero() {
            (x.is_zero() && y.is_one()) || (x.is_one() && y.is_zero())
        } else {
            y.is_zero()
        }
    })
}

/// Scans `P^2(F_q)` and applies [`no_offaxis_singularities`].
pub fn no_offaxis_singularities_check(f: &HomPoly, budget: u64) -> Result<bool, SingularError> {
    Ok(no_offaxis_singularities(&brute_force_singular_scan(f, budget)?))
}

/// `g_a - Σ m(m-1)/2 >= 5` for a sextic (`g_a = 10`) with `total` double points.
pub fn genus_bound_check(total: usize) -> bool {
    10 >= 5 + total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::BiPoly;
    use proptest::prelude::*;

    fn f31() -> Field {
        Field::prime(31).unwrap()
    }

    fn example(alpha4: i64, betas: [i64; 4]) -> RamificationData {
        RamificationData::from_i64s(&f31(), [0, 1, -1, alpha4], betas).unwrap()
    }

    fn pts(points: &[SingularPoint]) -> Vec<String> {
        points.iter().map(|p| p.coordinates()).collect()
    }

    #[test]
    fn table_counts() {
        let rows: Vec<_> = SingularityType::ALL
            .iter()
            .map(|t| (t.label(), t.affine_count(), t.infinity_count(), t.total()))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("I-1", 3, 1, 4),
                ("I-2", 2, 1, 3),
                ("I-3", 1, 1, 2),
                ("II-1", 2, 2, 4),
                ("II-2", 1, 2, 3),
                ("II-3", 1, 2, 3),
                ("II-4", 0, 2, 2),
            ]
        );
        for t in SingularityType::ALL {
            assert_eq!(SingularityType::from_label(t.label()), Some(t));
            assert!(genus_bound_check(t.total()));
        }
    }

    #[test]
    fn h1_of_example_i1() {
        let rd = example(20, [28, 16, 7, 27]);
        let h1 = h1_poly(&rd);
        assert_eq!(h1, UniPoly::from_i64s(&f31(), &[11, 23, 26, 4]));
        let model = SexticModel::new(&rd);
        assert_eq!(model.f().restrict_y0(), &h1 * &h1);
    }

    #[test]
    fn h1_constant_when_only_sigma4_differs() {
        let rd = example(2, [8, 20, 24, 12]);
        let h1 = h1_poly(&rd);
        assert_eq!(h1.degree(), Some(0));
        assert_eq!(h1.coeff(0), -&rd.differences()[3]);
    }

    #[test]
    fn classification_examples() {
        let c = classify(&example(20, [28, 16, 7, 27]));
        assert_eq!(c.kind, SingularityType::I1);
        assert_eq!(c.resultants[0].value, f31().from_u64(27));
        assert_eq!(classify(&example(5, [2, 10, 26, 29])).kind, SingularityType::II2);
        assert_eq!(classify(&example(2, [8, 20, 24, 12])).kind, SingularityType::II4);
        let c = classify(&example(11, [2, 13, 29, 22]));
        assert_eq!(c.kind, SingularityType::I2);
        assert!(c.resultants[0].value.is_zero());
        assert_eq!(c.resultants[1].value, f31().from_u64(5));
    }

    #[test]
    fn located_points_of_examples() {
        let model = SexticModel::new(&example(20, [28, 16, 7, 27]));
        let p = singular_points(&model, 0).unwrap();
        assert_eq!(pts(&p), vec!["(4:0:1)", "(12:0:1)", "(24:0:1)", "(0:1:0)"]);
        let model = SexticModel::new(&example(29, [2, 7, 14, 6]));
        let p = singular_points(&model, 0).unwrap();
        assert_eq!(pts(&p), vec!["(28:0:1)", "(0:1:0)", "(1:0:0)"]);
        let rd = example(7, [2, 5, 8, 19]);
        let c = classify(&rd);
        let d = rd.differences();
        assert_eq!(c.xi, Some(&d[1] / &(&f31().from_u64(3) * &d[0])));
        let p = singular_points(&SexticModel::new(&rd), 0).unwrap();
        assert_eq!(pts(&p), vec!["(12:0:1)", "(0:1:0)"]);
    }

    #[test]
    fn certificates() {
        let rd = example(20, [28, 16, 7, 27]);
        let model = SexticModel::new(&rd);
        let points = singular_points(&model, 0).unwrap();
        let f = f31();
        for p in &points {
            match &p.location {
                PointLocation::Affine(xi) => {
                    assert_eq!(p.certificate.partial, "F_yy");
                    let expected = &f.from_i64(-8) * &rd.phi1().eval(xi);
                    assert_eq!(p.certificate.value, CertificateValue::Element(expected));
                }
                PointLocation::InfinityY => {
                    assert_eq!(p.certificate.partial, "F_zz");
                    assert_eq!(p.certificate.value, CertificateValue::Element(f.from_u64(2)));
                }
                _ => unreachable!(),
            }
        }
        let model = SexticModel::new(&example(2, [8, 20, 24, 12]));
        let points = singular_points(&model, 0).unwrap();
        let x = points.iter().find(|p| p.location == PointLocation::InfinityX).unwrap();
        assert_eq!(x.certificate.partial, "F_yy");
        assert_eq!(x.certificate.value, CertificateValue::Element(f.from_i64(-8)));
    }

    #[test]
    fn nonsingular_point_is_rejected() {
        let model = SexticModel::new(&example(20, [28, 16, 7, 27]));
        let bogus = SingularPoint {
            location: PointLocation::Affine(f31().from_u64(5)),
            extension_degree: 1,
            embedding: None,
            multiplicity: 2,
            certificate: Certificate {
                partial: String::new(),
                value: CertificateValue::Element(f31().zero()),
            },
        };
        assert!(matches!(
            verify_multiplicity_two(model.projective(), &bogus),
            Err(SingularError::NotSingular(_))
        ));
    }

    #[test]
    fn triple_point_is_flagged() {
        // x^3 + y^3 has an ordinary triple point at the origin
        let f = f31();
        let cubic = BiPoly::from_terms(&f, [((3, 0), f.one()), ((0, 3), f.one())])
            .homogenize(3)
            .unwrap();
        let origin = SingularPoint {
            location: PointLocation::Affine(f.zero()),
            extension_degree: 1,
            embedding: None,
            multiplicity: 3,
            certificate: Certificate {
                partial: String::new(),
                value: CertificateValue::Element(f.zero()),
            },
        };
        assert!(matches!(
            verify_multiplicity_two(&cubic, &origin),
            Err(SingularError::MultiplicityExceedsTwo(_))
        ));
    }

    #[test]
    fn scan_matches_examples() {
        let model = SexticModel::new(&example(20, [28, 16, 7, 27]));
        let scan = brute_force_singular_scan(model.projective(), DEFAULT_SCAN_BUDGET).unwrap();
        let located = singular_points(&model, 0).unwrap();
        assert_eq!(scan, rational_singular_set(&located));
        assert_eq!(scan.len(), 4);
        assert!(no_offaxis_singularities(&scan));

        let model = SexticModel::new(&example(2, [8, 20, 24, 12]));
        let scan = brute_force_singular_scan(model.projective(), DEFAULT_SCAN_BUDGET).unwrap();
        let shown: Vec<String> = scan.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["(0:1:0)", "(1:0:0)"]);
    }

    #[test]
    fn scan_of_smooth_conic_is_empty_and_cusp_is_found() {
        let f = f31();
        let conic = BiPoly::from_terms(&f, [((2, 0), f.one()), ((0, 2), f.one()), ((0, 0), f.from_i64(-1))])
            .homogenize(2)
            .unwrap();
        assert!(brute_force_singular_scan(&conic, DEFAULT_SCAN_BUDGET)
            .unwrap()
            .is_empty());
        let cusp = BiPoly::from_terms(&f, [((0, 2), f.one()), ((3, 0), f.from_i64(-1))])
            .homogenize(3)
            .unwrap();
        let scan = brute_force_singular_scan(&cusp, DEFAULT_SCAN_BUDGET).unwrap();
        let shown: Vec<String> = scan.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["(0:0:1)"]);
    }

    #[test]
    fn degenerate_input_can_have_offaxis_singularities() {
        // φ1 = φ2 · (shared root): with φ1 = x^2 (x-1)(x+1), φ2 = x^2 (x-2)(x+2)
        // the origin is a common root of φ1 φ2 to higher order
        let f = f31();
        let phi1 = UniPoly::from_roots(&f, &[0, 0, 1, -1].map(|v| f.from_i64(v)));
        let phi2 = UniPoly::from_roots(&f, &[0, 3, 2, -2].map(|v| f.from_i64(v)));
        let sextic = crate::howe::assemble_from_polys(&phi1, &phi2).homogenize(6).unwrap();
        let scan = brute_force_singular_scan(&sextic, DEFAULT_SCAN_BUDGET).unwrap();
        assert!(!no_offaxis_singularities(&scan) || scan.iter().any(|p| p.coords()[0].is_zero()));
    }

    #[test]
    fn budget_is_enforced() {
        let model = SexticModel::new(&example(20, [28, 16, 7, 27]));
        assert_eq!(
            brute_force_singular_scan(model.projective(), 100),
            Err(SingularError::BudgetExceeded {
                needed: 993,
                budget: 100
            })
        );
        assert!(!genus_bound_check(6));
        assert!(genus_bound_check(2));
    }

    #[test]
    fn irrational_points_over_q() {
        let q = Field::rational();
        // σ1 = τ1 = 2 and h1 = -(σ2-τ2)x^2 + ... chosen so h1 has irrational roots
        let rd = RamificationData::from_i64s(&q, [0, 1, -1, 3], [4, -2, 5, -4]).unwrap();
        let model = SexticModel::new(&rd);
        let points = singular_points(&model, 0).unwrap();
        let h1 = h1_poly(&rd);
        let affine: usize = points.iter().filter(|p| p.is_affine()).map(|p| p.point_count()).sum();
        let expected = h1.degree().unwrap() - h1.gcd(&h1.derivative()).unwrap().degree().unwrap();
        assert_eq!(affine, expected);
        assert_eq!(affine, classify(&rd).kind.affine_count());
        for p in &points {
            assert_eq!(verify_multiplicity_two(model.projective(), p).unwrap(), p.certificate);
        }
    }

    fn data_from(p: u64, vals: std::collections::BTreeSet<u64>) -> RamificationData {
        let f = Field::prime(p).unwrap();
        let v: Vec<_> = vals.into_iter().map(|x| f.from_u64(x)).collect();
        RamificationData::new(
            [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
            [v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()],
        )
        .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn affine_count_is_distinct_root_count(vals in proptest::collection::btree_set(0u64..1009, 8)) {
            let rd = data_from(1009, vals);
            let h1 = h1_poly(&rd);
            let g = h1.gcd(&h1.derivative()).unwrap();
            prop_assert_eq!(classify(&rd).kind.affine_count(), h1.degree().unwrap() - g.degree().unwrap());
        }

        #[test]
        fn located_points_are_certified(vals in proptest::collection::btree_set(0u64..101, 8)) {
            let rd = data_from(101, vals);
            let model = SexticModel::new(&rd);
            let points = singular_points(&model, 3).unwrap();
            let total: usize = points.iter().map(SingularPoint::point_count).sum();
            prop_assert_eq!(total, classify(&rd).kind.total());
            for p in &points {
                prop_assert_eq!(&verify_multiplicity_two(model.projective(), p).unwrap(), &p.certificate);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn scan_matches_located_points(p in prop::sample::select(vec![11u64, 13, 17, 19]), seed in any::<u64>()) {
            let f = Field::prime(p).unwrap();
            let rd = crate::sampling::random_instances(&f, 1, seed).unwrap().remove(0);
            let model = SexticModel::new(&rd);
            let scan = brute_force_singular_scan(model.projective(), DEFAULT_SCAN_BUDGET).unwrap();
            prop_assert!(no_offaxis_singularities(&scan));
            prop_assert_eq!(scan, rational_singular_set(&singular_points(&model, 0).unwrap()));
        }
    }
}

//! Factoring and root finding over finite fields: distinct-degree
//! factorization followed by Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{PolyError, UniPoly};
use crate::field::{Embedding, Field, FieldElement};

/// A root of a polynomial, living in `F_{q^degree}` where `F_q` is the base
/// field of the polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub value: FieldElement,
    pub multiplicity: usize,
    /// Minimal `d` with the root in `F_{q^d}`.
    pub degree: usize,
    /// The embedding of the base field into the field of `value`.
    pub embedding: Embedding,
}

impl UniPoly {
    fn require_finite(&self) -> Result<BigUint, PolyError> {
        self.field
            .order()
            .ok_or_else(|| PolyError::UnsupportedField(self.field.to_string()))
    }

    /// Splits a monic squarefree polynomial into `(g_d, d)` where `g_d` is the
    /// product of all its irreducible factors of degree `d`.
    pub fn distinct_degree_factorization(&self) -> Result<Vec<(UniPoly, usize)>, PolyError> {
        let q = self.require_finite()?;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = UniPoly::x(&self.field);
        let mut h = x.rem(&f)?;
        let mut d = 0;
        while f.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = h.powmod(&q, &f)?;
            let g = f.gcd(&(&h - &x))?;
            if !g.is_constant() {
                f = f.exact_div(&g)?.expect("gcd divides");
                h = h.rem(&f)?;
                out.push((g, d));
            }
        }
        if let Some(deg) = f.degree().filter(|&deg| deg > 0) {
            out.push((f, deg));
        }
        Ok(out)
    }

    /// Splits a monic product of distinct irreducibles of degree `d` into its
    /// factors, sorted.
    pub fn equal_degree_factorization(&self, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly>, PolyError> {
        let q = self.require_finite()?;
        let n = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        let f = self.monic();
        if n == d {
            return Ok(vec![f]);
        }
        let exp: BigUint = (q.pow(d as u32) - 1u32) >> 1;
        loop {
            let coeffs = (0..n).map(|_| self.field.random(rng)).collect::<Result<Vec<_>, _>>()?;
            let a = UniPoly::new(&self.field, coeffs);
            if a.is_constant() {
                continue;
            }
            let g = f.gcd(&a)?;
            let split = if !g.is_constant() {
                g
            } else {
                let b = &a.powmod(&exp, &f)? - &UniPoly::one(&self.field);
                if b.is_zero() {
                    continue;
                }
                f.gcd(&b)?
            };
            if split.is_constant() || split.degree() == Some(n) {
                continue;
            }
            let rest = f.exact_div(&split)?.expect("gcd divides");
            let mut out = split.equal_degree_factorization(d, rng)?;
            out.extend(rest.equal_degree_factorization(d, rng)?);
            out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
            return Ok(out);
        }
    }

    /// Complete factorization over a finite field into monic irreducibles
    /// with multiplicities, ordered by degree then coefficients.
    pub fn factor_finite(&self, seed: u64) -> Result<Vec<(UniPoly, usize)>, PolyError> {
        self.require_finite()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition()? {
            for (g, d) in part.distinct_degree_factorization()? {
                for factor in g.equal_degree_factorization(d, &mut rng)? {
                    out.push((factor, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(out)
    }

    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        self.require_finite()?;
        let n = match self.degree() {
            None => return Err(PolyError::ZeroPolynomial),
            Some(0) => return Ok(false),
            Some(n) => n,
        };
        if !self.is_squarefree()? {
            return Ok(false);
        }
        let ddf = self.distinct_degree_factorization()?;
        Ok(ddf.len() == 1 && ddf[0].1 == n)
    }

    /// All roots lying in `F_{q^d}` for `d <= up_to_degree`, where `F_q` is the
    /// base field. Roots of degree `d` are materialized in a field of order
    /// `q^d` built with `seed`; output is sorted by degree, then value.
    pub fn roots(&self, up_to_degree: usize, seed: u64) -> Result<Vec<Root>, PolyError> {
        self.require_finite()?;
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let base = self.field.clone();
        let p = base.characteristic();
        let k = base.degree();
        let mut out = Vec::new();
        let mut ext_cache: Vec<(usize, Embedding)> = Vec::new();
        for (factor, mult) in self.factor_finite(seed)? {
            let d = factor.degree().expect("non-constant factor");
            if d > up_to_degree.max(1) {
                continue;
            }
            let embedding = match ext_cache.iter().find(|(dd, _)| *dd == d) {
                Some((_, e)) => e.clone(),
                None => {
                    let target = Field::build_extension(p, k * d, seed)?;
                    let e = base.embedding_into(&target, seed)?;
                    ext_cache.push((d, e.clone()));
                    e
                }
            };
            let lifted = factor.map_coeffs(embedding.target(), |c| embedding.apply(c));
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ d as u64);
            for lin in lifted.equal_degree_factorization(1, &mut rng)? {
                let value = -&lin.coeff(0);
                out.push(Root {
                    value,
                    multiplicity: mult,
                    degree: d,
                    embedding: embedding.clone(),
                });
            }
        }
        out.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.value.cmp(&b.value)));
        Ok(out)
    }
}

impl Field {
    /// An embedding of `self` into `target`, which must be a finite field of
    /// the same characteristic whose degree is a multiple of `self`'s.
    pub fn embedding_into(&self, target: &Field, seed: u64) -> Result<Embedding, PolyError> {
        let unsupported = || PolyError::UnsupportedField(format!("{self} into {target}"));
        if !self.is_finite()
            || self.characteristic() != target.characteristic()
            || !target.degree().is_multiple_of(self.degree())
        {
            return Err(unsupported());
        }
        if self.degree() == 1 {
            return Ok(Embedding::new(self.clone(), target.clone(), None));
        }
        // image of the generator: a root of the defining modulus in the target
        let modulus = UniPoly::new(
            target,
            self.spec().modulus.iter().map(|&c| target.from_u64(c)).collect(),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut roots: Vec<FieldElement> = modulus
            .equal_degree_factorization(1, &mut rng)?
            .into_iter()
            .map(|lin| -&lin.coeff(0))
            .collect();
        roots.sort();
        let image = roots.into_iter().next().ok_or_else(unsupported)?;
        Ok(Embedding::new(self.clone(), target.clone(), Some(image)))
    }
}

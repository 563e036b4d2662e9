//! Factorization over `Q` by the Zassenhaus method: factor modulo a good
//! prime, Hensel-lift each factor to a precision beyond the coefficient
//! bound, then recombine subsets of lifted factors by trial division.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PolyError, UniPoly};
use crate::field::{raw, Field, FieldElement};

/// `f = content · ∏ factor^multiplicity`, each factor a primitive integer
/// polynomial with positive leading coefficient, irreducible over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFactorization {
    pub content: FieldElement,
    pub factors: Vec<(UniPoly, usize)>,
}

type ZPoly = Vec<BigInt>;

impl UniPoly {
    pub fn factor_rational(&self) -> Result<RationalFactorization, PolyError> {
        if !self.field.is_rational() {
            return Err(PolyError::UnsupportedField(self.field.to_string()));
        }
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let q = self.field.clone();
        let (_, content) = primitive_part(self);
        let mut factors = Vec::new();
        for (part, mult) in self.squarefree_decomposition()? {
            let (z, _) = primitive_part(&part);
            for g in factor_squarefree(z) {
                factors.push((from_zpoly(&q, &g), mult));
            }
        }
        factors.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(RationalFactorization {
            content: q.from_rational(&content)?,
            factors,
        })
    }
}

/// Integer primitive part with positive leading coefficient, and the rational
/// content `c` with `f = c · pp`.
fn primitive_part(f: &UniPoly) -> (ZPoly, BigRational) {
    let coeffs: Vec<&BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational field"))
        .collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = coeffs.iter().map(|c| (c.numer() * &lcm) / c.denom()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (prim, BigRational::new(g, lcm))
}

fn from_zpoly(q: &Field, z: &ZPoly) -> UniPoly {
    UniPoly::new(q, z.iter().map(|c| q.from_bigint(c)).collect())
}

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

/// Symmetric residues in `(-m/2, m/2]`.
fn zsymmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Exact division over `Z`; `None` if `b` does not divide `a` in `Z[x]`.
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let lb = b.last()?;
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &qc * c;
        }
        quot[shift] = qc;
    }
    trim(&mut rem);
    trim(&mut quot);
    rem.is_empty().then_some(quot)
}

fn to_fp(fp: &Field, a: &ZPoly) -> UniPoly {
    UniPoly::new(fp, a.iter().map(|c| fp.from_bigint(c)).collect())
}

fn from_fp(a: &UniPoly) -> ZPoly {
    a.coeffs
        .iter()
        .map(|c| BigInt::from(c.as_u64().expect("prime field")))
        .collect()
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `target ≡ g·h (mod p)` with `g`, `h` monic and coprime mod `p` to a
/// factorization modulo `p^e`, returning the lifted `g`.
fn hensel_lift(fp: &Field, target: &ZPoly, g: &UniPoly, h: &UniPoly, e: u32) -> ZPoly {
    let p = BigInt::from(fp.characteristic());
    let (one, s, t) = g.ext_gcd(h).expect("nonzero");
    debug_assert!(one.is_constant());
    let (mut gz, mut hz) = (from_fp(g), from_fp(h));
    let mut pk = p.clone();
    for _ in 1..e {
        let prod = zmul(&gz, &hz);
        let n = target.len().max(prod.len());
        let diff: ZPoly = (0..n)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                a - b
            })
            .collect();
        let err: ZPoly = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &pk).is_zero());
                c / &pk
            })
            .collect();
        let err = to_fp(fp, &err);
        if !err.is_zero() {
            let tau = (&t * &err).rem(g).expect("nonzero");
            let sigma = (&err - &(&tau * h))
                .exact_div(g)
                .expect("nonzero")
                .expect("Bezout identity makes this exact");
            debug_assert!((&s * &err).rem(h).expect("nonzero") == sigma.rem(h).expect("nonzero"));
            gz = add_scaled(&gz, &from_fp(&tau), &pk);
            hz = add_scaled(&hz, &from_fp(&sigma), &pk);
        }
        pk *= &p;
    }
    gz
}

fn add_scaled(a: &ZPoly, b: &ZPoly, k: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x + y * k
        })
        .collect();
    trim(&mut out);
    out
}

/// Irreducible factors of a squarefree primitive integer polynomial.
fn factor_squarefree(f: ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f[n].clone();

    let mut p = 5u64;
    let (fp, modular) = loop {
        if raw::is_prime_u64(p) && !(&lc % p).is_zero() {
            let fp = Field::prime(p).expect("prime");
            let fbar = to_fp(&fp, &f);
            if fbar.degree() == Some(n) && fbar.gcd(&fbar.derivative()).expect("nonzero").is_constant() {
                let factors: Vec<UniPoly> = fbar
                    .factor_finite(p)
                    .expect("finite field")
                    .into_iter()
                    .map(|(g, _)| g)
                    .collect();
                break (fp, factors);
            }
        }
        p += 2;
    };
    if modular.len() == 1 {
        return vec![f];
    }

    // any factor's coefficients are at most |lc| 2^n ||f||_2 in absolute value
    let max = f.iter().map(|c| c.abs()).max().expect("nonempty");
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max;
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut pe = pb.clone();
    while pe <= &bound * 2 {
        pe *= &pb;
        e += 1;
    }

    let monic_target = zmod(&f.iter().map(|c| c * modinv(&lc, &pe)).collect(), &pe);
    let fbar_monic = to_fp(&fp, &f).monic();
    let mut lifted: Vec<ZPoly> = modular
        .iter()
        .map(|g| {
            let h = fbar_monic.exact_div(g).expect("nonzero").expect("modular factor");
            hensel_lift(&fp, &monic_target, g, &h, e)
        })
        .collect();

    let mut out = Vec::new();
    let mut rest = f;
    let mut size = 1;
    'sizes: while 2 * size <= lifted.len() {
        for subset in combinations(lifted.len(), size) {
            let lc_rest = rest.last().expect("nonzero").clone();
            let prod = subset
                .iter()
                .fold(vec![lc_rest], |acc, &i| zmod(&zmul(&acc, &lifted[i]), &pe));
            let cand = primitive(zsymmod(&prod, &pe));
            if let Some(quot) = zdiv_exact(&rest, &cand) {
                out.push(cand);
                rest = quot;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                continue 'sizes;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(primitive(rest));
    }
    out
}

fn primitive(mut a: ZPoly) -> ZPoly {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(|c| c.sign() == Sign::Minus) {
        g = -g;
    }
    for c in a.iter_mut() {
        *c /= &g;
    }
    a
}

/// Index subsets of `0..n` of the given size, in lexicographic order.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

//! Word-sized arithmetic in `F_p` and in `F_p[t]` on plain coefficient vectors.
//!
//! These helpers sit below [`FieldElement`](super::FieldElement): they back the
//! extension-field representation and the irreducibility search used to build
//! extensions. Polynomials are `Vec<u64>` with the constant term first and no
//! trailing zeros; the zero polynomial is the empty vector.

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        ((a as u128 + p as u128 - b as u128) % p as u128) as u64
    }
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by the extended Euclidean algorithm; `None` for zero.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| add_mod(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| sub_mod(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `m` must be nonzero.
pub(crate) fn poly_divrem(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!m.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < m.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(*m.last().unwrap(), p).expect("trimmed leading coefficient");
    let dm = m.len() - 1;
    let mut quot = vec![0u64; rem.len() - dm];
    while rem.len() >= m.len() {
        let shift = rem.len() - m.len();
        let factor = mul_mod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = factor;
        for (i, &c) in m.iter().enumerate() {
            rem[shift + i] = sub_mod(rem[shift + i], mul_mod(factor, c, p), p);
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    poly_divrem(a, m, p).1
}

pub(crate) fn poly_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, p).expect("nonzero leading coefficient");
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r = poly_rem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    poly_monic(&r0, p)
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub(crate) fn poly_inv_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = m.to_vec();
    let mut r1 = poly_rem(a, m, p);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let scale = inv_mod(r0[0], p)?;
    let inv: Vec<u64> = s0.iter().map(|&c| mul_mod(c, scale, p)).collect();
    Some(poly_rem(&inv, m, p))
}

pub(crate) fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

/// `base^p mod m`.
fn poly_pow_p_mod(base: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test for a monic polynomial over `F_p`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    if m.len() < 2 {
        return false;
    }
    let k = m.len() - 1;
    let x = vec![0u64, 1];
    let mut h = poly_rem(&x, m, p);
    for _ in 1..=k / 2 {
        h = poly_pow_p_mod(&h, m, p);
        let g = poly_gcd(&poly_sub(&h, &x, p), m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_31() {
        assert_eq!(inv_mod(3, 31), Some(21));
        assert_eq!(inv_mod(0, 31), None);
        for a in 1..31 {
            assert_eq!(mul_mod(a, inv_mod(a, 31).unwrap(), 31), 1);
        }
    }

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(10007));
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(!is_prime_u64(10007 * 10009));
    }

    #[test]
    fn ben_or_matches_root_search_for_quadratics() {
        // A monic quadratic over F_7 is irreducible iff it has no root.
        let p = 7;
        for c0 in 0..p {
            for c1 in 0..p {
                let m = vec![c0, c1, 1];
                let has_root = (0..p).any(|x| (c0 + c1 * x + x * x) % p == 0);
                assert_eq!(is_irreducible(&m, p), !has_root, "{m:?}");
            }
        }
    }

    #[test]
    fn poly_inverse_round_trip() {
        let p = 5;
        let m = vec![2, 0, 1]; // t^2 + 2, irreducible over F_5
        assert!(is_irreducible(&m, p));
        for a0 in 0..p {
            for a1 in 0..p {
                let mut a = vec![a0, a1];
                trim(&mut a);
                if a.is_empty() {
                    assert!(poly_inv_mod(&a, &m, p).is_none());
                    continue;
                }
                let inv = poly_inv_mod(&a, &m, p).unwrap();
                assert_eq!(poly_mulmod(&a, &inv, &m, p), vec![1]);
            }
        }
    }
}

//! Tonelli-Shanks square roots in `F_q`, q odd.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FieldElement, FieldError};

impl FieldElement {
    /// A square root of `self`, or `None` for a non-residue.
    ///
    /// The returned root is the smaller of `r` and `-r` in the canonical
    /// element order, so the result does not depend on `seed`; the seed only
    /// drives the search for a non-residue.
    pub fn sqrt(&self, seed: u64) -> Result<Option<FieldElement>, FieldError> {
        let field = self.field().clone();
        let q = field
            .order()
            .ok_or_else(|| FieldError::Unsupported(field.to_string()))?;
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let q_minus_1: BigUint = &q - 1u32;
        let half = &q_minus_1 >> 1;
        if !self.pow_big(&half).is_one() {
            return Ok(None);
        }

        let s = q_minus_1.trailing_zeros().expect("q - 1 > 0");
        let t = &q_minus_1 >> s;

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = loop {
            let cand = field.random(&mut rng)?;
            if !cand.is_zero() && !cand.pow_big(&half).is_one() {
                break cand;
            }
        };

        let mut m = s;
        let mut c = z.pow_big(&t);
        let mut x = self.pow_big(&((&t + 1u32) >> 1));
        let mut b = self.pow_big(&t);
        while !b.is_one() {
            // least i with b^(2^i) = 1
            let mut i = 0;
            let mut probe = b.clone();
            while !probe.is_one() {
                probe = &probe * &probe;
                i += 1;
            }
            debug_assert!(i < m);
            let mut d = c.clone();
            for _ in 0..(m - i - 1) {
                d = &d * &d;
            }
            x = &x * &d;
            c = &d * &d;
            b = &b * &c;
            m = i;
        }
        let neg = -&x;
        Ok(Some(if neg < x { neg } else { x }))
    }

    /// `{r, -r}` sorted, `{0}` for zero, empty for a non-residue.
    pub fn square_roots(&self, seed: u64) -> Result<Vec<FieldElement>, FieldError> {
        Ok(match self.sqrt(seed)? {
            None => Vec::new(),
            Some(r) if r.is_zero() => vec![r],
            Some(r) => {
                let neg = -&r;
                vec![r, neg]
            }
        })
    }
}

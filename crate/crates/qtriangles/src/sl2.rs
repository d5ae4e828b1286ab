//! Character-level sl2 representation calculus.
//!
//! A [`RepSum`] is a finite direct sum of irreducibles `V(k)` (the
//! `k`-dimensional one) recorded as multiplicities. Tensor powers are
//! decomposed in two independent ways: through the character — raise the
//! character polynomial to the `n`-th power and expand it in the q-number
//! basis — and through a Clebsch-Gordan fold that never touches polynomial
//! arithmetic. The two must always agree, which is one of the main
//! cross-checks of the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::laurent::{q_number, LaurentPoly};
use crate::{Coeff, Error, Exponent};

/// Finite multiset of sl2 irreducibles `V(k)` with multiplicities.
/// Stored multiplicities are strictly positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepSum {
    mult: BTreeMap<Exponent, Coeff>,
}

impl RepSum {
    /// Builds a sum from `(dimension, multiplicity)` pairs. Duplicate
    /// dimensions are summed, zero multiplicities dropped; dimensions below
    /// 1 and negative multiplicities are rejected.
    pub fn new<I>(pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Exponent, Coeff)>,
    {
        let mut mult: BTreeMap<Exponent, Coeff> = BTreeMap::new();
        for (k, m) in pairs {
            if k < 1 {
                return Err(Error::InvalidIndex(format!(
                    "irreducible dimension {k} is out of range (k >= 1)"
                )));
            }
            if m.is_negative() {
                return Err(Error::InvalidIndex(format!(
                    "multiplicity {m} of V({k}) is negative"
                )));
            }
            if m.is_zero() {
                continue;
            }
            *mult.entry(k).or_insert_with(Coeff::zero) += m;
        }
        Ok(RepSum { mult })
    }

    /// The single irreducible `V(k)`.
    pub fn irreducible(k: Exponent) -> Result<Self, Error> {
        RepSum::new([(k, Coeff::one())])
    }

    /// The trivial representation `V(1)`.
    pub fn trivial() -> Self {
        RepSum::irreducible(1).expect("1 is a valid dimension")
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Multiplicity of `V(k)` (zero when absent).
    pub fn multiplicity(&self, k: Exponent) -> Coeff {
        self.mult.get(&k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates `(dimension, multiplicity)` pairs in increasing dimension.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &Coeff)> {
        self.mult.iter()
    }

    /// Total dimension `sum_k k * mult[k]`.
    pub fn total_dimension(&self) -> Coeff {
        self.mult.iter().map(|(&k, m)| Coeff::from(k) * m).sum()
    }

    /// The character `sum_k mult[k] * [k]_q`; always symmetric.
    pub fn character(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (&k, m) in &self.mult {
            let basis = q_number(k).expect("stored dimensions are >= 1");
            acc = &acc + &basis.scale(m);
        }
        acc
    }
}

/// Decomposes the `n`-th tensor power of `r` by expanding `character(r)^n`
/// in the q-number basis. A negative coefficient in that expansion cannot
/// occur for a genuine representation sum and is reported as an internal
/// inconsistency.
pub fn decompose_tensor_power(r: &RepSum, n: u64) -> Result<RepSum, Error> {
    if r.is_empty() {
        return Err(Error::EmptyRepresentation);
    }
    let expansion =
        r.character().pow(n).expand_q_basis().map_err(|e| {
            Error::InternalInconsistency(format!("character power not symmetric: {e}"))
        })?;
    if !expansion.all_nonnegative() {
        return Err(Error::InternalInconsistency(
            "negative multiplicity in a tensor-power decomposition".into(),
        ));
    }
    RepSum::new(expansion.iter().map(|(&k, c)| (k, c.clone())))
}

/// Clebsch-Gordan rule for sl2:
/// `V(a) ⊗ V(b) = V(|a-b|+1) ⊕ V(|a-b|+3) ⊕ ... ⊕ V(a+b-1)`.
pub fn clebsch_gordan(a: Exponent, b: Exponent) -> Result<RepSum, Error> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidIndex(format!(
            "Clebsch-Gordan needs dimensions >= 1, got ({a}, {b})"
        )));
    }
    let low = (a - b).abs() + 1;
    let high = a + b - 1;
    let mut c = low;
    let mut parts = Vec::new();
    while c <= high {
        parts.push((c, Coeff::one()));
        c += 2;
    }
    RepSum::new(parts)
}

fn tensor(x: &RepSum, y: &RepSum) -> RepSum {
    let mut mult: BTreeMap<Exponent, Coeff> = BTreeMap::new();
    for (&a, ma) in x.iter() {
        for (&b, mb) in y.iter() {
            let weight = ma * mb;
            let low = (a - b).abs() + 1;
            let high = a + b - 1;
            let mut c = low;
            while c <= high {
                *mult.entry(c).or_insert_with(Coeff::zero) += &weight;
                c += 2;
            }
        }
    }
    RepSum { mult }
}

/// Independent oracle for tensor-power decomposition: folds the
/// Clebsch-Gordan rule pairwise over `n` copies of `r`, distributing over
/// direct sums, with no polynomial arithmetic anywhere.
pub fn oracle_tensor_power(r: &RepSum, n: u64) -> Result<RepSum, Error> {
    if r.is_empty() {
        return Err(Error::EmptyRepresentation);
    }
    let mut acc = RepSum::trivial();
    for _ in 0..n {
        acc = tensor(&acc, r);
    }
    Ok(acc)
}

/// Dimension of the endomorphism algebra of `r^{⊗n}`: the sum of squared
/// multiplicities of its decomposition.
pub fn endomorphism_dim(r: &RepSum, n: u64) -> Result<Coeff, Error> {
    let decomposed = decompose_tensor_power(r, n)?;
    Ok(decomposed.iter().map(|(_, m)| m * m).sum())
}

/// Multiplicity of the trivial representation `V(1)` in `r^{⊗n}`. Zero is a
/// legitimate answer (e.g. odd tensor powers of `V(2)`).
pub fn invariant_mult(r: &RepSum, n: u64) -> Result<Coeff, Error> {
    Ok(decompose_tensor_power(r, n)?.multiplicity(1))
}

impl fmt::Display for RepSum {
    /// Textual form `k:mult` joined by `+`, e.g. `2:1+3:1`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, m)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{k}:{m}")?;
        }
        Ok(())
    }
}

impl FromStr for RepSum {
    type Err = Error;

    /// Parses `k:mult` pairs joined by `+`; a bare `k` abbreviates `k:1`.
    /// Whitespace is allowed around tokens.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut pairs = Vec::new();
        let mut offset = 0usize;
        for piece in s.split('+') {
            let trimmed = piece.trim();
            if trimmed.is_empty() {
                return Err(Error::parse(
                    offset,
                    "empty component in representation sum",
                ));
            }
            let (k_text, m_text) = match trimmed.split_once(':') {
                Some((k, m)) => (k.trim(), Some(m.trim())),
                None => (trimmed, None),
            };
            let k: i64 = k_text.parse().map_err(|_| {
                Error::parse(offset, format!("expected a dimension, found {k_text:?}"))
            })?;
            let m = match m_text {
                None => Coeff::one(),
                Some(text) => Coeff::parse_bytes(text.as_bytes(), 10)
                    .filter(|v| !v.is_negative())
                    .ok_or_else(|| {
                        Error::parse(offset, format!("expected a multiplicity, found {text:?}"))
                    })?,
            };
            pairs.push((Exponent::from(k), m));
            offset += piece.len() + 1;
        }
        RepSum::new(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> Coeff {
        Coeff::from(n)
    }

    fn rep(pairs: &[(i128, i64)]) -> RepSum {
        RepSum::new(pairs.iter().map(|&(k, m)| (k, big(m)))).unwrap()
    }

    /// Every nonempty representation sum with total dimension at most `max`.
    pub(crate) fn all_rep_sums(max: u64) -> Vec<RepSum> {
        fn parts_into(total: u64, min_part: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if total == 0 {
                out.push(current.clone());
                return;
            }
            for part in min_part..=total {
                current.push(part);
                parts_into(total - part, part, current, out);
                current.pop();
            }
        }
        let mut reps = Vec::new();
        for dim in 1..=max {
            let mut partitions = Vec::new();
            parts_into(dim, 1, &mut Vec::new(), &mut partitions);
            for partition in partitions {
                let rep = RepSum::new(
                    partition
                        .into_iter()
                        .map(|part| (part as Exponent, Coeff::one())),
                )
                .unwrap();
                reps.push(rep);
            }
        }
        reps
    }

    #[test]
    fn character_examples() {
        assert_eq!(rep(&[(2, 1)]).character(), q_number(2).unwrap());
        assert_eq!(rep(&[(1, 1)]).character(), LaurentPoly::one());
        let p: LaurentPoly = "q^2+q+3+q^-1+q^-2".parse().unwrap();
        assert_eq!(rep(&[(1, 2), (2, 1), (3, 1)]).character(), p);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_tensor_power(&rep(&[(2, 1)]), 5).unwrap(),
            rep(&[(2, 5), (4, 4), (6, 1)])
        );
        // (V(1) ⊕ V(2))^⊗2: the positive part of the order-2 Motzkin row 2
        assert_eq!(
            decompose_tensor_power(&rep(&[(1, 1), (2, 1)]), 2).unwrap(),
            rep(&[(1, 2), (2, 2), (3, 1)])
        );
        // (V(2) ⊕ V(3))^⊗2: the positive part of the order-3 Motzkin row 2
        assert_eq!(
            decompose_tensor_power(&rep(&[(2, 1), (3, 1)]), 2).unwrap(),
            rep(&[(1, 2), (2, 2), (3, 2), (4, 2), (5, 1)])
        );
        assert_eq!(
            decompose_tensor_power(&rep(&[(4, 2), (7, 1)]), 0).unwrap(),
            RepSum::trivial()
        );
        assert!(matches!(
            decompose_tensor_power(&RepSum::default(), 3),
            Err(Error::EmptyRepresentation)
        ));
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(2, 2).unwrap(), rep(&[(1, 1), (3, 1)]));
        assert_eq!(clebsch_gordan(1, 9).unwrap(), rep(&[(9, 1)]));
        assert_eq!(
            clebsch_gordan(3, 3).unwrap(),
            rep(&[(1, 1), (3, 1), (5, 1)])
        );
        assert!(clebsch_gordan(0, 2).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_tensor_power(&rep(&[(2, 1)]), 3).unwrap(),
            rep(&[(2, 2), (4, 1)])
        );
        assert_eq!(
            oracle_tensor_power(&rep(&[(2, 1), (3, 1)]), 1).unwrap(),
            rep(&[(2, 1), (3, 1)])
        );
        assert_eq!(
            oracle_tensor_power(&rep(&[(3, 1)]), 3).unwrap(),
            rep(&[(1, 1), (3, 3), (5, 2), (7, 1)])
        );
    }

    #[test]
    fn endomorphism_and_invariant_examples() {
        let v2 = rep(&[(2, 1)]);
        assert_eq!(endomorphism_dim(&v2, 3).unwrap(), big(5));
        assert_eq!(invariant_mult(&v2, 6).unwrap(), big(5));
        // odd powers of V(2) have no invariants
        assert_eq!(invariant_mult(&v2, 3).unwrap(), big(0));

        let motzkin3 = rep(&[(2, 1), (3, 1)]);
        assert_eq!(endomorphism_dim(&motzkin3, 3).unwrap(), big(245));
        assert_eq!(invariant_mult(&motzkin3, 6).unwrap(), big(245));

        let trivial = rep(&[(1, 1)]);
        for n in 0..5 {
            assert_eq!(endomorphism_dim(&trivial, n).unwrap(), big(1));
            assert_eq!(invariant_mult(&trivial, n).unwrap(), big(1));
        }
    }

    #[test]
    fn oracle_agrees_with_character_route() {
        for r in all_rep_sums(5) {
            for n in 0..=6 {
                assert_eq!(
                    decompose_tensor_power(&r, n).unwrap(),
                    oracle_tensor_power(&r, n).unwrap(),
                    "rep {r} power {n}"
                );
            }
        }
    }

    #[test]
    fn dimension_conservation() {
        for r in all_rep_sums(4) {
            let d = r.total_dimension();
            for n in 0..=5u32 {
                assert_eq!(
                    decompose_tensor_power(&r, n as u64)
                        .unwrap()
                        .total_dimension(),
                    d.pow(n)
                );
            }
        }
    }

    #[test]
    fn sum_of_squares_via_representations() {
        for r in all_rep_sums(5) {
            for n in 0..=6 {
                assert_eq!(
                    endomorphism_dim(&r, n).unwrap(),
                    invariant_mult(&r, 2 * n).unwrap(),
                    "rep {r} power {n}"
                );
            }
        }
    }

    #[test]
    fn oracle_fold_is_associative_on_samples() {
        let reps = [
            rep(&[(2, 1), (3, 1)]),
            rep(&[(1, 2), (3, 1)]),
            rep(&[(4, 1)]),
        ];
        for x in &reps {
            for y in &reps {
                for z in &reps {
                    let left = tensor(&tensor(x, y), z);
                    let right = tensor(x, &tensor(y, z));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(RepSum::new([(0, big(1))]).is_err());
        assert!(RepSum::new([(-2, big(1))]).is_err());
        assert!(RepSum::new([(2, big(-1))]).is_err());
        assert!(RepSum::new([(2, big(0))]).unwrap().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let r: RepSum = "2:1+3:1".parse().unwrap();
        assert_eq!(r, rep(&[(2, 1), (3, 1)]));
        assert_eq!(r.to_string(), "2:1+3:1");

        let r: RepSum = "4".parse().unwrap();
        assert_eq!(r, rep(&[(4, 1)]));

        let r: RepSum = " 1:2 + 2:1 + 3:1 ".parse().unwrap();
        assert_eq!(r, rep(&[(1, 2), (2, 1), (3, 1)]));

        // duplicate dimensions accumulate
        let r: RepSum = "2+2:2".parse().unwrap();
        assert_eq!(r, rep(&[(2, 3)]));

        for bad in ["", "+", "2:", ":3", "2:-1", "x", "2::1", "0:1"] {
            assert!(
                bad.parse::<RepSum>().is_err(),
                "expected failure for {bad:?}"
            );
        }
    }

    proptest! {
        #[test]
        fn characters_are_symmetric(pairs in prop::collection::vec((1i128..9, 0i64..5), 0..5)) {
            if let Ok(r) = RepSum::new(pairs.into_iter().map(|(k, m)| (k, big(m)))) {
                prop_assert!(r.character().is_symmetric());
            }
        }

        #[test]
        fn character_of_decomposition_is_character_power(
            pairs in prop::collection::vec((1i128..5, 1i64..3), 1..3),
            n in 0u64..5,
        ) {
            let r = RepSum::new(pairs.into_iter().map(|(k, m)| (k, big(m)))).unwrap();
            prop_assume!(!r.is_empty());
            let decomposed = decompose_tensor_power(&r, n).unwrap();
            prop_assert_eq!(decomposed.character(), r.character().pow(n));
        }
    }
}

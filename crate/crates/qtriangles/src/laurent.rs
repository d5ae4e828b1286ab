//! Exact Laurent polynomials in one variable `q` and the q-number basis.
//!
//! A [`LaurentPoly`] is a sparse map from exponent to arbitrary-precision
//! integer coefficient; zero coefficients are never stored, so the zero
//! polynomial is the empty map. The q-numbers
//! `[k]_q = q^{1-k} + q^{3-k} + ... + q^{k-1}` form a basis of the symmetric
//! polynomials, and [`LaurentPoly::expand_q_basis`] computes the (unique)
//! coordinates of a symmetric polynomial in that basis by repeatedly peeling
//! the leading term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{Coeff, Error, Exponent};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, Coeff>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::constant(Coeff::one())
    }

    /// Constant polynomial `c`.
    pub fn constant(c: Coeff) -> Self {
        LaurentPoly::from_terms([(0, c)])
    }

    /// Single term `c * q^e`.
    pub fn monomial(e: Exponent, c: Coeff) -> Self {
        LaurentPoly::from_terms([(e, c)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Duplicate
    /// exponents are summed; zero coefficients are dropped.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Coeff)>,
    {
        let mut terms: BTreeMap<Exponent, Coeff> = BTreeMap::new();
        for (e, c) in pairs {
            add_term(&mut terms, e, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: Exponent) -> Coeff {
        self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates stored terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &Coeff)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Smallest stored exponent, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    /// Largest stored exponent, `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<Exponent> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Exact `n`-th power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, n: u64) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = mul_impl(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = mul_impl(&base, &base);
            }
        }
        result
    }

    /// Substitutes `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> Coeff {
        self.terms.values().sum()
    }

    /// The polynomial with `q` replaced by `q^{-1}`.
    pub fn reflect(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// True iff the coefficient of `q^e` equals the coefficient of `q^{-e}`
    /// for every exponent.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    /// True iff the coefficient of `q^e` is the negative of the coefficient
    /// of `q^{-e}` for every exponent (so the constant term must vanish).
    pub fn is_antisymmetric(&self) -> bool {
        self.terms.iter().all(|(&e, c)| {
            self.terms
                .get(&-e)
                .map(|d| d == &-c.clone())
                .unwrap_or(false)
        })
    }

    /// Expands a symmetric polynomial in the q-number basis.
    ///
    /// Peels `a * [N]_q` where `N - 1` is the current leading exponent and
    /// `a` its coefficient, and repeats until nothing is left. The leading
    /// exponent strictly decreases, so this terminates, and for symmetric
    /// input every intermediate remainder stays symmetric. Non-symmetric
    /// input is rejected: no such expansion exists.
    pub fn expand_q_basis(&self) -> Result<QExpansion, Error> {
        if !self.is_symmetric() {
            return Err(Error::SymmetryViolation(format!(
                "cannot expand {self} in the q-number basis"
            )));
        }
        let mut rest = self.terms.clone();
        let mut coeffs = BTreeMap::new();
        while let Some((&lead, c)) = rest.last_key_value() {
            let a = c.clone();
            let k = lead + 1;
            // subtract a * [k]_q, whose exponents are 1-k, 3-k, ..., k-1
            let mut e = 1 - k;
            while e < k {
                add_term(&mut rest, e, -a.clone());
                e += 2;
            }
            coeffs.insert(k, a);
        }
        Ok(QExpansion { coeffs })
    }
}

/// The q-number `[k]_q = q^{1-k} + q^{3-k} + ... + q^{k-1}` for `k >= 1`.
pub fn q_number(k: Exponent) -> Result<LaurentPoly, Error> {
    if k < 1 {
        return Err(Error::InvalidIndex(format!(
            "q-number [{k}]_q needs k >= 1"
        )));
    }
    let mut terms = BTreeMap::new();
    let mut e = 1 - k;
    while e < k {
        terms.insert(e, Coeff::one());
        e += 2;
    }
    Ok(LaurentPoly { terms })
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut terms = a.terms.clone();
    for (&e, c) in &b.terms {
        add_term(&mut terms, e, c.clone());
    }
    LaurentPoly { terms }
}

fn sub_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut terms = a.terms.clone();
    for (&e, c) in &b.terms {
        add_term(&mut terms, e, -c.clone());
    }
    LaurentPoly { terms }
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut terms: BTreeMap<Exponent, Coeff> = BTreeMap::new();
    for (&ea, ca) in &a.terms {
        for (&eb, cb) in &b.terms {
            add_term(&mut terms, ea + eb, ca * cb);
        }
    }
    LaurentPoly { terms }
}

fn add_term(terms: &mut BTreeMap<Exponent, Coeff>, e: Exponent, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Coordinates of a symmetric Laurent polynomial in the basis `[k]_q`,
/// `k >= 1`. Coefficients may be negative for general symmetric input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QExpansion {
    coeffs: BTreeMap<Exponent, Coeff>,
}

impl QExpansion {
    /// Builds an expansion from `(k, coefficient)` pairs. Duplicate indices
    /// are summed and zero coefficients dropped; `k < 1` is rejected.
    pub fn from_coeffs<I>(pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Exponent, Coeff)>,
    {
        let mut coeffs = BTreeMap::new();
        for (k, c) in pairs {
            if k < 1 {
                return Err(Error::InvalidIndex(format!(
                    "q-basis index {k} is out of range (k >= 1)"
                )));
            }
            add_term(&mut coeffs, k, c);
        }
        Ok(QExpansion { coeffs })
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `[k]_q` (zero when absent).
    pub fn coeff(&self, k: Exponent) -> Coeff {
        self.coeffs.get(&k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates stored coefficients in increasing basis index order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &Coeff)> {
        self.coeffs.iter()
    }

    /// Largest basis index with a nonzero coefficient.
    pub fn max_index(&self) -> Option<Exponent> {
        self.coeffs.keys().next_back().copied()
    }

    /// Reassembles the polynomial `sum_k coeffs[k] * [k]_q`.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (&k, c) in &self.coeffs {
            let basis = q_number(k).expect("stored basis indices are >= 1");
            acc = &acc + &basis.scale(c);
        }
        acc
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in decreasing exponent, `c*q^e` pieces with the
    /// coefficient 1 omitted, `q` for exponent 1 and a bare integer for
    /// exponent 0, e.g. `q^2+q+3+q^-1+q^-2`. Parses back via [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the textual polynomial grammar: terms `c*q^e` joined by `+`
    /// or `-`, where the coefficient, the `*` and the `^e` part may each be
    /// omitted (`q`, `q^-3`, `2*q^3`, bare integers). Whitespace is allowed
    /// between tokens. Coefficients are exact integers of any size;
    /// exponents must fit in a signed 64-bit integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = PolyParser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        p.parse()
    }
}

struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn parse(&mut self) -> Result<LaurentPoly, Error> {
        self.skip_ws();
        if self.at_end() {
            return Err(Error::parse(self.pos, "empty polynomial"));
        }
        let mut terms: BTreeMap<Exponent, Coeff> = BTreeMap::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (e, c) = self.term()?;
            add_term(&mut terms, e, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(other) => {
                    return Err(Error::parse(
                        self.pos,
                        format!("expected '+' or '-', found {:?}", other as char),
                    ));
                }
            }
        }
        Ok(LaurentPoly { terms })
    }

    fn term(&mut self) -> Result<(Exponent, Coeff), Error> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() != Some(b'q') {
                        return Err(Error::parse(self.pos, "expected 'q' after '*'"));
                    }
                    let e = self.q_part()?;
                    Ok((e, c))
                } else if self.peek() == Some(b'q') {
                    let e = self.q_part()?;
                    Ok((e, c))
                } else {
                    Ok((0, c))
                }
            }
            Some(b'q') => {
                let e = self.q_part()?;
                Ok((e, Coeff::one()))
            }
            Some(other) => Err(Error::parse(
                self.pos,
                format!("expected a term, found {:?}", other as char),
            )),
            None => Err(Error::parse(
                self.pos,
                "expected a term, found end of input",
            )),
        }
    }

    fn q_part(&mut self) -> Result<Exponent, Error> {
        debug_assert_eq!(self.peek(), Some(b'q'));
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()
        } else {
            Ok(1)
        }
    }

    fn exponent(&mut self) -> Result<Exponent, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::parse(self.pos, "expected digits in exponent"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<i64>()
            .map(Exponent::from)
            .map_err(|_| Error::parse(start, format!("exponent {text} does not fit in 64 bits")))
    }

    fn integer(&mut self) -> Result<Coeff, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let text = &self.bytes[start..self.pos];
        Coeff::parse_bytes(text, 10).ok_or_else(|| Error::parse(start, "expected an integer"))
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }
}

//! Named triangle families, closed entry formulas, and named sequences.
//!
//! The families are all instances of the generic engine:
//!
//! - `pascal(d)`: initial row `{0: 1}`, offsets `±(d-1), ±(d-3), ...`
//!   (`d` offsets of weight 1);
//! - `catalan(d)`: the antisymmetric seed `{-1:-1, 1:1}` with the same rule;
//! - `motzkin(d)`: the antisymmetric seed with the contiguous offsets
//!   `-(d-1) ..= d-1` (`2d-1` offsets of weight 1);
//! - `general_char_triangle(p)`: the antisymmetric seed with the rule read
//!   off any symmetric multiplier polynomial `p`.
//!
//! The closed formulas compute entries through polynomial powers of
//! `[d]_q` rather than through the row recurrence, so agreement between the
//! two routes is a genuine cross-check and not a tautology.

use std::fmt;
use std::str::FromStr;

use crate::laurent::{q_number, LaurentPoly};
use crate::triangle::{InitRow, StepRule, Triangle};
use crate::{Coeff, Error, Exponent};

fn check_order(d: u32) -> Result<(), Error> {
    if d < 2 {
        return Err(Error::InvalidOrder(d));
    }
    Ok(())
}

fn pascal_rule(d: u32) -> StepRule {
    let d = d as i128;
    let mut offsets = Vec::new();
    let mut o = 1 - d;
    while o < d {
        offsets.push(o);
        o += 2;
    }
    StepRule::uniform(offsets).expect("d >= 2 gives a nonempty rule")
}

fn motzkin_rule(d: u32) -> StepRule {
    let d = d as i128;
    StepRule::uniform((1 - d)..=(d - 1)).expect("d >= 2 gives a nonempty rule")
}

/// The Pascal triangle of order `d`: entries of row `n` are the coefficients
/// of `[d]_q^n`.
pub fn pascal(d: u32) -> Result<Triangle, Error> {
    check_order(d)?;
    Ok(Triangle::new(InitRow::delta(), pascal_rule(d)))
}

/// The Catalan triangle of order `d`.
pub fn catalan(d: u32) -> Result<Triangle, Error> {
    check_order(d)?;
    Ok(Triangle::new(InitRow::signed_seed(), pascal_rule(d)))
}

/// The Motzkin triangle of order `d`; its rule is the Pascal rule of order
/// `2d - 1` read over contiguous columns.
pub fn motzkin(d: u32) -> Result<Triangle, Error> {
    check_order(d)?;
    Ok(Triangle::new(InitRow::signed_seed(), motzkin_rule(d)))
}

/// Triangle whose rule is read off an arbitrary symmetric multiplier
/// polynomial, with the antisymmetric seed. The positive entries of row `n`
/// are the coordinates of `p^n` in the q-number basis.
pub fn general_char_triangle(p: &LaurentPoly) -> Result<Triangle, Error> {
    if !p.is_symmetric() {
        return Err(Error::SymmetryViolation(format!(
            "multiplier {p} must be symmetric"
        )));
    }
    let rule = StepRule::from_poly(p)?;
    Ok(Triangle::new(InitRow::signed_seed(), rule))
}

/// Row `n` of the Pascal family as a polynomial, computed by `[d]_q^n`
/// (repeated squaring, no row recurrence).
pub fn pascal_row_poly(d: u32, n: usize) -> Result<LaurentPoly, Error> {
    check_order(d)?;
    Ok(q_number(d as i128).expect("d >= 2").pow(n as u64))
}

/// Generalised binomial coefficient: the entry of `pascal(d)` at column `k`
/// of row `n`, computed via the polynomial power route.
pub fn binomial_general(d: u32, k: Exponent, n: usize) -> Result<Coeff, Error> {
    Ok(pascal_row_poly(d, n)?.coeff(k))
}

/// Catalan entry as a difference of two generalised binomials.
pub fn catalan_via_binomials(d: u32, k: Exponent, n: usize) -> Result<Coeff, Error> {
    let row = pascal_row_poly(d, n)?;
    Ok(row.coeff(k - 1) - row.coeff(k + 1))
}

/// Motzkin entry as a difference of generalised binomials of order `2d - 1`.
pub fn motzkin_via_binomials(d: u32, k: Exponent, n: usize) -> Result<Coeff, Error> {
    check_order(d)?;
    let row = pascal_row_poly(2 * d - 1, n)?;
    Ok(row.coeff(2 * k - 2) - row.coeff(2 * k + 2))
}

/// Motzkin entry as a sum of two Catalan entries of order `2d - 1`.
pub fn motzkin_via_catalan(d: u32, k: Exponent, n: usize) -> Result<Coeff, Error> {
    check_order(d)?;
    let row = pascal_row_poly(2 * d - 1, n)?;
    let c = |k: Exponent| row.coeff(k - 1) - row.coeff(k + 1);
    Ok(c(2 * k - 1) + c(2 * k + 1))
}

/// Which triangle family a sum-of-squares sequence is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Pascal,
    Catalan,
    Motzkin,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pascal => write!(f, "pascal"),
            Family::Catalan => write!(f, "catalan"),
            Family::Motzkin => write!(f, "motzkin"),
        }
    }
}

/// A CLI-visible sequence identifier: lowercase name, parenthesized order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceName {
    /// Catalan numbers: first positive column of the order-2 Catalan
    /// triangle over the even rows.
    Catalan,
    /// Motzkin numbers: first positive column of the order-2 Motzkin
    /// triangle over all rows.
    Motzkin,
    /// Riordan numbers: first positive column of the order-3 Catalan
    /// triangle over all rows.
    Riordan,
    /// `catalan(d)`: first positive column of the order-`d` Catalan
    /// triangle over all rows (so `catalan(3)` is the Riordan sequence,
    /// while bare `catalan` keeps the classical even-row convention).
    CatalanOrder(u32),
    /// `motzkin(d)`: first positive column of the order-`d` Motzkin
    /// triangle over all rows.
    MotzkinOrder(u32),
    /// `central_pascal(d)`: central column of the order-`d` Pascal triangle
    /// over the even rows.
    CentralPascal(u32),
    /// `sum_of_squares(d, family)`: sum of squared row entries (all columns
    /// for `pascal`, positive columns otherwise), one value per row.
    SumOfSquares(u32, Family),
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceName::Catalan => write!(f, "catalan"),
            SequenceName::Motzkin => write!(f, "motzkin"),
            SequenceName::Riordan => write!(f, "riordan"),
            SequenceName::CatalanOrder(d) => write!(f, "catalan({d})"),
            SequenceName::MotzkinOrder(d) => write!(f, "motzkin({d})"),
            SequenceName::CentralPascal(d) => write!(f, "central_pascal({d})"),
            SequenceName::SumOfSquares(d, fam) => write!(f, "sum_of_squares({d},{fam})"),
        }
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let unknown = || Error::UnknownSequence(s.to_string());
        let text = s.trim();
        let (head, args) = match text.find('(') {
            None => (text, Vec::new()),
            Some(open) => {
                let inner = text[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
                let args: Vec<&str> = inner.split(',').map(str::trim).collect();
                (&text[..open], args)
            }
        };
        let order = |arg: &str| -> Result<u32, Error> {
            let d: u32 = arg.parse().map_err(|_| unknown())?;
            check_order(d)?;
            Ok(d)
        };
        match (head, args.as_slice()) {
            ("catalan", []) => Ok(SequenceName::Catalan),
            ("motzkin", []) => Ok(SequenceName::Motzkin),
            ("riordan", []) => Ok(SequenceName::Riordan),
            ("catalan", [d]) => Ok(SequenceName::CatalanOrder(order(d)?)),
            ("motzkin", [d]) => Ok(SequenceName::MotzkinOrder(order(d)?)),
            ("central_pascal", [d]) => Ok(SequenceName::CentralPascal(order(d)?)),
            ("sum_of_squares", [d, family]) => {
                let fam = match *family {
                    "pascal" => Family::Pascal,
                    "catalan" => Family::Catalan,
                    "motzkin" => Family::Motzkin,
                    _ => return Err(unknown()),
                };
                Ok(SequenceName::SumOfSquares(order(d)?, fam))
            }
            _ => Err(unknown()),
        }
    }
}

/// Sum of squared entries of row `n`: all columns for symmetric-row
/// families, positive columns for antisymmetric-row ones.
fn squares_of_row(t: &Triangle, n: usize, positive_only: bool) -> Coeff {
    let row = t.row(n);
    if positive_only {
        row.range(1..).map(|(_, v)| v * v).sum()
    } else {
        row.values().map(|v| v * v).sum()
    }
}

/// The first `count` terms of a named sequence, always computed from the
/// triangle engine.
pub fn named_sequence(name: &str, count: usize) -> Result<Vec<Coeff>, Error> {
    let name: SequenceName = name.parse()?;
    sequence_values(&name, count)
}

/// Same as [`named_sequence`], for an already parsed name.
pub fn sequence_values(name: &SequenceName, count: usize) -> Result<Vec<Coeff>, Error> {
    let values = match name {
        SequenceName::Catalan => {
            let t = catalan(2)?;
            (0..count).map(|n| t.entry(1, 2 * n)).collect()
        }
        SequenceName::Motzkin => {
            let t = motzkin(2)?;
            (0..count).map(|n| t.entry(1, n)).collect()
        }
        SequenceName::Riordan => {
            let t = catalan(3)?;
            (0..count).map(|n| t.entry(1, n)).collect()
        }
        SequenceName::CatalanOrder(d) => {
            let t = catalan(*d)?;
            (0..count).map(|n| t.entry(1, n)).collect()
        }
        SequenceName::MotzkinOrder(d) => {
            let t = motzkin(*d)?;
            (0..count).map(|n| t.entry(1, n)).collect()
        }
        SequenceName::CentralPascal(d) => {
            let t = pascal(*d)?;
            (0..count).map(|n| t.entry(0, 2 * n)).collect()
        }
        SequenceName::SumOfSquares(d, family) => {
            let (t, positive_only) = match family {
                Family::Pascal => (pascal(*d)?, false),
                Family::Catalan => (catalan(*d)?, true),
                Family::Motzkin => (motzkin(*d)?, true),
            };
            (0..count)
                .map(|n| squares_of_row(&t, n, positive_only))
                .collect()
        }
    };
    Ok(values)
}

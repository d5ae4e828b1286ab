//! Generic integer-triangle engine: an initial row plus a weighted offset
//! rule generate a doubly-indexed triangle of exact integers.
//!
//! Row `n+1` is obtained from row `n` by
//! `out[k] = sum_o weights[o] * row[k + o]`, so the classical triangles
//! (Pascal, Catalan, Motzkin and their higher orders) are all instances with
//! particular initial rows and offset sets. Rows are generated lazily and
//! cached; completed rows are immutable, and concurrent readers never observe
//! a partially built row.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::{Coeff, Error, Exponent};

/// One triangle row: sparse association from column index to value.
/// Zero values are never stored.
pub type Row = BTreeMap<Exponent, Coeff>;

/// Weighted offset rule taking one row to the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRule {
    weights: BTreeMap<Exponent, Coeff>,
}

impl StepRule {
    /// Builds a rule from `(offset, weight)` pairs. Duplicate offsets are
    /// summed and zero weights dropped; a rule with no weights left is
    /// rejected.
    pub fn new<I>(pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Exponent, Coeff)>,
    {
        let mut weights: BTreeMap<Exponent, Coeff> = BTreeMap::new();
        for (o, w) in pairs {
            if w.is_zero() {
                continue;
            }
            let slot = weights.entry(o).or_insert_with(Coeff::zero);
            *slot += w;
            if slot.is_zero() {
                weights.remove(&o);
            }
        }
        if weights.is_empty() {
            return Err(Error::EmptyRule);
        }
        Ok(StepRule { weights })
    }

    /// Rule with weight 1 at each given offset.
    pub fn uniform<I>(offsets: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Exponent>,
    {
        StepRule::new(offsets.into_iter().map(|o| (o, Coeff::one())))
    }

    /// Reads the rule weights off a multiplier polynomial.
    pub fn from_poly(p: &LaurentPoly) -> Result<Self, Error> {
        StepRule::new(p.iter().map(|(&e, c)| (e, c.clone())))
    }

    /// Weight at `offset` (zero when absent).
    pub fn weight(&self, offset: Exponent) -> Coeff {
        self.weights
            .get(&offset)
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// Iterates `(offset, weight)` pairs in increasing offset order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &Coeff)> {
        self.weights.iter()
    }

    pub fn offset_count(&self) -> usize {
        self.weights.len()
    }

    pub fn min_offset(&self) -> Exponent {
        *self.weights.keys().next().expect("rule is nonempty")
    }

    pub fn max_offset(&self) -> Exponent {
        *self.weights.keys().next_back().expect("rule is nonempty")
    }

    /// True iff `weights[o] == weights[-o]` for every offset.
    pub fn is_symmetric(&self) -> bool {
        self.weights
            .iter()
            .all(|(&o, w)| self.weights.get(&-o) == Some(w))
    }

    /// The multiplier polynomial `sum_o weights[o] * q^o`. For symmetric
    /// rules (the only kind the triangle families use) multiplying a row
    /// polynomial by it is exactly one application of the rule.
    pub fn multiplier_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.weights.iter().map(|(&o, w)| (o, w.clone())))
    }
}

/// Initial triangle row. May be empty, which yields the all-zero triangle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InitRow {
    entries: Row,
}

impl InitRow {
    /// Builds an initial row from `(column, value)` pairs, summing duplicate
    /// columns and dropping zeros.
    pub fn new<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Coeff)>,
    {
        let mut entries: Row = BTreeMap::new();
        for (k, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = entries.entry(k).or_insert_with(Coeff::zero);
            *slot += v;
            if slot.is_zero() {
                entries.remove(&k);
            }
        }
        InitRow { entries }
    }

    /// The single-entry row `{0: 1}`.
    pub fn delta() -> Self {
        InitRow::new([(0, Coeff::one())])
    }

    /// The antisymmetric seed `{-1: -1, 1: 1}` shared by the Catalan and
    /// Motzkin families.
    pub fn signed_seed() -> Self {
        InitRow::new([(-1, -Coeff::one()), (1, Coeff::one())])
    }

    pub fn entries(&self) -> &Row {
        &self.entries
    }

    pub fn as_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.entries.iter().map(|(&k, v)| (k, v.clone())))
    }
}

/// Applies one step of `rule` to a row: `out[k] = sum_o weights[o] * row[k+o]`.
pub fn next_row(row: &Row, rule: &StepRule) -> Row {
    let mut out: Row = BTreeMap::new();
    for (&col, val) in row {
        for (&offset, weight) in rule.iter() {
            // the entry at `col` feeds the entry at `col - offset` below it
            let target = col - offset;
            let slot = out.entry(target).or_insert_with(Coeff::zero);
            *slot += weight * val;
            if slot.is_zero() {
                out.remove(&target);
            }
        }
    }
    out
}

/// Lazily generated triangle: row 0 is the initial row, each later row is
/// one application of the step rule.
#[derive(Debug)]
pub struct Triangle {
    init: InitRow,
    rule: StepRule,
    rows: RwLock<Vec<Arc<Row>>>,
}

/// Which entry a sum-of-squares identity is anchored at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// Column 0 of row `2n` against the squares of all of row `n`
    /// (symmetric rows).
    Center,
    /// Column 1 of row `2n` against the squares of the positive part of
    /// row `n` (antisymmetric rows).
    FirstPositive,
}

/// Both sides of a sum-of-squares identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaresCheck {
    pub lhs: Coeff,
    pub rhs: Coeff,
    pub holds: bool,
}

impl Triangle {
    pub fn new(init: InitRow, rule: StepRule) -> Self {
        let row0 = Arc::new(init.entries.clone());
        Triangle {
            init,
            rule,
            rows: RwLock::new(vec![row0]),
        }
    }

    pub fn init(&self) -> &InitRow {
        &self.init
    }

    pub fn rule(&self) -> &StepRule {
        &self.rule
    }

    fn ensure_rows(&self, n: usize) {
        {
            let rows = self.rows.read().expect("triangle cache poisoned");
            if rows.len() > n {
                return;
            }
        }
        let mut rows = self.rows.write().expect("triangle cache poisoned");
        while rows.len() <= n {
            let next = next_row(rows.last().expect("row 0 always present"), &self.rule);
            rows.push(Arc::new(next));
        }
    }

    /// Full signed row `n` as a shared sparse map.
    pub fn row(&self, n: usize) -> Arc<Row> {
        self.ensure_rows(n);
        let rows = self.rows.read().expect("triangle cache poisoned");
        Arc::clone(&rows[n])
    }

    /// Exact value at column `k` of row `n`; zero for absent columns.
    pub fn entry(&self, k: Exponent, n: usize) -> Coeff {
        self.row(n).get(&k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Entries with `k >= 1` in increasing column order.
    pub fn positive_part(&self, n: usize) -> Vec<(Exponent, Coeff)> {
        self.row(n)
            .range(1..)
            .map(|(&k, v)| (k, v.clone()))
            .collect()
    }

    /// Row `n` read as the Laurent polynomial `sum_k row[k] * q^k`.
    pub fn row_as_poly(&self, n: usize) -> LaurentPoly {
        LaurentPoly::from_terms(self.row(n).iter().map(|(&k, v)| (k, v.clone())))
    }

    /// Row `n` densified over its support: the starting column and every
    /// value from the smallest to the largest stored column, zeros included.
    /// `None` for an all-zero row.
    pub fn dense_row(&self, n: usize) -> Option<(Exponent, Vec<Coeff>)> {
        let row = self.row(n);
        let (&min, _) = row.first_key_value()?;
        let (&max, _) = row.last_key_value()?;
        let mut values = Vec::with_capacity((max - min + 1) as usize);
        let mut k = min;
        while k <= max {
            values.push(row.get(&k).cloned().unwrap_or_else(Coeff::zero));
            k += 1;
        }
        Some((min, values))
    }

    pub fn row_is_symmetric(&self, n: usize) -> bool {
        let row = self.row(n);
        row.iter().all(|(&k, v)| row.get(&-k) == Some(v))
    }

    pub fn row_is_antisymmetric(&self, n: usize) -> bool {
        let row = self.row(n);
        row.iter()
            .all(|(&k, v)| row.get(&-k).map(|w| w == &-v.clone()).unwrap_or(false))
    }

    /// Checks one instance of the sum-of-squares identity: the anchored
    /// entry of row `2n` against the sum of squared entries of row `n`
    /// (all columns for [`Anchor::Center`], columns `k >= 1` for
    /// [`Anchor::FirstPositive`]). The anchor must match the symmetry of
    /// the rows.
    pub fn sum_of_squares_identity(&self, n: usize, anchor: Anchor) -> Result<SquaresCheck, Error> {
        match anchor {
            Anchor::Center => {
                if !(self.row_is_symmetric(n) && self.row_is_symmetric(2 * n)) {
                    return Err(Error::SymmetryViolation(format!(
                        "center anchor needs symmetric rows, but row {n} or {} is not",
                        2 * n
                    )));
                }
                let lhs = self.entry(0, 2 * n);
                let rhs: Coeff = self.row(n).values().map(|v| v * v).sum();
                let holds = lhs == rhs;
                Ok(SquaresCheck { lhs, rhs, holds })
            }
            Anchor::FirstPositive => {
                if !(self.row_is_antisymmetric(n) && self.row_is_antisymmetric(2 * n)) {
                    return Err(Error::SymmetryViolation(format!(
                        "first-positive anchor needs antisymmetric rows, but row {n} or {} is not",
                        2 * n
                    )));
                }
                let lhs = self.entry(1, 2 * n);
                let rhs: Coeff = self.row(n).range(1..).map(|(_, v)| v * v).sum();
                let holds = lhs == rhs;
                Ok(SquaresCheck { lhs, rhs, holds })
            }
        }
    }
}

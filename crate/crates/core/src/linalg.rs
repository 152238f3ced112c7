//! Fraction-free sparse row reduction over the integers.
//!
//! Rows are kept primitive (content one, positive pivot) and fully reduced
//! against each other, so the pivot set and reduced rows depend only on the
//! span. The pivot of a row is its lowest nonzero column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Sparse integer vector, sorted by column, no explicit zeros.
pub type Row = Vec<(usize, BigInt)>;

/// Clears denominators: returns the integer row and the positive factor it
/// was scaled by.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> (Row, BigInt) {
    let mut collected: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, q) in entries {
        *collected.entry(k).or_insert_with(Rational::zero) += q;
    }
    collected.retain(|_, q| !q.is_zero());
    let den = collected
        .values()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let row = collected
        .into_iter()
        .map(|(k, q)| (k, q.numer() * (&den / q.denom())))
        .collect();
    (row, den)
}

/// `a·x + b·y`.
fn combine(a: &BigInt, x: &Row, b: &BigInt, y: &Row) -> Row {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, b * &y[j].1));
            j += 1;
        } else {
            let v = a * &x[i].1 + b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut Row) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

fn entry(row: &Row, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(k, _)| *k)
        .ok()
        .map(|i| &row[i].1)
}

/// Reduced row echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.values()
    }

    /// Reduces `v` against the basis. Returns the residue and the positive
    /// factor `v` was multiplied by along the way.
    pub fn reduce_scaled(&self, mut v: Row) -> (Row, BigInt) {
        let mut scale = BigInt::one();
        let hits: Vec<usize> = v
            .iter()
            .map(|(k, _)| *k)
            .filter(|k| self.rows.contains_key(k))
            .collect();
        for col in hits {
            let Some(coef) = entry(&v, col).cloned() else {
                continue;
            };
            let row = &self.rows[&col];
            let lead = &row[0].1;
            let g = lead.gcd(&coef);
            let a = lead / &g;
            let b = -(&coef / &g);
            v = combine(&a, &v, &b, row);
            scale *= a;
        }
        (v, scale)
    }

    pub fn reduce(&self, v: Row) -> Row {
        let (mut r, _) = self.reduce_scaled(v);
        make_primitive(&mut r);
        r
    }

    pub fn contains(&self, v: &Row) -> bool {
        self.reduce_scaled(v.clone()).0.is_empty()
    }

    /// Adds `v` to the span; false when it was already contained.
    pub fn insert(&mut self, v: Row) -> bool {
        let r = self.reduce(v);
        let Some(&(pivot, ref lead)) = r.first() else {
            return false;
        };
        let lead = lead.clone();
        for row in self.rows.values_mut() {
            if let Some(c) = entry(row, pivot).cloned() {
                let g = lead.gcd(&c);
                *row = combine(&(&lead / &g), row, &-(&c / &g), &r);
                make_primitive(row);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// Exact rational residue of a rational vector modulo the span.
    pub fn residue(
        &self,
        v: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Vec<(usize, Rational)> {
        let (row, den) = integer_row(v);
        let (res, scale) = self.reduce_scaled(row);
        let total = den * scale;
        res.into_iter()
            .map(|(k, x)| (k, Rational::new(x, total.clone())))
            .collect()
    }

    pub fn span_equals(&self, other: &Echelon) -> bool {
        self.rank() == other.rank() && other.rows().all(|r| self.contains(r))
    }
}

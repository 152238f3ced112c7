//! Exact arithmetic in the cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as a rational polynomial in `ζ_N` reduced modulo the
//! cyclotomic polynomial `Φ_N`, so rational elements are exactly the ones
//! whose normal form is constant. Mixed-order arithmetic first moves both
//! operands to `Q(ζ_L)` with `L = lcm`, refusing orders beyond a cap.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{format_short, parse_rational, Rational};

/// Largest order produced by mixed-order arithmetic unless overridden.
pub const DEFAULT_ORDER_CAP: u32 = 720;

/// Environment variable read once for the order cap.
pub const ORDER_CAP_ENV: &str = "CONEQUIVER_ORDER_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic order {order} exceeds the cap {cap}")]
    OrderOverflow { order: u64, cap: u32 },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("{0} is not rational")]
    NotRational(String),
    #[error("cannot parse cyclotomic number {0:?}")]
    Parse(String),
}

/// Order cap from `CONEQUIVER_ORDER_CAP`, default 720.
pub fn order_cap() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&c| c > 0)
            .unwrap_or(DEFAULT_ORDER_CAP)
    })
}

/// `Φ_N` with integer coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    pub order: u32,
    pub coeffs: Vec<i64>,
}

impl CyclotomicPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn phi_coeffs(n: u32) -> Rc<Vec<i64>> {
    if let Some(c) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return c;
    }
    // x^n - 1 divided exactly by every Φ_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_divide(&num, &phi_coeffs(d));
        }
    }
    let rc = Rc::new(num);
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, rc.clone()));
    rc
}

/// Quotient of integer polynomials by a monic divisor; the remainder must vanish.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

pub fn cyclotomic_polynomial(order: u32) -> Result<CyclotomicPolynomial, CyclotomicError> {
    if order == 0 {
        return Err(CyclotomicError::ZeroOrder);
    }
    Ok(CyclotomicPolynomial {
        order,
        coeffs: phi_coeffs(order).as_ref().clone(),
    })
}

/// Reduces a polynomial in `ζ_N` modulo `Φ_N` in place and truncates it to
/// `deg Φ_N` coefficients.
fn reduce_mod_phi(order: u32, mut coeffs: Vec<Rational>) -> Vec<Rational> {
    let phi = phi_coeffs(order);
    let deg = phi.len() - 1;
    for k in (deg..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[k], Rational::zero());
        let shift = k - deg;
        for (j, p) in phi.iter().enumerate().take(deg) {
            if *p != 0 {
                coeffs[shift + j] -= &c * Rational::from_integer((*p).into());
            }
        }
    }
    coeffs.resize(deg, Rational::zero());
    coeffs
}

/// An element of `Q(ζ_N)` in normal form modulo `Φ_N`.
#[derive(Debug, Clone)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn from_rational(q: Rational) -> Self {
        CyclotomicNumber {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `Σ c·ζ_N^k` for the given `(k, c)` pairs; exponents taken mod `N`.
    pub fn from_powers(
        order: u32,
        terms: impl IntoIterator<Item = (i64, Rational)>,
    ) -> Result<Self, CyclotomicError> {
        if order == 0 {
            return Err(CyclotomicError::ZeroOrder);
        }
        let mut coeffs = vec![Rational::zero(); order as usize];
        for (k, c) in terms {
            coeffs[k.rem_euclid(order as i64) as usize] += c;
        }
        Ok(CyclotomicNumber {
            order,
            coeffs: reduce_mod_phi(order, coeffs),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Normal-form coefficients of `1, ζ_N, …, ζ_N^{φ(N)-1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The same element written in `Q(ζ_L)`; `L` must be a multiple of the order.
    pub fn coerce(&self, target: u32) -> CyclotomicNumber {
        assert!(
            target.is_multiple_of(self.order),
            "order {} does not divide {target}",
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut coeffs = vec![Rational::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * step] = c.clone();
            }
        }
        CyclotomicNumber {
            order: target,
            coeffs: reduce_mod_phi(target, coeffs),
        }
    }

    fn common_order(&self, rhs: &Self, cap: u32) -> Result<u32, CyclotomicError> {
        let l = (self.order as u64).lcm(&(rhs.order as u64));
        if l > cap as u64 && l != self.order.max(rhs.order) as u64 {
            return Err(CyclotomicError::OrderOverflow { order: l, cap });
        }
        Ok(l as u32)
    }

    pub fn try_add_with_cap(&self, rhs: &Self, cap: u32) -> Result<Self, CyclotomicError> {
        let l = self.common_order(rhs, cap)?;
        let (a, b) = (self.coerce(l), rhs.coerce(l));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(CyclotomicNumber { order: l, coeffs })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.try_add_with_cap(rhs, order_cap())
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.try_add(&rhs.neg_ref())
    }

    pub fn try_mul_with_cap(&self, rhs: &Self, cap: u32) -> Result<Self, CyclotomicError> {
        let l = self.common_order(rhs, cap)?;
        let (a, b) = (self.coerce(l), rhs.coerce(l));
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(CyclotomicNumber {
            order: l,
            coeffs: reduce_mod_phi(l, prod),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, CyclotomicError> {
        self.try_mul_with_cap(rhs, order_cap())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn neg_ref(&self) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Complex conjugation `ζ_N^k ↦ ζ_N^{N-k}`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut coeffs = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(n - k) % n] += c;
        }
        CyclotomicNumber {
            order: self.order,
            coeffs: reduce_mod_phi(self.order, coeffs),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CyclotomicNumber::one().coerce(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, when the element is rational. Both the
    /// conjugation-invariance and the constant normal form are required.
    pub fn as_rational(&self) -> Result<Rational, CyclotomicError> {
        let constant = self.coeffs.iter().skip(1).all(Zero::is_zero);
        if !constant || self.conj() != *self {
            return Err(CyclotomicError::NotRational(self.to_string()));
        }
        Ok(self.coeffs[0].clone())
    }
}

/// `Σ w·x·y` over the given terms, accumulated in `Q[x]/(x^L - 1)` and
/// reduced modulo `Φ_L` once at the end. Much cheaper than chaining
/// [`CyclotomicNumber::try_mul`] and [`CyclotomicNumber::try_add`].
pub fn sum_of_products<'a>(
    terms: impl IntoIterator<Item = (Rational, &'a CyclotomicNumber, &'a CyclotomicNumber)>,
) -> Result<CyclotomicNumber, CyclotomicError> {
    let terms: Vec<_> = terms.into_iter().collect();
    let cap = order_cap();
    let mut l = 1u64;
    for (_, x, y) in &terms {
        for o in [x.order, y.order] {
            l = l.lcm(&(o as u64));
            if l > cap as u64 && l != o as u64 {
                return Err(CyclotomicError::OrderOverflow { order: l, cap });
            }
        }
    }
    let n = l as usize;
    if let Some(acc) = integral_sum_of_products(&terms, n) {
        let coeffs = acc
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        return Ok(CyclotomicNumber {
            order: l as u32,
            coeffs: reduce_mod_phi(l as u32, coeffs),
        });
    }
    let mut acc = vec![Rational::zero(); n];
    for (w, x, y) in &terms {
        if w.is_zero() {
            continue;
        }
        let (sx, sy) = (n / x.order as usize, n / y.order as usize);
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let wa = w * a;
            for (j, b) in y.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i * sx + j * sy) % n] += &wa * b;
                }
            }
        }
    }
    Ok(CyclotomicNumber {
        order: l as u32,
        coeffs: reduce_mod_phi(l as u32, acc),
    })
}

fn small_integer(q: &Rational) -> Option<i128> {
    if !q.denom().is_one() {
        return None;
    }
    i32::try_from(q.numer()).ok().map(i128::from)
}

/// The accumulation of [`sum_of_products`] in machine integers, when every
/// coefficient is an integer of at most 32 bits; `None` otherwise or on
/// overflow.
fn integral_sum_of_products(
    terms: &[(Rational, &CyclotomicNumber, &CyclotomicNumber)],
    n: usize,
) -> Option<Vec<i128>> {
    let ints = |c: &CyclotomicNumber| {
        c.coeffs
            .iter()
            .map(small_integer)
            .collect::<Option<Vec<_>>>()
    };
    let mut acc = vec![0i128; n];
    for (w, x, y) in terms {
        let w = small_integer(w)?;
        let (xs, ys) = (ints(x)?, ints(y)?);
        let (sx, sy) = (n / x.order as usize, n / y.order as usize);
        for (i, a) in xs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let wa = w * a;
            for (j, b) in ys.iter().enumerate() {
                if *b != 0 {
                    let slot = &mut acc[(i * sx + j * sy) % n];
                    *slot = slot.checked_add(wa * b)?;
                }
            }
        }
    }
    Some(acc)
}

/// `ζ_N^k` in normal form.
pub fn root_of_unity(order: u32, k: i64) -> Result<CyclotomicNumber, CyclotomicError> {
    CyclotomicNumber::from_powers(order, [(k, Rational::one())])
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        self.coerce(l).coeffs == other.coerce(l).coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    /// Panics when the common order exceeds the cap; use `try_add` to handle it.
    fn add(self, rhs: Self) -> CyclotomicNumber {
        self.try_add(rhs).expect("cyclotomic addition")
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: Self) -> CyclotomicNumber {
        self.try_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: Self) -> CyclotomicNumber {
        self.try_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        self.neg_ref()
    }
}

/// Formal sum `c0 + c1*z(N)^1 + …` of the normal form.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                f.write_str(&format_short(c))?;
            } else {
                write!(f, "{}*z({})^{}", format_short(c), self.order, k)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn parse_term(term: &str) -> Result<CyclotomicNumber, CyclotomicError> {
    let err = || CyclotomicError::Parse(term.to_string());
    let t = term.trim();
    let Some(zpos) = t.find("z(") else {
        return parse_rational(t)
            .map(CyclotomicNumber::from_rational)
            .map_err(|_| err());
    };
    let coeff = match t[..zpos].trim() {
        "" => Rational::one(),
        "-" => -Rational::one(),
        c => {
            let c = c.strip_suffix('*').ok_or_else(err)?;
            parse_rational(c).map_err(|_| err())?
        }
    };
    let rest = &t[zpos + 2..];
    let close = rest.find(')').ok_or_else(err)?;
    let order: u32 = rest[..close].trim().parse().map_err(|_| err())?;
    let tail = rest[close + 1..].trim();
    let exponent: i64 = match tail.strip_prefix('^') {
        Some(e) => e.trim().parse().map_err(|_| err())?,
        None if tail.is_empty() => 1,
        None => return Err(err()),
    };
    CyclotomicNumber::from_powers(order, [(exponent, coeff)])
}

impl FromStr for CyclotomicNumber {
    type Err = CyclotomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(CyclotomicError::Parse(s.to_string()));
        }
        s.split('+')
            .map(parse_term)
            .try_fold(CyclotomicNumber::zero(), |acc, t| acc.try_add(&t?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> CyclotomicNumber {
        root_of_unity(n, k).unwrap()
    }

    /// Schoolbook division of integer polynomials, independent of the
    /// library's `exact_divide`.
    fn divide_oracle(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let mut quot = vec![0; num.len() - dd];
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let k = rem.len() - 1 - dd;
            quot[k] = lead;
            for j in 0..den.len() {
                rem[k + j] -= lead * den[j];
            }
            rem.pop();
        }
        (quot, rem)
    }

    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap().coeffs, vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap().coeffs, vec![1, 0, 1]);
        // (x^6 - 1) / (Φ1 Φ2 Φ3) with Φ1 = x-1, Φ2 = x+1, Φ3 = x^2+x+1
        let denom = poly_mul(&poly_mul(&[-1, 1], &[1, 1]), &[1, 1, 1]);
        let (q, r) = divide_oracle(&[-1, 0, 0, 0, 0, 0, 1], &denom);
        assert!(r.iter().all(|&c| c == 0));
        assert_eq!(q, vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap().coeffs, q);
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn phi_divides_x_n_minus_one() {
        for n in 1..=40u32 {
            let phi = cyclotomic_polynomial(n).unwrap();
            assert_eq!(*phi.coeffs.last().unwrap(), 1, "monic Φ_{n}");
            let mut xn = vec![0; n as usize + 1];
            xn[0] = -1;
            xn[n as usize] = 1;
            let (_, r) = divide_oracle(&xn, &phi.coeffs);
            assert!(r.iter().all(|&c| c == 0), "Φ_{n} ∤ x^{n} - 1");
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(1, 0), CyclotomicNumber::one());
        assert_eq!(z(4, 2), CyclotomicNumber::from_int(-1));
        let s = &(&z(3, 1) + &z(3, 2)) + &CyclotomicNumber::one();
        assert!(s.is_zero());
        for n in 1..=24u32 {
            for k in -3..=(n as i64 + 3) {
                assert_eq!(z(n, k).pow(n), CyclotomicNumber::one(), "ζ_{n}^{k}");
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(3, 1).conj(), z(3, 2));
        assert_eq!(&z(3, 1) * &z(3, 2), CyclotomicNumber::one());
        // (1 + ζ5)(1 + ζ5^4) = 2 + ζ5 + ζ5^4, expanded by hand
        let a = &CyclotomicNumber::one() + &z(5, 1);
        let n = &a.conj() * &a;
        let expected =
            CyclotomicNumber::from_powers(5, [(0, int(2)), (1, int(1)), (4, int(1))]).unwrap();
        assert_eq!(n, expected);
        assert!(n.as_rational().is_err());
    }

    #[test]
    fn rationality() {
        let s = &(&CyclotomicNumber::one() + &z(3, 1)) + &z(3, 2);
        assert_eq!(s.as_rational().unwrap(), int(0));
        assert_eq!(z(4, 2).as_rational().unwrap(), int(-1));
        assert!(matches!(
            z(5, 1).as_rational(),
            Err(CyclotomicError::NotRational(_))
        ));
        // real but irrational: ζ8 + ζ8^7 = √2
        let sqrt2 = &z(8, 1) + &z(8, 7);
        assert_eq!(sqrt2.conj(), sqrt2);
        assert!(sqrt2.as_rational().is_err());
    }

    #[test]
    fn mixed_orders_and_cap() {
        // ζ4 · ζ6 = ζ12^5
        assert_eq!(&z(4, 1) * &z(6, 1), z(12, 5));
        let err = z(16, 1).try_mul_with_cap(&z(9, 1), 100).unwrap_err();
        assert_eq!(
            err,
            CyclotomicError::OrderOverflow {
                order: 144,
                cap: 100
            }
        );
        assert!(z(16, 1).try_add_with_cap(&z(8, 1), 10).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let x = CyclotomicNumber::from_powers(
            6,
            [(0, int(1)), (1, int(-2)), (5, crate::rational::ratio(1, 3))],
        )
        .unwrap();
        let s = x.to_string();
        assert_eq!(s.parse::<CyclotomicNumber>().unwrap(), x);
        assert_eq!(
            "0".parse::<CyclotomicNumber>().unwrap(),
            CyclotomicNumber::zero()
        );
        assert_eq!(
            "-z(4)^2".parse::<CyclotomicNumber>().unwrap(),
            CyclotomicNumber::one()
        );
        assert_eq!(
            "1 + z(3) + z(3)^2".parse::<CyclotomicNumber>().unwrap(),
            CyclotomicNumber::zero()
        );
        assert!("1 + q".parse::<CyclotomicNumber>().is_err());
        assert!("z(0)".parse::<CyclotomicNumber>().is_err());
    }

    fn small(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
        prop::collection::vec(-3i64..=3, order as usize).prop_map(move |cs| {
            CyclotomicNumber::from_powers(
                order,
                cs.into_iter().enumerate().map(|(k, c)| (k as i64, int(c))),
            )
            .unwrap()
        })
    }

    fn any_small() -> impl Strategy<Value = CyclotomicNumber> {
        prop_oneof![small(5), small(6), small(8), small(12)]
    }

    proptest! {
        #[test]
        fn ring_axioms(a in any_small(), b in any_small(), c in any_small()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn conj_is_involutive_automorphism(a in any_small(), b in any_small()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn batched_sum_agrees_with_chained_ops(
            terms in prop::collection::vec((-4i64..=4, any_small(), any_small()), 0..5)
        ) {
            let mut chained = CyclotomicNumber::zero();
            for (w, x, y) in &terms {
                chained = &chained + &(x * y).scale(&int(*w));
            }
            let batched = sum_of_products(terms.iter().map(|(w, x, y)| (int(*w), x, y))).unwrap();
            prop_assert_eq!(batched, chained);
        }

        #[test]
        fn rational_iff_constant_and_real(a in any_small()) {
            let constant = a.coeffs().iter().skip(1).all(|c| c.is_zero());
            prop_assert_eq!(a.as_rational().is_ok(), constant && a.conj() == a);
        }
    }
}

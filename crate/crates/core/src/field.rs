//! Exact arithmetic in the degree-8 real field Q(√3, √11, √247).
//!
//! Every coordinate in this crate lives here. An element is stored as eight
//! rational coefficients over the fixed basis
//!
//! ```text
//! index: 0    1    2    3     4      5      6       7
//! basis: 1   √3   √11  √33   √247   √741   √2717   √8151
//! ```
//!
//! where basis index `m` carries radical √3 iff bit 0 of `m` is set, √11 iff
//! bit 1, and √247 iff bit 2. With that convention the product of two basis
//! elements is `RADICANDS[s & t] · basis[s ^ t]`: shared radicals square into
//! an integer, the rest survive.
//!
//! Since 3, 11 and 247 are multiplicatively independent squarefree integers,
//! the eight basis elements are linearly independent over Q, so an element is
//! zero iff all coefficients are zero and equality is coefficient-wise. All
//! geometric predicates downstream are exact equality tests; the derived
//! `Ord` is coefficient-lexicographic and deliberately not numeric. The one
//! numeric-order facility is [`FieldElement::cmp_int_q33`], an exact
//! proof-producing comparison for elements of the Q(√33) subfield — search
//! loops use it to skip provably impossible candidates, and it answers
//! `None` rather than guess whenever the element leaves that subfield.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Exact rational scalar used throughout the crate. Always stored reduced.
pub type Rational = BigRational;

/// `RADICANDS[m]` is the square of basis element `m`: the product of
/// {3, 11, 247} over the set bits of `m`.
pub const RADICANDS: [i64; 8] = [1, 3, 11, 33, 247, 741, 2717, 8151];

/// One entry of the basis multiplication table: `basis[s] · basis[t] =
/// factor · basis[index]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisProduct {
    pub index: usize,
    pub factor: i64,
}

const fn bp(index: usize, factor: i64) -> BasisProduct {
    BasisProduct { index, factor }
}

/// The full 64-entry basis multiplication table, derived once from the
/// radical identities and frozen; `basis_table_is_consistent` re-checks it.
#[rustfmt::skip]
pub const MUL_TABLE: [[BasisProduct; 8]; 8] = [
    [bp(0, 1), bp(1, 1), bp(2, 1),  bp(3, 1),  bp(4, 1),   bp(5, 1),   bp(6, 1),    bp(7, 1)],
    [bp(1, 1), bp(0, 3), bp(3, 1),  bp(2, 3),  bp(5, 1),   bp(4, 3),   bp(7, 1),    bp(6, 3)],
    [bp(2, 1), bp(3, 1), bp(0, 11), bp(1, 11), bp(6, 1),   bp(7, 1),   bp(4, 11),   bp(5, 11)],
    [bp(3, 1), bp(2, 3), bp(1, 11), bp(0, 33), bp(7, 1),   bp(6, 3),   bp(5, 11),   bp(4, 33)],
    [bp(4, 1), bp(5, 1), bp(6, 1),  bp(7, 1),  bp(0, 247), bp(1, 247), bp(2, 247),  bp(3, 247)],
    [bp(5, 1), bp(4, 3), bp(7, 1),  bp(6, 3),  bp(1, 247), bp(0, 741), bp(3, 247),  bp(2, 741)],
    [bp(6, 1), bp(7, 1), bp(4, 11), bp(5, 11), bp(2, 247), bp(3, 247), bp(0, 2717), bp(1, 2717)],
    [bp(7, 1), bp(6, 3), bp(5, 11), bp(4, 33), bp(3, 247), bp(2, 741), bp(1, 2717), bp(0, 8151)],
];

/// Re-derives every `MUL_TABLE` entry from the defining rule
/// `basis[s]·basis[t] = RADICANDS[s&t]·basis[s^t]` and additionally checks
/// commutativity, the neutral row, squares, and associativity over all 512
/// basis triples. Exposed so a test can guard the frozen constant.
pub fn basis_table_is_consistent() -> bool {
    for s in 0..8 {
        for t in 0..8 {
            let e = MUL_TABLE[s][t];
            if e.index != s ^ t || e.factor != RADICANDS[s & t] {
                return false;
            }
            if MUL_TABLE[t][s] != e {
                return false;
            }
        }
        if MUL_TABLE[0][s] != bp(s, 1) || MUL_TABLE[s][s].index != 0 {
            return false;
        }
    }
    // (b_s b_t) b_u == b_s (b_t b_u): same target index by xor-associativity,
    // so only the integer factors need comparing.
    for s in 0..8 {
        for t in 0..8 {
            for u in 0..8 {
                let st = MUL_TABLE[s][t];
                let tu = MUL_TABLE[t][u];
                let left = st.factor as i128 * MUL_TABLE[st.index][u].factor as i128;
                let right = MUL_TABLE[s][tu.index].factor as i128 * tu.factor as i128;
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// An element of Q(√3, √11, √247).
///
/// `Ord`/`Hash` act on the reduced coefficient array (lexicographically for
/// `Ord`). That order is the crate-wide *sort key*: total, deterministic and
/// consistent with equality, but deliberately unrelated to real-number order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: [Rational; 8],
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The rational `num/den` as a field element. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut e = Self::zero();
        e.coeffs[0] = q;
        e
    }

    /// `q · basis[mask]`, e.g. `radical_multiple(3, q)` is q√33.
    pub fn radical_multiple(mask: usize, q: Rational) -> Self {
        let mut e = Self::zero();
        e.coeffs[mask] = q;
        e
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        FieldElement { coeffs }
    }

    /// Coefficient of `basis[mask]`.
    pub fn coeff(&self, mask: usize) -> &Rational {
        &self.coeffs[mask]
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when only the rational coordinate (basis index 0) is nonzero.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The element equals this exact rational.
    pub fn eq_rational(&self, q: &Rational) -> bool {
        self.is_rational() && self.coeffs[0] == *q
    }

    /// Exact numeric comparison against an integer, answered only for
    /// elements of the subfield Q(√33) (coefficients on every other radical
    /// zero). For `a + b√33` vs `n`, the sign of `(a−n) + b√33` follows from
    /// the signs of the two terms, or — when they disagree — from comparing
    /// `(a−n)²` with `33b²`, all in rational arithmetic. Returns `None`
    /// outside the subfield; callers treat that as "unknown" and must not
    /// draw conclusions from it.
    pub fn cmp_int_q33(&self, n: i64) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i != 0 && i != 3 && !c.is_zero() {
                return None;
            }
        }
        let a = &self.coeffs[0] - Rational::from_integer(n.into());
        let b = &self.coeffs[3];
        let sign = match (a.is_zero(), b.is_zero()) {
            (true, true) => Ordering::Equal,
            (false, true) => a.cmp(&Rational::zero()),
            (true, false) => b.cmp(&Rational::zero()),
            (false, false) => {
                let sa = a.cmp(&Rational::zero());
                let sb = b.cmp(&Rational::zero());
                if sa == sb {
                    sa
                } else {
                    // |a| vs |b|√33 decides; a+b√33 = 0 is impossible since
                    // √33 is irrational
                    let cmp_sq = (&a * &a).cmp(&((b * b) * Rational::from_integer(33.into())));
                    match (sa, cmp_sq) {
                        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
                        (Ordering::Greater, _) => Ordering::Less,
                        (_, Ordering::Greater) => Ordering::Less,
                        _ => Ordering::Greater,
                    }
                }
            }
        };
        Some(sign)
    }

    pub fn scale(&self, k: &Rational) -> FieldElement {
        if k.is_zero() {
            return FieldElement::zero();
        }
        FieldElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
        }
    }

    /// Sign flip of every basis element containing the radical selected by
    /// `bit` (0 ⇔ √3, 1 ⇔ √11, 2 ⇔ √247): the field automorphism √r ↦ −√r.
    fn conjugate(&self, bit: usize) -> FieldElement {
        FieldElement {
            coeffs: std::array::from_fn(|i| {
                if (i >> bit) & 1 == 1 {
                    -self.coeffs[i].clone()
                } else {
                    self.coeffs[i].clone()
                }
            }),
        }
    }

    /// Exact multiplicative inverse.
    ///
    /// Multiplying by the √247-conjugate kills the √247 block (the product is
    /// fixed by that automorphism), then likewise for √11 and √3, leaving a
    /// plain rational norm to divide by — no linear solving required.
    pub fn inverse(&self) -> Result<FieldElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = FieldElement::one();
        let mut cur = self.clone();
        for bit in [2, 1, 0] {
            let conj = cur.conjugate(bit);
            num = &num * &conj;
            cur = &cur * &conj;
        }
        debug_assert!(cur.is_rational());
        let norm = cur.coeffs[0].clone();
        debug_assert!(!norm.is_zero(), "nonzero element has nonzero norm");
        Ok(num.scale(&norm.recip()))
    }

    /// Numeric approximation for display rendering only (SVG coordinates).
    /// Never feed this into a comparison or an algorithmic decision; every
    /// predicate in this crate is exact.
    pub fn to_f64_display(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .zip(RADICANDS)
            .map(|(c, r)| c.to_f64().unwrap_or(f64::NAN) * (r as f64).sqrt())
            .sum()
    }

    /// The element as 8 whitespace-separated `p/q` tokens in basis order
    /// (the point-file wire form).
    pub fn render_tokens(&self) -> String {
        let toks: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect();
        toks.join(" ")
    }

    /// Parses one coefficient token: `p/q` or a bare integer.
    pub fn parse_token(tok: &str) -> Result<Rational, Error> {
        let bad = || Error::Parse(format!("bad rational token {tok:?}"));
        match tok.split_once('/') {
            Some((n, d)) => {
                let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
                let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
            None => Ok(Rational::from_integer(tok.parse().map_err(|_| bad())?)),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    /// Human-readable sum, e.g. `119/128 + 3/128·√247`; `0` when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "√{}", RADICANDS[i])?;
            } else {
                write!(f, "{c}·√{}", RADICANDS[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let BasisProduct { index, factor } = MUL_TABLE[i][j];
                let mut term = a * b;
                if factor != 1 {
                    term *= Rational::from_integer(factor.into());
                }
                out.coeffs[index] += term;
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident, $method:ident;)*) => {$(
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned_binop! { Add, add; Sub, sub; Mul, mul; }

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

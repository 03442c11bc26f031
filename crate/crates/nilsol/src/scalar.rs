//! Exact scalars of the form `(p/q)·√r`, optionally with an imaginary part.
//!
//! Every structure constant appearing in the bundled catalog is a *radical
//! rational*: a rational multiple of the square root of a square-free positive
//! integer, possibly plus `i` times another one. This module keeps that closed
//! form exact through products, quotients and diagonal basis changes, and
//! provides [`RadicalSum`] for accumulating sums across different radicands
//! (needed by exact Jacobi checks, where terms only cancel radicand by
//! radicand).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar used throughout the exact paths.
pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Deterministic round-to-nearest conversion to `f64`.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational from a finite `f64` (every finite double is dyadic).
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).expect("finite float")
}

/// Split `n` as `s²·r` with `r` square-free; returns `(s, r)`.
pub fn squarefree_part(n: u64) -> (u64, u64) {
    assert!(n > 0);
    let (mut s, mut r, mut m) = (1u64, 1u64, n);
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0u32;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            r *= d;
        }
        d += 1;
    }
    (s, r * m)
}

/// A real radical rational: `coef · √radicand` with `radicand` square-free.
///
/// The zero value is canonicalized to radicand 1, so structural equality is
/// value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    coef: Rat,
    radicand: u64,
}

impl Radical {
    pub fn new(coef: Rat, radicand: u64) -> Self {
        if coef.is_zero() {
            return Radical { coef, radicand: 1 };
        }
        let (s, r) = squarefree_part(radicand);
        Radical {
            coef: coef * Rat::from(BigInt::from(s)),
            radicand: r,
        }
    }

    pub fn zero() -> Self {
        Radical {
            coef: Rat::zero(),
            radicand: 1,
        }
    }

    pub fn one() -> Self {
        Radical {
            coef: Rat::one(),
            radicand: 1,
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        Radical { coef: c, radicand: 1 }
    }

    pub fn coef(&self) -> &Rat {
        &self.coef
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    /// Exact rational value when the radicand is 1.
    pub fn as_rat(&self) -> Option<&Rat> {
        (self.radicand == 1).then_some(&self.coef)
    }

    pub fn neg(&self) -> Self {
        Radical {
            coef: -self.coef.clone(),
            radicand: self.radicand,
        }
    }

    /// Exact product. `√r·√r' = g·√((r/g)(r'/g))` with `g = gcd(r, r')`;
    /// both factors are square-free so the reduced product is too.
    pub fn mul(&self, other: &Radical) -> Radical {
        if self.is_zero() || other.is_zero() {
            return Radical::zero();
        }
        let g = gcd(self.radicand, other.radicand);
        Radical {
            coef: &self.coef * &other.coef * Rat::from(BigInt::from(g)),
            radicand: (self.radicand / g) * (other.radicand / g),
        }
    }

    /// Exact quotient (panics on zero divisor).
    pub fn div(&self, other: &Radical) -> Radical {
        assert!(!other.is_zero(), "division by zero radical");
        // 1/(c·√r) = (1/(c·r))·√r
        let inv = Radical {
            coef: (Rat::from(BigInt::from(other.radicand)) * &other.coef).recip(),
            radicand: other.radicand,
        };
        self.mul(&inv)
    }

    /// Exact sum when representable in the single-radical form.
    pub fn add(&self, other: &Radical) -> Option<Radical> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.radicand == other.radicand).then(|| Radical {
            coef: &self.coef + &other.coef,
            radicand: self.radicand,
        })
    }

    /// Exact square, always rational: `(c√r)² = c²·r`.
    pub fn square_rat(&self) -> Rat {
        &self.coef * &self.coef * Rat::from(BigInt::from(self.radicand))
    }

    pub fn to_f64(&self) -> f64 {
        if self.radicand == 1 {
            rat_to_f64(&self.coef)
        } else {
            rat_to_f64(&self.coef) * (self.radicand as f64).sqrt()
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.coef.numer(), self.coef.denom())?;
        if self.radicand != 1 {
            write!(f, "*sqrt({})", self.radicand)?;
        }
        Ok(())
    }
}

/// A scalar `re + im·i` with radical-rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalScalar {
    pub re: Radical,
    pub im: Radical,
}

impl RadicalScalar {
    pub fn real(re: Radical) -> Self {
        RadicalScalar {
            re,
            im: Radical::zero(),
        }
    }

    pub fn new(re: Radical, im: Radical) -> Self {
        RadicalScalar { re, im }
    }

    pub fn zero() -> Self {
        RadicalScalar::real(Radical::zero())
    }

    pub fn one() -> Self {
        RadicalScalar::real(Radical::one())
    }

    pub fn from_f64(x: f64) -> Self {
        RadicalScalar::real(Radical::from_rat(rat_from_f64(x)))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn neg(&self) -> Self {
        RadicalScalar {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn conj(&self) -> Self {
        RadicalScalar {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// `|c|² = re² + im²`, always an exact rational.
    pub fn abs_sq(&self) -> Rat {
        self.re.square_rat() + self.im.square_rat()
    }

    /// Scale by a *real* radical; stays in closed form.
    pub fn scale(&self, s: &Radical) -> Self {
        RadicalScalar {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    /// Divide by a *real* radical; stays in closed form.
    pub fn div_real(&self, s: &Radical) -> Self {
        RadicalScalar {
            re: self.re.div(s),
            im: self.im.div(s),
        }
    }

    /// Full complex product when the cross sums stay single radicals.
    pub fn mul(&self, other: &RadicalScalar) -> Option<RadicalScalar> {
        let re = self.re.mul(&other.re).add(&self.im.mul(&other.im).neg())?;
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re))?;
        Some(RadicalScalar { re, im })
    }

    pub fn to_complex(&self) -> num::Complex<f64> {
        num::Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn to_f64(&self) -> f64 {
        debug_assert!(self.is_real());
        self.re.to_f64()
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        if !self.im.is_zero() {
            let s = self.im.to_string();
            if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest} i")?;
            } else {
                write!(f, " + {s} i")?;
            }
        }
        Ok(())
    }
}

/// Exact accumulator for sums of radicals: one rational coefficient per
/// radicand, separately for the real and imaginary components.
#[derive(Clone, Debug, Default)]
pub struct RadicalSum {
    re: BTreeMap<u64, Rat>,
    im: BTreeMap<u64, Rat>,
}

impl RadicalSum {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(map: &mut BTreeMap<u64, Rat>, r: &Radical) {
        if r.is_zero() {
            return;
        }
        let e = map.entry(r.radicand).or_insert_with(Rat::zero);
        *e += r.coef.clone();
        if e.is_zero() {
            map.remove(&r.radicand);
        }
    }

    pub fn add_scalar(&mut self, c: &RadicalScalar) {
        Self::push(&mut self.re, &c.re);
        Self::push(&mut self.im, &c.im);
    }

    /// Accumulate the exact product `a·b`.
    pub fn add_product(&mut self, a: &RadicalScalar, b: &RadicalScalar) {
        Self::push(&mut self.re, &a.re.mul(&b.re));
        Self::push(&mut self.re, &a.im.mul(&b.im).neg());
        Self::push(&mut self.im, &a.re.mul(&b.im));
        Self::push(&mut self.im, &a.im.mul(&b.re));
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_empty() && self.im.is_empty()
    }

    /// Double evaluation, for residual reporting.
    pub fn to_complex(&self) -> num::Complex<f64> {
        let ev = |m: &BTreeMap<u64, Rat>| {
            m.iter()
                .map(|(r, c)| rat_to_f64(c) * (*r as f64).sqrt())
                .sum::<f64>()
        };
        num::Complex::new(ev(&self.re), ev(&self.im))
    }
}

// ---------------------------------------------------------------------------
// coefficient grammar
// ---------------------------------------------------------------------------

/// Parse error with a short human-readable reason.
#[derive(Debug, thiserror::Error)]
#[error("invalid coefficient `{input}`: {reason}")]
pub struct CoeffParseError {
    pub input: String,
    pub reason: String,
}

fn parse_radical_term(s: &str) -> Result<(Radical, usize), String> {
    // [-] int [/ int] [*sqrt( int ) [/ int]]
    let b = s.as_bytes();
    let mut pos = 0;
    let mut sign = 1i64;
    while pos < b.len() && (b[pos] == b'-' || b[pos] == b'+') {
        if b[pos] == b'-' {
            sign = -sign;
        }
        pos += 1;
    }
    let start = pos;
    while pos < b.len() && b[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err("expected integer".into());
    }
    let num: i64 = s[start..pos].parse().map_err(|_| "integer overflow")?;
    let mut den: i64 = 1;
    if pos < b.len() && b[pos] == b'/' {
        pos += 1;
        let ds = pos;
        while pos < b.len() && b[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == ds {
            return Err("expected denominator".into());
        }
        den = s[ds..pos].parse().map_err(|_| "integer overflow")?;
        if den == 0 {
            return Err("zero denominator".into());
        }
    }
    let mut radicand: u64 = 1;
    if s[pos..].starts_with("*sqrt(") {
        pos += 6;
        let rs = pos;
        while pos < b.len() && b[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == rs {
            return Err("expected radicand".into());
        }
        radicand = s[rs..pos].parse().map_err(|_| "integer overflow")?;
        if radicand == 0 {
            return Err("zero radicand".into());
        }
        if pos >= b.len() || b[pos] != b')' {
            return Err("expected `)`".into());
        }
        pos += 1;
        // trailing /int divides the whole term ("1/1*sqrt(6)/6" = √6/6)
        if pos < b.len() && b[pos] == b'/' {
            pos += 1;
            let ds = pos;
            while pos < b.len() && b[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == ds {
                return Err("expected denominator".into());
            }
            let extra: i64 = s[ds..pos].parse().map_err(|_| "integer overflow")?;
            if extra == 0 {
                return Err("zero denominator".into());
            }
            den = den.checked_mul(extra).ok_or("denominator overflow")?;
        }
    }
    Ok((Radical::new(rat(sign * num, den), radicand), pos))
}

impl FromStr for RadicalScalar {
    type Err = CoeffParseError;

    /// Grammar: `[-] p[/q] [*sqrt(r) [/s]] [ (+|-) <same> i ]`, whitespace-insensitive.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| CoeffParseError {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (re, used) = parse_radical_term(&compact).map_err(|e| err(&e))?;
        let rest = &compact[used..];
        if rest.is_empty() {
            return Ok(RadicalScalar::real(re));
        }
        if !rest.starts_with('+') && !rest.starts_with('-') {
            return Err(err("unexpected trailing input"));
        }
        let (im, used2) = parse_radical_term(rest).map_err(|e| err(&e))?;
        let tail = &rest[used2..];
        if tail != "i" {
            return Err(err("imaginary part must end in `i`"));
        }
        Ok(RadicalScalar::new(re, im))
    }
}

/// Try to recognize `x` as `(p/q)·√r` with `q` and `r` bounded; used when
/// printing numerically found constants in closed form.
pub fn reconstruct_radical(x: f64, max_den: u64) -> Option<Radical> {
    if x == 0.0 {
        return Some(Radical::zero());
    }
    // x² should be rational with denominator ≤ max_den²
    let sq = rational_reconstruct(x * x, max_den.saturating_mul(max_den))?;
    if sq.is_negative() || sq.is_zero() {
        return None;
    }
    let num = sq.numer().to_u64()?;
    let den = sq.denom().to_u64()?;
    // x = sign·√(num/den) = sign·√(num·den)/den
    let (s, r) = squarefree_part(num.checked_mul(den)?);
    let cand = Radical::new(rat(if x < 0.0 { -1 } else { 1 } * s as i64, den as i64), r);
    ((cand.to_f64() - x).abs() <= 1e-9 * x.abs().max(1.0)).then_some(cand)
}

/// Continued-fraction rational reconstruction with bounded denominator.
pub fn rational_reconstruct(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut x = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = x.floor();
        if a > i64::MAX as f64 {
            return None;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = x - a;
        if frac < 1e-13 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    Some(Rat::new(BigInt::from(sign) * BigInt::from(p1), BigInt::from(q1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_extraction() {
        assert_eq!(squarefree_part(84), (2, 21));
        assert_eq!(squarefree_part(244), (2, 61));
        assert_eq!(squarefree_part(1), (1, 1));
        assert_eq!(squarefree_part(605845438), (1, 605845438));
    }

    #[test]
    fn radical_products_stay_closed() {
        let a = Radical::new(rat(1, 6), 6); // √6/6
        let sq = a.mul(&a);
        assert_eq!(sq, Radical::from_rat(rat(1, 6)));
        let b = Radical::new(rat(1, 5), 5);
        let c = Radical::new(rat(1, 10), 10);
        let p = b.mul(&c); // √50/50 = √2/10
        assert_eq!(p, Radical::new(rat(1, 10), 2));
        let q = b.div(&c); // (√5/5)/(√10/10) = 2√2/2·... = √2
        assert_eq!(q.square_rat(), rat(2, 1));
    }

    #[test]
    fn grammar_roundtrip_and_spec_form() {
        // the documented `1/1*sqrt(6)/6` spelling means √6/6
        let c: RadicalScalar = "1/1*sqrt(6)/6".parse().unwrap();
        assert_eq!(c, RadicalScalar::real(Radical::new(rat(1, 6), 6)));
        let d: RadicalScalar = "1/6*sqrt(6)".parse().unwrap();
        assert_eq!(c, d);
        let e: RadicalScalar = "1/26*sqrt(13) - 1/26*sqrt(39) i".parse().unwrap();
        assert_eq!(e.to_string(), "1/26*sqrt(13) - 1/26*sqrt(39) i");
        let f: RadicalScalar = e.to_string().parse().unwrap();
        assert_eq!(e, f);
        let g: RadicalScalar = "-1/4".parse().unwrap();
        assert_eq!(g.to_f64(), -0.25);
        // non-square-free radicands canonicalize
        let h: RadicalScalar = "1/42*sqrt(84)".parse().unwrap();
        assert_eq!(h, "1/21*sqrt(21)".parse().unwrap());
        assert!("1/0".parse::<RadicalScalar>().is_err());
        assert!("2x".parse::<RadicalScalar>().is_err());
    }

    #[test]
    fn radical_sum_cancels_per_radicand() {
        let mut s = RadicalSum::new();
        s.add_scalar(&"1/2*sqrt(3)".parse().unwrap());
        s.add_scalar(&"1/3*sqrt(2)".parse().unwrap());
        s.add_scalar(&"-1/2*sqrt(3)".parse().unwrap());
        assert!(!s.is_zero());
        s.add_scalar(&"-1/3*sqrt(2)".parse().unwrap());
        assert!(s.is_zero());
    }

    #[test]
    fn complex_product_abs_sq() {
        // (√13/13)(1/2 − (√3/2)i) has |c|² = 1/13
        let c: RadicalScalar = "1/26*sqrt(13) - 1/26*sqrt(39) i".parse().unwrap();
        assert_eq!(c.abs_sq(), rat(1, 13));
    }

    #[test]
    fn reconstruction() {
        let x = (6.0f64).sqrt() / 6.0;
        let r = reconstruct_radical(x, 10_000).unwrap();
        assert_eq!(r, Radical::new(rat(1, 6), 6));
        let y = -0.25;
        assert_eq!(reconstruct_radical(y, 10_000).unwrap(), Radical::from_rat(rat(-1, 4)));
        assert_eq!(rational_reconstruct(11.0 / 13.0, 100).unwrap(), rat(11, 13));
    }
}

//! Exact arithmetic in the ordered field of rational functions in one
//! infinitesimal indeterminate ε over the rationals.
//!
//! A [`RatFunc`] is kept in canonical form: numerator and denominator are
//! coprime and the denominator is monic, so structural equality is field
//! equality. The ordering is by valuation: an element is positive when the
//! product of the lowest-order coefficients of its numerator and denominator
//! is positive. Under that order ε is positive yet below every positive
//! rational, which is what makes the field non-Archimedean.
//!
//! Differentiation at a rational point is done without limits: substitute
//! `x = x0 + ε`, form the difference quotient exactly, and take the
//! standard part (discard the infinitesimal terms).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_rational::BigRational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::expr::{BinOp, Expr, ExprKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NonArchError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("order of the zero element is undefined")]
    ZeroOrder,
    #[error("no standard part: element is infinite (order {0})")]
    NoStandardPart(i64),
    #[error("pole at x = {0}")]
    Pole(BigRational),
    #[error("not a rational expression: {0}")]
    NotRational(String),
}

/// Polynomial with exact rational coefficients, lowest power first.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Highest-degree coefficient.
    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the ε-adic valuation).
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lowest-order nonzero coefficient.
    pub fn lowest(&self) -> Option<&BigRational> {
        self.ord().map(|i| &self.coeffs[i])
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides out `ε^k`; the caller guarantees the low coefficients vanish.
    fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `p(x0 + ε)` as a polynomial in ε (Taylor shift by Horner's rule).
    pub fn translate(&self, x0: &BigRational) -> Poly {
        let step = Poly::new(vec![x0.clone(), BigRational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn fmt_poly(p: &Poly, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        match (i, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write!(f, "{var}")?,
            (_, false) => write!(f, "{mag}{var}")?,
        }
        if i > 1 {
            write!(f, "^{i}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, "ε", f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// An element of the field of rational functions in ε, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, NonArchError> {
        if den.is_zero() {
            return Err(NonArchError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let norm = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&norm),
            den: den.scale(&norm),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        RatFunc::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The positive infinitesimal ε (or, read as a function, the variable x).
    pub fn eps() -> Self {
        RatFunc {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, NonArchError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, NonArchError> {
        if rhs.is_zero() {
            return Err(NonArchError::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Result<Self, NonArchError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// ord(num) − ord(den). Positive means infinitesimal, negative infinite.
    pub fn order(&self) -> Result<i64, NonArchError> {
        let n = self.num.ord().ok_or(NonArchError::ZeroOrder)?;
        let d = self.den.ord().expect("denominator is nonzero");
        Ok(n as i64 - d as i64)
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.order().map_or(true, |o| o > 0)
    }

    pub fn is_finite(&self) -> bool {
        self.order().map_or(true, |o| o >= 0)
    }

    pub fn signum(&self) -> Ordering {
        match (self.num.lowest(), self.den.lowest()) {
            (None, _) => Ordering::Equal,
            (Some(a), Some(b)) => {
                if a.is_positive() == b.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Some(_), None) => unreachable!("denominator is nonzero"),
        }
    }

    /// The ε⁰ coefficient: the rational this element is infinitely close to.
    pub fn standard_part(&self) -> Result<BigRational, NonArchError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let order = self.order()?;
        if order < 0 {
            return Err(NonArchError::NoStandardPart(order));
        }
        if order > 0 {
            return Ok(BigRational::zero());
        }
        // Canonical form leaves at most one of num/den divisible by ε, and
        // order 0 rules out either, so both constant terms are nonzero.
        let k = self.den.ord().unwrap();
        Ok(self.num.coeff(k) / self.den.coeff(k))
    }

    /// Evaluate, reading the indeterminate as an ordinary variable.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, NonArchError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(NonArchError::Pole(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitute `x0 + ε` for the indeterminate.
    pub fn translate(&self, x0: &BigRational) -> RatFunc {
        RatFunc::new(self.num.translate(x0), self.den.translate(x0))
            .expect("translation preserves a nonzero denominator")
    }

    /// Divide by ε^k exactly.
    fn div_eps_pow(&self, k: usize) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let n_ord = self.num.ord().unwrap();
        let take = k.min(n_ord);
        let num = self.num.shift_down(take);
        let den = &self.den * &Poly::monomial(BigRational::one(), k - take);
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

/// Derivative of `f` at `x0` by order counting:
/// std((f(x0 + ε) − f(x0)) / ε).
pub fn derivative_at(f: &RatFunc, x0: &BigRational) -> Result<BigRational, NonArchError> {
    let value = f.eval(x0)?;
    let shifted = f.translate(x0);
    let diff = &shifted - &RatFunc::constant(value);
    diff.div_eps_pow(1).standard_part()
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Parses an exact rational: an integer, "p/q", or a decimal literal such as
/// "-12.5e-3".
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow(scale.unsigned_abs()))
    };
    if neg {
        value = -value;
    }
    Some(value)
}

/// Converts an expression in at most one variable to an exact rational
/// function of that variable.
///
/// Only `+ - * /`, unary minus and integer powers are accepted; any built-in
/// call or a non-integer exponent is rejected as not rational.
pub fn ratfunc_from_expr(e: &Expr, var: &str) -> Result<RatFunc, NonArchError> {
    match &e.kind {
        ExprKind::Number { literal, .. } => parse_rational(literal)
            .map(RatFunc::constant)
            .ok_or_else(|| NonArchError::NotRational(format!("literal {literal}"))),
        ExprKind::Var(name) if name == var => Ok(RatFunc::eps()),
        ExprKind::Var(name) => Err(NonArchError::NotRational(format!(
            "unexpected variable '{name}'"
        ))),
        ExprKind::Neg(child) => Ok(-ratfunc_from_expr(child, var)?),
        ExprKind::Call(func, _) => Err(NonArchError::NotRational(format!(
            "call to {}",
            func.name()
        ))),
        ExprKind::Binary(op, l, r) => {
            let a = ratfunc_from_expr(l, var)?;
            match op {
                BinOp::Pow => {
                    let b = ratfunc_from_expr(r, var)?;
                    let exp = (b.den.degree() == Some(0) && b.num.degree().unwrap_or(0) == 0)
                        .then(|| b.num.coeff(0))
                        .filter(|c| c.is_integer())
                        .and_then(|c| i64::try_from(c.to_integer()).ok())
                        .ok_or_else(|| {
                            NonArchError::NotRational("non-integer exponent".into())
                        })?;
                    a.powi(exp)
                }
                BinOp::Add => Ok(&a + &ratfunc_from_expr(r, var)?),
                BinOp::Sub => Ok(&a - &ratfunc_from_expr(r, var)?),
                BinOp::Mul => Ok(&a * &ratfunc_from_expr(r, var)?),
                BinOp::Div => a.checked_div(&ratfunc_from_expr(r, var)?),
            }
        }
    }
}

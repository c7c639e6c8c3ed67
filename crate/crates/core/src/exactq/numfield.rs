//! Arithmetic in ℚ[x]/(m(x)) on power-basis coordinates.
//!
//! Irreducibility of `m` is asserted by the caller. Construction only
//! rejects polynomials with a rational root, which is a complete
//! irreducibility test for degree ≤ 3 and a partial one above that.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::elim::Coordinates;
use super::scalar::{fmt_q, parse_q, Scalar, Q};
use crate::error::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    /// Coefficients of the monic modulus, constant term first; length d+1.
    min_poly: Vec<Q>,
}

impl NumberField {
    pub fn new(min_poly: Vec<Q>) -> Result<Arc<Self>, ExactError> {
        let mut p = min_poly;
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        if p.len() < 2 {
            return Err(ExactError::Parse("minimal polynomial must have degree ≥ 1".into()));
        }
        let lead = p.last().unwrap().clone();
        for c in &mut p {
            *c = &*c / &lead;
        }
        if p.len() > 2 {
            if let Some(r) = rational_root(&p)? {
                return Err(ExactError::NotAField(format!(
                    "{} (root {})",
                    poly_to_string(&p),
                    fmt_q(&r)
                )));
            }
        }
        Ok(Arc::new(NumberField { min_poly: p }))
    }

    pub fn parse(s: &str) -> Result<Arc<Self>, ExactError> {
        Self::new(parse_poly(s)?)
    }

    /// The field ℚ itself, presented as ℚ[x]/(x).
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            min_poly: vec![Q::zero(), Q::one()],
        })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Q] {
        &self.min_poly
    }

    fn reduce(&self, mut p: Vec<Q>) -> Vec<Q> {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (i, c) in self.min_poly[..d].iter().enumerate() {
                p[shift + i] -= &top * c;
            }
        }
        p.resize(d, Q::zero());
        p
    }
}

/// An element of a number field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NfElem {
    field: Arc<NumberField>,
    coeffs: Vec<Q>,
}

impl NfElem {
    pub fn new(field: &Arc<NumberField>, coeffs: Vec<Q>) -> Self {
        let c = field.reduce(coeffs);
        NfElem {
            field: field.clone(),
            coeffs: c,
        }
    }

    pub fn from_q(field: &Arc<NumberField>, x: Q) -> Self {
        Self::new(field, vec![x])
    }

    /// The generator `x` of the field.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![Q::zero(), Q::one()])
    }

    pub fn parse(field: &Arc<NumberField>, s: &str) -> Result<Self, ExactError> {
        Ok(Self::new(field, parse_poly(s)?))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn mul_matrix_columns(&self) -> Vec<Vec<Q>> {
        let d = self.field.degree();
        (0..d)
            .map(|k| {
                let mut xk = vec![Q::zero(); k + 1];
                xk[k] = Q::one();
                self.mul(&NfElem::new(&self.field, xk)).coeffs
            })
            .collect()
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        if self.vanishes() {
            return Err(ExactError::DivisionByZero);
        }
        let d = self.field.degree();
        let cols = self.mul_matrix_columns();
        let mut one = vec![Q::zero(); d];
        one[0] = Q::one();
        // Multiplication by a nonzero element is injective when m is irreducible.
        let c = Coordinates::new(d, &cols).map_err(|_| ExactError::DivisionByZero)?;
        let x = c.coords(&one).map_err(|_| ExactError::DivisionByZero)?;
        Ok(NfElem::new(&self.field, x))
    }
}

impl Scalar for NfElem {
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn zero_like(&self) -> Self {
        NfElem::new(&self.field, vec![])
    }
    fn one_like(&self) -> Self {
        NfElem::new(&self.field, vec![Q::one()])
    }
    fn add(&self, o: &Self) -> Self {
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        NfElem {
            field: self.field.clone(),
            coeffs: c,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        NfElem {
            field: self.field.clone(),
            coeffs: c,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        let mut p = vec![Q::zero(); self.coeffs.len() + o.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        NfElem::new(&self.field, p)
    }
    fn neg(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero or of a zero divisor")
    }
    fn same_kind(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_to_string(&self.coeffs))
    }
}

/// Wire form: coefficient list plus the modulus coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfElemJson {
    pub coeffs: Vec<String>,
    pub min_poly: Vec<String>,
}

impl From<&NfElem> for NfElemJson {
    fn from(e: &NfElem) -> Self {
        NfElemJson {
            coeffs: e.coeffs.iter().map(fmt_q).collect(),
            min_poly: e.field.min_poly.iter().map(fmt_q).collect(),
        }
    }
}

impl NfElemJson {
    pub fn to_elem(&self) -> Result<NfElem, ExactError> {
        let m = self
            .min_poly
            .iter()
            .map(|s| parse_q(s))
            .collect::<Result<Vec<_>, _>>()?;
        let c = self.coeffs.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>()?;
        let f = NumberField::new(m)?;
        Ok(NfElem::new(&f, c))
    }
}

fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ExactError> {
    let n = n
        .abs()
        .to_u64()
        .ok_or_else(|| ExactError::Parse("coefficient too large for the rational-root check".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// A rational root of `p` (coefficients constant-first), if any.
pub fn rational_root(p: &[Q]) -> Result<Option<Q>, ExactError> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Q::from_integer(l.clone())).to_integer())
        .collect();
    if ints[0].is_zero() {
        return Ok(Some(Q::zero()));
    }
    let lead = ints.last().unwrap();
    for a in divisors(&ints[0])? {
        for b in divisors(lead)? {
            for s in [1, -1] {
                let r = Q::new(&a * BigInt::from(s), b.clone());
                if eval(p, &r).is_zero() {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

/// Parses a univariate polynomial in `x` such as `x^2-2` or `1/2 + 3*x`.
/// Returns coefficients constant-first.
pub fn parse_poly(s: &str) -> Result<Vec<Q>, ExactError> {
    let bad = |m: &str| ExactError::Parse(format!("{m} in polynomial {s:?}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in t.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<Q> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-Q::one(), b),
            None => (Q::one(), term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (coef, power) = match body.find('x') {
            None => (parse_q(body)?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() { Q::one() } else { parse_q(c)? };
                let rest = &body[pos + 1..];
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(|| bad("expected ^"))?
                        .parse::<usize>()
                        .map_err(|_| bad("bad exponent"))?
                };
                (c, k)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Q::zero());
        }
        coeffs[power] += sign * coef;
    }
    Ok(coeffs)
}

pub fn poly_to_string(p: &[Q]) -> String {
    let mut parts = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => fmt_q(c),
            _ => {
                let head = if c.is_one() {
                    String::new()
                } else if *c == -Q::one() {
                    "-".into()
                } else {
                    format!("{}*", fmt_q(c))
                };
                if k == 1 {
                    format!("{head}x")
                } else {
                    format!("{head}x^{k}")
                }
            }
        };
        parts.push(mono);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = parts[0].clone();
    for p in &parts[1..] {
        if let Some(rest) = p.strip_prefix('-') {
            s.push('-');
            s.push_str(rest);
        } else {
            s.push('+');
            s.push_str(p);
        }
    }
    s
}

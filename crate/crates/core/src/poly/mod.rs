//! Exact univariate polynomials over ℚ.

mod charpoly;
mod rational;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use charpoly::{char_poly_at, char_poly_exact, det_bareiss};
pub use rational::RationalFunction;
pub use roots::{default_tolerance, real_roots, RootSet};

/// Polynomial with exact rational coefficients in ascending order. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::from_ints([0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x - a`.
    pub fn linear(a: BigRational) -> Self {
        Self::from_coeffs(vec![-a, BigRational::one()])
    }

    /// `x - a` for integer `a`.
    pub fn x_minus(a: i64) -> Self {
        Self::from_ints([-a, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Polynomial) -> Self {
        let mut out = Self::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * q) + &Self::constant(c.clone());
        }
        out
    }

    /// `self(x - c)`.
    pub fn shift(&self, c: i64) -> Self {
        if c == 0 {
            return self.clone();
        }
        self.compose(&Self::x_minus(c))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Largest coefficient magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max)
    }

    pub fn divrem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() < d.degree() || self.is_zero() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(rem)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Reconciliation(format!(
                "{d} does not divide {self} (remainder {r})"
            )))
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("b nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: returns monic square-free `s_k` with multiplicity `k`
    /// such that `self = lc · ∏ s_k^k`. Constant factors are omitted.
    pub fn square_free(&self) -> Vec<(Polynomial, usize)> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let nb = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            if a.degree() > 0 {
                out.push((a, i));
            }
            b = nb;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Multiplies through by the lcm of denominators and divides by the
    /// content, giving a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn primitive(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().is_some_and(|c| c.sign() == Sign::Minus) {
            g = -g;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &BigRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear(a.clone());
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.divrem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Distinct integer roots, ascending.
    pub fn integer_roots(&self) -> Vec<i64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let mut ints = self.primitive();
        let mut roots = Vec::new();
        if ints[0].is_zero() {
            roots.push(0);
            let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
            ints.drain(..lead_zeros);
        }
        if ints.len() > 1 {
            let bound = root_bound(&ints);
            let a0 = &ints[0];
            let p = Polynomial::from_ints(ints.iter().cloned());
            for r in 1..=bound {
                for cand in [r, -r] {
                    let cb = BigInt::from(cand);
                    // An integer root divides the constant term.
                    if !(a0 % &cb).is_zero() {
                        continue;
                    }
                    if p.eval(&BigRational::from_integer(cb)).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort_unstable();
        roots
    }

    pub fn to_exact_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

/// Fujiwara's bound on root magnitude, rounded up.
fn root_bound(ints: &[BigInt]) -> i64 {
    let n = ints.len() - 1;
    let ln_an = big_ln_abs(&ints[n]);
    let mut best = f64::NEG_INFINITY;
    for k in 1..=n {
        let c = &ints[n - k];
        if c.is_zero() {
            continue;
        }
        let mut v = (big_ln_abs(c) - ln_an) / k as f64;
        if k == n {
            v -= std::f64::consts::LN_2 / k as f64;
        }
        best = best.max(v);
    }
    if best == f64::NEG_INFINITY {
        return 0;
    }
    let b = 2.0 * best.exp();
    (b.ceil() as i64).saturating_add(1).min(1 << 40)
}

fn big_ln_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits < 1000 {
        c.abs().to_f64().unwrap_or(f64::MAX).ln()
    } else {
        let shift = bits - 60;
        let top = (c.abs() >> shift).to_f64().unwrap_or(1.0);
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

pub(crate) fn to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        if c.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Splits a list of (polynomial, multiplicity) pairs into pairwise coprime
/// square-free monic factors with the same product. Multiplicities are signed
/// so that quotients cancel; factors whose multiplicity nets to zero vanish.
pub fn coprime_basis(items: Vec<(Polynomial, i64)>) -> Vec<(Polynomial, i64)> {
    let mut work: Vec<(Polynomial, i64)> = items
        .into_iter()
        .filter(|(p, m)| p.degree() > 0 && *m != 0)
        .map(|(p, m)| (p.monic(), m))
        .collect();
    'outer: loop {
        for i in 0..work.len() {
            for j in (i + 1)..work.len() {
                let g = work[i].0.gcd(&work[j].0);
                if g.degree() == 0 {
                    continue;
                }
                let (pj, mj) = work.remove(j);
                let (pi, mi) = work.remove(i);
                let ri = pi.div_exact(&g).expect("gcd divides");
                let rj = pj.div_exact(&g).expect("gcd divides");
                for (p, m) in [(g, mi + mj), (ri, mi), (rj, mj)] {
                    if p.degree() > 0 && m != 0 {
                        work.push((p, m));
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    // Each element may still carry repeated roots of its own.
    let mut out: Vec<(Polynomial, i64)> = Vec::new();
    for (p, m) in work {
        for (s, k) in p.square_free() {
            out.push((s, k as i64 * m));
        }
    }
    out.retain(|(_, m)| *m != 0);
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_exact_strings().cmp(&b.0.to_exact_strings()))
    });
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
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
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_s = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => f.write_str(&mag_s)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&mag_s)?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_exact_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

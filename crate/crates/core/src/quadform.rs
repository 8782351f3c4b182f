//! Positive definite binary quadratic forms and the form class group of an
//! imaginary quadratic order.
//!
//! Coefficients are arbitrary-precision: the intermediate form produced by
//! composition has `a = a1 * a2 / d^2`, which overflows machine words long
//! before reduction brings it back down.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::abgroup::{AbGroupError, AbelianStructure, FiniteAbelianBuilder};

/// Largest |D| accepted by [`class_group_structure`] unless overridden.
pub const DEFAULT_MAX_ABS_DISCRIMINANT: i64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadFormError {
    #[error("{0} is not a negative discriminant (need D < 0, D = 0 or 1 mod 4)")]
    BadDiscriminant(i64),
    #[error("form {form} has discriminant {got}, expected {expected}")]
    DiscriminantMismatch {
        form: Box<QuadForm>,
        got: Box<BigInt>,
        expected: i64,
    },
    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(Box<QuadForm>),
    #[error("|D| = {abs} exceeds the configured bound {bound}")]
    TooLarge { abs: i64, bound: i64 },
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error(transparent)]
    Linear(#[from] AbGroupError),
}

/// A negative discriminant `D = 0, 1 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self, QuadFormError> {
        if value >= 0 || !matches!(value.rem_euclid(4), 0 | 1) {
            return Err(QuadFormError::BadDiscriminant(value));
        }
        Ok(Discriminant(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// Discriminant of the maximal order of `Q(sqrt(D))`: either
    /// `D = 1 mod 4` squarefree, or `D = 4m` with `m = 2, 3 mod 4` squarefree.
    pub fn is_fundamental(self) -> bool {
        is_fundamental(self.0)
    }

    pub fn principal_form(self) -> QuadForm {
        let b = if self.0.rem_euclid(4) == 0 { 0 } else { 1 };
        let c = (b * b - self.0) / 4;
        QuadForm::from_i64(1, b, c)
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_squarefree(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return false;
            }
        }
        q += 1;
    }
    true
}

pub fn is_fundamental(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Distinct prime divisors of `n > 0`, increasing.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && prime_divisors(n as u64) == [n as u64]
}

/// `a x^2 + b x y + c y^2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl QuadForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuadForm::new(a.into(), b.into(), c.into())
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn is_reduced(&self) -> bool {
        let abs_b = self.b.abs();
        abs_b <= self.a
            && self.a <= self.c
            && (!(abs_b == self.a || self.a == self.c) || !self.b.is_negative())
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    /// The inverse class: `(a, -b, c)`, reduced.
    pub fn inverse(&self) -> QuadForm {
        reduce_unchecked(QuadForm::new(self.a.clone(), -&self.b, self.c.clone()))
    }

    fn check(&self, d: Discriminant) -> Result<(), QuadFormError> {
        let got = self.discriminant();
        if got != BigInt::from(d.value()) {
            return Err(QuadFormError::DiscriminantMismatch {
                form: Box::new(self.clone()),
                got: Box::new(got),
                expected: d.value(),
            });
        }
        if !self.a.is_positive() {
            return Err(QuadFormError::NotPositiveDefinite(Box::new(self.clone())));
        }
        Ok(())
    }
}

/// Brings `b` into `(-a, a]` by `x -> x + r y`.
fn normalize(f: QuadForm) -> QuadForm {
    let QuadForm { a, b, c } = f;
    let two_a = &a * 2;
    let r = (&a - &b).div_floor(&two_a);
    let c = &a * &r * &r + &b * &r + &c;
    let b = &b + &two_a * &r;
    QuadForm { a, b, c }
}

fn reduce_unchecked(f: QuadForm) -> QuadForm {
    let mut f = normalize(f);
    while f.a > f.c {
        f = normalize(QuadForm {
            a: f.c,
            b: -f.b,
            c: f.a,
        });
    }
    if f.a == f.c && f.b.is_negative() {
        f.b = -f.b;
    }
    f
}

/// The unique reduced form properly equivalent to `f`.
pub fn reduce(f: &QuadForm, d: Discriminant) -> Result<QuadForm, QuadFormError> {
    f.check(d)?;
    Ok(reduce_unchecked(f.clone()))
}

/// Gaussian composition followed by reduction.
///
/// Solves for the united form with an explicit extended gcd (the classical
/// three-term Bezout on `a1`, `a2` and `(b1 + b2) / 2`).
pub fn compose(f: &QuadForm, g: &QuadForm, d: Discriminant) -> Result<QuadForm, QuadFormError> {
    f.check(d)?;
    g.check(d)?;
    Ok(compose_unchecked(f, g, d))
}

fn compose_unchecked(f: &QuadForm, g: &QuadForm, d: Discriminant) -> QuadForm {
    let (f1, f2) = if f.a > g.a { (g, f) } else { (f, g) };
    let (a1, b1) = (&f1.a, &f1.b);
    let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
    let s: BigInt = (b1 + b2) / 2;
    let n = b2 - &s;

    // d0 = gcd(a1, a2) = u a2 + v a1; y1 = u
    let (dd, y1) = if (a2 % a1).is_zero() {
        (a1.clone(), BigInt::zero())
    } else {
        let e = a2.extended_gcd(a1);
        (e.gcd, e.x)
    };
    // d1 = gcd(d0, s) = x2 s + y2 d0
    let (d1, x2, y2) = if (&s % &dd).is_zero() {
        (dd.clone(), BigInt::zero(), -BigInt::one())
    } else {
        let e = s.extended_gcd(&dd);
        (e.gcd, e.x, -e.y)
    };
    let v1 = a1 / &d1;
    let v2 = a2 / &d1;
    let r = (&y1 * &y2 * &n - &x2 * c2).mod_floor(&v1);
    let b3 = b2 + BigInt::from(2) * &v2 * &r;
    let a3 = &v1 * &v2;
    let disc = BigInt::from(d.value());
    let c3 = (&b3 * &b3 - &disc) / (BigInt::from(4) * &a3);
    reduce_unchecked(QuadForm::new(a3, b3, c3))
}

/// `f^e` for `e >= 0`, by square and multiply.
pub fn power(f: &QuadForm, mut e: u64, d: Discriminant) -> Result<QuadForm, QuadFormError> {
    f.check(d)?;
    let mut acc = d.principal_form();
    let mut base = reduce_unchecked(f.clone());
    while e > 0 {
        if e & 1 == 1 {
            acc = compose_unchecked(&acc, &base, d);
        }
        base = compose_unchecked(&base, &base, d);
        e >>= 1;
    }
    Ok(acc)
}

/// All primitive reduced forms of discriminant `D`; one per class.
pub fn enumerate_reduced(d: Discriminant) -> Vec<QuadForm> {
    let dv = d.value();
    let abs = dv.unsigned_abs();
    let mut out = Vec::new();
    let mut a: i64 = 1;
    while (3 * a * a) as u64 <= abs {
        for b in -a + 1..=a {
            if (b - dv).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - dv;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            if num_integer::gcd(num_integer::gcd(a, b), c) != 1 {
                continue;
            }
            out.push(QuadForm::from_i64(a, b, c));
        }
        a += 1;
    }
    out
}

/// Class group of the order of discriminant `D`.
#[derive(Clone, Debug)]
pub struct ClassGroupStructure {
    pub discriminant: Discriminant,
    /// Class number `h(D)`.
    pub order: u64,
    /// `d_1 | d_2 | ...`, units omitted.
    pub invariant_factors: Vec<i64>,
    /// `generators[i]` has order `invariant_factors[i]`.
    pub generators: Vec<QuadForm>,
    /// False when `D` is not fundamental (form class group of a non-maximal order).
    pub fundamental: bool,
    structure: AbelianStructure<QuadForm>,
}

impl ClassGroupStructure {
    pub fn p_rank(&self, p: i64) -> usize {
        self.invariant_factors.iter().filter(|&&x| x % p == 0).count()
    }

    pub fn group(&self) -> &crate::abgroup::AbelianGroup {
        &self.structure.group
    }

    /// Coordinates of a reduced form in the invariant-factor basis.
    pub fn log(&self, f: &QuadForm) -> Option<&Vec<i64>> {
        self.structure.log(f)
    }

    /// `C3`, `C2xC2`, ... with `1` for the trivial group.
    pub fn describe(&self) -> String {
        self.structure.group.to_string()
    }
}

pub fn class_group_structure(d: Discriminant) -> Result<ClassGroupStructure, QuadFormError> {
    class_group_structure_bounded(d, DEFAULT_MAX_ABS_DISCRIMINANT)
}

/// As [`class_group_structure`], refusing `|D| > bound`.
pub fn class_group_structure_bounded(
    d: Discriminant,
    bound: i64,
) -> Result<ClassGroupStructure, QuadFormError> {
    let abs = d.value().abs();
    if abs > bound {
        return Err(QuadFormError::TooLarge { abs, bound });
    }
    let forms = enumerate_reduced(d);
    let builder =
        FiniteAbelianBuilder::new(d.principal_form(), |x: &QuadForm, y: &QuadForm| compose_unchecked(x, y, d));
    let structure = builder.build(forms)?;
    Ok(ClassGroupStructure {
        discriminant: d,
        order: structure.len() as u64,
        invariant_factors: structure.group.invariant_factors().to_vec(),
        generators: structure.generators.clone(),
        fundamental: d.is_fundamental(),
        structure,
    })
}

/// Rank of the p-Sylow subgroup of the class group.
pub fn p_rank(d: Discriminant, p: i64) -> Result<usize, QuadFormError> {
    if !is_prime(p) {
        return Err(QuadFormError::NotPrime(p));
    }
    Ok(class_group_structure(d)?.p_rank(p))
}

/// `t - 1` where `t` counts the primes dividing a fundamental `D`: the
/// 2-rank predicted by genus theory.
pub fn genus_two_rank(d: Discriminant) -> Result<usize, QuadFormError> {
    if !d.is_fundamental() {
        return Err(QuadFormError::NotFundamental(d.value()));
    }
    Ok(prime_divisors(d.value().unsigned_abs()).len() - 1)
}

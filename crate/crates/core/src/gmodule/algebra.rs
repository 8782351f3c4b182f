use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;

use crate::abgroup::{AbelianGroup, GroupElement};
use crate::quadform::prime_divisors;

use super::GModuleError;

/// Element of the group algebra `Z/p^m [G]` for a finite abelian `G`.
/// Coefficients are indexed by `G::index_of`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    group: AbelianGroup,
    modulus: u64,
    coeffs: Vec<u64>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &AbelianGroup, modulus: u64) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            modulus,
            coeffs: vec![0; group.order() as usize],
        }
    }

    pub fn one(group: &AbelianGroup, modulus: u64) -> Self {
        Self::basis(group, modulus, &group.identity())
    }

    /// The group element `g` as an algebra element.
    pub fn basis(group: &AbelianGroup, modulus: u64, g: &[i64]) -> Self {
        let mut e = Self::zero(group, modulus);
        e.coeffs[group.index_of(g) as usize] = 1 % modulus;
        e
    }

    pub fn from_coeffs(group: &AbelianGroup, modulus: u64, coeffs: Vec<u64>) -> Self {
        assert_eq!(coeffs.len() as i64, group.order());
        let coeffs = coeffs.into_iter().map(|c| c % modulus).collect();
        GroupAlgebraElement {
            group: group.clone(),
            modulus,
            coeffs,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeff(&self, g: &[i64]) -> u64 {
        self.coeffs[self.group.index_of(g) as usize]
    }

    /// `(group element, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.group.element_at(i as i64), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: u64) -> Self {
        let m = self.modulus;
        let coeffs = self.coeffs.iter().map(|&c| mulmod(c, k % m, m)).collect();
        GroupAlgebraElement {
            coeffs,
            ..self.clone()
        }
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Reduction to a smaller modulus dividing the current one.
    pub fn reduce_to(&self, modulus: u64) -> Self {
        assert_eq!(self.modulus % modulus, 0);
        Self::from_coeffs(&self.group, modulus, self.coeffs.clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.group, self.modulus);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.group == other.group && self.modulus == other.modulus,
            "group algebra elements over different rings"
        );
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|(g, c)| format!("{c}*{g:?}")).collect();
        if terms.is_empty() {
            write!(f, "0 mod {}", self.modulus)
        } else {
            write!(f, "{} mod {}", terms.join(" + "), self.modulus)
        }
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: Self) -> GroupAlgebraElement {
        self.check_compatible(rhs);
        let m = self.modulus;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| (a + b) % m).collect();
        GroupAlgebraElement {
            coeffs,
            ..self.clone()
        }
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        self.check_compatible(rhs);
        let m = self.modulus;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| (a + m - b) % m).collect();
        GroupAlgebraElement {
            coeffs,
            ..self.clone()
        }
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: Self) -> GroupAlgebraElement {
        self.check_compatible(rhs);
        let m = self.modulus;
        let g = &self.group;
        let mut out = vec![0u64; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            let x = g.element_at(i as i64);
            for (j, &b) in rhs.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                let k = g.index_of(&g.add(&x, &g.element_at(j as i64))) as usize;
                out[k] = (out[k] + mulmod(a, b, m)) % m;
            }
        }
        GroupAlgebraElement {
            coeffs: out,
            ..self.clone()
        }
    }
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    (g.gcd == 1).then(|| g.x.rem_euclid(m as i128) as u64)
}

/// Smallest generator of `(Z/p)^*`.
fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| powmod(g, (p - 1) / q, p) != 1))
        .expect("primes have primitive roots")
}

/// A root of unity of order `e` in `Z/p^m` (`e | p - 1`), the Teichmuller
/// lift of a power of the smallest primitive root.
pub fn teichmuller_root(p: u64, m: u32, e: u64) -> u64 {
    assert_eq!((p - 1) % e, 0);
    let pm = p.pow(m);
    let t = powmod(primitive_root(p), p.pow(m - 1), pm);
    powmod(t, (p - 1) / e, pm)
}

fn check_coprime(group: &AbelianGroup, p: u64) -> Result<(), GModuleError> {
    if !crate::quadform::is_prime(p as i64) {
        return Err(GModuleError::NotPrime(p));
    }
    if (group.order() as u64).is_multiple_of(p) {
        return Err(GModuleError::NotCoprime {
            order: group.order() as u64,
            p,
        });
    }
    Ok(())
}

/// Idempotents of `Z/p^m [G]` attached to the characters of `G`; requires
/// `exp(G) | p - 1`. Ordered by character, characters indexed like `G`.
pub fn character_idempotents(
    group: &AbelianGroup,
    p: u64,
    m: u32,
) -> Result<Vec<GroupAlgebraElement>, GModuleError> {
    check_coprime(group, p)?;
    let e = group.exponent() as u64;
    if !(p - 1).is_multiple_of(e) {
        return Err(GModuleError::CharactersNotRational { exponent: e, p });
    }
    let pm = p.pow(m);
    let omega = teichmuller_root(p, m, e);
    let inv_order = invmod(group.order() as u64, pm).expect("coprime order");
    let factors = group.invariant_factors();
    let mut out = Vec::new();
    for chi in group.elements() {
        // chi(x) = omega^(sum chi_i x_i e / d_i); coefficient of x is chi(x)^-1 / |G|
        let coeffs = group
            .elements()
            .map(|x| {
                let k: u64 = chi
                    .iter()
                    .zip(&x)
                    .zip(factors)
                    .map(|((&c, &xi), &d)| c as u64 * xi as u64 * (e / d as u64))
                    .sum::<u64>()
                    % e;
                mulmod(powmod(omega, (e - k) % e, pm), inv_order, pm)
            })
            .collect();
        out.push(GroupAlgebraElement::from_coeffs(group, pm, coeffs));
    }
    Ok(out)
}

/// Primitive idempotents of `Z/p^m [G]`, `p` not dividing `|G|`.
///
/// Mod `p`, every idempotent lies in the subalgebra `B = {a : a^p = a}`,
/// spanned by the sums over orbits of `g -> g^p`. `B` is a product of copies
/// of `F_p`, so it is split completely by the Lagrange idempotents
/// `1 - (b - l)^(p-1)` of its basis elements `b`. The resulting idempotents
/// are lifted to precision `m` with `e -> 3e^2 - 2e^3`.
pub fn primitive_idempotents(
    group: &AbelianGroup,
    p: u64,
    m: u32,
) -> Result<Vec<GroupAlgebraElement>, GModuleError> {
    check_coprime(group, p)?;
    let one_p = GroupAlgebraElement::one(group, p);
    let mut idems = vec![one_p.clone()];
    for b in frobenius_orbit_sums(group, p) {
        let mut next = Vec::new();
        for e in &idems {
            for lambda in 0..p {
                let shifted = &b - &one_p.scale(lambda);
                let f = &one_p - &shifted.pow(p - 1);
                let ef = e * &f;
                if !ef.is_zero() {
                    next.push(ef);
                }
            }
        }
        idems = next;
    }
    let pm = p.pow(m);
    Ok(idems.into_iter().map(|e| hensel_lift(&e, pm)).collect())
}

/// Orbit sums of `x -> p x` on `G`, as elements of `F_p[G]`.
fn frobenius_orbit_sums(group: &AbelianGroup, p: u64) -> Vec<GroupAlgebraElement> {
    let mut seen = vec![false; group.order() as usize];
    let mut out = Vec::new();
    for x in group.elements() {
        if seen[group.index_of(&x) as usize] {
            continue;
        }
        let mut sum = GroupAlgebraElement::zero(group, p);
        let mut y = x.clone();
        while !seen[group.index_of(&y) as usize] {
            seen[group.index_of(&y) as usize] = true;
            sum = &sum + &GroupAlgebraElement::basis(group, p, &y);
            y = group.scale(p as i64, &y);
        }
        out.push(sum);
    }
    out
}

/// The unique idempotent of `Z/pm [G]` congruent to `e` mod `p`.
pub fn hensel_lift(e: &GroupAlgebraElement, pm: u64) -> GroupAlgebraElement {
    let mut cur = GroupAlgebraElement::from_coeffs(e.group(), pm, e.coeffs.clone());
    loop {
        let sq = &cur * &cur;
        let next = &sq.scale(3) - &(&sq * &cur).scale(2);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

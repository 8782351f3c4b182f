//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use capitulation::abgroup::{AbelianGroup, GroupElement, Homomorphism};
use capitulation::gmodule::GModule;
use capitulation::quadform::{is_fundamental, Discriminant, QuadForm};
use rand::Rng;

/// Reduced primitive forms of discriminant `d`, counted straight from the
/// definition `|b| <= a <= c`, `b >= 0` when either bound is tight.
pub fn brute_reduced_forms(d: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    let n = -d;
    let mut a = 1;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            if gcd(gcd(a, b.abs()), c) == 1 {
                out.push((a, b, c));
            }
        }
        a += 1;
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn form_tuple(f: &QuadForm) -> (i64, i64, i64) {
    (
        i64::try_from(&f.a).unwrap(),
        i64::try_from(&f.b).unwrap(),
        i64::try_from(&f.c).unwrap(),
    )
}

pub fn fundamental_discriminants(max_abs: i64) -> Vec<Discriminant> {
    (3..=max_abs)
        .map(|n| -n)
        .filter(|&d| is_fundamental(d))
        .map(|d| Discriminant::new(d).unwrap())
        .collect()
}

/// Number of distinct primes dividing `n`, by trial division.
pub fn omega(mut n: u64) -> usize {
    let mut count = 0;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            count += 1;
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    count + usize::from(n > 1)
}

/// All finite abelian p-groups of order `p^n`, one per partition of `n`.
pub fn abelian_p_groups(p: i64, n: u32) -> Vec<AbelianGroup> {
    fn parts(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            parts(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut ps = Vec::new();
    parts(n, n, &mut Vec::new(), &mut ps);
    ps.into_iter()
        .map(|ks| {
            let orders: Vec<i64> = ks.iter().map(|&k| p.pow(k)).collect();
            AbelianGroup::from_orders(&orders).unwrap()
        })
        .collect()
}

/// A uniformly random endomorphism of `a`.
pub fn random_endomorphism<R: Rng>(a: &AbelianGroup, rng: &mut R) -> Homomorphism {
    let d = a.invariant_factors();
    let images: Vec<GroupElement> = (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| {
                    // the image of a generator of order d_i must have order dividing d_i
                    let step = d[j] / gcd(d[i], d[j]);
                    step * rng.gen_range(0..d[j] / step)
                })
                .collect()
        })
        .collect();
    Homomorphism::from_images(a, a, &images).unwrap()
}

pub fn random_automorphism<R: Rng>(a: &AbelianGroup, rng: &mut R) -> Homomorphism {
    loop {
        let h = random_endomorphism(a, rng);
        if h.is_injective().unwrap() {
            return h;
        }
    }
}

pub fn hom_order(h: &Homomorphism) -> u32 {
    let id = Homomorphism::identity(h.source());
    let mut x = h.clone();
    let mut k = 1;
    while x != id {
        x = x.compose(h).unwrap();
        k += 1;
    }
    k
}

/// A module over a cyclic group of order prime to `p` (at most `max_g`):
/// the prime-to-p part of a random automorphism, cut down further when its
/// order exceeds `max_g`.
pub fn random_coprime_module<R: Rng>(a: &AbelianGroup, p: u64, max_g: u32, rng: &mut R) -> GModule {
    let phi = random_automorphism(a, rng);
    let k = hom_order(&phi);
    let mut pk = 1;
    while (k / pk).is_multiple_of(p as u32) {
        pk *= p as u32;
    }
    let m = k / pk;
    let d = (1..=m.min(max_g)).rev().find(|d| m.is_multiple_of(*d)).unwrap();
    let sigma = phi.pow(pk * (m / d)).unwrap();
    GModule::cyclic(a, d as i64, p, sigma).unwrap()
}

/// Whether `a` is the internal direct product of the given subgroups,
/// checked by summing every tuple of elements.
pub fn is_internal_direct_product(a: &AbelianGroup, parts: &[Vec<GroupElement>]) -> bool {
    let mut sums: Vec<GroupElement> = vec![a.identity()];
    for part in parts {
        let mut next = Vec::with_capacity(sums.len() * part.len());
        for s in &sums {
            for x in part {
                next.push(a.add(s, x));
            }
        }
        sums = next;
    }
    if sums.len() as i64 != a.order() {
        return false;
    }
    sums.sort();
    sums.dedup();
    sums.len() as i64 == a.order()
}

/// Whether some family of cyclic submodules of `m` forms an internal direct
/// product equal to the whole module, by exhaustive search.
pub fn brute_has_cycle_decomposition(m: &GModule) -> bool {
    let a = m.module();
    let mut cycles: Vec<Vec<GroupElement>> = Vec::new();
    for x in a.elements() {
        let mut b = m.submodule(std::slice::from_ref(&x)).unwrap().elements();
        b.sort();
        if b.len() > 1 && !cycles.contains(&b) {
            cycles.push(b);
        }
    }
    fn search(a: &AbelianGroup, cycles: &[Vec<GroupElement>], start: usize, chosen: &mut Vec<Vec<GroupElement>>, size: i64) -> bool {
        if size == a.order() {
            return is_internal_direct_product(a, chosen);
        }
        for i in start..cycles.len() {
            let c = &cycles[i];
            if a.order() % (size * c.len() as i64) != 0 {
                continue;
            }
            chosen.push(c.clone());
            if is_internal_direct_product_of_order(a, chosen, size * c.len() as i64)
                && search(a, cycles, i + 1, chosen, size * c.len() as i64)
            {
                return true;
            }
            chosen.pop();
        }
        false
    }
    a.order() == 1 || search(a, &cycles, 0, &mut Vec::new(), 1)
}

/// Whether the subgroups meet independently, i.e. their sums are distinct.
fn is_internal_direct_product_of_order(a: &AbelianGroup, parts: &[Vec<GroupElement>], order: i64) -> bool {
    let mut sums: Vec<GroupElement> = vec![a.identity()];
    for part in parts {
        sums = sums.iter().flat_map(|s| part.iter().map(move |x| a.add(s, x))).collect();
    }
    sums.sort();
    sums.dedup();
    sums.len() as i64 == order
}

use std::collections::HashMap;
use std::hash::Hash;

use super::matrix::{smith_normal_form, IntMatrix};
use super::{structure_from_relations, AbGroupError, AbelianGroup, GroupElement};

/// A concrete finite abelian group identified with its invariant-factor form:
/// the generators realizing the standard basis and a discrete-log table.
#[derive(Clone, Debug)]
pub struct AbelianStructure<T> {
    pub group: AbelianGroup,
    /// `generators[j]` is the element with coordinates `e_j`.
    pub generators: Vec<T>,
    dlog: HashMap<T, GroupElement>,
}

impl<T: Clone + Eq + Hash> AbelianStructure<T> {
    pub fn log(&self, x: &T) -> Option<&GroupElement> {
        self.dlog.get(x)
    }

    pub fn len(&self) -> usize {
        self.dlog.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dlog.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &GroupElement)> {
        self.dlog.iter()
    }
}

/// Determines the structure of a finite abelian group given as a black box
/// (element list plus multiplication).
///
/// Generators are picked greedily in list order: each element not yet in
/// the span becomes a new generator, and the first power of it that falls
/// back into the span gives a relation. The Smith form of the resulting
/// relation lattice yields the invariant factors.
pub struct FiniteAbelianBuilder<T, F> {
    identity: T,
    op: F,
}

impl<T, F> FiniteAbelianBuilder<T, F>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    pub fn new(identity: T, op: F) -> Self {
        FiniteAbelianBuilder { identity, op }
    }

    fn pow(&self, x: &T, mut e: u64) -> T {
        let mut acc = self.identity.clone();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = (self.op)(&acc, &base);
            }
            base = (self.op)(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn build<I>(&self, elements: I) -> Result<AbelianStructure<T>, AbGroupError>
    where
        I: IntoIterator<Item = T>,
    {
        let mut span: HashMap<T, Vec<i64>> = HashMap::new();
        span.insert(self.identity.clone(), vec![]);
        let mut gens: Vec<T> = Vec::new();
        // relation j: e_j * g_j - (coords of g_j^{e_j} in earlier gens) = 0
        let mut relations: Vec<Vec<i64>> = Vec::new();

        for x in elements {
            if span.contains_key(&x) {
                continue;
            }
            let mut e = 1i64;
            let mut y = x.clone();
            while !span.contains_key(&y) {
                y = (self.op)(&y, &x);
                e += 1;
            }
            let k = gens.len();
            let mut rel: Vec<i64> = span[&y].iter().map(|c| -c).collect();
            rel.resize(k, 0);
            rel.push(e);
            relations.push(rel);

            let old: Vec<(T, Vec<i64>)> = span.drain().collect();
            for (s, coords) in old {
                let mut cur = s;
                for i in 0..e {
                    let mut v = coords.clone();
                    v.resize(k, 0);
                    v.push(i);
                    let next = (self.op)(&cur, &x);
                    span.insert(cur, v);
                    cur = next;
                }
            }
            gens.push(x);
        }

        let k = gens.len();
        for r in relations.iter_mut() {
            r.resize(k, 0);
        }
        let order = span.len() as u64;
        let snf = smith_normal_form(&IntMatrix::from_rows(&relations, k))?;
        let (group, proj) = structure_from_relations(&snf)?;
        let diag = snf.diagonal();

        let mut generators = Vec::with_capacity(group.ngens());
        for j in (0..k).filter(|&j| diag[j] != 1) {
            let mut g = self.identity.clone();
            for (i, gi) in gens.iter().enumerate() {
                let e = snf.v_inv[(j, i)].rem_euclid(order as i64) as u64;
                g = (self.op)(&g, &self.pow(gi, e));
            }
            generators.push(g);
        }

        let dlog = span
            .into_iter()
            .map(|(x, mut v)| {
                v.resize(k, 0);
                let c = proj.apply(&v).expect("small coordinates");
                (x, group.normalize(&c))
            })
            .collect();
        Ok(AbelianStructure {
            group,
            generators,
            dlog,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_mod_n() {
        // (Z/91)^* = (Z/7)^* x (Z/13)^*
        let n = 91u64;
        let units: Vec<u64> = (1..n).filter(|&x| num_integer::gcd(x, n) == 1).collect();
        let b = FiniteAbelianBuilder::new(1u64, |a: &u64, b: &u64| a * b % n);
        let s = b.build(units.clone()).unwrap();
        assert_eq!(s.group.invariant_factors(), &[6, 12]);
        assert_eq!(s.len(), units.len());
        for (j, g) in s.generators.iter().enumerate() {
            assert_eq!(s.log(g).unwrap(), &s.group.generator(j));
        }
        // dlog is a homomorphism
        for &x in &units {
            for &y in &units[..10] {
                let lhs = s.log(&(x * y % n)).unwrap().clone();
                let rhs = s.group.add(s.log(&x).unwrap(), s.log(&y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trivial_group() {
        let b = FiniteAbelianBuilder::new(0u8, |a: &u8, b: &u8| a ^ b);
        let s = b.build(vec![0u8]).unwrap();
        assert!(s.group.is_trivial());
        assert!(s.generators.is_empty());
    }
}

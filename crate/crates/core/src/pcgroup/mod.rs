//! Finite p-groups given by consistent power-commutator presentations.
//!
//! Generators `g_1, ..., g_n` satisfy
//!
//! * power relations `g_i^p = w_i` with `w_i` a normal word in `g_{i+1}..g_n`,
//! * commutator relations `[g_j, g_i] = c_{ji}` (`i < j`) with `c_{ji}` a
//!   normal word in `g_{j+1}..g_n`, where `[x, y] = x^-1 y^-1 x y`, so that
//!   `g_j g_i = g_i g_j c_{ji}`.
//!
//! Every element has a unique normal word `g_1^{e_1} ... g_n^{e_n}` with
//! `0 <= e_i < p`. Elements are handled as indices `sum e_i p^(n-1-i)`.
//! Products are computed by collection from the left; right multiplication
//! by each generator is tabulated once when the group is built.

mod catalog;
mod iso;
mod subgroup;
mod transfer;
mod word;

use std::fmt;

use thiserror::Error;

use crate::abgroup::AbGroupError;

pub use catalog::{builtin_catalog, parse_catalog, write_catalog, Catalog};
pub use iso::{find_isomorphism, is_isomorphic, GroupInvariants};
pub use subgroup::{Abelianization, PcSubgroup, SubgroupAbelianization};
pub use transfer::{
    capitulation_type, random_transversal, schreier_transversal, transfer, transfer_with_transversal,
    CapitulationType, KernelEntry, TransferMap, Transversal,
};
pub use word::{parse_word, Word};

/// Index of an element in a [`PcGroup`].
pub type Elem = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PcGroupError {
    #[error("presentation of {name} is inconsistent: {detail}")]
    Inconsistent { name: String, detail: String },
    #[error("relation {relation} is malformed: {detail}")]
    BadRelation { relation: String, detail: String },
    #[error("cannot parse word {word:?}: {detail}")]
    BadWord { word: String, detail: String },
    #[error("catalog line {line}: {detail}")]
    Catalog { line: usize, detail: String },
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("group of order {0} is too large for tabulated multiplication")]
    TooLarge(u64),
    #[error("generators do not close to a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal of index p containing the derived subgroup")]
    NotMaximalNormal,
    #[error("transversal does not list one element per coset")]
    BadTransversal,
    #[error(transparent)]
    Linear(#[from] AbGroupError),
}

/// Largest group order for which multiplication is tabulated.
pub const MAX_ORDER: u64 = 1 << 20;

/// Raw relations of a power-commutator presentation. Words are exponent
/// vectors of length `ngens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub prime: u32,
    pub ngens: usize,
    /// `power[i]` = normal word of `g_i^p`.
    pub power: Vec<Vec<u32>>,
    /// `commutator[j][i]` (`i < j`) = normal word of `[g_j, g_i]`.
    pub commutator: Vec<Vec<Vec<u32>>>,
}

impl Presentation {
    /// All relations trivial: the elementary abelian group of rank `n`.
    pub fn trivial_relations(name: &str, prime: u32, ngens: usize) -> Self {
        Presentation {
            name: name.to_string(),
            prime,
            ngens,
            power: vec![vec![0; ngens]; ngens],
            commutator: (0..ngens).map(|j| vec![vec![0; ngens]; j]).collect(),
        }
    }

    pub fn set_power(&mut self, i: usize, word: Vec<u32>) {
        self.power[i] = word;
    }

    pub fn set_commutator(&mut self, j: usize, i: usize, word: Vec<u32>) {
        assert!(i < j);
        self.commutator[j][i] = word;
    }

    fn validate(&self) -> Result<(), PcGroupError> {
        let p = self.prime;
        if !crate::quadform::is_prime(p as i64) {
            return Err(PcGroupError::NotPrime(p));
        }
        let bad = |relation: String, detail: &str| PcGroupError::BadRelation {
            relation,
            detail: detail.to_string(),
        };
        for (i, w) in self.power.iter().enumerate() {
            if w.len() != self.ngens || w.iter().any(|&e| e >= p) {
                return Err(bad(format!("g{}^p", i + 1), "not a normal word"));
            }
            if w[..=i].iter().any(|&e| e != 0) {
                return Err(bad(format!("g{}^p", i + 1), "must only involve later generators"));
            }
        }
        for (j, row) in self.commutator.iter().enumerate() {
            for (i, w) in row.iter().enumerate() {
                if w.len() != self.ngens || w.iter().any(|&e| e >= p) {
                    return Err(bad(format!("[g{},g{}]", j + 1, i + 1), "not a normal word"));
                }
                if w[..=j].iter().any(|&e| e != 0) {
                    return Err(bad(
                        format!("[g{},g{}]", j + 1, i + 1),
                        "must only involve generators after the first argument",
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A finite p-group with tabulated right multiplication by generators.
#[derive(Clone)]
pub struct PcGroup {
    pres: Presentation,
    order: u32,
    /// `right[x * n + i]` = `x * g_i`
    right: Vec<Elem>,
    inverse: Vec<Elem>,
}

impl fmt::Debug for PcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PcGroup")
            .field("name", &self.pres.name)
            .field("prime", &self.pres.prime)
            .field("order", &self.order)
            .finish()
    }
}

impl PcGroup {
    /// Builds the multiplication tables and runs the overlap consistency
    /// checks.
    pub fn new(pres: Presentation) -> Result<Self, PcGroupError> {
        pres.validate()?;
        let mut group = Self::build_unchecked(pres)?;
        group.check_consistency()?;
        // element orders are only finite once the relations are consistent
        group.fill_inverses();
        Ok(group)
    }

    fn build_unchecked(pres: Presentation) -> Result<Self, PcGroupError> {
        let p = pres.prime as u64;
        let n = pres.ngens;
        let order = p
            .checked_pow(n as u32)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(PcGroupError::TooLarge(p.saturating_pow(n as u32)))?;
        let mut g = PcGroup {
            pres,
            order: order as u32,
            right: vec![0; order as usize * n],
            inverse: vec![0; order as usize],
        };
        // fill generator columns from the last one backwards: x * g_i only
        // ever needs multiplication by g_j with j > i
        for i in (0..n).rev() {
            for x in 0..order as u32 {
                let v = g.collect_generator(&g.exponents(x), i);
                g.right[x as usize * n + i] = g.index(&v);
            }
        }
        Ok(g)
    }

    fn fill_inverses(&mut self) {
        for x in 0..self.order {
            self.inverse[x as usize] = self.compute_inverse(x);
        }
    }

    /// `x * g_i` by collection, assuming the columns for `g_j`, `j > i`,
    /// are already tabulated.
    fn collect_generator(&self, x: &[u32], i: usize) -> Vec<u32> {
        let p = self.pres.prime;
        let n = self.pres.ngens;
        let mut res = vec![0u32; n];
        res[..=i].copy_from_slice(&x[..=i]);
        res[i] += 1;
        let mut cur = if res[i] == p {
            res[i] = 0;
            let base = self.index(&res);
            self.mul_word_vec(base, &self.pres.power[i])
        } else {
            self.index(&res)
        };
        // move g_i left past the tail: g_j^{g_i} = g_j [g_j, g_i]
        for j in i + 1..n {
            for _ in 0..x[j] {
                cur = self.right[cur as usize * n + j];
                cur = self.mul_word_vec(cur, &self.pres.commutator[j][i]);
            }
        }
        self.exponents(cur)
    }

    fn mul_word_vec(&self, mut x: Elem, w: &[u32]) -> Elem {
        let n = self.pres.ngens;
        for (j, &e) in w.iter().enumerate() {
            for _ in 0..e {
                x = self.right[x as usize * n + j];
            }
        }
        x
    }

    fn compute_inverse(&self, x: Elem) -> Elem {
        let mut prev = 0;
        let mut y = x;
        while y != 0 {
            prev = y;
            y = self.mul(y, x);
        }
        prev
    }

    fn check_consistency(&self) -> Result<(), PcGroupError> {
        let n = self.pres.ngens;
        let p = self.pres.prime;
        let gen = |i: usize| self.generator(i);
        let fail = |detail: String| PcGroupError::Inconsistent {
            name: self.pres.name.clone(),
            detail,
        };
        let pow = |x: Elem, e: u32| (0..e).fold(0, |acc, _| self.mul(acc, x));
        let power_elem = |i: usize| self.index(&self.pres.power[i]);
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let lhs = self.mul(self.mul(gen(k), gen(j)), gen(i));
                    let rhs = self.mul(gen(k), self.mul(gen(j), gen(i)));
                    if lhs != rhs {
                        return Err(fail(format!("(g{} g{}) g{} != g{} (g{} g{})", k + 1, j + 1, i + 1, k + 1, j + 1, i + 1)));
                    }
                }
            }
        }
        for j in 0..n {
            for i in 0..j {
                let lhs = self.mul(pow(gen(j), p - 1), self.mul(gen(j), gen(i)));
                let rhs = self.mul(power_elem(j), gen(i));
                if lhs != rhs {
                    return Err(fail(format!("g{}^p g{} overlap", j + 1, i + 1)));
                }
                let lhs = self.mul(self.mul(gen(j), gen(i)), pow(gen(i), p - 1));
                let rhs = self.mul(gen(j), power_elem(i));
                if lhs != rhs {
                    return Err(fail(format!("g{} g{}^p overlap", j + 1, i + 1)));
                }
            }
        }
        for i in 0..n {
            if self.mul(gen(i), power_elem(i)) != self.mul(power_elem(i), gen(i)) {
                return Err(fail(format!("g{} g{}^p overlap", i + 1, i + 1)));
            }
        }
        Ok(())
    }

    /// Full associativity check over all pairs of elements and generators.
    /// Quadratic in the group order; meant for tests.
    pub fn is_associative(&self) -> bool {
        (0..self.order).all(|x| {
            (0..self.order).all(|y| {
                (0..self.ngens()).all(|i| {
                    let g = self.generator(i);
                    self.mul(self.mul(x, y), g) == self.mul(x, self.mul(y, g))
                })
            })
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn prime(&self) -> u32 {
        self.pres.prime
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    /// Element index of a normal word given by its exponent vector.
    pub fn index(&self, exps: &[u32]) -> Elem {
        let p = self.pres.prime;
        exps.iter().fold(0, |acc, &e| acc * p + e)
    }

    pub fn exponents(&self, mut x: Elem) -> Vec<u32> {
        let p = self.pres.prime;
        let n = self.pres.ngens;
        let mut out = vec![0; n];
        for i in (0..n).rev() {
            out[i] = x % p;
            x /= p;
        }
        out
    }

    pub fn generator(&self, i: usize) -> Elem {
        let mut v = vec![0; self.ngens()];
        v[i] = 1;
        self.index(&v)
    }

    pub fn mul_generator(&self, x: Elem, i: usize) -> Elem {
        self.right[x as usize * self.ngens() + i]
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let mut acc = x;
        for (i, e) in self.exponents(y).into_iter().enumerate() {
            for _ in 0..e {
                acc = self.mul_generator(acc, i);
            }
        }
        acc
    }

    pub fn inv(&self, x: Elem) -> Elem {
        self.inverse[x as usize]
    }

    pub fn pow(&self, x: Elem, e: i64) -> Elem {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `y^-1 x y`
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Normal form of an arbitrary word (integer exponents, any order).
    pub fn collect(&self, w: &Word) -> Result<Elem, PcGroupError> {
        let mut acc = 0;
        for &(g, e) in w.letters() {
            if g >= self.ngens() {
                return Err(PcGroupError::BadWord {
                    word: w.to_string(),
                    detail: format!("generator g{} out of range", g + 1),
                });
            }
            acc = self.mul(acc, self.pow(self.generator(g), e));
        }
        Ok(acc)
    }

    /// The normal word of an element, e.g. `g1^2g2g3^2`.
    pub fn format_elem(&self, x: Elem) -> String {
        Word::from_exponents(&self.exponents(x)).to_string()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.ngens()).all(|j| (0..j).all(|i| self.commutator(self.generator(j), self.generator(i)) == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn heisenberg(p: u32) -> PcGroup {
        let mut pres = Presentation::trivial_relations("heis", p, 3);
        pres.set_commutator(1, 0, vec![0, 0, 1]);
        PcGroup::new(pres).unwrap()
    }

    fn cyclic9() -> PcGroup {
        let mut pres = Presentation::trivial_relations("C9", 3, 2);
        pres.set_power(0, vec![0, 1]);
        PcGroup::new(pres).unwrap()
    }

    /// Permutation representation of the Heisenberg group of order 27: right
    /// regular action on (Z/3)^3 with (a, b, c) * (x, y, z) = (a+x, b+y, c+z+b x).
    fn heis_perm_mul(u: [u32; 3], v: [u32; 3]) -> [u32; 3] {
        [(u[0] + v[0]) % 3, (u[1] + v[1]) % 3, (u[2] + v[2] + u[1] * v[0]) % 3]
    }

    #[test]
    fn collect_heisenberg_examples() {
        let g = heisenberg(3);
        let w = |s: &str| g.collect(&parse_word(s).unwrap()).unwrap();
        assert_eq!(g.format_elem(w("g2g1")), "g1g2g3");
        assert_eq!(w("g1^3"), g.identity());
        assert_eq!(g.format_elem(w("g2g1^2")), "g1^2g2g3^2");
    }

    #[test]
    fn heisenberg_matches_matrix_model() {
        // the map g1 -> (1,0,0), g2 -> (0,1,0), g3 -> (0,0,1) identifies the
        // presentation with the matrix model; normal words must multiply the same
        let g = heisenberg(3);
        let to_model = |x: Elem| {
            let e = g.exponents(x);
            let mut acc = [0u32; 3];
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    let mut gen = [0u32; 3];
                    gen[i] = 1;
                    acc = heis_perm_mul(acc, gen);
                }
            }
            acc
        };
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(to_model(g.mul(x, y)), heis_perm_mul(to_model(x), to_model(y)));
            }
        }
    }

    #[test]
    fn cyclic_nine() {
        let g = cyclic9();
        assert_eq!(g.order(), 9);
        assert_eq!(g.element_order(g.generator(0)), 9);
        assert!(g.is_abelian());
        assert!(g.is_associative());
    }

    #[test]
    fn inverses_and_orders() {
        let g = heisenberg(5);
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
        }
        assert!(g.is_associative());
        assert!(!g.is_abelian());
    }

    #[test]
    fn detects_inconsistency() {
        // g1^3 = g2 with [g2, g1] = g3 forces g2 central; inconsistent
        let mut pres = Presentation::trivial_relations("bad", 3, 3);
        pres.set_power(0, vec![0, 1, 0]);
        pres.set_commutator(1, 0, vec![0, 0, 1]);
        assert!(matches!(PcGroup::new(pres), Err(PcGroupError::Inconsistent { .. })));
    }

    #[test]
    fn rejects_malformed_relations() {
        let mut pres = Presentation::trivial_relations("bad", 3, 2);
        pres.set_power(1, vec![1, 0]);
        assert!(matches!(PcGroup::new(pres), Err(PcGroupError::BadRelation { .. })));
        let pres = Presentation::trivial_relations("bad", 4, 2);
        assert!(matches!(PcGroup::new(pres), Err(PcGroupError::NotPrime(4))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn collect_is_homomorphic(u in proptest::collection::vec((0usize..3, -4i64..5), 0..8),
                                       v in proptest::collection::vec((0usize..3, -4i64..5), 0..8)) {
                let g = heisenberg(3);
                let wu = Word::new(u.clone());
                let wv = Word::new(v.clone());
                let mut uv = u;
                uv.extend(v);
                let lhs = g.collect(&Word::new(uv)).unwrap();
                let rhs = g.mul(g.collect(&wu).unwrap(), g.collect(&wv).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

//! Finite abelian groups in invariant-factor form, their subgroups and
//! homomorphisms, all reduced to exact integer linear algebra.
//!
//! A group `Z/d_1 x ... x Z/d_k` (with `d_1 | d_2 | ... | d_k`, every `d_i > 1`)
//! is an [`AbelianGroup`]. Elements are coordinate vectors. Subgroups are
//! stored as the Hermite normal form of the lattice they pull back to in
//! `Z^k`, which makes subgroup equality a representation comparison.

mod builder;
mod hom;
mod matrix;
mod subgroup;

use thiserror::Error;

pub use builder::{AbelianStructure, FiniteAbelianBuilder};
pub use hom::Homomorphism;
pub use matrix::{hermite_normal_form, smith_normal_form, IntMatrix, SmithForm};
pub use subgroup::Subgroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbGroupError {
    #[error("integer overflow in exact linear algebra")]
    Overflow,
    #[error("invariant factors {0:?} do not form a divisibility chain of integers > 1")]
    BadInvariantFactors(Vec<i64>),
    #[error("element has {got} coordinates, group has {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("column {column} of the matrix does not respect the order {order} of its source generator")]
    NotAHomomorphism { column: usize, order: i64 },
    #[error("matrix shape {rows}x{cols} does not fit {target_rank}x{source_rank}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        target_rank: usize,
        source_rank: usize,
    },
    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,
}

/// Coordinate vector of an element of an [`AbelianGroup`].
pub type GroupElement = Vec<i64>;

/// `Z/d_1 x ... x Z/d_k` with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<i64>,
}

impl AbelianGroup {
    pub fn new(invariant_factors: Vec<i64>) -> Result<Self, AbGroupError> {
        let ok = invariant_factors.iter().all(|&d| d > 1)
            && invariant_factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !ok {
            return Err(AbGroupError::BadInvariantFactors(invariant_factors));
        }
        Ok(AbelianGroup {
            factors: invariant_factors,
        })
    }

    /// Normalizes any list of positive cyclic orders (in any order, units
    /// allowed) to invariant-factor form.
    ///
    /// Note the coordinates of the result are *not* those of the input list;
    /// use [`AbelianGroup::from_cyclic_orders`] to also get the basis change.
    pub fn from_orders(orders: &[i64]) -> Result<Self, AbGroupError> {
        Ok(Self::from_cyclic_orders(orders)?.0)
    }

    /// Like [`from_orders`](Self::from_orders), also returning the isomorphism
    /// `Z/o_1 x ... x Z/o_n -> result` as a matrix (columns are images of the
    /// standard generators).
    pub fn from_cyclic_orders(orders: &[i64]) -> Result<(Self, IntMatrix), AbGroupError> {
        let snf = smith_normal_form(&IntMatrix::diagonal(orders))?;
        structure_from_relations(&snf)
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![] }
    }

    pub fn cyclic(n: i64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            Self::new(vec![n]).expect("cyclic order must be positive")
        }
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    /// Number of cyclic factors (the minimal number of generators).
    pub fn ngens(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> i64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> i64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// p-rank: the number of invariant factors divisible by `p`.
    pub fn rank(&self, p: i64) -> usize {
        self.factors.iter().filter(|&&d| d % p == 0).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn identity(&self) -> GroupElement {
        vec![0; self.ngens()]
    }

    /// i-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut e = self.identity();
        e[i] = 1;
        e
    }

    pub fn normalize(&self, x: &[i64]) -> GroupElement {
        assert_eq!(x.len(), self.ngens(), "element arity mismatch");
        x.iter()
            .zip(&self.factors)
            .map(|(&c, &d)| c.rem_euclid(d))
            .collect()
    }

    pub fn check(&self, x: &[i64]) -> Result<(), AbGroupError> {
        if x.len() != self.ngens() {
            return Err(AbGroupError::ArityMismatch {
                expected: self.ngens(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> GroupElement {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.normalize(&s)
    }

    pub fn neg(&self, x: &[i64]) -> GroupElement {
        let s: Vec<i64> = x.iter().map(|a| -a).collect();
        self.normalize(&s)
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> GroupElement {
        let s: Vec<i64> = x
            .iter()
            .zip(&self.factors)
            .map(|(&a, &d)| ((a as i128 * k as i128).rem_euclid(d as i128)) as i64)
            .collect();
        s
    }

    pub fn is_identity(&self, x: &[i64]) -> bool {
        x.iter().zip(&self.factors).all(|(&a, &d)| a.rem_euclid(d) == 0)
    }

    /// Order of an element: lcm over coordinates of `d_i / gcd(x_i, d_i)`.
    pub fn element_order(&self, x: &[i64]) -> i64 {
        use num_integer::Integer;
        x.iter().zip(&self.factors).fold(1i64, |acc, (&a, &d)| {
            let o = d / a.rem_euclid(d).gcd(&d);
            acc.lcm(&o)
        })
    }

    /// All elements in mixed-radix order (last coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let n = self.order();
        (0..n).map(move |idx| self.element_at(idx))
    }

    /// Mixed-radix index of a normalized element; inverse of `element_at`.
    pub fn index_of(&self, x: &[i64]) -> i64 {
        let x = self.normalize(x);
        x.iter()
            .zip(&self.factors)
            .fold(0i64, |acc, (&a, &d)| acc * d + a)
    }

    pub fn element_at(&self, mut idx: i64) -> GroupElement {
        let mut out = vec![0; self.ngens()];
        for i in (0..self.ngens()).rev() {
            out[i] = idx % self.factors[i];
            idx /= self.factors[i];
        }
        out
    }

    /// `p^k`-th power subgroup as a subgroup object (`A^(p^k)`, written
    /// additively as `p^k A`).
    pub fn multiples(&self, k: i64) -> Subgroup {
        let gens: Vec<GroupElement> = (0..self.ngens())
            .map(|i| self.scale(k, &self.generator(i)))
            .collect();
        Subgroup::generated(self, &gens).expect("multiples subgroup")
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self)
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("C{d}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// Reads off `Z^n / rowspace(R)` from the Smith form of a relation matrix `R`
/// with `n` columns: the nontrivial diagonal entries are the invariant
/// factors and `x -> x * V` (restricted to those columns) is the projection.
///
/// Returns the group and the projection matrix (columns = images of the
/// standard generators of `Z^n`).
pub(crate) fn structure_from_relations(
    snf: &SmithForm,
) -> Result<(AbelianGroup, IntMatrix), AbGroupError> {
    let n = snf.v.cols();
    let diag = snf.diagonal();
    let mut keep = Vec::new();
    let mut factors = Vec::new();
    for j in 0..n {
        let d = diag.get(j).copied().unwrap_or(0);
        if d == 0 {
            panic!("relation lattice is not of full rank: infinite quotient");
        }
        if d != 1 {
            keep.push(j);
            factors.push(d);
        }
    }
    let group = AbelianGroup::new(factors.clone())?;
    let mut proj = IntMatrix::zeros(keep.len(), n);
    for (row, &j) in keep.iter().enumerate() {
        for i in 0..n {
            proj[(row, i)] = snf.v[(i, j)].rem_euclid(factors[row]);
        }
    }
    Ok((group, proj))
}

use std::collections::HashSet;

use super::matrix::{hermite_normal_form, smith_normal_form, IntMatrix};
use super::{structure_from_relations, AbGroupError, AbelianGroup, GroupElement, Homomorphism};

/// Subgroup of an [`AbelianGroup`], kept as the Hermite basis of its
/// preimage lattice in `Z^k`. Equality of subgroups is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: AbelianGroup,
    basis: IntMatrix,
}

impl Subgroup {
    pub fn generated(ambient: &AbelianGroup, gens: &[GroupElement]) -> Result<Self, AbGroupError> {
        let k = ambient.ngens();
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(gens.len() + k);
        for g in gens {
            ambient.check(g)?;
            rows.push(ambient.normalize(g));
        }
        for (i, &d) in ambient.invariant_factors().iter().enumerate() {
            let mut r = vec![0; k];
            r[i] = d;
            rows.push(r);
        }
        let basis = hermite_normal_form(&IntMatrix::from_rows(&rows, k))?;
        debug_assert_eq!(basis.rows(), k);
        Ok(Subgroup {
            ambient: ambient.clone(),
            basis,
        })
    }

    pub fn whole(ambient: &AbelianGroup) -> Self {
        Subgroup {
            ambient: ambient.clone(),
            basis: IntMatrix::identity(ambient.ngens()),
        }
    }

    pub fn trivial(ambient: &AbelianGroup) -> Self {
        Subgroup {
            ambient: ambient.clone(),
            basis: IntMatrix::diagonal(ambient.invariant_factors()),
        }
    }

    pub fn ambient(&self) -> &AbelianGroup {
        &self.ambient
    }

    /// The canonical Hermite basis (rows), including the ambient relations.
    pub fn echelon_basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn order(&self) -> i64 {
        let index: i64 = (0..self.basis.rows()).map(|i| self.basis[(i, i)]).product();
        self.ambient.order() / index
    }

    pub fn index(&self) -> i64 {
        self.ambient.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    /// Nonzero rows of the Hermite basis, reduced into the ambient group.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.basis.rows())
            .map(|r| self.ambient.normalize(self.basis.row(r)))
            .filter(|g| !self.ambient.is_identity(g))
            .collect()
    }

    /// Coefficients of `x` in the Hermite basis, if `x` lies in the lattice.
    fn coefficients(&self, x: &[i64]) -> Option<Vec<i64>> {
        let k = self.ambient.ngens();
        let mut rest: Vec<i128> = x.iter().map(|&c| c as i128).collect();
        let mut coeffs = vec![0i64; k];
        for c in 0..k {
            let pivot = self.basis[(c, c)] as i128;
            if rest[c] % pivot != 0 {
                return None;
            }
            let q = rest[c] / pivot;
            coeffs[c] = q as i64;
            for j in c..k {
                rest[j] -= q * self.basis[(c, j)] as i128;
            }
        }
        Some(coeffs)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.coefficients(&self.ambient.normalize(x)).is_some()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup, AbGroupError> {
        if self.ambient != other.ambient {
            return Err(AbGroupError::AmbientMismatch);
        }
        let mut gens = self.generators();
        gens.extend(other.generators());
        Subgroup::generated(&self.ambient, &gens)
    }

    /// Intersection of the two preimage lattices, via the left kernel of the
    /// stacked bases.
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup, AbGroupError> {
        if self.ambient != other.ambient {
            return Err(AbGroupError::AmbientMismatch);
        }
        let k = self.ambient.ngens();
        let mut rows = Vec::with_capacity(2 * k);
        for r in 0..k {
            rows.push(self.basis.row(r).to_vec());
        }
        for r in 0..k {
            rows.push(other.basis.row(r).to_vec());
        }
        let stacked = IntMatrix::from_rows(&rows, k);
        let snf = smith_normal_form(&stacked)?;
        let rank = snf.rank();
        let mut gens = Vec::new();
        for r in rank..2 * k {
            // r-th row of U kills the stack; its first half combines our basis
            let mut x = vec![0i128; k];
            for i in 0..k {
                let c = snf.u[(r, i)] as i128;
                for j in 0..k {
                    x[j] += c * self.basis[(i, j)] as i128;
                }
            }
            let x: Vec<i64> = x
                .iter()
                .zip(self.ambient.invariant_factors())
                .map(|(&v, &d)| v.rem_euclid(d as i128) as i64)
                .collect();
            gens.push(x);
        }
        Subgroup::generated(&self.ambient, &gens)
    }

    /// All elements, by closing the generator set. Intended for small groups.
    pub fn elements(&self) -> Vec<GroupElement> {
        let a = &self.ambient;
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut out = vec![a.identity()];
        seen.insert(a.identity());
        let gens = self.generators();
        let mut i = 0;
        while i < out.len() {
            let x = out[i].clone();
            for g in &gens {
                let y = a.add(&x, g);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    /// Isomorphism type of the subgroup together with its inclusion into the
    /// ambient group.
    pub fn structure(&self) -> Result<(AbelianGroup, Homomorphism), AbGroupError> {
        let k = self.ambient.ngens();
        // ambient relations d_i e_i expressed in the Hermite basis
        let mut rel = Vec::with_capacity(k);
        for (i, &d) in self.ambient.invariant_factors().iter().enumerate() {
            let mut v = vec![0; k];
            v[i] = d;
            rel.push(self.coefficients(&v).expect("ambient relations lie in every preimage lattice"));
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(&rel, k))?;
        let (group, _) = structure_from_relations(&snf)?;
        let diag = snf.diagonal();
        let mut images = Vec::new();
        for j in (0..k).filter(|&j| diag[j] != 1) {
            let mut x = vec![0i128; k];
            for i in 0..k {
                let c = snf.v_inv[(j, i)] as i128;
                for t in 0..k {
                    x[t] += c * self.basis[(i, t)] as i128;
                }
            }
            let x: Vec<i64> = x
                .iter()
                .zip(self.ambient.invariant_factors())
                .map(|(&v, &d)| v.rem_euclid(d as i128) as i64)
                .collect();
            images.push(x);
        }
        let inclusion = Homomorphism::from_images(&group, &self.ambient, &images)?;
        Ok((group, inclusion))
    }

    /// `A / S` together with the projection `A -> A / S`.
    pub fn quotient(&self) -> Result<(AbelianGroup, Homomorphism), AbGroupError> {
        let snf = smith_normal_form(&self.basis)?;
        let (group, proj) = structure_from_relations(&snf)?;
        let hom = Homomorphism::new(&self.ambient, &group, proj)?;
        Ok((group, hom))
    }
}

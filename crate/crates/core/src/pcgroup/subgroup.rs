use crate::abgroup::{
    smith_normal_form, AbGroupError, AbelianGroup, FiniteAbelianBuilder, GroupElement, IntMatrix,
    Subgroup,
};

use super::{Elem, PcGroup, PcGroupError, Word};

/// Subgroup of a [`PcGroup`] as an explicit element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcSubgroup {
    members: Vec<bool>,
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

impl PcSubgroup {
    /// Closure of `gens` under multiplication.
    pub fn generated(g: &PcGroup, gens: &[Elem]) -> Self {
        let mut members = vec![false; g.order() as usize];
        members[0] = true;
        let mut elements = vec![0];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &s in gens {
                let y = g.mul(x, s);
                if !members[y as usize] {
                    members[y as usize] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        PcSubgroup {
            members,
            elements,
            generators: gens.to_vec(),
        }
    }

    /// Subgroup from a membership predicate; fails if the set is not closed.
    pub fn from_predicate(g: &PcGroup, pred: impl Fn(Elem) -> bool) -> Result<Self, PcGroupError> {
        let elements: Vec<Elem> = g.elements().filter(|&x| pred(x)).collect();
        let gens = small_generating_set(g, &elements);
        let s = PcSubgroup::generated(g, &gens);
        if s.elements != elements {
            return Err(PcGroupError::NotASubgroup(format!("{} elements not closed", elements.len())));
        }
        Ok(s)
    }

    pub fn whole(g: &PcGroup) -> Self {
        let gens: Vec<Elem> = (0..g.ngens()).map(|i| g.generator(i)).collect();
        PcSubgroup::generated(g, &gens)
    }

    pub fn trivial(g: &PcGroup) -> Self {
        PcSubgroup::generated(g, &[])
    }

    /// Validates that the generated set is a subgroup of the stated index.
    pub fn from_words(g: &PcGroup, words: &[Word]) -> Result<Self, PcGroupError> {
        let gens = words.iter().map(|w| g.collect(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(PcSubgroup::generated(g, &gens))
    }

    pub fn order(&self) -> u32 {
        self.elements.len() as u32
    }

    pub fn index_in(&self, g: &PcGroup) -> u32 {
        g.order() / self.order()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members[x as usize]
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_words(&self, g: &PcGroup) -> Vec<String> {
        self.generators.iter().map(|&x| g.format_elem(x)).collect()
    }

    pub fn is_subgroup_of(&self, other: &PcSubgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal_in(&self, g: &PcGroup) -> bool {
        (0..g.ngens()).all(|i| {
            let t = g.generator(i);
            self.generators.iter().all(|&h| self.contains(g.conjugate(h, t)))
        })
    }

    /// Subgroup generated by all commutators of pairs of elements.
    pub fn derived(&self, g: &PcGroup) -> PcSubgroup {
        let mut gens = Vec::new();
        let mut seen = vec![false; g.order() as usize];
        for &x in &self.elements {
            for &y in &self.elements {
                let c = g.commutator(x, y);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    gens.push(c);
                }
            }
        }
        let closure = PcSubgroup::generated(g, &gens);
        let small = small_generating_set(g, &closure.elements);
        PcSubgroup::generated(g, &small)
    }

    /// `H / H'` with a discrete-log table on `H`.
    pub fn abelianization(&self, g: &PcGroup) -> Result<SubgroupAbelianization, PcGroupError> {
        let derived = self.derived(g);
        // coset representative = smallest element index of the coset x H'
        let mut rep = vec![u32::MAX; g.order() as usize];
        for &x in &self.elements {
            if rep[x as usize] != u32::MAX {
                continue;
            }
            for &k in derived.elements() {
                rep[g.mul(x, k) as usize] = x;
            }
        }
        let reps: Vec<Elem> = self.elements.iter().copied().filter(|&x| rep[x as usize] == x).collect();
        let builder = FiniteAbelianBuilder::new(0u32, |a: &Elem, b: &Elem| rep[g.mul(*a, *b) as usize]);
        let structure = builder.build(reps)?;
        let mut log = vec![None; g.order() as usize];
        for &x in &self.elements {
            log[x as usize] = structure.log(&rep[x as usize]).cloned();
        }
        Ok(SubgroupAbelianization {
            group: structure.group.clone(),
            lifts: structure.generators.clone(),
            log,
            derived,
        })
    }
}

/// Greedy generating set: walk the elements in order, keep whatever is not
/// yet generated.
fn small_generating_set(g: &PcGroup, elements: &[Elem]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = PcSubgroup::generated(g, &[]);
    for &x in elements {
        if !span.contains(x) {
            gens.push(x);
            span = PcSubgroup::generated(g, &gens);
        }
    }
    gens
}

/// `H / H'` for a subgroup `H`, with the coordinates of every element of `H`.
#[derive(Clone, Debug)]
pub struct SubgroupAbelianization {
    pub group: AbelianGroup,
    /// Elements of `H` mapping to the standard generators.
    pub lifts: Vec<Elem>,
    log: Vec<Option<GroupElement>>,
    pub derived: PcSubgroup,
}

impl SubgroupAbelianization {
    /// Image of `x` in `H / H'`; `None` if `x` is not in `H`.
    pub fn project(&self, x: Elem) -> Option<&GroupElement> {
        self.log[x as usize].as_ref()
    }
}

/// `G / G'` read off the presentation: the relation lattice is spanned by
/// `p e_i - w_i` and the exponent vectors of the commutator words.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: AbelianGroup,
    /// Column `i` = image of `g_i`.
    projection: IntMatrix,
    /// Elements of `G` mapping to the standard generators.
    pub lifts: Vec<Elem>,
}

impl Abelianization {
    pub fn of(g: &PcGroup) -> Result<Self, PcGroupError> {
        let n = g.ngens();
        let p = g.prime() as i64;
        let pres = g.presentation();
        let mut rows = Vec::new();
        for i in 0..n {
            let mut r: Vec<i64> = pres.power[i].iter().map(|&e| -(e as i64)).collect();
            r[i] += p;
            rows.push(r);
        }
        for j in 0..n {
            for i in 0..j {
                rows.push(pres.commutator[j][i].iter().map(|&e| e as i64).collect());
            }
        }
        if n == 0 {
            return Ok(Abelianization {
                group: AbelianGroup::trivial(),
                projection: IntMatrix::zeros(0, 0),
                lifts: vec![],
            });
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows, n))?;
        let (group, projection) = crate::abgroup::structure_from_relations(&snf)?;
        let diag = snf.diagonal();
        let lifts = (0..n)
            .filter(|&j| diag[j] != 1)
            .map(|j| {
                (0..n).fold(0, |acc, i| {
                    let e = snf.v_inv[(j, i)].rem_euclid(g.order() as i64);
                    g.mul(acc, g.pow(g.generator(i), e))
                })
            })
            .collect();
        Ok(Abelianization {
            group,
            projection,
            lifts,
        })
    }

    pub fn project(&self, g: &PcGroup, x: Elem) -> GroupElement {
        let e: Vec<i64> = g.exponents(x).into_iter().map(|v| v as i64).collect();
        let y = self.projection.apply(&e).expect("small exponents");
        self.group.normalize(&y)
    }

    /// Image of a subgroup of `G` in `G / G'`.
    pub fn image_of(&self, g: &PcGroup, h: &PcSubgroup) -> Result<Subgroup, AbGroupError> {
        let gens: Vec<GroupElement> = h.generators().iter().map(|&x| self.project(g, x)).collect();
        Subgroup::generated(&self.group, &gens)
    }
}

/// Normalized vectors of `F_p^r` (first nonzero coordinate 1), lexicographic.
pub(crate) fn normalized_vectors(p: u32, r: usize) -> Vec<Vec<u32>> {
    let total = (p as u64).pow(r as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut v = vec![0u32; r];
        let mut t = idx;
        for i in (0..r).rev() {
            v[i] = (t % p as u64) as u32;
            t /= p as u64;
        }
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

impl PcGroup {
    pub fn derived_subgroup(&self) -> PcSubgroup {
        PcSubgroup::whole(self).derived(self)
    }

    pub fn abelianization(&self) -> Result<Abelianization, PcGroupError> {
        Abelianization::of(self)
    }

    /// The index-p subgroups containing `G'`, i.e. the hyperplanes of
    /// `G / G' G^p = F_p^r`.
    ///
    /// Ordering: for `r = 2` each hyperplane is a line and the lines are
    /// sorted by their normalized direction vector; otherwise hyperplanes
    /// are sorted by their normalized defining functional.
    pub fn subgroups_index_p_above_derived(&self) -> Result<Vec<PcSubgroup>, PcGroupError> {
        let ab = self.abelianization()?;
        let p = self.prime();
        let r = ab.group.ngens();
        let frattini: Vec<Vec<u32>> = self
            .elements()
            .map(|x| ab.project(self, x).iter().map(|&c| (c % p as i64) as u32).collect())
            .collect();
        let mut keyed: Vec<(Vec<u32>, Vec<u32>)> = normalized_vectors(p, r)
            .into_iter()
            .map(|phi| {
                let key = if r == 2 {
                    // direction of the line phi . v = 0, normalized
                    let dir = [p - phi[1], phi[0]].map(|c| c % p);
                    normalize_vec(&dir, p)
                } else {
                    phi.clone()
                };
                (key, phi)
            })
            .collect();
        keyed.sort();
        let mut out = Vec::new();
        for (_, phi) in keyed {
            let h = PcSubgroup::from_predicate(self, |x| {
                let v = &frattini[x as usize];
                v.iter().zip(&phi).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64 == 0
            })?;
            out.push(h);
        }
        Ok(out)
    }
}

fn normalize_vec(v: &[u32], p: u32) -> Vec<u32> {
    let Some(&lead) = v.iter().find(|&&c| c != 0) else {
        return v.to_vec();
    };
    let inv = (1..p).find(|&k| (k as u64 * lead as u64) % p as u64 == 1).unwrap();
    v.iter().map(|&c| ((c as u64 * inv as u64) % p as u64) as u32).collect()
}

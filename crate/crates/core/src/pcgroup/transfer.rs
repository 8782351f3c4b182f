use rand::seq::SliceRandom;
use rand::Rng;

use crate::abgroup::{GroupElement, Homomorphism, Subgroup};

use super::{Abelianization, Elem, PcGroup, PcGroupError, PcSubgroup, SubgroupAbelianization};

/// Right transversal: one representative per right coset `H t`.
#[derive(Clone, Debug)]
pub struct Transversal {
    reps: Vec<Elem>,
    /// `coset[x]` = position in `reps` of the coset containing `x`
    coset: Vec<u32>,
}

impl Transversal {
    /// Checks that `reps` meets every right coset exactly once.
    pub fn from_reps(g: &PcGroup, h: &PcSubgroup, reps: Vec<Elem>) -> Result<Self, PcGroupError> {
        let mut coset = vec![u32::MAX; g.order() as usize];
        for (i, &t) in reps.iter().enumerate() {
            for &x in h.elements() {
                let y = g.mul(x, t) as usize;
                if coset[y] != u32::MAX {
                    return Err(PcGroupError::BadTransversal);
                }
                coset[y] = i as u32;
            }
        }
        if coset.contains(&u32::MAX) {
            return Err(PcGroupError::BadTransversal);
        }
        Ok(Transversal { reps, coset })
    }

    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn coset_of(&self, x: Elem) -> usize {
        self.coset[x as usize] as usize
    }
}

/// Schreier transversal: breadth-first search over right cosets, extending
/// representatives by the pc generators in order. Representatives are
/// closed under taking prefixes.
pub fn schreier_transversal(g: &PcGroup, h: &PcSubgroup) -> Transversal {
    let mut coset = vec![u32::MAX; g.order() as usize];
    let mut reps = vec![g.identity()];
    for &x in h.elements() {
        coset[x as usize] = 0;
    }
    let mut i = 0;
    while i < reps.len() {
        let t = reps[i];
        for k in 0..g.ngens() {
            let y = g.mul_generator(t, k);
            if coset[y as usize] == u32::MAX {
                let idx = reps.len() as u32;
                for &x in h.elements() {
                    coset[g.mul(x, y) as usize] = idx;
                }
                reps.push(y);
            }
        }
        i += 1;
    }
    Transversal { reps, coset }
}

/// A transversal with a uniformly random representative in every coset.
pub fn random_transversal<R: Rng + ?Sized>(g: &PcGroup, h: &PcSubgroup, rng: &mut R) -> Transversal {
    let base = schreier_transversal(g, h);
    let mut reps = base.reps.clone();
    for r in reps.iter_mut() {
        let x = *h.elements().choose(rng).expect("subgroups are nonempty");
        *r = g.mul(x, *r);
    }
    Transversal {
        reps,
        coset: base.coset,
    }
}

/// The transfer `G/G' -> H/H'` as a homomorphism of abelian groups.
#[derive(Clone, Debug)]
pub struct TransferMap {
    pub source: Abelianization,
    pub target: SubgroupAbelianization,
    pub hom: Homomorphism,
    pub subgroup: PcSubgroup,
}

impl TransferMap {
    /// Kernel as a subgroup of `G/G'`.
    pub fn kernel(&self) -> Result<Subgroup, PcGroupError> {
        Ok(self.hom.kernel()?)
    }

    /// The inclusion-induced map `H/H' -> G/G'`.
    pub fn inclusion(&self, g: &PcGroup) -> Result<Homomorphism, PcGroupError> {
        let images: Vec<GroupElement> = self.target.lifts.iter().map(|&x| self.source.project(g, x)).collect();
        Ok(Homomorphism::from_images(&self.target.group, &self.source.group, &images)?)
    }
}

/// `Ver(x) = sum_i log(t_i x t_{s(i)}^-1)` in `H/H'`, where `t_i x` lies in
/// the coset of `t_{s(i)}`.
pub(crate) fn transfer_element(
    g: &PcGroup,
    tr: &Transversal,
    ab: &SubgroupAbelianization,
    x: Elem,
) -> GroupElement {
    let mut acc = ab.group.identity();
    for &t in &tr.reps {
        let y = g.mul(t, x);
        let s = tr.reps[tr.coset_of(y)];
        let hx = g.mul(y, g.inv(s));
        let v = ab.project(hx).expect("transversal products lie in the subgroup");
        acc = ab.group.add(&acc, v);
    }
    acc
}

pub fn transfer_with_transversal(
    g: &PcGroup,
    h: &PcSubgroup,
    tr: &Transversal,
) -> Result<TransferMap, PcGroupError> {
    if tr.reps.len() as u32 != h.index_in(g) {
        return Err(PcGroupError::BadTransversal);
    }
    let source = g.abelianization()?;
    let target = h.abelianization(g)?;
    let images: Vec<GroupElement> = source.lifts.iter().map(|&x| transfer_element(g, tr, &target, x)).collect();
    let hom = Homomorphism::from_images(&source.group, &target.group, &images)?;
    Ok(TransferMap {
        source,
        target,
        hom,
        subgroup: h.clone(),
    })
}

/// Transfer computed with the Schreier transversal.
pub fn transfer(g: &PcGroup, h: &PcSubgroup) -> Result<TransferMap, PcGroupError> {
    transfer_with_transversal(g, h, &schreier_transversal(g, h))
}

/// Transfer kernel of the `index`-th subgroup of index p above `G'`.
#[derive(Clone, Debug)]
pub struct KernelEntry {
    /// 1-based position in the canonical subgroup order.
    pub index: usize,
    pub subgroup: PcSubgroup,
    pub kernel: Subgroup,
    /// 0 for the full group, `j` when the kernel is the image of the `j`-th
    /// subgroup, `None` otherwise.
    pub code: Option<usize>,
}

/// Transfer kernels of all index-p subgroups above `G'`.
#[derive(Clone, Debug)]
pub struct CapitulationType {
    pub entries: Vec<KernelEntry>,
}

impl CapitulationType {
    /// The code vector, if every kernel has a code.
    pub fn pattern(&self) -> Option<Vec<usize>> {
        self.entries.iter().map(|e| e.code).collect()
    }

    pub fn kernel_orders(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.kernel.order()).collect()
    }
}

pub fn capitulation_type(g: &PcGroup) -> Result<CapitulationType, PcGroupError> {
    let subs = g.subgroups_index_p_above_derived()?;
    let ab = g.abelianization()?;
    let images = subs.iter().map(|h| ab.image_of(g, h)).collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::with_capacity(subs.len());
    for (i, h) in subs.into_iter().enumerate() {
        let kernel = transfer(g, &h)?.kernel()?;
        let code = if kernel.is_whole() {
            Some(0)
        } else {
            images.iter().position(|s| *s == kernel).map(|j| j + 1)
        };
        entries.push(KernelEntry {
            index: i + 1,
            subgroup: h,
            kernel,
            code,
        });
    }
    Ok(CapitulationType { entries })
}

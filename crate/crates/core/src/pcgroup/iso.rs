use std::collections::BTreeMap;

use super::{Elem, PcGroup, PcSubgroup};

/// Isomorphism invariants cheap enough to compare before a search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupInvariants {
    pub order: u32,
    pub abelianization: Vec<i64>,
    pub derived_order: u32,
    pub center_order: u32,
    pub frattini_order: u32,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<u32, u32>,
    /// orders of the terms of the lower central series
    pub lower_central: Vec<u32>,
}

impl GroupInvariants {
    pub fn of(g: &PcGroup) -> Self {
        let mut order_histogram = BTreeMap::new();
        for x in g.elements() {
            *order_histogram.entry(g.element_order(x)).or_insert(0) += 1;
        }
        let center_order = g
            .elements()
            .filter(|&z| (0..g.ngens()).all(|i| g.mul(z, g.generator(i)) == g.mul(g.generator(i), z)))
            .count() as u32;
        let mut lower_central = vec![g.order()];
        let mut term = PcSubgroup::whole(g);
        while term.order() > 1 {
            let next = commutator_with_group(g, &term);
            if next.order() == term.order() {
                break;
            }
            lower_central.push(next.order());
            term = next;
        }
        GroupInvariants {
            order: g.order(),
            abelianization: g
                .abelianization()
                .map(|a| a.group.invariant_factors().to_vec())
                .unwrap_or_default(),
            derived_order: g.derived_subgroup().order(),
            center_order,
            frattini_order: frattini(g).order(),
            order_histogram,
            lower_central,
        }
    }
}

/// `[N, G]` for a normal subgroup `N`.
fn commutator_with_group(g: &PcGroup, n: &PcSubgroup) -> PcSubgroup {
    let mut gens = Vec::new();
    for &x in n.generators() {
        for i in 0..g.ngens() {
            gens.push(g.commutator(x, g.generator(i)));
        }
    }
    // close under conjugation: [N, G] is normal, generated as a normal subgroup
    let mut s = PcSubgroup::generated(g, &gens);
    loop {
        let extra: Vec<Elem> = s
            .generators()
            .iter()
            .flat_map(|&x| (0..g.ngens()).map(move |i| (x, i)))
            .map(|(x, i)| g.conjugate(x, g.generator(i)))
            .filter(|&y| !s.contains(y))
            .collect();
        if extra.is_empty() {
            return s;
        }
        gens.extend(extra);
        s = PcSubgroup::generated(g, &gens);
    }
}

/// Frattini subgroup `G' G^p`.
pub(crate) fn frattini(g: &PcGroup) -> PcSubgroup {
    let p = g.prime() as i64;
    let mut gens: Vec<Elem> = g.derived_subgroup().generators().to_vec();
    gens.extend(g.elements().map(|x| g.pow(x, p)));
    gens.sort_unstable();
    gens.dedup();
    PcSubgroup::generated(g, &gens)
}

/// A minimal generating set: pc generators independent modulo the Frattini
/// subgroup.
pub(crate) fn minimal_generators(g: &PcGroup) -> Vec<Elem> {
    let phi = frattini(g);
    let mut chosen = Vec::new();
    let mut span = phi.clone();
    for i in 0..g.ngens() {
        let x = g.generator(i);
        if !span.contains(x) {
            chosen.push(x);
            let mut gens = phi.generators().to_vec();
            gens.extend(&chosen);
            span = PcSubgroup::generated(g, &gens);
        }
    }
    chosen
}

/// Decides isomorphism by comparing invariants, then searching for images
/// of a minimal generating set that extend to a bijective homomorphism.
pub fn is_isomorphic(a: &PcGroup, b: &PcGroup) -> bool {
    if a.prime() != b.prime() || a.order() != b.order() {
        return false;
    }
    if GroupInvariants::of(a) != GroupInvariants::of(b) {
        return false;
    }
    find_isomorphism(a, b).is_some()
}

/// Images of the minimal generators of `a` under some isomorphism `a -> b`.
/// Does not compare invariants first.
pub fn find_isomorphism(a: &PcGroup, b: &PcGroup) -> Option<Vec<Elem>> {
    let gens = minimal_generators(a);
    let phi_b = frattini(b);
    // Cayley graph of `a` on the chosen generators, as a BFS tree plus edges
    let mut parent: Vec<Option<(Elem, usize)>> = vec![None; a.order() as usize];
    let mut order = vec![a.identity()];
    let mut seen = vec![false; a.order() as usize];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (k, &s) in gens.iter().enumerate() {
            let y = a.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = Some((x, k));
                order.push(y);
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len() as u32, a.order());
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let o = a.element_order(s);
            b.elements()
                .filter(|&y| !phi_b.contains(y) && b.element_order(y) == o)
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    let mut images = vec![0; gens.len()];
    let mut map = vec![0 as Elem; a.order() as usize];
    'search: loop {
        if candidates.iter().any(|c| c.is_empty()) {
            return None;
        }
        for (k, c) in choice.iter().enumerate() {
            images[k] = candidates[k][*c];
        }
        if extends(a, b, &gens, &images, &order, &parent, &mut map) {
            return Some(images);
        }
        for k in (0..gens.len()).rev() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'search;
            }
            choice[k] = 0;
        }
        return None;
    }
}

fn extends(
    a: &PcGroup,
    b: &PcGroup,
    gens: &[Elem],
    images: &[Elem],
    bfs: &[Elem],
    parent: &[Option<(Elem, usize)>],
    map: &mut [Elem],
) -> bool {
    let mut hit = vec![false; b.order() as usize];
    for &x in bfs {
        let y = match parent[x as usize] {
            None => b.identity(),
            Some((q, k)) => b.mul(map[q as usize], images[k]),
        };
        if hit[y as usize] {
            return false;
        }
        hit[y as usize] = true;
        map[x as usize] = y;
    }
    // every Cayley edge, not only the tree edges, must be respected
    bfs.iter().all(|&x| {
        gens.iter()
            .zip(images)
            .all(|(&s, &t)| map[a.mul(x, s) as usize] == b.mul(map[x as usize], t))
    })
}

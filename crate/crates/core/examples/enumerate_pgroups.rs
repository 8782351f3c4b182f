//! Regenerates `data/catalog.txt` by exhausting power-commutator
//! presentations and keeping one representative per isomorphism class.
//!
//! ```sh
//! cargo run --release --example enumerate_pgroups > crates/core/data/catalog.txt
//! ```

use std::collections::HashMap;

use capitulation::pcgroup::{
    find_isomorphism, write_catalog, Catalog, GroupInvariants, PcGroup, Presentation,
};

/// A free parameter of a presentation family: a relation whose right-hand
/// side ranges over all normal words in `g_{first}..g_n`.
#[derive(Clone, Copy)]
enum Slot {
    Power(usize),
    Comm(usize, usize),
}

struct Family {
    p: u32,
    n: usize,
    fixed: Presentation,
    slots: Vec<(Slot, usize)>,
}

impl Family {
    /// Every relation free: all groups of order p^n.
    fn full(p: u32, n: usize) -> Self {
        let mut slots = Vec::new();
        for i in 0..n {
            slots.push((Slot::Power(i), i + 1));
        }
        for j in 0..n {
            for i in 0..j {
                slots.push((Slot::Comm(j, i), j + 1));
            }
        }
        Family {
            p,
            n,
            fixed: Presentation::trivial_relations("t", p, n),
            slots,
        }
    }

    fn size(&self) -> u64 {
        self.slots
            .iter()
            .map(|&(_, first)| (self.p as u64).pow((self.n - first) as u32))
            .product()
    }

    fn presentation(&self, mut code: u64) -> Presentation {
        let mut pres = self.fixed.clone();
        for &(slot, first) in &self.slots {
            let mut word = vec![0u32; self.n];
            for w in word.iter_mut().skip(first).rev() {
                *w = (code % self.p as u64) as u32;
                code /= self.p as u64;
            }
            match slot {
                Slot::Power(i) => pres.set_power(i, word),
                Slot::Comm(j, i) => pres.set_commutator(j, i, word),
            }
        }
        pres
    }

    fn classes(&self, keep: impl Fn(&PcGroup) -> bool) -> Vec<PcGroup> {
        let mut buckets: HashMap<GroupInvariants, Vec<PcGroup>> = HashMap::new();
        let mut reps = Vec::new();
        for code in 0..self.size() {
            let Ok(g) = PcGroup::new(self.presentation(code)) else {
                continue;
            };
            if !keep(&g) {
                continue;
            }
            let inv = GroupInvariants::of(&g);
            let bucket = buckets.entry(inv).or_default();
            if bucket.iter().any(|r| find_isomorphism(r, &g).is_some()) {
                continue;
            }
            bucket.push(g.clone());
            reps.push(g);
        }
        reps
    }
}

fn abelian_name(g: &PcGroup) -> String {
    let ab = g.abelianization().expect("abelianization");
    if ab.group.is_trivial() {
        "C1".to_string()
    } else {
        ab.group.to_string()
    }
}

fn rename(g: &PcGroup, name: String) -> Presentation {
    let mut pres = g.presentation().clone();
    pres.name = name;
    pres
}

/// Names nonabelian groups `<prefix>_<k>` in discovery order.
fn named(groups: Vec<PcGroup>, prefix: &str) -> Vec<Presentation> {
    let mut k = 0;
    groups
        .into_iter()
        .map(|g| {
            if g.is_abelian() {
                rename(&g, abelian_name(&g))
            } else {
                k += 1;
                rename(&g, format!("{prefix}_{k}"))
            }
        })
        .collect()
}

fn main() {
    let mut out = Vec::new();

    out.push(Presentation::trivial_relations("C1", 3, 0));
    for n in 1..=4 {
        let groups = Family::full(3, n).classes(|_| true);
        let mut pres = named(groups, &format!("o{}", 3u32.pow(n as u32)));
        if n == 3 {
            // the two extraspecial groups, by exponent
            for pr in pres.iter_mut().filter(|pr| pr.name.starts_with('o')) {
                let g = PcGroup::new(pr.clone()).expect("consistent");
                let exp3 = g.elements().all(|x| g.element_order(x) <= 3);
                pr.name = if exp3 { "heis27" } else { "ext27" }.to_string();
            }
        }
        out.extend(pres);
    }

    for g in Family::full(2, 3).classes(|_| true) {
        let name = if g.is_abelian() {
            abelian_name(&g)
        } else if g.elements().filter(|&x| g.element_order(x) == 2).count() == 1 {
            "Q8".to_string()
        } else {
            "D8".to_string()
        };
        out.push(rename(&g, name));
    }

    for g in Family::full(5, 3).classes(|g| !g.is_abelian()) {
        let exp5 = g.elements().all(|x| g.element_order(x) <= 5);
        let name = if exp5 { "heis125" } else { "ext125" };
        out.push(rename(&g, name.to_string()));
    }

    // metabelian groups of order 243 with abelianization C3 x C3 and a
    // lower central series of maximal length
    let mut fam = Family {
        p: 3,
        n: 5,
        fixed: Presentation::trivial_relations("t", 3, 5),
        slots: vec![
            (Slot::Power(0), 3),
            (Slot::Power(1), 3),
            (Slot::Power(2), 3),
            (Slot::Power(3), 4),
            (Slot::Comm(2, 1), 3),
            (Slot::Comm(3, 1), 4),
        ],
    };
    fam.fixed.set_commutator(1, 0, vec![0, 0, 1, 0, 0]);
    fam.fixed.set_commutator(2, 0, vec![0, 0, 0, 1, 0]);
    fam.fixed.set_commutator(3, 0, vec![0, 0, 0, 0, 1]);
    let selected = fam.classes(|g| {
        let d = g.derived_subgroup();
        let ab = g.abelianization().expect("abelianization");
        ab.group.invariant_factors() == [3, 3] && d.derived(g).order() == 1
    });
    out.extend(named(selected, "o243"));

    let catalog = Catalog { presentations: out };
    println!("# Power-commutator presentations, one block per group.");
    println!("# Generated by examples/enumerate_pgroups.rs.");
    println!();
    print!("{}", write_catalog(&catalog));
}

use std::collections::HashSet;

use crate::abgroup::{AbelianGroup, GroupElement, Homomorphism, Subgroup};

use super::{primitive_idempotents, GModuleError, GroupAlgebraElement};

/// A finite abelian p-group `A` with an action of a finite abelian group
/// `G`, given by one automorphism per invariant-factor generator of `G`.
#[derive(Clone, Debug)]
pub struct GModule {
    module: AbelianGroup,
    acting: AbelianGroup,
    prime: u64,
    generators: Vec<Homomorphism>,
    /// action of every element of `G`, indexed by `G::index_of`
    table: Vec<Homomorphism>,
}

impl GModule {
    pub fn new(
        module: &AbelianGroup,
        acting: &AbelianGroup,
        prime: u64,
        generators: Vec<Homomorphism>,
    ) -> Result<Self, GModuleError> {
        if !crate::quadform::is_prime(prime as i64) {
            return Err(GModuleError::NotPrime(prime));
        }
        if p_part(module.order() as u64, prime) != module.order() as u64 {
            return Err(GModuleError::NotAPGroup(prime));
        }
        if generators.len() != acting.ngens() {
            return Err(GModuleError::BadAction("one map per generator of G".into()));
        }
        for s in &generators {
            if s.source() != module || s.target() != module {
                return Err(GModuleError::BadAction("maps must be endomorphisms".into()));
            }
        }
        for (i, s) in generators.iter().enumerate() {
            for t in &generators[i + 1..] {
                if s.compose(t)? != t.compose(s)? {
                    return Err(GModuleError::BadAction("generator actions do not commute".into()));
                }
            }
            let d = acting.invariant_factors()[i] as u32;
            if s.pow(d)? != Homomorphism::identity(module) {
                return Err(GModuleError::BadAction(format!("generator {i} does not have order dividing {d}")));
            }
        }
        let mut table = Vec::with_capacity(acting.order() as usize);
        for g in acting.elements() {
            let mut h = Homomorphism::identity(module);
            for (s, &e) in generators.iter().zip(&g) {
                h = h.compose(&s.pow(e as u32)?)?;
            }
            table.push(h);
        }
        Ok(GModule {
            module: module.clone(),
            acting: acting.clone(),
            prime,
            generators,
            table,
        })
    }

    /// `A` with trivial `G`-action.
    pub fn trivial(module: &AbelianGroup, acting: &AbelianGroup, prime: u64) -> Result<Self, GModuleError> {
        let gens = vec![Homomorphism::identity(module); acting.ngens()];
        GModule::new(module, acting, prime, gens)
    }

    /// `A` with a cyclic group of order `order` acting through `sigma`.
    pub fn cyclic(module: &AbelianGroup, order: i64, prime: u64, sigma: Homomorphism) -> Result<Self, GModuleError> {
        let acting = if order == 1 {
            AbelianGroup::trivial()
        } else {
            AbelianGroup::cyclic(order)
        };
        let gens = if order == 1 { vec![] } else { vec![sigma] };
        GModule::new(module, &acting, prime, gens)
    }

    pub fn module(&self) -> &AbelianGroup {
        &self.module
    }

    pub fn acting(&self) -> &AbelianGroup {
        &self.acting
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn generator_actions(&self) -> &[Homomorphism] {
        &self.generators
    }

    pub fn action_of(&self, g: &[i64]) -> &Homomorphism {
        &self.table[self.acting.index_of(g) as usize]
    }

    pub fn act(&self, g: &[i64], a: &[i64]) -> GroupElement {
        self.action_of(g).apply(a)
    }

    /// Smallest `m` with `p^m` annihilating `A`.
    pub fn exponent_valuation(&self) -> u32 {
        let mut e = self.module.exponent() as u64;
        let mut v = 0;
        while e > 1 {
            e /= self.prime;
            v += 1;
        }
        v
    }

    /// Action of a group-algebra element as an endomorphism of `A`.
    pub fn algebra_action(&self, alpha: &GroupAlgebraElement) -> Result<Homomorphism, GModuleError> {
        if alpha.group() != &self.acting {
            return Err(GModuleError::BadAction("algebra over a different group".into()));
        }
        if !alpha.modulus().is_multiple_of(self.module.exponent() as u64) {
            return Err(GModuleError::PrecisionTooLow {
                modulus: alpha.modulus(),
                exponent: self.module.exponent() as u64,
            });
        }
        let mut h = Homomorphism::zero(&self.module, &self.module);
        for (g, c) in alpha.terms() {
            h = h.add(&self.action_of(&g).times(c as i64));
        }
        Ok(h)
    }

    /// The `Z[G]`-submodule generated by `x`.
    pub fn submodule(&self, gens: &[GroupElement]) -> Result<Subgroup, GModuleError> {
        let orbit: Vec<GroupElement> = gens
            .iter()
            .flat_map(|x| self.table.iter().map(move |h| h.apply(x)))
            .collect();
        Ok(Subgroup::generated(&self.module, &orbit)?)
    }

    pub fn is_stable(&self, s: &Subgroup) -> bool {
        s.generators()
            .iter()
            .all(|x| self.generators.iter().all(|h| s.contains(&h.apply(x))))
    }
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// `e A` for one idempotent `e`.
#[derive(Clone, Debug)]
pub struct Component {
    pub idempotent: GroupAlgebraElement,
    pub subgroup: Subgroup,
}

/// Splits `A` as the internal direct product of the images `e A`.
pub fn decompose_module(
    m: &GModule,
    idempotents: &[GroupAlgebraElement],
) -> Result<Vec<Component>, GModuleError> {
    let mut out = Vec::with_capacity(idempotents.len());
    for e in idempotents {
        let subgroup = m.algebra_action(e)?.image()?;
        debug_assert!(m.is_stable(&subgroup));
        out.push(Component {
            idempotent: e.clone(),
            subgroup,
        });
    }
    let product: i64 = out.iter().map(|c| c.subgroup.order()).product();
    if product != m.module().order() {
        return Err(GModuleError::NotADecomposition);
    }
    Ok(out)
}

/// Generators `b_i` whose cyclic submodules form an internal direct
/// product equal to `A`.
///
/// When `p` does not divide `|G|`, `A` is first split by the primitive
/// idempotents at precision one above its exponent, so that every cycle lies
/// in a single component. Within a component the search is greedy with
/// backtracking: extend the current direct product by the cyclic submodule
/// of an element of maximal order meeting it trivially. Dead ends are
/// memoized by the submodule reached.
pub fn cycle_decomposition(m: &GModule) -> Result<Vec<GroupElement>, GModuleError> {
    let a = m.module();
    let components = if !(m.acting().order() as u64).is_multiple_of(m.prime()) {
        let idems = primitive_idempotents(m.acting(), m.prime(), m.exponent_valuation() + 1)?;
        decompose_module(m, &idems)?.into_iter().map(|c| c.subgroup).collect()
    } else {
        vec![a.whole()]
    };
    let mut out = Vec::new();
    for comp in components.iter().filter(|c| !c.is_trivial()) {
        let mut elems = comp.elements();
        elems.sort_by_key(|x| std::cmp::Reverse(a.element_order(x)));
        let mut dead: HashSet<Subgroup> = HashSet::new();
        let mut chosen = Vec::new();
        if !extend(m, &elems, comp, &a.trivial_subgroup(), &mut chosen, &mut dead)? {
            return Err(GModuleError::NoCycleDecomposition);
        }
        out.extend(chosen);
    }
    Ok(out)
}

fn extend(
    m: &GModule,
    elems: &[GroupElement],
    target: &Subgroup,
    current: &Subgroup,
    chosen: &mut Vec<GroupElement>,
    dead: &mut HashSet<Subgroup>,
) -> Result<bool, GModuleError> {
    if current == target {
        return Ok(true);
    }
    if dead.contains(current) {
        return Ok(false);
    }
    let mut tried: HashSet<Subgroup> = HashSet::new();
    for x in elems {
        if current.contains(x) {
            continue;
        }
        let b = m.submodule(std::slice::from_ref(x))?;
        if !tried.insert(b.clone()) || !b.intersect(current)?.is_trivial() {
            continue;
        }
        chosen.push(x.clone());
        if extend(m, elems, target, &current.join(&b)?, chosen, dead)? {
            return Ok(true);
        }
        chosen.pop();
    }
    dead.insert(current.clone());
    Ok(false)
}

/// `s = sigma - 1` for a module over a cyclic group.
pub fn s_operator(m: &GModule) -> Result<Homomorphism, GModuleError> {
    match m.generator_actions() {
        [sigma] => Ok(sigma.sub(&Homomorphism::identity(m.module()))),
        [] => Ok(Homomorphism::zero(m.module(), m.module())),
        _ => Err(GModuleError::BadAction("acting group must be cyclic".into())),
    }
}

/// Whether the cycle `B` generated by `b` satisfies `B ∩ A^s = B^s`.
pub fn is_exact_cycle(m: &GModule, b: &[i64]) -> Result<bool, GModuleError> {
    let s = s_operator(m)?;
    let cycle = m.submodule(&[b.to_vec()])?;
    let a_s = s.image()?;
    let b_s = s.image_of(&cycle)?;
    Ok(cycle.intersect(&a_s)? == b_s)
}

/// In a cyclic module over a local ring, elements of equal order generate
/// the same submodule, i.e. units act transitively on them. Returns the
/// first pair `(x, y)` of equal order with `y` outside the submodule of `x`.
pub fn transitivity_counterexample(
    m: &GModule,
    cycle: &Subgroup,
) -> Result<Option<(GroupElement, GroupElement)>, GModuleError> {
    let a = m.module();
    let elems = cycle.elements();
    for x in &elems {
        let sx = m.submodule(std::slice::from_ref(x))?;
        for y in &elems {
            if a.element_order(x) == a.element_order(y) && !sx.contains(y) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

use std::fmt;

use crate::abgroup::{AbelianGroup, GroupElement, Homomorphism, Subgroup};
use crate::pcgroup::{schreier_transversal, transfer, PcGroup, PcSubgroup};

use super::module::{s_operator, GModule};
use super::GModuleError;

/// Where a datum came from. Theorem-derived invariants are enforced only on
/// group-derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumOrigin {
    /// `(G, H)` with `A_K = G/G'`, `A_L = H/H'`.
    Group { group: String, subgroup: Vec<String> },
    Synthetic(String),
}

/// `A_K`, `A_L` with lift `A_K -> A_L`, norm `A_L -> A_K` and a generator
/// `sigma` of the cyclic group of order `p` acting on `A_L`.
#[derive(Clone, Debug)]
pub struct RelativeExtensionDatum {
    pub prime: u64,
    pub a_k: AbelianGroup,
    pub a_l: AbelianGroup,
    pub lift: Homomorphism,
    pub norm: Homomorphism,
    pub sigma: Homomorphism,
    pub origin: DatumOrigin,
}

/// One failed identity among the datum invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumViolation {
    NormOfLift,
    LiftOfNorm,
    NormSigma,
    SigmaLift,
    SigmaOrder,
}

impl fmt::Display for DatumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DatumViolation::NormOfLift => "N . lift != p-th power on A_K",
            DatumViolation::LiftOfNorm => "lift . N != norm element on A_L",
            DatumViolation::NormSigma => "N . sigma != N",
            DatumViolation::SigmaLift => "sigma . lift != lift",
            DatumViolation::SigmaOrder => "sigma^p != 1",
        })
    }
}

impl RelativeExtensionDatum {
    /// A datum that is not derived from a group; invariants are reported by
    /// [`RelativeExtensionDatum::violations`] but not enforced.
    pub fn synthetic(
        label: &str,
        prime: u64,
        lift: Homomorphism,
        norm: Homomorphism,
        sigma: Homomorphism,
    ) -> Result<Self, GModuleError> {
        let a_k = lift.source().clone();
        let a_l = lift.target().clone();
        if norm.source() != &a_l || norm.target() != &a_k || sigma.source() != &a_l || sigma.target() != &a_l {
            return Err(GModuleError::BadAction("datum maps do not match A_K and A_L".into()));
        }
        Ok(RelativeExtensionDatum {
            prime,
            a_k,
            a_l,
            lift,
            norm,
            sigma,
            origin: DatumOrigin::Synthetic(label.to_string()),
        })
    }

    pub fn is_synthetic(&self) -> bool {
        matches!(self.origin, DatumOrigin::Synthetic(_))
    }

    /// `1 + sigma + ... + sigma^(p-1)` on `A_L`.
    pub fn norm_element(&self) -> Result<Homomorphism, GModuleError> {
        let mut acc = Homomorphism::zero(&self.a_l, &self.a_l);
        let mut power = Homomorphism::identity(&self.a_l);
        for _ in 0..self.prime {
            acc = acc.add(&power);
            power = self.sigma.compose(&power)?;
        }
        Ok(acc)
    }

    pub fn violations(&self) -> Result<Vec<DatumViolation>, GModuleError> {
        let p = self.prime as i64;
        let mut out = Vec::new();
        if self.norm.compose(&self.lift)? != Homomorphism::scalar(&self.a_k, p) {
            out.push(DatumViolation::NormOfLift);
        }
        if self.lift.compose(&self.norm)? != self.norm_element()? {
            out.push(DatumViolation::LiftOfNorm);
        }
        if self.norm.compose(&self.sigma)? != self.norm {
            out.push(DatumViolation::NormSigma);
        }
        if self.sigma.compose(&self.lift)? != self.lift {
            out.push(DatumViolation::SigmaLift);
        }
        if self.sigma.pow(self.prime as u32)? != Homomorphism::identity(&self.a_l) {
            out.push(DatumViolation::SigmaOrder);
        }
        Ok(out)
    }

    /// `A_L` as a module over the cyclic group generated by `sigma`.
    pub fn module(&self) -> Result<GModule, GModuleError> {
        GModule::cyclic(&self.a_l, self.prime as i64, self.prime, self.sigma.clone())
    }

    pub fn s(&self) -> Homomorphism {
        self.sigma.sub(&Homomorphism::identity(&self.a_l))
    }

    /// `A(K)' = N(A_L)`.
    pub fn norm_image(&self) -> Result<Subgroup, GModuleError> {
        Ok(self.norm.image()?)
    }
}

/// The datum of `(G, H)`: `A_K = G/G'`, `A_L = H/H'`, lift = transfer,
/// norm = inclusion-induced map, sigma = conjugation by the first
/// transversal element outside `H`. All invariants are checked.
pub fn make_relative_datum(g: &PcGroup, h: &PcSubgroup) -> Result<RelativeExtensionDatum, GModuleError> {
    let p = g.prime();
    let derived = g.derived_subgroup();
    if h.index_in(g) != p || !h.is_normal_in(g) || !derived.is_subgroup_of(h) {
        return Err(crate::pcgroup::PcGroupError::NotMaximalNormal.into());
    }
    let ver = transfer(g, h)?;
    let norm = ver.inclusion(g)?;
    let t = schreier_transversal(g, h).reps()[1];
    let images: Vec<GroupElement> = ver
        .target
        .lifts
        .iter()
        .map(|&x| {
            ver.target
                .project(g.conjugate(x, t))
                .expect("H is normal")
                .clone()
        })
        .collect();
    let sigma = Homomorphism::from_images(&ver.target.group, &ver.target.group, &images)?;
    let d = RelativeExtensionDatum {
        prime: p as u64,
        a_k: ver.source.group.clone(),
        a_l: ver.target.group.clone(),
        lift: ver.hom.clone(),
        norm,
        sigma,
        origin: DatumOrigin::Group {
            group: g.name().to_string(),
            subgroup: h.generator_words(g),
        },
    };
    let bad = d.violations()?;
    if !bad.is_empty() {
        let detail = bad.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        return Err(GModuleError::DatumInvariant(format!("{}: {detail}", g.name())));
    }
    Ok(d)
}

/// Whether `ker N = A_L^s`. The inclusion `A_L^s <= ker N` follows from
/// `N . sigma = N` and is checked; its failure is an error.
pub fn f_property(d: &RelativeExtensionDatum) -> Result<bool, GModuleError> {
    let ker = d.norm.kernel()?;
    let a_s = d.s().image()?;
    if !a_s.is_subgroup_of(&ker) {
        return Err(GModuleError::DatumInvariant("A_L^s is not inside ker N".into()));
    }
    Ok(ker == a_s)
}

/// Growth classes of `A_K -> A_L`. The tame class has no usable definition
/// and is never produced; see [`classify_growth`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthClass {
    Stable,
    SemiStable,
    Wild,
    UnclassifiedTame,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::Stable => "stable",
            GrowthClass::SemiStable => "semi-stable",
            GrowthClass::Wild => "wild",
            GrowthClass::UnclassifiedTame => "tame (unclassified)",
        })
    }
}

/// * `Stable`: `rk N(A_L) = rk A_L` and `rk A_K = rk A_K^p`.
/// * `SemiStable`: otherwise, if `s^(p-1)` kills `A_L`.
/// * `Wild`: neither of the above.
///
/// The tame case sits between stable and semi-stable but has no stated
/// condition, so `Wild` means "neither stable nor semi-stable".
pub fn classify_growth(d: &RelativeExtensionDatum) -> Result<GrowthClass, GModuleError> {
    let p = d.prime as i64;
    let image = d.norm_image()?;
    let (image_group, _) = image.structure()?;
    let (kp, _) = d.a_k.multiples(p).structure()?;
    if image_group.rank(p) == d.a_l.rank(p) && d.a_k.rank(p) == kp.rank(p) {
        return Ok(GrowthClass::Stable);
    }
    if d.s().pow(d.prime as u32 - 1)?.is_zero() {
        return Ok(GrowthClass::SemiStable);
    }
    Ok(GrowthClass::Wild)
}

/// Outcome of the order law `ord(b) = p ord(lift(N(b)))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthLaw {
    Holds,
    Violated,
    /// Growth is wild, or `N(b)` does not extend to a minimal generating
    /// set of `N(A_L)`.
    Inapplicable,
}

pub fn check_growth_order_law(d: &RelativeExtensionDatum, b: &[i64]) -> Result<GrowthLaw, GModuleError> {
    if !matches!(classify_growth(d)?, GrowthClass::Stable | GrowthClass::SemiStable) {
        return Ok(GrowthLaw::Inapplicable);
    }
    let p = d.prime as i64;
    let nb = d.norm.apply(b);
    let image = d.norm_image()?;
    if !image.is_trivial() {
        // N(b) extends to a minimal generating set iff it is not in p N(A_L)
        let gens: Vec<GroupElement> = image.generators().iter().map(|x| d.a_k.scale(p, x)).collect();
        let frattini = Subgroup::generated(&d.a_k, &gens)?;
        if frattini.contains(&nb) {
            return Ok(GrowthLaw::Inapplicable);
        }
    }
    let lhs = d.a_l.element_order(b);
    let rhs = p * d.a_l.element_order(&d.lift.apply(&nb));
    Ok(if lhs == rhs {
        GrowthLaw::Holds
    } else {
        GrowthLaw::Violated
    })
}

/// `A_L = Z/p^2 [C_p]`, `A_K = Z/p^2`, norm = augmentation, lift =
/// multiplication by the norm element. Satisfies every datum identity yet
/// neither stable nor semi-stable.
pub fn synthetic_wild_datum(p: u64) -> Result<RelativeExtensionDatum, GModuleError> {
    let q = (p * p) as i64;
    let n = p as usize;
    let a_l = AbelianGroup::new(vec![q; n])?;
    let a_k = AbelianGroup::cyclic(q);
    let shift: Vec<GroupElement> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[(i + 1) % n] = 1;
            v
        })
        .collect();
    let sigma = Homomorphism::from_images(&a_l, &a_l, &shift)?;
    let norm = Homomorphism::from_images(&a_l, &a_k, &vec![vec![1]; n])?;
    let lift = Homomorphism::from_images(&a_k, &a_l, &[vec![1; n]])?;
    RelativeExtensionDatum::synthetic("Z/p^2[C_p] over Z/p^2", p, lift, norm, sigma)
}

/// Kernel of the norm and the exponent of that kernel.
pub fn norm_kernel_exponent(d: &RelativeExtensionDatum) -> Result<i64, GModuleError> {
    let (k, _) = d.norm.kernel()?.structure()?;
    Ok(k.exponent())
}

/// `ker N` written as a product of `Z[s]`-cycle images `B_i^s`, from a cycle
/// decomposition of `A_L`; only meaningful when the F-property holds.
pub fn norm_kernel_cycles(d: &RelativeExtensionDatum) -> Result<Vec<Subgroup>, GModuleError> {
    let m = d.module()?;
    let s = s_operator(&m)?;
    let cycles = super::cycle_decomposition(&m)?;
    cycles
        .iter()
        .map(|b| Ok(s.image_of(&m.submodule(std::slice::from_ref(b))?)?))
        .collect()
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use capitulation::abgroup::{AbelianGroup, Homomorphism};
use capitulation::capcli::{classify_capitulation_pattern, fixture_rows, verify_table, PatternClass, TABLE_PRIME};
use capitulation::gmodule::{
    character_idempotents, classify_growth, cycle_decomposition, decompose_module, make_relative_datum,
    norm_kernel_exponent, primitive_idempotents, GModule, GModuleError, GroupAlgebraElement, GrowthClass,
};
use capitulation::heuristics::{
    compare_distributions, format_decimal, monte_carlo_rank_distribution, published_heuristic_p3,
    predicted_rank_distribution, MonteCarloConfig, SamplerModel,
};
use capitulation::pcgroup::{builtin_catalog, random_transversal, transfer, transfer_with_transversal, PcGroup};
use capitulation::quadform::{class_group_structure, compose, enumerate_reduced, power, Discriminant};
use common::{
    abelian_p_groups, brute_has_cycle_decomposition, brute_reduced_forms, form_tuple, fundamental_discriminants,
    is_internal_direct_product, omega, random_coprime_module,
};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CRIT1_MAX_ABS_D: i64 = 2000;
const CRIT1_BUDGET: Duration = Duration::from_secs(30);
const CRIT2_SAMPLES: usize = 500;
const CRIT2_MAX_ABS_D: i64 = 100_000;
const CRIT2_BUDGET: Duration = Duration::from_secs(10);
const CRIT2_SEED: u64 = 2;
const CRIT3_BUDGET: Duration = Duration::from_secs(60);
const CRIT5_RANDOM_TRANSVERSALS: usize = 10;
const CRIT5_BUDGET: Duration = Duration::from_secs(30);
const CRIT5_SEED: u64 = 5;
const CRIT7_RANDOM_MODULES: usize = 100;
const CRIT7_MAX_EXPONENT: u32 = 6;
const CRIT7_EXHAUSTIVE_EXPONENT: u32 = 5;
const CRIT7_MAX_ACTING_ORDER: u32 = 16;
const CRIT7_SEED: u64 = 7;
const CRIT8_EXPECTED: [&str; 3] = ["0.8889", "0.0988", "0.0110"];
const CRIT8_PUBLISHED_TOL: f64 = 1.5e-4;
const CRIT8_MASS_KMAX: usize = 50;
const CRIT8_MASS_TOL: f64 = 1e-12;
const CRIT8_TRIALS: u64 = 100_000;
const CRIT8_SEED: u64 = 8;
const CRIT8_TV_TOL: f64 = 0.02;

type Criterion = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(failures: &[String], summary: String) -> Self {
        let mut detail = summary;
        for f in failures.iter().take(5) {
            detail.push_str(&format!("\n      failure: {f}"));
        }
        if failures.len() > 5 {
            detail.push_str(&format!("\n      ... {} more", failures.len() - 5));
        }
        Verdict {
            pass: failures.is_empty(),
            detail,
        }
    }
}

fn within_budget(failures: &mut Vec<String>, start: Instant, budget: Duration) -> f64 {
    let secs = start.elapsed().as_secs_f64();
    if start.elapsed() > budget {
        failures.push(format!("took {secs:.1} s, budget {} s", budget.as_secs()));
    }
    secs
}

/// Class groups agree with the exhaustive reduced-form count, and the
/// composition table is an abelian group whose discrete log is additive.
fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let discs = fundamental_discriminants(CRIT1_MAX_ABS_D);
    let mut checked_triples = 0u64;
    for &d in &discs {
        let v = d.value();
        let mut brute = brute_reduced_forms(v);
        let cg = class_group_structure(d).unwrap();
        let forms = enumerate_reduced(d);
        let mut ours: Vec<_> = forms.iter().map(form_tuple).collect();
        brute.sort();
        ours.sort();
        if ours != brute || cg.order as usize != brute.len() {
            failures.push(format!("D = {v}: h = {}, brute count {}", cg.order, brute.len()));
            continue;
        }
        if cg.invariant_factors.iter().product::<i64>() as u64 != cg.order
            || cg.invariant_factors.windows(2).any(|w| w[1] % w[0] != 0)
        {
            failures.push(format!("D = {v}: invariant factors {:?}", cg.invariant_factors));
        }
        let h = forms.len();
        let index: HashMap<_, usize> = forms.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let mut table = vec![0usize; h * h];
        let mut closed = true;
        for i in 0..h {
            for j in 0..h {
                match index.get(&compose(&forms[i], &forms[j], d).unwrap()) {
                    Some(&k) => table[i * h + j] = k,
                    None => closed = false,
                }
            }
        }
        if !closed {
            failures.push(format!("D = {v}: composition leaves the reduced forms"));
            continue;
        }
        let e = index[&d.principal_form()];
        let identity = (0..h).all(|i| table[e * h + i] == i);
        let inverses = (0..h).all(|i| (0..h).any(|j| table[i * h + j] == e));
        let commutative = (0..h).all(|i| (0..h).all(|j| table[i * h + j] == table[j * h + i]));
        let mut associative = true;
        for i in 0..h {
            for j in 0..h {
                let ij = table[i * h + j];
                for k in 0..h {
                    associative &= table[ij * h + k] == table[i * h + table[j * h + k]];
                }
            }
        }
        checked_triples += (h * h * h) as u64;
        let log_additive = (0..h).all(|i| {
            (0..h).all(|j| {
                let sum = cg.group().add(cg.log(&forms[i]).unwrap(), cg.log(&forms[j]).unwrap());
                cg.log(&forms[table[i * h + j]]).unwrap() == &sum
            })
        });
        if !(identity && inverses && commutative && associative && log_additive) {
            failures.push(format!(
                "D = {v}: identity {identity}, inverses {inverses}, commutative {commutative}, associative {associative}, log {log_additive}"
            ));
        }
    }
    let secs = within_budget(&mut failures, start, CRIT1_BUDGET);
    Verdict::new(
        &failures,
        format!(
            "{} fundamental D with |D| <= {CRIT1_MAX_ABS_D}, {checked_triples} associativity triples, {secs:.1} s",
            discs.len()
        ),
    )
}

/// 2-rank equals the number of prime divisors minus one, and the number of
/// ambiguous reduced forms equals 2^(t-1).
fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(CRIT2_SEED);
    let mut sampled = Vec::new();
    while sampled.len() < CRIT2_SAMPLES {
        let v = -rng.gen_range(3..=CRIT2_MAX_ABS_D);
        if capitulation::quadform::is_fundamental(v) && !sampled.contains(&v) {
            sampled.push(v);
        }
    }
    for &v in &sampled {
        let d = Discriminant::new(v).unwrap();
        let t = omega(v.unsigned_abs());
        let rank = capitulation::quadform::p_rank(d, 2).unwrap();
        let ambiguous = brute_reduced_forms(v)
            .iter()
            .filter(|&&(a, b, c)| b == 0 || a == b || a == c)
            .count();
        if rank != t - 1 || ambiguous != 1 << (t - 1) {
            failures.push(format!("D = {v}: 2-rank {rank}, t = {t}, ambiguous forms {ambiguous}"));
        }
    }
    let secs = within_budget(&mut failures, start, CRIT2_BUDGET);
    Verdict::new(
        &failures,
        format!("{} sampled fundamental D with |D| <= {CRIT2_MAX_ABS_D}, seed {CRIT2_SEED}, {secs:.1} s", sampled.len()),
    )
}

/// The tabulated discriminants have 5-rank 2: by the Smith form and by
/// counting the reduced forms killed by 5.
fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let verdicts = verify_table().unwrap();
    for v in &verdicts {
        if let Some(c) = v.conflict() {
            failures.push(c);
        }
        let d = Discriminant::new(v.row.discriminant).unwrap();
        let torsion = enumerate_reduced(d)
            .iter()
            .filter(|f| power(f, TABLE_PRIME as u64, d).unwrap() == d.principal_form())
            .count();
        if torsion != 25 {
            failures.push(format!(
                "fixture conflict in row {}: D = {} has {torsion} classes killed by 5, expected 25",
                v.row.row, v.row.discriminant
            ));
        }
    }
    let secs = within_budget(&mut failures, start, CRIT3_BUDGET);
    Verdict::new(
        &failures,
        format!("{} rows, {} with 5-rank 2, {secs:.1} s", verdicts.len(), verdicts.iter().filter(|v| v.rank_ok()).count()),
    )
}

fn criterion_4() -> Verdict {
    let mut failures = Vec::new();
    let rows = fixture_rows().unwrap();
    let mut counts: HashMap<PatternClass, Vec<usize>> = HashMap::new();
    for r in &rows {
        let c = classify_capitulation_pattern(&r.pattern, TABLE_PRIME).unwrap();
        counts.entry(c).or_default().push(r.row);
    }
    let get = |c| counts.get(&c).cloned().unwrap_or_default();
    let (one, pc, other) = (get(PatternClass::OneOne), get(PatternClass::PCapitulation), get(PatternClass::Other));
    if one.len() != 24 {
        failures.push(format!("{} rows classified 1-1, expected 24", one.len()));
    }
    if pc != [13, 18, 19, 24] {
        failures.push(format!("p-capitulation rows {pc:?}, expected [13, 18, 19, 24]"));
    }
    if !other.is_empty() {
        failures.push(format!("rows classified other: {other:?}"));
    }
    Verdict::new(
        &failures,
        format!("{} 1-1, {} p-capitulation {pc:?}, {} other", one.len(), pc.len(), other.len()),
    )
}

/// Ver(x) from the definition: the product over cosets of `t_i x t_j^-1`,
/// read in `H/H'`.
fn brute_transfer(g: &PcGroup, t: &capitulation::pcgroup::TransferMap, reps: &[u32], x: u32) -> Vec<i64> {
    let h = &t.subgroup;
    let mut acc = 0u32;
    for &ti in reps {
        let tx = g.mul(ti, x);
        let tj = reps
            .iter()
            .copied()
            .find(|&tj| h.contains(g.mul(tx, g.inv(tj))))
            .expect("cosets are covered");
        acc = g.mul(acc, g.mul(tx, g.inv(tj)));
    }
    t.target.project(acc).expect("product lies in H").clone()
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(CRIT5_SEED);
    let groups = builtin_catalog().groups().unwrap();
    let (mut pairs, mut metabelian, mut nonmetabelian) = (0, 0, 0);
    for g in &groups {
        let name = g.name();
        let p = g.prime() as i64;
        for h in g.subgroups_index_p_above_derived().unwrap() {
            pairs += 1;
            let t = transfer(g, &h).unwrap();
            let kernel = t.kernel().unwrap();
            // (a) [G:H] = p divides |ker Ver|
            if kernel.order() % p != 0 {
                failures.push(format!("{name}: |ker Ver| = {} not divisible by {p}", kernel.order()));
            }
            // (b) inclusion . Ver = p-th power on G/G'
            let comp = t.inclusion(g).unwrap().compose(&t.hom).unwrap();
            if comp != Homomorphism::scalar(&t.source.group, p) {
                failures.push(format!("{name}: inclusion . Ver is not the p-th power map"));
            }
            // (d) independent of the transversal, and equal to the definition
            let reps = capitulation::pcgroup::schreier_transversal(g, &h).reps().to_vec();
            for x in g.elements() {
                let direct = brute_transfer(g, &t, &reps, x);
                if t.hom.apply(&t.source.project(g, x)) != direct {
                    failures.push(format!("{name}: Ver({}) disagrees with the coset product", g.format_elem(x)));
                    break;
                }
            }
            for _ in 0..CRIT5_RANDOM_TRANSVERSALS {
                let tr = random_transversal(g, &h, &mut rng);
                if transfer_with_transversal(g, &h, &tr).unwrap().hom != t.hom {
                    failures.push(format!("{name}: transfer depends on the transversal"));
                }
            }
        }
        // (c) transfer to G' is trivial on metabelian groups
        let d = g.derived_subgroup();
        if d.derived(g).order() != 1 {
            nonmetabelian += 1;
            continue;
        }
        metabelian += 1;
        if d.order() < g.order() && !transfer(g, &d).unwrap().hom.is_zero() {
            failures.push(format!("{name}: transfer to G' is not trivial"));
        }
    }
    let secs = within_budget(&mut failures, start, CRIT5_BUDGET);
    Verdict::new(
        &failures,
        format!(
            "{} groups, {pairs} (G, H) pairs, {CRIT5_RANDOM_TRANSVERSALS} random transversals each, {metabelian} metabelian ({nonmetabelian} not), {secs:.1} s",
            groups.len()
        ),
    )
}

fn criterion_6() -> Verdict {
    let mut failures = Vec::new();
    let groups = builtin_catalog().groups().unwrap();
    let (mut data, mut elements, mut tame) = (0, 0u64, 0);
    for g in &groups {
        let name = g.name();
        for h in g.subgroups_index_p_above_derived().unwrap() {
            let d = match make_relative_datum(g, &h) {
                Ok(d) => d,
                Err(e) => {
                    failures.push(format!("{name}: {e}"));
                    continue;
                }
            };
            data += 1;
            let v = d.violations().unwrap();
            if !v.is_empty() {
                failures.push(format!("{name}: {v:?}"));
            }
            let p = d.prime as i64;
            for x in d.a_k.elements() {
                elements += 1;
                if d.norm.apply(&d.lift.apply(&x)) != d.a_k.scale(p, &x) {
                    failures.push(format!("{name}: N(lift({x:?})) != {p} * {x:?}"));
                }
            }
            for y in d.a_l.elements() {
                elements += 1;
                let mut orbit_sum = d.a_l.identity();
                let mut z = y.clone();
                for _ in 0..p {
                    orbit_sum = d.a_l.add(&orbit_sum, &z);
                    z = d.sigma.apply(&z);
                }
                if d.lift.apply(&d.norm.apply(&y)) != orbit_sum {
                    failures.push(format!("{name}: lift(N({y:?})) != norm element applied to it"));
                }
                if d.norm.apply(&d.sigma.apply(&y)) != d.norm.apply(&y) {
                    failures.push(format!("{name}: N(sigma {y:?}) != N({y:?})"));
                }
            }
            // exp ker N <= p whenever growth is stable or semi-stable
            let class = classify_growth(&d).unwrap();
            if matches!(class, GrowthClass::Stable | GrowthClass::SemiStable) {
                tame += 1;
                let e = norm_kernel_exponent(&d).unwrap();
                if e > p {
                    failures.push(format!("{name}: growth {class} but exp ker N = {e}"));
                }
            }
        }
    }
    Verdict::new(
        &failures,
        format!("{data} catalog data, {elements} elements checked, {tame} stable or semi-stable with exp ker N <= p"),
    )
}

fn check_idempotents(idems: &[GroupAlgebraElement]) -> Result<(), String> {
    let group = idems[0].group().clone();
    let modulus = idems[0].modulus();
    let mut sum = GroupAlgebraElement::zero(&group, modulus);
    for (i, e) in idems.iter().enumerate() {
        if !e.is_idempotent() {
            return Err("not idempotent".into());
        }
        for f in &idems[i + 1..] {
            if !(e * f).is_zero() {
                return Err("not orthogonal".into());
            }
        }
        sum = &sum + e;
    }
    if sum != GroupAlgebraElement::one(&group, modulus) {
        return Err("idempotents do not sum to 1".into());
    }
    Ok(())
}

fn verify_cycles(m: &GModule) -> Result<usize, String> {
    let cycles = cycle_decomposition(m).map_err(|e| e.to_string())?;
    let parts: Vec<_> = cycles
        .iter()
        .map(|b| m.submodule(std::slice::from_ref(b)).unwrap().elements())
        .collect();
    if !is_internal_direct_product(m.module(), &parts) {
        return Err(format!("cycles {cycles:?} are not a direct decomposition"));
    }
    Ok(cycles.len())
}

fn criterion_7() -> Verdict {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(CRIT7_SEED);
    let shapes: Vec<AbelianGroup> = (1..=CRIT7_MAX_EXPONENT).flat_map(|n| abelian_p_groups(3, n)).collect();

    let mut with_characters = 0;
    for i in 0..CRIT7_RANDOM_MODULES {
        let a = &shapes[rng.gen_range(0..shapes.len())];
        let m = random_coprime_module(a, 3, CRIT7_MAX_ACTING_ORDER, &mut rng);
        let label = format!("module {i}: A = {a}, G = {}", m.acting());
        let precision = m.exponent_valuation() + 1;
        let idems = primitive_idempotents(m.acting(), 3, precision).unwrap();
        if let Err(e) = check_idempotents(&idems) {
            failures.push(format!("{label}: {e}"));
        }
        if let Ok(chars) = character_idempotents(m.acting(), 3, precision) {
            with_characters += 1;
            if chars.len() != idems.len() || chars.iter().any(|c| !idems.contains(c)) {
                failures.push(format!("{label}: character and primitive idempotents differ"));
            }
        }
        match decompose_module(&m, &idems) {
            Ok(comps) => {
                let parts: Vec<_> = comps.iter().map(|c| c.subgroup.elements()).collect();
                let product: i64 = comps.iter().map(|c| c.subgroup.order()).product();
                if product != a.order() || !is_internal_direct_product(a, &parts) {
                    failures.push(format!("{label}: components are not a direct decomposition"));
                }
                if comps.iter().any(|c| !m.is_stable(&c.subgroup)) {
                    failures.push(format!("{label}: unstable component"));
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }

    // every module of order <= 3^5 in the families below
    let mut exhaustive = 0;
    let mut no_decomposition = 0;
    for n in 1..=CRIT7_EXHAUSTIVE_EXPONENT {
        for a in abelian_p_groups(3, n) {
            let mut modules = vec![
                GModule::trivial(&a, &AbelianGroup::trivial(), 3).unwrap(),
                GModule::cyclic(&a, 2, 3, Homomorphism::scalar(&a, -1)).unwrap(),
            ];
            for _ in 0..3 {
                modules.push(random_coprime_module(&a, 3, CRIT7_MAX_ACTING_ORDER, &mut rng));
            }
            for m in &modules {
                exhaustive += 1;
                if let Err(e) = verify_cycles(m) {
                    failures.push(format!("A = {a}, G = {}: {e}", m.acting()));
                    continue;
                }
                // units act transitively on equal-order elements of each cycle
                let idems = primitive_idempotents(m.acting(), 3, m.exponent_valuation() + 1).unwrap();
                for c in decompose_module(m, &idems).unwrap() {
                    let sub = GModule::new(
                        &c.subgroup.structure().unwrap().0,
                        m.acting(),
                        3,
                        restrict_actions(m, &c.subgroup),
                    )
                    .unwrap();
                    for b in cycle_decomposition(&sub).unwrap() {
                        let cycle = sub.submodule(&[b]).unwrap();
                        if let Some((x, y)) = capitulation::gmodule::transitivity_counterexample(&sub, &cycle).unwrap() {
                            failures.push(format!("A = {a}: {y:?} not in the orbit module of {x:?}"));
                        }
                    }
                }
            }
        }
    }
    for g in builtin_catalog().groups().unwrap() {
        for h in g.subgroups_index_p_above_derived().unwrap() {
            let m = make_relative_datum(&g, &h).unwrap().module().unwrap();
            if m.module().order() > 3i64.pow(CRIT7_EXHAUSTIVE_EXPONENT) || m.prime() != 3 {
                continue;
            }
            exhaustive += 1;
            match cycle_decomposition(&m) {
                Ok(_) => {
                    if let Err(e) = verify_cycles(&m) {
                        failures.push(format!("{}: {e}", g.name()));
                    }
                }
                // modular case: confirm by exhaustive search
                Err(GModuleError::NoCycleDecomposition) => {
                    no_decomposition += 1;
                    if brute_has_cycle_decomposition(&m) {
                        failures.push(format!("{}: a cycle decomposition exists but was not found", g.name()));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", g.name())),
            }
        }
    }
    Verdict::new(
        &failures,
        format!(
            "{CRIT7_RANDOM_MODULES} random modules of order <= 3^{CRIT7_MAX_EXPONENT} ({with_characters} also via characters), \
             {exhaustive} modules of order <= 3^{CRIT7_EXHAUSTIVE_EXPONENT} decomposed into cycles \
             ({no_decomposition} catalog modules with none, confirmed by search)"
        ),
    )
}

/// The action of `m` restricted to a stable subgroup, in the coordinates of
/// its own invariant-factor form.
fn restrict_actions(m: &GModule, s: &capitulation::abgroup::Subgroup) -> Vec<Homomorphism> {
    let (b, incl) = s.structure().unwrap();
    // incl: b -> A is injective; pull back sigma(incl(x)) through it
    let elems: Vec<_> = b.elements().collect();
    let image_index: HashMap<_, _> = elems.iter().map(|x| (incl.apply(x), x.clone())).collect();
    m.generator_actions()
        .iter()
        .map(|sigma| {
            let images: Vec<_> = (0..b.ngens())
                .map(|i| image_index[&sigma.apply(&incl.apply(&b.generator(i)))].clone())
                .collect();
            Homomorphism::from_images(&b, &b, &images).unwrap()
        })
        .collect()
}

fn criterion_8() -> Verdict {
    let mut failures = Vec::new();
    let d = predicted_rank_distribution(3, 3).unwrap();
    let rounded = d.rounded(4);
    if rounded != CRIT8_EXPECTED {
        failures.push(format!("closed form rounds to {rounded:?}, expected {CRIT8_EXPECTED:?}"));
    }
    let published = published_heuristic_p3();
    let mut max_dev: f64 = 0.0;
    for k in 1..=3 {
        let dev = (d.probability(k) - published.probability(k)).abs().to_f64().unwrap();
        max_dev = max_dev.max(dev);
    }
    if max_dev > CRIT8_PUBLISHED_TOL {
        failures.push(format!("deviation {max_dev:.2e} from the published column exceeds {CRIT8_PUBLISHED_TOL:e}"));
    }
    let big = predicted_rank_distribution(3, CRIT8_MASS_KMAX).unwrap();
    let mass_err = (big.total_mass() - BigRational::one()).abs().to_f64().unwrap();
    if mass_err > CRIT8_MASS_TOL {
        failures.push(format!("mass at kmax {CRIT8_MASS_KMAX} is off by {mass_err:e}"));
    }
    let mc = monte_carlo_rank_distribution(3, CRIT8_TRIALS, CRIT8_SEED, &MonteCarloConfig::default()).unwrap();
    let tv = compare_distributions(&d, &mc).unwrap();
    let tv_f = tv.to_f64().unwrap();
    if tv_f >= CRIT8_TV_TOL {
        failures.push(format!("Monte Carlo TV {tv_f:.4} >= {CRIT8_TV_TOL}"));
    }
    let cokernel = MonteCarloConfig {
        model: SamplerModel::Cokernel { size: 8 },
        kmax: 3,
    };
    let alt = monte_carlo_rank_distribution(3, CRIT8_TRIALS / 10, CRIT8_SEED, &cokernel).unwrap();
    let alt_tv = compare_distributions(&d, &alt).unwrap();
    Verdict::new(
        &failures,
        format!(
            "closed form {rounded:?}, max deviation from published {max_dev:.2e}, mass error at kmax {CRIT8_MASS_KMAX} {mass_err:.1e}, \
             layered Monte Carlo TV {} ({CRIT8_TRIALS} trials, seed {CRIT8_SEED}); cokernel model TV {} (informational)",
            format_decimal(&tv, 4),
            format_decimal(&alt_tv, 4)
        ),
    )
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("class groups for |D| <= 2000", criterion_1),
        ("genus theory on sampled D", criterion_2),
        ("5-rank 2 on the embedded table", criterion_3),
        ("pattern dichotomy", criterion_4),
        ("transfer suite over the catalog", criterion_5),
        ("relative extension data over the catalog", criterion_6),
        ("idempotents and cycle decompositions", criterion_7),
        ("rank heuristic", criterion_8),
    ];
    let mut passed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        println!("criterion {} [{name}]: {} ({})", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
        passed.push(v.pass);
    }
    let substitute = passed[2..6].iter().all(|&p| p);
    println!(
        "criterion 9 [substitute suite]: {} (criteria 3 to 6 {}; the capitulation-pattern column and the real quadratic example are not recomputed)",
        if substitute { "PASS" } else { "FAIL" },
        if substitute { "all pass" } else { "have failures" }
    );
    passed.push(substitute);
    let failed = passed.iter().filter(|&&p| !p).count();
    println!("acceptance: {} of {} criteria pass", passed.len() - failed, passed.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

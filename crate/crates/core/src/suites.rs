//! Property suites. A trial builds one instance (a semigroup, a sub-inverse
//! semigroup and, where needed, random algebras) and runs one suite on it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::algebra::GAlgebra;
use crate::crossed::imprimitivity_check;
use crate::error::{Error, Result};
use crate::fibers::act_word;
use crate::fixtures;
use crate::hilbert::{
    build_l2, build_l2_cosets, compacts_and_diagonal, l2_checks, mingo_v, random_module_unitary, sample_nonexpansive,
    HModule,
};
use crate::induction::adjunction::triangle_identities;
use crate::induction::isos::{check_naturality, mu_iso, tau_iso, unit_iota, restriction_of_tensor};
use crate::induction::primed::{delta_bijection, primed_comparison};
use crate::induction::{CosetTable, IndAlgebra, Restriction};
use crate::isg::{Isg, SubIsg};
use crate::lattice::{ProjLattice, TProj, Word};
use crate::linalg::Matrix;
use crate::models::{c0_semigroup, epsilon_algebra, random_galgebra, standard_gsets};
use crate::partial_perm::PartialPerm;
use crate::random::{random_isg, random_sub, trial_seed};
use crate::report::{Check, Status};
use crate::tensor::{fibered_model, BalancedTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Sigma,
    Delta,
    Induction,
    Restriction,
    MuTau,
    Adjunction,
    L2,
    Mingo,
    Imprimitivity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Sigma,
        Suite::Delta,
        Suite::Induction,
        Suite::Restriction,
        Suite::MuTau,
        Suite::Adjunction,
        Suite::L2,
        Suite::Mingo,
        Suite::Imprimitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sigma => "sigma",
            Suite::Delta => "delta",
            Suite::Induction => "induction",
            Suite::Restriction => "restriction",
            Suite::MuTau => "mu-tau",
            Suite::Adjunction => "adjunction",
            Suite::L2 => "l2",
            Suite::Mingo => "mingo",
            Suite::Imprimitivity => "imprimitivity",
        }
    }

    /// Degree and size bounds used for random instances of this suite.
    pub fn bounds(self, cfg: &SuiteConfig) -> (usize, usize) {
        match self {
            Suite::Sigma | Suite::Delta | Suite::Induction | Suite::Restriction | Suite::L2 => (cfg.degree, cfg.cap),
            Suite::MuTau => (cfg.degree, cfg.cap.min(24)),
            Suite::Adjunction => (cfg.degree, cfg.cap.min(16)),
            Suite::Mingo => (cfg.degree.min(3), cfg.cap.min(16)),
            Suite::Imprimitivity => (cfg.degree.min(3), cfg.cap.min(12)),
        }
    }

    fn max_dim(self, cfg: &SuiteConfig) -> usize {
        match self {
            Suite::Imprimitivity => cfg.max_dim.min(2),
            _ => cfg.max_dim,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub degree: usize,
    pub cap: usize,
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { degree: 4, cap: 60, max_dim: 4 }
    }
}

/// A semigroup with a chosen sub-inverse semigroup.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub generators: Option<Vec<PartialPerm>>,
    pub g: Arc<Isg>,
    pub sub: SubIsg,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceInfo {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub idempotents: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Option<usize>>>>,
    pub sub_order: usize,
    pub sub_members: Vec<usize>,
    pub algebra_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trial {
    pub id: String,
    pub suite: Suite,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub instance: InstanceInfo,
    pub checks: Vec<Check>,
}

impl Trial {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

/// The random instance of trial `trial`. Suites with equal bounds draw the
/// same pool of instances.
pub fn random_instance(suite: Suite, cfg: &SuiteConfig, base: u64, trial: u64) -> Result<Instance> {
    let (degree, cap) = suite.bounds(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(base, &format!("pool/{degree}/{cap}"), trial));
    let (gens, g) = random_isg(&mut rng, degree, cap)?;
    let sub = random_sub(&mut rng, &g);
    Ok(Instance { name: format!("random-{trial}"), generators: Some(gens), g, sub })
}

/// Fixed instances run by every suite.
pub fn regression_instances(suite: Suite) -> Vec<Instance> {
    let fixed = |name: &str, g: Arc<Isg>, members: Vec<usize>| Instance {
        name: name.to_string(),
        generators: None,
        sub: g.restrict(&g.generated_by(&members)).expect("generated subsets are closed"),
        g,
    };
    let (eg, eh) = fixtures::example_pair();
    let example = Instance { name: "semilattice_1e/e".into(), generators: None, g: eg, sub: eh };
    let z2 = fixtures::z2();
    let z2_unit = fixed("z2/1", z2.clone(), vec![z2.unit().expect("group")]);
    let z2_full = fixed("z2/z2", z2.clone(), (0..z2.len()).collect());
    let mut out = vec![example, z2_unit, z2_full];
    if suite == Suite::Imprimitivity {
        return out;
    }
    let ei2 = fixtures::idempotents_i2();
    out.push(fixed("idempotents_i2/idempotents_i2", ei2.clone(), (0..ei2.len()).collect()));
    let i2 = fixtures::i2();
    out.push(fixed("i2/idempotents", i2.clone(), i2.idempotents().to_vec()));
    let swap = fixtures::element(&i2, &[Some(1), Some(0)]);
    out.push(fixed("i2/units", i2.clone(), vec![swap]));
    out.push(fixed("i2/i2", i2.clone(), (0..i2.len()).collect()));
    out
}

fn info(inst: &Instance, dims: Vec<usize>) -> InstanceInfo {
    InstanceInfo {
        name: inst.name.clone(),
        degree: inst.g.degree(),
        order: inst.g.len(),
        idempotents: inst.g.idempotents().len(),
        generators: inst.generators.as_ref().map(|gs| gs.iter().map(|p| p.one_based()).collect()),
        sub_order: inst.sub.members().len(),
        sub_members: inst.sub.members().to_vec(),
        algebra_dims: dims,
    }
}

/// Runs random trial `trial` of `suite`.
pub fn run_random_trial(suite: Suite, cfg: &SuiteConfig, base: u64, trial: u64) -> Trial {
    let seed = trial_seed(base, suite.name(), trial);
    let id = format!("random:{trial}");
    match random_instance(suite, cfg, base, trial) {
        Ok(inst) => run_on(suite, cfg, &inst, id, seed, true),
        Err(e) => Trial {
            id,
            suite,
            seed: Some(seed),
            instance: InstanceInfo {
                name: format!("random-{trial}"),
                degree: 0,
                order: 0,
                idempotents: 0,
                generators: None,
                sub_order: 0,
                sub_members: vec![],
                algebra_dims: vec![],
            },
            checks: vec![Check::fail("instance generation", e.to_string())],
        },
    }
}

/// Runs the fixed regression instances of `suite`.
pub fn run_regression(suite: Suite, cfg: &SuiteConfig, base: u64) -> Vec<Trial> {
    regression_instances(suite)
        .iter()
        .enumerate()
        .map(|(k, inst)| {
            let seed = trial_seed(base, &format!("{}/regression", suite.name()), k as u64);
            run_on(suite, cfg, inst, format!("regression:{}", inst.name), seed, false)
        })
        .collect()
}

/// Runs `suite` on one instance. Random trials use random algebras; the
/// regression trials use the canonical algebras `ε(H)` and `ε(G)`.
pub fn run_on(suite: Suite, cfg: &SuiteConfig, inst: &Instance, id: String, seed: u64, random_algebras: bool) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_dim = suite.max_dim(cfg);
    let h_algebra = |rng: &mut ChaCha8Rng| {
        if random_algebras {
            random_galgebra(rng, &inst.sub.isg, &standard_gsets(&inst.sub.isg), max_dim)
        } else {
            epsilon_algebra(inst.sub.isg.clone())
        }
    };
    let g_algebra = |rng: &mut ChaCha8Rng, alt: bool| {
        if random_algebras {
            random_galgebra(rng, &inst.g, &standard_gsets(&inst.g), max_dim)
        } else if alt {
            c0_semigroup(inst.g.clone())
        } else {
            epsilon_algebra(inst.g.clone())
        }
    };
    let mut dims = Vec::new();
    let result = match suite {
        Suite::Sigma => Ok(sigma_suite(inst)),
        Suite::Delta => {
            let a = h_algebra(&mut rng);
            dims.push(a.dim());
            delta_suite(inst, &a)
        }
        Suite::Induction => {
            let a = h_algebra(&mut rng);
            let b = g_algebra(&mut rng, false);
            dims.extend([a.dim(), b.dim()]);
            induction_suite(inst, &a, &b)
        }
        Suite::Restriction => {
            let b1 = g_algebra(&mut rng, false);
            let b2 = g_algebra(&mut rng, true);
            dims.extend([b1.dim(), b2.dim()]);
            restriction_suite(inst, &b1, &b2)
        }
        Suite::MuTau => {
            let a = h_algebra(&mut rng);
            let b = g_algebra(&mut rng, false);
            dims.extend([a.dim(), b.dim()]);
            mu_tau_suite(inst, &a, &b)
        }
        Suite::Adjunction => {
            let a = h_algebra(&mut rng);
            let b = g_algebra(&mut rng, true);
            dims.extend([a.dim(), b.dim()]);
            adjunction_suite(inst, &a, &b)
        }
        Suite::L2 => l2_suite(inst, &mut rng),
        Suite::Mingo => mingo_suite(inst, &mut rng),
        Suite::Imprimitivity => {
            let a = h_algebra(&mut rng);
            dims.push(a.dim());
            imprimitivity_suite(inst, &a, seed)
        }
    };
    let checks = result.unwrap_or_else(|e| vec![Check::fail("construction", e.to_string())]);
    Trial { id, suite, seed: Some(seed), instance: info(inst, dims), checks }
}

fn full_sub(g: &Arc<Isg>) -> SubIsg {
    g.restrict(&(0..g.len()).collect::<Vec<_>>()).expect("the whole semigroup is closed")
}

fn sigma_suite(inst: &Instance) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, sub) in [("G", full_sub(&inst.g)), ("H", inst.sub.clone())] {
        for mut c in sigma_checks(&inst.g, &sub) {
            c.name = format!("{label}: {}", c.name);
            out.push(c);
        }
    }
    out
}

/// Value of a word's expansion in `Z[G]` at the character `f ↦ [f ≥ a]`.
fn evaluate_at(g: &Isg, r: &crate::ring::RingElem, a: usize) -> i64 {
    r.terms().filter(|&(f, _)| g.is_idempotent(f) && g.mul(a, f) == a).map(|(_, c)| c).sum()
}

/// Leading-coefficient calculus on the projection lattice of `sub`, checked
/// exhaustively over every reduced word.
pub fn sigma_checks(g: &Arc<Isg>, sub: &SubIsg) -> Vec<Check> {
    let idems: Vec<usize> = sub.members().iter().copied().filter(|&x| g.is_idempotent(x)).collect();
    let lat = match ProjLattice::of_idempotents(g.clone(), idems) {
        Ok(l) => l,
        Err(e) => return vec![Check::fail("projection lattice", e.to_string())],
    };
    let n = lat.len();
    let mut out = Vec::new();

    // atoms and their labels
    let mut bad = None;
    let mut seen = TProj::empty(n);
    for &e in lat.idempotents() {
        let w = lat.atom_word(e).expect("lattice idempotent");
        let p = lat.word_to_atoms(&w).expect("lattice word");
        let atom = lat.atom(e).expect("lattice idempotent");
        let r = w.expand(g);
        let point_mass = lat.idempotents().iter().all(|&a| evaluate_at(g, &r, a) == i64::from(a == e));
        if p != atom || p.count() != 1 || !seen.is_disjoint(&p) || lat.sigma(&p) != Ok(e) || !point_mass {
            bad.get_or_insert(format!("e={e}, atom={p:?}"));
        }
        seen = seen.join(&p);
    }
    if seen != lat.top() {
        bad.get_or_insert_with(|| "atoms do not cover the lattice".into());
    }
    out.push(match bad {
        None => Check::pass("atoms biject with idempotents").with_detail(json!({ "atoms": n })),
        Some(w) => Check::fail("atoms biject with idempotents", w),
    });

    let words = lat.enumerate_words();
    let projections: Vec<(Word, TProj)> =
        words.iter().map(|w| (w.clone(), lat.word_to_atoms(w).expect("lattice word"))).collect();

    // bitset semantics against the expansion in Z[G]
    let mismatch = projections.iter().find_map(|(w, p)| {
        let r = w.expand(g);
        lat.idempotents()
            .iter()
            .enumerate()
            .find(|&(i, &a)| evaluate_at(g, &r, a) != i64::from(p.contains(i)))
            .map(|(_, &a)| format!("word {w:?} at character of {a}"))
    });
    out.push(Check::expect("word projections match character evaluation", mismatch.is_none(), || mismatch.unwrap()));

    let nonzero: Vec<&(Word, TProj)> = projections.iter().filter(|(_, p)| !p.is_zero()).collect();
    let mut memo: HashMap<TProj, usize> = HashMap::with_capacity(nonzero.len());
    let mut sigma_err = None;
    for (w, p) in &nonzero {
        match lat.sigma(p) {
            Ok(s) => {
                if memo.insert(p.clone(), s).is_some() {
                    sigma_err.get_or_insert(format!("two reduced words give {p:?}"));
                }
            }
            Err(e) => {
                sigma_err.get_or_insert(format!("{w:?}: {e}"));
            }
        }
    }
    out.push(match sigma_err {
        None => Check::pass("reduced words are distinct with a leading coefficient")
            .with_detail(json!({ "words": nonzero.len() })),
        Some(w) => Check::fail("reduced words are distinct with a leading coefficient", w),
    });
    let sigma_of = |p: &TProj| memo.get(p).copied().or_else(|| lat.sigma(p).ok());
    let down: Vec<TProj> = lat.idempotents().iter().map(|&f| lat.down_set(f).expect("lattice idempotent")).collect();

    // upper bounds of a word are exactly the upper bounds of its lead
    let mut bad = None;
    'upper: for (w, p) in &nonzero {
        if sigma_of(p) != Some(w.lead) {
            bad = Some(format!("{w:?}: leading coefficient {:?}", sigma_of(p)));
            break;
        }
        for (i, &f) in lat.idempotents().iter().enumerate() {
            if p.leq(&down[i]) != (g.mul(w.lead, f) == w.lead) {
                bad = Some(format!("{w:?}, f={f}"));
                break 'upper;
            }
        }
    }
    out.push(Check::expect("f ≥ p iff f ≥ lead(p)", bad.is_none(), || bad.unwrap()));

    let bad = nonzero.iter().find(|(_, p)| match sigma_of(p) {
        Some(s) => !p.leq(&down[lat.local(s).expect("σ lands in the lattice")]),
        None => true,
    });
    out.push(Check::expect("σ(p) ≥ p", bad.is_none(), || format!("{:?}", bad.unwrap().0)));

    // conjugation: atom images, then words letter by letter
    let members = sub.members();
    let conj_atoms: Vec<Vec<TProj>> = members
        .iter()
        .map(|&x| {
            (0..n)
                .map(|a| lat.conjugate(x, &TProj::singleton(n, a), &lat).expect("conjugates of lattice words"))
                .collect()
        })
        .collect();
    let mut bad = None;
    'conj: for (k, &x) in members.iter().enumerate() {
        for (w, p) in &nonzero {
            let atomwise = p.atoms().fold(lat.zero(), |acc, a| acc.join(&conj_atoms[k][a]));
            let wordwise = lat.word_to_atoms(&w.conjugate(x, g)).expect("conjugates stay in the lattice");
            if atomwise != wordwise {
                bad = Some(format!("g={x}, {w:?}: atomwise {atomwise:?}, wordwise {wordwise:?}"));
                break 'conj;
            }
            if !wordwise.is_zero() {
                let s = sigma_of(p).expect("nonzero words have σ");
                if sigma_of(&wordwise) != Some(g.conj(x, s)) {
                    bad = Some(format!("g={x}, {w:?}"));
                    break 'conj;
                }
            }
        }
    }
    out.push(Check::expect("σ(g p g*) = g σ(p) g*", bad.is_none(), || bad.unwrap()));

    let mut bad = None;
    let (mut checked, mut outside, mut outside_fail) = (0usize, 0usize, 0usize);
    for (k, &x) in members.iter().enumerate() {
        let dom = g.domain_idem(x);
        for (a, &e) in lat.idempotents().iter().enumerate() {
            let image = &conj_atoms[k][a];
            let expected = lat.atom(g.conj(x, e)).expect("conjugates of idempotents stay in H");
            if g.mul(e, dom) == e {
                checked += 1;
                if *image != expected && bad.is_none() {
                    bad = Some(format!("h={x}, e={e}"));
                }
            } else {
                outside += 1;
                outside_fail += usize::from(*image != expected);
            }
        }
    }
    let name = "atom of heh* is h·atom(e)·h* for e ≤ h*h";
    out.push(match bad {
        None => Check::pass(name)
            .with_detail(json!({ "checked": checked, "outside_domain": outside, "outside_domain_unequal": outside_fail })),
        Some(w) => Check::fail(name, w),
    });

    // partition of unity over H/H
    let local = CosetTable::new(&sub.isg, &full_sub(&sub.isg));
    out.push(match local {
        Err(e) => Check::fail("atoms over H/H partition the unit", e.to_string()),
        Ok(cosets) => {
            let mut acc = lat.zero();
            let mut bad = None;
            for &r in cosets.reps() {
                let r = sub.to_host(r);
                let atom = lat.atom(g.range_idem(r)).expect("range idempotents lie in H");
                if !acc.is_disjoint(&atom) {
                    bad.get_or_insert(format!("range of {r} overlaps an earlier class"));
                }
                acc = acc.join(&atom);
            }
            if acc != lat.top() || cosets.len() != n {
                bad.get_or_insert(format!("{} classes cover {:?}", cosets.len(), acc));
            }
            Check::expect("atoms over H/H partition the unit", bad.is_none(), || bad.unwrap())
        }
    });

    // σ is multiplicative on all pairs of reduced words
    let mut bad = None;
    let mut pairs = 0usize;
    'pairs: for (i, (_, p)) in nonzero.iter().enumerate() {
        let sp = sigma_of(p).expect("nonzero words have σ");
        for (_, q) in &nonzero[i..] {
            let m = p.meet(q);
            if m.is_zero() {
                continue;
            }
            pairs += 1;
            let sq = memo[q];
            match memo.get(&m) {
                Some(&s) if s == g.mul(sp, sq) => {}
                Some(&s) => {
                    bad = Some(format!("σ({p:?}·{q:?}) = {s}, σ(p)σ(q) = {}", g.mul(sp, sq)));
                    break 'pairs;
                }
                None => {
                    bad = Some(format!("{p:?}·{q:?} is not a word projection"));
                    break 'pairs;
                }
            }
        }
    }
    out.push(match bad {
        None => Check::pass("σ(pq) = σ(p)σ(q)").with_detail(json!({ "pairs": pairs })),
        Some(w) => Check::fail("σ(pq) = σ(p)σ(q)", w),
    });
    out
}

fn delta_suite(inst: &Instance, a: &GAlgebra) -> Result<Vec<Check>> {
    let (g, sub) = (&inst.g, &inst.sub);
    let cosets = CosetTable::new(g, sub)?;
    let mut out = vec![Check::from_violations("coset table", &cosets.check(g, sub))];
    let (primed, v) = delta_bijection(g, sub, &cosets);
    out.push(
        Check::from_violations("δ and δ⁻¹ are inverse and preserve equivalence", &v)
            .with_detail(json!({ "G_H": cosets.members().len(), "classes": cosets.len() })),
    );
    let ind = IndAlgebra::with_cosets(g.clone(), sub, a, cosets)?;
    out.push(
        Check::from_violations("φ is an equivariant bijection onto the primed model", &primed_comparison(g, sub, a, &ind, &primed))
            .with_detail(json!({ "induced_dim": ind.dim() })),
    );
    Ok(out)
}

#[derive(Debug, PartialEq, Eq, Serialize)]
struct Verdicts {
    induced_dim: usize,
    induced_valid: bool,
    constraint: bool,
    mu: bool,
    tau: bool,
    unit: bool,
}

fn verdicts(inst: &Instance, a: &GAlgebra, b: &GAlgebra, cosets: CosetTable) -> Result<Verdicts> {
    let (g, sub) = (&inst.g, &inst.sub);
    let ind = IndAlgebra::with_cosets(g.clone(), sub, a, cosets.clone())?;
    let mu = mu_iso(g.clone(), sub, b, Some(cosets.clone()))?;
    let tau = tau_iso(g.clone(), sub, a, b, Some(cosets.clone()))?;
    let unit = unit_iota(g.clone(), sub, a, Some(cosets))?;
    Ok(Verdicts {
        induced_dim: ind.dim(),
        induced_valid: ind.algebra.validate().is_empty(),
        constraint: ind.check_constraint().is_empty(),
        mu: mu.report.is_ok() && mu.report.bijective,
        tau: tau.report.is_ok() && tau.report.bijective,
        unit: unit.report.is_ok(),
    })
}

fn induction_suite(inst: &Instance, a: &GAlgebra, b: &GAlgebra) -> Result<Vec<Check>> {
    let (g, sub) = (&inst.g, &inst.sub);
    let mut out = vec![Check::from_violations("H-algebra is valid", &a.validate())];
    let cosets = CosetTable::new(g, sub)?;
    let ind = IndAlgebra::with_cosets(g.clone(), sub, a, cosets.clone())?;
    out.push(Check::from_violations("induced algebra is a valid G-algebra", &ind.algebra.validate()));
    out.push(Check::from_violations("induced functions satisfy the constraint", &ind.check_constraint()));

    let lat = ProjLattice::of_isg(sub.isg.clone());
    let mut expected = 0;
    for &r in cosets.reps() {
        let e = sub.to_local(g.domain_idem(r)).expect("G_H has domains in H");
        expected += act_word(&lat.atom_word(e)?, a).rank();
    }
    out.push(
        Check::expect("dimension is the sum of fibers over the transversal", ind.dim() == expected, || {
            format!("dim {} vs {expected}", ind.dim())
        })
        .with_detail(json!({ "dim": ind.dim(), "classes": cosets.len() })),
    );

    let base = verdicts(inst, a, b, cosets.clone())?;
    let rotated = verdicts(inst, a, b, cosets.rotated(g, sub))?;
    out.push(
        Check::expect("isomorphism verdicts are invariant under transversal rotation", base == rotated, || {
            format!("{base:?} vs {rotated:?}")
        })
        .with_detail(serde_json::to_value(&base).expect("verdicts serialize")),
    );
    let all = base.induced_valid && base.constraint && base.mu && base.tau && base.unit;
    out.push(Check::expect("induced structures pass their checks", all, || format!("{base:?}")));

    let doubled = GAlgebra::direct_sum(&[a, a])?;
    let id = Matrix::identity(a.dim());
    let diag = Matrix::from_columns(2 * a.dim(), &(0..a.dim()).map(|j| [id.column(j), id.column(j)].concat()).collect::<Vec<_>>());
    out.push(Check::from_violations("unit is natural for the diagonal map", &check_naturality(g.clone(), sub, a, &doubled, &diag)?));
    Ok(out)
}

fn restriction_suite(inst: &Instance, b1: &GAlgebra, b2: &GAlgebra) -> Result<Vec<Check>> {
    let sub = &inst.sub;
    let mut out = vec![Check::from_violations("G-algebra is valid", &b1.validate())];
    let r = Restriction::new(b1, sub)?;
    out.push(Check::from_violations("restriction is a valid H-algebra", &r.algebra.validate()));
    out.push(Check::from_violations("restriction matches the fibers over H", &r.cross_check(b1)));
    let rt = restriction_of_tensor(b1, b2, sub)?;
    let ok = rt.is_ok() && rt.bijective;
    out.push(Check::expect("restriction commutes with the balanced tensor", ok, || format!("{:?}", rt.violations)));
    for (k, b) in [b1, b2].into_iter().enumerate() {
        let m = fibered_model(b)?;
        out.push(
            Check::expect(format!("algebra {} is fibered", k + 1), m.is_fibered(), || format!("{:?}", m.report))
                .with_detail(json!({ "dim": b.dim(), "model_dim": m.tensor.dim() })),
        );
    }
    let t = BalancedTensor::new(b1, b2)?;
    out.push(Check::from_violations("fiberwise tensor matches the quotient construction", &t.quotient_cross_check(b1, b2)));
    Ok(out)
}

fn mu_tau_suite(inst: &Instance, a: &GAlgebra, b: &GAlgebra) -> Result<Vec<Check>> {
    let (g, sub) = (&inst.g, &inst.sub);
    let mu = mu_iso(g.clone(), sub, b, None)?;
    let tau = tau_iso(g.clone(), sub, a, b, None)?;
    let map_check = |name: &str, r: &crate::morphism::MapReport| {
        let mut c = Check::from_violations(name, &r.violations);
        if c.status == Status::Pass && !r.bijective {
            c = Check::fail(name, format!("rank {} for dimensions {} -> {}", r.rank, r.source_dim, r.target_dim));
        }
        c.with_detail(json!({ "source_dim": r.source_dim, "target_dim": r.target_dim }))
    };
    let model = fibered_model(b)?;
    Ok(vec![
        Check::expect("G-algebra is fibered", model.is_fibered(), || format!("{:?}", model.report)),
        map_check("μ is an equivariant *-isomorphism", &mu.report),
        map_check("τ is an equivariant *-isomorphism", &tau.report),
    ])
}

fn adjunction_suite(inst: &Instance, a: &GAlgebra, b: &GAlgebra) -> Result<Vec<Check>> {
    let report = triangle_identities(inst.g.clone(), &inst.sub, a, b)?;
    Ok(report.checks.iter().map(|c| Check::from_violations(c.name.clone(), &c.violations)).collect())
}

fn l2_suite(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let g = &inst.g;
    let l2 = build_l2(g.clone());
    let mut out = vec![
        Check::from_violations("ℓ²(G): orthogonality, fullness and translation bijections", &l2_checks(g)),
        Check::from_violations("ℓ²(G): module axioms, positivity and nonexpansive action", &l2.check()),
        Check::from_violations("ℓ²(G): sampled ‖hξ‖ ≤ ‖ξ‖", &sample_nonexpansive(rng, &l2, 4)),
    ];
    let cosets = CosetTable::new(g, &inst.sub)?;
    let module = build_l2_cosets(g.clone(), &cosets)?;
    out.push(
        Check::from_violations("ℓ²(G_H/H): module axioms", &module.check()).with_detail(json!({ "rank": module.dim() })),
    );
    for (name, m) in [("ℓ²(G)", &l2), ("ℓ²(G_H/H)", &module)] {
        if m.dim() <= 8 {
            let k = compacts_and_diagonal(m)?;
            out.push(
                Check::from_violations(format!("{name}: compacts and diagonal embedding"), &k.violations)
                    .with_detail(json!({ "dim": k.algebra.dim() })),
            );
        }
    }
    Ok(out)
}

fn mingo_suite(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let l2 = build_l2(inst.g.clone());
    let mut out = Vec::new();
    let id = Matrix::identity(l2.dim());
    out.push(Check::from_violations("V for the identity", &mingo_v(&l2, &l2, &id)?.violations));
    let u = random_module_unitary(rng, &l2)?;
    let r = mingo_v(&l2, &l2, &u)?;
    out.push(Check::from_violations("V for a random unitary on ℓ²(G)", &r.violations).with_detail(json!({ "dim": r.dim })));
    if l2.dim() <= 8 {
        let sum = HModule::direct_sum(&[&l2, &l2])?;
        let u = random_module_unitary(rng, &sum)?;
        let r = mingo_v(&sum, &sum, &u)?;
        out.push(
            Check::from_violations("V for a random unitary on ℓ²(G) ⊕ ℓ²(G)", &r.violations)
                .with_detail(json!({ "dim": r.dim })),
        );
    }
    Ok(out)
}

fn imprimitivity_suite(inst: &Instance, a: &GAlgebra, seed: u64) -> Result<Vec<Check>> {
    let (g, sub) = (&inst.g, &inst.sub);
    let mut out = Vec::new();
    let report = match imprimitivity_check(g.clone(), sub, a, None, seed, true) {
        Ok(r) => r,
        Err(e) => return Ok(vec![Check::fail("block counts agree", e.to_string())]),
    };
    let detail = json!({
        "induced_dim": report.induced_dim,
        "induced_blocks": report.induced_blocks.block_sizes,
        "base_blocks": report.base_blocks.block_sizes,
        "induced_radical": report.induced_blocks.radical_dim,
        "base_radical": report.base_blocks.radical_dim,
    });
    out.push(
        Check::expect("block counts agree", report.agree, || {
            format!("{} vs {}", report.induced_blocks.k0_rank, report.base_blocks.k0_rank)
        })
        .with_detail(detail),
    );
    let sane = report.induced_blocks.is_consistent()
        && report.base_blocks.is_consistent()
        && report.induced_blocks.positive
        && report.base_blocks.positive;
    out.push(Check::expect("block decompositions are consistent and positive", sane, || {
        format!("{:?} / {:?}", report.induced_blocks, report.base_blocks)
    }));
    if let Some((l, r)) = report.universal_counts {
        out.push(Check::info("universal variant block counts", json!([l, r])));
    }
    let cosets = CosetTable::new(g, sub)?.rotated(g, sub);
    match imprimitivity_check(g.clone(), sub, a, Some(cosets), seed, false) {
        Ok(rot) => out.push(Check::expect(
            "block counts are invariant under transversal rotation",
            rot.induced_blocks.k0_rank == report.induced_blocks.k0_rank,
            || format!("{} vs {}", rot.induced_blocks.k0_rank, report.induced_blocks.k0_rank),
        )),
        Err(e) => out.push(Check::fail("block counts are invariant under transversal rotation", e.to_string())),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn sigma_on_fixtures() {
        for t in run_regression(Suite::Sigma, &SuiteConfig::default(), 0) {
            assert!(t.passed(), "{}: {:?}", t.id, t.checks);
        }
    }
}

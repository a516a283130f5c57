//! Identity families checked over parameter grids.
//!
//! Each family function returns a [`FamilyReport`] with pass/fail counts.
//! Grid cells run in parallel and are merged in grid order, and every cell
//! draws from its own seeded generator, so reports are deterministic.

use std::fmt;
use std::ops::RangeInclusive;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxType, Family};
use crate::error::Result;
use crate::garside::{
    delta_squared_factored_word, delta_word, delta_word_closed_form, delta_y_word, equal,
    garside_element, relation_word, ArtinWord, Garside, Letter,
};
use crate::homology::{
    check_commuting_square, commuting_square, expected_form_rank, form_with_fork_sign, rep_apply,
    TransvectionRep,
};
use crate::homs::{
    apply, compose, cyclic, identity, make_alpha, make_bar_chi, make_bar_gamma, make_beta,
    make_chi, make_gamma, make_inner, make_iota, make_pi, make_zeta, pinch_test, same_homomorphism,
    verify_hom, HomEvaluator, HomSpec,
};
use crate::kernel::{
    in_kernel_pi, kernel_generators, lift_commutes_with_projection, lift_endomorphism, LiftError,
    LiftInput,
};

const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    pub fn new(name: impl Into<String>) -> Self {
        FamilyReport {
            name: name.into(),
            passed: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.fail(what());
        }
    }

    /// Records an `Ok(true)` as a pass; `Ok(false)` and errors as failures.
    pub fn check_result(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.fail(format!("{}: {e}", what())),
        }
    }

    fn fail(&mut self, message: String) {
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(message);
        }
    }

    fn merge(&mut self, other: FamilyReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} passed, {} failed",
            self.name, self.passed, self.failed
        )?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub families: Vec<FamilyReport>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.families.iter().all(FamilyReport::ok)
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fam) in self.families.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{fam}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub ns: RangeInclusive<usize>,
    pub ps: RangeInclusive<i64>,
    pub qs: RangeInclusive<i64>,
    pub seed: u64,
    /// Random words per `(n, p)` cell for the `γ_p` identities.
    pub random_words: usize,
    /// Rewrite round trips per `(type, n)` cell.
    pub rewrite_trials: usize,
    /// Broken lifting candidates per `n`.
    pub broken_candidates: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            ns: 4..=8,
            ps: -2..=2,
            qs: -2..=2,
            seed: 0x00a7_71f5_eed5,
            random_words: 500,
            rewrite_trials: 1000,
            broken_candidates: 20,
        }
    }
}

/// Runs every family over the configured grid.
pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let ns = cfg.ns.clone();
    let (ps, qs) = (cfg.ps.clone(), cfg.qs.clone());
    let a_ranks = 1..=cfg.ns.end().saturating_sub(1);
    SweepReport {
        families: vec![
            garside_identities(ns.clone()),
            delta_squared_factorization(a_ranks),
            hom_catalog(ns.clone(), ps.clone(), qs.clone()),
            gamma_identities(
                ns.clone(),
                ps.clone(),
                qs.clone(),
                cfg.random_words,
                cfg.seed,
            ),
            fold_images(ns.clone(), ps.clone(), qs.clone()),
            lifting(ns.clone(), cfg.broken_candidates, cfg.seed),
            kernel_words(ns.clone()),
            homology_shadow(ns.clone(), 50, cfg.seed),
            normal_form_soundness(ns.clone(), cfg.rewrite_trials, cfg.seed),
            distinguishers(ns, ps, qs, cfg.seed),
        ],
    }
}

fn run_cells<C, F>(name: &str, cells: Vec<C>, f: F) -> FamilyReport
where
    C: Sync,
    F: Fn(&C, &mut FamilyReport) + Sync,
{
    let parts: Vec<FamilyReport> = cells
        .par_iter()
        .map(|c| {
            let mut r = FamilyReport::new(name);
            f(c, &mut r);
            r
        })
        .collect();
    parts
        .into_iter()
        .fold(FamilyReport::new(name), |mut acc, r| {
            acc.merge(r);
            acc
        })
}

fn cell_rng(seed: u64, tag: &[i64]) -> StdRng {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &t in tag {
        h = (h ^ t as u64)
            .wrapping_mul(0x0100_0000_01b3)
            .rotate_left(17);
    }
    StdRng::seed_from_u64(h)
}

fn type_a(n: usize) -> CoxType {
    CoxType::a(n - 1).expect("n >= 2")
}

fn type_d(n: usize) -> CoxType {
    CoxType::d(n).expect("n >= 4")
}

fn gen(typ: CoxType, i: usize) -> ArtinWord {
    ArtinWord::generator(typ, i).expect("index within rank")
}

/// `Δ g_i Δ^{-1}` as tabulated: `s_i ↦ s_{n-i}` in `A_{n-1}`; in `D_n`
/// trivial for even `n` and swapping `t_{n-1}, t_n` for odd `n`.
fn delta_conjugate(typ: CoxType, i: usize) -> usize {
    let r = typ.rank();
    match typ.family() {
        Family::TypeA => r + 1 - i,
        Family::TypeD if r.is_multiple_of(2) => i,
        Family::TypeD if i == r - 1 => r,
        Family::TypeD if i == r => r - 1,
        Family::TypeD => i,
    }
}

/// `Δ` from its explicit word, the conjugation table and centrality of `Δ^κ`,
/// for `A_{n-1}` and `D_n`.
pub fn garside_identities(ns: RangeInclusive<usize>) -> FamilyReport {
    let cells: Vec<CoxType> = ns.flat_map(|n| [type_a(n), type_d(n)]).collect();
    run_cells("garside", cells, |&typ, r| {
        let g = Garside::new(typ);
        let closed = delta_word_closed_form(typ);
        r.check_result(
            g.normalize(&closed).map(|x| x == garside_element(typ)),
            || format!("{typ}: explicit Δ word is not τ(w_S)"),
        );
        r.check_result(
            g.normalize(&closed)
                .and_then(|x| Ok(x == g.normalize(&delta_word(typ))?)),
            || format!("{typ}: explicit Δ word differs from the canonical one"),
        );
        let central = delta_word(typ).pow(typ.kappa());
        for i in 1..=typ.rank() {
            let t = gen(typ, i);
            let conj = ArtinWord::product(typ, [&closed, &t, &closed.inverse()]);
            let expected = gen(typ, delta_conjugate(typ, i));
            r.check_result(conj.and_then(|c| equal(&c, &expected)), || {
                format!("{typ}: Δ g{i} Δ^-1 does not match the table")
            });
            let lhs = central.concat(&t);
            let rhs = t.concat(&central);
            r.check_result(lhs.and_then(|l| rhs.and_then(|rr| equal(&l, &rr))), || {
                format!("{typ}: Δ^κ does not commute with g{i}")
            });
        }
    })
}

/// `Δ[A_r]^2` against its factored expression.
pub fn delta_squared_factorization(ranks: RangeInclusive<usize>) -> FamilyReport {
    run_cells("delta_squared", ranks.collect(), |&rank, r| {
        let outcome = CoxType::a(rank).and_then(|typ| {
            let lhs = delta_word_closed_form(typ).pow(2);
            equal(&lhs, &delta_squared_factored_word(rank)?)
        });
        r.check_result(outcome, || {
            format!("A{rank}: Δ^2 differs from its factored form")
        });
    })
}

enum CatalogCell {
    Fixed(usize),
    Twist(usize, i64),
    Beta(usize, i64, i64),
}

fn images_equal(h1: &HomSpec, h2: &HomSpec) -> bool {
    h1.source() == h2.source() && h1.target() == h2.target() && h1.images() == h2.images()
}

/// Relation checks for every catalog map and the identities among them.
pub fn hom_catalog(
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<i64>,
    qs: RangeInclusive<i64>,
) -> FamilyReport {
    let mut cells = Vec::new();
    for n in ns {
        cells.push(CatalogCell::Fixed(n));
        for p in ps.clone() {
            cells.push(CatalogCell::Twist(n, p));
            for q in qs.clone() {
                cells.push(CatalogCell::Beta(n, p, q));
            }
        }
    }
    run_cells("hom_catalog", cells, |cell, r| {
        if let Err(e) = catalog_cell(cell, r) {
            r.fail(format!("construction failed: {e}"));
        }
    })
}

fn catalog_cell(cell: &CatalogCell, r: &mut FamilyReport) -> Result<()> {
    match *cell {
        CatalogCell::Fixed(n) => {
            let (pi, iota, zeta, chi) = (make_pi(n)?, make_iota(n)?, make_zeta(n)?, make_chi(n)?);
            for h in [&pi, &iota, &zeta, &chi, &make_bar_chi(n)?] {
                r.check(verify_hom(h), || {
                    format!("n={n}: {} fails a relation", h.label())
                });
            }
            let (id_a, id_d) = (identity(type_a(n)), identity(type_d(n)));
            r.check_result(same_homomorphism(&compose(&pi, &iota)?, &id_a), || {
                format!("n={n}: π∘ι is not the identity")
            });
            r.check(images_equal(&make_alpha(n, 0)?, &pi), || {
                format!("n={n}: α_0 ≠ π")
            });
            r.check(images_equal(&make_beta(n, 0, 0)?, &iota), || {
                format!("n={n}: β_0,0 ≠ ι")
            });
            r.check(images_equal(&make_gamma(n, 0)?, &id_d), || {
                format!("n={n}: γ_0 ≠ id")
            });
            for (h, name) in [(&zeta, "ζ"), (&chi, "χ")] {
                r.check_result(same_homomorphism(&compose(h, h)?, &id_d), || {
                    format!("n={n}: {name}² is not the identity")
                });
            }
            r.check_result(
                same_homomorphism(&compose(&zeta, &chi)?, &compose(&chi, &zeta)?),
                || format!("n={n}: ζχ ≠ χζ"),
            );
            if n % 2 == 1 {
                let ad = make_inner(&delta_word(type_d(n)));
                r.check_result(same_homomorphism(&zeta, &ad), || {
                    format!("n={n}: ζ is not conjugation by Δ")
                });
            }
        }
        CatalogCell::Twist(n, p) => {
            let (alpha, gamma, bar_gamma) =
                (make_alpha(n, p)?, make_gamma(n, p)?, make_bar_gamma(n, p)?);
            for h in [&alpha, &gamma, &bar_gamma] {
                r.check(verify_hom(h), || {
                    format!("n={n}: {} fails a relation", h.label())
                });
            }
            r.check_result(
                same_homomorphism(&alpha, &compose(&bar_gamma, &make_pi(n)?)?),
                || format!("n={n}: α_{p} ≠ γ̄_{p}∘π"),
            );
        }
        CatalogCell::Beta(n, p, q) => {
            let beta = make_beta(n, p, q)?;
            r.check(verify_hom(&beta), || {
                format!("n={n}: {} fails a relation", beta.label())
            });
        }
    }
    Ok(())
}

/// `γ_p(u) = u Δ^{κ p z(u)}` on random words, the scaling of `z` under `γ_p`,
/// `z(Δ) = n(n-1)` and `γ_p(Δ^q) = Δ^{q(1 + κ p n(n-1))}`.
pub fn gamma_identities(
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<i64>,
    qs: RangeInclusive<i64>,
    samples: usize,
    seed: u64,
) -> FamilyReport {
    let cells: Vec<(usize, i64)> = ns.flat_map(|n| ps.clone().map(move |p| (n, p))).collect();
    run_cells("gamma_twist", cells, |&(n, p), r| {
        let d = type_d(n);
        let (kappa, nn) = (d.kappa(), (n * (n - 1)) as i64);
        let gamma = make_gamma(n, p).expect("valid rank");
        let eval = HomEvaluator::new(&gamma);
        let g = eval.garside();
        let mut rng = cell_rng(seed, &[4, n as i64, p]);
        for _ in 0..samples {
            let len = rng.gen_range(0..=16);
            let u = random_word(&mut rng, d, len);
            let z = u.exponent_sum();
            let lhs = eval.evaluate(&u);
            let rhs = g
                .normalize(&u)
                .and_then(|x| g.multiply(&x, &g.delta_power(kappa * p * z)));
            r.check(matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b), || {
                format!("D{n}, p={p}: γ_p({u}) ≠ u Δ^(κpz)")
            });
            let scaled = apply(&gamma, &u).map(|w| w.exponent_sum());
            r.check(scaled.ok() == Some((1 + nn * kappa * p) * z), || {
                format!("D{n}, p={p}: z(γ_p({u})) is not scaled by 1 + n(n-1)κp")
            });
        }
        r.check(delta_word(d).exponent_sum() == nn, || {
            format!("D{n}: z(Δ) ≠ n(n-1)")
        });
        for q in qs.clone() {
            let image = eval.evaluate(&delta_word(d).pow(q));
            let expected = g.delta_power(q * (1 + kappa * p * nn));
            r.check(image.ok() == Some(expected), || {
                format!("D{n}, p={p}: γ_p(Δ^{q}) is not the predicted power of Δ")
            });
        }
    })
}

/// `π(Δ[D_n]) = Δ[A_{n-1}]^2` and
/// `β_{p,q}(Δ[A_{n-1}]^{2κ}) = Δ_Y^{2κ(1 + p n(n-1))} Δ^{κ² q n(n-1)}`.
pub fn fold_images(
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<i64>,
    qs: RangeInclusive<i64>,
) -> FamilyReport {
    let mut cells: Vec<(usize, Option<(i64, i64)>)> = Vec::new();
    for n in ns {
        cells.push((n, None));
        for p in ps.clone() {
            for q in qs.clone() {
                cells.push((n, Some((p, q))));
            }
        }
    }
    run_cells("delta_images", cells, |&(n, pq), r| {
        let (a, d) = (type_a(n), type_d(n));
        match pq {
            None => {
                let pi = HomEvaluator::new(&make_pi(n).expect("valid rank"));
                let image = pi.evaluate(&delta_word(d));
                r.check(image.ok() == Some(pi.garside().delta_power(2)), || {
                    format!("n={n}: π(Δ[D_n]) ≠ Δ[A_(n-1)]²")
                });
            }
            Some((p, q)) => {
                let (kappa, nn) = (d.kappa(), (n * (n - 1)) as i64);
                let beta = HomEvaluator::new(&make_beta(n, p, q).expect("valid rank"));
                let g = beta.garside();
                let lhs = beta.evaluate(&delta_word(a).pow(2 * kappa));
                let rhs = delta_y_word(d).and_then(|dy| {
                    let dy = g.normalize(&dy)?;
                    let y_part = g.power(&dy, 2 * kappa * (1 + p * nn))?;
                    g.multiply(&y_part, &g.delta_power(kappa * kappa * q * nn))
                });
                r.check(matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y), || {
                    format!("n={n}, p={p}, q={q}: β_p,q(Δ^2κ) does not match")
                });
            }
        }
    })
}

fn lifting_candidates(n: usize, rng: &mut StdRng) -> Result<Vec<HomSpec>> {
    let d = type_d(n);
    let (zeta, chi) = (make_zeta(n)?, make_chi(n)?);
    let g = random_word(rng, d, 6);
    let inner = make_inner(&g);
    Ok(vec![
        identity(d),
        compose(&zeta, &chi)?,
        make_inner(&delta_word(d)),
        compose(&zeta, &inner)?,
        compose(&inner, &chi)?,
        make_gamma(n, 1)?,
        zeta,
        chi,
        inner,
    ])
}

fn perturb(h: &HomSpec, ks: &[i64]) -> Result<LiftInput> {
    let d = h.source();
    let kappa = d.kappa();
    let delta = delta_word(d);
    let images = h
        .images()
        .iter()
        .zip(ks)
        .map(|(w, &k)| w.concat(&delta.pow(kappa * k)))
        .collect::<Result<Vec<_>>>()?;
    LiftInput::new(d.rank(), images)
}

/// Lifting succeeds with a verified result on endomorphisms and their
/// `Δ^κ`-perturbations, and fails on candidates whose images have
/// incompatible exponent sums.
pub fn lifting(ns: RangeInclusive<usize>, broken: usize, seed: u64) -> FamilyReport {
    run_cells("lifting", ns.collect(), |&n, r| {
        let mut rng = cell_rng(seed, &[6, n as i64]);
        let candidates = match lifting_candidates(n, &mut rng) {
            Ok(c) => c,
            Err(e) => return r.fail(format!("D{n}: candidates: {e}")),
        };
        for h in &candidates {
            let exact = LiftInput::from_homspec(h).map_err(LiftError::from);
            let lifted = exact.and_then(|input| lift_endomorphism(&input));
            r.check(
                matches!(&lifted, Ok(l) if l.corrections.iter().all(|&k| k == 0)),
                || format!("D{n}: {} does not lift to itself: {lifted:?}", h.label()),
            );
            for _ in 0..3 {
                let ks: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                let outcome = perturb(h, &ks).map(|input| {
                    let lift = lift_endomorphism(&input);
                    match lift {
                        Ok(l) => {
                            verify_hom(&l.hom)
                                && lift_commutes_with_projection(&l.hom, &input).unwrap_or(false)
                        }
                        Err(_) => false,
                    }
                });
                r.check_result(outcome, || {
                    format!("D{n}: {} perturbed by {ks:?} fails to lift", h.label())
                });
            }
        }
        // all images of a homomorphism are conjugate, so they share an
        // exponent sum, which Δ^κ shifts by multiples of κn(n-1) > 3
        let d = type_d(n);
        for _ in 0..broken {
            let h = &candidates[rng.gen_range(0..candidates.len())];
            let j = rng.gen_range(0..n);
            let e = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let s = rng.gen_range(1..=n);
            let ks: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let outcome = perturb(h, &ks).and_then(|mut input| {
                let twist = gen(d, s).pow(e);
                input.candidate_images[j] = input.candidate_images[j].concat(&twist)?;
                Ok(lift_endomorphism(&input))
            });
            r.check(
                matches!(
                    outcome,
                    Ok(Err(LiftError::NotCentral(..) | LiftError::RelationFails(..)))
                ),
                || {
                    format!(
                        "D{n}: broken {} (image {} times t{s}^{e}) was lifted",
                        h.label(),
                        j + 1
                    )
                },
            );
        }
    })
}

/// The recursive generators of `Ker(π)` lie in the kernel.
pub fn kernel_words(ns: RangeInclusive<usize>) -> FamilyReport {
    run_cells("kernel", ns.collect(), |&n, r| match kernel_generators(n) {
        Ok(list) => {
            r.check(list.gens.len() == n - 1, || {
                format!("D{n}: expected n-1 generators")
            });
            for (i, v) in list.gens.iter().enumerate() {
                r.check_result(in_kernel_pi(v), || format!("D{n}: v_{} ∉ Ker(π)", i + 1));
            }
        }
        Err(e) => r.fail(format!("D{n}: {e}")),
    })
}

/// Braid and commutation relations among the transvection matrices, form
/// preservation and rewrite invariance on random words, and the square
/// between the two representations (with its sign-flipped guard).
pub fn homology_shadow(ns: RangeInclusive<usize>, samples: usize, seed: u64) -> FamilyReport {
    let cells: Vec<(usize, bool)> = ns.flat_map(|n| [(n, false), (n, true)]).collect();
    run_cells("homology", cells, |&(n, is_d), r| {
        let typ = if is_d { type_d(n) } else { type_a(n) };
        let rep = TransvectionRep::new(typ);
        let failing = rep.failing_relations();
        r.check(failing.is_empty(), || {
            format!("{typ}: relations fail: {failing:?}")
        });
        r.check(rep.form().rank() == expected_form_rank(typ), || {
            format!("{typ}: unexpected form rank")
        });
        for m in rep.gen_matrices() {
            r.check(rep.form().preserved_by(m), || {
                format!("{typ}: generator breaks the form")
            });
        }
        let mut rng = cell_rng(seed, &[8, n as i64, is_d as i64]);
        for _ in 0..samples {
            let len = rng.gen_range(0..=12);
            let w = random_word(&mut rng, typ, len);
            let w2 = random_rewrites(&mut rng, &w, 4);
            let (m, m2) = (rep_apply(&rep, &w), rep_apply(&rep, &w2));
            r.check(matches!(&m, Ok(m) if rep.form().preserved_by(m)), || {
                format!("{typ}: {w} does not preserve the form")
            });
            r.check(matches!((&m, &m2), (Ok(a), Ok(b)) if a == b), || {
                format!("{typ}: {w} and its rewrite {w2} act differently")
            });
        }
        if is_d {
            r.check_result(check_commuting_square(n), || {
                format!("D{n}: square does not commute")
            });
            let flipped = TransvectionRep::with_form(typ, form_with_fork_sign(typ, -1));
            r.check_result(
                flipped.and_then(|f| commuting_square(&f).map(|ok| !ok)),
                || format!("D{n}: flipped fork orientation still commutes"),
            );
        }
    })
}

/// Random relation rewrites preserve the normal form, and normal forms are
/// fixed by re-normalization.
pub fn normal_form_soundness(ns: RangeInclusive<usize>, trials: usize, seed: u64) -> FamilyReport {
    let cells: Vec<(usize, bool)> = ns.flat_map(|n| [(n, false), (n, true)]).collect();
    run_cells("nf_soundness", cells, |&(n, is_d), r| {
        let typ = if is_d { type_d(n) } else { type_a(n) };
        let g = Garside::new(typ);
        let mut rng = cell_rng(seed, &[9, n as i64, is_d as i64]);
        for _ in 0..trials {
            let len = rng.gen_range(0..=20);
            let w = random_word(&mut rng, typ, len);
            let steps = rng.gen_range(1..=6);
            let w2 = random_rewrites(&mut rng, &w, steps);
            let (nf, nf2) = (g.normalize(&w), g.normalize(&w2));
            r.check(matches!((&nf, &nf2), (Ok(a), Ok(b)) if a == b), || {
                format!("{typ}: {w} and its rewrite {w2} normalize differently")
            });
            if let Ok(nf) = nf {
                let again = g.normalize(&nf.to_word());
                r.check(nf.is_valid() && again.ok() == Some(nf), || {
                    format!("{typ}: normal form of {w} is not a fixed point")
                });
            }
        }
    })
}

/// `pinch_test` holds on `ψ∘β_{p,q}∘π` and cyclic assignments, and fails on `ψ∘γ_p`.
pub fn distinguishers(
    ns: RangeInclusive<usize>,
    ps: RangeInclusive<i64>,
    qs: RangeInclusive<i64>,
    seed: u64,
) -> FamilyReport {
    let cells: Vec<(usize, i64)> = ns.flat_map(|n| ps.clone().map(move |p| (n, p))).collect();
    run_cells("distinguishers", cells, |&(n, p), r| {
        let mut rng = cell_rng(seed, &[10, n as i64, p]);
        if let Err(e) = distinguisher_cell(n, p, qs.clone(), &mut rng, r) {
            r.fail(format!("D{n}, p={p}: {e}"));
        }
    })
}

fn distinguisher_cell(
    n: usize,
    p: i64,
    qs: RangeInclusive<i64>,
    rng: &mut StdRng,
    r: &mut FamilyReport,
) -> Result<()> {
    let d = type_d(n);
    let (zeta, chi) = (make_zeta(n)?, make_chi(n)?);
    let inner = make_inner(&random_word(rng, d, 5));
    let psis = [identity(d), compose(&zeta, &chi)?, zeta, chi, inner];
    let pi = make_pi(n)?;
    for psi in &psis {
        for q in qs.clone() {
            let h = compose(psi, &compose(&make_beta(n, p, q)?, &pi)?)?;
            r.check_result(pinch_test(&h), || {
                format!("D{n}: {} does not pinch", h.label())
            });
        }
        let h = compose(psi, &make_gamma(n, p)?)?;
        r.check_result(pinch_test(&h).map(|x| !x), || {
            format!("D{n}: {} pinches", h.label())
        });
    }
    for target in [d, type_a(n)] {
        let len = rng.gen_range(0..=6);
        let h = cyclic(d, &random_word(rng, target, len));
        r.check_result(pinch_test(&h), || {
            format!("D{n}: cyclic map into {target} does not pinch")
        });
    }
    Ok(())
}

/// Uniform random word of the given length.
pub fn random_word<R: Rng>(rng: &mut R, typ: CoxType, len: usize) -> ArtinWord {
    let letters = (0..len)
        .map(|_| {
            let g = typ
                .generator(rng.gen_range(1..=typ.rank()))
                .expect("index within rank");
            if rng.gen_bool(0.5) {
                Letter::pos(g)
            } else {
                Letter::neg(g)
            }
        })
        .collect();
    ArtinWord::new(typ, letters).expect("indices within rank")
}

/// Applies `steps` random rewrites, each by a defining relation or a free
/// cancellation, so the result represents the same element.
pub fn random_rewrites<R: Rng>(rng: &mut R, w: &ArtinWord, steps: usize) -> ArtinWord {
    (0..steps).fold(w.clone(), |acc, _| random_rewrite(rng, &acc))
}

/// One random rewrite: insert `x x^{-1}`, insert a relator, replace an
/// occurrence of one side of a relation by the other, or cancel a pair.
pub fn random_rewrite<R: Rng>(rng: &mut R, w: &ArtinWord) -> ArtinWord {
    let typ = w.typ();
    let mut letters = w.letters().to_vec();
    match rng.gen_range(0..4) {
        1 => {
            let pairs = typ.relation_pairs();
            if pairs.is_empty() {
                return insert_trivial_pair(rng, w);
            }
            let (a, b, m) = pairs[rng.gen_range(0..pairs.len())];
            let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            let lhs = relation_word(typ, a, b, m as usize).expect("m >= 2");
            let rhs = relation_word(typ, b, a, m as usize).expect("m >= 2");
            let mut relator = lhs.concat(&rhs.inverse()).expect("same type");
            if rng.gen_bool(0.5) {
                relator = relator.inverse();
            }
            let at = rng.gen_range(0..=letters.len());
            letters.splice(at..at, relator.letters().iter().copied());
        }
        2 => {
            // braid moves on negative letters are positive moves on the inverse
            let invert = rng.gen_bool(0.5);
            let base = if invert { w.inverse() } else { w.clone() };
            match braid_move(rng, &base) {
                Some(moved) if invert => return moved.inverse(),
                Some(moved) => return moved,
                None => return insert_trivial_pair(rng, w),
            }
        }
        3 => {
            let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                .filter(|&i| letters[i + 1] == letters[i].inverse())
                .collect();
            if spots.is_empty() {
                return insert_trivial_pair(rng, w);
            }
            let i = spots[rng.gen_range(0..spots.len())];
            letters.drain(i..i + 2);
        }
        _ => return insert_trivial_pair(rng, w),
    }
    ArtinWord::new(typ, letters).expect("letters from the same group")
}

fn insert_trivial_pair<R: Rng>(rng: &mut R, w: &ArtinWord) -> ArtinWord {
    let typ = w.typ();
    let x = random_word(rng, typ, 1).letters()[0];
    let mut letters = w.letters().to_vec();
    let at = rng.gen_range(0..=letters.len());
    letters.splice(at..at, [x, x.inverse()]);
    ArtinWord::new(typ, letters).expect("letters from the same group")
}

/// Replaces a random positive occurrence of `Π(a, b, m)` by `Π(b, a, m)`.
fn braid_move<R: Rng>(rng: &mut R, w: &ArtinWord) -> Option<ArtinWord> {
    let typ = w.typ();
    let letters = w.letters();
    let mut spots = Vec::new();
    for (a, b, m) in typ.relation_pairs() {
        let m = m as usize;
        for (x, y) in [(a, b), (b, a)] {
            let side = relation_word(typ, x, y, m).expect("m >= 2");
            for i in 0..(letters.len() + 1).saturating_sub(m) {
                if letters[i..i + m] == *side.letters() {
                    spots.push((i, x, y, m));
                }
            }
        }
    }
    if spots.is_empty() {
        return None;
    }
    let (i, x, y, m) = spots[rng.gen_range(0..spots.len())];
    let other = relation_word(typ, y, x, m).expect("m >= 2");
    let mut out = letters.to_vec();
    out.splice(i..i + m, other.letters().iter().copied());
    Some(ArtinWord::new(typ, out).expect("letters from the same group"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewrites_preserve_the_element() {
        let mut rng = StdRng::seed_from_u64(7);
        for typ in [
            CoxType::a(1).unwrap(),
            CoxType::a(4).unwrap(),
            CoxType::d(5).unwrap(),
        ] {
            for _ in 0..200 {
                let w = random_word(&mut rng, typ, 10);
                let w2 = random_rewrites(&mut rng, &w, 5);
                assert!(equal(&w, &w2).unwrap(), "{w} vs {w2}");
            }
        }
    }

    #[test]
    fn braid_move_finds_relations() {
        let t = CoxType::d(4).unwrap();
        let w = ArtinWord::parse(t, "t1 t2 t1").unwrap();
        let mut rng = StdRng::seed_from_u64(1);
        let moved = braid_move(&mut rng, &w).unwrap();
        assert_eq!(moved.to_string(), "t2 t1 t2");
        assert!(braid_move(&mut rng, &ArtinWord::parse(t, "t1^-1 t2^-1").unwrap()).is_none());
    }

    #[test]
    fn conjugation_table() {
        let a4 = CoxType::a(4).unwrap();
        assert_eq!(
            (1..=4).map(|i| delta_conjugate(a4, i)).collect::<Vec<_>>(),
            [4, 3, 2, 1]
        );
        let d5 = CoxType::d(5).unwrap();
        assert_eq!(
            (1..=5).map(|i| delta_conjugate(d5, i)).collect::<Vec<_>>(),
            [1, 2, 3, 5, 4]
        );
        let d6 = CoxType::d(6).unwrap();
        assert_eq!(
            (1..=6).map(|i| delta_conjugate(d6, i)).collect::<Vec<_>>(),
            [1, 2, 3, 4, 5, 6]
        );
    }

    #[test]
    fn small_sweep_passes() {
        let cfg = SweepConfig {
            ns: 4..=5,
            ps: -1..=1,
            qs: -1..=1,
            random_words: 20,
            rewrite_trials: 30,
            broken_candidates: 5,
            ..SweepConfig::default()
        };
        let report = run_sweep(&cfg);
        assert_eq!(report.families.len(), 10);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report, run_sweep(&cfg));
    }

    #[test]
    fn report_rendering() {
        let mut r = FamilyReport::new("demo");
        r.check(true, String::new);
        assert_eq!(r.to_string(), "PASS demo: 1 passed, 0 failed");
        r.check(false, || "broken".to_string());
        assert_eq!(r.to_string(), "FAIL demo: 1 passed, 1 failed\n    broken");
        assert!(!FamilyReport::new("empty").ok());
    }
}

//! The split extension `1 → Ker(π) → A[D_n] → A[A_{n-1}] → 1` and lifting
//! of endomorphisms of the central quotient `A[D_n] / ⟨Δ^κ⟩`.

use thiserror::Error;

use crate::coxeter::CoxType;
use crate::error::{Error, Result};
use crate::garside::{delta_word, equal_mod_center, ArtinWord, Garside, NormalForm};
use crate::homs::{failing_relations, make_pi, HomEvaluator, HomSpec};

/// Whether `π(w)` is trivial.
pub fn in_kernel_pi(w: &ArtinWord) -> Result<bool> {
    let typ = w.typ();
    if !typ.is_type_d() {
        return Err(Error::NotTypeD(typ));
    }
    let pi = HomEvaluator::new(&make_pi(typ.rank())?);
    Ok(pi.evaluate(w)?.is_identity())
}

/// Words `v_1, …, v_{n-1}` generating `Ker(π)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGeneratorList {
    pub n: usize,
    pub gens: Vec<ArtinWord>,
}

/// `v_{n-1} = t_{n-1}^{-1} t_n` and `v_{n-i} = t_{n-i} v_{n-i+1} t_{n-i}^{-1} v_{n-i+1}^{-1}`.
pub fn kernel_generators(n: usize) -> Result<KernelGeneratorList> {
    let d = CoxType::d(n)?;
    let mut gens = vec![ArtinWord::from_signed(d, &[-(n as i64 - 1), n as i64])?];
    for i in 2..n {
        let t = ArtinWord::generator(d, n - i)?;
        let prev = gens.last().expect("seeded");
        let next = ArtinWord::product(d, [&t, prev, &t.inverse(), &prev.inverse()])?;
        gens.push(next);
    }
    gens.reverse();
    Ok(KernelGeneratorList { n, gens })
}

/// `Some(k)` iff `rhs^{-1} · lhs = Δ^{κk}`.
pub fn central_defect(lhs: &ArtinWord, rhs: &ArtinWord) -> Result<Option<i64>> {
    rhs.check_type(lhs.typ())?;
    if !lhs.typ().is_type_d() {
        return Err(Error::NotTypeD(lhs.typ()));
    }
    let g = Garside::new(lhs.typ());
    let quotient = g.multiply(&g.inverse(&g.normalize(rhs)?)?, &g.normalize(lhs)?)?;
    Ok(quotient.center_membership())
}

/// Candidate images `g_1, …, g_n` in `A[D_n]` of the generators of the
/// central quotient, each lifted arbitrarily.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftInput {
    pub n: usize,
    pub candidate_images: Vec<ArtinWord>,
}

impl LiftInput {
    pub fn new(n: usize, candidate_images: Vec<ArtinWord>) -> Result<Self> {
        let d = CoxType::d(n)?;
        if candidate_images.len() != n {
            return Err(Error::ImageCount {
                expected: n,
                found: candidate_images.len(),
            });
        }
        for w in &candidate_images {
            w.check_type(d)?;
        }
        Ok(LiftInput {
            n,
            candidate_images,
        })
    }

    /// Reads a spec with `source = target = D<n>`.
    pub fn from_homspec(spec: &HomSpec) -> Result<Self> {
        if !spec.source().is_type_d() {
            return Err(Error::NotTypeD(spec.source()));
        }
        if spec.target() != spec.source() {
            return Err(Error::TypeMismatch {
                expected: spec.source(),
                found: spec.target(),
            });
        }
        LiftInput::new(spec.source().rank(), spec.images().to_vec())
    }

    pub fn to_homspec(&self) -> HomSpec {
        let d = CoxType::d(self.n).expect("validated at construction");
        HomSpec::new(d, d, self.candidate_images.clone(), "candidate").expect("validated")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    /// The braid relation between `t_i` and `t_j` fails even modulo the center.
    #[error("relation t{0} t{1} t{0} = t{1} t{0} t{1} fails modulo the center")]
    NotCentral(usize, usize),
    /// After correction, the relation between `t_i` and `t_j` still fails.
    #[error("relation between t{0} and t{1} fails after correction")]
    RelationFails(usize, usize),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// A successful lift and the exponents `k_i` with `u_i = g_i Δ^{κ k_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub hom: HomSpec,
    pub corrections: Vec<i64>,
}

/// Lifts an endomorphism of the central quotient to `A[D_n]`.
///
/// `u_1 = g_1`; for `2 ≤ i ≤ n-2` the braid relation with `u_{i-1}` fixes
/// `k_i`, and `u_{n-1}`, `u_n` are each corrected against `u_{n-2}`. The
/// result is checked against every relation, commuting ones included.
pub fn lift_endomorphism(input: &LiftInput) -> Result<Lift, LiftError> {
    let n = input.n;
    let d = CoxType::d(n)?;
    let kappa = d.kappa();
    let garside = Garside::new(d);
    let g: Vec<NormalForm> = input
        .candidate_images
        .iter()
        .map(|w| garside.normalize(w))
        .collect::<Result<_>>()?;

    let mut u: Vec<NormalForm> = Vec::with_capacity(n);
    let mut corrections = vec![0i64; n];
    u.push(g[0].clone());
    // (index to correct, anchor index), 0-based
    let schedule = (1..n - 2)
        .map(|i| (i, i - 1))
        .chain([(n - 2, n - 3), (n - 1, n - 3)]);
    for (i, anchor) in schedule {
        let a = &u[anchor];
        let lhs = product(&garside, &[a, &g[i], a]);
        let rhs = product(&garside, &[&g[i], a, &g[i]]);
        let quotient = garside.multiply(&garside.inverse(&rhs)?, &lhs)?;
        let k = quotient
            .center_membership()
            .ok_or(LiftError::NotCentral(anchor + 1, i + 1))?;
        corrections[i] = k;
        let corrected = garside.multiply(&g[i], &garside.delta_power(kappa * k))?;
        u.push(corrected);
    }

    let delta = delta_word(d);
    let images: Vec<ArtinWord> = input
        .candidate_images
        .iter()
        .zip(&corrections)
        .map(|(w, &k)| {
            if k == 0 {
                w.clone()
            } else {
                w.concat(&delta.pow(kappa * k)).expect("same type")
            }
        })
        .collect();
    let hom = HomSpec::new(d, d, images, "lift")?;
    if let Some((a, b)) = failing_relations(&hom).first() {
        return Err(LiftError::RelationFails(a.index(), b.index()));
    }
    Ok(Lift { hom, corrections })
}

fn product(g: &Garside, parts: &[&NormalForm]) -> NormalForm {
    let mut out = NormalForm::identity(g.typ());
    for p in parts {
        g.multiply_into(&mut out, p);
    }
    out
}

/// Whether `h(t_i)` and the candidate `g_i` agree modulo the center for every `i`.
pub fn lift_commutes_with_projection(h: &HomSpec, input: &LiftInput) -> Result<bool> {
    let d = CoxType::d(input.n)?;
    if h.source() != d || h.target() != d {
        return Err(Error::TypeMismatch {
            expected: d,
            found: h.source(),
        });
    }
    for (x, y) in h.images().iter().zip(&input.candidate_images) {
        if !equal_mod_center(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Homomorphisms between `A[D_n]` and `A[A_{n-1}]`, stored as generator images.
//!
//! A [`HomSpec`] is an assignment of one word per source generator. It
//! defines a homomorphism exactly when every defining relation of the source
//! maps to an equality in the target, which [`verify_hom`] decides with the
//! word problem.

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxType, Family, Generator};
use crate::error::{Error, Result};
use crate::garside::{
    delta_word, delta_y_word, relation_word, ArtinWord, Garside, NormalForm, Sign,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpec {
    source: CoxType,
    target: CoxType,
    images: Vec<ArtinWord>,
    label: String,
}

impl HomSpec {
    pub fn new(
        source: CoxType,
        target: CoxType,
        images: Vec<ArtinWord>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::ImageCount {
                expected: source.rank(),
                found: images.len(),
            });
        }
        for w in &images {
            w.check_type(target)?;
        }
        Ok(HomSpec {
            source,
            target,
            images,
            label: label.into(),
        })
    }

    pub fn source(&self) -> CoxType {
        self.source
    }

    pub fn target(&self) -> CoxType {
        self.target
    }

    pub fn images(&self) -> &[ArtinWord] {
        &self.images
    }

    pub fn image(&self, g: Generator) -> &ArtinWord {
        &self.images[g.index() - 1]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Serializes to the interchange format.
    pub fn to_interchange(&self) -> String {
        let file = HomSpecFile {
            source: self.source.to_string(),
            target: self.target.to_string(),
            images: self.images.iter().map(|w| w.to_string()).collect(),
            label: self.label.clone(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn from_interchange(text: &str) -> Result<Self> {
        let file: HomSpecFile =
            serde_json::from_str(text).map_err(|e| Error::Interchange(e.to_string()))?;
        let source: CoxType = file.source.parse()?;
        let target: CoxType = file.target.parse()?;
        let images = file
            .images
            .iter()
            .map(|s| ArtinWord::parse(target, s))
            .collect::<Result<Vec<_>>>()?;
        HomSpec::new(source, target, images, file.label)
    }
}

/// On-disk shape of a [`HomSpec`]: group designators and word strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomSpecFile {
    source: String,
    target: String,
    images: Vec<String>,
    label: String,
}

fn type_d(n: usize) -> Result<CoxType> {
    CoxType::d(n)
}

// A_{n-1} paired with D_n
fn type_a_for(n: usize) -> Result<CoxType> {
    if n < 4 {
        return Err(Error::RankOutOfRange {
            family: 'D',
            rank: n,
        });
    }
    CoxType::a(n - 1)
}

fn gen_word(typ: CoxType, i: usize) -> ArtinWord {
    ArtinWord::generator(typ, i).expect("index within rank")
}

fn times(typ: CoxType, parts: &[&ArtinWord]) -> ArtinWord {
    ArtinWord::product(typ, parts.iter().copied()).expect("types agree by construction")
}

/// The identity assignment on a group.
pub fn identity(typ: CoxType) -> HomSpec {
    let images = (1..=typ.rank()).map(|i| gen_word(typ, i)).collect();
    HomSpec::new(typ, typ, images, "id").expect("well-formed")
}

/// Every generator mapped to the same word `g`.
pub fn cyclic(source: CoxType, g: &ArtinWord) -> HomSpec {
    HomSpec::new(source, g.typ(), vec![g.clone(); source.rank()], "cyclic").expect("well-formed")
}

/// `π: A[D_n] → A[A_{n-1}]`, `t_i ↦ s_i` (`i ≤ n-2`), `t_{n-1}, t_n ↦ s_{n-1}`.
pub fn make_pi(n: usize) -> Result<HomSpec> {
    let (d, a) = (type_d(n)?, type_a_for(n)?);
    let images = (1..=n).map(|i| gen_word(a, i.min(n - 1))).collect();
    HomSpec::new(d, a, images, "pi")
}

/// `ι: A[A_{n-1}] → A[D_n]`, `s_i ↦ t_i`.
pub fn make_iota(n: usize) -> Result<HomSpec> {
    let (d, a) = (type_d(n)?, type_a_for(n)?);
    let images = (1..n).map(|i| gen_word(d, i)).collect();
    HomSpec::new(a, d, images, "iota")
}

/// `α_p = π` twisted by `Δ[A_{n-1}]^{2p}`.
pub fn make_alpha(n: usize, p: i64) -> Result<HomSpec> {
    let (d, a) = (type_d(n)?, type_a_for(n)?);
    let twist = delta_word(a).pow(2 * p);
    let images = (1..=n)
        .map(|i| times(a, &[&gen_word(a, i.min(n - 1)), &twist]))
        .collect();
    HomSpec::new(d, a, images, format!("alpha_{p}"))
}

/// `β_{p,q}(s_i) = t_i Δ_Y^{2p} Δ^{κq}`, `Y = {t_1, …, t_{n-1}}`.
pub fn make_beta(n: usize, p: i64, q: i64) -> Result<HomSpec> {
    let (d, a) = (type_d(n)?, type_a_for(n)?);
    let kappa = d.kappa();
    let dy = delta_y_word(d)?.pow(2 * p);
    let dz = delta_word(d).pow(kappa * q);
    let images = (1..n)
        .map(|i| times(d, &[&gen_word(d, i), &dy, &dz]))
        .collect();
    HomSpec::new(a, d, images, format!("beta_{p}_{q}"))
}

/// `γ_p(t_i) = t_i Δ^{κp}`.
pub fn make_gamma(n: usize, p: i64) -> Result<HomSpec> {
    let d = type_d(n)?;
    let twist = delta_word(d).pow(d.kappa() * p);
    let images = (1..=n)
        .map(|i| times(d, &[&gen_word(d, i), &twist]))
        .collect();
    HomSpec::new(d, d, images, format!("gamma_{p}"))
}

/// `ζ`: swaps `t_{n-1}` and `t_n`.
pub fn make_zeta(n: usize) -> Result<HomSpec> {
    let d = type_d(n)?;
    let images = (1..=n)
        .map(|i| {
            let j = match i {
                i if i == n - 1 => n,
                i if i == n => n - 1,
                i => i,
            };
            gen_word(d, j)
        })
        .collect();
    HomSpec::new(d, d, images, "zeta")
}

/// `χ(t_i) = t_i^{-1}`.
pub fn make_chi(n: usize) -> Result<HomSpec> {
    let d = type_d(n)?;
    let images = (1..=n).map(|i| gen_word(d, i).inverse()).collect();
    HomSpec::new(d, d, images, "chi")
}

/// `χ̄(s_i) = s_i^{-1}` on `A[A_{n-1}]`.
pub fn make_bar_chi(n: usize) -> Result<HomSpec> {
    let a = type_a_for(n)?;
    let images = (1..n).map(|i| gen_word(a, i).inverse()).collect();
    HomSpec::new(a, a, images, "bar_chi")
}

/// `γ̄_p(s_i) = s_i Δ^{2p}` on `A[A_{n-1}]`.
pub fn make_bar_gamma(n: usize, p: i64) -> Result<HomSpec> {
    let a = type_a_for(n)?;
    let twist = delta_word(a).pow(2 * p);
    let images = (1..n)
        .map(|i| times(a, &[&gen_word(a, i), &twist]))
        .collect();
    HomSpec::new(a, a, images, format!("bar_gamma_{p}"))
}

/// Inner automorphism `ad_g: h ↦ g h g^{-1}`.
pub fn make_inner(g: &ArtinWord) -> HomSpec {
    let typ = g.typ();
    let g_inv = g.inverse();
    let images = (1..=typ.rank())
        .map(|i| times(typ, &[g, &gen_word(typ, i), &g_inv]))
        .collect();
    HomSpec::new(typ, typ, images, "inner").expect("well-formed")
}

/// Substitutes images for letters; inverse letters get the inverted image.
pub fn apply(h: &HomSpec, w: &ArtinWord) -> Result<ArtinWord> {
    w.check_type(h.source)?;
    let inverses: Vec<ArtinWord> = h.images.iter().map(|x| x.inverse()).collect();
    let parts = w.letters().iter().map(|l| match l.sign {
        Sign::Pos => &h.images[l.generator.index() - 1],
        Sign::Neg => &inverses[l.generator.index() - 1],
    });
    ArtinWord::product(h.target, parts)
}

/// `g ∘ h`.
pub fn compose(g: &HomSpec, h: &HomSpec) -> Result<HomSpec> {
    if h.target != g.source {
        return Err(Error::TypeMismatch {
            expected: g.source,
            found: h.target,
        });
    }
    let images = h
        .images
        .iter()
        .map(|w| apply(g, w))
        .collect::<Result<Vec<_>>>()?;
    HomSpec::new(
        h.source,
        g.target,
        images,
        format!("{}.{}", g.label, h.label),
    )
}

/// Evaluates a [`HomSpec`] directly into target normal forms, with the
/// image of every generator and its inverse normalized once.
#[derive(Debug, Clone)]
pub struct HomEvaluator {
    source: CoxType,
    garside: Garside,
    images: Vec<NormalForm>,
    inverses: Vec<NormalForm>,
}

impl HomEvaluator {
    pub fn new(h: &HomSpec) -> Self {
        let garside = Garside::new(h.target);
        let images: Vec<NormalForm> = h
            .images
            .iter()
            .map(|w| garside.normalize(w).expect("image types checked"))
            .collect();
        let inverses = images
            .iter()
            .map(|x| garside.inverse(x).expect("image types checked"))
            .collect();
        HomEvaluator {
            source: h.source,
            garside,
            images,
            inverses,
        }
    }

    pub fn garside(&self) -> &Garside {
        &self.garside
    }

    /// Normal form of `h(w)`.
    pub fn evaluate(&self, w: &ArtinWord) -> Result<NormalForm> {
        w.check_type(self.source)?;
        let mut out = NormalForm::identity(self.garside.typ());
        for l in w.letters() {
            let k = l.generator.index() - 1;
            let factor = match l.sign {
                Sign::Pos => &self.images[k],
                Sign::Neg => &self.inverses[k],
            };
            self.garside.multiply_into(&mut out, factor);
        }
        Ok(out)
    }

    /// Normal form of the image of generator `g`.
    pub fn image(&self, g: Generator) -> &NormalForm {
        &self.images[g.index() - 1]
    }
}

/// Source relations `(a, b)` whose images are not equal.
pub fn failing_relations(h: &HomSpec) -> Vec<(Generator, Generator)> {
    let eval = HomEvaluator::new(h);
    h.source
        .relation_pairs()
        .into_iter()
        .filter(|&(a, b, m)| {
            let lhs = relation_word(h.source, a, b, m as usize).expect("m >= 2");
            let rhs = relation_word(h.source, b, a, m as usize).expect("m >= 2");
            eval.evaluate(&lhs).expect("source word") != eval.evaluate(&rhs).expect("source word")
        })
        .map(|(a, b, _)| (a, b))
        .collect()
}

/// Whether the assignment respects every defining relation of the source.
pub fn verify_hom(h: &HomSpec) -> bool {
    failing_relations(h).is_empty()
}

/// Whether `h(t_{n-1}) = h(t_n)`, which rules out injectivity.
pub fn pinch_test(h: &HomSpec) -> Result<bool> {
    if h.source.family() != Family::TypeD {
        return Err(Error::NotTypeD(h.source));
    }
    let n = h.source.rank();
    let g = Garside::new(h.target);
    Ok(g.normalize(&h.images[n - 2])? == g.normalize(&h.images[n - 1])?)
}

/// Generator-wise equality of images up to the word problem.
pub fn same_homomorphism(h1: &HomSpec, h2: &HomSpec) -> Result<bool> {
    check_same_types(h1, h2)?;
    let g = Garside::new(h1.target);
    for (x, y) in h1.images.iter().zip(&h2.images) {
        if g.normalize(x)? != g.normalize(y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `h2 = ad_g ∘ h1`.
pub fn is_conjugate_by(h1: &HomSpec, h2: &HomSpec, g: &ArtinWord) -> Result<bool> {
    check_same_types(h1, h2)?;
    g.check_type(h1.target)?;
    let conj = compose(&make_inner(g), h1)?;
    same_homomorphism(&conj, h2)
}

fn check_same_types(h1: &HomSpec, h2: &HomSpec) -> Result<()> {
    if h1.source != h2.source {
        return Err(Error::TypeMismatch {
            expected: h1.source,
            found: h2.source,
        });
    }
    if h1.target != h2.target {
        return Err(Error::TypeMismatch {
            expected: h1.target,
            found: h2.target,
        });
    }
    Ok(())
}

//! Left-weighted Garside normal form `Δ^k · x_1 ⋯ x_ℓ`.
//!
//! Each `x_i` is a simple element `τ(w)` stored as its Coxeter image `w`,
//! with `w ∉ {1, w_S}`. A pair `(x, y)` is left-weighted when every left
//! descent of `y` is a right descent of `x`. Normal forms are unique, so
//! equality of group elements is structural equality.
//!
//! Words are normalized letter by letter: a positive letter is appended as
//! a simple factor and the new tail is left-weighted right to left by
//! moving single letters from the right factor into the left one; a
//! negative letter `t^{-1}` is rewritten as `Δ^{-1} τ(w_S t)`, where the
//! `Δ^{-1}` moves to the front by conjugating every factor with `w_S`.

use std::fmt;

use crate::coxeter::{longest_element, CoxElement, CoxType};
use crate::error::{Error, Result};
use crate::garside::word::{tau, ArtinWord, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    typ: CoxType,
    delta_power: i64,
    factors: Vec<CoxElement>,
}

/// Precomputed data for one group: `w_S`, and `w_S s` for every generator.
#[derive(Debug, Clone)]
pub struct Garside {
    typ: CoxType,
    longest: CoxElement,
    // conjugation by w_S is trivial (D_n, n even)
    central_longest: bool,
    complements: Vec<CoxElement>,
}

impl Garside {
    pub fn new(typ: CoxType) -> Self {
        let longest = longest_element(typ);
        let central_longest = typ.generators().all(|s| {
            CoxElement::generator(typ, s).conjugate_by_longest(&longest)
                == CoxElement::generator(typ, s)
        });
        let complements = typ
            .generators()
            .map(|s| {
                let mut c = longest.clone();
                c.mul_generator_right(s);
                c
            })
            .collect();
        Garside {
            typ,
            longest,
            central_longest,
            complements,
        }
    }

    pub fn typ(&self) -> CoxType {
        self.typ
    }

    pub fn longest(&self) -> &CoxElement {
        &self.longest
    }

    pub fn normalize(&self, word: &ArtinWord) -> Result<NormalForm> {
        word.check_type(self.typ)?;
        let mut nf = NormalForm::identity(self.typ);
        for letter in word.letters() {
            let g = letter.generator;
            match letter.sign {
                Sign::Pos => self.push_simple(&mut nf, CoxElement::generator(self.typ, g)),
                Sign::Neg => {
                    // t^{-1} = Δ^{-1} τ(w_S t)
                    self.right_mul_delta(&mut nf, -1);
                    self.push_simple(&mut nf, self.complements[g.index() - 1].clone());
                }
            }
        }
        Ok(nf)
    }

    pub fn multiply(&self, u: &NormalForm, v: &NormalForm) -> Result<NormalForm> {
        self.check(u)?;
        self.check(v)?;
        let mut out = u.clone();
        self.right_mul_delta(&mut out, v.delta_power);
        for x in &v.factors {
            self.push_simple(&mut out, x.clone());
        }
        Ok(out)
    }

    /// `u ← u · v` in place.
    pub fn multiply_into(&self, u: &mut NormalForm, v: &NormalForm) {
        debug_assert_eq!(u.typ, v.typ);
        self.right_mul_delta(u, v.delta_power);
        for x in &v.factors {
            self.push_simple(u, x.clone());
        }
    }

    pub fn inverse(&self, u: &NormalForm) -> Result<NormalForm> {
        self.check(u)?;
        let mut out = NormalForm::identity(self.typ);
        for x in u.factors.iter().rev() {
            // τ(x)^{-1} = Δ^{-1} τ(w_S x^{-1}), since Δ = τ(w_S x^{-1}) τ(x)
            self.right_mul_delta(&mut out, -1);
            self.push_simple(&mut out, self.longest.compose(&x.inverse()));
        }
        self.right_mul_delta(&mut out, -u.delta_power);
        Ok(out)
    }

    pub fn power(&self, u: &NormalForm, m: i64) -> Result<NormalForm> {
        self.check(u)?;
        let mut base = if m < 0 { self.inverse(u)? } else { u.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = NormalForm::identity(self.typ);
        while e > 0 {
            if e & 1 == 1 {
                self.multiply_into(&mut acc, &base);
            }
            e >>= 1;
            if e > 0 {
                let sq = base.clone();
                self.multiply_into(&mut base, &sq);
            }
        }
        Ok(acc)
    }

    /// `Δ^m`.
    pub fn delta_power(&self, m: i64) -> NormalForm {
        NormalForm {
            typ: self.typ,
            delta_power: m,
            factors: Vec::new(),
        }
    }

    fn check(&self, u: &NormalForm) -> Result<()> {
        if u.typ != self.typ {
            return Err(Error::TypeMismatch {
                expected: self.typ,
                found: u.typ,
            });
        }
        Ok(())
    }

    /// `nf ← nf · Δ^m`; moves `Δ^m` past the factors.
    fn right_mul_delta(&self, nf: &mut NormalForm, m: i64) {
        if m % 2 != 0 && !self.central_longest {
            for x in nf.factors.iter_mut() {
                *x = x.conjugate_by_longest(&self.longest);
            }
        }
        nf.delta_power += m;
    }

    /// `nf ← nf · τ(a)` for a simple `a`, restoring left-weightedness.
    fn push_simple(&self, nf: &mut NormalForm, a: CoxElement) {
        if a.is_identity() {
            return;
        }
        if a == self.longest {
            self.right_mul_delta(nf, 1);
            return;
        }
        nf.factors.push(a);
        let mut i = nf.factors.len() - 1;
        while i > 0 {
            let (head, tail) = nf.factors.split_at_mut(i);
            if !left_weight(&mut head[i - 1], &mut tail[0]) {
                break;
            }
            i -= 1;
        }
        while nf.factors.last().is_some_and(|x| x.is_identity()) {
            nf.factors.pop();
        }
        let leading = nf
            .factors
            .iter()
            .take_while(|x| **x == self.longest)
            .count();
        if leading > 0 {
            nf.factors.drain(..leading);
            nf.delta_power += leading as i64;
        }
        debug_assert!(nf
            .factors
            .iter()
            .all(|x| !x.is_identity() && *x != self.longest));
    }
}

/// Moves letters from the left end of `v` to the right end of `u` until
/// `L(v) ⊆ R(u)`. Returns whether anything moved.
fn left_weight(u: &mut CoxElement, v: &mut CoxElement) -> bool {
    // left descents of v are right descents of v^{-1}, and s·v ↔ v^{-1}·s
    let mut v_inv = v.inverse();
    let mut moved = false;
    while let Some(s) = v_inv
        .right_descents()
        .difference(&u.right_descents())
        .first()
    {
        u.mul_generator_right(s);
        v_inv.mul_generator_right(s);
        moved = true;
    }
    if moved {
        *v = v_inv.inverse();
    }
    moved
}

impl NormalForm {
    pub fn identity(typ: CoxType) -> Self {
        NormalForm {
            typ,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn typ(&self) -> CoxType {
        self.typ
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[CoxElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Whether this is `Δ^k` for some `k`.
    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multiply(&self, other: &NormalForm) -> Result<NormalForm> {
        Garside::new(self.typ).multiply(self, other)
    }

    pub fn inverse(&self) -> NormalForm {
        Garside::new(self.typ)
            .inverse(self)
            .expect("types agree by construction")
    }

    pub fn power(&self, m: i64) -> NormalForm {
        Garside::new(self.typ)
            .power(self, m)
            .expect("types agree by construction")
    }

    /// `k·ℓ(w_S) + Σ ℓ(x_i)`.
    pub fn exponent_sum(&self) -> i64 {
        self.delta_power * self.typ.longest_length() as i64
            + self.factors.iter().map(|x| x.length() as i64).sum::<i64>()
    }

    /// Word `Δ^k τ(x_1) ⋯ τ(x_ℓ)` representing this element.
    pub fn to_word(&self) -> ArtinWord {
        let delta = tau(&longest_element(self.typ)).pow(self.delta_power);
        let tail: Vec<ArtinWord> = self.factors.iter().map(tau).collect();
        ArtinWord::product(self.typ, std::iter::once(&delta).chain(tail.iter()))
            .expect("types agree by construction")
    }

    /// Checks the normal form invariants: no trivial or `Δ` factors and
    /// every adjacent pair left-weighted.
    pub fn is_valid(&self) -> bool {
        let longest = longest_element(self.typ);
        let ok_factors = self
            .factors
            .iter()
            .all(|x| x.typ() == self.typ && !x.is_identity() && *x != longest);
        let weighted = self
            .factors
            .windows(2)
            .all(|p| p[1].left_descents().is_subset(&p[0].right_descents()));
        ok_factors && weighted
    }

    /// `Some(q)` iff this element is `Δ^{κq}`, a power of the center generator.
    pub fn center_membership(&self) -> Option<i64> {
        let kappa = self.typ.kappa();
        (self.factors.is_empty() && self.delta_power % kappa == 0).then(|| self.delta_power / kappa)
    }
}

impl fmt::Display for NormalForm {
    /// `D^<k> | <factor>.<factor>…`, each factor its canonical reduced word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} | ", self.delta_power)?;
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", tau(x))?;
        }
        Ok(())
    }
}

/// The center of the group: generated by `Δ^κ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralData {
    pub kappa: i64,
    pub generator_of_center: NormalForm,
}

impl CentralData {
    pub fn new(typ: CoxType) -> Self {
        let kappa = typ.kappa();
        CentralData {
            kappa,
            generator_of_center: NormalForm {
                typ,
                delta_power: kappa,
                factors: Vec::new(),
            },
        }
    }
}

pub fn normalize(word: &ArtinWord) -> NormalForm {
    Garside::new(word.typ())
        .normalize(word)
        .expect("types agree by construction")
}

/// Word problem: whether `u` and `v` represent the same element.
pub fn equal(u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
    v.check_type(u.typ())?;
    let g = Garside::new(u.typ());
    Ok(g.normalize(u)? == g.normalize(v)?)
}

/// Equality in the central quotient `A[D_n] / ⟨Δ^κ⟩`.
pub fn equal_mod_center(u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
    v.check_type(u.typ())?;
    if !u.typ().is_type_d() {
        return Err(Error::NotTypeD(u.typ()));
    }
    let quotient = u.concat(&v.inverse())?;
    Ok(normalize(&quotient).center_membership().is_some())
}

/// `Δ` as a normal form.
pub fn garside_element(typ: CoxType) -> NormalForm {
    NormalForm {
        typ,
        delta_power: 1,
        factors: Vec::new(),
    }
}

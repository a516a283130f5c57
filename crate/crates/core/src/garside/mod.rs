//! Artin group elements: words, the Garside element and normal forms.

mod normal_form;
mod word;

pub use normal_form::{
    equal, equal_mod_center, garside_element, normalize, CentralData, Garside, NormalForm,
};
pub use word::{relation_word, tau, ArtinWord, Letter, Sign};

use crate::coxeter::{longest_element, longest_parabolic, CoxType, Family, GenSet};
use crate::error::Result;

/// `Δ = τ(w_S)` as the canonical reduced word.
pub fn delta_word(typ: CoxType) -> ArtinWord {
    tau(&longest_element(typ))
}

/// `Δ_X = τ(w_X)` for a nonempty set of generators.
pub fn parabolic_delta_word(typ: CoxType, x: GenSet) -> Result<ArtinWord> {
    Ok(tau(&longest_parabolic(typ, x)?))
}

/// `Δ_Y` in `A[D_n]` for `Y = {t_1, …, t_{n-1}}`.
pub fn delta_y_word(typ: CoxType) -> Result<ArtinWord> {
    let y: GenSet = typ.generators().take(typ.rank() - 1).collect();
    parabolic_delta_word(typ, y)
}

/// The classical factored expression of `Δ`:
///
/// - `A_{n-1}`: `(s_{n-1}⋯s_1)(s_{n-1}⋯s_2)⋯(s_{n-1}s_{n-2})s_{n-1}`
/// - `D_n`: `(t_1⋯t_{n-2}t_{n-1}t_nt_{n-2}⋯t_1)(t_2⋯t_2)⋯(t_{n-2}t_{n-1}t_nt_{n-2})(t_{n-1}t_n)`
pub fn delta_word_closed_form(typ: CoxType) -> ArtinWord {
    let r = typ.rank();
    let mut idx = Vec::new();
    match typ.family() {
        Family::TypeA => {
            for k in 1..=r {
                idx.extend((k..=r).rev());
            }
        }
        Family::TypeD => {
            let n = r;
            for k in 1..=n - 2 {
                idx.extend(k..=n - 2);
                idx.extend([n - 1, n]);
                idx.extend((k..=n - 2).rev());
            }
            idx.extend([n - 1, n]);
        }
    }
    ArtinWord::positive(typ, &idx).expect("indices within rank")
}

/// Factored expression of `Δ[A_r]^2`:
/// `(s_1⋯s_{r-1}s_r^2s_{r-1}⋯s_1)(s_2⋯s_r^2⋯s_2)⋯(s_{r-1}s_r^2s_{r-1})s_r^2`.
pub fn delta_squared_factored_word(rank: usize) -> Result<ArtinWord> {
    let typ = CoxType::a(rank)?;
    let r = rank;
    let mut idx = Vec::new();
    for k in 1..r {
        idx.extend(k..r);
        idx.extend([r, r]);
        idx.extend((k..r).rev());
    }
    idx.extend([r, r]);
    ArtinWord::positive(typ, &idx)
}

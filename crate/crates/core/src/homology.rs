//! Integer-matrix shadow of the geometric representations.
//!
//! The basis is the set of curve classes, one per generator, paired by a
//! skew intersection form `J` that mirrors the Coxeter graph: `J[i][i+1] = 1`
//! along the chain, plus `J[n-2][n] = 1` for the fork of `D_n` (1-based).
//! The twist about class `e` acts as the transvection `x ↦ x + ⟨x, e⟩ e`,
//! with matrices acting on column vectors.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coxeter::{CoxType, Family, Generator};
use crate::error::{Error, Result};
use crate::garside::{ArtinWord, Sign};
use crate::homs::{apply, make_pi};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest absolute value of an entry.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot_row = a[rank].clone();
            for row in a.iter_mut().skip(rank + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x * &pivot_row[col] - &f * y;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    /// Row-major grid: one row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// Skew-symmetric integer form on the span of the curve classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    dim: usize,
    j: IntMatrix,
}

impl SkewForm {
    /// Builds the form from its strictly upper entries `(i, j, value)`, 1-based.
    pub fn from_upper(dim: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let mut j = IntMatrix::zeros(dim, dim);
        for &(a, b, v) in entries {
            for idx in [a, b] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            *j.get_mut(a - 1, b - 1) += v;
            *j.get_mut(b - 1, a - 1) -= v;
        }
        Ok(SkewForm { dim, j })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.j
    }

    /// `⟨e_a, e_b⟩`, 1-based.
    pub fn pairing(&self, a: usize, b: usize) -> &BigInt {
        self.j.get(a - 1, b - 1)
    }

    /// `⟨x, y⟩ = xᵀ J y`.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let jy = self.j.apply(y);
        x.iter().zip(&jy).map(|(a, b)| a * b).sum()
    }

    pub fn rank(&self) -> usize {
        self.j.rank()
    }

    /// Whether `Mᵀ J M = J`.
    pub fn preserved_by(&self, m: &IntMatrix) -> bool {
        &(&m.transpose() * &self.j) * m == self.j
    }
}

/// The intersection form of the curve system for `typ`.
pub fn intersection_form(typ: CoxType) -> SkewForm {
    let fork_sign = if typ.is_type_d() { 1 } else { 0 };
    form_with_fork_sign(typ, fork_sign)
}

/// As [`intersection_form`], with `J[n-2][n]` set to `fork_sign` (type D only).
pub fn form_with_fork_sign(typ: CoxType, fork_sign: i64) -> SkewForm {
    let r = typ.rank();
    let chain_end = match typ.family() {
        Family::TypeA => r,
        Family::TypeD => r - 1,
    };
    let mut entries: Vec<(usize, usize, i64)> = (1..chain_end).map(|i| (i, i + 1, 1)).collect();
    if typ.is_type_d() {
        entries.push((r - 2, r, fork_sign));
    }
    SkewForm::from_upper(r, &entries).expect("indices within rank")
}

/// The transvection `x ↦ x + ⟨x, e_idx⟩ e_idx`, 1-based index.
pub fn transvection_matrix(form: &SkewForm, basis_index: usize) -> Result<IntMatrix> {
    signed_transvection(form, basis_index, 1)
}

fn signed_transvection(form: &SkewForm, idx: usize, sign: i64) -> Result<IntMatrix> {
    let dim = form.dim;
    if idx == 0 || idx > dim {
        return Err(Error::IndexOutOfRange { index: idx, dim });
    }
    let mut m = IntMatrix::identity(dim);
    for col in 0..dim {
        let c = form.j.get(col, idx - 1) * sign;
        *m.get_mut(idx - 1, col) += c;
    }
    Ok(m)
}

/// Generator matrices of the homology shadow, with their inverses.
#[derive(Debug, Clone)]
pub struct TransvectionRep {
    typ: CoxType,
    form: SkewForm,
    gen_matrices: Vec<IntMatrix>,
    inverses: Vec<IntMatrix>,
}

impl TransvectionRep {
    pub fn new(typ: CoxType) -> Self {
        TransvectionRep::with_form(typ, intersection_form(typ)).expect("dimension matches")
    }

    pub fn with_form(typ: CoxType, form: SkewForm) -> Result<Self> {
        if form.dim != typ.rank() {
            return Err(Error::IndexOutOfRange {
                index: form.dim,
                dim: typ.rank(),
            });
        }
        let build = |sign| {
            (1..=typ.rank())
                .map(|i| signed_transvection(&form, i, sign))
                .collect::<Result<Vec<_>>>()
        };
        let gen_matrices = build(1)?;
        // ⟨e, e⟩ = 0, so the inverse transvection subtracts
        let inverses = build(-1)?;
        Ok(TransvectionRep {
            typ,
            form,
            gen_matrices,
            inverses,
        })
    }

    pub fn typ(&self) -> CoxType {
        self.typ
    }

    pub fn dim(&self) -> usize {
        self.form.dim
    }

    pub fn form(&self) -> &SkewForm {
        &self.form
    }

    pub fn generator_matrix(&self, g: Generator) -> &IntMatrix {
        &self.gen_matrices[g.index() - 1]
    }

    pub fn gen_matrices(&self) -> &[IntMatrix] {
        &self.gen_matrices
    }

    /// Source relations whose matrix images disagree.
    pub fn failing_relations(&self) -> Vec<(Generator, Generator)> {
        self.typ
            .relation_pairs()
            .into_iter()
            .filter(|&(a, b, m)| self.alternating(a, b, m) != self.alternating(b, a, m))
            .map(|(a, b, _)| (a, b))
            .collect()
    }

    fn alternating(&self, a: Generator, b: Generator, m: u32) -> IntMatrix {
        (0..m).fold(IntMatrix::identity(self.dim()), |acc, k| {
            let g = if k % 2 == 0 { a } else { b };
            &acc * self.generator_matrix(g)
        })
    }
}

/// Product of generator matrices (and inverses) along `w`.
pub fn rep_apply(rep: &TransvectionRep, w: &ArtinWord) -> Result<IntMatrix> {
    w.check_type(rep.typ)?;
    let mut out = IntMatrix::identity(rep.dim());
    for l in w.letters() {
        let k = l.generator.index() - 1;
        let m = match l.sign {
            Sign::Pos => &rep.gen_matrices[k],
            Sign::Neg => &rep.inverses[k],
        };
        out = &out * m;
    }
    Ok(out)
}

/// `θ_*`: `[d_i] ↦ [a_i]` for `i ≤ n-1`, `[d_n] ↦ [a_{n-1}]`, as an `(n-1) × n` matrix.
pub fn theta_star(n: usize) -> Result<IntMatrix> {
    CoxType::d(n)?;
    let mut m = IntMatrix::zeros(n - 1, n);
    for i in 0..n {
        *m.get_mut(i.min(n - 2), i) = BigInt::one();
    }
    Ok(m)
}

/// `θ_* ∘ ρ_D(t_i) = ρ_A(π(t_i)) ∘ θ_*` for every generator.
pub fn check_commuting_square(n: usize) -> Result<bool> {
    let d = CoxType::d(n)?;
    commuting_square(&TransvectionRep::new(d))
}

/// The commuting-square check against an arbitrary type-D representation.
pub fn commuting_square(rep_d: &TransvectionRep) -> Result<bool> {
    let d = rep_d.typ;
    if !d.is_type_d() {
        return Err(Error::NotTypeD(d));
    }
    let n = d.rank();
    let pi = make_pi(n)?;
    let rep_a = TransvectionRep::new(pi.target());
    let theta = theta_star(n)?;
    for g in d.generators() {
        let image = apply(&pi, &ArtinWord::generator(d, g.index())?)?;
        let lhs = &theta * rep_d.generator_matrix(g);
        let rhs = &rep_apply(&rep_a, &image)? * &theta;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the intersection form: `J` of type `A_r` is a path, so its rank
/// is `r` rounded down to even; for `D_n`, `[d_n] - [d_{n-1}]` spans extra
/// kernel when `n` is even.
pub fn expected_form_rank(typ: CoxType) -> usize {
    let r = typ.rank();
    match typ.family() {
        Family::TypeA => r - r % 2,
        Family::TypeD if r % 2 == 1 => r - 1,
        Family::TypeD => r - 2,
    }
}

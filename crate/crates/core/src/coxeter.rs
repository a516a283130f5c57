//! Finite Coxeter groups of types `A_{n-1}` and `D_n` as (signed) permutations.
//!
//! Elements are stored as the images of the positive points `1..=degree`;
//! images of negative points follow from `w(-i) = -w(i)`. Products are map
//! composition, so the word `s_1 s_2` is the map `s_1 ∘ s_2`: right
//! multiplication by a generator acts on positions, left multiplication acts
//! on values.
//!
//! Type `A_{n-1}` acts on `{1..n}` with `s_i = (i, i+1)`. Type `D_n` acts on
//! `{±1..±n}` with `t_i = (i, i+1)` for `i < n` and `t_n` sending
//! `n-1 ↦ -n`, `n ↦ -(n-1)`, which puts the fork of the graph at
//! `t_{n-1}, t_n`.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported rank; generator sets are 64-bit masks.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TypeA,
    TypeD,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::TypeA => 'A',
            Family::TypeD => 'D',
        }
    }

    /// Prefix of generator names in the word format.
    pub fn generator_prefix(self) -> char {
        match self {
            Family::TypeA => 's',
            Family::TypeD => 't',
        }
    }
}

/// A Coxeter type together with its rank (number of standard generators).
///
/// `A_k` has rank `k` and acts on `k + 1` points; `D_n` has rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxType {
    family: Family,
    rank: usize,
}

impl CoxType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::TypeA => 1,
            Family::TypeD => 4,
        };
        if rank < min || rank > MAX_RANK {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(CoxType { family, rank })
    }

    /// `A_rank`, the braid group on `rank + 1` strands.
    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::TypeA, rank)
    }

    /// `D_n`.
    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::TypeD, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_type_d(&self) -> bool {
        self.family == Family::TypeD
    }

    /// Number of points the group permutes.
    pub fn degree(&self) -> usize {
        match self.family {
            Family::TypeA => self.rank + 1,
            Family::TypeD => self.rank,
        }
    }

    pub fn generator(&self, index: usize) -> Result<Generator> {
        if index == 0 || index > self.rank {
            return Err(Error::GeneratorOutOfRange { typ: *self, index });
        }
        Ok(Generator(index as u16))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + Clone {
        (1..=self.rank as u16).map(Generator)
    }

    pub fn all_generators(&self) -> GenSet {
        GenSet::full(self.rank)
    }

    /// Coxeter matrix entry `m(a, b)`; 1 on the diagonal.
    pub fn coxeter_m(&self, a: Generator, b: Generator) -> u32 {
        if a == b {
            1
        } else if self.is_edge(a, b) {
            3
        } else {
            2
        }
    }

    /// Whether `a` and `b` are joined in the Coxeter graph.
    pub fn is_edge(&self, a: Generator, b: Generator) -> bool {
        let (i, j) = (a.index().min(b.index()), a.index().max(b.index()));
        match self.family {
            Family::TypeA => j == i + 1,
            Family::TypeD => {
                let n = self.rank;
                if j == n {
                    i == n - 2
                } else {
                    j == i + 1
                }
            }
        }
    }

    /// All pairs `a < b` of generators, with their Coxeter matrix entries.
    pub fn relation_pairs(&self) -> Vec<(Generator, Generator, u32)> {
        let mut out = Vec::new();
        for a in self.generators() {
            for b in self.generators().filter(|b| *b > a) {
                out.push((a, b, self.coxeter_m(a, b)));
            }
        }
        out
    }

    /// Length of the longest element: `n(n-1)/2` for `A_{n-1}`, `n(n-1)` for `D_n`.
    pub fn longest_length(&self) -> usize {
        let n = self.degree();
        match self.family {
            Family::TypeA => n * (n - 1) / 2,
            Family::TypeD => n * (n - 1),
        }
    }

    /// Exponent `κ` with center generated by `Δ^κ`: 1 for `D_n` with `n` even, 2 otherwise.
    pub fn kappa(&self) -> i64 {
        match self.family {
            Family::TypeD if self.rank.is_multiple_of(2) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CoxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CoxType {
    type Err = Error;

    /// Parses designators such as `A5` or `D6`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::TypeA,
            Some('D') => Family::TypeD,
            _ => return Err(bad("group designator must start with 'A' or 'D'")),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| bad("group designator needs a decimal rank"))?;
        CoxType::new(family, rank)
    }
}

/// A standard generator, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u16);

impl Generator {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of generators as a bit mask (bit `i - 1` for generator `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GenSet(u64);

impl GenSet {
    pub fn empty() -> Self {
        GenSet(0)
    }

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << rank) - 1)
        }
    }

    pub fn insert(&mut self, g: Generator) {
        self.0 |= 1 << (g.index() - 1);
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.0 & (1 << (g.index() - 1)) != 0
    }

    pub fn is_subset(&self, other: &GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn difference(&self, other: &GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    /// Smallest generator in the set.
    pub fn first(&self) -> Option<Generator> {
        (self.0 != 0).then(|| Generator(self.0.trailing_zeros() as u16 + 1))
    }

    pub fn iter(&self) -> impl Iterator<Item = Generator> {
        let bits = self.0;
        (0..64u16)
            .filter(move |i| bits & (1 << i) != 0)
            .map(|i| Generator(i + 1))
    }
}

impl FromIterator<Generator> for GenSet {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        let mut set = GenSet::empty();
        for g in iter {
            set.insert(g);
        }
        set
    }
}

type Images = SmallVec<[i16; 16]>;

/// An element of `W[A_{n-1}]` or `W[D_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxElement {
    typ: CoxType,
    images: Images,
}

impl CoxElement {
    pub fn identity(typ: CoxType) -> Self {
        let images = (1..=typ.degree() as i16).collect();
        CoxElement { typ, images }
    }

    pub fn generator(typ: CoxType, s: Generator) -> Self {
        let mut w = Self::identity(typ);
        w.mul_generator_right(s);
        w
    }

    /// Builds an element from the images of `1..=degree`.
    pub fn from_images(typ: CoxType, images: &[i16]) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidElement {
            typ,
            reason: reason.to_string(),
        };
        let n = typ.degree();
        if images.len() != n {
            return Err(invalid("wrong number of images"));
        }
        let mut seen = vec![false; n + 1];
        let mut negatives = 0;
        for &v in images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(invalid("not a bijection"));
            }
            seen[a] = true;
            if v < 0 {
                negatives += 1;
            }
        }
        match typ.family() {
            Family::TypeA if negatives > 0 => return Err(invalid("negative image in type A")),
            Family::TypeD if negatives % 2 == 1 => {
                return Err(invalid("odd number of sign changes"))
            }
            _ => {}
        }
        Ok(CoxElement {
            typ,
            images: images.into(),
        })
    }

    pub fn typ(&self) -> CoxType {
        self.typ
    }

    /// Images of `1..=degree`.
    pub fn images(&self) -> &[i16] {
        &self.images
    }

    /// `w(i)` for `i` in `±1..=±degree`.
    pub fn apply(&self, i: i16) -> i16 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i16 + 1)
    }

    pub fn multiply(&self, other: &CoxElement) -> Result<CoxElement> {
        if self.typ != other.typ {
            return Err(Error::TypeMismatch {
                expected: self.typ,
                found: other.typ,
            });
        }
        Ok(self.compose(other))
    }

    /// `self ∘ other`; types must agree.
    pub(crate) fn compose(&self, other: &CoxElement) -> CoxElement {
        debug_assert_eq!(self.typ, other.typ);
        let images = other.images.iter().map(|&v| self.apply(v)).collect();
        CoxElement {
            typ: self.typ,
            images,
        }
    }

    pub fn inverse(&self) -> CoxElement {
        let mut images: Images = SmallVec::from_elem(0, self.images.len());
        for (i, &v) in self.images.iter().enumerate() {
            let pos = i as i16 + 1;
            images[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        CoxElement {
            typ: self.typ,
            images,
        }
    }

    /// `self ← self · s`; permutes positions.
    pub fn mul_generator_right(&mut self, s: Generator) {
        let i = s.index();
        match self.typ.family() {
            Family::TypeD if i == self.typ.rank() => {
                let n = self.typ.rank();
                let (a, b) = (self.images[n - 2], self.images[n - 1]);
                self.images[n - 2] = -b;
                self.images[n - 1] = -a;
            }
            _ => self.images.swap(i - 1, i),
        }
    }

    /// `self ← s · self`; acts on values.
    pub fn mul_generator_left(&mut self, s: Generator) {
        let i = s.index() as i16;
        let d_fork = self.typ.is_type_d() && s.index() == self.typ.rank();
        for v in self.images.iter_mut() {
            let a = v.abs();
            let sign = v.signum();
            let mapped = if d_fork {
                // n-1 -> -n, n -> -(n-1)
                if a == i - 1 {
                    -i
                } else if a == i {
                    -(i - 1)
                } else {
                    a
                }
            } else if a == i {
                i + 1
            } else if a == i + 1 {
                i
            } else {
                a
            };
            *v = sign * mapped;
        }
    }

    /// Relabeling `x ↦ sign(x)(n+1-|x|)` that carries our type-D labeling to
    /// the one with the fork at points 1, 2.
    fn reflect(&self, x: i16) -> i16 {
        let n = self.typ.degree() as i16;
        x.signum() * (n + 1 - x.abs())
    }

    /// Coxeter length.
    ///
    /// Type A: inversion count. Type D: `inv(v) + #{i<j : v(i)+v(j) < 0}`
    /// evaluated on the reflected element `v = r w r^{-1}`.
    pub fn length(&self) -> usize {
        match self.typ.family() {
            Family::TypeA => {
                let w = &self.images;
                let mut count = 0;
                for i in 0..w.len() {
                    for j in i + 1..w.len() {
                        if w[i] > w[j] {
                            count += 1;
                        }
                    }
                }
                count
            }
            Family::TypeD => {
                let n = self.images.len();
                // v(i) = r(w(r^{-1}(i))) and r^{-1}(i) = n + 1 - i on positives
                let v: Images = (0..n)
                    .map(|i| self.reflect(self.images[n - 1 - i]))
                    .collect();
                let mut count = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if v[i] > v[j] {
                            count += 1;
                        }
                        if v[i] + v[j] < 0 {
                            count += 1;
                        }
                    }
                }
                count
            }
        }
    }

    /// Whether `ℓ(w s) < ℓ(w)`.
    pub fn has_right_descent(&self, s: Generator) -> bool {
        let i = s.index();
        let w = &self.images;
        match self.typ.family() {
            Family::TypeA => w[i - 1] > w[i],
            Family::TypeD => {
                let n = self.typ.rank();
                if i == n {
                    self.reflect(w[n - 1]) + self.reflect(w[n - 2]) < 0
                } else {
                    self.reflect(w[i]) > self.reflect(w[i - 1])
                }
            }
        }
    }

    pub fn right_descents(&self) -> GenSet {
        self.typ
            .generators()
            .filter(|&s| self.has_right_descent(s))
            .collect()
    }

    /// `{ s : ℓ(s w) < ℓ(w) }`.
    pub fn left_descents(&self) -> GenSet {
        self.inverse().right_descents()
    }

    /// Reduced word, always stripping the smallest-index left descent first.
    pub fn reduced_word(&self) -> Vec<Generator> {
        let mut rest = self.inverse();
        let mut word = Vec::with_capacity(self.length());
        // left descents of w are right descents of w^{-1}; s·w ↔ w^{-1}·s
        while let Some(s) = rest.right_descents().first() {
            word.push(s);
            rest.mul_generator_right(s);
        }
        word
    }

    /// Product of a sequence of generators.
    pub fn from_word(typ: CoxType, word: &[Generator]) -> CoxElement {
        let mut w = Self::identity(typ);
        for &s in word {
            w.mul_generator_right(s);
        }
        w
    }

    /// `w_S · self · w_S`, i.e. conjugation by the longest element.
    pub fn conjugate_by_longest(&self, longest: &CoxElement) -> CoxElement {
        longest.compose(self).compose(longest)
    }
}

/// The longest element `w_S`.
pub fn longest_element(typ: CoxType) -> CoxElement {
    grow_to_longest(typ, typ.all_generators())
}

/// The longest element of the standard parabolic subgroup `W_X`.
pub fn longest_parabolic(typ: CoxType, x: GenSet) -> Result<CoxElement> {
    if x.is_empty() {
        return Err(Error::EmptyParabolic);
    }
    if !x.is_subset(&typ.all_generators()) {
        let index = x.difference(&typ.all_generators()).first().unwrap().index();
        return Err(Error::GeneratorOutOfRange { typ, index });
    }
    Ok(grow_to_longest(typ, x))
}

// Right-multiplies by length-increasing generators of X until none remain;
// the only element of W_X without such a generator is w_X.
fn grow_to_longest(typ: CoxType, x: GenSet) -> CoxElement {
    let mut w = CoxElement::identity(typ);
    while let Some(s) = x.difference(&w.right_descents()).first() {
        w.mul_generator_right(s);
    }
    w
}

/// The generator `w_S s w_S`.
pub fn diagram_automorphism(typ: CoxType, s: Generator) -> Generator {
    let i = s.index();
    let r = typ.rank();
    let image = match typ.family() {
        Family::TypeA => r + 1 - i,
        Family::TypeD if r % 2 == 1 && i == r - 1 => r,
        Family::TypeD if r % 2 == 1 && i == r => r - 1,
        Family::TypeD => i,
    };
    Generator(image as u16)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn a(rank: usize) -> CoxType {
        CoxType::a(rank).unwrap()
    }
    fn d(n: usize) -> CoxType {
        CoxType::d(n).unwrap()
    }
    fn g(typ: CoxType, i: usize) -> Generator {
        typ.generator(i).unwrap()
    }

    // Breadth-first search over the Cayley graph: exact word lengths.
    fn bfs_lengths(typ: CoxType) -> HashMap<CoxElement, usize> {
        let mut dist = HashMap::new();
        let id = CoxElement::identity(typ);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let dw = dist[&w];
            for s in typ.generators() {
                let mut next = w.clone();
                next.mul_generator_right(s);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), dw + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn designators() {
        assert_eq!("A5".parse::<CoxType>().unwrap(), a(5));
        assert_eq!("D6".parse::<CoxType>().unwrap(), d(6));
        assert_eq!(d(6).to_string(), "D6");
        assert!("D3".parse::<CoxType>().is_err());
        assert!("A0".parse::<CoxType>().is_err());
        assert!("B3".parse::<CoxType>().is_err());
        assert!("Dx".parse::<CoxType>().is_err());
    }

    #[test]
    fn generator_images() {
        let t = d(5);
        let fork = CoxElement::generator(t, g(t, 5));
        assert_eq!(fork.images(), &[1, 2, 3, -5, -4]);
        let s2 = CoxElement::generator(t, g(t, 2));
        assert_eq!(s2.images(), &[1, 3, 2, 4, 5]);
        // left and right multiplication by a generator agree on generators
        let mut left = CoxElement::identity(t);
        left.mul_generator_left(g(t, 5));
        assert_eq!(left, fork);
    }

    #[test]
    fn from_images_validation() {
        assert!(CoxElement::from_images(d(4), &[-1, -2, 3, 4]).is_ok());
        assert!(CoxElement::from_images(d(4), &[-1, 2, 3, 4]).is_err());
        assert!(CoxElement::from_images(d(4), &[1, 1, 3, 4]).is_err());
        assert!(CoxElement::from_images(a(2), &[1, -2, 3]).is_err());
        assert!(CoxElement::from_images(a(2), &[1, 2]).is_err());
    }

    #[test]
    fn multiply_examples() {
        let t = a(2);
        let s1 = CoxElement::generator(t, g(t, 1));
        assert!(s1.multiply(&s1).unwrap().is_identity());

        let t = d(4);
        let t3 = CoxElement::generator(t, g(t, 3));
        let t4 = CoxElement::generator(t, g(t, 4));
        assert_eq!(t3.multiply(&t4).unwrap(), t4.multiply(&t3).unwrap());

        let t2 = CoxElement::generator(t, g(t, 2));
        let x = t2.multiply(&t4).unwrap();
        let y = t4.multiply(&t2).unwrap();
        assert_ne!(x, y);
        // t2∘t4 sends 2 ↦ 3 while t4∘t2 sends 2 ↦ -4
        assert_eq!(x.apply(2), 3);
        assert_eq!(y.apply(2), -4);

        let other = CoxElement::identity(d(5));
        assert!(matches!(
            t2.multiply(&other),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn coxeter_relations_hold() {
        for rank in 1..=9 {
            check_relations(a(rank));
        }
        for n in 4..=9 {
            check_relations(d(n));
        }
    }

    fn check_relations(typ: CoxType) {
        for s in typ.generators() {
            let e = CoxElement::from_word(typ, &[s, s]);
            assert!(e.is_identity(), "{typ}: s{}^2", s.index());
            for u in typ.generators().filter(|u| *u != s) {
                let m = typ.coxeter_m(s, u) as usize;
                let lhs: Vec<_> = (0..m).map(|k| if k % 2 == 0 { s } else { u }).collect();
                let rhs: Vec<_> = (0..m).map(|k| if k % 2 == 0 { u } else { s }).collect();
                assert_eq!(
                    CoxElement::from_word(typ, &lhs),
                    CoxElement::from_word(typ, &rhs)
                );
                // order of s·u is exactly m
                let su = CoxElement::from_word(typ, &[s, u]);
                let mut p = su.clone();
                for k in 1..m {
                    assert!(
                        !p.is_identity(),
                        "{typ}: order of s{}s{} below {m}, k={k}",
                        s.index(),
                        u.index()
                    );
                    p = p.compose(&su);
                }
                assert!(p.is_identity());
            }
        }
    }

    #[test]
    fn length_matches_bfs_and_descents() {
        for typ in [a(1), a(2), a(3), a(4), d(4), d(5)] {
            let dist = bfs_lengths(typ);
            let expected_order = match typ.family() {
                Family::TypeA => (1..=typ.degree()).product::<usize>(),
                Family::TypeD => (1..=typ.degree()).product::<usize>() << (typ.degree() - 1),
            };
            assert_eq!(dist.len(), expected_order);
            for (w, &len) in &dist {
                assert_eq!(w.length(), len, "{typ}: {:?}", w.images());
                for s in typ.generators() {
                    let mut ws = w.clone();
                    ws.mul_generator_right(s);
                    assert_eq!(w.has_right_descent(s), dist[&ws] < len);
                    let mut sw = w.clone();
                    sw.mul_generator_left(s);
                    assert_eq!(w.left_descents().contains(s), dist[&sw] < len);
                }
                let word = w.reduced_word();
                assert_eq!(word.len(), len);
                assert_eq!(&CoxElement::from_word(typ, &word), w);
            }
        }
    }

    #[test]
    fn longest_elements_by_brute_force() {
        for typ in [a(1), a(2), a(3), a(4), d(4), d(5)] {
            let dist = bfs_lengths(typ);
            let (w, &max) = dist.iter().max_by_key(|(_, l)| **l).unwrap();
            let ws = longest_element(typ);
            assert_eq!(&ws, w);
            assert_eq!(ws.length(), max);
            assert_eq!(max, typ.longest_length());
        }
        // order reversal in type A
        for rank in 1..=6 {
            let n = rank + 1;
            let rev: Vec<i16> = (1..=n as i16).rev().collect();
            assert_eq!(longest_element(a(rank)).images(), &rev[..]);
        }
        // -id for D_n, n even
        for n in [4, 6, 8] {
            let neg: Vec<i16> = (1..=n as i16).map(|i| -i).collect();
            assert_eq!(longest_element(d(n)).images(), &neg[..]);
        }
        // A_1
        let t = a(1);
        assert_eq!(longest_element(t), CoxElement::generator(t, g(t, 1)));
    }

    #[test]
    fn longest_lengths() {
        for n in 2..=9 {
            assert_eq!(longest_element(a(n - 1)).length(), n * (n - 1) / 2);
        }
        for n in 4..=9 {
            let ws = longest_element(d(n));
            assert_eq!(ws.length(), n * (n - 1));
            assert!(ws.compose(&ws).is_identity());
            assert_eq!(ws.left_descents(), d(n).all_generators());
            assert_eq!(ws.reduced_word().len(), n * (n - 1));
        }
    }

    #[test]
    fn small_examples() {
        let t = a(2);
        let id = CoxElement::identity(t);
        assert_eq!(id.length(), 0);
        assert!(id.left_descents().is_empty());
        assert!(id.reduced_word().is_empty());
        for s in t.generators() {
            let e = CoxElement::generator(t, s);
            assert_eq!(e.length(), 1);
            assert_eq!(e.left_descents(), GenSet::from_iter([s]));
        }
        let sts = CoxElement::from_word(t, &[g(t, 1), g(t, 2), g(t, 1)]);
        let word = sts.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(CoxElement::from_word(t, &word), sts);
        assert_eq!(word, vec![g(t, 1), g(t, 2), g(t, 1)]);
    }

    #[test]
    fn parabolic_longest() {
        let t = d(4);
        let x = GenSet::from_iter([g(t, 1)]);
        assert_eq!(
            longest_parabolic(t, x).unwrap(),
            CoxElement::generator(t, g(t, 1))
        );
        assert_eq!(
            longest_parabolic(t, t.all_generators()).unwrap(),
            longest_element(t)
        );
        assert_eq!(
            longest_parabolic(t, GenSet::empty()),
            Err(Error::EmptyParabolic)
        );

        // brute force over W_Y, Y = {t1, t2, t3}
        let y: GenSet = (1..=3).map(|i| g(t, i)).collect();
        let mut best = CoxElement::identity(t);
        let mut seen = std::collections::HashSet::from([best.clone()]);
        let mut queue = VecDeque::from([best.clone()]);
        while let Some(w) = queue.pop_front() {
            if w.length() > best.length() {
                best = w.clone();
            }
            for s in y.iter() {
                let mut next = w.clone();
                next.mul_generator_right(s);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        assert_eq!(seen.len(), 24);
        let wy = longest_parabolic(t, y).unwrap();
        assert_eq!(wy, best);
        // embedded order reversal of 1..4
        assert_eq!(wy.images(), &[4, 3, 2, 1]);
    }

    #[test]
    fn diagram_automorphism_examples() {
        assert_eq!(diagram_automorphism(a(4), g(a(4), 1)), g(a(4), 4));
        assert_eq!(diagram_automorphism(d(6), g(d(6), 5)), g(d(6), 5));
        assert_eq!(diagram_automorphism(d(5), g(d(5), 4)), g(d(5), 5));
        assert_eq!(diagram_automorphism(d(5), g(d(5), 5)), g(d(5), 4));
        assert_eq!(diagram_automorphism(d(5), g(d(5), 2)), g(d(5), 2));
    }

    #[test]
    fn conjugation_by_longest_matches_diagram_automorphism() {
        let types = (1..=8).map(a).chain((4..=9).map(d));
        for typ in types {
            let ws = longest_element(typ);
            for s in typ.generators() {
                let conj = CoxElement::generator(typ, s).conjugate_by_longest(&ws);
                assert_eq!(
                    conj,
                    CoxElement::generator(typ, diagram_automorphism(typ, s)),
                    "{typ} s{}",
                    s.index()
                );
            }
        }
    }

    #[test]
    fn coxeter_graph_edges() {
        let t = d(4);
        let edges: Vec<_> = t
            .relation_pairs()
            .into_iter()
            .filter(|p| p.2 == 3)
            .map(|(x, y, _)| (x.index(), y.index()))
            .collect();
        assert_eq!(edges, vec![(1, 2), (2, 3), (2, 4)]);
        assert_eq!(d(6).kappa(), 1);
        assert_eq!(d(5).kappa(), 2);
        assert_eq!(a(4).kappa(), 2);
    }
}

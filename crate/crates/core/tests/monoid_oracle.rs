//! Positive words are equal in the group exactly when they are equal in the
//! Artin monoid, and the monoid class of a positive word is the finite set
//! reachable by positive braid moves. Enumerating that class by BFS gives a
//! word-problem oracle for positive words in both types.

use std::collections::{HashSet, VecDeque};

use artin_core::garside::{equal, normalize, ArtinWord, Sign};
use artin_core::CoxType;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Positive = Vec<usize>;

fn alternating(a: usize, b: usize, m: usize) -> Positive {
    (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

fn coxeter_m(typ: CoxType, a: usize, b: usize) -> usize {
    let (ga, gb) = (typ.generator(a).unwrap(), typ.generator(b).unwrap());
    typ.coxeter_m(ga, gb) as usize
}

fn monoid_class(typ: CoxType, w: &Positive) -> HashSet<Positive> {
    let r = typ.rank();
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in 1..=r {
            for b in 1..=r {
                if a == b {
                    continue;
                }
                let m = coxeter_m(typ, a, b);
                let (lhs, rhs) = (alternating(a, b, m), alternating(b, a, m));
                for i in 0..(x.len() + 1).saturating_sub(m) {
                    if x[i..i + m] == lhs[..] {
                        let mut y = x.clone();
                        y.splice(i..i + m, rhs.iter().copied());
                        if seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
    }
    seen
}

fn random_positive(rng: &mut StdRng, typ: CoxType, len: usize) -> Positive {
    (0..len).map(|_| rng.gen_range(1..=typ.rank())).collect()
}

fn word(typ: CoxType, p: &Positive) -> ArtinWord {
    ArtinWord::positive(typ, p).unwrap()
}

#[test]
fn positive_word_problem_matches_monoid_classes() {
    let mut rng = StdRng::seed_from_u64(17);
    let groups = [
        CoxType::d(4).unwrap(),
        CoxType::d(5).unwrap(),
        CoxType::d(6).unwrap(),
        CoxType::a(3).unwrap(),
        CoxType::a(4).unwrap(),
    ];
    let (mut hits, mut misses) = (0, 0);
    for typ in groups {
        for _ in 0..150 {
            let len = rng.gen_range(1..=7);
            let u = random_positive(&mut rng, typ, len);
            let class = monoid_class(typ, &u);
            // a member of the class and an unrelated word of the same length
            let member = class
                .iter()
                .nth(rng.gen_range(0..class.len()))
                .unwrap()
                .clone();
            let other = random_positive(&mut rng, typ, len);
            for v in [member, other] {
                let oracle = class.contains(&v);
                assert_eq!(equal(&word(typ, &u), &word(typ, &v)).unwrap(), oracle);
                if oracle {
                    hits += 1;
                } else {
                    misses += 1;
                }
            }
        }
    }
    assert!(hits >= 750 && misses > 100, "{hits} {misses}");
}

fn delta_positive(typ: CoxType) -> Positive {
    artin_core::garside::delta_word(typ)
        .letters()
        .iter()
        .map(|l| l.generator.index())
        .collect()
}

#[test]
fn class_of_delta_is_its_set_of_reduced_words() {
    // the longest permutation of S_4 has 16 reduced words
    let a3 = CoxType::a(3).unwrap();
    assert_eq!(monoid_class(a3, &delta_positive(a3)).len(), 16);
    let d4 = CoxType::d(4).unwrap();
    for v in monoid_class(d4, &delta_positive(d4)) {
        assert_eq!(v.len(), 12);
        let nf = normalize(&word(d4, &v));
        assert!(nf.is_delta_power() && nf.delta_power() == 1);
    }
}

#[test]
fn normal_form_of_positive_word_is_positive_and_in_class() {
    let mut rng = StdRng::seed_from_u64(5);
    let typ = CoxType::d(5).unwrap();
    for _ in 0..100 {
        let len = rng.gen_range(0..=7);
        let u = random_positive(&mut rng, typ, len);
        let nf = normalize(&word(typ, &u));
        assert!(nf.delta_power() >= 0);
        let nf_word = nf.to_word();
        assert!(nf_word.letters().iter().all(|l| l.sign == Sign::Pos));
        let p: Positive = nf_word
            .letters()
            .iter()
            .map(|l| l.generator.index())
            .collect();
        assert!(monoid_class(typ, &u).contains(&p));
    }
}

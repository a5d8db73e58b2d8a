use proptest::prelude::*;

use kostka_core::charge::charge_a;
use kostka_core::crystal::{Crystal, Word};
use kostka_core::tableau::p_symbol;
use kostka_core::{Family, QLaurent, RootSystem, SignedPerm, Weight};

fn poly() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-6i64..7, -5i64..6), 0..6).prop_map(QLaurent::from_terms)
}

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (2usize..=5).prop_map(|n| (Family::A, n)),
        (1usize..=5).prop_map(|n| (Family::B, n)),
        (1usize..=5).prop_map(|n| (Family::C, n)),
        (2usize..=5).prop_map(|n| (Family::D, n)),
    ]
    .prop_map(|(f, n)| RootSystem::new(f, n).unwrap())
}

fn element(sys: RootSystem) -> impl Strategy<Value = SignedPerm> {
    let n = sys.rank;
    (
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        prop::collection::vec(prop::bool::ANY, n),
    )
        .prop_map(move |(perm, bits)| {
            let mut flips: Vec<i8> = bits.iter().map(|&b| if b { -1 } else { 1 }).collect();
            match sys.family {
                Family::A => flips = vec![1; n],
                Family::D if flips.iter().filter(|&&f| f < 0).count() % 2 == 1 => flips[0] = -flips[0],
                _ => {}
            }
            SignedPerm { perm, flips }
        })
}

fn int_weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i32..5, n).prop_map(|v| Weight::from_ints(&v))
}

fn system_with_elements() -> impl Strategy<Value = (RootSystem, SignedPerm, SignedPerm, Weight)> {
    system().prop_flat_map(|sys| (Just(sys), element(sys), element(sys), int_weight(sys.rank)))
}

fn crystal() -> impl Strategy<Value = Crystal> {
    prop_oneof![
        (2usize..=4).prop_map(|n| (Family::A, n)),
        (1usize..=3).prop_map(|n| (Family::B, n)),
        (1usize..=3).prop_map(|n| (Family::C, n)),
        (2usize..=4).prop_map(|n| (Family::D, n)),
    ]
    .prop_map(|(f, n)| Crystal::new(f, n).unwrap())
}

fn word_in(c: &Crystal, max_len: usize) -> impl Strategy<Value = Word> {
    let alphabet = c.alphabet();
    let family = c.system().family;
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len).prop_map(move |l| Word::new(family, l).unwrap())
}

fn crystal_word(max_len: usize) -> impl Strategy<Value = (Crystal, Word)> {
    crystal().prop_flat_map(move |c| {
        let w = word_in(&c, max_len);
        (Just(c), w)
    })
}

fn crystal_two_words() -> impl Strategy<Value = (Crystal, Word, Word)> {
    crystal().prop_flat_map(|c| {
        let (u, v) = (word_in(&c, 4), word_in(&c, 4));
        (Just(c), u, v)
    })
}

fn a_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 0..=8)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), QLaurent::zero());
        prop_assert_eq!(a.clone() * QLaurent::one(), a);
    }

    #[test]
    fn geometric_ratio_identity(k in 0i64..8, s in 1i64..4) {
        let a = k * s;
        let g = QLaurent::geometric_ratio(a, s).unwrap();
        let lhs = g * (QLaurent::q_pow(s) - QLaurent::one());
        prop_assert_eq!(lhs, QLaurent::q_pow(a) - QLaurent::one());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let back: QLaurent = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a).unwrap();
        let back: QLaurent = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn weyl_elements_are_isometries((sys, s, t, beta) in system_with_elements(), gamma_seed in 0u64..1000) {
        let gamma = Weight::from_ints(&(0..sys.rank).map(|k| ((gamma_seed >> k) % 5) as i32 - 2).collect::<Vec<_>>());
        prop_assert_eq!(s.act(&beta).dot_doubled(&s.act(&gamma)), beta.dot_doubled(&gamma));
        prop_assert_eq!(s.compose(&t).sign(), s.sign() * t.sign());
        prop_assert_eq!(s.compose(&t).act(&beta), s.act(&t.act(&beta)));
        prop_assert_eq!(s.inverse().act(&s.act(&beta)), beta.clone());
        let st = s.compose(&t);
        prop_assert_eq!(sys.dot_action(&s, &sys.dot_action(&t, &beta)), sys.dot_action(&st, &beta));
    }

    #[test]
    fn simple_root_coords_round_trip(sys in system(), seed in prop::collection::vec(0i64..4, 5)) {
        let simple = sys.simple_roots();
        let coords: Vec<i64> = (0..simple.len()).map(|j| seed[j % seed.len()]).collect();
        let mut beta = Weight::zero(sys.rank);
        for ((_, alpha), &c) in simple.iter().zip(&coords) {
            for _ in 0..c {
                beta = beta.add(alpha);
            }
        }
        prop_assert_eq!(sys.simple_root_coords(&beta), Some(coords));
    }

    #[test]
    fn raising_and_lowering_are_inverse((c, w) in crystal_word(8)) {
        let sys = c.system();
        let simple = sys.simple_roots();
        for (i, alpha) in &simple {
            if let Some(x) = c.f(&w, *i) {
                prop_assert_eq!(c.e(&x, *i), Some(w.clone()));
                prop_assert_eq!(c.weight(&x), c.weight(&w).sub(alpha));
            }
            if let Some(x) = c.e(&w, *i) {
                prop_assert_eq!(c.f(&x, *i), Some(w.clone()));
                prop_assert_eq!(c.weight(&x), c.weight(&w).add(alpha));
            }
            let (eps, phi) = c.eps_phi(&w, *i);
            let mut cur = w.clone();
            for _ in 0..eps {
                cur = c.e(&cur, *i).unwrap();
            }
            prop_assert!(c.e(&cur, *i).is_none());
            let mut cur = w.clone();
            for _ in 0..phi {
                cur = c.f(&cur, *i).unwrap();
            }
            prop_assert!(c.f(&cur, *i).is_none());
        }
    }

    #[test]
    fn highest_weight_tensor_test((c, u, v) in crystal_two_words()) {
        let direct = c.is_highest(&u.concat(&v));
        let predicate = c.is_highest(&u) && c.colors().all(|i| c.eps_phi(&v, i).0 <= c.eps_phi(&u, i).1);
        prop_assert_eq!(direct, predicate);
    }

    #[test]
    fn components_have_one_source((c, w) in crystal_word(3)) {
        let comp = c.component(&w, 100_000).unwrap();
        prop_assert_eq!(comp.iter().filter(|x| c.is_highest(x)).count(), 1);
    }

    #[test]
    fn transport_ignores_raising_order((c, w) in crystal_word(6)) {
        let (hw, path) = c.raise(&w);
        let mut cur = w.clone();
        let mut rev_path = Vec::new();
        'outer: loop {
            for i in c.colors().rev() {
                if let Some(x) = c.e(&cur, i) {
                    cur = x;
                    rev_path.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        prop_assert_eq!(&cur, &hw);
        prop_assert_eq!(c.transport(&path, &hw).unwrap(), w.clone());
        prop_assert_eq!(c.transport(&rev_path, &hw).unwrap(), w);
    }

    #[test]
    fn charge_is_weyl_invariant(w in a_word(), i in 1usize..4) {
        let c = Crystal::new(Family::A, 4).unwrap();
        let word = Word::from_codes(Family::A, &w.iter().map(|&x| x as i32).collect::<Vec<_>>()).unwrap();
        let moved: Vec<u32> = c.weyl_action(&word, i).codes().iter().map(|&x| x as u32).collect();
        prop_assert_eq!(charge_a(&moved).unwrap(), charge_a(&w).unwrap());
    }

    #[test]
    fn charge_is_plactic_and_bounded(w in a_word()) {
        let word = Word::from_codes(Family::A, &w.iter().map(|&x| x as i32).collect::<Vec<_>>()).unwrap();
        let p = p_symbol(Family::A, 4, &word).unwrap();
        let read: Vec<u32> = p.reading.codes().iter().map(|&x| x as u32).collect();
        let ch = charge_a(&w).unwrap();
        prop_assert_eq!(charge_a(&read).unwrap(), ch);
        let mut content = [0u64; 4];
        for &x in &w {
            content[x as usize - 1] += 1;
        }
        content.sort_unstable_by(|a, b| b.cmp(a));
        let top: u64 = content.iter().enumerate().map(|(i, m)| i as u64 * m).sum();
        prop_assert!(ch <= top);
    }
}

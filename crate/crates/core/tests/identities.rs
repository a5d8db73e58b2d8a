use kostka_core::cyclage::{cocyclage, cocyclage_authorized, weight_at, CyclageGraph};
use kostka_core::kostant::{kostant_q, kostka_def};
use kostka_core::morris::morris_kostka;
use kostka_core::pieri::pieri_crystal;
use kostka_core::statistic::h_n;
use kostka_core::tableau::{component_tableaux, factor_row, p_symbol, tableaux_of, Tableau};
use kostka_core::{Error, Family, GenPartition, QLaurent, RootSystem, Weight};

fn gp(f: Family, parts: &[i32]) -> GenPartition {
    GenPartition::from_ints(f, parts).unwrap()
}

fn zero(f: Family, n: usize) -> GenPartition {
    gp(f, &vec![0; n])
}

fn row(f: Family, n: usize, r: i32) -> GenPartition {
    let mut p = vec![0; n];
    p[0] = r;
    gp(f, &p)
}

fn size(p: &GenPartition) -> i32 {
    p.int_parts().unwrap().iter().map(|x| x.abs()).sum()
}

fn brute_count(roots: &[Weight], sys: RootSystem, beta: &Weight, from: usize) -> u64 {
    if beta.is_zero() {
        return 1;
    }
    if sys.simple_root_coords(beta).is_none() {
        return 0;
    }
    (from..roots.len()).map(|i| brute_count(roots, sys, &beta.sub(&roots[i]), i)).sum()
}

#[test]
fn partition_function_counts_root_multisets() {
    for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3)] {
        let sys = RootSystem::new(f, n).unwrap();
        let roots = sys.positive_roots();
        let simple: Vec<Weight> = sys.simple_roots().into_iter().map(|(_, a)| a).collect();
        let k = simple.len();
        let mut coords = vec![0i64; k];
        loop {
            if coords.iter().sum::<i64>() <= 6 {
                let mut beta = Weight::zero(n);
                for (a, &c) in simple.iter().zip(&coords) {
                    for _ in 0..c {
                        beta = beta.add(a);
                    }
                }
                let p = kostant_q(sys, &beta);
                assert!(p.is_poly_nonneg());
                assert_eq!(p.eval_at_one(), brute_count(&roots, sys, &beta, 0).into(), "{f}{n} {coords:?}");
            }
            let mut j = 0;
            while j < k && coords[j] == 6 {
                coords[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
            coords[j] += 1;
        }
    }
}

#[test]
fn equal_sizes_agree_across_families() {
    for n in 2..=3 {
        for lam in GenPartition::enumerate(Family::A, n, 4) {
            for mu in GenPartition::enumerate(Family::A, n, 4) {
                if lam.boxes() != mu.boxes() {
                    continue;
                }
                let (l, m) = (lam.int_parts().unwrap(), mu.int_parts().unwrap());
                let a = kostka_def(&lam, &mu).unwrap();
                for f in [Family::B, Family::C, Family::D] {
                    let k = kostka_def(&gp(f, &l), &gp(f, &m)).unwrap();
                    assert_eq!(k, a, "{f}{n} ({lam}) ({mu})");
                }
            }
        }
    }
}

#[test]
fn d_star_symmetry() {
    for n in 2..=4 {
        let shapes = GenPartition::enumerate(Family::D, n, 4);
        for lam in &shapes {
            for mu in &shapes {
                let ls = GenPartition::new(Family::D, lam.weight.star()).unwrap();
                let ms = GenPartition::new(Family::D, mu.weight.star()).unwrap();
                assert_eq!(kostka_def(lam, mu).unwrap(), kostka_def(&ls, &ms).unwrap(), "D{n} ({lam}) ({mu})");
            }
        }
    }
}

#[test]
fn equal_top_parts_reduce_rank() {
    for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
        let shapes = GenPartition::enumerate(f, n, 5);
        for lam in &shapes {
            for mu in &shapes {
                let (l, m) = (lam.int_parts().unwrap(), mu.int_parts().unwrap());
                if l[0] != m[0] {
                    continue;
                }
                let lower = kostka_def(&gp(f, &l[1..]), &gp(f, &m[1..])).unwrap();
                assert_eq!(kostka_def(lam, mu).unwrap(), lower, "{f}{n} ({lam}) ({mu})");
            }
        }
    }
}

#[test]
fn coefficients_are_nonnegative() {
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
        let shapes = GenPartition::enumerate(f, n, 4);
        for lam in &shapes {
            for mu in &shapes {
                assert!(kostka_def(lam, mu).unwrap().is_poly_nonneg(), "{f}{n} ({lam}) ({mu})");
            }
        }
    }
    let spin = GenPartition::new(Family::B, "3/2,1/2".parse().unwrap()).unwrap();
    let half = GenPartition::new(Family::B, "1/2,1/2".parse().unwrap()).unwrap();
    let k = kostka_def(&spin, &half).unwrap();
    assert!(k.is_poly_nonneg() && !k.is_zero());
}

#[test]
fn morris_vanishes_with_definition() {
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 3)] {
        let shapes = GenPartition::enumerate(f, n, 4);
        for lam in &shapes {
            for mu in shapes.iter().filter(|m| size(m) > size(lam)) {
                assert!(kostka_def(lam, mu).unwrap().is_zero());
                assert!(morris_kostka(lam, mu).unwrap().is_zero(), "{f}{n} ({lam}) ({mu})");
            }
        }
    }
}

#[test]
fn row_shapes_factor_through_weight_zero() {
    for (f, n) in [(Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
        for r in 0..=5 {
            for mu in GenPartition::enumerate(f, n, r) {
                let m = mu.int_parts().unwrap();
                if m[n - 1] < 0 {
                    continue;
                }
                let l = r - m.iter().sum::<i32>();
                let lhs = kostka_def(&row(f, n, r), &mu).unwrap();
                let rhs = kostka_def(&row(f, n, l), &zero(f, n)).unwrap().shift(h_n(&m));
                assert_eq!(lhs, rhs, "{f}{n} ({r}) ({mu})");
            }
        }
    }
}

#[test]
fn row_shapes_across_families() {
    for n in 2..=4 {
        for l in 0..=6 {
            let b = kostka_def(&row(Family::B, n, l), &zero(Family::B, n)).unwrap();
            if l % 2 == 0 {
                let c = kostka_def(&row(Family::C, n, l), &zero(Family::C, n)).unwrap();
                assert_eq!(b, c.shift(i64::from(l / 2)), "B{n}/C{n} ({l})");
            }
            if l % 2 == 0 {
                let d = kostka_def(&row(Family::D, n + 1, l), &zero(Family::D, n + 1)).unwrap();
                assert_eq!(d, b, "D{}/B{n} ({l})", n + 1);
            }
        }
    }
}

#[test]
fn pieri_dimension_bookkeeping() {
    let dim = |p: &GenPartition| -> usize { component_tableaux(p, 1_000_000).unwrap().len() };
    for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::D, 2)] {
        for g in GenPartition::enumerate(f, n, 3) {
            for r in 0..=3 {
                let m = pieri_crystal(&g, r).unwrap();
                let total: usize = m.iter().map(|(lam, c)| *c as usize * dim(lam)).sum();
                assert_eq!(total, dim(&g) * dim(&row(f, n, r as i32)), "{f}{n} ({g}) r={r}");
                for lam in m.keys() {
                    assert!(lam.system().is_dominant(&lam.weight));
                }
            }
        }
    }
}

#[test]
fn tableaux_round_trip_and_factor() {
    let mut factored = 0;
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
        for lam in GenPartition::enumerate(f, n, 3) {
            let negative = lam.int_parts().unwrap()[n - 1] < 0;
            for t in component_tableaux(&lam, 1_000_000).unwrap() {
                assert_eq!(p_symbol(f, n, &t.reading).unwrap(), t);
                let back = Tableau::from_rows(f, n, &t.rows()).unwrap();
                assert_eq!(back, t);
                if negative || n < 2 {
                    continue;
                }
                match factor_row(&t) {
                    Ok((r, rest)) => {
                        assert_eq!(r.row_lengths().len(), usize::from(lam.int_parts().unwrap()[0] > 0));
                        let joined = r.reading.concat(&rest.reading);
                        let again = p_symbol(f, n, &joined).unwrap();
                        assert_eq!(again, t, "{f}{n}\n{}", t.render());
                        let expected: Vec<i32> = lam.int_parts().unwrap()[1..].to_vec();
                        assert_eq!(rest.parts(), expected);
                        factored += 1;
                    }
                    Err(Error::PropertyViolation(_)) => {}
                    Err(e) => panic!("{f}{n}\n{}\n{e}", t.render()),
                }
            }
        }
    }
    assert!(factored > 100, "{factored}");
}

#[test]
fn cocyclage_keeps_weight() {
    for (f, n) in [(Family::B, 3), (Family::D, 3)] {
        for lam in GenPartition::enumerate(f, n, 4) {
            for mu in [Weight::zero(n), Weight::from_ints(&{
                let mut v = vec![0; n];
                v[0] = 1;
                v
            })] {
                let seeds = tableaux_of(&lam, &mu).unwrap();
                for t in &seeds {
                    if !cocyclage_authorized(t) {
                        continue;
                    }
                    let u = cocyclage(t).unwrap();
                    let r = n.max(u.rank);
                    assert_eq!(weight_at(&u, r), mu.padded(r), "{f}{n}\n{}", t.render());
                    assert_eq!(u.num_boxes(), t.num_boxes());
                }
                let g = CyclageGraph::build(&seeds, 10_000).unwrap();
                assert_eq!(g.next.len(), g.nodes.len());
            }
        }
    }
}

#[test]
fn polynomial_helpers_on_oracle_values() {
    let k = kostka_def(&gp(Family::B, &[4, 1]), &gp(Family::B, &[1, 0])).unwrap();
    assert_eq!(k.eval_at_one(), 6.into());
    assert_eq!(k.exponent_multiset(), Some(vec![3, 4, 5, 5, 6, 7]));
    assert_eq!(k - QLaurent::q_pow(7), "q^6+2q^5+q^4+q^3".parse().unwrap());
}

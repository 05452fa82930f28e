use std::collections::HashSet;

use omega_mono::ed2::{bullet_structure_ed2, ed2_bound, omega_closed_form, single_support_pair};
use omega_mono::omega::{
    bullets, bullets_exhaustive, bullets_with_support, cover_map, omega, omega_value,
};
use omega_mono::NumericalMonoid;
use proptest::prelude::*;

fn monoid_strategy(max_gen: u64, max_k: usize) -> impl Strategy<Value = NumericalMonoid> {
    prop::collection::vec(2..=max_gen, 2..=max_k)
        .prop_filter_map("gcd 1", |g| NumericalMonoid::new_reduced(&g).ok())
}

fn two_generated(max_gen: u64) -> impl Strategy<Value = NumericalMonoid> {
    (2..max_gen, 3..=max_gen).prop_filter_map("coprime pair", |(a, b)| {
        NumericalMonoid::new(&[a, b])
            .ok()
            .filter(|m| m.embedding_dimension() == 2)
    })
}

fn dp_table(gens: &[u64], upto: usize) -> Vec<bool> {
    let mut t = vec![false; upto + 1];
    t[0] = true;
    for v in 1..=upto {
        t[v] = gens.iter().any(|&g| g as usize <= v && t[v - g as usize]);
    }
    t
}

fn grid_factorizations(gens: &[u64], n: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &g in gens {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=n / g).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out.retain(|c| c.iter().zip(gens).map(|(a, g)| a * g).sum::<u64>() == n);
    out.sort();
    out
}

#[test]
fn nonmaximal_support_gives_no_gain() {
    // bul_2(19) in <3,10> is {(0,4), (3,1)}, neither maximal: ω(29) = ω(19).
    let m = NumericalMonoid::new(&[3, 10]).unwrap();
    assert!(!bullets_with_support(&m, 19, 1).unwrap().is_empty());
    assert_eq!(omega_value(&m, 19).unwrap(), 13);
    assert_eq!(omega_value(&m, 29).unwrap(), 13);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apery_and_membership(m in monoid_strategy(40, 4)) {
        let gens = m.generators().to_vec();
        let n1 = m.multiplicity();
        for (r, &w) in m.apery_n1().iter().enumerate() {
            prop_assert_eq!(w % n1, r as u64);
            prop_assert!(m.contains(w as i64));
            prop_assert!(!m.contains(w as i64 - n1 as i64));
        }
        prop_assert_eq!(m.frobenius(), *m.apery_n1().iter().max().unwrap() as i64 - n1 as i64);
        let upto = (m.frobenius() + 2 * *gens.last().unwrap() as i64) as usize;
        let table = dp_table(&gens, upto);
        for v in 0..=upto {
            prop_assert_eq!(m.contains(v as i64), table[v]);
        }
        for x in [gens[0], gens[1], gens[0] + gens[1]] {
            let ap = m.apery_set(x).unwrap();
            prop_assert_eq!(ap.len() as u64, x);
            let classes: HashSet<u64> = ap.iter().map(|a| a % x).collect();
            prop_assert_eq!(classes.len() as u64, x);
            for a in ap {
                prop_assert!(m.contains(a as i64) && !m.contains(a as i64 - x as i64));
            }
        }
    }

    #[test]
    fn factorizations_match_grid(m in monoid_strategy(15, 3), n in 0u64..60) {
        let got: Vec<Vec<u64>> = m.factorizations(n).into_iter().map(|f| f.coords).collect();
        prop_assert_eq!(got, grid_factorizations(m.generators(), n));
    }

    #[test]
    fn bullet_sets_are_complete(m in monoid_strategy(14, 3), n in 1u64..90) {
        prop_assume!(m.contains_u64(n));
        let fast = bullets(&m, n).unwrap();
        prop_assert_eq!(&fast, &bullets_exhaustive(&m, n).unwrap());
        let k = m.embedding_dimension();
        for j in 0..k {
            let single: Vec<_> = fast
                .iter()
                .filter(|b| b.support() == vec![j])
                .collect();
            prop_assert_eq!(single.len(), 1);
        }
        for b in &fast {
            prop_assert!(b.is_valid(&m));
        }
        let record = omega(&m, n).unwrap();
        let longest = fast.iter().map(|b| b.length()).max().unwrap();
        prop_assert_eq!(record.omega, longest);
        for b in &record.maximal_bullets {
            prop_assert_eq!(b.length(), record.omega);
        }
        let longest_factorization = m.factorizations(n).iter().map(|f| f.length()).max().unwrap();
        prop_assert!(record.omega >= longest_factorization);
    }

    #[test]
    fn cover_maps(m in monoid_strategy(12, 3), n in 1u64..70, a in 0u64..4) {
        prop_assume!(m.contains_u64(n));
        let w = omega_value(&m, n).unwrap();
        for j in 0..m.embedding_dimension() {
            let gj = m.generators()[j];
            let source = bullets_with_support(&m, n, j).unwrap();
            let mut images = HashSet::new();
            for b in &source {
                let img = cover_map(&m, b, j, a).unwrap();
                prop_assert_eq!(img.length(), b.length() + a);
                prop_assert_eq!(img.target, n + a * gj);
                images.insert(img.coords);
            }
            prop_assert_eq!(images.len(), source.len());
            // Cover maps only lift bullets that use n_j, so the gain is
            // guaranteed when a maximal bullet does.
            let next = omega_value(&m, n + gj).unwrap();
            let best_lifted = source.iter().map(|b| b.length()).max().unwrap();
            prop_assert!(next >= best_lifted + 1);
            if best_lifted == w {
                prop_assert!(next >= w + 1);
            }
        }
    }

    #[test]
    fn cover_length_gain_favours_smaller_generator(m in monoid_strategy(12, 3), n in 1u64..60) {
        prop_assume!(m.contains_u64(n));
        let gens = m.generators().to_vec();
        for b in bullets(&m, n).unwrap() {
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    if b.coords[i] == 0 || b.coords[j] == 0 {
                        continue;
                    }
                    let l = gens[i] * gens[j];
                    let via_i = cover_map(&m, &b, i, l / gens[i]).unwrap();
                    let via_j = cover_map(&m, &b, j, l / gens[j]).unwrap();
                    prop_assert_eq!(via_i.target, via_j.target);
                    prop_assert!(via_i.length() > via_j.length());
                }
            }
        }
    }

    #[test]
    fn ed2_closed_form_above_proven_bound(m in two_generated(9)) {
        let d = ed2_bound(&m).unwrap();
        let p = d.n1 * d.n2;
        for n in d.proven_bound + 1..=d.proven_bound + 3 * p {
            if !m.contains_u64(n) {
                continue;
            }
            let cf = omega_closed_form(&d, n).unwrap();
            prop_assert!(!cf.below_bound);
            prop_assert_eq!(cf.value, omega_value(&m, n).unwrap());
        }
        for n in 1..=2 * p {
            if !m.contains_u64(n) {
                continue;
            }
            bullet_structure_ed2(&m, n).unwrap();
            let (u, v) = single_support_pair(&m, n).unwrap();
            prop_assert_eq!(single_support_pair(&m, n + p).unwrap(), (u + d.n2, v + d.n1));
        }
    }
}

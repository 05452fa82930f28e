//! Bullet-based ω against the definition-level brute force.

use omega_mono::omega::{omega_bruteforce, omega_value};
use omega_mono::NumericalMonoid;

const BUDGET: u64 = 50_000_000;

fn agree_up_to(gens: &[u64], limit: u64) {
    let m = NumericalMonoid::new(gens).unwrap();
    for n in 1..=limit {
        if !m.contains_u64(n) {
            continue;
        }
        assert_eq!(
            omega_value(&m, n).unwrap(),
            omega_bruteforce(&m, n, BUDGET).unwrap(),
            "{gens:?} at {n}"
        );
    }
}

#[test]
fn two_generated() {
    agree_up_to(&[2, 3], 120);
    agree_up_to(&[3, 7], 120);
    agree_up_to(&[5, 8], 80);
}

#[test]
fn three_generated() {
    agree_up_to(&[4, 5, 6], 80);
    agree_up_to(&[6, 9, 20], 80);
    agree_up_to(&[3, 5, 7], 60);
}

#[test]
fn four_generated() {
    agree_up_to(&[5, 6, 7, 8], 40);
}

#[test]
fn example_table_values() {
    // n -> ω(n) for <3,7>, read off the worked table for 3..=20.
    let expected = [
        (3, 3), (6, 3), (7, 7), (9, 3), (10, 8), (12, 4), (13, 9), (14, 7),
        (15, 5), (16, 10), (17, 8), (18, 6), (19, 11), (20, 9),
    ];
    let m = NumericalMonoid::new(&[3, 7]).unwrap();
    for (n, w) in expected {
        assert_eq!(omega_bruteforce(&m, n, BUDGET).unwrap(), w, "n = {n}");
    }
}

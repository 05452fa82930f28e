//! Embedding dimension two.
//!
//! For `M = <n1, n2>` every bullet of `n` is either single-support,
//! `(u, 0)` or `(0, v)`, or a factorization of `n`, and only the two
//! single-support bullets can be maximal. Once `u(n) >= v(n)` this gives
//! `ω(n) = q + a` where `n = q n1 + r` and `a` is the least non-negative
//! integer with `a n1 ≡ r (mod n2)`.

use crate::error::{Ed2Error, MonoidError};
use crate::monoid::NumericalMonoid;
use crate::omega::{bullets, omega, single_support_bullet, Bullet};

/// Precomputed data for the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ed2Data {
    pub n1: u64,
    pub n2: u64,
    pub n1_inverse_mod_n2: u64,
    /// `max(0, max_t v(n1 n2 + t) - u(n1 n2 + t))` over `0 <= t < n1 n2`.
    pub c: u64,
    /// `c n1 n2`, the published threshold for the closed form.
    pub bound: u64,
    /// `(c + 1) n1 n2 - 1`. Above it the shift argument `u(n) - v(n) =
    /// (s - 1)(n2 - n1) + u(n1 n2 + t) - v(n1 n2 + t) >= 0` goes through for
    /// every `n = s n1 n2 + t`. The published `bound` can be too small:
    /// `<3, 7>` has `c = 0` yet `ω(6) = 3 != 2`, and `<5, 6>` has `bound = 90`
    /// with the closed form still failing at 95.
    pub proven_bound: u64,
    monoid: NumericalMonoid,
}

/// A closed-form value with a flag for inputs at or below the proven bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: u64,
    pub q: u64,
    pub a: u64,
    pub below_bound: bool,
}

fn require_two(monoid: &NumericalMonoid) -> Result<(u64, u64), Ed2Error> {
    match *monoid.generators() {
        [n1, n2] => Ok((n1, n2)),
        _ => Err(Ed2Error::WrongEmbeddingDimension {
            k: monoid.embedding_dimension(),
        }),
    }
}

fn inverse_mod(x: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (x as i128 % modulus as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(modulus as i128) as u64
}

/// Lengths `(u(n), v(n))` of the single-support bullets of `n`.
pub fn single_support_pair(monoid: &NumericalMonoid, n: u64) -> Result<(u64, u64), Ed2Error> {
    require_two(monoid)?;
    let u = single_support_bullet(monoid, n, 0).map_err(into_ed2)?.coords[0];
    let v = single_support_bullet(monoid, n, 1).map_err(into_ed2)?.coords[1];
    Ok((u, v))
}

fn into_ed2(e: crate::error::OmegaError) -> Ed2Error {
    match e {
        crate::error::OmegaError::Monoid(m) => Ed2Error::Monoid(m),
        other => unreachable!("unexpected error for a valid index: {other}"),
    }
}

/// Computes `c` and the dissonance bounds for a two-generated monoid.
pub fn ed2_bound(monoid: &NumericalMonoid) -> Result<Ed2Data, Ed2Error> {
    let (n1, n2) = require_two(monoid)?;
    let period = n1.checked_mul(n2).ok_or(MonoidError::Overflow)?;
    let mut c = 0u64;
    for t in 0..period {
        let n = period + t;
        // Always a member (n1 n2 exceeds the Frobenius number), kept for clarity.
        if !monoid.contains_u64(n) {
            continue;
        }
        let (u, v) = single_support_pair(monoid, n)?;
        c = c.max(v.saturating_sub(u));
    }
    let bound = c.checked_mul(period).ok_or(MonoidError::Overflow)?;
    let proven_bound = (c + 1)
        .checked_mul(period)
        .ok_or(MonoidError::Overflow)?
        - 1;
    Ok(Ed2Data {
        n1,
        n2,
        n1_inverse_mod_n2: inverse_mod(n1, n2),
        c,
        bound,
        proven_bound,
        monoid: monoid.clone(),
    })
}

/// `ω(n) = q + a` with `n = q n1 + r` and `a = r n1^{-1} mod n2`.
pub fn omega_closed_form(data: &Ed2Data, n: u64) -> Result<ClosedForm, Ed2Error> {
    data.monoid.check_member(n)?;
    let q = n / data.n1;
    let r = n % data.n1;
    let a = ((r as u128 * data.n1_inverse_mod_n2 as u128) % data.n2 as u128) as u64;
    Ok(ClosedForm {
        value: q + a,
        q,
        a,
        below_bound: n <= data.proven_bound,
    })
}

/// `Ap(M, n_i) = { a n_j : 0 <= a < n_i }`, checked against the generic
/// Apéry computation. `i` is 0-based.
pub fn apery_ed2(monoid: &NumericalMonoid, i: usize) -> Result<Vec<u64>, Ed2Error> {
    let (n1, n2) = require_two(monoid)?;
    let (ni, nj) = match i {
        0 => (n1, n2),
        1 => (n2, n1),
        _ => return Err(Ed2Error::IndexOutOfRange { index: i }),
    };
    let mut set: Vec<u64> = (0..ni).map(|a| a * nj).collect();
    set.sort_unstable();
    assert_eq!(set, monoid.apery_set(ni)?, "Apéry formula disagrees for {monoid:?}");
    Ok(set)
}

/// `bul(n)` split as `{(u,0), (0,v)} ∪ factorizations(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BulletStructure {
    pub u_bullet: Bullet,
    pub v_bullet: Bullet,
    /// Factorizations of `n`, each of which is a bullet.
    pub factorization_bullets: Vec<Bullet>,
}

/// Decomposes `bul(n)` and checks the decomposition is exact and that
/// every maximal bullet is single-support.
pub fn bullet_structure_ed2(monoid: &NumericalMonoid, n: u64) -> Result<BulletStructure, Ed2Error> {
    require_two(monoid)?;
    let u_bullet = single_support_bullet(monoid, n, 0).map_err(into_ed2)?;
    let v_bullet = single_support_bullet(monoid, n, 1).map_err(into_ed2)?;
    let factorization_bullets: Vec<Bullet> = monoid
        .factorizations(n)
        .into_iter()
        .map(|f| Bullet {
            coords: f.coords,
            target: n,
        })
        .collect();

    let mut expected: Vec<Vec<u64>> = factorization_bullets
        .iter()
        .map(|b| b.coords.clone())
        .chain([u_bullet.coords.clone(), v_bullet.coords.clone()])
        .collect();
    expected.sort();
    expected.dedup();
    let mut actual: Vec<Vec<u64>> = bullets(monoid, n)
        .map_err(into_ed2)?
        .into_iter()
        .map(|b| b.coords)
        .collect();
    actual.sort();
    assert_eq!(actual, expected, "bullet decomposition fails at {n}");

    let record = omega(monoid, n).map_err(into_ed2)?;
    assert!(
        record
            .maximal_bullets
            .iter()
            .all(|b| b.coords == u_bullet.coords || b.coords == v_bullet.coords),
        "a maximal bullet of {n} is not single-support"
    );

    Ok(BulletStructure {
        u_bullet,
        v_bullet,
        factorization_bullets,
    })
}

//! Eventual quasilinearity of ω.
//!
//! For large `n` in the monoid, `ω(n) = n / n_1 + a(n)` where `a` depends only
//! on `n mod n_1`. [`fit`] recovers `a` from a computed table, locates the
//! dissonance point (the last element where the formula fails) and checks
//! the tail recurrence `ω(n + n_1) = ω(n) + 1` over a trailing window.
//! [`theoretical_bound`] evaluates the explicit threshold `N0 = n0 + c m`.

use crate::error::{BoundError, FitError, MonoidError, OmegaError};
use crate::monoid::NumericalMonoid;
use crate::omega::{omega, omega_value, scan_bullets, single_support_bounds};
use crate::Rational;

/// Eventual quasilinear form of ω, fitted on `[0, horizon]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasilinearFit {
    pub n1: u64,
    pub horizon: u64,
    /// `a(r) = ω(n) - n / n_1` on the tail, for `r = n mod n_1`.
    pub a_table: Vec<Rational>,
    /// Integer offsets `ω(n) - floor(n / n_1)` on the tail, so that
    /// `ω(n) = q + offsets[r]` when `n = q n_1 + r`.
    pub offsets: Vec<i64>,
    /// Largest computed element where ω disagrees with the fit; `None` if
    /// the fit holds everywhere on `[0, horizon]`.
    pub dissonance: Option<u64>,
    /// Minimal `p | n_1` for which `a_table` is `p`-periodic.
    pub period: u64,
    /// Length of the trailing window used for the stability check.
    pub window: u64,
    pub stable: bool,
}

impl QuasilinearFit {
    /// `n / n_1 + a(n mod n_1)`.
    pub fn predict(&self, n: u64) -> Rational {
        Rational::new(n as i64, self.n1 as i64) + self.a_table[(n % self.n1) as usize]
    }

    /// Largest `|a(r)|`.
    pub fn max_abs_a(&self) -> Rational {
        self.a_table
            .iter()
            .map(|a| if *a < Rational::from_integer(0) { -a } else { *a })
            .max()
            .unwrap_or_else(|| Rational::from_integer(0))
    }
}

/// ω on `[0, horizon]`, `None` off the monoid.
pub fn omega_table(monoid: &NumericalMonoid, horizon: u64) -> Result<Vec<Option<u64>>, OmegaError> {
    (0..=horizon)
        .map(|n| {
            if monoid.contains_u64(n) {
                omega_value(monoid, n).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect()
}

/// Fits the quasilinear tail of ω up to `horizon`.
pub fn fit(monoid: &NumericalMonoid, horizon: u64) -> Result<QuasilinearFit, FitError> {
    check_horizon(monoid, horizon)?;
    let values = omega_table(monoid, horizon)?;
    fit_from_values(monoid, &values)
}

fn check_horizon(monoid: &NumericalMonoid, horizon: u64) -> Result<(), FitError> {
    // Every residue class mod n_1 has an element in (frobenius, frobenius + n_1].
    let required = (monoid.frobenius() + monoid.multiplicity() as i64).max(0) as u64;
    if horizon < required {
        return Err(FitError::NotComputable { horizon, required });
    }
    Ok(())
}

/// Assembles a fit from a precomputed table `values[n] = ω(n)` (or `None`
/// off the monoid), `n = 0..=horizon`.
pub fn fit_from_values(
    monoid: &NumericalMonoid,
    values: &[Option<u64>],
) -> Result<QuasilinearFit, FitError> {
    let horizon = values.len().saturating_sub(1) as u64;
    check_horizon(monoid, horizon)?;
    let n1 = monoid.multiplicity();
    let ratio = |n: u64| Rational::new(n as i64, n1 as i64);

    // a(r) from the topmost element of each residue class.
    let mut a_table = vec![None; n1 as usize];
    let mut offsets = vec![0i64; n1 as usize];
    for n in (0..=horizon).rev() {
        let r = (n % n1) as usize;
        if a_table[r].is_some() {
            continue;
        }
        if let Some(w) = values[n as usize] {
            a_table[r] = Some(Rational::from_integer(w as i64) - ratio(n));
            offsets[r] = w as i64 - (n / n1) as i64;
        }
    }
    let a_table: Vec<Rational> = a_table
        .into_iter()
        .map(|a| a.expect("all residues present above the Frobenius number"))
        .collect();

    let dissonance = (0..=horizon).rev().find(|&n| match values[n as usize] {
        Some(w) => Rational::from_integer(w as i64) != ratio(n) + a_table[(n % n1) as usize],
        None => false,
    });

    let window = (2 * monoid.lcm()).min(horizon / 4);
    let start = horizon - window;
    let recurrence_holds = (start..=horizon.saturating_sub(n1)).all(|n| {
        match (values[n as usize], values[(n + n1) as usize]) {
            (Some(w), Some(next)) => next == w + 1,
            _ => true,
        }
    });
    // 5 d < 4 h, i.e. the dissonance sits below 80% of the horizon.
    let clear_of_top = dissonance.is_none_or(|d| 5 * d < 4 * horizon);

    let fitted = QuasilinearFit {
        n1,
        horizon,
        period: minimal_period(&a_table),
        a_table,
        offsets,
        dissonance,
        window,
        stable: recurrence_holds && clear_of_top,
    };
    if fitted.stable {
        Ok(fitted)
    } else {
        Err(FitError::HorizonTooSmall(Box::new(fitted)))
    }
}

fn minimal_period(a_table: &[Rational]) -> u64 {
    let len = a_table.len();
    (1..=len)
        .filter(|p| len % p == 0)
        .find(|&p| (0..len).all(|r| a_table[r] == a_table[(r + p) % len]))
        .unwrap_or(len) as u64
}

/// Minimal `p | n_1` with `fit(n + p) = fit(n) + p / n_1` for every `n`.
pub fn period(fit: &QuasilinearFit) -> Result<u64, FitError> {
    if !fit.stable {
        return Err(FitError::UnstableFit);
    }
    Ok(minimal_period(&fit.a_table))
}

/// `ω(n) / n` as an exact rational.
pub fn slope_estimate(monoid: &NumericalMonoid, n: u64) -> Result<Rational, OmegaError> {
    if n == 0 {
        return Err(MonoidError::ZeroElement.into());
    }
    let w = omega_value(monoid, n)?;
    Ok(Rational::new(w as i64, n as i64))
}

/// Elements of `[lo, hi]` in the monoid with no maximal bullet using `n_1`.
pub fn check_bul1(monoid: &NumericalMonoid, lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(1)..=hi)
        .filter(|&n| monoid.contains_u64(n))
        .filter(|&n| {
            let record = omega(monoid, n).expect("member");
            !record.maximal_bullets.iter().any(|b| b.coords[0] > 0)
        })
        .collect()
}

/// Coordinate `j` of every maximal bullet of every element `n` in `[lo, hi]`
/// with `n ≡ residue (mod modulus)`: returns the common value if there is
/// exactly one, otherwise `None`.
pub fn common_maximal_coordinate(
    monoid: &NumericalMonoid,
    lo: u64,
    hi: u64,
    modulus: u64,
    residue: u64,
    j: usize,
) -> Result<Option<u64>, OmegaError> {
    let mut seen: Option<u64> = None;
    for n in (lo.max(1)..=hi).filter(|n| n % modulus == residue % modulus) {
        if !monoid.contains_u64(n) {
            continue;
        }
        for b in omega(monoid, n)?.maximal_bullets {
            let v = *b.coords.get(j).ok_or(OmegaError::IndexOutOfRange {
                index: j,
                k: b.coords.len(),
            })?;
            match seen {
                None => seen = Some(v),
                Some(s) if s != v => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(seen)
}

/// The explicit threshold `N0 = n0 + c m` past which `ω(n + n_1) = ω(n) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoreticalBound {
    /// `m = lcm(n_1, ..., n_k)`.
    pub m: u64,
    /// `n0 = m * Σ n_i`.
    pub base: u64,
    /// `c_r`: spread of bullet lengths at `n0 + r`, for the residues done so far.
    pub c_table: Vec<u64>,
    /// Maximum over `c_table`.
    pub c: u64,
    /// `N0 = n0 + c m`. A lower bound on the true value while incomplete.
    pub threshold: u64,
    pub complete: bool,
    /// Box cells visited.
    pub work: u64,
}

/// Default work budget for [`theoretical_bound`].
pub const DEFAULT_BOUND_BUDGET: u64 = 500_000_000;

/// Computes `N0`, stopping with a partial result once `budget` box cells
/// have been scanned.
pub fn theoretical_bound(
    monoid: &NumericalMonoid,
    budget: u64,
) -> Result<TheoreticalBound, BoundError> {
    let m = monoid.lcm();
    let base = m
        .checked_mul(monoid.generator_sum())
        .ok_or(MonoidError::Overflow)?;
    let mut partial = TheoreticalBound {
        m,
        base,
        c_table: Vec::with_capacity(m as usize),
        c: 0,
        threshold: base,
        complete: false,
        work: 0,
    };
    for r in 0..m {
        let n = base.checked_add(r).ok_or(MonoidError::Overflow)?;
        let bounds = single_support_bounds(monoid, n);
        let (mut shortest, mut longest) = (u64::MAX, 0u64);
        let spent = scan_bullets(monoid, n, &bounds, budget - partial.work, |c| {
            let len: u64 = c.iter().sum();
            shortest = shortest.min(len);
            longest = longest.max(len);
        });
        match spent {
            Ok(w) => {
                partial.work += w;
                let c_r = longest - shortest;
                partial.c_table.push(c_r);
                partial.c = partial.c.max(c_r);
                partial.threshold = partial
                    .c
                    .checked_mul(m)
                    .and_then(|cm| cm.checked_add(base))
                    .ok_or(MonoidError::Overflow)?;
            }
            Err(_) => {
                partial.work = budget;
                return Err(BoundError::BudgetExceeded(Box::new(partial)));
            }
        }
    }
    partial.complete = true;
    Ok(partial)
}

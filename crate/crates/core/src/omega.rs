//! Bullets and ω-primality.
//!
//! A bullet for `n` is an exponent vector `a` whose value covers `n`
//! (`Σ a_i n_i - n` lies in the monoid) and stops covering it as soon as any
//! used generator is removed. `ω(n)` is the largest bullet length.
//!
//! The production path ([`bullets`], [`omega`]) scans the box cut out by the
//! single-support bullet lengths, enumerating every coordinate except the
//! first and solving for the first through the Apéry table of `n_1`.
//! [`bullets_exhaustive`] scans the same box without any of that and exists
//! as a reference. [`omega_bruteforce`] works straight from the divisibility
//! definition and shares no code with either.

use std::cmp::Ordering;

use crate::error::{MonoidError, OmegaError};
use crate::monoid::{support_of, NumericalMonoid};

/// Default cap on vectors enumerated by [`omega_bruteforce`].
pub const DEFAULT_BRUTEFORCE_BUDGET: u64 = 10_000_000;

/// An exponent vector satisfying the bullet conditions for `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bullet {
    pub coords: Vec<u64>,
    pub target: u64,
}

impl Bullet {
    pub fn length(&self) -> u64 {
        self.coords.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        support_of(&self.coords)
    }

    /// Checks both bullet conditions directly against `monoid`.
    pub fn is_valid(&self, monoid: &NumericalMonoid) -> bool {
        is_bullet(monoid, &self.coords, self.target)
    }
}

/// Descending lexicographic order, so `(3,0)` is listed before `(0,3)`.
pub fn bullet_order(a: &Bullet, b: &Bullet) -> Ordering {
    b.coords.cmp(&a.coords)
}

/// ω(n) together with every bullet attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaRecord {
    pub n: u64,
    pub omega: u64,
    /// Sorted by [`bullet_order`].
    pub maximal_bullets: Vec<Bullet>,
    /// `b_j`: length of the bullet supported on generator `j` alone.
    pub single_support_lengths: Vec<u64>,
}

fn is_bullet(monoid: &NumericalMonoid, coords: &[u64], target: u64) -> bool {
    let gens = monoid.generators();
    let total: i64 = coords
        .iter()
        .zip(gens)
        .map(|(&a, &g)| (a * g) as i64)
        .sum();
    let excess = total - target as i64;
    if !monoid.contains(excess) {
        return false;
    }
    coords
        .iter()
        .zip(gens)
        .all(|(&a, &g)| a == 0 || !monoid.contains(excess - g as i64))
}

fn check_positive_member(monoid: &NumericalMonoid, n: u64) -> Result<(), MonoidError> {
    if n == 0 {
        return Err(MonoidError::ZeroElement);
    }
    monoid.check_member(n)
}

/// Minimal `b >= 1` with `b * n_j - n` in the monoid.
fn single_support_length(monoid: &NumericalMonoid, n: u64, j: usize) -> u64 {
    let g = monoid.generators()[j];
    let ap = monoid.apery_of_generator(j);
    // b*g - n is in the monoid iff it is at least the Apéry element of its class.
    let class = (g - n % g) % g;
    (n + ap[class as usize]).div_ceil(g)
}

fn single_support_lengths(monoid: &NumericalMonoid, n: u64) -> Vec<u64> {
    (0..monoid.embedding_dimension())
        .map(|j| single_support_length(monoid, n, j))
        .collect()
}

/// The bullet `(0, ..., b_j, ..., 0)` for `n`, with `j` a 0-based generator index.
pub fn single_support_bullet(
    monoid: &NumericalMonoid,
    n: u64,
    j: usize,
) -> Result<Bullet, OmegaError> {
    let k = monoid.embedding_dimension();
    if j >= k {
        return Err(OmegaError::IndexOutOfRange { index: j, k });
    }
    check_positive_member(monoid, n)?;
    let mut coords = vec![0; k];
    coords[j] = single_support_length(monoid, n, j);
    Ok(Bullet { coords, target: n })
}

/// Returned by the scan when its work limit runs out.
#[derive(Debug)]
pub(crate) struct WorkExceeded;

/// Pruned enumeration of `bul(n)` inside the box `0 <= a_j <= bounds[j]`.
struct BulletScan<'a, F> {
    monoid: &'a NumericalMonoid,
    target: i64,
    bounds: &'a [u64],
    coords: Vec<u64>,
    work: u64,
    limit: u64,
    visit: F,
}

impl<F: FnMut(&[u64])> BulletScan<'_, F> {
    fn descend(&mut self, idx: usize, partial: i64, excess_cap: i64) -> Result<(), WorkExceeded> {
        if idx == 0 {
            self.close(partial);
            return Ok(());
        }
        let g = self.monoid.generators()[idx] as i64;
        let frob = self.monoid.frobenius();
        for a in 0..=self.bounds[idx] {
            self.work += 1;
            if self.work > self.limit {
                return Err(WorkExceeded);
            }
            let p = partial + a as i64 * g;
            let cap = if a > 0 { excess_cap.min(frob + g) } else { excess_cap };
            // A bullet's excess lies in Ap(M, n_j) for every j in its support,
            // so it never exceeds frobenius + n_j. Extending only grows it.
            if p - self.target > cap {
                break;
            }
            self.coords[idx] = a;
            self.descend(idx - 1, p, cap)?;
        }
        self.coords[idx] = 0;
        Ok(())
    }

    /// Picks the only admissible first coordinate and tests the rest.
    fn close(&mut self, partial: i64) {
        let monoid = self.monoid;
        let n1 = monoid.multiplicity() as i64;
        let s = partial - self.target;
        let a1 = if monoid.contains(s) {
            0
        } else {
            let floor = monoid.apery_n1()[s.rem_euclid(n1) as usize] as i64;
            (floor - s + n1 - 1).div_euclid(n1)
        };
        if a1 as u64 > self.bounds[0] {
            return;
        }
        let excess = s + a1 * n1;
        let gens = monoid.generators();
        for j in 1..gens.len() {
            if self.coords[j] > 0 && monoid.contains(excess - gens[j] as i64) {
                return;
            }
        }
        self.coords[0] = a1 as u64;
        (self.visit)(&self.coords);
        self.coords[0] = 0;
    }
}

/// Streams every bullet of `n > 0` (a member) to `visit`, stopping with
/// `WorkExceeded` once more than `limit` box cells have been touched.
/// Returns the work spent.
pub(crate) fn scan_bullets<F: FnMut(&[u64])>(
    monoid: &NumericalMonoid,
    n: u64,
    bounds: &[u64],
    limit: u64,
    visit: F,
) -> Result<u64, WorkExceeded> {
    let k = monoid.embedding_dimension();
    let max_gen = *monoid.generators().last().unwrap() as i64;
    let mut scan = BulletScan {
        monoid,
        target: n as i64,
        bounds,
        coords: vec![0; k],
        work: 0,
        limit,
        visit,
    };
    scan.descend(k - 1, 0, monoid.frobenius() + max_gen)?;
    Ok(scan.work.max(1))
}

pub(crate) fn single_support_bounds(monoid: &NumericalMonoid, n: u64) -> Vec<u64> {
    single_support_lengths(monoid, n)
}

/// The complete set `bul(n)`, sorted by [`bullet_order`].
pub fn bullets(monoid: &NumericalMonoid, n: u64) -> Result<Vec<Bullet>, OmegaError> {
    check_positive_member(monoid, n)?;
    let bounds = single_support_lengths(monoid, n);
    let mut out = Vec::new();
    let _ = scan_bullets(monoid, n, &bounds, u64::MAX, |c| {
        out.push(Bullet {
            coords: c.to_vec(),
            target: n,
        })
    });
    out.sort_by(bullet_order);
    Ok(out)
}

/// Unpruned scan of the whole box `0 <= a_j <= b_j`, testing each cell
/// against both bullet conditions. Reference path for [`bullets`].
pub fn bullets_exhaustive(monoid: &NumericalMonoid, n: u64) -> Result<Vec<Bullet>, OmegaError> {
    check_positive_member(monoid, n)?;
    let bounds = single_support_lengths(monoid, n);
    let k = bounds.len();
    let mut out = Vec::new();
    let mut coords = vec![0u64; k];
    'cells: loop {
        if is_bullet(monoid, &coords, n) {
            out.push(Bullet {
                coords: coords.clone(),
                target: n,
            });
        }
        // odometer increment
        for i in 0..k {
            if coords[i] < bounds[i] {
                coords[i] += 1;
                continue 'cells;
            }
            coords[i] = 0;
        }
        break;
    }
    out.sort_by(bullet_order);
    Ok(out)
}

/// `bul_j(n)`: bullets whose coordinate `j` (0-based) is positive.
pub fn bullets_with_support(
    monoid: &NumericalMonoid,
    n: u64,
    j: usize,
) -> Result<Vec<Bullet>, OmegaError> {
    let k = monoid.embedding_dimension();
    if j >= k {
        return Err(OmegaError::IndexOutOfRange { index: j, k });
    }
    let mut all = bullets(monoid, n)?;
    all.retain(|b| b.coords[j] > 0);
    Ok(all)
}

/// ω(n) and its maximal bullets. `ω(0) = 0` with no bullets.
pub fn omega(monoid: &NumericalMonoid, n: u64) -> Result<OmegaRecord, OmegaError> {
    if n == 0 {
        return Ok(OmegaRecord {
            n,
            omega: 0,
            maximal_bullets: Vec::new(),
            single_support_lengths: vec![0; monoid.embedding_dimension()],
        });
    }
    monoid.check_member(n)?;
    let bounds = single_support_lengths(monoid, n);
    let mut best = 0u64;
    let mut maximal: Vec<Vec<u64>> = Vec::new();
    let _ = scan_bullets(monoid, n, &bounds, u64::MAX, |c| {
        let len: u64 = c.iter().sum();
        match len.cmp(&best) {
            Ordering::Greater => {
                best = len;
                maximal.clear();
                maximal.push(c.to_vec());
            }
            Ordering::Equal => maximal.push(c.to_vec()),
            Ordering::Less => {}
        }
    });
    let mut maximal_bullets: Vec<Bullet> = maximal
        .into_iter()
        .map(|coords| Bullet { coords, target: n })
        .collect();
    maximal_bullets.sort_by(bullet_order);
    Ok(OmegaRecord {
        n,
        omega: best,
        maximal_bullets,
        single_support_lengths: bounds,
    })
}

/// ω(n) alone, skipping the bullet bookkeeping.
pub fn omega_value(monoid: &NumericalMonoid, n: u64) -> Result<u64, OmegaError> {
    if n == 0 {
        return Ok(0);
    }
    monoid.check_member(n)?;
    let bounds = single_support_lengths(monoid, n);
    let mut best = 0u64;
    let _ = scan_bullets(monoid, n, &bounds, u64::MAX, |c| {
        best = best.max(c.iter().sum());
    });
    Ok(best)
}

/// The `j`-th cover map: sends a bullet of `n` using generator `j` to the
/// bullet of `n + a * n_j` obtained by adding `a` to coordinate `j`.
pub fn cover_map(
    monoid: &NumericalMonoid,
    bullet: &Bullet,
    j: usize,
    a: u64,
) -> Result<Bullet, OmegaError> {
    let k = monoid.embedding_dimension();
    if j >= k || bullet.coords.len() != k {
        return Err(OmegaError::IndexOutOfRange { index: j, k });
    }
    if bullet.coords[j] == 0 {
        return Err(OmegaError::NotInSupport { index: j });
    }
    if !bullet.is_valid(monoid) {
        return Err(OmegaError::InvalidBullet {
            target: bullet.target,
        });
    }
    let step = a
        .checked_mul(monoid.generators()[j])
        .and_then(|s| s.checked_add(bullet.target))
        .ok_or(MonoidError::Overflow)?;
    let mut coords = bullet.coords.clone();
    coords[j] += a;
    let image = Bullet {
        coords,
        target: step,
    };
    if !image.is_valid(monoid) {
        return Err(OmegaError::InvalidBullet { target: step });
    }
    Ok(image)
}

/// ω(n) computed from the divisibility definition alone.
///
/// Enumerates every vector of length at most `|f| * Σ n_i`, where `f` is the
/// greedy factorization of `n` (no bullet can be longer), keeps those covering
/// `n`, and returns the longest one that is minimal in the componentwise
/// order. The covering vectors are closed upward, so minimality reduces to
/// "no single unit can be removed". Membership comes from a fresh
/// dynamic-programming table rather than the monoid's Apéry data.
pub fn omega_bruteforce(monoid: &NumericalMonoid, n: u64, budget: u64) -> Result<u64, OmegaError> {
    check_positive_member(monoid, n)?;
    let gens = monoid.generators();
    let witness = monoid
        .greedy_factorization(n)
        .ok_or(MonoidError::NotInMonoid { n })?;
    let length_cap = witness
        .length()
        .checked_mul(monoid.generator_sum())
        .ok_or(MonoidError::Overflow)?;
    let top = length_cap
        .checked_mul(*gens.last().unwrap())
        .ok_or(MonoidError::Overflow)? as usize;

    let mut member = vec![false; top + 1];
    member[0] = true;
    for v in 1..=top {
        member[v] = gens.iter().any(|&g| g as usize <= v && member[v - g as usize]);
    }

    let mut oracle = Brute {
        gens,
        member: &member,
        target: n as usize,
        coords: vec![0; gens.len()],
        best: 0,
        seen: 0,
        budget,
    };
    oracle.walk(0, length_cap, 0)?;
    Ok(oracle.best)
}

struct Brute<'a> {
    gens: &'a [u64],
    member: &'a [bool],
    target: usize,
    coords: Vec<u64>,
    best: u64,
    seen: u64,
    budget: u64,
}

impl Brute<'_> {
    fn walk(&mut self, idx: usize, room: u64, value: usize) -> Result<(), OmegaError> {
        if idx == self.gens.len() {
            self.seen += 1;
            if self.seen > self.budget {
                return Err(OmegaError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            self.judge(value);
            return Ok(());
        }
        let g = self.gens[idx] as usize;
        for a in 0..=room {
            self.coords[idx] = a;
            self.walk(idx + 1, room - a, value + a as usize * g)?;
        }
        self.coords[idx] = 0;
        Ok(())
    }

    fn judge(&mut self, value: usize) {
        let covers = |v: usize| v >= self.target && self.member[v - self.target];
        if !covers(value) {
            return;
        }
        let removable = self
            .coords
            .iter()
            .zip(self.gens)
            .any(|(&a, &g)| a > 0 && value >= g as usize && covers(value - g as usize));
        if !removable {
            self.best = self.best.max(self.coords.iter().sum());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[u64]) -> NumericalMonoid {
        NumericalMonoid::new(gens).unwrap()
    }

    fn coords(bs: &[Bullet]) -> Vec<Vec<u64>> {
        bs.iter().map(|b| b.coords.clone()).collect()
    }

    #[test]
    fn single_support_examples() {
        let g = m(&[3, 7]);
        assert_eq!(single_support_bullet(&g, 9, 1).unwrap().coords, vec![0, 3]);
        assert_eq!(single_support_bullet(&g, 7, 0).unwrap().coords, vec![7, 0]);
        assert_eq!(single_support_bullet(&g, 3, 0).unwrap().coords, vec![1, 0]);
        assert!(matches!(
            single_support_bullet(&g, 3, 2),
            Err(OmegaError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            single_support_bullet(&g, 11, 0),
            Err(OmegaError::Monoid(MonoidError::NotInMonoid { n: 11 }))
        ));
    }

    #[test]
    fn bullets_of_three_seven() {
        let g = m(&[3, 7]);
        assert_eq!(coords(&bullets(&g, 9).unwrap()), vec![vec![3, 0], vec![0, 3]]);
        assert_eq!(coords(&bullets(&g, 3).unwrap()), vec![vec![1, 0], vec![0, 3]]);
        let b10 = coords(&bullets(&g, 10).unwrap());
        assert!(b10.contains(&vec![8, 0]));
        assert!(b10.contains(&vec![1, 1]));
    }

    #[test]
    fn omega_examples() {
        let g = m(&[3, 7]);
        let r = omega(&g, 14).unwrap();
        assert_eq!(r.omega, 7);
        assert_eq!(coords(&r.maximal_bullets), vec![vec![7, 0]]);
        assert_eq!(omega(&g, 0).unwrap().omega, 0);
        assert!(omega(&g, 8).is_err());
    }

    #[test]
    fn naturals_have_omega_n() {
        let g = m(&[1]);
        for n in 1..20 {
            assert_eq!(omega_value(&g, n).unwrap(), n);
            assert_eq!(omega_bruteforce(&g, n, DEFAULT_BRUTEFORCE_BUDGET).unwrap(), n);
        }
    }

    #[test]
    fn bruteforce_examples() {
        let g = m(&[3, 7]);
        assert_eq!(omega_bruteforce(&g, 9, DEFAULT_BRUTEFORCE_BUDGET).unwrap(), 3);
        assert_eq!(omega_bruteforce(&g, 13, DEFAULT_BRUTEFORCE_BUDGET).unwrap(), 9);
        let h = m(&[4, 5, 6]);
        assert_eq!(
            omega_bruteforce(&h, 12, DEFAULT_BRUTEFORCE_BUDGET).unwrap(),
            omega(&h, 12).unwrap().omega
        );
        let nug = m(&[6, 9, 20]);
        assert_eq!(
            omega_bruteforce(&nug, 20, DEFAULT_BRUTEFORCE_BUDGET).unwrap(),
            omega(&nug, 20).unwrap().omega
        );
        assert!(matches!(
            omega_bruteforce(&g, 100, 10),
            Err(OmegaError::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn cover_map_examples() {
        let g = m(&[3, 7]);
        let b = Bullet { coords: vec![7, 0], target: 7 };
        let img = cover_map(&g, &b, 0, 1).unwrap();
        assert_eq!((img.coords.clone(), img.target), (vec![8, 0], 10));
        assert_eq!(cover_map(&g, &b, 0, 0).unwrap(), b);
        let c = Bullet { coords: vec![0, 3], target: 9 };
        let img = cover_map(&g, &c, 1, 3).unwrap();
        assert_eq!((img.coords.clone(), img.target), (vec![0, 6], 30));
        assert!(img.is_valid(&g));
        assert_eq!(cover_map(&g, &c, 0, 1), Err(OmegaError::NotInSupport { index: 0 }));
        let bogus = Bullet { coords: vec![5, 0], target: 9 };
        assert_eq!(
            cover_map(&g, &bogus, 0, 1),
            Err(OmegaError::InvalidBullet { target: 9 })
        );
    }

    #[test]
    fn support_filter() {
        let g = m(&[3, 7]);
        assert_eq!(coords(&bullets_with_support(&g, 9, 0).unwrap()), vec![vec![3, 0]]);
        assert_eq!(coords(&bullets_with_support(&g, 7, 1).unwrap()), vec![vec![0, 1]]);
        for b in bullets_with_support(&g, 14, 1).unwrap() {
            assert!(b.coords[1] > 0);
        }
    }

    #[test]
    fn pruned_scan_matches_box_scan() {
        for gens in [&[3u64, 7][..], &[2, 3], &[4, 5, 6], &[6, 9, 20], &[5, 7, 9, 11]] {
            let g = m(gens);
            for n in 1..=120u64 {
                if !g.contains_u64(n) {
                    continue;
                }
                assert_eq!(bullets(&g, n).unwrap(), bullets_exhaustive(&g, n).unwrap(), "{gens:?} {n}");
            }
        }
    }
}

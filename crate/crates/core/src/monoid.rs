//! Numerical monoids given by their minimal generators.
//!
//! A [`NumericalMonoid`] is validated once at construction time and then
//! carries the Apéry tables of every generator, so membership queries are a
//! table lookup and a comparison.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::error::MonoidError;

/// A co-finite additive submonoid of the non-negative integers, stored by its
/// minimal generating set `n_1 < n_2 < ... < n_k`.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
    frobenius: i64,
    lcm: u64,
    /// `apery[i][r]` is the least element congruent to `r` modulo `generators[i]`.
    apery: Vec<Vec<u64>>,
}

impl NumericalMonoid {
    /// Builds a monoid from a generator list, rejecting non-minimal lists.
    pub fn new(gens: &[u64]) -> Result<Self, MonoidError> {
        Self::build(gens, false)
    }

    /// Like [`NumericalMonoid::new`], but silently drops redundant generators.
    pub fn new_reduced(gens: &[u64]) -> Result<Self, MonoidError> {
        Self::build(gens, true)
    }

    fn build(gens: &[u64], reduce: bool) -> Result<Self, MonoidError> {
        if gens.is_empty() {
            return Err(MonoidError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(MonoidError::GeneratorZero);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let gcd = sorted.iter().fold(0u64, |g, &x| g.gcd(&x));
        if gcd != 1 {
            return Err(MonoidError::GcdNotOne { gcd });
        }
        if i64::try_from(*sorted.last().unwrap()).is_err() {
            return Err(MonoidError::Overflow);
        }

        let mut generators: Vec<u64> = Vec::with_capacity(sorted.len());
        for (i, &g) in sorted.iter().enumerate() {
            // Only smaller generators can sum to g.
            if representable(g, &sorted[..i]) {
                if !reduce {
                    return Err(MonoidError::NonMinimal { generator: g });
                }
            } else {
                generators.push(g);
            }
        }

        let lcm = generators
            .iter()
            .try_fold(1u64, |acc, &g| {
                let step = acc / acc.gcd(&g);
                step.checked_mul(g)
            })
            .ok_or(MonoidError::Overflow)?;

        let apery: Vec<Vec<u64>> = generators
            .iter()
            .map(|&modulus| residue_shortest_paths(modulus, &generators))
            .collect::<Result<_, _>>()?;

        let n1 = generators[0];
        let max_ap = *apery[0].iter().max().unwrap();
        let frobenius = max_ap as i64 - n1 as i64;

        Ok(Self {
            generators,
            frobenius,
            lcm,
            apery,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Embedding dimension `k`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Smallest generator, the multiplicity `n_1`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Largest integer outside the monoid; `-1` for the monoid of all naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least common multiple of the generators.
    pub fn lcm(&self) -> u64 {
        self.lcm
    }

    /// Sum of the generators.
    pub fn generator_sum(&self) -> u64 {
        self.generators.iter().sum()
    }

    /// Apéry table of `n_1`: entry `r` is the least element congruent to `r`.
    pub fn apery_n1(&self) -> &[u64] {
        &self.apery[0]
    }

    /// Apéry table of the generator at `index`.
    pub(crate) fn apery_of_generator(&self, index: usize) -> &[u64] {
        &self.apery[index]
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n1 = self.generators[0];
        let n = n as u64;
        n >= self.apery[0][(n % n1) as usize]
    }

    pub fn contains_u64(&self, n: u64) -> bool {
        let n1 = self.generators[0];
        n >= self.apery[0][(n % n1) as usize]
    }

    pub(crate) fn check_member(&self, n: u64) -> Result<(), MonoidError> {
        if self.contains_u64(n) {
            Ok(())
        } else {
            Err(MonoidError::NotInMonoid { n })
        }
    }

    /// The Apéry set `Ap(M, x) = { m in M : m - x not in M }`, sorted ascending.
    pub fn apery_set(&self, x: u64) -> Result<Vec<u64>, MonoidError> {
        if x == 0 {
            return Err(MonoidError::ZeroElement);
        }
        self.check_member(x)?;
        // Every Apéry element of x is at most frobenius + x.
        let top = (self.frobenius + x as i64).max(0) as u64;
        let mut best: Vec<Option<u64>> = vec![None; x as usize];
        let mut found = 0u64;
        for m in 0..=top {
            if found == x {
                break;
            }
            if !self.contains_u64(m) {
                continue;
            }
            let slot = &mut best[(m % x) as usize];
            if slot.is_none() {
                *slot = Some(m);
                found += 1;
            }
        }
        let mut set: Vec<u64> = best.into_iter().flatten().collect();
        debug_assert_eq!(set.len() as u64, x);
        set.sort_unstable();
        Ok(set)
    }

    /// All factorizations of `n`, in lexicographic order of their coordinates.
    pub fn factorizations(&self, n: u64) -> Vec<Factorization> {
        let mut out = Vec::new();
        let mut coords = vec![0u64; self.generators.len()];
        self.descend(n, 0, &mut coords, &mut out);
        out.sort_by(|a, b| a.coords.cmp(&b.coords));
        out
    }

    fn descend(&self, rest: u64, idx: usize, coords: &mut Vec<u64>, out: &mut Vec<Factorization>) {
        let g = self.generators[idx];
        if idx + 1 == self.generators.len() {
            if rest % g == 0 {
                coords[idx] = rest / g;
                out.push(Factorization::from_coords(coords.clone(), &self.generators));
            }
            return;
        }
        for a in 0..=rest / g {
            let left = rest - a * g;
            // Prune branches whose remainder cannot be represented at all.
            if !self.contains_u64(left) {
                continue;
            }
            coords[idx] = a;
            self.descend(left, idx + 1, coords, out);
        }
        coords[idx] = 0;
    }

    /// One factorization of `n` chosen greedily from the largest generator
    /// down, backtracking when a remainder is not representable.
    pub fn greedy_factorization(&self, n: u64) -> Option<Factorization> {
        if !self.contains_u64(n) {
            return None;
        }
        let k = self.generators.len();
        let mut coords = vec![0u64; k];
        let mut rest = n;
        for idx in (0..k).rev() {
            let g = self.generators[idx];
            if idx == 0 {
                debug_assert_eq!(rest % g, 0);
                coords[0] = rest / g;
                rest = 0;
                break;
            }
            // Take as many copies of g as possible while the remainder stays
            // representable by the smaller generators.
            let sub = &self.generators[..idx];
            let mut a = rest / g;
            loop {
                if representable(rest - a * g, sub) {
                    break;
                }
                a -= 1;
            }
            coords[idx] = a;
            rest -= a * g;
        }
        debug_assert_eq!(rest, 0);
        Some(Factorization::from_coords(coords, &self.generators))
    }
}

/// Whether `target` is a non-negative combination of `gens` (plain DP).
fn representable(target: u64, gens: &[u64]) -> bool {
    if target == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        reach[v] = gens.iter().any(|&g| (g as usize) <= v && reach[v - g as usize]);
    }
    reach[t]
}

/// Dijkstra over residues modulo `modulus`, stepping by each generator.
fn residue_shortest_paths(modulus: u64, gens: &[u64]) -> Result<Vec<u64>, MonoidError> {
    let size = usize::try_from(modulus).map_err(|_| MonoidError::Overflow)?;
    let mut dist = vec![u64::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let next = ((r as u64 + g) % modulus) as usize;
            let nd = d.checked_add(g).ok_or(MonoidError::Overflow)?;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist)
}

/// An exponent vector over the generators together with the element it sums to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub coords: Vec<u64>,
    pub value: u64,
}

impl Factorization {
    pub fn from_coords(coords: Vec<u64>, generators: &[u64]) -> Self {
        let value = coords.iter().zip(generators).map(|(a, g)| a * g).sum();
        Self { coords, value }
    }

    pub fn length(&self) -> u64 {
        self.coords.iter().sum()
    }

    /// Indices `j` with a nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        support_of(&self.coords)
    }
}

pub(crate) fn support_of(coords: &[u64]) -> Vec<usize> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, _)| i)
        .collect()
}

//! Brute-force reference implementations for tests.
//!
//! These walk the string of simple root sets one odd reflection at a time,
//! using nothing but the reflection rule and the transport rule.

use crate::error::{Error, Result};
use crate::highest_weights::{is_integrable_hw, transport_rho_wt, SimpleModule};
use crate::characters::FormalCharacter;
use crate::root_system::{imaginary_multiplicity, odd_reflection, pair, rho_of, SimpleRootSet, Weight};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Largest depth the PBW count accepts.
pub const VERMA_ORACLE_MAX_DEPTH: usize = 5;

/// (Σ, ρwt_Σ L) for every Σ within `max_chain` reflections of the module's
/// reference set, in chain order.
fn walk(module: &SimpleModule, max_chain: usize) -> Result<Vec<(SimpleRootSet, Weight)>> {
    let mut down = Vec::new();
    let (mut s, mut w) = (module.sigma.clone(), module.rho_wt.clone());
    for _ in 0..max_chain {
        let beta = s.down().clone();
        w = transport_rho_wt(&w, &s, &beta)?;
        s = odd_reflection(&s, &beta)?;
        down.push((s.clone(), w.clone()));
    }
    let mut out: Vec<_> = down.into_iter().rev().collect();
    out.push((module.sigma.clone(), module.rho_wt.clone()));
    let (mut s, mut w) = (module.sigma.clone(), module.rho_wt.clone());
    for _ in 0..max_chain {
        let beta = s.up().clone();
        w = transport_rho_wt(&w, &s, &beta)?;
        s = odd_reflection(&s, &beta)?;
        out.push((s.clone(), w.clone()));
    }
    Ok(out)
}

/// Distinct ρ-shifted weights met along the walk, in chain order.
pub fn hw_set_oracle(module: &SimpleModule, max_chain: usize) -> Result<Vec<Weight>> {
    let mut out: Vec<Weight> = Vec::new();
    for (_, w) in walk(module, max_chain)? {
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Modules L − α found at any Σ in the window, keyed by their ρ-shifted
/// weight at the module's reference set, which is reached by transporting
/// back along the string.
pub fn adjacency_oracle(module: &SimpleModule, max_chain: usize) -> Result<Vec<SimpleModule>> {
    let mut found: Vec<SimpleModule> = Vec::new();
    let home = module.sigma.chain_index();
    for (s, w) in walk(module, max_chain)? {
        for alpha in [s.up().clone(), s.down().clone()] {
            if !pair(&w, &alpha.weight).is_zero() {
                continue;
            }
            let cand = &w - &alpha.weight;
            if !is_integrable_hw(&cand, &s) {
                continue;
            }
            let at_home = transport_to(&s, &cand, home)?;
            let m = SimpleModule::new(module.sigma.clone(), at_home)?;
            if !found.contains(&m) {
                found.push(m);
            }
        }
    }
    Ok(found)
}

fn transport_to(sigma: &SimpleRootSet, w: &Weight, target: i64) -> Result<Weight> {
    let (mut s, mut w) = (sigma.clone(), w.clone());
    while s.chain_index() != target {
        let beta = if s.chain_index() < target { s.up().clone() } else { s.down().clone() };
        w = transport_rho_wt(&w, &s, &beta)?;
        s = odd_reflection(&s, &beta)?;
    }
    Ok(w)
}

/// Every integrable module at the base set with integer ε-pairings
/// |b_i| ≤ bound and δ-coefficient 0, in lexicographic order of b.
pub fn integrable_sweep(n: usize, k: i64, bound: i64) -> Vec<SimpleModule> {
    let mut out = Vec::new();
    let mut b = vec![-bound; n];
    loop {
        if let Ok(m) = SimpleModule::from_b(n, k, &b, 0) {
            out.push(m);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if b[i] < bound {
                b[i] += 1;
                break;
            }
            b[i] = -bound;
        }
    }
}

fn depth_guard(depth: usize, max: usize) -> Result<()> {
    if depth > max {
        return Err(Error::DepthTooLarge(depth, max));
    }
    Ok(())
}

// One PBW generator: coordinates in Σ and whether it is odd.
struct Slot {
    coords: Vec<i64>,
    odd: bool,
}

/// Every root vector of height ≤ depth that is positive for Σ, found by
/// trying all ±ε_i + mδ, ε_i − ε_j + mδ and mδ and keeping those with
/// nonnegative coordinates. Imaginary roots contribute one slot per unit of
/// multiplicity.
fn pbw_slots(sigma: &SimpleRootSet, depth: usize) -> Vec<Slot> {
    let n = sigma.n();
    let d = depth as i64;
    let mut out = Vec::new();
    let mut keep = |w: Weight, odd: bool, copies: usize| {
        if let Some(c) = sigma.coordinates(&w) {
            let h: i64 = c.iter().sum();
            if c.iter().all(|&v| v >= 0) && h > 0 && h <= d {
                for _ in 0..copies {
                    out.push(Slot { coords: c.clone(), odd });
                }
            }
        }
    };
    for m in -d - 1..=d + 1 {
        let md = Weight::delta(n).scaled(&crate::rational::q(m));
        for i in 1..=n {
            let e = Weight::epsilon(n, i);
            keep(&e + &md, true, 1);
            keep(&(-&e) + &md, true, 1);
            for j in 1..=n {
                if i != j {
                    keep(&(&e - &Weight::epsilon(n, j)) + &md, false, 1);
                }
            }
        }
        if m != 0 {
            keep(md, false, imaginary_multiplicity(n));
        }
    }
    out
}

fn count_multisets(slots: &[Slot], at: usize, left: i64, cur: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, i64>) {
    if at == slots.len() {
        *out.entry(cur.clone()).or_insert(0) += 1;
        return;
    }
    let s = &slots[at];
    let h: i64 = s.coords.iter().sum();
    let max_uses = if s.odd { 1 } else { left / h };
    for uses in 0..=max_uses.min(left / h) {
        for (c, v) in cur.iter_mut().zip(&s.coords) {
            *c += uses * v;
        }
        count_multisets(slots, at + 1, left - uses * h, cur, out);
        for (c, v) in cur.iter_mut().zip(&s.coords) {
            *c -= uses * v;
        }
    }
}

/// Verma character by direct PBW monomial count: the coefficient of a tuple
/// is the number of multisets of positive root vectors (odd ones used at most
/// once) summing to it.
pub fn verma_character_oracle(rho_wt: &Weight, sigma: &SimpleRootSet, depth: usize) -> Result<FormalCharacter> {
    depth_guard(depth, VERMA_ORACLE_MAX_DEPTH)?;
    if rho_wt.rank() != sigma.n() {
        return Err(Error::IncompatibleRank(rho_wt.rank(), sigma.n()));
    }
    let slots = pbw_slots(sigma, depth);
    let mut coeffs = BTreeMap::new();
    count_multisets(&slots, 0, depth as i64, &mut vec![0; sigma.len()], &mut coeffs);
    Ok(FormalCharacter {
        top: rho_wt - &rho_of(sigma),
        sigma: sigma.clone(),
        depth,
        coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typical_singleton() {
        let m = SimpleModule::from_b(3, 2, &[5, 3, 2], 0).unwrap();
        for c in [1, 5, 20] {
            assert_eq!(hw_set_oracle(&m, c).unwrap().len(), 1);
        }
        assert!(adjacency_oracle(&m, 10).unwrap().is_empty());
    }

    #[test]
    fn verma_oracle_small() {
        let s = SimpleRootSet::at(2, 0).unwrap();
        let w = Weight::lambda0(2);
        let v0 = verma_character_oracle(&w, &s, 0).unwrap();
        assert_eq!(v0.coeffs.len(), 1);
        let v1 = verma_character_oracle(&w, &s, 1).unwrap();
        assert_eq!(v1.coeffs.len(), 4);
        assert!(v1.coeffs.values().all(|&c| c == 1));
        assert_eq!(verma_character_oracle(&w, &s, 6), Err(Error::DepthTooLarge(6, 5)));
    }

    #[test]
    fn verma_oracle_matches_fast() {
        for n in [2, 3] {
            for j in [-2, 0, 3] {
                let s = SimpleRootSet::at(n, j).unwrap();
                let w = &Weight::lambda0(n) + &rho_of(&s);
                let a = verma_character_oracle(&w, &s, 4).unwrap();
                let b = crate::characters::verma_character(&w, &s, 4).unwrap();
                assert_eq!(a, b, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn vacuum() {
        let m = SimpleModule::from_b(3, 1, &[2, 1, 0], 0).unwrap();
        assert_eq!(hw_set_oracle(&m, 20).unwrap().len(), 4);
        let adj = adjacency_oracle(&m, 20).unwrap();
        assert_eq!(adj.len(), 2);
        let (a, b) = crate::blocks::adjacent_pair(&m).unwrap();
        assert!(adj.contains(&a) && adj.contains(&b));
    }
}

//! Adjacency between atypical simples and the block decomposition.
//!
//! L′ is adjacent to L when ρwt_Σ L′ = ρwt_Σ L − α for an odd simple root α
//! of Σ with (ρwt_Σ L, α) = 0. Each atypical module has exactly two
//! adjacents, read off from the two ends of its HW chain. Blocks are
//! bi-infinite strings with one member singular at a fixed reference Σ.

use crate::error::{Error, Result};
use crate::highest_weights::{is_sigma_singular, rho_wt_at, SimpleModule};
use crate::rational::{q, Q};
use crate::root_system::{
    base_simple_roots, dominant_representative, is_regular_weight, norm, up_root,
    weight_with_marks, SimpleRootSet, Weight,
};
use num_traits::Zero;
use std::cmp::Ordering;

/// Whether two modules are isomorphic.
pub fn same_module(a: &SimpleModule, b: &SimpleModule) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    let wa = rho_wt_at(&a.rho_wt, a.sigma.chain_index(), b.sigma.chain_index())?;
    Ok(wa == b.rho_wt)
}

/// The two adjacent modules (L′, L″), expressed at the reference set of
/// `module`; L′ comes from the lower end of the HW chain.
pub fn adjacent_pair(module: &SimpleModule) -> Result<(SimpleModule, SimpleModule)> {
    if module.is_typical() {
        return Err(Error::TypicalHasNoAdjacent);
    }
    let n = module.n();
    let j = module.sigma.chain_index();
    let segs = module.segments()?;
    let first = segs.first().expect("nonempty");
    let last = segs.last().expect("nonempty");
    let t1 = first.hi.expect("atypical chain has a lower end");
    let tr = last.lo.expect("atypical chain has an upper end") - 1;
    let lower_w = &first.weight - &up_root(n, t1).weight;
    let upper_w = &last.weight + &up_root(n, tr).weight;
    let lower = SimpleModule::new(SimpleRootSet::at(n, t1)?, lower_w)?.at(j)?;
    let upper = SimpleModule::new(SimpleRootSet::at(n, tr + 1)?, upper_w)?.at(j)?;
    Ok((lower, upper))
}

fn compare_at(a: &SimpleModule, b: &SimpleModule, reference: &SimpleRootSet) -> Result<Option<Ordering>> {
    let t = reference.chain_index();
    let wa = rho_wt_at(&a.rho_wt, a.sigma.chain_index(), t)?;
    let wb = rho_wt_at(&b.rho_wt, b.sigma.chain_index(), t)?;
    Ok(reference.compare(&wa, &wb))
}

/// Whether the module's ρ-shifted weight at `reference` is singular there.
pub fn is_singular_at(module: &SimpleModule, reference: &SimpleRootSet) -> Result<bool> {
    let w = rho_wt_at(&module.rho_wt, module.sigma.chain_index(), reference.chain_index())?;
    Ok(is_sigma_singular(&w, reference))
}

const DESCENT_CAP: usize = 100_000;

/// The member of the block of `module` that is singular at `reference`,
/// expressed at `reference`; found by stepping to the lower adjacent.
pub fn singular_base(module: &SimpleModule, reference: &SimpleRootSet) -> Result<SimpleModule> {
    if module.is_typical() {
        return Err(Error::TypicalBlock);
    }
    let mut cur = module.at(reference.chain_index())?;
    for _ in 0..DESCENT_CAP {
        if is_sigma_singular(&cur.rho_wt, reference) {
            return Ok(cur);
        }
        let (a, b) = adjacent_pair(&cur)?;
        cur = if compare_at(&a, &cur, reference)? == Some(Ordering::Less) { a } else { b };
    }
    Err(Error::NoTermination(DESCENT_CAP))
}

/// A finite window of one block, indexed by i ∈ [−w, w] with the singular
/// base at i = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockChain {
    pub n: usize,
    pub level: Q,
    pub reference: SimpleRootSet,
    /// ρ-shifted weight of the base at `reference`, δ-coefficient 0.
    pub singular_base: Weight,
    /// s_i with L_i having ρ-shifted weight the dominant representative of λ + s_i β.
    pub shifts: Vec<i64>,
    pub window: Vec<SimpleModule>,
    pub i_min: i64,
}

impl BlockChain {
    pub fn i_max(&self) -> i64 {
        self.i_min + self.window.len() as i64 - 1
    }

    pub fn get(&self, i: i64) -> Option<&SimpleModule> {
        usize::try_from(i - self.i_min).ok().and_then(|p| self.window.get(p))
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.i_min..=self.i_max()
    }
}

/// Members L_i, |i| ≤ half_width, of the block with singular base `base`.
pub fn block_chain(
    base: &SimpleModule,
    reference: &SimpleRootSet,
    half_width: usize,
) -> Result<BlockChain> {
    if base.is_typical() {
        return Err(Error::TypicalBlock);
    }
    let t = reference.chain_index();
    let lam = rho_wt_at(&base.rho_wt, base.sigma.chain_index(), t)?.without_delta();
    if !is_sigma_singular(&lam, reference) {
        return Err(Error::NotSingular);
    }
    let beta = reference.up().weight.clone();
    let shifted = |s: i64| &lam + &beta.scaled(&q(s));
    let mut pos = Vec::new();
    let mut s = 0;
    while pos.len() < half_width {
        s += 1;
        if is_regular_weight(&shifted(s)) {
            pos.push(s);
        }
    }
    let mut neg = Vec::new();
    let mut s = 0;
    while neg.len() < half_width {
        s -= 1;
        if is_regular_weight(&shifted(s)) {
            neg.push(s);
        }
    }
    let shifts: Vec<i64> = neg.into_iter().rev().chain([0]).chain(pos).collect();
    let mut window = Vec::with_capacity(shifts.len());
    for &s in &shifts {
        let w = if s == 0 { lam.clone() } else { dominant_representative(&shifted(s))? };
        window.push(SimpleModule::new(reference.clone(), w)?);
    }
    Ok(BlockChain {
        n: reference.n(),
        level: base.level.clone(),
        reference: reference.clone(),
        singular_base: lam,
        shifts,
        window,
        i_min: -(half_width as i64),
    })
}

/// Compositions of `total` into `parts` positive integers, lexicographic.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts as i64 - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Block keys at level `level`: the base-singular integrable ρ-shifted
/// weights with δ-coefficient 0.
pub fn list_blocks(n: usize, level: i64) -> Result<Vec<Weight>> {
    if level <= 0 {
        return Err(Error::NonPositiveLevel);
    }
    let sigma = base_simple_roots(n)?;
    let kk = level + n as i64 - 1;
    let (up, down) = sigma.odd_positions();
    let mut out = Vec::new();
    for comp in compositions(kk, n - 1) {
        let mut even = comp.into_iter();
        let marks: Vec<Q> = (0..sigma.len())
            .map(|p| if p == up || p == down { Q::zero() } else { q(even.next().expect("n-1 marks")) })
            .collect();
        out.push(weight_with_marks(&sigma, &marks, &q(kk), &Q::zero()).expect("marks sum to K"));
    }
    Ok(out)
}

/// How blocks are keyed: by the δ-normalized base weight, or additionally by
/// the Casimir norm, which separates L(λ) from L(λ + sδ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockKeyMode {
    #[default]
    Marks,
    MarksAndCasimir,
}

/// The block key of an atypical module: the singular base's ρ-shifted weight
/// at `reference` with δ-coefficient 0.
pub fn block_of(module: &SimpleModule, reference: &SimpleRootSet) -> Result<Weight> {
    Ok(singular_base(module, reference)?.rho_wt.without_delta())
}

/// Key with an optional Casimir component.
pub fn block_key(
    module: &SimpleModule,
    reference: &SimpleRootSet,
    mode: BlockKeyMode,
) -> Result<(Weight, Option<Q>)> {
    let key = block_of(module, reference)?;
    let casimir = match mode {
        BlockKeyMode::Marks => None,
        BlockKeyMode::MarksAndCasimir => Some(norm(&module.rho_wt)),
    };
    Ok((key, casimir))
}

/// Binomial coefficient, used for block counts C(k + n − 2, n − 2).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

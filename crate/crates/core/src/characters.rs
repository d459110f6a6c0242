//! Truncated formal characters.
//!
//! A character in the frame (Σ, top, depth) is a map from tuples
//! k ∈ ℤ≥0^{n+1} with Σ k_i ≤ depth to integers, the tuple standing for the
//! weight top − Σ k_i α_i. Products with the Verma denominator are done on a
//! dense grid of tuples ordered by height, one positive root at a time.
//!
//! Irreducible characters of atypical modules use the Kac–Wakimoto sum at a
//! set Σ_t where the module is tame with regular ρ-shifted weight; the
//! geometric series there is expanded according to the sign of wβ in Σ_t.
//! The result is then re-expressed in the requested frame.

use crate::error::{Error, Result};
use crate::highest_weights::{is_integrable_hw, SimpleModule};
use crate::root_system::{
    chain_rho, is_regular_weight, pair, pi0, positive_roots_with_coords, reflect, rho_of, up_root, Parity,
    SimpleRootSet, Weight,
};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashSet};

/// A truncated character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    /// Highest weight of the frame (unshifted).
    pub top: Weight,
    pub sigma: SimpleRootSet,
    pub depth: usize,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn coeff(&self, k: &[i64]) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> i64 {
        self.coeff(&vec![0; self.sigma.len()])
    }

    fn check_frame(&self, other: &FormalCharacter) -> Result<()> {
        if self.sigma != other.sigma || self.depth != other.depth || self.top != other.top {
            return Err(Error::FrameMismatch);
        }
        Ok(())
    }

    fn combine(&self, other: &FormalCharacter, sign: i64) -> Result<FormalCharacter> {
        self.check_frame(other)?;
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let e = coeffs.entry(k.clone()).or_insert(0);
            *e = e.checked_add(sign * v).ok_or(Error::Overflow)?;
            if *e == 0 {
                coeffs.remove(k);
            }
        }
        Ok(FormalCharacter { coeffs, ..self.clone() })
    }

    pub fn add(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        self.combine(other, -1)
    }

    /// The weight top − Σ k_i α_i.
    pub fn weight_of(&self, k: &[i64]) -> Weight {
        &self.top - &self.sigma.combination(k)
    }

    /// Tuple of a weight in this frame, if it lies in the truncation cone.
    pub fn tuple_of(&self, w: &Weight) -> Option<Vec<i64>> {
        let x = self.sigma.coordinates(&(&self.top - w))?;
        let h: i64 = x.iter().sum();
        (x.iter().all(|&v| v >= 0) && h <= self.depth as i64).then_some(x)
    }

    /// Rows "k0,…,kn,coeff" in lexicographic tuple order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.coeffs {
            for x in k {
                out.push_str(&x.to_string());
                out.push(',');
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

pub fn character_equal(a: &FormalCharacter, b: &FormalCharacter) -> Result<bool> {
    a.check_frame(b)?;
    Ok(a.coeffs == b.coeffs)
}

/// All tuples of `vars` nonnegative integers with sum ≤ depth, by height,
/// with a dense lookup from the box [0, depth]^vars.
struct Grid {
    vars: usize,
    flat: Vec<i64>,
    box_index: Vec<usize>,
    strides: Vec<usize>,
    lookup: Vec<u32>,
}

// Largest box the dense lookup may allocate.
const MAX_BOX: usize = 1 << 26;

fn max_box_depth(vars: usize) -> usize {
    let mut d = 0usize;
    while (d + 2).checked_pow(vars as u32).is_some_and(|v| v <= MAX_BOX) {
        d += 1;
    }
    d
}

impl Grid {
    fn new(vars: usize, depth: usize) -> Result<Grid> {
        let side = depth + 1;
        let mut strides = Vec::with_capacity(vars);
        let mut size = 1usize;
        for _ in 0..vars {
            strides.push(size);
            size = size
                .checked_mul(side)
                .filter(|&v| v <= MAX_BOX)
                .ok_or_else(|| Error::DepthTooLarge(depth, max_box_depth(vars)))?;
        }
        let mut tuples = Vec::new();
        for h in 0..=depth as i64 {
            let mut cur = vec![0i64; vars];
            fill(&mut tuples, &mut cur, 0, h);
        }
        let mut lookup = vec![u32::MAX; size];
        let mut flat = Vec::with_capacity(tuples.len() * vars);
        let mut box_index = Vec::with_capacity(tuples.len());
        for (i, t) in tuples.iter().enumerate() {
            let b: usize = t.iter().zip(&strides).map(|(&v, s)| v as usize * s).sum();
            lookup[b] = i as u32;
            box_index.push(b);
            flat.extend_from_slice(t);
        }
        Ok(Grid { vars, flat, box_index, strides, lookup })
    }

    fn len(&self) -> usize {
        self.box_index.len()
    }

    fn tuple(&self, i: usize) -> &[i64] {
        &self.flat[i * self.vars..(i + 1) * self.vars]
    }

    fn index_of(&self, x: &[i64]) -> Option<usize> {
        let side = self.strides.get(1).copied().unwrap_or(self.lookup.len()) as i64;
        let mut b = 0usize;
        for (&v, s) in x.iter().zip(&self.strides) {
            if v < 0 || v >= side {
                return None;
            }
            b += v as usize * s;
        }
        match self.lookup[b] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }
}

fn fill(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, pos: usize, left: i64) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for v in (0..=left).rev() {
        cur[pos] = v;
        fill(out, cur, pos + 1, left - v);
    }
}

struct Series {
    grid: Grid,
    coeffs: Vec<i128>,
}

impl Series {
    fn new(vars: usize, depth: usize) -> Result<Series> {
        let grid = Grid::new(vars, depth)?;
        let coeffs = vec![0; grid.len()];
        Ok(Series { grid, coeffs })
    }

    fn add_term(&mut self, x: &[i64], c: i128) -> Result<()> {
        if let Some(i) = self.grid.index_of(x) {
            self.coeffs[i] = self.coeffs[i].checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Position of t − x when it is a grid tuple.
    fn shifted_index(&self, i: usize, x: &[i64], xb: usize) -> Option<usize> {
        let t = self.grid.tuple(i);
        if t.iter().zip(x).any(|(a, b)| a < b) {
            return None;
        }
        Some(self.grid.lookup[self.grid.box_index[i] - xb] as usize)
    }

    fn box_of(&self, x: &[i64]) -> Option<usize> {
        if x.iter().any(|&v| v < 0) {
            return None;
        }
        Some(x.iter().zip(&self.grid.strides).map(|(&v, s)| v as usize * s).sum())
    }

    /// Multiply by (1 + e^{−x}).
    fn mul_odd(&mut self, x: &[i64]) -> Result<()> {
        let Some(xb) = self.box_of(x) else { return Ok(()) };
        for i in (0..self.coeffs.len()).rev() {
            if let Some(j) = self.shifted_index(i, x, xb) {
                self.coeffs[i] = self.coeffs[i].checked_add(self.coeffs[j]).ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    /// Multiply by 1 / (1 − e^{−x}).
    fn div_even(&mut self, x: &[i64]) -> Result<()> {
        let Some(xb) = self.box_of(x) else { return Ok(()) };
        for i in 0..self.coeffs.len() {
            if let Some(j) = self.shifted_index(i, x, xb) {
                self.coeffs[i] = self.coeffs[i].checked_add(self.coeffs[j]).ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    /// Multiply by Π_odd (1 + e^{−α}) / Π_even (1 − e^{−α})^{mult}.
    fn apply_denominator(&mut self, sigma: &SimpleRootSet, depth: usize) -> Result<()> {
        for p in positive_roots_with_coords(sigma, depth) {
            for _ in 0..p.multiplicity {
                match p.root.parity {
                    Parity::Odd => self.mul_odd(&p.coords)?,
                    Parity::Even => self.div_even(&p.coords)?,
                }
            }
        }
        Ok(())
    }

    fn into_map(self) -> Result<BTreeMap<Vec<i64>, i64>> {
        let mut out = BTreeMap::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c != 0 {
                out.insert(self.grid.tuple(i).to_vec(), i64::try_from(*c).map_err(|_| Error::Overflow)?);
            }
        }
        Ok(out)
    }
}

/// Verma character of M_Σ(Λ − ρ_Σ).
pub fn verma_character(rho_wt: &Weight, sigma: &SimpleRootSet, depth: usize) -> Result<FormalCharacter> {
    if rho_wt.rank() != sigma.n() {
        return Err(Error::IncompatibleRank(rho_wt.rank(), sigma.n()));
    }
    let mut s = Series::new(sigma.len(), depth)?;
    s.add_term(&vec![0; sigma.len()], 1)?;
    s.apply_denominator(sigma, depth)?;
    Ok(FormalCharacter {
        top: rho_wt - &rho_of(sigma),
        sigma: sigma.clone(),
        depth,
        coeffs: s.into_map()?,
    })
}

/// One term of a Weyl-group sum: w(Λ), sgn(w) and w applied to a tracked root.
struct WeylTerm {
    image: Weight,
    sign: i128,
    tracked: Weight,
}

/// w(Λ) for all w ∈ W with ht_Σ(Λ − wΛ) ≤ budget, for regular Π₀-dominant Λ.
fn weyl_terms(lam: &Weight, tracked: &Weight, sigma: &SimpleRootSet, budget: usize) -> Vec<WeylTerm> {
    let simple = pi0(sigma.n());
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lam.clone());
    let mut out = vec![WeylTerm { image: lam.clone(), sign: 1, tracked: tracked.clone() }];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for a in &simple {
                let p = pair(&out[idx].image, &a.weight);
                if !p.is_positive() {
                    continue;
                }
                let nu = &out[idx].image - &a.weight.scaled(&p);
                let h = sigma.height(&(lam - &nu)).expect("lattice difference");
                if h > budget as i64 || seen.contains(&nu) {
                    continue;
                }
                seen.insert(nu.clone());
                let term = WeylTerm {
                    image: nu,
                    sign: -out[idx].sign,
                    tracked: reflect(&out[idx].tracked, a),
                };
                out.push(term);
                next.push(out.len() - 1);
            }
        }
        frontier = next;
    }
    out
}

fn check_integrable(rho_wt: &Weight, sigma: &SimpleRootSet) -> Result<()> {
    if rho_wt.rank() != sigma.n() {
        return Err(Error::IncompatibleRank(rho_wt.rank(), sigma.n()));
    }
    if !is_integrable_hw(rho_wt, sigma) {
        return Err(Error::NotIntegrable);
    }
    Ok(())
}

/// Σ_w sgn(w) ch M_Σ(wΛ − ρ_Σ) as a grid series relative to Λ.
fn typical_series(rho_wt: &Weight, sigma: &SimpleRootSet, depth: usize) -> Result<Series> {
    let mut s = Series::new(sigma.len(), depth)?;
    for t in weyl_terms(rho_wt, rho_wt, sigma, depth) {
        let x = sigma.coordinates(&(rho_wt - &t.image)).expect("lattice difference");
        s.add_term(&x, t.sign)?;
    }
    s.apply_denominator(sigma, depth)?;
    Ok(s)
}

/// Character of the maximal integrable quotient V_Σ(Λ − ρ_Σ), Λ regular.
pub fn integrable_quotient_character(
    rho_wt: &Weight,
    sigma: &SimpleRootSet,
    depth: usize,
) -> Result<FormalCharacter> {
    check_integrable(rho_wt, sigma)?;
    if !is_regular_weight(rho_wt) {
        return Err(Error::SingularTypicalFormula);
    }
    let s = typical_series(rho_wt, sigma, depth)?;
    Ok(FormalCharacter {
        top: rho_wt - &rho_of(sigma),
        sigma: sigma.clone(),
        depth,
        coeffs: s.into_map()?,
    })
}

/// Σ_w sgn(w) w(e^Λ / (1 + e^{−β})) times the denominator, relative to Λ,
/// in the frame Σ where Λ is tame at the odd simple root β.
fn kac_wakimoto_series(
    rho_wt: &Weight,
    beta: &Weight,
    sigma: &SimpleRootSet,
    depth: usize,
) -> Result<Series> {
    let mut s = Series::new(sigma.len(), depth)?;
    for t in weyl_terms(rho_wt, beta, sigma, depth) {
        let x0 = sigma.coordinates(&(rho_wt - &t.image)).expect("lattice difference");
        let xb = sigma.coordinates(&t.tracked).expect("root");
        let positive = xb.iter().all(|&v| v >= 0);
        // step: the tuple offset per geometric term
        let step: Vec<i64> = if positive { xb.clone() } else { xb.iter().map(|v| -v).collect() };
        let hstep: i64 = step.iter().sum();
        let h0: i64 = x0.iter().sum();
        let (first, sign0) = if positive { (0i64, 1i128) } else { (1, 1) };
        let mut j = first;
        loop {
            let h = h0 + j * hstep;
            if h > depth as i64 {
                break;
            }
            let x: Vec<i64> = x0.iter().zip(&step).map(|(a, b)| a + j * b).collect();
            let alt = if (j - first) % 2 == 0 { sign0 } else { -sign0 };
            s.add_term(&x, t.sign * alt)?;
            j += 1;
        }
    }
    s.apply_denominator(sigma, depth)?;
    Ok(s)
}

/// Re-express a character computed at Σ_t (tuples relative to `top_t`) in
/// the frame (sigma, top, depth).
fn reframe(
    series: Series,
    from: &SimpleRootSet,
    top_t: &Weight,
    sigma: &SimpleRootSet,
    top: &Weight,
    depth: usize,
) -> Result<BTreeMap<Vec<i64>, i64>> {
    let off = sigma.coordinates(&(top - top_t)).expect("lattice difference");
    // coordinates of the Σ_t simple roots in the target frame
    let images: Vec<Vec<i64>> = from
        .roots()
        .iter()
        .map(|r| sigma.coordinates(&r.weight).expect("root"))
        .collect();
    let mut out = BTreeMap::new();
    for (i, c) in series.coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let x = series.grid.tuple(i);
        let mut y = off.clone();
        for (xi, img) in x.iter().zip(&images) {
            for (yj, ij) in y.iter_mut().zip(img) {
                *yj += xi * ij;
            }
        }
        let h: i64 = y.iter().sum();
        if y.iter().all(|&v| v >= 0) && h <= depth as i64 {
            out.insert(y, i64::try_from(*c).map_err(|_| Error::Overflow)?);
        }
    }
    Ok(out)
}

/// Depth needed at Σ_t so that every weight of height ≤ depth in the frame
/// (sigma, top) is covered.
fn tame_depth(from: &SimpleRootSet, top_t: &Weight, sigma: &SimpleRootSet, top: &Weight, depth: usize) -> usize {
    let h0 = from.height(&(top_t - top)).expect("lattice difference").max(0);
    let hmax = sigma
        .roots()
        .iter()
        .map(|r| from.height(&r.weight).expect("root"))
        .max()
        .unwrap_or(1)
        .max(0);
    (h0 + depth as i64 * hmax) as usize
}

/// Where a module is tame with regular ρ-shifted weight: (Σ_t, Λ_t, β) at
/// the lower end of its HW chain.
fn tame_point(module: &SimpleModule) -> Result<(SimpleRootSet, Weight, Weight)> {
    let segs = module.segments()?;
    let first = segs.first().expect("nonempty");
    let t = first.hi.expect("atypical");
    let n = module.n();
    Ok((SimpleRootSet::at(n, t)?, first.weight.clone(), up_root(n, t).weight))
}

/// Same, at the upper end, where the vanishing root is the down root.
fn upper_tame_point(module: &SimpleModule) -> Result<(SimpleRootSet, Weight, Weight)> {
    let segs = module.segments()?;
    let last = segs.last().expect("nonempty");
    let t = last.lo.expect("atypical");
    let n = module.n();
    Ok((SimpleRootSet::at(n, t)?, last.weight.clone(), -&up_root(n, t - 1).weight))
}

/// Highest weight at Σ_t in the same normalization as the module's frame
/// top: the frames' ρ must differ by exactly the reflected odd roots.
fn tame_top(module: &SimpleModule, st: &SimpleRootSet, lam_t: &Weight) -> Result<Weight> {
    let n = module.n();
    let f = module.sigma.chain_index();
    let t = st.chain_index();
    let top = &module.rho_wt - &rho_of(&module.sigma);
    let shift = &(lam_t - &chain_rho(n, t)?) - &(&module.rho_wt - &chain_rho(n, f)?);
    Ok(&top + &shift)
}

/// Kac–Wakimoto at a given tame point, re-expressed in the module's frame.
fn kw_in_frame(
    module: &SimpleModule,
    point: (SimpleRootSet, Weight, Weight),
    depth: usize,
) -> Result<FormalCharacter> {
    let (st, lam_t, beta) = point;
    let top = &module.rho_wt - &rho_of(&module.sigma);
    let top_t = tame_top(module, &st, &lam_t)?;
    let dd = tame_depth(&st, &top_t, &module.sigma, &top, depth);
    let series = kac_wakimoto_series(&lam_t, &beta, &st, dd)?;
    let coeffs = reframe(series, &st, &top_t, &module.sigma, &top, depth)?;
    Ok(FormalCharacter { top, sigma: module.sigma.clone(), depth, coeffs })
}

/// Which end of the HW chain supplies the tame point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TameEnd {
    Lower,
    Upper,
    /// The end closer to the module's reference set.
    Nearest,
}

fn choose_point(module: &SimpleModule, end: TameEnd) -> Result<(SimpleRootSet, Weight, Weight)> {
    match end {
        TameEnd::Lower => tame_point(module),
        TameEnd::Upper => upper_tame_point(module),
        TameEnd::Nearest => {
            let f = module.sigma.chain_index();
            let lo = tame_point(module)?;
            let hi = upper_tame_point(module)?;
            if (hi.0.chain_index() - f).abs() < (lo.0.chain_index() - f).abs() {
                Ok(hi)
            } else {
                Ok(lo)
            }
        }
    }
}

/// ch L of an atypical module by Kac–Wakimoto at the chosen tame point.
pub fn kac_wakimoto_character_at(module: &SimpleModule, depth: usize, end: TameEnd) -> Result<FormalCharacter> {
    if module.is_typical() {
        return Err(Error::NotAtypicalRoot);
    }
    kw_in_frame(module, choose_point(module, end)?, depth)
}

/// ch L of an atypical module by Kac–Wakimoto at the nearer tame point.
pub fn kac_wakimoto_character(module: &SimpleModule, depth: usize) -> Result<FormalCharacter> {
    kac_wakimoto_character_at(module, depth, TameEnd::Nearest)
}

/// ch V(Λ_t − ρ_t) at a tame point, re-expressed in the module's frame.
fn quotient_in_frame(
    module: &SimpleModule,
    st: &SimpleRootSet,
    lam_t: &Weight,
    depth: usize,
) -> Result<FormalCharacter> {
    let top = &module.rho_wt - &rho_of(&module.sigma);
    let top_t = tame_top(module, st, lam_t)?;
    let dd = tame_depth(st, &top_t, &module.sigma, &top, depth);
    let series = typical_series(lam_t, st, dd)?;
    let coeffs = reframe(series, st, &top_t, &module.sigma, &top, depth)?;
    Ok(FormalCharacter { top, sigma: module.sigma.clone(), depth, coeffs })
}

/// ch L in the module's own frame.
///
/// Typical: the typical formula. Regular atypical: Kac–Wakimoto at a tame
/// point. Singular atypical: ch V(Λ_t) − ch L′ at the lower tame point, L′
/// the adjacent module with ρ-shifted weight Λ_t − β there.
pub fn irreducible_character(module: &SimpleModule, depth: usize) -> Result<FormalCharacter> {
    if module.level.is_zero() {
        return Err(Error::ZeroLevel);
    }
    if !module.level.is_positive() {
        return Err(Error::NonPositiveLevel);
    }
    if module.is_typical() {
        return integrable_quotient_character(&module.rho_wt, &module.sigma, depth);
    }
    if !module.is_singular() {
        return kac_wakimoto_character(module, depth);
    }
    let (st, lam_t, beta) = choose_point(module, TameEnd::Nearest)?;
    let quotient = quotient_in_frame(module, &st, &lam_t, depth)?;
    let adj = SimpleModule::new(st.clone(), &lam_t - &beta)?.at(module.sigma.chain_index())?;
    // The adjacent's top may sit above ours in this frame; widen its depth
    // so nothing within our window is cut off.
    let lift = module.sigma.height(&(&adj.rho_wt - &module.rho_wt)).expect("lattice difference").max(0);
    let adj_ch = kac_wakimoto_character(&adj, depth + lift as usize)?;
    let lowered = transplant(&adj_ch, &quotient)?;
    quotient.sub(&lowered)
}

/// Moves the coefficients of `ch` into the frame of `target` (same Σ,
/// different top), keeping what fits.
fn transplant(ch: &FormalCharacter, target: &FormalCharacter) -> Result<FormalCharacter> {
    if ch.sigma.chain_index() != target.sigma.chain_index() {
        return Err(Error::FrameMismatch);
    }
    let mut coeffs = BTreeMap::new();
    for (k, v) in &ch.coeffs {
        let w = ch.weight_of(k);
        if let Some(x) = target.tuple_of(&w) {
            coeffs.insert(x, *v);
        }
    }
    Ok(FormalCharacter { coeffs, ..target.clone() })
}

/// Re-expresses `ch` with the frame's top moved to `top` (same Σ).
pub fn reframe_top(ch: &FormalCharacter, top: &Weight, depth: usize) -> FormalCharacter {
    let target = FormalCharacter {
        top: top.clone(),
        sigma: ch.sigma.clone(),
        depth,
        coeffs: BTreeMap::new(),
    };
    transplant(ch, &target).expect("same frame")
}

/// ch of the module with ρ-shifted weight `rho_wt` at Σ, as an unshifted
/// top weight; handy for comparisons.
pub fn top_of(rho_wt: &Weight, sigma: &SimpleRootSet) -> Weight {
    rho_wt - &rho_of(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::adjacent_pair;
    use crate::root_system::base_simple_roots;

    #[test]
    fn verma_small() {
        let s = base_simple_roots(2).unwrap();
        let w = &Weight::lambda0(2) + &rho_of(&s);
        let v0 = verma_character(&w, &s, 0).unwrap();
        assert_eq!(v0.coeffs.len(), 1);
        assert_eq!(v0.leading(), 1);
        let v1 = verma_character(&w, &s, 1).unwrap();
        for k in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert_eq!(v1.coeff(&k), 1);
        }
    }

    #[test]
    fn typical_quotient_is_irreducible() {
        let m = SimpleModule::from_b(3, 2, &[5, 3, 2], 0).unwrap();
        let v = integrable_quotient_character(&m.rho_wt, &m.sigma, 4).unwrap();
        let l = irreducible_character(&m, 4).unwrap();
        assert!(character_equal(&v, &l).unwrap());
        let verma = verma_character(&m.rho_wt, &m.sigma, 4).unwrap();
        assert!(!character_equal(&v, &verma).unwrap());
    }

    #[test]
    fn vacuum_exact_sequence() {
        let m = SimpleModule::from_b(3, 1, &[2, 1, 0], 0).unwrap();
        let depth = 5;
        let l = irreducible_character(&m, depth).unwrap();
        assert_eq!(l.leading(), 1);
        assert!(l.coeffs.values().all(|&v| v >= 0));
        let kw = kac_wakimoto_character_at(&m, depth, TameEnd::Lower).unwrap();
        let kw2 = kac_wakimoto_character_at(&m, depth, TameEnd::Upper).unwrap();
        assert_eq!(kw, l);
        assert_eq!(kw2, l);
        let _ = adjacent_pair(&m).unwrap();
    }

    #[test]
    fn frame_mismatch() {
        let s = base_simple_roots(2).unwrap();
        let w = &Weight::lambda0(2) + &rho_of(&s);
        let a = verma_character(&w, &s, 1).unwrap();
        let b = verma_character(&w, &s, 2).unwrap();
        assert_eq!(character_equal(&a, &b), Err(Error::FrameMismatch));
    }
}

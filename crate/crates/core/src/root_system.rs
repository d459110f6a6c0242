//! Root data of sl(1|n)^(1): the invariant form on 𝔥*, the string 𝓑 of
//! simple root sets compatible with a fixed even Borel, Weyl vectors and the
//! integrable Weyl group generated by reflections in Π₀.
//!
//! Weights are stored in the basis {ε₁, …, ε_n, δ, Λ₀} with
//! (ε_i, ε_j) = −1 for i ≠ j, (ε_i, ε_i) = 0, (Λ₀, δ) = 1 and every other
//! pairing between basis vectors zero. All arithmetic is exact.

use crate::error::{Error, Result};
use crate::rational::{format_q, is_integer, parse_q, q, Q};
use serde::{Deserialize, Serialize};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An element of 𝔥*.
///
/// Serializes as {"n": 3, "eps": ["2", "1/2", "0"], "delta": "0", "lambda0": "3"}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightJson", into = "WeightJson")]
pub struct Weight {
    pub eps: Vec<Q>,
    pub delta: Q,
    pub lambda0: Q,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightJson {
    n: usize,
    eps: Vec<String>,
    delta: String,
    lambda0: String,
}

impl From<Weight> for WeightJson {
    fn from(w: Weight) -> Self {
        WeightJson {
            n: w.rank(),
            eps: w.eps.iter().map(format_q).collect(),
            delta: format_q(&w.delta),
            lambda0: format_q(&w.lambda0),
        }
    }
}

impl TryFrom<WeightJson> for Weight {
    type Error = String;

    fn try_from(j: WeightJson) -> std::result::Result<Self, String> {
        let p = |s: &str| parse_q(s).ok_or_else(|| format!("not a rational: {s:?}"));
        if j.eps.len() != j.n {
            return Err(format!("eps has {} entries, n = {}", j.eps.len(), j.n));
        }
        let eps = j.eps.iter().map(|s| p(s)).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Weight::new(eps, p(&j.delta)?, p(&j.lambda0)?))
    }
}

impl Weight {
    pub fn new(eps: Vec<Q>, delta: Q, lambda0: Q) -> Self {
        Weight { eps, delta, lambda0 }
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(vec![Q::zero(); n], Q::zero(), Q::zero())
    }

    /// ε_i with a 1-based index.
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.eps[i - 1] = Q::one();
        w
    }

    pub fn delta(n: usize) -> Self {
        let mut w = Weight::zero(n);
        w.delta = Q::one();
        w
    }

    pub fn lambda0(n: usize) -> Self {
        let mut w = Weight::zero(n);
        w.lambda0 = Q::one();
        w
    }

    /// Integer root-lattice vector Σ c_i ε_i + m δ.
    pub fn from_ints(c: &[i64], m: i64) -> Self {
        Weight::new(c.iter().map(|&v| q(v)).collect(), q(m), Q::zero())
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    /// (λ, δ), the Λ₀-coefficient.
    pub fn level(&self) -> &Q {
        &self.lambda0
    }

    /// The pairings b_i = (λ, ε_i).
    pub fn eps_pairings(&self) -> Vec<Q> {
        let total: Q = self.eps.iter().sum();
        self.eps.iter().map(|x| x - &total).collect()
    }

    /// Inverse of [`Weight::eps_pairings`].
    pub fn from_eps_pairings(b: &[Q], delta: Q, lambda0: Q) -> Self {
        let n = b.len() as i64;
        let sum_b: Q = b.iter().sum();
        let shift = sum_b / q(1 - n);
        Weight::new(b.iter().map(|x| x + &shift).collect(), delta, lambda0)
    }

    pub fn scaled(&self, s: &Q) -> Self {
        Weight::new(
            self.eps.iter().map(|x| x * s).collect(),
            &self.delta * s,
            &self.lambda0 * s,
        )
    }

    /// Same weight with its δ-coefficient set to zero.
    pub fn without_delta(&self) -> Self {
        let mut w = self.clone();
        w.delta = Q::zero();
        w
    }

    /// Integer coordinates (c, m) when this is a root-lattice vector.
    pub fn lattice_coords(&self) -> Option<(Vec<i64>, i64)> {
        if !self.lambda0.is_zero() {
            return None;
        }
        let c = self
            .eps
            .iter()
            .map(|x| if is_integer(x) { x.numer().to_i64() } else { None })
            .collect::<Option<Vec<_>>>()?;
        let m = if is_integer(&self.delta) {
            self.delta.numer().to_i64()?
        } else {
            return None;
        };
        Some((c, m))
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(
            self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
            &self.delta + &rhs.delta,
            &self.lambda0 + &rhs.lambda0,
        )
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(
            self.eps.iter().zip(&rhs.eps).map(|(a, b)| a - b).collect(),
            &self.delta - &rhs.delta,
            &self.lambda0 - &rhs.lambda0,
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(
            self.eps.iter().map(|a| -a).collect(),
            -&self.delta,
            -&self.lambda0,
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &Q, name: &str| -> fmt::Result {
            if c.is_zero() {
                return Ok(());
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            first = false;
            if mag.is_one() {
                write!(f, "{sign}{name}")
            } else {
                write!(f, "{sign}{}{name}", crate::rational::format_q(&mag))
            }
        };
        for (i, c) in self.eps.iter().enumerate() {
            term(f, c, &format!("e{}", i + 1))?;
        }
        term(f, &self.delta, "d")?;
        term(f, &self.lambda0, "L0")?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn check_rank(a: &Weight, b: &Weight) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::IncompatibleRank(a.rank(), b.rank()));
    }
    Ok(())
}

/// The invariant form on 𝔥*.
pub fn pairing(lhs: &Weight, rhs: &Weight) -> Result<Q> {
    check_rank(lhs, rhs)?;
    Ok(pair(lhs, rhs))
}

// Unchecked pairing for equal-rank inputs.
pub(crate) fn pair(lhs: &Weight, rhs: &Weight) -> Q {
    let sl: Q = lhs.eps.iter().sum();
    let sr: Q = rhs.eps.iter().sum();
    let diag: Q = lhs.eps.iter().zip(&rhs.eps).map(|(a, b)| a * b).sum();
    diag - sl * sr + &lhs.delta * &rhs.lambda0 + &lhs.lambda0 * &rhs.delta
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub is_imaginary: bool,
}

impl Root {
    /// Classifies a root-lattice vector. Returns `None` if it is not a root.
    pub fn from_weight(weight: Weight) -> Option<Root> {
        let (c, m) = weight.lattice_coords()?;
        let nonzero: Vec<i64> = c.iter().copied().filter(|&v| v != 0).collect();
        let (parity, is_imaginary) = match nonzero.as_slice() {
            [] if m != 0 => (Parity::Even, true),
            [s] if s.abs() == 1 => (Parity::Odd, false),
            [a, b] if (*a == 1 && *b == -1) || (*a == -1 && *b == 1) => (Parity::Even, false),
            _ => return None,
        };
        Some(Root { weight, parity, is_imaginary })
    }

    /// σ ε_i + m δ, `i` 1-based, `sign` ±1.
    pub fn odd(n: usize, sign: i64, i: usize, m: i64) -> Root {
        let mut c = vec![0; n];
        c[i - 1] = sign;
        Root::from_weight(Weight::from_ints(&c, m)).expect("odd root")
    }

    /// ε_i − ε_j + m δ, 1-based, i ≠ j.
    pub fn even(n: usize, i: usize, j: usize, m: i64) -> Root {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[j - 1] = -1;
        Root::from_weight(Weight::from_ints(&c, m)).expect("even root")
    }

    pub fn imaginary(n: usize, m: i64) -> Root {
        Root::from_weight(Weight::from_ints(&vec![0; n], m)).expect("imaginary root")
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn negated(&self) -> Root {
        Root { weight: -&self.weight, ..self.clone() }
    }

    /// For an odd root σε_i + mδ, the pair (σ, i, m).
    pub fn odd_parts(&self) -> Option<(i64, usize, i64)> {
        if !self.is_odd() {
            return None;
        }
        let (c, m) = self.weight.lattice_coords()?;
        let i = c.iter().position(|&v| v != 0)?;
        Some((c[i], i + 1, m))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)
    }
}

/// The odd root at which Σ_j is reflected to reach Σ_{j+1}.
///
/// Writing j = qn + r with 0 ≤ r < n this is ε_{n−r} + qδ.
pub fn up_root(n: usize, j: i64) -> Root {
    let nn = n as i64;
    let qd = j.div_euclid(nn);
    let r = j.rem_euclid(nn);
    Root::odd(n, 1, (nn - r) as usize, qd)
}

/// The odd root at which Σ_j is reflected to reach Σ_{j−1}; equals −up_root(j−1).
pub fn down_root(n: usize, j: i64) -> Root {
    up_root(n, j - 1).negated()
}

/// The chain position t with `root = ±up_root(t)`, and the sign.
pub fn odd_root_position(n: usize, root: &Root) -> Option<(i64, i64)> {
    let (sign, i, m) = root.odd_parts()?;
    let nn = n as i64;
    // sign·(ε_i + (sign·m)δ)
    let qd = sign * m;
    Some((qd * nn + (nn - i as i64), sign))
}

/// Π₀ = {ε₁−ε₂, …, ε_{n−1}−ε_n, ε_n−ε₁+δ}.
pub fn pi0(n: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (1..n).map(|i| Root::even(n, i, i + 1, 0)).collect();
    out.push(Root::even(n, n, 1, 1));
    out
}

/// A set of simple roots from the string 𝓑.
///
/// Roots are kept in cyclic Dynkin order; the two odd roots occupy the
/// cyclically adjacent positions `up_pos` and `up_pos + 1`. Reflecting at the
/// root in `up_pos` moves one step up the string.
#[derive(Debug, Clone)]
pub struct SimpleRootSet {
    n: usize,
    roots: Vec<Root>,
    chain_index: i64,
    up_pos: usize,
    // integer inverse of the matrix whose columns are the roots as (c, m)
    inverse: Vec<Vec<i64>>,
}

impl PartialEq for SimpleRootSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.chain_index == other.chain_index && self.roots == other.roots
    }
}
impl Eq for SimpleRootSet {}

pub fn base_simple_roots(n: usize) -> Result<SimpleRootSet> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let mut roots = vec![Root::odd(n, -1, 1, 1)];
    roots.extend((1..n).map(|i| Root::even(n, i, i + 1, 0)));
    roots.push(Root::odd(n, 1, n, 0));
    Ok(SimpleRootSet::build(n, roots, 0, n))
}

impl SimpleRootSet {
    fn build(n: usize, roots: Vec<Root>, chain_index: i64, up_pos: usize) -> Self {
        let inverse = integer_inverse(&roots);
        SimpleRootSet { n, roots, chain_index, up_pos, inverse }
    }

    /// Σ_j, reached from the base set by |j| odd reflections.
    pub fn at(n: usize, j: i64) -> Result<SimpleRootSet> {
        let mut sigma = base_simple_roots(n)?;
        while sigma.chain_index < j {
            sigma = sigma.step(1);
        }
        while sigma.chain_index > j {
            sigma = sigma.step(-1);
        }
        Ok(sigma)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn chain_index(&self) -> i64 {
        self.chain_index
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Positions of the odd roots: (up, down).
    pub fn odd_positions(&self) -> (usize, usize) {
        (self.up_pos, (self.up_pos + 1) % self.roots.len())
    }

    pub fn up(&self) -> &Root {
        &self.roots[self.up_pos]
    }

    pub fn down(&self) -> &Root {
        &self.roots[self.odd_positions().1]
    }

    pub fn position(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r.weight == root.weight)
    }

    /// One step along the string: `+1` reflects at the up root, `-1` at the down root.
    pub fn step(&self, direction: i64) -> SimpleRootSet {
        let (up, down) = self.odd_positions();
        let p = if direction > 0 { up } else { down };
        self.reflect_at(p)
    }

    fn reflect_at(&self, p: usize) -> SimpleRootSet {
        let len = self.roots.len();
        let beta = &self.roots[p];
        let roots = self
            .roots
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i == p {
                    beta.negated()
                } else if pair(&a.weight, &beta.weight).is_zero() {
                    a.clone()
                } else {
                    Root::from_weight(&a.weight + &beta.weight).expect("reflected root")
                }
            })
            .collect();
        let (up, _) = self.odd_positions();
        let (index, up_pos) = if p == up {
            (self.chain_index + 1, (p + len - 1) % len)
        } else {
            (self.chain_index - 1, p)
        };
        SimpleRootSet::build(self.n, roots, index, up_pos)
    }

    /// Coordinates of a root-lattice vector in this basis, if integral.
    pub fn coordinates(&self, v: &Weight) -> Option<Vec<i64>> {
        let (c, m) = v.lattice_coords()?;
        Some(self.coordinates_int(&c, m))
    }

    pub(crate) fn coordinates_int(&self, c: &[i64], m: i64) -> Vec<i64> {
        self.inverse
            .iter()
            .map(|row| {
                row[..self.n].iter().zip(c).map(|(a, b)| a * b).sum::<i64>() + row[self.n] * m
            })
            .collect()
    }

    /// Σ x_t α_t for integer coordinates x.
    pub fn combination(&self, x: &[i64]) -> Weight {
        let mut c = vec![0i64; self.n];
        let mut m = 0i64;
        for (xt, root) in x.iter().zip(&self.roots) {
            let (rc, rm) = root.weight.lattice_coords().expect("root");
            for (ci, r) in c.iter_mut().zip(rc) {
                *ci += xt * r;
            }
            m += xt * rm;
        }
        Weight::from_ints(&c, m)
    }

    /// Whether `root` ∈ Δ⁺(Σ).
    pub fn is_positive(&self, root: &Root) -> bool {
        match self.coordinates(&root.weight) {
            Some(x) => x.iter().all(|&v| v >= 0) && x.iter().any(|&v| v > 0),
            None => false,
        }
    }

    /// Compares two weights in the order λ ≥_Σ μ ⇔ λ − μ ∈ ℤ≥0 Σ.
    pub fn compare(&self, a: &Weight, b: &Weight) -> Option<Ordering> {
        let x = self.coordinates(&(a - b))?;
        if x.iter().all(|&v| v == 0) {
            Some(Ordering::Equal)
        } else if x.iter().all(|&v| v >= 0) {
            Some(Ordering::Greater)
        } else if x.iter().all(|&v| v <= 0) {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Sum of coordinates of a root-lattice vector.
    pub fn height(&self, v: &Weight) -> Option<i64> {
        self.coordinates(v).map(|x| x.iter().sum())
    }
}

// Inverse of the basis matrix; unimodular, so integral.
fn integer_inverse(roots: &[Root]) -> Vec<Vec<i64>> {
    let dim = roots.len();
    let n = dim - 1;
    // a[row][col]: column col is root col as (c_1..c_n, m)
    let mut a: Vec<Vec<Q>> = vec![vec![Q::zero(); 2 * dim]; dim];
    for (col, root) in roots.iter().enumerate() {
        for i in 0..n {
            a[i][col] = root.weight.eps[i].clone();
        }
        a[n][col] = root.weight.delta.clone();
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[dim + i] = Q::one();
    }
    for col in 0..dim {
        let piv = (col..dim).find(|&r| !a[r][col].is_zero()).expect("simple roots are a basis");
        a.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..dim {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * dim {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            row[dim..]
                .iter()
                .map(|v| {
                    assert!(is_integer(v), "basis is not unimodular");
                    v.numer().to_i64().expect("small entries")
                })
                .collect()
        })
        .collect()
}

/// The odd reflection r_β Σ.
pub fn odd_reflection(sigma: &SimpleRootSet, beta: &Root) -> Result<SimpleRootSet> {
    if beta.weight.rank() != sigma.n {
        return Err(Error::IncompatibleRank(beta.weight.rank(), sigma.n));
    }
    let p = sigma.position(beta).ok_or(Error::NotOddSimpleRoot)?;
    if !sigma.roots[p].is_odd() {
        return Err(Error::NotOddSimpleRoot);
    }
    Ok(sigma.reflect_at(p))
}

/// The odd roots β₁, …, β_s of the loop-free chain with dst = r_{β_s}…r_{β₁} src.
pub fn proper_chain(src: &SimpleRootSet, dst: &SimpleRootSet) -> Result<Vec<Root>> {
    if src.n != dst.n {
        return Err(Error::IncompatibleRank(src.n, dst.n));
    }
    let n = src.n;
    let (a, b) = (src.chain_index, dst.chain_index);
    Ok(if a <= b {
        (a..b).map(|t| up_root(n, t)).collect()
    } else {
        (b + 1..=a).rev().map(|t| down_root(n, t)).collect()
    })
}

/// The weight with prescribed pairings `marks[t] = (λ, α_t)` against Σ, the
/// given Λ₀-coefficient (level) and δ-coefficient. `None` when the marks do
/// not sum to the level.
pub fn weight_with_marks(
    sigma: &SimpleRootSet,
    marks: &[Q],
    level: &Q,
    delta: &Q,
) -> Option<Weight> {
    let n = sigma.n;
    // Rows: Σ_i c_i b_i = a_t − m_t·level, unknowns b_1..b_n.
    let mut rows: Vec<Vec<Q>> = sigma
        .roots
        .iter()
        .zip(marks)
        .map(|(root, a)| {
            let mut row: Vec<Q> = root.weight.eps.clone();
            row.push(a - &root.weight.delta * level);
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = Q::one() / &rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let d = &f * &rows[rank][c];
                    rows[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    if rank != n || rows[n..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let b: Vec<Q> = rows[..n].iter().map(|r| r[n].clone()).collect();
    Some(Weight::from_eps_pairings(&b, delta.clone(), level.clone()))
}

/// ρ_Σ: 2(ρ, α) = (α, α) on Σ, δ-coefficient 0, Λ₀-coefficient n − 1.
pub fn rho_of(sigma: &SimpleRootSet) -> Weight {
    let marks: Vec<Q> = sigma
        .roots
        .iter()
        .map(|r| if r.is_odd() { Q::zero() } else { Q::one() })
        .collect();
    weight_with_marks(sigma, &marks, &q(sigma.n as i64 - 1), &Q::zero())
        .expect("Weyl vector exists")
}

/// ρ_{Σ_t} normalized along the string: ρ_{Σ_0} plus the odd roots
/// reflected on the way, so that ρ_{r_β Σ} = ρ_Σ + β holds exactly.
/// Differs from [`rho_of`] by a multiple of δ.
pub fn chain_rho(n: usize, t: i64) -> Result<Weight> {
    let base = base_simple_roots(n)?;
    let mut rho = rho_of(&base);
    for s in 0..t.max(0) {
        rho = &rho + &up_root(n, s).weight;
    }
    for s in t.min(0)..0 {
        rho = &rho - &up_root(n, s).weight;
    }
    Ok(rho)
}

/// r_α λ = λ − (λ, α)α for a real even root (α, α) = 2.
pub fn reflect(lam: &Weight, alpha: &Root) -> Weight {
    let p = pair(lam, &alpha.weight);
    lam - &alpha.weight.scaled(&p)
}

/// The unique W-conjugate of `lam` with nonnegative integer Π₀-pairings.
pub fn dominant_representative(lam: &Weight) -> Result<Weight> {
    let n = lam.rank();
    let simple = pi0(n);
    if simple.iter().any(|a| !is_integer(&pair(lam, &a.weight))) {
        return Err(Error::NotIntegral);
    }
    if !lam.level().is_positive() {
        return Err(Error::NonPositiveLevel);
    }
    let mut cur = lam.clone();
    loop {
        let neg = simple.iter().find(|a| pair(&cur, &a.weight).is_negative());
        match neg {
            Some(a) => cur = reflect(&cur, a),
            None => return Ok(cur),
        }
    }
}

/// Whether (λ, α) ≠ 0 for every real even root α = ε_i − ε_j + mδ.
///
/// Decided exactly: (λ, α) = b_i − b_j + m·level vanishes for some m iff
/// (b_i − b_j)/level is an integer (or b_i = b_j at level 0).
pub fn is_regular_weight(lam: &Weight) -> bool {
    let b = lam.eps_pairings();
    let level = lam.level();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let d = &b[i] - &b[j];
            if level.is_zero() {
                if d.is_zero() {
                    return false;
                }
            } else if is_integer(&(d / level)) {
                return false;
            }
        }
    }
    true
}

/// Multiplicity of the imaginary root mδ (even part); odd imaginary roots do not occur.
pub fn imaginary_multiplicity(n: usize) -> usize {
    n
}

/// A positive root together with its Σ-coordinates and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: Root,
    pub coords: Vec<i64>,
    pub multiplicity: usize,
}

/// All positive roots of height at most `depth`.
pub fn positive_roots_up_to(sigma: &SimpleRootSet, depth: usize) -> Vec<(Root, usize)> {
    positive_roots_with_coords(sigma, depth)
        .into_iter()
        .map(|p| (p.root, p.multiplicity))
        .collect()
}

pub fn positive_roots_with_coords(sigma: &SimpleRootSet, depth: usize) -> Vec<PositiveRoot> {
    let n = sigma.n;
    if depth == 0 {
        return Vec::new();
    }
    let max_m = sigma
        .roots
        .iter()
        .map(|r| r.weight.lattice_coords().expect("root").1.abs())
        .max()
        .unwrap_or(0);
    let bound = max_m * depth as i64 + 1;
    let mut out = Vec::new();
    let mut consider = |c: Vec<i64>, m: i64, mult: usize| {
        let x = sigma.coordinates_int(&c, m);
        let h: i64 = x.iter().sum();
        if x.iter().all(|&v| v >= 0) && h > 0 && h <= depth as i64 {
            let root = Root::from_weight(Weight::from_ints(&c, m)).expect("root");
            out.push(PositiveRoot { root, coords: x, multiplicity: mult });
        }
    };
    for m in -bound..=bound {
        if m > 0 {
            consider(vec![0; n], m, imaginary_multiplicity(n));
        }
        for i in 0..n {
            for s in [1, -1] {
                let mut c = vec![0; n];
                c[i] = s;
                consider(c, m, 1);
            }
            for j in 0..n {
                if i != j {
                    let mut c = vec![0; n];
                    c[i] = 1;
                    c[j] = -1;
                    consider(c, m, 1);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        let ha: i64 = a.coords.iter().sum();
        let hb: i64 = b.coords.iter().sum();
        ha.cmp(&hb).then_with(|| a.coords.cmp(&b.coords))
    });
    out
}

/// (λ + ρ_Σ, λ + ρ_Σ) for an unshifted weight λ.
pub fn casimir_norm(lam: &Weight, sigma: &SimpleRootSet) -> Result<Q> {
    if lam.rank() != sigma.n {
        return Err(Error::IncompatibleRank(lam.rank(), sigma.n));
    }
    let shifted = lam + &rho_of(sigma);
    Ok(pair(&shifted, &shifted))
}

/// (Λ, Λ) for an already ρ-shifted weight.
pub fn norm(rho_wt: &Weight) -> Q {
    pair(rho_wt, rho_wt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn eps(n: usize, i: usize) -> Weight {
        Weight::epsilon(n, i)
    }

    #[test]
    fn form_on_basis() {
        assert_eq!(pairing(&eps(3, 1), &eps(3, 2)).unwrap(), q(-1));
        assert_eq!(pairing(&eps(3, 1), &eps(3, 1)).unwrap(), q(0));
        assert_eq!(pairing(&Weight::lambda0(3), &Weight::delta(3)).unwrap(), q(1));
        assert_eq!(pairing(&Weight::delta(3), &Weight::delta(3)).unwrap(), q(0));
        assert_eq!(pairing(&Weight::lambda0(3), &Weight::lambda0(3)).unwrap(), q(0));
        assert_eq!(pairing(&Weight::delta(3), &eps(3, 2)).unwrap(), q(0));
        assert_eq!(
            pairing(&eps(2, 1), &eps(3, 1)),
            Err(Error::IncompatibleRank(2, 3))
        );
    }

    #[test]
    fn eps_pairings_round_trip() {
        let w = Weight::new(vec![q_frac(1, 2), q(-3), q(2)], q(4), q(5));
        let b = w.eps_pairings();
        assert_eq!(Weight::from_eps_pairings(&b, q(4), q(5)), w);
        for (i, bi) in b.iter().enumerate() {
            assert_eq!(*bi, pair(&w, &eps(3, i + 1)));
        }
    }

    #[test]
    fn base_sets() {
        assert_eq!(base_simple_roots(1).unwrap_err(), Error::RankTooSmall(1));
        let s2 = base_simple_roots(2).unwrap();
        let names: Vec<String> = s2.roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["-e1+d", "e1-e2", "e2"]);
        let s3 = base_simple_roots(3).unwrap();
        let names: Vec<String> = s3.roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["-e1+d", "e1-e2", "e2-e3", "e3"]);
        let sum = s3.roots().iter().fold(Weight::zero(3), |acc, r| &acc + &r.weight);
        assert_eq!(sum, Weight::delta(3));
        assert_eq!(s3.up().to_string(), "e3");
        assert_eq!(s3.down().to_string(), "-e1+d");
    }

    #[test]
    fn reflection_at_eps_n() {
        let s = base_simple_roots(2).unwrap();
        let r = odd_reflection(&s, &Root::odd(2, 1, 2, 0)).unwrap();
        let mut names: Vec<String> = r.roots().iter().map(|r| r.to_string()).collect();
        names.sort();
        let mut want = vec!["-e2".to_string(), "e1".into(), "-e1+e2+d".into()];
        want.sort();
        assert_eq!(names, want);
        assert_eq!(r.chain_index(), 1);
        let back = odd_reflection(&r, &Root::odd(2, -1, 2, 0)).unwrap();
        assert_eq!(back, s);
        let err = odd_reflection(&s, &Root::even(2, 1, 2, 0)).unwrap_err();
        assert_eq!(err, Error::NotOddSimpleRoot);
        let err = odd_reflection(&s, &Root::odd(2, 1, 1, 0)).unwrap_err();
        assert_eq!(err, Error::NotOddSimpleRoot);
    }

    #[test]
    fn closed_form_up_roots() {
        for n in 2..=4 {
            let mut s = base_simple_roots(n).unwrap();
            for j in 0..25 {
                assert_eq!(s.up(), &up_root(n, j));
                assert_eq!(s.down(), &down_root(n, j));
                assert_eq!(odd_root_position(n, s.up()), Some((j, 1)));
                s = s.step(1);
            }
            let mut s = base_simple_roots(n).unwrap();
            for j in 0..25 {
                assert_eq!(s.up(), &up_root(n, -j));
                s = s.step(-1);
            }
        }
    }

    #[test]
    fn rho_examples() {
        let r2 = rho_of(&base_simple_roots(2).unwrap());
        assert_eq!(r2.eps, vec![q(0), q(-1)]);
        assert_eq!(r2.lambda0, q(1));
        assert_eq!(r2.eps_pairings(), vec![q(1), q(0)]);
        let r3 = rho_of(&base_simple_roots(3).unwrap());
        assert_eq!(r3.eps, vec![q_frac(1, 2), q_frac(-1, 2), q_frac(-3, 2)]);
        assert_eq!(r3.lambda0, q(2));
        assert_eq!(r3.eps_pairings(), vec![q(2), q(1), q(0)]);
        for j in -7..7 {
            let s = SimpleRootSet::at(4, j).unwrap();
            let rho = rho_of(&s);
            for a in s.roots() {
                assert_eq!(pair(&rho, &a.weight) * q(2), pair(&a.weight, &a.weight));
            }
            assert_eq!(pair(&rho, &Weight::delta(4)), q(3));
            let c = chain_rho(4, j).unwrap();
            assert_eq!((&c - &rho).without_delta(), Weight::zero(4));
            assert_eq!(chain_rho(4, j + 1).unwrap(), &c + &s.up().weight);
        }
    }

    #[test]
    fn weight_json_round_trip() {
        let w = Weight::new(vec![q(2), crate::rational::q_frac(-1, 2), q(0)], q(1), q(3));
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"n":3,"eps":["2","-1/2","0"],"delta":"1","lambda0":"3"}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Weight>(r#"{"n":2,"eps":["1"],"delta":"0","lambda0":"1"}"#).is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"n":1,"eps":["x"],"delta":"0","lambda0":"1"}"#).is_err());
    }

    #[test]
    fn dominant_examples() {
        let n = 2;
        let s = base_simple_roots(n).unwrap();
        let level = q(2);
        // Π₀ pairings (−2, 4): b1 − b2 = −2, b2 − b1 + 2 = 4.
        let lam = Weight::from_eps_pairings(&[q(0), q(2)], q(0), level.clone());
        let p0 = pi0(n);
        let pairs: Vec<Q> = p0.iter().map(|a| pair(&lam, &a.weight)).collect();
        assert_eq!(pairs, vec![q(-2), q(4)]);
        let d = dominant_representative(&lam).unwrap();
        let pairs: Vec<Q> = p0.iter().map(|a| pair(&d, &a.weight)).collect();
        assert_eq!(pairs, vec![q(2), q(0)]);
        assert_eq!(dominant_representative(&d).unwrap(), d);
        let moved = reflect(&lam, &p0[1]);
        assert_eq!(dominant_representative(&moved).unwrap(), d);
        let frac = Weight::from_eps_pairings(&[q_frac(1, 3), q(0)], q(0), q(2));
        assert_eq!(dominant_representative(&frac), Err(Error::NotIntegral));
        let lvl0 = Weight::from_eps_pairings(&[q(1), q(0)], q(0), q(0));
        assert_eq!(dominant_representative(&lvl0), Err(Error::NonPositiveLevel));
        let _ = s;
    }

    #[test]
    fn positive_root_enumeration() {
        let s = base_simple_roots(2).unwrap();
        assert!(positive_roots_up_to(&s, 0).is_empty());
        let one = positive_roots_up_to(&s, 1);
        assert_eq!(one.len(), 3);
        assert!(one.iter().all(|(r, m)| *m == 1 && s.position(r).is_some()));
        let three = positive_roots_up_to(&s, 3);
        let delta = three.iter().find(|(r, _)| r.is_imaginary).unwrap();
        assert_eq!(delta.0.weight, Weight::delta(2));
        assert_eq!(delta.1, 2);
    }

    #[test]
    fn casimir_examples() {
        let s = base_simple_roots(3).unwrap();
        let rho = rho_of(&s);
        assert_eq!(casimir_norm(&(-&rho), &s).unwrap(), q(0));
        assert_eq!(casimir_norm(&Weight::lambda0(3), &s).unwrap(), q_frac(1, 2));
    }

    #[test]
    fn proper_chain_examples() {
        let s0 = base_simple_roots(2).unwrap();
        assert!(proper_chain(&s0, &s0).unwrap().is_empty());
        let s1 = s0.step(1);
        assert_eq!(proper_chain(&s0, &s1).unwrap(), vec![s0.up().clone()]);
        let s2 = s1.step(1);
        let chain = proper_chain(&s0, &s2).unwrap();
        assert_eq!(chain.len(), 2);
        assert!(chain.iter().all(|b| s0.is_positive(b)));
    }
}

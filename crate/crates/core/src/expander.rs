//! Port-labelled regular multigraphs and the explicit expander families.
//!
//! A [`RotationGraph`] stores, for every `(vertex, port)` slot, the slot it
//! is paired with. Pairing is an involution, which is what makes the
//! multigraph undirected. Powering composes rotation maps along walks.

use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default limit on `n * d` slots for any constructed rotation graph.
pub const DEFAULT_PORT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExpanderError {
    #[error("Gabber-Galil graphs need k >= 2, got {0}")]
    GabberGalilTooSmall(usize),
    #[error("complete-graph expanders need n >= 3, got {0}")]
    CompleteTooSmall(usize),
    #[error("power must be >= 1")]
    ZeroPower,
    #[error("{n} vertices of degree {d}^{p} exceed the cap of {cap} port slots")]
    PortCap { n: usize, d: usize, p: u32, cap: usize },
    #[error("alpha target must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(String),
    #[error("rotation map has {found} slots, expected n*d = {expected}")]
    SlotCount { expected: usize, found: usize },
    #[error("slot ({vertex}, {port}) maps outside the graph")]
    DanglingSlot { vertex: usize, port: usize },
    #[error("rotation map is not an involution at ({vertex}, {port})")]
    NotInvolution { vertex: usize, port: usize },
    #[error("invalid rotation-graph JSON: {0}")]
    Json(String),
}

/// A `d`-regular multigraph given by its rotation map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationGraph {
    n: usize,
    d: usize,
    /// `rot[v * d + i] = (u, j)`.
    rot: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RotationFile {
    n: usize,
    d: usize,
    rot: Vec<[usize; 2]>,
}

impl RotationGraph {
    /// Validates totality and the involution property.
    pub fn new(n: usize, d: usize, rot: Vec<(usize, usize)>) -> Result<Self, ExpanderError> {
        if rot.len() != n * d {
            return Err(ExpanderError::SlotCount { expected: n * d, found: rot.len() });
        }
        for (slot, &(u, j)) in rot.iter().enumerate() {
            let (vertex, port) = (slot / d, slot % d);
            if u >= n || j >= d {
                return Err(ExpanderError::DanglingSlot { vertex, port });
            }
            if rot[u * d + j] != (vertex, port) {
                return Err(ExpanderError::NotInvolution { vertex, port });
            }
        }
        Ok(Self { n, d, rot })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn rotate(&self, v: usize, port: usize) -> (usize, usize) {
        self.rot[v * self.d + port]
    }

    #[inline]
    pub fn neighbor(&self, v: usize, port: usize) -> usize {
        self.rot[v * self.d + port].0
    }

    /// Neighbours of `v` in port order, with multiplicity.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot[v * self.d..(v + 1) * self.d].iter().map(|&(u, _)| u)
    }

    pub fn is_involution(&self) -> bool {
        self.rot.iter().enumerate().all(|(slot, &(u, j))| {
            u < self.n && j < self.d && self.rot[u * self.d + j] == (slot / self.d, slot % self.d)
        })
    }

    /// Dense multiplicity matrix: entry `(v, u)` counts the ports of `v`
    /// leading to `u`, so rows sum to `d` and loops sit on the diagonal.
    pub fn multiplicity_rows(&self) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; self.n]; self.n];
        for (v, row) in m.iter_mut().enumerate() {
            for u in self.neighbors(v) {
                row[u] += 1;
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        let file = RotationFile {
            n: self.n,
            d: self.d,
            rot: self.rot.iter().map(|&(u, j)| [u, j]).collect(),
        };
        serde_json::to_string(&file).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ExpanderError> {
        let file: RotationFile =
            serde_json::from_str(text).map_err(|e| ExpanderError::Json(e.to_string()))?;
        Self::new(file.n, file.d, file.rot.into_iter().map(|[u, j]| (u, j)).collect())
    }
}

/// The degree-8 Margulis–Gabber–Galil graph on `Z_k x Z_k`.
///
/// Vertex `(x, y)` is index `x * k + y`. Ports 0..4 apply
/// `(x+y, y)`, `(x+y+1, y)`, `(x, y+x)`, `(x, y+x+1)`; ports 4..8 apply the
/// inverses, and port `i` is paired with port `(i + 4) mod 8`.
pub fn build_gabber_galil(k: usize) -> Result<RotationGraph, ExpanderError> {
    if k < 2 {
        return Err(ExpanderError::GabberGalilTooSmall(k));
    }
    let n = k * k;
    let mut rot = Vec::with_capacity(n * 8);
    for x in 0..k {
        for y in 0..k {
            for port in 0..8 {
                let (nx, ny) = gabber_galil_map(k, x, y, port);
                rot.push((nx * k + ny, (port + 4) % 8));
            }
        }
    }
    Ok(RotationGraph { n, d: 8, rot })
}

fn gabber_galil_map(k: usize, x: usize, y: usize, port: usize) -> (usize, usize) {
    let add = |a: usize, b: usize, c: usize| (a + b + c) % k;
    let sub = |a: usize, b: usize, c: usize| (a + 2 * k - b - c) % k;
    match port {
        0 => (add(x, y, 0), y),
        1 => (add(x, y, 1), y),
        2 => (x, add(y, x, 0)),
        3 => (x, add(y, x, 1)),
        4 => (sub(x, y, 0), y),
        5 => (sub(x, y, 1), y),
        6 => (x, sub(y, x, 0)),
        7 => (x, sub(y, x, 1)),
        _ => unreachable!("Gabber-Galil graphs have 8 ports"),
    }
}

/// `K_n` with port `i` of `v` leading to the `i`-th other vertex in
/// increasing order.
pub fn build_complete(n: usize) -> Result<RotationGraph, ExpanderError> {
    if n < 3 {
        return Err(ExpanderError::CompleteTooSmall(n));
    }
    let d = n - 1;
    let mut rot = Vec::with_capacity(n * d);
    for v in 0..n {
        for port in 0..d {
            let u = if port < v { port } else { port + 1 };
            let back = if v < u { v } else { v - 1 };
            rot.push((u, back));
        }
    }
    Ok(RotationGraph { n, d, rot })
}

pub fn power(h: &RotationGraph, p: u32) -> Result<RotationGraph, ExpanderError> {
    power_with_cap(h, p, DEFAULT_PORT_CAP)
}

/// `h^p`: port `(i_1, ..., i_p)` (base-`d` digits, `i_1` most significant)
/// follows the `p`-step walk and returns the reversed sequence of arrival
/// ports, which keeps the map an involution.
pub fn power_with_cap(h: &RotationGraph, p: u32, cap: usize) -> Result<RotationGraph, ExpanderError> {
    if p == 0 {
        return Err(ExpanderError::ZeroPower);
    }
    let (n, d) = (h.n, h.d);
    let too_big = ExpanderError::PortCap { n, d, p, cap };
    let dp = d.checked_pow(p).ok_or(too_big.clone())?;
    if n.checked_mul(dp).is_none_or(|slots| slots > cap) {
        return Err(too_big);
    }
    let mut rot = Vec::with_capacity(n * dp);
    let mut digits = vec![0usize; p as usize];
    for v in 0..n {
        for seq in 0..dp {
            let mut rest = seq;
            for slot in digits.iter_mut().rev() {
                *slot = rest % d;
                rest /= d;
            }
            let mut at = v;
            let mut back = 0usize;
            let mut scale = 1usize;
            // arrival ports reversed: the last arrival port becomes the most
            // significant digit of the returned sequence
            for &port in &digits {
                let (u, j) = h.rotate(at, port);
                at = u;
                back += j * scale;
                scale *= d;
            }
            rot.push((at, back));
        }
    }
    Ok(RotationGraph { n, d: dp, rot })
}

/// The expansion constant of the Gabber–Galil family, `5√2/8`, held as its
/// exact square `25/32`.
pub fn gabber_galil_alpha_squared() -> Rational {
    rational::rat(25, 32)
}

/// Smallest `p` with `(5√2/8)^p <= alpha_target`.
///
/// Both sides are positive, so the test is equivalent to
/// `(25/32)^p <= alpha_target^2`, decided in exact rational arithmetic.
pub fn select_power_for_alpha(alpha_target: &Rational) -> Result<u32, ExpanderError> {
    if *alpha_target <= Rational::zero() || *alpha_target >= Rational::one() {
        return Err(ExpanderError::AlphaOutOfRange(rational::format_rational(alpha_target)));
    }
    let target_sq = alpha_target * alpha_target;
    let base = gabber_galil_alpha_squared();
    let mut acc = base.clone();
    let mut p = 1u32;
    while acc > target_sq {
        acc *= &base;
        p += 1;
    }
    Ok(p)
}

/// A claimed expansion `α`, stored exactly through its square so that
/// irrational members such as `(5√2/8)^p` need no rounding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaBound {
    #[serde(with = "crate::rational::serde_rational")]
    pub squared: Rational,
}

impl AlphaBound {
    pub fn exact(alpha: Rational) -> Self {
        Self { squared: &alpha * &alpha }
    }

    pub fn from_squared(squared: Rational) -> Self {
        Self { squared }
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.squared).sqrt()
    }

    /// A rational `q >= α`; exact when `α` is rational.
    pub fn rational_upper(&self) -> Rational {
        rational::sqrt_upper(&self.squared)
    }

    pub fn pow(&self, p: u32) -> Self {
        Self { squared: num_traits::pow(self.squared.clone(), p as usize) }
    }

    pub fn le(&self, alpha: &Rational) -> bool {
        *alpha >= Rational::zero() && self.squared <= alpha * alpha
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    GabberGalil,
    Complete,
    External,
}

/// A family member together with its claimed expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpanderSpec {
    pub family: Family,
    /// `k` for Gabber–Galil (on `k^2` vertices), `n` otherwise.
    pub param: usize,
    pub power: u32,
    pub alpha_bound: AlphaBound,
}

impl ExpanderSpec {
    pub fn gabber_galil(k: usize, power: u32) -> Self {
        Self {
            family: Family::GabberGalil,
            param: k,
            power,
            alpha_bound: AlphaBound::from_squared(gabber_galil_alpha_squared()).pow(power),
        }
    }

    pub fn complete(n: usize, power: u32) -> Self {
        let base = rational::rat(1, n as i64 - 1);
        Self {
            family: Family::Complete,
            param: n,
            power,
            alpha_bound: AlphaBound::exact(base).pow(power),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::GabberGalil => self.param * self.param,
            _ => self.param,
        }
    }

    pub fn base_degree(&self) -> usize {
        match self.family {
            Family::GabberGalil => 8,
            _ => self.param.saturating_sub(1),
        }
    }

    /// Degree of the powered member, if it fits in a `usize`.
    pub fn degree(&self) -> Option<usize> {
        self.base_degree().checked_pow(self.power)
    }

    /// Materialises the member. External members cannot be rebuilt from a
    /// spec; callers keep the graph they imported.
    pub fn build(&self) -> Result<RotationGraph, ExpanderError> {
        let base = match self.family {
            Family::GabberGalil => build_gabber_galil(self.param)?,
            Family::Complete | Family::External => build_complete(self.param)?,
        };
        if self.power == 1 {
            Ok(base)
        } else {
            power(&base, self.power)
        }
    }
}

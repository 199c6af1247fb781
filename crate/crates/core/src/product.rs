//! The derandomized graph product and the linear-size gap amplifier.
//!
//! Vertices of `G'_t` are the `(t-1)`-step walks on an expander `H` over
//! `V(G)`, identified by start vertex and port sequence. Two walks are
//! adjacent iff the union of the base vertices they visit is a clique of
//! `G`. There are exactly `n * d^(t-1)` walks.

use crate::bitset::Bitset;
use crate::expander::{self, ExpanderError, ExpanderSpec, Family, RotationGraph, DEFAULT_PORT_CAP};
use crate::instances::Graph;
use crate::rational::{self, from_usize, rat, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Default limit on the number of product vertices.
pub const DEFAULT_PRODUCT_CAP: usize = 5000;
const MAX_PRODUCT_POWER: u32 = 10_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("walk length parameter t must be >= 1")]
    ZeroLength,
    #[error("graph has {graph} vertices but the expander has {expander}")]
    VertexMismatch { graph: usize, expander: usize },
    #[error("{n} * {d}^{} walks exceed the cap of {cap} product vertices", .t - 1)]
    SizeCap { n: usize, d: usize, t: u32, cap: usize },
    #[error("invalid amplification parameters: {0}")]
    InvalidParams(String),
    #[error("family cannot reach alpha <= {target} under the size cap: {reason}")]
    FamilyUnreachable { target: String, reason: String },
    #[error("padding ratio {n}/{padded} is below 1 - epsilon = {floor}")]
    PaddingRatio { n: usize, padded: usize, floor: String },
    #[error(transparent)]
    Expander(#[from] ExpanderError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub id: usize,
    pub start: usize,
    pub ports: Vec<usize>,
    /// Base vertices in walk order, `start` first.
    pub visited: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct WalkGraph {
    pub graph: Graph,
    pub walks: Vec<Walk>,
    pub t: u32,
    pub degree: usize,
}

impl WalkGraph {
    pub fn walk_table_json(&self) -> String {
        serde_json::to_string(&self.walks).expect("plain data serializes")
    }
}

/// `n * d^(t-1)`, if it fits.
pub fn walk_count(n: usize, d: usize, t: u32) -> Option<usize> {
    d.checked_pow(t.checked_sub(1)?)?.checked_mul(n)
}

pub fn derandomized_product(g: &Graph, h: &RotationGraph, t: u32) -> Result<WalkGraph, ProductError> {
    derandomized_product_with_cap(g, h, t, DEFAULT_PRODUCT_CAP)
}

pub fn derandomized_product_with_cap(
    g: &Graph,
    h: &RotationGraph,
    t: u32,
    cap: usize,
) -> Result<WalkGraph, ProductError> {
    if t == 0 {
        return Err(ProductError::ZeroLength);
    }
    let (n, d) = (g.n(), h.degree());
    if h.n() != n {
        return Err(ProductError::VertexMismatch { graph: n, expander: h.n() });
    }
    let size_cap = ProductError::SizeCap { n, d, t, cap };
    let per_start = d.checked_pow(t - 1).ok_or(size_cap.clone())?;
    let total = per_start.checked_mul(n).ok_or(size_cap.clone())?;
    if total > cap {
        return Err(size_cap);
    }

    let steps = (t - 1) as usize;
    let mut walks = Vec::with_capacity(total);
    let mut ports = vec![0usize; steps];
    for start in 0..n {
        for seq in 0..per_start {
            let mut rest = seq;
            for slot in ports.iter_mut().rev() {
                *slot = rest % d;
                rest /= d;
            }
            let mut visited = Vec::with_capacity(steps + 1);
            visited.push(start);
            let mut at = start;
            for &p in &ports {
                at = h.neighbor(at, p);
                visited.push(at);
            }
            walks.push(Walk { id: walks.len(), start, ports: ports.clone(), visited });
        }
    }

    // x ~ y iff visited(x) ∪ visited(y) is a clique, i.e. both walks are
    // cliques and visited(y) lies in the common closed neighbourhood of x.
    let closed: Vec<Bitset> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut sets = Vec::with_capacity(total);
    let mut common = Vec::with_capacity(total);
    let mut is_clique = Vec::with_capacity(total);
    for w in &walks {
        let set = Bitset::from_iter(n, w.visited.iter().copied());
        let mut c = Bitset::full(n);
        for v in set.iter() {
            c.intersect_with(&closed[v]);
        }
        is_clique.push(set.is_subset(&c));
        sets.push(set);
        common.push(c);
    }
    let graph = Graph::from_fn(total, |x, y| {
        is_clique[x] && is_clique[y] && sets[y].is_subset(&common[x])
    });
    Ok(WalkGraph { graph, walks, t, degree: d })
}

/// Which expander family the amplifier should draw from.
#[derive(Clone, Debug)]
pub enum FamilyRequest {
    Complete,
    GabberGalil,
    /// A user-supplied member with its (already verified) expansion.
    External { graph: RotationGraph, alpha: expander::AlphaBound },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmplifyParams {
    #[serde(with = "rational::serde_rational")]
    pub a: Rational,
    #[serde(with = "rational::serde_rational")]
    pub b: Rational,
    #[serde(with = "rational::serde_rational")]
    pub r: Rational,
    #[serde(with = "rational::serde_rational")]
    pub epsilon: Rational,
    #[serde(with = "rational::serde_rational")]
    pub alpha_target: Rational,
    /// Rational upper bound on the member's expansion (exact when rational).
    #[serde(with = "rational::serde_rational")]
    pub alpha: Rational,
    pub t: u32,
    pub expander: ExpanderSpec,
}

impl AmplifyParams {
    /// `b + 2α`.
    pub fn no_base(&self) -> Rational {
        &self.b + &self.alpha * rat(2, 1)
    }

    /// `a(1 - ε) - 2α`.
    pub fn yes_base(&self) -> Rational {
        &self.a * (Rational::one() - &self.epsilon) - &self.alpha * rat(2, 1)
    }

    pub fn b_r(&self) -> Rational {
        num_traits::pow(self.no_base(), self.t as usize)
    }

    pub fn a_r(&self) -> Rational {
        num_traits::pow(self.yes_base(), self.t as usize)
    }

    /// Checks every invariant of a parameter tuple.
    pub fn validate(&self) -> Result<(), ProductError> {
        let zero = Rational::zero();
        let one = Rational::one();
        let bad = |msg: &str| Err(ProductError::InvalidParams(msg.to_string()));
        if !(self.b > zero && self.a > self.b && self.a <= one) {
            return bad("need 0 < b < a <= 1");
        }
        if !(self.r > zero && self.r < one) {
            return bad("ratio must lie in (0, 1)");
        }
        if self.t == 0 {
            return bad("t must be >= 1");
        }
        if !(self.epsilon >= zero && self.epsilon < one) {
            return bad("epsilon must lie in [0, 1)");
        }
        if !self.expander.alpha_bound.le(&self.alpha) {
            return bad("alpha is not an upper bound on the member's expansion");
        }
        if self.alpha >= &self.b / rat(6, 1) {
            return bad("alpha must be < b/6");
        }
        if self.yes_base() <= self.no_base() {
            return bad("need a(1-eps) - 2 alpha > b + 2 alpha");
        }
        if self.b_r() > &self.a_r() * &self.r {
            return bad("(b+2a)^t / (a(1-eps)-2a)^t exceeds the ratio");
        }
        Ok(())
    }
}

/// Selects `ε`, the expander member and `t`.
///
/// `ε = (a-b)/(8a)`, `α_target = min(b/6 (1 - 10^-9), (a-b)/16)`. When the
/// input size `n` is known, only members on `n'` vertices with
/// `n <= n' <= n/(1-ε)` are considered, so that padding keeps
/// `n/n' >= 1-ε`; among those, the smallest degree wins. `t` is the least
/// integer with `((b+2α)/(a(1-ε)-2α))^t <= r`, decided exactly.
pub fn select_amplification_params(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    family: &FamilyRequest,
    n: Option<usize>,
) -> Result<AmplifyParams, ProductError> {
    let zero = Rational::zero();
    let one = Rational::one();
    if !(*b > zero && a > b && *a <= one) {
        return Err(ProductError::InvalidParams("need 0 < b < a <= 1".into()));
    }
    if !(*r > zero && *r < one) {
        return Err(ProductError::InvalidParams("ratio must lie in (0, 1)".into()));
    }
    let epsilon = (a - b) / (a * rat(8, 1));
    let strict_b = b / rat(6, 1) * (one.clone() - rat(1, 1_000_000_000));
    let gap_part = (a - b) / rat(16, 1);
    let alpha_target = if strict_b < gap_part { strict_b } else { gap_part };

    let expander = choose_member(family, &alpha_target, &epsilon, n)?;
    let alpha = match family {
        FamilyRequest::External { alpha, .. } => alpha.rational_upper(),
        _ => expander.alpha_bound.rational_upper(),
    };

    let mut params = AmplifyParams {
        a: a.clone(),
        b: b.clone(),
        r: r.clone(),
        epsilon,
        alpha_target,
        alpha,
        t: 1,
        expander,
    };
    let no = params.no_base();
    let yes = params.yes_base();
    if yes <= no {
        return Err(ProductError::InvalidParams("need a(1-eps) - 2 alpha > b + 2 alpha".into()));
    }
    let base = no / yes;
    let mut acc = base.clone();
    while acc > *r {
        params.t += 1;
        if params.t > MAX_PRODUCT_POWER {
            return Err(ProductError::InvalidParams("no t reaches the ratio".into()));
        }
        acc *= &base;
    }
    params.validate()?;
    Ok(params)
}

fn unreachable(target: &Rational, reason: impl Into<String>) -> ProductError {
    ProductError::FamilyUnreachable {
        target: rational::format_rational(target),
        reason: reason.into(),
    }
}

fn complete_power_for(n_member: usize, target: &Rational) -> u32 {
    let base = rat(1, n_member as i64 - 1);
    let mut acc = base.clone();
    let mut p = 1;
    while acc > *target {
        acc *= &base;
        p += 1;
    }
    p
}

fn choose_member(
    family: &FamilyRequest,
    target: &Rational,
    epsilon: &Rational,
    n: Option<usize>,
) -> Result<ExpanderSpec, ProductError> {
    // Largest admissible member size for a known input size.
    let hi = n.map(|n| {
        let floor = Rational::one() - epsilon;
        rational::floor_to_usize(&(from_usize(n) / floor)).unwrap_or(n)
    });
    match family {
        FamilyRequest::Complete => {
            let candidates: Vec<usize> = match (n, hi) {
                (Some(n), Some(hi)) => (n.max(3)..=hi).collect(),
                _ => {
                    let need = rational::ceil_to_usize(&(Rational::one() / target))
                        .ok_or_else(|| unreachable(target, "target too small"))?;
                    vec![(need + 1).max(3)]
                }
            };
            let mut best: Option<(usize, usize, u32)> = None;
            for m in candidates {
                let p = complete_power_for(m, target);
                let Some(d) = (m - 1).checked_pow(p) else { continue };
                if m.checked_mul(d).is_none_or(|slots| slots > DEFAULT_PORT_CAP) {
                    continue;
                }
                if best.is_none_or(|(bd, bm, _)| (d, m) < (bd, bm)) {
                    best = Some((d, m, p));
                }
            }
            let (_, m, p) = best.ok_or_else(|| {
                unreachable(target, "no complete-graph power fits the padding window and port cap")
            })?;
            Ok(ExpanderSpec::complete(m, p))
        }
        FamilyRequest::GabberGalil => {
            let p = expander::select_power_for_alpha(target)?;
            let k = match n {
                Some(n) => {
                    let mut k = 2usize;
                    while k * k < n {
                        k += 1;
                    }
                    if let Some(hi) = hi {
                        if k * k > hi {
                            return Err(unreachable(target, format!("k^2 = {} leaves the padding window", k * k)));
                        }
                    }
                    k
                }
                None => 2,
            };
            let slots = 8usize.checked_pow(p).and_then(|d| d.checked_mul(k * k));
            if slots.is_none_or(|s| s > DEFAULT_PORT_CAP) {
                return Err(unreachable(target, format!("degree 8^{p} exceeds the port cap")));
            }
            Ok(ExpanderSpec::gabber_galil(k, p))
        }
        FamilyRequest::External { graph, alpha } => {
            if !alpha.le(target) {
                return Err(unreachable(target, "external member's alpha exceeds the target"));
            }
            if let (Some(n), Some(hi)) = (n, hi) {
                if graph.n() < n || graph.n() > hi {
                    return Err(unreachable(target, "external member size leaves the padding window"));
                }
            }
            Ok(ExpanderSpec {
                family: Family::External,
                param: graph.n(),
                power: 1,
                alpha_bound: alpha.clone(),
            })
        }
    }
}

/// Output of the amplifier.
#[derive(Clone, Debug)]
pub struct Amplified {
    pub product: WalkGraph,
    /// Input vertex count before padding.
    pub n: usize,
    /// Vertex count after padding (the expander size).
    pub padded_n: usize,
    pub a_r: Rational,
    pub b_r: Rational,
}

/// Which bound of the amplifier applies to an input, and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub omega_input: usize,
    pub omega_output: usize,
    pub upper_applies: bool,
    pub upper_holds: bool,
    pub lower_applies: bool,
    pub lower_holds: bool,
}

impl BoundCheck {
    pub fn ok(&self) -> bool {
        (!self.upper_applies || self.upper_holds) && (!self.lower_applies || self.lower_holds)
    }
}

impl Amplified {
    pub fn vertex_count(&self) -> usize {
        self.product.graph.n()
    }

    /// Upper case: `ω(G) <= bn => ω(G_r) <= b_r N`.
    /// Lower case: `ω(G) >= an => ω(G_r) >= a_r N`.
    pub fn check_bounds(&self, params: &AmplifyParams, omega_input: usize, omega_output: usize) -> BoundCheck {
        let n = from_usize(self.n);
        let big_n = from_usize(self.vertex_count());
        let w_in = from_usize(omega_input);
        let w_out = from_usize(omega_output);
        let upper_applies = w_in <= &params.b * &n;
        let lower_applies = w_in >= &params.a * &n;
        BoundCheck {
            omega_input,
            omega_output,
            upper_applies,
            upper_holds: w_out <= &self.b_r * &big_n,
            lower_applies,
            lower_holds: w_out >= &self.a_r * &big_n,
        }
    }
}

pub fn amplify_gap(g: &Graph, params: &AmplifyParams) -> Result<Amplified, ProductError> {
    if params.expander.family == Family::External {
        return Err(ProductError::InvalidParams(
            "external members must be passed explicitly to amplify_gap_with".into(),
        ));
    }
    let h = params.expander.build()?;
    amplify_gap_with(g, params, &h, DEFAULT_PRODUCT_CAP)
}

/// Pads `g` with isolated vertices up to `h.n()` and builds `G'_t`.
pub fn amplify_gap_with(
    g: &Graph,
    params: &AmplifyParams,
    h: &RotationGraph,
    cap: usize,
) -> Result<Amplified, ProductError> {
    params.validate()?;
    let n = g.n();
    let padded_n = h.n();
    let floor = Rational::one() - &params.epsilon;
    if padded_n < n || padded_n == 0 || from_usize(n) < &floor * from_usize(padded_n) {
        return Err(ProductError::PaddingRatio { n, padded: padded_n, floor: rational::format_rational(&floor) });
    }
    let padded = g.padded(padded_n - n);
    let product = derandomized_product_with_cap(&padded, h, params.t, cap)?;
    let a_r = params.a_r();
    let b_r = params.b_r();
    debug_assert!(b_r <= &a_r * &params.r);
    Ok(Amplified { product, n, padded_n, a_r, b_r })
}

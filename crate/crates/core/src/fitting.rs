//! Rank-drop strata, determinantal (Fitting) conditions, nilpotent orbit
//! partition arithmetic and moment-map variety checks.
//!
//! The determinantal condition on the presentation of the image module is
//! decided through its dimension reformulation: the stratum where the kernel
//! generators drop to span dimension `m - i` must have codimension at least
//! `i + d`. Strata dimensions come from validated orbit data, never from
//! general ideal-theoretic machinery.

use num_traits::Zero;
use serde::Serialize;

use crate::covariants::{apply_phi, PolyMap};
use crate::error::Error;
use crate::lie::Representation;
use crate::linalg::QMatrix;
use crate::poly::Polynomial;
use crate::polymat::PolyMatrix;
use crate::qnum::{q, qi, Q};
use crate::Result;

// ---------------------------------------------------------------------------
// partitions
// ---------------------------------------------------------------------------

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn first(&self) -> u32 {
        self.parts[0]
    }

    /// Conjugate partition (Young-diagram transpose).
    pub fn dual(&self) -> Partition {
        let s = self.first() as usize;
        let parts = (1..=s)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The regular (one-part) partition label.
    pub fn is_regular(&self) -> bool {
        self.parts.len() == 1
    }

    /// The subregular label `(N-1, 1)`.
    pub fn is_subregular(&self) -> bool {
        self.parts.len() == 2 && self.parts[1] == 1
    }

    pub fn label(&self) -> String {
        format!(
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Centralizer dimension of a nilpotent of the given partition in the
/// trace-zero algebra: `sum(dual parts squared) - 1`.
pub fn centralizer_dim_sl(p: &Partition) -> usize {
    let d = p.dual();
    d.parts.iter().map(|&x| (x as usize) * (x as usize)).sum::<usize>() - 1
}

/// Span dimension of the matrix-power covariants at a nilpotent with the
/// given partition: `floor((first part - 1)/2)`.
pub fn span_dim_nilpotent(p: &Partition) -> usize {
    ((p.first() as usize).saturating_sub(1)) / 2
}

/// Exact value and verdict of a per-partition inequality.
#[derive(Debug, Clone)]
pub struct InequalityOutcome {
    pub partition: String,
    pub lhs: Q,
    pub holds: bool,
}

impl Serialize for InequalityOutcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut out = s.serialize_struct("InequalityOutcome", 3)?;
        out.serialize_field("partition", &self.partition)?;
        out.serialize_field("lhs", &crate::qnum::QJson::from(&self.lhs))?;
        out.serialize_field("holds", &self.holds)?;
        out.end()
    }
}

fn half_sum_of_squares_minus_one(p: &Partition) -> Q {
    let d = p.dual();
    let mut acc = Q::zero();
    for &x in &d.parts {
        let t = qi(x as i64 - 1);
        acc += &t * &t;
    }
    acc * q(1, 2)
}

/// Even-rank case: for a non-regular partition of `2n` the quantity
/// `1/2 sum (dual_i - 1)^2 + floor((s-1)/2) - s/2` with `s` the first part;
/// it is zero on the subregular partition and nonnegative on every other
/// non-regular one.
pub fn inequality_case1(p: &Partition) -> Result<InequalityOutcome> {
    if p.dual().first() < 2 {
        return Err(Error::InvalidPartition(
            "inequality applies to non-regular partitions only".into(),
        ));
    }
    let s = p.first() as i64;
    let lhs = half_sum_of_squares_minus_one(p) + qi((s - 1) / 2) - q(s, 2);
    Ok(InequalityOutcome {
        partition: p.label(),
        holds: lhs >= Q::zero(),
        lhs,
    })
}

/// Odd-rank case: same sum with `-(s+1)/2`; it fails exactly on the
/// subregular partition.
pub fn inequality_case2(p: &Partition) -> Result<InequalityOutcome> {
    if p.dual().first() < 2 {
        return Err(Error::InvalidPartition(
            "inequality applies to non-regular partitions only".into(),
        ));
    }
    let s = p.first() as i64;
    let lhs = half_sum_of_squares_minus_one(p) + qi((s - 1) / 2) - q(s + 1, 2);
    Ok(InequalityOutcome {
        partition: p.label(),
        holds: lhs >= Q::zero(),
        lhs,
    })
}

/// Differential-of-Pfaffian rule for orthogonal nilpotents: the gradient
/// vanishes exactly when the element has at least three Jordan blocks.
pub fn pfaffian_vanishing_rule(p: &Partition) -> bool {
    p.num_parts() >= 3
}

/// Pfaffian of an antisymmetric polynomial matrix by recursive expansion
/// along the first remaining row. Odd sizes give zero.
pub fn pfaffian(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_antisymmetric() {
        return Err(Error::DimensionMismatch(
            "pfaffian requires an antisymmetric matrix".into(),
        ));
    }
    fn rec(m: &PolyMatrix, active: &[usize]) -> Polynomial {
        if active.is_empty() {
            return Polynomial::one(m.nvars);
        }
        let first = active[0];
        let mut acc = Polynomial::zero(m.nvars);
        for (pos, &j) in active.iter().enumerate().skip(1) {
            let a = m.get(first, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&k| k != first && k != j)
                .collect();
            let sub = rec(m, &rest);
            let term = a.mul(&sub).expect("same vars");
            // Sign alternates with the position of j in the active list.
            if pos % 2 == 1 {
                acc = acc.add(&term).expect("same vars");
            } else {
                acc = acc.sub(&term).expect("same vars");
            }
        }
        acc
    }
    if m.rows % 2 == 1 {
        return Ok(Polynomial::zero(m.nvars));
    }
    let active: Vec<usize> = (0..m.rows).collect();
    Ok(rec(m, &active))
}

// ---------------------------------------------------------------------------
// moment map
// ---------------------------------------------------------------------------

/// The moment pairing `mu(v, xi)` in dual-basis coordinates:
/// component `i` is `<rho(e_i) v, xi>`.
pub fn moment_map(rep: &Representation, v: &[Q], xi: &[Q]) -> Result<Vec<Q>> {
    if v.len() != rep.space_dim || xi.len() != rep.space_dim {
        return Err(Error::DimensionMismatch(
            "moment map arguments must lie in V and its dual".into(),
        ));
    }
    (0..rep.algebra.dim)
        .map(|i| {
            let mv = rep.matrices[i].mul_vec(v)?;
            Ok(mv.iter().zip(xi).map(|(a, b)| a * b).sum())
        })
        .collect()
}

/// A representation together with verified kernel generators of `phi`.
#[derive(Debug, Clone)]
pub struct MomentData {
    pub rep: Representation,
    pub kernel_generators: Vec<PolyMap>,
}

impl MomentData {
    /// Validates that every generator is killed by `phi` before accepting it.
    pub fn new(rep: Representation, kernel_generators: Vec<PolyMap>) -> Result<Self> {
        for (i, f) in kernel_generators.iter().enumerate() {
            let image = apply_phi(&rep, f)?;
            if !image.is_zero() {
                return Err(Error::UnvalidatedOrbitData(format!(
                    "kernel generator {i} is not annihilated by the action"
                )));
            }
        }
        Ok(MomentData {
            rep,
            kernel_generators,
        })
    }
}

/// Certifies, as a polynomial identity in `(v, xi)`, that every generator
/// pairs to zero with the moment map: `<F_i(v), mu(v, xi)> = 0`. This is the
/// vanishing of the variety generators on the closure of the moment image.
pub fn kappa_vanishing_check(data: &MomentData) -> Result<()> {
    let rep = &data.rep;
    let s = rep.space_dim;
    let forms = rep.action_linear_forms();
    // mu_j(v, xi) = sum_r L_{j,r}(v) xi_r in 2s variables.
    let mu: Vec<Polynomial> = (0..rep.algebra.dim)
        .map(|j| {
            let mut p = Polynomial::zero(2 * s);
            for r in 0..s {
                if forms[j][r].is_zero() {
                    continue;
                }
                let lifted = forms[j][r].embed(2 * s, 0);
                let xi = Polynomial::var(2 * s, s + r);
                p = p.add(&lifted.mul(&xi)?)?;
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    for (i, f) in data.kernel_generators.iter().enumerate() {
        let mut acc = Polynomial::zero(2 * s);
        for (j, fj) in f.components.iter().enumerate() {
            if fj.is_zero() || mu[j].is_zero() {
                continue;
            }
            acc = acc.add(&fj.embed(2 * s, 0).mul(&mu[j])?)?;
        }
        if !acc.is_zero() {
            return Err(Error::UnvalidatedOrbitData(format!(
                "generator {i} does not vanish on the moment image: residual {acc}"
            )));
        }
    }
    Ok(())
}

/// Dimension of the closure of the moment graph image: the formula
/// `dim V + dim g - m` cross-checked against the exact Jacobian rank of
/// `(v, xi) -> (v, mu(v, xi))` at random rational points. The rank can only
/// drop at special points, so up to three points are tried; a persistent
/// mismatch is an error, never swallowed.
pub fn image_closure_dim(rep: &Representation, rng: &mut impl rand::Rng) -> Result<usize> {
    let s = rep.space_dim;
    let n = rep.algebra.dim;
    let m = crate::covariants::kernel_module_rank(rep);
    let formula = s + n - m;
    for _ in 0..3 {
        let v = crate::qnum::random_point(rng, s);
        let xi = crate::qnum::random_point(rng, s);
        // Jacobian: [[I, 0], [dmu/dv, dmu/dxi]].
        let mut jac = QMatrix::zeros(s + n, 2 * s);
        for r in 0..s {
            jac.set(r, r, Q::from_integer(1.into()));
        }
        for j in 0..n {
            for t in 0..s {
                // d mu_j / d v_t = sum_r rho(e_j)[r][t] xi_r.
                let mut acc = Q::zero();
                for r in 0..s {
                    let c = rep.matrices[j].get(r, t);
                    if !c.is_zero() {
                        acc += c * &xi[r];
                    }
                }
                jac.set(s + j, t, acc);
                // d mu_j / d xi_t = (rho(e_j) v)_t.
                let mut acc = Q::zero();
                for u in 0..s {
                    let c = rep.matrices[j].get(t, u);
                    if !c.is_zero() {
                        acc += c * &v[u];
                    }
                }
                jac.set(s + j, s + t, acc);
            }
        }
        if jac.rank() == formula {
            return Ok(formula);
        }
    }
    Err(Error::UnvalidatedOrbitData(format!(
        "moment image dimension formula {formula} did not match the Jacobian rank at 3 points"
    )))
}

// ---------------------------------------------------------------------------
// strata checks
// ---------------------------------------------------------------------------

/// One orbit of the null-cone with a validated representative.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub label: String,
    /// Representative in the coordinates of the representation space.
    pub representative: Vec<Q>,
    /// Expected stabilizer dimension in the acting algebra, when known.
    pub expected_stabilizer_dim: Option<usize>,
}

/// Per-orbit outcome of the orbit-dimension form of the determinantal check.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitCheck {
    pub label: String,
    pub span_dim: usize,
    pub stabilizer_dim: usize,
    pub regular: bool,
    /// `2m` on regular orbits (equality required), `2m + 1` elsewhere
    /// (lower bound required).
    pub required: usize,
    pub satisfied: bool,
}

/// Aggregated verdict for the rank-drop strata of the null-cone.
#[derive(Debug, Clone, Serialize)]
pub struct StrataReport {
    pub kernel_rank: usize,
    pub per_orbit: Vec<OrbitCheck>,
    /// The codimension inequality on every rank-drop stratum.
    pub clubs_holds: bool,
    /// The height bound on the determinantal ideals of the presentation,
    /// in its dimension form.
    pub f2_satisfied: bool,
    /// Labels of the orbits where the inequality fails.
    pub failures: Vec<String>,
}

/// Evaluates the orbit form of the determinantal condition over a complete
/// list of null-cone orbits: on regular orbits the span of the generators
/// plus the stabilizer dimension must equal `2m`, elsewhere it must reach
/// `2m + 1`. Representatives are validated against their expected stabilizer
/// dimensions before use.
pub fn strata_check(
    rep: &Representation,
    generators: &[PolyMap],
    orbits: &[OrbitRecord],
    m: usize,
) -> Result<StrataReport> {
    if generators.len() != m {
        return Err(Error::MissingData(format!(
            "expected {m} kernel generators, got {}",
            generators.len()
        )));
    }
    let mut per_orbit = Vec::new();
    let mut failures = Vec::new();
    for orbit in orbits {
        if orbit.representative.len() != rep.space_dim {
            return Err(Error::UnvalidatedOrbitData(format!(
                "orbit '{}' representative has wrong length",
                orbit.label
            )));
        }
        let stab = rep.stabilizer(&orbit.representative)?;
        if let Some(expected) = orbit.expected_stabilizer_dim {
            if stab.dim() != expected {
                return Err(Error::UnvalidatedOrbitData(format!(
                    "orbit '{}' claims stabilizer dimension {expected}, computed {}",
                    orbit.label,
                    stab.dim()
                )));
            }
        }
        let values: Vec<Vec<Q>> = generators
            .iter()
            .map(|f| f.evaluate(&orbit.representative))
            .collect::<Result<_>>()?;
        let span_dim = QMatrix::from_rows(values).rank();
        let regular = stab.dim() == m;
        let (required, satisfied) = if regular {
            (2 * m, span_dim + stab.dim() == 2 * m)
        } else {
            (2 * m + 1, span_dim + stab.dim() >= 2 * m + 1)
        };
        if !satisfied {
            failures.push(orbit.label.clone());
        }
        per_orbit.push(OrbitCheck {
            label: orbit.label.clone(),
            span_dim,
            stabilizer_dim: stab.dim(),
            regular,
            required,
            satisfied,
        });
    }
    let clubs_holds = failures.is_empty();
    Ok(StrataReport {
        kernel_rank: m,
        per_orbit,
        clubs_holds,
        f2_satisfied: clubs_holds,
        failures,
    })
}

/// A rank-drop stratum of the whole space, described directly.
#[derive(Debug, Clone)]
pub struct DirectStratum {
    pub label: String,
    pub representative: Vec<Q>,
    /// Rank drop: the span of the generators on this stratum is `m - level`.
    pub level: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectStratumCheck {
    pub label: String,
    pub level: usize,
    pub dim: usize,
    pub max_allowed_dim: usize,
    pub span_at_representative: usize,
    pub satisfied: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectStrataReport {
    pub kernel_rank: usize,
    pub degree: usize,
    pub strata: Vec<DirectStratumCheck>,
    pub f_d_satisfied: bool,
}

/// The dimension form of the determinantal condition on the whole space:
/// each stratum where the generator span drops by `i` must satisfy
/// `dim <= dim V - i - d`. Representatives are validated by recomputing the
/// span exactly.
pub fn strata_check_direct(
    generators: &[PolyMap],
    strata: &[DirectStratum],
    space_dim: usize,
    m: usize,
    d: usize,
) -> Result<DirectStrataReport> {
    let mut out = Vec::new();
    let mut all = true;
    for s in strata {
        if s.level == 0 || s.level > m {
            return Err(Error::UnvalidatedOrbitData(format!(
                "stratum '{}' has level {} outside 1..={m}",
                s.label, s.level
            )));
        }
        let values: Vec<Vec<Q>> = generators
            .iter()
            .map(|f| f.evaluate(&s.representative))
            .collect::<Result<_>>()?;
        let span = QMatrix::from_rows(values).rank();
        if span != m - s.level {
            return Err(Error::UnvalidatedOrbitData(format!(
                "stratum '{}' claims span {} but the representative gives {span}",
                s.label,
                m - s.level
            )));
        }
        let max_allowed_dim = space_dim.saturating_sub(s.level + d);
        let satisfied = s.dim <= max_allowed_dim;
        all &= satisfied;
        out.push(DirectStratumCheck {
            label: s.label.clone(),
            level: s.level,
            dim: s.dim,
            max_allowed_dim,
            span_at_representative: span,
            satisfied,
        });
    }
    Ok(DirectStrataReport {
        kernel_rank: m,
        degree: d,
        strata: out,
        f_d_satisfied: all,
    })
}

/// Per-stratum fiber-dimension bound over the null-cone: for a rank drop of
/// `i >= 1`, the preimage of the stratum in the incidence variety has
/// dimension `orbit_dim + dim g - span`, which must stay below
/// `dim N - 1 + dim g - m`. Equivalent to the orbit-codimension inequality,
/// evaluated independently from the same validated data.
#[derive(Debug, Clone, Serialize)]
pub struct FiberCheck {
    pub label: String,
    pub rank_drop: usize,
    pub fiber_dim: usize,
    pub max_allowed: usize,
    pub satisfied: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub nullcone_dim: usize,
    pub checks: Vec<FiberCheck>,
    pub satisfied: bool,
}

pub fn fiber_dimension_check(
    rep: &Representation,
    generators: &[PolyMap],
    orbits: &[OrbitRecord],
    m: usize,
    nullcone_dim: usize,
) -> Result<FiberReport> {
    let dim_g = rep.algebra.dim;
    let mut checks = Vec::new();
    let mut all = true;
    for orbit in orbits {
        let stab = rep.stabilizer(&orbit.representative)?;
        let orbit_dim = dim_g - stab.dim();
        let values: Vec<Vec<Q>> = generators
            .iter()
            .map(|f| f.evaluate(&orbit.representative))
            .collect::<Result<_>>()?;
        let span = QMatrix::from_rows(values).rank();
        if span + 1 > m {
            // Rank drop zero: the open stratum carries the generic bound.
            continue;
        }
        let rank_drop = m - span;
        let fiber_dim = orbit_dim + dim_g - span;
        let max_allowed = nullcone_dim - 1 + dim_g - m;
        let satisfied = fiber_dim <= max_allowed;
        all &= satisfied;
        checks.push(FiberCheck {
            label: orbit.label.clone(),
            rank_drop,
            fiber_dim,
            max_allowed,
            satisfied,
        });
    }
    Ok(FiberReport {
        nullcone_dim,
        checks,
        satisfied: all,
    })
}

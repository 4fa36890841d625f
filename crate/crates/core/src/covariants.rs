//! Module homomorphisms on spaces of polynomial morphisms.
//!
//! For a representation of `g` on `V` there are three module homomorphisms
//! between spaces of polynomial maps, all induced by the action:
//!
//! - `phi : Mor(V, g) -> Mor(V, V)`, `phi(F)(v) = rho(F(v)) v`,
//! - `psi : Mor(V, V*) -> Mor(V, g*)`, `<psi(F)(v), x> = <rho(x) v, F(v)>`,
//! - `tau : Mor(g, V) -> Mor(g, V)`, `tau(F)(x) = rho(x) F(x)`.
//!
//! All three raise homogeneous degree by exactly one, so kernels and
//! preimages are computed degree by degree through exact linear systems.
//! The decomposition solver inverts `phi` on its image and returns an exact
//! infeasibility certificate when a vector field is not of the form
//! `rho(F(v)) v`.
//!
//! The kernel of `tau` is read with the annihilator convention
//! `{F : rho(x) F(x) = 0 for all x}`, the one consistent with
//! `tau(F)(x) = rho(x) F(x)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::Representation;
use crate::linalg::{QMatrix, RrefFactors, SolveOutcome};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, PolynomialJson};
use crate::polymat::PolyMatrix;
use crate::qnum::{Q, QJson};
use crate::Result;

/// A polynomial map between coordinate spaces: one polynomial per target
/// coordinate, all in the source variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<Polynomial>) -> Result<Self> {
        for c in &components {
            if c.nvars() != source_dim {
                return Err(Error::DimensionMismatch(
                    "component variable count differs from source dimension".into(),
                ));
            }
        }
        Ok(PolyMap {
            source_dim,
            target_dim: components.len(),
            components,
        })
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        PolyMap {
            source_dim,
            target_dim,
            components: vec![Polynomial::zero(source_dim); target_dim],
        }
    }

    /// The identity map of a space, also the Euler vector field.
    pub fn identity(dim: usize) -> Self {
        PolyMap {
            source_dim: dim,
            target_dim: dim,
            components: (0..dim).map(|i| Polynomial::var(dim, i)).collect(),
        }
    }

    /// Constant map with the given target value.
    pub fn constant(source_dim: usize, value: &[Q]) -> Self {
        PolyMap {
            source_dim,
            target_dim: value.len(),
            components: value
                .iter()
                .map(|c| Polynomial::constant(source_dim, c.clone()))
                .collect(),
        }
    }

    /// The differential of a scalar polynomial as a map into the dual space.
    pub fn gradient(f: &Polynomial) -> Self {
        let n = f.nvars();
        PolyMap {
            source_dim: n,
            target_dim: n,
            components: (0..n).map(|i| f.partial_derivative(i)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &PolyMap) -> Result<PolyMap> {
        if self.source_dim != other.source_dim || self.target_dim != other.target_dim {
            return Err(Error::DimensionMismatch("polymap addition".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        PolyMap::new(self.source_dim, components)
    }

    pub fn neg(&self) -> PolyMap {
        PolyMap {
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            components: self.components.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> PolyMap {
        PolyMap {
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Module action of the coordinate ring: multiply every component.
    pub fn mul_poly(&self, p: &Polynomial) -> Result<PolyMap> {
        let components = self
            .components
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<_>>()?;
        PolyMap::new(self.source_dim, components)
    }

    pub fn evaluate(&self, point: &[Q]) -> Result<Vec<Q>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// Largest total degree over the components (zero map has degree 0).
    pub fn degree(&self) -> usize {
        self.components
            .iter()
            .filter_map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.components
            .iter()
            .all(|c| c.is_homogeneous() && (c.is_zero() || c.total_degree() == Some(degree)))
    }

    /// Splits into homogeneous parts, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, PolyMap> {
        let mut out: BTreeMap<usize, PolyMap> = BTreeMap::new();
        for (idx, c) in self.components.iter().enumerate() {
            for (d, part) in c.homogeneous_components() {
                let entry = out
                    .entry(d)
                    .or_insert_with(|| PolyMap::zero(self.source_dim, self.target_dim));
                entry.components[idx] = part;
            }
        }
        out
    }

    /// Jacobian matrix of partial derivatives, `target x source`.
    pub fn jacobian(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.target_dim, self.source_dim, self.source_dim, |r, s| {
            self.components[r].partial_derivative(s)
        })
    }

    /// Substitutes a linear change of source coordinates `v = A w`.
    pub fn precompose_linear(&self, a: &QMatrix) -> Result<PolyMap> {
        if a.rows != self.source_dim {
            return Err(Error::DimensionMismatch("precompose dimensions".into()));
        }
        let subst: Vec<Polynomial> = (0..self.source_dim)
            .map(|i| {
                let mut p = Polynomial::zero(a.cols);
                for j in 0..a.cols {
                    let c = a.get(i, j);
                    if !c.is_zero() {
                        p = p.add(&Polynomial::var(a.cols, j).scale(c)).expect("vars");
                    }
                }
                p
            })
            .collect();
        let components = self
            .components
            .iter()
            .map(|c| c.compose_linear(&subst))
            .collect::<Result<_>>()?;
        PolyMap::new(a.cols, components)
    }

    /// Applies a linear map to the target: `w = B F(v)`.
    pub fn postcompose_linear(&self, b: &QMatrix) -> Result<PolyMap> {
        if b.cols != self.target_dim {
            return Err(Error::DimensionMismatch("postcompose dimensions".into()));
        }
        let components = (0..b.rows)
            .map(|r| {
                let mut p = Polynomial::zero(self.source_dim);
                for s in 0..b.cols {
                    let c = b.get(r, s);
                    if !c.is_zero() {
                        p = p.add(&self.components[s].scale(c))?;
                    }
                }
                Ok(p)
            })
            .collect::<Result<_>>()?;
        PolyMap::new(self.source_dim, components)
    }
}

/// JSON form of a polynomial map.
#[derive(Serialize, Deserialize)]
pub struct PolyMapJson {
    pub source_dim: usize,
    pub target_dim: usize,
    pub components: Vec<PolynomialJson>,
}

impl From<&PolyMap> for PolyMapJson {
    fn from(m: &PolyMap) -> Self {
        PolyMapJson {
            source_dim: m.source_dim,
            target_dim: m.target_dim,
            components: m.components.iter().map(PolynomialJson::from).collect(),
        }
    }
}

impl PolyMapJson {
    pub fn to_polymap(&self) -> Result<PolyMap> {
        let components = self
            .components
            .iter()
            .map(|c| c.to_polynomial())
            .collect::<Result<Vec<_>>>()?;
        if components.len() != self.target_dim {
            return Err(Error::Schema {
                path: "<polymap>".into(),
                reason: "component count differs from target_dim".into(),
            });
        }
        PolyMap::new(self.source_dim, components)
    }
}

/// Which of the three module homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Phi,
    Psi,
    Tau,
}

/// `phi(F)(v) = rho(F(v)) v` for `F : V -> g`.
pub fn apply_phi(rep: &Representation, f: &PolyMap) -> Result<PolyMap> {
    if f.source_dim != rep.space_dim || f.target_dim != rep.algebra.dim {
        return Err(Error::DimensionMismatch(format!(
            "phi input must map V (dim {}) to g (dim {})",
            rep.space_dim, rep.algebra.dim
        )));
    }
    let forms = rep.action_linear_forms();
    let components = (0..rep.space_dim)
        .map(|r| {
            let mut p = Polynomial::zero(rep.space_dim);
            for i in 0..rep.algebra.dim {
                if forms[i][r].is_zero() || f.components[i].is_zero() {
                    continue;
                }
                p = p.add(&f.components[i].mul(&forms[i][r])?)?;
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    PolyMap::new(rep.space_dim, components)
}

/// `<psi(F)(v), x> = <rho(x) v, F(v)>` for `F : V -> V*`, landing in `g*`.
pub fn apply_psi(rep: &Representation, f: &PolyMap) -> Result<PolyMap> {
    if f.source_dim != rep.space_dim || f.target_dim != rep.space_dim {
        return Err(Error::DimensionMismatch(
            "psi input must map V to its dual".into(),
        ));
    }
    let forms = rep.action_linear_forms();
    let components = (0..rep.algebra.dim)
        .map(|i| {
            let mut p = Polynomial::zero(rep.space_dim);
            for r in 0..rep.space_dim {
                if forms[i][r].is_zero() || f.components[r].is_zero() {
                    continue;
                }
                p = p.add(&forms[i][r].mul(&f.components[r])?)?;
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    PolyMap::new(rep.space_dim, components)
}

/// `tau(F)(x) = rho(x) F(x)` for `F : g -> V`.
pub fn apply_tau(rep: &Representation, f: &PolyMap) -> Result<PolyMap> {
    if f.source_dim != rep.algebra.dim || f.target_dim != rep.space_dim {
        return Err(Error::DimensionMismatch("tau input must map g to V".into()));
    }
    let n = rep.algebra.dim;
    let components = (0..rep.space_dim)
        .map(|r| {
            let mut p = Polynomial::zero(n);
            for i in 0..n {
                let xi = Polynomial::var(n, i);
                for s in 0..rep.space_dim {
                    let c = rep.matrices[i].get(r, s);
                    if c.is_zero() || f.components[s].is_zero() {
                        continue;
                    }
                    p = p.add(&xi.mul(&f.components[s])?.scale(c))?;
                }
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    PolyMap::new(n, components)
}

/// The adjoint vector field of `x`: the linear field `v -> rho(x) v`.
pub fn adjoint_field(rep: &Representation, x: &[Q]) -> Result<PolyMap> {
    let constant = PolyMap::constant(rep.space_dim, x);
    apply_phi(rep, &constant)
}

/// The Euler vector field `v -> v`.
pub fn euler_field(dim: usize) -> PolyMap {
    PolyMap::identity(dim)
}

/// Action of a vector field on a polynomial: `X{f} = sum_i X_i df/dv_i`.
pub fn vf_apply(x: &PolyMap, f: &Polynomial) -> Result<Polynomial> {
    if x.source_dim != f.nvars() || x.target_dim != f.nvars() {
        return Err(Error::DimensionMismatch(
            "vector field and polynomial live on different spaces".into(),
        ));
    }
    let mut out = Polynomial::zero(f.nvars());
    for (i, xi) in x.components.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let df = f.partial_derivative(i);
        if df.is_zero() {
            continue;
        }
        out = out.add(&xi.mul(&df)?)?;
    }
    Ok(out)
}

/// Whether the field kills every listed polynomial, exactly.
pub fn annihilates_invariants(x: &PolyMap, invariants: &[Polynomial]) -> Result<bool> {
    for f in invariants {
        if !vf_apply(x, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Source and target data of the degree-`d` coefficient system for one of
/// the three homomorphisms.
struct SystemShape {
    source_vars: usize,
    unknown_components: usize,
    output_components: usize,
}

fn system_shape(kind: MapKind, rep: &Representation) -> SystemShape {
    match kind {
        MapKind::Phi => SystemShape {
            source_vars: rep.space_dim,
            unknown_components: rep.algebra.dim,
            output_components: rep.space_dim,
        },
        MapKind::Psi => SystemShape {
            source_vars: rep.space_dim,
            unknown_components: rep.space_dim,
            output_components: rep.algebra.dim,
        },
        MapKind::Tau => SystemShape {
            source_vars: rep.algebra.dim,
            unknown_components: rep.space_dim,
            output_components: rep.space_dim,
        },
    }
}

/// Image of the unit map `e_t . x^alpha` under the chosen homomorphism.
fn unit_image(
    kind: MapKind,
    rep: &Representation,
    forms: &[Vec<Polynomial>],
    t: usize,
    alpha: &Monomial,
) -> Vec<Polynomial> {
    let shape = system_shape(kind, rep);
    let n = shape.source_vars;
    let one = Q::from_integer(1.into());
    match kind {
        MapKind::Phi => (0..shape.output_components)
            .map(|r| forms[t][r].mul_monomial(alpha, &one))
            .collect(),
        MapKind::Psi => (0..shape.output_components)
            .map(|i| forms[i][t].mul_monomial(alpha, &one))
            .collect(),
        MapKind::Tau => (0..shape.output_components)
            .map(|r| {
                let mut p = Polynomial::zero(n);
                for i in 0..rep.algebra.dim {
                    let c = rep.matrices[i].get(r, t);
                    if c.is_zero() {
                        continue;
                    }
                    let mut exps = alpha.0.clone();
                    exps[i] += 1;
                    p = p
                        .add(&Polynomial::monomial(n, Monomial(exps), c.clone()))
                        .expect("vars");
                }
                p
            })
            .collect(),
    }
}

/// The exact coefficient matrix of the homomorphism restricted to
/// homogeneous inputs of degree `d` (outputs have degree `d + 1`). Columns
/// are indexed by (component, monomial) pairs in canonical graded-lex order.
pub fn coefficient_system(kind: MapKind, rep: &Representation, d: usize) -> QMatrix {
    let shape = system_shape(kind, rep);
    let in_monomials = monomials_of_degree(shape.source_vars, d);
    let out_monomials = monomials_of_degree(shape.source_vars, d + 1);
    let out_index: BTreeMap<&Monomial, usize> = out_monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let rows = shape.output_components * out_monomials.len();
    let cols = shape.unknown_components * in_monomials.len();
    let forms = rep.action_linear_forms();
    let mut a = QMatrix::zeros(rows, cols);
    for t in 0..shape.unknown_components {
        for (mi, alpha) in in_monomials.iter().enumerate() {
            let col = t * in_monomials.len() + mi;
            let image = unit_image(kind, rep, &forms, t, alpha);
            for (r, poly) in image.iter().enumerate() {
                for (mono, c) in poly.terms() {
                    let row = r * out_monomials.len() + out_index[mono];
                    a.set(row, col, c.clone());
                }
            }
        }
    }
    a
}

/// Coefficient vector of a homogeneous polymap of the given degree, in the
/// row layout of [`coefficient_system`] outputs.
pub fn coefficient_vector(map: &PolyMap, degree: usize) -> Result<Vec<Q>> {
    let monomials = monomials_of_degree(map.source_dim, degree);
    let index: BTreeMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = vec![Q::zero(); map.target_dim * monomials.len()];
    for (r, c) in map.components.iter().enumerate() {
        for (mono, coeff) in c.terms() {
            let Some(&mi) = index.get(mono) else {
                return Err(Error::DimensionMismatch(
                    "polymap is not homogeneous of the stated degree".into(),
                ));
            };
            out[r * monomials.len() + mi] = coeff.clone();
        }
    }
    Ok(out)
}

/// Reassembles a coefficient vector into a homogeneous polymap.
fn polymap_from_coefficients(
    source_dim: usize,
    target_dim: usize,
    degree: usize,
    coeffs: &[Q],
) -> PolyMap {
    let monomials = monomials_of_degree(source_dim, degree);
    let components = (0..target_dim)
        .map(|t| {
            Polynomial::from_terms(
                source_dim,
                monomials
                    .iter()
                    .enumerate()
                    .map(|(mi, m)| (m.clone(), coeffs[t * monomials.len() + mi].clone())),
            )
        })
        .collect();
    PolyMap::new(source_dim, components).expect("constructed components match")
}

/// Exact basis of the homogeneous degree-`d` kernel of the chosen
/// homomorphism, via the nullspace of the coefficient system.
pub fn graded_kernel(kind: MapKind, rep: &Representation, d: usize) -> Vec<PolyMap> {
    let shape = system_shape(kind, rep);
    let a = coefficient_system(kind, rep, d);
    a.nullspace()
        .into_iter()
        .map(|v| polymap_from_coefficients(shape.source_vars, shape.unknown_components, d, &v))
        .collect()
}

/// Rank of the kernel module of `phi`: the minimal stabilizer dimension,
/// `dim g` minus the generic rank of `v -> rho(.) v`.
pub fn kernel_module_rank(rep: &Representation) -> usize {
    rep.generic_stabilizer_dim()
}

/// Outcome of a decomposition attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionStatus {
    Found,
    Infeasible,
    /// Some homogeneous part exceeded the degree cap, so nothing was proved
    /// about it: "not found up to the searched degree".
    DegreeCapped,
}

/// Exact infeasibility certificate: a left-kernel row of the coefficient
/// system at one output degree that pairs nonzero with the target vector.
#[derive(Debug, Clone)]
pub struct InfeasibilityCertificate {
    /// Output degree of the homogeneous part that cannot be hit.
    pub output_degree: usize,
    pub row: Vec<Q>,
}

/// Result of a decomposition: a witness `F` with `phi(F) = X`, or an exact
/// certificate that none exists, or a degree-cap notice.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub status: DecompositionStatus,
    pub witness: Option<PolyMap>,
    pub certificate: Option<InfeasibilityCertificate>,
    pub degree_searched: usize,
}

impl DecompositionResult {
    pub fn found(&self) -> bool {
        self.status == DecompositionStatus::Found
    }
}

/// Serialized decomposition result with exact rationals.
#[derive(Serialize)]
pub struct DecompositionResultJson {
    pub status: String,
    pub degree_searched: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PolyMapJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<QJson>>,
}

impl From<&DecompositionResult> for DecompositionResultJson {
    fn from(r: &DecompositionResult) -> Self {
        DecompositionResultJson {
            status: match r.status {
                DecompositionStatus::Found => "found".into(),
                DecompositionStatus::Infeasible => "infeasible".into(),
                DecompositionStatus::DegreeCapped => "not-found-up-to-degree".into(),
            },
            degree_searched: r.degree_searched,
            witness: r.witness.as_ref().map(PolyMapJson::from),
            certificate_degree: r.certificate.as_ref().map(|c| c.output_degree),
            certificate: r
                .certificate
                .as_ref()
                .map(|c| c.row.iter().map(QJson::from).collect()),
        }
    }
}

/// Solver for `phi(F) = X` with a per-degree factorization cache, so a batch
/// of decompositions against one representation factors each coefficient
/// system only once.
pub struct DixmierSolver {
    rep: Representation,
    cache: BTreeMap<usize, RrefFactors>,
}

impl DixmierSolver {
    pub fn new(rep: Representation) -> Self {
        DixmierSolver {
            rep,
            cache: BTreeMap::new(),
        }
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    fn factors(&mut self, input_degree: usize) -> &RrefFactors {
        let rep = &self.rep;
        self.cache.entry(input_degree).or_insert_with(|| {
            RrefFactors::factor(&coefficient_system(MapKind::Phi, rep, input_degree))
        })
    }

    /// Searches for `F` with `phi(F) = X`, homogeneous part by homogeneous
    /// part. Parts with input degree up to `max_degree` are solved exactly;
    /// a part of higher degree trips the degree cap. Since `phi` is graded,
    /// per-degree infeasibility is conclusive.
    pub fn decompose(&mut self, x: &PolyMap, max_degree: usize) -> Result<DecompositionResult> {
        if x.source_dim != self.rep.space_dim || x.target_dim != self.rep.space_dim {
            return Err(Error::DimensionMismatch(
                "decomposition input must be a vector field on V".into(),
            ));
        }
        let mut witness = PolyMap::zero(self.rep.space_dim, self.rep.algebra.dim);
        let mut degree_searched = 0usize;
        for (out_degree, part) in x.homogeneous_components() {
            if part.is_zero() {
                continue;
            }
            if out_degree == 0 {
                // phi raises degree by one, so a constant part is never hit;
                // the certificate picks any nonzero coefficient.
                let b = coefficient_vector(&part, 0)?;
                let pos = b.iter().position(|c| !c.is_zero()).expect("nonzero part");
                let mut row = vec![Q::zero(); b.len()];
                row[pos] = Q::from_integer(1.into());
                return Ok(DecompositionResult {
                    status: DecompositionStatus::Infeasible,
                    witness: None,
                    certificate: Some(InfeasibilityCertificate {
                        output_degree: 0,
                        row,
                    }),
                    degree_searched,
                });
            }
            let input_degree = out_degree - 1;
            if input_degree > max_degree {
                return Ok(DecompositionResult {
                    status: DecompositionStatus::DegreeCapped,
                    witness: None,
                    certificate: None,
                    degree_searched,
                });
            }
            degree_searched = degree_searched.max(input_degree);
            let b = coefficient_vector(&part, out_degree)?;
            match self.factors(input_degree).solve(&b) {
                SolveOutcome::Solution(u) => {
                    let f = polymap_from_coefficients(
                        self.rep.space_dim,
                        self.rep.algebra.dim,
                        input_degree,
                        &u,
                    );
                    witness = witness.add(&f)?;
                }
                SolveOutcome::Infeasible { certificate } => {
                    return Ok(DecompositionResult {
                        status: DecompositionStatus::Infeasible,
                        witness: None,
                        certificate: Some(InfeasibilityCertificate {
                            output_degree: out_degree,
                            row: certificate,
                        }),
                        degree_searched,
                    });
                }
            }
        }
        Ok(DecompositionResult {
            status: DecompositionStatus::Found,
            witness: Some(witness),
            certificate: None,
            degree_searched,
        })
    }
}

/// One-shot decomposition. For batches against the same representation use
/// [`DixmierSolver`], which caches the per-degree factorizations.
pub fn dixmier_decompose(
    rep: &Representation,
    x: &PolyMap,
    max_degree: usize,
) -> Result<DecompositionResult> {
    DixmierSolver::new(rep.clone()).decompose(x, max_degree)
}

/// A seeded random polymap with integer coefficients in [-10, 10] and terms
/// up to the prescribed degree.
pub fn random_polymap(
    rng: &mut impl rand::Rng,
    source_dim: usize,
    target_dim: usize,
    max_degree: usize,
) -> PolyMap {
    let components = (0..target_dim)
        .map(|_| {
            let mut p = Polynomial::zero(source_dim);
            for d in 0..=max_degree {
                for m in monomials_of_degree(source_dim, d) {
                    if !rng.gen_bool(0.5) {
                        continue;
                    }
                    let c = rng.gen_range(-10i64..=10);
                    if c != 0 {
                        p = p
                            .add(&Polynomial::monomial(source_dim, m, Q::from_integer(c.into())))
                            .expect("vars");
                    }
                }
            }
            p
        })
        .collect();
    PolyMap::new(source_dim, components).expect("constructed components match")
}

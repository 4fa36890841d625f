//! Lie algebras by structure constants, their representations and symmetric
//! pairs, with exact stabilizer and index computations.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::QMatrix;
use crate::poly::Polynomial;
use crate::polymat::PolyMatrix;
use crate::qnum::Q;
use crate::Result;

/// A finite-dimensional Lie algebra over the rationals, presented by its
/// structure constants `[e_i, e_j] = sum_k c_ijk e_k`.
///
/// Antisymmetry and the Jacobi identity are verified at construction, so
/// every value of this type is a genuine Lie algebra.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    /// Brackets for i < j only; the rest follows by antisymmetry.
    table: BTreeMap<(usize, usize), Vec<(usize, Q)>>,
}

impl LieAlgebra {
    /// Builds an algebra from raw structure constants. Entries may be given
    /// in either orientation; if both `(i,j,k)` and `(j,i,k)` appear they
    /// must be antisymmetric, and the Jacobi identity is checked on all
    /// basis triples.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Q)>,
    ) -> Result<Self> {
        let mut full: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidStructureConstants(format!(
                    "index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if c.is_zero() {
                continue;
            }
            *full.entry((i, j, k)).or_insert_with(Q::zero) += c;
        }
        full.retain(|_, c| !c.is_zero());
        for ((i, j, k), c) in &full {
            if i == j {
                return Err(Error::InvalidStructureConstants(format!(
                    "nonzero bracket [e_{i}, e_{i}] component {k}"
                )));
            }
            if let Some(opp) = full.get(&(*j, *i, *k)) {
                if &(-c.clone()) != opp {
                    return Err(Error::InvalidStructureConstants(format!(
                        "antisymmetry fails at ({i},{j},{k})"
                    )));
                }
            }
        }
        let mut table: BTreeMap<(usize, usize), Vec<(usize, Q)>> = BTreeMap::new();
        for ((i, j, k), c) in full {
            let (a, b, coeff) = if i < j { (i, j, c) } else { (j, i, -c) };
            let row = table.entry((a, b)).or_default();
            match row.iter_mut().find(|(idx, _)| *idx == k) {
                Some((_, existing)) => {
                    // Present from both orientations; values already checked.
                    *existing = coeff;
                }
                None => row.push((k, coeff)),
            }
        }
        for row in table.values_mut() {
            row.sort_by_key(|(k, _)| *k);
        }
        let g = LieAlgebra {
            name: name.into(),
            dim,
            table,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// All stored structure constants, both orientations.
    pub fn structure_entries(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for (&(i, j), row) in &self.table {
            for (k, c) in row {
                out.push((i, j, *k, c.clone()));
                out.push((j, i, *k, -c.clone()));
            }
        }
        out
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Q {
        if i == j {
            return Q::zero();
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        self.table
            .get(&(a, b))
            .and_then(|row| row.iter().find(|(idx, _)| *idx == k))
            .map(|(_, c)| if sign > 0 { c.clone() } else { -c.clone() })
            .unwrap_or_else(Q::zero)
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Vec<Q>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket on vectors of length {}, {} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Q::zero(); self.dim];
        for (&(i, j), row) in &self.table {
            let a = &x[i] * &y[j] - &x[j] * &y[i];
            if a.is_zero() {
                continue;
            }
            for (k, c) in row {
                out[*k] += &a * c;
            }
        }
        Ok(out)
    }

    /// Bracket of basis element `i` with basis element `j` as a sparse list.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        if i == j {
            return Vec::new();
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.table.get(&(a, b)) {
            None => Vec::new(),
            Some(row) => row
                .iter()
                .map(|(k, c)| (*k, if flip { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// The matrix of `ad(e_i)`.
    pub fn ad_matrix(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(k, j, c);
            }
        }
        m
    }

    fn check_jacobi(&self) -> Result<()> {
        let mut basis: Vec<Vec<Q>> = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut v = vec![Q::zero(); self.dim];
            v[i] = Q::from_integer(1.into());
            basis.push(v);
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.bracket(&basis[i], &basis[j])?;
                for k in (j + 1)..self.dim {
                    let t1 = self.bracket(&bij, &basis[k])?;
                    let bjk = self.bracket(&basis[j], &basis[k])?;
                    let t2 = self.bracket(&bjk, &basis[i])?;
                    let bki = self.bracket(&basis[k], &basis[i])?;
                    let t3 = self.bracket(&bki, &basis[j])?;
                    for idx in 0..self.dim {
                        let s = &t1[idx] + &t2[idx] + &t3[idx];
                        if !s.is_zero() {
                            return Err(Error::InvalidStructureConstants(format!(
                                "Jacobi identity fails on triple ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The antisymmetric matrix `P(xi)` with entries
    /// `P_ij = sum_k c_ijk xi_k`, over the coordinate functions of the dual
    /// space.
    pub fn coadjoint_pairing_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.dim, self.dim, self.dim, |i, j| {
            let mut p = Polynomial::zero(self.dim);
            for (k, c) in self.bracket_basis(i, j) {
                p = p
                    .add(&Polynomial::var(self.dim, k).scale(&c))
                    .expect("same vars");
            }
            p
        })
    }

    /// The index: minimal stabilizer dimension in the coadjoint
    /// representation, computed as `dim - rank P(xi)` over the rational
    /// function field. Exact, never sampled.
    pub fn index(&self) -> usize {
        self.dim - self.coadjoint_pairing_matrix().symbolic_rank()
    }

    /// The semidirect product `g = q ltimes q` with the second copy an
    /// abelian ideal:
    /// `[(x1,y1),(x2,y2)] = ([x1,x2], [x1,y2] + [y1,x2])`.
    pub fn semidirect_double(&self) -> LieAlgebra {
        let n = self.dim;
        let mut entries = Vec::new();
        for (&(i, j), row) in &self.table {
            for (k, c) in row {
                // [a_i, a_j] = sum c a_k ; [a_i, b_j] = sum c b_k.
                entries.push((i, j, *k, c.clone()));
                entries.push((i, n + j, n + k, c.clone()));
                entries.push((n + i, j, n + k, c.clone()));
            }
        }
        LieAlgebra::new(format!("{}-ltimes-{}", self.name, self.name), 2 * n, entries)
            .expect("double of a Lie algebra is a Lie algebra")
    }

    /// Direct sum of two Lie algebras.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim;
        let mut entries = Vec::new();
        for (i, j, k, c) in self.structure_entries() {
            entries.push((i, j, k, c));
        }
        for (i, j, k, c) in other.structure_entries() {
            entries.push((n + i, n + j, n + k, c));
        }
        LieAlgebra::new(
            format!("{}+{}", self.name, other.name),
            n + other.dim,
            entries,
        )
        .expect("direct sum of Lie algebras is a Lie algebra")
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[i] = Q::from_integer(1.into());
        v
    }
}

/// A representation: matrices `rho(e_i)` acting on a `space_dim`-dimensional
/// space, satisfying `rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub algebra: Arc<LieAlgebra>,
    pub space_dim: usize,
    pub matrices: Vec<QMatrix>,
}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim {
            return Err(Error::InvalidRepresentation(format!(
                "{} action matrices for dimension {}",
                matrices.len(),
                algebra.dim
            )));
        }
        let space_dim = matrices.first().map(|m| m.rows).unwrap_or(0);
        for m in &matrices {
            if m.rows != space_dim || m.cols != space_dim {
                return Err(Error::InvalidRepresentation(
                    "action matrices must be square of equal size".into(),
                ));
            }
        }
        let rep = Representation {
            algebra,
            space_dim,
            matrices,
        };
        rep.check_homomorphism()?;
        Ok(rep)
    }

    /// Re-checks `rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)` on all basis
    /// pairs; used by tests and by validation of user-supplied matrices.
    pub fn validate_homomorphism_law(&self) -> Result<()> {
        self.check_homomorphism()
    }

    fn check_homomorphism(&self) -> Result<()> {
        let g = &self.algebra;
        for i in 0..g.dim {
            for j in (i + 1)..g.dim {
                let mut lhs = QMatrix::zeros(self.space_dim, self.space_dim);
                for (k, c) in g.bracket_basis(i, j) {
                    for r in 0..self.space_dim {
                        for s in 0..self.space_dim {
                            let v = lhs.get(r, s).clone() + self.matrices[k].get(r, s) * &c;
                            lhs.set(r, s, v);
                        }
                    }
                }
                let ab = self.matrices[i].mul(&self.matrices[j])?;
                let ba = self.matrices[j].mul(&self.matrices[i])?;
                for r in 0..self.space_dim {
                    for s in 0..self.space_dim {
                        let rhs = ab.get(r, s) - ba.get(r, s);
                        if *lhs.get(r, s) != rhs {
                            return Err(Error::InvalidRepresentation(format!(
                                "homomorphism law fails on basis pair ({i},{j})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The adjoint representation of `g` on itself. The homomorphism law
    /// here is the Jacobi identity, which the algebra constructor already
    /// verified, so no re-validation is needed.
    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Representation {
        let matrices: Vec<QMatrix> = (0..algebra.dim).map(|i| algebra.ad_matrix(i)).collect();
        let space_dim = algebra.dim;
        Representation {
            algebra,
            space_dim,
            matrices,
        }
    }

    /// The coadjoint representation on the dual basis:
    /// `rho*(x) = -ad(x)^T`, so that `<x.xi, y> = -<xi, [x,y]>`. Negative
    /// transposition sends any representation to one on the dual, so this
    /// needs no re-validation either.
    pub fn coadjoint(algebra: Arc<LieAlgebra>) -> Representation {
        let matrices: Vec<QMatrix> = (0..algebra.dim)
            .map(|i| {
                let ad = algebra.ad_matrix(i).transpose();
                QMatrix::from_fn(algebra.dim, algebra.dim, |r, s| -ad.get(r, s).clone())
            })
            .collect();
        let space_dim = algebra.dim;
        Representation {
            algebra,
            space_dim,
            matrices,
        }
    }

    /// The trivial representation on a space of the given dimension.
    pub fn trivial(algebra: Arc<LieAlgebra>, space_dim: usize) -> Representation {
        let matrices = (0..algebra.dim)
            .map(|_| QMatrix::zeros(space_dim, space_dim))
            .collect();
        Representation {
            algebra,
            space_dim,
            matrices,
        }
    }

    pub fn apply(&self, x: &[Q], v: &[Q]) -> Result<Vec<Q>> {
        if x.len() != self.algebra.dim {
            return Err(Error::DimensionMismatch("algebra vector length".into()));
        }
        let mut out = vec![Q::zero(); self.space_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mv = self.matrices[i].mul_vec(v)?;
            for (o, w) in out.iter_mut().zip(mv) {
                *o += xi * w;
            }
        }
        Ok(out)
    }

    /// Linear forms `L[i][r](v) = (rho(e_i) v)_r`, the bilinear core of every
    /// morphism computation.
    pub fn action_linear_forms(&self) -> Vec<Vec<Polynomial>> {
        let n = self.space_dim;
        (0..self.algebra.dim)
            .map(|i| {
                (0..n)
                    .map(|r| {
                        let mut p = Polynomial::zero(n);
                        for s in 0..n {
                            let c = self.matrices[i].get(r, s);
                            if !c.is_zero() {
                                p = p
                                    .add(&Polynomial::var(n, s).scale(c))
                                    .expect("same vars");
                            }
                        }
                        p
                    })
                    .collect()
            })
            .collect()
    }

    /// The `space_dim x dim(g)` matrix of linear forms whose column `i` is
    /// `rho(e_i) v`; its rank at `v` is the orbit dimension.
    pub fn action_poly_matrix(&self) -> PolyMatrix {
        let forms = self.action_linear_forms();
        PolyMatrix::from_fn(self.space_dim, self.algebra.dim, self.space_dim, |r, i| {
            forms[i][r].clone()
        })
    }

    /// Exact stabilizer of a point: the nullspace of `x -> rho(x) v`.
    pub fn stabilizer(&self, v: &[Q]) -> Result<StabilizerData> {
        if v.len() != self.space_dim {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} in space of dimension {}",
                v.len(),
                self.space_dim
            )));
        }
        let m = QMatrix::from_fn(self.space_dim, self.algebra.dim, |r, i| {
            let mut acc = Q::zero();
            for s in 0..self.space_dim {
                let c = self.matrices[i].get(r, s);
                if !c.is_zero() {
                    acc += c * &v[s];
                }
            }
            acc
        });
        let basis = m.nullspace();
        let orbit_dim = self.algebra.dim - basis.len();
        Ok(StabilizerData {
            point: v.to_vec(),
            stabilizer_basis: basis,
            orbit_dim,
        })
    }

    /// Generic (minimal) stabilizer dimension, by symbolic rank.
    pub fn generic_stabilizer_dim(&self) -> usize {
        self.algebra.dim - self.action_poly_matrix().symbolic_rank()
    }

    pub fn is_trivial_action(&self) -> bool {
        self.matrices.iter().all(|m| m.is_zero())
    }
}

/// Exact stabilizer data at a point.
#[derive(Debug, Clone)]
pub struct StabilizerData {
    pub point: Vec<Q>,
    pub stabilizer_basis: Vec<Vec<Q>>,
    pub orbit_dim: usize,
}

impl StabilizerData {
    pub fn dim(&self) -> usize {
        self.stabilizer_basis.len()
    }
}

/// A Z2-grading `g = g0 + g1` given by a degree assignment on the basis.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    pub algebra: Arc<LieAlgebra>,
    pub grading: Vec<u8>,
    /// Dimension of a Cartan subspace of `g1`, when known.
    pub rank_ce: Option<usize>,
}

impl SymmetricPair {
    pub fn new(algebra: Arc<LieAlgebra>, grading: Vec<u8>, rank_ce: Option<usize>) -> Result<Self> {
        if grading.len() != algebra.dim {
            return Err(Error::InvalidGrading(format!(
                "grading length {} for dimension {}",
                grading.len(),
                algebra.dim
            )));
        }
        if grading.iter().any(|&d| d > 1) {
            return Err(Error::InvalidGrading("degrees must be 0 or 1".into()));
        }
        for (i, j, k, c) in algebra.structure_entries() {
            if c.is_zero() {
                continue;
            }
            if (grading[i] + grading[j]) % 2 != grading[k] {
                return Err(Error::InvalidGrading(format!(
                    "bracket [e_{i}, e_{j}] has a component e_{k} of wrong degree"
                )));
            }
        }
        Ok(SymmetricPair {
            algebra,
            grading,
            rank_ce,
        })
    }

    pub fn block(&self, degree: u8) -> Vec<usize> {
        self.grading
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == degree)
            .map(|(i, _)| i)
            .collect()
    }

    /// The subalgebra `g0` with its own basis indexing.
    pub fn even_part(&self) -> LieAlgebra {
        let block0 = self.block(0);
        let pos: BTreeMap<usize, usize> = block0.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut entries = Vec::new();
        for (a, &i) in block0.iter().enumerate() {
            for (b, &j) in block0.iter().enumerate() {
                if i >= j {
                    continue;
                }
                for (k, c) in self.algebra.bracket_basis(i, j) {
                    entries.push((a, b, pos[&k], c));
                }
            }
        }
        LieAlgebra::new(
            format!("{}_even", self.algebra.name),
            block0.len(),
            entries,
        )
        .expect("g0 is a subalgebra")
    }

    /// The isotropy representation of `g0` on `g1` by the bracket.
    pub fn isotropy_representation(&self) -> Result<Representation> {
        let block0 = self.block(0);
        let block1 = self.block(1);
        let pos1: BTreeMap<usize, usize> = block1.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let g0 = Arc::new(self.even_part());
        let matrices = block0
            .iter()
            .map(|&i| {
                let mut m = QMatrix::zeros(block1.len(), block1.len());
                for (s, &j) in block1.iter().enumerate() {
                    for (k, c) in self.algebra.bracket_basis(i, j) {
                        m.set(pos1[&k], s, c);
                    }
                }
                m
            })
            .collect();
        Representation::new(g0, matrices)
    }

    /// Embeds a `g1`-coordinate vector into full `g`-coordinates.
    pub fn embed_odd(&self, v1: &[Q]) -> Vec<Q> {
        let block1 = self.block(1);
        let mut v = vec![Q::zero(); self.algebra.dim];
        for (a, &i) in block1.iter().enumerate() {
            v[i] = v1[a].clone();
        }
        v
    }
}

/// One stratum of the complement of the regular locus.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub label: String,
    pub representative: Vec<Q>,
    pub dim: usize,
    pub expected_stabilizer_dim: Option<usize>,
}

/// Stratification input for the codimension bound.
#[derive(Debug, Clone)]
pub enum StrataData {
    /// Caller asserts the strata cover the whole non-regular locus.
    CertifiedComplete(Vec<Stratum>),
    /// Known strata, coverage not asserted.
    Incomplete(Vec<Stratum>),
    /// No strata; sample only.
    MonteCarlo { samples: usize },
}

/// Verdict of the codimension computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodimBound {
    /// Complement of the regular locus is empty.
    EmptyLocus,
    /// Exact codimension, from a certified complete stratification.
    Exact(usize),
    /// A bound that could not be certified; never counts as a pass.
    Inconclusive { bound: Option<usize>, reason: String },
}

impl CodimBound {
    /// Whether the verdict certifies codimension at least `n`.
    pub fn certifies_at_least(&self, n: usize) -> bool {
        match self {
            CodimBound::EmptyLocus => true,
            CodimBound::Exact(c) => *c >= n,
            CodimBound::Inconclusive { .. } => false,
        }
    }
}

/// Codimension of the complement of the regular locus of a representation.
///
/// With a certified complete stratification the result is exact: every
/// representative is checked to be non-regular (and against its expected
/// stabilizer dimension), and the codimension is `dim V - max(stratum dim)`.
/// Monte-Carlo sampling alone can only ever return an inconclusive verdict.
pub fn regular_locus_codim_bound(
    rep: &Representation,
    strata: &StrataData,
    rng: &mut impl rand::Rng,
) -> Result<CodimBound> {
    let generic_stab = rep.generic_stabilizer_dim();
    if generic_stab == rep.algebra.dim {
        // Constant stabilizer dimension: every point is regular.
        return Ok(CodimBound::EmptyLocus);
    }
    let validate = |list: &[Stratum]| -> Result<usize> {
        let mut max_dim = 0usize;
        for s in list {
            let stab = rep.stabilizer(&s.representative)?;
            if stab.dim() <= generic_stab {
                return Err(Error::UnvalidatedOrbitData(format!(
                    "stratum '{}' representative is regular (stabilizer dim {})",
                    s.label,
                    stab.dim()
                )));
            }
            if let Some(expected) = s.expected_stabilizer_dim {
                if stab.dim() != expected {
                    return Err(Error::UnvalidatedOrbitData(format!(
                        "stratum '{}' expected stabilizer dim {}, computed {}",
                        s.label,
                        expected,
                        stab.dim()
                    )));
                }
            }
            max_dim = max_dim.max(s.dim);
        }
        Ok(max_dim)
    };
    match strata {
        StrataData::CertifiedComplete(list) => {
            if list.is_empty() {
                return Err(Error::MissingData(
                    "exact codimension requested with an empty stratification".into(),
                ));
            }
            let max_dim = validate(list)?;
            Ok(CodimBound::Exact(rep.space_dim - max_dim))
        }
        StrataData::Incomplete(list) => {
            if list.is_empty() {
                return Ok(CodimBound::Inconclusive {
                    bound: None,
                    reason: "no strata supplied".into(),
                });
            }
            let max_dim = validate(list)?;
            Ok(CodimBound::Inconclusive {
                bound: Some(rep.space_dim - max_dim),
                reason: "stratification not certified complete".into(),
            })
        }
        StrataData::MonteCarlo { samples } => {
            let mut regular = 0usize;
            for _ in 0..*samples {
                let v = crate::qnum::random_point(rng, rep.space_dim);
                if rep.stabilizer(&v)?.dim() == generic_stab {
                    regular += 1;
                }
            }
            Ok(CodimBound::Inconclusive {
                bound: None,
                reason: format!(
                    "Monte-Carlo only: {regular}/{samples} sampled points regular; \
                     sampling gives one-sided evidence"
                ),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::qnum::qi;

    #[test]
    fn sl2_bracket_e_f_is_h() {
        let (g, _) = catalog::sl2();
        // Basis order (e, h, f).
        let e = g.basis_vector(0);
        let h = g.basis_vector(1);
        let f = g.basis_vector(2);
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        // [x, x] = 0 and bilinearity spot check.
        let x = vec![qi(3), qi(-1), qi(7)];
        assert!(g.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn semidirect_double_brackets() {
        let (q, _) = catalog::sl2();
        let g = q.semidirect_double();
        assert_eq!(g.dim, 6);
        // ((x,0),(0,y)) = (0,[x,y]) against the base bracket.
        let x = vec![qi(1), qi(2), qi(-1)];
        let y = vec![qi(0), qi(3), qi(5)];
        let mut xg = vec![Q::zero(); 6];
        let mut yg = vec![Q::zero(); 6];
        xg[..3].clone_from_slice(&x);
        yg[3..].clone_from_slice(&y);
        let b = g.bracket(&xg, &yg).unwrap();
        let base = q.bracket(&x, &y).unwrap();
        assert!(b[..3].iter().all(|c| c.is_zero()));
        assert_eq!(&b[3..], &base[..]);
        // Second copy is an abelian ideal.
        let mut y2 = vec![Q::zero(); 6];
        y2[4] = qi(1);
        assert!(g.bracket(&yg, &y2).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn antisymmetry_validation_rejects_bad_input() {
        let bad = LieAlgebra::new(
            "bad",
            2,
            vec![(0, 1, 0, qi(1)), (1, 0, 0, qi(1))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn jacobi_validation_rejects_bad_input() {
        // [e0,e1] = e2, [e1,e2] = e0, [e2,e0] = e0 breaks Jacobi.
        let bad = LieAlgebra::new(
            "bad",
            3,
            vec![(0, 1, 2, qi(1)), (1, 2, 0, qi(1)), (2, 0, 0, qi(1))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn stabilizer_of_semisimple_element_in_sl2() {
        let (g, _) = catalog::sl2();
        let rep = Representation::adjoint(Arc::new(g));
        // v = h is regular semisimple: the centralizer is the Cartan line.
        let h = vec![qi(0), qi(1), qi(0)];
        let stab = rep.stabilizer(&h).unwrap();
        assert_eq!(stab.dim(), 1);
        assert_eq!(stab.orbit_dim + stab.dim(), 3);
        // Brute-force oracle: ad(h) kills exactly multiples of h.
        for x in &stab.stabilizer_basis {
            let bx = rep.algebra.bracket(&h, x).unwrap();
            assert!(bx.iter().all(|c| c.is_zero()));
            assert!(x[0].is_zero() && x[2].is_zero());
        }
        // v = 0 stabilizes everything.
        let zero = vec![qi(0); 3];
        assert_eq!(rep.stabilizer(&zero).unwrap().dim(), 3);
    }

    #[test]
    fn codim_bound_modes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0);
        // Exact codimension 3 for the smallest simple algebra: the only
        // non-regular point of the coadjoint action is the origin.
        let e = catalog::catalog("sl2").unwrap();
        let rep = Representation::coadjoint(e.algebra.clone());
        let bound =
            regular_locus_codim_bound(&rep, e.coadjoint_strata.as_ref().unwrap(), &mut rng)
                .unwrap();
        assert_eq!(bound, CodimBound::Exact(3));
        // A bigger reductive entry also gives exactly 3.
        let e = catalog::catalog("sl3").unwrap();
        let rep = Representation::coadjoint(e.algebra.clone());
        let bound =
            regular_locus_codim_bound(&rep, e.coadjoint_strata.as_ref().unwrap(), &mut rng)
                .unwrap();
        assert_eq!(bound, CodimBound::Exact(3));
        // Sampling alone can never certify.
        let mc = regular_locus_codim_bound(&rep, &StrataData::MonteCarlo { samples: 8 }, &mut rng)
            .unwrap();
        assert!(matches!(mc, CodimBound::Inconclusive { .. }));
        assert!(!mc.certifies_at_least(1));
        // An empty stratification with exactness requested is an error for a
        // nontrivial action.
        let err =
            regular_locus_codim_bound(&rep, &StrataData::CertifiedComplete(Vec::new()), &mut rng);
        assert!(err.is_err());
        // A regular representative is rejected during validation.
        let bad = StrataData::CertifiedComplete(vec![Stratum {
            label: "bogus".into(),
            representative: e
                .metric
                .as_ref()
                .unwrap()
                .mul_vec(&{
                    let mut v = vec![Q::zero(); 8];
                    v[0] = qi(1); // a regular nilpotent direction? e_01 is not regular
                    v[1] = qi(1);
                    v[6] = qi(1);
                    v[7] = qi(2);
                    v
                })
                .unwrap(),
            dim: 5,
            expected_stabilizer_dim: None,
        }]);
        // The chosen point is generic enough to be regular, so validation
        // must refuse it.
        assert!(regular_locus_codim_bound(&rep, &bad, &mut rng).is_err());
    }

    #[test]
    fn index_is_minimal_coadjoint_stabilizer_dimension() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(1);
        for name in ["sl2", "sl3", "gl2", "sl2-ltimes-sl2"] {
            let e = catalog::catalog(name).unwrap();
            let rep = Representation::coadjoint(e.algebra.clone());
            let index = e.algebra.index();
            for _ in 0..10 {
                let xi = crate::qnum::random_point(&mut rng, rep.space_dim);
                assert!(rep.stabilizer(&xi).unwrap().dim() >= index, "{name}");
            }
        }
    }

    #[test]
    fn index_examples() {
        let (sl2, _) = catalog::sl2();
        assert_eq!(sl2.index(), 1);
        let abelian = LieAlgebra::new("abelian4", 4, Vec::<(usize, usize, usize, Q)>::new()).unwrap();
        assert_eq!(abelian.index(), 4);
        let takiff = sl2.semidirect_double();
        assert_eq!(takiff.index(), 2);
        assert_eq!(takiff.index(), 2 * sl2.index());
    }

    #[test]
    fn adjoint_and_coadjoint_satisfy_the_homomorphism_law() {
        for name in ["sl2", "sl3", "sp4", "sl2-ltimes-sl2"] {
            let e = crate::catalog::catalog(name).unwrap();
            Representation::adjoint(e.algebra.clone())
                .validate_homomorphism_law()
                .unwrap();
            Representation::coadjoint(e.algebra.clone())
                .validate_homomorphism_law()
                .unwrap();
        }
    }

    #[test]
    fn coadjoint_matches_adjoint_for_sl2_through_trace_form() {
        let (g, real) = catalog::sl2();
        let g = Arc::new(g);
        let adj = Representation::adjoint(g.clone());
        let coadj = Representation::coadjoint(g.clone());
        let gram = catalog::trace_form(&real);
        // Orbit dimensions agree at corresponding points xi = G x.
        for x in [
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(2), qi(-3), qi(5)],
        ] {
            let xi = gram.mul_vec(&x).unwrap();
            assert_eq!(
                adj.stabilizer(&x).unwrap().orbit_dim,
                coadj.stabilizer(&xi).unwrap().orbit_dim
            );
        }
        // The generic coadjoint stabilizer dimension is the index.
        assert_eq!(coadj.generic_stabilizer_dim(), g.index());
    }
}

//! Exact multivariate polynomials over the rationals.
//!
//! Terms are kept in a canonical graded-lexicographic order and zero
//! coefficients are never stored, so structural equality is semantic
//! equality. The monomial order is part of the external contract: canonical
//! forms, report payloads and the per-degree coefficient conventions of the
//! linear solvers all depend on it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::qnum::{q_display, Q, QJson};
use crate::Result;

/// Exponent multi-index with graded-lexicographic ordering
/// (total degree first, then lexicographic with earlier variables heavier).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Degree counted over a subset of the variables.
    pub fn degree_on(&self, block: &[usize]) -> usize {
        block.iter().map(|&i| self.0[i] as usize).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::from_integer(1.into()))
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.terms
            .insert(Monomial::var(nvars, i), Q::from_integer(1.into()));
        p
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Q) -> Self {
        assert_eq!(m.0.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in descending graded-lex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Degree with zero polynomial counting as 0, for report payloads.
    pub fn degree_or_zero(&self) -> usize {
        self.total_degree().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        // Monomial factors multiply term by term without re-sorting.
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_monomial(m, c));
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_monomial(m, c));
        }
        let mut prods: Vec<(Monomial, Q)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.mul(m2), c1 * c2));
            }
        }
        prods.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut terms = BTreeMap::new();
        let mut it = prods.into_iter();
        if let Some((mut cur_m, mut cur_c)) = it.next() {
            for (m, c) in it {
                if m == cur_m {
                    cur_c += c;
                } else {
                    if !cur_c.is_zero() {
                        terms.insert(cur_m, cur_c);
                    }
                    cur_m = m;
                    cur_c = c;
                }
            }
            if !cur_c.is_zero() {
                terms.insert(cur_m, cur_c);
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] = e - 1;
            out.add_term(Monomial(exps), c * Q::from_integer(BigIntFrom::from(e)));
        }
        out
    }

    /// Substitutes each variable by the given polynomial (all in the same
    /// target variable space).
    pub fn substitute(&self, subst: &[Polynomial]) -> Result<Polynomial> {
        if subst.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "substitution supplies {} polynomials for {} variables",
                subst.len(),
                self.nvars
            )));
        }
        let target_vars = subst.first().map(|p| p.nvars).unwrap_or(0);
        for s in subst {
            if s.nvars != target_vars {
                return Err(Error::DimensionMismatch(
                    "substitution polynomials disagree on variable count".into(),
                ));
            }
        }
        // Power cache per variable, grown on demand.
        let mut powers: Vec<Vec<Polynomial>> = subst
            .iter()
            .map(|s| vec![Polynomial::one(target_vars), s.clone()])
            .collect();
        let mut out = Polynomial::zero(target_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&subst[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Substitutes a linear change of variables. Every substituted
    /// polynomial must have degree at most one.
    pub fn compose_linear(&self, subst: &[Polynomial]) -> Result<Polynomial> {
        for s in subst {
            if s.total_degree().unwrap_or(0) > 1 {
                return Err(Error::DimensionMismatch(
                    "compose_linear requires substitutions of degree <= 1".into(),
                ));
            }
        }
        self.substitute(subst)
    }

    /// Renames variables into a larger space: variable `i` becomes
    /// `offset + i` among `total` variables.
    pub fn embed(&self, total: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= total);
        let mut out = Polynomial::zero(total);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; total];
            exps[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "evaluation point has {} coordinates for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut powers: Vec<Vec<Q>> = point
            .iter()
            .map(|x| vec![Q::from_integer(1.into()), x.clone()])
            .collect();
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                t *= &powers[i][e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, Polynomial> {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The part of the polynomial with prescribed degree on a variable block
    /// (and arbitrary degree outside it).
    pub fn block_degree_component(&self, block: &[usize], degree: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree_on(block) == degree {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Graded-lex comparison of whole polynomials: used as a deterministic
    /// tie-break for pivot selection.
    pub fn grlex_cmp(&self, other: &Polynomial) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let c = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
            }
        }
    }
}

// num_traits::Zero is already imported; BigInt construction for derivative
// coefficients goes through this alias to keep the call site short.
use num_bigint::BigInt as BigIntFrom;

/// All monomials of the given total degree, in descending graded-lex order.
/// This ordering fixes the coefficient layout of every per-degree linear
/// system in the crate.
pub fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
    fn rec(nvars: usize, degree: usize, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if nvars == 1 {
            prefix.push(degree as u16);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e as u16);
            rec(nvars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 {
            vec![Monomial(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Number of monomials of the given degree in `nvars` variables.
pub fn monomial_count(nvars: usize, degree: usize) -> usize {
    // C(degree + nvars - 1, nvars - 1)
    if nvars == 0 {
        return usize::from(degree == 0);
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..(nvars - 1) {
        num *= (degree + i + 1) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let cs = q_display(c);
            if first {
                first = false;
            } else if cs.starts_with('-') {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = cs.trim_start_matches('-');
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i)
                    } else {
                        format!("x{}^{}", i, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", if first { cs.as_str() } else { mag })?;
            } else {
                if mag != "1" {
                    write!(f, "{}*", mag)?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{vars, terms: [[exponents...], num, den]}`.
#[derive(Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: usize,
    pub terms: Vec<(Vec<u16>, String, String)>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            vars: p.nvars,
            terms: p
                .terms()
                .map(|(m, c)| {
                    let j = QJson::from(c);
                    (m.0.clone(), j.num, j.den)
                })
                .collect(),
        }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.vars);
        for (exps, num, den) in &self.terms {
            if exps.len() != self.vars {
                return Err(Error::Schema {
                    path: "<polynomial>".into(),
                    reason: "exponent vector length differs from vars".into(),
                });
            }
            let c = QJson {
                num: num.clone(),
                den: den.clone(),
            }
            .to_q()
            .ok_or_else(|| Error::Schema {
                path: "<polynomial>".into(),
                reason: format!("bad rational {num}/{den}"),
            })?;
            p.add_term(Monomial(exps.clone()), c);
        }
        Ok(p)
    }
}

//! Exact shifted symmetric polynomials, the Harish-Chandra map by
//! interpolation, shifted Schur polynomials as determinant ratios, the ω
//! involution and the finite-n stability checks.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::central::{eigenvalue_action, CentralSpec};
use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis};
use crate::partitions::{partitions_up_to, Partition};
use crate::rational::{rat, rat_to_string, Rat};

/// An exact multivariate polynomial in a fixed number of variables, the
/// concrete carrier for shifted symmetric polynomials. Shifted symmetry
/// itself is a testable predicate, not an enforced invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl ShiftedPolynomial {
    pub fn zero(vars: usize) -> Self {
        ShiftedPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut out = Self::zero(vars);
        if !c.is_zero() {
            out.terms.insert(vec![0; vars], c);
        }
        out
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The variable x_i (1-indexed).
    pub fn variable(vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= vars, "variable index out of range");
        let mut exps = vec![0; vars];
        exps[i - 1] = 1;
        Self::monomial(vars, exps, Rat::one())
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), vars);
        let mut out = Self::zero(vars);
        if !c.is_zero() {
            out.terms.insert(exps, c);
        }
        out
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ShiftedPolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        ShiftedPolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exps, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, point: &[i64]) -> Rat {
        assert_eq!(point.len(), self.vars);
        let mut out = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e.iter()) {
                for _ in 0..p {
                    term *= rat(*x);
                }
            }
            out += term;
        }
        out
    }

    /// Substitutes each variable by a polynomial over a common new variable
    /// set.
    pub fn substitute(&self, images: &[ShiftedPolynomial]) -> Self {
        assert_eq!(images.len(), self.vars);
        let new_vars = images.first().map_or(0, |p| p.vars);
        assert!(images.iter().all(|p| p.vars == new_vars));
        let mut out = Self::zero(new_vars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(new_vars, c.clone());
            for (img, &p) in images.iter().zip(e.iter()) {
                if p > 0 {
                    term = term.mul(&img.pow(p));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// The shifted-symmetry predicate: invariance under
    /// (x_i, x_{i+1}) ↦ (x_{i+1}−1, x_i+1) at every adjacent index.
    pub fn is_shifted_symmetric(&self) -> bool {
        let n = self.vars;
        for i in 0..n.saturating_sub(1) {
            let mut images: Vec<ShiftedPolynomial> =
                (1..=n).map(|j| Self::variable(n, j)).collect();
            images[i] = Self::variable(n, i + 2).sub(&Self::one(n));
            images[i + 1] = Self::variable(n, i + 1).add(&Self::one(n));
            if self.substitute(&images) != *self {
                return false;
            }
        }
        true
    }

    /// Top-degree homogeneous part.
    pub fn top_part(&self) -> Self {
        let d = self.total_degree();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        ShiftedPolynomial {
            vars: self.vars,
            terms,
        }
    }

    /// Graded-lex leading exponent (total degree first, then x₁ > x₂ > …).
    fn leading_exponent(&self) -> Option<&Vec<u32>> {
        self.terms.keys().max_by(|a, b| grlex(a, b))
    }

    /// Exact multivariate division; errors when a remainder survives.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        assert_eq!(self.vars, den.vars);
        if den.is_zero() {
            return Err(Error::NonExactDivision);
        }
        let lead_den = den.leading_exponent().unwrap().clone();
        let cden = den.terms[&lead_den].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars);
        while !rem.is_zero() {
            let lead = rem.leading_exponent().unwrap().clone();
            if lead.iter().zip(&lead_den).any(|(a, b)| a < b) {
                return Err(Error::NonExactDivision);
            }
            let exps: Vec<u32> = lead.iter().zip(&lead_den).map(|(a, b)| a - b).collect();
            let coeff = rem.terms[&lead].clone() / cden.clone();
            let t = Self::monomial(self.vars, exps, coeff);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(den));
        }
        Ok(quot)
    }
}

fn grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        // Higher power of an earlier variable is larger.
        for (x, y) in a.iter().zip(b) {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl fmt::Display for ShiftedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        for (i, e) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", rat_to_string(&self.terms[*e]))?;
            for (j, &p) in e.iter().enumerate() {
                if p == 1 {
                    write!(f, "*x{}", j + 1)?;
                } else if p > 1 {
                    write!(f, "*x{}^{}", j + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

/// e*_k in n variables: Σ over i₁<…<i_k of (x_{i₁}+k−1)⋯(x_{i_k}).
pub fn e_star_poly(k: usize, n: usize) -> Result<ShiftedPolynomial> {
    if k > n {
        return Err(Error::KExceedsVariables { k, n });
    }
    use itertools::Itertools;
    let mut out = ShiftedPolynomial::zero(n);
    for combo in (1..=n).combinations(k) {
        let mut term = ShiftedPolynomial::one(n);
        for (j, &i) in combo.iter().enumerate() {
            let factor = ShiftedPolynomial::variable(n, i)
                .add(&ShiftedPolynomial::constant(n, rat((k - 1 - j) as i64)));
            term = term.mul(&factor);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// h*_k in n variables: Σ over i₁≤…≤i_k of (x_{i₁}−k+1)⋯(x_{i_k}).
pub fn h_star_poly(k: usize, n: usize) -> ShiftedPolynomial {
    use itertools::Itertools;
    let mut out = ShiftedPolynomial::zero(n);
    for combo in (1..=n).combinations_with_replacement(k) {
        let mut term = ShiftedPolynomial::one(n);
        for (j, &i) in combo.iter().enumerate() {
            let shift = j as i64 + 1 - k as i64;
            let factor =
                ShiftedPolynomial::variable(n, i).add(&ShiftedPolynomial::constant(n, rat(shift)));
            term = term.mul(&factor);
        }
        out = out.add(&term);
    }
    out
}

/// The classical complete homogeneous symmetric polynomial h_k, used as the
/// top-degree oracle for h*_k.
pub fn complete_homogeneous_poly(k: usize, n: usize) -> ShiftedPolynomial {
    use itertools::Itertools;
    let mut out = ShiftedPolynomial::zero(n);
    for combo in (1..=n).combinations_with_replacement(k) {
        let mut exps = vec![0u32; n];
        for &i in &combo {
            exps[i - 1] += 1;
        }
        out = out.add(&ShiftedPolynomial::monomial(n, exps, Rat::one()));
    }
    out
}

/// Index conventions for the shifted Schur determinant ratio. The falling
/// factorial depths always involve the conjugate shape; `RowIndexed`
/// transcribes the displayed formula with the depth following the row,
/// `ColumnIndexed` follows the column as in the standard sources. Only the
/// column-indexed variant divides exactly and matches the Harish-Chandra
/// image of the Schur elements; it is the validated default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurIndexConvention {
    RowIndexed,
    ColumnIndexed,
}

/// Falling factorial (x_i + offset)_depth as a polynomial.
fn falling_factorial(n: usize, i: usize, offset: i64, depth: u32) -> ShiftedPolynomial {
    let mut out = ShiftedPolynomial::one(n);
    for t in 0..depth {
        let factor = ShiftedPolynomial::variable(n, i)
            .add(&ShiftedPolynomial::constant(n, rat(offset - t as i64)));
        out = out.mul(&factor);
    }
    out
}

fn poly_det(entries: &[Vec<ShiftedPolynomial>], n: usize) -> ShiftedPolynomial {
    use itertools::Itertools;
    let size = entries.len();
    let mut out = ShiftedPolynomial::zero(n);
    for sigma in (0..size).permutations(size) {
        let mut term = ShiftedPolynomial::one(n);
        for (col, &row) in sigma.iter().enumerate() {
            term = term.mul(&entries[row][col]);
        }
        let mut inv = 0;
        for i in 0..size {
            for j in i + 1..size {
                if sigma[i] > sigma[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 1 {
            term = term.neg();
        }
        out = out.add(&term);
    }
    out
}

/// The shifted Schur polynomial s*_λ in n variables as the exact quotient of
/// the two falling-factorial determinants.
pub fn s_star_poly(
    lambda: &Partition,
    n: usize,
    convention: SchurIndexConvention,
) -> Result<ShiftedPolynomial> {
    if lambda.first_part() as usize > n {
        return Err(Error::InvalidPartition(format!(
            "first part of {lambda} exceeds n = {n}"
        )));
    }
    let conj = lambda.conjugate();
    let num: Vec<Vec<ShiftedPolynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let depth_part = match convention {
                        SchurIndexConvention::RowIndexed => conj.part(i - 1),
                        SchurIndexConvention::ColumnIndexed => conj.part(j - 1),
                    };
                    let depth = depth_part as i64 + n as i64 - j as i64;
                    debug_assert!(depth >= 0);
                    falling_factorial(n, i, n as i64 - i as i64, depth as u32)
                })
                .collect()
        })
        .collect();
    let den: Vec<Vec<ShiftedPolynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| falling_factorial(n, i, n as i64 - i as i64, (n - j) as u32))
                .collect()
        })
        .collect();
    poly_det(&num, n).exact_div(&poly_det(&den, n))
}

/// Sets the last variable to zero: the projection Λ*(n+1) → Λ*(n).
pub fn olshanski_project(f: &ShiftedPolynomial) -> ShiftedPolynomial {
    assert!(f.vars() >= 1, "projection needs at least one variable");
    let n = f.vars() - 1;
    let mut out = ShiftedPolynomial::zero(n);
    for (e, c) in f.terms() {
        if e[n] == 0 {
            out.insert(e[..n].to_vec(), c.clone());
        }
    }
    out
}

/// Expresses `f` in the generating set {e*₁..e*ₙ}: coefficients of the
/// products ∏ e*_{νᵢ} over partitions ν with parts ≤ n and |ν| ≤ deg f.
fn rewrite_in_e_star(f: &ShiftedPolynomial) -> Result<Vec<(Partition, Rat)>> {
    let n = f.vars();
    let degree = f.total_degree();
    let shapes = partitions_up_to(degree, Some(n as u32));
    let products: Vec<ShiftedPolynomial> = shapes
        .iter()
        .map(|nu| {
            let mut prod = ShiftedPolynomial::one(n);
            for &k in nu.parts() {
                prod = prod.mul(&e_star_poly(k as usize, n).expect("parts bounded by n"));
            }
            prod
        })
        .collect();

    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for p in &products {
        for (e, _) in p.terms() {
            let next = index.len();
            index.entry(e.clone()).or_insert(next);
        }
    }
    for (e, _) in f.terms() {
        let next = index.len();
        index.entry(e.clone()).or_insert(next);
    }
    let rows = index.len();
    let mut a = vec![vec![Rat::zero(); products.len()]; rows];
    for (col, p) in products.iter().enumerate() {
        for (e, c) in p.terms() {
            a[index[e]][col] = c.clone();
        }
    }
    let mut b = vec![Rat::zero(); rows];
    for (e, c) in f.terms() {
        b[index[e]] = c.clone();
    }
    let solution = linalg::solve(&a, &b).ok_or(Error::GeneratorRewriteFailed)?;
    Ok(shapes.into_iter().zip(solution).collect())
}

/// The ω involution: rewrite in the e* generating set and substitute
/// e*_k ↦ h*_k.
pub fn omega_involution(f: &ShiftedPolynomial) -> Result<ShiftedPolynomial> {
    let n = f.vars();
    let expansion = rewrite_in_e_star(f)?;
    let mut out = ShiftedPolynomial::zero(n);
    for (nu, c) in expansion {
        if c.is_zero() {
            continue;
        }
        let mut prod = ShiftedPolynomial::one(n);
        for &k in nu.parts() {
            prod = prod.mul(&h_star_poly(k as usize, n));
        }
        out = out.add(&prod.scale(&c));
    }
    Ok(out)
}

/// One interpolation record: the padded weight point μ̃ and the eigenvalue
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigRecord {
    pub point: Vec<i64>,
    pub value: Rat,
}

/// The Harish-Chandra image of a central element: the unique element of the
/// filtration component Λ*(n)^(m), m the filtration degree, interpolating
/// the eigenvalues on highest weight points μ̃. The component is spanned by
/// the products ∏ e*_{νᵢ} over partitions ν with |ν| ≤ m and parts ≤ n;
/// points are partitions taken greedily by weight until the system has full
/// rank, and the result is certified on 10 held-out partitions.
pub fn chi(spec: &CentralSpec, n: usize) -> Result<ShiftedPolynomial> {
    let degree = spec.filtration_degree() as u32;
    let shapes = partitions_up_to(degree, Some(n as u32));
    let products: Vec<ShiftedPolynomial> = shapes
        .iter()
        .map(|nu| {
            let mut prod = ShiftedPolynomial::one(n);
            for &k in nu.parts() {
                prod = prod.mul(&e_star_poly(k as usize, n).expect("parts bounded by n"));
            }
            prod
        })
        .collect();
    let unknowns = products.len();

    let mut basis = EchelonBasis::new(unknowns);
    let mut chosen: Vec<(Vec<Rat>, EigRecord)> = Vec::new();
    let mut held_out: Vec<EigRecord> = Vec::new();
    let weight_cap = (degree + 1) * (n as u32) + 6;
    'outer: for mu in partitions_up_to(weight_cap, Some(n as u32)) {
        let point = mu.conjugate_padded(n)?;
        let row: Vec<Rat> = products.iter().map(|p| p.eval(&point)).collect();
        if basis.rank() < unknowns {
            if basis.try_insert(&row) {
                let value = eigenvalue_action(spec, &mu, n as u32)?;
                chosen.push((row, EigRecord { point, value }));
            }
        } else {
            let value = eigenvalue_action(spec, &mu, n as u32)?;
            held_out.push(EigRecord { point, value });
            if held_out.len() == 10 {
                break 'outer;
            }
        }
    }
    if basis.rank() < unknowns {
        return Err(Error::Interpolation(format!(
            "only {} of {} independent points found",
            basis.rank(),
            unknowns
        )));
    }

    let a: Vec<Vec<Rat>> = chosen.iter().map(|(row, _)| row.clone()).collect();
    let b: Vec<Rat> = chosen.iter().map(|(_, rec)| rec.value.clone()).collect();
    let coeffs = linalg::solve(&a, &b)
        .ok_or_else(|| Error::Interpolation("singular interpolation system".into()))?;
    let mut poly = ShiftedPolynomial::zero(n);
    for (p, c) in products.iter().zip(coeffs) {
        poly = poly.add(&p.scale(&c));
    }
    for rec in &held_out {
        if poly.eval(&rec.point) != rec.value {
            return Err(Error::Interpolation(format!(
                "held-out point {:?} disagrees",
                rec.point
            )));
        }
    }
    Ok(poly)
}

/// JSON emission form: one record per monomial.
#[derive(Debug, Clone, Serialize)]
pub struct PolyTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl ShiftedPolynomial {
    /// Terms in graded-lex descending order, coefficients as `p/q` strings.
    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        keys.into_iter()
            .map(|e| PolyTerm {
                exponents: e.clone(),
                coeff: rat_to_string(&self.terms[e]),
            })
            .collect()
    }
}

/// CSV table of eigenvalues keyed by partition strings.
pub fn eigenvalue_csv(rows: &[(Partition, Rat)]) -> String {
    let mut out = String::from("mu,value\n");
    for (mu, value) in rows {
        out.push_str(&format!("\"{}\",{}\n", mu, rat_to_string(value)));
    }
    out
}

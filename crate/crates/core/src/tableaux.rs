//! Young tableaux on the graded alphabet, biproducts, bitableaux,
//! superstandard straightening and Schur-module highest weight vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::enveloping::{UGenerator, UWord};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{partitions_of, Partition};
use crate::rational::{rat_factorial, Rat};
use crate::superalgebra::{
    apply_word, Polarization, Ring, SuperMonomial, SuperPolynomial, Symbol, Variable,
};

/// A Young tableau: rows of entries whose lengths form the shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau<T> {
    shape: Partition,
    rows: Vec<Vec<T>>,
}

impl<T: Clone + Ord> Tableau<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &T {
        &self.rows[row][col]
    }

    /// Row word: the concatenation of the rows, top to bottom.
    pub fn row_word(&self) -> Vec<T> {
        self.rows.iter().flatten().cloned().collect()
    }

    /// Number of occurrences of each entry.
    pub fn content(&self) -> BTreeMap<T, usize> {
        let mut out = BTreeMap::new();
        for e in self.rows.iter().flatten() {
            *out.entry(e.clone()).or_insert(0) += 1;
        }
        out
    }
}

impl fmt::Display for Tableau<Symbol> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

impl FromStr for Tableau<Symbol> {
    type Err = Error;

    /// Rows separated by `;`, entries by spaces: `x1 x2; x1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for row in s.split(';') {
            let entries = row
                .split_whitespace()
                .map(Symbol::from_str)
                .collect::<Result<Vec<_>>>()?;
            if !entries.is_empty() {
                rows.push(entries);
            }
        }
        Tableau::new(rows)
    }
}

/// The proper Deruyts tableau D_λ: row i is x₁ … x_{λᵢ}.
pub fn proper_deruyts(shape: &Partition) -> Tableau<Symbol> {
    Tableau::new(
        shape
            .parts()
            .iter()
            .map(|&len| (1..=len).map(Symbol::Proper).collect())
            .collect(),
    )
    .expect("shape is a partition")
}

/// The place Deruyts tableau D^P_λ: row i is 1 … λᵢ.
pub fn place_deruyts(shape: &Partition) -> Tableau<u32> {
    Tableau::new(
        shape
            .parts()
            .iter()
            .map(|&len| (1..=len).collect())
            .collect(),
    )
    .expect("shape is a partition")
}

/// The virtual Coderuyts tableau C*_λ: row i is α_i repeated λᵢ times.
pub fn virtual_coderuyts(shape: &Partition) -> Tableau<Symbol> {
    Tableau::new(
        shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![Symbol::PositiveVirtual(i as u32 + 1); len as usize])
            .collect(),
    )
    .expect("shape is a partition")
}

/// The virtual Deruyts tableau D*_λ: row i is β₁ … β_{λᵢ}.
pub fn virtual_deruyts(shape: &Partition) -> Tableau<Symbol> {
    Tableau::new(
        shape
            .parts()
            .iter()
            .map(|&len| (1..=len).map(Symbol::NegativeVirtual).collect())
            .collect(),
    )
    .expect("shape is a partition")
}

/// The biproduct (ω|ϖ): D_{z₁,γ}⋯D_{z_p,γ} applied to (γ|j₁)⋯(γ|j_q) when
/// the words have equal length, zero otherwise. γ never survives into the
/// result.
pub fn biproduct(word: &[Symbol], places: &[u32], ring: Ring) -> Result<SuperPolynomial> {
    if word.len() != places.len() {
        return Ok(SuperPolynomial::zero(ring));
    }
    let gamma = Symbol::Auxiliary(1);
    if word.contains(&gamma) {
        return Err(Error::InvalidSpec("auxiliary symbol in biproduct word".into()));
    }
    let factors: Vec<Variable> = places.iter().map(|&j| Variable::new(gamma, j)).collect();
    for &j in places {
        ring.check_place(j)?;
    }
    let seed = SuperPolynomial::from_factors(ring, &factors, Rat::from_integer(1.into()))?;
    let ops: Vec<Polarization> = word
        .iter()
        .map(|&z| Polarization::new(z, gamma))
        .collect();
    for &z in word {
        ring.check_symbol(z)?;
    }
    let out = apply_word(&ops, &seed);
    debug_assert!(!out.contains_auxiliary());
    Ok(out)
}

fn word_lie_parity(word: &[Symbol]) -> bool {
    word.iter().filter(|z| z.lie_parity()).count() % 2 == 1
}

/// The Young bitableau (S|T) as an element of the ring: the signed product
/// of the row biproducts, with sign exponent
/// |ω₂||ϖ₁| + |ω₃|(|ϖ₁|+|ϖ₂|) + … computed in Lie parities for the symbol
/// rows and lengths mod 2 for the place rows. Zero on shape mismatch.
pub fn bitableau_value(
    s: &Tableau<Symbol>,
    t: &Tableau<u32>,
    ring: Ring,
) -> Result<SuperPolynomial> {
    if s.shape() != t.shape() {
        return Ok(SuperPolynomial::zero(ring));
    }
    let mut product = SuperPolynomial::one(ring);
    let mut sign_exp = 0usize;
    let mut place_prefix = 0usize;
    for (i, (srow, trow)) in s.rows().iter().zip(t.rows()).enumerate() {
        if i > 0 && word_lie_parity(srow) {
            sign_exp += place_prefix;
        }
        place_prefix += trow.len() % 2;
        let row = biproduct(srow, trow, ring)?;
        product = product.try_mul(&row)?;
    }
    if sign_exp % 2 == 1 {
        product = product.neg();
    }
    Ok(product)
}

/// The canonical highest weight vector v_μ̃ = (D_μ|D^P_μ) of the Schur
/// module of shape μ, inside the given ring (which must admit the proper
/// symbols and places involved).
pub fn highest_weight_vector_in(ring: Ring, mu: &Partition) -> Result<SuperPolynomial> {
    if mu.first_part() > ring.proper {
        return Err(Error::InvalidPartition(format!(
            "first part of {mu} exceeds n = {}",
            ring.proper
        )));
    }
    if mu.first_part() > ring.places {
        return Err(Error::InvalidPartition(format!(
            "first part of {mu} exceeds d = {}",
            ring.places
        )));
    }
    bitableau_value(&proper_deruyts(mu), &place_deruyts(mu), ring)
}

/// Highest weight vector in the minimal proper ring (no virtual symbols,
/// d = μ₁).
pub fn highest_weight_vector(mu: &Partition, n: u32) -> Result<SuperPolynomial> {
    highest_weight_vector_in(Ring::new(0, 0, n, mu.first_part()), mu)
}

/// Superstandard predicate: rows and columns weakly increasing in the order
/// α₁<…<α_{m₀}<β₁<…<β_{m₁}<x₁<…<x_n, no repeats of negative symbols
/// (β, x) inside a row, no repeats of positive symbols (α) inside a column.
pub fn is_superstandard(x: &Tableau<Symbol>) -> bool {
    let rows = x.rows();
    for row in rows {
        for w in row.windows(2) {
            if w[0] > w[1] {
                return false;
            }
            if w[0] == w[1] && w[0].lie_parity() {
                return false;
            }
        }
    }
    for (r, row) in rows.iter().enumerate().skip(1) {
        for (c, e) in row.iter().enumerate() {
            let above = &rows[r - 1][c];
            if above > e {
                return false;
            }
            if above == e && !e.lie_parity() {
                return false;
            }
        }
    }
    true
}

/// Standard place tableau: rows strictly increasing, columns weakly
/// increasing (places behave like negative letters).
pub fn is_standard_place(t: &Tableau<u32>) -> bool {
    let rows = t.rows();
    for row in rows {
        for w in row.windows(2) {
            if w[0] >= w[1] {
                return false;
            }
        }
    }
    for (r, row) in rows.iter().enumerate().skip(1) {
        for (c, e) in row.iter().enumerate() {
            if rows[r - 1][c] > *e {
                return false;
            }
        }
    }
    true
}

/// Row-major backtracking fill of a shape. `candidate` receives the
/// (row, col) position, the left neighbor and the upper neighbor and decides
/// which alphabet entries may be placed.
fn fill_tableaux<T, F>(shape: &Partition, alphabet: &[T], candidate: F) -> Vec<Tableau<T>>
where
    T: Clone + Ord,
    F: Fn(&T, Option<&T>, Option<&T>) -> bool,
{
    let mut out = Vec::new();
    let mut rows: Vec<Vec<T>> = Vec::new();
    fn rec<T: Clone + Ord, F: Fn(&T, Option<&T>, Option<&T>) -> bool>(
        shape: &Partition,
        alphabet: &[T],
        candidate: &F,
        rows: &mut Vec<Vec<T>>,
        r: usize,
        c: usize,
        out: &mut Vec<Tableau<T>>,
    ) {
        if r == shape.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (nr, nc) = if c + 1 < shape.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        for e in alphabet {
            let left = if c > 0 { rows[r].last() } else { None };
            let above = if r > 0 { rows[r - 1].get(c) } else { None };
            if candidate(e, left, above) {
                if c == 0 {
                    rows.push(vec![e.clone()]);
                } else {
                    rows[r].push(e.clone());
                }
                rec(shape, alphabet, candidate, rows, nr, nc, out);
                if c == 0 {
                    rows.pop();
                } else {
                    rows[r].pop();
                }
            }
        }
    }
    if shape.is_empty() {
        return vec![Tableau::empty()];
    }
    rec(shape, alphabet, &candidate, &mut rows, 0, 0, &mut out);
    out
}

/// Every filling of the shape from the alphabet.
pub fn all_tableaux<T: Clone + Ord>(shape: &Partition, alphabet: &[T]) -> Vec<Tableau<T>> {
    fill_tableaux(shape, alphabet, |_, _, _| true)
}

/// Fillings with strictly increasing rows (columns unconstrained).
pub fn row_strict_tableaux<T: Clone + Ord>(shape: &Partition, alphabet: &[T]) -> Vec<Tableau<T>> {
    fill_tableaux(shape, alphabet, |e, left, _| left.map_or(true, |l| l < e))
}

/// Fillings with weakly increasing columns (rows unconstrained).
pub fn column_weak_tableaux<T: Clone + Ord>(shape: &Partition, alphabet: &[T]) -> Vec<Tableau<T>> {
    fill_tableaux(shape, alphabet, |e, _, above| above.map_or(true, |a| a <= e))
}

/// Superstandard fillings of the shape over the full alphabet of the ring.
pub fn standard_tableaux(shape: &Partition, ring: Ring) -> Vec<Tableau<Symbol>> {
    let alphabet = ring_alphabet(ring);
    fill_tableaux(shape, &alphabet, superstandard_candidate)
}

fn superstandard_candidate(e: &Symbol, left: Option<&Symbol>, above: Option<&Symbol>) -> bool {
    if let Some(l) = left {
        if l > e || (l == e && e.lie_parity()) {
            return false;
        }
    }
    if let Some(a) = above {
        if a > e || (a == e && !e.lie_parity()) {
            return false;
        }
    }
    true
}

fn ring_alphabet(ring: Ring) -> Vec<Symbol> {
    let mut alphabet = Vec::new();
    alphabet.extend((1..=ring.even_virtuals).map(Symbol::PositiveVirtual));
    alphabet.extend((1..=ring.odd_virtuals).map(Symbol::NegativeVirtual));
    alphabet.extend((1..=ring.proper).map(Symbol::Proper));
    alphabet
}

fn with_content<T: Clone + Ord>(
    tableaux: Vec<Tableau<T>>,
    content: &BTreeMap<T, usize>,
) -> Vec<Tableau<T>> {
    tableaux
        .into_iter()
        .filter(|t| &t.content() == content)
        .collect()
}

/// Superstandard fillings of the shape with the exact given content.
pub fn standard_tableaux_with_content(
    shape: &Partition,
    content: &BTreeMap<Symbol, usize>,
) -> Vec<Tableau<Symbol>> {
    let alphabet: Vec<Symbol> = content.keys().copied().collect();
    with_content(
        fill_tableaux(shape, &alphabet, superstandard_candidate),
        content,
    )
}

/// Standard place fillings of the shape with the exact given content.
pub fn standard_place_tableaux_with_content(
    shape: &Partition,
    content: &BTreeMap<u32, usize>,
) -> Vec<Tableau<u32>> {
    let alphabet: Vec<u32> = content.keys().copied().collect();
    let filled = fill_tableaux(shape, &alphabet, |e, left, above| {
        left.map_or(true, |l| l < e) && above.map_or(true, |a| a <= e)
    });
    with_content(filled, content)
}

/// A bitableau together with its realized value in the ring.
#[derive(Debug, Clone)]
pub struct Bitableau {
    pub left: Tableau<Symbol>,
    pub right: Tableau<u32>,
    pub value: SuperPolynomial,
}

impl Bitableau {
    pub fn new(left: Tableau<Symbol>, right: Tableau<u32>, ring: Ring) -> Result<Self> {
        let value = bitableau_value(&left, &right, ring)?;
        Ok(Bitableau { left, right, value })
    }
}

/// All superstandard bitableaux of one shape over the full ring alphabet and
/// places 1..d. Empty when the shape admits no standard filling (hook
/// condition) or when shape₁ exceeds d.
pub fn standard_bitableaux_of_shape(shape: &Partition, ring: Ring) -> Result<Vec<Bitableau>> {
    if shape.first_part() > ring.places {
        return Ok(Vec::new());
    }
    let lefts = standard_tableaux(shape, ring);
    let places: Vec<u32> = (1..=ring.places).collect();
    let rights: Vec<Tableau<u32>> = fill_tableaux(shape, &places, |e, left, above| {
        left.map_or(true, |l| l < e) && above.map_or(true, |a| a <= e)
    });
    let mut out = Vec::new();
    for l in &lefts {
        for r in &rights {
            out.push(Bitableau::new(l.clone(), r.clone(), ring)?);
        }
    }
    Ok(out)
}

/// All superstandard bitableaux (over every shape of the right weight) with
/// the given symbol and place contents.
pub fn standard_bitableaux_with_content(
    symbol_content: &BTreeMap<Symbol, usize>,
    place_content: &BTreeMap<u32, usize>,
    ring: Ring,
) -> Result<Vec<Bitableau>> {
    let h: usize = symbol_content.values().sum();
    if h != place_content.values().sum::<usize>() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for shape in partitions_of(h as u32, None) {
        if shape.first_part() > ring.places {
            continue;
        }
        let lefts = standard_tableaux_with_content(&shape, symbol_content);
        if lefts.is_empty() {
            continue;
        }
        let rights = standard_place_tableaux_with_content(&shape, place_content);
        for l in &lefts {
            for r in &rights {
                out.push(Bitableau::new(l.clone(), r.clone(), ring)?);
            }
        }
    }
    Ok(out)
}

/// An expansion over superstandard bitableaux with rational coefficients.
#[derive(Debug, Clone)]
pub struct StandardExpansion {
    pub terms: Vec<(Bitableau, Rat)>,
}

impl StandardExpansion {
    pub fn empty() -> Self {
        StandardExpansion { terms: Vec::new() }
    }

    pub fn expand(&self, ring: Ring) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(ring);
        for (bt, c) in &self.terms {
            out = out.add(&bt.value.scale(c));
        }
        out
    }
}

/// Expands `p` over the superstandard bitableaux sharing its content. The
/// content hints are read off the polynomial itself: every monomial of a
/// bitableau value carries the same symbol and place multiset. Errors when
/// `p` mixes contents or falls outside the standard span.
pub fn straighten(p: &SuperPolynomial) -> Result<StandardExpansion> {
    if p.is_zero() {
        return Ok(StandardExpansion::empty());
    }
    let mut terms = p.terms();
    let (first, _) = terms.next().expect("nonzero polynomial");
    let symbol_content = first.symbol_content();
    let place_content = first.place_content();
    for (m, _) in p.terms() {
        if m.symbol_content() != symbol_content || m.place_content() != place_content {
            return Err(Error::OutsideStandardSpan);
        }
    }
    let basis = standard_bitableaux_with_content(&symbol_content, &place_content, p.ring())?;
    if basis.is_empty() {
        return Err(Error::OutsideStandardSpan);
    }

    // Union of supports indexes the rows of the linear system.
    let mut index: BTreeMap<SuperMonomial, usize> = BTreeMap::new();
    for bt in &basis {
        for (m, _) in bt.value.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    for (m, _) in p.terms() {
        let next = index.len();
        index.entry(m.clone()).or_insert(next);
    }

    let rows = index.len();
    let mut a = vec![vec![Rat::zero(); basis.len()]; rows];
    for (col, bt) in basis.iter().enumerate() {
        for (m, c) in bt.value.terms() {
            a[index[m]][col] = c.clone();
        }
    }
    let mut b = vec![Rat::zero(); rows];
    for (m, c) in p.terms() {
        b[index[m]] = c.clone();
    }

    let solution = linalg::solve(&a, &b).ok_or(Error::OutsideStandardSpan)?;
    let terms: Vec<(Bitableau, Rat)> = basis
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let expansion = StandardExpansion { terms };
    if expansion.expand(p.ring()) != *p {
        return Err(Error::OutsideStandardSpan);
    }
    Ok(expansion)
}

/// Dimension of the content component of the ring: the number of distinct
/// nonzero monomials with the given symbol and place multisets. This is the
/// independent oracle against which the standard-basis count is checked.
pub fn content_monomial_count(
    symbol_content: &BTreeMap<Symbol, usize>,
    place_content: &BTreeMap<u32, usize>,
) -> usize {
    let symbols: Vec<Symbol> = symbol_content
        .iter()
        .flat_map(|(&s, &m)| std::iter::repeat(s).take(m))
        .collect();
    let places: Vec<u32> = place_content
        .iter()
        .flat_map(|(&p, &m)| std::iter::repeat(p).take(m))
        .collect();
    if symbols.len() != places.len() {
        return 0;
    }
    let mut seen = std::collections::BTreeSet::new();
    fn rec(
        symbols: &[Symbol],
        remaining: &mut Vec<u32>,
        chosen: &mut Vec<Variable>,
        seen: &mut std::collections::BTreeSet<SuperMonomial>,
    ) {
        if chosen.len() == symbols.len() {
            if let Some((m, _)) = SuperMonomial::from_factors(chosen) {
                seen.insert(m);
            }
            return;
        }
        let i = chosen.len();
        let mut used = std::collections::BTreeSet::new();
        for j in 0..remaining.len() {
            let place = remaining[j];
            if !used.insert(place) {
                continue;
            }
            remaining.swap_remove(j);
            chosen.push(Variable::new(symbols[i], place));
            rec(symbols, remaining, chosen, seen);
            chosen.pop();
            remaining.push(place);
            let last = remaining.len() - 1;
            remaining.swap(j, last);
        }
    }
    rec(&symbols, &mut places.clone(), &mut Vec::new(), &mut seen);
    seen.len()
}

/// Rank of the value vectors of the given bitableaux.
pub fn value_rank(bitableaux: &[Bitableau]) -> usize {
    let mut index: BTreeMap<SuperMonomial, usize> = BTreeMap::new();
    for bt in bitableaux {
        for (m, _) in bt.value.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rat::zero(); bitableaux.len()]; index.len()];
    for (col, bt) in bitableaux.iter().enumerate() {
        for (m, c) in bt.value.terms() {
            rows[index[m]][col] = c.clone();
        }
    }
    linalg::rank(&rows)
}

/// The straightening partial order: (P|Q) ≤ (S|T) iff the shape of P
/// precedes lexicographically, or the shapes agree and both row words of
/// (P|Q) weakly follow both row words of (S|T) lexicographically (later row
/// words are smaller).
pub fn straightening_leq(
    p: (&Tableau<Symbol>, &Tableau<u32>),
    s: (&Tableau<Symbol>, &Tableau<u32>),
) -> bool {
    let sp = p.0.shape().parts();
    let ss = s.0.shape().parts();
    if sp < ss {
        return true;
    }
    if sp > ss {
        return false;
    }
    p.0.row_word() >= s.0.row_word() && p.1.row_word() >= s.1.row_word()
}

/// Reads the scalar c with p = c·reference, comparing monomial-wise.
pub fn extract_scalar(p: &SuperPolynomial, reference: &SuperPolynomial) -> Result<Rat> {
    if reference.is_zero() {
        return Err(Error::NotProportional("zero reference".into()));
    }
    if p.is_zero() {
        return Ok(Rat::zero());
    }
    let (m, c_ref) = reference.terms().next().expect("nonzero reference");
    let c_p = p.coefficient(m);
    let scalar = c_p / c_ref.clone();
    if reference.scale(&scalar) == *p {
        Ok(scalar)
    } else {
        Err(Error::NotProportional(
            "supports or coefficients disagree".into(),
        ))
    }
}

/// The bitableau monomial e_{S,T}: row-major product of e_{S(i,j),T(i,j)}.
pub fn bitableau_word(s: &Tableau<Symbol>, t: &Tableau<Symbol>) -> Result<UWord> {
    if s.shape() != t.shape() {
        return Err(Error::InvalidSpec(format!(
            "bitableau monomial requires equal shapes, got {} and {}",
            s.shape(),
            t.shape()
        )));
    }
    let mut word = Vec::with_capacity(s.shape().weight() as usize);
    for (srow, trow) in s.rows().iter().zip(t.rows()) {
        for (&a, &b) in srow.iter().zip(trow) {
            word.push(UGenerator::new(a, b));
        }
    }
    Ok(UWord(word))
}

/// o_S: the product over columns of the factorials of the symbol
/// multiplicities in that column.
pub fn column_repetition_factor(s: &Tableau<Symbol>) -> Rat {
    let cols = s.shape().first_part() as usize;
    let mut out = Rat::from_integer(1.into());
    for c in 0..cols {
        let mut counts: BTreeMap<Symbol, u64> = BTreeMap::new();
        for row in s.rows() {
            if let Some(&e) = row.get(c) {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        for &m in counts.values() {
            out *= rat_factorial(m);
        }
    }
    out
}

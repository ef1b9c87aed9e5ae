//! The supersymmetric coordinate ring on the graded variables (a|j) as exact
//! signed monomials, together with superpolarization operators.
//!
//! Symbols carry two parities. The Lie parity grades the symbol inside the
//! Lie superalgebra (α and the auxiliary γ are even, β and the proper x are
//! odd); the variable (a|j) has the opposite parity, so (α|j) and (γ|j)
//! anticommute and square to zero while (β|j) and (x|j) commute. Operator
//! parities add Lie parities, and the two conventions agree on sums.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A letter of the graded alphabet A₀ ∪ A₁ ∪ L, plus the transient γ used by
/// biproducts. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// α_i ∈ A₀: even virtual symbol, odd variables.
    PositiveVirtual(u32),
    /// β_i ∈ A₁: odd virtual symbol, even variables.
    NegativeVirtual(u32),
    /// x_i ∈ L: odd proper symbol, even variables.
    Proper(u32),
    /// γ_i: auxiliary symbol used transiently by biproducts; like α it is
    /// even with odd variables, but it never appears in exported values.
    Auxiliary(u32),
}

impl Symbol {
    /// Z₂ degree of the symbol in the Lie superalgebra.
    pub fn lie_parity(&self) -> bool {
        matches!(self, Symbol::NegativeVirtual(_) | Symbol::Proper(_))
    }

    /// Z₂ degree of the variables (a|j): the flip of the Lie parity.
    pub fn variable_parity(&self) -> bool {
        !self.lie_parity()
    }

    pub fn is_virtual(&self) -> bool {
        !matches!(self, Symbol::Proper(_))
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, Symbol::Proper(_))
    }

    pub fn index(&self) -> u32 {
        match self {
            Symbol::PositiveVirtual(i)
            | Symbol::NegativeVirtual(i)
            | Symbol::Proper(i)
            | Symbol::Auxiliary(i) => *i,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::PositiveVirtual(i) => write!(f, "a{i}"),
            Symbol::NegativeVirtual(i) => write!(f, "b{i}"),
            Symbol::Proper(i) => write!(f, "x{i}"),
            Symbol::Auxiliary(i) => write!(f, "g{i}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, idx) = s.split_at(1);
        let i: u32 = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad symbol {s:?}")))?;
        match kind {
            "a" => Ok(Symbol::PositiveVirtual(i)),
            "b" => Ok(Symbol::NegativeVirtual(i)),
            "x" => Ok(Symbol::Proper(i)),
            "g" => Ok(Symbol::Auxiliary(i)),
            _ => Err(Error::Parse(format!("bad symbol {s:?}"))),
        }
    }
}

/// A generator (a|j) of the coordinate ring. Canonical order: place first,
/// then symbol kind and index, which fixes the normal form of monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variable {
    pub symbol: Symbol,
    pub place: u32,
}

impl Variable {
    pub fn new(symbol: Symbol, place: u32) -> Self {
        Variable { symbol, place }
    }

    pub fn is_odd(&self) -> bool {
        self.symbol.variable_parity()
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.place, self.symbol).cmp(&(other.place, other.symbol))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.symbol, self.place)
    }
}

/// Ring parameters: m₀ even virtual symbols, m₁ odd virtual symbols, n proper
/// symbols, d places.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    pub even_virtuals: u32,
    pub odd_virtuals: u32,
    pub proper: u32,
    pub places: u32,
}

impl Ring {
    pub fn new(even_virtuals: u32, odd_virtuals: u32, proper: u32, places: u32) -> Self {
        Ring {
            even_virtuals,
            odd_virtuals,
            proper,
            places,
        }
    }

    pub fn admits_symbol(&self, s: Symbol) -> bool {
        match s {
            Symbol::PositiveVirtual(i) => i >= 1 && i <= self.even_virtuals,
            Symbol::NegativeVirtual(i) => i >= 1 && i <= self.odd_virtuals,
            Symbol::Proper(i) => i >= 1 && i <= self.proper,
            // The auxiliary alphabet is always available; exported values
            // must not contain it.
            Symbol::Auxiliary(_) => true,
        }
    }

    pub fn check_symbol(&self, s: Symbol) -> Result<()> {
        if self.admits_symbol(s) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange(s.to_string()))
        }
    }

    pub fn check_place(&self, place: u32) -> Result<()> {
        if place >= 1 && place <= self.places {
            Ok(())
        } else {
            Err(Error::PlaceOutOfRange {
                place,
                d: self.places,
            })
        }
    }
}

/// A normalized monomial: odd variables strictly increasing (square-zero),
/// even variables weakly increasing, in the global variable order. The
/// monomial denotes the product of the odd part followed by the even part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMonomial {
    odd: Vec<Variable>,
    even: Vec<Variable>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial {
            odd: Vec::new(),
            even: Vec::new(),
        }
    }

    /// Normalizes a factor sequence, counting the odd-odd transpositions used
    /// to sort it. Returns `None` when an odd variable repeats.
    pub fn from_factors(factors: &[Variable]) -> Option<(Self, bool)> {
        let mut odd: Vec<Variable> = Vec::new();
        let mut negative = false;
        for &v in factors.iter().filter(|v| v.is_odd()) {
            // Insertion sort; each displaced odd factor flips the sign.
            let pos = odd.partition_point(|&u| u <= v);
            if pos > 0 && odd[pos - 1] == v {
                return None;
            }
            if (odd.len() - pos) % 2 == 1 {
                negative = !negative;
            }
            odd.insert(pos, v);
        }
        let mut even: Vec<Variable> = factors.iter().filter(|v| !v.is_odd()).copied().collect();
        even.sort_unstable();
        Some((SuperMonomial { odd, even }, negative))
    }

    /// Factors in canonical product order (odd part, then even part).
    pub fn factors(&self) -> Vec<Variable> {
        self.odd.iter().chain(self.even.iter()).copied().collect()
    }

    pub fn degree(&self) -> usize {
        self.odd.len() + self.even.len()
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_empty() && self.even.is_empty()
    }

    pub fn contains_auxiliary(&self) -> bool {
        self.factors()
            .iter()
            .any(|v| matches!(v.symbol, Symbol::Auxiliary(_)))
    }

    /// Multiset of symbols appearing in the monomial.
    pub fn symbol_content(&self) -> BTreeMap<Symbol, usize> {
        let mut out = BTreeMap::new();
        for v in self.factors() {
            *out.entry(v.symbol).or_insert(0) += 1;
        }
        out
    }

    /// Multiset of places appearing in the monomial.
    pub fn place_content(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for v in self.factors() {
            *out.entry(v.place).or_insert(0) += 1;
        }
        out
    }

    fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        // Sign: each pair (u, v), u from self's odd part, v from other's odd
        // part with v < u, is an odd-odd transposition in the merge.
        let mut negative = false;
        let mut inv = 0usize;
        for &u in &self.odd {
            inv += other.odd.partition_point(|&v| v < u);
        }
        if inv % 2 == 1 {
            negative = true;
        }
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() && j < other.odd.len() {
            match self.odd[i].cmp(&other.odd[j]) {
                std::cmp::Ordering::Less => {
                    odd.push(self.odd[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    odd.push(other.odd[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&other.odd[j..]);
        let mut even = self.even.clone();
        even.extend_from_slice(&other.even);
        even.sort_unstable();
        Some((SuperMonomial { odd, even }, negative))
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for v in self.factors() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// An exact rational combination of normalized monomials in a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    ring: Ring,
    terms: BTreeMap<SuperMonomial, Rat>,
}

impl SuperPolynomial {
    pub fn zero(ring: Ring) -> Self {
        SuperPolynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rat::from_integer(1.into()))
    }

    pub fn constant(ring: Ring, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SuperMonomial::one(), c);
        }
        SuperPolynomial { ring, terms }
    }

    /// The generator (symbol|place), bounds-checked against the ring.
    pub fn variable(ring: Ring, symbol: Symbol, place: u32) -> Result<Self> {
        ring.check_symbol(symbol)?;
        ring.check_place(place)?;
        let (m, neg) = SuperMonomial::from_factors(&[Variable::new(symbol, place)])
            .expect("single factor cannot vanish");
        debug_assert!(!neg);
        let mut terms = BTreeMap::new();
        terms.insert(m, Rat::from_integer(1.into()));
        Ok(SuperPolynomial { ring, terms })
    }

    /// The product of the given factors with the given coefficient.
    pub fn from_factors(ring: Ring, factors: &[Variable], coeff: Rat) -> Result<Self> {
        for v in factors {
            ring.check_symbol(v.symbol)?;
            ring.check_place(v.place)?;
        }
        let mut out = SuperPolynomial::zero(ring);
        if let Some((m, neg)) = SuperMonomial::from_factors(factors) {
            let c = if neg { -coeff } else { coeff };
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn contains_auxiliary(&self) -> bool {
        self.terms.keys().any(|m| m.contains_auxiliary())
    }

    fn insert(&mut self, m: SuperMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
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

    pub fn try_add(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.try_add(other).expect("ring mismatch in add")
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SuperPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        SuperPolynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn scale(&self, c: &Rat) -> SuperPolynomial {
        if c.is_zero() {
            return SuperPolynomial::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
            .collect();
        SuperPolynomial {
            ring: self.ring,
            terms,
        }
    }

    fn check_ring(&self, other: &SuperPolynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )))
        }
    }

    /// Sign-correct product; odd variables square to zero. Errors when the
    /// ring parameters differ.
    pub fn try_mul(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check_ring(other)?;
        let mut out = SuperPolynomial::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2) {
                    let mut c = c1.clone() * c2.clone();
                    if neg {
                        c = -c;
                    }
                    out.insert(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.try_mul(other).expect("ring mismatch in mul")
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", crate::rational::rat_to_string(c), m)?;
        }
        Ok(())
    }
}

/// The superpolarization D_{target,source}: the left superderivation sending
/// (source|j) to (target|j).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Polarization {
    pub target: Symbol,
    pub source: Symbol,
}

impl Polarization {
    pub fn new(target: Symbol, source: Symbol) -> Self {
        Polarization { target, source }
    }

    /// Operator parity |D| = |target| + |source| in Lie parities.
    pub fn parity(&self) -> bool {
        self.target.lie_parity() ^ self.source.lie_parity()
    }
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{},{}]", self.target, self.source)
    }
}

/// Applies the left superderivation D to the polynomial:
/// D(v₁⋯v_r) = Σ_i (−1)^{|D|(|v₁|+…+|v_{i−1}|)} v₁⋯D(v_i)⋯v_r.
pub fn polarize(d: Polarization, p: &SuperPolynomial) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(p.ring());
    for (m, c) in p.terms() {
        let factors = m.factors();
        let mut prefix_odd = 0usize;
        for (i, v) in factors.iter().enumerate() {
            if v.symbol == d.source {
                let mut replaced = factors.clone();
                replaced[i] = Variable::new(d.target, v.place);
                if let Some((nm, neg)) = SuperMonomial::from_factors(&replaced) {
                    let mut coeff = c.clone();
                    if neg {
                        coeff = -coeff;
                    }
                    if d.parity() && prefix_odd % 2 == 1 {
                        coeff = -coeff;
                    }
                    out.insert(nm, coeff);
                }
            }
            if v.is_odd() {
                prefix_odd += 1;
            }
        }
    }
    out
}

/// Applies a word of polarizations, rightmost operator first, matching the
/// convention that in an operator word the rightmost factor acts first.
pub fn apply_word(ops: &[Polarization], p: &SuperPolynomial) -> SuperPolynomial {
    let mut cur = p.clone();
    for d in ops.iter().rev() {
        cur = polarize(*d, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ring() -> Ring {
        Ring::new(2, 2, 3, 3)
    }

    fn var(ring: Ring, s: Symbol, j: u32) -> SuperPolynomial {
        SuperPolynomial::variable(ring, s, j).unwrap()
    }

    #[test]
    fn odd_square_is_zero() {
        let r = ring();
        let a = var(r, Symbol::PositiveVirtual(1), 1);
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn odd_variables_anticommute() {
        let r = ring();
        let a1 = var(r, Symbol::PositiveVirtual(1), 1);
        let a2 = var(r, Symbol::PositiveVirtual(1), 2);
        let left = a2.mul(&a1);
        let right = a1.mul(&a2).neg();
        assert_eq!(left, right);
        assert!(!left.is_zero());
    }

    #[test]
    fn even_variables_commute() {
        let r = ring();
        let x1 = var(r, Symbol::Proper(1), 1);
        let x2 = var(r, Symbol::Proper(2), 1);
        assert_eq!(x1.mul(&x2), x2.mul(&x1));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let p = var(ring(), Symbol::Proper(1), 1);
        let q = var(Ring::new(1, 1, 1, 1), Symbol::Proper(1), 1);
        assert!(matches!(p.try_mul(&q), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn out_of_range_symbols_rejected() {
        assert!(SuperPolynomial::variable(ring(), Symbol::Proper(7), 1).is_err());
        assert!(SuperPolynomial::variable(ring(), Symbol::Proper(1), 9).is_err());
    }

    #[test]
    fn polarize_generator_rule() {
        let r = ring();
        let x1 = var(r, Symbol::Proper(1), 3);
        let d = Polarization::new(Symbol::Proper(2), Symbol::Proper(1));
        assert_eq!(polarize(d, &x1), var(r, Symbol::Proper(2), 3));

        let constant = SuperPolynomial::one(r);
        assert!(polarize(d, &constant).is_zero());
    }

    #[test]
    fn polarize_on_auxiliary_pair() {
        // D_{x₁,γ}((γ|1)(γ|2)) = (x₁|1)(γ|2) − (γ|1)(x₁|2): the operator is
        // odd and the γ variables anticommute.
        let r = ring();
        let g = |j| var(r, Symbol::Auxiliary(1), j);
        let p = g(1).mul(&g(2));
        let d = Polarization::new(Symbol::Proper(1), Symbol::Auxiliary(1));
        let got = polarize(d, &p);
        let expected = var(r, Symbol::Proper(1), 1)
            .mul(&g(2))
            .sub(&g(1).mul(&var(r, Symbol::Proper(1), 2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn apply_word_examples() {
        let r = ring();
        let g = |j| var(r, Symbol::Auxiliary(1), j);
        let p = g(1).mul(&g(2));
        assert_eq!(apply_word(&[], &p), p);

        // Rightmost-first composition: [D_{x₁,γ}, D_{x₂,γ}] acting on
        // (γ|1)(γ|2) applies D_{x₂,γ} first. Oracle by full Leibniz
        // expansion: the composite replaces both γ's in each order.
        let d1 = Polarization::new(Symbol::Proper(1), Symbol::Auxiliary(1));
        let d2 = Polarization::new(Symbol::Proper(2), Symbol::Auxiliary(1));
        let x = |i, j| var(r, Symbol::Proper(i), j);
        let got = apply_word(&[d1, d2], &p);
        // D_{x₂,γ}(p) = (x₂|1)(γ|2) − (γ|1)(x₂|2); then D_{x₁,γ} hits the
        // remaining γ with prefix sign +1 in both canonical orderings.
        let expected = x(1, 2).mul(&x(2, 1)).add(&x(1, 1).mul(&x(2, 2)).neg());
        assert_eq!(got, expected);

        // Annihilation: a word consuming a symbol absent from p acts as 0.
        let dx = Polarization::new(Symbol::Proper(1), Symbol::NegativeVirtual(1));
        assert!(apply_word(&[dx], &p).is_zero());
    }

    #[test]
    fn monomial_display() {
        let r = ring();
        let m = var(r, Symbol::Proper(1), 2).mul(&var(r, Symbol::PositiveVirtual(1), 1));
        let (mono, coeff) = m.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        assert_eq!(mono.to_string(), "(a1|1)(x1|2)");
        assert_eq!(coeff, rat(1));
    }
}

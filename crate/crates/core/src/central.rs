//! The five central families as sums of balanced polarization words, with
//! eigenvalue computation by operator action and by closed formulas, and the
//! H↔I duality.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::One;

use crate::enveloping::{act_on_module, UGenerator, UWord};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::partitions::{
    e_star_eval, gamma_statistic, h_star_eval, partitions_up_to, Partition, Permutation,
};
use crate::rational::{rat, rat_factorial, Rat};
use crate::superalgebra::{Ring, Symbol};
use crate::tableaux::{
    bitableau_word, column_repetition_factor, column_weak_tableaux, extract_scalar,
    highest_weight_vector_in, row_strict_tableaux, virtual_coderuyts, virtual_deruyts,
};

/// Cap on materialized program summands; enumeration past this is refused
/// rather than ground through.
const MAX_SUMMANDS: usize = 200_000;

/// A central element description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralSpec {
    /// Determinantal Capelli generator H_k.
    H(usize),
    /// Permanental Nazarov/Umeda element I_k.
    I(usize),
    /// Shaped Capelli determinantal element K_λ.
    K(Partition),
    /// Shaped Nazarov/Umeda permanental element J_λ.
    J(Partition),
    /// Schur element S_λ.
    S(Partition),
    /// Product of central elements; the empty product is the identity.
    Product(Vec<CentralSpec>),
    /// One signed column bitableau summand, with σ a permutation of the
    /// support.
    ColumnBitableau {
        support: Vec<u32>,
        sigma: Permutation,
    },
}

impl CentralSpec {
    pub fn validate(&self, n: u32) -> Result<()> {
        match self {
            CentralSpec::H(k) | CentralSpec::I(k) => {
                if *k < 1 {
                    return Err(Error::InvalidSpec("k must be positive".into()));
                }
            }
            CentralSpec::K(l) | CentralSpec::J(l) | CentralSpec::S(l) => {
                if l.first_part() > n {
                    return Err(Error::InvalidSpec(format!(
                        "shape {l} does not fit in n = {n} columns"
                    )));
                }
            }
            CentralSpec::Product(fs) => {
                for f in fs {
                    f.validate(n)?;
                }
            }
            CentralSpec::ColumnBitableau { support, sigma } => {
                if support.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidSpec(
                        "support must be strictly increasing".into(),
                    ));
                }
                if support.iter().any(|&i| i < 1 || i > n) {
                    return Err(Error::InvalidSpec("support outside 1..=n".into()));
                }
                if sigma.support() != *support {
                    return Err(Error::InvalidSpec(
                        "permutation support differs from the declared support".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Filtration degree: the word length of the devirtualized image.
    pub fn filtration_degree(&self) -> usize {
        match self {
            CentralSpec::H(k) | CentralSpec::I(k) => *k,
            CentralSpec::K(l) | CentralSpec::J(l) | CentralSpec::S(l) => l.weight() as usize,
            CentralSpec::Product(fs) => fs.iter().map(CentralSpec::filtration_degree).sum(),
            CentralSpec::ColumnBitableau { support, .. } => support.len(),
        }
    }

    /// Virtual symbol budgets (m₀, m₁) needed by the program.
    pub fn virtual_budgets(&self) -> (u32, u32) {
        match self {
            CentralSpec::H(_) => (1, 0),
            CentralSpec::I(_) => (0, 1),
            CentralSpec::K(l) => (l.len() as u32, 0),
            CentralSpec::J(l) => (0, l.len() as u32),
            CentralSpec::S(l) => (l.len() as u32, l.first_part()),
            CentralSpec::Product(fs) => fs.iter().fold((0, 0), |(a, b), f| {
                let (x, y) = f.virtual_budgets();
                (a.max(x), b.max(y))
            }),
            CentralSpec::ColumnBitableau { support, .. } => (support.len() as u32, 0),
        }
    }
}

impl fmt::Display for CentralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralSpec::H(k) => write!(f, "H:{k}"),
            CentralSpec::I(k) => write!(f, "I:{k}"),
            CentralSpec::K(l) => write!(f, "K:{l}"),
            CentralSpec::J(l) => write!(f, "J:{l}"),
            CentralSpec::S(l) => write!(f, "S:{l}"),
            CentralSpec::Product(fs) if fs.is_empty() => write!(f, "1"),
            CentralSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
            CentralSpec::ColumnBitableau { support, sigma } => {
                write!(f, "colbit[{:?} via {:?}]", support, sigma.support())
            }
        }
    }
}

impl FromStr for CentralSpec {
    type Err = Error;

    /// Text syntax: `H:2`, `I:3`, `K:2,1`, `J:2,2`, `S:3,1`, products
    /// `H:2*I:1`, and `1` for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let factors: Vec<&str> = s.split('*').map(str::trim).collect();
        let parse_atom = |atom: &str| -> Result<CentralSpec> {
            if atom == "1" {
                return Ok(CentralSpec::Product(Vec::new()));
            }
            let (family, arg) = atom
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad spec atom {atom:?}")))?;
            match family.trim() {
                "H" => Ok(CentralSpec::H(
                    arg.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index in {atom:?}")))?,
                )),
                "I" => Ok(CentralSpec::I(
                    arg.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index in {atom:?}")))?,
                )),
                "K" => Ok(CentralSpec::K(arg.parse()?)),
                "J" => Ok(CentralSpec::J(arg.parse()?)),
                "S" => Ok(CentralSpec::S(arg.parse()?)),
                other => Err(Error::Parse(format!("unknown family {other:?}"))),
            }
        };
        if factors.len() == 1 {
            parse_atom(factors[0])
        } else {
            Ok(CentralSpec::Product(
                factors
                    .into_iter()
                    .map(parse_atom)
                    .collect::<Result<Vec<_>>>()?,
            ))
        }
    }
}

/// A virtual presentation: a weighted list of balanced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualProgram {
    pub summands: Vec<(Rat, UWord)>,
}

impl VirtualProgram {
    pub fn to_element(&self) -> crate::enveloping::UElement {
        let mut out = crate::enveloping::UElement::zero();
        for (c, w) in &self.summands {
            out.insert(w.clone(), c.clone());
        }
        out
    }
}

fn proper_alphabet(n: u32) -> Vec<Symbol> {
    (1..=n).map(Symbol::Proper).collect()
}

/// Compositions of `k` into `n` nonnegative parts.
fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for h in 0..=k {
            prefix.push(h);
            rec(k - h, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, n, &mut Vec::new(), &mut out);
    out
}

/// Builds the virtual presentation of a central element in dimension n.
pub fn build_program(spec: &CentralSpec, n: u32) -> Result<VirtualProgram> {
    spec.validate(n)?;
    let summands = program_summands(spec, n)?;
    Ok(VirtualProgram { summands })
}

fn guard(len: usize) -> Result<()> {
    if len > MAX_SUMMANDS {
        Err(Error::TooLarge(format!("{len} summands")))
    } else {
        Ok(())
    }
}

fn program_summands(spec: &CentralSpec, n: u32) -> Result<Vec<(Rat, UWord)>> {
    let alpha = Symbol::PositiveVirtual(1);
    let beta = Symbol::NegativeVirtual(1);
    let mut out: Vec<(Rat, UWord)> = Vec::new();
    match spec {
        CentralSpec::H(k) => {
            for combo in (1..=n).combinations(*k) {
                let mut word = Vec::with_capacity(2 * k);
                for &i in combo.iter().rev() {
                    word.push(UGenerator::new(Symbol::Proper(i), alpha));
                }
                for &i in &combo {
                    word.push(UGenerator::new(alpha, Symbol::Proper(i)));
                }
                out.push((Rat::one(), UWord(word)));
            }
        }
        CentralSpec::I(k) => {
            for h in compositions(*k, n as usize) {
                let mut word = Vec::with_capacity(2 * k);
                for j in (1..=n as usize).rev() {
                    for _ in 0..h[j - 1] {
                        word.push(UGenerator::new(Symbol::Proper(j as u32), beta));
                    }
                }
                for (j, &mult) in h.iter().enumerate() {
                    for _ in 0..mult {
                        word.push(UGenerator::new(beta, Symbol::Proper(j as u32 + 1)));
                    }
                }
                let coeff: Rat = h
                    .iter()
                    .map(|&m| rat_factorial(m as u64))
                    .fold(Rat::one(), |a, b| a * b)
                    .recip();
                out.push((coeff, UWord(word)));
                guard(out.len())?;
            }
        }
        CentralSpec::K(l) => {
            let coderuyts = virtual_coderuyts(l);
            for s in row_strict_tableaux(l, &proper_alphabet(n)) {
                let mut word = bitableau_word(&s, &coderuyts)?.0;
                word.extend(bitableau_word(&coderuyts, &s)?.0);
                out.push((Rat::one(), UWord(word)));
                guard(out.len())?;
            }
        }
        CentralSpec::J(l) => {
            let conj = l.conjugate();
            let deruyts = virtual_deruyts(&conj);
            for s in column_weak_tableaux(&conj, &proper_alphabet(n)) {
                let coeff = column_repetition_factor(&s).recip();
                let mut word = bitableau_word(&s, &deruyts)?.0;
                word.extend(bitableau_word(&deruyts, &s)?.0);
                out.push((coeff, UWord(word)));
                guard(out.len())?;
            }
        }
        CentralSpec::S(l) => {
            let coderuyts = virtual_coderuyts(l);
            let deruyts = virtual_deruyts(l);
            let middle: Vec<UGenerator> = {
                let mut w = bitableau_word(&coderuyts, &deruyts)?.0;
                w.extend(bitableau_word(&deruyts, &coderuyts)?.0);
                w
            };
            let coeff = rat(l.hook_number() as i64).recip();
            for s in row_strict_tableaux(l, &proper_alphabet(n)) {
                let mut word = bitableau_word(&s, &coderuyts)?.0;
                word.extend_from_slice(&middle);
                word.extend(bitableau_word(&coderuyts, &s)?.0);
                out.push((coeff.clone(), UWord(word)));
                guard(out.len())?;
            }
        }
        CentralSpec::Product(fs) => {
            out.push((Rat::one(), UWord::one()));
            for f in fs {
                let factor = program_summands(f, n)?;
                let mut next = Vec::with_capacity(out.len() * factor.len());
                for (c1, w1) in &out {
                    for (c2, w2) in &factor {
                        let mut w = w1.0.clone();
                        w.extend_from_slice(&w2.0);
                        next.push((c1.clone() * c2.clone(), UWord(w)));
                    }
                }
                guard(next.len())?;
                out = next;
            }
        }
        CentralSpec::ColumnBitableau { support, sigma } => {
            let k = support.len();
            let mut word = Vec::with_capacity(2 * k);
            for (t, &i) in support.iter().enumerate() {
                word.push(UGenerator::new(
                    Symbol::Proper(i),
                    Symbol::PositiveVirtual(t as u32 + 1),
                ));
            }
            for (t, &i) in support.iter().enumerate() {
                word.push(UGenerator::new(
                    Symbol::PositiveVirtual(t as u32 + 1),
                    Symbol::Proper(sigma.image(i)),
                ));
            }
            let mut sign = sigma.sign();
            if (k * (k - 1) / 2) % 2 == 1 {
                sign = -sign;
            }
            out.push((rat(sign), UWord(word)));
        }
    }
    Ok(out)
}

/// The eigenvalue of the central element on the Schur module of shape μ,
/// read off by acting on the canonical highest weight vector.
pub fn eigenvalue_action(spec: &CentralSpec, mu: &Partition, n: u32) -> Result<Rat> {
    spec.validate(n)?;
    if mu.first_part() > n {
        return Err(Error::InvalidPartition(format!(
            "first part of {mu} exceeds n = {n}"
        )));
    }
    let (m0, m1) = spec.virtual_budgets();
    let ring = Ring::new(m0, m1, n, mu.first_part());
    let v = highest_weight_vector_in(ring, mu)?;

    // Products fold factor by factor; each central factor scales the highest
    // weight vector, and this matches the action of the concatenated words.
    let factors: Vec<&CentralSpec> = match spec {
        CentralSpec::Product(fs) => fs.iter().collect(),
        _ => vec![spec],
    };
    let mut current = v.clone();
    for f in factors.iter().rev() {
        let program = build_program(f, n)?;
        let element = program.to_element();
        current = act_on_module(&element, &current)?;
        if current.is_zero() {
            break;
        }
    }
    extract_scalar(&current, &v)
}

/// The eigenvalue by the closed formula route, for the families that have
/// one: H via e*, I via h*, S on weights ≤ |λ| by orthogonality, column
/// bitableaux via the Γ statistic. K and J have no closed form.
pub fn eigenvalue_closed(spec: &CentralSpec, mu: &Partition, n: u32) -> Result<Rat> {
    spec.validate(n)?;
    if mu.first_part() > n {
        return Err(Error::InvalidPartition(format!(
            "first part of {mu} exceeds n = {n}"
        )));
    }
    match spec {
        CentralSpec::H(k) => {
            if *k > n as usize {
                return Ok(rat(0));
            }
            let point = mu.conjugate_padded(n as usize)?;
            Ok(rat(e_star_eval(*k, &point)?))
        }
        CentralSpec::I(k) => {
            let point = mu.conjugate_padded(n as usize)?;
            Ok(rat(h_star_eval(*k, &point)))
        }
        CentralSpec::S(l) => {
            if !mu.contains(l) {
                return Ok(rat(0));
            }
            if mu.weight() == l.weight() {
                // Containment at equal weight forces μ = λ.
                return Ok(rat(l.hook_number() as i64));
            }
            Err(Error::NoClosedForm(format!("{spec} at weight above |λ|")))
        }
        CentralSpec::K(_) | CentralSpec::J(_) => Err(Error::NoClosedForm(spec.to_string())),
        CentralSpec::Product(fs) => {
            let mut out = Rat::one();
            for f in fs {
                out *= eigenvalue_closed(f, mu, n)?;
            }
            Ok(out)
        }
        CentralSpec::ColumnBitableau { sigma, .. } => Ok(rat(gamma_statistic(mu, sigma))),
    }
}

/// The duality automorphism: H_k ↔ I_k, S_λ ↦ S_λ̃, products map
/// factor-wise. K and J have no stated image.
pub fn duality_map(spec: &CentralSpec) -> Result<CentralSpec> {
    match spec {
        CentralSpec::H(k) => Ok(CentralSpec::I(*k)),
        CentralSpec::I(k) => Ok(CentralSpec::H(*k)),
        CentralSpec::S(l) => Ok(CentralSpec::S(l.conjugate())),
        CentralSpec::Product(fs) => Ok(CentralSpec::Product(
            fs.iter().map(duality_map).collect::<Result<Vec<_>>>()?,
        )),
        CentralSpec::K(_) | CentralSpec::J(_) | CentralSpec::ColumnBitableau { .. } => {
            Err(Error::UnsupportedDuality(spec.to_string()))
        }
    }
}

/// Decides equality of two central elements by eigenvalue agreement on all
/// μ with μ₁ ≤ n and |μ| ≤ 2·max filtration degree. The weight bound is
/// certified by checking that those points interpolate polynomials of the
/// filtration degree (full rank), so agreement there pins the χ images.
pub fn central_elements_equal(a: &CentralSpec, b: &CentralSpec, n: u32) -> Result<bool> {
    let degree = a.filtration_degree().max(b.filtration_degree()) as u32;
    let max_weight = 2 * degree;
    let monomials = monomial_count_certificate(n as usize, degree, max_weight)?;
    debug_assert!(monomials);
    for mu in partitions_up_to(max_weight, Some(n)) {
        if eigenvalue_action(a, &mu, n)? != eigenvalue_action(b, &mu, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that the padded conjugate points of weight ≤ max_weight have full
/// rank against monomials of degree ≤ degree.
fn monomial_count_certificate(n: usize, degree: u32, max_weight: u32) -> Result<bool> {
    fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
        fn rec(vars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == vars {
                out.push(prefix.clone());
                return;
            }
            let used: u32 = prefix.iter().sum();
            for p in 0..=(degree - used) {
                prefix.push(p);
                rec(vars, degree, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(vars, degree, &mut Vec::new(), &mut out);
        out
    }
    let monos = monomials(n, degree);
    let mut basis = EchelonBasis::new(monos.len());
    for mu in partitions_up_to(max_weight, Some(n as u32)) {
        let point = mu.conjugate_padded(n)?;
        let row: Vec<Rat> = monos
            .iter()
            .map(|e| {
                let mut v = Rat::one();
                for (&p, &x) in e.iter().zip(&point) {
                    for _ in 0..p {
                        v *= rat(x);
                    }
                }
                v
            })
            .collect();
        basis.try_insert(&row);
        if basis.rank() == monos.len() {
            return Ok(true);
        }
    }
    Err(Error::Interpolation(format!(
        "weight bound {max_weight} does not pin degree {degree} in {n} variables"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn h2_program_shape() {
        let program = build_program(&CentralSpec::H(2), 2).unwrap();
        assert_eq!(program.summands.len(), 1);
        assert_eq!(program.summands[0].1.len(), 4);
    }

    #[test]
    fn i3_program_has_ten_weighted_summands() {
        let program = build_program(&CentralSpec::I(3), 3).unwrap();
        assert_eq!(program.summands.len(), 10);
        let sixth: Rat = rat_factorial(3).recip();
        let count_sixth = program
            .summands
            .iter()
            .filter(|(c, _)| *c == sixth)
            .count();
        // The three pure powers [iii|iii] carry 1/3!.
        assert_eq!(count_sixth, 3);
    }

    #[test]
    fn s21_program_matches_paper_words() {
        let program = build_program(&CentralSpec::S(p(&[2, 1])), 2).unwrap();
        assert_eq!(program.summands.len(), 2);
        let third: Rat = rat(3).recip();
        for (c, w) in &program.summands {
            assert_eq!(*c, third);
            assert_eq!(w.len(), 12);
        }
        let a = |i| Symbol::PositiveVirtual(i);
        let b = |i| Symbol::NegativeVirtual(i);
        let x = |i| Symbol::Proper(i);
        let e = |r, c| UGenerator::new(r, c);
        let first = UWord(vec![
            e(x(1), a(1)),
            e(x(2), a(1)),
            e(x(1), a(2)),
            e(a(1), b(1)),
            e(a(1), b(2)),
            e(a(2), b(1)),
            e(b(1), a(1)),
            e(b(2), a(1)),
            e(b(1), a(2)),
            e(a(1), x(1)),
            e(a(1), x(2)),
            e(a(2), x(1)),
        ]);
        assert!(program.summands.iter().any(|(_, w)| *w == first));
    }

    #[test]
    fn eigenvalue_h2_on_32_is_12() {
        let got = eigenvalue_action(&CentralSpec::H(2), &p(&[3, 2]), 3).unwrap();
        assert_eq!(got, rat(12));
        let closed = eigenvalue_closed(&CentralSpec::H(2), &p(&[3, 2]), 3).unwrap();
        assert_eq!(closed, rat(12));
    }

    #[test]
    fn eigenvalue_i2_on_221_is_12() {
        let got = eigenvalue_action(&CentralSpec::I(2), &p(&[2, 2, 1]), 3).unwrap();
        assert_eq!(got, rat(12));
        let closed = eigenvalue_closed(&CentralSpec::I(2), &p(&[2, 2, 1]), 3).unwrap();
        assert_eq!(closed, rat(12));
    }

    #[test]
    fn schur_eigenvalue_on_own_shape_is_hook_number() {
        for shape in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let got = eigenvalue_action(&CentralSpec::S(shape.clone()), &shape, 2).unwrap();
            assert_eq!(got, rat(shape.hook_number() as i64));
        }
    }

    #[test]
    fn closed_form_vanishing_rules() {
        // H_k vanishes when μ₁ < k.
        assert_eq!(
            eigenvalue_closed(&CentralSpec::H(3), &p(&[2, 2]), 3).unwrap(),
            rat(0)
        );
        // I_k vanishes when μ̃₁ = ℓ(μ) < k.
        assert_eq!(
            eigenvalue_closed(&CentralSpec::I(3), &p(&[2, 2]), 3).unwrap(),
            rat(0)
        );
        // S_λ vanishes off its own weight class.
        assert_eq!(
            eigenvalue_closed(&CentralSpec::S(p(&[2, 1])), &p(&[3]), 3).unwrap(),
            rat(0)
        );
        assert!(matches!(
            eigenvalue_closed(&CentralSpec::K(p(&[1])), &p(&[1]), 2),
            Err(Error::NoClosedForm(_))
        ));
        assert!(matches!(
            eigenvalue_closed(&CentralSpec::S(p(&[1])), &p(&[2]), 2),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn duality_map_examples() {
        assert_eq!(duality_map(&CentralSpec::H(2)).unwrap(), CentralSpec::I(2));
        assert_eq!(
            duality_map(&CentralSpec::S(p(&[2, 1]))).unwrap(),
            CentralSpec::S(p(&[2, 1]))
        );
        assert_eq!(
            duality_map(&CentralSpec::S(p(&[3]))).unwrap(),
            CentralSpec::S(p(&[1, 1, 1]))
        );
        assert!(duality_map(&CentralSpec::K(p(&[1]))).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("H:2".parse::<CentralSpec>().unwrap(), CentralSpec::H(2));
        assert_eq!(
            "S:3,1".parse::<CentralSpec>().unwrap(),
            CentralSpec::S(p(&[3, 1]))
        );
        assert_eq!(
            "H:2*I:1".parse::<CentralSpec>().unwrap(),
            CentralSpec::Product(vec![CentralSpec::H(2), CentralSpec::I(1)])
        );
        assert_eq!(
            "1".parse::<CentralSpec>().unwrap(),
            CentralSpec::Product(vec![])
        );
        assert!("Q:2".parse::<CentralSpec>().is_err());
    }

    #[test]
    fn empty_partition_eigenvalues() {
        let empty = Partition::empty();
        assert_eq!(
            eigenvalue_action(&CentralSpec::H(1), &empty, 2).unwrap(),
            rat(0)
        );
        assert_eq!(
            eigenvalue_action(&CentralSpec::Product(vec![]), &empty, 2).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn product_eigenvalue_multiplies() {
        let mu = p(&[2, 1]);
        let h1 = eigenvalue_action(&CentralSpec::H(1), &mu, 2).unwrap();
        let i2 = eigenvalue_action(&CentralSpec::I(2), &mu, 2).unwrap();
        let product = CentralSpec::Product(vec![CentralSpec::H(1), CentralSpec::I(2)]);
        assert_eq!(eigenvalue_action(&product, &mu, 2).unwrap(), h1 * i2);
    }

    #[test]
    fn column_bitableau_action_is_gamma() {
        let support = vec![1u32, 2];
        for sigma in Permutation::all_of(&support) {
            let spec = CentralSpec::ColumnBitableau {
                support: support.clone(),
                sigma: sigma.clone(),
            };
            for mu in [p(&[2, 2]), p(&[2, 1]), p(&[1, 1])] {
                let action = eigenvalue_action(&spec, &mu, 2).unwrap();
                assert_eq!(action, rat(gamma_statistic(&mu, &sigma)), "σ on {mu}");
            }
        }
    }
}

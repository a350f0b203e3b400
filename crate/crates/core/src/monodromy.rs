//! Characteristic polynomials of local cusp monodromy from Puiseux pairs,
//! eigenvalue-order predicates, Fibonacci utilities, and the classification
//! of unicuspidal rational curves with one Puiseux pair.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The Puiseux pairs (m_1, n_1), ..., (m_g, n_g) of one cusp branch, in the
/// order written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSequence {
    pairs: Vec<(u64, u64)>,
}

impl PuiseuxSequence {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Validation("need at least one Puiseux pair".into()));
        }
        for &(m, n) in &pairs {
            if m == 0 || n < 2 {
                return Err(Error::Validation(format!(
                    "invalid Puiseux pair ({m},{n}): need m >= 1 and n >= 2"
                )));
            }
            if gcd(m, n) != 1 {
                return Err(Error::Validation(format!("Puiseux pair ({m},{n}) is not coprime")));
            }
        }
        Ok(PuiseuxSequence { pairs })
    }

    pub fn single(a: u64, b: u64) -> Result<Self> {
        Self::new(vec![(a, b)])
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Parse "m1,n1;m2,n2" as accepted on the command line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for chunk in text.split(';') {
            let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(Error::Syntax(format!("expected m,n in '{chunk}'")));
            }
            let m = parts[0].parse::<u64>().map_err(|e| Error::Syntax(e.to_string()))?;
            let n = parts[1].parse::<u64>().map_err(|e| Error::Syntax(e.to_string()))?;
            pairs.push((m, n));
        }
        Self::new(pairs)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

fn euler_phi(mut n: u64) -> u64 {
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// An integer polynomial stored as multiplicities of cyclotomic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicProduct {
    mult: BTreeMap<u64, u64>,
}

impl CyclotomicProduct {
    pub fn multiplicity(&self, order: u64) -> u64 {
        self.mult.get(&order).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.mult.iter().map(|(&k, &e)| (k, e))
    }

    pub fn degree(&self) -> u64 {
        self.mult.iter().map(|(&k, &e)| e * euler_phi(k)).sum()
    }

    /// Expand to an integer coefficient vector, constant term first. Exists
    /// for display and degree checks only.
    pub fn expand(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::one()];
        for (&k, &e) in &self.mult {
            let phi = cyclotomic_poly(k);
            for _ in 0..e {
                acc = poly_mul(&acc, &phi);
            }
        }
        acc
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, e) in &self.mult {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            write!(f, "Phi_{k}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// The k-th cyclotomic polynomial by recursive exact division of t^k - 1.
pub fn cyclotomic_poly(k: u64) -> Vec<BigInt> {
    assert!(k >= 1);
    if k == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    for d in divisors(k) {
        if d == k {
            continue;
        }
        num = poly_exact_div(&num, &cyclotomic_poly(d));
    }
    num
}

fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dl - 1] / &lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let delta = dj * &c;
                rem[i + j] -= delta;
            }
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// Characteristic polynomial of the local monodromy of a cusp with the given
/// Puiseux pairs: the product over i of P_{l_i, n_i}(t^{nu_{i+1}}) with
/// P_{l,n}(t) = (t^{ln} - 1)(t - 1) / ((t^l - 1)(t^n - 1)), where l_1 = m_1,
/// l_i = m_i + n_i (l_{i-1} n_{i-1} - m_{i-1}) and nu_i = n_i ... n_g.
///
/// Every (t^m - 1) contributes its cyclotomic divisors by inclusion-exclusion,
/// and the result is checked to have no negative multiplicities and no root
/// at t = 1 or t = -1.
pub fn le_delta(ps: &PuiseuxSequence) -> Result<CyclotomicProduct> {
    let pairs = ps.pairs();
    let g = pairs.len();
    // nu[i] = n_{i+1} * ... * n_g for the factor at index i (0-based), so the
    // last factor is substituted with exponent 1.
    let mut nu = vec![1u64; g];
    for i in (0..g.saturating_sub(1)).rev() {
        nu[i] = nu[i + 1] * pairs[i + 1].1;
    }
    let mut ell = vec![0u64; g];
    ell[0] = pairs[0].0;
    for i in 1..g {
        let (m_prev, n_prev) = pairs[i - 1];
        let (m_i, n_i) = pairs[i];
        ell[i] = m_i + n_i * (ell[i - 1] * n_prev - m_prev);
    }
    let mut mult: BTreeMap<u64, i64> = BTreeMap::new();
    let mut add = |m: u64, s: i64| {
        for k in divisors(m) {
            *mult.entry(k).or_insert(0) += s;
        }
    };
    for i in 0..g {
        let (l, n, v) = (ell[i], pairs[i].1, nu[i]);
        add(l * n * v, 1);
        add(v, 1);
        add(l * v, -1);
        add(n * v, -1);
    }
    let mut out = BTreeMap::new();
    for (k, e) in mult {
        if e < 0 {
            return Err(Error::NegativeMultiplicity { order: k, mult: e });
        }
        if e > 0 {
            if k <= 2 {
                return Err(Error::UnitRootInMonodromy(k));
            }
            out.insert(k, e as u64);
        }
    }
    Ok(CyclotomicProduct { mult: out })
}

/// True iff the monodromy has an eigenvalue of exact order `d`.
pub fn has_eigenvalue_of_order(delta: &CyclotomicProduct, d: u64) -> bool {
    delta.multiplicity(d) > 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisVerdict {
    /// The degree is even; no eigenvalue condition is needed.
    PassEven,
    /// The degree is odd and no cusp monodromy has an eigenvalue of order d.
    PassOrders,
    /// Offending cusps (indices into the input) with order-d eigenvalues.
    Fail { offending: Vec<usize> },
}

impl HypothesisVerdict {
    pub fn passed(&self) -> bool {
        !matches!(self, HypothesisVerdict::Fail { .. })
    }
}

/// Topological hypothesis behind the even-degree freeness criterion: the
/// degree is even, or it is odd and no local monodromy eigenvalue has order
/// exactly d.
pub fn cuspidal_freeness_hypothesis(d: u64, cusps: &[PuiseuxSequence]) -> Result<HypothesisVerdict> {
    if d % 2 == 0 {
        return Ok(HypothesisVerdict::PassEven);
    }
    let mut offending = Vec::new();
    for (i, c) in cusps.iter().enumerate() {
        if has_eigenvalue_of_order(&le_delta(c)?, d) {
            offending.push(i);
        }
    }
    if offending.is_empty() {
        Ok(HypothesisVerdict::PassOrders)
    } else {
        Ok(HypothesisVerdict::Fail { offending })
    }
}

/// Fibonacci numbers with a_0 = 0, a_1 = 1.
pub fn fibonacci(j: usize) -> BigInt {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for _ in 0..j {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Catalan's identity a_j^2 - a_{j-2} a_{j+2} = (-1)^j, checked in exact
/// arithmetic.
pub fn catalan_check(j: usize) -> bool {
    assert!(j >= 2);
    let lhs = fibonacci(j).pow(2) - fibonacci(j - 2) * fibonacci(j + 2);
    let rhs = if j % 2 == 0 { BigInt::one() } else { BigInt::from(-1) };
    lhs == rhs
}

/// The six realizable shapes of (a, b, d) for a unicuspidal rational curve
/// whose cusp has the single Puiseux pair (a, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnicuspidalCase {
    /// (d-1, d, d)
    Case1,
    /// (d/2, 2d-1, d), d even
    Case2,
    /// (a_{j-2}^2, a_j^2, a_{j-2} a_j), j >= 5 odd
    Case3 { j: usize },
    /// (a_{j-2}, a_{j+2}, a_j), j >= 5 odd
    Case4 { j: usize },
    /// (3, 22, 8)
    Case5,
    /// (6, 43, 16)
    Case6,
}

impl UnicuspidalCase {
    pub fn label(&self) -> usize {
        match self {
            UnicuspidalCase::Case1 => 1,
            UnicuspidalCase::Case2 => 2,
            UnicuspidalCase::Case3 { .. } => 3,
            UnicuspidalCase::Case4 { .. } => 4,
            UnicuspidalCase::Case5 => 5,
            UnicuspidalCase::Case6 => 6,
        }
    }
}

/// Match (a, b, d) against the classification, returning the first case that
/// fits. Fibonacci cases are found by scanning odd j >= 5 while a_j <= b.
pub fn classify_unicuspidal(a: u64, b: u64, d: u64) -> Option<UnicuspidalCase> {
    assert!(a < b && d >= 3);
    let big = |n: u64| BigInt::from(n);
    if a == d - 1 && b == d {
        return Some(UnicuspidalCase::Case1);
    }
    if d % 2 == 0 && a == d / 2 && b == 2 * d - 1 {
        return Some(UnicuspidalCase::Case2);
    }
    let mut j = 5usize;
    while fibonacci(j) <= big(b) {
        let (fj, fjm2) = (fibonacci(j), fibonacci(j - 2));
        if &fjm2 * &fjm2 == big(a) && &fj * &fj == big(b) && fjm2 * &fj == big(d) {
            return Some(UnicuspidalCase::Case3 { j });
        }
        j += 2;
    }
    let mut j = 5usize;
    while fibonacci(j) <= big(b) {
        if fibonacci(j - 2) == big(a) && fibonacci(j + 2) == big(b) && fibonacci(j) == big(d) {
            return Some(UnicuspidalCase::Case4 { j });
        }
        j += 2;
    }
    if (a, b, d) == (3, 22, 8) {
        return Some(UnicuspidalCase::Case5);
    }
    if (a, b, d) == (6, 43, 16) {
        return Some(UnicuspidalCase::Case6);
    }
    None
}

/// Enumerate every classification triple with d <= bound, tagged by its case.
/// Used as the independent oracle for `classify_unicuspidal`.
pub fn enumerate_unicuspidal_triples(bound: u64) -> Vec<(UnicuspidalCase, u64, u64, u64)> {
    let mut out = Vec::new();
    for d in 3..=bound {
        out.push((UnicuspidalCase::Case1, d - 1, d, d));
        if d % 2 == 0 {
            out.push((UnicuspidalCase::Case2, d / 2, 2 * d - 1, d));
        }
    }
    let to_u64 = |n: &BigInt| u64::try_from(n.clone()).unwrap();
    let mut j = 5usize;
    loop {
        let d = fibonacci(j - 2) * fibonacci(j);
        if d > BigInt::from(bound) {
            break;
        }
        out.push((
            UnicuspidalCase::Case3 { j },
            to_u64(&fibonacci(j - 2).pow(2)),
            to_u64(&fibonacci(j).pow(2)),
            to_u64(&d),
        ));
        j += 2;
    }
    let mut j = 5usize;
    loop {
        let d = fibonacci(j);
        if d > BigInt::from(bound) {
            break;
        }
        out.push((
            UnicuspidalCase::Case4 { j },
            to_u64(&fibonacci(j - 2)),
            to_u64(&fibonacci(j + 2)),
            to_u64(&d),
        ));
        j += 2;
    }
    if bound >= 8 {
        out.push((UnicuspidalCase::Case5, 3, 22, 8));
    }
    if bound >= 16 {
        out.push((UnicuspidalCase::Case6, 6, 43, 16));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(a: u64, b: u64) -> CyclotomicProduct {
        le_delta(&PuiseuxSequence::single(a, b).unwrap()).unwrap()
    }

    #[test]
    fn ordinary_cusp_is_phi_six() {
        let delta = single(2, 3);
        assert_eq!(delta.factors().collect::<Vec<_>>(), vec![(6, 1)]);
        // t^2 - t + 1
        let coeffs = delta.expand();
        assert_eq!(coeffs, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn a6_cusp_is_phi_fourteen() {
        let delta = single(2, 7);
        assert_eq!(delta.factors().collect::<Vec<_>>(), vec![(14, 1)]);
        assert_eq!(delta.degree(), 6);
    }

    #[test]
    fn three_twentytwo_factors() {
        let delta = single(3, 22);
        assert_eq!(delta.factors().collect::<Vec<_>>(), vec![(6, 1), (33, 1), (66, 1)]);
        assert_eq!(delta.degree(), 42);
    }

    #[test]
    fn degree_identity_small_sweep() {
        for a in 2..=12u64 {
            for b in (a + 1)..=14u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(single(a, b).degree(), (a - 1) * (b - 1), "pair ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn eigenvalue_orders() {
        assert!(has_eigenvalue_of_order(&single(2, 3), 6));
        assert!(!has_eigenvalue_of_order(&single(2, 3), 5));
        assert!(has_eigenvalue_of_order(&single(25, 169), 65));
    }

    #[test]
    fn hypothesis_verdicts() {
        let any = PuiseuxSequence::single(2, 3).unwrap();
        assert_eq!(cuspidal_freeness_hypothesis(6, &[any.clone()]).unwrap(), HypothesisVerdict::PassEven);
        let c = PuiseuxSequence::single(4, 5).unwrap();
        assert_eq!(cuspidal_freeness_hypothesis(5, &[c]).unwrap(), HypothesisVerdict::PassOrders);
        let bad = PuiseuxSequence::single(25, 169).unwrap();
        assert_eq!(
            cuspidal_freeness_hypothesis(65, &[bad]).unwrap(),
            HypothesisVerdict::Fail { offending: vec![0] }
        );
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), BigInt::from(0));
        assert_eq!(fibonacci(5), BigInt::from(5));
        assert_eq!(fibonacci(7), BigInt::from(13));
    }

    #[test]
    fn catalan_small_and_large() {
        assert!(catalan_check(5)); // 25 - 2*13 = -1
        assert!(catalan_check(6)); // 64 - 3*21 = 1
        for j in 2..=100 {
            assert!(catalan_check(j), "j = {j}");
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_unicuspidal(4, 5, 5), Some(UnicuspidalCase::Case1));
        assert_eq!(classify_unicuspidal(3, 22, 8), Some(UnicuspidalCase::Case5));
        assert_eq!(classify_unicuspidal(2, 13, 5), Some(UnicuspidalCase::Case4 { j: 5 }));
        assert_eq!(classify_unicuspidal(3, 5, 7), None);
    }

    #[test]
    fn classify_agrees_with_enumeration() {
        for (case, a, b, d) in enumerate_unicuspidal_triples(16) {
            let got = classify_unicuspidal(a, b, d).unwrap_or_else(|| panic!("({a},{b},{d}) unmatched"));
            assert_eq!(got.label(), case.label(), "triple ({a},{b},{d})");
        }
    }

    #[test]
    fn case4_always_passes_the_hypothesis() {
        for (case, a, b, d) in enumerate_unicuspidal_triples(40) {
            if matches!(case, UnicuspidalCase::Case4 { .. }) {
                let cusp = PuiseuxSequence::single(a, b).unwrap();
                assert!(cuspidal_freeness_hypothesis(d, &[cusp]).unwrap().passed(), "({a},{b},{d})");
            }
        }
    }

    #[test]
    fn parse_pairs() {
        let ps = PuiseuxSequence::parse("2,3;7,2").unwrap();
        assert_eq!(ps.pairs(), &[(2, 3), (7, 2)]);
        assert!(PuiseuxSequence::parse("4,2").is_err()); // not coprime
        assert!(PuiseuxSequence::parse("2").is_err());
    }
}

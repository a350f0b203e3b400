//! Homogeneous polynomials in k[x,y,z].
//!
//! The monomial order is fixed once for the whole crate: graded reverse
//! lexicographic with x > y > z. Every degreewise coefficient matrix is
//! written against [`monomial_basis`], so reports are reproducible
//! bit-for-bit.

use crate::error::{Error, Result};
use crate::field::{Rat, rat, rng_for};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

pub const VAR_NAMES: [char; 3] = ['x', 'y', 'z'];

/// A monomial x^a y^b z^c. `Ord` is grevlex with x > y > z, so the maximum of
/// a set of monomials is the leading one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub e: [u16; 3],
}

impl Monomial {
    pub fn new(a: u16, b: u16, c: u16) -> Self {
        Monomial { e: [a, b, c] }
    }

    pub fn one() -> Self {
        Monomial { e: [0, 0, 0] }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u16; 3];
        e[i] = 1;
        Monomial { e }
    }

    pub fn degree(&self) -> usize {
        self.e.iter().map(|&x| x as usize).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial { e: [self.e[0] + o.e[0], self.e[1] + o.e[1], self.e[2] + o.e[2]] }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.e.iter().zip(&o.e).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, o: &Monomial) -> Option<Monomial> {
        if o.divides(self) {
            Some(Monomial { e: [self.e[0] - o.e[0], self.e[1] - o.e[1], self.e[2] - o.e[2]] })
        } else {
            None
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial {
            e: [self.e[0].max(o.e[0]), self.e[1].max(o.e[1]), self.e[2].max(o.e[2])],
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        self.degree().cmp(&other.degree()).then_with(|| {
            // grevlex tie-break: the last variable in which they differ
            // decides, and the smaller exponent wins.
            for i in (0..3).rev() {
                match self.e[i].cmp(&other.e[i]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.e.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VAR_NAMES[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Dimension of the degree-k piece of k[x,y,z].
pub fn dim_degree(k: i64) -> usize {
    if k < 0 { 0 } else { ((k + 1) * (k + 2) / 2) as usize }
}

/// All degree-k monomials, leading (grevlex-largest) first.
pub fn monomial_basis(k: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim_degree(k as i64));
    for a in 0..=k {
        for b in 0..=(k - a) {
            let c = k - a - b;
            out.push(Monomial::new(a as u16, b as u16, c as u16));
        }
    }
    out.sort_by(|m, n| n.cmp(m));
    out
}

/// A homogeneous polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPoly {
    degree: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = HomPoly::zero(m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Integer-coefficient term helper: c * x^a y^b z^c.
    pub fn term(c: i64, a: u16, b: u16, cc: u16) -> Self {
        Self::monomial(Monomial::new(a, b, cc), rat(c))
    }

    pub fn variable(i: usize) -> Self {
        Self::monomial(Monomial::var(i), rat(1))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.degree(), self.degree, "term degree mismatch");
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &HomPoly) -> HomPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "degree mismatch in sum");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &HomPoly) -> HomPoly {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> HomPoly {
        if c.is_zero() {
            return HomPoly::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + o.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + m.degree());
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: usize) -> HomPoly {
        let mut out = HomPoly::monomial(Monomial::one(), rat(1));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> HomPoly {
        let mut out = HomPoly::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            if m.e[i] == 0 {
                continue;
            }
            let mut e = m.e;
            e[i] -= 1;
            out.add_term(Monomial { e }, c * rat(m.e[i] as i64));
        }
        out
    }

    /// The three partial derivatives (f_x, f_y, f_z).
    pub fn partials(&self) -> [HomPoly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// Euler identity x f_x + y f_y + z f_z = d f, checked exactly. Used as a
    /// self-test of differentiation.
    pub fn euler_check(&self) -> bool {
        euler_check_with(self, &self.partials())
    }

    /// Coefficient vector against `basis` (a degree-matching monomial basis).
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<Rat> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn eval(&self, point: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                for _ in 0..m.e[i] {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Restriction to the parametric line p + t q, as univariate coefficients
    /// of t in ascending order.
    pub fn restrict_line(&self, p: &[Rat; 3], q: &[Rat; 3]) -> Vec<Rat> {
        let d = self.degree;
        let mut acc = vec![Rat::zero(); d + 1];
        for (m, c) in &self.terms {
            // product over variables of (p_i + t q_i)^{e_i}
            let mut cur = vec![c.clone()];
            for i in 0..3 {
                for _ in 0..m.e[i] {
                    let mut next = vec![Rat::zero(); cur.len() + 1];
                    for (k, v) in cur.iter().enumerate() {
                        next[k] += v * &p[i];
                        next[k + 1] += v * &q[i];
                    }
                    cur = next;
                }
            }
            for (k, v) in cur.into_iter().enumerate() {
                acc[k] += v;
            }
        }
        acc
    }

    /// Substitute variables by the linear forms given by the columns of `m`
    /// (the variable `x_i` becomes `sum_j m[j][i] x_j`). Composing changes by
    /// M then N equals a single change by N*M.
    pub fn linear_change(&self, m: &[[Rat; 3]; 3]) -> Result<HomPoly> {
        if crate::matrix::det3(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<HomPoly> = (0..3)
            .map(|i| {
                let mut l = HomPoly::zero(1);
                for j in 0..3 {
                    l.add_term(Monomial::var(j), m[j][i].clone());
                }
                l
            })
            .collect();
        // Memoized powers of each image keep the expansion cost down.
        let mut powers: Vec<Vec<HomPoly>> = images
            .iter()
            .map(|l| vec![HomPoly::monomial(Monomial::one(), rat(1)), l.clone()])
            .collect();
        let mut out = HomPoly::zero(self.degree);
        for (mono, c) in &self.terms {
            let mut term = HomPoly::monomial(Monomial::one(), c.clone());
            for i in 0..3 {
                let e = mono.e[i] as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// True when the three partials are linearly dependent, i.e. the curve is
    /// a cone (a form in two variables after a linear change).
    pub fn is_cone(&self) -> bool {
        assert!(self.degree >= 1);
        let basis = monomial_basis(self.degree - 1);
        let rows: Vec<Vec<Rat>> = self.partials().iter().map(|p| p.coeff_vector(&basis)).collect();
        crate::matrix::rank_qq(rows, basis.len()) < 3
    }

    /// Probabilistic reducedness test: restrict to `trials` random lines and
    /// require every restriction to be squarefree. A repeated factor of f
    /// forces a repeated root on every line, while a squarefree f fails only
    /// on a measure-zero set of lines.
    pub fn is_reduced_probabilistic(&self, trials: usize, seed: u64) -> Result<bool> {
        assert!(trials >= 1);
        let mut rng = rng_for(seed, &[0x7265, self.degree as u64]);
        let mut done = 0;
        let mut attempts = 0;
        while done < trials {
            attempts += 1;
            if attempts > 4 * trials {
                return Err(Error::DegenerateLine);
            }
            let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
                [
                    rat(rng.gen_range(-(1i64 << 31)..(1i64 << 31))),
                    rat(rng.gen_range(-(1i64 << 31)..(1i64 << 31))),
                    rat(rng.gen_range(-(1i64 << 31)..(1i64 << 31))),
                ]
            };
            let p = draw(&mut rng);
            let q = draw(&mut rng);
            let g = self.restrict_line(&p, &q);
            if g.iter().all(|c| c.is_zero()) {
                // line inside the curve; resample but count the trial
                done += 1;
                continue;
            }
            if !univariate_squarefree(&g) {
                return Ok(false);
            }
            done += 1;
        }
        Ok(true)
    }
}

/// Euler check against an externally supplied derivative triple.
pub fn euler_check_with(f: &HomPoly, parts: &[HomPoly; 3]) -> bool {
    let mut acc = HomPoly::zero(f.degree);
    for (i, part) in parts.iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        acc = acc.add(&part.mul_monomial(&Monomial::var(i), &rat(1)));
    }
    acc == f.scale(&rat(f.degree as i64))
}

/// Squarefree test for an exact univariate polynomial: gcd(g, g') is constant.
fn univariate_squarefree(g: &[Rat]) -> bool {
    let trim = |v: &[Rat]| {
        let mut n = v.len();
        while n > 0 && v[n - 1].is_zero() {
            n -= 1;
        }
        v[..n].to_vec()
    };
    let mut a = trim(g);
    let mut b: Vec<Rat> = trim(
        &a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect::<Vec<_>>(),
    );
    // Euclidean algorithm on degrees
    while !b.is_empty() {
        if b.len() == 1 {
            return true; // gcd is a nonzero constant
        }
        // a mod b
        let mut r = a.clone();
        let lb = b.last().unwrap().clone();
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = r.last().unwrap() / &lb;
            for (i, bc) in b.iter().enumerate() {
                let v = &r[shift + i] - &(bc * &factor);
                r[shift + i] = v;
            }
            r = trim(&r);
            if r.is_empty() {
                break;
            }
        }
        a = b;
        b = r;
    }
    a.len() <= 1
}

/// A reduced plane curve of degree at least two that is not a cone. The
/// constructor is the proof: every `Curve` has passed the standing-hypothesis
/// checks, so downstream invariant computations can rely on them.
#[derive(Clone, Debug)]
pub struct Curve {
    f: HomPoly,
    partials: [HomPoly; 3],
    reduced_seed: u64,
    reduced_trials: usize,
}

pub const DEFAULT_REDUCED_TRIALS: usize = 5;

impl Curve {
    pub fn new(f: HomPoly, seed: u64) -> Result<Curve> {
        Self::with_trials(f, seed, DEFAULT_REDUCED_TRIALS)
    }

    pub fn with_trials(f: HomPoly, seed: u64, trials: usize) -> Result<Curve> {
        if f.degree() < 2 || f.is_zero() {
            return Err(Error::Validation("degree must be at least 2".into()));
        }
        let partials = f.partials();
        if !euler_check_with(&f, &partials) {
            return Err(Error::Validation("Euler identity failed (differentiation bug)".into()));
        }
        if f.is_cone() {
            return Err(Error::Validation(
                "curve is a cone (union of lines through one point)".into(),
            ));
        }
        if !f.is_reduced_probabilistic(trials, seed)? {
            return Err(Error::Validation("curve is not reduced".into()));
        }
        Ok(Curve { f, partials, reduced_seed: seed, reduced_trials: trials })
    }

    /// Test-only escape hatch: wrap a polynomial without the standing
    /// hypotheses, to exercise downstream diagnostics.
    #[cfg(test)]
    pub(crate) fn new_unchecked(f: HomPoly) -> Curve {
        let partials = f.partials();
        Curve { f, partials, reduced_seed: 0, reduced_trials: 0 }
    }

    pub fn poly(&self) -> &HomPoly {
        &self.f
    }

    pub fn partials(&self) -> &[HomPoly; 3] {
        &self.partials
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    pub fn validation_seed(&self) -> u64 {
        self.reduced_seed
    }

    pub fn validation_trials(&self) -> usize {
        self.reduced_trials
    }
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

/// Parse the polynomial grammar: terms joined by `+`/`-`; a term is an
/// optional integer or `p/q` coefficient, then `*`-separated variable powers
/// `x^a`, `y^b`, `z^c`; whitespace is ignored. Rejects inhomogeneous input.
pub fn parse_poly(text: &str) -> Result<HomPoly> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Syntax("empty input".into()));
    }
    let mut pos = 0;
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();
    let mut sign = 1i64;
    let mut first = true;
    while pos < chars.len() {
        if !first || matches!(chars[pos], '+' | '-') {
            match chars.get(pos) {
                Some('+') => {
                    sign = 1;
                    pos += 1;
                }
                Some('-') => {
                    sign = -1;
                    pos += 1;
                }
                Some(c) if first => return Err(Error::Syntax(format!("unexpected '{c}'"))),
                Some(c) => return Err(Error::Syntax(format!("expected '+' or '-', found '{c}'"))),
                None => return Err(Error::Syntax("dangling sign".into())),
            }
        }
        first = false;
        let (mono, coeff, next) = parse_term(&chars, pos)?;
        terms.push((mono, coeff * rat(sign)));
        sign = 1;
        pos = next;
    }
    let mut degree: Option<usize> = None;
    for (m, c) in &terms {
        if c.is_zero() {
            continue;
        }
        match degree {
            None => degree = Some(m.degree()),
            Some(d) if d != m.degree() => return Err(Error::NotHomogeneous(d, m.degree())),
            _ => {}
        }
    }
    let mut out = HomPoly::zero(degree.unwrap_or(0));
    for (m, c) in terms {
        if !c.is_zero() {
            out.add_term(m, c);
        }
    }
    Ok(out)
}

fn parse_uint(chars: &[char], mut pos: usize) -> Result<(BigInt, usize)> {
    let start = pos;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err(Error::Syntax(format!(
            "expected a number at '{}'",
            chars[start.min(chars.len().saturating_sub(1))..].iter().take(8).collect::<String>()
        )));
    }
    let s: String = chars[start..pos].iter().collect();
    Ok((s.parse::<BigInt>().map_err(|e| Error::Syntax(e.to_string()))?, pos))
}

fn parse_term(chars: &[char], mut pos: usize) -> Result<(Monomial, Rat, usize)> {
    if pos < chars.len() && chars[pos].is_ascii_digit() {
        let (num, next) = parse_uint(chars, pos)?;
        pos = next;
        let mut coeff = Rat::from_integer(num);
        if pos < chars.len() && chars[pos] == '/' {
            let (den, next) = parse_uint(chars, pos + 1)?;
            if den.is_zero() {
                return Err(Error::Syntax("zero denominator".into()));
            }
            coeff /= Rat::from_integer(den);
            pos = next;
        }
        if pos < chars.len() && chars[pos] == '*' {
            let (m, next) = parse_varpows(chars, pos + 1)?;
            return Ok((m, coeff, next));
        }
        if pos < chars.len() && matches!(chars[pos], 'x' | 'y' | 'z') {
            return Err(Error::Syntax("missing '*' between coefficient and variables".into()));
        }
        return Ok((Monomial::one(), coeff, pos));
    }
    if pos < chars.len() && matches!(chars[pos], 'x' | 'y' | 'z') {
        let (m, next) = parse_varpows(chars, pos)?;
        return Ok((m, Rat::one(), next));
    }
    Err(Error::Syntax(match chars.get(pos) {
        Some(c) => format!("unexpected '{c}'"),
        None => "unexpected end of input".into(),
    }))
}

fn parse_varpows(chars: &[char], mut pos: usize) -> Result<(Monomial, usize)> {
    let mut e = [0u16; 3];
    loop {
        let var = match chars.get(pos) {
            Some('x') => 0,
            Some('y') => 1,
            Some('z') => 2,
            Some(c) => return Err(Error::Syntax(format!("expected a variable, found '{c}'"))),
            None => return Err(Error::Syntax("expected a variable".into())),
        };
        pos += 1;
        let mut exp = 1u64;
        if pos < chars.len() && chars[pos] == '^' {
            let (n, next) = parse_uint(chars, pos + 1)?;
            exp = u64::try_from(n.clone()).map_err(|_| Error::Syntax(format!("exponent {n} out of range")))?;
            pos = next;
        }
        if exp > u16::MAX as u64 {
            return Err(Error::Syntax("exponent out of range".into()));
        }
        e[var] += exp as u16;
        if pos < chars.len() && chars[pos] == '*' {
            pos += 1;
            continue;
        }
        return Ok((Monomial { e }, pos));
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

//! Buchberger's algorithm over Q in up to three variables.
//!
//! Two uses: the affine two-variable computation behind the total Milnor
//! number, and an independent oracle for graded quotient dimensions. The pair
//! selection is by sugar degree, with the product and chain criteria; bases
//! are fully interreduced and made monic, so a reduced basis is unique for
//! the fixed order.

use crate::error::{Error, Result};
use crate::field::{Rat, rat};
use crate::poly::{HomPoly, Monomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Monomial order: graded reverse lexicographic on a fixed variable priority.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    /// Variable priority, highest first; default x > y > z.
    pub priority: [usize; 3],
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder { priority: [0, 1, 2] }
    }
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        a.degree().cmp(&b.degree()).then_with(|| {
            for &v in self.priority.iter().rev() {
                match a.e[v].cmp(&b.e[v]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        })
    }
}

/// A possibly inhomogeneous polynomial, terms sorted leading-first.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl IdealPoly {
    pub fn zero() -> Self {
        IdealPoly { terms: Vec::new() }
    }

    pub fn from_terms(order: &TermOrder, mut terms: Vec<(Monomial, Rat)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        IdealPoly { terms: merged }
    }

    pub fn from_hompoly(order: &TermOrder, p: &HomPoly) -> Self {
        Self::from_terms(order, p.terms().map(|(m, c)| (*m, c.clone())).collect())
    }

    /// Dehomogenize a form by setting variable `var` to one.
    pub fn dehomogenize(order: &TermOrder, p: &HomPoly, var: usize) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let mut e = m.e;
                e[var] = 0;
                (Monomial { e }, c.clone())
            })
            .collect();
        Self::from_terms(order, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn partial(&self, order: &TermOrder, i: usize) -> IdealPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.e[i] > 0)
            .map(|(m, c)| {
                let mut e = m.e;
                e[i] -= 1;
                (Monomial { e }, c * rat(m.e[i] as i64))
            })
            .collect();
        Self::from_terms(order, terms)
    }

    pub fn mul(&self, order: &TermOrder, o: &IdealPoly) -> IdealPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Self::from_terms(order, terms)
    }

    /// self - c * m * other, the elimination step of reduction.
    fn sub_scaled(&self, order: &TermOrder, c: &Rat, m: &Monomial, other: &IdealPoly) -> IdealPoly {
        let mut terms = self.terms.clone();
        for (om, oc) in &other.terms {
            terms.push((om.mul(m), -(oc * c)));
        }
        Self::from_terms(order, terms)
    }

    /// Scale to a primitive integer polynomial with positive leading
    /// coefficient. Controls coefficient growth during the algorithm.
    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() != scale.is_negative() {
            scale = -scale;
        }
        for (_, c) in self.terms.iter_mut() {
            *c *= &scale;
        }
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

impl std::fmt::Display for IdealPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
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

/// A reduced Groebner basis: monic generators, no leading term divides
/// another, every tail reduced against the rest.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub gens: Vec<IdealPoly>,
    pub order: TermOrder,
    pub nvars: usize,
}

/// Full normal form of `p` against `gens` (top and tail reduction). The
/// working polynomial is rescaled to a primitive integer vector every few
/// steps to keep coefficients small; committed remainder terms are stored in
/// the original frame, so the result is the exact normal form.
fn reduce_full(order: &TermOrder, p: &IdealPoly, gens: &[IdealPoly]) -> IdealPoly {
    let mut rem_terms: Vec<(Monomial, Rat)> = Vec::new();
    let mut work = p.clone();
    let mut scale = Rat::one();
    let mut steps = 0usize;
    'outer: while let Some((lm, lc)) = work.leading().cloned() {
        for g in gens {
            let Some((gm, gc)) = g.leading() else { continue };
            if let Some(q) = lm.try_div(gm) {
                let factor = &lc / gc;
                work = work.sub_scaled(order, &factor, &q, g);
                steps += 1;
                if steps % 8 == 0 && !work.is_zero() {
                    let before = work.terms[0].1.clone();
                    work.make_primitive();
                    scale *= &work.terms[0].1 / before;
                }
                continue 'outer;
            }
        }
        rem_terms.push((lm, &lc / &scale));
        work.terms.remove(0);
    }
    IdealPoly { terms: rem_terms }
}

/// Buchberger's algorithm with sugar selection and the product and chain
/// criteria. Inputs in three variables must be homogeneous; affine input is
/// supported in at most two variables.
pub fn buchberger(gens: &[IdealPoly], order: &TermOrder, nvars: usize) -> Result<GroebnerBasis> {
    let mut basis: Vec<IdealPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(Error::BadIdeal("no nonzero generators".into()));
    }
    if nvars >= 3 {
        for g in &basis {
            let degs: Vec<usize> = g.terms.iter().map(|(m, _)| m.degree()).collect();
            if degs.iter().any(|&d| d != degs[0]) {
                return Err(Error::BadIdeal(
                    "three-variable input must be homogeneous".into(),
                ));
            }
        }
    }
    for b in basis.iter_mut() {
        b.make_primitive();
    }
    let mut sugar: Vec<usize> = basis.iter().map(|b| b.total_degree()).collect();

    #[derive(Clone)]
    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
        sugar: usize,
    }
    let make_pair = |i: usize, j: usize, basis: &[IdealPoly], sugar: &[usize]| -> Pair {
        let li = basis[i].leading().unwrap().0;
        let lj = basis[j].leading().unwrap().0;
        let lcm = li.lcm(&lj);
        let s = (sugar[i] + lcm.degree() - li.degree()).max(sugar[j] + lcm.degree() - lj.degree());
        Pair { i, j, lcm, sugar: s }
    };

    let mut pairs: Vec<Pair> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(make_pair(i, j, &basis, &sugar));
        }
    }
    let mut handled: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();

    while !pairs.is_empty() {
        // sugar strategy: smallest sugar, then smallest lcm, then indices
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);
        handled.insert((pair.i, pair.j));

        let (li, ci) = basis[pair.i].leading().unwrap().clone();
        let (lj, cj) = basis[pair.j].leading().unwrap().clone();
        // product criterion
        if li.mul(&lj) == pair.lcm {
            continue;
        }
        // chain criterion: some k with lt_k | lcm and both mixed pairs done
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading().is_some_and(|(lk, _)| lk.divides(&pair.lcm))
                && handled.contains(&key(pair.i, k))
                && handled.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }

        let qi = pair.lcm.try_div(&li).unwrap();
        let qj = pair.lcm.try_div(&lj).unwrap();
        let mut spoly_terms = Vec::new();
        for (m, c) in &basis[pair.i].terms {
            spoly_terms.push((m.mul(&qi), c / &ci));
        }
        for (m, c) in &basis[pair.j].terms {
            spoly_terms.push((m.mul(&qj), -(c / &cj)));
        }
        let spoly = IdealPoly::from_terms(order, spoly_terms);
        let mut nf = reduce_full(order, &spoly, &basis);
        if nf.is_zero() {
            continue;
        }
        nf.make_primitive();
        let t = basis.len();
        sugar.push(pair.sugar.max(nf.total_degree()));
        basis.push(nf);
        for i in 0..t {
            pairs.push(make_pair(i, t, &basis, &sugar));
        }
    }

    // interreduce to the unique reduced basis
    let mut keep: Vec<IdealPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i
                && h.leading().is_some_and(|(hm, _)| {
                    hm.divides(&lm) && (*hm != lm || j < i)
                })
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<IdealPoly> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<IdealPoly> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let mut nf = reduce_full(order, &keep[i], &others);
        nf.make_monic();
        reduced.push(nf);
    }
    reduced.sort_by(|a, b| order.cmp(&b.leading().unwrap().0, &a.leading().unwrap().0));
    Ok(GroebnerBasis { gens: reduced, order: order.clone(), nvars })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b { (a, b) } else { (b, a) }
}

/// Unique remainder of `p` modulo the basis; zero iff `p` is in the ideal.
pub fn normal_form(p: &IdealPoly, gb: &GroebnerBasis) -> IdealPoly {
    reduce_full(&gb.order, p, &gb.gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

/// Number of standard monomials (monomials outside the leading-term ideal).
pub fn quotient_dimension(gb: &GroebnerBasis) -> QuotientDim {
    let lts: Vec<Monomial> = gb.gens.iter().filter_map(|g| g.leading().map(|(m, _)| *m)).collect();
    if lts.iter().any(|m| m.degree() == 0) {
        return QuotientDim::Finite(0);
    }
    // finite iff each active variable has a pure power among the leading terms
    let mut bound = [0usize; 3];
    for v in 0..gb.nvars {
        let pure = lts
            .iter()
            .filter(|m| (0..gb.nvars).all(|w| w == v || m.e[w] == 0))
            .map(|m| m.e[v] as usize)
            .min();
        match pure {
            Some(b) => bound[v] = b,
            None => return QuotientDim::Infinite,
        }
    }
    let mut count = 0usize;
    let mut cursor = [0usize; 3];
    loop {
        let mono = Monomial::new(cursor[0] as u16, cursor[1] as u16, cursor[2] as u16);
        if !lts.iter().any(|lt| lt.divides(&mono)) {
            count += 1;
        }
        // odometer over the box
        let mut v = 0;
        loop {
            if v == gb.nvars {
                return QuotientDim::Finite(count);
            }
            cursor[v] += 1;
            if cursor[v] < bound[v].max(1) {
                break;
            }
            cursor[v] = 0;
            v += 1;
        }
    }
}

/// Dimension of the degree-k piece of S/I for a homogeneous ideal, counted as
/// degree-k standard monomials. Independent oracle for the linear-algebra
/// Hilbert function.
pub fn graded_quotient_dim(gb: &GroebnerBasis, k: usize) -> usize {
    let lts: Vec<Monomial> = gb.gens.iter().filter_map(|g| g.leading().map(|(m, _)| *m)).collect();
    crate::poly::monomial_basis(k)
        .iter()
        .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
        .count()
}

/// Groebner basis of the Jacobian ideal of a form.
pub fn jacobian_gb(f: &HomPoly) -> Result<GroebnerBasis> {
    let order = TermOrder::default();
    let gens: Vec<IdealPoly> =
        f.partials().iter().map(|p| IdealPoly::from_hompoly(&order, p)).collect();
    buchberger(&gens, &order, 3)
}

/// Check the defining property: every S-polynomial reduces to zero.
pub fn is_groebner(gb: &GroebnerBasis) -> bool {
    for i in 0..gb.gens.len() {
        for j in i + 1..gb.gens.len() {
            let (li, ci) = gb.gens[i].leading().unwrap().clone();
            let (lj, cj) = gb.gens[j].leading().unwrap().clone();
            let lcm = li.lcm(&lj);
            let qi = lcm.try_div(&li).unwrap();
            let qj = lcm.try_div(&lj).unwrap();
            let mut terms = Vec::new();
            for (m, c) in gb.gens[i].terms() {
                terms.push((m.mul(&qi), c / &ci));
            }
            for (m, c) in gb.gens[j].terms() {
                terms.push((m.mul(&qj), -(c / &cj)));
            }
            let spoly = IdealPoly::from_terms(&gb.order, terms);
            if !normal_form(&spoly, gb).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ip(s: &str) -> IdealPoly {
        IdealPoly::from_hompoly(&TermOrder::default(), &parse_poly(s).unwrap())
    }

    fn affine(terms: &[(i64, u16, u16)]) -> IdealPoly {
        IdealPoly::from_terms(
            &TermOrder::default(),
            terms.iter().map(|&(c, a, b)| (Monomial::new(a, b, 0), rat(c))).collect(),
        )
    }

    #[test]
    fn basis_of_two_variables_ideal() {
        let gb = buchberger(&[ip("x"), ip("y")], &TermOrder::default(), 3).unwrap();
        assert_eq!(gb.gens.len(), 2);
        assert_eq!(normal_form(&ip("x"), &gb), IdealPoly::zero());
        let one_plus_x = affine(&[(1, 1, 0), (1, 0, 0)]);
        let nf = normal_form(&one_plus_x, &gb);
        assert_eq!(nf, affine(&[(1, 0, 0)]));
    }

    #[test]
    fn already_a_basis_is_kept() {
        let gb =
            buchberger(&[ip("x^2"), ip("x*y"), ip("y^2")], &TermOrder::default(), 3).unwrap();
        let lts: Vec<Monomial> = gb.gens.iter().map(|g| g.leading().unwrap().0).collect();
        assert_eq!(lts.len(), 3);
        assert!(is_groebner(&gb));
    }

    #[test]
    fn cusp_milnor_staircase() {
        // (3x^2, 2y, (y^2-x^3)^2) in k[x,y]: staircase {1, x}
        let g2 = {
            // (y^2 - x^3)^2 = y^4 - 2x^3y^2 + x^6
            affine(&[(1, 0, 4), (-2, 3, 2), (1, 6, 0)])
        };
        let gens = vec![affine(&[(3, 2, 0)]), affine(&[(2, 0, 1)]), g2];
        let gb = buchberger(&gens, &TermOrder::default(), 2).unwrap();
        assert_eq!(quotient_dimension(&gb), QuotientDim::Finite(2));
        let lts: Vec<Monomial> = gb.gens.iter().map(|g| g.leading().unwrap().0).collect();
        assert_eq!(lts, vec![Monomial::new(2, 0, 0), Monomial::new(0, 1, 0)]);
    }

    #[test]
    fn quotient_dimension_box_and_infinite() {
        let gb = buchberger(&[affine(&[(1, 2, 0)]), affine(&[(1, 0, 3)])], &TermOrder::default(), 2)
            .unwrap();
        assert_eq!(quotient_dimension(&gb), QuotientDim::Finite(6));
        let gb = buchberger(&[affine(&[(1, 1, 0)])], &TermOrder::default(), 2).unwrap();
        assert_eq!(quotient_dimension(&gb), QuotientDim::Infinite);
        // a pure power in x alone does not bound the staircase
        let gb = buchberger(
            &[affine(&[(1, 2, 0)]), affine(&[(1, 1, 1)])],
            &TermOrder::default(),
            2,
        )
        .unwrap();
        assert_eq!(quotient_dimension(&gb), QuotientDim::Infinite);
    }

    #[test]
    fn curve_lies_in_its_jacobian_ideal() {
        // membership smoke test on the three-cusped quartic; the Euler
        // relation d*f = x f_x + y f_y + z f_z makes the remainder zero
        let f = parse_poly("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2")
            .unwrap();
        let gb = jacobian_gb(&f).unwrap();
        let nf = normal_form(&IdealPoly::from_hompoly(&TermOrder::default(), &f), &gb);
        assert!(nf.is_zero());
    }

    #[test]
    fn graded_oracle_examples() {
        let gb = buchberger(&[ip("x"), ip("y"), ip("z")], &TermOrder::default(), 3).unwrap();
        assert_eq!(graded_quotient_dim(&gb, 0), 1);
        assert_eq!(graded_quotient_dim(&gb, 1), 0);
        assert_eq!(graded_quotient_dim(&gb, 5), 0);

        let gb = jacobian_gb(&parse_poly("x^3 + x*y*z").unwrap()).unwrap();
        assert_eq!(graded_quotient_dim(&gb, 3), 2);

        let gb = jacobian_gb(&parse_poly("x^3 + y^3 + z^3").unwrap()).unwrap();
        assert_eq!(graded_quotient_dim(&gb, 3), 1);
    }

    #[test]
    fn reduced_basis_is_unique_under_shuffle() {
        let f = parse_poly("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2")
            .unwrap();
        let order = TermOrder::default();
        let gens: Vec<IdealPoly> =
            f.partials().iter().map(|p| IdealPoly::from_hompoly(&order, p)).collect();
        let gb1 = buchberger(&gens, &order, 3).unwrap();
        let shuffled = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
        let gb2 = buchberger(&shuffled, &order, 3).unwrap();
        assert_eq!(gb1.gens, gb2.gens);
        assert!(is_groebner(&gb1));
    }

    #[test]
    fn rejects_inhomogeneous_three_variable_input() {
        let p = affine(&[(1, 1, 0), (1, 0, 0)]);
        assert!(buchberger(&[p], &TermOrder::default(), 3).is_err());
    }
}

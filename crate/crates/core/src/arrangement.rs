//! Line arrangements given as lists of linear forms: intersection lattice,
//! the combinatorial Tjurina/Milnor number, the degree-two characteristic
//! polynomial of the complement, and the nearly-free factorization test.

use crate::error::{Error, Result};
use crate::field::{Rat, rat};
use crate::jacobian::{Classification, Kind};
use crate::poly::{HomPoly, Monomial, parse_poly};
use num_traits::Zero;

/// d >= 3 pairwise non-proportional linear forms; the product is a reduced
/// curve of degree d.
#[derive(Clone, Debug)]
pub struct LineArrangement {
    forms: Vec<HomPoly>,
}

fn form_coeffs(f: &HomPoly) -> [Rat; 3] {
    std::array::from_fn(|i| f.coeff(&Monomial::var(i)))
}

fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Scale a projective vector so its first nonzero coordinate is one.
fn normalize_point(mut p: [Rat; 3]) -> [Rat; 3] {
    if let Some(lead) = p.iter().find(|c| !c.is_zero()).cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
    p
}

impl LineArrangement {
    pub fn new(forms: Vec<HomPoly>) -> Result<Self> {
        if forms.len() < 3 {
            return Err(Error::Validation("an arrangement needs at least 3 lines".into()));
        }
        for f in &forms {
            if f.degree() != 1 || f.is_zero() {
                return Err(Error::Validation("every form must be linear and nonzero".into()));
            }
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                let c = cross(&form_coeffs(&forms[i]), &form_coeffs(&forms[j]));
                if c.iter().all(|v| v.is_zero()) {
                    return Err(Error::Validation(format!(
                        "lines {i} and {j} are proportional"
                    )));
                }
            }
        }
        Ok(LineArrangement { forms })
    }

    /// One linear form per line of text, in the polynomial grammar.
    pub fn parse(text: &str) -> Result<Self> {
        let mut forms = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            forms.push(parse_poly(line)?);
        }
        Self::new(forms)
    }

    pub fn line_count(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[HomPoly] {
        &self.forms
    }

    /// The defining polynomial, the product of the forms.
    pub fn product(&self) -> HomPoly {
        let mut f = HomPoly::monomial(Monomial::one(), rat(1));
        for form in &self.forms {
            f = f.mul(form);
        }
        f
    }

    /// All intersection points with their multiplicities (number of lines
    /// through each point). Projective equality is exact.
    pub fn intersection_points(&self) -> Vec<([Rat; 3], usize)> {
        let mut points: Vec<([Rat; 3], Vec<usize>)> = Vec::new();
        for i in 0..self.forms.len() {
            let ci = form_coeffs(&self.forms[i]);
            for j in i + 1..self.forms.len() {
                let p = normalize_point(cross(&ci, &form_coeffs(&self.forms[j])));
                match points.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, lines)) => {
                        for k in [i, j] {
                            if !lines.contains(&k) {
                                lines.push(k);
                            }
                        }
                    }
                    None => points.push((p, vec![i, j])),
                }
            }
        }
        points.into_iter().map(|(p, lines)| (p, lines.len())).collect()
    }

    /// Total Tjurina number: every singularity of a line arrangement is an
    /// ordinary multiple point, so tau = mu = sum of (m_p - 1)^2.
    pub fn mu_tau(&self) -> usize {
        self.intersection_points().iter().map(|(_, m)| (m - 1) * (m - 1)).sum()
    }

    /// Each pair of lines meets exactly once: sum of C(m_p, 2) = C(d, 2).
    pub fn pair_count_check(&self) -> bool {
        let lhs: usize = self.intersection_points().iter().map(|(_, m)| m * (m - 1) / 2).sum();
        let d = self.line_count();
        lhs == d * (d - 1) / 2
    }

    /// Characteristic polynomial of the complement, chi(t) = t^2 - b1 t + b2.
    pub fn characteristic_polynomial(&self) -> CharPoly2 {
        let d = self.line_count();
        let b1 = (d - 1) as i64;
        let b2 = ((d - 1) * (d - 1)) as i64 - self.mu_tau() as i64;
        CharPoly2 { b1, b2 }
    }
}

/// chi(t) = t^2 - b1 t + b2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharPoly2 {
    pub b1: i64,
    pub b2: i64,
}

impl std::fmt::Display for CharPoly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t^2 - {}*t + {}", self.b1, self.b2)
    }
}

/// For a nearly free arrangement with exponents (d1, d2), the characteristic
/// polynomial satisfies chi(t) - 1 = (t - d1)(t - (d2 - 1)).
pub fn nearly_free_factorization_check(
    arr: &LineArrangement,
    cls: &Classification,
) -> Result<bool> {
    let Kind::NearlyFree { d1, d2, .. } = cls.kind else {
        return Err(Error::NotNearlyFree);
    };
    let chi = arr.characteristic_polynomial();
    let want_b1 = (d1 + d2 - 1) as i64;
    let want_b2 = (d1 * (d2 - 1)) as i64 + 1;
    Ok(chi.b1 == want_b1 && chi.b2 == want_b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(forms: &[&str]) -> LineArrangement {
        LineArrangement::new(forms.iter().map(|s| parse_poly(s).unwrap()).collect()).unwrap()
    }

    fn triangle() -> LineArrangement {
        arr(&["x", "y", "z"])
    }

    fn four_generic() -> LineArrangement {
        arr(&["x", "y", "z", "x + y + z"])
    }

    fn five_with_triple() -> LineArrangement {
        arr(&["x", "y", "z", "x - z", "x + y + z"])
    }

    #[test]
    fn intersection_multiplicities() {
        let pts = triangle().intersection_points();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|(_, m)| *m == 2));

        let pts = four_generic().intersection_points();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|(_, m)| *m == 2));

        let pts = five_with_triple().intersection_points();
        let triples: Vec<_> = pts.iter().filter(|(_, m)| *m == 3).collect();
        assert_eq!(triples.len(), 1);
        // the triple point is (0:1:0)
        assert_eq!(triples[0].0, [rat(0), rat(1), rat(0)]);
        assert_eq!(pts.iter().filter(|(_, m)| *m == 2).count(), 7);
    }

    #[test]
    fn mu_tau_values() {
        assert_eq!(triangle().mu_tau(), 3);
        assert_eq!(four_generic().mu_tau(), 6);
        assert_eq!(five_with_triple().mu_tau(), 11);
        // five concurrent plus two transversals: 16 + 11 nodes
        let seven = arr(&["x", "y", "x - y", "x - 2*y", "x - 3*y", "z", "x + 5*y + 7*z"]);
        assert_eq!(seven.mu_tau(), 27);
        for a in [triangle(), four_generic(), five_with_triple(), seven] {
            assert!(a.pair_count_check());
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(four_generic().characteristic_polynomial(), CharPoly2 { b1: 3, b2: 3 });
        let seven = arr(&["x", "y", "x - y", "x - 2*y", "x - 3*y", "z", "x + 5*y + 7*z"]);
        // (t-3)^2 = t^2 - 6t + 9
        assert_eq!(seven.characteristic_polynomial(), CharPoly2 { b1: 6, b2: 9 });
    }

    #[test]
    fn rejects_proportional_lines() {
        let forms = vec![
            parse_poly("x").unwrap(),
            parse_poly("2*x").unwrap(),
            parse_poly("y").unwrap(),
        ];
        assert!(LineArrangement::new(forms).is_err());
    }

    #[test]
    fn factorization_test_applies_only_to_nearly_free() {
        use crate::jacobian::classify;
        use crate::matrix::GuardConfig;
        let tri = triangle();
        // the triangle is free with exponents (1,1), so the test errors out
        let curve = crate::poly::Curve::new(tri.product(), 0).unwrap();
        let cls = classify(&curve, &GuardConfig::default()).unwrap();
        assert_eq!(cls.tau, 3);
        assert!(matches!(cls.kind, crate::jacobian::Kind::Free { d1: 1, d2: 1 }));
        assert_eq!(nearly_free_factorization_check(&tri, &cls), Err(Error::NotNearlyFree));

        let four = four_generic();
        let curve = crate::poly::Curve::new(four.product(), 0).unwrap();
        let cls = classify(&curve, &GuardConfig::default()).unwrap();
        assert_eq!(nearly_free_factorization_check(&four, &cls), Ok(true));
    }

    #[test]
    fn parse_file_format() {
        let a = LineArrangement::parse("x\ny\n\n# comment\nz\nx + y + z\n").unwrap();
        assert_eq!(a.line_count(), 4);
        assert_eq!(a.product(), parse_poly("x^2*y*z + x*y^2*z + x*y*z^2").unwrap());
    }
}

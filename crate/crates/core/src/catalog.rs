//! Reference curves with known invariants: every fixed curve and parametric
//! family used by the verification harness, paired with its expected data.
//!
//! Constructions are built with exact polynomial arithmetic, never from
//! hand-expanded strings. Expected values marked in `Expected` are integers
//! compared exactly by the corpus verifier.

use crate::error::{Error, Result};
use crate::field::rat;
use crate::poly::{HomPoly, parse_poly};
use serde::{Deserialize, Serialize};

/// Expected classification kind, mirrored as a plain tag for serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedKind {
    Smooth,
    Free,
    NearlyFree,
    Neither,
}

/// Partial expected invariants; only the populated fields are compared.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<ExpectedKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub almost: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ct: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub st: Option<usize>,
    /// n_k = 1 exactly on this inclusive window and 0 elsewhere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_ones_window: Option<(usize, usize)>,
    /// Spot checks (k, n_k).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub n_spot: Vec<(usize, usize)>,
    /// Full nonzero Betti table as (i, j, value) triples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<(usize, usize, usize)>>,
    /// Sorted degrees of a minimal generating set of the syzygy module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_degrees: Option<Vec<usize>>,
    /// Whether the total Milnor and Tjurina numbers coincide (all
    /// singularities weighted homogeneous).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_equals_tau: Option<bool>,
    /// Irreducible with unibranch singularities and rational normalization;
    /// drives the vanishing-window and conjecture checks.
    #[serde(default)]
    pub rational_cuspidal: bool,
    /// Expected (b1, b2) of the arrangement characteristic polynomial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<(i64, i64)>,
    /// Expected verdict of the nearly-free factorization test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<bool>,
}

/// Syzygy data shipped with a family: three generating relations and one
/// second-order relation among them.
#[derive(Clone, Debug)]
pub struct SyzygyFixture {
    pub relations: [[HomPoly; 3]; 3],
    pub second: [HomPoly; 3],
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub poly: HomPoly,
    /// Linear forms when the curve is shipped as an arrangement.
    pub lines: Option<Vec<HomPoly>>,
    pub expected: Expected,
    pub provenance: String,
    pub syzygies: Option<SyzygyFixture>,
}

fn t(c: i64, a: u16, b: u16, cc: u16) -> HomPoly {
    HomPoly::term(c, a, b, cc)
}

fn combo(terms: &[(i64, u16, u16, u16)]) -> HomPoly {
    let mut acc = t(terms[0].0, terms[0].1, terms[0].2, terms[0].3);
    for &(c, a, b, cc) in &terms[1..] {
        acc = acc.add(&t(c, a, b, cc));
    }
    acc
}

// ---------------------------------------------------------------------------
// Parametric families
// ---------------------------------------------------------------------------

/// x^d + y^{d-1} z, the simplest rational unicuspidal curve of degree d.
pub fn st1(d: usize) -> HomPoly {
    assert!(d >= 2);
    combo(&[(1, d as u16, 0, 0), (1, 0, d as u16 - 1, 1)])
}

/// x^d - y^{d-k} z^k, nearly free with two singular points.
pub fn st2(d: usize, k: usize) -> HomPoly {
    assert!(d >= 4 && 2 * k <= d && k >= 1);
    combo(&[(1, d as u16, 0, 0), (-1, 0, (d - k) as u16, k as u16)])
}

/// (y^k z + x^{k+1})^2 - x y^{2k+1}, even degree d = 2k+2, one cusp.
pub fn cusp_square_family(k: usize) -> HomPoly {
    assert!(k >= 1);
    let w = t(1, 0, k as u16, 1).add(&t(1, k as u16 + 1, 0, 0));
    w.mul(&w).sub(&t(1, 1, 2 * k as u16 + 1, 0))
}

/// The shipped relations r_1, r_2, r_3 and the second relation R for
/// `cusp_square_family(k)`.
pub fn cusp_square_syzygies(k: usize) -> SyzygyFixture {
    let ki = k as i64;
    let ku = k as u16;
    let m = 2 * ki * ki + 4 * ki + 1;
    let r1 = [
        t(2 * (2 * ki + 1), 0, ku, 1),
        t(2, ku, 1, 0),
        t(2 * ki + 1, 0, ku + 1, 0).add(&t(-2 * m, ku, 0, 1)),
    ];
    let r2 = [
        t(-2 * ki * (2 * ki + 1), 1, ku - 1, 1),
        t(2 * (ki + 1) * (2 * ki + 1), ku + 1, 0, 0).add(&t(2 * m, 0, ku, 1)),
        t((ki + 1) * (2 * ki + 1) * (2 * ki + 1), 1, ku, 0).add(&t(-2 * ki * m, 0, ku - 1, 2)),
    ];
    let r3 = [
        t(-(2 * ki + 1), 1, ku, 0),
        t(1, 0, ku + 1, 0),
        t((ki + 1) * (2 * ki + 1), ku + 1, 0, 0).add(&t(-ki, 0, ku, 1)),
    ];
    let second = [t(-(ki + 1) * (2 * ki + 1), 1, 0, 0), t(1, 0, 1, 0), t(-2 * m, 0, 0, 1)];
    SyzygyFixture { relations: [r1, r2, r3], second }
}

/// (y^{k+j} z + x^{k+j+1})^2 - x^{2j+1} y^{2k+1}, even degree d = 2(k+j)+2,
/// two cusps.
pub fn two_cusp_family(j: usize, k: usize) -> HomPoly {
    assert!(j >= 1 && k >= 1);
    let s = (k + j) as u16;
    let w = t(1, 0, s, 1).add(&t(1, s + 1, 0, 0));
    w.mul(&w).sub(&t(1, 2 * j as u16 + 1, 2 * k as u16 + 1, 0))
}

/// x^{d-j} F1(x,y) + y^{j1} F2(x,y) + x^k y^{d-k-1} z with
/// j1 = floor(d/2) + j + 1; F1 of degree j, F2 of degree d - j1.
pub fn nanduri(d: usize, j: usize, k: usize, f1: &HomPoly, f2: &HomPoly) -> Result<HomPoly> {
    let j1 = d / 2 + j + 1;
    if f1.degree() != j || f2.degree() != d - j1 {
        return Err(Error::Validation(format!(
            "need deg F1 = {j} and deg F2 = {}",
            d - j1
        )));
    }
    if j + k + 3 > (d + 1) / 2 {
        return Err(Error::Validation("need j + k <= (d+1)/2 - 3".into()));
    }
    let a = f1.mul_monomial(&crate::poly::Monomial::new((d - j) as u16, 0, 0), &rat(1));
    let b = f2.mul_monomial(&crate::poly::Monomial::new(0, j1 as u16, 0), &rat(1));
    let c = t(1, k as u16, (d - k - 1) as u16, 1);
    Ok(a.add(&b).add(&c))
}

/// Degree-six bicuspidal class C4(a).
pub fn fenske_c4(a: i64) -> HomPoly {
    assert!(a != 0);
    combo(&[
        (-a * a * a, 4, 2, 0),
        (-2 * a * a, 3, 3, 0),
        (-a, 2, 4, 0),
        (-1, 0, 6, 0),
        (2 * a * a, 4, 1, 1),
        (2 * a, 3, 2, 1),
        (3, 1, 4, 1),
        (-a, 4, 0, 2),
        (-3, 2, 2, 2),
        (1, 3, 0, 3),
    ])
}

/// Degree-six bicuspidal class C7(A).
pub fn fenske_c7(a: i64) -> HomPoly {
    assert!(a != 0);
    combo(&[
        (1, 3, 3, 0),
        (-a * a, 2, 4, 0),
        (-2 * a, 1, 5, 0),
        (-1, 0, 6, 0),
        (2 * a, 3, 2, 1),
        (2, 2, 3, 1),
        (-1, 4, 0, 2),
    ])
}

/// Degree-six bicuspidal class C8(A), A != 0, 1/2.
pub fn fenske_c8(a: i64) -> HomPoly {
    assert!(a != 0);
    combo(&[
        (1 - 2 * a, 1, 5, 0),
        (-1, 0, 6, 0),
        (2 * a, 3, 2, 1),
        (2, 2, 3, 1),
        (-1, 4, 0, 2),
        (-a * a, 2, 4, 0),
    ])
}

/// x^d + y^d + x^2 y^{d-5} (x + 5y)^2 z for d in {11, 13}: one singular
/// point with three branches.
pub fn three_branch_curve(d: usize) -> HomPoly {
    let du = d as u16;
    let lin = t(1, 1, 0, 0).add(&t(5, 0, 1, 0));
    let head = t(1, du, 0, 0).add(&t(1, 0, du, 0));
    head.add(&t(1, 2, du - 5, 1).mul(&lin).mul(&lin))
}

// ---------------------------------------------------------------------------
// The builtin corpus
// ---------------------------------------------------------------------------

fn p(s: &str) -> HomPoly {
    parse_poly(s).expect("catalog polynomial")
}

fn forms(list: &[&str]) -> Vec<HomPoly> {
    list.iter().map(|s| p(s)).collect()
}

fn product(forms: &[HomPoly]) -> HomPoly {
    let mut acc = HomPoly::term(1, 0, 0, 0);
    for f in forms {
        acc = acc.mul(f);
    }
    acc
}

struct Build {
    entries: Vec<CatalogEntry>,
}

impl Build {
    fn push(&mut self, name: &str, poly: HomPoly, provenance: &str, expected: Expected) {
        self.entries.push(CatalogEntry {
            name: name.into(),
            poly,
            lines: None,
            expected,
            provenance: provenance.into(),
            syzygies: None,
        });
    }

    fn push_arrangement(&mut self, name: &str, lines: Vec<HomPoly>, provenance: &str, expected: Expected) {
        self.entries.push(CatalogEntry {
            name: name.into(),
            poly: product(&lines),
            lines: Some(lines),
            expected,
            provenance: provenance.into(),
            syzygies: None,
        });
    }
}

#[allow(clippy::too_many_lines)]
fn build_corpus() -> Vec<CatalogEntry> {
    let mut b = Build { entries: Vec::new() };

    // --- smooth curves -----------------------------------------------------
    b.push(
        "conic",
        p("x^2 + y^2 + z^2"),
        "smooth conic",
        Expected {
            kind: Some(ExpectedKind::Smooth),
            tau: Some(0),
            mu: Some(0),
            mu_equals_tau: Some(true),
            betti: Some(vec![(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]),
            ..Default::default()
        },
    );
    b.push(
        "smooth-cubic",
        p("x^3 + y^3 + z^3"),
        "Fermat cubic",
        Expected {
            kind: Some(ExpectedKind::Smooth),
            tau: Some(0),
            mu: Some(0),
            mu_equals_tau: Some(true),
            betti: Some(vec![(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)]),
            ..Default::default()
        },
    );

    // --- cubics ------------------------------------------------------------
    b.push(
        "conic-secant",
        p("x^3 + x*y*z"),
        "conic plus a secant line",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(1),
            d2: Some(2),
            b: Some(1),
            almost: Some(true),
            tau: Some(2),
            mu: Some(2),
            mu_equals_tau: Some(true),
            n_ones_window: Some((1, 2)),
            betti: Some(vec![(0, 0, 1), (1, 2, 3), (2, 3, 1), (2, 4, 2), (3, 5, 1)]),
            ..Default::default()
        },
    );
    b.push(
        "nodal-cubic",
        p("x*y*z + x^3 + y^3"),
        "nodal cubic",
        Expected {
            kind: Some(ExpectedKind::Neither),
            tau: Some(1),
            mu: Some(1),
            mu_equals_tau: Some(true),
            n_spot: vec![(1, 2)],
            ..Default::default()
        },
    );

    // --- quartics: almost free with exponents (2,2) -------------------------
    let quartic_betti = vec![(0, 0, 1), (1, 3, 3), (2, 5, 3), (3, 6, 1)];
    let quartic_expected = |rc: bool| Expected {
        kind: Some(ExpectedKind::NearlyFree),
        d1: Some(2),
        d2: Some(2),
        b: Some(0),
        almost: Some(true),
        tau: Some(6),
        mu: Some(6),
        mu_equals_tau: Some(true),
        n_ones_window: Some((3, 3)),
        betti: Some(quartic_betti.clone()),
        rational_cuspidal: rc,
        ..Default::default()
    };
    b.push(
        "quartic-3cusps",
        p("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2"),
        "three-cusped quartic",
        quartic_expected(true),
    );
    b.push(
        "quartic-a2a4",
        p("z^4 - x*z^3 - 2*x*y*z^2 + x^2*y^2"),
        "quartic with cusps A2 and A4",
        quartic_expected(true),
    );
    b.push(
        "quartic-a6",
        p("y^4 - 2*x*y^2*z + y*z^3 + x^2*z^2"),
        "quartic with one A6 cusp",
        quartic_expected(true),
    );

    // --- sextics that are not nearly free -----------------------------------
    b.push(
        "zariski-sextic",
        {
            let c = p("x^2 + y^2");
            let s = p("y^3 + z^3");
            c.pow(3).add(&s.mul(&s))
        },
        "Zariski's six-cusped sextic",
        Expected {
            kind: Some(ExpectedKind::Neither),
            tau: Some(12),
            mu: Some(12),
            mu_equals_tau: Some(true),
            betti: Some(vec![
                (0, 0, 1),
                (1, 5, 3),
                (2, 8, 1),
                (2, 10, 3),
                (3, 11, 1),
                (3, 12, 1),
            ]),
            ..Default::default()
        },
    );

    // --- line arrangements ---------------------------------------------------
    b.push_arrangement(
        "triangle",
        forms(&["x", "y", "z"]),
        "coordinate triangle, the smallest free arrangement",
        Expected {
            kind: Some(ExpectedKind::Free),
            d1: Some(1),
            d2: Some(1),
            tau: Some(3),
            mu: Some(3),
            mu_equals_tau: Some(true),
            char_poly: Some((2, 1)),
            ..Default::default()
        },
    );
    b.push_arrangement(
        "five-generic-lines",
        forms(&["y - z", "y - 2*z", "y - x", "y + x", "x + y + z"]),
        "five lines in general position",
        Expected {
            kind: Some(ExpectedKind::Neither),
            tau: Some(10),
            mu: Some(10),
            mu_equals_tau: Some(true),
            betti: Some(vec![(0, 0, 1), (1, 4, 3), (2, 7, 4), (3, 8, 2)]),
            char_poly: Some((4, 6)),
            ..Default::default()
        },
    );
    b.push_arrangement(
        "four-generic-lines",
        forms(&["x", "y", "z", "x + y + z"]),
        "four lines in general position",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(2),
            d2: Some(2),
            b: Some(0),
            almost: Some(true),
            tau: Some(6),
            mu: Some(6),
            mu_equals_tau: Some(true),
            n_ones_window: Some((3, 3)),
            betti: Some(vec![(0, 0, 1), (1, 3, 3), (2, 5, 3), (3, 6, 1)]),
            char_poly: Some((3, 3)),
            factorization: Some(true),
            ..Default::default()
        },
    );
    b.push_arrangement(
        "five-lines-triple",
        forms(&["x", "y", "z", "x - z", "x + y + z"]),
        "five lines with one triple point and seven nodes",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(2),
            d2: Some(3),
            b: Some(0),
            almost: Some(true),
            tau: Some(11),
            mu: Some(11),
            mu_equals_tau: Some(true),
            n_ones_window: Some((4, 5)),
            betti: Some(vec![(0, 0, 1), (1, 4, 3), (2, 6, 1), (2, 7, 2), (3, 8, 1)]),
            char_poly: Some((4, 5)),
            factorization: Some(true),
            ..Default::default()
        },
    );
    b.push_arrangement(
        "six-lines-triples",
        forms(&["x", "y", "z", "x - z", "y + 2*z", "x + y + z"]),
        "six lines with three triple points and six nodes",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(3),
            d2: Some(3),
            b: Some(-1),
            almost: Some(true),
            tau: Some(18),
            mu: Some(18),
            mu_equals_tau: Some(true),
            n_ones_window: Some((6, 6)),
            betti: Some(vec![(0, 0, 1), (1, 5, 3), (2, 8, 3), (3, 9, 1)]),
            char_poly: Some((5, 7)),
            factorization: Some(true),
            ..Default::default()
        },
    );
    b.push_arrangement(
        "seven-lines-pencil",
        forms(&["x", "y", "x - y", "x - 2*y", "x - 3*y", "z", "x + 5*y + 7*z"]),
        "five concurrent lines plus two transversals",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(2),
            d2: Some(5),
            b: Some(0),
            almost: Some(false),
            tau: Some(27),
            mu: Some(27),
            mu_equals_tau: Some(true),
            char_poly: Some((6, 9)),
            factorization: Some(true),
            ..Default::default()
        },
    );

    // --- non-linear arrangements --------------------------------------------
    b.push(
        "cuspidal-sextic-plus-line",
        {
            let q = p("x^2 + y^2 + z^2");
            let inner = q.pow(3).sub(&t(27, 2, 2, 2));
            inner.mul(&p("z"))
        },
        "six-cusped sextic together with a tangent line",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(3),
            d2: Some(4),
            b: Some(-1),
            almost: Some(true),
            tau: Some(26),
            mu: Some(26),
            mu_equals_tau: Some(true),
            n_ones_window: Some((7, 8)),
            betti: Some(vec![(0, 0, 1), (1, 6, 3), (2, 9, 1), (2, 10, 2), (3, 11, 1)]),
            ..Default::default()
        },
    );
    b.push(
        "elliptic-plus-3-lines",
        {
            let cubic = p("x^3 + y^3 + z^3");
            cubic.mul(&p("x + y")).mul(&p("x + z")).mul(&p("y + z"))
        },
        "smooth cubic with its three inflectional transversals",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(2),
            d2: Some(4),
            b: Some(0),
            almost: Some(false),
            tau: Some(18),
            mu: Some(18),
            mu_equals_tau: Some(true),
            n_ones_window: Some((5, 7)),
            betti: Some(vec![(0, 0, 1), (1, 5, 3), (2, 7, 1), (2, 9, 2), (3, 10, 1)]),
            ..Default::default()
        },
    );

    // --- degree-six rational cuspidal classes -------------------------------
    b.push(
        "fenske-c1a",
        st2(6, 1),
        "unicuspidal sextic x^6 - y^5 z",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(1),
            d2: Some(5),
            b: Some(1),
            almost: Some(false),
            tau: Some(20),
            mu: Some(20),
            mu_equals_tau: Some(true),
            n_ones_window: Some((4, 8)),
            rational_cuspidal: true,
            ..Default::default()
        },
    );
    b.push(
        "fenske-c3a",
        {
            // (yz - x^2)^3 - x y^5: one (3,11) cusp, free with tau = 19
            let w = p("y*z - x^2");
            w.pow(3).sub(&t(1, 1, 5, 0))
        },
        "free unicuspidal sextic with a (3,11) cusp, class C3 representative",
        Expected {
            kind: Some(ExpectedKind::Free),
            d1: Some(2),
            d2: Some(3),
            tau: Some(19),
            mu: Some(20),
            defect: Some(0),
            mu_equals_tau: Some(false),
            rational_cuspidal: true,
            ..Default::default()
        },
    );
    let fenske_almost = Expected {
        kind: Some(ExpectedKind::NearlyFree),
        d1: Some(3),
        d2: Some(3),
        generator_degrees: Some(vec![3, 3, 3]),
        b: Some(-1),
        almost: Some(true),
        tau: Some(18),
        mu: Some(20),
        defect: Some(0),
        mu_equals_tau: Some(false),
        n_ones_window: Some((6, 6)),
        rational_cuspidal: true,
        ..Default::default()
    };
    b.push("fenske-c4a-1", fenske_c4(1), "bicuspidal sextic class C4(a), a = 1", fenske_almost.clone());
    b.push("fenske-c7-1", fenske_c7(1), "bicuspidal sextic class C7, A = 1", fenske_almost.clone());
    b.push("fenske-c7-2", fenske_c7(2), "bicuspidal sextic class C7, A = 2", fenske_almost.clone());
    b.push("fenske-c8-1", fenske_c8(1), "bicuspidal sextic class C8, A = 1", fenske_almost.clone());
    b.push("fenske-c8-2", fenske_c8(2), "bicuspidal sextic class C8, A = 2", fenske_almost);
    b.push(
        "free-sextic-deformation",
        st1(6).add(&t(1, 2, 4, 0)),
        "free deformation y^5 z + x^6 + x^2 y^4 of the unicuspidal sextic",
        Expected {
            kind: Some(ExpectedKind::Free),
            d1: Some(2),
            d2: Some(3),
            tau: Some(19),
            mu: Some(20),
            defect: Some(0),
            mu_equals_tau: Some(false),
            rational_cuspidal: true,
            ..Default::default()
        },
    );

    // --- curves with a three-branch singularity ------------------------------
    b.push(
        "three-branch-deg11",
        three_branch_curve(11),
        "degree-11 curve with one three-branch singularity",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(5),
            d2: Some(6),
            b: Some(-3),
            almost: Some(true),
            tau: Some(74),
            mu: Some(88),
            defect: Some(2),
            mu_equals_tau: Some(false),
            n_ones_window: Some((13, 14)),
            betti: Some(vec![(0, 0, 1), (1, 10, 3), (2, 15, 1), (2, 16, 2), (3, 17, 1)]),
            ..Default::default()
        },
    );
    b.push(
        "three-branch-deg13",
        three_branch_curve(13),
        "degree-13 curve with one three-branch singularity",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(5),
            d2: Some(8),
            b: Some(-3),
            almost: Some(false),
            tau: Some(108),
            mu: Some(130),
            defect: Some(2),
            mu_equals_tau: Some(false),
            n_ones_window: Some((15, 18)),
            betti: Some(vec![(0, 0, 1), (1, 12, 3), (2, 17, 1), (2, 20, 2), (3, 21, 1)]),
            ..Default::default()
        },
    );

    // --- free curves with one Newton-degenerate singularity ------------------
    b.push(
        "nanduri-7-0-1",
        nanduri(7, 0, 1, &t(1, 0, 0, 0), &p("x^3 + y^3")).unwrap(),
        "free septic with one two-branch singularity (j = 0, k = 1)",
        Expected {
            kind: Some(ExpectedKind::Free),
            d1: Some(3),
            d2: Some(3),
            tau: Some(27),
            mu: Some(29),
            defect: Some(1),
            mu_equals_tau: Some(false),
            ..Default::default()
        },
    );
    b.push(
        "nanduri-7-0-0",
        nanduri(7, 0, 0, &t(1, 0, 0, 0), &p("x^3 + y^3")).unwrap(),
        "free septic, boundary member k = 0 (unibranch, Newton intercepts (7,6))",
        Expected {
            kind: Some(ExpectedKind::Free),
            d1: Some(3),
            d2: Some(3),
            tau: Some(27),
            mu: Some(30),
            defect: Some(0),
            mu_equals_tau: Some(false),
            rational_cuspidal: true,
            ..Default::default()
        },
    );

    // --- septics around x^7 + y^5 z^2 ---------------------------------------
    b.push(
        "septic-y5z2",
        p("x^7 + y^5*z^2"),
        "nearly free septic with two cusps",
        Expected {
            kind: Some(ExpectedKind::NearlyFree),
            d1: Some(1),
            d2: Some(6),
            b: Some(1),
            almost: Some(false),
            tau: Some(30),
            mu: Some(30),
            mu_equals_tau: Some(true),
            n_ones_window: Some((5, 10)),
            rational_cuspidal: true,
            ..Default::default()
        },
    );
    let septic_def = Expected {
        kind: Some(ExpectedKind::NearlyFree),
        d1: Some(3),
        d2: Some(4),
        b: Some(-1),
        almost: Some(true),
        tau: Some(26),
        n_ones_window: Some((7, 8)),
        ..Default::default()
    };
    b.push(
        "septic-y5z2-def1",
        p("x^7 + y^5*z^2 + x^3*y^4"),
        "almost free deformation of the two-cusped septic",
        septic_def.clone(),
    );
    b.push(
        "septic-y5z2-def2",
        p("x^7 + y^5*z^2 + x^5*y^2"),
        "almost free deformation of the two-cusped septic",
        septic_def,
    );
    b.push(
        "septic-wide-middle",
        {
            // x^7 + y^2 z^3 (y + z)^2
            let lin = p("y + z");
            t(1, 7, 0, 0).add(&t(1, 0, 2, 3).mul(&lin).mul(&lin))
        },
        "septic whose Jacobian module has a four-dimensional middle piece",
        Expected {
            kind: Some(ExpectedKind::Neither),
            n_spot: vec![(7, 4)],
            ..Default::default()
        },
    );

    // --- parametric families at the witness parameters -----------------------
    for d in 3..=10usize {
        b.push(
            &format!("st1-{d}"),
            st1(d),
            "unicuspidal family x^d + y^(d-1) z",
            Expected {
                kind: Some(ExpectedKind::NearlyFree),
                d1: Some(1),
                d2: Some(d - 1),
                b: Some(1),
                almost: Some(d == 3),
                tau: Some((d - 1) * (d - 2)),
                mu: Some((d - 1) * (d - 2)),
                defect: Some(0),
                mu_equals_tau: Some(true),
                ct: Some(d - 1),
                st: Some(2 * d - 3),
                n_ones_window: Some((d - 2, 2 * d - 4)),
                rational_cuspidal: true,
                ..Default::default()
            },
        );
    }
    for d in 4..=10usize {
        for k in 2..=(d / 2) {
            b.push(
                &format!("st2-{d}-{k}"),
                st2(d, k),
                "two-point family x^d - y^(d-k) z^k",
                Expected {
                    kind: Some(ExpectedKind::NearlyFree),
                    d1: Some(1),
                    d2: Some(d - 1),
                    b: Some(1),
                    almost: Some(false),
                    tau: Some((d - 1) * (d - 2)),
                    mu: Some((d - 1) * (d - 2)),
                    defect: Some(0),
                    mu_equals_tau: Some(true),
                    ct: Some(d - 1),
                    st: Some(2 * d - 3),
                    n_ones_window: Some((d - 2, 2 * d - 4)),
                    rational_cuspidal: num_integer::gcd(d, k) == 1,
                    ..Default::default()
                },
            );
        }
    }
    for k in 2..=5usize {
        let d = 2 * k + 2;
        let mut entry = CatalogEntry {
            name: format!("cusp-square-{k}"),
            poly: cusp_square_family(k),
            lines: None,
            expected: Expected {
                kind: Some(ExpectedKind::NearlyFree),
                d1: Some(k + 1),
                d2: Some(k + 1),
                b: Some(1 - k as i64),
                almost: Some(true),
                tau: Some(3 * k * (k + 1)),
                mu: Some((d - 1) * (d - 2)),
                defect: Some(0),
                mu_equals_tau: Some(false),
                ct: Some(3 * k + 1),
                st: Some(3 * k + 1),
                n_ones_window: Some((3 * k, 3 * k)),
                rational_cuspidal: true,
                ..Default::default()
            },
            provenance: "one-cusp type (d, d-2) normal form (y^k z + x^(k+1))^2 - x y^(2k+1)".into(),
            syzygies: Some(cusp_square_syzygies(k)),
        };
        entry.expected.mu = Some(2 * k * (2 * k + 1));
        b.entries.push(entry);
    }
    for j in 1..=4usize {
        for k in 1..=(5 - j).min(4) {
            if j + k < 2 {
                continue;
            }
            let d = 2 * (j + k) + 2;
            b.push(
                &format!("two-cusp-{j}-{k}"),
                two_cusp_family(j, k),
                "two-cusp type (d, d-2) normal form",
                Expected {
                    kind: Some(ExpectedKind::NearlyFree),
                    d1: Some(d / 2),
                    d2: Some(d / 2),
                    b: Some(-((d as i64 - 4) / 2)),
                    almost: Some(true),
                    tau: Some(3 * d * (d - 2) / 4),
                    mu: Some((d - 1) * (d - 2)),
                    defect: Some(0),
                    mu_equals_tau: Some(false),
                    ct: Some((3 * d - 4) / 2),
                    st: Some((3 * d - 4) / 2),
                    n_ones_window: Some((3 * (d - 2) / 2, 3 * (d - 2) / 2)),
                    rational_cuspidal: true,
                    ..Default::default()
                },
            );
        }
    }

    b.entries
}

/// The whole shipped corpus, in a fixed order.
pub fn all_entries() -> Vec<CatalogEntry> {
    build_corpus()
}

/// All catalog names.
pub fn list() -> Vec<String> {
    all_entries().into_iter().map(|e| e.name).collect()
}

/// Look up one entry by name.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    all_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.into()))
}

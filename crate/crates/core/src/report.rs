//! Assembled classification reports with self-checks, the JSON corpus
//! serialization, and the fixture verifier behind `corpus verify`.

use crate::betti::{BettiTable, ResolutionShape, betti_table, resolution_shape};
use crate::catalog::{CatalogEntry, Expected, ExpectedKind, SyzygyFixture};
use crate::error::Result;
use crate::jacobian::{JacobianAnalysis, Kind, analyze, verify_second_syzygy, verify_syzygy};
use crate::matrix::{FieldMode, GuardConfig};
use crate::milnor::total_milnor;
use crate::poly::{Curve, HomPoly, parse_poly};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub almost: Option<bool>,
    /// For curves that are neither free nor nearly free: a degree k with
    /// dim N(f)_k at least two.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

impl ClassificationJson {
    fn from_kind(kind: &Kind) -> Self {
        match kind {
            Kind::Smooth => ClassificationJson {
                kind: "smooth".into(),
                d1: None,
                d2: None,
                b: None,
                almost: None,
                witness: None,
            },
            Kind::Free { d1, d2 } => ClassificationJson {
                kind: "free".into(),
                d1: Some(*d1),
                d2: Some(*d2),
                b: None,
                almost: None,
                witness: None,
            },
            Kind::NearlyFree { d1, d2, b, almost } => ClassificationJson {
                kind: if *almost { "almost_free".into() } else { "nearly_free".into() },
                d1: Some(*d1),
                d2: Some(*d2),
                b: Some(*b),
                almost: Some(*almost),
                witness: None,
            },
            Kind::Neither { witness_degree, witness_dim } => ClassificationJson {
                kind: "neither".into(),
                d1: None,
                d2: None,
                b: None,
                almost: None,
                witness: Some((*witness_degree, *witness_dim)),
            },
        }
    }
}

/// Self-checks recorded with every report. `plateau_marginal` is a warning
/// flag (plateau observed only on the last three values), not a failure.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Checks {
    pub euler: bool,
    pub plateau: bool,
    pub plateau_marginal: bool,
    pub n_symmetry: bool,
    pub n_unimodal_block: bool,
    pub ct_identity: bool,
    pub tau_identity: bool,
    pub nearly_free_identities: bool,
    pub shape_consistent: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Provenance {
    pub seed: u64,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub reduced_trials: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub input: String,
    pub degree: usize,
    pub tau: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mdr: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ct: Option<usize>,
    pub st: usize,
    pub hilbert: Vec<usize>,
    pub n_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<(usize, usize, usize)>>,
    pub classification: ClassificationJson,
    pub checks: Checks,
    /// Caveats that apply to this run (for example, the defect reading
    /// assumes irreducibility, which is never verified).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub cfg: GuardConfig,
    pub with_betti: bool,
    pub with_mu: bool,
    pub max_degree: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { cfg: GuardConfig::default(), with_betti: true, with_mu: false, max_degree: 16 }
    }
}

fn run_checks(curve: &Curve, a: &JacobianAnalysis, shape: Option<&ResolutionShape>) -> Checks {
    let d = curve.degree();
    let bound = a.profile.bound();
    let tau = a.profile.tau;
    let cls = &a.classification;
    let nearly_free_identities = match cls.kind {
        Kind::NearlyFree { d1, d2, b, .. } => {
            d1 + d2 == d
                && b == d2 as i64 - d as i64 + 2
                && cls.st == d2 + d - 2
                && cls.ct.map_or(false, |ct| ct + cls.st == 3 * d - 4)
        }
        _ => true,
    };
    let tau_identity = match cls.kind {
        Kind::Free { d1, d2 } => tau == (d - 1) * (d - 1) - d1 * d2,
        Kind::NearlyFree { d1, d2, .. } => tau == (d - 1) * (d - 1) - d1 * (d2 - 1) - 1,
        _ => true,
    };
    let ct_identity = match (cls.mdr, cls.ct) {
        (Some(r), Some(ct)) => ct == r + d - 2,
        _ => true,
    };
    let shape_consistent = shape.map(|s| match (&cls.kind, s) {
        (Kind::Smooth, ResolutionShape::NearlyFree { d1, d2, d3, b }) => {
            *d1 == d - 1 && *d2 == d - 1 && *d3 == d - 1 && *b == d as i64 - 1
        }
        (Kind::Free { d1, d2 }, ResolutionShape::Free { d1: s1, d2: s2 }) => {
            d1 == s1 && d2 == s2
        }
        (
            Kind::NearlyFree { d1, d2, b, .. },
            ResolutionShape::NearlyFree { d1: s1, d2: s2, d3: s3, b: sb },
        ) => d1 == s1 && d2 == s2 && s2 == s3 && b == sb,
        (Kind::Neither { .. }, ResolutionShape::Other) => true,
        _ => false,
    });
    Checks {
        euler: curve.poly().euler_check(),
        // the analysis aborts with NoPlateau before a report can exist
        plateau: true,
        plateau_marginal: tau > 0 && a.profile.st == bound - 2,
        n_symmetry: a.n_dims.is_symmetric(),
        n_unimodal_block: a.n_dims.is_unimodal_block(),
        ct_identity,
        tau_identity,
        nearly_free_identities,
        shape_consistent,
    }
}

/// Classify a curve and assemble the full report.
pub fn build_report(text: &str, opts: &ReportOptions) -> Result<Report> {
    let poly = parse_poly(text)?;
    report_for_poly(text.to_string(), poly, opts)
}

pub fn report_for_poly(input: String, poly: HomPoly, opts: &ReportOptions) -> Result<Report> {
    if poly.degree() > opts.max_degree {
        return Err(crate::error::Error::DegreeBound(poly.degree(), opts.max_degree));
    }
    let curve = Curve::new(poly, opts.cfg.seed)?;
    let analysis = analyze(&curve, &opts.cfg)?;
    let (betti, shape) = if opts.with_betti {
        let table = betti_table(&curve, &opts.cfg)?;
        let shape = resolution_shape(&table, curve.degree())?;
        (Some(table), Some(shape))
    } else {
        (None, None)
    };
    let milnor = if opts.with_mu { Some(total_milnor(&curve, opts.cfg.seed)?) } else { None };
    let mut notes = Vec::new();
    if milnor.is_some() {
        notes.push("the defect reads 2g + sum(r_i - 1) only for irreducible curves; irreducibility is not checked".to_string());
    }
    let checks = run_checks(&curve, &analysis, shape.as_ref());
    let (field, prime) = match opts.cfg.mode {
        FieldMode::Auto => ("qq+guard".to_string(), None),
        FieldMode::Rational => ("qq".to_string(), None),
        FieldMode::Prime(p) => ("fp".to_string(), Some(p)),
    };
    Ok(Report {
        input,
        degree: curve.degree(),
        tau: analysis.classification.tau,
        mu: milnor.as_ref().map(|m| m.mu),
        defect: milnor.as_ref().map(|m| m.defect),
        mdr: analysis.classification.mdr,
        ct: analysis.classification.ct,
        st: analysis.classification.st,
        hilbert: analysis.profile.values.clone(),
        n_dims: analysis.n_dims.values.clone(),
        betti: betti.as_ref().map(BettiTable::as_triples),
        classification: ClassificationJson::from_kind(&analysis.classification.kind),
        checks,
        notes,
        provenance: Provenance {
            seed: opts.cfg.seed,
            field,
            prime,
            reduced_trials: curve.validation_trials(),
        },
    })
}

// ---------------------------------------------------------------------------
// Corpus serialization
// ---------------------------------------------------------------------------

/// One corpus record: the on-disk form of a catalog entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusRecord {
    pub name: String,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<String>>,
    pub expected: Expected,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygies: Option<SyzygyRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SyzygyRecord {
    pub relations: Vec<Vec<String>>,
    pub second: Vec<String>,
}

impl CorpusRecord {
    pub fn from_entry(e: &CatalogEntry) -> Self {
        CorpusRecord {
            name: e.name.clone(),
            polynomial: e.poly.to_string(),
            lines: e.lines.as_ref().map(|ls| ls.iter().map(|l| l.to_string()).collect()),
            expected: e.expected.clone(),
            provenance: e.provenance.clone(),
            syzygies: e.syzygies.as_ref().map(|s| SyzygyRecord {
                relations: s
                    .relations
                    .iter()
                    .map(|r| r.iter().map(|p| p.to_string()).collect())
                    .collect(),
                second: s.second.iter().map(|p| p.to_string()).collect(),
            }),
        }
    }

    pub fn to_entry(&self) -> Result<CatalogEntry> {
        let poly = parse_poly(&self.polynomial)?;
        let lines = match &self.lines {
            Some(ls) => Some(ls.iter().map(|l| parse_poly(l)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        let syzygies = match &self.syzygies {
            Some(s) => {
                let mut relations: Vec<[HomPoly; 3]> = Vec::new();
                for r in &s.relations {
                    let v: Vec<HomPoly> = r.iter().map(|p| parse_poly(p)).collect::<Result<_>>()?;
                    relations.push(v.try_into().map_err(|_| {
                        crate::error::Error::Syntax("relation needs three components".into())
                    })?);
                }
                let second: Vec<HomPoly> =
                    s.second.iter().map(|p| parse_poly(p)).collect::<Result<_>>()?;
                Some(SyzygyFixture {
                    relations: relations.try_into().map_err(|_| {
                        crate::error::Error::Syntax("need exactly three relations".into())
                    })?,
                    second: second.try_into().map_err(|_| {
                        crate::error::Error::Syntax("second relation needs three components".into())
                    })?,
                })
            }
            None => None,
        };
        Ok(CatalogEntry {
            name: self.name.clone(),
            poly,
            lines,
            expected: self.expected.clone(),
            provenance: self.provenance.clone(),
            syzygies,
        })
    }
}

/// Serialize the builtin corpus.
pub fn corpus_records() -> Vec<CorpusRecord> {
    crate::catalog::all_entries().iter().map(CorpusRecord::from_entry).collect()
}

// ---------------------------------------------------------------------------
// Fixture verification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyOutcome {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

fn check<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    checked: &mut usize,
    what: &str,
    expected: &T,
    got: &T,
) {
    *checked += 1;
    if expected != got {
        failures.push(format!("{what}: expected {expected:?}, got {got:?}"));
    }
}

/// Run every populated expectation of one catalog entry against fresh
/// computations.
pub fn verify_entry(entry: &CatalogEntry, cfg: &GuardConfig) -> VerifyOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    match verify_entry_inner(entry, cfg, &mut failures, &mut checked) {
        Ok(()) => {}
        Err(e) => failures.push(format!("computation error: {e}")),
    }
    VerifyOutcome { name: entry.name.clone(), passed: failures.is_empty(), checked, failures }
}

fn verify_entry_inner(
    entry: &CatalogEntry,
    cfg: &GuardConfig,
    failures: &mut Vec<String>,
    checked: &mut usize,
) -> Result<()> {
    let e = &entry.expected;
    let curve = Curve::new(entry.poly.clone(), cfg.seed)?;
    let a = analyze(&curve, cfg)?;
    let cls = &a.classification;

    if let Some(kind) = e.kind {
        let got = match cls.kind {
            Kind::Smooth => ExpectedKind::Smooth,
            Kind::Free { .. } => ExpectedKind::Free,
            Kind::NearlyFree { .. } => ExpectedKind::NearlyFree,
            Kind::Neither { .. } => ExpectedKind::Neither,
        };
        check(failures, checked, "kind", &kind, &got);
    }
    let (got_d1, got_d2, got_b, got_almost) = match cls.kind {
        Kind::Free { d1, d2 } => (Some(d1), Some(d2), None, None),
        Kind::NearlyFree { d1, d2, b, almost } => (Some(d1), Some(d2), Some(b), Some(almost)),
        _ => (None, None, None, None),
    };
    if let Some(d1) = e.d1 {
        check(failures, checked, "d1", &Some(d1), &got_d1);
    }
    if let Some(d2) = e.d2 {
        check(failures, checked, "d2", &Some(d2), &got_d2);
    }
    if let Some(b) = e.b {
        check(failures, checked, "b", &Some(b), &got_b);
    }
    if let Some(almost) = e.almost {
        check(failures, checked, "almost", &Some(almost), &got_almost);
    }
    if let Some(tau) = e.tau {
        check(failures, checked, "tau", &tau, &cls.tau);
    }
    if let Some(ct) = e.ct {
        check(failures, checked, "ct", &Some(ct), &cls.ct);
    }
    if let Some(st) = e.st {
        check(failures, checked, "st", &st, &cls.st);
    }
    if let Some(gens) = &e.generator_degrees {
        check(failures, checked, "generatorDegrees", gens, &a.generator_degrees);
    }
    if let Some((lo, hi)) = e.n_ones_window {
        let want: Vec<usize> = (0..=a.n_dims.t_degree)
            .map(|k| usize::from(k >= lo && k <= hi))
            .collect();
        check(failures, checked, "nDims", &want, &a.n_dims.values);
    }
    for &(k, v) in &e.n_spot {
        check(failures, checked, &format!("n[{k}]"), &v, &a.n_dims.n(k));
    }
    if let Some(want) = &e.betti {
        let table = betti_table(&curve, cfg)?;
        check(failures, checked, "betti", want, &table.as_triples());
        let shape = resolution_shape(&table, curve.degree())?;
        let consistent = run_checks(&curve, &a, Some(&shape)).shape_consistent.unwrap_or(false);
        check(failures, checked, "shapeConsistent", &true, &consistent);
    }
    if e.mu.is_some() || e.defect.is_some() || e.mu_equals_tau.is_some() {
        let m = total_milnor(&curve, cfg.seed)?;
        if let Some(mu) = e.mu {
            check(failures, checked, "mu", &mu, &m.mu);
        }
        if let Some(defect) = e.defect {
            check(failures, checked, "defect", &defect, &m.defect);
        }
        if let Some(eq) = e.mu_equals_tau {
            check(failures, checked, "muEqualsTau", &eq, &(m.mu == cls.tau));
        }
    }
    if let Some(lines) = &entry.lines {
        let arr = crate::arrangement::LineArrangement::new(lines.clone())?;
        check(failures, checked, "pairCount", &true, &arr.pair_count_check());
        check(failures, checked, "arrangementTau", &cls.tau, &arr.mu_tau());
        if let Some((b1, b2)) = e.char_poly {
            let chi = arr.characteristic_polynomial();
            check(failures, checked, "charPoly", &(b1, b2), &(chi.b1, chi.b2));
        }
        if let Some(want) = e.factorization {
            let got = crate::arrangement::nearly_free_factorization_check(&arr, cls)?;
            check(failures, checked, "factorization", &want, &got);
        }
    }
    if let Some(syz) = &entry.syzygies {
        for (i, r) in syz.relations.iter().enumerate() {
            check(failures, checked, &format!("relation r{}", i + 1), &true, &verify_syzygy(&curve, r)?);
        }
        check(
            failures,
            checked,
            "second relation",
            &true,
            &verify_second_syzygy(&curve, &syz.relations, &syz.second)?,
        );
    }
    Ok(())
}

/// Verify a set of entries in parallel, preserving order.
pub fn verify_all(entries: &[CatalogEntry], cfg: &GuardConfig) -> Vec<VerifyOutcome> {
    entries.par_iter().map(|e| verify_entry(e, cfg)).collect()
}

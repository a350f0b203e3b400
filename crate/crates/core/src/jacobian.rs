//! Invariants of the Jacobian ideal of a reduced plane curve: the Hilbert
//! function of the Milnor algebra M(f) = S/J_f, the total Tjurina number, the
//! graded dimensions of the Jacobian module N(f), the syzygy module AR(f)
//! degreewise, the thresholds mdr/ct/st, and the classification of the curve
//! as smooth, free, nearly free, almost free, or neither.
//!
//! Everything here is linear algebra on degreewise coefficient matrices; the
//! dimensions of N(f) come from the closed formula
//! `n_k = m_k + m_{T-k} - ms_k - tau` with `T = 3(d-2)`, so no ideal
//! saturation is ever computed.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, GF, QQ};
use crate::matrix::{ExactMatrix, GuardConfig, RankProblem, rank_with_guard};
use crate::poly::{Curve, HomPoly, Monomial, dim_degree, monomial_basis};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::HashMap;

const TAG_JAC: u64 = 0x6a61;
const TAG_KOSZUL: u64 = 0x6b6f;
const TAG_GENS: u64 = 0x6765;

/// Hilbert function of M(f) up to the stable bound K = 3d-3, with the
/// plateau value tau and the stability threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    pub d: usize,
    /// m_k for 0 <= k <= 3d-3.
    pub values: Vec<usize>,
    pub tau: usize,
    pub st: usize,
}

impl HilbertProfile {
    pub fn bound(&self) -> usize {
        3 * self.d - 3
    }

    /// m_k, reading indices above the bound as the plateau value.
    pub fn m(&self, k: usize) -> usize {
        self.values.get(k).copied().unwrap_or(self.tau)
    }
}

/// Hilbert function of the Milnor algebra of a smooth curve of the same
/// degree: coefficients of ((1 - t^{d-1}) / (1 - t))^3, up to T = 3(d-2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothReference {
    pub d: usize,
    pub values: Vec<usize>,
}

impl SmoothReference {
    pub fn socle_degree(&self) -> usize {
        3 * (self.d - 2)
    }

    pub fn m(&self, k: usize) -> usize {
        self.values.get(k).copied().unwrap_or(0)
    }
}

pub fn smooth_reference(d: usize) -> SmoothReference {
    assert!(d >= 2);
    let block = vec![1i64; d - 1]; // 1 + t + ... + t^{d-2}
    let mut acc = vec![1i64];
    for _ in 0..3 {
        let mut next = vec![0i64; acc.len() + block.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in block.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    SmoothReference { d, values: acc.into_iter().map(|v| v as usize).collect() }
}

/// Graded dimensions of the Jacobian module N(f), for 0 <= k <= T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianModuleDims {
    pub t_degree: usize,
    pub values: Vec<usize>,
}

impl JacobianModuleDims {
    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn n(&self, k: usize) -> usize {
        self.values.get(k).copied().unwrap_or(0)
    }

    /// Symmetry n_k = n_{T-k}.
    pub fn is_symmetric(&self) -> bool {
        let t = self.t_degree;
        (0..=t).all(|k| self.values[k] == self.values[t - k])
    }

    /// The nonzero entries form one contiguous block that weakly increases
    /// then weakly decreases.
    pub fn is_unimodal_block(&self) -> bool {
        let nz: Vec<usize> = match (
            self.values.iter().position(|&v| v > 0),
            self.values.iter().rposition(|&v| v > 0),
        ) {
            (Some(a), Some(b)) => self.values[a..=b].to_vec(),
            _ => return true,
        };
        if nz.iter().any(|&v| v == 0) {
            return false;
        }
        let peak = nz.iter().enumerate().max_by_key(|&(i, v)| (*v, i)).map(|(i, _)| i).unwrap();
        nz[..=peak].windows(2).all(|w| w[0] <= w[1]) && nz[peak..].windows(2).all(|w| w[0] >= w[1])
    }
}

/// dim N(f)_k = m_k + m_{T-k} - ms_k - tau for every k up to T.
pub fn jacobian_module_dims(
    profile: &HilbertProfile,
    smooth: &SmoothReference,
) -> Result<JacobianModuleDims> {
    let t = smooth.socle_degree();
    let tau = profile.tau as i64;
    let mut values = Vec::with_capacity(t + 1);
    for k in 0..=t {
        let v = profile.m(k) as i64 + profile.m(t - k) as i64 - smooth.m(k) as i64 - tau;
        if v < 0 {
            return Err(Error::NegativeDimension { k, value: v });
        }
        values.push(v as usize);
    }
    Ok(JacobianModuleDims { t_degree: t, values })
}

// ---------------------------------------------------------------------------
// Degreewise matrices
// ---------------------------------------------------------------------------

fn basis_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

/// Rows spanning (J_f)_k: every monomial multiple u*f_x, u*f_y, u*f_z of
/// degree k, written against the degree-k monomial basis.
pub(crate) fn jacobian_rows<F: FieldCtx>(
    ctx: &F,
    partials: &[HomPoly; 3],
    k: usize,
    d: usize,
) -> Option<Vec<Vec<F::Elem>>> {
    let cols = monomial_basis(k);
    let index = basis_index(&cols);
    if k + 1 < d {
        return Some(Vec::new());
    }
    let shifts = monomial_basis(k + 1 - d);
    let mut rows = Vec::with_capacity(3 * shifts.len());
    for g in partials {
        for u in &shifts {
            let mut row = vec![ctx.zero(); cols.len()];
            for (m, c) in g.terms() {
                row[index[&m.mul(u)]] = ctx.from_rat(c)?;
            }
            rows.push(row);
        }
    }
    Some(rows)
}

struct JacobianDegreeProblem<'a> {
    partials: &'a [HomPoly; 3],
    k: usize,
    d: usize,
}

impl RankProblem for JacobianDegreeProblem<'_> {
    fn cols(&self) -> usize {
        dim_degree(self.k as i64)
    }
    fn build_qq(&self) -> ExactMatrix<QQ> {
        let rows = jacobian_rows(&QQ, self.partials, self.k, self.d).unwrap();
        ExactMatrix::from_rows(QQ, rows, self.cols())
    }
    fn build_gf(&self, gf: GF) -> Option<ExactMatrix<GF>> {
        let rows = jacobian_rows(&gf, self.partials, self.k, self.d)?;
        Some(ExactMatrix::from_rows(gf, rows, self.cols()))
    }
}

/// The three Koszul relations among the partials.
fn koszul_generators(partials: &[HomPoly; 3], d: usize) -> [[HomPoly; 3]; 3] {
    let z = || HomPoly::zero(d - 1);
    let [fx, fy, fz] = partials.clone();
    [
        [fy.clone(), fx.scale(&crate::field::rat(-1)), z()],
        [fz.clone(), z(), fx.scale(&crate::field::rat(-1))],
        [z(), fz, fy.scale(&crate::field::rat(-1))],
    ]
}

/// Rows spanning the degree-j Koszul relations inside S_j^3; vectors are
/// slot-major against the degree-j monomial basis.
fn koszul_rows<F: FieldCtx>(
    ctx: &F,
    partials: &[HomPoly; 3],
    j: usize,
    d: usize,
) -> Option<Vec<Vec<F::Elem>>> {
    if j + 1 < d {
        return Some(Vec::new());
    }
    let slot = monomial_basis(j);
    let index = basis_index(&slot);
    let shifts = monomial_basis(j + 1 - d);
    let gens = koszul_generators(partials, d);
    let mut rows = Vec::with_capacity(3 * shifts.len());
    for gen in &gens {
        for u in &shifts {
            let mut row = vec![ctx.zero(); 3 * slot.len()];
            for (s, comp) in gen.iter().enumerate() {
                for (m, c) in comp.terms() {
                    row[s * slot.len() + index[&m.mul(u)]] = ctx.from_rat(c)?;
                }
            }
            rows.push(row);
        }
    }
    Some(rows)
}

struct KoszulSpanProblem<'a> {
    partials: &'a [HomPoly; 3],
    j: usize,
    d: usize,
}

impl RankProblem for KoszulSpanProblem<'_> {
    fn cols(&self) -> usize {
        3 * dim_degree(self.j as i64)
    }
    fn build_qq(&self) -> ExactMatrix<QQ> {
        let rows = koszul_rows(&QQ, self.partials, self.j, self.d).unwrap();
        ExactMatrix::from_rows(QQ, rows, self.cols())
    }
    fn build_gf(&self, gf: GF) -> Option<ExactMatrix<GF>> {
        let rows = koszul_rows(&gf, self.partials, self.j, self.d)?;
        Some(ExactMatrix::from_rows(gf, rows, self.cols()))
    }
}

/// The syzygy map S_j^3 -> S_{j+d-1}, columns slot-major; its kernel is
/// AR(f)_j.
fn syzygy_matrix<F: FieldCtx>(ctx: &F, partials: &[HomPoly; 3], j: usize) -> Option<ExactMatrix<F>> {
    let slot = monomial_basis(j);
    let d1 = partials[0].degree();
    let target = monomial_basis(j + d1);
    let index = basis_index(&target);
    let mut m = ExactMatrix::zero(ctx.clone(), target.len(), 3 * slot.len());
    for (s, g) in partials.iter().enumerate() {
        for (ui, u) in slot.iter().enumerate() {
            for (mono, c) in g.terms() {
                m.set(index[&mono.mul(u)], s * slot.len() + ui, ctx.from_rat(c)?);
            }
        }
    }
    Some(m)
}

fn jac_rank(partials: &[HomPoly; 3], d: usize, k: usize, cfg: &GuardConfig) -> usize {
    rank_with_guard(&JacobianDegreeProblem { partials, k, d }, cfg, TAG_JAC ^ (k as u64) << 8).rank
}

fn koszul_rank(partials: &[HomPoly; 3], d: usize, j: usize, cfg: &GuardConfig) -> usize {
    rank_with_guard(&KoszulSpanProblem { partials, j, d }, cfg, TAG_KOSZUL ^ (j as u64) << 8).rank
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Hilbert function m(f)_k of the Milnor algebra for 0 <= k <= 3d-3, with the
/// plateau asserted over the last three values.
pub fn hilbert_profile(curve: &Curve, cfg: &GuardConfig) -> Result<HilbertProfile> {
    let d = curve.degree();
    let bound = 3 * d - 3;
    let partials = curve.partials();
    let values: Vec<usize> = (0..=bound)
        .into_par_iter()
        .map(|k| dim_degree(k as i64) - jac_rank(partials, d, k, cfg))
        .collect();
    if !(values[bound] == values[bound - 1] && values[bound] == values[bound - 2]) {
        return Err(Error::NoPlateau(values[bound.saturating_sub(4)..].to_vec()));
    }
    let tau = values[bound];
    let mut st = bound;
    while st > 0 && values[st - 1] == tau {
        st -= 1;
    }
    Ok(HilbertProfile { d, values, tau, st })
}

/// dim AR(f)_j, the space of degree-j relations among the partials.
pub fn ar_dim(curve: &Curve, cfg: &GuardConfig, j: usize) -> usize {
    let d = curve.degree();
    3 * dim_degree(j as i64) - jac_rank(curve.partials(), d, j + d - 1, cfg)
}

/// dim of the essential (non-Koszul) part of AR(f)_j.
pub fn essential_syzygy_dim(curve: &Curve, cfg: &GuardConfig, j: usize) -> usize {
    let d = curve.degree();
    ar_dim(curve, cfg, j) - koszul_rank(curve.partials(), d, j, cfg)
}

/// Minimal degree of an essential syzygy, or `None` for a smooth curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mdr {
    Smooth,
    Degree(usize),
}

impl Mdr {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Mdr::Smooth => None,
            Mdr::Degree(j) => Some(*j),
        }
    }
}

pub fn mdr(curve: &Curve, cfg: &GuardConfig) -> Result<Mdr> {
    let profile = hilbert_profile(curve, cfg)?;
    mdr_with(curve, cfg, &profile)
}

fn mdr_with(curve: &Curve, cfg: &GuardConfig, profile: &HilbertProfile) -> Result<Mdr> {
    if profile.tau == 0 {
        return Ok(Mdr::Smooth);
    }
    let d = curve.degree();
    // ct <= T forces mdr <= 2d - 4
    for j in 0..=(2 * d) {
        if essential_syzygy_dim(curve, cfg, j) > 0 {
            return Ok(Mdr::Degree(j));
        }
    }
    Err(Error::Validation("no essential syzygy found below the degree bound".into()))
}

/// Coincidence threshold, computed as mdr + d - 2 and cross-checked against
/// the direct definition (largest q with m_k = ms_k for all k <= q).
pub fn coincidence_threshold(curve: &Curve, cfg: &GuardConfig) -> Result<usize> {
    let profile = hilbert_profile(curve, cfg)?;
    let Mdr::Degree(r) = mdr_with(curve, cfg, &profile)? else {
        return Err(Error::Validation("coincidence threshold needs tau > 0".into()));
    };
    ct_with(curve.degree(), r, &profile, &smooth_reference(curve.degree()))
}

fn ct_with(
    d: usize,
    mdr: usize,
    profile: &HilbertProfile,
    smooth: &SmoothReference,
) -> Result<usize> {
    let formula = mdr + d - 2;
    let direct = (0..=profile.bound())
        .find(|&k| profile.m(k) != smooth.m(k))
        .map(|k| k - 1)
        .expect("tau > 0 guarantees a mismatch below the bound");
    if formula != direct {
        return Err(Error::CrossCheckFailure { formula, direct });
    }
    Ok(formula)
}

/// Multiset of degrees of a minimal generating set of AR(f), collected up to
/// degree d: in each degree, generators = dim AR_j - dim(S_1 * AR_{j-1}).
pub fn minimal_generator_degrees(curve: &Curve, cfg: &GuardConfig) -> Result<Vec<usize>> {
    let d = curve.degree();
    let ar: Vec<usize> = (0..=d).map(|j| ar_dim(curve, cfg, j)).collect();
    let cols = 3 * dim_degree(d as i64);
    match cfg.mode {
        crate::matrix::FieldMode::Rational => {
            return generator_degrees_over(&QQ, curve, d, &ar)
                .ok_or_else(|| Error::Validation("rational generator computation failed".into()));
        }
        crate::matrix::FieldMode::Prime(p) => {
            if let Some(v) = generator_degrees_over(&GF::new(p), curve, d, &ar) {
                return Ok(v);
            }
            return generator_degrees_over(&QQ, curve, d, &ar)
                .ok_or_else(|| Error::Validation("rational generator computation failed".into()));
        }
        crate::matrix::FieldMode::Auto => {}
    }
    if cols <= cfg.qq_max_cols {
        return generator_degrees_over(&QQ, curve, d, &ar)
            .ok_or_else(|| Error::Validation("rational generator computation failed".into()));
    }
    if let Some(v) =
        crate::matrix::two_prime_consensus(cfg, TAG_GENS, |gf| generator_degrees_over(&gf, curve, d, &ar))
    {
        return Ok(v);
    }
    generator_degrees_over(&QQ, curve, d, &ar)
        .ok_or_else(|| Error::Validation("rational generator computation failed".into()))
}

/// One field's view of the generator degrees; `None` signals an unusable
/// prime (either a denominator died or the dimensions disagree with the
/// guarded ranks).
fn generator_degrees_over<F: FieldCtx>(
    ctx: &F,
    curve: &Curve,
    d: usize,
    ar: &[usize],
) -> Option<Vec<usize>> {
    let partials = curve.partials();
    let mut out = Vec::new();
    let mut prev_kernel: Option<Vec<Vec<F::Elem>>> = None;
    for j in 0..=d {
        let kernel = syzygy_matrix(ctx, partials, j)?.kernel_basis();
        if kernel.len() != ar[j] {
            return None;
        }
        if j > 0 && ar[j] > 0 {
            let prev = prev_kernel.as_ref().unwrap();
            let slot_prev = dim_degree(j as i64 - 1);
            let slot = dim_degree(j as i64);
            let prev_basis = monomial_basis(j - 1);
            let basis = monomial_basis(j);
            let index = basis_index(&basis);
            let mut rows = Vec::with_capacity(3 * prev.len());
            for v in prev {
                for var in 0..3 {
                    let mut row = vec![ctx.zero(); 3 * slot];
                    for s in 0..3 {
                        for (ui, u) in prev_basis.iter().enumerate() {
                            let e = &v[s * slot_prev + ui];
                            if !ctx.is_zero(e) {
                                let target = u.mul(&Monomial::var(var));
                                row[s * slot + index[&target]] = e.clone();
                            }
                        }
                    }
                    rows.push(row);
                }
            }
            let image_rank = ExactMatrix::from_rows(ctx.clone(), rows, 3 * slot).rank();
            if image_rank > ar[j] {
                return None;
            }
            for _ in 0..(ar[j] - image_rank) {
                out.push(j);
            }
        } else if ar[j] > 0 {
            // degree-0 relations would make the curve a cone
            return None;
        }
        prev_kernel = Some(kernel);
    }
    Some(out)
}

/// Kernel basis of the degree-j syzygy map over Q, as triples of polynomials.
/// Each returned triple (a, b, c) satisfies a f_x + b f_y + c f_z = 0.
pub fn syzygy_basis(curve: &Curve, j: usize) -> Vec<[HomPoly; 3]> {
    let m = syzygy_matrix(&QQ, curve.partials(), j).unwrap();
    let slot = monomial_basis(j);
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            std::array::from_fn(|s| {
                let mut p = HomPoly::zero(j);
                for (ui, u) in slot.iter().enumerate() {
                    let c = &v[s * slot.len() + ui];
                    if !c.is_zero() {
                        p = p.add(&HomPoly::monomial(*u, c.clone()));
                    }
                }
                p
            })
        })
        .collect()
}

/// Exact check that (a, b, c) is a relation among the partials.
pub fn verify_syzygy(curve: &Curve, r: &[HomPoly; 3]) -> Result<bool> {
    let degrees: Vec<usize> = r.iter().filter(|p| !p.is_zero()).map(|p| p.degree()).collect();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::DegreeMismatch);
    }
    let mut acc: Option<HomPoly> = None;
    for (comp, part) in r.iter().zip(curve.partials()) {
        if comp.is_zero() {
            continue;
        }
        let prod = comp.mul(part);
        acc = Some(match acc {
            None => prod,
            Some(a) => a.add(&prod),
        });
    }
    Ok(acc.map_or(true, |p| p.is_zero()))
}

/// Exact check that v_1 r_1 + v_2 r_2 + v_3 r_3 = 0 componentwise.
pub fn verify_second_syzygy(
    curve: &Curve,
    rs: &[[HomPoly; 3]; 3],
    v: &[HomPoly; 3],
) -> Result<bool> {
    for r in rs {
        if !verify_syzygy(curve, r)? {
            return Ok(false);
        }
    }
    // degree compatibility: deg v_i + deg r_i must agree across i
    let mut common: Option<usize> = None;
    for (vi, ri) in v.iter().zip(rs) {
        if vi.is_zero() {
            continue;
        }
        let rdeg = ri.iter().find(|p| !p.is_zero()).map(|p| p.degree());
        if let Some(rd) = rdeg {
            let total = vi.degree() + rd;
            match common {
                None => common = Some(total),
                Some(t) if t != total => return Err(Error::DegreeMismatch),
                _ => {}
            }
        }
    }
    for comp in 0..3 {
        let mut acc: Option<HomPoly> = None;
        for (vi, ri) in v.iter().zip(rs) {
            if vi.is_zero() || ri[comp].is_zero() {
                continue;
            }
            let prod = vi.mul(&ri[comp]);
            acc = Some(match acc {
                None => prod,
                Some(a) => a.add(&prod),
            });
        }
        if let Some(p) = acc {
            if !p.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Smooth,
    Free { d1: usize, d2: usize },
    NearlyFree { d1: usize, d2: usize, b: i64, almost: bool },
    Neither { witness_degree: usize, witness_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub mdr: Option<usize>,
    pub ct: Option<usize>,
    pub st: usize,
    pub tau: usize,
}

/// Everything the classifier computes, bundled so callers pay for the
/// degreewise ranks once.
#[derive(Clone, Debug)]
pub struct JacobianAnalysis {
    pub profile: HilbertProfile,
    pub smooth: SmoothReference,
    pub n_dims: JacobianModuleDims,
    pub ar_dims: Vec<usize>,
    pub generator_degrees: Vec<usize>,
    pub classification: Classification,
}

pub fn analyze(curve: &Curve, cfg: &GuardConfig) -> Result<JacobianAnalysis> {
    let d = curve.degree();
    let profile = hilbert_profile(curve, cfg)?;
    let smooth = smooth_reference(d);
    let n_dims = jacobian_module_dims(&profile, &smooth)?;
    let ar_dims: Vec<usize> = (0..=d).map(|j| ar_dim(curve, cfg, j)).collect();
    let generator_degrees = minimal_generator_degrees(curve, cfg)?;
    let tau = profile.tau;
    let st = profile.st;

    if tau == 0 {
        let classification =
            Classification { kind: Kind::Smooth, mdr: None, ct: None, st, tau };
        return Ok(JacobianAnalysis { profile, smooth, n_dims, ar_dims, generator_degrees, classification });
    }

    let Mdr::Degree(r) = mdr_with(curve, cfg, &profile)? else { unreachable!() };
    let ct = ct_with(d, r, &profile, &smooth)?;

    let kind = if n_dims.values.iter().all(|&v| v == 0) {
        let d1 = r;
        let d2 = d - 1 - d1;
        let expected = (d - 1) * (d - 1) - d1 * d2;
        if expected != tau {
            return Err(Error::ExponentMismatch(format!(
                "free exponents ({d1},{d2}) predict tau = {expected}, computed tau = {tau}"
            )));
        }
        Kind::Free { d1, d2 }
    } else if n_dims.max() == 1 {
        let d1 = r;
        let d2 = d - d1;
        let expected = (d - 1) * (d - 1) - d1 * (d2 - 1) - 1;
        if expected != tau {
            return Err(Error::ExponentMismatch(format!(
                "nearly free exponents ({d1},{d2}) predict tau = {expected}, computed tau = {tau}"
            )));
        }
        let b = d2 as i64 - d as i64 + 2;
        let total = n_dims.total();
        let almost = if d % 2 == 0 { total == 1 } else { total == 2 };
        Kind::NearlyFree { d1, d2, b, almost }
    } else {
        let (witness_degree, witness_dim) = n_dims
            .values
            .iter()
            .enumerate()
            .find(|&(_, &v)| v >= 2)
            .map(|(k, &v)| (k, v))
            .unwrap();
        Kind::Neither { witness_degree, witness_dim }
    };

    let classification = Classification { kind, mdr: Some(r), ct: Some(ct), st, tau };
    Ok(JacobianAnalysis { profile, smooth, n_dims, ar_dims, generator_degrees, classification })
}

/// Classify the curve from its Jacobian module dimensions.
pub fn classify(curve: &Curve, cfg: &GuardConfig) -> Result<Classification> {
    Ok(analyze(curve, cfg)?.classification)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::poly::parse_poly;

    fn curve(s: &str) -> Curve {
        Curve::new(parse_poly(s).unwrap(), 0).unwrap()
    }

    fn cfg() -> GuardConfig {
        GuardConfig::default()
    }

    #[test]
    fn degree_three_jacobian_matrix_rank() {
        // nine products of the partials of x^3 + xyz against the ten cubics
        let c = curve("x^3 + x*y*z");
        let rows = jacobian_rows(&QQ, c.partials(), 3, 3).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(crate::matrix::rank_qq(rows, 10), 8);
    }

    #[test]
    fn hilbert_profile_conic_plus_secant() {
        let h = hilbert_profile(&curve("x^3 + x*y*z"), &cfg()).unwrap();
        assert_eq!(h.values, vec![1, 3, 3, 2, 2, 2, 2]);
        assert_eq!(h.tau, 2);
        assert_eq!(h.st, 3);
    }

    #[test]
    fn hilbert_profile_smooth_cubic() {
        let h = hilbert_profile(&curve("x^3 + y^3 + z^3"), &cfg()).unwrap();
        assert_eq!(h.values, vec![1, 3, 3, 1, 0, 0, 0]);
        assert_eq!(h.tau, 0);
    }

    #[test]
    fn smooth_reference_expansions() {
        assert_eq!(smooth_reference(3).values, vec![1, 3, 3, 1]);
        assert_eq!(smooth_reference(4).values, vec![1, 3, 6, 7, 6, 3, 1]);
        let d6 = smooth_reference(6);
        assert_eq!(d6.values.len(), 13);
        assert_eq!(d6.values[6], 19);
        assert!((0..=12).all(|k| d6.values[k] == d6.values[12 - k]));
    }

    #[test]
    fn jacobian_module_dims_examples() {
        let c = curve("x^3 + x*y*z");
        let h = hilbert_profile(&c, &cfg()).unwrap();
        let n = jacobian_module_dims(&h, &smooth_reference(3)).unwrap();
        assert_eq!(n.values, vec![0, 1, 1, 0]);
        assert!(n.is_symmetric());
        assert!(n.is_unimodal_block());
        assert_eq!(n.total(), 2);
    }

    #[test]
    fn ar_dimensions() {
        let c = curve("x^3 + x*y*z");
        assert_eq!(ar_dim(&c, &cfg(), 1), 1);
        let smooth_quartic = curve("x^4 + y^4 + z^4");
        assert_eq!(ar_dim(&smooth_quartic, &cfg(), 1), 0);
        let st = curve("x^6 + y^5*z");
        assert_eq!(ar_dim(&st, &cfg(), 1), 1);
    }

    #[test]
    fn degree_one_syzygy_is_the_expected_relation() {
        let c = curve("x^3 + x*y*z");
        let basis = syzygy_basis(&c, 1);
        assert_eq!(basis.len(), 1);
        for r in &basis {
            assert!(verify_syzygy(&c, r).unwrap());
        }
        // spanned by (0, y, -z): the first component must vanish
        assert!(basis[0][0].is_zero());
    }

    #[test]
    fn mdr_examples() {
        assert_eq!(mdr(&curve("x^3 + x*y*z"), &cfg()).unwrap(), Mdr::Degree(1));
        let quartic =
            curve("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2");
        assert_eq!(mdr(&quartic, &cfg()).unwrap(), Mdr::Degree(2));
        assert_eq!(mdr(&curve("x^3 + y^3 + z^3"), &cfg()).unwrap(), Mdr::Smooth);
    }

    #[test]
    fn coincidence_threshold_examples() {
        assert_eq!(coincidence_threshold(&curve("x^3 + x*y*z"), &cfg()).unwrap(), 2);
        assert_eq!(coincidence_threshold(&curve("x^6 + y^5*z"), &cfg()).unwrap(), 5);
    }

    #[test]
    fn minimal_generators_of_conic_plus_secant() {
        let gens = minimal_generator_degrees(&curve("x^3 + x*y*z"), &cfg()).unwrap();
        assert_eq!(gens, vec![1, 2, 2]);
    }

    #[test]
    fn classify_small_curves() {
        let cls = classify(&curve("x^3 + x*y*z"), &cfg()).unwrap();
        assert_eq!(
            cls.kind,
            Kind::NearlyFree { d1: 1, d2: 2, b: 1, almost: true }
        );
        assert_eq!(cls.tau, 2);
        assert_eq!(cls.ct, Some(2));
        assert_eq!(cls.st, 3);

        let nodal = classify(&curve("x*y*z + x^3 + y^3"), &cfg()).unwrap();
        assert_eq!(nodal.kind, Kind::Neither { witness_degree: 1, witness_dim: 2 });
        assert_eq!(nodal.tau, 1);

        let smooth = classify(&curve("x^2 + y^2 + z^2"), &cfg()).unwrap();
        assert_eq!(smooth.kind, Kind::Smooth);
        assert_eq!(smooth.tau, 0);
    }

    #[test]
    fn non_reduced_input_has_no_plateau() {
        // x (x + y)^2: the Jacobian scheme is one-dimensional, so m_k grows
        let f = parse_poly("x^3 + 2*x^2*y + x*y^2").unwrap();
        let c = Curve::new_unchecked(f);
        assert!(matches!(hilbert_profile(&c, &cfg()), Err(Error::NoPlateau(_))));
    }

    #[test]
    fn syzygy_verification() {
        let c = curve("x^3 + x*y*z");
        let zero = HomPoly::zero(1);
        let good = [zero.clone(), parse_poly("y").unwrap(), parse_poly("0 - z").unwrap()];
        assert!(verify_syzygy(&c, &good).unwrap());
        let bad = [
            HomPoly::monomial(Monomial::one(), rat(1)),
            HomPoly::zero(0),
            HomPoly::zero(0),
        ];
        assert!(!verify_syzygy(&c, &bad).unwrap());
        let mismatched = [
            parse_poly("x").unwrap(),
            parse_poly("y^2").unwrap(),
            HomPoly::zero(1),
        ];
        assert_eq!(verify_syzygy(&c, &mismatched), Err(Error::DegreeMismatch));
    }
}

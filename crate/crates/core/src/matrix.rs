//! Dense exact matrices: rank, reduced row echelon form, kernels, and the
//! two-prime modular guard for large rank computations.

use crate::error::Result;
use crate::field::{FieldCtx, GF, QQ, rng_for, sample_prime};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug)]
pub struct ExactMatrix<F: FieldCtx> {
    pub ctx: F,
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: FieldCtx> ExactMatrix<F> {
    pub fn zero(ctx: F, rows: usize, cols: usize) -> Self {
        let data = vec![ctx.zero(); rows * cols];
        ExactMatrix { ctx, rows, cols, data }
    }

    pub fn from_rows(ctx: F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        ExactMatrix { ctx, rows: n, cols, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row echelon form in place; returns the pivot column of each pivot row.
    fn echelonize(&mut self) -> Vec<usize> {
        let ctx = self.ctx.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !ctx.is_zero(self.at(r, col))) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = ctx.inv(self.at(row, col));
            for r in row + 1..self.rows {
                if ctx.is_zero(self.at(r, col)) {
                    continue;
                }
                let factor = ctx.mul(self.at(r, col), &inv);
                for c in col..self.cols {
                    let delta = ctx.mul(&factor, self.at(row, c));
                    let v = ctx.sub(self.at(r, c), &delta);
                    self.set(r, c, v);
                }
                let slice = self.row_mut(r);
                ctx.normalize_row(slice);
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Reduced row echelon form: pivots scaled to one and cleared above.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let ctx = m.ctx.clone();
        for (i, &col) in pivots.iter().enumerate().rev() {
            let inv = ctx.inv(m.at(i, col));
            for c in col..m.cols {
                let v = ctx.mul(m.at(i, c), &inv);
                m.set(i, c, v);
            }
            for r in 0..i {
                if ctx.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let delta = ctx.mul(&factor, m.at(i, c));
                    let v = ctx.sub(m.at(r, c), &delta);
                    m.set(r, c, v);
                }
            }
        }
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        Rref { matrix: m, pivots }
    }

    /// Basis of the right null space; length is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let ctx = self.ctx.clone();
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &rref.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rref.pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![ctx.zero(); self.cols];
            v[free] = ctx.one();
            for (i, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = ctx.neg(rref.matrix.at(i, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let ctx = &self.ctx;
        (0..self.rows)
            .map(|r| {
                let mut acc = ctx.zero();
                for c in 0..self.cols {
                    acc = ctx.add(&acc, &ctx.mul(self.at(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }
}

/// Reduced row echelon data: the nonzero rows and their pivot columns.
pub struct Rref<F: FieldCtx> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

/// Something that can materialize the same matrix over Q or over a prime field.
pub trait RankProblem: Sync {
    fn cols(&self) -> usize;
    fn build_qq(&self) -> ExactMatrix<QQ>;
    /// `None` when a coefficient denominator dies modulo the prime.
    fn build_gf(&self, gf: GF) -> Option<ExactMatrix<GF>>;
}

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    /// Rational below the column threshold, two-prime agreement above it.
    Auto,
    /// Always rational.
    Rational,
    /// Always modulo the given prime (single prime, explicitly probabilistic).
    Prime(u64),
}

#[derive(Clone, Debug)]
pub struct GuardConfig {
    pub mode: FieldMode,
    /// Column count above which `Auto` switches to the two-prime path.
    pub qq_max_cols: usize,
    pub seed: u64,
}

impl Default for GuardConfig {
    fn default() -> Self {
        GuardConfig { mode: FieldMode::Auto, qq_max_cols: 200, seed: 0 }
    }
}

pub const DEFAULT_QQ_MAX_COLS: usize = 200;
const MAX_PRIME_RETRIES: u32 = 3;

#[derive(Clone, Debug)]
pub struct GuardedRank {
    pub rank: usize,
    pub primes: Vec<u64>,
    pub retries: u32,
    pub used_qq: bool,
}

/// Rank with the modular guard. Small matrices (or `Rational` mode) eliminate
/// over Q. Large matrices are ranked modulo two independently drawn primes and
/// the value is accepted when they agree; on disagreement (or a denominator
/// hitting a prime) fresh primes are drawn, and after three failed rounds the
/// computation falls back to Q.
pub fn rank_with_guard(problem: &impl RankProblem, cfg: &GuardConfig, tag: u64) -> GuardedRank {
    match cfg.mode {
        FieldMode::Rational => {
            return GuardedRank { rank: problem.build_qq().rank(), primes: vec![], retries: 0, used_qq: true };
        }
        FieldMode::Prime(p) => {
            if let Some(m) = problem.build_gf(GF::new(p)) {
                return GuardedRank { rank: m.rank(), primes: vec![p], retries: 0, used_qq: false };
            }
            // The forced prime divides a denominator; Q is the only exact way out.
            return GuardedRank { rank: problem.build_qq().rank(), primes: vec![p], retries: 0, used_qq: true };
        }
        FieldMode::Auto => {}
    }
    if problem.cols() <= cfg.qq_max_cols {
        return GuardedRank { rank: problem.build_qq().rank(), primes: vec![], retries: 0, used_qq: true };
    }
    for attempt in 0..MAX_PRIME_RETRIES {
        let mut rng = rng_for(cfg.seed, &[0x6764, tag, attempt as u64]);
        let p1 = sample_prime(&mut rng);
        let p2 = loop {
            let p = sample_prime(&mut rng);
            if p != p1 {
                break p;
            }
        };
        let r1 = problem.build_gf(GF::new(p1)).map(|m| m.rank());
        let r2 = problem.build_gf(GF::new(p2)).map(|m| m.rank());
        if let (Some(r1), Some(r2)) = (r1, r2) {
            if r1 == r2 {
                return GuardedRank { rank: r1, primes: vec![p1, p2], retries: attempt, used_qq: false };
            }
        }
    }
    GuardedRank {
        rank: problem.build_qq().rank(),
        primes: vec![],
        retries: MAX_PRIME_RETRIES,
        used_qq: true,
    }
}

/// Generic two-prime consensus: run `compute` modulo two independently drawn
/// primes and accept when the results agree, retrying with fresh primes up to
/// three times. `None` tells the caller to fall back to rational arithmetic.
pub fn two_prime_consensus<T: PartialEq>(
    cfg: &GuardConfig,
    tag: u64,
    compute: impl Fn(GF) -> Option<T>,
) -> Option<T> {
    for attempt in 0..MAX_PRIME_RETRIES {
        let mut rng = rng_for(cfg.seed, &[0x636f6e73, tag, attempt as u64]);
        let p1 = sample_prime(&mut rng);
        let p2 = loop {
            let p = sample_prime(&mut rng);
            if p != p1 {
                break p;
            }
        };
        if let (Some(a), Some(b)) = (compute(GF::new(p1)), compute(GF::new(p2))) {
            if a == b {
                return Some(a);
            }
        }
    }
    None
}

/// A rank problem given by explicit rational entries.
pub struct ExplicitProblem {
    pub rows: Vec<Vec<crate::field::Rat>>,
    pub cols: usize,
}

impl RankProblem for ExplicitProblem {
    fn cols(&self) -> usize {
        self.cols
    }
    fn build_qq(&self) -> ExactMatrix<QQ> {
        ExactMatrix::from_rows(QQ, self.rows.clone(), self.cols)
    }
    fn build_gf(&self, gf: GF) -> Option<ExactMatrix<GF>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            out.push(row.iter().map(|q| gf.from_rat(q)).collect::<Option<Vec<_>>>()?);
        }
        Some(ExactMatrix::from_rows(gf, out, self.cols))
    }
}

pub fn qq_matrix(rows: Vec<Vec<crate::field::Rat>>, cols: usize) -> ExactMatrix<QQ> {
    ExactMatrix::from_rows(QQ, rows, cols)
}

/// Convenience: rank of an explicit rational matrix.
pub fn rank_qq(rows: Vec<Vec<crate::field::Rat>>, cols: usize) -> usize {
    qq_matrix(rows, cols).rank()
}

pub fn identity_qq(n: usize) -> ExactMatrix<QQ> {
    let mut m = ExactMatrix::zero(QQ, n, n);
    for i in 0..n {
        m.set(i, i, crate::field::rat(1));
    }
    m
}

/// 3x3 rational matrix inverse, used by coordinate changes.
pub fn invert3(m: &[[crate::field::Rat; 3]; 3]) -> Result<[[crate::field::Rat; 3]; 3]> {
    use crate::error::Error;
    use crate::field::rat;
    let det = det3(m);
    if det == rat(0) {
        return Err(Error::SingularMatrix);
    }
    let cof = |r: usize, c: usize| {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let minor = &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]];
        if (r + c) % 2 == 0 { minor } else { -minor }
    };
    let mut inv = std::array::from_fn(|_| std::array::from_fn(|_| rat(0)));
    for (r, row) in inv.iter_mut().enumerate() {
        for (c, e) in row.iter_mut().enumerate() {
            // adjugate transpose
            *e = cof(c, r) / &det;
        }
    }
    Ok(inv)
}

pub fn det3(m: &[[crate::field::Rat; 3]; 3]) -> crate::field::Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn mat3_mul(a: &[[crate::field::Rat; 3]; 3], b: &[[crate::field::Rat; 3]; 3]) -> [[crate::field::Rat; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = crate::field::rat(0);
            for (k, bk) in b.iter().enumerate() {
                acc += &a[i][k] * &bk[j];
            }
            acc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{prime_table, rat};

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix<QQ> {
        let cols = rows[0].len();
        qq_matrix(rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect(), cols)
    }

    #[test]
    fn rank_identity_and_proportional_rows() {
        assert_eq!(identity_qq(3).rank(), 3);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_dimensions() {
        let k = m(vec![vec![1, 1, 1]]).kernel_basis();
        assert_eq!(k.len(), 2);
        assert!(m(vec![vec![1, 2], vec![3, 4]]).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_are_exact_null_vectors() {
        let a = m(vec![vec![1, 2, 3, 1], vec![2, 4, 6, 2], vec![0, 1, 1, 5]]);
        let basis = a.kernel_basis();
        assert_eq!(a.rank() + basis.len(), a.cols);
        for v in basis {
            assert!(a.mul_vec(&v).iter().all(|e| e == &rat(0)));
        }
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let a = ExactMatrix::zero(QQ, 0, 4);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().len(), 4);
    }

    #[test]
    fn modular_rank_matches_rational_rank() {
        let rows = vec![
            vec![rat(1), crate::field::rat_frac(1, 2), rat(3)],
            vec![rat(2), rat(1), rat(6)],
            vec![rat(0), rat(5), rat(1)],
        ];
        let prob = ExplicitProblem { rows, cols: 3 };
        let gf = GF::new(prime_table()[3]);
        assert_eq!(prob.build_qq().rank(), prob.build_gf(gf).unwrap().rank());
    }

    #[test]
    fn guard_small_matrix_uses_qq() {
        let prob = ExplicitProblem { rows: vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]], cols: 2 };
        let out = rank_with_guard(&prob, &GuardConfig::default(), 7);
        assert_eq!(out.rank, 1);
        assert!(out.used_qq);
    }

    #[test]
    fn guard_large_matrix_two_primes_agree() {
        let n = 210;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = vec![rat(0); n];
            row[i] = rat(1);
            if i + 1 < n {
                row[i + 1] = rat(7);
            }
            rows.push(row);
        }
        rows.push(rows[0].clone());
        let prob = ExplicitProblem { rows, cols: n };
        let out = rank_with_guard(&prob, &GuardConfig::default(), 1);
        assert_eq!(out.rank, n);
        assert!(!out.used_qq);
        assert_eq!(out.primes.len(), 2);
    }

    #[test]
    fn guard_retries_on_unlucky_prime() {
        // Entries divisible by the first prime the seeded stream will draw, so
        // the first round disagrees and the guard must retry with fresh primes.
        let cfg = GuardConfig::default();
        let mut rng = rng_for(cfg.seed, &[0x6764, 99, 0]);
        let p1 = sample_prime(&mut rng);
        let n = 201;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = vec![rat(0); n];
            row[i] = rat(p1 as i64);
            rows.push(row);
        }
        let prob = ExplicitProblem { rows, cols: n };
        let out = rank_with_guard(&prob, &cfg, 99);
        assert_eq!(out.rank, n);
        assert!(out.retries >= 1);
    }

    #[test]
    fn invert3_roundtrip() {
        let m = [
            [rat(1), rat(2), rat(0)],
            [rat(0), rat(1), rat(4)],
            [rat(5), rat(0), rat(1)],
        ];
        let inv = invert3(&m).unwrap();
        let prod = mat3_mul(&m, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(*e, rat((i == j) as i64));
            }
        }
    }
}

//! Graded Betti numbers of the Milnor algebra, computed as degreewise
//! homology of the Koszul complex of (x, y, z) acting on M(f), and the
//! reader that recognizes the free and nearly free resolution shapes.
//!
//! The internal-degree convention puts an element of M(f)_k in homological
//! slot i at degree k + i; it is pinned by the smooth conic, whose table must
//! read beta_{0,0} = 1, beta_{1,1} = 3, beta_{2,2} = 3, beta_{3,3} = 1.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, GF, QQ};
use crate::jacobian::jacobian_rows;
use crate::matrix::{ExactMatrix, FieldMode, GuardConfig};
use crate::poly::{Curve, Monomial, dim_degree, monomial_basis};
use std::collections::BTreeMap;

const TAG_BETTI: u64 = 0x6265;

/// Nonzero graded Betti numbers beta_{i,j} of M(f), keyed by (i, j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Twists of the i-th free module, as (degree, multiplicity) pairs.
    pub fn column(&self, i: usize) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .filter(|((ii, _), _)| *ii == i)
            .map(|((_, j), v)| (*j, *v))
            .collect()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.column(i).iter().map(|(_, v)| v).sum()
    }

    pub fn as_triples(&self) -> Vec<(usize, usize, usize)> {
        self.entries.iter().map(|((i, j), v)| (*i, *j, *v)).collect()
    }
}

/// Multiplication maps M_k -> M_{k+1} by x, y, z on standard-monomial bases.
struct MilnorModule<F: FieldCtx> {
    dims: Vec<usize>,
    mult: Vec<[ExactMatrix<F>; 3]>,
}

fn milnor_module<F: FieldCtx>(ctx: &F, curve: &Curve, top: usize) -> Option<MilnorModule<F>> {
    let d = curve.degree();
    let partials = curve.partials();

    struct Level<F: FieldCtx> {
        basis: Vec<Monomial>,
        /// global column index -> Std(local index) or Pivot(row in the rref)
        role: Vec<Role>,
        rref: Option<crate::matrix::Rref<F>>,
        std_cols: Vec<usize>,
    }
    enum Role {
        Std(usize),
        Pivot(usize),
    }

    let mut levels: Vec<Level<F>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let basis = monomial_basis(k);
        let rows = jacobian_rows(ctx, partials, k, d)?;
        if rows.is_empty() {
            let role = (0..basis.len()).map(Role::Std).collect();
            let std_cols = (0..basis.len()).collect();
            levels.push(Level { basis, role, rref: None, std_cols });
            continue;
        }
        let m = ExactMatrix::from_rows(ctx.clone(), rows, basis.len());
        let rref = m.rref();
        let mut role: Vec<Role> = Vec::with_capacity(basis.len());
        let mut std_cols = Vec::new();
        let mut pivot_iter = rref.pivots.iter().enumerate().peekable();
        for col in 0..basis.len() {
            match pivot_iter.peek() {
                Some(&(row, &pc)) if pc == col => {
                    role.push(Role::Pivot(row));
                    pivot_iter.next();
                }
                _ => {
                    role.push(Role::Std(std_cols.len()));
                    std_cols.push(col);
                }
            }
        }
        levels.push(Level { basis, role, rref: Some(rref), std_cols });
    }

    let dims: Vec<usize> = levels.iter().map(|l| l.std_cols.len()).collect();
    let mut mult = Vec::with_capacity(top);
    for k in 0..top {
        let (lo, hi) = {
            let (a, b) = levels.split_at(k + 1);
            (&a[k], &b[0])
        };
        let index_hi: std::collections::HashMap<Monomial, usize> =
            hi.basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let maps: [ExactMatrix<F>; 3] = std::array::from_fn(|var| {
            let mut m = ExactMatrix::zero(ctx.clone(), dims[k + 1], dims[k]);
            for (local, &gcol) in lo.std_cols.iter().enumerate() {
                let target = lo.basis[gcol].mul(&Monomial::var(var));
                let tcol = index_hi[&target];
                match &hi.role[tcol] {
                    Role::Std(t) => m.set(*t, local, ctx.one()),
                    Role::Pivot(row) => {
                        let rref = hi.rref.as_ref().unwrap();
                        for (t, &sc) in hi.std_cols.iter().enumerate() {
                            let e = rref.matrix.at(*row, sc);
                            if !ctx.is_zero(e) {
                                m.set(t, local, ctx.neg(e));
                            }
                        }
                    }
                }
            }
            m
        });
        mult.push(maps);
    }
    Some(MilnorModule { dims, mult })
}

fn betti_over<F: FieldCtx>(ctx: &F, curve: &Curve) -> Option<BettiTable> {
    let d = curve.degree();
    let top = 3 * d - 3;
    let module = milnor_module(ctx, curve, top)?;
    let dim = |k: i64| -> usize {
        if k < 0 { 0 } else { module.dims.get(k as usize).copied().unwrap_or(0) }
    };
    let maps = |k: i64| -> Option<&[ExactMatrix<F>; 3]> {
        if k < 0 { None } else { module.mult.get(k as usize) }
    };

    let mut entries = BTreeMap::new();
    for j in 0..=top {
        let j = j as i64;
        let b0 = dim(j);
        let b1 = dim(j - 1);
        let b2 = dim(j - 2);
        let b3 = dim(j - 3);

        // d1 = [X Y Z] : M_{j-1}^3 -> M_j
        let rank1 = match maps(j - 1) {
            Some([x, y, z]) if b0 > 0 && b1 > 0 => {
                let mut m = ExactMatrix::zero(ctx.clone(), b0, 3 * b1);
                copy_block(ctx, &mut m, x, 0, 0, false);
                copy_block(ctx, &mut m, y, 0, b1, false);
                copy_block(ctx, &mut m, z, 0, 2 * b1, false);
                m.rank()
            }
            _ => 0,
        };
        // d2 : M_{j-2}^3 -> M_{j-1}^3 with blocks [-Y -Z 0; X 0 -Z; 0 X Y]
        let rank2 = match maps(j - 2) {
            Some([x, y, z]) if b1 > 0 && b2 > 0 => {
                let mut m = ExactMatrix::zero(ctx.clone(), 3 * b1, 3 * b2);
                copy_block(ctx, &mut m, y, 0, 0, true);
                copy_block(ctx, &mut m, z, 0, b2, true);
                copy_block(ctx, &mut m, x, b1, 0, false);
                copy_block(ctx, &mut m, z, b1, 2 * b2, true);
                copy_block(ctx, &mut m, x, 2 * b1, b2, false);
                copy_block(ctx, &mut m, y, 2 * b1, 2 * b2, false);
                m.rank()
            }
            _ => 0,
        };
        // d3 : M_{j-3} -> M_{j-2}^3 with blocks [Z; -Y; X]
        let rank3 = match maps(j - 3) {
            Some([x, y, z]) if b2 > 0 && b3 > 0 => {
                let mut m = ExactMatrix::zero(ctx.clone(), 3 * b2, b3);
                copy_block(ctx, &mut m, z, 0, 0, false);
                copy_block(ctx, &mut m, y, b2, 0, true);
                copy_block(ctx, &mut m, x, 2 * b2, 0, false);
                m.rank()
            }
            _ => 0,
        };

        let j = j as usize;
        let beta0 = b0 - rank1;
        let beta1 = (3 * b1 - rank1).checked_sub(rank2)?;
        let beta2 = (3 * b2 - rank2).checked_sub(rank3)?;
        let beta3 = b3 - rank3;
        if (j == 0 && beta0 != 1) || (j > 0 && beta0 != 0) {
            return None;
        }
        for (i, beta) in [(0, beta0), (1, beta1), (2, beta2), (3, beta3)] {
            if beta > 0 {
                entries.insert((i, j), beta);
            }
        }
    }
    Some(BettiTable { entries })
}

fn copy_block<F: FieldCtx>(
    ctx: &F,
    dst: &mut ExactMatrix<F>,
    src: &ExactMatrix<F>,
    row0: usize,
    col0: usize,
    negate: bool,
) {
    for r in 0..src.rows {
        for c in 0..src.cols {
            let e = src.at(r, c);
            if !ctx.is_zero(e) {
                dst.set(row0 + r, col0 + c, if negate { ctx.neg(e) } else { e.clone() });
            }
        }
    }
}

/// Graded Betti numbers of M(f). Under the automatic field mode, small
/// tables are computed over Q and large ones modulo two independent primes
/// that must agree.
pub fn betti_table(curve: &Curve, cfg: &GuardConfig) -> Result<BettiTable> {
    let d = curve.degree();
    let widest = dim_degree((3 * d - 3) as i64);
    let qq = || {
        betti_over(&QQ, curve).ok_or_else(|| {
            Error::InconsistentTable("rational Koszul homology violated beta_0 normalization".into())
        })
    };
    match cfg.mode {
        FieldMode::Rational => return qq(),
        FieldMode::Prime(p) => {
            if let Some(t) = betti_over(&GF::new(p), curve) {
                return Ok(t);
            }
            return qq();
        }
        FieldMode::Auto => {}
    }
    if widest <= cfg.qq_max_cols {
        return qq();
    }
    if let Some(t) = crate::matrix::two_prime_consensus(cfg, TAG_BETTI, |gf| betti_over(&gf, curve)) {
        return Ok(t);
    }
    qq()
}

/// Shape of the tail of the minimal resolution, read off the Betti table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutionShape {
    Free { d1: usize, d2: usize },
    NearlyFree { d1: usize, d2: usize, d3: usize, b: i64 },
    Other,
}

/// Recognize the free and nearly free shapes. The generator degrees of the
/// syzygy bundle are read from the second column as d_i = j - (d-1), and for
/// the nearly free shape b is recovered as sum(d_i) - 2(d-1) and checked
/// against the third column.
pub fn resolution_shape(bt: &BettiTable, d: usize) -> Result<ResolutionShape> {
    let f2 = bt.column(2);
    let f3 = bt.column(3);
    let rank2: usize = bt.rank(2);
    let rank3: usize = bt.rank(3);
    if rank2 != rank3 + 2 {
        return Err(Error::InconsistentTable(format!(
            "rank F_2 = {rank2} but rank F_3 = {rank3}; expected rank F_2 = rank F_3 + 2"
        )));
    }
    let mut degrees: Vec<usize> = Vec::new();
    for (j, mult) in &f2 {
        if *j < d - 1 {
            return Err(Error::InconsistentTable(format!(
                "syzygy generator at internal degree {j} below d-1"
            )));
        }
        for _ in 0..*mult {
            degrees.push(j - (d - 1));
        }
    }
    degrees.sort_unstable();
    if rank3 == 0 && degrees.len() == 2 {
        return Ok(ResolutionShape::Free { d1: degrees[0], d2: degrees[1] });
    }
    if rank3 == 1 && degrees.len() == 3 {
        let sum: usize = degrees.iter().sum();
        let b = sum as i64 - 2 * (d as i64 - 1);
        let j3 = f3[0].0 as i64;
        if j3 != b + 2 * (d as i64 - 1) {
            return Err(Error::InconsistentTable(format!(
                "third module sits at degree {j3}, but the generator degrees predict {}",
                b + 2 * (d as i64 - 1)
            )));
        }
        return Ok(ResolutionShape::NearlyFree {
            d1: degrees[0],
            d2: degrees[1],
            d3: degrees[2],
            b,
        });
    }
    Ok(ResolutionShape::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Curve, parse_poly};

    fn curve(s: &str) -> Curve {
        Curve::new(parse_poly(s).unwrap(), 0).unwrap()
    }

    fn table(s: &str) -> BettiTable {
        betti_table(&curve(s), &GuardConfig::default()).unwrap()
    }

    #[test]
    fn smooth_conic_pins_the_grading() {
        let t = table("x^2 + y^2 + z^2");
        let expect: Vec<(usize, usize, usize)> =
            vec![(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)];
        assert_eq!(t.as_triples(), expect);
    }

    #[test]
    fn smooth_cubic_is_the_koszul_complex() {
        let t = table("x^3 + y^3 + z^3");
        let expect: Vec<(usize, usize, usize)> =
            vec![(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)];
        assert_eq!(t.as_triples(), expect);
    }

    #[test]
    fn conic_plus_secant_resolution() {
        let t = table("x^3 + x*y*z");
        let expect: Vec<(usize, usize, usize)> =
            vec![(0, 0, 1), (1, 2, 3), (2, 3, 1), (2, 4, 2), (3, 5, 1)];
        assert_eq!(t.as_triples(), expect);
        assert_eq!(
            resolution_shape(&t, 3).unwrap(),
            ResolutionShape::NearlyFree { d1: 1, d2: 2, d3: 2, b: 1 }
        );
    }

    #[test]
    fn free_and_other_shapes() {
        // free sextic with exponents (2,3): two syzygy generators, no socle
        let t = table("y^5*z + x^6 + x^2*y^4");
        assert_eq!(resolution_shape(&t, 6).unwrap(), ResolutionShape::Free { d1: 2, d2: 3 });
        assert_eq!(t.rank(3), 0);
        assert_eq!(t.get(2, 7), 1);
        assert_eq!(t.get(2, 8), 1);

        // the six-cusped sextic falls outside both shapes
        let c = parse_poly("x^2 + y^2").unwrap();
        let s = parse_poly("y^3 + z^3").unwrap();
        let zariski = Curve::new(c.pow(3).add(&s.mul(&s)), 0).unwrap();
        let t = betti_table(&zariski, &GuardConfig::default()).unwrap();
        assert_eq!(resolution_shape(&t, 6).unwrap(), ResolutionShape::Other);
    }

    #[test]
    fn three_cusped_quartic_shape() {
        let t = table("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2");
        assert_eq!(
            resolution_shape(&t, 4).unwrap(),
            ResolutionShape::NearlyFree { d1: 2, d2: 2, d3: 2, b: 0 }
        );
        // 0 -> S(-6) -> S(-5)^3 -> S(-3)^3 -> S
        assert_eq!(t.get(1, 3), 3);
        assert_eq!(t.get(2, 5), 3);
        assert_eq!(t.get(3, 6), 1);
    }
}

//! Concrete module instances: evaluation modules, their tensor products via
//! the coproduct, extraction of tridiagonal pairs from them, the
//! irreducibility scan over parameter grids, and the antiautomorphism
//! search.

use crate::error::Error;
use crate::field::{q_bracket, Field, FieldConfig};
use crate::matrix::Matrix;
use crate::octet::{
    alternate_from_chevalley, check_chevalley_relations, weight_decomposition, ChevalleyOctet,
    Variant,
};
use crate::pair::{verify_tridiagonal_pair, PairCheck, ShapeVector};
use crate::subspace::kernel;

/// A tensor product of evaluation modules: diameters and nonzero evaluation
/// parameters, applied left to right.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleSpec<T: Field> {
    pub factors: Vec<(usize, T)>,
    pub cfg: FieldConfig<T>,
}

impl<T: Field> ModuleSpec<T> {
    pub fn new(factors: Vec<(usize, T)>, cfg: FieldConfig<T>) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("factor list must be nonempty".into()));
        }
        for (d, t) in &factors {
            if *d < 1 {
                return Err(Error::InvalidParameter("d must be >= 1".into()));
            }
            if t.is_zero() {
                return Err(Error::InvalidParameter("t must be nonzero".into()));
            }
        }
        Ok(ModuleSpec { factors, cfg })
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|(d, _)| d + 1).product()
    }

    /// Sum of the factor diameters, the nominal diameter of the pair.
    pub fn total_diameter(&self) -> usize {
        self.factors.iter().map(|(d, _)| d).sum()
    }
}

/// The (d+1)-dimensional evaluation module with spectral parameter t.
///
/// On the basis v_0..v_d: K1 v_i = q^{d-2i} v_i, K0 = K1^{-1},
/// e1+ v_i = [i] v_{i-1}, e1- v_i = [d-i] v_{i+1}, e0+ = t e1-,
/// e0- = t^{-1} e1+. The octet is gated behind the full Chevalley relation
/// checker; a violation means the convention itself is wrong and is fatal.
pub fn evaluation_module<T: Field>(
    d: usize,
    t: &T,
    cfg: &FieldConfig<T>,
) -> Result<ChevalleyOctet<T>, Error> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    if t.is_zero() {
        return Err(Error::InvalidParameter("t must be nonzero".into()));
    }
    let n = d + 1;
    let k1_diag: Vec<T> = (0..=d).map(|i| cfg.q_pow(d as i64 - 2 * i as i64)).collect();
    let k0_diag: Vec<T> = (0..=d).map(|i| cfg.q_pow(2 * i as i64 - d as i64)).collect();
    let mut e1p = Matrix::<T>::zero(n, n);
    let mut e1m = Matrix::<T>::zero(n, n);
    for i in 0..=d {
        if i >= 1 {
            e1p[(i - 1, i)] = q_bracket(i as u32, cfg);
        }
        if i < d {
            e1m[(i + 1, i)] = q_bracket((d - i) as u32, cfg);
        }
    }
    let t_inv = T::one() / t.clone();
    let oct = ChevalleyOctet {
        e0p: e1m.scale(t),
        e0m: e1p.scale(&t_inv),
        e1p,
        e1m,
        k0: Matrix::diagonal(&k0_diag),
        k1: Matrix::diagonal(&k1_diag),
        k0inv: Matrix::diagonal(&k1_diag),
        k1inv: Matrix::diagonal(&k0_diag),
    };
    let report = check_chevalley_relations(&oct, cfg);
    if !report.pass() {
        return Err(Error::ConventionFailure(format!(
            "evaluation module d={d}: {:?}",
            report.failed_names()
        )));
    }
    Ok(oct)
}

/// Tensor of two Chevalley octets by the coproduct
/// K ↦ K ⊗ K, e+ ↦ e+ ⊗ K + 1 ⊗ e+, e- ↦ e- ⊗ 1 + K^{-1} ⊗ e-.
fn tensor_step<T: Field>(a: &ChevalleyOctet<T>, b: &ChevalleyOctet<T>) -> ChevalleyOctet<T> {
    let ia = Matrix::<T>::identity(a.dim());
    let ib = Matrix::<T>::identity(b.dim());
    let plus = |ea: &Matrix<T>, ka: &Matrix<T>, eb: &Matrix<T>| {
        &ea.kron(ka) + &ia.kron(eb)
    };
    let minus = |ea: &Matrix<T>, kainv: &Matrix<T>, eb: &Matrix<T>| {
        &ea.kron(&ib) + &kainv.kron(eb)
    };
    ChevalleyOctet {
        e0p: plus(&a.e0p, &b.k0, &b.e0p),
        e1p: plus(&a.e1p, &b.k1, &b.e1p),
        e0m: minus(&a.e0m, &a.k0inv, &b.e0m),
        e1m: minus(&a.e1m, &a.k1inv, &b.e1m),
        k0: a.k0.kron(&b.k0),
        k1: a.k1.kron(&b.k1),
        k0inv: a.k0inv.kron(&b.k0inv),
        k1inv: a.k1inv.kron(&b.k1inv),
    }
}

/// Chevalley octet on the tensor product of the spec's evaluation modules,
/// folded left to right and gated behind the relation checker.
pub fn tensor_module<T: Field>(spec: &ModuleSpec<T>) -> Result<ChevalleyOctet<T>, Error> {
    let mut acc: Option<ChevalleyOctet<T>> = None;
    for (d, t) in &spec.factors {
        let factor = evaluation_module(*d, t, &spec.cfg)?;
        acc = Some(match acc {
            None => factor,
            Some(prev) => tensor_step(&prev, &factor),
        });
    }
    let oct = acc.expect("nonempty factor list");
    let report = check_chevalley_relations(&oct, &spec.cfg);
    if !report.pass() {
        return Err(Error::ConventionFailure(format!(
            "tensor module: {:?}",
            report.failed_names()
        )));
    }
    Ok(oct)
}

/// A tridiagonal-pair candidate extracted from a module structure.
#[derive(Clone, Debug)]
pub struct ExtractedPair<T: Field> {
    pub a_op: Matrix<T>,
    pub astar_op: Matrix<T>,
    pub check: PairCheck<T>,
}

/// Translates a Chevalley octet to alternate generators, confirms the module
/// has type (1,1), reads off A = a y1- and A* = a* y0- (minus) or A = a y0+
/// and A* = a* y1+ (plus), and runs the full pair verification.
///
/// A failed irreducibility certificate is reported in the check, not raised:
/// without it the construction promises nothing about the pair.
pub fn tdpair_from_module<T: Field>(
    oct: &ChevalleyOctet<T>,
    a: &T,
    astar: &T,
    variant: Variant,
    cfg: &FieldConfig<T>,
) -> Result<ExtractedPair<T>, Error> {
    let alt = alternate_from_chevalley(oct, cfg);
    let weights = weight_decomposition(&alt, cfg)?;
    if !weights.has_type_one_one() {
        return Err(Error::InvalidParameter(format!(
            "module has type ({}, {}), not (1, 1)",
            weights.data.eps0, weights.data.eps1
        )));
    }
    let (a_op, astar_op) = match variant {
        Variant::Minus => (alt.y1m.scale(a), alt.y0m.scale(astar)),
        Variant::Plus => (alt.y0p.scale(a), alt.y1p.scale(astar)),
    };
    let check = verify_tridiagonal_pair(&a_op, &astar_op, cfg, a, astar)?;
    Ok(ExtractedPair { a_op, astar_op, check })
}

/// One row of the irreducibility scan.
#[derive(Clone, Debug)]
pub struct ScanRecord<T: Field> {
    pub spec: ModuleSpec<T>,
    pub dim: usize,
    pub burnside_dim: usize,
    pub irreducible: bool,
    /// Shape of the extracted pair when the full verification passes.
    pub shape: Option<ShapeVector>,
    /// Error text when the module could not be built or typed.
    pub error: Option<String>,
}

/// Runs the Burnside certificate (and, when it passes, the pair
/// verification) over a grid of module specs. Findings only: the record
/// reports the generated-algebra dimension against n^2 and never claims a
/// necessary or sufficient condition.
pub fn scan_irreducibility<T: Field>(
    grid: &[ModuleSpec<T>],
    a: &T,
    astar: &T,
    variant: Variant,
) -> Vec<ScanRecord<T>> {
    grid.iter()
        .map(|spec| {
            let dim = spec.dim();
            match tensor_module(spec)
                .and_then(|oct| tdpair_from_module(&oct, a, astar, variant, &spec.cfg))
            {
                Ok(extracted) => {
                    let report = &extracted.check.report;
                    ScanRecord {
                        spec: spec.clone(),
                        dim,
                        burnside_dim: report.burnside_dim,
                        irreducible: report.irreducible,
                        shape: if report.pass() { report.shape.clone() } else { None },
                        error: None,
                    }
                }
                Err(e) => ScanRecord {
                    spec: spec.clone(),
                    dim,
                    burnside_dim: 0,
                    irreducible: false,
                    shape: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}

/// Result of the antiautomorphism search for a pair (A, A*).
#[derive(Clone, Debug)]
pub struct AntiautResult<T: Field> {
    pub found: bool,
    pub s: Option<Matrix<T>>,
    /// Whether the returned S is symmetric.
    pub symmetric: bool,
    /// Dimension of the full intertwiner solution space.
    pub solution_dim: usize,
}

/// Searches for an invertible S with S A^T = A S and S A*^T = A* S; any such
/// S defines the antiautomorphism X ↦ S X^T S^{-1} fixing A and A*.
///
/// Every antiautomorphism of a full matrix algebra has this form, so the
/// search space is complete for absolutely irreducible pairs, where the
/// solution space has dimension at most 1. For larger solution spaces the
/// basis vectors and a deterministic family of combinations are tried.
pub fn find_antiautomorphism<T: Field>(
    a: &Matrix<T>,
    astar: &Matrix<T>,
) -> AntiautResult<T> {
    assert!(a.is_square() && astar.is_square() && a.rows() == astar.rows());
    let n = a.rows();
    // Coefficient matrix of the linear system in the n^2 unknowns S_pq:
    // (S A^T - A S)_{ij} = sum_q S_iq A_jq - sum_p A_ip S_pj.
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(2 * n * n);
    for m in [a, astar] {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![T::zero(); n * n];
                for q in 0..n {
                    row[i * n + q] = row[i * n + q].clone() + m[(j, q)].clone();
                }
                for p in 0..n {
                    row[p * n + j] = row[p * n + j].clone() - m[(i, p)].clone();
                }
                rows.push(row);
            }
        }
    }
    let solutions = kernel(&Matrix::from_rows(rows));
    let dim = solutions.dim();
    if dim == 0 {
        return AntiautResult {
            found: false,
            s: None,
            symmetric: false,
            solution_dim: 0,
        };
    }
    let basis: Vec<Matrix<T>> = solutions
        .basis_columns()
        .into_iter()
        .map(|v| Matrix::new(n, n, v))
        .collect();
    // Try basis elements first, then combinations sum lambda^k S_k along a
    // deterministic curve; if some combination is invertible the determinant
    // polynomial is not identically zero on the curve, so few trials suffice.
    let mut candidates: Vec<Matrix<T>> = basis.clone();
    if dim > 1 {
        for lambda in 1..=(n * dim + 1) {
            let mut acc = Matrix::<T>::zero(n, n);
            let mut w = T::one();
            let l = (0..lambda).fold(T::zero(), |x, _| x + T::one());
            for s in &basis {
                acc = &acc + &s.scale(&w);
                w = w * l.clone();
            }
            candidates.push(acc);
        }
    }
    for s in candidates {
        if s.inverse().is_ok() {
            let symmetric = s == s.transpose();
            return AntiautResult {
                found: true,
                s: Some(s),
                symmetric,
                solution_dim: dim,
            };
        }
    }
    AntiautResult {
        found: false,
        s: None,
        symmetric: false,
        solution_dim: dim,
    }
}

/// Checks the exact intertwining identities for a returned S.
pub fn antiaut_intertwines<T: Field>(
    s: &Matrix<T>,
    a: &Matrix<T>,
    astar: &Matrix<T>,
) -> bool {
    let at = a.transpose();
    let ast = astar.transpose();
    (s * &at) == (a * s) && (s * &ast) == (astar * s)
}

/// The small-height default grid for the scan of the spectral-parameter
/// ratio: powers q^k for -4 <= k <= 4 plus 3, 1/3, 5, 1/5.
pub fn default_t_grid<T: Field>(cfg: &FieldConfig<T>) -> Vec<T> {
    let mut grid: Vec<T> = (-4..=4).map(|k| cfg.q_pow(k)).collect();
    let three = T::one() + T::one() + T::one();
    let five = three.clone() + T::one() + T::one();
    for extra in [
        three.clone(),
        T::one() / three,
        five.clone(),
        T::one() / five,
    ] {
        if !grid.contains(&extra) {
            grid.push(extra);
        }
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octet::check_alternate_relations;
    use crate::testutil::{e1_ops, q2};
    use crate::{rat, Mat, Rat};

    #[test]
    fn evaluation_module_d1_matches_frozen_matrices() {
        let oct = evaluation_module(1, &rat(1, 1), &q2()).unwrap();
        assert_eq!(oct.k1, Mat::diagonal(&[rat(2, 1), rat(1, 2)]));
        assert_eq!(oct.k0, Mat::diagonal(&[rat(1, 2), rat(2, 1)]));
        assert_eq!(
            oct.e1m,
            Mat::from_rows(vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
            ])
        );
        assert_eq!(
            oct.e1p,
            Mat::from_rows(vec![
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(0, 1), rat(0, 1)],
            ])
        );
    }

    #[test]
    fn evaluation_module_rejects_bad_parameters() {
        assert!(evaluation_module(0, &rat(1, 1), &q2()).is_err());
        assert!(evaluation_module(1, &rat(0, 1), &q2()).is_err());
    }

    #[test]
    fn affine_and_finite_nilpotents_in_two_dims() {
        // For d = 1 the strictly triangular generators square to zero, so
        // the same-direction products e0+ e1- and e0- e1+ vanish.
        for t in [rat(1, 1), rat(3, 1), rat(-2, 5)] {
            let oct = evaluation_module(1, &t, &q2()).unwrap();
            assert!((&oct.e0p * &oct.e1m).is_zero());
            assert!((&oct.e0m * &oct.e1p).is_zero());
        }
    }

    #[test]
    fn evaluation_module_d2_bracket_entry() {
        let oct = evaluation_module(2, &rat(1, 1), &q2()).unwrap();
        // e1+ v_2 = [2] v_1 = (5/2) v_1
        assert_eq!(oct.e1p[(1, 2)], rat(5, 2));
    }

    #[test]
    fn single_factor_tensor_equals_evaluation_module() {
        let spec = ModuleSpec::new(vec![(2, rat(3, 1))], q2()).unwrap();
        let via_tensor = tensor_module(&spec).unwrap();
        let direct = evaluation_module(2, &rat(3, 1), &q2()).unwrap();
        assert_eq!(via_tensor, direct);
    }

    #[test]
    fn two_factor_tensor_passes_relations_and_k0k1_is_identity() {
        let spec = ModuleSpec::new(vec![(1, rat(1, 1)), (1, rat(3, 1))], q2()).unwrap();
        let oct = tensor_module(&spec).unwrap();
        assert_eq!(oct.dim(), 4);
        assert!(check_chevalley_relations(&oct, &q2()).pass());
        assert_eq!(&oct.k0 * &oct.k1, Mat::identity(4));
        // the alternate translate also satisfies its presentation
        let alt = alternate_from_chevalley(&oct, &q2());
        assert!(check_alternate_relations(&alt, &q2()).pass());
    }

    #[test]
    fn k0k1_identity_on_various_tensors() {
        for factors in [
            vec![(1, rat(2, 1))],
            vec![(1, rat(1, 1)), (2, rat(5, 1))],
            vec![(2, rat(1, 3)), (1, rat(7, 2))],
        ] {
            let spec = ModuleSpec::new(factors, q2()).unwrap();
            let oct = tensor_module(&spec).unwrap();
            let n = oct.dim();
            assert_eq!(&oct.k0 * &oct.k1, Mat::identity(n));
        }
    }

    #[test]
    fn eval_1_1_minus_reproduces_the_reference_instance() {
        let oct = evaluation_module(1, &rat(1, 1), &q2()).unwrap();
        let extracted =
            tdpair_from_module(&oct, &rat(1, 1), &rat(1, 1), Variant::Minus, &q2()).unwrap();
        let (a, astar) = e1_ops();
        assert_eq!(extracted.a_op, a);
        assert_eq!(extracted.astar_op, astar);
        assert!(extracted.check.report.pass());
    }

    #[test]
    fn negative_q_instances_verify() {
        let cfg = FieldConfig::new(rat(-2, 1)).unwrap();
        let oct = evaluation_module(2, &rat(-3, 1), &cfg).unwrap();
        let extracted =
            tdpair_from_module(&oct, &rat(1, 1), &rat(1, 1), Variant::Minus, &cfg).unwrap();
        assert!(
            extracted.check.report.pass(),
            "{:?}",
            extracted.check.report.failures
        );
        assert_eq!(extracted.check.report.d, Some(2));
    }

    #[test]
    fn leonard_family_up_to_d4() {
        for d in 1..=4usize {
            for variant in [Variant::Minus, Variant::Plus] {
                let oct = evaluation_module(d, &rat(1, 1), &q2()).unwrap();
                let extracted =
                    tdpair_from_module(&oct, &rat(1, 1), &rat(1, 1), variant, &q2()).unwrap();
                let report = &extracted.check.report;
                assert!(report.pass(), "d={d} {variant}: {:?}", report.failures);
                assert_eq!(report.d, Some(d));
                assert!(report.shape.as_ref().unwrap().is_leonard());
            }
        }
    }

    #[test]
    fn generic_two_fold_tensor_has_shape_1_2_1() {
        let spec = ModuleSpec::new(vec![(1, rat(1, 1)), (1, rat(3, 1))], q2()).unwrap();
        let oct = tensor_module(&spec).unwrap();
        let extracted =
            tdpair_from_module(&oct, &rat(1, 1), &rat(1, 1), Variant::Minus, &q2()).unwrap();
        let report = &extracted.check.report;
        assert!(report.pass(), "{:?}", report.failures);
        assert_eq!(report.shape, Some(ShapeVector(vec![1, 2, 1])));
    }

    #[test]
    fn scan_flags_reducible_points_in_the_default_grid() {
        let cfg = q2();
        let grid: Vec<ModuleSpec<Rat>> = default_t_grid(&cfg)
            .into_iter()
            .map(|t| ModuleSpec::new(vec![(1, rat(1, 1)), (1, t)], cfg.clone()).unwrap())
            .collect();
        let records = scan_irreducibility(&grid, &rat(1, 1), &rat(1, 1), Variant::Minus);
        assert_eq!(records.len(), grid.len());
        for r in &records {
            assert_eq!(r.dim, 4);
            if r.irreducible {
                assert_eq!(r.burnside_dim, 16);
                assert_eq!(r.shape, Some(ShapeVector(vec![1, 2, 1])));
            }
        }
        // Some grid points must be flagged and some must pass; the flagged
        // set is whatever the certificate reports.
        assert!(records.iter().any(|r| r.irreducible));
        assert!(records.iter().any(|r| !r.irreducible));
    }

    #[test]
    fn single_factor_scan_is_always_irreducible() {
        let cfg = q2();
        let grid: Vec<ModuleSpec<Rat>> = (1..=4)
            .map(|d| ModuleSpec::new(vec![(d, rat(3, 1))], cfg.clone()).unwrap())
            .collect();
        let records = scan_irreducibility(&grid, &rat(1, 1), &rat(1, 1), Variant::Minus);
        assert!(records.iter().all(|r| r.irreducible));
    }

    #[test]
    fn empty_grid_yields_empty_findings() {
        let records: Vec<ScanRecord<Rat>> =
            scan_irreducibility(&[], &rat(1, 1), &rat(1, 1), Variant::Minus);
        assert!(records.is_empty());
    }

    #[test]
    fn antiaut_on_symmetric_pair() {
        let a = mat_sym();
        let result = find_antiautomorphism(&a, &a);
        assert!(result.found);
        let s = result.s.unwrap();
        assert!(antiaut_intertwines(&s, &a, &a));
    }

    fn mat_sym() -> Mat {
        crate::mat(&[&[1, 2], &[2, 3]])
    }

    #[test]
    fn antiaut_on_reference_instance() {
        let (a, astar) = e1_ops();
        let result = find_antiautomorphism(&a, &astar);
        assert!(result.found);
        assert_eq!(result.solution_dim, 1);
        let s = result.s.unwrap();
        assert!(antiaut_intertwines(&s, &a, &astar));
        assert!(s.inverse().is_ok());
    }

    #[test]
    fn antiaut_across_the_leonard_family() {
        for d in 1..=4usize {
            let oct = evaluation_module(d, &rat(1, 1), &q2()).unwrap();
            let extracted =
                tdpair_from_module(&oct, &rat(1, 1), &rat(1, 1), Variant::Minus, &q2())
                    .unwrap();
            let result = find_antiautomorphism(&extracted.a_op, &extracted.astar_op);
            assert!(result.found, "d={d}");
            let s = result.s.unwrap();
            assert!(antiaut_intertwines(&s, &extracted.a_op, &extracted.astar_op));
        }
    }

    #[test]
    fn default_grid_contents() {
        let grid = default_t_grid(&q2());
        assert!(grid.contains(&rat(16, 1)));
        assert!(grid.contains(&rat(1, 16)));
        assert!(grid.contains(&rat(3, 1)));
        assert!(grid.contains(&rat(1, 5)));
        assert_eq!(grid.len(), 13);
    }
}

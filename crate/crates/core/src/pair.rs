//! Tridiagonal pairs of q-geometric type: axiom verification, standard
//! orderings, the shape vector, and the six split decompositions with their
//! sum and action tables.

use serde::{Deserialize, Serialize};

use crate::decomposition::{DecName, Decomposition, SPLIT_NAMES};
use crate::error::Error;
use crate::field::{Field, FieldConfig};
use crate::matrix::Matrix;
use crate::report::Finding;
use crate::span::generated_algebra_dimension;
use crate::subspace::{eigenspace, subspace_sum, Subspace};

/// A verified tridiagonal pair with q-geometric eigenvalue data.
///
/// theta[i] = a q^{2i-d} and theta_star[i] = a* q^{d-2i}; v and vstar hold
/// the corresponding eigenspace lists in standard order.
#[derive(Clone, Debug)]
pub struct TridiagonalPair<T: Field> {
    pub cfg: FieldConfig<T>,
    pub d: usize,
    pub a: T,
    pub astar: T,
    pub a_op: Matrix<T>,
    pub astar_op: Matrix<T>,
    pub theta: Vec<T>,
    pub theta_star: Vec<T>,
    pub v: Vec<Subspace<T>>,
    pub vstar: Vec<Subspace<T>>,
}

impl<T: Field> TridiagonalPair<T> {
    pub fn dim(&self) -> usize {
        self.a_op.rows()
    }

    pub fn theta(&self, i: usize) -> T {
        self.theta[i].clone()
    }

    pub fn theta_star(&self, i: usize) -> T {
        self.theta_star[i].clone()
    }
}

/// Dimension sequence of any of the six decompositions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShapeVector(pub Vec<usize>);

impl ShapeVector {
    /// rho_i = rho_{d-i}, and rho is nondecreasing up to the middle.
    pub fn is_symmetric_unimodal(&self) -> bool {
        let r = &self.0;
        let d = r.len() - 1;
        (0..=d).all(|i| r[i] == r[d - i]) && (1..=d / 2).all(|i| r[i - 1] <= r[i])
    }

    pub fn is_leonard(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }
}

impl std::fmt::Display for ShapeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Axiom flags and findings from verifying a candidate pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairReport {
    pub diagonalizable_a: bool,
    pub diagonalizable_astar: bool,
    /// A* acts tridiagonally on the ordered eigenspaces of A.
    pub tridiagonal_astar: bool,
    /// A acts tridiagonally on the ordered eigenspaces of A*.
    pub tridiagonal_a: bool,
    /// True iff the generated algebra has dimension n^2 (absolute
    /// irreducibility certificate); false is inconclusive, not a
    /// reducibility claim.
    pub irreducible: bool,
    pub burnside_dim: usize,
    pub n: usize,
    pub d: Option<usize>,
    pub shape: Option<ShapeVector>,
    pub failures: Vec<Finding>,
}

impl PairReport {
    pub fn pass(&self) -> bool {
        self.diagonalizable_a
            && self.diagonalizable_astar
            && self.tridiagonal_astar
            && self.tridiagonal_a
            && self.irreducible
    }
}

/// Verification outcome; `pair` is populated only when every axiom holds.
#[derive(Clone, Debug)]
pub struct PairCheck<T: Field> {
    pub report: PairReport,
    pub pair: Option<TridiagonalPair<T>>,
}

/// Scans the eigenvalue string base * q^j, |j| < n, and accepts exactly a
/// symmetric arithmetic exponent set {-d, -d+2, ..., d} whose eigenspace
/// dimensions fill the space.
fn scan_geometric_string<T: Field>(
    op: &Matrix<T>,
    base: &T,
    cfg: &FieldConfig<T>,
    label: &str,
) -> Result<(usize, Vec<Subspace<T>>), Finding> {
    let n = op.rows();
    let mut found: Vec<(i64, Subspace<T>)> = Vec::new();
    for j in -(n as i64 - 1)..=(n as i64 - 1) {
        let theta = base.clone() * cfg.q_pow(j);
        let e = eigenspace(op, &theta);
        if !e.is_zero() {
            found.push((j, e));
        }
    }
    let total: usize = found.iter().map(|(_, e)| e.dim()).sum();
    if found.is_empty() || total != n {
        return Err(Finding::new(
            format!("{label} eigenvalue string"),
            format!(
                "eigenspaces on the string cover dimension {total} of {n}; \
                 {label} is not diagonalizable with the expected eigenvalues"
            ),
        ));
    }
    let exps: Vec<i64> = found.iter().map(|(j, _)| *j).collect();
    let d = *exps.last().unwrap();
    let string_ok = *exps.first().unwrap() == -d
        && exps.windows(2).all(|w| w[1] - w[0] == 2)
        && d >= 0;
    if !string_ok {
        return Err(Finding::new(
            format!("{label} eigenvalue string"),
            format!("exponent set {exps:?} is not a symmetric step-2 string"),
        ));
    }
    Ok((d as usize, found.into_iter().map(|(_, e)| e).collect()))
}

/// Checks the four tridiagonal-pair axioms for the q-geometric eigenvalue
/// strings determined by (a, a*, q), inferring the diameter from the
/// spectrum.
///
/// Eigenvalue-string failures are reported in the result, not raised;
/// only malformed input (non-square matrices, zero parameters) errors out.
pub fn verify_tridiagonal_pair<T: Field>(
    a_op: &Matrix<T>,
    astar_op: &Matrix<T>,
    cfg: &FieldConfig<T>,
    a: &T,
    astar: &T,
) -> Result<PairCheck<T>, Error> {
    if !a_op.is_square() || !astar_op.is_square() || a_op.rows() != astar_op.rows() {
        return Err(Error::DimensionMismatch(format!(
            "expected equal square matrices, got {}x{} and {}x{}",
            a_op.rows(),
            a_op.cols(),
            astar_op.rows(),
            astar_op.cols()
        )));
    }
    if a_op.rows() == 0 {
        return Err(Error::DimensionMismatch("empty matrices".into()));
    }
    if a.is_zero() || astar.is_zero() {
        return Err(Error::InvalidParameter("a and a* must be nonzero".into()));
    }
    let n = a_op.rows();
    let mut failures = Vec::new();

    let scanned_a = scan_geometric_string(a_op, a, cfg, "A");
    let scanned_astar = scan_geometric_string(astar_op, astar, cfg, "A*");
    let mut diagonalizable_a = true;
    let mut diagonalizable_astar = true;
    let (mut d_a, mut v) = (None, Vec::new());
    let (mut d_astar, mut vstar) = (None, Vec::new());
    match scanned_a {
        Ok((d, spaces)) => {
            d_a = Some(d);
            v = spaces;
        }
        Err(f) => {
            diagonalizable_a = false;
            failures.push(f);
        }
    }
    match scanned_astar {
        Ok((d, spaces)) => {
            d_astar = Some(d);
            // theta*_i = a* q^{d-2i} descends along the scan order.
            spaces.into_iter().rev().for_each(|s| vstar.push(s));
        }
        Err(f) => {
            diagonalizable_astar = false;
            failures.push(f);
        }
    }
    if let (Some(da), Some(ds)) = (d_a, d_astar) {
        if da != ds {
            failures.push(Finding::new(
                "diameter",
                format!("A has diameter {da} but A* has diameter {ds}"),
            ));
            diagonalizable_a = false;
            diagonalizable_astar = false;
        }
    }

    let strings_ok = diagonalizable_a && diagonalizable_astar;
    let d = d_a.unwrap_or(0);

    let mut tridiagonal_astar = false;
    let mut tridiagonal_a = false;
    if strings_ok {
        tridiagonal_astar = true;
        tridiagonal_a = true;
        for i in 0..=d {
            let lo = i.saturating_sub(1);
            let hi = (i + 1).min(d);
            let target: Vec<&Subspace<T>> = v[lo..=hi].iter().collect();
            let target = subspace_sum(&target);
            let image = v[i].image_under(astar_op);
            if !target.contains(&image) {
                tridiagonal_astar = false;
                failures.push(Finding::new(
                    "tridiagonal action of A*",
                    format!("A* V_{i} is not inside V_{}+...+V_{}", lo, hi),
                ));
            }
            let target: Vec<&Subspace<T>> = vstar[lo..=hi].iter().collect();
            let target = subspace_sum(&target);
            let image = vstar[i].image_under(a_op);
            if !target.contains(&image) {
                tridiagonal_a = false;
                failures.push(Finding::new(
                    "tridiagonal action of A",
                    format!("A V*_{i} is not inside V*_{}+...+V*_{}", lo, hi),
                ));
            }
        }
    } else {
        failures.push(Finding::new(
            "tridiagonal actions",
            "not checked because an eigenvalue string failed".to_string(),
        ));
    }

    let burnside_dim = generated_algebra_dimension(a_op, astar_op);
    let irreducible = burnside_dim == n * n;
    if !irreducible {
        failures.push(Finding::new(
            "irreducibility",
            format!(
                "generated algebra dimension {burnside_dim} < {}; \
                 pair not certified absolutely irreducible",
                n * n
            ),
        ));
    }

    let shape = if strings_ok {
        let s = ShapeVector(v.iter().map(Subspace::dim).collect());
        if !s.is_symmetric_unimodal() {
            failures.push(Finding::new(
                "shape",
                format!("dimension sequence {s} is not symmetric unimodal"),
            ));
        }
        Some(s)
    } else {
        None
    };

    let all_pass = strings_ok && tridiagonal_astar && tridiagonal_a && irreducible;
    let report = PairReport {
        diagonalizable_a,
        diagonalizable_astar,
        tridiagonal_astar,
        tridiagonal_a,
        irreducible,
        burnside_dim,
        n,
        d: if strings_ok { Some(d) } else { None },
        shape,
        failures,
    };
    let pair = all_pass.then(|| TridiagonalPair {
        cfg: cfg.clone(),
        d,
        a: a.clone(),
        astar: astar.clone(),
        a_op: a_op.clone(),
        astar_op: astar_op.clone(),
        theta: (0..=d).map(|i| a.clone() * cfg.q_pow(2 * i as i64 - d as i64)).collect(),
        theta_star: (0..=d)
            .map(|i| astar.clone() * cfg.q_pow(d as i64 - 2 * i as i64))
            .collect(),
        v,
        vstar,
    });
    Ok(PairCheck { report, pair })
}

/// Orders the eigenspaces of `a_op` so that `astar_op` acts block
/// tridiagonally, given the distinct eigenvalues of `a_op`.
///
/// Builds the coupling graph with an edge (i, j) whenever the component of
/// astar_op . E_i in E_j is nonzero, and succeeds iff that graph is a path
/// (up to reversal the returned order is the unique standard one).
pub fn standard_ordering_from_spectrum<T: Field>(
    a_op: &Matrix<T>,
    astar_op: &Matrix<T>,
    spectrum: &[T],
) -> Result<Vec<(T, Subspace<T>)>, Error> {
    let n = a_op.rows();
    let mut eigs: Vec<(T, Subspace<T>)> = Vec::new();
    for theta in spectrum {
        if eigs.iter().any(|(t, _)| t == theta) {
            continue;
        }
        let e = eigenspace(a_op, theta);
        if e.is_zero() {
            return Err(Error::NotDiagonalizable(format!(
                "{theta} is not an eigenvalue"
            )));
        }
        eigs.push((theta.clone(), e));
    }
    let total: usize = eigs.iter().map(|(_, e)| e.dim()).sum();
    if total != n {
        return Err(Error::NotDiagonalizable(format!(
            "eigenspaces cover dimension {total} of {n}"
        )));
    }

    // Coupling blocks of A* in the eigenbasis of A.
    let cols: Vec<Vec<T>> = eigs.iter().flat_map(|(_, e)| e.basis_columns()).collect();
    let p = Matrix::from_cols(n, &cols);
    let m = &(&p.inverse().expect("eigenbasis is invertible") * astar_op) * &p;
    let mut offsets = vec![0usize];
    for (_, e) in &eigs {
        offsets.push(offsets.last().unwrap() + e.dim());
    }
    let k = eigs.len();
    let mut adj = vec![vec![false; k]; k];
    for (src, _) in eigs.iter().enumerate() {
        for (dst, _) in eigs.iter().enumerate() {
            if src == dst {
                continue;
            }
            let coupled = (offsets[dst]..offsets[dst + 1]).any(|r| {
                (offsets[src]..offsets[src + 1]).any(|c| !m[(r, c)].is_zero())
            });
            if coupled {
                adj[src][dst] = true;
                adj[dst][src] = true;
            }
        }
    }

    // A path has exactly k-1 edges, no vertex of degree > 2, and is connected;
    // walk it from an endpoint.
    let degree: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let edge_count: usize = degree.iter().sum::<usize>() / 2;
    if degree.iter().any(|&deg| deg > 2) || edge_count != k - 1 {
        return Err(Error::NotAPath(format!(
            "coupling graph on {k} eigenspaces has degrees {degree:?}"
        )));
    }
    let start = (0..k).find(|&i| degree[i] <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < k {
        let cur = *order.last().unwrap();
        let next = (0..k).find(|&j| adj[cur][j] && j != prev);
        match next {
            Some(j) => {
                prev = cur;
                order.push(j);
            }
            None => {
                return Err(Error::NotAPath(format!(
                    "coupling graph on {k} eigenspaces is disconnected"
                )))
            }
        }
    }
    Ok(order.into_iter().map(|i| eigs[i].clone()).collect())
}

/// [`standard_ordering_from_spectrum`] with the spectrum discovered from the
/// minimal polynomial; rational matrices only.
pub fn standard_ordering_search(
    a_op: &crate::Mat,
    astar_op: &crate::Mat,
) -> Result<Vec<(crate::Rat, Subspace<crate::Rat>)>, Error> {
    let spectrum = crate::span::rational_spectrum(a_op)?;
    standard_ordering_from_spectrum(a_op, astar_op, &spectrum)
}

/// The six decompositions together with every table check run against them.
#[derive(Clone, Debug)]
pub struct SixDecompositions<T> {
    pub decs: Vec<Decomposition<T>>,
    pub findings: Vec<Finding>,
}

impl<T> SixDecompositions<T> {
    pub fn get(&self, name: DecName) -> &Decomposition<T> {
        self.decs.iter().find(|d| d.name == name).expect("all six present")
    }

    pub fn pass(&self) -> bool {
        self.findings.is_empty()
    }
}

/// Constructs the six decompositions from eigenspace partial sums and their
/// pairwise intersections.
pub fn build_six_decompositions<T: Field>(pair: &TridiagonalPair<T>) -> Vec<Decomposition<T>> {
    let d = pair.d;
    let prefix = |spaces: &[Subspace<T>]| -> Vec<Subspace<T>> {
        let mut acc = Vec::with_capacity(d + 1);
        let mut cur = spaces[0].clone();
        acc.push(cur.clone());
        for s in &spaces[1..] {
            cur = subspace_sum(&[&cur, s]);
            acc.push(cur.clone());
        }
        acc
    };
    let prefix_v = prefix(&pair.v);
    let prefix_vs = prefix(&pair.vstar);
    let rev_v: Vec<Subspace<T>> = pair.v.iter().rev().cloned().collect();
    let rev_vs: Vec<Subspace<T>> = pair.vstar.iter().rev().cloned().collect();
    // suffix_v[i] = V_i + ... + V_d, via prefixes of the reversed list.
    let suffix_rev_v = prefix(&rev_v);
    let suffix_rev_vs = prefix(&rev_vs);
    let suffix_v = |i: usize| suffix_rev_v[d - i].clone();
    let suffix_vs = |i: usize| suffix_rev_vs[d - i].clone();

    let inter = crate::subspace::subspace_intersect;
    vec![
        Decomposition::new(DecName::ZeroD, pair.v.clone()),
        Decomposition::new(DecName::ZeroStarDStar, pair.vstar.clone()),
        Decomposition::new(
            DecName::ZeroStarD,
            (0..=d).map(|i| inter(&prefix_vs[i], &suffix_v(i))).collect(),
        ),
        Decomposition::new(
            DecName::ZeroStarZero,
            (0..=d).map(|i| inter(&prefix_vs[i], &prefix_v[d - i])).collect(),
        ),
        Decomposition::new(
            DecName::DStarZero,
            (0..=d).map(|i| inter(&suffix_vs(d - i), &prefix_v[d - i])).collect(),
        ),
        Decomposition::new(
            DecName::DStarD,
            (0..=d).map(|i| inter(&suffix_vs(d - i), &suffix_v(i))).collect(),
        ),
    ]
}

/// Expected partial sums of each decomposition, as (U_0+..+U_i, U_i+..+U_d)
/// expressed through eigenspace partial sums.
fn expected_partial_sums<T: Field>(
    pair: &TridiagonalPair<T>,
    name: DecName,
    i: usize,
) -> (Subspace<T>, Subspace<T>) {
    let d = pair.d;
    let psum = |spaces: &[Subspace<T>], lo: usize, hi: usize| {
        let refs: Vec<&Subspace<T>> = spaces[lo..=hi].iter().collect();
        subspace_sum(&refs)
    };
    match name {
        DecName::ZeroD => (psum(&pair.v, 0, i), psum(&pair.v, i, d)),
        DecName::ZeroStarDStar => (psum(&pair.vstar, 0, i), psum(&pair.vstar, i, d)),
        DecName::ZeroStarD => (psum(&pair.vstar, 0, i), psum(&pair.v, i, d)),
        DecName::ZeroStarZero => (psum(&pair.vstar, 0, i), psum(&pair.v, 0, d - i)),
        DecName::DStarZero => (psum(&pair.vstar, d - i, d), psum(&pair.v, 0, d - i)),
        DecName::DStarD => (psum(&pair.vstar, d - i, d), psum(&pair.v, i, d)),
        DecName::Weight => unreachable!("weight decompositions have no sum table"),
    }
}

/// Shift scalar and target window for the action of A and A* on the i-th
/// subspace of each decomposition: (A - shift I) U_i lies in the listed
/// indices, an empty list meaning it vanishes.
#[allow(clippy::type_complexity)]
fn a_action_row<T: Field>(
    pair: &TridiagonalPair<T>,
    name: DecName,
    i: usize,
) -> ((Option<T>, Vec<isize>), (Option<T>, Vec<isize>)) {
    let d = pair.d;
    let i_ = i as isize;
    let nbhd = vec![i_ - 1, i_, i_ + 1];
    match name {
        DecName::ZeroD => (
            (Some(pair.theta(i)), vec![]),
            (None, nbhd),
        ),
        DecName::ZeroStarDStar => (
            (None, nbhd),
            (Some(pair.theta_star(i)), vec![]),
        ),
        DecName::ZeroStarD => (
            (Some(pair.theta(i)), vec![i_ + 1]),
            (Some(pair.theta_star(i)), vec![i_ - 1]),
        ),
        DecName::ZeroStarZero => (
            (Some(pair.theta(d - i)), vec![i_ + 1]),
            (Some(pair.theta_star(i)), vec![i_ - 1]),
        ),
        DecName::DStarZero => (
            (Some(pair.theta(d - i)), vec![i_ + 1]),
            (Some(pair.theta_star(d - i)), vec![i_ - 1]),
        ),
        DecName::DStarD => (
            (Some(pair.theta(i)), vec![i_ + 1]),
            (Some(pair.theta_star(d - i)), vec![i_ - 1]),
        ),
        DecName::Weight => unreachable!(),
    }
}

/// Asserts (op - shift I) U_i is contained in the sum of the target
/// subspaces; pushes a named finding when it is not.
#[allow(clippy::too_many_arguments)]
pub(crate) fn check_inclusion<T: Field>(
    table: &str,
    op_name: &str,
    op: &Matrix<T>,
    shift: Option<&T>,
    dec: &Decomposition<T>,
    i: usize,
    targets: &[isize],
    findings: &mut Vec<Finding>,
) {
    let shifted = match shift {
        Some(c) => op.shift(c),
        None => op.clone(),
    };
    let image = dec.subspaces[i].image_under(&shifted);
    let target = dec.sum_of(targets.iter().copied());
    if !target.contains(&image) {
        findings.push(Finding::new(
            format!("{table}[{}]", dec.name),
            format!("({op_name} action) row {}, i={i}: inclusion fails", dec.name),
        ));
    }
}

/// Checks the decomposition axioms, the partial-sum table, and the action
/// table of A and A* against all six decompositions.
pub fn verify_six_decompositions<T: Field>(
    pair: &TridiagonalPair<T>,
    decs: &[Decomposition<T>],
) -> Vec<Finding> {
    let d = pair.d;
    let mut findings = Vec::new();
    for dec in decs {
        findings.extend(dec.validate());
        for i in 0..=d {
            let (lo, hi) = expected_partial_sums(pair, dec.name, i);
            if dec.sum_of(0..=i as isize) != lo {
                findings.push(Finding::new(
                    format!("partial sums[{}]", dec.name),
                    format!("U_0+...+U_{i} differs from its eigenspace expression"),
                ));
            }
            if dec.sum_of(i as isize..=d as isize) != hi {
                findings.push(Finding::new(
                    format!("partial sums[{}]", dec.name),
                    format!("U_{i}+...+U_{d} differs from its eigenspace expression"),
                ));
            }
            let ((sa, ta), (sas, tas)) = a_action_row(pair, dec.name, i);
            check_inclusion("a-action", "A", &pair.a_op, sa.as_ref(), dec, i, &ta, &mut findings);
            check_inclusion(
                "astar-action",
                "A*",
                &pair.astar_op,
                sas.as_ref(),
                dec,
                i,
                &tas,
                &mut findings,
            );
        }
    }
    findings
}

/// Builds and fully verifies the six decompositions.
pub fn six_decompositions<T: Field>(pair: &TridiagonalPair<T>) -> SixDecompositions<T> {
    let decs = build_six_decompositions(pair);
    let findings = verify_six_decompositions(pair, &decs);
    SixDecompositions { decs, findings }
}

/// The shape of the pair: subspace dimensions of the [0*D] decomposition,
/// cross-checked for agreement across all six decompositions.
pub fn shape<T: Field>(pair: &TridiagonalPair<T>) -> Result<ShapeVector, Vec<Finding>> {
    let decs = build_six_decompositions(pair);
    let reference = decs
        .iter()
        .find(|dec| dec.name == DecName::ZeroStarD)
        .expect("present")
        .dims();
    let mut findings = Vec::new();
    for dec in &decs {
        if dec.dims() != reference {
            findings.push(Finding::new(
                "shape independence",
                format!(
                    "decomposition {} has dims {:?}, expected {:?}",
                    dec.name,
                    dec.dims(),
                    reference
                ),
            ));
        }
    }
    let s = ShapeVector(reference);
    if !s.is_symmetric_unimodal() {
        findings.push(Finding::new(
            "shape",
            format!("{s} is not symmetric unimodal"),
        ));
    }
    if findings.is_empty() {
        Ok(s)
    } else {
        Err(findings)
    }
}

/// Names of the six decompositions in table order.
pub fn split_names() -> [DecName; 6] {
    SPLIT_NAMES
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{e1_ops, e1_pair};
    use crate::{mat, rat, vecr, Mat, Rat};

    #[test]
    fn e1_passes_all_axioms() {
        let (a, astar) = e1_ops();
        let cfg = FieldConfig::new(rat(2, 1)).unwrap();
        let check = verify_tridiagonal_pair(&a, &astar, &cfg, &rat(1, 1), &rat(1, 1)).unwrap();
        assert!(check.report.pass(), "failures: {:?}", check.report.failures);
        assert_eq!(check.report.d, Some(1));
        assert_eq!(check.report.shape, Some(ShapeVector(vec![1, 1])));
        assert_eq!(check.report.burnside_dim, 4);
        let pair = check.pair.unwrap();
        assert_eq!(pair.theta, vec![rat(1, 2), rat(2, 1)]);
        assert_eq!(pair.theta_star, vec![rat(2, 1), rat(1, 2)]);
    }

    #[test]
    fn identity_pair_fails_irreducibility() {
        let i = Mat::identity(2);
        let cfg = FieldConfig::new(rat(2, 1)).unwrap();
        let check = verify_tridiagonal_pair(&i, &i, &cfg, &rat(1, 1), &rat(1, 1)).unwrap();
        assert!(check.report.diagonalizable_a);
        assert!(!check.report.irreducible);
        assert_eq!(check.report.burnside_dim, 1);
        assert!(check.pair.is_none());
    }

    #[test]
    fn perturbed_entry_breaks_the_eigenvalue_string() {
        let (mut a, astar) = e1_ops();
        a[(0, 0)] = a[(0, 0)].clone() + rat(1, 1);
        let cfg = FieldConfig::new(rat(2, 1)).unwrap();
        let check = verify_tridiagonal_pair(&a, &astar, &cfg, &rat(1, 1), &rat(1, 1)).unwrap();
        assert!(!check.report.diagonalizable_a);
        assert!(check
            .report
            .failures
            .iter()
            .any(|f| f.check.contains("eigenvalue string")));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Mat::identity(2);
        let b = Mat::identity(3);
        let cfg = FieldConfig::new(rat(2, 1)).unwrap();
        assert!(verify_tridiagonal_pair(&a, &b, &cfg, &rat(1, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn d_zero_pair_is_accepted() {
        let a = Mat::from_rows(vec![vec![rat(3, 1)]]);
        let astar = Mat::from_rows(vec![vec![rat(5, 1)]]);
        let cfg = FieldConfig::new(rat(2, 1)).unwrap();
        let check =
            verify_tridiagonal_pair(&a, &astar, &cfg, &rat(3, 1), &rat(5, 1)).unwrap();
        assert!(check.report.pass());
        assert_eq!(check.report.d, Some(0));
        assert_eq!(check.report.shape, Some(ShapeVector(vec![1])));
    }

    #[test]
    fn standard_ordering_d1_accepts_both_orders() {
        let a = Mat::diagonal(&[rat(1, 2), rat(2, 1)]);
        let astar = mat(&[&[1, 2], &[3, 4]]);
        let fwd =
            standard_ordering_from_spectrum(&a, &astar, &[rat(1, 2), rat(2, 1)]).unwrap();
        let rev =
            standard_ordering_from_spectrum(&a, &astar, &[rat(2, 1), rat(1, 2)]).unwrap();
        assert_eq!(fwd.len(), 2);
        assert_eq!(rev.len(), 2);
        // Both orders satisfy the tridiagonal condition when d = 1; the
        // returned order must be one of the two.
        let vals: Vec<Rat> = fwd.iter().map(|(t, _)| t.clone()).collect();
        assert!(vals == vec![rat(1, 2), rat(2, 1)] || vals == vec![rat(2, 1), rat(1, 2)]);
    }

    #[test]
    fn standard_ordering_recovers_e1_order() {
        let (a, astar) = e1_ops();
        let order = standard_ordering_search(&a, &astar).unwrap();
        let vals: Vec<Rat> = order.iter().map(|(t, _)| t.clone()).collect();
        assert!(vals == vec![rat(1, 2), rat(2, 1)] || vals == vec![rat(2, 1), rat(1, 2)]);
        // Exhaustive oracle: check the tridiagonal condition for both
        // orderings of the eigenspaces directly.
        for perm in [[0usize, 1], [1, 0]] {
            let spaces: Vec<_> = perm
                .iter()
                .map(|&i| order[i].1.clone())
                .collect();
            for (pos, s) in spaces.iter().enumerate() {
                let image = s.image_under(&astar);
                let lo = pos.saturating_sub(1);
                let hi = (pos + 1).min(spaces.len() - 1);
                let refs: Vec<&Subspace<Rat>> = spaces[lo..=hi].iter().collect();
                assert!(subspace_sum(&refs).contains(&image));
            }
        }
    }

    #[test]
    fn triangle_coupling_is_rejected() {
        let a = Mat::diagonal(&[rat(1, 1), rat(2, 1), rat(4, 1)]);
        let astar = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let err = standard_ordering_from_spectrum(
            &a,
            &astar,
            &[rat(1, 1), rat(2, 1), rat(4, 1)],
        );
        assert!(matches!(err, Err(Error::NotAPath(_))));
    }

    #[test]
    fn disconnected_coupling_is_rejected() {
        let a = Mat::diagonal(&[rat(1, 1), rat(2, 1), rat(4, 1)]);
        // A* diagonal: no coupling at all between distinct eigenspaces.
        let astar = Mat::diagonal(&[rat(1, 1), rat(1, 1), rat(1, 1)]);
        let err = standard_ordering_from_spectrum(
            &a,
            &astar,
            &[rat(1, 1), rat(2, 1), rat(4, 1)],
        );
        assert!(matches!(err, Err(Error::NotAPath(_))));
    }

    #[test]
    fn e1_six_decompositions_match_hand_values() {
        let pair = e1_pair();
        let six = six_decompositions(&pair);
        assert!(six.pass(), "findings: {:?}", six.findings);

        let span = |vs: &[&[i64]]| {
            Subspace::from_spanning(2, &vs.iter().map(|v| vecr(v)).collect::<Vec<_>>())
        };
        // [0*D] = (span{e1}, span{e2})
        let zsd = six.get(DecName::ZeroStarD);
        assert_eq!(zsd.subspaces[0], span(&[&[1, 0]]));
        assert_eq!(zsd.subspaces[1], span(&[&[0, 1]]));
        // [0*0] = (span{e1}, span{(3,-2)})
        let zsz = six.get(DecName::ZeroStarZero);
        assert_eq!(zsz.subspaces[0], span(&[&[1, 0]]));
        assert_eq!(zsz.subspaces[1], span(&[&[3, -2]]));
        // [0D] is the eigenspace list of A in theta order, definitionally.
        let zd = six.get(DecName::ZeroD);
        assert_eq!(zd.subspaces, pair.v);
    }

    #[test]
    fn e1_shape_is_1_1() {
        let pair = e1_pair();
        assert_eq!(shape(&pair).unwrap(), ShapeVector(vec![1, 1]));
    }

    #[test]
    fn involution_swap_gives_a_verified_pair_with_same_shape() {
        let pair = e1_pair();
        // Substitution: swap A with A*, a with a*; eigenspace orders reverse
        // automatically because the scan matches strings by exponent.
        let check = verify_tridiagonal_pair(
            &pair.astar_op,
            &pair.a_op,
            &pair.cfg,
            &pair.astar,
            &pair.a,
        )
        .unwrap();
        assert!(check.report.pass());
        assert_eq!(check.report.shape, Some(ShapeVector(vec![1, 1])));
    }

    #[test]
    fn shape_vector_validation() {
        assert!(ShapeVector(vec![1, 2, 1]).is_symmetric_unimodal());
        assert!(ShapeVector(vec![1]).is_symmetric_unimodal());
        assert!(!ShapeVector(vec![1, 2]).is_symmetric_unimodal());
        assert!(!ShapeVector(vec![2, 1, 2]).is_symmetric_unimodal());
        assert!(ShapeVector(vec![1, 1, 1]).is_leonard());
        assert!(!ShapeVector(vec![1, 2, 1]).is_leonard());
    }
}

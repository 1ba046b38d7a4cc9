//! The auxiliary operators B, B*, K, K* built from split-decomposition
//! eigendata, the twelve q-commutator relations and four q-Serre relations
//! they satisfy with A and A*, their action tables on the six
//! decompositions, and the derived-pair check for (B, B*).

use crate::decomposition::{DecName, Decomposition};
use crate::error::Error;
use crate::field::{q_bracket, Field, FieldConfig};
use crate::matrix::Matrix;
use crate::pair::{check_inclusion, verify_tridiagonal_pair, PairCheck, SixDecompositions, TridiagonalPair};
use crate::report::{Finding, RelationCheck, RelationReport};

/// B, B*, K, K* with their inverse caches and the eigenvalue base scalars.
#[derive(Clone, Debug)]
pub struct OperatorQuartet<T: Field> {
    pub b_op: Matrix<T>,
    pub bstar_op: Matrix<T>,
    pub k_op: Matrix<T>,
    pub kstar_op: Matrix<T>,
    pub k_inv: Matrix<T>,
    pub kstar_inv: Matrix<T>,
    pub b: T,
    pub bstar: T,
}

/// The unique operator acting as the given scalar on each subspace of a
/// decomposition: P diag(eigenvalues with multiplicity) P^{-1} where P
/// stacks the subspace bases.
pub fn operator_from_eigendata<T: Field>(
    dec: &Decomposition<T>,
    eigenvalues: &[T],
) -> Matrix<T> {
    assert_eq!(
        eigenvalues.len(),
        dec.subspaces.len(),
        "one eigenvalue per subspace"
    );
    let n = dec.ambient_dim();
    let mut cols = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for (u, lambda) in dec.subspaces.iter().zip(eigenvalues) {
        for c in u.basis_columns() {
            cols.push(c);
            diag.push(lambda.clone());
        }
    }
    let p = Matrix::from_cols(n, &cols);
    let p_inv = p
        .inverse()
        .expect("decomposition bases stack to an invertible matrix");
    &(&p * &Matrix::diagonal(&diag)) * &p_inv
}

/// Builds B from [0*0], B* from [D*D], K from [0*D] and K* from [D*0], with
/// eigenvalue strings b q^{2i-d}, b* q^{d-2i}, q^{2i-d} and q^{2i-d}.
pub fn build_quartet<T: Field>(
    pair: &TridiagonalPair<T>,
    six: &SixDecompositions<T>,
    b: &T,
    bstar: &T,
) -> Result<OperatorQuartet<T>, Error> {
    if b.is_zero() || bstar.is_zero() {
        return Err(Error::InvalidParameter("b and b* must be nonzero".into()));
    }
    let d = pair.d as i64;
    let cfg = &pair.cfg;
    let up: Vec<T> = (0..=d).map(|i| cfg.q_pow(2 * i - d)).collect();
    let down: Vec<T> = (0..=d).map(|i| cfg.q_pow(d - 2 * i)).collect();
    let scale = |s: &T, xs: &[T]| -> Vec<T> { xs.iter().map(|x| s.clone() * x.clone()).collect() };

    let b_op = operator_from_eigendata(six.get(DecName::ZeroStarZero), &scale(b, &up));
    let bstar_op = operator_from_eigendata(six.get(DecName::DStarD), &scale(bstar, &down));
    let k_op = operator_from_eigendata(six.get(DecName::ZeroStarD), &up);
    let kstar_op = operator_from_eigendata(six.get(DecName::DStarZero), &up);
    let k_inv = operator_from_eigendata(six.get(DecName::ZeroStarD), &down);
    let kstar_inv = operator_from_eigendata(six.get(DecName::DStarZero), &down);
    Ok(OperatorQuartet {
        b_op,
        bstar_op,
        k_op,
        kstar_op,
        k_inv,
        kstar_inv,
        b: b.clone(),
        bstar: bstar.clone(),
    })
}

/// Residual of (q X Y - q^{-1} Y X) / (q - q^{-1}) = c I, cleared of the
/// denominator: q X Y - q^{-1} Y X - c (q - q^{-1}) I.
pub fn q_commutator_residual<T: Field>(
    x: &Matrix<T>,
    y: &Matrix<T>,
    rhs: &Matrix<T>,
    cfg: &FieldConfig<T>,
) -> Matrix<T> {
    let lhs = &(x * y).scale(&cfg.q_pow(1)) - &(y * x).scale(&cfg.q_pow(-1));
    &lhs - &rhs.scale(&cfg.q_minus_q_inv())
}

/// Residual of the degree-4 q-Serre expression
/// X^3 Y - [3] X^2 Y X + [3] X Y X^2 - Y X^3.
pub fn q_serre_residual<T: Field>(
    x: &Matrix<T>,
    y: &Matrix<T>,
    cfg: &FieldConfig<T>,
) -> Matrix<T> {
    let three = q_bracket(3, cfg);
    let x2 = &(x * x);
    let x3 = &(x2 * x);
    let t1 = x3 * y;
    let t2 = (&(x2 * y) * x).scale(&three);
    let t3 = (x * &(y * x2)).scale(&three);
    let t4 = y * x3;
    &(&t1 - &t2) + &(&t3 - &t4)
}

/// The twelve bilinear relations tying A, A*, B, B*, K^{-1}, K*, K*^{-1}
/// together, checked as exact-zero residuals.
pub fn check_bilinear_relations<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
) -> RelationReport<T> {
    let cfg = &pair.cfg;
    let n = pair.dim();
    let id = Matrix::<T>::identity(n);
    let c = |s: &T, t: &T| id.scale(&(s.clone() * t.clone()));
    let single = |s: &T| id.scale(s);

    let a_op = &pair.a_op;
    let as_op = &pair.astar_op;
    let (a, astar) = (&pair.a, &pair.astar);
    let (b, bstar) = (&quartet.b, &quartet.bstar);
    let checks = vec![
        // qAB - q^{-1}BA = ab(q - q^{-1})I and its three siblings
        ("eq1", q_commutator_residual(a_op, &quartet.b_op, &c(a, b), cfg)),
        ("eq2", q_commutator_residual(&quartet.b_op, as_op, &c(astar, b), cfg)),
        ("eq3", q_commutator_residual(&quartet.bstar_op, a_op, &c(a, bstar), cfg)),
        ("eq4", q_commutator_residual(as_op, &quartet.bstar_op, &c(astar, bstar), cfg)),
        // relations through K^{-1} and K
        ("keq1", q_commutator_residual(&quartet.k_inv, a_op, &single(a), cfg)),
        ("keq2", q_commutator_residual(&quartet.b_op, &quartet.k_inv, &single(b), cfg)),
        ("keq3", q_commutator_residual(&quartet.bstar_op, &quartet.k_op, &single(bstar), cfg)),
        ("keq4", q_commutator_residual(&quartet.k_op, as_op, &single(astar), cfg)),
        // relations through K* and K*^{-1}
        ("keq1d", q_commutator_residual(&quartet.kstar_inv, &quartet.b_op, &single(b), cfg)),
        ("keq2d", q_commutator_residual(as_op, &quartet.kstar_inv, &single(astar), cfg)),
        ("keq3d", q_commutator_residual(a_op, &quartet.kstar_op, &single(a), cfg)),
        ("keq4d", q_commutator_residual(&quartet.kstar_op, &quartet.bstar_op, &single(bstar), cfg)),
    ];
    RelationReport::new(
        checks
            .into_iter()
            .map(|(name, residual)| RelationCheck::from_residual(name, residual))
            .collect(),
    )
}

/// The four cubic q-Serre relations, for (A, A*) and for (B, B*).
pub fn check_q_serre<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
) -> RelationReport<T> {
    let cfg = &pair.cfg;
    let checks = vec![
        ("aserre", q_serre_residual(&pair.a_op, &pair.astar_op, cfg)),
        ("asserre", q_serre_residual(&pair.astar_op, &pair.a_op, cfg)),
        ("bserre", q_serre_residual(&quartet.b_op, &quartet.bstar_op, cfg)),
        ("bsserre", q_serre_residual(&quartet.bstar_op, &quartet.b_op, cfg)),
    ];
    RelationReport::new(
        checks
            .into_iter()
            .map(|(name, residual)| RelationCheck::from_residual(name, residual))
            .collect(),
    )
}

/// Shift/target table for the action of B and B* on each decomposition.
#[allow(clippy::type_complexity)]
fn b_action_row<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
    name: DecName,
    i: usize,
) -> ((Option<T>, Vec<isize>), (Option<T>, Vec<isize>)) {
    let cfg = &pair.cfg;
    let d = pair.d as i64;
    let i_ = i as isize;
    let up = quartet.b.clone() * cfg.q_pow(2 * i as i64 - d);
    let down = quartet.b.clone() * cfg.q_pow(d - 2 * i as i64);
    let sup = quartet.bstar.clone() * cfg.q_pow(2 * i as i64 - d);
    let sdown = quartet.bstar.clone() * cfg.q_pow(d - 2 * i as i64);
    let nbhd = vec![i_ - 1, i_, i_ + 1];
    match name {
        DecName::ZeroD => ((Some(down), vec![i_ - 1]), (Some(sdown), vec![i_ + 1])),
        DecName::ZeroStarDStar => ((Some(up), vec![i_ - 1]), (Some(sup), vec![i_ + 1])),
        DecName::ZeroStarD => ((Some(up), vec![i_ - 1]), (Some(sdown), vec![i_ + 1])),
        DecName::ZeroStarZero => ((Some(up), vec![]), (None, nbhd)),
        DecName::DStarZero => ((Some(up), vec![i_ + 1]), (Some(sdown), vec![i_ - 1])),
        DecName::DStarD => ((None, nbhd), (Some(sdown), vec![])),
        DecName::Weight => unreachable!(),
    }
}

/// Shift/target table for K and K^{-1}.
#[allow(clippy::type_complexity)]
fn k_action_row<T: Field>(
    pair: &TridiagonalPair<T>,
    name: DecName,
    i: usize,
) -> ((Option<T>, Vec<isize>), (Option<T>, Vec<isize>)) {
    let cfg = &pair.cfg;
    let d = pair.d as i64;
    let di = pair.d as isize;
    let i_ = i as isize;
    let up = cfg.q_pow(2 * i as i64 - d);
    let down = cfg.q_pow(d - 2 * i as i64);
    let prefix = |hi: isize| (0..=hi).collect::<Vec<isize>>();
    let suffix = |lo: isize| (lo..=di).collect::<Vec<isize>>();
    match name {
        DecName::ZeroD => ((Some(up), suffix(i_ + 1)), (Some(down), vec![i_ + 1])),
        DecName::ZeroStarDStar => ((Some(up), vec![i_ - 1]), (Some(down), prefix(i_ - 1))),
        DecName::ZeroStarD => ((Some(up), vec![]), (Some(down), vec![])),
        DecName::ZeroStarZero => ((Some(up), prefix(i_ - 1)), (Some(down), vec![i_ - 1])),
        DecName::DStarZero => ((None, prefix(i_ + 1)), (None, suffix(i_ - 1))),
        DecName::DStarD => ((Some(up), vec![i_ + 1]), (Some(down), suffix(i_ + 1))),
        DecName::Weight => unreachable!(),
    }
}

/// Shift/target table for K* and K*^{-1}.
#[allow(clippy::type_complexity)]
fn kstar_action_row<T: Field>(
    pair: &TridiagonalPair<T>,
    name: DecName,
    i: usize,
) -> ((Option<T>, Vec<isize>), (Option<T>, Vec<isize>)) {
    let cfg = &pair.cfg;
    let d = pair.d as i64;
    let di = pair.d as isize;
    let i_ = i as isize;
    let up = cfg.q_pow(2 * i as i64 - d);
    let down = cfg.q_pow(d - 2 * i as i64);
    let prefix = |hi: isize| (0..=hi).collect::<Vec<isize>>();
    let suffix = |lo: isize| (lo..=di).collect::<Vec<isize>>();
    match name {
        DecName::ZeroD => ((Some(down), vec![i_ - 1]), (Some(up), prefix(i_ - 1))),
        DecName::ZeroStarDStar => ((Some(down), suffix(i_ + 1)), (Some(up), vec![i_ + 1])),
        DecName::ZeroStarD => ((None, suffix(i_ - 1)), (None, prefix(i_ + 1))),
        DecName::ZeroStarZero => ((Some(up), suffix(i_ + 1)), (Some(down), vec![i_ + 1])),
        DecName::DStarZero => ((Some(up), vec![]), (Some(down), vec![])),
        DecName::DStarD => ((Some(up), vec![i_ - 1]), (Some(down), prefix(i_ - 1))),
        DecName::Weight => unreachable!(),
    }
}

/// Verifies the action tables of B, B*, K, K^{-1}, K*, K*^{-1} on all six
/// decompositions as exact subspace inclusions.
pub fn check_bbkk_action_tables<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
    six: &SixDecompositions<T>,
) -> Vec<Finding> {
    let mut findings = Vec::new();
    for dec in &six.decs {
        for i in 0..=pair.d {
            let ((sb, tb), (sbs, tbs)) = b_action_row(pair, quartet, dec.name, i);
            check_inclusion("b-action", "B", &quartet.b_op, sb.as_ref(), dec, i, &tb, &mut findings);
            check_inclusion(
                "bstar-action",
                "B*",
                &quartet.bstar_op,
                sbs.as_ref(),
                dec,
                i,
                &tbs,
                &mut findings,
            );
            let ((sk, tk), (ski, tki)) = k_action_row(pair, dec.name, i);
            check_inclusion("k-action", "K", &quartet.k_op, sk.as_ref(), dec, i, &tk, &mut findings);
            check_inclusion(
                "kinv-action",
                "K^{-1}",
                &quartet.k_inv,
                ski.as_ref(),
                dec,
                i,
                &tki,
                &mut findings,
            );
            let ((sks, tks), (sksi, tksi)) = kstar_action_row(pair, dec.name, i);
            check_inclusion(
                "kstar-action",
                "K*",
                &quartet.kstar_op,
                sks.as_ref(),
                dec,
                i,
                &tks,
                &mut findings,
            );
            check_inclusion(
                "kstarinv-action",
                "K*^{-1}",
                &quartet.kstar_inv,
                sksi.as_ref(),
                dec,
                i,
                &tksi,
                &mut findings,
            );
        }
    }
    // K and K* must be invertible with the cached inverses.
    let id = Matrix::<T>::identity(pair.dim());
    if (&quartet.k_op * &quartet.k_inv) != id {
        findings.push(Finding::new("k-invertible", "K K^{-1} != I"));
    }
    if (&quartet.kstar_op * &quartet.kstar_inv) != id {
        findings.push(Finding::new("kstar-invertible", "K* K*^{-1} != I"));
    }
    findings
}

/// Runs the full pair verification on (B, B*) with parameters (b, b*); a
/// passing result must reproduce the shape of the input pair.
pub fn verify_derived_pair<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
) -> Result<PairCheck<T>, Error> {
    verify_tridiagonal_pair(
        &quartet.b_op,
        &quartet.bstar_op,
        &pair.cfg,
        &quartet.b,
        &quartet.bstar,
    )
}

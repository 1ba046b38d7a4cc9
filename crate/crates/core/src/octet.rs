//! The two presentations of the quantum affine sl2 action carried by a
//! verified pair: assembly of the alternate-generator octet from (A, A*, B,
//! B*, K, K*), translation to and from Chevalley generators, the defining
//! relation checkers for both presentations, the weight space decomposition
//! with its type, and the uniqueness smoke test.

use crate::decomposition::{DecName, Decomposition};
use crate::error::Error;
use crate::field::{Field, FieldConfig};
use crate::matrix::Matrix;
use crate::pair::{check_inclusion, SixDecompositions, TridiagonalPair};
use crate::quartet::{operator_from_eigendata, q_serre_residual, OperatorQuartet};
use crate::report::{Finding, RelationCheck, RelationReport};
use crate::span::min_poly;
use crate::subspace::eigenspace;

/// Which of the two module structures to assemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Minus,
    Plus,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Minus => write!(f, "minus"),
            Variant::Plus => write!(f, "plus"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "minus" => Ok(Variant::Minus),
            "plus" => Ok(Variant::Plus),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant {other:?}, expected minus or plus"
            ))),
        }
    }
}

/// The eight alternate generators y_i^±, k_i^{±1} as matrices.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(bound(
    serialize = "Matrix<T>: serde::Serialize",
    deserialize = "Matrix<T>: serde::Deserialize<'de>"
))]
pub struct AlternateOctet<T> {
    pub y0p: Matrix<T>,
    pub y1p: Matrix<T>,
    pub y0m: Matrix<T>,
    pub y1m: Matrix<T>,
    pub k0: Matrix<T>,
    pub k1: Matrix<T>,
    pub k0inv: Matrix<T>,
    pub k1inv: Matrix<T>,
}

/// The eight Chevalley generators e_i^±, K_i^{±1} as matrices.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(bound(
    serialize = "Matrix<T>: serde::Serialize",
    deserialize = "Matrix<T>: serde::Deserialize<'de>"
))]
pub struct ChevalleyOctet<T> {
    pub e0p: Matrix<T>,
    pub e1p: Matrix<T>,
    pub e0m: Matrix<T>,
    pub e1m: Matrix<T>,
    #[serde(rename = "K0")]
    pub k0: Matrix<T>,
    #[serde(rename = "K1")]
    pub k1: Matrix<T>,
    #[serde(rename = "K0inv")]
    pub k0inv: Matrix<T>,
    #[serde(rename = "K1inv")]
    pub k1inv: Matrix<T>,
}

impl<T: Field> AlternateOctet<T> {
    pub fn dim(&self) -> usize {
        self.k0.rows()
    }

    pub fn generators(&self) -> [(&'static str, &Matrix<T>); 8] {
        [
            ("y0p", &self.y0p),
            ("y1p", &self.y1p),
            ("y0m", &self.y0m),
            ("y1m", &self.y1m),
            ("k0", &self.k0),
            ("k1", &self.k1),
            ("k0inv", &self.k0inv),
            ("k1inv", &self.k1inv),
        ]
    }
}

impl<T: Field> ChevalleyOctet<T> {
    pub fn dim(&self) -> usize {
        self.k0.rows()
    }
}

/// Scales the pair and quartet operators into the generator octet of the
/// requested module structure.
///
/// Minus: (y0+, y1+, y0-, y1-, k0, k1) act as
///        (b*^{-1}B*, b^{-1}B, a*^{-1}A*, a^{-1}A, K, K^{-1});
/// plus:  (a^{-1}A, a*^{-1}A*, b*^{-1}B*, b^{-1}B, K*, K*^{-1}).
pub fn assemble_module_structure<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
    variant: Variant,
) -> AlternateOctet<T> {
    let inv = |s: &T| T::one() / s.clone();
    let a_scaled = pair.a_op.scale(&inv(&pair.a));
    let astar_scaled = pair.astar_op.scale(&inv(&pair.astar));
    let b_scaled = quartet.b_op.scale(&inv(&quartet.b));
    let bstar_scaled = quartet.bstar_op.scale(&inv(&quartet.bstar));
    match variant {
        Variant::Minus => AlternateOctet {
            y0p: bstar_scaled,
            y1p: b_scaled,
            y0m: astar_scaled,
            y1m: a_scaled,
            k0: quartet.k_op.clone(),
            k1: quartet.k_inv.clone(),
            k0inv: quartet.k_inv.clone(),
            k1inv: quartet.k_op.clone(),
        },
        Variant::Plus => AlternateOctet {
            y0p: a_scaled,
            y1p: astar_scaled,
            y0m: bstar_scaled,
            y1m: b_scaled,
            k0: quartet.kstar_op.clone(),
            k1: quartet.kstar_inv.clone(),
            k0inv: quartet.kstar_inv.clone(),
            k1inv: quartet.kstar_op.clone(),
        },
    }
}

/// Checks every defining relation of the alternate presentation on concrete
/// matrices, each as an exact-zero residual.
pub fn check_alternate_relations<T: Field>(
    oct: &AlternateOctet<T>,
    cfg: &FieldConfig<T>,
) -> RelationReport<T> {
    let n = oct.dim();
    let id = Matrix::<T>::identity(n);
    let qp = cfg.q_pow(1);
    let qm = cfg.q_pow(-1);
    let denom = cfg.q_minus_q_inv();
    let mut checks = Vec::new();

    // k_i k_i^{-1} = 1
    for (i, (k, kinv)) in [(&oct.k0, &oct.k0inv), (&oct.k1, &oct.k1inv)]
        .into_iter()
        .enumerate()
    {
        checks.push(RelationCheck::from_residual(
            format!("2buq1[i={i}]"),
            &(k * kinv) - &id,
        ));
    }
    // k0 k1 central: commutes with every generator on the module
    let central = &oct.k0 * &oct.k1;
    for (name, g) in oct.generators() {
        checks.push(RelationCheck::from_residual(
            format!("2buq2[{name}]"),
            &(&central * g) - &(g * &central),
        ));
    }
    // (q y_i^+ k_i - q^{-1} k_i y_i^+) / (q - q^{-1}) = 1
    for (i, (yp, k)) in [(&oct.y0p, &oct.k0), (&oct.y1p, &oct.k1)].into_iter().enumerate() {
        let lhs = &(yp * k).scale(&qp) - &(k * yp).scale(&qm);
        checks.push(RelationCheck::from_residual(
            format!("2buq3[i={i}]"),
            &lhs - &id.scale(&denom),
        ));
    }
    // (q k_i y_i^- - q^{-1} y_i^- k_i) / (q - q^{-1}) = 1
    for (i, (ym, k)) in [(&oct.y0m, &oct.k0), (&oct.y1m, &oct.k1)].into_iter().enumerate() {
        let lhs = &(k * ym).scale(&qp) - &(ym * k).scale(&qm);
        checks.push(RelationCheck::from_residual(
            format!("2buq4[i={i}]"),
            &lhs - &id.scale(&denom),
        ));
    }
    // (q y_i^- y_i^+ - q^{-1} y_i^+ y_i^-) / (q - q^{-1}) = 1
    for (i, (ym, yp)) in [(&oct.y0m, &oct.y0p), (&oct.y1m, &oct.y1p)].into_iter().enumerate() {
        let lhs = &(ym * yp).scale(&qp) - &(yp * ym).scale(&qm);
        checks.push(RelationCheck::from_residual(
            format!("2buq5[i={i}]"),
            &lhs - &id.scale(&denom),
        ));
    }
    // (q y_i^+ y_j^- - q^{-1} y_j^- y_i^+) / (q - q^{-1}) = k0^{-1} k1^{-1}
    let kk = &oct.k0inv * &oct.k1inv;
    for (i, j, yp, ym) in [(0, 1, &oct.y0p, &oct.y1m), (1, 0, &oct.y1p, &oct.y0m)] {
        let lhs = &(yp * ym).scale(&qp) - &(ym * yp).scale(&qm);
        checks.push(RelationCheck::from_residual(
            format!("2buq6[i={i},j={j}]"),
            &lhs - &kk.scale(&denom),
        ));
    }
    // the alternate q-Serre cubics
    for (sign, i, j, x, y) in [
        ("+", 0, 1, &oct.y0p, &oct.y1p),
        ("+", 1, 0, &oct.y1p, &oct.y0p),
        ("-", 0, 1, &oct.y0m, &oct.y1m),
        ("-", 1, 0, &oct.y1m, &oct.y0m),
    ] {
        checks.push(RelationCheck::from_residual(
            format!("2buq7[{sign},i={i},j={j}]"),
            q_serre_residual(x, y, cfg),
        ));
    }
    RelationReport::new(checks)
}

/// Checks every defining relation of the Chevalley presentation.
pub fn check_chevalley_relations<T: Field>(
    oct: &ChevalleyOctet<T>,
    cfg: &FieldConfig<T>,
) -> RelationReport<T> {
    let n = oct.dim();
    let id = Matrix::<T>::identity(n);
    let denom = cfg.q_minus_q_inv();
    let mut checks = Vec::new();

    for (i, (k, kinv)) in [(&oct.k0, &oct.k0inv), (&oct.k1, &oct.k1inv)]
        .into_iter()
        .enumerate()
    {
        checks.push(RelationCheck::from_residual(
            format!("buq1[i={i}]"),
            &(k * kinv) - &id,
        ));
    }
    checks.push(RelationCheck::from_residual(
        "buq2",
        &(&oct.k0 * &oct.k1) - &(&oct.k1 * &oct.k0),
    ));
    // K_i e_i^± K_i^{-1} = q^{±2} e_i^±
    let ks = [(&oct.k0, &oct.k0inv), (&oct.k1, &oct.k1inv)];
    let es = [(&oct.e0p, &oct.e0m), (&oct.e1p, &oct.e1m)];
    for (i, ((k, kinv), (ep, em))) in ks.into_iter().zip(es).enumerate() {
        let conj_p = &(k * ep) * kinv;
        checks.push(RelationCheck::from_residual(
            format!("buq3[+,i={i}]"),
            &conj_p - &ep.scale(&cfg.q_pow(2)),
        ));
        let conj_m = &(k * em) * kinv;
        checks.push(RelationCheck::from_residual(
            format!("buq3[-,i={i}]"),
            &conj_m - &em.scale(&cfg.q_pow(-2)),
        ));
    }
    // K_i e_j^± K_i^{-1} = q^{∓2} e_j^±, i != j
    for (i, j) in [(0usize, 1usize), (1, 0)] {
        let (k, kinv) = ks[i];
        let (ep, em) = es[j];
        let conj_p = &(k * ep) * kinv;
        checks.push(RelationCheck::from_residual(
            format!("buq4[+,i={i},j={j}]"),
            &conj_p - &ep.scale(&cfg.q_pow(-2)),
        ));
        let conj_m = &(k * em) * kinv;
        checks.push(RelationCheck::from_residual(
            format!("buq4[-,i={i},j={j}]"),
            &conj_m - &em.scale(&cfg.q_pow(2)),
        ));
    }
    // [e_i^+, e_i^-] = (K_i - K_i^{-1}) / (q - q^{-1}), cleared
    for (i, ((k, kinv), (ep, em))) in ks.into_iter().zip(es).enumerate() {
        let comm = &(ep * em) - &(em * ep);
        checks.push(RelationCheck::from_residual(
            format!("buq5[i={i}]"),
            &comm.scale(&denom) - &(k - kinv),
        ));
    }
    // [e_0^±, e_1^∓] = 0
    checks.push(RelationCheck::from_residual(
        "buq6[e0p,e1m]",
        &(&oct.e0p * &oct.e1m) - &(&oct.e1m * &oct.e0p),
    ));
    checks.push(RelationCheck::from_residual(
        "buq6[e0m,e1p]",
        &(&oct.e0m * &oct.e1p) - &(&oct.e1p * &oct.e0m),
    ));
    // q-Serre
    for (sign, i, j, x, y) in [
        ("+", 0usize, 1usize, &oct.e0p, &oct.e1p),
        ("+", 1, 0, &oct.e1p, &oct.e0p),
        ("-", 0, 1, &oct.e0m, &oct.e1m),
        ("-", 1, 0, &oct.e1m, &oct.e0m),
    ] {
        checks.push(RelationCheck::from_residual(
            format!("buq7[{sign},i={i},j={j}]"),
            q_serre_residual(x, y, cfg),
        ));
    }
    RelationReport::new(checks)
}

/// Translates alternate generators to Chevalley generators:
/// K_i = k_i, e_i^- = y_i^- - k_i^{-1}, e_i^+ = (1 - k_i y_i^+) / (q (q - q^{-1})^2).
pub fn chevalley_from_alternate<T: Field>(
    oct: &AlternateOctet<T>,
    cfg: &FieldConfig<T>,
) -> ChevalleyOctet<T> {
    let n = oct.dim();
    let id = Matrix::<T>::identity(n);
    let dq = cfg.q_minus_q_inv();
    let denom = cfg.q_pow(1) * dq.clone() * dq;
    let inv_denom = T::one() / denom;
    let ep = |k: &Matrix<T>, yp: &Matrix<T>| (&id - &(k * yp)).scale(&inv_denom);
    ChevalleyOctet {
        e0p: ep(&oct.k0, &oct.y0p),
        e1p: ep(&oct.k1, &oct.y1p),
        e0m: &oct.y0m - &oct.k0inv,
        e1m: &oct.y1m - &oct.k1inv,
        k0: oct.k0.clone(),
        k1: oct.k1.clone(),
        k0inv: oct.k0inv.clone(),
        k1inv: oct.k1inv.clone(),
    }
}

/// The forward direction of the presentation isomorphism:
/// k_i = K_i, y_i^- = K_i^{-1} + e_i^-, y_i^+ = K_i^{-1} - q (q - q^{-1})^2 K_i^{-1} e_i^+.
pub fn alternate_from_chevalley<T: Field>(
    oct: &ChevalleyOctet<T>,
    cfg: &FieldConfig<T>,
) -> AlternateOctet<T> {
    let dq = cfg.q_minus_q_inv();
    let factor = cfg.q_pow(1) * dq.clone() * dq;
    let yp = |kinv: &Matrix<T>, ep: &Matrix<T>| kinv - &(kinv * ep).scale(&factor);
    AlternateOctet {
        y0p: yp(&oct.k0inv, &oct.e0p),
        y1p: yp(&oct.k1inv, &oct.e1p),
        y0m: &oct.k0inv + &oct.e0m,
        y1m: &oct.k1inv + &oct.e1m,
        k0: oct.k0.clone(),
        k1: oct.k1.clone(),
        k0inv: oct.k0inv.clone(),
        k1inv: oct.k1inv.clone(),
    }
}

/// The weight space decomposition of an alternate octet and the type scalars.
#[derive(Clone, Debug)]
pub struct WeightData<T: Field> {
    pub eps0: T,
    pub eps1: T,
    pub weights: Decomposition<T>,
}

/// Weight data plus any ladder or eigenvalue-pattern violations found.
#[derive(Clone, Debug)]
pub struct WeightOutcome<T: Field> {
    pub data: WeightData<T>,
    pub findings: Vec<Finding>,
}

impl<T: Field> WeightOutcome<T> {
    pub fn pass(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn has_type_one_one(&self) -> bool {
        self.data.eps0.is_one() && self.data.eps1.is_one()
    }
}

/// Computes the k0 eigenspace decomposition of the module.
///
/// The eigenvalues of k0 must form a single q^2-geometric string
/// eps0 q^{2i-d}. The string base is recovered algebraically: the minimal
/// polynomial of k0 gives the number of distinct eigenvalues d+1 and their
/// sum e1, and on a string the base is e1 / (1 + q^2 + ... + q^{2d}); the
/// candidate string is then confirmed eigenspace by eigenspace, which keeps
/// the ordering exact (consecutive ratios q^2) without any numeric sorting.
/// k0 k1 must act as a scalar, which fixes eps1 = (scalar) / eps0.
pub fn weight_decomposition<T: Field>(
    oct: &AlternateOctet<T>,
    cfg: &FieldConfig<T>,
) -> Result<WeightOutcome<T>, Error> {
    let n = oct.dim();
    let central = &oct.k0 * &oct.k1;
    let alpha = central.as_scalar().ok_or_else(|| {
        Error::NotScalar("k0 k1 does not act as a scalar on the module".into())
    })?;
    if alpha.is_zero() {
        return Err(Error::NotScalar("k0 k1 acts as zero".into()));
    }

    let p = min_poly(&oct.k0);
    let deg = p.len() - 1;
    let d = deg - 1; // candidate string length
    let e1 = -p[deg - 1].clone(); // sum of the roots of the monic min poly
    let mut s = T::zero();
    for i in 0..=d {
        s = s + cfg.q_pow(2 * i as i64);
    }
    let eta = e1 / s;
    if eta.is_zero() {
        return Err(Error::NotGeometricString(
            "string base computes to zero; k0 cannot be invertible".into(),
        ));
    }
    let mut spaces = Vec::with_capacity(d + 1);
    let mut total = 0;
    for i in 0..=d {
        let lambda = eta.clone() * cfg.q_pow(2 * i as i64);
        let u = eigenspace(&oct.k0, &lambda);
        if u.is_zero() {
            return Err(Error::NotGeometricString(format!(
                "candidate eigenvalue {lambda} at position {i} has no eigenvector"
            )));
        }
        total += u.dim();
        spaces.push(u);
    }
    if total != n {
        return Err(Error::NotGeometricString(format!(
            "string eigenspaces cover dimension {total} of {n}"
        )));
    }

    let eps0 = eta * cfg.q_pow(d as i64);
    let eps1 = alpha / eps0.clone();
    let weights = Decomposition::new(DecName::Weight, spaces);

    let mut findings = Vec::new();
    // k1 must act as eps1 q^{d-2i} on U_i.
    for i in 0..=d {
        let expect = eps1.clone() * cfg.q_pow(d as i64 - 2 * i as i64);
        let image = weights.subspaces[i].image_under(&oct.k1.shift(&expect));
        if !image.is_zero() {
            findings.push(Finding::new(
                "weight k1 pattern",
                format!("(k1 - eps1 q^{{d-2i}} I) U_{i} != 0"),
            ));
        }
    }
    // Ladder inclusions: raising by y0+ and y1-, lowering by y0- and y1+.
    for i in 0..=d {
        let i_ = i as isize;
        let raise_shift = cfg.q_pow(d as i64 - 2 * i as i64);
        let lower_shift = cfg.q_pow(2 * i as i64 - d as i64);
        check_inclusion(
            "weight ladder",
            "eps0 y0+",
            &oct.y0p.scale(&eps0),
            Some(&raise_shift),
            &weights,
            i,
            &[i_ + 1],
            &mut findings,
        );
        check_inclusion(
            "weight ladder",
            "eps1 y1-",
            &oct.y1m.scale(&eps1),
            Some(&lower_shift),
            &weights,
            i,
            &[i_ + 1],
            &mut findings,
        );
        check_inclusion(
            "weight ladder",
            "eps0 y0-",
            &oct.y0m.scale(&eps0),
            Some(&raise_shift),
            &weights,
            i,
            &[i_ - 1],
            &mut findings,
        );
        check_inclusion(
            "weight ladder",
            "eps1 y1+",
            &oct.y1p.scale(&eps1),
            Some(&lower_shift),
            &weights,
            i,
            &[i_ - 1],
            &mut findings,
        );
    }
    Ok(WeightOutcome {
        data: WeightData { eps0, eps1, weights },
        findings,
    })
}

/// Re-derives k0 and the B-side generators from the weight decomposition and
/// checks they agree with the assembled module structure, mirroring the
/// uniqueness argument: the weight spaces must coincide with [0*D] (minus)
/// or [D*0] (plus), the operator acting as q^{2i-d} on them must equal k0,
/// and b y1+ / b* y0+ must reproduce B / B* in the minus structure.
pub fn uniqueness_smoke_test<T: Field>(
    pair: &TridiagonalPair<T>,
    quartet: &OperatorQuartet<T>,
    six: &SixDecompositions<T>,
    variant: Variant,
) -> Vec<Finding> {
    let cfg = &pair.cfg;
    let oct = assemble_module_structure(pair, quartet, variant);
    let mut findings = Vec::new();
    let outcome = match weight_decomposition(&oct, cfg) {
        Ok(o) => o,
        Err(e) => {
            findings.push(Finding::new("uniqueness", format!("weight data: {e}")));
            return findings;
        }
    };
    findings.extend(outcome.findings.clone());
    if !outcome.has_type_one_one() {
        findings.push(Finding::new(
            "uniqueness type",
            format!(
                "module type is ({}, {}), expected (1, 1)",
                outcome.data.eps0, outcome.data.eps1
            ),
        ));
    }
    let d = pair.d;
    if outcome.data.weights.top() != d {
        findings.push(Finding::new(
            "uniqueness weights",
            format!(
                "weight string has length {}, expected {}",
                outcome.data.weights.top(),
                d
            ),
        ));
        return findings;
    }
    let expected_dec = match variant {
        Variant::Minus => six.get(DecName::ZeroStarD),
        Variant::Plus => six.get(DecName::DStarZero),
    };
    if outcome.data.weights.subspaces != expected_dec.subspaces {
        findings.push(Finding::new(
            "uniqueness weights",
            format!(
                "weight decomposition differs from {} for the {} structure",
                expected_dec.name, variant
            ),
        ));
    }
    // Rebuild the operator with eigenvalue q^{2i-d} on the i-th weight space.
    let string: Vec<T> = (0..=d).map(|i| cfg.q_pow(2 * i as i64 - d as i64)).collect();
    let rebuilt = operator_from_eigendata(&outcome.data.weights, &string);
    if rebuilt != oct.k0 {
        findings.push(Finding::new(
            "uniqueness k0",
            "k0 rebuilt from the weight decomposition differs from the assembled k0",
        ));
    }
    // The B-side actions are pinned by the uniqueness argument.
    let (y_for_b, y_for_bstar) = match variant {
        Variant::Minus => (&oct.y1p, &oct.y0p),
        Variant::Plus => (&oct.y1m, &oct.y0m),
    };
    if y_for_b.scale(&quartet.b) != quartet.b_op {
        findings.push(Finding::new("uniqueness B", "b y1 does not reproduce B"));
    }
    if y_for_bstar.scale(&quartet.bstar) != quartet.bstar_op {
        findings.push(Finding::new(
            "uniqueness B*",
            "b* y0 does not reproduce B*",
        ));
    }
    findings
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::six_decompositions;
    use crate::quartet::build_quartet;
    use crate::testutil::{d0_pair, e1_pair, q2};
    use crate::{rat, Mat, Rat};

    fn e1_setup() -> (
        TridiagonalPair<Rat>,
        SixDecompositions<Rat>,
        OperatorQuartet<Rat>,
    ) {
        let pair = e1_pair();
        let six = six_decompositions(&pair);
        let quartet = build_quartet(&pair, &six, &rat(1, 1), &rat(1, 1)).unwrap();
        (pair, six, quartet)
    }

    #[test]
    fn minus_octet_matches_table() {
        let (pair, _, quartet) = e1_setup();
        let oct = assemble_module_structure(&pair, &quartet, Variant::Minus);
        assert_eq!(oct.k0, Mat::diagonal(&[rat(1, 2), rat(2, 1)]));
        assert_eq!(oct.y1m, pair.a_op); // a = 1
        assert_eq!(oct.y0m, pair.astar_op);
        assert_eq!(oct.y1p, quartet.b_op); // b = 1
        assert_eq!(oct.k1, quartet.k_inv);
        assert_eq!(oct.k1inv, quartet.k_op);
    }

    #[test]
    fn plus_octet_matches_table() {
        let (pair, _, quartet) = e1_setup();
        let oct = assemble_module_structure(&pair, &quartet, Variant::Plus);
        assert_eq!(oct.k0, quartet.kstar_op);
        assert_eq!(
            oct.k0,
            Mat::from_rows(vec![
                vec![rat(16, 5), rat(9, 5)],
                vec![rat(-9, 5), rat(-7, 10)],
            ])
        );
        assert_eq!(oct.y0p, pair.a_op);
        assert_eq!(oct.y1p, pair.astar_op);
    }

    #[test]
    fn both_octets_pass_all_alternate_relations() {
        let (pair, _, quartet) = e1_setup();
        for variant in [Variant::Minus, Variant::Plus] {
            let oct = assemble_module_structure(&pair, &quartet, variant);
            let report = check_alternate_relations(&oct, &pair.cfg);
            assert!(report.pass(), "{variant}: {:?}", report.failed_names());
            assert_eq!(report.checks.len(), 22);
        }
    }

    #[test]
    fn d0_octet_is_all_identity() {
        let pair = d0_pair();
        let six = six_decompositions(&pair);
        let quartet = build_quartet(&pair, &six, &rat(1, 1), &rat(1, 1)).unwrap();
        let oct = assemble_module_structure(&pair, &quartet, Variant::Minus);
        for (_, g) in oct.generators() {
            assert_eq!(*g, Mat::identity(1));
        }
        assert!(check_alternate_relations(&oct, &pair.cfg).pass());
    }

    #[test]
    fn scaling_k1_flips_exactly_the_documented_relations() {
        let (pair, _, quartet) = e1_setup();
        let mut oct = assemble_module_structure(&pair, &quartet, Variant::Minus);
        oct.k1 = oct.k1.scale(&rat(2, 1));
        let report = check_alternate_relations(&oct, &pair.cfg);
        let failed = report.failed_names();
        assert_eq!(
            failed,
            vec!["2buq1[i=1]", "2buq3[i=1]", "2buq4[i=1]"],
            "unexpected flip set"
        );
        // centrality still passes: k0 (2 k1) is still central
        assert!(report.get("2buq2[y0p]").unwrap().pass);
        assert!(report.get("2buq4[i=1]").map(|c| !c.pass).unwrap());
    }

    #[test]
    fn chevalley_translation_kernel_cases() {
        // y_i^- = k_i^{-1} forces e_i^- = 0; y_i^+ = k_i^{-1} forces e_i^+ = 0.
        let k = Mat::diagonal(&[rat(2, 1), rat(1, 2)]);
        let kinv = Mat::diagonal(&[rat(1, 2), rat(2, 1)]);
        let oct = AlternateOctet {
            y0p: kinv.clone(),
            y1p: kinv.clone(),
            y0m: kinv.clone(),
            y1m: kinv.clone(),
            k0: k.clone(),
            k1: k.clone(),
            k0inv: kinv.clone(),
            k1inv: kinv.clone(),
        };
        let chev = chevalley_from_alternate(&oct, &q2());
        assert!(chev.e0m.is_zero());
        assert!(chev.e1m.is_zero());
        assert!(chev.e0p.is_zero());
        assert!(chev.e1p.is_zero());
    }

    #[test]
    fn e1_chevalley_translate_passes_relations() {
        let (pair, _, quartet) = e1_setup();
        for variant in [Variant::Minus, Variant::Plus] {
            let oct = assemble_module_structure(&pair, &quartet, variant);
            let chev = chevalley_from_alternate(&oct, &pair.cfg);
            let report = check_chevalley_relations(&chev, &pair.cfg);
            assert!(report.pass(), "{variant}: {:?}", report.failed_names());
            assert_eq!(report.checks.len(), 19);
        }
    }

    #[test]
    fn trivial_chevalley_module_passes() {
        let id = Mat::identity(2);
        let zero = Mat::zero(2, 2);
        let oct = ChevalleyOctet {
            e0p: zero.clone(),
            e1p: zero.clone(),
            e0m: zero.clone(),
            e1m: zero,
            k0: id.clone(),
            k1: id.clone(),
            k0inv: id.clone(),
            k1inv: id,
        };
        assert!(check_chevalley_relations(&oct, &q2()).pass());
    }

    #[test]
    fn scaling_e1p_flips_exactly_buq5() {
        let (pair, _, quartet) = e1_setup();
        let oct = assemble_module_structure(&pair, &quartet, Variant::Minus);
        let mut chev = chevalley_from_alternate(&oct, &pair.cfg);
        chev.e1p = chev.e1p.scale(&rat(2, 1));
        let report = check_chevalley_relations(&chev, &pair.cfg);
        assert_eq!(report.failed_names(), vec!["buq5[i=1]"]);
    }

    #[test]
    fn round_trip_is_identity_both_ways() {
        let (pair, _, quartet) = e1_setup();
        for variant in [Variant::Minus, Variant::Plus] {
            let oct = assemble_module_structure(&pair, &quartet, variant);
            let chev = chevalley_from_alternate(&oct, &pair.cfg);
            let back = alternate_from_chevalley(&chev, &pair.cfg);
            assert_eq!(back, oct);
            let chev2 = chevalley_from_alternate(&back, &pair.cfg);
            assert_eq!(chev2, chev);
        }
    }

    #[test]
    fn weight_decomposition_of_both_structures() {
        let (pair, six, quartet) = e1_setup();
        let minus = assemble_module_structure(&pair, &quartet, Variant::Minus);
        let w = weight_decomposition(&minus, &pair.cfg).unwrap();
        assert!(w.pass(), "{:?}", w.findings);
        assert_eq!(w.data.eps0, rat(1, 1));
        assert_eq!(w.data.eps1, rat(1, 1));
        assert_eq!(
            w.data.weights.subspaces,
            six.get(DecName::ZeroStarD).subspaces
        );

        let plus = assemble_module_structure(&pair, &quartet, Variant::Plus);
        let w = weight_decomposition(&plus, &pair.cfg).unwrap();
        assert!(w.pass());
        assert!(w.has_type_one_one());
        assert_eq!(
            w.data.weights.subspaces,
            six.get(DecName::DStarZero).subspaces
        );
    }

    #[test]
    fn constant_k0_gives_a_single_weight_space() {
        // A hand-built octet with k0 = 2I: one weight space, a length-0
        // string, and type (2, 1/2); the ladders hold with these scalars.
        let two = Mat::identity(2).scale(&rat(2, 1));
        let half = Mat::identity(2).scale(&rat(1, 2));
        let oct = AlternateOctet {
            y0p: half.clone(),
            y1p: two.clone(),
            y0m: half.clone(),
            y1m: two.clone(),
            k0: two.clone(),
            k1: half.clone(),
            k0inv: half.clone(),
            k1inv: two.clone(),
        };
        let w = weight_decomposition(&oct, &q2()).unwrap();
        assert!(w.pass(), "{:?}", w.findings);
        assert_eq!(w.data.weights.subspaces.len(), 1);
        assert_eq!(w.data.weights.subspaces[0].dim(), 2);
        assert_eq!(w.data.eps0, rat(2, 1));
        assert_eq!(w.data.eps1, rat(1, 2));
    }

    #[test]
    fn non_scalar_central_element_is_rejected() {
        let oct = AlternateOctet {
            y0p: Mat::identity(2),
            y1p: Mat::identity(2),
            y0m: Mat::identity(2),
            y1m: Mat::identity(2),
            k0: Mat::diagonal(&[rat(1, 1), rat(2, 1)]),
            k1: Mat::identity(2),
            k0inv: Mat::diagonal(&[rat(1, 1), rat(1, 2)]),
            k1inv: Mat::identity(2),
        };
        assert!(matches!(
            weight_decomposition(&oct, &q2()),
            Err(Error::NotScalar(_))
        ));
    }

    #[test]
    fn uniqueness_smoke_test_passes_on_e1() {
        let (pair, six, quartet) = e1_setup();
        for variant in [Variant::Minus, Variant::Plus] {
            let findings = uniqueness_smoke_test(&pair, &quartet, &six, variant);
            assert!(findings.is_empty(), "{variant}: {findings:?}");
        }
    }

    #[test]
    fn uniqueness_smoke_test_passes_on_d0() {
        let pair = d0_pair();
        let six = six_decompositions(&pair);
        let quartet = build_quartet(&pair, &six, &rat(1, 1), &rat(1, 1)).unwrap();
        for variant in [Variant::Minus, Variant::Plus] {
            assert!(uniqueness_smoke_test(&pair, &quartet, &six, variant).is_empty());
        }
    }
}

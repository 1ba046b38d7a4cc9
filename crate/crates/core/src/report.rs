//! Check outcomes: findings, relation residual records, and the aggregate
//! suite report the batch front-end emits.

use serde::{Deserialize, Serialize};

use crate::decomposition::DecName;
use crate::error::Error;
use crate::field::Field;
use crate::instances::ExtractedPair;
use crate::io::Instance;
use crate::matrix::Matrix;
use crate::octet::{
    assemble_module_structure, alternate_from_chevalley, check_alternate_relations,
    check_chevalley_relations, chevalley_from_alternate, uniqueness_smoke_test,
    weight_decomposition, Variant,
};
use crate::pair::{six_decompositions, PairReport, ShapeVector};
use crate::quartet::{
    build_quartet, check_bbkk_action_tables, check_bilinear_relations, check_q_serre,
    verify_derived_pair,
};
use crate::{Mat, Rat};

/// One failed (or noteworthy) check, named precisely enough to identify the
/// claim it contradicts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub check: String,
    pub detail: String,
}

impl Finding {
    pub fn new(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

/// Result of checking a single operator relation: the residual matrix is
/// kept in full so a falsification stays diagnosable.
#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "Matrix<T>: Serialize"))]
pub struct RelationCheck<T> {
    pub relation: String,
    pub pass: bool,
    pub residual: Matrix<T>,
}

impl<T: Field> RelationCheck<T> {
    /// Pass iff the residual is exactly the zero matrix.
    pub fn from_residual(relation: impl Into<String>, residual: Matrix<T>) -> Self {
        RelationCheck {
            relation: relation.into(),
            pass: residual.is_zero(),
            residual,
        }
    }
}

/// A batch of relation checks belonging to one theorem-level claim.
#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "Matrix<T>: Serialize"))]
pub struct RelationReport<T> {
    pub checks: Vec<RelationCheck<T>>,
}

impl<T: Field> RelationReport<T> {
    pub fn new(checks: Vec<RelationCheck<T>>) -> Self {
        RelationReport { checks }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, relation: &str) -> Option<&RelationCheck<T>> {
        self.checks.iter().find(|c| c.relation == relation)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.relation.clone())
            .collect()
    }

    pub fn findings(&self, group: &str) -> Vec<Finding> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| {
                Finding::new(
                    format!("{group}:{}", c.relation),
                    format!("nonzero residual {}", c.residual),
                )
            })
            .collect()
    }
}

/// One theorem-level group of checks in the verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub group: String,
    pub pass: bool,
    pub skipped: bool,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationCheck<Rat>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairReport>,
}

impl GroupReport {
    fn from_findings(name: &str, findings: Vec<Finding>) -> Self {
        GroupReport {
            group: name.to_string(),
            pass: findings.is_empty(),
            skipped: false,
            findings,
            relations: None,
            pair: None,
        }
    }

    fn from_relations(name: &str, report: RelationReport<Rat>) -> Self {
        GroupReport {
            group: name.to_string(),
            pass: report.pass(),
            skipped: false,
            findings: report.findings(name),
            relations: Some(report.checks),
            pair: None,
        }
    }

    fn skipped(name: &str) -> Self {
        GroupReport {
            group: name.to_string(),
            pass: false,
            skipped: true,
            findings: vec![Finding::new(name, "skipped: a prerequisite group failed")],
            relations: None,
            pair: None,
        }
    }
}

/// Canonical group order of the verification suite.
pub const SUITE_GROUPS: [&str; 14] = [
    "pair-axioms",
    "decompositions",
    "quartet-bilinear",
    "q-serre",
    "action-tables",
    "derived-pair",
    "module-minus",
    "module-plus",
    "chevalley-minus",
    "chevalley-plus",
    "weight-minus",
    "weight-plus",
    "uniqueness-minus",
    "uniqueness-plus",
];

/// Aggregate result of running every theorem-level check on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub instance: String,
    pub n: usize,
    pub declared_d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<ShapeVector>,
    /// (eps0, eps1) of the minus module structure, as canonical strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_type: Option<(String, String)>,
    pub overall_pass: bool,
    pub groups: Vec<GroupReport>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn group(&self, name: &str) -> Option<&GroupReport> {
        self.groups.iter().find(|g| g.group == name)
    }

    pub fn first_failing_group(&self) -> Option<&GroupReport> {
        self.groups.iter().find(|g| !g.pass)
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    label: &str,
    n: usize,
    declared_d: usize,
    d: Option<usize>,
    shape: Option<ShapeVector>,
    module_type: Option<(String, String)>,
    mut groups: Vec<GroupReport>,
    started: std::time::Instant,
) -> SuiteReport {
    for name in SUITE_GROUPS.iter().skip(groups.len()) {
        groups.push(GroupReport::skipped(name));
    }
    let overall_pass = groups.iter().all(|g| g.pass);
    SuiteReport {
        instance: label.to_string(),
        n,
        declared_d,
        d,
        shape,
        module_type,
        overall_pass,
        groups,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

/// Runs the full verification suite on a loaded instance: pair axioms, the
/// six decompositions with their sum and action tables, the operator
/// quartet with its bilinear and q-Serre relations and action tables, the
/// derived pair, both module structures with both presentations' relations,
/// the weight space decompositions with types, and the uniqueness smoke
/// tests.
///
/// Falsifications land in the report; only malformed input errors out.
pub fn run_suite(
    instance: &Instance,
    b: &Rat,
    bstar: &Rat,
    label: &str,
) -> Result<SuiteReport, Error> {
    use num::Zero;
    if b.is_zero() || bstar.is_zero() {
        return Err(Error::InvalidParameter("b and b* must be nonzero".into()));
    }
    let started = std::time::Instant::now();
    let n = instance.a_op.rows();
    let mut groups: Vec<GroupReport> = Vec::new();

    let check = crate::pair::verify_tridiagonal_pair(
        &instance.a_op,
        &instance.astar_op,
        &instance.cfg,
        &instance.a,
        &instance.astar,
    )?;
    let mut axiom_findings = check.report.failures.clone();
    if let Some(found_d) = check.report.d {
        if found_d != instance.d {
            axiom_findings.push(Finding::new(
                "declared diameter",
                format!("instance declares d = {} but the spectrum gives d = {found_d}", instance.d),
            ));
        }
    }
    let pair_pass = check.report.pass() && axiom_findings.is_empty();
    groups.push(GroupReport {
        group: "pair-axioms".to_string(),
        pass: pair_pass,
        skipped: false,
        findings: axiom_findings,
        relations: None,
        pair: Some(check.report.clone()),
    });
    let d = check.report.d;
    let shape = check.report.shape.clone();
    let Some(pair) = check.pair.filter(|_| pair_pass) else {
        return Ok(finish(label, n, instance.d, d, shape, None, groups, started));
    };

    let six = six_decompositions(&pair);
    groups.push(GroupReport::from_findings("decompositions", six.findings.clone()));
    let decs_valid = six.decs.iter().all(|dec| dec.validate().is_empty());
    if !decs_valid {
        return Ok(finish(label, n, instance.d, d, shape, None, groups, started));
    }

    let quartet = build_quartet(&pair, &six, b, bstar)?;
    groups.push(GroupReport::from_relations(
        "quartet-bilinear",
        check_bilinear_relations(&pair, &quartet),
    ));
    groups.push(GroupReport::from_relations(
        "q-serre",
        check_q_serre(&pair, &quartet),
    ));
    groups.push(GroupReport::from_findings(
        "action-tables",
        check_bbkk_action_tables(&pair, &quartet, &six),
    ));

    let derived = verify_derived_pair(&pair, &quartet)?;
    let mut derived_findings = derived.report.failures.clone();
    if derived.report.shape != check.report.shape {
        derived_findings.push(Finding::new(
            "derived-pair shape",
            format!(
                "derived pair has shape {:?}, input pair {:?}",
                derived.report.shape, check.report.shape
            ),
        ));
    }
    groups.push(GroupReport {
        group: "derived-pair".to_string(),
        pass: derived_findings.is_empty(),
        skipped: false,
        findings: derived_findings,
        relations: None,
        pair: Some(derived.report),
    });

    let minus = assemble_module_structure(&pair, &quartet, Variant::Minus);
    let plus = assemble_module_structure(&pair, &quartet, Variant::Plus);
    groups.push(GroupReport::from_relations(
        "module-minus",
        check_alternate_relations(&minus, &pair.cfg),
    ));
    groups.push(GroupReport::from_relations(
        "module-plus",
        check_alternate_relations(&plus, &pair.cfg),
    ));

    for (name, oct) in [("chevalley-minus", &minus), ("chevalley-plus", &plus)] {
        let chev = chevalley_from_alternate(oct, &pair.cfg);
        let report = check_chevalley_relations(&chev, &pair.cfg);
        let mut g = GroupReport::from_relations(name, report);
        if alternate_from_chevalley(&chev, &pair.cfg) != *oct {
            g.pass = false;
            g.findings.push(Finding::new(
                format!("{name} round trip"),
                "translating to Chevalley generators and back does not reproduce the octet",
            ));
        }
        groups.push(g);
    }

    let mut module_type = None;
    for (name, oct, expected) in [
        ("weight-minus", &minus, DecName::ZeroStarD),
        ("weight-plus", &plus, DecName::DStarZero),
    ] {
        let mut findings = Vec::new();
        match weight_decomposition(oct, &pair.cfg) {
            Ok(outcome) => {
                findings.extend(outcome.findings.clone());
                if !outcome.has_type_one_one() {
                    findings.push(Finding::new(
                        format!("{name} type"),
                        format!(
                            "type is ({}, {}), expected (1, 1)",
                            outcome.data.eps0, outcome.data.eps1
                        ),
                    ));
                }
                if outcome.data.weights.subspaces != six.get(expected).subspaces {
                    findings.push(Finding::new(
                        format!("{name} spaces"),
                        format!("weight decomposition differs from {expected}"),
                    ));
                }
                if name == "weight-minus" {
                    module_type = Some((
                        outcome.data.eps0.to_string(),
                        outcome.data.eps1.to_string(),
                    ));
                }
            }
            Err(e) => findings.push(Finding::new(name, e.to_string())),
        }
        groups.push(GroupReport::from_findings(name, findings));
    }

    for (name, variant) in [
        ("uniqueness-minus", Variant::Minus),
        ("uniqueness-plus", Variant::Plus),
    ] {
        groups.push(GroupReport::from_findings(
            name,
            uniqueness_smoke_test(&pair, &quartet, &six, variant),
        ));
    }

    Ok(finish(
        label,
        n,
        instance.d,
        d,
        shape,
        module_type,
        groups,
        started,
    ))
}

/// Report record for one irreducibility scan grid point, JSONL-friendly.
pub fn scan_record_json(record: &crate::instances::ScanRecord<Rat>) -> serde_json::Value {
    let spec_file = record.spec.to_file();
    serde_json::json!({
        "q": crate::io::rat_to_string(record.spec.cfg.q()),
        "factors": spec_file.factors,
        "dim": record.dim,
        "full_algebra_dim": record.dim * record.dim,
        "burnside_dim": record.burnside_dim,
        "irreducible": record.irreducible,
        "shape": record.shape.as_ref().map(|s| s.0.clone()),
        "error": record.error,
    })
}

/// Report record for an antiautomorphism probe.
pub fn antiaut_record_json(
    result: &crate::instances::AntiautResult<Rat>,
    a: &Mat,
    astar: &Mat,
) -> serde_json::Value {
    let intertwines = result
        .s
        .as_ref()
        .map(|s| crate::instances::antiaut_intertwines(s, a, astar));
    serde_json::json!({
        "found": result.found,
        "symmetric": result.symmetric,
        "solution_dim": result.solution_dim,
        "intertwines": intertwines,
        "s": result.s,
    })
}

/// Convenience: extract a pair from a module octet and build the instance
/// wrapper used by the suite and the instance files.
pub fn instance_from_extracted(
    extracted: &ExtractedPair<Rat>,
    cfg: &crate::field::FieldConfig<Rat>,
    a: &Rat,
    astar: &Rat,
    d: usize,
    provenance: Option<crate::io::Provenance>,
) -> Instance {
    Instance {
        cfg: cfg.clone(),
        d,
        a: a.clone(),
        astar: astar.clone(),
        a_op: extracted.a_op.clone(),
        astar_op: extracted.astar_op.clone(),
        provenance,
    }
}

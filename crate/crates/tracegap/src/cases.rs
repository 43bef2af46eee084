//! Registered reference cases: the specific matrices whose published
//! values this library reproduces, each with the number (or sign fact) it
//! is expected to produce.
//!
//! The registry drives three consumers: the suite (each case carries a
//! holds/violates expectation), the reproduction table (each case carries
//! numeric targets with per-case tolerances), and the shipped fixture
//! files (each case can emit its matrices for command-line replay).

use num_complex::Complex64;

use crate::deformed::Deformation;
use crate::error::{Error, Result};
use crate::inequalities::{
    evaluate, min_eig_op_lb, trace_op_lb, CaseExpectation, GapInputs, InequalityId,
};
use crate::io::MatrixFile;
use crate::matrix::HermMatrix;
use crate::quantities::DensityMatrix;

/// Numeric target of one reference case.
#[derive(Debug, Clone, Copy)]
pub enum Target {
    /// The evaluated gap equals `value` within `tol`.
    GapWithin { value: f64, tol: f64 },
    /// The weighted trace of the matrix-order defect equals `value`
    /// within `tol`.
    TraceWithin { value: f64, tol: f64 },
    /// The smallest eigenvalue of the matrix-order defect lies strictly
    /// below `threshold`.
    MinEigBelow { threshold: f64 },
    /// Both sides of the comparison match pinned values within `tol`.
    SidesWithin { lhs: f64, rhs: f64, tol: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceCase {
    pub name: &'static str,
    pub id: InequalityId,
    pub description: &'static str,
    pub expectation: CaseExpectation,
    pub target: Target,
    build: fn() -> GapInputs,
}

fn herm(rows: &[Vec<f64>]) -> HermMatrix {
    HermMatrix::from_real_rows(rows).expect("registered matrix is Hermitian")
}

fn p2_inputs() -> GapInputs {
    GapInputs::Pair {
        x: herm(&[vec![10.0, 7.0], vec![7.0, 5.0]]),
        y: herm(&[vec![16.0, 6.0], vec![6.0, 3.0]]),
        param: 0.5,
    }
}

fn cmp_lower_x() -> HermMatrix {
    herm(&[vec![10.0, 5.0], vec![5.0, 5.0]])
}

fn cmp_lower_y() -> HermMatrix {
    HermMatrix::diagonal(&[1.0, 2.0]).expect("diagonal")
}

fn cmp_lower_nu01_inputs() -> GapInputs {
    GapInputs::Pair {
        x: cmp_lower_x(),
        y: cmp_lower_y(),
        param: 0.1,
    }
}

fn cmp_lower_nu09_inputs() -> GapInputs {
    GapInputs::Pair {
        x: cmp_lower_x(),
        y: cmp_lower_y(),
        param: 0.9,
    }
}

fn remark_i_i_inputs() -> GapInputs {
    GapInputs::Pair {
        x: herm(&[vec![2.0, 1.0], vec![1.0, 4.0]]),
        y: HermMatrix::diagonal(&[1.0, 2.0]).expect("diagonal"),
        param: 1.0,
    }
}

fn remark_i_ii_inputs() -> GapInputs {
    GapInputs::Pair {
        x: herm(&[vec![2.0 / 9.0, 1.0 / 9.0], vec![1.0 / 9.0, 5.0 / 9.0]]),
        y: HermMatrix::diagonal(&[1.0 / 3.0, 2.0 / 3.0]).expect("diagonal"),
        param: 1.0,
    }
}

fn remark_ii_inputs() -> GapInputs {
    GapInputs::Pair {
        x: herm(&[
            vec![10.0 / 15.0, -3.0 / 15.0],
            vec![-3.0 / 15.0, 10.0 / 15.0],
        ]),
        y: herm(&[vec![0.1, 0.1], vec![0.1, 0.2]]),
        param: 1.0,
    }
}

fn cex41_inputs() -> GapInputs {
    let rho = DensityMatrix::new(HermMatrix::diagonal(&[0.75, 0.25]).expect("diagonal"))
        .expect("unit trace");
    let a = HermMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
        vec![Complex64::new(0.0, -1.0), Complex64::new(0.0, 0.0)],
    ])
    .expect("Hermitian");
    let b = herm(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
    GapInputs::State {
        rho,
        a,
        b,
        alpha: None,
    }
}

/// Pinned left side of the `cex41` comparison, `(1 - sqrt(3)/2)^2`.
pub fn cex41_lhs() -> f64 {
    let s = 1.0 - 3.0f64.sqrt() / 2.0;
    s * s
}

pub fn reference_cases() -> &'static [ReferenceCase] {
    &[
        ReferenceCase {
            name: "p2_counterexample",
            id: InequalityId::CmpUpperBounds,
            description:
                "trace of the weighted geometric mean drops below the min-trace at nu = 1/2",
            expectation: CaseExpectation::Violates,
            target: Target::GapWithin {
                value: -0.510619,
                tol: 1e-5,
            },
            build: p2_inputs,
        },
        ReferenceCase {
            name: "cmp_lower_nu01",
            id: InequalityId::CmpLowerBounds,
            description:
                "candidate lower-bound comparison holds at nu = 0.1 on the registered pair",
            expectation: CaseExpectation::Holds,
            target: Target::GapWithin {
                value: 0.508133,
                tol: 1e-5,
            },
            build: cmp_lower_nu01_inputs,
        },
        ReferenceCase {
            name: "cmp_lower_nu09",
            id: InequalityId::CmpLowerBounds,
            description: "same pair flips sign at nu = 0.9, refuting the candidate bound",
            expectation: CaseExpectation::Violates,
            target: Target::GapWithin {
                value: -1.1696,
                tol: 1e-3,
            },
            build: cmp_lower_nu09_inputs,
        },
        ReferenceCase {
            name: "remark_I_i",
            id: InequalityId::OpLbMatrix,
            description: "matrix-order strengthening fails: defect has a negative eigenvalue",
            expectation: CaseExpectation::Violates,
            target: Target::MinEigBelow { threshold: -1e-6 },
            build: remark_i_i_inputs,
        },
        ReferenceCase {
            name: "remark_I_ii",
            id: InequalityId::OpLbMatrix,
            description: "normalized variant of the same failure, entries in ninths and thirds",
            expectation: CaseExpectation::Violates,
            target: Target::MinEigBelow { threshold: -1e-6 },
            build: remark_i_ii_inputs,
        },
        ReferenceCase {
            name: "remark_II",
            id: InequalityId::OpLbMatrix,
            description: "weighted trace of the defect is large and negative at nu = 1",
            expectation: CaseExpectation::Violates,
            target: Target::TraceWithin {
                value: -20.9667,
                tol: 1e-3,
            },
            build: remark_ii_inputs,
        },
        ReferenceCase {
            name: "cex41",
            id: InequalityId::UlWyKnownFalse,
            description: "skew-information product falls below the commutator bound on a qubit",
            expectation: CaseExpectation::Violates,
            target: Target::SidesWithin {
                lhs: 0.01794919243112272,
                rhs: 0.25,
                tol: 1e-10,
            },
            build: cex41_inputs,
        },
    ]
}

pub fn find_case(name: &str) -> Result<&'static ReferenceCase> {
    reference_cases()
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCase(name.to_string()))
}

impl ReferenceCase {
    pub fn inputs(&self) -> GapInputs {
        (self.build)()
    }

    /// Matrices of this case as interchange files, named
    /// `<case>_<slot>.json`; notes record exact rational entries where the
    /// stored decimals are rounded.
    pub fn fixture_files(&self) -> Vec<(String, MatrixFile)> {
        let note = |text: &str| Some(text.to_string());
        match self.inputs() {
            GapInputs::Pair { x, y, .. } => {
                let (x_note, y_note) = match self.name {
                    "remark_I_ii" => (
                        note("entries are [[2,1],[1,5]]/9"),
                        note("entries are diag(1,2)/3"),
                    ),
                    "remark_II" => (
                        note("entries are [[10,-3],[-3,10]]/15"),
                        note("entries are [[1,1],[1,2]]/10"),
                    ),
                    _ => (None, None),
                };
                vec![
                    (
                        format!("{}_x.json", self.name),
                        MatrixFile {
                            note: x_note,
                            ..MatrixFile::from_herm(&format!("{}_x", self.name), &x, None)
                        },
                    ),
                    (
                        format!("{}_y.json", self.name),
                        MatrixFile {
                            note: y_note,
                            ..MatrixFile::from_herm(&format!("{}_y", self.name), &y, None)
                        },
                    ),
                ]
            }
            GapInputs::State { rho, a, b, .. } => vec![
                (
                    format!("{}_rho.json", self.name),
                    MatrixFile::from_herm(
                        &format!("{}_rho", self.name),
                        rho.matrix(),
                        Some("entries are diag(3,1)/4"),
                    ),
                ),
                (
                    format!("{}_a.json", self.name),
                    MatrixFile::from_herm(&format!("{}_a", self.name), &a, None),
                ),
                (
                    format!("{}_b.json", self.name),
                    MatrixFile::from_herm(&format!("{}_b", self.name), &b, None),
                ),
            ],
            _ => Vec::new(),
        }
    }

    fn nu(&self) -> Result<Deformation> {
        match self.inputs() {
            GapInputs::Pair { param, .. } => Deformation::new(param),
            _ => Err(Error::MissingInput("nu")),
        }
    }

    /// Rows of the reproduction table for this case.
    pub fn reproduce(&self) -> Result<Vec<ReproduceRow>> {
        let inputs = self.inputs();
        match self.target {
            Target::GapWithin { value, tol } => {
                let reports = evaluate(self.id, &inputs, None)?;
                let observed = reports.iter().map(|r| r.gap).fold(f64::INFINITY, f64::min);
                Ok(vec![ReproduceRow::within(
                    self.name.to_string(),
                    value,
                    observed,
                    tol,
                )])
            }
            Target::TraceWithin { value, tol } => {
                let (x, y) = match &inputs {
                    GapInputs::Pair { x, y, .. } => (x, y),
                    _ => return Err(Error::MissingInput("matrix pair")),
                };
                let observed = trace_op_lb(x, y, self.nu()?)?;
                Ok(vec![ReproduceRow::within(
                    self.name.to_string(),
                    value,
                    observed,
                    tol,
                )])
            }
            Target::MinEigBelow { threshold } => {
                let (x, y) = match &inputs {
                    GapInputs::Pair { x, y, .. } => (x, y),
                    _ => return Err(Error::MissingInput("matrix pair")),
                };
                let observed = min_eig_op_lb(x, y, self.nu()?)?;
                Ok(vec![ReproduceRow {
                    case: self.name.to_string(),
                    target: format!("< {threshold:e}"),
                    observed,
                    difference: None,
                    pass: observed < threshold,
                }])
            }
            Target::SidesWithin { lhs, rhs, tol } => {
                let report = evaluate(self.id, &inputs, None)?
                    .into_iter()
                    .next()
                    .ok_or(Error::MissingInput("report"))?;
                Ok(vec![
                    ReproduceRow::within(format!("{}/lhs", self.name), lhs, report.lhs, tol),
                    ReproduceRow::within(format!("{}/rhs", self.name), rhs, report.rhs, tol),
                ])
            }
        }
    }
}

/// One row of the reproduction table: a pinned number against the value
/// this build computes.
#[derive(Debug, Clone)]
pub struct ReproduceRow {
    pub case: String,
    pub target: String,
    pub observed: f64,
    /// Absolute difference for value targets; sign targets have none.
    pub difference: Option<f64>,
    pub pass: bool,
}

impl ReproduceRow {
    fn within(case: String, expected: f64, observed: f64, tol: f64) -> Self {
        let difference = (observed - expected).abs();
        ReproduceRow {
            case,
            target: format!("{expected} ± {tol:e}"),
            observed,
            difference: Some(difference),
            pass: difference <= tol,
        }
    }
}

/// Reproduces one case by name, or every registered case for `all`.
pub fn reproduce(case_id: &str) -> Result<Vec<ReproduceRow>> {
    if case_id == "all" {
        let mut rows = Vec::new();
        for case in reference_cases() {
            rows.extend(case.reproduce()?);
        }
        return Ok(rows);
    }
    find_case(case_id)?.reproduce()
}

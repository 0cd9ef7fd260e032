use std::collections::BTreeSet;
use std::fmt;

use crate::lie::{BilinearForm, LieData, RepData};
use crate::linalg::{rank, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Lie,
    Form,
    Rep,
}

/// One failed condition. Indices are 0-based internally and printed 1-based.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// `f^c_{ab} ≠ −f^c_{ba}`.
    Antisymmetry { a: usize, b: usize, c: usize },
    /// The Jacobi sum for `(a, b, c)` has a nonzero `e_d` component.
    Jacobi { a: usize, b: usize, c: usize, d: usize, value: Scalar },
    FormShape { rows: usize, cols: usize, dim: usize },
    FormSymmetry { a: usize, b: usize },
    FormSingular { rank: usize },
    /// `f^c_{ab} B_{cd} + f^c_{ad} B_{bc} ≠ 0`.
    FormInvariance { a: usize, b: usize, d: usize, value: Scalar },
    RepCount { expected: usize, found: usize },
    /// `[τ_a, τ_b] ≠ f^c_{ab} τ_c`.
    RepBracket { a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { a, b, c } => write!(
                f,
                "antisymmetry violation at ({}, {}, {}): f^{}_{{{}{}}} != -f^{}_{{{}{}}}",
                a + 1, b + 1, c + 1, c + 1, a + 1, b + 1, c + 1, b + 1, a + 1
            ),
            Violation::Jacobi { a, b, c, d, value } => write!(
                f,
                "Jacobi violation at ({}, {}, {}): component e{} of the cyclic sum is {}",
                a + 1, b + 1, c + 1, d + 1, value
            ),
            Violation::FormShape { rows, cols, dim } => {
                write!(f, "form has shape {rows}x{cols}, expected {dim}x{dim}")
            }
            Violation::FormSymmetry { a, b } => {
                write!(f, "form not symmetric at ({}, {})", a + 1, b + 1)
            }
            Violation::FormSingular { rank } => write!(f, "form is degenerate (rank {rank})"),
            Violation::FormInvariance { a, b, d, value } => write!(
                f,
                "form invariance violation at ({}, {}, {}): f^c_ab B_cd + f^c_ad B_bc = {}",
                a + 1, b + 1, d + 1, value
            ),
            Violation::RepCount { expected, found } => {
                write!(f, "representation has {found} matrices, expected {expected}")
            }
            Violation::RepBracket { a, b } => write!(
                f,
                "homomorphism violation at pair ({}, {}): [tau_{}, tau_{}] != f^c_{{{}{}}} tau_c",
                a + 1, b + 1, a + 1, b + 1, a + 1, b + 1
            ),
        }
    }
}

/// Outcome of one validation; empty `violations` means valid.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub kind: ReportKind,
    pub subject: String,
    pub violations: Vec<Violation>,
    /// Set by form validation: whether `B` is exactly the identity.
    pub orthonormal: Option<bool>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ReportKind::Lie => "lie algebra",
            ReportKind::Form => "bilinear form",
            ReportKind::Rep => "representation",
        };
        let status = if self.is_ok() { "valid" } else { "INVALID" };
        if self.subject.is_empty() {
            write!(f, "{what}: {status}")?;
        } else {
            write!(f, "{what} {}: {status}", self.subject)?;
        }
        if let Some(o) = self.orthonormal {
            write!(f, " (orthonormal: {})", if o { "yes" } else { "no" })?;
        }
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// Checks antisymmetry of every stored constant and the Jacobi identity on
/// every index triple `a < b < c`.
pub fn validate_lie(lie: &LieData) -> ValidationReport {
    let n = lie.dim();
    let mut violations = Vec::new();
    let candidates: BTreeSet<(usize, usize, usize)> = lie
        .entries()
        .map(|(&(a, b, c), _)| (a.min(b), a.max(b), c))
        .collect();
    for (a, b, c) in candidates {
        if lie.f(a, b, c) != -lie.f(b, a, c) {
            violations.push(Violation::Antisymmetry { a, b, c });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut sum = vec![Scalar::zero(); n];
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    // f^m_{xy} f^d_{mz}
                    for (m, fm) in lie.bracket(x, y) {
                        for (d, fd) in lie.bracket(*m, z) {
                            sum[*d] += &(fm * fd);
                        }
                    }
                }
                for (d, value) in sum.into_iter().enumerate() {
                    if !value.is_zero() {
                        violations.push(Violation::Jacobi { a, b, c, d, value });
                    }
                }
            }
        }
    }
    ValidationReport {
        kind: ReportKind::Lie,
        subject: format!("(dim {n})"),
        violations,
        orthonormal: None,
    }
}

/// Checks symmetry, non-degeneracy and `g`-invariance of `B`, and flags
/// whether `B` is the identity.
pub fn validate_form(lie: &LieData, form: &BilinearForm) -> ValidationReport {
    let n = lie.dim();
    let m = form.matrix();
    let mut violations = Vec::new();
    if m.shape() != (n, n) {
        violations.push(Violation::FormShape {
            rows: m.rows(),
            cols: m.cols(),
            dim: n,
        });
        return ValidationReport {
            kind: ReportKind::Form,
            subject: String::new(),
            violations,
            orthonormal: Some(false),
        };
    }
    for a in 0..n {
        for b in a + 1..n {
            if m.get(a, b) != m.get(b, a) {
                violations.push(Violation::FormSymmetry { a, b });
            }
        }
    }
    let r = rank(m);
    if r < n {
        violations.push(Violation::FormSingular { rank: r });
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let mut value = Scalar::zero();
                for (c, f) in lie.bracket(a, b) {
                    value += &(f * m.get(*c, d));
                }
                for (c, f) in lie.bracket(a, d) {
                    value += &(f * m.get(b, *c));
                }
                if !value.is_zero() {
                    violations.push(Violation::FormInvariance { a, b, d, value });
                }
            }
        }
    }
    ValidationReport {
        kind: ReportKind::Form,
        subject: String::new(),
        violations,
        orthonormal: Some(form.is_orthonormal()),
    }
}

/// Checks `[τ_a, τ_b] = f^c_{ab} τ_c` for every pair `a < b`.
pub fn validate_rep(lie: &LieData, rep: &RepData) -> ValidationReport {
    let n = lie.dim();
    let mut violations = Vec::new();
    if rep.len() != n {
        violations.push(Violation::RepCount {
            expected: n,
            found: rep.len(),
        });
    } else {
        let d = rep.dim_v();
        for a in 0..n {
            for b in a + 1..n {
                let lhs = rep
                    .tau(a)
                    .commutator(rep.tau(b))
                    .expect("representation matrices are square of equal size");
                let mut rhs = Matrix::zeros(d, d);
                for (c, f) in lie.bracket(a, b) {
                    rhs.add_assign(&rep.tau(*c).scale(f));
                }
                if lhs != rhs {
                    violations.push(Violation::RepBracket { a, b });
                }
            }
        }
    }
    ValidationReport {
        kind: ReportKind::Rep,
        subject: rep.name().to_string(),
        violations,
        orthonormal: None,
    }
}

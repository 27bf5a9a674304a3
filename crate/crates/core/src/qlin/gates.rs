// Copyright 2026 the biparti developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlin::UNITARY_TOL;

/// Gate or round transformation on a power-of-two dimension.
///
/// Construction checks `U U^dag = I` entrywise, so a value of this type is a
/// unitary by fiat.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    matrix: DMatrix<Complex64>,
}

impl UnitaryMatrix {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::BadMatrixDim { dim: matrix.ncols().max(dim) });
        }
        if matrix.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let gram = &matrix * matrix.adjoint();
        let mut deviation = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
                deviation = deviation.max((gram[(i, j)] - expect).norm());
            }
        }
        if deviation > UNITARY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { matrix })
    }

    pub fn identity(num_qubits: usize) -> Self {
        Self {
            matrix: DMatrix::identity(1 << num_qubits, 1 << num_qubits),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// `self (x) other`, with `self` on the more significant qubits.
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.kronecker(&other.matrix),
        }
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn from_rows(dim: usize, rows: &[Complex64]) -> UnitaryMatrix {
    UnitaryMatrix {
        matrix: DMatrix::from_row_slice(dim, dim, rows),
    }
}

pub fn identity_gate() -> UnitaryMatrix {
    UnitaryMatrix::identity(1)
}

pub fn pauli_x() -> UnitaryMatrix {
    from_rows(2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])
}

pub fn pauli_y() -> UnitaryMatrix {
    from_rows(2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)])
}

pub fn pauli_z() -> UnitaryMatrix {
    from_rows(2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)])
}

pub fn hadamard() -> UnitaryMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    from_rows(2, &[c(h, 0.), c(h, 0.), c(h, 0.), c(-h, 0.)])
}

/// Half-angle y rotation: takes `|0>` to `(|0> + |1>)/sqrt(2)`.
pub fn ry_half_pi() -> UnitaryMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    from_rows(2, &[c(h, 0.), c(-h, 0.), c(h, 0.), c(h, 0.)])
}

/// Controlled NOT; the first qubit controls, the second is the target.
pub fn cnot() -> UnitaryMatrix {
    from_rows(
        4,
        &[
            c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.),
            c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.),
            c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.),
            c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.),
        ],
    )
}

/// Pauli-frame rotation selected by a bit pair.
///
/// `(0,0) -> I`, `(0,1) -> sigma_z`, `(1,0) -> sigma_x`. The `(1,1)` entry is
/// the real pi rotation about y, `[[0,1],[-1,0]]`, which equals `sigma_y` up
/// to a global phase; the real form is the one that carries the Bell-label
/// table through superpositions without a stray relative phase.
pub fn r_pauli(b0: bool, b1: bool) -> UnitaryMatrix {
    match (b0, b1) {
        (false, false) => identity_gate(),
        (false, true) => pauli_z(),
        (true, false) => pauli_x(),
        (true, true) => from_rows(2, &[c(0., 0.), c(1., 0.), c(-1., 0.), c(0., 0.)]),
    }
}

/// Bilateral y rotation on a qubit pair, fixed to the phase convention that
/// permutes the Bell states exactly: `Phi+ <-> Phi+`, `Phi- <-> Psi+`,
/// `Psi- <-> Psi-`, with coefficient +1 on every image.
pub fn by_bilateral() -> UnitaryMatrix {
    let q = 0.5;
    from_rows(
        4,
        &[
            c(q, 0.), c(q, 0.), c(q, 0.), c(q, 0.),
            c(q, 0.), c(q, 0.), c(-q, 0.), c(-q, 0.),
            c(q, 0.), c(-q, 0.), c(q, 0.), c(-q, 0.),
            c(q, 0.), c(-q, 0.), c(-q, 0.), c(q, 0.),
        ],
    )
}

/// Gate lookup by name. `r_pauli` consumes the optional bit pair; every other
/// name rejects parameters it does not take by ignoring them.
pub fn standard_gate(name: &str, params: Option<(bool, bool)>) -> Result<UnitaryMatrix> {
    match name {
        "identity" => Ok(identity_gate()),
        "pauli_x" => Ok(pauli_x()),
        "pauli_y" => Ok(pauli_y()),
        "pauli_z" => Ok(pauli_z()),
        "hadamard" => Ok(hadamard()),
        "ry_half_pi" => Ok(ry_half_pi()),
        "cnot" => Ok(cnot()),
        "by_bilateral" => Ok(by_bilateral()),
        "r_pauli" => {
            let (b0, b1) = params.unwrap_or((false, false));
            Ok(r_pauli(b0, b1))
        }
        other => Err(Error::UnknownGate(other.to_string())),
    }
}

/// Adds one control qubit in front of `gate`: identity when the control is
/// `|0>`, `gate` when it is `|1>`.
pub fn controlled(gate: &UnitaryMatrix) -> UnitaryMatrix {
    let d = gate.dim();
    let mut m = DMatrix::identity(2 * d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            m[(d + i, d + j)] = gate.matrix()[(i, j)];
        }
    }
    UnitaryMatrix { matrix: m }
}

/// Block-diagonal selector: the leading `log2(options.len())` qubits pick
/// which option acts on the remaining ones. All options must share one
/// dimension and the option count must be a power of two.
pub fn select(options: &[UnitaryMatrix]) -> Result<UnitaryMatrix> {
    if options.is_empty() || !options.len().is_power_of_two() {
        return Err(Error::BadMatrixDim { dim: options.len() });
    }
    let d = options[0].dim();
    for opt in options {
        if opt.dim() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: opt.dim(),
            });
        }
    }
    let total = options.len() * d;
    let mut m = DMatrix::zeros(total, total);
    for (k, opt) in options.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                m[(k * d + i, k * d + j)] = opt.matrix()[(i, j)];
            }
        }
    }
    Ok(UnitaryMatrix { matrix: m })
}

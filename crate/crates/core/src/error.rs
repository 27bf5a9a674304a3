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

use crate::model::Party;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("empty tensor product")]
    EmptyTensorProduct,
    #[error("amplitude vector of length {len} is not a power of two")]
    BadStateLength { len: usize },
    #[error("state is not normalized: squared norm is {norm_sq}")]
    NotNormalized { norm_sq: f64 },
    #[error("non-finite entry in state or operator")]
    NonFinite,
    #[error("unknown gate name `{0}`")]
    UnknownGate(String),
    #[error("matrix of dimension {dim} is not a square power of two")]
    BadMatrixDim { dim: usize },
    #[error("matrix is not unitary: max |U U^dag - I| entry is {deviation}")]
    NotUnitary { deviation: f64 },
    #[error("not a density operator: {0}")]
    NotDensity(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("gate acts on {gate_qubits} qubits but {targets} targets were given")]
    TargetCountMismatch { gate_qubits: usize, targets: usize },
    #[error("duplicate target qubit {0}")]
    DuplicateTarget(usize),
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },
    #[error("empty keep set: use the full trace instead")]
    EmptyKeepSet,
    #[error("degenerate bipartition: one side is empty")]
    DegenerateBipartition,
    #[error("not a permutation of the qubit indices")]
    BadPermutation,

    #[error("empty protocol: at least one register is required")]
    EmptyProtocol,
    #[error("duplicate register label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown register label `{0}`")]
    UnknownLabel(String),
    #[error("{actor} does not control register `{label}`")]
    OwnershipViolation { actor: Party, label: String },
    #[error("the environment cannot act or be acted on")]
    EnvironmentActor,
    #[error("split map does not cover trusted-party register `{0}`")]
    IncompleteSplit(String),
    #[error("weights are not normalized: sum is {0}")]
    WeightsNotNormalized(f64),
    #[error("need at least two weighted choices")]
    TooFewChoices,
    #[error("viewer owns no qubits")]
    ViewerOwnsNothing,

    #[error("no perfect cheat exists: honest-side reductions differ by {distance}")]
    NoPerfectCheat { distance: f64 },
    #[error("rank-deficient block mismatch: {0}")]
    RankMismatch(String),
    #[error("protocol not concealing; Lo attack not applicable")]
    NotConcealing,
    #[error("result not unambiguously readable")]
    AmbiguousReadout,
    #[error("invalid input basis state {index} for a {num_qubits}-qubit register")]
    BadBasisInput { index: u64, num_qubits: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

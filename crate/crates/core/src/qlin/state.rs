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

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlin::{UnitaryMatrix, MAX_QUBITS, NORM_TOL};

/// Pure state of an ordered set of qubits.
///
/// Basis indices are big-endian: qubit 0 is the leftmost ket symbol and the
/// most significant bit of the index, so `|b0 b1 ... b_{n-1}>` lives at index
/// `b0*2^{n-1} + ... + b_{n-1}`. Every constructor enforces unit norm and
/// finite amplitudes; all operations preserve both.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

/// Bit position (from the least significant end) of `qubit` in a basis index.
#[inline]
pub(crate) fn bit_pos(num_qubits: usize, qubit: usize) -> usize {
    num_qubits - 1 - qubit
}

/// Value of `qubit` in basis index `index` under the big-endian convention.
#[inline]
pub(crate) fn bit_of(index: usize, num_qubits: usize, qubit: usize) -> usize {
    (index >> bit_pos(num_qubits, qubit)) & 1
}

impl StateVector {
    /// Builds a state from raw amplitudes, validating shape, finiteness and norm.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadStateLength { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::QubitOutOfRange {
                index: num_qubits,
                num_qubits: MAX_QUBITS,
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { num_qubits, amps })
    }

    /// Computational basis state `|index>` on `num_qubits` qubits.
    pub fn basis(num_qubits: usize, index: usize) -> Self {
        assert!(num_qubits >= 1 && num_qubits <= MAX_QUBITS);
        assert!(index < (1 << num_qubits));
        let mut amps = vec![Complex64::ZERO; 1 << num_qubits];
        amps[index] = Complex64::ONE;
        Self { num_qubits, amps }
    }

    /// Basis state written as explicit bits, leftmost first.
    pub fn from_bits(bits: &[u8]) -> Self {
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | (b as usize & 1));
        Self::basis(bits.len(), index)
    }

    /// Single qubit `a|0> + b|1>`.
    pub fn qubit(a: Complex64, b: Complex64) -> Result<Self> {
        Self::new(vec![a, b])
    }

    /// `(|0> + |1>)/sqrt(2)`.
    pub fn plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::qubit(h, h).expect("normalized by construction")
    }

    /// `(|00> + |11>)/sqrt(2)`.
    pub fn bell_phi_plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::new(vec![h, Complex64::ZERO, Complex64::ZERO, h]).expect("normalized")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|`; 1 means equal rays.
    pub fn overlap(&self, other: &StateVector) -> f64 {
        self.inner(other).norm()
    }

    /// Largest amplitude deviation after aligning the global phase of `other`
    /// to this state. Zero means the two states are the same ray.
    pub fn max_diff_up_to_phase(&self, other: &StateVector) -> f64 {
        let ip = self.inner(other);
        let phase = if ip.norm() > 1e-12 {
            ip.conj() / ip.norm()
        } else {
            Complex64::ONE
        };
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b * phase).norm())
            .fold(0.0, f64::max)
    }

    /// Marginal probability of reading `bits` on `qubits` (computational basis).
    pub fn marginal_probability(&self, qubits: &[usize], bits: &[u8]) -> f64 {
        assert_eq!(qubits.len(), bits.len());
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                qubits
                    .iter()
                    .zip(bits.iter())
                    .all(|(&q, &b)| bit_of(*i, self.num_qubits, q) == (b as usize & 1))
            })
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Projects `qubits` onto the pattern `bits` and renormalizes.
    ///
    /// Returns the outcome probability together with the post-projection state;
    /// the state is `None` when the probability vanishes.
    pub fn project(&self, qubits: &[usize], bits: &[u8]) -> (f64, Option<StateVector>) {
        let prob = self.marginal_probability(qubits, bits);
        if prob <= 1e-300 {
            return (prob, None);
        }
        let scale = 1.0 / prob.sqrt();
        let amps: Vec<Complex64> = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let keep = qubits
                    .iter()
                    .zip(bits.iter())
                    .all(|(&q, &b)| bit_of(i, self.num_qubits, q) == (b as usize & 1));
                if keep {
                    a * scale
                } else {
                    Complex64::ZERO
                }
            })
            .collect();
        (
            prob,
            Some(StateVector {
                num_qubits: self.num_qubits,
                amps,
            }),
        )
    }
}

/// Tensor product of states, left to right.
pub fn tensor(parts: &[StateVector]) -> Result<StateVector> {
    if parts.is_empty() {
        return Err(Error::EmptyTensorProduct);
    }
    let num_qubits: usize = parts.iter().map(|p| p.num_qubits).sum();
    if num_qubits > MAX_QUBITS {
        return Err(Error::QubitOutOfRange {
            index: num_qubits,
            num_qubits: MAX_QUBITS,
        });
    }
    let mut amps = vec![Complex64::ONE];
    for part in parts {
        let mut next = Vec::with_capacity(amps.len() * part.dim());
        for a in &amps {
            for b in &part.amps {
                next.push(a * b);
            }
        }
        amps = next;
    }
    StateVector::new(amps)
}

/// Applies `gate` to the listed qubits, in the listed order.
///
/// The gate's own qubit 0 acts on `targets[0]`; all other qubits are left
/// untouched. The targets need not be adjacent or ordered.
pub fn apply_unitary(
    state: &StateVector,
    gate: &UnitaryMatrix,
    targets: &[usize],
) -> Result<StateVector> {
    let n = state.num_qubits;
    let k = targets.len();
    if gate.num_qubits() != k {
        return Err(Error::TargetCountMismatch {
            gate_qubits: gate.num_qubits(),
            targets: k,
        });
    }
    for (i, &t) in targets.iter().enumerate() {
        if t >= n {
            return Err(Error::QubitOutOfRange {
                index: t,
                num_qubits: n,
            });
        }
        if targets[..i].contains(&t) {
            return Err(Error::DuplicateTarget(t));
        }
    }

    let d = 1usize << k;
    // sub_index s of a gate spans targets big-endian: bit (k-1-m) of s <-> targets[m]
    let offsets: Vec<usize> = (0..d)
        .map(|s| {
            let mut off = 0usize;
            for (m, &t) in targets.iter().enumerate() {
                if (s >> (k - 1 - m)) & 1 == 1 {
                    off |= 1 << bit_pos(n, t);
                }
            }
            off
        })
        .collect();
    let target_mask: usize = targets.iter().map(|&t| 1usize << bit_pos(n, t)).sum();

    let m = gate.matrix();
    let mut out = vec![Complex64::ZERO; state.dim()];
    let mut input = vec![Complex64::ZERO; d];
    for base in 0..state.dim() {
        if base & target_mask != 0 {
            continue;
        }
        for s in 0..d {
            input[s] = state.amps[base | offsets[s]];
        }
        for (r, &off) in offsets.iter().enumerate() {
            let mut acc = Complex64::ZERO;
            for (s, amp) in input.iter().enumerate() {
                acc += m[(r, s)] * amp;
            }
            out[base | off] = acc;
        }
    }
    Ok(StateVector {
        num_qubits: n,
        amps: out,
    })
}

/// Reorders qubits so that position `k` of the result holds the qubit that was
/// at `new_order[k]` in the input.
pub fn permute_qubits(state: &StateVector, new_order: &[usize]) -> Result<StateVector> {
    let n = state.num_qubits;
    if new_order.len() != n {
        return Err(Error::BadPermutation);
    }
    let mut seen = vec![false; n];
    for &q in new_order {
        if q >= n || seen[q] {
            return Err(Error::BadPermutation);
        }
        seen[q] = true;
    }
    let mut amps = vec![Complex64::ZERO; state.dim()];
    for (i, a) in state.amps.iter().enumerate() {
        let mut j = 0usize;
        for (k, &q) in new_order.iter().enumerate() {
            j |= bit_of(i, n, q) << bit_pos(n, k);
        }
        amps[j] = *a;
    }
    Ok(StateVector {
        num_qubits: n,
        amps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlin::gates;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_basis_states() {
        // |0> (x) |1> = |01>
        let s = tensor(&[StateVector::basis(1, 0), StateVector::basis(1, 1)]).unwrap();
        assert_eq!(s.num_qubits(), 2);
        assert_eq!(s.amplitude(1), Complex64::ONE);
        assert_eq!(s.amplitude(0), Complex64::ZERO);
    }

    #[test]
    fn tensor_superposition() {
        // |+> (x) |0> = (|00> + |10>)/sqrt(2)
        let s = tensor(&[StateVector::plus(), StateVector::basis(1, 0)]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitude(0).re - h).abs() < 1e-12);
        assert!((s.amplitude(2).re - h).abs() < 1e-12);
        assert_eq!(s.amplitude(1), Complex64::ZERO);
        assert_eq!(s.amplitude(3), Complex64::ZERO);
    }

    #[test]
    fn tensor_empty_errors() {
        assert_eq!(tensor(&[]), Err(Error::EmptyTensorProduct));
    }

    #[test]
    fn tensor_oot_input_state() {
        // (1/2)(|00>+|01>+|10>+|11>) (x) |Phi+> (x) |0> (x) |0>: the six-qubit
        // input of the oblivious-transfer gate before the trusted party acts.
        let quarter = StateVector::new(vec![c(0.5, 0.0); 4]).unwrap();
        let s = tensor(&[
            quarter,
            StateVector::bell_phi_plus(),
            StateVector::basis(1, 0),
            StateVector::basis(1, 0),
        ])
        .unwrap();
        assert_eq!(s.num_qubits(), 6);
        let amp = 0.5 * std::f64::consts::FRAC_1_SQRT_2;
        for a in 0..4usize {
            for t in [0b00usize, 0b11] {
                // A0 A1 T0 T1 T2 B0 with T0T1 = t and T2 = B0 = 0
                let idx = (a << 4) | (t << 2);
                assert!((s.amplitude(idx).re - amp).abs() < 1e-12);
            }
        }
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_normalized_rejected() {
        let err = StateVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        let err = StateVector::new(vec![c(f64::NAN, 0.0), c(0.0, 0.0)]).unwrap_err();
        assert_eq!(err, Error::NonFinite);
    }

    #[test]
    fn apply_identity_is_noop() {
        let s = tensor(&[StateVector::plus(), StateVector::basis(1, 1)]).unwrap();
        let out = apply_unitary(&s, &gates::identity_gate(), &[1]).unwrap();
        assert!(s.max_diff_up_to_phase(&out) < 1e-15);
    }

    #[test]
    fn cnot_respects_target_order() {
        let s = StateVector::basis(2, 0b10);
        let flipped = apply_unitary(&s, &gates::cnot(), &[0, 1]).unwrap();
        assert_eq!(flipped.amplitude(0b11), Complex64::ONE);
        let unchanged = apply_unitary(&s, &gates::cnot(), &[1, 0]).unwrap();
        assert_eq!(unchanged.amplitude(0b10), Complex64::ONE);
    }

    #[test]
    fn apply_on_middle_qubit() {
        // X on qubit 1 of |000> -> |010>
        let s = StateVector::basis(3, 0);
        let out = apply_unitary(&s, &gates::pauli_x(), &[1]).unwrap();
        assert_eq!(out.amplitude(0b010), Complex64::ONE);
    }

    #[test]
    fn apply_rejects_bad_targets() {
        let s = StateVector::basis(2, 0);
        assert!(matches!(
            apply_unitary(&s, &gates::cnot(), &[0]),
            Err(Error::TargetCountMismatch { .. })
        ));
        assert_eq!(
            apply_unitary(&s, &gates::cnot(), &[0, 0]),
            Err(Error::DuplicateTarget(0))
        );
        assert!(matches!(
            apply_unitary(&s, &gates::cnot(), &[0, 5]),
            Err(Error::QubitOutOfRange { .. })
        ));
    }

    #[test]
    fn permutation_moves_qubits() {
        // |01> with qubits swapped is |10>
        let s = StateVector::basis(2, 0b01);
        let p = permute_qubits(&s, &[1, 0]).unwrap();
        assert_eq!(p.amplitude(0b10), Complex64::ONE);
        assert_eq!(permute_qubits(&s, &[0, 0]), Err(Error::BadPermutation));
        assert_eq!(permute_qubits(&s, &[0]), Err(Error::BadPermutation));
    }

    #[test]
    fn projection_renormalizes() {
        let s = StateVector::bell_phi_plus();
        let (p, after) = s.project(&[0], &[1]);
        assert!((p - 0.5).abs() < 1e-12);
        let after = after.unwrap();
        assert_eq!(after.amplitude(0b11), Complex64::ONE);
        let (p0, _) = s.project(&[0, 1], &[0, 1]);
        assert_eq!(p0, 0.0);
    }

    #[test]
    fn phase_alignment_detects_rays() {
        let s = StateVector::bell_phi_plus();
        let rotated = StateVector::new(
            s.amplitudes()
                .iter()
                .map(|a| a * Complex64::from_polar(1.0, 1.234))
                .collect(),
        )
        .unwrap();
        assert!(s.max_diff_up_to_phase(&rotated) < 1e-12);
        let other = StateVector::basis(2, 1);
        assert!(s.max_diff_up_to_phase(&other) > 0.5);
    }
}

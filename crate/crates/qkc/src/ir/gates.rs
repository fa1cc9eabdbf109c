//! The gate database. A gate is defined by its matrix-attribute record, not
//! by its name: the record carries the matrix (or a generator for parametric
//! gates) together with structural metadata such as operand slots and control
//! positions.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use super::matrix::CMat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GateError {
    #[error("gate {gate} expects {expected} parameter(s), got {got}")]
    ParamCountMismatch {
        gate: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("unknown gate name {0:?}")]
    UnknownName(String),
    #[error("unknown gate identifier {0}")]
    UnknownId(u16),
}

/// The fixed gate set. `PrepZ` and `MeasZ` are carried in the same database
/// as the unitaries so a kernel is one uniform instruction stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    PrepZ,
    MeasZ,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    Cz,
    Cnot,
    Swap,
    Ccnot,
    Rx,
    Ry,
    Rz,
}

pub const ALL_GATES: [Gate; 17] = [
    Gate::PrepZ,
    Gate::MeasZ,
    Gate::X,
    Gate::Y,
    Gate::Z,
    Gate::H,
    Gate::S,
    Gate::Sdg,
    Gate::T,
    Gate::Tdg,
    Gate::Cz,
    Gate::Cnot,
    Gate::Swap,
    Gate::Ccnot,
    Gate::Rx,
    Gate::Ry,
    Gate::Rz,
];

impl Gate {
    pub fn name(self) -> &'static str {
        match self {
            Gate::PrepZ => "PREPZ",
            Gate::MeasZ => "MEASZ",
            Gate::X => "X",
            Gate::Y => "Y",
            Gate::Z => "Z",
            Gate::H => "H",
            Gate::S => "S",
            Gate::Sdg => "SDG",
            Gate::T => "T",
            Gate::Tdg => "TDG",
            Gate::Cz => "CZ",
            Gate::Cnot => "CNOT",
            Gate::Swap => "SWAP",
            Gate::Ccnot => "CCNOT",
            Gate::Rx => "RX",
            Gate::Ry => "RY",
            Gate::Rz => "RZ",
        }
    }

    /// Stable numeric identifier; doubles as the machine opcode.
    pub fn id(self) -> u16 {
        match self {
            Gate::PrepZ => 1,
            Gate::MeasZ => 2,
            Gate::X => 3,
            Gate::Y => 4,
            Gate::Z => 5,
            Gate::H => 6,
            Gate::S => 7,
            Gate::Sdg => 8,
            Gate::T => 9,
            Gate::Tdg => 10,
            Gate::Cz => 11,
            Gate::Cnot => 12,
            Gate::Swap => 13,
            Gate::Ccnot => 14,
            Gate::Rx => 15,
            Gate::Ry => 16,
            Gate::Rz => 17,
        }
    }

    pub fn from_name(name: &str) -> Result<Gate, GateError> {
        ALL_GATES
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| GateError::UnknownName(name.to_string()))
    }

    pub fn from_id(id: u16) -> Result<Gate, GateError> {
        ALL_GATES
            .into_iter()
            .find(|g| g.id() == id)
            .ok_or(GateError::UnknownId(id))
    }

    pub fn qubit_count(self) -> usize {
        match self {
            Gate::Cz | Gate::Cnot | Gate::Swap => 2,
            Gate::Ccnot => 3,
            _ => 1,
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            Gate::Rx | Gate::Ry | Gate::Rz => 1,
            _ => 0,
        }
    }

    pub fn has_cbit(self) -> bool {
        self == Gate::MeasZ
    }

    pub fn is_unitary(self) -> bool {
        !matches!(self, Gate::PrepZ | Gate::MeasZ)
    }

    pub fn is_hermitian(self) -> bool {
        matches!(
            self,
            Gate::X
                | Gate::Y
                | Gate::Z
                | Gate::H
                | Gate::Cz
                | Gate::Cnot
                | Gate::Swap
                | Gate::Ccnot
                | Gate::PrepZ
                | Gate::MeasZ
        )
    }

    fn control_qubits(self) -> Vec<usize> {
        match self {
            Gate::Cz | Gate::Cnot => vec![0],
            Gate::Ccnot => vec![0, 1],
            _ => vec![],
        }
    }

    // The basis tags are opaque metadata: stored, printed, round-tripped,
    // never interpreted by a pass. 1/2/3 tag the X/Y/Z axes, 0 is untagged.
    fn local_basis(self) -> Vec<i64> {
        match self {
            Gate::X | Gate::Rx => vec![1],
            Gate::Y | Gate::Ry => vec![2],
            Gate::Z | Gate::S | Gate::Sdg | Gate::T | Gate::Tdg | Gate::Rz => vec![3],
            Gate::H => vec![0],
            Gate::PrepZ | Gate::MeasZ => vec![3],
            Gate::Cz => vec![3, 3],
            Gate::Cnot => vec![3, 1],
            Gate::Swap => vec![0, 0],
            Gate::Ccnot => vec![3, 3, 1],
        }
    }

    /// Evaluates the gate matrix. Fixed gates ignore an empty `params` slice;
    /// rotation gates take one angle in radians. `PrepZ` and `MeasZ` report
    /// the |0><0| projector, their operational semantics live in the runtime.
    pub fn matrix(self, params: &[f64]) -> Result<CMat, GateError> {
        if params.len() != self.param_count() {
            return Err(GateError::ParamCountMismatch {
                gate: self.name(),
                expected: self.param_count(),
                got: params.len(),
            });
        }
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let m = match self {
            Gate::PrepZ | Gate::MeasZ => {
                CMat::from_parts(2, &[1.0, 0.0, 0.0, 0.0], &[0.0; 4])
            }
            Gate::X => CMat::from_parts(2, &[0.0, 1.0, 1.0, 0.0], &[0.0; 4]),
            Gate::Y => CMat::from_parts(2, &[0.0; 4], &[0.0, -1.0, 1.0, 0.0]),
            Gate::Z => CMat::from_parts(2, &[1.0, 0.0, 0.0, -1.0], &[0.0; 4]),
            Gate::H => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                CMat::from_parts(2, &[s, s, s, -s], &[0.0; 4])
            }
            Gate::S => CMat::from_entries(2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]),
            Gate::Sdg => {
                CMat::from_entries(2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)])
            }
            Gate::T => CMat::from_entries(
                2,
                vec![
                    c(1.0, 0.0),
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    Complex64::from_polar(1.0, FRAC_PI_4),
                ],
            ),
            Gate::Tdg => CMat::from_entries(
                2,
                vec![
                    c(1.0, 0.0),
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    Complex64::from_polar(1.0, -FRAC_PI_4),
                ],
            ),
            Gate::Cz => {
                let mut m = CMat::identity(4);
                m[(3, 3)] = c(-1.0, 0.0);
                m
            }
            Gate::Cnot => {
                // Operand 0 (the control) is the most significant bit.
                let mut m = CMat::zero(4);
                m[(0, 0)] = c(1.0, 0.0);
                m[(1, 1)] = c(1.0, 0.0);
                m[(2, 3)] = c(1.0, 0.0);
                m[(3, 2)] = c(1.0, 0.0);
                m
            }
            Gate::Swap => {
                let mut m = CMat::zero(4);
                m[(0, 0)] = c(1.0, 0.0);
                m[(1, 2)] = c(1.0, 0.0);
                m[(2, 1)] = c(1.0, 0.0);
                m[(3, 3)] = c(1.0, 0.0);
                m
            }
            Gate::Ccnot => {
                let mut m = CMat::identity(8);
                m[(6, 6)] = c(0.0, 0.0);
                m[(7, 7)] = c(0.0, 0.0);
                m[(6, 7)] = c(1.0, 0.0);
                m[(7, 6)] = c(1.0, 0.0);
                m
            }
            Gate::Rx => {
                let (cos, sin) = ((params[0] / 2.0).cos(), (params[0] / 2.0).sin());
                CMat::from_entries(2, vec![c(cos, 0.0), c(0.0, -sin), c(0.0, -sin), c(cos, 0.0)])
            }
            Gate::Ry => {
                let (cos, sin) = ((params[0] / 2.0).cos(), (params[0] / 2.0).sin());
                CMat::from_entries(2, vec![c(cos, 0.0), c(-sin, 0.0), c(sin, 0.0), c(cos, 0.0)])
            }
            Gate::Rz => CMat::from_entries(
                2,
                vec![
                    Complex64::from_polar(1.0, -params[0] / 2.0),
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    Complex64::from_polar(1.0, params[0] / 2.0),
                ],
            ),
        };
        Ok(m)
    }

    /// The full matrix-attribute record for this gate.
    pub fn def(self) -> GateDef {
        let zero_angle = vec![0.0; self.param_count()];
        let m = self.matrix(&zero_angle).expect("zero-angle evaluation");
        GateDef {
            name: self.name(),
            matrix_real: m.real_parts(),
            matrix_imag: m.imag_parts(),
            matrix_order: "rm",
            is_hermitian: self.is_hermitian(),
            is_unitary: self.is_unitary(),
            is_mutable: true,
            qubit_list: (0..self.qubit_count()).collect(),
            parametric_list: (0..self.param_count()).collect(),
            control_qubit_list: self.control_qubits(),
            local_basis_list: self.local_basis(),
            identifier: self.id(),
            kind: self,
        }
    }
}

/// A gate's attribute record. Field names follow the JSON annotation format;
/// for parametric gates the matrix fields hold the zero-angle evaluation and
/// [`GateDef::matrix`] is the authoritative generator.
#[derive(Clone, Debug, Serialize)]
pub struct GateDef {
    #[serde(skip)]
    pub name: &'static str,
    pub matrix_real: Vec<f64>,
    pub matrix_imag: Vec<f64>,
    pub matrix_order: &'static str,
    pub is_hermitian: bool,
    pub is_unitary: bool,
    pub is_mutable: bool,
    pub qubit_list: Vec<usize>,
    pub parametric_list: Vec<usize>,
    pub control_qubit_list: Vec<usize>,
    pub local_basis_list: Vec<i64>,
    pub identifier: u16,
    #[serde(skip)]
    kind: Gate,
}

impl GateDef {
    pub fn gate(&self) -> Gate {
        self.kind
    }

    /// Evaluates the gate matrix for the given parameter values (radians).
    pub fn matrix(&self, params: &[f64]) -> Result<CMat, GateError> {
        self.kind.matrix(params)
    }

    /// The attribute record as a JSON object, keyed exactly like the
    /// annotation format.
    pub fn attr_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("gate record serializes")
    }
}

/// The whole gate database: 17 definitions with distinct identifiers.
pub fn gatedb() -> Vec<GateDef> {
    ALL_GATES.into_iter().map(Gate::def).collect()
}

/// Evaluates a gate matrix from its definition record.
pub fn gate_matrix(def: &GateDef, params: &[f64]) -> Result<CMat, GateError> {
    def.matrix(params)
}

//! The flat intermediate representation: instructions, kernels, modules, and
//! structural validation.
//!
//! Qubit and cbit operands are flat indices into the module's declaration
//! space (declaration order, array elements contiguous). After qubit mapping
//! the qubit operands of a kernel become physical indices instead; the kernel
//! records which interpretation applies via its `mapped` flag.

use thiserror::Error;

use super::gates::Gate;
use crate::passes::TargetConfig;

/// A named array declaration (`qbit q[6]`, `cbit c[6]`, `shared double P[4]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayDecl {
    pub name: String,
    pub len: u32,
}

/// The parameter operand of an instruction.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamOperand {
    None,
    /// Angle in radians.
    Immediate(f64),
    /// Reference to an element of a shared parameter array; resolved to an
    /// immediate by the runtime at dispatch time.
    Symbol { array: String, index: u32 },
}

impl ParamOperand {
    pub fn is_symbol(&self) -> bool {
        matches!(self, ParamOperand::Symbol { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instr {
    pub gate: Gate,
    pub qubits: Vec<u32>,
    /// Flat cbit slot; present iff the gate is MEASZ.
    pub cbit: Option<u32>,
    pub param: ParamOperand,
    /// Start cycle, filled in by the scheduler.
    pub start: Option<u64>,
}

impl Instr {
    pub fn new(gate: Gate, qubits: Vec<u32>) -> Self {
        Instr {
            gate,
            qubits,
            cbit: None,
            param: ParamOperand::None,
            start: None,
        }
    }

    pub fn with_param(mut self, param: ParamOperand) -> Self {
        self.param = param;
        self
    }

    pub fn with_cbit(mut self, cbit: u32) -> Self {
        self.cbit = Some(cbit);
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BodyItem {
    Instr(Instr),
    /// Call of another kernel by name; removed by inlining.
    Call(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct QKernel {
    pub name: String,
    pub body: Vec<BodyItem>,
    pub inlined: bool,
    pub mapped: bool,
    pub scheduled: bool,
    /// Final program-to-physical placement, attached by qubit mapping.
    pub placement: Option<Vec<u32>>,
}

impl QKernel {
    pub fn new(name: impl Into<String>) -> Self {
        QKernel {
            name: name.into(),
            body: Vec::new(),
            inlined: false,
            mapped: false,
            scheduled: false,
            placement: None,
        }
    }

    pub fn instrs(&self) -> impl Iterator<Item = &Instr> {
        self.body.iter().filter_map(|item| match item {
            BodyItem::Instr(i) => Some(i),
            BodyItem::Call(_) => None,
        })
    }

    pub fn instr_count(&self) -> usize {
        self.instrs().count()
    }

    pub fn has_calls(&self) -> bool {
        self.body.iter().any(|b| matches!(b, BodyItem::Call(_)))
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct QModule {
    pub qbit_arrays: Vec<ArrayDecl>,
    pub cbit_arrays: Vec<ArrayDecl>,
    pub shared_arrays: Vec<ArrayDecl>,
    pub kernels: Vec<QKernel>,
    pub target: Option<TargetConfig>,
}

impl QModule {
    pub fn qubit_count(&self) -> u32 {
        self.qbit_arrays.iter().map(|a| a.len).sum()
    }

    pub fn cbit_count(&self) -> u32 {
        self.cbit_arrays.iter().map(|a| a.len).sum()
    }

    pub fn kernel(&self, name: &str) -> Option<&QKernel> {
        self.kernels.iter().find(|k| k.name == name)
    }

    /// Flat index of `array[index]` within the given declaration list.
    pub fn flatten(decls: &[ArrayDecl], array: &str, index: u32) -> Option<u32> {
        let mut base = 0u32;
        for d in decls {
            if d.name == array {
                return (index < d.len).then_some(base + index);
            }
            base += d.len;
        }
        None
    }

    /// Inverse of [`QModule::flatten`]: resolves a flat index back to
    /// `(array, index)`.
    pub fn unflatten(decls: &[ArrayDecl], flat: u32) -> Option<(&str, u32)> {
        let mut base = 0u32;
        for d in decls {
            if flat < base + d.len {
                return Some((&d.name, flat - base));
            }
            base += d.len;
        }
        None
    }

    pub fn shared_array_len(&self, array: &str) -> Option<u32> {
        self.shared_arrays
            .iter()
            .find(|d| d.name == array)
            .map(|d| d.len)
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ValidateError {
    #[error("{kernel}[{index}]: {gate} expects {expected} qubit operand(s), found {found}")]
    OperandCount {
        kernel: String,
        index: usize,
        gate: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{kernel}[{index}]: duplicate qubit operand")]
    DuplicateQubitOperand { kernel: String, index: usize },
    #[error("{kernel}[{index}]: qubit operand {qubit} out of range")]
    QubitOutOfRange {
        kernel: String,
        index: usize,
        qubit: u32,
    },
    #[error("{kernel}[{index}]: cbit operand {cbit} out of range")]
    CbitOutOfRange {
        kernel: String,
        index: usize,
        cbit: u32,
    },
    #[error("{kernel}[{index}]: MEASZ requires a cbit operand")]
    MissingCbit { kernel: String, index: usize },
    #[error("{kernel}[{index}]: {gate} must not carry a cbit operand")]
    UnexpectedCbit {
        kernel: String,
        index: usize,
        gate: &'static str,
    },
    #[error("{kernel}[{index}]: missing parameter for {gate}")]
    MissingParam {
        kernel: String,
        index: usize,
        gate: &'static str,
    },
    #[error("{kernel}[{index}]: {gate} must not carry a parameter")]
    UnexpectedParam {
        kernel: String,
        index: usize,
        gate: &'static str,
    },
    #[error("{kernel}[{index}]: unknown shared array {array:?}")]
    UnknownSharedArray {
        kernel: String,
        index: usize,
        array: String,
    },
    #[error("{kernel}[{index}]: symbol index {sym_index} out of range for {array:?}")]
    SymbolIndexOutOfRange {
        kernel: String,
        index: usize,
        array: String,
        sym_index: u32,
    },
    #[error("{kernel}[{index}]: call target {callee:?} not found")]
    UnknownCallTarget {
        kernel: String,
        index: usize,
        callee: String,
    },
    #[error("duplicate declaration name {0:?}")]
    DuplicateDecl(String),
}

/// Checks every structural invariant of the module and returns all findings;
/// an empty list means the module is valid.
pub fn validate(m: &QModule) -> Vec<ValidateError> {
    let mut errors = Vec::new();

    let mut seen = std::collections::BTreeSet::new();
    for d in m
        .qbit_arrays
        .iter()
        .chain(&m.cbit_arrays)
        .chain(&m.shared_arrays)
    {
        if !seen.insert(d.name.clone()) {
            errors.push(ValidateError::DuplicateDecl(d.name.clone()));
        }
    }

    let qubits = m.qubit_count();
    let cbits = m.cbit_count();
    for k in &m.kernels {
        for (index, item) in k.body.iter().enumerate() {
            let instr = match item {
                BodyItem::Instr(i) => i,
                BodyItem::Call(callee) => {
                    if m.kernel(callee).is_none() {
                        errors.push(ValidateError::UnknownCallTarget {
                            kernel: k.name.clone(),
                            index,
                            callee: callee.clone(),
                        });
                    }
                    continue;
                }
            };
            let gate = instr.gate;
            if instr.qubits.len() != gate.qubit_count() {
                errors.push(ValidateError::OperandCount {
                    kernel: k.name.clone(),
                    index,
                    gate: gate.name(),
                    expected: gate.qubit_count(),
                    found: instr.qubits.len(),
                });
            }
            let mut sorted = instr.qubits.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != instr.qubits.len() {
                errors.push(ValidateError::DuplicateQubitOperand {
                    kernel: k.name.clone(),
                    index,
                });
            }
            if !k.mapped {
                for &q in &instr.qubits {
                    if q >= qubits {
                        errors.push(ValidateError::QubitOutOfRange {
                            kernel: k.name.clone(),
                            index,
                            qubit: q,
                        });
                    }
                }
            }
            match (gate.has_cbit(), instr.cbit) {
                (true, None) => errors.push(ValidateError::MissingCbit {
                    kernel: k.name.clone(),
                    index,
                }),
                (false, Some(_)) => errors.push(ValidateError::UnexpectedCbit {
                    kernel: k.name.clone(),
                    index,
                    gate: gate.name(),
                }),
                (true, Some(c)) if c >= cbits => {
                    errors.push(ValidateError::CbitOutOfRange {
                        kernel: k.name.clone(),
                        index,
                        cbit: c,
                    });
                }
                _ => {}
            }
            match (&instr.param, gate.param_count()) {
                (ParamOperand::None, 1) => errors.push(ValidateError::MissingParam {
                    kernel: k.name.clone(),
                    index,
                    gate: gate.name(),
                }),
                (ParamOperand::Immediate(_) | ParamOperand::Symbol { .. }, 0) => {
                    errors.push(ValidateError::UnexpectedParam {
                        kernel: k.name.clone(),
                        index,
                        gate: gate.name(),
                    });
                }
                (ParamOperand::Symbol { array, index: si }, 1) => {
                    match m.shared_array_len(array) {
                        None => errors.push(ValidateError::UnknownSharedArray {
                            kernel: k.name.clone(),
                            index,
                            array: array.clone(),
                        }),
                        Some(len) if *si >= len => {
                            errors.push(ValidateError::SymbolIndexOutOfRange {
                                kernel: k.name.clone(),
                                index,
                                array: array.clone(),
                                sym_index: *si,
                            });
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
    }
    errors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module_with(instrs: Vec<Instr>) -> QModule {
        let mut k = QKernel::new("k");
        k.body = instrs.into_iter().map(BodyItem::Instr).collect();
        QModule {
            qbit_arrays: vec![ArrayDecl {
                name: "q".into(),
                len: 4,
            }],
            cbit_arrays: vec![ArrayDecl {
                name: "c".into(),
                len: 4,
            }],
            shared_arrays: vec![ArrayDecl {
                name: "P".into(),
                len: 4,
            }],
            kernels: vec![k],
            target: None,
        }
    }

    #[test]
    fn duplicate_qubit_operand_is_reported() {
        let m = module_with(vec![Instr::new(Gate::Cz, vec![0, 0])]);
        let errs = validate(&m);
        assert!(errs
            .iter()
            .any(|e| e.to_string().contains("duplicate qubit operand")));
    }

    #[test]
    fn missing_rotation_param_is_reported() {
        let m = module_with(vec![Instr::new(Gate::Rx, vec![0])]);
        let errs = validate(&m);
        assert!(errs
            .iter()
            .any(|e| e.to_string().contains("missing parameter")));
    }

    #[test]
    fn measz_needs_a_cbit_and_others_must_not_have_one() {
        let m = module_with(vec![
            Instr::new(Gate::MeasZ, vec![0]),
            Instr::new(Gate::X, vec![1]).with_cbit(0),
        ]);
        let errs = validate(&m);
        assert_eq!(errs.len(), 2);
    }

    #[test]
    fn out_of_range_operands_are_reported() {
        let m = module_with(vec![
            Instr::new(Gate::X, vec![9]),
            Instr::new(Gate::MeasZ, vec![1]).with_cbit(7),
            Instr::new(Gate::Rz, vec![2]).with_param(ParamOperand::Symbol {
                array: "P".into(),
                index: 4,
            }),
            Instr::new(Gate::Rz, vec![3]).with_param(ParamOperand::Symbol {
                array: "Q".into(),
                index: 0,
            }),
        ]);
        assert_eq!(validate(&m).len(), 4);
    }

    #[test]
    fn clean_module_validates() {
        let m = module_with(vec![
            Instr::new(Gate::H, vec![0]),
            Instr::new(Gate::Cnot, vec![0, 1]),
            Instr::new(Gate::Rx, vec![2]).with_param(ParamOperand::Symbol {
                array: "P".into(),
                index: 0,
            }),
            Instr::new(Gate::MeasZ, vec![0]).with_cbit(0),
        ]);
        assert!(validate(&m).is_empty());
    }

    #[test]
    fn flatten_and_unflatten_are_inverse() {
        let decls = vec![
            ArrayDecl {
                name: "a".into(),
                len: 3,
            },
            ArrayDecl {
                name: "b".into(),
                len: 2,
            },
        ];
        assert_eq!(QModule::flatten(&decls, "a", 1), Some(1));
        assert_eq!(QModule::flatten(&decls, "b", 0), Some(3));
        assert_eq!(QModule::flatten(&decls, "b", 2), None);
        assert_eq!(QModule::unflatten(&decls, 4), Some(("b", 1)));
        assert_eq!(QModule::unflatten(&decls, 5), None);
    }
}

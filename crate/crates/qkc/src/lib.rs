//! A self-contained hybrid quantum-classical toolchain.
//!
//! The crate compiles a small quantum-kernel language into an ELFQ binary of
//! quantum basic blocks, executes those blocks through a runtime that patches
//! dynamic parameters into the instruction stream at dispatch time, and ships
//! a complete variational workload (thermofield-double state generation for
//! the transverse-field Ising model) that exercises the whole stack.

pub mod codegen;
pub mod fmtnum;
pub mod frontend;
pub mod ir;
pub mod optim;
pub mod passes;
pub mod rt;
pub mod sim;
pub mod tfd;

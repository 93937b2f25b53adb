//! Named decomposition strategies selectable at runtime.

use crate::decompose::{
    decompose_parallel, decompose_parallel_counted, decompose_serial_quaternary,
    decompose_serial_quaternary_counted, decompose_slow, decompose_slow_counted, oracle_decompose,
    ORACLE_MAX_QUBITS,
};
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, PauliDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub threads: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { threads: 1 }
    }
}

/// A way of computing every Pauli coefficient of a matrix.
pub trait Decomposer: Send + Sync {
    /// Registry key, also used as the `path` column of benchmark output.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the strategy honours `DecomposeOptions::threads`.
    fn is_parallel(&self) -> bool {
        false
    }

    fn decompose(&self, g: &DenseMatrix, opts: &DecomposeOptions) -> Result<PauliDecomposition>;

    /// Same result as [`Decomposer::decompose`] plus the number of
    /// multiplications performed, if the strategy is instrumented.
    fn decompose_counted(
        &self,
        g: &DenseMatrix,
        opts: &DecomposeOptions,
    ) -> Result<(PauliDecomposition, Option<u64>)> {
        Ok((self.decompose(g, opts)?, None))
    }
}

pub struct GrayCodeFast;

impl Decomposer for GrayCodeFast {
    fn name(&self) -> &'static str {
        "fast"
    }

    fn description(&self) -> &'static str {
        "Gray-code walk with constant-time phase recurrence, parallel over strings"
    }

    fn is_parallel(&self) -> bool {
        true
    }

    fn decompose(&self, g: &DenseMatrix, opts: &DecomposeOptions) -> Result<PauliDecomposition> {
        decompose_parallel(g, opts.threads)
    }

    fn decompose_counted(
        &self,
        g: &DenseMatrix,
        opts: &DecomposeOptions,
    ) -> Result<(PauliDecomposition, Option<u64>)> {
        decompose_parallel_counted(g, opts.threads).map(|(d, c)| (d, Some(c)))
    }
}

pub struct FullPhaseSlow;

impl Decomposer for FullPhaseSlow {
    fn name(&self) -> &'static str {
        "slow"
    }

    fn description(&self) -> &'static str {
        "Gray-code walk recomputing every row phase from all operators"
    }

    fn is_parallel(&self) -> bool {
        true
    }

    fn decompose(&self, g: &DenseMatrix, opts: &DecomposeOptions) -> Result<PauliDecomposition> {
        decompose_slow(g, opts.threads)
    }

    fn decompose_counted(
        &self,
        g: &DenseMatrix,
        opts: &DecomposeOptions,
    ) -> Result<(PauliDecomposition, Option<u64>)> {
        decompose_slow_counted(g, opts.threads).map(|(d, c)| (d, Some(c)))
    }
}

pub struct SerialQuaternary;

impl Decomposer for SerialQuaternary {
    fn name(&self) -> &'static str {
        "serial-quaternary"
    }

    fn description(&self) -> &'static str {
        "single-threaded walk over strings in quaternary Gray-code order"
    }

    fn decompose(&self, g: &DenseMatrix, _opts: &DecomposeOptions) -> Result<PauliDecomposition> {
        decompose_serial_quaternary(g)
    }

    fn decompose_counted(
        &self,
        g: &DenseMatrix,
        _opts: &DecomposeOptions,
    ) -> Result<(PauliDecomposition, Option<u64>)> {
        decompose_serial_quaternary_counted(g).map(|(d, c)| (d, Some(c)))
    }
}

pub struct KroneckerOracle;

impl Decomposer for KroneckerOracle {
    fn name(&self) -> &'static str {
        "kron-oracle"
    }

    fn description(&self) -> &'static str {
        "materialised Kronecker products and full trace; small matrices only"
    }

    fn decompose(&self, g: &DenseMatrix, _opts: &DecomposeOptions) -> Result<PauliDecomposition> {
        if g.num_qubits() > ORACLE_MAX_QUBITS {
            return Err(Error::OracleTooLarge {
                num_qubits: g.num_qubits(),
                max: ORACLE_MAX_QUBITS,
            });
        }
        PauliDecomposition::new(g.num_qubits(), oracle_decompose(g)?)
    }
}

/// Strategies keyed by name, in registration order.
pub struct Registry {
    entries: Vec<Box<dyn Decomposer>>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, strategy: Box<dyn Decomposer>) {
        match self
            .entries
            .iter()
            .position(|s| s.name() == strategy.name())
        {
            Some(k) => self.entries[k] = strategy,
            None => self.entries.push(strategy),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn Decomposer> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_owned()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|s| s.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Decomposer> {
        self.entries.iter().map(|s| s.as_ref())
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(GrayCodeFast));
        r.register(Box::new(FullPhaseSlow));
        r.register(Box::new(SerialQuaternary));
        r.register(Box::new(KroneckerOracle));
        r
    }
}

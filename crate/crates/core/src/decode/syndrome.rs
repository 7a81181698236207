use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{CssCode, SparseBinaryMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Z,
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pauli::X => "X",
            Pauli::Z => "Z",
        })
    }
}

/// A Pauli error of one type on a set of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorChain {
    pub pauli: Pauli,
    qubits: Vec<u32>,
}

impl ErrorChain {
    /// Sorts and cancels repeated qubits in pairs.
    pub fn new(pauli: Pauli, qubits: impl IntoIterator<Item = u32>, n: usize) -> Result<Self> {
        let qubits = xor_sorted(qubits.into_iter().collect());
        if let Some(&q) = qubits.iter().find(|&&q| q as usize >= n) {
            return Err(Error::InvalidParameter(format!("qubit {q} out of range for n = {n}")));
        }
        Ok(ErrorChain { pauli, qubits })
    }

    pub(crate) fn from_sorted(pauli: Pauli, qubits: Vec<u32>) -> Self {
        debug_assert!(qubits.windows(2).all(|w| w[0] < w[1]));
        ErrorChain { pauli, qubits }
    }

    pub fn empty(pauli: Pauli) -> Self {
        ErrorChain { pauli, qubits: Vec::new() }
    }

    pub fn qubits(&self) -> &[u32] {
        &self.qubits
    }

    pub fn weight(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qubits.is_empty()
    }

    /// Symmetric difference.
    pub fn sum(&self, other: &ErrorChain) -> ErrorChain {
        assert_eq!(self.pauli, other.pauli);
        let mut all = self.qubits.clone();
        all.extend_from_slice(&other.qubits);
        ErrorChain { pauli: self.pauli, qubits: xor_sorted(all) }
    }
}

/// Checks violated by an error: edges-type checks for Z errors, the
/// higher-dimensional checks for X errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Syndrome {
    pub pauli: Pauli,
    pub checks: Vec<u32>,
}

impl Syndrome {
    pub fn weight(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// Sorts and keeps the values occurring an odd number of times.
pub fn xor_sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i + 1;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    out
}

fn product(columns: &SparseBinaryMatrix, qubits: &[u32]) -> Vec<u32> {
    xor_sorted(qubits.iter().flat_map(|&q| columns.row(q as usize).iter().copied()).collect())
}

/// Z errors are detected by `H_X`, X errors by `H_Z`.
pub fn syndrome_of(code: &CssCode, e: &ErrorChain) -> Syndrome {
    let columns = match e.pauli {
        Pauli::Z => code.hx_columns(),
        Pauli::X => code.hz_columns(),
    };
    Syndrome { pauli: e.pauli, checks: product(columns, e.qubits()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_toric_code;
    use proptest::prelude::*;

    #[test]
    fn empty_and_single() {
        let code = build_toric_code(3).unwrap();
        assert!(syndrome_of(&code, &ErrorChain::empty(Pauli::Z)).is_empty());
        let e = ErrorChain::new(Pauli::Z, [4], code.n).unwrap();
        assert_eq!(syndrome_of(&code, &e).weight(), 2);
        assert!(ErrorChain::new(Pauli::X, [18], code.n).is_err());
        assert_eq!(ErrorChain::new(Pauli::X, [3, 3, 1], code.n).unwrap().qubits(), &[1]);
    }

    proptest! {
        #[test]
        fn syndrome_is_linear(a in proptest::collection::vec(0u32..32, 0..8),
                              b in proptest::collection::vec(0u32..32, 0..8),
                              x in any::<bool>()) {
            let code = build_toric_code(4).unwrap();
            let pauli = if x { Pauli::X } else { Pauli::Z };
            let e1 = ErrorChain::new(pauli, a, code.n).unwrap();
            let e2 = ErrorChain::new(pauli, b, code.n).unwrap();
            let lhs = syndrome_of(&code, &e1.sum(&e2)).checks;
            let mut rhs = syndrome_of(&code, &e1).checks;
            rhs.extend(syndrome_of(&code, &e2).checks);
            prop_assert_eq!(lhs, xor_sorted(rhs));
        }
    }
}

//! Vassiliev moves as explicit linear maps of `V_E`.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ground::Subset;

use super::dual;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    First,
    Second,
}

/// A move attached to the ordered pair `(e, e')` of distinct elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VassilievMove {
    pub kind: MoveKind,
    pub e: usize,
    pub e_prime: usize,
}

impl VassilievMove {
    pub fn new(kind: MoveKind, e: usize, e_prime: usize) -> Result<Self> {
        if e == e_prime {
            return Err(Error::InvalidMove(e, e_prime));
        }
        Ok(VassilievMove { kind, e, e_prime })
    }

    pub fn first(e: usize, e_prime: usize) -> Result<Self> {
        Self::new(MoveKind::First, e, e_prime)
    }

    pub fn second(e: usize, e_prime: usize) -> Result<Self> {
        Self::new(MoveKind::Second, e, e_prime)
    }

    /// The `2n × 2n` matrix of the move, acting on column vectors.
    ///
    /// The first move sends `e^∨ ↦ e^∨ + e'` and `e'^∨ ↦ e'^∨ + e` and fixes
    /// every other basis vector. The second move is the first one conjugated
    /// by the twist at `e'`.
    pub fn matrix(&self, n: usize) -> Result<BitMatrix> {
        if self.e == self.e_prime || self.e >= n || self.e_prime >= n {
            return Err(Error::InvalidMove(self.e, self.e_prime));
        }
        let mut m = BitMatrix::identity(2 * n);
        // Column j holds the image of basis vector j.
        m.set(self.e_prime, dual(n, self.e), true);
        m.set(self.e, dual(n, self.e_prime), true);
        match self.kind {
            MoveKind::First => Ok(m),
            MoveKind::Second => {
                let t = twist_matrix(n, Subset::singleton(self.e_prime));
                t.mul(&m)?.mul(&t)
            }
        }
    }
}

/// The coordinate swap `e ↔ e^∨` for `e ∈ s`, as a `2n × 2n` matrix.
pub fn twist_matrix(n: usize, s: Subset) -> BitMatrix {
    let mut m = BitMatrix::zeros(2 * n, 2 * n);
    for c in 0..2 * n {
        let e = c % n;
        let target = match (s.contains(e), c < n) {
            (false, _) => c,
            (true, true) => dual(n, e),
            (true, false) => e,
        };
        m.set(target, c, true);
    }
    m
}

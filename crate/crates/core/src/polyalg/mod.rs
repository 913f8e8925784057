//! Polynomial algorithms: factorization over `GF(p)` and `Z`, irreducibility
//! over `Q`, resultants, discriminants, elimination and Chebyshev
//! polynomials.

pub mod chebyshev;
pub mod finite;
pub mod irreducible;
pub mod primality;
pub mod resultant;
pub mod zassenhaus;

use alloc::vec::Vec;

pub use chebyshev::{chebyshev, ChebyshevKind};
pub use finite::{cycle_type_mod_p, factor_fp, factor_mod_p, DEFAULT_SEED};
pub use irreducible::{
    check_irreducibility_witness, irreducible_over_q, irreducible_over_q_rat, prime_value_points,
    stackel_irreducible, IrreducibilityMethod, IrreducibilityVerdict, IrreducibilityWitness,
    StackelVerdict,
};
pub use primality::{is_prime_big, is_probable_prime};
pub use resultant::{discriminant, eliminate_resultant, resultant, Elimination};
pub use zassenhaus::{factor_over_z, DEGREE_LIMIT};

/// `unit * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorList<S, P> {
    pub unit: S,
    pub factors: Vec<(P, u32)>,
}

/// Factor degrees of a polynomial modulo a prime, sorted ascending and
/// counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    pub degrees: Vec<usize>,
    pub prime: u64,
    pub squarefree: bool,
}

impl CycleType {
    pub fn is_ncycle_pattern(&self, n: usize) -> bool {
        n >= 2 && self.degrees == [1, n - 1]
    }

    /// Exactly one entry equal to 2 and every other entry odd.
    pub fn is_transposition_pattern(&self) -> bool {
        let twos = self.degrees.iter().filter(|&&d| d == 2).count();
        twos == 1 && self.degrees.iter().all(|&d| d == 2 || d % 2 == 1)
    }

    /// Power that turns a transposition-pattern permutation into a
    /// transposition: the lcm of the odd cycle lengths.
    pub fn transposition_power(&self) -> u64 {
        self.degrees
            .iter()
            .filter(|&&d| d % 2 == 1)
            .fold(1u64, |acc, &d| {
                let d = d as u64;
                acc / num_integer::gcd(acc, d) * d
            })
    }
}

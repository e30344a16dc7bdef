use std::fmt;
use std::sync::Arc;

use crate::groebner::ideal_basis;
use crate::poly::Polynomial;
use crate::ring::{Ideal, MembershipOracle, Ring};
use crate::zt::{monic_localization_problem, MonicWitness, StandardBasis, ZPoly};

use super::LocError;

#[derive(Debug)]
enum Kind {
    PrimeComplement { prime: Ideal, oracle: MembershipOracle },
    Zariskification { l: Ideal, oracle: MembershipOracle },
    MonicUnivariateInt,
}

/// A multiplicatively closed subset `S` with decidable membership and a
/// solver for its localization problem.
///
/// The Gröbner data needed for membership tests is computed once, when the
/// set is built.
#[derive(Debug, Clone)]
pub struct MultiplicativeSet(Arc<Kind>);

/// An element of `S` inside an ideal `<f_1, ..., f_l>`, as `sum a_i f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocWitness {
    pub cofactors: Vec<Polynomial>,
    pub element: Polynomial,
}

/// Why an ideal meets `S` nowhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmptinessCertificate {
    /// Every generator lies in the prime: `f_i = sum_k c_ik p_k`.
    AllInPrime { memberships: Vec<Vec<Polynomial>> },
    /// `1` is not in `L + I`; the reduced Gröbner basis of `L + I` (with any
    /// quotient relations) in the base polynomial ring.
    NoUnitCombination { basis: Vec<Polynomial> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocProblem {
    Found(LocWitness),
    Empty(EmptinessCertificate),
}

impl LocProblem {
    pub fn witness(&self) -> Option<&LocWitness> {
        match self {
            LocProblem::Found(w) => Some(w),
            LocProblem::Empty(_) => None,
        }
    }
}

impl MultiplicativeSet {
    /// `S = R \ p`. The ideal `p` must be prime; this is not checked.
    pub fn prime_complement(prime: Ideal) -> Result<Self, LocError> {
        let oracle = prime.membership_oracle()?;
        Ok(MultiplicativeSet(Arc::new(Kind::PrimeComplement { prime, oracle })))
    }

    /// `S = 1 + L`.
    pub fn zariskification(l: Ideal) -> Result<Self, LocError> {
        let oracle = l.membership_oracle()?;
        Ok(MultiplicativeSet(Arc::new(Kind::Zariskification { l, oracle })))
    }

    /// Monic polynomials of `Z[t]`.
    pub fn monic_univariate_int() -> Self {
        MultiplicativeSet(Arc::new(Kind::MonicUnivariateInt))
    }

    pub fn ring(&self) -> Option<&Ring> {
        match &*self.0 {
            Kind::PrimeComplement { prime, .. } => Some(prime.ring()),
            Kind::Zariskification { l, .. } => Some(l.ring()),
            Kind::MonicUnivariateInt => None,
        }
    }

    pub(crate) fn require_ring(&self) -> Result<&Ring, LocError> {
        self.ring().ok_or(LocError::RingMismatch)
    }

    /// Generators of the prime, for a prime complement.
    pub fn prime(&self) -> Option<&Ideal> {
        match &*self.0 {
            Kind::PrimeComplement { prime, .. } => Some(prime),
            _ => None,
        }
    }

    pub fn contains(&self, s: &Polynomial) -> Result<bool, LocError> {
        let ring = self.require_ring()?;
        if **s.ring() != **ring.base() {
            return Err(LocError::RingMismatch);
        }
        match &*self.0 {
            Kind::PrimeComplement { oracle, .. } => Ok(!oracle.contains(s)?),
            Kind::Zariskification { oracle, .. } => Ok(oracle.contains(&(s - &ring.one()))?),
            Kind::MonicUnivariateInt => unreachable!(),
        }
    }

    pub fn contains_int_poly(&self, s: &ZPoly) -> Result<bool, LocError> {
        match &*self.0 {
            Kind::MonicUnivariateInt => Ok(s.is_monic()),
            _ => Err(LocError::RingMismatch),
        }
    }

    /// The localization problem for the ideal generated by `gens`.
    pub fn solve(&self, gens: &[Polynomial]) -> Result<LocProblem, LocError> {
        let ring = self.require_ring()?;
        if gens.iter().any(|g| **g.ring() != **ring.base()) {
            return Err(LocError::RingMismatch);
        }
        match &*self.0 {
            Kind::PrimeComplement { oracle, .. } => {
                let mut memberships = Vec::with_capacity(gens.len());
                for (i, f) in gens.iter().enumerate() {
                    match oracle.cofactors(f)? {
                        Some(c) => memberships.push(c),
                        None => {
                            let mut cofactors = vec![ring.zero(); gens.len()];
                            cofactors[i] = ring.one();
                            return Ok(LocProblem::Found(LocWitness {
                                cofactors,
                                element: ring.reduce(f),
                            }));
                        }
                    }
                }
                Ok(LocProblem::Empty(EmptinessCertificate::AllInPrime { memberships }))
            }
            Kind::Zariskification { l, .. } => {
                let h = l.gens();
                let mut all = h.to_vec();
                all.extend(gens.iter().cloned());
                let combined = Ideal::new(ring, all)?;
                match ring.membership(&ring.one(), &combined)? {
                    Some(c) => {
                        let cofactors = c[h.len()..].to_vec();
                        let element = ring.reduce(
                            &cofactors
                                .iter()
                                .zip(gens)
                                .fold(ring.zero(), |acc, (a, f)| &acc + &(a * f)),
                        );
                        Ok(LocProblem::Found(LocWitness { cofactors, element }))
                    }
                    None => {
                        let mut all = combined.gens().to_vec();
                        all.extend(ring.ideal_gens().iter().cloned());
                        Ok(LocProblem::Empty(EmptinessCertificate::NoUnitCombination {
                            basis: ideal_basis(ring.base(), &all),
                        }))
                    }
                }
            }
            Kind::MonicUnivariateInt => unreachable!(),
        }
    }

    /// The localization problem in `Z[t]` at the monic polynomials.
    pub fn solve_int_poly(&self, gens: &[ZPoly]) -> Result<Result<MonicWitness, StandardBasis>, LocError> {
        match &*self.0 {
            Kind::MonicUnivariateInt => Ok(monic_localization_problem(gens)),
            _ => Err(LocError::RingMismatch),
        }
    }
}

impl fmt::Display for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::PrimeComplement { prime, .. } => write!(f, "{} \\ {}", prime.ring(), prime),
            Kind::Zariskification { l, .. } => write!(f, "1 + {}", l),
            Kind::MonicUnivariateInt => write!(f, "monic polynomials of ZZ[t]"),
        }
    }
}

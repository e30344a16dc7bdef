use std::fmt;

use super::ArithError;

/// The field with `p` elements. Construction checks that `p` is prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(ArithError::CompositeModulus(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, residue: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            residue: residue % self.p,
            p: self.p,
        }
    }

    pub fn from_i128(&self, v: i128) -> PrimeFieldElement {
        let r = v.rem_euclid(self.p as i128) as u64;
        PrimeFieldElement { residue: r, p: self.p }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue `0 <= residue < p`, carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    p: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "prime field elements with different moduli");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.residue as u128 + other.residue as u128) % self.p as u128;
        PrimeFieldElement { residue: s as u64, p: self.p }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let r = if self.residue == 0 { 0 } else { self.p - self.residue };
        PrimeFieldElement { residue: r, p: self.p }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.residue as u128 * other.residue as u128) % self.p as u128;
        PrimeFieldElement { residue: s as u64, p: self.p }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.residue == 0 {
            return Err(ArithError::DivisionByZero);
        }
        // a^(p-2) by square and multiply
        let mut base = *self;
        let mut acc = PrimeFieldElement { residue: 1 % self.p, p: self.p };
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ArithError, Integer, PrimeField, PrimeFieldElement, Rational};

/// A coefficient field chosen at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(PrimeField),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        Ok(Field::Prime(PrimeField::new(p)?))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::zero()),
            Field::Prime(f) => Coeff::Fp(f.element(0)),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::one()),
            Field::Prime(f) => Coeff::Fp(f.element(1)),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_integer(&Integer::from(v))
    }

    pub fn from_integer(&self, v: &Integer) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(Rational::from_integer(v.clone())),
            Field::Prime(f) => {
                let p = Integer::from(f.modulus());
                let mut r = v % &p;
                if r.is_negative() {
                    r += &p;
                }
                Coeff::Fp(f.element(r.to_u64().expect("residue fits in u64")))
            }
        }
    }

    /// The image of `num/den`, or an error when `den` vanishes in this field.
    pub fn from_fraction(&self, num: &Integer, den: &Integer) -> Result<Coeff, ArithError> {
        let d = self.from_integer(den);
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        self.from_integer(num).checked_div(&d)
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Field::Rationals, Coeff::Q(_)) => true,
            (Field::Prime(f), Coeff::Fp(e)) => f.modulus() == e.modulus(),
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({})", p.modulus()),
        }
    }
}

/// An element of a [`Field`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Rational),
    Fp(PrimeFieldElement),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp(e) => e.residue() == 1,
        }
    }

    pub fn same_field(&self, other: &Coeff) -> bool {
        match (self, other) {
            (Coeff::Q(_), Coeff::Q(_)) => true,
            (Coeff::Fp(a), Coeff::Fp(b)) => a.modulus() == b.modulus(),
            _ => false,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rationals,
            Coeff::Fp(e) => Field::Prime(PrimeField::new(e.modulus()).expect("modulus was checked")),
        }
    }

    pub fn inv(&self) -> Result<Coeff, ArithError> {
        match self {
            Coeff::Q(r) if r.is_zero() => Err(ArithError::DivisionByZero),
            Coeff::Q(r) => Ok(Coeff::Q(r.recip())),
            Coeff::Fp(e) => e.inv().map(Coeff::Fp),
        }
    }

    pub fn checked_div(&self, other: &Coeff) -> Result<Coeff, ArithError> {
        Ok(self * &other.inv()?)
    }

    /// Whether the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_negative(),
            Coeff::Fp(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Q(r) => Some(r),
            Coeff::Fp(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => write!(f, "{}", r),
            Coeff::Fp(e) => write!(f, "{}", e),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $qop:tt, $fop:ident) => {
        impl $tr<&Coeff> for &Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff {
                match (self, rhs) {
                    (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a $qop b),
                    (Coeff::Fp(a), Coeff::Fp(b)) => Coeff::Fp(a.$fop(b)),
                    _ => panic!("coefficients from different fields"),
                }
            }
        }
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, +, add);
binop!(Sub, sub, -, sub);
binop!(Mul, mul, *, mul);

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp(a) => Coeff::Fp(a.neg()),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

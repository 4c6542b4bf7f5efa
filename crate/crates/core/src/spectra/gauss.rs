use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exact Gaussian integer `re + im·i`.
///
/// Arithmetic is checked: an overflow of the `i128` components panics rather
/// than wrapping. Entries of Hermitian adjacency matrices and of their powers
/// stay far below that range for the graph sizes handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: i128,
    pub im: i128,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i128, im: i128) -> Self {
        GaussInt { re, im }
    }

    /// `i^k`.
    pub fn unit(k: u8) -> Self {
        match k % 4 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_unit(self) -> bool {
        self.re.abs() + self.im.abs() == 1 && (self.re == 0 || self.im == 0)
    }

    pub fn is_real(self) -> bool {
        self.im == 0
    }

    /// Multiplication by `i^k`, which only permutes and negates components.
    pub fn times_unit(self, k: u8) -> Self {
        match k % 4 {
            0 => self,
            1 => GaussInt::new(-self.im, self.re),
            2 => GaussInt::new(-self.re, -self.im),
            _ => GaussInt::new(self.im, -self.re),
        }
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(GaussInt::new(
            self.re.checked_add(rhs.re)?,
            self.im.checked_add(rhs.im)?,
        ))
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let re = self
            .re
            .checked_mul(rhs.re)?
            .checked_sub(self.im.checked_mul(rhs.im)?)?;
        let im = self
            .re
            .checked_mul(rhs.im)?
            .checked_add(self.im.checked_mul(rhs.re)?)?;
        Some(GaussInt::new(re, im))
    }
}

impl From<i128> for GaussInt {
    fn from(re: i128) -> Self {
        GaussInt::new(re, 0)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Gaussian integer overflow")
    }
}

impl AddAssign for GaussInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl SubAssign for GaussInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> Self {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Gaussian integer overflow")
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: i128| match im {
            1 => write!(f, "i"),
            -1 => write!(f, "-i"),
            _ => write!(f, "{im}i"),
        };
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => imag(f, im),
            (re, im) if im < 0 => {
                write!(f, "{re}-")?;
                imag(f, -im)
            }
            (re, im) => {
                write!(f, "{re}+")?;
                imag(f, im)
            }
        }
    }
}

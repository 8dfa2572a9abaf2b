use std::ops::{Add, Mul, Sub};

/// Floating-point image of a cyclotomic number. Only used for printing and
/// sanity diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
}

impl ComplexApprox {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexApprox { re, im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).abs()
    }
}

impl Add for ComplexApprox {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ComplexApprox::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexApprox {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ComplexApprox::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ComplexApprox {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ComplexApprox::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl std::fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im < 0.0 {
            write!(f, "{:.6}-{:.6}i", self.re, -self.im)
        } else {
            write!(f, "{:.6}+{:.6}i", self.re, self.im)
        }
    }
}

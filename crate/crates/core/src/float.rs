//! `f64` functions that need `libm` without `std`.

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn sq(x: f64) -> f64 {
    x * x
}

pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

pub fn acos(x: f64) -> f64 {
    libm::acos(x)
}

pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

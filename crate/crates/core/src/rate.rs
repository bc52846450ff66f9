//! Exact rational values and their fixed-point rendering.

use num_integer::Integer;
use num_rational::Ratio;

/// Exact, always-reduced rational used for every rate and bound.
pub type Rate = Ratio<i64>;

pub fn rate(num: usize, den: usize) -> Rate {
    Rate::new(num as i64, den as i64)
}

/// Renders `value` with `places` decimals, rounding half to even.
pub fn to_decimal(value: &Rate, places: u32) -> String {
    let scale = 10i128.pow(places);
    let num = *value.numer() as i128;
    let den = *value.denom() as i128;
    let negative = num < 0;
    let (q, r) = (num.abs() * scale).div_rem(&den);
    let twice = 2 * r;
    let scaled = if twice > den || (twice == den && q % 2 == 1) { q + 1 } else { q };
    let int_part = scaled / scale;
    let frac_part = scaled % scale;
    let sign = if negative && scaled != 0 { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0width$}", width = places as usize)
    }
}

/// `p/q` for fractions, bare integer when the denominator is one.
pub fn to_fraction(value: &Rate) -> String {
    if *value.denom() == 1 {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

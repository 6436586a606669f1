//! Fixed 12-significant-digit rendering shared by every command.

/// Renders `x` with exactly 12 significant digits, keeping trailing zeros.
///
/// Plain decimal notation is used for decimal exponents in `-5..12`,
/// scientific notation otherwise (the `%#.12g` convention).
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.00000000000".into();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.4), "0.400000000000");
        assert_eq!(sig12(1.0), "1.00000000000");
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12((1.0 - 0.5f64.sqrt()).sqrt()), "0.541196100146");
        assert_eq!(sig12((1.0f64 / 3.0).powf(1.5)), "0.192450089730");
        assert_eq!(sig12(1.0 / (2.0 * std::f64::consts::PI)), "0.159154943092");
        assert_eq!(sig12(std::f64::consts::LN_2), "0.693147180560");
        assert_eq!(sig12(-0.25), "-0.250000000000");
        assert_eq!(sig12(0.0), "0.00000000000");
    }

    #[test]
    fn switches_to_scientific_outside_the_plain_range() {
        assert_eq!(sig12(1.5e-7), "1.50000000000e-07");
        assert_eq!(sig12(2.0e15), "2.00000000000e+15");
        assert_eq!(sig12(1e-5), "0.0000100000000000");
        // rounding can bump the exponent
        assert_eq!(sig12(999999999999.7), "1.00000000000e+12");
        assert_eq!(sig12(f64::NAN), "nan");
        assert_eq!(sig12(f64::NEG_INFINITY), "-inf");
    }
}

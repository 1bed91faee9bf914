/// Shortest round-trip decimal rendering of a finite real.
///
/// Plain positional notation is used for moderate magnitudes and exponent
/// notation outside `[1e-5, 1e16)`, so neither tiny nor huge values expand
/// into long runs of zeros. Both forms parse back to the identical `f64`.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{}", x)
    } else {
        format!("{:e}", x)
    }
}

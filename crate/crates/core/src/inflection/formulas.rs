/// Predicted delta-invariant of the singularity at the origin of
/// `P(1,k) = 0`: `floor(k^2 / 2) + k`.
pub fn predicted_delta(k: u32) -> i64 {
    let k = k as i64;
    k * k / 2 + k
}

/// Predicted geometric genus of the projective closure of `P(1,k) = 0`:
/// `C(2k+1, 2) - 3 floor(k^2 / 2) - 3k`. Negative for small `k`; returned
/// as is.
pub fn predicted_genus(k: u32) -> i64 {
    let k = k as i64;
    (2 * k + 1) * (2 * k) / 2 - 3 * (k * k / 2) - 3 * k
}

//! Counting identities for residues `(aj)_q`, each paired with the
//! brute-force set count it closes.
//!
//! These back the apex construction but are not used on the query path;
//! the test suites and `verify --mode lemmas` compare both sides.

/// `#{a in [0, M-1] : lo <= (aj)_q < hi}` by enumeration.
pub fn count_residues_in(big_m: u64, j: u64, q: u64, lo: u64, hi: u64) -> u64 {
    (0..big_m)
        .map(|a| a * j % q)
        .filter(|&r| lo <= r && r < hi)
        .count() as u64
}

fn chi(b: bool) -> u64 {
    b as u64
}

/// For `M, j in [1,q]` and `y in [j,q]`:
/// `#{a in [0,M-1] : y-j <= (aj)_q < y} = floor(Mj/q) + chi(y <= (Mj)_q)`.
pub fn window_below_closed(big_m: u64, j: u64, q: u64, y: u64) -> u64 {
    big_m * j / q + chi(y <= big_m * j % q)
}

pub fn window_below_count(big_m: u64, j: u64, q: u64, y: u64) -> u64 {
    count_residues_in(big_m, j, q, y - j, y)
}

/// For `M, j in [1,q]` and `y in [1,j]`:
/// `#{a in [0,M-1] : y <= (aj)_q < y+q-j} = M - floor(Mj/q) - chi(y <= (Mj)_q)`.
pub fn window_above_closed(big_m: u64, j: u64, q: u64, y: u64) -> u64 {
    big_m - big_m * j / q - chi(y <= big_m * j % q)
}

pub fn window_above_count(big_m: u64, j: u64, q: u64, y: u64) -> u64 {
    count_residues_in(big_m, j, q, y, y + q - j)
}

/// For `M, j in [1,q]`: `#{a in [0,M-1] : (aj)_q < q-j} = M - floor(Mj/q)`.
pub fn window_origin_closed(big_m: u64, j: u64, q: u64) -> u64 {
    big_m - big_m * j / q
}

pub fn window_origin_count(big_m: u64, j: u64, q: u64) -> u64 {
    count_residues_in(big_m, j, q, 0, q - j)
}

/// Checks all three identities for one `(M, j, q, y)`; `y` is used by each
/// identity only when it lies in that identity's range. Returns the name of
/// the first identity that fails.
pub fn check_tuple(big_m: u64, j: u64, q: u64, y: u64) -> Result<(), &'static str> {
    if !(1..=q).contains(&big_m) || !(1..=q).contains(&j) {
        return Ok(());
    }
    if (j..=q).contains(&y)
        && window_below_closed(big_m, j, q, y) != window_below_count(big_m, j, q, y)
    {
        return Err("window-below");
    }
    if (1..=j).contains(&y)
        && window_above_closed(big_m, j, q, y) != window_above_count(big_m, j, q, y)
    {
        return Err("window-above");
    }
    if window_origin_closed(big_m, j, q) != window_origin_count(big_m, j, q) {
        return Err("window-origin");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_small_q() {
        for q in 1..=14u64 {
            for m in 1..=q {
                for j in 1..=q {
                    for y in 1..=q {
                        assert_eq!(check_tuple(m, j, q, y), Ok(()), "M={m} j={j} q={q} y={y}");
                    }
                }
            }
        }
    }

    #[test]
    fn single_values() {
        // q=5, j=2: residues for a=0..3 are 0,2,4,1
        assert_eq!(count_residues_in(4, 2, 5, 1, 3), 2);
        assert_eq!(window_below_closed(4, 2, 5, 3), 1 + 1);
        assert_eq!(window_origin_count(4, 2, 5), 3);
    }
}

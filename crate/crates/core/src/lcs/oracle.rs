use crate::error::{Error, Result};

/// Largest shorter-input length the exhaustive search accepts.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// True iff `s` can be obtained from `x` by deleting symbols.
pub fn is_subsequence(s: &[u8], x: &[u8]) -> bool {
    let mut want = s.iter().peekable();
    for b in x {
        match want.peek() {
            Some(&&w) if w == *b => {
                want.next();
            }
            Some(_) => {}
            None => break,
        }
    }
    want.peek().is_none()
}

/// LCS length by enumerating every subsequence of the shorter input.
///
/// Runs in `O(2^k * n)` for a shorter input of length `k`; it exists to
/// check the table fill, not to be used on real data.
pub fn brute_force_lcs(x: &[u8], y: &[u8]) -> Result<u32> {
    let (short, long) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    if short.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleGuard {
            len: short.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut best = 0u32;
    let mut candidate = Vec::with_capacity(short.len());
    for mask in 0u32..(1u32 << short.len()) {
        let ones = mask.count_ones();
        if ones <= best {
            continue;
        }
        candidate.clear();
        candidate.extend(
            short
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &b)| b),
        );
        if is_subsequence(&candidate, long) {
            best = ones;
        }
    }
    Ok(best)
}

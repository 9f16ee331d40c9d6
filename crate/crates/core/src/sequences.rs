//! Higman's sequence order over an arbitrary base comparability relation:
//! `r` embeds into `s` when an increasing injection maps every element of
//! `r` onto a dominating element of `s`.

/// Greedy left-to-right embedding test: each `r[i]` is matched to the
/// earliest unused later position of `s` that dominates it. Greedy is
/// exact here — if any increasing embedding exists, matching as early as
/// possible never hurts — and the test suite discharges that claim
/// against a brute-force enumeration of all increasing maps.
pub fn sequence_embeds<T, F>(r: &[T], s: &[T], mut leq: F) -> bool
where
    F: FnMut(&T, &T) -> bool,
{
    let mut j = 0usize;
    for item in r {
        loop {
            if j >= s.len() {
                return false;
            }
            j += 1;
            if leq(item, &s[j - 1]) {
                break;
            }
        }
    }
    true
}

//! Small text utilities shared across the pipeline: whitespace
//! normalization for exact-match comparison, conjunct-list handling for
//! noise operations, and stable hashing for seeded determinism.

/// Collapse runs of whitespace to single spaces and trim the ends.
///
/// Output sequences are opaque strings compared by exact equality after this
/// normalization; case is deliberately left untouched.
pub fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Whether two sequences are equal after whitespace normalization.
pub fn sequences_match(a: &str, b: &str) -> bool {
    normalize_ws(a) == normalize_ws(b)
}

/// Separator joining the conjuncts of a logical form.
pub const CONJUNCT_SEPARATOR: &str = " AND ";

/// Split a form into its top-level conjuncts.
///
/// The separator never occurs inside a conjunct (predicates and arguments
/// contain no spaces), so a plain split is sufficient. An empty or
/// whitespace-only form has zero conjuncts.
pub fn split_conjuncts(form: &str) -> Vec<String> {
    let form = normalize_ws(form);
    if form.is_empty() {
        return Vec::new();
    }
    form.split(CONJUNCT_SEPARATOR).map(str::to_string).collect()
}

/// Join conjuncts back into a form. Zero conjuncts render as the empty string.
pub fn join_conjuncts(conjuncts: &[String]) -> String {
    conjuncts.join(CONJUNCT_SEPARATOR)
}

/// Whether parentheses in `s` are balanced and properly nested.
pub fn is_balanced(s: &str) -> bool {
    let mut depth: i64 = 0;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// FNV-1a over bytes. Stable across platforms and runs.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    h
}

/// SplitMix64 finalizer; mixes a 64-bit value into a well-distributed one.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Deterministic uniform draw in [0, 1) from a hashed key.
pub fn unit_from_hash(h: u64) -> f64 {
    (splitmix64(h) >> 11) as f64 / (1u64 << 53) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_collapses_and_trims() {
        assert_eq!(normalize_ws("  a \t b\n c "), "a b c");
        assert_eq!(normalize_ws(""), "");
        assert_eq!(normalize_ws("   "), "");
    }

    #[test]
    fn conjunct_round_trip() {
        let form = "see(x1,x2) AND cat(x1) AND dog(x2)";
        let parts = split_conjuncts(form);
        assert_eq!(parts.len(), 3);
        assert_eq!(join_conjuncts(&parts), form);
        assert!(split_conjuncts("").is_empty());
        assert_eq!(join_conjuncts(&[]), "");
    }

    #[test]
    fn balance_checks() {
        assert!(is_balanced("cat(x1,in=house(on=hill))"));
        assert!(!is_balanced("cat(x1"));
        assert!(!is_balanced(")("));
    }

    #[test]
    fn hashing_is_stable() {
        assert_eq!(fnv1a(b"abc"), fnv1a(b"abc"));
        assert_ne!(fnv1a(b"abc"), fnv1a(b"abd"));
        let u = unit_from_hash(42);
        assert_eq!(u, unit_from_hash(42));
        assert!((0.0..1.0).contains(&u));
    }
}

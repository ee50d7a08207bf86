//! Ramsey-number upper bounds via the Erdos-Szekeres recurrence
//! R(a,b) <= R(a-1,b) + R(a,b-1), minus one when both summands are even.
//! The theorems downstream only ever need an upper bound.

pub fn ramsey_upper(a: u32, b: u32) -> u32 {
    assert!(a >= 1 && b >= 1, "Ramsey arguments must be positive");
    if a == 1 || b == 1 {
        return 1;
    }
    if a == 2 {
        return b;
    }
    if b == 2 {
        return a;
    }
    let r1 = ramsey_upper(a - 1, b);
    let r2 = ramsey_upper(a, b - 1);
    let sum = r1 + r2;
    if r1.is_multiple_of(2) && r2.is_multiple_of(2) {
        sum - 1
    } else {
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(ramsey_upper(1, 7), 1);
        assert_eq!(ramsey_upper(7, 1), 1);
        assert_eq!(ramsey_upper(2, 9), 9);
        assert_eq!(ramsey_upper(9, 2), 9);
    }

    #[test]
    fn small_values() {
        assert_eq!(ramsey_upper(3, 3), 6); // exact
        assert_eq!(ramsey_upper(3, 4), 9); // 4 + 6, both even, minus one; exact
        assert_eq!(ramsey_upper(3, 5), 14); // 5 + 9; exact
        assert_eq!(ramsey_upper(4, 4), 18); // 9 + 9; exact
        assert!(ramsey_upper(3, 6) >= 18);
    }

    #[test]
    fn symmetry_and_monotonicity() {
        for a in 1..=6 {
            for b in 1..=6 {
                assert_eq!(ramsey_upper(a, b), ramsey_upper(b, a));
                if a >= 2 {
                    assert!(ramsey_upper(a, b) >= ramsey_upper(a - 1, b));
                }
            }
        }
    }
}

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::reptheory::Partition;

/// Number of standard Young tableaux of shape `λ`, counted by brute force and
/// checked against the hook-length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let brute = syt_count_brute_force(lambda);
    let hooks = hook_length_count(lambda);
    assert_eq!(
        brute, hooks,
        "tableau count disagrees with hook lengths for {lambda}"
    );
    brute
}

/// Counts standard tableaux by placing `1..n` one at a time into any row
/// whose end is an addable corner (lattice words).
pub fn syt_count_brute_force(lambda: &Partition) -> u64 {
    fn go(shape: &[u32], filled: &mut Vec<u32>) -> u64 {
        if filled.iter().zip(shape).all(|(f, s)| f == s) {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let addable = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if addable {
                filled[r] += 1;
                total += go(shape, filled);
                filled[r] -= 1;
            }
        }
        total
    }
    go(lambda.parts(), &mut vec![0; lambda.num_parts()])
}

/// `n! / Π hooks`.
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let num: BigUint = (1..=n)
        .map(BigUint::from)
        .fold(BigUint::one(), |a, b| a * b);
    let den: BigUint = lambda
        .hook_lengths()
        .into_iter()
        .map(BigUint::from)
        .fold(BigUint::one(), |a, b| a * b);
    (num / den).to_u64().expect("tableau count fits in u64")
}

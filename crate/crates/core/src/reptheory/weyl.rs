/// Dimension of the irreducible `Γ_{a,b}` of `Sp(4)`, highest weight
/// `a·ω_1 + b·ω_2`: `(a+1)(b+1)(a+b+2)(a+2b+3)/6`.
pub fn weyl_dim_c2(a: u64, b: u64) -> u64 {
    (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
}

use crate::gf2::{Monomial, Polynomial};

/// `f_n(X) = ∏_{λ ∈ span(x_0..x_{n-1})} (X + λ)` with `X` the variable at
/// index `n`.
fn orbit_product(n: usize) -> Polynomial {
    let x = Polynomial::var(n);
    (0u32..1 << n)
        .map(|mask| {
            let lambda: Polynomial = (0..n).filter(|&i| mask >> i & 1 == 1).map(Polynomial::var).sum();
            &x + &lambda
        })
        .product()
}

/// Dickson invariants of `GL_n(2)` on the first `n` variables, ordered by
/// degree: `d_{2^n - 2^{n-1}}, …, d_{2^n - 1}`.
///
/// They are the coefficients of `X^{2^i}` in `f_n(X)`, which is a
/// 2-polynomial in `X`.
pub fn dickson(n: usize) -> Vec<Polynomial> {
    assert!((1..=4).contains(&n), "dickson: n must be between 1 and 4");
    let f = orbit_product(n);
    (0..n)
        .rev()
        .map(|i| {
            let xpow = 1u32 << i;
            let terms: Vec<Monomial> = f
                .terms()
                .iter()
                .filter(|m| m.exponent(n) == xpow)
                .map(|m| {
                    let mut e = m.exponents(n + 1);
                    e[n] = 0;
                    Monomial::from_exponents(&e)
                })
                .collect();
            Polynomial::from_terms(terms)
        })
        .collect()
}

/// Checks `d_top(n) = f_{n-1}(x_{n-1}) + d_top(n-1)^2`, where `d_top(n)`
/// is the lowest-degree Dickson invariant in `n` variables (degree
/// `2^{n-1}`) and `d_top(0) = 0`. For `n = 4` this is
/// `d_8 = w^8 + w^4 d_4 + w^2 d_6 + w d_7 + d_4^2`, for `n = 3` it is
/// `d_4 = z^4 + z^2 d_2 + z d_3 + d_2^2`.
pub fn relative_dickson_top(n: usize) -> Result<(), Polynomial> {
    let lhs = dickson(n).into_iter().next().unwrap();
    let lower = if n >= 2 { dickson(n - 1)[0].square() } else { Polynomial::zero() };
    // orbit_product(n - 1) puts X at index n - 1, i.e. evaluates at x_{n-1}
    let rhs = &orbit_product(n - 1) + &lower;
    let diff = &lhs + &rhs;
    if diff.is_zero() {
        Ok(())
    } else {
        Err(diff)
    }
}

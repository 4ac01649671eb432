//! Generalized inverse of a Young function.
//!
//! ```text
//! Phi^{-1}(u) = inf { t >= 0 : Phi(t) > u }
//! ```
//!
//! This right-continuous inverse is the one under which the two-sided
//! estimates hold for every Young function, including degenerate zones
//! (a > 0) and jumps to infinity (b < ∞):
//!
//! ```text
//! Phi(Phi^{-1}(u)) <= u                  for all u,
//! r <= Phi^{-1}(r) * Phit^{-1}(r) <= 2r  with Phit the conjugate.
//! ```
//!
//! The bisection below keeps the invariant Phi(lo) <= u < Phi(hi) and returns
//! the LOWER endpoint, so the first inequality holds exactly even when Phi
//! jumps across u (for a capped function the inf lands on the jump point).

use super::YoungFunction;
use crate::extreal::ExtReal;
use crate::tol;

/// Computes Phi^{-1}(u) = inf { t : Phi(t) > u }.
///
/// `gen_inverse(phi, 0)` recovers the degeneracy threshold a(Phi), and
/// u = ∞ maps to ∞ (nothing exceeds it).
pub fn gen_inverse(phi: &YoungFunction, u: ExtReal) -> ExtReal {
    if u.is_infinite() {
        return ExtReal::INFINITY;
    }
    // Bracket: Phi(lo) <= u < Phi(hi).
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while phi.eval(hi) <= u {
        lo = hi;
        hi *= 2.0;
        if hi > 1e307 {
            return ExtReal::INFINITY;
        }
    }
    for _ in 0..400 {
        if hi - lo <= tol::INVERSE_REL * lo + 1e-300 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if phi.eval(mid) <= u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ExtReal::saturating(lo)
}

/// Convenience wrapper for a finite level.
pub fn gen_inverse_f(phi: &YoungFunction, u: f64) -> ExtReal {
    gen_inverse(phi, ExtReal::saturating(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::catalog;

    fn inv(phi: &YoungFunction, u: f64) -> f64 {
        gen_inverse_f(phi, u).get()
    }

    #[test]
    fn closed_forms() {
        let sq = YoungFunction::Power { p: 2.0 };
        assert!((inv(&sq, 9.0) - 3.0).abs() <= 3e-11);

        let dz = YoungFunction::Deadzone;
        // (t - 1)+ > u first happens at t = u + 1.
        assert!((inv(&dz, 2.0) - 3.0).abs() <= 3e-11);
        assert!((inv(&dz, 0.0) - 1.0).abs() <= 1e-11);

        let ex = YoungFunction::ExpMinusOne;
        assert!((inv(&ex, 1.0) - 2f64.ln()).abs() <= 1e-11);

        let cap = YoungFunction::Capped { b: 1.0 };
        assert!((inv(&cap, 0.5) - 0.5).abs() <= 1e-11);
        // Past the jump the inf sticks at b.
        assert!((inv(&cap, 2.0) - 1.0).abs() <= 1e-11);
        assert!((inv(&cap, 1e9) - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn recovers_degeneracy_threshold_at_zero() {
        for phi in catalog() {
            let got = inv(&phi, 0.0);
            let want = phi.a();
            assert!(
                (got - want).abs() <= 1e-9 * (1.0 + want),
                "{}: a = {want}, inverse at 0 = {got}",
                phi.label()
            );
        }
    }

    #[test]
    fn lower_sandwich_holds_exactly() {
        for phi in catalog().iter().chain([&YoungFunction::Capped { b: 1.0 }]) {
            for &u in &[0.0, 1e-6, 0.3, 1.0, 7.5, 1e4] {
                let t = gen_inverse_f(phi, u);
                assert!(t.is_finite());
                let back = phi.eval(t.get());
                assert!(
                    back <= ExtReal::saturating(u),
                    "{}: Phi(Phi^-1({u})) = {back} exceeds {u}",
                    phi.label()
                );
                // Just past the inverse the function must clear u.
                let past = phi.eval(t.get() * (1.0 + 1e-9) + 1e-300);
                assert!(
                    past >= ExtReal::saturating(u * (1.0 - 1e-8)),
                    "{}: Phi just past the inverse is {past}, below {u}",
                    phi.label()
                );
            }
        }
    }

    #[test]
    fn infinite_level_maps_to_infinity() {
        let sq = YoungFunction::Power { p: 2.0 };
        assert!(gen_inverse(&sq, ExtReal::INFINITY).is_infinite());
    }

    #[test]
    fn inverse_product_identity_for_square() {
        // For Phi = t^2 the conjugate is r^2/4, so the product of inverses is
        // sqrt(r) * 2 sqrt(r) = 2r: the upper end of the two-sided bound.
        let sq = YoungFunction::Power { p: 2.0 };
        let conj = sq.clone().conjugate();
        for &r in &[0.1, 1.0, 42.0] {
            let prod = inv(&sq, r) * inv(&conj, r);
            assert!(prod >= r * (1.0 - 1e-8), "lower bound fails at {r}: {prod}");
            assert!(prod <= 2.0 * r * (1.0 + 1e-8), "upper bound fails at {r}: {prod}");
        }
    }
}

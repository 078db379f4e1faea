//! The small-exposure approximation `A ~ 2 T1/T2 - 1` against the exact
//! twirled ratio.
//!
//! The approximation drops terms of order `t/T2`, not `t/T1`, so it is only
//! accurate when the exposure is short on the dephasing scale. The strict
//! test asks for 5% whenever `t/T1 <= 0.01` and fails once `T1/T2` is large;
//! it is ignored and kept for reference.

use aqc_core::channel_sim::{small_t_asymmetry, twirl_probabilities, TwirlParams};

fn grid() -> impl Iterator<Item = (f64, f64, f64)> {
    let log = |a: f64, b: f64, i: usize| (a.ln() + (b.ln() - a.ln()) * i as f64 / 9.0).exp();
    (0..10).flat_map(move |i| {
        (0..10).flat_map(move |j| (0..10).map(move |l| (log(1e-3, 10.0, i), log(1.0, 100.0, j), log(1.0, 100.0, l))))
    })
}

fn relative_error(t: f64, t1: f64, t2: f64) -> f64 {
    let exact = twirl_probabilities(&TwirlParams::new(t, t1, t2).unwrap()).unwrap().asymmetry().unwrap();
    ((small_t_asymmetry(t1, t2) - exact) / exact).abs()
}

#[test]
fn accurate_when_short_on_the_dephasing_scale() {
    for (t, t1, r) in grid() {
        let t2 = t1 / r;
        if t / t2 <= 0.01 {
            assert!(relative_error(t, t1, t2) < 0.05, "t = {t}, T1 = {t1}, T2 = {t2}");
        }
    }
}

#[test]
#[ignore = "the approximation needs t/T2 small; fails for T1/T2 near 100"]
fn within_five_percent_whenever_short_on_the_relaxation_scale() {
    for (t, t1, r) in grid() {
        let t2 = t1 / r;
        if t / t1 <= 0.01 {
            assert!(relative_error(t, t1, t2) < 0.05, "t = {t}, T1 = {t1}, T2 = {t2}");
        }
    }
}

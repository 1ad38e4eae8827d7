use profiles::blowup::{static_state, stationarity_residual};
use profiles::boost::coefficients;
use profiles::pairs::{boost_mode_pair, static_state_rapidity_fd};
use profiles::DIM;
use proptest::prelude::*;

fn rapidity() -> impl Strategy<Value = [f64; DIM]> {
    prop::array::uniform7(-0.2..0.2f64)
}

fn ball_point() -> impl Strategy<Value = [f64; DIM]> {
    prop::array::uniform7(-0.4..0.4f64).prop_filter("inside unit ball", |xi| {
        xi.iter().map(|x| x * x).sum::<f64>() < 1.0
    })
}

proptest! {
    #[test]
    fn boost_coefficients_lie_on_unit_hyperboloid(a in prop::array::uniform7(-2.0..2.0f64)) {
        let c = coefficients(&a);
        let spatial: f64 = (1..=DIM).map(|k| c[k] * c[k]).sum();
        prop_assert!((c[0] * c[0] - spatial - 1.0).abs() < 1e-13 * c[0] * c[0]);
    }

    #[test]
    fn boosted_states_are_stationary(a in rapidity(), xi in ball_point()) {
        prop_assert!(stationarity_residual(&a, &xi).abs() < 1e-10);
    }

    #[test]
    fn static_state_first_order_structure(a in rapidity(), xi in ball_point()) {
        // u₂ - u₁ = ξ·∇u₁, checked against a finite difference of u₁ along ξ.
        let (u1, u2) = static_state(&a, &xi);
        let h = 1e-6;
        let scale = |t: f64| -> [f64; DIM] { std::array::from_fn(|j| xi[j] * (1.0 + t)) };
        let up = static_state(&a, &scale(h)).0;
        let um = static_state(&a, &scale(-h)).0;
        let radial_derivative = (up - um) / (2.0 * h);
        prop_assert!((u2 - u1 - radial_derivative).abs() < 1e-6 * (1.0 + u1.abs()));
    }

    #[test]
    fn rapidity_derivative_is_four_boost_modes(a in rapidity(), xi in ball_point(), j in 0usize..DIM) {
        let closed = boost_mode_pair(&a, &xi, j);
        let fd = static_state_rapidity_fd(&a, &xi, j, 1e-5);
        prop_assert!((4.0 * closed.0 - fd.0).abs() < 1e-7);
        prop_assert!((4.0 * closed.1 - fd.1).abs() < 1e-7);
    }
}

#[test]
fn rapidity_fd_converges_at_second_order() {
    let a = [0.1, -0.05, 0.15, 0.02, -0.08, 0.12, -0.03];
    let xi = [0.2, 0.4, -0.3, 0.1, -0.2, 0.05, 0.35];
    let j = 4;
    let exact = boost_mode_pair(&a, &xi, j);
    let err = |h: f64| {
        let fd = static_state_rapidity_fd(&a, &xi, j, h);
        ((fd.0 - 4.0 * exact.0).abs()).max((fd.1 - 4.0 * exact.1).abs())
    };
    let e1 = err(1e-2);
    let e2 = err(5e-3);
    let order = (e1 / e2).log2();
    assert!(
        (order - 2.0).abs() < 0.2,
        "finite difference order {order}, errors {e1:.3e} / {e2:.3e}"
    );
}

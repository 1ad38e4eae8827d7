//! End-to-end checks of the variation-of-parameters solves: frozen interior
//! values, operator residuals, boundary growth fits, and the CSV surface.

use approx::assert_abs_diff_eq;
use spectral_scan::nonhom::{
    asymptotic_fit, nonhom_solve, write_solution_csv, ProblemTag,
};

const TAGS: [ProblemTag; 4] = [
    ProblemTag::NonHom1,
    ProblemTag::NonHom2,
    ProblemTag::NonHom3,
    ProblemTag::NonHom4,
];

#[test]
fn frozen_interior_jets() {
    // (u(1/2), u(9/10), u'(1/2), u''(1/2)) per problem.
    let expect = [
        (
            0.04344631724224695,
            -0.005310558060767431,
            0.0441456082444548,
            -0.6390712485712506,
        ),
        (
            0.1261881033794772,
            0.5348735395568123,
            0.4226481828305531,
            0.5663016692775103,
        ),
        (
            0.03383136319558433,
            0.126616997330759,
            0.1613820682169189,
            0.3349370727292124,
        ),
        (
            0.06030210054377286,
            0.1126063647306498,
            0.2378156923685992,
            0.01228954899653288,
        ),
    ];
    for (tag, (u_half, u_nine, du_half, d2u_half)) in TAGS.iter().zip(expect) {
        let rows = nonhom_solve(*tag, &[0.5, 0.9]).unwrap();
        assert_abs_diff_eq!(rows[0].u, u_half, epsilon = 1e-9);
        assert_abs_diff_eq!(rows[1].u, u_nine, epsilon = 1e-9);
        assert_abs_diff_eq!(rows[0].du, du_half, epsilon = 1e-9);
        assert_abs_diff_eq!(rows[0].d2u, d2u_half, epsilon = 1e-8);
    }
}

#[test]
fn residuals_sit_at_the_quadrature_floor() {
    let grid: Vec<f64> = (1..=9).map(|i| 0.1 * i as f64).collect();
    for tag in TAGS {
        let rows = nonhom_solve(tag, &grid).unwrap();
        for row in rows {
            assert!(
                row.model_residual.abs() < 1e-8,
                "{tag:?} at rho={}: residual {:.3e}",
                row.rho,
                row.model_residual
            );
        }
    }
}

#[test]
fn growth_fits_match_the_stated_asymptotics() {
    // (slope, r²) frozen from a high-precision run of the same fit.
    let expect = [
        (0.29800553, 0.9998841972),
        (0.0325801201552, 0.999999498553),
        (-0.36033654, 0.9996431277),
        (2.6045713, 0.9993611377),
    ];
    for (tag, (slope, r2)) in TAGS.iter().zip(expect) {
        let fit = asymptotic_fit(*tag).unwrap();
        assert!(
            fit.r_squared > 0.999,
            "{tag:?}: R² {} below threshold",
            fit.r_squared
        );
        assert!(fit.slope.abs() > 0.01, "{tag:?}: slope degenerate");
        assert_abs_diff_eq!(fit.slope, slope, epsilon = 1e-5);
        assert_abs_diff_eq!(fit.r_squared, r2, epsilon = 1e-6);
        assert_eq!(fit.points.len(), 11);
    }
}

#[test]
fn csv_surface_round_trips() {
    let rows = nonhom_solve(ProblemTag::NonHom1, &[0.3, 0.6]).unwrap();
    let mut buffer = Vec::new();
    write_solution_csv(&rows, &mut buffer).unwrap();
    let text = String::from_utf8(buffer).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rho,u,du,d2u,model_residual"));
    assert_eq!(lines.count(), 2);

    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let parsed: Vec<(f64, f64, f64, f64, f64)> = reader
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(parsed.len(), 2);
    assert_abs_diff_eq!(parsed[0].0, 0.3, epsilon = 0.0);
    assert_abs_diff_eq!(parsed[1].1, rows[1].u, epsilon = 1e-14);
}

//! End-to-end exercises across module boundaries: scenario files through
//! the solver, invariant algebra over the worked systems, and fitted
//! constants back through law evaluation.

use piradiance::matrix::Matrix;
use piradiance::pi_solver::{nullspace_basis, rank, solve_pinned, verify_scaling_freedom, PinSpec};
use piradiance::rational::Rational;
use piradiance::scenario::{parse_scenario, presets, wavelength_constraint};
use proptest::prelude::*;

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn scenario_file_reproduces_generalized_derivation() {
    let text = r#"{
        "basis": ["L", "Θ", "T", "M"],
        "quantities": [
            { "name": "U", "dim": "L^-1 T^-1 M" },
            { "name": "nu", "symbol": "ν", "dim": "T^-1" },
            { "name": "T", "dim": "Θ" },
            { "name": "c", "dim": "L T^-1" },
            { "name": "k", "dim": "L^2 Θ^-1 T^-2 M" },
            { "name": "eta", "symbol": "η", "dim": "L^2 T^-1 M" }
        ],
        "pins": [
            { "invariant": 1, "quantity": "U", "value": "1" },
            { "invariant": 1, "quantity": "eta", "value": "-1/2" },
            { "invariant": 2, "quantity": "U", "value": "0" },
            { "invariant": 2, "quantity": "eta", "value": "1" }
        ]
    }"#;
    let (set, pins) = parse_scenario(text).unwrap();
    let from_file = solve_pinned(&set, &pins.unwrap()).unwrap();
    let from_preset = solve_pinned(
        &presets::generalized_set(),
        &presets::generalized_pins(rat("-1/2")),
    )
    .unwrap();
    assert_eq!(from_file.rank(), from_preset.rank());
    for (a, b) in from_file
        .invariants()
        .iter()
        .zip(from_preset.invariants())
    {
        assert_eq!(a.powers(), b.powers());
    }
}

#[test]
fn scenario_without_pins_exposes_nullspace() {
    let text = r#"{
        "basis": ["L", "Θ", "T", "M"],
        "quantities": [
            { "name": "U", "dim": "L^-1 T^-1 M" },
            { "name": "nu", "dim": "T^-1" },
            { "name": "T", "dim": "Θ" },
            { "name": "c", "dim": "L T^-1" },
            { "name": "k", "dim": "L^2 Θ^-1 T^-2 M" }
        ]
    }"#;
    let (set, pins) = parse_scenario(text).unwrap();
    assert!(pins.is_none());
    let basis = nullspace_basis(&set);
    assert_eq!(basis.len(), 1);
    assert!(set.dimension_of_product(&basis[0]).unwrap().is_dimensionless());
}

#[test]
fn worked_systems_have_expected_counts() {
    for (set, expected_rank, expected_p) in [
        (presets::rayleigh_jeans_set(), 4, 1),
        (presets::generalized_set(), 4, 2),
        (presets::jeans_set(), 5, 3),
    ] {
        let matrix = set.dimensional_matrix();
        assert_eq!(rank(&matrix), expected_rank);
        assert_eq!(set.len() - rank(&matrix), expected_p);
        assert_eq!(nullspace_basis(&set).len(), expected_p);
    }
}

#[test]
fn known_products_are_dimensionless() {
    let classical = presets::rayleigh_jeans_set();
    let powers: Vec<Rational> = ["1", "-2", "-1", "3", "-1"].iter().map(|s| rat(s)).collect();
    assert!(classical.dimension_of_product(&powers).unwrap().is_dimensionless());

    let zeros = vec![Rational::ZERO; classical.len()];
    assert!(classical.dimension_of_product(&zeros).unwrap().is_dimensionless());

    // Closed-form exponents of the generalized invariant at N = 1/2.
    let n = rat("1/2");
    let generalized = presets::generalized_set();
    let powers = vec![
        Rational::ONE,
        n - rat("2"),
        -Rational::ONE - n,
        rat("3"),
        -Rational::ONE - n,
        n,
    ];
    assert!(generalized.dimension_of_product(&powers).unwrap().is_dimensionless());
}

#[test]
fn eight_quantity_invariants_obey_the_wavelength_lock() {
    let system = solve_pinned(&presets::jeans_set(), &presets::jeans_pins()).unwrap();
    for inv in system.invariants() {
        assert!(wavelength_constraint(inv.powers()).is_zero());
    }
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    // Any rational linear combination of the solved invariants is again
    // non-dimensional.
    #[test]
    fn linear_combinations_stay_dimensionless(a in arb_rational(), b in arb_rational()) {
        let set = presets::generalized_set();
        let system = solve_pinned(&set, &presets::generalized_pins(rat("-1"))).unwrap();
        let combined: Vec<Rational> = system.invariants()[0]
            .powers()
            .iter()
            .zip(system.invariants()[1].powers())
            .map(|(&x, &y)| a * x + b * y)
            .collect();
        prop_assert!(set.dimension_of_product(&combined).unwrap().is_dimensionless());
    }

    // Pinned solutions stay inside the span of the nullspace basis for
    // any parameter value of the generalized hypothesis.
    #[test]
    fn pinned_solutions_in_span_for_any_exponent(n in arb_rational()) {
        let set = presets::generalized_set();
        let system = solve_pinned(&set, &presets::generalized_pins(n)).unwrap();
        let basis = nullspace_basis(&set);
        let base_rank = Matrix::from_rows(basis.clone()).rank();
        for inv in system.invariants() {
            let mut rows = basis.clone();
            rows.push(inv.powers().to_vec());
            prop_assert_eq!(Matrix::from_rows(rows).rank(), base_rank);
        }
    }

    // Rescaling the single free pin only rescales the exponent vector.
    #[test]
    fn scaling_freedom_for_any_nonzero_alpha(alpha in arb_rational()) {
        prop_assume!(!alpha.is_zero());
        let check = verify_scaling_freedom(&presets::rayleigh_jeans_set(), alpha).unwrap();
        prop_assert!(check.holds);
    }

    // Pin values are free: whatever values close the generalized system,
    // the solved invariants are non-dimensional and independent.
    #[test]
    fn arbitrary_pin_values_solve_exactly(u1 in arb_rational(), e1 in arb_rational(), e2 in arb_rational()) {
        // Keep the two invariants independent: the pinned 2x2 block
        // [[u1, e1], [0, e2]] must be non-singular.
        prop_assume!(!u1.is_zero() && !e2.is_zero());
        let set = presets::generalized_set();
        let pins = PinSpec::new()
            .pin(0, 0, u1)
            .pin(0, 5, e1)
            .pin(1, 0, Rational::ZERO)
            .pin(1, 5, e2);
        let system = solve_pinned(&set, &pins).unwrap();
        for inv in system.invariants() {
            prop_assert!(set.dimension_of_product(inv.powers()).unwrap().is_dimensionless());
        }
    }
}

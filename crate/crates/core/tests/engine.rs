mod common;

use common::{c, r, same_multiset};
use qhj::engine::{
    build_linear_system, enumerate_families, fixed_pole_residues, infinity_branches, quantization_check,
    qes_energies_by_determinant, solve_es_spectrum, solve_qes_spectrum, EnumerateOptions, FamilyKind, QhjProblem,
    SolutionFamily, VariableMap,
};
use qhj::models::{build_khare_mandal, build_scarf2, select_scarf_residues, KhareMandalParams, ScarfParams};
use qhj::rational::{EnergyAffineRational, Polynomial, RationalFunction};
use qhj::Complex64;

fn km(zeta: f64, m: u32) -> QhjProblem {
    build_khare_mandal(&KhareMandalParams::new(zeta, m).unwrap()).unwrap()
}

fn km_family(zeta: f64, m: u32, b: (f64, f64), n: usize) -> (QhjProblem, SolutionFamily) {
    let problem = km(zeta, m);
    let family = enumerate_families(&problem, &EnumerateOptions::default())
        .unwrap()
        .into_iter()
        .find(|f| f.n == n && (f.residues[0] - r(b.0)).norm() < 1e-12 && (f.residues[1] - r(b.1)).norm() < 1e-12)
        .expect("family");
    (problem, family)
}

fn residue_set(problem: &QhjProblem, pole: f64) -> Vec<Complex64> {
    fixed_pole_residues(problem, r(pole)).unwrap().roots().to_vec()
}

#[test]
fn khare_mandal_residues() {
    let p = km(0.4, 3);
    for pole in [1.0, -1.0] {
        assert!(same_multiset(&residue_set(&p, pole), &[r(0.75), r(0.25)], 1e-12));
    }
    assert!(fixed_pole_residues(&p, r(2.0)).is_err());
}

#[test]
fn scarf_residues() {
    let p = build_scarf2(&ScarfParams::new(4.0, 2.0).unwrap()).unwrap();
    assert!(same_multiset(&residue_set(&p, 1.0), &[r(1.25), r(-0.25)], 1e-12));
    assert!((fixed_pole_residues(&p, r(1.0)).unwrap().leading - r(-5.0 / 16.0)).norm() < 1e-13);
}

#[test]
fn zero_leading_coefficient_gives_one_and_zero() {
    let den = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
    let slope = RationalFunction::new(Polynomial::one(), den).unwrap();
    let rational = EnergyAffineRational::new(RationalFunction::zero(), slope);
    let p = QhjProblem::new(rational, vec![r(1.0), r(-1.0)], VariableMap::CoshTwoX, "test").unwrap();
    assert!(same_multiset(&residue_set(&p, 1.0), &[r(1.0), r(0.0)], 1e-14));
}

#[test]
fn infinity_branches_of_both_models() {
    let zeta = 0.6;
    let branches = infinity_branches(&km(zeta, 3)).unwrap();
    let a0: Vec<Complex64> = branches.iter().map(|b| b.a0).collect();
    let lambda: Vec<Complex64> = branches.iter().map(|b| b.lambda.at(r(0.0))).collect();
    assert!(same_multiset(&a0, &[c(0.0, zeta / 2.0), c(0.0, -zeta / 2.0)], 1e-13));
    assert!(same_multiset(&lambda, &[r(1.5), r(-1.5)], 1e-13));
    for b in &branches {
        assert_eq!(b.kind(), FamilyKind::Qes);
        // lambda = M/2 pairs with a0 = +i zeta/2
        assert!(((b.lambda.at(r(0.0)) / b.a0).im + 1.5 / (zeta / 2.0)).abs() < 1e-12);
    }

    let scarf = build_scarf2(&ScarfParams::new(4.0, 2.0).unwrap()).unwrap();
    let e = r(-2.25);
    let lambda: Vec<Complex64> = infinity_branches(&scarf).unwrap().iter().map(|b| b.lambda.at(e)).collect();
    assert!(same_multiset(&lambda, &[r(2.0), r(-1.0)], 1e-12));
}

#[test]
fn trivial_infinity_balance() {
    let den = Polynomial::from_real(&[1.0, 0.0, -2.0, 0.0, 1.0]);
    let base = RationalFunction::new(Polynomial::constant(r(0.1)), den).unwrap();
    let rational = EnergyAffineRational::new(base, RationalFunction::zero());
    let p = QhjProblem::new(rational, vec![r(1.0), r(-1.0)], VariableMap::CoshTwoX, "test").unwrap();
    let branches = infinity_branches(&p).unwrap();
    let lambda: Vec<Complex64> = branches.iter().map(|b| b.lambda.at(r(3.0))).collect();
    assert!(same_multiset(&lambda, &[r(0.0), r(1.0)], 1e-14));
    assert!(branches.iter().all(|b| b.a0.norm() == 0.0));
}

fn family_keys(problem: &QhjProblem) -> Vec<(f64, f64, usize)> {
    let mut keys: Vec<_> = enumerate_families(problem, &EnumerateOptions::default())
        .unwrap()
        .iter()
        .map(|f| (f.residues[0].re, f.residues[1].re, f.n))
        .collect();
    keys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    keys
}

#[test]
fn khare_mandal_families() {
    assert_eq!(family_keys(&km(0.3, 3)), vec![(0.25, 0.25, 1), (0.75, 0.75, 0)]);
    assert_eq!(family_keys(&km(1.0, 2)), vec![(0.25, 0.75, 0), (0.75, 0.25, 0)]);
    assert_eq!(family_keys(&km(0.3, 1)), vec![(0.25, 0.25, 0)]);
}

#[test]
fn scarf_families_follow_the_energy_formula() {
    let params = ScarfParams::new(4.0, 2.0).unwrap();
    let problem = build_scarf2(&params).unwrap();
    let sel = select_scarf_residues(&params);
    let options = EnumerateOptions {
        n_max: 10,
        n_bound: Some(sel.n_bound),
        residue_choices: Some(sel.choices()),
    };
    let families = enumerate_families(&problem, &options).unwrap();
    assert_eq!(families.len(), 2);
    for f in &families {
        assert_eq!(f.kind, FamilyKind::Es);
        let expected = -(f.residue_sum() + f.n as f64 - 0.5).powi(2);
        assert!((f.energy.unwrap() - expected).norm() < 1e-12);
    }
}

#[test]
fn khare_mandal_m3_linear_system() {
    let zeta = 0.35;
    let (problem, family) = km_family(zeta, 3, (0.25, 0.25), 1);
    let system = build_linear_system(&problem, &family).unwrap();
    assert_eq!(system.size(), 2);
    let e = c(1.3, -0.4);
    let m = system.at(e);
    // Overall scale is free; compare after normalizing the off-diagonal entry.
    // Unknowns are ordered lowest degree first, the reverse of the displayed form.
    let scale = c(0.0, -zeta) / m[(0, 1)];
    let expected = [
        [1.0 + (e + zeta * zeta - 9.0) / 4.0, c(0.0, -zeta)],
        [c(0.0, -zeta), (e + zeta * zeta - 9.0) / 4.0],
    ];
    for i in 0..2 {
        for j in 0..2 {
            assert!((m[(1 - i, 1 - j)] * scale - expected[i][j]).norm() < 1e-12, "{i}{j}");
        }
    }
}

#[test]
fn scalar_system_for_n_zero() {
    let (problem, family) = km_family(0.35, 3, (0.75, 0.75), 0);
    assert_eq!(build_linear_system(&problem, &family).unwrap().size(), 1);
    let energies = qes_energies_by_determinant(&problem, &family).unwrap();
    assert!(same_multiset(&energies, &[r(5.0 - 0.35 * 0.35)], 1e-12));
}

#[test]
fn khare_mandal_m3_spectrum() {
    let (problem, family) = km_family(0.1, 3, (0.25, 0.25), 1);
    let pairs = solve_qes_spectrum(&problem, &family).unwrap();
    let energies: Vec<Complex64> = pairs.iter().map(|p| p.energy).collect();
    let root = 2.0 * 0.96f64.sqrt();
    assert!(same_multiset(&energies, &[r(6.99 + root), r(6.99 - root)], 1e-12));
    assert!((6.99 + root - 8.9496).abs() < 1e-4);
    for p in &pairs {
        assert_eq!(p.moving_polynomial.degree(), 1);
        assert!(p.diagnostics.system_residual < 1e-10);
    }
}

#[test]
fn khare_mandal_m2_assignment() {
    let zeta = 1.0;
    let (problem, family) = km_family(zeta, 2, (0.25, 0.75), 0);
    let e = solve_qes_spectrum(&problem, &family).unwrap()[0].energy;
    assert!((e - c(2.0, 2.0)).norm() < 1e-12);
    let (problem, family) = km_family(zeta, 2, (0.75, 0.25), 0);
    let e = solve_qes_spectrum(&problem, &family).unwrap()[0].energy;
    assert!((e - c(2.0, -2.0)).norm() < 1e-12);
}

// Values from an independent symbolic substitution of
// psi = (t-1)^p (t+1)^q e^{i zeta t/2} P(t) into the Schrodinger equation.
#[test]
fn khare_mandal_m5_matches_symbolic_oracle() {
    let (problem, family) = km_family(0.3, 5, (0.25, 0.25), 2);
    assert_eq!(build_linear_system(&problem, &family).unwrap().size(), 3);
    let energies = qes_energies_by_determinant(&problem, &family).unwrap();
    let expected = [r(9.028484092372006), c(22.850757953813996, -0.3342926366237163), c(22.850757953813996, 0.3342926366237163)];
    assert!(same_multiset(&energies, &expected, 1e-9));

    let (problem, family) = km_family(0.3, 5, (0.75, 0.75), 1);
    let energies = qes_energies_by_determinant(&problem, &family).unwrap();
    assert!(same_multiset(&energies, &[r(9.031224617320373), r(20.788775382679628)], 1e-9));

    let (problem, family) = km_family(1.5, 5, (0.25, 0.25), 2);
    let energies = qes_energies_by_determinant(&problem, &family).unwrap();
    let expected = [r(8.784005938816295), c(19.732997030591854, -10.70639070723308), c(19.732997030591854, 10.70639070723308)];
    assert!(same_multiset(&energies, &expected, 1e-9));
}

#[test]
fn khare_mandal_m4_matches_symbolic_oracle() {
    let (problem, family) = km_family(0.3, 4, (0.25, 0.75), 1);
    let energies = qes_energies_by_determinant(&problem, &family).unwrap();
    let expected = [c(7.044071548208088, -0.020808178404741577), c(14.775928451791913, 1.2208081784047415)];
    assert!(same_multiset(&energies, &expected, 1e-9));
}

#[test]
fn scarf_es_spectrum() {
    let params = ScarfParams::new(4.0, 2.0).unwrap();
    let problem = build_scarf2(&params).unwrap();
    let sel = select_scarf_residues(&params);
    let options = EnumerateOptions {
        n_max: 10,
        n_bound: Some(sel.n_bound),
        residue_choices: Some(sel.choices()),
    };
    for family in enumerate_families(&problem, &options).unwrap() {
        let pair = solve_es_spectrum(&problem, &family, None).unwrap();
        let expected = if family.n == 0 { -2.25 } else { -0.25 };
        assert!((pair.energy - r(expected)).norm() < 1e-12);
        assert_eq!(pair.moving_polynomial.degree(), family.n);
        if family.n == 0 {
            assert_eq!(pair.moving_polynomial, Polynomial::one());
        } else {
            // monic form of the Jacobi polynomial -z + 1/2
            assert!((pair.moving_polynomial.coeff(0) - r(-0.5)).norm() < 1e-12);
        }
        assert_eq!(quantization_check(&pair.moving_polynomial, problem.fixed_poles(), 4.0).unwrap(), family.n);
    }
}

#[test]
fn quantization_counts_zeros() {
    let p1 = Polynomial::new(vec![-c(0.0, (1.0 + 0.96f64.sqrt()) / 0.2), r(1.0)]);
    assert_eq!(quantization_check(&p1, &[r(1.0), r(-1.0)], 50.0).unwrap(), 1);
    assert_eq!(quantization_check(&Polynomial::one(), &[r(1.0), r(-1.0)], 50.0).unwrap(), 0);
}

#[test]
fn determinant_route_matches_closed_forms() {
    for zeta in [0.1, 0.5, 1.0, 2.0] {
        let z2 = zeta * zeta;
        let disc = 2.0 * Complex64::new(1.0 - 4.0 * z2, 0.0).sqrt();
        let cases = [
            (3, (0.25, 0.25), 1, vec![r(7.0 - z2) + disc, r(7.0 - z2) - disc]),
            (3, (0.75, 0.75), 0, vec![r(5.0 - z2)]),
            (2, (0.25, 0.75), 0, vec![c(3.0 - z2, 2.0 * zeta)]),
            (2, (0.75, 0.25), 0, vec![c(3.0 - z2, -2.0 * zeta)]),
        ];
        for (m, b, n, expected) in cases {
            let (problem, family) = km_family(zeta, m, b, n);
            let energies = qes_energies_by_determinant(&problem, &family).unwrap();
            assert!(same_multiset(&energies, &expected, 1e-10), "zeta {zeta} M {m}: {energies:?}");
        }
    }
}

#[test]
fn qes_integer_condition_holds_for_every_family() {
    for m in 1..=6 {
        for f in enumerate_families(&km(0.7, m), &EnumerateOptions::default()).unwrap() {
            let gap = f.branch.lambda.at(r(0.0)) - f.residue_sum() - f.n as f64;
            assert!(gap.norm() < 1e-9);
        }
    }
}

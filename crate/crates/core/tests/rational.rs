mod common;

use common::{c, r};
use qhj::rational::{
    expansion_at_infinity, laurent_at, polynomial_roots, EnergyAffineRational, Polynomial, RationalFunction,
};
use qhj::Complex64;

fn rational(num: &[f64], den: &[f64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_real(num), Polynomial::from_real(den)).unwrap()
}

/// `(t^2 - 1)^2`
fn t2_minus_1_sq() -> Polynomial {
    Polynomial::from_real(&[1.0, 0.0, -2.0, 0.0, 1.0])
}

#[test]
fn polynomial_arithmetic() {
    let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
    assert_eq!(p.derivative(), Polynomial::from_real(&[0.0, 2.0]));
    let product = &Polynomial::from_real(&[-1.0, 1.0]) * &Polynomial::from_real(&[1.0, 1.0]);
    assert_eq!(product, p);
    assert_eq!(&p + &Polynomial::zero(), p);
}

#[test]
fn laurent_coefficients_at_finite_poles() {
    let base = RationalFunction::new(Polynomial::from_real(&[2.0, 0.0, 1.0]), t2_minus_1_sq().scale(r(4.0))).unwrap();
    let f = EnergyAffineRational::new(base, RationalFunction::zero());
    let l = laurent_at(&f, r(1.0), -2).unwrap();
    assert!((l.coefficient(-2).constant - r(3.0 / 16.0)).norm() < 1e-13);

    let g = EnergyAffineRational::new(rational(&[1.0], &[-1.0, 0.0, 1.0]), RationalFunction::zero());
    let l = laurent_at(&g, r(1.0), -2).unwrap();
    assert!(l.coefficient(-2).constant.norm() < 1e-13);
    assert!((l.coefficient(-1).constant - r(0.5)).norm() < 1e-13);
}

/// Scarf-II rational part `(2 + y^2 - 4(A - B y)) / (4 (y^2 - 1)^2) + E / (y^2 - 1)`.
fn scarf_rational(a: f64, b: f64) -> EnergyAffineRational {
    let base = RationalFunction::new(
        Polynomial::from_real(&[2.0 - 4.0 * a, 4.0 * b, 1.0]),
        t2_minus_1_sq().scale(r(4.0)),
    )
    .unwrap();
    EnergyAffineRational::new(base, rational(&[1.0], &[-1.0, 0.0, 1.0]))
}

#[test]
fn scarf_order_minus_two_is_energy_independent() {
    for (a, b) in [(4.0, 2.0), (1.0, 3.0), (0.3, -1.7)] {
        let l = laurent_at(&scarf_rational(a, b), r(1.0), -2).unwrap();
        let lead = l.coefficient(-2);
        assert!((lead.constant - r(3.0 / 16.0 - (a - b) / 4.0)).norm() < 1e-12);
        assert!(lead.slope.norm() < 1e-13);
        // (y - 1)^2 R(y) -> r_{-2} as y -> 1
        let y = r(1.0 + 1e-6);
        let limit = (y - 1.0).powi(2) * scarf_rational(a, b).eval(y, c(0.7, -0.2));
        assert!((limit - lead.constant).norm() < 1e-5);
    }
}

#[test]
fn expansions_at_infinity() {
    let (zeta, m) = (0.8, 3.0);
    // Khare-Mandal: (t^2 + 2)/(4 (t^2 - 1)^2) + (E + (zeta t - i M)^2) / (4 (t^2 - 1))
    let base = &RationalFunction::new(Polynomial::from_real(&[2.0, 0.0, 1.0]), t2_minus_1_sq().scale(r(4.0))).unwrap()
        + &RationalFunction::new(
            Polynomial::new(vec![c(-m * m, 0.0), c(0.0, -2.0 * zeta * m), r(zeta * zeta)]),
            Polynomial::from_real(&[-4.0, 0.0, 4.0]),
        )
        .unwrap();
    let km = EnergyAffineRational::new(base, rational(&[0.25], &[-1.0, 0.0, 1.0]));
    let e = expansion_at_infinity(&km).unwrap();
    assert!((e.coefficient(0).constant - r(zeta * zeta / 4.0)).norm() < 1e-13);
    assert!((e.coefficient(-1).constant - c(0.0, -m * zeta / 2.0)).norm() < 1e-13);
    assert!(e.coefficient(0).slope.norm() < 1e-13 && e.coefficient(-1).slope.norm() < 1e-13);

    let s = expansion_at_infinity(&scarf_rational(4.0, 2.0)).unwrap();
    assert!(s.coefficient(0).constant.norm() < 1e-13);
    assert!(s.coefficient(-1).constant.norm() < 1e-13);
    assert!((s.coefficient(-2).constant - r(0.25)).norm() < 1e-13);
    assert!((s.coefficient(-2).slope - r(1.0)).norm() < 1e-13);

    let zero = EnergyAffineRational::new(RationalFunction::zero(), RationalFunction::zero());
    let z = expansion_at_infinity(&zero).unwrap();
    for k in [0, -1, -2] {
        assert!(z.coefficient(k).constant.norm() == 0.0 && z.coefficient(k).slope.norm() == 0.0);
    }
}

#[test]
fn roots_of_known_polynomials() {
    let mut roots = polynomial_roots(&Polynomial::from_real(&[-1.0, 0.0, 1.0])).unwrap();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re));
    assert!((roots[0] - r(-1.0)).norm() < 1e-14 && (roots[1] - r(1.0)).norm() < 1e-14);

    // P_1 of the M = 3, zeta = 0.1 plus branch: t - i(1 + sqrt(0.96)) / 0.2
    let expected = c(0.0, (1.0 + 0.96f64.sqrt()) / 0.2);
    let p = Polynomial::new(vec![-expected, r(1.0)]);
    assert!((polynomial_roots(&p).unwrap()[0] - expected).norm() < 1e-13);

    let quintic = Polynomial::new(vec![c(0.3, -1.0), c(2.0, 0.5), r(-1.5), c(0.0, 0.7), r(4.0), c(1.0, 1.0)]);
    let roots = polynomial_roots(&quintic).unwrap();
    assert_eq!(roots.len(), 5);
    for z in roots {
        assert!(quintic.eval(z).norm() < 1e-9);
    }
    assert!(polynomial_roots(&Polynomial::zero()).is_err());
    assert!(polynomial_roots(&Polynomial::constant(r(2.0))).unwrap().is_empty());
}

#[test]
fn third_order_pole_is_rejected() {
    let f = EnergyAffineRational::new(
        rational(&[1.0], &[-1.0, 3.0, -3.0, 1.0]),
        RationalFunction::zero(),
    );
    assert!(laurent_at(&f, r(1.0), -2).is_err());
    assert!(laurent_at(&f, Complex64::new(1.0, 0.0), -3).is_err());
}

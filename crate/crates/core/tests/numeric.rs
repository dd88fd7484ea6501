use kappa_hopf::kinematics::{
    bounds, check_mass_shell, mass_shell_exp, mass_shell_p0, modified_bound, nonrel_bound, nonrel_lower,
    robertson_bound, sqrt_bound, sweep, ExpectationAssignment, KinematicParams, StateMeans, SweepQuantity, SweepVar,
    SWEEP_COLUMNS,
};
use kappa_hopf::ncpoly::{AlgebraPreset, Basis, Element, Generator, Sector};
use kappa_hopf::Error;
use num_complex::Complex64;

fn params(kappa: f64, mass: f64, pvec: f64) -> KinematicParams {
    KinematicParams::new(kappa, 1.0, 1.0, mass, pvec).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn mass_shell_points() {
    assert_eq!(mass_shell_exp(&params(1.0, 0.0, 0.0)), 1.0);
    assert_eq!(mass_shell_p0(&params(1.0, 0.0, 0.0)), 0.0);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((mass_shell_exp(&params(1.0, 1.0, 0.0)) - phi).abs() < 1e-12);
    for (k, m, p) in [(1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (1.0, 2.0, 3.0)] {
        let chk = check_mass_shell(&params(k, m, p));
        assert!(chk.pass, "{chk:?}");
    }
    let e = mass_shell_exp(&params(1e6, 1.0, 0.0));
    assert!((e - (1.0 + 5e-7)).abs() < 1e-12);
}

#[test]
fn mass_shell_p0_is_log_of_exp() {
    for (k, m, p) in [(0.5, 1.0, 2.0), (3.0, 0.1, 0.0), (1e3, 5.0, 7.0)] {
        let x = params(k, m, p);
        assert!(close(mass_shell_p0(&x), 2.0 * k * mass_shell_exp(&x).ln(), 1e-12));
    }
}

fn state(pairs: &[(&str, f64)]) -> ExpectationAssignment {
    pairs.iter().fold(ExpectationAssignment::new(), |s, (k, v)| s.with(k, *v).unwrap())
}

fn gen(g: Generator) -> Element {
    Element::generator(g)
}

#[test]
fn robertson_points() {
    let p = KinematicParams::default();
    let bic = AlgebraPreset::new(Basis::Bicross, Sector::PhaseSpace);
    let std = AlgebraPreset::new(Basis::Standard, Sector::PhaseSpace);
    let (x1, p1, p2) = (gen(Generator::x(1)), gen(Generator::p(1)), gen(Generator::p(2)));
    let empty = ExpectationAssignment::new();
    assert_eq!(robertson_bound(&x1, &p1, &bic, &empty, &p).unwrap(), 0.5);
    assert_eq!(robertson_bound(&x1, &p2, &bic, &empty, &p).unwrap(), 0.0);
    let s = state(&[("q", 1.2)]);
    assert!(close(robertson_bound(&x1, &p1, &std, &s, &p).unwrap(), 0.6, 1e-15));
    let hbar3 = KinematicParams { hbar: 3.0, ..p };
    assert!(close(robertson_bound(&x1, &p1, &std, &s, &hbar3).unwrap(), 1.8, 1e-15));
    match robertson_bound(&x1, &p1, &std, &empty, &p) {
        Err(Error::IncompleteState(missing)) => assert_eq!(missing, vec!["q".to_string()]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn expectation_validation() {
    let mut s = ExpectationAssignment::new();
    assert!(s.insert("1", Complex64::new(2.0, 0.0)).is_err());
    assert!(s.insert("x1", Complex64::new(0.0, 1.0)).is_err());
    assert!(s.insert("x0 P1", Complex64::new(0.0, 1.0)).is_ok());
}

/// Bounds from the closed forms against `½|<[a, b]>|` with `t = x0/c`, `E = c P0`.
#[test]
fn closed_forms_match_robertson() {
    let means = StateMeans { x: [0.3, -1.5, 2.0], p: [2.0, -0.7, 0.0], q: 1.2 };
    for basis in Basis::ALL {
        let preset = AlgebraPreset::new(basis, Sector::PhaseSpace);
        for p in [KinematicParams::default(), KinematicParams::new(2.5, 3.0, 0.7, 1.0, 0.0).unwrap()] {
            let st = state(&[
                ("x1", means.x[0]),
                ("x2", means.x[1]),
                ("x3", means.x[2]),
                ("P1", means.p[0]),
                ("P2", means.p[1]),
                ("P3", means.p[2]),
                ("q", means.q),
            ]);
            let b = bounds(basis, &means, &p);
            let rb = |a: Generator, c: Generator| robertson_bound(&gen(a), &gen(c), &preset, &st, &p).unwrap();
            for k in 1..=3 {
                assert!(close(b.time_space[k - 1], rb(Generator::x(0), Generator::x(k)) / p.c, 1e-14), "{basis}");
                assert!(close(b.momentum_time[k - 1], rb(Generator::x(0), Generator::p(k)) / p.c, 1e-14), "{basis}");
            }
            assert!(close(b.momentum_position, rb(Generator::x(1), Generator::p(1)), 1e-14), "{basis}");
            assert!(close(b.energy_time, rb(Generator::x(0), Generator::p(0)), 1e-14), "{basis}");
            assert_eq!(rb(Generator::x(1), Generator::p(2)), 0.0);
        }
    }
}

#[test]
fn bounds_points() {
    let p = KinematicParams::default();
    let m = StateMeans { x: [0.0; 3], p: [2.0, 0.0, 0.0], q: 1.0 };
    let b = bounds(Basis::Bicross, &m, &p);
    assert_eq!(b.time_space[0], 0.0);
    assert_eq!(b.energy_time, 0.5);
    assert_eq!(b.momentum_time[0], 1.0);
    let s = bounds(Basis::Standard, &m, &p);
    assert_eq!(s.momentum_position, 0.5);
    assert_eq!(s.momentum_time[0], 0.5);
    assert!(s.warnings.is_empty());
    let on_shell = StateMeans { q: mass_shell_exp(&params(1.0, 1.0, 0.0)), ..m };
    assert!((bounds(Basis::Standard, &on_shell, &p).momentum_position - 0.809016994375).abs() < 1e-12);
    let low = StateMeans { q: 0.9, ..m };
    assert_eq!(bounds(Basis::Standard, &low, &p).warnings.len(), 1);
}

#[test]
fn nonrel_points() {
    assert_eq!(nonrel_bound(2.0, 1.0, 1.0), 1.25);
    assert_eq!(nonrel_bound(1.0, 1.0, 1.0), 0.8125);
    assert_eq!(nonrel_lower(1.0, 1.0, 1.0), 0.75);
    assert!((nonrel_bound(1e-9, 1.0, 1.0) - 0.5).abs() < 1e-9);
}

#[test]
fn modified_points() {
    assert_eq!(modified_bound(0.0, 1.0, 1.0, 1.0).value, 0.5);
    assert_eq!(modified_bound(1.0, 1.0, 1.0, 1.0).value, 0.5625);
    assert!(modified_bound(1.0, 1.0, 1.0, 1.0).warnings.is_empty());
    assert_eq!(modified_bound(2.0, 1.0, 1.0, 1.0).warnings.len(), 1);
}

/// `(1 + x/8)^2 - (1 + x/4) = x^2/64 >= 0` with `x = Δp^2/κ^2c^2`, so the
/// quadratic form sits on or above the square root.
#[test]
fn modified_bound_dominates_sqrt_form() {
    for k in 0..=100 {
        let dp = k as f64 / 100.0;
        let m = modified_bound(dp, 1.0, 1.0, 1.0).value;
        let s = sqrt_bound(dp, 0.0, 0.0, 1.0, 1.0, 1.0);
        assert!(m >= s - 1e-15, "dp={dp}: {m} < {s}");
        let x = dp * dp;
        assert!((m * m - s * s - 0.25 * x * x / 64.0).abs() < 1e-14);
    }
}

#[test]
fn sweep_shape() {
    let rows = sweep(&params(1.0, 1.0, 0.0), SweepVar::Kappa, 1.0, 1e12, 13, SweepQuantity::StandardBound).unwrap();
    assert_eq!(SWEEP_COLUMNS, ["kappa", "c", "hbar", "M", "P", "value", "residual"]);
    assert_eq!(rows.len(), 13);
    assert!(close(rows[3].kappa, 1e3, 1e-12));
    assert!((rows[12].value - 0.5).abs() < 1e-9 * 0.5);
    let json = serde_json::to_value(rows[0]).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    let mut want = SWEEP_COLUMNS.to_vec();
    want.sort();
    assert_eq!(keys, want);
    let shell = sweep(&params(1.0, 1.0, 1.0), SweepVar::P, 1e-3, 1e3, 7, SweepQuantity::MassShell).unwrap();
    assert!(shell.windows(2).all(|w| w[1].value > w[0].value));
    assert!(sweep(&params(1.0, 0.0, 0.0), SweepVar::Mass, 0.0, 1.0, 3, SweepQuantity::Nonrel).is_err());
}

#[test]
fn invalid_parameters() {
    assert!(KinematicParams::new(0.0, 1.0, 1.0, 0.0, 0.0).is_err());
    assert!(KinematicParams::new(1.0, -1.0, 1.0, 0.0, 0.0).is_err());
    assert!(KinematicParams::new(1.0, 1.0, f64::NAN, 0.0, 0.0).is_err());
    assert!(KinematicParams::new(1.0, 1.0, 1.0, -1.0, 0.0).is_err());
}

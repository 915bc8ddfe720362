use cubiccert::galois::Claim;
use cubiccert::parser::parse_bivariate;
use cubiccert::polyalg::rational::int;
use cubiccert::quartic::*;
use cubiccert::Rational;

const NS13: &str = "x y^3 + x^2 y^2 + y^3 + 2 x y^2 - x^3 + 2 x y + 2 x - y";

fn quartic(s: &str) -> TernaryQuartic {
    TernaryQuartic::from_affine(&parse_bivariate(s, 'x', 'y').unwrap()).unwrap()
}

fn numeric_hessian(f: &TernaryForm, p: [f64; 3]) -> f64 {
    let eval = |q: [f64; 3]| {
        let r: [Rational; 3] = q.map(|v| Rational::from_float(v).unwrap());
        let v = f.eval(&r);
        v.numer().to_string().parse::<f64>().unwrap() / v.denom().to_string().parse::<f64>().unwrap()
    };
    let h = 1e-3;
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let shift = |a: f64, b: f64| {
                let mut q = p;
                q[i] += a;
                q[j] += b;
                eval(q)
            };
            m[i][j] = (shift(h, h) - shift(h, -h) - shift(-h, h) + shift(-h, -h)) / (4.0 * h * h);
        }
    }
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

#[test]
fn ns13_hessian_regression() {
    let f = quartic(NS13);
    let h = hessian(f.form());
    assert_eq!(h.degree(), 6);
    assert_eq!(h.terms().count(), 27);
    assert_eq!(h.eval(&[int(1), int(2), int(3)]), int(-411120));
    for p in [[0.3, -1.2, 0.7], [1.1, 0.4, -0.5], [-0.8, 0.9, 1.3], [0.25, 0.5, 2.0], [-1.5, -0.6, 0.35]] {
        let exact = h.eval(&p.map(|v| Rational::from_float(v).unwrap()));
        let exact = exact.numer().to_string().parse::<f64>().unwrap() / exact.denom().to_string().parse::<f64>().unwrap();
        let approx = numeric_hessian(f.form(), p);
        assert!((exact - approx).abs() <= 1e-4 * (1.0 + exact.abs()), "{exact} vs {approx}");
    }
}

#[test]
fn ns13_flex_galois() {
    let f = quartic(NS13);
    let r = flex_galois_report(&f, 1000).unwrap();
    assert_eq!(r.flex.shear, 0);
    assert!(r.flex.squarefree);
    assert_eq!(r.flex.polynomial.degree(), Some(24));
    assert_eq!(r.flex.polynomial.leading(), Some(&int(2)));
    assert_eq!(r.flex.polynomial.coeff(1), int(66627));
    assert_eq!(r.flex.polynomial.coeff(0), int(5688));
    assert!(r.certificate.has(Claim::TwoTransitive));
    assert!(matches!(r.verdict, FlexVerdict::Finite { .. }));
    let w = r.certificate.witness(Claim::TwoTransitive).unwrap();
    assert_eq!(w.cycle_types.iter().map(|t| t.parts.len()).collect::<Vec<_>>(), vec![1, 2]);
    // a different shear gives a different polynomial, same claims
    let other = report_for(flex_polynomial_from(&f, Coordinate::Y, 3).unwrap(), 1000).unwrap();
    assert_ne!(other.flex.polynomial, r.flex.polynomial);
    assert_eq!(other.certificate.claims, r.certificate.claims);
}

#[test]
fn klein_regression() {
    let f = quartic("x^3 y + y^3 + x");
    let r = flex_galois_report(&f, 200).unwrap();
    assert_eq!(r.flex.shear, 2);
    assert!(r.flex.squarefree);
    assert_eq!(r.flex.polynomial.leading(), Some(&int(8471)));
    // the coordinate points are rational flexes, so one flex value is rational
    assert_eq!(r.flex.polynomial.coeff(0), int(0));
    assert!(r.certificate.claims.is_empty());
    assert!(matches!(r.verdict, FlexVerdict::Inconclusive { .. }));
}

#[test]
fn fermat_hyperflexes() {
    let f = quartic("x^4 + y^4 + 1");
    let fp = flex_polynomial(&f, Coordinate::Y).unwrap();
    assert_eq!(fp.multiplicities, vec![(2, 12)]);
    let r = report_for(fp, 200).unwrap();
    assert!(matches!(r.verdict, FlexVerdict::Inconclusive { .. }));
    assert!(!r.certificate.has(Claim::TwoTransitive));
}

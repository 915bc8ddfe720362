use cubiccert::curves::trigonal::integer_walk;
use cubiccert::curves::TrigonalModel;
use cubiccert::cyclic::{
    classify, discriminant_curve, fibre_certificate, recheck_certificate, DiscShape, FibreVerdict, SearchBudget,
    Verdict,
};
use cubiccert::parser::{parse_bivariate, parse_univariate};
use cubiccert::polyalg::is_square_rational;
use cubiccert::{Error, Rational};

#[test]
fn c3_cover_fibres_are_cyclic() {
    let f = parse_bivariate("y^3 - x y^2 - (x + 3) y - 1", 'x', 'y').unwrap();
    let m = TrigonalModel::from_cubic(&f).unwrap();
    let r = classify(&m, &SearchBudget::quick()).unwrap();
    assert_eq!(r.verdict, Verdict::C3Cover);
    let mut irreducible = 0;
    for x0 in integer_walk().take(20) {
        let cert = fibre_certificate(&m, &x0).unwrap();
        assert!(cert.disc_sqrt.is_some(), "non-square disc at {x0}");
        if cert.evidence.is_irreducible() {
            assert_eq!(cert.verdict, FibreVerdict::CyclicCubic, "x0 = {x0}");
            assert!(recheck_certificate(&m, &cert));
            irreducible += 1;
        } else {
            assert_ne!(cert.verdict, FibreVerdict::CyclicCubic);
        }
    }
    assert!(irreducible >= 15, "only {irreducible} irreducible samples");
}

/// Fibres with square discriminant are exactly the base points of rational
/// points on the discriminant curve, checked pointwise against the curve.
#[test]
fn cyclic_fibres_match_disc_curve_points() {
    // fibres over 0 and 1 are y^3 - 3y + 1 and y^3 - 7y + 7
    let p = parse_univariate("x^2 - 5x - 3", 'x').unwrap();
    let q = parse_univariate("x^3 + 5x + 1", 'x').unwrap();
    let m = TrigonalModel::new(p, q).unwrap();
    let d = discriminant_curve(&m).unwrap();
    assert_eq!(d.shape, DiscShape::HigherGenus);
    assert!(d.genus >= 2);
    let (mut cyclic, mut irreducible) = (0, 0);
    for n in -50i64..=50 {
        let x0 = Rational::from_integer(n.into());
        let cert = match fibre_certificate(&m, &x0) {
            Ok(c) => c,
            Err(Error::RamifiedFibre(_)) => continue,
            Err(e) => panic!("x0 = {n}: {e}"),
        };
        if !cert.evidence.is_irreducible() {
            continue;
        }
        irreducible += 1;
        let on_curve = is_square_rational(&(d.class() * d.sqfree_part.eval(&x0))).is_some();
        assert_eq!(cert.verdict == FibreVerdict::CyclicCubic, on_curve, "x0 = {n}");
        if on_curve {
            cyclic += 1;
        }
    }
    assert!(irreducible > 50);
    assert!(cyclic >= 2 && cyclic < irreducible);
    println!("{cyclic} cyclic fibres among {irreducible} irreducible ones");
}

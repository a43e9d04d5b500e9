use nilorbit_web::{class, orbits, weight};

#[test]
fn orbit_table() {
    let rows = orbits(4).unwrap();
    assert_eq!(rows.len(), 10);
    let w = rows.iter().find(|o| o.name == "(1,2)(3,4)").unwrap();
    assert_eq!((w.rank, w.dim, w.codim), (2, 4, 2));
    assert_eq!(w.word, vec![2]);
    assert!(orbits(0).is_err());
    assert!(orbits(8).is_err());
}

#[test]
fn zero_orbit_class() {
    let c = class(2, "id", "H", "fund", "keep").unwrap();
    assert_eq!(c.text, "u + t1 - t2");
    assert_eq!(c.terms, 3);
    assert!(class(2, "id", "K", "csm", "keep").is_err());
    assert!(class(2, "(1,2", "H", "fund", "keep").is_err());
}

#[test]
fn weight_of_the_identity() {
    let w = weight("12").unwrap();
    assert_eq!(w.involution, "(1,3)");
    assert!(w.latex.contains("\\gamma_{1}"));
    assert!(weight("12345").is_err());
}

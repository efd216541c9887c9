mod common;

use num::One;
use tristram::algebra::{factor_over_rationals, LaurentPoly, TracePoly};
use tristram::bounds::BoundReport;
use tristram::seifert::{parse_seifert_json, read_seifert_file, same_up_to_units, write_report};
use tristram::signature::{alexander_polynomial, murasugi_signature, step_function, SignatureFunction};
use tristram::{resolve_expression, BraidWord, Error, KnotExpr, KnotTable, SeifertMatrix};

fn trefoil() -> SeifertMatrix {
    KnotTable::builtin().get("3_1").unwrap().matrix.clone()
}

/// Plateaus, and jump / balanced / non-balanced triples at each breakpoint.
fn shape(f: &SignatureFunction) -> (Vec<i32>, Vec<(i32, i32, i32)>) {
    (
        f.plateau_values(),
        f.breakpoints.iter().map(|b| (b.jump, b.balanced_x2, b.nonbalanced)).collect(),
    )
}

fn assert_alexander_matches_floats(v: &SeifertMatrix, expected: &LaurentPoly) {
    // det(V - xVᵀ) = x^g Δ(x) at a few points, with Δ from the expected value
    let g = v.genus() as i32;
    for x in [0.5f64, 1.5, 2.0, -0.75] {
        let want: f64 = expected
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| num::ToPrimitive::to_f64(c).unwrap() * x.powi(expected.low() as i32 + k as i32 + g))
            .sum();
        let got = common::float_alexander_det(v, x);
        assert!((got - want).abs() < 1e-6 * (1.0 + want.abs()), "x = {x}: {got} vs {want}");
    }
}

#[test]
fn connected_sum_examples() {
    let t = trefoil();
    assert_eq!(t.connected_sum(&SeifertMatrix::empty()), t);
    let tt = t.connected_sum(&t);
    assert_eq!(tt.size(), 4);
    let phi6 = LaurentPoly::from_ints(-1, &[1, -1, 1]);
    let delta = alexander_polynomial(&tt);
    assert_eq!(delta, &phi6 * &phi6);
    assert_alexander_matches_floats(&tt, &delta);
    assert_eq!(murasugi_signature(&tt), -4);
    assert_eq!(common::float_signature(&tt, -2.0), Some((-4, 0)));
}

#[test]
fn mirror_examples() {
    let t = trefoil();
    assert_eq!(t.mirror().mirror(), t);
    assert_eq!(murasugi_signature(&t.mirror()), 2);
    assert_eq!(common::float_signature(&t.mirror(), -2.0), Some((2, 0)));
    assert!(SeifertMatrix::empty().mirror().is_empty());
}

#[test]
fn braid_examples() {
    let v = BraidWord::new(2, vec![1, 1, 1]).unwrap().seifert_matrix().unwrap();
    let delta = alexander_polynomial(&v);
    assert_eq!(delta, LaurentPoly::from_ints(-1, &[1, -1, 1]));
    assert_alexander_matches_floats(&v, &delta);

    let v = BraidWord::new(2, vec![1; 5]).unwrap().seifert_matrix().unwrap();
    assert_eq!(v.size(), 4);
    assert_eq!(alexander_polynomial(&v), LaurentPoly::from_ints(-2, &[1, -1, 1, -1, 1]));

    let v = BraidWord::torus(3, 10).unwrap().seifert_matrix().unwrap();
    assert_eq!(v.size(), 18);
    let t = TracePoly::from_laurent(&alexander_polynomial(&v)).unwrap();
    let psi30 = tristram::algebra::cyclotomic_trace(30);
    assert!(factor_over_rationals(t.poly()).unwrap().iter().any(|(q, _)| q == &psi30));

    let link = BraidWord::new(2, vec![1, 1]).unwrap().seifert_matrix();
    assert!(matches!(link, Err(Error::MultiComponent { components: 2 })));
    assert!(BraidWord::new(2, vec![2]).is_err());
    assert!("3: 1 -2 1 -2".parse::<BraidWord>().is_ok());
}

#[test]
fn resolve_examples() {
    let table = KnotTable::builtin();
    assert_eq!(resolve_expression("-5_1 # -10_132", &table).unwrap().size(), 8);
    let a = step_function(&resolve_expression("T(2,3)", &table).unwrap()).unwrap();
    let b = step_function(&resolve_expression("3_1", &table).unwrap()).unwrap();
    assert_eq!(shape(&a), shape(&b));
    assert!(resolve_expression("0 · 3_1", &table).unwrap().is_empty());
    assert!(matches!(resolve_expression("T(2,4)", &table), Err(Error::InvalidTorus { p: 2, q: 4 })));
    assert!(matches!(resolve_expression("T(1,5)", &table), Err(Error::InvalidTorus { .. })));
    assert!(matches!(resolve_expression("12n_999", &table), Err(Error::UnknownKnot(_))));
    assert!(matches!(KnotExpr::parse("3_1 # # 4_1"), Err(Error::Expression { column: 7, .. })));
}

#[test]
fn file_examples() {
    let ok = parse_seifert_json(r#"[{"name": "3_1", "matrix": [[-1, 0], [-1, -1]]}]"#, "inline").unwrap();
    assert_eq!(ok.len(), 1);
    let odd = parse_seifert_json(r#"[{"name": "odd", "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}]"#, "inline");
    assert!(matches!(odd, Err(Error::InvalidSeifert { ref name, .. }) if name == "odd"));
    let flat = parse_seifert_json(r#"[{"name": "flat", "matrix": [[1, 1], [1, 1]]}]"#, "inline");
    assert!(matches!(flat, Err(Error::InvalidSeifert { ref name, .. }) if name == "flat"));
    let missing = parse_seifert_json(r#"[{"name": "x"}]"#, "inline");
    assert!(matches!(missing, Err(Error::FileFormat { .. })));

    let dir = std::env::temp_dir().join(format!("tristram-seifert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("knots.json");
    std::fs::write(&path, tristram::seifert::to_seifert_json(&ok)).unwrap();
    assert_eq!(read_seifert_file(&path).unwrap(), ok);

    let report = BoundReport::for_matrix("3_1", &ok[0].1).unwrap();
    let out = dir.join("report.json");
    write_report(&out, &report).unwrap();
    let back = BoundReport::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(back, report);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_constructed_matrix_is_a_seifert_matrix() {
    for (name, v) in common::suite() {
        assert_eq!(v.size() % 2, 0, "{name}");
        assert!(v.skew_determinant().is_one(), "{name}");
    }
}

#[test]
fn torus_alexander_polynomials() {
    let mut checked = 0;
    for p in 2u64..=15 {
        for q in p + 1..=15 {
            if p * q > 30 || num::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            let v = BraidWord::torus(p, q).unwrap().seifert_matrix().unwrap();
            let x_pow = |k: u64| {
                let mut c = vec![0i64; k as usize + 1];
                c[0] = 1;
                c[k as usize] = -1;
                LaurentPoly::from_ints(0, &c)
            };
            let num = &x_pow(1) * &x_pow(p * q);
            let den = &x_pow(p) * &x_pow(q);
            let expected = num.exact_div(&den).unwrap();
            assert!(same_up_to_units(&alexander_polynomial(&v), &expected), "T({p},{q})");
            checked += 1;
        }
    }
    assert!(checked >= 7);
}

#[test]
fn table_braids_agree_with_table_matrices() {
    for entry in KnotTable::builtin().entries() {
        let Some(braid) = &entry.braid else { continue };
        let from_braid = braid.seifert_matrix().unwrap();
        let a = step_function(&from_braid).unwrap();
        let b = step_function(&entry.matrix).unwrap();
        assert_eq!(shape(&a), shape(&b), "{}", entry.name);
        assert_eq!(murasugi_signature(&from_braid), murasugi_signature(&entry.matrix), "{}", entry.name);
    }
}

#[test]
fn user_tables() {
    let mut table = KnotTable::empty();
    table.insert("left trefoil", trefoil());
    assert_eq!(resolve_expression("lefttrefoil # -left_trefoil", &table).unwrap().size(), 4);
    assert!(matches!(resolve_expression("3_1", &table), Err(Error::UnknownKnot(_))));
}

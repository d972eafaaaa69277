use equicohom::chain_oracle::{
    level_e_crosscheck, sphere_antipodal_complex, stable_limit, top_level_differentials,
    verify_ep_table, Twist,
};
use equicohom::mackey::CatalogName;
use equicohom::Error;

/// The integer-graded column of EP read off the cell structure by hand.
fn untwisted(a: i64) -> CatalogName {
    match a {
        0 => CatalogName::R,
        a if a > 0 && a % 2 == 0 => CatalogName::BracketZ2,
        _ => CatalogName::Zero,
    }
}

/// The `a + Λ` column: group cohomology with sign-twisted coefficients.
fn twisted(a: i64) -> CatalogName {
    if a >= 0 && a % 2 == 0 {
        CatalogName::BracketZ2
    } else {
        CatalogName::Zero
    }
}

#[test]
fn twenty_cells_reproduce_both_columns() {
    for (twist, expected) in [
        (Twist::Integer, untwisted as fn(i64) -> CatalogName),
        (Twist::Lambda, twisted),
    ] {
        let report = verify_ep_table(20, twist, 0..=16).unwrap();
        assert_eq!(report.rows.len(), 17);
        for row in &report.rows {
            assert_eq!(
                row.computed,
                Some(expected(row.degree.a)),
                "{twist:?} at {:?}",
                row.degree
            );
            assert!(row.matches());
        }
    }
}

#[test]
fn the_whole_stable_band_matches() {
    for cells in [2, 3, 7, 12] {
        for twist in [Twist::Integer, Twist::Lambda] {
            let limit = stable_limit(cells, twist);
            if limit < -twist.b() {
                continue;
            }
            let r = verify_ep_table(cells, twist, -twist.b()..=limit).unwrap();
            assert!(r.passed(), "{cells} cells {twist:?}: {:?}", r.mismatches());
        }
    }
}

#[test]
fn the_top_cell_is_refused() {
    let top = stable_limit(20, Twist::Integer) + 1;
    assert!(matches!(
        verify_ep_table(20, Twist::Integer, 0..=top),
        Err(Error::UnstableRange(_))
    ));
    assert!(matches!(
        verify_ep_table(20, Twist::Lambda, -2..=0),
        Err(Error::UnstableRange(_))
    ));
}

#[test]
fn top_level_maps_alternate_between_zero_and_two() {
    let untwisted = top_level_differentials(&sphere_antipodal_complex(20, Twist::Integer));
    let twisted = top_level_differentials(&sphere_antipodal_complex(20, Twist::Lambda));
    assert_eq!(untwisted.len(), 19);
    for (i, (u, t)) in untwisted.iter().zip(&twisted).enumerate() {
        assert_eq!(*u, if i % 2 == 0 { 0 } else { 2 });
        assert_eq!(*u + *t, 2);
    }
}

#[test]
fn level_e_is_acyclic_below_the_top() {
    let r = level_e_crosscheck(20);
    assert!(r.passed(), "{r:?}");
    assert!(r.augmented_defects.is_empty());
}

use std::io::Write;
use std::path::{Path, PathBuf};

use evohab::catalog::{
    load_catalog, select_planets, to_planet_params, CatalogError, ColumnMapping, PlanetRecord,
    EARTH_MEAN_SURFACE_TEMP_K,
};
use proptest::prelude::*;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/trappist.csv")
}

#[test]
fn fixture_loads_cleanly() {
    let (records, report) = load_catalog(&fixture(), &ColumnMapping::default()).unwrap();
    assert_eq!(report.loaded, 7);
    assert!(report.skipped.is_empty());
    assert_eq!(report.total_rows(), 7);
    for r in &records {
        let p = to_planet_params(r, EARTH_MEAN_SURFACE_TEMP_K).unwrap();
        p.validate().unwrap();
    }
}

#[test]
fn loading_twice_is_identical() {
    let a = load_catalog(&fixture(), &ColumnMapping::default()).unwrap();
    let b = load_catalog(&fixture(), &ColumnMapping::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn selection_examples() {
    let (records, _) = load_catalog(&fixture(), &ColumnMapping::default()).unwrap();
    let one = select_planets(&records, &["TRAPPIST-1 b".into()]);
    assert_eq!(one.found.len(), 1);
    let folded = select_planets(&records, &["trappist-1 B".into()]);
    assert_eq!(folded.found, one.found);
    let missing = select_planets(&records, &["Nonexistent-9 z".into()]);
    assert!(missing.found.is_empty());
    assert_eq!(missing.not_found, vec!["Nonexistent-9 z".to_string()]);
    let ordered = select_planets(&records, &["Proxima Cen b".into(), "TRAPPIST-1 e".into()]);
    assert_eq!(ordered.found[0].name, "Proxima Cen b");
    assert_eq!(ordered.found[1].name, "TRAPPIST-1 e");
}

#[test]
fn remapped_headers_with_earth_unit_temperature() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "name,r,rho,v_esc,t_eu").unwrap();
    writeln!(file, "Alpha,1.1,0.9,1.05,0.95").unwrap();
    let mut mapping = ColumnMapping::default();
    for kv in [
        "name=name",
        "radius=r",
        "density=rho",
        "escape_velocity=v_esc",
        "surface_temp_eu=t_eu",
        "surface_temp_kelvin=",
    ] {
        mapping.apply(kv).unwrap();
    }
    let (records, _) = load_catalog(file.path(), &mapping).unwrap();
    let p = to_planet_params(&records[0], EARTH_MEAN_SURFACE_TEMP_K).unwrap();
    assert_eq!(
        (p.radius, p.density, p.escape_velocity, p.surface_temp),
        (1.1, 0.9, 1.05, 0.95)
    );
}

#[test]
fn mapping_file_is_applied() {
    let mut map = tempfile::NamedTempFile::new().unwrap();
    writeln!(map, "# custom export\nradius = R_EU\n\ndensity=D_EU").unwrap();
    let mut mapping = ColumnMapping::default();
    mapping.apply_file(map.path()).unwrap();
    assert_eq!(mapping.radius, "R_EU");
    assert_eq!(mapping.density, "D_EU");
    assert!(matches!(
        load_catalog(&fixture(), &mapping),
        Err(CatalogError::MalformedHeader { .. })
    ));
}

fn record() -> impl Strategy<Value = PlanetRecord> {
    (0.01f64..50.0, 0.01f64..50.0, 0.01f64..50.0, 10.0f64..2000.0).prop_map(|(r, d, v, t)| {
        PlanetRecord {
            name: "X".into(),
            radius_eu: Some(r),
            density_eu: Some(d),
            escape_velocity_eu: Some(v),
            surface_temp_kelvin: Some(t),
            surface_temp_eu: None,
        }
    })
}

proptest! {
    #[test]
    fn conversion_is_deterministic_and_positive(r in record()) {
        let before = r.clone();
        let a = to_planet_params(&r, EARTH_MEAN_SURFACE_TEMP_K).unwrap();
        let b = to_planet_params(&r, EARTH_MEAN_SURFACE_TEMP_K).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(&r, &before);
        prop_assert!(a.radius > 0.0 && a.density > 0.0 && a.escape_velocity > 0.0 && a.surface_temp > 0.0);
        prop_assert_eq!(a.surface_temp, r.surface_temp_kelvin.unwrap() / EARTH_MEAN_SURFACE_TEMP_K);
    }

    #[test]
    fn name_matching_ignores_case_and_spacing(upper in proptest::collection::vec(any::<bool>(), 12), pad in 1usize..4) {
        let records = vec![PlanetRecord { name: "TRAPPIST-1 b".into(), ..record_fixed() }];
        let mangled: String = "TRAPPIST-1 b"
            .chars()
            .zip(upper.iter().cycle())
            .map(|(c, &u)| if c == ' ' { " ".repeat(pad) } else if u { c.to_uppercase().to_string() } else { c.to_lowercase().to_string() })
            .collect();
        let s = select_planets(&records, &[format!("  {mangled} ")]);
        prop_assert_eq!(s.found.len(), 1);
    }
}

fn record_fixed() -> PlanetRecord {
    PlanetRecord {
        name: String::new(),
        radius_eu: Some(1.0),
        density_eu: Some(1.0),
        escape_velocity_eu: Some(1.0),
        surface_temp_kelvin: Some(288.0),
        surface_temp_eu: None,
    }
}

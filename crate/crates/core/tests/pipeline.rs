use golden_core::code::export::{export_matrix, import_matrix, MatrixFormat};
use golden_core::code::build_toric_code;
use golden_core::decode::{monte_carlo, summarize, CellComplex, DecoderConfig, DecodingContext, NoiseModel, Pauli};
use golden_core::group::{read_cache, toric_group, write_cache, Tessellation};

#[test]
fn exported_matrices_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let code = build_toric_code(5).unwrap();
    for format in [MatrixFormat::MatrixMarket, MatrixFormat::Alist] {
        let path = dir.path().join("hx");
        export_matrix(&code.hx, format, &path).unwrap();
        assert_eq!(import_matrix(format, &path).unwrap(), code.hx);
    }
}

#[test]
fn decoding_from_a_cached_tessellation() {
    let dir = tempfile::tempdir().unwrap();
    let g = toric_group(6).unwrap();
    let t = Tessellation::from_group(&g);
    let path = dir.path().join("t.gldc");
    write_cache(&path, "toric p=6", g.order() as u64, &t).unwrap();
    let cached = read_cache(&path).unwrap();
    assert_eq!(cached.group_order, g.order() as u64);
    assert_eq!(cached.tessellation.face_counts, t.face_counts);

    let complex = CellComplex::from_tessellation(&cached.tessellation).unwrap();
    let ctx = DecodingContext::new(complex, 1, DecoderConfig::default()).unwrap();
    for pauli in [Pauli::X, Pauli::Z] {
        let none = summarize(&monte_carlo(&ctx, pauli, NoiseModel::FixedWeight(0), 20, 1));
        assert_eq!(none.success_rate, 1.0);
        // Distance 6 corrects any two errors.
        let two = summarize(&monte_carlo(&ctx, pauli, NoiseModel::FixedWeight(2), 300, 5));
        assert_eq!(two.success_rate, 1.0, "{pauli}");
        assert!(two.max_syndrome_ratio <= 2.0);
    }
}

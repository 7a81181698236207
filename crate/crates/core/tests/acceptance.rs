//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any gating criterion fails. Criterion 10 is reported only.
//!
//! The golden code pipeline needs roughly 1 GB and a few minutes on one
//! core.

use std::f64::consts::PI;
use std::io::Write;
use std::time::Instant;

use golden_core::code::export::{to_alist, to_matrix_market};
use golden_core::code::{
    build_css_code, build_toric_code, gf2_rank, min_distance_brute, rate_lower_bound, CssCode, RankOutcome,
};
use golden_core::decode::lemma::{search_lemma_4d, SearchConfig};
use golden_core::decode::{
    monte_carlo, summarize, to_csv, verify_lemma_120cell, verify_lemma_2d, CellComplex, DecoderConfig,
    DecodingContext, NoiseModel, Pauli, Verdict,
};
use golden_core::geometry::bounds::golden_translation_length;
use golden_core::geometry::{
    coxeter_generators, conjugate_by_p, dihedral_angle, translation_generators, verify_coxeter_relations, Matrix,
    Metric, DIAGRAM_4335,
};
use golden_core::group::{enumerate_group, reduced_generators, Tessellation};
use golden_core::{GoldenInt, PrincipalIdeal, QuarticInt};

struct Outcome {
    id: &'static str,
    gating: bool,
    pass: bool,
    detail: String,
}

fn record(out: &mut Vec<Outcome>, id: &'static str, gating: bool, start: Instant, result: Result<String, String>) {
    let (pass, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let line = format!(
        "{} criterion {id}: {detail} ({:.1} s)",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    // Written past the test harness's capture so the summary always shows.
    let _ = writeln!(std::io::stdout().lock(), "{line}");
    out.push(Outcome { id, gating, pass, detail: line });
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(a: i64, b: i64) -> QuarticInt {
    QuarticInt::from(&GoldenInt::new(a, b))
}

fn exact_identities() -> Result<String, String> {
    for metric in [Metric::J, Metric::JTilde] {
        let gens = coxeter_generators(metric);
        let report = verify_coxeter_relations(&gens, &DIAGRAM_4335);
        ensure(report.all_hold(), format!("{metric:?} relation fails: {:?}", report.first_failure()))?;
        let m = metric.matrix();
        ensure(gens.iter().all(|g| g.preserves(&m)), format!("a {metric:?} generator moves the form"))?;
    }
    let j = Metric::J.matrix();
    for (k, (g, g_inv)) in translation_generators().iter().enumerate() {
        ensure(g.preserves(&j) && g_inv.preserves(&j), format!("g{} is not an isometry", k + 1))?;
    }
    // r₄ for J̃, written out: the reflection mixes coordinates 0 and 4 only.
    let mut listed = Matrix::identity(5);
    for (r, c, v) in [(0, 0, q(0, 1)), (0, 4, q(-1, 0)), (4, 0, q(0, 1)), (4, 4, q(0, -1))] {
        listed.set(r, c, v);
    }
    let plain = coxeter_generators(Metric::J);
    ensure(conjugate_by_p(&plain[4]) == listed, "P⁻¹·r₄·P differs from the listed r₄ for J̃")?;
    ensure(coxeter_generators(Metric::JTilde)[4] == listed, "J̃ generator r₄ differs from the listed matrix")?;
    Ok("15 relations in both metrics, g1..g4 preserve J, five J̃ generators preserve J̃, r4 conjugates".into())
}

fn geometry() -> Result<String, String> {
    let t = 2.0 * (2.0 * PI / 5.0).cos().sqrt().asinh();
    let angle = dihedral_angle(t);
    ensure((angle - 2.0 * PI / 5.0).abs() < 1e-12, format!("dihedral angle {angle}"))?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    ensure((t.cosh() - phi).abs() < 1e-12, format!("cosh t = {}", t.cosh()))?;
    ensure((golden_translation_length() - t).abs() < 1e-15, "translation length helper disagrees")?;
    Ok(format!("angle = {angle:.15}, cosh t = {:.15}", t.cosh()))
}

struct GoldenBuild {
    order: usize,
    tessellation: Tessellation,
    code: CssCode,
}

fn build_golden() -> Result<GoldenBuild, String> {
    let group = enumerate_group(&PrincipalIdeal::sqrt5()).map_err(|e| e.to_string())?;
    let order = group.order();
    let tessellation = Tessellation::from_group(&group);
    drop(group);
    let code = build_css_code(&tessellation, "sqrt5").map_err(|e| e.to_string())?;
    Ok(GoldenBuild { order, tessellation, code })
}

fn group_enumeration(b: &GoldenBuild) -> Result<String, String> {
    ensure(b.order == 18_720_000, format!("|G| = {}", b.order))?;
    let two = PrincipalIdeal::from_int(2).map_err(|e| e.to_string())?;
    let rejection = reduced_generators(&two).err().ok_or("ideal (2) was accepted")?;
    Ok(format!("|G| = 18720000; (2) rejected: {rejection}"))
}

fn tessellation(b: &GoldenBuild) -> Result<String, String> {
    let t = &b.tessellation;
    ensure(t.face_counts == [1300, 78_000, 234_000, 195_000, 48_750], format!("face counts {:?}", t.face_counts))?;
    let n = b.code.n;
    ensure(n == 234_000, format!("n = {n}"))?;
    let chi = t.euler_characteristic();
    ensure(chi == 11_050 && 360 * chi == 17 * n as i64, format!("χ = {chi}"))?;
    let k = rate_lower_bound(chi, n).k_min;
    ensure(k == 11_048, format!("k ≥ {k}"))?;
    Ok(format!("faces {:?}, n = {n}, χ = {chi}, k ≥ {k}", t.face_counts))
}

fn css_validity(code: &CssCode) -> Result<String, String> {
    // Independent of the overlap scan used at construction.
    let product = code.hx.mul(&code.hz.transpose()).map_err(|e| e.to_string())?;
    ensure(product.is_zero(), "H_X·H_Zᵀ ≠ 0")?;
    ensure(code.hx.odd_overlaps(&code.hz).is_empty(), "odd overlap between checks")?;
    let w = code.weights();
    let single = |m: &std::collections::BTreeMap<usize, usize>| -> Option<usize> {
        (m.len() == 1).then(|| *m.keys().next().expect("one key"))
    };
    let got = [single(&w.hx_rows), single(&w.hz_rows), single(&w.hx_cols), single(&w.hz_cols)];
    ensure(got == [Some(12), Some(6), Some(4), Some(5)], format!("weights {w:?}"))?;
    Ok(format!("H_X·H_Zᵀ = 0 over {} columns; rows 12/6, columns 4/5", code.n))
}

fn toric_oracles() -> Result<String, String> {
    let mut found = Vec::new();
    for (p, expect) in [(2, [8, 2, 2]), (3, [18, 2, 3])] {
        let code = build_toric_code(p).map_err(|e| e.to_string())?;
        let rank = |m| gf2_rank(m, None).rank().expect("unbudgeted");
        let k = code.n - rank(&code.hx) - rank(&code.hz);
        let d = min_distance_brute(&code).map_err(|e| e.to_string())?.distance().ok_or("no logicals")?;
        let got = [code.n, k, d];
        ensure(got == expect, format!("p = {p}: [[{}, {}, {}]]", got[0], got[1], got[2]))?;
        found.push(format!("[[{}, {}, {}]]", got[0], got[1], got[2]));
    }
    Ok(found.join(", "))
}

const DECODE_TRIALS: u64 = 1000;
const DECODE_SEED: u64 = 2024;

fn decoder_properties(ctx: &DecodingContext) -> Result<String, String> {
    let mut total = 0;
    for pauli in [Pauli::Z, Pauli::X] {
        let per_qubit = match pauli {
            Pauli::Z => 4.0,
            Pauli::X => 5.0,
        };
        for w in 1..=5 {
            // Per-trial syndrome bounds and the shrinking syndrome are
            // asserted inside the decoder; a violation panics.
            let records = monte_carlo(ctx, pauli, NoiseModel::FixedWeight(w), DECODE_TRIALS, DECODE_SEED + w as u64);
            let s = summarize(&records);
            let failures: Vec<_> = records.iter().filter(|r| r.verdict != Verdict::Success).take(3).collect();
            ensure(failures.is_empty(), format!("{pauli} weight {w}: rate {} ({failures:?})", s.success_rate))?;
            ensure(s.max_syndrome_ratio <= per_qubit, format!("{pauli} weight {w}: ratio {}", s.max_syndrome_ratio))?;
            ensure(records.iter().all(|r| r.iterations <= r.syndrome_weight), "more iterations than syndrome")?;
            total += records.len();
        }
    }
    Ok(format!("{total} trials, all verdict success"))
}

fn lemma_2d() -> Result<String, String> {
    let r = verify_lemma_2d().map_err(|e| e.to_string())?;
    ensure(r.passed() && r.checked > 0, r.to_string())?;
    Ok(format!("{} path classes of length 4, no counterexample", r.checked))
}

fn lemma_120cell() -> Result<String, String> {
    let r = verify_lemma_120cell().map_err(|e| e.to_string())?;
    ensure(r.details.get("vertices") == Some(&600) && r.details.get("edges") == Some(&1200), format!("{:?}", r.details))?;
    ensure(r.passed() && r.checked > 0, r.to_string())?;
    Ok(format!("{} pairs on the 600/1200 skeleton, all shorter outside", r.checked))
}

fn budgeted(code: &CssCode) -> Result<String, String> {
    let config = SearchConfig { max_len: 3, budget: 200 };
    let a = search_lemma_4d(config).map_err(|e| e.to_string())?;
    let b = search_lemma_4d(config).map_err(|e| e.to_string())?;
    ensure(a == b, "search is not deterministic")?;
    let budget = Some(2_000_000);
    let r1 = gf2_rank(&code.hz, budget);
    let r2 = gf2_rank(&code.hz, budget);
    ensure(r1 == r2, "rank progress is not deterministic")?;
    let rank = match r1 {
        RankOutcome::Complete { rank } => format!("rank(H_Z) = {rank}"),
        RankOutcome::BudgetExceeded { rows_done, rank_so_far, .. } => {
            format!("rank(H_Z) budget hit after {rows_done} rows (rank so far {rank_so_far})")
        }
    };
    Ok(format!(
        "search depth {} with {} containment tests ({}), {rank}",
        a.details.get("depth_exhausted").copied().unwrap_or(0),
        a.checked,
        if a.budget_exhausted { "budget exhausted" } else { "within budget" }
    ))
}

fn matrices_bytes(code: &CssCode) -> Vec<String> {
    vec![to_matrix_market(&code.hx), to_matrix_market(&code.hz), to_alist(&code.hx), to_alist(&code.hz)]
}

fn determinism(first: &CssCode, ctx: &DecodingContext) -> Result<String, String> {
    let again = build_golden()?;
    ensure(matrices_bytes(first) == matrices_bytes(&again.code), "golden matrices differ between builds")?;
    drop(again);
    let toric = |p| build_toric_code(p).map(|c| matrices_bytes(&c)).map_err(|e| e.to_string());
    ensure(toric(3)? == toric(3)?, "toric matrices differ between builds")?;
    let csv = || to_csv(&monte_carlo(ctx, Pauli::Z, NoiseModel::Iid(2e-5), 200, 42));
    ensure(csv() == csv(), "decode CSVs differ between runs")?;
    Ok("rebuilt matrices and repeated CSVs are byte-identical".into())
}

#[test]
fn acceptance() {
    let mut out = Vec::new();
    let t = Instant::now();
    record(&mut out, "1", true, t, exact_identities());
    let t = Instant::now();
    record(&mut out, "2", true, t, geometry());

    let t = Instant::now();
    let build = build_golden();
    match &build {
        Ok(b) => {
            record(&mut out, "3", true, t, group_enumeration(b));
            let t = Instant::now();
            record(&mut out, "4", true, t, tessellation(b));
            let t = Instant::now();
            record(&mut out, "5", true, t, css_validity(&b.code));
        }
        Err(e) => {
            for id in ["3", "4", "5"] {
                record(&mut out, id, true, t, Err(format!("build failed: {e}")));
            }
        }
    }
    let t = Instant::now();
    record(&mut out, "6", true, t, toric_oracles());

    let t = Instant::now();
    let ctx = build.as_ref().map_err(Clone::clone).and_then(|b| {
        let complex = CellComplex::from_tessellation(&b.tessellation).map_err(|e| e.to_string())?;
        DecodingContext::new(complex, 2, DecoderConfig::default()).map_err(|e| e.to_string())
    });
    record(&mut out, "7", true, t, ctx.as_ref().map_err(Clone::clone).and_then(decoder_properties));

    let t = Instant::now();
    record(&mut out, "8", true, t, lemma_2d());
    let t = Instant::now();
    record(&mut out, "9", true, t, lemma_120cell());
    let t = Instant::now();
    let r10 = build.as_ref().map_err(Clone::clone).and_then(|b| budgeted(&b.code));
    record(&mut out, "10", false, t, r10);

    let t = Instant::now();
    let r11 = match (&build, &ctx) {
        (Ok(b), Ok(ctx)) => determinism(&b.code, ctx),
        _ => Err("golden build unavailable".into()),
    };
    record(&mut out, "11", true, t, r11);

    let failed: Vec<&str> = out.iter().filter(|o| o.gating && !o.pass).map(|o| o.id).collect();
    if !failed.is_empty() {
        for o in out.iter().filter(|o| !o.pass) {
            eprintln!("{}", o.detail);
        }
        panic!("failing criteria: {failed:?}");
    }
}

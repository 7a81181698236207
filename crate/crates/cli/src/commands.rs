use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use golden_core::code::export::{export_matrix, import_matrix, MatrixFormat};
use golden_core::code::{
    build_css_code, build_toric_code, gf2_rank, rate_lower_bound, CodeMetadata, CssCode, RankOutcome,
};
use golden_core::decode::lemma::{search_lemma_4d, SearchConfig};
use golden_core::decode::{
    monte_carlo, summarize, to_csv, verify_lemma_120cell, verify_lemma_2d, CellComplex, DecoderConfig,
    DecodingContext, LemmaReport, NoiseModel, Pauli,
};
use golden_core::geometry::bounds::golden_translation_length;
use golden_core::geometry::{
    coxeter_generators, dihedral_angle, translation_generators, verify_coxeter_relations, Metric, DIAGRAM_4335,
};
use golden_core::group::{enumerate_group, read_cache, toric_group, write_cache, Tessellation};
use golden_core::{Error as CoreError, GoldenInt, PrincipalIdeal};

use crate::ideal::parse_ideal;
use crate::manifest::RunManifest;

pub const CACHE_FILE: &str = "tessellation.gldc";

/// Bad arguments or inputs; exits with code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Failure,
    BudgetExhausted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Failure => 1,
            Status::BudgetExhausted => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Rings,
    Geometry,
    Relations,
    All,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub scope: Scope,
}

struct Row {
    scope: &'static str,
    check: String,
    value: String,
    ok: bool,
}

fn ring_rows(rows: &mut Vec<Row>) {
    let sqrt5 = PrincipalIdeal::sqrt5();
    let phi = sqrt5.reduce(&GoldenInt::phi());
    let ok = phi == sqrt5.reduce(&GoldenInt::from_int(3));
    rows.push(Row { scope: "rings", check: "φ mod (√5)".into(), value: "φ ↦ 3 in F5".into(), ok });
    rows.push(Row {
        scope: "rings",
        check: "N(√5)".into(),
        value: sqrt5.norm().to_string(),
        ok: sqrt5.norm() == &5.into(),
    });
    let phi2 = GoldenInt::phi().pow(2);
    let ok = phi2 == &GoldenInt::phi() + &GoldenInt::one();
    rows.push(Row { scope: "rings", check: "φ² = φ + 1".into(), value: phi2.to_string(), ok });
    for m in [2i64, 3, 4] {
        let ideal = PrincipalIdeal::from_int(m).expect("nonzero");
        let size = ideal.quotient_ring(256).map(|r| r.size()).unwrap_or(0);
        rows.push(Row {
            scope: "rings",
            check: format!("|Z[φ]/({m})|"),
            value: size.to_string(),
            ok: size as i64 == m * m,
        });
    }
}

fn geometry_rows(rows: &mut Vec<Row>) {
    let t = golden_translation_length();
    let angle = dihedral_angle(t);
    rows.push(Row {
        scope: "geometry",
        check: "dihedral angle".into(),
        value: format!("{angle:.15} (2π/5 = {:.15})", 2.0 * PI / 5.0),
        ok: (angle - 2.0 * PI / 5.0).abs() < 1e-12,
    });
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    rows.push(Row {
        scope: "geometry",
        check: "cosh t".into(),
        value: format!("{:.15} (φ = {phi:.15})", t.cosh()),
        ok: (t.cosh() - phi).abs() < 1e-12,
    });
}

fn relation_rows(rows: &mut Vec<Row>) {
    for metric in [Metric::J, Metric::JTilde] {
        let gens = coxeter_generators(metric);
        let report = verify_coxeter_relations(&gens, &DIAGRAM_4335);
        for c in &report.checks {
            let check = if c.i == c.j {
                format!("{metric:?}: r{}^2", c.i)
            } else {
                format!("{metric:?}: (r{} r{})^{}", c.i, c.j, c.order)
            };
            rows.push(Row { scope: "relations", check, value: "id".into(), ok: c.holds && c.exact });
        }
        let form = metric.matrix();
        let ok = gens.iter().all(|g| g.preserves(&form));
        rows.push(Row { scope: "relations", check: format!("{metric:?}: rᵀ·M·r = M"), value: "5 generators".into(), ok });
    }
    let j = Metric::J.matrix();
    for (k, (g, g_inv)) in translation_generators().iter().enumerate() {
        let ok = g.preserves(&j) && g_inv.preserves(&j) && g.mul(g_inv).is_identity();
        rows.push(Row { scope: "relations", check: format!("g{}ᵀ·J·g{} = J", k + 1, k + 1), value: "exact".into(), ok });
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Status> {
    let mut rows = Vec::new();
    let all = args.scope == Scope::All;
    if all || args.scope == Scope::Rings {
        ring_rows(&mut rows);
    }
    if all || args.scope == Scope::Geometry {
        geometry_rows(&mut rows);
    }
    if all || args.scope == Scope::Relations {
        relation_rows(&mut rows);
    }
    println!("{:<10} {:<28} {:<44} result", "scope", "check", "value");
    for r in &rows {
        println!("{:<10} {:<28} {:<44} {}", r.scope, r.check, r.value, if r.ok { "pass" } else { "FAIL" });
    }
    Ok(if rows.iter().all(|r| r.ok) { Status::Pass } else { Status::Failure })
}

#[derive(Args, Debug, Serialize)]
pub struct BuildArgs {
    /// `sqrt5`, an integer `m`, or `a,b` for the generator `a + bφ`.
    #[arg(long)]
    pub ideal: String,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Reuse this tessellation cache when it exists and matches the ideal.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

fn write_code(out: &Path, code: &CssCode, t: &Tessellation, group_order: usize, k: i64) -> Result<CodeMetadata> {
    for (name, m) in [("hx", &code.hx), ("hz", &code.hz)] {
        export_matrix(m, MatrixFormat::MatrixMarket, &out.join(format!("{name}.mtx")))?;
        export_matrix(m, MatrixFormat::Alist, &out.join(format!("{name}.alist")))?;
    }
    let w = code.weights();
    let meta = CodeMetadata {
        ideal: code.provenance.source.clone(),
        group_order,
        face_counts: t.face_counts.clone(),
        n: code.n,
        chi: t.euler_characteristic(),
        k_lower_bound: k,
        row_weights: [("hx".to_string(), w.hx_rows), ("hz".to_string(), w.hz_rows)].into(),
        col_weights: [("hx".to_string(), w.hx_cols), ("hz".to_string(), w.hz_cols)].into(),
    };
    fs::write(out.join("meta.json"), serde_json::to_string_pretty(&meta)? + "\n")?;
    Ok(meta)
}

fn usage_if_inadmissible(e: CoreError) -> anyhow::Error {
    match e {
        CoreError::Inadmissible { .. } | CoreError::ZeroIdeal | CoreError::NormTooLarge { .. } => {
            Usage(e.to_string()).into()
        }
        other => other.into(),
    }
}

pub fn build(args: &BuildArgs, manifest: &mut RunManifest) -> Result<Status> {
    let ideal = parse_ideal(&args.ideal).map_err(Usage)?;
    let source = ideal.to_string();
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let out_cache = args.out.join(CACHE_FILE);
    let reused = match &args.cache {
        Some(path) if path.exists() => {
            let cached = read_cache(path)?;
            manifest.cache_paths.push(path.clone());
            (cached.source == source).then_some((cached.group_order as usize, cached.tessellation))
        }
        _ => None,
    };
    let (order, t) = match reused {
        Some(found) => found,
        None => {
            let group = enumerate_group(&ideal).map_err(usage_if_inadmissible)?;
            let order = group.order();
            let t = Tessellation::from_group(&group);
            (order, t)
        }
    };
    write_cache(&out_cache, &source, order as u64, &t)?;
    manifest.cache_paths.push(out_cache);
    if let Some(path) = &args.cache {
        if !path.exists() {
            write_cache(path, &source, order as u64, &t)?;
            manifest.cache_paths.push(path.clone());
        }
    }
    let code = build_css_code(&t, &source)?;
    let chi = t.euler_characteristic();
    let k = rate_lower_bound(chi, code.n).k_min;
    let meta = write_code(&args.out, &code, &t, order, k)?;
    println!("ideal {source}: group order {}, faces {:?}", meta.group_order, meta.face_counts);
    println!("n = {}, χ = {chi}, k ≥ {k}", meta.n);
    Ok(Status::Pass)
}

#[derive(Args, Debug, Serialize)]
pub struct ToricArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

pub fn toric(args: &ToricArgs, manifest: &mut RunManifest) -> Result<Status> {
    if args.p < 2 {
        return Err(Usage(format!("--p must be at least 2, got {}", args.p)).into());
    }
    fs::create_dir_all(&args.out)?;
    let group = toric_group(args.p)?;
    let t = Tessellation::from_group(&group);
    let code = build_toric_code(args.p)?;
    let rank = |m| gf2_rank(m, None).rank().expect("no budget");
    let k = (code.n - rank(&code.hx) - rank(&code.hz)) as i64;
    let cache = args.out.join(CACHE_FILE);
    write_cache(&cache, &code.provenance.source, group.order() as u64, &t)?;
    manifest.cache_paths.push(cache);
    let meta = write_code(&args.out, &code, &t, group.order(), k)?;
    println!("toric p = {}: n = {}, k = {k}", args.p, meta.n);
    Ok(Status::Pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PauliArg {
    X,
    Z,
}

#[derive(Args, Debug, Serialize)]
#[command(group = clap::ArgGroup::new("model").required(true).args(["weight", "p"]))]
pub struct DecodeArgs {
    /// Directory written by `build` or `toric`.
    #[arg(long, default_value = "out")]
    pub code: PathBuf,
    #[arg(long, value_enum, default_value = "z")]
    pub pauli: PauliArg,
    /// Errors of exactly this many qubits.
    #[arg(long)]
    pub weight: Option<usize>,
    /// Independent errors with this probability per qubit.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV path; defaults to `decode.csv` in the code directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl DecodeArgs {
    pub fn csv_path(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| self.code.join("decode.csv"))
    }
}

pub fn decode(args: &DecodeArgs, manifest: &mut RunManifest) -> Result<Status> {
    let model = match (args.weight, args.p) {
        (Some(w), _) => NoiseModel::FixedWeight(w),
        (None, Some(p)) if (0.0..=1.0).contains(&p) => NoiseModel::Iid(p),
        (None, p) => return Err(Usage(format!("--p must lie in [0, 1], got {p:?}")).into()),
    };
    let cache = args.code.join(CACHE_FILE);
    let cached = read_cache(&cache).with_context(|| format!("reading {}; run build or toric first", cache.display()))?;
    manifest.cache_paths.push(cache);
    manifest.seeds.push(args.seed);
    let t = cached.tessellation;
    // Qubits sit on the middle dimension.
    let qubit_dim = (t.face_counts.len() - 1) / 2;
    let ctx = DecodingContext::new(CellComplex::from_tessellation(&t)?, qubit_dim, DecoderConfig::default())?;
    drop(t);
    let pauli = match args.pauli {
        PauliArg::X => Pauli::X,
        PauliArg::Z => Pauli::Z,
    };
    let records = monte_carlo(&ctx, pauli, model, args.trials, args.seed);
    let csv = args.csv_path();
    fs::write(&csv, to_csv(&records)).with_context(|| format!("writing {}", csv.display()))?;
    let summary = summarize(&records);
    println!("{}", serde_json::to_string(&summary)?);
    Ok(Status::Pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Lemma {
    #[value(name = "2d")]
    #[serde(rename = "2d")]
    Plane,
    #[value(name = "120cell")]
    #[serde(rename = "120cell")]
    Cell120,
    #[value(name = "search4d")]
    #[serde(rename = "search4d")]
    Search4d,
}

#[derive(Args, Debug, Serialize)]
pub struct LemmaArgs {
    #[arg(long, value_enum)]
    pub which: Lemma,
    /// Cone containment tests allowed; required for `search4d`.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Path length at which surviving prefixes count as counterexamples.
    #[arg(long, default_value_t = 8)]
    pub max_len: usize,
}

fn lemma_status(r: &LemmaReport) -> Status {
    if r.budget_exhausted {
        Status::BudgetExhausted
    } else if r.passed() {
        Status::Pass
    } else {
        Status::Failure
    }
}

pub fn lemma(args: &LemmaArgs) -> Result<Status> {
    let report = match args.which {
        Lemma::Plane => verify_lemma_2d()?,
        Lemma::Cell120 => verify_lemma_120cell()?,
        Lemma::Search4d => {
            let budget = args.budget.ok_or_else(|| {
                Usage("search4d can run for a very long time; pass --budget N to cap the number of cone tests".into())
            })?;
            search_lemma_4d(SearchConfig { max_len: args.max_len, budget })?
        }
    };
    print!("{report}");
    Ok(lemma_status(&report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WhichMatrix {
    Hx,
    Hz,
}

#[derive(Args, Debug, Serialize)]
pub struct RankArgs {
    #[arg(long, default_value = "out")]
    pub code: PathBuf,
    #[arg(long, value_enum, default_value = "hx")]
    pub matrix: WhichMatrix,
    /// Word operations allowed in the elimination.
    #[arg(long)]
    pub budget: Option<u64>,
}

pub fn rank(args: &RankArgs) -> Result<Status> {
    let budget = args.budget.ok_or_else(|| {
        Usage("rank of large matrices can take hours; pass --budget N to cap the word operations".into())
    })?;
    let name = match args.matrix {
        WhichMatrix::Hx => "hx",
        WhichMatrix::Hz => "hz",
    };
    let path = args.code.join(format!("{name}.mtx"));
    let m = import_matrix(MatrixFormat::MatrixMarket, &path).with_context(|| format!("reading {}", path.display()))?;
    let outcome = gf2_rank(&m, Some(budget));
    println!("{}", serde_json::to_string(&outcome)?);
    Ok(match outcome {
        RankOutcome::Complete { .. } => Status::Pass,
        RankOutcome::BudgetExceeded { .. } => Status::BudgetExhausted,
    })
}

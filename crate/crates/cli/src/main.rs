mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fusionring::cache::DiskCache;
use fusionring::comb::{AlcoveVector, TypeAComb, TypeCComb};
use fusionring::fusionring::DEFAULT_TABLE_CAP;
use fusionring::idealpres::{IdealContext, VerificationStatus, DEFAULT_MATRIX_CAP};
use fusionring::selftest::{self, SelftestConfig, DEFAULT_SEED};
use fusionring::{
    AlcoveData, CartanType, CharRing, Error, FusionRing, GlAlcove, GlFusionRing, GlWeight, RootSystem, Weight,
};

use output::*;

#[derive(Parser)]
#[command(name = "fusionring", version, about = "Fusion rings of quantum groups at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Root system type: A, B, C, D or G2.
    #[arg(long = "type", global = true)]
    ty: Option<String>,
    /// Rank; for type A this is n in gl_n / sl_n.
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Order of the root of unity.
    #[arg(long, global = true)]
    ell: Option<u64>,
    /// Type A: work on sl_n (the lambda_n = 0 transversal) instead of gl_n.
    #[arg(long, global = true)]
    sl: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached weight multiplicities.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Degree bound for ideal membership.
    #[arg(long, global = true)]
    bound: Option<i64>,
    /// Size cap for tables and membership windows.
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Selftest: run the reduced suite.
    #[arg(long, global = true)]
    quick: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Level, affine wall and basis of the fundamental alcove.
    Alcove,
    /// Dominant weight multiplicities of L(lambda).
    Mult {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Fusion product of two alcove weights.
    Product {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// The full fusion table.
    Table,
    /// Product through the non-commutative operators (types A and C).
    NcProduct {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Compare the operator table with the fusion table.
    Compare {
        #[arg(long, default_value = "fusion")]
        against: String,
    },
    /// Minimal dominant weights outside the alcove.
    IdealMin,
    /// Generators of a presentation preset.
    IdealGens {
        #[arg(long)]
        preset: Option<String>,
    },
    /// Certify a preset: kernel check and equivalence with the canonical generators.
    IdealVerify {
        #[arg(long)]
        preset: Option<String>,
    },
    /// Check the G2 character recursions (3 | ell).
    G2Check,
    /// Run the acceptance suite.
    Selftest,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Exit codes: 0 success, 1 refuted or failed, 2 usage, 3 inconclusive or unsupported.
#[derive(Clone, Copy)]
enum Outcome {
    Success,
    Failure,
    Inconclusive,
}

impl Outcome {
    fn of(status: &VerificationStatus) -> Self {
        match status {
            VerificationStatus::Verified => Outcome::Success,
            VerificationStatus::Refuted { .. } => Outcome::Failure,
            _ => Outcome::Inconclusive,
        }
    }

    fn code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Failure => 1,
            Outcome::Inconclusive => 3,
        }
    }
}

struct Ctx {
    common: Common,
    format: Format,
    sink: Box<dyn Write>,
}

impl Ctx {
    fn cartan_type(&self) -> CliResult<CartanType> {
        let s = self
            .common
            .ty
            .as_deref()
            .ok_or_else(|| CliError::Usage("--type is required".into()))?;
        CartanType::from_str(s).map_err(|_| CliError::Usage(format!("--type: unknown root system type {s:?}")))
    }

    /// Root system and, for type A, the n of gl_n.
    fn root_system(&self) -> CliResult<(Arc<RootSystem>, Option<usize>)> {
        let ty = self.cartan_type()?;
        let rank = match (ty, self.common.rank) {
            (CartanType::G2, None) => 2,
            (_, Some(r)) => r,
            _ => return Err(CliError::Usage("--rank is required".into())),
        };
        let (root_rank, n) = if ty == CartanType::A {
            if rank < 2 {
                return Err(CliError::Usage("--rank: type A needs n >= 2 (gl_n / sl_n)".into()));
            }
            (rank - 1, Some(rank))
        } else {
            (rank, None)
        };
        let rs = RootSystem::new(ty, root_rank).map_err(|e| CliError::Usage(format!("--type/--rank: {e}")))?;
        Ok((Arc::new(rs), n))
    }

    fn ell(&self) -> CliResult<u64> {
        self.common.ell.ok_or_else(|| CliError::Usage("--ell is required".into()))
    }

    fn chars(&self, rs: Arc<RootSystem>) -> CharRing {
        match &self.common.cache_dir {
            Some(dir) => CharRing::with_disk_cache(rs, Some(DiskCache::new(dir))),
            None => CharRing::new(rs),
        }
    }

    fn fusion(&self) -> CliResult<FusionRing> {
        let (rs, _) = self.root_system()?;
        let alcove = AlcoveData::new(rs.clone(), self.ell()?).map_err(usage("--ell"))?;
        Ok(FusionRing::with_chars(Arc::new(alcove), Arc::new(self.chars(rs))))
    }

    /// Type A without --sl works in gl_n.
    fn gl(&self) -> CliResult<Option<usize>> {
        let (_, n) = self.root_system()?;
        Ok(n.filter(|_| !self.common.sl))
    }

    fn weight(&self, rs: &RootSystem, s: &str) -> CliResult<Weight> {
        let w = Weight::from_str(s).map_err(|_| CliError::Usage(format!("cannot parse weight {s:?}")))?;
        rs.check(&w).map_err(|e| CliError::Usage(format!("weight {s:?}: {e}")))?;
        Ok(w)
    }

    /// `eps:` coordinates, or omega-coordinates lifted with lambda_n = 0.
    fn gl_weight(&self, rs: &RootSystem, s: &str) -> CliResult<GlWeight> {
        if s.trim().starts_with("eps:") {
            let w = GlWeight::from_str(s).map_err(|_| CliError::Usage(format!("cannot parse weight {s:?}")))?;
            if w.n() != rs.rank() + 1 {
                return Err(CliError::Usage(format!("weight {s:?} needs {} eps-coordinates", rs.rank() + 1)));
            }
            Ok(w)
        } else {
            Ok(GlWeight::from_sl(&self.weight(rs, s)?))
        }
    }

    fn emit_json<T: serde::Serialize>(&mut self, value: &T) -> CliResult<()> {
        let text = serde_json::to_string_pretty(value).expect("output types serialize");
        writeln!(self.sink, "{text}")?;
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) -> CliResult<()> {
        writeln!(self.sink, "{}", s.as_ref())?;
        Ok(())
    }

    fn seed_line(&mut self) -> CliResult<()> {
        let seed = self.common.seed;
        self.line(format!("# seed {seed}"))
    }
}

fn usage(flag: &'static str) -> impl Fn(Error) -> CliError {
    move |e| match e {
        Error::AlcoveEmpty { .. } | Error::UnsupportedRootSystem { .. } => CliError::Usage(format!("{flag}: {e}")),
        other => CliError::Lib(other),
    }
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let format = if cli.common.json { Format::Json } else { cli.common.format };
    let sink: Box<dyn Write> = match &cli.common.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut ctx = Ctx {
        common: cli.common.clone(),
        format,
        sink,
    };
    let outcome = match cli.command {
        Command::Alcove => alcove(&mut ctx),
        Command::Mult { lambda } => mult(&mut ctx, &lambda),
        Command::Product { lambda, mu } => product(&mut ctx, &lambda, &mu),
        Command::Table => table(&mut ctx),
        Command::NcProduct { lambda, mu } => nc_product(&mut ctx, &lambda, &mu),
        Command::Compare { against } => compare(&mut ctx, &against),
        Command::IdealMin => ideal_min(&mut ctx),
        Command::IdealGens { preset } => ideal_gens(&mut ctx, preset),
        Command::IdealVerify { preset } => ideal_verify(&mut ctx, preset),
        Command::G2Check => g2_check(&mut ctx),
        Command::Selftest => selftest_cmd(&mut ctx),
    }?;
    ctx.sink.flush()?;
    Ok(outcome)
}

fn alcove(ctx: &mut Ctx) -> CliResult<Outcome> {
    let (rs, n) = ctx.root_system()?;
    let ell = ctx.ell()?;
    let gl_n = n.filter(|_| !ctx.common.sl);
    let (a, basis): (AlcoveData, Vec<Vec<i64>>) = match gl_n {
        Some(n) => {
            let gl = GlAlcove::new(n, ell).map_err(usage("--ell"))?;
            let b = gl.enumerate_transversal().into_iter().map(|w| w.0).collect();
            (gl.sl().clone(), b)
        }
        None => {
            let a = AlcoveData::new(rs.clone(), ell).map_err(usage("--ell"))?;
            let b = a.enumerate().into_iter().map(|w| w.0).collect();
            (a, b)
        }
    };
    let out = AlcoveOut {
        command: "alcove",
        root_system: rs.name(),
        ell,
        seed: ctx.common.seed,
        level: a.level(),
        wall_root: wall_name(&a),
        wall: a.wall(),
        theta_coroot: a.theta_coroot().0.clone(),
        transversal: gl_n.is_some(),
        coordinates: if gl_n.is_some() { "eps" } else { "omega" },
        size: basis.len(),
        basis,
    };
    match ctx.format {
        Format::Json => ctx.emit_json(&out)?,
        Format::Tsv => {
            ctx.seed_line()?;
            for w in &out.basis {
                ctx.line(join(w))?;
            }
        }
        Format::Text => {
            ctx.seed_line()?;
            ctx.line(format!("{} ell={} k={}", out.root_system, ell, out.level))?;
            ctx.line(format!("wall: <lambda+rho, {}^vee> < {}", out.wall_root, out.wall))?;
            let label = if out.transversal { "basis (gl_n transversal, eps-coordinates)" } else { "basis" };
            ctx.line(format!("{label}: {} weights", out.size))?;
            for w in &out.basis {
                let shown = if out.transversal { format!("eps:{}", join(w)) } else { join(w) };
                ctx.line(format!("  {shown}"))?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn mult(ctx: &mut Ctx, lambda: &str) -> CliResult<Outcome> {
    let (rs, _) = ctx.root_system()?;
    let lam = ctx.weight(&rs, lambda)?;
    if !lam.is_dominant() {
        return Err(CliError::Usage(format!("weight {lambda:?} is not dominant")));
    }
    let chars = ctx.chars(rs.clone());
    let ms = chars.weight_multiplicities(&lam)?;
    let out = MultOut {
        command: "mult",
        root_system: rs.name(),
        seed: ctx.common.seed,
        lambda: lam.0.clone(),
        dimension: chars.weyl_dimension(&lam)?.to_string(),
        dominant: ms
            .dominant()
            .iter()
            .map(|(w, &m)| WeightMult { weight: w.0.clone(), mult: m })
            .collect(),
    };
    match ctx.format {
        Format::Json => ctx.emit_json(&out)?,
        _ => {
            ctx.seed_line()?;
            if ctx.format == Format::Text {
                ctx.line(format!("L({}) in {}: dimension {}", lam, out.root_system, out.dimension))?;
            }
            for t in &out.dominant {
                ctx.line(format!("{}\t{}", join(&t.weight), t.mult))?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn emit_product(ctx: &mut Ctx, out: &ProductOut, prefix: &str) -> CliResult<()> {
    match ctx.format {
        Format::Json => ctx.emit_json(out),
        Format::Tsv => {
            ctx.seed_line()?;
            for t in &out.terms {
                let line = format!("{prefix}{}\t{prefix}{}\t{prefix}{}\t{}", join(&out.lambda), join(&out.mu), join(&t.nu), t.coeff);
                ctx.line(line)?;
            }
            Ok(())
        }
        Format::Text => {
            ctx.seed_line()?;
            let terms: Vec<String> = out
                .terms
                .iter()
                .map(|t| {
                    let w = format!("[{prefix}{}]", join(&t.nu));
                    if t.coeff == 1 { w } else { format!("{}*{w}", t.coeff) }
                })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            ctx.line(format!("[{prefix}{}] * [{prefix}{}] = {rhs}", join(&out.lambda), join(&out.mu)))
        }
    }
}

fn product(ctx: &mut Ctx, lambda: &str, mu: &str) -> CliResult<Outcome> {
    if let Some(n) = ctx.gl()? {
        let ring = GlFusionRing::new(n, ctx.ell()?).map_err(usage("--ell"))?;
        let rs = ring.sl().alcove().root_system().clone();
        let (a, b) = (ctx.gl_weight(&rs, lambda)?, ctx.gl_weight(&rs, mu)?);
        let terms = ring.fuse(&a, &b)?.into_iter().map(|(w, c)| Term { nu: w.0, coeff: c }).collect();
        let out = ProductOut { lambda: a.0, mu: b.0, terms, seed: ctx.common.seed };
        emit_product(ctx, &out, "eps:")?;
        return Ok(Outcome::Success);
    }
    let ring = ctx.fusion()?;
    let rs = ring.alcove().root_system().clone();
    let (a, b) = (ctx.weight(&rs, lambda)?, ctx.weight(&rs, mu)?);
    let p = ring.fuse(&a, &b)?;
    let out = ProductOut {
        lambda: a.0,
        mu: b.0,
        terms: p.terms().iter().map(|(w, &c)| Term { nu: w.0.clone(), coeff: c }).collect(),
        seed: ctx.common.seed,
    };
    emit_product(ctx, &out, "")?;
    Ok(Outcome::Success)
}

fn table(ctx: &mut Ctx) -> CliResult<Outcome> {
    let ring = ctx.fusion()?;
    let n = ring.basis().len() as u128;
    let cap = ctx.common.cap.unwrap_or(DEFAULT_TABLE_CAP);
    if n * n * n > cap {
        return Err(Error::CapExceeded { what: "fusion table entries".into(), needed: n * n * n, cap }.into());
    }
    let format = ctx.format;
    let seed = ctx.common.seed;
    let a = ring.alcove().clone();
    match format {
        Format::Json => {
            let head = TableHead {
                command: "table",
                root_system: a.root_system().name(),
                ell: a.ell(),
                level: a.level(),
                seed,
                basis: ring.basis().iter().map(|w| w.0.clone()).collect(),
            };
            let head = serde_json::to_string(&head).expect("output types serialize");
            // stream the products into the closing array of the head object
            write!(ctx.sink, "{},\"products\":[", &head[..head.len() - 1])?;
            let mut first = true;
            let sink = &mut ctx.sink;
            ring.stream_table(|l, m, p| {
                let row = ProductRow {
                    lambda: l.0.clone(),
                    mu: m.0.clone(),
                    terms: p.terms().iter().map(|(w, &c)| Term { nu: w.0.clone(), coeff: c }).collect(),
                };
                let sep = if first { "\n" } else { ",\n" };
                first = false;
                write!(sink, "{sep}{}", serde_json::to_string(&row).expect("output types serialize"))
                    .map_err(|e| Error::Precondition(format!("write failed: {e}")))
            })?;
            writeln!(ctx.sink, "\n]}}")?;
        }
        Format::Tsv | Format::Text => {
            ctx.seed_line()?;
            if format == Format::Text {
                ctx.line(format!("# {a}"))?;
                ctx.line("# lambda\tmu\tnu\tN")?;
            }
            let sink = &mut ctx.sink;
            ring.stream_table(|l, m, p| {
                for (w, c) in p.terms() {
                    writeln!(sink, "{}\t{}\t{}\t{}", join(&l.0), join(&m.0), join(&w.0), c)
                        .map_err(|e| Error::Precondition(format!("write failed: {e}")))?;
                }
                Ok(())
            })?;
        }
    }
    Ok(Outcome::Success)
}

fn nc_product(ctx: &mut Ctx, lambda: &str, mu: &str) -> CliResult<Outcome> {
    let (rs, n) = ctx.root_system()?;
    let ell = ctx.ell()?;
    let seed = ctx.common.seed;
    match (rs.cartan_type(), n) {
        (CartanType::A, Some(n)) => {
            let comb = TypeAComb::new(n, ell).map_err(usage("--ell"))?;
            if ctx.common.sl {
                let (a, b) = (ctx.weight(&rs, lambda)?, ctx.weight(&rs, mu)?);
                let p = comb.sl_star(&a, &b)?;
                let out = ProductOut { lambda: a.0, mu: b.0, terms: vector_terms(&p, |w| w.0.clone()), seed };
                emit_product(ctx, &out, "")?;
            } else {
                let (a, b) = (ctx.gl_weight(&rs, lambda)?, ctx.gl_weight(&rs, mu)?);
                let p = comb.star(&a, &b)?;
                let out = ProductOut { lambda: a.0, mu: b.0, terms: vector_terms(&p, |w| w.0.clone()), seed };
                emit_product(ctx, &out, "eps:")?;
            }
        }
        (CartanType::C, _) => {
            let a = Arc::new(AlcoveData::new(rs.clone(), ell).map_err(usage("--ell"))?);
            let comb = TypeCComb::new(a)?;
            let (x, y) = (ctx.weight(&rs, lambda)?, ctx.weight(&rs, mu)?);
            let p = comb.star(&x, &y)?;
            let out = ProductOut { lambda: x.0, mu: y.0, terms: vector_terms(&p, |w| w.0.clone()), seed };
            emit_product(ctx, &out, "")?;
        }
        _ => return Err(CliError::Usage("--type: nc-product needs type A or C".into())),
    }
    Ok(Outcome::Success)
}

fn vector_terms<K: Ord + Clone>(v: &AlcoveVector<K>, coords: impl Fn(&K) -> Vec<i64>) -> Vec<Term> {
    v.terms().iter().map(|(k, &c)| Term { nu: coords(k), coeff: c }).collect()
}

fn compare(ctx: &mut Ctx, against: &str) -> CliResult<Outcome> {
    if against != "fusion" {
        return Err(CliError::Usage(format!("--against: only \"fusion\" is supported, got {against:?}")));
    }
    let ring = ctx.fusion()?;
    let rs = ring.alcove().root_system().clone();
    let star = match rs.cartan_type() {
        CartanType::A => TypeAComb::new(rs.rank() + 1, ring.alcove().ell())?.sl_star_table()?,
        CartanType::C => TypeCComb::new(ring.alcove().clone())?.star_table()?,
        _ => return Err(CliError::Usage("--type: compare needs type A or C".into())),
    };
    let fusion = ring.fusion_table(ctx.common.cap.unwrap_or(DEFAULT_TABLE_CAP))?;
    let diff = star.first_difference(&fusion);
    let out = CompareOut {
        command: "compare",
        root_system: rs.name(),
        ell: ring.alcove().ell(),
        seed: ctx.common.seed,
        against: "fusion",
        result: if diff.is_none() { "PASS" } else { "FAIL" },
        basis_size: ring.basis().len(),
        first_difference: diff.map(|(l, m, s, f)| Difference {
            lambda: l.0,
            mu: m.0,
            star: s.terms().iter().map(|(w, &c)| Term { nu: w.0.clone(), coeff: c }).collect(),
            fusion: f.terms().iter().map(|(w, &c)| Term { nu: w.0.clone(), coeff: c }).collect(),
        }),
    };
    let outcome = if out.first_difference.is_none() { Outcome::Success } else { Outcome::Failure };
    match ctx.format {
        Format::Json => ctx.emit_json(&out)?,
        _ => {
            ctx.seed_line()?;
            let mut line = format!("{} {} ell={} ({} basis weights)", out.result, out.root_system, out.ell, out.basis_size);
            if let Some(d) = &out.first_difference {
                line.push_str(&format!("; first difference at [{}]*[{}]", join(&d.lambda), join(&d.mu)));
            }
            ctx.line(line)?;
        }
    }
    Ok(outcome)
}

fn ideal_context(ctx: &Ctx) -> CliResult<IdealContext> {
    let ring = ctx.fusion()?;
    Ok(IdealContext::new(Arc::new(ring)).with_cap(ctx.common.cap.unwrap_or(DEFAULT_MATRIX_CAP)))
}

fn default_preset(ctx: &Ctx, preset: Option<String>) -> CliResult<String> {
    match preset {
        Some(p) => Ok(p),
        None => Ok(ctx.cartan_type()?.to_string()),
    }
}

fn ideal_min(ctx: &mut Ctx) -> CliResult<Outcome> {
    let ideal = ideal_context(ctx)?;
    let out = IdealMinOut {
        command: "ideal-min",
        root_system: ideal.alcove().root_system().name(),
        ell: ideal.alcove().ell(),
        level: ideal.alcove().level(),
        seed: ctx.common.seed,
        minimal_excluded: ideal.minimal_excluded().into_iter().map(|w| w.0).collect(),
    };
    match ctx.format {
        Format::Json => ctx.emit_json(&out)?,
        _ => {
            ctx.seed_line()?;
            for w in &out.minimal_excluded {
                ctx.line(join(w))?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn ideal_gens(ctx: &mut Ctx, preset: Option<String>) -> CliResult<Outcome> {
    let ideal = ideal_context(ctx)?;
    let label = default_preset(ctx, preset)?;
    let g = match label.as_str() {
        "canonical" => ideal.canonical_generators(),
        other => ideal.preset(other),
    };
    let g = match g {
        Ok(g) => g,
        Err(Error::Unsupported(reason)) => {
            let cert = CertificateOut::unsupported("ideal-gens", &label, reason, ctx.common.seed);
            emit_certificate(ctx, &cert)?;
            return Ok(Outcome::Inconclusive);
        }
        Err(e) => return Err(preset_error(e)),
    };
    let out = GensOut {
        command: "ideal-gens",
        root_system: ideal.alcove().root_system().name(),
        ell: ideal.alcove().ell(),
        level: ideal.alcove().level(),
        seed: ctx.common.seed,
        label: g.label.clone(),
        notes: g.notes.clone(),
        generators: g
            .generators
            .iter()
            .map(|c| c.terms().iter().map(|(w, &k)| GenTerm { weight: w.0.clone(), coeff: k }).collect())
            .collect(),
    };
    match ctx.format {
        Format::Json => ctx.emit_json(&out)?,
        _ => {
            ctx.seed_line()?;
            ctx.line(format!("# {}: {}", out.label, out.notes.join("; ")))?;
            for gen in &g.generators {
                ctx.line(gen.to_string())?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn preset_error(e: Error) -> CliError {
    match e {
        Error::UnknownPreset(_) | Error::PresetMismatch { .. } => CliError::Usage(format!("--preset: {e}")),
        other => CliError::Lib(other),
    }
}

fn emit_certificate(ctx: &mut Ctx, cert: &CertificateOut) -> CliResult<()> {
    match ctx.format {
        Format::Json => ctx.emit_json(cert),
        _ => {
            ctx.seed_line()?;
            ctx.line(format!(
                "{} {} (bound {}, window {}x{})",
                cert.status, cert.label, cert.bound, cert.matrix_shape[0], cert.matrix_shape[1]
            ))?;
            for w in &cert.witnesses {
                ctx.line(format!("  {w}"))?;
            }
            Ok(())
        }
    }
}

fn ideal_verify(ctx: &mut Ctx, preset: Option<String>) -> CliResult<Outcome> {
    let ideal = ideal_context(ctx)?;
    let label = default_preset(ctx, preset)?;
    let resolved = ideal.resolve_label(&label).map_err(preset_error)?;
    let bound = ctx.common.bound.unwrap_or_else(|| ideal.default_bound());
    let cert = ideal.certify_preset(&resolved, bound).map_err(preset_error)?;
    let outcome = Outcome::of(&cert.status);
    let out = CertificateOut::from_certificate("ideal-verify", &resolved, &cert, ctx.common.seed);
    emit_certificate(ctx, &out)?;
    Ok(outcome)
}

fn g2_check(ctx: &mut Ctx) -> CliResult<Outcome> {
    if ctx.common.ty.is_none() {
        ctx.common.ty = Some("G2".into());
    }
    if ctx.cartan_type()? != CartanType::G2 {
        return Err(CliError::Usage("--type: g2-check needs G2".into()));
    }
    let ideal = ideal_context(ctx)?;
    let cert = ideal
        .g2_recursion_check()
        .map_err(|e| CliError::Usage(format!("--ell: {e}")))?;
    let outcome = Outcome::of(&cert.status);
    let out = CertificateOut::from_certificate("g2-check", "G2-recursions", &cert, ctx.common.seed);
    emit_certificate(ctx, &out)?;
    Ok(outcome)
}

fn selftest_cmd(ctx: &mut Ctx) -> CliResult<Outcome> {
    let cfg = SelftestConfig {
        seed: ctx.common.seed,
        quick: ctx.common.quick,
        cache_dir: ctx.common.cache_dir.clone(),
    };
    let reports = selftest::run(cfg);
    let all = reports.iter().all(|r| r.passed);
    match ctx.format {
        Format::Json => {
            let out = SelftestOut {
                command: "selftest",
                seed: ctx.common.seed,
                quick: ctx.common.quick,
                passed: all,
                criteria: reports,
            };
            ctx.emit_json(&out)?;
        }
        _ => {
            ctx.seed_line()?;
            for r in &reports {
                ctx.line(r.to_string())?;
                for d in &r.detail {
                    ctx.line(format!("    {d}"))?;
                }
            }
            ctx.line(if all { "selftest: PASS" } else { "selftest: FAIL" })?;
        }
    }
    Ok(if all { Outcome::Success } else { Outcome::Failure })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } | Error::IterationBound { .. } | Error::Unsupported(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

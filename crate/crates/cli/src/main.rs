//! `levelk`: global dimensions, modular data and conformal subgroups of
//! level-k fusion categories.

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use levelk_core::acceptance::{run_criterion, Options, CRITERIA};
use levelk_core::fusion::{
    chern_simons_s3, global_dimension_closed, global_dimension_sum, integrable_weights, kac_wakimoto_su,
    level_rank_check, modular_data, verlinde_fusion, LevelKCategory,
};
use levelk_core::lie_core::{build_lie_data, ribbon_table};
use levelk_core::module_cat::{
    conformal_subgroup_dim, embedding_catalog, find_embedding, level1_global_dim, load_catalog, EmbeddingRecord,
};
use levelk_core::qnum::{classical_superfactorial, q_superfactorial, superfactorial_arguments, QContext};
use levelk_core::tolerance::DEFAULT_WEYL_CAP;
use levelk_core::{DominantWeight, Family, LieData, LieType, Precision};
use serde_json::json;

use output::{dec, Format, Output};

#[derive(Parser, Debug)]
#[command(name = "levelk", version, about = "Level-k fusion categories of simple Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Level k.
    #[arg(short = 'k', long, global = true)]
    level: Option<u32>,

    /// Working precision in decimal digits (at least 30).
    #[arg(short, long, global = true, env = "LEVELK_PRECISION", default_value_t = 50,
          value_parser = clap::value_parser!(u32).range(30..=2000))]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Refuse Weyl-group sums over groups with more elements than this.
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_CAP)]
    weyl_cap: u64,

    /// Embedding catalog (JSON) to use instead of the bundled one.
    #[arg(long, global = true, env = "LEVELK_CATALOG")]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integrable weights with their levels and quantum dimensions.
    Weights { group: String },
    /// The modular S matrix.
    Smatrix { group: String },
    /// The modular T matrix (diagonal).
    Tmatrix { group: String },
    /// Fusion matrix N_m of an integrable weight, from the Verlinde formula.
    Fusion { group: String, weight: String },
    /// Global dimension, closed form and sum of squared quantum dimensions.
    Globaldim { group: String },
    /// Quantum Lie superfactorial at the altitude, and its classical value.
    Superfactorial { group: String },
    /// Global dimension of a conformal subgroup module, by catalog id.
    Subgroup { id: String },
    /// List the conformal-embedding catalog.
    Catalog,
    /// Scalar products of a weight with the positive roots.
    Ribbon { group: String, weight: String },
    /// Chern-Simons partition function on the three-sphere.
    Cs3 { group: String },
    /// Both sides of k |A_k(SU(g))| = g |A_g(SU(k))|.
    Levelrank { g: u32, k: u32 },
    /// Run the acceptance criteria.
    Check {
        /// Comma-separated criterion numbers (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

enum Failure {
    Usage(String),
    Math(levelk_core::Error),
    /// Already reported; exit 1.
    Checks,
}

impl From<levelk_core::Error> for Failure {
    fn from(e: levelk_core::Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Ctx {
    prec: Precision,
    level: Option<u32>,
    weyl_cap: u64,
    catalog: Option<PathBuf>,
}

impl Ctx {
    fn level(&self) -> Outcome<u32> {
        self.level.ok_or_else(|| Failure::Usage("this subcommand needs --level".into()))
    }

    fn catalog(&self) -> Outcome<Vec<EmbeddingRecord>> {
        match &self.catalog {
            Some(p) => Ok(load_catalog(p)?),
            None => Ok(embedding_catalog()),
        }
    }
}

fn parse_group(s: &str) -> Outcome<LieType> {
    s.parse().map_err(|e: levelk_core::Error| Failure::Usage(e.to_string()))
}

fn parse_weight(s: &str, rank: usize) -> Outcome<DominantWeight> {
    let w: DominantWeight = s
        .parse()
        .map_err(|_| Failure::Usage(format!("cannot parse weight {s:?} (expected e.g. 1,0,2)")))?;
    if w.rank() != rank {
        return Err(Failure::Usage(format!("weight {w} has {} coordinates, group has rank {rank}", w.rank())));
    }
    Ok(w)
}

/// Group data, level-k category and the response header.
fn setup(ctx: &Ctx, group: &str) -> Outcome<(LieData, LevelKCategory, Output)> {
    let t = parse_group(group)?;
    let k = ctx.level()?;
    let lie = build_lie_data(t)?;
    let cat = integrable_weights(&lie, k, ctx.prec)?;
    let out = Output::new(Some(t.to_string()), Some(k), Some(cat.altitude()), ctx.prec);
    Ok((lie, cat, out))
}

fn header(ctx: &Ctx, t: LieType, k: u32) -> Output {
    Output::new(Some(t.to_string()), Some(k), Some(t.dual_coxeter_number() as u32 + k), ctx.prec)
}

fn weights(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let (_, cat, mut out) = setup(ctx, group)?;
    let rows: Vec<Vec<String>> = (0..cat.len())
        .map(|i| {
            vec![
                cat.weights[i].to_string(),
                cat.level_of_index(i).to_string(),
                dec(&cat.qdim_index(i), ctx.prec),
            ]
        })
        .collect();
    out.set(
        "values",
        json!(rows.iter().map(|r| json!({"weight": r[0], "level": r[1], "qdim": r[2]})).collect::<Vec<_>>()),
    );
    out.scalar("objects", cat.len().to_string());
    out.table(&["weight", "level", "qdim"], rows);
    Ok(out)
}

fn smatrix(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let (_, cat, mut out) = setup(ctx, group)?;
    let md = modular_data(&cat, ctx.weyl_cap)?;
    let n = md.len();
    let mut rows = Vec::with_capacity(n * n);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let z = md.s.get(i, j);
            let (re, im) = (dec(&z.re, ctx.prec), dec(&z.im, ctx.prec));
            row.push(json!({"re": re, "im": im}));
            rows.push(vec![cat.weights[i].to_string(), cat.weights[j].to_string(), re, im]);
        }
        values.push(row);
    }
    out.set("weights", json!(cat.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>()));
    out.set("values", json!(values));
    out.table(&["m", "n", "re", "im"], rows);
    Ok(out)
}

fn tmatrix(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let (_, cat, mut out) = setup(ctx, group)?;
    let md = modular_data(&cat, ctx.weyl_cap)?;
    let rows: Vec<Vec<String>> = (0..md.len())
        .map(|i| {
            vec![
                cat.weights[i].to_string(),
                md.t_exponents[i].to_string(),
                dec(&md.t[i].re, ctx.prec),
                dec(&md.t[i].im, ctx.prec),
                dec(&md.t_shifted[i].re, ctx.prec),
                dec(&md.t_shifted[i].im, ctx.prec),
            ]
        })
        .collect();
    out.scalar("central_charge", md.central_charge.to_string());
    out.set(
        "values",
        json!(rows
            .iter()
            .map(|r| json!({"weight": r[0], "exponent": r[1], "re": r[2], "im": r[3], "shifted_re": r[4], "shifted_im": r[5]}))
            .collect::<Vec<_>>()),
    );
    out.table(&["weight", "exponent", "re", "im", "shifted_re", "shifted_im"], rows);
    Ok(out)
}

fn fusion(ctx: &Ctx, group: &str, weight: &str) -> Outcome<Output> {
    let (lie, cat, mut out) = setup(ctx, group)?;
    let w = parse_weight(weight, lie.rank())?;
    let m = cat.index_of(&w).ok_or(levelk_core::Error::NotIntegrable {
        weight: w.to_string(),
        level: cat.level,
    })?;
    let md = modular_data(&cat, ctx.weyl_cap)?;
    let nm = verlinde_fusion(&md, m)?;
    let names: Vec<String> = cat.weights.iter().map(|w| w.to_string()).collect();
    let rows: Vec<Vec<String>> = nm
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| std::iter::once(names[i].clone()).chain(r.iter().map(|x| x.to_string())).collect())
        .collect();
    out.scalar("weight", w.to_string());
    out.set("weights", json!(names));
    out.set("values", json!(nm.rows()));
    let mut head = vec!["n \\ p"];
    head.extend(names.iter().map(String::as_str));
    out.table(&head, rows);
    Ok(out)
}

fn globaldim(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let (lie, cat, mut out) = setup(ctx, group)?;
    let closed = global_dimension_closed(&lie, cat.level, ctx.prec)?;
    let sum = global_dimension_sum(&cat);
    out.scalar("value", dec(&closed, ctx.prec));
    out.scalar("closed_form", dec(&closed, ctx.prec));
    out.scalar("sum_of_squares", dec(&sum, ctx.prec));
    out.scalar("objects", cat.len().to_string());
    Ok(out)
}

fn superfactorial(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let t = parse_group(group)?;
    let k = ctx.level()?;
    let mut out = header(ctx, t, k);
    let qctx = QContext::new(t.dual_coxeter_number() as u32 + k, ctx.prec)?;
    let v = q_superfactorial(&qctx, t)?;
    let args: Vec<String> = superfactorial_arguments(t).iter().map(|a| a.to_string()).collect();
    out.scalar("value", dec(&v, ctx.prec));
    out.scalar("classical", classical_superfactorial(t).to_string());
    out.scalar("arguments", args.join(" "));
    out.set("arguments", json!(args));
    Ok(out)
}

fn subgroup(ctx: &Ctx, id: &str) -> Outcome<Output> {
    let catalog = ctx.catalog()?;
    let rec = find_embedding(&catalog, id)?;
    let inner = rec.inner()?;
    let outer = rec.outer()?;
    let mut out = header(ctx, inner, rec.level);
    let a = global_dimension_closed(&build_lie_data(inner)?, rec.level, ctx.prec)?;
    let j = level1_global_dim(outer, ctx.prec)?;
    let e = conformal_subgroup_dim(rec, ctx.prec)?;
    out.scalar("id", rec.id());
    out.scalar("outer", format!("{} ({})", outer, outer.group_name()));
    out.scalar("value", dec(&e, ctx.prec));
    out.scalar("ambient_global_dim", dec(&a, ctx.prec));
    out.scalar("outer_level1_global_dim", dec(&j, ctx.prec));
    Ok(out)
}

fn catalog(ctx: &Ctx) -> Outcome<Output> {
    let catalog = ctx.catalog()?;
    let mut out = Output::new(None, None, None, ctx.prec);
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for r in &catalog {
        let (inner, outer) = (r.inner()?, r.outer()?);
        let (c, _) = r.central_charges()?;
        rows.push(vec![
            r.id(),
            inner.group_name(),
            r.level.to_string(),
            format!("{} ({})", outer.group_name(), outer),
            c.to_string(),
            r.tag.clone(),
        ]);
        values.push(json!({
            "id": r.id(),
            "inner": inner.to_string(),
            "level": r.level,
            "outer": outer.to_string(),
            "central_charge": c.to_string(),
            "tag": r.tag,
            "source": r.source,
        }));
    }
    out.set("values", json!(values));
    out.table(&["id", "inner", "level", "outer", "c", "tag"], rows);
    Ok(out)
}

fn ribbon(ctx: &Ctx, group: &str, weight: &str) -> Outcome<Output> {
    let t = parse_group(group)?;
    let lie = build_lie_data(t)?;
    let w = parse_weight(weight, lie.rank())?;
    let table = ribbon_table(&lie, &w)?;
    let mut out = Output::new(Some(t.to_string()), ctx.level, None, ctx.prec);
    let rows: Vec<Vec<String>> = table.iter().map(|(a, v)| vec![a.to_string(), v.to_string()]).collect();
    out.scalar("weight", w.to_string());
    out.set(
        "values",
        json!(rows.iter().map(|r| json!({"root": r[0], "product": r[1]})).collect::<Vec<_>>()),
    );
    out.table(&["root", "product"], rows);
    Ok(out)
}

fn cs3(ctx: &Ctx, group: &str) -> Outcome<Output> {
    let t = parse_group(group)?;
    let k = ctx.level()?;
    let lie = build_lie_data(t)?;
    let mut out = header(ctx, t, k);
    let v = chern_simons_s3(&lie, k, ctx.prec)?;
    out.scalar("value", dec(&v, ctx.prec));
    if t.family == Family::A {
        let kw = kac_wakimoto_su(t.rank as u32 + 1, k, ctx.prec);
        out.scalar("kac_wakimoto", dec(&kw, ctx.prec));
    }
    Ok(out)
}

fn levelrank(ctx: &Ctx, g: u32, k: u32) -> Outcome<Output> {
    if g < 2 || k < 2 {
        return Err(Failure::Usage("levelrank needs g, k >= 2".into()));
    }
    let t = LieType::su(g as usize)?;
    let mut out = header(ctx, t, k);
    let (lhs, rhs) = level_rank_check(g, k, ctx.prec)?;
    out.scalar("lhs", dec(&lhs, ctx.prec));
    out.scalar("rhs", dec(&rhs, ctx.prec));
    out.set("values", json!([dec(&lhs, ctx.prec), dec(&rhs, ctx.prec)]));
    Ok(out)
}

fn check(ctx: &Ctx, only: &[u8], format: Format) -> Outcome<()> {
    let ids: Vec<u8> = if only.is_empty() {
        CRITERIA.iter().map(|c| c.0).collect()
    } else {
        only.to_vec()
    };
    let opts = Options {
        precision: ctx.prec,
        weyl_cap: ctx.weyl_cap,
    };
    let mut all_ok = true;
    let mut results = Vec::new();
    let stdout = std::io::stdout();
    for id in ids {
        let r = run_criterion(id, &opts);
        all_ok &= r.passed;
        if format == Format::Json {
            results.push(r);
        } else {
            // stream lines as criteria finish
            let _ = writeln!(stdout.lock(), "{r}");
        }
    }
    if format == Format::Json {
        let payload = json!({
            "group": null, "level": null, "altitude": null,
            "precision": ctx.prec.decimal_digits(),
            "values": results,
            "passed": all_ok,
        });
        let _ = writeln!(stdout.lock(), "{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Outcome<()> {
    let ctx = Ctx {
        prec: Precision::digits(cli.precision),
        level: cli.level,
        weyl_cap: cli.weyl_cap,
        catalog: cli.catalog,
    };
    let out = match &cli.command {
        Command::Weights { group } => weights(&ctx, group)?,
        Command::Smatrix { group } => smatrix(&ctx, group)?,
        Command::Tmatrix { group } => tmatrix(&ctx, group)?,
        Command::Fusion { group, weight } => fusion(&ctx, group, weight)?,
        Command::Globaldim { group } => globaldim(&ctx, group)?,
        Command::Superfactorial { group } => superfactorial(&ctx, group)?,
        Command::Subgroup { id } => subgroup(&ctx, id)?,
        Command::Catalog => catalog(&ctx)?,
        Command::Ribbon { group, weight } => ribbon(&ctx, group, weight)?,
        Command::Cs3 { group } => cs3(&ctx, group)?,
        Command::Levelrank { g, k } => levelrank(&ctx, *g, *k)?,
        Command::Check { only } => return check(&ctx, only, cli.format),
    };
    let mut stdout = std::io::stdout().lock();
    match out.render(cli.format, &mut stdout) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Math(levelk_core::Error::Io(e))),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            let _ = Cli::command().print_help();
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Checks) => ExitCode::from(1),
    }
}

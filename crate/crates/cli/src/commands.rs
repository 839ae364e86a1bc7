use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use num_bigint::BigInt;
use serde_json::{json, Value};

use pftil_core::conjecture::{
    extract_o_int_cached, extract_o_poly_cached, Cache, PolyEngine, Provenance,
};
use pftil_core::kernel::{
    build_a, build_a_checked, build_a_kt, build_b, phantom_column, IndexSet, Method,
};
use pftil_core::lattice::{
    build_ad_graph, build_ds_graph, count_families, family_svg, first_family, list_tilings,
    tiling_svg, EndpointMode, TilingFilter,
};
use pftil_core::pfaffian::{lgv_det_subset, pf_decompose, pf_minor, OddMode};
use pftil_core::selfcheck::{run_selfcheck, SelfcheckOptions};
use pftil_core::sequences::{aztec_total, delannoy, schroder};
use pftil_core::{Error, Result};

use crate::{
    Class, Cli, Command, Format, MatrixKind, OracleEngine, PolyEngineArg, SeqKind, SeqName,
};

const PATH_GUARD: usize = 8;
const DOMINO_GUARD: usize = 5;

/// 1 for failed verification, 2 for bad input.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ConjectureViolated { .. }
        | Error::ConstructionMismatch { .. }
        | Error::PropertyViolated(_) => 1,
        _ => 2,
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn keep_or_full(keep: &Option<IndexSet>, n: usize) -> Result<IndexSet> {
    let idx = keep.clone().unwrap_or_else(|| IndexSet::full(n));
    idx.check_within(n)?;
    Ok(idx)
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("--n must be >= 1".into()));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Count { class, n, keep } => {
            require_n(*n)?;
            let out = count(*class, *n, keep)?;
            emit(cli, &format!("{out}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { kind, n, format } => {
            require_n(*n)?;
            emit(cli, &matrix(*kind, *n, *format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            n,
            class,
            engine,
            keep,
            render,
            force,
        } => {
            require_n(*n)?;
            let limit = match engine {
                OracleEngine::Paths => PATH_GUARD,
                OracleEngine::Dominoes => DOMINO_GUARD,
            };
            if *n > limit && !force {
                return Err(Error::SizeGuard { n: *n, limit });
            }
            let idx = keep_or_full(keep, *n)?;
            let (count, svg) = oracle(*n, *class, *engine, &idx, render.is_some())?;
            if let (Some(path), Some(svg)) = (render, svg) {
                fs::write(path, svg)?;
            }
            emit(cli, &format!("{count}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture {
            kind,
            max_n,
            engine,
            format,
            cache,
            force,
        } => conjecture(cli, *kind, *max_n, *engine, *format, cache.clone(), *force),
        Command::Decompose { kind, n, format } => {
            require_n(*n)?;
            emit(cli, &decompose(*kind, *n, *format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq { name, n, format } => {
            emit(cli, &seq(*name, *n, *format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selfcheck { format, corrupt } => {
            let report = run_selfcheck(&SelfcheckOptions {
                corrupt_b_entry: *corrupt,
            });
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json())?),
                _ => format!("{report}\n"),
            };
            emit(cli, &text)?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn count(class: Class, n: usize, keep: &Option<IndexSet>) -> Result<BigInt> {
    let idx = keep_or_full(keep, n)?;
    match class {
        Class::OffDiagonal => pf_minor(&build_a(n, Method::Recurrence)?, &idx, &OddMode::Zero),
        Class::Diagonal => {
            let odd = OddMode::Phantom(phantom_column(&build_ds_graph(n)?));
            pf_minor(&build_b(n)?, &idx, &odd)
        }
        Class::All => match keep {
            None => aztec_total(n as i64),
            Some(_) => lgv_det_subset(&build_ad_graph(n)?, &idx, &idx),
        },
    }
}

fn matrix(kind: MatrixKind, n: usize, format: Format) -> Result<String> {
    let (json, csv) = match kind {
        MatrixKind::A => {
            let m = build_a_checked(n)?;
            (m.to_json(), m.to_csv())
        }
        MatrixKind::B => {
            let m = build_b(n)?;
            (m.to_json(), m.to_csv())
        }
        MatrixKind::Akt => {
            let m = build_a_kt(n)?;
            (m.to_json(), m.to_csv())
        }
    };
    Ok(match format {
        Format::Csv => csv,
        _ => format!("{}\n", serde_json::to_string_pretty(&json)?),
    })
}

fn oracle(
    n: usize,
    class: Class,
    engine: OracleEngine,
    idx: &IndexSet,
    want_svg: bool,
) -> Result<(u64, Option<String>)> {
    match engine {
        OracleEngine::Paths => {
            let (g, targets, mode) = match class {
                Class::All => (build_ad_graph(n)?, Some(idx), EndpointMode::Free),
                Class::Diagonal => (build_ds_graph(n)?, None, EndpointMode::Free),
                Class::OffDiagonal => (build_ds_graph(n)?, None, EndpointMode::Paired),
            };
            let c = count_families(&g, idx, targets, mode)?;
            let svg = if want_svg {
                first_family(&g, idx, targets, mode)?.map(|f| family_svg(n, &f))
            } else {
                None
            };
            Ok((c, svg))
        }
        OracleEngine::Dominoes => {
            let filter = match class {
                Class::All => TilingFilter::All,
                Class::Diagonal => TilingFilter::DiagSymmetric,
                Class::OffDiagonal => TilingFilter::OffDiagSymmetric,
            };
            let tilings = list_tilings(n, filter, idx)?;
            let svg = if want_svg {
                tilings.first().map(tiling_svg)
            } else {
                None
            };
            Ok((tilings.len() as u64, svg))
        }
    }
}

fn provenance_tag(p: Provenance) -> &'static str {
    match p {
        Provenance::Verified => "verified",
        Provenance::Extended => "extended",
        Provenance::Disagrees => "disagrees",
    }
}

fn conjecture(
    cli: &Cli,
    kind: SeqKind,
    max_n: usize,
    engine: PolyEngineArg,
    format: Format,
    cache_path: Option<std::path::PathBuf>,
    force: bool,
) -> Result<ExitCode> {
    let path = cache_path.unwrap_or_else(Cache::default_path);
    let mut cache = Cache::load(&path)?;
    if force {
        cache.clear();
    }
    let (rows, provenance): (Vec<(String, Value)>, Vec<Provenance>) = match kind {
        SeqKind::Int => {
            let o = extract_o_int_cached(max_n, Some(&mut cache), |_, _| {});
            cache.save()?;
            let o = o?;
            let rows = o
                .values
                .iter()
                .map(|v| (v.to_string(), Value::String(v.to_string())))
                .collect();
            (rows, o.provenance)
        }
        SeqKind::Poly => {
            let engine = match engine {
                PolyEngineArg::Expand => PolyEngine::Expand,
                PolyEngineArg::Interpolate => PolyEngine::Interpolate,
            };
            let o = extract_o_poly_cached(max_n, engine, Some(&mut cache), |_, _| {});
            cache.save()?;
            let o = o?;
            let rows = o
                .values
                .iter()
                .map(|v| (v.to_string(), v.to_json()))
                .collect();
            (rows, o.provenance)
        }
    };
    let name = match kind {
        SeqKind::Int => "o",
        SeqKind::Poly => "o(k,t)",
    };
    let disagreements = provenance
        .iter()
        .filter(|p| **p == Provenance::Disagrees)
        .count();
    let text = match format {
        Format::Json => {
            let terms: Vec<Value> = rows
                .iter()
                .zip(&provenance)
                .enumerate()
                .map(|(n, ((_, v), p))| json!({"n": n, "value": v, "status": provenance_tag(*p)}))
                .collect();
            let doc = json!({
                "kind": match kind { SeqKind::Int => "int", SeqKind::Poly => "poly" },
                "max_n": max_n,
                "terms": terms,
                "passed": disagreements == 0,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
        _ => {
            let mut s = String::new();
            for (n, ((v, _), p)) in rows.iter().zip(&provenance).enumerate() {
                let label = if kind == SeqKind::Int {
                    format!("o_{n}")
                } else {
                    format!("o_{n}(k,t)")
                };
                writeln!(s, "{label} = {v}  [{}]", provenance_tag(*p)).unwrap();
            }
            if disagreements == 0 {
                writeln!(s, "{name}: product form holds for n <= {max_n}").unwrap();
            } else {
                writeln!(
                    s,
                    "{name}: {disagreements} terms disagree with the published table"
                )
                .unwrap();
            }
            s
        }
    };
    emit(cli, &text)?;
    Ok(if disagreements == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn decompose(kind: MatrixKind, n: usize, format: Format) -> Result<String> {
    let d = match kind {
        MatrixKind::A => pf_decompose(&build_a(n, Method::Recurrence)?)?,
        MatrixKind::B => pf_decompose(&build_b(n)?)?,
        MatrixKind::Akt => pf_decompose(&build_a_kt(n)?)?,
    };
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&d.to_json())?),
        _ => {
            let mut s = String::new();
            for (l, t) in d.t().iter().enumerate() {
                writeln!(s, "t_{} = {t}", l + 1).unwrap();
            }
            for i in 1..=d.order() {
                for j in i + 1..=d.order() {
                    writeln!(s, "r_{i},{j} = {}", d.r(i, j)?).unwrap();
                }
            }
            s
        }
    })
}

fn seq(name: SeqName, n: usize, format: Format) -> Result<String> {
    let rows: Vec<Vec<BigInt>> = match name {
        SeqName::Delannoy => (0..=n as i64)
            .map(|p| (0..=n as i64).map(|q| delannoy(p, q)).collect())
            .collect(),
        SeqName::Schroder => (0..=n as i64)
            .map(|q| (0..=q).map(|p| schroder(p, q)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?,
        SeqName::Aztec => {
            require_n(n)?;
            vec![(1..=n as i64)
                .map(aztec_total)
                .collect::<Result<Vec<_>>>()?]
        }
    };
    Ok(match format {
        Format::Json => {
            let v: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Format::Csv => rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
                    + "\n"
            })
            .collect(),
        Format::Text => rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n"
            })
            .collect(),
    })
}

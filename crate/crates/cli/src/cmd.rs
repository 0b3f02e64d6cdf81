use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use stext::extengine::{
    cohomology_v, ext_cuspidal_line, ext_induced, ext_steinberg, ext_v_to_induced, induced_cohomology,
    orientation_from_permutation, orientation_from_subset, ring_hypotheses, trivial_cohomology, vanishing_certificate,
    ExtOutcome, ExtReport, Method, QueryInfo,
};
use stext::ringcond::condition_report;
use stext::verify::{verify, VerifyOptions};
use stext::weyl::{cache, generate_weyl, DEFAULT_ELEMENT_CAP};
use stext::{CartanType, Error, RingSpec, RootSystem, SubsetMask, WeylGroup};

use crate::cli::{CacheAction, Command, Computation, Format, Pair, RepArg, TypeRing};
use crate::error::{CliError, EXIT_MISMATCH, EXIT_OK};

type CliResult<T> = Result<T, CliError>;

/// Parses a comma-separated list of simple-root indices.
pub fn parse_subset(text: &str, rank: usize) -> CliResult<SubsetMask> {
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut ix = Vec::new();
    for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| CliError::usage(format!("'{part}' is not a simple-root index")))?;
        ix.push(i);
    }
    Ok(SubsetMask::from_indices(&ix, rank)?)
}

fn root_system(ty: CartanType) -> CliResult<RootSystem> {
    Ok(RootSystem::from_type(ty)?)
}

fn load_weyl(rs: &RootSystem, cache_dir: Option<&Path>) -> CliResult<WeylGroup> {
    Ok(match cache_dir {
        Some(dir) => cache::load_or_generate(dir, rs, DEFAULT_ELEMENT_CAP)?,
        None => generate_weyl(rs)?,
    })
}

fn render(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn check_dump(comp: &Computation, format: Format) -> CliResult<()> {
    if comp.dump_complex && format == Format::Tsv {
        return Err(CliError::usage("--dump-complex needs --format json"));
    }
    if comp.dump_complex && Method::from(comp.method) == Method::ClosedForm {
        return Err(CliError::usage("--dump-complex needs --method complex_built or both"));
    }
    Ok(())
}

fn emit_outcome(
    outcome: ExtOutcome,
    query: QueryInfo,
    comp: &Computation,
    format: Format,
) -> CliResult<String> {
    let report = ExtReport {
        query,
        method: comp.method.into(),
        hypotheses: outcome.hypotheses,
        table: outcome.table,
        complexes: if comp.dump_complex { outcome.complexes } else { None },
    };
    Ok(match format {
        Format::Json => render(&report),
        Format::Tsv => report.to_tsv(),
    })
}

/// Runs one command and returns the text for the output stream together
/// with the exit code.
pub fn run(command: &Command, format: Format, cache_dir: Option<&Path>) -> CliResult<(String, i32)> {
    match command {
        Command::Ext {
            base,
            pair,
            center_rank,
            comp,
        } => {
            check_dump(comp, format)?;
            let (rs, i, j) = pair_args(base, pair)?;
            let out = ext_steinberg(&rs, i, j, &base.ring, comp.method.into(), *center_rank)?;
            let q = QueryInfo::new(&rs, Some(i), Some(j), &base.ring, *center_rank);
            Ok((emit_outcome(out, q, comp, format)?, EXIT_OK))
        }
        Command::ExtInduced { base, pair, comp } => {
            check_dump(comp, format)?;
            let (rs, i, j) = pair_args(base, pair)?;
            let w = load_weyl(&rs, cache_dir)?;
            let out = ext_induced(&w, i, j, &base.ring, comp.method.into())?;
            let q = QueryInfo::new(&rs, Some(i), Some(j), &base.ring, 0);
            Ok((emit_outcome(out, q, comp, format)?, EXIT_OK))
        }
        Command::ExtVi { base, pair, comp } => {
            check_dump(comp, format)?;
            let (rs, i, j) = pair_args(base, pair)?;
            let out = ext_v_to_induced(&rs, i, j, &base.ring, comp.method.into())?;
            let q = QueryInfo::new(&rs, Some(i), Some(j), &base.ring, 0);
            Ok((emit_outcome(out, q, comp, format)?, EXIT_OK))
        }
        Command::Cohomology {
            base,
            i_set,
            rep,
            center_rank,
            comp,
        } => {
            check_dump(comp, format)?;
            let rs = root_system(base.ty)?;
            let i = parse_subset(i_set, rs.rank())?;
            let hypotheses = ring_hypotheses(&rs, &base.ring)?;
            let mut out = match rep {
                RepArg::Steinberg => cohomology_v(&rs, i, &base.ring, comp.method.into())?,
                RepArg::Induced => ExtOutcome {
                    table: induced_cohomology(&rs, i),
                    hypotheses,
                    complexes: None,
                },
                RepArg::Trivial => ExtOutcome {
                    table: trivial_cohomology(0),
                    hypotheses,
                    complexes: None,
                },
            };
            out.table = out.table.kunneth_exterior(*center_rank);
            let i_field = (*rep != RepArg::Trivial).then_some(i);
            let q = QueryInfo::new(&rs, i_field, None, &base.ring, *center_rank);
            Ok((emit_outcome(out, q, comp, format)?, EXIT_OK))
        }
        Command::Dcosets { base, pair } => {
            let (rs, i, j) = pair_args(base, pair)?;
            let w = load_weyl(&rs, cache_dir)?;
            dcosets(&rs, &w, i, j, &base.ring, format).map(|s| (s, EXIT_OK))
        }
        Command::CheckRing { base, assume_theta } => {
            let rs = root_system(base.ty)?;
            let report = condition_report(&rs, &base.ring, *assume_theta)?;
            let text = match format {
                Format::Json => render(&json!({
                    "type": rs.cartan_type().to_string(),
                    "ring": base.ring.to_string(),
                    "report": report,
                    "summary": report.failure_summary(),
                })),
                Format::Tsv => {
                    let mut s = String::from("condition\tholds\twitness\n");
                    let witness = |v: Value| if v.is_null() { String::new() } else { v.to_string() };
                    s.push_str(&format!("bon\t{}\t{}\n", report.bon, witness(json!(report.witness.bon))));
                    s.push_str(&format!(
                        "banal_proxy\t{}\t{}\n",
                        report.banal_proxy,
                        witness(json!(report.witness.banal_proxy))
                    ));
                    s.push_str(&format!("assumption3\t{}\t\n", report.assumption3));
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify {
            base,
            i_set,
            j_set,
            all_pairs,
            parallel,
            strata,
            no_strata,
        } => {
            let rs = root_system(base.ty)?;
            let pair_masks = match (i_set, j_set) {
                (Some(i), Some(j)) => Some((parse_subset(i, rs.rank())?, parse_subset(j, rs.rank())?)),
                (None, None) if *all_pairs => None,
                _ => return Err(CliError::usage("verify needs --all-pairs or both --I and --J")),
            };
            let with_strata = *strata || (!*no_strata && rs.rank() <= 3);
            let w = if with_strata { Some(load_weyl(&rs, cache_dir)?) } else { None };
            let opts = VerifyOptions {
                all_pairs: *all_pairs,
                pair: pair_masks,
                parallel: *parallel,
            };
            let report = verify(&rs, &base.ring, w.as_ref(), &opts)?;
            let code = if report.passed { EXIT_OK } else { EXIT_MISMATCH };
            let text = match format {
                Format::Json => render(&report),
                Format::Tsv => {
                    let mut s = String::from("I\tJ\tcheck\tpassed\tdetail\n");
                    for p in &report.pairs {
                        for c in &p.checks {
                            s.push_str(&format!(
                                "{}\t{}\t{}\t{}\t{}\n",
                                p.i_set,
                                p.j_set,
                                c.name,
                                c.passed,
                                c.detail.as_deref().unwrap_or("")
                            ));
                        }
                    }
                    s
                }
            };
            Ok((text, code))
        }
        Command::Zelevinsky { k, pair, permutation } => {
            if *k < 2 {
                return Err(CliError::usage("--k must be at least 2"));
            }
            let i = parse_subset(&pair.i_set, k - 1)?;
            let j = parse_subset(&pair.j_set, k - 1)?;
            let table = ext_cuspidal_line(*k, i, j)?;
            let perm = match permutation {
                Some(text) => {
                    let values = text
                        .split(',')
                        .map(|v| v.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::usage(format!("'{text}' is not a list of values")))?;
                    if values.len() != *k {
                        return Err(CliError::usage(format!("permutation needs {k} values")));
                    }
                    Some(orientation_from_permutation(&values)?)
                }
                None => None,
            };
            let text = match format {
                Format::Json => {
                    let mut v = json!({
                        "k": k,
                        "I": i,
                        "J": j,
                        "orientation_I": orientation_from_subset(*k, i)?.to_string(),
                        "orientation_J": orientation_from_subset(*k, j)?.to_string(),
                        "table": table.to_json(),
                    });
                    if let Some(o) = perm {
                        v["orientation_permutation"] = json!(o.to_string());
                    }
                    render(&v)
                }
                Format::Tsv => table.to_tsv(),
            };
            Ok((text, EXIT_OK))
        }
        Command::Cache { action } => {
            let dir = cache_dir.ok_or_else(|| CliError::usage("cache commands need --cache-dir or STEXT_CACHE_DIR"))?;
            match action {
                CacheAction::Build { ty } => {
                    let rs = root_system(*ty)?;
                    let w = generate_weyl(&rs)?;
                    std::fs::create_dir_all(dir).map_err(Error::from)?;
                    let path = cache::write_cache(dir, &w)?;
                    eprintln!("cached {} elements of W({ty}) at {}", w.order(), path.display());
                    Ok((String::new(), EXIT_OK))
                }
                CacheAction::Clear => {
                    let n = if dir.exists() { cache::clear_cache(dir)? } else { 0 };
                    eprintln!("removed {n} cached groups from {}", dir.display());
                    Ok((String::new(), EXIT_OK))
                }
            }
        }
    }
}

fn pair_args(base: &TypeRing, pair: &Pair) -> CliResult<(RootSystem, SubsetMask, SubsetMask)> {
    let rs = root_system(base.ty)?;
    let i = parse_subset(&pair.i_set, rs.rank())?;
    let j = parse_subset(&pair.j_set, rs.rank())?;
    Ok((rs, i, j))
}

fn dcosets(rs: &RootSystem, w: &WeylGroup, i: SubsetMask, j: SubsetMask, spec: &RingSpec, format: Format) -> CliResult<String> {
    let reps = w.kostant_reps(i, j)?;
    let mut rows = Vec::with_capacity(reps.len());
    for rep in &reps {
        let cert = match vanishing_certificate(rs, rep, spec) {
            Ok(Some(c)) => json!({
                "branch": c.branch,
                "beta": c.beta_index,
                "exponent": c.exponent,
                "unit_value": serde_json::to_value(&c).expect("certificate serializes")["unit_value"],
            }),
            Ok(None) => json!("survives"),
            Err(Error::RingAssumption(m)) => json!({ "ring_assumption": m }),
            Err(e) => return Err(e.into()),
        };
        rows.push(json!({
            "word": rep.w.reduced_word(rs),
            "length": rep.length,
            "gamma": rep.gamma_exp,
            "delta": rep.delta_exp,
            "levi": rep.levi,
            "coset_size": rep.coset_size,
            "certificate": cert,
        }));
    }
    Ok(match format {
        Format::Json => render(&json!({
            "query": QueryInfo::new(rs, Some(i), Some(j), spec, 0),
            "count": reps.len(),
            "representatives": rows,
        })),
        Format::Tsv => {
            let mut s = String::from("word\tlength\tgamma\tdelta\tlevi\tcoset_size\tcertificate\n");
            for (rep, row) in reps.iter().zip(&rows) {
                let word: Vec<String> = rep.w.reduced_word(rs).iter().map(usize::to_string).collect();
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    word.join(","),
                    rep.length,
                    rep.gamma_exp,
                    rep.delta_exp,
                    rep.levi,
                    rep.coset_size,
                    row["certificate"]
                ));
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_parsing() {
        assert_eq!(parse_subset("", 3).unwrap(), SubsetMask::empty());
        assert_eq!(parse_subset("0, 2", 3).unwrap().indices(), vec![0, 2]);
        assert_eq!(parse_subset("{1}", 3).unwrap().indices(), vec![1]);
        assert_eq!(parse_subset("3", 3).unwrap_err().code, crate::error::EXIT_USAGE);
        assert_eq!(parse_subset("x", 3).unwrap_err().code, crate::error::EXIT_USAGE);
    }
}

//! CSV and plot-data output.
//!
//! Floats are written with six significant digits, `%g` style: fixed
//! notation for exponents in `-5..6`, otherwise `1.5e-7`. Lines end in LF.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::centrality::MethodId;
use crate::error::{Error, Result};

use super::run::{ExperimentOutcome, ExperimentRecord};
use super::tables::{
    error_to_best, error_to_optimal, error_to_random, super_algorithm, timing_table,
    within_percent_shares, ComparisonTable, SHARE_THRESHOLDS,
};

pub const RECORDS_HEADER: &str = "network,method,k,avg_distance,farness,wall_time_s";

/// `x` with six significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn write_records<W: Write>(records: &[ExperimentRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{RECORDS_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.network,
            r.method.as_str(),
            r.k,
            format_sig(r.avg_distance),
            r.farness,
            format_sig(r.wall_time_s)
        )?;
    }
    Ok(())
}

/// Reads a records CSV written by [`write_records`].
pub fn parse_records(text: &str) -> Result<Vec<ExperimentRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == RECORDS_HEADER => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header {RECORDS_HEADER:?}"),
            })
        }
    }
    lines
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| {
            let err = |message: String| Error::Parse {
                line: i + 1,
                message,
            };
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 6 {
                return Err(err(format!("expected 6 fields, got {}", fields.len())));
            }
            let float = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| err(format!("bad number {s:?}")))
            };
            Ok(ExperimentRecord {
                network: fields[0].to_string(),
                method: fields[1]
                    .parse::<MethodId>()
                    .map_err(|e| err(e.to_string()))?,
                k: fields[2]
                    .parse()
                    .map_err(|_| err(format!("bad k {:?}", fields[2])))?,
                avg_distance: float(fields[3])?,
                farness: fields[4]
                    .parse()
                    .map_err(|_| err(format!("bad farness {:?}", fields[4])))?,
                wall_time_s: float(fields[5])?,
            })
        })
        .collect()
}

fn comparison_csv(table: &ComparisonTable, with_rank: bool) -> String {
    let mut s = String::from(if with_rank {
        "network,method,mean_error_pct,rank\n"
    } else {
        "network,method,mean_error_pct\n"
    });
    for r in &table.rows {
        s.push_str(&format!(
            "{},{},{}",
            r.network,
            r.method.as_str(),
            format_sig(r.mean_error_pct)
        ));
        if with_rank {
            s.push_str(&format!(",{}", r.rank));
        }
        s.push('\n');
    }
    s
}

fn opt_sig(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

/// File-system friendly version of a network name.
fn file_stem(network: &str) -> String {
    network
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// Writes every table of `outcome` into `dir` and returns the paths, in
/// the order written:
///
/// * `records.csv`: one row per (network, method, k)
/// * `error_to_best.csv`, `error_to_random.csv`, `overall.csv`
/// * `within_percent.csv`: shares at 0, 1, 10 and 100 percent
/// * `super.csv`: pointwise best deterministic method with `E(k)`
/// * `timing.csv`: per-method cost and factor relative to `degree`
/// * `exact.csv`, `error_to_optimal.csv`: brute-force results
/// * `failures.txt`: skipped datasets and methods, if any
/// * `plot/<network>.dat`: `k method value` lines
pub fn emit_tables(outcome: &ExperimentOutcome, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir.join("plot")).map_err(|e| Error::io(dir, e))?;
    let records = outcome.records();
    let mut written = Vec::new();
    let mut put = |name: &str, contents: String| -> Result<()> {
        let path = dir.join(name);
        fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
        written.push(path);
        Ok(())
    };

    let mut buf = Vec::new();
    write_records(&records, &mut buf)?;
    put(
        "records.csv",
        String::from_utf8(buf).expect("utf-8 records"),
    )?;

    let best = error_to_best(&records);
    put("error_to_best.csv", comparison_csv(&best, true))?;
    put(
        "error_to_random.csv",
        comparison_csv(&error_to_random(&records), false),
    )?;
    let mut overall = String::from("method,mean_error_pct\n");
    for (method, err) in best.overall() {
        overall.push_str(&format!("{},{}\n", method.as_str(), format_sig(err)));
    }
    put("overall.csv", overall)?;

    let shares = within_percent_shares(&records, &SHARE_THRESHOLDS);
    let mut s = String::from("network,method");
    for x in &shares.thresholds {
        s.push_str(&format!(",within_{}", format_sig(*x)));
    }
    s.push('\n');
    for r in &shares.rows {
        s.push_str(&format!("{},{}", r.network, r.method.as_str()));
        for v in &r.shares {
            s.push_str(&format!(",{}", format_sig(*v)));
        }
        s.push('\n');
    }
    put("within_percent.csv", s)?;

    let mut s = String::from("network,k,method,avg_distance,expected\n");
    for r in super_algorithm(&records) {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.network,
            r.k,
            r.method.as_str(),
            format_sig(r.value),
            opt_sig(r.expected)
        ));
    }
    put("super.csv", s)?;

    let mut s = String::from("network,method,scoring_s,evaluation_s,total_s,cost_factor\n");
    let timing = timing_table(
        outcome
            .networks
            .iter()
            .map(|n| (n.network.as_str(), n.timings.as_slice())),
    );
    for r in timing {
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.network,
            r.timing.method.as_str(),
            format_sig(r.timing.scoring_s),
            format_sig(r.timing.evaluation_s),
            format_sig(r.timing.total_s()),
            opt_sig(r.cost_factor)
        ));
    }
    put("timing.csv", s)?;

    let mut s = String::from(
        "network,k,optimal_value,optimal_farness,optimal_sets,expected_value,subsets\n",
    );
    for run in &outcome.networks {
        for e in &run.exact {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                run.network,
                e.optimum.k,
                format_sig(e.optimum.optimal_value),
                e.optimum.optimal_farness,
                e.optimum.optimal_sets.len(),
                format_sig(e.expected.value()),
                e.optimum.subsets_examined
            ));
        }
    }
    put("exact.csv", s)?;

    // only k values the brute force reached take part
    let optimum = outcome.optimum();
    let covered: Vec<ExperimentRecord> = records
        .iter()
        .filter(|r| optimum.contains_key(&(r.network.clone(), r.k)))
        .cloned()
        .collect();
    let to_optimal = error_to_optimal(&covered, &optimum)?;
    put("error_to_optimal.csv", comparison_csv(&to_optimal, true))?;

    if !outcome.failures.is_empty() {
        let mut s = String::new();
        for f in &outcome.failures {
            let method = f.method.map_or("-", MethodId::as_str);
            s.push_str(&format!("{}\t{}\t{}\n", f.network, method, f.message));
        }
        put("failures.txt", s)?;
    }

    for run in &outcome.networks {
        let mut s = format!("# {}\n# k method avg_distance\n", run.network);
        for r in &run.records {
            s.push_str(&format!(
                "{} {} {}\n",
                r.k,
                r.method.as_str(),
                format_sig(r.avg_distance)
            ));
        }
        for e in &run.exact {
            s.push_str(&format!(
                "{} optimal {}\n",
                e.optimum.k,
                format_sig(e.optimum.optimal_value)
            ));
        }
        put(&format!("plot/{}.dat", file_stem(&run.network)), s)?;
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (3.9, "3.9"),
            (3.897097625329815, "3.8971"),
            (6.041884816753927, "6.04188"),
            (123456.7, "123457"),
            (999999.6, "1e6"),
            (1234567.0, "1.23457e6"),
            (0.000123456789, "0.000123457"),
            (0.00000123, "1.23e-6"),
            (9.999996, "10"),
            (-2.5, "-2.5"),
            (41.6, "41.6"),
            (100.0, "100"),
        ];
        for (x, want) in cases {
            assert_eq!(format_sig(x), want, "{x}");
        }
    }

    fn rec(k: usize, v: f64) -> ExperimentRecord {
        ExperimentRecord {
            network: "net".into(),
            method: MethodId::DegreePlus,
            k,
            avg_distance: v,
            farness: 17,
            wall_time_s: 0.25,
        }
    }

    #[test]
    fn empty_records_are_header_only() {
        let mut buf = Vec::new();
        write_records(&[], &mut buf).unwrap();
        assert_eq!(buf, format!("{RECORDS_HEADER}\n").as_bytes());
        assert_eq!(parse_records(&String::from_utf8(buf).unwrap()).unwrap(), []);
    }

    #[test]
    fn one_record_exact_row() {
        let mut buf = Vec::new();
        write_records(&[rec(3, 2.125)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            format!("{RECORDS_HEADER}\nnet,degree+,3,2.125,17,0.25\n")
        );
        assert_eq!(parse_records(&text).unwrap(), [rec(3, 2.125)]);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_records("a,b\n").is_err());
        let bad = format!("{RECORDS_HEADER}\nnet,degree,1,2.0,3\n");
        assert!(matches!(
            parse_records(&bad),
            Err(Error::Parse { line: 2, .. })
        ));
        let bad = format!("{RECORDS_HEADER}\nnet,closeness,1,2.0,3,0\n");
        assert!(parse_records(&bad).is_err());
    }

    #[test]
    fn stems() {
        assert_eq!(file_stem("gen:ba:100:3:1"), "gen_ba_100_3_1");
        assert_eq!(file_stem("ca-netscience"), "ca-netscience");
    }
}

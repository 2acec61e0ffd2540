//! Command line surface over the singularity library.
//!
//! Every subcommand takes a singularity type 1/n(1, q) (or a bound for
//! `sweep`), computes exactly, and renders the result as a human table,
//! JSON, or TSV. Exit codes: 0 for success, 1 when a verification check
//! fails, 2 for invalid input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_core::{
    collection_report, digits_report, expansion_report, ext_table_report, specials_report, sweep,
    verify_report, CheckItem, InstanceReport, SingularityType, SweepRow,
};

#[derive(Parser)]
#[command(
    name = "mckay",
    version,
    about = "Exact invariants of cyclic quotient singularities 1/n(1, q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "MCKAY_FORMAT",
        default_value_t = Format::Table
    )]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction data of n/q: partial quotients and the i, j sequences.
    Expand(Instance),
    /// The special / non-special partition of the characters of Z/n.
    Specials(Instance),
    /// Digit expansion and dual value of every residue.
    Digits(Instance),
    /// The exceptional collection and its K-theory class matrix.
    Collection(Instance),
    /// Hom, Ext^1, Ext^2 dimensions over all ordered collection pairs.
    ExtTable(WithOracle),
    /// Run every invariant check for one singularity type.
    Verify(WithOracle),
    /// Verify all coprime (n, q) with n up to a bound.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct Instance {
    /// Order of the cyclic group.
    #[arg(long)]
    n: i64,
    /// Weight of the second coordinate; coprime to n, 0 < q < n.
    #[arg(long)]
    q: i64,
}

#[derive(Args)]
struct WithOracle {
    #[command(flatten)]
    instance: Instance,
    /// Recompute every Ext entry from the projective resolution as well.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest n to include; all coprime q are swept for each n.
    #[arg(long, value_name = "N")]
    n_max: i64,
    /// Cross-check Ext tables against the resolution oracle per instance.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Tsv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether all requested verification passed; anything that stops
/// the computation itself (bad input, unwritable output) is an Err.
fn run(cli: &Cli) -> Result<bool, String> {
    let (text, pass) = match &cli.command {
        Command::Expand(inst) => (render_expand(&instance(inst)?, cli.format), true),
        Command::Specials(inst) => (render_specials(&instance(inst)?, cli.format), true),
        Command::Digits(inst) => (render_digits(&instance(inst)?, cli.format), true),
        Command::Collection(inst) => (render_collection(&instance(inst)?, cli.format), true),
        Command::ExtTable(args) => {
            let rep = ext_table_report(&instance(&args.instance)?, args.oracle);
            let pass = rep
                .ext_table
                .as_ref()
                .map(|rows| rows.iter().all(|r| r.oracle_agrees != Some(false)))
                .unwrap_or(true);
            (render_ext_table(&rep, cli.format), pass)
        }
        Command::Verify(args) => {
            let rep = verify_report(&instance(&args.instance)?, args.oracle);
            let pass = rep
                .checks
                .as_ref()
                .map(|checks| checks.iter().all(|c| c.pass))
                .unwrap_or(true);
            (render_verify(&rep, cli.format), pass)
        }
        Command::Sweep(args) => {
            if args.n_max < 2 {
                return Err(format!("sweep needs --n-max >= 2, got {}", args.n_max));
            }
            let rows = sweep(args.n_max, args.oracle);
            let pass = rows.iter().all(|row| row.pass);
            (render_sweep(&rows, cli.format), pass)
        }
    };
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|err| format!("cannot write output: {err}"))?,
        None => print!("{text}"),
    }
    Ok(pass)
}

fn instance(inst: &Instance) -> Result<mckay_core::HjExpansion, String> {
    SingularityType::new(inst.n, inst.q)
        .map(mckay_core::expand)
        .map_err(|err| err.to_string())
}

fn json(rep: &InstanceReport) -> String {
    let mut text = serde_json::to_string_pretty(rep).expect("reports serialize");
    text.push('\n');
    text
}

/// Space-align columns; the first row is the header.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[c]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|row| row.join("\t"))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn headline(rep: &InstanceReport) -> String {
    format!(
        "1/{}(1, {}): n/q = [{}], q' = {}, r = {}\n",
        rep.n,
        rep.q,
        rep.b
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        rep.q_prime,
        rep.b.len()
    )
}

fn sequence_rows(rep: &InstanceReport) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["t".into(), "b".into(), "i".into(), "j".into()]];
    for t in 0..rep.i.len() {
        let b = if t >= 1 && t <= rep.b.len() {
            rep.b[t - 1].to_string()
        } else {
            "-".into()
        };
        rows.push(vec![
            t.to_string(),
            b,
            rep.i[t].to_string(),
            rep.j[t].to_string(),
        ]);
    }
    rows
}

fn render_expand(e: &mckay_core::HjExpansion, format: Format) -> String {
    let rep = expansion_report(e);
    match format {
        Format::Json => json(&rep),
        Format::Tsv => tsv(&sequence_rows(&rep)),
        Format::Table => headline(&rep) + &align(&sequence_rows(&rep)),
    }
}

fn render_specials(e: &mckay_core::HjExpansion, format: Format) -> String {
    let rep = specials_report(e);
    let specials = rep.specials.clone().unwrap_or_default();
    let non_specials = rep.non_specials.clone().unwrap_or_default();
    match format {
        Format::Json => json(&rep),
        Format::Tsv => {
            let mut rows = vec![vec!["residue".into(), "special".into()]];
            for v in 0..rep.n {
                let flag = specials.contains(&v);
                rows.push(vec![v.to_string(), i64::from(flag).to_string()]);
            }
            tsv(&rows)
        }
        Format::Table => {
            headline(&rep)
                + &format!(
                    "special characters ({}): {}\nnon-special characters ({}): {}\n",
                    specials.len(),
                    join(&specials),
                    non_specials.len(),
                    join(&non_specials),
                )
        }
    }
}

fn digit_rows(rep: &InstanceReport) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["d".into(), "digits".into(), "f".into()]];
    for row in rep.digits.as_deref().unwrap_or_default() {
        rows.push(vec![
            row.d.to_string(),
            join(&row.digits),
            row.f.to_string(),
        ]);
    }
    rows
}

fn render_digits(e: &mckay_core::HjExpansion, format: Format) -> String {
    let rep = digits_report(e);
    match format {
        Format::Json => json(&rep),
        Format::Tsv => tsv(&digit_rows(&rep)),
        Format::Table => headline(&rep) + &align(&digit_rows(&rep)),
    }
}

fn object_rows(rep: &InstanceReport) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "d".into(),
        "level".into(),
        "length".into(),
        "twist".into(),
        "chars".into(),
    ]];
    for obj in rep.collection.as_deref().unwrap_or_default() {
        rows.push(vec![
            obj.d.to_string(),
            obj.level.to_string(),
            obj.length.to_string(),
            obj.twist.to_string(),
            join(&obj.chars),
        ]);
    }
    rows
}

fn render_collection(e: &mckay_core::HjExpansion, format: Format) -> String {
    let rep = collection_report(e);
    match format {
        Format::Json => json(&rep),
        Format::Tsv => tsv(&object_rows(&rep)),
        Format::Table => {
            let mut out = headline(&rep);
            let members = rep.collection.as_deref().unwrap_or_default().len();
            out.push_str(&format!("collection members: {members}\n"));
            out.push_str(&align(&object_rows(&rep)));
            if let Some(matrix) = &rep.k_matrix {
                out.push_str(&format!(
                    "K-matrix over non-special characters [{}]:\n",
                    join(rep.non_specials.as_deref().unwrap_or_default())
                ));
                for row in matrix {
                    out.push_str(&join(row).replace(',', " "));
                    out.push('\n');
                }
            }
            out
        }
    }
}

fn ext_rows(rep: &InstanceReport, with_oracle: bool) -> Vec<Vec<String>> {
    let mut header = vec![
        "d".to_string(),
        "d_prime".to_string(),
        "hom".to_string(),
        "ext1".to_string(),
        "ext2".to_string(),
    ];
    if with_oracle {
        header.push("oracle_agrees".into());
    }
    let mut rows = vec![header];
    for row in rep.ext_table.as_deref().unwrap_or_default() {
        let mut cells = vec![
            row.d.to_string(),
            row.d_prime.to_string(),
            row.hom.to_string(),
            row.ext1.to_string(),
            row.ext2.to_string(),
        ];
        if with_oracle {
            cells.push(
                row.oracle_agrees
                    .map(|a| a.to_string())
                    .unwrap_or_else(|| "-".into()),
            );
        }
        rows.push(cells);
    }
    rows
}

fn render_ext_table(rep: &InstanceReport, format: Format) -> String {
    let with_oracle = rep
        .ext_table
        .as_deref()
        .unwrap_or_default()
        .iter()
        .any(|row| row.oracle_agrees.is_some());
    match format {
        Format::Json => json(rep),
        Format::Tsv => tsv(&ext_rows(rep, with_oracle)),
        Format::Table => headline(rep) + &align(&ext_rows(rep, with_oracle)),
    }
}

fn check_rows(checks: &[CheckItem]) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["status".into(), "check".into(), "detail".into()]];
    for check in checks {
        rows.push(vec![
            if check.pass { "PASS" } else { "FAIL" }.into(),
            check.name.clone(),
            check.detail.clone(),
        ]);
    }
    rows
}

fn render_verify(rep: &InstanceReport, format: Format) -> String {
    let checks = rep.checks.as_deref().unwrap_or_default();
    match format {
        Format::Json => json(rep),
        Format::Tsv => {
            let mut rows = vec![vec!["check".into(), "pass".into(), "detail".into()]];
            for check in checks {
                rows.push(vec![
                    check.name.clone(),
                    i64::from(check.pass).to_string(),
                    check.detail.clone(),
                ]);
            }
            tsv(&rows)
        }
        Format::Table => {
            let failed = checks.iter().filter(|c| !c.pass).count();
            let mut out = headline(rep);
            out.push_str(&align(&check_rows(checks)));
            out.push_str(&if failed == 0 {
                format!("verify: all {} checks pass\n", checks.len())
            } else {
                format!("verify: {failed} of {} checks FAILED\n", checks.len())
            });
            out
        }
    }
}

fn render_sweep(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row).expect("rows serialize"));
                out.push('\n');
            }
            out
        }
        Format::Tsv => {
            let mut table = vec![vec![
                "n".to_string(),
                "q".to_string(),
                "pass".to_string(),
                "failed".to_string(),
            ]];
            for row in rows {
                table.push(vec![
                    row.n.to_string(),
                    row.q.to_string(),
                    i64::from(row.pass).to_string(),
                    row.failed.join(","),
                ]);
            }
            tsv(&table)
        }
        Format::Table => {
            let mut out = String::new();
            let mut failures = 0;
            for row in rows {
                if row.pass {
                    out.push_str(&format!("PASS {:>4} {:>4}\n", row.n, row.q));
                } else {
                    failures += 1;
                    out.push_str(&format!(
                        "FAIL {:>4} {:>4} {}\n",
                        row.n,
                        row.q,
                        row.failed.join(",")
                    ));
                }
            }
            out.push_str(&if failures == 0 {
                format!("sweep: all {} instances pass\n", rows.len())
            } else {
                format!("sweep: {failures} of {} instances FAILED\n", rows.len())
            });
            out
        }
    }
}

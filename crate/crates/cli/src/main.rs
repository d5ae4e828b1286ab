//! Command-line surface: print triangles, expand polynomials in the
//! q-number basis, decompose tensor powers, verify the identities, and emit
//! named sequences (plain or OEIS b-file format).
//!
//! Exit status: 0 success / all checks pass, 1 verification failure,
//! 2 usage or parse error, 3 resource limit exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Pow;

use qtriangles::catalog::{
    self, catalan_via_binomials, motzkin_via_binomials, motzkin_via_catalan,
};
use qtriangles::combinat::{self, Vertex, DEFAULT_ENUMERATION_CAP};
use qtriangles::laurent::LaurentPoly;
use qtriangles::sl2::{self, RepSum};
use qtriangles::triangle::{Anchor, Triangle};
use qtriangles::{Error, Exponent};

/// Caps keeping single invocations at desk scale; exceeding one exits
/// with status 3.
const MAX_ROWS: usize = 1000;
const MAX_SEQ_COUNT: usize = 500;
const MAX_EXPAND_POWER: u64 = 10_000;
const MAX_DENSE_WIDTH: i128 = 1_000_001;
const MAX_VERIFY_ORDER: u32 = 8;
const MAX_VERIFY_N: usize = 30;
const MAX_PATHS_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "qtriangles",
    version,
    about = "Exact integer triangles, q-number expansions, and sl2 tensor multiplicities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first rows of a triangle, full signed window
    Triangle {
        /// Family to print
        #[arg(value_enum)]
        family: FamilyArg,
        /// Order d >= 2 (pascal/catalan/motzkin)
        #[arg(long)]
        order: Option<u32>,
        /// Symmetric multiplier polynomial (general), e.g. "q^2+q+3+q^-1+q^-2"
        #[arg(long)]
        poly: Option<String>,
        /// Number of rows to print, starting at row 0
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = TriangleFormat::Text)]
        format: TriangleFormat,
    },
    /// Expand a symmetric polynomial in the q-number basis [k]_q
    Expand {
        /// Polynomial text, e.g. "q+q^-1"
        poly: String,
        /// Raise the polynomial to this power before expanding
        #[arg(long, default_value_t = 1)]
        power: u64,
    },
    /// Decompose a tensor power of a representation sum
    Decompose {
        /// Representation sum, e.g. "2:1+3:1" or bare "2"
        #[arg(long)]
        rep: String,
        /// Tensor power n >= 0
        #[arg(long)]
        power: u64,
    },
    /// Machine-check identities; prints one PASS/FAIL line per case
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        /// Inclusive order range, e.g. "2..6" or a single "3"
        #[arg(long)]
        d: Option<String>,
        /// Largest row index to check
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print a named integer sequence
    Seq {
        /// Sequence name: catalan, motzkin, riordan, catalan(d), motzkin(d),
        /// central_pascal(d), sum_of_squares(d,family)
        name: String,
        /// Number of terms, starting at index 0
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = SeqFormat::Text)]
        format: SeqFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pascal,
    Catalan,
    Motzkin,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Text,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Squares,
    CatalanFormula,
    MotzkinFormulas,
    Paths,
    Bratteli,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ResourceLimit(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Triangle {
            family,
            order,
            poly,
            rows,
            format,
        } => {
            cmd_triangle(family, order, poly, rows, format)?;
            Ok(true)
        }
        Command::Expand { poly, power } => {
            cmd_expand(&poly, power)?;
            Ok(true)
        }
        Command::Decompose { rep, power } => {
            cmd_decompose(&rep, power)?;
            Ok(true)
        }
        Command::Verify { check, d, n } => cmd_verify(check, d.as_deref(), n),
        Command::Seq {
            name,
            count,
            format,
        } => {
            cmd_seq(&name, count, format)?;
            Ok(true)
        }
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::Parse {
        offset: 0,
        message: message.into(),
    }
}

fn cmd_triangle(
    family: FamilyArg,
    order: Option<u32>,
    poly: Option<String>,
    rows: usize,
    format: TriangleFormat,
) -> Result<(), Error> {
    if rows < 1 {
        return Err(usage("--rows must be at least 1"));
    }
    if rows > MAX_ROWS {
        return Err(Error::ResourceLimit(format!(
            "--rows {rows} exceeds the cap of {MAX_ROWS}"
        )));
    }
    let triangle = match family {
        FamilyArg::General => {
            if order.is_some() {
                return Err(usage("--order does not apply to the general family"));
            }
            let text = poly.ok_or_else(|| usage("the general family needs --poly"))?;
            let p: LaurentPoly = text.parse()?;
            catalog::general_char_triangle(&p)?
        }
        named => {
            if poly.is_some() {
                return Err(usage("--poly only applies to the general family"));
            }
            let d = order.ok_or_else(|| usage("this family needs --order"))?;
            match named {
                FamilyArg::Pascal => catalog::pascal(d)?,
                FamilyArg::Catalan => catalog::catalan(d)?,
                FamilyArg::Motzkin => catalog::motzkin(d)?,
                FamilyArg::General => unreachable!(),
            }
        }
    };

    // the widest printed row bounds the work; refuse absurd windows upfront
    let span = {
        let rule_span = triangle.rule().max_offset() - triangle.rule().min_offset();
        let init = triangle.init().entries();
        let init_span = match (init.first_key_value(), init.last_key_value()) {
            (Some((&lo, _)), Some((&hi, _))) => hi - lo,
            _ => 0,
        };
        init_span + rule_span * (rows as i128 - 1) + 1
    };
    if span > MAX_DENSE_WIDTH {
        return Err(Error::ResourceLimit(format!(
            "printed window of {span} columns exceeds the cap of {MAX_DENSE_WIDTH}"
        )));
    }

    let separator = match format {
        TriangleFormat::Text => " ",
        TriangleFormat::Csv => ",",
    };
    let mut out = String::new();
    for n in 0..rows {
        match triangle.dense_row(n) {
            None => out.push('0'),
            Some((_, values)) => {
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        out.push_str(separator);
                    }
                    out.push_str(&v.to_string());
                }
            }
        }
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn cmd_expand(poly: &str, power: u64) -> Result<(), Error> {
    let p: LaurentPoly = poly.parse()?;
    if power > MAX_EXPAND_POWER {
        return Err(Error::ResourceLimit(format!(
            "--power {power} exceeds the cap of {MAX_EXPAND_POWER}"
        )));
    }
    if let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) {
        let width = (hi - lo) * power as i128 + 1;
        if width > MAX_DENSE_WIDTH {
            return Err(Error::ResourceLimit(format!(
                "expansion support of {width} exponents exceeds the cap of {MAX_DENSE_WIDTH}"
            )));
        }
    }
    let expansion = p.pow(power).expand_q_basis()?;
    let mut out = String::new();
    for (k, coeff) in expansion.iter() {
        out.push_str(&format!("{k} {coeff}\n"));
    }
    print!("{out}");
    Ok(())
}

fn cmd_decompose(rep: &str, power: u64) -> Result<(), Error> {
    let r: RepSum = rep.parse()?;
    if r.is_empty() {
        return Err(usage("the representation sum must be nonempty"));
    }
    if power > MAX_EXPAND_POWER {
        return Err(Error::ResourceLimit(format!(
            "--power {power} exceeds the cap of {MAX_EXPAND_POWER}"
        )));
    }
    let max_dim = *r.iter().last().expect("nonempty").0;
    let width = 2 * (max_dim - 1) * power as i128 + 1;
    if width > MAX_DENSE_WIDTH {
        return Err(Error::ResourceLimit(format!(
            "character support of {width} exponents exceeds the cap of {MAX_DENSE_WIDTH}"
        )));
    }
    let decomposition = sl2::decompose_tensor_power(&r, power)?;
    let mut out = String::new();
    for (k, mult) in decomposition.iter() {
        out.push_str(&format!("V({k}) {mult}\n"));
    }
    out.push_str(&format!("dim {}\n", Pow::pow(r.total_dimension(), power)));
    print!("{out}");
    Ok(())
}

fn cmd_seq(name: &str, count: usize, format: SeqFormat) -> Result<(), Error> {
    if count > MAX_SEQ_COUNT {
        return Err(Error::ResourceLimit(format!(
            "--count {count} exceeds the cap of {MAX_SEQ_COUNT}"
        )));
    }
    let values = catalog::named_sequence(name, count)?;
    let mut out = String::new();
    match format {
        SeqFormat::Text => {
            if !values.is_empty() {
                let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                out.push_str(&rendered.join(","));
                out.push('\n');
            }
        }
        SeqFormat::Bfile => {
            for (index, value) in values.iter().enumerate() {
                out.push_str(&format!("{index} {value}\n"));
            }
        }
    }
    print!("{out}");
    Ok(())
}

/// Inclusive order range: "2..6", "2..=6" or a single "3".
fn parse_d_range(text: Option<&str>, default: (u32, u32)) -> Result<(u32, u32), Error> {
    let (lo, hi) = match text {
        None => default,
        Some(s) => {
            let parse_end = |piece: &str| -> Result<u32, Error> {
                piece
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("cannot read order {piece:?}")))
            };
            match s.split_once("..") {
                None => {
                    let d = parse_end(s)?;
                    (d, d)
                }
                Some((lo, hi)) => {
                    let hi = hi.strip_prefix('=').unwrap_or(hi);
                    (parse_end(lo)?, parse_end(hi)?)
                }
            }
        }
    };
    if lo < 2 || hi < lo {
        return Err(usage(format!("bad order range {lo}..{hi}")));
    }
    if hi > MAX_VERIFY_ORDER {
        return Err(Error::ResourceLimit(format!(
            "order {hi} exceeds the cap of {MAX_VERIFY_ORDER}"
        )));
    }
    Ok((lo, hi))
}

fn check_verify_n(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "--n {n} exceeds the cap of {cap}"
        )));
    }
    Ok(())
}

struct Report {
    all_pass: bool,
}

impl Report {
    fn new() -> Self {
        Report { all_pass: true }
    }

    fn case(&mut self, label: &str, pass: bool, detail: &str) {
        if pass {
            println!("PASS {label}");
        } else {
            self.all_pass = false;
            println!("FAIL {label}: {detail}");
        }
    }
}

fn cmd_verify(check: CheckArg, d: Option<&str>, n: Option<usize>) -> Result<bool, Error> {
    let mut report = Report::new();
    match check {
        CheckArg::Squares => {
            let (lo, hi) = parse_d_range(d, (2, 6))?;
            let n = n.unwrap_or(12);
            check_verify_n(n, MAX_VERIFY_N)?;
            for d in lo..=hi {
                verify_squares(
                    &mut report,
                    &format!("squares pascal({d})"),
                    &catalog::pascal(d)?,
                    Anchor::Center,
                    n,
                )?;
                verify_squares(
                    &mut report,
                    &format!("squares catalan({d})"),
                    &catalog::catalan(d)?,
                    Anchor::FirstPositive,
                    n,
                )?;
                verify_squares(
                    &mut report,
                    &format!("squares motzkin({d})"),
                    &catalog::motzkin(d)?,
                    Anchor::FirstPositive,
                    n,
                )?;
            }
            let example: LaurentPoly = "q^2+q+3+q^-1+q^-2".parse()?;
            verify_squares(
                &mut report,
                "squares general(q^2+q+3+q^-1+q^-2)",
                &catalog::general_char_triangle(&example)?,
                Anchor::FirstPositive,
                n,
            )?;
        }
        CheckArg::CatalanFormula => {
            let (lo, hi) = parse_d_range(d, (2, 6))?;
            let n = n.unwrap_or(15);
            check_verify_n(n, MAX_VERIFY_N)?;
            for d in lo..=hi {
                let t = catalog::catalan(d)?;
                let mut failure = None;
                'scan: for row in 0..=n {
                    let reach = row as i128 * (d as i128 - 1) + 2;
                    for k in -reach..=reach {
                        if catalan_via_binomials(d, k, row)? != t.entry(k, row) {
                            failure = Some(format!("first mismatch at k={k} n={row}"));
                            break 'scan;
                        }
                    }
                }
                report.case(
                    &format!("catalan-formula d={d} n<={n}"),
                    failure.is_none(),
                    failure.as_deref().unwrap_or(""),
                );
            }
        }
        CheckArg::MotzkinFormulas => {
            let (lo, hi) = parse_d_range(d, (2, 6))?;
            let n = n.unwrap_or(15);
            check_verify_n(n, MAX_VERIFY_N)?;
            for d in lo..=hi {
                let t = catalog::motzkin(d)?;
                let mut binom_failure = None;
                let mut catalan_failure = None;
                for row in 0..=n {
                    let reach = row as i128 * (d as i128 - 1) + 2;
                    for k in -reach..=reach {
                        let engine = t.entry(k, row);
                        if binom_failure.is_none() && motzkin_via_binomials(d, k, row)? != engine {
                            binom_failure = Some(format!("first mismatch at k={k} n={row}"));
                        }
                        if catalan_failure.is_none() && motzkin_via_catalan(d, k, row)? != engine {
                            catalan_failure = Some(format!("first mismatch at k={k} n={row}"));
                        }
                    }
                }
                report.case(
                    &format!("motzkin-formulas binomial d={d} n<={n}"),
                    binom_failure.is_none(),
                    binom_failure.as_deref().unwrap_or(""),
                );
                report.case(
                    &format!("motzkin-formulas catalan d={d} n<={n}"),
                    catalan_failure.is_none(),
                    catalan_failure.as_deref().unwrap_or(""),
                );
            }
        }
        CheckArg::Paths => {
            let (lo, hi) = parse_d_range(d, (2, 4))?;
            let n = n.unwrap_or(10);
            check_verify_n(n, MAX_PATHS_N)?;
            for d in lo..=hi {
                verify_paths(
                    &mut report,
                    &format!("pascal({d})"),
                    &catalog::pascal(d)?,
                    n,
                );
                verify_paths(
                    &mut report,
                    &format!("catalan({d})"),
                    &catalog::catalan(d)?,
                    n,
                );
                verify_paths(
                    &mut report,
                    &format!("motzkin({d})"),
                    &catalog::motzkin(d)?,
                    n,
                );
            }
            let example: LaurentPoly = "q^2+q+3+q^-1+q^-2".parse()?;
            verify_paths(
                &mut report,
                "general(q^2+q+3+q^-1+q^-2)",
                &catalog::general_char_triangle(&example)?,
                n,
            );
        }
        CheckArg::Bratteli => {
            let (lo, hi) = parse_d_range(d, (2, 4))?;
            let n = n.unwrap_or(8);
            check_verify_n(n, MAX_VERIFY_N)?;
            for d in lo..=hi {
                let t = catalog::catalan(d)?;
                let mut failure = None;
                'levels: for level in 0..=n {
                    let counts = combinat::bratteli_counts(d, level)?;
                    let positive = t.positive_part(level);
                    if counts.len() != positive.len() {
                        failure = Some(format!("vertex count differs at level {level}"));
                        break;
                    }
                    for (p, count) in &counts {
                        if count != &t.entry(p.rep_dimension() as Exponent, level) {
                            failure = Some(format!("count at {p} differs at level {level}"));
                            break 'levels;
                        }
                    }
                }
                report.case(
                    &format!("bratteli d={d} n<={n}"),
                    failure.is_none(),
                    failure.as_deref().unwrap_or(""),
                );
            }
        }
    }
    Ok(report.all_pass)
}

fn verify_squares(
    report: &mut Report,
    label: &str,
    t: &Triangle,
    anchor: Anchor,
    n: usize,
) -> Result<(), Error> {
    let mut failure = None;
    for row in 0..=n {
        let check = t.sum_of_squares_identity(row, anchor)?;
        if !check.holds {
            failure = Some(format!("n={row}: {} != {}", check.lhs, check.rhs));
            break;
        }
    }
    report.case(
        &format!("{label} n<={n}"),
        failure.is_none(),
        failure.as_deref().unwrap_or(""),
    );
    Ok(())
}

fn verify_paths(report: &mut Report, label: &str, t: &Triangle, n: usize) {
    // signed path counts against engine entries, all columns
    let mut failure = None;
    'rows: for row in 0..=n {
        if let Some((start, values)) = t.dense_row(row) {
            for (i, value) in values.iter().enumerate() {
                let k = start + i as i128;
                if &combinat::signed_path_value(t.rule(), t.init(), k, row) != value {
                    failure = Some(format!("signed count differs at k={k} n={row}"));
                    break 'rows;
                }
            }
        }
    }
    report.case(
        &format!("paths signed {label} n<={n}"),
        failure.is_none(),
        failure.as_deref().unwrap_or(""),
    );

    // brute-force enumeration against dynamic programming, within budget
    let fanout = t.rule().offset_count() as u64;
    let mut depth = 0usize;
    let mut sequences = 1u64;
    while depth < n && sequences.saturating_mul(fanout) <= 10_000 {
        sequences = sequences.saturating_mul(fanout);
        depth += 1;
    }
    let mut failure = None;
    'depths: for row in 0..=depth {
        let reach = row as i128 * t.rule().max_offset().abs().max(t.rule().min_offset().abs()) + 1;
        for k in -reach..=reach {
            let from = Vertex::new(1, 0);
            let to = Vertex::new(k, row);
            let dp = combinat::count_paths(t.rule(), from, to).expect("downward");
            let brute = combinat::enumerate_paths(t.rule(), from, to, DEFAULT_ENUMERATION_CAP)
                .expect("within budget");
            if dp != brute {
                failure = Some(format!("enumeration differs at k={k} n={row}"));
                break 'depths;
            }
        }
    }
    report.case(
        &format!("paths enumerate {label} n<={depth}"),
        failure.is_none(),
        failure.as_deref().unwrap_or(""),
    );
}

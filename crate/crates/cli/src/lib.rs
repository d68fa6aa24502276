//! The `sbl` command line.
//!
//! Exit codes: 0 on success or a passing verification, 1 when verification
//! fails or a system is singular, 2 on usage and parse errors.

pub mod figure;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use sbl_core::lin::{format_rational, membership, nonneg_combination, parse_rational, solve_class};
use sbl_core::{
    canonical_class, decompose, Catalog, Decomposition, Error, FaceLabel, NSVector, Placement,
    Rational, Resolution, SpaceId,
};

const SPACE_HELP: &str = "Space: a regime name (deg2, deg3_general, deg3_lines) or k,n,d";

#[derive(Parser, Debug)]
#[command(
    name = "sbl",
    version,
    about = "Stable base locus decompositions of Kontsevich spaces of conics and twisted cubics",
    after_help = "Divisor and locus names are ASCII: H11, H2, Delta, Ddeg, Dunb, S', C[(1,1)^*].\n\
                  Rationals are written p/q or as integers."
)]
pub struct Cli {
    /// TOML file whose entries replace or extend the built-in catalog.
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the merged chambers with their stable base loci.
    Chambers {
        #[arg(help = SPACE_HELP)]
        space: String,
    },
    /// Locate the class a*H11 + b*H2 + c*Delta in the decomposition.
    Classify {
        #[arg(help = SPACE_HELP)]
        space: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Check the decomposition against the expected chamber table.
    Verify {
        #[arg(help = SPACE_HELP)]
        space: String,
        /// Also write the report here; JSON when the name ends in .json.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Write an SVG cross-section of the decomposition.
    Figure {
        #[arg(help = SPACE_HELP)]
        space: String,
        #[arg(short, long, value_name = "PATH")]
        output: PathBuf,
    },
    /// Solve for a class from three curve rows and their intersection numbers.
    ///
    /// Each non-comment line holds an optional curve name, the three row
    /// entries and the value, e.g. `C1 1 0 3 0`.
    SolveClass { file: PathBuf },
    /// Print the canonical class of K(G(k,n), d) and where -K sits relative
    /// to Cone(H11, H2, T).
    Canonical { k: u32, n: u32, d: u32 },
}

/// A failed command with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidSpace(_)
            | Error::Malformed(_)
            | Error::Partition(_)
            | Error::Io(_)
            | Error::Validation(_) => 2,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn load(space: &str, catalog: Option<&Path>) -> Result<Catalog, Failure> {
    let space: SpaceId = space.parse()?;
    Ok(Catalog::load(space, catalog)?)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let cat_path = cli.catalog.as_deref();
    match &cli.command {
        Command::Chambers { space } => {
            let d = decompose(&load(space, cat_path)?)?;
            write!(out, "{}", chamber_table(&d)).map_err(io)?;
            Ok(0)
        }
        Command::Classify { space, a, b, c } => {
            let v = NSVector::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
            let d = decompose(&load(space, cat_path)?)?;
            writeln!(out, "{}", classify(&d, &v)?).map_err(io)?;
            Ok(0)
        }
        Command::Verify { space, output } => {
            let report = decompose(&load(space, cat_path)?)?.report();
            let text = report.to_text();
            write!(out, "{text}").map_err(io)?;
            if let Some(p) = output {
                let body = if p.extension().is_some_and(|e| e == "json") {
                    report.to_json() + "\n"
                } else {
                    text
                };
                std::fs::write(p, body).map_err(io)?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Figure { space, output } => {
            let d = decompose(&load(space, cat_path)?)?;
            std::fs::write(output, figure::render(&d)).map_err(io)?;
            writeln!(
                out,
                "wrote {} ({} chambers)",
                output.display(),
                d.chambers().len()
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::SolveClass { file } => {
            let text = std::fs::read_to_string(file).map_err(io)?;
            let (rows, values) = parse_system(&text)?;
            let v = solve_class(&rows, &values)?;
            writeln!(out, "{}", format_class(&v)).map_err(io)?;
            Ok(0)
        }
        Command::Canonical { k, n, d } => {
            writeln!(out, "{}", canonical(*k, *n, *d)?.trim_end()).map_err(io)?;
            Ok(0)
        }
    }
}

fn format_class(v: &NSVector) -> String {
    v.coords()
        .iter()
        .map(|r| format_rational(r))
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe(l: &FaceLabel) -> String {
    let locus = if l.lower.is_empty() {
        "empty".to_string()
    } else {
        l.lower.to_string()
    };
    if l.is_resolved() {
        format!("stable base locus {locus}")
    } else {
        format!(
            "unresolved: lower bound {}, upper bound {}",
            l.lower, l.upper
        )
    }
}

fn chamber_name(items: &[Option<u32>], c: usize) -> String {
    match items[c] {
        Some(i) => format!("chamber {i}"),
        None => format!("unmatched chamber #{c}"),
    }
}

/// One row per chamber, ordered by item id.
pub fn chamber_table(d: &Decomposition) -> String {
    let report = d.report();
    let mut s = format!("{:<5} {:<9} {:<26} {}\n", "item", "status", "rays", "locus");
    for c in &report.per_chamber {
        let item = c.item.map_or("-".to_string(), |i| i.to_string());
        let status = match &c.resolution {
            Resolution::Resolved => "resolved".to_string(),
            Resolution::Gap { .. } => "gap".to_string(),
        };
        let locus = match &c.resolution {
            Resolution::Resolved => c.locus.to_string(),
            Resolution::Gap { lower, upper } => format!("lower {lower} upper {upper}"),
        };
        s.push_str(&format!(
            "{item:<5} {status:<9} {:<26} {locus}\n",
            c.rays.join(" ")
        ));
    }
    s
}

fn classify(d: &Decomposition, v: &NSVector) -> Result<String, Failure> {
    if v.is_zero() {
        return Err(Failure::usage("the zero class is not a ray"));
    }
    let items = d.match_items();
    Ok(match d.classify(v)? {
        Placement::NotEffective => "not effective".to_string(),
        Placement::Ray { name, label } => format!("ray {name}: {}", describe(&label)),
        Placement::Vertex { label, .. } => {
            format!("vertex of the arrangement: {}", describe(&label))
        }
        Placement::Edge {
            index,
            label,
            chambers,
        } => {
            let arr = d.arrangement();
            let lines: Vec<String> = arr.edges()[index]
                .bounding_lines
                .iter()
                .flat_map(|&l| arr.lines()[l].origins.iter().map(|o| o.to_string()))
                .collect();
            let sides: Vec<String> = chambers.iter().map(|&c| chamber_name(&items, c)).collect();
            format!(
                "wall on {} between {}: {}",
                lines.join(" / "),
                sides.join(" and "),
                describe(&label)
            )
        }
        Placement::Chamber { index, label } => {
            let nef = if label.lower.is_empty() && label.is_resolved() {
                " (nef)"
            } else {
                ""
            };
            format!("{}{nef}: {}", chamber_name(&items, index), describe(&label))
        }
    })
}

fn parse_system(text: &str) -> Result<([NSVector; 3], [Rational; 3]), Failure> {
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 5 {
            fields.remove(0);
        }
        if fields.len() != 4 {
            return Err(Failure::usage(format!(
                "line {}: expected an optional name, three row entries and a value",
                no + 1
            )));
        }
        let nums = fields
            .iter()
            .map(|f| parse_rational(f))
            .collect::<sbl_core::Result<Vec<_>>>()
            .map_err(|e| Failure::usage(format!("line {}: {e}", no + 1)))?;
        rows.push(NSVector::new(
            nums[0].clone(),
            nums[1].clone(),
            nums[2].clone(),
        ));
        values.push(nums[3].clone());
    }
    let rows: [NSVector; 3] = rows
        .try_into()
        .map_err(|r: Vec<_>| Failure::usage(format!("expected 3 curve rows, found {}", r.len())))?;
    let values: [Rational; 3] = values.try_into().expect("one value per row");
    Ok((rows, values))
}

fn canonical(k: u32, n: u32, d: u32) -> Result<String, Failure> {
    let space = SpaceId::new(k, n, d).map_err(|e| Failure::usage(e.to_string()))?;
    let kc = canonical_class(k, n, d)?;
    let minus = -&kc;
    let cat = Catalog::builtin(space);
    let gens = [
        NSVector::h11(),
        NSVector::h2(),
        cat.class_of("T").expect("every catalog has T").clone(),
    ];
    let cone = sbl_core::Cone::new(gens.clone())?;
    let m = membership(&minus, &cone)?;
    let mut s = format!(
        "space: {space}\nK = {}\n-K = {}\n",
        format_class(&kc),
        format_class(&minus)
    );
    let place = match m {
        sbl_core::Membership::Interior => "interior",
        sbl_core::Membership::Boundary => "boundary",
        sbl_core::Membership::Outside => "outside",
    };
    s.push_str(&format!("-K in Cone(H11, H2, T): {place}\n"));
    if let Some(c) = nonneg_combination(&minus, &gens)? {
        s.push_str(&format!(
            "-K = {} H11 + {} H2 + {} T\n",
            format_rational(&c[0]),
            format_rational(&c[1]),
            format_rational(&c[2])
        ));
    }
    Ok(s)
}

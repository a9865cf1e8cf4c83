use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use spiderstar::ekr::{holroyd_talbot_scan, is_t_ekr, Budget, EkrVerdict, ScanEntry};
use spiderstar::injections::{
    verify_theorem_1, verify_theorem_2, verify_theorem_3, InjectionReport,
};
use spiderstar::spider::spider_catalog;
use spiderstar::{
    alpha, spider_order, star_sizes, CountError, EkrError, InjectionError, Spider, Tree,
};

use crate::input::{self, TRange};
use crate::{
    BudgetArgs, CatalogArgs, Cli, CliError, Command, EkrArgs, Format, OrderArgs, Outcome,
    OutputArgs, ScanArgs, StarsArgs, Theorem, VerifyArgs,
};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Stars(args) => cmd_stars(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Ekr(args) => cmd_ekr(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Order(args) => cmd_order(args),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        context: format!("writing {}", path.display()),
        source,
    })
}

/// Sends `text` to the requested file, or hands it back for stdout.
fn emit(out: &OutputArgs, text: String, passed: bool) -> Result<Outcome, CliError> {
    match &out.output {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Outcome {
                text: String::new(),
                passed,
            })
        }
        None => Ok(Outcome { text, passed }),
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn to_json_pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn count_error(e: CountError) -> CliError {
    match e {
        CountError::ZeroSize => CliError::BadInput(e.to_string()),
        CountError::Overflow { .. } => CliError::Numeric(e.to_string()),
    }
}

fn injection_error(e: InjectionError) -> CliError {
    match e {
        InjectionError::Count(c) => count_error(c),
        other => CliError::BadInput(other.to_string()),
    }
}

fn budget(args: &BudgetArgs) -> Budget {
    Budget {
        max_family: args.budget_family,
        max_nodes: args.budget_nodes,
    }
}

#[derive(Serialize)]
struct StarRecord {
    vertex: usize,
    coord: String,
    count: u64,
}

#[derive(Serialize)]
struct StarDocument<'a> {
    source: &'a str,
    t: usize,
    total: u64,
    vertices: Vec<StarRecord>,
}

fn cmd_stars(args: &StarsArgs) -> Result<Outcome, CliError> {
    let loaded = input::load(&args.source)?;
    let table = star_sizes(&loaded.tree, args.t).map_err(count_error)?;
    let records: Vec<StarRecord> = table
        .counts
        .iter()
        .enumerate()
        .map(|(v, &count)| StarRecord {
            vertex: v,
            coord: match &loaded.spider {
                Some(s) => s
                    .coordinate_of(v)
                    .expect("vertex of this spider")
                    .to_string(),
                None => "-".into(),
            },
            count,
        })
        .collect();
    let text = match args.out.format {
        Format::Tsv => {
            let mut s = String::from("vertex\tcoord\tcount\n");
            for r in &records {
                let _ = writeln!(s, "{}\t{}\t{}", r.vertex, r.coord, r.count);
            }
            s
        }
        Format::Json => to_json_pretty(&StarDocument {
            source: &loaded.label,
            t: table.t,
            total: table.total,
            vertices: records,
        }),
    };
    emit(&args.out, text, true)
}

fn sizes(t: Option<TRange>, tree: &Tree) -> Vec<usize> {
    match t {
        Some(r) => r.iter().collect(),
        None => (1..=alpha(tree)).collect(),
    }
}

fn report_line(r: &InjectionReport) -> String {
    let mut line = format!(
        "{} theorem={} spider={} t={} i={} j={} domain={} image={} target={}",
        if r.verified() { "PASS" } else { "FAIL" },
        r.theorem,
        r.spider,
        r.t,
        r.i,
        r.j.map_or("-".to_string(), |j| j.to_string()),
        r.domain_size,
        r.image_size,
        r.target_size,
    );
    if let Some(c) = &r.cases {
        let _ = write!(
            line,
            " identity={} partial={} full={}",
            c.identity, c.partial_ladder, c.full_ladder
        );
    }
    if let Some(v) = r.violations.first() {
        let _ = write!(
            line,
            " violations={} first={}:{}",
            r.violations.len(),
            to_json(&v.kind).trim_matches('"'),
            v.input
        );
    }
    line
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let spider = input::spider(&args.spider)?;
    let ts = sizes(args.t, spider.tree());
    if let Some(&t) = ts.iter().find(|&&t| t > spider.n()) {
        return Err(CliError::BadInput(format!(
            "t = {t} exceeds {} vertices",
            spider.n()
        )));
    }
    let theorems: &[u8] = match args.theorem {
        Theorem::One => &[1],
        Theorem::Two => &[2],
        Theorem::Three => &[3],
        Theorem::All => &[1, 2, 3],
    };
    let ordered = Spider::new(&spider_order(spider.legs())).expect("reordered legs stay valid");

    let jobs: Vec<(u8, usize)> = theorems
        .iter()
        .flat_map(|&th| ts.iter().map(move |&t| (th, t)))
        .collect();
    let batches = jobs
        .par_iter()
        .map(|&(th, t)| match th {
            1 => verify_theorem_1(&spider, t),
            2 => verify_theorem_2(&spider, t),
            _ => verify_theorem_3(&ordered, t),
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(injection_error)?;
    let reports: Vec<&InjectionReport> = batches.iter().flatten().collect();
    let passed = reports.iter().all(|r| r.verified());

    if let Some(path) = &args.report {
        write_file(path, &to_json_pretty(&reports))?;
    }
    let text = match args.out.format {
        Format::Json => to_json_pretty(&reports),
        Format::Tsv => {
            let mut s = String::new();
            if theorems.contains(&3) && ordered.legs() != spider.legs() {
                let _ = writeln!(s, "# theorem 3 uses spider order {}", ordered.descriptor());
            }
            for (&(th, t), batch) in jobs.iter().zip(&batches) {
                if batch.is_empty() {
                    let desc = if th == 3 { &ordered } else { &spider }.descriptor();
                    let _ = writeln!(s, "PASS theorem={th} spider={desc} t={t} vacuous");
                }
                for r in batch {
                    s.push_str(&report_line(r));
                    s.push('\n');
                }
            }
            let failed = reports.iter().filter(|r| !r.verified()).count();
            let _ = writeln!(
                s,
                "# {} checks, {} passed, {} failed",
                reports.len(),
                reports.len() - failed,
                failed
            );
            s
        }
    };
    emit(&args.out, text, passed)
}

fn status(outcome: &Result<EkrVerdict, EkrError>) -> &'static str {
    match outcome {
        Ok(v) if v.is_t_ekr => "ekr",
        Ok(v) if v.is_reportable() => "REPORTABLE",
        Ok(_) => "not-ekr",
        Err(EkrError::BudgetExceeded(_)) => "budget-exceeded",
        Err(_) => "error",
    }
}

#[derive(Serialize)]
struct VerdictLine<'a> {
    tree_source: &'a str,
    status: &'static str,
    #[serde(flatten)]
    body: VerdictBody<'a>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum VerdictBody<'a> {
    Verdict(&'a EkrVerdict),
    Failed { t: usize, error: String },
}

const VERDICT_HEADER: &str =
    "source\tt\tmu\talpha\tmax_intersecting\tmax_star\targmax\tis_t_ekr\tin_conjecture_range\tstatus\tnote\n";

fn verdict_line(
    source: &str,
    t: usize,
    outcome: &Result<EkrVerdict, EkrError>,
    format: Format,
) -> String {
    let status = status(outcome);
    match format {
        Format::Json => {
            let body = match outcome {
                Ok(v) => VerdictBody::Verdict(v),
                Err(e) => VerdictBody::Failed {
                    t,
                    error: e.to_string(),
                },
            };
            to_json(&VerdictLine {
                tree_source: source,
                status,
                body,
            })
        }
        Format::Tsv => match outcome {
            Ok(v) => format!(
                "{source}\t{t}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{status}\t-",
                v.mu,
                v.alpha,
                v.max_intersecting,
                v.max_star,
                v.argmax_vertices
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                v.is_t_ekr,
                v.in_conjecture_range,
            ),
            Err(e) => format!("{source}\t{t}\t-\t-\t-\t-\t-\t-\t-\t{status}\t{e}"),
        },
    }
}

fn cmd_ekr(args: &EkrArgs) -> Result<Outcome, CliError> {
    let loaded = input::load(&args.source)?;
    let a = alpha(&loaded.tree);
    let ts = sizes(args.t, &loaded.tree);
    if let Some(&t) = ts.iter().find(|&&t| t > a) {
        return Err(CliError::BadInput(format!("t = {t} exceeds alpha = {a}")));
    }
    let budget = budget(&args.budget);
    let mut text = String::new();
    if args.out.format == Format::Tsv {
        text.push_str(VERDICT_HEADER);
    }
    for t in ts {
        let outcome = is_t_ekr(&loaded.tree, t, &budget);
        if let Err(EkrError::Count(e)) = outcome {
            return Err(count_error(e));
        }
        text.push_str(&verdict_line(&loaded.label, t, &outcome, args.out.format));
        text.push('\n');
    }
    emit(&args.out, text, true)
}

#[derive(Debug, Default, Serialize)]
struct ScanSummary {
    trees: usize,
    verdicts: usize,
    verified: usize,
    reportable: usize,
    budget_exceeded: usize,
    invalid: usize,
}

/// A labelled catalog entry; unreadable tree files keep their error text.
type Entry = (String, Result<Tree, String>);

fn catalog(args: &CatalogArgs) -> Result<Vec<Entry>, CliError> {
    if let Some(max_n) = args.max_n {
        return Ok(spider_catalog(max_n)
            .into_iter()
            .map(|legs| {
                let s = Spider::new(&legs).expect("catalog legs are valid");
                (format!("spider:{}", s.descriptor()), Ok(s.tree().clone()))
            })
            .collect());
    }
    let dir = args.dir.as_ref().expect("clap enforces one catalog source");
    let io_err = |source| CliError::Io {
        context: format!("listing {}", dir.display()),
        source,
    };
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        if path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let label = path.display().to_string();
            match input::tree_file(&path) {
                Ok(tree) => Ok((label, Ok(tree))),
                Err(CliError::BadInput(msg)) => Ok((label, Err(msg))),
                Err(e) => Err(e),
            }
        })
        .collect()
}

fn cmd_scan(args: &ScanArgs) -> Result<Outcome, CliError> {
    let instances = catalog(&args.catalog)?;
    let budget = budget(&args.budget);
    let results: Vec<Result<Vec<ScanEntry>, String>> = instances
        .par_iter()
        .map(|(_, tree)| {
            tree.as_ref()
                .map(|t| holroyd_talbot_scan(t, &budget))
                .map_err(Clone::clone)
        })
        .collect();

    let format = args.out.format;
    let mut text = String::new();
    if format == Format::Tsv {
        text.push_str(VERDICT_HEADER);
    }
    let mut summary = ScanSummary {
        trees: instances.len(),
        ..ScanSummary::default()
    };
    for ((label, _), result) in instances.iter().zip(&results) {
        let entries = match result {
            Ok(entries) => entries,
            Err(msg) => {
                summary.invalid += 1;
                match format {
                    Format::Json => text.push_str(&to_json(&serde_json::json!({
                        "tree_source": label,
                        "status": "invalid",
                        "error": msg,
                    }))),
                    Format::Tsv => {
                        let _ = write!(text, "{label}\t-\t-\t-\t-\t-\t-\t-\t-\tinvalid\t{msg}");
                    }
                }
                text.push('\n');
                continue;
            }
        };
        for entry in entries {
            summary.verdicts += 1;
            match &entry.outcome {
                Ok(v) if v.is_t_ekr => summary.verified += 1,
                Ok(_) => summary.reportable += 1,
                Err(_) => summary.budget_exceeded += 1,
            }
            text.push_str(&verdict_line(label, entry.t, &entry.outcome, format));
            text.push('\n');
        }
    }
    match format {
        Format::Json => {
            text.push_str(&to_json(&serde_json::json!({ "summary": summary })));
            text.push('\n');
        }
        Format::Tsv => {
            let _ = writeln!(
                text,
                "# summary trees={} verdicts={} verified={} reportable={} budget_exceeded={} invalid={}",
                summary.trees,
                summary.verdicts,
                summary.verified,
                summary.reportable,
                summary.budget_exceeded,
                summary.invalid
            );
        }
    }
    emit(&args.out, text, true)
}

fn cmd_order(args: &OrderArgs) -> Result<Outcome, CliError> {
    let legs = spiderstar::spider::parse_legs(&args.spider)
        .map_err(|e| CliError::BadInput(e.to_string()))?;
    Ok(Outcome {
        text: format!(
            "{}\n",
            spiderstar::spider::format_legs(&spider_order(&legs))
        ),
        passed: true,
    })
}

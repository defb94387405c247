use std::error::Error;
use std::time::Duration;

use serde::Serialize;
use serde_json::json;
use zcp_core::constructions::{self, GolayNumber, TreeAddress};
use zcp_core::golden;
use zcp_core::pmepr::{self, PmeprEstimator};
use zcp_core::record::{self, PairRecord};
use zcp_core::seedsearch::{self, Checkpoint};
use zcp_core::{checks, tables, BinarySequence, SearchMode, SearchTask, SequencePair, Sign};

use crate::args::{Construction, Format, PmeprArgs, SearchArgs, TableArgs, Which, ZczType};

pub type Outcome = std::result::Result<Status, Box<dyn Error>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
    /// A search budget ran out before the space was exhausted.
    Incomplete,
}

impl Status {
    fn from_pass(pass: bool) -> Status {
        if pass {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

fn seq(s: &str) -> zcp_core::Result<BinarySequence> {
    s.parse()
}

fn sign(s: &str) -> zcp_core::Result<Sign> {
    s.parse()
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_json(value: &impl Serialize) -> std::result::Result<(), Box<dyn Error>> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_record_text(rec: &PairRecord, zcz_type: ZczType) -> zcp_core::Result<()> {
    let profile = rec.pair().profile()?;
    let c = profile.classify();
    println!("{}", rec.pair());
    println!("length: {}", rec.length);
    println!("profile: {}", profile.compact());
    if zcz_type != ZczType::One {
        println!("Type-II: {}", c.type2_label());
    }
    if zcz_type != ZczType::Two {
        println!("Type-I: {}", c.type1_label());
    }
    Ok(())
}

/// What a construction promises about its output.
struct Claim {
    text: String,
    holds: bool,
}

fn tree_claim(rec: &PairRecord, n: usize, depth: u32, seeds_meet_floor: bool) -> Claim {
    let z = rec.length - n;
    if depth == 1 && seeds_meet_floor {
        Claim { text: format!("optimal Type-II, Z = L - N = {z}"), holds: rec.type2_zcz == z && rec.optimal_type2 }
    } else {
        Claim { text: format!("Z = L - N = {z}"), holds: rec.type2_zcz == z }
    }
}

type ClaimCheck = Box<dyn Fn(&PairRecord) -> Claim>;

fn build(construction: &Construction) -> zcp_core::Result<(String, SequencePair, ClaimCheck)> {
    Ok(match construction {
        Construction::Construct1 { seeds, depth, index } => {
            let (a, b) = (seq(&seeds.seed_a)?, seq(&seeds.seed_b)?);
            let pair = constructions::construct1(&a, &b, TreeAddress::new(*depth, *index)?)?;
            let floor = seedsearch::verify_floor(&a, &b)?;
            let (n, k) = (a.len(), *depth);
            (format!("construct1 depth={depth} index={index}"), pair, Box::new(move |r| tree_claim(r, n, k, floor)))
        }
        Construction::Theorem1 { seeds, index } => {
            let (a, b) = (seq(&seeds.seed_a)?, seq(&seeds.seed_b)?);
            let pair = constructions::theorem1_pair(&a, &b, *index)?;
            let floor = seedsearch::verify_floor(&a, &b)?;
            let n = a.len();
            (format!("theorem1 index={index}"), pair, Box::new(move |r| tree_claim(r, n, 1, floor)))
        }
        Construction::Theorem2 { seeds, depth, index } => {
            let (a, b) = (seq(&seeds.seed_a)?, seq(&seeds.seed_b)?);
            let pair = constructions::theorem2_pair(&a, &b, *depth, *index)?;
            let (n, k) = (a.len(), *depth);
            (format!("theorem2 depth={depth} index={index}"), pair, Box::new(move |r| tree_claim(r, n, k, false)))
        }
        Construction::Turyn { first, second, gcp_length, plain } => {
            let zcp = SequencePair::parse(first, second)?;
            let z1 = zcp.profile()?.type2_zcz();
            let gcp = constructions::gcp_factory(GolayNumber::decompose(*gcp_length)?)?;
            let gcp = if *plain { gcp } else { constructions::table_iv_orientation(&gcp) };
            let pair = constructions::turyn_product(&zcp, &gcp)?;
            let (n1, n2) = (zcp.common_len()?, *gcp_length as usize);
            let z = n1 * n2 - n1 + z1;
            (
                format!("turyn N2={gcp_length}"),
                pair,
                Box::new(move |r| Claim { text: format!("Z = N1 N2 - N1 + Z1 = {z}"), holds: r.type2_zcz == z }),
            )
        }
        Construction::Gcp { length } => {
            let pair = constructions::gcp_factory(GolayNumber::decompose(*length)?)?;
            let n = *length as usize;
            (
                format!("gcp N={length}"),
                pair,
                Box::new(move |r| Claim { text: format!("GCP of length {n}"), holds: r.is_gcp && r.length == n }),
            )
        }
        Construction::Tcp1 { n } => {
            let pair = constructions::tcp1_pair(GolayNumber::decompose(*n)?)?;
            let n = *n as usize;
            (
                format!("tcp1 N={n}"),
                pair,
                Box::new(move |r| Claim {
                    text: format!("optimal Type-II, L = 2N-1, Z = {n}"),
                    holds: r.length + 1 == 2 * n && r.type2_zcz == n && r.optimal_type2,
                }),
            )
        }
        Construction::Tcp2 { n, lambda } => {
            let pair = constructions::tcp2_pair(GolayNumber::decompose(*n)?, sign(lambda)?)?;
            let n = *n as usize;
            (
                format!("tcp2 N={n} lambda={lambda}"),
                pair,
                Box::new(move |r| Claim {
                    text: format!("optimal Type-II, L = 2N+1, Z = {}", n + 1),
                    holds: r.length == 2 * n + 1 && r.type2_zcz == n + 1 && r.optimal_type2,
                }),
            )
        }
        Construction::Type1Obzcp { n, lambda } => {
            let pair = constructions::type1_obzcp_pair(GolayNumber::decompose(*n)?, sign(lambda)?)?;
            let n = *n as usize;
            (
                format!("type1-obzcp N={n} lambda={lambda}"),
                pair,
                Box::new(move |r| Claim {
                    text: format!("optimal Type-I, Z = {}", n + 1),
                    holds: r.type1_zcz == n + 1 && r.optimal_type1,
                }),
            )
        }
    })
}

#[derive(Serialize)]
struct Generated<'a> {
    construction: &'a str,
    claim: &'a str,
    claim_holds: bool,
    #[serde(flatten)]
    record: &'a PairRecord,
}

pub fn gen(construction: &Construction, format: Format) -> Outcome {
    let (name, pair, claim) = build(construction)?;
    let rec = PairRecord::analyze(&pair)?;
    let claim = claim(&rec);
    match format {
        Format::Json => {
            print_json(&Generated { construction: &name, claim: &claim.text, claim_holds: claim.holds, record: &rec })?
        }
        Format::Csv => {
            println!("{}", record::CSV_HEADER);
            println!("{}", rec.csv_line());
        }
        Format::Text => {
            print_record_text(&rec, ZczType::Both)?;
            println!("claim: {} ({})", claim.text, if claim.holds { "holds" } else { "VIOLATED" });
        }
    }
    Ok(Status::from_pass(claim.holds))
}

pub fn analyze(first: &str, second: &str, zcz_type: ZczType, format: Format) -> Outcome {
    let pair = SequencePair::parse(first, second)?;
    let rec = PairRecord::analyze(&pair)?;
    match format {
        Format::Json => print_json(&rec)?,
        Format::Csv => {
            println!("{}", record::CSV_HEADER);
            println!("{}", rec.csv_line());
        }
        Format::Text => print_record_text(&rec, zcz_type)?,
    }
    Ok(Status::Verified)
}

pub fn search(args: &SearchArgs, format: Format) -> Outcome {
    let mode = if args.first {
        SearchMode::FirstHit
    } else if args.count {
        SearchMode::CountOnly
    } else {
        SearchMode::EnumerateAll
    };
    let mut task = SearchTask::new(args.n, mode)?;
    task.max_results = args.max_results;
    task.canonicalize = !args.all_signs;
    task.node_budget = args.node_budget;
    if let Some(secs) = args.time_budget {
        task.time_budget = Some(Duration::try_from_secs_f64(secs).map_err(|e| format!("--time-budget: {e}"))?);
    }
    let result = match &args.resume {
        Some(path) => seedsearch::resume(&task, Checkpoint::load(path)?)?,
        None => seedsearch::search_seeds(&task)?,
    };

    let mut verified = true;
    for (a, b) in &result.pairs {
        verified &= seedsearch::verify_floor(a, b)?;
    }
    let mut saved = None;
    if let (false, Some(path), Some(cp)) = (result.exhausted, &args.checkpoint, &result.checkpoint) {
        cp.save(path)?;
        saved = Some(path.display().to_string());
    }

    match format {
        Format::Json => {
            let pairs: Vec<_> = result.pairs.iter().map(|(a, b)| json!({"a": a, "b": b})).collect();
            print_json(&json!({
                "n": args.n,
                "canonical": task.canonicalize,
                "count": result.count,
                "nodes_visited": result.nodes_visited,
                "wall_time_s": result.wall_time.as_secs_f64(),
                "exhausted": result.exhausted,
                "checkpoint": saved,
                "pairs": pairs,
            }))?;
        }
        Format::Csv => {
            println!("a,b");
            for (a, b) in &result.pairs {
                println!("{a},{b}");
            }
        }
        Format::Text => {
            for (a, b) in &result.pairs {
                println!("a={a} b={b}");
            }
            println!(
                "count={} nodes={} time={:.3}s exhausted={}",
                result.count,
                result.nodes_visited,
                result.wall_time.as_secs_f64(),
                result.exhausted
            );
        }
    }
    if !result.exhausted {
        match &saved {
            Some(path) => eprintln!("search budget exhausted; checkpoint written to {path}"),
            None => eprintln!("search budget exhausted; pass --checkpoint to keep the remaining work"),
        }
    }
    Ok(if !verified {
        Status::Failed
    } else if result.exhausted {
        Status::Verified
    } else {
        Status::Incomplete
    })
}

pub fn pmepr(args: &PmeprArgs, format: Format) -> Outcome {
    let estimator =
        if args.grid { PmeprEstimator::Grid(args.oversample) } else { PmeprEstimator::Refined(args.oversample) };
    let refined = !args.grid;
    if let Some(s) = &args.sequence {
        let c = seq(s)?;
        let value = pmepr::pmepr(&c, estimator)?;
        match format {
            Format::Json => print_json(&json!({
                "sequence": c,
                "sequence_length": c.len(),
                "oversampling_factor": args.oversample,
                "refined": refined,
                "pmepr": value,
            }))?,
            Format::Csv => {
                println!("length,oversampling,refined,pmepr");
                println!("{},{},{},{:.6}", c.len(), args.oversample, refined, value);
            }
            Format::Text => {
                println!("length: {}", c.len());
                println!("oversampling: {} ({})", args.oversample, if refined { "refined" } else { "grid" });
                println!("PMEPR: {value:.4}");
            }
        }
        return Ok(Status::Verified);
    }

    let members = args.pair.as_deref().ok_or("either --seq or --pair is required")?;
    let pair = SequencePair::parse(&members[0], &members[1])?;
    let report = pmepr::pmepr_pair(&pair, estimator)?;
    let within = report.pmepr_pair <= report.bound + 1e-9;
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("length,oversampling,refined,pmepr_first,pmepr_second,pmepr_pair,bound");
            println!(
                "{},{},{},{:.6},{:.6},{:.6},{:.6}",
                report.sequence_length,
                report.oversampling_factor,
                report.refined,
                report.pmepr_first,
                report.pmepr_second,
                report.pmepr_pair,
                report.bound
            );
        }
        Format::Text => {
            println!("length: {}", report.sequence_length);
            println!("oversampling: {} ({})", report.oversampling_factor, if refined { "refined" } else { "grid" });
            println!("PMEPR first: {:.4}", report.pmepr_first);
            println!("PMEPR second: {:.4}", report.pmepr_second);
            println!("PMEPR pair: {:.4}", report.pmepr_pair);
            println!("bound: {:.4} ({})", report.bound, if within { "holds" } else { "VIOLATED" });
        }
    }
    Ok(Status::from_pass(within))
}

pub fn table(args: &TableArgs, format: Format) -> Outcome {
    match args.which {
        Which::One => table1(format),
        Which::Two => table2(format),
        Which::Three => table3(args.search_up_to, format),
        Which::Four => table4(args, format),
    }
}

fn table1(format: Format) -> Outcome {
    let rows = tables::table1()?;
    let pass = rows.iter().all(|r| r.pass);
    match format {
        Format::Json => print_json(&rows)?,
        Format::Csv => {
            println!("family,length_rule,zcz_rule,instance,length,type2_zcz,out_of_zone_max,optimal_type2,pass");
            for r in &rows {
                let c = &r.classification;
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.length_rule,
                    r.zcz_rule,
                    r.instance,
                    c.length,
                    c.type2_zcz,
                    c.out_of_zone_max,
                    c.optimal_type2,
                    r.pass
                );
            }
        }
        Format::Text => {
            for r in &rows {
                let c = &r.classification;
                println!(
                    "{} {}: {} -> L={} ({}), Z={} ({}), v={}; {}",
                    mark(r.pass),
                    r.family,
                    r.instance,
                    c.length,
                    r.length_rule,
                    c.type2_zcz,
                    r.zcz_rule,
                    c.out_of_zone_max,
                    c.type2_label()
                );
            }
        }
    }
    Ok(Status::from_pass(pass))
}

#[derive(Serialize)]
struct TableTwoLine<'a> {
    #[serde(flatten)]
    check: &'a tables::TableTwoCheck,
    pass: bool,
}

fn table2(format: Format) -> Outcome {
    let rows = tables::table2()?;
    let pass = rows.iter().all(|r| r.pass());
    match format {
        Format::Json => {
            let lines: Vec<_> = rows.iter().map(|r| TableTwoLine { check: r, pass: r.pass() }).collect();
            print_json(&lines)?;
        }
        Format::Csv => {
            println!("n,label,profile,published,corrected,label_ok,label_flagged,pass");
            for r in &rows {
                println!(
                    "{},{},\"{}\",\"{}\",\"{}\",{},{},{}",
                    r.n,
                    r.label,
                    r.profile,
                    r.published,
                    r.corrected.unwrap_or(""),
                    r.label_ok,
                    r.label_flagged,
                    r.pass()
                );
            }
        }
        Format::Text => {
            for r in &rows {
                let mut line = format!("{} N={} {}: {}", mark(r.pass()), r.n, r.label, r.profile);
                if r.corrected.is_some() {
                    line.push_str(&format!(" [printed profile {} is a misprint]", r.published));
                }
                if r.label_flagged {
                    line.push_str(" [printed label contradicts the profile]");
                }
                println!("{line}");
            }
        }
    }
    Ok(Status::from_pass(pass))
}

#[derive(Serialize)]
struct SeedLine {
    n: usize,
    a: &'static str,
    b: &'static str,
    floor_met: bool,
    /// Number of canonical classes found by a fresh search, if one was run.
    classes: Option<u64>,
    found_by_search: Option<bool>,
}

impl SeedLine {
    fn pass(&self) -> bool {
        self.floor_met && self.found_by_search != Some(false)
    }
}

fn table3(search_up_to: usize, format: Format) -> Outcome {
    let mut lines = Vec::new();
    for row in &golden::TABLE_III {
        let (a, b) = row.seeds();
        let floor_met = seedsearch::verify_floor(&a, &b)?;
        let (mut classes, mut found) = (None, None);
        if row.n <= search_up_to {
            let result = seedsearch::search_seeds(&SearchTask::new(row.n, SearchMode::EnumerateAll)?)?;
            let canon = seedsearch::canonical_form(&a, &b);
            classes = Some(result.count);
            found = Some(result.pairs.contains(&canon));
        }
        lines.push(SeedLine { n: row.n, a: row.a, b: row.b, floor_met, classes, found_by_search: found });
    }
    let pass = lines.iter().all(SeedLine::pass);
    match format {
        Format::Json => print_json(&lines)?,
        Format::Csv => {
            println!("n,a,b,floor_met,classes,found_by_search,pass");
            for l in &lines {
                let classes = l.classes.map(|c| c.to_string()).unwrap_or_default();
                let found = l.found_by_search.map(|f| f.to_string()).unwrap_or_default();
                println!("{},{},{},{},{},{},{}", l.n, l.a, l.b, l.floor_met, classes, found, l.pass());
            }
        }
        Format::Text => {
            for l in &lines {
                let search = match (l.classes, l.found_by_search) {
                    (Some(c), Some(true)) => format!("; search found it among {c} classes"),
                    (Some(c), _) => format!("; search did not find it among {c} classes"),
                    _ => String::new(),
                };
                let floor = if l.floor_met { "floor met" } else { "floor NOT met" };
                println!("{} N={} a={} b={}: {floor}{search}", mark(l.pass()), l.n, l.a, l.b);
            }
        }
    }
    Ok(Status::from_pass(pass))
}

fn same_cells(ours: (f64, f64), printed: (f64, f64)) -> bool {
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-3;
    (close(ours.0, printed.0) && close(ours.1, printed.1)) || (close(ours.0, printed.1) && close(ours.1, printed.0))
}

fn table4(args: &TableArgs, format: Format) -> Outcome {
    let estimator =
        if args.refined { PmeprEstimator::Refined(args.oversample) } else { PmeprEstimator::Grid(args.oversample) };
    let rows = pmepr::table4(&pmepr::TABLE4_N2, estimator)?;
    let within = |r: &pmepr::Table4Row| {
        r.pmepr_u3.max(r.pmepr_v3) <= r.bound3 + 1e-9 && r.pmepr_u14.max(r.pmepr_v14) <= r.bound14 + 1e-9
    };
    let pass = rows.iter().all(within);
    match format {
        Format::Json => print_json(&rows)?,
        Format::Csv => print!("{}", pmepr::table4_csv(&rows)),
        Format::Text => {
            println!("estimator: {} x{}", if args.refined { "refined" } else { "grid" }, args.oversample);
            println!("{:>4}  {:>7} {:>7}  {:>7} {:>7}  note", "N2", "u3", "v3", "u14", "v14");
            for r in &rows {
                let mut notes = Vec::new();
                if !within(r) {
                    notes.push("BOUND VIOLATED".to_string());
                }
                if let Some(p) = golden::TABLE_IV.iter().find(|p| p.n2 == r.n2) {
                    if !same_cells((r.pmepr_u3, r.pmepr_v3), (p.u3, p.v3)) {
                        notes.push(format!("printed length-3 cells {:.4} {:.4}", p.u3, p.v3));
                    }
                    if !same_cells((r.pmepr_u14, r.pmepr_v14), (p.u14, p.v14)) {
                        notes.push(format!("printed length-14 cells {:.4} {:.4}", p.u14, p.v14));
                    }
                }
                let line = format!(
                    "{:>4}  {:>7.4} {:>7.4}  {:>7.4} {:>7.4}  {}",
                    r.n2,
                    r.pmepr_u3,
                    r.pmepr_v3,
                    r.pmepr_u14,
                    r.pmepr_v14,
                    notes.join("; ")
                );
                println!("{}", line.trim_end());
            }
            if let Some(r) = rows.first() {
                println!("bounds: {:.4} (length-3 factor), {:.4} (length-14 factor)", r.bound3, r.bound14);
            }
        }
    }
    Ok(Status::from_pass(pass))
}

pub fn check(rng_seed: u64, cases: usize, format: Format) -> Outcome {
    let outcomes = checks::run_all(rng_seed, cases)?;
    let pass = outcomes.iter().all(checks::CheckOutcome::pass);
    match format {
        Format::Json => print_json(&outcomes)?,
        Format::Csv => {
            println!("name,cases,failures,pass");
            for o in &outcomes {
                println!("\"{}\",{},{},{}", o.name, o.cases, o.failures, o.pass());
            }
        }
        Format::Text => {
            for o in &outcomes {
                match &o.example {
                    Some(ex) => println!("FAIL {}: {}/{} cases, e.g. {ex}", o.name, o.failures, o.cases),
                    None => println!("PASS {} ({} cases)", o.name, o.cases),
                }
            }
        }
    }
    Ok(Status::from_pass(pass))
}

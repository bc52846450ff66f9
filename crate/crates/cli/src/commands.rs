use std::fs;
use std::path::{Path, PathBuf};

use frcode::analysis::{
    code_dimension, dimension_profile, reconstruction_sets, surviving_sets_with_mode, tolerance, SurvivingMode,
    SurvivingSet,
};
use frcode::bounds::{all_bounds, universally_good, BoundReport, UgoodMode};
use frcode::construct::{
    complete_graph_code, concat_rate_report, concatenate, cycle_code, m_fold, mfold_rate_report,
};
use frcode::format::{emit_code_json, parse_code_file, parse_schedule_json, CodeFile, FileKind};
use frcode::rate::rate;
use frcode::sim::{simulate, Outcome, Policy};
use frcode::FrCode;

use crate::report::{decimal, fraction, fraction_over, list, node_set, packet_set, yes_no, Format, Report};
use crate::{Command, ConstructKind, PolicyArg, SurvivingArg, UgoodArg};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("Io: {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Code(#[from] frcode::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    fn from_check(passed: bool) -> Self {
        if passed {
            Status::Ok
        } else {
            Status::CheckFailed
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> CliResult<CodeFile> {
    Ok(parse_code_file(&read(path)?, FileKind::from_path(path))?)
}

pub fn run(command: Command, format: Format) -> CliResult<Status> {
    let mut out = Report::new();
    let status = match command {
        Command::Validate { file } => validate(&load(&file)?, &mut out),
        Command::Analyze { file, k, b, surviving } => analyze(&load(&file)?, k, b, surviving, &mut out)?,
        Command::Bounds { file, k } => bounds(&load(&file)?.code, k, &mut out)?,
        Command::Ugood { file, mode } => ugood(&load(&file)?.code, mode, &mut out)?,
        Command::Construct { kind, output } => return construct(kind, output.as_deref()),
        Command::Rates { file } => rates(&load(&file)?.code, &mut out),
        Command::Simulate { file, schedule, policy, seed } => {
            let schedule = parse_schedule_json(&read(&schedule)?)?;
            simulate_cmd(&load(&file)?.code, &schedule, policy, seed, &mut out)?
        }
        Command::ConcatReport { first, second, k } => {
            concat_report(&load(&first)?.code, &load(&second)?.code, k, &mut out)?
        }
        Command::MfoldReport { file, m, k_total } => mfold_report(&load(&file)?.code, m, k_total, &mut out)?,
    };
    print!("{}", out.render(format));
    Ok(status)
}

fn parameters(c: &FrCode, name: Option<&str>, out: &mut Report) {
    let p = c.params();
    if let Some(name) = name {
        out.field("name", name);
    }
    out.field("n", c.n())
        .field("theta", c.theta())
        .field("alpha", p.alpha)
        .field("alpha_min", p.alpha_min)
        .field("per_node_alpha", list(&p.per_node_alpha))
        .field("rho", p.rho)
        .field("rho_min", p.rho_min)
        .field("per_packet_rho", list(&p.per_packet_rho))
        .field("total_storage", p.total_storage)
        .field("rho_ave", fraction(&p.rho_ave))
        .field("tolerance", tolerance(c));
}

fn validate(file: &CodeFile, out: &mut Report) -> Status {
    out.field("valid", "yes");
    parameters(&file.code, file.name.as_deref(), out);
    Status::Ok
}

fn analyze(
    file: &CodeFile,
    k: Option<usize>,
    b: Option<usize>,
    surviving: SurvivingArg,
    out: &mut Report,
) -> CliResult<Status> {
    let c = &file.code;
    let k = k.unwrap_or(c.n().div_ceil(2));
    let dim = code_dimension(c, k)?;
    let b = b.unwrap_or(dim.value);
    let recon = reconstruction_sets(c, b)?;
    let total = c.total_storage();

    parameters(c, file.name.as_deref(), out);
    out.break_fields();
    out.field("k", k)
        .field(format!("D_C({k})"), dim.value)
        .field("witness", node_set(&dim.witness))
        .field(format!("R_C({k})"), format!("{}/{}", dim.value, total))
        .field(format!("R_DSS({k})"), format!("{}/{}", k, c.n()));

    out.break_fields();
    out.field("B", b)
        .field("reconstruction_sets", recon.sets.len())
        .field("k_max", recon.k_max)
        .field("k_guarantee", recon.k_guarantee);
    let rows = recon
        .sets
        .iter()
        .enumerate()
        .map(|(idx, set)| {
            let mut packets: Vec<usize> = set.iter().flat_map(|&i| c.node(i).iter().copied()).collect();
            packets.sort_unstable();
            packets.dedup();
            vec![(idx + 1).to_string(), node_set(set), set.len().to_string(), packets.len().to_string()]
        })
        .collect();
    out.table(format!("reconstruction sets for B = {b}"), &["#", "nodes", "size", "packets"], rows);

    let mode = match surviving {
        SurvivingArg::Choice => SurvivingMode::ChoiceImage,
        SurvivingArg::Minimal => SurvivingMode::MinimalCover,
    };
    let mode_name = match mode {
        SurvivingMode::ChoiceImage => "choice-image",
        SurvivingMode::MinimalCover => "minimal-cover",
    };
    let mut set_rows = Vec::new();
    let mut degree_rows = Vec::new();
    let mut degrees = Vec::with_capacity(c.n());
    for i in 1..=c.n() {
        let report = surviving_sets_with_mode(c, i, mode)?;
        if report.sets.is_empty() {
            set_rows.push(vec![i.to_string(), "-".into(), "unrepairable".into(), "-".into(), "-".into(), "-".into()]);
        }
        for (l, s) in report.sets.iter().enumerate() {
            set_rows.push(surviving_row(i, l + 1, s));
        }
        degrees.push(report.d);
        degree_rows.push(vec![
            i.to_string(),
            c.alpha_of(i).to_string(),
            report.sets.len().to_string(),
            report.d.to_string(),
            report.choice_bound.to_string(),
        ]);
    }
    out.table(
        format!("surviving sets ({mode_name})"),
        &["node", "index", "helpers", "beta", "packets", "gamma"],
        set_rows,
    );
    out.table("repair degrees", &["node", "alpha", "sets", "d", "choice_bound"], degree_rows);
    out.field("d", list(&degrees)).field("d_max", degrees.iter().max().copied().unwrap_or(0));
    Ok(Status::Ok)
}

fn surviving_row(node: usize, index: usize, s: &SurvivingSet) -> Vec<String> {
    let betas: Vec<usize> = s.downloads.iter().map(|d| d.beta()).collect();
    let packets: Vec<String> =
        s.downloads.iter().map(|d| format!("U{}:{}", d.helper, packet_set(&d.packets))).collect();
    vec![
        node.to_string(),
        index.to_string(),
        node_set(&s.helpers),
        list(&betas),
        packets.join(" "),
        s.gamma().to_string(),
    ]
}

fn status_cell(r: &BoundReport) -> &'static str {
    match (r.applicable, r.holds) {
        (false, _) => "n/a",
        (true, true) => "holds",
        (true, false) => "FAILS",
    }
}

fn bound_row(r: &BoundReport) -> Vec<String> {
    vec![
        r.name.to_string(),
        r.k.map_or_else(|| "-".into(), |k| k.to_string()),
        fraction(&r.value),
        r.relation.to_string(),
        fraction(&r.bound),
        status_cell(r).to_string(),
        r.note.clone(),
    ]
}

fn bounds(c: &FrCode, k: Option<usize>, out: &mut Report) -> CliResult<Status> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=c.n()).collect(),
    };
    let mut reports = Vec::new();
    for k in ks {
        reports.extend(all_bounds(c, k)?);
    }
    let failures = reports.iter().filter(|r| !r.ok()).count();
    out.table("bounds", &["bound", "k", "value", "rel", "limit", "status", "note"], reports.iter().map(bound_row).collect());
    out.field("checks", reports.len()).field("violations", failures);
    Ok(Status::from_check(failures == 0))
}

fn ugood(c: &FrCode, mode: UgoodArg, out: &mut Report) -> CliResult<Status> {
    let (mode, name) = match mode {
        UgoodArg::Symmetric => (UgoodMode::Symmetric, "symmetric"),
        UgoodArg::Asymmetric => (UgoodMode::Asymmetric, "asymmetric"),
    };
    let report = universally_good(c, mode)?;
    out.field("mode", name).field("d", list(&report.degrees));
    let rows = report
        .reports
        .iter()
        .map(|r| {
            vec![
                r.k.map_or_else(|| "-".into(), |k| k.to_string()),
                fraction(&r.value),
                fraction(&r.bound),
                status_cell(r).to_string(),
            ]
        })
        .collect();
    out.table("dimension against the universally-good bound", &["k", "D_C(k)", "bound", "status"], rows);
    out.field("universally_good", yes_no(report.holds));
    Ok(Status::from_check(report.holds))
}

fn construct(kind: ConstructKind, output: Option<&Path>) -> CliResult<Status> {
    let (code, name) = match kind {
        ConstructKind::CompleteGraph { alpha } => (complete_graph_code(alpha)?, Some(format!("complete-graph-{alpha}"))),
        ConstructKind::Cycle { n } => (cycle_code(n)?, Some(format!("cycle-{n}"))),
        ConstructKind::Concat { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let name = a.name.zip(b.name).map(|(x, y)| format!("{x}+{y}"));
            (concatenate(&a.code, &b.code), name)
        }
        ConstructKind::Mfold { file, m } => {
            let a = load(&file)?;
            (m_fold(&a.code, m)?, a.name.map(|x| format!("{x}-x{m}")))
        }
    };
    let text = emit_code_json(&code, name.as_deref());
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?,
        None => print!("{text}"),
    }
    Ok(Status::Ok)
}

fn rates(c: &FrCode, out: &mut Report) -> Status {
    let n = c.n();
    let total = c.total_storage();
    let profile = dimension_profile(c);
    out.field("n", n).field("total_storage", total);
    let rows = (1..n.max(2))
        .map(|k| {
            let dss = rate(k, n);
            let fr = rate(profile[k], total);
            let diff = dss - fr;
            vec![
                k.to_string(),
                decimal(&dss),
                decimal(&fr),
                decimal(&diff),
                format!("{k}/{n}"),
                format!("{}/{}", profile[k], total),
                fraction_over(&diff, total),
            ]
        })
        .collect();
    out.table(
        "rates",
        &["k", "R_DSS", "R_C", "difference", "R_DSS exact", "R_C exact", "difference exact"],
        rows,
    );
    Status::Ok
}

fn simulate_cmd(
    c: &FrCode,
    schedule: &frcode::sim::FailureSchedule,
    policy: PolicyArg,
    seed: u64,
    out: &mut Report,
) -> CliResult<Status> {
    let policy = match policy {
        PolicyArg::MinDegree => Policy::MinDegree,
        PolicyArg::MaxDegree => Policy::MaxDegree,
        PolicyArg::Lexicographic => Policy::Lexicographic,
    };
    let log = simulate(c, schedule, policy, seed)?;
    out.field("policy", log.policy).field("seed", log.seed).field("events", log.events.len());
    let mut rows = Vec::new();
    for (e, event) in log.events.iter().enumerate() {
        for repair in &event.repairs {
            let mut row = vec![(e + 1).to_string(), node_set(&event.failed), format!("U{}", repair.node)];
            match &repair.outcome {
                Outcome::Repaired { set, gamma, .. } => {
                    let cells = surviving_row(repair.node, 0, set);
                    row.push("repaired".into());
                    row.extend(cells[2..5].iter().cloned());
                    row.push(gamma.to_string());
                }
                Outcome::Unrepairable { packet } => {
                    row.push(format!("unrepairable (packet {packet} lost)"));
                    row.extend(["-", "-", "-", "0"].map(String::from));
                }
            }
            row.push(event.cumulative_bandwidth.to_string());
            rows.push(row);
        }
    }
    out.table(
        "repair log",
        &["event", "failed", "node", "outcome", "helpers", "beta", "packets", "gamma", "cumulative"],
        rows,
    );
    out.field("total_bandwidth", log.total_bandwidth()).field("all_repaired", yes_no(log.all_repaired()));
    Ok(Status::from_check(log.all_repaired()))
}

fn concat_report(c1: &FrCode, c2: &FrCode, k: Option<usize>, out: &mut Report) -> CliResult<Status> {
    let n = c1.n() + c2.n();
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..n).collect(),
    };
    let mut rows = Vec::new();
    let mut failed = 0;
    let mut weights = None;
    for k in ks {
        let r = concat_rate_report(c1, c2, k)?;
        failed += usize::from(!r.holds());
        weights.get_or_insert((r.r1, r.r2));
        rows.push(vec![
            r.k.to_string(),
            fraction(&r.dss_lhs),
            fraction(&r.dss_rhs_mod),
            yes_no(r.dss_identity_holds).into(),
            fraction(&r.dss_rhs_literal),
            yes_no(r.dss_literal_holds).into(),
            r.dimension.to_string(),
            r.split_dimension.to_string(),
            fraction(&r.fr_rate),
            fraction(&r.fr_bound),
            if r.uses_varrho { "k>=min(n1,n2)" } else { "k<min(n1,n2)" }.into(),
            yes_no(r.holds()).into(),
        ]);
    }
    let (r1, r2) = weights.expect("at least one k");
    out.field("n1", c1.n()).field("n2", c2.n()).field("r1", fraction(&r1)).field("r2", fraction(&r2));
    out.table(
        "concatenation relations",
        &[
            "k", "1/R_DSS", "mod rhs", "mod ok", "literal rhs", "literal ok", "D", "split D", "R_C", "FR bound",
            "branch", "holds",
        ],
        rows,
    );
    out.field("violations", failed);
    Ok(Status::from_check(failed == 0))
}

fn mfold_report(c: &FrCode, m: usize, k_total: Option<usize>, out: &mut Report) -> CliResult<Status> {
    let folded_n = m_fold(c, m)?.n();
    let ks: Vec<usize> = match k_total {
        Some(k) => vec![k],
        None => (1..folded_n).collect(),
    };
    let mut rows = Vec::new();
    let mut failed = 0;
    let mut disagree = Vec::new();
    let mut rho_ave = None;
    for big_k in ks {
        let r = mfold_rate_report(c, m, big_k)?;
        failed += usize::from(!r.holds());
        if !r.printed_agrees() {
            disagree.push(big_k);
        }
        rho_ave.get_or_insert(r.rho_ave);
        rows.push(vec![
            r.k_total.to_string(),
            r.q.to_string(),
            r.k.to_string(),
            fraction(&r.dss_direct),
            fraction(&r.dss_formula),
            fraction(&r.fr_direct),
            fraction(&r.fr_formula),
            fraction(&r.difference_direct),
            fraction(&r.difference_formula),
            fraction(&r.difference_printed),
            yes_no(r.holds()).into(),
        ]);
    }
    out.field("m", m).field("n", c.n()).field("rho_ave", fraction(&rho_ave.unwrap_or_else(|| c.params().rho_ave)));
    out.table(
        "m-fold identities",
        &["K", "q", "k", "R_DSS", "DSS formula", "R_C", "FR formula", "difference", "diff formula", "printed diff", "holds"],
        rows,
    );
    out.field("violations", failed).field(
        "printed_difference_disagrees_at_K",
        if disagree.is_empty() { "none".to_string() } else { list(&disagree) },
    );
    Ok(Status::from_check(failed == 0))
}

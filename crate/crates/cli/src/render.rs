use nmds_core::lrc::Mechanism;
use nmds_core::report::ConstructionReport;

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn mech(m: Option<Mechanism>) -> String {
    m.map_or_else(String::new, |m| m.as_str().to_owned())
}

fn distribution(r: &ConstructionReport) -> String {
    r.distribution
        .iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

const COLUMNS: [&str; 22] = [
    "key",
    "id",
    "m",
    "q",
    "n",
    "k",
    "d",
    "d_dual",
    "class",
    "dual_weight3_count",
    "pairing_ok",
    "r_code",
    "r_dual",
    "mechanism_code",
    "mechanism_dual",
    "sl_rhs_code",
    "sl_rhs_dual",
    "cm_rhs_code",
    "cm_rhs_dual",
    "flags",
    "pass",
    "distribution",
];

fn row(r: &ConstructionReport) -> Vec<String> {
    vec![
        r.key.clone(),
        r.id.as_str().to_owned(),
        r.m.to_string(),
        r.q.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        opt(r.d),
        opt(r.d_dual),
        r.class.as_str().to_owned(),
        r.dual_weight3_count.clone(),
        r.pairing_ok.to_string(),
        opt(r.locality.code),
        opt(r.locality.dual),
        mech(r.locality.mechanism_code),
        mech(r.locality.mechanism_dual),
        opt(r.bounds.sl_rhs_code),
        opt(r.bounds.sl_rhs_dual),
        opt(r.bounds.cm_rhs_code),
        opt(r.bounds.cm_rhs_dual),
        r.bounds.flags.join(" "),
        r.pass.to_string(),
        distribution(r),
    ]
}

pub fn json(reports: &[ConstructionReport]) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(reports)? + "\n")
}

pub fn csv(reports: &[ConstructionReport]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS)?;
    for r in reports {
        w.write_record(row(r))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn markdown(reports: &[ConstructionReport]) -> String {
    let mut out = format!(
        "| {} |\n|{}\n",
        COLUMNS.join(" | "),
        "---|".repeat(COLUMNS.len())
    );
    for r in reports {
        let cells: Vec<String> = row(r).into_iter().map(|c| c.replace('|', "\\|")).collect();
        out += &format!("| {} |\n", cells.join(" | "));
    }
    out
}

use std::fmt::Write as _;
use std::fs;

use rayon::prelude::*;

use oortscan::construct::{
    build_with_caps, corpus as load_corpus, CorpusEntry, FamilySpec, Profile,
};
use oortscan::format::{emit_group_spec, parse_group_spec};
use oortscan::oort::{classify as run_classify, LocalResult, Verdict};
use oortscan::ramification::{
    artin_schreier_genus, format_rational, hasse_arf_check, lower_to_upper,
    scenario as run_scenario, tame_rh_genus, wild_rh_genus, CoverSpec, RamificationFiltration,
    ScenarioParams,
};
use oortscan::{Caps, FiniteGroup, GroupError};

use crate::report::Report;
use crate::{CoverSource, FiltrationArgs, GroupSource};

type Outcome = Result<Report, String>;

fn load_group(source: &GroupSource, caps: Caps) -> Result<(String, Vec<u8>, FiniteGroup), String> {
    if let Some(text) = &source.family {
        let spec: FamilySpec = text.parse().map_err(|e| format!("family spec: {e}"))?;
        let g = build_with_caps(&spec, caps).map_err(describe_group_error)?;
        return Ok((spec.to_string(), spec.to_string().into_bytes(), g));
    }
    let path = source.file.as_ref().expect("clap requires a source");
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec = parse_group_spec(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = spec.build(caps).map_err(describe_group_error)?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok((name, text.into_bytes(), g))
}

fn describe_group_error(e: GroupError) -> String {
    match e {
        GroupError::CapExceeded {
            what,
            limit,
            actual,
        } => {
            format!("{what} cap exceeded: the group reached {actual} (limit {limit}; raise OORTSCAN_CAP)")
        }
        other => other.to_string(),
    }
}

fn local_word(l: &LocalResult) -> &'static str {
    match l {
        LocalResult::Pass => "pass",
        LocalResult::Fail(_) => "fail",
        LocalResult::NotApplicable => "n/a",
    }
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn verdict_sections(r: &mut Report, v: &Verdict) {
    let s = r.section("verdict");
    s.put("group", &v.group)
        .put("p", v.p)
        .put("order", v.order)
        .put("shape", v.shape)
        .put("cyclic_by_p", v.is_cyclic_by_p)
        .put("embeds_in_pgl2_char0", v.embeds_in_pgl2_char0)
        .put("local_oort_necessary", local_word(&v.local_oort_necessary));
    if let LocalResult::Fail(reason) = &v.local_oort_necessary {
        s.put("local_reason", reason);
    }
    s.put("oort_necessary", pass_word(v.oort_necessary.pass))
        .put("subgroups_checked", v.oort_necessary.subgroups_checked);
    if let Some(w) = &v.oort_necessary.witness {
        s.put("witness_order", w.order)
            .put("witness_shape", w.shape)
            .put("witness_generators", w.generators.join(" "));
    }
    s.put("result", pass_word(v.passes()));

    let s = r.section("forbidden_quotients");
    s.put("count", v.forbidden_quotients.len());
    for (k, h) in v.forbidden_quotients.iter().enumerate() {
        let s = r.section(format!("forbidden_quotient.{k}"));
        s.put("type", h.type_index)
            .put("kernel_order", h.kernel_order)
            .put("quotient_order", h.quotient_order)
            .put("kernel_generators", h.kernel_generators.join(" "))
            .put("m", h.details.m);
        if let Some(l) = h.details.l {
            s.put("l", l);
        }
        if let Some(rank) = h.details.rank {
            s.put("rank", rank);
        }
    }
    let s = r.section("corollaries");
    for (name, res) in v.corollary_checks.entries() {
        s.put(name, res);
    }
    if !v.caveats.is_empty() {
        let s = r.section("caveats");
        for (k, c) in v.caveats.iter().enumerate() {
            s.put(format!("caveat.{k}"), c);
        }
    }
}

pub fn classify(command: String, source: &GroupSource, p: u64) -> Outcome {
    let caps = Caps::from_env();
    let (name, input, g) = load_group(source, caps)?;
    let v = run_classify(&g, p, &name).map_err(describe_group_error)?;
    let mut digest_input = input;
    digest_input.extend(format!("\np={p}").bytes());
    let mut r = Report::new(command, &digest_input, format!("classify {name} at p={p}"));
    verdict_sections(&mut r, &v);
    r.exit_code = if v.passes() { 0 } else { 1 };
    Ok(r)
}

struct Row {
    entry: CorpusEntry,
    outcome: Result<Verdict, String>,
}

impl Row {
    fn status(&self) -> &'static str {
        match &self.outcome {
            Ok(v) if v.matches(&self.entry.expect) => "MATCH",
            Ok(_) => "MISMATCH",
            Err(_) => "SKIPPED",
        }
    }
}

fn opt_word(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "n/a",
    }
}

pub fn corpus(command: String, profile: &str, primes: &[u64], jobs: usize) -> Outcome {
    let profile: Profile = profile.parse()?;
    let caps = Caps::from_env();
    let entries: Vec<CorpusEntry> = load_corpus(profile)
        .into_iter()
        .filter(|e| primes.is_empty() || primes.contains(&e.p))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let rows: Vec<Row> = pool.install(|| {
        entries
            .into_par_iter()
            .map(|entry| {
                let outcome = build_with_caps(&entry.spec, caps)
                    .and_then(|g| run_classify(&g, entry.p, &entry.id()))
                    .map_err(describe_group_error);
                Row { entry, outcome }
            })
            .collect()
    });

    let mut digest_input = format!("corpus\n{profile}\n{primes:?}\n");
    for row in &rows {
        let _ = writeln!(digest_input, "{}", row.entry.id());
    }
    let mut r = Report::new(
        command,
        digest_input.as_bytes(),
        format!("corpus profile {profile}"),
    );
    let mut table = String::new();
    let _ = writeln!(
        table,
        "{:<28} {:>2} {:>5} {:<26} {:<5} {:<5} {:<30} status",
        "group", "p", "order", "shape", "local", "oort", "expected"
    );
    let (mut matches, mut mismatches, mut skipped) = (0, 0, 0);
    for (k, row) in rows.iter().enumerate() {
        let status = row.status();
        match status {
            "MATCH" => matches += 1,
            "MISMATCH" => mismatches += 1,
            _ => skipped += 1,
        }
        let e = &row.entry;
        let s = r.section(format!("row.{k:04}"));
        s.put("group", &e.spec).put("p", e.p);
        s.put("expected", e.expect.label.describe(e.p))
            .put("expected_local", opt_word(e.expect.local))
            .put("expected_oort", pass_word(e.expect.global));
        match &row.outcome {
            Ok(v) => {
                s.put("order", v.order)
                    .put("shape", v.shape)
                    .put("local", opt_word(v.local_pass()))
                    .put("oort", pass_word(v.oort_necessary.pass));
                if let Some(w) = &v.oort_necessary.witness {
                    s.put("witness", w.shape.symbol());
                }
                if let Some(h) = v.forbidden_quotients.first() {
                    s.put("forbidden_type", h.type_index)
                        .put("forbidden_kernel_order", h.kernel_order);
                }
                let oort = match &v.oort_necessary.witness {
                    Some(w) => format!("fail({})", w.shape.symbol()),
                    None => pass_word(true).to_string(),
                };
                let _ = writeln!(
                    table,
                    "{:<28} {:>2} {:>5} {:<26} {:<5} {:<5} {:<30} {}",
                    e.spec.to_string(),
                    e.p,
                    v.order,
                    v.shape.to_string(),
                    opt_word(v.local_pass()),
                    oort,
                    e.expect.label.describe(e.p),
                    status
                );
            }
            Err(msg) => {
                s.put("error", msg);
                let _ = writeln!(
                    table,
                    "{:<28} {:>2} {:>5} {msg} SKIPPED",
                    e.spec.to_string(),
                    e.p,
                    "-"
                );
            }
        }
        s.put("status", status);
    }
    let names: Vec<String> = r.sections.iter().map(|s| s.name.clone()).collect();
    r.text_body = Some((table, names));
    r.section("summary")
        .put("rows", rows.len())
        .put("match", matches)
        .put("mismatch", mismatches)
        .put("skipped", skipped);
    r.exit_code = if mismatches == 0 { 0 } else { 1 };
    Ok(r)
}

pub fn scenario(
    command: String,
    name: &str,
    p: Option<u64>,
    l: Option<u64>,
    n: Option<u64>,
) -> Outcome {
    let params = ScenarioParams { p, l, n };
    let rep = run_scenario(name, &params).map_err(|e| e.to_string())?;
    let digest_input = format!("scenario\n{name}\n{p:?}\n{l:?}\n{n:?}");
    let mut r = Report::new(command, digest_input.as_bytes(), format!("scenario {name}"));
    let s = r.section("params");
    for e in &rep.params {
        s.put(&e.key, &e.value);
    }
    let s = r.section("values");
    for e in &rep.values {
        s.put(&e.key, &e.value);
    }
    r.section("result").put("obstruction", rep.obstruction);
    r.exit_code = if rep.obstruction { 0 } else { 1 };
    Ok(r)
}

pub fn make(family: &str) -> Result<String, String> {
    let spec: FamilySpec = family.parse().map_err(|e| format!("family spec: {e}"))?;
    let g = build_with_caps(&spec, Caps::from_env()).map_err(describe_group_error)?;
    Ok(format!(
        "# {spec}, order {}\n{}",
        g.order(),
        emit_group_spec(&g)
    ))
}

fn load_cover(src: &CoverSource) -> Result<(String, CoverSpec), String> {
    let text = match (&src.cover, &src.file) {
        (Some(inline), _) => inline.replace(';', "\n"),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let spec: CoverSpec = text.parse().map_err(|e| format!("cover spec: {e}"))?;
    Ok((text, spec))
}

pub fn genus(command: String, src: &CoverSource, wild: bool) -> Outcome {
    let (text, spec) = load_cover(src)?;
    let g = if wild {
        wild_rh_genus(&spec)
    } else {
        tame_rh_genus(&spec)
    }
    .map_err(|e| e.to_string())?;
    let kind = if wild { "wild" } else { "tame" };
    let mut r = Report::new(command, text.as_bytes(), format!("{kind} Riemann-Hurwitz"));
    let s = r.section("cover");
    s.put("group_order", spec.group_order)
        .put("base_genus", spec.base_genus)
        .put("branch_points", spec.branch.len());
    for (k, b) in spec.branch.iter().enumerate() {
        let value = match &b.filtration {
            Some(f) => format!("{} p={} {f}", b.inertia_order, f.p()),
            None => b.inertia_order.to_string(),
        };
        s.put(format!("branch.{k}"), value);
    }
    r.section("result").put("genus", g);
    Ok(r)
}

pub fn artin_schreier(command: String, p: u64, m: u64) -> Outcome {
    let g = artin_schreier_genus(p, m).map_err(|e| e.to_string())?;
    let input = format!("as\n{p}\n{m}");
    let mut r = Report::new(
        command,
        input.as_bytes(),
        format!("Artin-Schreier curve, p={p}, m={m}"),
    );
    r.section("result").put("genus", g);
    Ok(r)
}

fn filtration(f: &FiltrationArgs) -> Result<RamificationFiltration, String> {
    RamificationFiltration::new(f.p, &f.orders).map_err(|e| e.to_string())
}

pub fn filtration_upper(command: String, args: &FiltrationArgs) -> Outcome {
    let f = filtration(args)?;
    let input = format!("upper\n{}\n{f}", args.p);
    let mut r = Report::new(command, input.as_bytes(), format!("upper numbering of {f}"));
    let jumps = lower_to_upper(&f);
    r.section("filtration")
        .put("p", f.p())
        .put("orders", &f)
        .put("different", oortscan::ramification::different_exponent(&f));
    let s = r.section("upper_jumps");
    s.put("count", jumps.len());
    for (k, j) in jumps.iter().enumerate() {
        s.put(
            format!("jump.{k}"),
            format!(
                "u={} lower={} order_after={}",
                format_rational(&j.upper),
                j.lower,
                j.order_after
            ),
        );
    }
    Ok(r)
}

pub fn filtration_check(command: String, args: &FiltrationArgs, sub_order: u64) -> Outcome {
    let f = filtration(args)?;
    let ok = hasse_arf_check(&f, sub_order).map_err(|e| e.to_string())?;
    let input = format!("check\n{}\n{f}\n{sub_order}", args.p);
    let mut r = Report::new(command, input.as_bytes(), format!("Hasse-Arf check of {f}"));
    r.section("result")
        .put("sub_order", sub_order)
        .put("hasse_arf", ok);
    r.exit_code = if ok { 0 } else { 1 };
    Ok(r)
}

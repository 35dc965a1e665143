//! One function per verb. Each validates its input, calls into the core
//! crate and packs the answer into an [`OutputRecord`].

use std::io::{self, Write};

use serde_json::{json, Value};
use thiserror::Error;
use wsbound_core::bounds::{
    full_report, ihara_bound_variant, is_prime_power, oesterle_q2, proposition_nq, serre_upper,
    CoincidenceTest, IharaVariant,
};
use wsbound_core::enumerate::{semigroups_of_genus_capped, BoundMethod};
use wsbound_core::telescopic::{
    analyze_telescopic, find_telescopic_order, telescopic_representation,
    telescopic_tower_diagnostic,
};
use wsbound_core::tower::{gs_level_report_with_limit, tower_asymptotics};
use wsbound_core::{NumericalSemigroup, Rational};

use crate::golden::{nq_reference, reproduce_table, CellStatus};
use crate::record::{Format, OutputRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] wsbound_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_guard() => 4,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            4 => "resource_guard",
            1 => "io",
            _ => "input",
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn rat(r: Rational) -> Value {
    Value::String(r.to_string())
}

fn angle(gens: &[u64]) -> String {
    let parts: Vec<String> = gens.iter().map(u64::to_string).collect();
    format!("<{}>", parts.join(","))
}

/// Generators for `bound` and friends: strictly ascending, so duplicates
/// and reorderings are rejected rather than silently fixed.
pub fn check_ascending(gens: &[u64]) -> CliResult<()> {
    if gens.is_empty() {
        return Err(CliError::Input("at least one generator is required".into()));
    }
    if let Some(w) = gens.windows(2).find(|w| w[0] >= w[1]) {
        return Err(CliError::Input(format!(
            "generators must be strictly ascending and unique, got {} then {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

fn check_unique(gens: &[u64]) -> CliResult<()> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CliError::Input("generators must be unique".into()));
    }
    Ok(())
}

fn check_field(q: u64, record: &mut OutputRecord) -> CliResult<()> {
    if q < 2 {
        return Err(wsbound_core::Error::InvalidFieldSize(q).into());
    }
    if !is_prime_power(q) {
        record.note(format!(
            "warning: q = {q} is not a prime power; the bounds are evaluated combinatorially"
        ));
    }
    Ok(())
}

fn coincidence_label(t: CoincidenceTest) -> &'static str {
    match t {
        CoincidenceTest::SingleGenerator => "single_generator",
        CoincidenceTest::TwiceGenus => "twice_genus",
        CoincidenceTest::Conductor => "conductor",
        CoincidenceTest::NotEstablished => "not_established",
    }
}

pub fn cmd_bound(gens: &[u64], q: u64, n_prime: Option<u64>, max_bits: u64) -> CliResult<OutputRecord> {
    check_ascending(gens)?;
    let mut r = OutputRecord::new("bound").input("gens", gens).input("q", q);
    if let Some(n) = n_prime {
        r = r.input("n_prime", n);
    }
    check_field(q, &mut r)?;
    let s = NumericalSemigroup::from_generators_with_limit(gens, max_bits)?;
    let minimal = s.minimal_generators();
    if minimal != gens {
        r.note(format!(
            "generators are not minimal (minimal: {}); the new bound uses them as supplied",
            angle(&minimal)
        ));
    }
    let rep = full_report(&s, q, n_prime)?;
    r.set("genus", s.genus());
    r.set("conductor", s.conductor());
    r.set("multiplicity", s.multiplicity());
    r.set("frobenius", s.frobenius());
    r.set("minimal_generators", minimal);
    r.set("lewittes", rep.lewittes);
    r.set("geil_matsumoto", rep.geil_matsumoto);
    r.set("pair", format!("{}/{}", rep.lewittes, rep.geil_matsumoto));
    r.set("residual_set", rep.witness);
    r.set("t", rep.t_value);
    r.set("t_refined", rep.t_bound);
    r.set(
        "sharpened",
        rep.sharpened.map_or(Value::Null, |(_, b)| b.into()),
    );
    r.set(
        "coincidence",
        json!({"holds": rep.coincidence.holds, "test": coincidence_label(rep.coincidence.test)}),
    );
    r.set("serre", rep.serre);
    Ok(r)
}

/// Returns the record and whether every mismatch is allow-listed.
pub fn cmd_table(which: u8, max_bits: u64) -> CliResult<(OutputRecord, bool)> {
    if !(1..=3).contains(&which) {
        return Err(CliError::Input(format!("no table {which}; choose 1, 2 or 3")));
    }
    let report = reproduce_table(which, max_bits)?;
    let mut r = OutputRecord::new("table").input("table", which);
    let rows: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "cell": o.cell.cell,
                "semigroup": angle(&o.cell.gens),
                "q": o.cell.q,
                "computed": o.computed_pair(),
                "published": o.published_pair(),
                "status": o.status.label(),
            })
        })
        .collect();
    let discrepancies: Vec<Value> = report
        .discrepancies()
        .map(|o| {
            json!({
                "cell": o.cell.cell,
                "computed": o.computed_pair(),
                "published": o.published_pair(),
                "allowed": o.status == CellStatus::Allowed,
                "reason": o.reason,
            })
        })
        .collect();
    r.set("cells", report.outcomes.len());
    r.set("matching", report.outcomes.iter().filter(|o| o.status == CellStatus::Match).count());
    r.set("allowed_discrepancies", report.discrepancies().filter(|o| o.status == CellStatus::Allowed).count());
    r.set("unexpected_mismatches", report.unexpected().count());
    r.set("rows", rows);
    r.set("discrepancies", discrepancies);
    if let Some(c) = &report.census {
        r.set(
            "genus8_census",
            json!({
                "enumerated": c.enumerated,
                "listed_in_tables_2_3": c.listed,
                "unlisted": c.unlisted.iter().map(|g| angle(g)).collect::<Vec<_>>(),
                "listed_but_not_found": c.listed_but_not_found.iter().map(|g| angle(g)).collect::<Vec<_>>(),
            }),
        );
        if c.enumerated != c.listed {
            r.note(format!(
                "enumeration finds {} semigroups of genus 8, tables 2 and 3 list {}",
                c.enumerated, c.listed
            ));
        }
    }
    Ok((r, report.is_clean()))
}

/// One JSON-lines record of `enumerate`, keys in this order.
#[derive(serde::Serialize)]
struct EnumerateLine<'a> {
    gens: &'a [u64],
    genus: u64,
    conductor: u64,
    gaps: Vec<u64>,
}

/// Streams one line per semigroup; returns how many were written.
pub fn cmd_enumerate(genus: u32, cap: u32, format: Format, out: &mut dyn Write) -> CliResult<u64> {
    let tree = semigroups_of_genus_capped(genus, cap)?;
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut count = 0;
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["gens", "genus", "conductor", "gaps"]).map_err(io::Error::from)?;
        for s in tree {
            w.write_record([
                join(s.generators()),
                s.genus().to_string(),
                s.conductor().to_string(),
                join(&s.gaps()),
            ])
            .map_err(io::Error::from)?;
            count += 1;
        }
        w.flush()?;
        return Ok(count);
    }
    for s in tree {
        if format == Format::Json {
            let line = EnumerateLine {
                gens: s.generators(),
                genus: s.genus(),
                conductor: s.conductor(),
                gaps: s.gaps(),
            };
            serde_json::to_writer(&mut *out, &line).map_err(io::Error::from)?;
            writeln!(out)?;
        } else {
            writeln!(
                out,
                "{}  genus {}  conductor {}  gaps {}",
                angle(s.generators()),
                s.genus(),
                s.conductor(),
                join(&s.gaps())
            )?;
        }
        count += 1;
    }
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExcludeMethod {
    Lewittes,
    GeilMatsumoto,
    Both,
}

pub fn cmd_exclude(genus: u32, q: u64, n_target: u64, method: ExcludeMethod, cap: u32) -> CliResult<OutputRecord> {
    let mut r = OutputRecord::new("exclude")
        .input("genus", genus)
        .input("q", q)
        .input("n", n_target)
        .input(
            "method",
            match method {
                ExcludeMethod::Lewittes => "lewittes",
                ExcludeMethod::GeilMatsumoto => "geil-matsumoto",
                ExcludeMethod::Both => "both",
            },
        );
    check_field(q, &mut r)?;
    if n_target == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let use_l = method != ExcludeMethod::GeilMatsumoto;
    let use_gm = method != ExcludeMethod::Lewittes;
    let (mut total, mut by_l, mut by_gm) = (0u64, 0u64, 0u64);
    let mut rows = Vec::new();
    for s in semigroups_of_genus_capped(genus, cap)? {
        total += 1;
        let l = BoundMethod::Lewittes.evaluate(&s, q)?;
        let gm = BoundMethod::GeilMatsumoto.evaluate(&s, q)?;
        let ex_l = use_l && l < n_target;
        let ex_gm = use_gm && gm < n_target;
        by_l += ex_l as u64;
        by_gm += ex_gm as u64;
        if ex_l || ex_gm {
            rows.push(json!({
                "semigroup": angle(s.generators()),
                "lewittes": l,
                "geil_matsumoto": gm,
                "excluded_by_lewittes": ex_l,
                "excluded_by_geil_matsumoto": ex_gm,
            }));
        }
    }
    r.set("semigroups", total);
    if use_l {
        r.set("excluded_lewittes", by_l);
    }
    if use_gm {
        r.set("excluded_geil_matsumoto", by_gm);
    }
    r.set("rows", rows);
    Ok(r)
}

pub fn cmd_tower(q: u64, levels: u32, max_bits: u64) -> CliResult<OutputRecord> {
    let mut r = OutputRecord::new("tower").input("q", q).input("levels", levels);
    check_field(q, &mut r)?;
    let asym = tower_asymptotics(q, levels, max_bits)?;
    let mut rows = Vec::new();
    for i in 1..=levels {
        let l = gs_level_report_with_limit(q, i, max_bits)?;
        let row = &asym.rows[i as usize - 1];
        rows.push(json!({
            "i": i,
            "c": l.c_i,
            "genus": l.genus_formula,
            "genus_gap_count": row.genus_gap_count,
            "lambda1": l.lambda1,
            "lambda2": l.lambda2,
            "lambda1_over_g": l.ratio_lambda1_g.map_or(Value::Null, rat),
            "lewittes": l.lewittes,
            "geil_matsumoto": l.geil_matsumoto,
            "coincidence_condition": l.coincidence_condition,
        }));
    }
    r.set("field_size", q * q);
    r.set("rows", rows);
    r.set("limit", rat(asym.limit));
    r.set("floor", rat(asym.floor));
    r.set("floor_holds", asym.floor_holds);
    r.set("monotone_from_above", asym.monotone_from_above);
    Ok(r)
}

pub fn cmd_telescopic(
    gens: &[u64],
    search: bool,
    q: Option<u64>,
    represent: Option<u64>,
    max_bits: u64,
) -> CliResult<OutputRecord> {
    check_unique(gens)?;
    let mut r = OutputRecord::new("telescopic").input("gens", gens).input("search", search);
    let order = if search {
        match find_telescopic_order(gens)? {
            Some(o) => o,
            None => {
                r.set("telescopic_order", Value::Null);
                r.set("verdict", false);
                return Ok(r);
            }
        }
    } else {
        gens.to_vec()
    };
    let a = analyze_telescopic(&order)?;
    let s = NumericalSemigroup::from_generators_with_limit(&order, max_bits)?;
    r.set("telescopic_order", order.clone());
    r.set("verdict", a.verdict);
    r.set("prefix_gcds", a.d.clone());
    r.set("failing_index", a.failing_index);
    r.set("closed_form_genus", a.closed_form_genus);
    r.set("genus", s.genus());
    r.set("conductor", s.conductor());
    r.set("symmetric", s.is_symmetric());
    r.set("reduced_length", a.reduced_length());
    if let Some(q) = q {
        r = r.input("q", q);
        check_field(q, &mut r)?;
        if a.verdict && s.genus() > 0 {
            let level = &telescopic_tower_diagnostic(&[(order.clone(), q)])?[0];
            r.set("lewittes", level.lewittes);
            r.set("lewittes_over_g", rat(level.ratio));
            r.set("genus_estimate_holds", level.genus_estimate_holds);
        }
    }
    if let Some(v) = represent {
        r = r.input("represent", v);
        if a.verdict {
            r.set("representation", telescopic_representation(&order, v)?);
        } else {
            r.note("representation needs a telescopic order");
        }
    }
    Ok(r)
}

pub fn cmd_nqg(genus: u64, q: u64, ihara_printed: bool) -> CliResult<OutputRecord> {
    let mut r = OutputRecord::new("nqg").input("g", genus).input("q", q);
    check_field(q, &mut r)?;
    let variant = if ihara_printed {
        r.note("Ihara evaluated with the (8g+1)g^2 radicand variant");
        IharaVariant::PrintedRadicand
    } else {
        IharaVariant::Standard
    };
    let prop = proposition_nq(genus, q)?;
    let qr = Rational::from_integer(q as i128);
    r.set("proposition", rat(prop));
    r.set("proposition_floor", prop.floor().to_integer() as u64);
    r.set("proposition_slope", rat(qr - qr.recip()));
    r.set("proposition_intercept", rat(qr + Rational::from_integer(2) - qr.recip()));
    r.set("lewittes_trivial", q * (genus + 1) + 1);
    r.set("serre", serre_upper(genus, q)?);
    r.set("ihara", ihara_bound_variant(genus, q, variant)?);
    if q == 2 {
        let o = oesterle_q2(genus);
        r.set("oesterle", rat(o));
        r.set("oesterle_floor", o.floor().to_integer() as u64);
    }
    let known: Vec<Value> = nq_reference()
        .into_iter()
        .filter(|k| k.q == q && k.genus == genus)
        .map(|k| json!({"low": k.low, "high": k.high, "source": k.source}))
        .collect();
    if let Some(k) = known.first() {
        r.set("reference_range", k.clone());
    }
    Ok(r)
}

//! Published table values shipped with the binary, and their comparison
//! against recomputed cells.

use std::collections::BTreeSet;

use serde::Deserialize;
use wsbound_core::bounds::{geil_matsumoto_bound, lewittes_bound};
use wsbound_core::enumerate::semigroups_of_genus;
use wsbound_core::{NumericalSemigroup, Result};

const PUBLISHED_TABLES: &str = include_str!("../data/published_tables.csv");
const ALLOWED: &str = include_str!("../data/allowed_discrepancies.csv");
const NQ_REFERENCE: &str = include_str!("../data/nq_reference.csv");

/// One published `lewittes/new` cell. `cell` reads `table<t>:r<row>:q<q>`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct PublishedCell {
    pub cell: String,
    pub table: u8,
    pub row: u32,
    #[serde(deserialize_with = "space_list")]
    pub gens: Vec<u64>,
    pub q: u64,
    pub lewittes: u64,
    pub geil_matsumoto: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct AllowedDiscrepancy {
    pub cell: String,
    pub published: String,
    pub computed: String,
    pub reason: String,
}

/// Known interval for `N_q(g)`. Reference only; nothing here is derivable.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct NqReference {
    pub source: String,
    pub q: u64,
    pub genus: u64,
    pub low: u64,
    pub high: u64,
}

fn space_list<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<u64>, D::Error> {
    let s = String::deserialize(d)?;
    s.split_whitespace()
        .map(|t| t.parse().map_err(serde::de::Error::custom))
        .collect()
}

fn parse<T: for<'de> Deserialize<'de>>(data: &str) -> Vec<T> {
    csv::Reader::from_reader(data.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .expect("embedded data file is well formed")
}

pub fn published_cells() -> Vec<PublishedCell> {
    parse(PUBLISHED_TABLES)
}

pub fn allowed_discrepancies() -> Vec<AllowedDiscrepancy> {
    parse(ALLOWED)
}

pub fn nq_reference() -> Vec<NqReference> {
    parse(NQ_REFERENCE)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Match,
    /// Differs, and the difference is on the allow-list.
    Allowed,
    Unexpected,
}

impl CellStatus {
    pub fn label(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::Allowed => "allowed",
            CellStatus::Unexpected => "UNEXPECTED",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CellOutcome {
    pub cell: PublishedCell,
    pub lewittes: u64,
    pub geil_matsumoto: u64,
    pub status: CellStatus,
    pub reason: Option<String>,
}

impl CellOutcome {
    pub fn published_pair(&self) -> String {
        format!("{}/{}", self.cell.lewittes, self.cell.geil_matsumoto)
    }

    pub fn computed_pair(&self) -> String {
        format!("{}/{}", self.lewittes, self.geil_matsumoto)
    }
}

/// Genus-8 semigroups found by enumeration versus those listed in tables
/// 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusDelta {
    pub enumerated: usize,
    pub listed: usize,
    pub unlisted: Vec<Vec<u64>>,
    pub listed_but_not_found: Vec<Vec<u64>>,
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub table: u8,
    pub outcomes: Vec<CellOutcome>,
    pub census: Option<CensusDelta>,
}

impl TableReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &CellOutcome> {
        self.outcomes.iter().filter(|o| o.status == CellStatus::Unexpected)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &CellOutcome> {
        self.outcomes.iter().filter(|o| o.status != CellStatus::Match)
    }

    pub fn is_clean(&self) -> bool {
        self.unexpected().next().is_none()
    }
}

/// Recomputes every published cell of table 1, 2 or 3.
pub fn reproduce_table(table: u8, max_bits: u64) -> Result<TableReport> {
    let allowed = allowed_discrepancies();
    let mut outcomes = Vec::new();
    for cell in published_cells().into_iter().filter(|c| c.table == table) {
        let s = NumericalSemigroup::from_generators_with_limit(&cell.gens, max_bits)?;
        let lewittes = lewittes_bound(&s, cell.q)?;
        let geil_matsumoto = geil_matsumoto_bound(&s, cell.q)?;
        let published = format!("{}/{}", cell.lewittes, cell.geil_matsumoto);
        let computed = format!("{lewittes}/{geil_matsumoto}");
        let (status, reason) = if published == computed {
            (CellStatus::Match, None)
        } else {
            match allowed
                .iter()
                .find(|a| a.cell == cell.cell && a.published == published && a.computed == computed)
            {
                Some(a) => (CellStatus::Allowed, Some(a.reason.clone())),
                None => (CellStatus::Unexpected, None),
            }
        };
        outcomes.push(CellOutcome {
            cell,
            lewittes,
            geil_matsumoto,
            status,
            reason,
        });
    }
    let census = if table == 1 { None } else { Some(genus8_census()?) };
    Ok(TableReport {
        table,
        outcomes,
        census,
    })
}

pub fn genus8_census() -> Result<CensusDelta> {
    let listed: BTreeSet<Vec<u64>> = published_cells()
        .into_iter()
        .filter(|c| c.table == 2 || c.table == 3)
        .map(|c| c.gens)
        .collect();
    let found: BTreeSet<Vec<u64>> = semigroups_of_genus(8)?
        .map(|s| s.generators().to_vec())
        .collect();
    Ok(CensusDelta {
        enumerated: found.len(),
        listed: listed.len(),
        unlisted: found.difference(&listed).cloned().collect(),
        listed_but_not_found: listed.difference(&found).cloned().collect(),
    })
}

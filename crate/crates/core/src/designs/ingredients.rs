//! Verified ingredient designs: bundled data, generated designs and user files.

use super::numbers::covering_number;
use super::sqs::{boolean, construct_sqs};
use super::sts::construct_sts;
use super::triples::{check_leave_kind, LeaveKind};
use super::verify::{
    triples_missed, verify_disjoint, verify_packing, verify_pair_covering, verify_sqs, verify_steiner, verify_sts,
};
use crate::block::BlockSystem;
use crate::error::{Error, Result};
use crate::format::DesignFile;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IngredientKind {
    Sts,
    Sqs,
    OptimalCovering,
    OptimalPacking,
    PackingWithLeave,
    /// n-2 pairwise disjoint STS(n).
    LargeSetSts,
    /// Pairwise disjoint optimal coverings of K_n.
    DisjointCoveringFamily,
    /// Optimal coverings of K_n whose union holds every triple.
    CoveringFamily,
    /// a-3 disjoint optimal coverings of K_a missing exactly the a/3 triples
    /// {3k, 3k+1, 3k+2}, then an STS(a+1) containing those triples.
    AlignedCoveringFamily,
    SteinerS35,
    /// S(2,4,n) systems whose union is an SQS(n).
    ResolvableSqs,
}

impl IngredientKind {
    pub const ALL: [IngredientKind; 11] = [
        IngredientKind::Sts,
        IngredientKind::Sqs,
        IngredientKind::OptimalCovering,
        IngredientKind::OptimalPacking,
        IngredientKind::PackingWithLeave,
        IngredientKind::LargeSetSts,
        IngredientKind::DisjointCoveringFamily,
        IngredientKind::CoveringFamily,
        IngredientKind::AlignedCoveringFamily,
        IngredientKind::SteinerS35,
        IngredientKind::ResolvableSqs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IngredientKind::Sts => "sts",
            IngredientKind::Sqs => "sqs",
            IngredientKind::OptimalCovering => "optimal_covering",
            IngredientKind::OptimalPacking => "optimal_packing",
            IngredientKind::PackingWithLeave => "packing_with_leave",
            IngredientKind::LargeSetSts => "large_set_sts",
            IngredientKind::DisjointCoveringFamily => "disjoint_coverings",
            IngredientKind::CoveringFamily => "covering_family",
            IngredientKind::AlignedCoveringFamily => "aligned_covering_family",
            IngredientKind::SteinerS35 => "steiner_s35",
            IngredientKind::ResolvableSqs => "resolvable_sqs",
        }
    }
}

impl FromStr for IngredientKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        IngredientKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .or(match s.as_str() {
                "disjoint_covering_family" => Some(IngredientKind::DisjointCoveringFamily),
                "large_set" => Some(IngredientKind::LargeSetSts),
                _ => None,
            })
            .ok_or_else(|| Error::Domain(format!("unknown ingredient kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Generated,
    Bundled,
    UserSupplied,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IngredientRecord {
    pub kind: IngredientKind,
    /// Ground-set size of the members.
    pub n: u32,
    pub parameters: BTreeMap<String, u64>,
    pub payload: Vec<BlockSystem>,
    pub provenance: Provenance,
    pub verified: bool,
}

impl IngredientRecord {
    /// Verifies the payload for its kind; the record only exists if that passes.
    pub fn new(
        kind: IngredientKind,
        n: u32,
        parameters: BTreeMap<String, u64>,
        payload: Vec<BlockSystem>,
        provenance: Provenance,
    ) -> Result<Self> {
        verify_ingredient(kind, n, &parameters, &payload)?;
        Ok(IngredientRecord { kind, n, parameters, payload, provenance, verified: true })
    }

    pub fn to_file(&self) -> DesignFile {
        let r = self.payload.first().map_or(3, BlockSystem::r);
        let mut f = if self.payload.len() == 1 && !is_family_kind(self.kind) {
            DesignFile::single(self.kind.name(), &self.payload[0])
        } else {
            DesignFile::family(self.kind.name(), self.n, r, &self.payload)
        };
        f.fields.extend(self.parameters.clone());
        f
    }
}

fn is_family_kind(k: IngredientKind) -> bool {
    matches!(
        k,
        IngredientKind::LargeSetSts
            | IngredientKind::DisjointCoveringFamily
            | IngredientKind::CoveringFamily
            | IngredientKind::AlignedCoveringFamily
            | IngredientKind::ResolvableSqs
    )
}

fn invalid<T>(msg: String) -> Result<T> {
    Err(Error::InvalidIngredient(msg))
}

fn rewrap<T>(r: Result<T>, ctx: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::InvalidIngredient(m) | Error::PreconditionFailed(m) | Error::Shape(m) => {
            Error::InvalidIngredient(format!("{ctx}: {m}"))
        }
        other => other,
    })
}

fn each(payload: &[BlockSystem], check: impl Fn(&BlockSystem) -> Result<()>) -> Result<()> {
    for (i, m) in payload.iter().enumerate() {
        rewrap(check(m), &format!("member {i}"))?;
    }
    Ok(())
}

fn single(payload: &[BlockSystem]) -> Result<&BlockSystem> {
    match payload {
        [m] => Ok(m),
        _ => invalid(format!("expected one system, got {}", payload.len())),
    }
}

fn optimal_covering(m: &BlockSystem) -> Result<()> {
    verify_pair_covering(m)?;
    let c = covering_number(m.n())?;
    if m.len() as u64 != c {
        return invalid(format!("{} triples, an optimal covering has {c}", m.len()));
    }
    Ok(())
}

/// The family-level conditions for each kind, reporting the first violation.
pub fn verify_ingredient(
    kind: IngredientKind,
    n: u32,
    parameters: &BTreeMap<String, u64>,
    payload: &[BlockSystem],
) -> Result<()> {
    if payload.is_empty() {
        return invalid("empty payload".into());
    }
    if let Some(m) = payload.iter().find(|m| m.n() != n) {
        return invalid(format!("member on {} points, expected {n}", m.n()));
    }
    match kind {
        IngredientKind::Sts => rewrap(verify_sts(single(payload)?), "sts"),
        IngredientKind::Sqs => rewrap(verify_sqs(single(payload)?), "sqs"),
        IngredientKind::SteinerS35 => rewrap(verify_steiner(single(payload)?, 3, 5), "S(3,5,n)"),
        IngredientKind::OptimalCovering => rewrap(optimal_covering(single(payload)?), "covering"),
        IngredientKind::OptimalPacking => {
            let m = single(payload)?;
            rewrap(check_leave_kind(m, LeaveKind::Any), "packing")
        }
        IngredientKind::PackingWithLeave => rewrap(verify_packing(single(payload)?), "packing"),
        IngredientKind::LargeSetSts => {
            each(payload, verify_sts)?;
            verify_disjoint(payload)?;
            if payload.len() as u32 + 2 != n {
                return invalid(format!("a large set of STS({n}) has {} members, got {}", n - 2, payload.len()));
            }
            Ok(())
        }
        IngredientKind::DisjointCoveringFamily => {
            each(payload, optimal_covering)?;
            verify_disjoint(payload)
        }
        IngredientKind::CoveringFamily => {
            each(payload, optimal_covering)?;
            match triples_missed(n, payload).first() {
                None => Ok(()),
                Some(t) => invalid(format!("union misses triple {t:?}")),
            }
        }
        IngredientKind::AlignedCoveringFamily => verify_aligned(n, parameters, payload),
        IngredientKind::ResolvableSqs => {
            each(payload, |m| verify_steiner(m, 2, 4))?;
            let all = BlockSystem::new(n, 4, payload.iter().flat_map(|m| m.blocks().iter().cloned()).collect());
            rewrap(all.and_then(|s| verify_sqs(&s)), "union")
        }
    }
}

fn verify_aligned(n: u32, parameters: &BTreeMap<String, u64>, payload: &[BlockSystem]) -> Result<()> {
    let a = parameters.get("a").copied().unwrap_or(n as u64 - 1) as u32;
    if a + 1 != n || a % 6 != 0 {
        return invalid(format!("aligned family needs n = a + 1 and a = 0 mod 6 (a={a}, n={n})"));
    }
    let (sts, covers) = payload.split_last().expect("payload is non-empty");
    if covers.len() as u32 != a - 3 {
        return invalid(format!("expected {} coverings, got {}", a - 3, covers.len()));
    }
    let on_a = covers
        .iter()
        .map(|c| {
            if c.blocks().iter().any(|b| b.iter().any(|&x| x >= a)) {
                return invalid("covering uses the extra point".into());
            }
            BlockSystem::new(a, 3, c.blocks().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    each(&on_a, optimal_covering)?;
    verify_disjoint(&on_a)?;
    let aligned: Vec<[u32; 3]> = (0..a / 3).map(|k| [3 * k, 3 * k + 1, 3 * k + 2]).collect();
    if triples_missed(a, &on_a) != aligned {
        return invalid("coverings do not miss exactly the aligned triples".into());
    }
    rewrap(verify_sts(sts), "closing STS")?;
    if let Some(t) = aligned.iter().find(|t| !sts.contains(&t[..])) {
        return invalid(format!("closing STS lacks block {t:?}"));
    }
    Ok(())
}

/// Parses a design file and verifies it as an ingredient.
pub fn load_family(kind: IngredientKind, text: &str, provenance: Provenance) -> Result<IngredientRecord> {
    let f = DesignFile::parse(text)?;
    let file_kind = IngredientKind::from_str(&f.kind)?;
    if file_kind != kind {
        return invalid(format!("file holds `{}`, expected `{}`", f.kind, kind.name()));
    }
    record_from_file(&f, provenance)
}

pub fn record_from_file(f: &DesignFile, provenance: Provenance) -> Result<IngredientRecord> {
    let kind = IngredientKind::from_str(&f.kind)?;
    let mut parameters = f.fields.clone();
    parameters.remove("k");
    IngredientRecord::new(kind, f.n, parameters, f.systems()?, provenance)
}

const BUNDLED: &[&str] = &[
    include_str!("../../data/sqs10.design"),
    include_str!("../../data/large_set_sts_9.design"),
    include_str!("../../data/large_set_sts_13.design"),
    include_str!("../../data/large_set_sts_15.design"),
    include_str!("../../data/covering_family_4.design"),
    include_str!("../../data/covering_family_5.design"),
    include_str!("../../data/covering_family_6.design"),
    include_str!("../../data/covering_family_7.design"),
    include_str!("../../data/covering_family_8.design"),
    include_str!("../../data/covering_family_10.design"),
    include_str!("../../data/covering_family_11.design"),
    include_str!("../../data/disjoint_coverings_6.design"),
    include_str!("../../data/aligned_covering_family_12.design"),
];

pub(crate) fn bundled_sqs10() -> Result<BlockSystem> {
    Catalog::bundled()
        .find(IngredientKind::Sqs, 10)
        .map(|r| r.payload[0].clone())
        .ok_or_else(|| Error::MissingIngredient("bundled SQS(10)".into()))
}

/// A lookup table of verified ingredients. Designs that can be built on the
/// spot (Steiner systems, the trivial large set of STS(3), S(3,5,5), the
/// resolution of SQS(16)) are generated on request and never stored.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    records: Vec<Arc<IngredientRecord>>,
}

impl Catalog {
    /// Bundled data, parsed and verified once per process.
    pub fn bundled() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| {
            let records = BUNDLED
                .iter()
                .map(|text| {
                    let f = DesignFile::parse_text(text).expect("bundled file parses");
                    Arc::new(record_from_file(&f, Provenance::Bundled).expect("bundled file verifies"))
                })
                .collect();
            Catalog { records }
        })
    }

    /// The bundled catalog plus extra (already verified) records.
    pub fn with_records(extra: impl IntoIterator<Item = IngredientRecord>) -> Catalog {
        let mut c = Catalog::bundled().clone();
        c.records.extend(extra.into_iter().map(Arc::new));
        c
    }

    pub fn records(&self) -> &[Arc<IngredientRecord>] {
        &self.records
    }

    pub fn find(&self, kind: IngredientKind, n: u32) -> Option<Arc<IngredientRecord>> {
        self.records.iter().find(|r| r.kind == kind && r.n == n).cloned()
    }

    fn missing<T>(&self, what: String) -> Result<T> {
        Err(Error::MissingIngredient(what))
    }

    /// n-2 disjoint STS(n).
    pub fn large_set_sts(&self, n: u32) -> Result<Arc<IngredientRecord>> {
        if n == 3 {
            let sts = construct_sts(3)?;
            return Ok(Arc::new(IngredientRecord::new(
                IngredientKind::LargeSetSts,
                3,
                BTreeMap::new(),
                vec![sts],
                Provenance::Generated,
            )?));
        }
        self.find(IngredientKind::LargeSetSts, n)
            .map_or_else(|| self.missing(format!("large set of disjoint STS({n})")), Ok)
    }

    /// Optimal coverings of K_a whose union holds every triple.
    pub fn covering_family(&self, a: u32) -> Result<Vec<BlockSystem>> {
        if a == 3 {
            return Ok(vec![construct_sts(3)?]);
        }
        if let Some(r) = self.find(IngredientKind::CoveringFamily, a) {
            return Ok(r.payload.clone());
        }
        if let Some(r) = self.find(IngredientKind::LargeSetSts, a) {
            return Ok(r.payload.clone());
        }
        self.missing(format!("covering family for a={a}"))
    }

    /// Pairwise disjoint optimal coverings of K_a (at least `count`).
    pub fn disjoint_coverings(&self, a: u32, count: usize) -> Result<Vec<BlockSystem>> {
        let mut pools: Vec<Vec<BlockSystem>> = Vec::new();
        if let Some(r) = self.find(IngredientKind::DisjointCoveringFamily, a) {
            pools.push(r.payload.clone());
        }
        if let Ok(r) = self.aligned_family(a) {
            let covers = &r.payload[..r.payload.len() - 1];
            pools.push(covers.iter().map(|c| BlockSystem::new(a, 3, c.blocks().to_vec())).collect::<Result<_>>()?);
        }
        if let Some(r) = self.find(IngredientKind::LargeSetSts, a) {
            pools.push(r.payload.clone());
        }
        pools
            .into_iter()
            .find(|p| p.len() >= count)
            .map_or_else(|| self.missing(format!("{count} disjoint optimal coverings of K_{a}")), Ok)
    }

    pub fn aligned_family(&self, a: u32) -> Result<Arc<IngredientRecord>> {
        self.find(IngredientKind::AlignedCoveringFamily, a + 1)
            .map_or_else(|| self.missing(format!("aligned covering family for a={a}")), Ok)
    }

    pub fn sqs(&self, n: u32) -> Result<BlockSystem> {
        match construct_sqs(n) {
            Ok(s) => Ok(s),
            Err(e) => self.find(IngredientKind::Sqs, n).map(|r| r.payload[0].clone()).ok_or(e),
        }
    }

    pub fn steiner_s35(&self, n: u32) -> Result<Arc<IngredientRecord>> {
        if n == 5 {
            let s = BlockSystem::new(5, 5, vec![vec![0, 1, 2, 3, 4]])?;
            return Ok(Arc::new(IngredientRecord::new(
                IngredientKind::SteinerS35,
                5,
                BTreeMap::new(),
                vec![s],
                Provenance::Generated,
            )?));
        }
        self.find(IngredientKind::SteinerS35, n).map_or_else(|| self.missing(format!("S(3,5,{n})")), Ok)
    }

    pub fn resolvable_sqs(&self, n: u32) -> Result<Arc<IngredientRecord>> {
        if n == 16 {
            return Ok(Arc::new(IngredientRecord::new(
                IngredientKind::ResolvableSqs,
                16,
                BTreeMap::new(),
                resolve_boolean_sqs16(),
                Provenance::Generated,
            )?));
        }
        self.find(IngredientKind::ResolvableSqs, n).map_or_else(|| self.missing(format!("2-resolvable SQS({n})")), Ok)
    }

    /// Everything the catalog can hand out, for listings.
    pub fn summary(&self) -> Vec<(IngredientKind, u32, usize, Provenance)> {
        self.records.iter().map(|r| (r.kind, r.n, r.payload.len(), r.provenance)).collect()
    }
}

/// Boolean SQS(16) split into 7 classes, each an S(2,4,16): the cosets of the
/// 5 planes (2-dimensional subspaces of F_2^4) in one spread, for a partition
/// of the 35 planes into 7 spreads.
fn resolve_boolean_sqs16() -> Vec<BlockSystem> {
    let planes: Vec<[u32; 3]> =
        (1..16u32).tuple_combinations().filter(|&(x, y, z)| x ^ y == z).map(|(x, y, z)| [x, y, z]).collect();
    let mask = |p: &[u32; 3]| p.iter().fold(0u32, |m, &x| m | 1 << x);
    let masks: Vec<u32> = planes.iter().map(mask).collect();

    fn search(masks: &[u32], used: &mut Vec<bool>, spreads: &mut Vec<Vec<usize>>) -> bool {
        let Some(first) = used.iter().position(|u| !u) else {
            return true;
        };
        let mut spread = vec![first];
        used[first] = true;
        if extend(masks, used, &mut spread, masks[first], first, spreads) {
            return true;
        }
        used[first] = false;
        false
    }

    fn extend(
        masks: &[u32],
        used: &mut Vec<bool>,
        spread: &mut Vec<usize>,
        cover: u32,
        last: usize,
        spreads: &mut Vec<Vec<usize>>,
    ) -> bool {
        if spread.len() == 5 {
            spreads.push(spread.clone());
            if search(masks, used, spreads) {
                return true;
            }
            spreads.pop();
            return false;
        }
        for i in last + 1..masks.len() {
            if !used[i] && masks[i] & cover == 0 {
                used[i] = true;
                spread.push(i);
                if extend(masks, used, spread, cover | masks[i], i, spreads) {
                    return true;
                }
                spread.pop();
                used[i] = false;
            }
        }
        false
    }

    let mut used = vec![false; planes.len()];
    let mut spreads = Vec::new();
    assert!(search(&masks, &mut used, &mut spreads), "PG(3,2) has a packing of spreads");
    let all = boolean(16);
    spreads
        .iter()
        .map(|sp| {
            let blocks = sp
                .iter()
                .flat_map(|&i| {
                    let [x, y, z] = planes[i];
                    let mut cosets: Vec<Vec<u32>> = (0..16u32)
                        .map(|t| {
                            let mut b = vec![t, t ^ x, t ^ y, t ^ z];
                            b.sort_unstable();
                            b
                        })
                        .collect();
                    cosets.sort_unstable();
                    cosets.dedup();
                    cosets
                })
                .collect::<Vec<_>>();
            debug_assert!(blocks.iter().all(|b| all.contains(b)));
            BlockSystem::new(16, 4, blocks).expect("coset blocks are well formed")
        })
        .collect()
}

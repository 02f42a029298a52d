//! Picks the smallest construction for f(a,b) from a fixed recipe set closed
//! under the b+1 and b+2 extensions, and combines it with the lower bound and
//! the exact-value theorems.

use super::bounds::{lower_bound_f, theorem_value};
use super::constructions::*;
use super::ABInstance;
use crate::combin::binom;
use crate::designs::sqs::sqs_supported;
use crate::designs::{c_star, covering_number, mu_value, Catalog};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    Mu,
    Lambda,
    Doubling,
    Cyclic,
    Mod12,
    Mod6,
    SixT,
    LargeB,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Mu,
        Method::Lambda,
        Method::Doubling,
        Method::Cyclic,
        Method::Mod12,
        Method::Mod6,
        Method::SixT,
        Method::LargeB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Mu => "mu",
            Method::Lambda => "lambda",
            Method::Doubling => "doubling",
            Method::Cyclic => "cyclic",
            Method::Mod12 => "mod12",
            Method::Mod6 => "mod6",
            Method::SixT => "6t",
            Method::LargeB => "large-b",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "large_b" && *m == Method::LargeB))
            .ok_or_else(|| Error::Domain(format!("unknown method `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// One more B point joined to an optimal covering.
    PlusOne,
    /// Two more B points joined to a minimum-weight system.
    PlusTwo,
}

/// A base construction followed by extensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub a: u32,
    pub method: Method,
    pub base_b: u32,
    pub steps: Vec<Step>,
    pub size: u64,
}

impl Recipe {
    pub fn b(&self) -> u32 {
        self.base_b + self.steps.iter().map(|s| if *s == Step::PlusOne { 1 } else { 2 }).sum::<u32>()
    }

    /// Rule ids: the base method, then `cover-ext` / `pair-ext` per step.
    pub fn provenance(&self) -> Vec<String> {
        let mut p = vec![self.method.name().to_string()];
        for s in &self.steps {
            p.push(if *s == Step::PlusOne { "cover-ext" } else { "pair-ext" }.to_string());
        }
        p
    }

    pub fn build(&self, cat: &Catalog) -> Result<ABInstance> {
        let mut inst = build_base(self.method, self.a, self.base_b, cat)?;
        for s in &self.steps {
            inst = match s {
                Step::PlusOne => extend_b_plus_1(&inst)?,
                Step::PlusTwo => extend_b_plus_2(&inst)?,
            };
        }
        if inst.len() as u64 != self.size {
            return Err(Error::PreconditionFailed(format!("recipe {self} built {} blocks", inst.len())));
        }
        Ok(inst)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.method.name(), self.a, self.base_b)?;
        for s in &self.steps {
            f.write_str(if *s == Step::PlusOne { "+1" } else { "+2" })?;
        }
        Ok(())
    }
}

/// Runs one base construction for exactly (a, b).
pub fn build_base(method: Method, a: u32, b: u32, cat: &Catalog) -> Result<ABInstance> {
    let wrong_b = |want: String| {
        Err(Error::UnsupportedParameters(format!("{} builds b = {want}, asked for b = {b}", method.name())))
    };
    let j_of = |b: u32| -> Result<u32> {
        if b + 3 > a && (b + 3 - a) % 2 == 0 && b + 3 - a >= 2 {
            Ok((b + 3 - a) / 2)
        } else {
            wrong_b(format!("a-3+2j = {}+2j", a as i64 - 3)).map(|_: ABInstance| 0)
        }
    };
    match method {
        Method::Mu => construct_mu(a, b, cat),
        Method::Lambda => construct_lambda(a, b, cat),
        Method::Doubling if b == a => construct_doubling(a, cat),
        Method::Cyclic if b == a => construct_cyclic(a),
        Method::Mod12 if b + 1 == a => construct_0_4_mod12(a, cat),
        Method::Mod6 => construct_2_4_mod6(a, j_of(b)?, cat),
        Method::SixT => construct_6t(a, j_of(b)?, &*cat.aligned_family(a)?),
        Method::LargeB if b + 2 == 2 * a => construct_large_b(a, cat),
        Method::Doubling | Method::Cyclic => wrong_b("a".into()),
        Method::Mod12 => wrong_b("a-1".into()),
        Method::LargeB => wrong_b("2a-2".into()),
    }
}

/// Whether base recipes may assume cited ingredients exist (`Formula`) or
/// must have them at hand (`Constructive`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Availability {
    Constructive,
    Formula,
}

/// Size of each base method applicable at exactly (a, b).
fn base_sizes(a: u32, b: u32, cat: &Catalog, mode: Availability) -> Vec<(Method, u64)> {
    let constructive = mode == Availability::Constructive;
    let a64 = a as u64;
    let mut out = Vec::new();
    let Ok(cs) = c_star(a) else { return out };
    let two_cs = cs.halves() as u64;
    let Ok(ca) = covering_number(a) else { return out };
    let j = (b + 3 > a && (b + 3 - a) % 2 == 0 && b + 3 - a >= 2).then(|| ((b + 3 - a) / 2) as u64);

    if let Ok(mu) = mu_value(a) {
        let fam_ok = !constructive || cat.covering_family(a).is_ok_and(|f| f.len() as u32 <= b);
        if b >= mu && fam_ok {
            out.push((Method::Mu, b as u64 * ca));
        }
    }
    if a % 6 == 0 && b >= 1 && b <= a.saturating_sub(3) {
        if constructive {
            if cat.disjoint_coverings(a, b as usize).is_ok() {
                if let Ok(inst) = construct_lambda(a, b, cat) {
                    out.push((Method::Lambda, inst.len() as u64));
                }
            }
        } else {
            out.push((Method::Lambda, binom(a64, 3)));
        }
    }
    if b == a && (a % 12 == 2 || a % 12 == 6) && (!constructive || sqs_supported(a / 2 + 1)) {
        out.push((Method::Doubling, (2 * a64.pow(3) - a64 * a64) / 12));
    }
    if b == a && a >= 3 {
        out.push((Method::Cyclic, binom(a64 + 1, 3)));
    }
    if b + 1 == a && ((a % 12 == 0 && a > 12) || a % 12 == 4) {
        let n = a / 2;
        if !constructive || cat.large_set_sts(n + 1).is_ok() {
            let extra = if a % 12 == 4 { 16 } else { 0 };
            out.push((Method::Mod12, (4 * a64.pow(3) - 5 * a64 * a64 + extra) / 24));
        }
    }
    if let Some(j) = j {
        if (a % 6 == 2 || a % 6 == 4) && a != 8 && a >= 4 {
            let fam_ok = !constructive || cat.covering_family(a - 1).is_ok_and(|f| f.len() as u32 <= a - 3);
            if fam_ok {
                out.push((Method::Mod6, (a64 - 3) * (a64 * a64 + 2) / 6 + j * two_cs));
            }
        }
        if a % 6 == 0 && a >= 12 && (!constructive || cat.aligned_family(a).is_ok()) {
            out.push((Method::SixT, (a64 - 3) * a64 * a64 / 6 + j * (2 * a64 * a64 - a64) / 6));
        }
    }
    if b + 2 == 2 * a && a % 2 == 0 && a != 6 {
        let ok = if a % 6 == 4 { !constructive } else { !constructive || cat.large_set_sts(a + 1).is_ok() };
        if ok {
            out.push((Method::LargeB, (a64 - 1) * two_cs));
        }
    }
    out
}

/// Cheapest recipe for every b' in 1..=b (index b'), ties to fewer steps.
pub fn best_recipes(a: u32, b: u32, cat: &Catalog, mode: Availability) -> Vec<Option<Recipe>> {
    let mut best: Vec<Option<Recipe>> = vec![None; b as usize + 1];
    let (Ok(ca), Ok(cs)) = (covering_number(a), c_star(a)) else {
        return best;
    };
    let two_cs = cs.halves() as u64;
    for bb in 1..=b {
        let mut cands: Vec<Recipe> = base_sizes(a, bb, cat, mode)
            .into_iter()
            .map(|(method, size)| Recipe { a, method, base_b: bb, steps: Vec::new(), size })
            .collect();
        for (back, step, add) in [(1, Step::PlusOne, ca), (2, Step::PlusTwo, two_cs)] {
            if bb > back {
                if let Some(prev) = &best[(bb - back) as usize] {
                    let mut r = prev.clone();
                    r.steps.push(step);
                    r.size += add;
                    cands.push(r);
                }
            }
        }
        best[bb as usize] = cands.into_iter().min_by_key(|r| (r.size, r.steps.len()));
    }
    best
}

pub fn best_recipe(a: u32, b: u32, cat: &Catalog, mode: Availability) -> Option<Recipe> {
    if a < 2 || b < 1 {
        return None;
    }
    best_recipes(a, b, cat, mode).pop().flatten()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABBoundReport {
    pub a: u32,
    pub b: u32,
    pub lower: u64,
    /// Theorem value where one applies, else the best constructive size.
    pub upper: Option<u64>,
    pub exact: bool,
    pub lower_provenance: Vec<String>,
    pub upper_provenance: Vec<String>,
    /// Cheapest plan that can actually be built with the catalog at hand.
    pub recipe: Option<Recipe>,
    /// Cheapest plan assuming every cited ingredient exists.
    pub formula_upper: Option<Recipe>,
}

impl ABBoundReport {
    pub fn constructive_upper(&self) -> Option<u64> {
        self.recipe.as_ref().map(|r| r.size)
    }
}

pub fn exact_f(a: u32, b: u32) -> Result<ABBoundReport> {
    exact_f_with(a, b, Catalog::bundled())
}

pub fn exact_f_with(a: u32, b: u32, cat: &Catalog) -> Result<ABBoundReport> {
    let lb = lower_bound_f(a, b)?;
    let recipe = best_recipe(a, b, cat, Availability::Constructive);
    let formula = best_recipe(a, b, cat, Availability::Formula);
    let (upper, upper_provenance, exact) = match theorem_value(a, b) {
        Some((v, id)) => {
            let mut p = vec![id.to_string()];
            if let Some(r) = recipe.as_ref().filter(|r| r.size == v) {
                p.extend(r.provenance());
            }
            (Some(v), p, v == lb.value)
        }
        None => match &recipe {
            Some(r) => (Some(r.size), r.provenance(), r.size == lb.value),
            None => (None, Vec::new(), false),
        },
    };
    let lower = if exact { upper.expect("exact has a value") } else { lb.value };
    Ok(ABBoundReport {
        a,
        b,
        lower,
        upper,
        exact,
        lower_provenance: lb.provenance,
        upper_provenance,
        recipe,
        formula_upper: formula,
    })
}

/// Builds the cheapest constructive (a,b)-system, or with a forced base method.
pub fn construct_ab(a: u32, b: u32, method: Option<Method>, cat: &Catalog) -> Result<ABInstance> {
    match method {
        Some(m) => build_base(m, a, b, cat),
        None => best_recipe(a, b, cat, Availability::Constructive)
            .ok_or_else(|| Error::UnsupportedParameters(format!("no construction available for f({a},{b})")))?
            .build(cat),
    }
}

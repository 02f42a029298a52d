//! Closed-form upper bounds on L(n) = L(n,4,3,4) by residue class, and the
//! f-polynomials they are summed from.

use super::search::{partition_search, PartitionPlan};
use crate::combin::binom;
use crate::designs::Catalog;
use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};

/// `L(n) <= (c3 n³ + c2 n² + c1 n + c0) / 216` for `n ≡ residue (mod modulus)`,
/// `n > above`. The bound comes from the ordered partition whose parts are
/// `(modulus/3)·u + offsets[i]` with `n = modulus·u + residue`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueRule {
    pub modulus: u32,
    pub residue: u32,
    pub coeffs: [i64; 4],
    pub above: u32,
    pub offsets: [i64; 3],
}

const fn rule(modulus: u32, residue: u32, coeffs: [i64; 4], above: u32, offsets: [i64; 3]) -> ResidueRule {
    ResidueRule { modulus, residue, coeffs, above, offsets }
}

pub const RESIDUE_RULES: [ResidueRule; 27] = [
    rule(18, 1, [4, -12, 48, 176], 19, [1, 1, -1]),
    rule(18, 3, [4, -12, 0, 0], 0, [1, 1, 1]),
    rule(18, 5, [4, -12, 0, 16], 0, [3, 1, 1]),
    rule(18, 7, [4, -12, 0, 80], 0, [3, 3, 1]),
    rule(18, 9, [4, -12, 0, 0], 0, [3, 3, 3]),
    rule(18, 11, [4, -12, 48, -80], 0, [5, 3, 3]),
    rule(18, 13, [4, -12, 96, -16], 0, [5, 5, 3]),
    rule(18, 15, [4, -12, 48, 144], 0, [7, 5, 3]),
    rule(18, 17, [4, -12, 96, 112], 17, [7, 5, 5]),
    rule(36, 0, [4, -9, 48, 0], 36, [1, -1, 0]),
    rule(36, 2, [4, -9, -12, 28], 38, [1, 1, 0]),
    rule(36, 4, [4, -9, -12, 152], 40, [3, 1, 0]),
    rule(36, 6, [4, -10, 12, 72], 0, [3, 1, 2]),
    rule(36, 8, [4, -10, 4, 72], 0, [3, 3, 2]),
    rule(36, 10, [4, -9, 0, 140], 0, [3, 3, 4]),
    rule(36, 12, [4, -9, 36, 216], 0, [3, 5, 4]),
    rule(36, 14, [4, -9, 84, 196], 0, [5, 5, 4]),
    rule(36, 16, [4, -9, 36, 248], 0, [7, 5, 4]),
    rule(36, 18, [4, -10, 60, 0], 0, [7, 5, 6]),
    rule(36, 20, [4, -10, 4, 0], 0, [7, 7, 6]),
    rule(36, 22, [4, -10, 8, 88], 0, [9, 7, 6]),
    rule(36, 24, [4, -8, 0, -144], 0, [7, 9, 8]),
    rule(36, 26, [4, -8, -16, 104], 0, [9, 9, 8]),
    rule(36, 28, [4, -8, 16, -120], 0, [9, 9, 10]),
    rule(36, 30, [4, -8, 36, 72], 0, [9, 9, 12]),
    rule(36, 32, [4, -8, 68, 224], 0, [9, 11, 12]),
    rule(36, 34, [4, -8, 4, 504], 0, [9, 13, 12]),
];

impl ResidueRule {
    pub fn id(&self) -> String {
        format!("residue n≡{} mod {}", self.residue, self.modulus)
    }

    pub fn applies(&self, n: u32) -> bool {
        n % self.modulus == self.residue && n > self.above
    }

    /// The numerator over 216; integral division is asserted.
    pub fn evaluate(&self, n: u32) -> u64 {
        let x = n as i64;
        let [c3, c2, c1, c0] = self.coeffs;
        let num = ((c3 * x + c2) * x + c1) * x + c0;
        assert!(num % 216 == 0 && num >= 0, "{} at n = {n}: {num} not a multiple of 216", self.id());
        (num / 216) as u64
    }

    /// Ordered parts of the partition behind the rule, if all are positive.
    pub fn parts(&self, n: u32) -> Option<[u32; 3]> {
        if n % self.modulus != self.residue {
            return None;
        }
        let u = ((n - self.residue) / self.modulus) as i64;
        let step = (self.modulus / 3) as i64;
        let p = self.offsets.map(|o| step * u + o);
        p.iter().all(|&x| x > 0).then(|| p.map(|x| x as u32))
    }

    /// The first `count` values of n the rule admits whose partition has
    /// every part at least 2 (f is undefined on a one-point side).
    pub fn admissible(&self, count: usize) -> Vec<u32> {
        (0..)
            .map(|u| self.modulus * u + self.residue)
            .filter(|&n| self.applies(n) && self.parts(n).is_some_and(|p| p.iter().all(|&x| x >= 2)))
            .take(count)
            .collect()
    }
}

pub fn residue_rule(n: u32) -> &'static ResidueRule {
    let m = if n % 2 == 1 { 18 } else { 36 };
    RESIDUE_RULES.iter().find(|r| r.modulus == m && r.residue == n % m).expect("every residue class has a rule")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LBound {
    pub n: u32,
    pub value: u64,
    pub provenance: String,
    /// True when the residue closed form was used.
    pub closed_form: bool,
    /// The partition plan used when falling back to the search.
    pub plan: Option<PartitionPlan>,
}

/// Upper bound on L(n). Uses the residue closed form when its side condition
/// holds; otherwise falls back to [`partition_search`] and says so.
pub fn bound_l(n: u32, cat: &Catalog) -> Result<LBound> {
    if n < 4 {
        return domain(format!("L(n) needs n >= 4, got {n}"));
    }
    if n == 4 {
        return Ok(LBound { n, value: 1, provenance: "single-block".into(), closed_form: false, plan: None });
    }
    if n < 9 {
        let r = crate::oracle::exact_l(n, crate::oracle::Budget::default())?;
        return Ok(LBound { n, value: r.optimum, provenance: "exact-search".into(), closed_form: false, plan: None });
    }
    let r = residue_rule(n);
    if r.applies(n) {
        return Ok(LBound { n, value: r.evaluate(n), provenance: r.id(), closed_form: true, plan: None });
    }
    let found = partition_search(n, cat)?;
    let plan = found.best.ok_or_else(|| {
        Error::UnsupportedParameters(format!("{} needs n > {} and no partition can be built", r.id(), r.above))
    })?;
    Ok(LBound {
        n,
        value: plan.predicted,
        provenance: format!("partition-search ({} needs n > {})", r.id(), r.above),
        closed_form: false,
        plan: Some(plan),
    })
}

/// One row of the f-polynomial table: `f(step·t + a_off, step·t + b_off)`
/// equals (`exact`) or is at most the cubic in t, for `t >= min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRow {
    pub var: char,
    pub step: u32,
    pub a_off: i64,
    pub b_off: i64,
    pub coeffs: [i64; 4],
    pub exact: bool,
    pub min: u32,
    pub source: &'static str,
}

const fn odd_row(a_off: i64, b_off: i64, coeffs: [i64; 4], min: u32) -> PolyRow {
    PolyRow { var: 't', step: 6, a_off, b_off, coeffs, exact: true, min, source: "exact-odd" }
}

const fn even_row(a_off: i64, b_off: i64, coeffs: [i64; 4], exact: bool, min: u32, source: &'static str) -> PolyRow {
    PolyRow { var: 's', step: 12, a_off, b_off, coeffs, exact, min, source }
}

pub const POLY_TABLE: [PolyRow; 30] = [
    odd_row(-1, 1, [36, -12, 3, 1], 0),
    odd_row(1, -1, [36, 0, -1, 0], 2),
    odd_row(1, 0, [36, 6, 0, 0], 0),
    odd_row(1, 1, [36, 12, 1, 0], 0),
    odd_row(1, 3, [36, 24, 3, 0], 0),
    odd_row(3, 1, [36, 36, 11, 1], 0),
    odd_row(3, 2, [36, 42, 16, 2], 0),
    odd_row(3, 3, [36, 48, 21, 3], 0),
    odd_row(3, 4, [36, 54, 26, 4], 0),
    odd_row(3, 5, [36, 60, 31, 5], 0),
    odd_row(3, 6, [36, 66, 36, 6], 0),
    odd_row(3, 7, [36, 72, 41, 7], 0),
    odd_row(5, 3, [36, 72, 51, 12], 0),
    odd_row(5, 5, [36, 84, 69, 20], 0),
    odd_row(5, 6, [36, 90, 78, 24], 0),
    odd_row(5, 7, [36, 96, 87, 28], 0),
    odd_row(7, 5, [36, 108, 107, 35], 0),
    odd_row(7, 6, [36, 114, 120, 42], 0),
    even_row(0, 1, [288, 18, -2, 0], false, 2, "mod12+pair-ext"),
    even_row(0, 3, [288, 66, -4, 0], false, 2, "mod12+pair-ext"),
    even_row(4, 3, [288, 258, 76, 8], false, 0, "mod12"),
    even_row(4, 5, [288, 306, 106, 13], false, 0, "mod12+pair-ext"),
    even_row(4, 7, [288, 354, 136, 18], false, 0, "mod12+pair-ext"),
    even_row(2, 3, [288, 156, 28, 2], true, 0, "exact-2-6-mod-12"),
    even_row(6, 7, [288, 444, 228, 39], true, 0, "exact-2-6-mod-12"),
    even_row(6, 9, [288, 492, 274, 50], true, 0, "exact-2-6-mod-12"),
    even_row(8, 7, [288, 552, 354, 75], false, 0, "mod6"),
    even_row(10, 9, [288, 696, 562, 151], false, 0, "mod6"),
    even_row(8, 9, [288, 600, 414, 95], false, 0, "cyclic+cover-ext"),
    even_row(12, 9, [288, 792, 724, 220], false, 0, "lambda"),
];

fn term(step: u32, var: char, off: i64) -> String {
    match off {
        0 => format!("{step}{var}"),
        o if o > 0 => format!("{step}{var}+{o}"),
        o => format!("{step}{var}{o}"),
    }
}

impl PolyRow {
    /// Family identifier such as `f(6t+3,6t+2)`.
    pub fn family(&self) -> String {
        format!("f({},{})", term(self.step, self.var, self.a_off), term(self.step, self.var, self.b_off))
    }

    /// (a, b) at parameter t, when t is in the row's domain and a >= 2, b >= 1.
    pub fn ab(&self, t: u32) -> Option<(u32, u32)> {
        let a = (self.step * t) as i64 + self.a_off;
        let b = (self.step * t) as i64 + self.b_off;
        (t >= self.min && a >= 2 && b >= 1).then_some((a as u32, b as u32))
    }

    pub fn value(&self, t: u32) -> i64 {
        let x = t as i64;
        let [c3, c2, c1, c0] = self.coeffs;
        ((c3 * x + c2) * x + c1) * x + c0
    }
}

/// Evaluates the polynomial of the named family at t (or s).
pub fn polynomial_table(family: &str, t: u32) -> Result<i64> {
    let key: String = family.chars().filter(|c| !c.is_whitespace()).collect();
    let row = POLY_TABLE
        .iter()
        .find(|r| r.family() == key)
        .ok_or_else(|| Error::Domain(format!("unknown family `{family}`")))?;
    if row.ab(t).is_none() {
        return domain(format!("{} is outside its domain at {} = {t}", row.family(), row.var));
    }
    Ok(row.value(t))
}

/// Triples in Turán's three-part construction on n points, minimised over
/// ordered part sizes: every 4-set contains one of them, so this is an upper
/// bound on the Turán number T(n,4,3). Relates to lottery systems through
/// L(n,4,3,4) >= T(n,4,3)/4; only offered as a reference column.
pub fn turan_construction_size(n: u32) -> u64 {
    let n = n as u64;
    let mut best = u64::MAX;
    for p in 0..=n {
        for q in 0..=n - p {
            let r = n - p - q;
            let s = binom(p, 3) + binom(q, 3) + binom(r, 3) + binom(p, 2) * q + binom(q, 2) * r + binom(r, 2) * p;
            best = best.min(s);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let cat = Catalog::bundled();
        assert_eq!(bound_l(21, cat).unwrap().value, 147);
        assert_eq!(bound_l(9, cat).unwrap().value, 9);
        assert_eq!(bound_l(10, cat).unwrap().value, 15);
        assert_eq!(bound_l(13, cat).unwrap().value, 37);
        assert_eq!(bound_l(15, cat).unwrap().value, 54);
        assert_eq!(bound_l(4, cat).unwrap().value, 1);
        assert_eq!(bound_l(21, cat).unwrap().provenance, "residue n≡3 mod 18");
    }

    #[test]
    fn numerators_are_integral() {
        for r in &RESIDUE_RULES {
            for n in r.admissible(5) {
                r.evaluate(n);
            }
        }
    }

    #[test]
    fn family_lookup() {
        assert_eq!(polynomial_table("f(6t+3,6t+2)", 1).unwrap(), 96);
        assert_eq!(polynomial_table("f(6t+1, 6t)", 1).unwrap(), 42);
        assert_eq!(polynomial_table("f(12s+2,12s+3)", 0).unwrap(), 2);
        assert_eq!(POLY_TABLE[1].family(), "f(6t+1,6t-1)");
        assert!(polynomial_table("f(6t+1,6t-1)", 1).is_err());
        assert!(polynomial_table("f(5t,1)", 1).is_err());
    }

    #[test]
    fn turan_small() {
        assert_eq!(turan_construction_size(4), 1);
        assert_eq!(turan_construction_size(6), 6);
    }
}

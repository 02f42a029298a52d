//! Best ordered partition n = a + b + c under the constructive f-recipes.

use crate::absystems::dispatch::{best_recipe, Availability, Recipe};
use crate::designs::Catalog;
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionPlan {
    pub parts: [u32; 3],
    /// Recipes for f(a,b), f(b,c), f(c,a) in that order.
    pub recipes: Vec<Recipe>,
    pub predicted: u64,
}

impl PartitionPlan {
    pub fn label(&self) -> String {
        format!("{}+{}+{}", self.parts[0], self.parts[1], self.parts[2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: u32,
    pub best: Option<PartitionPlan>,
    /// Partitions dropped because some pair has no buildable recipe.
    pub skipped: Vec<([u32; 3], String)>,
}

/// Scores every ordered partition with parts >= 3; ties go to the
/// lexicographically smallest parts.
pub fn partition_search(n: u32, cat: &Catalog) -> Result<SearchOutcome> {
    if n < 9 {
        return domain(format!("partition search needs n >= 9, got {n}"));
    }
    let mut memo: HashMap<(u32, u32), Option<Recipe>> = HashMap::new();
    let mut recipe = |a: u32, b: u32| {
        memo.entry((a, b)).or_insert_with(|| best_recipe(a, b, cat, Availability::Constructive)).clone()
    };
    let mut best: Option<PartitionPlan> = None;
    let mut skipped = Vec::new();
    for a in 3..=n - 6 {
        for b in 3..=n - a - 3 {
            let c = n - a - b;
            let parts = [a, b, c];
            let rs = [recipe(a, b), recipe(b, c), recipe(c, a)];
            if let Some(i) = rs.iter().position(Option::is_none) {
                skipped.push((parts, format!("no construction for f({},{})", parts[i], parts[(i + 1) % 3])));
                continue;
            }
            let recipes: Vec<Recipe> = rs.into_iter().flatten().collect();
            let predicted = recipes.iter().map(|r| r.size).sum();
            if best.as_ref().is_none_or(|p| predicted < p.predicted) {
                best = Some(PartitionPlan { parts, recipes, predicted });
            }
        }
    }
    Ok(SearchOutcome { n, best, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_searches() {
        let cat = Catalog::bundled();
        let p9 = partition_search(9, cat).unwrap().best.unwrap();
        assert_eq!((p9.parts, p9.predicted), ([3, 3, 3], 9));
        let p13 = partition_search(13, cat).unwrap().best.unwrap();
        assert_eq!(p13.predicted, 37);
        assert!(partition_search(8, cat).is_err());
    }
}

//! The template inventory: every problem family, its domain, its
//! complexity axis, and the per-level calibration ranges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Arithmetic,
    Algebra,
    Combinatorics,
    NumberTheory,
    Geometry,
    Logic,
}

/// A calibrated problem family. `level_table[k-1]` is the inclusive range
/// the family's complexity measure must fall in at level `k`.
#[derive(Debug, Clone)]
pub struct Template {
    pub id: &'static str,
    pub domain: Domain,
    pub complexity_axis: &'static str,
    pub level_table: [(u32, u32); 5],
}

impl Template {
    pub fn level_range(&self, level: u8) -> Result<(u32, u32)> {
        if !(1..=5).contains(&level) {
            return Err(Error::Config(format!(
                "level {level} outside table for {}",
                self.id
            )));
        }
        Ok(self.level_table[(level - 1) as usize])
    }
}

macro_rules! template {
    ($id:literal, $domain:ident, $axis:literal, $table:expr) => {
        Template {
            id: $id,
            domain: Domain::$domain,
            complexity_axis: $axis,
            level_table: $table,
        }
    };
}

const MATRIX_LEVELS: [(u32, u32); 5] = [(3, 3), (4, 4), (6, 6), (7, 7), (9, 9)];
const FUNC_LEVELS: [(u32, u32); 5] = [(2, 2), (3, 3), (4, 4), (5, 5), (6, 6)];
const CONSTRUCTION_LEVELS: [(u32, u32); 5] =
    [(10, 10), (15, 15), (20, 20), (25, 25), (30, 30)];
const GRID_LEVELS: [(u32, u32); 5] = [(5, 10), (11, 20), (21, 30), (31, 50), (51, 70)];
const PROB_FIX_LEVELS: [(u32, u32); 5] = [(4, 6), (7, 8), (9, 9), (10, 11), (12, 12)];
const NGON_LEVELS: [(u32, u32); 5] = [(6, 7), (8, 9), (10, 11), (12, 13), (14, 15)];

/// Full inventory. Paper-adjacent ranges that shared a boundary value are
/// trimmed so that consecutive levels never overlap.
pub static TEMPLATES: &[Template] = &[
    // arithmetic
    template!("arithmetic/gcd", Arithmetic, "digit length",
        [(4, 7), (10, 12), (15, 20), (21, 25), (26, 30)]),
    template!("arithmetic/calc_mixed", Arithmetic, "operation length",
        [(4, 9), (10, 14), (15, 16), (17, 20), (21, 25)]),
    template!("arithmetic/list_prime", Arithmetic, "max answer",
        [(2, 25), (26, 100), (101, 200), (201, 400), (401, 800)]),
    template!("arithmetic/determinant", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/eigenvalues", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/inverse", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/multiplication", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/power", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/rank", Arithmetic, "row", MATRIX_LEVELS),
    template!("arithmetic/svd", Arithmetic, "row", MATRIX_LEVELS),
    // algebra
    template!("algebra/linear_equation", Algebra, "symbol number",
        [(2, 2), (3, 3), (4, 4), (5, 5), (6, 6)]),
    template!("algebra/polynomial_roots", Algebra, "degree",
        [(3, 3), (4, 4), (5, 5), (6, 6), (7, 7)]),
    template!("algebra/func_integration", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_area", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_derivative", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_ext_coords", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_extrema", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_intsct_coords", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_intersection", Algebra, "composed function number", FUNC_LEVELS),
    template!("algebra/func_zeros", Algebra, "composed function number", FUNC_LEVELS),
    // combinatorics
    template!("combinatory/distribute", Combinatorics, "total letters",
        [(4, 6), (7, 8), (9, 10), (11, 11), (12, 12)]),
    template!("combinatory/pattern_match", Combinatorics, "total letters",
        [(4, 6), (7, 8), (9, 10), (11, 12), (13, 14)]),
    template!("combinatory/prob_gt_n_fix", Combinatorics, "total letters", PROB_FIX_LEVELS),
    template!("combinatory/prob_eq_n_fix", Combinatorics, "total letters", PROB_FIX_LEVELS),
    template!("combinatory/prob_no_fix", Combinatorics, "total letters", PROB_FIX_LEVELS),
    template!("combinatory/prob_no_letter", Combinatorics, "total letters", PROB_FIX_LEVELS),
    // number theory
    template!("numbertheory/digit_sum", NumberTheory, "digit count",
        [(2, 2), (3, 3), (4, 4), (5, 5), (6, 6)]),
    template!("numbertheory/triple_count", NumberTheory, "max answer",
        [(1, 10), (11, 50), (51, 100), (101, 200), (201, 500)]),
    template!("numbertheory/prime_mod", NumberTheory, "digit count",
        [(2, 2), (3, 3), (4, 4), (5, 5), (6, 6)]),
    // logic & puzzles
    template!("logic/blocked_grid", Logic, "grid size", GRID_LEVELS),
    template!("logic/grid_rook", Logic, "grid size", GRID_LEVELS),
    template!("logic/grid_knight", Logic, "grid size", GRID_LEVELS),
    template!("logic/zebralogic", Logic, "max(attributes, people)",
        [(2, 2), (3, 3), (4, 4), (5, 5), (6, 6)]),
    template!("logic/grid_chip", Logic, "grid size",
        [(4, 4), (5, 5), (6, 6), (7, 7), (8, 8)]),
    // geometry
    template!("geometry/basic", Geometry, "statement number", CONSTRUCTION_LEVELS),
    template!("geometry/polygon_chords", Geometry, "diagonal count", NGON_LEVELS),
    template!("geometry/circle", Geometry, "statement number", CONSTRUCTION_LEVELS),
    template!("geometry/polygon_general", Geometry, "statement number", CONSTRUCTION_LEVELS),
    template!("geometry/triangle", Geometry, "statement number", CONSTRUCTION_LEVELS),
    template!("geometry/rotation", Geometry, "diagonal number", FUNC_LEVELS),
    template!("geometry/polygon_color", Geometry, "polygon vertices", NGON_LEVELS),
];

pub fn lookup(id: &str) -> Result<&'static Template> {
    TEMPLATES
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::Config(format!("unknown template id {id:?}")))
}

pub fn is_known_template(id: &str) -> bool {
    TEMPLATES.iter().any(|t| t.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique_and_counted() {
        let ids: HashSet<_> = TEMPLATES.iter().map(|t| t.id).collect();
        assert_eq!(ids.len(), TEMPLATES.len());
        assert_eq!(TEMPLATES.len(), 41);
    }

    #[test]
    fn level_tables_ordered_and_disjoint() {
        for t in TEMPLATES {
            for w in t.level_table.windows(2) {
                assert!(w[0].0 <= w[0].1, "{}: empty range", t.id);
                assert!(
                    w[1].0 > w[0].1,
                    "{}: level ranges overlap or are unordered",
                    t.id
                );
            }
        }
    }

    #[test]
    fn out_of_table_level_rejected() {
        let t = lookup("arithmetic/gcd").unwrap();
        assert!(t.level_range(0).is_err());
        assert!(t.level_range(6).is_err());
        assert_eq!(t.level_range(1).unwrap(), (4, 7));
    }
}

//! Symbolic motion planners on finite cell complexes.
//!
//! Pick a point `v_k` in the interior of some `k`-cell for each `k` and a path
//! `γ_{k,l}` from `v_k` to `v_l`. With `V^k` the union of open `k`-cells
//! (each contracted onto its chosen point), the sets
//! `F_i = ⋃_{k+l=i} V^k × V^l` for `0 ≤ i ≤ 2n` cover `X × X`, and on the
//! block `V^k × V^l` a pair `(a, b)` is joined by moving `a` to `v_k`,
//! following `γ_{k,l}`, then moving out from `v_l` to `b`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certificate::{certify_g2, genus_reduction_check, CertifyConfig, Verdict};
use crate::error::{Error, Result};

/// A cell complex given by cell counts, chosen points and a path table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellComplexDescription {
    pub dimension: usize,
    /// `cells[k]` is the number of `k`-cells.
    pub cells: Vec<usize>,
    /// One label per dimension; defaults to `v0, v1, ...`.
    #[serde(default)]
    pub points: Option<Vec<String>>,
    /// Path labels keyed `"k,l"`; missing entries default to `γ_k,l`.
    #[serde(default)]
    pub paths: BTreeMap<String, String>,
}

impl CellComplexDescription {
    /// A CW structure on `#_g RP^n`: one 0-cell, `g` cells in each dimension
    /// `1..n-1`, one `n`-cell. For `n = 0` this is a point.
    pub fn connected_sum_preset(n: usize, g: usize) -> Self {
        let cells = (0..=n).map(|k| if k == 0 || k == n { 1 } else { g }).collect();
        CellComplexDescription { dimension: n, cells, points: None, paths: BTreeMap::new() }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cx: Self = toml::from_str(text).map_err(|e| Error::InvalidComplex(e.to_string()))?;
        cx.validate()?;
        Ok(cx)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dimension;
        if self.cells.len() != n + 1 {
            return Err(Error::InvalidComplex(format!(
                "expected {} cell counts for dimension {n}, got {}",
                n + 1,
                self.cells.len()
            )));
        }
        if let Some(k) = self.cells.iter().position(|&c| c == 0) {
            return Err(Error::InvalidComplex(format!("no cells in dimension {k}")));
        }
        if self.cells[0] != 1 && n == 0 {
            return Err(Error::InvalidComplex("a connected 0-dimensional complex is a single point".into()));
        }
        if let Some(points) = &self.points {
            if points.len() != n + 1 {
                return Err(Error::InvalidComplex(format!("expected {} point labels, got {}", n + 1, points.len())));
            }
        }
        for key in self.paths.keys() {
            parse_key(key, n)?;
        }
        Ok(())
    }

    pub fn point(&self, k: usize) -> String {
        match &self.points {
            Some(p) => p[k].clone(),
            None => format!("v{k}"),
        }
    }

    pub fn path(&self, k: usize, l: usize) -> String {
        self.paths.get(&format!("{k},{l}")).cloned().unwrap_or_else(|| format!("γ{k},{l}"))
    }
}

fn parse_key(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::InvalidComplex(format!("path key {key:?} is not \"k,l\" with 0 <= k, l <= {n}"));
    let (k, l) = key.split_once(',').ok_or_else(bad)?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    let l: usize = l.trim().parse().map_err(|_| bad())?;
    if k > n || l > n {
        return Err(bad());
    }
    Ok((k, l))
}

/// The local rule on `V^k × V^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub k: usize,
    pub l: usize,
    /// Contract the start point onto this point.
    pub contract_to: String,
    pub path: String,
    /// Expand from this point to the end point.
    pub expand_from: String,
}

impl Rule {
    pub fn segments(&self) -> [&str; 3] {
        [&self.contract_to, &self.path, &self.expand_from]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    pub index: usize,
    pub blocks: Vec<Rule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannerTable {
    pub dimension: usize,
    pub cells: Vec<usize>,
    pub domains: Vec<Domain>,
}

impl PlannerTable {
    /// Upper bound on `TC` from this planner: domains minus one.
    pub fn tc_upper_bound(&self) -> usize {
        self.domains.len() - 1
    }

    /// Each `(k, l)` lies in exactly one domain, namely `F_{k+l}`.
    pub fn is_partition(&self) -> bool {
        let n = self.dimension;
        let mut seen = vec![vec![0usize; n + 1]; n + 1];
        for d in &self.domains {
            for r in &d.blocks {
                if r.k > n || r.l > n || r.k + r.l != d.index {
                    return false;
                }
                seen[r.k][r.l] += 1;
            }
        }
        seen.iter().flatten().all(|&c| c == 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

impl fmt::Display for PlannerTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(ToString::to_string).collect();
        writeln!(f, "complex: dimension {} cells [{}]", self.dimension, cells.join(", "))?;
        writeln!(f, "domains: {}", self.domains.len())?;
        for d in &self.domains {
            let blocks: Vec<String> = d.blocks.iter().map(|r| format!("V{}×V{}", r.k, r.l)).collect();
            writeln!(f, "F{} = {}", d.index, blocks.join(" ∪ "))?;
            for r in &d.blocks {
                writeln!(f, "  V{}×V{}: {} -> {} -> {}", r.k, r.l, r.contract_to, r.path, r.expand_from)?;
            }
        }
        Ok(())
    }
}

pub fn synthesize(cx: &CellComplexDescription) -> Result<PlannerTable> {
    cx.validate()?;
    let n = cx.dimension;
    let domains = (0..=2 * n)
        .map(|i| Domain {
            index: i,
            blocks: (i.saturating_sub(n)..=i.min(n))
                .map(|k| {
                    let l = i - k;
                    Rule { k, l, contract_to: cx.point(k), path: cx.path(k, l), expand_from: cx.point(l) }
                })
                .collect(),
        })
        .collect();
    Ok(PlannerTable { dimension: n, cells: cx.cells.clone(), domains })
}

/// Lower and upper bounds for `TC(#_g RP^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcBracket {
    pub n: usize,
    pub g: usize,
    /// `2n` once the certificate (and for `g > 2` the genus reduction) is
    /// verified; absent otherwise.
    pub lower: Option<usize>,
    pub upper: usize,
    pub optimal: bool,
}

impl fmt::Display for TcBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lower = self.lower.map_or("unknown".to_string(), |l| l.to_string());
        write!(
            f,
            "TC bracket (n={}, g={}): lower {lower}, upper {}, {}",
            self.n,
            self.g,
            self.upper,
            if self.optimal { "optimal" } else { "not shown optimal" }
        )
    }
}

pub fn tc_bracket(n: usize, g: usize, config: &CertifyConfig) -> Result<TcBracket> {
    if n < 3 || g < 2 {
        return Err(Error::Unsupported(format!("TC bracket needs n >= 3 and g >= 2, got n = {n}, g = {g}")));
    }
    let upper = synthesize(&CellComplexDescription::connected_sum_preset(n, g))?.tc_upper_bound();
    let mut verified = certify_g2(n, config)?.verdict == Verdict::Verified;
    if g > 2 && verified {
        verified = genus_reduction_check(n, g)?.verdict == Verdict::Verified;
    }
    let lower = verified.then_some(2 * n);
    Ok(TcBracket { n, g, lower, upper, optimal: lower == Some(upper) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_has_one_domain() {
        let t = synthesize(&CellComplexDescription::connected_sum_preset(0, 1)).unwrap();
        assert_eq!(t.domains.len(), 1);
        assert!(t.is_partition());
    }

    #[test]
    fn surface_has_five_domains() {
        let t = synthesize(&CellComplexDescription::connected_sum_preset(2, 3)).unwrap();
        assert_eq!(t.domains.len(), 5);
        assert_eq!(t.domains[2].blocks.len(), 3);
        assert!(t.is_partition());
    }

    #[test]
    fn toml_round_trip() {
        let cx = CellComplexDescription::from_toml(
            "dimension = 2\ncells = [1, 2, 1]\npoints = [\"p\", \"q\", \"r\"]\n[paths]\n\"0,2\" = \"arc\"\n",
        )
        .unwrap();
        let t = synthesize(&cx).unwrap();
        let rule = &t.domains[2].blocks[0];
        assert_eq!(rule.segments(), ["p", "arc", "r"]);
    }

    #[test]
    fn malformed_descriptions_rejected() {
        assert!(CellComplexDescription::from_toml("dimension = 2\ncells = [1, 0, 1]").is_err());
        assert!(CellComplexDescription::from_toml("dimension = 2\ncells = [1, 1]").is_err());
        assert!(CellComplexDescription::from_toml("dimension = 1\ncells = [1, 1]\n[paths]\n\"0,4\" = \"p\"").is_err());
        assert!(CellComplexDescription::from_toml("dimension = 1\ncells = [1, 1]\nextra = 3").is_err());
    }

    #[test]
    fn bracket_rejects_small_inputs() {
        assert!(tc_bracket(0, 2, &CertifyConfig::default()).is_err());
        assert!(tc_bracket(3, 1, &CertifyConfig::default()).is_err());
    }
}

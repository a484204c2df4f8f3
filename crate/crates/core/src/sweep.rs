//! Batches of identity checks over parameter ranges, shared by the CLI
//! `sweep` command and the test suites.

use serde::Serialize;

use crate::action::{
    braid_holds_symbolically, braid_words, commutation_holds, compare_words_at_random_points, involution_holds,
    SubstitutionMap,
};
use crate::alternants::{shift_by_staircase, verify_mn, Alternants};
use crate::arith::{Ambient, Poly, RatFn};
use crate::band::{curl_product, read_generator, whirl_product, window_for};
use crate::error::{Error, Result};
use crate::generators::{loop_e, loop_h, power_sum, FlowSet};
use crate::strips::{add_border_strips_geometric, add_border_strips_rearrangement};
use crate::tableaux::{jacobi_trudi, loop_schur, Partition};
use crate::verify::{Verdict, Witness};

/// One identity check at one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub params: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    fn new(check: &str, params: String, verdict: Verdict) -> Self {
        CheckOutcome {
            check: check.to_string(),
            params,
            holds: verdict.holds,
            witness: verdict.witness,
        }
    }
}

/// Family of generators for the invariance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    E,
    H,
    P,
    Schur,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Family::E),
            "h" => Ok(Family::H),
            "p" => Ok(Family::P),
            "schur" => Ok(Family::Schur),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

fn colors(amb: Ambient) -> impl Iterator<Item = i64> {
    1..=amb.n as i64
}

fn params(amb: Ambient, rest: &str) -> String {
    format!("m={} n={} {rest}", amb.m, amb.n)
}

/// `verify_hma` and `verify_roa` for every `|lambda| <= max_weight` with at
/// most `m` parts and every color.
pub fn alternant_checks(amb: Ambient, max_weight: usize) -> Result<Vec<CheckOutcome>> {
    let alt = Alternants::new(amb)?;
    let mut out = Vec::new();
    for shape in Partition::all_up_to(max_weight, amb.m) {
        let alpha = shift_by_staircase(&shape, amb.m)?;
        for r in colors(amb) {
            let p = params(amb, &format!("shape={shape} r={r}"));
            out.push(CheckOutcome::new("hma", p.clone(), alt.verify_hma(&alpha, r)?));
            out.push(CheckOutcome::new("roa", p, alt.verify_roa(&shape, r)?));
        }
    }
    Ok(out)
}

/// `verify_mn` for every listed shape meeting the hypothesis, every color.
pub fn mn_checks(amb: Ambient, shapes: &[Partition], k: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for shape in shapes {
        if amb.m < shape.length() + k * amb.n {
            continue;
        }
        for r in colors(amb) {
            let p = params(amb, &format!("shape={shape} k={k} r={r}"));
            out.push(CheckOutcome::new("mn", p, verify_mn(amb, shape, k, r, false)?));
        }
    }
    Ok(out)
}

/// How the braid relation is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidMode {
    Symbolic,
    Random { points: usize, seed: u64 },
}

/// The braid relation `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}` for all `i`.
pub fn braid_checks(amb: Ambient, mode: BraidMode) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for i in 1..amb.m.saturating_sub(1) {
        let p = params(amb, &format!("i={i}"));
        let verdict = match mode {
            BraidMode::Symbolic => Verdict::from_bool(braid_holds_symbolically(amb, i)?),
            BraidMode::Random { points, seed } => {
                let (l, r) = braid_words(amb, i)?;
                let res = compare_words_at_random_points(amb, &l, &r, points, seed)?;
                match res.counterexample {
                    None => Verdict::pass(),
                    Some(point) => Verdict::fail(Witness::Point { point }),
                }
            }
        };
        out.push(CheckOutcome::new("braid", p, verdict));
    }
    Ok(out)
}

/// `s_i^2 = 1` for all `i` and `s_i s_j = s_j s_i` for `|i - j| >= 2`.
pub fn involution_commutation_checks(amb: Ambient) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for i in 1..amb.m {
        let p = params(amb, &format!("i={i}"));
        out.push(CheckOutcome::new("involution", p, Verdict::from_bool(involution_holds(amb, i)?)));
    }
    for i in 1..amb.m {
        for j in i + 2..amb.m {
            let p = params(amb, &format!("i={i} j={j}"));
            out.push(CheckOutcome::new(
                "commutation",
                p,
                Verdict::from_bool(commutation_holds(amb, i, j)?),
            ));
        }
    }
    Ok(out)
}

/// The members of a family up to `max_degree`, with their labels.
pub fn family_members(amb: Ambient, family: Family, max_degree: usize) -> Result<Vec<(String, Poly)>> {
    let all = FlowSet::all(amb);
    let mut out = Vec::new();
    match family {
        Family::E => {
            for k in 1..=max_degree.min(amb.m) {
                for r in colors(amb) {
                    out.push((format!("e_{k}^({r})"), loop_e(amb, k, r, &all)));
                }
            }
        }
        Family::H => {
            for k in 1..=max_degree {
                for r in colors(amb) {
                    out.push((format!("h_{k}^({r})"), loop_h(amb, k, r, &all)));
                }
            }
        }
        Family::P => {
            for k in 1..=max_degree.div_ceil(amb.n).max(1) {
                out.push((format!("p_{k}"), power_sum(amb, k)?));
            }
        }
        Family::Schur => {
            for shape in Partition::all_up_to(max_degree, amb.m) {
                if shape.is_empty() {
                    continue;
                }
                for r in colors(amb) {
                    out.push((format!("s_{shape}^({r})"), loop_schur(amb, &shape, r)));
                }
            }
        }
    }
    Ok(out)
}

/// `s_i(f) = f` for every generator `s_i` and every member of the family.
pub fn invariance_checks(amb: Ambient, family: Family, max_degree: usize) -> Result<Vec<CheckOutcome>> {
    let gens: Vec<SubstitutionMap> = (1..amb.m)
        .map(|i| SubstitutionMap::generator(amb, i))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (label, f) in family_members(amb, family, max_degree)? {
        for (i, g) in gens.iter().enumerate() {
            let image = g.apply_poly(&f)?;
            let fr = RatFn::from_poly(&f);
            let verdict = if image.eq_cross(&fr)? {
                Verdict::pass()
            } else {
                Verdict::fail(Witness::Sides { lhs: image, rhs: fr })
            };
            out.push(CheckOutcome::new("invariance", params(amb, &format!("{label} i={}", i + 1)), verdict));
        }
    }
    Ok(out)
}

/// Jacobi-Trudi against the tableau sum for `|lambda| <= max_size`, `l(lambda) <= m`.
pub fn jacobi_trudi_checks(amb: Ambient, max_size: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for shape in Partition::all_up_to(max_size, amb.m) {
        for r in colors(amb) {
            let jt = jacobi_trudi(amb, &shape, r)?;
            let tab = loop_schur(amb, &shape, r);
            let verdict = if jt == tab {
                Verdict::pass()
            } else {
                Verdict::fail(Witness::Difference { difference: &jt - &tab })
            };
            out.push(CheckOutcome::new(
                "jacobi_trudi",
                params(amb, &format!("shape={shape} r={r}")),
                verdict,
            ));
        }
    }
    Ok(out)
}

/// Whirl and curl products against the explicit `e` and `h` formulas.
pub fn band_checks(amb: Ambient, k_max: usize) -> Result<Vec<CheckOutcome>> {
    let size = window_for(amb, k_max);
    let whirl = whirl_product(amb, size)?;
    let curl = curl_product(amb, size)?;
    let all = FlowSet::all(amb);
    let mut out = Vec::new();
    for k in 0..=k_max {
        for r in colors(amb) {
            let e = loop_e(amb, k, r, &all);
            let h = loop_h(amb, k, r, &all);
            let p = params(amb, &format!("k={k} r={r}"));
            out.push(CheckOutcome::new(
                "whirl_e",
                p.clone(),
                Verdict::from_bool(read_generator(&whirl, k, r) == e),
            ));
            out.push(CheckOutcome::new("curl_h", p, Verdict::from_bool(read_generator(&curl, k, r) == h)));
        }
    }
    Ok(out)
}

/// Geometric and rearrangement border-strip enumerations agree.
pub fn strip_duality_checks(max_weight: usize, max_size: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for shape in Partition::all_up_to(max_weight, max_weight) {
        for size in 1..=max_size {
            let holds = add_border_strips_geometric(&shape, size) == add_border_strips_rearrangement(&shape, size, None);
            out.push(CheckOutcome::new(
                "strip_duality",
                format!("shape={shape} size={size}"),
                Verdict::from_bool(holds),
            ));
        }
    }
    out
}

/// Counts for one check name within one ambient.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SummaryRow {
    pub check: String,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub cases: usize,
    pub failures: usize,
}

/// Group outcomes by check name, keeping first-seen order.
pub fn summarize(amb: Option<Ambient>, outcomes: &[CheckOutcome]) -> Vec<SummaryRow> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    for o in outcomes {
        let idx = match rows.iter().position(|r| r.check == o.check) {
            Some(i) => i,
            None => {
                rows.push(SummaryRow {
                    check: o.check.clone(),
                    m: amb.map(|a| a.m),
                    n: amb.map(|a| a.n),
                    cases: 0,
                    failures: 0,
                });
                rows.len() - 1
            }
        };
        rows[idx].cases += 1;
        if !o.holds {
            rows[idx].failures += 1;
        }
    }
    rows
}

/// Every check family for one ambient at the given weight.
pub fn full_sweep(amb: Ambient, max_weight: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let mut out = band_checks(amb, max_weight)?;
    out.extend(jacobi_trudi_checks(amb, max_weight)?);
    for family in [Family::E, Family::H, Family::P, Family::Schur] {
        out.extend(invariance_checks(amb, family, max_weight.min(3))?);
    }
    out.extend(involution_commutation_checks(amb)?);
    let mode = if amb.m <= 3 && amb.n <= 3 {
        BraidMode::Symbolic
    } else {
        BraidMode::Random { points: 20, seed }
    };
    out.extend(braid_checks(amb, mode)?);
    out.extend(alternant_checks(amb, max_weight)?);
    let shapes = Partition::all_up_to(max_weight, amb.m);
    out.extend(mn_checks(amb, &shapes, 1)?);
    Ok(out)
}

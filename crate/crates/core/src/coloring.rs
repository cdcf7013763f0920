//! Biquandle colorings of a Gauss code: homomorphisms from the knot biquandle
//! into a finite biquandle, as element assignments to every semi-arc.

use std::fmt;

use rayon::prelude::*;

use crate::biquandle::Biquandle;
use crate::error::{Error, Result};
use crate::gauss::{Crossing, GaussCode, Sign};
use crate::presentation::{knot_presentation, reduce_presentation, Presentation, Word};

/// Colors of semi-arcs `1..=len`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, semiarc: usize) -> usize {
        self.0[semiarc - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", i + 1, c)?;
        }
        Ok(())
    }
}

pub const MAX_CANDIDATES: u128 = 100_000_000;

/// Checks both relations at every crossing.
pub fn check_coloring(crossings: &[Crossing], t: &Biquandle, c: &Coloring) -> Result<()> {
    for x in crossings {
        let (u, o) = (c.color(x.under_in), c.color(x.over_in));
        let (uo, oo) = match x.sign {
            Sign::Positive => (t.up(u, o), t.down(o, u)),
            Sign::Negative => (t.up_bar(u, o), t.down_bar(o, u)),
        };
        if uo != c.color(x.under_out) || oo != c.color(x.over_out) {
            return Err(Error::InvalidColoring { crossing: x.id });
        }
    }
    Ok(())
}

/// Reduces the knot presentation, tries every assignment of the surviving
/// generators (last generator varying fastest), and completes each solution to
/// all semi-arcs. Sorted lexicographically.
pub fn enumerate_colorings(code: &GaussCode, t: &Biquandle) -> Result<Vec<Coloring>> {
    let pres = knot_presentation(code);
    let reduction = reduce_presentation(&pres);
    let survivors: Vec<u32> = reduction.presentation.generators.iter().copied().collect();
    let relations = &reduction.presentation.relations;
    let n = t.order();
    let n_arcs = code.n_semiarcs();

    let candidates = (n as u128).checked_pow(survivors.len() as u32).unwrap_or(u128::MAX);
    if candidates > MAX_CANDIDATES {
        return Err(Error::SearchTooLarge {
            candidates,
            limit: MAX_CANDIDATES,
        });
    }

    // Split on the first survivor's value; each block runs its own odometer.
    let (head, tail) = match survivors.split_first() {
        Some((h, rest)) => (Some(*h), rest.to_vec()),
        None => (None, Vec::new()),
    };
    let head_values: Vec<usize> = if head.is_some() { (1..=n).collect() } else { vec![0] };
    let mut found: Vec<Coloring> = head_values
        .into_par_iter()
        .flat_map_iter(|hv| {
            let mut out = Vec::new();
            let mut values = vec![0usize; n_arcs + 1];
            if let Some(h) = head {
                values[h as usize] = hv;
            }
            for &g in &tail {
                values[g as usize] = 1;
            }
            loop {
                if relations.iter().all(|r| r.holds_dense(t, &values) == Some(true)) {
                    let mut full = values.clone();
                    reduction
                        .complete(t, &mut full)
                        .expect("eliminated generators are defined by survivors");
                    out.push(Coloring(full[1..].to_vec()));
                }
                // odometer step over the tail, last generator fastest
                let mut i = tail.len();
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    let slot = &mut values[tail[i] as usize];
                    if *slot < n {
                        *slot += 1;
                        break;
                    }
                    *slot = 1;
                }
            }
        })
        .collect();
    found.sort();
    debug_assert!({
        let crossings = code.crossings();
        found.iter().all(|c| check_coloring(&crossings, t, c).is_ok())
    });
    Ok(found)
}

/// Depth-first fill-and-propagate over the unreduced presentation.
pub fn enumerate_colorings_oracle(code: &GaussCode, t: &Biquandle) -> Vec<Coloring> {
    let pres = knot_presentation(code);
    let mut values = vec![0usize; code.n_semiarcs() + 1];
    let mut out = Vec::new();
    dfs(&pres, t, &mut values, &mut out);
    out.sort();
    out
}

/// Fills every value forced by a relation with one known side and a lone
/// unassigned generator on the other. `false` on contradiction.
fn propagate(pres: &Presentation, t: &Biquandle, values: &mut [usize]) -> bool {
    loop {
        let mut changed = false;
        for r in &pres.relations {
            let l = r.lhs.eval_dense(t, values);
            let rv = r.rhs.eval_dense(t, values);
            match (l, rv) {
                (Some(a), Some(b)) if a != b => return false,
                (Some(a), None) => {
                    if let Word::Gen(g) = r.rhs {
                        values[g as usize] = a;
                        changed = true;
                    }
                }
                (None, Some(b)) => {
                    if let Word::Gen(g) = r.lhs {
                        values[g as usize] = b;
                        changed = true;
                    }
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn dfs(pres: &Presentation, t: &Biquandle, values: &mut Vec<usize>, out: &mut Vec<Coloring>) {
    let saved = values.clone();
    if !propagate(pres, t, values) {
        *values = saved;
        return;
    }
    match (1..values.len()).find(|&g| values[g] == 0) {
        None => out.push(Coloring(values[1..].to_vec())),
        Some(g) => {
            for v in 1..=t.order() {
                values[g] = v;
                dfs(pres, t, values, out);
                values[g] = 0;
            }
        }
    }
    *values = saved;
}

pub fn counting_invariant(code: &GaussCode, t: &Biquandle) -> Result<usize> {
    Ok(enumerate_colorings(code, t)?.len())
}

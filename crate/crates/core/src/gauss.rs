//! Signed Gauss codes of oriented virtual links.
//!
//! Text form: comma separated tokens, `X` / `-X` for the over / under passage
//! of a positive crossing `X`, `X+I` / `-X-I` for a negative one, and `0`
//! closing a component. A lone `0` is an unknotted component without crossings.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Over => "OVER",
            Role::Under => "UNDER",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl GaussEntry {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        GaussEntry {
            crossing,
            role,
            sign,
        }
    }
}

impl fmt::Display for GaussEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.crossing;
        match (self.role, self.sign) {
            (Role::Over, Sign::Positive) => write!(f, "{c}"),
            (Role::Under, Sign::Positive) => write!(f, "-{c}"),
            (Role::Over, Sign::Negative) => write!(f, "{c}+I"),
            (Role::Under, Sign::Negative) => write!(f, "-{c}-I"),
        }
    }
}

/// A validated signed Gauss code with crossings numbered `1..=n_crossings`
/// in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    components: Vec<Vec<GaussEntry>>,
    n_crossings: usize,
    renaming: Vec<(u32, u32)>,
}

/// One crossing with the semi-arcs meeting it. Semi-arc `k` ends at entry `k`
/// of the traversal; the semi-arc leaving entry `k` is its cyclic successor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

impl GaussCode {
    /// Validates the components and renumbers crossings in first-occurrence order.
    pub fn new(components: Vec<Vec<GaussEntry>>) -> Result<Self> {
        let mut seen: BTreeMap<u32, Vec<GaussEntry>> = BTreeMap::new();
        let mut order: Vec<u32> = Vec::new();
        for e in components.iter().flatten() {
            if e.crossing == 0 {
                return Err(Error::InvalidArgument("crossing ids must be positive".into()));
            }
            let occ = seen.entry(e.crossing).or_default();
            if occ.is_empty() {
                order.push(e.crossing);
            }
            occ.push(*e);
        }
        for (&crossing, occ) in &seen {
            match occ.as_slice() {
                [only] => {
                    return Err(Error::MissingRole {
                        crossing,
                        missing: only.role.other(),
                    })
                }
                [a, b] => {
                    if a.role == b.role {
                        return Err(Error::MissingRole {
                            crossing,
                            missing: a.role.other(),
                        });
                    }
                    if a.sign != b.sign {
                        return Err(Error::SignMismatch { crossing });
                    }
                }
                _ => {
                    return Err(Error::CrossingMultiplicity {
                        crossing,
                        count: occ.len(),
                    })
                }
            }
        }
        let map: BTreeMap<u32, u32> = order
            .iter()
            .enumerate()
            .map(|(i, &old)| (old, i as u32 + 1))
            .collect();
        let components = components
            .into_iter()
            .map(|comp| {
                comp.into_iter()
                    .map(|e| GaussEntry {
                        crossing: map[&e.crossing],
                        ..e
                    })
                    .collect()
            })
            .collect();
        let renaming = order
            .iter()
            .enumerate()
            .map(|(i, &old)| (old, i as u32 + 1))
            .collect();
        Ok(GaussCode {
            components,
            n_crossings: order.len(),
            renaming,
        })
    }

    pub fn components(&self) -> &[Vec<GaussEntry>] {
        &self.components
    }

    pub fn n_crossings(&self) -> usize {
        self.n_crossings
    }

    /// `(id in input, id used here)` pairs, sorted by the new id.
    pub fn renaming(&self) -> &[(u32, u32)] {
        &self.renaming
    }

    /// Number of semi-arcs: one per entry, and one for each crossingless component.
    pub fn n_semiarcs(&self) -> usize {
        self.components.iter().map(|c| c.len().max(1)).sum()
    }

    /// The `(incoming, outgoing)` semi-arcs of every entry, component by component.
    pub fn entry_semiarcs(&self) -> Vec<Vec<(usize, usize)>> {
        let mut next = 1;
        let mut out = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            let len = comp.len();
            let start = next;
            out.push(
                (0..len)
                    .map(|i| (start + i, start + (i + 1) % len))
                    .collect(),
            );
            next += len.max(1);
        }
        out
    }

    pub fn crossings(&self) -> Vec<Crossing> {
        let mut slots: Vec<Crossing> = (1..=self.n_crossings as u32)
            .map(|id| Crossing {
                id,
                sign: Sign::Positive,
                under_in: 0,
                over_in: 0,
                under_out: 0,
                over_out: 0,
            })
            .collect();
        for (comp, arcs) in self.components.iter().zip(self.entry_semiarcs()) {
            for (e, (arc_in, arc_out)) in comp.iter().zip(arcs) {
                let c = &mut slots[e.crossing as usize - 1];
                c.sign = e.sign;
                match e.role {
                    Role::Over => {
                        c.over_in = arc_in;
                        c.over_out = arc_out;
                    }
                    Role::Under => {
                        c.under_in = arc_in;
                        c.under_out = arc_out;
                    }
                }
            }
        }
        slots
    }

    /// Moves the base point of `component` forward by `by` entries.
    pub fn rotate_component(&self, component: usize, by: usize) -> Result<GaussCode> {
        let mut comps = self.components.clone();
        let comp = comps
            .get_mut(component)
            .ok_or_else(|| Error::InvalidSite(format!("no component {component}")))?;
        if !comp.is_empty() {
            let k = by % comp.len();
            comp.rotate_left(k);
        }
        GaussCode::new(comps)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for comp in &self.components {
            for e in comp {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
            if !first {
                f.write_str(",")?;
            }
            f.write_str("0")?;
            first = false;
        }
        Ok(())
    }
}

impl std::str::FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_code(s)
    }
}

fn parse_token(tok: &str, position: usize) -> Result<Option<GaussEntry>> {
    let malformed = || Error::MalformedToken {
        token: tok.to_string(),
        position,
    };
    if tok == "0" {
        return Ok(None);
    }
    let (negative, rest) = match tok.as_bytes().first() {
        Some(b'-') => (true, &tok[1..]),
        Some(b'+') => (false, &tok[1..]),
        _ => (false, tok),
    };
    let digits_end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let (digits, suffix) = rest.split_at(digits_end);
    let crossing: u32 = digits.parse().map_err(|_| malformed())?;
    if crossing == 0 {
        return Err(malformed());
    }
    // +(X+i) over, -(X+i) under; the imaginary sign must follow the real one.
    let sign = match (suffix, negative) {
        ("", _) => Sign::Positive,
        ("+I" | "+i", false) | ("-I" | "-i", true) => Sign::Negative,
        _ => return Err(malformed()),
    };
    let role = if negative { Role::Under } else { Role::Over };
    Ok(Some(GaussEntry::new(crossing, role, sign)))
}

/// Parses and validates a signed Gauss code. Lines starting with `#` are
/// comments; surrounding brackets are allowed; a missing final `0` is tolerated.
pub fn parse_gauss_code(text: &str) -> Result<GaussCode> {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(&body);
    let mut tokens: Vec<&str> = body.split(',').collect();
    if tokens.last() == Some(&"") {
        tokens.pop();
    }
    if tokens.is_empty() {
        return Err(Error::MalformedToken {
            token: String::new(),
            position: 1,
        });
    }
    let mut components = Vec::new();
    let mut current = Vec::new();
    for (i, tok) in tokens.iter().enumerate() {
        match parse_token(tok, i + 1)? {
            Some(e) => current.push(e),
            None => components.push(std::mem::take(&mut current)),
        }
    }
    if !current.is_empty() {
        components.push(current);
    }
    GaussCode::new(components)
}

/// Insertion point: before entry `position` (`0..=len`) of `component`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub component: usize,
    pub position: usize,
}

impl Site {
    pub fn new(component: usize, position: usize) -> Self {
        Site {
            component,
            position,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RMove {
    /// A kink: both passages of one new crossing, adjacent.
    R1 {
        site: Site,
        sign: Sign,
        over_first: bool,
    },
    /// Two new crossings of opposite sign; the strand at `over` passes over
    /// both, the strand at `under` passes under both. `antiparallel` reverses
    /// the order in which the under strand meets them.
    R2 {
        over: Site,
        under: Site,
        first_sign: Sign,
        antiparallel: bool,
    },
}

fn check_site(code: &GaussCode, site: Site) -> Result<()> {
    let comp = code
        .components
        .get(site.component)
        .ok_or_else(|| Error::InvalidSite(format!("no component {}", site.component)))?;
    if site.position > comp.len() {
        return Err(Error::InvalidSite(format!(
            "position {} beyond component {} of length {}",
            site.position,
            site.component,
            comp.len()
        )));
    }
    Ok(())
}

/// Applies one Reidemeister move that adds crossings. The result is renumbered canonically.
pub fn insert_r_move(code: &GaussCode, mv: &RMove) -> Result<GaussCode> {
    let k = code.n_crossings as u32 + 1;
    let mut comps = code.components.clone();
    match *mv {
        RMove::R1 {
            site,
            sign,
            over_first,
        } => {
            check_site(code, site)?;
            let (r1, r2) = if over_first {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            comps[site.component].splice(
                site.position..site.position,
                [GaussEntry::new(k, r1, sign), GaussEntry::new(k, r2, sign)],
            );
        }
        RMove::R2 {
            over,
            under,
            first_sign,
            antiparallel,
        } => {
            check_site(code, over)?;
            check_site(code, under)?;
            let m = k + 1;
            let second_sign = first_sign.flip();
            let over_pair = [
                GaussEntry::new(k, Role::Over, first_sign),
                GaussEntry::new(m, Role::Over, second_sign),
            ];
            let mut under_pair = [
                GaussEntry::new(k, Role::Under, first_sign),
                GaussEntry::new(m, Role::Under, second_sign),
            ];
            if antiparallel {
                under_pair.swap(0, 1);
            }
            // Insert at the later site first so the earlier index stays valid.
            let over_later = (over.component, over.position) > (under.component, under.position);
            if over_later {
                comps[over.component].splice(over.position..over.position, over_pair);
                comps[under.component].splice(under.position..under.position, under_pair);
            } else {
                comps[under.component].splice(under.position..under.position, under_pair);
                comps[over.component].splice(over.position..over.position, over_pair);
            }
        }
    }
    GaussCode::new(comps)
}

//! Knot biquandle presentations: one generator per semi-arc, two relations per
//! crossing, and reduction by eliminating generators that a relation defines.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::biquandle::{Biquandle, OpKind};
use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Role, Sign};

/// A biquandle word: a generator, or `left op right` (for instance `a^b`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Word {
    Gen(u32),
    Node(OpKind, Box<Word>, Box<Word>),
}

impl Word {
    pub fn node(k: OpKind, left: Word, right: Word) -> Word {
        Word::Node(k, Box::new(left), Box::new(right))
    }

    /// Number of nodes including generator leaves.
    pub fn size(&self) -> usize {
        match self {
            Word::Gen(_) => 1,
            Word::Node(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn contains(&self, g: u32) -> bool {
        match self {
            Word::Gen(h) => *h == g,
            Word::Node(_, l, r) => l.contains(g) || r.contains(g),
        }
    }

    pub fn as_gen(&self) -> Option<u32> {
        match self {
            Word::Gen(g) => Some(*g),
            Word::Node(..) => None,
        }
    }

    /// Count of occurrences of `g`.
    fn occurrences(&self, g: u32) -> usize {
        match self {
            Word::Gen(h) => usize::from(*h == g),
            Word::Node(_, l, r) => l.occurrences(g) + r.occurrences(g),
        }
    }

    pub fn substitute(&self, g: u32, replacement: &Word) -> Word {
        match self {
            Word::Gen(h) if *h == g => replacement.clone(),
            Word::Gen(_) => self.clone(),
            Word::Node(k, l, r) => Word::node(
                *k,
                l.substitute(g, replacement),
                r.substitute(g, replacement),
            ),
        }
    }

    pub fn collect_generators(&self, out: &mut BTreeSet<u32>) {
        match self {
            Word::Gen(g) => {
                out.insert(*g);
            }
            Word::Node(_, l, r) => {
                l.collect_generators(out);
                r.collect_generators(out);
            }
        }
    }

    /// Evaluation against values indexed by generator id, 0 meaning unassigned.
    pub(crate) fn eval_dense(&self, t: &Biquandle, values: &[usize]) -> Option<usize> {
        match self {
            Word::Gen(g) => match values.get(*g as usize).copied() {
                Some(0) | None => None,
                Some(v) => Some(v),
            },
            Word::Node(k, l, r) => {
                let l = l.eval_dense(t, values)?;
                let r = r.eval_dense(t, values)?;
                Some(t.op(*k, l, r))
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(g) => write!(f, "{g}"),
            Word::Node(k, l, r) => {
                match **l {
                    Word::Gen(_) => write!(f, "{l}")?,
                    Word::Node(..) => write!(f, "({l})")?,
                }
                f.write_str(k.symbol())?;
                match **r {
                    Word::Gen(_) => write!(f, "{r}"),
                    Word::Node(..) => write!(f, "({r})"),
                }
            }
        }
    }
}

/// Recursive table lookup. Fails if a generator of `w` is missing from `assignment`.
pub fn eval_word(w: &Word, t: &Biquandle, assignment: &BTreeMap<u32, usize>) -> Result<usize> {
    match w {
        Word::Gen(g) => {
            let v = *assignment.get(g).ok_or(Error::UnassignedGenerator(*g))?;
            if v == 0 || v > t.order() {
                return Err(Error::ElementOutOfRange {
                    value: v,
                    n: t.order(),
                });
            }
            Ok(v)
        }
        Word::Node(k, l, r) => {
            let l = eval_word(l, t, assignment)?;
            let r = eval_word(r, t, assignment)?;
            t.apply_op(*k, l, r)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    fn size(&self) -> usize {
        self.lhs.size() + self.rhs.size()
    }

    /// A generator standing alone on one side and absent from the other.
    fn isolated_generator(&self) -> Option<u32> {
        let lone = |side: &Word, other: &Word| side.as_gen().filter(|&g| !other.contains(g));
        match (lone(&self.rhs, &self.lhs), lone(&self.lhs, &self.rhs)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    /// The word the isolated generator `g` equals.
    fn definition_of(&self, g: u32) -> &Word {
        if self.rhs.as_gen() == Some(g) && !self.lhs.contains(g) {
            &self.lhs
        } else {
            &self.rhs
        }
    }

    pub(crate) fn holds_dense(&self, t: &Biquandle, values: &[usize]) -> Option<bool> {
        Some(self.lhs.eval_dense(t, values)? == self.rhs.eval_dense(t, values)?)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: BTreeSet<u32>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn total_size(&self) -> usize {
        self.relations.iter().map(Relation::size).sum()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// One relation per crossing passage, in traversal order. A positive crossing
/// gives `under_in^over_in = under_out` and `over_in_under_in = over_out`; a
/// negative one uses the barred operations.
pub fn knot_presentation(code: &GaussCode) -> Presentation {
    let crossings = code.crossings();
    let generators = (1..=code.n_semiarcs() as u32).collect();
    let mut relations = Vec::with_capacity(2 * crossings.len());
    for comp in code.components() {
        for e in comp {
            let c = &crossings[e.crossing as usize - 1];
            let (up, down) = match c.sign {
                Sign::Positive => (OpKind::Up, OpKind::Down),
                Sign::Negative => (OpKind::UpBar, OpKind::DownBar),
            };
            let gen = |s: usize| Word::Gen(s as u32);
            relations.push(match e.role {
                Role::Under => Relation::new(
                    Word::node(up, gen(c.under_in), gen(c.over_in)),
                    gen(c.under_out),
                ),
                Role::Over => Relation::new(
                    Word::node(down, gen(c.over_in), gen(c.under_in)),
                    gen(c.over_out),
                ),
            });
        }
    }
    Presentation {
        generators,
        relations,
    }
}

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub presentation: Presentation,
    /// `(generator, word it was replaced by)` in elimination order.
    pub eliminated: Vec<(u32, Word)>,
    /// Reduction stopped early because the node cap would have been exceeded.
    pub truncated: bool,
}

impl Reduction {
    /// Extends values of the surviving generators to all generators, replaying
    /// eliminations last to first. `values` is indexed by generator id.
    pub fn complete(&self, t: &Biquandle, values: &mut [usize]) -> Option<()> {
        for (g, w) in self.eliminated.iter().rev() {
            values[*g as usize] = w.eval_dense(t, values)?;
        }
        Some(())
    }
}

pub fn reduce_presentation(pres: &Presentation) -> Reduction {
    reduce_presentation_with_cap(pres, DEFAULT_NODE_CAP)
}

/// Repeatedly eliminates the first relation, in list order, whose isolated
/// generator does not occur on its other side.
pub fn reduce_presentation_with_cap(pres: &Presentation, node_cap: usize) -> Reduction {
    let mut p = pres.clone();
    let mut eliminated = Vec::new();
    let mut truncated = false;
    loop {
        let pick = p
            .relations
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.isolated_generator().map(|g| (g, i)));
        let Some((g, idx)) = pick else { break };
        let rel = p.relations.remove(idx);
        let word = rel.definition_of(g).clone();

        let growth: usize = p
            .relations
            .iter()
            .map(|r| (r.lhs.occurrences(g) + r.rhs.occurrences(g)) * (word.size() - 1))
            .sum();
        if p.total_size() + growth > node_cap {
            p.relations.insert(idx, rel);
            truncated = true;
            break;
        }
        for r in &mut p.relations {
            if r.lhs.contains(g) {
                r.lhs = r.lhs.substitute(g, &word);
            }
            if r.rhs.contains(g) {
                r.rhs = r.rhs.substitute(g, &word);
            }
        }
        p.generators.remove(&g);
        eliminated.push((g, word));
    }
    Reduction {
        presentation: p,
        eliminated,
        truncated,
    }
}

//! Enumeration of all biquandle structures on `{1..n}` by fill-and-propagate
//! backtracking over partial tables.
//!
//! Propagation and rating use the equational axioms (1 and 3) instantiated at
//! every variable assignment; the existence axioms are checked on complete
//! tables only.

use rayon::prelude::*;

use crate::biquandle::{equational_axioms, write_biquandle, AxiomEquation, Biquandle, BlockConvention, OpKind, Tables};
use crate::error::{Error, Result};
use crate::presentation::Word;

pub const DEFAULT_ORDER_LIMIT: usize = 4;

/// A table cell `k(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub op: OpKind,
    pub row: usize,
    pub col: usize,
}

/// Four `n×n` tables with entries in `0..=n`, 0 meaning blank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBiquandle {
    n: usize,
    tables: Tables,
}

impl PartialBiquandle {
    pub fn blank(n: usize) -> Self {
        PartialBiquandle {
            n,
            tables: std::array::from_fn(|_| vec![0; n * n]),
        }
    }

    pub fn from_biquandle(b: &Biquandle) -> Self {
        PartialBiquandle {
            n: b.order(),
            tables: b.tables().clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: Cell) -> usize {
        self.tables[c.op.index()][(c.row - 1) * self.n + (c.col - 1)]
    }

    pub fn set(&mut self, c: Cell, v: usize) {
        self.tables[c.op.index()][(c.row - 1) * self.n + (c.col - 1)] = v;
    }

    /// Cells in (table, row, column) order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        OpKind::ALL.into_iter().flat_map(move |op| {
            (1..=self.n).flat_map(move |row| (1..=self.n).map(move |col| Cell { op, row, col }))
        })
    }

    pub fn blanks(&self) -> Vec<Cell> {
        self.cells().filter(|&c| self.get(c) == 0).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.tables.iter().all(|t| t.iter().all(|&v| v != 0))
    }

    pub fn to_biquandle(&self) -> Option<Biquandle> {
        if !self.is_complete() {
            return None;
        }
        Biquandle::from_tables(self.n, self.tables.clone()).ok()
    }
}

/// One axiom equation at one variable assignment.
#[derive(Debug, Clone, Copy)]
struct Instance {
    eq: &'static AxiomEquation,
    vars: [usize; 3],
}

fn instances(n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for eq in equational_axioms() {
        let count = n.pow(eq.arity as u32);
        for code in 0..count {
            let mut vars = [1usize; 3];
            let mut rest = code;
            for slot in vars.iter_mut().take(eq.arity).rev() {
                *slot = rest % n + 1;
                rest /= n;
            }
            out.push(Instance { eq, vars });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Eval {
    Known(usize),
    /// Both arguments known, the lookup itself is blank.
    Blocked(Cell),
    Unknown,
}

fn eval(w: &Word, p: &PartialBiquandle, vars: &[usize; 3]) -> Eval {
    match w {
        Word::Gen(g) => Eval::Known(vars[*g as usize - 1]),
        Word::Node(op, l, r) => match (eval(l, p, vars), eval(r, p, vars)) {
            (Eval::Known(a), Eval::Known(b)) => {
                let c = Cell { op: *op, row: a, col: b };
                match p.get(c) {
                    0 => Eval::Blocked(c),
                    v => Eval::Known(v),
                }
            }
            _ => Eval::Unknown,
        },
    }
}

/// Blank lookups whose arguments are already known.
fn blocked_cells(w: &Word, p: &PartialBiquandle, vars: &[usize; 3], out: &mut Vec<Cell>) -> Option<usize> {
    match w {
        Word::Gen(g) => Some(vars[*g as usize - 1]),
        Word::Node(op, l, r) => {
            let a = blocked_cells(l, p, vars, out);
            let b = blocked_cells(r, p, vars, out);
            let c = Cell {
                op: *op,
                row: a?,
                col: b?,
            };
            match p.get(c) {
                0 => {
                    out.push(c);
                    None
                }
                v => Some(v),
            }
        }
    }
}

#[cfg(test)]
fn is_evaluable(inst: &Instance, p: &PartialBiquandle) -> bool {
    matches!(eval(&inst.eq.lhs, p, &inst.vars), Eval::Known(_))
        && matches!(eval(&inst.eq.rhs, p, &inst.vars), Eval::Known(_))
}

/// Fills forced cells to a fixpoint; `None` on contradiction. A cell is
/// forced when it is the outermost lookup of one side and the other side is
/// known.
pub fn propagate(p: &PartialBiquandle) -> Option<PartialBiquandle> {
    let insts = instances(p.n);
    let mut p = p.clone();
    propagate_in_place(&mut p, &insts).then_some(p)
}

fn propagate_in_place(p: &mut PartialBiquandle, insts: &[Instance]) -> bool {
    loop {
        let mut changed = false;
        for inst in insts {
            let l = eval(&inst.eq.lhs, p, &inst.vars);
            let r = eval(&inst.eq.rhs, p, &inst.vars);
            match (l, r) {
                (Eval::Known(a), Eval::Known(b)) if a != b => return false,
                (Eval::Blocked(c), Eval::Known(v)) | (Eval::Known(v), Eval::Blocked(c)) => {
                    p.set(c, v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Number of not yet evaluable instances that become evaluable whatever value
/// `cell` receives.
pub fn rate_zero(p: &PartialBiquandle, cell: Cell) -> Result<usize> {
    if p.get(cell) != 0 {
        return Err(Error::CellNotBlank);
    }
    Ok(scan(p, &instances(p.n)).into_iter().find(|b| b.cell == cell).map_or(0, |b| b.rating))
}

/// Bitmask of the values filled in column `col` of table `op`.
fn column_values(p: &PartialBiquandle, op: OpKind, col: usize) -> u32 {
    (1..=p.n).fold(0, |m, row| m | (1 << p.get(Cell { op, row, col })) & !1)
}

/// Axiom 2 makes every `x -> x∘b` onto, so each column of each table is a
/// permutation; a repeated value in a column rules the branch out.
fn columns_are_injective(p: &PartialBiquandle) -> bool {
    OpKind::ALL.into_iter().all(|op| {
        (1..=p.n).all(|col| {
            let mut seen = 0u32;
            (1..=p.n).all(|row| match p.get(Cell { op, row, col }) {
                0 => true,
                v if seen & (1 << v) != 0 => false,
                v => {
                    seen |= 1 << v;
                    true
                }
            })
        })
    })
}

#[derive(Debug, Clone, Copy)]
struct BlankInfo {
    cell: Cell,
    rating: usize,
    /// Bit `v` set while filling `v` contradicts no instance this cell completes.
    allowed: u32,
}

/// Ratings and one-step lookahead for every blank cell, in cell order. Only an
/// instance whose sole blocked lookup is `c` can be completed by filling `c`;
/// values that complete such an instance falsely are ruled out.
fn scan(p: &PartialBiquandle, insts: &[Instance]) -> Vec<BlankInfo> {
    let all = ((1u32 << p.n) - 1) << 1;
    let mut info: Vec<BlankInfo> = p
        .blanks()
        .into_iter()
        .map(|cell| BlankInfo {
            cell,
            rating: 0,
            allowed: all,
        })
        .collect();
    for b in &mut info {
        b.allowed &= !column_values(p, b.cell.op, b.cell.col);
    }
    let mut scratch = p.clone();
    let mut blocked = Vec::new();
    for inst in insts {
        blocked.clear();
        let l = blocked_cells(&inst.eq.lhs, p, &inst.vars, &mut blocked);
        let r = blocked_cells(&inst.eq.rhs, p, &inst.vars, &mut blocked);
        if l.is_some() && r.is_some() {
            continue;
        }
        blocked.sort_unstable();
        blocked.dedup();
        let [c] = blocked[..] else { continue };
        let i = info.binary_search_by(|b| b.cell.cmp(&c)).expect("blocked cells are blank");
        let mut completes = true;
        for v in 1..=p.n {
            scratch.set(c, v);
            match (eval(&inst.eq.lhs, &scratch, &inst.vars), eval(&inst.eq.rhs, &scratch, &inst.vars)) {
                (Eval::Known(x), Eval::Known(y)) => {
                    if x != y {
                        info[i].allowed &= !(1 << v);
                    }
                }
                _ => completes = false,
            }
        }
        scratch.set(c, 0);
        if completes {
            info[i].rating += 1;
        }
    }
    info
}

/// Every biquandle on `{1..n}`, sorted by serialized tables.
pub fn enumerate_biquandles(n: usize) -> Result<Vec<Biquandle>> {
    enumerate_biquandles_with_limit(n, DEFAULT_ORDER_LIMIT)
}

pub fn enumerate_biquandles_with_limit(n: usize, limit: usize) -> Result<Vec<Biquandle>> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > limit {
        return Err(Error::OrderTooLarge { n, limit });
    }
    let insts = instances(n);
    let mut found = search(PartialBiquandle::blank(n), &insts, 0);
    found.sort_by_cached_key(|b| write_biquandle(b, BlockConvention::Definition));
    Ok(found)
}

/// Subtrees above this depth are explored in parallel.
const PARALLEL_DEPTH: usize = 2;

fn search(mut p: PartialBiquandle, insts: &[Instance], depth: usize) -> Vec<Biquandle> {
    // propagate, then fill cells left with a single allowed value, to a fixpoint
    let info = loop {
        if !propagate_in_place(&mut p, insts) || !columns_are_injective(&p) {
            return Vec::new();
        }
        let info = scan(&p, insts);
        if info.iter().any(|b| b.allowed == 0) {
            return Vec::new();
        }
        let mut forced = false;
        for b in info.iter().filter(|b| b.allowed.count_ones() == 1) {
            p.set(b.cell, b.allowed.trailing_zeros() as usize);
            forced = true;
        }
        if !forced {
            break info;
        }
    };
    // maximal rating, ties to the first cell in (table, row, column) order
    let Some(pick) = info.iter().fold(None, |best: Option<&BlankInfo>, b| match best {
        Some(x) if x.rating >= b.rating => best,
        _ => Some(b),
    }) else {
        return p.to_biquandle().filter(|b| b.is_valid()).into_iter().collect();
    };
    let (cell, allowed) = (pick.cell, pick.allowed);
    let values: Vec<usize> = (1..=p.n).filter(|v| allowed & (1 << v) != 0).collect();
    let branch = |&v: &usize| {
        let mut child = p.clone();
        child.set(cell, v);
        search(child, insts, depth + 1)
    };
    if depth < PARALLEL_DEPTH {
        values.par_iter().flat_map_iter(branch).collect()
    } else {
        values.iter().flat_map(branch).collect()
    }
}

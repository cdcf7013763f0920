//! Finite biquandles stored as four operation tables on `{1..n}`.
//!
//! Element `a` operated on by `b` is written `a^b` (UP), `a_b` (DOWN),
//! `a^-b` (UPBAR) and `a_-b` (DOWNBAR). The switch map is
//! `S(a,b) = (b_a, a^b)`.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::presentation::Word;

/// The four biquandle operations in their canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpKind {
    Up,
    Down,
    UpBar,
    DownBar,
}

impl OpKind {
    pub const ALL: [OpKind; 4] = [OpKind::Up, OpKind::Down, OpKind::UpBar, OpKind::DownBar];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Infix symbol used by the presentation printer.
    pub fn symbol(self) -> &'static str {
        match self {
            OpKind::Up => "^",
            OpKind::Down => "_",
            OpKind::UpBar => "^-",
            OpKind::DownBar => "_-",
        }
    }
}

/// How the four `n x n` blocks of a `2n x 2n` biquandle matrix map onto operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockConvention {
    /// `[a^-b | a^b ; a_-b | a_b]`, the block matrix definition.
    #[default]
    Definition,
    /// `[a^b | a_b ; a^-b | a_-b]`, the order in which relation lists name the tables.
    Listing,
}

impl BlockConvention {
    /// The operation stored in block `1..=4` (row-major over the 2x2 block grid).
    fn blocks(self) -> [OpKind; 4] {
        match self {
            BlockConvention::Definition => {
                [OpKind::UpBar, OpKind::Up, OpKind::DownBar, OpKind::Down]
            }
            BlockConvention::Listing => [OpKind::Up, OpKind::Down, OpKind::UpBar, OpKind::DownBar],
        }
    }
}

impl std::str::FromStr for BlockConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(BlockConvention::Definition),
            "listing" => Ok(BlockConvention::Listing),
            other => Err(Error::InvalidArgument(format!(
                "unknown block convention {other:?} (expected definition or listing)"
            ))),
        }
    }
}

/// Tables indexed `[op][(a-1)*n + (b-1)]`, entries in `1..=n`.
pub type Tables = [Vec<usize>; 4];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biquandle {
    n: usize,
    tables: Tables,
    valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|e| e.to_string()).collect();
        write!(f, "axiom {} fails at ({})", self.axiom, w.join(","))
    }
}

/// Result of checking every axiom instance. At most [`MAX_REPORTED_FAILURES`]
/// failures are kept; `total_failures` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<AxiomFailure>,
    pub total_failures: usize,
}

pub const MAX_REPORTED_FAILURES: usize = 100;

/// Solutions of the existence half of axiom 4, one list entry per witness.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KinkWitnesses {
    /// `(a, x)` with `x = a_x` and `a = x^a`.
    pub positive: Vec<(usize, usize)>,
    /// `(a, y)` with `y = a^-y` and `a = y_-a`.
    pub negative: Vec<(usize, usize)>,
}

/// An axiom equation `lhs = rhs` in the variables `a=1, b=2, c=3`.
#[derive(Debug, Clone)]
pub struct AxiomEquation {
    pub id: &'static str,
    pub arity: usize,
    pub lhs: Word,
    pub rhs: Word,
}

/// Axioms 1 (i)-(iv) and 3 (i)-(vi) as word equations.
pub fn equational_axioms() -> &'static [AxiomEquation] {
    static AXIOMS: OnceLock<Vec<AxiomEquation>> = OnceLock::new();
    AXIOMS.get_or_init(|| {
        use OpKind::*;
        let v = Word::Gen;
        let op = |k: OpKind, l: Word, r: Word| Word::node(k, l, r);
        let (a, b, c) = (v(1), v(2), v(3));
        let eq = |id, arity, lhs, rhs| AxiomEquation {
            id,
            arity,
            lhs,
            rhs,
        };
        vec![
            // (a^b)^-(b_a) = a
            eq(
                "1.i",
                2,
                op(UpBar, op(Up, a.clone(), b.clone()), op(Down, b.clone(), a.clone())),
                a.clone(),
            ),
            // (b_a)_-(a^b) = b
            eq(
                "1.ii",
                2,
                op(DownBar, op(Down, b.clone(), a.clone()), op(Up, a.clone(), b.clone())),
                b.clone(),
            ),
            // (a^-b)^(b_-a) = a
            eq(
                "1.iii",
                2,
                op(Up, op(UpBar, a.clone(), b.clone()), op(DownBar, b.clone(), a.clone())),
                a.clone(),
            ),
            // (b_-a)_(a^-b) = b
            eq(
                "1.iv",
                2,
                op(Down, op(DownBar, b.clone(), a.clone()), op(UpBar, a.clone(), b.clone())),
                b.clone(),
            ),
            // a^{bc} = a^{c_b b^c}
            eq(
                "3.i",
                3,
                op(Up, op(Up, a.clone(), b.clone()), c.clone()),
                op(
                    Up,
                    op(Up, a.clone(), op(Down, c.clone(), b.clone())),
                    op(Up, b.clone(), c.clone()),
                ),
            ),
            // c_{ba} = c_{a^b b_a}
            eq(
                "3.ii",
                3,
                op(Down, op(Down, c.clone(), b.clone()), a.clone()),
                op(
                    Down,
                    op(Down, c.clone(), op(Up, a.clone(), b.clone())),
                    op(Down, b.clone(), a.clone()),
                ),
            ),
            // (b_a)^{c_{a^b}} = (b^c)_{a^{c_b}}
            eq(
                "3.iii",
                3,
                op(
                    Up,
                    op(Down, b.clone(), a.clone()),
                    op(Down, c.clone(), op(Up, a.clone(), b.clone())),
                ),
                op(
                    Down,
                    op(Up, b.clone(), c.clone()),
                    op(Up, a.clone(), op(Down, c.clone(), b.clone())),
                ),
            ),
            eq(
                "3.iv",
                3,
                op(UpBar, op(UpBar, a.clone(), b.clone()), c.clone()),
                op(
                    UpBar,
                    op(UpBar, a.clone(), op(DownBar, c.clone(), b.clone())),
                    op(UpBar, b.clone(), c.clone()),
                ),
            ),
            eq(
                "3.v",
                3,
                op(DownBar, op(DownBar, c.clone(), b.clone()), a.clone()),
                op(
                    DownBar,
                    op(DownBar, c.clone(), op(UpBar, a.clone(), b.clone())),
                    op(DownBar, b.clone(), a.clone()),
                ),
            ),
            eq(
                "3.vi",
                3,
                op(
                    UpBar,
                    op(DownBar, b.clone(), a.clone()),
                    op(DownBar, c.clone(), op(UpBar, a.clone(), b.clone())),
                ),
                op(
                    DownBar,
                    op(UpBar, b.clone(), c.clone()),
                    op(UpBar, a.clone(), op(DownBar, c.clone(), b.clone())),
                ),
            ),
        ]
    })
}

fn check_entries(n: usize, tables: &Tables) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("biquandle order must be positive".into()));
    }
    for t in tables {
        if t.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: t.len(),
            });
        }
        if let Some(&value) = t.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::ElementOutOfRange { value, n });
        }
    }
    Ok(())
}

impl Biquandle {
    /// Wraps four tables. Entries must lie in `1..=n`; the axioms are checked
    /// and the outcome is available from [`Biquandle::is_valid`].
    pub fn from_tables(n: usize, tables: Tables) -> Result<Self> {
        check_entries(n, &tables)?;
        let mut bq = Biquandle {
            n,
            tables,
            valid: false,
        };
        bq.valid = bq.validate().ok;
        Ok(bq)
    }

    /// Like [`Biquandle::from_tables`] but rejects tables failing any axiom.
    pub fn new(n: usize, tables: Tables) -> Result<Self> {
        let bq = Self::from_tables(n, tables)?;
        if !bq.valid {
            let report = bq.validate();
            let first = report
                .failures
                .first()
                .map(|f| f.to_string())
                .unwrap_or_default();
            return Err(Error::InvalidBiquandle(format!(
                "{} axiom instance(s) fail; first: {first}",
                report.total_failures
            )));
        }
        Ok(bq)
    }

    /// The one-element biquandle.
    pub fn trivial() -> Self {
        Self::from_tables(1, std::array::from_fn(|_| vec![1])).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn table(&self, k: OpKind) -> &[usize] {
        &self.tables[k.index()]
    }

    /// Table lookup without range checks; panics on out-of-range input.
    #[inline]
    pub fn op(&self, k: OpKind, a: usize, b: usize) -> usize {
        self.tables[k.index()][(a - 1) * self.n + (b - 1)]
    }

    pub fn apply_op(&self, k: OpKind, a: usize, b: usize) -> Result<usize> {
        for value in [a, b] {
            if value == 0 || value > self.n {
                return Err(Error::ElementOutOfRange { value, n: self.n });
            }
        }
        Ok(self.op(k, a, b))
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.op(OpKind::Up, a, b)
    }

    #[inline]
    pub fn down(&self, a: usize, b: usize) -> usize {
        self.op(OpKind::Down, a, b)
    }

    #[inline]
    pub fn up_bar(&self, a: usize, b: usize) -> usize {
        self.op(OpKind::UpBar, a, b)
    }

    #[inline]
    pub fn down_bar(&self, a: usize, b: usize) -> usize {
        self.op(OpKind::DownBar, a, b)
    }

    /// `S(a,b) = (b_a, a^b)`.
    pub fn switch(&self, a: usize, b: usize) -> (usize, usize) {
        (self.down(b, a), self.up(a, b))
    }

    /// Inverse of [`Biquandle::switch`]: `S⁻¹(x,y) = (y^-x, x_-y)`.
    pub fn switch_inverse(&self, x: usize, y: usize) -> (usize, usize) {
        (self.up_bar(y, x), self.down_bar(x, y))
    }

    /// Is every `a_b` and `a_-b` equal to `a`?
    pub fn is_quandle_type(&self) -> bool {
        let n = self.n;
        (1..=n).all(|a| (1..=n).all(|b| self.down(a, b) == a && self.down_bar(a, b) == a))
    }

    pub fn kink_witnesses(&self) -> KinkWitnesses {
        kink_witnesses_of(self.n, &|k, a, b| self.op(k, a, b))
    }

    pub fn validate(&self) -> ValidationReport {
        validate_with(self.n, &|k, a, b| self.op(k, a, b))
    }
}

/// Entry range is checked first; an out-of-range table is an error, not a failed report.
pub fn validate_biquandle(n: usize, tables: &Tables) -> Result<ValidationReport> {
    check_entries(n, tables)?;
    Ok(validate_with(n, &|k, a, b| tables[k.index()][(a - 1) * n + (b - 1)]))
}

fn kink_witnesses_of(n: usize, op: &dyn Fn(OpKind, usize, usize) -> usize) -> KinkWitnesses {
    use OpKind::*;
    let mut w = KinkWitnesses::default();
    for a in 1..=n {
        for x in 1..=n {
            if x == op(Down, a, x) && a == op(Up, x, a) {
                w.positive.push((a, x));
            }
            if x == op(UpBar, a, x) && a == op(DownBar, x, a) {
                w.negative.push((a, x));
            }
        }
    }
    w
}

fn validate_with(n: usize, op: &dyn Fn(OpKind, usize, usize) -> usize) -> ValidationReport {
    use OpKind::*;
    let mut failures = Vec::new();
    let eval = |w: &Word, vars: &[usize; 3]| -> usize { eval_axiom_word(w, vars, op) };

    for ax in equational_axioms() {
        let mut vars = [1usize; 3];
        let third = if ax.arity == 3 { n } else { 1 };
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=third {
                    vars[0] = a;
                    vars[1] = b;
                    vars[2] = c;
                    if eval(&ax.lhs, &vars) != eval(&ax.rhs, &vars) {
                        failures.push(AxiomFailure {
                            axiom: ax.id,
                            witness: vars[..ax.arity].to_vec(),
                        });
                    }
                }
            }
        }
    }

    for a in 1..=n {
        for b in 1..=n {
            let x_exists = (1..=n).any(|x| {
                let bx = op(DownBar, b, x);
                x == op(Up, a, bx) && a == op(UpBar, x, b) && b == op(Down, bx, a)
            });
            if !x_exists {
                failures.push(AxiomFailure {
                    axiom: "2.i-iii",
                    witness: vec![a, b],
                });
            }
            let y_exists = (1..=n).any(|y| {
                let by = op(Down, b, y);
                y == op(UpBar, a, by) && a == op(Up, y, b) && b == op(DownBar, by, a)
            });
            if !y_exists {
                failures.push(AxiomFailure {
                    axiom: "2.iv-vi",
                    witness: vec![a, b],
                });
            }
        }
    }

    let kinks = kink_witnesses_of(n, op);
    for a in 1..=n {
        if !kinks.positive.iter().any(|&(e, _)| e == a) {
            failures.push(AxiomFailure {
                axiom: "4.i-ii",
                witness: vec![a],
            });
        }
        if !kinks.negative.iter().any(|&(e, _)| e == a) {
            failures.push(AxiomFailure {
                axiom: "4.iii-iv",
                witness: vec![a],
            });
        }
    }

    // Redundant with axioms 1 and 3: the switch map must be a bijective
    // solution of the set-theoretic Yang-Baxter equation.
    let switch = |a: usize, b: usize| (op(Down, b, a), op(Up, a, b));
    let mut seen = vec![false; n * n];
    for a in 1..=n {
        for b in 1..=n {
            let (p, q) = switch(a, b);
            let slot = &mut seen[(p - 1) * n + (q - 1)];
            if *slot {
                failures.push(AxiomFailure {
                    axiom: "S-bijective",
                    witness: vec![a, b],
                });
            }
            *slot = true;
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let lhs = {
                    let (a, b) = switch(a, b);
                    let (b, c) = switch(b, c);
                    let (a, b) = switch(a, b);
                    (a, b, c)
                };
                let rhs = {
                    let (b, c) = switch(b, c);
                    let (a, b) = switch(a, b);
                    let (b, c) = switch(b, c);
                    (a, b, c)
                };
                if lhs != rhs {
                    failures.push(AxiomFailure {
                        axiom: "YBE",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }

    failures.sort();
    let total_failures = failures.len();
    failures.truncate(MAX_REPORTED_FAILURES);
    ValidationReport {
        ok: total_failures == 0,
        failures,
        total_failures,
    }
}

fn eval_axiom_word(
    w: &Word,
    vars: &[usize; 3],
    op: &dyn Fn(OpKind, usize, usize) -> usize,
) -> usize {
    match w {
        Word::Gen(g) => vars[*g as usize - 1],
        Word::Node(k, l, r) => {
            let l = eval_axiom_word(l, vars, op);
            let r = eval_axiom_word(r, vars, op);
            op(*k, l, r)
        }
    }
}

fn inverse_mod(x: i64, n: i64) -> Option<i64> {
    let e = x.extended_gcd(&n);
    (e.gcd == 1 || e.gcd == -1).then(|| (e.x * e.gcd).rem_euclid(n))
}

/// The Alexander biquandle on `Z_n` (shifted to `{1..n}`):
/// `x^y = tx + (1-st)y`, `x_y = sx`, `x^-y = t⁻¹x + (1-s⁻¹t⁻¹)y`, `x_-y = s⁻¹x`.
pub fn alexander_biquandle(n: usize, s: i64, t: i64) -> Result<Biquandle> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let m = n as i64;
    let s = s.rem_euclid(m);
    let t = t.rem_euclid(m);
    let s_inv = inverse_mod(s, m).ok_or(Error::NotInvertible { param: "s" })?;
    let t_inv = inverse_mod(t, m).ok_or(Error::NotInvertible { param: "t" })?;
    let mut tables: Tables = std::array::from_fn(|_| vec![0; n * n]);
    for x in 0..m {
        for y in 0..m {
            let idx = (x * m + y) as usize;
            let vals = [
                t * x + (1 - s * t) * y,
                s * x,
                t_inv * x + (1 - s_inv * t_inv) * y,
                s_inv * x,
            ];
            for (table, v) in tables.iter_mut().zip(vals) {
                table[idx] = (v.rem_euclid(m) + 1) as usize;
            }
        }
    }
    Biquandle::from_tables(n, tables)
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Reads a `2n x 2n` block matrix; `#` lines and blank lines are skipped.
pub fn read_biquandle(text: &str, convention: BlockConvention) -> Result<Biquandle> {
    let mut rows: Vec<(usize, Vec<(usize, i64)>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            // column of the token in the line, 1-based
            let offset = line[col..].find(tok).map(|o| o + col).unwrap_or(col);
            col = offset + tok.len();
            let value: i64 = tok
                .parse()
                .map_err(|_| parse_err(lineno + 1, offset + 1, format!("not an integer: {tok:?}")))?;
            row.push((offset + 1, value));
        }
        rows.push((lineno + 1, row));
    }
    let dim = rows.len();
    if dim == 0 {
        return Err(parse_err(1, 1, "empty biquandle matrix"));
    }
    if dim % 2 != 0 {
        return Err(parse_err(rows[dim - 1].0, 1, format!("odd dimension {dim}")));
    }
    for (line, row) in &rows {
        if row.len() != dim {
            return Err(parse_err(
                *line,
                1,
                format!("row has {} entries, matrix is not square ({dim} rows)", row.len()),
            ));
        }
    }
    let n = dim / 2;
    let mut tables: Tables = std::array::from_fn(|_| vec![0; n * n]);
    let blocks = convention.blocks();
    for (i, (line, row)) in rows.iter().enumerate() {
        for (j, &(column, value)) in row.iter().enumerate() {
            if value < 1 || value as usize > n {
                return Err(parse_err(
                    *line,
                    column,
                    format!("entry {value} out of range 1..={n}"),
                ));
            }
            let block = blocks[(i / n) * 2 + j / n];
            tables[block.index()][(i % n) * n + j % n] = value as usize;
        }
    }
    Biquandle::from_tables(n, tables)
}

/// Canonical text: `2n` lines of single-space separated entries.
pub fn write_biquandle(bq: &Biquandle, convention: BlockConvention) -> String {
    let n = bq.n;
    let blocks = convention.blocks();
    let mut out = String::new();
    for i in 0..2 * n {
        let row: Vec<String> = (0..2 * n)
            .map(|j| {
                let block = blocks[(i / n) * 2 + j / n];
                bq.tables[block.index()][(i % n) * n + j % n].to_string()
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const KISHINO_T: &str = "\
1 4 2 3 1 3 4 2
2 3 1 4 3 1 2 4
4 1 3 2 2 4 3 1
3 2 4 1 4 2 1 3
1 3 4 2 1 4 2 3
3 1 2 4 2 3 1 4
2 4 3 1 4 1 3 2
4 2 1 3 3 2 4 1
";

    fn kishino() -> Biquandle {
        read_biquandle(KISHINO_T, BlockConvention::Definition).unwrap()
    }

    #[test]
    fn kishino_is_valid_and_reads_blocks() {
        let t = kishino();
        assert_eq!(t.order(), 4);
        assert!(t.validate().ok);
        // UP is block 2: row 1 reads 1 3 4 2
        assert_eq!(t.apply_op(OpKind::Up, 1, 2).unwrap(), 3);
        assert_eq!(t.apply_op(OpKind::UpBar, 1, 2).unwrap(), 4);
        assert_eq!(t.apply_op(OpKind::DownBar, 2, 1).unwrap(), 3);
        assert_eq!(t.apply_op(OpKind::Down, 4, 3).unwrap(), 4);
    }

    #[test]
    fn printed_kishino_matrix_is_rejected() {
        let printed = KISHINO_T
            .replace("2 3 1 4 3 1 2 4", "2 3 1 1 3 1 2 4")
            .replace("4 2 1 3 3 2 4 1", "4 2 1 3 3 2 1 4");
        for conv in [BlockConvention::Definition, BlockConvention::Listing] {
            let t = read_biquandle(&printed, conv).unwrap();
            assert!(!t.is_valid());
        }
    }

    #[test]
    fn out_of_range_op_is_error() {
        let t = kishino();
        assert!(matches!(
            t.apply_op(OpKind::Up, 5, 1),
            Err(Error::ElementOutOfRange { value: 5, n: 4 })
        ));
        assert!(t.apply_op(OpKind::Up, 0, 1).is_err());
    }

    #[test]
    fn one_element() {
        let t = read_biquandle("1 1\n1 1\n", BlockConvention::Definition).unwrap();
        assert_eq!(t, Biquandle::trivial());
        for k in OpKind::ALL {
            assert_eq!(t.apply_op(k, 1, 1).unwrap(), 1);
        }
        assert!(t.is_valid());
    }

    #[test]
    fn all_ones_order_two_fails_axiom_four() {
        let tables: Tables = std::array::from_fn(|_| vec![1; 4]);
        let report = validate_biquandle(2, &tables).unwrap();
        assert!(!report.ok);
        assert!(report
            .failures
            .iter()
            .any(|f| f.axiom == "4.i-ii" && f.witness == vec![2]));
        assert_eq!(report.ok, report.failures.is_empty());
    }

    #[test]
    fn alexander_formulas() {
        let t = alexander_biquandle(5, 2, 3).unwrap();
        assert!(t.validate().ok);
        for x in 0..5i64 {
            for y in 0..5i64 {
                let up = (3 * x + (1 - 6) * y).rem_euclid(5) + 1;
                let down = (2 * x).rem_euclid(5) + 1;
                assert_eq!(t.up(x as usize + 1, y as usize + 1), up as usize);
                assert_eq!(t.down(x as usize + 1, y as usize + 1), down as usize);
            }
        }
    }

    #[test]
    fn alexander_identity_case() {
        let t = alexander_biquandle(2, 1, 1).unwrap();
        for k in OpKind::ALL {
            for a in 1..=2 {
                for b in 1..=2 {
                    assert_eq!(t.op(k, a, b), a);
                }
            }
        }
    }

    #[test]
    fn alexander_rejects_non_units() {
        let err = alexander_biquandle(4, 2, 1).unwrap_err();
        assert_eq!(err.to_string(), "s not invertible mod n");
        let err = alexander_biquandle(4, 1, 2).unwrap_err();
        assert_eq!(err.to_string(), "t not invertible mod n");
    }

    #[test]
    fn switch_inverse_round_trips() {
        let t = kishino();
        for a in 1..=4 {
            for b in 1..=4 {
                let (x, y) = t.switch(a, b);
                assert_eq!(t.switch_inverse(x, y), (a, b));
                let (x, y) = t.switch_inverse(a, b);
                assert_eq!(t.switch(x, y), (a, b));
            }
        }
    }

    #[test]
    fn write_read_round_trip() {
        let t = kishino();
        assert_eq!(write_biquandle(&t, BlockConvention::Definition), KISHINO_T);
        let messy = format!("# Kishino target\n\n{}", KISHINO_T.replace(' ', "   "));
        let t2 = read_biquandle(&messy, BlockConvention::Definition).unwrap();
        assert_eq!(write_biquandle(&t2, BlockConvention::Definition), KISHINO_T);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = read_biquandle("1 1\n1 3\n", BlockConvention::Definition).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                message: "entry 3 out of range 1..=1".into()
            }
        );
        assert!(matches!(
            read_biquandle("1 1 1\n1 1 1\n1 1 1\n", BlockConvention::Definition),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            read_biquandle("1 1\n1\n", BlockConvention::Definition),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_biquandle("1 x\n1 1\n", BlockConvention::Definition),
            Err(Error::Parse { line: 1, column: 3, .. })
        ));
    }

    #[test]
    fn listing_convention_differs() {
        let t = read_biquandle(KISHINO_T, BlockConvention::Listing).unwrap();
        assert!(t.is_valid());
        assert_eq!(t.up(1, 2), 4);
        assert_eq!(write_biquandle(&t, BlockConvention::Listing), KISHINO_T);
    }
}

//! Yang-Baxter 2-cocycles, coboundaries and (reduced) second cohomology.

use std::fmt;

use num_traits::{One, Signed};

use crate::biquandle::Biquandle;
use crate::error::{Error, Result};
use crate::linalg::{
    in_span, kernel_basis, mat_vec, primitive_integer, row_space_basis, Field, FieldSpec, Matrix, Scalar,
};

/// Point function, coefficient of `χ_x` at index `x-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain1 {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Cochain1 {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        Cochain1 { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn value(&self, x: usize) -> &Scalar {
        &self.coeffs[x - 1]
    }
}

/// Pair function on an `n`-element biquandle; the coefficient of `χ_(x,y)`
/// lives at `(x-1)*n + (y-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    field: FieldSpec,
    n: usize,
    coeffs: Vec<Scalar>,
}

impl Cochain2 {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Cochain2 {
            field,
            n,
            coeffs: vec![field.zero(); n * n],
        }
    }

    pub fn from_coeffs(field: FieldSpec, n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: coeffs.len(),
            });
        }
        Ok(Cochain2 { field, n, coeffs })
    }

    /// Integer coefficients, mapped into `field`.
    pub fn from_i64(field: FieldSpec, n: usize, coeffs: &[i64]) -> Result<Self> {
        Cochain2::from_coeffs(field, n, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Signed sum of characteristic functions, `terms` as `(coefficient, x, y)`.
    pub fn from_chi(field: FieldSpec, n: usize, terms: &[(i64, usize, usize)]) -> Result<Self> {
        let mut c = Cochain2::zero(field, n);
        for &(k, x, y) in terms {
            for v in [x, y] {
                if v == 0 || v > n {
                    return Err(Error::ElementOutOfRange { value: v, n });
                }
            }
            let i = c.index(x, y);
            c.coeffs[i] = field.add(&c.coeffs[i], &field.from_i64(k));
        }
        Ok(c)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        (x - 1) * self.n + (y - 1)
    }

    pub fn value(&self, x: usize, y: usize) -> &Scalar {
        &self.coeffs[self.index(x, y)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Cochain2) -> Result<Cochain2> {
        if other.n != self.n || other.field != self.field {
            return Err(Error::DimensionMismatch {
                expected: self.n * self.n,
                found: other.n * other.n,
            });
        }
        let f = self.field;
        Ok(Cochain2 {
            field: f,
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.add(a, b)).collect(),
        })
    }
}

/// χ-notation, e.g. `-X(1,3)-X(2,1)+2*X(3,3)`; the zero cochain prints `0`.
impl fmt::Display for Cochain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in 1..=self.n {
            for y in 1..=self.n {
                let c = self.value(x, y);
                if self.field.is_zero(c) {
                    continue;
                }
                let (negative, magnitude) = match c {
                    Scalar::Rational(q) => (q.is_negative(), Scalar::Rational(q.abs())),
                    Scalar::Residue(r) => (false, Scalar::Residue(*r)),
                };
                if negative {
                    f.write_str("-")?;
                } else if !first {
                    f.write_str("+")?;
                }
                let unit = match &magnitude {
                    Scalar::Rational(q) => q.is_one(),
                    Scalar::Residue(r) => *r == 1,
                };
                if !unit {
                    write!(f, "{magnitude}*")?;
                }
                write!(f, "X({x},{y})")?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Rows indexed by triples `(x,y,z)` lexicographically, columns by pairs.
pub fn cocycle_matrix(t: &Biquandle, f: FieldSpec) -> Matrix<Scalar> {
    let n = t.order();
    let mut m = Matrix::filled(n * n * n, n * n, f.zero());
    let col = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut row = 0;
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                let xy = t.up(x, y);
                let zy = t.down(z, y);
                let plus = [(x, y), (xy, z), (t.down(y, x), t.down(z, xy))];
                let minus = [(x, zy), (y, z), (t.up(x, zy), t.up(y, z))];
                for (pairs, delta) in [(plus, 1), (minus, -1)] {
                    for (a, b) in pairs {
                        let c = col(a, b);
                        let v = f.add(m.get(row, c), &f.from_i64(delta));
                        m.set(row, c, v);
                    }
                }
                row += 1;
            }
        }
    }
    m
}

pub fn is_cocycle(t: &Biquandle, phi: &Cochain2) -> Result<bool> {
    check_order(t, phi)?;
    let f = phi.field;
    let image = mat_vec(&f, &cocycle_matrix(t, f), &phi.coeffs)?;
    Ok(image.iter().all(|v| f.is_zero(v)))
}

/// `(δλ)(x,y) = λ(x) + λ(y) − λ(x^y) − λ(y_x)`.
pub fn coboundary(t: &Biquandle, lambda: &Cochain1) -> Result<Cochain2> {
    let n = t.order();
    if lambda.coeffs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: lambda.coeffs.len(),
        });
    }
    let f = lambda.field;
    let mut out = Cochain2::zero(f, n);
    for x in 1..=n {
        for y in 1..=n {
            let plus = f.add(lambda.value(x), lambda.value(y));
            let minus = f.add(lambda.value(t.up(x, y)), lambda.value(t.down(y, x)));
            let i = out.index(x, y);
            out.coeffs[i] = f.sub(&plus, &minus);
        }
    }
    Ok(out)
}

/// Independent spanning set of `B²`: the RREF rows of the images of `χ_1..χ_n`.
pub fn coboundary_basis(t: &Biquandle, f: FieldSpec) -> Vec<Cochain2> {
    let n = t.order();
    let images: Vec<Vec<Scalar>> = (1..=n)
        .map(|x| {
            let mut coeffs = vec![f.zero(); n];
            coeffs[x - 1] = f.one();
            coboundary(t, &Cochain1::new(f, coeffs))
                .expect("dimension matches")
                .coeffs
        })
        .collect();
    row_space_basis(&f, n * n, &images)
        .into_iter()
        .map(|coeffs| Cochain2 { field: f, n, coeffs })
        .collect()
}

/// Scans `candidates` in order, keeping those that raise the rank of `start`.
fn extend_basis(f: &FieldSpec, cols: usize, start: &[Vec<Scalar>], candidates: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut acc = row_space_basis(f, cols, start);
    let mut picked = Vec::new();
    for v in candidates {
        if !in_span(f, &v, &acc).expect("dimensions agree") {
            acc.push(v.clone());
            acc = row_space_basis(f, cols, &acc);
            picked.push(v);
        }
    }
    picked
}

fn normalize(f: FieldSpec, v: Vec<Scalar>) -> Vec<Scalar> {
    match f {
        FieldSpec::Rationals => {
            let q: Vec<_> = v.iter().map(Scalar::to_rational).collect();
            primitive_integer(&q).into_iter().map(Scalar::Rational).collect()
        }
        FieldSpec::Prime(_) => v,
    }
}

/// Representatives of a basis of `Z²/B²`, chosen from the canonical kernel basis.
pub fn cohomology_basis(t: &Biquandle, f: FieldSpec) -> Vec<Cochain2> {
    let n = t.order();
    let b: Vec<Vec<Scalar>> = coboundary_basis(t, f).into_iter().map(|c| c.coeffs).collect();
    let z = kernel_basis(&f, &cocycle_matrix(t, f));
    extend_basis(&f, n * n, &b, z)
        .into_iter()
        .map(|coeffs| Cochain2 { field: f, n, coeffs })
        .collect()
}

/// Pairs on which a reduced cocycle must vanish: `(x,a)` for every positive
/// kink witness `(a,x)` and `(y,a)` for every negative one `(a,y)`, these
/// being the Boltzmann weights a curl contributes. Sorted, deduplicated.
pub fn ri_pairs(t: &Biquandle) -> Vec<(usize, usize)> {
    let w = t.kink_witnesses();
    let mut pairs: Vec<_> = w
        .positive
        .iter()
        .chain(&w.negative)
        .map(|&(a, x)| (x, a))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

pub fn is_ri_reduced(t: &Biquandle, phi: &Cochain2) -> Result<bool> {
    check_order(t, phi)?;
    Ok(ri_pairs(t).into_iter().all(|(x, y)| phi.field.is_zero(phi.value(x, y))))
}

/// Representatives of `W/(W ∩ B²)` where `W` is the space of cocycles
/// vanishing on every RI pair. Over ℚ each is a primitive integer vector with
/// positive leading entry.
pub fn reduced_cohomology_basis(t: &Biquandle, f: FieldSpec) -> Vec<Cochain2> {
    let n = t.order();
    let cols = n * n;
    let ri = ri_pairs(t);

    let mut rows = cocycle_matrix(t, f).to_rows();
    for &(x, y) in &ri {
        let mut r = vec![f.zero(); cols];
        r[(x - 1) * n + (y - 1)] = f.one();
        rows.push(r);
    }
    let w = kernel_basis(&f, &Matrix::from_rows(cols, rows));

    // W ∩ B²: combinations of the coboundary basis that vanish on the RI pairs
    let b: Vec<Vec<Scalar>> = coboundary_basis(t, f).into_iter().map(|c| c.coeffs).collect();
    let wb: Vec<Vec<Scalar>> = if b.is_empty() {
        Vec::new()
    } else {
        let restrict = Matrix::from_rows(
            b.len(),
            ri.iter()
                .map(|&(x, y)| b.iter().map(|v| v[(x - 1) * n + (y - 1)].clone()).collect())
                .collect(),
        );
        let combos = if ri.is_empty() {
            (0..b.len())
                .map(|i| (0..b.len()).map(|j| if i == j { f.one() } else { f.zero() }).collect())
                .collect()
        } else {
            kernel_basis(&f, &restrict)
        };
        combos
            .iter()
            .map(|c: &Vec<Scalar>| {
                (0..cols)
                    .map(|k| {
                        c.iter()
                            .zip(&b)
                            .fold(f.zero(), |acc, (ci, bi)| f.add(&acc, &f.mul(ci, &bi[k])))
                    })
                    .collect()
            })
            .collect()
    };

    extend_basis(&f, cols, &wb, w)
        .into_iter()
        .map(|v| Cochain2 {
            field: f,
            n,
            coeffs: normalize(f, v),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CocycleClass {
    NotCocycle,
    Coboundary,
    NontrivialCocycle,
}

impl fmt::Display for CocycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CocycleClass::NotCocycle => "NOT_COCYCLE",
            CocycleClass::Coboundary => "COBOUNDARY",
            CocycleClass::NontrivialCocycle => "NONTRIVIAL_COCYCLE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub class: CocycleClass,
    pub ri_reduced: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        if self.ri_reduced {
            f.write_str(" RI-reduced")?;
        }
        Ok(())
    }
}

fn check_order(t: &Biquandle, phi: &Cochain2) -> Result<()> {
    if phi.n != t.order() {
        return Err(Error::DimensionMismatch {
            expected: t.order() * t.order(),
            found: phi.coeffs.len(),
        });
    }
    Ok(())
}

pub fn classify_cochain(t: &Biquandle, phi: &Cochain2) -> Result<Classification> {
    let ri_reduced = is_ri_reduced(t, phi)?;
    let class = if !is_cocycle(t, phi)? {
        CocycleClass::NotCocycle
    } else {
        let b: Vec<Vec<Scalar>> = coboundary_basis(t, phi.field).into_iter().map(|c| c.coeffs).collect();
        if in_span(&phi.field, &phi.coeffs, &b)? {
            CocycleClass::Coboundary
        } else {
            CocycleClass::NontrivialCocycle
        }
    };
    Ok(Classification { class, ri_reduced })
}

/// Reads a cocycle file for an `n`-element biquandle: optional header
/// `field Q` / `field Zp:<p>` (default `Q`), then `x y value` lines. Repeated
/// pairs accumulate; `#` starts a comment.
pub fn read_cocycle(text: &str, n: usize) -> Result<Cochain2> {
    read_cocycle_with_default(text, n, FieldSpec::Rationals)
}

/// As [`read_cocycle`], with `default` used when the file has no header.
pub fn read_cocycle_with_default(text: &str, n: usize, default: FieldSpec) -> Result<Cochain2> {
    let mut field: Option<FieldSpec> = None;
    let mut terms: Vec<(usize, usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let column_of = |tok: &str| raw.find(tok).map_or(1, |c| c + 1);
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "field" {
            if field.is_some() || !terms.is_empty() {
                return Err(parse_err(1, "field header must come first".into()));
            }
            if toks.len() != 2 {
                return Err(parse_err(1, "expected `field Q` or `field Zp:<p>`".into()));
            }
            field = Some(toks[1].parse().map_err(|e: Error| parse_err(column_of(toks[1]), e.to_string()))?);
            continue;
        }
        if toks.len() != 3 {
            return Err(parse_err(1, format!("expected `x y value`, found {} fields", toks.len())));
        }
        let mut xy = [0usize; 2];
        for (slot, tok) in xy.iter_mut().zip(&toks[..2]) {
            *slot = tok
                .parse()
                .ok()
                .filter(|&v| (1..=n).contains(&v))
                .ok_or_else(|| parse_err(column_of(tok), format!("{tok:?} is not an element of 1..={n}")))?;
        }
        terms.push((line_no, xy[0], xy[1], toks[2].to_string()));
    }
    let f = field.unwrap_or(default);
    let mut c = Cochain2::zero(f, n);
    for (line, x, y, value) in terms {
        let v = f.parse_scalar(&value).map_err(|e| Error::Parse {
            line,
            column: 1,
            message: e.to_string(),
        })?;
        let i = c.index(x, y);
        c.coeffs[i] = f.add(&c.coeffs[i], &v);
    }
    Ok(c)
}

pub fn write_cocycle(phi: &Cochain2) -> String {
    let mut out = format!("field {}\n", phi.field);
    for x in 1..=phi.n {
        for y in 1..=phi.n {
            let v = phi.value(x, y);
            if !phi.field.is_zero(v) {
                out.push_str(&format!("{x} {y} {v}\n"));
            }
        }
    }
    out
}

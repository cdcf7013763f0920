//! Boltzmann weights and the Yang-Baxter 2-cocycle invariant.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::biquandle::Biquandle;
use crate::cohomology::{is_cocycle, reduced_cohomology_basis, Cochain2};
use crate::coloring::{check_coloring, enumerate_colorings, Coloring};
use crate::error::{Error, Result};
use crate::gauss::{Crossing, GaussCode, Sign};
use crate::linalg::{Field, FieldSpec, Scalar};

/// `Σ multiplicity · t^exponent`, exponents exact field scalars.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentMultiset {
    terms: BTreeMap<Scalar, usize>,
}

impl LaurentMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, exponent: Scalar) {
        *self.terms.entry(exponent).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, exponent: &Scalar) -> usize {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    /// Total multiplicity, the number of colorings summed over.
    pub fn total(&self) -> usize {
        self.terms.values().sum()
    }

    /// `(exponent, multiplicity)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Scalar, usize)> {
        self.terms.iter().map(|(e, &m)| (e, m))
    }

    /// JSON list of `[exponent, multiplicity]`; integral exponents are numbers,
    /// fractional ones strings like `"1/2"`.
    pub fn to_porcelain(&self) -> String {
        let items: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, m)| {
                let e = match e.as_i64() {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(e.to_string()),
                };
                serde_json::json!([e, m])
            })
            .collect();
        serde_json::Value::Array(items).to_string()
    }
}

impl FromIterator<Scalar> for LaurentMultiset {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        let mut out = LaurentMultiset::new();
        for e in iter {
            out.insert(e);
        }
        out
    }
}

fn is_zero_exponent(e: &Scalar) -> bool {
    match e {
        Scalar::Rational(q) => q.is_zero(),
        Scalar::Residue(r) => *r == 0,
    }
}

/// Constant term first, then ascending exponents: `12 + 2*t^-1 + 2*t`.
impl fmt::Display for LaurentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let constant = self.terms.iter().filter(|(e, _)| is_zero_exponent(e));
        let rest = self.terms.iter().filter(|(e, _)| !is_zero_exponent(e));
        for (i, (e, m)) in constant.chain(rest).enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if is_zero_exponent(e) {
                write!(f, "{m}")?;
                continue;
            }
            write!(f, "{m}*t")?;
            match e {
                Scalar::Rational(q) if q.is_one() => {}
                Scalar::Rational(q) if q.is_integer() => write!(f, "^{q}")?,
                Scalar::Rational(q) if q.is_negative() => write!(f, "^(-{})", q.abs())?,
                Scalar::Rational(q) => write!(f, "^({q})")?,
                Scalar::Residue(1) => {}
                Scalar::Residue(r) => write!(f, "^{r}")?,
            }
        }
        Ok(())
    }
}

/// `Σ ε·φ(u,v)`: inbound pair with `+` at positive crossings, outbound pair
/// with `−` at negative ones, under color first.
pub fn boltzmann_sum(crossings: &[Crossing], t: &Biquandle, phi: &Cochain2, c: &Coloring) -> Result<Scalar> {
    check_coloring(crossings, t, c)?;
    Ok(weight_sum(crossings, phi, c))
}

fn weight_sum(crossings: &[Crossing], phi: &Cochain2, c: &Coloring) -> Scalar {
    let f = phi.field();
    crossings.iter().fold(f.zero(), |acc, x| match x.sign {
        Sign::Positive => f.add(&acc, phi.value(c.color(x.under_in), c.color(x.over_in))),
        Sign::Negative => f.sub(&acc, phi.value(c.color(x.under_out), c.color(x.over_out))),
    })
}

/// The invariant over an already enumerated coloring list.
pub fn invariant_from_colorings(code: &GaussCode, phi: &Cochain2, colorings: &[Coloring]) -> LaurentMultiset {
    let crossings = code.crossings();
    colorings
        .par_iter()
        .map(|c| weight_sum(&crossings, phi, c))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn check_order(t: &Biquandle, phi: &Cochain2) -> Result<()> {
    if phi.order() != t.order() {
        return Err(Error::DimensionMismatch {
            expected: t.order() * t.order(),
            found: phi.coeffs().len(),
        });
    }
    Ok(())
}

/// `Φ_YB(code, T, φ)`; `φ` must be a cocycle.
pub fn yb_invariant(code: &GaussCode, t: &Biquandle, phi: &Cochain2) -> Result<LaurentMultiset> {
    check_order(t, phi)?;
    if !is_cocycle(t, phi)? {
        return Err(Error::NotACocycle);
    }
    let colorings = enumerate_colorings(code, t)?;
    Ok(invariant_from_colorings(code, phi, &colorings))
}

/// One invariant per reduced cohomology basis vector, in basis order.
pub fn yb_invariant_suite(code: &GaussCode, t: &Biquandle, f: FieldSpec) -> Result<Vec<(Cochain2, LaurentMultiset)>> {
    let basis = reduced_cohomology_basis(t, f);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let colorings = enumerate_colorings(code, t)?;
    Ok(basis
        .into_iter()
        .map(|phi| {
            let inv = invariant_from_colorings(code, &phi, &colorings);
            (phi, inv)
        })
        .collect())
}

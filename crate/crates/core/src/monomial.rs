//! Exponent-vector monomials over a fixed set of variables.
//!
//! A [`Monomial`] is a plain exponent vector. It only acquires variable names
//! when printed or parsed against a [`VarContext`]. Two monomials are
//! comparable when their vectors have the same length; every binary operation
//! checks this and reports [`Error::ContextMismatch`] otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// The variables `x1..xn` of the polynomial ring, with display names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Arc<[String]>,
}

impl VarContext {
    /// Context with default names `x1`, ..., `xn`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        Ok(VarContext {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        })
    }

    pub fn with_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            validate_name(name)?;
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(VarContext {
            names: names.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// True when the names are exactly `x1..xn`.
    pub fn has_default_names(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, name)| *name == format!("x{}", i + 1))
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.n())
    }

    /// The variable `names[var]` as a monomial.
    pub fn var(&self, var: usize) -> Monomial {
        let mut m = self.one();
        m.exps[var] = 1;
        m
    }

    pub fn parse(&self, text: &str) -> Result<Monomial> {
        parse_monomial(text, self)
    }

    pub fn format(&self, m: &Monomial) -> String {
        format_monomial(m, self)
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.n() != self.n() {
            return Err(Error::ContextMismatch {
                expected: self.n(),
                found: m.n(),
            });
        }
        Ok(())
    }
}

fn validate_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    match chars.next() {
        None => Err(Error::InvalidContext("empty variable name".into())),
        Some(c) if !(c.is_alphabetic() || c == '_') => Err(Error::InvalidContext(format!(
            "variable name `{name}` must start with a letter or `_`"
        ))),
        Some(_) if !name.chars().all(|c| c.is_alphanumeric() || c == '_') => {
            Err(Error::InvalidContext(format!(
                "variable name `{name}` may only contain letters, digits and `_`"
            )))
        }
        Some(_) => Ok(()),
    }
}

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps.as_slice())
    }
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// Number of variables of the ambient context.
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.exps[j] > 0).collect()
    }

    fn same_context(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::ContextMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_context(other)?;
        Ok(self.join(other))
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_context(other)?;
        self.checked_mul(other)
    }

    /// `self / other` when `other` divides `self`, `None` otherwise.
    pub fn div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.same_context(other)?;
        Ok(self.exact_div(other))
    }

    // Internal variants for callers that already share a context.

    pub(crate) fn join(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.n());
        for (var, (&a, &b)) in self.exps.iter().zip(&other.exps).enumerate() {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow { var })?);
        }
        Ok(Monomial { exps })
    }

    pub(crate) fn exact_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.n());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    /// Canonical generator order: higher total degree first, then
    /// lexicographically larger exponent vectors first.
    pub fn cmp_canonical(&self, other: &Monomial) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

/// Parse a monomial such as `x1^2*x3` or `1`.
pub fn parse_monomial(text: &str, ctx: &VarContext) -> Result<Monomial> {
    parse_monomial_at(text, ctx, 1, 1)
}

/// Parse with positions reported relative to `line`/`column` of the
/// enclosing input.
pub(crate) fn parse_monomial_at(
    text: &str,
    ctx: &VarContext,
    line: usize,
    column: usize,
) -> Result<Monomial> {
    if text.is_empty() {
        return Err(Error::parse(line, column, "empty monomial"));
    }
    let mut m = ctx.one();
    if text == "1" {
        return Ok(m);
    }
    let mut offset = 0;
    for factor in text.split('*') {
        let col = column + offset;
        offset += factor.len() + 1;
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp_col = col + name.len() + 1;
                if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                    let message = if exp.starts_with('-') {
                        format!("negative exponent `{exp}`")
                    } else {
                        format!("malformed exponent `{exp}`")
                    };
                    return Err(Error::parse(line, exp_col, message));
                }
                let exp: u32 = exp.parse().map_err(|_| {
                    Error::parse(line, exp_col, format!("exponent `{exp}` out of range"))
                })?;
                (name, exp)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(Error::parse(line, col, "missing variable name"));
        }
        let var = ctx
            .var_index(name)
            .ok_or_else(|| Error::parse(line, col, format!("unknown variable `{name}`")))?;
        m.exps[var] = m.exps[var]
            .checked_add(exp)
            .ok_or_else(|| Error::parse(line, col, "exponent overflow"))?;
    }
    Ok(m)
}

/// Inverse of [`parse_monomial`]: `1` for the unit, factors joined by `*`,
/// `^e` omitted when `e == 1`.
pub fn format_monomial(m: &Monomial, ctx: &VarContext) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (var, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(ctx.name(var));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> VarContext {
        VarContext::with_names(["x", "y", "z"]).unwrap()
    }

    fn m(text: &str) -> Monomial {
        xyz().parse(text).unwrap()
    }

    #[test]
    fn lcm_examples() {
        let top = m("x^2*y^2*z")
            .lcm(&m("x^2*z^2"))
            .unwrap()
            .lcm(&m("y*z^2"))
            .unwrap();
        assert_eq!(top, m("x^2*y^2*z^2"));
        assert_eq!(m("x^2*y").lcm(&m("y*z^2")).unwrap(), m("x^2*y*z^2"));
        assert_eq!(m("x*y^3").lcm(&m("1")).unwrap(), m("x*y^3"));
    }

    #[test]
    fn divides_examples() {
        assert!(m("y*z^2").divides(&m("x^2*y^2*z^2")).unwrap());
        assert!(m("x*y").divides(&m("x*y")).unwrap());
        assert!(!m("x^3").divides(&m("x^2*y^2*z^2")).unwrap());
    }

    #[test]
    fn degree_and_squarefree() {
        assert_eq!(m("x^2*y^2*z^2").total_degree(), 6);
        assert_eq!(m("1").total_degree(), 0);
        assert_eq!(m("x*y*z").total_degree(), 3);
        assert!(m("x*y*z").is_squarefree());
        assert!(!m("x^2*y").is_squarefree());
        assert!(m("1").is_squarefree());
    }

    #[test]
    fn context_mismatch() {
        let a = Monomial::one(2);
        let b = Monomial::one(3);
        assert_eq!(
            a.lcm(&b),
            Err(Error::ContextMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(a.divides(&b).is_err());
    }

    #[test]
    fn mul_overflow_is_an_error() {
        let a = Monomial::from_exponents(&[u32::MAX, 0]);
        let b = Monomial::from_exponents(&[1, 0]);
        assert_eq!(a.mul(&b), Err(Error::ExponentOverflow { var: 0 }));
    }

    #[test]
    fn parse_examples() {
        let ctx = VarContext::new(3).unwrap();
        assert_eq!(ctx.parse("x1^2*x3").unwrap().exponents(), &[2, 0, 1]);
        assert_eq!(ctx.parse("1").unwrap().exponents(), &[0, 0, 0]);
        assert_eq!(ctx.parse("x1^0*x2").unwrap().exponents(), &[0, 1, 0]);
    }

    #[test]
    fn parse_errors_carry_position() {
        let ctx = VarContext::new(3).unwrap();
        let err = ctx.parse("x1*x9").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 4,
                message: "unknown variable `x9`".into()
            }
        );
        assert!(matches!(ctx.parse("x1^-2"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(ctx.parse("x1^"), Err(Error::Parse { .. })));
        assert!(matches!(ctx.parse("x1^2a"), Err(Error::Parse { .. })));
        assert!(matches!(ctx.parse("x1 * x2"), Err(Error::Parse { .. })));
        assert!(matches!(ctx.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(ctx.parse("x1**x2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn context_validation() {
        assert!(VarContext::new(0).is_err());
        assert!(VarContext::with_names(["x", "x"]).is_err());
        assert!(VarContext::with_names(["x", ""]).is_err());
        assert!(VarContext::with_names(["1a"]).is_err());
        assert!(VarContext::new(4).unwrap().has_default_names());
        assert!(!xyz().has_default_names());
    }

    #[test]
    fn canonical_order() {
        let mut gens = vec![m("z^2"), m("x*z"), m("x^2*y^2"), m("x*y")];
        gens.sort_by(Monomial::cmp_canonical);
        assert_eq!(gens, vec![m("x^2*y^2"), m("x*y"), m("x*z"), m("z^2")]);
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, n).prop_map(|e| Monomial::from_exponents(&e))
    }

    proptest! {
        #[test]
        fn lcm_laws(a in arb_monomial(4), b in arb_monomial(4), c in arb_monomial(4)) {
            let one = Monomial::one(4);
            prop_assert_eq!(a.lcm(&b).unwrap(), b.lcm(&a).unwrap());
            prop_assert_eq!(
                a.lcm(&b).unwrap().lcm(&c).unwrap(),
                a.lcm(&b.lcm(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.lcm(&a).unwrap(), a.clone());
            prop_assert_eq!(a.lcm(&one).unwrap(), a.clone());
            prop_assert!(a.divides(&a.lcm(&b).unwrap()).unwrap());
            prop_assert!(
                a.lcm(&b).unwrap().total_degree() <= a.total_degree() + b.total_degree()
            );
        }

        #[test]
        fn divides_antisymmetric(a in arb_monomial(3), b in arb_monomial(3)) {
            let both = a.divides(&b).unwrap() && b.divides(&a).unwrap();
            prop_assert_eq!(both, a == b);
        }

        #[test]
        fn parse_format_round_trip(a in arb_monomial(5)) {
            let ctx = VarContext::new(5).unwrap();
            prop_assert_eq!(ctx.parse(&ctx.format(&a)).unwrap(), a);
        }
    }
}

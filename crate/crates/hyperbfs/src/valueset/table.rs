use std::sync::Arc;

use crate::error::{Error, Result};

use super::ValueSet;

/// A finite, table-backed value set. Values are indices into the carrier;
/// operations are row-major table lookups (row = left operand).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableValueSet {
    inner: Arc<Inner>,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    id: String,
    names: Vec<String>,
    zero: usize,
    one: usize,
    plus: Vec<usize>,
    times: Vec<usize>,
}

impl TableValueSet {
    /// Build from explicit operation tables given by element name. Validates
    /// shape and name resolution only; identity laws are checked separately.
    pub fn from_tables(
        id: &str,
        names: &[&str],
        zero: &str,
        one: &str,
        plus_rows: &[&[&str]],
        times_rows: &[&[&str]],
    ) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let n = names.len();
        if n == 0 {
            return Err(Error::Parse {
                location: id.to_string(),
                message: "empty carrier".to_string(),
            });
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Parse {
                    location: id.to_string(),
                    message: format!("duplicate carrier element `{a}`"),
                });
            }
        }
        let resolve = |name: &str| -> Result<usize> {
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| Error::Parse {
                    location: id.to_string(),
                    message: format!("unknown carrier element `{name}`"),
                })
        };
        let zero = resolve(zero)?;
        let one = resolve(one)?;
        let read_table = |rows: &[&[&str]], which: &str| -> Result<Vec<usize>> {
            if rows.len() != n {
                return Err(Error::Parse {
                    location: id.to_string(),
                    message: format!("{which} table has {} rows, expected {n}", rows.len()),
                });
            }
            let mut out = Vec::with_capacity(n * n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::Parse {
                        location: id.to_string(),
                        message: format!("{which} table row has {} entries, expected {n}", row.len()),
                    });
                }
                for name in *row {
                    out.push(resolve(name)?);
                }
            }
            Ok(out)
        };
        let plus = read_table(plus_rows, "plus")?;
        let times = read_table(times_rows, "times")?;
        Ok(Self::from_indices(id.to_string(), names, zero, one, plus, times))
    }

    pub(crate) fn from_indices(
        id: String,
        names: Vec<String>,
        zero: usize,
        one: usize,
        plus: Vec<usize>,
        times: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(plus.len(), names.len() * names.len());
        debug_assert_eq!(times.len(), names.len() * names.len());
        TableValueSet {
            inner: Arc::new(Inner {
                id,
                names,
                zero,
                one,
                plus,
                times,
            }),
        }
    }

    /// Build tables by evaluating closures over index pairs.
    fn from_ops(
        id: &str,
        names: Vec<String>,
        zero: usize,
        one: usize,
        plus: impl Fn(usize, usize) -> usize,
        times: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = names.len();
        let mut p = Vec::with_capacity(n * n);
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                p.push(plus(a, b));
                t.push(times(a, b));
            }
        }
        Self::from_indices(id.to_string(), names, zero, one, p, t)
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn element_names(&self) -> &[String] {
        &self.inner.names
    }

    /// `{0, 1}` with `plus` = OR and `times` = AND.
    pub fn boolean() -> Self {
        Self::from_ops(
            "boolean",
            vec!["0".into(), "1".into()],
            0,
            1,
            |a, b| a | b,
            |a, b| a & b,
        )
    }

    /// Min-plus truncated to `{inf, 0, 1, ..., max}` with saturation.
    /// `zero` is the `inf` sentinel (identity for min), `one` is `0`.
    pub fn min_plus(max: u32) -> Self {
        // index 0 = inf, index i (1..=max+1) = value i-1
        let mut names = vec!["inf".to_string()];
        names.extend((0..=max).map(|i| i.to_string()));
        let top = max as usize;
        Self::from_ops(
            "minplus",
            names,
            0,
            1,
            |a, b| {
                if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    a.min(b)
                }
            },
            |a, b| {
                if a == 0 || b == 0 {
                    0 // inf + anything = inf
                } else {
                    ((a - 1) + (b - 1)).min(top) + 1
                }
            },
        )
    }

    /// Nonnegative integers `{0, ..., max}` with saturating `+` and `*`.
    pub fn nonneg_saturating(max: u32) -> Self {
        let names: Vec<String> = (0..=max).map(|i| i.to_string()).collect();
        let top = max as usize;
        Self::from_ops(
            "nonneg",
            names,
            0,
            1,
            move |a, b| (a + b).min(top),
            move |a, b| (a * b).min(top),
        )
    }

    /// Signed integers `{-1, 0, 1}` with saturating `+` and `*`.
    /// Deliberately non-conforming: `1 + (-1) = 0` breaks zero-sum-freeness.
    pub fn signed_saturating() -> Self {
        let names = vec!["-1".to_string(), "0".to_string(), "1".to_string()];
        let val = |i: usize| i as i64 - 1;
        let idx = |v: i64| (v.clamp(-1, 1) + 1) as usize;
        Self::from_ops(
            "signed",
            names,
            1,
            2,
            move |a, b| idx(val(a) + val(b)),
            move |a, b| idx(val(a) * val(b)),
        )
    }

    /// `{0, 1, d}` where `d times d = 0`: zero-sum-free and annihilating but
    /// not zero-divisor-free.
    pub fn zero_divisor3() -> Self {
        Self::from_tables(
            "zerodivisor3",
            &["0", "1", "d"],
            "0",
            "1",
            &[
                &["0", "1", "d"],
                &["1", "1", "1"],
                &["d", "1", "d"],
            ],
            &[
                &["0", "0", "0"],
                &["0", "1", "d"],
                &["0", "d", "0"],
            ],
        )
        .expect("static table")
    }

    /// `{0, 1, x}` where `0 times x = x`: zero fails to annihilate.
    pub fn non_annihilating3() -> Self {
        Self::from_tables(
            "nonannihilating3",
            &["0", "1", "x"],
            "0",
            "1",
            &[
                &["0", "1", "x"],
                &["1", "1", "1"],
                &["x", "1", "x"],
            ],
            &[
                &["0", "0", "x"],
                &["0", "1", "x"],
                &["0", "x", "x"],
            ],
        )
        .expect("static table")
    }

    /// All table-backed built-ins, by id.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "boolean" => Some(Self::boolean()),
            "minplus" => Some(Self::min_plus(6)),
            "nonneg" => Some(Self::nonneg_saturating(7)),
            "signed" => Some(Self::signed_saturating()),
            "zerodivisor3" => Some(Self::zero_divisor3()),
            "nonannihilating3" => Some(Self::non_annihilating3()),
            _ => None,
        }
    }

    pub const BUILTIN_NAMES: [&'static str; 6] = [
        "boolean",
        "minplus",
        "nonneg",
        "signed",
        "zerodivisor3",
        "nonannihilating3",
    ];

    #[cfg(test)]
    pub(crate) fn plus_table(&self) -> &[usize] {
        &self.inner.plus
    }

    #[cfg(test)]
    pub(crate) fn times_table(&self) -> &[usize] {
        &self.inner.times
    }
}

impl ValueSet for TableValueSet {
    type Value = usize;

    fn id(&self) -> &str {
        &self.inner.id
    }

    fn zero(&self) -> usize {
        self.inner.zero
    }

    fn one(&self) -> usize {
        self.inner.one
    }

    fn plus(&self, a: &usize, b: &usize) -> usize {
        self.inner.plus[a * self.inner.names.len() + b]
    }

    fn times(&self, a: &usize, b: &usize) -> usize {
        self.inner.times[a * self.inner.names.len() + b]
    }

    fn carrier(&self) -> Result<Vec<usize>> {
        Ok((0..self.inner.names.len()).collect())
    }

    fn value_name(&self, v: &usize) -> String {
        self.inner.names[*v].clone()
    }

    fn parse_value(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|x| x == name)
    }
}

/// Unbounded integers with wrapping arithmetic: a symbolic value set that
/// supports evaluation only. Exhaustive checks refuse to run on it.
#[derive(Clone, Debug, Default)]
pub struct IntValueSet;

impl IntValueSet {
    pub fn new() -> Self {
        IntValueSet
    }
}

impl ValueSet for IntValueSet {
    type Value = i64;

    fn id(&self) -> &str {
        "integers"
    }

    fn zero(&self) -> i64 {
        0
    }

    fn one(&self) -> i64 {
        1
    }

    fn plus(&self, a: &i64, b: &i64) -> i64 {
        a.wrapping_add(*b)
    }

    fn times(&self, a: &i64, b: &i64) -> i64 {
        a.wrapping_mul(*b)
    }

    fn carrier(&self) -> Result<Vec<i64>> {
        Err(Error::NonFiniteCarrier(self.id().to_string()))
    }

    fn value_name(&self, v: &i64) -> String {
        v.to_string()
    }

    fn parse_value(&self, name: &str) -> Option<i64> {
        name.parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_tables() {
        let vs = TableValueSet::boolean();
        let (z, o) = (vs.zero(), vs.one());
        assert_eq!(vs.plus(&z, &o), o);
        assert_eq!(vs.plus(&o, &o), o);
        assert_eq!(vs.times(&o, &o), o);
        assert_eq!(vs.times(&z, &o), z);
    }

    #[test]
    fn min_plus_saturates_and_absorbs() {
        let vs = TableValueSet::min_plus(6);
        let inf = vs.parse_value("inf").unwrap();
        let five = vs.parse_value("5").unwrap();
        let six = vs.parse_value("6").unwrap();
        assert_eq!(vs.plus(&inf, &five), five); // min(inf, 5) = 5
        assert_eq!(vs.times(&inf, &five), inf); // inf + 5 = inf
        assert_eq!(vs.times(&five, &six), six); // 5 + 6 saturates at 6
        assert_eq!(vs.value_name(&vs.times(&five, &vs.parse_value("0").unwrap())), "5");
    }

    #[test]
    fn signed_saturating_ops() {
        let vs = TableValueSet::signed_saturating();
        let m = vs.parse_value("-1").unwrap();
        let p = vs.parse_value("1").unwrap();
        assert!(vs.is_zero(&vs.plus(&p, &m)));
        assert_eq!(vs.value_name(&vs.times(&m, &m)), "1");
        assert_eq!(vs.value_name(&vs.plus(&p, &p)), "1");
    }

    #[test]
    fn duplicate_carrier_element_is_rejected() {
        let err = TableValueSet::from_tables(
            "dup",
            &["0", "0"],
            "0",
            "0",
            &[&["0", "0"], &["0", "0"]],
            &[&["0", "0"], &["0", "0"]],
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn builtin_lookup() {
        for name in TableValueSet::BUILTIN_NAMES {
            let vs = TableValueSet::builtin(name).unwrap();
            assert_eq!(vs.id(), name);
        }
        assert!(TableValueSet::builtin("nope").is_none());
    }
}

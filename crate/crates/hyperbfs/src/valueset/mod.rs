//! Value sets: a carrier with binary `plus` and `times` operations and
//! two-sided identities `zero` and `one`. Nothing else is assumed; the
//! checks in this module decide, by exhaustive scan over a finite carrier,
//! which further laws actually hold.

mod enumerate;
mod table;

pub use enumerate::{enumerate_value_sets, EnumeratedValueSets};
pub use table::{IntValueSet, TableValueSet};

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A value set `(V, plus, times, zero, one)`.
///
/// Implementations must guarantee closure of both operations over the
/// carrier; the identity laws are *not* guaranteed by the trait (tables may
/// be deliberately broken) and are decided by [`check_identities`].
pub trait ValueSet {
    type Value: Clone + Eq + Hash + Debug;

    /// Stable identifier used in reports and error messages.
    fn id(&self) -> &str;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn plus(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn times(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// The carrier in enumeration order, or an error when the carrier is
    /// not finite and enumerable.
    fn carrier(&self) -> Result<Vec<Self::Value>>;

    fn value_name(&self, v: &Self::Value) -> String;

    fn parse_value(&self, name: &str) -> Option<Self::Value>;

    fn is_zero(&self, v: &Self::Value) -> bool {
        *v == self.zero()
    }

    fn nonzero_carrier(&self) -> Result<Vec<Self::Value>> {
        Ok(self
            .carrier()?
            .into_iter()
            .filter(|v| !self.is_zero(v))
            .collect())
    }
}

/// Outcome of a single law check: either the law holds, or it fails with a
/// concrete witness (the first violation in carrier enumeration order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Outcome of the seven algebraic checks for one value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyProfile<V> {
    pub zero_sum_free: Verdict<(V, V)>,
    pub zero_divisor_free: Verdict<(V, V)>,
    pub zero_annihilates: Verdict<V>,
    pub plus_assoc: Verdict<(V, V, V)>,
    pub plus_comm: Verdict<(V, V)>,
    pub times_assoc: Verdict<(V, V, V)>,
    pub times_comm: Verdict<(V, V)>,
}

impl<V> PropertyProfile<V> {
    /// Conditions (I)-(III): the exact requirement for one-step BFS validity.
    pub fn bfs_valid(&self) -> bool {
        self.zero_sum_free.holds() && self.zero_divisor_free.holds() && self.zero_annihilates.holds()
    }

    pub fn plus_assoc_comm(&self) -> bool {
        self.plus_assoc.holds() && self.plus_comm.holds()
    }
}

/// Certifies that a value set's `zero` annihilates under `times`, which is
/// what makes skipping zero operands in the sparse product sound.
#[derive(Clone, Debug)]
pub struct AnnihilatorCertificate {
    value_set_id: String,
}

impl AnnihilatorCertificate {
    /// Build a certificate from a freshly computed profile. Refuses when the
    /// annihilator condition fails.
    pub fn from_profile<S: ValueSet>(vs: &S, profile: &PropertyProfile<S::Value>) -> Result<Self> {
        if profile.zero_annihilates.holds() {
            Ok(AnnihilatorCertificate {
                value_set_id: vs.id().to_string(),
            })
        } else {
            Err(Error::NotCertified(vs.id().to_string()))
        }
    }

    /// Recompute the annihilator check and certify. Requires a finite carrier.
    pub fn certify<S: ValueSet>(vs: &S) -> Result<Self> {
        match check_zero_annihilates(vs)? {
            Verdict::Holds => Ok(AnnihilatorCertificate {
                value_set_id: vs.id().to_string(),
            }),
            Verdict::Fails(_) => Err(Error::NotCertified(vs.id().to_string())),
        }
    }

    pub fn value_set_id(&self) -> &str {
        &self.value_set_id
    }

    pub fn covers<S: ValueSet>(&self, vs: &S) -> bool {
        self.value_set_id == vs.id()
    }
}

/// Verify the two identity laws for every carrier element. On failure the
/// error names the violating element and side.
pub fn check_identities<S: ValueSet>(vs: &S) -> Result<()> {
    let carrier = vs.carrier()?;
    let zero = vs.zero();
    let one = vs.one();
    for v in &carrier {
        if vs.plus(&zero, v) != *v {
            return Err(Error::IdentityViolation(format!(
                "plus(0, {n}) != {n} in `{id}`",
                n = vs.value_name(v),
                id = vs.id()
            )));
        }
        if vs.plus(v, &zero) != *v {
            return Err(Error::IdentityViolation(format!(
                "plus({n}, 0) != {n} in `{id}`",
                n = vs.value_name(v),
                id = vs.id()
            )));
        }
        if vs.times(&one, v) != *v {
            return Err(Error::IdentityViolation(format!(
                "times(1, {n}) != {n} in `{id}`",
                n = vs.value_name(v),
                id = vs.id()
            )));
        }
        if vs.times(v, &one) != *v {
            return Err(Error::IdentityViolation(format!(
                "times({n}, 1) != {n} in `{id}`",
                n = vs.value_name(v),
                id = vs.id()
            )));
        }
    }
    Ok(())
}

/// `plus(v, w) = 0` must force `v = w = 0`.
pub fn check_zero_sum_free<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value)>> {
    let carrier = vs.carrier()?;
    let zero = vs.zero();
    for v in &carrier {
        for w in &carrier {
            if vs.plus(v, w) == zero && !(*v == zero && *w == zero) {
                return Ok(Verdict::Fails((v.clone(), w.clone())));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `times(v, w) = 0` must force `v = 0` or `w = 0`.
pub fn check_zero_divisor_free<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value)>> {
    let carrier = vs.carrier()?;
    let zero = vs.zero();
    for v in &carrier {
        for w in &carrier {
            if vs.times(v, w) == zero && *v != zero && *w != zero {
                return Ok(Verdict::Fails((v.clone(), w.clone())));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `times(v, 0) = times(0, v) = 0` for every carrier element.
pub fn check_zero_annihilates<S: ValueSet>(vs: &S) -> Result<Verdict<S::Value>> {
    let carrier = vs.carrier()?;
    let zero = vs.zero();
    for v in &carrier {
        if vs.times(v, &zero) != zero || vs.times(&zero, v) != zero {
            return Ok(Verdict::Fails(v.clone()));
        }
    }
    Ok(Verdict::Holds)
}

fn check_assoc<S: ValueSet>(
    vs: &S,
    op: impl Fn(&S, &S::Value, &S::Value) -> S::Value,
) -> Result<Verdict<(S::Value, S::Value, S::Value)>> {
    let carrier = vs.carrier()?;
    for a in &carrier {
        for b in &carrier {
            for c in &carrier {
                if op(vs, &op(vs, a, b), c) != op(vs, a, &op(vs, b, c)) {
                    return Ok(Verdict::Fails((a.clone(), b.clone(), c.clone())));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

fn check_comm<S: ValueSet>(
    vs: &S,
    op: impl Fn(&S, &S::Value, &S::Value) -> S::Value,
) -> Result<Verdict<(S::Value, S::Value)>> {
    let carrier = vs.carrier()?;
    for a in &carrier {
        for b in &carrier {
            if op(vs, a, b) != op(vs, b, a) {
                return Ok(Verdict::Fails((a.clone(), b.clone())));
            }
        }
    }
    Ok(Verdict::Holds)
}

pub fn check_plus_assoc<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value, S::Value)>> {
    check_assoc(vs, S::plus)
}

pub fn check_plus_comm<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value)>> {
    check_comm(vs, S::plus)
}

pub fn check_times_assoc<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value, S::Value)>> {
    check_assoc(vs, S::times)
}

pub fn check_times_comm<S: ValueSet>(vs: &S) -> Result<Verdict<(S::Value, S::Value)>> {
    check_comm(vs, S::times)
}

/// Run all seven checks.
pub fn profile<S: ValueSet>(vs: &S) -> Result<PropertyProfile<S::Value>> {
    Ok(PropertyProfile {
        zero_sum_free: check_zero_sum_free(vs)?,
        zero_divisor_free: check_zero_divisor_free(vs)?,
        zero_annihilates: check_zero_annihilates(vs)?,
        plus_assoc: check_plus_assoc(vs)?,
        plus_comm: check_plus_comm(vs)?,
        times_assoc: check_times_assoc(vs)?,
        times_comm: check_times_comm(vs)?,
    })
}

//! Associative arrays over totally ordered key spaces, and the array
//! product whose inner sum is a right-associative `plus`-fold in key order.
//!
//! The fold order matters: `plus` is not assumed associative or commutative,
//! so two arrays that are equal as maps can still produce different products
//! under different key orderings.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::valueset::{AnnihilatorCertificate, ValueSet};

/// A finite, totally ordered set of opaque keys. The ordering is the listing
/// order; two spaces over the same keys in different orders are distinct.
#[derive(Clone, Debug)]
pub struct KeySpace {
    inner: Arc<KeySpaceInner>,
}

#[derive(Debug)]
struct KeySpaceInner {
    keys: Vec<String>,
    index: HashMap<String, usize>,
}

impl KeySpace {
    pub fn new<I, K>(keys: I) -> Result<Self>
    where
        I: IntoIterator<Item = K>,
        K: Into<String>,
    {
        let keys: Vec<String> = keys.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(keys.len());
        for (i, k) in keys.iter().enumerate() {
            if index.insert(k.clone(), i).is_some() {
                return Err(Error::Parse {
                    location: "key space".to_string(),
                    message: format!("duplicate key `{k}`"),
                });
            }
        }
        Ok(KeySpace {
            inner: Arc::new(KeySpaceInner { keys, index }),
        })
    }

    pub fn keys(&self) -> &[String] {
        &self.inner.keys
    }

    pub fn len(&self) -> usize {
        self.inner.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.keys.is_empty()
    }

    pub fn contains(&self, key: &str) -> bool {
        self.inner.index.contains_key(key)
    }

    pub fn position(&self, key: &str) -> Option<usize> {
        self.inner.index.get(key).copied()
    }

    /// Same keys in the same order.
    pub fn same_ordering(&self, other: &KeySpace) -> bool {
        self.inner.keys == other.inner.keys
    }

    /// Same keys, ordering ignored.
    pub fn same_set(&self, other: &KeySpace) -> bool {
        self.len() == other.len() && self.inner.keys.iter().all(|k| other.contains(k))
    }
}

impl PartialEq for KeySpace {
    fn eq(&self, other: &Self) -> bool {
        self.same_ordering(other)
    }
}

impl Eq for KeySpace {}

/// A sparse map from (row key, column key) to values; absent entries read
/// as the value set's `0`. Explicitly stored zeros are permitted and mean
/// the same thing as absence.
#[derive(Clone, Debug)]
pub struct AssociativeArray<V> {
    rows: KeySpace,
    cols: KeySpace,
    entries: BTreeMap<(String, String), V>,
}

impl<V: Clone + Eq> AssociativeArray<V> {
    pub fn new(rows: KeySpace, cols: KeySpace) -> Self {
        AssociativeArray {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(rows: KeySpace, cols: KeySpace, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, String, V)>,
    {
        let mut arr = Self::new(rows, cols);
        for (r, c, v) in entries {
            arr.set(&r, &c, v)?;
        }
        Ok(arr)
    }

    pub fn rows(&self) -> &KeySpace {
        &self.rows
    }

    pub fn cols(&self) -> &KeySpace {
        &self.cols
    }

    fn check_keys(&self, r: &str, c: &str) -> Result<()> {
        if !self.rows.contains(r) {
            return Err(Error::KeyDomain {
                key: r.to_string(),
                context: "array rows".to_string(),
            });
        }
        if !self.cols.contains(c) {
            return Err(Error::KeyDomain {
                key: c.to_string(),
                context: "array columns".to_string(),
            });
        }
        Ok(())
    }

    pub fn set(&mut self, r: &str, c: &str, v: V) -> Result<()> {
        self.check_keys(r, c)?;
        self.entries.insert((r.to_string(), c.to_string()), v);
        Ok(())
    }

    /// Stored entry, if any. Keys are checked against the key spaces.
    pub fn get(&self, r: &str, c: &str) -> Result<Option<&V>> {
        self.check_keys(r, c)?;
        Ok(self.entries.get(&(r.to_string(), c.to_string())))
    }

    /// Stored value, or `0` when absent.
    pub fn read<S>(&self, vs: &S, r: &str, c: &str) -> Result<V>
    where
        S: ValueSet<Value = V>,
    {
        Ok(self.get(r, c)?.cloned().unwrap_or_else(|| vs.zero()))
    }

    pub fn stored_entries(&self) -> impl Iterator<Item = (&str, &str, &V)> {
        self.entries.iter().map(|((r, c), v)| (r.as_str(), c.as_str(), v))
    }

    pub fn stored_len(&self) -> usize {
        self.entries.len()
    }

    /// Row-major dense copy with `zero` at absent positions.
    fn to_dense(&self, zero: &V) -> Vec<V> {
        let nc = self.cols.len();
        let mut dense = vec![zero.clone(); self.rows.len() * nc];
        for ((r, c), v) in &self.entries {
            let ri = self.rows.position(r).expect("entry key in row space");
            let ci = self.cols.position(c).expect("entry key in column space");
            dense[ri * nc + ci] = v.clone();
        }
        dense
    }

    /// Row-major dense copy holding only stored nonzero entries.
    fn to_dense_nonzero(&self, zero: &V) -> Vec<Option<V>> {
        let nc = self.cols.len();
        let mut dense = vec![None; self.rows.len() * nc];
        for ((r, c), v) in &self.entries {
            if v == zero {
                continue;
            }
            let ri = self.rows.position(r).expect("entry key in row space");
            let ci = self.cols.position(c).expect("entry key in column space");
            dense[ri * nc + ci] = Some(v.clone());
        }
        dense
    }

    /// Rows and columns swapped, entries mirrored. An involution.
    pub fn transpose(&self) -> AssociativeArray<V> {
        let entries = self
            .entries
            .iter()
            .map(|((r, c), v)| ((c.clone(), r.clone()), v.clone()))
            .collect();
        AssociativeArray {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries,
        }
    }

    /// Same entry map under new orderings of the same key sets. Changes
    /// nothing but the fold order of subsequent products.
    pub fn reorder(&self, new_rows: KeySpace, new_cols: KeySpace) -> Result<AssociativeArray<V>> {
        if !new_rows.same_set(&self.rows) {
            return Err(Error::NotAPermutation("row keys differ".to_string()));
        }
        if !new_cols.same_set(&self.cols) {
            return Err(Error::NotAPermutation("column keys differ".to_string()));
        }
        Ok(AssociativeArray {
            rows: new_rows,
            cols: new_cols,
            entries: self.entries.clone(),
        })
    }
}

/// Right-associative fold of `plus` over the values in the given order:
/// `v1 + (v2 + (... + vn))`. The empty fold is `0`.
pub fn fold_plus<S: ValueSet>(vs: &S, values: &[S::Value]) -> S::Value {
    match values.split_last() {
        None => vs.zero(),
        Some((last, rest)) => rest
            .iter()
            .rev()
            .fold(last.clone(), |acc, v| vs.plus(v, &acc)),
    }
}

fn check_contraction<V>(a: &AssociativeArray<V>, b: &AssociativeArray<V>) -> Result<()> {
    if !a.cols.same_set(&b.rows) {
        return Err(Error::Contraction {
            reason: "key sets differ".to_string(),
        });
    }
    if !a.cols.same_ordering(&b.rows) {
        return Err(Error::Contraction {
            reason: "key orderings differ".to_string(),
        });
    }
    Ok(())
}

/// The array product `C = A plus.times B`, folding over *every* key of the
/// contracted space in its order. Zero operands are not skipped: when the
/// value set is non-annihilating, `times` with `0` can produce nonzero
/// values, and those terms are part of the defined result. The result stores
/// no zeros.
pub fn array_product_strict<S: ValueSet>(
    vs: &S,
    a: &AssociativeArray<S::Value>,
    b: &AssociativeArray<S::Value>,
) -> Result<AssociativeArray<S::Value>> {
    check_contraction(a, b)?;
    let zero = vs.zero();
    let (nr, nk, nc) = (a.rows.len(), a.cols.len(), b.cols.len());
    let dense_a = a.to_dense(&zero);
    let dense_b = b.to_dense(&zero);
    let mut out = AssociativeArray::new(a.rows.clone(), b.cols.clone());
    let mut terms = Vec::with_capacity(nk);
    for (ri, r) in a.rows.keys().iter().enumerate() {
        for (ci, c) in b.cols.keys().iter().enumerate() {
            terms.clear();
            for k in 0..nk {
                terms.push(vs.times(&dense_a[ri * nk + k], &dense_b[k * nc + ci]));
            }
            let v = fold_plus(vs, &terms);
            if v != zero {
                out.entries.insert((r.clone(), c.clone()), v);
            }
        }
    }
    debug_assert_eq!(nr, a.rows.len());
    Ok(out)
}

/// Certified fast path: folds only the keys where both operands are stored
/// and nonzero, in contracted key order. Sound exactly when `0` annihilates
/// under `times` (dropped terms are then `0`, and `0` is a `plus`-identity
/// even under right-nesting), which the certificate attests.
pub fn array_product_sparse<S: ValueSet>(
    vs: &S,
    cert: &AnnihilatorCertificate,
    a: &AssociativeArray<S::Value>,
    b: &AssociativeArray<S::Value>,
) -> Result<AssociativeArray<S::Value>> {
    if !cert.covers(vs) {
        return Err(Error::NotCertified(vs.id().to_string()));
    }
    check_contraction(a, b)?;
    let zero = vs.zero();
    let (nk, nc) = (a.cols.len(), b.cols.len());
    let sparse_a = a.to_dense_nonzero(&zero);
    let sparse_b = b.to_dense_nonzero(&zero);
    let mut out = AssociativeArray::new(a.rows.clone(), b.cols.clone());
    let mut terms = Vec::with_capacity(nk);
    for (ri, r) in a.rows.keys().iter().enumerate() {
        for (ci, c) in b.cols.keys().iter().enumerate() {
            terms.clear();
            for k in 0..nk {
                if let (Some(left), Some(right)) = (&sparse_a[ri * nk + k], &sparse_b[k * nc + ci]) {
                    terms.push(vs.times(left, right));
                }
            }
            let v = fold_plus(vs, &terms);
            if v != zero {
                out.entries.insert((r.clone(), c.clone()), v);
            }
        }
    }
    Ok(out)
}

/// Equality as maps: key sets must match as sets and every position must
/// read the same value (absent = `0`). Orderings are ignored.
pub fn equal_as_map<S: ValueSet>(
    vs: &S,
    a: &AssociativeArray<S::Value>,
    b: &AssociativeArray<S::Value>,
) -> bool {
    if !a.rows.same_set(&b.rows) || !a.cols.same_set(&b.cols) {
        return false;
    }
    let zero = vs.zero();
    let dense_a = a.to_dense(&zero);
    let dense_b = b.to_dense(&zero);
    let (na_cols, nb_cols) = (a.cols.len(), b.cols.len());
    for (ri, r) in a.rows.keys().iter().enumerate() {
        let bri = b.rows.position(r).expect("same row set");
        for (ci, c) in a.cols.keys().iter().enumerate() {
            let bci = b.cols.position(c).expect("same column set");
            if dense_a[ri * na_cols + ci] != dense_b[bri * nb_cols + bci] {
                return false;
            }
        }
    }
    true
}

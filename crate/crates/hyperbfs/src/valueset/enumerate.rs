use crate::error::{Error, Result};

use super::table::TableValueSet;

/// Canonical carrier names for enumerated value sets: `0`, `1`, then `x`, `y`.
fn canonical_names(size: usize) -> Vec<String> {
    const EXTRA: [&str; 2] = ["x", "y"];
    let mut names = vec!["0".to_string(), "1".to_string()];
    names.extend(EXTRA[..size - 2].iter().map(|s| s.to_string()));
    names
}

/// Positions in the `plus` table not fixed by the `0`-identity: both
/// operands nonzero, row-major order.
fn plus_free_positions(size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a != 0 && b != 0 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Positions in the `times` table not fixed by the `1`-identity.
fn times_free_positions(size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a != 1 && b != 1 {
                out.push((a, b));
            }
        }
    }
    out
}

fn digits_to_string(digits: &[usize]) -> String {
    digits.iter().map(|d| d.to_string()).collect()
}

/// All value sets on the canonical carrier of the given size where element
/// `0` is a two-sided `plus`-identity and `1` a two-sided `times`-identity.
/// Deterministic order: the free `plus` entries count up first (base-`size`,
/// last position fastest), then the free `times` entries.
pub fn enumerate_value_sets(carrier_size: usize) -> Result<EnumeratedValueSets> {
    if !(2..=4).contains(&carrier_size) {
        return Err(Error::CarrierSizeOutOfRange(carrier_size, 2, 4));
    }
    let free = (carrier_size - 1) * (carrier_size - 1);
    let per_table = (carrier_size as u64).pow(free as u32);
    Ok(EnumeratedValueSets {
        size: carrier_size,
        total: per_table * per_table,
        per_table,
        next: 0,
    })
}

pub struct EnumeratedValueSets {
    size: usize,
    total: u64,
    per_table: u64,
    next: u64,
}

impl EnumeratedValueSets {
    pub fn total(&self) -> u64 {
        self.total
    }

    fn build(&self, index: u64) -> TableValueSet {
        let n = self.size;
        let plus_code = index / self.per_table;
        let times_code = index % self.per_table;
        let free = (n - 1) * (n - 1);
        let decode = |mut code: u64| -> Vec<usize> {
            let mut digits = vec![0usize; free];
            for slot in (0..free).rev() {
                digits[slot] = (code % n as u64) as usize;
                code /= n as u64;
            }
            digits
        };
        let plus_digits = decode(plus_code);
        let times_digits = decode(times_code);

        let mut plus = vec![0usize; n * n];
        for a in 0..n {
            // identity row/column
            plus[b_index(n, 0, a)] = a;
            plus[b_index(n, a, 0)] = a;
        }
        for (slot, &(a, b)) in plus_free_positions(n).iter().enumerate() {
            plus[b_index(n, a, b)] = plus_digits[slot];
        }
        let mut times = vec![0usize; n * n];
        for a in 0..n {
            times[b_index(n, 1, a)] = a;
            times[b_index(n, a, 1)] = a;
        }
        for (slot, &(a, b)) in times_free_positions(n).iter().enumerate() {
            times[b_index(n, a, b)] = times_digits[slot];
        }

        let id = format!(
            "vs{n}-{}-{}",
            digits_to_string(&plus_digits),
            digits_to_string(&times_digits)
        );
        TableValueSet::from_indices(id, canonical_names(n), 0, 1, plus, times)
    }
}

fn b_index(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

impl Iterator for EnumeratedValueSets {
    type Item = TableValueSet;

    fn next(&mut self) -> Option<TableValueSet> {
        if self.next >= self.total {
            return None;
        }
        let vs = self.build(self.next);
        self.next += 1;
        Some(vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valueset::{check_identities, ValueSet};

    #[test]
    fn size_2_yields_four_sets_including_boolean_once() {
        let sets: Vec<_> = enumerate_value_sets(2).unwrap().collect();
        assert_eq!(sets.len(), 4);
        let boolean = TableValueSet::boolean();
        let matches = sets
            .iter()
            .filter(|vs| {
                vs.plus_table() == boolean.plus_table()
                    && vs.times_table() == boolean.times_table()
            })
            .count();
        assert_eq!(matches, 1);
    }

    #[test]
    fn size_3_yields_6561_sets_with_identities() {
        let mut count = 0u64;
        for vs in enumerate_value_sets(3).unwrap() {
            check_identities(&vs).unwrap();
            count += 1;
        }
        assert_eq!(count, 6561);
    }

    #[test]
    fn out_of_range_sizes_are_rejected() {
        assert!(enumerate_value_sets(1).is_err());
        assert!(enumerate_value_sets(5).is_err());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<String> = enumerate_value_sets(3)
            .unwrap()
            .take(50)
            .map(|vs| vs.id().to_string())
            .collect();
        let b: Vec<String> = enumerate_value_sets(3)
            .unwrap()
            .take(50)
            .map(|vs| vs.id().to_string())
            .collect();
        assert_eq!(a, b);
        assert_eq!(a[0], "vs3-0000-0000");
    }
}

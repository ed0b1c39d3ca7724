//! Exact binomial coefficients from a shared Pascal-triangle cache.
//!
//! Rows are filled in order under a write lock and never mutated afterwards,
//! so concurrent readers always observe the same values no matter which
//! thread extended the triangle.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

type Row = Arc<[BigInt]>;

fn cache() -> &'static RwLock<Vec<Row>> {
    static ROWS: OnceLock<RwLock<Vec<Row>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![Arc::from(vec![BigInt::one()])]))
}

/// Row `n` of Pascal's triangle: `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: usize) -> Row {
    {
        let rows = cache().read().expect("pascal cache poisoned");
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = cache().write().expect("pascal cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 present").clone();
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        rows.push(Arc::from(next));
    }
    rows[n].clone()
}

pub fn binomial(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(binomial_row(n)[k].clone())
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

//! Exact binomial coefficients and ordered combination walks.

/// `C(n, k)` in 128-bit arithmetic, or `None` if the result does not fit.
///
/// Each step multiplies by `n - i` and divides by `i + 1` after cancelling the
/// common factor, so intermediates never exceed the final value by more than
/// a factor of `k`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let mut num = (n - i) as u128;
        let mut den = (i + 1) as u128;
        let g = gcd(acc, den);
        let reduced = acc / g;
        den /= g;
        let g = gcd(num, den);
        num /= g;
        den /= g;
        // `den` is now 1: acc * num / den was an integer and gcd(acc/g, den) = 1.
        debug_assert_eq!(den, 1);
        acc = reduced.checked_mul(num)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Memoized column `C(·, k)` for a fixed `k`, grown on demand.
#[derive(Clone, Debug)]
pub struct BinomialColumn {
    k: u64,
    values: Vec<Option<u128>>,
}

impl BinomialColumn {
    pub fn new(k: usize) -> Self {
        BinomialColumn {
            k: k as u64,
            values: Vec::new(),
        }
    }

    /// Pre-fills `C(n, k)` for every `n <= max_n`.
    pub fn with_capacity(k: usize, max_n: usize) -> Self {
        let mut col = Self::new(k);
        col.extend_to(max_n);
        col
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let i = self.values.len() as u64;
            self.values.push(binomial(i, self.k));
        }
    }

    pub fn get(&mut self, n: usize) -> Option<u128> {
        self.extend_to(n);
        self.values[n]
    }

    /// Lookup without growing; falls back to direct computation past the table.
    pub fn lookup(&self, n: usize) -> Option<u128> {
        match self.values.get(n) {
            Some(v) => *v,
            None => binomial(n as u64, self.k),
        }
    }
}

/// Calls `visit` with every `k`-combination of `0..n` as ascending positions,
/// in lexicographic order. `visit` returning `false` stops the walk early.
pub fn for_each_combination<F>(n: usize, k: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

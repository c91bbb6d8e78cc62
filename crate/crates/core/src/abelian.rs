//! Finite abelian groups presented by addition tables, with classification
//! into cyclic invariant factors, plus the partial "window of the integers"
//! tables produced by finitely windowed examples.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An addition table on `0..n`, possibly partial. `zero` is the neutral
/// element. Windowed structures leave out-of-window sums undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub n: usize,
    pub zero: usize,
    pub add: Vec<Option<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("addition table is not total")]
    Partial,
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("partial table does not match a window of the integers")]
    NotAWindow,
}

/// What a quotient's addition table turned out to be.
///
/// Windowed tables are reported as such rather than being passed off as the
/// integers: the window is an artifact of the finite encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupPresentation {
    /// Invariant factors `d1 | d2 | ...`; empty list is the trivial group.
    Finite { invariant_factors: Vec<u64> },
    /// A window `{-w..w}` of the integers with a designated generator class.
    WindowedZ { window: i64, generator: usize },
}

impl GroupPresentation {
    pub fn is_trivial(&self) -> bool {
        matches!(self, GroupPresentation::Finite { invariant_factors } if invariant_factors.is_empty())
    }

    /// Convenience for assertions in tests: `[2]` is Z/2, etc.
    pub fn is_cyclic(&self, order: u64) -> bool {
        matches!(self, GroupPresentation::Finite { invariant_factors }
            if invariant_factors.as_slice() == [order])
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            GroupPresentation::Finite { invariant_factors } => {
                Some(invariant_factors.iter().product())
            }
            GroupPresentation::WindowedZ { .. } => None,
        }
    }
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupPresentation::Finite { invariant_factors } if invariant_factors.is_empty() => {
                write!(f, "0")
            }
            GroupPresentation::Finite { invariant_factors } => {
                let parts: Vec<String> =
                    invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            GroupPresentation::WindowedZ { window, .. } => {
                write!(f, "Z (windowed at {window})")
            }
        }
    }
}

impl GroupTable {
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.add[a * self.n + b]
    }

    pub fn is_total(&self) -> bool {
        self.add.iter().all(|e| e.is_some())
    }

    /// Check the abelian group laws on a total table.
    pub fn check_group(&self) -> Result<(), GroupError> {
        if !self.is_total() {
            return Err(GroupError::Partial);
        }
        let get = |a: usize, b: usize| self.get(a, b).unwrap();
        for a in 0..self.n {
            if get(a, self.zero) != a || get(self.zero, a) != a {
                return Err(GroupError::NotAGroup(format!("unit fails at {a}")));
            }
            if !(0..self.n).any(|b| get(a, b) == self.zero) {
                return Err(GroupError::NotAGroup(format!("no inverse for {a}")));
            }
            for b in 0..self.n {
                if get(a, b) != get(b, a) {
                    return Err(GroupError::NotAGroup(format!("not commutative at ({a},{b})")));
                }
                for c in 0..self.n {
                    if get(get(a, b), c) != get(a, get(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// k·a by repeated addition (total tables only).
    fn scale(&self, k: u64, a: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.get(acc, a).expect("scale on partial table");
        }
        acc
    }

    /// k·a for a signed scalar, reducing k modulo the element order first.
    pub fn scale_signed(&self, k: i64, a: usize) -> Option<usize> {
        let ord = self.element_order(a) as i64;
        let k = k.rem_euclid(ord) as u64;
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.get(acc, a)?;
        }
        Some(acc)
    }

    pub fn neg(&self, a: usize) -> Option<usize> {
        (0..self.n).find(|&b| self.get(a, b) == Some(self.zero))
    }

    /// Order of an element in a total group table.
    pub fn element_order(&self, a: usize) -> u64 {
        let mut acc = a;
        let mut k = 1u64;
        while acc != self.zero {
            acc = self.get(acc, a).unwrap();
            k += 1;
        }
        k
    }

    /// Invariant factors of a total abelian group table, via the sizes of the
    /// kernels of multiplication by prime powers.
    pub fn invariant_factors(&self) -> Result<Vec<u64>, GroupError> {
        self.check_group()?;
        let n = self.n as u64;
        if n == 1 {
            return Ok(vec![]);
        }
        let mut prime_powers: Vec<Vec<u64>> = Vec::new(); // per prime: multiset of p^k factors
        let mut rem = n;
        let mut p = 2u64;
        while rem > 1 {
            if rem % p == 0 {
                while rem % p == 0 {
                    rem /= p;
                }
                // Count elements killed by p^k for growing k.
                let mut kernel_logs = vec![0u32]; // log_p |ker p^0| = 0
                let mut pk = 1u64;
                loop {
                    pk *= p;
                    let ker = (0..self.n).filter(|&a| self.scale(pk, a) == self.zero).count();
                    let mut log = 0u32;
                    let mut k = ker as u64;
                    while k > 1 {
                        debug_assert_eq!(k % p, 0);
                        k /= p;
                        log += 1;
                    }
                    if log == *kernel_logs.last().unwrap() {
                        break;
                    }
                    kernel_logs.push(log);
                }
                // factors of order >= p^k: n_k - n_{k-1}
                let depth = kernel_logs.len() - 1;
                let at_least: Vec<u32> = (1..=depth)
                    .map(|k| kernel_logs[k] - kernel_logs[k - 1])
                    .collect();
                let mut factors = Vec::new();
                for k in 1..=depth {
                    let exactly = at_least[k - 1] - if k < depth { at_least[k] } else { 0 };
                    for _ in 0..exactly {
                        factors.push(p.pow(k as u32));
                    }
                }
                prime_powers.push(factors);
            }
            p += 1;
        }
        // Merge largest prime powers across primes into invariant factors.
        for factors in &mut prime_powers {
            factors.sort_unstable();
        }
        let mut invariant = Vec::new();
        loop {
            let mut d = 1u64;
            for factors in &mut prime_powers {
                if let Some(f) = factors.pop() {
                    d *= f;
                }
            }
            if d == 1 {
                break;
            }
            invariant.push(d);
        }
        invariant.reverse();
        Ok(invariant)
    }

    /// Classify the table: a finite abelian group if total, otherwise try to
    /// match a symmetric window of the integers.
    pub fn presentation(&self) -> Result<GroupPresentation, GroupError> {
        Ok(match self.classify()? {
            Classification::Finite { invariant_factors } => {
                GroupPresentation::Finite { invariant_factors }
            }
            Classification::Windowed { window, generator, .. } => {
                GroupPresentation::WindowedZ { window, generator }
            }
        })
    }

    /// Like [`GroupTable::presentation`], but a windowed table also reports
    /// the integer value assigned to each element.
    pub fn classify(&self) -> Result<Classification, GroupError> {
        if self.is_total() {
            return Ok(Classification::Finite {
                invariant_factors: self.invariant_factors()?,
            });
        }
        self.windowed_classification()
    }

    /// Match a partial table against `{-w..w}` with truncated addition: every
    /// element must be `k`-fold sum of a single generator (or its negative),
    /// with sums defined exactly when they stay within the window.
    fn windowed_classification(&self) -> Result<Classification, GroupError> {
        if self.n % 2 == 0 {
            return Err(GroupError::NotAWindow);
        }
        let w = (self.n as i64 - 1) / 2;
        // Try each candidate generator g, assigning the value map
        // a -> integer via repeated addition of g.
        'cand: for g in 0..self.n {
            if g == self.zero {
                continue;
            }
            let mut value = vec![None::<i64>; self.n];
            value[self.zero] = Some(0);
            let mut cur = self.zero;
            for k in 1..=w {
                match self.get(cur, g) {
                    Some(nxt) if value[nxt].is_none() => {
                        value[nxt] = Some(k);
                        cur = nxt;
                    }
                    _ => continue 'cand,
                }
            }
            let Some(neg) = self.neg(g) else { continue };
            let mut cur = self.zero;
            for k in 1..=w {
                match self.get(cur, neg) {
                    Some(nxt) if value[nxt].is_none() => {
                        value[nxt] = Some(-k);
                        cur = nxt;
                    }
                    _ => continue 'cand,
                }
            }
            if value.iter().any(|v| v.is_none()) {
                continue;
            }
            let value: Vec<i64> = value.into_iter().map(|v| v.unwrap()).collect();
            // Full table must now be truncated integer addition.
            for a in 0..self.n {
                for b in 0..self.n {
                    let s = value[a] + value[b];
                    match self.get(a, b) {
                        Some(c) => {
                            if s.abs() > w || value[c] != s {
                                continue 'cand;
                            }
                        }
                        None => {
                            if s.abs() <= w {
                                continue 'cand;
                            }
                        }
                    }
                }
            }
            return Ok(Classification::Windowed {
                window: w,
                generator: g,
                values: value,
            });
        }
        Err(GroupError::NotAWindow)
    }
}

/// Detailed classification of a group table; the windowed case carries the
/// integer value of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Finite { invariant_factors: Vec<u64> },
    Windowed { window: i64, generator: usize, values: Vec<i64> },
}

/// Build the addition table of a product of cyclic groups, elements in
/// ascending mixed-radix order (last factor varies fastest).
pub fn cyclic_product_table(factors: &[u64]) -> GroupTable {
    let n: u64 = factors.iter().product::<u64>().max(1);
    let n = n as usize;
    let decode = |mut i: usize| -> Vec<u64> {
        let mut digits = vec![0u64; factors.len()];
        for (d, &f) in digits.iter_mut().zip(factors).rev() {
            *d = (i as u64) % f;
            i /= f as usize;
        }
        digits
    };
    let encode = |digits: &[u64]| -> usize {
        let mut i = 0usize;
        for (d, &f) in digits.iter().zip(factors) {
            i = i * f as usize + *d as usize;
        }
        i
    };
    let mut add = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            let (da, db) = (decode(a), decode(b));
            let sum: Vec<u64> = da
                .iter()
                .zip(&db)
                .zip(factors)
                .map(|((x, y), &f)| (x + y) % f)
                .collect();
            add[a * n + b] = Some(encode(&sum));
        }
    }
    GroupTable { n, zero: 0, add }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_small_groups() {
        assert_eq!(cyclic_product_table(&[]).invariant_factors().unwrap(), Vec::<u64>::new());
        assert_eq!(cyclic_product_table(&[6]).invariant_factors().unwrap(), vec![6]);
        assert_eq!(cyclic_product_table(&[2, 2]).invariant_factors().unwrap(), vec![2, 2]);
        assert_eq!(cyclic_product_table(&[2, 4]).invariant_factors().unwrap(), vec![2, 4]);
        // Z/2 x Z/3 is cyclic of order 6.
        assert_eq!(cyclic_product_table(&[2, 3]).invariant_factors().unwrap(), vec![6]);
        assert_eq!(
            cyclic_product_table(&[2, 6]).invariant_factors().unwrap(),
            vec![2, 6]
        );
        assert_eq!(
            cyclic_product_table(&[4, 6]).invariant_factors().unwrap(),
            vec![2, 12]
        );
    }

    fn window_table(w: i64) -> GroupTable {
        let n = (2 * w + 1) as usize;
        let mut add = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let s = (a as i64 - w) + (b as i64 - w);
                if s.abs() <= w {
                    add[a * n + b] = Some((s + w) as usize);
                }
            }
        }
        GroupTable {
            n,
            zero: w as usize,
            add,
        }
    }

    #[test]
    fn detects_integer_window() {
        let t = window_table(4);
        match t.presentation().unwrap() {
            GroupPresentation::WindowedZ { window, generator } => {
                assert_eq!(window, 4);
                // generator maps to +-1
                assert!(generator == 5 || generator == 3);
            }
            other => panic!("expected windowed Z, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_window_partial_table() {
        let mut t = window_table(2);
        t.add[0] = Some(0); // (-2) + (-2) := -2, not a truncation pattern
        assert_eq!(t.presentation(), Err(GroupError::NotAWindow));
    }
}

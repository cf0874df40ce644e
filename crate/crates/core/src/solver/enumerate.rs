use crate::error::{Error, Result};
use crate::packed::FlipClosure;
use crate::triangulation::Triangulation;

/// Largest vertex count accepted by flip-closure enumeration.
pub const MAX_ENUMERATION_N: usize = 9;

pub(crate) fn check_range(n: usize) -> Result<()> {
    if (4..=MAX_ENUMERATION_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::NOutOfRange { n, min: 4, max: MAX_ENUMERATION_N })
    }
}

/// Every labeled triangulation on `1..=n`, in breadth-first order of the
/// flip graph from [`Triangulation::stacked`].
pub struct Enumeration {
    closure: FlipClosure,
    yielded: usize,
}

impl Enumeration {
    /// Triangulations yielded so far.
    pub fn yielded(&self) -> usize {
        self.yielded
    }

    /// Distinct triangulations discovered so far, including queued ones.
    pub fn discovered(&self) -> usize {
        self.closure.discovered()
    }
}

impl Iterator for Enumeration {
    type Item = Result<Triangulation>;

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.closure.next()?;
        self.yielded += 1;
        Some(item.and_then(|p| p.to_triangulation(self.closure.table())))
    }
}

/// Flip closure from the stacked triangulation. Yields an error and stops
/// once more than `budget` distinct triangulations have been discovered.
pub fn enumerate_triangulations(n: usize, budget: usize) -> Result<Enumeration> {
    check_range(n)?;
    let start = Triangulation::stacked(n)?;
    Ok(Enumeration { closure: FlipClosure::new(&start, budget), yielded: 0 })
}

/// Number of labeled triangulations on `1..=n`.
pub fn count_triangulations(n: usize, budget: usize) -> Result<u64> {
    check_range(n)?;
    let start = Triangulation::stacked(n)?;
    let mut count = 0;
    for state in FlipClosure::new(&start, budget) {
        state?;
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_triangulations(4, usize::MAX).unwrap(), 1);
        assert_eq!(count_triangulations(5, usize::MAX).unwrap(), 10);
    }

    #[test]
    fn range_guard() {
        assert!(matches!(count_triangulations(3, 10), Err(Error::NOutOfRange { .. })));
        assert!(matches!(enumerate_triangulations(10, 10), Err(Error::NOutOfRange { .. })));
    }

    #[test]
    fn enumeration_yields_valid_distinct_graphs() {
        let all: Vec<Triangulation> = enumerate_triangulations(6, usize::MAX)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        let keys: std::collections::BTreeSet<Vec<u8>> = all.iter().map(|g| g.canonical_key()).collect();
        assert_eq!(keys.len(), all.len());
        assert_eq!(all[0], Triangulation::stacked(6).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let mut it = enumerate_triangulations(6, 20).unwrap();
        assert!(it.any(|r| matches!(r, Err(Error::BudgetExceeded { budget: 20 }))));
        assert!(matches!(count_triangulations(6, 20), Err(Error::BudgetExceeded { .. })));
    }
}

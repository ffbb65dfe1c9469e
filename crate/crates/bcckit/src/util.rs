//! Small combinatorial helpers shared across modules.

use crate::elements::{ElemSet, Element};

/// Binomial coefficient as i64.  Inputs stay tiny here (n <= 20 plus a bit).
pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Calls `f` once per k-subset of `ids`, as a set.
pub fn for_each_subset_of_size(ids: &[Element], k: usize, f: &mut impl FnMut(ElemSet)) {
    fn rec(
        ids: &[Element],
        k: usize,
        start: usize,
        acc: ElemSet,
        f: &mut impl FnMut(ElemSet),
    ) {
        if k == 0 {
            f(acc);
            return;
        }
        // not enough elements left to finish the subset
        if ids.len() - start < k {
            return;
        }
        for i in start..=ids.len() - k {
            rec(ids, k - 1, i + 1, acc.with(ids[i]), f);
        }
    }
    rec(ids, k, 0, ElemSet::EMPTY, f);
}

/// Calls `f` for every permutation of `items` in lexicographic order.
/// Stops early when `f` returns false.
pub fn for_each_permutation_lex<T: Clone + Ord>(items: &[T], f: &mut impl FnMut(&[T]) -> bool) {
    let mut pool: Vec<T> = items.to_vec();
    pool.sort();
    let mut current: Vec<T> = Vec::with_capacity(pool.len());
    let mut used = vec![false; pool.len()];
    rec(&pool, &mut used, &mut current, f);

    fn rec<T: Clone + Ord>(
        pool: &[T],
        used: &mut [bool],
        current: &mut Vec<T>,
        f: &mut impl FnMut(&[T]) -> bool,
    ) -> bool {
        if current.len() == pool.len() {
            return f(current);
        }
        for i in 0..pool.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            current.push(pool[i].clone());
            let keep_going = rec(pool, used, current, f);
            current.pop();
            used[i] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Drops every set that strictly contains another listed set, then dedupes.
/// The result is an inclusion antichain sorted by mask value.
pub fn minimalize_antichain(sets: Vec<ElemSet>) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = Vec::new();
    let mut sorted = sets;
    sorted.sort_by_key(|s| (s.len(), s.mask()));
    for s in sorted {
        if out.iter().any(|kept| kept.is_subset_of(s)) {
            continue;
        }
        out.push(s);
    }
    out.sort_by_key(|s| s.mask());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[u32]) -> ElemSet {
        ElemSet::from_ids(ids).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(7, 0), 1);
    }

    #[test]
    fn subsets_of_size() {
        let ids: Vec<Element> = [1u32, 2, 3, 4].iter().map(|&i| Element(i)).collect();
        let mut seen = Vec::new();
        for_each_subset_of_size(&ids, 2, &mut |s| seen.push(s));
        assert_eq!(seen.len(), 6);
        assert!(seen.contains(&set(&[1, 4])));
    }

    #[test]
    fn lex_permutations() {
        let mut perms = Vec::new();
        for_each_permutation_lex(&[2, 1, 3], &mut |p| {
            perms.push(p.to_vec());
            true
        });
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![1, 2, 3]);
        assert_eq!(perms[5], vec![3, 2, 1]);
    }

    #[test]
    fn permutation_early_stop() {
        let mut count = 0;
        for_each_permutation_lex(&[1, 2, 3, 4], &mut |_| {
            count += 1;
            count < 5
        });
        assert_eq!(count, 5);
    }

    #[test]
    fn antichain_minimalization() {
        let out = minimalize_antichain(vec![
            set(&[1, 2, 3]),
            set(&[2, 3]),
            set(&[4, 5]),
            set(&[2, 3]),
        ]);
        assert_eq!(out, vec![set(&[2, 3]), set(&[4, 5])]);
    }
}

//! Integer partitions and the merge-coarsening order.
//!
//! A partition μ *merge-coarsens* λ when μ is obtained by grouping the
//! parts of λ and summing each group. This is the closure surrogate used
//! by the root-multiplicity membership tests: in a limit of binary forms
//! roots can only collide, so multiplicities merge additively.

use super::FieldError;

/// A weakly decreasing list of positive integers.
pub type Partition = Vec<usize>;

/// Sorts a partition decreasingly, dropping zero parts.
pub fn normalize(parts: &[usize]) -> Partition {
    let mut p: Partition = parts.iter().copied().filter(|&x| x > 0).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// True iff `mu` is obtained from `lambda` by grouping parts and summing
/// each group. Both must be partitions of the same integer.
pub fn merge_coarsening(mu: &[usize], lambda: &[usize]) -> Result<bool, FieldError> {
    let mu = normalize(mu);
    let lambda = normalize(lambda);
    let (s_mu, s_lambda) = (mu.iter().sum::<usize>(), lambda.iter().sum::<usize>());
    if s_mu != s_lambda {
        return Err(FieldError::PartitionTotalMismatch(s_mu, s_lambda));
    }
    if mu.len() > lambda.len() {
        return Ok(false);
    }
    let mut pool = lambda;
    Ok(match_parts(&mu, &mut pool))
}

/// Backtracking search: peel off a subset of `pool` summing to the first
/// target part, recurse on the rest. `pool` is kept sorted decreasingly;
/// equal parts are skipped at the same recursion depth to avoid
/// re-exploring symmetric choices.
fn match_parts(targets: &[usize], pool: &mut Vec<usize>) -> bool {
    let Some((&t, rest)) = targets.split_first() else {
        return pool.is_empty();
    };
    subset_sum_then(t, 0, pool, &mut Vec::new(), rest)
}

fn subset_sum_then(
    remaining: usize,
    from: usize,
    pool: &mut Vec<usize>,
    taken: &mut Vec<usize>,
    rest_targets: &[usize],
) -> bool {
    if remaining == 0 {
        // Subset found; remove it (indices in `taken` are increasing) and recurse.
        let removed: Vec<usize> = taken.iter().rev().map(|&i| pool.remove(i)).collect();
        let ok = match_parts(rest_targets, pool);
        for (&i, v) in taken.iter().zip(removed.iter().rev()) {
            pool.insert(i, *v);
        }
        if ok {
            return true;
        }
        return false;
    }
    let mut i = from;
    while i < pool.len() {
        // Equal parts at the same level lead to identical remainders.
        if i > from && pool[i] == pool[i - 1] {
            i += 1;
            continue;
        }
        if pool[i] <= remaining {
            taken.push(i);
            if subset_sum_then(remaining - pool[i], i + 1, pool, taken, rest_targets) {
                taken.pop();
                return true;
            }
            taken.pop();
        }
        i += 1;
    }
    false
}

/// All distinct coarsenings of `lambda`, by brute-force enumeration of
/// set partitions of its parts. Exponential; intended for tests and
/// small partitions only.
pub fn enumerate_coarsenings(lambda: &[usize]) -> Vec<Partition> {
    let lambda = normalize(lambda);
    let mut out: Vec<Partition> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    enumerate_set_partitions(&lambda, 0, &mut groups, &mut out);
    out.sort();
    out.dedup();
    out
}

fn enumerate_set_partitions(
    parts: &[usize],
    idx: usize,
    groups: &mut Vec<Vec<usize>>,
    out: &mut Vec<Partition>,
) {
    if idx == parts.len() {
        let sums: Vec<usize> = groups.iter().map(|g| g.iter().sum()).collect();
        out.push(normalize(&sums));
        return;
    }
    for gi in 0..groups.len() {
        groups[gi].push(parts[idx]);
        enumerate_set_partitions(parts, idx + 1, groups, out);
        groups[gi].pop();
    }
    groups.push(vec![parts[idx]]);
    enumerate_set_partitions(parts, idx + 1, groups, out);
    groups.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cases() {
        assert!(merge_coarsening(&[3], &[2, 1]).unwrap());
        assert!(merge_coarsening(&[2, 1], &[1, 1, 1]).unwrap());
        assert!(!merge_coarsening(&[2, 2], &[3, 1]).unwrap());
        assert!(merge_coarsening(&[2, 2], &[2, 2]).unwrap());
        assert!(merge_coarsening(&[4], &[1, 1, 1, 1]).unwrap());
        assert!(!merge_coarsening(&[1, 1, 1], &[2, 1]).unwrap());
    }

    #[test]
    fn total_mismatch_is_an_error() {
        assert!(merge_coarsening(&[3], &[1, 1]).is_err());
    }

    #[test]
    fn agrees_with_exhaustive_enumeration_up_to_8() {
        // Every partition of n ≤ 8, pairwise.
        let mut all: Vec<Partition> = Vec::new();
        for n in 1..=8usize {
            let mut stack = vec![(n, n, Vec::new())];
            while let Some((left, max, cur)) = stack.pop() {
                if left == 0 {
                    all.push(cur);
                    continue;
                }
                for next in (1..=left.min(max)).rev() {
                    let mut c = cur.clone();
                    c.push(next);
                    stack.push((left - next, next, c));
                }
            }
        }
        for lambda in &all {
            let reachable = enumerate_coarsenings(lambda);
            let n: usize = lambda.iter().sum();
            for mu in all.iter().filter(|m| m.iter().sum::<usize>() == n) {
                let expected = reachable.contains(mu);
                assert_eq!(
                    merge_coarsening(mu, lambda).unwrap(),
                    expected,
                    "mu={mu:?} lambda={lambda:?}"
                );
            }
        }
    }
}

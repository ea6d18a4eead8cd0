//! The shuffle sign shared by normalization, comultiplication, extension,
//! commutators and cup products.

/// Sign of rearranging letters of suspended degrees `degrees` into the
/// order `order` (position `p` of the result holds letter `order[p]`).
///
/// Every inverted pair `(a, b)` contributes `(-1)^{|a||b| + 1}`. Returns
/// `true` when the total sign is negative.
pub fn permutation_sign(degrees: &[i64], order: &[usize]) -> bool {
    let mut neg = false;
    for p in 0..order.len() {
        for q in p + 1..order.len() {
            if order[p] > order[q] {
                let (a, b) = (degrees[order[p]], degrees[order[q]]);
                if (a * b + 1).rem_euclid(2) == 1 {
                    neg = !neg;
                }
            }
        }
    }
    neg
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// The `(k, n-k)`-shuffles of `0..n`: orders whose first `k` and last `n-k`
/// entries are each increasing.
pub fn shuffles(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            let mut order = chosen.clone();
            order.extend((0..n).filter(|i| !chosen.contains(i)));
            out.push(order);
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, k, &mut chosen, &mut out);
    out
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

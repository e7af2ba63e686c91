//! Index bookkeeping for alternating maps: strictly increasing tuples,
//! their lexicographic ranks, and signed shuffles.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples drawn from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a strictly increasing tuple among `k`-subsets of `0..n`.
pub fn rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut r = 0;
    let mut prev = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for skipped in prev..c {
            r += binomial(n - 1 - skipped, k - 1 - i);
        }
        prev = c + 1;
    }
    r
}

/// Sorts a tuple of indices, returning the sign of the sorting permutation,
/// or `None` if an index repeats (the alternating map vanishes there).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// A shuffle of positions `0..total` into consecutive blocks. `blocks[b]`
/// lists, in increasing order, the positions sent to block `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    pub blocks: Vec<Vec<usize>>,
    pub sign: i8,
}

/// All `(sizes[0], sizes[1], …)`-shuffles with their signs.
pub fn shuffles(sizes: &[usize]) -> Vec<Shuffle> {
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut blocks = Vec::with_capacity(sizes.len());
    let remaining: Vec<usize> = (0..total).collect();
    shuffle_rec(sizes, &remaining, &mut blocks, &mut out);
    out
}

fn shuffle_rec(
    sizes: &[usize],
    remaining: &[usize],
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<Shuffle>,
) {
    if sizes.is_empty() {
        let mut order: Vec<usize> = blocks.iter().flatten().copied().collect();
        let sign = sort_with_sign(&mut order).expect("shuffle blocks are disjoint");
        out.push(Shuffle {
            blocks: blocks.clone(),
            sign,
        });
        return;
    }
    for pick in combinations(remaining.len(), sizes[0]) {
        let chosen: Vec<usize> = pick.iter().map(|&i| remaining[i]).collect();
        let rest: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|x| !chosen.contains(x))
            .collect();
        blocks.push(chosen);
        shuffle_rec(&sizes[1..], &rest, blocks, out);
        blocks.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn combinations_are_ranked_in_order() {
        for n in 0..6 {
            for k in 0..=n + 1 {
                let cs = combinations(n, k);
                assert_eq!(cs.len(), binomial(n, k));
                for (i, c) in cs.iter().enumerate() {
                    assert_eq!(rank(n, c), i);
                }
            }
        }
    }

    #[test]
    fn sorting_sign() {
        let mut t = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut t), Some(1));
        assert_eq!(t, [0, 1, 2]);
        let mut t = [1, 0];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        let mut t = [1, 3, 1];
        assert_eq!(sort_with_sign(&mut t), None);
    }

    #[test]
    fn shuffle_counts_and_signs() {
        let s = shuffles(&[1, 1]);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].blocks, vec![vec![0], vec![1]]);
        assert_eq!(s[0].sign, 1);
        assert_eq!(s[1].sign, -1);
        assert_eq!(shuffles(&[2, 1, 1]).len(), 12);
        // (1,2)-shuffles: the single element moves past the ones before it
        let s = shuffles(&[1, 2]);
        let signs: Vec<i8> = s.iter().map(|x| x.sign).collect();
        assert_eq!(signs, vec![1, -1, 1]);
    }
}

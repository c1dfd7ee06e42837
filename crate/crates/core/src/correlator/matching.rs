use std::collections::HashMap;

/// A perfect matching of `0..n` as unordered pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// Stream of all perfect matchings of `0..n`.
///
/// Order: the lowest unmatched index pairs with each later index in turn,
/// recursively, with the deepest choice varying fastest.
#[derive(Clone, Debug)]
pub struct Matchings {
    n: usize,
    digits: Vec<usize>,
    done: bool,
}

/// All perfect matchings of `n` points; `(n-1)!!` of them for even `n`, none for odd `n`.
pub fn matchings(n: usize) -> Matchings {
    Matchings {
        n,
        digits: vec![0; n / 2],
        done: n % 2 == 1,
    }
}

impl Matchings {
    fn radix(&self, level: usize) -> usize {
        self.n - 2 * level - 1
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        let mut remaining: Vec<usize> = (0..self.n).collect();
        let mut pairs = Vec::with_capacity(self.n / 2);
        for &d in &self.digits {
            let first = remaining.remove(0);
            let partner = remaining.remove(d);
            pairs.push((first, partner));
        }
        // odometer step
        let mut level = self.digits.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            level -= 1;
            if self.digits[level] + 1 < self.radix(level) {
                self.digits[level] += 1;
                break;
            }
            self.digits[level] = 0;
        }
        Some(Matching { pairs })
    }
}

/// Index of an insertion inside a Wick word: `(group, position in group)`.
pub type Slot = (usize, usize);

/// A perfect matching of the insertions of several groups in which every
/// pair joins two different groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossMatching {
    pairs: Vec<(Slot, Slot)>,
}

impl CrossMatching {
    pub fn pairs(&self) -> &[(Slot, Slot)] {
        &self.pairs
    }
}

/// Every cross-group perfect matching for groups of the given sizes.
pub fn cross_matchings(sizes: &[usize]) -> Vec<CrossMatching> {
    let slots: Vec<Slot> = sizes
        .iter()
        .enumerate()
        .flat_map(|(g, &s)| (0..s).map(move |k| (g, k)))
        .collect();
    let mut out = Vec::new();
    if slots.len() % 2 == 1 {
        return out;
    }
    fn go(remaining: &[Slot], current: &mut Vec<(Slot, Slot)>, out: &mut Vec<CrossMatching>) {
        let Some((&first, rest)) = remaining.split_first() else {
            out.push(CrossMatching { pairs: current.clone() });
            return;
        };
        for (pos, &other) in rest.iter().enumerate() {
            if other.0 == first.0 {
                continue;
            }
            let mut next: Vec<Slot> = rest.to_vec();
            next.remove(pos);
            current.push((first, other));
            go(&next, current, out);
            current.pop();
        }
    }
    go(&slots, &mut Vec::new(), &mut out);
    out
}

/// Number of cross-group perfect matchings, by dynamic programming over the
/// multiset of remaining group sizes.
pub fn cross_matching_count(sizes: &[usize]) -> u128 {
    fn go(counts: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        let Some(first) = counts.iter().position(|&c| c > 0) else {
            return 1;
        };
        if let Some(&v) = memo.get(counts.as_slice()) {
            return v;
        }
        let key = counts.clone();
        counts[first] -= 1;
        let mut total = 0u128;
        for j in 0..counts.len() {
            if j == first || counts[j] == 0 {
                continue;
            }
            let c = counts[j] as u128;
            counts[j] -= 1;
            total += c * go(counts, memo);
            counts[j] += 1;
        }
        counts[first] += 1;
        memo.insert(key, total);
        total
    }
    if sizes.iter().sum::<usize>() % 2 == 1 {
        return 0;
    }
    go(&mut sizes.to_vec(), &mut HashMap::new())
}

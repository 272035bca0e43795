//! Symmetric group combinatorics: permutations in one-line notation,
//! the length (inversion) function, longest elements and minimal
//! (double) coset representatives.

use std::fmt;

/// A permutation of `{1..n}` in one-line notation: `word[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Permutation {
    /// Builds a permutation from a one-line word; panics if the word is
    /// not a rearrangement of `1..=n`.
    pub fn from_word(word: Vec<usize>) -> Self {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            assert!(v >= 1 && v <= n, "entry {v} out of range 1..={n}");
            assert!(!seen[v], "repeated entry {v}");
            seen[v] = true;
        }
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} does not exist in S_{n}");
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// The order-reversing permutation `w_0(i) = n + 1 - i`.
    pub fn longest_element(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(u ∘ v)(i) = u(v(i))`.
    pub fn compose(&self, v: &Permutation) -> Permutation {
        assert_eq!(self.n(), v.n(), "composing permutations of different n");
        Permutation {
            word: v.word.iter().map(|&i| self.word[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// Number of inversions `|{(i,j) : i < j, w(i) > w(j)}|`.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// True iff `l(uv) = l(u) + l(v)`.
    pub fn lengths_add(&self, v: &Permutation) -> bool {
        self.compose(v).length() == self.length() + v.length()
    }

    /// A reduced word for `w` as a sequence of generator indices, so that
    /// `w = s_{i_1} s_{i_2} ... s_{i_m}` (composition left to right).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        // peel descents off the right: w = w' s_i with l(w') = l(w) - 1
        'outer: while !w.is_identity() {
            for i in 1..w.n() {
                if w.word[i - 1] > w.word[i] {
                    w.word.swap(i - 1, i);
                    letters.push(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without a descent");
        }
        letters.reverse();
        letters
    }

    /// All elements of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            if !next_lex(&mut word) {
                break;
            }
        }
        out
    }
}

fn next_lex(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Minimal-length representatives of the right cosets `S_{n+1} / S_n`:
/// `e, s_n, s_{n-1} s_n, ..., s_1 s_2 ... s_n`, in that order.
pub fn right_coset_reps(n: usize) -> Vec<Permutation> {
    let mut reps = vec![Permutation::identity(n + 1)];
    for start in (1..=n).rev() {
        let mut w = Permutation::identity(n + 1);
        for i in start..=n {
            w = w.compose(&Permutation::transposition(n + 1, i));
        }
        reps.push(w);
    }
    reps
}

/// The double cosets `(S_k x S_l) \ S_{k+l} / (S_n x S_m)` with their
/// unique minimal-length representatives and the admissible `r` range.
#[derive(Clone, Debug)]
pub struct DoubleCosetDatum {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub m: usize,
    /// minimal-length representative per coset, sorted by length then word
    pub reps: Vec<Permutation>,
    pub r_values: Vec<usize>,
}

/// Enumerates the double cosets `(S_k x S_l) \ S_{k+l} / (S_n x S_m)` by
/// exhaustive orbit scan over `S_{k+l}`.
pub fn double_cosets(k: usize, l: usize, n: usize, m: usize) -> Result<DoubleCosetDatum, String> {
    if k + l != n + m {
        return Err(format!("constraint k+l = n+m violated: {k}+{l} != {n}+{m}"));
    }
    let total = k + l;
    let elems = Permutation::all(total);
    let idx_of = |w: &Permutation| elems.binary_search(w).expect("element of S_n");

    let left_gens: Vec<Permutation> = (1..total)
        .filter(|&i| i != k)
        .map(|i| Permutation::transposition(total, i))
        .collect();
    let right_gens: Vec<Permutation> = (1..total)
        .filter(|&i| i != n)
        .map(|i| Permutation::transposition(total, i))
        .collect();

    // connected components under left/right multiplication by subgroup generators
    let mut comp = vec![usize::MAX; elems.len()];
    let mut ncomp = 0;
    for start in 0..elems.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(cur) = stack.pop() {
            let w = &elems[cur];
            for g in &left_gens {
                let j = idx_of(&g.compose(w));
                if comp[j] == usize::MAX {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
            for g in &right_gens {
                let j = idx_of(&w.compose(g));
                if comp[j] == usize::MAX {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }

    let mut reps: Vec<Permutation> = Vec::with_capacity(ncomp);
    for c in 0..ncomp {
        let members: Vec<&Permutation> = elems
            .iter()
            .zip(&comp)
            .filter(|(_, &cc)| cc == c)
            .map(|(w, _)| w)
            .collect();
        let min_len = members.iter().map(|w| w.length()).min().unwrap();
        let mins: Vec<&&Permutation> = members.iter().filter(|w| w.length() == min_len).collect();
        assert_eq!(mins.len(), 1, "minimal-length double coset rep not unique");
        reps.push((*mins[0]).clone());
    }
    reps.sort_by_key(|w| (w.length(), w.word().to_vec()));

    let r_lo = n.saturating_sub(l);
    let r_hi = n.min(k);
    let r_values: Vec<usize> = (r_lo..=r_hi).collect();
    Ok(DoubleCosetDatum {
        k,
        l,
        n,
        m,
        reps,
        r_values,
    })
}

/// The block-shift permutation attached to an admissible `r`: fixes
/// `1..r`, shifts the next `n-r` positions right by `k-r`, the following
/// `k-r` positions left by `n-r`, and fixes the last `l+r-n` positions.
pub fn w_of_r(n: usize, m: usize, k: usize, l: usize, r: usize) -> Result<Permutation, String> {
    if k + l != n + m {
        return Err(format!("constraint k+l = n+m violated: {k}+{l} != {n}+{m}"));
    }
    let lo = n.saturating_sub(l);
    let hi = n.min(k);
    if r < lo || r > hi {
        return Err(format!("r = {r} outside admissible range {lo}..={hi}"));
    }
    let total = n + m;
    let mut word = Vec::with_capacity(total);
    for i in 1..=total {
        let v = if i <= r {
            i
        } else if i <= n {
            i + (k - r)
        } else if i <= n + (k - r) {
            i - (n - r)
        } else {
            i
        };
        word.push(v);
    }
    Ok(Permutation::from_word(word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i)
    }

    #[test]
    fn compose_identity_and_involution() {
        let e = Permutation::identity(3);
        let w = Permutation::from_word(vec![3, 1, 2]);
        assert_eq!(e.compose(&w), w);
        assert_eq!(w.compose(&e), w);
        assert_eq!(s(2, 1).compose(&s(2, 1)), Permutation::identity(2));
    }

    #[test]
    fn compose_s1_s2() {
        assert_eq!(
            s(3, 1).compose(&s(3, 2)),
            Permutation::from_word(vec![2, 3, 1])
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest_element(3).length(), 3);
        assert_eq!(Permutation::from_word(vec![2, 3, 1]).length(), 2);
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(Permutation::longest_element(1), Permutation::identity(1));
        assert_eq!(
            Permutation::longest_element(2),
            Permutation::from_word(vec![2, 1])
        );
        let w0 = Permutation::longest_element(3);
        assert_eq!(w0, Permutation::from_word(vec![3, 2, 1]));
        assert_eq!(w0.length(), 3);
    }

    #[test]
    fn lengths_add_examples() {
        assert!(s(3, 1).lengths_add(&s(3, 2)));
        assert!(!s(3, 1).lengths_add(&s(3, 1)));
        let w = Permutation::from_word(vec![3, 1, 2]);
        assert!(Permutation::identity(3).lengths_add(&w));
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in Permutation::all(5) {
            let letters = w.reduced_word();
            assert_eq!(letters.len(), w.length());
            let mut prod = Permutation::identity(5);
            for i in letters {
                prod = prod.compose(&Permutation::transposition(5, i));
            }
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn coset_reps_small() {
        assert_eq!(right_coset_reps(0), vec![Permutation::identity(1)]);
        assert_eq!(right_coset_reps(1), vec![Permutation::identity(2), s(2, 1)]);
        let reps = right_coset_reps(2);
        let lens: Vec<usize> = reps.iter().map(|w| w.length()).collect();
        assert_eq!(lens, vec![0, 1, 2]);
        // exhaustive scan: every element of S_3 is uniquely rep * S_2
        let mut seen = std::collections::HashSet::new();
        for rep in &reps {
            for v in [Permutation::identity(3), s(3, 1)] {
                assert!(seen.insert(rep.compose(&v)));
            }
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn double_cosets_1111() {
        let d = double_cosets(1, 1, 1, 1).unwrap();
        assert_eq!(d.reps.len(), 2);
        assert_eq!(d.reps[0], Permutation::identity(2));
        assert_eq!(d.reps[1], s(2, 1));
        assert_eq!(d.r_values, vec![0, 1]);
    }

    #[test]
    fn double_cosets_one_side_full() {
        // m = 0: the right subgroup is all of S_{k+l}, one coset
        let d = double_cosets(2, 1, 3, 0).unwrap();
        assert_eq!(d.reps.len(), 1);
    }

    #[test]
    fn double_cosets_2112() {
        let d = double_cosets(2, 1, 1, 2).unwrap();
        // brute-force count; admissible r range must agree
        assert_eq!(d.reps.len(), d.r_values.len());
        assert_eq!(d.reps.len(), 2);
    }

    #[test]
    fn double_cosets_partition_group() {
        // cosets partition S_{k+l} for all quadruples with k+l <= 5
        for total in 1..=5usize {
            for k in 0..=total {
                for n in 0..=total {
                    let (l, m) = (total - k, total - n);
                    let d = double_cosets(k, l, n, m).unwrap();
                    let all = Permutation::all(total);
                    let left: Vec<_> = all.iter().filter(|w| is_young(w, k)).collect();
                    let right: Vec<_> = all.iter().filter(|w| is_young(w, n)).collect();
                    // reconstruct each coset; together they must cover S_{k+l}
                    // exactly once
                    let mut covered = std::collections::HashSet::new();
                    for rep in &d.reps {
                        let mut coset = std::collections::HashSet::new();
                        for a in &left {
                            for b in &right {
                                coset.insert(a.compose(rep).compose(b));
                            }
                        }
                        for w in coset {
                            assert!(covered.insert(w), "overlapping double cosets");
                        }
                    }
                    assert_eq!(covered.len(), all.len(), "(k,l,n,m)=({k},{l},{n},{m})");
                }
            }
        }
    }

    fn is_young(w: &Permutation, k: usize) -> bool {
        (1..=k).all(|i| w.apply(i) <= k) && (k + 1..=w.n()).all(|i| w.apply(i) > k)
    }

    #[test]
    fn w_of_r_examples() {
        assert_eq!(w_of_r(1, 1, 1, 1, 1).unwrap(), Permutation::identity(2));
        assert_eq!(w_of_r(1, 1, 1, 1, 0).unwrap(), s(2, 1));
        assert!(w_of_r(1, 1, 1, 1, 2).is_err());
    }

    #[test]
    fn w_of_r_matches_double_coset_reps() {
        for total in 1..=6usize {
            for k in 0..=total {
                for n in 0..=total {
                    let (l, m) = (total - k, total - n);
                    let d = double_cosets(k, l, n, m).unwrap();
                    let mut image: Vec<Permutation> = d
                        .r_values
                        .iter()
                        .map(|&r| w_of_r(n, m, k, l, r).unwrap())
                        .collect();
                    let before = image.len();
                    image.dedup();
                    assert_eq!(image.len(), before, "w_of_r not injective");
                    let mut reps = d.reps.clone();
                    reps.sort();
                    image.sort();
                    assert_eq!(image, reps, "(k,l,n,m)=({k},{l},{n},{m})");
                }
            }
        }
    }
}

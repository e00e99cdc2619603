//! Size-bounded moves on one-row words, stored as byte strings.
//!
//! A category of partitions is determined by its one-row members, and these
//! are closed under cyclic rotation and reversal. Every category operation on
//! one-row words reduces to three moves:
//!
//! * erasing two cyclically adjacent points with the pair partition,
//! * connecting the blocks of two adjacent points (needs the four block),
//! * gluing: placing two words side by side and capping `l` nested pairs
//!   across the seam, which is a composition once both words are rotated into
//!   two-row form. `l = 0` is the tensor product.
//!
//! Gluing with overlap `l` equals gluing with overlap `l - 1` followed by
//! erasing the seam pair, so inside a size bound `B` only the smallest overlap
//! `max(0, ceil((a + b - B) / 2))` has to be tried.

const NONE: u8 = u8::MAX;

/// Relabels `src` into first-occurrence order, writing into `out`.
#[inline]
pub(crate) fn relabel_into<I: IntoIterator<Item = u8>>(src: I, out: &mut Vec<u8>) {
    let mut map = [NONE; 256];
    let mut next = 0u8;
    out.clear();
    for x in src {
        let slot = &mut map[x as usize];
        if *slot == NONE {
            *slot = next;
            next += 1;
        }
        out.push(*slot);
    }
}

pub(crate) fn relabel(src: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(src.len());
    relabel_into(src.iter().copied(), &mut out);
    out
}

/// The word read from `start` onwards, cyclically, optionally backwards.
#[inline]
pub(crate) fn dihedral_iter(word: &[u8], start: usize, reverse: bool) -> impl Iterator<Item = u8> + '_ {
    let n = word.len();
    (0..n).map(move |i| {
        if reverse {
            word[(start + n - i) % n]
        } else {
            word[(start + i) % n]
        }
    })
}

/// Lexicographically smallest relabeled rotation or reflection.
pub(crate) fn canonical(word: &[u8]) -> Vec<u8> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = relabel(word);
    let mut buf = Vec::with_capacity(n);
    for reverse in [false, true] {
        for start in 0..n {
            relabel_into(dihedral_iter(word, start, reverse), &mut buf);
            if buf < best {
                std::mem::swap(&mut best, &mut buf);
            }
        }
    }
    best
}

/// All distinct relabeled rotations and reflections, sorted.
pub(crate) fn variants(word: &[u8]) -> Vec<Vec<u8>> {
    let n = word.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(2 * n);
    for reverse in [false, true] {
        for start in 0..n {
            let mut buf = Vec::with_capacity(n);
            relabel_into(dihedral_iter(word, start, reverse), &mut buf);
            out.push(buf);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Starting points of the distinct relabeled rotations, and whether some
/// reflection is not among them. Gluing only needs these readings.
pub(crate) fn symmetry(word: &[u8]) -> (Vec<usize>, bool) {
    let n = word.len();
    if n == 0 {
        return (vec![0], false);
    }
    let mut seen: Vec<Vec<u8>> = Vec::with_capacity(n);
    let mut starts = Vec::new();
    for start in 0..n {
        let mut buf = Vec::with_capacity(n);
        relabel_into(dihedral_iter(word, start, false), &mut buf);
        if !seen.contains(&buf) {
            seen.push(buf);
            starts.push(start);
        }
    }
    let mut back = Vec::with_capacity(n);
    relabel_into(dihedral_iter(word, 0, true), &mut back);
    (starts, !seen.contains(&back))
}

/// Erases points `at` and `at + 1` (cyclically), merging their blocks.
pub(crate) fn erase(word: &[u8], at: usize) -> Vec<u8> {
    let n = word.len();
    let j = (at + 1) % n;
    let (x, y) = (word[at], word[j]);
    let rest = (0..n)
        .filter(|&i| i != at && i != j)
        .map(|i| if word[i] == y { x } else { word[i] });
    let mut out = Vec::with_capacity(n - 2);
    relabel_into(rest, &mut out);
    out
}

/// Merges the blocks through points `at` and `at + 1` (cyclically).
pub(crate) fn connect(word: &[u8], at: usize) -> Vec<u8> {
    let n = word.len();
    let (x, y) = (word[at], word[(at + 1) % n]);
    let mut out = Vec::with_capacity(n);
    relabel_into(word.iter().map(|&c| if c == y { x } else { c }), &mut out);
    out
}

/// Smallest overlap for which gluing words of lengths `a` and `b` fits in `bound`.
pub(crate) fn min_overlap(a: usize, b: usize, bound: usize) -> usize {
    (a + b).saturating_sub(bound).div_ceil(2)
}

/// Glues rotation `s` of `u` to rotation `t` of `v` (reversed if `reflect`),
/// capping the last `l` points of `u` against the first `l` points of `v`
/// in nested fashion. The result is relabeled but not canonicalised.
pub(crate) fn glue_into(
    u: &[u8],
    v: &[u8],
    s: usize,
    t: usize,
    reflect: bool,
    l: usize,
    out: &mut Vec<u8>,
) {
    let (a, b) = (u.len(), v.len());
    let nu = u.iter().max().map_or(0, |&m| m as usize + 1);
    let nv = v.iter().max().map_or(0, |&m| m as usize + 1);
    let at_u = |i: usize| u[(s + i) % a];
    let at_v = |i: usize| {
        if reflect {
            v[(t + b - i) % b]
        } else {
            v[(t + i) % b]
        }
    };
    let mut parent = [0u8; 256];
    for (i, p) in parent.iter_mut().enumerate().take(nu + nv) {
        *p = i as u8;
    }
    fn find(parent: &mut [u8; 256], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for x in 0..l {
        let p = find(&mut parent, at_u(a - l + x));
        let q = find(&mut parent, (nu + at_v(l - 1 - x) as usize) as u8);
        if p != q {
            let (lo, hi) = if p < q { (p, q) } else { (q, p) };
            parent[hi as usize] = lo;
        }
    }
    let left = (0..a - l).map(at_u);
    let right = (l..b).map(|i| nu as u8 + at_v(i));
    let mut roots = [0u8; 256];
    for i in 0..nu + nv {
        roots[i] = find(&mut parent, i as u8);
    }
    relabel_into(left.chain(right).map(|c| roots[c as usize]), out);
}

pub(crate) fn glue(u: &[u8], v: &[u8], s: usize, t: usize, reflect: bool, l: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(u.len() + v.len());
    glue_into(u, v, s, t, reflect, l, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<u8> {
        s.bytes().map(|c| c - b'a').collect()
    }

    #[test]
    fn canonical_picks_smallest_variant() {
        assert_eq!(canonical(&w("abba")), w("aabb"));
        assert_eq!(canonical(&w("abab")), w("abab"));
        assert_eq!(canonical(&w("abbaabba")), w("aabbaabb"));
        assert_eq!(variants(&w("aaaa")).len(), 1);
        assert_eq!(variants(&w("abab")).len(), 1);
        assert_eq!(variants(&w("abba")).len(), 2);
    }

    #[test]
    fn erase_and_connect() {
        assert_eq!(erase(&w("aabb"), 0), w("aa"));
        assert_eq!(erase(&w("abba"), 1), w("aa"));
        assert_eq!(erase(&w("abba"), 3), w("aa"));
        assert_eq!(erase(&w("aa"), 0), w(""));
        assert_eq!(connect(&w("aabb"), 1), w("aaaa"));
        assert_eq!(connect(&w("abab"), 1), w("aaaa"));
    }

    #[test]
    fn glue_is_tensor_then_erase() {
        let u = w("abab");
        let v = w("aabb");
        assert_eq!(glue(&u, &v, 0, 0, false, 0), w("ababccdd"));
        for s in 0..4 {
            for t in 0..4 {
                for reflect in [false, true] {
                    let mut g = glue(&u, &v, s, t, reflect, 0);
                    for l in 1..=4 {
                        // erase the seam pair, which sits at 4 - l after l - 1 erasures
                        g = erase(&g, 4 - l);
                        assert_eq!(g, glue(&u, &v, s, t, reflect, l));
                    }
                }
            }
        }
    }

    #[test]
    fn min_overlap_values() {
        assert_eq!(min_overlap(4, 4, 8), 0);
        assert_eq!(min_overlap(8, 8, 12), 2);
        assert_eq!(min_overlap(7, 8, 12), 2);
    }
}

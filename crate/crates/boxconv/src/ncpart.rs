//! Non-crossing partitions of `{1..n}`: enumeration, the Kreweras
//! complement and the lattice join.
//!
//! Invariants maintained by [`NcPartition`]:
//! - blocks are non-empty, pairwise disjoint, and their union is `{1..n}`,
//! - no crossing `p1 < q1 < p2 < q2` with `p1 ~ p2`, `q1 ~ q2`, `p2 !~ q1`,
//! - canonical order: each block strictly increasing, blocks sorted by their
//!   minimum element.
//!
//! Partitions compare by the lexicographic order of their canonical block
//! lists; `enumerate_nc` emits that order.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default ground-set cap for enumeration. `|NC(12)| = 208012` keeps a full
/// enumeration desk-scale; larger `n` must opt in via
/// [`enumerate_nc_with_cap`].
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Errors from partition construction and lattice operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Ground set size is zero or exceeds the enumeration cap.
    SizeOutOfRange { n: usize, cap: usize },
    /// The given blocks are not a partition of `{1..n}`.
    NotAPartition,
    /// The blocks partition `{1..n}` but cross.
    Crossing,
    /// Two partitions live on different ground sets.
    GroundSetMismatch { left: usize, right: usize },
    /// Interval cuts are not strictly increasing up to `n`.
    BadCuts,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::SizeOutOfRange { n, cap } => {
                write!(f, "ground set size {n} outside 1..={cap}")
            }
            PartitionError::NotAPartition => write!(f, "blocks do not partition the ground set"),
            PartitionError::Crossing => write!(f, "blocks cross"),
            PartitionError::GroundSetMismatch { left, right } => {
                write!(f, "ground sets differ: {left} vs {right}")
            }
            PartitionError::BadCuts => write!(f, "cuts must be strictly increasing and end at n"),
        }
    }
}

/// A non-crossing partition of `{1..n}` in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// `Debug` renders like the serialized form, e.g. `[[1,4],[2,3]]`.
impl fmt::Debug for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl NcPartition {
    /// Validates and canonicalizes `blocks` as a non-crossing partition of
    /// `{1..n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let blocks = canonicalize_partition(n, blocks)?;
        if crossing_exists(&blocks) {
            return Err(PartitionError::Crossing);
        }
        Ok(NcPartition { n, blocks })
    }

    /// The one-block partition `1_n`.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1);
        NcPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    /// The all-singletons partition `0_n`.
    pub fn singletons(n: usize) -> Self {
        assert!(n >= 1);
        NcPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// Interval partition determined by cuts `j1 < j2 < ... < jm = n`:
    /// `{1..j1}, {j1+1..j2}, ...`.
    pub fn interval(n: usize, cuts: &[usize]) -> Result<Self, PartitionError> {
        if n == 0 || cuts.is_empty() || *cuts.last().unwrap() != n {
            return Err(PartitionError::BadCuts);
        }
        let mut prev = 0usize;
        let mut blocks = Vec::with_capacity(cuts.len());
        for &c in cuts {
            if c <= prev || c > n {
                return Err(PartitionError::BadCuts);
            }
            blocks.push((prev + 1..=c).collect());
            prev = c;
        }
        Ok(NcPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, the paper's `|pi|`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The Kreweras complement, computed by a stack scan of the interleaved
    /// sequence `1, 1', 2, 2', ..., n, n'`.
    ///
    /// Walking left to right, the open blocks of `self` form a stack (they
    /// are nested because `self` is non-crossing). Each gap after `i` hosts
    /// the bar `i'`, and two bars belong to the same complement block exactly
    /// when the diagram region around them is the same, which the scan tracks
    /// as a state id that is restored on every pop. Runs in `O(n)` stack
    /// traffic and satisfies `|pi| + |K(pi)| = n + 1`.
    pub fn kreweras(&self) -> NcPartition {
        let n = self.n;
        // block index, min and max element of the block of each point
        let mut block_of = vec![0usize; n + 1];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &e in b {
                block_of[e] = bi;
            }
        }
        let block_min: Vec<usize> = self.blocks.iter().map(|b| b[0]).collect();
        let block_max: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();

        // stack of (open block, state id before it was opened)
        let mut stack: Vec<(usize, u32)> = Vec::new();
        let mut state: u32 = 0;
        let mut next_state: u32 = 1;
        let mut label = vec![0u32; n + 1];
        // groups bars by state id, preserving first-seen order
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();

        for i in 1..=n {
            let b = block_of[i];
            if block_min[b] == i {
                stack.push((b, state));
                state = next_state;
                next_state += 1;
            } else {
                debug_assert_eq!(stack.last().map(|t| t.0), Some(b));
                if block_max[b] != i {
                    // a middle element of the open block closes the current
                    // face and opens a fresh one inside the same block
                    state = next_state;
                    next_state += 1;
                }
            }
            if block_max[b] == i {
                let (_, prev) = stack.pop().expect("open block");
                state = prev;
            }
            label[i] = state;
            groups.entry(state).or_default().push(i);
        }
        debug_assert!(stack.is_empty());

        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        let out = NcPartition { n, blocks };
        debug_assert_eq!(self.num_blocks() + out.num_blocks(), n + 1);
        debug_assert!(!crossing_exists(&out.blocks));
        out
    }

    /// `K(K(pi))`, asserted to equal `pi` with every element cyclically
    /// shifted down by one (`i -> i-1`, `1 -> n`).
    pub fn kreweras_squared_shift(&self) -> NcPartition {
        let out = self.kreweras().kreweras();
        assert_eq!(out, self.cyclic_shift_down(), "K^2 must be a cyclic shift");
        out
    }

    fn cyclic_shift_down(&self) -> NcPartition {
        let n = self.n;
        let shift = |i: usize| if i == 1 { n } else { i - 1 };
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&e| shift(e)).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        let mut blocks: Vec<Vec<usize>> = blocks;
        blocks.sort_by_key(|b| b[0]);
        NcPartition { n, blocks }
    }

    /// Least upper bound in the `NC(n)` lattice under reversed refinement:
    /// the partition-lattice join (transitive merge) followed by repeatedly
    /// merging crossing block pairs until non-crossing.
    pub fn join(&self, other: &NcPartition) -> Result<NcPartition, PartitionError> {
        if self.n != other.n {
            return Err(PartitionError::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut uf = UnionFind::new(n);
        for p in [self, other] {
            for b in &p.blocks {
                for w in b.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let mut blocks = uf.into_blocks();
        // crossing-merge fixpoint
        loop {
            let mut merged = false;
            'outer: for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    if blocks_cross(&blocks[i], &blocks[j]) {
                        let b = blocks.remove(j);
                        let mut a = blocks.remove(i);
                        a.extend(b);
                        a.sort_unstable();
                        blocks.push(a);
                        merged = true;
                        break 'outer;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(NcPartition { n, blocks })
    }
}

/// Checks whether `blocks` (a partition of `{1..n}`) is non-crossing.
/// Returns a validation error if the blocks are not a partition at all.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool, PartitionError> {
    let canon = canonicalize_partition(n, blocks.to_vec())?;
    Ok(!crossing_exists(&canon))
}

fn canonicalize_partition(
    n: usize,
    blocks: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>, PartitionError> {
    if n == 0 {
        return Err(PartitionError::NotAPartition);
    }
    let mut seen = vec![false; n + 1];
    let mut canon = Vec::with_capacity(blocks.len());
    for b in blocks {
        if b.is_empty() {
            return Err(PartitionError::NotAPartition);
        }
        let mut b = b;
        b.sort_unstable();
        for &e in &b {
            if e < 1 || e > n || seen[e] {
                return Err(PartitionError::NotAPartition);
            }
            seen[e] = true;
        }
        canon.push(b);
    }
    if !seen[1..].iter().all(|&s| s) {
        return Err(PartitionError::NotAPartition);
    }
    canon.sort_by_key(|b| b[0]);
    Ok(canon)
}

/// Two blocks cross iff elements of one interleave those of the other:
/// `p1 < q1 < p2 < q2` with the `p`s in one block and the `q`s in the other.
fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    // a and b sorted and disjoint: cross iff neither separates nor nests,
    // i.e. the merged sequence alternates source more than once.
    let mut switches = 0;
    let (mut i, mut j) = (0, 0);
    let mut last = 2u8; // 2 = none yet
    while i < a.len() || j < b.len() {
        let from_a = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => x < y,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => unreachable!(),
        };
        let cur = u8::from(from_a);
        if last != 2 && cur != last {
            switches += 1;
            if switches >= 3 {
                return true;
            }
        }
        last = cur;
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    false
}

/// Union-find over `{1..n}` for the partition-lattice join.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..=n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn into_blocks(mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len() - 1;
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 1..=n {
            let r = self.find(i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }
}

fn crossing_exists(blocks: &[Vec<usize>]) -> bool {
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if blocks_cross(&blocks[i], &blocks[j]) {
                return true;
            }
        }
    }
    false
}

/// All of `NC(n)` in canonical ascending order, each partition exactly once;
/// `|NC(n)| = Catalan(n)`. Errors if `n == 0` or `n > DEFAULT_ENUMERATION_CAP`.
pub fn enumerate_nc(n: usize) -> Result<Vec<NcPartition>, PartitionError> {
    enumerate_nc_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_nc`] with an explicit cap override.
pub fn enumerate_nc_with_cap(n: usize, cap: usize) -> Result<Vec<NcPartition>, PartitionError> {
    if n == 0 || n > cap {
        return Err(PartitionError::SizeOutOfRange { n, cap });
    }
    let ground: Vec<usize> = (1..=n).collect();
    let mut out: Vec<NcPartition> = enumerate_on(&ground)
        .into_iter()
        .map(|mut blocks| {
            blocks.sort_by_key(|b| b[0]);
            NcPartition { n, blocks }
        })
        .collect();
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// Recursive first-block decomposition on an ordered ground segment: the
/// block of the minimum splits the rest into independent gaps, each
/// partitioned on its own. Yields the Catalan recursion directly instead of
/// filtering all set partitions.
fn enumerate_on(ground: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if ground.is_empty() {
        return vec![Vec::new()];
    }
    let first = ground[0];
    let rest = &ground[1..];
    let m = rest.len();
    let mut out = Vec::new();
    // subsets of `rest` joining the block of `first`, as bitmasks
    for mask in 0..(1u32 << m) {
        let mut block = vec![first];
        let mut gaps: Vec<&[usize]> = Vec::new();
        let mut gap_start = 0usize;
        for k in 0..m {
            if mask & (1 << k) != 0 {
                block.push(rest[k]);
                gaps.push(&rest[gap_start..k]); // possibly empty
                gap_start = k + 1;
            }
        }
        gaps.push(&rest[gap_start..]);
        // cartesian product of the gap partitions
        let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for gap in gaps {
            if gap.is_empty() {
                continue;
            }
            let sub = enumerate_on(gap);
            let mut next = Vec::with_capacity(acc.len() * sub.len());
            for a in &acc {
                for s in &sub {
                    let mut combined = a.clone();
                    combined.extend(s.iter().cloned());
                    next.push(combined);
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

/// Per-`n` cache of enumerated `NC(n)` together with the index of each
/// partition's Kreweras complement.
///
/// The dominant cost of boxed convolution is Catalan-sized and identical for
/// every word of a given length, so callers thread one cache through a whole
/// operation. The cache is intentionally not shareable across threads; use
/// one per thread — results are identical either way because every lookup is
/// a pure function of `n`.
pub struct NcCache {
    entries: BTreeMap<usize, Rc<NcLevel>>,
    cap: usize,
}

/// One cached level: `NC(n)`, each partition's complement, and the blocks
/// of both as bitmasks (bit `e-1` set for element `e`) for mask-indexed
/// coefficient evaluation in the convolution hot path.
pub struct NcLevel {
    pub partitions: Vec<NcPartition>,
    pub complements: Vec<NcPartition>,
    pub partition_masks: Vec<Vec<u32>>,
    pub complement_masks: Vec<Vec<u32>>,
}

fn block_masks(p: &NcPartition) -> Vec<u32> {
    p.blocks()
        .iter()
        .map(|b| b.iter().fold(0u32, |m, &e| m | 1 << (e - 1)))
        .collect()
}

impl NcCache {
    pub fn new() -> Self {
        NcCache {
            entries: BTreeMap::new(),
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    pub fn with_cap(cap: usize) -> Self {
        NcCache {
            entries: BTreeMap::new(),
            cap,
        }
    }

    /// `NC(n)` with precomputed complements, memoized per `n`.
    pub fn level(&mut self, n: usize) -> Result<Rc<NcLevel>, PartitionError> {
        if let Some(l) = self.entries.get(&n) {
            return Ok(Rc::clone(l));
        }
        let partitions = enumerate_nc_with_cap(n, self.cap)?;
        let complements: Vec<NcPartition> = partitions.iter().map(|p| p.kreweras()).collect();
        let partition_masks = partitions.iter().map(block_masks).collect();
        let complement_masks = complements.iter().map(block_masks).collect();
        let level = Rc::new(NcLevel {
            partitions,
            complements,
            partition_masks,
            complement_masks,
        });
        self.entries.insert(n, Rc::clone(&level));
        Ok(level)
    }
}

impl Default for NcCache {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(n: usize, blocks: &[&[usize]]) -> NcPartition {
        NcPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn enumerate_small_counts() {
        let catalan = [1usize, 2, 5, 14, 42, 132, 429, 1430];
        for (n, want) in catalan.iter().enumerate().map(|(i, c)| (i + 1, c)) {
            assert_eq!(enumerate_nc(n).unwrap().len(), *want, "n={n}");
        }
    }

    #[test]
    fn enumerate_n3_matches_known_list() {
        let got = enumerate_nc(3).unwrap();
        let want = [
            p(3, &[&[1], &[2], &[3]]),
            p(3, &[&[1], &[2, 3]]),
            p(3, &[&[1, 2], &[3]]),
            p(3, &[&[1, 2, 3]]),
            p(3, &[&[1, 3], &[2]]),
        ];
        assert_eq!(got.len(), 5);
        for w in &want {
            assert!(got.contains(w));
        }
    }

    #[test]
    fn enumerate_deterministic_and_duplicate_free() {
        let a = enumerate_nc(6).unwrap();
        let b = enumerate_nc(6).unwrap();
        assert_eq!(a, b);
        for i in 1..a.len() {
            assert!(a[i - 1] < a[i]);
        }
    }

    #[test]
    fn enumerate_rejects_out_of_range() {
        assert!(matches!(
            enumerate_nc(0),
            Err(PartitionError::SizeOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate_nc(13),
            Err(PartitionError::SizeOutOfRange { .. })
        ));
        // the cap is an override, not a hard limit
        assert!(enumerate_nc_with_cap(3, 2).is_err());
        assert_eq!(enumerate_nc_with_cap(3, 3).unwrap().len(), 5);
    }

    #[test]
    fn crossing_detection() {
        // (13|24) is the minimal crossing witness
        assert!(
            !is_noncrossing(4, &[vec![1, 3], vec![2, 4]]).unwrap()
        );
        assert!(is_noncrossing(4, &[vec![1, 4], vec![2, 3]]).unwrap());
        assert!(
            is_noncrossing(3, &[vec![1], vec![2], vec![3]]).unwrap()
        );
        assert!(matches!(
            is_noncrossing(3, &[vec![1], vec![2]]),
            Err(PartitionError::NotAPartition)
        ));
        assert!(NcPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
    }

    #[test]
    fn kreweras_examples() {
        // n=3: K(12|3) = (1|23)
        assert_eq!(p(3, &[&[1, 2], &[3]]).kreweras(), p(3, &[&[1], &[2, 3]]));
        // n=4: K(12|34) = (1|24|3)
        assert_eq!(
            p(4, &[&[1, 2], &[3, 4]]).kreweras(),
            p(4, &[&[1], &[2, 4], &[3]])
        );
        // n=4: K(1234) = (1|2|3|4)
        assert_eq!(NcPartition::full(4).kreweras(), NcPartition::singletons(4));
    }

    #[test]
    fn kreweras_block_count_relation() {
        for n in 1..=8 {
            for q in enumerate_nc(n).unwrap() {
                let k = q.kreweras();
                assert_eq!(q.num_blocks() + k.num_blocks(), n + 1);
                if n >= 2 {
                    assert_ne!(k, q, "no fixed points for n >= 2");
                }
            }
        }
    }

    #[test]
    fn kreweras_squared_is_cyclic_shift() {
        assert_eq!(
            p(2, &[&[1], &[2]]).kreweras_squared_shift(),
            p(2, &[&[1], &[2]])
        );
        assert_eq!(
            p(1, &[&[1]]).kreweras_squared_shift(),
            NcPartition::full(1)
        );
        // block-size multiset preserved; the assert inside the call checks the shift
        for q in enumerate_nc(6).unwrap() {
            let k2 = q.kreweras_squared_shift();
            let mut a: Vec<usize> = q.blocks().iter().map(|b| b.len()).collect();
            let mut b: Vec<usize> = k2.blocks().iter().map(|b| b.len()).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn kreweras_order_2n() {
        for n in 1..=6 {
            for q in enumerate_nc(n).unwrap() {
                let mut cur = q.clone();
                for _ in 0..2 * n {
                    cur = cur.kreweras();
                }
                assert_eq!(cur, q);
            }
        }
    }

    #[test]
    fn join_identities() {
        for n in [3, 4, 5] {
            for q in enumerate_nc(n).unwrap() {
                assert_eq!(q.join(&NcPartition::singletons(n)).unwrap(), q);
                assert_eq!(
                    q.join(&NcPartition::full(n)).unwrap(),
                    NcPartition::full(n)
                );
            }
        }
    }

    #[test]
    fn join_merges_crossing_blocks() {
        let a = p(4, &[&[1, 3], &[2], &[4]]);
        let b = p(4, &[&[2, 4], &[1], &[3]]);
        assert_eq!(a.join(&b).unwrap(), NcPartition::full(4));
    }

    #[test]
    fn join_mismatched_ground_sets() {
        let a = NcPartition::full(3);
        let b = NcPartition::full(4);
        assert!(matches!(
            a.join(&b),
            Err(PartitionError::GroundSetMismatch { .. })
        ));
    }

    #[test]
    fn interval_examples() {
        assert_eq!(
            NcPartition::interval(4, &[2, 4]).unwrap(),
            p(4, &[&[1, 2], &[3, 4]])
        );
        assert_eq!(
            NcPartition::interval(3, &[3]).unwrap(),
            NcPartition::full(3)
        );
        assert_eq!(
            NcPartition::interval(3, &[1, 2, 3]).unwrap(),
            NcPartition::singletons(3)
        );
        assert!(NcPartition::interval(3, &[2]).is_err());
        assert!(NcPartition::interval(3, &[2, 2, 3]).is_err());
    }

    #[test]
    fn cache_levels_are_consistent() {
        let mut cache = NcCache::new();
        let l4 = cache.level(4).unwrap();
        assert_eq!(l4.partitions.len(), 14);
        for (q, k) in l4.partitions.iter().zip(&l4.complements) {
            assert_eq!(&q.kreweras(), k);
        }
        let again = cache.level(4).unwrap();
        assert!(Rc::ptr_eq(&l4, &again));
    }
}

//! Permutation groups, block systems, and factorizability of cyclic covers.
//!
//! The Galois/deck group of a cyclic r-sheeted cover is generated by an
//! r-cycle; the cover factors into intermediate covers exactly when the
//! group is imprimitive, and a transitive cyclic group of composite order
//! is always imprimitive. The degrees here are spectral ranks, so groups
//! are materialized by plain breadth-first closure and block systems by the
//! union-find refinement that merges a seed pair and propagates through the
//! generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {0, …, n−1} in image form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from disjoint-cycle notation on `n` symbols.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::InvalidPermutation);
                }
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Lengths of the disjoint cycles, fixed points included, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Is this one n-cycle on all n symbols?
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_type() == [self.degree()]
    }
}

fn check_generators(gens: &[Permutation]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyGenerators);
    };
    let n = first.degree();
    if gens.iter().any(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch);
    }
    Ok(n)
}

/// Every element of ⟨gens⟩ by breadth-first closure, failing once the
/// element count would exceed `bound`.
pub fn group_elements(gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>> {
    let n = check_generators(gens)?;
    let mut elements = vec![Permutation::identity(n)];
    let mut seen: std::collections::HashSet<Permutation> =
        elements.iter().cloned().collect();
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for elem in &frontier {
            for gen in gens {
                let product = gen.compose(elem);
                if seen.insert(product.clone()) {
                    if elements.len() + next.len() + 1 > bound {
                        return Err(Error::GroupTooLarge(bound));
                    }
                    next.push(product);
                }
            }
        }
        elements.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(elements)
}

/// Transitivity of ⟨gens⟩: the orbit of symbol 0 is everything. Needs no
/// closure, only an orbit walk.
pub fn is_transitive(gens: &[Permutation]) -> Result<bool> {
    let n = check_generators(gens)?;
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(point) = stack.pop() {
        for gen in gens {
            let image = gen.apply(point);
            if !seen[image] {
                seen[image] = true;
                count += 1;
                stack.push(image);
            }
        }
    }
    Ok(count == n)
}

/// A group-invariant partition into equal blocks of size 1 < l < n.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    degree: usize,
}

impl TryFrom<Vec<Vec<usize>>> for BlockSystem {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let degree = blocks.iter().map(Vec::len).sum();
        BlockSystem::new(blocks, degree)
    }
}

impl From<BlockSystem> for Vec<Vec<usize>> {
    fn from(b: BlockSystem) -> Vec<Vec<usize>> {
        b.blocks
    }
}

impl BlockSystem {
    /// Validate an equal-size partition of {0, …, degree−1} with nontrivial
    /// block size, and bring it to canonical order.
    pub fn new(mut blocks: Vec<Vec<usize>>, degree: usize) -> Result<Self> {
        let size = blocks.first().map(Vec::len).unwrap_or(0);
        if size <= 1 || size >= degree || blocks.iter().any(|b| b.len() != size) {
            return Err(Error::InvalidBlocks);
        }
        let mut seen = vec![false; degree];
        for block in &mut blocks {
            block.sort_unstable();
            for &x in block.iter() {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidBlocks);
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidBlocks);
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(BlockSystem { blocks, degree })
    }

    /// Partition from a block-id labeling.
    fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut by_label: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(x);
        }
        BlockSystem::new(by_label.into_values().collect(), n)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Does `g` map every block onto a block?
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        let mut label = vec![0usize; self.degree];
        for (id, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[x] = id;
            }
        }
        self.blocks.iter().all(|block| {
            let target = label[g.apply(block[0])];
            block.iter().all(|&x| label[g.apply(x)] == target)
        })
    }
}

/// The finest block system whose block containing `a` also contains `b`,
/// or `None` when that system is the whole symbol set.
///
/// Union-find refinement: merge {a, b}, then close under the generators —
/// whenever two symbols share a class, so must their images. The resulting
/// classes form the minimal invariant partition; blocks of a transitive
/// group automatically come out equal-sized.
pub fn minimal_blocks(
    gens: &[Permutation],
    a: usize,
    b: usize,
) -> Result<Option<BlockSystem>> {
    let n = check_generators(gens)?;
    if !is_transitive(gens)? {
        return Err(Error::NotTransitive);
    }
    assert!(a < n && b < n && a != b, "need two distinct symbols");

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut queue: Vec<(usize, usize)> = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[rx] = ry;
        for gen in gens {
            queue.push((gen.apply(x), gen.apply(y)));
        }
    }

    let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let classes: std::collections::HashSet<usize> = labels.iter().copied().collect();
    if classes.len() <= 1 {
        return Ok(None);
    }
    let system = BlockSystem::from_labels(&labels)?;
    debug_assert!(gens.iter().all(|g| system.is_preserved_by(g)));
    Ok(Some(system))
}

/// Scan for a nontrivial block system: fix symbol 0 and try every partner.
///
/// Returns the first witness found; `None` means the transitive group is
/// primitive.
pub fn is_imprimitive(gens: &[Permutation]) -> Result<Option<BlockSystem>> {
    let n = check_generators(gens)?;
    if !is_transitive(gens)? {
        return Err(Error::NotTransitive);
    }
    for b in 1..n {
        if let Some(system) = minimal_blocks(gens, 0, b)? {
            return Ok(Some(system));
        }
    }
    Ok(None)
}

/// Classification data for ⟨gens⟩ of degree r.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CyclicClassification {
    /// The group is cyclic of order exactly r and transitive.
    pub is_cyclic_order_r_transitive: bool,
    /// The group contains (hence is generated by) an r-cycle.
    pub is_r_cycle_generated: bool,
}

/// Decide both properties independently; a transitive cyclic group of
/// order r on r symbols must turn out r-cycle-generated.
pub fn cyclic_transitive_classification(gens: &[Permutation]) -> Result<CyclicClassification> {
    let r = check_generators(gens)?;
    let elements = match group_elements(gens, r + 1) {
        Ok(elements) => elements,
        // more than r elements: neither property can hold
        Err(Error::GroupTooLarge(_)) => {
            return Ok(CyclicClassification {
                is_cyclic_order_r_transitive: false,
                is_r_cycle_generated: false,
            })
        }
        Err(e) => return Err(e),
    };
    let order = elements.len();
    let cyclic = order == r
        && elements
            .iter()
            .any(|g| element_order(g) == r);
    let transitive = is_transitive(gens)?;
    let r_cycle_generated = order == r && elements.iter().any(Permutation::is_full_cycle);
    Ok(CyclicClassification {
        is_cyclic_order_r_transitive: cyclic && transitive,
        is_r_cycle_generated: r_cycle_generated,
    })
}

/// Order of a single element: the lcm of its cycle lengths.
pub fn element_order(g: &Permutation) -> usize {
    g.cycle_type()
        .into_iter()
        .fold(1usize, |acc, len| acc / gcd(acc, len) * len)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Block system for ⟨σ⟩ where σ = σ₁σ₂ is a product of two disjoint cycles
/// (remaining symbols fixed) generating a group of order equal to the
/// degree.
///
/// With q = gcd(l₁, l₂) > 1, each cycle is cut into q-strided classes of
/// size q and the fixed symbols are grouped q at a time. With q = 1 the
/// longer cycle's symbol set is one block of size l₁, the shorter cycle is
/// padded with fixed symbols up to size l₁, and the leftovers are grouped
/// l₁ at a time.
pub fn disjoint_cycle_blocks(
    cycle1: &[usize],
    cycle2: &[usize],
    degree: usize,
) -> Result<BlockSystem> {
    let (long, short) = if cycle1.len() >= cycle2.len() {
        (cycle1, cycle2)
    } else {
        (cycle2, cycle1)
    };
    let (l1, l2) = (long.len(), short.len());
    if l2 < 2 || l1 + l2 > degree {
        return Err(Error::InvalidBlocks);
    }
    let mut used = vec![false; degree];
    for &x in long.iter().chain(short) {
        if x >= degree || used[x] {
            return Err(Error::InvalidBlocks);
        }
        used[x] = true;
    }
    if lcm(l1, l2) != degree {
        return Err(Error::InvalidBlocks);
    }
    let mut fixed: Vec<usize> = (0..degree).filter(|&x| !used[x]).collect();

    let q = gcd(l1, l2);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if q > 1 {
        // q-strided classes within each cycle are permuted cyclically.
        for cycle in [long, short] {
            let stride = cycle.len() / q;
            for start in 0..stride {
                blocks.push((0..q).map(|j| cycle[start + j * stride]).collect());
            }
        }
        debug_assert_eq!(fixed.len() % q, 0);
        for chunk in fixed.chunks(q) {
            blocks.push(chunk.to_vec());
        }
    } else {
        // coprime lengths force l1 > l2 and degree = l1*l2 >= 2*l1
        blocks.push(long.to_vec());
        let mut padded = short.to_vec();
        for _ in 0..l1 - l2 {
            padded.push(fixed.pop().expect("enough fixed symbols"));
        }
        blocks.push(padded);
        debug_assert_eq!(fixed.len() % l1, 0);
        for chunk in fixed.chunks(l1) {
            blocks.push(chunk.to_vec());
        }
    }
    BlockSystem::new(blocks, degree)
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Is a cyclic r-sheeted cover factorizable, and along which degree pairs?
///
/// The verdict is "r is composite"; the list holds every ordered pair
/// (m, p) with m·p = r and m, p ≥ 2, where m is the degree of the upper map
/// and p the degree of the base map.
pub fn cyclic_cover_factorizable(r: u64) -> Result<(bool, Vec<(u64, u64)>)> {
    if r < 2 {
        return Err(Error::DegreeTooSmall(r));
    }
    let mut factorizations = Vec::new();
    for m in 2..=r / 2 {
        if r % m == 0 {
            let p = r / m;
            if p >= 2 {
                factorizations.push((m, p));
            }
        }
    }
    Ok((!factorizations.is_empty(), factorizations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, points: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[points]).unwrap()
    }

    #[test]
    fn closure_of_four_cycle() {
        let gens = [cycle(4, &[0, 1, 2, 3])];
        assert_eq!(group_elements(&gens, 100).unwrap().len(), 4);
    }

    #[test]
    fn closure_of_s3() {
        let gens = [cycle(3, &[0, 1]), cycle(3, &[1, 2])];
        assert_eq!(group_elements(&gens, 100).unwrap().len(), 6);
    }

    #[test]
    fn closure_of_mixed_cycles() {
        // (0 1)(2 3 4): order lcm(2,3) = 6
        let g = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(group_elements(&[g.clone()], 100).unwrap().len(), 6);
        assert_eq!(element_order(&g), 6);
    }

    #[test]
    fn closure_bound_enforced() {
        let gens = [cycle(5, &[0, 1]), cycle(5, &[0, 1, 2, 3, 4])];
        assert_eq!(group_elements(&gens, 10), Err(Error::GroupTooLarge(10)));
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&[cycle(4, &[0, 1, 2, 3])]).unwrap());
        let two_orbits = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(!is_transitive(&[two_orbits]).unwrap());
        let fixes_five = Permutation::from_cycles(6, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert!(!is_transitive(&[fixes_five]).unwrap());
    }

    #[test]
    fn minimal_blocks_four_cycle() {
        let gens = [cycle(4, &[0, 1, 2, 3])];
        let system = minimal_blocks(&gens, 0, 2).unwrap().unwrap();
        assert_eq!(system.blocks(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn minimal_blocks_prime_degree_trivial() {
        let gens = [cycle(3, &[0, 1, 2])];
        assert_eq!(minimal_blocks(&gens, 0, 1).unwrap(), None);
    }

    #[test]
    fn minimal_blocks_symmetric_group_trivial() {
        let gens = [cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])];
        for b in 1..4 {
            assert_eq!(minimal_blocks(&gens, 0, b).unwrap(), None);
        }
    }

    #[test]
    fn minimal_blocks_requires_transitivity() {
        let two_orbits = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(
            minimal_blocks(&[two_orbits.clone()], 0, 2),
            Err(Error::NotTransitive)
        );
        assert_eq!(is_imprimitive(&[two_orbits]), Err(Error::NotTransitive));
    }

    #[test]
    fn imprimitivity_of_cycles() {
        // composite degree: imprimitive with a block witness
        let witness = is_imprimitive(&[cycle(6, &[0, 1, 2, 3, 4, 5])])
            .unwrap()
            .unwrap();
        assert!(witness.block_size() == 2 || witness.block_size() == 3);
        // prime degree: primitive
        assert_eq!(is_imprimitive(&[cycle(5, &[0, 1, 2, 3, 4])]).unwrap(), None);
    }

    #[test]
    fn blocks_invariant_under_generators() {
        for r in [4usize, 6, 8, 9, 10, 12] {
            let gen = cycle(r, &(0..r).collect::<Vec<_>>());
            if let Some(system) = is_imprimitive(&[gen.clone()]).unwrap() {
                assert!(system.is_preserved_by(&gen));
            }
        }
    }

    #[test]
    fn classification_examples() {
        let c = cyclic_transitive_classification(&[cycle(4, &[0, 1, 2, 3])]).unwrap();
        assert!(c.is_cyclic_order_r_transitive && c.is_r_cycle_generated);

        // (0 1)(2 3) in S4: order 2, not transitive
        let g = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let c = cyclic_transitive_classification(&[g]).unwrap();
        assert!(!c.is_cyclic_order_r_transitive && !c.is_r_cycle_generated);

        // whole S3 on 3 symbols: order 6 > 3
        let c =
            cyclic_transitive_classification(&[cycle(3, &[0, 1]), cycle(3, &[1, 2])]).unwrap();
        assert!(!c.is_cyclic_order_r_transitive && !c.is_r_cycle_generated);
    }

    #[test]
    fn factorizability_examples() {
        assert_eq!(cyclic_cover_factorizable(4).unwrap(), (true, vec![(2, 2)]));
        assert_eq!(cyclic_cover_factorizable(5).unwrap(), (false, vec![]));
        assert_eq!(
            cyclic_cover_factorizable(6).unwrap(),
            (true, vec![(2, 3), (3, 2)])
        );
        assert!(cyclic_cover_factorizable(1).is_err());
    }

    #[test]
    fn disjoint_cycle_blocks_coprime_lengths() {
        // σ = (2 3 4)(0 1) of order 6 in S6, symbol 5 fixed: the 3-cycle is
        // one block, the 2-cycle plus the fixed symbol the other.
        let sigma = Permutation::from_cycles(6, &[&[0, 1], &[2, 3, 4]]).unwrap();
        let system = disjoint_cycle_blocks(&[0, 1], &[2, 3, 4], 6).unwrap();
        assert_eq!(system.block_size(), 3);
        assert!(system.is_preserved_by(&sigma));
    }

    #[test]
    fn disjoint_cycle_blocks_common_divisor() {
        // σ = (0 1 2 3)(4 5 6 7 8 9) of order 12 in S12, two fixed symbols:
        // gcd 2 gives strided blocks of size 2.
        let sigma = Permutation::from_cycles(12, &[&[0, 1, 2, 3], &[4, 5, 6, 7, 8, 9]]).unwrap();
        let system = disjoint_cycle_blocks(&[0, 1, 2, 3], &[4, 5, 6, 7, 8, 9], 12).unwrap();
        assert_eq!(system.block_size(), 2);
        assert!(system.is_preserved_by(&sigma));
        // power closure: every element of <σ> preserves the blocks
        for g in group_elements(&[sigma], 20).unwrap() {
            assert!(system.is_preserved_by(&g));
        }
    }

    #[test]
    fn disjoint_cycle_blocks_rejects_wrong_order() {
        // lcm(2,4) = 4 but the degree is 6: outside the construction
        assert!(disjoint_cycle_blocks(&[0, 1], &[2, 3, 4, 5], 6).is_err());
    }

    #[test]
    fn permutation_wire_format() {
        let g = cycle(4, &[0, 1, 2, 3]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, "[1,2,3,0]");
        let back: Permutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}

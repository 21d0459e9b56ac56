//! Property and cross-checking suites: every implementation route is held
//! against an independent oracle written here (pseudo-remainder sequences,
//! brute-force partition enumeration, exhaustive packing search).

mod common;

use common::*;
use p1spec::chain::{CyclicChain, FactoredSection, Stability};
use p1spec::lambda::LambdaPoly;
use p1spec::pairs::BgType;
use p1spec::perm::{
    disjoint_cycle_blocks, group_elements, is_transitive, minimal_blocks, BlockSystem,
    Permutation,
};
use p1spec::poly::Poly;
use p1spec::rational::Rational;
use p1spec::section::Section;
use proptest::prelude::*;
use rand::Rng;

// ---- ratpoly ring axioms ----

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..6).prop_map(|v| Poly::from_int_coeffs(&v))
}

proptest! {
    #[test]
    fn poly_addition_associative(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn poly_multiplication_distributes(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn rational_parse_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::from_ratio(n, d).unwrap();
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }
}

// ---- resultant vs common-factor oracle ----

/// Pseudo-remainder of f by g in the spectral variable, test-side oracle
/// machinery: only the vanishing pattern matters, and scaling rows by the
/// leading coefficient (a unit over the fraction field) preserves it.
fn lambda_prem(f: &LambdaPoly, g: &LambdaPoly) -> LambdaPoly {
    let dg = g.degree().unwrap();
    let lcg = LambdaPoly::constant(g.leading_coeff().unwrap().clone());
    let mut rem = f.clone();
    while let Some(dr) = rem.degree() {
        if dr < dg {
            break;
        }
        let lead = rem.leading_coeff().unwrap().clone();
        rem = &(&lcg * &rem) - &(&LambdaPoly::monomial(lead, dr - dg) * g);
    }
    rem
}

/// Do f and g share a factor of positive degree in the spectral variable?
/// Euclidean chain with pseudo-remainders over the rational-function field.
fn share_lambda_factor(f: &LambdaPoly, g: &LambdaPoly) -> bool {
    let (mut a, mut b) = if f.degree() >= g.degree() {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    loop {
        match b.degree() {
            None => return a.degree().is_some_and(|d| d > 0),
            Some(0) => return false,
            Some(_) => {
                let r = lambda_prem(&a, &b);
                a = std::mem::replace(&mut b, r);
            }
        }
    }
}

fn random_lambda(rng: &mut rand::rngs::StdRng, max_lambda_deg: usize) -> LambdaPoly {
    let deg = rng.random_range(1..=max_lambda_deg);
    let mut coeffs: Vec<Poly> = (0..deg).map(|_| random_poly(rng, 3)).collect();
    loop {
        let lead = random_poly(rng, 3);
        if !lead.is_zero() {
            coeffs.push(lead);
            break;
        }
    }
    LambdaPoly::from_coeffs(coeffs)
}

#[test]
fn resultant_vanishes_exactly_on_common_factors() {
    let mut rng = rng(42);
    let mut vanishing_seen = 0;
    for trial in 0..200 {
        let (f, g) = if trial % 3 == 0 {
            // plant a shared factor
            let shared = random_lambda(&mut rng, 2);
            let f = &shared * &random_lambda(&mut rng, 2);
            let g = &shared * &random_lambda(&mut rng, 2);
            (f, g)
        } else {
            (random_lambda(&mut rng, 4), random_lambda(&mut rng, 4))
        };
        let res = LambdaPoly::resultant(&f, &g).unwrap();
        let shared = share_lambda_factor(&f, &g);
        assert_eq!(
            res.is_zero(),
            shared,
            "resultant/gcd disagreement for f={f}, g={g}"
        );
        if res.is_zero() {
            vanishing_seen += 1;
        }
    }
    assert!(vanishing_seen >= 50, "the planted cases must exercise the zero branch");
}

#[test]
fn squarefree_agrees_with_root_multiplicities() {
    let mut rng = rng(7);
    for _ in 0..100 {
        // product of distinct linear factors with random multiplicities
        let count = rng.random_range(1..=3);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < count {
            let c = rng.random_range(-4..=4);
            if !roots.contains(&c) {
                roots.push(c);
            }
        }
        let mults: Vec<usize> = roots.iter().map(|_| rng.random_range(1..=3)).collect();
        let mut poly = Poly::one();
        for (root, mult) in roots.iter().zip(&mults) {
            poly = &poly * &Poly::linear_root(&Rational::from_int(*root)).pow(*mult);
        }
        let (squarefree, _) = poly.gcd_squarefree().unwrap();
        assert_eq!(squarefree, mults.iter().all(|&m| m == 1));
        // rational_roots recovers the multiplicities exactly
        let mut expected: Vec<(Rational, usize)> = roots
            .iter()
            .zip(&mults)
            .map(|(r, m)| (Rational::from_int(*r), *m))
            .collect();
        expected.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(poly.rational_roots(), expected);
    }
}

#[test]
fn zero_profile_totals_match_twist() {
    let mut rng = rng(11);
    for _ in 0..100 {
        let k = rng.random_range(1..=8);
        let deg = rng.random_range(0..=k);
        let s = Section::new(k, random_poly_exact_degree(&mut rng, deg as usize)).unwrap();
        assert_eq!(s.zero_profile().unwrap().total(), k as usize);
    }
}

// ---- pairs: covariance and equivalence sweeps ----

#[test]
fn newton_and_determinant_routes_agree_randomized() {
    let mut rng = rng(2024);
    for _ in 0..60 {
        let r = rng.random_range(1..=4);
        let t = rng.random_range(1..=3);
        let pair = random_pair(&mut rng, r, t, 3);
        assert_eq!(pair.char_coefficients_newton(), pair.char_coefficients_det());
    }
}

#[test]
fn characteristic_coefficients_are_chart_covariant() {
    let mut rng = rng(55);
    for _ in 0..30 {
        let r = rng.random_range(1..=4);
        let t = rng.random_range(1..=3);
        let pair = random_pair(&mut rng, r, t, 3);
        let s = pair.char_coefficients_det();
        let s_flipped = pair.flipped().char_coefficients_det();
        for (a, b) in s.sections().iter().zip(s_flipped.sections()) {
            assert_eq!(&a.flipped(), b, "coefficient not covariant for {pair:?}");
        }
    }
}

// ---- block systems: Atkinson vs brute force ----

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn equal_partitions(symbols: &[usize], block_size: usize) -> Vec<Vec<Vec<usize>>> {
    if symbols.is_empty() {
        return vec![Vec::new()];
    }
    let first = symbols[0];
    let mut out = Vec::new();
    for companions in combinations(&symbols[1..], block_size - 1) {
        let mut block = vec![first];
        block.extend(&companions);
        let rest: Vec<usize> = symbols[1..]
            .iter()
            .copied()
            .filter(|x| !companions.contains(x))
            .collect();
        for mut partition in equal_partitions(&rest, block_size) {
            partition.insert(0, block.clone());
            out.push(partition);
        }
    }
    out
}

/// All nontrivial preserved equal-size partitions of the group.
fn preserved_systems(gens: &[Permutation]) -> Vec<BlockSystem> {
    let n = gens[0].degree();
    let symbols: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for l in 2..n {
        if n % l != 0 {
            continue;
        }
        for partition in equal_partitions(&symbols, l) {
            let system = BlockSystem::new(partition, n).unwrap();
            if gens.iter().all(|g| system.is_preserved_by(g)) {
                out.push(system);
            }
        }
    }
    out
}

/// Brute-force finest block system containing a and b together: the unique
/// preserved partition of minimal block size among those joining the pair.
fn brute_minimal_blocks(gens: &[Permutation], a: usize, b: usize) -> Option<BlockSystem> {
    let joined: Vec<BlockSystem> = preserved_systems(gens)
        .into_iter()
        .filter(|sys| {
            sys.blocks()
                .iter()
                .any(|block| block.contains(&a) && block.contains(&b))
        })
        .collect();
    let min_size = joined.iter().map(BlockSystem::block_size).min()?;
    let finest: Vec<&BlockSystem> = joined
        .iter()
        .filter(|s| s.block_size() == min_size)
        .collect();
    assert_eq!(finest.len(), 1, "the finest joining system is unique");
    Some(finest[0].clone())
}

#[test]
fn atkinson_matches_brute_force_on_group_corpus() {
    let corpus: Vec<Vec<Permutation>> = vec![
        // cyclic groups of composite and prime degree
        vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()],
        vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()],
        vec![Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap()],
        vec![Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]).unwrap()],
        // Klein four-group acting regularly
        vec![
            Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ],
        // dihedral on the square
        vec![
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[&[1, 3]]).unwrap(),
        ],
        // full symmetric group: primitive
        vec![
            Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ],
        // two interleaved four-cycles with a swap
        vec![
            Permutation::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).unwrap(),
            Permutation::from_cycles(8, &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]).unwrap(),
        ],
    ];
    for gens in &corpus {
        assert!(is_transitive(gens).unwrap());
        let n = gens[0].degree();
        for b in 1..n {
            assert_eq!(
                minimal_blocks(gens, 0, b).unwrap(),
                brute_minimal_blocks(gens, 0, b),
                "disagreement at degree {n}, pair (0,{b})"
            );
        }
    }
}

// ---- Example cyclic2 constructions ----

#[test]
fn disjoint_cycle_constructions_up_to_degree_12() {
    // every (l1, l2) with 2 <= l2 <= l1, lcm = degree <= 12, and enough room
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    };
    let mut cases = 0;
    for l1 in 2..=10usize {
        for l2 in 2..=l1 {
            let r = l1 / gcd(l1, l2) * l2;
            if r > 12 || l1 + l2 > r {
                continue;
            }
            let cycle1: Vec<usize> = (0..l1).collect();
            let cycle2: Vec<usize> = (l1..l1 + l2).collect();
            let sigma = Permutation::from_cycles(
                r,
                &[cycle1.as_slice(), cycle2.as_slice()],
            )
            .unwrap();
            let system = disjoint_cycle_blocks(&cycle1, &cycle2, r).unwrap();
            for g in group_elements(&[sigma], r + 1).unwrap() {
                assert!(
                    system.is_preserved_by(&g),
                    "blocks not invariant for l1={l1}, l2={l2}"
                );
            }
            cases += 1;
        }
    }
    assert!(cases >= 4, "expected the enumerated small cases, saw {cases}");
}

// ---- chains: packing completeness and instability sweeps ----

fn brute_packable(degrees: &[i64], caps: &[i64]) -> bool {
    fn rec(degrees: &[i64], idx: usize, loads: &mut Vec<i64>, caps: &[i64]) -> bool {
        if idx == degrees.len() {
            return true;
        }
        for s in 0..caps.len() {
            if loads[s] + degrees[idx] <= caps[s] {
                loads[s] += degrees[idx];
                if rec(degrees, idx + 1, loads, caps) {
                    return true;
                }
                loads[s] -= degrees[idx];
            }
        }
        false
    }
    rec(degrees, 0, &mut vec![0; caps.len()], caps)
}

fn chain_capacities(bg: &BgType, t: i64) -> Vec<i64> {
    let m = bg.numbers();
    let r = m.len();
    let mut caps: Vec<i64> = (0..r - 1).map(|i| m[i + 1] - m[i] + t).collect();
    caps.push(m[0] - m[r - 1] + t);
    caps
}

#[test]
fn packer_decision_matches_exhaustive_search() {
    let mut rng = rng(99);
    let mut failures_seen = 0;
    for _ in 0..300 {
        let r = rng.random_range(2..=4usize);
        let t = rng.random_range(1..=3i64);
        let bg = loop {
            let candidate = random_bg(&mut rng, r);
            if candidate.grothendieck_constraint(t) {
                break candidate;
            }
        };
        let caps = chain_capacities(&bg, t);
        let budget = t * r as i64;
        let mut degrees: Vec<i64> = Vec::new();
        let mut used = 0;
        for _ in 0..rng.random_range(0..=4) {
            let d = rng.random_range(1..=3);
            if used + d <= budget {
                degrees.push(d);
                used += d;
            }
        }
        let factors: Vec<(Poly, usize)> = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut coeffs = vec![0i64; d as usize + 1];
                coeffs[0] = i as i64 + 1;
                coeffs[d as usize] = 1;
                (Poly::from_int_coeffs(&coeffs), 1)
            })
            .collect();
        let s = FactoredSection::new(budget, Rational::one(), factors).unwrap();
        let built = CyclicChain::build(bg.clone(), t, &s);
        let expected = brute_packable(&degrees, &caps);
        assert_eq!(
            built.is_ok(),
            expected,
            "packing decision wrong for bg={bg:?}, t={t}, degrees={degrees:?}"
        );
        if let Ok(chain) = built {
            // the product of the slots reproduces s up to the cycle sign
            let det = chain.determinant();
            let expanded = s.expand();
            let signed = if (r - 1) % 2 == 1 {
                expanded.scale(&Rational::from_int(-1))
            } else {
                expanded
            };
            assert_eq!(det, signed);
        } else {
            failures_seen += 1;
        }
    }
    assert!(failures_seen > 0, "sweep should include unpackable instances");
}

#[test]
fn failed_grothendieck_constraint_means_unstable_zero_determinant_chains() {
    // exhaustive r <= 3, |m_i| <= 4, t <= 2: on a splitting violating the
    // constraint, every constructible chain has determinant zero and is
    // unstable.
    let entry_pool = |cap: i64| -> Vec<Poly> {
        if cap < 0 {
            vec![Poly::zero()]
        } else if cap == 0 {
            vec![Poly::zero(), Poly::one()]
        } else {
            vec![Poly::zero(), Poly::one(), Poly::from_int_coeffs(&[0, 1])]
        }
    };
    let mut sweeps = 0;
    for t in 1..=2i64 {
        for r in 2..=3usize {
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == r {
                    let bg = BgType::new(prefix.clone()).unwrap();
                    if bg.grothendieck_constraint(t) {
                        continue;
                    }
                    let caps = chain_capacities(&bg, t);
                    let pools: Vec<Vec<Poly>> =
                        caps.iter().map(|&c| entry_pool(c)).collect();
                    let mut indices = vec![0usize; r];
                    loop {
                        let entries: Vec<Poly> = indices
                            .iter()
                            .zip(&pools)
                            .map(|(&i, pool)| pool[i].clone())
                            .collect();
                        let chain = CyclicChain::new(t, bg.clone(), entries).unwrap();
                        assert!(chain.determinant().is_zero());
                        assert_eq!(chain.stability(), Stability::Unstable);
                        sweeps += 1;
                        // advance the odometer
                        let mut pos = 0;
                        loop {
                            if pos == r {
                                break;
                            }
                            indices[pos] += 1;
                            if indices[pos] < pools[pos].len() {
                                break;
                            }
                            indices[pos] = 0;
                            pos += 1;
                        }
                        if pos == r {
                            break;
                        }
                    }
                    continue;
                }
                let hi = prefix.last().copied().unwrap_or(4);
                for next in -4..=hi {
                    let mut extended = prefix.clone();
                    extended.push(next);
                    stack.push(extended);
                }
            }
        }
    }
    assert!(sweeps > 1000, "exhaustive sweep must cover the grid, saw {sweeps}");
}

// ---- spectral cross-checks ----

#[test]
fn cyclic_discriminant_closed_form_sample() {
    let mut rng = rng(77);
    for r in 2..=6usize {
        for _ in 0..3 {
            let t = rng.random_range(1..=2i64);
            let s = Section::new(t * r as i64, random_poly(&mut rng, t * r as i64)).unwrap();
            if s.is_zero() {
                continue;
            }
            let tuple = p1spec::HitchinTuple::cyclic(t, r, s.clone()).unwrap();
            let disc = p1spec::spectral::discriminant_section(&tuple).unwrap();
            // ± r^r s^{r−1}: sign (−1)^{r²−1}, i.e. − for even r, + for odd
            let magnitude = Rational::from_int(r as i64).pow(r as u32);
            let signed = if r % 2 == 0 {
                -magnitude
            } else {
                magnitude
            };
            let expected = s.pow(r as u32 - 1).scale(&signed);
            assert_eq!(disc.rep(), expected.rep(), "r={r}");
        }
    }
}

#[test]
fn tower_uniqueness_surrogate() {
    // fixed inputs give identical ledgers, over a sample grid
    for t in 2..=4i64 {
        for (m, p) in [(2i64, 2i64), (2, 3), (3, 2), (4, 2)] {
            let r = m * p;
            for d in [-2i64, 0, 7] {
                let a = p1spec::tower::plan_tower(t, r, m, p, d).unwrap();
                let b = p1spec::tower::plan_tower(t, r, m, p, d).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.d_prime - a.d, a.g_top - 1 + a.r);
            }
        }
    }
}

use proptest::prelude::*;

use rotsieve_core::crystal::{
    path_bijection, TensorConvention, TensorCrystal, TensorCrystalElement,
};
use rotsieve_core::csp::{csp_check, cyclotomic, eval_matches, Verdict};
use rotsieve_core::kostka::{
    charge, invariant_dim, kostka_foulkes, partitions, q_kostant, semistandard_tableaux, Partition,
};
use rotsieve_core::paths::{enumerate_paths, rotate, rotate_times, WeightSequence};
use rotsieve_core::tableaux::{path_to_tableau, promote, tableau_to_path};
use rotsieve_core::{Family, IntPolynomial, RootSystem, Weight};

const TYPES: [(Family, usize); 13] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 3),
    (Family::C, 4),
    (Family::D, 4),
    (Family::D, 5),
    (Family::E, 6),
    (Family::E, 7),
    (Family::G, 2),
];

fn root_system() -> impl Strategy<Value = RootSystem> {
    (0..TYPES.len()).prop_map(|k| RootSystem::new(TYPES[k].0, TYPES[k].1).unwrap())
}

fn weight(rank: usize, bound: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-bound..=bound, rank).prop_map(Weight::from_coords)
}

fn system_and_weight(bound: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    root_system().prop_flat_map(move |rs| {
        let r = rs.rank();
        (Just(rs), weight(r, bound))
    })
}

/// Minuscule types small enough for exhaustive work, with a length bound.
const MINUSCULE_TYPES: [(Family, usize, usize); 7] = [
    (Family::A, 1, 8),
    (Family::A, 2, 6),
    (Family::A, 3, 5),
    (Family::B, 3, 4),
    (Family::C, 3, 4),
    (Family::D, 4, 4),
    (Family::E, 6, 4),
];

/// `(type index, 0-based nodes)` of a minuscule sequence.
fn minuscule_sequence() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..MINUSCULE_TYPES.len()).prop_flat_map(|k| {
        let (f, r, max_len) = MINUSCULE_TYPES[k];
        let nodes = RootSystem::new(f, r).unwrap().minuscule_nodes().to_vec();
        (Just(k), prop::collection::vec(prop::sample::select(nodes), 1..=max_len))
    })
}

fn type_of(k: usize) -> RootSystem {
    let (f, r, _) = MINUSCULE_TYPES[k];
    RootSystem::new(f, r).unwrap()
}

/// Type A sequences `(rank, nodes)`.
fn type_a_sequence() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=3).prop_flat_map(|rank| {
        let max_len = [0, 8, 6, 5][rank];
        (Just(rank), prop::collection::vec(0..rank, 1..=max_len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflections_are_involutions((rs, w) in system_and_weight(3)) {
        for i in 0..rs.rank() {
            let once = rs.simple_reflection(i, &w).unwrap();
            prop_assert_eq!(rs.simple_reflection(i, &once).unwrap(), w.clone());
        }
    }

    #[test]
    fn to_dominant_is_minimal((rs, w) in system_and_weight(3)) {
        let (dom, word) = rs.to_dominant(&w);
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(word.apply(&rs, &w), dom.clone());
        prop_assert_eq!(word.len(), rs.count_negative_pairings(&w));
        prop_assert_eq!(rs.two_rho_pairing(&dom) >= rs.two_rho_pairing(&w), true);
    }

    #[test]
    fn root_lattice_is_a_lattice((rs, w) in system_and_weight(4), i in 0usize..8) {
        let i = i % rs.rank();
        let shifted = &w + &rs.simple_root(i).unwrap();
        prop_assert_eq!(rs.in_root_lattice(&shifted), rs.in_root_lattice(&w));
        prop_assert!(rs.in_root_lattice(&rs.simple_root(i).unwrap()));
    }

    #[test]
    fn stabilizer_lemma(
        k in 0..MINUSCULE_TYPES.len(),
        beta in prop::collection::vec(0i64..=3, 7),
        pick in any::<prop::sample::Index>(),
        orbit_pick in any::<prop::sample::Index>(),
    ) {
        let rs = type_of(k);
        let beta = Weight::from_coords(beta[..rs.rank()].to_vec());
        let lambda = pick.get(&rs.minuscule_weights()).clone();
        let orbit = rs.weyl_orbit(&lambda).unwrap();
        for mu in &orbit {
            prop_assert!(rs.positive_coroots().iter().all(|v| rs.pair_coroot(mu, v).abs() <= 1));
        }
        let x = orbit_pick.get(&orbit);
        let (_, word) = rs.to_dominant(&(&beta + x));
        prop_assert_eq!(word.apply(&rs, &beta), beta);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn paths_rotation_and_counting((k, nodes) in minuscule_sequence()) {
        let rs = type_of(k);
        let seq = WeightSequence::from_nodes(&rs, &nodes).unwrap();
        let paths = enumerate_paths(&seq).unwrap();
        prop_assert_eq!(paths.len() as u64, invariant_dim(&seq).unwrap());
        let target = enumerate_paths(&seq.rotated(1)).unwrap();
        let mut images: Vec<_> = paths.iter().map(|p| rotate(&seq, p).unwrap()).collect();
        images.sort();
        prop_assert_eq!(&images, &target);
        for p in &paths {
            prop_assert_eq!(&rotate_times(&seq, p, seq.len()).unwrap(), p);
        }
    }

    #[test]
    fn crystal_matches_paths((k, nodes) in minuscule_sequence()) {
        let rs = type_of(k);
        let seq = WeightSequence::from_nodes(&rs, &nodes).unwrap();
        let crystal = TensorCrystal::new(&rs);
        let paths = enumerate_paths(&seq).unwrap();
        let mut images: Vec<_> = paths.iter().map(path_bijection).collect();
        images.sort();
        prop_assert_eq!(&images, &crystal.invariant_elements(&seq).unwrap());
        for p in &paths {
            let b = path_bijection(p);
            prop_assert_eq!(
                crystal.commutor_rotate(&seq, &b).unwrap(),
                path_bijection(&rotate(&seq, p).unwrap())
            );
        }
    }

    #[test]
    fn schutzenberger_involution(
        (k, nodes) in minuscule_sequence(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 8),
        seeds in prop::collection::vec(any::<u64>(), 5),
    ) {
        let rs = type_of(k);
        let seq = WeightSequence::from_nodes(&rs, &nodes).unwrap();
        let factors: Vec<Weight> = seq
            .weights()
            .iter()
            .zip(&picks)
            .map(|(l, ix)| ix.get(&rs.weyl_orbit(l).unwrap()).clone())
            .collect();
        let b = TensorCrystalElement::new(&seq, factors).unwrap();
        let crystal = TensorCrystal::new(&rs);
        let xi = crystal.schutzenberger(&b).unwrap();
        prop_assert_eq!(&crystal.schutzenberger(&xi).unwrap(), &b);
        let w0: Vec<i64> = (0..rs.rank()).map(|i| -b.weight().coords()[rs.dual_node(i)]).collect();
        prop_assert_eq!(xi.weight(), Weight::from_coords(w0));
        for seed in seeds {
            let mut state = seed;
            let mut policy = |c: &[usize]| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                c[(state >> 33) as usize % c.len()]
            };
            prop_assert_eq!(&crystal.schutzenberger_with(&b, &mut policy).unwrap(), &xi);
        }
        for i in 0..rs.rank() {
            if let Some(up) = crystal.raise(i, &b).unwrap() {
                prop_assert_eq!(crystal.lower(i, &up).unwrap(), Some(b.clone()));
            }
            if let Some(down) = crystal.lower(i, &b).unwrap() {
                prop_assert_eq!(crystal.raise(i, &down).unwrap(), Some(b.clone()));
            }
        }
    }

    #[test]
    fn promotion_is_rotation((rank, nodes) in type_a_sequence()) {
        let rs = RootSystem::new(Family::A, rank).unwrap();
        let seq = WeightSequence::from_nodes(&rs, &nodes).unwrap();
        let next = seq.rotated(1);
        for p in enumerate_paths(&seq).unwrap() {
            let t = path_to_tableau(&seq, &p).unwrap();
            prop_assert_eq!(tableau_to_path(&rs, &t).unwrap(), (seq.clone(), p.clone()));
            let promoted = promote(&t);
            prop_assert_eq!(&promoted, &path_to_tableau(&next, &rotate(&seq, &p).unwrap()).unwrap());
            let mut content = t.content();
            content.rotate_left(1);
            prop_assert_eq!(promoted.content(), content);
            let mut cur = t.clone();
            for _ in 0..seq.len() {
                cur = promote(&cur);
            }
            prop_assert_eq!(cur, t);
        }
    }

    #[test]
    fn type_a_cyclic_sieving((rank, block) in type_a_sequence(), copies in 1usize..=3) {
        let rs = RootSystem::new(Family::A, rank).unwrap();
        let nodes: Vec<usize> = block.iter().cycle().take(block.len() * copies).copied().collect();
        prop_assume!(nodes.len() <= [0, 8, 6, 5][rank]);
        let seq = WeightSequence::from_nodes(&rs, &nodes).unwrap();
        prop_assume!(rs.in_root_lattice(&seq.total()));
        for ell in (1..=seq.len()).filter(|&l| seq.is_periodic(l)) {
            let report = csp_check(&seq, ell, None).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Pass, "ell = {}", ell);
            for d in 0..report.r {
                let g = gcd(d, report.r) % report.r;
                prop_assert_eq!(report.fixed_counts[d], report.fixed_counts[g]);
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn shape_and_content(max: u32) -> impl Strategy<Value = (Partition, Vec<u32>)> {
    (1..=max).prop_flat_map(|n| {
        let parts = partitions(n);
        let count = parts.len();
        (0..count, 0..count, Just(parts)).prop_flat_map(|(a, b, parts)| {
            let nu = parts[a].clone();
            let gamma = parts[b].parts().to_vec();
            (Just(nu), Just(gamma).prop_shuffle())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charge_agrees_with_q_kostant((nu, content) in shape_and_content(7)) {
        let k = kostka_foulkes(&nu, &content).unwrap();
        prop_assert_eq!(&k, &q_kostant(&nu, &content).unwrap());
        let sorted = Partition::sorted(&content);
        prop_assert_eq!(&k, &kostka_foulkes(&nu, sorted.parts()).unwrap());
        prop_assert_eq!(k.eval(1), semistandard_tableaux(&nu, &sorted).len() as i64);
        if let Some(deg) = k.degree() {
            prop_assert_eq!(deg as u64, sorted.n_statistic() - nu.n_statistic());
        }
    }

    #[test]
    fn charge_of_standard_words_is_bounded(word in Just((1u32..=6).collect::<Vec<_>>()).prop_shuffle()) {
        let c = charge(&word).unwrap();
        prop_assert!(c <= 15);
    }

    #[test]
    fn evaluation_at_one(coeffs in prop::collection::vec(-5i64..=5, 0..12), r in 1usize..=12) {
        let f = IntPolynomial::from_coeffs(coeffs);
        prop_assert!(eval_matches(&f, r, 0, f.eval(1)));
        prop_assert!(eval_matches(&f, r, r, f.eval(1)));
    }

    #[test]
    fn polynomial_ring_laws(
        a in prop::collection::vec(-9i64..=9, 0..8),
        b in prop::collection::vec(-9i64..=9, 0..8),
        x in -3i64..=3,
    ) {
        let (a, b) = (IntPolynomial::from_coeffs(a), IntPolynomial::from_coeffs(b));
        prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
        prop_assert_eq!((&a + &b).eval(x), a.eval(x) + b.eval(x));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let phi = cyclotomic(5);
        let (q, r) = a.div_rem_monic(&phi);
        prop_assert_eq!(&(&q * &phi) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < 4));
    }
}

#[test]
fn cyclotomic_products() {
    for r in 1..=48 {
        let product = (1..=r)
            .filter(|d| r % d == 0)
            .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(product, &IntPolynomial::monomial(1, r) - &IntPolynomial::one(), "r = {r}");
    }
}

/// The commutor cross-check singles out the tensor convention.
#[test]
fn mirrored_convention_breaks_the_commutor_check() {
    let rs = RootSystem::new(Family::A, 2).unwrap();
    let seq = WeightSequence::from_nodes(&rs, &[0, 0, 1, 0, 1, 1]).unwrap();
    let mirrored = TensorCrystal::with_convention(&rs, TensorConvention::AntiKashiwara);
    let paths = enumerate_paths(&seq).unwrap();
    let agrees = paths.iter().all(|p| {
        let b = path_bijection(p);
        mirrored.commutor_rotate(&seq, &b).ok() == Some(path_bijection(&rotate(&seq, p).unwrap()))
    });
    assert!(!agrees);
    let crystal = TensorCrystal::new(&rs);
    for p in &paths {
        let b = path_bijection(p);
        assert_eq!(crystal.commutor_rotate(&seq, &b).unwrap(), path_bijection(&rotate(&seq, p).unwrap()));
    }
}

//! Property tests. Each property is checked against an oracle that does not
//! share code with the implementation under test.

use aqc_core::channel_sim::{analytic_bdd_error, simulate_z_with_matrix, SimOptions};
use aqc_core::code_families::{bch, bch_dimension_formula, reed_muller};
use aqc_core::css_asym::{css_construct, singleton_check, SingletonVerdict};
use aqc_core::finite_field::{cyclotomic_cosets, make_field, multiplicative_order, qary_weight};
use aqc_core::linear_code::{
    is_subcode, krawtchouk, macwilliams, weight_distribution, LinearCode, Matrix, SparseBinaryMatrix,
};
use aqc_core::lp_bounds::{lp_feasible, Verdict};
use num_bigint::BigInt;
use proptest::prelude::*;

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn generator(p: u32, n: usize, max_rows: usize) -> impl Strategy<Value = Matrix> {
    (0..=max_rows).prop_flat_map(move |rows| {
        prop::collection::vec(prop::collection::vec(0..p, n), rows)
            .prop_map(move |g| Matrix::from_rows(p, n, &g).expect("well formed"))
    })
}

fn binary_code(max_n: usize) -> impl Strategy<Value = LinearCode> {
    (1..=max_n).prop_flat_map(|n| generator(2, n, n)).prop_map(|g| LinearCode::from_generator(&g))
}

/// Distribution of all `GF(2)^n` vectors orthogonal to `code`.
fn brute_dual(code: &LinearCode) -> Vec<u64> {
    let n = code.n();
    let masks: Vec<u32> = code
        .generator()
        .to_rows()
        .iter()
        .map(|r| r.iter().enumerate().fold(0u32, |m, (i, &b)| m | (b << i)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for v in 0u32..(1 << n) {
        if masks.iter().all(|m| (m & v).count_ones() % 2 == 0) {
            counts[v.count_ones() as usize] += 1;
        }
    }
    counts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn macwilliams_matches_brute_force_dual(code in binary_code(12)) {
        let dist = weight_distribution(&code, 16).unwrap();
        let t = macwilliams(&dist, code.k(), code.n()).unwrap();
        prop_assert_eq!(&t.counts, &brute_dual(&code));
        // transforming back recovers the original distribution
        let back = macwilliams(&t, code.n() - code.k(), code.n()).unwrap();
        prop_assert_eq!(back.counts, dist.counts);
    }

    #[test]
    fn dual_is_an_involution(p in prop::sample::select(vec![2u32, 3, 5]), n in 1usize..10, seed in any::<u64>()) {
        let rows = (seed % (n as u64 + 1)) as usize;
        let g: Vec<Vec<u32>> = (0..rows)
            .map(|r| (0..n).map(|c| ((seed >> ((r * n + c) % 60)) as u32 ^ (r * 7 + c * 3) as u32) % p).collect())
            .collect();
        let code = LinearCode::from_generator(&Matrix::from_rows(p, n, &g).unwrap());
        let dual = code.dual();
        prop_assert_eq!(code.k() + dual.k(), n);
        prop_assert!(dual.dual().same_code(&code));
        prop_assert!(code.generator().mul_transpose(dual.generator()).unwrap().is_zero());
    }

    #[test]
    fn krawtchouk_orthogonality(n in 1usize..13, j in 0usize..13, l in 0usize..13) {
        prop_assume!(j <= n && l <= n);
        let sum: BigInt = (0..=n)
            .map(|i| BigInt::from(binom(n, i)) * krawtchouk(j, i, n).unwrap() * krawtchouk(l, i, n).unwrap())
            .sum();
        let expected = if j == l { BigInt::from(binom(n, j)) << n } else { BigInt::from(0) };
        prop_assert_eq!(sum, expected);
    }

    #[test]
    fn cosets_partition_and_are_closed(q in prop::sample::select(vec![2usize, 3, 4, 5]), n in 1usize..200) {
        prop_assume!(num_integer::gcd(n, q) == 1);
        let cosets = cyclotomic_cosets(n, q).unwrap();
        let mut seen = vec![0u32; n];
        let ord = multiplicative_order(q, n).unwrap();
        for c in &cosets {
            prop_assert_eq!(ord % c.members.len(), 0);
            for &x in &c.members {
                seen[x] += 1;
                prop_assert!(c.members.binary_search(&(x * q % n)).is_ok());
            }
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
    }

    #[test]
    fn qary_weight_digit_identities(h in 0u64..1_000_000, g in 0u64..1_000_000, q in 2u64..10) {
        prop_assert_eq!(qary_weight(h * q, q), qary_weight(h, q));
        prop_assert_eq!(qary_weight(h, q) % (q - 1).max(1), h % (q - 1).max(1));
        prop_assert!(qary_weight(h + g, q) <= qary_weight(h, q) + qary_weight(g, q));
        let digits: u64 = std::iter::successors(Some(h), |&x| (x >= q).then_some(x / q)).map(|x| x % q).sum();
        prop_assert_eq!(qary_weight(h, q), digits);
    }

    #[test]
    fn trace_is_linear_over_the_subfield(
        (p, s, sub) in prop::sample::select(vec![(2u32, 4u32, 1u32), (2, 4, 2), (3, 2, 1), (2, 6, 3), (5, 2, 1)]),
        a in any::<u32>(), b in any::<u32>(), c in any::<u32>(),
    ) {
        let f = make_field(p, s).unwrap();
        let (a, b) = (a % f.size(), b % f.size());
        let subq = p.pow(sub);
        // scalars of the subfield are the fixed points of x -> x^(p^sub)
        let scalar = (0..f.size()).filter(|&x| f.in_subfield(x, sub)).nth((c % subq) as usize).unwrap();
        let tr = |x| f.trace(x, sub).unwrap();
        prop_assert_eq!(tr(f.add(a, b)), f.add(tr(a), tr(b)));
        prop_assert_eq!(tr(f.mul(scalar, a)), f.mul(scalar, tr(a)));
        prop_assert!(f.in_subfield(tr(a), sub));
    }

    #[test]
    fn field_inverse_and_distributivity(
        (p, s) in prop::sample::select(vec![(2u32, 1u32), (2, 8), (3, 3), (7, 2), (2, 12)]),
        a in any::<u32>(), b in any::<u32>(), c in any::<u32>(),
    ) {
        let f = make_field(p, s).unwrap();
        let (a, b, c) = (a % f.size(), b % f.size(), c % f.size());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn bdd_error_is_monotone(n in 2usize..300, p1 in 0.0f64..0.5, p2 in 0.0f64..0.5, d in 1usize..20) {
        prop_assume!(d + 2 <= n);
        let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let a = analytic_bdd_error(n, d, lo).unwrap();
        let b = analytic_bdd_error(n, d, hi).unwrap();
        prop_assert!(a <= b * (1.0 + 1e-12) + 1e-300);
        // a larger radius never hurts
        let c = analytic_bdd_error(n, d + 2, hi).unwrap();
        prop_assert!(c <= b * (1.0 + 1e-12) + 1e-300);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn simulation_is_seed_deterministic(seed in any::<u64>(), p in 0.0f64..0.2, workers in 1usize..5) {
        let h = SparseBinaryMatrix::from_row_adjacency(7, vec![vec![0, 1, 2, 4], vec![1, 2, 3, 5], vec![2, 3, 4, 6]]).unwrap();
        let base = simulate_z_with_matrix(&h, p, &SimOptions::new(300, seed)).unwrap();
        let again = simulate_z_with_matrix(&h, p, &SimOptions { workers: Some(workers), ..SimOptions::new(300, seed) }).unwrap();
        prop_assert_eq!(base.block_errors, base.converged_wrong + base.diverged);
        prop_assert_eq!(base.iteration_histogram.iter().sum::<u64>(), 300);
        prop_assert_eq!(base, again);
    }

    #[test]
    fn constructed_codes_pass_lp_and_singleton(n in 4usize..11, seed in any::<u64>()) {
        let mut state = seed | 1;
        let mut bit = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state & 1) as u32
        };
        let kx = 1 + (seed as usize % (n - 1));
        let gx: Vec<Vec<u32>> = (0..kx).map(|_| (0..n).map(|_| bit()).collect()).collect();
        let c_x = LinearCode::from_generator(&Matrix::from_rows(2, n, &gx).unwrap());
        // C_z = C_x^perp plus random rows, so that C_x^perp <= C_z
        let mut gz = c_x.dual().generator().clone();
        for _ in 0..(seed as usize / 7) % n {
            let row: Vec<u32> = (0..n).map(|_| bit()).collect();
            gz.push_row(&row);
        }
        let c_z = LinearCode::from_generator(&gz);
        prop_assert!(is_subcode(&c_x.dual(), &c_z).unwrap());
        let code = css_construct(&c_x, &c_z).unwrap();
        prop_assert_ne!(singleton_check(&code), SingletonVerdict::Violated);
        if code.k() > 0 {
            let (dx, dz) = (code.d_x().value().unwrap(), code.d_z().value().unwrap());
            let report = lp_feasible(n, code.k(), dx, dz).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Feasible);
            prop_assert!(report.feasible_k_primes.contains(&(n - c_z.k())));
        }
    }
}

#[test]
fn lp_feasibility_is_monotone_in_the_distances() {
    for n in 3..=6 {
        for k in 1..n {
            for dz in 1..=n {
                let mut prev = true;
                for dx in 1..=n {
                    let now = lp_feasible(n, k, dx, dz).unwrap().verdict == Verdict::Feasible;
                    assert!(prev || !now, "[[{n}, {k}, {dx}/{dz}]] feasible but a smaller d_x is not");
                    prev = now;
                }
            }
        }
    }
}

#[test]
fn bch_codes_nest_and_match_the_dimension_formula() {
    for m in 3..=6usize {
        let n = (1 << m) - 1;
        let mut previous: Option<LinearCode> = None;
        for delta in (3..=(1usize << m.div_ceil(2)) - 1).step_by(2) {
            let code = bch(n, 2, delta).unwrap();
            if let Ok(k) = bch_dimension_formula(n, 2, delta, m) {
                assert_eq!(code.dimension(), k, "BCH({n}, {delta})");
            }
            let lin = code.to_linear_code().unwrap();
            if let Some(prev) = &previous {
                assert!(is_subcode(&lin, prev).unwrap(), "BCH({n}, {delta}) not nested");
            }
            previous = Some(lin);
        }
    }
}

#[test]
fn reed_muller_nesting_and_duality() {
    for m in 1..=5usize {
        for r in 0..=m {
            let code = reed_muller(r, m).unwrap();
            let k: u64 = (0..=r).map(|i| binom(m, i)).sum();
            assert_eq!(code.k() as u64, k);
            if r < m {
                assert!(code.dual().same_code(&reed_muller(m - 1 - r, m).unwrap()));
                assert!(is_subcode(&code, &reed_muller(r + 1, m).unwrap()).unwrap());
            }
            if code.k() <= 16 {
                let d = weight_distribution(&code, 16).unwrap().min_nonzero_weight();
                assert_eq!(d, Some(1 << (m - r)));
            }
        }
    }
}

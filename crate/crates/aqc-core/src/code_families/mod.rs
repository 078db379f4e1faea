//! Classical code families: narrow-sense BCH codes, binary Reed-Muller
//! codes, cyclic generalized Reed-Muller codes, and the subfield-subcode and
//! trace-code operators relating codes over GF(p^l) to codes over GF(p).

mod cyclic;
mod extension;
mod families;

pub use cyclic::{splitting_field, CyclicCode};
pub use extension::{subfield_subcode, trace_code, ExtensionCode};
pub use families::{bch, bch_dimension_formula, bch_dual_containing, grm_cyclic, reed_muller, DualContainment};

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::finite_field::{cyclotomic_coset, make_field};
    use crate::linear_code::{is_subcode, min_weight, LinearCode, DEFAULT_BUDGET};

    #[test]
    fn bch_defining_sets() {
        let c = bch(15, 2, 3).unwrap();
        assert_eq!(c.defining_set(), &[1, 2, 4, 8]);
        assert_eq!(c.dimension(), 11);
        let c5 = bch(15, 2, 5).unwrap();
        assert_eq!(c5.defining_set(), &[1, 2, 3, 4, 6, 8, 9, 12]);
        assert_eq!(c5.dimension(), 7);
        assert_eq!(c5.design_distance(), Some(5));
        let c2 = bch(63, 2, 2).unwrap();
        assert_eq!(c2.defining_set(), cyclotomic_coset(1, 63, 2).unwrap().members.as_slice());
        assert!(bch(15, 3, 3).is_err());
        assert!(bch(15, 2, 1).is_err());
        assert!(bch(15, 2, 16).is_err());
    }

    #[test]
    fn bch_matrices_are_consistent() {
        let c = bch(15, 2, 5).unwrap().to_linear_code().unwrap();
        assert_eq!(c.k(), 7);
        assert_eq!(min_weight(&c, DEFAULT_BUDGET, None).unwrap().value(), Some(5));
        let t = bch(13, 3, 2).unwrap();
        let lc = t.to_linear_code().unwrap();
        assert_eq!(lc.k(), t.dimension());
    }

    #[test]
    fn dimension_formula_examples() {
        assert_eq!(bch_dimension_formula(1023, 2, 31, 10).unwrap(), 873);
        assert_eq!(bch_dimension_formula(15, 2, 3, 4).unwrap(), 11);
        assert_eq!(bch_dimension_formula(255, 2, 2, 8).unwrap(), 247);
        assert!(bch_dimension_formula(15, 2, 9, 4).is_err());
        assert!(bch_dimension_formula(15, 2, 3, 3).is_err());
    }

    #[test]
    fn dual_containing_examples() {
        let a = bch_dual_containing(15, 2, 3).unwrap();
        assert_eq!(a, DualContainment { contained: true, delta_max: 3, in_proven_range: true });
        let b = bch_dual_containing(15, 2, 5).unwrap();
        assert!(!b.contained);
        assert!(!b.in_proven_range);
        let c = bch_dual_containing(1023, 2, 2).unwrap();
        assert!(c.delta_max >= 2 && c.contained);
        assert_eq!(bch_dual_containing(1023, 2, 31).unwrap().delta_max, 31);
    }

    #[test]
    fn reed_muller_examples() {
        let rep = reed_muller(0, 4).unwrap();
        assert_eq!((rep.n(), rep.k()), (16, 1));
        assert_eq!(min_weight(&rep, DEFAULT_BUDGET, None).unwrap().value(), Some(16));
        let rm13 = reed_muller(1, 3).unwrap();
        assert_eq!(rm13.k(), 4);
        assert_eq!(min_weight(&rm13, DEFAULT_BUDGET, None).unwrap().value(), Some(4));
        let full = reed_muller(3, 3).unwrap();
        assert_eq!(full.k(), 8);
        assert!(reed_muller(4, 3).is_err());
    }

    #[test]
    fn grm_examples() {
        assert!(grm_cyclic(5, 2, 4).unwrap().defining_set().is_empty());
        assert_eq!(grm_cyclic(2, 2, 4).unwrap().defining_set(), &[1, 2, 3, 4, 5, 6, 8, 9, 12]);
        assert!(grm_cyclic(6, 2, 4).is_err());
    }

    #[test]
    fn grm_dual_pairs() {
        let (m, q) = (2usize, 4u32);
        let top = m * (q as usize - 1);
        for nu in 0..top {
            let c = grm_cyclic(nu, m, q).unwrap();
            let partner = grm_cyclic(top - 1 - nu, m, q).unwrap();
            let mut expected: BTreeSet<usize> = partner.defining_set().iter().copied().collect();
            expected.insert(0);
            let dual: BTreeSet<usize> = c.dual_defining_set().into_iter().collect();
            assert_eq!(dual, expected, "nu = {nu}");
        }
    }

    #[test]
    fn generator_poly_over_gf4_has_gf4_coefficients() {
        let c = grm_cyclic(2, 2, 4).unwrap();
        assert_eq!(c.generator_poly().len(), 10);
        assert!(c.generator_poly().iter().all(|&x| x < 4));
        let ext = c.to_extension_code();
        assert_eq!(ext.k(), 6);
        let dual = ext.dual();
        assert_eq!(dual.k(), 9);
    }

    fn random_ext_code(rng: &mut ChaCha8Rng, n: usize) -> ExtensionCode {
        let f4 = make_field(2, 2).unwrap();
        let rows: Vec<Vec<u32>> = (0..2).map(|_| (0..n).map(|_| rng.gen_range(0..4)).collect()).collect();
        ExtensionCode::from_generator(&f4, n, rows).unwrap()
    }

    fn linear_codewords(c: &LinearCode) -> BTreeSet<Vec<u32>> {
        let g = c.generator().to_rows();
        (0u32..1 << c.k())
            .map(|mask| {
                let mut v = vec![0u32; c.n()];
                for (i, row) in g.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (x, &y) in v.iter_mut().zip(row) {
                            *x ^= y;
                        }
                    }
                }
                v
            })
            .collect()
    }

    #[test]
    fn subfield_subcode_matches_brute_force() {
        let f2 = make_field(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..20 {
            let n = 4 + trial % 5;
            let c = random_ext_code(&mut rng, n);
            let brute: BTreeSet<Vec<u32>> =
                c.codewords(1 << 16).unwrap().into_iter().filter(|v| v.iter().all(|&x| x < 2)).collect();
            let sub = subfield_subcode(&c, &f2).unwrap();
            assert_eq!(linear_codewords(&sub), brute);
            let tr = trace_code(&c, &f2).unwrap();
            assert!(is_subcode(&sub, &tr).unwrap());
        }
    }

    #[test]
    fn subfield_and_trace_edge_cases() {
        let f4 = make_field(2, 2).unwrap();
        let f2 = make_field(2, 1).unwrap();
        let full = ExtensionCode::from_generator(
            &f4,
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        assert_eq!(subfield_subcode(&full, &f2).unwrap().k(), 3);
        let zero = ExtensionCode::from_generator(&f4, 3, Vec::new()).unwrap();
        assert_eq!(trace_code(&zero, &f2).unwrap().k(), 0);
        assert!(subfield_subcode(&full, &f4).is_err());
        assert!(trace_code(&full, &make_field(3, 1).unwrap()).is_err());
    }

    #[test]
    fn cyclic_subfield_route_agrees_with_matrices() {
        let f2 = make_field(2, 1).unwrap();
        for nu in 0..6 {
            let c = grm_cyclic(nu, 2, 4).unwrap();
            let via_sets = c.subfield_subcode().unwrap().to_linear_code().unwrap();
            let via_matrix = subfield_subcode(&c.to_extension_code(), &f2).unwrap();
            assert!(via_sets.same_code(&via_matrix), "nu = {nu}");
        }
    }
}

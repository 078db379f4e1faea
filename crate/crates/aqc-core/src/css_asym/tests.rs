use super::*;
use crate::code_families::{bch, reed_muller};
use crate::eg_geometry::eg_cyclic_code;
use crate::linear_code::LinearCode;

fn assert_orthogonal(code: &AsymmetricCSSCode) {
    assert!(code.h_x().mul_transpose(code.h_z()).unwrap().is_zero());
}

fn params(code: &AsymmetricCSSCode) -> (usize, usize, Option<usize>, Option<usize>) {
    (code.n(), code.k(), code.d_x().value(), code.d_z().value())
}

#[test]
fn trivial_full_space() {
    let full = LinearCode::full(2, 6);
    let code = css_construct(&full, &full).unwrap();
    assert_eq!(params(&code), (6, 6, Some(1), Some(1)));
    assert_eq!(singleton_check(&code), SingletonVerdict::Satisfied);
}

#[test]
fn worked_example_generic_and_family() {
    let c_x = bch(15, 2, 3).unwrap().to_linear_code().unwrap();
    let c_z = eg_cyclic_code(2, 1, 2, 2).unwrap().to_linear_code().unwrap();
    let generic = css_construct(&c_x, &c_z).unwrap();
    assert_eq!(params(&generic), (15, 3, Some(3), Some(5)));
    assert_eq!(generic.purity(), Purity::Pure);
    assert_orthogonal(&generic);

    let family = bch_ldpc_family(2, 1, 2, 2, 3).unwrap();
    assert_eq!(params(&family), (15, 3, Some(3), Some(5)));
    assert_eq!(family.purity(), Purity::Pure);
    assert_eq!(family.h_z().rows(), 15);
    assert!(family.h_z().row_weights().iter().all(|&w| w == 4));
    assert_orthogonal(&family);
    assert_eq!(singleton_check(&family), SingletonVerdict::Satisfied);
    assert_eq!(family.parameters().to_string(), "[[15, 3, 3/5]]");
}

#[test]
fn dual_containing_bch_is_symmetric() {
    let c = bch(15, 2, 3).unwrap().to_linear_code().unwrap();
    let code = css_construct(&c, &c).unwrap();
    assert_eq!(params(&code), (15, 7, Some(3), Some(3)));
    assert_eq!(code.parameters().to_string(), "[[15, 7, 3]]");
}

#[test]
fn containment_is_required() {
    let c = eg_cyclic_code(2, 1, 2, 2).unwrap().to_linear_code().unwrap();
    assert!(matches!(css_construct(&c, &c), Err(Error::NotSubcode(_))));
    let other = LinearCode::full(3, 15);
    assert!(matches!(css_construct(&c, &other), Err(Error::Dimension(_))));
}

#[test]
fn singleton_arithmetic() {
    assert!(singleton_holds(15, 3, 3, 5));
    assert!(singleton_holds(9, 9, 1, 1));
    assert!(!singleton_holds(15, 8, 3, 7));
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn rm_family_closed_forms() {
    let code = rm_family(0, 1, 3).unwrap();
    assert_eq!(params(&code), (8, 3, Some(4), Some(2)));
    assert!(rm_family(1, 1, 3).is_err());
    assert!(rm_family(0, 3, 3).is_err());

    let sym = rm_rate_gain(4, 0, 10).unwrap();
    assert_eq!(params(&sym), (1024, 252, Some(32), Some(32)));
    assert_eq!(sym.parameters().to_string(), "[[1024, 252, 32]]");
    assert_eq!(params(&rm_rate_gain(4, 1, 10).unwrap()), (1024, 462, Some(16), Some(32)));
    assert_eq!(params(&rm_rate_gain(2, 1, 10).unwrap()), (1024, 957, Some(4), Some(8)));
    assert_eq!(params(&rm_rate_gain(3, 3, 10).unwrap()), (1024, 847, Some(2), Some(16)));
    assert_eq!(params(&rm_rate_gain(3, 1, 10).unwrap()), (1024, 792, Some(8), Some(16)));
    assert!(rm_rate_gain(5, 0, 10).is_err());
    assert!(rm_rate_gain(2, 3, 10).is_err());
    // self-dual RM(1, 3)
    assert_eq!(rm_rate_gain(1, 0, 3).unwrap().k(), 0);
}

#[test]
fn rm_family_matches_matrix_construction() {
    for m in 2..=5 {
        for r2 in 1..m {
            for r1 in 0..r2 {
                let fam = rm_family(r1, r2, m).unwrap();
                let expect_k: usize = (r1 + 1..=r2).map(|j| binom(m, j)).sum();
                assert_eq!(fam.k(), expect_k);
                let generic = css_construct(&reed_muller(r2, m).unwrap(), &reed_muller(m - 1 - r1, m).unwrap()).unwrap();
                assert_eq!(params(&generic), params(&fam), "r1 = {r1}, r2 = {r2}, m = {m}");
                assert_eq!(generic.purity(), Purity::Pure);
                assert_orthogonal(&fam);
                assert_eq!(singleton_check(&fam), SingletonVerdict::Satisfied);
            }
        }
    }
}

#[test]
fn bch_family_dimensions() {
    for (d1, d2, k) in [(3usize, 31usize, 140usize), (29, 31, 10), (5, 7, 10)] {
        let code = bch_family(d1, d2, 10).unwrap();
        assert_eq!((code.n(), code.k()), (1023, k));
        assert!(code.d_x().lower >= d1);
        assert_eq!(code.d_z().lower, 32);
        assert_orthogonal(&code);
    }
    let small = bch_family(3, 7, 6).unwrap();
    assert_eq!(small.k(), 12);
    assert!(bch_family(4, 7, 6).is_err());
    assert!(bch_family(3, 9, 6).is_err());
    assert!(bch_family(5, 5, 10).is_err());
}

#[test]
fn bch_ldpc_rows() {
    let code = bch_ldpc_family(2, 1, 4, 2, 5).unwrap();
    assert_eq!((code.n(), code.k()), (255, 159));
    assert!(code.d_x().lower >= 5);
    assert_eq!(code.d_z().lower, 17);
    assert_eq!(code.d_z().method, crate::linear_code::DistanceMethod::MajorityLogic);
    assert_orthogonal(&code);
    assert_eq!(bch_ldpc_delta0(2, 1, 4, 2).unwrap(), 15);
    assert_eq!(bch_ldpc_delta0(2, 1, 2, 2).unwrap(), 3);
    assert!(bch_ldpc_family(2, 1, 2, 2, 5).is_err());
    assert!(bch_ldpc_family(2, 1, 4, 2, 4).is_err());
}

#[test]
fn eg_pair_family() {
    let degenerate = asym_qldpc_family(3, 2, 2, 1, 2).unwrap();
    assert_eq!((degenerate.n(), degenerate.k()), (8, 0));
    assert_eq!(degenerate.c_x().k() + degenerate.c_z().k(), 8);
    assert!(!degenerate.notes().is_empty());

    let code = asym_qldpc_family(4, 3, 3, 1, 2).unwrap();
    assert_eq!(params(&code), (16, 6, Some(4), Some(4)));
    assert_eq!(code.c_x().k() + code.c_z().k() - 16, code.k());
    assert_orthogonal(&code);

    let mixed = asym_qldpc_family(4, 3, 2, 1, 2).unwrap();
    assert_eq!(mixed.k(), 11 + 5 - 16);

    assert!(matches!(asym_qldpc_family(2, 1, 1, 2, 2), Err(Error::NotSubcode(_))));
    assert!(asym_qldpc_family(3, 1, 2, 1, 2).is_err());
    assert!(asym_qldpc_family(3, 2, 1, 1, 2).is_err());
}

use super::*;
use crate::code_families::bch;
use crate::linear_code::{weight_distribution, LinearCode};

fn distribution(code: &LinearCode) -> Vec<BigRational> {
    weight_distribution(code, 24).unwrap().counts.iter().map(|&c| int(c)).collect()
}

#[test]
fn constraint_shape() {
    let sys = build_constraints(15, 1, 7, 3, 7).unwrap();
    assert_eq!(sys.num_vars(), 32);
    assert_eq!(sys.rows.len(), 4 + 2 * 15);
    let eqs = sys.rows.iter().filter(|r| r.relation == Relation::Eq).count();
    assert_eq!(eqs, 4 + 2 + 6);
    let trivial = build_constraints(6, 2, 2, 1, 1).unwrap();
    assert_eq!(trivial.rows.iter().filter(|r| r.relation == Relation::Eq).count(), 4);
    assert_eq!(build_constraints(20, 1, 7, 3, 7).unwrap().rows.len(), 4 + 40);
}

#[test]
fn bch_pair_distributions_satisfy_constraints() {
    // C_x = BCH(15, 3) [15, 11], C_z = BCH(15, 7) [15, 5]: [[15, 1, 3/7]], k' = 10
    let c_x = bch(15, 2, 3).unwrap().to_linear_code().unwrap();
    let c_z = bch(15, 2, 7).unwrap().to_linear_code().unwrap();
    let sys = build_constraints(15, 1, 10, 3, 7).unwrap();
    let x: Vec<BigRational> = distribution(&c_z.dual()).into_iter().chain(distribution(&c_x.dual())).collect();
    assert!(sys.check(&x));
    assert!(!build_constraints(15, 1, 10, 3, 9).unwrap().check(&x));
    assert!(!build_constraints(15, 1, 7, 3, 7).unwrap().check(&x));
}

#[test]
fn known_feasible_targets() {
    for (n, k, dx, dz) in [(15, 1, 3, 7), (12, 1, 3, 5)] {
        let report = lp_feasible(n, k, dx, dz).unwrap();
        assert_eq!(report.verdict, Verdict::Feasible);
        assert!(report.summary.contains("may exist"));
        for w in &report.witnesses {
            assert!(check_witness(&report, w).unwrap());
        }
    }
    assert!(lp_feasible(15, 1, 3, 7).unwrap().feasible_k_primes.contains(&10));
}

#[test]
fn distance_one_is_trivially_feasible() {
    for n in 2..9 {
        for k in 1..n {
            let report = lp_feasible(n, k, 1, 1).unwrap();
            assert_eq!(report.verdict, Verdict::Feasible, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn nonexistent_symmetric_code_report_is_consistent() {
    let report = lp_feasible(15, 1, 7, 7).unwrap();
    assert_eq!(report.verdict == Verdict::Infeasible, report.feasible_k_primes.is_empty());
    assert_eq!(report.witnesses.len(), report.feasible_k_primes.len());
}

#[test]
fn rejects_bad_parameters() {
    assert!(lp_feasible(10, 0, 1, 1).is_err());
    assert!(lp_feasible(10, 10, 1, 1).is_err());
    assert!(lp_feasible(10, 1, 0, 1).is_err());
    assert!(lp_feasible(10, 1, 1, 11).is_err());
    assert!(lp_feasible(40, 1, 1, 1).is_err());
    assert!(build_constraints(10, 2, 9, 1, 1).is_err());
}

#[test]
fn candidate_split_endpoints() {
    assert_eq!(candidate_splits(6, 2, 3, 3), vec![1, 2, 3]);
    assert_eq!(candidate_splits(6, 2, 1, 3), vec![1, 2, 3, 4]);
    assert_eq!(candidate_splits(6, 2, 3, 1), vec![0, 1, 2, 3]);
}

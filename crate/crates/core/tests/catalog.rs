use summa_core::identity_catalog::{verify_all, IdentityStatus};

#[test]
fn every_claimed_entry_passes_and_disputed_are_finite() {
    let (results, summary) = verify_all(None, true);
    for r in &results {
        println!(
            "{:18} {:?} lhs={:.15e} rhs={:.15e} abs={:.3e} tol={:.0e} passed={:?} {}ms {}",
            r.id,
            r.status,
            r.lhs_value,
            r.rhs_value,
            r.abs_diff,
            r.tol,
            r.passed,
            r.elapsed_ms,
            r.notes
        );
    }
    for r in &results {
        match r.status {
            IdentityStatus::Claimed => {
                assert_eq!(r.passed, Some(true), "{} failed: {}", r.id, r.notes)
            }
            IdentityStatus::Disputed => {
                assert_eq!(r.passed, None, "{}", r.id);
                assert!(r.abs_diff.is_finite(), "{}: {}", r.id, r.notes);
                assert!(!r.notes.is_empty(), "{}", r.id);
            }
        }
    }
    assert_eq!(summary.failed, 0);
    assert_eq!(summary.disputed, 2);
}

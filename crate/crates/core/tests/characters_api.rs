use hilie_core::characters::{char_table, CacheStatus};
use hilie_core::higher_lie::{higher_lie, regularity_residual};
use hilie_core::{parse_partition, LieSpec, Partition, SymFunc};

#[test]
fn cache_survives_a_second_process_view() {
    let dir = tempfile::tempdir().unwrap();
    let (first, status) = char_table(7, Some(dir.path())).unwrap();
    assert_eq!(status, CacheStatus::Written);
    let (second, status) = char_table(7, Some(dir.path())).unwrap();
    assert_eq!(status, CacheStatus::Loaded);
    assert_eq!(first.values(), second.values());
}

#[test]
fn twist_is_periodic() {
    let lambda = parse_partition("3,2").unwrap();
    let base = higher_lie(&LieSpec::new(lambda.clone(), 1)).unwrap();
    let shifted = higher_lie(&LieSpec::new(lambda, 1 + 6)).unwrap();
    assert_eq!(base, shifted);
}

#[test]
fn symfunc_json_round_trip() {
    let l = higher_lie(&LieSpec::lie(Partition::new(vec![4, 1]))).unwrap();
    let text = serde_json::to_string(&l).unwrap();
    let back: SymFunc = serde_json::from_str(&text).unwrap();
    assert_eq!(l, back);
}

#[test]
fn residual_rejects_mismatched_sizes() {
    let spec = LieSpec::lie(Partition::new(vec![3]));
    assert!(regularity_residual(&spec, &Partition::new(vec![2])).is_err());
    let r = regularity_residual(&spec, &Partition::new(vec![2, 1])).unwrap();
    assert_eq!(r.residual.to_string(), "1/2");
}

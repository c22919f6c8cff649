use varieties::*;

#[test]
fn every_action_preserves_its_variety() {
    for a in Action::ALL {
        let rep = group_action_check(a).unwrap();
        assert!(!rep.0.is_empty());
        assert!(rep.all_pass(), "{}: {:?}", a.as_str(), rep.failures());
    }
}

#[test]
fn t8_action_records_untwisted_residual() {
    let rep = group_action_check(Action::SL2T8).unwrap();
    let eq = rep.0.iter().find(|r| r.check.ends_with(".equations")).unwrap();
    let n = eq.details.as_ref().unwrap()["untwisted_hat_residual_terms"].as_u64().unwrap();
    assert!(n > 0);
}

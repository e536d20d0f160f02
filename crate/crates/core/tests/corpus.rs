use oortscan::construct::{build, corpus, Profile};
use oortscan::oort::classify;

#[test]
fn smoke_corpus_matches_labels() {
    let mut mismatches = Vec::new();
    for e in corpus(Profile::Smoke) {
        let g = build(&e.spec).unwrap();
        let v = classify(&g, e.p, &e.id()).unwrap();
        if !v.matches(&e.expect) {
            mismatches.push(format!(
                "{}: local {:?} (want {:?}), global {} (want {})",
                e.id(),
                v.local_pass(),
                e.expect.local,
                v.oort_necessary.pass,
                e.expect.global
            ));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

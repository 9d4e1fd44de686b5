use spherimult::chevalley::ChevalleyAlgebra;
use spherimult::satake::{check_record, Catalog};

#[test]
fn every_catalog_pair_is_self_consistent() {
    let cat = Catalog::builtin().unwrap();
    let mut bad = Vec::new();
    let mut count = 0;
    for rec in cat.all_pairs(8).unwrap() {
        let alg = ChevalleyAlgebra::new(&rec.g).unwrap();
        let c = check_record(&alg, &rec, 7).unwrap();
        count += 1;
        if !c.consistent() {
            bad.push(format!("{c:?}"));
        }
    }
    assert!(count > 100, "{count}");
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}


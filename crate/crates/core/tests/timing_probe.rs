use compositum_core::{Caps, PermGroup, ProductGroup};
use std::time::Instant;

#[test]
fn probe_d4xd4() {
    let caps = Caps::default();
    let d4 = PermGroup::dihedral(4);
    let prod = ProductGroup::new(d4.clone(), d4, &caps).unwrap();
    let t0 = Instant::now();
    let via_goursat = prod.enumerate_subgroups(&caps).unwrap();
    let t1 = Instant::now();
    let brute = prod.group().all_subgroups(&caps).unwrap();
    let t2 = Instant::now();
    eprintln!(
        "D4xD4: goursat {} subgroups in {:?}; brute {} in {:?}",
        via_goursat.len(),
        t1 - t0,
        brute.len(),
        t2 - t1
    );
    assert_eq!(via_goursat.len(), brute.len());
    assert_eq!(via_goursat, brute);
}

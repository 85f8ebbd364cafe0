use h4e8::exactfield::TowerScalar;
use h4e8::rootsys::{edge_graph, labelled_orbit, min_distance2, GroupSpec};

fn orbit(alias: &str) -> h4e8::rootsys::OrbitPolytope {
    let e8 = GroupSpec::e8();
    let l = e8.parse_label(alias).unwrap();
    labelled_orbit(&e8, &l).unwrap()
}

#[test]
fn orbit_241() {
    let p = orbit("241");
    assert_eq!(p.len(), 2160);
    assert_eq!(p.shells.len(), 1);
    assert_eq!(p.shells[0].norm2, TowerScalar::from_int(4));
    assert_eq!(min_distance2(&p.vertices), Some(TowerScalar::from_int(2)));
    assert_eq!(edge_graph(&p.vertices, &TowerScalar::from_int(2)).len(), 69120);
}

#[test]
fn orbit_142() {
    let p = orbit("142");
    assert_eq!(p.len(), 17280);
    assert_eq!(p.shells[0].norm2, TowerScalar::from_int(8));
    assert_eq!(min_distance2(&p.vertices), Some(TowerScalar::from_int(2)));
    assert_eq!(edge_graph(&p.vertices, &TowerScalar::from_int(2)).len(), 483840);
}
